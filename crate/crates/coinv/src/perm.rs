//! Finite permutation groups from generators, and their diagonal action on
//! the variable grid: σ sends x_i^(j) to x_{σ(i)}^(j), fixing the copy index.
//!
//! That covariant convention is equivalent to the contravariant g·f(v) =
//! f(g⁻¹v) one for everything computed here (invariant rings, Hilbert
//! ideals, orbits), since replacing σ by σ⁻¹ permutes each group while
//! leaving the set of group elements unchanged.

use crate::field::Field;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

/// Default closure cap: generous desk scale (|A_8|).
pub const DEFAULT_GROUP_CAP: usize = 20_160;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("point {0} out of range for degree {1}")]
    PointOutOfRange(usize, usize),
    #[error("images do not form a bijection of 1..={0}")]
    NotBijective(usize),
    #[error("generator has degree {0}, expected {1}")]
    DegreeMismatch(usize, usize),
    #[error("group closure exceeded the cap of {0} elements")]
    CapExceeded(usize),
    #[error("cannot parse group spec `{spec}`: {reason}")]
    BadSpec { spec: String, reason: String },
}

/// A permutation of {1, …, n}, stored 0-based internally.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// From the image list σ(1), …, σ(n) in 1-based form.
    pub fn from_images(images_one_based: &[usize]) -> Result<Permutation, GroupError> {
        let n = images_one_based.len();
        let mut seen = vec![false; n];
        let mut images = Vec::with_capacity(n);
        for &img in images_one_based {
            if img < 1 || img > n {
                return Err(GroupError::PointOutOfRange(img, n));
            }
            if seen[img - 1] {
                return Err(GroupError::NotBijective(n));
            }
            seen[img - 1] = true;
            images.push(img - 1);
        }
        Ok(Permutation { images })
    }

    /// From disjoint-or-not cycles in 1-based notation, applied left to right.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Permutation, GroupError> {
        let mut perm = Permutation::identity(n);
        for cycle in cycles {
            let mut this = Permutation::identity(n);
            for w in cycle.windows(2) {
                let (a, b) = (w[0], w[1]);
                if a < 1 || a > n {
                    return Err(GroupError::PointOutOfRange(a, n));
                }
                if b < 1 || b > n {
                    return Err(GroupError::PointOutOfRange(b, n));
                }
                this.images[a - 1] = b - 1;
            }
            if let (Some(&last), Some(&first)) = (cycle.last(), cycle.first()) {
                if last < 1 || last > n {
                    return Err(GroupError::PointOutOfRange(last, n));
                }
                this.images[last - 1] = first - 1;
            }
            // Repeated points inside one cycle would break bijectivity.
            let mut seen = vec![false; n];
            for &img in &this.images {
                if seen[img] {
                    return Err(GroupError::NotBijective(n));
                }
                seen[img] = true;
            }
            perm = this.compose(&perm);
        }
        Ok(perm)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// σ(i), 1-based.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    /// (self ∘ other)(i) = self(other(i)).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: other.images.iter().map(|&k| self.images[k]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img] = i;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i == img)
    }

    /// Substitutes x_i^(j) -> x_{σ(i)}^(j); the monomial's n must equal the
    /// permutation degree.
    pub fn act_monomial(&self, mono: &Monomial) -> Monomial {
        let dims = mono.dims();
        assert_eq!(dims.n, self.degree(), "permutation degree must match dims.n");
        let m = dims.m;
        let mut exps = vec![0u32; dims.num_vars()];
        for (i, &img) in self.images.iter().enumerate() {
            for j in 0..m {
                exps[img * m + j] = mono.exponents()[i * m + j];
            }
        }
        Monomial::from_exponents(dims, exps)
    }

    /// Acts coefficient-wise on every term.
    pub fn act<F: Field>(&self, f: &Polynomial<F>) -> Polynomial<F> {
        f.map_monomials(|mono| self.act_monomial(mono))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "()");
        }
        let n = self.degree();
        let mut done = vec![false; n];
        for start in 0..n {
            if done[start] || self.images[start] == start {
                done[start] = true;
                continue;
            }
            write!(f, "(")?;
            let mut point = start;
            let mut first = true;
            loop {
                if !first {
                    write!(f, " ")?;
                }
                first = false;
                write!(f, "{}", point + 1)?;
                done[point] = true;
                point = self.images[point];
                if point == start {
                    break;
                }
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A fully enumerated subgroup of S_n.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PermutationGroup {
    n: usize,
    elements: Vec<Permutation>,
    generators: Vec<Permutation>,
}

impl PermutationGroup {
    /// Breadth-first closure of the generators under composition. The
    /// identity is always included; errors out when the closure would
    /// exceed `cap`.
    pub fn close_group(
        generators: Vec<Permutation>,
        n: usize,
        cap: usize,
    ) -> Result<PermutationGroup, GroupError> {
        for g in &generators {
            if g.degree() != n {
                return Err(GroupError::DegreeMismatch(g.degree(), n));
            }
        }
        let mut elements: BTreeSet<Permutation> = BTreeSet::new();
        elements.insert(Permutation::identity(n));
        let mut frontier: std::collections::VecDeque<Permutation> =
            [Permutation::identity(n)].into();
        while let Some(current) = frontier.pop_front() {
            for g in &generators {
                let next = g.compose(&current);
                if elements.insert(next.clone()) {
                    if elements.len() > cap {
                        return Err(GroupError::CapExceeded(cap));
                    }
                    frontier.push_back(next);
                }
            }
        }
        Ok(PermutationGroup {
            n,
            elements: elements.into_iter().collect(),
            generators,
        })
    }

    pub fn trivial(n: usize) -> PermutationGroup {
        PermutationGroup::close_group(Vec::new(), n, 1).expect("trivial group")
    }

    /// The full symmetric group S_n.
    pub fn symmetric(n: usize, cap: usize) -> Result<PermutationGroup, GroupError> {
        if n == 1 {
            return Ok(PermutationGroup::trivial(1));
        }
        let swap = Permutation::from_cycles(n, &[vec![1, 2]])?;
        let cycle = Permutation::from_cycles(n, &[(1..=n).collect()])?;
        PermutationGroup::close_group(vec![swap, cycle], n, cap)
    }

    /// The alternating group A_n, generated by the 3-cycles (1 2 k).
    pub fn alternating(n: usize, cap: usize) -> Result<PermutationGroup, GroupError> {
        if n <= 2 {
            return Ok(PermutationGroup::trivial(n.max(1)));
        }
        let gens = (3..=n)
            .map(|k| Permutation::from_cycles(n, &[vec![1, 2, k]]))
            .collect::<Result<Vec<_>, _>>()?;
        PermutationGroup::close_group(gens, n, cap)
    }

    /// The cyclic group generated by the n-cycle (1 2 … n).
    pub fn cyclic(n: usize, cap: usize) -> Result<PermutationGroup, GroupError> {
        if n == 1 {
            return Ok(PermutationGroup::trivial(1));
        }
        let cycle = Permutation::from_cycles(n, &[(1..=n).collect()])?;
        PermutationGroup::close_group(vec![cycle], n, cap)
    }

    /// Parses the group grammar: a builtin name (`S3`, `A4`, `C5`) or
    /// `n=<n>; gens=(1 2)(3 4),(1 3)` with 1-based cycle notation.
    pub fn parse_spec(spec: &str, cap: usize) -> Result<PermutationGroup, GroupError> {
        let bad = |reason: &str| GroupError::BadSpec {
            spec: spec.to_string(),
            reason: reason.to_string(),
        };
        let trimmed = spec.trim();
        if let Some(rest) = trimmed
            .strip_prefix('S')
            .or_else(|| trimmed.strip_prefix('A'))
            .or_else(|| trimmed.strip_prefix('C'))
        {
            if let Ok(n) = rest.parse::<usize>() {
                if n < 1 {
                    return Err(bad("degree must be at least 1"));
                }
                return match trimmed.as_bytes()[0] {
                    b'S' => PermutationGroup::symmetric(n, cap),
                    b'A' => PermutationGroup::alternating(n, cap),
                    _ => PermutationGroup::cyclic(n, cap),
                };
            }
        }
        let mut n: Option<usize> = None;
        let mut gens_src: Option<&str> = None;
        for part in trimmed.split(';') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            if let Some(v) = part.strip_prefix("n=") {
                n = Some(
                    v.trim()
                        .parse()
                        .map_err(|_| bad("n= expects a positive integer"))?,
                );
            } else if let Some(v) = part.strip_prefix("gens=") {
                gens_src = Some(v.trim());
            } else {
                return Err(bad("expected `n=<n>` and `gens=<cycles>` parts"));
            }
        }
        let n = n.ok_or_else(|| bad("missing `n=`"))?;
        if n < 1 {
            return Err(bad("degree must be at least 1"));
        }
        let mut generators = Vec::new();
        if let Some(src) = gens_src {
            for word in src.split(',') {
                let word = word.trim();
                if word.is_empty() {
                    continue;
                }
                let cycles = parse_cycles(word).map_err(|reason| bad(&reason))?;
                generators.push(Permutation::from_cycles(n, &cycles)?);
            }
        }
        PermutationGroup::close_group(generators, n, cap)
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn contains(&self, sigma: &Permutation) -> bool {
        self.elements.binary_search(sigma).is_ok()
    }

    /// {σ·M : σ ∈ G}, deduplicated and sorted.
    pub fn orbit(&self, mono: &Monomial) -> Vec<Monomial> {
        let set: BTreeSet<Monomial> = self
            .elements
            .iter()
            .map(|sigma| sigma.act_monomial(mono))
            .collect();
        set.into_iter().collect()
    }

    /// The Order-A minimal element of the orbit, used as its canonical
    /// representative.
    pub fn orbit_representative(&self, mono: &Monomial) -> Monomial {
        self.elements
            .iter()
            .map(|sigma| sigma.act_monomial(mono))
            .min()
            .expect("groups are never empty")
    }
}

/// Splits `(1 2)(3 4)` into [[1, 2], [3, 4]]; entries may be separated by
/// spaces.
fn parse_cycles(word: &str) -> Result<Vec<Vec<usize>>, String> {
    let mut cycles = Vec::new();
    let mut rest = word.trim();
    while !rest.is_empty() {
        let Some(inner) = rest.strip_prefix('(') else {
            return Err(format!("expected `(` in cycle word `{word}`"));
        };
        let Some(end) = inner.find(')') else {
            return Err(format!("unbalanced parentheses in `{word}`"));
        };
        let body = &inner[..end];
        let points = body
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| format!("bad point `{tok}` in `{word}`"))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if !points.is_empty() {
            cycles.push(points);
        }
        rest = inner[end + 1..].trim_start();
    }
    Ok(cycles)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::monomial::{Dims, VarId};

    fn x(dims: Dims, i: usize, j: usize) -> Polynomial<Rationals> {
        Polynomial::var(Rationals, dims, VarId::new(i, j))
    }

    #[test]
    fn empty_generator_set_gives_trivial_group() {
        let g = PermutationGroup::close_group(Vec::new(), 3, 10).unwrap();
        assert_eq!(g.order(), 1);
        assert!(g.elements()[0].is_identity());
    }

    #[test]
    fn transposition_generates_order_two() {
        let swap = Permutation::from_cycles(2, &[vec![1, 2]]).unwrap();
        let g = PermutationGroup::close_group(vec![swap], 2, 10).unwrap();
        assert_eq!(g.order(), 2);
    }

    #[test]
    fn standard_generators_close_to_s3() {
        let g = PermutationGroup::parse_spec("n=3; gens=(1 2),(1 2 3)", 100).unwrap();
        assert_eq!(g.order(), 6);
        // Brute-force oracle: all 3! permutations of {1,2,3}.
        let mut all = Vec::new();
        for a in 1..=3 {
            for b in 1..=3 {
                for c in 1..=3 {
                    if let Ok(p) = Permutation::from_images(&[a, b, c]) {
                        all.push(p);
                    }
                }
            }
        }
        assert_eq!(all.len(), 6);
        for p in all {
            assert!(g.contains(&p));
        }
    }

    #[test]
    fn closure_cap_is_enforced() {
        let err = PermutationGroup::symmetric(4, 10).unwrap_err();
        assert_eq!(err, GroupError::CapExceeded(10));
    }

    #[test]
    fn builtin_orders() {
        assert_eq!(PermutationGroup::symmetric(4, 100).unwrap().order(), 24);
        assert_eq!(PermutationGroup::alternating(4, 100).unwrap().order(), 12);
        assert_eq!(PermutationGroup::cyclic(5, 100).unwrap().order(), 5);
        assert_eq!(PermutationGroup::parse_spec("A3", 100).unwrap().order(), 3);
    }

    #[test]
    fn action_substitutes_basis_index_only() {
        let dims = Dims::new(2, 1);
        let swap = Permutation::from_cycles(2, &[vec![1, 2]]).unwrap();
        assert_eq!(swap.act(&x(dims, 1, 1)), x(dims, 2, 1));

        let dims2 = Dims::new(3, 2);
        let rot = Permutation::from_cycles(3, &[vec![1, 2, 3]]).unwrap();
        let f = x(dims2, 1, 1).mul(&x(dims2, 2, 2));
        let expect = x(dims2, 2, 1).mul(&x(dims2, 3, 2));
        assert_eq!(rot.act(&f), expect);
    }

    #[test]
    fn identity_acts_trivially() {
        let dims = Dims::new(3, 2);
        let e = Permutation::identity(3);
        let f = x(dims, 1, 1).mul(&x(dims, 3, 2)).add(&x(dims, 2, 1));
        assert_eq!(e.act(&f), f);
    }

    #[test]
    fn orbits_of_monomials() {
        let s2 = PermutationGroup::symmetric(2, 10).unwrap();
        let dims = Dims::new(2, 1);
        let x1 = Monomial::var(dims, VarId::new(1, 1));
        let x2 = Monomial::var(dims, VarId::new(2, 1));
        assert_eq!(s2.orbit(&x1), vec![x2.clone(), x1.clone()]);
        let x1x2 = x1.mul(&x2);
        assert_eq!(s2.orbit(&x1x2), vec![x1x2.clone()]);

        // orbit(x1^2 x2, A_3) has the three rotations.
        let a3 = PermutationGroup::alternating(3, 10).unwrap();
        let dims3 = Dims::new(3, 1);
        let target = Monomial::from_single_copy(vec![2, 1, 0]);
        let orbit = a3.orbit(&target);
        assert_eq!(orbit.len(), 3);
        assert!(orbit.contains(&Monomial::from_single_copy(vec![2, 1, 0])));
        assert!(orbit.contains(&Monomial::from_single_copy(vec![0, 2, 1])));
        assert!(orbit.contains(&Monomial::from_single_copy(vec![1, 0, 2])));
    }

    #[test]
    fn orbit_size_divides_group_order() {
        let s3 = PermutationGroup::symmetric(3, 100).unwrap();
        let dims = Dims::new(3, 1);
        for mono in Monomial::all_up_to_degree(dims, 3) {
            assert_eq!(s3.order() % s3.orbit(&mono).len(), 0);
        }
    }

    #[test]
    fn cycle_notation_round_trip() {
        let p = Permutation::from_cycles(4, &[vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(p.to_string(), "(1 2)(3 4)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
        let q = Permutation::from_cycles(3, &[vec![1, 2, 3]]).unwrap();
        assert_eq!(q.apply(1), 2);
        assert_eq!(q.apply(3), 1);
        assert_eq!(q.inverse().compose(&q), Permutation::identity(3));
    }

    #[test]
    fn bad_specs_are_rejected() {
        assert!(Permutation::from_images(&[1, 1]).is_err());
        assert!(Permutation::from_images(&[1, 3]).is_err());
        assert!(PermutationGroup::parse_spec("Q3", 100).is_err());
        assert!(PermutationGroup::parse_spec("n=2; gens=(1 3)", 100).is_err());
    }
}
