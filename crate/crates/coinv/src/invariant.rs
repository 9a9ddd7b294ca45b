//! Invariant and coinvariant bookkeeping: transfer and Reynolds operators,
//! orbit sums, generating sets for Hilbert ideals, and exact computation of
//! the maximal degree β in a minimal generating set of the invariant ring.
//!
//! Two generating strategies are provided for the Hilbert ideal I(G, V^m):
//!
//! * `GoebelPolarized` — the single-copy generating set (orbit sums of the
//!   special monomials plus the full product x_1⋯x_n) polarized into the
//!   m-copy ring. For the full symmetric groups this generates I(G, V^m)
//!   in characteristic zero, but for proper subgroups it can land in a
//!   strictly smaller ideal: orbits may split into pieces whose sum is a
//!   polarization while the pieces are not (see
//!   `polarized_generators_can_miss_invariants`). Cross-check against the
//!   other strategy before trusting it.
//! * `NoetherReynolds` — orbit sums of every monomial of degree up to |G|,
//!   which generate whenever |G| is invertible in the field.

use crate::field::{Field, Rationals};
use crate::groebner::{self, GroebnerError};
use crate::linalg::rank_rational;
use crate::monomial::{Dims, Monomial, MonomialOrder};
use crate::perm::PermutationGroup;
use crate::polarize::polarize_full;
use crate::poly::Polynomial;
use num_rational::BigRational;
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvariantError {
    #[error("|G| = {order} vanishes in characteristic {p}")]
    NonInvertibleGroupOrder { order: usize, p: u64 },
    #[error("monomial budget of {cap} exceeded (needed {needed})")]
    TermCapExceeded { cap: usize, needed: usize },
    #[error("degree cap {cap} is below the required scan ceiling {needed}")]
    CapTooSmall { cap: u32, needed: u32 },
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
}

/// Σ_{σ∈G} σ·f. Lands in the invariant ring over any coefficient field.
pub fn transfer<F: Field>(f: &Polynomial<F>, group: &PermutationGroup) -> Polynomial<F> {
    let mut acc = Polynomial::zero(f.field().clone(), f.dims());
    for sigma in group.elements() {
        acc = acc.add(&sigma.act(f));
    }
    acc
}

/// (1/|G|)·transfer(f): the projection onto the invariant ring. Errors when
/// |G| is not invertible in the coefficient field.
pub fn reynolds<F: Field>(
    f: &Polynomial<F>,
    group: &PermutationGroup,
) -> Result<Polynomial<F>, InvariantError> {
    let field = f.field().clone();
    let order = field.from_i64(group.order() as i64);
    let inverse = field
        .inv(&order)
        .ok_or(InvariantError::NonInvertibleGroupOrder {
            order: group.order(),
            p: field.characteristic(),
        })?;
    Ok(transfer(f, group).scale(&inverse))
}

/// Σ of the orbit of M, every coefficient 1.
pub fn orbit_sum<F: Field>(
    mono: &Monomial,
    group: &PermutationGroup,
    field: &F,
) -> Polynomial<F> {
    let one = field.one();
    Polynomial::from_terms(
        field.clone(),
        mono.dims(),
        group.orbit(mono).into_iter().map(|n| (n, one.clone())),
    )
}

/// The degree-d slice of the invariant ring: one orbit sum per monomial
/// orbit. Distinct orbit sums have disjoint supports, so they are a basis.
#[derive(Clone, Debug)]
pub struct InvariantBasis<F: Field> {
    degree: u32,
    basis: Vec<Polynomial<F>>,
}

impl<F: Field> InvariantBasis<F> {
    pub fn compute(
        group: &PermutationGroup,
        dims: Dims,
        field: &F,
        degree: u32,
    ) -> InvariantBasis<F> {
        let reps = orbit_representatives(group, dims, degree);
        InvariantBasis {
            degree,
            basis: reps
                .iter()
                .map(|rep| orbit_sum(rep, group, field))
                .collect(),
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn basis(&self) -> &[Polynomial<F>] {
        &self.basis
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }
}

/// Canonical representatives (orbit minima) of the degree-d monomial
/// orbits, sorted.
pub fn orbit_representatives(group: &PermutationGroup, dims: Dims, degree: u32) -> Vec<Monomial> {
    let mut reps = BTreeSet::new();
    for mono in Monomial::all_of_degree(dims, degree) {
        reps.insert(group.orbit_representative(&mono));
    }
    reps.into_iter().collect()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GeneratorStrategy {
    GoebelPolarized,
    NoetherReynolds,
}

impl GeneratorStrategy {
    pub fn token(&self) -> &'static str {
        match self {
            GeneratorStrategy::GoebelPolarized => "goebel",
            GeneratorStrategy::NoetherReynolds => "noether",
        }
    }
}

impl std::str::FromStr for GeneratorStrategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim().to_ascii_lowercase().as_str() {
            "goebel" => Ok(GeneratorStrategy::GoebelPolarized),
            "noether" => Ok(GeneratorStrategy::NoetherReynolds),
            other => Err(format!(
                "unknown strategy `{other}` (expected `goebel` or `noether`)"
            )),
        }
    }
}

/// A generating set for a Hilbert ideal, tagged with how it was built.
#[derive(Clone, Debug)]
pub struct HilbertIdealGens<F: Field> {
    gens: Vec<Polynomial<F>>,
    strategy: GeneratorStrategy,
    dims: Dims,
    group_order: usize,
}

impl<F: Field> HilbertIdealGens<F> {
    pub fn gens(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    pub fn strategy(&self) -> GeneratorStrategy {
        self.strategy
    }

    pub fn dims(&self) -> Dims {
        self.dims
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }
}

/// A positive-degree monomial is *special* when its exponents, sorted in
/// decreasing order, end in 0 and never drop by more than 1. Their degrees
/// stay at or below C(n, 2).
pub fn is_special(mono: &Monomial) -> bool {
    assert_eq!(mono.dims().m, 1, "special monomials live in the single-copy ring");
    let mut sorted: Vec<u32> = mono.exponents().to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let Some(&last) = sorted.last() else {
        return false;
    };
    last == 0
        && sorted.iter().sum::<u32>() > 0
        && sorted.windows(2).all(|w| w[0] - w[1] <= 1)
}

/// Sorted exponent shapes of the special monomials in n variables. Each
/// shape is a decreasing staircase, so there are 2^(n-1) - 1 of them.
pub fn special_shapes(n: usize) -> Vec<Vec<u32>> {
    let mut shapes = Vec::new();
    // A shape is determined by which of the n-1 descents are strict.
    for mask in 1u64..(1 << (n - 1)) {
        let mut shape = vec![0u32; n];
        for i in (0..n - 1).rev() {
            let step = u32::from(mask >> i & 1 == 1);
            shape[i] = shape[i + 1] + step;
        }
        shapes.push(shape);
    }
    shapes.sort();
    shapes
}

/// Göbel's generating set for k[V]^G at m = 1 in its normal form: orbit
/// sums of all special monomials plus the full product x_1⋯x_n. Every
/// member has degree ≤ C(n, 2) except the product, which has degree n.
pub fn goebel_generators<F: Field>(
    group: &PermutationGroup,
    field: &F,
) -> HilbertIdealGens<F> {
    let n = group.degree();
    let dims = Dims::new(n, 1);
    let mut reps = BTreeSet::new();
    if n >= 2 {
        for shape in special_shapes(n) {
            // Distinct rearrangements of one shape may fall in different
            // G-orbits; enumerate them all and keep one representative each.
            for mono in Monomial::all_of_degree(dims, shape.iter().sum()) {
                let mut sorted: Vec<u32> = mono.exponents().to_vec();
                sorted.sort_unstable_by(|a, b| b.cmp(a));
                if sorted == shape {
                    reps.insert(group.orbit_representative(&mono));
                }
            }
        }
    }
    let mut gens: Vec<Polynomial<F>> = reps
        .iter()
        .map(|rep| orbit_sum(rep, group, field))
        .collect();
    let product = Monomial::from_single_copy(vec![1; n]);
    gens.push(Polynomial::from_monomial(
        field.clone(),
        product,
        field.one(),
    ));
    gens.sort_by_key(|g| {
        (
            g.total_degree().unwrap_or(0),
            g.lead_monomial(MonomialOrder::OrderA)
                .map(|(m, _)| m.clone()),
        )
    });
    HilbertIdealGens {
        gens,
        strategy: GeneratorStrategy::GoebelPolarized,
        dims,
        group_order: group.order(),
    }
}

/// Orbit-sum generators of every degree 1..=|G| in the m-copy ring: the
/// Noether-bound generating set, valid in characteristic 0 or coprime to
/// |G|. `term_cap` guards the monomial enumeration.
pub fn noether_generators<F: Field>(
    group: &PermutationGroup,
    m: usize,
    field: &F,
    term_cap: usize,
) -> Result<HilbertIdealGens<F>, InvariantError> {
    let dims = Dims::new(group.degree(), m);
    let order = group.order() as u32;
    let needed = count_monomials_up_to(dims.num_vars(), order);
    if needed > term_cap {
        return Err(InvariantError::TermCapExceeded {
            cap: term_cap,
            needed,
        });
    }
    let mut gens = Vec::new();
    for d in 1..=order {
        for rep in orbit_representatives(group, dims, d) {
            gens.push(orbit_sum(&rep, group, field));
        }
    }
    Ok(HilbertIdealGens {
        gens,
        strategy: GeneratorStrategy::NoetherReynolds,
        dims,
        group_order: group.order(),
    })
}

fn count_monomials_up_to(vars: usize, degree: u32) -> usize {
    // Σ_{d=1}^{degree} C(d + vars - 1, vars - 1), saturating.
    let mut total = 0usize;
    for d in 1..=degree as usize {
        let mut binom = 1usize;
        for i in 0..vars.saturating_sub(1) {
            binom = binom.saturating_mul(d + i + 1);
            binom /= i + 1;
        }
        total = total.saturating_add(binom);
    }
    total
}

/// Every polarization of every Göbel generator: a generating set for
/// I(G, V^m) in characteristic zero.
pub fn polarized_generators(
    group: &PermutationGroup,
    m: usize,
) -> HilbertIdealGens<Rationals> {
    let single = goebel_generators(group, &Rationals);
    let mut gens = Vec::new();
    for f in single.gens() {
        let family = polarize_full(f, m).expect("single-copy input");
        gens.extend(family.into_components().into_values());
    }
    HilbertIdealGens {
        gens,
        strategy: GeneratorStrategy::GoebelPolarized,
        dims: Dims::new(group.degree(), m),
        group_order: group.order(),
    }
}

pub fn hilbert_ideal_generators(
    group: &PermutationGroup,
    m: usize,
    strategy: GeneratorStrategy,
    term_cap: usize,
) -> Result<HilbertIdealGens<Rationals>, InvariantError> {
    match strategy {
        GeneratorStrategy::GoebelPolarized => Ok(polarized_generators(group, m)),
        GeneratorStrategy::NoetherReynolds => {
            noether_generators(group, m, &Rationals, term_cap)
        }
    }
}

/// β(G, V^m) and the per-degree counts of new minimal generators of the
/// invariant ring, by exact rank computations over ℚ.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BetaReport {
    pub beta: u32,
    /// Degree ↦ dim Inv_d − dim (products of lower invariants)_d, for every
    /// scanned degree.
    pub new_generators_by_degree: BTreeMap<u32, usize>,
    /// C(n, 2) + 1.
    pub bound: u32,
    pub bound_satisfied: bool,
}

/// Exact β(G, V^m) over ℚ. The scan ceiling D is the minimal generating
/// degree of I(G, V^m): the ideal is generated by invariants of degree ≤ D,
/// and the transfer argument then writes any invariant of larger degree in
/// terms of lower-degree ones, so no minimal algebra generator lives above
/// D. The ceiling is derived from the Noether generating set, whose
/// generation guarantee is unconditional over ℚ (polarized single-copy
/// generators can span a strictly smaller ideal; A_3 with two copies is a
/// witness). Errors when D would exceed `hard_cap`.
pub fn beta_exact(
    group: &PermutationGroup,
    m: usize,
    hard_cap: u32,
    term_cap: usize,
) -> Result<BetaReport, InvariantError> {
    let n = group.degree();
    let bound = crate::binom2(n) + 1;
    if hard_cap < bound {
        return Err(InvariantError::CapTooSmall {
            cap: hard_cap,
            needed: bound,
        });
    }
    let dims = Dims::new(n, m);
    let gens = noether_generators(group, m, &Rationals, term_cap)?;
    let degrees = groebner::minimal_generator_degrees(gens.gens(), MonomialOrder::OrderA)?;
    let ceiling = degrees.keys().next_back().copied().unwrap_or(0);
    if ceiling > hard_cap {
        return Err(InvariantError::CapTooSmall {
            cap: hard_cap,
            needed: ceiling,
        });
    }

    let slices: Vec<InvariantBasis<Rationals>> = (1..=ceiling)
        .map(|d| InvariantBasis::compute(group, dims, &Rationals, d))
        .collect();
    let reps_by_degree: Vec<Vec<Monomial>> = (1..=ceiling)
        .map(|d| orbit_representatives(group, dims, d))
        .collect();

    let mut new_by_degree = BTreeMap::new();
    for d in 1..=ceiling {
        let slice = &slices[(d - 1) as usize];
        let reps = &reps_by_degree[(d - 1) as usize];
        let decomposable_rank = if d == 1 {
            0
        } else {
            let mut rows: Vec<Vec<BigRational>> = Vec::new();
            for d1 in 1..=(d / 2) {
                let d2 = d - d1;
                let left = &slices[(d1 - 1) as usize];
                let right = &slices[(d2 - 1) as usize];
                for (i, f) in left.basis().iter().enumerate() {
                    for (t, g) in right.basis().iter().enumerate() {
                        if d1 == d2 && t < i {
                            continue;
                        }
                        let product = f.mul(g);
                        rows.push(reps.iter().map(|rep| product.coefficient(rep)).collect());
                    }
                }
            }
            rank_rational(&rows)
        };
        new_by_degree.insert(d, slice.dimension() - decomposable_rank);
    }

    let beta = new_by_degree
        .iter()
        .filter(|&(_, &count)| count > 0)
        .map(|(&d, _)| d)
        .max()
        .unwrap_or(0);
    Ok(BetaReport {
        beta,
        new_generators_by_degree: new_by_degree,
        bound,
        bound_satisfied: beta <= bound,
    })
}
