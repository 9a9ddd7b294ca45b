//! Monomials over the variable grid {x_i^(j) : 1 ≤ i ≤ n, 1 ≤ j ≤ m} and the
//! two lexicographic term orders used throughout.
//!
//! Order A ranks variables by (i, j): x1_1 > x1_2 > … > x1_m > x2_1 > …
//! Order B ranks variables by (j, i): x1_1 > x2_1 > … > xn_1 > x1_2 > …
//! Both compare exponent vectors lexicographically in descending variable
//! rank. The single-copy ring k[V] is exactly the m = 1 case, where the two
//! orders coincide.

use std::cmp::Ordering;
use std::fmt;

/// Grid dimensions: n basis variables and m copies.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Dims {
    pub n: usize,
    pub m: usize,
}

impl Dims {
    pub fn new(n: usize, m: usize) -> Dims {
        assert!(n >= 1 && m >= 1, "dims must be at least (1, 1)");
        Dims { n, m }
    }

    pub fn num_vars(&self) -> usize {
        self.n * self.m
    }

    /// All variables in row-major order, i.e. descending Order-A rank.
    pub fn var_ids(&self) -> impl Iterator<Item = VarId> + '_ {
        let m = self.m;
        (1..=self.n).flat_map(move |i| (1..=m).map(move |j| VarId { i, j }))
    }
}

/// One variable x_i^(j); both indices are 1-based.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VarId {
    pub i: usize,
    pub j: usize,
}

impl VarId {
    pub fn new(i: usize, j: usize) -> VarId {
        assert!(i >= 1 && j >= 1, "variable indices are 1-based");
        VarId { i, j }
    }
}

/// The two term orders.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum MonomialOrder {
    #[default]
    OrderA,
    OrderB,
}

impl MonomialOrder {
    /// Lexicographic comparison of exponent vectors read in descending
    /// variable rank. Panics if the grids have different dimensions.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        assert_eq!(a.dims, b.dims, "monomial comparison requires equal dims");
        match self {
            // Row-major storage is exactly Order-A rank order.
            MonomialOrder::OrderA => a.exps.cmp(&b.exps),
            MonomialOrder::OrderB => {
                let (n, m) = (a.dims.n, a.dims.m);
                for j in 0..m {
                    for i in 0..n {
                        let idx = i * m + j;
                        match a.exps[idx].cmp(&b.exps[idx]) {
                            Ordering::Equal => {}
                            ord => return ord,
                        }
                    }
                }
                Ordering::Equal
            }
        }
    }

    pub fn token(&self) -> &'static str {
        match self {
            MonomialOrder::OrderA => "a",
            MonomialOrder::OrderB => "b",
        }
    }
}

impl std::str::FromStr for MonomialOrder {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim().to_ascii_lowercase().as_str() {
            "a" => Ok(MonomialOrder::OrderA),
            "b" => Ok(MonomialOrder::OrderB),
            other => Err(format!("unknown order `{other}` (expected `a` or `b`)")),
        }
    }
}

/// An exponent grid. Exponents are stored row-major: the entry for x_i^(j)
/// sits at (i-1)*m + (j-1).
///
/// The derived `Ord` coincides with Order A on equal dims; sorted maps keyed
/// by `Monomial` therefore iterate in ascending Order A.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    dims: Dims,
    exps: Vec<u32>,
}

impl Monomial {
    /// The identity monomial (all exponents zero).
    pub fn one(dims: Dims) -> Monomial {
        Monomial {
            dims,
            exps: vec![0; dims.num_vars()],
        }
    }

    pub fn var(dims: Dims, v: VarId) -> Monomial {
        Monomial::var_pow(dims, v, 1)
    }

    /// x_i^(j) raised to `e`.
    pub fn var_pow(dims: Dims, v: VarId, e: u32) -> Monomial {
        assert!(v.i <= dims.n && v.j <= dims.m, "variable {v:?} outside {dims:?}");
        let mut mono = Monomial::one(dims);
        mono.exps[(v.i - 1) * dims.m + (v.j - 1)] = e;
        mono
    }

    /// Builds a monomial from a row-major exponent vector.
    pub fn from_exponents(dims: Dims, exps: Vec<u32>) -> Monomial {
        assert_eq!(exps.len(), dims.num_vars(), "exponent vector length mismatch");
        Monomial { dims, exps }
    }

    /// Single-copy convenience: exponent vector (a_1, …, a_n) in k[V].
    pub fn from_single_copy(exps: Vec<u32>) -> Monomial {
        let dims = Dims::new(exps.len(), 1);
        Monomial { dims, exps }
    }

    pub fn dims(&self) -> Dims {
        self.dims
    }

    pub fn exponent(&self, v: VarId) -> u32 {
        assert!(v.i <= self.dims.n && v.j <= self.dims.m);
        self.exps[(v.i - 1) * self.dims.m + (v.j - 1)]
    }

    pub fn set_exponent(&mut self, v: VarId, e: u32) {
        assert!(v.i <= self.dims.n && v.j <= self.dims.m);
        self.exps[(v.i - 1) * self.dims.m + (v.j - 1)] = e;
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// Degree in the variables of copy j (1-based).
    pub fn copy_degree(&self, j: usize) -> u32 {
        assert!(j >= 1 && j <= self.dims.m);
        (0..self.dims.n).map(|r| self.exps[r * self.dims.m + (j - 1)]).sum()
    }

    /// Degree in the copies of basis variable i (1-based).
    pub fn row_degree(&self, i: usize) -> u32 {
        assert!(i >= 1 && i <= self.dims.n);
        self.exps[(i - 1) * self.dims.m..i * self.dims.m].iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.dims, other.dims, "monomial product requires equal dims");
        Monomial {
            dims: self.dims,
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.dims == other.dims && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn divide_into(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial {
            dims: self.dims,
            exps: other.exps.iter().zip(&self.exps).map(|(b, a)| b - a).collect(),
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.dims, other.dims);
        Monomial {
            dims: self.dims,
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect(),
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        assert_eq!(self.dims, other.dims);
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// All monomials of total degree exactly `d`, ascending in the derived
    /// (Order A) order.
    pub fn all_of_degree(dims: Dims, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut exps = vec![0u32; dims.num_vars()];
        fill_compositions(&mut exps, 0, d, &mut |e| {
            out.push(Monomial {
                dims,
                exps: e.to_vec(),
            })
        });
        out.sort();
        out
    }

    /// All monomials of total degree at most `d`.
    pub fn all_up_to_degree(dims: Dims, d: u32) -> Vec<Monomial> {
        let mut out: Vec<Monomial> = (0..=d).flat_map(|k| Monomial::all_of_degree(dims, k)).collect();
        out.sort();
        out
    }
}

fn fill_compositions(exps: &mut [u32], idx: usize, remaining: u32, emit: &mut impl FnMut(&[u32])) {
    if idx + 1 == exps.len() {
        exps[idx] = remaining;
        emit(exps);
        exps[idx] = 0;
        return;
    }
    for e in 0..=remaining {
        exps[idx] = e;
        fill_compositions(exps, idx + 1, remaining - e, emit);
    }
    exps[idx] = 0;
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for v in self.dims.var_ids() {
            let e = self.exponent(v);
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if self.dims.m == 1 {
                write!(f, "x{}", v.i)?;
            } else {
                write!(f, "x{}_{}", v.i, v.j)?;
            }
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
