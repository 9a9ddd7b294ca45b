//! Polarization of single-copy polynomials into the m-copy ring.
//!
//! Polarization substitutes x_i -> Σ_j x_i^(j) t_j over auxiliary variables
//! t_1, …, t_m and collects the coefficient of each t-monomial: for a weight
//! vector k = (k_1, …, k_m), `pol_k(f)` is the coefficient of
//! t_1^{k_1}⋯t_m^{k_m}. The t-ring is never materialized; each component is
//! assembled directly by distributing the k_j copy slots over the factors of
//! every monomial, which multiplies in one multinomial coefficient per basis
//! variable.
//!
//! `fast_lead` computes the leading term of `pol_k(M)` for a monomial
//! M = x_1^{a_1}⋯x_n^{a_n} without expanding anything. The exponent of
//! x_i^(j) in that lead is produced by the greedy recursion
//!
//! ```text
//! b[i][j] = min( k_j - Σ_{l<i} b[l][j],  a_i - Σ_{l<j} b[i][l] )
//! ```
//!
//! filled row-major (any fill order consistent with the dependencies gives
//! the same grid), and the coefficient is ∏_i a_i! / (b[i][1]!⋯b[i][m]!).
//! The same grid is the lead under both Order A and Order B: the recursion
//! only consults rankings within one row and within one column of the
//! variable grid, and the two orders agree there. Over F_p the coefficient
//! is a unit whenever every a_i < p; outside that range `fast_lead` refuses
//! rather than report a lead whose coefficient may have vanished.

use crate::field::Field;
use crate::monomial::{Dims, Monomial, MonomialOrder, VarId};
use crate::poly::Polynomial;
use num_bigint::{BigInt, BigUint};
use num_traits::One;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolarizeError {
    #[error("polarization input must live in the single-copy ring (m = 1)")]
    NotSingleCopy,
    #[error("multi-index weight {weight} does not match the monomial degree {degree}")]
    WeightMismatch { weight: u32, degree: u32 },
    #[error("characteristic {p} is too small: exponent {exponent} has vanishing factorial")]
    SmallCharacteristic { p: u64, exponent: u32 },
}

/// A weight vector k = (k_1, …, k_m) of copy multiplicities.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MultiIndex {
    parts: Vec<u32>,
}

impl MultiIndex {
    pub fn new(parts: Vec<u32>) -> MultiIndex {
        assert!(!parts.is_empty(), "multi-index needs at least one part");
        MultiIndex { parts }
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// |k| = Σ k_j.
    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Every k of length `m` and weight `w`, ascending lexicographically.
    pub fn all_of_weight(m: usize, w: u32) -> Vec<MultiIndex> {
        let mut out = Vec::new();
        let mut parts = vec![0u32; m];
        fn rec(parts: &mut [u32], idx: usize, remaining: u32, out: &mut Vec<MultiIndex>) {
            if idx + 1 == parts.len() {
                parts[idx] = remaining;
                out.push(MultiIndex {
                    parts: parts.to_vec(),
                });
                parts[idx] = 0;
                return;
            }
            for v in 0..=remaining {
                parts[idx] = v;
                rec(parts, idx + 1, remaining - v, out);
            }
            parts[idx] = 0;
        }
        rec(&mut parts, 0, w, &mut out);
        out
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let joined = self
            .parts
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(",");
        write!(f, "({joined})")
    }
}

impl std::str::FromStr for MultiIndex {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let cleaned = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = cleaned
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<u32>()
                    .map_err(|_| format!("bad multi-index entry `{tok}`"))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if parts.is_empty() {
            return Err("empty multi-index".to_string());
        }
        Ok(MultiIndex { parts })
    }
}

/// All nonzero components of Φ(f), keyed by multi-index.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolarizedFamily<F: Field> {
    source: Polynomial<F>,
    m: usize,
    components: BTreeMap<MultiIndex, Polynomial<F>>,
}

impl<F: Field> PolarizedFamily<F> {
    pub fn source(&self) -> &Polynomial<F> {
        &self.source
    }

    pub fn copies(&self) -> usize {
        self.m
    }

    pub fn components(&self) -> &BTreeMap<MultiIndex, Polynomial<F>> {
        &self.components
    }

    pub fn get(&self, k: &MultiIndex) -> Option<&Polynomial<F>> {
        self.components.get(k)
    }

    /// Pol(f): the nonzero components, zeros already dropped.
    pub fn pol_set(&self) -> impl Iterator<Item = &Polynomial<F>> {
        self.components.values()
    }

    pub fn into_components(self) -> BTreeMap<MultiIndex, Polynomial<F>> {
        self.components
    }
}

/// Computes every nonzero `pol_k(f)`; for homogeneous f of degree d these
/// are exactly the k with |k| = d. At m = 1 the single component of weight d
/// is the degree-d part of f itself.
pub fn polarize_full<F: Field>(
    f: &Polynomial<F>,
    m: usize,
) -> Result<PolarizedFamily<F>, PolarizeError> {
    if f.dims().m != 1 {
        return Err(PolarizeError::NotSingleCopy);
    }
    assert!(m >= 1, "m must be at least 1");
    let degrees: BTreeSet<u32> = f.monomials().map(Monomial::total_degree).collect();
    let mut components = BTreeMap::new();
    for d in degrees {
        for k in MultiIndex::all_of_weight(m, d) {
            let component = pol_k(f, &k)?;
            if !component.is_zero() {
                components.insert(k, component);
            }
        }
    }
    Ok(PolarizedFamily {
        source: f.clone(),
        m,
        components,
    })
}

/// The coefficient of t_1^{k_1}⋯t_m^{k_m} in Φ(f), computed directly.
/// Weights besides the degrees of f contribute nothing, so |k| > deg f
/// yields the zero polynomial.
pub fn pol_k<F: Field>(f: &Polynomial<F>, k: &MultiIndex) -> Result<Polynomial<F>, PolarizeError> {
    if f.dims().m != 1 {
        return Err(PolarizeError::NotSingleCopy);
    }
    let n = f.dims().n;
    let m = k.len();
    let target = Dims::new(n, m);
    let mut out = Polynomial::zero(f.field().clone(), target);
    for (mono, c) in f.terms() {
        if mono.total_degree() != k.weight() {
            continue;
        }
        distribute_monomial(mono, c, k, &mut out);
    }
    Ok(out)
}

/// Expands one monomial term into `out`: every way of splitting each a_i
/// into per-copy exponents summing column-wise to k contributes the product
/// of multinomial coefficients.
fn distribute_monomial<F: Field>(
    mono: &Monomial,
    c: &F::Elem,
    k: &MultiIndex,
    out: &mut Polynomial<F>,
) {
    let n = mono.dims().n;
    let m = k.len();
    let exponents: Vec<u32> = (1..=n).map(|i| mono.exponent(VarId::new(i, 1))).collect();
    let mut walk = SlotWalk {
        exponents,
        m,
        dims: out.dims(),
        field: out.field().clone(),
        coefficient: c,
        out,
    };
    let mut remaining = k.parts().to_vec();
    let mut grid = vec![0u32; n * m];
    walk.descend(0, &mut remaining, &mut grid, &BigUint::one());
}

struct SlotWalk<'a, F: Field> {
    exponents: Vec<u32>,
    m: usize,
    dims: Dims,
    field: F,
    coefficient: &'a F::Elem,
    out: &'a mut Polynomial<F>,
}

impl<F: Field> SlotWalk<'_, F> {
    fn descend(&mut self, row: usize, remaining: &mut [u32], grid: &mut Vec<u32>, coeff: &BigUint) {
        if row == self.exponents.len() {
            debug_assert!(remaining.iter().all(|&r| r == 0));
            let factor = self.field.from_bigint(&BigInt::from(coeff.clone()));
            let scaled = self.field.mul(self.coefficient, &factor);
            self.out
                .add_term(Monomial::from_exponents(self.dims, grid.clone()), scaled);
            return;
        }
        for split in bounded_compositions(self.exponents[row], remaining) {
            let next = coeff * multinomial(&split);
            for j in 0..self.m {
                remaining[j] -= split[j];
                grid[row * self.m + j] = split[j];
            }
            self.descend(row + 1, remaining, grid, &next);
            for j in 0..self.m {
                remaining[j] += split[j];
                grid[row * self.m + j] = 0;
            }
        }
    }
}

/// Compositions of `total` with entry-wise caps.
fn bounded_compositions(total: u32, caps: &[u32]) -> Vec<Vec<u32>> {
    fn rec(idx: usize, left: u32, caps: &[u32], parts: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if idx + 1 == caps.len() {
            if left <= caps[idx] {
                parts[idx] = left;
                out.push(parts.clone());
                parts[idx] = 0;
            }
            return;
        }
        for v in 0..=left.min(caps[idx]) {
            parts[idx] = v;
            rec(idx + 1, left - v, caps, parts, out);
        }
        parts[idx] = 0;
    }
    let mut out = Vec::new();
    let mut parts = vec![0u32; caps.len()];
    rec(0, total, caps, &mut parts, &mut out);
    out
}

/// (Σ parts)! / ∏ parts! as an exact natural number.
pub fn multinomial(parts: &[u32]) -> BigUint {
    let mut acc = BigUint::one();
    let mut total = 0u32;
    for &p in parts {
        for step in 1..=p {
            // Running product of binomials: C(total + step, step) built
            // incrementally keeps every intermediate an integer.
            acc = acc * BigUint::from(total + step) / BigUint::from(step);
        }
        total += p;
    }
    acc
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum FillOrder {
    RowMajor,
    // Exercised by tests to check that the fill order is immaterial.
    #[allow(dead_code)]
    ColumnMajor,
}

/// The greedy exponent grid of the lead of pol_k(x_1^{a_1}⋯x_n^{a_n}).
fn lead_exponent_grid(a: &[u32], k: &[u32], fill: FillOrder) -> Vec<u32> {
    let n = a.len();
    let m = k.len();
    let mut grid = vec![0u32; n * m];
    let mut col_used = vec![0u32; m];
    let mut row_used = vec![0u32; n];
    let mut assign = |i: usize, j: usize, grid: &mut Vec<u32>| {
        let b = (k[j] - col_used[j]).min(a[i] - row_used[i]);
        grid[i * m + j] = b;
        col_used[j] += b;
        row_used[i] += b;
    };
    match fill {
        FillOrder::RowMajor => {
            for i in 0..n {
                for j in 0..m {
                    assign(i, j, &mut grid);
                }
            }
        }
        FillOrder::ColumnMajor => {
            for j in 0..m {
                for i in 0..n {
                    assign(i, j, &mut grid);
                }
            }
        }
    }
    debug_assert_eq!(row_used, a, "fill must exhaust every row");
    debug_assert_eq!(col_used, k, "fill must exhaust every column");
    grid
}

/// Leading term of pol_k(M) for a single-copy monomial M, from the greedy
/// recursion; valid for Order A and Order B alike. Errors when |k| ≠ deg M
/// (the component is zero) or when the coefficient formula is not known to
/// be a unit in positive characteristic (some a_i ≥ p).
pub fn fast_lead<F: Field>(
    mono: &Monomial,
    k: &MultiIndex,
    ord: MonomialOrder,
    field: &F,
) -> Result<(Monomial, F::Elem), PolarizeError> {
    if mono.dims().m != 1 {
        return Err(PolarizeError::NotSingleCopy);
    }
    let degree = mono.total_degree();
    if degree != k.weight() {
        return Err(PolarizeError::WeightMismatch {
            weight: k.weight(),
            degree,
        });
    }
    let n = mono.dims().n;
    let m = k.len();
    let a: Vec<u32> = (1..=n).map(|i| mono.exponent(VarId::new(i, 1))).collect();
    let p = field.characteristic();
    if p > 0 {
        for &ai in &a {
            if u64::from(ai) >= p {
                return Err(PolarizeError::SmallCharacteristic { p, exponent: ai });
            }
        }
    }
    // The grid is the lead under both supported orders (they agree within
    // rows and within columns, which is all the recursion consults), so
    // `ord` does not change the result; it stays in the signature because
    // the statement being computed is order-dependent.
    let _ = ord;
    let grid = lead_exponent_grid(&a, k.parts(), FillOrder::RowMajor);
    let mut coeff = BigUint::one();
    for i in 0..n {
        coeff *= multinomial(&grid[i * m..(i + 1) * m]);
    }
    let lead = Monomial::from_exponents(Dims::new(n, m), grid);
    Ok((lead, field.from_bigint(&BigInt::from(coeff))))
}

/// The monomial family ∏_j (x_i^(j))^{k_j} for 1 ≤ i ≤ n and |k| = i: for
/// each basis variable, every degree-i monomial in its m copies. These are
/// the leads of pol_k(x_i^i) and land in the lead ideal of any Hilbert
/// ideal of a permutation group on n points.
pub fn theorem_family(n: usize, m: usize) -> Vec<Monomial> {
    let dims = Dims::new(n, m);
    let mut out = Vec::new();
    for i in 1..=n {
        for k in MultiIndex::all_of_weight(m, i as u32) {
            let mut mono = Monomial::one(dims);
            for (j, &e) in k.parts().iter().enumerate() {
                mono.set_exponent(VarId::new(i, j + 1), e);
            }
            out.push(mono);
        }
    }
    out.sort();
    out
}
