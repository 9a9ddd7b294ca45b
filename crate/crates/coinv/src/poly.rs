//! Sparse multivariate polynomials with exact coefficients.
//!
//! Terms live in a sorted map keyed by monomial, so iteration is ascending
//! Order A and all operations are deterministic. The zero polynomial is the
//! empty map; no zero coefficient is ever stored.

use crate::field::Field;
use crate::monomial::{Dims, Monomial, MonomialOrder, VarId};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial<F: Field> {
    field: F,
    dims: Dims,
    terms: BTreeMap<Monomial, F::Elem>,
}

impl<F: Field> Polynomial<F> {
    pub fn zero(field: F, dims: Dims) -> Self {
        Polynomial {
            field,
            dims,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: F, dims: Dims, c: F::Elem) -> Self {
        let mut p = Polynomial::zero(field, dims);
        p.add_term(Monomial::one(dims), c);
        p
    }

    pub fn one(field: F, dims: Dims) -> Self {
        let c = field.one();
        Polynomial::constant(field, dims, c)
    }

    pub fn var(field: F, dims: Dims, v: VarId) -> Self {
        let c = field.one();
        Polynomial::from_monomial(field, Monomial::var(dims, v), c)
    }

    pub fn from_monomial(field: F, mono: Monomial, c: F::Elem) -> Self {
        let dims = mono.dims();
        let mut p = Polynomial::zero(field, dims);
        p.add_term(mono, c);
        p
    }

    pub fn from_terms<I>(field: F, dims: Dims, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, F::Elem)>,
    {
        let mut p = Polynomial::zero(field, dims);
        for (mono, c) in terms {
            p.add_term(mono, c);
        }
        p
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dims(&self) -> Dims {
        self.dims
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending Order A.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F::Elem)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn coefficient(&self, mono: &Monomial) -> F::Elem {
        self.terms.get(mono).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    /// `Some(d)` when every term has total degree d.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(Monomial::total_degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// Accumulates one term, dropping the entry if it cancels.
    pub fn add_term(&mut self, mono: Monomial, c: F::Elem) {
        assert_eq!(mono.dims(), self.dims, "term dims mismatch");
        if self.field.is_zero(&c) {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                let sum = self.field.add(slot.get(), &c);
                if self.field.is_zero(&sum) {
                    slot.remove();
                } else {
                    slot.insert(sum);
                }
            }
        }
    }

    fn assert_compatible(&self, other: &Self) {
        assert_eq!(self.dims, other.dims, "polynomial dims mismatch");
        assert_eq!(self.field, other.field, "polynomial field mismatch");
    }

    /// Panics on dims or field mismatch, as do `sub`, `mul`, and the
    /// operator forms.
    pub fn add(&self, other: &Self) -> Self {
        self.assert_compatible(other);
        let mut out = self.clone();
        for (mono, c) in &other.terms {
            out.add_term(mono.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_compatible(other);
        let mut out = self.clone();
        for (mono, c) in &other.terms {
            out.add_term(mono.clone(), self.field.neg(c));
        }
        out
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            field: self.field.clone(),
            dims: self.dims,
            terms: self
                .terms
                .iter()
                .map(|(mono, c)| (mono.clone(), self.field.neg(c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_compatible(other);
        let mut out = Polynomial::zero(self.field.clone(), self.dims);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), self.field.mul(ca, cb));
            }
        }
        out
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        if self.field.is_zero(c) {
            return Polynomial::zero(self.field.clone(), self.dims);
        }
        Polynomial {
            field: self.field.clone(),
            dims: self.dims,
            terms: self
                .terms
                .iter()
                .map(|(mono, a)| (mono.clone(), self.field.mul(a, c)))
                .collect(),
        }
    }

    /// Multiplies by the single term `c * mono`.
    pub fn mul_term(&self, mono: &Monomial, c: &F::Elem) -> Self {
        if self.field.is_zero(c) {
            return Polynomial::zero(self.field.clone(), self.dims);
        }
        Polynomial {
            field: self.field.clone(),
            dims: self.dims,
            terms: self
                .terms
                .iter()
                .map(|(ma, a)| (ma.mul(mono), self.field.mul(a, c)))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Polynomial::one(self.field.clone(), self.dims);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// The order-maximal term; `None` for the zero polynomial.
    pub fn lead_monomial(&self, ord: MonomialOrder) -> Option<(&Monomial, &F::Elem)> {
        match ord {
            // Map order is Order A, so the maximum is the last key.
            MonomialOrder::OrderA => self.terms.iter().next_back(),
            MonomialOrder::OrderB => self
                .terms
                .iter()
                .max_by(|(a, _), (b, _)| ord.compare(a, b)),
        }
    }

    /// Divides every coefficient by the leading one.
    pub fn make_monic(&self, ord: MonomialOrder) -> Self {
        match self.lead_monomial(ord) {
            None => self.clone(),
            Some((_, lc)) => {
                let inv = self.field.inv(lc).expect("nonzero lead coefficient");
                self.scale(&inv)
            }
        }
    }

    /// Rescales by the field's canonical content normalization.
    pub fn normalize_content(&self) -> Self {
        let (monos, mut coeffs): (Vec<_>, Vec<_>) =
            self.terms.iter().map(|(m, c)| (m.clone(), c.clone())).unzip();
        self.field.normalize_content(&mut coeffs);
        Polynomial {
            field: self.field.clone(),
            dims: self.dims,
            terms: monos.into_iter().zip(coeffs).collect(),
        }
    }

    /// Applies a monomial substitution to every term.
    pub fn map_monomials(&self, f: impl Fn(&Monomial) -> Monomial) -> Self {
        let mut out = Polynomial::zero(self.field.clone(), self.dims);
        for (mono, c) in &self.terms {
            out.add_term(f(mono), c.clone());
        }
        out
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // Canonical rendering: descending Order A.
        for (idx, (mono, c)) in self.terms.iter().rev().enumerate() {
            let mut cs = self.field.format(c);
            let negative = cs.starts_with('-');
            if negative {
                cs.remove(0);
            }
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mono.is_one() {
                write!(f, "{cs}")?;
            } else if cs == "1" {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{cs}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<F: Field> std::ops::Add for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: Self) -> Polynomial<F> {
        Polynomial::add(self, rhs)
    }
}

impl<F: Field> std::ops::Sub for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: Self) -> Polynomial<F> {
        Polynomial::sub(self, rhs)
    }
}

impl<F: Field> std::ops::Mul for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: Self) -> Polynomial<F> {
        Polynomial::mul(self, rhs)
    }
}

impl<F: Field> std::ops::Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        Polynomial::neg(self)
    }
}
