//! Python bindings for the coinv workbench: exact polynomials over ℚ,
//! permutation groups, polarization, Gröbner bases, and the experiment
//! drivers (returned as JSON strings).

use coinv::experiment::{
    cmd_bound_check, cmd_gb_polarize_test, cmd_lemma_sweep, cmd_snlead, RunCaps,
};
use coinv::groebner;
use coinv::invariant::{self, GeneratorStrategy};
use coinv::parse::{infer_dims, parse_polynomial};
use coinv::polarize as polarize_ops;
use coinv::polarize::MultiIndex;
use coinv::perm::DEFAULT_GROUP_CAP;
use coinv::{Dims, Field, FieldSpec, MonomialOrder, PermutationGroup, QPolynomial, Rationals};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use std::collections::BTreeMap;

fn value_error(message: impl ToString) -> PyErr {
    PyValueError::new_err(message.to_string())
}

fn parse_order(token: &str) -> PyResult<MonomialOrder> {
    token.parse().map_err(value_error)
}

fn parse_strategy(token: &str) -> PyResult<GeneratorStrategy> {
    token.parse().map_err(value_error)
}

/// A sparse polynomial with exact rational coefficients on the grid of
/// variables x{i}_{j} (x{i} when m = 1).
#[pyclass(name = "Poly", from_py_object)]
#[derive(Clone)]
struct PyPoly {
    inner: QPolynomial,
}

#[pymethods]
impl PyPoly {
    /// Parse from text, e.g. `Poly("3*x1_1^2*x2_2 - 1/2*x3_1")`. The grid is
    /// inferred from the variables unless `n`/`m` widen it.
    #[new]
    #[pyo3(signature = (expr, n = None, m = None))]
    fn new(expr: &str, n: Option<usize>, m: Option<usize>) -> PyResult<Self> {
        let inferred = infer_dims(&[expr]).map_err(value_error)?;
        let dims = Dims::new(
            n.unwrap_or(inferred.n).max(inferred.n),
            m.unwrap_or(inferred.m).max(inferred.m),
        );
        let inner = parse_polynomial(expr, dims, &Rationals).map_err(value_error)?;
        Ok(PyPoly { inner })
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Poly(\"{}\")", self.inner)
    }

    fn __eq__(&self, other: &PyPoly) -> bool {
        self.inner == other.inner
    }

    fn __add__(&self, other: &PyPoly) -> PyResult<PyPoly> {
        self.check_compatible(other)?;
        Ok(PyPoly {
            inner: self.inner.add(&other.inner),
        })
    }

    fn __sub__(&self, other: &PyPoly) -> PyResult<PyPoly> {
        self.check_compatible(other)?;
        Ok(PyPoly {
            inner: self.inner.sub(&other.inner),
        })
    }

    fn __mul__(&self, other: &PyPoly) -> PyResult<PyPoly> {
        self.check_compatible(other)?;
        Ok(PyPoly {
            inner: self.inner.mul(&other.inner),
        })
    }

    fn __neg__(&self) -> PyPoly {
        PyPoly {
            inner: self.inner.neg(),
        }
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn num_terms(&self) -> usize {
        self.inner.num_terms()
    }

    fn total_degree(&self) -> Option<u32> {
        self.inner.total_degree()
    }

    /// (n, m) of the underlying variable grid.
    fn dims(&self) -> (usize, usize) {
        (self.inner.dims().n, self.inner.dims().m)
    }

    /// Leading (monomial, coefficient) under order "a" or "b"; None for 0.
    #[pyo3(signature = (order = "a"))]
    fn lead_monomial(&self, order: &str) -> PyResult<Option<(String, String)>> {
        let ord = parse_order(order)?;
        Ok(self
            .inner
            .lead_monomial(ord)
            .map(|(m, c)| (m.to_string(), Rationals.format(c))))
    }
}

impl PyPoly {
    fn check_compatible(&self, other: &PyPoly) -> PyResult<()> {
        if self.inner.dims() != other.inner.dims() {
            return Err(value_error(format!(
                "grid mismatch: {:?} vs {:?}",
                self.inner.dims(),
                other.inner.dims()
            )));
        }
        Ok(())
    }
}

/// A finite permutation group, fully enumerated from its spec
/// (`"S3"`, `"A4"`, `"C5"`, or `"n=3; gens=(1 2),(1 2 3)"`).
#[pyclass(name = "Group", from_py_object)]
#[derive(Clone)]
struct PyGroup {
    inner: PermutationGroup,
    spec: String,
}

#[pymethods]
impl PyGroup {
    #[new]
    #[pyo3(signature = (spec, cap = DEFAULT_GROUP_CAP))]
    fn new(spec: &str, cap: usize) -> PyResult<Self> {
        let inner = PermutationGroup::parse_spec(spec, cap).map_err(value_error)?;
        Ok(PyGroup {
            inner,
            spec: spec.to_string(),
        })
    }

    fn __repr__(&self) -> String {
        format!("Group(\"{}\", order={})", self.spec, self.inner.order())
    }

    fn order(&self) -> usize {
        self.inner.order()
    }

    fn degree(&self) -> usize {
        self.inner.degree()
    }

    /// Every element in cycle notation.
    fn elements(&self) -> Vec<String> {
        self.inner
            .elements()
            .iter()
            .map(|p| p.to_string())
            .collect()
    }

    /// Σ_{σ∈G} σ·f.
    fn transfer(&self, f: &PyPoly) -> PyResult<PyPoly> {
        self.check_degree(f)?;
        Ok(PyPoly {
            inner: invariant::transfer(&f.inner, &self.inner),
        })
    }

    /// (1/|G|)·transfer(f).
    fn reynolds(&self, f: &PyPoly) -> PyResult<PyPoly> {
        self.check_degree(f)?;
        invariant::reynolds(&f.inner, &self.inner)
            .map(|inner| PyPoly { inner })
            .map_err(value_error)
    }

    /// Orbit sum of the monomial given as text, over an m-copy grid.
    #[pyo3(signature = (monomial, m = 1))]
    fn orbit_sum(&self, monomial: &str, m: usize) -> PyResult<PyPoly> {
        let dims = Dims::new(self.inner.degree(), m);
        let poly = parse_polynomial(monomial, dims, &Rationals).map_err(value_error)?;
        let mut monos = poly.monomials();
        let (Some(mono), None) = (monos.next(), monos.next()) else {
            return Err(value_error("orbit_sum expects a single monomial"));
        };
        Ok(PyPoly {
            inner: invariant::orbit_sum(mono, &self.inner, &Rationals),
        })
    }

    /// Göbel generating set of the single-copy invariant ring.
    fn goebel_generators(&self) -> Vec<PyPoly> {
        invariant::goebel_generators(&self.inner, &Rationals)
            .gens()
            .iter()
            .map(|g| PyPoly { inner: g.clone() })
            .collect()
    }

    /// Hilbert ideal generators for m copies; strategy "goebel" or "noether".
    #[pyo3(signature = (m, strategy = "noether", term_cap = 1 << 24))]
    fn hilbert_generators(&self, m: usize, strategy: &str, term_cap: usize) -> PyResult<Vec<PyPoly>> {
        let strategy = parse_strategy(strategy)?;
        let gens = invariant::hilbert_ideal_generators(&self.inner, m, strategy, term_cap)
            .map_err(value_error)?;
        Ok(gens
            .gens()
            .iter()
            .map(|g| PyPoly { inner: g.clone() })
            .collect())
    }

    /// (beta, {degree: new generator count}, bound, bound_satisfied).
    #[pyo3(signature = (m, hard_cap = 12, term_cap = 1 << 24))]
    fn beta(
        &self,
        m: usize,
        hard_cap: u32,
        term_cap: usize,
    ) -> PyResult<(u32, BTreeMap<u32, usize>, u32, bool)> {
        let report = invariant::beta_exact(&self.inner, m, hard_cap, term_cap)
            .map_err(value_error)?;
        Ok((
            report.beta,
            report.new_generators_by_degree,
            report.bound,
            report.bound_satisfied,
        ))
    }
}

impl PyGroup {
    fn check_degree(&self, f: &PyPoly) -> PyResult<()> {
        if f.inner.dims().n != self.inner.degree() {
            return Err(value_error(format!(
                "polynomial grid has n = {} but the group acts on {} points",
                f.inner.dims().n,
                self.inner.degree()
            )));
        }
        Ok(())
    }
}

/// A reduced Gröbner basis over ℚ.
#[pyclass(name = "GroebnerBasis")]
struct PyGroebnerBasis {
    inner: groebner::GroebnerBasis<Rationals>,
}

#[pymethods]
impl PyGroebnerBasis {
    fn __repr__(&self) -> String {
        format!("GroebnerBasis({} elements)", self.inner.basis().len())
    }

    fn __len__(&self) -> usize {
        self.inner.basis().len()
    }

    fn polys(&self) -> Vec<PyPoly> {
        self.inner
            .basis()
            .iter()
            .map(|g| PyPoly { inner: g.clone() })
            .collect()
    }

    /// Minimal monomial generators of the lead-term ideal.
    fn lead_ideal(&self) -> Vec<String> {
        self.inner
            .lead_ideal()
            .gens()
            .iter()
            .map(|m| m.to_string())
            .collect()
    }

    fn contains(&self, f: &PyPoly) -> PyResult<bool> {
        if f.inner.dims() != self.inner.dims() {
            return Err(value_error("grid mismatch"));
        }
        Ok(self.inner.contains(&f.inner))
    }

    /// (finite, top_degree, dimension) of the standard-monomial staircase.
    fn staircase(&self) -> (bool, u32, usize) {
        let stairs = groebner::staircase(&self.inner.lead_ideal(), self.inner.dims());
        (stairs.is_finite(), stairs.top_degree(), stairs.dimension())
    }
}

/// Reduced Gröbner basis of the given polynomials.
#[pyfunction]
#[pyo3(signature = (gens, order = "a"))]
fn groebner_basis(gens: Vec<PyPoly>, order: &str) -> PyResult<PyGroebnerBasis> {
    let ord = parse_order(order)?;
    let polys: Vec<QPolynomial> = gens
        .iter()
        .map(|g| g.inner.clone())
        .filter(|g| !g.is_zero())
        .collect();
    if polys.is_empty() {
        return Err(value_error("need at least one nonzero generator"));
    }
    if polys.iter().any(|g| g.dims() != polys[0].dims()) {
        return Err(value_error("generators must share one variable grid"));
    }
    groebner::buchberger(&polys, ord)
        .map(|inner| PyGroebnerBasis { inner })
        .map_err(value_error)
}

/// Remainder of f on division by the divisors.
#[pyfunction]
#[pyo3(signature = (f, divisors, order = "a"))]
fn normal_form(f: &PyPoly, divisors: Vec<PyPoly>, order: &str) -> PyResult<PyPoly> {
    let ord = parse_order(order)?;
    let polys: Vec<QPolynomial> = divisors.iter().map(|g| g.inner.clone()).collect();
    if polys.iter().any(|g| g.is_zero() || g.dims() != f.inner.dims()) {
        return Err(value_error("divisors must be nonzero on the same grid"));
    }
    Ok(PyPoly {
        inner: groebner::normal_form(&f.inner, &polys, ord),
    })
}

/// All nonzero polarization components of a single-copy polynomial, as a
/// list of (k, Poly) pairs.
#[pyfunction]
fn polarize(f: &PyPoly, m: usize) -> PyResult<Vec<(Vec<u32>, PyPoly)>> {
    let family = polarize_ops::polarize_full(&f.inner, m).map_err(value_error)?;
    Ok(family
        .components()
        .iter()
        .map(|(k, poly)| (k.parts().to_vec(), PyPoly { inner: poly.clone() }))
        .collect())
}

/// The coefficient of t^k in the polarization of f.
#[pyfunction]
fn pol_k(f: &PyPoly, k: Vec<u32>) -> PyResult<PyPoly> {
    let k = MultiIndex::new(k);
    polarize_ops::pol_k(&f.inner, &k)
        .map(|inner| PyPoly { inner })
        .map_err(value_error)
}

/// Leading (monomial, coefficient) of pol_k(monomial) from the closed-form
/// recursion, without expanding.
#[pyfunction]
#[pyo3(signature = (monomial, k, order = "a"))]
fn fast_lead(monomial: &str, k: Vec<u32>, order: &str) -> PyResult<(String, String)> {
    let ord = parse_order(order)?;
    let dims = infer_dims(&[monomial]).map_err(value_error)?;
    if dims.m != 1 {
        return Err(value_error("fast_lead expects a single-copy monomial"));
    }
    let poly = parse_polynomial(monomial, dims, &Rationals).map_err(value_error)?;
    let mut monos = poly.monomials();
    let (Some(mono), None) = (monos.next(), monos.next()) else {
        return Err(value_error("fast_lead expects a single monomial"));
    };
    let k = MultiIndex::new(k);
    polarize_ops::fast_lead(mono, &k, ord, &Rationals)
        .map(|(m, c)| (m.to_string(), Rationals.format(&c)))
        .map_err(value_error)
}

/// The monomial family ∏_j (x_i^(j))^{k_j}, |k| = i, as strings.
#[pyfunction]
fn theorem_family(n: usize, m: usize) -> Vec<String> {
    polarize_ops::theorem_family(n, m)
        .iter()
        .map(|mono| mono.to_string())
        .collect()
}

/// JSON report of the S_n lead-ideal reconstruction.
#[pyfunction]
fn snlead(n: usize) -> PyResult<String> {
    cmd_snlead(n, &RunCaps::default())
        .map(|r| r.to_json())
        .map_err(value_error)
}

/// JSON report of the degree-bound verification for I(G, V^m).
#[pyfunction]
#[pyo3(signature = (group, m, strategy = "goebel", cross_check = false))]
fn bound_check(group: &str, m: usize, strategy: &str, cross_check: bool) -> PyResult<String> {
    let strategy = parse_strategy(strategy)?;
    cmd_bound_check(group, m, strategy, cross_check, &RunCaps::default())
        .map(|r| r.to_json())
        .map_err(value_error)
}

/// JSON report of the exhaustive fast-lead sweep.
#[pyfunction]
#[pyo3(signature = (n, m, max_deg, field = "q", order = None))]
fn lemma_sweep(n: usize, m: usize, max_deg: u32, field: &str, order: Option<&str>) -> PyResult<String> {
    let field: FieldSpec = field.parse().map_err(value_error)?;
    let order = order.map(parse_order).transpose()?;
    cmd_lemma_sweep(n, m, max_deg, field, order)
        .map(|r| r.to_json())
        .map_err(value_error)
}

/// JSON report: does polarizing a reduced basis of I(G, V) stay a basis?
#[pyfunction]
fn gb_polarize_test(group: &str, m: usize) -> PyResult<String> {
    cmd_gb_polarize_test(group, m, &RunCaps::default())
        .map(|r| r.to_json())
        .map_err(value_error)
}

#[pymodule]
fn pycoinv(_py: Python<'_>, m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPoly>()?;
    m.add_class::<PyGroup>()?;
    m.add_class::<PyGroebnerBasis>()?;
    m.add_function(wrap_pyfunction!(groebner_basis, m)?)?;
    m.add_function(wrap_pyfunction!(normal_form, m)?)?;
    m.add_function(wrap_pyfunction!(polarize, m)?)?;
    m.add_function(wrap_pyfunction!(pol_k, m)?)?;
    m.add_function(wrap_pyfunction!(fast_lead, m)?)?;
    m.add_function(wrap_pyfunction!(theorem_family, m)?)?;
    m.add_function(wrap_pyfunction!(snlead, m)?)?;
    m.add_function(wrap_pyfunction!(bound_check, m)?)?;
    m.add_function(wrap_pyfunction!(lemma_sweep, m)?)?;
    m.add_function(wrap_pyfunction!(gb_polarize_test, m)?)?;
    Ok(())
}
