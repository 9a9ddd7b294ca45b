//! Exact-arithmetic workbench for the invariant theory of permutation
//! groups: sparse polynomials over ℚ or F_p on the variable grid x_i^(j),
//! diagonal group actions, polarization with a closed-form leading-term
//! recursion, Gröbner bases of Hilbert ideals, coinvariant staircases, and
//! exact generating-degree computations.

pub mod experiment;
pub mod field;
pub mod groebner;
pub mod invariant;
pub mod linalg;
pub mod monomial;
pub mod parse;
pub mod perm;
pub mod polarize;
pub mod poly;

pub use experiment::{ExperimentReport, HarnessError, RunCaps};
pub use field::{Field, FieldError, FieldSpec, PrimeField, Rationals};
pub use groebner::{
    buchberger, buchberger_with, ideal_membership, minimal_generator_degrees, normal_form,
    staircase, BuchbergerConfig, GroebnerBasis, LeadIdeal, Staircase,
};
pub use invariant::{
    beta_exact, goebel_generators, hilbert_ideal_generators, noether_generators, orbit_sum,
    polarized_generators, reynolds, transfer, BetaReport, GeneratorStrategy, HilbertIdealGens,
    InvariantBasis,
};
pub use monomial::{Dims, Monomial, MonomialOrder, VarId};
pub use perm::{Permutation, PermutationGroup};
pub use polarize::{fast_lead, pol_k, polarize_full, theorem_family, MultiIndex, PolarizedFamily};
pub use poly::Polynomial;

/// Polynomials over the rationals, the workbench's default coefficient field.
pub type QPolynomial = Polynomial<Rationals>;

/// n choose 2, the degree bound recurring through all of the statements here.
pub fn binom2(n: usize) -> u32 {
    (n * n.saturating_sub(1) / 2) as u32
}
