//! Polynomials over `GF(p)`, degrevlex Gröbner bases, generic initial ideals
//! and Betti numbers of arbitrary homogeneous ideals via the Koszul complex.
//!
//! ```
//! use extremal_core::ginlab::{gin, Polynomial};
//! use extremal_core::homology::PrimeField;
//!
//! let k = PrimeField::default();
//! let gens = vec![Polynomial::parse("x^2", 2, &k).unwrap(), Polynomial::parse("y^2", 2, &k).unwrap()];
//! assert_eq!(gin(&gens, 2, 0, &k).unwrap().to_string(), "x0^2, x0*x1, x1^3");
//! ```

mod change;
mod compare;
mod gin;
mod groebner;
mod polynomial;
mod tor;

pub use change::{generic_change, LinearChange};
pub use compare::{
    compare_corners, corner_report, depth_preservation_check, depth_report, gin_comparison,
    GinComparison,
};
pub use gin::{
    borel_check, borel_violation, gin, gin_of_monomial_ideal, initial_ideal_after,
    monomial_generators, GIN_ATTEMPTS,
};
pub use groebner::{buchberger, normal_form, s_polynomial, GroebnerBasis};
pub use polynomial::{degrevlex_compare, parse_terms, ParsedTerm, Polynomial, Term};
pub use tor::{betti_via_tor, betti_via_tor_gb, hilbert_values, standard_monomials};
