//! Executable checks of the duality theorems for square-free monomial ideals
//! and of the Cohen–Macaulay, Gorenstein and doubly Cohen–Macaulay criteria.
//!
//! Every check returns a [`VerificationReport`]; a failing report carries a
//! [`Witness`] that pins down the single position that broke, so the check
//! can be rerun from the instance string, the characteristic and the witness.

mod properties;
mod report;
mod theorems;

pub use properties::{
    check_cohen_macaulay, check_doubly_cohen_macaulay, check_gorenstein,
    cm_by_projective_dimension, cm_by_reisner, doubly_cm_report, gorenstein_by_betti_table,
    gorenstein_by_links, is_cohen_macaulay, is_doubly_cohen_macaulay, is_gorenstein,
    DoublyCmReport,
};
pub use report::{Check, VerificationReport, Witness};
pub use theorems::{
    check_binomial_bound, check_dual_sum_bound, check_exact_sequence, check_exact_sequence_all,
    check_extremal_flip, check_terai, run_theorem_suite,
};
