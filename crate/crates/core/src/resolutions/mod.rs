//! Betti tables of monomial ideals and the invariants read off them.
//!
//! Two independent routes produce multigraded tables: the upper Koszul
//! subcomplexes `K_b(I)` over the lcm lattice (any monomial ideal) and
//! full subcomplexes `X_b` (Stanley–Reisner ideals). Links give the table of
//! the Alexander dual ideal without constructing it.

mod extremal;
mod hilbert;
mod koszul;
mod table;

pub use extremal::{
    corners, depth_via_auslander_buchsbaum, has_linear_resolution, is_coarse_extremal,
    is_i_extremal, is_multigraded_extremal, l_regularity, multigraded_extremal,
    projective_dimension, regularity,
};
pub use hilbert::{
    artinian_extremal_check, hilbert_function, monomials_of_degree, HilbertFunction,
};
pub use koszul::{
    betti_via_koszul, dual_betti_via_links, hochster_betti, koszul_subcomplex, lcm_lattice,
    EXHAUSTIVE_LIMIT,
};
pub use table::{BettiDiagram, BettiEntry, BettiTable, Convention, Corner};

/// Coarse diagram of a multigraded table.
pub fn coarse_diagram(table: &BettiTable) -> BettiDiagram {
    table.coarse()
}
