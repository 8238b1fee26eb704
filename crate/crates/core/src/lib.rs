//! Exact computation of multigraded Betti numbers, extremal Betti numbers,
//! regularity and Alexander-duality invariants of monomial ideals and
//! simplicial complexes over prime fields.
//!
//! The crate is organised bottom-up:
//!
//! * [`complexcore`]: simplicial complexes on at most 64 vertices, monomial
//!   ideals, Stanley–Reisner translation, Alexander duality, links, stars,
//!   restrictions, cores and polarization.
//! * [`homology`]: reduced and relative simplicial homology ranks over
//!   `GF(p)` by dense elimination on boundary matrices.
//! * [`resolutions`]: Betti tables via Hochster's formula and the upper
//!   Koszul subcomplex, with regularity, corners and extremal positions.
//! * [`dualitylab`]: executable checks of the duality inequalities, corner
//!   flipping, Cohen–Macaulay and Gorenstein criteria.
//! * [`ginlab`]: a degrevlex Buchberger engine, generic initial ideals and
//!   Koszul-complex Betti numbers of arbitrary homogeneous ideals.
//! * [`cli`]: the text input format and the `extremal` command front end.
//!
//! ```
//! use extremal_core::complexcore::SimplicialComplex;
//! use extremal_core::homology::PrimeField;
//! use extremal_core::resolutions::hochster_betti;
//!
//! let pentagon = SimplicialComplex::from_facets(
//!     5,
//!     [[0, 1], [1, 2], [2, 3], [3, 4], [0, 4]].iter().map(|f| f.to_vec()),
//! )
//! .unwrap();
//! let table = hochster_betti(&pentagon, &PrimeField::default()).unwrap();
//! assert_eq!(table.coarse().totals(), vec![1, 5, 5, 1]);
//! ```

pub mod cli;
pub mod complexcore;
pub mod dualitylab;
pub mod error;
pub mod fuzz;
pub mod ginlab;
pub mod homology;
pub mod resolutions;

pub use error::{Error, Result};
