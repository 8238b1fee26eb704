//! Simplicial complexes, square-free monomial ideals and the translations
//! between them.
//!
//! The four objects `X`, `I_X`, `X^∨` and `I_{X^∨}` are related by two kinds
//! of complementation: faces against non-faces, and subsets of `[n]` against
//! their complements. Both directions are computed by one routine: minimal
//! non-faces of `X` are the minimal transversals of the facet complements,
//! and facets of the complex of an ideal are the complements of the minimal
//! transversals of the generator supports.

mod complex;
mod ideal;
mod vertex_set;

pub use complex::{ComplexKind, SimplicialComplex};
pub use ideal::{polarization_map, polarize, MonomialIdeal, Multidegree};
pub use vertex_set::{Subsets, VertexSet, Vertices, MAX_VERTICES};

pub(crate) use complex::minimal_transversals;

use crate::error::{Error, Result};

/// The Stanley–Reisner ideal, generated by the minimal non-faces of `X`.
///
/// The void complex has `∅` as a non-face and so gives the unit ideal,
/// which is reported as [`Error::UnitIdeal`].
pub fn stanley_reisner_ideal(x: &SimplicialComplex) -> Result<MonomialIdeal> {
    if x.is_void() {
        return Err(Error::UnitIdeal);
    }
    let n = x.n();
    let complements: Vec<VertexSet> = x.facets().iter().map(|f| f.complement(n)).collect();
    MonomialIdeal::from_faces(n, minimal_transversals(&complements))
}

/// The complex whose faces are the square-free monomials outside `I`.
///
/// The unit ideal yields the void complex.
pub fn complex_of_ideal(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    let n = ideal.n();
    let supports = ideal.generator_faces()?;
    let facets = minimal_transversals(&supports)
        .into_iter()
        .map(|t| t.complement(n));
    Ok(SimplicialComplex::from_faces_unchecked(n, facets))
}

/// `I_{X^∨}`, generated by the complements of the facets of `X`.
///
/// For `X = Δ` this is the unit ideal; for the void complex, the zero ideal.
pub fn alexander_dual_ideal(x: &SimplicialComplex) -> MonomialIdeal {
    let n = x.n();
    MonomialIdeal::from_faces(n, x.facets().iter().map(|f| f.complement(n)))
        .expect("facet complements lie in [n]")
}

/// `X^∨ = {F : F^c ∉ X}`.
pub fn alexander_dual(x: &SimplicialComplex) -> SimplicialComplex {
    complex_of_ideal(&alexander_dual_ideal(x)).expect("dual ideal is square-free")
}

fn require_face(face: VertexSet, x: &SimplicialComplex) -> Result<()> {
    if x.contains(face) {
        Ok(())
    } else {
        Err(Error::FaceNotInComplex {
            face: face.to_string(),
        })
    }
}

/// `lk(F, X) = {G : F ∪ G ∈ X, F ∩ G = ∅}`, on the same ambient `[n]`.
pub fn link(face: VertexSet, x: &SimplicialComplex) -> Result<SimplicialComplex> {
    require_face(face, x)?;
    let facets = x
        .facets()
        .iter()
        .filter(|f| face.is_subset(**f))
        .map(|f| f.difference(face));
    Ok(SimplicialComplex::from_faces_unchecked(x.n(), facets))
}

/// `star(F, X) = {G : F ∪ G ∈ X}`.
pub fn star(face: VertexSet, x: &SimplicialComplex) -> Result<SimplicialComplex> {
    require_face(face, x)?;
    let facets = x.facets().iter().copied().filter(|f| face.is_subset(*f));
    Ok(SimplicialComplex::from_faces_unchecked(x.n(), facets))
}

/// The full subcomplex `X_b` on the support of a square-free degree `b`.
pub fn restriction(x: &SimplicialComplex, b: &Multidegree) -> Result<SimplicialComplex> {
    if b.n() != x.n() {
        return Err(Error::ArityMismatch {
            expected: x.n(),
            found: b.n(),
        });
    }
    if !b.is_square_free() {
        return Err(Error::NotSquareFree);
    }
    Ok(restrict_to(x, b.support()))
}

/// The full subcomplex on a vertex set.
pub fn restrict_to(x: &SimplicialComplex, support: VertexSet) -> SimplicialComplex {
    let facets = x.facets().iter().map(|f| f.intersection(support));
    SimplicialComplex::from_faces_unchecked(x.n(), facets)
}

/// Cone points: vertices lying in every facet.
pub fn cone_points(x: &SimplicialComplex) -> VertexSet {
    match x.facets().split_first() {
        None => VertexSet::EMPTY,
        Some((first, rest)) => rest.iter().fold(*first, |acc, f| acc.intersection(*f)),
    }
}

/// Repeatedly strips cone points until none remain.
pub fn core(x: &SimplicialComplex) -> SimplicialComplex {
    let mut current = x.clone();
    loop {
        let cone = cone_points(&current);
        if cone.is_empty() {
            return current;
        }
        let facets = current.facets().iter().map(|f| f.difference(cone));
        current = SimplicialComplex::from_faces_unchecked(current.n(), facets);
    }
}
