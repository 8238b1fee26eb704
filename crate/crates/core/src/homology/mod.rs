//! Reduced and relative simplicial homology ranks over `GF(p)`.
//!
//! Chains are the augmented oriented chain complex: the empty face sits in
//! dimension -1 and `∂_0` is the augmentation. A face is oriented by its
//! ascending vertex list and `∂F = Σ_j (-1)^j (F minus its j-th smallest
//! vertex)`.

mod field;
mod matrix;

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

pub use field::PrimeField;
pub use matrix::{matrix_rank, Matrix};

use crate::complexcore::{SimplicialComplex, VertexSet};
use crate::error::{Error, Result};

/// `dim H_i` for `i = -1, 0, 1, …`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct HomologyRanks {
    /// `ranks[k]` is the rank in dimension `k - 1`.
    ranks: Vec<usize>,
}

impl HomologyRanks {
    pub fn from_ranks(ranks: Vec<usize>) -> Self {
        let mut h = HomologyRanks { ranks };
        h.trim();
        h
    }

    fn trim(&mut self) {
        while self.ranks.last() == Some(&0) {
            self.ranks.pop();
        }
    }

    /// Rank in dimension `i`; zero outside the computed range.
    pub fn get(&self, i: isize) -> usize {
        if i < -1 {
            return 0;
        }
        self.ranks.get((i + 1) as usize).copied().unwrap_or(0)
    }

    /// `(dimension, rank)` pairs with nonzero rank.
    pub fn nonzero(&self) -> impl Iterator<Item = (isize, usize)> + '_ {
        self.ranks
            .iter()
            .enumerate()
            .filter(|(_, &r)| r > 0)
            .map(|(k, &r)| (k as isize - 1, r))
    }

    pub fn is_acyclic(&self) -> bool {
        self.ranks.iter().all(|&r| r == 0)
    }

    /// Highest dimension with nonzero rank.
    pub fn top(&self) -> Option<isize> {
        self.nonzero().map(|(i, _)| i).last()
    }

    /// `Σ (-1)^i dim H_i` over `i >= -1`.
    pub fn euler_characteristic(&self) -> i64 {
        self.nonzero()
            .map(|(i, r)| {
                if i.rem_euclid(2) == 0 {
                    r as i64
                } else {
                    -(r as i64)
                }
            })
            .sum()
    }

    /// Ranks from dimension -1 upward, trailing zeros removed.
    pub fn as_slice(&self) -> &[usize] {
        &self.ranks
    }
}

/// A boundary map `∂_d : C_d → C_{d-1}` with its row and column faces.
#[derive(Debug, Clone)]
pub struct BoundaryMatrix {
    /// Faces of dimension `d - 1`, in face order.
    pub rows: Vec<VertexSet>,
    /// Faces of dimension `d`, in face order.
    pub cols: Vec<VertexSet>,
    pub matrix: Matrix,
}

/// `∂_d` of the augmented chain complex of `x`, for `d >= 0`.
pub fn boundary_matrix(x: &SimplicialComplex, d: usize, field: &PrimeField) -> BoundaryMatrix {
    let faces = x.faces();
    let rows: Vec<VertexSet> = faces.iter().copied().filter(|f| f.len() == d).collect();
    let cols: Vec<VertexSet> = faces.iter().copied().filter(|f| f.len() == d + 1).collect();
    let index: HashMap<VertexSet, usize> = rows.iter().enumerate().map(|(k, f)| (*f, k)).collect();
    let matrix = boundary_block(&cols, &index, rows.len(), field);
    BoundaryMatrix { rows, cols, matrix }
}

fn boundary_block(
    cols: &[VertexSet],
    row_index: &HashMap<VertexSet, usize>,
    nrows: usize,
    field: &PrimeField,
) -> Matrix {
    let mut m = Matrix::zeros(nrows, cols.len());
    let minus_one = field.neg(1);
    for (c, face) in cols.iter().enumerate() {
        for (j, v) in face.iter().enumerate() {
            if let Some(&r) = row_index.get(&face.without(v)) {
                m.set(r, c, if j % 2 == 0 { 1 } else { minus_one });
            }
        }
    }
    m
}

/// Homology of the chain complex spanned by `faces`, which must be closed
/// under taking boundary faces modulo faces left out (a relative chain
/// complex). Faces are grouped by cardinality; `∂` drops absent faces.
pub(crate) fn chain_homology(faces: &[VertexSet], field: &PrimeField) -> HomologyRanks {
    let max_len = match faces.iter().map(|f| f.len()).max() {
        None => return HomologyRanks::default(),
        Some(m) => m,
    };
    let mut layers: Vec<Vec<VertexSet>> = vec![Vec::new(); max_len + 1];
    for f in faces {
        layers[f.len()].push(*f);
    }
    for layer in &mut layers {
        layer.sort();
    }
    // ranks_of_d[k] = rank of ∂ from layer k to layer k-1
    let mut boundary_ranks = vec![0usize; max_len + 2];
    for k in 1..=max_len {
        if layers[k].is_empty() || layers[k - 1].is_empty() {
            continue;
        }
        let index: HashMap<VertexSet, usize> = layers[k - 1]
            .iter()
            .enumerate()
            .map(|(i, f)| (*f, i))
            .collect();
        let m = boundary_block(&layers[k], &index, layers[k - 1].len(), field);
        boundary_ranks[k] = m.rank(field);
    }
    let ranks = (0..=max_len)
        .map(|k| layers[k].len() - boundary_ranks[k] - boundary_ranks[k + 1])
        .collect();
    HomologyRanks::from_ranks(ranks)
}

/// `dim H̃_i(X; k)` for `i = -1 ..= dim X`.
///
/// The void complex has no chains and returns an empty sequence; the
/// irrelevant complex has `H̃_{-1} = k`.
pub fn reduced_homology_ranks(x: &SimplicialComplex, field: &PrimeField) -> HomologyRanks {
    chain_homology(&x.faces(), field)
}

/// `dim H_i(X, A; k)` from the quotient of augmented chain complexes.
///
/// When `A` is void the empty face survives and the result is the reduced
/// homology of `X`.
pub fn relative_homology_ranks(
    x: &SimplicialComplex,
    a: &SimplicialComplex,
    field: &PrimeField,
) -> Result<HomologyRanks> {
    if a.n() != x.n() || !a.is_subcomplex_of(x) {
        return Err(Error::NotSubcomplex);
    }
    let faces: Vec<VertexSet> = x.faces().into_iter().filter(|f| !a.contains(*f)).collect();
    Ok(chain_homology(&faces, field))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexcore::{complex_of_ideal, link, star, MonomialIdeal};

    fn pentagon() -> SimplicialComplex {
        SimplicialComplex::from_facets(5, (0..5).map(|i| vec![i, (i + 1) % 5])).unwrap()
    }

    fn torus() -> SimplicialComplex {
        let gens = (0..7).flat_map(|i| {
            [[0, 1, 2], [0, 1, 4], [0, 2, 4]]
                .into_iter()
                .map(move |s| VertexSet::from_vertices(s.iter().map(|d| (i + d) % 7)))
        });
        complex_of_ideal(&MonomialIdeal::from_faces(7, gens).unwrap()).unwrap()
    }

    #[test]
    fn circle_homology() {
        let h = reduced_homology_ranks(&pentagon(), &PrimeField::default());
        assert_eq!(h.get(0), 0);
        assert_eq!(h.get(1), 1);
        assert_eq!(h.get(-1), 0);
    }

    #[test]
    fn torus_homology_in_two_characteristics() {
        let x = torus();
        assert_eq!(x.facets().len(), 14);
        for p in [2, 3, 32003] {
            let h = reduced_homology_ranks(&x, &PrimeField::new(p).unwrap());
            assert_eq!((h.get(0), h.get(1), h.get(2)), (0, 2, 1), "p = {p}");
        }
    }

    #[test]
    fn irrelevant_and_void() {
        let k = PrimeField::default();
        let h = reduced_homology_ranks(&SimplicialComplex::irrelevant(3), &k);
        assert_eq!(h.as_slice(), &[1]);
        assert!(reduced_homology_ranks(&SimplicialComplex::void(3), &k)
            .as_slice()
            .is_empty());
        assert!(reduced_homology_ranks(&SimplicialComplex::simplex(4), &k).is_acyclic());
    }

    #[test]
    fn boundary_squares_to_zero() {
        let k = PrimeField::default();
        let x = torus();
        for d in 1..=2 {
            let outer = boundary_matrix(&x, d, &k);
            let inner = boundary_matrix(&x, d + 1, &k);
            assert!(outer.matrix.mul(&inner.matrix, &k).is_zero());
        }
    }

    #[test]
    fn relative_homology_basics() {
        let k = PrimeField::default();
        let p = pentagon();
        assert!(relative_homology_ranks(&p, &p, &k).unwrap().is_acyclic());
        let edge = SimplicialComplex::from_facets(2, [vec![0, 1]]).unwrap();
        let vertex = SimplicialComplex::from_facets(2, [vec![0]]).unwrap();
        assert!(relative_homology_ranks(&edge, &vertex, &k)
            .unwrap()
            .is_acyclic());
        assert_eq!(
            relative_homology_ranks(&vertex, &edge, &k),
            Err(Error::NotSubcomplex)
        );
        let h = relative_homology_ranks(&p, &SimplicialComplex::void(5), &k).unwrap();
        assert_eq!(h, reduced_homology_ranks(&p, &k));
    }

    #[test]
    fn relative_pair_matches_link_shift() {
        // (star(v), lk(v)) has H_i = H̃_{i-1}(lk)
        let k = PrimeField::default();
        let x = torus();
        let v = VertexSet::singleton(3);
        let st = star(v, &x).unwrap();
        let lk = link(v, &x).unwrap();
        let rel = relative_homology_ranks(&st, &lk, &k).unwrap();
        let h = reduced_homology_ranks(&lk, &k);
        for i in -1..4 {
            assert_eq!(rel.get(i), h.get(i - 1));
        }
    }
}
