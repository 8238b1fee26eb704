use std::collections::HashMap;

use rayon::prelude::*;

use super::groebner::{buchberger, GroebnerBasis};
use super::polynomial::Polynomial;
use crate::complexcore::{MonomialIdeal, Multidegree, VertexSet};
use crate::error::{Error, Result};
use crate::homology::{Matrix, PrimeField};
use crate::resolutions::{monomials_of_degree, BettiDiagram, Convention};

/// Monomials of degree `d` outside the leading ideal, in degrevlex-descending
/// order. They form a basis of `(S/I)_d`.
pub fn standard_monomials(leading: &MonomialIdeal, d: u32) -> Vec<Multidegree> {
    monomials_of_degree(leading.n(), d)
        .into_iter()
        .filter(|m| !leading.contains(m))
        .collect()
}

/// `dim_k (S/I)_d` for `d = 0..=d_max`, read off the standard monomials of a
/// Gröbner basis.
pub fn hilbert_values(gb: &GroebnerBasis, d_max: u32) -> Vec<u64> {
    let lead = gb.leading_ideal();
    (0..=d_max)
        .map(|d| standard_monomials(&lead, d).len() as u64)
        .collect()
}

/// Multiplication by variables on `S/I`, one degree at a time.
struct QuotientRing {
    n: usize,
    /// `basis[e]`: standard monomials of degree `e`.
    basis: Vec<Vec<Multidegree>>,
    /// `mult[e][k][j]`: coordinates of `x_j · basis[e][k]` in `basis[e+1]`.
    mult: Vec<Vec<Vec<Vec<(usize, u32)>>>>,
}

impl QuotientRing {
    fn new(gb: &GroebnerBasis, top: u32, field: &PrimeField) -> Self {
        let n = gb.n();
        let lead = gb.leading_ideal();
        let basis: Vec<Vec<Multidegree>> =
            (0..=top).map(|d| standard_monomials(&lead, d)).collect();
        let index: Vec<HashMap<&Multidegree, usize>> = basis
            .iter()
            .map(|b| b.iter().enumerate().map(|(k, m)| (m, k)).collect())
            .collect();
        let mult = (0..top as usize)
            .map(|e| {
                basis[e]
                    .par_iter()
                    .map(|m| {
                        (0..n)
                            .map(|j| {
                                let nf = gb.normal_form(&Polynomial::monomial(
                                    field,
                                    1,
                                    m.with_increment(j),
                                ));
                                nf.terms()
                                    .iter()
                                    .map(|t| (index[e + 1][&t.mono], t.coeff))
                                    .collect()
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        QuotientRing { n, basis, mult }
    }

    fn dim(&self, e: i64) -> usize {
        if e < 0 {
            0
        } else {
            self.basis.get(e as usize).map_or(0, Vec::len)
        }
    }
}

/// Subsets of `[n]` of size `i`, as bitmasks in increasing order.
fn wedge_basis(n: usize, i: usize) -> Vec<VertexSet> {
    VertexSet::full(n)
        .subsets()
        .filter(|s| s.len() == i)
        .collect()
}

/// Rank of the Koszul differential `Λ^i ⊗ (S/I)_{d-i} → Λ^{i-1} ⊗ (S/I)_{d-i+1}`.
fn koszul_rank(
    ring: &QuotientRing,
    wedges: &[Vec<VertexSet>],
    i: usize,
    d: i64,
    field: &PrimeField,
) -> usize {
    if i == 0 || i > ring.n {
        return 0;
    }
    let e = d - i as i64;
    let (src_dim, dst_dim) = (ring.dim(e), ring.dim(e + 1));
    if src_dim == 0 || dst_dim == 0 {
        return 0;
    }
    let e = e as usize;
    let rows_index: HashMap<VertexSet, usize> = wedges[i - 1]
        .iter()
        .enumerate()
        .map(|(k, s)| (*s, k))
        .collect();
    let mut m = Matrix::zeros(wedges[i - 1].len() * dst_dim, wedges[i].len() * src_dim);
    for (a, wedge) in wedges[i].iter().enumerate() {
        for (t, j) in wedge.iter().enumerate() {
            let row_block = rows_index[&wedge.without(j)] * dst_dim;
            let negate = t % 2 == 1;
            for k in 0..src_dim {
                let col = a * src_dim + k;
                for &(r, c) in &ring.mult[e][k][j] {
                    let c = if negate { field.neg(c) } else { c };
                    m.set(row_block + r, col, c);
                }
            }
        }
    }
    m.rank(field)
}

/// Graded Betti numbers of `S/I` for `I = (gens)`, in total degrees up to
/// `degree_bound`, as homology of the Koszul complex `Λ^• k^n ⊗ S/I`.
pub fn betti_via_tor(
    gens: &[Polynomial],
    n: usize,
    field: &PrimeField,
    degree_bound: u32,
) -> Result<BettiDiagram> {
    let gb = buchberger(gens, n, field)?;
    betti_via_tor_gb(&gb, field, degree_bound)
}

/// [`betti_via_tor`] from a precomputed Gröbner basis.
pub fn betti_via_tor_gb(
    gb: &GroebnerBasis,
    field: &PrimeField,
    degree_bound: u32,
) -> Result<BettiDiagram> {
    let n = gb.n();
    if let Some(d) = gb.basis().iter().filter_map(Polynomial::degree).max() {
        if degree_bound < d {
            return Err(Error::InvalidArgument(format!(
                "degree bound {degree_bound} is below the generator degree {d}"
            )));
        }
    }
    let ring = QuotientRing::new(gb, degree_bound + 1, field);
    let wedges: Vec<Vec<VertexSet>> = (0..=n).map(|i| wedge_basis(n, i)).collect();
    let cells: Vec<(usize, i64)> = (0..=degree_bound as i64)
        .flat_map(|d| (0..=n.min(d as usize)).map(move |i| (i, d)))
        .collect();
    let ranks: HashMap<(usize, i64), usize> = cells
        .par_iter()
        .flat_map_iter(|&(i, d)| [(i, d), (i + 1, d)])
        .map(|(i, d)| ((i, d), koszul_rank(&ring, &wedges, i, d, field)))
        .collect();
    let mut diagram = BettiDiagram::new(Convention::Quotient);
    for &(i, d) in &cells {
        let dim = wedges[i].len() * ring.dim(d - i as i64);
        let beta = dim - ranks[&(i, d)] - ranks[&(i + 1, d)];
        if beta > 0 {
            diagram.add(i, d as u32, beta as u64);
        }
    }
    Ok(diagram)
}
