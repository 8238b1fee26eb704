use serde::{Deserialize, Serialize};

use super::koszul::betti_via_koszul;
use crate::complexcore::{MonomialIdeal, Multidegree};
use crate::error::{Error, Result};
use crate::homology::PrimeField;

/// All exponent vectors of total degree `d` in `n` variables, largest first
/// in degrevlex.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Multidegree> {
    fn fill(prefix: &mut Vec<u32>, n: usize, remaining: u32, out: &mut Vec<Multidegree>) {
        if prefix.len() + 1 == n {
            prefix.push(remaining);
            out.push(Multidegree::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=remaining).rev() {
            prefix.push(e);
            fill(prefix, n, remaining - e, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Multidegree::zero(0));
        }
        return out;
    }
    fill(&mut Vec::with_capacity(n), n, d, &mut out);
    out.sort_by(|a, b| b.degrevlex_cmp(a));
    out
}

/// `dim_k (S/I)_d` for `d = 0 ..= d_max`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertFunction {
    pub values: Vec<u64>,
}

impl HilbertFunction {
    /// Last degree with a nonzero value and that value.
    pub fn last_nonzero(&self) -> Option<(usize, u64)> {
        self.values
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &v)| v > 0)
            .map(|(d, &v)| (d, v))
    }
}

/// Counts standard monomials (those outside `I`) degree by degree.
pub fn hilbert_function(ideal: &MonomialIdeal, d_max: usize) -> HilbertFunction {
    let values = (0..=d_max as u32)
        .map(|d| {
            monomials_of_degree(ideal.n(), d)
                .iter()
                .filter(|m| !ideal.contains(m))
                .count() as u64
        })
        .collect();
    HilbertFunction { values }
}

/// Checks that a finite-colength monomial ideal has exactly one corner, at
/// `l = n`, sitting at the last nonzero degree of the Hilbert function of
/// `S/I` and carrying that Hilbert value.
pub fn artinian_extremal_check(ideal: &MonomialIdeal, field: &PrimeField) -> Result<bool> {
    if !ideal.is_artinian() {
        return Err(Error::NotArtinian);
    }
    let n = ideal.n();
    // the socle degree is at most Σ (e_j - 1) over the pure powers x_j^{e_j}
    let socle_bound: u32 = (0..n)
        .map(|j| {
            ideal
                .gens()
                .iter()
                .filter(|g| g.support().len() == 1 && g.get(j) > 0)
                .map(|g| g.get(j) - 1)
                .min()
                .unwrap_or(0)
        })
        .sum();
    let hilbert = hilbert_function(ideal, socle_bound as usize + 1);
    let Some((last_degree, last_value)) = hilbert.last_nonzero() else {
        return Ok(false);
    };
    let corners = betti_via_koszul(ideal, field)
        .to_quotient()
        .coarse()
        .corners();
    Ok(matches!(
        corners.as_slice(),
        [c] if c.l == n && c.m == last_degree as i64 && c.value == last_value
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn md(v: &[u32]) -> Multidegree {
        Multidegree::new(v.to_vec())
    }

    #[test]
    fn monomial_enumeration() {
        let ms = monomials_of_degree(3, 2);
        assert_eq!(ms.len(), 6);
        assert_eq!(ms[0], md(&[2, 0, 0]));
        assert_eq!(monomials_of_degree(0, 0).len(), 1);
        assert!(monomials_of_degree(0, 1).is_empty());
    }

    #[test]
    fn hilbert_of_complete_intersection() {
        // standard monomials 1, x, y, xy
        let i = MonomialIdeal::new(2, [md(&[2, 0]), md(&[0, 2])]).unwrap();
        let h = hilbert_function(&i, 4);
        assert_eq!(h.values, vec![1, 2, 1, 0, 0]);
        assert_eq!(h.last_nonzero(), Some((2, 1)));
    }

    #[test]
    fn hilbert_of_zero_and_maximal_ideal() {
        assert_eq!(
            hilbert_function(&MonomialIdeal::zero(2), 3).values,
            vec![1, 2, 3, 4]
        );
        let m = MonomialIdeal::new(
            3,
            (0..3).map(|j| {
                let mut e = vec![0; 3];
                e[j] = 1;
                Multidegree::new(e)
            }),
        )
        .unwrap();
        assert_eq!(hilbert_function(&m, 3).values, vec![1, 0, 0, 0]);
    }

    #[test]
    fn artinian_examples() {
        let k = PrimeField::default();
        let ci = MonomialIdeal::new(2, [md(&[2, 0]), md(&[0, 2])]).unwrap();
        assert!(artinian_extremal_check(&ci, &k).unwrap());
        let corner = betti_via_koszul(&ci, &k).to_quotient().coarse().corners();
        assert_eq!((corner[0].l, corner[0].m, corner[0].value), (2, 2, 1));

        let m = MonomialIdeal::new(2, [md(&[1, 0]), md(&[0, 1])]).unwrap();
        assert!(artinian_extremal_check(&m, &k).unwrap());
        let corner = betti_via_koszul(&m, &k).to_quotient().coarse().corners();
        assert_eq!((corner[0].l, corner[0].m, corner[0].value), (2, 0, 1));

        let sq = MonomialIdeal::new(2, [md(&[2, 0]), md(&[1, 1]), md(&[0, 2])]).unwrap();
        assert!(artinian_extremal_check(&sq, &k).unwrap());
        let corner = betti_via_koszul(&sq, &k).to_quotient().coarse().corners();
        assert_eq!((corner[0].l, corner[0].m, corner[0].value), (2, 1, 2));
    }

    #[test]
    fn non_artinian_is_rejected() {
        let i = MonomialIdeal::new(2, [md(&[2, 0]), md(&[1, 1])]).unwrap();
        assert_eq!(
            artinian_extremal_check(&i, &PrimeField::default()),
            Err(Error::NotArtinian)
        );
    }
}
