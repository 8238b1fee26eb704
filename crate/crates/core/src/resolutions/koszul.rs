use std::collections::BTreeSet;

use rayon::prelude::*;

use super::table::{BettiTable, Convention};
use crate::complexcore::{link, MonomialIdeal, Multidegree, SimplicialComplex, VertexSet};
use crate::error::{Error, Result};
use crate::homology::{chain_homology, reduced_homology_ranks, HomologyRanks, PrimeField};

/// Largest `n` for which we enumerate all square-free degrees.
pub const EXHAUSTIVE_LIMIT: usize = 24;

fn koszul_faces(ideal: &MonomialIdeal, b: &Multidegree) -> Vec<VertexSet> {
    b.support()
        .subsets()
        .filter(|f| b.minus_face(*f).is_some_and(|m| ideal.contains(&m)))
        .collect()
}

/// The upper Koszul subcomplex `K_b(I) = {F : x^{b-F} ∈ I}`.
pub fn koszul_subcomplex(ideal: &MonomialIdeal, b: &Multidegree) -> Result<SimplicialComplex> {
    if b.n() != ideal.n() {
        return Err(Error::ArityMismatch {
            expected: ideal.n(),
            found: b.n(),
        });
    }
    Ok(SimplicialComplex::from_faces_unchecked(
        ideal.n(),
        koszul_faces(ideal, b),
    ))
}

/// All joins of nonempty subsets of the generators, sorted.
pub fn lcm_lattice(ideal: &MonomialIdeal) -> Vec<Multidegree> {
    let gens = ideal.gens();
    let mut lattice: BTreeSet<Multidegree> = gens.iter().cloned().collect();
    let mut frontier: Vec<Multidegree> = lattice.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for m in &frontier {
            for g in gens {
                let j = m.join(g);
                if !lattice.contains(&j) {
                    lattice.insert(j.clone());
                    next.push(j);
                }
            }
        }
        frontier = next;
    }
    lattice.into_iter().collect()
}

/// `β_{i,b}(I) = dim H̃_{i-1}(K_b(I); k)` over the lcm lattice, in the ideal
/// convention.
///
/// The zero ideal gives an empty table.
pub fn betti_via_koszul(ideal: &MonomialIdeal, field: &PrimeField) -> BettiTable {
    let lattice = lcm_lattice(ideal);
    let per_degree: Vec<(Multidegree, HomologyRanks)> = lattice
        .into_par_iter()
        .map(|b| {
            let h = chain_homology(&koszul_faces(ideal, &b), field);
            (b, h)
        })
        .collect();
    let mut table = BettiTable::new(ideal.n(), Convention::Ideal);
    for (b, h) in per_degree {
        for (d, r) in h.nonzero() {
            table.add((d + 1) as usize, b.clone(), r as u64);
        }
    }
    table
}

fn check_exhaustive(n: usize) -> Result<()> {
    if n > EXHAUSTIVE_LIMIT {
        Err(Error::TooLarge {
            n,
            limit: EXHAUSTIVE_LIMIT,
        })
    } else {
        Ok(())
    }
}

/// Betti numbers of `S/I_X` from full subcomplexes:
/// `β_{i,b}(S/I_X) = dim H̃_{|b|-i-1}(X_b; k)` for square-free `b`.
///
/// The void complex (unit ideal) gives an empty table.
pub fn hochster_betti(x: &SimplicialComplex, field: &PrimeField) -> Result<BettiTable> {
    let n = x.n();
    check_exhaustive(n)?;
    let mut table = BettiTable::new(n, Convention::Quotient);
    if x.is_void() {
        return Ok(table);
    }
    let faces = x.faces();
    let per_subset: Vec<(VertexSet, HomologyRanks)> = (0..(1u64 << n))
        .into_par_iter()
        .map(|bits| {
            let b = VertexSet::from_bits(bits);
            let restricted: Vec<VertexSet> =
                faces.iter().copied().filter(|f| f.is_subset(b)).collect();
            (b, chain_homology(&restricted, field))
        })
        .collect();
    for (b, h) in per_subset {
        for (d, r) in h.nonzero() {
            let i = b.len() as isize - d - 1;
            debug_assert!(i >= 0);
            table.add(i as usize, Multidegree::from_vertex_set(b, n), r as u64);
        }
    }
    Ok(table)
}

/// Betti numbers of `I_{X^∨}` from links in `X`, in the ideal convention:
/// `β^∨_{i,b} = dim H̃_{i-1}(lk(b^c, X); k)` when `b^c ∈ X`, zero otherwise.
pub fn dual_betti_via_links(x: &SimplicialComplex, field: &PrimeField) -> Result<BettiTable> {
    let n = x.n();
    check_exhaustive(n)?;
    let per_face: Vec<(VertexSet, HomologyRanks)> = x
        .faces()
        .into_par_iter()
        .map(|f| {
            let lk = link(f, x).expect("face of x");
            (f, reduced_homology_ranks(&lk, field))
        })
        .collect();
    let mut table = BettiTable::new(n, Convention::Ideal);
    for (f, h) in per_face {
        let b = Multidegree::from_vertex_set(f.complement(n), n);
        for (d, r) in h.nonzero() {
            table.add((d + 1) as usize, b.clone(), r as u64);
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexcore::{complex_of_ideal, stanley_reisner_ideal, ComplexKind};

    fn md(v: &[u32]) -> Multidegree {
        Multidegree::new(v.to_vec())
    }

    fn pentagon() -> SimplicialComplex {
        SimplicialComplex::from_facets(5, (0..5).map(|i| vec![i, (i + 1) % 5])).unwrap()
    }

    fn x2_xy() -> MonomialIdeal {
        MonomialIdeal::new(2, [md(&[2, 0]), md(&[1, 1])]).unwrap()
    }

    #[test]
    fn koszul_subcomplex_of_x2_xy() {
        let k = koszul_subcomplex(&x2_xy(), &md(&[2, 1])).unwrap();
        assert!(k.contains(VertexSet::EMPTY));
        assert!(k.contains(VertexSet::singleton(0)));
        assert!(k.contains(VertexSet::singleton(1)));
        assert!(!k.contains(VertexSet::from_vertices([0, 1])));
    }

    #[test]
    fn koszul_subcomplex_at_zero_and_cone() {
        let i = x2_xy();
        assert_eq!(
            koszul_subcomplex(&i, &md(&[0, 0])).unwrap().kind(),
            ComplexKind::Void
        );
        let unit = MonomialIdeal::unit(2);
        assert_eq!(
            koszul_subcomplex(&unit, &md(&[0, 0])).unwrap().kind(),
            ComplexKind::Irrelevant
        );
        // b_0 = 3 > 1: every facet contains vertex 0
        let k = koszul_subcomplex(&i, &md(&[3, 1])).unwrap();
        assert!(k.facets().iter().all(|f| f.contains(0)));
    }

    #[test]
    fn betti_of_x2_xy() {
        let t = betti_via_koszul(&x2_xy(), &PrimeField::default());
        let entries: Vec<_> = t.iter().map(|(i, b, v)| (i, b.clone(), v)).collect();
        assert_eq!(
            entries,
            vec![
                (0, md(&[2, 0]), 1),
                (0, md(&[1, 1]), 1),
                (1, md(&[2, 1]), 1)
            ]
        );
    }

    #[test]
    fn single_generator() {
        let i = MonomialIdeal::new(3, [md(&[1, 2, 0])]).unwrap();
        let t = betti_via_koszul(&i, &PrimeField::default());
        assert_eq!(t.len(), 1);
        assert_eq!(t.get(0, &md(&[1, 2, 0])), 1);
    }

    #[test]
    fn pentagon_tables_agree() {
        let k = PrimeField::default();
        let x = pentagon();
        let hochster = hochster_betti(&x, &k).unwrap();
        let koszul = betti_via_koszul(&stanley_reisner_ideal(&x).unwrap(), &k);
        assert_eq!(koszul.to_quotient(), hochster);
        let coarse = hochster.coarse();
        assert_eq!(coarse.get(1, 2), 5);
        assert_eq!(coarse.get(2, 3), 5);
        assert_eq!(coarse.get(3, 5), 1);
    }

    #[test]
    fn dual_tables_agree() {
        let k = PrimeField::default();
        let x = pentagon();
        let via_links = dual_betti_via_links(&x, &k).unwrap();
        let dual_ideal = crate::complexcore::alexander_dual_ideal(&x);
        assert_eq!(betti_via_koszul(&dual_ideal, &k), via_links);
        let q = via_links.to_quotient().coarse();
        assert_eq!((q.get(1, 3), q.get(2, 4), q.get(3, 5)), (5, 5, 1));
    }

    #[test]
    fn degenerate_complexes() {
        let k = PrimeField::default();
        // full simplex: zero ideal, dual is the unit ideal
        let d = SimplicialComplex::simplex(3);
        let t = hochster_betti(&d, &k).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t.get(0, &Multidegree::zero(3)), 1);
        let dual = dual_betti_via_links(&d, &k).unwrap();
        assert!(dual.to_quotient().is_empty());
        // void complex: unit ideal
        assert!(hochster_betti(&SimplicialComplex::void(3), &k)
            .unwrap()
            .is_empty());
        assert!(dual_betti_via_links(&SimplicialComplex::void(3), &k)
            .unwrap()
            .is_empty());
        // irrelevant complex: the maximal ideal, Koszul resolution
        let t = hochster_betti(&SimplicialComplex::irrelevant(3), &k).unwrap();
        assert_eq!(t.coarse().totals(), vec![1, 3, 3, 1]);
        let m = complex_of_ideal(
            &MonomialIdeal::from_faces(3, (0..3).map(VertexSet::singleton)).unwrap(),
        )
        .unwrap();
        assert_eq!(m.kind(), ComplexKind::Irrelevant);
    }

    #[test]
    fn exhaustive_limit_is_enforced() {
        let big = SimplicialComplex::simplex(30);
        assert!(matches!(
            hochster_betti(&big, &PrimeField::default()),
            Err(Error::TooLarge { .. })
        ));
    }
}
