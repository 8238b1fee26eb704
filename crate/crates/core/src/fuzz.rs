//! Seeded random instances for property checks and the CLI `--fuzz` option.
//!
//! Every generator takes an explicit RNG; [`instance_rng`] turns a 64-bit
//! seed into one, so a failing instance is reproduced from its seed alone.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complexcore::{MonomialIdeal, Multidegree, SimplicialComplex, VertexSet};
use crate::ginlab::Polynomial;
use crate::homology::PrimeField;
use crate::resolutions::monomials_of_degree;

pub fn instance_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_subset<R: Rng>(rng: &mut R, n: usize, size: usize) -> VertexSet {
    VertexSet::from_vertices(sample(rng, n, size))
}

/// Between 1 and `2n` random facets of sizes `2..=n-1`, reduced to an
/// antichain. Needs `n >= 3`.
pub fn random_complex<R: Rng>(rng: &mut R, n: usize) -> SimplicialComplex {
    assert!(n >= 3, "random complexes need at least three vertices");
    let count = rng.random_range(1..=2 * n);
    let faces: Vec<VertexSet> = (0..count)
        .map(|_| {
            let size = rng.random_range(2..n);
            random_subset(rng, n, size)
        })
        .collect();
    SimplicialComplex::from_faces(n, faces).expect("faces lie in [n]")
}

/// A random square-free monomial ideal with between 1 and `n + 2` generators
/// of degrees `1..=n`, biased towards degree 2 and 3.
pub fn random_square_free_ideal<R: Rng>(rng: &mut R, n: usize) -> MonomialIdeal {
    let count = rng.random_range(1..=n + 2);
    let gens: Vec<Multidegree> = (0..count)
        .map(|_| {
            let size = if n >= 3 && rng.random_bool(0.8) {
                rng.random_range(2..=3)
            } else {
                rng.random_range(1..=n)
            };
            Multidegree::from_vertex_set(random_subset(rng, n, size), n)
        })
        .collect();
    MonomialIdeal::new(n, gens).expect("generators have arity n")
}

/// Pure powers `x_i^{a_i}` with `1 <= a_i <= max_degree`, plus up to four
/// further monomials of degree at most `max_degree`.
pub fn random_artinian_ideal<R: Rng>(rng: &mut R, n: usize, max_degree: u32) -> MonomialIdeal {
    let mut gens: Vec<Multidegree> = (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = rng.random_range(1..=max_degree);
            Multidegree::new(e)
        })
        .collect();
    for _ in 0..rng.random_range(0..=4) {
        let d = rng.random_range(1..=max_degree);
        let pool = monomials_of_degree(n, d);
        gens.push(pool[rng.random_range(0..pool.len())].clone());
    }
    MonomialIdeal::new(n, gens).expect("generators have arity n")
}

/// Between 1 and `max_gens` homogeneous polynomials of degrees `1..=max_degree`,
/// each a monomial (probability 2/5) or a combination of two to four monomials
/// with random nonzero coefficients. Sparse generators keep non-generic
/// resolutions, with several corners, in the mix. Linear forms are drawn with
/// probability 1/10 so that most instances keep all their variables.
pub fn random_homogeneous_ideal<R: Rng>(
    rng: &mut R,
    n: usize,
    max_gens: usize,
    max_degree: u32,
    field: &PrimeField,
) -> Vec<Polynomial> {
    let p = field.characteristic();
    (0..rng.random_range(1..=max_gens))
        .map(|_| {
            let d = if max_degree >= 2 && rng.random_bool(0.9) {
                rng.random_range(2..=max_degree)
            } else {
                1
            };
            let pool = monomials_of_degree(n, d);
            let terms = if pool.len() == 1 || rng.random_bool(0.4) {
                1
            } else {
                rng.random_range(2..=4.min(pool.len()))
            };
            let picks = sample(rng, pool.len(), terms);
            Polynomial::from_terms(
                field,
                n,
                picks
                    .into_iter()
                    .map(|k| (i64::from(rng.random_range(1..p)), pool[k].clone()))
                    .collect::<Vec<_>>(),
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complexes_are_reproducible_and_proper() {
        for seed in 0..50 {
            let n = 3 + (seed as usize % 6);
            let a = random_complex(&mut instance_rng(seed), n);
            let b = random_complex(&mut instance_rng(seed), n);
            assert_eq!(a, b);
            assert!(!a.is_void());
            assert!(a.facets().iter().all(|f| f.len() >= 2 && f.len() < n));
        }
    }

    #[test]
    fn artinian_ideals_are_artinian() {
        let mut rng = instance_rng(7);
        for _ in 0..50 {
            let ideal = random_artinian_ideal(&mut rng, 3, 4);
            assert!(ideal.is_artinian());
            assert!(ideal.max_generator_degree().unwrap() <= 4);
        }
    }

    #[test]
    fn homogeneous_ideals_are_homogeneous() {
        let k = PrimeField::default();
        let mut rng = instance_rng(3);
        for _ in 0..50 {
            let gens = random_homogeneous_ideal(&mut rng, 4, 4, 3, &k);
            assert!(!gens.is_empty() && gens.len() <= 4);
            assert!(gens.iter().all(|g| g.is_homogeneous() && !g.is_zero()));
        }
    }

    #[test]
    fn square_free_ideals() {
        let mut rng = instance_rng(11);
        for _ in 0..50 {
            let ideal = random_square_free_ideal(&mut rng, 6);
            assert!(ideal.is_square_free() && !ideal.is_zero());
        }
    }
}
