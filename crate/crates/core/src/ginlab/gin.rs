use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::change::LinearChange;
use super::groebner::{buchberger, prepare};
use super::polynomial::Polynomial;
use crate::complexcore::{MonomialIdeal, Multidegree};
use crate::error::{Error, Result};
use crate::homology::PrimeField;

/// Number of seed pairs tried before giving up.
pub const GIN_ATTEMPTS: usize = 4;

/// Degrevlex initial ideal of `gens` in the coordinates given by `change`.
pub fn initial_ideal_after(
    gens: &[Polynomial],
    change: &LinearChange,
    field: &PrimeField,
) -> Result<MonomialIdeal> {
    let moved = change.apply_all(gens, field)?;
    Ok(buchberger(&moved, change.n(), field)?.leading_ideal())
}

/// Generic initial ideal in degrevlex.
///
/// Two coordinate changes drawn from independent seeds must give the same
/// initial ideal. Seed pairs come from a ChaCha8 stream keyed by `seed`; after
/// [`GIN_ATTEMPTS`] disagreeing pairs the last two candidates are returned in
/// [`Error::GinUnstable`].
pub fn gin(gens: &[Polynomial], n: usize, seed: u64, field: &PrimeField) -> Result<MonomialIdeal> {
    let gens = prepare(gens, n, field)?;
    if gens.is_empty() {
        return Ok(MonomialIdeal::zero(n));
    }
    let mut stream = ChaCha8Rng::seed_from_u64(seed);
    let mut last = None;
    for _ in 0..GIN_ATTEMPTS {
        let (s1, s2): (u64, u64) = (stream.random(), stream.random());
        let a = initial_ideal_after(&gens, &LinearChange::random(n, s1, field), field)?;
        let b = initial_ideal_after(&gens, &LinearChange::random(n, s2, field), field)?;
        if a == b {
            return Ok(a);
        }
        last = Some((a, b));
    }
    let (first, second) = last.expect("at least one attempt");
    Err(Error::GinUnstable {
        first: Box::new(first),
        second: Box::new(second),
    })
}

/// Generic initial ideal of a monomial ideal.
pub fn gin_of_monomial_ideal(
    ideal: &MonomialIdeal,
    seed: u64,
    field: &PrimeField,
) -> Result<MonomialIdeal> {
    gin(&monomial_generators(ideal, field), ideal.n(), seed, field)
}

pub fn monomial_generators(ideal: &MonomialIdeal, field: &PrimeField) -> Vec<Polynomial> {
    ideal
        .gens()
        .iter()
        .map(|g| Polynomial::monomial(field, 1, g.clone()))
        .collect()
}

/// First violation of strong stability: a generator `m`, and `i < j` with
/// `x_j | m` but `x_i m / x_j ∉ J`.
pub fn borel_violation(ideal: &MonomialIdeal) -> Option<(Multidegree, usize, usize)> {
    let n = ideal.n();
    for m in ideal.gens() {
        for j in 0..n {
            if m.get(j) == 0 {
                continue;
            }
            for i in 0..j {
                let mut e = m.exps().to_vec();
                e[j] -= 1;
                e[i] += 1;
                if !ideal.contains(&Multidegree::new(e)) {
                    return Some((m.clone(), i, j));
                }
            }
        }
    }
    None
}

/// Whether `ideal` is strongly stable. In characteristic `p` larger than every
/// generator degree this is the same as being Borel-fixed; smaller `p` is
/// rejected.
pub fn borel_check(ideal: &MonomialIdeal, p: u32) -> Result<bool> {
    if let Some(d) = ideal.max_generator_degree() {
        if p <= d {
            return Err(Error::InvalidArgument(format!(
                "characteristic {p} does not exceed the generator degree {d}"
            )));
        }
    }
    Ok(borel_violation(ideal).is_none())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k() -> PrimeField {
        PrimeField::default()
    }

    fn polys(texts: &[&str], n: usize) -> Vec<Polynomial> {
        texts
            .iter()
            .map(|t| Polynomial::parse(t, n, &k()).unwrap())
            .collect()
    }

    #[test]
    fn gin_of_a_product_of_variables() {
        let g = gin(&polys(&["xy"], 2), 2, 1, &k()).unwrap();
        assert_eq!(g.to_string(), "x0^2");
    }

    #[test]
    fn gin_of_complete_intersection() {
        let g = gin(&polys(&["x^2", "y^2"], 2), 2, 5, &k()).unwrap();
        assert_eq!(g.to_string(), "x0^2, x0*x1, x1^3");
    }

    #[test]
    fn borel_fixed_ideal_is_its_own_gin() {
        let g = gin(&polys(&["x^2", "xy"], 2), 2, 9, &k()).unwrap();
        assert_eq!(g.to_string(), "x0^2, x0*x1");
    }

    #[test]
    fn gin_is_seed_independent() {
        let gens = polys(&["x0*x1 - x2^2", "x1*x2^2"], 3);
        let a = gin(&gens, 3, 1, &k()).unwrap();
        for seed in 2..6 {
            assert_eq!(gin(&gens, 3, seed, &k()).unwrap(), a);
        }
        assert_eq!(borel_check(&a, 32003), Ok(true));
    }

    #[test]
    fn zero_and_inhomogeneous() {
        assert!(gin(&[], 3, 0, &k()).unwrap().is_zero());
        assert!(matches!(
            gin(&polys(&["x + y^2"], 2), 2, 0, &k()),
            Err(Error::NotHomogeneous(_))
        ));
    }

    #[test]
    fn borel_examples() {
        let m = |e: Vec<u32>| Multidegree::new(e);
        let good = MonomialIdeal::new(2, [m(vec![2, 0]), m(vec![1, 1]), m(vec![0, 3])]).unwrap();
        assert_eq!(borel_check(&good, 32003), Ok(true));
        let bad = MonomialIdeal::new(2, [m(vec![0, 2])]).unwrap();
        assert_eq!(borel_check(&bad, 32003), Ok(false));
        assert_eq!(borel_violation(&bad), Some((m(vec![0, 2]), 0, 1)));
        assert!(borel_check(&good, 3).is_err());
    }
}
