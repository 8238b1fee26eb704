use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::polynomial::Polynomial;
use crate::complexcore::Multidegree;
use crate::error::{Error, Result};
use crate::homology::PrimeField;

/// An invertible linear substitution `x_j ↦ Σ_i M[i][j] x_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearChange {
    n: usize,
    matrix: Vec<Vec<u32>>,
    /// Seed the matrix was drawn from, if random.
    seed: Option<u64>,
}

impl LinearChange {
    pub fn identity(n: usize) -> Self {
        let matrix = (0..n)
            .map(|i| (0..n).map(|j| u32::from(i == j)).collect())
            .collect();
        LinearChange {
            n,
            matrix,
            seed: None,
        }
    }

    /// Uniform entries from a ChaCha8 stream; singular draws are discarded.
    pub fn random(n: usize, seed: u64, field: &PrimeField) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = field.characteristic();
        loop {
            let matrix: Vec<Vec<u32>> = (0..n)
                .map(|_| (0..n).map(|_| rng.random_range(0..p)).collect())
                .collect();
            let change = LinearChange {
                n,
                matrix,
                seed: Some(seed),
            };
            if change.determinant(field) != 0 {
                return change;
            }
        }
    }

    pub fn from_matrix(matrix: Vec<Vec<i64>>, field: &PrimeField) -> Result<Self> {
        let n = matrix.len();
        if matrix.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidArgument(
                "change of coordinates must be square".into(),
            ));
        }
        let change = LinearChange {
            n,
            matrix: matrix
                .iter()
                .map(|row| row.iter().map(|&a| field.reduce(a)).collect())
                .collect(),
            seed: None,
        };
        if change.determinant(field) == 0 {
            return Err(Error::InvalidArgument(
                "change of coordinates is singular".into(),
            ));
        }
        Ok(change)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &[Vec<u32>] {
        &self.matrix
    }

    pub fn seed(&self) -> Option<u64> {
        self.seed
    }

    pub fn determinant(&self, field: &PrimeField) -> u32 {
        let n = self.n;
        let mut a = self.matrix.clone();
        let mut det = 1u32;
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| a[r][col] != 0) else {
                return 0;
            };
            if piv != col {
                a.swap(piv, col);
                det = field.neg(det);
            }
            det = field.mul(det, a[col][col]);
            let inv = field.inv(a[col][col]);
            for r in col + 1..n {
                if a[r][col] == 0 {
                    continue;
                }
                let factor = field.mul(a[r][col], inv);
                for c in col..n {
                    let sub = field.mul(factor, a[col][c]);
                    a[r][c] = field.sub(a[r][c], sub);
                }
            }
        }
        det
    }

    /// The image of `x_j`.
    fn image_of_variable(&self, j: usize, field: &PrimeField) -> Polynomial {
        Polynomial::from_terms(
            field,
            self.n,
            (0..self.n).map(|i| {
                let mut e = vec![0u32; self.n];
                e[i] = 1;
                (i64::from(self.matrix[i][j]), Multidegree::new(e))
            }),
        )
    }

    pub fn apply(&self, f: &Polynomial, field: &PrimeField) -> Result<Polynomial> {
        if f.n() != self.n {
            return Err(Error::ArityMismatch {
                expected: self.n,
                found: f.n(),
            });
        }
        let images: Vec<Polynomial> = (0..self.n)
            .map(|j| self.image_of_variable(j, field))
            .collect();
        // powers[j][e] = images[j]^e, filled on demand
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|_| vec![Polynomial::monomial(field, 1, Multidegree::zero(self.n))])
            .collect();
        let mut out = Polynomial::zero(self.n);
        for t in f.terms() {
            let mut prod =
                Polynomial::monomial(field, i64::from(t.coeff), Multidegree::zero(self.n));
            for (j, &e) in t.mono.exps().iter().enumerate() {
                let e = e as usize;
                while powers[j].len() <= e {
                    let next = powers[j].last().expect("seeded").mul(field, &images[j]);
                    powers[j].push(next);
                }
                if e > 0 {
                    prod = prod.mul(field, &powers[j][e]);
                }
            }
            out = out.add(field, &prod);
        }
        Ok(out)
    }

    pub fn apply_all(&self, polys: &[Polynomial], field: &PrimeField) -> Result<Vec<Polynomial>> {
        polys.iter().map(|f| self.apply(f, field)).collect()
    }
}

/// Applies a random change of coordinates drawn from `seed`.
pub fn generic_change(
    polys: &[Polynomial],
    n: usize,
    seed: u64,
    field: &PrimeField,
) -> Result<Vec<Polynomial>> {
    LinearChange::random(n, seed, field).apply_all(polys, field)
}
