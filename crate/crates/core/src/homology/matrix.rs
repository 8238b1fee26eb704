use std::fmt;

use super::field::PrimeField;

/// Dense row-major matrix over `GF(p)`.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Entries are reduced into the field.
    pub fn from_rows(field: &PrimeField, rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Matrix::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged matrix");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, field.reduce(v));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn mul(&self, other: &Matrix, field: &PrimeField) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = field.add(out.get(i, j), field.mul(a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Rank by row reduction.
    pub fn rank(&self, field: &PrimeField) -> usize {
        let mut work = self.clone();
        work.reduce_in_place(field)
    }

    /// Gaussian elimination to row echelon form; returns the rank.
    fn reduce_in_place(&mut self, field: &PrimeField) -> usize {
        let (rows, cols) = (self.rows, self.cols);
        let p = u64::from(field.characteristic());
        let mut rank = 0;
        for col in 0..cols {
            if rank == rows {
                break;
            }
            let Some(pivot) = (rank..rows).find(|&r| self.get(r, col) != 0) else {
                continue;
            };
            if pivot != rank {
                for j in col..cols {
                    self.data.swap(pivot * cols + j, rank * cols + j);
                }
            }
            let inv = field.inv(self.get(rank, col));
            for j in col..cols {
                let v = field.mul(self.get(rank, j), inv);
                self.set(rank, j, v);
            }
            let (head, tail) = self.data.split_at_mut((rank + 1) * cols);
            let pivot_row = &head[rank * cols..];
            for row in tail.chunks_exact_mut(cols) {
                let factor = row[col];
                if factor == 0 {
                    continue;
                }
                let f = p - u64::from(factor);
                for j in col..cols {
                    let pv = pivot_row[j];
                    if pv != 0 {
                        row[j] = ((u64::from(row[j]) + f * u64::from(pv)) % p) as u32;
                    }
                }
            }
            rank += 1;
        }
        rank
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<u32> = (0..self.cols).map(|j| self.get(i, j)).collect();
            writeln!(f, "  {row:?}")?;
        }
        Ok(())
    }
}

/// Rank of a matrix over `GF(p)`.
pub fn matrix_rank(m: &Matrix, field: &PrimeField) -> usize {
    m.rank(field)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranks() {
        let k = PrimeField::new(7).unwrap();
        assert_eq!(matrix_rank(&Matrix::identity(3), &k), 3);
        assert_eq!(matrix_rank(&Matrix::zeros(3, 4), &k), 0);
        assert_eq!(
            matrix_rank(&Matrix::from_rows(&k, &[vec![1, 2], vec![2, 4]]), &k),
            1
        );
        assert_eq!(matrix_rank(&Matrix::zeros(0, 5), &k), 0);
    }

    #[test]
    fn rank_depends_on_characteristic() {
        let m = [vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]];
        assert_eq!(
            Matrix::from_rows(&PrimeField::new(2).unwrap(), &m).rank(&PrimeField::new(2).unwrap()),
            2
        );
        assert_eq!(
            Matrix::from_rows(&PrimeField::new(3).unwrap(), &m).rank(&PrimeField::new(3).unwrap()),
            3
        );
    }

    #[test]
    fn rank_of_wide_and_tall() {
        let k = PrimeField::default();
        let wide = Matrix::from_rows(&k, &[vec![0, 0, 1, 2, 3], vec![0, 0, 2, 4, 6]]);
        assert_eq!(wide.rank(&k), 1);
        let tall = Matrix::from_rows(&k, &[vec![1, 0], vec![0, 1], vec![1, 1], vec![5, 7]]);
        assert_eq!(tall.rank(&k), 2);
    }
}
