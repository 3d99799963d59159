//! Dense exact matrices.
//!
//! Storage and ring operations are generic over [`Coeff`]; elimination
//! (rank, kernels, solving) needs a [`Field`].

use std::fmt;

use crate::scalar::{Coeff, Field};

#[derive(Clone, PartialEq)]
pub struct Matrix<C> {
    rows: usize,
    cols: usize,
    data: Vec<C>,
}

impl<C: Coeff> Matrix<C> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![C::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = C::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> C) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_columns(rows: usize, columns: &[Vec<C>]) -> Self {
        Self::from_fn(rows, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> Vec<C> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row(&self, i: usize) -> &[C] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Matrix<D> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "dimension mismatch in matrix product");
        let mut r = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    r[(i, j)] = r[(i, j)].clone() + a.clone() * b.clone();
                }
            }
        }
        r
    }

    pub fn mul_vec(&self, v: &[C]) -> Vec<C> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                (0..self.cols).fold(C::zero(), |acc, j| {
                    acc + self[(i, j)].clone() * v[j].clone()
                })
            })
            .collect()
    }

    pub fn trace(&self) -> C {
        (0..self.rows.min(self.cols)).fold(C::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|c| c.is_zero())
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols && *self == self.transpose()
    }

    /// Determinant over any commutative ring by cofactor expansion with
    /// memoisation over column subsets (`O(2^n n)` ring operations).
    pub fn determinant(&self) -> C {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        assert!(
            n <= 20,
            "determinant: matrix too large for subset expansion"
        );
        if n == 0 {
            return C::one();
        }
        // dp[mask] = det of the submatrix on the first popcount(mask) rows and columns in mask.
        let mut dp = vec![C::zero(); 1usize << n];
        dp[0] = C::one();
        for mask in 1usize..(1 << n) {
            let row = mask.count_ones() as usize - 1;
            let mut acc = C::zero();
            for col in 0..n {
                if mask & (1 << col) == 0 {
                    continue;
                }
                // Expanding along the last row: sign is (-1)^(chosen columns right of col).
                let higher = (mask >> (col + 1)).count_ones() as usize;
                let term = self[(row, col)].clone() * dp[mask ^ (1 << col)].clone();
                if !term.is_zero() {
                    if higher.is_multiple_of(2) {
                        acc = acc + term;
                    } else {
                        acc = acc - term;
                    }
                }
            }
            dp[mask] = acc;
        }
        dp[(1 << n) - 1].clone()
    }
}

/// Reduced row echelon form and pivot columns.
pub fn rref<F: Field>(m: &Matrix<F>) -> (Matrix<F>, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        let Some(p) = (r..a.rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..a.cols {
                let t = a[(p, j)].clone();
                a[(p, j)] = a[(r, j)].clone();
                a[(r, j)] = t;
            }
        }
        let inv = a[(r, c)].inv();
        for j in 0..a.cols {
            a[(r, j)] = a[(r, j)].clone() * inv.clone();
        }
        for i in 0..a.rows {
            if i == r || a[(i, c)].is_zero() {
                continue;
            }
            let f = a[(i, c)].clone();
            for j in 0..a.cols {
                let t = a[(r, j)].clone();
                if !t.is_zero() {
                    a[(i, j)] = a[(i, j)].clone() - f.clone() * t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

pub fn rank<F: Field>(m: &Matrix<F>) -> usize {
    rref(m).1.len()
}

/// Basis of the right kernel `{x : m x = 0}`, as column vectors.
pub fn kernel<F: Field>(m: &Matrix<F>) -> Vec<Vec<F>> {
    let (r, pivots) = rref(m);
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![F::zero(); m.cols];
            v[fc] = F::one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -r[(i, fc)].clone();
            }
            v
        })
        .collect()
}

/// Solves `m x = b`. Returns `None` when the system is inconsistent or the
/// solution is not unique.
pub fn solve_unique<F: Field>(m: &Matrix<F>, b: &[F]) -> Option<Vec<F>> {
    let aug = Matrix::from_fn(m.rows, m.cols + 1, |i, j| {
        if j < m.cols {
            m[(i, j)].clone()
        } else {
            b[i].clone()
        }
    });
    let (r, pivots) = rref(&aug);
    if pivots.contains(&m.cols) || pivots.len() != m.cols {
        return None;
    }
    Some((0..m.cols).map(|i| r[(i, m.cols)].clone()).collect())
}

/// Inverse of a square matrix, if it exists.
pub fn inverse<F: Field>(m: &Matrix<F>) -> Option<Matrix<F>> {
    let n = m.rows;
    assert_eq!(n, m.cols);
    let aug = Matrix::from_fn(n, 2 * n, |i, j| {
        if j < n {
            m[(i, j)].clone()
        } else if j - n == i {
            F::one()
        } else {
            F::zero()
        }
    });
    let (r, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(Matrix::from_fn(n, n, |i, j| r[(i, j + n)].clone()))
}

impl<C> std::ops::Index<(usize, usize)> for Matrix<C> {
    type Output = C;
    fn index(&self, (i, j): (usize, usize)) -> &C {
        &self.data[i * self.cols + j]
    }
}

impl<C> std::ops::IndexMut<(usize, usize)> for Matrix<C> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C {
        &mut self.data[i * self.cols + j]
    }
}

impl<C: fmt::Display> fmt::Display for Matrix<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| self.data[i * self.cols + j].to_string())
                .collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<C: fmt::Debug> fmt::Debug for Matrix<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matrix")
            .field("rows", &self.rows)
            .field("cols", &self.cols)
            .field("data", &self.data)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn q(n: i64) -> BigRational {
        BigRational::from_i64(n)
    }

    #[test]
    fn determinant_matches_elimination() {
        let m = Matrix::from_fn(4, 4, |i, j| ((i * 7 + j * j * 3 + 1) % 5) as i64 - 2);
        let det = m.determinant();
        let mr = m.map(|&x| q(x));
        let full = rank(&mr) == 4;
        assert_eq!(det != 0, full);
        // 2x2 sanity: [[1,2],[3,4]] -> -2
        let two = Matrix::from_fn(2, 2, |i, j| [[1i64, 2], [3, 4]][i][j]);
        assert_eq!(two.determinant(), -2);
        let three = Matrix::from_fn(3, 3, |i, j| [[2i64, 0, 1], [1, 3, 2], [1, 1, 1]][i][j]);
        // 2·(3 − 2) − 0 + 1·(1 − 3)
        assert_eq!(three.determinant(), 0);
    }

    #[test]
    fn kernel_and_solve() {
        let m = Matrix::from_fn(2, 3, |i, j| q([[1, 2, 3], [2, 4, 6]][i][j]));
        let k = kernel(&m);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.mul_vec(v).iter().all(|x| x == &q(0)));
        }
        let a = Matrix::from_fn(2, 2, |i, j| q([[2, 1], [1, 1]][i][j]));
        let x = solve_unique(&a, &[q(3), q(2)]).unwrap();
        assert_eq!(x, vec![q(1), q(1)]);
        let inv = inverse(&a).unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(2));
    }
}
