//! Dense linear algebra sized for this crate: row-major matrices, Cholesky
//! factorization, a cyclic Jacobi symmetric eigensolver, and a one-sided
//! Jacobi (Hestenes) SVD. Problems here are a few hundred rows at most, so
//! simple textbook routines beat pulling in a BLAS.

use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

use crate::error::Error;

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: alloc::vec![0.0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self, Error> {
        let r = rows.len();
        let c = rows.first().map(Vec::len).unwrap_or(0);
        if r == 0 || c == 0 || rows.iter().any(|row| row.len() != c) {
            return Err(Error::InvalidParameter {
                what: "matrix rows must be non-empty and of equal length",
            });
        }
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            data.extend_from_slice(&row);
        }
        Ok(Self { rows: r, cols: c, data })
    }

    pub fn from_flat(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self, Error> {
        if rows * cols != data.len() || rows == 0 || cols == 0 {
            return Err(Error::InvalidParameter {
                what: "matrix data length must equal rows * cols",
            });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [f64] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn matvec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(self.cols, x.len());
        (0..self.rows).map(|i| dot(self.row(i), x)).collect()
    }

    pub fn matmul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0.0 {
                    continue;
                }
                let orow = other.row(k);
                let out_row = out.row_mut(i);
                for (o, &b) in out_row.iter_mut().zip(orow.iter()) {
                    *o += a * b;
                }
            }
        }
        out
    }

    /// `AᵀA` without forming the transpose.
    pub fn gram(&self) -> Matrix {
        let mut g = Matrix::zeros(self.cols, self.cols);
        for r in 0..self.rows {
            let row = self.row(r);
            for i in 0..self.cols {
                let ri = row[i];
                if ri == 0.0 {
                    continue;
                }
                for j in i..self.cols {
                    g[(i, j)] += ri * row[j];
                }
            }
        }
        for i in 0..self.cols {
            for j in 0..i {
                g[(i, j)] = g[(j, i)];
            }
        }
        g
    }

    pub fn frobenius(&self) -> f64 {
        libm::sqrt(self.data.iter().map(|v| v * v).sum())
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = f64;

    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.cols + j]
    }
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b.iter()).map(|(x, y)| x * y).sum()
}

pub fn norm2(a: &[f64]) -> f64 {
    libm::sqrt(dot(a, a))
}

/// Lower-triangular Cholesky factor of a symmetric positive-definite matrix.
///
/// Fails with a condition estimate (largest diagonal over the offending
/// pivot) when a pivot drops to or below `pivot_floor` times the largest
/// diagonal entry.
pub fn cholesky(a: &Matrix, pivot_floor: f64) -> Result<Matrix, Error> {
    assert_eq!(a.rows(), a.cols());
    let n = a.rows();
    let max_diag = (0..n).fold(0.0f64, |m, i| m.max(a[(i, i)]));
    let floor = pivot_floor * max_diag.max(1e-300);
    let mut l = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..=i {
            let mut sum = a[(i, j)];
            for k in 0..j {
                sum -= l[(i, k)] * l[(j, k)];
            }
            if i == j {
                if sum <= floor {
                    return Err(Error::Numerical {
                        what: "cholesky pivot",
                        condition: max_diag / sum.abs().max(1e-300),
                    });
                }
                l[(i, i)] = libm::sqrt(sum);
            } else {
                l[(i, j)] = sum / l[(j, j)];
            }
        }
    }
    Ok(l)
}

/// Solves `L x = b` for lower-triangular `L`.
pub fn forward_sub(l: &Matrix, b: &[f64]) -> Vec<f64> {
    let n = l.rows();
    let mut x = b.to_vec();
    for i in 0..n {
        let row = l.row(i);
        let mut s = x[i];
        for k in 0..i {
            s -= row[k] * x[k];
        }
        x[i] = s / row[i];
    }
    x
}

/// Solves `Lᵀ x = b` for lower-triangular `L`.
pub fn back_sub_transposed(l: &Matrix, b: &[f64]) -> Vec<f64> {
    let n = l.rows();
    let mut x = b.to_vec();
    for i in (0..n).rev() {
        let mut s = x[i];
        for k in i + 1..n {
            s -= l[(k, i)] * x[k];
        }
        x[i] = s / l[(i, i)];
    }
    x
}

/// Solves `A x = b` given the Cholesky factor `L` of `A`.
pub fn chol_solve(l: &Matrix, b: &[f64]) -> Vec<f64> {
    back_sub_transposed(l, &forward_sub(l, b))
}

/// Solves the SPD system `A x = b` directly.
pub fn solve_spd(a: &Matrix, b: &[f64]) -> Result<Vec<f64>, Error> {
    let l = cholesky(a, 1e-13)?;
    Ok(chol_solve(&l, b))
}

/// Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
///
/// Returns eigenvalues ascending with matching eigenvector columns.
pub fn sym_eigen(a: &Matrix) -> (Vec<f64>, Matrix) {
    assert_eq!(a.rows(), a.cols());
    let n = a.rows();
    let mut m = a.clone();
    let mut v = Matrix::identity(n);
    let tol = 1e-14 * a.frobenius().max(1e-300);
    for _sweep in 0..64 {
        let mut off = 0.0f64;
        for i in 0..n {
            for j in i + 1..n {
                off += m[(i, j)] * m[(i, j)];
            }
        }
        if libm::sqrt(2.0 * off) <= tol {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = m[(p, q)];
                if apq.abs() <= tol / (n as f64) {
                    continue;
                }
                let theta = (m[(q, q)] - m[(p, p)]) / (2.0 * apq);
                let t = {
                    let s = if theta >= 0.0 { 1.0 } else { -1.0 };
                    s / (theta.abs() + libm::sqrt(theta * theta + 1.0))
                };
                let c = 1.0 / libm::sqrt(t * t + 1.0);
                let s = t * c;
                for k in 0..n {
                    let mkp = m[(k, p)];
                    let mkq = m[(k, q)];
                    m[(k, p)] = c * mkp - s * mkq;
                    m[(k, q)] = s * mkp + c * mkq;
                }
                for k in 0..n {
                    let mpk = m[(p, k)];
                    let mqk = m[(q, k)];
                    m[(p, k)] = c * mpk - s * mqk;
                    m[(q, k)] = s * mpk + c * mqk;
                }
                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = c * vkp - s * vkq;
                    v[(k, q)] = s * vkp + c * vkq;
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[(i, i)].total_cmp(&m[(j, j)]));
    let eigs: Vec<f64> = order.iter().map(|&i| m[(i, i)]).collect();
    let mut vecs = Matrix::zeros(n, n);
    for (new, &old) in order.iter().enumerate() {
        for k in 0..n {
            vecs[(k, new)] = v[(k, old)];
        }
    }
    (eigs, vecs)
}

/// Thin SVD `A = U Σ Vᵀ` via one-sided Jacobi orthogonalization of columns.
#[derive(Clone, Debug)]
pub struct Svd {
    pub u: Matrix,
    pub sigma: Vec<f64>,
    pub v: Matrix,
}

pub fn svd(a: &Matrix) -> Svd {
    let (rows, cols) = (a.rows(), a.cols());
    let mut u = a.clone();
    let mut v = Matrix::identity(cols);
    let tol = 1e-15;
    for _sweep in 0..60 {
        let mut rotated = false;
        for p in 0..cols {
            for q in p + 1..cols {
                let (mut app, mut aqq, mut apq) = (0.0f64, 0.0f64, 0.0f64);
                for r in 0..rows {
                    let up = u[(r, p)];
                    let uq = u[(r, q)];
                    app += up * up;
                    aqq += uq * uq;
                    apq += up * uq;
                }
                if apq.abs() <= tol * libm::sqrt(app * aqq) || apq == 0.0 {
                    continue;
                }
                rotated = true;
                let theta = (aqq - app) / (2.0 * apq);
                let t = {
                    let s = if theta >= 0.0 { 1.0 } else { -1.0 };
                    s / (theta.abs() + libm::sqrt(theta * theta + 1.0))
                };
                let c = 1.0 / libm::sqrt(t * t + 1.0);
                let s = t * c;
                for r in 0..rows {
                    let up = u[(r, p)];
                    let uq = u[(r, q)];
                    u[(r, p)] = c * up - s * uq;
                    u[(r, q)] = s * up + c * uq;
                }
                for r in 0..cols {
                    let vp = v[(r, p)];
                    let vq = v[(r, q)];
                    v[(r, p)] = c * vp - s * vq;
                    v[(r, q)] = s * vp + c * vq;
                }
            }
        }
        if !rotated {
            break;
        }
    }
    let mut sigma = alloc::vec![0.0f64; cols];
    for j in 0..cols {
        let mut s = 0.0;
        for r in 0..rows {
            s += u[(r, j)] * u[(r, j)];
        }
        let s = libm::sqrt(s);
        sigma[j] = s;
        if s > 0.0 {
            for r in 0..rows {
                u[(r, j)] /= s;
            }
        }
    }
    Svd { u, sigma, v }
}

impl Svd {
    /// Minimum-norm least-squares solution of `A x ≈ b`, dropping singular
    /// values at or below `rel_tol` times the largest.
    pub fn min_norm_solve(&self, b: &[f64], rel_tol: f64) -> Vec<f64> {
        let smax = self.sigma.iter().cloned().fold(0.0f64, f64::max);
        let cutoff = rel_tol * smax;
        let cols = self.sigma.len();
        let mut x = alloc::vec![0.0f64; cols];
        for j in 0..cols {
            if self.sigma[j] <= cutoff || self.sigma[j] == 0.0 {
                continue;
            }
            let mut uj_b = 0.0;
            for r in 0..self.u.rows() {
                uj_b += self.u[(r, j)] * b[r];
            }
            let coef = uj_b / self.sigma[j];
            for r in 0..cols {
                x[r] += coef * self.v[(r, j)];
            }
        }
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b}");
    }

    #[test]
    fn cholesky_reconstructs() {
        let a = Matrix::from_rows(alloc::vec![
            alloc::vec![4.0, 2.0, 0.6],
            alloc::vec![2.0, 5.0, 1.0],
            alloc::vec![0.6, 1.0, 3.0],
        ])
        .unwrap();
        let l = cholesky(&a, 1e-13).unwrap();
        let lt = l.transpose();
        let back = l.matmul(&lt);
        for i in 0..3 {
            for j in 0..3 {
                assert_close(back[(i, j)], a[(i, j)], 1e-12);
            }
        }
    }

    #[test]
    fn cholesky_rejects_indefinite() {
        let a = Matrix::from_rows(alloc::vec![
            alloc::vec![1.0, 2.0],
            alloc::vec![2.0, 1.0],
        ])
        .unwrap();
        assert!(matches!(
            cholesky(&a, 1e-13),
            Err(Error::Numerical { .. })
        ));
    }

    #[test]
    fn solve_spd_matches_hand_solution() {
        let a = Matrix::from_rows(alloc::vec![
            alloc::vec![2.0, 1.0],
            alloc::vec![1.0, 3.0],
        ])
        .unwrap();
        // x = A^{-1} [1, 2]: det = 5, x = [ (3*1-1*2)/5, (2*2-1*1)/5 ] = [0.2, 0.6]
        let x = solve_spd(&a, &[1.0, 2.0]).unwrap();
        assert_close(x[0], 0.2, 1e-12);
        assert_close(x[1], 0.6, 1e-12);
    }

    #[test]
    fn eigen_of_known_2x2() {
        // [[2.5, 1.5], [1.5, 2.5]] has eigenvalues 1 and 4.
        let a = Matrix::from_rows(alloc::vec![
            alloc::vec![2.5, 1.5],
            alloc::vec![1.5, 2.5],
        ])
        .unwrap();
        let (eigs, vecs) = sym_eigen(&a);
        assert_close(eigs[0], 1.0, 1e-12);
        assert_close(eigs[1], 4.0, 1e-12);
        // A v = lambda v for the top eigenvector
        let v1 = [vecs[(0, 1)], vecs[(1, 1)]];
        let av = a.matvec(&v1);
        assert_close(av[0], 4.0 * v1[0], 1e-12);
        assert_close(av[1], 4.0 * v1[1], 1e-12);
    }

    #[test]
    fn svd_reconstructs_rectangular() {
        let a = Matrix::from_rows(alloc::vec![
            alloc::vec![1.0, 2.0],
            alloc::vec![3.0, 4.0],
            alloc::vec![5.0, 6.0],
        ])
        .unwrap();
        let f = svd(&a);
        // rebuild A = U diag(sigma) V^T
        let mut rebuilt = Matrix::zeros(3, 2);
        for i in 0..3 {
            for j in 0..2 {
                let mut s = 0.0;
                for k in 0..2 {
                    s += f.u[(i, k)] * f.sigma[k] * f.v[(j, k)];
                }
                rebuilt[(i, j)] = s;
            }
        }
        for i in 0..3 {
            for j in 0..2 {
                assert_close(rebuilt[(i, j)], a[(i, j)], 1e-10);
            }
        }
    }

    #[test]
    fn min_norm_solve_handles_rank_deficiency() {
        // Duplicate column: x should split weight evenly (minimum norm).
        let a = Matrix::from_rows(alloc::vec![
            alloc::vec![1.0, 1.0],
            alloc::vec![1.0, 1.0],
        ])
        .unwrap();
        let x = svd(&a).min_norm_solve(&[2.0, 2.0], 1e-10);
        assert_close(x[0], 1.0, 1e-10);
        assert_close(x[1], 1.0, 1e-10);
    }

    #[test]
    fn gram_matches_explicit_product() {
        let a = Matrix::from_rows(alloc::vec![
            alloc::vec![1.0, -2.0, 0.5],
            alloc::vec![0.0, 3.0, 1.0],
        ])
        .unwrap();
        let g = a.gram();
        let explicit = a.transpose().matmul(&a);
        for i in 0..3 {
            for j in 0..3 {
                assert_close(g[(i, j)], explicit[(i, j)], 1e-14);
            }
        }
    }
}
