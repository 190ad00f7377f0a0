//! Dense real matrices, cyclic Jacobi eigendecomposition, PSD square roots and
//! singular values.
//!
//! Everything here works on small row-major `f64` matrices. The absolute
//! values `|A|⁺ = (AAᵗ)^½` and `|A|⁻ = (AᵗA)^½` are built from the symmetric
//! eigendecomposition of the two Gram matrices, so no SVD of `A` itself is
//! ever formed.

use std::fmt;

use crate::digraph::Digraph;
use crate::{Error, Result};

/// Relative off-diagonal threshold for the Jacobi iteration.
pub const JACOBI_TOL: f64 = 1e-12;
/// Sweeps allowed before giving up with [`Error::NoConvergence`].
pub const MAX_SWEEPS: usize = 100;
/// Absolute asymmetry accepted by [`sym_eigen`].
pub const SYMMETRY_TOL: f64 = 1e-12;
/// Eigenvalues in `[-PSD_TOL, 0)` are treated as roundoff and clamped to zero.
pub const PSD_TOL: f64 = 1e-9;

/// Numerical-rank cutoff `n·ε·|λ|_max` of a symmetric eigendecomposition.
/// Eigenvalues of a PSD matrix below it are roundoff of exact zeros, and
/// taking their square root would blow that roundoff up to `√ε` scale.
pub fn rank_cutoff(eigenvalues: &[f64]) -> f64 {
    let largest = eigenvalues.iter().fold(0.0_f64, |m, l| m.max(l.abs()));
    eigenvalues.len() as f64 * f64::EPSILON * largest
}

fn clamped_sqrt(eigenvalues: &[f64]) -> Vec<f64> {
    let cutoff = rank_cutoff(eigenvalues);
    eigenvalues
        .iter()
        .map(|&l| if l <= cutoff { 0.0 } else { l.sqrt() })
        .collect()
}

/// Row-major real matrix.
#[derive(Clone, PartialEq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl DenseMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::BadParameter(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(DenseMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_diagonal(&vec![1.0; n])
    }

    pub fn from_diagonal(diag: &[f64]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n, n);
        for (i, &d) in diag.iter().enumerate() {
            m.set(i, i, d);
        }
        m
    }

    /// Panics if the rows have unequal lengths.
    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.as_ref().len(), cols, "ragged rows");
            data.extend_from_slice(r.as_ref());
        }
        DenseMatrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.cols + j] = value;
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> DenseMatrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// Matrix product. Panics on a dimension mismatch.
    pub fn matmul(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matmul");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0.0 {
                    continue;
                }
                let src = other.row(k);
                let dst = &mut out.data[i * other.cols..(i + 1) * other.cols];
                for (d, &b) in dst.iter_mut().zip(src) {
                    *d += a * b;
                }
            }
        }
        out
    }

    pub fn diagonal(&self) -> Vec<f64> {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).collect()
    }

    pub fn trace(&self) -> f64 {
        self.diagonal().iter().sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    /// Largest absolute entrywise difference. Panics on a shape mismatch.
    pub fn max_abs_diff(&self, other: &DenseMatrix) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// Largest `|m_ij - m_ji|`; infinite for non-square input.
    pub fn asymmetry(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let mut worst: f64 = 0.0;
        for i in 0..self.rows {
            for j in i + 1..self.cols {
                worst = worst.max((self.get(i, j) - self.get(j, i)).abs());
            }
        }
        worst
    }
}

impl fmt::Debug for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "DenseMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}

/// Eigendecomposition `S = Q · diag(λ) · Qᵗ` of a symmetric matrix.
#[derive(Debug, Clone)]
pub struct SymEigen {
    /// Descending.
    pub eigenvalues: Vec<f64>,
    /// Orthogonal; column `k` belongs to `eigenvalues[k]`.
    pub basis: DenseMatrix,
    /// Off-diagonal Frobenius norm left when the iteration stopped.
    pub off_norm: f64,
    pub sweeps: usize,
}

impl SymEigen {
    /// `Q · diag(f(λ)) · Qᵗ`.
    pub fn reassemble(&self, f: impl Fn(f64) -> f64) -> DenseMatrix {
        let weights: Vec<f64> = self.eigenvalues.iter().map(|&l| f(l)).collect();
        self.reassemble_with(&weights)
    }

    /// `Q · diag(weights) · Qᵗ`.
    pub fn reassemble_with(&self, weights: &[f64]) -> DenseMatrix {
        let n = self.eigenvalues.len();
        let q = &self.basis;
        let mut out = DenseMatrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let s: f64 = (0..n).map(|k| q.get(i, k) * weights[k] * q.get(j, k)).sum();
                out.set(i, j, s);
                out.set(j, i, s);
            }
        }
        out
    }
}

/// Adjacency matrix: `A[u][v] = 1` exactly when `(u, v)` is an arc.
pub fn adjacency(g: &Digraph) -> DenseMatrix {
    let n = g.vertex_count();
    let mut a = DenseMatrix::zeros(n, n);
    for &(u, v) in g.arcs() {
        a.set(u, v, 1.0);
    }
    a
}

/// `A · Aᵗ`; its diagonal holds the out-degrees of an adjacency matrix.
pub fn gram_out(a: &DenseMatrix) -> DenseMatrix {
    let n = a.rows;
    let mut g = DenseMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let s: f64 = a.row(i).iter().zip(a.row(j)).map(|(x, y)| x * y).sum();
            g.set(i, j, s);
            g.set(j, i, s);
        }
    }
    g
}

/// `Aᵗ · A`; its diagonal holds the in-degrees of an adjacency matrix.
pub fn gram_in(a: &DenseMatrix) -> DenseMatrix {
    gram_out(&a.transpose())
}

fn off_diagonal_norm(a: &DenseMatrix) -> f64 {
    let n = a.rows;
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a.get(i, j) * a.get(i, j);
            }
        }
    }
    s.sqrt()
}

/// Cyclic Jacobi eigendecomposition of a symmetric matrix.
///
/// Sweeps over all pairs `p < q` until the off-diagonal Frobenius norm is at
/// most `tol` times the Frobenius norm of the input. Eigenvalues come back in
/// descending order and each eigenvector has its first nonzero entry positive.
pub fn sym_eigen(s: &DenseMatrix, tol: f64) -> Result<SymEigen> {
    if !s.is_square() {
        return Err(Error::NotSquare(s.rows, s.cols));
    }
    let n = s.rows;
    let scale = s.data.iter().fold(1.0_f64, |m, x| m.max(x.abs()));
    let asym = s.asymmetry();
    if asym > SYMMETRY_TOL * scale {
        return Err(Error::NotSymmetric(asym));
    }

    let mut a = s.clone();
    // symmetrize so that the rotations see an exactly symmetric matrix
    for i in 0..n {
        for j in i + 1..n {
            let m = 0.5 * (a.get(i, j) + a.get(j, i));
            a.set(i, j, m);
            a.set(j, i, m);
        }
    }
    let mut v = DenseMatrix::identity(n);
    let target = tol * s.frobenius_norm();

    let mut sweeps = 0;
    let mut off = off_diagonal_norm(&a);
    while off > target {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence(MAX_SWEEPS));
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a.get(p, q);
                if apq == 0.0 {
                    continue;
                }
                let theta = (a.get(q, q) - a.get(p, p)) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + theta.hypot(1.0));
                let c = 1.0 / t.hypot(1.0);
                let sn = t * c;
                rotate(&mut a, &mut v, p, q, c, sn);
            }
        }
        off = off_diagonal_norm(&a);
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a.get(j, j).total_cmp(&a.get(i, i)));
    let eigenvalues: Vec<f64> = order.iter().map(|&k| a.get(k, k)).collect();
    let mut basis = DenseMatrix::zeros(n, n);
    for (col, &k) in order.iter().enumerate() {
        let sign = (0..n)
            .map(|i| v.get(i, k))
            .find(|x| x.abs() > 1e-12)
            .map_or(1.0, f64::signum);
        for i in 0..n {
            basis.set(i, col, sign * v.get(i, k));
        }
    }
    Ok(SymEigen {
        eigenvalues,
        basis,
        off_norm: off,
        sweeps,
    })
}

/// Applies `A ← Jᵗ A J` and `V ← V J` for the plane rotation in `(p, q)`.
fn rotate(a: &mut DenseMatrix, v: &mut DenseMatrix, p: usize, q: usize, c: f64, s: f64) {
    let n = a.rows;
    for k in 0..n {
        let (akp, akq) = (a.get(k, p), a.get(k, q));
        a.set(k, p, c * akp - s * akq);
        a.set(k, q, s * akp + c * akq);
    }
    for k in 0..n {
        let (apk, aqk) = (a.get(p, k), a.get(q, k));
        a.set(p, k, c * apk - s * aqk);
        a.set(q, k, s * apk + c * aqk);
    }
    a.set(p, q, 0.0);
    a.set(q, p, 0.0);
    for k in 0..n {
        let (vkp, vkq) = (v.get(k, p), v.get(k, q));
        v.set(k, p, c * vkp - s * vkq);
        v.set(k, q, s * vkp + c * vkq);
    }
}

/// Principal square root of a symmetric positive semidefinite matrix.
///
/// Eigenvalues at or below [`rank_cutoff`] contribute nothing.
pub fn psd_sqrt(s: &DenseMatrix) -> Result<DenseMatrix> {
    let eig = sym_eigen(s, JACOBI_TOL)?;
    if let Some(&lowest) = eig.eigenvalues.last() {
        if lowest < -PSD_TOL {
            return Err(Error::NotPsd(lowest));
        }
    }
    Ok(eig.reassemble_with(&clamped_sqrt(&eig.eigenvalues)))
}

/// Singular values in descending order, `min(rows, cols)` of them. Values
/// whose square falls below the rank cutoff of the Gram matrix are exact zeros.
pub fn singular_values(a: &DenseMatrix) -> Result<Vec<f64>> {
    let gram = if a.rows <= a.cols {
        gram_out(a)
    } else {
        gram_in(a)
    };
    let eig = sym_eigen(&gram, JACOBI_TOL)?;
    Ok(clamped_sqrt(&eig.eigenvalues))
}
