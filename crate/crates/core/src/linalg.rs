//! Small dense / banded solvers used by the resolvent and space-time code.
//!
//! Everything here is desk-scale (n up to a few hundred), so the solvers are
//! plain loops: Thomas elimination for tridiagonal systems, partially
//! pivoted LU for the dense fractional-Laplacian Jacobians, and forward
//! substitution for lower-triangular Toeplitz (causal convolution) systems.

/// Tridiagonal matrix with `sub.len() == n-1`, `diag.len() == n`,
/// `sup.len() == n-1`.
#[derive(Debug, Clone)]
pub struct Tridiag {
    pub sub: Vec<f64>,
    pub diag: Vec<f64>,
    pub sup: Vec<f64>,
}

impl Tridiag {
    pub fn zeros(n: usize) -> Self {
        Tridiag {
            sub: vec![0.0; n.saturating_sub(1)],
            diag: vec![0.0; n],
            sup: vec![0.0; n.saturating_sub(1)],
        }
    }

    pub fn n(&self) -> usize {
        self.diag.len()
    }

    /// Dirichlet second-difference matrix `(1/h^2) tridiag(-1, 2, -1)`,
    /// i.e. the discrete negative Laplacian on the interior of a 1D grid.
    pub fn dirichlet_laplacian(n: usize, h: f64) -> Self {
        let w = 1.0 / (h * h);
        Tridiag {
            sub: vec![-w; n.saturating_sub(1)],
            diag: vec![2.0 * w; n],
            sup: vec![-w; n.saturating_sub(1)],
        }
    }

    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        let n = self.n();
        assert_eq!(x.len(), n);
        let mut y = vec![0.0; n];
        for i in 0..n {
            let mut v = self.diag[i] * x[i];
            if i > 0 {
                v += self.sub[i - 1] * x[i - 1];
            }
            if i + 1 < n {
                v += self.sup[i] * x[i + 1];
            }
            y[i] = v;
        }
        y
    }

    /// In-place affine update `self += scale * other`.
    pub fn axpy(&mut self, scale: f64, other: &Tridiag) {
        assert_eq!(self.n(), other.n());
        for (a, b) in self.diag.iter_mut().zip(&other.diag) {
            *a += scale * b;
        }
        for (a, b) in self.sub.iter_mut().zip(&other.sub) {
            *a += scale * b;
        }
        for (a, b) in self.sup.iter_mut().zip(&other.sup) {
            *a += scale * b;
        }
    }

    /// Add `s` to the diagonal.
    pub fn shift(&mut self, s: f64) {
        for d in self.diag.iter_mut() {
            *d += s;
        }
    }

    /// Thomas elimination without pivoting. The callers only build systems
    /// that are column diagonally dominant (shifted monotone Jacobians), for
    /// which this is stable. Panics on a vanishing pivot.
    pub fn solve(&self, rhs: &[f64]) -> Vec<f64> {
        let n = self.n();
        assert_eq!(rhs.len(), n);
        if n == 0 {
            return Vec::new();
        }
        let mut c = vec![0.0; n];
        let mut d = vec![0.0; n];
        let mut pivot = self.diag[0];
        assert!(pivot != 0.0, "zero pivot in tridiagonal solve");
        if n > 1 {
            c[0] = self.sup[0] / pivot;
        }
        d[0] = rhs[0] / pivot;
        for i in 1..n {
            pivot = self.diag[i] - self.sub[i - 1] * c[i - 1];
            assert!(pivot != 0.0, "zero pivot in tridiagonal solve");
            if i + 1 < n {
                c[i] = self.sup[i] / pivot;
            }
            d[i] = (rhs[i] - self.sub[i - 1] * d[i - 1]) / pivot;
        }
        for i in (0..n - 1).rev() {
            d[i] -= c[i] * d[i + 1];
        }
        d
    }
}

/// Row-major dense square matrix.
#[derive(Debug, Clone)]
pub struct DenseMat {
    pub n: usize,
    pub data: Vec<f64>,
}

impl DenseMat {
    pub fn zeros(n: usize) -> Self {
        DenseMat {
            n,
            data: vec![0.0; n * n],
        }
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut f64 {
        &mut self.data[i * self.n + j]
    }

    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.n);
        let mut y = vec![0.0; self.n];
        for i in 0..self.n {
            let row = &self.data[i * self.n..(i + 1) * self.n];
            y[i] = row.iter().zip(x).map(|(a, b)| a * b).sum();
        }
        y
    }

    pub fn shift(&mut self, s: f64) {
        for i in 0..self.n {
            *self.at_mut(i, i) += s;
        }
    }

    pub fn scale(&mut self, s: f64) {
        for v in self.data.iter_mut() {
            *v *= s;
        }
    }

    /// Solve `self * x = rhs` by LU with partial pivoting.
    /// Returns `None` when the matrix is numerically singular.
    pub fn lu_solve(&self, rhs: &[f64]) -> Option<Vec<f64>> {
        let n = self.n;
        assert_eq!(rhs.len(), n);
        let mut a = self.data.clone();
        let mut x: Vec<f64> = rhs.to_vec();
        let mut perm: Vec<usize> = (0..n).collect();
        for col in 0..n {
            let mut best = col;
            let mut best_val = a[perm[col] * n + col].abs();
            for row in col + 1..n {
                let v = a[perm[row] * n + col].abs();
                if v > best_val {
                    best = row;
                    best_val = v;
                }
            }
            if best_val == 0.0 {
                return None;
            }
            perm.swap(col, best);
            let pivot_row = perm[col];
            let pivot = a[pivot_row * n + col];
            for row in col + 1..n {
                let r = perm[row];
                let factor = a[r * n + col] / pivot;
                a[r * n + col] = factor;
                for k in col + 1..n {
                    a[r * n + k] -= factor * a[pivot_row * n + k];
                }
            }
        }
        // forward substitution on the permuted rhs
        let mut y = vec![0.0; n];
        for i in 0..n {
            let mut v = x[perm[i]];
            for k in 0..i {
                v -= a[perm[i] * n + k] * y[k];
            }
            y[i] = v;
        }
        // back substitution
        for i in (0..n).rev() {
            let mut v = y[i];
            for k in i + 1..n {
                v -= a[perm[i] * n + k] * x[k];
            }
            x[i] = v / a[perm[i] * n + i];
        }
        Some(x)
    }
}

/// Apply the lower-triangular Toeplitz matrix with first column `col`:
/// `y[i] = sum_{k<=i} col[k] * x[i-k]`.
pub fn toeplitz_lower_apply(col: &[f64], x: &[f64]) -> Vec<f64> {
    let n = x.len();
    assert!(col.len() >= n);
    let mut y = vec![0.0; n];
    for i in 0..n {
        let mut acc = 0.0;
        for k in 0..=i {
            acc += col[k] * x[i - k];
        }
        y[i] = acc;
    }
    y
}

/// Apply the transpose of the lower-triangular Toeplitz matrix with first
/// column `col` (an upper-triangular Toeplitz matrix).
pub fn toeplitz_lower_apply_transpose(col: &[f64], x: &[f64]) -> Vec<f64> {
    let n = x.len();
    assert!(col.len() >= n);
    let mut y = vec![0.0; n];
    for i in 0..n {
        let mut acc = 0.0;
        for k in 0..n - i {
            acc += col[k] * x[i + k];
        }
        y[i] = acc;
    }
    y
}

/// Solve `T x = rhs` for the lower-triangular Toeplitz matrix with first
/// column `col` by forward substitution. Requires `col[0] != 0`.
pub fn toeplitz_lower_solve(col: &[f64], rhs: &[f64]) -> Vec<f64> {
    let n = rhs.len();
    assert!(col.len() >= n);
    assert!(col[0] != 0.0, "singular triangular Toeplitz system");
    let mut x = vec![0.0; n];
    for i in 0..n {
        let mut acc = rhs[i];
        for k in 1..=i {
            acc -= col[k] * x[i - k];
        }
        x[i] = acc / col[0];
    }
    x
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm2(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

pub fn axpy(y: &mut [f64], alpha: f64, x: &[f64]) {
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += alpha * xi;
    }
}

pub fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::Stream;

    #[test]
    fn tridiagonal_roundtrip() {
        let mut s = Stream::new(11);
        let n = 40;
        let mut t = Tridiag::dirichlet_laplacian(n, 1.0 / (n as f64 + 1.0));
        t.shift(0.7);
        let x = s.uniform_vector(n, 1.0);
        let y = t.apply(&x);
        let back = t.solve(&y);
        let err = sub(&x, &back).iter().fold(0.0f64, |m, v| m.max(v.abs()));
        assert!(err < 1e-10, "err {err}");
    }

    #[test]
    fn dense_lu_roundtrip() {
        let mut s = Stream::new(13);
        let n = 25;
        let mut m = DenseMat::zeros(n);
        for i in 0..n {
            for j in 0..n {
                *m.at_mut(i, j) = s.uniform_in(-1.0, 1.0);
            }
            *m.at_mut(i, i) += 4.0;
        }
        let x = s.uniform_vector(n, 1.0);
        let y = m.apply(&x);
        let back = m.lu_solve(&y).unwrap();
        let err = sub(&x, &back).iter().fold(0.0f64, |m, v| m.max(v.abs()));
        assert!(err < 1e-10, "err {err}");
    }

    #[test]
    fn toeplitz_solve_inverts_apply() {
        let mut s = Stream::new(17);
        let n = 64;
        let mut col = s.uniform_vector(n, 0.3);
        col[0] = 2.0;
        let x = s.uniform_vector(n, 1.0);
        let y = toeplitz_lower_apply(&col, &x);
        let back = toeplitz_lower_solve(&col, &y);
        let err = sub(&x, &back).iter().fold(0.0f64, |m, v| m.max(v.abs()));
        assert!(err < 1e-10, "err {err}");
    }

    #[test]
    fn toeplitz_transpose_matches_dense() {
        let col = vec![1.5, -0.3, 0.2, 0.1];
        let x = vec![1.0, 2.0, -1.0, 0.5];
        let y = toeplitz_lower_apply_transpose(&col, &x);
        // dense transpose check
        let n = 4;
        let mut expected = vec![0.0; n];
        for i in 0..n {
            for j in 0..n {
                if i <= j {
                    expected[i] += col[j - i] * x[j];
                }
            }
        }
        for (a, b) in y.iter().zip(&expected) {
            assert!((a - b).abs() < 1e-14);
        }
    }
}
