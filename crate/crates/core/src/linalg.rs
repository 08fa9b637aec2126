//! Small dense least-squares solver (Householder QR) used by the
//! reconstruction and decomposition routines.

use crate::scalar::Real;

/// Row-major dense matrix.
#[derive(Debug, Clone)]
pub(crate) struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Real> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    /// Builds a matrix from columns of equal length.
    pub fn from_columns(rows: usize, columns: &[Vec<T>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            debug_assert_eq!(col.len(), rows);
            for (i, &x) in col.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: T) {
        self.data[i * self.cols + j] = x;
    }

    pub fn mul_vec(&self, x: &[T]) -> Vec<T> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * x[j]).sum())
            .collect()
    }

    fn max_column_norm(&self) -> T {
        (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self.get(i, j).powi(2)).sum::<T>().sqrt())
            .fold(T::zero(), T::max)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub(crate) enum Solve<T> {
    /// Least-squares minimiser and the norm of `A x − b`.
    Solution { x: Vec<T>, residual: T },
    /// A diagonal entry of `R` fell below `tol` times the largest column norm.
    RankDeficient,
}

/// Minimises `|A x − b|` for `rows ≥ cols` with full column rank.
pub(crate) fn least_squares<T: Real>(a: &Matrix<T>, b: &[T], tol: T) -> Solve<T> {
    let (m, n) = (a.rows, a.cols);
    assert!(m >= n, "underdetermined system");
    assert_eq!(b.len(), m);
    let mut r = a.clone();
    let mut qtb = b.to_vec();
    let threshold = tol * a.max_column_norm();

    for k in 0..n {
        let col_norm = (k..m).map(|i| r.get(i, k).powi(2)).sum::<T>().sqrt();
        if col_norm <= threshold || col_norm.is_zero() {
            return Solve::RankDeficient;
        }
        let alpha = if r.get(k, k) > T::zero() { -col_norm } else { col_norm };
        // Householder vector v = x − alpha e_k, stored temporarily
        let mut v: Vec<T> = (k..m).map(|i| r.get(i, k)).collect();
        v[0] = v[0] - alpha;
        let vnorm2: T = v.iter().map(|&x| x * x).sum();
        if vnorm2.is_zero() {
            continue;
        }
        let two = T::one() + T::one();
        for j in k..n {
            let s: T = (k..m).map(|i| v[i - k] * r.get(i, j)).sum::<T>() * two / vnorm2;
            for i in k..m {
                r.set(i, j, r.get(i, j) - s * v[i - k]);
            }
        }
        let s: T = (k..m).map(|i| v[i - k] * qtb[i]).sum::<T>() * two / vnorm2;
        for i in k..m {
            qtb[i] = qtb[i] - s * v[i - k];
        }
    }

    let mut x = vec![T::zero(); n];
    for k in (0..n).rev() {
        let s: T = (k + 1..n).map(|j| r.get(k, j) * x[j]).sum();
        x[k] = (qtb[k] - s) / r.get(k, k);
    }
    let ax = a.mul_vec(&x);
    let residual = ax.iter().zip(b).map(|(&p, &q)| (p - q).powi(2)).sum::<T>().sqrt();
    Solve::Solution { x, residual }
}
