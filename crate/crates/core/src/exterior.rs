//! Exterior algebra over an n-dimensional Euclidean vector space.
//!
//! Vectors, bivectors and trivectors are stored as dense coefficient arrays
//! over an orthonormal basis `e_0 .. e_{n-1}`. Bivector coefficients are
//! indexed by pairs `i < j` and trivector coefficients by triples
//! `i < j < k`, both in lexicographic order. Indices in this API are
//! zero-based; the file formats in the CLI use one-based keys.

use std::ops::{Add, AddAssign, Index, Mul, Neg, Sub, SubAssign};

use crate::error::{check_dim, Error, Result};
use crate::scalar::{norm, Real};

/// Number of pairs `i < j` drawn from `0..n`.
pub const fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Number of triples `i < j < k` drawn from `0..n`.
pub const fn triple_count(n: usize) -> usize {
    n * n.saturating_sub(1) * n.saturating_sub(2) / 6
}

/// Position of the pair `(i, j)`, `i < j < n`, in lexicographic order.
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

/// Position of the triple `(i, j, k)`, `i < j < k < n`, in lexicographic order.
pub fn triple_index(n: usize, i: usize, j: usize, k: usize) -> usize {
    debug_assert!(i < j && j < k && k < n);
    let before: usize = (0..i).map(|a| pair_count(n - a - 1)).sum();
    before + pair_index(n - i - 1, j - i - 1, k - i - 1)
}

/// All pairs `(i, j)` with `i < j < n` in storage order.
pub fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
}

/// All triples `(i, j, k)` with `i < j < k < n` in storage order.
pub fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).flat_map(move |j| (j + 1..n).map(move |k| (i, j, k))))
}

fn check_count(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::CoefficientCount { expected, found })
    }
}

fn check_finite<T: Real>(xs: &[T]) -> Result<()> {
    if xs.iter().all(|x| x.is_finite()) {
        Ok(())
    } else {
        Err(Error::NonFinite)
    }
}

macro_rules! impl_linear_ops {
    ($ty:ident) => {
        impl<T: Real> Add for &$ty<T> {
            type Output = $ty<T>;
            fn add(self, rhs: &$ty<T>) -> $ty<T> {
                assert_eq!(self.dim, rhs.dim, "dimension mismatch");
                $ty {
                    dim: self.dim,
                    coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(&a, &b)| a + b).collect(),
                }
            }
        }

        impl<T: Real> Add for $ty<T> {
            type Output = $ty<T>;
            fn add(self, rhs: $ty<T>) -> $ty<T> {
                &self + &rhs
            }
        }

        impl<T: Real> Sub for &$ty<T> {
            type Output = $ty<T>;
            fn sub(self, rhs: &$ty<T>) -> $ty<T> {
                assert_eq!(self.dim, rhs.dim, "dimension mismatch");
                $ty {
                    dim: self.dim,
                    coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(&a, &b)| a - b).collect(),
                }
            }
        }

        impl<T: Real> Sub for $ty<T> {
            type Output = $ty<T>;
            fn sub(self, rhs: $ty<T>) -> $ty<T> {
                &self - &rhs
            }
        }

        impl<T: Real> AddAssign<&$ty<T>> for $ty<T> {
            fn add_assign(&mut self, rhs: &$ty<T>) {
                assert_eq!(self.dim, rhs.dim, "dimension mismatch");
                for (a, &b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                    *a = *a + b;
                }
            }
        }

        impl<T: Real> SubAssign<&$ty<T>> for $ty<T> {
            fn sub_assign(&mut self, rhs: &$ty<T>) {
                assert_eq!(self.dim, rhs.dim, "dimension mismatch");
                for (a, &b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                    *a = *a - b;
                }
            }
        }

        impl<T: Real> Neg for &$ty<T> {
            type Output = $ty<T>;
            fn neg(self) -> $ty<T> {
                $ty { dim: self.dim, coeffs: self.coeffs.iter().map(|&a| -a).collect() }
            }
        }

        impl<T: Real> Neg for $ty<T> {
            type Output = $ty<T>;
            fn neg(self) -> $ty<T> {
                -&self
            }
        }

        impl<T: Real> Mul<T> for &$ty<T> {
            type Output = $ty<T>;
            fn mul(self, s: T) -> $ty<T> {
                $ty { dim: self.dim, coeffs: self.coeffs.iter().map(|&a| a * s).collect() }
            }
        }

        impl<T: Real> Mul<T> for $ty<T> {
            type Output = $ty<T>;
            fn mul(self, s: T) -> $ty<T> {
                &self * s
            }
        }
    };
}

/// An element of the vector space `V`.
#[derive(Debug, Clone, PartialEq)]
pub struct Vector<T> {
    dim: usize,
    coeffs: Vec<T>,
}

impl_linear_ops!(Vector);

impl<T: Real> Vector<T> {
    pub fn new(coords: Vec<T>) -> Self {
        Self { dim: coords.len(), coeffs: coords }
    }

    /// Like [`Vector::new`] but rejects NaN and infinite entries.
    pub fn try_new(coords: Vec<T>) -> Result<Self> {
        check_finite(&coords)?;
        Ok(Self::new(coords))
    }

    pub fn zeros(dim: usize) -> Self {
        Self { dim, coeffs: vec![T::zero(); dim] }
    }

    /// The basis vector `e_i`.
    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.coeffs[i] = T::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coords(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coords(self) -> Vec<T> {
        self.coeffs
    }

    pub fn dot(&self, other: &Self) -> T {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| a * b).sum()
    }

    pub fn norm_squared(&self) -> T {
        self.dot(self)
    }

    pub fn norm(&self) -> T {
        norm(&self.coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|x| x.is_zero())
    }

    /// Exterior product `self ∧ w`.
    pub fn wedge(&self, w: &Self) -> Result<Bivector<T>> {
        check_dim(self.dim, w.dim)?;
        let (v, w) = (&self.coeffs, &w.coeffs);
        Ok(Bivector {
            dim: self.dim,
            coeffs: pairs(self.dim).map(|(i, j)| v[i] * w[j] - v[j] * w[i]).collect(),
        })
    }

    /// Exterior product `self ∧ a` of a vector with a bivector.
    pub fn wedge_bivector(&self, a: &Bivector<T>) -> Result<Trivector<T>> {
        check_dim(self.dim, a.dim)?;
        let u = &self.coeffs;
        Ok(Trivector {
            dim: self.dim,
            coeffs: triples(self.dim)
                .map(|(i, j, k)| u[i] * a.get(j, k) - u[j] * a.get(i, k) + u[k] * a.get(i, j))
                .collect(),
        })
    }

    /// Interior product `self ⌟ a`, which on decomposables is
    /// `u ⌟ (v ∧ w) = (u·v) w − (u·w) v`.
    pub fn interior(&self, a: &Bivector<T>) -> Result<Vector<T>> {
        check_dim(self.dim, a.dim)?;
        let mut out = vec![T::zero(); self.dim];
        for ((i, j), c) in a.iter() {
            out[j] = out[j] + self.coeffs[i] * c;
            out[i] = out[i] - self.coeffs[j] * c;
        }
        Ok(Vector::new(out))
    }
}

impl<T> Index<usize> for Vector<T> {
    type Output = T;
    fn index(&self, i: usize) -> &T {
        &self.coeffs[i]
    }
}

/// An element of `Λ²(V)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Bivector<T> {
    dim: usize,
    coeffs: Vec<T>,
}

impl_linear_ops!(Bivector);

impl<T: Real> Bivector<T> {
    pub fn zero(dim: usize) -> Self {
        Self { dim, coeffs: vec![T::zero(); pair_count(dim)] }
    }

    /// Builds a bivector from coefficients in lexicographic pair order.
    pub fn from_coeffs(dim: usize, coeffs: Vec<T>) -> Result<Self> {
        check_count(pair_count(dim), coeffs.len())?;
        check_finite(&coeffs)?;
        Ok(Self { dim, coeffs })
    }

    /// Builds a bivector from `((i, j), c)` entries; `(j, i)` contributes `-c`.
    pub fn from_pairs(dim: usize, entries: impl IntoIterator<Item = ((usize, usize), T)>) -> Self {
        let mut b = Self::zero(dim);
        for ((i, j), c) in entries {
            b.add_to(i, j, c);
        }
        b
    }

    /// The basis bivector `e_i ∧ e_j`.
    pub fn basis(dim: usize, i: usize, j: usize) -> Self {
        Self::from_pairs(dim, [((i, j), T::one())])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Antisymmetric coefficient access: `get(j, i) == -get(i, j)`, `get(i, i) == 0`.
    pub fn get(&self, i: usize, j: usize) -> T {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Less => self.coeffs[pair_index(self.dim, i, j)],
            Greater => -self.coeffs[pair_index(self.dim, j, i)],
            Equal => T::zero(),
        }
    }

    fn add_to(&mut self, i: usize, j: usize, c: T) {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Less => {
                let k = pair_index(self.dim, i, j);
                self.coeffs[k] = self.coeffs[k] + c;
            }
            Greater => {
                let k = pair_index(self.dim, j, i);
                self.coeffs[k] = self.coeffs[k] - c;
            }
            Equal => {}
        }
    }

    /// `((i, j), c)` for every stored pair `i < j`.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), T)> + '_ {
        pairs(self.dim).zip(self.coeffs.iter().copied())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|x| x.is_zero())
    }

    /// Scalar product induced by the orthonormal basis `e_i ∧ e_j`.
    pub fn dot(&self, other: &Self) -> Result<T> {
        check_dim(self.dim, other.dim)?;
        Ok(self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| a * b).sum())
    }

    /// Magnitude (area) `sqrt(a · a)`.
    pub fn magnitude(&self) -> T {
        norm(&self.coeffs)
    }

    /// The antisymmetric matrix `X` with `X u = u ⌟ self` for every `u`.
    pub fn to_skew(&self) -> SkewMatrix<T> {
        SkewMatrix::from_upper(self.dim, self.coeffs.iter().map(|&c| -c).collect())
            .expect("pair count matches dimension")
    }

    /// Right-handed pseudovector `(a_23, -a_13, a_12)`; dimension 3 only.
    pub fn to_pseudovector(&self) -> Result<Vector<T>> {
        if self.dim != 3 {
            return Err(Error::UnsupportedDimension { required: 3, found: self.dim });
        }
        Ok(Vector::new(vec![self.get(1, 2), -self.get(0, 2), self.get(0, 1)]))
    }

    pub fn from_pseudovector(p: &Vector<T>) -> Result<Self> {
        if p.dim != 3 {
            return Err(Error::UnsupportedDimension { required: 3, found: p.dim });
        }
        Ok(Self { dim: 3, coeffs: vec![p[2], -p[1], p[0]] })
    }
}

/// An element of `Λ³(V)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Trivector<T> {
    dim: usize,
    coeffs: Vec<T>,
}

impl_linear_ops!(Trivector);

impl<T: Real> Trivector<T> {
    pub fn zero(dim: usize) -> Self {
        Self { dim, coeffs: vec![T::zero(); triple_count(dim)] }
    }

    pub fn from_coeffs(dim: usize, coeffs: Vec<T>) -> Result<Self> {
        check_count(triple_count(dim), coeffs.len())?;
        check_finite(&coeffs)?;
        Ok(Self { dim, coeffs })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `e_i ∧ e_j ∧ e_k`, antisymmetric in the indices.
    pub fn get(&self, i: usize, j: usize, k: usize) -> T {
        let mut idx = [i, j, k];
        let mut odd = false;
        for (a, b) in [(0, 1), (1, 2), (0, 1)] {
            if idx[a] > idx[b] {
                idx.swap(a, b);
                odd = !odd;
            }
        }
        if idx[0] == idx[1] || idx[1] == idx[2] {
            return T::zero();
        }
        let c = self.coeffs[triple_index(self.dim, idx[0], idx[1], idx[2])];
        if odd {
            -c
        } else {
            c
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize, usize), T)> + '_ {
        triples(self.dim).zip(self.coeffs.iter().copied())
    }

    pub fn magnitude(&self) -> T {
        norm(&self.coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|x| x.is_zero())
    }
}

/// An antisymmetric `n × n` matrix, an element of the Lie algebra of rotations.
#[derive(Debug, Clone, PartialEq)]
pub struct SkewMatrix<T> {
    dim: usize,
    entries: Vec<T>,
}

impl<T: Real> SkewMatrix<T> {
    pub fn zero(dim: usize) -> Self {
        Self { dim, entries: vec![T::zero(); dim * dim] }
    }

    /// Builds the matrix from its strictly upper entries `X(i, j)`, `i < j`,
    /// in lexicographic pair order.
    pub fn from_upper(dim: usize, upper: Vec<T>) -> Result<Self> {
        check_count(pair_count(dim), upper.len())?;
        check_finite(&upper)?;
        let mut m = Self::zero(dim);
        for ((i, j), c) in pairs(dim).zip(upper) {
            m.entries[i * dim + j] = c;
            m.entries[j * dim + i] = -c;
        }
        Ok(m)
    }

    /// Builds the matrix from rows, checking exact antisymmetry.
    pub fn try_from_rows(rows: &[Vec<T>]) -> Result<Self> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            check_dim(dim, row.len())?;
            check_finite(row)?;
            entries.extend_from_slice(row);
        }
        for i in 0..dim {
            for j in i..dim {
                if entries[i * dim + j] != -entries[j * dim + i] {
                    return Err(Error::NotAntisymmetric { row: i, col: j });
                }
            }
        }
        Ok(Self { dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        self.entries[i * self.dim + j]
    }

    /// Strictly upper entries in lexicographic pair order.
    pub fn upper(&self) -> Vec<T> {
        pairs(self.dim).map(|(i, j)| self.get(i, j)).collect()
    }

    /// Matrix-vector product `X u`.
    pub fn apply(&self, u: &Vector<T>) -> Result<Vector<T>> {
        check_dim(self.dim, u.dim)?;
        Ok(Vector::new(
            (0..self.dim)
                .map(|i| (0..self.dim).map(|j| self.get(i, j) * u[j]).sum())
                .collect(),
        ))
    }

    /// Inverse of [`Bivector::to_skew`].
    pub fn to_bivector(&self) -> Bivector<T> {
        Bivector { dim: self.dim, coeffs: self.upper().into_iter().map(|c| -c).collect() }
    }
}

/// Factors `a = u ∧ w` when `u ∧ a` vanishes.
///
/// Returns the representative `w` orthogonal to `u`, or `None` when
/// `|u ∧ a| > tol · |u| · |a|`.
pub fn trivector_factor<T: Real>(u: &Vector<T>, a: &Bivector<T>, tol: T) -> Result<Option<Vector<T>>> {
    check_dim(u.dim, a.dim)?;
    if u.is_zero() {
        return Err(Error::ZeroVector);
    }
    let kappa = u.wedge_bivector(a)?;
    if kappa.magnitude() > tol * u.norm() * a.magnitude() {
        return Ok(None);
    }
    Ok(Some(u.interior(a)? * (T::one() / u.norm_squared())))
}

/// Orthogonal splitting `a = beta + u ∧ z` with `u ⌟ beta = 0` and `z ⊥ u`.
#[derive(Debug, Clone, PartialEq)]
pub struct OrthogonalSplit<T> {
    pub beta: Bivector<T>,
    pub z: Vector<T>,
}

pub fn orthogonal_split<T: Real>(u: &Vector<T>, a: &Bivector<T>) -> Result<OrthogonalSplit<T>> {
    check_dim(u.dim, a.dim)?;
    if u.is_zero() {
        return Err(Error::ZeroVector);
    }
    // u ⌟ (u ∧ z) = |u|² z for z ⊥ u, so z is fixed by the interior product.
    let z = u.interior(a)? * (T::one() / u.norm_squared());
    let beta = a - &u.wedge(&z)?;
    Ok(OrthogonalSplit { beta, z })
}
