//! Points of the affine space `E` and the (n+1)-dimensional space of point
//! vectors that contains both `E` (level 1) and `V` (level 0).

use std::ops::{Add, Mul, Sub};

use crate::error::{check_dim, Error, Result};
use crate::exterior::Vector;
use crate::scalar::Real;

/// A point of `E`, in coordinates relative to the coordinate origin.
#[derive(Debug, Clone, PartialEq)]
pub struct Point<T> {
    coords: Vec<T>,
}

impl<T: Real> Point<T> {
    pub fn new(coords: Vec<T>) -> Self {
        Self { coords }
    }

    pub fn try_new(coords: Vec<T>) -> Result<Self> {
        if coords.iter().all(|x| x.is_finite()) {
            Ok(Self::new(coords))
        } else {
            Err(Error::NonFinite)
        }
    }

    pub fn origin(dim: usize) -> Self {
        Self { coords: vec![T::zero(); dim] }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[T] {
        &self.coords
    }

    /// Displacement from the coordinate origin.
    pub fn to_vector(&self) -> Vector<T> {
        Vector::new(self.coords.clone())
    }

    pub fn from_vector(v: &Vector<T>) -> Self {
        Self { coords: v.coords().to_vec() }
    }

    /// `self - other`, checked.
    pub fn displacement_from(&self, other: &Self) -> Result<Vector<T>> {
        check_dim(self.dim(), other.dim())?;
        Ok(Vector::new(self.coords.iter().zip(&other.coords).map(|(&a, &b)| a - b).collect()))
    }

    /// `self + v`, checked.
    pub fn translate(&self, v: &Vector<T>) -> Result<Self> {
        check_dim(self.dim(), v.dim())?;
        Ok(Self { coords: self.coords.iter().zip(v.coords()).map(|(&a, &b)| a + b).collect() })
    }
}

impl<T: Real> Sub for &Point<T> {
    type Output = Vector<T>;
    fn sub(self, rhs: &Point<T>) -> Vector<T> {
        self.displacement_from(rhs).expect("dimension mismatch")
    }
}

impl<T: Real> Add<&Vector<T>> for &Point<T> {
    type Output = Point<T>;
    fn add(self, rhs: &Vector<T>) -> Point<T> {
        self.translate(rhs).expect("dimension mismatch")
    }
}

/// An element `t P₀ + u` of the point-vector space, stored relative to the
/// coordinate origin `P₀` as `(level, vector part)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PointVector<T> {
    level: T,
    vpart: Vector<T>,
}

impl<T: Real> PointVector<T> {
    pub fn new(level: T, vpart: Vector<T>) -> Self {
        Self { level, vpart }
    }

    /// A point of `E` sits at level one.
    pub fn from_point(p: &Point<T>) -> Self {
        Self { level: T::one(), vpart: p.to_vector() }
    }

    /// A free vector sits at level zero.
    pub fn from_vector(u: &Vector<T>) -> Self {
        Self { level: T::zero(), vpart: u.clone() }
    }

    pub fn dim(&self) -> usize {
        self.vpart.dim()
    }

    /// The level function `ℓ`.
    pub fn level(&self) -> T {
        self.level
    }

    /// Vector part relative to the coordinate origin.
    pub fn vpart(&self) -> &Vector<T> {
        &self.vpart
    }

    /// Unique decomposition `self = t P + u` relative to `p`.
    pub fn resolve(&self, p: &Point<T>) -> Result<(T, Vector<T>)> {
        check_dim(self.dim(), p.dim())?;
        Ok((self.level, &self.vpart - &(&p.to_vector() * self.level)))
    }

    /// Inverse of [`PointVector::resolve`].
    pub fn compose(t: T, p: &Point<T>, u: &Vector<T>) -> Result<Self> {
        check_dim(p.dim(), u.dim())?;
        Ok(Self { level: t, vpart: &(&p.to_vector() * t) + u })
    }

    /// The weighted point `(t, Q)` with `self = t Q`, when the level is nonzero.
    pub fn as_weighted_point(&self) -> Option<(T, Point<T>)> {
        if self.level.is_zero() {
            None
        } else {
            Some((self.level, Point::from_vector(&(&self.vpart * (T::one() / self.level)))))
        }
    }

    /// The free vector, when the level is zero.
    pub fn as_free_vector(&self) -> Option<&Vector<T>> {
        self.level.is_zero().then_some(&self.vpart)
    }

    /// Interior product with the level function on the decomposable
    /// `self ∧ other`: `ℓ ⌟ (A ∧ B) = ℓ(A) B − ℓ(B) A`.
    pub fn level_interior(&self, other: &Self) -> Result<Self> {
        check_dim(self.dim(), other.dim())?;
        Ok(&(other * self.level) + &(self * -other.level))
    }
}

impl<T: Real> Add for &PointVector<T> {
    type Output = PointVector<T>;
    fn add(self, rhs: &PointVector<T>) -> PointVector<T> {
        PointVector { level: self.level + rhs.level, vpart: &self.vpart + &rhs.vpart }
    }
}

impl<T: Real> Mul<T> for &PointVector<T> {
    type Output = PointVector<T>;
    fn mul(self, s: T) -> PointVector<T> {
        PointVector { level: self.level * s, vpart: &self.vpart * s }
    }
}

/// `s P + t Q`: a weighted point of weight `s + t`, or the free vector
/// `t (Q − P)` when `s + t = 0`.
pub fn weighted_sum<T: Real>(s: T, p: &Point<T>, t: T, q: &Point<T>) -> Result<PointVector<T>> {
    check_dim(p.dim(), q.dim())?;
    if (s + t).is_zero() {
        return Ok(PointVector::from_vector(&(&(q - p) * t)));
    }
    Ok(&(&PointVector::from_point(p) * s) + &(&PointVector::from_point(q) * t))
}

/// The displacement function `O ↦ t (P − O) + u`.
pub fn displacement_eval<T: Real>(t: T, p: &Point<T>, u: &Vector<T>, o: &Point<T>) -> Result<Vector<T>> {
    check_dim(p.dim(), u.dim())?;
    check_dim(p.dim(), o.dim())?;
    Ok(&(&(p - o) * t) + u)
}
