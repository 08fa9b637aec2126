//! Line bivectors (screws): sliding vectors, couples, and their sums.
//!
//! A line bivector `M = P ∧ u + α` is stored through its moment function at
//! the coordinate origin `O₀`, as the pair `(u, M(O₀))`. The pair is unique,
//! so structural equality on [`LineBivector`] is equality of screws.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{check_dim, Error, Result};
use crate::exterior::{orthogonal_split, pair_count, Bivector, Trivector, Vector};
use crate::linalg::{least_squares, Matrix, Solve};
use crate::point::Point;
use crate::scalar::{relative_difference, Real};

#[derive(Debug, Clone, PartialEq)]
pub struct LineBivector<T> {
    u: Vector<T>,
    m0: Bivector<T>,
}

impl<T: Real> LineBivector<T> {
    /// From the vector invariant and the moment at the coordinate origin.
    pub fn new(u: Vector<T>, m0: Bivector<T>) -> Result<Self> {
        check_dim(u.dim(), m0.dim())?;
        Ok(Self { u, m0 })
    }

    pub fn zero(dim: usize) -> Self {
        Self { u: Vector::zeros(dim), m0: Bivector::zero(dim) }
    }

    /// The sliding vector `P ∧ u`.
    pub fn from_sliding(p: &Point<T>, u: &Vector<T>) -> Result<Self> {
        check_dim(p.dim(), u.dim())?;
        Ok(Self { u: u.clone(), m0: p.to_vector().wedge(u)? })
    }

    /// A bivector viewed as a constant moment function.
    pub fn from_couple(a: Bivector<T>) -> Self {
        Self { u: Vector::zeros(a.dim()), m0: a }
    }

    /// `P ∧ u + α`.
    pub fn from_parts(p: &Point<T>, u: &Vector<T>, alpha: &Bivector<T>) -> Result<Self> {
        check_dim(p.dim(), alpha.dim())?;
        let mut m = Self::from_sliding(p, u)?;
        m.m0 += alpha;
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.u.dim()
    }

    /// Number of free coefficients, `n + n(n−1)/2`.
    pub fn coefficient_count(&self) -> usize {
        self.dim() + pair_count(self.dim())
    }

    /// `u` followed by the coefficients of `M(O₀)`.
    pub fn coeffs(&self) -> Vec<T> {
        self.u.coords().iter().chain(self.m0.coeffs()).copied().collect()
    }

    pub fn vector_invariant(&self) -> &Vector<T> {
        &self.u
    }

    pub fn moment_at_origin(&self) -> &Bivector<T> {
        &self.m0
    }

    /// Moment function `M(O) = M(O₀) + (O₀ − O) ∧ u`.
    pub fn moment_at(&self, o: &Point<T>) -> Result<Bivector<T>> {
        check_dim(self.dim(), o.dim())?;
        Ok(&self.m0 - &o.to_vector().wedge(&self.u)?)
    }

    /// `u ∧ M(O)`, the same at every reference point.
    pub fn trivector_invariant(&self) -> Trivector<T> {
        self.u.wedge_bivector(&self.m0).expect("dimensions agree")
    }

    /// `u₁ ∧ M₂(O) + u₂ ∧ M₁(O)`, evaluated at the origin.
    pub fn bilinear_trivector_invariant(&self, other: &Self) -> Result<Trivector<T>> {
        check_dim(self.dim(), other.dim())?;
        Ok(&self.u.wedge_bivector(&other.m0)? + &other.u.wedge_bivector(&self.m0)?)
    }

    /// Norm of the coefficient pair `(u, M(O₀))`.
    pub fn norm(&self) -> T {
        (self.u.norm_squared() + self.m0.magnitude().powi(2)).sqrt()
    }

    /// Relative distance between coefficient pairs.
    pub fn relative_difference(&self, other: &Self) -> T {
        relative_difference(&self.coeffs(), &other.coeffs())
    }

    pub fn scale(&self, c: T) -> Self {
        Self { u: &self.u * c, m0: &self.m0 * c }
    }

    /// Classification with exact zero tests on `u` and `M(O₀)` and a relative
    /// test `|u ∧ M| ≤ tol |u| |M|` for the sliding case.
    pub fn classify(&self, tol: T) -> Classification<T> {
        self.classify_scaled(tol, T::zero())
    }

    /// As [`LineBivector::classify`], but `u` and `M(O₀)` count as zero when
    /// their norms do not exceed `tol * scale`.
    pub fn classify_scaled(&self, tol: T, scale: T) -> Classification<T> {
        let floor = tol * scale;
        let u_zero = self.u.norm() <= floor;
        let m_zero = self.m0.magnitude() <= floor;
        match (u_zero, m_zero) {
            (true, true) => Classification::Zero,
            (true, false) => Classification::Couple(self.m0.clone()),
            (false, _) => {
                let kappa = self.trivector_invariant().magnitude();
                if kappa <= tol * self.u.norm() * self.m0.magnitude() {
                    let point = self.axis_point();
                    Classification::Sliding(SlidingVector { point, vector: self.u.clone() })
                } else {
                    Classification::General
                }
            }
        }
    }

    // Axis point closest to the origin; requires u ≠ 0.
    fn axis_point(&self) -> Point<T> {
        let split = orthogonal_split(&self.u, &self.m0).expect("nonzero vector invariant");
        Point::from_vector(&-split.z)
    }

    /// Poinsot reduction `M = Q ∧ u + β` with `u ⌟ β = 0`.
    ///
    /// `Q` is the axis point with `(Q − O₀) · u = 0`.
    pub fn central_axis(&self) -> AxisDecomposition<T> {
        if self.u.is_zero() {
            return AxisDecomposition::PureCouple { beta: self.m0.clone() };
        }
        // M(O₀) = β + u ∧ z and M(O₀) = (Q − O₀) ∧ u + β give Q − O₀ = −z.
        let split = orthogonal_split(&self.u, &self.m0).expect("nonzero vector invariant");
        AxisDecomposition::SlidingPlusCouple {
            point: Point::from_vector(&-split.z),
            u: self.u.clone(),
            beta: split.beta,
        }
    }

    /// Expresses the screw as `Σ P_i ∧ u_i` over the first `n` of `n + 1`
    /// affinely independent points.
    pub fn decompose_at_points(&self, points: &[Point<T>]) -> Result<Vec<SlidingVector<T>>> {
        let n = self.dim();
        if points.len() != n + 1 {
            return Err(Error::PointCount { expected: n + 1, found: points.len() });
        }
        for p in points {
            check_dim(n, p.dim())?;
        }
        let tol = T::default_tolerance();

        let edges: Vec<Vec<T>> = points[1..].iter().map(|p| (p - &points[0]).into_coords()).collect();
        if n > 0 && least_squares(&Matrix::from_columns(n, &edges), &vec![T::zero(); n], tol) == Solve::RankDeficient {
            return Err(Error::AffinelyDependent);
        }

        // Basis P_i ∧ P_j = P_i ∧ (P_j − P_i) of the line-bivector space.
        let mut index = Vec::new();
        let mut columns = Vec::new();
        for i in 0..=n {
            for j in i + 1..=n {
                let basis = Self::from_sliding(&points[i], &(&points[j] - &points[i]))?;
                index.push((i, j));
                columns.push(basis.coeffs());
            }
        }
        let a = Matrix::from_columns(self.coefficient_count(), &columns);
        let c = match least_squares(&a, &self.coeffs(), tol) {
            Solve::Solution { x, .. } => x,
            Solve::RankDeficient => return Err(Error::AffinelyDependent),
        };

        let mut parts: Vec<SlidingVector<T>> =
            points[..n].iter().map(|p| SlidingVector::new(p.clone(), Vector::zeros(n))).collect();
        for (&(i, j), &cij) in index.iter().zip(&c) {
            if i < n {
                parts[i].vector += &(&(&points[j] - &points[i]) * cij);
            }
        }
        Ok(parts)
    }

    /// Recovers the screw from its moments at three non-collinear points.
    ///
    /// Solves `(O₂ − O₁) ∧ u = m₁ − m₂`, `(O₃ − O₁) ∧ u = m₁ − m₃` in the
    /// least-squares sense and rejects data whose residual exceeds
    /// `tol` relative to the data scale.
    pub fn from_three_moments(points: [&Point<T>; 3], moments: [&Bivector<T>; 3], tol: T) -> Result<Self> {
        let n = points[0].dim();
        for p in &points[1..] {
            check_dim(n, p.dim())?;
        }
        for m in &moments {
            check_dim(n, m.dim())?;
        }
        let d2 = points[1] - points[0];
        let d3 = points[2] - points[0];
        if d2.wedge(&d3)?.magnitude() <= tol * d2.norm() * d3.norm() || d2.is_zero() || d3.is_zero() {
            return Err(Error::Collinear);
        }

        let rows = 2 * pair_count(n);
        let columns: Vec<Vec<T>> = (0..n)
            .map(|k| {
                let ek = Vector::basis(n, k);
                let mut col = d2.wedge(&ek).expect("dims").coeffs().to_vec();
                col.extend_from_slice(d3.wedge(&ek).expect("dims").coeffs());
                col
            })
            .collect();
        let mut rhs = (moments[0] - moments[1]).coeffs().to_vec();
        rhs.extend_from_slice((moments[0] - moments[2]).coeffs());

        let (u, residual) = match least_squares(&Matrix::from_columns(rows, &columns), &rhs, tol) {
            Solve::Solution { x, residual } => (Vector::new(x), residual),
            Solve::RankDeficient => return Err(Error::Collinear),
        };
        let rhs_norm = rhs.iter().map(|&x| x * x).sum::<T>().sqrt();
        let scale = rhs_norm.max(d2.norm().max(d3.norm()) * u.norm());
        if residual > tol * scale {
            let rel = (residual / scale).to_f64().unwrap_or(f64::INFINITY);
            return Err(Error::NotMomentFunction { residual: rel });
        }
        let m0 = moments[0] + &points[0].to_vector().wedge(&u)?;
        Ok(Self { u, m0 })
    }
}

macro_rules! impl_screw_ops {
    ($($lhs:ty, $rhs:ty);*) => {$(
        impl<T: Real> Add<$rhs> for $lhs {
            type Output = LineBivector<T>;
            fn add(self, rhs: $rhs) -> LineBivector<T> {
                LineBivector { u: &self.u + &rhs.u, m0: &self.m0 + &rhs.m0 }
            }
        }
        impl<T: Real> Sub<$rhs> for $lhs {
            type Output = LineBivector<T>;
            fn sub(self, rhs: $rhs) -> LineBivector<T> {
                LineBivector { u: &self.u - &rhs.u, m0: &self.m0 - &rhs.m0 }
            }
        }
    )*};
}

impl_screw_ops!(LineBivector<T>, LineBivector<T>; &LineBivector<T>, &LineBivector<T>);

impl<T: Real> Neg for &LineBivector<T> {
    type Output = LineBivector<T>;
    fn neg(self) -> LineBivector<T> {
        self.scale(-T::one())
    }
}

impl<T: Real> Mul<T> for &LineBivector<T> {
    type Output = LineBivector<T>;
    fn mul(self, c: T) -> LineBivector<T> {
        self.scale(c)
    }
}

impl<T: Real> std::iter::Sum for LineBivector<T> {
    /// Panics on an empty iterator, which has no dimension.
    fn sum<I: Iterator<Item = Self>>(mut iter: I) -> Self {
        let first = iter.next().expect("sum of an empty screw iterator");
        iter.fold(first, |acc, m| acc + m)
    }
}

/// A vector bound to a line: the pair `(P, u)` up to sliding `P` along `u`.
#[derive(Debug, Clone)]
pub struct SlidingVector<T> {
    pub point: Point<T>,
    pub vector: Vector<T>,
}

impl<T: Real> SlidingVector<T> {
    pub fn new(point: Point<T>, vector: Vector<T>) -> Self {
        Self { point, vector }
    }

    pub fn zero(dim: usize) -> Self {
        Self::new(Point::origin(dim), Vector::zeros(dim))
    }

    pub fn to_screw(&self) -> LineBivector<T> {
        LineBivector::from_sliding(&self.point, &self.vector).expect("point and vector share a dimension")
    }

    /// Equal vectors and `(Q − P) ∧ u` within `tol` relative to `|Q − P| |u|`.
    pub fn approx_eq(&self, other: &Self, tol: T) -> bool {
        if relative_difference(self.vector.coords(), other.vector.coords()) > tol {
            return false;
        }
        let d = &other.point - &self.point;
        let w = d.wedge(&self.vector).expect("dims");
        w.magnitude() <= tol * d.norm() * self.vector.norm()
    }
}

impl<T: Real> PartialEq for SlidingVector<T> {
    fn eq(&self, other: &Self) -> bool {
        self.vector == other.vector
            && self.point.dim() == other.point.dim()
            && (&other.point - &self.point).wedge(&self.vector).map(|w| w.is_zero()).unwrap_or(false)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Classification<T: Real> {
    Zero,
    /// A sliding vector, given in root-slope form through the axis point
    /// nearest the origin.
    Sliding(SlidingVector<T>),
    Couple(Bivector<T>),
    General,
}

impl<T: Real> Classification<T> {
    pub fn name(&self) -> &'static str {
        match self {
            Classification::Zero => "zero",
            Classification::Sliding(_) => "sliding",
            Classification::Couple(_) => "couple",
            Classification::General => "general",
        }
    }
}

/// Central-axis form of a screw.
#[derive(Debug, Clone, PartialEq)]
pub enum AxisDecomposition<T> {
    /// `Q ∧ u + β` with `u ⌟ β = 0`.
    SlidingPlusCouple { point: Point<T>, u: Vector<T>, beta: Bivector<T> },
    /// `u = 0`: the screw is the bivector `β` everywhere.
    PureCouple { beta: Bivector<T> },
}

impl<T: Real> AxisDecomposition<T> {
    pub fn beta(&self) -> &Bivector<T> {
        match self {
            AxisDecomposition::SlidingPlusCouple { beta, .. } | AxisDecomposition::PureCouple { beta } => beta,
        }
    }

    pub fn axis_point(&self) -> Option<&Point<T>> {
        match self {
            AxisDecomposition::SlidingPlusCouple { point, .. } => Some(point),
            AxisDecomposition::PureCouple { .. } => None,
        }
    }

    pub fn recompose(&self) -> LineBivector<T> {
        match self {
            AxisDecomposition::SlidingPlusCouple { point, u, beta } => {
                LineBivector::from_parts(point, u, beta).expect("dims")
            }
            AxisDecomposition::PureCouple { beta } => LineBivector::from_couple(beta.clone()),
        }
    }
}

/// `P ∧ u + v ∧ w = P ∧ (u − w) + (P + v) ∧ w`.
pub fn decompose_two<T: Real>(
    p: &Point<T>,
    u: &Vector<T>,
    v: &Vector<T>,
    w: &Vector<T>,
) -> Result<(SlidingVector<T>, SlidingVector<T>)> {
    check_dim(p.dim(), u.dim())?;
    check_dim(p.dim(), v.dim())?;
    check_dim(p.dim(), w.dim())?;
    Ok((SlidingVector::new(p.clone(), u - w), SlidingVector::new(p + v, w.clone())))
}
