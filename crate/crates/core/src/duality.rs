//! Wrenches and twists: force covectors paired against rigid velocity fields.
//!
//! Angular velocities live in the Lie algebra of antisymmetric matrices and
//! torques in its dual. A torque `A` pairs with `ω` as
//! `⟨A, ω⟩ = Σ_{i<j} A_ij ω_ij` where `ω_ij` are the strictly upper entries
//! of the matrix. With that pairing the moment map has coefficients
//! `(z ⊓ u)_ij = u_i z_j − u_j z_i`, which is `−(z ∧ u)_ij`.
//!
//! Vectors and covectors (and bivectors and torques) are kept as distinct
//! types; conversions between them are explicit.

use std::ops::{Add, Neg, Sub};

use crate::error::{check_dim, Error, Result};
use crate::exterior::{pair_count, pairs, Bivector, SkewMatrix, Vector};
use crate::point::Point;
use crate::scalar::Real;
use crate::screw::LineBivector;

/// A linear function on `V`, such as a force.
#[derive(Debug, Clone, PartialEq)]
pub struct Covector<T> {
    coords: Vec<T>,
}

impl<T: Real> Covector<T> {
    pub fn new(coords: Vec<T>) -> Self {
        Self { coords }
    }

    pub fn zeros(dim: usize) -> Self {
        Self { coords: vec![T::zero(); dim] }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[T] {
        &self.coords
    }

    /// `u(x) = Σ u_i x_i`.
    pub fn apply(&self, x: &Vector<T>) -> Result<T> {
        check_dim(self.dim(), x.dim())?;
        Ok(self.coords.iter().zip(x.coords()).map(|(&a, &b)| a * b).sum())
    }

    /// Identification through the Euclidean inner product.
    pub fn from_vector(v: &Vector<T>) -> Self {
        Self { coords: v.coords().to_vec() }
    }

    pub fn to_vector(&self) -> Vector<T> {
        Vector::new(self.coords.clone())
    }
}

impl<T: Real> Add for &Covector<T> {
    type Output = Covector<T>;
    fn add(self, rhs: &Covector<T>) -> Covector<T> {
        assert_eq!(self.dim(), rhs.dim(), "dimension mismatch");
        Covector { coords: self.coords.iter().zip(&rhs.coords).map(|(&a, &b)| a + b).collect() }
    }
}

/// An element `ω` of the Lie algebra of rotations.
#[derive(Debug, Clone, PartialEq)]
pub struct AngularVelocity<T> {
    skew: SkewMatrix<T>,
}

impl<T: Real> AngularVelocity<T> {
    pub fn new(skew: SkewMatrix<T>) -> Self {
        Self { skew }
    }

    pub fn zero(dim: usize) -> Self {
        Self { skew: SkewMatrix::zero(dim) }
    }

    /// From the strictly upper matrix entries `ω_ij`, `i < j`.
    pub fn from_upper(dim: usize, upper: Vec<T>) -> Result<Self> {
        Ok(Self { skew: SkewMatrix::from_upper(dim, upper)? })
    }

    /// Right-handed angular-velocity pseudovector `w`, so that `ω r = w × r`.
    pub fn from_pseudovector(w: &Vector<T>) -> Result<Self> {
        Ok(Self { skew: Bivector::from_pseudovector(w)?.to_skew() })
    }

    pub fn dim(&self) -> usize {
        self.skew.dim()
    }

    pub fn skew(&self) -> &SkewMatrix<T> {
        &self.skew
    }

    pub fn apply(&self, x: &Vector<T>) -> Result<Vector<T>> {
        self.skew.apply(x)
    }
}

/// An element of the dual of the Lie algebra, such as a torque.
#[derive(Debug, Clone, PartialEq)]
pub struct TorqueElement<T> {
    dim: usize,
    coeffs: Vec<T>,
}

impl<T: Real> TorqueElement<T> {
    pub fn zero(dim: usize) -> Self {
        Self { dim, coeffs: vec![T::zero(); pair_count(dim)] }
    }

    pub fn from_coeffs(dim: usize, coeffs: Vec<T>) -> Result<Self> {
        if coeffs.len() != pair_count(dim) {
            return Err(Error::CoefficientCount { expected: pair_count(dim), found: coeffs.len() });
        }
        Ok(Self { dim, coeffs })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// `⟨A, ω⟩ = Σ_{i<j} A_ij ω_ij`.
    pub fn pair(&self, omega: &AngularVelocity<T>) -> Result<T> {
        check_dim(self.dim, omega.dim())?;
        Ok(pairs(self.dim)
            .zip(&self.coeffs)
            .map(|((i, j), &a)| a * omega.skew.get(i, j))
            .sum())
    }

    /// Same coefficients, reinterpreted as a bivector.
    pub fn to_bivector(&self) -> Bivector<T> {
        Bivector::from_coeffs(self.dim, self.coeffs.clone()).expect("pair count matches")
    }

    /// Same coefficients, reinterpreted as a torque.
    pub fn from_bivector(b: &Bivector<T>) -> Self {
        Self { dim: b.dim(), coeffs: b.coeffs().to_vec() }
    }

    /// Torque of a couple given as a bivector moment: `z ∧ u ↦ z ⊓ u`.
    pub fn from_couple(c: &Bivector<T>) -> Self {
        Self { dim: c.dim(), coeffs: c.coeffs().iter().map(|&x| -x).collect() }
    }
}

impl<T: Real> Add for &TorqueElement<T> {
    type Output = TorqueElement<T>;
    fn add(self, rhs: &TorqueElement<T>) -> TorqueElement<T> {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        TorqueElement { dim: self.dim, coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(&a, &b)| a + b).collect() }
    }
}

impl<T: Real> Sub for &TorqueElement<T> {
    type Output = TorqueElement<T>;
    fn sub(self, rhs: &TorqueElement<T>) -> TorqueElement<T> {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        TorqueElement { dim: self.dim, coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(&a, &b)| a - b).collect() }
    }
}

impl<T: Real> Neg for &TorqueElement<T> {
    type Output = TorqueElement<T>;
    fn neg(self) -> TorqueElement<T> {
        TorqueElement { dim: self.dim, coeffs: self.coeffs.iter().map(|&a| -a).collect() }
    }
}

/// The moment map `(z, u) ↦ z ⊓ u`, defined by `⟨z ⊓ u, ω⟩ = u(ω z)`.
pub fn moment_map<T: Real>(z: &Vector<T>, u: &Covector<T>) -> Result<TorqueElement<T>> {
    check_dim(z.dim(), u.dim())?;
    let (z, u) = (z.coords(), u.coords());
    Ok(TorqueElement {
        dim: z.len(),
        coeffs: pairs(z.len()).map(|(i, j)| u[i] * z[j] - u[j] * z[i]).collect(),
    })
}

/// Torque-valued moment function `M(O) = (P − O) ⊓ u + M(P)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Wrench<T> {
    point: Point<T>,
    force: Covector<T>,
    moment: TorqueElement<T>,
}

impl<T: Real> Wrench<T> {
    pub fn new(point: Point<T>, force: Covector<T>, moment: TorqueElement<T>) -> Result<Self> {
        check_dim(point.dim(), force.dim())?;
        check_dim(point.dim(), moment.dim())?;
        Ok(Self { point, force, moment })
    }

    /// Aggregate wrench of forces `u_i` applied at `P_i`, referred to `reference`.
    pub fn from_forces(forces: &[(Point<T>, Covector<T>)], reference: &Point<T>) -> Result<Self> {
        let n = reference.dim();
        let mut force = Covector::zeros(n);
        let mut moment = TorqueElement::zero(n);
        for (p, u) in forces {
            check_dim(n, p.dim())?;
            moment = &moment + &moment_map(&(p - reference), u)?;
            force = &force + u;
        }
        Ok(Self { point: reference.clone(), force, moment })
    }

    /// Repackages a screw: force `u` and torque `from_couple(M(P))` at `reference`.
    pub fn from_screw(screw: &LineBivector<T>, reference: &Point<T>) -> Result<Self> {
        Ok(Self {
            point: reference.clone(),
            force: Covector::from_vector(screw.vector_invariant()),
            moment: TorqueElement::from_couple(&screw.moment_at(reference)?),
        })
    }

    pub fn point(&self) -> &Point<T> {
        &self.point
    }

    pub fn force(&self) -> &Covector<T> {
        &self.force
    }

    pub fn moment(&self) -> &TorqueElement<T> {
        &self.moment
    }

    pub fn eval(&self, o: &Point<T>) -> Result<TorqueElement<T>> {
        Ok(&moment_map(&self.point.displacement_from(o)?, &self.force)? + &self.moment)
    }
}

/// Rigid velocity field `v(O) = ω (O − Q) + v(Q)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Twist<T> {
    point: Point<T>,
    omega: AngularVelocity<T>,
    velocity: Vector<T>,
}

impl<T: Real> Twist<T> {
    pub fn new(point: Point<T>, omega: AngularVelocity<T>, velocity: Vector<T>) -> Result<Self> {
        check_dim(point.dim(), omega.dim())?;
        check_dim(point.dim(), velocity.dim())?;
        Ok(Self { point, omega, velocity })
    }

    pub fn dim(&self) -> usize {
        self.point.dim()
    }

    pub fn point(&self) -> &Point<T> {
        &self.point
    }

    pub fn omega(&self) -> &AngularVelocity<T> {
        &self.omega
    }

    pub fn velocity(&self) -> &Vector<T> {
        &self.velocity
    }

    pub fn eval(&self, o: &Point<T>) -> Result<Vector<T>> {
        Ok(&self.omega.apply(&o.displacement_from(&self.point)?)? + &self.velocity)
    }
}

/// `u(v(O)) + ⟨M(O), ω⟩`, independent of `O`.
pub fn scalar_invariant<T: Real>(w: &Wrench<T>, t: &Twist<T>, o: &Point<T>) -> Result<T> {
    check_dim(w.point.dim(), t.dim())?;
    Ok(w.force.apply(&t.eval(o)?)? + w.eval(o)?.pair(&t.omega)?)
}

/// Power `Σ u_i(v(P_i))` of forces against a rigid motion.
pub fn power<T: Real>(forces: &[(Point<T>, Covector<T>)], t: &Twist<T>) -> Result<T> {
    forces
        .iter()
        .map(|(p, u)| u.apply(&t.eval(p)?))
        .try_fold(T::zero(), |acc, x| Ok(acc + x?))
}

/// Power `⟨A, ω⟩` of a free torque against a rigid motion.
pub fn couple_power<T: Real>(torque: &TorqueElement<T>, t: &Twist<T>) -> Result<T> {
    torque.pair(&t.omega)
}
