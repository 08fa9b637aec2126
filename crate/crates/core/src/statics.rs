//! Rigid-body statics on top of line bivectors.

use crate::error::{check_dim, Error, Result};
use crate::exterior::{Bivector, Vector};
use crate::point::Point;
use crate::screw::{Classification, LineBivector, SlidingVector};
use crate::scalar::Real;

/// Forces applied at points, plus free couples.
#[derive(Debug, Clone, PartialEq)]
pub struct ForceSystem<T> {
    dim: usize,
    forces: Vec<(Point<T>, Vector<T>)>,
    couples: Vec<Bivector<T>>,
}

impl<T: Real> ForceSystem<T> {
    pub fn new(dim: usize) -> Self {
        Self { dim, forces: Vec::new(), couples: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn forces(&self) -> &[(Point<T>, Vector<T>)] {
        &self.forces
    }

    pub fn couples(&self) -> &[Bivector<T>] {
        &self.couples
    }

    pub fn add_force(&mut self, point: Point<T>, force: Vector<T>) -> Result<()> {
        check_dim(self.dim, point.dim())?;
        check_dim(self.dim, force.dim())?;
        self.forces.push((point, force));
        Ok(())
    }

    pub fn add_couple(&mut self, couple: Bivector<T>) -> Result<()> {
        check_dim(self.dim, couple.dim())?;
        self.couples.push(couple);
        Ok(())
    }

    pub fn with_force(mut self, point: Point<T>, force: Vector<T>) -> Result<Self> {
        self.add_force(point, force)?;
        Ok(self)
    }

    pub fn with_couple(mut self, couple: Bivector<T>) -> Result<Self> {
        self.add_couple(couple)?;
        Ok(self)
    }

    /// `Σ P_i ∧ u_i + Σ c_j`.
    pub fn resultant(&self) -> LineBivector<T> {
        let mut total = LineBivector::zero(self.dim);
        for (p, u) in &self.forces {
            total = total + LineBivector::from_sliding(p, u).expect("checked on insertion");
        }
        for c in &self.couples {
            total = total + LineBivector::from_couple(c.clone());
        }
        total
    }

    /// Magnitude scale of the input: the largest of `|u_i| max(1, |P_i|)`
    /// and `|c_j|`.
    pub fn scale(&self) -> T {
        let forces = self
            .forces
            .iter()
            .map(|(p, u)| u.norm() * T::one().max(p.to_vector().norm()));
        let couples = self.couples.iter().map(Bivector::magnitude);
        forces.chain(couples).fold(T::zero(), T::max)
    }

    /// The resultant vanishes: `|Σ u_i|` and `|M(O₀)|` are both at most `tol * scale`.
    pub fn is_equilibrium(&self, tol: T) -> bool {
        let r = self.resultant();
        let floor = tol * self.scale();
        r.vector_invariant().norm() <= floor && r.moment_at_origin().magnitude() <= floor
    }

    /// Classification of the resultant with zero tests relative to [`ForceSystem::scale`].
    pub fn classify(&self, tol: T) -> Classification<T> {
        self.resultant().classify_scaled(tol, self.scale())
    }
}

/// The only outcomes for a plane force system.
#[derive(Debug, Clone, PartialEq)]
pub enum PlanarClass<T: Real> {
    Zero,
    Sliding(SlidingVector<T>),
    Couple(Bivector<T>),
}

/// Classifies a planar screw; with no trivectors in the plane the general
/// case cannot occur.
pub fn classify_planar<T: Real>(m: &LineBivector<T>, tol: T, scale: T) -> Result<PlanarClass<T>> {
    if m.dim() != 2 {
        return Err(Error::UnsupportedDimension { required: 2, found: m.dim() });
    }
    Ok(match m.classify_scaled(tol, scale) {
        Classification::Zero => PlanarClass::Zero,
        Classification::Sliding(s) => PlanarClass::Sliding(s),
        Classification::Couple(c) => PlanarClass::Couple(c),
        Classification::General => unreachable!("trivector invariant is empty in two dimensions"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn system(forces: &[([f64; 2], [f64; 2])]) -> ForceSystem<f64> {
        let mut s = ForceSystem::new(2);
        for (p, u) in forces {
            s.add_force(Point::new(p.to_vec()), Vector::new(u.to_vec())).unwrap();
        }
        s
    }

    fn triangle() -> ForceSystem<f64> {
        system(&[([0.0, 0.0], [1.0, 1.0]), ([1.0, 0.0], [0.0, -1.0]), ([0.0, 1.0], [-1.0, 0.0])])
    }

    fn lever() -> ForceSystem<f64> {
        system(&[([-2.0, 0.0], [0.0, 1.0]), ([1.0, 0.0], [0.0, 2.0]), ([0.0, 0.0], [0.0, -3.0])])
    }

    fn opposite_pair() -> ForceSystem<f64> {
        system(&[([0.0, 0.0], [0.0, 1.0]), ([1.0, 0.0], [0.0, -1.0])])
    }

    #[test]
    fn resultant_examples() {
        assert_eq!(ForceSystem::<f64>::new(3).resultant(), LineBivector::zero(3));
        let r = triangle().resultant();
        assert_eq!(r, LineBivector::zero(2));
        for o in [[0.0, 0.0], [1.0, 1.0], [-3.0, 2.0], [0.5, -7.0], [10.0, 10.0]] {
            assert!(r.moment_at(&Point::new(o.to_vec())).unwrap().is_zero());
        }
        assert_eq!(
            opposite_pair().resultant(),
            LineBivector::from_couple(Bivector::from_pairs(2, [((0, 1), -1.0)]))
        );
    }

    #[test]
    fn total_force_is_vector_invariant() {
        let s = system(&[([1.0, 2.0], [0.5, 0.0]), ([-1.0, 4.0], [1.0, -2.0])])
            .with_couple(Bivector::basis(2, 0, 1))
            .unwrap();
        assert_eq!(s.resultant().vector_invariant(), &Vector::new(vec![1.5, -2.0]));
    }

    #[test]
    fn equilibrium_examples() {
        assert!(triangle().is_equilibrium(1e-9));
        assert!(lever().is_equilibrium(1e-9));
        assert!(!system(&[([0.0, 0.0], [1.0, 0.0])]).is_equilibrium(1e-9));
        assert!(!opposite_pair().is_equilibrium(1e-9));
        assert!(ForceSystem::<f64>::new(2).is_equilibrium(1e-9));
    }

    #[test]
    fn lever_fulcrum_is_weighted_point() {
        // u = (0,1) at P, v = (0,2) at Q: a = 1/3, b = 2/3
        let (p, q) = (Point::new(vec![-2.0, 0.0]), Point::new(vec![1.0, 0.0]));
        let r = crate::point::weighted_sum::<f64>(1.0 / 3.0, &p, 2.0 / 3.0, &q).unwrap();
        let (w, fulcrum) = r.as_weighted_point().unwrap();
        assert!((w - 1.0).abs() < 1e-15);
        assert!(fulcrum.coords().iter().all(|x: &f64| x.abs() < 1e-15));
    }

    #[test]
    fn planar_examples() {
        let one = system(&[([2.0, 1.0], [1.0, 3.0])]);
        assert!(matches!(classify_planar(&one.resultant(), 1e-9, one.scale()).unwrap(), PlanarClass::Sliding(_)));
        let pair = opposite_pair();
        assert_eq!(
            classify_planar(&pair.resultant(), 1e-9, pair.scale()).unwrap(),
            PlanarClass::Couple(Bivector::from_pairs(2, [((0, 1), -1.0)]))
        );
        let tri = triangle();
        assert_eq!(classify_planar(&tri.resultant(), 1e-9, tri.scale()).unwrap(), PlanarClass::Zero);
        assert!(classify_planar(&LineBivector::<f64>::zero(3), 1e-9, 1.0).is_err());
    }

    #[test]
    fn mixed_dimensions_rejected() {
        let mut s = ForceSystem::<f64>::new(2);
        assert!(s.add_force(Point::new(vec![0.0, 0.0, 0.0]), Vector::zeros(2)).is_err());
        assert!(s.add_couple(Bivector::zero(3)).is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn force(n: usize) -> impl Strategy<Value = (Vec<f64>, Vec<f64>)> {
            (prop::collection::vec(-10.0..10.0f64, n), prop::collection::vec(-10.0..10.0f64, n))
        }

        proptest! {
            #[test]
            fn zero_sum_systems_have_constant_moment(
                (fs, o1, o2) in (2usize..5).prop_flat_map(|n| (
                    prop::collection::vec(force(n), 1..6),
                    prop::collection::vec(-10.0..10.0f64, n),
                    prop::collection::vec(-10.0..10.0f64, n),
                ))
            ) {
                let n = o1.len();
                let mut s = ForceSystem::new(n);
                let mut total = Vector::zeros(n);
                for (p, u) in &fs {
                    let u = Vector::new(u.clone());
                    total += &u;
                    s.add_force(Point::new(p.clone()), u).unwrap();
                }
                // balance the total force at an arbitrary point
                s.add_force(Point::new(o1.clone()), -total).unwrap();
                let r = s.resultant();
                let m1 = r.moment_at(&Point::new(o1)).unwrap();
                let m2 = r.moment_at(&Point::new(o2)).unwrap();
                prop_assert!((&m1 - &m2).magnitude() <= 1e-9 * s.scale().max(1.0));
            }

            #[test]
            fn resultant_is_permutation_invariant(fs in prop::collection::vec(force(3), 1..6), rot in 0usize..6) {
                let mut a = ForceSystem::new(3);
                let mut b = ForceSystem::new(3);
                for (p, u) in &fs {
                    a.add_force(Point::new(p.clone()), Vector::new(u.clone())).unwrap();
                }
                let k = rot % fs.len();
                for (p, u) in fs[k..].iter().chain(&fs[..k]).rev() {
                    b.add_force(Point::new(p.clone()), Vector::new(u.clone())).unwrap();
                }
                prop_assert!(a.resultant().relative_difference(&b.resultant()) <= 1e-12
                    || (a.resultant() - b.resultant()).norm() <= 1e-12 * a.scale());
            }

            #[test]
            fn concurrent_balanced_forces_are_in_equilibrium(
                s_pt in prop::collection::vec(-10.0..10.0f64, 3),
                fs in prop::collection::vec((prop::collection::vec(-10.0..10.0f64, 3), -5.0..5.0f64), 1..5),
            ) {
                let s_pt = Point::new(s_pt);
                let mut sys = ForceSystem::new(3);
                let mut total = Vector::zeros(3);
                for (u, t) in &fs {
                    let u = Vector::new(u.clone());
                    // a point on the line through S with direction u
                    let p = &s_pt + &(&u * *t);
                    total += &u;
                    sys.add_force(p, u).unwrap();
                }
                sys.add_force(&s_pt + &(&total * 0.7), -total).unwrap();
                prop_assert!(sys.is_equilibrium(1e-9));
            }
        }
    }
}
