//! Sliding vectors and line bivectors (screws) in `n` dimensions.
//!
//! The crate models the affine space `E` and its vector space `V` through
//! dense coordinates over an orthonormal basis. On top of the exterior
//! algebra of `V` it provides:
//!
//! - [`point`]: points, free vectors and the point-vector space that holds both;
//! - [`screw`]: line bivectors as moment functions, their invariants, the
//!   central-axis reduction, and decompositions into sliding vectors;
//! - [`statics`]: force systems, resultants and equilibrium;
//! - [`duality`]: wrenches, twists and the power pairing between them.
//!
//! Every type is generic over the scalar ([`Real`], implemented for `f32`
//! and `f64`). The aliases at the crate root fix the scalar to `f64`.
//!
//! ```
//! use screw_core::{Bivector, LineBivector, Point, Vector};
//!
//! let m = LineBivector::from_sliding(&Point::new(vec![0.0, 1.0, 0.0]), &Vector::basis(3, 0)).unwrap();
//! assert_eq!(m.moment_at_origin(), &Bivector::from_pairs(3, [((0, 1), -1.0)]));
//! ```

pub mod duality;
pub mod error;
pub mod exterior;
mod linalg;
pub mod point;
pub mod scalar;
pub mod screw;
pub mod statics;

pub use duality::{
    couple_power, moment_map, power, scalar_invariant, AngularVelocity, Covector, TorqueElement, Twist, Wrench,
};
pub use error::{Error, Result};
pub use exterior::{
    orthogonal_split, pair_count, trivector_factor, triple_count, Bivector, OrthogonalSplit, SkewMatrix, Trivector,
    Vector,
};
pub use point::{displacement_eval, weighted_sum, Point, PointVector};
pub use scalar::{relative_difference, Real};
pub use screw::{decompose_two, AxisDecomposition, Classification, LineBivector, SlidingVector};
pub use statics::{classify_planar, ForceSystem, PlanarClass};

pub type Vector64 = Vector<f64>;
pub type Bivector64 = Bivector<f64>;
pub type Trivector64 = Trivector<f64>;
pub type SkewMatrix64 = SkewMatrix<f64>;
pub type Point64 = Point<f64>;
pub type PointVector64 = PointVector<f64>;
pub type Screw64 = LineBivector<f64>;
pub type SlidingVector64 = SlidingVector<f64>;
pub type ForceSystem64 = ForceSystem<f64>;
pub type Covector64 = Covector<f64>;
pub type AngularVelocity64 = AngularVelocity<f64>;
pub type TorqueElement64 = TorqueElement<f64>;
pub type Wrench64 = Wrench<f64>;
pub type Twist64 = Twist<f64>;

pub type Vector32 = Vector<f32>;
pub type Bivector32 = Bivector<f32>;
pub type Point32 = Point<f32>;
pub type Screw32 = LineBivector<f32>;
