//! JSON problem, twist and point-set files.
//!
//! Index keys are one-based strings such as `"1,2"`; they are ordered
//! numerically when serialized.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use screw_core::{
    pair_count, AngularVelocity64, Bivector64, ForceSystem64, Point64, Trivector64, Twist64, Vector64,
};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::CliError;

/// A one-based multi-index such as `(1, 2)` written `"1,2"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexKey<const N: usize>(pub [usize; N]);

pub type PairKey = IndexKey<2>;
pub type TripleKey = IndexKey<3>;

impl<const N: usize> fmt::Display for IndexKey<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

impl<const N: usize> FromStr for IndexKey<N> {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != N {
            return Err(format!("index key {s:?} must have {N} comma-separated indices"));
        }
        let mut out = [0usize; N];
        for (slot, p) in out.iter_mut().zip(parts) {
            *slot = p.parse().map_err(|_| format!("index key {s:?} contains a non-integer index"))?;
        }
        Ok(Self(out))
    }
}

impl<const N: usize> Serialize for IndexKey<N> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de, const N: usize> Deserialize<'de> for IndexKey<N> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(D::Error::custom)
    }
}

pub type PairMap = BTreeMap<PairKey, f64>;
pub type TripleMap = BTreeMap<TripleKey, f64>;

pub fn bivector_to_map(b: &Bivector64) -> PairMap {
    b.iter().map(|((i, j), c)| (IndexKey([i + 1, j + 1]), c)).collect()
}

pub fn trivector_to_map(t: &Trivector64) -> TripleMap {
    t.iter().map(|((i, j, k), c)| (IndexKey([i + 1, j + 1, k + 1]), c)).collect()
}

/// A bivector-valued field given either by pair coefficients or, in three
/// dimensions, by a right-handed pseudovector.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pairs: Option<PairMap>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pseudovector: Option<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ForceEntry {
    pub point: Vec<f64>,
    pub vector: Vec<f64>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Metadata {
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub units: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub dimension: usize,
    #[serde(default)]
    pub forces: Vec<ForceEntry>,
    #[serde(default)]
    pub couples: Vec<PairSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<Metadata>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwistFile {
    pub dimension: usize,
    pub q: Vec<f64>,
    /// Upper entries `ω_ij` of the angular-velocity matrix, or a pseudovector.
    pub omega: PairSpec,
    pub v_q: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<Metadata>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointsFile {
    pub points: Vec<Vec<f64>>,
}

fn parse<'a, T: Deserialize<'a>>(text: &'a str, what: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Parse(format!("{what}: {e}")))
}

impl ProblemFile {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        parse(text, "problem file")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("problem file serializes")
    }

    pub fn units(&self) -> BTreeMap<String, String> {
        self.metadata.as_ref().map(|m| m.units.clone()).unwrap_or_default()
    }

    /// Checks every field against the declared dimension and builds the force system.
    pub fn to_system(&self) -> Result<ForceSystem64, CliError> {
        let n = self.dimension;
        if n == 0 {
            return Err(CliError::validation("dimension", "must be at least 1"));
        }
        let mut sys = ForceSystem64::new(n);
        for (k, f) in self.forces.iter().enumerate() {
            let point = Point64::new(coords(&f.point, n, &format!("forces[{k}].point"))?);
            let vector = Vector64::new(coords(&f.vector, n, &format!("forces[{k}].vector"))?);
            sys.add_force(point, vector).expect("lengths checked");
        }
        for (k, c) in self.couples.iter().enumerate() {
            let b = c.to_bivector(n, &format!("couples[{k}]"))?;
            sys.add_couple(b).expect("dimension checked");
        }
        Ok(sys)
    }
}

impl TwistFile {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        parse(text, "twist file")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("twist file serializes")
    }

    pub fn to_twist(&self) -> Result<Twist64, CliError> {
        let n = self.dimension;
        if n == 0 {
            return Err(CliError::validation("dimension", "must be at least 1"));
        }
        let q = Point64::new(coords(&self.q, n, "q")?);
        let v_q = Vector64::new(coords(&self.v_q, n, "v_q")?);
        let omega = match (&self.omega.pairs, &self.omega.pseudovector) {
            (Some(pairs), None) => {
                let upper = pair_values(pairs, n, "omega.pairs")?;
                AngularVelocity64::from_upper(n, upper).expect("count matches")
            }
            (None, Some(pv)) => {
                let w = pseudovector(pv, n, "omega.pseudovector")?;
                AngularVelocity64::from_pseudovector(&w).expect("dimension is 3")
            }
            _ => return Err(CliError::validation("omega", "give exactly one of \"pairs\" or \"pseudovector\"")),
        };
        Ok(Twist64::new(q, omega, v_q).expect("lengths checked"))
    }
}

impl PointsFile {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        parse(text, "points file")
    }

    pub fn to_points(&self, n: usize) -> Result<Vec<Point64>, CliError> {
        if self.points.len() != n + 1 {
            return Err(CliError::validation(
                "points",
                &format!("expected {} points for dimension {n}, found {}", n + 1, self.points.len()),
            ));
        }
        self.points
            .iter()
            .enumerate()
            .map(|(k, p)| Ok(Point64::new(coords(p, n, &format!("points[{k}]"))?)))
            .collect()
    }
}

impl PairSpec {
    pub fn from_bivector(b: &Bivector64) -> Self {
        Self { pairs: Some(bivector_to_map(b)), pseudovector: None }
    }

    pub fn to_bivector(&self, n: usize, field: &str) -> Result<Bivector64, CliError> {
        match (&self.pairs, &self.pseudovector) {
            (Some(pairs), None) => {
                let coeffs = pair_values(pairs, n, &format!("{field}.pairs"))?;
                Ok(Bivector64::from_coeffs(n, coeffs).expect("count matches"))
            }
            (None, Some(pv)) => {
                let p = pseudovector(pv, n, &format!("{field}.pseudovector"))?;
                Ok(Bivector64::from_pseudovector(&p).expect("dimension is 3"))
            }
            _ => Err(CliError::validation(field, "give exactly one of \"pairs\" or \"pseudovector\"")),
        }
    }
}

fn coords(xs: &[f64], n: usize, field: &str) -> Result<Vec<f64>, CliError> {
    if xs.len() != n {
        return Err(CliError::validation(field, &format!("expected {n} entries, found {}", xs.len())));
    }
    if let Some(k) = xs.iter().position(|x| !x.is_finite()) {
        return Err(CliError::validation(&format!("{field}[{k}]"), "must be finite"));
    }
    Ok(xs.to_vec())
}

fn pseudovector(xs: &[f64], n: usize, field: &str) -> Result<Vector64, CliError> {
    if n != 3 {
        return Err(CliError::validation(field, &format!("pseudovectors need dimension 3, not {n}")));
    }
    Ok(Vector64::new(coords(xs, 3, field)?))
}

/// Dense coefficients in lexicographic pair order; missing pairs are zero.
fn pair_values(pairs: &PairMap, n: usize, field: &str) -> Result<Vec<f64>, CliError> {
    let mut out = vec![0.0; pair_count(n)];
    for (key, &c) in pairs {
        let [i, j] = key.0;
        if !(1 <= i && i < j && j <= n) {
            return Err(CliError::validation(
                &format!("{field}[\"{key}\"]"),
                &format!("pair indices must satisfy 1 <= i < j <= {n}"),
            ));
        }
        if !c.is_finite() {
            return Err(CliError::validation(&format!("{field}[\"{key}\"]"), "must be finite"));
        }
        out[screw_core::exterior::pair_index(n, i - 1, j - 1)] = c;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys_round_trip_and_order_numerically() {
        let k: PairKey = "1,12".parse().unwrap();
        assert_eq!(k, IndexKey([1, 12]));
        assert_eq!(k.to_string(), "1,12");
        assert!(IndexKey([1, 2]) < IndexKey([1, 12]));
        assert!("1".parse::<PairKey>().is_err());
        assert!("a,b".parse::<PairKey>().is_err());
        let t: TripleKey = " 1, 2 ,3".parse().unwrap();
        assert_eq!(t, IndexKey([1, 2, 3]));
    }

    #[test]
    fn parses_pairs_and_pseudovector_couples() {
        let p = ProblemFile::from_json(
            r#"{"dimension": 3, "forces": [{"point": [0,-1,0], "vector": [1,0,0]}],
                "couples": [{"pairs": {"2,3": 1}}, {"pseudovector": [1, 0, 0]}]}"#,
        )
        .unwrap();
        let sys = p.to_system().unwrap();
        assert_eq!(sys.couples()[0], sys.couples()[1]);
        assert_eq!(sys.couples()[0], Bivector64::basis(3, 1, 2));
    }

    #[test]
    fn validation_reports_field_paths() {
        let p = ProblemFile::from_json(r#"{"dimension": 2, "forces": [{"point": [0,0], "vector": [1,0,0]}]}"#).unwrap();
        let err = p.to_system().unwrap_err();
        assert_eq!(err.exit_code(), 3);
        assert!(err.to_string().contains("forces[0].vector"), "{err}");

        let p = ProblemFile::from_json(r#"{"dimension": 3, "couples": [{"pairs": {"2,1": 1}}]}"#).unwrap();
        assert!(p.to_system().unwrap_err().to_string().contains("couples[0].pairs[\"2,1\"]"));

        let p = ProblemFile::from_json(r#"{"dimension": 2, "couples": [{"pseudovector": [0,0,1]}]}"#).unwrap();
        assert!(p.to_system().unwrap_err().to_string().contains("dimension 3"));

        let p = ProblemFile::from_json(r#"{"dimension": 3, "couples": [{}]}"#).unwrap();
        assert_eq!(p.to_system().unwrap_err().exit_code(), 3);

        let p = ProblemFile::from_json(r#"{"dimension": 0}"#).unwrap();
        assert_eq!(p.to_system().unwrap_err().exit_code(), 3);
    }

    #[test]
    fn syntax_errors_are_parse_errors() {
        let err = ProblemFile::from_json("{\"dimension\": 2,\n \"forces\": [}").unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(err.to_string().contains("line 2"), "{err}");
        assert_eq!(ProblemFile::from_json(r#"{"dimension": 2, "extra": 1}"#).unwrap_err().exit_code(), 2);
        assert_eq!(
            ProblemFile::from_json(r#"{"dimension": 2, "couples": [{"pairs": {"x": 1}}]}"#).unwrap_err().exit_code(),
            2
        );
    }

    #[test]
    fn twist_file_conventions() {
        let t = TwistFile::from_json(r#"{"dimension": 3, "q": [0,0,0], "omega": {"pairs": {"1,2": 1}}, "v_q": [0,0,0]}"#)
            .unwrap()
            .to_twist()
            .unwrap();
        assert_eq!(t.eval(&Point64::new(vec![1.0, 0.0, 0.0])).unwrap().coords(), &[0.0, -1.0, 0.0]);

        let t = TwistFile::from_json(r#"{"dimension": 3, "q": [0,0,0], "omega": {"pseudovector": [0,0,1]}, "v_q": [0,0,0]}"#)
            .unwrap()
            .to_twist()
            .unwrap();
        assert_eq!(t.eval(&Point64::new(vec![1.0, 0.0, 0.0])).unwrap().coords(), &[0.0, 1.0, 0.0]);

        let bad = TwistFile::from_json(r#"{"dimension": 2, "q": [0,0], "omega": {"pairs": {"1,3": 1}}, "v_q": [0,0]}"#).unwrap();
        assert_eq!(bad.to_twist().unwrap_err().exit_code(), 3);
    }

    #[test]
    fn points_file_count() {
        let p = PointsFile::from_json(r#"{"points": [[0,0],[1,0]]}"#).unwrap();
        assert!(p.to_points(2).unwrap_err().to_string().contains("expected 3 points"));
        let p = PointsFile::from_json(r#"{"points": [[0,0],[1,0],[0,1]]}"#).unwrap();
        assert_eq!(p.to_points(2).unwrap().len(), 3);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn finite() -> impl Strategy<Value = f64> {
            -1e6..1e6f64
        }

        fn problem() -> impl Strategy<Value = ProblemFile> {
            (1usize..6).prop_flat_map(|n| {
                let force = (prop::collection::vec(finite(), n), prop::collection::vec(finite(), n))
                    .prop_map(|(point, vector)| ForceEntry { point, vector });
                let pairs: Vec<PairKey> = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| IndexKey([i, j]))).collect();
                let couple = prop::collection::vec(finite(), pairs.len()).prop_map(move |cs| PairSpec {
                    pairs: Some(pairs.iter().copied().zip(cs).collect()),
                    pseudovector: None,
                });
                (
                    prop::collection::vec(force, 0..4),
                    prop::collection::vec(couple, 0..3),
                    prop::option::of("[a-z]{1,4}".prop_map(|u| Metadata {
                        units: [("force".to_string(), u)].into_iter().collect(),
                        description: None,
                    })),
                )
                    .prop_map(move |(forces, couples, metadata)| ProblemFile { dimension: n, forces, couples, metadata })
            })
        }

        proptest! {
            #[test]
            fn serialize_parse_round_trip(p in problem()) {
                let text = p.to_json();
                let back = ProblemFile::from_json(&text).unwrap();
                prop_assert_eq!(&back, &p);
                prop_assert_eq!(back.to_json(), text);
            }
        }
    }
}
