//! The four subcommands. Each returns a [`Report`] holding the exit code and
//! both renderings of the result.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use screw_core::{
    couple_power, power, scalar_invariant, AxisDecomposition, Bivector64, Classification, Covector64, Error,
    Point64, Screw64, TorqueElement64, Vector64, Wrench64,
};
use serde::Serialize;

use crate::error::CliError;
use crate::schema::{bivector_to_map, trivector_to_map, PairMap, PointsFile, ProblemFile, TripleMap, TwistFile};

#[derive(Debug, Clone)]
pub struct Report {
    pub exit_code: i32,
    pub json: String,
    pub text: String,
}

impl Report {
    fn new<R: Serialize>(exit_code: i32, body: &R, text: String) -> Self {
        let json = serde_json::to_string_pretty(body).expect("reports serialize");
        Self { exit_code, json, text }
    }

    pub fn render(&self, json: bool) -> &str {
        if json {
            &self.json
        } else {
            &self.text
        }
    }
}

/// Drops the sign of negative zero so reports do not show `-0`.
fn clean(x: f64) -> f64 {
    x + 0.0
}

fn vec_out(v: &Vector64) -> Vec<f64> {
    v.coords().iter().copied().map(clean).collect()
}

fn point_out(p: &Point64) -> Vec<f64> {
    p.coords().iter().copied().map(clean).collect()
}

fn pairs_out(b: &Bivector64) -> PairMap {
    bivector_to_map(b).into_iter().map(|(k, c)| (k, clean(c))).collect()
}

fn fmt_list(xs: &[f64]) -> String {
    let items: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("[{}]", items.join(", "))
}

fn fmt_map<K: std::fmt::Display>(m: &BTreeMap<K, f64>) -> String {
    let items: Vec<String> = m.iter().map(|(k, c)| format!("{k}: {c}")).collect();
    format!("{{{}}}", items.join(", "))
}

fn header(out: &mut String, command: &str, tol: f64, units: &BTreeMap<String, String>) {
    writeln!(out, "{command} (tol = {tol:e})").unwrap();
    if !units.is_empty() {
        let labels: Vec<String> = units.iter().map(|(k, v)| format!("{k} [{v}]")).collect();
        writeln!(out, "units: {}", labels.join(", ")).unwrap();
    }
}

fn check_tol(tol: f64) -> Result<(), CliError> {
    if tol.is_finite() && tol >= 0.0 {
        Ok(())
    } else {
        Err(CliError::validation("--tol", "must be a finite non-negative number"))
    }
}

#[derive(Debug, Serialize)]
pub struct ScrewOut {
    pub u: Vec<f64>,
    pub m0: PairMap,
}

impl ScrewOut {
    fn new(m: &Screw64) -> Self {
        Self { u: vec_out(m.vector_invariant()), m0: pairs_out(m.moment_at_origin()) }
    }
}

#[derive(Debug, Serialize)]
pub struct SlidingOut {
    pub point: Vec<f64>,
    pub vector: Vec<f64>,
}

#[derive(Debug, Serialize)]
pub struct AxisOut {
    pub point: Vec<f64>,
    pub direction: Vec<f64>,
    pub beta: PairMap,
    pub beta_magnitude: f64,
}

#[derive(Debug, Serialize)]
pub struct AnalyzeOut {
    pub command: &'static str,
    pub tolerance: f64,
    pub dimension: usize,
    pub units: BTreeMap<String, String>,
    pub resultant: ScrewOut,
    pub vector_invariant: Vec<f64>,
    pub moment_at_origin: PairMap,
    pub trivector_invariant: TripleMap,
    pub classification: &'static str,
    pub sliding: Option<SlidingOut>,
    pub couple: Option<PairMap>,
    pub axis: Option<AxisOut>,
    pub equilibrium: bool,
}

pub fn analyze(problem: &ProblemFile, tol: f64) -> Result<Report, CliError> {
    check_tol(tol)?;
    let sys = problem.to_system()?;
    let m = sys.resultant();
    let class = sys.classify(tol);
    let (sliding, couple) = match &class {
        Classification::Sliding(s) => (Some(SlidingOut { point: point_out(&s.point), vector: vec_out(&s.vector) }), None),
        Classification::Couple(c) => (None, Some(pairs_out(c))),
        _ => (None, None),
    };
    let axis = match m.central_axis() {
        AxisDecomposition::SlidingPlusCouple { point, u, beta } => Some(AxisOut {
            point: point_out(&point),
            direction: vec_out(&u),
            beta_magnitude: beta.magnitude(),
            beta: pairs_out(&beta),
        }),
        AxisDecomposition::PureCouple { .. } => None,
    };
    let body = AnalyzeOut {
        command: "analyze",
        tolerance: tol,
        dimension: sys.dim(),
        units: problem.units(),
        resultant: ScrewOut::new(&m),
        vector_invariant: vec_out(m.vector_invariant()),
        moment_at_origin: pairs_out(m.moment_at_origin()),
        trivector_invariant: trivector_to_map(&m.trivector_invariant()).into_iter().map(|(k, c)| (k, clean(c))).collect(),
        classification: class.name(),
        sliding,
        couple,
        axis,
        equilibrium: sys.is_equilibrium(tol),
    };

    let mut t = String::new();
    header(&mut t, "analyze", tol, &body.units);
    writeln!(t, "dimension: {}", body.dimension).unwrap();
    writeln!(t, "vector invariant u: {}", fmt_list(&body.vector_invariant)).unwrap();
    writeln!(t, "moment at origin: {}", fmt_map(&body.moment_at_origin)).unwrap();
    writeln!(t, "trivector invariant u^M: {}", fmt_map(&body.trivector_invariant)).unwrap();
    writeln!(t, "classification: {}", body.classification).unwrap();
    if let Some(s) = &body.sliding {
        writeln!(t, "sliding vector: {} at {}", fmt_list(&s.vector), fmt_list(&s.point)).unwrap();
    }
    if let Some(c) = &body.couple {
        writeln!(t, "couple: {}", fmt_map(c)).unwrap();
    }
    match &body.axis {
        Some(a) => {
            writeln!(t, "central axis point Q: {}", fmt_list(&a.point)).unwrap();
            writeln!(t, "axis direction u: {}", fmt_list(&a.direction)).unwrap();
            writeln!(t, "residual couple beta: {} (|beta| = {})", fmt_map(&a.beta), a.beta_magnitude).unwrap();
        }
        None => writeln!(t, "central axis: none (u = 0)").unwrap(),
    }
    writeln!(t, "equilibrium: {}", body.equilibrium).unwrap();
    Ok(Report::new(0, &body, t))
}

#[derive(Debug, Serialize)]
pub struct EquilibriumOut {
    pub command: &'static str,
    pub tolerance: f64,
    pub dimension: usize,
    pub units: BTreeMap<String, String>,
    pub equilibrium: bool,
    pub residual_force: Vec<f64>,
    pub residual_force_norm: f64,
    pub residual_moment: PairMap,
    pub residual_moment_norm: f64,
    pub scale: f64,
}

pub fn equilibrium(problem: &ProblemFile, tol: f64) -> Result<Report, CliError> {
    check_tol(tol)?;
    let sys = problem.to_system()?;
    let m = sys.resultant();
    let eq = sys.is_equilibrium(tol);
    let body = EquilibriumOut {
        command: "equilibrium",
        tolerance: tol,
        dimension: sys.dim(),
        units: problem.units(),
        equilibrium: eq,
        residual_force: vec_out(m.vector_invariant()),
        residual_force_norm: m.vector_invariant().norm(),
        residual_moment: pairs_out(m.moment_at_origin()),
        residual_moment_norm: m.moment_at_origin().magnitude(),
        scale: sys.scale(),
    };
    let mut t = String::new();
    header(&mut t, "equilibrium", tol, &body.units);
    writeln!(t, "equilibrium: {}", if eq { "yes" } else { "no" }).unwrap();
    writeln!(t, "residual force: {} (norm {})", fmt_list(&body.residual_force), body.residual_force_norm).unwrap();
    writeln!(t, "residual moment: {} (norm {})", fmt_map(&body.residual_moment), body.residual_moment_norm).unwrap();
    writeln!(t, "input scale: {}", body.scale).unwrap();
    Ok(Report::new(if eq { 0 } else { 1 }, &body, t))
}

#[derive(Debug, Serialize)]
pub struct ReduceOut {
    pub command: &'static str,
    pub tolerance: f64,
    pub dimension: usize,
    pub units: BTreeMap<String, String>,
    pub points: Vec<Vec<f64>>,
    pub sliding_vectors: Vec<SlidingOut>,
    pub residual: f64,
    pub relative_residual: f64,
}

pub fn reduce(problem: &ProblemFile, points: &PointsFile, tol: f64) -> Result<Report, CliError> {
    check_tol(tol)?;
    let sys = problem.to_system()?;
    let pts = points.to_points(sys.dim())?;
    let m = sys.resultant();
    let parts = m.decompose_at_points(&pts).map_err(|e| match e {
        Error::AffinelyDependent => CliError::validation("points", "points are affinely dependent"),
        other => CliError::validation("points", &other.to_string()),
    })?;
    let recomposed: Screw64 = parts.iter().map(|s| s.to_screw()).fold(Screw64::zero(sys.dim()), |a, b| a + b);
    let residual = (&recomposed - &m).norm();
    let denom = m.norm().max(sys.scale());
    let body = ReduceOut {
        command: "reduce",
        tolerance: tol,
        dimension: sys.dim(),
        units: problem.units(),
        points: pts.iter().map(point_out).collect(),
        sliding_vectors: parts.iter().map(|s| SlidingOut { point: point_out(&s.point), vector: vec_out(&s.vector) }).collect(),
        residual,
        relative_residual: if denom > 0.0 { residual / denom } else { 0.0 },
    };
    let mut t = String::new();
    header(&mut t, "reduce", tol, &body.units);
    for (k, s) in body.sliding_vectors.iter().enumerate() {
        writeln!(t, "sliding vector {}: {} at {}", k + 1, fmt_list(&s.vector), fmt_list(&s.point)).unwrap();
    }
    writeln!(t, "recomposition residual: {} (relative {})", body.residual, body.relative_residual).unwrap();
    Ok(Report::new(0, &body, t))
}

#[derive(Debug, Serialize)]
pub struct PowerOut {
    pub command: &'static str,
    pub tolerance: f64,
    pub dimension: usize,
    pub units: BTreeMap<String, String>,
    pub direct: f64,
    pub invariant: f64,
    pub difference: f64,
}

pub fn power_report(problem: &ProblemFile, twist: &TwistFile, tol: f64) -> Result<Report, CliError> {
    check_tol(tol)?;
    let sys = problem.to_system()?;
    if twist.dimension != sys.dim() {
        return Err(CliError::validation(
            "dimension",
            &format!("problem has dimension {}, twist has dimension {}", sys.dim(), twist.dimension),
        ));
    }
    let t = twist.to_twist()?;
    let forces: Vec<(Point64, Covector64)> =
        sys.forces().iter().map(|(p, u)| (p.clone(), Covector64::from_vector(u))).collect();
    let mut direct = power(&forces, &t).expect("dimensions checked");
    for c in sys.couples() {
        direct += couple_power(&TorqueElement64::from_couple(c), &t).expect("dimensions checked");
    }
    let origin = Point64::origin(sys.dim());
    let wrench = Wrench64::from_screw(&sys.resultant(), &origin).expect("dimensions checked");
    let invariant = scalar_invariant(&wrench, &t, &origin).expect("dimensions checked");
    let body = PowerOut {
        command: "power",
        tolerance: tol,
        dimension: sys.dim(),
        units: problem.units(),
        direct: clean(direct),
        invariant: clean(invariant),
        difference: (direct - invariant).abs(),
    };
    let mut s = String::new();
    header(&mut s, "power", tol, &body.units);
    writeln!(s, "power (direct sum): {}", body.direct).unwrap();
    writeln!(s, "power (scalar invariant): {}", body.invariant).unwrap();
    writeln!(s, "difference: {}", body.difference).unwrap();
    Ok(Report::new(0, &body, s))
}
