//! Two-parameter families of bodies on the frame `{a, b, c}` and exact grid
//! sweeps over them.
//!
//! * [`Family::PartitionXY`]: `A = {a ↦ x, {b,c} ↦ 1−x}`,
//!   `B = {{a,b} ↦ y, c ↦ 1−y}`.
//! * [`Family::QuasiXXbarY`]: `A = {a ↦ x, {b,c} ↦ x̄, Ω ↦ 1−x−x̄}`, same `B`.
//!
//! Both have conflict `κ = x(1−y)` and closed-form combined masses, which
//! [`symbolic_check`] compares against the generic combination. A sweep
//! audits every point of the grid `{i/N}`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::combination::{combine, CombinationResult};
use crate::consistency::{audit, ConsistencyReport};
use crate::error::{Error, Result};
use crate::evidence::BodyOfEvidence;
use crate::frame::{FocalSet, Frame};
use crate::rational::{int, ratio, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    PartitionXY,
    QuasiXXbarY,
}

impl Family {
    /// Name used on the command line and in CSV output.
    pub fn name(self) -> &'static str {
        match self {
            Family::PartitionXY => "partition-xy",
            Family::QuasiXXbarY => "quasi-xxbar-y",
        }
    }

    pub fn from_name(name: &str) -> Option<Family> {
        match name {
            "partition-xy" | "PartitionXY" => Some(Family::PartitionXY),
            "quasi-xxbar-y" | "QuasiXXbarY" => Some(Family::QuasiXXbarY),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One parameter point of a family.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub family: Family,
    pub x: Rational,
    /// Only for [`Family::QuasiXXbarY`].
    pub xbar: Option<Rational>,
    pub y: Rational,
}

impl FamilySpec {
    pub fn partition(x: Rational, y: Rational) -> Self {
        FamilySpec { family: Family::PartitionXY, x, xbar: None, y }
    }

    pub fn quasi(x: Rational, xbar: Rational, y: Rational) -> Self {
        FamilySpec { family: Family::QuasiXXbarY, x, xbar: Some(xbar), y }
    }

    fn xbar_or_zero(&self) -> Rational {
        self.xbar.clone().unwrap_or_else(Rational::zero)
    }

    pub fn validate(&self) -> Result<()> {
        let unit = |name: &'static str, v: &Rational| {
            if v.is_negative() || *v > Rational::one() {
                Err(Error::ParameterOutOfRange { name, value: v.clone() })
            } else {
                Ok(())
            }
        };
        unit("x", &self.x)?;
        unit("y", &self.y)?;
        match (self.family, &self.xbar) {
            (Family::PartitionXY, None) => Ok(()),
            (Family::PartitionXY, Some(xbar)) => {
                Err(Error::ParameterOutOfRange { name: "xbar", value: xbar.clone() })
            }
            (Family::QuasiXXbarY, None) => {
                Err(Error::ParameterOutOfRange { name: "xbar", value: Rational::zero() })
            }
            (Family::QuasiXXbarY, Some(xbar)) => {
                unit("xbar", xbar)?;
                let total = &self.x + xbar;
                if total > Rational::one() {
                    return Err(Error::ParameterOutOfRange { name: "x + xbar", value: total });
                }
                Ok(())
            }
        }
    }

    /// Conflict coefficient of the family at this point, `x(1−y)`.
    pub fn expected_kappa(&self) -> Rational {
        &self.x * (Rational::one() - &self.y)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.xbar {
            Some(xbar) => write!(f, "x={} xbar={} y={}", self.x, xbar, self.y),
            None => write!(f, "x={} y={}", self.x, self.y),
        }
    }
}

/// The frame `{a, b, c}` shared by both families.
pub fn family_frame() -> Frame {
    Frame::new(&["a", "b", "c"]).expect("static frame is valid")
}

struct Sets {
    a: FocalSet,
    b: FocalSet,
    c: FocalSet,
    ab: FocalSet,
    bc: FocalSet,
    omega: FocalSet,
}

fn sets(frame: &Frame) -> Result<Sets> {
    if frame.labels() != ["a", "b", "c"] {
        return Err(Error::FrameMismatch);
    }
    Ok(Sets {
        a: frame.singleton(0),
        b: frame.singleton(1),
        c: frame.singleton(2),
        ab: frame.subset(&["a", "b"])?,
        bc: frame.subset(&["b", "c"])?,
        omega: frame.omega(),
    })
}

/// Builds the family's two bodies on a fresh `{a, b, c}` frame.
pub fn instantiate(spec: &FamilySpec) -> Result<(BodyOfEvidence, BodyOfEvidence)> {
    instantiate_on(spec, &family_frame())
}

/// As [`instantiate`], on a caller-supplied frame labelled `a, b, c`.
pub fn instantiate_on(spec: &FamilySpec, frame: &Frame) -> Result<(BodyOfEvidence, BodyOfEvidence)> {
    spec.validate()?;
    let s = sets(frame)?;
    let one = Rational::one();
    let a = match spec.family {
        Family::PartitionXY => {
            BodyOfEvidence::new(frame, [(s.a, spec.x.clone()), (s.bc, &one - &spec.x)])?
        }
        Family::QuasiXXbarY => {
            let xbar = spec.xbar_or_zero();
            let rest = &one - &spec.x - &xbar;
            BodyOfEvidence::new(frame, [(s.a, spec.x.clone()), (s.bc, xbar), (s.omega, rest)])?
        }
    };
    let b = BodyOfEvidence::new(frame, [(s.ab, spec.y.clone()), (s.c, &one - &spec.y)])?;
    Ok((a, b))
}

/// The family's combined masses written out in closed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedForm {
    pub kappa: Rational,
    /// Non-zero masses only.
    pub masses: BTreeMap<FocalSet, Rational>,
}

/// Closed-form combination for the family at `spec`, on `frame`.
///
/// With `D = 1 − x(1−y)`:
/// `m(a) = xy/D`, `m(c) = (1−x)(1−y)/D`, and `m(b) = (1−x)y/D` for the
/// partition family or `x̄y/D` with `m({a,b}) = (1−x−x̄)y/D` for the quasi
/// family.
pub fn closed_form(spec: &FamilySpec, frame: &Frame) -> Result<ClosedForm> {
    spec.validate()?;
    let s = sets(frame)?;
    let one = Rational::one();
    let (x, y) = (&spec.x, &spec.y);
    let kappa = x * (&one - y);
    let denom = &one - &kappa;
    if denom.is_zero() {
        return Err(Error::TotalConflict { step: 1 });
    }
    let mut masses = BTreeMap::new();
    masses.insert(s.a, x * y / &denom);
    masses.insert(s.c, (&one - x) * (&one - y) / &denom);
    match spec.family {
        Family::PartitionXY => {
            masses.insert(s.b, (&one - x) * y / &denom);
        }
        Family::QuasiXXbarY => {
            let xbar = spec.xbar_or_zero();
            masses.insert(s.b, &xbar * y / &denom);
            masses.insert(s.ab, (&one - x - &xbar) * y / &denom);
        }
    }
    masses.retain(|_, m| !m.is_zero());
    Ok(ClosedForm { kappa, masses })
}

#[derive(Clone, Debug)]
pub struct SymbolicCheck {
    pub closed_form: ClosedForm,
    pub combination: CombinationResult,
}

/// Combines the family's bodies and checks the result against the closed
/// form, exactly.
pub fn symbolic_check(spec: &FamilySpec) -> Result<SymbolicCheck> {
    let frame = family_frame();
    let (a, b) = instantiate_on(spec, &frame)?;
    let closed_form = closed_form(spec, &frame)?;
    let combination = combine(&a, &b)?;
    if combination.kappa != closed_form.kappa || combination.combined.canonical() != closed_form.masses
    {
        return Err(Error::ClosedFormMismatch(spec.to_string()));
    }
    Ok(SymbolicCheck { closed_form, combination })
}

/// Whether `1 − y = (1−x)(1−y) / (1 − x(1−y))`, i.e. whether the combined
/// mass of `{c}` in the quasi family equals `P(c) = 1 − y`.
///
/// Evaluated cross-multiplied so it is defined at the total-conflict corner
/// `x = 1, y = 0` as well.
pub fn c_mass_equation_holds(x: &Rational, y: &Rational) -> bool {
    let one = Rational::one();
    let lhs = (&one - y) * (&one - x * (&one - y));
    let rhs = (&one - x) * (&one - y);
    lhs == rhs
}

/// The claimed solution set of [`c_mass_equation_holds`]:
/// `x = 0` or `y = 0` or `y = 1`.
pub fn c_mass_equation_predicted(x: &Rational, y: &Rational) -> bool {
    x.is_zero() || y.is_zero() || y.is_one()
}

/// Which `x̄` values a quasi-family sweep visits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum XbarSlices {
    /// `{0, 1/4, 1/2, 3/4, 1}`.
    Default,
    List(Vec<Rational>),
    /// Every grid value `i/N`.
    Full,
}

impl XbarSlices {
    fn values(&self, density: u32) -> Vec<Rational> {
        match self {
            XbarSlices::Default => (0..=4).map(|i| ratio(i, 4)).collect(),
            XbarSlices::List(v) => v.clone(),
            XbarSlices::Full => grid(density),
        }
    }
}

fn grid(density: u32) -> Vec<Rational> {
    (0..=density as i64).map(|i| ratio(i, density as i64)).collect()
}

#[derive(Clone, Debug)]
pub enum PointOutcome {
    Audited(Box<ConsistencyReport>),
    /// `κ = 1` at this point; nothing can be combined.
    TotalConflict,
}

#[derive(Clone, Debug)]
pub struct SweepPoint {
    pub spec: FamilySpec,
    pub kappa: Rational,
    pub outcome: PointOutcome,
}

impl SweepPoint {
    pub fn report(&self) -> Option<&ConsistencyReport> {
        match &self.outcome {
            PointOutcome::Audited(r) => Some(r),
            PointOutcome::TotalConflict => None,
        }
    }

    pub fn all_exact(&self) -> bool {
        self.report().is_some_and(|r| r.all_exact())
    }
}

#[derive(Clone, Debug)]
pub struct SweepResult {
    pub family: Family,
    pub density: u32,
    /// Canonical order: `x̄` slice, then `x`, then `y`, each ascending.
    pub points: Vec<SweepPoint>,
    /// Points where every audited element is an exact match.
    pub summary: Vec<FamilySpec>,
}

/// The parameter points of a sweep, in canonical order.
pub fn grid_points(family: Family, density: u32, slices: &XbarSlices) -> Result<Vec<FamilySpec>> {
    if density < 2 {
        return Err(Error::GridTooCoarse(density));
    }
    let values = grid(density);
    let mut points = Vec::new();
    match family {
        Family::PartitionXY => {
            for x in &values {
                for y in &values {
                    points.push(FamilySpec::partition(x.clone(), y.clone()));
                }
            }
        }
        Family::QuasiXXbarY => {
            let one = Rational::one();
            for xbar in slices.values(density) {
                if xbar.is_negative() || xbar > one {
                    return Err(Error::ParameterOutOfRange { name: "xbar", value: xbar });
                }
                for x in values.iter().filter(|x| *x + &xbar <= one) {
                    for y in &values {
                        points.push(FamilySpec::quasi(x.clone(), xbar.clone(), y.clone()));
                    }
                }
            }
            for p in &points {
                p.validate()?;
            }
        }
    }
    Ok(points)
}

fn evaluate(spec: FamilySpec) -> Result<SweepPoint> {
    let kappa = spec.expected_kappa();
    if kappa == int(1) {
        return Ok(SweepPoint { spec, kappa, outcome: PointOutcome::TotalConflict });
    }
    let checked = symbolic_check(&spec)?;
    let (a, b) = instantiate_on(&spec, checked.combination.combined.frame())?;
    let report = audit(&[a, b])?;
    debug_assert_eq!(report.kappa(), &kappa);
    Ok(SweepPoint { spec, kappa, outcome: PointOutcome::Audited(Box::new(report)) })
}

/// Audits every grid point `i/N` of a family.
///
/// Points are evaluated in parallel and returned in canonical order. Every
/// point is also run through [`symbolic_check`]; a closed-form mismatch
/// aborts the sweep.
pub fn sweep(family: Family, density: u32, slices: &XbarSlices) -> Result<SweepResult> {
    let specs = grid_points(family, density, slices)?;
    let points = specs.into_par_iter().map(evaluate).collect::<Result<Vec<_>>>()?;
    let summary = points.iter().filter(|p| p.all_exact()).map(|p| p.spec.clone()).collect();
    Ok(SweepResult { family, density, points, summary })
}

/// The two highly conflicting bodies `{a ↦ 0.99, b ↦ 0, c ↦ 0.01}` and
/// `{a ↦ 0, b ↦ 0.99, c ↦ 0.01}` on `{a, b, c}`.
pub fn zadeh_bodies() -> (BodyOfEvidence, BodyOfEvidence) {
    let f = family_frame();
    let s = sets(&f).expect("family frame");
    let a = BodyOfEvidence::new(&f, [(s.a, ratio(99, 100)), (s.b, int(0)), (s.c, ratio(1, 100))])
        .expect("valid body");
    let b = BodyOfEvidence::new(&f, [(s.a, int(0)), (s.b, ratio(99, 100)), (s.c, ratio(1, 100))])
        .expect("valid body");
    (a, b)
}

/// Audit of the [`zadeh_bodies`]: all combined mass ends up on `{c}` with
/// `κ = 9999/10000`, while the bodies jointly admit no distribution at all.
pub fn zadeh_fixture() -> Result<ConsistencyReport> {
    let (a, b) = zadeh_bodies();
    let report = audit(&[a, b])?;
    let c = report.frame.singleton(2);
    let expected: BTreeMap<FocalSet, Rational> = [(c, int(1))].into_iter().collect();
    if report.combination.combined.canonical() != expected || *report.kappa() != ratio(9999, 10000) {
        return Err(Error::ClosedFormMismatch("zadeh".into()));
    }
    Ok(report)
}
