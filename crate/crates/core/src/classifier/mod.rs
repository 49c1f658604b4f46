//! Catalog listing, radius scans, distinguished-radius solving and the
//! verification suites driven by the command-line front end.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::conditions::{classify_hopf_with, semi_parallel_residual, vanishing_residual, ConditionReport};
use crate::curvature::{riemann, star_ricci};
use crate::error::{Error, Result};
use crate::models::{AmbientSpace, HopfModel, ModelKind};
use crate::numfmt;

mod roots;
pub mod verify;

pub use roots::{bisect, golden_section_min};

/// Version of the JSON documents emitted by the CLI.
pub const SCHEMA_VERSION: u32 = 1;

/// Cap for the radius search on unbounded domains; `coth` and `tanh` are
/// 1 to machine precision well before this.
const MAX_SEARCH_RADIUS: f64 = 40.0;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub space: String,
    pub id: String,
    pub name: String,
    pub radius_domain: String,
    pub alpha: String,
    pub lambda: String,
    pub nu: String,
}

/// Every catalog kind with its curvature formulas.
pub fn catalog_entries() -> Vec<CatalogEntry> {
    let rows: [(AmbientSpace, ModelKind, &str, &str, &str, &str); 7] = [
        (AmbientSpace::complex_hyperbolic(), ModelKind::A0, "-", "2", "1", "1"),
        (AmbientSpace::complex_hyperbolic(), ModelKind::A11, "0 < r", "2 coth(2r)", "coth(r)", "coth(r)"),
        (AmbientSpace::complex_hyperbolic(), ModelKind::A12, "0 < r", "2 coth(2r)", "tanh(r)", "tanh(r)"),
        (AmbientSpace::complex_hyperbolic(), ModelKind::BHyp, "0 < r", "2 tanh(2r)", "tanh(r)", "coth(r)"),
        (
            AmbientSpace::complex_projective(),
            ModelKind::A1Proj,
            "0 < r < pi/2",
            "2 cot(2r)",
            "cot(r)",
            "from Hopf relation (= cot(r))",
        ),
        (
            AmbientSpace::complex_projective(),
            ModelKind::A2Proj,
            "0 < r < pi/2",
            "2 cot(2r)",
            "-tan(r)",
            "from Hopf relation (= -tan(r))",
        ),
        (
            AmbientSpace::complex_projective(),
            ModelKind::BProj,
            "0 < r < pi/4",
            "2 cot(2r)",
            "cot(r - pi/4)",
            "from Hopf relation (= -tan(r - pi/4))",
        ),
    ];
    rows.iter()
        .map(|(space, kind, dom, a, l, n)| CatalogEntry {
            space: space.id(),
            id: kind.id().into(),
            name: kind.name().into(),
            radius_domain: (*dom).into(),
            alpha: (*a).into(),
            lambda: (*l).into(),
            nu: (*n).into(),
        })
        .collect()
}

/// Signed vanishing scalar `c + λν` of a catalog kind at `radius`.
fn vanishing_scalar(space: AmbientSpace, kind: ModelKind, radius: f64) -> Result<f64> {
    let m = HopfModel::catalog(space, kind, Some(radius))?;
    Ok(space.c() + m.lambda() * m.nu())
}

/// Radius at which the *-Ricci operator of a catalog kind vanishes, found by
/// bisection on `c + λ(r)ν(r)`.
pub fn solve_vanishing_radius(space: AmbientSpace, kind: ModelKind) -> Result<f64> {
    let (lo, hi) = kind.radius_domain().ok_or(Error::NeverAttained { kind: kind.id() })?;
    let hi = hi.min(MAX_SEARCH_RADIUS);
    let f = |r: f64| vanishing_scalar(space, kind, r);
    // Log-spaced near the lower end, where cot/coth blow up, then uniform.
    let n = 4000;
    let mut grid: Vec<f64> = (1..=60).map(|k| lo + (hi - lo) * 10f64.powf(-9.0 + 8.0 * k as f64 / 60.0)).collect();
    grid.extend((1..n).map(|i| lo + (hi - lo) * i as f64 / n as f64));
    grid.sort_by(f64::total_cmp);
    grid.dedup();

    let mut prev: Option<(f64, f64)> = None;
    for r in grid {
        let v = f(r)?;
        if v == 0.0 {
            return Ok(r);
        }
        if let Some((r0, v0)) = prev {
            if v0.signum() != v.signum() {
                return bisect(|x| f(x).unwrap_or(f64::NAN), r0, r, 1e-10);
            }
        }
        prev = Some((r, v));
    }
    Err(Error::NeverAttained { kind: kind.id() })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    #[serde(with = "numfmt")]
    pub start: f64,
    #[serde(with = "numfmt")]
    pub stop: f64,
    pub count: usize,
}

impl GridSpec {
    pub fn new(start: f64, stop: f64, count: usize) -> Result<Self> {
        if count < 2 {
            return Err(Error::InvalidGrid(format!("need at least 2 points, got {count}")));
        }
        if !(start.is_finite() && stop.is_finite() && start < stop) {
            return Err(Error::InvalidGrid(format!("need start < stop, got [{start}, {stop}]")));
        }
        Ok(GridSpec { start, stop, count })
    }

    pub fn step(&self) -> f64 {
        (self.stop - self.start) / (self.count - 1) as f64
    }

    pub fn radii(&self) -> Vec<f64> {
        let step = self.step();
        (0..self.count).map(|i| if i + 1 == self.count { self.stop } else { self.start + step * i as f64 }).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanPoint {
    #[serde(with = "numfmt")]
    pub radius: f64,
    pub report: ConditionReport,
}

/// Radii at which a residual drops below epsilon, per condition.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct ScanRoots {
    #[serde(with = "numfmt::vec")]
    pub vanishing: Vec<f64>,
    #[serde(with = "numfmt::vec")]
    pub semi_parallel: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanResult {
    pub schema: u32,
    pub space: String,
    pub kind: String,
    pub grid: GridSpec,
    #[serde(with = "numfmt")]
    pub epsilon: f64,
    pub points: Vec<ScanPoint>,
    pub roots: ScanRoots,
}

/// Classifies a catalog kind on an evenly spaced radius grid and locates the
/// radii where the vanishing and semi-parallel residuals reach zero.
pub fn scan(space: AmbientSpace, kind: ModelKind, grid: GridSpec, epsilon: f64) -> Result<ScanResult> {
    let (lo, hi) = kind.radius_domain().ok_or(Error::InvalidGrid(format!("{kind} takes no radius")))?;
    if !(grid.start > lo && grid.stop < hi) {
        return Err(Error::InvalidGrid(format!(
            "[{}, {}] is not inside the radius domain of {kind}",
            grid.start, grid.stop
        )));
    }
    let radii = grid.radii();
    let models: Vec<HopfModel> =
        radii.iter().map(|&r| HopfModel::catalog(space, kind, Some(r))).collect::<Result<_>>()?;
    let points: Vec<ScanPoint> = radii
        .par_iter()
        .zip(models.par_iter())
        .map(|(&radius, m)| ScanPoint { radius, report: classify_hopf_with(m, epsilon, 0.0) })
        .collect();

    let residual_at = |which: Condition, r: f64| -> f64 {
        match HopfModel::catalog(space, kind, Some(r)) {
            Ok(m) => which.residual(&m),
            Err(_) => f64::INFINITY,
        }
    };
    let vanishing: Vec<f64> = points.iter().map(|p| p.report.vanishing.residual).collect();
    let semi: Vec<f64> = points.iter().map(|p| p.report.semi_parallel.residual).collect();
    let roots = ScanRoots {
        vanishing: locate_minima(&radii, &vanishing, epsilon, |r| residual_at(Condition::Vanishing, r)),
        semi_parallel: locate_minima(&radii, &semi, epsilon, |r| residual_at(Condition::SemiParallel, r)),
    };
    Ok(ScanResult { schema: SCHEMA_VERSION, space: space.id(), kind: kind.id().into(), grid, epsilon, points, roots })
}

#[derive(Clone, Copy)]
enum Condition {
    Vanishing,
    SemiParallel,
}

impl Condition {
    fn residual(self, m: &HopfModel) -> f64 {
        let a = m.shape_operator();
        let s = star_ricci(&a, &m.space());
        match self {
            Condition::Vanishing => vanishing_residual(&s),
            Condition::SemiParallel => semi_parallel_residual(&riemann(&a, &m.space()), &s),
        }
    }
}

/// Refines every strict local minimum of the sampled residual and keeps the
/// refined radii whose residual is below `epsilon`.
fn locate_minima(radii: &[f64], values: &[f64], epsilon: f64, f: impl Fn(f64) -> f64) -> Vec<f64> {
    let n = radii.len();
    let mut found: Vec<f64> = Vec::new();
    for i in 0..n {
        let left = if i > 0 { values[i - 1] } else { f64::INFINITY };
        let right = if i + 1 < n { values[i + 1] } else { f64::INFINITY };
        let v = values[i];
        let is_min = v <= left && v <= right && (v < left || v < right);
        if !is_min {
            continue;
        }
        let a = radii[i.saturating_sub(1)];
        let b = radii[(i + 1).min(n - 1)];
        let (r, fr) = golden_section_min(&f, a, b, 1e-15);
        let (r, fr) = if v < fr { (radii[i], v) } else { (r, fr) };
        if fr < epsilon && found.last().is_none_or(|&prev| (r - prev).abs() > 1e-9) {
            found.push(r);
        }
    }
    found
}
