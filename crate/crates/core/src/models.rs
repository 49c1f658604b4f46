//! Shape operators and connection data for Hopf model spaces and for
//! generic non-Hopf frame data.
//!
//! Hopf models are diagonal in the frame `(W, φW, ξ)` with principal
//! curvatures `(λ, ν, α)`. Non-Hopf data lives in the frame `(U, φU, ξ)` with
//! `Aξ = αξ + βU`, `β ≠ 0`.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::frame::{Direction, FrameOperator, FrameVector, IDENTITY_TOL};

/// A non-flat complex space form, identified by its constant holomorphic
/// sectional curvature `c`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AmbientSpace {
    c: f64,
}

impl AmbientSpace {
    pub fn new(c: f64) -> Result<Self> {
        if c == 0.0 || !c.is_finite() {
            return Err(Error::FlatAmbient(c));
        }
        Ok(AmbientSpace { c })
    }

    /// `CP²` with `c = 4`.
    pub const fn complex_projective() -> Self {
        AmbientSpace { c: 4.0 }
    }

    /// `CH²` with `c = -4`.
    pub const fn complex_hyperbolic() -> Self {
        AmbientSpace { c: -4.0 }
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn is_projective(&self) -> bool {
        self.c > 0.0
    }

    /// Parses `cp2` / `chh2`.
    pub fn parse(id: &str) -> Result<Self> {
        match id.to_ascii_lowercase().as_str() {
            "cp2" => Ok(Self::complex_projective()),
            "chh2" | "ch2" => Ok(Self::complex_hyperbolic()),
            _ => Err(Error::UnknownSpace(id.to_string())),
        }
    }

    pub fn id(&self) -> String {
        if self.c == 4.0 {
            "cp2".into()
        } else if self.c == -4.0 {
            "chh2".into()
        } else {
            format!("c={}", self.c)
        }
    }
}

/// Residual of the Hopf relation `λν - (α/2)(λ+ν) - c/4`.
pub fn hopf_relation_residual(alpha: f64, lambda: f64, nu: f64, c: f64) -> f64 {
    lambda * nu - 0.5 * alpha * (lambda + nu) - 0.25 * c
}

/// Solves the Hopf relation for the curvature of `φW` given that of `W`.
pub fn compute_nu(alpha: f64, lambda: f64, c: f64) -> Result<f64> {
    let denom = lambda - 0.5 * alpha;
    if denom.abs() <= IDENTITY_TOL {
        return Err(Error::NuUndetermined(lambda));
    }
    Ok((0.5 * lambda * alpha + 0.25 * c) / denom)
}

fn hopf_relation_tolerance(alpha: f64, lambda: f64, nu: f64) -> f64 {
    IDENTITY_TOL * (1.0 + (lambda * nu).abs() + alpha.abs() * (lambda.abs() + nu.abs()))
}

/// Model type of a Hopf hypersurface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ModelKind {
    /// Horosphere in `CH²`.
    A0,
    /// Geodesic hypersphere in `CH²`.
    A11,
    /// Tube over a totally geodesic `CH¹` in `CH²`.
    A12,
    /// Type (B) tube in `CH²`.
    BHyp,
    /// Geodesic hypersphere in `CP²`.
    A1Proj,
    /// Type (A₂) tube in `CP²`.
    A2Proj,
    /// Type (B) tube in `CP²`.
    BProj,
    /// A Hopf point given only by its principal curvatures.
    AbstractHopf,
}

impl ModelKind {
    pub const HYPERBOLIC: [ModelKind; 4] = [ModelKind::A0, ModelKind::A11, ModelKind::A12, ModelKind::BHyp];
    pub const PROJECTIVE: [ModelKind; 3] = [ModelKind::A1Proj, ModelKind::A2Proj, ModelKind::BProj];

    /// Catalog kinds available in `space`.
    pub fn catalog(space: &AmbientSpace) -> &'static [ModelKind] {
        if space.is_projective() {
            &Self::PROJECTIVE
        } else {
            &Self::HYPERBOLIC
        }
    }

    /// Stable string identifier.
    pub fn id(self) -> &'static str {
        match self {
            ModelKind::A0 => "a0",
            ModelKind::A11 => "a11",
            ModelKind::A12 => "a12",
            ModelKind::BHyp | ModelKind::BProj => "b",
            ModelKind::A1Proj => "a1",
            ModelKind::A2Proj => "a2",
            ModelKind::AbstractHopf => "abstract-hopf",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ModelKind::A0 => "CH2 type A0 (horosphere)",
            ModelKind::A11 => "CH2 type A1,1 (geodesic hypersphere)",
            ModelKind::A12 => "CH2 type A1,2 (tube over CH1)",
            ModelKind::BHyp => "CH2 type B",
            ModelKind::A1Proj => "CP2 type A1 (geodesic hypersphere)",
            ModelKind::A2Proj => "CP2 type A2",
            ModelKind::BProj => "CP2 type B",
            ModelKind::AbstractHopf => "abstract Hopf point",
        }
    }

    /// Resolves an identifier; `b` is ambiguous and picks by the sign of `c`.
    pub fn parse(id: &str, space: &AmbientSpace) -> Result<Self> {
        let kind = match (id.to_ascii_lowercase().as_str(), space.is_projective()) {
            ("a0", _) => ModelKind::A0,
            ("a11", _) => ModelKind::A11,
            ("a12", _) => ModelKind::A12,
            ("b", false) => ModelKind::BHyp,
            ("b", true) => ModelKind::BProj,
            ("a1", _) => ModelKind::A1Proj,
            ("a2", _) => ModelKind::A2Proj,
            ("abstract-hopf", _) => ModelKind::AbstractHopf,
            _ => return Err(Error::UnknownKind(id.to_string())),
        };
        Ok(kind)
    }

    pub fn takes_radius(self) -> bool {
        !matches!(self, ModelKind::A0 | ModelKind::AbstractHopf)
    }

    /// Open radius interval `(lo, hi)` for radius-parametrized kinds.
    pub fn radius_domain(self) -> Option<(f64, f64)> {
        match self {
            ModelKind::A11 | ModelKind::A12 | ModelKind::BHyp => Some((0.0, f64::INFINITY)),
            ModelKind::A1Proj | ModelKind::A2Proj => Some((0.0, FRAC_PI_2)),
            ModelKind::BProj => Some((0.0, FRAC_PI_4)),
            ModelKind::A0 | ModelKind::AbstractHopf => None,
        }
    }

    fn domain_label(self) -> &'static str {
        match self {
            ModelKind::A11 | ModelKind::A12 | ModelKind::BHyp => "0 < r",
            ModelKind::A1Proj | ModelKind::A2Proj => "0 < r < pi/2",
            ModelKind::BProj => "0 < r < pi/4",
            ModelKind::A0 | ModelKind::AbstractHopf => "no radius",
        }
    }

    /// Whether `AW = λW` with `λ = ν`, i.e. `Aφ = φA`.
    pub fn is_type_a(self) -> bool {
        matches!(self, ModelKind::A0 | ModelKind::A11 | ModelKind::A12 | ModelKind::A1Proj | ModelKind::A2Proj)
    }

    fn required_c(self) -> Option<(f64, &'static str)> {
        match self {
            ModelKind::A0 | ModelKind::A11 | ModelKind::A12 | ModelKind::BHyp => Some((-4.0, "CH2 (c = -4)")),
            ModelKind::A1Proj | ModelKind::A2Proj | ModelKind::BProj => Some((4.0, "CP2 (c = 4)")),
            ModelKind::AbstractHopf => None,
        }
    }
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

fn coth(x: f64) -> f64 {
    1.0 / x.tanh()
}

fn cot(x: f64) -> f64 {
    1.0 / x.tan()
}

/// A Hopf hypersurface point: `AW = λW`, `AφW = νφW`, `Aξ = αξ`.
///
/// Construction checks the Hopf relation `λν = (α/2)(λ+ν) + c/4`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HopfModel {
    space: AmbientSpace,
    kind: ModelKind,
    radius: Option<f64>,
    alpha: f64,
    lambda: f64,
    nu: f64,
    xi_d_lambda: f64,
    xi_d_nu: f64,
}

impl HopfModel {
    /// Builds a catalog model at `radius`.
    pub fn catalog(space: AmbientSpace, kind: ModelKind, radius: Option<f64>) -> Result<Self> {
        let name = kind.id();
        if kind == ModelKind::AbstractHopf {
            return Err(Error::UnknownKind("abstract-hopf is not a catalog kind".into()));
        }
        if let Some((c, expected)) = kind.required_c() {
            if space.c() != c {
                return Err(Error::CurvatureMismatch { kind: name, expected, c: space.c() });
            }
        }
        let r = match (kind.radius_domain(), radius) {
            (None, None) => 0.0,
            (None, Some(_)) => return Err(Error::UnexpectedRadius { kind: name }),
            (Some(_), None) => return Err(Error::MissingRadius { kind: name }),
            (Some((lo, hi)), Some(r)) => {
                if !(r.is_finite() && r > lo && r < hi) {
                    return Err(Error::RadiusOutOfDomain { kind: name, radius: r, domain: kind.domain_label() });
                }
                r
            }
        };
        let c = space.c();
        let (alpha, lambda, nu) = match kind {
            ModelKind::A0 => (2.0, 1.0, 1.0),
            ModelKind::A11 => (2.0 * coth(2.0 * r), coth(r), coth(r)),
            ModelKind::A12 => (2.0 * coth(2.0 * r), r.tanh(), r.tanh()),
            ModelKind::BHyp => (2.0 * (2.0 * r).tanh(), r.tanh(), coth(r)),
            ModelKind::A1Proj => {
                let alpha = 2.0 * cot(2.0 * r);
                let lambda = cot(r);
                (alpha, lambda, compute_nu(alpha, lambda, c)?)
            }
            ModelKind::A2Proj => {
                // In dimension three the A2 tube keeps only the -tan r eigenspace pair.
                let alpha = 2.0 * cot(2.0 * r);
                let lambda = -r.tan();
                (alpha, lambda, compute_nu(alpha, lambda, c)?)
            }
            ModelKind::BProj => {
                let alpha = 2.0 * cot(2.0 * r);
                let lambda = cot(r - FRAC_PI_4);
                (alpha, lambda, compute_nu(alpha, lambda, c)?)
            }
            ModelKind::AbstractHopf => unreachable!(),
        };
        Self::checked(space, kind, radius, alpha, lambda, nu)
    }

    /// A Hopf point given directly by its principal curvatures.
    pub fn abstract_hopf(space: AmbientSpace, alpha: f64, lambda: f64, nu: f64) -> Result<Self> {
        Self::checked(space, ModelKind::AbstractHopf, None, alpha, lambda, nu)
    }

    fn checked(
        space: AmbientSpace,
        kind: ModelKind,
        radius: Option<f64>,
        alpha: f64,
        lambda: f64,
        nu: f64,
    ) -> Result<Self> {
        let residual = hopf_relation_residual(alpha, lambda, nu, space.c());
        if residual.is_nan() || residual.abs() > hopf_relation_tolerance(alpha, lambda, nu) {
            return Err(Error::HopfRelation { alpha, lambda, nu, residual });
        }
        Ok(HopfModel { space, kind, radius, alpha, lambda, nu, xi_d_lambda: 0.0, xi_d_nu: 0.0 })
    }

    /// Sets the ξ-derivatives of `λ` and `ν` (zero for homogeneous models).
    pub fn with_xi_derivatives(mut self, xi_d_lambda: f64, xi_d_nu: f64) -> Self {
        self.xi_d_lambda = xi_d_lambda;
        self.xi_d_nu = xi_d_nu;
        self
    }

    pub fn space(&self) -> AmbientSpace {
        self.space
    }
    pub fn kind(&self) -> ModelKind {
        self.kind
    }
    pub fn radius(&self) -> Option<f64> {
        self.radius
    }
    pub fn alpha(&self) -> f64 {
        self.alpha
    }
    pub fn lambda(&self) -> f64 {
        self.lambda
    }
    pub fn nu(&self) -> f64 {
        self.nu
    }
    pub fn xi_d_lambda(&self) -> f64 {
        self.xi_d_lambda
    }
    pub fn xi_d_nu(&self) -> f64 {
        self.xi_d_nu
    }

    pub fn hopf_relation_residual(&self) -> f64 {
        hopf_relation_residual(self.alpha, self.lambda, self.nu, self.space.c())
    }

    /// `diag(λ, ν, α)`.
    pub fn shape_operator(&self) -> FrameOperator {
        shape_hopf(self)
    }

    pub fn connection_along_xi(&self, kappa: f64) -> ConnectionAlongXi {
        connection_along_xi_hopf(self, kappa)
    }
}

/// Convenience wrapper over [`HopfModel::catalog`].
pub fn catalog_model(space: AmbientSpace, kind: ModelKind, radius: Option<f64>) -> Result<HopfModel> {
    HopfModel::catalog(space, kind, radius)
}

pub fn shape_hopf(m: &HopfModel) -> FrameOperator {
    FrameOperator::diagonal(m.lambda, m.nu, m.alpha)
}

/// The scalar functions of non-Hopf frame data whose derivatives are tracked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Scalar {
    Alpha,
    Beta,
    Gamma,
    Delta,
    Mu,
}

impl Scalar {
    pub const ALL: [Scalar; 5] = [Scalar::Alpha, Scalar::Beta, Scalar::Gamma, Scalar::Delta, Scalar::Mu];

    fn index(self) -> usize {
        self as usize
    }
}

/// Directional derivatives `(direction) × (scalar)`, zero unless set.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct DerivativeTable {
    values: [[f64; 5]; 3],
}

impl DerivativeTable {
    pub fn get(&self, dir: Direction, s: Scalar) -> f64 {
        self.values[dir.index()][s.index()]
    }

    pub fn set(&mut self, dir: Direction, s: Scalar, value: f64) {
        self.values[dir.index()][s.index()] = value;
    }

    /// Derivative of the shape operator entries along `dir`.
    pub fn shape_derivative(&self, dir: Direction) -> FrameOperator {
        let d = |s| self.get(dir, s);
        shape_matrix(d(Scalar::Alpha), d(Scalar::Beta), d(Scalar::Gamma), d(Scalar::Delta), d(Scalar::Mu))
    }
}

fn shape_matrix(alpha: f64, beta: f64, gamma: f64, delta: f64, mu: f64) -> FrameOperator {
    FrameOperator::from_rows([[gamma, delta, beta], [delta, mu, 0.0], [beta, 0.0, alpha]])
}

/// Pointwise data of a non-Hopf hypersurface in the frame `(U, φU, ξ)`:
///
/// ```text
/// AU = γU + δφU + βξ,   AφU = δU + μφU,   Aξ = αξ + βU
/// ∇_U U = κ1 φU + δξ,   ∇_φU U = κ2 φU + μξ,   ∇_ξ U = κ3 φU
/// ```
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct NonHopfFrameData {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub delta: f64,
    pub mu: f64,
    pub kappa1: f64,
    pub kappa2: f64,
    pub kappa3: f64,
    pub derivs: DerivativeTable,
}

impl NonHopfFrameData {
    pub fn new(alpha: f64, beta: f64, gamma: f64, delta: f64, mu: f64) -> Self {
        NonHopfFrameData { alpha, beta, gamma, delta, mu, ..Default::default() }
    }

    pub fn with_kappas(mut self, kappa1: f64, kappa2: f64, kappa3: f64) -> Self {
        self.kappa1 = kappa1;
        self.kappa2 = kappa2;
        self.kappa3 = kappa3;
        self
    }

    pub fn with_derivative(mut self, dir: Direction, s: Scalar, value: f64) -> Self {
        self.derivs.set(dir, s, value);
        self
    }

    pub fn ensure_non_hopf(&self) -> Result<()> {
        if self.beta == 0.0 || !self.beta.is_finite() {
            return Err(Error::HopfData);
        }
        Ok(())
    }

    pub fn shape_operator(&self) -> Result<FrameOperator> {
        shape_nonhopf(self)
    }

    pub fn connection_along_xi(&self) -> ConnectionAlongXi {
        connection_along_xi_nonhopf(self)
    }
}

pub fn shape_nonhopf(d: &NonHopfFrameData) -> Result<FrameOperator> {
    d.ensure_non_hopf()?;
    Ok(shape_matrix(d.alpha, d.beta, d.gamma, d.delta, d.mu))
}

/// `∇_ξ e1`, `∇_ξ e2`, `∇_ξ ξ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConnectionAlongXi {
    pub d_e1: FrameVector,
    pub d_e2: FrameVector,
    pub d_xi: FrameVector,
}

impl ConnectionAlongXi {
    /// Matrix whose column `j` is `∇_ξ e_j`.
    pub fn as_operator(&self) -> FrameOperator {
        FrameOperator::from_columns([self.d_e1, self.d_e2, self.d_xi])
    }

    /// `max |g(∇_ξ e_i, e_j) + g(e_i, ∇_ξ e_j)|`.
    pub fn metric_compatibility_defect(&self) -> f64 {
        let m = self.as_operator();
        m.add(&m.transpose()).operator_norm()
    }
}

pub fn connection_along_xi_nonhopf(d: &NonHopfFrameData) -> ConnectionAlongXi {
    ConnectionAlongXi {
        d_e1: FrameVector::new(0.0, d.kappa3, 0.0),
        d_e2: FrameVector::new(-d.kappa3, 0.0, -d.beta),
        d_xi: FrameVector::new(0.0, d.beta, 0.0),
    }
}

/// Hopf connection along `ξ`: `∇_ξW = κφW` with free gauge `κ`, `∇_ξξ = φAξ`.
pub fn connection_along_xi_hopf(m: &HopfModel, kappa: f64) -> ConnectionAlongXi {
    let d_xi = FrameOperator::phi().compose(&m.shape_operator()).apply(&FrameVector::XI);
    ConnectionAlongXi { d_e1: FrameVector::new(0.0, kappa, 0.0), d_e2: FrameVector::new(-kappa, 0.0, 0.0), d_xi }
}

/// Directional derivatives entering the scalar Codazzi equations.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct CodazziDerivInputs {
    pub xi_delta: f64,
    pub phiu_alpha: f64,
    pub phiu_beta: f64,
    pub u_delta: f64,
    pub phiu_gamma: f64,
}

impl CodazziDerivInputs {
    pub fn from_table(t: &DerivativeTable) -> Self {
        CodazziDerivInputs {
            xi_delta: t.get(Direction::Xi, Scalar::Delta),
            phiu_alpha: t.get(Direction::E2, Scalar::Alpha),
            phiu_beta: t.get(Direction::E2, Scalar::Beta),
            u_delta: t.get(Direction::E1, Scalar::Delta),
            phiu_gamma: t.get(Direction::E2, Scalar::Gamma),
        }
    }

    /// The derivatives forced by the Codazzi equations, with `Uδ = u_delta`.
    pub fn consistent(d: &NonHopfFrameData, c: f64, u_delta: f64) -> Self {
        let rhs = codazzi_rhs(d, c);
        CodazziDerivInputs {
            xi_delta: rhs[0],
            phiu_alpha: rhs[1],
            phiu_beta: rhs[2],
            u_delta,
            phiu_gamma: u_delta - rhs[3],
        }
    }
}

fn codazzi_rhs(d: &NonHopfFrameData, c: f64) -> [f64; 4] {
    let NonHopfFrameData { alpha: a, beta: b, gamma: g, delta: dl, mu: m, kappa1: k1, kappa2: k2, kappa3: k3, .. } = *d;
    [
        a * g + b * k1 + dl * dl + m * k3 + 0.25 * c - g * m - g * k3 - b * b,
        a * b + b * k3 - 3.0 * b * m,
        a * g + b * k1 + 2.0 * dl * dl + 0.5 * c - 2.0 * g * m + a * m,
        m * k1 - k1 * g - b * g - 2.0 * dl * k2 - 2.0 * b * m,
    ]
}

/// `LHS - RHS` of the four scalar Codazzi equations:
///
/// ```text
/// ξδ         = αγ + βκ1 + δ² + μκ3 + c/4 - γμ - γκ3 - β²
/// (φU)α      = αβ + βκ3 - 3βμ
/// (φU)β      = αγ + βκ1 + 2δ² + c/2 - 2γμ + αμ
/// Uδ - (φU)γ = μκ1 - κ1γ - βγ - 2δκ2 - 2βμ
/// ```
pub fn codazzi_residuals(d: &NonHopfFrameData, inputs: &CodazziDerivInputs, c: f64) -> Result<[f64; 4]> {
    d.ensure_non_hopf()?;
    let rhs = codazzi_rhs(d, c);
    Ok([
        inputs.xi_delta - rhs[0],
        inputs.phiu_alpha - rhs[1],
        inputs.phiu_beta - rhs[2],
        inputs.u_delta - inputs.phiu_gamma - rhs[3],
    ])
}
