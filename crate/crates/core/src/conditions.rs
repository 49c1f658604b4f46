//! Parallelism conditions on the *-Ricci operator as residual systems.
//!
//! Each condition is evaluated on the full frame basis: the semi-parallel and
//! pseudo-parallel systems over all 27 ordered triples `(X, Y, Z)` (81 scalar
//! components), ξ-parallelism over the three frame vectors. A condition holds
//! iff its residual is below `epsilon` (default [`DEFAULT_EPSILON`]).

use serde::{Deserialize, Serialize};

use crate::curvature::{riemann, star_ricci, structure_jacobi, structure_jacobi_nonhopf, CurvatureTensor};
use crate::error::{Error, Result};
use crate::frame::{wedge, Direction, FrameOperator, FrameVector, DIM};
use crate::models::{
    codazzi_residuals, AmbientSpace, CodazziDerivInputs, ConnectionAlongXi, HopfModel, NonHopfFrameData, Scalar,
};
use crate::numfmt;

/// A condition holds iff its residual is below this threshold.
pub const DEFAULT_EPSILON: f64 = 1e-8;

/// All 27 ordered frame triples `(X, Y, Z)`, lexicographic.
fn triples() -> impl Iterator<Item = (FrameVector, FrameVector, FrameVector)> {
    (0..DIM).flat_map(|i| {
        (0..DIM).flat_map(move |j| {
            (0..DIM).map(move |k| (FrameVector::basis(i), FrameVector::basis(j), FrameVector::basis(k)))
        })
    })
}

pub fn vanishing_residual(s: &FrameOperator) -> f64 {
    s.operator_norm()
}

/// `(R(X,Y)·S*)Z = R(X,Y)S*Z - S*(R(X,Y)Z)`.
pub fn semi_parallel_defect(
    r: &CurvatureTensor,
    s: &FrameOperator,
    x: &FrameVector,
    y: &FrameVector,
    z: &FrameVector,
) -> FrameVector {
    let rxy = r.operator(x, y);
    rxy.apply(&s.apply(z)) - s.apply(&rxy.apply(z))
}

/// `((X∧Y)·S*)Z = g(Y,S*Z)X - g(X,S*Z)Y - S*[g(Y,Z)X - g(X,Z)Y]`.
pub fn wedge_defect(s: &FrameOperator, x: &FrameVector, y: &FrameVector, z: &FrameVector) -> FrameVector {
    wedge(x, y, &s.apply(z)) - s.apply(&wedge(x, y, z))
}

/// Max absolute component of the semi-parallel defect over all frame triples.
pub fn semi_parallel_residual(r: &CurvatureTensor, s: &FrameOperator) -> f64 {
    triples().map(|(x, y, z)| semi_parallel_defect(r, s, &x, &y, &z).max_abs()).fold(0.0, f64::max)
}

/// Two scalar obstructions a Hopf point must clear to be semi-parallel:
/// `(λν + c)(αλ + c/4)` and `(λν + c)(αν + c/4)`.
pub fn semi_parallel_hopf_reduction(m: &HopfModel) -> (f64, f64) {
    let c = m.space().c();
    let s = c + m.lambda() * m.nu();
    (s * (m.alpha() * m.lambda() + 0.25 * c), s * (m.alpha() * m.nu() + 0.25 * c))
}

/// Solution of the pointwise pseudo-parallel system `a = L·b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PseudoParallel {
    /// Both sides vanish identically, so any `L` works.
    Degenerate { residual: f64 },
    /// Least-squares `L` with its post-fit max residual.
    Fitted { l: f64, residual: f64 },
}

impl PseudoParallel {
    pub fn l(&self) -> Option<f64> {
        match self {
            PseudoParallel::Degenerate { .. } => None,
            PseudoParallel::Fitted { l, .. } => Some(*l),
        }
    }

    pub fn residual(&self) -> f64 {
        match self {
            PseudoParallel::Degenerate { residual } | PseudoParallel::Fitted { residual, .. } => *residual,
        }
    }

    pub fn is_degenerate(&self) -> bool {
        matches!(self, PseudoParallel::Degenerate { .. })
    }
}

pub fn pseudo_parallel_solve(r: &CurvatureTensor, s: &FrameOperator) -> Result<PseudoParallel> {
    pseudo_parallel_solve_with(r, s, DEFAULT_EPSILON)
}

/// Assembles the 81 components of
/// `R(X,Y)S*Z - S*(R(X,Y)Z) = L{g(Y,S*Z)X - g(X,S*Z)Y - S*[(X∧Y)Z]}`
/// and solves for `L` by least squares.
pub fn pseudo_parallel_solve_with(r: &CurvatureTensor, s: &FrameOperator, epsilon: f64) -> Result<PseudoParallel> {
    let (mut ab, mut bb, mut a_max, mut b_max) = (0.0, 0.0, 0.0f64, 0.0f64);
    let mut rows = Vec::with_capacity(27);
    for (x, y, z) in triples() {
        let a = semi_parallel_defect(r, s, &x, &y, &z);
        let b = wedge_defect(s, &x, &y, &z);
        ab += a.dot(&b);
        bb += b.dot(&b);
        a_max = a_max.max(a.max_abs());
        b_max = b_max.max(b.max_abs());
        rows.push((a, b));
    }
    if b_max <= epsilon {
        return if a_max <= epsilon {
            Ok(PseudoParallel::Degenerate { residual: a_max })
        } else {
            Err(Error::NoPseudoParallelFunction { best_l: 0.0, residual: a_max })
        };
    }
    let l = ab / bb;
    let residual = rows.iter().map(|(a, b)| (*a - b.scale(l)).max_abs()).fold(0.0, f64::max);
    if residual > epsilon {
        return Err(Error::NoPseudoParallelFunction { best_l: l, residual });
    }
    Ok(PseudoParallel::Fitted { l, residual })
}

/// `(∇_ξT) = ξ(T) + [C, T]` where `C` holds `∇_ξ e_j` in its columns and
/// `ξ(T)` is the derivative of the frame entries of `T`.
pub fn covariant_derivative_along_xi(
    t: &FrameOperator,
    xi_t: &FrameOperator,
    conn: &ConnectionAlongXi,
) -> FrameOperator {
    xi_t.add(&conn.as_operator().commutator(t))
}

/// Frame-entry derivative of `S*` given that of `A`:
/// `ξ(S*) = -[φ ξ(A) φ A + φ A φ ξ(A)]` (`φ` has constant entries).
pub fn star_ricci_entry_derivative(a: &FrameOperator, xi_a: &FrameOperator) -> FrameOperator {
    let phi = FrameOperator::phi();
    let left = phi.compose(xi_a).compose(&phi).compose(a);
    let right = phi.compose(a).compose(&phi).compose(xi_a);
    left.add(&right).scale(-1.0)
}

/// `∇_ξ S*` for non-Hopf frame data, column `j` being `(∇_ξ S*)e_j`.
pub fn xi_parallel_defect_nonhopf(d: &NonHopfFrameData, c: f64) -> Result<FrameOperator> {
    let space = AmbientSpace::new(c)?;
    let a = d.shape_operator()?;
    let s = star_ricci(&a, &space);
    let xi_s = star_ricci_entry_derivative(&a, &d.derivs.shape_derivative(Direction::Xi));
    Ok(covariant_derivative_along_xi(&s, &xi_s, &d.connection_along_xi()))
}

pub fn xi_parallel_residual_nonhopf(d: &NonHopfFrameData, c: f64) -> Result<f64> {
    Ok(xi_parallel_defect_nonhopf(d, c)?.operator_norm())
}

/// `∇_ξ S*` at a Hopf point with connection gauge `κ` (`∇_ξW = κφW`).
pub fn xi_parallel_defect_hopf(m: &HopfModel, kappa: f64) -> FrameOperator {
    let a = m.shape_operator();
    let s = star_ricci(&a, &m.space());
    // α is constant on a Hopf hypersurface.
    let xi_a = FrameOperator::diagonal(m.xi_d_lambda(), m.xi_d_nu(), 0.0);
    let xi_s = star_ricci_entry_derivative(&a, &xi_a);
    covariant_derivative_along_xi(&s, &xi_s, &m.connection_along_xi(kappa))
}

pub fn xi_parallel_residual_hopf(m: &HopfModel, kappa: f64) -> f64 {
    xi_parallel_defect_hopf(m, kappa).operator_norm()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConditionOutcome {
    pub holds: bool,
    #[serde(with = "numfmt")]
    pub residual: f64,
}

impl ConditionOutcome {
    pub fn from_residual(residual: f64, epsilon: f64) -> Self {
        ConditionOutcome { holds: residual < epsilon, residual }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PseudoParallelOutcome {
    /// The pointwise system admits some `L` (possibly zero, possibly any).
    pub holds: bool,
    #[serde(with = "numfmt")]
    pub residual: f64,
    #[serde(rename = "L", default, skip_serializing_if = "Option::is_none", with = "numfmt::option")]
    pub l: Option<f64>,
    pub degenerate: bool,
    pub nonzero_l: bool,
}

impl PseudoParallelOutcome {
    fn from_solution(solution: Result<PseudoParallel>, epsilon: f64) -> Self {
        match solution {
            Ok(PseudoParallel::Degenerate { residual }) => {
                PseudoParallelOutcome { holds: true, residual, l: None, degenerate: true, nonzero_l: false }
            }
            Ok(PseudoParallel::Fitted { l, residual }) => PseudoParallelOutcome {
                holds: true,
                residual,
                l: Some(l),
                degenerate: false,
                nonzero_l: l.abs() > epsilon,
            },
            Err(Error::NoPseudoParallelFunction { best_l, residual }) => PseudoParallelOutcome {
                holds: false,
                residual,
                l: None,
                degenerate: false,
                nonzero_l: best_l.abs() > epsilon,
            },
            Err(other) => unreachable!("pseudo-parallel solve only fails with an inconsistent system: {other}"),
        }
    }
}

/// Which case of the ξ-parallel classification a Hopf point instantiates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HopfBranch {
    /// `λ = ν`, so `Aφ = φA`.
    pub type_a: bool,
    /// `α = 0`, i.e. `Aξ = 0`.
    pub a_xi_zero: bool,
    /// `ξλ = ξν = 0` with `λ ≠ ν` and `α ≠ 0`.
    pub constant_along_xi: bool,
}

impl HopfBranch {
    pub fn of(m: &HopfModel, epsilon: f64) -> Self {
        let type_a = (m.lambda() - m.nu()).abs() < epsilon;
        let a_xi_zero = m.alpha().abs() < epsilon;
        let constant = m.xi_d_lambda().abs() < epsilon && m.xi_d_nu().abs() < epsilon;
        HopfBranch { type_a, a_xi_zero, constant_along_xi: constant && !type_a && !a_xi_zero }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConditionReport {
    pub vanishing: ConditionOutcome,
    pub semi_parallel: ConditionOutcome,
    pub pseudo_parallel: PseudoParallelOutcome,
    pub xi_parallel: ConditionOutcome,
    pub branch: HopfBranch,
}

impl ConditionReport {
    /// Copy with every number rounded the way serialization rounds it.
    pub fn quantized(&self) -> Self {
        let q = |o: ConditionOutcome| ConditionOutcome { residual: numfmt::round_sig(o.residual), ..o };
        ConditionReport {
            vanishing: q(self.vanishing),
            semi_parallel: q(self.semi_parallel),
            pseudo_parallel: PseudoParallelOutcome {
                residual: numfmt::round_sig(self.pseudo_parallel.residual),
                l: self.pseudo_parallel.l.map(numfmt::round_sig),
                ..self.pseudo_parallel
            },
            xi_parallel: q(self.xi_parallel),
            branch: self.branch,
        }
    }
}

/// Runs all four conditions on a Hopf point with `κ = 0`.
pub fn classify_hopf(m: &HopfModel) -> ConditionReport {
    classify_hopf_with(m, DEFAULT_EPSILON, 0.0)
}

pub fn classify_hopf_with(m: &HopfModel, epsilon: f64, kappa: f64) -> ConditionReport {
    let space = m.space();
    let a = m.shape_operator();
    let r = riemann(&a, &space);
    let s = star_ricci(&a, &space);
    ConditionReport {
        vanishing: ConditionOutcome::from_residual(vanishing_residual(&s), epsilon),
        semi_parallel: ConditionOutcome::from_residual(semi_parallel_residual(&r, &s), epsilon),
        pseudo_parallel: PseudoParallelOutcome::from_solution(pseudo_parallel_solve_with(&r, &s, epsilon), epsilon),
        xi_parallel: ConditionOutcome::from_residual(xi_parallel_residual_hopf(m, kappa), epsilon),
        branch: HopfBranch::of(m, epsilon),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    ContradictionCertified,
    Consistent,
    Inconclusive,
}

/// One evaluated constraint: the value the curvature engine produced next to
/// the closed-form scalar it should reduce to.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TraceStep {
    pub constraint: String,
    #[serde(with = "numfmt")]
    pub engine: f64,
    #[serde(with = "numfmt")]
    pub closed_form: f64,
    pub step: String,
}

impl TraceStep {
    /// `|engine - closed_form|`.
    pub fn agreement(&self) -> f64 {
        (self.engine - self.closed_form).abs()
    }

    pub fn residual(&self) -> f64 {
        self.engine.abs()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ObstructionTrace {
    pub steps: Vec<TraceStep>,
    pub verdict: Verdict,
    /// External results taken as axioms by the final step.
    pub axioms: Vec<String>,
}

impl ObstructionTrace {
    fn new() -> Self {
        ObstructionTrace { steps: Vec::new(), verdict: Verdict::Inconclusive, axioms: Vec::new() }
    }

    fn push(&mut self, constraint: &str, engine: f64, closed_form: f64, step: &str) {
        self.steps.push(TraceStep { constraint: constraint.into(), engine, closed_form, step: step.into() });
    }

    fn finish(mut self, verdict: Verdict) -> Self {
        self.verdict = verdict;
        self
    }

    /// Largest disagreement between engine values and closed forms.
    pub fn max_disagreement(&self) -> f64 {
        self.steps.iter().map(TraceStep::agreement).fold(0.0, f64::max)
    }
}

/// Axiom invoked when the constraints force `l = 0`.
pub const NO_VANISHING_JACOBI_AXIOM: &str =
    "no real hypersurface in a non-flat complex space form has vanishing structure Jacobi operator";

const U: FrameVector = FrameVector::E1;
const PHI_U: FrameVector = FrameVector::E2;
const XI: FrameVector = FrameVector::XI;

struct Engine {
    r: CurvatureTensor,
    s: FrameOperator,
}

impl Engine {
    fn new(d: &NonHopfFrameData, space: &AmbientSpace) -> Result<Self> {
        let a = d.shape_operator()?;
        Ok(Engine { r: riemann(&a, space), s: star_ricci(&a, space) })
    }

    fn sp(&self, x: FrameVector, y: FrameVector, z: FrameVector) -> FrameVector {
        semi_parallel_defect(&self.r, &self.s, &x, &y, &z)
    }

    fn wedge(&self, x: FrameVector, y: FrameVector, z: FrameVector) -> FrameVector {
        wedge_defect(&self.s, &x, &y, &z)
    }
}

fn scale_of(values: &[f64]) -> f64 {
    1.0 + values.iter().fold(0.0f64, |m, v| m.max(v.abs()))
}

pub fn certify_semi_parallel_obstruction(d: &NonHopfFrameData, c: f64) -> Result<ObstructionTrace> {
    certify_semi_parallel_obstruction_with(d, c, DEFAULT_EPSILON)
}

/// Walks the semi-parallel constraint chain on a non-Hopf point.
///
/// The chain: `δ = 0`; then `μ(c/4+αμ) = 0` and `(c+γμ)(c/4+αμ) = 0`; then
/// `μ(c/4+αγ-β²) = 0`. Each branch that keeps `c/4+αμ` or `c/4+αγ-β²` nonzero
/// forces `μ = 0` and then `c = 0`. Otherwise the structure Jacobi operator
/// is forced to vanish.
pub fn certify_semi_parallel_obstruction_with(d: &NonHopfFrameData, c: f64, tol: f64) -> Result<ObstructionTrace> {
    let space = AmbientSpace::new(c)?;
    let engine = Engine::new(d, &space)?;
    let NonHopfFrameData { alpha, beta, gamma, delta, mu, .. } = *d;
    let q = 0.25 * c;
    let mut trace = ObstructionTrace::new();

    let v = engine.sp(U, PHI_U, U).dot(&PHI_U);
    trace.push("beta^2 delta^2 = 0", v, beta * beta * delta * delta, "semi-parallel at (U, phiU, U), phiU-component");
    if delta.abs() > tol {
        return Ok(trace.finish(Verdict::Consistent));
    }

    let q1 = q + alpha * mu;
    let v = engine.sp(PHI_U, XI, PHI_U);
    trace.push(
        "mu (c/4 + alpha mu) = 0",
        v.dot(&U) / beta,
        mu * q1,
        "semi-parallel at (phiU, xi, phiU), U-component / beta",
    );
    trace.push(
        "(c + gamma mu)(c/4 + alpha mu) = 0",
        -v.dot(&XI),
        (c + gamma * mu) * q1,
        "semi-parallel at (phiU, xi, phiU), xi-component",
    );
    if q1.abs() > tol * scale_of(&[q, alpha * mu]) {
        return Ok(force_c_zero(trace, d, &space, |e| -e.sp(PHI_U, XI, PHI_U).dot(&XI), c * q, c, tol));
    }

    let q2 = q + alpha * gamma - beta * beta;
    let v = engine.sp(U, XI, U);
    trace.push(
        "mu (c/4 + alpha gamma - beta^2) = 0",
        v.dot(&U) / beta,
        mu * q2,
        "semi-parallel at (U, xi, U), U-component / beta",
    );
    if q2.abs() > tol * scale_of(&[q, alpha * gamma, beta * beta]) {
        // μ = 0 turns c/4 + αμ = 0 into c/4 = 0.
        let forced = q;
        trace.push("mu = 0 forced", 0.0, 0.0, "c/4 + alpha gamma - beta^2 != 0");
        trace.push("c/4 = 0 forced", forced, q, "c/4 + alpha mu = 0 with mu = 0");
        let verdict = if forced.abs() > tol { Verdict::ContradictionCertified } else { Verdict::Inconclusive };
        return Ok(trace.finish(verdict));
    }

    let a = d.shape_operator()?;
    let l = structure_jacobi(&a, &space);
    let l_closed = structure_jacobi_nonhopf(d, c);
    trace.push("l = 0", l.operator_norm(), l_closed.operator_norm(), "structure Jacobi operator R(X, xi)xi");
    if l.operator_norm() <= tol * scale_of(&[q, alpha * gamma, beta * beta, alpha * mu]) {
        trace.axioms.push(NO_VANISHING_JACOBI_AXIOM.into());
        Ok(trace.finish(Verdict::ContradictionCertified))
    } else {
        Ok(trace.finish(Verdict::Inconclusive))
    }
}

/// Records `μ = 0` as forced, re-evaluates `forced_equation` on the engine
/// with `μ` set to zero, and certifies when that leaves `c = 0`.
fn force_c_zero(
    mut trace: ObstructionTrace,
    d: &NonHopfFrameData,
    space: &AmbientSpace,
    forced_equation: impl Fn(&Engine) -> f64,
    closed_form: f64,
    c: f64,
    tol: f64,
) -> ObstructionTrace {
    trace.push("mu = 0 forced", 0.0, 0.0, "c/4 + alpha mu != 0");
    let reduced = NonHopfFrameData { mu: 0.0, ..*d };
    let value = Engine::new(&reduced, space).map(|e| forced_equation(&e)).unwrap_or(f64::NAN);
    trace.push("c^2/4 = 0 forced", value, closed_form, "second equation with mu = 0");
    let verdict =
        if c.abs() > tol && value.abs() > tol { Verdict::ContradictionCertified } else { Verdict::Inconclusive };
    trace.finish(verdict)
}

pub fn certify_pseudo_parallel_obstruction(d: &NonHopfFrameData, c: f64) -> Result<ObstructionTrace> {
    certify_pseudo_parallel_obstruction_with(d, c, DEFAULT_EPSILON)
}

/// Walks the pseudo-parallel constraint chain on a non-Hopf point.
///
/// `δ = 0`, `Lβμ = 0` with `L ≠ 0`, `L = c/4`, `αγ = β²`; then the Codazzi
/// equations with `δ = μ = 0` give the `φU`-derivatives of `α, β, γ`, and
/// differentiating `αγ = β²` along `φU` leaves `-(3/4)βc = 0`.
pub fn certify_pseudo_parallel_obstruction_with(d: &NonHopfFrameData, c: f64, tol: f64) -> Result<ObstructionTrace> {
    let space = AmbientSpace::new(c)?;
    let engine = Engine::new(d, &space)?;
    let NonHopfFrameData { alpha, beta, gamma, delta, mu, kappa1, kappa3, .. } = *d;
    let mut trace = ObstructionTrace::new();

    // The wedge side has no φU-component at (U, φU, U), so L drops out.
    let v = engine.sp(U, PHI_U, U).dot(&PHI_U);
    trace.push("beta^2 delta^2 = 0", v, beta * beta * delta * delta, "pseudo-parallel at (U, phiU, U), phiU-component");
    if delta.abs() > tol {
        return Ok(trace.finish(Verdict::Consistent));
    }

    // Coefficient of L in the φU-component at (U, φU, ξ).
    let v = -engine.wedge(U, PHI_U, XI).dot(&PHI_U);
    trace.push("L beta mu = 0 with L != 0", v, beta * mu, "pseudo-parallel at (U, phiU, xi), phiU-component");
    if mu.abs() > tol {
        return Ok(trace.finish(Verdict::Consistent));
    }

    let num = engine.sp(PHI_U, XI, PHI_U).dot(&XI);
    let den = engine.wedge(PHI_U, XI, PHI_U).dot(&XI);
    if den.abs() <= tol {
        return Ok(trace.finish(Verdict::Inconclusive));
    }
    let l = num / den;
    trace.push("L = c/4", l, 0.25 * c, "pseudo-parallel at (phiU, xi, phiU), xi-component");

    let v = engine.sp(U, XI, U).dot(&XI) - l * engine.wedge(U, XI, U).dot(&XI);
    trace.push(
        "alpha gamma = beta^2",
        v / -c,
        alpha * gamma - beta * beta,
        "pseudo-parallel at (U, xi, U), xi-component / (-c)",
    );
    if (alpha * gamma - beta * beta).abs() > tol * scale_of(&[alpha * gamma, beta * beta]) {
        return Ok(trace.finish(Verdict::Consistent));
    }

    // With ξδ = 0 the first Codazzi equation reads γκ3 = βκ1 + c/4.
    let no_xi_delta = CodazziDerivInputs { xi_delta: 0.0, ..CodazziDerivInputs::consistent(d, c, 0.0) };
    let r1 = codazzi_residuals(d, &no_xi_delta, c)?[0];
    trace.push(
        "gamma kappa3 = beta kappa1 + c/4",
        r1,
        gamma * kappa3 - beta * kappa1 - 0.25 * c,
        "Codazzi (U, xi) with delta = mu = 0",
    );
    if r1.abs() > tol * scale_of(&[gamma * kappa3, beta * kappa1, c]) {
        return Ok(trace.finish(Verdict::Inconclusive));
    }

    let derivs = CodazziDerivInputs::consistent(d, c, 0.0);
    let derivative = gamma * derivs.phiu_alpha + alpha * derivs.phiu_gamma - 2.0 * beta * derivs.phiu_beta;
    let multiple = -0.75 * beta * c;
    trace.push("phiU(alpha gamma - beta^2) = 0", derivative, multiple, "differentiate alpha gamma = beta^2 along phiU");
    let scale = scale_of(&[gamma * derivs.phiu_alpha, alpha * derivs.phiu_gamma, beta * derivs.phiu_beta]);
    let verdict = if (derivative - multiple).abs() <= tol * scale && derivative.abs() > tol * scale {
        trace.push("c = 0 forced", c, c, "-(3/4) beta c = 0 with beta != 0");
        Verdict::ContradictionCertified
    } else {
        Verdict::Inconclusive
    };
    Ok(trace.finish(verdict))
}

pub fn certify_xi_parallel_obstruction(d: &NonHopfFrameData, c: f64) -> Result<ObstructionTrace> {
    certify_xi_parallel_obstruction_with(d, c, DEFAULT_EPSILON)
}

/// `∇_ξ S*` on a non-Hopf point: the `ξ`-part of `(∇_ξS*)ξ` is `β²δ`, its
/// `φU`-part with `δ = 0` is `β(μκ3 - c - γμ)`, and the `U`-part of
/// `(∇_ξS*)φU` is `β²μ`. The last forces `μ = 0`, which turns the second
/// into `c = 0`.
pub fn certify_xi_parallel_obstruction_with(d: &NonHopfFrameData, c: f64, tol: f64) -> Result<ObstructionTrace> {
    let defect = xi_parallel_defect_nonhopf(d, c)?;
    let NonHopfFrameData { beta, gamma, delta, mu, kappa3, .. } = *d;
    let mut trace = ObstructionTrace::new();

    let on_xi = defect.column(2);
    trace.push("beta^2 delta = 0", on_xi.dot(&XI), beta * beta * delta, "(nabla_xi S*)xi, xi-component");
    if delta.abs() > tol {
        return Ok(trace.finish(Verdict::Consistent));
    }
    // ξδ enters the φU-component through ξ(βδ); it vanishes where δ does.
    let xi_delta = d.derivs.get(Direction::Xi, Scalar::Delta);
    let second = (on_xi.dot(&PHI_U) + beta * xi_delta) / beta;
    trace.push(
        "mu kappa3 = c + gamma mu",
        second,
        mu * kappa3 - c - gamma * mu,
        "(nabla_xi S*)xi, phiU-component / beta",
    );
    let third = defect.column(1).dot(&U);
    trace.push("beta^2 mu = 0", third, beta * beta * mu, "(nabla_xi S*)phiU, U-component");

    trace.push("mu = 0 forced", 0.0, 0.0, "beta != 0");
    let reduced = NonHopfFrameData { mu: 0.0, ..*d }.with_derivative(Direction::Xi, Scalar::Delta, 0.0);
    let forced = xi_parallel_defect_nonhopf(&reduced, c)?.column(2).dot(&PHI_U) / beta;
    trace.push("c = 0 forced", forced, -c, "mu kappa3 = c + gamma mu with mu = 0");
    let verdict =
        if c.abs() > tol && forced.abs() > tol { Verdict::ContradictionCertified } else { Verdict::Inconclusive };
    Ok(trace.finish(verdict))
}
