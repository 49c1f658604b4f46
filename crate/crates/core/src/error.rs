use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("ambient curvature must be finite and nonzero, got {0}")]
    FlatAmbient(f64),

    #[error("beta must be nonzero for non-Hopf frame data (use a Hopf model instead)")]
    HopfData,

    #[error("radius {radius} outside the domain of {kind}: {domain}")]
    RadiusOutOfDomain { kind: &'static str, radius: f64, domain: &'static str },

    #[error("{kind} takes no radius")]
    UnexpectedRadius { kind: &'static str },

    #[error("{kind} requires a radius")]
    MissingRadius { kind: &'static str },

    #[error("{kind} is a model in {expected}, not in an ambient space with c = {c}")]
    CurvatureMismatch { kind: &'static str, expected: &'static str, c: f64 },

    #[error(
        "principal curvatures (alpha={alpha}, lambda={lambda}, nu={nu}) violate the Hopf relation by {residual:e}"
    )]
    HopfRelation { alpha: f64, lambda: f64, nu: f64, residual: f64 },

    #[error("nu undetermined by the Hopf relation: lambda = alpha/2 = {0}")]
    NuUndetermined(f64),

    #[error("unknown model kind '{0}'")]
    UnknownKind(String),

    #[error("unknown ambient space '{0}' (expected cp2 or chh2)")]
    UnknownSpace(String),

    #[error("no function L exists pointwise: best fit L = {best_l} leaves residual {residual:e}")]
    NoPseudoParallelFunction { best_l: f64, residual: f64 },

    #[error("condition never attained for {kind} in this ambient space")]
    NeverAttained { kind: &'static str },

    #[error("invalid scan grid: {0}")]
    InvalidGrid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
