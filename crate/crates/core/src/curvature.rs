//! Gauss-equation curvature, the *-Ricci operator and the structure Jacobi
//! operator of a 3-dimensional real hypersurface.

use serde::{Deserialize, Serialize};

use crate::frame::{FrameOperator, FrameVector, DIM};
use crate::models::{AmbientSpace, HopfModel, NonHopfFrameData};

/// `R(e_i, e_j)` as an operator on the frame, for every ordered pair `(i, j)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurvatureTensor {
    slices: [[FrameOperator; DIM]; DIM],
}

impl CurvatureTensor {
    /// `Z ↦ R(e_i, e_j)Z`.
    pub fn slice(&self, i: usize, j: usize) -> &FrameOperator {
        &self.slices[i][j]
    }

    /// `R(X, Y)` extended bilinearly from the frame slices.
    pub fn operator(&self, x: &FrameVector, y: &FrameVector) -> FrameOperator {
        let mut acc = FrameOperator::ZERO;
        for i in 0..DIM {
            for j in 0..DIM {
                let w = x.0[i] * y.0[j];
                if w != 0.0 {
                    acc = acc.add(&self.slices[i][j].scale(w));
                }
            }
        }
        acc
    }

    pub fn apply(&self, x: &FrameVector, y: &FrameVector, z: &FrameVector) -> FrameVector {
        self.operator(x, y).apply(z)
    }

    /// `max |R(e_i,e_j) + R(e_j,e_i)|`.
    pub fn antisymmetry_defect(&self) -> f64 {
        pairs().map(|(i, j)| self.slices[i][j].add(&self.slices[j][i]).operator_norm()).fold(0.0, f64::max)
    }

    /// `max |g(R(X,Y)Z,V) + g(R(X,Y)V,Z)|`: each slice must be skew.
    pub fn metric_defect(&self) -> f64 {
        pairs()
            .map(|(i, j)| {
                let s = &self.slices[i][j];
                s.add(&s.transpose()).operator_norm()
            })
            .fold(0.0, f64::max)
    }

    /// `max |R(X,Y)Z + R(Y,Z)X + R(Z,X)Y|` over frame triples.
    pub fn bianchi_defect(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..DIM {
            for j in 0..DIM {
                for k in 0..DIM {
                    let sum = self.slices[i][j].column(k) + self.slices[j][k].column(i) + self.slices[k][i].column(j);
                    worst = worst.max(sum.max_abs());
                }
            }
        }
        worst
    }
}

fn pairs() -> impl Iterator<Item = (usize, usize)> {
    (0..DIM).flat_map(|i| (0..DIM).map(move |j| (i, j)))
}

/// Gauss equation in a complex space form of curvature `c`:
///
/// ```text
/// R(X,Y)Z = c/4 [g(Y,Z)X - g(X,Z)Y + g(φY,Z)φX - g(φX,Z)φY - 2g(φX,Y)φZ]
///         + g(AY,Z)AX - g(AX,Z)AY
/// ```
pub fn gauss_curvature(
    a: &FrameOperator,
    space: &AmbientSpace,
    x: &FrameVector,
    y: &FrameVector,
    z: &FrameVector,
) -> FrameVector {
    let phi = FrameOperator::phi();
    let (px, py, pz) = (phi.apply(x), phi.apply(y), phi.apply(z));
    let (ax, ay) = (a.apply(x), a.apply(y));
    let ambient =
        x.scale(y.dot(z)) - y.scale(x.dot(z)) + px.scale(py.dot(z)) - py.scale(px.dot(z)) - pz.scale(2.0 * px.dot(y));
    ambient.scale(0.25 * space.c()) + ax.scale(ay.dot(z)) - ay.scale(ax.dot(z))
}

pub fn riemann(a: &FrameOperator, space: &AmbientSpace) -> CurvatureTensor {
    let e = |i| FrameVector::basis(i);
    let slices = std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            FrameOperator::from_columns(std::array::from_fn(|k| gauss_curvature(a, space, &e(i), &e(j), &e(k))))
        })
    });
    CurvatureTensor { slices }
}

/// `S*X = -[cφ²X + (φA)²X]`. Not symmetric in general.
pub fn star_ricci(a: &FrameOperator, space: &AmbientSpace) -> FrameOperator {
    let phi = FrameOperator::phi();
    let phi_a = phi.compose(a);
    phi.compose(&phi).scale(space.c()).add(&phi_a.compose(&phi_a)).scale(-1.0)
}

/// Closed form for Hopf data: `S*ξ = 0`, `S*W = (c+λν)W`, `S*φW = (c+λν)φW`.
pub fn star_ricci_hopf_closed_form(lambda: f64, nu: f64, c: f64) -> FrameOperator {
    let s = c + lambda * nu;
    FrameOperator::diagonal(s, s, 0.0)
}

/// Closed form for non-Hopf data:
/// `S*ξ = βμU - βδφU`, `S*U = (c+γμ-δ²)U`, `S*φU = (c+γμ-δ²)φU`.
pub fn star_ricci_nonhopf_closed_form(d: &NonHopfFrameData, c: f64) -> FrameOperator {
    let s = c + d.gamma * d.mu - d.delta * d.delta;
    FrameOperator::from_columns([
        FrameVector::new(s, 0.0, 0.0),
        FrameVector::new(0.0, s, 0.0),
        FrameVector::new(d.beta * d.mu, -d.beta * d.delta, 0.0),
    ])
}

/// `lX = R(X, ξ)ξ`, evaluated through the Gauss equation.
pub fn structure_jacobi(a: &FrameOperator, space: &AmbientSpace) -> FrameOperator {
    let r = riemann(a, space);
    let xi = FrameVector::XI;
    FrameOperator::from_columns(std::array::from_fn(|k| r.apply(&FrameVector::basis(k), &xi, &xi)))
}

/// `lX = c/4 (X - η(X)ξ) + αAX - g(AX, ξ)Aξ` with `α = g(Aξ, ξ)`, assembled
/// directly from `A` without the curvature tensor.
pub fn structure_jacobi_closed_form(a: &FrameOperator, space: &AmbientSpace) -> FrameOperator {
    let a_xi = a.apply(&FrameVector::XI);
    let alpha = a_xi.eta();
    let mut outer = FrameOperator::ZERO;
    for i in 0..DIM {
        for j in 0..DIM {
            outer.entries[i][j] = a_xi.0[i] * a_xi.0[j];
        }
    }
    let horizontal = FrameOperator::identity().subtract(&FrameOperator::eta_xi());
    horizontal.scale(0.25 * space.c()).add(&a.scale(alpha)).subtract(&outer)
}

/// `l = diag(c/4 + αλ, c/4 + αν, 0)` for a Hopf point.
pub fn structure_jacobi_hopf(m: &HopfModel) -> FrameOperator {
    let q = 0.25 * m.space().c();
    FrameOperator::diagonal(q + m.alpha() * m.lambda(), q + m.alpha() * m.nu(), 0.0)
}

/// `lU = (c/4 + αγ - β²)U + αδφU`, `lφU = αδU + (c/4 + αμ)φU`, `lξ = 0`.
pub fn structure_jacobi_nonhopf(d: &NonHopfFrameData, c: f64) -> FrameOperator {
    let q = 0.25 * c;
    let off = d.alpha * d.delta;
    FrameOperator::from_rows([
        [q + d.alpha * d.gamma - d.beta * d.beta, off, 0.0],
        [off, q + d.alpha * d.mu, 0.0],
        [0.0, 0.0, 0.0],
    ])
}
