//! Pointwise linear algebra on the tangent frame `(e1, e2 = φe1, ξ)`.
//!
//! Every tangent vector is stored by its three coefficients in this ordered
//! orthonormal frame, and every (1,1)-tensor as a 3×3 matrix whose column `j`
//! is the image of frame vector `j`. With that convention the metric is the
//! Euclidean dot product, `η` is the third coordinate and `φ` is a fixed
//! integer matrix, so every almost-contact identity becomes a matrix identity.

use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// Default absolute tolerance for frame identity checks.
pub const IDENTITY_TOL: f64 = 1e-9;

/// Number of frame directions.
pub const DIM: usize = 3;

/// Index of a frame direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Direction {
    /// `e1` (`U` for non-Hopf data, `W` for Hopf data).
    E1,
    /// `e2 = φe1`.
    E2,
    /// The structure vector `ξ`.
    Xi,
}

impl Direction {
    pub const ALL: [Direction; 3] = [Direction::E1, Direction::E2, Direction::Xi];

    pub fn index(self) -> usize {
        match self {
            Direction::E1 => 0,
            Direction::E2 => 1,
            Direction::Xi => 2,
        }
    }

    pub fn basis(self) -> FrameVector {
        FrameVector::basis(self.index())
    }

    pub fn label(self) -> &'static str {
        match self {
            Direction::E1 => "e1",
            Direction::E2 => "e2",
            Direction::Xi => "xi",
        }
    }
}

/// A tangent vector given by its coefficients in `(e1, e2, ξ)`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct FrameVector(pub [f64; DIM]);

impl FrameVector {
    pub const ZERO: FrameVector = FrameVector([0.0; DIM]);
    pub const E1: FrameVector = FrameVector([1.0, 0.0, 0.0]);
    pub const E2: FrameVector = FrameVector([0.0, 1.0, 0.0]);
    pub const XI: FrameVector = FrameVector([0.0, 0.0, 1.0]);

    pub const fn new(e1: f64, e2: f64, xi: f64) -> Self {
        FrameVector([e1, e2, xi])
    }

    pub fn basis(i: usize) -> Self {
        let mut v = [0.0; DIM];
        v[i] = 1.0;
        FrameVector(v)
    }

    /// The metric `g(self, other)`.
    pub fn dot(&self, other: &FrameVector) -> f64 {
        self.0.iter().zip(other.0.iter()).map(|(a, b)| a * b).sum()
    }

    /// The contact form `η(X) = g(X, ξ)`.
    pub fn eta(&self) -> f64 {
        self.0[2]
    }

    pub fn scale(&self, s: f64) -> Self {
        FrameVector(self.0.map(|x| x * s))
    }

    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }

    /// Largest absolute coefficient.
    pub fn max_abs(&self) -> f64 {
        self.0.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    pub fn component(&self, d: Direction) -> f64 {
        self.0[d.index()]
    }
}

impl Add for FrameVector {
    type Output = FrameVector;
    fn add(self, rhs: FrameVector) -> FrameVector {
        FrameVector(std::array::from_fn(|i| self.0[i] + rhs.0[i]))
    }
}

impl Sub for FrameVector {
    type Output = FrameVector;
    fn sub(self, rhs: FrameVector) -> FrameVector {
        FrameVector(std::array::from_fn(|i| self.0[i] - rhs.0[i]))
    }
}

impl Neg for FrameVector {
    type Output = FrameVector;
    fn neg(self) -> FrameVector {
        self.scale(-1.0)
    }
}

impl Mul<FrameVector> for f64 {
    type Output = FrameVector;
    fn mul(self, rhs: FrameVector) -> FrameVector {
        rhs.scale(self)
    }
}

/// A (1,1)-tensor at a point, as a 3×3 matrix in the frame.
///
/// `entries[i][j]` is the `e_i`-coefficient of the image of `e_j`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct FrameOperator {
    pub entries: [[f64; DIM]; DIM],
}

impl FrameOperator {
    pub const ZERO: FrameOperator = FrameOperator { entries: [[0.0; DIM]; DIM] };

    pub fn identity() -> Self {
        Self::diagonal(1.0, 1.0, 1.0)
    }

    pub fn diagonal(d1: f64, d2: f64, d3: f64) -> Self {
        FrameOperator { entries: [[d1, 0.0, 0.0], [0.0, d2, 0.0], [0.0, 0.0, d3]] }
    }

    pub fn from_rows(entries: [[f64; DIM]; DIM]) -> Self {
        FrameOperator { entries }
    }

    /// Builds the operator sending `e1, e2, ξ` to the given images.
    pub fn from_columns(images: [FrameVector; DIM]) -> Self {
        let mut entries = [[0.0; DIM]; DIM];
        for (j, col) in images.iter().enumerate() {
            for (i, row) in entries.iter_mut().enumerate() {
                row[j] = col.0[i];
            }
        }
        FrameOperator { entries }
    }

    /// The structure tensor: `e1 ↦ e2`, `e2 ↦ -e1`, `ξ ↦ 0`.
    pub fn phi() -> Self {
        Self::from_rows([[0.0, -1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 0.0]])
    }

    /// `η ⊗ ξ`, the projection onto the structure direction.
    pub fn eta_xi() -> Self {
        Self::diagonal(0.0, 0.0, 1.0)
    }

    pub fn column(&self, j: usize) -> FrameVector {
        FrameVector(std::array::from_fn(|i| self.entries[i][j]))
    }

    pub fn apply(&self, x: &FrameVector) -> FrameVector {
        FrameVector(std::array::from_fn(|i| (0..DIM).map(|j| self.entries[i][j] * x.0[j]).sum()))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &FrameOperator) -> FrameOperator {
        let mut entries = [[0.0; DIM]; DIM];
        for (i, row) in entries.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                *e = (0..DIM).map(|k| self.entries[i][k] * other.entries[k][j]).sum();
            }
        }
        FrameOperator { entries }
    }

    pub fn add(&self, other: &FrameOperator) -> FrameOperator {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn subtract(&self, other: &FrameOperator) -> FrameOperator {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, s: f64) -> FrameOperator {
        FrameOperator { entries: self.entries.map(|row| row.map(|x| x * s)) }
    }

    pub fn transpose(&self) -> FrameOperator {
        FrameOperator { entries: std::array::from_fn(|i| std::array::from_fn(|j| self.entries[j][i])) }
    }

    /// `self ∘ other - other ∘ self`.
    pub fn commutator(&self, other: &FrameOperator) -> FrameOperator {
        self.compose(other).subtract(&other.compose(self))
    }

    pub fn trace(&self) -> f64 {
        (0..DIM).map(|i| self.entries[i][i]).sum()
    }

    /// Max absolute entry; the norm used for residual thresholds.
    pub fn operator_norm(&self) -> f64 {
        self.entries.iter().flatten().fold(0.0, |m, x| m.max(x.abs()))
    }

    /// Whether `g(AX, Y) = g(X, AY)` for all frame pairs, within `tol`.
    pub fn is_symmetric(&self, tol: f64) -> bool {
        self.subtract(&self.transpose()).operator_norm() <= tol
    }

    fn zip_with(&self, other: &FrameOperator, f: impl Fn(f64, f64) -> f64) -> FrameOperator {
        FrameOperator {
            entries: std::array::from_fn(|i| std::array::from_fn(|j| f(self.entries[i][j], other.entries[i][j]))),
        }
    }
}

impl Mul for FrameOperator {
    type Output = FrameOperator;
    fn mul(self, rhs: FrameOperator) -> FrameOperator {
        self.compose(&rhs)
    }
}

impl Mul<FrameVector> for FrameOperator {
    type Output = FrameVector;
    fn mul(self, rhs: FrameVector) -> FrameVector {
        self.apply(&rhs)
    }
}

/// The structure tensor `φ` of the frame.
pub fn phi_operator() -> FrameOperator {
    FrameOperator::phi()
}

/// `(X ∧ Y)Z = g(Y,Z)X - g(X,Z)Y`.
pub fn wedge(x: &FrameVector, y: &FrameVector, z: &FrameVector) -> FrameVector {
    x.scale(y.dot(z)) - y.scale(x.dot(z))
}
