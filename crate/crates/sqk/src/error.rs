//! Error types shared across the crate.

use crate::chain::Tuple;
use thiserror::Error;

/// Which quandle axiom a table violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuandleAxiom {
    /// Idempotence: `x ^ x = x`.
    Q1,
    /// Right translations are bijections.
    Q2,
    /// Self-distributivity: `(x^y)^z = (x^z)^(y^z)`.
    Q3,
}

impl std::fmt::Display for QuandleAxiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            QuandleAxiom::Q1 => write!(f, "Q1"),
            QuandleAxiom::Q2 => write!(f, "Q2"),
            QuandleAxiom::Q3 => write!(f, "Q3"),
        }
    }
}

/// Which of the two good-involution identities fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GoodnessIdentity {
    /// `rho(x^y) = rho(x)^y`
    Equivariance,
    /// `x^rho(y) = x^(y^-1)`
    InverseAction,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("axiom {axiom} violated at {witness:?}")]
    AxiomViolation {
        axiom: QuandleAxiom,
        witness: Vec<usize>,
    },
    #[error("table entry {value} out of range 0..{n}")]
    EntryOutOfRange { value: usize, n: usize },
    #[error("table is not square: row {row} has {len} entries, expected {n}")]
    RaggedTable { row: usize, len: usize, n: usize },
    #[error("map is not an involution: rho(rho({x})) = {image} != {x}")]
    NotInvolution { x: usize, image: usize },
    #[error("not a good involution: identity {identity:?} fails at (x, y) = ({x}, {y})")]
    NotGoodInvolution {
        identity: GoodnessIdentity,
        x: usize,
        y: usize,
    },
    #[error("quandle order {n} exceeds the involution enumeration cap {cap}")]
    OrderCapExceeded { n: usize, cap: usize },
    #[error("group table violates {law} at {witness:?}")]
    GroupLawViolation { law: String, witness: Vec<usize> },
    #[error("column {x} of the action table is not a permutation")]
    NotPermutation { x: usize },
    #[error("action violates y.(x1^x2) = y.(x2^-1 x1 x2) at (y, x1, x2) = ({y}, {x1}, {x2})")]
    RelationViolation { y: usize, x1: usize, x2: usize },
    #[error("action violates y.rho(x) = y.(x^-1) at (y, x) = ({y}, {x})")]
    RhoViolation { y: usize, x: usize },
    #[error("degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("basis of {needed} tuples exceeds the size cap {cap}")]
    SizeCapExceeded { needed: usize, cap: usize },
    #[error("cocycle fails {condition} at tuple {tuple}")]
    CocycleViolation { condition: String, tuple: Tuple },
    #[error("{0}")]
    Parse(String),
    #[error("edge label {label} appears {count} times, expected exactly 2")]
    LabelCount { label: usize, count: usize },
    #[error("edge orientations are inconsistent with the label convention in component containing edge {label}")]
    OrientationInconsistency { label: usize },
    #[error("diagram is not planar: component with {vertices} crossings and {edges} edges traced {faces} faces")]
    NonPlanar {
        vertices: usize,
        edges: usize,
        faces: usize,
    },
    #[error("face index {index} out of range (diagram has {faces} faces)")]
    InvalidFaceIndex { index: usize, faces: usize },
    #[error("coloring group {id} is not a cycle: boundary {residual} is not supported by the degenerate subgroups")]
    NotACycle { id: String, residual: String },
    #[error("triple point bound requires integer cocycle values with |theta| <= 1; entry at {tuple} has value {value}")]
    BoundPreconditionViolated { tuple: Tuple, value: String },
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
