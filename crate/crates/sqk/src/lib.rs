//! Finite symmetric quandles and their invariants.
//!
//! A *quandle* is a set with a self-distributive, right-invertible, idempotent
//! binary operation; a *symmetric quandle* carries in addition a good
//! involution `rho`. This crate provides:
//!
//! - construction and axiom verification of finite quandles, good involutions
//!   and their enumeration ([`quandle`]);
//! - the associated groups of a (symmetric) quandle, abelianized exactly via
//!   Smith normal form, and verified actions on finite sets ([`group`],
//!   [`snf`]);
//! - the chain complexes of a symmetric quandle acting on a set, the
//!   degenerate subcomplexes, exact homology of the four quotient variants,
//!   and cocycle verification/evaluation ([`chain`], [`homology`],
//!   [`cocycle`]);
//! - PD-code parsing, planar diagram construction and coloring enumeration
//!   for link diagrams ([`pd`], [`diagram`], [`coloring`]);
//! - weight cycles, the cocycle invariants `Phi_theta` of links, and
//!   chain-level evaluation and triple-point bounds for surface-links
//!   ([`invariant`], [`surface`]);
//! - text file formats for all of the above ([`io`]) and a library of
//!   standard quandles and cocycles from the literature ([`fixtures`]).
//!
//! All arithmetic is exact: chain coefficients and invariant factors are
//! arbitrary-precision integers, and values mod m are least nonnegative
//! residues. Every value is immutable after construction and every operation
//! is a pure function of its inputs.

pub mod chain;
pub mod cocycle;
pub mod coloring;
pub mod diagram;
pub mod error;
pub mod fixtures;
pub mod group;
pub mod homology;
pub mod invariant;
pub mod io;
pub mod pd;
pub mod quandle;
pub mod snf;
pub mod surface;

pub use chain::{Chain, Tuple};
pub use cocycle::{CoefficientGroup, Cocycle};
pub use coloring::{Coloring, OrientationChoice};
pub use diagram::Diagram;
pub use error::Error;
pub use group::{AbelianGroupDescriptor, GroupPresentation, Word, XSetAction};
pub use homology::{ComplexVariant, HomologyResult};
pub use invariant::InvariantMultiset;
pub use pd::PdCode;
pub use quandle::{FiniteGroupTable, FiniteQuandle, Involution, SymmetricQuandle};

/// Default cap on the number of basis tuples a homology or cocycle
/// computation may enumerate. Overridable per call; the CLI also honors the
/// `SQK_SIZE_CAP` environment variable.
pub const DEFAULT_SIZE_CAP: usize = 200_000;
