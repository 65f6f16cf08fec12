//! Twisted Real representation theory of C2-graded finite groups and the
//! two dimensional unoriented open/closed topological field theory it
//! generates.
//!
//! The pipeline: a graded group (Ĝ, π) with a π-twisted 2-cocycle θ̂ and a
//! character λ ([`grp`], [`cohom`]) determines a twisted group algebra with
//! its center ([`talg`]), twisted irreducible characters with a duality
//! structure and Frobenius–Schur indicators ([`reps`]), and finally a full
//! structure algebra whose axioms and partition functions are checked and
//! evaluated numerically ([`tft`], [`bordism`]).

pub mod bordism;
pub mod cohom;
pub mod grp;
pub mod io;
pub mod linalg;
pub mod phase;
pub mod reps;
pub mod talg;
pub mod tft;

pub use cohom::{Domain, TwistedCocycle};
pub use grp::{FiniteGroup, GradedGroup, Preset, UCharacter};
pub use phase::Phase;

/// Default RNG seed, ASCII "DW2D".
pub const DEFAULT_SEED: u64 = 0x4457_3244;

/// Default numerical tolerance for algebra-element and axiom comparisons.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Default tolerance for residuals of the TFT axiom suites.
pub const AXIOM_TOL: f64 = 1e-8;
