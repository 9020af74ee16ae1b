//! Exact engine for braid group actions on a categorified left cell module.
//!
//! For an irreducible Coxeter system `(W, S)` this crate builds the left cell
//! of unique-reduced-expression elements with a fixed right descent, lets the
//! elementary Rouquier complexes act on bounded complexes over the
//! zigzag-truncated cell category, and reads the Garside normal form of a
//! positive braid back off the perverse filtration and its anchors. Everything
//! is cross-checked against an independent combinatorial Garside normal form
//! and against the Hecke-algebra action on the decategorified cell module.
//!
//! The main pieces:
//!
//! - [`ring`]: exact integer Laurent polynomials in `v` with the bar involution.
//! - [`coxeter`]: canonical words, descents, Bruhat order, enumeration.
//! - [`hecke`]: standard/KL bases, mu values, graded hom ranks, cell actions.
//! - [`braid`]: positive braid words and greedy Garside normal form, plus a
//!   brute-force rewriting oracle.
//! - [`cellgraph`]: the cell tree with its coloring.
//! - [`zigzag`]: complexes over the truncated cell category, the elementary
//!   Rouquier actions, Gaussian-elimination minimization, fingerprints and the
//!   dihedral wave.
//! - [`perverse`]: diagonal filtration, perverse cohomology, anchors.
//! - [`recovery`]: normal-form recovery from the categorical action alone.
//! - [`decat`]: Grothendieck-level cross-checks and Burau matrices.
//! - [`cli`]: the command-line front end used by the `braidcell` binary.
//!
//! See the crate's `examples/` directory for one runnable walkthrough per
//! capability, and `tests/acceptance.rs` for the full verification suite.

pub mod braid;
pub mod cellgraph;
pub mod cli;
pub mod coxeter;
pub mod decat;
pub mod error;
pub mod hecke;
pub mod perverse;
pub mod recovery;
pub mod ring;
pub mod sampling;
pub mod zigzag;

pub use braid::{NormalForm, PositiveWord};
pub use cellgraph::CellGraph;
pub use coxeter::{CoxeterMatrix, CoxeterSystem, Elt, Order};
pub use error::{Error, Result};
pub use hecke::{CellVector, Hecke, HeckeElt};
pub use ring::LaurentPoly;
pub use zigzag::{MorKind, ZComplex, ZMorphism, ZObject};
