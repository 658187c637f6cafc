//! Warping degrees of knot diagrams, unknotting of positive braid closures,
//! and verification of a table of knots against both.
//!
//! Modules, roughly in dependency order:
//!
//! * [`codes`]: DT and Gauss codes, conversions, reducedness, canonical forms.
//! * [`warp`]: the roller-coaster traversal and minimal warping degree.
//! * [`braid`]: positive braid words, their closures and the bigon and
//!   strand-removal reductions.
//! * [`embed`]: planar diagrams and realization of DT codes.
//! * [`poly`], [`invariants`]: Kauffman bracket, Jones polynomial and
//!   identification against a reference table.
//! * [`catalog`]: the shipped knot table and its row checks.
//! * [`search`]: enumeration of reduced alternating diagrams.

pub mod braid;
pub mod catalog;
pub mod codes;
pub mod embed;
pub mod invariants;
pub mod poly;
pub mod search;
pub mod warp;

pub use braid::{BraidWord, Letter};
pub use codes::{Basepoint, DTCode, Direction, GaussCode, Passage, Role};
pub use embed::PlanarDiagram;
pub use poly::LaurentPolynomial;
pub use warp::{min_warp, warp_from, WarpResult};
