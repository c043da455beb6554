//! Decision procedures, explicit constructions, and numerical classification
//! for minimal actions of abelian (semi)groups on finite disjoint unions of
//! circles.
//!
//! The crate has four layers:
//!
//! - [`abelian`]: exact arithmetic for finitely generated abelian groups
//!   (Smith/Hermite normal forms, subgroup enumeration) and the algebraic
//!   decision procedures for when a group admits a minimal action on a
//!   given number of circles.
//! - [`circle`]: exact arithmetic in R/Z with symbolic irrationals.
//! - [`action`]: symmetric 2-cocycles over a finite quotient, the extension
//!   group they define, and the explicit piecewise-rotation action it
//!   induces on `K x S^1`, with freeness and minimality checks.
//! - [`dynamics`]: piecewise-linear maps on unions of circles and arcs,
//!   orbit exploration, periodic point search via interval covering, a
//!   Denjoy-style blown-up rotation, and the minimal-set trichotomy
//!   classifier (finite / circles / Cantor-on-arc).

pub mod abelian;
pub mod action;
pub mod circle;
pub mod config;
pub mod dynamics;
pub mod matrix;

pub use abelian::{FgAbelianGroup, GroupElement};
pub use circle::{IrrationalBasis, RotationNumber};
