//! Exact arithmetic for finitely generated abelian groups in invariant
//! factor form, subgroup enumeration, and the decision procedures for
//! minimal actions on finite disjoint unions of circles.

mod catalog;
mod decide;
mod group;
mod subgroup;

pub use catalog::{decide_catalog, CatalogDecision, CatalogGroup};
pub use decide::{
    decide_effective, decide_non_effective, embeds_densely_in_circle, ExtensionCertificate,
    NonEffectiveCertificate,
};
pub use group::{FgAbelianGroup, GroupElement};
pub use subgroup::{
    index_subgroups, quotient_by, structure_of_subgroup, subgroup_from_columns, Index,
    SubgroupWitness, ENUMERATION_BOUND,
};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("invariant factors must be >= 2 and form a divisibility chain, got {0:?}")]
    InvalidInvariantFactors(Vec<crate::matrix::Int>),
    #[error("element has wrong shape for this group")]
    ShapeMismatch,
    #[error("subgroup enumeration would visit {candidates} candidates (bound {bound})")]
    ResourceExceeded { candidates: u128, bound: u128 },
    #[error("operation requires a finite group")]
    NotFinite,
    #[error("witness columns do not live in the ambient lattice of this group")]
    AmbientMismatch,
    #[error("catalog error: {0}")]
    Catalog(String),
}
