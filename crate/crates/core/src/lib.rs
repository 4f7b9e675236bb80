//! Finite-group analysis for Leinster groups: explicit group tables,
//! normal-subgroup enumeration, constructors for the standard families,
//! enumeration of groups of squarefree order, σ/τ reports, exact number
//! theory for the prime-variable equations and fraction bounds, and the claim
//! suites driven by the `verify` CLI.

pub mod constructors;
pub mod error;
pub mod group;
pub mod leinster;
pub mod numtheory;
pub mod squarefree;
pub mod verify;

pub use constructors::{build, perm_group, GroupSpec};
pub use error::{Error, Result};
pub use group::{
    direct_product, ConjClassPartition, ElementSet, GroupTable, Storage, CAYLEY_CACHE_LIMIT,
    DEFAULT_CAPACITY,
};
pub use leinster::{analyze, analyze_coprime_product, LeinsterReport};
pub use squarefree::{enumerate_squarefree, holder_count, realize, MetacyclicDescriptor};
