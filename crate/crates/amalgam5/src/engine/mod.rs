//! Finite group machinery: BFS closures, presentation checking, orbits on
//! projective points, permutation images, elementary-abelian search, and a
//! matrix-group Schreier–Sims with a randomized-then-certified order strategy.

use num_bigint::BigUint;
use thiserror::Error;

pub mod abelian;
pub mod closure;
pub mod group;
pub mod orbits;
pub mod order;
pub mod perm;
pub mod presentation;
pub mod sims;

pub use abelian::elementary_abelian_2_rank;
pub use closure::{bfs_closure, ClosureGroup, DEFAULT_EXACT_CAP, DEFAULT_FIELD_CAP};
pub use group::{ExactGroup, GroupOps, MatGroup};
pub use orbits::{orbit_partition, perm_image, projective_point_count, ProjectiveSpace};
pub use order::{group_order_formula, Family, GroupOrderTarget};
pub use perm::PermGroup;
pub use presentation::{verify_presentation_gl23, PresentationReport};
pub use sims::{matrix_group_order, DomainKind, OrderCertificate, OrderResult, SimsOptions, StabilizerChain, Strategy};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("closure exceeds cap {cap}; group is larger than expected or infinite")]
    ClosureExceedsCap { cap: usize },
    #[error("generator is not a bijection on the domain")]
    NotABijection,
    #[error("orbit is not invariant under a generator (escapes at point {point})")]
    OrbitNotInvariant { point: u64 },
    #[error("domain needs ~{needed} bytes, over the {budget}-byte budget")]
    DomainTooLarge { needed: u128, budget: u64 },
    #[error("order computation inconclusive at lower bound {lower_bound}: {reason}")]
    Inconclusive {
        lower_bound: BigUint,
        reason: String,
    },
    #[error("generator matrix is singular")]
    SingularGenerator,
}
