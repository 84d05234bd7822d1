//! Generalized quotients of finite permutation groups.
//!
//! Given a finite group `G` and an arbitrary subgroup `H` (normal or not), this crate builds the
//! left cosets of `H`, the blocks `aHbH` they induce, the co-membership relations on elements,
//! cosets and blocks, and the fixpoint set `S` obtained by repeatedly collecting block neighbours
//! of `H`. `S` always coincides with the normal closure of `H`, so the quotient by `H` extends to
//! nonnormal subgroups as `G / nc(H)`.
//!
//! Permutations act on the points `1..=n` and compose left to right: `p.compose(&q)` applies `p`
//! first, then `q`.
//!
//! ```
//! use nnq_core::{catalog_group, Permutation};
//!
//! let s3 = catalog_group("S3").unwrap();
//! let h = s3.subgroup_generated(&[Permutation::parse("(1,2)", Some(3)).unwrap()]).unwrap();
//! let report = nnq_core::verify_theorem(&h);
//! assert!(report.equal);
//! assert_eq!(report.nc.len(), 6);
//! ```
#![no_std]

extern crate alloc;

mod bits;
pub mod closure;
pub mod coset;
mod error;
pub mod group;
pub mod nested;
pub mod perm;
pub mod relations;

pub use closure::{
    generalized_quotient, minimal_normal_oracle, normal_closure, quotient_group, rho_lemma_check,
    verify_theorem, QuotientGroup, RhoLemmaReport, TheoremReport,
};
pub use coset::{Block, Coset, Partition, Side};
pub use error::{Error, ParseError, ParseErrorKind};
pub use group::{catalog_group, catalog_group_with_cap, FiniteGroup, Limits, Subgroup};
pub use nested::{build_nested_table, HCosetGroup, NcCosetGroup, NestedTable};
pub use perm::Permutation;
pub use relations::{
    psi_relation, psi_relation_with_representatives, rho_relation, s_chain, sim_partition, theta,
    theta_relation, transitivity_report, ChainTrace, Domain, SymmetricRelation, TransitivityReport,
};
