//! Exact computational group theory for Hall-subgroup criteria.
//!
//! Criteria that read only conjugacy-class data (or a character table) are
//! paired with brute-force oracles that search the group itself.

pub mod catalog;
pub mod chartab;
pub mod classes;
pub mod criteria;
pub mod error;
pub mod fpoly;
pub mod gf;
pub mod group;
pub mod groupfile;
pub mod lieorders;
pub mod numtheory;
pub mod perm;
pub mod stabchain;
pub mod structure;
pub mod subgroups;

pub use error::{Error, ParseErrorKind, Result};
pub use group::{ElementSet, Elements, PermutationGroup, Subgroup};
pub use perm::Permutation;
