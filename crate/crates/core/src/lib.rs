//! Finite permutation groups with formation-theoretic subgroup predicates.

mod bsgs;
pub mod catalog;
pub mod classify;
pub mod cli;
pub mod config;
pub mod construct;
pub mod error;
pub mod example864;
pub mod formations;
pub mod group;
pub mod io;
pub mod iso;
pub mod lattice;
pub mod perm;
mod section;
pub mod subgroup;
pub mod table;
pub mod verify;

pub use classify::{ChainWitness, SubgroupClassification};
pub use config::Config;
pub use error::{Error, Result};
pub use formations::{Formation, FormationFlags};
pub use group::Group;
pub use perm::Permutation;
pub use subgroup::{Quotient, Subgroup};
