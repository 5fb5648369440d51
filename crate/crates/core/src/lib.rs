//! Sphericity of solvable subgroups `H = S ⋉ N` of a simply connected
//! semisimple group and the free generators of their extended weight
//! semigroups, with brute-force representation-theoretic oracles.

#![allow(clippy::needless_range_loop)]

pub mod analysis;
pub mod chevalley;
pub mod config;
pub mod error;
pub mod linalg;
pub mod oracle;
pub mod presets;
pub mod report;
pub mod rootsys;
pub mod sample;
pub mod semigroup;
pub mod subgroup;

pub use error::{Error, Result};
