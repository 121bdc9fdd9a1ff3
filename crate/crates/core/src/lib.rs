//! Toeplitz graphs `T_n<t_1, ..., t_k>`: construction, closed-form
//! classification of claw-freeness and line-graph membership, and brute-force
//! oracles that certify those rules over parameter sweeps.

pub mod bitset;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod theorems;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{reflect, Claw, Graph, ToeplitzParams};
pub use oracle::{Oracle, OracleLimits};
