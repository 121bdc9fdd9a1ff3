//! Brute-force detectors over arbitrary small graphs.
//!
//! Everything here is exact and deterministic. These routines never consult
//! the closed-form rules in [`crate::theorems`]; they are the ground truth the
//! sweep harness certifies those rules against.

mod chordal;
mod claws;
mod cliques;
mod holes;
mod interval;
mod iso;
mod line;

pub use chordal::{Chordality, Hole};
pub use claws::{close_under_reflection, ClawSearch};
pub use iso::verify_bijection_isomorphism;
pub use line::{line_graph, KrauszPartition, LineGraphCertificate, RootGraph};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Environment variable overriding [`OracleLimits::max_order`].
pub const ORACLE_MAX_N_VAR: &str = "TOEPLITZ_ORACLE_MAX_N";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OracleLimits {
    /// Largest graph order accepted by the claw, clique, chordal, hole and
    /// interval oracles.
    pub max_order: usize,
    /// Largest number of maximal cliques the interval oracle will order.
    pub max_cliques: usize,
    /// Largest order accepted by the Krausz line-graph search.
    pub krausz_max_order: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_order: 512,
            max_cliques: 20,
            krausz_max_order: 64,
        }
    }
}

impl OracleLimits {
    /// Defaults, with `max_order` taken from `TOEPLITZ_ORACLE_MAX_N` when set
    /// to a positive integer.
    pub fn from_env() -> Self {
        let mut limits = OracleLimits::default();
        if let Some(n) = std::env::var(ORACLE_MAX_N_VAR)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .filter(|&n| n > 0)
        {
            limits.max_order = n;
        }
        limits
    }
}

/// Entry point for the brute-force detectors; carries the size limits.
#[derive(Debug, Clone, Copy, Default)]
pub struct Oracle {
    limits: OracleLimits,
}

impl Oracle {
    pub fn new(limits: OracleLimits) -> Self {
        Oracle { limits }
    }

    pub fn limits(&self) -> &OracleLimits {
        &self.limits
    }

    fn check_order(&self, g: &Graph) -> Result<()> {
        self.check_bound(g, self.limits.max_order)
    }

    fn check_bound(&self, g: &Graph, bound: usize) -> Result<()> {
        if g.order() > bound {
            Err(Error::GraphTooLarge {
                order: g.order(),
                bound,
            })
        } else {
            Ok(())
        }
    }
}
