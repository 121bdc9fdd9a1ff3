//! Closed-form classification from the parameters alone. Each verdict names
//! the rule that produced it; the oracle is consulted only where no rule
//! applies, and never past its size bound.

mod catalogue;
mod claw_free;
mod components;
mod line;
mod offsets;
mod trace;

pub use catalogue::{just_above_last, near_double_family, near_double_gap, NearDoubleFamily};
pub use claw_free::{classify_claw_free, ClawFreeVerdict, ClawReason, ClawRule};
pub use components::{
    cycle_decomposition, decompose_cocoonery, decompose_gcd, CertificateFailure, Component,
    ComponentReport, CycleDecomposition, TargetShape,
};
pub use line::{
    classify_line_graph, multiset, ComponentKind, ComponentMultiset, LineGraphVerdict, LineRule,
};
pub use offsets::{
    arithmetic_closure, is_cocoonery, is_mutation, refute_by_offset_conditions, Closure,
    Progression, Refutation,
};
pub use trace::{Trace, TraceStep};

pub(crate) use claw_free::classify_claw_free_traced;
pub(crate) use line::classify_line_graph_traced;
