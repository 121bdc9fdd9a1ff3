use std::collections::BTreeSet;

use crate::oracle::OracleLimits;

use super::spec::{Check, OffsetFamily, OrderForm, OrderRule, Region, RelativeBound, SweepSpec};

/// Oracle limits for sweeps. The interval search needs far more than the
/// default clique bound: a triangle-free graph on 30 vertices already has
/// dozens of maximal cliques.
pub fn sweep_oracle_limits() -> OracleLimits {
    OracleLimits {
        max_cliques: 4096,
        ..OracleLimits::from_env()
    }
}

fn spec(
    name: &str,
    k: (usize, usize),
    offsets: OffsetFamily,
    max: usize,
    relative: Option<RelativeBound>,
    form: OrderForm,
    checks: &[Check],
) -> SweepSpec {
    SweepSpec {
        name: name.into(),
        region: Some(Region {
            k_min: k.0,
            k_max: k.1,
            offsets,
            order: OrderRule {
                max,
                relative,
                form,
            },
        }),
        checks: checks.iter().copied().collect(),
    }
}

/// The sweeps behind the acceptance criteria, in criterion order.
pub fn acceptance_suite() -> Vec<SweepSpec> {
    use Check::*;
    use OffsetFamily::*;
    use OrderForm::{BeyondSum, NearDouble, Range, SumBoundary};
    vec![
        SweepSpec {
            name: "fibonacci".into(),
            region: None,
            checks: BTreeSet::from([Fibonacci]),
        },
        spec(
            "pairs",
            (2, 2),
            All { max_offset: 10 },
            40,
            Some(RelativeBound::SumOfLastTwo { factor: 2 }),
            Range,
            &[Claw],
        ),
        spec(
            "triples",
            (3, 3),
            All { max_offset: 10 },
            30,
            None,
            Range,
            &[Claw, MinimalOrder],
        ),
        spec(
            "triples-minimal-order",
            (3, 3),
            All { max_offset: 15 },
            30,
            None,
            OrderForm::MinimalOrder,
            &[MinimalOrder],
        ),
        spec(
            "catalogue",
            (3, 3),
            All { max_offset: 12 },
            30,
            None,
            NearDouble,
            &[Claw, Catalogue],
        ),
        spec(
            "equivalence",
            (2, 4),
            All { max_offset: 10 },
            30,
            None,
            BeyondSum,
            &[Equivalence],
        ),
        spec(
            "sum-boundary",
            (4, 5),
            All { max_offset: 29 },
            30,
            None,
            SumBoundary,
            &[Claw, Mutation],
        ),
        spec(
            "mutations",
            (4, 5),
            Mutations { max_step: 3 },
            30,
            None,
            Range,
            &[Mutation],
        ),
        spec(
            "cocoonery-components",
            (1, 4),
            Cocooneries { max_step: 5 },
            40,
            None,
            Range,
            &[Components, Clique],
        ),
        spec(
            "gcd-components",
            (1, 3),
            All { max_offset: 12 },
            40,
            None,
            Range,
            &[Components, Cycles],
        ),
        spec(
            "line-pairs",
            (2, 2),
            Cocooneries { max_step: 5 },
            64,
            Some(RelativeBound::StepMultiple {
                beyond_k: 3,
                plus: 3,
            }),
            Range,
            &[Line],
        ),
        spec(
            "line-larger",
            (3, 4),
            Cocooneries { max_step: 4 },
            64,
            Some(RelativeBound::StepMultiple {
                beyond_k: 2,
                plus: 0,
            }),
            Range,
            &[Line],
        ),
        spec(
            "line-paths",
            (1, 1),
            All { max_offset: 19 },
            20,
            None,
            Range,
            &[Line],
        ),
        spec(
            "oracle-consistency",
            (1, 10),
            All { max_offset: 10 },
            20,
            None,
            Range,
            &[Reflection, Chordal, Interval],
        ),
    ]
}
