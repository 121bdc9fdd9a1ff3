use serde::Serialize;

/// One rule consulted during dispatch.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub rule: String,
    pub premise: String,
    pub holds: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Trace {
    pub steps: Vec<TraceStep>,
}

impl Trace {
    /// Records a premise evaluation and passes its value through.
    pub(crate) fn check(&mut self, rule: &str, premise: &str, holds: bool) -> bool {
        self.steps.push(TraceStep {
            rule: rule.into(),
            premise: premise.into(),
            holds,
        });
        holds
    }
}
