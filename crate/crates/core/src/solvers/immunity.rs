use crate::instance::{ImmunityReason, Problem};
use crate::rules::RuleSpec;

/// Returns why `rule` can never be controlled by `problem`, if it can't.
pub fn immunity_reason(problem: Problem, rule: &RuleSpec) -> Option<ImmunityReason> {
    match (*rule, problem) {
        (RuleSpec::Consent { s: 1, t: 1 }, _) => Some(ImmunityReason::LiberalRule),
        (RuleSpec::Consent { t: 1, .. }, Problem::Gcdi | Problem::Gcpi) => {
            Some(ImmunityReason::UnitQuota)
        }
        (RuleSpec::Consent { s: 1, .. }, Problem::Gcai) => Some(ImmunityReason::UnitQuota),
        (RuleSpec::Lsr, Problem::Gcdi | Problem::Gcpi) => Some(ImmunityReason::LiberalStartPaths),
        _ => None,
    }
}

pub fn immunity_check(problem: Problem, rule: &RuleSpec) -> bool {
    immunity_reason(problem, rule).is_some()
}
