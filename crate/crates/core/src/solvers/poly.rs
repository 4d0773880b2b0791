//! Polynomial-time deletion algorithms.

use crate::error::{Error, Result};
use crate::instance::{GcdiInstance, SolverTag, Verdict};
use crate::rules::{qualified, RuleSpec};
use crate::subset::Subset;

/// Deletion control for a consent rule `(s, 2)`.
///
/// A self-disqualifying target survives only if it is its own sole
/// disqualifier, so every outsider disqualifying it must go. Deletions never
/// help a self-qualifying target. The forced set is therefore the only
/// candidate: it answers yes iff it fits the budget and works.
pub fn solve_gcdi_consent_s2(inst: &GcdiInstance) -> Result<Verdict> {
    let tag = SolverTag::PolyConsentDeletion;
    match inst.rule() {
        RuleSpec::Consent { t: 2, .. } => {}
        other => {
            return Err(Error::strategy(format!(
                "poly-thm3 needs a consent rule with t = 2, got `{other}`"
            )))
        }
    }
    if inst.already_qualified() {
        return Ok(Verdict::already_qualified(tag));
    }
    let profile = inst.profile();
    let outsiders = inst.pool();
    let mut forced = Subset::empty(profile.n());
    for a in inst.target().iter().filter(|&a| !profile.self_qualifies(a)) {
        let dissenters = &outsiders - profile.qualifiers_of(a);
        forced.union_with(&dissenters);
    }
    if forced.len() <= inst.budget() && inst.accepts_unchecked(&forced) {
        Ok(Verdict::yes(forced, tag))
    } else {
        Ok(Verdict::no(tag))
    }
}

/// Deletion control for the consensus-start rule.
///
/// If any deletion works, deleting exactly the disqualifiers of one member of
/// the resulting consensus seed also works. So try `D(a)` for every `a`, in
/// index order.
pub fn solve_gcdi_csr(inst: &GcdiInstance) -> Result<Verdict> {
    let tag = SolverTag::PolyCsrDeletion;
    if *inst.rule() != RuleSpec::Csr {
        return Err(Error::strategy(format!(
            "poly-thm8 needs the csr rule, got `{}`",
            inst.rule()
        )));
    }
    if inst.already_qualified() {
        return Ok(Verdict::already_qualified(tag));
    }
    let profile = inst.profile();
    for a in 0..profile.n() {
        let disqualifiers = profile.qualifiers_of(a).complement();
        if disqualifiers.len() > inst.budget() {
            continue;
        }
        let remaining = disqualifiers.complement();
        if inst
            .target()
            .is_subset(&qualified(profile, &RuleSpec::Csr, &remaining))
        {
            // S survives inside N \ D(a), so D(a) never touches S
            debug_assert!(disqualifiers.is_disjoint(inst.target()));
            return Ok(Verdict::yes(disqualifiers, tag));
        }
    }
    Ok(Verdict::no(tag))
}
