//! Integer-feasibility formulation for consent rules, parameterised by `|S|`.
//!
//! Whether a target `a` is qualified under a consent rule depends only on how
//! many members of the final society qualify or disqualify `a`. Individuals
//! that hold the same opinions about every target are therefore
//! interchangeable, so the search only has to choose *how many* members of
//! each opinion group to add (or delete). That gives one integer variable per
//! realised opinion pattern, at most `2^|S|` of them.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::ilp::{feasible, FeasibilitySystem, Relation};
use crate::instance::{GcaiInstance, GcdiInstance, SolverTag, Verdict};
use crate::profile::Profile;
use crate::rules::RuleSpec;
use crate::subset::Subset;

/// Pool members sharing one opinion pattern over the targets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpinionGroup {
    /// `pattern[i]` is the shared opinion about the `i`-th target (ascending
    /// index order).
    pub pattern: Vec<bool>,
    /// Members in ascending index order.
    pub members: Vec<usize>,
}

/// A formulation: variable `i` counts the members taken from `groups[i]`.
#[derive(Debug, Clone)]
pub struct GroupedSystem {
    pub system: FeasibilitySystem,
    pub groups: Vec<OpinionGroup>,
}

impl GroupedSystem {
    /// The lowest-indexed `counts[i]` members of every group.
    pub fn pick(&self, n: usize, counts: &[i64]) -> Subset {
        let mut out = Subset::empty(n);
        for (group, &count) in self.groups.iter().zip(counts) {
            for &m in group.members.iter().take(count as usize) {
                out.insert(m);
            }
        }
        out
    }
}

fn quotas(rule: &RuleSpec, what: &str) -> Result<(i64, i64)> {
    match *rule {
        RuleSpec::Consent { s, t } => Ok((s as i64, t as i64)),
        other => Err(Error::strategy(format!(
            "fpt-ilp solves {what} for consent rules only, got `{other}`"
        ))),
    }
}

/// Groups the pool by opinion pattern, in lexicographic pattern order.
pub fn opinion_groups(profile: &Profile, targets: &Subset, pool: &Subset) -> Vec<OpinionGroup> {
    let order = targets.to_vec();
    let mut by_pattern: BTreeMap<Vec<bool>, Vec<usize>> = BTreeMap::new();
    for m in pool.iter() {
        let pattern = order.iter().map(|&a| profile.phi(m, a)).collect();
        by_pattern.entry(pattern).or_default().push(m);
    }
    by_pattern
        .into_iter()
        .map(|(pattern, members)| OpinionGroup { pattern, members })
        .collect()
}

fn grouped_skeleton(groups: Vec<OpinionGroup>, budget: usize) -> Result<GroupedSystem> {
    let mut system = FeasibilitySystem::new();
    for g in &groups {
        system.add_var(0, g.members.len() as i64)?;
    }
    let budget = i64::try_from(budget).map_err(|_| Error::input("budget too large"))?;
    system.add_constraint(vec![1; groups.len()], Relation::Le, budget)?;
    Ok(GroupedSystem { system, groups })
}

/// Formulation for adding: variables count members added from `N \ T`.
pub fn gcai_system(inst: &GcaiInstance) -> Result<GroupedSystem> {
    let (s, t) = quotas(inst.rule(), "adding")?;
    let profile = inst.profile();
    let groups = opinion_groups(profile, inst.target(), &inst.pool());
    let mut gs = grouped_skeleton(groups, inst.budget())?;
    let society = inst.society();
    for (i, a) in inst.target().iter().enumerate() {
        let support = profile.qualifiers_of(a).intersection_len(society) as i64;
        let opposition = society.len() as i64 - support;
        if profile.self_qualifies(a) {
            let coeffs = gs.groups.iter().map(|g| g.pattern[i] as i64).collect();
            gs.system
                .add_constraint(coeffs, Relation::Ge, s - support)?;
        } else {
            let coeffs = gs.groups.iter().map(|g| !g.pattern[i] as i64).collect();
            gs.system
                .add_constraint(coeffs, Relation::Le, t - 1 - opposition)?;
        }
    }
    Ok(gs)
}

/// Formulation for deleting: variables count members deleted from `N \ S`.
pub fn gcdi_system(inst: &GcdiInstance) -> Result<GroupedSystem> {
    let (s, t) = quotas(inst.rule(), "deleting")?;
    let profile = inst.profile();
    let groups = opinion_groups(profile, inst.target(), &inst.pool());
    let mut gs = grouped_skeleton(groups, inst.budget())?;
    let n = profile.n() as i64;
    for (i, a) in inst.target().iter().enumerate() {
        let support = profile.qualifiers_of(a).len() as i64;
        let opposition = n - support;
        if profile.self_qualifies(a) {
            let coeffs = gs.groups.iter().map(|g| -(g.pattern[i] as i64)).collect();
            gs.system
                .add_constraint(coeffs, Relation::Ge, s - support)?;
        } else {
            let coeffs = gs.groups.iter().map(|g| -(!g.pattern[i] as i64)).collect();
            gs.system
                .add_constraint(coeffs, Relation::Le, t - 1 - opposition)?;
        }
    }
    Ok(gs)
}

pub fn solve_fpt_gcai(inst: &GcaiInstance) -> Result<Verdict> {
    let gs = gcai_system(inst)?;
    if inst.already_qualified() {
        return Ok(Verdict::already_qualified(SolverTag::FptIlp));
    }
    finish(&gs, inst.profile().n(), |u| inst.accepts_unchecked(u))
}

pub fn solve_fpt_gcdi(inst: &GcdiInstance) -> Result<Verdict> {
    let gs = gcdi_system(inst)?;
    if inst.already_qualified() {
        return Ok(Verdict::already_qualified(SolverTag::FptIlp));
    }
    finish(&gs, inst.profile().n(), |u| inst.accepts_unchecked(u))
}

fn finish(gs: &GroupedSystem, n: usize, accepts: impl Fn(&Subset) -> bool) -> Result<Verdict> {
    match feasible(&gs.system)? {
        None => Ok(Verdict::no(SolverTag::FptIlp)),
        Some(assignment) => {
            let witness = gs.pick(n, &assignment.values);
            if !accepts(&witness) {
                return Err(Error::Verification(format!(
                    "fpt-ilp witness {witness} failed verification"
                )));
            }
            Ok(Verdict::yes(witness, SolverTag::FptIlp))
        }
    }
}
