//! Exhaustive search. The reference oracle for every other solver and the
//! only decision procedure for problems without a better algorithm.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::instance::{ControlInstance, SolverTag, Verdict};
use crate::subset::Subset;

/// Default cap on the number of candidate witnesses: `2^22`.
pub const DEFAULT_LOG2_LIMIT: u32 = 22;

fn binomial(n: usize, r: usize) -> u128 {
    (0..r as u128).fold(1u128, |acc, i| acc.saturating_mul(n as u128 - i) / (i + 1))
}

/// Number of subsets of a `pool`-element set with at most `budget` members.
pub fn candidate_count(pool: usize, budget: usize) -> u128 {
    (0..=budget.min(pool)).fold(0u128, |acc, r| acc.saturating_add(binomial(pool, r)))
}

fn check_limit(count: u128, log2_limit: u32) -> Result<()> {
    let limit = 1u128 << log2_limit.min(120);
    if count > limit {
        return Err(Error::Resource {
            what: "brute-force enumeration",
            needed: format!("{count} candidates"),
            limit: format!("2^{log2_limit}"),
        });
    }
    Ok(())
}

/// Free pool, maximum number of pool members taken, and the individual
/// pinned into every candidate.
fn search_space(inst: &ControlInstance) -> (Subset, usize, Option<usize>) {
    match inst {
        ControlInstance::Gcai(i) => (i.pool(), i.budget(), None),
        ControlInstance::Gcdi(i) => (i.pool(), i.budget(), None),
        ControlInstance::Gcpi(i) => {
            let n = i.profile().n();
            let mut rest = Subset::full(n);
            rest.remove(0);
            (rest, n - 1, Some(0))
        }
    }
}

/// Smallest witness first, lexicographic among equal sizes.
///
/// Adding and deleting enumerate subsets of the legal pool. Partitioning
/// enumerates the side `U` that contains individual 0; the other side is
/// covered by symmetry.
pub fn solve_brute(inst: &ControlInstance, log2_limit: u32) -> Result<Verdict> {
    let tag = SolverTag::BruteForce;
    let n = inst.profile().n();
    let (pool, budget, anchor) = search_space(inst);
    check_limit(candidate_count(pool.len(), budget), log2_limit)?;
    if inst.already_qualified() {
        return Ok(Verdict::already_qualified(tag));
    }
    let members = pool.to_vec();
    for size in 0..=budget.min(members.len()) {
        for combo in members.iter().copied().combinations(size) {
            let mut candidate = Subset::empty(n);
            if let Some(a) = anchor {
                candidate.insert(a);
            }
            for m in combo {
                candidate.insert(m);
            }
            if inst.accepts_unchecked(&candidate) {
                return Ok(Verdict::yes(candidate, tag));
            }
        }
    }
    Ok(Verdict::no(tag))
}

/// Every witness of `inst`, in enumeration order. Partition witnesses are
/// reported with individual 0 on the `U` side.
pub fn all_witnesses(inst: &ControlInstance, log2_limit: u32) -> Result<Vec<Subset>> {
    let n = inst.profile().n();
    let (pool, budget, anchor) = search_space(inst);
    check_limit(candidate_count(pool.len(), budget), log2_limit)?;
    let members = pool.to_vec();
    let mut out = Vec::new();
    for size in 0..=budget.min(members.len()) {
        for combo in members.iter().copied().combinations(size) {
            let mut candidate = Subset::from_indices(n, combo)?;
            if let Some(a) = anchor {
                candidate.insert(a);
            }
            if inst.verify(&candidate)? {
                out.push(candidate);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::{GcaiInstance, GcpiInstance, Outcome};
    use crate::profile::Profile;
    use crate::rules::RuleSpec;

    fn set(n: usize, xs: &[usize]) -> Subset {
        Subset::from_indices(n, xs.iter().copied()).unwrap()
    }

    #[test]
    fn counts() {
        assert_eq!(candidate_count(4, 4), 16);
        assert_eq!(candidate_count(5, 2), 1 + 5 + 10);
        assert_eq!(candidate_count(3, 0), 1);
        assert_eq!(binomial(60, 30), 118264581564861424);
    }

    #[test]
    fn all_disqualify_partition() {
        for t in 2..=3u32 {
            let n = t as usize + 1;
            let p = Profile::from_fn(n, |_, _| false).unwrap();
            let inst =
                GcpiInstance::new(p, RuleSpec::consent(2, t).unwrap(), set(n, &[0])).unwrap();
            let v = solve_brute(&inst.into(), DEFAULT_LOG2_LIMIT).unwrap();
            assert_eq!(v.outcome, Outcome::Yes);
            assert_eq!(v.witness, Some(set(n, &[0])));
        }
    }

    #[test]
    fn zero_budget_strict_instance_is_no() {
        let p = Profile::from_fn(3, |i, j| i == j || i == 2).unwrap();
        let inst = GcaiInstance::new(
            p,
            RuleSpec::consent(2, 1).unwrap(),
            set(3, &[0]),
            set(3, &[0, 1]),
            0,
        )
        .unwrap();
        assert_eq!(
            solve_brute(&inst.into(), DEFAULT_LOG2_LIMIT)
                .unwrap()
                .outcome,
            Outcome::No
        );
    }

    #[test]
    fn limit_is_enforced() {
        let n = 30;
        let p = Profile::from_fn(n, |_, _| false).unwrap();
        let inst: ControlInstance =
            GcpiInstance::new(p, RuleSpec::consent(2, 2).unwrap(), set(n, &[0]))
                .unwrap()
                .into();
        let err = solve_brute(&inst, 10).unwrap_err();
        assert!(matches!(err, Error::Resource { .. }));
        assert!(err.to_string().contains("2^10"));
    }
}
