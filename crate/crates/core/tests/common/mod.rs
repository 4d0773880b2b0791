//! Helpers shared by the integration tests and the acceptance suite:
//! clause-by-clause reference semantics and exhaustive source corpora.

#![allow(dead_code)]

use std::collections::BTreeSet;

use gi_core::reductions::{Literal, LrbdsInstance, RbdsInstance, Rx3cInstance, ThreeSatInstance};
use gi_core::solvers::{solve_brute, DEFAULT_LOG2_LIMIT};
use gi_core::{ControlInstance, Outcome, Profile, RuleSpec, Subset};
use itertools::Itertools;

/// Rule semantics written straight from the definitions, with plain
/// vectors and no bitsets.
pub fn naive_eval(p: &Profile, rule: &RuleSpec, society: &[usize]) -> BTreeSet<usize> {
    match *rule {
        RuleSpec::Consent { s, t } => society
            .iter()
            .copied()
            .filter(|&a| {
                let pro = society.iter().filter(|&&b| p.phi(b, a)).count();
                let con = society.len() - pro;
                if p.phi(a, a) {
                    pro >= s as usize
                } else {
                    con < t as usize
                }
            })
            .collect(),
        RuleSpec::Csr => rounds(p, society, |a| society.iter().all(|&b| p.phi(b, a))),
        RuleSpec::Lsr => rounds(p, society, |a| p.phi(a, a)),
    }
}

/// `K_0` from `start`, then `K_l = K_{l-1} ∪ {a : some member of K_{l-1}
/// qualifies a}` until nothing changes.
fn rounds(p: &Profile, society: &[usize], start: impl Fn(usize) -> bool) -> BTreeSet<usize> {
    let mut k: BTreeSet<usize> = society.iter().copied().filter(|&a| start(a)).collect();
    loop {
        let next: BTreeSet<usize> = society
            .iter()
            .copied()
            .filter(|&a| k.contains(&a) || k.iter().any(|&b| p.phi(b, a)))
            .collect();
        if next == k {
            return k;
        }
        k = next;
    }
}

/// Checks a witness against the problem definitions using [`naive_eval`]
/// only.
pub fn naive_accepts(inst: &ControlInstance, w: &Subset) -> bool {
    let p = inst.profile();
    let rule = inst.rule();
    let n = p.n();
    if w.universe() != n {
        return false;
    }
    let target = inst.target().to_vec();
    let covers = |q: &BTreeSet<usize>| target.iter().all(|a| q.contains(a));
    match inst {
        ControlInstance::Gcai(g) => {
            if w.len() > g.budget() || !w.is_disjoint(g.society()) {
                return false;
            }
            let society: Vec<usize> = (0..n)
                .filter(|&i| g.society().contains(i) || w.contains(i))
                .collect();
            covers(&naive_eval(p, rule, &society))
        }
        ControlInstance::Gcdi(d) => {
            if w.len() > d.budget() || target.iter().any(|&a| w.contains(a)) {
                return false;
            }
            let society: Vec<usize> = (0..n).filter(|&i| !w.contains(i)).collect();
            covers(&naive_eval(p, rule, &society))
        }
        ControlInstance::Gcpi(_) => {
            let side: Vec<usize> = (0..n).filter(|&i| w.contains(i)).collect();
            let rest: Vec<usize> = (0..n).filter(|&i| !w.contains(i)).collect();
            let mut runoff = naive_eval(p, rule, &side);
            runoff.extend(naive_eval(p, rule, &rest));
            let runoff: Vec<usize> = runoff.into_iter().collect();
            covers(&naive_eval(p, rule, &runoff))
        }
    }
}

pub fn profile_from_mask(n: usize, mask: u64) -> Profile {
    Profile::from_fn(n, |i, j| mask >> (i * n + j) & 1 == 1).unwrap()
}

pub fn subsets(n: usize) -> impl Iterator<Item = Subset> {
    (0u128..1 << n).map(move |m| Subset::from_mask(n, m))
}

pub fn rules_up_to(q: u32) -> Vec<RuleSpec> {
    let mut out: Vec<RuleSpec> = (1..=q)
        .cartesian_product(1..=q)
        .map(|(s, t)| RuleSpec::consent(s, t).unwrap())
        .collect();
    out.push(RuleSpec::Csr);
    out.push(RuleSpec::Lsr);
    out
}

pub fn brute_yes(inst: &ControlInstance) -> bool {
    solve_brute(inst, DEFAULT_LOG2_LIMIT).unwrap().outcome == Outcome::Yes
}

/// Every restricted exact-cover instance with the given `κ`, one per
/// multiset of sets (listed in sorted order).
pub fn rx3c_corpus(kappa: usize) -> Vec<Rx3cInstance> {
    let m = 3 * kappa;
    let triples: Vec<[usize; 3]> = (0..m).combinations(3).map(|c| [c[0], c[1], c[2]]).collect();
    triples
        .iter()
        .copied()
        .combinations_with_replacement(m)
        .filter_map(|sets| Rx3cInstance::new(kappa, sets).ok())
        .collect()
}

/// Every multiset of `1..=max_clauses` clauses over `vars` variables, each
/// clause a multiset of three literals. Renamings are not deduplicated.
pub fn sat_corpus(vars: usize, max_clauses: usize) -> Vec<ThreeSatInstance> {
    let literals: Vec<Literal> = (0..vars)
        .flat_map(|v| [Literal::pos(v), Literal::neg(v)])
        .collect();
    let clauses: Vec<[Literal; 3]> = literals
        .iter()
        .copied()
        .combinations_with_replacement(3)
        .map(|c| [c[0], c[1], c[2]])
        .collect();
    (1..=max_clauses)
        .flat_map(|count| {
            clauses
                .iter()
                .copied()
                .combinations_with_replacement(count)
                .map(|list| ThreeSatInstance::new(vars, list).unwrap())
                .collect::<Vec<_>>()
        })
        .collect()
}

/// Every edge set between `red` and `blue` vertices, as edge lists.
pub fn all_graphs(red: usize, blue: usize) -> impl Iterator<Item = Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..red).cartesian_product(0..blue).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect()
    })
}

/// Every RBDS instance with at most `max_red` red and `max_blue` blue
/// vertices and every budget `0..=red`.
pub fn rbds_corpus(max_red: usize, max_blue: usize) -> Vec<RbdsInstance> {
    let mut out = Vec::new();
    for red in 0..=max_red {
        for blue in 0..=max_blue {
            for edges in all_graphs(red, blue) {
                for k in 0..=red {
                    out.push(RbdsInstance::new(red, blue, k, edges.clone()).unwrap());
                }
            }
        }
    }
    out
}

/// Every LRBDS instance with `1..=max_k` labels, up to `max_red` red and
/// `max_blue` blue vertices, one representative per isomorphism class
/// (permuting blue vertices, permuting labels, reordering red vertices).
pub fn lrbds_corpus(max_k: usize, max_red: usize, max_blue: usize) -> Vec<LrbdsInstance> {
    let mut out = Vec::new();
    for k in 1..=max_k {
        let label_perms: Vec<Vec<usize>> = (0..k).permutations(k).collect();
        for blue in 0..=max_blue {
            let blue_perms: Vec<Vec<usize>> = (0..blue).permutations(blue).collect();
            let permute_mask = |mask: usize, perm: &[usize]| -> usize {
                (0..blue)
                    .filter(|&b| mask >> b & 1 == 1)
                    .fold(0, |acc, b| acc | 1 << perm[b])
            };
            let reds: Vec<(usize, usize)> = (0..k).cartesian_product(0..1usize << blue).collect();
            for red in 0..=max_red {
                let mut seen = BTreeSet::new();
                for multiset in reds.iter().copied().combinations_with_replacement(red) {
                    let canonical = label_perms
                        .iter()
                        .cartesian_product(&blue_perms)
                        .map(|(lp, bp)| {
                            let mut v: Vec<(usize, usize)> = multiset
                                .iter()
                                .map(|&(l, m)| (lp[l], permute_mask(m, bp)))
                                .collect();
                            v.sort_unstable();
                            v
                        })
                        .min()
                        .unwrap();
                    if !seen.insert(canonical.clone()) {
                        continue;
                    }
                    let labels = canonical.iter().map(|&(l, _)| l + 1).collect();
                    let edges = canonical
                        .iter()
                        .enumerate()
                        .flat_map(|(v, &(_, m))| {
                            (0..blue)
                                .filter(move |b| m >> b & 1 == 1)
                                .map(move |b| (v, b))
                        })
                        .collect();
                    out.push(LrbdsInstance::new(k, labels, blue, edges).unwrap());
                }
            }
        }
    }
    out
}
