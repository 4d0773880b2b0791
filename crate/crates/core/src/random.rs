//! Seeded random profiles, control instances and source instances.
//!
//! Everything is driven by a caller-supplied RNG; [`seeded`] gives the
//! portable ChaCha8 stream used by the CLI, so equal seeds reproduce equal
//! output on every platform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::instance::{ControlInstance, GcaiInstance, GcdiInstance, GcpiInstance, Problem};
use crate::profile::Profile;
use crate::reductions::{Literal, LrbdsInstance, RbdsInstance, Rx3cInstance, ThreeSatInstance};
use crate::rules::RuleSpec;
use crate::subset::Subset;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Each opinion is 1 with probability `density`.
pub fn random_profile<R: Rng + ?Sized>(rng: &mut R, n: usize, density: f64) -> Result<Profile> {
    if !(0.0..=1.0).contains(&density) {
        return Err(Error::input("density must lie in [0, 1]"));
    }
    Profile::from_fn(n, |_, _| rng.random_bool(density))
}

/// `size` distinct members of `from`, uniformly.
pub fn random_subset_of<R: Rng + ?Sized>(rng: &mut R, from: &Subset, size: usize) -> Subset {
    let mut members = from.to_vec();
    members.shuffle(rng);
    members.truncate(size);
    let mut out = Subset::empty(from.universe());
    for m in members {
        out.insert(m);
    }
    out
}

/// Shape of a random control instance.
#[derive(Debug, Clone, PartialEq)]
pub struct InstanceShape {
    pub problem: Problem,
    pub rule: RuleSpec,
    pub n: usize,
    /// `|S|`.
    pub target: usize,
    /// `|T|` for adding; ignored otherwise. Must be at least `target`.
    pub society: usize,
    /// `k` for adding and deleting.
    pub budget: usize,
    pub density: f64,
}

impl InstanceShape {
    fn check(&self) -> Result<()> {
        if self.target == 0 || self.target > self.n {
            return Err(Error::input(format!("|S| must lie in 1..={}", self.n)));
        }
        if self.problem == Problem::Gcai && !(self.target..=self.n).contains(&self.society) {
            return Err(Error::input(format!(
                "|T| must lie in {}..={}",
                self.target, self.n
            )));
        }
        Ok(())
    }
}

/// One instance of the given shape; may be already qualified.
pub fn random_instance<R: Rng + ?Sized>(
    rng: &mut R,
    shape: &InstanceShape,
) -> Result<ControlInstance> {
    shape.check()?;
    let profile = random_profile(rng, shape.n, shape.density)?;
    let everyone = profile.everyone();
    Ok(match shape.problem {
        Problem::Gcai => {
            let society = random_subset_of(rng, &everyone, shape.society);
            let target = random_subset_of(rng, &society, shape.target);
            GcaiInstance::new(profile, shape.rule, target, society, shape.budget)?.into()
        }
        Problem::Gcdi => {
            let target = random_subset_of(rng, &everyone, shape.target);
            GcdiInstance::new(profile, shape.rule, target, shape.budget)?.into()
        }
        Problem::Gcpi => {
            let target = random_subset_of(rng, &everyone, shape.target);
            GcpiInstance::new(profile, shape.rule, target)?.into()
        }
    })
}

/// Rejection-samples an instance whose target is not already qualified.
pub fn random_strict_instance<R: Rng + ?Sized>(
    rng: &mut R,
    shape: &InstanceShape,
    attempts: usize,
) -> Result<ControlInstance> {
    for _ in 0..attempts {
        let inst = random_instance(rng, shape)?;
        if !inst.already_qualified() {
            return Ok(inst);
        }
    }
    Err(Error::input(format!(
        "no strict instance found in {attempts} attempts; try a lower density"
    )))
}

/// A random restricted exact-cover instance: every element appears in
/// exactly three sets. Built by dealing three copies of each element into
/// sets and redealing until no set repeats an element.
pub fn random_rx3c<R: Rng + ?Sized>(rng: &mut R, kappa: usize) -> Result<Rx3cInstance> {
    if kappa == 0 {
        return Err(Error::input("kappa must be positive"));
    }
    let m = 3 * kappa;
    let mut deck: Vec<usize> = (0..m).flat_map(|x| [x; 3]).collect();
    for _ in 0..100_000 {
        deck.shuffle(rng);
        let sets: Vec<[usize; 3]> = deck
            .chunks_exact(3)
            .map(|c| {
                let mut s = [c[0], c[1], c[2]];
                s.sort_unstable();
                s
            })
            .collect();
        if sets.iter().all(|s| s[0] != s[1] && s[1] != s[2]) {
            return Rx3cInstance::new(kappa, sets);
        }
    }
    Err(Error::input(format!(
        "could not deal an instance with kappa {kappa}"
    )))
}

pub fn random_3sat<R: Rng + ?Sized>(
    rng: &mut R,
    vars: usize,
    clauses: usize,
) -> Result<ThreeSatInstance> {
    if vars == 0 {
        return Err(Error::input("a formula needs at least one variable"));
    }
    let lit = |rng: &mut R| Literal {
        var: rng.random_range(0..vars),
        positive: rng.random_bool(0.5),
    };
    let list = (0..clauses)
        .map(|_| [lit(rng), lit(rng), lit(rng)])
        .collect();
    ThreeSatInstance::new(vars, list)
}

fn random_edges<R: Rng + ?Sized>(
    rng: &mut R,
    red: usize,
    blue: usize,
    p: f64,
) -> Result<Vec<(usize, usize)>> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::input("edge density must lie in [0, 1]"));
    }
    let mut edges = Vec::new();
    for r in 0..red {
        for b in 0..blue {
            if rng.random_bool(p) {
                edges.push((r, b));
            }
        }
    }
    Ok(edges)
}

pub fn random_rbds<R: Rng + ?Sized>(
    rng: &mut R,
    red: usize,
    blue: usize,
    k: usize,
    edge_p: f64,
) -> Result<RbdsInstance> {
    let edges = random_edges(rng, red, blue, edge_p)?;
    RbdsInstance::new(red, blue, k, edges)
}

pub fn random_lrbds<R: Rng + ?Sized>(
    rng: &mut R,
    k: usize,
    red: usize,
    blue: usize,
    edge_p: f64,
) -> Result<LrbdsInstance> {
    if k == 0 && red > 0 {
        return Err(Error::input("red vertices need at least one label"));
    }
    let labels = (0..red).map(|_| rng.random_range(1..=k)).collect();
    let edges = random_edges(rng, red, blue, edge_p)?;
    LrbdsInstance::new(k, labels, blue, edges)
}
