//! The three group-control problems, their verdicts, and witness checks.
//!
//! * adding (`Gcai`): choose `U` outside `T`, `|U| <= k`, so that all of `S`
//!   is qualified in `T ∪ U`;
//! * deleting (`Gcdi`): choose `U` outside `S`, `|U| <= k`, so that all of
//!   `S` is qualified in `N \ U`;
//! * partitioning (`Gcpi`): choose a split `(U, N \ U)`; the winners of both
//!   halves form a run-off society `V`, and all of `S` must be qualified in
//!   `V`.
//!
//! Instances are accepted leniently: the usual assumption that `S` is not
//! already qualified is checked by [`ControlInstance::already_qualified`] and
//! by [`ControlInstance::require_strict`], not on construction.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::profile::Profile;
use crate::rules::{qualified, RuleSpec};
use crate::subset::Subset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Problem {
    Gcai,
    Gcdi,
    Gcpi,
}

impl Problem {
    pub const ALL: [Problem; 3] = [Problem::Gcai, Problem::Gcdi, Problem::Gcpi];
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Problem::Gcai => "GCAI",
            Problem::Gcdi => "GCDI",
            Problem::Gcpi => "GCPI",
        })
    }
}

impl FromStr for Problem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "GCAI" => Ok(Problem::Gcai),
            "GCDI" => Ok(Problem::Gcdi),
            "GCPI" => Ok(Problem::Gcpi),
            other => Err(Error::input(format!("unknown problem `{other}`"))),
        }
    }
}

fn check_target(profile: &Profile, target: &Subset) -> Result<()> {
    target.check_universe(profile.n(), "S")?;
    if target.is_empty() {
        return Err(Error::input("S must be nonempty"));
    }
    Ok(())
}

fn check_rule(rule: &RuleSpec) -> Result<()> {
    if let RuleSpec::Consent { s, t } = *rule {
        RuleSpec::consent(s, t)?;
    }
    Ok(())
}

/// Control by adding individuals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcaiInstance {
    profile: Profile,
    rule: RuleSpec,
    target: Subset,
    society: Subset,
    budget: usize,
}

impl GcaiInstance {
    /// `target` is `S`, `society` is `T`, `budget` is `k`.
    pub fn new(
        profile: Profile,
        rule: RuleSpec,
        target: Subset,
        society: Subset,
        budget: usize,
    ) -> Result<Self> {
        check_rule(&rule)?;
        check_target(&profile, &target)?;
        society.check_universe(profile.n(), "T")?;
        if !target.is_subset(&society) {
            return Err(Error::input("S must be a subset of T"));
        }
        Ok(GcaiInstance {
            profile,
            rule,
            target,
            society,
            budget,
        })
    }

    pub fn profile(&self) -> &Profile {
        &self.profile
    }
    pub fn rule(&self) -> &RuleSpec {
        &self.rule
    }
    pub fn target(&self) -> &Subset {
        &self.target
    }
    pub fn society(&self) -> &Subset {
        &self.society
    }
    pub fn budget(&self) -> usize {
        self.budget
    }

    /// Individuals that may be added: `N \ T`.
    pub fn pool(&self) -> Subset {
        self.society.complement()
    }

    pub fn already_qualified(&self) -> bool {
        self.target
            .is_subset(&qualified(&self.profile, &self.rule, &self.society))
    }

    /// Is `added` a valid way to qualify all of `S`?
    pub fn verify(&self, added: &Subset) -> Result<bool> {
        added.check_universe(self.profile.n(), "U")?;
        if !added.is_disjoint(&self.society) {
            return Err(Error::input("U must not intersect T"));
        }
        Ok(self.accepts_unchecked(added))
    }

    pub(crate) fn accepts_unchecked(&self, added: &Subset) -> bool {
        if added.len() > self.budget {
            return false;
        }
        let grown = &self.society | added;
        self.target
            .is_subset(&qualified(&self.profile, &self.rule, &grown))
    }
}

/// Control by deleting individuals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcdiInstance {
    profile: Profile,
    rule: RuleSpec,
    target: Subset,
    budget: usize,
}

impl GcdiInstance {
    pub fn new(profile: Profile, rule: RuleSpec, target: Subset, budget: usize) -> Result<Self> {
        check_rule(&rule)?;
        check_target(&profile, &target)?;
        Ok(GcdiInstance {
            profile,
            rule,
            target,
            budget,
        })
    }

    pub fn profile(&self) -> &Profile {
        &self.profile
    }
    pub fn rule(&self) -> &RuleSpec {
        &self.rule
    }
    pub fn target(&self) -> &Subset {
        &self.target
    }
    pub fn budget(&self) -> usize {
        self.budget
    }

    /// Individuals that may be deleted: `N \ S`.
    pub fn pool(&self) -> Subset {
        self.target.complement()
    }

    pub fn already_qualified(&self) -> bool {
        self.target.is_subset(&qualified(
            &self.profile,
            &self.rule,
            &self.profile.everyone(),
        ))
    }

    pub fn verify(&self, deleted: &Subset) -> Result<bool> {
        deleted.check_universe(self.profile.n(), "U")?;
        if !deleted.is_disjoint(&self.target) {
            return Err(Error::input("U must not contain members of S"));
        }
        Ok(self.accepts_unchecked(deleted))
    }

    pub(crate) fn accepts_unchecked(&self, deleted: &Subset) -> bool {
        if deleted.len() > self.budget {
            return false;
        }
        let remaining = deleted.complement();
        self.target
            .is_subset(&qualified(&self.profile, &self.rule, &remaining))
    }
}

/// Control by partitioning individuals. There is no budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcpiInstance {
    profile: Profile,
    rule: RuleSpec,
    target: Subset,
}

impl GcpiInstance {
    pub fn new(profile: Profile, rule: RuleSpec, target: Subset) -> Result<Self> {
        check_rule(&rule)?;
        check_target(&profile, &target)?;
        Ok(GcpiInstance {
            profile,
            rule,
            target,
        })
    }

    pub fn profile(&self) -> &Profile {
        &self.profile
    }
    pub fn rule(&self) -> &RuleSpec {
        &self.rule
    }
    pub fn target(&self) -> &Subset {
        &self.target
    }

    pub fn already_qualified(&self) -> bool {
        self.target.is_subset(&qualified(
            &self.profile,
            &self.rule,
            &self.profile.everyone(),
        ))
    }

    /// The run-off society `f(U) ∪ f(N \ U)` for the split `(U, N \ U)`.
    pub fn runoff(&self, side: &Subset) -> Result<Subset> {
        side.check_universe(self.profile.n(), "U")?;
        Ok(self.runoff_unchecked(side))
    }

    pub(crate) fn runoff_unchecked(&self, side: &Subset) -> Subset {
        let mut v = qualified(&self.profile, &self.rule, side);
        v.union_with(&qualified(&self.profile, &self.rule, &side.complement()));
        v
    }

    pub fn verify(&self, side: &Subset) -> Result<bool> {
        side.check_universe(self.profile.n(), "U")?;
        Ok(self.accepts_unchecked(side))
    }

    pub(crate) fn accepts_unchecked(&self, side: &Subset) -> bool {
        let v = self.runoff_unchecked(side);
        // everything in S must survive the first stage before it can win the run-off
        self.target.is_subset(&v)
            && self
                .target
                .is_subset(&qualified(&self.profile, &self.rule, &v))
    }
}

pub fn verify_gcai(inst: &GcaiInstance, added: &Subset) -> Result<bool> {
    inst.verify(added)
}

pub fn verify_gcdi(inst: &GcdiInstance, deleted: &Subset) -> Result<bool> {
    inst.verify(deleted)
}

pub fn verify_gcpi(inst: &GcpiInstance, side: &Subset) -> Result<bool> {
    inst.verify(side)
}

/// Any of the three control problems.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ControlInstance {
    Gcai(GcaiInstance),
    Gcdi(GcdiInstance),
    Gcpi(GcpiInstance),
}

impl ControlInstance {
    pub fn problem(&self) -> Problem {
        match self {
            ControlInstance::Gcai(_) => Problem::Gcai,
            ControlInstance::Gcdi(_) => Problem::Gcdi,
            ControlInstance::Gcpi(_) => Problem::Gcpi,
        }
    }

    pub fn profile(&self) -> &Profile {
        match self {
            ControlInstance::Gcai(i) => i.profile(),
            ControlInstance::Gcdi(i) => i.profile(),
            ControlInstance::Gcpi(i) => i.profile(),
        }
    }

    pub fn rule(&self) -> &RuleSpec {
        match self {
            ControlInstance::Gcai(i) => i.rule(),
            ControlInstance::Gcdi(i) => i.rule(),
            ControlInstance::Gcpi(i) => i.rule(),
        }
    }

    pub fn target(&self) -> &Subset {
        match self {
            ControlInstance::Gcai(i) => i.target(),
            ControlInstance::Gcdi(i) => i.target(),
            ControlInstance::Gcpi(i) => i.target(),
        }
    }

    pub fn budget(&self) -> Option<usize> {
        match self {
            ControlInstance::Gcai(i) => Some(i.budget()),
            ControlInstance::Gcdi(i) => Some(i.budget()),
            ControlInstance::Gcpi(_) => None,
        }
    }

    pub fn already_qualified(&self) -> bool {
        match self {
            ControlInstance::Gcai(i) => i.already_qualified(),
            ControlInstance::Gcdi(i) => i.already_qualified(),
            ControlInstance::Gcpi(i) => i.already_qualified(),
        }
    }

    /// Rejects instances whose target is already qualified.
    pub fn require_strict(self) -> Result<Self> {
        if self.already_qualified() {
            return Err(Error::input(
                "S is already socially qualified (use lenient mode to accept this instance)",
            ));
        }
        Ok(self)
    }

    pub(crate) fn accepts_unchecked(&self, witness: &Subset) -> bool {
        match self {
            ControlInstance::Gcai(i) => i.accepts_unchecked(witness),
            ControlInstance::Gcdi(i) => i.accepts_unchecked(witness),
            ControlInstance::Gcpi(i) => i.accepts_unchecked(witness),
        }
    }

    pub fn verify(&self, witness: &Subset) -> Result<bool> {
        match self {
            ControlInstance::Gcai(i) => i.verify(witness),
            ControlInstance::Gcdi(i) => i.verify(witness),
            ControlInstance::Gcpi(i) => i.verify(witness),
        }
    }
}

impl From<GcaiInstance> for ControlInstance {
    fn from(i: GcaiInstance) -> Self {
        ControlInstance::Gcai(i)
    }
}
impl From<GcdiInstance> for ControlInstance {
    fn from(i: GcdiInstance) -> Self {
        ControlInstance::Gcdi(i)
    }
}
impl From<GcpiInstance> for ControlInstance {
    fn from(i: GcpiInstance) -> Self {
        ControlInstance::Gcpi(i)
    }
}

/// Why a rule can never be controlled in a given way.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ImmunityReason {
    /// Consent `(1, 1)`: qualification is pure self-qualification.
    LiberalRule,
    /// Consent `(s, 1)` against deleting/partitioning, or `(1, t)` against
    /// adding: the deciding count can only move the wrong way.
    UnitQuota,
    /// Liberal-start rule against deleting/partitioning: qualification is a
    /// path from a self-qualifier, and removing people never creates paths.
    LiberalStartPaths,
}

impl ImmunityReason {
    /// Numeric code printed by the CLI (`IMMUNE (thm=<code>)`).
    pub fn code(self) -> u8 {
        match self {
            ImmunityReason::LiberalRule => 1,
            ImmunityReason::UnitQuota => 2,
            ImmunityReason::LiberalStartPaths => 6,
        }
    }
}

/// The algorithm that produced a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SolverTag {
    /// The lenient already-qualified check.
    Precheck,
    Immunity(ImmunityReason),
    /// Forced-deletion algorithm for consent rules with `t = 2`.
    PolyConsentDeletion,
    /// Disqualifier-deletion algorithm for the consensus-start rule.
    PolyCsrDeletion,
    /// Opinion-group integer feasibility for consent rules.
    FptIlp,
    BruteForce,
}

impl fmt::Display for SolverTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SolverTag::Precheck => "precheck",
            SolverTag::Immunity(_) => "immunity",
            SolverTag::PolyConsentDeletion => "poly-thm3",
            SolverTag::PolyCsrDeletion => "poly-thm8",
            SolverTag::FptIlp => "fpt-ilp",
            SolverTag::BruteForce => "brute-force",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Outcome {
    Immune,
    Yes,
    No,
    AlreadyQualified,
}

impl Outcome {
    /// Immunity is a proof that no witness exists.
    pub fn is_negative(self) -> bool {
        matches!(self, Outcome::No | Outcome::Immune)
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Immune => "IMMUNE",
            Outcome::Yes => "YES",
            Outcome::No => "NO",
            Outcome::AlreadyQualified => "ALREADY-QUALIFIED",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub outcome: Outcome,
    pub witness: Option<Subset>,
    pub solver: SolverTag,
}

impl Verdict {
    pub fn yes(witness: Subset, solver: SolverTag) -> Self {
        Verdict {
            outcome: Outcome::Yes,
            witness: Some(witness),
            solver,
        }
    }

    pub fn no(solver: SolverTag) -> Self {
        Verdict {
            outcome: Outcome::No,
            witness: None,
            solver,
        }
    }

    pub fn immune(reason: ImmunityReason) -> Self {
        Verdict {
            outcome: Outcome::Immune,
            witness: None,
            solver: SolverTag::Immunity(reason),
        }
    }

    pub fn already_qualified(solver: SolverTag) -> Self {
        Verdict {
            outcome: Outcome::AlreadyQualified,
            witness: None,
            solver,
        }
    }
}

/// One-line rendering used by the CLI, e.g. `YES [1] (solver=poly-thm3)`.
impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.outcome, &self.solver) {
            (Outcome::Immune, SolverTag::Immunity(reason)) => {
                write!(f, "IMMUNE (thm={})", reason.code())
            }
            (outcome, solver) => {
                write!(f, "{outcome}")?;
                if let Some(w) = &self.witness {
                    write!(f, " {w}")?;
                }
                write!(f, " (solver={solver})")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, xs: &[usize]) -> Subset {
        Subset::from_indices(n, xs.iter().copied()).unwrap()
    }

    /// Two individuals; `a` and `b` both disqualify `a`, everything else 0.
    fn deletion_example(s: u32) -> GcdiInstance {
        let p = Profile::from_fn(2, |_, _| false).unwrap();
        GcdiInstance::new(p, RuleSpec::consent(s, 2).unwrap(), set(2, &[0]), 1).unwrap()
    }

    #[test]
    fn deleting_the_dissenter_works() {
        for s in 1..=3 {
            let inst = deletion_example(s);
            assert!(!inst.already_qualified());
            assert!(verify_gcdi(&inst, &set(2, &[1])).unwrap());
            assert!(!verify_gcdi(&inst, &set(2, &[])).unwrap());
        }
    }

    #[test]
    fn deleting_a_protected_member_is_an_error() {
        let inst = deletion_example(1);
        assert!(verify_gcdi(&inst, &set(2, &[0])).is_err());
    }

    #[test]
    fn adding_nothing_changes_nothing() {
        let p = Profile::from_fn(3, |i, j| i == j || i == 2).unwrap();
        let inst = GcaiInstance::new(
            p,
            RuleSpec::consent(2, 1).unwrap(),
            set(3, &[0]),
            set(3, &[0, 1]),
            1,
        )
        .unwrap();
        assert!(!inst.already_qualified());
        assert!(!verify_gcai(&inst, &set(3, &[])).unwrap());
        assert!(verify_gcai(&inst, &set(3, &[2])).unwrap());
        assert!(verify_gcai(&inst, &set(3, &[1])).is_err());
    }

    #[test]
    fn budget_is_enforced() {
        let p = Profile::from_fn(3, |i, j| i == j || i == 2).unwrap();
        let inst = GcaiInstance::new(
            p,
            RuleSpec::consent(2, 1).unwrap(),
            set(3, &[0]),
            set(3, &[0, 1]),
            0,
        )
        .unwrap();
        assert!(!verify_gcai(&inst, &set(3, &[2])).unwrap());
    }

    #[test]
    fn everyone_disqualifies_everyone_split() {
        for t in 2..=4u32 {
            let n = t as usize + 1;
            let p = Profile::from_fn(n, |_, _| false).unwrap();
            let inst =
                GcpiInstance::new(p, RuleSpec::consent(1, t).unwrap(), set(n, &[0])).unwrap();
            assert!(!inst.already_qualified());
            let u = set(n, &[0]);
            assert!(verify_gcpi(&inst, &u).unwrap());
            assert!(verify_gcpi(&inst, &u.complement()).unwrap());
            assert_eq!(inst.runoff(&u).unwrap().to_vec(), vec![0]);
        }
    }

    #[test]
    fn s_must_lie_in_t() {
        let p = Profile::from_fn(3, |_, _| true).unwrap();
        let r = GcaiInstance::new(p, RuleSpec::Lsr, set(3, &[0, 2]), set(3, &[0]), 1);
        assert!(r.is_err());
    }

    #[test]
    fn empty_target_rejected() {
        let p = Profile::from_fn(3, |_, _| true).unwrap();
        assert!(GcpiInstance::new(p, RuleSpec::Lsr, Subset::empty(3)).is_err());
    }

    #[test]
    fn verdict_lines() {
        let v = Verdict::yes(set(2, &[1]), SolverTag::PolyConsentDeletion);
        assert_eq!(v.to_string(), "YES [1] (solver=poly-thm3)");
        assert_eq!(
            Verdict::immune(ImmunityReason::LiberalStartPaths).to_string(),
            "IMMUNE (thm=6)"
        );
        assert_eq!(
            Verdict::no(SolverTag::BruteForce).to_string(),
            "NO (solver=brute-force)"
        );
    }
}
