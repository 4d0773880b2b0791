//! Deciding control instances.
//!
//! | problem | consent `(s,t)`                        | csr         | lsr     |
//! |---------|----------------------------------------|-------------|---------|
//! | adding  | immune if `s = 1`, else fpt-ilp        | brute force | brute force |
//! | deleting| immune if `t = 1`; poly if `t = 2`; else fpt-ilp | poly | immune |
//! | partition | immune if `t = 1`, else brute force  | brute force | immune  |
//!
//! No polynomial algorithm is known for partitioning under the
//! consensus-start rule, so brute force is the only route there.

mod brute;
mod fpt;
mod immunity;
mod poly;

use std::fmt;
use std::str::FromStr;

pub use brute::{all_witnesses, candidate_count, solve_brute, DEFAULT_LOG2_LIMIT};
pub use fpt::{
    gcai_system, gcdi_system, opinion_groups, solve_fpt_gcai, solve_fpt_gcdi, GroupedSystem,
    OpinionGroup,
};
pub use immunity::{immunity_check, immunity_reason};
pub use poly::{solve_gcdi_consent_s2, solve_gcdi_csr};

use crate::error::{Error, Result};
use crate::instance::{ControlInstance, Outcome, SolverTag, Verdict};
use crate::rules::RuleSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strategy {
    Auto,
    Immunity,
    /// Forced deletions, consent rules with `t = 2`.
    PolyConsentDeletion,
    /// Disqualifier deletions, consensus-start rule.
    PolyCsrDeletion,
    FptIlp,
    BruteForce,
}

impl Strategy {
    pub const EXPLICIT: [Strategy; 5] = [
        Strategy::Immunity,
        Strategy::PolyConsentDeletion,
        Strategy::PolyCsrDeletion,
        Strategy::FptIlp,
        Strategy::BruteForce,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Strategy::Auto => "auto",
            Strategy::Immunity => "immunity",
            Strategy::PolyConsentDeletion => "poly-thm3",
            Strategy::PolyCsrDeletion => "poly-thm8",
            Strategy::FptIlp => "fpt-ilp",
            Strategy::BruteForce => "brute-force",
        }
    }

    /// Can this strategy decide `inst`? Brute force always applies (subject
    /// to its size limit).
    pub fn applies_to(self, inst: &ControlInstance) -> bool {
        let rule = inst.rule();
        let deleting = matches!(inst, ControlInstance::Gcdi(_));
        match self {
            Strategy::Auto | Strategy::BruteForce => true,
            Strategy::Immunity => immunity_check(inst.problem(), rule),
            Strategy::PolyConsentDeletion => {
                deleting && matches!(rule, RuleSpec::Consent { t: 2, .. })
            }
            Strategy::PolyCsrDeletion => deleting && *rule == RuleSpec::Csr,
            Strategy::FptIlp => {
                !matches!(inst, ControlInstance::Gcpi(_))
                    && matches!(rule, RuleSpec::Consent { .. })
            }
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let wanted = s.trim().to_ascii_lowercase();
        [Strategy::Auto]
            .into_iter()
            .chain(Strategy::EXPLICIT)
            .find(|st| st.name() == wanted)
            .ok_or_else(|| Error::input(format!("unknown strategy `{s}`")))
    }
}

/// Solver entry point with a configurable brute-force limit.
#[derive(Debug, Clone, Copy)]
pub struct Solver {
    /// Brute force refuses to look at more than `2^brute_log2_limit`
    /// candidate witnesses.
    pub brute_log2_limit: u32,
}

impl Default for Solver {
    fn default() -> Self {
        Solver {
            brute_log2_limit: DEFAULT_LOG2_LIMIT,
        }
    }
}

impl Solver {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_brute_limit(mut self, log2_limit: u32) -> Self {
        self.brute_log2_limit = log2_limit;
        self
    }

    /// Which concrete strategy `Auto` picks for `inst` (ignoring the
    /// already-qualified short circuit).
    pub fn route(&self, inst: &ControlInstance) -> Strategy {
        [
            Strategy::Immunity,
            Strategy::PolyConsentDeletion,
            Strategy::PolyCsrDeletion,
            Strategy::FptIlp,
        ]
        .into_iter()
        .find(|st| st.applies_to(inst))
        .unwrap_or(Strategy::BruteForce)
    }

    /// Decides `inst`. Every `Yes` is re-verified before it is returned.
    pub fn solve(&self, inst: &ControlInstance, strategy: Strategy) -> Result<Verdict> {
        let verdict = match strategy {
            Strategy::Auto => {
                if inst.already_qualified() {
                    return Ok(Verdict::already_qualified(SolverTag::Precheck));
                }
                self.solve_with(inst, self.route(inst))?
            }
            explicit => {
                if !explicit.applies_to(inst) {
                    return Err(Error::strategy(format!(
                        "{explicit} does not apply to {} under `{}`",
                        inst.problem(),
                        inst.rule()
                    )));
                }
                self.solve_with(inst, explicit)?
            }
        };
        if verdict.outcome == Outcome::Yes {
            let witness = verdict.witness.as_ref().ok_or_else(|| {
                Error::Verification(format!("{} returned YES without a witness", verdict.solver))
            })?;
            if !inst.verify(witness)? {
                return Err(Error::Verification(format!(
                    "{} witness {witness} rejected",
                    verdict.solver
                )));
            }
        }
        Ok(verdict)
    }

    fn solve_with(&self, inst: &ControlInstance, strategy: Strategy) -> Result<Verdict> {
        match (strategy, inst) {
            (Strategy::Immunity, _) => {
                if inst.already_qualified() {
                    return Ok(Verdict::already_qualified(SolverTag::Precheck));
                }
                let reason = immunity_reason(inst.problem(), inst.rule())
                    .ok_or_else(|| Error::strategy("rule is not immune"))?;
                Ok(Verdict::immune(reason))
            }
            (Strategy::PolyConsentDeletion, ControlInstance::Gcdi(i)) => solve_gcdi_consent_s2(i),
            (Strategy::PolyCsrDeletion, ControlInstance::Gcdi(i)) => solve_gcdi_csr(i),
            (Strategy::FptIlp, ControlInstance::Gcai(i)) => solve_fpt_gcai(i),
            (Strategy::FptIlp, ControlInstance::Gcdi(i)) => solve_fpt_gcdi(i),
            (Strategy::BruteForce, _) => solve_brute(inst, self.brute_log2_limit),
            (st, _) => Err(Error::strategy(format!(
                "{st} does not apply to {}",
                inst.problem()
            ))),
        }
    }
}

/// [`Solver::solve`] with default limits.
pub fn solve(inst: &ControlInstance, strategy: Strategy) -> Result<Verdict> {
    Solver::default().solve(inst, strategy)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::{GcdiInstance, GcpiInstance};
    use crate::profile::Profile;
    use crate::subset::Subset;

    fn one() -> Subset {
        Subset::from_indices(3, [0]).unwrap()
    }

    fn gcdi(rule: RuleSpec) -> ControlInstance {
        let p = Profile::from_fn(3, |_, _| false).unwrap();
        GcdiInstance::new(p, rule, one(), 1).unwrap().into()
    }

    #[test]
    fn routing() {
        let s = Solver::new();
        assert_eq!(s.route(&gcdi(RuleSpec::liberal())), Strategy::Immunity);
        assert_eq!(
            s.route(&gcdi(RuleSpec::consent(4, 2).unwrap())),
            Strategy::PolyConsentDeletion
        );
        assert_eq!(s.route(&gcdi(RuleSpec::Csr)), Strategy::PolyCsrDeletion);
        assert_eq!(
            s.route(&gcdi(RuleSpec::consent(2, 3).unwrap())),
            Strategy::FptIlp
        );
        let p = Profile::from_fn(3, |_, _| false).unwrap();
        let part: ControlInstance = GcpiInstance::new(p, RuleSpec::Csr, one()).unwrap().into();
        assert_eq!(s.route(&part), Strategy::BruteForce);
    }

    #[test]
    fn immune_verdict_and_tag() {
        let v = solve(&gcdi(RuleSpec::liberal()), Strategy::Auto).unwrap();
        assert_eq!(v.outcome, Outcome::Immune);
        assert_eq!(v.to_string(), "IMMUNE (thm=1)");
    }

    #[test]
    fn auto_tags_the_polynomial_route() {
        let v = solve(&gcdi(RuleSpec::consent(4, 2).unwrap()), Strategy::Auto).unwrap();
        assert_eq!(v.solver, SolverTag::PolyConsentDeletion);
    }

    #[test]
    fn explicit_inapplicable_strategy_errors() {
        assert!(matches!(
            solve(&gcdi(RuleSpec::Csr), Strategy::PolyConsentDeletion),
            Err(Error::Strategy(_))
        ));
        assert!(matches!(
            solve(&gcdi(RuleSpec::Csr), Strategy::Immunity),
            Err(Error::Strategy(_))
        ));
    }

    #[test]
    fn strategy_names_roundtrip() {
        for st in [Strategy::Auto].into_iter().chain(Strategy::EXPLICIT) {
            assert_eq!(st.name().parse::<Strategy>().unwrap(), st);
        }
        assert!("simplex".parse::<Strategy>().is_err());
    }
}
