//! Social rules: which members of a society end up socially qualified.
//!
//! Three families are supported:
//!
//! * consent rules with quotas `(s, t)`: a self-qualifier needs at least `s`
//!   qualifiers (itself included) and a self-disqualifier stays qualified
//!   unless at least `t` members (itself included) disqualify it;
//! * the consensus-start rule, seeded with everyone qualified by every
//!   member and closed under "qualified by a qualified member";
//! * the liberal-start rule, seeded with the self-qualifiers and closed the
//!   same way.
//!
//! Every evaluation is restricted to a sub-society `T`, and the result is
//! always a subset of `T`. The consent quotas are not tied to `|N|`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::profile::Profile;
use crate::subset::Subset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RuleKind {
    Consent,
    Csr,
    Lsr,
}

/// A social rule. Consent quotas are validated on construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RuleSpec {
    Consent { s: u32, t: u32 },
    Csr,
    Lsr,
}

impl RuleSpec {
    pub fn consent(s: u32, t: u32) -> Result<Self> {
        if s == 0 || t == 0 {
            return Err(Error::input(format!(
                "consent quotas must be positive, got s={s}, t={t}"
            )));
        }
        Ok(RuleSpec::Consent { s, t })
    }

    /// The consent rule `(1, 1)`: everyone decides for themselves.
    pub fn liberal() -> Self {
        RuleSpec::Consent { s: 1, t: 1 }
    }

    pub fn kind(&self) -> RuleKind {
        match self {
            RuleSpec::Consent { .. } => RuleKind::Consent,
            RuleSpec::Csr => RuleKind::Csr,
            RuleSpec::Lsr => RuleKind::Lsr,
        }
    }

    pub fn quotas(&self) -> Option<(u32, u32)> {
        match *self {
            RuleSpec::Consent { s, t } => Some((s, t)),
            _ => None,
        }
    }
}

impl fmt::Display for RuleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleSpec::Consent { s, t } => write!(f, "consent {s} {t}"),
            RuleSpec::Csr => f.write_str("csr"),
            RuleSpec::Lsr => f.write_str("lsr"),
        }
    }
}

/// Accepts `consent <s> <t>`, `consent:<s>:<t>`, `csr` and `lsr`
/// (case-insensitive).
impl FromStr for RuleSpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let lower = text.trim().to_ascii_lowercase();
        let parts: Vec<&str> = lower
            .split(|c: char| c == ':' || c.is_whitespace())
            .filter(|p| !p.is_empty())
            .collect();
        match parts.as_slice() {
            ["csr"] => Ok(RuleSpec::Csr),
            ["lsr"] => Ok(RuleSpec::Lsr),
            ["consent", s, t] => {
                let quota = |q: &str| {
                    q.parse::<u32>()
                        .map_err(|_| Error::input(format!("bad consent quota `{q}`")))
                };
                RuleSpec::consent(quota(s)?, quota(t)?)
            }
            _ => Err(Error::input(format!("unknown rule `{}`", text.trim()))),
        }
    }
}

/// Consent rule `(s, t)` restricted to `society`.
pub fn eval_consent(profile: &Profile, s: u32, t: u32, society: &Subset) -> Result<Subset> {
    society.check_universe(profile.n(), "society")?;
    RuleSpec::consent(s, t)?;
    Ok(consent_unchecked(profile, s, t, society))
}

/// Consensus-start rule restricted to `society`.
pub fn eval_csr(profile: &Profile, society: &Subset) -> Result<Subset> {
    society.check_universe(profile.n(), "society")?;
    Ok(csr_unchecked(profile, society))
}

/// Liberal-start rule restricted to `society`.
pub fn eval_lsr(profile: &Profile, society: &Subset) -> Result<Subset> {
    society.check_universe(profile.n(), "society")?;
    Ok(lsr_unchecked(profile, society))
}

/// Socially qualified members of `society` under `rule`.
pub fn eval(profile: &Profile, rule: &RuleSpec, society: &Subset) -> Result<Subset> {
    society.check_universe(profile.n(), "society")?;
    if let RuleSpec::Consent { s, t } = *rule {
        RuleSpec::consent(s, t)?;
    }
    Ok(qualified(profile, rule, society))
}

/// Hot-path evaluation; callers guarantee `society` is over the profile's
/// universe and the rule is well formed.
pub(crate) fn qualified(profile: &Profile, rule: &RuleSpec, society: &Subset) -> Subset {
    debug_assert_eq!(society.universe(), profile.n());
    match *rule {
        RuleSpec::Consent { s, t } => consent_unchecked(profile, s, t, society),
        RuleSpec::Csr => csr_unchecked(profile, society),
        RuleSpec::Lsr => lsr_unchecked(profile, society),
    }
}

fn consent_unchecked(profile: &Profile, s: u32, t: u32, society: &Subset) -> Subset {
    let mut out = Subset::empty(profile.n());
    let size = society.len();
    for a in society.iter() {
        let qualifiers = profile.qualifiers_of(a).intersection_len(society);
        let keep = if profile.self_qualifies(a) {
            qualifiers >= s as usize
        } else {
            size - qualifiers < t as usize
        };
        if keep {
            out.insert(a);
        }
    }
    out
}

/// Members qualified by every member of `society` (the consensus seed).
pub fn consensus_seed(profile: &Profile, society: &Subset) -> Subset {
    let mut seed = Subset::empty(profile.n());
    for a in society.iter() {
        if society.is_subset(profile.qualifiers_of(a)) {
            seed.insert(a);
        }
    }
    seed
}

/// Self-qualifying members of `society` (the liberal seed).
pub fn liberal_seed(profile: &Profile, society: &Subset) -> Subset {
    let mut seed = Subset::empty(profile.n());
    for a in society.iter().filter(|&a| profile.self_qualifies(a)) {
        seed.insert(a);
    }
    seed
}

fn csr_unchecked(profile: &Profile, society: &Subset) -> Subset {
    closure(profile, society, consensus_seed(profile, society))
}

fn lsr_unchecked(profile: &Profile, society: &Subset) -> Subset {
    closure(profile, society, liberal_seed(profile, society))
}

/// Breadth-first closure of `seed` under "qualified by a reached member",
/// never leaving `society`.
pub(crate) fn closure(profile: &Profile, society: &Subset, seed: Subset) -> Subset {
    let mut reached = seed.clone();
    let mut frontier = seed;
    while !frontier.is_empty() {
        let mut next = Subset::empty(profile.n());
        for a in frontier.iter() {
            next.union_with(profile.qualified_by(a));
        }
        next.intersect_with(society);
        next.difference_with(&reached);
        reached.union_with(&next);
        frontier = next;
    }
    reached
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, xs: &[usize]) -> Subset {
        Subset::from_indices(n, xs.iter().copied()).unwrap()
    }

    /// a, b qualify themselves and each other; c disqualifies everyone.
    fn three_person_csr_profile() -> Profile {
        let mut ones = [[false; 3]; 3];
        ones[0][0] = true;
        ones[0][1] = true;
        ones[1][1] = true;
        ones[1][0] = true;
        Profile::from_fn(3, |i, j| ones[i][j]).unwrap()
    }

    #[test]
    fn all_disqualify_gives_nobody() {
        let p = Profile::from_fn(3, |_, _| false).unwrap();
        let r = eval_consent(&p, 1, 2, &p.everyone()).unwrap();
        assert!(r.is_empty());
    }

    #[test]
    fn lone_self_qualifier_under_liberal_rule() {
        let p = Profile::from_fn(1, |_, _| true).unwrap();
        let r = eval(&p, &RuleSpec::liberal(), &p.everyone()).unwrap();
        assert_eq!(r.to_vec(), vec![0]);
    }

    #[test]
    fn csr_needs_a_unanimous_seed() {
        let p = three_person_csr_profile();
        assert!(eval_csr(&p, &p.everyone()).unwrap().is_empty());
        assert_eq!(eval_csr(&p, &set(3, &[0, 1])).unwrap().to_vec(), vec![0, 1]);
        assert!(eval(&p, &RuleSpec::Csr, &p.everyone()).unwrap().is_empty());
    }

    #[test]
    fn lsr_without_self_qualifier_is_empty() {
        let p = Profile::from_fn(4, |i, j| i != j).unwrap();
        assert!(eval_lsr(&p, &p.everyone()).unwrap().is_empty());
    }

    #[test]
    fn lsr_expands_one_step() {
        // a qualifies itself and b; b qualifies nobody.
        let p = Profile::from_fn(2, |i, _| i == 0).unwrap();
        assert_eq!(eval_lsr(&p, &p.everyone()).unwrap().to_vec(), vec![0, 1]);
    }

    #[test]
    fn empty_society() {
        let p = Profile::from_fn(3, |_, _| true).unwrap();
        for rule in [
            RuleSpec::Lsr,
            RuleSpec::Csr,
            RuleSpec::consent(2, 2).unwrap(),
        ] {
            assert!(eval(&p, &rule, &Subset::empty(3)).unwrap().is_empty());
        }
    }

    #[test]
    fn liberal_rule_is_self_qualification() {
        let p = Profile::from_fn(5, |i, j| (i + 2 * j) % 3 == 0).unwrap();
        let r = eval(&p, &RuleSpec::liberal(), &p.everyone()).unwrap();
        let expected: Vec<usize> = (0..5).filter(|&i| p.phi(i, i)).collect();
        assert_eq!(r.to_vec(), expected);
    }

    #[test]
    fn wrong_universe_is_an_input_error() {
        let p = Profile::from_fn(3, |_, _| true).unwrap();
        assert!(matches!(
            eval(&p, &RuleSpec::Lsr, &Subset::full(4)),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn zero_quota_rejected() {
        assert!(RuleSpec::consent(0, 1).is_err());
        let p = Profile::from_fn(2, |_, _| true).unwrap();
        assert!(eval_consent(&p, 1, 0, &p.everyone()).is_err());
    }

    #[test]
    fn rule_text_roundtrip() {
        for text in ["consent 2 3", "csr", "lsr"] {
            let r: RuleSpec = text.parse().unwrap();
            assert_eq!(r.to_string(), text);
        }
        assert_eq!(
            "CONSENT:4:1".parse::<RuleSpec>().unwrap(),
            RuleSpec::Consent { s: 4, t: 1 }
        );
        assert!("plurality".parse::<RuleSpec>().is_err());
        assert!("consent 1".parse::<RuleSpec>().is_err());
    }
}
