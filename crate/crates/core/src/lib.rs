//! Group identification under consent rules and the two start-respecting
//! rules, with the adding, deleting and partitioning control problems.
//!
//! ```
//! use gi_core::{eval, Profile, RuleSpec, Subset};
//!
//! // 0 and 1 qualify each other, 2 qualifies nobody.
//! let p = Profile::from_fn(3, |i, j| i < 2 && j < 2).unwrap();
//! let winners = eval(&p, &RuleSpec::consent(2, 1).unwrap(), &p.everyone()).unwrap();
//! assert_eq!(winners.to_vec(), vec![0, 1]);
//! ```

pub mod error;
pub mod format;
pub mod ilp;
pub mod instance;
pub mod profile;
pub mod random;
pub mod reductions;
pub mod rules;
pub mod solvers;
pub mod subset;

pub use error::{Error, ParseError, Result};
pub use instance::{
    ControlInstance, GcaiInstance, GcdiInstance, GcpiInstance, ImmunityReason, Outcome, Problem,
    SolverTag, Verdict,
};
pub use profile::{Individual, Profile, ProfileBuilder};
pub use rules::{eval, eval_consent, eval_csr, eval_lsr, RuleKind, RuleSpec};
pub use solvers::{solve, Solver, Strategy};
pub use subset::Subset;
