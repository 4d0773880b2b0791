//! Hardness reductions as instance generators.
//!
//! Each generator maps a source instance to a control instance that is a
//! yes-instance exactly when the source is. Opinions the constructions leave
//! unconstrained are fixed to 0, so outputs are deterministic. Individuals are
//! named after the objects they stand for.

mod source;

use std::ops::Range;

pub use source::{
    oracle_3sat, oracle_lrbds, oracle_rbds, oracle_rx3c, Literal, LrbdsInstance, RbdsInstance,
    Rx3cInstance, ThreeSatInstance, ORACLE_LIMIT,
};

use crate::error::{Error, Result};
use crate::instance::{GcaiInstance, GcdiInstance, GcpiInstance};
use crate::profile::ProfileBuilder;
use crate::rules::RuleSpec;
use crate::subset::Subset;

fn name_all(b: &mut ProfileBuilder, start: usize, names: impl IntoIterator<Item = String>) {
    for (i, name) in names.into_iter().enumerate() {
        b.name(start + i, name)
            .expect("generated names are single-line");
    }
}

/// Elements first (`x0..`), then one individual per set (`set0..`),
/// optionally followed by `dummies` dummies (`dummy0..`).
fn rx3c_builder(src: &Rx3cInstance, dummies: usize) -> Result<ProfileBuilder> {
    let m = src.elements();
    let mut b = ProfileBuilder::new(2 * m + dummies)?;
    name_all(&mut b, 0, (0..m).map(|x| format!("x{x}")));
    name_all(&mut b, m, (0..m).map(|c| format!("set{c}")));
    name_all(&mut b, 2 * m, (0..dummies).map(|d| format!("dummy{d}")));
    Ok(b)
}

/// Adding under `consent(s, t)`, `s >= 2`.
///
/// `S` holds the elements and `T` adds `s - 2` dummies that qualify every
/// element. Element individuals qualify only themselves, set individuals
/// qualify their three elements, and `k = κ`.
pub fn rx3c_to_gcai_consent(src: &Rx3cInstance, s: u32, t: u32) -> Result<GcaiInstance> {
    if s < 2 {
        return Err(Error::input("the adding reduction needs s >= 2"));
    }
    let rule = RuleSpec::consent(s, t)?;
    let m = src.elements();
    let dummies = s as usize - 2;
    let mut b = rx3c_builder(src, dummies)?;
    for x in 0..m {
        b.set(x, x, true);
        for c in 0..m {
            b.set(m + c, x, src.set_contains(c, x));
        }
        for d in 0..dummies {
            b.set(2 * m + d, x, true);
        }
    }
    let n = b.n();
    let target = Subset::from_indices(n, 0..m)?;
    let society = Subset::from_indices(n, (0..m).chain(2 * m..n))?;
    GcaiInstance::new(b.build(), rule, target, society, src.kappa())
}

/// Deleting under `consent(s, t)`, `t >= 3`.
///
/// The adding profile for `s = 2` with every specified opinion reversed, so
/// each set individual disqualifies its three elements; `k = 2κ`. For
/// `t > 3`, `t - 3` dummies join `S`: each disqualifies itself and every
/// element and is qualified by everyone else.
pub fn rx3c_to_gcdi_consent(src: &Rx3cInstance, s: u32, t: u32) -> Result<GcdiInstance> {
    if t < 3 {
        return Err(Error::input("the deleting reduction needs t >= 3"));
    }
    let rule = RuleSpec::consent(s, t)?;
    let m = src.elements();
    let dummies = t as usize - 3;
    let mut b = rx3c_builder(src, dummies)?;
    let n = b.n();
    for x in 0..m {
        for y in 0..m {
            b.set(y, x, x != y);
        }
    }
    for c in m..2 * m {
        for x in 0..m {
            b.set(c, x, !src.set_contains(c - m, x));
        }
        for c2 in m..2 * m {
            b.set(c, c2, true);
        }
    }
    for d in 2 * m..n {
        for a in 0..n {
            b.set(a, d, a != d);
        }
    }
    let target = Subset::from_indices(n, (0..m).chain(2 * m..n))?;
    GcdiInstance::new(b.build(), rule, target, 2 * src.kappa())
}

/// Adding under the liberal-start rule: only set individuals qualify
/// themselves, each qualifies its own elements, elements qualify nobody.
pub fn rx3c_to_gcai_lsr(src: &Rx3cInstance) -> Result<GcaiInstance> {
    let m = src.elements();
    let mut b = rx3c_builder(src, 0)?;
    for c in 0..m {
        b.set(m + c, m + c, true);
        for x in 0..m {
            b.set(m + c, x, src.set_contains(c, x));
        }
    }
    let target = Subset::from_indices(2 * m, 0..m)?;
    GcaiInstance::new(
        b.build(),
        RuleSpec::Lsr,
        target.clone(),
        target,
        src.kappa(),
    )
}

/// Adding under the consensus-start rule: everybody qualifies every set
/// individual, set individuals qualify their own elements, elements qualify
/// no element.
pub fn rx3c_to_gcai_csr(src: &Rx3cInstance) -> Result<GcaiInstance> {
    let m = src.elements();
    let mut b = rx3c_builder(src, 0)?;
    for c in 0..m {
        for a in 0..2 * m {
            b.set(a, m + c, true);
        }
        for x in 0..m {
            b.set(m + c, x, src.set_contains(c, x));
        }
    }
    let target = Subset::from_indices(2 * m, 0..m)?;
    GcaiInstance::new(
        b.build(),
        RuleSpec::Csr,
        target.clone(),
        target,
        src.kappa(),
    )
}

/// Index layout of [`threesat_to_gcpi_consent`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SatLayout {
    /// `a(x,1)` for each variable.
    pub first: Range<usize>,
    /// `a(x,2)` for each variable.
    pub second: Range<usize>,
    /// One individual per clause, after padding.
    pub clauses: Range<usize>,
    /// `a(C)`, the formula individual.
    pub formula: usize,
    /// Dummies that belong to `S`.
    pub a1: Range<usize>,
    /// Dummies outside `S`.
    pub a2: Range<usize>,
}

impl SatLayout {
    pub fn new(src: &ThreeSatInstance, t: u32) -> Self {
        let vars = src.vars();
        let pad = (t as usize).saturating_sub(1);
        let clauses = src.clauses().len().max(pad);
        let formula = 2 * vars + clauses;
        let extra = (t as usize).saturating_sub(2);
        SatLayout {
            first: 0..vars,
            second: vars..2 * vars,
            clauses: 2 * vars..formula,
            formula,
            a1: formula + 1..formula + 1 + extra,
            a2: formula + 1 + extra..formula + 1 + 2 * extra,
        }
    }

    pub fn n(&self) -> usize {
        self.a2.end
    }

    pub fn dummies(&self) -> Range<usize> {
        self.a1.start..self.a2.end
    }
}

/// Partitioning under `consent(s, t)`, `t >= 2`.
///
/// Everybody disqualifies themselves. `a(x,2)` disqualifies `a(x,1)`; each
/// clause individual disqualifies `a(C)` and every `a(x,2)`; `a(C)`
/// disqualifies every `a(x,2)`; a positive literal `x` in clause `c` makes
/// `a(x,2)` disqualify `a(c)` and a negative one makes `a(x,1)` do so. All
/// other opinions are 1. `S` is every `a(x,1)` plus `a(C)`.
///
/// For `t >= 3` the formula is padded to `t - 1` clauses by repeating the
/// first clause, and `t - 2` dummies are added to `S` (`A1`) and `t - 2`
/// outside it (`A2`).
pub fn threesat_to_gcpi_consent(src: &ThreeSatInstance, s: u32, t: u32) -> Result<GcpiInstance> {
    if t < 2 {
        return Err(Error::input("the partitioning reduction needs t >= 2"));
    }
    let rule = RuleSpec::consent(s, t)?;
    let lay = SatLayout::new(src, t);
    let vars = src.vars();
    let n = lay.n();
    let mut b = ProfileBuilder::new(n)?;
    name_all(
        &mut b,
        lay.first.start,
        (0..vars).map(|x| format!("a(x{x},1)")),
    );
    name_all(
        &mut b,
        lay.second.start,
        (0..vars).map(|x| format!("a(x{x},2)")),
    );
    name_all(
        &mut b,
        lay.clauses.start,
        lay.clauses
            .clone()
            .map(|i| format!("a(c{})", i - lay.clauses.start)),
    );
    b.name(lay.formula, "a(C)")?;
    name_all(
        &mut b,
        lay.a1.start,
        (0..lay.a1.len()).map(|i| format!("a1({i})")),
    );
    name_all(
        &mut b,
        lay.a2.start,
        (0..lay.a2.len()).map(|i| format!("a2({i})")),
    );

    let core = 0..lay.formula + 1;
    for i in core.clone() {
        for j in core.clone() {
            b.set(i, j, i != j);
        }
    }
    for x in 0..vars {
        let (x1, x2) = (lay.first.start + x, lay.second.start + x);
        b.set(x2, x1, false);
        b.set(lay.formula, x2, false);
        for c in lay.clauses.clone() {
            b.set(c, x2, false);
        }
    }
    let first_clause = src.clauses()[0];
    for (k, c) in lay.clauses.clone().enumerate() {
        b.set(c, lay.formula, false);
        let clause = src.clauses().get(k).copied().unwrap_or(first_clause);
        for lit in clause {
            let voter = if lit.positive {
                lay.second.start
            } else {
                lay.first.start
            } + lit.var;
            b.set(voter, c, false);
        }
    }
    // the dummies: A1 ∪ A2 disqualify each other and everyone else; a(c)
    // disqualifies A1; the rest qualify A1 and disqualify A2
    for d in lay.dummies() {
        for a in core.clone() {
            let qualifies = lay.a1.contains(&d) && !lay.clauses.contains(&a);
            b.set(a, d, qualifies);
        }
    }

    let target = Subset::from_indices(
        n,
        lay.first.clone().chain([lay.formula]).chain(lay.a1.clone()),
    )?;
    GcpiInstance::new(b.build(), rule, target)
}

/// Index layout of [`lrbds_to_gcpi_consent`]: red vertices, blue vertices,
/// one individual `c_i` per label, `w`, then `s - 3` dummies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelLayout {
    pub red: Range<usize>,
    pub blue: Range<usize>,
    /// `labels.start + i - 1` is `c_i`.
    pub labels: Range<usize>,
    pub w: usize,
    pub dummies: Range<usize>,
}

impl LabelLayout {
    pub fn new(src: &LrbdsInstance, s: u32) -> Self {
        let red = 0..src.red();
        let blue = red.end..red.end + src.blue();
        let labels = blue.end..blue.end + src.k();
        let w = labels.end;
        let dummies = w + 1..w + 1 + (s as usize).saturating_sub(3);
        LabelLayout {
            red,
            blue,
            labels,
            w,
            dummies,
        }
    }

    pub fn n(&self) -> usize {
        self.dummies.end
    }
}

/// Partitioning under `consent(s, 2)`, `s >= 3`, with `S = {w}`.
///
/// Red individuals qualify `w`, the `c_i` of their own label, and every blue
/// individual they are not adjacent to. Blue individuals disqualify
/// themselves and `w`, and are qualified by all `c_i`. Each `c_i` qualifies
/// only itself among the `c`'s and disqualifies `w`. Dummies disqualify each
/// other and `w`, qualify everybody else, and are disqualified by everybody
/// else. The label count must be positive.
pub fn lrbds_to_gcpi_consent(src: &LrbdsInstance, s: u32) -> Result<GcpiInstance> {
    if s < 3 {
        return Err(Error::input(
            "the labeled partitioning reduction needs s >= 3",
        ));
    }
    if src.k() == 0 {
        return Err(Error::input(
            "the labeled partitioning reduction needs k >= 1",
        ));
    }
    let rule = RuleSpec::consent(s, 2)?;
    let lay = LabelLayout::new(src, s);
    let n = lay.n();
    let mut b = ProfileBuilder::new(n)?;
    name_all(
        &mut b,
        0,
        src.labels()
            .iter()
            .enumerate()
            .map(|(v, l)| format!("red{v}@{l}")),
    );
    name_all(
        &mut b,
        lay.blue.start,
        (0..src.blue()).map(|u| format!("blue{u}")),
    );
    name_all(
        &mut b,
        lay.labels.start,
        (1..=src.k()).map(|i| format!("c{i}")),
    );
    b.name(lay.w, "w")?;
    name_all(
        &mut b,
        lay.dummies.start,
        (0..lay.dummies.len()).map(|d| format!("dummy{d}")),
    );

    for (v, &label) in src.labels().iter().enumerate() {
        b.set(v, lay.w, true);
        b.set(v, lay.labels.start + label - 1, true);
        for u in lay.blue.clone() {
            b.set(v, u, true);
        }
    }
    for &(v, u) in src.edges() {
        b.set(v, lay.blue.start + u, false);
    }
    for u in lay.blue.clone() {
        for u2 in lay.blue.clone() {
            b.set(u, u2, u != u2);
        }
    }
    for c in lay.labels.clone() {
        b.set(c, c, true);
        for u in lay.blue.clone() {
            b.set(c, u, true);
        }
    }
    for d in lay.dummies.clone() {
        for x in 0..lay.w {
            b.set(d, x, true);
        }
    }

    let target = Subset::from_indices(n, [lay.w])?;
    GcpiInstance::new(b.build(), rule, target)
}

/// Replaces every red vertex `v` by `k` copies `v(1)..v(k)` with `v`'s
/// neighbourhood; copy `v(i)` gets label `i` and index `v * k + i - 1`.
pub fn rbds_to_lrbds(src: &RbdsInstance) -> Result<LrbdsInstance> {
    let k = src.k();
    let labels = (0..src.red()).flat_map(|_| 1..=k).collect();
    let edges = src
        .edges()
        .iter()
        .flat_map(|&(v, u)| (0..k).map(move |i| (v * k + i, u)))
        .collect();
    LrbdsInstance::new(k, labels, src.blue(), edges)
}
