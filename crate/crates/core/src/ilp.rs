//! Bounded integer linear feasibility.
//!
//! Systems are small (a handful of variables with bounds at most the society
//! size), so the engine is a depth-first search in caller-given variable
//! order. Before each branch every constraint tightens the domains of its
//! variables against its most optimistic slack; a domain that empties
//! prunes the subtree. Values are tried in ascending order, so the first
//! assignment found is the lexicographically smallest feasible one.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearConstraint {
    pub coeffs: Vec<i64>,
    pub relation: Relation,
    pub rhs: i64,
}

impl LinearConstraint {
    fn activity(&self, values: &[i64]) -> i128 {
        self.coeffs
            .iter()
            .zip(values)
            .map(|(&a, &x)| a as i128 * x as i128)
            .sum()
    }

    pub fn holds(&self, values: &[i64]) -> bool {
        let lhs = self.activity(values);
        match self.relation {
            Relation::Le => lhs <= self.rhs as i128,
            Relation::Ge => lhs >= self.rhs as i128,
        }
    }
}

/// Variables with inclusive integer bounds plus linear `<=`/`>=` rows.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FeasibilitySystem {
    bounds: Vec<(i64, i64)>,
    constraints: Vec<LinearConstraint>,
}

/// Largest magnitude any bound, coefficient or right-hand side may have.
/// Keeps every activity computation far inside `i128`.
pub const MAX_MAGNITUDE: i64 = 1 << 40;

impl FeasibilitySystem {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a variable with `lower <= x <= upper` and returns its position.
    pub fn add_var(&mut self, lower: i64, upper: i64) -> Result<usize> {
        if lower > upper {
            return Err(Error::input(format!("empty bounds [{lower}, {upper}]")));
        }
        if lower.unsigned_abs() > MAX_MAGNITUDE as u64
            || upper.unsigned_abs() > MAX_MAGNITUDE as u64
        {
            return Err(Error::input(
                "variable bound exceeds the engine's integer width",
            ));
        }
        if !self.constraints.is_empty() {
            return Err(Error::input(
                "add all variables before the first constraint",
            ));
        }
        self.bounds.push((lower, upper));
        Ok(self.bounds.len() - 1)
    }

    pub fn add_constraint(&mut self, coeffs: Vec<i64>, relation: Relation, rhs: i64) -> Result<()> {
        if coeffs.len() != self.bounds.len() {
            return Err(Error::input(format!(
                "constraint has {} coefficients for {} variables",
                coeffs.len(),
                self.bounds.len()
            )));
        }
        if rhs.unsigned_abs() > MAX_MAGNITUDE as u64
            || coeffs
                .iter()
                .any(|c| c.unsigned_abs() > MAX_MAGNITUDE as u64)
        {
            return Err(Error::input(
                "coefficient exceeds the engine's integer width",
            ));
        }
        self.constraints.push(LinearConstraint {
            coeffs,
            relation,
            rhs,
        });
        Ok(())
    }

    pub fn num_vars(&self) -> usize {
        self.bounds.len()
    }

    pub fn bounds(&self) -> &[(i64, i64)] {
        &self.bounds
    }

    pub fn constraints(&self) -> &[LinearConstraint] {
        &self.constraints
    }

    /// Independent validator: are `values` within bounds and feasible?
    pub fn satisfied_by(&self, values: &[i64]) -> bool {
        values.len() == self.bounds.len()
            && values
                .iter()
                .zip(&self.bounds)
                .all(|(&x, &(lo, hi))| lo <= x && x <= hi)
            && self.constraints.iter().all(|c| c.holds(values))
    }
}

impl fmt::Display for FeasibilitySystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (lo, hi)) in self.bounds.iter().enumerate() {
            writeln!(f, "{lo} <= x{i} <= {hi}")?;
        }
        for c in &self.constraints {
            let mut first = true;
            for (i, &a) in c.coeffs.iter().enumerate().filter(|(_, &a)| a != 0) {
                match (first, a < 0) {
                    (true, true) => f.write_str("-")?,
                    (true, false) => {}
                    (false, true) => f.write_str(" - ")?,
                    (false, false) => f.write_str(" + ")?,
                }
                match a.abs() {
                    1 => write!(f, "x{i}")?,
                    mag => write!(f, "{mag}*x{i}")?,
                }
                first = false;
            }
            if first {
                f.write_str("0")?;
            }
            let rel = match c.relation {
                Relation::Le => "<=",
                Relation::Ge => ">=",
            };
            writeln!(f, " {rel} {}", c.rhs)?;
        }
        Ok(())
    }
}

/// A satisfying assignment, one value per variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment {
    pub values: Vec<i64>,
}

/// Constraint normalised to `sum a_j x_j <= b`.
struct Row {
    coeffs: Vec<(usize, i128)>,
    rhs: i128,
}

/// Returns the lexicographically smallest feasible assignment, if any.
pub fn feasible(sys: &FeasibilitySystem) -> Result<Option<Assignment>> {
    let rows: Vec<Row> = sys
        .constraints
        .iter()
        .map(|c| {
            let sign: i128 = match c.relation {
                Relation::Le => 1,
                Relation::Ge => -1,
            };
            Row {
                coeffs: c
                    .coeffs
                    .iter()
                    .enumerate()
                    .filter(|(_, &a)| a != 0)
                    .map(|(j, &a)| (j, sign * a as i128))
                    .collect(),
                rhs: sign * c.rhs as i128,
            }
        })
        .collect();
    let domain: Vec<(i128, i128)> = sys
        .bounds
        .iter()
        .map(|&(lo, hi)| (lo as i128, hi as i128))
        .collect();
    let found = search(&rows, domain);
    let found = found.map(|d| Assignment {
        values: d.into_iter().map(|(lo, _)| lo as i64).collect(),
    });
    if let Some(a) = &found {
        debug_assert!(sys.satisfied_by(&a.values));
    }
    Ok(found)
}

fn search(rows: &[Row], mut domain: Vec<(i128, i128)>) -> Option<Vec<(i128, i128)>> {
    if !propagate(rows, &mut domain) {
        return None;
    }
    let Some(var) = domain.iter().position(|(lo, hi)| lo < hi) else {
        return Some(domain);
    };
    let (lo, hi) = domain[var];
    for value in lo..=hi {
        let mut child = domain.clone();
        child[var] = (value, value);
        if let Some(done) = search(rows, child) {
            return Some(done);
        }
    }
    None
}

/// Bound tightening to a fixpoint. Returns false on an empty domain.
fn propagate(rows: &[Row], domain: &mut [(i128, i128)]) -> bool {
    loop {
        let mut changed = false;
        for row in rows {
            let min_activity: i128 = row
                .coeffs
                .iter()
                .map(|&(j, a)| {
                    if a > 0 {
                        a * domain[j].0
                    } else {
                        a * domain[j].1
                    }
                })
                .sum();
            if min_activity > row.rhs {
                return false;
            }
            for &(j, a) in &row.coeffs {
                let own = if a > 0 {
                    a * domain[j].0
                } else {
                    a * domain[j].1
                };
                let slack = row.rhs - (min_activity - own);
                let (lo, hi) = &mut domain[j];
                if a > 0 {
                    let cap = slack.div_euclid(a);
                    if cap < *hi {
                        *hi = cap;
                        changed = true;
                    }
                } else {
                    // a*x <= slack with a < 0  =>  x >= ceil(slack / a)
                    let floor = -(slack.div_euclid(-a));
                    if floor > *lo {
                        *lo = floor;
                        changed = true;
                    }
                }
                if lo > hi {
                    return false;
                }
            }
        }
        if !changed {
            return true;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_var_lower_bound() {
        let mut sys = FeasibilitySystem::new();
        sys.add_var(0, 3).unwrap();
        sys.add_constraint(vec![1], Relation::Ge, 2).unwrap();
        assert_eq!(feasible(&sys).unwrap().unwrap().values, vec![2]);
    }

    #[test]
    fn budget_contradiction() {
        let mut sys = FeasibilitySystem::new();
        sys.add_var(0, 2).unwrap();
        sys.add_var(0, 2).unwrap();
        sys.add_constraint(vec![1, 1], Relation::Le, 1).unwrap();
        sys.add_constraint(vec![1, 0], Relation::Ge, 1).unwrap();
        sys.add_constraint(vec![0, 1], Relation::Ge, 1).unwrap();
        assert_eq!(feasible(&sys).unwrap(), None);
    }

    #[test]
    fn negative_coefficients_and_bounds() {
        // -x + 2y >= 3, x in [-4, 4], y in [-1, 2]; smallest x is -4 with y = 0.
        let mut sys = FeasibilitySystem::new();
        sys.add_var(-4, 4).unwrap();
        sys.add_var(-1, 2).unwrap();
        sys.add_constraint(vec![-1, 2], Relation::Ge, 3).unwrap();
        let a = feasible(&sys).unwrap().unwrap();
        assert_eq!(a.values, vec![-4, 0]);
        assert!(sys.satisfied_by(&a.values));
    }

    #[test]
    fn no_variables() {
        let mut sys = FeasibilitySystem::new();
        assert_eq!(feasible(&sys).unwrap().unwrap().values, Vec::<i64>::new());
        sys.add_constraint(vec![], Relation::Ge, 1).unwrap();
        assert_eq!(feasible(&sys).unwrap(), None);
    }

    #[test]
    fn malformed_systems_rejected() {
        let mut sys = FeasibilitySystem::new();
        assert!(sys.add_var(2, 1).is_err());
        sys.add_var(0, 1).unwrap();
        assert!(sys.add_constraint(vec![1, 1], Relation::Le, 0).is_err());
        assert!(sys.add_var(0, i64::MAX).is_err());
        assert!(sys.add_constraint(vec![i64::MIN], Relation::Le, 0).is_err());
    }

    #[test]
    fn display_is_readable() {
        let mut sys = FeasibilitySystem::new();
        sys.add_var(0, 2).unwrap();
        sys.add_var(0, 1).unwrap();
        sys.add_constraint(vec![1, -1], Relation::Ge, 0).unwrap();
        sys.add_constraint(vec![0, 3], Relation::Le, 2).unwrap();
        let text = sys.to_string();
        assert!(text.contains("0 <= x0 <= 2"));
        assert!(text.contains("x0 - x1 >= 0"));
        assert!(text.contains("3*x1 <= 2"));
    }
}
