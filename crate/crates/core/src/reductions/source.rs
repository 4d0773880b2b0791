//! Source problems of the hardness reductions and exhaustive deciders for
//! them.

use itertools::Itertools;

use crate::error::{Error, Result};

/// Exhaustive oracles refuse to enumerate more than this many candidates.
pub const ORACLE_LIMIT: u128 = 1 << 24;

fn check_oracle(what: &'static str, count: u128) -> Result<()> {
    if count > ORACLE_LIMIT {
        return Err(Error::Resource {
            what,
            needed: format!("{count} candidates"),
            limit: format!("{ORACLE_LIMIT}"),
        });
    }
    Ok(())
}

fn binomial(n: usize, r: usize) -> u128 {
    (0..r as u128).fold(1u128, |acc, i| acc.saturating_mul(n as u128 - i) / (i + 1))
}

/// Exact cover by 3-sets where every element occurs in exactly three sets.
///
/// Elements are `0..3κ`. The collection is a list, so repeated sets are
/// allowed (with `κ = 1` they are unavoidable).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rx3cInstance {
    kappa: usize,
    sets: Vec<[usize; 3]>,
}

impl Rx3cInstance {
    pub fn new(kappa: usize, sets: Vec<[usize; 3]>) -> Result<Self> {
        if kappa == 0 {
            return Err(Error::input("kappa must be positive"));
        }
        let elements = 3 * kappa;
        if sets.len() != elements {
            return Err(Error::input(format!(
                "expected {elements} sets for kappa {kappa}, got {}",
                sets.len()
            )));
        }
        let mut occurrences = vec![0usize; elements];
        for (c, set) in sets.iter().enumerate() {
            if set.iter().any(|&x| x >= elements) {
                return Err(Error::input(format!(
                    "set {c} names an element outside 0..{elements}"
                )));
            }
            if set[0] == set[1] || set[0] == set[2] || set[1] == set[2] {
                return Err(Error::input(format!("set {c} repeats an element")));
            }
            for &x in set {
                occurrences[x] += 1;
            }
        }
        if let Some(x) = occurrences.iter().position(|&o| o != 3) {
            return Err(Error::input(format!(
                "element {x} occurs in {} sets, expected exactly 3",
                occurrences[x]
            )));
        }
        Ok(Rx3cInstance { kappa, sets })
    }

    pub fn kappa(&self) -> usize {
        self.kappa
    }

    /// Number of elements, `3κ`.
    pub fn elements(&self) -> usize {
        3 * self.kappa
    }

    pub fn sets(&self) -> &[[usize; 3]] {
        &self.sets
    }

    pub fn set_contains(&self, c: usize, x: usize) -> bool {
        self.sets[c].contains(&x)
    }
}

/// One literal: a variable and its polarity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal {
            var,
            positive: true,
        }
    }

    pub fn neg(var: usize) -> Self {
        Literal {
            var,
            positive: false,
        }
    }

    pub fn holds(self, assignment: &[bool]) -> bool {
        assignment[self.var] == self.positive
    }
}

/// 3-CNF formula: every clause has exactly three literals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreeSatInstance {
    vars: usize,
    clauses: Vec<[Literal; 3]>,
}

impl ThreeSatInstance {
    /// At least one clause is required; the empty formula makes every
    /// generated instance trivially qualified.
    pub fn new(vars: usize, clauses: Vec<[Literal; 3]>) -> Result<Self> {
        if clauses.is_empty() {
            return Err(Error::input("a formula needs at least one clause"));
        }
        for (c, clause) in clauses.iter().enumerate() {
            if let Some(l) = clause.iter().find(|l| l.var >= vars) {
                return Err(Error::input(format!(
                    "clause {c} uses variable {} but only {vars} are declared",
                    l.var
                )));
            }
        }
        Ok(ThreeSatInstance { vars, clauses })
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn clauses(&self) -> &[[Literal; 3]] {
        &self.clauses
    }

    pub fn satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses
            .iter()
            .all(|clause| clause.iter().any(|l| l.holds(assignment)))
    }
}

fn check_edges(red: usize, blue: usize, edges: &mut Vec<(usize, usize)>) -> Result<()> {
    if let Some(&(r, b)) = edges.iter().find(|&&(r, b)| r >= red || b >= blue) {
        return Err(Error::input(format!(
            "edge ({r}, {b}) outside {red} red and {blue} blue vertices"
        )));
    }
    edges.sort_unstable();
    edges.dedup();
    Ok(())
}

fn dominates(blue: usize, edges: &[(usize, usize)], chosen: &[bool]) -> bool {
    let mut covered = vec![false; blue];
    for &(r, b) in edges {
        if chosen[r] {
            covered[b] = true;
        }
    }
    covered.into_iter().all(|c| c)
}

/// Red-blue dominating set: pick at most `k` red vertices dominating every
/// blue vertex. Edges are (red, blue) pairs, kept sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RbdsInstance {
    red: usize,
    blue: usize,
    k: usize,
    edges: Vec<(usize, usize)>,
}

impl RbdsInstance {
    pub fn new(red: usize, blue: usize, k: usize, mut edges: Vec<(usize, usize)>) -> Result<Self> {
        check_edges(red, blue, &mut edges)?;
        Ok(RbdsInstance {
            red,
            blue,
            k,
            edges,
        })
    }

    pub fn red(&self) -> usize {
        self.red
    }
    pub fn blue(&self) -> usize {
        self.blue
    }
    pub fn k(&self) -> usize {
        self.k
    }
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }
}

/// Labeled red-blue dominating set: red vertex `v` carries label
/// `labels[v]` in `1..=k`; pick at most one red vertex per label so that
/// every blue vertex is dominated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LrbdsInstance {
    k: usize,
    labels: Vec<usize>,
    blue: usize,
    edges: Vec<(usize, usize)>,
}

impl LrbdsInstance {
    pub fn new(
        k: usize,
        labels: Vec<usize>,
        blue: usize,
        mut edges: Vec<(usize, usize)>,
    ) -> Result<Self> {
        if let Some(v) = labels.iter().position(|&l| l == 0 || l > k) {
            return Err(Error::input(format!(
                "red vertex {v} has label {}, expected 1..={k}",
                labels[v]
            )));
        }
        check_edges(labels.len(), blue, &mut edges)?;
        Ok(LrbdsInstance {
            k,
            labels,
            blue,
            edges,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }
    pub fn red(&self) -> usize {
        self.labels.len()
    }
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }
    pub fn blue(&self) -> usize {
        self.blue
    }
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Red vertices with label `label`, ascending.
    pub fn class(&self, label: usize) -> Vec<usize> {
        (0..self.labels.len())
            .filter(|&v| self.labels[v] == label)
            .collect()
    }
}

/// Enumerates `κ`-subsets of the collection and accepts exact covers.
pub fn oracle_rx3c(src: &Rx3cInstance) -> Result<bool> {
    let sets = src.sets();
    check_oracle("RX3C oracle", binomial(sets.len(), src.kappa()))?;
    Ok((0..sets.len()).combinations(src.kappa()).any(|pick| {
        let mut seen = vec![false; src.elements()];
        pick.iter()
            .flat_map(|&c| sets[c])
            .all(|x| !std::mem::replace(&mut seen[x], true))
    }))
}

/// Tries every truth assignment.
pub fn oracle_3sat(src: &ThreeSatInstance) -> Result<bool> {
    let vars = src.vars();
    if vars >= 64 {
        return Err(Error::Resource {
            what: "3-SAT oracle",
            needed: format!("2^{vars} assignments"),
            limit: format!("{ORACLE_LIMIT}"),
        });
    }
    check_oracle("3-SAT oracle", 1u128 << vars)?;
    let mut assignment = vec![false; vars];
    Ok((0u64..1 << vars).any(|mask| {
        for (i, a) in assignment.iter_mut().enumerate() {
            *a = mask >> i & 1 == 1;
        }
        src.satisfied_by(&assignment)
    }))
}

/// Tries every red subset of size at most `k`.
pub fn oracle_rbds(src: &RbdsInstance) -> Result<bool> {
    let red = src.red();
    let k = src.k().min(red);
    check_oracle(
        "RBDS oracle",
        (0..=k)
            .map(|r| binomial(red, r))
            .fold(0u128, u128::saturating_add),
    )?;
    let mut chosen = vec![false; red];
    for size in 0..=k {
        for pick in (0..red).combinations(size) {
            chosen.iter_mut().for_each(|c| *c = false);
            for v in pick {
                chosen[v] = true;
            }
            if dominates(src.blue(), src.edges(), &chosen) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Tries every choice of at most one red vertex per label.
pub fn oracle_lrbds(src: &LrbdsInstance) -> Result<bool> {
    let mut chosen = vec![false; src.red()];
    if src.k() == 0 {
        return Ok(dominates(src.blue(), src.edges(), &chosen));
    }
    let classes: Vec<Vec<Option<usize>>> = (1..=src.k())
        .map(|l| {
            std::iter::once(None)
                .chain(src.class(l).into_iter().map(Some))
                .collect()
        })
        .collect();
    check_oracle(
        "LRBDS oracle",
        classes
            .iter()
            .fold(1u128, |acc, c| acc.saturating_mul(c.len() as u128)),
    )?;
    for pick in classes.iter().multi_cartesian_product() {
        chosen.iter_mut().for_each(|c| *c = false);
        for v in pick.into_iter().flatten() {
            chosen[*v] = true;
        }
        if dominates(src.blue(), src.edges(), &chosen) {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triple() -> Rx3cInstance {
        Rx3cInstance::new(1, vec![[0, 1, 2]; 3]).unwrap()
    }

    #[test]
    fn rx3c_validation() {
        assert!(Rx3cInstance::new(1, vec![[0, 1, 2], [0, 1, 2]]).is_err());
        assert!(Rx3cInstance::new(1, vec![[0, 1, 2], [0, 1, 2], [0, 1, 1]]).is_err());
        assert!(Rx3cInstance::new(1, vec![[0, 1, 2], [0, 1, 2], [0, 1, 3]]).is_err());
        assert!(Rx3cInstance::new(0, vec![]).is_err());
    }

    #[test]
    fn rx3c_oracle() {
        assert!(oracle_rx3c(&triple()).unwrap());
        // every set overlaps every other: no two disjoint sets exist
        let sets = vec![
            [0, 1, 2],
            [0, 3, 4],
            [0, 1, 5],
            [1, 3, 4],
            [2, 3, 5],
            [2, 4, 5],
        ];
        let no = Rx3cInstance::new(2, sets).unwrap();
        assert!(!oracle_rx3c(&no).unwrap());
        let sets = vec![
            [0, 1, 2],
            [3, 4, 5],
            [0, 1, 3],
            [2, 4, 5],
            [0, 1, 4],
            [2, 3, 5],
        ];
        assert!(oracle_rx3c(&Rx3cInstance::new(2, sets).unwrap()).unwrap());
    }

    #[test]
    fn sat_oracle() {
        let x = Literal::pos(0);
        let nx = Literal::neg(0);
        let yes = ThreeSatInstance::new(1, vec![[x, x, x]]).unwrap();
        let no = ThreeSatInstance::new(1, vec![[x, x, x], [nx, nx, nx]]).unwrap();
        assert!(oracle_3sat(&yes).unwrap());
        assert!(!oracle_3sat(&no).unwrap());
        assert!(ThreeSatInstance::new(1, vec![[x, x, Literal::pos(1)]]).is_err());
        assert!(ThreeSatInstance::new(1, vec![]).is_err());
    }

    #[test]
    fn rbds_oracle() {
        let yes = RbdsInstance::new(2, 2, 1, vec![(0, 0), (0, 1), (1, 1)]).unwrap();
        let no = RbdsInstance::new(2, 2, 1, vec![(0, 0), (1, 1)]).unwrap();
        assert!(oracle_rbds(&yes).unwrap());
        assert!(!oracle_rbds(&no).unwrap());
        assert!(oracle_rbds(&RbdsInstance::new(0, 0, 0, vec![]).unwrap()).unwrap());
        assert!(!oracle_rbds(&RbdsInstance::new(1, 1, 0, vec![(0, 0)]).unwrap()).unwrap());
        assert!(RbdsInstance::new(1, 1, 1, vec![(1, 0)]).is_err());
    }

    #[test]
    fn lrbds_oracle() {
        // two red vertices with the same label cannot both be picked
        let no = LrbdsInstance::new(2, vec![1, 1], 2, vec![(0, 0), (1, 1)]).unwrap();
        let yes = LrbdsInstance::new(2, vec![1, 2], 2, vec![(0, 0), (1, 1)]).unwrap();
        assert!(!oracle_lrbds(&no).unwrap());
        assert!(oracle_lrbds(&yes).unwrap());
        assert!(oracle_lrbds(&LrbdsInstance::new(0, vec![], 0, vec![]).unwrap()).unwrap());
        assert!(oracle_lrbds(&LrbdsInstance::new(1, vec![1], 0, vec![]).unwrap()).unwrap());
        assert!(!oracle_lrbds(&LrbdsInstance::new(0, vec![], 1, vec![]).unwrap()).unwrap());
        assert!(LrbdsInstance::new(1, vec![2], 0, vec![]).is_err());
    }
}
