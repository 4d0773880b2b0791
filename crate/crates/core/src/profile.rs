use crate::error::{Error, Result};
use crate::subset::Subset;

/// One member of a society, identified by its position in the fixed order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Individual<'a> {
    pub index: usize,
    pub display_name: Option<&'a str>,
}

/// An `n x n` opinion matrix: `phi(i, j)` is true when `i` qualifies `j`.
///
/// Rows ("whom does `i` qualify") and columns ("who qualifies `j`") are both
/// stored so that rule evaluation never scans the matrix entry by entry.
/// Profiles are immutable once built.
#[derive(Clone, PartialEq, Eq)]
pub struct Profile {
    rows: Vec<Subset>,
    cols: Vec<Subset>,
    names: Vec<Option<String>>,
}

impl Profile {
    /// Builds a profile from `phi(i, j)`.
    pub fn from_fn(n: usize, mut phi: impl FnMut(usize, usize) -> bool) -> Result<Self> {
        let mut b = ProfileBuilder::new(n)?;
        for i in 0..n {
            for j in 0..n {
                if phi(i, j) {
                    b.set(i, j, true);
                }
            }
        }
        Ok(b.build())
    }

    pub fn from_rows(rows: &[Vec<bool>]) -> Result<Self> {
        let n = rows.len();
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(Error::input(format!(
                "row {i} has {} entries, expected {n}",
                r.len()
            )));
        }
        Profile::from_fn(n, |i, j| rows[i][j])
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    /// Does `i` qualify `j`?
    #[inline]
    pub fn phi(&self, i: usize, j: usize) -> bool {
        self.rows[i].contains(j)
    }

    /// Everyone `i` qualifies.
    #[inline]
    pub fn qualified_by(&self, i: usize) -> &Subset {
        &self.rows[i]
    }

    /// Everyone who qualifies `j`.
    #[inline]
    pub fn qualifiers_of(&self, j: usize) -> &Subset {
        &self.cols[j]
    }

    pub fn self_qualifies(&self, i: usize) -> bool {
        self.phi(i, i)
    }

    pub fn name(&self, i: usize) -> Option<&str> {
        self.names[i].as_deref()
    }

    pub fn individual(&self, i: usize) -> Individual<'_> {
        Individual {
            index: i,
            display_name: self.name(i),
        }
    }

    pub fn individuals(&self) -> impl Iterator<Item = Individual<'_>> {
        (0..self.n()).map(|i| self.individual(i))
    }

    pub fn everyone(&self) -> Subset {
        Subset::full(self.n())
    }

    /// Returns a copy with one opinion changed.
    pub fn with_opinion(&self, i: usize, j: usize, value: bool) -> Profile {
        let mut p = self.clone();
        if value {
            p.rows[i].insert(j);
            p.cols[j].insert(i);
        } else {
            p.rows[i].remove(j);
            p.cols[j].remove(i);
        }
        p
    }

    /// Applies `perm` (new index of old individual `i` is `perm[i]`).
    pub fn permuted(&self, perm: &[usize]) -> Result<Profile> {
        let n = self.n();
        let mut seen = vec![false; n];
        if perm.len() != n
            || perm
                .iter()
                .any(|&p| p >= n || std::mem::replace(&mut seen[p], true))
        {
            return Err(Error::input("not a permutation of the individuals"));
        }
        let mut b = ProfileBuilder::new(n)?;
        for i in 0..n {
            for j in self.rows[i].iter() {
                b.set(perm[i], perm[j], true);
            }
            if let Some(name) = &self.names[i] {
                b.name(perm[i], name.clone())?;
            }
        }
        Ok(b.build())
    }
}

impl std::fmt::Debug for Profile {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Profile(n={})", self.n())?;
        for i in 0..self.n() {
            let row: String = (0..self.n())
                .map(|j| if self.phi(i, j) { '1' } else { '0' })
                .collect();
            writeln!(f, "  {row}")?;
        }
        Ok(())
    }
}

/// Mutable staging area for a [`Profile`]. Every opinion starts at 0.
#[derive(Debug, Clone)]
pub struct ProfileBuilder {
    rows: Vec<Subset>,
    names: Vec<Option<String>>,
}

impl ProfileBuilder {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::input("a profile needs at least one individual"));
        }
        Ok(ProfileBuilder {
            rows: vec![Subset::empty(n); n],
            names: vec![None; n],
        })
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) -> &mut Self {
        if value {
            self.rows[i].insert(j);
        } else {
            self.rows[i].remove(j);
        }
        self
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].contains(j)
    }

    /// Attaches a display name. Names are trimmed; an empty name clears it.
    pub fn name(&mut self, i: usize, name: impl Into<String>) -> Result<&mut Self> {
        let name = name.into();
        if name.contains(['\n', '\r']) {
            return Err(Error::input("individual names must be single-line"));
        }
        let trimmed = name.trim();
        self.names[i] = (!trimmed.is_empty()).then(|| trimmed.to_string());
        Ok(self)
    }

    pub fn build(self) -> Profile {
        let n = self.rows.len();
        let mut cols = vec![Subset::empty(n); n];
        for (i, row) in self.rows.iter().enumerate() {
            for j in row.iter() {
                cols[j].insert(i);
            }
        }
        Profile {
            rows: self.rows,
            cols,
            names: self.names,
        }
    }
}
