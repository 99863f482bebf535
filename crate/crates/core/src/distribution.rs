//! Multisets of descent sets: the finite model of a quasisymmetric
//! generating function.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::SignedPerm;
use crate::shapes::SignedSet;
use crate::tableau::{des_tableau, sdes_bitableau, Bitableau, Tableau};

/// Counts of signed descent sets `σ ∈ Σ^B(n)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct DescentDistributionB {
    n: usize,
    counts: BTreeMap<SignedSet, u64>,
}

/// One JSON entry `{"word": "...", "count": k}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WordCount {
    pub word: String,
    pub count: u64,
}

impl DescentDistributionB {
    pub fn new(n: usize) -> Self {
        DescentDistributionB {
            n,
            counts: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add(&mut self, sigma: SignedSet, count: u64) -> Result<()> {
        if sigma.n() != self.n {
            return Err(Error::SizeMismatch(self.n, sigma.n()));
        }
        if count > 0 {
            *self.counts.entry(sigma).or_default() += count;
        }
        Ok(())
    }

    /// Distribution of `sDes(w)` over a family of signed permutations.
    pub fn from_perms<'a>(
        n: usize,
        family: impl IntoIterator<Item = &'a SignedPerm>,
    ) -> Result<Self> {
        let mut d = Self::new(n);
        for w in family {
            d.add(w.sdes(), 1)?;
        }
        Ok(d)
    }

    pub fn from_bitableaux<'a>(
        n: usize,
        family: impl IntoIterator<Item = &'a Bitableau>,
    ) -> Result<Self> {
        let mut d = Self::new(n);
        for q in family {
            d.add(sdes_bitableau(q)?, 1)?;
        }
        Ok(d)
    }

    pub fn from_word_counts(n: usize, entries: &[WordCount]) -> Result<Self> {
        let mut d = Self::new(n);
        for e in entries {
            d.add(SignedSet::word_decode(&e.word)?, e.count)?;
        }
        Ok(d)
    }

    pub fn to_word_counts(&self) -> Vec<WordCount> {
        self.counts
            .iter()
            .map(|(s, &count)| WordCount {
                word: s.word_string(),
                count,
            })
            .collect()
    }

    pub fn get(&self, sigma: &SignedSet) -> u64 {
        self.counts.get(sigma).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&SignedSet, u64)> {
        self.counts.iter().map(|(s, &c)| (s, c))
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn merge(&mut self, other: &Self) -> Result<()> {
        for (s, c) in other.iter() {
            self.add(s.clone(), c)?;
        }
        Ok(())
    }
}

/// Counts of descent sets `D ⊆ [n−1]`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct DescentDistributionA {
    n: usize,
    counts: BTreeMap<Vec<usize>, u64>,
}

/// One JSON entry `{"descents": [...], "count": k}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DescentCount {
    pub descents: Vec<usize>,
    pub count: u64,
}

impl DescentDistributionA {
    pub fn new(n: usize) -> Self {
        DescentDistributionA {
            n,
            counts: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add(&mut self, mut descents: Vec<usize>, count: u64) -> Result<()> {
        descents.sort_unstable();
        descents.dedup();
        if descents.iter().any(|&d| d == 0 || d >= self.n.max(1)) {
            return Err(Error::InvalidShape(format!(
                "{descents:?} is not a subset of [{}]",
                self.n.saturating_sub(1)
            )));
        }
        if count > 0 {
            *self.counts.entry(descents).or_default() += count;
        }
        Ok(())
    }

    /// Distribution of `Des(w)` over unsigned permutations.
    pub fn from_perms<'a>(
        n: usize,
        family: impl IntoIterator<Item = &'a SignedPerm>,
    ) -> Result<Self> {
        let mut d = Self::new(n);
        for w in family {
            if !w.is_unsigned() {
                return Err(Error::SignedInput(w.to_string()));
            }
            d.add(w.des(), 1)?;
        }
        Ok(d)
    }

    /// Distribution of `descents(w)` for an arbitrary descent map.
    pub fn from_map<'a>(
        n: usize,
        family: impl IntoIterator<Item = &'a SignedPerm>,
        descents: impl Fn(&SignedPerm) -> Vec<usize>,
    ) -> Result<Self> {
        let mut d = Self::new(n);
        for w in family {
            d.add(descents(w), 1)?;
        }
        Ok(d)
    }

    pub fn from_tableaux<'a>(
        n: usize,
        family: impl IntoIterator<Item = &'a Tableau>,
    ) -> Result<Self> {
        let mut d = Self::new(n);
        for q in family {
            d.add(des_tableau(q)?, 1)?;
        }
        Ok(d)
    }

    pub fn from_descent_counts(n: usize, entries: &[DescentCount]) -> Result<Self> {
        let mut d = Self::new(n);
        for e in entries {
            d.add(e.descents.clone(), e.count)?;
        }
        Ok(d)
    }

    pub fn get(&self, descents: &[usize]) -> u64 {
        self.counts.get(descents).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<usize>, u64)> {
        self.counts.iter().map(|(s, &c)| (s, c))
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::enumerate_bn;

    #[test]
    fn builds_and_rejects() {
        let all: Vec<_> = enumerate_bn(2).unwrap().collect();
        let d = DescentDistributionB::from_perms(2, &all).unwrap();
        assert_eq!(d.total(), 8);
        assert_eq!(d.iter().count(), 6);
        let mut bad = DescentDistributionB::new(3);
        assert!(bad.add(SignedSet::word_decode("0").unwrap(), 1).is_err());
        let mut a = DescentDistributionA::new(3);
        assert!(a.add(vec![3], 1).is_err());
        assert!(a.add(vec![2, 1], 1).is_ok());
        assert_eq!(a.get(&[1, 2]), 1);
    }

    #[test]
    fn word_count_roundtrip() {
        let all: Vec<_> = enumerate_bn(3).unwrap().collect();
        let d = DescentDistributionB::from_perms(3, &all).unwrap();
        let back = DescentDistributionB::from_word_counts(3, &d.to_word_counts()).unwrap();
        assert_eq!(back, d);
    }
}
