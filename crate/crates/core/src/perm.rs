//! Signed permutations of `[n]`, the group structure of `B_n` and the
//! permutation statistics built on the order `1̄ < 2̄ < … < n̄ < 1 < … < n`.
//!
//! A barred letter `ī` is stored as the negative integer `-i`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::{Partition, Sign, SignedSet};

/// Default upper bound on `n` for exhaustive enumeration.
pub const DEFAULT_MAX_N: usize = 8;

/// Enumeration bound, overridable through `HYPEROCT_MAX_N`.
pub fn max_n() -> usize {
    std::env::var("HYPEROCT_MAX_N")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_N)
}

pub(crate) fn check_bound(n: usize) -> Result<()> {
    let bound = max_n();
    if n > bound {
        Err(Error::BoundExceeded { n, bound })
    } else {
        Ok(())
    }
}

/// Compares two letters of `Ω_n` in the order where every barred letter
/// precedes every unbarred one and each block is ordered by absolute value.
#[inline]
pub fn cmp_r(a: i32, b: i32) -> Ordering {
    ((a > 0), a.unsigned_abs()).cmp(&((b > 0), b.unsigned_abs()))
}

/// An element of the hyperoctahedral group `B_n`, given by its window
/// `(w(1), …, w(n))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i32>", into = "Vec<i32>")]
pub struct SignedPerm {
    window: Vec<i32>,
}

impl TryFrom<Vec<i32>> for SignedPerm {
    type Error = Error;

    fn try_from(window: Vec<i32>) -> Result<Self> {
        SignedPerm::new(window)
    }
}

impl From<SignedPerm> for Vec<i32> {
    fn from(w: SignedPerm) -> Self {
        w.window
    }
}

impl fmt::Debug for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.window.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

impl SignedPerm {
    pub fn new(window: Vec<i32>) -> Result<Self> {
        let n = window.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty window".into()));
        }
        let mut seen = vec![false; n + 1];
        for &v in &window {
            let a = v.unsigned_abs() as usize;
            if v == 0 || a > n || seen[a] {
                return Err(Error::InvalidPermutation(format!("{window:?}")));
            }
            seen[a] = true;
        }
        Ok(SignedPerm { window })
    }

    pub fn identity(n: usize) -> Self {
        SignedPerm {
            window: (1..=n as i32).collect(),
        }
    }

    /// The longest element `w(i) = -i`.
    pub fn longest(n: usize) -> Self {
        SignedPerm {
            window: (1..=n as i32).map(|v| -v).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.window.len()
    }

    pub fn is_empty(&self) -> bool {
        self.window.is_empty()
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    /// `w(a)` for any nonzero `a` with `|a| ≤ n`, extended by `w(-a) = -w(a)`.
    #[inline]
    pub fn apply(&self, a: i32) -> i32 {
        let v = self.window[a.unsigned_abs() as usize - 1];
        if a > 0 {
            v
        } else {
            -v
        }
    }

    pub fn is_unsigned(&self) -> bool {
        self.window.iter().all(|&v| v > 0)
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &SignedPerm) -> Result<SignedPerm> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch(self.len(), other.len()));
        }
        Ok(SignedPerm {
            window: other.window.iter().map(|&v| self.apply(v)).collect(),
        })
    }

    pub fn inverse(&self) -> SignedPerm {
        let mut window = vec![0; self.len()];
        for (i, &v) in self.window.iter().enumerate() {
            let pos = i as i32 + 1;
            window[v.unsigned_abs() as usize - 1] = if v > 0 { pos } else { -pos };
        }
        SignedPerm { window }
    }

    /// `w^k`; negative exponents use the inverse.
    pub fn power(&self, k: i64) -> SignedPerm {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut acc = SignedPerm::identity(self.len());
        let mut sq = base;
        let mut e = k.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = sq.compose(&acc).expect("equal lengths");
            }
            sq = sq.compose(&sq).expect("equal lengths");
            e >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.window
            .iter()
            .enumerate()
            .all(|(i, &v)| v == i as i32 + 1)
    }

    pub fn is_involution(&self) -> bool {
        self.window
            .iter()
            .enumerate()
            .all(|(i, &v)| self.apply(v) == i as i32 + 1)
    }

    /// `|w|` as an unsigned permutation.
    pub fn abs(&self) -> SignedPerm {
        SignedPerm {
            window: self.window.iter().map(|v| v.abs()).collect(),
        }
    }

    pub fn signs(&self) -> Vec<Sign> {
        self.window.iter().map(|&v| Sign::of(v)).collect()
    }

    /// Descent positions (1-based) with respect to `cmp_r`.
    pub fn des(&self) -> Vec<usize> {
        self.window
            .windows(2)
            .enumerate()
            .filter(|(_, p)| cmp_r(p[0], p[1]) == Ordering::Greater)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Descent positions with respect to the usual order on integers.
    pub fn des_natural(&self) -> Vec<usize> {
        self.window
            .windows(2)
            .enumerate()
            .filter(|(_, p)| p[0] > p[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// The signed descent set: descents of `|w|`, sign changes and `n`,
    /// each position carrying the sign of its letter.
    pub fn sdes(&self) -> SignedSet {
        let n = self.len();
        let mut marks = Vec::with_capacity(n);
        for i in 0..n {
            let here = self.window[i];
            let in_set = if i + 1 == n {
                true
            } else {
                let next = self.window[i + 1];
                here.abs() > next.abs() || (here > 0) != (next > 0)
            };
            marks.push(in_set.then(|| Sign::of(here)));
        }
        SignedSet::from_marks(marks).expect("last position always marked")
    }

    pub fn inv(&self) -> usize {
        let w = &self.window;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if cmp_r(w[i], w[j]) == Ordering::Greater {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn maj(&self) -> usize {
        self.des().iter().sum()
    }

    /// Number of barred letters.
    pub fn bar(&self) -> usize {
        self.window.iter().filter(|&&v| v < 0).count()
    }

    /// Flag-inversion number `2·inv + bar`.
    pub fn finv(&self) -> usize {
        2 * self.inv() + self.bar()
    }

    /// Flag-major index `2·maj + bar`.
    pub fn fmaj(&self) -> usize {
        2 * self.maj() + self.bar()
    }

    /// Coxeter length in `B_n`: natural-order inversions plus the sum of
    /// the absolute values of the negative entries.
    pub fn length_b(&self) -> usize {
        let w = &self.window;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
            + w.iter()
                .filter(|&&v| v < 0)
                .map(|v| v.unsigned_abs() as usize)
                .sum::<usize>()
    }

    pub fn fixed_points(&self) -> usize {
        self.window
            .iter()
            .enumerate()
            .filter(|(i, &v)| v == *i as i32 + 1)
            .count()
    }

    pub fn cycle_type(&self) -> SignedCycleType {
        let n = self.len();
        let mut seen = vec![false; n + 1];
        let mut positive = Vec::new();
        let mut negative = Vec::new();
        for start in 1..=n as i32 {
            if seen[start as usize] {
                continue;
            }
            let mut a = start;
            let mut steps = 0;
            let negative_cycle = loop {
                seen[a.unsigned_abs() as usize] = true;
                a = self.apply(a);
                steps += 1;
                if a == start {
                    break false;
                }
                if a == -start {
                    break true;
                }
            };
            if negative_cycle {
                negative.push(steps);
            } else {
                positive.push(steps);
            }
        }
        SignedCycleType {
            positive: Partition::from_unsorted(positive),
            negative: Partition::from_unsorted(negative),
        }
    }
}

/// Pair of partitions `(α, β)` recording the lengths of the positive and
/// negative cycles.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedCycleType {
    pub positive: Partition,
    pub negative: Partition,
}

impl SignedCycleType {
    pub fn into_bipartition(self) -> crate::shapes::Bipartition {
        crate::shapes::Bipartition::new(self.positive, self.negative)
    }
}

/// Lexicographic stream over the windows of `B_n`.
#[derive(Clone, Debug)]
pub struct SignedPermIter {
    current: Option<Vec<i32>>,
    used: Vec<bool>,
    unsigned_only: bool,
}

impl SignedPermIter {
    fn new(n: usize, unsigned_only: bool) -> Self {
        let start: Vec<i32> = if unsigned_only {
            (1..=n as i32).collect()
        } else {
            (1..=n as i32).rev().map(|v| -v).collect()
        };
        let mut used = vec![true; n + 1];
        used[0] = false;
        SignedPermIter {
            current: Some(start),
            used,
            unsigned_only,
        }
    }

    fn advance(&mut self) -> bool {
        let n = self.used.len() as i32 - 1;
        let lo = if self.unsigned_only { 1 } else { -n };
        let w = self
            .current
            .as_mut()
            .expect("advance on exhausted iterator");
        for i in (0..w.len()).rev() {
            self.used[w[i].unsigned_abs() as usize] = false;
            let next = (w[i] + 1..=n)
                .filter(|&v| v >= lo && v != 0)
                .find(|&v| !self.used[v.unsigned_abs() as usize]);
            if let Some(v) = next {
                w[i] = v;
                self.used[v.unsigned_abs() as usize] = true;
                for slot in w.iter_mut().skip(i + 1) {
                    let v = smallest_free(&self.used, self.unsigned_only);
                    *slot = v;
                    self.used[v.unsigned_abs() as usize] = true;
                }
                return true;
            }
        }
        false
    }
}

fn smallest_free(used: &[bool], unsigned_only: bool) -> i32 {
    let n = used.len() as i32 - 1;
    let free = |a: &i32| !used[*a as usize];
    if unsigned_only {
        (1..=n).find(free).expect("a free letter remains")
    } else {
        -(1..=n).rev().find(free).expect("a free letter remains")
    }
}

impl Iterator for SignedPermIter {
    type Item = SignedPerm;

    fn next(&mut self) -> Option<SignedPerm> {
        let out = self.current.clone()?;
        if !self.advance() {
            self.current = None;
        }
        Some(SignedPerm { window: out })
    }
}

/// All `2^n·n!` elements of `B_n` in lexicographic window order.
pub fn enumerate_bn(n: usize) -> Result<SignedPermIter> {
    check_bound(n)?;
    Ok(SignedPermIter::new(n, false))
}

/// All `n!` elements of `S_n` (unsigned windows) in lexicographic order.
pub fn enumerate_sn(n: usize) -> Result<SignedPermIter> {
    check_bound(n)?;
    Ok(SignedPermIter::new(n, true))
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

pub fn order_bn(n: usize) -> u64 {
    (1u64 << n) * factorial(n)
}


#[cfg(test)]
mod tests {
    use std::collections::{HashMap, HashSet, VecDeque};

    use proptest::prelude::*;

    use super::testing::{arb_perm, arb_sized_perm};
    use super::*;

    fn p(w: &[i32]) -> SignedPerm {
        SignedPerm::new(w.to_vec()).unwrap()
    }

    /// Word length in the generators `s_0 = (-1, 2, …)` and the adjacent
    /// transpositions, by breadth-first search from the identity.
    fn coxeter_lengths(n: usize) -> HashMap<SignedPerm, usize> {
        let mut gens = vec![{
            let mut w: Vec<i32> = (1..=n as i32).collect();
            w[0] = -1;
            p(&w)
        }];
        for i in 0..n - 1 {
            let mut w: Vec<i32> = (1..=n as i32).collect();
            w.swap(i, i + 1);
            gens.push(p(&w));
        }
        let mut dist = HashMap::from([(SignedPerm::identity(n), 0)]);
        let mut queue = VecDeque::from([SignedPerm::identity(n)]);
        while let Some(w) = queue.pop_front() {
            let d = dist[&w];
            for g in &gens {
                let next = w.compose(g).unwrap();
                if !dist.contains_key(&next) {
                    dist.insert(next.clone(), d + 1);
                    queue.push_back(next);
                }
            }
        }
        dist
    }

    #[test]
    fn rejects_bad_windows() {
        assert!(SignedPerm::new(vec![]).is_err());
        assert!(SignedPerm::new(vec![1, 1]).is_err());
        assert!(SignedPerm::new(vec![1, -1]).is_err());
        assert!(SignedPerm::new(vec![0, 1]).is_err());
        assert!(SignedPerm::new(vec![1, 3]).is_err());
        assert!(p(&[1, 2]).compose(&p(&[1])).is_err());
    }

    #[test]
    fn identity_and_group_basics() {
        assert_eq!(SignedPerm::identity(3).window(), &[1, 2, 3]);
        assert_eq!(SignedPerm::identity(1).window(), &[1]);
        assert_eq!(p(&[2, 1]).inverse(), p(&[2, 1]));
        assert_eq!(p(&[-2, 1]).inverse(), p(&[2, -1]));
        assert_eq!(p(&[-1]).power(2), p(&[1]));
        assert_eq!(p(&[2, -1]).power(0), SignedPerm::identity(2));
        assert_eq!(p(&[2, -1]).power(4), SignedPerm::identity(2));
        assert_eq!(p(&[2, -1]).power(-1), p(&[2, -1]).inverse());
    }

    #[test]
    fn inverse_matches_brute_force_in_b2() {
        let all: Vec<_> = enumerate_bn(2).unwrap().collect();
        for u in &all {
            let found: Vec<_> = all
                .iter()
                .filter(|v| u.compose(v).unwrap().is_identity())
                .collect();
            assert_eq!(found, vec![&u.inverse()]);
        }
    }

    #[test]
    fn descents() {
        assert!(p(&[-1, -2, -3]).des().is_empty());
        assert_eq!(p(&[2, 1]).des(), vec![1]);
        assert_eq!(p(&[1, -2, 3]).des(), vec![1]);
    }

    #[test]
    fn signed_descent_set() {
        let s = p(&[-5, -2, -8, 1, 3, 9, 4, -6, -7]).sdes();
        assert_eq!(s.set(), vec![1, 3, 6, 7, 9]);
        for (i, e) in [
            (1, Sign::Minus),
            (3, Sign::Minus),
            (9, Sign::Minus),
            (6, Sign::Plus),
            (7, Sign::Plus),
        ] {
            assert_eq!(s.mark(i), Some(e));
        }
        let s = SignedPerm::identity(5).sdes();
        assert_eq!(s.pairs(), vec![(5, Sign::Plus)]);
        let s = p(&[-1, -2]).sdes();
        assert_eq!(s.pairs(), vec![(2, Sign::Minus)]);
    }

    #[test]
    fn flag_statistics() {
        let w = p(&[-1, -2, -3]);
        assert_eq!(w.finv(), 3);
        assert_eq!(w.fmaj(), 3);
        assert_eq!(SignedPerm::identity(4).fmaj(), 0);
    }

    #[test]
    fn coxeter_length_matches_word_search() {
        assert_eq!(SignedPerm::identity(3).length_b(), 0);
        assert_eq!(p(&[-1]).length_b(), 1);
        assert_eq!(p(&[-2, -1]).length_b(), 3);
        for n in 1..=3 {
            let dist = coxeter_lengths(n);
            assert_eq!(dist.len() as u64, order_bn(n));
            for (w, d) in dist {
                assert_eq!(w.length_b(), d, "{w}");
            }
        }
        assert_eq!(SignedPerm::longest(3).length_b(), 9);
    }

    #[test]
    fn cycle_types() {
        let t = SignedPerm::identity(3).cycle_type();
        assert_eq!(t.positive.parts(), &[1, 1, 1]);
        assert!(t.negative.is_empty());
        let t = p(&[-1]).cycle_type();
        assert!(t.positive.is_empty());
        assert_eq!(t.negative.parts(), &[1]);
        let t = p(&[2, -1]).cycle_type();
        assert!(t.positive.is_empty());
        assert_eq!(t.negative.parts(), &[2]);
        let t = p(&[2, 1, -3]).cycle_type();
        assert_eq!(t.positive.parts(), &[2]);
        assert_eq!(t.negative.parts(), &[1]);
    }

    #[test]
    fn enumeration() {
        assert_eq!(enumerate_bn(2).unwrap().count(), 8);
        assert_eq!(enumerate_bn(3).unwrap().count(), 48);
        let one: Vec<_> = enumerate_bn(1).unwrap().collect();
        assert_eq!(one, vec![p(&[-1]), p(&[1])]);
        for n in 1..=5 {
            let all: Vec<_> = enumerate_bn(n).unwrap().collect();
            assert_eq!(all.len() as u64, order_bn(n));
            assert!(all.windows(2).all(|w| w[0].window() < w[1].window()));
            let unsigned: Vec<_> = enumerate_sn(n).unwrap().collect();
            assert_eq!(unsigned.len() as u64, factorial(n));
            assert!(unsigned.iter().all(SignedPerm::is_unsigned));
            assert_eq!(
                unsigned.iter().collect::<HashSet<_>>().len(),
                unsigned.len()
            );
        }
        assert!(
            matches!(
                enumerate_bn(DEFAULT_MAX_N + 1),
                Err(Error::BoundExceeded { .. })
            ) || max_n() > DEFAULT_MAX_N
        );
    }

    #[test]
    fn wdes_of_sdes_is_des() {
        for n in 1..=5 {
            for w in enumerate_bn(n).unwrap() {
                let s = w.sdes();
                assert_eq!(s.n(), n);
                assert!(s.set().contains(&n));
                assert_eq!(s.wdes(), w.des(), "{w}");
            }
        }
    }

    #[test]
    fn json_roundtrip() {
        let w = p(&[-5, -2, -8, 1, 3, 9, 4, -6, -7]);
        let j = serde_json::to_string(&w).unwrap();
        assert_eq!(j, "[-5,-2,-8,1,3,9,4,-6,-7]");
        assert_eq!(serde_json::from_str::<SignedPerm>(&j).unwrap(), w);
        assert!(serde_json::from_str::<SignedPerm>("[1,1]").is_err());
    }

    proptest! {
        #[test]
        fn group_axioms((u, v, w) in (1usize..=6).prop_flat_map(|n| (arb_perm(n), arb_perm(n), arb_perm(n)))) {
            let n = u.len();
            let e = SignedPerm::identity(n);
            prop_assert_eq!(u.compose(&v).unwrap().compose(&w).unwrap(), u.compose(&v.compose(&w).unwrap()).unwrap());
            prop_assert_eq!(u.compose(&e).unwrap(), u.clone());
            prop_assert_eq!(e.compose(&u).unwrap(), u.clone());
            prop_assert!(u.compose(&u.inverse()).unwrap().is_identity());
            prop_assert!(u.inverse().compose(&u).unwrap().is_identity());
        }

        #[test]
        fn sign_equivariance(w in arb_sized_perm(6)) {
            for a in 1..=w.len() as i32 {
                prop_assert_eq!(w.apply(-a), -w.apply(a));
            }
        }

        #[test]
        fn cycle_type_is_class_invariant((u, w) in (1usize..=5).prop_flat_map(|n| (arb_perm(n), arb_perm(n)))) {
            let conj = u.compose(&w).unwrap().compose(&u.inverse()).unwrap();
            prop_assert_eq!(conj.cycle_type(), w.cycle_type());
            let t = w.cycle_type();
            prop_assert_eq!(t.positive.size() + t.negative.size(), w.len());
        }

        #[test]
        fn flag_identities(w in arb_sized_perm(7)) {
            prop_assert_eq!(w.finv(), 2 * w.inv() + w.bar());
            prop_assert_eq!(w.fmaj(), 2 * w.maj() + w.bar());
            prop_assert_eq!(w.maj(), w.des().iter().sum::<usize>());
        }

        #[test]
        fn powers_compose(w in arb_sized_perm(6), a in -5i64..6, b in -5i64..6) {
            prop_assert_eq!(w.power(a).compose(&w.power(b)).unwrap(), w.power(a + b));
        }
    }
}
