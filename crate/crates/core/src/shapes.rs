//! Partitions, bipartitions, compositions and their signed analogues.
//!
//! Signed sets `(S, ε)` are stored through their word over `{0, 1, *}`:
//! position `i` reads `0` when `i ∈ S` with `ε(i) = +`, `1` when `i ∈ S`
//! with `ε(i) = −`, and `*` when `i ∉ S`. The last letter is never `*`.
//! Deriving `Ord` on that word gives the canonical lexicographic order with
//! `0 < 1 < *` used for the weight matrix.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn of(v: i32) -> Sign {
        if v > 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn is_minus(self) -> bool {
        self == Sign::Minus
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// Integer partition, parts weakly decreasing and positive.
///
/// The `Ord` impl is reverse lexicographic, so `(n)` is the smallest
/// partition of `n` and `(1^n)` the largest.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<usize>);

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other.0.cmp(&self.0)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(format!("{parts:?} is not a partition")));
        }
        Ok(Partition(parts))
    }

    /// Sorts and drops zero parts.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row shape `(k)`; empty for `k = 0`.
    pub fn row(k: usize) -> Self {
        Partition::from_unsorted(vec![k])
    }

    /// The one-column shape `(1^k)`.
    pub fn column(k: usize) -> Self {
        Partition(vec![1; k])
    }

    /// The hook `(k, 1^{n-k})`.
    pub fn hook(k: usize, n: usize) -> Self {
        let mut parts = vec![k];
        parts.extend(std::iter::repeat_n(1, n - k));
        Partition::from_unsorted(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.0.first().copied().unwrap_or(0);
        Partition(
            (0..cols)
                .map(|j| self.0.iter().filter(|&&p| p > j).count())
                .collect(),
        )
    }

    /// Multiplicity of each part size, indexed by size.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.0.first().copied().unwrap_or(0) + 1];
        for &p in &self.0 {
            m[p] += 1;
        }
        m
    }

    /// Number of standard Young tableaux, by the hook length formula.
    pub fn hook_count(&self) -> u64 {
        let n = self.size();
        let conj = self.conjugate();
        let mut hooks: u128 = 1;
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row {
                hooks *= (row - j + conj.0[j] - i - 1) as u128;
            }
        }
        ((1..=n as u128).product::<u128>() / hooks) as u64
    }
}

/// All partitions of `n`, from `(n)` down to `(1^n)`.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            prefix.push(p);
            go(rest - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// A pair `(λ, μ)` of partitions.
///
/// Ordered by `|λ|` descending, then `λ`, then `μ` (each in the
/// [`Partition`] order).
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bipartition {
    pub lambda: Partition,
    pub mu: Partition,
}

impl Ord for Bipartition {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .lambda
            .size()
            .cmp(&self.lambda.size())
            .then_with(|| self.lambda.cmp(&other.lambda))
            .then_with(|| self.mu.cmp(&other.mu))
    }
}

impl PartialOrd for Bipartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.lambda, self.mu)
    }
}

impl Bipartition {
    pub fn new(lambda: Partition, mu: Partition) -> Self {
        Bipartition { lambda, mu }
    }

    /// Convenience constructor from raw part lists.
    pub fn from_parts(lambda: &[usize], mu: &[usize]) -> Result<Self> {
        Ok(Bipartition {
            lambda: Partition::new(lambda.to_vec())?,
            mu: Partition::new(mu.to_vec())?,
        })
    }

    pub fn size(&self) -> usize {
        self.lambda.size() + self.mu.size()
    }

    /// Number of standard bitableaux: `C(n, |λ|)·f^λ·f^μ`.
    pub fn syt_count(&self) -> u64 {
        binomial(self.size(), self.lambda.size()) * self.lambda.hook_count() * self.mu.hook_count()
    }
}

/// All bipartitions of `n` in canonical order.
pub fn enumerate_bipartitions(n: usize) -> Vec<Bipartition> {
    let mut out = Vec::new();
    for k in (0..=n).rev() {
        for lambda in enumerate_partitions(k) {
            for mu in enumerate_partitions(n - k) {
                out.push(Bipartition::new(lambda.clone(), mu));
            }
        }
    }
    out
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1))
}

/// Composition of `n`: a sequence of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidShape(format!("{parts:?} has a zero part")));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Partial sums `r_1 < … < r_k = n`.
    pub fn partial_sums(&self) -> Vec<usize> {
        self.0
            .iter()
            .scan(0, |acc, &p| {
                *acc += p;
                Some(*acc)
            })
            .collect()
    }

    pub fn sorted(&self) -> Partition {
        Partition::from_unsorted(self.0.clone())
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Self {
        Composition(p.parts().to_vec())
    }
}

/// All compositions of `n` (for `n ≥ 1`).
pub fn enumerate_compositions(n: usize) -> Vec<Composition> {
    fn go(rest: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if rest == 0 {
            out.push(Composition(prefix.clone()));
            return;
        }
        for p in 1..=rest {
            prefix.push(p);
            go(rest - p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut out);
    out
}

/// One letter of the `{0, 1, *}` word encoding.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    Zero,
    One,
    Star,
}

impl Letter {
    pub fn from_mark(mark: Option<Sign>) -> Letter {
        match mark {
            Some(Sign::Plus) => Letter::Zero,
            Some(Sign::Minus) => Letter::One,
            None => Letter::Star,
        }
    }

    pub fn mark(self) -> Option<Sign> {
        match self {
            Letter::Zero => Some(Sign::Plus),
            Letter::One => Some(Sign::Minus),
            Letter::Star => None,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Letter::Zero => '0',
            Letter::One => '1',
            Letter::Star => '*',
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            '0' => Some(Letter::Zero),
            '1' => Some(Letter::One),
            '*' => Some(Letter::Star),
            _ => None,
        }
    }
}

/// A signed set `(S, ε)` with `n ∈ S`, an element of `Σ^B(n)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedSet {
    word: Vec<Letter>,
}

impl fmt::Debug for SignedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignedSet({})", self.word_string())
    }
}

impl fmt::Display for SignedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word_string())
    }
}

#[derive(Serialize, Deserialize)]
struct SignedSetJson {
    word: String,
}

impl Serialize for SignedSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SignedSetJson {
            word: self.word_string(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SignedSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = SignedSetJson::deserialize(d)?;
        SignedSet::word_decode(&j.word).map_err(serde::de::Error::custom)
    }
}

impl SignedSet {
    /// Builds from per-position marks (`None` for positions outside `S`).
    pub fn from_marks(marks: Vec<Option<Sign>>) -> Result<Self> {
        Self::from_letters(marks.into_iter().map(Letter::from_mark).collect())
    }

    pub fn from_letters(word: Vec<Letter>) -> Result<Self> {
        match word.last() {
            Some(Letter::Zero | Letter::One) => Ok(SignedSet { word }),
            _ => Err(Error::MalformedWord(
                word.iter().map(|l| l.to_char()).collect(),
            )),
        }
    }

    /// Builds from the elements of `S` and their signs.
    pub fn from_pairs(n: usize, pairs: &[(usize, Sign)]) -> Result<Self> {
        let mut marks = vec![None; n];
        for &(s, e) in pairs {
            if s == 0 || s > n {
                return Err(Error::InvalidShape(format!("{s} is outside [{n}]")));
            }
            marks[s - 1] = Some(e);
        }
        Self::from_marks(marks)
    }

    pub fn word_encode(&self) -> &[Letter] {
        &self.word
    }

    pub fn word_string(&self) -> String {
        self.word.iter().map(|l| l.to_char()).collect()
    }

    pub fn word_decode(word: &str) -> Result<Self> {
        let letters: Option<Vec<Letter>> = word.chars().map(Letter::from_char).collect();
        letters
            .ok_or_else(|| Error::MalformedWord(word.to_string()))
            .and_then(|l| Self::from_letters(l).map_err(|_| Error::MalformedWord(word.to_string())))
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    /// Sign at position `i` (1-based) when `i ∈ S`.
    pub fn mark(&self, i: usize) -> Option<Sign> {
        self.word[i - 1].mark()
    }

    /// `(s, ε(s))` for `s ∈ S`, increasing.
    pub fn pairs(&self) -> Vec<(usize, Sign)> {
        self.word
            .iter()
            .enumerate()
            .filter_map(|(i, l)| l.mark().map(|e| (i + 1, e)))
            .collect()
    }

    pub fn set(&self) -> Vec<usize> {
        self.pairs().into_iter().map(|(s, _)| s).collect()
    }

    /// `ε̃`: the sign of each block extended to every position in it.
    pub fn sign_vector(&self) -> Vec<Sign> {
        let mut out = vec![Sign::Plus; self.n()];
        let mut next = None;
        for i in (0..self.n()).rev() {
            if let Some(e) = self.word[i].mark() {
                next = Some(e);
            }
            out[i] = next.expect("last letter is marked");
        }
        out
    }

    /// Positions of `−` in the sign vector.
    pub fn negative_positions(&self) -> Vec<usize> {
        self.sign_vector()
            .iter()
            .enumerate()
            .filter(|(_, e)| e.is_minus())
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Elements `s_i ≠ n` of `S` followed by an equal sign or by a `+ → −`
    /// switch.
    pub fn wdes(&self) -> Vec<usize> {
        let pairs = self.pairs();
        pairs
            .windows(2)
            .filter(|p| p[0].1 == p[1].1 || (p[0].1 == Sign::Plus && p[1].1 == Sign::Minus))
            .map(|p| p[0].0)
            .collect()
    }

    pub fn to_composition(&self) -> SignedComposition {
        let mut parts = Vec::new();
        let mut prev = 0;
        for (s, e) in self.pairs() {
            parts.push((s - prev, e));
            prev = s;
        }
        SignedComposition { parts }
    }

    /// `Σ_{s ∈ S}` (used for the flag-major index of a signed set).
    pub fn set_sum(&self) -> usize {
        self.set().iter().sum()
    }
}

/// All `2·3^{n-1}` signed sets of `[n]` in lexicographic word order.
pub fn enumerate_signed_sets(n: usize) -> Vec<SignedSet> {
    if n == 0 {
        return Vec::new();
    }
    let mut out = vec![Vec::with_capacity(n)];
    for pos in 0..n {
        let letters: &[Letter] = if pos + 1 == n {
            &[Letter::Zero, Letter::One]
        } else {
            &[Letter::Zero, Letter::One, Letter::Star]
        };
        out = out
            .into_iter()
            .flat_map(|w: Vec<Letter>| {
                letters.iter().map(move |&l| {
                    let mut w = w.clone();
                    w.push(l);
                    w
                })
            })
            .collect();
    }
    out.into_iter().map(|word| SignedSet { word }).collect()
}

/// A composition whose parts may be barred; parts are `(size, sign)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedComposition {
    parts: Vec<(usize, Sign)>,
}

impl fmt::Debug for SignedComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SignedComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, &(p, e)) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            if e.is_minus() {
                write!(f, "-")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for SignedComposition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_signed_ints().serialize(s)
    }
}

impl<'de> Deserialize<'de> for SignedComposition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<i64>::deserialize(d)?;
        SignedComposition::from_signed_ints(&v).map_err(serde::de::Error::custom)
    }
}

impl SignedComposition {
    pub fn new(parts: Vec<(usize, Sign)>) -> Result<Self> {
        if parts.is_empty() || parts.iter().any(|&(p, _)| p == 0) {
            return Err(Error::InvalidShape(format!("{parts:?}")));
        }
        Ok(SignedComposition { parts })
    }

    /// `[2, -1, -2, 1, 3]` stands for `(2, 1̄, 2̄, 1, 3)`.
    pub fn from_signed_ints(v: &[i64]) -> Result<Self> {
        if v.contains(&0) {
            return Err(Error::InvalidShape(format!("{v:?} has a zero part")));
        }
        Self::new(
            v.iter()
                .map(|&x| {
                    (
                        x.unsigned_abs() as usize,
                        if x > 0 { Sign::Plus } else { Sign::Minus },
                    )
                })
                .collect(),
        )
    }

    pub fn to_signed_ints(&self) -> Vec<i64> {
        self.parts
            .iter()
            .map(|&(p, e)| if e.is_minus() { -(p as i64) } else { p as i64 })
            .collect()
    }

    /// All parts unbarred (`α^+`) or all barred (`α^-`).
    pub fn uniform(c: &Composition, sign: Sign) -> Self {
        SignedComposition {
            parts: c.parts().iter().map(|&p| (p, sign)).collect(),
        }
    }

    pub fn parts(&self) -> &[(usize, Sign)] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().map(|p| p.0).sum()
    }

    pub fn underlying(&self) -> Composition {
        Composition(self.parts.iter().map(|p| p.0).collect())
    }

    pub fn to_signed_set(&self) -> SignedSet {
        let mut marks = vec![None; self.size()];
        let mut acc = 0;
        for &(p, e) in &self.parts {
            acc += p;
            marks[acc - 1] = Some(e);
        }
        SignedSet::from_marks(marks).expect("nonempty composition")
    }

    /// The conjugacy class `(α, β)`: unbarred and barred parts, each sorted.
    pub fn class(&self) -> Bipartition {
        let (plus, minus): (Vec<&(usize, Sign)>, Vec<_>) =
            self.parts.iter().partition(|p| p.1 == Sign::Plus);
        Bipartition::new(
            Partition::from_unsorted(plus.into_iter().map(|p| p.0).collect()),
            Partition::from_unsorted(minus.into_iter().map(|p| p.0).collect()),
        )
    }
}

pub fn sigset_from_comp(gamma: &SignedComposition) -> SignedSet {
    gamma.to_signed_set()
}

pub fn comp_from_sigset(sigma: &SignedSet) -> SignedComposition {
    sigma.to_composition()
}

/// Signed compositions of `n` in the same order as their signed sets.
pub fn enumerate_signed_compositions(n: usize) -> Vec<SignedComposition> {
    enumerate_signed_sets(n)
        .iter()
        .map(SignedSet::to_composition)
        .collect()
}
