//! Character values of `S_n` and `B_n`.
//!
//! [`chi_a`] and [`chi_b`] sum signs over descent sets of standard
//! tableaux; [`chi_a_mn`] and [`chi_b_oracle`] compute the same numbers by
//! border-strip removal, sharing no code with the descent-based rules.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::distribution::{DescentDistributionA, DescentDistributionB};
use crate::error::{Error, Result};
use crate::perm::factorial;
use crate::scalar::Scalar;
use crate::shapes::{
    enumerate_bipartitions, enumerate_partitions, Bipartition, Composition, Partition, Sign,
    SignedComposition, SignedSet,
};
use crate::tableau::{des_tableau, enumerate_bitableaux, enumerate_syt, sdes_bitableau};

/// Whether `S ∩ {r_{i−1}+1, …, r_i − 1}` is an initial segment of that
/// range for every block of `α`.
pub fn is_unimodal(set: &[usize], alpha: &Composition) -> bool {
    let mut lo = 1;
    for r in alpha.partial_sums() {
        let inside = set.iter().copied().filter(|&s| s >= lo && s < r);
        if inside.zip(lo..).any(|(s, expect)| s != expect) {
            return false;
        }
        lo = r + 1;
    }
    true
}

/// `wt_γ(σ) ∈ {−1, 0, 1}`.
pub fn weight(gamma: &SignedComposition, sigma: &SignedSet) -> Result<i32> {
    let n = sigma.n();
    if gamma.size() != n {
        return Err(Error::SizeMismatch(gamma.size(), n));
    }
    let set = sigma.set();
    if !is_unimodal(&set, &gamma.underlying()) {
        return Ok(0);
    }
    let signs = sigma.sign_vector();
    let mut lo = 0;
    let mut both_negative = 0;
    let mut ends = Vec::with_capacity(gamma.parts().len());
    for &(part, sign) in gamma.parts() {
        let block = &signs[lo..lo + part];
        if block.iter().any(|&e| e != block[0]) {
            return Ok(0);
        }
        if sign == Sign::Minus && block[0] == Sign::Minus {
            both_negative += 1;
        }
        lo += part;
        ends.push(lo);
    }
    let extra = set.iter().filter(|s| !ends.contains(s)).count();
    Ok(if (extra + both_negative) % 2 == 0 {
        1
    } else {
        -1
    })
}

/// Sign contribution of a descent set at `α` in the type-A rule.
pub fn weight_a(descents: &[usize], alpha: &Composition) -> i32 {
    if !is_unimodal(descents, alpha) {
        return 0;
    }
    let ends = alpha.partial_sums();
    let extra = descents.iter().filter(|d| !ends.contains(d)).count();
    if extra % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `χ^λ(α)` as a signed count of standard tableaux with unimodal descents.
pub fn chi_a(shape: &Partition, alpha: &Composition) -> Result<i64> {
    if shape.size() != alpha.size() {
        return Err(Error::SizeMismatch(shape.size(), alpha.size()));
    }
    let mut total = 0;
    for q in enumerate_syt(shape) {
        total += weight_a(&des_tableau(&q)?, alpha) as i64;
    }
    Ok(total)
}

/// Memoized border-strip evaluation of irreducible `S_n` characters.
///
/// States are first-column hook lengths (beta numbers); removing a strip of
/// length `k` lowers one of them by `k`.
#[derive(Default, Debug)]
pub struct MnTable {
    memo: HashMap<(Vec<usize>, Vec<usize>), i64>,
}

impl MnTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// `χ^λ(ρ)` for any ordering of the cycle type `ρ`.
    pub fn value(&mut self, shape: &Partition, cycle_type: &[usize]) -> Result<i64> {
        let total: usize = cycle_type.iter().sum();
        if shape.size() != total {
            return Err(Error::SizeMismatch(shape.size(), total));
        }
        let mut parts: Vec<usize> = cycle_type.iter().copied().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let len = shape.len();
        let beta: Vec<usize> = shape
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &p)| p + len - 1 - i)
            .collect();
        Ok(self.eval(beta, &parts))
    }

    fn eval(&mut self, beta: Vec<usize>, parts: &[usize]) -> i64 {
        let Some((&k, rest)) = parts.split_first() else {
            return 1;
        };
        let key = (beta, parts.to_vec());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let beta = &key.0;
        let mut total = 0;
        for (i, &b) in beta.iter().enumerate() {
            if b < k || beta.contains(&(b - k)) {
                continue;
            }
            let crossed = beta.iter().filter(|&&c| c > b - k && c < b).count();
            let mut next = beta.clone();
            next[i] = b - k;
            next.sort_unstable_by(|a, b| b.cmp(a));
            let sign = if crossed % 2 == 0 { 1 } else { -1 };
            total += sign * self.eval(next, rest);
        }
        self.memo.insert(key, total);
        total
    }
}

/// `χ^λ(α)` by the Murnaghan–Nakayama rule.
pub fn chi_a_mn(shape: &Partition, alpha: &Composition) -> Result<i64> {
    MnTable::new().value(shape, alpha.parts())
}

/// `χ^{λ,μ}(γ) = Σ_{Q ∈ SYT(λ,μ)} wt_γ(sDes(Q))`.
pub fn chi_b(shape: &Bipartition, gamma: &SignedComposition) -> Result<i64> {
    if shape.size() != gamma.size() {
        return Err(Error::SizeMismatch(shape.size(), gamma.size()));
    }
    let mut total = 0;
    for q in enumerate_bitableaux(shape) {
        total += weight(gamma, &sdes_bitableau(&q)?)? as i64;
    }
    Ok(total)
}

/// `χ^{λ,μ}(α, β)` by splitting the cycles of each class between the two
/// tableaux with all sign patterns and evaluating by [`MnTable`].
pub fn chi_b_oracle(shape: &Bipartition, class: &Bipartition) -> Result<i64> {
    chi_b_oracle_with(&mut MnTable::new(), shape, class)
}

pub fn chi_b_oracle_with(
    mn: &mut MnTable,
    shape: &Bipartition,
    class: &Bipartition,
) -> Result<i64> {
    if shape.size() != class.size() {
        return Err(Error::SizeMismatch(shape.size(), class.size()));
    }
    let alpha = class.lambda.parts();
    let beta = class.mu.parts();
    let k = shape.lambda.size();
    let mut total = 0;
    for eps in 0u32..1 << alpha.len() {
        for zeta in 0u32..1 << beta.len() {
            let mut to_lambda = Vec::new();
            let mut to_mu = Vec::new();
            for (j, &a) in alpha.iter().enumerate() {
                if eps >> j & 1 == 0 {
                    to_lambda.push(a);
                } else {
                    to_mu.push(a);
                }
            }
            for (j, &b) in beta.iter().enumerate() {
                if zeta >> j & 1 == 0 {
                    to_lambda.push(b);
                } else {
                    to_mu.push(b);
                }
            }
            if to_lambda.iter().sum::<usize>() != k {
                continue;
            }
            let sign = if zeta.count_ones() % 2 == 0 { 1 } else { -1 };
            total += sign * mn.value(&shape.lambda, &to_lambda)? * mn.value(&shape.mu, &to_mu)?;
        }
    }
    Ok(total)
}

/// The signed composition listing `α` unbarred, then `β` barred.
pub fn class_representative(class: &Bipartition) -> SignedComposition {
    let parts = class
        .lambda
        .parts()
        .iter()
        .map(|&p| (p, Sign::Plus))
        .chain(class.mu.parts().iter().map(|&p| (p, Sign::Minus)))
        .collect();
    SignedComposition::new(parts).expect("nonempty class")
}

/// `z_α = Π i^{m_i} m_i!`.
pub fn z_factor(p: &Partition) -> BigInt {
    p.multiplicities()
        .iter()
        .enumerate()
        .skip(1)
        .fold(BigInt::one(), |acc, (i, &m)| {
            acc * BigInt::from(i).pow(m as u32) * BigInt::from(factorial(m))
        })
}

/// Number of elements of `B_n` with signed cycle type `(α, β)`.
pub fn class_size(class: &Bipartition) -> BigInt {
    let n = class.size();
    let order = BigInt::from(factorial(n)) << n;
    let z =
        (z_factor(&class.lambda) << class.lambda.len()) * (z_factor(&class.mu) << class.mu.len());
    order / z
}

/// Number of permutations in `S_n` of cycle type `λ`.
pub fn class_size_a(class: &Partition) -> BigInt {
    BigInt::from(factorial(class.size())) / z_factor(class)
}

/// `Σ_{σ} d(σ)·wt_γ(σ)`.
pub fn evaluate_fine_sum(d: &DescentDistributionB, gamma: &SignedComposition) -> Result<BigInt> {
    let mut total = BigInt::zero();
    for (sigma, count) in d.iter() {
        total += BigInt::from(count) * weight(gamma, sigma)?;
    }
    Ok(total)
}

/// Type-A counterpart of [`evaluate_fine_sum`].
pub fn evaluate_fine_sum_a(d: &DescentDistributionA, alpha: &Composition) -> Result<BigInt> {
    if d.n() != alpha.size() {
        return Err(Error::SizeMismatch(d.n(), alpha.size()));
    }
    let mut total = BigInt::zero();
    for (descents, count) in d.iter() {
        total += BigInt::from(count) * weight_a(descents, alpha);
    }
    Ok(total)
}

/// A function on conjugacy classes, keyed by cycle type.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassFunction<K: Ord, T> {
    n: usize,
    values: BTreeMap<K, T>,
}

impl<K: Ord + Clone, T: Scalar> ClassFunction<K, T> {
    pub fn new(n: usize) -> Self {
        ClassFunction {
            n,
            values: BTreeMap::new(),
        }
    }

    pub fn from_values(n: usize, values: BTreeMap<K, T>) -> Self {
        ClassFunction { n, values }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn set(&mut self, class: K, value: T) {
        self.values.insert(class, value);
    }

    /// Missing classes read as zero.
    pub fn get(&self, class: &K) -> T {
        self.values.get(class).cloned().unwrap_or_else(T::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &T)> {
        self.values.iter()
    }
}

impl<T: Scalar> ClassFunction<Bipartition, T> {
    /// Irreducible character `χ^{λ,μ}` evaluated by [`chi_b`].
    pub fn irreducible_b(shape: &Bipartition) -> Result<Self> {
        let n = shape.size();
        let mut f = Self::new(n);
        for class in enumerate_bipartitions(n) {
            let v = chi_b(shape, &class_representative(&class))?;
            f.set(class, T::int(v));
        }
        Ok(f)
    }

    /// `⟨f, g⟩ = (1/|B_n|) Σ_C |C| f(C) g(C)` (both real-valued).
    pub fn inner(&self, other: &Self) -> T {
        let n = self.n;
        let mut total = T::zero();
        for class in enumerate_bipartitions(n) {
            let size = bigint_to_scalar::<T>(&class_size(&class));
            total = total + size * self.get(&class) * other.get(&class);
        }
        total / bigint_to_scalar::<T>(&(BigInt::from(factorial(n)) << n))
    }
}

impl<T: Scalar> ClassFunction<Partition, T> {
    pub fn irreducible_a(shape: &Partition) -> Result<Self> {
        let n = shape.size();
        let mut mn = MnTable::new();
        let mut f = Self::new(n);
        for class in enumerate_partitions(n) {
            f.set(class.clone(), T::int(mn.value(shape, class.parts())?));
        }
        Ok(f)
    }

    pub fn inner(&self, other: &Self) -> T {
        let n = self.n;
        let mut total = T::zero();
        for class in enumerate_partitions(n) {
            let size = bigint_to_scalar::<T>(&class_size_a(&class));
            total = total + size * self.get(&class) * other.get(&class);
        }
        total / bigint_to_scalar::<T>(&BigInt::from(factorial(n)))
    }
}

pub(crate) fn bigint_to_scalar<T: Scalar>(v: &BigInt) -> T {
    let (sign, digits) = v.to_u32_digits();
    let base = T::int(1 << 16) * T::int(1 << 16);
    let mut acc = T::zero();
    for &d in digits.iter().rev() {
        acc = acc * base.clone() + T::int(d as i64);
    }
    if sign == num_bigint::Sign::Minus {
        -acc
    } else {
        acc
    }
}

/// Rows `χ^{λ,μ}` for every shape, columns in canonical class order, using
/// the descent rule.
pub fn character_table_b(n: usize) -> Result<Vec<(Bipartition, Vec<i64>)>> {
    let classes = enumerate_bipartitions(n);
    enumerate_bipartitions(n)
        .into_iter()
        .map(|shape| {
            let row = classes
                .iter()
                .map(|c| chi_b(&shape, &class_representative(c)))
                .collect::<Result<Vec<_>>>()?;
            Ok((shape, row))
        })
        .collect()
}

/// The same table from [`chi_b_oracle`].
pub fn character_table_b_oracle(n: usize) -> Result<Vec<(Bipartition, Vec<i64>)>> {
    let classes = enumerate_bipartitions(n);
    let mut mn = MnTable::new();
    enumerate_bipartitions(n)
        .into_iter()
        .map(|shape| {
            let row = classes
                .iter()
                .map(|c| chi_b_oracle_with(&mut mn, &shape, c))
                .collect::<Result<Vec<_>>>()?;
            Ok((shape, row))
        })
        .collect()
}
