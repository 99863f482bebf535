//! Degree-`n` symmetric functions in the Schur basis `s_λ(x)s_μ(y)` (or
//! `s_λ(x)`), the Frobenius map, Pieri products, and the check that a
//! descent distribution comes from a Schur-positive function.
//!
//! A function is never stored in infinitely many variables. It is either a
//! coordinate vector, a descent distribution (coordinates in the fundamental
//! basis) or a polynomial in finitely many variables.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::character::{chi_b_oracle_with, class_size, class_size_a, ClassFunction, MnTable};
use crate::distribution::{DescentDistributionA, DescentDistributionB};
use crate::error::{Error, Result};
use crate::linalg::{solve, Matrix, Solution};
use crate::perm::factorial;
use crate::scalar::{parse_rational, Exact, Scalar};
use crate::shapes::{
    enumerate_bipartitions, enumerate_partitions, Bipartition, Partition, Sign, SignedSet,
};
use crate::tableau::{des_tableau, enumerate_bitableaux, enumerate_syt, sdes_bitableau};

/// Finitely supported coordinate vector; zero coordinates are not stored.
#[derive(Clone, PartialEq, Eq)]
pub struct SchurVec<K: Ord, T> {
    n: usize,
    coeffs: BTreeMap<K, T>,
}

impl<K: Ord + fmt::Display, T: fmt::Display> fmt::Debug for SchurVec<K, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<K: Ord + fmt::Display, T: fmt::Display> fmt::Display for SchurVec<K, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, v)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{v}·s{k}")?;
        }
        Ok(())
    }
}

/// Shape of a Schur index: its size.
pub trait SchurKey: Ord + Clone + fmt::Display {
    fn degree(&self) -> usize;
}

impl SchurKey for Partition {
    fn degree(&self) -> usize {
        self.size()
    }
}

impl SchurKey for Bipartition {
    fn degree(&self) -> usize {
        self.size()
    }
}

impl<K: SchurKey, T: Scalar> SchurVec<K, T> {
    pub fn zero(n: usize) -> Self {
        SchurVec {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn unit(key: K) -> Self {
        let mut v = Self::zero(key.degree());
        v.coeffs.insert(key, T::one());
        v
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn get(&self, key: &K) -> T {
        self.coeffs.get(key).cloned().unwrap_or_else(T::zero)
    }

    pub fn set(&mut self, key: K, value: T) -> Result<()> {
        if key.degree() != self.n {
            return Err(Error::SizeMismatch(self.n, key.degree()));
        }
        if value.is_zero() {
            self.coeffs.remove(&key);
        } else {
            self.coeffs.insert(key, value);
        }
        Ok(())
    }

    /// Adds `value` to the coefficient of `key` (whose degree must match).
    pub fn add_term(&mut self, key: K, value: T) {
        debug_assert_eq!(key.degree(), self.n);
        let v = self.get(&key) + value;
        if v.is_zero() {
            self.coeffs.remove(&key);
        } else {
            self.coeffs.insert(key, v);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &T)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(self.n, other.n));
        }
        let mut out = self.clone();
        for (k, v) in other.iter() {
            out.add_term(k.clone(), v.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &T) -> Self {
        let mut out = Self::zero(self.n);
        for (k, v) in self.iter() {
            out.add_term(k.clone(), v.clone() * c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-T::one()))
    }
}

impl<K: SchurKey, T: Exact> SchurVec<K, T> {
    pub fn is_nonneg_integral(&self) -> bool {
        self.coeffs
            .values()
            .all(|v| v.to_integer().is_some_and(|i| !i.is_negative()))
    }
}

/// One JSON entry of a type-B vector.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BipartitionCoeff {
    pub lambda: Partition,
    pub mu: Partition,
    pub coeff: String,
}

/// One JSON entry of a type-A vector.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PartitionCoeff {
    pub lambda: Partition,
    pub coeff: String,
}

impl SchurVec<Bipartition, BigRational> {
    pub fn to_json_entries(&self) -> Vec<BipartitionCoeff> {
        self.iter()
            .map(|(k, v)| BipartitionCoeff {
                lambda: k.lambda.clone(),
                mu: k.mu.clone(),
                coeff: v.to_string(),
            })
            .collect()
    }

    pub fn from_json_entries(n: usize, entries: &[BipartitionCoeff]) -> Result<Self> {
        let mut v = Self::zero(n);
        for e in entries {
            let key = Bipartition::new(e.lambda.clone(), e.mu.clone());
            let c = parse_rational(&e.coeff)?;
            if key.size() != n {
                return Err(Error::SizeMismatch(n, key.size()));
            }
            v.add_term(key, c);
        }
        Ok(v)
    }
}

impl SchurVec<Partition, BigRational> {
    pub fn to_json_entries(&self) -> Vec<PartitionCoeff> {
        self.iter()
            .map(|(k, v)| PartitionCoeff {
                lambda: k.clone(),
                coeff: v.to_string(),
            })
            .collect()
    }
}

fn rational(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

fn big_rational(v: &BigInt) -> BigRational {
    BigRational::from_integer(v.clone())
}

/// `ch(χ) = Σ ⟨χ, χ^{λ,μ}⟩ s_λ(x)s_μ(y)`, with the irreducibles taken from
/// the border-strip table.
pub fn frobenius_b(
    chi: &ClassFunction<Bipartition, BigRational>,
) -> SchurVec<Bipartition, BigRational> {
    let n = chi.n();
    let classes = enumerate_bipartitions(n);
    let sizes: Vec<BigRational> = classes
        .iter()
        .map(|c| big_rational(&class_size(c)))
        .collect();
    let order = big_rational(&(BigInt::from(factorial(n)) << n));
    let mut mn = MnTable::new();
    let mut out = SchurVec::zero(n);
    for shape in enumerate_bipartitions(n) {
        let mut total = BigRational::zero();
        for (class, size) in classes.iter().zip(&sizes) {
            let irr = chi_b_oracle_with(&mut mn, &shape, class).expect("sizes agree");
            total += size * chi.get(class) * rational(irr);
        }
        out.add_term(shape, total / &order);
    }
    out
}

pub fn frobenius_a(
    chi: &ClassFunction<Partition, BigRational>,
) -> SchurVec<Partition, BigRational> {
    let n = chi.n();
    let classes = enumerate_partitions(n);
    let order = rational(factorial(n) as i64);
    let mut mn = MnTable::new();
    let mut out = SchurVec::zero(n);
    for shape in enumerate_partitions(n) {
        let mut total = BigRational::zero();
        for class in &classes {
            let irr = mn.value(&shape, class.parts()).expect("sizes agree");
            total += big_rational(&class_size_a(class)) * chi.get(class) * rational(irr);
        }
        out.add_term(shape, total / &order);
    }
    out
}

/// Outcome of expanding a descent distribution in the Schur basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FineVerdict<K: Ord + fmt::Display> {
    /// Coefficients are nonnegative integers.
    Fine(SchurVec<K, BigRational>),
    /// The distribution is that of a virtual character only.
    NotNonnegativeIntegral(SchurVec<K, BigRational>),
    /// No symmetric function has this distribution.
    NotInSpan,
}

impl<K: Ord + fmt::Display> FineVerdict<K> {
    pub fn is_fine(&self) -> bool {
        matches!(self, FineVerdict::Fine(_))
    }

    pub fn coefficients(&self) -> Option<&SchurVec<K, BigRational>> {
        match self {
            FineVerdict::Fine(v) | FineVerdict::NotNonnegativeIntegral(v) => Some(v),
            FineVerdict::NotInSpan => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            FineVerdict::Fine(_) => "fine",
            FineVerdict::NotNonnegativeIntegral(_) => "not-nonnegative-integral",
            FineVerdict::NotInSpan => "not-in-span",
        }
    }
}

/// Descent distributions of `SYT(λ,μ)` for every bipartition of `n`, as the
/// columns of a matrix whose rows are the signed sets that occur.
#[derive(Clone, Debug)]
pub struct DescentBasisB {
    n: usize,
    shapes: Vec<Bipartition>,
    columns: Vec<DescentDistributionB>,
}

impl DescentBasisB {
    pub fn new(n: usize) -> Self {
        let shapes = enumerate_bipartitions(n);
        let columns = shapes
            .iter()
            .map(|s| {
                DescentDistributionB::from_bitableaux(n, &enumerate_bitableaux(s))
                    .expect("standard bitableaux of size n")
            })
            .collect();
        DescentBasisB { n, shapes, columns }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn distribution(&self, shape: &Bipartition) -> Option<&DescentDistributionB> {
        self.shapes
            .iter()
            .position(|s| s == shape)
            .map(|i| &self.columns[i])
    }

    pub fn shapes(&self) -> &[Bipartition] {
        &self.shapes
    }

    pub fn expand(&self, d: &DescentDistributionB) -> Result<FineVerdict<Bipartition>> {
        if d.n() != self.n {
            return Err(Error::SizeMismatch(self.n, d.n()));
        }
        let mut rows: Vec<SignedSet> = self
            .columns
            .iter()
            .flat_map(|c| c.iter().map(|(s, _)| s.clone()))
            .chain(d.iter().map(|(s, _)| s.clone()))
            .collect();
        rows.sort();
        rows.dedup();
        let a = Matrix::from_fn(rows.len(), self.columns.len(), |i, j| {
            rational(self.columns[j].get(&rows[i]) as i64)
        });
        let b: Vec<BigRational> = rows.iter().map(|s| rational(d.get(s) as i64)).collect();
        Ok(verdict(solve(&a, &b)?, &self.shapes, self.n))
    }

    /// `Σ a_{λμ}·dist(SYT(λ,μ))` for a nonnegative integral vector.
    pub fn synthesize(
        &self,
        v: &SchurVec<Bipartition, BigRational>,
    ) -> Result<DescentDistributionB> {
        let mut d = DescentDistributionB::new(self.n);
        for (shape, c) in v.iter() {
            let count = Exact::to_integer(c)
                .filter(|i| !i.is_negative())
                .ok_or_else(|| Error::InvalidShape(format!("coefficient {c} of {shape}")))?;
            let count = u64::try_from(count).map_err(|_| Error::InvalidShape(c.to_string()))?;
            let col = self
                .distribution(shape)
                .ok_or_else(|| Error::InvalidShape(shape.to_string()))?;
            for (s, k) in col.iter() {
                d.add(s.clone(), k * count)?;
            }
        }
        Ok(d)
    }
}

fn verdict<K: SchurKey>(sol: Solution<BigRational>, shapes: &[K], n: usize) -> FineVerdict<K> {
    match sol {
        Solution::Unique(x) => {
            let mut v = SchurVec::zero(n);
            for (shape, c) in shapes.iter().zip(x) {
                v.add_term(shape.clone(), c);
            }
            if v.is_nonneg_integral() {
                FineVerdict::Fine(v)
            } else {
                FineVerdict::NotNonnegativeIntegral(v)
            }
        }
        Solution::Inconsistent => FineVerdict::NotInSpan,
        Solution::Underdetermined => unreachable!("tableau descent distributions are independent"),
    }
}

/// Solves `d = Σ a_{λμ}·dist(SYT(λ,μ))`.
pub fn dist_to_schur_b(d: &DescentDistributionB) -> Result<FineVerdict<Bipartition>> {
    DescentBasisB::new(d.n()).expand(d)
}

/// Type-A counterpart: solves `d = Σ a_λ·dist(SYT(λ))`.
pub fn dist_to_schur_a(d: &DescentDistributionA) -> Result<FineVerdict<Partition>> {
    let n = d.n();
    let shapes = enumerate_partitions(n);
    let columns: Vec<DescentDistributionA> = shapes
        .iter()
        .map(|s| DescentDistributionA::from_tableaux(n, &enumerate_syt(s)))
        .collect::<Result<_>>()?;
    let mut rows: Vec<Vec<usize>> = columns
        .iter()
        .flat_map(|c| c.iter().map(|(s, _)| s.clone()))
        .chain(d.iter().map(|(s, _)| s.clone()))
        .collect();
    rows.sort();
    rows.dedup();
    let a = Matrix::from_fn(rows.len(), columns.len(), |i, j| {
        rational(columns[j].get(&rows[i]) as i64)
    });
    let b: Vec<BigRational> = rows.iter().map(|s| rational(d.get(s) as i64)).collect();
    Ok(verdict(solve(&a, &b)?, &shapes, n))
}

/// Partitions obtained from `λ` by adding a horizontal strip of `k` boxes.
pub fn horizontal_strips(lambda: &Partition, k: usize) -> Vec<Partition> {
    fn go(lambda: &[usize], i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        let base = lambda.get(i).copied().unwrap_or(0);
        if i > lambda.len() {
            if left == 0 {
                out.push(Partition::from_unsorted(cur.clone()));
            }
            return;
        }
        let cap = if i == 0 {
            base + left
        } else {
            lambda[i - 1].min(base + left)
        };
        for v in base..=cap {
            cur.push(v);
            go(lambda, i + 1, left - (v - base), cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(lambda.parts(), 0, k, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Partitions obtained from `λ` by adding one box.
pub fn add_box(lambda: &Partition) -> Vec<Partition> {
    horizontal_strips(lambda, 1)
}

/// `h_k(x)·v`.
pub fn mul_h_x<T: Scalar>(v: &SchurVec<Bipartition, T>, k: usize) -> SchurVec<Bipartition, T> {
    let mut out = SchurVec::zero(v.n + k);
    for (key, c) in v.iter() {
        for lam in horizontal_strips(&key.lambda, k) {
            out.add_term(Bipartition::new(lam, key.mu.clone()), c.clone());
        }
    }
    out
}

/// `e_k(x)·v`, by conjugating a horizontal strip.
pub fn mul_e_x<T: Scalar>(v: &SchurVec<Bipartition, T>, k: usize) -> SchurVec<Bipartition, T> {
    let mut out = SchurVec::zero(v.n + k);
    for (key, c) in v.iter() {
        for lam in horizontal_strips(&key.lambda.conjugate(), k) {
            out.add_term(Bipartition::new(lam.conjugate(), key.mu.clone()), c.clone());
        }
    }
    out
}

/// `s_1(x, y)·v = (s_1(x) + s_1(y))·v`.
pub fn mul_s1_xy<T: Scalar>(v: &SchurVec<Bipartition, T>) -> SchurVec<Bipartition, T> {
    let mut out = SchurVec::zero(v.n + 1);
    for (key, c) in v.iter() {
        for lam in add_box(&key.lambda) {
            out.add_term(Bipartition::new(lam, key.mu.clone()), c.clone());
        }
        for mu in add_box(&key.mu) {
            out.add_term(Bipartition::new(key.lambda.clone(), mu), c.clone());
        }
    }
    out
}

/// `s_λ(x)s_μ(y) ↦ s_{λ'}(x)s_μ(y)`.
pub fn omega_x<T: Scalar>(v: &SchurVec<Bipartition, T>) -> SchurVec<Bipartition, T> {
    let mut out = SchurVec::zero(v.n);
    for (key, c) in v.iter() {
        out.add_term(
            Bipartition::new(key.lambda.conjugate(), key.mu.clone()),
            c.clone(),
        );
    }
    out
}

/// Polynomial in `x_1..x_m, y_1..y_m`; exponent vectors list the `x`
/// exponents, then the `y` exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly<T> {
    vars: usize,
    terms: BTreeMap<Vec<u16>, T>,
}

impl<T: Scalar> Poly<T> {
    pub fn zero(vars: usize) -> Self {
        Poly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: usize) -> Self {
        let mut p = Self::zero(vars);
        p.terms.insert(vec![0; vars], T::one());
        p
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn add_monomial(&mut self, exps: Vec<u16>, c: T) {
        let v = self.terms.get(&exps).cloned().unwrap_or_else(T::zero) + c;
        if v.is_zero() {
            self.terms.remove(&exps);
        } else {
            self.terms.insert(exps, v);
        }
    }

    pub fn coeff(&self, exps: &[u16]) -> T {
        self.terms.get(exps).cloned().unwrap_or_else(T::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u16>, &T)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_monomial(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &T) -> Self {
        let mut out = Self::zero(self.vars);
        for (e, v) in self.terms() {
            out.add_monomial(e.clone(), v.clone() * c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.vars);
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_monomial(e, c1.clone() * c2.clone());
            }
        }
        out
    }
}

/// `F_σ(x_1..x_m, y_1..y_m)`: sum over `1 ≤ i_1 ≤ … ≤ i_n ≤ m`, strict at
/// `wDes(σ)`, of `z_{i_1}⋯z_{i_n}` with `z = x` or `y` by the sign vector.
pub fn fundamental_b<T: Scalar>(sigma: &SignedSet, m: usize) -> Poly<T> {
    fn go<T: Scalar>(
        j: usize,
        min: usize,
        strict: &[bool],
        signs: &[Sign],
        m: usize,
        exps: &mut Vec<u16>,
        out: &mut Poly<T>,
    ) {
        if j == signs.len() {
            out.add_monomial(exps.clone(), T::one());
            return;
        }
        for i in min..m {
            let slot = if signs[j] == Sign::Plus { i } else { m + i };
            exps[slot] += 1;
            let next = if strict[j] { i + 1 } else { i };
            go(j + 1, next, strict, signs, m, exps, out);
            exps[slot] -= 1;
        }
    }
    let n = sigma.n();
    let mut strict = vec![false; n];
    for d in sigma.wdes() {
        strict[d - 1] = true;
    }
    let mut out = Poly::zero(2 * m);
    go(
        0,
        0,
        &strict,
        &sigma.sign_vector(),
        m,
        &mut vec![0; 2 * m],
        &mut out,
    );
    out
}

/// `Σ_σ d(σ)·F_σ` in `m` variables per alphabet.
pub fn eval_poly_b<T: Scalar>(d: &DescentDistributionB, m: usize) -> Poly<T> {
    let mut out = Poly::zero(2 * m);
    for (sigma, count) in d.iter() {
        out = out.add(&fundamental_b::<T>(sigma, m).scale(&T::int(count as i64)));
    }
    out
}

/// `s_λ(z_offset+1, …, z_offset+m)` by summing over semistandard fillings.
fn schur_poly<T: Scalar>(shape: &Partition, m: usize, offset: usize, vars: usize) -> Poly<T> {
    fn go<T: Scalar>(
        cells: &[(usize, usize)],
        idx: usize,
        filling: &mut Vec<Vec<usize>>,
        m: usize,
        offset: usize,
        exps: &mut Vec<u16>,
        out: &mut Poly<T>,
    ) {
        if idx == cells.len() {
            out.add_monomial(exps.clone(), T::one());
            return;
        }
        let (r, c) = cells[idx];
        let left = if c > 0 { filling[r][c - 1] } else { 0 };
        let above = if r > 0 { filling[r - 1][c] + 1 } else { 0 };
        for v in left.max(above)..m {
            filling[r].push(v);
            exps[offset + v] += 1;
            go(cells, idx + 1, filling, m, offset, exps, out);
            exps[offset + v] -= 1;
            filling[r].pop();
        }
    }
    let parts = shape.parts();
    let cells: Vec<(usize, usize)> = parts
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut out = Poly::zero(vars);
    let mut filling = vec![Vec::new(); parts.len()];
    go(
        &cells,
        0,
        &mut filling,
        m,
        offset,
        &mut vec![0; vars],
        &mut out,
    );
    out
}

/// `Σ a_{λμ} s_λ(x_1..x_m) s_μ(y_1..y_m)`.
pub fn eval_schur_b<T: Scalar>(v: &SchurVec<Bipartition, T>, m: usize) -> Poly<T> {
    let mut out = Poly::zero(2 * m);
    for (key, c) in v.iter() {
        let sx = schur_poly::<T>(&key.lambda, m, 0, 2 * m);
        let sy = schur_poly::<T>(&key.mu, m, m, 2 * m);
        out = out.add(&sx.mul(&sy).scale(c));
    }
    out
}

/// Number of standard bitableaux of each shape: the coordinates of the
/// regular representation.
pub fn regular_vector_b(n: usize) -> SchurVec<Bipartition, BigRational> {
    let mut v = SchurVec::zero(n);
    for shape in enumerate_bipartitions(n) {
        let c = rational(shape.syt_count() as i64);
        v.add_term(shape, c);
    }
    v
}

/// All-ones vector over the bipartitions of `n`.
pub fn ones_vector_b(n: usize) -> SchurVec<Bipartition, BigRational> {
    let mut v = SchurVec::zero(n);
    for shape in enumerate_bipartitions(n) {
        v.add_term(shape, BigRational::one());
    }
    v
}

/// Distribution of `sDes` over `SYT(λ,μ)`.
pub fn tableau_distribution_b(shape: &Bipartition) -> Result<DescentDistributionB> {
    let n = shape.size();
    let mut d = DescentDistributionB::new(n);
    for q in enumerate_bitableaux(shape) {
        d.add(sdes_bitableau(&q)?, 1)?;
    }
    Ok(d)
}

/// Distribution of `Des` over `SYT(λ)`.
pub fn tableau_distribution_a(shape: &Partition) -> Result<DescentDistributionA> {
    let mut d = DescentDistributionA::new(shape.size());
    for q in enumerate_syt(shape) {
        d.add(des_tableau(&q)?, 1)?;
    }
    Ok(d)
}
