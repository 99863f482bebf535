//! The families of (signed) permutations studied as fine sets, and the
//! Schur expansions they are expected to produce.
//!
//! Every family is obtained by filtering a full enumeration of `B_n` or
//! `S_n`.

use std::collections::{BTreeSet, HashMap};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::character::{chi_b_oracle_with, ClassFunction, MnTable};
use crate::error::{Error, Result};
use crate::perm::{enumerate_bn, enumerate_sn, SignedPerm};
use crate::shapes::{
    enumerate_bipartitions, enumerate_partitions, Bipartition, Partition, SignedSet,
};
use crate::symfunc::{frobenius_a, mul_e_x, mul_s1_xy, SchurVec};
use crate::tableau::{
    des_tableau, enumerate_bitableaux, enumerate_syt, fmaj_bitableau, sdes_bitableau,
};

type VecB = SchurVec<Bipartition, BigRational>;
type VecA = SchurVec<Partition, BigRational>;

fn int(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

fn filter_bn(n: usize, keep: impl Fn(&SignedPerm) -> bool) -> Result<Vec<SignedPerm>> {
    Ok(enumerate_bn(n)?.filter(|w| keep(w)).collect())
}

fn filter_sn(n: usize, keep: impl Fn(&SignedPerm) -> bool) -> Result<Vec<SignedPerm>> {
    Ok(enumerate_sn(n)?.filter(|w| keep(w)).collect())
}

/// `{w ∈ B_n : w² = e}`.
pub fn involutions(n: usize) -> Result<Vec<SignedPerm>> {
    filter_bn(n, SignedPerm::is_involution)
}

/// `{w ∈ B_n : sDes(w⁻¹) = σ}`.
pub fn inverse_sdes_class(sigma: &SignedSet) -> Result<Vec<SignedPerm>> {
    filter_bn(sigma.n(), |w| &w.inverse().sdes() == sigma)
}

/// `{w ∈ B_n : fmaj(w⁻¹) = k}`.
pub fn fmaj_inverse_level(n: usize, k: usize) -> Result<Vec<SignedPerm>> {
    filter_bn(n, |w| w.inverse().fmaj() == k)
}

/// `{w ∈ B_n : finv(w⁻¹) = k}`.
pub fn finv_inverse_level(n: usize, k: usize) -> Result<Vec<SignedPerm>> {
    filter_bn(n, |w| w.inverse().finv() == k)
}

/// `{w ∈ S_n : inv(w⁻¹) = k}`.
pub fn inv_inverse_level(n: usize, k: usize) -> Result<Vec<SignedPerm>> {
    filter_sn(n, |w| w.inverse().inv() == k)
}

/// `{w ∈ S_n : maj(w⁻¹) = k}`.
pub fn maj_inverse_level(n: usize, k: usize) -> Result<Vec<SignedPerm>> {
    filter_sn(n, |w| w.inverse().maj() == k)
}

/// `{w ∈ B_n : ℓ_B(w) = k}`.
pub fn length_level(n: usize, k: usize) -> Result<Vec<SignedPerm>> {
    filter_bn(n, |w| w.length_b() == k)
}

/// Coefficient of `s_λ(x)s_μ(y)` is the number of `Q ∈ SYT(λ,μ)` with
/// `fmaj(Q) = k`.
pub fn coinvariant_character_b(n: usize, k: usize) -> VecB {
    let mut v = SchurVec::zero(n);
    for shape in enumerate_bipartitions(n) {
        let count = enumerate_bitableaux(&shape)
            .iter()
            .filter(|q| fmaj_bitableau(q) == k)
            .count();
        v.add_term(shape, int(count as i64));
    }
    v
}

/// Coefficient of `s_λ` is the number of `Q ∈ SYT(λ)` with `maj(Q) = k`.
pub fn coinvariant_character_a(n: usize, k: usize) -> VecA {
    let mut v = SchurVec::zero(n);
    for shape in enumerate_partitions(n) {
        let count = enumerate_syt(&shape)
            .iter()
            .filter(|q| des_tableau(q).expect("standard").iter().sum::<usize>() == k)
            .count();
        v.add_term(shape, int(count as i64));
    }
    v
}

/// Coefficient of `s_λ(x)s_μ(y)` is the number of `P ∈ SYT(λ,μ)` with
/// `sDes(P) = σ`.
pub fn inverse_class_character(sigma: &SignedSet) -> VecB {
    let n = sigma.n();
    let mut v = SchurVec::zero(n);
    for shape in enumerate_bipartitions(n) {
        let count = enumerate_bitableaux(&shape)
            .iter()
            .filter(|p| sdes_bitableau(p).as_ref() == Ok(sigma))
            .count();
        v.add_term(shape, int(count as i64));
    }
    v
}

/// `{w ∈ B_n : cycle_type(w) = class}`.
pub fn conjugacy_class(class: &Bipartition) -> Result<Vec<SignedPerm>> {
    filter_bn(class.size(), |w| {
        &w.cycle_type().into_bipartition() == class
    })
}

/// Signed permutations without fixed points.
pub fn derangements_b(n: usize) -> Result<Vec<SignedPerm>> {
    filter_bn(n, |w| w.fixed_points() == 0)
}

/// Length of the initial run `w(1) > w(2) > … > w(k) > 0`.
pub fn initial_positive_run(w: &SignedPerm) -> usize {
    let win = w.window();
    let mut k = 0;
    while k < win.len() && win[k] > 0 && (k == 0 || win[k - 1] > win[k]) {
        k += 1;
    }
    k
}

/// Signed permutations whose initial positive decreasing run has even length.
pub fn desarrangements_b(n: usize) -> Result<Vec<SignedPerm>> {
    filter_bn(n, |w| initial_positive_run(w).is_multiple_of(2))
}

/// `ω_x ch(ψ_n)` from `v_1 = s_1(y)` and
/// `v_n = s_1(x,y)·v_{n−1} + (−1)^n e_n(x)`.
pub fn psi_character(n: usize) -> Result<VecB> {
    if n == 0 {
        return Err(Error::OutOfRange {
            name: "psi".into(),
            n,
        });
    }
    let mut v = SchurVec::unit(Bipartition::new(Partition::empty(), Partition::row(1)));
    for m in 2..=n {
        v = mul_s1_xy(&v);
        let sign = if m % 2 == 0 { 1 } else { -1 };
        v.add_term(
            Bipartition::new(Partition::column(m), Partition::empty()),
            int(sign),
        );
    }
    Ok(v)
}

/// `Σ_k (−1)^k e_k(x)·s_1(x,y)^{n−k}`.
pub fn derangement_expansion(n: usize) -> VecB {
    let mut powers = vec![SchurVec::unit(Bipartition::new(
        Partition::empty(),
        Partition::empty(),
    ))];
    for m in 1..=n {
        powers.push(mul_s1_xy(&powers[m - 1]));
    }
    let mut v = SchurVec::zero(n);
    for k in 0..=n {
        let term = mul_e_x(&powers[n - k], k);
        let term = if k % 2 == 0 {
            term
        } else {
            term.scale(&int(-1))
        };
        v = v.add(&term).expect("degree n");
    }
    v
}

/// Number of `P ∈ SYT(λ,μ)` for which the largest `k` with `1, …, k` in the
/// first column of `P⁺` is even.
pub fn first_column_coefficient(shape: &Bipartition) -> u64 {
    enumerate_bitableaux(shape)
        .iter()
        .filter(|p| {
            let column = p.plus.first_column();
            let k = column
                .iter()
                .enumerate()
                .take_while(|(i, &v)| v == i + 1)
                .count();
            k % 2 == 0
        })
        .count() as u64
}

/// `Σ c_{λ,μ} s_λ(x)s_μ(y)` with `c` from [`first_column_coefficient`].
pub fn first_column_vector(n: usize) -> VecB {
    let mut v = SchurVec::zero(n);
    for shape in enumerate_bipartitions(n) {
        let c = first_column_coefficient(&shape);
        v.add_term(shape, int(c as i64));
    }
    v
}

/// `{w ∈ B_n : w^k = e}`.
pub fn k_roots_of_identity(n: usize, k: u32) -> Result<Vec<SignedPerm>> {
    filter_bn(n, |w| w.power(k.into()).is_identity())
}

/// `{w ∈ S_n : w^k = e}`.
pub fn k_roots_of_identity_a(n: usize, k: u32) -> Result<Vec<SignedPerm>> {
    filter_sn(n, |w| w.power(k.into()).is_identity())
}

/// `r(w) = #{u : u^k = w}` over `elements`, one value per class.
fn root_counts<K: Ord + Clone>(
    elements: Vec<SignedPerm>,
    k: u32,
    class_of: impl Fn(&SignedPerm) -> K,
) -> std::collections::BTreeMap<K, BigRational> {
    let mut hits: HashMap<SignedPerm, i64> = HashMap::new();
    for u in &elements {
        *hits.entry(u.power(k.into())).or_default() += 1;
    }
    let mut values = std::collections::BTreeMap::new();
    for w in elements {
        let class = class_of(&w);
        values
            .entry(class)
            .or_insert_with(|| int(hits.get(&w).copied().unwrap_or(0)));
    }
    values
}

/// The class function `r^B_{n,k}`, by exhaustive counting.
pub fn kroot_class_function(n: usize, k: u32) -> Result<ClassFunction<Bipartition, BigRational>> {
    let values = root_counts(enumerate_bn(n)?.collect(), k, |w| {
        w.cycle_type().into_bipartition()
    });
    Ok(ClassFunction::from_values(n, values))
}

/// The class function `r_{n,k}` of `S_n`.
pub fn kroot_class_function_a(n: usize, k: u32) -> Result<ClassFunction<Partition, BigRational>> {
    let values = root_counts(enumerate_sn(n)?.collect(), k, |w| w.cycle_type().positive);
    Ok(ClassFunction::from_values(n, values))
}

/// Restriction from `B_n` to `S_n` of the character with Schur vector `v`.
pub fn restrict_to_sn(v: &VecB) -> VecA {
    let n = v.degree();
    let mut mn = MnTable::new();
    let mut chi = ClassFunction::new(n);
    for alpha in enumerate_partitions(n) {
        let class = Bipartition::new(alpha.clone(), Partition::empty());
        let mut value = BigRational::zero();
        for (shape, c) in v.iter() {
            value += c * int(chi_b_oracle_with(&mut mn, shape, &class).expect("sizes agree"));
        }
        chi.set(alpha, value);
    }
    frobenius_a(&chi)
}

/// Whether a nonempty set of residues is a cyclic interval of `Z_m`.
fn is_cyclic_interval(set: &BTreeSet<usize>, m: usize) -> bool {
    set.len() == m
        || set
            .iter()
            .filter(|&&x| !set.contains(&((x + m - 1) % m)))
            .count()
            == 1
}

fn is_integer_interval(set: &BTreeSet<i64>) -> bool {
    match (set.first(), set.last()) {
        (Some(lo), Some(hi)) => (hi - lo + 1) as usize == set.len(),
        _ => true,
    }
}

/// Every prefix `{w(1), …, w(i)}` is an interval of `Z_n`.
pub fn is_arc(w: &SignedPerm) -> bool {
    let n = w.len();
    let mut prefix = BTreeSet::new();
    w.window().iter().all(|&v| {
        prefix.insert(v.unsigned_abs() as usize % n);
        is_cyclic_interval(&prefix, n)
    })
}

/// Every prefix is an interval of `Z`.
pub fn is_left_unimodal(w: &SignedPerm) -> bool {
    let mut prefix = BTreeSet::new();
    w.window().iter().all(|&v| {
        prefix.insert(v as i64);
        is_integer_interval(&prefix)
    })
}

/// Every suffix is an interval of `Z`.
pub fn is_right_unimodal(w: &SignedPerm) -> bool {
    let mut suffix = BTreeSet::new();
    w.window().iter().rev().all(|&v| {
        suffix.insert(v as i64);
        is_integer_interval(&suffix)
    })
}

/// Every suffix `{w(i), …, w(n)}` is an interval of `Z_{2n}`, where `i ↦ i`
/// and `ī ↦ n + i`.
pub fn is_b_arc(w: &SignedPerm) -> bool {
    let n = w.len();
    let m = 2 * n;
    let mut suffix = BTreeSet::new();
    w.window().iter().rev().all(|&v| {
        let r = if v > 0 {
            v as usize
        } else {
            n + v.unsigned_abs() as usize
        };
        suffix.insert(r % m);
        is_cyclic_interval(&suffix, m)
    })
}

/// For `2 ≤ i ≤ n − 1` the absolute values before position `i` form an
/// interval of `Z_n`, which `|w(i)|` extends upwards (then `w(i)` is
/// unbarred) or downwards (then barred).
pub fn is_signed_arc(w: &SignedPerm) -> bool {
    let n = w.len();
    let mut prefix = BTreeSet::new();
    for (i, &v) in w.window().iter().enumerate() {
        let a = v.unsigned_abs() as usize % n;
        if i >= 1 && i + 1 < n {
            if !is_cyclic_interval(&prefix, n) {
                return false;
            }
            let up = prefix.contains(&((a + n - 1) % n));
            let down = prefix.contains(&((a + 1) % n));
            let ok = (up && v > 0) || (down && v < 0);
            if !ok {
                return false;
            }
        }
        prefix.insert(a);
    }
    true
}

pub fn arc_permutations(n: usize) -> Result<Vec<SignedPerm>> {
    filter_sn(n, is_arc)
}

pub fn left_unimodal(n: usize) -> Result<Vec<SignedPerm>> {
    filter_sn(n, is_left_unimodal)
}

pub fn right_unimodal(n: usize) -> Result<Vec<SignedPerm>> {
    filter_sn(n, is_right_unimodal)
}

pub fn b_arc_permutations(n: usize) -> Result<Vec<SignedPerm>> {
    filter_bn(n, is_b_arc)
}

pub fn signed_arc_permutations(n: usize) -> Result<Vec<SignedPerm>> {
    filter_bn(n, is_signed_arc)
}

/// `A_n`, `L_n`, `R_n`, `A^B_n` and `A^s_n`.
#[derive(Clone, Debug)]
pub struct ArcFamilies {
    pub arc: Vec<SignedPerm>,
    pub left_unimodal: Vec<SignedPerm>,
    pub right_unimodal: Vec<SignedPerm>,
    pub b_arc: Vec<SignedPerm>,
    pub signed_arc: Vec<SignedPerm>,
}

pub fn arc_families(n: usize) -> Result<ArcFamilies> {
    Ok(ArcFamilies {
        arc: arc_permutations(n)?,
        left_unimodal: left_unimodal(n)?,
        right_unimodal: right_unimodal(n)?,
        b_arc: b_arc_permutations(n)?,
        signed_arc: signed_arc_permutations(n)?,
    })
}

fn need(name: &str, n: usize, min: usize) -> Result<()> {
    if n < min {
        Err(Error::OutOfRange {
            name: name.into(),
            n,
        })
    } else {
        Ok(())
    }
}

/// `(k, 2, 1^{n−k−2})`.
fn near_hook(k: usize, n: usize) -> Partition {
    let mut parts = vec![k, 2];
    parts.extend(std::iter::repeat_n(1, n - k - 2));
    Partition::from_unsorted(parts)
}

/// `χ^(n) + χ^(1^n) + 2Σ_{k=2}^{n−1} χ^(k,1^{n−k}) + Σ_{k=2}^{n−2} χ^(k,2,1^{n−k−2})`
/// scaled by `(ends, hooks, near_hooks)`.
fn arc_shape_vector(n: usize, ends: i64, hooks: i64, near_hooks: i64) -> VecA {
    let mut v = SchurVec::zero(n);
    v.add_term(Partition::row(n), int(ends));
    v.add_term(Partition::column(n), int(ends));
    for k in 2..n {
        v.add_term(Partition::hook(k, n), int(hooks));
    }
    for k in 2..n.saturating_sub(1) {
        v.add_term(near_hook(k, n), int(near_hooks));
    }
    v
}

/// Expected expansion for `A_n` (`n ≥ 2`).
pub fn arc_expected(n: usize) -> Result<VecA> {
    need("arcA", n, 2)?;
    Ok(arc_shape_vector(n, 1, 2, 1))
}

/// Expected `S_n`-expansion for `A^B_n` under `Des` (`n ≥ 2`).
pub fn b_arc_expected(n: usize) -> Result<VecA> {
    need("B-arc", n, 2)?;
    let n64 = n as i64;
    Ok(arc_shape_vector(n, n64 + 2, n64 + 4, 2))
}

/// Expected `B_n`-expansion for `A^s_n` (`n ≥ 2`): `((n),∅)` and
/// `(∅,(1^n))` once, `((k,1),(1^{n−k−1}))` and `((n−k−1),(2,1^{k−1}))` once
/// and `((k),(1^{n−k}))` twice for each `1 ≤ k ≤ n − 1`.
pub fn signed_arc_expected(n: usize) -> Result<VecB> {
    need("sign-arc", n, 2)?;
    let mut v = SchurVec::zero(n);
    v.add_term(
        Bipartition::new(Partition::row(n), Partition::empty()),
        BigRational::one(),
    );
    v.add_term(
        Bipartition::new(Partition::empty(), Partition::column(n)),
        BigRational::one(),
    );
    for k in 1..n {
        v.add_term(
            Bipartition::new(Partition::hook(k, k + 1), Partition::column(n - k - 1)),
            BigRational::one(),
        );
        v.add_term(
            Bipartition::new(Partition::row(n - k - 1), Partition::hook(2, k + 1)),
            BigRational::one(),
        );
        v.add_term(
            Bipartition::new(Partition::row(k), Partition::column(n - k)),
            int(2),
        );
    }
    Ok(v)
}

/// Every hook of `n` with coefficient one.
pub fn unimodal_expected(n: usize) -> Result<VecA> {
    need("unimodal", n, 1)?;
    let mut v = SchurVec::zero(n);
    for k in 1..=n {
        v.add_term(Partition::hook(k, n), BigRational::one());
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distribution::{DescentDistributionA, DescentDistributionB};
    use crate::symfunc::{
        dist_to_schur_a, dist_to_schur_b, omega_x, ones_vector_b, regular_vector_b,
    };

    fn perm(v: &[i32]) -> SignedPerm {
        SignedPerm::new(v.to_vec()).unwrap()
    }

    fn perms(list: &[&[i32]]) -> BTreeSet<SignedPerm> {
        list.iter().map(|v| perm(v)).collect()
    }

    fn bip(l: &[usize], m: &[usize]) -> Bipartition {
        Bipartition::from_parts(l, m).unwrap()
    }

    fn vec_b(terms: &[(&[usize], &[usize], i64)]) -> VecB {
        let n = terms[0].0.iter().sum::<usize>() + terms[0].1.iter().sum::<usize>();
        let mut v = SchurVec::zero(n);
        for (l, m, c) in terms {
            v.add_term(bip(l, m), int(*c));
        }
        v
    }

    fn solve_b(family: &[SignedPerm], n: usize) -> VecB {
        let d = DescentDistributionB::from_perms(n, family).unwrap();
        dist_to_schur_b(&d).unwrap().coefficients().unwrap().clone()
    }

    #[test]
    fn b2_involutions() {
        let inv = involutions(2).unwrap();
        let expected = perms(&[&[1, 2], &[2, 1], &[-1, 2], &[1, -2], &[-1, -2], &[-2, -1]]);
        assert_eq!(inv.into_iter().collect::<BTreeSet<_>>(), expected);
        let total: u64 = enumerate_bipartitions(3)
            .iter()
            .map(Bipartition::syt_count)
            .sum();
        assert_eq!(involutions(3).unwrap().len() as u64, total);
        assert_eq!(solve_b(&involutions(2).unwrap(), 2), ones_vector_b(2));
    }

    #[test]
    fn printed_coinvariant_sets() {
        let finv = perms(&[
            &[-1, -2, -3],
            &[1, -2, 3],
            &[1, -3, 2],
            &[2, -1, 3],
            &[-1, 3, 2],
            &[-2, 3, 1],
            &[-3, 2, 1],
        ]);
        let fmaj = perms(&[
            &[-1, -2, -3],
            &[1, -2, 3],
            &[1, -3, 2],
            &[2, -1, 3],
            &[3, -1, 2],
            &[3, -2, 1],
            &[2, -3, 1],
        ]);
        let finv_inverse = perms(&[
            &[-1, -2, -3],
            &[1, -2, 3],
            &[1, 3, -2],
            &[-2, 1, 3],
            &[-1, 3, 2],
            &[3, -1, 2],
            &[3, 2, -1],
        ]);
        let fmaj_inverse = perms(&[
            &[-1, -2, -3],
            &[1, -2, 3],
            &[1, 3, -2],
            &[-2, 1, 3],
            &[-2, 3, 1],
            &[3, -2, 1],
            &[3, 1, -2],
        ]);
        let all: Vec<_> = enumerate_bn(3).unwrap().collect();
        let pick = |f: &dyn Fn(&SignedPerm) -> bool| {
            all.iter()
                .filter(|w| f(w))
                .cloned()
                .collect::<BTreeSet<_>>()
        };
        assert_eq!(pick(&|w| w.finv() == 3), finv);
        assert_eq!(pick(&|w| w.fmaj() == 3), fmaj);
        let level = finv_inverse_level(3, 3).unwrap();
        assert_eq!(level.iter().cloned().collect::<BTreeSet<_>>(), finv_inverse);
        assert_eq!(
            fmaj_inverse_level(3, 3)
                .unwrap()
                .into_iter()
                .collect::<BTreeSet<_>>(),
            fmaj_inverse
        );
        let expected = vec_b(&[(&[], &[3], 1), (&[2], &[1], 1), (&[1, 1], &[1], 1)]);
        assert_eq!(coinvariant_character_b(3, 3), expected);
        assert_eq!(solve_b(&level, 3), expected);
    }

    #[test]
    fn coinvariant_edges() {
        for n in 1..=4 {
            assert_eq!(
                coinvariant_character_b(n, 0),
                SchurVec::unit(Bipartition::new(Partition::row(n), Partition::empty()))
            );
            assert_eq!(
                finv_inverse_level(n, 0).unwrap(),
                vec![SignedPerm::identity(n)]
            );
            assert!(coinvariant_character_b(n, n * n + 1).is_zero());
            let mut sum = SchurVec::zero(n);
            for k in 0..=n * n {
                sum = sum.add(&coinvariant_character_b(n, k)).unwrap();
            }
            assert_eq!(sum, regular_vector_b(n));
        }
    }

    #[test]
    fn conjugacy_edges() {
        assert_eq!(
            conjugacy_class(&bip(&[1, 1, 1], &[])).unwrap(),
            vec![SignedPerm::identity(3)]
        );
        let single = conjugacy_class(&bip(&[], &[1])).unwrap();
        assert_eq!(single, vec![perm(&[-1])]);
        assert_eq!(solve_b(&single, 1), vec_b(&[(&[], &[1], 1)]));
    }

    #[test]
    fn derangements_small() {
        let d2 = derangements_b(2).unwrap();
        assert_eq!(
            d2.iter().cloned().collect::<BTreeSet<_>>(),
            perms(&[&[2, 1], &[2, -1], &[-2, 1], &[-2, -1], &[-1, -2]])
        );
        let e2_inv: BTreeSet<_> = desarrangements_b(2)
            .unwrap()
            .iter()
            .map(SignedPerm::inverse)
            .collect();
        assert_eq!(
            e2_inv,
            perms(&[&[2, 1], &[-1, 2], &[-1, -2], &[2, -1], &[-2, -1]])
        );
        let printed = vec_b(&[
            (&[1, 1], &[], 1),
            (&[1], &[1], 1),
            (&[], &[2], 1),
            (&[], &[1, 1], 1),
        ]);
        assert_eq!(psi_character(2).unwrap(), printed);
        assert_eq!(first_column_vector(2), printed);
        assert_eq!(solve_b(&d2, 2), printed);
        assert_eq!(psi_character(1).unwrap(), SchurVec::unit(bip(&[], &[1])));
        assert_eq!(
            omega_x(&psi_character(2).unwrap()).get(&bip(&[2], &[])),
            int(1)
        );
    }

    #[test]
    fn psi_agrees_with_closed_forms() {
        for n in 1..=5 {
            let psi = psi_character(n).unwrap();
            assert_eq!(psi, derangement_expansion(n), "n = {n}");
            assert_eq!(psi, first_column_vector(n), "n = {n}");
            assert_eq!(
                first_column_coefficient(&Bipartition::new(Partition::row(n), Partition::empty())),
                0
            );
        }
    }

    #[test]
    fn printed_k_roots() {
        let roots = k_roots_of_identity(3, 3).unwrap();
        let expected = perms(&[
            &[1, 2, 3],
            &[2, 3, 1],
            &[3, 1, 2],
            &[-2, -3, 1],
            &[-2, 3, -1],
            &[2, -3, -1],
            &[-3, -1, 2],
            &[-3, 1, -2],
            &[3, -1, -2],
        ]);
        assert_eq!(roots.iter().cloned().collect::<BTreeSet<_>>(), expected);
        let printed = vec_b(&[
            (&[3], &[], 1),
            (&[2, 1], &[], 1),
            (&[1], &[2], 1),
            (&[1], &[1, 1], 1),
        ]);
        assert_eq!(solve_b(&roots, 3), printed);
        assert_eq!(
            crate::symfunc::frobenius_b(&kroot_class_function(3, 3).unwrap()),
            printed
        );
        assert_eq!(
            k_roots_of_identity(4, 1).unwrap(),
            vec![SignedPerm::identity(4)]
        );
    }

    #[test]
    fn kroot_trivial_and_gelfand() {
        let r = kroot_class_function(3, 1).unwrap();
        assert_eq!(r.iter().count(), enumerate_bipartitions(3).len());
        assert!(r.iter().all(|(_, v)| *v == int(1)));
        assert_eq!(
            crate::symfunc::frobenius_b(&r),
            SchurVec::unit(bip(&[3], &[]))
        );
        for n in 1..=4 {
            assert_eq!(
                crate::symfunc::frobenius_b(&kroot_class_function(n, 2).unwrap()),
                ones_vector_b(n)
            );
        }
    }

    #[test]
    fn printed_arc_examples() {
        assert!(is_arc(&perm(&[2, 1, 5, 3, 4])));
        assert!(!is_arc(&perm(&[2, 1, 5, 6, 3, 4])));
        assert!(is_b_arc(&perm(&[-2, 3, -1, 5, 4])));
        assert!(is_signed_arc(&perm(&[-3, -2, 4, 1])));
        let all2: BTreeSet<_> = enumerate_bn(2).unwrap().collect();
        assert_eq!(
            b_arc_permutations(2)
                .unwrap()
                .into_iter()
                .collect::<BTreeSet<_>>(),
            all2
        );
        assert_eq!(
            signed_arc_permutations(2)
                .unwrap()
                .into_iter()
                .collect::<BTreeSet<_>>(),
            all2
        );
    }

    #[test]
    fn arc_cardinalities() {
        for n in 2..=6 {
            let f = arc_families(n).unwrap();
            assert_eq!(f.b_arc.len(), n << n, "n = {n}");
            assert_eq!(f.signed_arc.len(), n << n, "n = {n}");
            assert_eq!(f.arc.len(), n << (n - 2), "n = {n}");
            assert_eq!(f.left_unimodal.len(), 1 << (n - 1));
            assert_eq!(f.right_unimodal.len(), 1 << (n - 1));
        }
    }

    #[test]
    fn arc_expansions() {
        let four = arc_expected(4).unwrap();
        assert_eq!(four.get(&Partition::row(4)), int(1));
        assert_eq!(four.get(&Partition::hook(3, 4)), int(2));
        assert_eq!(four.get(&Partition::hook(2, 4)), int(2));
        assert_eq!(four.get(&Partition::new(vec![2, 2]).unwrap()), int(1));
        for n in 2..=5 {
            let a = DescentDistributionA::from_perms(n, &arc_permutations(n).unwrap()).unwrap();
            assert_eq!(
                dist_to_schur_a(&a).unwrap().coefficients().unwrap(),
                &arc_expected(n).unwrap()
            );
            let b =
                DescentDistributionA::from_map(n, &b_arc_permutations(n).unwrap(), SignedPerm::des)
                    .unwrap();
            assert_eq!(
                dist_to_schur_a(&b).unwrap().coefficients().unwrap(),
                &b_arc_expected(n).unwrap()
            );
            assert_eq!(
                solve_b(&signed_arc_permutations(n).unwrap(), n),
                signed_arc_expected(n).unwrap()
            );
        }
        let printed = vec_b(&[
            (&[2], &[], 1),
            (&[], &[2], 1),
            (&[1, 1], &[], 1),
            (&[], &[1, 1], 1),
            (&[1], &[1], 2),
        ]);
        assert_eq!(signed_arc_expected(2).unwrap(), printed);
        assert!(arc_expected(1).is_err());
    }

    #[test]
    fn restriction_of_regular() {
        for n in 1..=4 {
            let r = restrict_to_sn(&regular_vector_b(n));
            for (shape, c) in r.iter() {
                assert_eq!(*c, int(((1u64 << n) * shape.hook_count()) as i64));
            }
        }
    }
}
