//! The weight matrices `A_n`, `Â_n` and `A_n^a` of size `2·3^{n−1}`.
//!
//! Rows are signed compositions and columns signed sets, both listed by
//! their `{0, 1, *}` words in lexicographic order. Entry `(γ, σ)` is
//! `wt_γ(σ)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::character::weight;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::shapes::{enumerate_signed_compositions, enumerate_signed_sets, Letter, SignedSet};

/// Largest `n` accepted by the builders (size 486).
pub const MAX_MATRIX_N: usize = 6;

pub type WeightMatrix = Matrix<BigRational>;

fn check(n: usize) -> Result<()> {
    if n == 0 || n > MAX_MATRIX_N {
        Err(Error::BoundExceeded {
            n,
            bound: MAX_MATRIX_N,
        })
    } else {
        Ok(())
    }
}

/// Position of the first letter other than `*`.
fn first_marked(s: &SignedSet) -> (usize, Letter) {
    s.word_encode()
        .iter()
        .copied()
        .enumerate()
        .find(|(_, l)| *l != Letter::Star)
        .expect("the last letter is marked")
}

fn build(n: usize, keep: impl Fn(&SignedSet, &SignedSet) -> bool) -> Result<WeightMatrix> {
    check(n)?;
    let rows = enumerate_signed_compositions(n);
    let cols = enumerate_signed_sets(n);
    let mut m = Matrix::zeros(rows.len(), cols.len());
    for (i, gamma) in rows.iter().enumerate() {
        let row_word = gamma.to_signed_set();
        for (j, sigma) in cols.iter().enumerate() {
            if keep(&row_word, sigma) {
                m[(i, j)] = BigRational::from_integer(weight(gamma, sigma)?.into());
            }
        }
    }
    Ok(m)
}

pub fn build_a(n: usize) -> Result<WeightMatrix> {
    build(n, |_, _| true)
}

/// `A_n` with entries zeroed where `i(row) > i(column)`.
pub fn build_a_hat(n: usize) -> Result<WeightMatrix> {
    build(n, |r, c| first_marked(r).0 <= first_marked(c).0)
}

/// `A_n` restricted to columns whose first marked letter is `letter`.
pub fn build_a_part(n: usize, letter: Letter) -> Result<WeightMatrix> {
    if letter == Letter::Star {
        return Err(Error::MalformedWord("*".into()));
    }
    build(n, |_, c| first_marked(c).1 == letter)
}

/// `α·A_n + (1 − α)·Â_n`.
pub fn build_mix(n: usize, alpha: &BigRational) -> Result<WeightMatrix> {
    let a = build_a(n)?.scale(alpha);
    let hat = build_a_hat(n)?.scale(&(BigRational::one() - alpha));
    a.add(&hat)
}

/// `−Π_γ 2^{k/2}(α·γ_1 + 1 − α)·Π_{i≥2} γ_i` over all signed compositions,
/// `k` being the number of parts.
pub fn det_closed_form(n: usize, alpha: &BigRational) -> Result<BigRational> {
    let mut product = BigRational::one();
    let mut half_powers = 0usize;
    for gamma in enumerate_signed_compositions(n) {
        let sizes: Vec<usize> = gamma.parts().iter().map(|p| p.0).collect();
        half_powers += sizes.len();
        let first = BigRational::from_integer(sizes[0].into());
        let mut m = alpha * first + BigRational::one() - alpha;
        for &s in &sizes[1..] {
            m *= BigRational::from_integer(s.into());
        }
        product *= m;
    }
    assert!(half_powers.is_multiple_of(2), "odd total number of parts");
    let two_power = BigRational::from_integer(BigInt::one() << (half_powers / 2));
    Ok(-(product * two_power))
}

/// Checks the 3×3 block recursions of `A_{n+1}` and `Â_{n+1}` in terms of
/// level-`n` matrices.
pub fn verify_block_recursion(n: usize) -> Result<bool> {
    check(n + 1)?;
    let a = build_a(n)?;
    let a_hat = build_a_hat(n)?;
    let a0 = build_a_part(n, Letter::Zero)?;
    let a1 = build_a_part(n, Letter::One)?;
    let zero = Matrix::zeros(a.rows(), a.cols());
    let a_next = Matrix::from_blocks(&[
        vec![a.clone(), a.clone(), a.clone()],
        vec![a.clone(), a.neg(), a0.sub(&a1)?],
        vec![a0.neg(), a1.neg(), a_hat.clone()],
    ])?;
    let a_hat_next = Matrix::from_blocks(&[
        vec![a.clone(), a.clone(), a.clone()],
        vec![a.clone(), a.neg(), a0.sub(&a1)?],
        vec![zero.clone(), zero, a_hat],
    ])?;
    Ok(build_a(n + 1)? == a_next && build_a_hat(n + 1)? == a_hat_next)
}

/// Whether every entry is `−1`, `0` or `1`.
pub fn entries_are_signs(m: &WeightMatrix) -> bool {
    (0..m.rows()).all(|i| {
        m.row(i)
            .iter()
            .all(|v| v.is_zero() || *v == BigRational::one() || *v == -BigRational::one())
    })
}
