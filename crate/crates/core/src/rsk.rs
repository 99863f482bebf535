//! Robinson–Schensted insertion for `S_n` and its type-B analogue.

use crate::error::{Error, Result};
use crate::perm::{enumerate_bn, SignedPerm};
use crate::tableau::{Bitableau, Tableau};

/// `(P(w), Q(w))` for an unsigned permutation.
pub fn rsk_a(w: &SignedPerm) -> Result<(Tableau, Tableau)> {
    if !w.is_unsigned() {
        return Err(Error::SignedInput(w.to_string()));
    }
    let mut p = Tableau::empty();
    let mut q = Tableau::empty();
    for (i, &v) in w.window().iter().enumerate() {
        let row = p.row_insert(v as usize);
        q.grow(row, i + 1);
    }
    Ok((p, q))
}

/// `(P^B(w), Q^B(w))`: unbarred letters are inserted into `P⁺`, absolute
/// values of barred letters into `P⁻`, and `Q^±` record their positions.
pub fn rsk_b(w: &SignedPerm) -> (Bitableau, Bitableau) {
    let mut p = [Tableau::empty(), Tableau::empty()];
    let mut q = [Tableau::empty(), Tableau::empty()];
    for (i, &v) in w.window().iter().enumerate() {
        let side = usize::from(v < 0);
        let row = p[side].row_insert(v.unsigned_abs() as usize);
        q[side].grow(row, i + 1);
    }
    let [p_plus, p_minus] = p;
    let [q_plus, q_minus] = q;
    (
        Bitableau {
            plus: p_plus,
            minus: p_minus,
        },
        Bitableau {
            plus: q_plus,
            minus: q_minus,
        },
    )
}

/// All `w ∈ B_n` with `P^B(w) = t`.
pub fn knuth_class(t: &Bitableau) -> Result<Vec<SignedPerm>> {
    Ok(enumerate_bn(t.size())?
        .filter(|w| &rsk_b(w).0 == t)
        .collect())
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use proptest::prelude::*;

    use super::*;
    use crate::perm::testing::arb_sized_perm;
    use crate::perm::{enumerate_sn, order_bn};
    use crate::shapes::{enumerate_bipartitions, Bipartition};
    use crate::tableau::{des_tableau, enumerate_bitableaux, sdes_bitableau};

    fn p(w: &[i32]) -> SignedPerm {
        SignedPerm::new(w.to_vec()).unwrap()
    }

    #[test]
    fn type_a_basics() {
        let (pt, qt) = rsk_a(&SignedPerm::identity(4)).unwrap();
        assert_eq!(pt, Tableau::row_tableau(4));
        assert_eq!(qt, Tableau::row_tableau(4));
        let (pt, qt) = rsk_a(&p(&[4, 3, 2, 1])).unwrap();
        assert_eq!(pt, Tableau::column_tableau(4));
        assert_eq!(qt, Tableau::column_tableau(4));
        assert!(matches!(rsk_a(&p(&[1, -2])), Err(Error::SignedInput(_))));
        let pairs: HashSet<_> = enumerate_sn(4)
            .unwrap()
            .map(|w| rsk_a(&w).unwrap())
            .collect();
        assert_eq!(pairs.len(), 24);
    }

    #[test]
    fn type_a_preserves_descents() {
        for n in 1..=6 {
            for w in enumerate_sn(n).unwrap() {
                let (_, q) = rsk_a(&w).unwrap();
                assert_eq!(des_tableau(&q).unwrap(), w.des());
            }
        }
    }

    #[test]
    fn type_b_basics() {
        let n = 4;
        let (pt, qt) = rsk_b(&SignedPerm::identity(n));
        let row = Bitableau::new(Tableau::row_tableau(n), Tableau::empty()).unwrap();
        assert_eq!((pt, qt), (row.clone(), row));
        let (pt, qt) = rsk_b(&p(&[-1, -2, -3, -4]));
        let row = Bitableau::new(Tableau::empty(), Tableau::row_tableau(n)).unwrap();
        assert_eq!((pt, qt), (row.clone(), row));
    }

    #[test]
    fn type_b_properties_exhaustive() {
        for n in 1..=5 {
            let mut seen = HashSet::new();
            for w in enumerate_bn(n).unwrap() {
                let (pt, qt) = rsk_b(&w);
                assert_eq!(pt.shape(), qt.shape());
                assert_eq!(
                    pt.plus.size(),
                    w.window().iter().filter(|&&v| v > 0).count()
                );
                assert_eq!(sdes_bitableau(&qt).unwrap(), w.sdes(), "{w}");
                assert_eq!(rsk_b(&w.inverse()).0, qt, "{w}");
                assert!(seen.insert((pt, qt)));
            }
            assert_eq!(seen.len() as u64, order_bn(n));
        }
    }

    #[test]
    fn knuth_classes() {
        let row = Bitableau::new(Tableau::row_tableau(3), Tableau::empty()).unwrap();
        assert!(knuth_class(&row)
            .unwrap()
            .contains(&SignedPerm::identity(3)));
        let shape = Bipartition::from_parts(&[1], &[1]).unwrap();
        for t in enumerate_bitableaux(&shape) {
            assert_eq!(knuth_class(&t).unwrap().len(), 2);
        }
        let n = 3;
        let total: usize = enumerate_bipartitions(n)
            .iter()
            .flat_map(enumerate_bitableaux)
            .map(|t| knuth_class(&t).unwrap().len())
            .sum();
        assert_eq!(total as u64, order_bn(n));
    }

    proptest! {
        #[test]
        fn inverse_swaps_tableaux(w in arb_sized_perm(7)) {
            let (pt, qt) = rsk_b(&w);
            let (pi, qi) = rsk_b(&w.inverse());
            prop_assert_eq!(pi, qt);
            prop_assert_eq!(qi, pt);
        }
    }
}
