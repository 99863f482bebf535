use proptest::prelude::*;

use hyperoct::character::{chi_b, chi_b_oracle};
use hyperoct::rsk::{knuth_class, rsk_b};
use hyperoct::shapes::{comp_from_sigset, enumerate_bipartitions, enumerate_signed_compositions};
use hyperoct::symfunc::{DescentBasisB, FineVerdict};
use hyperoct::tableau::sdes_bitableau;
use hyperoct::{Rational, SchurVec, SignedComposition, SignedPerm, SignedSet};

fn arb_perm(max_n: usize) -> impl Strategy<Value = SignedPerm> {
    (1..=max_n).prop_flat_map(|n| {
        (
            Just((1..=n as i32).collect::<Vec<_>>()).prop_shuffle(),
            proptest::collection::vec(any::<bool>(), n),
        )
            .prop_map(|(w, bars)| {
                let window = w
                    .into_iter()
                    .zip(bars)
                    .map(|(v, b)| if b { -v } else { v })
                    .collect();
                SignedPerm::new(window).unwrap()
            })
    })
}

proptest! {
    #[test]
    fn flag_statistics_decompose(w in arb_perm(8)) {
        prop_assert_eq!(w.finv(), 2 * w.inv() + w.bar());
        prop_assert_eq!(w.fmaj(), 2 * w.maj() + w.bar());
        prop_assert_eq!(w.length_b(), w.inverse().length_b());
        prop_assert!(w.length_b() <= w.len() * w.len());
    }

    #[test]
    fn signed_descent_set_encodings_agree(w in arb_perm(8)) {
        let sigma = w.sdes();
        prop_assert_eq!(SignedSet::word_decode(&sigma.word_string()).unwrap(), sigma.clone());
        let gamma = comp_from_sigset(&sigma);
        prop_assert_eq!(gamma.size(), w.len());
        prop_assert_eq!(gamma.to_signed_set(), sigma.clone());
        prop_assert!(sigma.set().contains(&w.len()));
    }

    #[test]
    fn insertion_records_descents(w in arb_perm(7)) {
        let (p, q) = rsk_b(&w);
        prop_assert_eq!(sdes_bitableau(&q).unwrap(), w.sdes());
        prop_assert_eq!(p.shape(), q.shape());
        prop_assert_eq!(rsk_b(&w.inverse()), (q, p));
    }

    #[test]
    fn knuth_classes_share_insertion_tableau(w in arb_perm(4)) {
        let p = rsk_b(&w).0;
        let class = knuth_class(&p).unwrap();
        prop_assert!(class.contains(&w));
        prop_assert!(class.iter().all(|u| rsk_b(u).0 == p));
        prop_assert_eq!(class.len() as u64, p.shape().syt_count());
    }
}

fn class_pair(n: usize) -> impl Strategy<Value = (hyperoct::Bipartition, SignedComposition)> {
    let shapes = enumerate_bipartitions(n);
    let gammas = enumerate_signed_compositions(n);
    (0..shapes.len(), 0..gammas.len())
        .prop_map(move |(i, j)| (shapes[i].clone(), gammas[j].clone()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn character_rule_matches_oracle((shape, gamma) in (1usize..=6).prop_flat_map(class_pair)) {
        prop_assert_eq!(chi_b(&shape, &gamma).unwrap(), chi_b_oracle(&shape, &gamma.class()).unwrap());
    }

    #[test]
    fn character_is_a_class_function((shape, gamma) in (1usize..=6).prop_flat_map(class_pair), rotate in 0usize..6) {
        let mut parts = gamma.parts().to_vec();
        let k = rotate % parts.len();
        parts.rotate_left(k);
        let rotated = SignedComposition::new(parts).unwrap();
        prop_assert_eq!(chi_b(&shape, &gamma).unwrap(), chi_b(&shape, &rotated).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn synthesized_distributions_expand_back(n in 1usize..=3, seed in proptest::collection::vec(0i64..4, 20)) {
        let basis = DescentBasisB::new(n);
        let mut v = SchurVec::zero(n);
        for (shape, c) in basis.shapes().iter().zip(&seed) {
            v.add_term(shape.clone(), Rational::from_integer((*c).into()));
        }
        let d = basis.synthesize(&v).unwrap();
        match basis.expand(&d).unwrap() {
            FineVerdict::Fine(a) => prop_assert_eq!(a, v),
            other => prop_assert!(false, "verdict {}", other.label()),
        }
    }
}
