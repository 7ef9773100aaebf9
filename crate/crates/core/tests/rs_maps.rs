mod common;

use domino_rsk::rs_maps::{
    g_infinity, g_infinity_inverse, g_r, g_r_inverse, insert_letter, reverse_insert, two_quotient,
    two_quotient_inverse, MapImage, RankSpec,
};
use domino_rsk::{DominoTableau, Error, SignedPermutation};
use proptest::prelude::*;

use common::*;

#[test]
fn rank_spec_parses() {
    assert_eq!("3".parse::<RankSpec>().unwrap(), RankSpec::Finite(3));
    assert_eq!("inf".parse::<RankSpec>().unwrap(), RankSpec::Infinite);
    assert!("x".parse::<RankSpec>().is_err());
    assert_eq!(RankSpec::Finite(2).map().name(), "G_2");
    assert_eq!(RankSpec::Infinite.map().name(), "G_inf");
}

#[test]
fn maps_reject_foreign_images() {
    let w = running_example();
    let domino = RankSpec::Finite(1).map();
    let bitableau = RankSpec::Infinite.map();
    let a = domino.forward(&w);
    let b = bitableau.forward(&w);
    assert!(matches!(a, MapImage::Domino(_)));
    assert!(matches!(
        bitableau.inverse(&a),
        Err(Error::InvalidTableau(_))
    ));
    assert!(matches!(domino.inverse(&b), Err(Error::InvalidTableau(_))));
    assert_eq!(domino.inverse(&a).unwrap(), w);
    assert_eq!(bitableau.inverse(&b).unwrap(), w);
}

#[test]
fn inverse_checks_its_input() {
    let (p, _) = g_r(&sp(&[1, 2, 3]), 1);
    let (_, q) = g_r(&sp(&[3, 2, 1]), 1);
    assert_eq!(g_r_inverse(&p, &q, 1), Err(Error::ShapeMismatch));
    assert!(matches!(
        g_r_inverse(&p, &p, 2),
        Err(Error::RankMismatch { .. })
    ));
    let (bp, _) = g_infinity(&sp(&[1, -2]));
    let (_, bq) = g_infinity(&sp(&[1, 2]));
    assert_eq!(g_infinity_inverse(&bp, &bq), Err(Error::ShapeMismatch));
    assert!(matches!(
        two_quotient_inverse(&bp, 0),
        Err(Error::RankTooSmall { rank: 0, degree: 2 })
    ));
}

#[test]
fn empty_word() {
    let e = SignedPermutation::identity(0);
    for r in 0..3 {
        assert_eq!(g_r(&e, r), (DominoTableau::core(r), DominoTableau::core(r)));
    }
    let (p, q) = g_infinity(&e);
    assert_eq!((p.size(), q.size()), (0, 0));
}

proptest! {
    #[test]
    fn domino_roundtrip(w in signed_permutation(0..=8), r in 0usize..6) {
        let (p, q) = g_r(&w, r);
        prop_assert_eq!(p.shape(), q.shape());
        prop_assert_eq!(p.canonical_rank(), Ok(r));
        prop_assert!(q.validate().is_ok());
        prop_assert_eq!(g_r_inverse(&p, &q, r).unwrap(), w);
    }

    #[test]
    fn bitableau_roundtrip(w in signed_permutation(0..=10)) {
        let (p, q) = g_infinity(&w);
        prop_assert_eq!(p.shape(), q.shape());
        prop_assert_eq!(g_infinity_inverse(&p, &q).unwrap(), w);
    }

    #[test]
    fn vertical_dominoes_count_barred_letters(w in signed_permutation(0..=8), r in 0usize..6) {
        let (p, q) = g_r(&w, r);
        prop_assert_eq!(p.vertical_count() + q.vertical_count(), 2 * w.total_color());
        let (bp, bq) = g_infinity(&w);
        prop_assert_eq!(bp.twice_spin() + bq.twice_spin(), 2 * w.total_color());
    }

    #[test]
    fn inverse_swaps_tableaux(w in signed_permutation(0..=7), r in 0usize..4) {
        let (p, q) = g_r(&w, r);
        prop_assert_eq!(g_r(&w.inverse(), r), (q, p));
    }

    #[test]
    fn large_rank_agrees_with_bitableau_map(w in signed_permutation(0..=7), extra in 0usize..3) {
        let r = w.degree().saturating_sub(1) + extra;
        let (p, q) = g_r(&w, r);
        let (bp, bq) = g_infinity(&w);
        prop_assert_eq!(two_quotient(&p).unwrap(), bp.clone());
        prop_assert_eq!(two_quotient(&q).unwrap(), bq);
        prop_assert_eq!(two_quotient_inverse(&bp, r).unwrap(), p);
    }

    #[test]
    fn single_insertion_is_reversible(w in signed_permutation(1..=7), r in 0usize..4) {
        let (p, _) = g_r(&w, r);
        let n = w.degree() as i32;
        // Insert a letter larger than every label, then reverse it.
        let letter = if w.window()[0] < 0 { -(n + 1) } else { n + 1 };
        let (grown, dom) = insert_letter(&p, letter);
        prop_assert_eq!(grown.len(), p.len() + 1);
        prop_assert_eq!(reverse_insert(&grown, dom).unwrap(), (p, letter));
    }
}
