mod common;

use std::collections::BTreeMap;

use domino_rsk::domino::enumerate_sdt;
use domino_rsk::rs_maps::{g_infinity, g_r};
use domino_rsk::young::{rs, rs_inverse, Bitableau, YoungTableau};
use domino_rsk::{Cell, Domino, DominoTableau, Error, Partition};
use proptest::prelude::*;

use common::*;

fn part(p: &[usize]) -> Partition {
    Partition::new(p.to_vec()).unwrap()
}

#[test]
fn corners_and_cores() {
    let l = part(&[4, 3, 3, 1]);
    assert_eq!(
        l.corners(),
        vec![Cell::new(1, 4), Cell::new(3, 3), Cell::new(4, 1)]
    );
    for c in l.corners() {
        assert!(l.remove_corner(c).is_ok());
    }
    assert!(matches!(
        l.remove_corner(Cell::new(2, 3)),
        Err(Error::NotACorner(_))
    ));
    assert_eq!(l.two_core(), (2, part(&[2, 1])));
    assert_eq!(part(&[2]).two_core(), (0, Partition::empty()));
    assert_eq!(part(&[3, 2, 1]).two_core(), (3, Partition::staircase(3)));
    assert!(Partition::empty().corners().is_empty());
    assert!(Partition::new(vec![1, 2]).is_err());
    assert!(Partition::new(vec![2, 0]).is_err());
}

#[test]
fn two_core_ignores_removal_order() {
    // Strip dominoes in every possible order and collect the end points.
    fn ends(l: &Partition, out: &mut Vec<Partition>) {
        let doms = l.removable_dominoes();
        if doms.is_empty() {
            out.push(l.clone());
        }
        for d in doms {
            ends(&l.remove_domino(d).unwrap(), out);
        }
    }
    for parts in [vec![4, 3, 3, 1], vec![5, 4, 2, 2, 1], vec![6, 1, 1, 1]] {
        let l = part(&parts);
        let mut out = Vec::new();
        ends(&l, &mut out);
        assert!(out.iter().all(|p| *p == l.two_core().1), "{parts:?}");
    }
}

#[test]
fn domino_tableau_counts() {
    // Number of standard domino tableaux of each rank with n dominoes
    // equals the number of standard bitableaux: sum over k of C(n,k) * #involutions.
    let involutions = [1u64, 1, 2, 4, 10, 26];
    for n in 0..=5usize {
        let binom = |k: usize| (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1));
        let expected: u64 = (0..=n)
            .map(|k| binom(k) * involutions[k] * involutions[n - k])
            .sum();
        for r in 0..=3 {
            let all = enumerate_sdt(r, n);
            assert_eq!(all.len() as u64, expected, "n={n} r={r}");
            assert!(all
                .iter()
                .all(|t| t.canonical_rank() == Ok(r) && t.validate().is_ok()));
        }
    }
}

#[test]
fn invalid_tableaux_are_rejected() {
    let doms = |v: &[(u32, Domino)]| v.iter().copied().collect::<BTreeMap<_, _>>();
    // Label 2 placed before label 1 can be covered.
    let t = DominoTableau::new(
        Partition::empty(),
        doms(&[(2, Domino::horizontal(1, 1)), (1, Domino::horizontal(1, 3))]),
    );
    assert!(matches!(t, Err(Error::InvalidTableau(_))));
    // Overlapping dominoes.
    let t = DominoTableau::new(
        Partition::empty(),
        doms(&[(1, Domino::horizontal(1, 1)), (2, Domino::vertical(1, 2))]),
    );
    assert!(t.is_err());
    assert!(Domino::new(Cell::new(1, 1), Cell::new(2, 2)).is_err());
    assert!(YoungTableau::new(vec![vec![1, 3], vec![2, 4], vec![5, 6, 7]]).is_err());
    assert!(Bitableau::new(
        YoungTableau::new(vec![vec![1]]).unwrap(),
        YoungTableau::new(vec![vec![1]]).unwrap()
    )
    .is_err());
}

#[test]
fn json_rejects_bad_input() {
    assert!(serde_json::from_str::<Partition>("[1, 2]").is_err());
    assert!(serde_json::from_str::<YoungTableau>("[[2, 1]]").is_err());
    assert!(serde_json::from_str::<Bitableau>(r#"{"first": [[1]], "second": [[1]]}"#).is_err());
    assert!(serde_json::from_str::<DominoTableau>(
        r#"{"zero_region": [], "dominoes": [{"label": 1, "cells": [[1, 1], [2, 2]]}]}"#
    )
    .is_err());
    let t: DominoTableau = serde_json::from_str(
        r#"{"zero_region": [[1, 1]], "dominoes": [{"label": 1, "cells": [[1, 2], [1, 3]]}]}"#,
    )
    .unwrap();
    assert_eq!(t.canonical_rank(), Ok(1));
}

#[test]
fn running_example_statistics() {
    let (p, q) = g_r(&running_example(), 2);
    let s = q.statistics();
    assert_eq!((s.vertical, s.twice_spin, s.d), (3, 3, 1));
    assert_eq!(q.sign(), -1);
    assert_eq!(p.d_statistic(), q.d_statistic());
    let (bp, bq) = g_infinity(&running_example());
    assert_eq!(bp.twice_spin() + bq.twice_spin(), 4);
    assert_eq!(bp.render_ascii(), "first:\n1\n2\nsecond:\n3\n4\n");
    assert_eq!(YoungTableau::empty().render_ascii(), "-\n");
}

proptest! {
    #[test]
    fn domino_tableau_json_roundtrip(w in signed_permutation(0..=7), r in 0usize..4) {
        let (p, q) = g_r(&w, r);
        for t in [p, q] {
            let text = serde_json::to_string(&t).unwrap();
            prop_assert_eq!(serde_json::from_str::<DominoTableau>(&text).unwrap(), t.clone());
            prop_assert_eq!(t.transpose().transpose(), t.clone());
            prop_assert!(t.transpose().validate().is_ok());
            let s = t.statistics();
            prop_assert_eq!(s.eh + s.ev, s.d);
            prop_assert_eq!(t.sign() == 1, t.inversions().len() % 2 == 0);
        }
    }

    #[test]
    fn bitableau_json_roundtrip(w in signed_permutation(0..=8)) {
        let (p, q) = g_infinity(&w);
        for t in [p, q] {
            let text = serde_json::to_string(&t).unwrap();
            prop_assert_eq!(serde_json::from_str::<Bitableau>(&text).unwrap(), t.clone());
            prop_assert!(t.is_standard());
        }
    }

    #[test]
    fn classical_rs_roundtrip(w in signed_permutation(0..=9)) {
        let perm = w.underlying();
        let (p, q) = rs(&perm);
        prop_assert_eq!(p.shape(), q.shape());
        prop_assert!(p.is_standard() && q.is_standard());
        prop_assert_eq!(rs_inverse(&p, &q).unwrap(), perm.clone());
        // Transposing the word swaps the tableaux.
        let mut inv = vec![0; perm.len()];
        for (i, &x) in perm.iter().enumerate() {
            inv[x as usize - 1] = i as u32 + 1;
        }
        prop_assert_eq!(rs(&inv), (q, p));
    }
}
