mod common;

use std::collections::BTreeSet;

use domino_rsk::cycles::{
    core_adjacent_squares, cycle, cycles, delta, move_through, move_through_set, rank_shift,
    shift_by_moving_through, CycleStatus,
};
use domino_rsk::domino::enumerate_sdt;
use domino_rsk::rs_maps::g_r;
use domino_rsk::{Cell, Error};
use proptest::prelude::*;

use common::*;

#[test]
fn h11_cycle_structure() {
    let p = h11_p();
    let found: Vec<(Vec<u32>, CycleStatus)> = cycles(&p)
        .unwrap()
        .iter()
        .map(|c| (c.labels().iter().copied().collect(), c.status()))
        .collect();
    assert_eq!(
        found,
        vec![
            (vec![1, 2], CycleStatus::Open),
            (vec![3, 4], CycleStatus::Open),
            (vec![5, 6], CycleStatus::Open),
            (vec![7, 8, 9], CycleStatus::Open),
            (vec![10, 11], CycleStatus::Closed),
        ]
    );
    assert_eq!(cycle(&p, 8).unwrap().labels(), &BTreeSet::from([7, 8, 9]));
    assert_eq!(
        core_adjacent_squares(2),
        vec![Cell::new(1, 3), Cell::new(2, 2), Cell::new(3, 1)]
    );
}

#[test]
fn h11_rank_shift() {
    let p = h11_p();
    assert_eq!(shift_by_moving_through(&p).unwrap(), h11_p_shifted());
    assert_eq!(rank_shift(&p, 3).unwrap(), h11_p_shifted());
    // Moving through Δ in reverse order gives the same tableau.
    let mut d = delta(&p).unwrap();
    d.reverse();
    assert_eq!(move_through_set(&p, &d).unwrap(), h11_p_shifted());
    // The closed cycle keeps the shape.
    let closed = cycle(&p, 10).unwrap();
    assert_eq!(move_through(&p, &closed).unwrap().shape(), p.shape());
}

#[test]
fn bad_cycles_are_rejected() {
    let p = h11_p();
    let c = cycle(&p, 1).unwrap();
    // Some tableau where 1 and 2 lie in different cycles.
    let other = enumerate_sdt(2, 3)
        .into_iter()
        .find(|t| cycle(t, 1).unwrap().labels() != c.labels())
        .unwrap();
    assert!(matches!(move_through(&other, &c), Err(Error::NotACycle(_))));
    assert!(matches!(
        move_through_set(&p, &[c.clone(), c]),
        Err(Error::NotACycle(_))
    ));
    assert!(cycle(&p, 12).is_err());
}

#[test]
fn empty_tableau_shift() {
    for r in 0..4 {
        let t = domino_rsk::DominoTableau::core(r);
        assert!(delta(&t).unwrap().iter().all(|c| c.labels().is_empty()));
        assert_eq!(
            shift_by_moving_through(&t).unwrap(),
            domino_rsk::DominoTableau::core(r + 1)
        );
    }
}

#[test]
fn shift_agrees_with_rank_shift_exhaustively() {
    for n in 0..=5 {
        for r in 0..=3 {
            for t in enumerate_sdt(r, n) {
                let moved = shift_by_moving_through(&t).unwrap();
                assert_eq!(
                    moved,
                    rank_shift(&t, r + 1).unwrap(),
                    "{}",
                    t.render_ascii()
                );
                assert_eq!(delta(&t).unwrap().len(), r + 1);
            }
        }
    }
}

proptest! {
    #[test]
    fn cycles_partition_labels(w in signed_permutation(0..=8), r in 0usize..4) {
        let (p, _) = g_r(&w, r);
        let all = cycles(&p).unwrap();
        let mut seen = BTreeSet::new();
        for c in &all {
            for &l in c.labels() {
                prop_assert!(seen.insert(l));
            }
            let moved = move_through(&p, c).unwrap();
            prop_assert!(moved.validate().is_ok());
            prop_assert_eq!(c.is_open(), moved.shape() != p.shape());
        }
        prop_assert_eq!(seen, p.labels().collect::<BTreeSet<_>>());
    }

    #[test]
    fn shift_preserves_statistics(w in signed_permutation(0..=8), r in 0usize..4) {
        let (p, _) = g_r(&w, r);
        let moved = shift_by_moving_through(&p).unwrap();
        prop_assert_eq!(moved.canonical_rank(), Ok(r + 1));
        prop_assert_eq!(moved.d_statistic(), p.d_statistic());
        prop_assert_eq!(moved.vertical_count(), p.vertical_count());
        prop_assert_eq!(moved, rank_shift(&p, r + 1).unwrap());
    }
}
