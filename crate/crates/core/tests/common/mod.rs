//! Independent oracles shared by the integration tests.

#![allow(dead_code)]

use std::collections::{HashMap, VecDeque};

use domino_rsk::{Domino, DominoTableau, Partition, SignedPermutation};

/// Coxeter generators of `H_n` acting on windows by position:
/// `t` negates the first letter, `s_i` swaps letters `i` and `i + 1`.
fn neighbours(w: &[i32]) -> Vec<Vec<i32>> {
    let mut out = Vec::with_capacity(w.len());
    if !w.is_empty() {
        let mut v = w.to_vec();
        v[0] = -v[0];
        out.push(v);
    }
    for i in 1..w.len() {
        let mut v = w.to_vec();
        v.swap(i - 1, i);
        out.push(v);
    }
    out
}

/// Word length of every element of `H_n` by breadth-first search of the
/// Cayley graph from the identity.
pub fn bfs_lengths(n: usize) -> HashMap<Vec<i32>, usize> {
    let start: Vec<i32> = (1..=n as i32).collect();
    let mut dist = HashMap::from([(start.clone(), 0)]);
    let mut queue = VecDeque::from([start]);
    while let Some(w) = queue.pop_front() {
        let d = dist[&w];
        for v in neighbours(&w) {
            if !dist.contains_key(&v) {
                dist.insert(v.clone(), d + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}

/// Determinant of the signed permutation matrix of `w`, by fraction-free
/// Gaussian elimination.
pub fn matrix_determinant(w: &SignedPermutation) -> i64 {
    let n = w.degree();
    let mut m = vec![vec![0i64; n]; n];
    for (i, &x) in w.window().iter().enumerate() {
        m[x.unsigned_abs() as usize - 1][i] = x.signum() as i64;
    }
    let mut sign = 1;
    let mut prev = 1;
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| m[r][k] != 0) else {
            return 0;
        };
        if p != k {
            m.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    if n == 0 {
        1
    } else {
        sign * m[n - 1][n - 1]
    }
}

pub fn sp(w: &[i32]) -> SignedPermutation {
    SignedPermutation::new(w.to_vec()).unwrap()
}

/// The running example `(-4, -3, 2, 1)`.
pub fn running_example() -> SignedPermutation {
    sp(&[-4, -3, 2, 1])
}

/// The involution of `H_11` used for the rank shift example.
pub fn h11_involution() -> SignedPermutation {
    sp(&[5, 9, -7, -11, 1, 6, -3, -10, 2, -8, -4])
}

/// Builds a tableau from `(label, first cell, horizontal?)` triples.
pub fn tableau(r: usize, dominoes: &[(u32, (usize, usize), bool)]) -> DominoTableau {
    let map = dominoes
        .iter()
        .map(|&(k, (row, col), horizontal)| {
            let d = if horizontal {
                Domino::horizontal(row, col)
            } else {
                Domino::vertical(row, col)
            };
            (k, d)
        })
        .collect();
    DominoTableau::new(Partition::staircase(r), map).unwrap()
}

/// `P` of the `H_11` example at rank 2.
pub fn h11_p() -> DominoTableau {
    tableau(
        2,
        &[
            (1, (1, 3), true),
            (2, (1, 5), true),
            (3, (3, 1), false),
            (4, (5, 1), false),
            (5, (2, 2), true),
            (6, (2, 4), true),
            (7, (3, 2), false),
            (8, (5, 2), false),
            (9, (3, 3), true),
            (10, (4, 3), false),
            (11, (4, 4), false),
        ],
    )
}

/// `P'` of the `H_11` example at rank 3.
pub fn h11_p_shifted() -> DominoTableau {
    tableau(
        3,
        &[
            (1, (1, 4), true),
            (2, (1, 6), true),
            (3, (4, 1), false),
            (4, (6, 1), false),
            (5, (2, 3), true),
            (6, (2, 5), true),
            (7, (3, 2), false),
            (8, (5, 2), false),
            (9, (3, 3), true),
            (10, (4, 3), false),
            (11, (4, 4), false),
        ],
    )
}

/// Random elements of `H_n` for `n` in `sizes`.
pub fn signed_permutation(
    sizes: std::ops::RangeInclusive<usize>,
) -> impl proptest::strategy::Strategy<Value = SignedPermutation> {
    use proptest::prelude::*;
    sizes
        .prop_flat_map(|n| {
            (
                Just((1..=n as i32).collect::<Vec<_>>()).prop_shuffle(),
                proptest::collection::vec(any::<bool>(), n),
            )
        })
        .prop_map(|(perm, bars)| {
            let window = perm
                .into_iter()
                .zip(bars)
                .map(|(a, b)| if b { -a } else { a })
                .collect();
            SignedPermutation::new(window).unwrap()
        })
}
