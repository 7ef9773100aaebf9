//! Plactic operators `D_1^r … D_5^r` generating the relation "same left
//! tableau under `G_r`".
//!
//! Each family is a [`PlacticOperator`] in a registry ([`operators`]).
//! Moves are reported in both directions, so the set of moves at a word is
//! closed under undoing: if `m` takes `w` to `v`, some move at `v` takes it
//! back to `w`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::SignedPermutation;
use crate::rs_maps::left_tableau;

/// Whether a block move was matched on the source itself or on its image.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Forward,
    Reverse,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MoveSite {
    /// Exchange of `w_i` and `w_{i+1}` (1-indexed).
    Swap { i: usize },
    /// Bar `w_1`.
    BarFirst,
    /// A block move of `D_4`/`D_5`: the letter at `from` is barred and
    /// reinserted at `to` (1-indexed positions, before the move).
    Block {
        k: usize,
        t: usize,
        case: u8,
        direction: Direction,
        blocks: Vec<Vec<i32>>,
        pivot: i32,
        from: usize,
        to: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct PlacticMove {
    pub operator: u8,
    pub rank: usize,
    pub site: MoveSite,
}

pub trait PlacticOperator: Send + Sync {
    /// 1 through 5.
    fn index(&self) -> u8;

    fn name(&self) -> String {
        format!("D{}", self.index())
    }

    /// Every site of `w` where this operator applies at rank `r`.
    fn find(&self, w: &[i32], r: usize) -> Vec<PlacticMove>;

    /// `sign(apply(w, m)) / sign(w)`.
    fn sign_factor(&self, m: &PlacticMove) -> i8;
}

/// The five operator families in index order.
pub fn operators() -> Vec<Box<dyn PlacticOperator>> {
    vec![
        Box::new(Knuth),
        Box::new(SignSwap),
        Box::new(BarFirst),
        Box::new(BlockMove { five: false }),
        Box::new(BlockMove { five: true }),
    ]
}

pub fn operator(index: u8) -> Option<Box<dyn PlacticOperator>> {
    operators().into_iter().find(|op| op.index() == index)
}

fn swapped(w: &[i32], i: usize) -> Vec<i32> {
    let mut v = w.to_vec();
    v.swap(i - 1, i);
    v
}

/// `D_1`: Knuth relations in the integer order on signed letters.
struct Knuth;

impl Knuth {
    fn pattern(w: &[i32], i: usize) -> bool {
        let at = |p: usize| w.get(p.wrapping_sub(1)).copied();
        let (Some(a), Some(b)) = (at(i), at(i + 1)) else {
            return false;
        };
        let after = at(i + 2).is_some_and(|c| a < c && c < b);
        let before = i >= 2 && at(i - 1).is_some_and(|c| a < c && c < b);
        after || before
    }
}

impl PlacticOperator for Knuth {
    fn index(&self) -> u8 {
        1
    }

    fn find(&self, w: &[i32], r: usize) -> Vec<PlacticMove> {
        (1..w.len())
            .filter(|&i| Knuth::pattern(w, i) || Knuth::pattern(&swapped(w, i), i))
            .map(|i| PlacticMove {
                operator: 1,
                rank: r,
                site: MoveSite::Swap { i },
            })
            .collect()
    }

    fn sign_factor(&self, _: &PlacticMove) -> i8 {
        -1
    }
}

/// `D_2`: exchange of opposite-signed neighbours among the first `r + 1` letters.
struct SignSwap;

impl PlacticOperator for SignSwap {
    fn index(&self) -> u8 {
        2
    }

    fn find(&self, w: &[i32], r: usize) -> Vec<PlacticMove> {
        (1..=r.min(w.len().saturating_sub(1)))
            .filter(|&i| (w[i - 1] > 0) != (w[i] > 0))
            .map(|i| PlacticMove {
                operator: 2,
                rank: r,
                site: MoveSite::Swap { i },
            })
            .collect()
    }

    fn sign_factor(&self, _: &PlacticMove) -> i8 {
        -1
    }
}

/// `D_3`: bar `w_1` when it dominates `w_2 … w_{r+2}` in absolute value and
/// those letters form a [`sign_run`].
struct BarFirst;

/// Whether `s` is an increasing run of negatives followed by a decreasing run
/// of positives, or the same two runs in the opposite order.
fn sign_run(s: &[i32]) -> bool {
    let split = s.iter().take_while(|&&x| x < 0).count();
    let (neg, pos) = s.split_at(split);
    if pos.iter().all(|&x| x > 0)
        && neg.windows(2).all(|p| p[0] < p[1])
        && pos.windows(2).all(|p| p[0] > p[1])
    {
        return true;
    }
    let split = s.iter().take_while(|&&x| x > 0).count();
    let (pos, neg) = s.split_at(split);
    neg.iter().all(|&x| x < 0)
        && pos.windows(2).all(|p| p[0] > p[1])
        && neg.windows(2).all(|p| p[0] < p[1])
}

impl PlacticOperator for BarFirst {
    fn index(&self) -> u8 {
        3
    }

    fn find(&self, w: &[i32], r: usize) -> Vec<PlacticMove> {
        if w.len() < r + 2 {
            return Vec::new();
        }
        let head = w[0].unsigned_abs();
        let rest = &w[1..r + 2];
        if rest.iter().all(|x| x.unsigned_abs() < head) && sign_run(rest) {
            vec![PlacticMove {
                operator: 3,
                rank: r,
                site: MoveSite::BarFirst,
            }]
        } else {
            Vec::new()
        }
    }

    fn sign_factor(&self, _: &PlacticMove) -> i8 {
        -1
    }
}

/// `D_4` (`five == false`) and `D_5`.
struct BlockMove {
    five: bool,
}

/// A word cut into blocks `𝔠_1 … 𝔠_{k+1}`, each an `a` run then a `b` run.
/// `a[i][j - 1]` is `a_{i+1, j}`; runs are stored in reading order reversed,
/// so index 0 holds the `j = 1` entry.
struct Blocks {
    a: Vec<Vec<i32>>,
    b: Vec<Vec<i32>>,
    starts: Vec<usize>,
}

impl Blocks {
    fn a(&self, i: usize, j: usize) -> Option<i32> {
        j.checked_sub(1)
            .and_then(|j| self.a.get(i - 1)?.get(j).copied())
    }

    fn b(&self, i: usize, j: usize) -> Option<i32> {
        j.checked_sub(1)
            .and_then(|j| self.b.get(i - 1)?.get(j).copied())
    }
}

fn between(z: i32, x: i32, y: i32) -> bool {
    x.min(y) < z && z < x.max(y)
}

fn abs(x: i32) -> u32 {
    x.unsigned_abs()
}

impl BlockMove {
    fn op(&self) -> u8 {
        if self.five {
            5
        } else {
            4
        }
    }

    fn t(&self, k: usize, r: usize) -> usize {
        if self.five {
            (k + 1) * (r + k + 2)
        } else {
            (k + 1) * (r + k + 1)
        }
    }

    /// Run lengths `(|a|, |b|)` of block `i`.
    fn lengths(&self, i: usize, k: usize, r: usize) -> (usize, usize) {
        if i <= k {
            (i + r, i)
        } else if self.five {
            (k + r + 1, k)
        } else {
            (k + r, 0)
        }
    }

    fn cut(&self, w: &[i32], k: usize, r: usize) -> Blocks {
        let mut pos = 0;
        let mut blocks = Blocks {
            a: Vec::new(),
            b: Vec::new(),
            starts: Vec::new(),
        };
        for i in 1..=k + 1 {
            let (la, lb) = self.lengths(i, k, r);
            blocks.starts.push(pos);
            blocks
                .a
                .push(w[pos..pos + la].iter().rev().copied().collect());
            blocks
                .b
                .push(w[pos + la..pos + la + lb].iter().rev().copied().collect());
            pos += la + lb;
        }
        blocks
    }

    /// 0-indexed `(from, to)` of the forward move.
    fn endpoints(&self, blocks: &Blocks, k: usize, r: usize) -> (usize, usize) {
        let sk = blocks.starts[k - 1];
        if self.five {
            (blocks.starts[k], sk + k + r)
        } else {
            (sk + k + r, sk)
        }
    }

    /// Forward pattern at `k`; returns the matching case.
    fn matches(&self, w: &[i32], k: usize, r: usize) -> Option<u8> {
        let t = self.t(k, r);
        if k == 0 || t > w.len() {
            return None;
        }
        let bl = self.cut(w, k, r);
        let s = w[0] > 0;
        let signs_ok = bl.a.iter().flatten().all(|&x| (x > 0) == s)
            && bl.b.iter().flatten().all(|&x| (x > 0) != s);
        if !signs_ok {
            return None;
        }
        for runs in [&bl.a, &bl.b] {
            for (i, run) in runs.iter().enumerate() {
                for j in 0..run.len() {
                    if j > 0 && abs(run[j - 1]) >= abs(run[j]) {
                        return None;
                    }
                    if let Some(&next) = runs.get(i + 1).and_then(|n| n.get(j)) {
                        if abs(run[j]) >= abs(next) {
                            return None;
                        }
                    }
                }
            }
        }
        let a = |i, j| bl.a(i, j).expect("a in range");
        let b = |i, j| bl.b(i, j).expect("b in range");
        if self.five {
            for i in 1..=k {
                if !(abs(a(i, r + i)) < abs(b(i, i)) && abs(b(i, i)) < abs(a(i + 1, r + i + 1))) {
                    return None;
                }
            }
        } else {
            // |a_{1,r+1}| < |b_{1,1}| < |a_{2,r+2}| < … < |b_{k,k}|
            for i in 1..=k {
                if abs(a(i, r + i)) >= abs(b(i, i))
                    || (i > 1 && abs(b(i - 1, i - 1)) >= abs(a(i, r + i)))
                {
                    return None;
                }
            }
        }
        let nmax = w[..t - 1].iter().map(|&x| abs(x)).max().unwrap_or(0);
        let z = w[t - 1];
        let some_cross = |lo: &dyn Fn(usize) -> i32, hi: &dyn Fn(usize) -> i32| {
            (2..k).any(|i| abs(lo(i)) < abs(hi(i + 1)))
        };
        if self.five {
            let top = abs(b(k + 1, k)) == nmax;
            if abs(a(k + 1, r + k + 1)) == nmax && between(z, a(k + 1, 1), b(k + 1, 1)) {
                return Some(1);
            }
            if top && between(z, a(k + 1, 1), b(k, 1)) {
                return Some(2);
            }
            if top && between(z, b(k, 1), b(k + 1, 1)) && some_cross(&|i| b(k + 1, i), &|i| b(k, i))
            {
                return Some(3);
            }
        } else {
            let top = abs(a(k + 1, r + k)) == nmax;
            if abs(b(k, k)) == nmax && between(z, a(k + 1, 1), b(k, 1)) {
                return Some(1);
            }
            if top && between(z, a(k, 1), b(k, 1)) {
                return Some(2);
            }
            if top && between(z, a(k, 1), a(k + 1, 1)) && some_cross(&|i| a(k + 1, i), &|i| a(k, i))
            {
                return Some(3);
            }
        }
        None
    }

    #[allow(clippy::too_many_arguments)]
    fn build(
        &self,
        w: &[i32],
        k: usize,
        r: usize,
        case: u8,
        direction: Direction,
        from: usize,
        to: usize,
    ) -> PlacticMove {
        let source = match direction {
            Direction::Forward => w.to_vec(),
            Direction::Reverse => relocate(w, from, to),
        };
        let bl = self.cut(&source, k, r);
        let blocks =
            bl.a.iter()
                .zip(&bl.b)
                .map(|(a, b)| a.iter().rev().chain(b.iter().rev()).copied().collect())
                .collect();
        let t = self.t(k, r);
        PlacticMove {
            operator: self.op(),
            rank: r,
            site: MoveSite::Block {
                k,
                t,
                case,
                direction,
                blocks,
                pivot: source[t - 1],
                from: from + 1,
                to: to + 1,
            },
        }
    }
}

/// Removes the letter at `from`, bars it and reinserts it at `to` (0-indexed).
fn relocate(w: &[i32], from: usize, to: usize) -> Vec<i32> {
    let mut v = w.to_vec();
    let x = v.remove(from);
    v.insert(to, -x);
    v
}

impl PlacticOperator for BlockMove {
    fn index(&self) -> u8 {
        self.op()
    }

    fn find(&self, w: &[i32], r: usize) -> Vec<PlacticMove> {
        let mut out = Vec::new();
        let mut k = 1;
        while self.t(k, r) <= w.len() {
            let bl = self.cut(w, k, r);
            let (from, to) = self.endpoints(&bl, k, r);
            if let Some(case) = self.matches(w, k, r) {
                out.push(self.build(w, k, r, case, Direction::Forward, from, to));
            }
            let source = relocate(w, to, from);
            if let Some(case) = self.matches(&source, k, r) {
                out.push(self.build(w, k, r, case, Direction::Reverse, to, from));
            }
            k += 1;
        }
        out
    }

    fn sign_factor(&self, m: &PlacticMove) -> i8 {
        let MoveSite::Block { k, .. } = m.site else {
            return 1;
        };
        let exponent = if self.five { k + 1 } else { k + m.rank + 1 };
        if exponent % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// Every applicable move at rank `r`, operator by operator.
pub fn applicable_moves(w: &SignedPermutation, r: usize) -> Vec<PlacticMove> {
    operators()
        .iter()
        .flat_map(|op| op.find(w.window(), r))
        .collect()
}

/// Rewrites `w` by `m`, which must be among `applicable_moves(w, m.rank)`.
pub fn apply_move(w: &SignedPermutation, m: &PlacticMove) -> Result<SignedPermutation> {
    let op = operator(m.operator)
        .ok_or_else(|| Error::InapplicableMove(format!("no operator D{}", m.operator)))?;
    if !op.find(w.window(), m.rank).contains(m) {
        return Err(Error::InapplicableMove(format!("{m:?} at {w}")));
    }
    let window = match &m.site {
        MoveSite::Swap { i } => swapped(w.window(), *i),
        MoveSite::BarFirst => {
            let mut v = w.window().to_vec();
            v[0] = -v[0];
            v
        }
        MoveSite::Block { from, to, .. } => relocate(w.window(), from - 1, to - 1),
    };
    SignedPermutation::new(window)
}

/// `sign(apply_move(w, m)) / sign(w)`.
pub fn move_sign_law(m: &PlacticMove) -> i8 {
    operator(m.operator).map_or(1, |op| op.sign_factor(m))
}

/// All windows reachable from `w` by plactic moves, in sorted order.
pub fn plactic_class(w: &SignedPermutation, r: usize) -> BTreeSet<SignedPermutation> {
    let mut seen = BTreeSet::from([w.clone()]);
    let mut queue = VecDeque::from([w.clone()]);
    while let Some(v) = queue.pop_front() {
        for m in applicable_moves(&v, r) {
            let next = apply_move(&v, &m).expect("found move applies");
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen
}

/// Plactic classes of `H_n` at rank `r`, ordered by their least element.
pub fn plactic_classes(n: usize, r: usize) -> Vec<BTreeSet<SignedPermutation>> {
    let mut assigned = BTreeSet::new();
    let mut out = Vec::new();
    for w in SignedPermutation::enumerate(n) {
        if assigned.contains(&w) {
            continue;
        }
        let class = plactic_class(&w, r);
        assigned.extend(class.iter().cloned());
        out.push(class);
    }
    out.sort_by(|a, b| a.first().cmp(&b.first()));
    out
}

/// Fibers of the left tableau of `G_r` on `H_n`, ordered by least element.
pub fn left_tableau_fibers(n: usize, r: usize) -> Vec<BTreeSet<SignedPermutation>> {
    let mut fibers: BTreeMap<String, BTreeSet<SignedPermutation>> = BTreeMap::new();
    for w in SignedPermutation::enumerate(n) {
        let key = left_tableau(&w, r).render_ascii();
        fibers.entry(key).or_default().insert(w);
    }
    let mut out: Vec<_> = fibers.into_values().collect();
    out.sort_by(|a, b| a.first().cmp(&b.first()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(w: &[i32]) -> SignedPermutation {
        SignedPermutation::new(w.to_vec()).unwrap()
    }

    #[test]
    fn knuth_example() {
        let w = sp(&[1, 3, 2]);
        let moves = applicable_moves(&w, 0);
        let m = moves
            .iter()
            .find(|m| m.operator == 1 && m.site == MoveSite::Swap { i: 1 })
            .unwrap();
        assert_eq!(apply_move(&w, m).unwrap(), sp(&[3, 1, 2]));
        assert_eq!(move_sign_law(m), -1);
    }

    #[test]
    fn sign_swap_example() {
        let w = sp(&[-1, 2]);
        let m = applicable_moves(&w, 1)
            .into_iter()
            .find(|m| m.operator == 2)
            .unwrap();
        assert_eq!(apply_move(&w, &m).unwrap(), sp(&[2, -1]));
        assert!(applicable_moves(&w, 0).iter().all(|m| m.operator != 2));
    }

    #[test]
    fn bar_first_example() {
        let w = sp(&[-3, 2, 1]);
        let m = applicable_moves(&w, 1)
            .into_iter()
            .find(|m| m.operator == 3)
            .unwrap();
        assert_eq!(apply_move(&w, &m).unwrap(), sp(&[3, 2, 1]));
    }

    #[test]
    fn inapplicable_move_is_rejected() {
        let m = PlacticMove {
            operator: 2,
            rank: 1,
            site: MoveSite::Swap { i: 1 },
        };
        assert!(matches!(
            apply_move(&sp(&[1, 2]), &m),
            Err(Error::InapplicableMove(_))
        ));
    }

    #[test]
    fn block_sign_factors() {
        let site = |k| MoveSite::Block {
            k,
            t: 0,
            case: 1,
            direction: Direction::Forward,
            blocks: Vec::new(),
            pivot: 0,
            from: 0,
            to: 0,
        };
        let d4 = PlacticMove {
            operator: 4,
            rank: 0,
            site: site(1),
        };
        assert_eq!(move_sign_law(&d4), 1);
        let d5 = PlacticMove {
            operator: 5,
            rank: 3,
            site: site(1),
        };
        assert_eq!(move_sign_law(&d5), 1);
        let d5 = PlacticMove {
            operator: 5,
            rank: 0,
            site: site(2),
        };
        assert_eq!(move_sign_law(&d5), -1);
    }

    #[test]
    fn singleton_class() {
        let w = sp(&[1]);
        assert_eq!(plactic_class(&w, 0).len(), 1);
    }
}
