//! Cycles in domino tableaux and the moving-through map.
//!
//! Every domino covers one fixed and one variable square (relative to the
//! rank parity). The shifted domino `D'(k)` keeps the fixed square and
//! swings the other cell according to the label of the diagonal neighbour.
//! A cycle is the closure of a label under overlap between `D` and `D'`;
//! moving through it replaces each `D(l)` by `D'(l)`.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::cell::Cell;
use crate::domino::{is_variable, Domino, DominoTableau, Orientation, SquareLabel};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rs_maps::{g_r, g_r_inverse};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CycleStatus {
    Open,
    Closed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cycle {
    labels: BTreeSet<u32>,
    status: CycleStatus,
    begin_square: Option<Cell>,
    final_square: Option<Cell>,
}

impl Cycle {
    pub fn labels(&self) -> &BTreeSet<u32> {
        &self.labels
    }

    pub fn status(&self) -> CycleStatus {
        self.status
    }

    pub fn is_open(&self) -> bool {
        self.status == CycleStatus::Open
    }

    /// `S_b`: the square vacated (or absorbed into the core) by moving through.
    pub fn begin_square(&self) -> Option<Cell> {
        self.begin_square
    }

    /// `S_f`: the square added to the shape by moving through.
    pub fn final_square(&self) -> Option<Cell> {
        self.final_square
    }

    /// A cycle with no dominoes at an unoccupied square next to the core;
    /// moving through it only absorbs the square into the core.
    pub fn empty_at(square: Cell) -> Cycle {
        Cycle {
            labels: BTreeSet::new(),
            status: CycleStatus::Open,
            begin_square: Some(square),
            final_square: Some(square),
        }
    }
}

fn fixed_square(d: Domino, rank: usize) -> Cell {
    let [a, b] = d.cells();
    if is_variable(a, rank) {
        b
    } else {
        a
    }
}

/// `D'(k, T)`.
pub fn shifted_domino(t: &DominoTableau, k: u32) -> Result<Domino> {
    let d = t.domino(k)?;
    let rank = t.core_rank();
    let f = fixed_square(d, rank);
    let (i, j) = (f.row as isize, f.col as isize);
    // fixed square at the top of a vertical or the right of a horizontal domino
    let fixed_is_second_half = match d.orientation() {
        Orientation::Vertical => f == d.first(),
        Orientation::Horizontal => f == d.second(),
    };
    let shifted = if fixed_is_second_half {
        if below(k, t.square_label(i - 1, j + 1)) {
            Domino::vertical(f.row - 1, f.col)
        } else {
            Domino::horizontal(f.row, f.col)
        }
    } else if below(k, t.square_label(i + 1, j - 1)) {
        Domino::horizontal(f.row, f.col - 1)
    } else {
        Domino::vertical(f.row, f.col)
    };
    Ok(shifted)
}

fn below(k: u32, label: SquareLabel) -> bool {
    match label {
        SquareLabel::Finite(x) => k < x,
        SquareLabel::Infinite => true,
    }
}

fn all_shifted(t: &DominoTableau) -> BTreeMap<u32, Domino> {
    t.labels()
        .map(|k| (k, shifted_domino(t, k).expect("label present")))
        .collect()
}

fn closure(t: &DominoTableau, shifted: &BTreeMap<u32, Domino>, k: u32) -> BTreeSet<u32> {
    let mut members = BTreeSet::from([k]);
    let mut queue = vec![k];
    while let Some(m) = queue.pop() {
        let dm = t.dominoes()[&m];
        let sm = shifted[&m];
        for (&l, dl) in t.dominoes() {
            if members.contains(&l) {
                continue;
            }
            if dl.intersects(&sm) || shifted[&l].intersects(&dm) {
                members.insert(l);
                queue.push(l);
            }
        }
    }
    members
}

/// Result of replacing the dominoes of `labels` by their shifted dominoes.
struct Moved {
    tableau: DominoTableau,
    vacated: Option<Cell>,
    added: Option<Cell>,
}

fn move_labels(
    t: &DominoTableau,
    labels: &BTreeSet<u32>,
    shifted: &BTreeMap<u32, Domino>,
) -> Result<Moved> {
    let old_shape: BTreeSet<Cell> = t.shape().cells().collect();
    let mut dominoes = t.dominoes().clone();
    for l in labels {
        dominoes.insert(*l, shifted[l]);
    }
    let mut covered: BTreeSet<Cell> = t.zero_region().cells().collect();
    for d in dominoes.values() {
        covered.extend(d.cells());
    }
    let vacated: Vec<Cell> = old_shape.difference(&covered).copied().collect();
    let added: Vec<Cell> = covered.difference(&old_shape).copied().collect();
    if vacated.len() > 1 || added.len() > 1 {
        return Err(Error::NotACycle(format!(
            "{labels:?} changes more than one square"
        )));
    }
    let mut zero = t.zero_region().clone();
    if let Some(&v) = vacated.first() {
        if zero.addable_cells().contains(&v) {
            zero = zero.add_cell(v)?;
        }
    }
    let tableau = DominoTableau::from_parts_unchecked(zero, dominoes);
    tableau
        .validate_structure()
        .map_err(|e| Error::NotACycle(format!("{labels:?}: {e}")))?;
    Ok(Moved {
        tableau,
        vacated: vacated.first().copied(),
        added: added.first().copied(),
    })
}

fn classify(
    t: &DominoTableau,
    labels: BTreeSet<u32>,
    shifted: &BTreeMap<u32, Domino>,
) -> Result<Cycle> {
    let moved = move_labels(t, &labels, shifted)?;
    let open = moved.vacated.is_some() || moved.added.is_some();
    Ok(Cycle {
        labels,
        status: if open {
            CycleStatus::Open
        } else {
            CycleStatus::Closed
        },
        begin_square: moved.vacated,
        final_square: moved.added,
    })
}

/// The cycle through `k`.
pub fn cycle(t: &DominoTableau, k: u32) -> Result<Cycle> {
    t.domino(k)?;
    let shifted = all_shifted(t);
    let labels = closure(t, &shifted, k);
    classify(t, labels, &shifted)
}

/// All cycles of `t`, ordered by smallest label.
pub fn cycles(t: &DominoTableau) -> Result<Vec<Cycle>> {
    let shifted = all_shifted(t);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for k in t.labels() {
        if seen.contains(&k) {
            continue;
        }
        let labels = closure(t, &shifted, k);
        seen.extend(labels.iter().copied());
        out.push(classify(t, labels, &shifted)?);
    }
    Ok(out)
}

/// `MT(T, c)`. The label set of `c` must be a cycle of `t`.
pub fn move_through(t: &DominoTableau, c: &Cycle) -> Result<DominoTableau> {
    let Some(&first) = c.labels.iter().next() else {
        let s = c
            .begin_square
            .ok_or_else(|| Error::NotACycle("empty cycle without a square".into()))?;
        let zero = t.zero_region();
        if !zero.addable_cells().contains(&s) || t.label_of(s).is_some() {
            return Err(Error::NotACycle(format!("square {s} cannot join the core")));
        }
        return Ok(DominoTableau::from_parts_unchecked(
            zero.add_cell(s)?,
            t.dominoes().clone(),
        ));
    };
    t.domino(first)?;
    let shifted = all_shifted(t);
    let actual = closure(t, &shifted, first);
    if actual != c.labels {
        return Err(Error::NotACycle(format!(
            "{:?} (cycle through {first} is {actual:?})",
            c.labels
        )));
    }
    Ok(move_labels(t, &actual, &shifted)?.tableau)
}

/// `MT(T, U)`: moves through each member of `cycles` in turn.
pub fn move_through_set(t: &DominoTableau, cycles: &[Cycle]) -> Result<DominoTableau> {
    let mut seen = BTreeSet::new();
    for c in cycles {
        if c.labels.iter().any(|l| !seen.insert(*l)) {
            return Err(Error::NotACycle("cycles share a label".into()));
        }
    }
    cycles
        .iter()
        .try_fold(t.clone(), |acc, c| move_through(&acc, c))
}

/// The diagonal squares `(i, r + 2 - i)` bordering the core `δ_r`.
pub fn core_adjacent_squares(r: usize) -> Vec<Cell> {
    (1..=r + 1).map(|i| Cell::new(i, r + 2 - i)).collect()
}

/// `Δ(T)`: the open cycles beginning at the squares next to the core, one
/// per square, in row order.
pub fn delta(t: &DominoTableau) -> Result<Vec<Cycle>> {
    let r = t.canonical_rank()?;
    let shifted = all_shifted(t);
    core_adjacent_squares(r)
        .into_iter()
        .map(|s| match t.label_of(s) {
            None => Ok(Cycle::empty_at(s)),
            Some(k) => {
                let c = classify(t, closure(t, &shifted, k), &shifted)?;
                if c.begin_square != Some(s) {
                    return Err(Error::NotACycle(format!(
                        "cycle through {k} does not begin at {s}"
                    )));
                }
                Ok(c)
            }
        })
        .collect()
}

/// `t_{r,r'}`: the rank-`r'` tableau `T'` with `G_r^{-1}(T,T) = G_{r'}^{-1}(T',T')`.
pub fn rank_shift(t: &DominoTableau, target: usize) -> Result<DominoTableau> {
    t.validate()?;
    let r = t.canonical_rank()?;
    let w = g_r_inverse(t, t, r)?;
    Ok(g_r(&w, target).0)
}

/// `MT(T, Δ(T))`, the cycle-moving route to `t_{r,r+1}`.
pub fn shift_by_moving_through(t: &DominoTableau) -> Result<DominoTableau> {
    let d = delta(t)?;
    move_through_set(t, &d)
}

/// Re-checks that the result of moving through a full `Δ` is canonical.
pub fn is_canonical_rank(t: &DominoTableau, r: usize) -> bool {
    *t.zero_region() == Partition::staircase(r)
}
