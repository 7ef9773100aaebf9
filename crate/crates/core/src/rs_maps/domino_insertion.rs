//! Domino insertion for the rank-`r` maps `G_r`.
//!
//! Inserting a letter `x` places a new domino labelled `|x|` just outside the
//! subtableau of smaller labels: horizontally in row 1 when `x > 0`,
//! vertically in column 1 when `x < 0`. Larger labels are then revisited in
//! increasing order, carrying along the domino `c` of newly occupied cells:
//!
//! * `D(y)` disjoint from `c`: `y` stays put and `c` is unchanged;
//! * `D(y) = c`: `y` is bumped to the end of the next row (horizontal) or
//!   the bottom of the next column (vertical), which becomes the new `c`;
//! * `D(y)` meets `c` in one cell: the two span a 2×2 block `B`; `y` moves to
//!   `B \ c` and the new `c` is `B \ D(y)`.
//!
//! The final `c` is the pair of cells by which the shape grew, which the
//! recording tableau stores under the step number.

use std::collections::BTreeMap;

use crate::cell::Cell;
use crate::domino::{Domino, DominoTableau, Orientation};
use crate::error::{Error, Result};
use crate::group::SignedPermutation;
use crate::partition::Partition;

/// Row lengths of a growing Young diagram.
#[derive(Clone, Debug)]
struct RowLengths(Vec<usize>);

impl RowLengths {
    fn of(core: &Partition, dominoes: impl Iterator<Item = Domino>) -> Self {
        let mut rows = RowLengths(core.parts().to_vec());
        for d in dominoes {
            rows.add(d);
        }
        rows
    }

    fn row(&self, i: usize) -> usize {
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    fn col(&self, j: usize) -> usize {
        self.0.iter().take_while(|&&l| l >= j).count()
    }

    fn add(&mut self, d: Domino) {
        for c in d.cells() {
            if self.0.len() < c.row {
                self.0.resize(c.row, 0);
            }
            self.0[c.row - 1] += 1;
        }
    }
}

/// The 2×2 block spanned by two dominoes sharing one cell.
fn block(a: Domino, b: Domino) -> [Cell; 4] {
    let cells = [a.cells(), b.cells()].concat();
    let top = cells.iter().map(|c| c.row).min().expect("nonempty");
    let left = cells.iter().map(|c| c.col).min().expect("nonempty");
    [
        Cell::new(top, left),
        Cell::new(top, left + 1),
        Cell::new(top + 1, left),
        Cell::new(top + 1, left + 1),
    ]
}

fn block_minus(block: [Cell; 4], d: Domino) -> Domino {
    let rest: Vec<Cell> = block.into_iter().filter(|&c| !d.contains(c)).collect();
    Domino::new(rest[0], rest[1]).expect("complement of a domino in a 2x2 block")
}

/// Inserts one signed letter. Returns the new tableau and the domino of
/// cells by which its shape grew.
pub fn insert_letter(tableau: &DominoTableau, letter: i32) -> (DominoTableau, Domino) {
    let x = letter.unsigned_abs();
    let mut nu = RowLengths::of(
        tableau.zero_region(),
        tableau.dominoes().range(..x).map(|(_, &d)| d),
    );
    let start = if letter > 0 {
        Domino::horizontal(1, nu.row(1) + 1)
    } else {
        Domino::vertical(nu.col(1) + 1, 1)
    };
    nu.add(start);
    let mut out: BTreeMap<u32, Domino> = tableau
        .dominoes()
        .range(..x)
        .map(|(&k, &d)| (k, d))
        .collect();
    out.insert(x, start);
    let mut carried = start;
    for (&y, &d) in tableau.dominoes().range(x + 1..) {
        let placed = if !d.intersects(&carried) {
            d
        } else if d == carried {
            let bumped = match d.orientation() {
                Orientation::Horizontal => {
                    let row = d.first().row + 1;
                    Domino::horizontal(row, nu.row(row) + 1)
                }
                Orientation::Vertical => {
                    let col = d.first().col + 1;
                    Domino::vertical(nu.col(col) + 1, col)
                }
            };
            carried = bumped;
            bumped
        } else {
            let b = block(d, carried);
            let moved = block_minus(b, carried);
            carried = block_minus(b, d);
            moved
        };
        nu.add(placed);
        out.insert(y, placed);
    }
    (
        DominoTableau::from_parts_unchecked(tableau.zero_region().clone(), out),
        carried,
    )
}

/// Inverse of [`insert_letter`]: removes the cells `grown` from the shape
/// and returns the tableau before insertion and the ejected letter.
pub fn reverse_insert(tableau: &DominoTableau, grown: Domino) -> Result<(DominoTableau, i32)> {
    let shape = tableau.shape();
    if !shape.removable_dominoes().contains(&grown.cells()) {
        return Err(Error::InvalidTableau(format!(
            "cells {} {} are not a domino corner",
            grown.first(),
            grown.second()
        )));
    }
    let mut out = tableau.dominoes().clone();
    let mut carried = grown;
    let labels: Vec<u32> = tableau.labels().rev().collect();
    for y in labels {
        let d = out[&y];
        if !d.intersects(&carried) {
            continue;
        }
        if d == carried {
            let nu = RowLengths::of(tableau.zero_region(), out.range(..y).map(|(_, &d)| d));
            let previous = match d.orientation() {
                Orientation::Horizontal if d.first().row == 1 => None,
                Orientation::Vertical if d.first().col == 1 => None,
                Orientation::Horizontal => {
                    let row = d.first().row - 1;
                    Some(Domino::horizontal(row, nu.row(row) - 1))
                }
                Orientation::Vertical => {
                    let col = d.first().col - 1;
                    Some(Domino::vertical(nu.col(col) - 1, col))
                }
            };
            match previous {
                None => {
                    out.remove(&y);
                    let letter = if d.is_vertical() {
                        -(y as i32)
                    } else {
                        y as i32
                    };
                    return Ok((
                        DominoTableau::from_parts_unchecked(tableau.zero_region().clone(), out),
                        letter,
                    ));
                }
                Some(prev) => {
                    out.insert(y, prev);
                    carried = prev;
                }
            }
        } else {
            let b = block(d, carried);
            let prev = block_minus(b, carried);
            carried = block_minus(b, d);
            out.insert(y, prev);
        }
    }
    Err(Error::InvalidTableau(
        "reverse insertion did not reach the first row or column".into(),
    ))
}

/// Domino tableau built from `δ_r` by inserting `w_1, …, w_n`, and the
/// tableau recording the shape growth.
pub fn g_r(w: &SignedPermutation, r: usize) -> (DominoTableau, DominoTableau) {
    let mut p = DominoTableau::core(r);
    let mut q = BTreeMap::new();
    for (i, &letter) in w.window().iter().enumerate() {
        let (next, grown) = insert_letter(&p, letter);
        p = next;
        q.insert(i as u32 + 1, grown);
    }
    (
        p,
        DominoTableau::from_parts_unchecked(Partition::staircase(r), q),
    )
}

/// Recovers `w` from a same-shape pair of canonical rank-`r` tableaux.
pub fn g_r_inverse(p: &DominoTableau, q: &DominoTableau, r: usize) -> Result<SignedPermutation> {
    p.validate()?;
    q.validate()?;
    let rp = p.canonical_rank()?;
    let rq = q.canonical_rank()?;
    if rp != r {
        return Err(Error::RankMismatch { left: rp, right: r });
    }
    if rq != r {
        return Err(Error::RankMismatch { left: rq, right: r });
    }
    if p.shape() != q.shape() {
        return Err(Error::ShapeMismatch);
    }
    let n = q.len();
    let mut window = vec![0i32; n];
    let mut current = p.clone();
    for i in (1..=n as u32).rev() {
        let (prev, letter) = reverse_insert(&current, q.domino(i)?)?;
        window[i as usize - 1] = letter;
        current = prev;
    }
    SignedPermutation::new(window)
}
