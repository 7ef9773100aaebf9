//! Standard Young tableaux, standard bitableaux, and classical
//! Robinson–Schensted row insertion.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::cell::Cell;
use crate::error::{Error, Result};
use crate::partition::Partition;

/// A filling of a Young diagram by distinct positive labels with rows and
/// columns strictly increasing. JSON form: array of rows.
///
/// Labels need not be `1..=n`; the insertion tableaux of the signed
/// bitableau map carry arbitrary label sets. [`YoungTableau::is_standard`]
/// checks the stricter condition.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u32>>", into = "Vec<Vec<u32>>")]
pub struct YoungTableau {
    rows: Vec<Vec<u32>>,
}

impl TryFrom<Vec<Vec<u32>>> for YoungTableau {
    type Error = Error;
    fn try_from(rows: Vec<Vec<u32>>) -> Result<Self> {
        YoungTableau::new(rows)
    }
}

impl From<YoungTableau> for Vec<Vec<u32>> {
    fn from(t: YoungTableau) -> Self {
        t.rows
    }
}

impl YoungTableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidTableau(m));
        if rows.iter().any(|r| r.is_empty()) {
            return bad("empty row".into());
        }
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return bad("row lengths not weakly decreasing".into());
        }
        let mut seen = BTreeSet::new();
        for (i, row) in rows.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                if x == 0 || !seen.insert(x) {
                    return bad(format!("label {x} is zero or repeated"));
                }
                if j > 0 && row[j - 1] >= x {
                    return bad(format!("row {} not increasing", i + 1));
                }
                if i > 0 && rows[i - 1][j] >= x {
                    return bad(format!("column {} not increasing", j + 1));
                }
            }
        }
        Ok(YoungTableau { rows })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect()).expect("valid shape")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn labels(&self) -> BTreeSet<u32> {
        self.rows.iter().flatten().copied().collect()
    }

    /// Labels are exactly `1..=n`.
    /// Rows of right-aligned labels; `-` for the empty tableau.
    pub fn render_ascii(&self) -> String {
        if self.rows.is_empty() {
            return "-\n".into();
        }
        let width = self.labels().last().map_or(1, |k| k.to_string().len());
        self.rows
            .iter()
            .map(|row| {
                let cells: Vec<String> = row.iter().map(|k| format!("{k:>width$}")).collect();
                cells.join(" ") + "\n"
            })
            .collect()
    }

    pub fn is_standard(&self) -> bool {
        self.labels().into_iter().eq(1..=self.size() as u32)
    }

    pub fn position(&self, label: u32) -> Option<Cell> {
        self.rows.iter().enumerate().find_map(|(i, row)| {
            row.iter()
                .position(|&x| x == label)
                .map(|j| Cell::new(i + 1, j + 1))
        })
    }

    pub fn entry(&self, cell: Cell) -> Option<u32> {
        self.rows
            .get(cell.row.checked_sub(1)?)?
            .get(cell.col.checked_sub(1)?)
            .copied()
    }

    fn row_of(&self) -> Vec<(u32, usize)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().map(move |&x| (x, i + 1)))
            .collect()
    }

    /// Pairs `(i, j)` with `j < i` and `j` in a row strictly below that of `i`.
    pub fn inversions(&self) -> Vec<(u32, u32)> {
        let rows = self.row_of();
        let mut out = Vec::new();
        for &(i, ri) in &rows {
            for &(j, rj) in &rows {
                if j < i && rj > ri {
                    out.push((i, j));
                }
            }
        }
        out.sort();
        out
    }

    pub fn sign(&self) -> i8 {
        parity_sign(self.inversions().len())
    }

    /// Sum of the even-index row lengths of the shape.
    pub fn e_statistic(&self) -> usize {
        self.shape().even_row_sum()
    }

    /// Row-inserts `x`, bumping the leftmost entry strictly greater.
    /// Returns the cell created.
    pub fn row_insert(&mut self, mut x: u32) -> Cell {
        let mut row = 0;
        loop {
            if row == self.rows.len() {
                self.rows.push(vec![x]);
                return Cell::new(row + 1, 1);
            }
            let r = &mut self.rows[row];
            match r.iter().position(|&y| y > x) {
                None => {
                    r.push(x);
                    return Cell::new(row + 1, r.len());
                }
                Some(j) => {
                    std::mem::swap(&mut r[j], &mut x);
                    row += 1;
                }
            }
        }
    }

    /// Inverse of [`row_insert`](Self::row_insert): removes the corner `cell`
    /// and reverse-bumps up to row 1, returning the ejected value.
    pub fn reverse_bump(&mut self, cell: Cell) -> Result<u32> {
        if !self.shape().corners().contains(&cell) {
            return Err(Error::NotACorner(cell));
        }
        let mut x = self.rows[cell.row - 1].pop().expect("corner");
        if self.rows[cell.row - 1].is_empty() {
            self.rows.pop();
        }
        for row in (0..cell.row - 1).rev() {
            let r = &mut self.rows[row];
            let j = r
                .iter()
                .rposition(|&y| y < x)
                .expect("reverse bump target exists in a valid tableau");
            std::mem::swap(&mut r[j], &mut x);
        }
        Ok(x)
    }

    /// Places `label` at `cell`, which must be addable. Used for recording tableaux.
    pub(crate) fn place(&mut self, cell: Cell, label: u32) {
        if cell.row > self.rows.len() {
            self.rows.push(Vec::new());
        }
        let r = &mut self.rows[cell.row - 1];
        debug_assert_eq!(r.len() + 1, cell.col);
        r.push(label);
    }

    /// Removes and returns the cell holding the largest label.
    pub(crate) fn pop_max(&mut self) -> Option<(u32, Cell)> {
        let max = *self.labels().iter().next_back()?;
        let cell = self.position(max)?;
        self.rows[cell.row - 1].pop();
        if self.rows[cell.row - 1].is_empty() {
            self.rows.pop();
        }
        Some((max, cell))
    }
}

/// A pair of tableaux with disjoint labels. JSON form:
/// `{"first": rows, "second": rows}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawBitableau")]
pub struct Bitableau {
    pub first: YoungTableau,
    pub second: YoungTableau,
}

#[derive(Deserialize)]
struct RawBitableau {
    first: YoungTableau,
    second: YoungTableau,
}

impl TryFrom<RawBitableau> for Bitableau {
    type Error = Error;
    fn try_from(raw: RawBitableau) -> Result<Self> {
        Bitableau::new(raw.first, raw.second)
    }
}

impl Bitableau {
    pub fn new(first: YoungTableau, second: YoungTableau) -> Result<Self> {
        if !first.labels().is_disjoint(&second.labels()) {
            return Err(Error::InvalidTableau("components share a label".into()));
        }
        Ok(Bitableau { first, second })
    }

    pub fn size(&self) -> usize {
        self.first.size() + self.second.size()
    }

    pub fn shape(&self) -> (Partition, Partition) {
        (self.first.shape(), self.second.shape())
    }

    pub fn is_standard(&self) -> bool {
        let mut all = self.first.labels();
        all.extend(self.second.labels());
        all.into_iter().eq(1..=self.size() as u32)
    }

    /// In-component inversions plus every `(i, j)` with `j < i`, `j` in the
    /// first component and `i` in the second.
    pub fn inversions(&self) -> Vec<(u32, u32)> {
        let mut out = self.first.inversions();
        out.extend(self.second.inversions());
        let firsts = self.first.labels();
        for i in self.second.labels() {
            for &j in firsts.range(..i) {
                out.push((i, j));
            }
        }
        out.sort();
        out
    }

    pub fn sign(&self) -> i8 {
        parity_sign(self.inversions().len())
    }

    /// `2·spin = |second component|`.
    pub fn twice_spin(&self) -> usize {
        self.second.size()
    }

    /// `e` of the first component plus `e` of the second.
    pub fn e_statistic(&self) -> usize {
        self.first.e_statistic() + self.second.e_statistic()
    }

    /// Both components labelled `first:` and `second:`.
    pub fn render_ascii(&self) -> String {
        format!(
            "first:\n{}second:\n{}",
            self.first.render_ascii(),
            self.second.render_ascii()
        )
    }
}

pub(crate) fn parity_sign(count: usize) -> i8 {
    if count.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Classical Robinson–Schensted: `(P, Q)` for a permutation of `1..=n`.
pub fn rs(perm: &[u32]) -> (YoungTableau, YoungTableau) {
    let mut p = YoungTableau::empty();
    let mut q = YoungTableau::empty();
    for (i, &x) in perm.iter().enumerate() {
        let cell = p.row_insert(x);
        q.place(cell, i as u32 + 1);
    }
    (p, q)
}

pub fn rs_inverse(p: &YoungTableau, q: &YoungTableau) -> Result<Vec<u32>> {
    if p.shape() != q.shape() {
        return Err(Error::ShapeMismatch);
    }
    if !p.is_standard() || !q.is_standard() {
        return Err(Error::InvalidTableau("labels must be 1..=n".into()));
    }
    let mut p = p.clone();
    let mut q = q.clone();
    let mut perm = vec![0; p.size()];
    while let Some((i, cell)) = q.pop_max() {
        perm[i as usize - 1] = p.reverse_bump(cell)?;
    }
    Ok(perm)
}
