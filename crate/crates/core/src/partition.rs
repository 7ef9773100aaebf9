//! Integer partitions identified with their Young diagrams.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::cell::Cell;
use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive parts. JSON form: integer array.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("zero part in {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The staircase `δ_r = (r, r-1, …, 1)`.
    pub fn staircase(r: usize) -> Self {
        Partition((1..=r).rev().collect())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Length of row `row` (1-indexed); 0 past the last row.
    pub fn row_len(&self, row: usize) -> usize {
        if row == 0 {
            return 0;
        }
        self.0.get(row - 1).copied().unwrap_or(0)
    }

    /// Height of column `col` (1-indexed).
    pub fn col_len(&self, col: usize) -> usize {
        if col == 0 {
            return 0;
        }
        self.0.iter().take_while(|&&p| p >= col).count()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.row_len(cell.row)
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| Cell::new(i + 1, j)))
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition((1..=width).map(|c| self.col_len(c)).collect())
    }

    /// Cells whose removal leaves a Young diagram.
    pub fn corners(&self) -> Vec<Cell> {
        (1..=self.num_rows())
            .filter(|&i| self.row_len(i) > self.row_len(i + 1))
            .map(|i| Cell::new(i, self.row_len(i)))
            .collect()
    }

    /// Cells whose addition leaves a Young diagram.
    pub fn addable_cells(&self) -> Vec<Cell> {
        (1..=self.num_rows() + 1)
            .filter(|&i| i == 1 || self.row_len(i - 1) > self.row_len(i))
            .map(|i| Cell::new(i, self.row_len(i) + 1))
            .collect()
    }

    pub fn remove_corner(&self, cell: Cell) -> Result<Partition> {
        if !self.corners().contains(&cell) {
            return Err(Error::NotACorner(cell));
        }
        let mut parts = self.0.clone();
        parts[cell.row - 1] -= 1;
        if parts[cell.row - 1] == 0 {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    /// Adds a cell, which must be addable.
    pub fn add_cell(&self, cell: Cell) -> Result<Partition> {
        if !self.addable_cells().contains(&cell) {
            return Err(Error::InvalidPartition(format!("{cell} is not addable")));
        }
        let mut parts = self.0.clone();
        if cell.row > parts.len() {
            parts.push(1);
        } else {
            parts[cell.row - 1] += 1;
        }
        Ok(Partition(parts))
    }

    /// Domino corners: pairs of adjacent cells whose removal leaves a diagram.
    pub fn removable_dominoes(&self) -> Vec<[Cell; 2]> {
        let mut out = Vec::new();
        for i in 1..=self.num_rows() {
            let len = self.row_len(i);
            // horizontal
            if len >= 2 && self.row_len(i + 1) <= len - 2 {
                out.push([Cell::new(i, len - 1), Cell::new(i, len)]);
            }
            // vertical, with (i, len) as its top cell
            if self.row_len(i + 1) == len && self.row_len(i + 2) < len {
                out.push([Cell::new(i, len), Cell::new(i + 1, len)]);
            }
        }
        out
    }

    /// Dominoes whose addition leaves a diagram.
    pub fn addable_dominoes(&self) -> Vec<[Cell; 2]> {
        let mut out = Vec::new();
        for i in 1..=self.num_rows() + 1 {
            let len = self.row_len(i);
            if i == 1 || self.row_len(i - 1) >= len + 2 {
                out.push([Cell::new(i, len + 1), Cell::new(i, len + 2)]);
            }
        }
        let width = self.row_len(1);
        for j in 1..=width + 1 {
            let h = self.col_len(j);
            if j == 1 || self.col_len(j - 1) >= h + 2 {
                out.push([Cell::new(h + 1, j), Cell::new(h + 2, j)]);
            }
        }
        out.sort();
        out
    }

    /// Removes the cells of a domino corner.
    pub fn remove_domino(&self, cells: [Cell; 2]) -> Result<Partition> {
        let set: BTreeSet<Cell> = self.cells().filter(|c| !cells.contains(c)).collect();
        if !cells.iter().all(|&c| self.contains(c)) {
            return Err(Error::NotACorner(cells[0]));
        }
        Partition::from_cells(&set).ok_or(Error::NotACorner(cells[0]))
    }

    /// Repeatedly strips domino corners; returns `(r, δ_r)`.
    pub fn two_core(&self) -> (usize, Partition) {
        let mut current = self.clone();
        while let Some(&d) = current.removable_dominoes().first() {
            current = current.remove_domino(d).expect("domino corner");
        }
        let r = current.num_rows();
        debug_assert_eq!(current, Partition::staircase(r));
        (r, current)
    }

    /// Whether this is some staircase `δ_r`.
    pub fn staircase_rank(&self) -> Option<usize> {
        (*self == Partition::staircase(self.num_rows())).then_some(self.num_rows())
    }

    /// Sum of the lengths of the even-index rows.
    pub fn even_row_sum(&self) -> usize {
        self.0.iter().skip(1).step_by(2).sum()
    }

    /// The partition whose diagram is `cells`, or `None` if `cells` is not a Young diagram.
    pub fn from_cells(cells: &BTreeSet<Cell>) -> Option<Partition> {
        let mut parts: Vec<usize> = Vec::new();
        for c in cells {
            if c.row == 0 || c.col == 0 {
                return None;
            }
            if parts.len() < c.row {
                parts.resize(c.row, 0);
            }
            parts[c.row - 1] += 1;
        }
        // rows left-justified and gapless
        for c in cells {
            if c.col > parts[c.row - 1] {
                return None;
            }
        }
        Partition::new(parts).ok()
    }
}
