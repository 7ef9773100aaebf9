use std::fmt;

use serde::{Deserialize, Serialize};

/// A square of a diagram, 1-indexed with row 1 on top.
///
/// Serialized as the two-element array `[row, col]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(usize, usize)", into = "(usize, usize)")]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    /// Cells sharing a side.
    pub fn is_adjacent(self, other: Cell) -> bool {
        self.row.abs_diff(other.row) + self.col.abs_diff(other.col) == 1
    }

    /// Marked squares have even coordinate sum.
    pub fn is_marked(self) -> bool {
        (self.row + self.col).is_multiple_of(2)
    }

    pub fn transpose(self) -> Cell {
        Cell::new(self.col, self.row)
    }

    /// The neighbour at signed offset, if it stays in the positive quadrant.
    pub fn offset(self, drow: isize, dcol: isize) -> Option<Cell> {
        let row = self.row.checked_add_signed(drow)?;
        let col = self.col.checked_add_signed(dcol)?;
        (row >= 1 && col >= 1).then_some(Cell::new(row, col))
    }
}

impl From<(usize, usize)> for Cell {
    fn from((row, col): (usize, usize)) -> Self {
        Cell::new(row, col)
    }
}

impl From<Cell> for (usize, usize) {
    fn from(c: Cell) -> Self {
        (c.row, c.col)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}
