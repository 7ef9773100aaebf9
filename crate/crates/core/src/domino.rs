//! Standard domino tableaux and their statistics.
//!
//! A tableau is a zero-labelled core region plus dominoes labelled by
//! distinct positive integers such that every label prefix, together with
//! the core, covers a Young diagram. Canonical rank-`r` tableaux have the
//! staircase `δ_r` as core; other Young-diagram cores occur in the middle of
//! moving through a set of cycles.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::cell::Cell;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::young::parity_sign;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Horizontal,
    Vertical,
}

/// Two adjacent cells, stored top/left first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Domino {
    first: Cell,
    second: Cell,
}

impl Domino {
    pub fn new(a: Cell, b: Cell) -> Result<Self> {
        if !a.is_adjacent(b) {
            return Err(Error::InvalidTableau(format!(
                "cells {a} and {b} are not adjacent"
            )));
        }
        let (first, second) = if a < b { (a, b) } else { (b, a) };
        Ok(Domino { first, second })
    }

    /// Horizontal domino with left cell `(row, col)`.
    pub fn horizontal(row: usize, col: usize) -> Self {
        Domino {
            first: Cell::new(row, col),
            second: Cell::new(row, col + 1),
        }
    }

    /// Vertical domino with top cell `(row, col)`.
    pub fn vertical(row: usize, col: usize) -> Self {
        Domino {
            first: Cell::new(row, col),
            second: Cell::new(row + 1, col),
        }
    }

    pub fn cells(&self) -> [Cell; 2] {
        [self.first, self.second]
    }

    pub fn first(&self) -> Cell {
        self.first
    }

    pub fn second(&self) -> Cell {
        self.second
    }

    pub fn orientation(&self) -> Orientation {
        if self.first.row == self.second.row {
            Orientation::Horizontal
        } else {
            Orientation::Vertical
        }
    }

    pub fn is_vertical(&self) -> bool {
        self.orientation() == Orientation::Vertical
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.first == cell || self.second == cell
    }

    pub fn intersects(&self, other: &Domino) -> bool {
        other.cells().iter().any(|&c| self.contains(c))
    }

    /// The cell with even coordinate sum.
    pub fn marked(&self) -> Cell {
        if self.first.is_marked() {
            self.first
        } else {
            self.second
        }
    }

    pub fn transpose(&self) -> Domino {
        Domino::new(self.first.transpose(), self.second.transpose()).expect("adjacent")
    }
}

/// Label of a square with the out-of-range conventions: squares with a
/// non-positive coordinate read as `0`, squares outside the tableau as `∞`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SquareLabel {
    Finite(u32),
    Infinite,
}

impl SquareLabel {
    /// Compares a domino label against this square label.
    pub fn exceeded_by(self, label: u32) -> bool {
        match self {
            SquareLabel::Finite(x) => label > x,
            SquareLabel::Infinite => false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum VariableType {
    X,
    W,
}

/// Classification of a square relative to a rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SquareClass {
    pub marked: bool,
    pub variable: bool,
    /// `Some` iff the square is variable.
    pub kind: Option<VariableType>,
}

impl SquareClass {
    pub fn of(cell: Cell, rank: usize) -> Self {
        let marked = cell.is_marked();
        let variable = (cell.row + cell.col) % 2 == rank % 2;
        let kind = variable.then_some({
            if cell.row % 2 == 1 {
                VariableType::X
            } else {
                VariableType::W
            }
        });
        SquareClass {
            marked,
            variable,
            kind,
        }
    }
}

pub fn is_variable(cell: Cell, rank: usize) -> bool {
    (cell.row + cell.col) % 2 == rank % 2
}

/// Tableau statistics. `twice_spin` equals `vertical`; `eh + ev = d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DominoStatistics {
    pub vertical: usize,
    pub twice_spin: usize,
    pub eh: usize,
    pub ev: usize,
    pub d: usize,
    pub shape: Partition,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct DominoTableau {
    zero_region: Partition,
    dominoes: BTreeMap<u32, Domino>,
}

impl DominoTableau {
    /// Builds and validates a standard domino tableau (labels exactly `1..=n`).
    pub fn new(zero_region: Partition, dominoes: BTreeMap<u32, Domino>) -> Result<Self> {
        let t = DominoTableau {
            zero_region,
            dominoes,
        };
        t.validate()?;
        Ok(t)
    }

    /// No checks; labels may be any distinct positive integers.
    pub(crate) fn from_parts_unchecked(
        zero_region: Partition,
        dominoes: BTreeMap<u32, Domino>,
    ) -> Self {
        DominoTableau {
            zero_region,
            dominoes,
        }
    }

    /// The tableau consisting of the core `δ_r` only.
    pub fn core(r: usize) -> Self {
        DominoTableau {
            zero_region: Partition::staircase(r),
            dominoes: BTreeMap::new(),
        }
    }

    /// Checks the standardness conditions, reporting the first violation.
    pub fn validate(&self) -> Result<()> {
        self.validate_structure()?;
        let n = self.dominoes.len() as u32;
        if let Some((&k, _)) = self.dominoes.iter().find(|(&k, _)| k == 0 || k > n) {
            return Err(Error::InvalidTableau(format!(
                "labels must be 1..={n}, found {k}"
            )));
        }
        Ok(())
    }

    /// Validation without requiring the label set to be `1..=n`.
    pub(crate) fn validate_structure(&self) -> Result<()> {
        let mut covered: BTreeSet<Cell> = self.zero_region.cells().collect();
        for (&k, d) in &self.dominoes {
            if k == 0 {
                return Err(Error::InvalidTableau("domino label 0".into()));
            }
            for c in d.cells() {
                if !covered.insert(c) {
                    return Err(Error::InvalidTableau(format!(
                        "label {k}: cell {c} overlaps"
                    )));
                }
            }
            if Partition::from_cells(&covered).is_none() {
                return Err(Error::InvalidTableau(format!(
                    "labels <= {k} do not cover a Young diagram"
                )));
            }
        }
        Ok(())
    }

    pub fn zero_region(&self) -> &Partition {
        &self.zero_region
    }

    pub fn dominoes(&self) -> &BTreeMap<u32, Domino> {
        &self.dominoes
    }

    pub fn domino(&self, label: u32) -> Result<Domino> {
        self.dominoes
            .get(&label)
            .copied()
            .ok_or(Error::MissingLabel(label))
    }

    pub fn len(&self) -> usize {
        self.dominoes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dominoes.is_empty()
    }

    pub fn labels(&self) -> impl DoubleEndedIterator<Item = u32> + '_ {
        self.dominoes.keys().copied()
    }

    /// The rank `r` when the core is exactly `δ_r`.
    pub fn rank(&self) -> Option<usize> {
        self.zero_region.staircase_rank()
    }

    pub fn canonical_rank(&self) -> Result<usize> {
        self.rank().ok_or(Error::NonCanonical)
    }

    /// The largest `r` with `δ_r` inside the core; the parity reference for
    /// fixed and variable squares.
    pub fn core_rank(&self) -> usize {
        let mut r = 0;
        while (1..=r + 1).all(|i| self.zero_region.row_len(i) >= r + 2 - i) {
            r += 1;
        }
        r
    }

    pub fn shape(&self) -> Partition {
        let mut cells: BTreeSet<Cell> = self.zero_region.cells().collect();
        for d in self.dominoes.values() {
            cells.extend(d.cells());
        }
        Partition::from_cells(&cells).expect("tableau shape is a Young diagram")
    }

    /// Row-major grid of labels: `Some(0)` for core cells, `None` for gaps.
    pub fn grid(&self) -> Vec<Vec<Option<u32>>> {
        let shape = self.shape();
        let mut grid: Vec<Vec<Option<u32>>> =
            shape.parts().iter().map(|&l| vec![None; l]).collect();
        for c in self.zero_region.cells() {
            grid[c.row - 1][c.col - 1] = Some(0);
        }
        for (&k, d) in &self.dominoes {
            for c in d.cells() {
                grid[c.row - 1][c.col - 1] = Some(k);
            }
        }
        grid
    }

    /// Label of the domino (or `0` for core) at `cell`, if inside.
    pub fn label_of(&self, cell: Cell) -> Option<u32> {
        if self.zero_region.contains(cell) {
            return Some(0);
        }
        self.dominoes
            .iter()
            .find(|(_, d)| d.contains(cell))
            .map(|(&k, _)| k)
    }

    /// Total label lookup with the `0`/`∞` conventions for squares outside.
    pub fn square_label(&self, row: isize, col: isize) -> SquareLabel {
        if row <= 0 || col <= 0 {
            return SquareLabel::Finite(0);
        }
        match self.label_of(Cell::new(row as usize, col as usize)) {
            Some(k) => SquareLabel::Finite(k),
            None => SquareLabel::Infinite,
        }
    }

    /// The cell of `D(k)` with even coordinate sum.
    pub fn marked_square(&self, label: u32) -> Result<Cell> {
        Ok(self.domino(label)?.marked())
    }

    /// Pairs `(i, j)`, `j < i`, with the marked square of `j` in a row
    /// strictly below the marked square of `i`.
    pub fn inversions(&self) -> Vec<(u32, u32)> {
        let marks: Vec<(u32, usize)> = self
            .dominoes
            .iter()
            .map(|(&k, d)| (k, d.marked().row))
            .collect();
        let mut out = Vec::new();
        for &(i, ri) in &marks {
            for &(j, rj) in &marks {
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

    pub fn vertical_count(&self) -> usize {
        self.dominoes.values().filter(|d| d.is_vertical()).count()
    }

    pub fn statistics(&self) -> DominoStatistics {
        let vertical = self.vertical_count();
        let eh = self
            .dominoes
            .values()
            .filter(|d| !d.is_vertical() && d.first().row % 2 == 0)
            .count();
        let ev = self
            .dominoes
            .values()
            .filter(|d| d.is_vertical() && d.first().col % 2 == 0)
            .count();
        let d = self
            .dominoes
            .values()
            .flat_map(|d| d.cells())
            .filter(|c| c.row % 2 == 0 && c.col % 2 == 0)
            .count();
        DominoStatistics {
            vertical,
            twice_spin: vertical,
            eh,
            ev,
            d,
            shape: self.shape(),
        }
    }

    /// Number of non-core cells lying in an even row and an even column.
    pub fn d_statistic(&self) -> usize {
        self.statistics().d
    }

    pub fn square_class(&self, cell: Cell) -> SquareClass {
        SquareClass::of(cell, self.core_rank())
    }

    pub fn transpose(&self) -> DominoTableau {
        DominoTableau {
            zero_region: self.zero_region.conjugate(),
            dominoes: self
                .dominoes
                .iter()
                .map(|(&k, d)| (k, d.transpose()))
                .collect(),
        }
    }

    /// Renders the tableau with `0` for core cells and each label printed
    /// in both cells of its domino, columns aligned.
    pub fn render_ascii(&self) -> String {
        let grid = self.grid();
        let width = self
            .dominoes
            .keys()
            .next_back()
            .map_or(1, |k| k.to_string().len());
        let mut out = String::new();
        for row in &grid {
            let line: Vec<String> = row
                .iter()
                .map(|c| match c {
                    Some(k) => format!("{k:>width$}"),
                    None => format!("{:>width$}", "."),
                })
                .collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }
}

#[derive(Serialize, Deserialize)]
struct DominoJson {
    label: u32,
    cells: [Cell; 2],
}

#[derive(Serialize, Deserialize)]
struct TableauJson {
    zero_region: Vec<Cell>,
    dominoes: Vec<DominoJson>,
}

impl Serialize for DominoTableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TableauJson {
            zero_region: self.zero_region.cells().collect(),
            dominoes: self
                .dominoes
                .iter()
                .map(|(&label, d)| DominoJson {
                    label,
                    cells: d.cells(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for DominoTableau {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = TableauJson::deserialize(d)?;
        let cells: BTreeSet<Cell> = raw.zero_region.iter().copied().collect();
        let zero_region = Partition::from_cells(&cells)
            .ok_or_else(|| D::Error::custom("zero_region is not a Young diagram"))?;
        let mut dominoes = BTreeMap::new();
        for dj in raw.dominoes {
            let dom = Domino::new(dj.cells[0], dj.cells[1]).map_err(D::Error::custom)?;
            if dominoes.insert(dj.label, dom).is_some() {
                return Err(D::Error::custom(format!("repeated label {}", dj.label)));
            }
        }
        DominoTableau::new(zero_region, dominoes).map_err(D::Error::custom)
    }
}

/// Every canonical rank-`r` tableau with `n` dominoes, each exactly once.
///
/// Generated by adding domino corners in label order, so the ordering is a
/// depth-first traversal with addable dominoes in cell order.
pub fn enumerate_sdt(r: usize, n: usize) -> Vec<DominoTableau> {
    fn go(
        shape: &Partition,
        doms: &mut BTreeMap<u32, Domino>,
        core: &Partition,
        n: usize,
        out: &mut Vec<DominoTableau>,
    ) {
        let k = doms.len() as u32 + 1;
        if doms.len() == n {
            out.push(DominoTableau::from_parts_unchecked(
                core.clone(),
                doms.clone(),
            ));
            return;
        }
        for [a, b] in shape.addable_dominoes() {
            let next = shape
                .add_cell(a)
                .and_then(|s| s.add_cell(b))
                .expect("addable domino");
            doms.insert(k, Domino::new(a, b).expect("adjacent"));
            go(&next, doms, core, n, out);
            doms.remove(&k);
        }
    }
    let core = Partition::staircase(r);
    let mut out = Vec::new();
    go(&core, &mut BTreeMap::new(), &core, n, &mut out);
    out
}
