//! The 2-quotient correspondence between domino tableaux whose horizontal
//! and vertical dominoes do not interact and standard bitableaux.
//!
//! A horizontal domino in row `i` occupies columns right of the core row
//! `δ_r(i) = max(r + 1 - i, 0)`; its `c`-th position there becomes cell
//! `(i, c)` of the first component. Vertical dominoes are treated by
//! transposition and land in the second component.

use std::collections::BTreeMap;

use crate::cell::Cell;
use crate::domino::{Domino, DominoTableau, Orientation};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::young::{Bitableau, YoungTableau};

fn core_len(r: usize, line: usize) -> usize {
    (r + 1).saturating_sub(line)
}

fn collect(cells: BTreeMap<Cell, u32>) -> Result<YoungTableau> {
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for (c, k) in cells {
        if rows.len() < c.row {
            rows.resize(c.row, Vec::new());
        }
        if rows[c.row - 1].len() + 1 != c.col {
            return Err(Error::InvalidTableau(
                "dominoes do not separate into a 2-quotient".into(),
            ));
        }
        rows[c.row - 1].push(k);
    }
    YoungTableau::new(rows)
}

/// Horizontal dominoes to the first component, vertical to the second.
pub fn two_quotient(t: &DominoTableau) -> Result<Bitableau> {
    let r = t.canonical_rank()?;
    let mut first = BTreeMap::new();
    let mut second = BTreeMap::new();
    for (&k, d) in t.dominoes() {
        let (line, start, target) = match d.orientation() {
            Orientation::Horizontal => (d.first().row, d.first().col, &mut first),
            Orientation::Vertical => (d.first().col, d.first().row, &mut second),
        };
        let base = core_len(r, line);
        if start <= base || (start - base).is_multiple_of(2) {
            return Err(Error::InvalidTableau(format!(
                "domino {k} is not aligned with the core; no 2-quotient reading"
            )));
        }
        target.insert(Cell::new(line, (start - base).div_ceil(2)), k);
    }
    let q = Bitableau::new(collect(first)?, collect(second)?)?;
    Ok(q)
}

/// Inverse of [`two_quotient`], defined for `r >= n - 1`.
pub fn two_quotient_inverse(s: &Bitableau, r: usize) -> Result<DominoTableau> {
    let n = s.size();
    if n > 0 && r + 1 < n {
        return Err(Error::RankTooSmall { rank: r, degree: n });
    }
    let mut dominoes = BTreeMap::new();
    for (i, row) in s.first.rows().iter().enumerate() {
        let line = i + 1;
        for (j, &k) in row.iter().enumerate() {
            let col = core_len(r, line) + 2 * j + 1;
            dominoes.insert(k, Domino::horizontal(line, col));
        }
    }
    for (i, row) in s.second.rows().iter().enumerate() {
        let line = i + 1;
        for (j, &k) in row.iter().enumerate() {
            let top = core_len(r, line) + 2 * j + 1;
            dominoes.insert(k, Domino::vertical(top, line));
        }
    }
    DominoTableau::new(Partition::staircase(r), dominoes)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn horizontal_rows_map_to_first_component() {
        let t = DominoTableau::new(
            Partition::empty(),
            [
                (1, Domino::horizontal(1, 1)),
                (2, Domino::horizontal(1, 3)),
                (3, Domino::horizontal(2, 1)),
            ]
            .into_iter()
            .collect(),
        )
        .unwrap();
        let s = two_quotient(&t).unwrap();
        assert_eq!(s.first.rows(), &[vec![1, 2], vec![3]]);
        assert!(s.second.is_empty());
    }

    #[test]
    fn inverse_needs_large_rank() {
        let s = Bitableau::new(
            YoungTableau::new(vec![vec![1, 2]]).unwrap(),
            YoungTableau::new(vec![vec![3]]).unwrap(),
        )
        .unwrap();
        assert_eq!(
            two_quotient_inverse(&s, 1),
            Err(Error::RankTooSmall { rank: 1, degree: 3 })
        );
        let t = two_quotient_inverse(&s, 2).unwrap();
        assert_eq!(two_quotient(&t).unwrap(), s);
    }

    #[test]
    fn misaligned_domino_is_rejected() {
        let t = DominoTableau::new(
            Partition::empty(),
            [(1, Domino::vertical(1, 1)), (2, Domino::horizontal(1, 2))]
                .into_iter()
                .collect(),
        )
        .unwrap();
        assert!(two_quotient(&t).is_err());
    }
}
