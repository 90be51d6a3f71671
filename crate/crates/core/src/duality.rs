//! Bijections between ptableaux, biwords and matrices, and the dual and rotated ptableau.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{placed_cells, CellRef, Ptableau, Side};
use crate::word::{dual_biword, standardize_in, Biword};

/// The ptableau with a cell of content `top` in row `bottom` for each column of `b`.
///
/// It has `b.n()` rows.
pub fn perf(b: &Biword) -> Ptableau {
    let mut rows = vec![Vec::new(); b.n()];
    for (t, w) in b.pairs() {
        rows[w - 1].push(t);
    }
    Ptableau::from_row_contents(rows).expect("biword letters are positive")
}

/// The standard-form biword of `t`, with the top alphabet sized to the largest content.
pub fn bw(t: &Ptableau) -> Biword {
    bw_in(t, t.max_content().unwrap_or(1)).expect("largest content bounds every content")
}

/// [`bw`] with an explicit top alphabet `[m]`.
pub fn bw_in(t: &Ptableau, m: usize) -> Result<Biword> {
    let pairs: Vec<(usize, usize)> =
        t.row_contents().iter().enumerate().flat_map(|(r, vals)| vals.iter().map(move |&v| (v, r + 1))).collect();
    if let Some(max) = t.max_content().filter(|&c| c > m) {
        return Err(Error::ContentExceedsAlphabet { content: max, m });
    }
    standardize_in(&pairs, m, t.n_rows().max(1))
}

/// Cell `[j]_i` for every cell `[i]_j` of `t`. The result has as many rows as
/// the largest content of `t`.
pub fn dual_ptab(t: &Ptableau) -> Ptableau {
    perf(&dual_biword(&bw(t)))
}

/// [`dual_ptab`] with `m` rows in the result.
pub fn dual_ptab_in(t: &Ptableau, m: usize) -> Result<Ptableau> {
    Ok(perf(&dual_biword(&bw_in(t, m)?)))
}

/// Turns the grid upside down and replaces each content `j` by `m - j + 1`.
pub fn rot(t: &Ptableau, m: usize) -> Result<Ptableau> {
    if let Some(max) = t.max_content().filter(|&c| c > m) {
        return Err(Error::ContentExceedsAlphabet { content: max, m });
    }
    let rows = t.row_contents().iter().rev().map(|vals| vals.iter().map(|&v| m + 1 - v).collect()).collect();
    Ptableau::from_row_contents(rows)
}

/// `m × n` matrix of non-negative counts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntMatrix {
    m: usize,
    n: usize,
    entries: Vec<Vec<usize>>,
}

impl IntMatrix {
    pub fn zeros(m: usize, n: usize) -> Self {
        IntMatrix { m, n, entries: vec![vec![0; n]; m] }
    }

    pub fn from_rows(entries: Vec<Vec<usize>>) -> Result<Self> {
        let n = entries.first().map_or(0, Vec::len);
        if let Some(r) = entries.iter().position(|row| row.len() != n) {
            return Err(Error::NonRectangular { row: r + 1, len: entries[r].len(), expected: n });
        }
        Ok(IntMatrix { m: entries.len(), n, entries })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry `(i, j)`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries[i - 1][j - 1]
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.entries
    }

    pub fn total(&self) -> usize {
        self.entries.iter().flatten().sum()
    }

    pub fn transpose(&self) -> IntMatrix {
        let entries = (0..self.n).map(|j| (0..self.m).map(|i| self.entries[i][j]).collect()).collect();
        IntMatrix { m: self.n, n: self.m, entries }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lines: Vec<String> =
            self.entries.iter().map(|row| row.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")).collect();
        f.write_str(&lines.join("\n"))
    }
}

impl FromStr for IntMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_matrix(s, 1)
    }
}

pub fn parse_matrix(s: &str, first_line: usize) -> Result<IntMatrix> {
    let mut entries = Vec::new();
    for (offset, line) in s.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let mut row = Vec::new();
        let mut column = 1;
        for token in line.split(' ') {
            if !token.is_empty() {
                row.push(token.parse().map_err(|_| {
                    Error::parse(first_line + offset, column, format!("expected a non-negative integer, found {token:?}"))
                })?);
            }
            column += token.len() + 1;
        }
        entries.push(row);
    }
    IntMatrix::from_rows(entries)
}

/// Entry `(i, j)` counts the columns `i / j` of `b`.
pub fn to_matrix(b: &Biword, m: usize, n: usize) -> Result<IntMatrix> {
    let mut out = IntMatrix::zeros(m, n);
    for (t, w) in b.pairs() {
        if t > m || w > n {
            return Err(Error::MatrixBounds { row: t, col: w, m, n });
        }
        out.entries[t - 1][w - 1] += 1;
    }
    Ok(out)
}

pub fn from_matrix(mat: &IntMatrix) -> Biword {
    let mut pairs = Vec::with_capacity(mat.total());
    for (i, row) in mat.entries.iter().enumerate() {
        for (j, &count) in row.iter().enumerate() {
            pairs.extend(std::iter::repeat_n((i + 1, j + 1), count));
        }
    }
    standardize_in(&pairs, mat.m.max(1), mat.n.max(1)).expect("indices lie inside the matrix")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Violation {
    /// Position in the right-justified layout.
    pub cell: CellRef,
    pub multiplicity: usize,
}

/// Violation entries, right-most column first and bottom to top inside a column.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationReport {
    pub entries: Vec<Violation>,
}

impl ViolationReport {
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn first(&self) -> Option<&Violation> {
        self.entries.first()
    }
}

pub fn violations(t: &Ptableau) -> ViolationReport {
    violations_of_rows(t.row_contents())
}

pub(crate) fn violations_of_rows(rows: &[Vec<usize>]) -> ViolationReport {
    let mut cells = placed_cells(rows, Side::Right);
    cells.sort_by(|a, b| b.col.cmp(&a.col).then(b.row.cmp(&a.row)));
    let mut entries = Vec::new();
    for cell in &cells {
        if cell.content < 2 {
            continue;
        }
        let above = cells
            .iter()
            .filter(|o| o.col == cell.col && o.row < cell.row)
            .max_by_key(|o| o.row)
            .map_or(0, |o| o.content);
        if above != cell.content - 1 {
            entries.push(Violation { cell: *cell, multiplicity: cell.content - above - 1 });
        }
    }
    ViolationReport { entries }
}

/// For all `i` and `k`: at least as many `i`s in rows `i..=i+k` as `(i+1)`s in rows `i+1..=i+k+1`.
///
/// Content `c` is also required to sit in row `c` or lower. Without that guard
/// a lone `2` in row 1 would pass although it is a violation entry.
pub fn satisfies_word_condition(t: &Ptableau) -> bool {
    let n = t.n_rows();
    let top = t.max_content().unwrap_or(0);
    if t.row_contents().iter().enumerate().any(|(r, vals)| vals.iter().any(|&v| v > r + 1)) {
        return false;
    }
    for i in 1..top {
        let (mut lower, mut upper) = (0, 0);
        for r in i..=n {
            lower += t.count(i, r);
            upper += t.count(i + 1, r + 1);
            if lower < upper {
                return false;
            }
        }
    }
    true
}
