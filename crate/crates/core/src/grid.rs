//! The ptableau value type.
//!
//! A ptableau is a rectangular grid of blanks and positive integers. Rows are
//! weakly increasing, columns strictly increasing, the cells of each value form
//! a horizontal strip running from bottom-left to top-right, a larger value never
//! sits weakly left of and above a smaller one, and no column is entirely blank.
//!
//! Every ptableau is determined by which contents sit in which rows, so the
//! per-row content multisets act as the identity of a row-equivalence class.
//! [`Ptableau`] keeps those multisets next to one concrete representative grid;
//! equality and hashing only look at the multisets.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One box of a grid: `None` is a blank, `Some(c)` a cell with content `c`.
pub type Entry = Option<usize>;

/// A raw rectangular array of boxes, row 1 first.
pub type Grid = Vec<Vec<Entry>>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

/// A particular cell of a particular layout. All coordinates are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CellRef {
    pub content: usize,
    pub row: usize,
    pub col: usize,
}

/// Number of cells per row (or letters per value, for words).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight(pub Vec<usize>);

impl Weight {
    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn reversed(&self) -> Weight {
        Weight(self.0.iter().rev().copied().collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Clone)]
pub struct Ptableau {
    rows: Vec<Vec<usize>>,
    grid: Grid,
}

impl Ptableau {
    /// The ptableau with no cells and `n_rows` blank rows.
    pub fn empty(n_rows: usize) -> Self {
        Ptableau { rows: vec![Vec::new(); n_rows], grid: vec![Vec::new(); n_rows] }
    }

    /// Builds the (left-justified) ptableau holding the given contents in each row.
    ///
    /// Any assignment of contents to rows is a valid ptableau; the order of the
    /// values inside a row does not matter.
    pub fn from_row_contents(rows: Vec<Vec<usize>>) -> Result<Self> {
        let mut rows = rows;
        for (r, row) in rows.iter_mut().enumerate() {
            if row.contains(&0) {
                return Err(Error::ZeroContent { row: r + 1, col: 0 });
            }
            row.sort_unstable();
        }
        let grid = layout(&rows, Side::Left);
        Ok(Ptableau { rows, grid })
    }

    /// Checks a raw grid against every ptableau rule.
    ///
    /// All-blank columns are dropped first; blank rows are kept.
    pub fn validate(grid: Grid) -> Result<Self> {
        let n_rows = grid.len();
        let width = grid.first().map_or(0, Vec::len);
        for (r, row) in grid.iter().enumerate() {
            if row.len() != width {
                return Err(Error::NonRectangular { row: r + 1, len: row.len(), expected: width });
            }
            if let Some(c) = row.iter().position(|e| *e == Some(0)) {
                return Err(Error::ZeroContent { row: r + 1, col: c + 1 });
            }
        }
        let grid = drop_blank_columns(grid);
        check_rules(&grid)?;

        let rows = contents_of(&grid, n_rows);
        let minimal = minimal_width(&rows);
        let width = grid.first().map_or(0, Vec::len);
        if width != minimal {
            return Err(Error::NotMinimal { width, minimal });
        }
        Ok(Ptableau { rows, grid })
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.grid.first().map_or(0, Vec::len)
    }

    /// The representative grid this value currently carries.
    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    /// Sorted contents of each row; identifies the row-equivalence class.
    pub fn row_contents(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn row(&self, r: usize) -> &[usize] {
        &self.rows[r - 1]
    }

    pub fn cell_count(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.cell_count() == 0
    }

    pub fn max_content(&self) -> Option<usize> {
        self.rows.iter().flatten().copied().max()
    }

    pub fn weight(&self) -> Weight {
        Weight(self.rows.iter().map(Vec::len).collect())
    }

    /// Number of cells with content `value` in row `r`.
    pub fn count(&self, value: usize, r: usize) -> usize {
        self.rows.get(r.wrapping_sub(1)).map_or(0, |row| row.iter().filter(|&&v| v == value).count())
    }

    /// Cells of the representative grid, row by row.
    pub fn cells(&self) -> Vec<CellRef> {
        grid_cells(&self.grid)
    }

    /// The row-equivalent ptableau with all content pushed to one side.
    ///
    /// Repeatedly swaps a cell with an adjacent blank in its row whenever the swap
    /// moves content toward `side` and keeps the grid valid, until nothing moves.
    pub fn justify(&self, side: Side) -> Ptableau {
        let grid = justify_grid(self.grid.clone(), side, false);
        Ptableau { rows: self.rows.clone(), grid }
    }

    /// Same class as `self`, carrying the left-justified representative.
    pub fn canonical(&self) -> Ptableau {
        Ptableau { rows: self.rows.clone(), grid: layout(&self.rows, Side::Left) }
    }

    /// The grid of the given justification, computed directly from the contents.
    pub fn layout(&self, side: Side) -> Grid {
        layout(&self.rows, side)
    }

    /// Rows `i` and `i + 1` on their own, with all-blank columns removed.
    pub fn restrict(&self, i: usize) -> Result<Ptableau> {
        if i == 0 || i >= self.n_rows() {
            return Err(Error::RowOutOfRange { index: i, n_rows: self.n_rows() });
        }
        Ptableau::from_row_contents(vec![self.rows[i - 1].clone(), self.rows[i].clone()])
    }

    /// Whether appending `content` to row `row` keeps the biword in standard form.
    pub fn can_extend(&self, content: usize, row: usize) -> bool {
        if content == 0 || row == 0 {
            return false;
        }
        match self.max_content() {
            None => true,
            Some(max) if content > max => true,
            Some(max) if content == max => {
                // The appended column must come last among the columns with top
                // letter `content`, whose rows are listed in decreasing order.
                self.rows.iter().enumerate().all(|(r, vals)| r + 1 >= row || !vals.contains(&max))
            }
            Some(_) => false,
        }
    }

    /// `T ⊗ [content]_row`: append one cell, growing the row count if needed.
    pub fn extend(&self, content: usize, row: usize) -> Result<Ptableau> {
        if !self.can_extend(content, row) {
            return Err(Error::InvalidExtension { content, row });
        }
        let mut rows = self.rows.clone();
        if rows.len() < row {
            rows.resize(row, Vec::new());
        }
        rows[row - 1].push(content);
        Ptableau::from_row_contents(rows)
    }

    /// Same contents padded with blank rows up to `n_rows`.
    pub fn with_rows(&self, n_rows: usize) -> Ptableau {
        let mut rows = self.rows.clone();
        if rows.len() < n_rows {
            rows.resize(n_rows, Vec::new());
        }
        Ptableau { grid: layout(&rows, Side::Left), rows }
    }

    /// Text of the representative grid (which need not be left-justified).
    pub fn grid_text(&self) -> String {
        format_grid(&self.grid)
    }
}

impl PartialEq for Ptableau {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
    }
}

impl Eq for Ptableau {}

impl Hash for Ptableau {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.rows.hash(state);
    }
}

impl PartialOrd for Ptableau {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ptableau {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rows.cmp(&other.rows)
    }
}

impl fmt::Debug for Ptableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ptableau[{}]", format_grid(&self.grid).replace('\n', " / "))
    }
}

/// Canonical text: the left-justified grid, one line per row.
impl fmt::Display for Ptableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_grid(&layout(&self.rows, Side::Left)))
    }
}

impl FromStr for Ptableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_ptableau(s, 1)
    }
}

/// Renders a grid, `.` for blanks. A grid with no columns prints one `.` per row.
pub fn format_grid(grid: &Grid) -> String {
    grid.iter()
        .map(|row| {
            if row.is_empty() {
                ".".to_string()
            } else {
                row.iter()
                    .map(|e| e.map_or_else(|| ".".to_string(), |v| v.to_string()))
                    .collect::<Vec<_>>()
                    .join(" ")
            }
        })
        .collect::<Vec<_>>()
        .join("\n")
}

/// Parses the grid text format; `first_line` is used for error positions.
pub fn parse_grid(s: &str, first_line: usize) -> Result<Grid> {
    let mut grid = Vec::new();
    for (offset, line) in s.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let mut row = Vec::new();
        let mut column = 1;
        for token in line.split(' ') {
            if token.is_empty() {
                column += 1;
                continue;
            }
            if token == "." {
                row.push(None);
            } else {
                let v: usize = token.parse().map_err(|_| {
                    Error::parse(first_line + offset, column, format!("expected '.' or a positive integer, found {token:?}"))
                })?;
                row.push(Some(v));
            }
            column += token.len() + 1;
        }
        grid.push(row);
    }
    if grid.is_empty() {
        return Err(Error::parse(first_line, 1, "empty ptableau block"));
    }
    Ok(grid)
}

pub fn parse_ptableau(s: &str, first_line: usize) -> Result<Ptableau> {
    Ptableau::validate(parse_grid(s, first_line)?)
}

/// Splits text into blank-line separated blocks, keeping each block's first line number.
pub fn split_blocks(s: &str) -> Vec<(usize, String)> {
    let mut blocks = Vec::new();
    let mut current: Vec<&str> = Vec::new();
    let mut start = 1;
    for (i, line) in s.lines().enumerate() {
        if line.trim().is_empty() {
            if !current.is_empty() {
                blocks.push((start, current.join("\n")));
                current.clear();
            }
        } else {
            if current.is_empty() {
                start = i + 1;
            }
            current.push(line.trim_end());
        }
    }
    if !current.is_empty() {
        blocks.push((start, current.join("\n")));
    }
    blocks
}

#[derive(Serialize, Deserialize)]
struct PtableauJson {
    rows: Grid,
}

impl Serialize for Ptableau {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PtableauJson { rows: layout(&self.rows, Side::Left) }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Ptableau {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = PtableauJson::deserialize(deserializer)?;
        Ptableau::validate(raw.rows).map_err(serde::de::Error::custom)
    }
}

pub(crate) fn grid_cells(grid: &Grid) -> Vec<CellRef> {
    let mut out = Vec::new();
    for (r, row) in grid.iter().enumerate() {
        for (c, e) in row.iter().enumerate() {
            if let Some(v) = e {
                out.push(CellRef { content: *v, row: r + 1, col: c + 1 });
            }
        }
    }
    out
}

pub(crate) fn contents_of(grid: &Grid, n_rows: usize) -> Vec<Vec<usize>> {
    let mut rows: Vec<Vec<usize>> = grid.iter().map(|row| row.iter().flatten().copied().collect()).collect();
    rows.resize(n_rows, Vec::new());
    for row in &mut rows {
        row.sort_unstable();
    }
    rows
}

pub(crate) fn drop_blank_columns(grid: Grid) -> Grid {
    let width = grid.first().map_or(0, Vec::len);
    let keep: Vec<bool> = (0..width).map(|c| grid.iter().any(|row| row[c].is_some())).collect();
    grid.into_iter()
        .map(|row| row.into_iter().zip(&keep).filter(|(_, k)| **k).map(|(e, _)| e).collect())
        .collect()
}

/// Cells in standard biword order: content ascending, and for equal content the
/// lower rows first.
pub(crate) fn biword_order(rows: &[Vec<usize>]) -> Vec<(usize, usize)> {
    let mut cells: Vec<(usize, usize)> =
        rows.iter().enumerate().flat_map(|(r, vals)| vals.iter().map(move |&v| (v, r + 1))).collect();
    cells.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
    cells
}

/// Leftmost admissible column of each cell, in biword order.
///
/// A cell must sit strictly right of its row predecessor and of every earlier
/// cell in a lower row, which makes this a longest-path computation.
fn left_columns(n_rows: usize, cells: &[(usize, usize)]) -> Vec<usize> {
    let mut reach = vec![0usize; n_rows + 2];
    let mut cols = Vec::with_capacity(cells.len());
    for &(_, r) in cells {
        let c = 1 + reach[r..=n_rows].iter().copied().max().unwrap_or(0);
        reach[r] = c;
        cols.push(c);
    }
    cols
}

fn right_columns(n_rows: usize, cells: &[(usize, usize)], width: usize) -> Vec<usize> {
    let mut bound = vec![width + 1; n_rows + 2];
    let mut cols = vec![0; cells.len()];
    for (idx, &(_, r)) in cells.iter().enumerate().rev() {
        let c = bound[1..=r].iter().copied().min().unwrap_or(width + 1) - 1;
        bound[r] = c;
        cols[idx] = c;
    }
    cols
}

pub(crate) fn minimal_width(rows: &[Vec<usize>]) -> usize {
    let cells = biword_order(rows);
    left_columns(rows.len(), &cells).into_iter().max().unwrap_or(0)
}

/// Positions of every cell (in biword order) in the chosen justification.
pub(crate) fn placed_cells(rows: &[Vec<usize>], side: Side) -> Vec<CellRef> {
    let n_rows = rows.len();
    let cells = biword_order(rows);
    let left = left_columns(n_rows, &cells);
    let cols = match side {
        Side::Left => left,
        Side::Right => {
            let width = left.iter().copied().max().unwrap_or(0);
            right_columns(n_rows, &cells, width)
        }
    };
    cells.iter().zip(cols).map(|(&(content, row), col)| CellRef { content, row, col }).collect()
}

pub(crate) fn grid_from_cells(n_rows: usize, cells: &[CellRef]) -> Grid {
    let width = cells.iter().map(|c| c.col).max().unwrap_or(0);
    let mut grid = vec![vec![None; width]; n_rows];
    for cell in cells {
        grid[cell.row - 1][cell.col - 1] = Some(cell.content);
    }
    grid
}

pub(crate) fn layout(rows: &[Vec<usize>], side: Side) -> Grid {
    grid_from_cells(rows.len(), &placed_cells(rows, side))
}

/// A higher cell `(r1, c1, v1)` and a lower cell `(r2, c2, v2)` with `c1 <= c2`
/// must satisfy `v1 < v2`.
fn conflicts(higher: &CellRef, lower: &CellRef) -> bool {
    higher.row < lower.row && higher.col <= lower.col && higher.content >= lower.content
}

fn check_rules(grid: &Grid) -> Result<()> {
    for (r, row) in grid.iter().enumerate() {
        let mut last = 0;
        for (c, e) in row.iter().enumerate() {
            if let Some(v) = *e {
                if v < last {
                    return Err(Error::RowOrderViolation { row: r + 1, col: c + 1 });
                }
                last = v;
            }
        }
    }
    let cells = grid_cells(grid);
    for lower in &cells {
        for higher in &cells {
            if higher.col == lower.col && conflicts(higher, lower) {
                return Err(Error::ColumnStrictnessViolation { row: lower.row, col: lower.col });
            }
        }
    }
    for higher in &cells {
        for lower in &cells {
            if conflicts(higher, lower) {
                return Err(Error::StripOrderViolation { row: higher.row, col: higher.col });
            }
        }
    }
    Ok(())
}

/// Checks only the pairwise rules (no minimality).
pub(crate) fn satisfies_rules(grid: &Grid) -> bool {
    check_rules(grid).is_ok()
}

fn cell_fits(grid: &Grid, row: usize, col: usize, value: usize) -> bool {
    let me = CellRef { content: value, row: row + 1, col: col + 1 };
    grid.iter().enumerate().all(|(r, cells)| {
        cells.iter().enumerate().all(|(c, e)| match e {
            Some(v) if (r, c) != (row, col) => {
                let other = CellRef { content: *v, row: r + 1, col: c + 1 };
                !conflicts(&me, &other) && !conflicts(&other, &me)
            }
            _ => true,
        })
    })
}

/// Fixed-point blank/cell swapping. `reverse_scan` visits rows and columns in the
/// opposite order; the result is the same either way.
pub(crate) fn justify_grid(mut grid: Grid, side: Side, reverse_scan: bool) -> Grid {
    let n_rows = grid.len();
    let width = grid.first().map_or(0, Vec::len);
    if width < 2 {
        return grid;
    }
    let row_order: Vec<usize> = if reverse_scan { (0..n_rows).rev().collect() } else { (0..n_rows).collect() };
    let col_order: Vec<usize> = if reverse_scan { (0..width - 1).rev().collect() } else { (0..width - 1).collect() };
    loop {
        let mut moved = false;
        for &r in &row_order {
            for &c in &col_order {
                let (from, to) = match side {
                    Side::Left => (c + 1, c),
                    Side::Right => (c, c + 1),
                };
                if let (Some(v), None) = (grid[r][from], grid[r][to]) {
                    if cell_fits(&grid, r, to, v) {
                        grid[r][to] = Some(v);
                        grid[r][from] = None;
                        moved = true;
                    }
                }
            }
        }
        if !moved {
            return grid;
        }
    }
}
