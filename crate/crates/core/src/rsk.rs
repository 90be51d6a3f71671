//! RSK on ptableaux, its inverse, and classic column-insertion RSK.

use serde::{Deserialize, Serialize};

use crate::crystal::is_highest_weight;
use crate::duality::{bw, dual_ptab, satisfies_word_condition, violations_of_rows};
use crate::error::{Error, Result};
use crate::grid::{placed_cells, CellRef, Ptableau, Side};
use crate::word::Biword;

/// `PT` lies in the distinguished crystal and `Tmax` is highest weight.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RskPair {
    #[serde(rename = "PT")]
    pub pt: Ptableau,
    #[serde(rename = "Tmax")]
    pub tmax: Ptableau,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "step", rename_all = "lowercase")]
pub enum TraceStep {
    Insert { content: usize, row: usize },
    /// `cell` is the violation entry in the right-justified layout before the change.
    Decrement { cell: CellRef, from: usize, to: usize },
    Terminal { eta: usize },
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolutionTrace {
    pub steps: Vec<TraceStep>,
}

impl ResolutionTrace {
    pub fn eta(&self) -> Option<usize> {
        self.steps.iter().rev().find_map(|s| match s {
            TraceStep::Terminal { eta } => Some(*eta),
            _ => None,
        })
    }

    pub fn decrements(&self) -> impl Iterator<Item = (&CellRef, usize, usize)> {
        self.steps.iter().filter_map(|s| match s {
            TraceStep::Decrement { cell, from, to } => Some((cell, *from, *to)),
            _ => None,
        })
    }
}

/// A pair of semistandard tableaux of the same shape, stored as highest-weight ptableaux.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SsytPair {
    #[serde(rename = "P")]
    pub p: Ptableau,
    #[serde(rename = "Q")]
    pub q: Ptableau,
}

/// One column of the input biword processed by [`ptab_rsk_stages`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RskStage {
    pub content: usize,
    pub row: usize,
    pub pt: Ptableau,
    pub tmax: Ptableau,
    pub trace: ResolutionTrace,
}

/// Inserts `[content]_row` into `pt` and resolves violation entries right to left.
///
/// Each round lays the contents out right-justified and lowers the first
/// violation entry (right-most column, lowest cell) by one. The terminal value
/// is the value of the last lowered cell, or `content` if nothing was lowered.
pub fn insert_resolve(pt: &Ptableau, content: usize, row: usize) -> Result<(Ptableau, ResolutionTrace)> {
    if !satisfies_word_condition(pt) {
        return Err(Error::WordConditionPrecondition);
    }
    if !pt.can_extend(content, row) {
        return Err(Error::InvalidExtension { content, row });
    }
    let mut rows = pt.row_contents().to_vec();
    if rows.len() < row {
        rows.resize(row, Vec::new());
    }
    rows[row - 1].push(content);
    rows[row - 1].sort_unstable();

    let mut trace = ResolutionTrace { steps: vec![TraceStep::Insert { content, row }] };
    let mut eta = content;
    let budget: usize = rows.iter().flatten().sum();
    for _ in 0..=budget {
        let report = violations_of_rows(&rows);
        let Some(v) = report.first() else {
            trace.steps.push(TraceStep::Terminal { eta });
            let out = Ptableau::from_row_contents(rows)?;
            debug_assert!(satisfies_word_condition(&out));
            return Ok((out, trace));
        };
        let cell = v.cell;
        let target = &mut rows[cell.row - 1];
        let at = target.iter().position(|&x| x == cell.content).expect("violation cell is present");
        target[at] -= 1;
        target.sort_unstable();
        eta = cell.content - 1;
        trace.steps.push(TraceStep::Decrement { cell, from: cell.content, to: eta });
    }
    Err(Error::Internal("violation resolution did not terminate".into()))
}

/// Every intermediate `(PT, Tmax)` while inserting the columns of `bw(t)` in order.
pub fn ptab_rsk_stages(t: &Ptableau) -> Vec<RskStage> {
    let n = t.n_rows();
    let mut pt = Ptableau::empty(n);
    let mut tmax_rows: Vec<Vec<usize>> = vec![Vec::new(); n];
    let b = bw(t);
    let mut stages = Vec::with_capacity(b.len());
    for (content, row) in b.pairs() {
        let (next, trace) = insert_resolve(&pt, content, row).expect("standard-form insertion keeps the word condition");
        let eta = trace.eta().expect("trace ends with its terminal value");
        tmax_rows[eta - 1].push(content);
        pt = next;
        let tmax = Ptableau::from_row_contents(tmax_rows.clone()).expect("positive contents");
        stages.push(RskStage { content, row, pt: pt.clone(), tmax, trace });
    }
    stages
}

pub fn ptab_rsk(t: &Ptableau) -> RskPair {
    match ptab_rsk_stages(t).pop() {
        Some(last) => RskPair { pt: last.pt, tmax: last.tmax },
        None => RskPair { pt: Ptableau::empty(t.n_rows()), tmax: Ptableau::empty(t.n_rows()) },
    }
}

/// Column insertion of `x` into the tableau with rows `p`; returns the row (0-based) that grew.
pub(crate) fn column_insert(p: &mut Vec<Vec<usize>>, mut x: usize) -> usize {
    let mut c = 0;
    loop {
        let height = p.iter().take_while(|row| row.len() > c).count();
        match (0..height).find(|&r| p[r][c] >= x) {
            Some(r) => {
                std::mem::swap(&mut p[r][c], &mut x);
                c += 1;
            }
            None => {
                if height == p.len() {
                    p.push(Vec::new());
                }
                p[height].push(x);
                return height;
            }
        }
    }
}

fn tableau(rows: Vec<Vec<usize>>) -> Ptableau {
    let rows = if rows.is_empty() { vec![Vec::new()] } else { rows };
    Ptableau::from_row_contents(rows).expect("positive contents")
}

/// Column-inserts the bottom letters left to right; `Q` records the top letters.
pub fn classic_rsk(b: &Biword) -> SsytPair {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (t, w) in b.pairs() {
        let r = column_insert(&mut p, w);
        if r == q.len() {
            q.push(Vec::new());
        }
        q[r].push(t);
    }
    SsytPair { p: tableau(p), q: tableau(q) }
}

/// Row lengths of a highest-weight ptableau with trailing zeros removed.
fn shape(t: &Ptableau) -> Vec<usize> {
    let mut parts = t.weight().0;
    while parts.last() == Some(&0) {
        parts.pop();
    }
    parts
}

/// Undoes [`ptab_rsk`].
///
/// Repeatedly removes the largest, right-most entry `t` of `Tmax`, found in row
/// `a`. The left-most `a` of the right-justified `PT` is then pushed out to the
/// right: at each step the lowest cell of the next column at or above the moving
/// row is taken, its content is written into the moving row, and its own row
/// becomes the moving row. Once there is no next column, `(t / row)` is emitted.
pub fn rsk_inverse(pair: &RskPair) -> Result<Ptableau> {
    let RskPair { pt, tmax } = pair;
    if pt.cell_count() != tmax.cell_count() {
        return Err(Error::ShapeMismatch);
    }
    if !is_highest_weight(tmax) {
        return Err(Error::NotHighestWeight);
    }
    if !satisfies_word_condition(pt) {
        return Err(Error::WordConditionPrecondition);
    }
    if shape(&dual_ptab(pt)) != shape(tmax) {
        return Err(Error::ShapeMismatch);
    }

    let n = pt.n_rows();
    let mut pt_rows = pt.row_contents().to_vec();
    let mut tmax_rows = tmax.row_contents().to_vec();
    let mut out: Vec<(usize, usize)> = Vec::with_capacity(pt.cell_count());
    while let Some(t) = tmax_rows.iter().flatten().copied().max() {
        let a = tmax_rows.iter().position(|row| row.contains(&t)).unwrap();
        let at = tmax_rows[a].iter().rposition(|&v| v == t).unwrap();
        tmax_rows[a].remove(at);
        let a = a + 1;

        let cells = placed_cells(&pt_rows, Side::Right);
        let width = cells.iter().map(|c| c.col).max().unwrap_or(0);
        let mut grid: Vec<Vec<Option<usize>>> = vec![vec![None; width + 1]; n];
        for c in &cells {
            grid[c.row - 1][c.col - 1] = Some(c.content);
        }
        let start = cells
            .iter()
            .filter(|c| c.content == a)
            .min_by_key(|c| c.col)
            .ok_or_else(|| Error::MalformedInput(format!("PT has no cell with content {a}")))?;
        let (mut row, mut col) = (start.row, start.col);
        grid[row - 1][col - 1] = None;
        loop {
            if col + 1 > width {
                out.push((t, row));
                break;
            }
            let Some(s) = (1..=row).rev().find(|&r| grid[r - 1][col].is_some()) else {
                return Err(Error::MalformedInput(format!("no cell to uninsert into in column {}", col + 1)));
            };
            let b = grid[s - 1][col].take();
            grid[row - 1][col] = b;
            row = s;
            col += 1;
        }
        pt_rows = grid.iter().map(|r| r.iter().flatten().copied().collect()).collect();
    }
    out.reverse();
    let mut rows = vec![Vec::new(); n];
    for (t, r) in out {
        rows[r - 1].push(t);
    }
    Ptableau::from_row_contents(rows)
}
