//! Crystal operators on ptableaux.
//!
//! `e_i` and `f_i` only look at rows `i` and `i + 1`. In the left-justified
//! two-row restriction, `e_i` lifts the right-most lower cell that has a blank
//! above it; in the right-justified restriction, `f_i` drops the left-most
//! upper cell that has a blank below it.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{layout, satisfies_rules, Ptableau, Side};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    Raise,
    Lower,
}

impl Direction {
    pub fn reverse(self) -> Direction {
        match self {
            Direction::Raise => Direction::Lower,
            Direction::Lower => Direction::Raise,
        }
    }

    fn letter(self) -> char {
        match self {
            Direction::Raise => 'e',
            Direction::Lower => 'f',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Extreme {
    Highest,
    Lowest,
}

/// One factor `e_i^exp` or `f_i^exp`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OpStep {
    pub i: usize,
    pub dir: Direction,
    pub exp: usize,
}

impl fmt::Display for OpStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.dir.letter(), self.i)?;
        if self.exp != 1 {
            write!(f, "^{}", self.exp)?;
        }
        Ok(())
    }
}

/// Operators applied in list order, first step first.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CrystalOpSequence {
    steps: Vec<OpStep>,
}

impl CrystalOpSequence {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn steps(&self) -> &[OpStep] {
        &self.steps
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Appends `exp` applications, merging with the last step when it matches.
    pub fn push(&mut self, i: usize, dir: Direction, exp: usize) {
        if exp == 0 {
            return;
        }
        match self.steps.last_mut() {
            Some(last) if last.i == i && last.dir == dir => last.exp += exp,
            _ => self.steps.push(OpStep { i, dir, exp }),
        }
    }

    /// One `(i, dir)` entry per single application.
    pub fn expanded(&self) -> Vec<(usize, Direction)> {
        self.steps.iter().flat_map(|s| std::iter::repeat_n((s.i, s.dir), s.exp)).collect()
    }

    pub fn from_expanded(ops: impl IntoIterator<Item = (usize, Direction)>) -> Self {
        let mut seq = Self::new();
        for (i, dir) in ops {
            seq.push(i, dir, 1);
        }
        seq
    }

    pub fn total_len(&self) -> usize {
        self.steps.iter().map(|s| s.exp).sum()
    }

    /// Applies the sequence, failing at the first undefined application.
    pub fn apply(&self, t: &Ptableau) -> Result<Ptableau> {
        let mut cur = t.clone();
        for (k, step) in self.steps.iter().enumerate() {
            for _ in 0..step.exp {
                cur = crystal_ptab(&cur, step.i, step.dir)?
                    .ok_or_else(|| Error::NullStep { step: k + 1, op: step.to_string() })?;
            }
        }
        Ok(cur)
    }
}

impl fmt::Display for CrystalOpSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.steps.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for CrystalOpSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut seq = CrystalOpSequence::new();
        let mut column = 1;
        for token in s.split(' ') {
            if !token.is_empty() {
                let bad = || Error::parse(1, column, format!("expected an operator like e2 or f1^3, found {token:?}"));
                let dir = match token.as_bytes()[0] {
                    b'e' => Direction::Raise,
                    b'f' => Direction::Lower,
                    _ => return Err(bad()),
                };
                let (index, exp) = match token[1..].split_once('^') {
                    Some((i, e)) => (i, e),
                    None => (&token[1..], "1"),
                };
                let i: usize = index.parse().map_err(|_| bad())?;
                let exp: usize = exp.parse().map_err(|_| bad())?;
                if i == 0 || exp == 0 {
                    return Err(bad());
                }
                seq.steps.push(OpStep { i, dir, exp });
            }
            column += token.len() + 1;
        }
        Ok(seq)
    }
}

fn check_index(t: &Ptableau, i: usize) -> Result<()> {
    if i == 0 || i >= t.n_rows() {
        return Err(Error::IndexOutOfRange { index: i, bound: t.n_rows() });
    }
    Ok(())
}

/// `(ε_i(T), φ_i(T))`: blanks in the upper row of the left-justified restriction
/// and in the lower row of the right-justified one.
pub fn eps_phi(t: &Ptableau, i: usize) -> Result<(usize, usize)> {
    check_index(t, i)?;
    let r = t.restrict(i)?;
    let width = r.n_cols();
    Ok((width - r.row(1).len(), width - r.row(2).len()))
}

pub fn crystal_ptab(t: &Ptableau, i: usize, dir: Direction) -> Result<Option<Ptableau>> {
    check_index(t, i)?;
    let pair = [t.row(i).to_vec(), t.row(i + 1).to_vec()];
    let (side, from, to) = match dir {
        Direction::Raise => (Side::Left, 1, 0),
        Direction::Lower => (Side::Right, 0, 1),
    };
    let mut grid = layout(&pair, side);
    let width = grid.first().map_or(0, Vec::len);
    let free = |c: &usize| grid[from][*c].is_some() && grid[to][*c].is_none();
    let col = match dir {
        Direction::Raise => (0..width).rev().find(free),
        Direction::Lower => (0..width).find(free),
    };
    let Some(col) = col else { return Ok(None) };
    let value = grid[from][col].take().unwrap();
    grid[to][col] = Some(value);
    if !satisfies_rules(&grid) {
        return Err(Error::Internal(format!("moving {value} at column {} of rows {i},{} broke validity", col + 1, i + 1)));
    }

    let mut rows = t.row_contents().to_vec();
    let src = &mut rows[i - 1 + from];
    let at = src.iter().position(|&v| v == value).unwrap();
    src.remove(at);
    rows[i - 1 + to].push(value);
    Ptableau::from_row_contents(rows).map(Some)
}

/// Every `e_i` is undefined; equivalently the left-justified form is a semistandard tableau.
pub fn is_highest_weight(t: &Ptableau) -> bool {
    let grid = t.layout(Side::Left);
    let mut prev = usize::MAX;
    for row in &grid {
        let len = row.iter().take_while(|e| e.is_some()).count();
        if row[len..].iter().any(Option::is_some) || len > prev {
            return false;
        }
        prev = len;
    }
    true
}

pub fn is_lowest_weight(t: &Ptableau) -> bool {
    (1..t.n_rows()).all(|i| matches!(crystal_ptab(t, i, Direction::Lower), Ok(None)))
}

/// Greedily raises (or lowers) at the smallest applicable index until stuck.
pub fn to_extreme(t: &Ptableau, target: Extreme) -> (Ptableau, CrystalOpSequence) {
    to_extreme_by(t, target, false)
}

/// As [`to_extreme`], trying the largest index first when `largest_first` is set.
pub fn to_extreme_by(t: &Ptableau, target: Extreme, largest_first: bool) -> (Ptableau, CrystalOpSequence) {
    let dir = match target {
        Extreme::Highest => Direction::Raise,
        Extreme::Lowest => Direction::Lower,
    };
    let n = t.n_rows();
    let mut cur = t.clone();
    let mut path = CrystalOpSequence::new();
    'outer: loop {
        let order: Vec<usize> = if largest_first { (1..n).rev().collect() } else { (1..n).collect() };
        for i in order {
            if let Some(next) = crystal_ptab(&cur, i, dir).expect("index in range") {
                cur = next;
                path.push(i, dir, 1);
                continue 'outer;
            }
        }
        return (cur, path);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::Weight;

    fn p(s: &str) -> Ptableau {
        s.parse().unwrap()
    }

    const FOUR_ROW: &str = ". . . . . . . . 4 4 5\n. . . . . 1 1 2 . . 6\n. . . 1 1 . 2 4 5 6 7\n1 1 2 3 3 3 4 6 6 . .";

    #[test]
    fn e2_on_four_row_example() {
        let t = p(FOUR_ROW);
        assert_eq!(eps_phi(&t, 2).unwrap().0, 3);
        assert_eq!(t.weight(), Weight(vec![3, 4, 7, 9]));
        let u = crystal_ptab(&t, 2, Direction::Raise).unwrap().unwrap();
        assert_eq!(u.weight(), Weight(vec![3, 5, 6, 9]));
        assert_eq!(u.row(2), &[1, 1, 2, 6, 6]);
    }

    #[test]
    fn highest_weight_verdicts() {
        assert!(!is_highest_weight(&p(FOUR_ROW)));
        let t2 = Ptableau::from_row_contents(vec![vec![1, 1, 1, 1, 1, 4, 4], vec![2, 4, 4, 6], vec![3, 5]]).unwrap();
        assert!(is_highest_weight(&t2));
        assert!(is_highest_weight(&Ptableau::empty(3)));
        // blank row above content is not a partition shape
        assert!(!is_highest_weight(&Ptableau::from_row_contents(vec![vec![], vec![2]]).unwrap()));
    }

    #[test]
    fn blank_restriction_is_inert() {
        let t = Ptableau::from_row_contents(vec![vec![1], vec![], vec![]]).unwrap();
        assert_eq!(eps_phi(&t, 2).unwrap(), (0, 0));
        assert_eq!(crystal_ptab(&t, 2, Direction::Raise).unwrap(), None);
        assert!(matches!(eps_phi(&t, 3), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn sequence_text() {
        let s: CrystalOpSequence = "e2 f1^3".parse().unwrap();
        assert_eq!(s.expanded(), vec![(2, Direction::Raise), (1, Direction::Lower), (1, Direction::Lower), (1, Direction::Lower)]);
        assert_eq!(s.to_string(), "e2 f1^3");
        assert!("".parse::<CrystalOpSequence>().unwrap().is_empty());
        assert!(matches!("e0".parse::<CrystalOpSequence>(), Err(Error::Parse { .. })));
        assert!(matches!("e1 g2".parse::<CrystalOpSequence>(), Err(Error::Parse { column: 4, .. })));
    }

    #[test]
    fn null_step_is_reported() {
        let t = Ptableau::from_row_contents(vec![vec![1], vec![]]).unwrap();
        let s: CrystalOpSequence = "f1 f1".parse().unwrap();
        assert_eq!(s.apply(&t).unwrap_err(), Error::NullStep { step: 2, op: "f1".into() });
    }

    #[test]
    fn hw_of_extension_example() {
        let t = p(". 1 1 2 3 4\n. 2 2 3 . .\n1 3 3 4 5 5");
        let (hw, _) = to_extreme(&t, Extreme::Highest);
        assert_eq!(hw.row_contents(), &[vec![1, 1, 1, 2, 3, 4], vec![2, 2, 3, 5, 5], vec![3, 3, 4]]);
        let (hw5, _) = to_extreme(&t.extend(5, 2).unwrap(), Extreme::Highest);
        assert_eq!(hw5, hw.extend(5, 1).unwrap());
    }
}
