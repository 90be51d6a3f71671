//! The closed-form raising path to `Tmax`, evacuation to `Tmin`, and the Lusztig involution.

use serde::{Deserialize, Serialize};

use crate::crystal::{is_highest_weight, CrystalOpSequence, Direction};
use crate::duality::{rot, satisfies_word_condition};
use crate::error::{Error, Result};
use crate::grid::Ptableau;
use crate::rsk::{ptab_rsk, rsk_inverse, RskPair};

/// `alpha[i][j]` counts the `i`s in row `j` (both 1-based; index 0 unused).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaTable {
    alpha: Vec<Vec<usize>>,
}

impl AlphaTable {
    pub fn new(pt: &Ptableau) -> Self {
        let n = pt.n_rows();
        let top = pt.max_content().unwrap_or(0).max(n);
        let mut alpha = vec![vec![0; n + 1]; top + 1];
        for (r, vals) in pt.row_contents().iter().enumerate() {
            for &v in vals {
                alpha[v][r + 1] += 1;
            }
        }
        AlphaTable { alpha }
    }

    pub fn alpha(&self, i: usize, j: usize) -> usize {
        self.alpha.get(i).and_then(|row| row.get(j)).copied().unwrap_or(0)
    }

    /// `alpha(1, t) + ... + alpha(s, t)`.
    pub fn beta(&self, s: usize, t: usize) -> usize {
        (1..=s).map(|q| self.alpha(q, t)).sum()
    }
}

/// Raising path from a distinguished-crystal ptableau to its highest weight.
///
/// For `l = 1, ..., n-1` in turn and `s = 1, ..., n-l`, applies `e_s` exactly
/// `beta(s, s+l)` times.
pub fn e_star_sequence(pt: &Ptableau) -> Result<CrystalOpSequence> {
    if !satisfies_word_condition(pt) {
        return Err(Error::WordConditionPrecondition);
    }
    let n = pt.n_rows();
    let table = AlphaTable::new(pt);
    let mut seq = CrystalOpSequence::new();
    for l in 1..n {
        for s in 1..=n - l {
            seq.push(s, Direction::Raise, table.beta(s, s + l));
        }
    }
    Ok(seq)
}

/// Inward jeu de taquin from `Tmax` to the lowest-weight node `Tmin`.
///
/// The highest-weight input is a tableau of shape `λ` inside an `n × λ1` box.
/// Repeatedly the top-most row that can grow by one box while `λ` stays a
/// partition gets a hole at its end. The hole slides up or left, taking the
/// larger neighbor and preferring the upper one on ties, until no content is
/// adjacent. The content ends up packed against the bottom-right corner.
pub fn evacuate(tmax: &Ptableau) -> Result<Ptableau> {
    if !is_highest_weight(tmax) {
        return Err(Error::NotHighestWeight);
    }
    let n = tmax.n_rows();
    let mut outer: Vec<usize> = tmax.row_contents().iter().map(Vec::len).collect();
    let width = outer.iter().copied().max().unwrap_or(0);
    let mut grid: Vec<Vec<Option<usize>>> = tmax
        .row_contents()
        .iter()
        .map(|vals| (0..width).map(|c| vals.get(c).copied()).collect())
        .collect();
    while let Some(start) = (0..n).find(|&i| outer[i] < width && (i == 0 || outer[i - 1] > outer[i])) {
        let (mut i, mut j) = (start, outer[start]);
        outer[start] += 1;
        loop {
            let up = if i > 0 { grid[i - 1][j] } else { None };
            let left = if j > 0 { grid[i][j - 1] } else { None };
            match (up, left) {
                (None, None) => break,
                (Some(u), l) if l.is_none_or(|l| u >= l) => {
                    grid[i][j] = Some(u);
                    grid[i - 1][j] = None;
                    i -= 1;
                }
                (_, l) => {
                    grid[i][j] = l;
                    grid[i][j - 1] = None;
                    j -= 1;
                }
            }
        }
    }
    Ptableau::from_row_contents(grid.into_iter().map(|row| row.into_iter().flatten().collect()).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LusztigMethod {
    /// Uninsert `PT` against the rotated `Tmin`, then rotate back.
    Uninsert,
    /// Apply the reversed `e_(*)` path, indices mirrored, to `Tmin`.
    EStar,
    /// Run both and insist they agree.
    Both,
}

fn lusztig_uninsert(pair: &RskPair) -> Result<Ptableau> {
    let tmin = evacuate(&pair.tmax)?;
    let m = pair.tmax.max_content().unwrap_or(1);
    let rotated = RskPair { pt: pair.pt.clone(), tmax: rot(&tmin, m)? };
    rot(&rsk_inverse(&rotated)?, m)
}

/// The reversed `e_(*)` path with every index `i` replaced by `n - i`.
pub fn mirrored_reverse(seq: &CrystalOpSequence, n: usize) -> CrystalOpSequence {
    CrystalOpSequence::from_expanded(seq.expanded().into_iter().rev().map(|(i, dir)| (n - i, dir)))
}

fn lusztig_estar(pair: &RskPair) -> Result<Ptableau> {
    let n = pair.pt.n_rows();
    let tmin = evacuate(&pair.tmax)?;
    mirrored_reverse(&e_star_sequence(&pair.pt)?, n).apply(&tmin)
}

pub fn lusztig(t: &Ptableau, method: LusztigMethod) -> Result<Ptableau> {
    let pair = ptab_rsk(t);
    match method {
        LusztigMethod::Uninsert => lusztig_uninsert(&pair),
        LusztigMethod::EStar => lusztig_estar(&pair),
        LusztigMethod::Both => {
            let a = lusztig_uninsert(&pair)?;
            if a != lusztig_estar(&pair)? {
                return Err(Error::MethodDisagreement);
            }
            Ok(a)
        }
    }
}
