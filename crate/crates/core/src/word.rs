//! Words, biwords, and the signature rule for crystal operators on words.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::crystal::Direction;
use crate::error::{Error, Result};
use crate::grid::Weight;

/// A word over the alphabet `[n] = {1, ..., n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Word {
    letters: Vec<usize>,
    n: usize,
}

impl Word {
    pub fn new(letters: Vec<usize>, n: usize) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&l| l == 0 || l > n) {
            return Err(Error::LetterOutOfRange { letter: bad, n });
        }
        Ok(Word { letters, n })
    }

    /// A word whose alphabet is just large enough for its letters.
    pub fn from_letters(letters: Vec<usize>) -> Result<Self> {
        let n = letters.iter().copied().max().unwrap_or(1).max(1);
        Word::new(letters, n)
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The same letters regarded as a word over a larger alphabet.
    pub fn with_alphabet(&self, n: usize) -> Result<Self> {
        Word::new(self.letters.clone(), n)
    }

    pub fn weight(&self) -> Weight {
        let mut parts = vec![0; self.n];
        for &l in &self.letters {
            parts[l - 1] += 1;
        }
        Weight(parts)
    }

    pub fn signature(&self, i: usize) -> Result<WordSignature> {
        signature(self, i)
    }

    pub fn apply(&self, i: usize, dir: Direction) -> Result<Option<Word>> {
        crystal_word(self, i, dir)
    }

    /// Raises greedily (smallest index first) until no raising operator applies.
    pub fn to_highest(&self) -> Word {
        let mut w = self.clone();
        'outer: loop {
            for i in 1..w.n {
                if let Ok(Some(next)) = crystal_word(&w, i, Direction::Raise) {
                    w = next;
                    continue 'outer;
                }
            }
            return w;
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_letters(&self.letters, self.n))
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Word::from_letters(parse_letters(s, 1, 1)?)
    }
}

/// Digits run together when every letter is a single digit, otherwise spaces.
pub(crate) fn format_letters(letters: &[usize], bound: usize) -> String {
    if bound <= 9 {
        letters.iter().map(|l| l.to_string()).collect()
    } else {
        letters.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ")
    }
}

pub(crate) fn parse_letters(s: &str, line: usize, first_column: usize) -> Result<Vec<usize>> {
    let trimmed = s.trim();
    let lead = first_column + (s.len() - s.trim_start().len());
    if trimmed.contains(char::is_whitespace) {
        let mut out = Vec::new();
        let mut column = lead;
        for token in trimmed.split(' ') {
            if !token.is_empty() {
                out.push(
                    token
                        .parse()
                        .map_err(|_| Error::parse(line, column, format!("expected a positive integer, found {token:?}")))?,
                );
            }
            column += token.len() + 1;
        }
        Ok(out)
    } else {
        trimmed
            .chars()
            .enumerate()
            .map(|(k, ch)| {
                ch.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| Error::parse(line, lead + k, format!("expected a digit, found {ch:?}")))
            })
            .collect()
    }
}

/// Prefix and suffix sums that decide where `e_i` and `f_i` act on a word.
///
/// Positions are 1-based. `ce[j-1]` is the number of `i+1` letters among the
/// first `j` positions minus the number of `i` letters among the first `j-1`;
/// `cf[j-1]` is the number of `i` letters from position `j` on minus the
/// number of `i+1` letters strictly after `j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordSignature {
    pub i: usize,
    pub ce: Vec<i64>,
    pub cf: Vec<i64>,
    pub eps: usize,
    pub phi: usize,
    pub e_pos: Option<usize>,
    pub f_pos: Option<usize>,
}

pub fn signature(w: &Word, i: usize) -> Result<WordSignature> {
    if i == 0 || i >= w.n {
        return Err(Error::IndexOutOfRange { index: i, bound: w.n });
    }
    let k = w.letters.len();
    let is_up = |s: usize| i64::from(w.letters[s] == i + 1);
    let is_down = |s: usize| i64::from(w.letters[s] == i);

    let mut ce = Vec::with_capacity(k);
    let (mut ups, mut downs_before) = (0i64, 0i64);
    for j in 0..k {
        ups += is_up(j);
        ce.push(ups - downs_before);
        downs_before += is_down(j);
    }
    let mut cf = vec![0i64; k];
    let (mut downs, mut ups_after) = (0i64, 0i64);
    for j in (0..k).rev() {
        downs += is_down(j);
        cf[j] = downs - ups_after;
        ups_after += is_up(j);
    }

    let eps = ce.iter().copied().max().unwrap_or(0).max(0);
    let phi = cf.iter().copied().max().unwrap_or(0).max(0);
    let e_pos = (eps > 0).then(|| ce.iter().position(|&c| c == eps).unwrap() + 1);
    let f_pos = (phi > 0).then(|| cf.iter().rposition(|&c| c == phi).unwrap() + 1);
    Ok(WordSignature { i, ce, cf, eps: eps as usize, phi: phi as usize, e_pos, f_pos })
}

pub fn crystal_word(w: &Word, i: usize, dir: Direction) -> Result<Option<Word>> {
    let sig = signature(w, i)?;
    let (pos, from, to) = match dir {
        Direction::Raise => (sig.e_pos, i + 1, i),
        Direction::Lower => (sig.f_pos, i, i + 1),
    };
    let Some(pos) = pos else { return Ok(None) };
    if w.letters[pos - 1] != from {
        return Err(Error::Internal(format!("signature selected letter {} at {pos}, expected {from}", w.letters[pos - 1])));
    }
    let mut letters = w.letters.clone();
    letters[pos - 1] = to;
    Ok(Some(Word { letters, n: w.n }))
}

/// A two-row array `top / bottom` in standard form: the top row weakly increases
/// and, under each run of equal top letters, the bottom row weakly decreases.
///
/// `m` bounds the top letters and `n` the bottom letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Biword {
    top: Vec<usize>,
    bottom: Vec<usize>,
    m: usize,
    n: usize,
}

impl Biword {
    pub fn new(top: Vec<usize>, bottom: Vec<usize>, m: usize, n: usize) -> Result<Self> {
        if top.len() != bottom.len() {
            return Err(Error::BiwordLengthMismatch { top: top.len(), bottom: bottom.len() });
        }
        if let Some(&bad) = top.iter().find(|&&l| l == 0 || l > m) {
            return Err(Error::LetterOutOfRange { letter: bad, n: m });
        }
        if let Some(&bad) = bottom.iter().find(|&&l| l == 0 || l > n) {
            return Err(Error::LetterOutOfRange { letter: bad, n });
        }
        for j in 1..top.len() {
            let ok = top[j - 1] < top[j] || (top[j - 1] == top[j] && bottom[j - 1] >= bottom[j]);
            if !ok {
                return Err(Error::StandardFormBroken { column: j + 1 });
            }
        }
        Ok(Biword { top, bottom, m, n })
    }

    /// Biword with alphabets just large enough for its letters.
    pub fn from_rows(top: Vec<usize>, bottom: Vec<usize>) -> Result<Self> {
        let m = top.iter().copied().max().unwrap_or(1).max(1);
        let n = bottom.iter().copied().max().unwrap_or(1).max(1);
        Biword::new(top, bottom, m, n)
    }

    pub fn empty(m: usize, n: usize) -> Self {
        Biword { top: Vec::new(), bottom: Vec::new(), m, n }
    }

    pub fn top(&self) -> &[usize] {
        &self.top
    }

    pub fn bottom(&self) -> &[usize] {
        &self.bottom
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.top.len()
    }

    pub fn is_empty(&self) -> bool {
        self.top.is_empty()
    }

    pub fn bottom_word(&self) -> Word {
        Word { letters: self.bottom.clone(), n: self.n }
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.top.iter().copied().zip(self.bottom.iter().copied())
    }

    /// The same letters over larger alphabets.
    pub fn with_alphabets(&self, m: usize, n: usize) -> Result<Self> {
        Biword::new(self.top.clone(), self.bottom.clone(), m, n)
    }

    pub fn apply(&self, i: usize, dir: Direction) -> Result<Option<Biword>> {
        crystal_biword(self, i, dir)
    }
}

impl fmt::Display for Biword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", format_letters(&self.top, self.m), format_letters(&self.bottom, self.n))
    }
}

impl FromStr for Biword {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_biword(s, 1)
    }
}

pub fn parse_biword(s: &str, line: usize) -> Result<Biword> {
    let line_text = s.trim_end_matches(['\n', '\r']);
    let Some((top, bottom)) = line_text.split_once('/') else {
        return Err(Error::parse(line, 1, "a biword needs the form top/bottom"));
    };
    let top = parse_letters(top, line, 1)?;
    let bottom = parse_letters(bottom, line, line_text.find('/').unwrap() + 2)?;
    Biword::from_rows(top, bottom)
}

/// The standard-form biword holding the given multiset of columns `(top, bottom)`.
pub fn standardize(pairs: &[(usize, usize)]) -> Result<Biword> {
    let m = pairs.iter().map(|p| p.0).max().unwrap_or(1).max(1);
    let n = pairs.iter().map(|p| p.1).max().unwrap_or(1).max(1);
    standardize_in(pairs, m, n)
}

/// [`standardize`] with explicit alphabet bounds.
pub fn standardize_in(pairs: &[(usize, usize)], m: usize, n: usize) -> Result<Biword> {
    let mut sorted = pairs.to_vec();
    sorted.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
    let (top, bottom) = sorted.into_iter().unzip();
    Biword::new(top, bottom, m, n)
}

/// Crystal operators act on the bottom row only; the result stays standard.
pub fn crystal_biword(b: &Biword, i: usize, dir: Direction) -> Result<Option<Biword>> {
    let Some(w) = crystal_word(&b.bottom_word(), i, dir)? else { return Ok(None) };
    Biword::new(b.top.clone(), w.letters, b.m, b.n).map(Some)
}

/// Swap the rows of every column and restore standard form.
pub fn dual_biword(b: &Biword) -> Biword {
    let pairs: Vec<(usize, usize)> = b.pairs().map(|(t, w)| (w, t)).collect();
    standardize_in(&pairs, b.n, b.m).expect("swapped columns respect swapped bounds")
}
