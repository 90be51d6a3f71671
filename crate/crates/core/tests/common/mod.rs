#![allow(dead_code)]

use ptabkit::grid::{format_grid, parse_grid};
use ptabkit::{Biword, Ptableau, Side};

/// Grid text with rows separated by `/`.
pub fn grid_text(s: &str) -> String {
    s.split('/').map(str::trim).collect::<Vec<_>>().join("\n")
}

pub fn pt(s: &str) -> Ptableau {
    grid_text(s).parse().unwrap_or_else(|e| panic!("fixture {s:?} does not parse: {e}"))
}

pub fn rows(r: &[&[usize]]) -> Ptableau {
    Ptableau::from_row_contents(r.iter().map(|x| x.to_vec()).collect()).unwrap()
}

pub fn biword(s: &str) -> Biword {
    let (top, bottom) = s.split_once('/').unwrap();
    let digits = |w: &str| w.bytes().map(|b| (b - b'0') as usize).collect::<Vec<_>>();
    Biword::from_rows(digits(top), digits(bottom)).unwrap()
}

pub fn left(t: &Ptableau) -> String {
    format_grid(&t.layout(Side::Left))
}

pub fn right(t: &Ptableau) -> String {
    format_grid(&t.layout(Side::Right))
}

/// The printed grid, normalized to the text format.
pub fn printed(s: &str) -> String {
    format_grid(&parse_grid(&grid_text(s), 1).unwrap())
}

/// Running example with eleven cells.
pub const T4: &str = ". . 1 3 4 / 1 2 2 . . / 3 3 4 4 .";
pub const T4_BW: &str = "1122333444/2122331331";
pub const T4_P: &[&[usize]] = &[&[1, 1, 1, 2, 2], &[2, 3, 3, 3], &[3]];
pub const T4_Q: &str = "1 1 2 3 4 / 2 3 4 4 . / 3 . . . .";
pub const T4_PT: &str = ". . 1 1 1 / 1 1 . . 2 / . 2 2 2 3";

/// Lusztig example.
pub const L: &str = ". . 1 1 . . / . . 2 3 4 4 / 1 1 3 4 5 .";
pub const L_BW: &str = "11112334445/33112323223";
pub const L_PT: &str = ". . . . 1 1 / . . 1 1 2 2 / 1 1 . 2 3 3";
pub const L_TMAX: &str = "1 1 1 1 4 4 / 2 3 5 . . . / 3 4 . . . .";
pub const L_P: &str = "1 1 2 2 3 3 / 2 2 3 . . . / 3 3 . . . .";
pub const L_TMIN: &str = ". . . . 1 1 / . . . 2 3 4 / 1 1 3 4 4 5";
pub const L_TMAX_ROT: &str = "1 2 2 3 5 5 / 2 3 4 . . . / 5 5 . . . .";
pub const L_UNINSERTED: &str = ". . . . 2 3 / . . 1 3 4 5 / 2 2 5 5 5 .";
pub const L_LUS: &str = ". 1 1 1 4 4 / 1 . 2 3 . 5 / . . 3 4 . .";

/// Weyl dimension of the irreducible `GL_n` module of highest weight `lambda`.
pub fn weyl_dimension(lambda: &[usize]) -> usize {
    let n = lambda.len();
    let (mut num, mut den) = (1u128, 1u128);
    for i in 0..n {
        for j in i + 1..n {
            num *= (lambda[i] + j - lambda[j] - i) as u128;
            den *= (j - i) as u128;
        }
    }
    (num / den) as usize
}

/// Row contents without trailing blank rows.
pub fn trimmed(t: &Ptableau) -> Vec<Vec<usize>> {
    let mut rows = t.row_contents().to_vec();
    while rows.last().is_some_and(Vec::is_empty) {
        rows.pop();
    }
    rows
}
