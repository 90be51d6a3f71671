//! Guessing what kind of object the input text holds.

use clap::ValueEnum;

use ptabkit::duality::parse_matrix;
use ptabkit::grid::{parse_ptableau, split_blocks};
use ptabkit::word::parse_biword;
use ptabkit::{Biword, Error, IntMatrix, Ptableau, Result, Word};

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Kind {
    Ptab,
    Biword,
    Word,
    Matrix,
}

#[derive(Debug)]
pub enum Input {
    Ptab(Ptableau),
    Biword(Biword),
    Word(Word),
    Matrix(IntMatrix),
    Pair(Ptableau, Ptableau),
}

impl Input {
    pub fn kind_name(&self) -> &'static str {
        match self {
            Input::Ptab(_) => "ptableau",
            Input::Biword(_) => "biword",
            Input::Word(_) => "word",
            Input::Matrix(_) => "matrix",
            Input::Pair(..) => "pair of ptableaux",
        }
    }

    /// A line with `/` is a biword; `.` or several rows make a ptableau; a
    /// lone line of letters needs `--as`. JSON objects are ptableaux.
    pub fn detect(text: &str, kind: Option<Kind>) -> Result<Input> {
        let blocks = split_blocks(text);
        let Some((first_line, block)) = blocks.first() else {
            return Err(Error::Parse { line: 1, column: 1, message: "empty input".into() });
        };
        if blocks.len() > 1 {
            return Err(Error::Parse {
                line: blocks[1].0,
                column: 1,
                message: "expected a single object, found several blank-line separated blocks".into(),
            });
        }
        let kind = match kind {
            Some(k) => k,
            None if block.trim_start().starts_with('{') => {
                return serde_json::from_str(block).map(Input::Ptab).map_err(|e| Error::Parse {
                    line: first_line + e.line() - 1,
                    column: e.column(),
                    message: e.to_string(),
                })
            }
            None if block.contains('/') => Kind::Biword,
            None if block.contains('.') || block.lines().count() > 1 => Kind::Ptab,
            None => {
                return Err(Error::Parse {
                    line: *first_line,
                    column: 1,
                    message: "a single line is ambiguous; pass --as ptab or --as word".into(),
                })
            }
        };
        Ok(match kind {
            Kind::Ptab => Input::Ptab(parse_ptableau(block, *first_line)?),
            Kind::Biword => Input::Biword(parse_biword(block.trim(), *first_line)?),
            Kind::Word => Input::Word(block.trim().parse().map_err(|e| shift(e, *first_line))?),
            Kind::Matrix => Input::Matrix(parse_matrix(block, *first_line)?),
        })
    }
}

fn shift(e: Error, first_line: usize) -> Error {
    match e {
        Error::Parse { line, column, message } => Error::Parse { line: line + first_line - 1, column, message },
        other => other,
    }
}

/// Two blank-line separated ptableaux, or a JSON object with `PT` and `Tmax`.
pub fn read_blocks(text: &str, kind: Option<Kind>) -> Result<Input> {
    if kind.is_some_and(|k| k != Kind::Ptab) {
        return Err(Error::Parse { line: 1, column: 1, message: "unrsk reads ptableaux only".into() });
    }
    if text.trim_start().starts_with('{') {
        let pair: ptabkit::RskPair = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        return Ok(Input::Pair(pair.pt, pair.tmax));
    }
    let blocks = split_blocks(text);
    let [(l1, a), (l2, b)] = blocks.as_slice() else {
        return Err(Error::Parse {
            line: 1,
            column: 1,
            message: format!("expected two blank-line separated ptableaux, found {} blocks", blocks.len()),
        });
    };
    Ok(Input::Pair(parse_ptableau(a, *l1)?, parse_ptableau(b, *l2)?))
}
