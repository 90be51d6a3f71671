//! Perforated tableaux (ptableaux) as a model of type `A_{n-1}` crystal graphs.
//!
//! A [`Ptableau`] is a grid of blanks and positive integers; putting content
//! `τ_i` in row `ω_i` for every column of a biword gives a bijection with
//! biwords, and the crystal operators `e_i`, `f_i` act by moving a single cell
//! between adjacent rows. On top of that the crate provides RSK insertion on
//! ptableaux ([`ptab_rsk`]) and its inverse, classic column-insertion RSK as an
//! independent check, duality maps, evacuation and the Lusztig involution.
//!
//! ```
//! use ptabkit::{ptab_rsk, Ptableau};
//!
//! let t: Ptableau = ". . 1 3 4\n1 2 2 . .\n3 3 4 4 .".parse()?;
//! let pair = ptab_rsk(&t);
//! assert_eq!(pair.tmax.to_string(), "1 1 2 3 4\n2 3 4 4 .\n3 . . . .");
//! # Ok::<(), ptabkit::Error>(())
//! ```

pub mod checks;
pub mod crystal;
pub mod duality;
mod error;
pub mod graph;
pub mod grid;
pub mod involution;
pub mod rsk;
pub mod sample;
pub mod word;

pub use crystal::{crystal_ptab, eps_phi, is_highest_weight, is_lowest_weight, to_extreme, CrystalOpSequence, Direction, Extreme};
pub use duality::{bw, dual_ptab, dual_ptab_in, perf, rot, satisfies_word_condition, violations, IntMatrix};
pub use error::{Error, Result};
pub use graph::{explore, plactic_class, CrystalComponent, ExportFormat};
pub use grid::{CellRef, Ptableau, Side, Weight};
pub use involution::{e_star_sequence, evacuate, lusztig, LusztigMethod};
pub use rsk::{classic_rsk, insert_resolve, ptab_rsk, rsk_inverse, RskPair, SsytPair};
pub use word::{Biword, Word};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/ptableaux.md")]
    mod ptableaux {}
    #[doc = include_str!("../../../book/src/crystal.md")]
    mod crystal {}
    #[doc = include_str!("../../../book/src/duality.md")]
    mod duality {}
    #[doc = include_str!("../../../book/src/rsk.md")]
    mod rsk {}
    #[doc = include_str!("../../../book/src/lusztig.md")]
    mod lusztig {}
    #[doc = include_str!("../../../book/src/graph.md")]
    mod graph {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
