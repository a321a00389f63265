//! Coset leaders, leader codewords, zero neighbours and trial sets of small
//! q-ary linear codes.
//!
//! The central construction is [`leaderset::ListClosure`], an incremental
//! closure over the additive monoid of F_q^n that produces every coset leader
//! together with every word at Hamming distance one from a coset leader. The
//! leader codewords ([`leadercw`]) are extracted from it, and the
//! correctable/uncorrectable error machinery ([`errormodel`]) derives trial
//! sets and a gradient-like decoder from them. [`geometry`] evaluates Voronoi
//! regions and zero neighbours by brute force and serves as the reference for
//! everything else.

pub mod code;
pub mod corpus;
pub mod error;
pub mod errormodel;
pub mod galois;
pub mod geometry;
pub mod leadercw;
pub mod leaderset;
pub mod report;
pub mod verify;
pub mod wordspace;

pub use code::{CosetRecord, LinearCode, SyndromeTable};
pub use error::{Error, Result};
pub use galois::{Field, FieldElement, FieldParams};
pub use leaderset::ListClosure;
pub use report::Report;
pub use wordspace::{MonoidWord, Position, TieBreak, WeightCompatibleOrder, Word, WordSpace};

/// Hard bounds on exhaustive enumerations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_enum: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Self { max_enum: 1 << 20 }
    }
}

impl Limits {
    pub fn new(max_enum: u64) -> Self {
        Self { max_enum }
    }

    /// Errors when `required` exceeds the enumeration bound.
    pub fn check(&self, bound: &'static str, required: u128) -> Result<()> {
        if required > self.max_enum as u128 {
            Err(Error::Bound { bound, required, limit: self.max_enum })
        } else {
            Ok(())
        }
    }
}
