//! The shipped fixture codes, embedded at compile time.

use crate::code::LinearCode;
use crate::error::Result;

#[derive(Debug, Clone, Copy)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub path: &'static str,
    pub source: &'static str,
}

impl CorpusEntry {
    pub fn code(&self) -> Result<LinearCode> {
        LinearCode::parse(self.source)
    }
}

macro_rules! entry {
    ($name:literal) => {
        CorpusEntry {
            name: $name,
            path: concat!("fixtures/", $name, ".code"),
            source: include_str!(concat!("../../../fixtures/", $name, ".code")),
        }
    };
}

pub const CORPUS: [CorpusEntry; 8] = [
    entry!("rep_3_1"),
    entry!("hamming_7_4"),
    entry!("shortened_6_3"),
    entry!("ternary_2_1"),
    entry!("ternary_4_2"),
    entry!("gf4_2_1"),
    entry!("gf4_4_2"),
    entry!("gf9_3_1"),
];

pub fn find(name: &str) -> Option<&'static CorpusEntry> {
    CORPUS.iter().find(|e| e.name == name)
}
