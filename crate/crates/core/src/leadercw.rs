//! Leader codewords: nonzero codewords `n₁ + e_ij − n₂` where `n₂` is a coset
//! leader and both `n₁` and `n₁ + e_ij` lie within Hamming distance 1 of the
//! set of coset leaders.
//!
//! Extraction runs over closure members `w`: every `(i, j) ∈ supp_gen(w)`
//! gives a standard-form `n₁ = w − e_ij`, and every leader `n₂` of `w`'s coset
//! gives a candidate `w − n₂`.

use std::collections::BTreeMap;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::geometry::{Oracle, WordSet};
use crate::leaderset::ListClosure;
use crate::report::Report;
use crate::wordspace::{Position, Word};

/// One decomposition `word = n1 + e(position) − n2`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Witness {
    pub n1: Word,
    pub position: Position,
    pub n2: Word,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeaderCodeword {
    pub word: Word,
    pub witnesses: Vec<Witness>,
}

/// `L(C)` with witnesses, sorted by the closure's order.
#[derive(Debug, Clone)]
pub struct LeaderCodewords {
    entries: Vec<LeaderCodeword>,
}

impl LeaderCodewords {
    pub fn extract(lc: &ListClosure) -> Result<Self> {
        let code = lc.code();
        let space = code.space();
        if !lc.table().is_complete() {
            return Err(Error::Precondition("closure table is incomplete".into()));
        }
        let mut found: BTreeMap<Word, Vec<Witness>> = BTreeMap::new();
        for member in lc.members() {
            let w = &member.word;
            if !lc.within_1_of_cl(w) {
                continue;
            }
            for &position in space.gen_support(w).pairs() {
                let n1 = space.remove_generator(w, position).expect("position is in the support");
                if !lc.within_1_of_cl(&n1) {
                    continue;
                }
                for n2 in &lc.record_of(w).leaders {
                    let c = space.sub(w, n2);
                    if c.is_zero() {
                        continue;
                    }
                    debug_assert!(code.contains(&c));
                    found.entry(c).or_default().push(Witness { n1: n1.clone(), position, n2: n2.clone() });
                }
            }
        }
        let mut entries: Vec<LeaderCodeword> = found
            .into_iter()
            .map(|(word, mut witnesses)| {
                witnesses.sort();
                witnesses.dedup();
                LeaderCodeword { word, witnesses }
            })
            .collect();
        entries.sort_by(|a, b| lc.order().compare(&a.word, &b.word));
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[LeaderCodeword] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn words(&self) -> Vec<Word> {
        self.entries.iter().map(|e| e.word.clone()).collect()
    }

    pub fn set(&self) -> WordSet {
        self.entries.iter().map(|e| e.word.clone()).collect()
    }

    pub fn get(&self, w: &Word) -> Option<&LeaderCodeword> {
        self.entries.iter().find(|e| &e.word == w)
    }

    pub fn max_weight(&self, code: &LinearCode) -> usize {
        self.entries.iter().map(|e| code.space().weight(&e.word)).max().unwrap_or(0)
    }

    /// Checks every stored witness against the defining conditions.
    pub fn verify_witnesses(&self, lc: &ListClosure) -> Report {
        let code = lc.code();
        let space = code.space();
        let mut report = Report::new("leader codeword witnesses");
        for e in &self.entries {
            if e.word.is_zero() || !code.contains(&e.word) {
                report.violation(format!("{} is not a nonzero codeword", space.format_word(&e.word)));
            }
            for wit in &e.witnesses {
                report.checked += 1;
                let Some(w) = space.add_generator(&wit.n1, wit.position) else {
                    report.violation(format!("{} + e{} leaves standard form", space.format_word(&wit.n1), wit.position));
                    continue;
                };
                let ok = space.sub(&w, &wit.n2) == e.word
                    && lc.is_leader(&wit.n2)
                    && code.syndrome_index(&w) == code.syndrome_index(&wit.n2)
                    && lc.within_1_of_cl(&wit.n1)
                    && lc.within_1_of_cl(&w);
                if !ok {
                    report.violation(format!(
                        "bad witness ({}, e{}, {}) for {}",
                        space.format_word(&wit.n1),
                        wit.position,
                        space.format_word(&wit.n2),
                        space.format_word(&e.word)
                    ));
                }
            }
        }
        report
    }

    /// Compares with the oracle's literal evaluation.
    pub fn verify_against_oracle(&self, oracle: &Oracle) -> Report {
        let space = oracle.code().space();
        let mut report = Report::new("leader codewords vs brute force");
        let mine = self.set();
        let reference = oracle.leader_codewords();
        report.checked = reference.len().max(mine.len());
        for w in mine.difference(&reference) {
            report.violation(format!("{} extracted but not a leader codeword", space.format_word(w)));
        }
        for w in reference.difference(&mine) {
            report.violation(format!("{} missed by extraction", space.format_word(w)));
        }
        report
    }

    /// Test-set property: every word outside `D(0)` is weight-reduced by some
    /// element.
    pub fn verify_test_set(&self, oracle: &Oracle) -> Report {
        let space = oracle.code().space();
        let mut report = Report::new("leader codewords form a test set");
        report.checked = oracle.words().len();
        if let Some(y) = oracle.test_set_counterexample(&self.words()) {
            report.violation(format!("{} is neither a leader nor reducible", space.format_word(&y)));
        }
        report
    }

    /// `w_H(c) ≤ 2ρ(C) + 1` for every element.
    pub fn verify_weight_bound(&self, lc: &ListClosure) -> Result<Report> {
        let code = lc.code();
        let rho = lc.table().covering_radius()?;
        let mut report = Report::new("leader codeword weight bound");
        for e in &self.entries {
            report.checked += 1;
            let w = code.space().weight(&e.word);
            if w > 2 * rho + 1 {
                report.violation(format!("{} has weight {w} > 2·{rho} + 1", code.space().format_word(&e.word)));
            }
        }
        report.finding(format!("max weight {} against bound {}", self.max_weight(code), 2 * rho + 1));
        Ok(report)
    }

    /// (a) `X(D(0)) ∩ (D(w) ∪ X(D(w))) ≠ ∅` and `w ∈ Z(C)` for every element;
    /// (b) every codeword `w ≠ 0` with `X(D(0)) ∩ D(w) ≠ ∅` is an element.
    pub fn verify_zero_neighbour_props(&self, oracle: &Oracle) -> Report {
        let space = oracle.code().space();
        let mut report = Report::new("leader codewords and zero neighbours");
        let x0 = oracle.x_operator(&oracle.voronoi(&space.zero()));
        let zn = oracle.zero_neighbours();
        let mine = self.set();
        for w in &mine {
            report.checked += 1;
            let d = oracle.voronoi(w);
            let xd = oracle.x_operator(&d);
            if x0.is_disjoint(&d) && x0.is_disjoint(&xd) {
                report.violation(format!("X(D(0)) misses D({0}) ∪ X(D({0}))", space.format_word(w)));
            }
            if !zn.contains(w) {
                report.violation(format!("{} is not a zero neighbour", space.format_word(w)));
            }
        }
        for w in oracle.nonzero_codewords() {
            report.checked += 1;
            if !x0.is_disjoint(&oracle.voronoi(w)) && !mine.contains(w) {
                report.violation(format!("X(D(0)) meets D({}) but it is not a leader codeword", space.format_word(w)));
            }
        }
        report.finding(format!(
            "|Z(C)| = {}, |L(C)| = {}, |Z(C) \\ L(C)| = {}",
            zn.len(),
            mine.len(),
            zn.difference(&mine).count()
        ));
        report
    }

    /// Whether `−c` is an element whenever `c` is.
    pub fn closed_under_negation(&self, code: &LinearCode) -> bool {
        let set = self.set();
        set.iter().all(|c| set.contains(&code.space().neg(c)))
    }
}
