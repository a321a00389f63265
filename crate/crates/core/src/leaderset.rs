//! The incremental closure that enumerates all coset leaders.
//!
//! Starting from 0, words are extracted in ≺-increasing order. The first word
//! extracted from a coset is its canonical leader `N(v)`; later words of the
//! same weight join the coset's leader set. Successors `v + e_ij` (standard-form
//! additions only) are inserted according to the weight excess
//! `w_H(v) − w_H(N(v))`:
//!
//! * excess 0 or 1: every standard-form successor;
//! * excess 2: only `(i, j)` where coordinate `i` of `v` is nonzero and is zero
//!   in every leader of `v`'s coset (see [`Criterion3Scope`]);
//! * excess above 2: the word is dropped, it is not a member.
//!
//! The result contains every coset leader and every word at Hamming distance
//! one from a coset leader.

use std::cmp::Ordering;
use std::collections::hash_map::Entry;
use std::collections::{BinaryHeap, HashMap};

use crate::code::{CosetRecord, LinearCode, SyndromeTable};
use crate::error::{Error, Result};
use crate::geometry::{Oracle, WordSet};
use crate::report::Report;
use crate::wordspace::{Position, WeightCompatibleOrder, Word};

/// Which successors the excess-2 rule admits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Criterion3Scope {
    /// `(i, j) ∈ supp_gen(v)`: only digits already set in `v`.
    #[default]
    GenSupport,
    /// `(i, j)` with `supp_gen(v)[i] ≠ ∅`: any digit of a nonzero coordinate.
    Coordinate,
}

/// Rule under which a successor was inserted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Criterion {
    One = 1,
    Two = 2,
    Three = 3,
}

impl Criterion {
    fn for_excess(excess: usize) -> Option<Self> {
        match excess {
            0 => Some(Criterion::One),
            1 => Some(Criterion::Two),
            2 => Some(Criterion::Three),
            _ => None,
        }
    }
}

/// A recorded insertion `parent + e_ij`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub parent: usize,
    pub position: Position,
    pub criterion: Criterion,
}

#[derive(Debug, Clone)]
pub struct Member {
    pub word: Word,
    pub syndrome: usize,
    pub weight: usize,
    /// `w_H(v) − w_H(N(v))`.
    pub excess: usize,
    /// Every distinct insertion that produced this word; empty only for 0.
    pub edges: Vec<Edge>,
    /// Number of successors this member inserted.
    pub successors: usize,
}

struct Pending<'o> {
    word: Word,
    order: &'o WeightCompatibleOrder,
}

impl PartialEq for Pending<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.word == other.word
    }
}

impl Eq for Pending<'_> {}

impl PartialOrd for Pending<'_> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

// reversed: BinaryHeap pops the ≺-minimum
impl Ord for Pending<'_> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order.compare(&other.word, &self.word)
    }
}

/// The finished closure: members in processing order and the coset table.
#[derive(Debug, Clone)]
pub struct ListClosure {
    code: LinearCode,
    order: WeightCompatibleOrder,
    scope: Criterion3Scope,
    members: Vec<Member>,
    index: HashMap<Word, usize>,
    table: SyndromeTable,
    dropped: usize,
}

impl ListClosure {
    pub fn build(code: &LinearCode, order: &WeightCompatibleOrder) -> Result<Self> {
        Self::build_with(code, order, Criterion3Scope::default())
    }

    pub fn build_with(code: &LinearCode, order: &WeightCompatibleOrder, scope: Criterion3Scope) -> Result<Self> {
        let space = code.space();
        if !order.fits(space) {
            return Err(Error::Mismatch("order was built for a different word space".into()));
        }
        let limits = *code.limits();
        let mut table = SyndromeTable::new(code)?;
        let positions: Vec<Position> = space.positions().collect();

        let mut members: Vec<Member> = Vec::new();
        let mut index: HashMap<Word, usize> = HashMap::new();
        let mut pending: HashMap<Word, Vec<Edge>> = HashMap::new();
        let mut heap = BinaryHeap::new();
        let mut dropped = 0;

        pending.insert(space.zero(), Vec::new());
        heap.push(Pending { word: space.zero(), order });

        while let Some(Pending { word: v, .. }) = heap.pop() {
            let edges = pending.remove(&v).expect("queued words have a pending entry");
            if let Some(last) = members.last() {
                debug_assert!(order.less(&last.word, &v), "extraction must be ≺-increasing");
            }
            let syndrome = code.syndrome_index(&v);
            let weight = space.weight(&v);
            let record = table.slot(syndrome).get_or_insert_with(|| CosetRecord {
                syndrome: code.syndrome_at(syndrome),
                weight,
                canonical_leader: v.clone(),
                leaders: Vec::new(),
            });
            if weight < record.weight {
                return Err(Error::Verification(format!(
                    "word {} lighter than its coset's first member",
                    space.format_word(&v)
                )));
            }
            if weight == record.weight {
                record.leaders.push(v.clone());
            }
            let excess = weight - record.weight;
            if excess > 2 {
                // never within distance 1 of a leader
                dropped += 1;
                continue;
            }
            limits.check("List size", members.len() as u128 + 1)?;
            let id = members.len();

            let successors: Vec<(Position, Word)> = match Criterion::for_excess(excess) {
                Some(Criterion::One) | Some(Criterion::Two) => positions
                    .iter()
                    .filter_map(|&pos| space.add_generator(&v, pos).map(|s| (pos, s)))
                    .collect(),
                Some(Criterion::Three) => {
                    // all leaders are lighter than v, hence already extracted
                    let leaders = &record.leaders;
                    positions
                        .iter()
                        .filter(|&&pos| match scope {
                            Criterion3Scope::Coordinate => space.coord_nonzero(&v, pos.coord),
                            Criterion3Scope::GenSupport => space.coefficient(&v, pos) != 0,
                        })
                        .filter(|pos| leaders.iter().all(|l| !space.coord_nonzero(l, pos.coord)))
                        .filter_map(|&pos| space.add_generator(&v, pos).map(|s| (pos, s)))
                        .collect()
                }
                None => unreachable!("excess above 2 was dropped"),
            };
            let criterion = Criterion::for_excess(excess).unwrap();
            for (pos, succ) in &successors {
                debug_assert!(!index.contains_key(succ), "successors are ≻ their parent");
                let edge = Edge { parent: id, position: *pos, criterion };
                match pending.entry(succ.clone()) {
                    Entry::Occupied(mut e) => e.get_mut().push(edge),
                    Entry::Vacant(e) => {
                        e.insert(vec![edge]);
                        heap.push(Pending { word: succ.clone(), order });
                    }
                }
            }

            index.insert(v.clone(), id);
            members.push(Member { word: v, syndrome, weight, excess, edges, successors: successors.len() });
        }

        if !table.is_complete() {
            return Err(Error::Verification("closure did not reach every coset".into()));
        }
        Ok(Self { code: code.clone(), order: order.clone(), scope, members, index, table, dropped })
    }

    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    pub fn order(&self) -> &WeightCompatibleOrder {
        &self.order
    }

    pub fn scope(&self) -> Criterion3Scope {
        self.scope
    }

    /// Members in extraction (≺-increasing) order.
    pub fn members(&self) -> &[Member] {
        &self.members
    }

    pub fn member(&self, w: &Word) -> Option<&Member> {
        self.index.get(w).map(|&i| &self.members[i])
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.index.contains_key(w)
    }

    pub fn table(&self) -> &SyndromeTable {
        &self.table
    }

    pub fn record_of(&self, w: &Word) -> &CosetRecord {
        self.table
            .record_of(&self.code, w)
            .expect("closure table is complete")
    }

    /// `N(w)`: the canonical leader of `w`'s coset.
    pub fn canonical_leader(&self, w: &Word) -> &Word {
        &self.record_of(w).canonical_leader
    }

    pub fn is_leader(&self, w: &Word) -> bool {
        self.code.space().weight(w) == self.record_of(w).weight
    }

    /// `CL(C)`, the union of all leader sets.
    pub fn coset_leaders(&self) -> WordSet {
        self.table.records().flat_map(|r| r.leaders.iter().cloned()).collect()
    }

    /// The set 𝒩 of canonical leaders, one per coset.
    pub fn canonical_leaders(&self) -> WordSet {
        self.table.records().map(|r| r.canonical_leader.clone()).collect()
    }

    /// Whether `d_H(w, CL(C)) ≤ 1`, probing every single-coordinate change.
    pub fn within_1_of_cl(&self, w: &Word) -> bool {
        if self.is_leader(w) {
            return true;
        }
        let space = self.code.space();
        (0..space.n()).any(|i| {
            let current = space.symbol_at(w, i);
            (0..space.q())
                .map(|s| s as u8)
                .filter(|&s| s != current)
                .any(|s| self.is_leader(&space.with_symbol(w, i, s)))
        })
    }

    /// Number of inserted words found to have an excess above 2 on extraction;
    /// they were dropped rather than made members.
    pub fn dropped(&self) -> usize {
        self.dropped
    }

    /// Coset records equal those of the oracle's explicit coset enumeration:
    /// weight, canonical leader and the full leader set.
    pub fn verify_against_oracle(&self, oracle: &Oracle) -> Result<Report> {
        let space = self.code.space();
        let mut report = Report::new("coset leaders vs brute force");
        let reference = oracle.coset_table(&self.order)?;
        for idx in 0..reference.len() {
            report.checked += 1;
            let (Some(mine), Some(theirs)) = (self.table.get(idx), reference.get(idx)) else {
                report.violation(format!("syndrome index {idx} missing"));
                continue;
            };
            let as_set = |r: &CosetRecord| r.leaders.iter().cloned().collect::<WordSet>();
            if mine.weight != theirs.weight
                || mine.canonical_leader != theirs.canonical_leader
                || as_set(mine) != as_set(theirs)
            {
                report.violation(format!(
                    "syndrome index {idx}: closure N = {} (weight {}), brute force N = {} (weight {})",
                    space.format_word(&mine.canonical_leader),
                    mine.weight,
                    space.format_word(&theirs.canonical_leader),
                    theirs.weight
                ));
            }
        }
        if self.coset_leaders() != oracle.coset_leaders() {
            report.violation("CL(C) differs from the minimal-weight enumeration");
        }
        Ok(report)
    }

    /// Ancestor bound: for every coset leader `w = y + e_ij`,
    /// `w_H(y) ≤ w_H(y + C) + 1`.
    pub fn verify_ancestor_bound(&self) -> Report {
        let space = self.code.space();
        let mut report = Report::new("ancestor weight bound");
        for w in self.coset_leaders() {
            for &pos in space.gen_support(&w).pairs() {
                let y = space.remove_generator(&w, pos).unwrap();
                report.checked += 1;
                let (wy, cw) = (space.weight(&y), self.record_of(&y).weight);
                if wy > cw + 1 {
                    report.violation(format!(
                        "leader {} minus e{pos}: w_H = {wy} > {cw} + 1",
                        space.format_word(&w)
                    ));
                }
            }
        }
        report
    }

    /// Descendant bound: for every `w` at distance exactly 1 from `CL(C)`
    /// (distance from the oracle) and `w = y + e_ij`, `w_H(y) ≤ w_H(y + C) + 2`,
    /// and in case of equality coordinate `i` is nonzero in `y` and zero in
    /// every leader of `y`'s coset.
    pub fn verify_descendant_bound(&self, oracle: &Oracle) -> Report {
        let space = self.code.space();
        let mut report = Report::new("descendant weight bound");
        let leaders = oracle.coset_leaders();
        let mut equality_cases = 0;
        for w in oracle.words() {
            if oracle.distance_to_set(w, &leaders) != Some(1) {
                continue;
            }
            for &pos in space.gen_support(w).pairs() {
                let y = space.remove_generator(w, pos).unwrap();
                report.checked += 1;
                let record = self.record_of(&y);
                let wy = space.weight(&y);
                if wy > record.weight + 2 {
                    report.violation(format!(
                        "{} minus e{pos}: w_H = {wy} > {} + 2",
                        space.format_word(w),
                        record.weight
                    ));
                } else if wy == record.weight + 2 {
                    equality_cases += 1;
                    if !space.coord_nonzero(&y, pos.coord) {
                        report.violation(format!(
                            "equality at {} minus e{pos} but coordinate {} of y is zero",
                            space.format_word(w),
                            pos.coord + 1
                        ));
                    }
                    if let Some(l) = record.leaders.iter().find(|l| space.coord_nonzero(l, pos.coord)) {
                        report.violation(format!(
                            "equality at {} minus e{pos} but leader {} is nonzero at coordinate {}",
                            space.format_word(w),
                            space.format_word(l),
                            pos.coord + 1
                        ));
                    }
                }
            }
        }
        report.finding(format!("{equality_cases} decompositions attain the +2 bound"));
        report
    }

    /// Completeness: every word within distance 1 of `CL(C)` (oracle-computed)
    /// is a member.
    pub fn verify_completeness(&self, oracle: &Oracle) -> Report {
        let space = self.code.space();
        let mut report = Report::new("closure completeness");
        let leaders = oracle.coset_leaders();
        for w in oracle.words() {
            if oracle.distance_to_set(w, &leaders).is_some_and(|d| d <= 1) {
                report.checked += 1;
                if !self.contains(w) {
                    report.violation(format!("{} missing from the closure", space.format_word(w)));
                }
            }
        }
        report.finding(format!(
            "{} members, {} words dropped with excess above 2",
            self.members.len(),
            self.dropped
        ));
        report
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const REP3: &str = "p 2\nm 1\nn 3\nk 1\nG\n1 1 1\n";
    const TERNARY2: &str = "p 3\nm 1\nn 2\nk 1\nG\n1 1\n";

    fn closure(text: &str) -> ListClosure {
        let code = LinearCode::parse(text).unwrap();
        let ord = WeightCompatibleOrder::lex(code.space());
        ListClosure::build(&code, &ord).unwrap()
    }

    fn set(lc: &ListClosure, lits: &[&str]) -> WordSet {
        lits.iter().map(|l| lc.code().space().parse_word(l).unwrap()).collect()
    }

    #[test]
    fn first_member_is_zero() {
        let lc = closure(TERNARY2);
        let first = &lc.members()[0];
        assert!(first.word.is_zero());
        assert!(first.edges.is_empty());
        assert_eq!(lc.canonical_leader(&first.word), &first.word);
    }

    #[test]
    fn ternary2_records() {
        let lc = closure(TERNARY2);
        assert_eq!(lc.coset_leaders(), set(&lc, &["0 0", "1 0", "0 2", "0 1", "2 0"]));
        assert_eq!(lc.canonical_leaders(), set(&lc, &["0 0", "0 2", "0 1"]));
        let s = lc.code().space();
        let r = lc.record_of(&s.parse_word("1 0").unwrap());
        assert_eq!(r.weight, 1);
        assert_eq!(r.canonical_leader, s.parse_word("0 2").unwrap());
        let r = lc.record_of(&s.parse_word("2 0").unwrap());
        assert_eq!(r.canonical_leader, s.parse_word("0 1").unwrap());
    }

    #[test]
    fn rep3_records() {
        let lc = closure(REP3);
        let cl = set(&lc, &["0 0 0", "1 0 0", "0 1 0", "0 0 1"]);
        assert_eq!(lc.coset_leaders(), cl);
        assert_eq!(lc.canonical_leaders(), cl);
        for r in lc.table().records() {
            assert_eq!(r.leaders.len(), 1);
        }
        // the distance-1 shell is present too
        for w in set(&lc, &["1 1 0", "1 0 1", "0 1 1"]) {
            assert!(lc.contains(&w));
        }
    }

    #[test]
    fn full_space_code() {
        let lc = closure("p 3\nm 1\nn 2\nk 2\nG\n1 0\n0 1\n");
        assert_eq!(lc.coset_leaders(), set(&lc, &["0 0"]));
    }

    #[test]
    fn within_one_examples() {
        let lc = closure(TERNARY2);
        let s = lc.code().space();
        assert!(lc.within_1_of_cl(&s.parse_word("2 1").unwrap()));
        assert!(lc.within_1_of_cl(&s.zero()));
        let lc = closure(REP3);
        assert!(!lc.within_1_of_cl(&lc.code().space().parse_word("1 1 1").unwrap()));
    }

    #[test]
    fn extraction_weights_non_decreasing() {
        let lc = closure("p 3\nm 1\nn 4\nk 2\nG\n1 0 1 2\n0 1 2 1\n");
        for pair in lc.members().windows(2) {
            assert!(pair[0].weight <= pair[1].weight);
            assert!(lc.order().less(&pair[0].word, &pair[1].word));
        }
    }

    #[test]
    fn closure_checks_small_codes() {
        for text in [REP3, TERNARY2] {
            let lc = closure(text);
            let oracle = Oracle::new(lc.code()).unwrap();
            assert!(lc.verify_ancestor_bound().passed());
            assert!(lc.verify_descendant_bound(&oracle).passed());
            assert!(lc.verify_completeness(&oracle).passed());
            assert!(lc.verify_against_oracle(&oracle).unwrap().passed());
        }
    }

    #[test]
    fn heavy_words_are_dropped() {
        // 111 is reached from 110 but is a weight-3 codeword
        let lc = closure(REP3);
        assert!(!lc.contains(&lc.code().space().parse_word("1 1 1").unwrap()));
        assert_eq!(lc.dropped(), 1);
        assert_eq!(lc.members().len(), 7);
        assert!(lc.members().iter().all(|m| m.excess <= 2));
    }

    #[test]
    fn descendant_equality_condition_fails_on_ternary_4_2() {
        // 1100 is a codeword; 1110 = 1100 + e(3,1) lies at distance 1 from the
        // weight-2 leader 0110, and coordinate 3 of 1100 is zero
        let lc = closure("p 3\nm 1\nn 4\nk 2\nG\n1 0 1 2\n0 1 2 1\n");
        let s = lc.code().space();
        let (w, y, l) = (s.parse_word("1 1 1 0").unwrap(), s.parse_word("1 1 0 0").unwrap(), s.parse_word("0 1 1 0").unwrap());
        assert!(lc.code().contains(&y));
        assert_eq!(lc.record_of(&l).weight, 2);
        assert!(lc.is_leader(&l));
        assert_eq!(s.distance(&w, &l), 1);
        let oracle = Oracle::new(lc.code()).unwrap();
        let report = lc.verify_descendant_bound(&oracle);
        assert!(report.violations.iter().any(|v| v.starts_with("equality at 1 1 1 0 minus e(3,1) but coordinate 3")));
    }

    #[test]
    fn scopes_agree_on_completeness() {
        let code = LinearCode::parse("p 3\nm 1\nn 4\nk 2\nG\n1 0 1 2\n0 1 2 1\n").unwrap();
        let ord = WeightCompatibleOrder::lex(code.space());
        let oracle = Oracle::new(&code).unwrap();
        for scope in [Criterion3Scope::GenSupport, Criterion3Scope::Coordinate] {
            let lc = ListClosure::build_with(&code, &ord, scope).unwrap();
            assert!(lc.verify_completeness(&oracle).passed());
        }
    }

    #[test]
    fn order_for_other_space_rejected() {
        let ternary2 = LinearCode::parse(TERNARY2).unwrap();
        let rep3 = LinearCode::parse(REP3).unwrap();
        let ord = WeightCompatibleOrder::lex(rep3.space());
        assert!(matches!(ListClosure::build(&ternary2, &ord), Err(Error::Mismatch(_))));
    }

    #[test]
    fn list_size_bound() {
        let code = LinearCode::parse(REP3).unwrap().with_limits(crate::Limits::new(5));
        let ord = WeightCompatibleOrder::lex(code.space());
        assert!(matches!(ListClosure::build(&code, &ord), Err(Error::Bound { bound: "List size", .. })));
    }
}
