//! Correctable and uncorrectable errors.
//!
//! `E0` holds the ≺-minimal word of every coset and `E1` everything else. On
//! top of that partition live `H(y) = {c ∈ C : y − c ≺ y}`, the minimal
//! uncorrectable errors `M¹`, larger halves of codewords, trial sets and the
//! descent decoder that uses them.

use std::collections::{BTreeMap, BTreeSet};

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::leadercw::LeaderCodewords;
use crate::leaderset::ListClosure;
use crate::report::Report;
use crate::wordspace::{WeightCompatibleOrder, Word};

/// Largest number of codewords the minimal trial set search accepts.
pub const TRIAL_SEARCH_MAX_CODEWORDS: usize = 64;

/// Which minimal elements of `{u : u − c ≺ u}` count as larger halves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LhMinimality {
    /// Minimal under ⊂₁.
    #[default]
    Subword1,
    /// The single ≺-minimum.
    Order,
    /// Minimal under ⊂₁ among coordinate restrictions of `c` (`u_i ∈ {0, c_i}`).
    Restriction,
}

impl LhMinimality {
    pub fn from_name(name: &str) -> Result<Self> {
        match name {
            "subword1" => Ok(Self::Subword1),
            "order" => Ok(Self::Order),
            "restriction" => Ok(Self::Restriction),
            other => Err(Error::Precondition(format!("unknown larger-half minimality `{other}`"))),
        }
    }
}

/// How the decoder picks among improving trial-set elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DescentRule {
    /// The element giving the ≺-smallest `y − c`.
    #[default]
    Steepest,
    /// The first improving element in ≺-order of the set.
    FirstFit,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decoded {
    pub residual: Word,
    pub codeword: Word,
    pub steps: usize,
}

/// A trial set together with the `(t, N(t))` pairs that produced each element.
#[derive(Debug, Clone)]
pub struct TrialSet {
    pub members: Vec<Word>,
    pub provenance: Vec<Vec<(Word, Word)>>,
}

/// Outcome of the three equivalent trial-set tests.
#[derive(Debug, Clone)]
pub struct TrialSetCheck {
    /// `y ∈ E0` iff no element has `y − c ≺ y`.
    pub definition: bool,
    /// Every `y ∈ M¹` meets the set in `H(y)`.
    pub hitting: bool,
    /// `M¹` is covered by the larger halves of the elements.
    pub larger_halves: bool,
    pub report: Report,
}

pub struct ErrorPartition {
    code: LinearCode,
    order: WeightCompatibleOrder,
    words: Vec<Word>,
    codewords: Vec<Word>,
    e0: Vec<bool>,
    canonical: Vec<Word>,
    coset_weight: Vec<usize>,
    m1: Vec<Word>,
}

impl ErrorPartition {
    pub fn new(lc: &ListClosure) -> Result<Self> {
        let code = lc.code().clone();
        let space = code.space();
        space.check_enumerable(code.limits())?;
        let codewords = code.codewords()?;
        let words: Vec<Word> = space.words().collect();
        let mut e0 = vec![false; words.len()];
        for leader in lc.canonical_leaders() {
            e0[space.index(&leader)] = true;
        }
        let mut canonical = vec![space.zero(); code.syndrome_count() as usize];
        let mut coset_weight = vec![0; canonical.len()];
        for r in lc.table().records() {
            let idx = code.syndrome_index_of(&r.syndrome);
            canonical[idx] = r.canonical_leader.clone();
            coset_weight[idx] = r.weight;
        }
        let mut ep = Self {
            code,
            order: lc.order().clone(),
            words,
            codewords,
            e0,
            canonical,
            coset_weight,
            m1: Vec::new(),
        };
        ep.m1 = ep.compute_minimal_uncorrectable();
        Ok(ep)
    }

    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    pub fn order(&self) -> &WeightCompatibleOrder {
        &self.order
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn codewords(&self) -> &[Word] {
        &self.codewords
    }

    pub fn is_correctable(&self, w: &Word) -> bool {
        self.e0[self.code.space().index(w)]
    }

    pub fn e0(&self) -> Vec<Word> {
        self.words.iter().filter(|w| self.is_correctable(w)).cloned().collect()
    }

    pub fn e1(&self) -> Vec<Word> {
        self.words.iter().filter(|w| !self.is_correctable(w)).cloned().collect()
    }

    /// `N(y)` read from the closure's table.
    pub fn canonical_of(&self, y: &Word) -> &Word {
        &self.canonical[self.code.syndrome_index(y)]
    }

    pub fn coset_weight(&self, y: &Word) -> usize {
        self.coset_weight[self.code.syndrome_index(y)]
    }

    /// `H(y)`: codewords `c` with `y − c ≺ y`.
    pub fn h_set(&self, y: &Word) -> Vec<Word> {
        let space = self.code.space();
        self.codewords.iter().filter(|c| self.order.less(&space.sub(y, c), y)).cloned().collect()
    }

    /// `H(y) = ∅` exactly when `y ∈ E0`, for every word.
    pub fn verify_h_characterization(&self) -> Report {
        let space = self.code.space();
        let mut report = Report::new("H(y) empty iff correctable");
        for y in &self.words {
            report.checked += 1;
            if self.h_set(y).is_empty() != self.is_correctable(y) {
                report.violation(format!("{} disagrees", space.format_word(y)));
            }
        }
        report
    }

    fn compute_minimal_uncorrectable(&self) -> Vec<Word> {
        self.words
            .iter()
            .filter(|y| !self.is_correctable(y))
            .filter(|y| {
                self.code
                    .space()
                    .subwords1(y)
                    .iter()
                    .all(|x| x == *y || self.is_correctable(x))
            })
            .cloned()
            .collect()
    }

    /// `M¹`: uncorrectable words whose proper ⊂₁-subwords are all correctable.
    pub fn minimal_uncorrectable(&self) -> &[Word] {
        &self.m1
    }

    /// `M⁰`: correctable words whose proper ⊂₁-superwords are all uncorrectable.
    pub fn maximal_correctable(&self) -> Vec<Word> {
        let space = self.code.space();
        self.words
            .iter()
            .filter(|x| self.is_correctable(x))
            .filter(|x| space.superwords1(x).iter().all(|z| z == *x || !self.is_correctable(z)))
            .cloned()
            .collect()
    }

    /// Larger halves of a nonzero codeword `c`: minimal words `u` with `u − c ≺ u`.
    pub fn larger_halves(&self, c: &Word, rule: LhMinimality) -> Result<Vec<Word>> {
        let space = self.code.space();
        if c.is_zero() {
            return Err(Error::Precondition("larger halves of the zero codeword".into()));
        }
        if !self.code.contains(c) {
            return Err(Error::Precondition(format!("{} is not a codeword", space.format_word(c))));
        }
        let beats = |u: &Word| self.order.less(&space.sub(u, c), u);
        let candidates = self.words.iter().filter(|u| beats(u));
        let minimal = |u: &Word| space.subwords1(u).iter().all(|x| x == u || !beats(x));
        Ok(match rule {
            LhMinimality::Subword1 => candidates.filter(|u| minimal(u)).cloned().collect(),
            LhMinimality::Order => self.order.min(candidates).into_iter().cloned().collect(),
            LhMinimality::Restriction => {
                let parts: Vec<Word> = space.coordinate_restrictions(c).into_iter().filter(|u| beats(u)).collect();
                parts
                    .iter()
                    .filter(|u| !parts.iter().any(|x| x != *u && space.subword1(x, u)))
                    .cloned()
                    .collect()
            }
        })
    }

    /// `w_H(c) ≤ 2 w_H(u) ≤ w_H(c) + 2` for every larger half `u` of every
    /// nonzero codeword `c`.
    pub fn verify_larger_half_sandwich(&self, rule: LhMinimality) -> Result<Report> {
        let space = self.code.space();
        let mut report = Report::new("larger-half weight sandwich");
        for c in self.codewords.iter().filter(|c| !c.is_zero()) {
            let wc = space.weight(c);
            for u in self.larger_halves(c, rule)? {
                report.checked += 1;
                let wu = space.weight(&u);
                if wc > 2 * wu || 2 * wu > wc + 2 {
                    report.violation(format!(
                        "c = {} (weight {wc}), u = {} (weight {wu})",
                        space.format_word(c),
                        space.format_word(&u)
                    ));
                }
            }
        }
        Ok(report)
    }

    /// Runs the definition, the `M¹` hitting form and the larger-half cover
    /// form independently. Disagreement among them and the additive form
    /// `y ⪯ y + c` are reported as findings.
    pub fn is_trial_set(&self, t: &[Word], rule: LhMinimality) -> Result<TrialSetCheck> {
        let space = self.code.space();
        let mut report = Report::new("trial set");
        let improves = |y: &Word| t.iter().any(|c| self.order.less(&space.sub(y, c), y));

        let mut definition = true;
        let mut additive_mismatch = 0;
        for y in &self.words {
            report.checked += 1;
            if improves(y) == self.is_correctable(y) {
                definition = false;
                report.violation(format!("definition fails at {}", space.format_word(y)));
            }
            let additive = t.iter().all(|c| !self.order.less(&space.add(y, c), y));
            if additive != self.is_correctable(y) {
                additive_mismatch += 1;
            }
        }

        let mut hitting = true;
        for y in &self.m1 {
            report.checked += 1;
            let h = self.h_set(y);
            if !t.iter().any(|c| h.contains(c)) {
                hitting = false;
                report.violation(format!("H({}) misses the set", space.format_word(y)));
            }
        }

        let mut covered = BTreeSet::new();
        for c in t.iter().filter(|c| !c.is_zero()) {
            covered.extend(self.larger_halves(c, rule)?);
        }
        let mut larger_halves = true;
        for y in &self.m1 {
            report.checked += 1;
            if !covered.contains(y) {
                larger_halves = false;
                report.violation(format!("{} is in no larger half", space.format_word(y)));
            }
        }

        if !(definition == hitting && hitting == larger_halves) {
            report.finding(format!(
                "forms disagree: definition {definition}, hitting {hitting}, larger halves {larger_halves}"
            ));
        }
        report.finding(format!("additive form y ⪯ y + c disagrees with E0 on {additive_mismatch} words"));
        Ok(TrialSetCheck { definition, hitting, larger_halves, report })
    }

    /// Trial set built from the closure: every member `t ∈ M¹` contributes
    /// `t − N(t)`. The result is checked to be a trial set, to lie in `L(C)`,
    /// and to have for each element `c` some `y ∈ M¹ ∩ L(c)` with
    /// `y − c ∈ E0`.
    pub fn extract_trial_set(&self, lc: &ListClosure, lcw: &LeaderCodewords, rule: LhMinimality) -> Result<TrialSet> {
        let space = self.code.space();
        let m1: BTreeSet<&Word> = self.m1.iter().collect();
        let mut found: BTreeMap<Word, Vec<(Word, Word)>> = BTreeMap::new();
        let mut reached = 0;
        for member in lc.members() {
            let t = &member.word;
            if !m1.contains(t) {
                continue;
            }
            reached += 1;
            let tk = lc.canonical_leader(t).clone();
            found.entry(space.sub(t, &tk)).or_default().push((t.clone(), tk));
        }
        if reached != m1.len() {
            return Err(Error::Verification(format!(
                "{} minimal uncorrectable words are not closure members",
                m1.len() - reached
            )));
        }
        let mut entries: Vec<(Word, Vec<(Word, Word)>)> = found.into_iter().collect();
        entries.sort_by(|a, b| self.order.compare(&a.0, &b.0));
        let (members, provenance): (Vec<Word>, Vec<_>) = entries.into_iter().unzip();

        let check = self.is_trial_set(&members, rule)?;
        if !check.report.passed() {
            return Err(Error::Verification(format!(
                "extracted set is not a trial set: {}",
                check.report.violations[0]
            )));
        }
        let leader_cws = lcw.set();
        for c in &members {
            if !leader_cws.contains(c) {
                return Err(Error::Verification(format!("{} is not a leader codeword", space.format_word(c))));
            }
            let halves = self.larger_halves(c, rule)?;
            let witnessed = halves
                .iter()
                .any(|y| m1.contains(y) && self.is_correctable(&space.sub(y, c)));
            if !witnessed {
                return Err(Error::Verification(format!(
                    "{} has no minimal uncorrectable larger half y with y − c correctable",
                    space.format_word(c)
                )));
            }
        }
        Ok(TrialSet { members, provenance })
    }

    /// `x ⊂₁ y` and `x ∈ E1` imply `y ∈ E1`. Pairs related only by plain ⊂
    /// with equal generalized supports and differing correctability are counted
    /// as a finding.
    pub fn verify_monotone_structure(&self) -> Report {
        let space = self.code.space();
        let mut report = Report::new("monotone structure");
        let mut plain_differs = 0usize;
        let mut restriction_breaks = 0usize;
        for y in &self.words {
            let y_ok = self.is_correctable(y);
            if y_ok {
                restriction_breaks += space
                    .coordinate_restrictions(y)
                    .iter()
                    .filter(|x| !self.is_correctable(x))
                    .count();
            }
            for x in space.subwords1(y) {
                report.checked += 1;
                if !self.is_correctable(&x) && y_ok {
                    report.violation(format!(
                        "{} ⊂₁ {} with the smaller word uncorrectable",
                        space.format_word(&x),
                        space.format_word(y)
                    ));
                }
            }
            for x in same_support_below(y) {
                if self.is_correctable(&x) != y_ok {
                    plain_differs += 1;
                }
            }
        }
        report.finding(format!(
            "{plain_differs} pairs y' ⊂ y with equal generalized support differ in correctability"
        ));
        report.finding(format!(
            "{restriction_breaks} uncorrectable coordinate restrictions of correctable words"
        ));
        report
    }

    /// Descent: replace `y` by an improving `y − c`, `c ∈ T ∪ −T`, until none
    /// improves.
    pub fn gradient_decode(&self, y: &Word, t: &[Word], rule: DescentRule) -> Decoded {
        let space = self.code.space();
        let mut candidates: Vec<Word> = t.iter().flat_map(|c| [c.clone(), space.neg(c)]).collect();
        candidates.sort_by(|a, b| self.order.compare(a, b));
        candidates.dedup();
        let mut current = y.clone();
        let mut steps = 0;
        loop {
            let mut improving = candidates
                .iter()
                .map(|c| space.sub(&current, c))
                .filter(|r| self.order.less(r, &current));
            let next = match rule {
                DescentRule::FirstFit => improving.next(),
                DescentRule::Steepest => improving.min_by(|a, b| self.order.compare(a, b)),
            };
            match next {
                Some(r) => {
                    current = r;
                    steps += 1;
                }
                None => break,
            }
        }
        Decoded { codeword: space.sub(y, &current), residual: current, steps }
    }

    /// Decodes every word with `t` and checks that the residual is the coset's
    /// ≺-minimum of minimal weight, reached within `q^n` steps.
    pub fn verify_decoder(&self, t: &[Word], rule: DescentRule) -> Report {
        let space = self.code.space();
        let mut report = Report::new("descent decoder");
        let mut max_steps = 0;
        for y in &self.words {
            report.checked += 1;
            let d = self.gradient_decode(y, t, rule);
            max_steps = max_steps.max(d.steps);
            let ok = d.steps <= self.words.len()
                && &d.residual == self.canonical_of(y)
                && self.is_correctable(&d.residual)
                && self.code.contains(&d.codeword)
                && space.distance(y, &d.codeword) == self.coset_weight(y);
            if !ok {
                report.violation(format!(
                    "{} decodes to residual {} after {} steps",
                    space.format_word(y),
                    space.format_word(&d.residual),
                    d.steps
                ));
            }
        }
        report.finding(format!("at most {max_steps} steps"));
        report
    }

    /// For each word of `E1`, `H(y)` as a bit mask over nonzero codewords.
    fn h_masks(&self) -> Result<(Vec<Word>, Vec<u64>)> {
        let nonzero: Vec<Word> = self.codewords.iter().filter(|c| !c.is_zero()).cloned().collect();
        if nonzero.len() + 1 > TRIAL_SEARCH_MAX_CODEWORDS {
            return Err(Error::Bound {
                bound: "codewords for trial-set search",
                required: nonzero.len() as u128 + 1,
                limit: TRIAL_SEARCH_MAX_CODEWORDS as u64,
            });
        }
        let masks = self
            .words
            .iter()
            .filter(|y| !self.is_correctable(y))
            .map(|y| {
                let h = self.h_set(y);
                nonzero
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| h.contains(c))
                    .fold(0u64, |acc, (i, _)| acc | 1 << i)
            })
            .collect();
        Ok((nonzero, masks))
    }

    /// Every inclusion-minimal trial set, found as the minimal transversals of
    /// `{H(y) : y ∈ E1}`. Gated to codes with at most 64 codewords.
    pub fn minimal_trial_sets(&self) -> Result<Vec<Vec<Word>>> {
        let (nonzero, mut masks) = self.h_masks()?;
        masks.sort_unstable();
        masks.dedup();
        let family: Vec<u64> = masks
            .iter()
            .copied()
            .filter(|&s| !masks.iter().any(|&o| o != s && o & s == o))
            .collect();
        let mut out = BTreeSet::new();
        transversals(&family, 0, &mut out);
        Ok(out.into_iter().map(|mask| unmask(&nonzero, mask)).collect())
    }

    /// Same as [`Self::minimal_trial_sets`] by testing every subset.
    pub fn minimal_trial_sets_exhaustive(&self) -> Result<Vec<Vec<Word>>> {
        let (nonzero, masks) = self.h_masks()?;
        if nonzero.len() > 20 {
            return Err(Error::Bound { bound: "subsets for exhaustive trial-set search", required: 1 << nonzero.len(), limit: 1 << 20 });
        }
        let is_trial = |t: u64| masks.iter().all(|&s| s & t != 0);
        let mut out = Vec::new();
        for t in 1u64..1 << nonzero.len() {
            if is_trial(t) && (0..nonzero.len()).filter(|i| t >> i & 1 == 1).all(|i| !is_trial(t & !(1 << i))) {
                out.push(unmask(&nonzero, t));
            }
        }
        Ok(out)
    }

    /// Every minimal trial set is contained in `L(C)`.
    pub fn verify_minimal_trial_sets(&self, lcw: &LeaderCodewords) -> Result<Report> {
        let space = self.code.space();
        let leader_cws = lcw.set();
        let mut report = Report::new("minimal trial sets inside leader codewords");
        let sets = self.minimal_trial_sets()?;
        for t in &sets {
            report.checked += 1;
            for c in t.iter().filter(|c| !leader_cws.contains(*c)) {
                report.violation(format!("minimal trial set contains {}", space.format_word(c)));
            }
        }
        let smallest = sets.iter().map(Vec::len).min().unwrap_or(0);
        let smallest_inside = sets
            .iter()
            .filter(|t| t.len() == smallest)
            .all(|t| t.iter().all(|c| leader_cws.contains(c)));
        report.finding(format!(
            "{} minimal trial sets; those of least size {smallest} lie inside: {smallest_inside}",
            sets.len()
        ));
        Ok(report)
    }
}

fn unmask(words: &[Word], mask: u64) -> Vec<Word> {
    (0..words.len()).filter(|i| mask >> i & 1 == 1).map(|i| words[i].clone()).collect()
}

/// Branches on the first set not yet hit; an element that no longer hits any
/// set alone can never become necessary again, so such branches are cut.
fn transversals(family: &[u64], chosen: u64, out: &mut BTreeSet<u64>) {
    let Some(&open) = family.iter().find(|&&s| s & chosen == 0) else {
        out.insert(chosen);
        return;
    };
    let mut bits = open;
    while bits != 0 {
        let e = bits.trailing_zeros();
        bits &= bits - 1;
        let next = chosen | 1 << e;
        let all_private = (0..64).filter(|i| next >> i & 1 == 1).all(|i| {
            family.iter().any(|&s| s & next == 1 << i)
        });
        if all_private {
            transversals(family, next, out);
        }
    }
}

/// Words `y' ≠ y` with the same nonzero digit positions and digits ≤ those of `y`.
fn same_support_below(y: &Word) -> Vec<Word> {
    let digits = y.digits();
    let mut out = vec![digits.to_vec()];
    for (i, &d) in digits.iter().enumerate() {
        if d > 1 {
            out = out
                .into_iter()
                .flat_map(|w| {
                    (1..=d).map(move |v| {
                        let mut w = w.clone();
                        w[i] = v;
                        w
                    })
                })
                .collect();
        }
    }
    out.into_iter()
        .filter(|w| w.as_slice() != digits)
        .map(|w| Word::from_digits(w.into_boxed_slice()))
        .collect()
}
