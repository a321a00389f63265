//! Brute-force reference implementations: Voronoi regions, the distance-one
//! operator X(·), boundaries, zero neighbours, test sets, coset tables and the
//! leader-codeword set, each evaluated literally from its definition.
//!
//! Nothing here is optimized. Every set is computed by scanning all of F_q^n
//! (and all codewords where the definition quantifies over them).

use std::collections::BTreeSet;

use crate::code::{CosetRecord, LinearCode, SyndromeTable};
use crate::error::Result;
use crate::wordspace::{Position, WeightCompatibleOrder, Word};

pub type WordSet = BTreeSet<Word>;

/// Which codewords a Voronoi region is compared against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum VoronoiRule {
    /// `d(y, z) ≤ d(y, c′)` for every `c′ ∈ C`.
    #[default]
    AllCodewords,
    /// Only `c′ ∈ C \ {0}`. For `z ≠ 0` this lets `D(z)` absorb words closer to 0;
    /// with a single nonzero codeword `D(z)` is the whole space.
    NonzeroOnly,
}

/// Exhaustive oracle over one code.
pub struct Oracle<'a> {
    code: &'a LinearCode,
    words: Vec<Word>,
    codewords: Vec<Word>,
    rule: VoronoiRule,
}

impl<'a> Oracle<'a> {
    pub fn new(code: &'a LinearCode) -> Result<Self> {
        code.space().check_enumerable(code.limits())?;
        Ok(Self {
            code,
            words: code.space().words().collect(),
            codewords: code.codewords()?,
            rule: VoronoiRule::default(),
        })
    }

    pub fn with_rule(mut self, rule: VoronoiRule) -> Self {
        self.rule = rule;
        self
    }

    pub fn rule(&self) -> VoronoiRule {
        self.rule
    }

    pub fn code(&self) -> &LinearCode {
        self.code
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn codewords(&self) -> &[Word] {
        &self.codewords
    }

    pub fn nonzero_codewords(&self) -> impl Iterator<Item = &Word> {
        self.codewords.iter().filter(|c| !c.is_zero())
    }

    fn dist(&self, x: &Word, y: &Word) -> usize {
        self.code.space().distance(x, y)
    }

    /// `D(z) = {y : d(y, z) ≤ d(y, c′)}` over the rivals selected by the rule.
    /// Both rules give `D(0) = CL(C)`.
    pub fn voronoi(&self, z: &Word) -> WordSet {
        let rivals: Vec<&Word> = match self.rule {
            VoronoiRule::AllCodewords => self.codewords.iter().collect(),
            VoronoiRule::NonzeroOnly => self.nonzero_codewords().collect(),
        };
        self.words
            .iter()
            .filter(|y| {
                let d = self.dist(y, z);
                rivals.iter().all(|c| d <= self.dist(y, c))
            })
            .cloned()
            .collect()
    }

    /// `min_{a ∈ A} d(y, a)`, or `None` for empty `A`.
    pub fn distance_to_set<'s>(&self, y: &Word, set: impl IntoIterator<Item = &'s Word>) -> Option<usize> {
        set.into_iter().map(|a| self.dist(y, a)).min()
    }

    /// `X(A)`: words whose distance to `A` is exactly 1.
    pub fn x_operator(&self, a: &WordSet) -> WordSet {
        self.words
            .iter()
            .filter(|y| self.distance_to_set(y, a) == Some(1))
            .cloned()
            .collect()
    }

    pub fn complement(&self, a: &WordSet) -> WordSet {
        self.words.iter().filter(|y| !a.contains(*y)).cloned().collect()
    }

    /// `δ(A) = X(A) ∪ X(F_q^n \ A)`.
    pub fn boundary(&self, a: &WordSet) -> WordSet {
        let mut out = self.x_operator(a);
        out.extend(self.x_operator(&self.complement(a)));
        out
    }

    /// `Z(C)`: nonzero codewords whose region boundary meets that of `D(0)`.
    pub fn zero_neighbours(&self) -> WordSet {
        let zero_boundary = self.boundary(&self.voronoi(&self.code.space().zero()));
        self.nonzero_codewords()
            .filter(|z| !self.boundary(&self.voronoi(z)).is_disjoint(&zero_boundary))
            .cloned()
            .collect()
    }

    /// First word that is neither in `D(0)` nor weight-reducible by an element
    /// of `t`, if any.
    pub fn test_set_counterexample(&self, t: &[Word]) -> Option<Word> {
        let space = self.code.space();
        let d0 = self.voronoi(&space.zero());
        self.words
            .iter()
            .find(|y| {
                !d0.contains(*y) && !t.iter().any(|v| space.weight(&space.sub(y, v)) < space.weight(y))
            })
            .cloned()
    }

    pub fn is_test_set(&self, t: &[Word]) -> bool {
        self.test_set_counterexample(t).is_none()
    }

    /// Minimal coset weight of `y`, scanning `y − c` over all codewords.
    pub fn coset_weight(&self, y: &Word) -> usize {
        let space = self.code.space();
        self.codewords.iter().map(|c| space.weight(&space.sub(y, c))).min().expect("0 ∈ C")
    }

    /// `CL(C)`: every word of minimal weight in its coset.
    pub fn coset_leaders(&self) -> WordSet {
        let space = self.code.space();
        self.words
            .iter()
            .filter(|y| space.weight(y) == self.coset_weight(y))
            .cloned()
            .collect()
    }

    /// Coset table built by enumerating each coset `y + C` explicitly.
    pub fn coset_table(&self, order: &WeightCompatibleOrder) -> Result<SyndromeTable> {
        let space = self.code.space();
        let mut table = SyndromeTable::new(self.code)?;
        for y in &self.words {
            let idx = self.code.syndrome_index(y);
            if table.get(idx).is_some() {
                continue;
            }
            let coset: Vec<Word> = self.codewords.iter().map(|c| space.add(y, c)).collect();
            let weight = coset.iter().map(|x| space.weight(x)).min().unwrap();
            let mut leaders: Vec<Word> = coset.iter().filter(|x| space.weight(x) == weight).cloned().collect();
            leaders.sort_by(|a, b| order.compare(a, b));
            let canonical_leader = order.min(&coset).unwrap().clone();
            *table.slot(idx) = Some(CosetRecord {
                syndrome: self.code.syndrome_at(idx),
                weight,
                canonical_leader,
                leaders,
            });
        }
        Ok(table)
    }

    /// `L(C)` evaluated literally: all nonzero codewords `n₁ + e_ij − n₂` with
    /// `n₁ + e_ij` in standard form, `n₂ ∈ CL(C)` and both `n₁` and
    /// `n₁ + e_ij` within distance 1 of `CL(C)`.
    pub fn leader_codewords(&self) -> WordSet {
        let space = self.code.space();
        let leaders = self.coset_leaders();
        let near: WordSet = self
            .words
            .iter()
            .filter(|y| self.distance_to_set(y, &leaders).is_some_and(|d| d <= 1))
            .cloned()
            .collect();
        let codewords: WordSet = self.codewords.iter().cloned().collect();
        let positions: Vec<Position> = space.positions().collect();
        let mut out = WordSet::new();
        for n1 in near.iter() {
            for &pos in &positions {
                let Some(w) = space.add_generator(n1, pos) else { continue };
                if !near.contains(&w) {
                    continue;
                }
                for n2 in &leaders {
                    let c = space.sub(&w, n2);
                    if !c.is_zero() && codewords.contains(&c) {
                        out.insert(c);
                    }
                }
            }
        }
        out
    }
}
