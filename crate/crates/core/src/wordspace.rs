//! The additive monoid (F_q^n, +) over the canonical generators e_ij = β^{j−1}e_i.
//!
//! A word is a tuple of `n·m` nonnegative coefficients, coefficient of e_ij at
//! flat index `i·m + j` (0-based). [`MonoidWord`] allows any coefficient;
//! [`Word`] is the standard form, every coefficient in `[0, p−1]`, and is in
//! bijection with F_q^n. Positions `(i, j)` are 0-based in the API and printed
//! 1-based.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::error::{Error, Result};
use crate::galois::{Field, Symbol};
use crate::Limits;

/// A standard-form word; doubles as a vector of F_q^n.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Box<[u8]>);

impl Word {
    /// Flat p-adic digits, coordinate-major.
    pub fn digits(&self) -> &[u8] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&d| d == 0)
    }

    pub(crate) fn from_digits(digits: Box<[u8]>) -> Self {
        Word(digits)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word{:?}", self.0)
    }
}

/// An arbitrary element of the monoid, coefficients not reduced mod p.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonoidWord(Vec<u32>);

impl MonoidWord {
    pub fn coeffs(&self) -> &[u32] {
        &self.0
    }
}

impl From<&Word> for MonoidWord {
    fn from(w: &Word) -> Self {
        MonoidWord(w.0.iter().map(|&d| d as u32).collect())
    }
}

/// Index of a canonical generator e_ij.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Position {
    pub coord: usize,
    pub digit: usize,
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.coord + 1, self.digit + 1)
    }
}

/// Generalized support: the positions with nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenSupport {
    m: usize,
    pairs: BTreeSet<Position>,
}

impl GenSupport {
    pub fn pairs(&self) -> &BTreeSet<Position> {
        &self.pairs
    }

    pub fn contains(&self, pos: Position) -> bool {
        self.pairs.contains(&pos)
    }

    /// `supp_gen(v)[i]`: the digit indices set in coordinate `i`.
    pub fn slice(&self, coord: usize) -> Vec<usize> {
        self.pairs
            .range(Position { coord, digit: 0 }..Position { coord, digit: self.m })
            .map(|p| p.digit)
            .collect()
    }

    pub fn is_disjoint(&self, other: &GenSupport) -> bool {
        self.pairs.is_disjoint(&other.pairs)
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// F_q^n together with its monoid structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordSpace {
    field: Field,
    n: usize,
}

impl WordSpace {
    pub fn new(field: Field, n: usize) -> Self {
        Self { field, n }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.field.m()
    }

    pub fn p(&self) -> u32 {
        self.field.p()
    }

    pub fn q(&self) -> usize {
        self.field.order()
    }

    /// Number of flat positions `n·m`.
    pub fn positions_len(&self) -> usize {
        self.n * self.m()
    }

    pub fn positions(&self) -> impl Iterator<Item = Position> + '_ {
        let m = self.m();
        (0..self.n).flat_map(move |coord| (0..m).map(move |digit| Position { coord, digit }))
    }

    fn flat(&self, pos: Position) -> usize {
        pos.coord * self.m() + pos.digit
    }

    /// `q^n`.
    pub fn size(&self) -> u128 {
        (self.q() as u128).saturating_pow(self.n as u32)
    }

    /// Fails unless all of F_q^n may be enumerated under `limits`.
    pub fn check_enumerable(&self, limits: &Limits) -> Result<()> {
        limits.check("q^n", self.size())
    }

    pub fn zero(&self) -> Word {
        Word(vec![0; self.positions_len()].into_boxed_slice())
    }

    /// Standard-form word from flat digits; every digit must be below p.
    pub fn word(&self, digits: &[u32]) -> Result<Word> {
        self.check_len(digits.len())?;
        if let Some(&d) = digits.iter().find(|&&d| d >= self.p()) {
            return Err(Error::Precondition(format!(
                "digit {d} is not in standard form for p = {}",
                self.p()
            )));
        }
        Ok(Word(digits.iter().map(|&d| d as u8).collect()))
    }

    pub fn monoid(&self, coeffs: &[u32]) -> Result<MonoidWord> {
        self.check_len(coeffs.len())?;
        Ok(MonoidWord(coeffs.to_vec()))
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len == self.positions_len() {
            Ok(())
        } else {
            Err(Error::Mismatch(format!(
                "word has {len} coefficients, space has n·m = {}",
                self.positions_len()
            )))
        }
    }

    pub fn is_standard_form(&self, w: &MonoidWord) -> bool {
        w.0.len() == self.positions_len() && w.0.iter().all(|&c| c < self.p())
    }

    /// Reduces every coefficient mod p.
    pub fn standard_form(&self, w: &MonoidWord) -> Word {
        let p = self.p();
        Word(w.0.iter().map(|&c| (c % p) as u8).collect())
    }

    /// Strict conversion: errors on non-standard input.
    pub fn expect_standard(&self, w: &MonoidWord) -> Result<Word> {
        self.check_len(w.0.len())?;
        if !self.is_standard_form(w) {
            return Err(Error::Precondition("word is not in standard form".into()));
        }
        Ok(self.standard_form(w))
    }

    /// Coefficient-wise integer sum, not reduced.
    pub fn oplus(&self, x: &MonoidWord, y: &MonoidWord) -> Result<MonoidWord> {
        self.check_len(x.0.len())?;
        self.check_len(y.0.len())?;
        Ok(MonoidWord(x.0.iter().zip(&y.0).map(|(a, b)| a + b).collect()))
    }

    pub fn gen_support(&self, w: &Word) -> GenSupport {
        let pairs = self
            .positions()
            .filter(|&pos| w.0[self.flat(pos)] != 0)
            .collect();
        GenSupport { m: self.m(), pairs }
    }

    pub fn try_gen_support(&self, w: &MonoidWord) -> Result<GenSupport> {
        Ok(self.gen_support(&self.expect_standard(w)?))
    }

    /// Whether coordinate `i` of `w` is nonzero, i.e. `supp_gen(w)[i] ≠ ∅`.
    pub fn coord_nonzero(&self, w: &Word, coord: usize) -> bool {
        let m = self.m();
        w.0[coord * m..(coord + 1) * m].iter().any(|&d| d != 0)
    }

    /// Hamming weight as a vector of F_q^n.
    pub fn weight(&self, w: &Word) -> usize {
        w.0.chunks(self.m()).filter(|c| c.iter().any(|&d| d != 0)).count()
    }

    pub fn try_weight(&self, w: &MonoidWord) -> Result<usize> {
        Ok(self.weight(&self.expect_standard(w)?))
    }

    pub fn distance(&self, x: &Word, y: &Word) -> usize {
        x.0.chunks(self.m())
            .zip(y.0.chunks(self.m()))
            .filter(|(a, b)| a != b)
            .count()
    }

    /// Vector sum in F_q^n (digit-wise mod p).
    pub fn add(&self, x: &Word, y: &Word) -> Word {
        let p = self.p() as u16;
        Word(x.0.iter().zip(y.0.iter()).map(|(&a, &b)| ((a as u16 + b as u16) % p) as u8).collect())
    }

    /// Vector difference `x − y` in F_q^n.
    pub fn sub(&self, x: &Word, y: &Word) -> Word {
        let p = self.p() as u16;
        Word(
            x.0.iter()
                .zip(y.0.iter())
                .map(|(&a, &b)| ((a as u16 + p - b as u16) % p) as u8)
                .collect(),
        )
    }

    pub fn neg(&self, x: &Word) -> Word {
        self.sub(&self.zero(), x)
    }

    pub fn scale(&self, a: Symbol, x: &Word) -> Word {
        let syms: Vec<Symbol> = self.symbols(x).iter().map(|&s| self.field.mul_sym(a, s)).collect();
        self.from_symbols(&syms)
    }

    /// Coordinates of `w` as field symbols.
    pub fn symbols(&self, w: &Word) -> Vec<Symbol> {
        (0..self.n).map(|i| self.symbol_at(w, i)).collect()
    }

    pub fn symbol_at(&self, w: &Word, coord: usize) -> Symbol {
        let m = self.m();
        let p = self.p();
        w.0[coord * m..(coord + 1) * m]
            .iter()
            .rev()
            .fold(0u32, |acc, &d| acc * p + d as u32) as Symbol
    }

    pub fn from_symbols(&self, syms: &[Symbol]) -> Word {
        debug_assert_eq!(syms.len(), self.n);
        let mut digits = Vec::with_capacity(self.positions_len());
        for &s in syms {
            digits.extend(self.field.coords_of(s).into_iter().map(|d| d as u8));
        }
        Word(digits.into_boxed_slice())
    }

    /// `w` with coordinate `coord` replaced by `symbol`.
    pub fn with_symbol(&self, w: &Word, coord: usize, symbol: Symbol) -> Word {
        let m = self.m();
        let mut digits = w.0.to_vec();
        for (j, d) in self.field.coords_of(symbol).into_iter().enumerate() {
            digits[coord * m + j] = d as u8;
        }
        Word(digits.into_boxed_slice())
    }

    pub fn coefficient(&self, w: &Word, pos: Position) -> u32 {
        w.0[self.flat(pos)] as u32
    }

    /// `v + e_ij` when it stays in standard form (coefficient at most p − 2).
    pub fn add_generator(&self, v: &Word, pos: Position) -> Option<Word> {
        let idx = self.flat(pos);
        if (v.0[idx] as u32) + 1 >= self.p() {
            return None;
        }
        let mut digits = v.0.clone();
        digits[idx] += 1;
        Some(Word(digits))
    }

    /// `w − e_ij` for `(i, j) ∈ supp_gen(w)`.
    pub fn remove_generator(&self, w: &Word, pos: Position) -> Option<Word> {
        let idx = self.flat(pos);
        if w.0[idx] == 0 {
            return None;
        }
        let mut digits = w.0.clone();
        digits[idx] -= 1;
        Some(Word(digits))
    }

    /// The relation ⊂: coefficient-wise ≤.
    pub fn subword(&self, x: &Word, y: &Word) -> bool {
        x.0.iter().zip(y.0.iter()).all(|(a, b)| a <= b)
    }

    /// The relation ⊂₁: `x ⊂ y` and `supp_gen(x) ∩ supp_gen(y − x) = ∅`.
    pub fn subword1(&self, x: &Word, y: &Word) -> bool {
        self.subword(x, y) && self.gen_support(x).is_disjoint(&self.gen_support(&self.sub(y, x)))
    }

    /// Every `x` with `x ⊂₁ y`, `y` included: restrictions of `y` to subsets
    /// of its generalized support.
    pub fn subwords1(&self, y: &Word) -> Vec<Word> {
        let support: Vec<usize> = (0..y.0.len()).filter(|&i| y.0[i] != 0).collect();
        (0..1usize << support.len())
            .map(|mask| {
                let mut digits = vec![0u8; y.0.len()];
                for (b, &i) in support.iter().enumerate() {
                    if mask >> b & 1 == 1 {
                        digits[i] = y.0[i];
                    }
                }
                Word(digits.into_boxed_slice())
            })
            .collect()
    }

    /// Every `x` with `x_i ∈ {0, y_i}` for all coordinates, `y` included.
    pub fn coordinate_restrictions(&self, y: &Word) -> Vec<Word> {
        let m = self.m();
        let support: Vec<usize> = (0..self.n).filter(|&i| self.coord_nonzero(y, i)).collect();
        (0..1usize << support.len())
            .map(|mask| {
                let mut digits = vec![0u8; y.0.len()];
                for (b, &i) in support.iter().enumerate() {
                    if mask >> b & 1 == 1 {
                        digits[i * m..(i + 1) * m].copy_from_slice(&y.0[i * m..(i + 1) * m]);
                    }
                }
                Word(digits.into_boxed_slice())
            })
            .collect()
    }

    /// Every `z` with `x ⊂₁ z`, `x` included: `x` with its zero digits filled
    /// arbitrarily.
    pub fn superwords1(&self, x: &Word) -> Vec<Word> {
        let free: Vec<usize> = (0..x.0.len()).filter(|&i| x.0[i] == 0).collect();
        let p = self.p() as usize;
        let count = p.pow(free.len() as u32);
        (0..count)
            .map(|mut k| {
                let mut digits = x.0.clone();
                for &i in &free {
                    digits[i] = (k % p) as u8;
                    k /= p;
                }
                Word(digits)
            })
            .collect()
    }

    /// Mixed-radix index of `w` in `0..q^n`; first position least significant.
    pub fn index(&self, w: &Word) -> usize {
        let p = self.p() as usize;
        w.0.iter().rev().fold(0usize, |acc, &d| acc * p + d as usize)
    }

    pub fn word_at(&self, mut index: usize) -> Word {
        let p = self.p() as usize;
        let mut digits = vec![0u8; self.positions_len()];
        for d in digits.iter_mut() {
            *d = (index % p) as u8;
            index /= p;
        }
        Word(digits.into_boxed_slice())
    }

    /// Every word of F_q^n in index order. Callers check the enumeration bound.
    pub fn words(&self) -> impl Iterator<Item = Word> + '_ {
        (0..self.size() as usize).map(move |i| self.word_at(i))
    }

    /// Parses the comma-digit notation: `m` digits per coordinate separated by
    /// commas, coordinates separated by whitespace, e.g. `"1,1 0,1"`.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if tokens.len() != self.n {
            return Err(Error::Parse {
                line: 0,
                message: format!("expected {} coordinates, got {}", self.n, tokens.len()),
            });
        }
        let mut digits = Vec::with_capacity(self.positions_len());
        for tok in tokens {
            let sym = parse_element(&self.field, tok).map_err(|message| Error::Parse { line: 0, message })?;
            digits.extend(self.field.coords_of(sym));
        }
        self.word(&digits)
    }

    pub fn format_word(&self, w: &Word) -> String {
        w.0.chunks(self.m())
            .map(|c| c.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(","))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Parses one field element in comma-digit notation.
pub(crate) fn parse_element(field: &Field, tok: &str) -> std::result::Result<Symbol, String> {
    let digits: Vec<u32> = tok
        .split(',')
        .map(|d| d.trim().parse::<u32>().map_err(|_| format!("bad digit in `{tok}`")))
        .collect::<std::result::Result<_, _>>()?;
    if digits.len() != field.m() {
        return Err(format!("`{tok}` has {} digits, expected {}", digits.len(), field.m()));
    }
    field.element(&digits).map(|e| e.symbol()).map_err(|e| format!("`{tok}`: {e}"))
}

/// An admissible order ≺₁ on the monoid: total, 0 minimal, compatible with ⊕.
pub trait AdmissibleOrder: Send + Sync {
    fn name(&self) -> &str;
    fn compare(&self, a: &[u32], b: &[u32]) -> Ordering;
}

/// Tie-breaker for the weight compatible order.
#[derive(Clone, Default)]
pub enum TieBreak {
    /// Lexicographic on the flat tuple, position (1,1) first, smaller coefficient first.
    #[default]
    Lex,
    /// Lexicographic read from position (n,m) backwards.
    Colex,
    Custom(Arc<dyn AdmissibleOrder>),
}

impl fmt::Debug for TieBreak {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl TieBreak {
    pub fn from_name(name: &str) -> Result<Self> {
        match name {
            "lex" => Ok(TieBreak::Lex),
            "colex" => Ok(TieBreak::Colex),
            other => Err(Error::Precondition(format!("unknown order `{other}`"))),
        }
    }

    pub fn name(&self) -> &str {
        match self {
            TieBreak::Lex => "lex",
            TieBreak::Colex => "colex",
            TieBreak::Custom(o) => o.name(),
        }
    }

    fn compare_u8(&self, a: &[u8], b: &[u8]) -> Ordering {
        match self {
            TieBreak::Lex => a.cmp(b),
            TieBreak::Colex => a.iter().rev().cmp(b.iter().rev()),
            TieBreak::Custom(o) => {
                let a: Vec<u32> = a.iter().map(|&d| d as u32).collect();
                let b: Vec<u32> = b.iter().map(|&d| d as u32).collect();
                o.compare(&a, &b)
            }
        }
    }

    /// ≺₁ on arbitrary monoid words.
    pub fn compare(&self, a: &MonoidWord, b: &MonoidWord) -> Ordering {
        match self {
            TieBreak::Lex => a.0.cmp(&b.0),
            TieBreak::Colex => a.0.iter().rev().cmp(b.0.iter().rev()),
            TieBreak::Custom(o) => o.compare(&a.0, &b.0),
        }
    }
}

/// Weight compatible order ≺: Hamming weight first, ties broken by ≺₁.
#[derive(Debug, Clone)]
pub struct WeightCompatibleOrder {
    m: usize,
    positions: usize,
    tie: TieBreak,
}

impl WeightCompatibleOrder {
    /// Builds the order for `space`, validating the tie-breaker's admissibility
    /// axioms on a bounded sample of monoid words.
    pub fn new(space: &WordSpace, tie: TieBreak) -> Result<Self> {
        check_admissible(space, &tie)?;
        Ok(Self { m: space.m(), positions: space.positions_len(), tie })
    }

    pub fn lex(space: &WordSpace) -> Self {
        Self { m: space.m(), positions: space.positions_len(), tie: TieBreak::Lex }
    }

    pub fn tie_break(&self) -> &TieBreak {
        &self.tie
    }

    pub fn name(&self) -> &str {
        self.tie.name()
    }

    /// Whether this order was built for `space`.
    pub fn fits(&self, space: &WordSpace) -> bool {
        self.m == space.m() && self.positions == space.positions_len()
    }

    fn weight(&self, w: &Word) -> usize {
        w.0.chunks(self.m).filter(|c| c.iter().any(|&d| d != 0)).count()
    }

    pub fn compare(&self, x: &Word, y: &Word) -> Ordering {
        self.weight(x)
            .cmp(&self.weight(y))
            .then_with(|| self.tie.compare_u8(&x.0, &y.0))
    }

    pub fn less(&self, x: &Word, y: &Word) -> bool {
        self.compare(x, y) == Ordering::Less
    }

    pub fn min<'a>(&self, words: impl IntoIterator<Item = &'a Word>) -> Option<&'a Word> {
        words.into_iter().min_by(|a, b| self.compare(a, b))
    }
}

const ADMISSIBILITY_SAMPLE: usize = 48;

/// Samples the two admissibility axioms (plus totality) with coefficients in
/// `0..=p`, so non-standard monoid words are exercised too.
fn check_admissible(space: &WordSpace, tie: &TieBreak) -> Result<()> {
    let len = space.positions_len();
    let bound = space.p() + 1;
    let exhaustive = (bound as u128).saturating_pow(len as u32);
    let sample: Vec<MonoidWord> = if exhaustive <= ADMISSIBILITY_SAMPLE as u128 {
        (0..exhaustive as u64)
            .map(|mut c| {
                MonoidWord(
                    (0..len)
                        .map(|_| {
                            let d = (c % bound as u64) as u32;
                            c /= bound as u64;
                            d
                        })
                        .collect(),
                )
            })
            .collect()
    } else {
        let mut rng = StdRng::seed_from_u64(0x5eed_0001);
        (0..ADMISSIBILITY_SAMPLE)
            .map(|_| MonoidWord((0..len).map(|_| rng.gen_range(0..bound)).collect()))
            .collect()
    };
    let zero = MonoidWord(vec![0; len]);
    let fail = |what: String| Err(Error::Precondition(format!("order `{}` is not admissible: {what}", tie.name())));
    for x in &sample {
        if *x != zero && tie.compare(&zero, x) != Ordering::Less {
            return fail(format!("0 is not below {:?}", x.0));
        }
        for y in &sample {
            let xy = tie.compare(x, y);
            if xy != tie.compare(y, x).reverse() || (xy == Ordering::Equal) != (x == y) {
                return fail(format!("not a total order on {:?}, {:?}", x.0, y.0));
            }
            if xy != Ordering::Less {
                continue;
            }
            for z in &sample {
                let xz = space.oplus(x, z)?;
                let yz = space.oplus(y, z)?;
                if tie.compare(&xz, &yz) != Ordering::Less {
                    return fail(format!("not compatible with ⊕ at {:?} < {:?}, z = {:?}", x.0, y.0, z.0));
                }
            }
        }
    }
    Ok(())
}

/// Exhaustively checks that `a ⊂ b`, `a ≠ b` implies `a ≺ b` over all
/// standard-form pairs of `space`.
pub fn check_subword_implies_less(order: &WeightCompatibleOrder, space: &WordSpace, limits: &Limits) -> Result<bool> {
    space.check_enumerable(limits)?;
    for b in space.words() {
        // all a ⊂ b: mixed radix over (b_ij + 1)
        let radices: Vec<u32> = b.0.iter().map(|&d| d as u32 + 1).collect();
        let total: u64 = radices.iter().map(|&r| r as u64).product();
        for mut c in 0..total {
            let digits: Vec<u8> = radices
                .iter()
                .map(|&r| {
                    let d = (c % r as u64) as u8;
                    c /= r as u64;
                    d
                })
                .collect();
            let a = Word(digits.into_boxed_slice());
            if a != b && !order.less(&a, &b) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::FieldParams;

    fn space(p: u32, m: usize, n: usize) -> WordSpace {
        WordSpace::new(Field::new(FieldParams::with_default_modulus(p, m).unwrap()), n)
    }

    fn w(s: &WordSpace, digits: &[u32]) -> Word {
        s.word(digits).unwrap()
    }

    #[test]
    fn standard_form_examples() {
        let s = space(3, 1, 2);
        assert_eq!(s.standard_form(&s.monoid(&[3, 1]).unwrap()), w(&s, &[0, 1]));
        assert_eq!(s.standard_form(&s.monoid(&[4, 2]).unwrap()), w(&s, &[1, 2]));
        let b = space(2, 1, 3);
        let x = b.monoid(&[1, 1, 1]).unwrap();
        assert!(b.is_standard_form(&x));
        assert_eq!(b.standard_form(&x), w(&b, &[1, 1, 1]));
    }

    #[test]
    fn oplus_examples() {
        let s = space(3, 1, 2);
        let x = s.monoid(&[2, 0]).unwrap();
        let y = s.monoid(&[2, 1]).unwrap();
        assert_eq!(s.oplus(&x, &y).unwrap().coeffs(), &[4, 1]);
        assert_eq!(s.oplus(&x, &s.monoid(&[0, 0]).unwrap()).unwrap(), x);
        let b = space(2, 1, 3);
        let r = b.oplus(&b.monoid(&[1, 0, 1]).unwrap(), &b.monoid(&[1, 1, 0]).unwrap()).unwrap();
        assert_eq!(r.coeffs(), &[2, 1, 1]);
        assert!(matches!(s.oplus(&x, &b.monoid(&[1, 0, 1]).unwrap()), Err(Error::Mismatch(_))));
    }

    #[test]
    fn gen_support_and_weight() {
        let gf4 = space(2, 2, 2);
        let v = gf4.parse_word("1,1 0,1").unwrap();
        let supp = gf4.gen_support(&v);
        let pairs: Vec<String> = supp.pairs().iter().map(|p| p.to_string()).collect();
        assert_eq!(pairs, ["(1,1)", "(1,2)", "(2,2)"]);
        assert_eq!(supp.slice(0), vec![0, 1]);
        assert_eq!(gf4.weight(&v), 2);

        let gf9 = space(3, 2, 3);
        let v = gf9.parse_word("1,2 0,0 0,1").unwrap();
        let pairs: Vec<String> = gf9.gen_support(&v).pairs().iter().map(|p| p.to_string()).collect();
        assert_eq!(pairs, ["(1,1)", "(1,2)", "(3,2)"]);
        assert_eq!(gf9.weight(&v), 2);

        assert!(gf9.gen_support(&gf9.zero()).is_empty());
        assert_eq!(gf9.weight(&gf9.zero()), 0);

        let bad = gf9.monoid(&[3, 0, 0, 0, 0, 0]).unwrap();
        assert!(matches!(gf9.try_gen_support(&bad), Err(Error::Precondition(_))));
        assert!(matches!(gf9.try_weight(&bad), Err(Error::Precondition(_))));
    }

    #[test]
    fn subword1_enumeration_matches_relation() {
        for (p, m, n) in [(3, 1, 3), (2, 2, 2)] {
            let s = space(p, m, n);
            let all: Vec<Word> = s.words().collect();
            for y in &all {
                let mut subs = s.subwords1(y);
                subs.sort();
                let mut expected: Vec<Word> = all.iter().filter(|x| s.subword1(x, y)).cloned().collect();
                expected.sort();
                assert_eq!(subs, expected);
                let restr = s.coordinate_restrictions(y);
                assert_eq!(restr.len(), 1 << s.weight(y));
                assert!(restr.iter().all(|x| s.subword1(x, y)));
                let mut sups = s.superwords1(y);
                sups.sort();
                let mut expected: Vec<Word> = all.iter().filter(|z| s.subword1(y, z)).cloned().collect();
                expected.sort();
                assert_eq!(sups, expected);
            }
        }
    }

    #[test]
    fn subword_relations() {
        let s = space(3, 1, 2);
        assert!(s.subword(&w(&s, &[1, 0]), &w(&s, &[1, 2])));
        assert!(!s.subword(&w(&s, &[2, 0]), &w(&s, &[1, 2])));
        assert!(s.subword(&s.zero(), &w(&s, &[2, 2])));
        assert!(s.subword1(&w(&s, &[1, 0]), &w(&s, &[1, 1])));
        assert!(!s.subword1(&w(&s, &[1, 0]), &w(&s, &[2, 0])));
        let y = w(&s, &[2, 1]);
        assert!(s.subword1(&y, &y));
    }

    #[test]
    fn compare_examples() {
        let s = space(3, 1, 2);
        let ord = WeightCompatibleOrder::new(&s, TieBreak::Lex).unwrap();
        assert_eq!(ord.compare(&w(&s, &[2, 0]), &w(&s, &[1, 1])), Ordering::Less);
        assert_eq!(ord.compare(&w(&s, &[0, 2]), &w(&s, &[1, 0])), Ordering::Less);
        let x = w(&s, &[1, 2]);
        assert_eq!(ord.compare(&x, &x), Ordering::Equal);
        let colex = WeightCompatibleOrder::new(&s, TieBreak::Colex).unwrap();
        assert_eq!(colex.compare(&w(&s, &[0, 2]), &w(&s, &[1, 0])), Ordering::Greater);
    }

    #[test]
    fn subword_implies_less_exhaustive() {
        let lim = Limits::default();
        for (p, m, n) in [(2, 1, 3), (3, 1, 2), (2, 2, 2), (3, 2, 2), (5, 1, 2)] {
            let s = space(p, m, n);
            for tie in [TieBreak::Lex, TieBreak::Colex] {
                let ord = WeightCompatibleOrder::new(&s, tie).unwrap();
                assert!(check_subword_implies_less(&ord, &s, &lim).unwrap());
            }
        }
    }

    struct Reversed;
    impl AdmissibleOrder for Reversed {
        fn name(&self) -> &str {
            "reversed"
        }
        fn compare(&self, a: &[u32], b: &[u32]) -> Ordering {
            b.cmp(a)
        }
    }

    #[test]
    fn inadmissible_custom_order_rejected() {
        let s = space(3, 1, 2);
        let err = WeightCompatibleOrder::new(&s, TieBreak::Custom(Arc::new(Reversed))).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));
    }

    #[test]
    fn compare_is_total_order_exhaustive() {
        let s = space(3, 1, 3);
        for tie in [TieBreak::Lex, TieBreak::Colex] {
            let ord = WeightCompatibleOrder::new(&s, tie).unwrap();
            let mut all: Vec<Word> = s.words().collect();
            all.sort_by(|a, b| ord.compare(a, b));
            assert_eq!(all[0], s.zero());
            for pair in all.windows(2) {
                assert_eq!(ord.compare(&pair[0], &pair[1]), Ordering::Less);
                assert_eq!(ord.compare(&pair[1], &pair[0]), Ordering::Greater);
            }
        }
    }

    #[test]
    fn index_roundtrip_and_literals() {
        let s = space(2, 2, 3);
        for (i, word) in s.words().enumerate() {
            assert_eq!(s.index(&word), i);
            assert_eq!(s.parse_word(&s.format_word(&word)).unwrap(), word);
        }
        assert!(s.parse_word("1,0 0,1").is_err());
        assert!(s.parse_word("1,0 0,1 2,0").is_err());
        assert!(s.parse_word("1 0 1").is_err());
    }

    #[test]
    fn generator_steps() {
        let s = space(3, 1, 2);
        let v = w(&s, &[1, 2]);
        let p0 = Position { coord: 0, digit: 0 };
        let p1 = Position { coord: 1, digit: 0 };
        assert_eq!(s.add_generator(&v, p0), Some(w(&s, &[2, 2])));
        assert_eq!(s.add_generator(&v, p1), None);
        assert_eq!(s.remove_generator(&v, p1), Some(w(&s, &[1, 1])));
        assert_eq!(s.remove_generator(&s.zero(), p0), None);
    }
}
