//! Linear codes over GF(q), syndromes, and the per-coset record table.

use std::fmt;
use std::path::Path;

use crate::error::{Error, Result};
use crate::galois::{Field, FieldParams, Symbol};
use crate::wordspace::{parse_element, MonoidWord, Word, WordSpace};
use crate::Limits;

/// An `[n, k]` linear code given by a generator matrix. The parity-check
/// matrix is derived by Gaussian elimination.
#[derive(Clone)]
pub struct LinearCode {
    space: WordSpace,
    generator: Vec<Word>,
    parity_check: Vec<Vec<Symbol>>,
    limits: Limits,
}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}] code over {:?}", self.n(), self.k(), self.space.field())
    }
}

impl LinearCode {
    /// Builds the code spanned by `generator`, which must have full row rank.
    pub fn new(space: WordSpace, generator: Vec<Word>) -> Result<Self> {
        for row in &generator {
            if row.digits().len() != space.positions_len() {
                return Err(Error::Mismatch("generator row has the wrong length".into()));
            }
        }
        let k = generator.len();
        if k > space.n() {
            return Err(Error::RankDeficient { rank: space.n(), k });
        }
        let rows: Vec<Vec<Symbol>> = generator.iter().map(|r| space.symbols(r)).collect();
        let parity_check = parity_check_from(space.field(), rows, space.n())?;
        Ok(Self { space, generator, parity_check, limits: Limits::default() })
    }

    pub fn with_limits(mut self, limits: Limits) -> Self {
        self.limits = limits;
        self
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn space(&self) -> &WordSpace {
        &self.space
    }

    pub fn n(&self) -> usize {
        self.space.n()
    }

    pub fn k(&self) -> usize {
        self.generator.len()
    }

    pub fn generator(&self) -> &[Word] {
        &self.generator
    }

    pub fn parity_check(&self) -> &[Vec<Symbol>] {
        &self.parity_check
    }

    /// `H·wᵀ` over GF(q).
    pub fn syndrome(&self, w: &Word) -> Vec<Symbol> {
        let field = self.space.field();
        let syms = self.space.symbols(w);
        self.parity_check
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&syms)
                    .fold(0, |acc, (&h, &s)| field.add_sym(acc, field.mul_sym(h, s)))
            })
            .collect()
    }

    pub fn try_syndrome(&self, w: &MonoidWord) -> Result<Vec<Symbol>> {
        Ok(self.syndrome(&self.space.expect_standard(w)?))
    }

    /// Number of cosets, `q^{n−k}`.
    pub fn syndrome_count(&self) -> u128 {
        (self.space.q() as u128).saturating_pow(self.parity_check.len() as u32)
    }

    /// Position of a syndrome in lexicographic order.
    pub fn syndrome_index_of(&self, syndrome: &[Symbol]) -> usize {
        let q = self.space.q();
        syndrome.iter().fold(0usize, |acc, &s| acc * q + s as usize)
    }

    pub fn syndrome_index(&self, w: &Word) -> usize {
        self.syndrome_index_of(&self.syndrome(w))
    }

    pub fn syndrome_at(&self, mut index: usize) -> Vec<Symbol> {
        let q = self.space.q();
        let mut out = vec![0; self.parity_check.len()];
        for s in out.iter_mut().rev() {
            *s = (index % q) as Symbol;
            index /= q;
        }
        out
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.syndrome(w).iter().all(|&s| s == 0)
    }

    /// All `q^k` codewords: message `(u₁, …, u_k)` in index order, first
    /// message symbol least significant, mapped to `Σ u_i·g_i`.
    pub fn codewords(&self) -> Result<Vec<Word>> {
        let q = self.space.q();
        let k = self.k();
        self.limits.check("q^k", (q as u128).saturating_pow(k as u32))?;
        let total = q.pow(k as u32);
        let mut out = Vec::with_capacity(total);
        for mut index in 0..total {
            let mut c = self.space.zero();
            for row in &self.generator {
                let u = (index % q) as Symbol;
                index /= q;
                c = self.space.add(&c, &self.space.scale(u, row));
            }
            out.push(c);
        }
        Ok(out)
    }

    /// Minimum distance `d(C)`.
    pub fn min_distance(&self) -> Result<usize> {
        if self.k() == 0 {
            return Err(Error::Precondition("the zero code has no minimum distance".into()));
        }
        Ok(self
            .codewords()?
            .iter()
            .filter(|c| !c.is_zero())
            .map(|c| self.space.weight(c))
            .min()
            .expect("k ≥ 1"))
    }

    /// Error-correcting capacity `t = ⌊(d − 1)/2⌋`.
    pub fn error_capacity(&self) -> Result<usize> {
        Ok((self.min_distance()? - 1) / 2)
    }

    /// Parses the line-oriented fixture format:
    ///
    /// ```text
    /// p 3
    /// m 2
    /// poly 1 0 1      (only when m > 1)
    /// n 3
    /// k 1
    /// G
    /// 1,0 0,1 1,1
    /// ```
    ///
    /// Blank lines and lines starting with `#` are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let mut last_line = 0;
        let mut next = |what: &str| -> Result<(usize, &str)> {
            let got = lines.next();
            match got {
                Some((no, l)) => {
                    last_line = no;
                    Ok((no, l))
                }
                None => Err(Error::Parse { line: last_line + 1, message: format!("missing {what}") }),
            }
        };
        let keyed = |(no, line): (usize, &str), key: &str| -> Result<Vec<u32>> {
            let mut toks = line.split_whitespace();
            if toks.next() != Some(key) {
                return Err(Error::Parse { line: no, message: format!("expected `{key}`") });
            }
            let vals: Vec<u32> = toks
                .map(|t| t.parse().map_err(|_| Error::Parse { line: no, message: format!("bad number `{t}`") }))
                .collect::<Result<_>>()?;
            if vals.is_empty() {
                return Err(Error::Parse { line: no, message: format!("`{key}` needs a value") });
            }
            Ok(vals)
        };
        let single = |vals: Vec<u32>, no: usize| -> Result<u32> {
            if vals.len() == 1 {
                Ok(vals[0])
            } else {
                Err(Error::Parse { line: no, message: "expected a single value".into() })
            }
        };

        let l = next("`p` line")?;
        let p = single(keyed(l, "p")?, l.0)?;
        FieldParams::new(p, 1, &[]).map_err(|e| Error::Parse { line: l.0, message: e.to_string() })?;
        let l = next("`m` line")?;
        let m = single(keyed(l, "m")?, l.0)? as usize;
        let (params, line) = if m > 1 {
            let l = next("`poly` line")?;
            (FieldParams::new(p, m, &keyed(l, "poly")?), l.0)
        } else {
            (FieldParams::new(p, m, &[]), l.0)
        };
        let params = params.map_err(|e| Error::Parse { line, message: e.to_string() })?;
        let field = Field::new(params);
        let l = next("`n` line")?;
        let n = single(keyed(l, "n")?, l.0)? as usize;
        let l = next("`k` line")?;
        let k = single(keyed(l, "k")?, l.0)? as usize;
        if k > n {
            return Err(Error::Parse { line: l.0, message: format!("k = {k} exceeds n = {n}") });
        }
        let (no, g) = next("`G` line")?;
        if g != "G" {
            return Err(Error::Parse { line: no, message: "expected `G`".into() });
        }
        let space = WordSpace::new(field.clone(), n);
        let mut rows = Vec::with_capacity(k);
        for r in 0..k {
            let (no, line) = next(&format!("generator row {}", r + 1))?;
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.len() != n {
                return Err(Error::Parse { line: no, message: format!("expected {n} elements, got {}", toks.len()) });
            }
            let syms: Vec<Symbol> = toks
                .iter()
                .map(|t| parse_element(&field, t).map_err(|message| Error::Parse { line: no, message }))
                .collect::<Result<_>>()?;
            rows.push(space.from_symbols(&syms));
        }
        if let Ok((no, _)) = next("") {
            return Err(Error::Parse { line: no, message: "trailing content after generator matrix".into() });
        }
        LinearCode::new(space, rows)
    }

    pub fn from_file(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse { line: 0, message: format!("{}: {e}", path.display()) })?;
        Self::parse(&text)
    }
}

/// Reduces the generator to reduced row echelon form and returns
/// `H = [−Aᵀ | I]` placed back in the original column order.
fn parity_check_from(field: &Field, mut rows: Vec<Vec<Symbol>>, n: usize) -> Result<Vec<Vec<Symbol>>> {
    let k = rows.len();
    let mut pivots = Vec::with_capacity(k);
    let mut rank = 0;
    for col in 0..n {
        if rank == k {
            break;
        }
        let Some(pivot_row) = (rank..k).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let inv = field.inv_sym(rows[rank][col])?;
        for x in rows[rank].iter_mut() {
            *x = field.mul_sym(*x, inv);
        }
        for r in 0..k {
            if r != rank && rows[r][col] != 0 {
                let factor = rows[r][col];
                for c in 0..n {
                    let t = field.mul_sym(factor, rows[rank][c]);
                    rows[r][c] = field.sub_sym(rows[r][c], t);
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    if rank < k {
        return Err(Error::RankDeficient { rank, k });
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    Ok(free
        .iter()
        .map(|&fc| {
            let mut h = vec![0; n];
            h[fc] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                h[pc] = field.neg_sym(rows[r][fc]);
            }
            // leading nonzero entry scaled to 1
            let lead = *h.iter().find(|&&x| x != 0).expect("row has a unit entry");
            let inv = field.inv_sym(lead).expect("nonzero");
            h.iter().map(|&x| field.mul_sym(x, inv)).collect()
        })
        .collect())
}

/// Coset weight, canonical leader and full leader set of one coset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetRecord {
    pub syndrome: Vec<Symbol>,
    /// `w_H(y + C)`.
    pub weight: usize,
    /// The ≺-minimum of the coset.
    pub canonical_leader: Word,
    /// Every word of minimal weight in the coset.
    pub leaders: Vec<Word>,
}

/// Map from syndrome to [`CosetRecord`], indexed by lexicographic syndrome index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyndromeTable {
    records: Vec<Option<CosetRecord>>,
}

impl SyndromeTable {
    pub fn new(code: &LinearCode) -> Result<Self> {
        code.limits.check("q^(n-k)", code.syndrome_count())?;
        Ok(Self { records: vec![None; code.syndrome_count() as usize] })
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn is_complete(&self) -> bool {
        self.records.iter().all(Option::is_some)
    }

    pub fn get(&self, index: usize) -> Option<&CosetRecord> {
        self.records[index].as_ref()
    }

    pub(crate) fn slot(&mut self, index: usize) -> &mut Option<CosetRecord> {
        &mut self.records[index]
    }

    /// Record of the coset of `w`.
    pub fn record_of(&self, code: &LinearCode, w: &Word) -> Option<&CosetRecord> {
        self.get(code.syndrome_index(w))
    }

    /// Records in lexicographic syndrome order.
    pub fn records(&self) -> impl Iterator<Item = &CosetRecord> {
        self.records.iter().flatten()
    }

    fn require_complete(&self) -> Result<()> {
        if self.is_complete() {
            Ok(())
        } else {
            Err(Error::Precondition("syndrome table is incomplete".into()))
        }
    }

    /// `w_H(w + C)`.
    pub fn coset_weight(&self, code: &LinearCode, w: &Word) -> Result<usize> {
        self.record_of(code, w)
            .map(|r| r.weight)
            .ok_or_else(|| Error::Precondition("coset missing from syndrome table".into()))
    }

    /// Whether `w` has minimal weight in its coset.
    pub fn is_leader(&self, code: &LinearCode, w: &Word) -> Result<bool> {
        Ok(code.space().weight(w) == self.coset_weight(code, w)?)
    }

    /// `ρ(C)`, the largest coset weight.
    pub fn covering_radius(&self) -> Result<usize> {
        self.require_complete()?;
        Ok(self.records().map(|r| r.weight).max().unwrap_or(0))
    }
}
