//! Exact arithmetic in GF(p^m), represented as F_p[β]/(f).
//!
//! An element is stored by its `m` p-adic coordinates `(a₁, …, a_m)`, meaning
//! `a₁ + a₂β + … + a_mβ^{m−1}`. Internally every element also has a *symbol*,
//! the integer `a₁ + a₂p + … + a_m p^{m−1}`, which indexes the precomputed
//! addition and multiplication tables of a [`Field`].

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::report::Report;

/// Largest supported field order.
pub const MAX_ORDER: u32 = 256;

/// Raw table index of a field element.
pub type Symbol = u8;

/// The defining data of GF(p^m).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldParams {
    p: u32,
    m: usize,
    /// Ascending coefficients of the monic irreducible modulus, length `m + 1`.
    /// Empty for prime fields.
    modulus: Vec<u32>,
}

impl FieldParams {
    /// Validates `p`, `m` and the modulus polynomial `f` (ascending degree).
    ///
    /// For `m = 1` the polynomial is ignored.
    pub fn new(p: u32, m: usize, modulus: &[u32]) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::FieldParams(format!("{p} is not prime")));
        }
        if m == 0 {
            return Err(Error::FieldParams("extension degree must be at least 1".into()));
        }
        let order = (p as u128).checked_pow(m as u32).unwrap_or(u128::MAX);
        if order > MAX_ORDER as u128 {
            return Err(Error::FieldParams(format!(
                "field order {p}^{m} exceeds {MAX_ORDER}"
            )));
        }
        if m == 1 {
            return Ok(Self { p, m, modulus: Vec::new() });
        }
        if modulus.len() != m + 1 {
            return Err(Error::FieldParams(format!(
                "modulus must have {} coefficients, got {}",
                m + 1,
                modulus.len()
            )));
        }
        if let Some(&c) = modulus.iter().find(|&&c| c >= p) {
            return Err(Error::FieldParams(format!("coefficient {c} not reduced mod {p}")));
        }
        if modulus[m] != 1 {
            return Err(Error::FieldParams("modulus is not monic".into()));
        }
        if !is_irreducible(p, modulus) {
            return Err(Error::FieldParams(format!(
                "modulus {modulus:?} is reducible over F_{p}"
            )));
        }
        Ok(Self { p, m, modulus: modulus.to_vec() })
    }

    /// Default modulus for `(p, m)`: β²+β+1 for GF(4), β²+1 for GF(9), otherwise
    /// the first monic irreducible found by enumeration.
    pub fn with_default_modulus(p: u32, m: usize) -> Result<Self> {
        match (p, m) {
            (_, 1) => Self::new(p, 1, &[]),
            (2, 2) => Self::new(2, 2, &[1, 1, 1]),
            (3, 2) => Self::new(3, 2, &[1, 0, 1]),
            _ => {
                if !is_prime(p) {
                    return Err(Error::FieldParams(format!("{p} is not prime")));
                }
                let count = (p as u64).checked_pow(m as u32).unwrap_or(u64::MAX);
                if count > MAX_ORDER as u64 {
                    return Err(Error::FieldParams(format!(
                        "field order {p}^{m} exceeds {MAX_ORDER}"
                    )));
                }
                for code in 0..count {
                    let mut f = digits_of(code, p, m);
                    f.push(1);
                    if is_irreducible(p, &f) {
                        return Self::new(p, m, &f);
                    }
                }
                Err(Error::FieldParams(format!("no irreducible of degree {m} over F_{p}")))
            }
        }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn order(&self) -> u32 {
        self.p.pow(self.m as u32)
    }
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn digits_of(mut value: u64, p: u32, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push((value % p as u64) as u32);
        value /= p as u64;
    }
    out
}

/// Remainder of `a` modulo the monic polynomial `b` over F_p (ascending coefficients).
fn poly_rem(p: u32, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        if lead != 0 {
            for (i, &c) in b.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - (lead * c) % p) % p;
            }
        }
        r.pop();
    }
    r
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
fn is_irreducible(p: u32, f: &[u32]) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for code in 0..count {
            let mut g = digits_of(code, p, d);
            g.push(1);
            if poly_rem(p, f, &g).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

#[derive(Debug)]
struct Tables {
    params: FieldParams,
    q: usize,
    add: Vec<Symbol>,
    mul: Vec<Symbol>,
    neg: Vec<Symbol>,
    inv: Vec<Symbol>,
}

/// A finite field with precomputed operation tables. Cheap to clone.
#[derive(Clone)]
pub struct Field(Arc<Tables>);

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.p(), self.m())
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.params == other.0.params
    }
}

impl Eq for Field {}

impl Field {
    pub fn new(params: FieldParams) -> Self {
        let q = params.order() as usize;
        let p = params.p;
        let m = params.m;
        let coords: Vec<Vec<u32>> = (0..q as u64).map(|s| digits_of(s, p, m)).collect();
        let encode = |d: &[u32]| d.iter().rev().fold(0u32, |acc, &c| acc * p + c) as Symbol;

        let mut add = vec![0; q * q];
        let mut mul = vec![0; q * q];
        for a in 0..q {
            for b in 0..q {
                let sum: Vec<u32> = coords[a]
                    .iter()
                    .zip(&coords[b])
                    .map(|(&x, &y)| (x + y) % p)
                    .collect();
                add[a * q + b] = encode(&sum);

                let mut prod = vec![0u32; 2 * m - 1];
                for (i, &x) in coords[a].iter().enumerate() {
                    for (j, &y) in coords[b].iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                let reduced = if m == 1 { prod } else { poly_rem(p, &prod, &params.modulus) };
                mul[a * q + b] = encode(&reduced);
            }
        }
        let neg = (0..q)
            .map(|a| (0..q).find(|&b| add[a * q + b] == 0).unwrap() as Symbol)
            .collect();
        let inv = (0..q)
            .map(|a| {
                if a == 0 {
                    0
                } else {
                    (1..q).find(|&b| mul[a * q + b] == 1).unwrap() as Symbol
                }
            })
            .collect();
        Field(Arc::new(Tables { params, q, add, mul, neg, inv }))
    }

    pub fn params(&self) -> &FieldParams {
        &self.0.params
    }

    pub fn p(&self) -> u32 {
        self.0.params.p
    }

    pub fn m(&self) -> usize {
        self.0.params.m
    }

    pub fn order(&self) -> usize {
        self.0.q
    }

    pub fn zero(&self) -> FieldElement {
        self.from_symbol(0)
    }

    pub fn one(&self) -> FieldElement {
        self.from_symbol(1)
    }

    /// All elements in symbol order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.order()).map(|s| self.from_symbol(s as Symbol))
    }

    /// Builds an element from its p-adic coordinates `(a₁, …, a_m)`.
    pub fn element(&self, coords: &[u32]) -> Result<FieldElement> {
        if coords.len() != self.m() {
            return Err(Error::Mismatch(format!(
                "expected {} coordinates, got {}",
                self.m(),
                coords.len()
            )));
        }
        if let Some(&c) = coords.iter().find(|&&c| c >= self.p()) {
            return Err(Error::Precondition(format!(
                "coordinate {c} outside [0, {}]",
                self.p() - 1
            )));
        }
        Ok(self.from_symbol(self.symbol_of(coords)))
    }

    pub fn from_symbol(&self, symbol: Symbol) -> FieldElement {
        assert!((symbol as usize) < self.order(), "symbol out of range");
        FieldElement { field: self.clone(), symbol }
    }

    /// Symbol of a coordinate tuple. Coordinates must already be reduced.
    pub fn symbol_of(&self, coords: &[u32]) -> Symbol {
        let p = self.p();
        coords.iter().rev().fold(0u32, |acc, &c| acc * p + c) as Symbol
    }

    /// p-adic coordinates of a symbol.
    pub fn coords_of(&self, symbol: Symbol) -> Vec<u32> {
        digits_of(symbol as u64, self.p(), self.m())
    }

    #[inline]
    pub fn add_sym(&self, a: Symbol, b: Symbol) -> Symbol {
        self.0.add[a as usize * self.0.q + b as usize]
    }

    #[inline]
    pub fn mul_sym(&self, a: Symbol, b: Symbol) -> Symbol {
        self.0.mul[a as usize * self.0.q + b as usize]
    }

    #[inline]
    pub fn neg_sym(&self, a: Symbol) -> Symbol {
        self.0.neg[a as usize]
    }

    #[inline]
    pub fn sub_sym(&self, a: Symbol, b: Symbol) -> Symbol {
        self.add_sym(a, self.neg_sym(b))
    }

    pub fn inv_sym(&self, a: Symbol) -> Result<Symbol> {
        if a == 0 {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.0.inv[a as usize])
        }
    }

    /// Exhaustive check of the field axioms on the tables, plus a unit of
    /// multiplicative order dividing q − 1 for every nonzero element.
    pub fn verify_axioms(&self) -> Report {
        let q = self.order();
        let mut report = Report::new(format!("GF({q}) axioms"));
        let syms: Vec<Symbol> = (0..q).map(|s| s as Symbol).collect();
        for &a in &syms {
            report.checked += 1;
            if self.add_sym(a, 0) != a || self.mul_sym(a, 1) != a || self.add_sym(a, self.neg_sym(a)) != 0 {
                report.violation(format!("identity or negation fails at {a}"));
            }
            if a != 0 {
                if self.mul_sym(a, self.0.inv[a as usize]) != 1 {
                    report.violation(format!("inverse fails at {a}"));
                }
                let pow = (1..q).fold(1, |acc, _| self.mul_sym(acc, a));
                if pow != 1 {
                    report.violation(format!("{a}^(q-1) ≠ 1"));
                }
            }
            for &b in &syms {
                if self.add_sym(a, b) != self.add_sym(b, a) || self.mul_sym(a, b) != self.mul_sym(b, a) {
                    report.violation(format!("commutativity fails at {a}, {b}"));
                }
                for &c in &syms {
                    let assoc_add = self.add_sym(self.add_sym(a, b), c) == self.add_sym(a, self.add_sym(b, c));
                    let assoc_mul = self.mul_sym(self.mul_sym(a, b), c) == self.mul_sym(a, self.mul_sym(b, c));
                    let distrib = self.mul_sym(a, self.add_sym(b, c)) == self.add_sym(self.mul_sym(a, b), self.mul_sym(a, c));
                    if !(assoc_add && assoc_mul && distrib) {
                        report.violation(format!("associativity or distributivity fails at {a}, {b}, {c}"));
                    }
                }
            }
        }
        report
    }
}

/// An element of GF(p^m). Equality is total on (field, coordinates).
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: Field,
    symbol: Symbol,
}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn symbol(&self) -> Symbol {
        self.symbol
    }

    pub fn is_zero(&self) -> bool {
        self.symbol == 0
    }

    /// The coordinates `(a₁, …, a_m)` with `0 ≤ a_i < p`.
    pub fn padic_coords(&self) -> Vec<u32> {
        self.field.coords_of(self.symbol)
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::Mismatch(format!(
                "{:?} and {:?} are different fields",
                self.field, other.field
            )))
        }
    }

    fn with(&self, symbol: Symbol) -> Self {
        Self { field: self.field.clone(), symbol }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.with(self.field.add_sym(self.symbol, other.symbol)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.with(self.field.sub_sym(self.symbol, other.symbol)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.with(self.field.mul_sym(self.symbol, other.symbol)))
    }

    pub fn neg(&self) -> Self {
        self.with(self.field.neg_sym(self.symbol))
    }

    pub fn inv(&self) -> Result<Self> {
        Ok(self.with(self.field.inv_sym(self.symbol)?))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        self.mul(&other.inv()?)
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Comma-separated p-adic coordinates, e.g. `1,1` for 1+β.
impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coords = self.padic_coords();
        for (i, c) in coords.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}
