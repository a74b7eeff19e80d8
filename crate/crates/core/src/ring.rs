//! Exact ring values.
//!
//! A [`RingValue`] is either an arbitrary-precision integer or a sparse
//! Laurent polynomial with integer coefficients in the fixed variables
//! `p < q < z < x`. Negative exponents are allowed for `p`, `q` and `z`;
//! `x` is the generating-function variable and stays polynomial.
//!
//! Values are kept in canonical form: no zero coefficients are stored, and a
//! polynomial that is a constant collapses to the integer representation, so
//! derived equality is mathematical equality.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

const NVARS: usize = 4;

/// One of the four ring variables, in their rendering order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Var {
    P,
    Q,
    Z,
    X,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::P, Var::Q, Var::Z, Var::X];

    fn index(self) -> usize {
        self as usize
    }

    pub fn symbol(self) -> char {
        match self {
            Var::P => 'p',
            Var::Q => 'q',
            Var::Z => 'z',
            Var::X => 'x',
        }
    }

    /// Whether the variable may carry negative exponents.
    pub fn is_laurent(self) -> bool {
        self != Var::X
    }

    pub fn from_symbol(c: char) -> Option<Var> {
        match c {
            'p' => Some(Var::P),
            'q' => Some(Var::Q),
            'z' => Some(Var::Z),
            'x' => Some(Var::X),
            _ => None,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Exponent vector over `(p, q, z, x)`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial([i32; NVARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NVARS]);

    pub fn var(v: Var, exp: i32) -> Monomial {
        let mut e = [0; NVARS];
        e[v.index()] = exp;
        Monomial(e)
    }

    pub fn from_exponents(exps: [i32; NVARS]) -> Monomial {
        Monomial(exps)
    }

    pub fn exponent(&self, v: Var) -> i32 {
        self.0[v.index()]
    }

    pub fn exponents(&self) -> [i32; NVARS] {
        self.0
    }

    /// Total degree (may be negative for Laurent monomials).
    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0; NVARS]
    }

    fn mul(self, other: Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a += b;
        }
        Monomial(e)
    }

    fn div(self, other: Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a -= b;
        }
        Monomial(e)
    }

    fn is_valid(&self) -> bool {
        self.exponent(Var::X) >= 0
    }

    fn write(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in Var::ALL {
            let e = self.exponent(v);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Repr {
    Int(BigInt),
    /// Never empty and never a lone constant term.
    Poly(BTreeMap<Monomial, BigInt>),
}

/// An exact element of `Z[p^±1, q^±1, z^±1, x]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RingValue(Repr);

impl RingValue {
    pub fn zero() -> RingValue {
        RingValue(Repr::Int(BigInt::zero()))
    }

    pub fn one() -> RingValue {
        RingValue(Repr::Int(BigInt::one()))
    }

    pub fn int(n: impl Into<BigInt>) -> RingValue {
        RingValue(Repr::Int(n.into()))
    }

    pub fn var(v: Var) -> RingValue {
        RingValue::term(BigInt::one(), Monomial::var(v, 1))
    }

    /// `v^exp`; negative exponents only for Laurent variables.
    pub fn var_pow(v: Var, exp: i64) -> Result<RingValue> {
        if exp < 0 && !v.is_laurent() {
            return Err(Error::NegativeExponent(v));
        }
        let exp = i32::try_from(exp).expect("exponent out of range");
        Ok(RingValue::term(BigInt::one(), Monomial::var(v, exp)))
    }

    pub fn term(coeff: BigInt, mono: Monomial) -> RingValue {
        debug_assert!(mono.is_valid());
        if coeff.is_zero() || mono.is_one() {
            return RingValue(Repr::Int(coeff));
        }
        let mut m = BTreeMap::new();
        m.insert(mono, coeff);
        RingValue(Repr::Poly(m))
    }

    /// Builds a canonical value from arbitrary terms, dropping zeros.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> RingValue {
        let mut m: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (mono, c) in terms {
            *m.entry(mono).or_default() += c;
        }
        Self::normalize(m)
    }

    fn normalize(mut m: BTreeMap<Monomial, BigInt>) -> RingValue {
        m.retain(|_, c| !c.is_zero());
        match m.len() {
            0 => RingValue::zero(),
            1 if m.contains_key(&Monomial::ONE) => {
                RingValue(Repr::Int(m.remove(&Monomial::ONE).unwrap()))
            }
            _ => RingValue(Repr::Poly(m)),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(&self.0, Repr::Int(n) if n.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(&self.0, Repr::Int(n) if n.is_one())
    }

    /// The value as an integer, if it is a constant.
    pub fn as_integer(&self) -> Option<&BigInt> {
        match &self.0 {
            Repr::Int(n) => Some(n),
            Repr::Poly(_) => None,
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.as_integer().and_then(|n| n.to_i64())
    }

    /// Number of nonzero terms.
    pub fn num_terms(&self) -> usize {
        match &self.0 {
            Repr::Int(n) => usize::from(!n.is_zero()),
            Repr::Poly(m) => m.len(),
        }
    }

    /// Terms in ascending lexicographic exponent order.
    pub fn terms(&self) -> Vec<(Monomial, BigInt)> {
        match &self.0 {
            Repr::Int(n) if n.is_zero() => Vec::new(),
            Repr::Int(n) => vec![(Monomial::ONE, n.clone())],
            Repr::Poly(m) => m.iter().map(|(k, c)| (*k, c.clone())).collect(),
        }
    }

    fn into_map(self) -> BTreeMap<Monomial, BigInt> {
        match self.0 {
            Repr::Int(n) => {
                let mut m = BTreeMap::new();
                if !n.is_zero() {
                    m.insert(Monomial::ONE, n);
                }
                m
            }
            Repr::Poly(m) => m,
        }
    }

    pub fn contains_var(&self, v: Var) -> bool {
        match &self.0 {
            Repr::Int(_) => false,
            Repr::Poly(m) => m.keys().any(|k| k.exponent(v) != 0),
        }
    }

    /// Largest exponent of `v` over all terms; `None` for zero.
    pub fn max_degree(&self, v: Var) -> Option<i32> {
        self.terms().iter().map(|(k, _)| k.exponent(v)).max()
    }

    pub fn min_degree(&self, v: Var) -> Option<i32> {
        self.terms().iter().map(|(k, _)| k.exponent(v)).min()
    }

    /// Coefficient of `v^exp`, as a value free of `v`.
    pub fn coefficient(&self, v: Var, exp: i32) -> RingValue {
        let strip = Monomial::var(v, exp);
        RingValue::from_terms(
            self.terms()
                .into_iter()
                .filter(|(k, _)| k.exponent(v) == exp)
                .map(|(k, c)| (k.div(strip), c)),
        )
    }

    pub fn scale(&self, c: &BigInt) -> RingValue {
        if c.is_zero() {
            return RingValue::zero();
        }
        match &self.0 {
            Repr::Int(n) => RingValue::int(n * c),
            Repr::Poly(m) => RingValue(Repr::Poly(m.iter().map(|(k, v)| (*k, v * c)).collect())),
        }
    }

    pub fn mul_monomial(&self, mono: Monomial) -> RingValue {
        RingValue::from_terms(self.terms().into_iter().map(|(k, c)| (k.mul(mono), c)))
    }

    pub fn pow(&self, exp: u32) -> RingValue {
        let mut result = RingValue::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Integer power, negative exponents requiring a unit base.
    pub fn pow_signed(&self, exp: i64) -> Option<RingValue> {
        let e = u32::try_from(exp.unsigned_abs()).expect("exponent out of range");
        if exp >= 0 {
            Some(self.pow(e))
        } else {
            self.inverse().map(|inv| inv.pow(e))
        }
    }

    /// Multiplicative inverse; only `±m` with `m` free of `x` is a unit.
    pub fn inverse(&self) -> Option<RingValue> {
        let terms = self.terms();
        let [(mono, c)] = terms.as_slice() else {
            return None;
        };
        if !c.abs().is_one() || mono.exponent(Var::X) != 0 {
            return None;
        }
        Some(RingValue::term(c.clone(), Monomial::ONE.div(*mono)))
    }

    pub fn is_unit(&self) -> bool {
        self.inverse().is_some()
    }

    /// Homomorphic substitution of variables by ring values.
    pub fn substitute(&self, assignment: &BTreeMap<Var, RingValue>) -> Result<RingValue> {
        if let Repr::Int(_) = self.0 {
            return Ok(self.clone());
        }
        let mut powers: HashMap<(Var, i32), RingValue> = HashMap::new();
        let mut acc = RingValue::zero();
        for (mono, coeff) in self.terms() {
            let mut kept = Monomial::ONE;
            let mut value = RingValue::int(coeff);
            for v in Var::ALL {
                let e = mono.exponent(v);
                if e == 0 {
                    continue;
                }
                match assignment.get(&v) {
                    None => kept.0[v.index()] = e,
                    Some(image) => {
                        let p = match powers.get(&(v, e)) {
                            Some(p) => p.clone(),
                            None => {
                                let p = image
                                    .pow_signed(e as i64)
                                    .ok_or(Error::NonInvertibleSubstitution { var: v })?;
                                powers.insert((v, e), p.clone());
                                p
                            }
                        };
                        value = &value * &p;
                    }
                }
            }
            acc += value.mul_monomial(kept);
        }
        Ok(acc)
    }

    /// Convenience wrapper around [`RingValue::substitute`].
    pub fn substitute_pairs(&self, pairs: &[(Var, RingValue)]) -> Result<RingValue> {
        let map: BTreeMap<Var, RingValue> = pairs.iter().cloned().collect();
        self.substitute(&map)
    }

    /// Exact division by an integer; fails when any coefficient leaves a remainder.
    pub fn div_exact_int(&self, d: &BigInt) -> Result<RingValue> {
        let inexact = || Error::InexactDivision {
            value: self.to_string(),
            divisor: d.to_string(),
        };
        if d.is_zero() {
            return Err(inexact());
        }
        let mut out = BTreeMap::new();
        for (k, c) in self.terms() {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return Err(inexact());
            }
            out.insert(k, q);
        }
        Ok(RingValue::normalize(out))
    }

    /// Exact division in the Laurent ring, `None` if `divisor` does not divide `self`.
    ///
    /// Leading-term division in lexicographic order. Quotient exponents are
    /// confined to the box implied by per-variable degree additivity, which
    /// bounds the loop even though Laurent monomials are not well ordered.
    pub fn div_exact(&self, divisor: &RingValue) -> Option<RingValue> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(RingValue::zero());
        }
        if let (Some(a), Some(b)) = (self.as_integer(), divisor.as_integer()) {
            let (q, r) = a.div_rem(b);
            return r.is_zero().then(|| RingValue::int(q));
        }
        let mut lo = [0i32; NVARS];
        let mut hi = [0i32; NVARS];
        for v in Var::ALL {
            let i = v.index();
            hi[i] = self.max_degree(v)? - divisor.max_degree(v)?;
            lo[i] = self.min_degree(v)? - divisor.min_degree(v)?;
            if lo[i] > hi[i] {
                return None;
            }
        }
        let dmap = divisor.clone().into_map();
        let (dlead, dcoeff) = dmap.iter().next_back().map(|(k, c)| (*k, c.clone()))?;
        let mut rem = self.clone().into_map();
        let mut quot: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        while let Some((&lead, c)) = rem.iter().next_back() {
            let (qc, r) = c.div_rem(&dcoeff);
            if !r.is_zero() {
                return None;
            }
            let m = lead.div(dlead);
            if !m.is_valid() || (0..NVARS).any(|i| m.0[i] < lo[i] || m.0[i] > hi[i]) {
                return None;
            }
            for (dk, dc) in &dmap {
                let key = dk.mul(m);
                let entry = rem.entry(key).or_default();
                *entry -= &qc * dc;
                if entry.is_zero() {
                    rem.remove(&key);
                }
            }
            quot.insert(m, qc);
        }
        Some(RingValue::normalize(quot))
    }

    fn sorted_for_display(&self) -> Vec<(Monomial, BigInt)> {
        let mut t = self.terms();
        t.sort_by(|(a, _), (b, _)| b.degree().cmp(&a.degree()).then_with(|| b.cmp(a)));
        t
    }
}

impl Default for RingValue {
    fn default() -> Self {
        RingValue::zero()
    }
}

impl From<i64> for RingValue {
    fn from(n: i64) -> Self {
        RingValue::int(n)
    }
}

impl From<BigInt> for RingValue {
    fn from(n: BigInt) -> Self {
        RingValue::int(n)
    }
}

impl From<Var> for RingValue {
    fn from(v: Var) -> Self {
        RingValue::var(v)
    }
}

fn add_maps(a: &RingValue, b: &RingValue, negate_b: bool) -> RingValue {
    match (&a.0, &b.0) {
        (Repr::Int(x), Repr::Int(y)) => RingValue::int(if negate_b { x - y } else { x + y }),
        _ => {
            let mut m = a.clone().into_map();
            for (k, c) in b.terms() {
                let e = m.entry(k).or_default();
                if negate_b {
                    *e -= c;
                } else {
                    *e += c;
                }
            }
            RingValue::normalize(m)
        }
    }
}

fn mul_values(a: &RingValue, b: &RingValue) -> RingValue {
    match (&a.0, &b.0) {
        (Repr::Int(x), Repr::Int(y)) => RingValue::int(x * y),
        (Repr::Int(x), Repr::Poly(_)) => b.scale(x),
        (Repr::Poly(_), Repr::Int(y)) => a.scale(y),
        (Repr::Poly(x), Repr::Poly(y)) => {
            let mut m: BTreeMap<Monomial, BigInt> = BTreeMap::new();
            for (ka, ca) in x {
                for (kb, cb) in y {
                    *m.entry(ka.mul(*kb)).or_default() += ca * cb;
                }
            }
            RingValue::normalize(m)
        }
    }
}

impl Add<&RingValue> for &RingValue {
    type Output = RingValue;
    fn add(self, rhs: &RingValue) -> RingValue {
        add_maps(self, rhs, false)
    }
}

impl Sub<&RingValue> for &RingValue {
    type Output = RingValue;
    fn sub(self, rhs: &RingValue) -> RingValue {
        add_maps(self, rhs, true)
    }
}

impl Mul<&RingValue> for &RingValue {
    type Output = RingValue;
    fn mul(self, rhs: &RingValue) -> RingValue {
        mul_values(self, rhs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<RingValue> for RingValue {
            type Output = RingValue;
            fn $m(self, rhs: RingValue) -> RingValue {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RingValue> for RingValue {
            type Output = RingValue;
            fn $m(self, rhs: &RingValue) -> RingValue {
                (&self).$m(rhs)
            }
        }
        impl $tr<RingValue> for &RingValue {
            type Output = RingValue;
            fn $m(self, rhs: RingValue) -> RingValue {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<RingValue> for RingValue {
    fn add_assign(&mut self, rhs: RingValue) {
        *self = &*self + &rhs;
    }
}

impl AddAssign<&RingValue> for RingValue {
    fn add_assign(&mut self, rhs: &RingValue) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&RingValue> for RingValue {
    fn sub_assign(&mut self, rhs: &RingValue) {
        *self = &*self - rhs;
    }
}

impl SubAssign<RingValue> for RingValue {
    fn sub_assign(&mut self, rhs: RingValue) {
        *self = &*self - &rhs;
    }
}

impl MulAssign<RingValue> for RingValue {
    fn mul_assign(&mut self, rhs: RingValue) {
        *self = &*self * &rhs;
    }
}

impl MulAssign<&RingValue> for RingValue {
    fn mul_assign(&mut self, rhs: &RingValue) {
        *self = &*self * rhs;
    }
}

impl Neg for RingValue {
    type Output = RingValue;
    fn neg(self) -> RingValue {
        match self.0 {
            Repr::Int(n) => RingValue::int(-n),
            Repr::Poly(m) => RingValue(Repr::Poly(m.into_iter().map(|(k, c)| (k, -c)).collect())),
        }
    }
}

impl Neg for &RingValue {
    type Output = RingValue;
    fn neg(self) -> RingValue {
        -self.clone()
    }
}

impl Zero for RingValue {
    fn zero() -> Self {
        RingValue::zero()
    }
    fn is_zero(&self) -> bool {
        RingValue::is_zero(self)
    }
}

impl One for RingValue {
    fn one() -> Self {
        RingValue::one()
    }
}

impl Sum for RingValue {
    fn sum<I: Iterator<Item = RingValue>>(iter: I) -> Self {
        iter.fold(RingValue::zero(), |a, b| a + b)
    }
}

impl<'a> Sum<&'a RingValue> for RingValue {
    fn sum<I: Iterator<Item = &'a RingValue>>(iter: I) -> Self {
        iter.fold(RingValue::zero(), |a, b| a + b)
    }
}

impl Product for RingValue {
    fn product<I: Iterator<Item = RingValue>>(iter: I) -> Self {
        iter.fold(RingValue::one(), |a, b| a * b)
    }
}

impl<'a> Product<&'a RingValue> for RingValue {
    fn product<I: Iterator<Item = &'a RingValue>>(iter: I) -> Self {
        iter.fold(RingValue::one(), |a, b| a * b)
    }
}

/// Graded-lex rendering, e.g. `p^4 + p^3*q + 2*p^2*q^2`.
impl fmt::Display for RingValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Repr::Int(n) = &self.0 {
            return write!(f, "{n}");
        }
        for (i, (mono, c)) in self.sorted_for_display().into_iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if mono.is_one() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                mono.write(f)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RingValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingValue({self})")
    }
}

impl FromStr for RingValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<RingValue> {
        let mut parser = Parser { src: s.as_bytes(), pos: 0 };
        let v = parser.expr()?;
        parser.skip_ws();
        if parser.pos != parser.src.len() {
            return Err(parser.error("unexpected trailing input"));
        }
        Ok(v)
    }
}

/// Recursive-descent parser for `+ - * ^ ( )` expressions over integers and `p q z x`.
struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Parse {
            offset: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RingValue> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc += self.term()?;
            } else if self.eat(b'-') {
                acc -= &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RingValue> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc *= &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<RingValue> {
        if self.eat(b'-') {
            return Ok(-self.factor()?);
        }
        if self.eat(b'+') {
            return self.factor();
        }
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let neg = self.eat(b'-');
        let start = self.pos;
        let digits = self.digits();
        let exp: i64 = digits
            .parse()
            .map_err(|_| Error::Parse { offset: start, message: "expected exponent".into() })?;
        let exp = if neg { -exp } else { exp };
        if exp < 0 {
            if let Some(v) = base.single_variable() {
                if !v.is_laurent() {
                    return Err(Error::NegativeExponent(v));
                }
            }
        }
        base.pow_signed(exp).ok_or_else(|| self.error("negative power of a non-unit"))
    }

    fn digits(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> Result<RingValue> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected `)`"));
                }
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits();
                let n: BigInt = d.parse().map_err(|_| self.error("bad integer"))?;
                Ok(RingValue::int(n))
            }
            Some(c) => match Var::from_symbol(c as char) {
                Some(v) => {
                    self.pos += 1;
                    Ok(RingValue::var(v))
                }
                None => Err(self.error("unexpected character")),
            },
            None => Err(self.error("unexpected end of input")),
        }
    }
}

impl RingValue {
    fn single_variable(&self) -> Option<Var> {
        let terms = self.terms();
        let [(mono, c)] = terms.as_slice() else {
            return None;
        };
        if !c.is_one() {
            return None;
        }
        let nonzero: Vec<Var> = Var::ALL.into_iter().filter(|v| mono.exponent(*v) != 0).collect();
        match nonzero.as_slice() {
            [v] if mono.exponent(*v) == 1 => Some(*v),
            _ => None,
        }
    }
}

/// Integers serialize as JSON numbers when they fit in `i64`, everything else as a rendered string.
impl Serialize for RingValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.to_i64() {
            Some(n) => s.serialize_i64(n),
            None => s.serialize_str(&self.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for RingValue {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct RingVisitor;
        impl Visitor<'_> for RingVisitor {
            type Value = RingValue;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer or a polynomial string")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<RingValue, E> {
                Ok(RingValue::int(v))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<RingValue, E> {
                Ok(RingValue::int(v))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<RingValue, E> {
                v.parse().map_err(E::custom)
            }
        }
        d.deserialize_any(RingVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rv(s: &str) -> RingValue {
        s.parse().unwrap()
    }

    #[test]
    fn add_examples() {
        assert_eq!(RingValue::int(2) + RingValue::int(3), RingValue::int(5));
        assert_eq!(rv("p") + RingValue::zero(), rv("p"));
        assert_eq!(rv("p+q") + rv("p-q"), rv("2*p"));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(rv("p+q") * rv("p+q"), rv("p^2 + 2*p*q + q^2"));
        assert_eq!(rv("p") * rv("p^-1"), RingValue::one());
        assert!((rv("p^3 - 7*q*z") * RingValue::zero()).is_zero());
    }

    #[test]
    fn constant_polynomial_equals_integer() {
        assert_eq!(rv("p - p + 4"), RingValue::int(4));
        assert_eq!(rv("(p+1)*(p-1) - p^2"), RingValue::int(-1));
        assert!(rv("p - p + 4").as_integer().is_some());
    }

    #[test]
    fn substitute_examples() {
        let one = RingValue::one();
        assert_eq!(
            rv("p^2 + p*q").substitute_pairs(&[(Var::P, one.clone()), (Var::Q, one)]).unwrap(),
            RingValue::int(2)
        );
        assert_eq!(rv("p+q").substitute_pairs(&[(Var::P, rv("q"))]).unwrap(), rv("2*q"));
        assert_eq!(
            rv("p^-1").substitute_pairs(&[(Var::P, RingValue::zero())]),
            Err(Error::NonInvertibleSubstitution { var: Var::P })
        );
        assert_eq!(rv("p^-2*q").substitute_pairs(&[(Var::P, rv("p*q^-1"))]).unwrap(), rv("p^-2*q^3"));
    }

    #[test]
    fn rendering_is_graded_lex() {
        assert_eq!(rv("2*p^2*q^2 + q^4 + p^3*q + p^4 + p*q^3").to_string(), "p^4 + p^3*q + 2*p^2*q^2 + p*q^3 + q^4");
        assert_eq!(rv("1 - x").to_string(), "-x + 1");
        assert_eq!(rv("q^-1*p - 3").to_string(), "p*q^-1 - 3");
        assert_eq!(RingValue::zero().to_string(), "0");
    }

    #[test]
    fn x_is_not_laurent() {
        assert_eq!(RingValue::var_pow(Var::X, -1), Err(Error::NegativeExponent(Var::X)));
        assert!("x^-1".parse::<RingValue>().is_err());
        assert!(rv("z^-2").contains_var(Var::Z));
    }

    #[test]
    fn exact_division() {
        let a = rv("p^2 - q^2");
        assert_eq!(a.div_exact(&rv("p - q")), Some(rv("p + q")));
        assert_eq!(rv("p^2 + 1").div_exact(&rv("p + 1")), None);
        assert_eq!(rv("p^-1 + q^-1").div_exact(&rv("p + q")), Some(rv("p^-1*q^-1")));
        assert_eq!(rv("6*p").div_exact_int(&BigInt::from(3)).unwrap(), rv("2*p"));
        assert!(rv("5*p").div_exact_int(&BigInt::from(3)).is_err());
        assert_eq!(RingValue::int(12).div_exact(&RingValue::int(5)), None);
    }

    #[test]
    fn coefficient_extraction() {
        let f = rv("x^2 + (p+q)*x + p*q");
        assert_eq!(f.coefficient(Var::X, 1), rv("p+q"));
        assert_eq!(f.coefficient(Var::X, 0), rv("p*q"));
        assert_eq!(f.coefficient(Var::X, 3), RingValue::zero());
    }

    #[test]
    fn serde_forms() {
        let v: Vec<RingValue> = serde_json::from_str(r#"[3, "p+q", "-2"]"#).unwrap();
        assert_eq!(v, vec![RingValue::int(3), rv("p+q"), RingValue::int(-2)]);
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"[3,"p + q",-2]"#);
    }
}
