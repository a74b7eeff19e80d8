//! Weight functions `Z -> RingValue` and the builtin catalog of weight pairs.
//!
//! A [`WeightSpec`] is a data description of a single weight function; a
//! [`WeightPair`] is the pair `(v, w)` that parameterizes both Stirling kinds.
//! Both serialize to the JSON weight-spec format consumed by the CLI:
//!
//! ```json
//! {"v": {"kind": "polynomial", "coeffs": [4, 2]}, "w": {"kind": "constant", "value": 1}}
//! ```
//!
//! Polynomial coefficients are listed low degree first. Every spec accepts an
//! optional integer `offset`, evaluating the underlying function at `i + offset`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::ring::{RingValue, Var};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum WeightKind {
    Constant {
        value: RingValue,
    },
    /// `sum_d coeffs[d] * i^d`.
    Polynomial {
        coeffs: Vec<RingValue>,
    },
    /// `base^i`, Laurent at negative `i`.
    Monomial {
        base: Var,
    },
    /// `[i]_q = 1 + q + ... + q^(i-1)`.
    QInteger,
    /// `[i]_{p,q} = p^(i-1) + p^(i-2) q + ... + q^(i-1)`.
    PqInteger,
    /// `(i + a_1)(i + a_2)...(i + a_j)`.
    ProductShifted {
        shifts: Vec<i64>,
    },
    Table {
        #[serde(with = "int_keys")]
        values: BTreeMap<i64, RingValue>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        default: Option<RingValue>,
    },
}

// Integer map keys do not survive the buffering done by `#[serde(flatten)]`,
// so tables go through string keys explicitly.
mod int_keys {
    use std::collections::BTreeMap;

    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::ring::RingValue;

    pub fn serialize<S: Serializer>(map: &BTreeMap<i64, RingValue>, ser: S) -> Result<S::Ok, S::Error> {
        let m: BTreeMap<String, &RingValue> = map.iter().map(|(k, v)| (k.to_string(), v)).collect();
        m.serialize(ser)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<BTreeMap<i64, RingValue>, D::Error> {
        let m = BTreeMap::<String, RingValue>::deserialize(de)?;
        m.into_iter()
            .map(|(k, v)| {
                k.trim()
                    .parse::<i64>()
                    .map(|k| (k, v))
                    .map_err(|_| D::Error::custom(format!("table key `{k}` is not an integer")))
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightSpec {
    #[serde(flatten)]
    pub kind: WeightKind,
    #[serde(default, skip_serializing_if = "is_zero_offset")]
    pub offset: i64,
}

fn is_zero_offset(o: &i64) -> bool {
    *o == 0
}

impl WeightSpec {
    pub fn new(kind: WeightKind) -> WeightSpec {
        WeightSpec { kind, offset: 0 }
    }

    pub fn with_offset(mut self, offset: i64) -> WeightSpec {
        self.offset = offset;
        self
    }

    pub fn constant(value: impl Into<RingValue>) -> WeightSpec {
        WeightSpec::new(WeightKind::Constant { value: value.into() })
    }

    pub fn polynomial<I, T>(coeffs: I) -> WeightSpec
    where
        I: IntoIterator<Item = T>,
        T: Into<RingValue>,
    {
        WeightSpec::new(WeightKind::Polynomial {
            coeffs: coeffs.into_iter().map(Into::into).collect(),
        })
    }

    /// The identity weight `i`.
    pub fn identity() -> WeightSpec {
        WeightSpec::polynomial([0i64, 1])
    }

    pub fn monomial(base: Var) -> WeightSpec {
        WeightSpec::new(WeightKind::Monomial { base })
    }

    pub fn q_integer() -> WeightSpec {
        WeightSpec::new(WeightKind::QInteger)
    }

    pub fn pq_integer() -> WeightSpec {
        WeightSpec::new(WeightKind::PqInteger)
    }

    pub fn product_shifted(shifts: impl Into<Vec<i64>>) -> WeightSpec {
        WeightSpec::new(WeightKind::ProductShifted { shifts: shifts.into() })
    }

    pub fn table(values: BTreeMap<i64, RingValue>, default: Option<RingValue>) -> WeightSpec {
        WeightSpec::new(WeightKind::Table { values, default })
    }

    /// Evaluates the weight at `i`.
    pub fn eval(&self, i: i64) -> Result<RingValue> {
        let i = i + self.offset;
        match &self.kind {
            WeightKind::Constant { value } => Ok(value.clone()),
            WeightKind::Polynomial { coeffs } => {
                // Horner
                let x = RingValue::int(i);
                Ok(coeffs.iter().rev().fold(RingValue::zero(), |acc, c| &acc * &x + c))
            }
            WeightKind::Monomial { base } => RingValue::var_pow(*base, i),
            WeightKind::QInteger => {
                if i < 0 {
                    return Err(Error::NegativeQInteger(i));
                }
                (0..i).map(|t| RingValue::var_pow(Var::Q, t)).sum()
            }
            WeightKind::PqInteger => {
                if i < 0 {
                    return Err(Error::NegativeQInteger(i));
                }
                let mut acc = RingValue::zero();
                for t in 0..i {
                    acc += RingValue::var_pow(Var::P, i - 1 - t)? * RingValue::var_pow(Var::Q, t)?;
                }
                Ok(acc)
            }
            WeightKind::ProductShifted { shifts } => {
                Ok(shifts.iter().map(|a| RingValue::int(i + a)).product())
            }
            WeightKind::Table { values, default } => values
                .get(&i)
                .or(default.as_ref())
                .cloned()
                .ok_or(Error::UndefinedIndex(i)),
        }
    }

    /// Whether the weight is a polynomial in `i` with nonnegative integer
    /// coefficients, as required by the colored-object models.
    pub fn is_combinatorial(&self) -> bool {
        let nonneg = |v: &RingValue| v.as_integer().is_some_and(|n| !n.is_negative());
        match &self.kind {
            WeightKind::Constant { value } => nonneg(value),
            WeightKind::Polynomial { coeffs } => self.offset >= 0 && coeffs.iter().all(nonneg),
            WeightKind::ProductShifted { shifts } => shifts.iter().all(|a| a + self.offset >= 0),
            _ => false,
        }
    }

    /// Integer value at a nonnegative index, for combinatorial weights.
    pub fn eval_integer(&self, i: i64) -> Result<BigInt> {
        let v = self.eval(i)?;
        v.as_integer()
            .cloned()
            .ok_or_else(|| Error::NonCombinatorialWeights(format!("value {v} at index {i} is not an integer")))
    }

    /// Stable identifier derived from the canonical JSON form.
    pub fn id(&self) -> String {
        let json = serde_json::to_string(self).expect("weight specs always serialize");
        let digest = Sha256::digest(json.as_bytes());
        digest[..8].iter().map(|b| format!("{b:02x}")).collect()
    }

    /// Whether the weight is identically one.
    pub fn is_one(&self) -> bool {
        match &self.kind {
            WeightKind::Constant { value } => value.is_one(),
            WeightKind::Polynomial { coeffs } => {
                coeffs.first().is_some_and(RingValue::is_one) && coeffs[1..].iter().all(RingValue::is_zero)
            }
            WeightKind::ProductShifted { shifts } => shifts.is_empty(),
            _ => false,
        }
    }
}

impl fmt::Display for WeightSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = if self.offset == 0 {
            "i".to_string()
        } else {
            format!("(i{:+})", self.offset)
        };
        match &self.kind {
            WeightKind::Constant { value } => write!(f, "{value}"),
            WeightKind::Polynomial { coeffs } => {
                let mut parts = Vec::new();
                for (d, c) in coeffs.iter().enumerate().rev() {
                    if c.is_zero() {
                        continue;
                    }
                    let c = if c.num_terms() > 1 { format!("({c})") } else { c.to_string() };
                    parts.push(match d {
                        0 => c,
                        1 => format!("{c}*{i}"),
                        _ => format!("{c}*{i}^{d}"),
                    });
                }
                if parts.is_empty() {
                    write!(f, "0")
                } else {
                    write!(f, "{}", parts.join(" + "))
                }
            }
            WeightKind::Monomial { base } => write!(f, "{base}^{i}"),
            WeightKind::QInteger => write!(f, "[{i}]_q"),
            WeightKind::PqInteger => write!(f, "[{i}]_pq"),
            WeightKind::ProductShifted { shifts } => {
                for a in shifts {
                    write!(f, "({i}{a:+})")?;
                }
                Ok(())
            }
            WeightKind::Table { .. } => write!(f, "table"),
        }
    }
}

/// The pair `V = (v, w)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightPair {
    pub v: WeightSpec,
    pub w: WeightSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl WeightPair {
    pub fn new(v: WeightSpec, w: WeightSpec) -> WeightPair {
        WeightPair { v, w, name: None }
    }

    pub fn named(mut self, name: impl Into<String>) -> WeightPair {
        self.name = Some(name.into());
        self
    }

    pub fn v(&self, i: i64) -> Result<RingValue> {
        self.v.eval(i)
    }

    pub fn w(&self, i: i64) -> Result<RingValue> {
        self.w.eval(i)
    }

    /// `v(i) * w(j)`.
    pub fn product(&self, i: i64, j: i64) -> Result<RingValue> {
        Ok(self.v(i)? * self.w(j)?)
    }

    /// Exchanges the two components.
    pub fn swap(&self) -> WeightPair {
        WeightPair {
            v: self.w.clone(),
            w: self.v.clone(),
            name: self.name.as_ref().map(|n| format!("swap({n})")),
        }
    }

    pub fn is_combinatorial(&self) -> bool {
        self.v.is_combinatorial() && self.w.is_combinatorial()
    }

    pub fn id(&self) -> String {
        format!("{}:{}", self.v.id(), self.w.id())
    }

    pub fn label(&self) -> String {
        match &self.name {
            Some(n) => n.clone(),
            None => self.to_string(),
        }
    }

    pub fn from_json(json: &str) -> Result<WeightPair> {
        serde_json::from_str(json).map_err(|e| Error::InvalidWeightSpec(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("weight pairs always serialize")
    }
}

impl fmt::Display for WeightPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.v, self.w)
    }
}

/// Names accepted by [`builtin`]; parameterized entries take an integer in parentheses.
pub const BUILTIN_NAMES: &[&str] = &[
    "classical",
    "pq-binomial",
    "q-binomial",
    "b-stirling",
    "legendre",
    "jacobi",
    "noncentral(r)",
    "merris(m)",
    "sun(m)",
    "zeta",
    "q-stirling",
    "pq-stirling",
];

fn split_param(name: &str) -> Result<(&str, Option<i64>)> {
    let Some(open) = name.find('(') else {
        return Ok((name, None));
    };
    let inner = name[open + 1..]
        .strip_suffix(')')
        .ok_or_else(|| Error::UnknownBuiltin(name.to_string()))?;
    let n = inner.trim().parse().map_err(|_| Error::UnknownBuiltin(name.to_string()))?;
    Ok((&name[..open], Some(n)))
}

/// Looks up a builtin weight pair by name, e.g. `classical` or `merris(2)`.
pub fn builtin(name: &str) -> Result<WeightPair> {
    let unknown = || Error::UnknownBuiltin(name.to_string());
    let (base, param) = split_param(name.trim())?;
    let one = || WeightSpec::constant(1);
    let pair = match (base, param) {
        ("classical", None) => WeightPair::new(WeightSpec::identity(), one()),
        ("pq-binomial", None) => WeightPair::new(WeightSpec::monomial(Var::P), WeightSpec::monomial(Var::Q)),
        ("q-binomial", None) => WeightPair::new(one(), WeightSpec::monomial(Var::Q)),
        ("b-stirling", None) => WeightPair::new(WeightSpec::identity(), WeightSpec::identity()),
        ("legendre", None) => WeightPair::new(WeightSpec::product_shifted([0, 1]), one()),
        ("jacobi", None) => WeightPair::new(
            WeightSpec::polynomial([RingValue::zero(), RingValue::var(Var::Z), RingValue::one()]),
            one(),
        ),
        ("noncentral", Some(r)) => WeightPair::new(WeightSpec::identity().with_offset(r), one()),
        ("merris", Some(m)) => WeightPair::new(WeightSpec::polynomial([m, 1]), one()),
        ("sun", Some(m)) if m >= 0 => {
            let mut coeffs = vec![0i64; m as usize + 1];
            coeffs[m as usize] = 1;
            WeightPair::new(WeightSpec::polynomial(coeffs), one())
        }
        ("zeta", None) => WeightPair::new(WeightSpec::monomial(Var::Z), WeightSpec::identity().with_offset(-1)),
        ("q-stirling", None) => WeightPair::new(WeightSpec::q_integer(), one()),
        ("pq-stirling", None) => WeightPair::new(WeightSpec::pq_integer(), one()),
        _ => return Err(unknown()),
    };
    Ok(pair.named(name.trim()))
}

/// The catalog exercised by the verification suites.
pub fn catalog() -> Vec<WeightPair> {
    [
        "classical",
        "pq-binomial",
        "b-stirling",
        "legendre",
        "jacobi",
        "noncentral(1)",
        "noncentral(-1)",
        "merris(2)",
        "sun(2)",
        "zeta",
    ]
    .iter()
    .map(|n| builtin(n).expect("catalog names are builtin"))
    .collect()
}

/// `(-1)^exp` as a ring value.
pub(crate) fn sign(exp: i64) -> RingValue {
    if exp.rem_euclid(2) == 0 {
        RingValue::one()
    } else {
        RingValue::int(-1)
    }
}

/// Whether an error only signals a domain restriction of the weight family
/// (q-integers below zero), as opposed to a genuine failure.
pub fn is_domain_restriction(e: &Error) -> bool {
    matches!(e, Error::NegativeQInteger(_))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rv(s: &str) -> RingValue {
        s.parse().unwrap()
    }

    #[test]
    fn eval_examples() {
        assert_eq!(WeightSpec::polynomial([4, 2]).eval(3).unwrap(), RingValue::int(10));
        assert_eq!(WeightSpec::monomial(Var::P).eval(-1).unwrap(), rv("p^-1"));
        assert_eq!(WeightSpec::pq_integer().eval(2).unwrap(), rv("p+q"));
        assert_eq!(WeightSpec::q_integer().eval(0).unwrap(), RingValue::zero());
        assert_eq!(WeightSpec::q_integer().eval(3).unwrap(), rv("1+q+q^2"));
        assert_eq!(WeightSpec::q_integer().eval(-1), Err(Error::NegativeQInteger(-1)));
        assert_eq!(WeightSpec::pq_integer().eval(-2), Err(Error::NegativeQInteger(-2)));
    }

    #[test]
    fn table_requires_definition_unless_defaulted() {
        let mut values = BTreeMap::new();
        values.insert(0, RingValue::int(5));
        let t = WeightSpec::table(values.clone(), None);
        assert_eq!(t.eval(0).unwrap(), RingValue::int(5));
        assert_eq!(t.eval(1), Err(Error::UndefinedIndex(1)));
        let d = WeightSpec::table(values, Some(RingValue::int(7)));
        assert_eq!(d.eval(1).unwrap(), RingValue::int(7));
    }

    #[test]
    fn offset_shifts_index() {
        let w = WeightSpec::identity().with_offset(-1);
        assert_eq!(w.eval(0).unwrap(), RingValue::int(-1));
        assert_eq!(w.eval(5).unwrap(), RingValue::int(4));
    }

    #[test]
    fn swap_examples() {
        let c = builtin("classical").unwrap();
        let s = c.swap();
        assert_eq!(s.v, WeightSpec::constant(1));
        assert_eq!(s.w, WeightSpec::identity());
        assert_eq!(c.swap().swap().v, c.v);
        assert_eq!(c.swap().swap().w, c.w);
        let pq = builtin("pq-binomial").unwrap().swap();
        assert_eq!(pq.v, WeightSpec::monomial(Var::Q));
        assert_eq!(pq.w, WeightSpec::monomial(Var::P));
    }

    #[test]
    fn builtin_examples() {
        let c = builtin("classical").unwrap();
        assert_eq!((c.v.clone(), c.w.clone()), (WeightSpec::identity(), WeightSpec::constant(1)));
        let b = builtin("b-stirling").unwrap();
        assert_eq!((b.v.clone(), b.w.clone()), (WeightSpec::identity(), WeightSpec::identity()));
        let l = builtin("legendre").unwrap();
        for i in -3..6 {
            assert_eq!(l.v(i).unwrap(), RingValue::int(i * (i + 1)));
            assert_eq!(l.w(i).unwrap(), RingValue::one());
        }
        let j = builtin("jacobi").unwrap();
        assert_eq!(j.v(2).unwrap(), rv("2*z + 4"));
        assert_eq!(j.v(1).unwrap().substitute_pairs(&[(Var::Z, RingValue::one())]).unwrap(), RingValue::int(2));
        assert_eq!(builtin("sun(3)").unwrap().v(2).unwrap(), RingValue::int(8));
        assert_eq!(builtin("merris(2)").unwrap().v(1).unwrap(), RingValue::int(3));
        assert_eq!(builtin("noncentral(-1)").unwrap().v(1).unwrap(), RingValue::int(0));
        assert_eq!(builtin("zeta").unwrap().v(-2).unwrap(), rv("z^-2"));
        assert!(matches!(builtin("nope"), Err(Error::UnknownBuiltin(_))));
        assert!(matches!(builtin("sun"), Err(Error::UnknownBuiltin(_))));
        assert!(matches!(builtin("merris(x)"), Err(Error::UnknownBuiltin(_))));
    }

    #[test]
    fn b_stirling_products_are_all_ab_with_a_plus_b_k() {
        let t = |k: i64, j: i64| -> i64 {
            if k >= j {
                ((j + 2) / 2) * (k - j + (j + 3) / 2)
            } else {
                0
            }
        };
        let b = builtin("b-stirling").unwrap();
        for k in 2..=12 {
            let mut lhs: Vec<i64> = (0..=k).map(|j| b.product(k - j, j).unwrap().to_i64().unwrap()).collect();
            let mut rhs: Vec<i64> = (0..=k).map(|j| t(k - 2, j)).collect();
            lhs.sort();
            rhs.sort();
            assert_eq!(lhs, rhs, "k={k}");
        }
    }

    #[test]
    fn pq_integer_specializes_to_i() {
        let one = RingValue::one();
        for i in 0..=20 {
            let v = WeightSpec::pq_integer().eval(i).unwrap();
            let s = v.substitute_pairs(&[(Var::P, one.clone()), (Var::Q, one.clone())]).unwrap();
            assert_eq!(s, RingValue::int(i));
        }
    }

    #[test]
    fn monomial_weight_is_geometric() {
        for base in [Var::P, Var::Q, Var::Z] {
            let w = WeightSpec::monomial(base);
            for i in -10..=10 {
                assert_eq!(w.eval(i + 1).unwrap(), w.eval(i).unwrap() * RingValue::var(base));
            }
        }
    }

    #[test]
    fn json_round_trip_and_ids() {
        let json = r#"{"v": {"kind": "polynomial", "coeffs": [4, 2]}, "w": {"kind": "constant", "value": 1}}"#;
        let pair = WeightPair::from_json(json).unwrap();
        assert_eq!(pair.v(3).unwrap(), RingValue::int(10));
        assert_eq!(WeightPair::from_json(&pair.to_json()).unwrap(), pair);
        let zeta = builtin("zeta").unwrap();
        assert_eq!(WeightPair::from_json(&zeta.to_json()).unwrap(), zeta);
        assert_eq!(zeta.v.id(), builtin("zeta").unwrap().v.id());
        assert_ne!(zeta.v.id(), zeta.w.id());
        let table = r#"{"v": {"kind": "table", "values": {"0": 1, "1": "p+q"}}, "w": {"kind": "q-integer", "offset": 1}}"#;
        let t = WeightPair::from_json(table).unwrap();
        assert_eq!(t.v(1).unwrap(), rv("p+q"));
        assert_eq!(t.w(0).unwrap(), RingValue::one());
        assert!(WeightPair::from_json(r#"{"v": {"kind": "bogus"}}"#).is_err());
    }

    #[test]
    fn combinatorial_flags() {
        assert!(builtin("classical").unwrap().is_combinatorial());
        assert!(builtin("legendre").unwrap().is_combinatorial());
        assert!(builtin("merris(2)").unwrap().is_combinatorial());
        assert!(builtin("b-stirling").unwrap().is_combinatorial());
        assert!(!builtin("noncentral(-1)").unwrap().is_combinatorial());
        assert!(!builtin("jacobi").unwrap().is_combinatorial());
        assert!(!builtin("pq-binomial").unwrap().is_combinatorial());
        assert!(!WeightSpec::polynomial([-1, 1]).is_combinatorial());
    }
}
