//! V-Stirling numbers of the first and second kind.
//!
//! With `V = (v, w)`:
//!
//! ```text
//! c[n,k] = e_{n-k}(v_{a+n-1} w_b, v_{a+n-2} w_{b+1}, ..., v_a w_{b+n-1})
//! S[n,k] = h_{n-k}(v_{a+k} w_b,   v_{a+k-1} w_{b+1}, ..., v_a w_{b+k})
//! ```
//!
//! where `a`, `b` are the shifts `alpha`, `beta`. Both vanish for negative
//! `n` or `k` and for `k > n`.
//!
//! [`StirlingTable`] memoizes the definitional values for one weight pair and
//! also evaluates every recurrence family independently, so that the
//! recurrences can be checked against the definitions.

use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{RingValue, Var};
use crate::symfunc::{elementary, elementary_all, homogeneous, homogeneous_upto};
use crate::weights::{builtin, sign, WeightPair};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    First,
    Second,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::First => "first",
            Kind::Second => "second",
        })
    }
}

impl std::str::FromStr for Kind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Kind> {
        match s {
            "first" | "c" => Ok(Kind::First),
            "second" | "S" | "s" => Ok(Kind::Second),
            _ => Err(Error::UnknownFamily(s.to_string())),
        }
    }
}

/// Arguments of the elementary symmetric function for `c[n, *]`.
pub fn c_arguments(weights: &WeightPair, alpha: i64, beta: i64, n: i64) -> Result<Vec<RingValue>> {
    (0..n.max(0))
        .map(|j| weights.product(alpha + n - 1 - j, beta + j))
        .collect()
}

/// Arguments of the homogeneous symmetric function for `S[*, k]`.
pub fn s_arguments(weights: &WeightPair, alpha: i64, beta: i64, k: i64) -> Result<Vec<RingValue>> {
    (0..=k)
        .map(|j| weights.product(alpha + k - j, beta + j))
        .collect()
}

fn out_of_range(n: i64, k: i64) -> bool {
    n < 0 || k < 0 || k > n
}

/// First-kind value straight from the symmetric-function definition.
pub fn c_def(weights: &WeightPair, alpha: i64, beta: i64, n: i64, k: i64) -> Result<RingValue> {
    if out_of_range(n, k) {
        return Ok(RingValue::zero());
    }
    Ok(elementary(n - k, &c_arguments(weights, alpha, beta, n)?))
}

/// Second-kind value straight from the symmetric-function definition.
pub fn s_def(weights: &WeightPair, alpha: i64, beta: i64, n: i64, k: i64) -> Result<RingValue> {
    if out_of_range(n, k) {
        return Ok(RingValue::zero());
    }
    Ok(homogeneous(n - k, &s_arguments(weights, alpha, beta, k)?))
}

pub fn def(kind: Kind, weights: &WeightPair, alpha: i64, beta: i64, n: i64, k: i64) -> Result<RingValue> {
    match kind {
        Kind::First => c_def(weights, alpha, beta, n, k),
        Kind::Second => s_def(weights, alpha, beta, n, k),
    }
}

type Key = (Kind, i64, i64, i64, i64);

/// Memoized values for a single weight pair.
///
/// Keys carry `alpha` and `beta` as well as `(n, k)`: the recurrences shift
/// `beta`, so a table is not confined to one `(alpha, beta)` slice. The memo
/// maps are behind mutexes and the table may be shared between threads.
pub struct StirlingTable {
    weights: WeightPair,
    def_memo: Mutex<HashMap<Key, RingValue>>,
    tri_memo: Mutex<HashMap<Key, RingValue>>,
    vert_memo: Mutex<HashMap<Key, RingValue>>,
}

impl StirlingTable {
    pub fn new(weights: WeightPair) -> StirlingTable {
        StirlingTable {
            weights,
            def_memo: Mutex::default(),
            tri_memo: Mutex::default(),
            vert_memo: Mutex::default(),
        }
    }

    pub fn weights(&self) -> &WeightPair {
        &self.weights
    }

    fn lookup(memo: &Mutex<HashMap<Key, RingValue>>, key: &Key) -> Option<RingValue> {
        memo.lock().unwrap().get(key).cloned()
    }

    /// Memoized definitional value.
    pub fn get(&self, kind: Kind, alpha: i64, beta: i64, n: i64, k: i64) -> Result<RingValue> {
        if out_of_range(n, k) {
            return Ok(RingValue::zero());
        }
        let key = (kind, alpha, beta, n, k);
        if let Some(v) = Self::lookup(&self.def_memo, &key) {
            return Ok(v);
        }
        // Fill a whole row (first kind) or column (second kind) per evaluation.
        let mut memo_entries = Vec::new();
        match kind {
            Kind::First => {
                let e = elementary_all(&c_arguments(&self.weights, alpha, beta, n)?);
                for kk in 0..=n {
                    memo_entries.push(((kind, alpha, beta, n, kk), e[(n - kk) as usize].clone()));
                }
            }
            Kind::Second => {
                let h = homogeneous_upto((n - k) as usize, &s_arguments(&self.weights, alpha, beta, k)?);
                for (t, v) in h.into_iter().enumerate() {
                    memo_entries.push(((kind, alpha, beta, k + t as i64, k), v));
                }
            }
        }
        let mut memo = self.def_memo.lock().unwrap();
        for (key, v) in memo_entries {
            memo.insert(key, v);
        }
        Ok(memo[&key].clone())
    }

    pub fn c(&self, alpha: i64, beta: i64, n: i64, k: i64) -> Result<RingValue> {
        self.get(Kind::First, alpha, beta, n, k)
    }

    pub fn s(&self, alpha: i64, beta: i64, n: i64, k: i64) -> Result<RingValue> {
        self.get(Kind::Second, alpha, beta, n, k)
    }

    fn vw(&self, i: i64, j: i64) -> Result<RingValue> {
        self.weights.product(i, j)
    }

    /// `c[n,0] = v_{a+n-1} w_b v_{a+n-2} w_{b+1} ... v_a w_{b+n-1}`.
    pub fn c_initial(&self, alpha: i64, beta: i64, n: i64) -> Result<RingValue> {
        c_arguments(&self.weights, alpha, beta, n).map(|xs| xs.iter().product())
    }

    /// `S[n,0] = (v_a w_b)^n`.
    pub fn s_initial(&self, alpha: i64, beta: i64, n: i64) -> Result<RingValue> {
        Ok(self.vw(alpha, beta)?.pow(n as u32))
    }

    /// Value from the triangular recurrence and the initial values only:
    ///
    /// ```text
    /// c_{a,b}[n,k] = c_{a,b+1}[n-1,k-1] + v_{a+n-1} w_b c_{a,b+1}[n-1,k]
    /// S_{a,b}[n,k] = S_{a,b+1}[n-1,k-1] + v_{a+k} w_b S_{a,b}[n-1,k]
    /// ```
    pub fn triangular(&self, kind: Kind, alpha: i64, beta: i64, n: i64, k: i64) -> Result<RingValue> {
        if out_of_range(n, k) {
            return Ok(RingValue::zero());
        }
        if n == 0 {
            return Ok(RingValue::one());
        }
        let key = (kind, alpha, beta, n, k);
        if let Some(v) = Self::lookup(&self.tri_memo, &key) {
            return Ok(v);
        }
        let value = match kind {
            Kind::First => {
                self.triangular(kind, alpha, beta + 1, n - 1, k - 1)?
                    + self.vw(alpha + n - 1, beta)? * self.triangular(kind, alpha, beta + 1, n - 1, k)?
            }
            Kind::Second => {
                self.triangular(kind, alpha, beta + 1, n - 1, k - 1)?
                    + self.vw(alpha + k, beta)? * self.triangular(kind, alpha, beta, n - 1, k)?
            }
        };
        self.tri_memo.lock().unwrap().insert(key, value.clone());
        Ok(value)
    }

    pub fn c_tri(&self, alpha: i64, beta: i64, n: i64, k: i64) -> Result<RingValue> {
        self.triangular(Kind::First, alpha, beta, n, k)
    }

    pub fn s_tri(&self, alpha: i64, beta: i64, n: i64, k: i64) -> Result<RingValue> {
        self.triangular(Kind::Second, alpha, beta, n, k)
    }

    /// Value at `[n, k]` from the vertical recurrence (applied with `n-1, k-1`),
    /// bottoming out at the initial values `[0, k]` and `[n, 0]`:
    ///
    /// ```text
    /// c_{a,b}[n+1,k+1] = sum_{j=k}^{n} (v_{a+n} w_b ... v_{a+j+1} w_{b+n-j-1}) c_{a,b+n-j+1}[j,k]
    /// S_{a,b}[n+1,k+1] = sum_{j=k}^{n} (v_{a+k+1} w_b)^{n-j} S_{a,b+1}[j,k]
    /// ```
    pub fn vertical(&self, kind: Kind, alpha: i64, beta: i64, n: i64, k: i64) -> Result<RingValue> {
        if out_of_range(n, k) {
            return Ok(RingValue::zero());
        }
        if n == 0 {
            return Ok(RingValue::one());
        }
        if k == 0 {
            return match kind {
                Kind::First => self.c_initial(alpha, beta, n),
                Kind::Second => self.s_initial(alpha, beta, n),
            };
        }
        let key = (kind, alpha, beta, n, k);
        if let Some(v) = Self::lookup(&self.vert_memo, &key) {
            return Ok(v);
        }
        let (n1, k1) = (n - 1, k - 1);
        let mut acc = RingValue::zero();
        match kind {
            Kind::First => {
                // prod_{t=0}^{n1-j-1} v_{a+n1-t} w_{b+t}, built up as j decreases
                let mut prefix = RingValue::one();
                for j in (k1..=n1).rev() {
                    if j < n1 {
                        let t = n1 - j - 1;
                        prefix *= self.vw(alpha + n1 - t, beta + t)?;
                    }
                    acc += &prefix * self.vertical(kind, alpha, beta + n1 - j + 1, j, k1)?;
                }
            }
            Kind::Second => {
                let ratio = self.vw(alpha + k1 + 1, beta)?;
                for j in k1..=n1 {
                    acc += ratio.pow((n1 - j) as u32) * self.vertical(kind, alpha, beta + 1, j, k1)?;
                }
            }
        }
        self.vert_memo.lock().unwrap().insert(key, acc.clone());
        Ok(acc)
    }

    pub fn c_vertical(&self, alpha: i64, beta: i64, n: i64, k: i64) -> Result<RingValue> {
        self.vertical(Kind::First, alpha, beta, n, k)
    }

    pub fn s_vertical(&self, alpha: i64, beta: i64, n: i64, k: i64) -> Result<RingValue> {
        self.vertical(Kind::Second, alpha, beta, n, k)
    }

    /// Value at `[n, k]` from the horizontal recurrence, whose right side
    /// reads the definitional row `n + 1` with `beta` shifted down:
    ///
    /// ```text
    /// c_{a,b}[n,k] = sum_{j=k}^{n} (-1)^{j-k} (v_{a+n} w_{b-1})^{j-k} c_{a,b-1}[n+1,j+1]
    /// S_{a,b}[n,k] = sum_{j=0}^{n-k} (-1)^j (v_{a+k+1} w_{b-1} ... v_{a+k+j} w_{b-j}) S_{a,b-j-1}[n+1,k+j+1]
    /// ```
    pub fn horizontal(&self, kind: Kind, alpha: i64, beta: i64, n: i64, k: i64) -> Result<RingValue> {
        if out_of_range(n, k) {
            return Ok(RingValue::zero());
        }
        let mut acc = RingValue::zero();
        match kind {
            Kind::First => {
                let ratio = self.vw(alpha + n, beta - 1)?;
                for j in k..=n {
                    let term = ratio.pow((j - k) as u32) * self.c(alpha, beta - 1, n + 1, j + 1)?;
                    acc += sign(j - k) * term;
                }
            }
            Kind::Second => {
                let mut prefix = RingValue::one();
                for j in 0..=(n - k) {
                    if j > 0 {
                        prefix *= self.vw(alpha + k + j, beta - j)?;
                    }
                    let term = &prefix * self.s(alpha, beta - j - 1, n + 1, k + j + 1)?;
                    acc += sign(j) * term;
                }
            }
        }
        Ok(acc)
    }

    pub fn c_horizontal(&self, alpha: i64, beta: i64, n: i64, k: i64) -> Result<RingValue> {
        self.horizontal(Kind::First, alpha, beta, n, k)
    }

    pub fn s_horizontal(&self, alpha: i64, beta: i64, n: i64, k: i64) -> Result<RingValue> {
        self.horizontal(Kind::Second, alpha, beta, n, k)
    }

    /// The dual horizontal relation obtained by exchanging `v` and `w`:
    ///
    /// ```text
    /// c_{a,b}[n,k] = sum_{j=k}^{n} (-1)^{j-k} (v_{a-1} w_{b+n})^{j-k} c_{a-1,b}[n+1,j+1]
    /// ```
    pub fn c_horizontal_dual(&self, alpha: i64, beta: i64, n: i64, k: i64) -> Result<RingValue> {
        if out_of_range(n, k) {
            return Ok(RingValue::zero());
        }
        let ratio = self.vw(alpha - 1, beta + n)?;
        let mut acc = RingValue::zero();
        for j in k..=n {
            acc += sign(j - k) * ratio.pow((j - k) as u32) * self.c(alpha - 1, beta, n + 1, j + 1)?;
        }
        Ok(acc)
    }
}

/// `[x]^{(n)}_{a,b} = (x - v_{a+n-1} w_{b-n+1}) ... (x - v_a w_b)` as a polynomial in `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketPolynomial(RingValue);

impl BracketPolynomial {
    pub fn as_ring(&self) -> &RingValue {
        &self.0
    }

    pub fn into_ring(self) -> RingValue {
        self.0
    }

    pub fn degree(&self) -> i32 {
        self.0.max_degree(Var::X).unwrap_or(0)
    }

    pub fn leading_coefficient(&self) -> RingValue {
        self.0.coefficient(Var::X, self.degree())
    }

    pub fn coefficient(&self, k: i32) -> RingValue {
        self.0.coefficient(Var::X, k)
    }
}

pub fn bracket(n: i64, alpha: i64, beta: i64, weights: &WeightPair) -> Result<BracketPolynomial> {
    if n < 0 {
        return Err(Error::DomainViolation(format!("bracket degree {n} is negative")));
    }
    let x = RingValue::var(Var::X);
    let mut acc = RingValue::one();
    for j in 0..n {
        acc *= &x - weights.product(alpha + j, beta - j)?;
    }
    Ok(BracketPolynomial(acc))
}

/// Evaluates a named family at `alpha = beta = 0`.
///
/// Families are `<builtin>-first` or `<builtin>-second` for any builtin weight
/// pair (e.g. `b-stirling-second`, `noncentral(1)-first`); `pq-binomial` and
/// `q-binomial` alone denote the second kind.
pub fn special(family: &str, n: i64, k: i64) -> Result<RingValue> {
    let (name, kind) = if let Some(base) = family.strip_suffix("-first") {
        (base, Kind::First)
    } else if let Some(base) = family.strip_suffix("-second") {
        (base, Kind::Second)
    } else if family == "pq-binomial" || family == "q-binomial" {
        (family, Kind::Second)
    } else {
        return Err(Error::UnknownFamily(family.to_string()));
    };
    let weights = builtin(name).map_err(|_| Error::UnknownFamily(family.to_string()))?;
    def(kind, &weights, 0, 0, n, k)
}
