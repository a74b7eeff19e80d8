//! B-tableaux: 2 x s integer arrays with a nonincreasing top row and constant
//! column sum.
//!
//! `T_{a,b}[r,s]` holds the arrays whose tops lie in `a..=a+r`, whose bottoms
//! lie in `b..=b+r` and whose columns all sum to `a+b+r`. `Td_{a,b}[r,s]` is
//! the subset with distinct tops.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oracles::binomial;
use crate::ring::RingValue;
use crate::stirling::Kind;
use crate::weights::WeightPair;

pub const DEFAULT_CAP: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Column {
    pub top: i64,
    pub bottom: i64,
}

impl Column {
    pub fn new(top: i64, bottom: i64) -> Column {
        Column { top, bottom }
    }

    pub fn sum(&self) -> i64 {
        self.top + self.bottom
    }
}

/// Columns are kept with tops nonincreasing; ties are ordered by bottom.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BTableau {
    columns: Vec<Column>,
}

fn canonical_order(a: &Column, b: &Column) -> std::cmp::Ordering {
    b.top.cmp(&a.top).then(a.bottom.cmp(&b.bottom))
}

impl BTableau {
    pub fn empty() -> BTableau {
        BTableau::default()
    }

    /// Sorts the columns into canonical order.
    pub fn from_columns(mut columns: Vec<Column>) -> BTableau {
        columns.sort_by(canonical_order);
        BTableau { columns }
    }

    pub fn from_rows(tops: &[i64], bottoms: &[i64]) -> Result<BTableau> {
        if tops.len() != bottoms.len() {
            return Err(Error::DomainViolation(format!(
                "rows have different lengths {} and {}",
                tops.len(),
                bottoms.len()
            )));
        }
        Ok(BTableau::from_columns(tops.iter().zip(bottoms).map(|(&t, &b)| Column::new(t, b)).collect()))
    }

    pub fn columns(&self) -> &[Column] {
        &self.columns
    }

    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn tops(&self) -> Vec<i64> {
        self.columns.iter().map(|c| c.top).collect()
    }

    pub fn bottoms(&self) -> Vec<i64> {
        self.columns.iter().map(|c| c.bottom).collect()
    }

    /// Common column sum, `None` for the empty tableau or mixed sums.
    pub fn column_sum(&self) -> Option<i64> {
        let first = self.columns.first()?.sum();
        self.columns.iter().all(|c| c.sum() == first).then_some(first)
    }

    pub fn has_distinct_tops(&self) -> bool {
        self.columns.windows(2).all(|w| w[0].top != w[1].top)
    }

    pub fn is_in_t(&self, alpha: i64, beta: i64, r: i64) -> bool {
        if self.is_empty() {
            return r >= -1;
        }
        r >= 0
            && self.columns.iter().all(|c| {
                (alpha..=alpha + r).contains(&c.top)
                    && (beta..=beta + r).contains(&c.bottom)
                    && c.sum() == alpha + beta + r
            })
    }

    pub fn is_in_td(&self, alpha: i64, beta: i64, r: i64) -> bool {
        self.is_in_t(alpha, beta, r) && self.has_distinct_tops()
    }

    /// `prod_j v(top_j) w(bottom_j)`; the empty tableau weighs 1.
    pub fn weight(&self, weights: &WeightPair) -> Result<RingValue> {
        let mut acc = RingValue::one();
        for c in &self.columns {
            acc *= weights.product(c.top, c.bottom)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for BTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: Vec<i64>| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "[{};{}]", join(self.tops()), join(self.bottoms()))
    }
}

impl FromStr for BTableau {
    type Err = Error;

    /// Accepts `[3,1,0;2,4,5]`, `3,1,0;2,4,5` or `[[3,1,0],[2,4,5]]`.
    fn from_str(s: &str) -> Result<BTableau> {
        let bad = |msg: &str| Error::Parse { offset: 0, message: format!("tableau `{s}`: {msg}") };
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let rows: Vec<String> = if cleaned.starts_with("[[") {
            let inner = cleaned.trim_start_matches('[').trim_end_matches(']');
            inner.split("],[").map(str::to_string).collect()
        } else {
            let inner = cleaned.trim_start_matches('[').trim_end_matches(']');
            inner.split(';').map(str::to_string).collect()
        };
        if rows.len() != 2 {
            return Err(bad("expected two rows"));
        }
        let parse_row = |row: &str| -> Result<Vec<i64>> {
            if row.is_empty() {
                return Ok(Vec::new());
            }
            row.split(',').map(|x| x.parse::<i64>().map_err(|_| bad("entries must be integers"))).collect()
        };
        BTableau::from_rows(&parse_row(&rows[0])?, &parse_row(&rows[1])?)
    }
}

fn check_cap(count: &num_bigint::BigInt, cap: usize) -> Result<()> {
    if *count > num_bigint::BigInt::from(cap) {
        return Err(Error::EnumerationCapExceeded { cap });
    }
    Ok(())
}

fn enumerate(alpha: i64, beta: i64, r: i64, s: i64, distinct: bool, cap: usize) -> Result<Vec<BTableau>> {
    if s < 0 || (s > 0 && r < 0) || r < -1 {
        return Ok(Vec::new());
    }
    if s == 0 {
        return Ok(vec![BTableau::empty()]);
    }
    let count = if distinct { binomial(r + 1, s) } else { binomial(r + s, s) };
    check_cap(&count, cap)?;
    let sum = alpha + beta + r;
    let mut out = Vec::new();
    let mut tops = Vec::with_capacity(s as usize);
    // tops in lexicographic order, each entry at most the previous one
    fn rec(
        tops: &mut Vec<i64>,
        lo: i64,
        hi: i64,
        s: usize,
        distinct: bool,
        sum: i64,
        out: &mut Vec<BTableau>,
    ) {
        if tops.len() == s {
            out.push(BTableau {
                columns: tops.iter().map(|&t| Column::new(t, sum - t)).collect(),
            });
            return;
        }
        let upper = match tops.last() {
            Some(&prev) if distinct => prev - 1,
            Some(&prev) => prev,
            None => hi,
        };
        for t in lo..=upper {
            tops.push(t);
            rec(tops, lo, hi, s, distinct, sum, out);
            tops.pop();
        }
    }
    rec(&mut tops, alpha, alpha + r, s as usize, distinct, sum, &mut out);
    Ok(out)
}

pub fn enumerate_t(alpha: i64, beta: i64, r: i64, s: i64) -> Result<Vec<BTableau>> {
    enumerate_t_capped(alpha, beta, r, s, DEFAULT_CAP)
}

pub fn enumerate_t_capped(alpha: i64, beta: i64, r: i64, s: i64, cap: usize) -> Result<Vec<BTableau>> {
    enumerate(alpha, beta, r, s, false, cap)
}

pub fn enumerate_td(alpha: i64, beta: i64, r: i64, s: i64) -> Result<Vec<BTableau>> {
    enumerate_td_capped(alpha, beta, r, s, DEFAULT_CAP)
}

pub fn enumerate_td_capped(alpha: i64, beta: i64, r: i64, s: i64, cap: usize) -> Result<Vec<BTableau>> {
    enumerate(alpha, beta, r, s, true, cap)
}

/// Merges the columns of two compatible tableaux.
pub fn juxtapose(left: &BTableau, right: &BTableau) -> Result<BTableau> {
    if let (Some(a), Some(b)) = (left.column_sum(), right.column_sum()) {
        if a != b {
            return Err(Error::IncompatibleTableaux { left: a, right: b });
        }
    }
    let mut columns = left.columns.clone();
    columns.extend_from_slice(&right.columns);
    Ok(BTableau::from_columns(columns))
}

/// `{l ⊠ r : l in left, r in right}` as a multiset.
pub fn juxtapose_sets(left: &[BTableau], right: &[BTableau]) -> Result<Vec<BTableau>> {
    let mut out = Vec::with_capacity(left.len() * right.len());
    for l in left {
        for r in right {
            out.push(juxtapose(l, r)?);
        }
    }
    Ok(out)
}

/// Maps `Td_{a,b}[n-1,n-k]` onto `T_{a,b}[k,n-k]`: the `j`-th top (from 1)
/// drops by `n-k-j` and the bottom is refilled to the column sum `a+b+k`.
pub fn tau(t: &BTableau, alpha: i64, beta: i64, n: i64, k: i64) -> Result<BTableau> {
    if t.len() as i64 != n - k || !t.is_in_td(alpha, beta, n - 1) {
        return Err(Error::DomainViolation(format!("{t} is not in Td_{{{alpha},{beta}}}[{},{}]", n - 1, n - k)));
    }
    let s = n - k;
    let columns = t
        .columns
        .iter()
        .enumerate()
        .map(|(idx, c)| {
            let top = c.top - (s - (idx as i64 + 1));
            Column::new(top, alpha + beta + k - top)
        })
        .collect();
    Ok(BTableau { columns })
}

/// Inverse of [`tau`].
pub fn tau_inverse(t: &BTableau, alpha: i64, beta: i64, n: i64, k: i64) -> Result<BTableau> {
    if t.len() as i64 != n - k || !t.is_in_t(alpha, beta, k) {
        return Err(Error::DomainViolation(format!("{t} is not in T_{{{alpha},{beta}}}[{k},{}]", n - k)));
    }
    let s = n - k;
    let columns = t
        .columns
        .iter()
        .enumerate()
        .map(|(idx, c)| {
            let top = c.top + (s - (idx as i64 + 1));
            Column::new(top, alpha + beta + n - 1 - top)
        })
        .collect();
    Ok(BTableau { columns })
}

/// `tau` is injective on `Td_{a,b}[n-1,n-k]`, lands in `T_{a,b}[k,n-k]`,
/// covers it, and `tau_inverse` undoes it.
pub fn tau_check(alpha: i64, beta: i64, n: i64, k: i64) -> Result<bool> {
    let source = enumerate_td(alpha, beta, n - 1, n - k)?;
    let mut image = Vec::with_capacity(source.len());
    for t in &source {
        let u = tau(t, alpha, beta, n, k)?;
        if !u.is_in_t(alpha, beta, k) || &tau_inverse(&u, alpha, beta, n, k)? != t {
            return Ok(false);
        }
        image.push(u);
    }
    Ok(same_multiset(image, enumerate_t(alpha, beta, k, n - k)?))
}

/// The tableaux whose weights sum to `c[n,k]` (first kind) or `S[n,k]` (second kind).
pub fn stirling_tableaux(kind: Kind, n: i64, k: i64, alpha: i64, beta: i64) -> Result<Vec<BTableau>> {
    if n < 0 || k < 0 || k > n {
        return Ok(Vec::new());
    }
    match kind {
        Kind::First => enumerate_td(alpha, beta, n - 1, n - k),
        Kind::Second => enumerate_t(alpha, beta, k, n - k),
    }
}

pub fn weight_sum(kind: Kind, n: i64, k: i64, alpha: i64, beta: i64, weights: &WeightPair) -> Result<RingValue> {
    let mut acc = RingValue::zero();
    for t in stirling_tableaux(kind, n, k, alpha, beta)? {
        acc += t.weight(weights)?;
    }
    Ok(acc)
}

fn same_multiset(mut a: Vec<BTableau>, mut b: Vec<BTableau>) -> bool {
    a.sort();
    b.sort();
    a == b
}

/// Splits by whether a column `rho` is present:
///
/// ```text
/// Td_{a,b}[n-1,n-k] = Td_{a,b+1}[n-2,n-k] ∪ ({[a+n-1; b]} ⊠ Td_{a,b+1}[n-2,n-k-1])
/// T_{a,b}[k,n-k]    = T_{a,b+1}[k-1,n-k]  ∪ ({[a+k; b]}   ⊠ T_{a,b}[k,n-k-1])
/// ```
///
/// Both sides are compared as multisets, so the union is checked to be disjoint too.
pub fn trra_split_check(kind: Kind, alpha: i64, beta: i64, n: i64, k: i64) -> Result<bool> {
    let (whole, without, rho, rest) = match kind {
        Kind::First => (
            enumerate_td(alpha, beta, n - 1, n - k)?,
            enumerate_td(alpha, beta + 1, n - 2, n - k)?,
            Column::new(alpha + n - 1, beta),
            enumerate_td(alpha, beta + 1, n - 2, n - k - 1)?,
        ),
        Kind::Second => (
            enumerate_t(alpha, beta, k, n - k)?,
            enumerate_t(alpha, beta + 1, k - 1, n - k)?,
            Column::new(alpha + k, beta),
            enumerate_t(alpha, beta, k, n - k - 1)?,
        ),
    };
    let mut union = without;
    union.extend(juxtapose_sets(&[BTableau::from_columns(vec![rho])], &rest)?);
    Ok(same_multiset(whole, union))
}

/// Checks the disjoint decomposition behind the convolution identities:
///
/// ```text
/// Td_{a,b}[m1+m2-1, m1+m2-n] = ⋃_{k=0}^{n} Td_{a+m2,b}[m1-1, m1-n+k] ⊠ Td_{a,b+m1}[m2-1, m2-k]
/// T_{a,b}[n, m1+m2-n]        = ⋃_{k=0}^{n} T_{a+k,b}[n-k, m1-n+k]   ⊠ T_{a,b+n-k}[k, m2-k]
/// ```
pub fn hereitis_check(kind: Kind, alpha: i64, beta: i64, m1: i64, m2: i64, n: i64) -> Result<bool> {
    let whole = match kind {
        Kind::First => enumerate_td(alpha, beta, m1 + m2 - 1, m1 + m2 - n)?,
        Kind::Second => enumerate_t(alpha, beta, n, m1 + m2 - n)?,
    };
    let mut union = Vec::new();
    for k in 0..=n {
        let (left, right) = match kind {
            Kind::First => (
                enumerate_td(alpha + m2, beta, m1 - 1, m1 - n + k)?,
                enumerate_td(alpha, beta + m1, m2 - 1, m2 - k)?,
            ),
            Kind::Second => (
                enumerate_t(alpha + k, beta, n - k, m1 - n + k)?,
                enumerate_t(alpha, beta + n - k, k, m2 - k)?,
            ),
        };
        union.extend(juxtapose_sets(&left, &right)?);
    }
    Ok(same_multiset(whole, union))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::builtin;

    fn tab(s: &str) -> BTableau {
        s.parse().unwrap()
    }

    #[test]
    fn enumeration_examples() {
        let t = enumerate_t(0, 0, 1, 1).unwrap();
        assert_eq!(t, vec![tab("[0;1]"), tab("[1;0]")]);
        assert_eq!(enumerate_t(0, 0, 2, 2).unwrap().len(), 6);
        assert_eq!(enumerate_t(0, 0, 5, 0).unwrap(), vec![BTableau::empty()]);
        assert_eq!(enumerate_td(0, 0, 3, 2).unwrap().len(), 6);
        assert!(enumerate_td(0, 0, 0, 2).unwrap().is_empty());
        assert!(enumerate_td(0, 0, 5, 3).unwrap().contains(&tab("[3,1,0;2,4,5]")));
        assert!(enumerate_t(0, 0, -1, 1).unwrap().is_empty());
        assert!(enumerate_t(0, 0, 2, -1).unwrap().is_empty());
        assert_eq!(enumerate_t(0, 0, 0, 1).unwrap(), vec![tab("[0;0]")]);
    }

    #[test]
    fn enumeration_respects_cap() {
        assert!(matches!(
            enumerate_t_capped(0, 0, 10, 10, 1000),
            Err(Error::EnumerationCapExceeded { cap: 1000 })
        ));
        assert_eq!(enumerate_t_capped(0, 0, 3, 3, 20).unwrap().len(), 20);
    }

    #[test]
    fn weights_of_shapes() {
        let v = builtin("classical").unwrap();
        assert_eq!(BTableau::empty().weight(&v).unwrap(), RingValue::one());
        let fig = crate::weights::WeightPair::new(
            crate::weights::WeightSpec::polynomial([4, 2]),
            crate::weights::WeightSpec::constant(1),
        );
        assert_eq!(tab("[3,1,1;2,4,4]").weight(&fig).unwrap(), RingValue::int(360));
        let pq = builtin("pq-binomial").unwrap();
        assert_eq!(tab("[1;0]").weight(&pq).unwrap(), "p".parse().unwrap());
    }

    #[test]
    fn juxtaposition() {
        let a = tab("[2;0]");
        assert_eq!(juxtapose(&BTableau::empty(), &a).unwrap(), a);
        assert_eq!(juxtapose(&a, &tab("[1;1]")).unwrap(), tab("[2,1;0,1]"));
        assert_eq!(juxtapose(&tab("[1;1]"), &a).unwrap(), tab("[2,1;0,1]"));
        assert!(matches!(
            juxtapose(&a, &tab("[2;1]")),
            Err(Error::IncompatibleTableaux { left: 2, right: 3 })
        ));
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau(&tab("[3,1,0;2,4,5]"), 0, 0, 6, 3).unwrap(), tab("[1,0,0;2,3,3]"));
        assert_eq!(tau(&BTableau::empty(), 0, 0, 3, 3).unwrap(), BTableau::empty());
        let mut image: Vec<BTableau> =
            enumerate_td(0, 0, 3, 2).unwrap().iter().map(|t| tau(t, 0, 0, 4, 2).unwrap()).collect();
        image.sort();
        let mut target = enumerate_t(0, 0, 2, 2).unwrap();
        target.sort();
        assert_eq!(image, target);
        assert!(tau(&tab("[1,1;2,2]"), 0, 0, 4, 2).is_err());
        assert_eq!(tau_inverse(&tab("[1,0,0;2,3,3]"), 0, 0, 6, 3).unwrap(), tab("[3,1,0;2,4,5]"));
    }

    #[test]
    fn weight_sum_examples() {
        let c = builtin("classical").unwrap();
        assert_eq!(weight_sum(Kind::Second, 2, 1, 0, 0, &c).unwrap(), RingValue::one());
        assert_eq!(weight_sum(Kind::First, 3, 3, 0, 0, &c).unwrap(), RingValue::one());
        assert_eq!(weight_sum(Kind::First, 0, 0, 0, 0, &c).unwrap(), RingValue::one());
        let pq = builtin("pq-binomial").unwrap();
        assert_eq!(
            weight_sum(Kind::Second, 4, 2, 0, 0, &pq).unwrap(),
            "p^4 + p^3*q + 2*p^2*q^2 + p*q^3 + q^4".parse().unwrap()
        );
    }

    #[test]
    fn proof_partitions() {
        assert!(trra_split_check(Kind::First, 0, 0, 4, 2).unwrap());
        assert!(trra_split_check(Kind::Second, 0, 0, 4, 2).unwrap());
        assert!(hereitis_check(Kind::First, 0, 0, 2, 2, 2).unwrap());
        assert!(hereitis_check(Kind::Second, 0, 0, 2, 2, 2).unwrap());
        assert!(hereitis_check(Kind::First, 0, 0, 3, 0, 2).unwrap());
        assert!(hereitis_check(Kind::First, 0, 0, 0, 3, 2).unwrap());
    }

    #[test]
    fn display_and_parse() {
        let t = tab("[[3,1,0],[2,4,5]]");
        assert_eq!(t.to_string(), "[3,1,0;2,4,5]");
        assert_eq!(BTableau::empty().to_string(), "[;]");
        assert_eq!(tab("[;]"), BTableau::empty());
        assert!("[1,2;3]".parse::<BTableau>().is_err());
    }
}
