//! Triangular matrices of V-Stirling numbers: orthogonality, inverse pairs,
//! convolutions, LU factorizations and determinants.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::oracles::{choose2, choose3, q_integer};
use crate::report::{Equation, Outcome, Report};
use crate::ring::{RingValue, Var};
use crate::stirling::{Kind, StirlingTable};
use crate::weights::{builtin, sign};

/// Dense square matrix over the ring. Equality ignores provenance.
#[derive(Debug, Clone, Serialize)]
pub struct RingMatrix {
    rows: Vec<Vec<RingValue>>,
    #[serde(skip_serializing_if = "String::is_empty")]
    provenance: String,
}

impl PartialEq for RingMatrix {
    fn eq(&self, other: &RingMatrix) -> bool {
        self.rows == other.rows
    }
}

impl Eq for RingMatrix {}

impl RingMatrix {
    pub fn new(rows: Vec<Vec<RingValue>>) -> RingMatrix {
        assert!(!rows.is_empty(), "matrix dimension must be at least 1");
        assert!(rows.iter().all(|r| r.len() == rows.len()), "matrix must be square");
        RingMatrix { rows, provenance: String::new() }
    }

    pub fn from_fn<F>(dim: usize, mut f: F) -> Result<RingMatrix>
    where
        F: FnMut(i64, i64) -> Result<RingValue>,
    {
        let mut rows = Vec::with_capacity(dim);
        for i in 0..dim {
            let mut row = Vec::with_capacity(dim);
            for j in 0..dim {
                row.push(f(i as i64, j as i64)?);
            }
            rows.push(row);
        }
        Ok(RingMatrix::new(rows))
    }

    pub fn identity(dim: usize) -> RingMatrix {
        RingMatrix::from_fn(dim, |i, j| Ok(if i == j { RingValue::one() } else { RingValue::zero() }))
            .expect("identity construction is infallible")
    }

    /// Attaches a description of the index map, e.g. `S_{a,b-j}[s+i+j,s+j]`.
    pub fn with_provenance(mut self, provenance: impl Into<String>) -> RingMatrix {
        self.provenance = provenance.into();
        self
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &RingValue {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<RingValue>] {
        &self.rows
    }

    pub fn transpose(&self) -> RingMatrix {
        let n = self.dim();
        RingMatrix::new((0..n).map(|i| (0..n).map(|j| self.rows[j][i].clone()).collect()).collect())
    }

    pub fn mul(&self, other: &RingMatrix) -> RingMatrix {
        let n = self.dim();
        assert_eq!(n, other.dim(), "dimension mismatch");
        let mut rows = vec![vec![RingValue::zero(); n]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                for k in 0..n {
                    if !self.rows[i][k].is_zero() && !other.rows[k][j].is_zero() {
                        *cell += &self.rows[i][k] * &other.rows[k][j];
                    }
                }
            }
        }
        RingMatrix::new(rows)
    }

    /// `M v` for a column vector `v`.
    pub fn apply(&self, v: &[RingValue]) -> Vec<RingValue> {
        assert_eq!(self.dim(), v.len(), "dimension mismatch");
        self.rows
            .iter()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == RingMatrix::identity(self.dim())
    }

    pub fn is_lower_triangular(&self) -> bool {
        (0..self.dim()).all(|i| (i + 1..self.dim()).all(|j| self.rows[i][j].is_zero()))
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.transpose().is_lower_triangular()
    }

    /// Fraction-free Gaussian elimination with row pivoting. Returns `None`
    /// when an intermediate division is not exact in the polynomial ring.
    pub fn det_bareiss(&self) -> Option<RingValue> {
        let n = self.dim();
        let mut m = self.rows.clone();
        let mut negate = false;
        let mut prev = RingValue::one();
        for k in 0..n.saturating_sub(1) {
            if m[k][k].is_zero() {
                let pivot = (k + 1..n).find(|&i| !m[i][k].is_zero())?;
                m.swap(k, pivot);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = num.div_exact(&prev)?;
                }
                m[i][k] = RingValue::zero();
            }
            prev = m[k][k].clone();
        }
        let det = m[n - 1][n - 1].clone();
        Some(if negate { -det } else { det })
    }

    /// Laplace expansion along rows, memoized on the set of remaining columns.
    pub fn det_cofactor(&self) -> RingValue {
        let n = self.dim();
        assert!(n <= 20, "cofactor expansion is limited to small matrices");
        let mut memo: HashMap<u32, RingValue> = HashMap::new();
        self.minor(0, (1u32 << n) - 1, &mut memo)
    }

    fn minor(&self, row: usize, cols: u32, memo: &mut HashMap<u32, RingValue>) -> RingValue {
        if row == self.dim() {
            return RingValue::one();
        }
        if let Some(v) = memo.get(&cols) {
            return v.clone();
        }
        let mut acc = RingValue::zero();
        let mut position = 0;
        for j in 0..self.dim() {
            if cols & (1 << j) == 0 {
                continue;
            }
            let entry = &self.rows[row][j];
            if !entry.is_zero() {
                let sub = self.minor(row + 1, cols & !(1 << j), memo);
                let term = entry * sub;
                if position % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            position += 1;
        }
        memo.insert(cols, acc.clone());
        acc
    }

    /// Bareiss when every division is exact, cofactor expansion otherwise.
    pub fn det(&self) -> RingValue {
        self.det_bareiss().unwrap_or_else(|| self.det_cofactor())
    }
}

impl fmt::Display for RingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> =
            self.rows.iter().map(|r| r.iter().map(|v| v.to_string()).collect()).collect();
        let n = self.dim();
        let widths: Vec<usize> = (0..n).map(|j| cells.iter().map(|r| r[j].len()).max().unwrap_or(0)).collect();
        for row in &cells {
            let line: Vec<String> = row.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
            writeln!(f, "[ {} ]", line.join("  "))?;
        }
        Ok(())
    }
}

/// `sum_{k=m}^{n} (-1)^{n-k} c_{a,b+m+1}[n,k] S_{a,b+n}[k,m]` against `delta_{n,m}`.
pub fn orthorth(t: &StirlingTable, alpha: i64, beta: i64, n: i64, m: i64) -> Result<Equation> {
    orthorth_shifted(t, alpha, beta, n, m, 0)
}

/// The shifted form
/// `sum_{k=m}^{n} (-1)^{n-k} c_{a,b+m+1}[n+g,k+g] S_{a,b+n}[k+g,m+g]` against `delta_{n,m}`.
pub fn orthorth_shifted(t: &StirlingTable, alpha: i64, beta: i64, n: i64, m: i64, gamma: i64) -> Result<Equation> {
    let mut acc = RingValue::zero();
    for k in m..=n {
        let c = t.c(alpha, beta + m + 1, n + gamma, k + gamma)?;
        if c.is_zero() {
            continue;
        }
        acc += sign(n - k) * c * t.s(alpha, beta + n, k + gamma, m + gamma)?;
    }
    Ok(Equation::new(acc, delta(n, m)))
}

/// `sum_{k=m}^{n} S_{a,b}[n,k] (-1)^{k-m} c_{a,b+1}[k,m]` against `delta_{n,m}`.
pub fn betterorth(t: &StirlingTable, alpha: i64, beta: i64, n: i64, m: i64) -> Result<Equation> {
    let mut acc = RingValue::zero();
    for k in m..=n {
        acc += t.s(alpha, beta, n, k)? * sign(k - m) * t.c(alpha, beta + 1, k, m)?;
    }
    Ok(Equation::new(acc, delta(n, m)))
}

/// `sum_{k=m}^{n} S_{a,b-k}[n,k] (-1)^{k-m} c_{a,b-k+1}[k,m]` against `delta_{n,m}`.
///
/// With the shift tied to `k` this holds for every weight pair; the constant
/// shift of [`betterorth`] needs `w` to be constant.
pub fn betterorth_shifted(t: &StirlingTable, alpha: i64, beta: i64, n: i64, m: i64) -> Result<Equation> {
    let mut acc = RingValue::zero();
    for k in m..=n {
        acc += t.s(alpha, beta - k, n, k)? * sign(k - m) * t.c(alpha, beta - k + 1, k, m)?;
    }
    Ok(Equation::new(acc, delta(n, m)))
}

/// `sum_{k=m}^{n} (-1)^{k-m} p^{C(k-m,2)} q^{C(n-k,2)} [n k]_{p,q} [k m]_{p,q}` against
/// `delta_{n,m}`, with both binomials read off the second kind for `V = (p^i, q^i)`.
pub fn betterorth_pq(n: i64, m: i64) -> Result<Equation> {
    let t = StirlingTable::new(builtin("pq-binomial")?);
    let p = RingValue::var(Var::P);
    let q = RingValue::var(Var::Q);
    let mut acc = RingValue::zero();
    for k in m..=n {
        acc += sign(k - m)
            * p.pow(choose2(k - m) as u32)
            * q.pow(choose2(n - k) as u32)
            * t.s(0, 0, n, k)?
            * t.s(0, 0, k, m)?;
    }
    Ok(Equation::new(acc, delta(n, m)))
}

fn delta(n: i64, m: i64) -> RingValue {
    if n == m {
        RingValue::one()
    } else {
        RingValue::zero()
    }
}

/// Both orthogonality relations and the `k`-shifted second relation for
/// `0 <= m <= n <= n_max`, plus the `gamma` form for `gamma` in `{-1, 1, 2}`
/// wherever `m + gamma >= 0`.
pub fn orthogonality_check(t: &StirlingTable, n_max: i64, alpha: i64, beta: i64) -> Report {
    let mut report = Report::new("orthogonality", t.weights().label());
    for n in 0..=n_max {
        for m in 0..=n {
            let params = vec![("alpha", alpha), ("beta", beta), ("n", n), ("m", m)];
            report.record("orthorth", params.clone(), orthorth(t, alpha, beta, n, m));
            report.record("betterorth", params.clone(), betterorth(t, alpha, beta, n, m));
            report.record("betterorth-shifted", params.clone(), betterorth_shifted(t, alpha, beta, n, m));
            for gamma in [-1, 1, 2] {
                if m + gamma < 0 {
                    continue;
                }
                let mut p = params.clone();
                p.push(("gamma", gamma));
                report.record("orthorth-shifted", p, orthorth_shifted(t, alpha, beta, n, m, gamma));
            }
        }
    }
    report
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PairKind {
    /// `<(-1)^{n-k} c_{a,b-n+1}[n,k]>` and `<S_{a,b-k}[n,k]>`.
    Refmat,
    /// `<(-1)^{n-k} c_{a,b+1}[n,k]>` and `<S_{a,b}[n,k]>`.
    Refmatt,
}

fn pair_matrices(kind: PairKind, r: i64, alpha: i64, beta: i64, t: &StirlingTable) -> Result<(RingMatrix, RingMatrix)> {
    let dim = (r + 1) as usize;
    let (a, b) = match kind {
        PairKind::Refmat => (
            RingMatrix::from_fn(dim, |n, k| Ok(sign(n - k) * t.c(alpha, beta - n + 1, n, k)?))?
                .with_provenance("(-1)^(n-k) c_{a,b-n+1}[n,k]"),
            RingMatrix::from_fn(dim, |n, k| t.s(alpha, beta - k, n, k))?.with_provenance("S_{a,b-k}[n,k]"),
        ),
        PairKind::Refmatt => (
            RingMatrix::from_fn(dim, |n, k| Ok(sign(n - k) * t.c(alpha, beta + 1, n, k)?))?
                .with_provenance("(-1)^(n-k) c_{a,b+1}[n,k]"),
            RingMatrix::from_fn(dim, |n, k| t.s(alpha, beta, n, k))?.with_provenance("S_{a,b}[n,k]"),
        ),
    };
    Ok((a, b))
}

/// Builds an inverse pair of dimension `r + 1` and checks both products.
pub fn inverse_pair(kind: PairKind, r: i64, alpha: i64, beta: i64, t: &StirlingTable) -> Result<(RingMatrix, RingMatrix)> {
    if r < 0 {
        return Err(Error::DomainViolation(format!("matrix size r = {r} is negative")));
    }
    let (a, b) = pair_matrices(kind, r, alpha, beta, t)?;
    for (name, product) in [("A*B", a.mul(&b)), ("B*A", b.mul(&a))] {
        if !product.is_identity() {
            return Err(Error::NotInverse(format!("{kind:?} r={r} alpha={alpha} beta={beta}: {name} is\n{product}")));
        }
    }
    Ok((a, b))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    /// `a_n = sum (-1)^{n-k} c_{a,b-n+1}[n,k] b_k` and `b_n = sum S_{a,b-k}[n,k] a_k`.
    First,
    /// `a_n = sum S_{a,b}[n,k] b_k` and `b_n = sum (-1)^{n-k} c_{a,b+1}[n,k] a_k`.
    Second,
    /// `a_n = sum_{k<=r} (-1)^{n-k} c_{a,b-k+1}[k,n] b_k` and `b_n = sum_{k<=r} S_{a,b-n}[k,n] a_k`.
    Transposed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// From `b` to `a`.
    Forward,
    /// From `a` to `b`.
    Backward,
}

/// Applies one side of an inverse relation to a sequence of length `r + 1`.
pub fn inverse_relation_apply(
    relation: Relation,
    direction: Direction,
    seq: &[RingValue],
    alpha: i64,
    beta: i64,
    t: &StirlingTable,
) -> Result<Vec<RingValue>> {
    if seq.is_empty() {
        return Ok(Vec::new());
    }
    let r = seq.len() as i64 - 1;
    let (first, second) = match relation {
        Relation::First | Relation::Transposed => pair_matrices(PairKind::Refmat, r, alpha, beta, t)?,
        // the S matrix maps b to a here
        Relation::Second => {
            let (c, s) = pair_matrices(PairKind::Refmatt, r, alpha, beta, t)?;
            (s, c)
        }
    };
    let (first, second) = if relation == Relation::Transposed {
        (first.transpose(), second.transpose())
    } else {
        (first, second)
    };
    Ok(match direction {
        Direction::Forward => first.apply(seq),
        Direction::Backward => second.apply(seq),
    })
}

/// `c_{a,b}[m1+m2,n] = sum_k c_{a+m2,b}[m1,n-k] c_{a,b+m1}[m2,k]` and
/// `S_{a,b}[m1+m2,n] = sum_k S_{a+k,b}[m1,n-k] S_{a,b+n-k}[m2,k]`.
pub fn convolution(t: &StirlingTable, kind: Kind, m1: i64, m2: i64, n: i64, alpha: i64, beta: i64) -> Result<Equation> {
    let lhs = t.get(kind, alpha, beta, m1 + m2, n)?;
    let mut rhs = RingValue::zero();
    for k in 0..=n {
        rhs += match kind {
            Kind::First => t.c(alpha + m2, beta, m1, n - k)? * t.c(alpha, beta + m1, m2, k)?,
            Kind::Second => t.s(alpha + k, beta, m1, n - k)? * t.s(alpha, beta + n - k, m2, k)?,
        };
    }
    Ok(Equation::new(lhs, rhs))
}

/// The two-index form with `n = r + s`; only `-s <= k <= r` can contribute.
///
/// ```text
/// c_{a,b}[m1+m2,r+s] = sum_k c_{a+m2,b}[m1,r-k] c_{a,b+m1}[m2,s+k]
/// S_{a,b}[m1+m2,r+s] = sum_k S_{a+s+k,b}[m1,r-k] S_{a,b+r-k}[m2,s+k]
/// ```
#[allow(clippy::too_many_arguments)]
pub fn gould_srivastava(
    t: &StirlingTable,
    kind: Kind,
    m1: i64,
    m2: i64,
    r: i64,
    s: i64,
    alpha: i64,
    beta: i64,
) -> Result<Equation> {
    let lhs = t.get(kind, alpha, beta, m1 + m2, r + s)?;
    let mut rhs = RingValue::zero();
    for k in -s..=r {
        rhs += match kind {
            Kind::First => t.c(alpha + m2, beta, m1, r - k)? * t.c(alpha, beta + m1, m2, s + k)?,
            Kind::Second => t.s(alpha + s + k, beta, m1, r - k)? * t.s(alpha, beta + r - k, m2, s + k)?,
        };
    }
    Ok(Equation::new(lhs, rhs))
}

/// The convolution at `(m1, m2, n)` together with every split `n = r + s`
/// for `-1 <= r <= n + 1`.
pub fn convolution_check(t: &StirlingTable, kind: Kind, m1: i64, m2: i64, n: i64, alpha: i64, beta: i64) -> Result<bool> {
    if !convolution(t, kind, m1, m2, n, alpha, beta)?.holds() {
        return Ok(false);
    }
    for r in -1..=n + 1 {
        if !gould_srivastava(t, kind, m1, m2, r, n - r, alpha, beta)?.holds() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `M = L U` for the Hankel-like matrices of dimension `r + 1`.
#[derive(Debug, Clone, Serialize)]
pub struct LuFactorization {
    pub m: RingMatrix,
    pub l: RingMatrix,
    pub u: RingMatrix,
}

impl LuFactorization {
    pub fn holds(&self) -> bool {
        self.l.is_lower_triangular() && self.u.is_upper_triangular() && self.l.mul(&self.u) == self.m
    }
}

fn hankel_like(t: &StirlingTable, kind: Kind, r: i64, s: i64, alpha: i64, beta: i64) -> Result<RingMatrix> {
    let dim = (r + 1) as usize;
    Ok(match kind {
        Kind::First => RingMatrix::from_fn(dim, |i, j| t.c(alpha - i, beta - j, s + i + j, s + j))?
            .with_provenance("c_{a-i,b-j}[s+i+j,s+j]"),
        Kind::Second => RingMatrix::from_fn(dim, |i, j| t.s(alpha, beta - j, s + i + j, s + j))?
            .with_provenance("S_{a,b-j}[s+i+j,s+j]"),
    })
}

pub fn lu_check(t: &StirlingTable, kind: Kind, r: i64, s: i64, alpha: i64, beta: i64) -> Result<LuFactorization> {
    if r < 0 || s < 0 {
        return Err(Error::DomainViolation(format!("LU factorization needs r, s >= 0 (got r={r}, s={s})")));
    }
    let dim = (r + 1) as usize;
    let m = hankel_like(t, kind, r, s, alpha, beta)?;
    let (l, u) = match kind {
        Kind::First => (
            RingMatrix::from_fn(dim, |i, k| t.c(alpha - i, beta, s + i, s + k))?.with_provenance("c_{a-i,b}[s+i,s+k]"),
            RingMatrix::from_fn(dim, |k, j| t.c(alpha + s, beta - j, j, j - k))?.with_provenance("c_{a+s,b-j}[j,j-k]"),
        ),
        Kind::Second => (
            RingMatrix::from_fn(dim, |i, k| t.s(alpha, beta - k, s + i, s + k))?.with_provenance("S_{a,b-k}[s+i,s+k]"),
            RingMatrix::from_fn(dim, |k, j| t.s(alpha + s + k, beta - j, j, j - k))?
                .with_provenance("S_{a+s+k,b-j}[j,j-k]"),
        ),
    };
    Ok(LuFactorization { m, l, u })
}

/// A determinant next to its closed form.
#[derive(Debug, Clone, Serialize)]
pub struct DetCheck {
    pub matrix: RingMatrix,
    pub det: RingValue,
    pub formula: RingValue,
}

impl DetCheck {
    pub fn equal(&self) -> bool {
        self.det == self.formula
    }
}

/// Determinant of the Hankel-like matrix against
/// `prod_k prod_{t<k} v_{a+s+k-1-t} w_{b-k+t}` (first kind) or
/// `prod_k (v_{a+s+k} w_{b-k})^k` (second kind).
pub fn det_closed_form(t: &StirlingTable, kind: Kind, r: i64, s: i64, alpha: i64, beta: i64) -> Result<DetCheck> {
    if r < 0 || s < 0 {
        return Err(Error::DomainViolation(format!("determinant needs r, s >= 0 (got r={r}, s={s})")));
    }
    let matrix = hankel_like(t, kind, r, s, alpha, beta)?;
    let w = t.weights();
    let mut formula = RingValue::one();
    for k in 0..=r {
        match kind {
            Kind::First => {
                for j in 0..k {
                    formula *= w.product(alpha + s + k - 1 - j, beta - k + j)?;
                }
            }
            Kind::Second => formula *= w.product(alpha + s + k, beta - k)?.pow(k as u32),
        }
    }
    let det = matrix.det();
    Ok(DetCheck { matrix, det, formula })
}

/// `det <q^{C(s+j,2)} S_q[s+i+j,s+j]> = q^{C(s+r+1,3) - C(s,3)} prod_k [s+k]_q^k`
/// with `S_q` the second kind for `V = ([i]_q, 1)`.
pub fn ehrenborg_det_check(r: i64, s: i64) -> Result<DetCheck> {
    if r < 0 || s < 0 {
        return Err(Error::DomainViolation(format!("determinant needs r, s >= 0 (got r={r}, s={s})")));
    }
    let t = StirlingTable::new(builtin("q-stirling")?);
    let q = RingValue::var(Var::Q);
    let matrix = RingMatrix::from_fn((r + 1) as usize, |i, j| {
        Ok(q.pow(choose2(s + j) as u32) * t.s(0, 0, s + i + j, s + j)?)
    })?
    .with_provenance("q^C(s+j,2) S_q[s+i+j,s+j]");
    let mut formula = q.pow((choose3(s + r + 1) - choose3(s)) as u32);
    for k in 0..=r {
        formula *= q_integer(s + k).pow(k as u32);
    }
    let det = matrix.det();
    Ok(DetCheck { matrix, det, formula })
}

/// Records a determinant check, including agreement of the two elimination methods.
pub fn record_det(report: &mut Report, identity: &str, params: Vec<(&'static str, i64)>, check: Result<DetCheck>) {
    match check {
        Ok(d) => {
            report.record(identity, params.clone(), Ok(Equation::new(d.det.clone(), d.formula.clone())));
            if d.matrix.dim() <= 6 {
                report.record(
                    "det-path-independence",
                    params,
                    Ok(Equation::new(d.matrix.det_cofactor(), d.det)),
                );
            }
        }
        Err(e) => report.push(identity, params, Outcome::from_error(&e)),
    }
}
