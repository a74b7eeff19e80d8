//! Independent reference values computed without the symmetric-function layer.
//!
//! Each function here uses a textbook recurrence or an explicit expansion so
//! that it can serve as a cross-check for [`crate::stirling`].

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::ring::{RingValue, Var};

fn triangle<F>(nmax: i64, mut step: F) -> Vec<Vec<BigInt>>
where
    F: FnMut(&[Vec<BigInt>], i64, i64) -> BigInt,
{
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for n in 0..=nmax.max(0) {
        let mut row = Vec::new();
        for k in 0..=n {
            let v = if n == 0 { BigInt::one() } else { step(&rows, n, k) };
            row.push(v);
        }
        rows.push(row);
    }
    rows
}

fn at(rows: &[Vec<BigInt>], n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    rows[n as usize][k as usize].clone()
}

/// Unsigned Stirling numbers of the first kind, `c(n,k) = c(n-1,k-1) + (n-1) c(n-1,k)`.
pub fn classical_first_triangle(nmax: i64) -> Vec<Vec<BigInt>> {
    triangle(nmax, |r, n, k| at(r, n - 1, k - 1) + BigInt::from(n - 1) * at(r, n - 1, k))
}

/// Stirling numbers of the second kind, `S(n,k) = S(n-1,k-1) + k S(n-1,k)`.
pub fn classical_second_triangle(nmax: i64) -> Vec<Vec<BigInt>> {
    triangle(nmax, |r, n, k| at(r, n - 1, k - 1) + BigInt::from(k) * at(r, n - 1, k))
}

/// Legendre-Stirling numbers, `LS(n,k) = LS(n-1,k-1) + k(k+1) LS(n-1,k)`.
pub fn legendre_stirling_triangle(nmax: i64) -> Vec<Vec<BigInt>> {
    triangle(nmax, |r, n, k| at(r, n - 1, k - 1) + BigInt::from(k * (k + 1)) * at(r, n - 1, k))
}

pub fn classical_first(n: i64, k: i64) -> BigInt {
    at(&classical_first_triangle(n), n, k)
}

pub fn classical_second(n: i64, k: i64) -> BigInt {
    at(&classical_second_triangle(n), n, k)
}

pub fn legendre_stirling(n: i64, k: i64) -> BigInt {
    at(&legendre_stirling_triangle(n), n, k)
}

/// Binomial coefficient by Pascal's rule; zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let mut row = vec![BigInt::one()];
    for _ in 0..n {
        let mut next = vec![BigInt::one(); row.len() + 1];
        for i in 1..row.len() {
            next[i] = &row[i - 1] + &row[i];
        }
        row = next;
    }
    row[k as usize].clone()
}

/// Pascal-type recursion `[n,k] = a(n,k) [n-1,k-1] + b(n,k) [n-1,k]` over the ring.
fn ring_pascal<F>(n: i64, k: i64, coeffs: F) -> RingValue
where
    F: Fn(i64, i64) -> (RingValue, RingValue),
{
    if n < 0 || k < 0 || k > n {
        return RingValue::zero();
    }
    let mut row = vec![RingValue::one()];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m as usize + 1);
        for j in 0..=m {
            let (a, b) = coeffs(m, j);
            let left = if j >= 1 { a * &row[(j - 1) as usize] } else { RingValue::zero() };
            let right = if j < m { b * &row[j as usize] } else { RingValue::zero() };
            next.push(left + right);
        }
        row = next;
    }
    row[k as usize].clone()
}

/// Gaussian binomial `[n k]_q` via `[n,k] = [n-1,k-1] + q^k [n-1,k]`.
pub fn gaussian_binomial(n: i64, k: i64) -> RingValue {
    let q = RingValue::var(Var::Q);
    ring_pascal(n, k, |_, j| (RingValue::one(), q.pow(j as u32)))
}

/// `[n k]_{p,q}` via `[n,k] = p^{n-k} [n-1,k-1] + q^k [n-1,k]`.
pub fn pq_binomial(n: i64, k: i64) -> RingValue {
    let p = RingValue::var(Var::P);
    let q = RingValue::var(Var::Q);
    ring_pascal(n, k, |m, j| (p.pow((m - j) as u32), q.pow(j as u32)))
}

/// `[n]_q = 1 + q + ... + q^{n-1}` for `n >= 0`.
pub fn q_integer(n: i64) -> RingValue {
    let q = RingValue::var(Var::Q);
    (0..n.max(0)).map(|i| q.pow(i as u32)).sum()
}

/// The two-indexed array `T_{k,j}` behind the b-Stirling generating functions.
pub fn b_stirling_t(k: i64, j: i64) -> i64 {
    if k >= j {
        ((j + 2) / 2) * (k - j + (j + 3) / 2)
    } else {
        0
    }
}

/// `S_b(n,k)`: coefficient of `x^n` in `x^k / prod_{j=0}^{k} (1 - T_{k-2,j} x)`.
pub fn b_stirling_second(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    // Power series in x, truncated at degree n - k, multiplied by each geometric factor.
    let len = (n - k + 1) as usize;
    let mut series = vec![BigInt::zero(); len];
    series[0] = BigInt::one();
    for j in 0..=k {
        let t = BigInt::from(b_stirling_t(k - 2, j));
        for d in 1..len {
            let prev = series[d - 1].clone();
            series[d] += &t * prev;
        }
    }
    series[len - 1].clone()
}

/// `c_b(n,k)`: coefficient of `x^k` in `prod_{j=0}^{n-1} (x + T_{n-3,j})`.
pub fn b_stirling_first(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    // poly[d] is the coefficient of x^d.
    let mut poly = vec![BigInt::one()];
    for j in 0..n {
        let t = BigInt::from(b_stirling_t(n - 3, j));
        let mut next = vec![BigInt::zero(); poly.len() + 1];
        for (d, c) in poly.iter().enumerate() {
            next[d + 1] += c;
            next[d] += &t * c;
        }
        poly = next;
    }
    poly[k as usize].clone()
}

/// `C(n,2)` as a machine integer.
pub fn choose2(n: i64) -> i64 {
    n * (n - 1) / 2
}

/// `C(n,3)` as a machine integer; zero for `n < 3`.
pub fn choose3(n: i64) -> i64 {
    if n < 3 {
        0
    } else {
        n * (n - 1) * (n - 2) / 6
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rv(s: &str) -> RingValue {
        s.parse().unwrap()
    }

    #[test]
    fn classical_values() {
        assert_eq!(classical_first(4, 2), BigInt::from(11));
        assert_eq!(classical_first(3, 1), BigInt::from(2));
        assert_eq!(classical_second(4, 2), BigInt::from(7));
        assert_eq!(classical_second(10, 3), BigInt::from(9330));
        assert_eq!(classical_first(10, 3), BigInt::from(1172700));
        assert_eq!(legendre_stirling(3, 2), BigInt::from(8));
        assert_eq!(legendre_stirling(2, 1), BigInt::from(2));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(10, 4), BigInt::from(210));
        assert_eq!(binomial(3, 4), BigInt::zero());
        assert_eq!(gaussian_binomial(4, 2), rv("1 + q + 2*q^2 + q^3 + q^4"));
        assert_eq!(pq_binomial(2, 1), rv("p + q"));
        assert_eq!(pq_binomial(4, 2), rv("p^4 + p^3*q + 2*p^2*q^2 + p*q^3 + q^4"));
        assert_eq!(q_integer(3), rv("1 + q + q^2"));
        assert_eq!(q_integer(0), RingValue::zero());
    }

    #[test]
    fn b_stirling_array() {
        // T_{1,j} for j = 0..3
        let t: Vec<i64> = (0..4).map(|j| b_stirling_t(1, j)).collect();
        assert_eq!(t, vec![2, 2, 0, 0]);
        assert_eq!(b_stirling_second(4, 3), BigInt::from(4));
        assert_eq!(b_stirling_second(3, 3), BigInt::one());
        // first row of the first kind: prod (x + T_{-2,0}) = x
        assert_eq!(b_stirling_first(1, 1), BigInt::one());
        assert_eq!(b_stirling_first(1, 0), BigInt::zero());
    }
}
