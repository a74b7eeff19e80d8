//! Generating functions as polynomials in `x`.

use crate::error::Result;
use crate::oracles::{choose2, pq_binomial};
use crate::report::Equation;
use crate::ring::{RingValue, Var};
use crate::stirling::{bracket, c_def, s_arguments, s_def};
use crate::weights::{builtin, sign, WeightPair};

fn x() -> RingValue {
    RingValue::var(Var::X)
}

fn xpow(k: i64) -> RingValue {
    x().pow(k as u32)
}

/// Coefficients of `x^0..x^{len-1}` of a polynomial in `x`.
pub fn coefficients(poly: &RingValue, len: usize) -> Vec<RingValue> {
    (0..len).map(|d| poly.coefficient(Var::X, d as i32)).collect()
}

/// `(x + v_{a+n-1} w_b)(x + v_{a+n-2} w_{b+1}) ... (x + v_a w_{b+n-1})`.
pub fn cgf_product(n: i64, alpha: i64, beta: i64, weights: &WeightPair) -> Result<RingValue> {
    let mut acc = RingValue::one();
    for j in 0..n.max(0) {
        acc *= x() + weights.product(alpha + n - 1 - j, beta + j)?;
    }
    Ok(acc)
}

/// `x^k / prod_{j=0}^{k} (1 - x v_{a+k-j} w_{b+j})` truncated after `x^order`.
pub fn sgf_series(k: i64, order: i64, alpha: i64, beta: i64, weights: &WeightPair) -> Result<RingValue> {
    if k < 0 || order < k {
        return Ok(RingValue::zero());
    }
    let len = (order - k + 1) as usize;
    let mut series = vec![RingValue::zero(); len];
    series[0] = RingValue::one();
    for t in s_arguments(weights, alpha, beta, k)? {
        // multiply by 1 / (1 - t x)
        for d in 1..len {
            let add = &t * &series[d - 1];
            series[d] += add;
        }
    }
    Ok(series
        .into_iter()
        .enumerate()
        .map(|(d, c)| c * xpow(k + d as i64))
        .sum())
}

/// `sum_k S_{a,b-k}[n,k] [x]^{(k)}_{a,b}` against `x^n`.
pub fn basis_expand_check(n: i64, alpha: i64, beta: i64, weights: &WeightPair) -> Result<Equation> {
    let mut rhs = RingValue::zero();
    for k in 0..=n {
        rhs += s_def(weights, alpha, beta - k, n, k)? * bracket(k, alpha, beta, weights)?.into_ring();
    }
    Ok(Equation::new(xpow(n), rhs))
}

fn pq_weights() -> WeightPair {
    builtin("pq-binomial").expect("builtin exists")
}

fn p() -> RingValue {
    RingValue::var(Var::P)
}

fn q() -> RingValue {
    RingValue::var(Var::Q)
}

/// `sum_k (pq)^{C(n-k,2)} [n k]_{p,q} x^k` against the first-kind product for `V = (p^i, q^i)`.
pub fn pq_first_kind_product(n: i64) -> Result<Equation> {
    let lhs: RingValue = (0..=n)
        .map(|k| (p() * q()).pow(choose2(n - k) as u32) * pq_binomial(n, k) * xpow(k))
        .sum();
    Ok(Equation::new(lhs, cgf_product(n, 0, 0, &pq_weights())?))
}

/// The first-kind product for `V = (p^i, q^i)` after `p -> p/q`, `q -> 1` and
/// scaling by `q^{C(n,2)}`, against `prod_j (p^{n-1-j} + x q^{n-1-j})`.
///
/// The scaled product is also compared with `sum_k p^{C(n-k,2)} q^{C(k,2)} [n k]_{p,q} x^k`.
pub fn pq_specialization_first(n: i64) -> Result<(Equation, Equation)> {
    let sub = [(Var::P, p() * q().pow_signed(-1).expect("q is a unit")), (Var::Q, RingValue::one())];
    let lhs = cgf_product(n, 0, 0, &pq_weights())?.substitute_pairs(&sub)? * q().pow(choose2(n) as u32);
    let product: RingValue = (0..n)
        .map(|j| p().pow((n - 1 - j) as u32) + x() * q().pow((n - 1 - j) as u32))
        .product();
    let sum: RingValue = (0..=n)
        .map(|k| {
            p().pow(choose2(n - k) as u32) * q().pow(choose2(k) as u32) * pq_binomial(n, k) * xpow(k)
        })
        .sum();
    Ok((Equation::new(lhs.clone(), product), Equation::new(lhs, sum)))
}

/// Second-kind series for `V = (p^i, q^i)` truncated at `x^order` against `sum_n [n k]_{p,q} x^n`.
pub fn pq_specialization_second(k: i64, order: i64) -> Result<Equation> {
    let lhs = sgf_series(k, order, 0, 0, &pq_weights())?;
    let rhs: RingValue = (k..=order).map(|n| pq_binomial(n, k) * xpow(n)).sum();
    Ok(Equation::new(lhs, rhs))
}

/// `q^{C(n,2)} x^n` against
/// `sum_k (-1)^{n-k} q^{C(n-k,2)} S_{0,0}[n,k] (x q^{k-1} + p^{k-1}) ... (x + 1)` for `V = (p^i, q^i)`.
pub fn pq_specialization_basis(n: i64) -> Result<Equation> {
    let weights = pq_weights();
    let lhs = q().pow(choose2(n) as u32) * xpow(n);
    let mut rhs = RingValue::zero();
    for k in 0..=n {
        let factors: RingValue = (0..k).map(|t| x() * q().pow(t as u32) + p().pow(t as u32)).product();
        rhs += sign(n - k) * q().pow(choose2(n - k) as u32) * s_def(&weights, 0, 0, n, k)? * factors;
    }
    Ok(Equation::new(lhs, rhs))
}

/// Coefficient of `x^k` in [`cgf_product`] against `c_def`, for every `k`.
pub fn cgf_coefficients_check(n: i64, alpha: i64, beta: i64, weights: &WeightPair) -> Result<Vec<Equation>> {
    let poly = cgf_product(n, alpha, beta, weights)?;
    (0..=n)
        .map(|k| Ok(Equation::new(poly.coefficient(Var::X, k as i32), c_def(weights, alpha, beta, n, k)?)))
        .collect()
}

/// Coefficient of `x^n` in [`sgf_series`] against `s_def`, for `k <= n <= order`.
pub fn sgf_coefficients_check(
    k: i64,
    order: i64,
    alpha: i64,
    beta: i64,
    weights: &WeightPair,
) -> Result<Vec<Equation>> {
    let series = sgf_series(k, order, alpha, beta, weights)?;
    (k..=order)
        .map(|n| Ok(Equation::new(series.coefficient(Var::X, n as i32), s_def(weights, alpha, beta, n, k)?)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rv(s: &str) -> RingValue {
        s.parse().unwrap()
    }

    #[test]
    fn cgf_examples() {
        let c = builtin("classical").unwrap();
        assert_eq!(cgf_product(3, 0, 0, &c).unwrap(), rv("x^3 + 3*x^2 + 2*x"));
        assert_eq!(cgf_product(2, 0, 0, &pq_weights()).unwrap(), rv("x^2 + (p+q)*x + p*q"));
        let j = builtin("jacobi").unwrap();
        assert_eq!(cgf_product(1, 2, 1, &j).unwrap(), x() + j.product(2, 1).unwrap());
    }

    #[test]
    fn sgf_examples() {
        let c = builtin("classical").unwrap();
        let s = sgf_series(2, 4, 0, 0, &c).unwrap();
        assert_eq!(coefficients(&s, 5), [0, 0, 1, 3, 7].map(RingValue::int).to_vec());
        assert_eq!(sgf_series(1, 3, 0, 0, &pq_weights()).unwrap(), rv("x + (p+q)*x^2 + (p^2+p*q+q^2)*x^3"));
        let m = builtin("merris(2)").unwrap();
        let s0 = sgf_series(0, 5, 1, 0, &m).unwrap();
        let base = m.product(1, 0).unwrap();
        for n in 0..=5 {
            assert_eq!(s0.coefficient(Var::X, n), base.pow(n as u32));
        }
    }

    #[test]
    fn basis_expansion_small() {
        let c = builtin("classical").unwrap();
        for n in 0..5 {
            assert!(basis_expand_check(n, 0, 0, &c).unwrap().holds());
        }
        assert!(basis_expand_check(4, 0, 0, &pq_weights()).unwrap().holds());
    }

    #[test]
    fn pq_specializations_small() {
        for n in 0..6 {
            assert!(pq_first_kind_product(n).unwrap().holds());
            let (a, b) = pq_specialization_first(n).unwrap();
            assert!(a.holds() && b.holds(), "n={n}");
            assert!(pq_specialization_second(n.min(3), 6).unwrap().holds());
            assert!(pq_specialization_basis(n).unwrap().holds(), "n={n}");
        }
    }
}
