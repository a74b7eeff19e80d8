//! Elementary and complete homogeneous symmetric functions by dynamic programming.

use crate::ring::RingValue;

/// `e_0, e_1, ..., e_len` of `xs`.
pub fn elementary_all(xs: &[RingValue]) -> Vec<RingValue> {
    let mut e = vec![RingValue::zero(); xs.len() + 1];
    e[0] = RingValue::one();
    // e_t(x_0..x_r) = e_t(x_0..x_{r-1}) + x_r e_{t-1}(x_0..x_{r-1}), updated in place from the top.
    for (r, x) in xs.iter().enumerate() {
        for t in (1..=r + 1).rev() {
            let add = x * &e[t - 1];
            e[t] += add;
        }
    }
    e
}

/// `e_t(xs)`; zero for `t < 0` or `t > xs.len()`.
pub fn elementary(t: i64, xs: &[RingValue]) -> RingValue {
    if t < 0 || t as usize > xs.len() {
        return RingValue::zero();
    }
    let t = t as usize;
    let mut e = vec![RingValue::zero(); t + 1];
    e[0] = RingValue::one();
    for (r, x) in xs.iter().enumerate() {
        for s in (1..=t.min(r + 1)).rev() {
            let add = x * &e[s - 1];
            e[s] += add;
        }
    }
    e.pop().unwrap()
}

/// `h_0, h_1, ..., h_max_t` of `xs`.
pub fn homogeneous_upto(max_t: usize, xs: &[RingValue]) -> Vec<RingValue> {
    let mut h = vec![RingValue::zero(); max_t + 1];
    h[0] = RingValue::one();
    if xs.is_empty() {
        return h;
    }
    // h_t(x_0..x_r) = h_t(x_0..x_{r-1}) + x_r h_{t-1}(x_0..x_r), updated in place from the bottom.
    for x in xs {
        for t in 1..=max_t {
            let add = x * &h[t - 1];
            h[t] += add;
        }
    }
    h
}

/// `h_t(xs)`; zero for `t < 0`, and for `t > 0` over the empty list.
pub fn homogeneous(t: i64, xs: &[RingValue]) -> RingValue {
    if t < 0 {
        return RingValue::zero();
    }
    homogeneous_upto(t as usize, xs).pop().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<RingValue> {
        v.iter().map(|&i| RingValue::int(i)).collect()
    }

    fn rv(s: &str) -> RingValue {
        s.parse().unwrap()
    }

    #[test]
    fn elementary_examples() {
        assert_eq!(elementary(0, &ints(&[5, 7])), RingValue::one());
        assert_eq!(elementary(0, &[]), RingValue::one());
        assert_eq!(elementary(2, &ints(&[0, 1, 2, 3])), RingValue::int(11));
        assert_eq!(elementary(3, &ints(&[1, 1])), RingValue::zero());
        assert_eq!(elementary(-1, &ints(&[1, 1])), RingValue::zero());
    }

    #[test]
    fn homogeneous_examples() {
        assert_eq!(homogeneous(2, &[RingValue::one(), rv("q")]), rv("1 + q + q^2"));
        assert_eq!(
            homogeneous(2, &[rv("p^2"), rv("p*q"), rv("q^2")]),
            rv("p^4 + p^3*q + 2*p^2*q^2 + p*q^3 + q^4")
        );
        assert_eq!(homogeneous(5, &[]), RingValue::zero());
        assert_eq!(homogeneous(0, &[]), RingValue::one());
        assert_eq!(homogeneous(-3, &ints(&[2])), RingValue::zero());
    }

    #[test]
    fn all_variants_agree_with_single() {
        let xs = vec![rv("p"), rv("q - 1"), RingValue::int(3), rv("z*p")];
        let e = elementary_all(&xs);
        let h = homogeneous_upto(6, &xs);
        assert_eq!(e.len(), 5);
        for (t, et) in e.iter().enumerate() {
            assert_eq!(*et, elementary(t as i64, &xs));
        }
        for (t, ht) in h.iter().enumerate() {
            assert_eq!(*ht, homogeneous(t as i64, &xs));
        }
    }
}
