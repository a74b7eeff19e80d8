use std::collections::BTreeMap;

use num_bigint::BigInt;
use proptest::prelude::*;
use vstirling::stirling::def;
use vstirling::symfunc::{elementary, homogeneous};
use vstirling::weights::WeightSpec;
use vstirling::{Kind, Monomial, RingValue, StirlingTable, Var, WeightPair};

fn ring_value() -> impl Strategy<Value = RingValue> {
    let term = (-5i64..=5, -2i32..=2, -2i32..=2, -1i32..=1, 0i32..=2);
    prop::collection::vec(term, 0..5).prop_map(|terms| {
        RingValue::from_terms(
            terms.into_iter().map(|(c, p, q, z, x)| (Monomial::from_exponents([p, q, z, x]), BigInt::from(c))),
        )
    })
}

fn small_ints(len: std::ops::Range<usize>) -> impl Strategy<Value = Vec<RingValue>> {
    prop::collection::vec((-4i64..=6).prop_map(RingValue::int), len)
}

/// Both weights tabulated on -12..=24 with arbitrary integer values.
fn table_pair() -> impl Strategy<Value = WeightPair> {
    let vals = || prop::collection::vec(-3i64..=5, 37);
    (vals(), vals()).prop_map(|(v, w)| {
        let tab = |xs: Vec<i64>| {
            let map: BTreeMap<i64, RingValue> =
                xs.into_iter().enumerate().map(|(i, x)| (i as i64 - 12, RingValue::int(x))).collect();
            WeightSpec::table(map, None)
        };
        WeightPair::new(tab(v), tab(w)).named("random-table")
    })
}

fn kind() -> impl Strategy<Value = Kind> {
    prop_oneof![Just(Kind::First), Just(Kind::Second)]
}

proptest! {
    #[test]
    fn ring_addition_laws(a in ring_value(), b in ring_value(), c in ring_value()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &RingValue::zero(), a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn ring_multiplication_laws(a in ring_value(), b in ring_value(), c in ring_value()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &RingValue::one(), a.clone());
    }

    #[test]
    fn ring_render_parse_round_trip(a in ring_value()) {
        let back: RingValue = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn ring_power_matches_repeated_product(a in ring_value(), e in 0u32..4) {
        let mut acc = RingValue::one();
        for _ in 0..e {
            acc = &acc * &a;
        }
        prop_assert_eq!(a.pow(e), acc);
    }

    #[test]
    fn substitution_is_a_ring_homomorphism(
        a in ring_value(),
        b in ring_value(),
        sign in prop_oneof![Just(1i64), Just(-1i64)],
        ze in -2i64..=2,
        xv in ring_value(),
    ) {
        let pairs = [
            (Var::P, RingValue::int(sign)),
            (Var::Q, RingValue::var_pow(Var::Z, ze).unwrap()),
            (Var::X, xv),
        ];
        let sub = |v: &RingValue| v.substitute_pairs(&pairs).unwrap();
        prop_assert_eq!(sub(&(&a + &b)), &sub(&a) + &sub(&b));
        prop_assert_eq!(sub(&(&a * &b)), &sub(&a) * &sub(&b));
    }

    #[test]
    fn symmetric_functions_ignore_argument_order(xs in small_ints(0..6), t in 0i64..6, seed in any::<u64>()) {
        let mut ys = xs.clone();
        let len = ys.len();
        if len > 1 {
            ys.rotate_left((seed as usize) % len);
            ys.swap(0, len - 1);
        }
        prop_assert_eq!(elementary(t, &xs), elementary(t, &ys));
        prop_assert_eq!(homogeneous(t, &xs), homogeneous(t, &ys));
    }

    #[test]
    fn symmetric_functions_match_brute_force(xs in small_ints(0..6), t in 0usize..5) {
        let n = xs.len();
        let mut e = RingValue::zero();
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize == t {
                let mut prod = RingValue::one();
                for (i, x) in xs.iter().enumerate() {
                    if mask & (1 << i) != 0 {
                        prod = &prod * x;
                    }
                }
                e = &e + &prod;
            }
        }
        prop_assert_eq!(elementary(t as i64, &xs), e);

        // Multisets of size t as nondecreasing index sequences.
        fn multisets(xs: &[RingValue], start: usize, t: usize) -> RingValue {
            if t == 0 {
                return RingValue::one();
            }
            let mut acc = RingValue::zero();
            for i in start..xs.len() {
                acc = &acc + &(&xs[i] * &multisets(xs, i, t - 1));
            }
            acc
        }
        prop_assert_eq!(homogeneous(t as i64, &xs), multisets(&xs, 0, t));
    }

    #[test]
    fn duality_swaps_weights_and_shifts(w in table_pair(), kind in kind(), a in -2i64..=2, b in -2i64..=2, n in 0i64..6, k in 0i64..6) {
        prop_assume!(k <= n);
        let lhs = def(kind, &w, a, b, n, k).unwrap();
        let rhs = def(kind, &w.swap(), b, a, n, k).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn recurrences_agree_with_definition(w in table_pair(), kind in kind(), a in -2i64..=2, b in -2i64..=2, n in 1i64..6, k in 0i64..6) {
        prop_assume!(k <= n);
        let t = StirlingTable::new(w.clone());
        let reference = def(kind, &w, a, b, n, k).unwrap();
        prop_assert_eq!(t.get(kind, a, b, n, k).unwrap(), reference.clone());
        prop_assert_eq!(t.triangular(kind, a, b, n, k).unwrap(), reference.clone());
        prop_assert_eq!(t.vertical(kind, a, b, n, k).unwrap(), reference.clone());
        prop_assert_eq!(t.horizontal(kind, a, b, n, k).unwrap(), reference.clone());
        if kind == Kind::First {
            prop_assert_eq!(t.c_horizontal_dual(a, b, n, k).unwrap(), reference);
        }
    }
}
