use num_bigint::BigInt;
use vstirling::combinat::{
    count_01v, enumerate_01v, enumerate_part, enumerate_perm, enumerate_signed_partitions, tuple_decomposition_check,
    TupleFamily,
};
use vstirling::genfunc::{basis_expand_check, cgf_product, sgf_series};
use vstirling::matrices::{
    convolution, det_closed_form, ehrenborg_det_check, inverse_pair, lu_check, orthorth, PairKind, RingMatrix,
};
use vstirling::oracles::pq_binomial;
use vstirling::stirling::{bracket, c_def, s_def, special};
use vstirling::symfunc::{elementary, homogeneous};
use vstirling::tableaux::{
    enumerate_t, enumerate_td, hereitis_check, juxtapose, tau, tau_check, trra_split_check, weight_sum, BTableau,
};
use vstirling::weights::{builtin, WeightSpec};
use vstirling::{Error, Kind, RingValue, StirlingTable, Var, WeightPair};

fn rv(s: &str) -> RingValue {
    s.parse().unwrap()
}

fn int(n: i64) -> RingValue {
    RingValue::int(n)
}

fn tab(s: &str) -> BTableau {
    s.parse().unwrap()
}

fn classical() -> WeightPair {
    builtin("classical").unwrap()
}

fn pq() -> WeightPair {
    builtin("pq-binomial").unwrap()
}

fn ints(rows: &[&[i64]]) -> RingMatrix {
    RingMatrix::new(rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect())
}

#[test]
fn ring_arithmetic() {
    assert_eq!(int(2) + int(3), int(5));
    assert_eq!(rv("p") + RingValue::zero(), rv("p"));
    assert_eq!(rv("p+q") + rv("p-q"), rv("2*p"));
    assert_eq!(rv("p+q") * rv("p+q"), rv("p^2 + 2*p*q + q^2"));
    assert_eq!(rv("p") * rv("p^-1"), RingValue::one());
    assert_eq!(rv("3*p*q^-2 + z") * RingValue::zero(), RingValue::zero());
}

#[test]
fn ring_substitution() {
    let one = [(Var::P, RingValue::one()), (Var::Q, RingValue::one())];
    assert_eq!(rv("p^2 + p*q").substitute_pairs(&one).unwrap(), int(2));
    assert_eq!(rv("p + q").substitute_pairs(&[(Var::P, rv("q"))]).unwrap(), rv("2*q"));
    assert!(matches!(
        rv("p^-1").substitute_pairs(&[(Var::P, RingValue::zero())]),
        Err(Error::NonInvertibleSubstitution { var: Var::P })
    ));
}

#[test]
fn weight_evaluation() {
    assert_eq!(WeightSpec::polynomial([4, 2]).eval(3).unwrap(), int(10));
    assert_eq!(WeightSpec::monomial(Var::P).eval(-1).unwrap(), rv("p^-1"));
    assert_eq!(WeightSpec::pq_integer().eval(2).unwrap(), rv("p + q"));
    let c = classical();
    assert_eq!(c.swap().v, c.w);
    assert_eq!(c.swap().swap().v, c.v);
    assert_eq!(pq().swap().v, WeightSpec::monomial(Var::Q));
    assert_eq!(builtin("b-stirling").unwrap().w, WeightSpec::identity());
    assert_eq!(builtin("legendre").unwrap().v(3).unwrap(), int(12));
}

#[test]
fn symmetric_functions() {
    assert_eq!(elementary(0, &[int(5), int(7)]), RingValue::one());
    assert_eq!(elementary(2, &[int(0), int(1), int(2), int(3)]), int(11));
    assert_eq!(elementary(3, &[int(1), int(1)]), RingValue::zero());
    assert_eq!(homogeneous(2, &[int(1), rv("q")]), rv("1 + q + q^2"));
    let args = [rv("p^2"), rv("p*q"), rv("q^2")];
    assert_eq!(homogeneous(2, &args), rv("p^4 + p^3*q + 2*p^2*q^2 + p*q^3 + q^4"));
    assert_eq!(homogeneous(2, &args), pq_binomial(4, 2));
    assert_eq!(homogeneous(5, &[]), RingValue::zero());
}

#[test]
fn definitions_and_recurrences() {
    let c = classical();
    assert_eq!(c_def(&c, 0, 0, 4, 2).unwrap(), int(11));
    assert_eq!(c_def(&c, 0, 0, 5, 5).unwrap(), RingValue::one());
    assert_eq!(c_def(&pq(), 0, 0, 2, 0).unwrap(), rv("p*q"));
    assert_eq!(s_def(&c, 0, 0, 4, 2).unwrap(), int(7));
    assert_eq!(s_def(&pq(), 0, 0, 4, 2).unwrap(), pq_binomial(4, 2));
    let jac = builtin("jacobi").unwrap();
    assert_eq!(s_def(&jac, 1, 2, 3, 0).unwrap(), jac.product(1, 2).unwrap().pow(3));

    let tc = StirlingTable::new(c);
    let tp = StirlingTable::new(pq());
    assert_eq!(tp.s_tri(0, 0, 2, 1).unwrap(), rv("p + q"));
    assert_eq!(tc.c_tri(0, 0, 3, 1).unwrap(), int(2));
    assert_eq!(tc.c_tri(0, 0, 0, 0).unwrap(), RingValue::one());
    assert_eq!(tc.s_vertical(0, 0, 3, 2).unwrap(), int(3));
    assert_eq!(tc.c_vertical(0, 0, 4, 4).unwrap(), RingValue::one());
    assert_eq!(tp.s_vertical(0, 0, 2, 1).unwrap(), rv("p + q"));
    assert_eq!(tc.s_horizontal(0, 0, 3, 3).unwrap(), RingValue::one());
    assert_eq!(tc.c_horizontal(0, 0, 3, 1).unwrap(), int(2));
    assert_eq!(tc.s_horizontal(0, 0, 4, 2).unwrap(), int(7));
}

#[test]
fn brackets_and_special_values() {
    let c = classical();
    assert_eq!(bracket(0, 0, 0, &c).unwrap().into_ring(), RingValue::one());
    assert_eq!(bracket(1, 0, 0, &c).unwrap().into_ring(), rv("x"));
    assert_eq!(bracket(2, 0, 0, &pq()).unwrap().into_ring(), rv("(x - p*q^-1)*(x - 1)"));
    assert_eq!(special("b-stirling-second", 4, 3).unwrap(), int(4));
    assert_eq!(special("pq-binomial", 2, 1).unwrap(), rv("p + q"));
    assert_eq!(special("legendre-second", 2, 1).unwrap(), int(2));
}

#[test]
fn generating_functions() {
    let c = classical();
    assert_eq!(cgf_product(1, 2, 1, &c).unwrap(), rv("x + 2"));
    assert_eq!(cgf_product(3, 0, 0, &c).unwrap(), rv("x^3 + 3*x^2 + 2*x"));
    assert_eq!(cgf_product(2, 0, 0, &pq()).unwrap(), rv("x^2 + (p+q)*x + p*q"));
    let s = sgf_series(2, 4, 0, 0, &c).unwrap();
    assert_eq!(s, rv("x^2 + 3*x^3 + 7*x^4"));
    assert_eq!(sgf_series(1, 3, 0, 0, &pq()).unwrap(), rv("x + (p+q)*x^2 + (p^2+p*q+q^2)*x^3"));
    assert!(basis_expand_check(0, 0, 0, &c).unwrap().holds());
    assert!(basis_expand_check(1, 2, -1, &pq()).unwrap().holds());
    assert!(basis_expand_check(4, 0, 0, &pq()).unwrap().holds());
}

#[test]
fn orthogonality_and_inverse_pairs() {
    let tp = StirlingTable::new(pq());
    let tb = StirlingTable::new(builtin("b-stirling").unwrap());
    for n in 0..=6 {
        for m in 0..=n {
            let delta = if n == m { RingValue::one() } else { RingValue::zero() };
            assert_eq!(orthorth(&tp, 0, 0, n, m).unwrap().lhs, delta);
            assert_eq!(orthorth(&tb, 0, 0, n, m).unwrap().lhs, delta);
        }
    }
    let tc = StirlingTable::new(classical());
    let (a, b) = inverse_pair(PairKind::Refmat, 0, 0, 0, &tc).unwrap();
    assert!(a.is_identity() && b.is_identity());
    assert!(inverse_pair(PairKind::Refmatt, 4, 0, 0, &tc).is_ok());
    assert!(inverse_pair(PairKind::Refmat, 3, 0, 0, &tp).is_ok());
}

#[test]
fn convolutions_lu_determinants() {
    let tc = StirlingTable::new(classical());
    let tp = StirlingTable::new(pq());
    let e = convolution(&tc, Kind::Second, 1, 2, 2, 0, 0).unwrap();
    assert_eq!((e.lhs.clone(), e.holds()), (int(3), true));
    assert!(convolution(&tc, Kind::First, 3, 0, 2, 0, 0).unwrap().holds());
    assert!(convolution(&tp, Kind::First, 3, 3, 4, 0, 0).unwrap().holds());
    assert!(convolution(&tp, Kind::Second, 3, 3, 4, 0, 0).unwrap().holds());

    let f = lu_check(&tc, Kind::Second, 1, 1, 0, 0).unwrap();
    assert_eq!(f.m, ints(&[&[1, 1], &[1, 3]]));
    assert_eq!(f.l, ints(&[&[1, 0], &[1, 1]]));
    assert_eq!(f.u, ints(&[&[1, 1], &[0, 2]]));
    assert!(f.holds());
    let f0 = lu_check(&tc, Kind::First, 0, 3, 0, 0).unwrap();
    assert!(f0.m.is_identity() && f0.l.is_identity() && f0.u.is_identity());
    assert!(lu_check(&tp, Kind::First, 2, 2, 0, 0).unwrap().holds());

    let d = det_closed_form(&tc, Kind::Second, 1, 1, 0, 0).unwrap();
    assert_eq!((d.det.clone(), d.formula.clone()), (int(2), int(2)));
    assert_eq!(det_closed_form(&tc, Kind::First, 0, 2, 0, 0).unwrap().det, RingValue::one());
    let tq = StirlingTable::new(builtin("q-stirling").unwrap());
    let dq = det_closed_form(&tq, Kind::Second, 2, 1, 0, 0).unwrap();
    assert_eq!(dq.det, rv("(1+q)*(1+q+q^2)^2"));
    assert!(dq.equal());
    assert_eq!(ehrenborg_det_check(0, 0).unwrap().det, RingValue::one());
    let e11 = ehrenborg_det_check(1, 1).unwrap();
    assert_eq!((e11.det.clone(), e11.equal()), (rv("q + q^2"), true));
    assert!(ehrenborg_det_check(2, 2).unwrap().equal());
}

#[test]
fn b_tableaux() {
    assert_eq!(enumerate_t(0, 0, 1, 1).unwrap(), vec![tab("[0;1]"), tab("[1;0]")]);
    assert_eq!(enumerate_t(0, 0, 2, 2).unwrap().len(), 6);
    assert_eq!(enumerate_t(0, 0, 4, 0).unwrap(), vec![BTableau::empty()]);
    assert_eq!(enumerate_td(0, 0, 3, 2).unwrap().len(), 6);
    assert!(enumerate_td(0, 0, 0, 2).unwrap().is_empty());

    let fig = WeightPair::new(WeightSpec::polynomial([4, 2]), WeightSpec::constant(1));
    assert_eq!(BTableau::empty().weight(&classical()).unwrap(), RingValue::one());
    assert_eq!(tab("[3,1,1;2,4,4]").weight(&fig).unwrap(), int(360));
    assert_eq!(tab("[1;0]").weight(&pq()).unwrap(), rv("p"));

    let t = tab("[2;0]");
    assert_eq!(juxtapose(&BTableau::empty(), &t).unwrap(), t);
    assert_eq!(juxtapose(&t, &tab("[1;1]")).unwrap(), tab("[2,1;0,1]"));
    assert!(matches!(juxtapose(&t, &tab("[2;1]")), Err(Error::IncompatibleTableaux { .. })));

    assert_eq!(tau(&tab("[3,1,0;2,4,5]"), 0, 0, 6, 3).unwrap(), tab("[1,0,0;2,3,3]"));
    assert_eq!(tau(&BTableau::empty(), 0, 0, 3, 3).unwrap(), BTableau::empty());
    assert!(tau_check(0, 0, 4, 2).unwrap());

    assert_eq!(weight_sum(Kind::Second, 2, 1, 0, 0, &classical()).unwrap(), int(1));
    assert_eq!(weight_sum(Kind::First, 3, 3, 0, 0, &classical()).unwrap(), int(1));
    assert_eq!(weight_sum(Kind::Second, 4, 2, 0, 0, &pq()).unwrap(), pq_binomial(4, 2));
    assert!(trra_split_check(Kind::First, 0, 0, 4, 2).unwrap());
    assert!(hereitis_check(Kind::First, 0, 0, 2, 2, 2).unwrap());
}

#[test]
fn zero_one_tableaux_and_colored_objects() {
    let fig = WeightPair::new(WeightSpec::polynomial([4, 2]), WeightSpec::constant(1));
    assert_eq!(count_01v(&tab("[3,1,1;2,4,4]"), &fig).unwrap(), BigInt::from(360));
    assert_eq!(count_01v(&tab("[2;0]"), &classical()).unwrap(), BigInt::from(2));
    assert_eq!(count_01v(&BTableau::empty(), &classical()).unwrap(), BigInt::from(1));
    assert_eq!(enumerate_01v(&tab("[2;0]"), &classical()).unwrap().len(), 2);
    let ones = WeightPair::new(WeightSpec::constant(1), WeightSpec::constant(1));
    assert_eq!(enumerate_01v(&tab("[1;1]"), &ones).unwrap().len(), 1);

    let i = WeightSpec::identity();
    let v = WeightSpec::polynomial([4, 2]);
    assert_eq!(enumerate_part(4, 2, &i).unwrap().len(), 7);
    assert_eq!(enumerate_part(2, 1, &v).unwrap().len(), 10);
    assert_eq!(enumerate_part(4, 4, &v).unwrap().len(), 1);
    assert_eq!(enumerate_perm(2, 1, &i).unwrap().len(), 1);
    assert_eq!(enumerate_perm(4, 2, &i).unwrap().len(), 11);
    assert_eq!(enumerate_perm(4, 4, &v).unwrap().len(), 1);
    assert_eq!(enumerate_signed_partitions(2, 1).unwrap().len(), 2);
    assert_eq!(enumerate_signed_partitions(4, 4).unwrap().len(), 1);
    assert_eq!(enumerate_signed_partitions(3, 2).unwrap().len(), 8);

    assert!(tuple_decomposition_check(&TupleFamily::Sun(2), 3, 2).unwrap());
    assert!(tuple_decomposition_check(&TupleFamily::ProductShifted(vec![2]), 3, 2).unwrap());
    assert!(tuple_decomposition_check(&TupleFamily::ProductShifted(vec![0, 1]), 3, 2).unwrap());
}
