//! Verification suites: every identity evaluated over a parameter grid and
//! collected into a [`Report`].

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use crate::combinat::{
    bijection_check, enumerate_part, enumerate_perm, enumerate_signed_partitions, from_partition, from_permutation,
    merris_koutras_check, shape_count_check, to_partition, to_permutation, tuple_decomposition_check, ColumnMarks,
    Mark, TupleFamily, ZeroOneTableau,
};
use crate::error::{Error, Result};
use crate::genfunc::{
    basis_expand_check, cgf_coefficients_check, pq_first_kind_product, pq_specialization_basis,
    pq_specialization_first, pq_specialization_second, sgf_coefficients_check,
};
use crate::matrices::{
    convolution, det_closed_form, ehrenborg_det_check, gould_srivastava, inverse_pair, inverse_relation_apply,
    lu_check, orthogonality_check, record_det, Direction, PairKind, Relation,
};
use crate::oracles::{
    b_stirling_first, b_stirling_second, binomial, classical_first, classical_second, gaussian_binomial,
    legendre_stirling,
};
use crate::report::{Equation, Params, Report};
use crate::ring::{RingValue, Var};
use crate::stirling::{c_def, def, Kind, StirlingTable};
use crate::tableaux::{hereitis_check, tau_check, trra_split_check, weight_sum, BTableau};
use crate::weights::{builtin, WeightPair, WeightSpec};

const KINDS: [Kind; 2] = [Kind::First, Kind::Second];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Recurrences,
    Genfunc,
    Orthogonality,
    Convolution,
    Lu,
    Determinants,
    Tableaux,
    Combinatorial,
    Sequences,
    All,
}

impl Suite {
    pub const EACH: [Suite; 9] = [
        Suite::Recurrences,
        Suite::Genfunc,
        Suite::Orthogonality,
        Suite::Convolution,
        Suite::Lu,
        Suite::Determinants,
        Suite::Tableaux,
        Suite::Combinatorial,
        Suite::Sequences,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Recurrences => "recurrences",
            Suite::Genfunc => "genfunc",
            Suite::Orthogonality => "orthogonality",
            Suite::Convolution => "convolution",
            Suite::Lu => "lu",
            Suite::Determinants => "determinants",
            Suite::Tableaux => "tableaux",
            Suite::Combinatorial => "combinatorial",
            Suite::Sequences => "sequences",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::DomainViolation(format!("unknown suite `{s}`")))
    }
}

/// Parameter grid shared by all suites. Each suite caps `nmax` where its
/// checks grow quickly.
#[derive(Debug, Clone)]
pub struct Config {
    pub nmax: i64,
    pub alphas: RangeInclusive<i64>,
    pub betas: RangeInclusive<i64>,
}

impl Config {
    pub fn new(nmax: i64) -> Config {
        Config { nmax, alphas: 0..=0, betas: 0..=0 }
    }

    fn grid(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.alphas.clone().flat_map(move |a| self.betas.clone().map(move |b| (a, b)))
    }
}

/// Parses `a..b`, `a..=b` or a single integer.
pub fn parse_range(s: &str) -> Result<RangeInclusive<i64>> {
    let bad = || Error::Parse { offset: 0, message: format!("invalid range `{s}`") };
    let num = |t: &str| t.trim().parse::<i64>().map_err(|_| bad());
    let range = if let Some((a, b)) = s.split_once("..") {
        num(a)?..=num(b.strip_prefix('=').unwrap_or(b))?
    } else {
        let v = num(s)?;
        v..=v
    };
    if range.is_empty() {
        return Err(bad());
    }
    Ok(range)
}

fn kind_name(kind: Kind, base: &str) -> String {
    format!("{base}-{kind}")
}

fn eq(lhs: Result<RingValue>, rhs: Result<RingValue>) -> Result<Equation> {
    Ok(Equation::new(lhs?, rhs?))
}

fn int_eq(lhs: Result<RingValue>, rhs: BigInt) -> Result<Equation> {
    Ok(Equation::new(lhs?, RingValue::from(rhs)))
}

fn count_eq(count: Result<usize>, expected: Result<RingValue>) -> Result<Equation> {
    Ok(Equation::new(RingValue::int(count? as i64), expected?))
}

/// Runs one suite (or all of them) for a single weight pair.
pub fn run(suite: Suite, weights: &WeightPair, cfg: &Config) -> Report {
    let t = StirlingTable::new(weights.clone());
    let mut report = Report::new(suite.name(), weights.label());
    let suites: Vec<Suite> = if suite == Suite::All { Suite::EACH.to_vec() } else { vec![suite] };
    for s in suites {
        let part = match s {
            Suite::Recurrences => recurrences(&t, cfg),
            Suite::Genfunc => genfunc(&t, cfg),
            Suite::Orthogonality => orthogonality(&t, cfg),
            Suite::Convolution => convolutions(&t, cfg),
            Suite::Lu => lu(&t, cfg),
            Suite::Determinants => determinants(&t, cfg),
            Suite::Tableaux => tableaux(&t, cfg),
            Suite::Combinatorial => combinatorial(&t, cfg),
            Suite::Sequences => sequences(&t, cfg),
            Suite::All => unreachable!("expanded above"),
        };
        report.extend(part);
    }
    report
}

fn recurrences(t: &StirlingTable, cfg: &Config) -> Report {
    let w = t.weights();
    let swapped = w.swap();
    let mut r = Report::new("recurrences", w.label());
    for (a, b) in cfg.grid() {
        for n in 0..=cfg.nmax {
            for k in 0..=n {
                let p: Params = vec![("alpha", a), ("beta", b), ("n", n), ("k", k)];
                for kind in KINDS {
                    let reference = || t.get(kind, a, b, n, k);
                    r.record(&kind_name(kind, "triangular"), p.clone(), eq(t.triangular(kind, a, b, n, k), reference()));
                    r.record(&kind_name(kind, "vertical"), p.clone(), eq(t.vertical(kind, a, b, n, k), reference()));
                    r.record(&kind_name(kind, "horizontal"), p.clone(), eq(t.horizontal(kind, a, b, n, k), reference()));
                    r.record(&kind_name(kind, "duality"), p.clone(), eq(def(kind, &swapped, b, a, n, k), reference()));
                }
                r.record("horizontal-dual-first", p.clone(), eq(t.c_horizontal_dual(a, b, n, k), t.c(a, b, n, k)));
            }
        }
    }
    r
}

fn genfunc(t: &StirlingTable, cfg: &Config) -> Report {
    let w = t.weights();
    let mut r = Report::new("genfunc", w.label());
    for (a, b) in cfg.grid() {
        for n in 0..=cfg.nmax {
            let p: Params = vec![("alpha", a), ("beta", b), ("n", n)];
            match cgf_coefficients_check(n, a, b, w) {
                Ok(eqs) => {
                    for (k, e) in eqs.into_iter().enumerate() {
                        let mut pk = p.clone();
                        pk.push(("k", k as i64));
                        r.record("cgf-coefficient", pk, Ok(e));
                    }
                }
                Err(e) => r.record("cgf-coefficient", p.clone(), Err(e)),
            }
            r.record("basis-expansion", p.clone(), basis_expand_check(n, a, b, w));
            match sgf_coefficients_check(n, cfg.nmax, a, b, w) {
                Ok(eqs) => {
                    for (d, e) in eqs.into_iter().enumerate() {
                        let pk = vec![("alpha", a), ("beta", b), ("n", n + d as i64), ("k", n)];
                        r.record("sgf-coefficient", pk, Ok(e));
                    }
                }
                Err(e) => r.record("sgf-coefficient", vec![("alpha", a), ("beta", b), ("k", n)], Err(e)),
            }
        }
    }
    if w.name.as_deref() == Some("pq-binomial") {
        for n in 0..=cfg.nmax {
            let p: Params = vec![("n", n)];
            r.record("pq-first-kind-product", p.clone(), pq_first_kind_product(n));
            match pq_specialization_first(n) {
                Ok((x, y)) => {
                    r.record("pq-first-specialization-product", p.clone(), Ok(x));
                    r.record("pq-first-specialization-sum", p.clone(), Ok(y));
                }
                Err(e) => r.record("pq-first-specialization-product", p.clone(), Err(e)),
            }
            r.record("pq-second-specialization", p.clone(), pq_specialization_second(n, cfg.nmax));
            r.record("pq-basis-specialization", p, pq_specialization_basis(n));
        }
    }
    r
}

/// Fixed integer test sequence for the inverse relations.
pub const SAMPLE_SEQUENCE: [i64; 12] = [3, -1, 4, 1, -5, 9, -2, 6, 5, -3, 5, 8];

fn round_trip(relation: Relation, seq: &[RingValue], a: i64, b: i64, t: &StirlingTable) -> Result<bool> {
    let there = inverse_relation_apply(relation, Direction::Forward, seq, a, b, t)?;
    let back = inverse_relation_apply(relation, Direction::Backward, &there, a, b, t)?;
    Ok(back == seq)
}

fn orthogonality(t: &StirlingTable, cfg: &Config) -> Report {
    let w = t.weights();
    let mut r = Report::new("orthogonality", w.label());
    let len = (cfg.nmax.min(SAMPLE_SEQUENCE.len() as i64 - 1) + 1) as usize;
    let seq: Vec<RingValue> = SAMPLE_SEQUENCE[..len].iter().map(|&x| RingValue::int(x)).collect();
    for (a, b) in cfg.grid() {
        r.extend(orthogonality_check(t, cfg.nmax, a, b));
        let p: Params = vec![("alpha", a), ("beta", b), ("r", cfg.nmax)];
        for (name, kind) in [("refmat", PairKind::Refmat), ("refmatt", PairKind::Refmatt)] {
            r.record_bool(name, p.clone(), inverse_pair(kind, cfg.nmax, a, b, t).map(|_| true), "not inverse");
        }
        for (name, rel) in [
            ("inverse-relation-first", Relation::First),
            ("inverse-relation-second", Relation::Second),
            ("inverse-relation-transposed", Relation::Transposed),
        ] {
            let p: Params = vec![("alpha", a), ("beta", b), ("len", len as i64)];
            r.record_bool(name, p, round_trip(rel, &seq, a, b, t), "round trip changed the sequence");
        }
    }
    r
}

fn convolutions(t: &StirlingTable, cfg: &Config) -> Report {
    let w = t.weights();
    let mut r = Report::new("convolution", w.label());
    let m = cfg.nmax.min(5);
    for (a, b) in cfg.grid() {
        for kind in KINDS {
            for m1 in 0..=m {
                for m2 in 0..=m {
                    for n in 0..=m1 + m2 {
                        let p: Params = vec![("alpha", a), ("beta", b), ("m1", m1), ("m2", m2), ("n", n)];
                        r.record(&kind_name(kind, "convolution"), p.clone(), convolution(t, kind, m1, m2, n, a, b));
                        for split in -1..=n + 1 {
                            let mut pr = p.clone();
                            pr.push(("r", split));
                            let e = gould_srivastava(t, kind, m1, m2, split, n - split, a, b);
                            r.record(&kind_name(kind, "gould-srivastava"), pr, e);
                        }
                    }
                }
            }
        }
    }
    r
}

fn lu(t: &StirlingTable, cfg: &Config) -> Report {
    let w = t.weights();
    let mut r = Report::new("lu", w.label());
    let m = cfg.nmax.min(4);
    for (a, b) in cfg.grid() {
        for kind in KINDS {
            for rr in 0..=m {
                for s in 0..=m {
                    let p: Params = vec![("alpha", a), ("beta", b), ("r", rr), ("s", s)];
                    let f = lu_check(t, kind, rr, s, a, b).map(|f| f.holds());
                    r.record_bool(&kind_name(kind, "lu"), p, f, "M != L U");
                }
            }
        }
    }
    r
}

fn determinants(t: &StirlingTable, cfg: &Config) -> Report {
    let w = t.weights();
    let mut r = Report::new("determinants", w.label());
    let m = cfg.nmax.min(4);
    for (a, b) in cfg.grid() {
        for kind in KINDS {
            for rr in 0..=m {
                for s in 0..=m {
                    let p: Params = vec![("alpha", a), ("beta", b), ("r", rr), ("s", s)];
                    record_det(&mut r, &kind_name(kind, "det"), p, det_closed_form(t, kind, rr, s, a, b));
                }
            }
        }
    }
    let m = cfg.nmax.min(3);
    for rr in 0..=m {
        for s in 0..=m {
            record_det(&mut r, "ehrenborg", vec![("r", rr), ("s", s)], ehrenborg_det_check(rr, s));
        }
    }
    r
}

fn tableaux(t: &StirlingTable, cfg: &Config) -> Report {
    let w = t.weights();
    let mut r = Report::new("tableaux", w.label());
    let nmax = cfg.nmax.min(7);
    for (a, b) in cfg.grid() {
        for n in 0..=nmax {
            for k in 0..=n {
                let p: Params = vec![("alpha", a), ("beta", b), ("n", n), ("k", k)];
                for kind in KINDS {
                    let e = eq(weight_sum(kind, n, k, a, b, w), t.get(kind, a, b, n, k));
                    r.record(&kind_name(kind, "weight-sum"), p.clone(), e);
                    if (1..=6).contains(&n) {
                        r.record_bool(&kind_name(kind, "split"), p.clone(), trra_split_check(kind, a, b, n, k), "split");
                    }
                }
                r.record_bool("tau-bijection", p, tau_check(a, b, n, k), "tau is not a bijection");
            }
        }
        let m = nmax.min(6);
        for m1 in 0..=m {
            for m2 in 0..=m - m1 {
                for n in 0..=m1 + m2 {
                    let p: Params = vec![("alpha", a), ("beta", b), ("m1", m1), ("m2", m2), ("n", n)];
                    for kind in KINDS {
                        let ok = hereitis_check(kind, a, b, m1, m2, n);
                        r.record_bool(&kind_name(kind, "decomposition"), p.clone(), ok, "decomposition");
                    }
                }
            }
        }
    }
    r
}

fn example_marks(height: i64, above: &[(i64, u32)]) -> Vec<ColumnMarks> {
    above
        .iter()
        .map(|&(row, color)| ColumnMarks { above: Mark { row, color }, below: Mark { row: height, color: 1 } })
        .collect()
}

/// The two worked examples of the colored bijections with `V = (2i+4, 1)`.
pub fn worked_examples() -> Result<(ZeroOneTableau, ZeroOneTableau)> {
    let phi = ZeroOneTableau::new(BTableau::from_rows(&[3, 1, 1], &[2, 4, 4])?, 7, example_marks(7, &[(3, 2), (1, 3), (2, 1)]))?;
    let psi = ZeroOneTableau::new(BTableau::from_rows(&[3, 1, 0], &[2, 4, 5])?, 7, example_marks(7, &[(4, 1), (2, 1), (1, 4)]))?;
    Ok((phi, psi))
}

pub const EXAMPLE_PARTITION: &str = "{0,3_3}{1,2_1}{4,6_2}{5}{7}{8}";
pub const EXAMPLE_PERMUTATION: &str = "(0 1_4 2_1)(3 4_1)(5)(6)";

fn example_checks(r: &mut Report) {
    let result = worked_examples().and_then(|(phi, psi)| {
        let p = to_partition(&phi);
        let q = to_permutation(&psi);
        Ok((p.to_string(), from_partition(&p)? == phi, q.to_string(), from_permutation(&q)? == psi))
    });
    match result {
        Ok((p, pb, q, qb)) => {
            r.record_bool("example-partition", vec![], Ok(p == EXAMPLE_PARTITION && pb), &p);
            r.record_bool("example-permutation", vec![], Ok(q == EXAMPLE_PERMUTATION && qb), &q);
        }
        Err(e) => r.record_bool("example-partition", vec![], Err(e), ""),
    }
}

fn combinatorial(t: &StirlingTable, cfg: &Config) -> Report {
    let w = t.weights();
    let mut r = Report::new("combinatorial", w.label());
    example_checks(&mut r);
    if !w.is_combinatorial() {
        r.push(
            "colored-objects",
            vec![],
            crate::report::Outcome::Skip { reason: "weights are not combinatorial".into() },
        );
        return r;
    }
    let nmax = cfg.nmax.min(6);
    for (a, b) in cfg.grid().filter(|&(a, b)| a >= 0 && b >= 0) {
        for n in 0..=nmax {
            for k in 0..=n {
                let p: Params = vec![("alpha", a), ("beta", b), ("n", n), ("k", k)];
                for kind in KINDS {
                    let ok = shape_count_check(kind, n, k, a, b, w);
                    r.record_bool(&kind_name(kind, "zero-one-count"), p.clone(), ok, "count differs from weight");
                }
            }
        }
    }
    if w.w.is_one() {
        let v = &w.v;
        for n in 0..=cfg.nmax.min(5) {
            for k in 0..=n {
                let p: Params = vec![("n", n), ("k", k)];
                let parts = enumerate_part(n, k, v).map(|x| x.len());
                r.record("partition-count", p.clone(), count_eq(parts, def(Kind::Second, w, 0, 0, n, k)));
                let perms = enumerate_perm(n, k, v).map(|x| x.len());
                r.record("permutation-count", p.clone(), count_eq(perms, def(Kind::First, w, 0, 0, n, k)));
            }
        }
        for (a, b) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
            if !cfg.alphas.contains(&a) || !cfg.betas.contains(&b) {
                continue;
            }
            for n in 0..=cfg.nmax.min(3) {
                for k in 0..=n {
                    let p: Params = vec![("alpha", a), ("beta", b), ("n", n), ("k", k)];
                    for kind in KINDS {
                        let ok = bijection_check(kind, n, k, a, b, v);
                        r.record_bool(&kind_name(kind, "bijection"), p.clone(), ok, "not a bijection onto the family");
                    }
                }
            }
        }
    }
    let name = w.name.as_deref().unwrap_or("");
    if name == "legendre" {
        for n in 0..=cfg.nmax.min(5) {
            for k in 0..=n {
                let p: Params = vec![("n", n), ("k", k)];
                let got = enumerate_signed_partitions(n, k).map(|x| x.len());
                r.record("signed-partition-count", p.clone(), count_eq(got, def(Kind::Second, w, 0, 0, n, k)));
            }
        }
        tuple_checks(&mut r, &TupleFamily::ProductShifted(vec![0, 1]), cfg.nmax.min(4));
    }
    if let Some(m) = name.strip_prefix("sun(").and_then(|s| s.strip_suffix(')')).and_then(|s| s.parse().ok()) {
        tuple_checks(&mut r, &TupleFamily::Sun(m), cfg.nmax.min(4));
    }
    if let Some(m) = name.strip_prefix("merris(").and_then(|s| s.strip_suffix(')')).and_then(|s| s.parse::<i64>().ok())
    {
        for n in 0..=cfg.nmax.min(5) {
            for k in 0..=n {
                let p: Params = vec![("m", m), ("n", n), ("k", k)];
                for kind in KINDS {
                    let ok = merris_koutras_check(kind, m, n, k);
                    r.record_bool(&kind_name(kind, "shifted-equivalence"), p.clone(), ok, "counts differ");
                }
            }
        }
    }
    r
}

fn tuple_checks(r: &mut Report, family: &TupleFamily, nmax: i64) {
    for n in 0..=nmax {
        for k in 0..=n {
            let ok = tuple_decomposition_check(family, n, k);
            r.record_bool("tuple-decomposition", vec![("n", n), ("k", k)], ok, "tuple counts differ");
        }
    }
}

fn sequences(t: &StirlingTable, cfg: &Config) -> Report {
    let w = t.weights();
    let mut r = Report::new("sequences", w.label());
    let name = w.name.as_deref().unwrap_or("");
    let nmax = cfg.nmax;
    for n in 0..=nmax {
        for k in 0..=n {
            let p: Params = vec![("n", n), ("k", k)];
            match name {
                "classical" => {
                    r.record("oracle-first", p.clone(), int_eq(t.c(0, 0, n, k), classical_first(n, k)));
                    r.record("oracle-second", p.clone(), int_eq(t.s(0, 0, n, k), classical_second(n, k)));
                    r.record("noncentral-sum", p.clone(), noncentral_sum(n, k));
                    r.record("carlitz-double-sum", p.clone(), carlitz_double_sum(t, n, k));
                }
                "b-stirling" => {
                    r.record("oracle-first", p.clone(), int_eq(t.c(0, 0, n, k), b_stirling_first(n, k)));
                    r.record("oracle-second", p.clone(), int_eq(t.s(0, 0, n, k), b_stirling_second(n, k)));
                }
                "legendre" => {
                    r.record("oracle-second", p.clone(), int_eq(t.s(0, 0, n, k), legendre_stirling(n, k)));
                }
                "pq-binomial" => {
                    let one = [(Var::P, RingValue::one()), (Var::Q, RingValue::one())];
                    let at_one = t.s(0, 0, n, k).and_then(|v| v.substitute_pairs(&one));
                    r.record("binomial-at-one", p.clone(), int_eq(at_one, binomial(n, k)));
                }
                "q-binomial" => {
                    r.record("gaussian-binomial", p.clone(), eq(t.s(0, 0, n, k), Ok(gaussian_binomial(n, k))));
                }
                _ => {}
            }
        }
    }
    r
}

/// `c(n,k) = sum_{j=k}^{n} c_{-1}(n+1, j+1)` with the non-central numbers at `r = -1`.
pub fn noncentral_sum(n: i64, k: i64) -> Result<Equation> {
    let classical = builtin("classical")?;
    let mut rhs = RingValue::zero();
    for j in k..=n {
        rhs += c_def(&classical, -1, 0, n + 1, j + 1)?;
    }
    Ok(Equation::new(c_def(&classical, 0, 0, n, k)?, rhs))
}

/// `c(n,k) = sum_{j=k}^{n} sum_{t=j+1}^{n+1} (-1)^{t-j-1} C(t,j+1) c(n+1,t)`.
pub fn carlitz_double_sum(t: &StirlingTable, n: i64, k: i64) -> Result<Equation> {
    let mut rhs = RingValue::zero();
    for j in k..=n {
        for s in j + 1..=n + 1 {
            let sign = if (s - j - 1) % 2 == 0 { 1 } else { -1 };
            rhs += RingValue::from(binomial(s, j + 1) * sign) * t.c(0, 0, n + 1, s)?;
        }
    }
    Ok(Equation::new(t.c(0, 0, n, k)?, rhs))
}

/// A weight pair whose `v` is given by a table, for building deliberately
/// broken specs in tests.
pub fn table_weights(values: &[i64]) -> WeightPair {
    let map = values.iter().enumerate().map(|(i, &v)| (i as i64, RingValue::int(v))).collect();
    WeightPair::new(WeightSpec::table(map, None), WeightSpec::constant(1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges_parse() {
        assert_eq!(parse_range("-2..2").unwrap(), -2..=2);
        assert_eq!(parse_range("0..=1").unwrap(), 0..=1);
        assert_eq!(parse_range("3").unwrap(), 3..=3);
        assert!(parse_range("2..1").is_err());
        assert!(parse_range("x").is_err());
        assert_eq!("lu".parse::<Suite>().unwrap(), Suite::Lu);
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn classical_all_passes() {
        let w = builtin("classical").unwrap();
        let report = run(Suite::All, &w, &Config::new(4));
        assert!(report.all_passed(), "{}", report.render_text(false));
        assert!(report.passed() > 100);
    }

    #[test]
    fn truncated_table_fails_with_counterexample() {
        let w = table_weights(&[0, 1, 2]);
        let report = run(Suite::Recurrences, &w, &Config::new(4));
        assert!(!report.all_passed());
        let text = report.render_text(false);
        assert!(text.contains("counterexample:"), "{text}");
    }

    #[test]
    fn q_weights_skip_negative_indices() {
        let w = builtin("q-stirling").unwrap();
        let cfg = Config { nmax: 3, alphas: -1..=0, betas: 0..=0 };
        let report = run(Suite::Recurrences, &w, &cfg);
        assert!(report.skipped() > 0);
        assert!(report.all_passed(), "{}", report.render_text(false));
    }

    #[test]
    fn worked_examples_render() {
        let mut r = Report::new("combinatorial", "fig");
        example_checks(&mut r);
        assert_eq!(r.passed(), 2);
    }
}
