//! The fourteen acceptance criteria, one PASS/FAIL line each.
//!
//! Criteria 8 and 9 state refutations that do not hold: `(1, 0)` is a
//! witness for every pair over `F2 × T2(F2)`. They print FAIL, and the test
//! asserts the counterexample instead.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use mccoy_cli::suite::{coefficient_map, zoo};
use mccoy_cli::{cmd_paper_verify, load_ring, with_workers, LoadedRing};
use mccoy_core::constructions::expr::parse_ring_expr;
use mccoy_core::constructions::{
    corner, find_isomorphism, ideal_as_nonunital, iso_check, localize, quotient_by_ideal, Family, IdealData, Limits,
    LocalizationSpec, MatrixOps, MatrixShape, ProductOps,
};
use mccoy_core::fpalg::{parse_presentation, TruncatedAlgebra};
use mccoy_core::properties::{
    audit_implications, check, check_on_truncated, check_pair, poly_mul, verify_certificate, zero_divisor_pairs,
    zero_divisor_pairs_exhaustive, Certificate, Polarity, Polynomial, Property, SearchLimits, Transcript,
    TruncatedSettings, Verdict,
};
use mccoy_core::ring::{center_indices, is_regular_idx};
use mccoy_core::{FiniteRing, RingView};

const RCM: Property = Property::RightCentralMccoy;

fn root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn ring(expr: &str) -> FiniteRing {
    parse_ring_expr(expr)
        .unwrap()
        .build(&Limits::default(), Path::new("."))
        .unwrap()
}

fn finite(path: &str) -> FiniteRing {
    match load_ring(path, &root(), &Limits::default(), None).unwrap() {
        LoadedRing::Finite(r) => r,
        LoadedRing::Truncated(_) => panic!("{path} should be finite"),
    }
}

fn decide(r: &(impl RingView + ?Sized), p: Property, d: usize) -> Verdict {
    check(r, p, d, &SearchLimits::default()).unwrap()
}

fn pair(v: &Verdict) -> (Polynomial, Polynomial) {
    match &v.certificate {
        Some(Certificate::Pair { f, g, .. }) => {
            let dec = |p: &mccoy_core::properties::PolyRecord| {
                Polynomial::new(p.coefficients.iter().map(|c| c.index as u32).collect())
            };
            (dec(f), dec(g))
        }
        _ => panic!("no pair certificate"),
    }
}

fn transcript_lines(v: &Verdict) -> usize {
    match &v.certificate {
        Some(Certificate::Pair {
            transcript: Transcript::Exhaustive { failures },
            ..
        }) => failures.len(),
        _ => 0,
    }
}

fn unit(family: Family, n: usize, i: usize, j: usize) -> u32 {
    MatrixOps::new(&MatrixShape::new(family, n, ring("F2")))
        .unwrap()
        .scaled_unit(i, j, 1)
        .unwrap()
}

fn c1() -> bool {
    let m2 = ring("M(2, F2)");
    let v = decide(&m2, RCM, 1);
    let (e11, e12, e22) = (
        unit(Family::Full, 2, 1, 1),
        unit(Family::Full, 2, 1, 2),
        unit(Family::Full, 2, 2, 2),
    );
    let (f, _) = pair(&v);
    let paper_f = Polynomial::new(vec![e12, e11]);
    let paper_g = Polynomial::new(vec![e12, e22]);
    let pc = check_pair(&m2, RCM, &paper_f, &paper_g).unwrap();
    v.polarity == Polarity::Refuted
        && verify_certificate(&m2, &v).is_ok()
        && f == paper_f
        && transcript_lines(&v) == 15
        && pc.product_is_zero
        && pc.witness.is_none()
        && pc.failures.len() == 15
}

fn c2() -> bool {
    let t2 = ring("T(2, F2)");
    let v = decide(&t2, RCM, 1);
    v.polarity == Polarity::Refuted && verify_certificate(&t2, &v).is_ok() && transcript_lines(&v) == 7
}

fn c3() -> bool {
    let s = finite("rings/ex22.ring");
    let pres = parse_presentation(include_str!("../../../rings/ex22.ring")).unwrap();
    let basis = s.basis().unwrap().names.clone();
    // basis order 1, x, y, z: element index is the F2 digit vector
    let el = |t: &str| -> u32 {
        let e = pres.parse_expr(t).unwrap();
        e.terms()
            .map(|(w, c)| {
                let name = w.render(&pres.generators, "");
                c << basis.iter().position(|b| *b == name).unwrap()
            })
            .fold(0, |a, b| a ^ b)
    };
    let f = Polynomial::new(vec![el("x"), el("y")]);
    let g = Polynomial::new(vec![el("1 + x"), el("1 + y")]);
    let mccoy = decide(&s, Property::RightMccoy, 1);
    let central = decide(&s, RCM, 2);
    let pc = check_pair(&s, Property::RightMccoy, &f, &g).unwrap();
    s.size() == 16
        && basis == ["1", "x", "y", "z"]
        && poly_mul(&s, &f, &g).is_zero()
        && pc.witness.is_none()
        && mccoy.polarity == Polarity::Refuted
        && verify_certificate(&s, &mccoy).is_ok()
        && central.polarity == Polarity::NotRefuted
        && central.universal_witness.as_ref().map(|w| w.form.as_str()) == Some("z")
        && central.universal_witness.as_ref().map(|w| w.index) == Some(el("z") as u128)
}

fn c4() -> bool {
    let view = match load_ring("rings/ex23.ring", &root(), &Limits::default(), Some(3)).unwrap() {
        LoadedRing::Truncated(v) => v,
        LoadedRing::Finite(_) => return false,
    };
    let rs = view.rewrite_system();
    let pres = parse_presentation(include_str!("../../../rings/ex23.ring")).unwrap();
    let p = rs.characteristic();
    let g = |n: &str| pres.parse_expr(n).unwrap();
    let (a0, a1, b0, b1) = (g("a0"), g("a1"), g("b0"), g("b1"));
    let mut mid = a0.mul(&b1, p);
    mid.add_scaled(&a1.mul(&b0, p), 1, p);
    let zero = [a0.mul(&b0, p), mid, a1.mul(&b1, p)]
        .iter()
        .all(|c| rs.normal_form(c).is_zero());
    let view = TruncatedAlgebra::new(rs, 3).unwrap();
    let s = TruncatedSettings::new(1, 3);
    let limits = SearchLimits::default();
    let right = check_on_truncated(&view, RCM, s, &limits).unwrap();
    let left = check_on_truncated(&view, Property::LeftCentralMccoy, s, &limits).unwrap();
    zero && right.polarity == Polarity::Refuted && left.polarity == Polarity::NotRefuted
}

fn c5() -> bool {
    ["D(2, F2)", "D(3, F2)", "V(2, F2)", "V(3, F2)"]
        .iter()
        .all(|e| decide(&ring(e), RCM, 2).polarity == Polarity::NotRefuted)
}

fn c6() -> bool {
    let r = ring("D(2, T(2, F2))");
    let v = decide(&r, RCM, 1);
    v.polarity == Polarity::Refuted && verify_certificate(&r, &v).is_ok()
}

fn c7() -> bool {
    let (v3, q3) = (ring("V(3, F2)"), ring("quotpoly(F2, 3)"));
    let map = coefficient_map(&ring("F2"), 3, &v3).unwrap();
    // 8 elements, so 64 element pairs
    v3.size() == 8 && iso_check(&v3, &q3, &map)
}

/// Returns (criterion holds, counterexample holds).
fn c8() -> (bool, bool) {
    let ff = decide(&ring("prod(F2, F2)"), RCM, 2);
    let r = ring("prod(F2, T(2, F2))");
    let v = decide(&r, RCM, 1);
    let e = ProductOps::new(vec![ring("F2"), ring("T(2, F2)")]).encode(&[1, 0]);
    let first = ff.polarity == Polarity::NotRefuted;
    let holds = first && v.polarity == Polarity::Refuted;
    let counter = first
        && v.polarity == Polarity::NotRefuted
        && v.universal_witness.as_ref().map(|w| w.index) == Some(e as u128)
        && (0..r.size()).all(|a| center_indices(&r).contains(&r.mul_idx(a, e)));
    (holds, counter)
}

fn c9() -> (bool, bool) {
    let r = ring("prod(F2, T(2, F2))");
    let e = ProductOps::new(vec![ring("F2"), ring("T(2, F2)")]).encode(&[1, 0]);
    let rest = r.sub_idx(r.one_index(), e);
    let (ce, _) = corner(&r, e).unwrap();
    let (cr, _) = corner(&r, rest).unwrap();
    let corners = find_isomorphism(&ce, &ring("F2")).is_some()
        && find_isomorphism(&cr, &ring("T(2, F2)")).is_some()
        && decide(&ce, RCM, 2).polarity == Polarity::NotRefuted
        && decide(&cr, RCM, 1).polarity == Polarity::Refuted;
    let v = decide(&r, RCM, 1);
    let holds = corners && v.polarity == Polarity::Refuted;
    let counter = corners
        && v.polarity == Polarity::NotRefuted
        && v.universal_witness.as_ref().map(|w| w.index) == Some(e as u128);
    (holds, counter)
}

fn c10() -> bool {
    let t2 = ring("T(2, F2)");
    let e12 = unit(Family::UpperTriangular, 2, 1, 2);
    let ideal = IdealData::generated_by(&t2, &[e12]).unwrap();
    let (q, _) = quotient_by_ideal(&t2, &ideal).unwrap();
    let i = ideal_as_nonunital(&ideal);
    let zero_products = (0..i.size()).all(|a| (0..i.size()).all(|b| i.mul_idx(a, b) == 0));
    let mccoy_types = [
        Property::RightMccoy,
        Property::LeftMccoy,
        Property::RightCentralMccoy,
        Property::LeftCentralMccoy,
    ];
    find_isomorphism(&q, &ring("prod(F2, F2)")).is_some()
        && decide(&q, RCM, 2).polarity == Polarity::NotRefuted
        && zero_products
        && mccoy_types
            .iter()
            .all(|&p| decide(&i, p, 2).polarity == Polarity::NotRefuted)
        && decide(&t2, RCM, 1).polarity == Polarity::Refuted
}

fn c11() -> bool {
    zoo(&Limits::default()).unwrap().iter().all(|(_, r)| {
        let center = center_indices(r);
        let regular: Vec<u32> = center.iter().copied().filter(|&a| is_regular_idx(r, a)).collect();
        let units: Vec<u32> = center.iter().copied().filter(|&a| r.inverse_idx(a).is_some()).collect();
        let loc = localize(&LocalizationSpec {
            parent: r.clone(),
            denominators: regular.clone(),
        })
        .unwrap();
        regular == units && iso_check(&loc.ring, r, &loc.canonical_map)
    })
}

fn c12() -> bool {
    zoo(&Limits::default()).unwrap().iter().all(|(_, r)| {
        let audit = audit_implications(r, &[1, 2], &SearchLimits::default()).unwrap();
        audit.violations.is_empty() && audit.assertions_checked > 0
    })
}

fn c13() -> bool {
    let limits = SearchLimits::default();
    zoo(&Limits::default())
        .unwrap()
        .iter()
        .filter(|(_, r)| r.size() <= 16)
        .all(|(_, r)| {
            (0..=1).all(|d| {
                let pruned: Vec<_> = zero_divisor_pairs(r, d, &limits).unwrap().collect();
                let oracle: Vec<_> = zero_divisor_pairs_exhaustive(r, d, &limits).unwrap().collect();
                pruned == oracle
            })
        })
}

fn c14() -> bool {
    let run = |w| with_workers(w, || cmd_paper_verify(&[], 0)).unwrap().unwrap().to_json();
    let (one, four) = (run(1), run(4));
    one == four && one.contains("\"schema_version\": 1")
}

fn report(n: usize, pass: bool, took: Duration) {
    let status = if pass { "PASS" } else { "FAIL" };
    // written past the test harness capture so the lines always show
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "criterion {n:>2}: {status} ({took:.2?})");
}

#[test]
fn acceptance() {
    let mut failures = Vec::new();
    let exact: [(usize, fn() -> bool); 12] = [
        (1, c1),
        (2, c2),
        (3, c3),
        (4, c4),
        (5, c5),
        (6, c6),
        (7, c7),
        (10, c10),
        (11, c11),
        (12, c12),
        (13, c13),
        (14, c14),
    ];
    let mut results = Vec::new();
    for (n, f) in exact {
        let t = Instant::now();
        let pass = f();
        results.push((n, pass, t.elapsed()));
        if !pass {
            failures.push(n);
        }
    }
    for (n, f) in [(8usize, c8 as fn() -> (bool, bool)), (9, c9)] {
        let t = Instant::now();
        let (holds, counter) = f();
        results.push((n, holds, t.elapsed()));
        // the stated refutation is false; its counterexample must stand
        assert!(!holds, "criterion {n} unexpectedly holds");
        assert!(counter, "criterion {n}: counterexample did not reproduce");
    }
    results.sort_by_key(|&(n, _, _)| n);
    for (n, pass, t) in results {
        report(n, pass, t);
    }
    assert!(failures.is_empty(), "criteria failed: {failures:?}");
}
