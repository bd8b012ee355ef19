//! Acceptance criteria, run as a plain binary so that every criterion prints
//! one `[PASS]` or `[FAIL]` line. Exits nonzero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use nilcayley::dettheory::{expected_leading, DetTheory};
use nilcayley::findim::{
    double_commutator_ideal, from_grassmann, ideal_power, jennings_ideal, rational_algebra, upper_triangular,
};
use nilcayley::grassmann::{GrassmannAlgebra, GrassmannElement};
use nilcayley::identities::{
    algebra_traceless, check_ch, check_conjugation, check_domokos, check_fundamental, check_jennings,
    check_power_ch, check_trace_nilpotency, ch_instance, grassmann_traceless, sample_invertible_rational,
    sample_matrices, IdealKind, IdealQuotient, LiftStrategy, Params, Verdict, VerificationReport,
};
use nilcayley::matpoly::{self, PolyRing, RingMatrix};
use nilcayley::relfree;
use nilcayley::ringcore::{Rational, RationalField, Ring, SampleSpec, Sampler};

fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

fn fact(n: usize) -> Rational {
    (1..=n as i64).fold(q(1), |acc, i| acc * q(i))
}

/// Cofactor expansion along the first row.
fn det_oracle(a: &[Vec<Rational>]) -> Rational {
    if a.is_empty() {
        return q(1);
    }
    (0..a.len()).fold(q(0), |acc, j| {
        let minor: Vec<Vec<Rational>> = a[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = &a[0][j] * &det_oracle(&minor);
        if j % 2 == 0 {
            acc + term
        } else {
            acc - term
        }
    })
}

/// Classical adjugate from cofactors; `[1]` for a `1 x 1` matrix.
fn adj_oracle(a: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = a.len();
    (0..n)
        .map(|r| {
            (0..n)
                .map(|s| {
                    let minor: Vec<Vec<Rational>> = (0..n)
                        .filter(|&i| i != s)
                        .map(|i| (0..n).filter(|&j| j != r).map(|j| a[i][j].clone()).collect())
                        .collect();
                    let d = det_oracle(&minor);
                    if (r + s) % 2 == 0 {
                        d
                    } else {
                        -d
                    }
                })
                .collect()
        })
        .collect()
}

fn assert_pass(r: &VerificationReport) {
    assert_eq!(r.verdict, Verdict::Pass, "{}", serde_json::to_string_pretty(r).unwrap());
}

fn within(start: Instant, limit: Duration) {
    assert!(start.elapsed() < limit, "took {:?}, limit {limit:?}", start.elapsed());
}

fn criterion_1() {
    let start = Instant::now();
    let e = GrassmannAlgebra::new(6).unwrap();
    for t in 1..=3 {
        let mut prod = e.one();
        let mut mono = e.one();
        for i in 1..=t {
            let (a, b) = (e.v(2 * i - 1), e.v(2 * i));
            prod = e.mul(&prod, &e.sub(&e.mul(&a, &b), &e.mul(&b, &a)));
            mono = e.mul(&e.mul(&mono, &a), &b);
        }
        let mask = (1u64 << (2 * t)) - 1;
        assert_eq!(mono, GrassmannElement::monomial(6, mask, q(1)));
        assert_eq!(prod, e.scale(&q(1 << t), &mono));
    }
    within(start, Duration::from_secs(1));
}

fn criterion_2() {
    let start = Instant::now();
    let r = RationalField;
    let mut s = Sampler::new(SampleSpec::new(2));
    for i in 0..200 {
        let n = 2 + i % 3;
        let rows: Vec<Vec<Rational>> = (0..n).map(|_| (0..n).map(|_| q(s.small_int(5))).collect()).collect();
        let a = RingMatrix::from_rows(rows.clone()).unwrap();
        let dt = DetTheory::new(&r);
        assert_eq!(dt.sdet(&a).unwrap(), fact(n) * det_oracle(&rows));
        let expected = RingMatrix::from_rows(adj_oracle(&rows)).unwrap();
        assert_eq!(dt.sym_adjoint(&a).unwrap(), matpoly::scalar_mul(&r, &fact(n - 1), &expected));
    }
    let e3 = GrassmannAlgebra::new(3).unwrap();
    let e2 = GrassmannAlgebra::new(2).unwrap();
    let trace_forms = |ms: Vec<RingMatrix<GrassmannElement>>, e: &GrassmannAlgebra| {
        let dt = DetTheory::new(e);
        for a in ms {
            let star = dt.sym_adjoint(&a).unwrap();
            let d = dt.sdet(&a).unwrap();
            assert_eq!(matpoly::trace(e, &matpoly::mul(e, &a, &star).unwrap()), d);
            assert_eq!(matpoly::trace(e, &matpoly::mul(e, &star, &a).unwrap()), d);
        }
    };
    trace_forms(sample_matrices(&e3, 2, 100, &SampleSpec::new(21)), &e3);
    trace_forms(sample_matrices(&e2, 3, 100, &SampleSpec::new(22)), &e2);
    within(start, Duration::from_secs(30));
}

fn criterion_3() {
    let start = Instant::now();
    let e4 = GrassmannAlgebra::new(4).unwrap();
    let ms = sample_matrices(&e4, 2, 50, &SampleSpec::new(31));
    assert_pass(&check_fundamental(&DetTheory::new(&e4), &ms, 2, Params::default()).unwrap());
    let e2 = GrassmannAlgebra::new(2).unwrap();
    let ms = sample_matrices(&e2, 3, 20, &SampleSpec::new(32));
    assert_pass(&check_fundamental(&DetTheory::new(&e2), &ms, 2, Params::default()).unwrap());
    let rf = relfree::build(2, 3, 5).unwrap();
    let ms = sample_matrices(rf.algebra(), 2, 10, &SampleSpec::new(33));
    let r = check_fundamental(&DetTheory::new(rf.algebra()), &ms, 3, Params::default()).unwrap();
    assert_pass(&r);
    assert_eq!(r.instances, 10);
    within(start, Duration::from_secs(300));
}

fn ch_with_leading<R: Ring>(ring: &R, ms: &[RingMatrix<R::Elem>], k: usize) {
    let dt = DetTheory::new(ring);
    for a in ms {
        let (cp, w) = ch_instance(&dt, a, k, None).unwrap();
        assert!(w.is_none(), "{w:?}");
        assert_eq!(cp.degree(), a.size().pow(k as u32));
        assert_eq!(
            cp.coefficients.last().unwrap(),
            &ring.from_rational(&expected_leading(a.size(), k))
        );
    }
}

fn criterion_4() {
    let start = Instant::now();
    let e4 = GrassmannAlgebra::new(4).unwrap();
    let ms4 = sample_matrices(&e4, 2, 50, &SampleSpec::new(31));
    ch_with_leading(&e4, &ms4, 2);
    let e2 = GrassmannAlgebra::new(2).unwrap();
    ch_with_leading(&e2, &sample_matrices(&e2, 3, 20, &SampleSpec::new(32)), 2);
    let rf = relfree::build(2, 3, 5).unwrap();
    let alg = rf.algebra();
    ch_with_leading(alg, &sample_matrices(alg, 2, 10, &SampleSpec::new(33)), 3);

    let pr = PolyRing::new(&e4);
    let mut s = Sampler::new(SampleSpec::new(41));
    let hs: Vec<_> = (0..10).map(|_| pr.from_coefficients(vec![s.element(&e4), e4.one()])).collect();
    let r = check_ch(&DetTheory::new(&e4), &ms4[..10], 2, &hs, Params::default()).unwrap();
    assert_pass(&r);
    assert_eq!(r.instances, 10);
    within(start, Duration::from_secs(600));
}

fn criterion_5() {
    let start = Instant::now();
    let e4 = GrassmannAlgebra::new(4).unwrap();
    let ms = sample_matrices(&e4, 2, 50, &SampleSpec::new(51));
    assert_pass(&check_domokos(&e4, &ms, Params::default()).unwrap());
    let r = RationalField;
    let ms = sample_matrices(&r, 2, 20, &SampleSpec::new(52));
    assert_pass(&check_domokos(&r, &ms, Params::default()).unwrap());
    within(start, Duration::from_secs(60));
}

fn criterion_6() {
    let start = Instant::now();
    let e4 = GrassmannAlgebra::new(4).unwrap();
    let mut s = Sampler::new(SampleSpec::new(61));
    let fam: Vec<_> = (0..20).map(|_| grassmann_traceless(&e4, &mut s)).collect();
    let r = check_trace_nilpotency(&e4, &fam, 2, Params::default()).unwrap();
    assert_pass(&r);
    assert_eq!(r.instances, 20);
    let rf = relfree::build(2, 3, 5).unwrap();
    let fam: Vec<_> = (0..20).map(|_| algebra_traceless(rf.algebra(), &mut s).unwrap()).collect();
    let r = check_trace_nilpotency(rf.algebra(), &fam, 3, Params::default()).unwrap();
    assert_pass(&r);
    assert_eq!(r.instances, 20);
    within(start, Duration::from_secs(120));
}

fn criterion_7() {
    let start = Instant::now();
    let u = upper_triangular(&from_grassmann(2).unwrap(), 2).unwrap();
    let d = double_commutator_ideal(&u);
    assert!(!d.is_zero());
    assert!(ideal_power(&u, &d, 2).unwrap().is_zero());
    let ctx = IdealQuotient::new(&u, IdealKind::DoubleCommutator).unwrap();
    let ms = sample_matrices(&u, 2, 10, &SampleSpec::new(71));
    for lift in [LiftStrategy::Canonical, LiftStrategy::Randomized { seed: 72 }] {
        let r = check_power_ch(&ctx, &ms, 2, lift, None, Params::default()).unwrap();
        assert_pass(&r);
        assert_eq!(r.instances, 10);
        assert_eq!(r.degree_info.unwrap().char_poly_degree, 4);
    }
    within(start, Duration::from_secs(300));
}

fn criterion_8() {
    let start = Instant::now();
    let rf = relfree::build(2, 3, 5).unwrap();
    let ctx = IdealQuotient::new(rf.algebra(), IdealKind::DoubleCommutator).unwrap();
    let ms = sample_matrices(rf.algebra(), 2, 10, &SampleSpec::new(81));
    let r = check_power_ch(&ctx, &ms, 2, LiftStrategy::Canonical, Some(3), Params::default()).unwrap();
    assert_pass(&r);
    let d = r.degree_info.unwrap();
    assert_eq!((d.power_identity_degree, d.direct_degree), (Some(8), Some(8)));

    let rf = relfree::build(2, 3, 4).unwrap();
    let ctx = IdealQuotient::new(rf.algebra(), IdealKind::DoubleCommutator).unwrap();
    let ms = sample_matrices(rf.algebra(), 3, 2, &SampleSpec::new(82));
    let r = check_power_ch(&ctx, &ms, 2, LiftStrategy::Canonical, Some(3), Params::default()).unwrap();
    assert_pass(&r);
    assert_eq!(r.instances, 2);
    let d = r.degree_info.unwrap();
    assert_eq!((d.power_identity_degree, d.direct_degree), (Some(18), Some(27)));
    within(start, Duration::from_secs(1800));
}

fn criterion_9() {
    let start = Instant::now();
    let u = upper_triangular(&rational_algebra(), 2).unwrap();
    let ctx = IdealQuotient::new(&u, IdealKind::Commutator).unwrap();
    let ms = sample_matrices(&u, 2, 10, &SampleSpec::new(91));
    let r = check_power_ch(&ctx, &ms, 2, LiftStrategy::Canonical, None, Params::default()).unwrap();
    assert_pass(&r);
    assert_eq!(r.instances, 10);
    let lifted = r.lifted_coefficients.unwrap();
    assert_eq!(lifted.len(), 3);
    assert_eq!(lifted[2], u.render(&u.from_rational(&fact(2))));
    within(start, Duration::from_secs(60));
}

fn criterion_10() {
    let start = Instant::now();
    let rf = relfree::build(2, 3, 5).unwrap();
    let alg = rf.algebra();
    let r = check_jennings(alg, 3, &SampleSpec::new(101), 50, Params::default()).unwrap();
    assert_pass(&r);
    assert_eq!(r.instances, 50);
    let n = jennings_ideal(alg, 3).unwrap();
    assert!(!n.is_zero());
    assert!(ideal_power(alg, &n, 2).unwrap().is_zero());
    let d = double_commutator_ideal(alg);
    assert!(!d.is_zero());
    assert!(ideal_power(alg, &d, 2).unwrap().is_zero());
    within(start, Duration::from_secs(120));
}

fn criterion_11() {
    let start = Instant::now();
    for alg in [from_grassmann(3).unwrap(), upper_triangular(&from_grassmann(2).unwrap(), 2).unwrap()] {
        let ctx = IdealQuotient::new(&alg, IdealKind::DoubleCommutator).unwrap();
        let ms = sample_matrices(&alg, 2, 10, &SampleSpec::new(111));
        let mut s = Sampler::new(SampleSpec::new(112));
        let pairs: Vec<_> = ms.into_iter().map(|a| (a, sample_invertible_rational(2, &mut s))).collect();
        let r = check_conjugation(&ctx, &pairs, Params::default()).unwrap();
        assert_pass(&r);
        assert_eq!(r.instances, 10);
    }
    within(start, Duration::from_secs(120));
}

fn criterion_12() {
    let e = GrassmannAlgebra::new(2).unwrap();
    let a = RingMatrix::from_rows(vec![vec![e.v(1), e.zero()], vec![e.zero(), e.zero()]]).unwrap();
    let b = RingMatrix::from_rows(vec![vec![e.v(2), e.zero()], vec![e.zero(), e.zero()]]).unwrap();
    let ab = matpoly::trace(&e, &matpoly::mul(&e, &a, &b).unwrap());
    let ba = matpoly::trace(&e, &matpoly::mul(&e, &b, &a).unwrap());
    assert_ne!(ab, ba);

    let witness = RingMatrix::from_rows(vec![vec![e.v(1), e.zero()], vec![e.zero(), e.v(2)]]).unwrap();
    let r = check_ch(&DetTheory::new(&e), &[witness], 1, &[], Params::default()).unwrap();
    assert_eq!(r.verdict, Verdict::Fail);
    assert_eq!(r.witnesses[0].residual, "[[-2*v1*v2, 0], [0, 2*v1*v2]]");
}

fn verify_all_json(seed: &str) -> String {
    let out = Command::new(env!("CARGO_BIN_EXE_nilcayley"))
        .args(["verify", "all", "--seed", seed])
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let mut value: serde_json::Value = serde_json::from_slice(&out.stdout).expect("json");
    for report in value.as_array_mut().expect("array") {
        report.as_object_mut().expect("object").remove("elapsed_ms");
    }
    value.to_string()
}

fn criterion_13() {
    let first = verify_all_json("42");
    let second = verify_all_json("42");
    assert_eq!(first, second);
    assert!(first.contains("\"theorem\":\"power-ch\""));
}

fn main() {
    let criteria: [(u32, &str, fn()); 13] = [
        (1, "exterior algebra commutator products", criterion_1),
        (2, "symmetric determinant and adjoint laws", criterion_2),
        (3, "fundamental adjoint identity", criterion_3),
        (4, "right Cayley-Hamilton identity and leading coefficients", criterion_4),
        (5, "2 x 2 trace form identity", criterion_5),
        (6, "trace conditions force nilpotency", criterion_6),
        (7, "power identity over upper triangular matrices", criterion_7),
        (8, "power identity over an index-3 ring", criterion_8),
        (9, "commutator-ideal power identity", criterion_9),
        (10, "commutator products and ideal nilpotency", criterion_10),
        (11, "conjugation invariance modulo double commutators", criterion_11),
        (12, "negative controls", criterion_12),
        (13, "deterministic reports", criterion_13),
    ];
    let mut failed = 0;
    for (id, name, f) in criteria {
        let start = Instant::now();
        let ok = catch_unwind(AssertUnwindSafe(f)).is_ok();
        let status = if ok { "PASS" } else { "FAIL" };
        println!("[{status}] criterion {id}: {name} ({:.2?})", start.elapsed());
        if !ok {
            failed += 1;
        }
    }
    println!("acceptance: {} passed, {failed} failed", 13 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
