//! Instance-level verification of the trace and power Cayley-Hamilton
//! identities, with structured reports carrying exact residuals.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::dettheory::{char_poly_degree, CharPolyResult, DetTheory};
use crate::error::{Error, Result};
use crate::findim::{
    commutator_ideal, double_commutator_ideal, ideal_power, invert, jennings_ideal, nilpotency_index, quotient,
    solve, AlgebraElement, QuotientAlgebra, StructureAlgebra, Subspace,
};
use crate::grassmann::{GrassmannAlgebra, GrassmannElement};
use crate::matpoly::{self, render_matrix, CentralPoly, PolyRing, RingMatrix};
use crate::ringcore::{commutator, is_lie_nilpotent_sampled, left_normed, Rational, Ring, SampleSpec, Sampler};

/// Witnesses kept per report; further failures are only counted.
pub const MAX_WITNESSES: usize = 5;

/// Trials used for the sampled Lie-nilpotency note attached to matrix checks.
const HYPOTHESIS_TRIALS: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckId {
    Jennings,
    Fundamental,
    Ch,
    Domokos,
    TraceNilpotency,
    PowerCh,
    CommutatorPowerCh,
    Conjugation,
    IdealNilpotency,
}

impl CheckId {
    pub const ALL: [CheckId; 9] = [
        CheckId::Jennings,
        CheckId::Fundamental,
        CheckId::Ch,
        CheckId::Domokos,
        CheckId::TraceNilpotency,
        CheckId::PowerCh,
        CheckId::CommutatorPowerCh,
        CheckId::Conjugation,
        CheckId::IdealNilpotency,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckId::Jennings => "jennings",
            CheckId::Fundamental => "fundamental",
            CheckId::Ch => "ch",
            CheckId::Domokos => "domokos",
            CheckId::TraceNilpotency => "trace-nilpotency",
            CheckId::PowerCh => "power-ch",
            CheckId::CommutatorPowerCh => "commutator-power-ch",
            CheckId::Conjugation => "conjugation",
            CheckId::IdealNilpotency => "ideal-nilpotency",
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckId::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown check `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    HypothesesUnmet,
    Rejected,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::HypothesesUnmet => "hypotheses_unmet",
            Verdict::Rejected => "rejected",
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trials: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exponent: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lift: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeInfo {
    /// Level of the characteristic polynomial that was computed.
    pub level: usize,
    /// `n^level`.
    pub char_poly_degree: usize,
    pub leading_coefficient: String,
    /// Power to which the substituted polynomial is raised.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exponent: Option<usize>,
    /// `char_poly_degree · exponent`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub power_identity_degree: Option<usize>,
    /// `n^k` of the direct identity for a Lie nilpotent ring of index `k`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub direct_degree: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealInfo {
    pub kind: String,
    pub rank: usize,
    pub algebra_dim: usize,
    /// Least `s` with `I^s = 0`, if found within the search limit.
    pub nilpotency_index: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub label: String,
    pub inputs: BTreeMap<String, String>,
    pub residual: String,
}

impl Witness {
    pub fn new(label: impl Into<String>, residual: impl Into<String>) -> Self {
        Witness {
            label: label.into(),
            inputs: BTreeMap::new(),
            residual: residual.into(),
        }
    }

    pub fn input(mut self, name: &str, value: impl Into<String>) -> Self {
        self.inputs.insert(name.to_string(), value.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub backend: String,
    pub params: Params,
    pub verdict: Verdict,
    pub instances: usize,
    pub failures: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree_info: Option<DegreeInfo>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ideal_info: Option<IdealInfo>,
    pub witnesses: Vec<Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lifted_coefficients: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl VerificationReport {
    pub fn new(check: CheckId, backend: impl Into<String>, params: Params) -> Self {
        VerificationReport {
            theorem: check.as_str().to_string(),
            backend: backend.into(),
            params,
            verdict: Verdict::Pass,
            instances: 0,
            failures: 0,
            degree_info: None,
            ideal_info: None,
            witnesses: Vec::new(),
            lifted_coefficients: None,
            notes: Vec::new(),
            elapsed_ms: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// Counts one checked instance; a witness marks it failed.
    pub fn record(&mut self, witness: Option<Witness>) {
        self.instances += 1;
        if let Some(w) = witness {
            self.fail(w);
        }
    }

    /// Records a failure without counting a new instance.
    pub fn fail(&mut self, witness: Witness) {
        self.failures += 1;
        self.verdict = Verdict::Fail;
        if self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push(witness);
        }
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    fn reject(mut self, verdict: Verdict, reason: impl Into<String>) -> Self {
        self.verdict = verdict;
        self.notes.push(reason.into());
        self
    }
}

pub fn sample_matrix<R: Ring>(ring: &R, n: usize, sampler: &mut Sampler) -> RingMatrix<R::Elem> {
    RingMatrix::from_fn(n, |_, _| sampler.element(ring))
}

/// `count` matrices, each from its own forked stream of `spec`.
pub fn sample_matrices<R: Ring>(ring: &R, n: usize, count: usize, spec: &SampleSpec) -> Vec<RingMatrix<R::Elem>> {
    let mut root = Sampler::new(spec.clone());
    (0..count).map(|_| sample_matrix(ring, n, &mut root.fork())).collect()
}

/// Random invertible `n x n` matrix with small integer entries.
pub fn sample_invertible_rational(n: usize, sampler: &mut Sampler) -> Vec<Vec<Rational>> {
    loop {
        let t: Vec<Vec<Rational>> = (0..n)
            .map(|_| (0..n).map(|_| Rational::from_int(sampler.small_int(3))).collect())
            .collect();
        if invert(&t).is_ok() {
            return t;
        }
    }
}

/// `T^{-1} A T` for a rational matrix `T`.
pub fn conjugate<R: Ring>(ring: &R, a: &RingMatrix<R::Elem>, t: &[Vec<Rational>]) -> Result<RingMatrix<R::Elem>> {
    let tinv = invert(t)?;
    let tm = matpoly::from_rational(ring, t)?;
    let ti = matpoly::from_rational(ring, &tinv)?;
    matpoly::mul(ring, &matpoly::mul(ring, &ti, a)?, &tm)
}

fn render_rational_matrix(t: &[Vec<Rational>]) -> String {
    let rows: Vec<String> = t
        .iter()
        .map(|r| format!("[{}]", r.iter().map(|q| q.to_string()).collect::<Vec<_>>().join(", ")))
        .collect();
    format!("[{}]", rows.join(", "))
}

fn render_poly<R: Ring>(ring: &R, coeffs: &[R::Elem]) -> Vec<String> {
    coeffs.iter().map(|c| ring.render(c)).collect()
}

fn hypothesis_note<R: Ring>(ring: &R, k: usize, seed: u64) -> Result<String> {
    let rep = is_lie_nilpotent_sampled(ring, k, &SampleSpec::new(seed), HYPOTHESIS_TRIALS)?;
    Ok(if rep.holds {
        format!("sampled Lie nilpotency of index {k}: holds on {} tuples", rep.tuples_checked)
    } else {
        let (xs, c) = rep.witness.expect("witness on failure");
        let args: Vec<String> = xs.iter().map(|x| ring.render(x)).collect();
        format!(
            "sampled Lie nilpotency of index {k}: fails, [{}] = {}",
            args.join(", "),
            ring.render(&c)
        )
    })
}

/// Products of two left-normed `k`-commutators vanish and each such
/// commutator is central. Requires `k >= 3` and a sampled index-`k` ring.
pub fn check_jennings<R: Ring>(
    ring: &R,
    k: usize,
    spec: &SampleSpec,
    trials: usize,
    params: Params,
) -> Result<VerificationReport> {
    let report = VerificationReport::new(CheckId::Jennings, ring.describe(), params);
    if k < 3 {
        return Ok(report.reject(Verdict::Rejected, format!("requires k >= 3, got k = {k}")));
    }
    let pre = is_lie_nilpotent_sampled(ring, k, spec, trials.max(1))?;
    if let Some((xs, c)) = pre.witness {
        let args: Vec<String> = xs.iter().map(|x| ring.render(x)).collect();
        let mut report = report.reject(
            Verdict::HypothesesUnmet,
            format!("backend is not Lie nilpotent of index {k}"),
        );
        report
            .witnesses
            .push(Witness::new("lie nilpotency", ring.render(&c)).input("tuple", args.join(", ")));
        return Ok(report);
    }
    let mut report = report;
    report.note(format!(
        "sampled Lie nilpotency of index {k}: holds on {} tuples",
        pre.tuples_checked
    ));
    let gens: Vec<R::Elem> = ring.generators().into_iter().map(|(_, g)| g).collect();
    let mut root = Sampler::new(spec.clone());
    for _ in 0..trials {
        let mut s = root.fork();
        let xs: Vec<R::Elem> = (0..k).map(|_| s.element(ring)).collect();
        let ys: Vec<R::Elem> = (0..k).map(|_| s.element(ring)).collect();
        let cx = left_normed(ring, &xs)?;
        let cy = left_normed(ring, &ys)?;
        let prod = ring.mul(&cx, &cy);
        let render_all = |v: &[R::Elem]| v.iter().map(|x| ring.render(x)).collect::<Vec<_>>().join(", ");
        if !ring.is_zero(&prod) {
            report.record(Some(
                Witness::new("commutator product", ring.render(&prod))
                    .input("x", render_all(&xs))
                    .input("y", render_all(&ys)),
            ));
            continue;
        }
        let probe = s.element(ring);
        let non_central = gens
            .iter()
            .chain(std::iter::once(&probe))
            .map(|g| (g, commutator(ring, &cx, g)))
            .find(|(_, c)| !ring.is_zero(c));
        report.record(non_central.map(|(g, c)| {
            Witness::new("centrality", ring.render(&c))
                .input("x", render_all(&xs))
                .input("against", ring.render(g))
        }));
    }
    Ok(report)
}

/// `A · radj_(k)(A) = n A P_1 ⋯ P_k = rdet_(k)(A) I_n`.
pub fn fundamental_instance<R: Ring>(dt: &DetTheory<'_, R>, a: &RingMatrix<R::Elem>, k: usize) -> Result<Option<Witness>> {
    let ring = dt.ring();
    let n = Rational::from_int(a.size() as i64);
    let chain = dt.right_adjoint_chain(a, k)?;
    let radj = matpoly::scalar_mul(ring, &n, chain.factor_product());
    let lhs = matpoly::mul(ring, a, &radj)?;
    let middle = matpoly::scalar_mul(ring, &n, &chain.running_products()[k - 1]);
    let rdet = matpoly::trace(ring, &chain.running_products()[k - 1]);
    let rhs = matpoly::scalar_matrix(ring, a.size(), &rdet);
    for (label, x, y) in [("A radj vs n A P1..Pk", &lhs, &middle), ("A radj vs rdet I", &lhs, &rhs)] {
        let diff = matpoly::sub(ring, x, y)?;
        if !matpoly::is_zero_matrix(ring, &diff) {
            return Ok(Some(
                Witness::new(label, render_matrix(ring, &diff))
                    .input("A", render_matrix(ring, a))
                    .input("k", k.to_string()),
            ));
        }
    }
    Ok(None)
}

pub fn check_fundamental<R: Ring>(
    dt: &DetTheory<'_, R>,
    matrices: &[RingMatrix<R::Elem>],
    k: usize,
    params: Params,
) -> Result<VerificationReport> {
    let ring = dt.ring();
    let mut report = VerificationReport::new(CheckId::Fundamental, ring.describe(), params);
    report.note(hypothesis_note(ring, k, report.params.seed.unwrap_or(0))?);
    for a in matrices {
        report.record(fundamental_instance(dt, a, k)?);
    }
    Ok(report)
}

/// Computes `p_{A,k}` and the residual `(A)p_{A,k}`, and `(A)(p_{A,k} h)` if `h` is given.
pub fn ch_instance<R: Ring>(
    dt: &DetTheory<'_, R>,
    a: &RingMatrix<R::Elem>,
    k: usize,
    h: Option<&CentralPoly<R::Elem>>,
) -> Result<(CharPolyResult<R::Elem>, Option<Witness>)> {
    let ring = dt.ring();
    let cp = dt.char_poly(a, k)?;
    let pr = PolyRing::new(ring);
    let p = pr.from_coefficients(cp.coefficients.clone());
    let mut cases = vec![("(A)p", p.clone())];
    if let Some(h) = h {
        cases.push(("(A)(p h)", pr.mul(&p, h)));
    }
    for (label, poly) in cases {
        let residual = matpoly::poly_eval_right(ring, a, &poly);
        if !matpoly::is_zero_matrix(ring, &residual) {
            let mut w = Witness::new(label, render_matrix(ring, &residual))
                .input("A", render_matrix(ring, a))
                .input("k", k.to_string())
                .input("p", render_poly(ring, &cp.coefficients).join("; "));
            if let Some(h) = h {
                w = w.input("h", pr.render(h));
            }
            return Ok((cp, Some(w)));
        }
    }
    Ok((cp, None))
}

/// Right Cayley-Hamilton identity of level `k`. `hs[i]`, if present, is the
/// extra factor used with `matrices[i]`.
pub fn check_ch<R: Ring>(
    dt: &DetTheory<'_, R>,
    matrices: &[RingMatrix<R::Elem>],
    k: usize,
    hs: &[CentralPoly<R::Elem>],
    params: Params,
) -> Result<VerificationReport> {
    let ring = dt.ring();
    let mut report = VerificationReport::new(CheckId::Ch, ring.describe(), params);
    report.note(hypothesis_note(ring, k, report.params.seed.unwrap_or(0))?);
    for (i, a) in matrices.iter().enumerate() {
        let (cp, w) = ch_instance(dt, a, k, hs.get(i))?;
        if report.degree_info.is_none() {
            report.degree_info = Some(DegreeInfo {
                level: k,
                char_poly_degree: cp.degree(),
                leading_coefficient: ring.render(cp.coefficients.last().expect("nonempty")),
                exponent: None,
                power_identity_degree: None,
                direct_degree: Some(cp.degree()),
            });
        }
        report.record(w);
    }
    Ok(report)
}

/// The trace form of the level-2 identity for `2 x 2` matrices, evaluated
/// with every coefficient on the right of the power of `A`.
pub fn domokos_residual<R: Ring>(ring: &R, a: &RingMatrix<R::Elem>) -> Result<RingMatrix<R::Elem>> {
    if a.size() != 2 {
        return Err(Error::SizeMismatch(a.size(), 2));
    }
    let pw = matpoly::powers(ring, a, 4);
    let t1 = matpoly::trace(ring, &pw[1]);
    let t2 = matpoly::trace(ring, &pw[2]);
    let t3 = matpoly::trace(ring, &pw[3]);
    let m = |x: &R::Elem, y: &R::Elem| ring.mul(x, y);
    let q = |n: i64, d: i64| Rational::new(n, d).expect("nonzero denominator");
    let t1_2 = m(&t1, &t1);
    let t1_3 = m(&t1_2, &t1);
    let t1_4 = m(&t1_3, &t1);
    let c0 = ring.sum(&[
        ring.scale(&q(1, 2), &t1_4),
        ring.scale(&q(1, 2), &m(&t2, &t2)),
        ring.scale(&q(1, 4), &m(&t1_2, &t2)),
        ring.scale(&q(-5, 4), &m(&t2, &t1_2)),
        commutator(ring, &t3, &t1),
    ]);
    let c1 = ring.sum(&[m(&t1, &t2), m(&t2, &t1), ring.scale(&q(-2, 1), &t1_3)]);
    let c2 = ring.sub(&ring.scale(&q(4, 1), &t1_2), &ring.scale(&q(2, 1), &t2));
    let c3 = ring.scale(&q(-4, 1), &t1);
    let c4 = ring.from_int(2);
    let pr = PolyRing::new(ring);
    Ok(matpoly::poly_eval_right(ring, a, &pr.from_coefficients(vec![c0, c1, c2, c3, c4])))
}

pub fn check_domokos<R: Ring>(ring: &R, matrices: &[RingMatrix<R::Elem>], params: Params) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(CheckId::Domokos, ring.describe(), params);
    report.note(hypothesis_note(ring, 2, report.params.seed.unwrap_or(0))?);
    for a in matrices {
        let r = domokos_residual(ring, a)?;
        report.record((!matpoly::is_zero_matrix(ring, &r)).then(|| {
            Witness::new("trace form", render_matrix(ring, &r)).input("A", render_matrix(ring, a))
        }));
    }
    Ok(report)
}

/// `tr(A) = tr(A^2) = 0` for a `2 x 2` matrix over an index-`k` ring forces `A^{2^k} = 0`.
pub fn check_trace_nilpotency<R: Ring>(
    ring: &R,
    matrices: &[RingMatrix<R::Elem>],
    k: usize,
    params: Params,
) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(CheckId::TraceNilpotency, ring.describe(), params);
    let mut unmet = 0;
    for a in matrices {
        if a.size() != 2 {
            return Err(Error::SizeMismatch(a.size(), 2));
        }
        let a2 = matpoly::mul(ring, a, a)?;
        let (tr1, tr2) = (matpoly::trace(ring, a), matpoly::trace(ring, &a2));
        if !ring.is_zero(&tr1) || !ring.is_zero(&tr2) {
            unmet += 1;
            report.note(format!(
                "hypotheses unmet for {}: tr(A) = {}, tr(A^2) = {}",
                render_matrix(ring, a),
                ring.render(&tr1),
                ring.render(&tr2)
            ));
            continue;
        }
        let mut p = a2;
        for _ in 1..k {
            p = matpoly::mul(ring, &p, &p)?;
        }
        report.record((!matpoly::is_zero_matrix(ring, &p)).then(|| {
            Witness::new(format!("A^{}", 1u64 << k), render_matrix(ring, &p))
                .input("A", render_matrix(ring, a))
                .input("k", k.to_string())
        }));
    }
    if unmet > 0 && report.verdict == Verdict::Pass {
        report.verdict = Verdict::HypothesesUnmet;
    }
    Ok(report)
}

/// `[[a, b], [c, -a]]` with odd `a, b, c`, conjugated by a random rational
/// matrix: `a^2 = 0` and `bc + cb = 0` make both traces vanish.
pub fn grassmann_traceless(e: &GrassmannAlgebra, sampler: &mut Sampler) -> RingMatrix<GrassmannElement> {
    let a = e.sample_odd(sampler);
    let b = e.sample_odd(sampler);
    let c = e.sample_odd(sampler);
    let m = RingMatrix::from_rows(vec![vec![a.clone(), b], vec![c, e.neg(&a)]]).expect("square");
    let t = sample_invertible_rational(2, sampler);
    conjugate(e, &m, &t).expect("invertible")
}

/// `[[a, b], [c, -a]]` with `b = β + (augmentation part)` and `c` solving
/// `bc + cb = -2a^2`, conjugated by a random rational matrix. The linear map
/// `c ↦ bc + cb` is invertible when the augmentation part is nilpotent.
pub fn algebra_traceless(alg: &StructureAlgebra, sampler: &mut Sampler) -> Result<RingMatrix<AlgebraElement>> {
    let a = sampler.element(alg);
    let beta = sampler.rational();
    let b = alg.add(&alg.from_rational(&beta), &sampler.element_with_min_degree(alg, 1));
    let columns: Vec<Vec<Rational>> = (0..alg.dim())
        .map(|i| {
            let x = alg.basis(i);
            alg.add(&alg.mul(&b, &x), &alg.mul(&x, &b)).into_coords()
        })
        .collect();
    let rhs = alg.scale(&Rational::from_int(-2), &alg.mul(&a, &a));
    let c = solve(&columns, rhs.coords())
        .map(AlgebraElement::new)
        .ok_or_else(|| Error::Precondition("bc + cb = -2a^2 has no solution".into()))?;
    let m = RingMatrix::from_rows(vec![vec![a.clone(), b], vec![c, alg.neg(&a)]])?;
    let t = sample_invertible_rational(2, sampler);
    conjugate(alg, &m, &t)
}

/// Which ideal a quotient check works modulo.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdealKind {
    /// `R[[R,R],R]R`.
    DoubleCommutator,
    /// `R[R,R]R`.
    Commutator,
    /// Ideal generated by the left-normed `k`-commutators.
    Jennings(usize),
}

impl fmt::Display for IdealKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealKind::DoubleCommutator => f.write_str("double-commutator"),
            IdealKind::Commutator => f.write_str("commutator"),
            IdealKind::Jennings(k) => write!(f, "jennings({k})"),
        }
    }
}

pub fn compute_ideal(alg: &StructureAlgebra, kind: IdealKind) -> Result<Subspace> {
    match kind {
        IdealKind::DoubleCommutator => Ok(double_commutator_ideal(alg)),
        IdealKind::Commutator => Ok(commutator_ideal(alg)),
        IdealKind::Jennings(k) => jennings_ideal(alg, k),
    }
}

/// An algebra together with a computed ideal and the quotient by it.
#[derive(Clone, Debug)]
pub struct IdealQuotient {
    kind: IdealKind,
    quotient: QuotientAlgebra,
}

impl IdealQuotient {
    pub fn new(alg: &StructureAlgebra, kind: IdealKind) -> Result<Self> {
        let ideal = compute_ideal(alg, kind)?;
        Ok(IdealQuotient {
            kind,
            quotient: quotient(alg, &ideal)?,
        })
    }

    pub fn kind(&self) -> IdealKind {
        self.kind
    }

    pub fn parent(&self) -> &StructureAlgebra {
        self.quotient.parent()
    }

    pub fn ideal(&self) -> &Subspace {
        self.quotient.ideal()
    }

    pub fn quotient(&self) -> &QuotientAlgebra {
        &self.quotient
    }

    /// Level of the characteristic polynomial that annihilates matrices over
    /// the quotient: 2 modulo double commutators, 1 modulo commutators.
    pub fn level(&self) -> Result<usize> {
        match self.kind {
            IdealKind::DoubleCommutator => Ok(2),
            IdealKind::Commutator => Ok(1),
            IdealKind::Jennings(_) => Err(Error::Precondition(
                "power identities use the double commutator or commutator ideal".into(),
            )),
        }
    }

    pub fn info(&self, limit: usize) -> IdealInfo {
        IdealInfo {
            kind: self.kind.to_string(),
            rank: self.ideal().rank(),
            algebra_dim: self.parent().dim(),
            nilpotency_index: nilpotency_index(self.parent(), self.ideal(), limit),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LiftStrategy {
    /// The canonical section of the quotient.
    Canonical,
    /// Canonical section plus a seeded random element of the ideal.
    Randomized { seed: u64 },
}

impl fmt::Display for LiftStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LiftStrategy::Canonical => f.write_str("canonical"),
            LiftStrategy::Randomized { seed } => write!(f, "randomized:{seed}"),
        }
    }
}

/// Result of one power identity instance.
#[derive(Clone, Debug)]
pub struct PowerChInstance {
    /// Lifted coefficients `λ_0, ..., λ_{n^level}` in the parent algebra.
    pub lifted: Vec<AlgebraElement>,
    /// `Σ A^i λ_i`.
    pub value: RingMatrix<AlgebraElement>,
    pub witness: Option<Witness>,
}

/// Projects `A` to the quotient, computes the characteristic polynomial of
/// the matching level there, lifts its coefficients, and checks that
/// `P = Σ A^i λ_i` has entries in the ideal and that `P^exponent = 0`.
pub fn power_ch_instance(
    ctx: &IdealQuotient,
    a: &RingMatrix<AlgebraElement>,
    exponent: usize,
    lift_sampler: Option<&mut Sampler>,
) -> Result<PowerChInstance> {
    let alg = ctx.parent();
    let quot = ctx.quotient();
    let level = ctx.level()?;
    let image = matpoly::matrix_image(a, quot)?;
    let cp = DetTheory::new(quot.algebra()).char_poly(&image, level)?;
    let mut lifted: Vec<AlgebraElement> = cp.coefficients.iter().map(|c| quot.lift(c)).collect();
    if let Some(s) = lift_sampler {
        let rank = ctx.ideal().rank();
        for c in lifted.iter_mut() {
            let coeffs: Vec<Rational> = (0..rank).map(|_| s.rational()).collect();
            *c = alg.add(c, &quot.ideal_element(&coeffs));
        }
    }
    let pr = PolyRing::new(alg);
    let value = matpoly::poly_eval_right(alg, a, &pr.from_coefficients(lifted.clone()));
    let base = |label: &str, residual: String| {
        Witness::new(label, residual)
            .input("A", render_matrix(alg, a))
            .input("lifted", lifted.iter().map(|c| alg.render(c)).collect::<Vec<_>>().join("; "))
    };
    let outside = value.entries().iter().find(|x| !quot.in_ideal(x));
    let witness = if let Some(x) = outside {
        Some(base("entry outside the ideal", alg.render(x)))
    } else {
        let p = matpoly::power(alg, &value, exponent as u32);
        (!matpoly::is_zero_matrix(alg, &p)).then(|| base(&format!("P^{exponent}"), render_matrix(alg, &p)))
    };
    Ok(PowerChInstance { lifted, value, witness })
}

/// Power identity over every matrix in `matrices`. `direct_k`, when known,
/// is the Lie nilpotency index used to report the direct degree `n^k`.
pub fn check_power_ch(
    ctx: &IdealQuotient,
    matrices: &[RingMatrix<AlgebraElement>],
    exponent: usize,
    lift: LiftStrategy,
    direct_k: Option<usize>,
    params: Params,
) -> Result<VerificationReport> {
    let check = match ctx.kind() {
        IdealKind::Commutator => CheckId::CommutatorPowerCh,
        _ => CheckId::PowerCh,
    };
    let alg = ctx.parent();
    let mut report = VerificationReport::new(check, alg.describe(), params);
    report.ideal_info = Some(ctx.info(exponent.max(1) + 8));
    if exponent == 0 {
        return Err(Error::OutOfRange {
            what: "exponent",
            value: 0,
            allowed: ">= 1".into(),
        });
    }
    let level = ctx.level()?;
    let power = ideal_power(alg, ctx.ideal(), exponent)?;
    if !power.is_zero() {
        report.fail(Witness::new(
            format!("ideal power {exponent}"),
            format!("rank {}", power.rank()),
        ));
        return Ok(report);
    }
    let mut sampler = match lift {
        LiftStrategy::Canonical => None,
        LiftStrategy::Randomized { seed } => Some(Sampler::new(SampleSpec::new(seed))),
    };
    for a in matrices {
        let inst = power_ch_instance(ctx, a, exponent, sampler.as_mut())?;
        if report.degree_info.is_none() {
            let n = a.size();
            let deg = char_poly_degree(n, level)?;
            report.degree_info = Some(DegreeInfo {
                level,
                char_poly_degree: deg,
                leading_coefficient: alg.render(inst.lifted.last().expect("nonempty")),
                exponent: Some(exponent),
                power_identity_degree: Some(deg * exponent),
                direct_degree: direct_k.map(|k| char_poly_degree(n, k)).transpose()?,
            });
            report.lifted_coefficients = Some(inst.lifted.iter().map(|c| alg.render(c)).collect());
        }
        report.record(inst.witness);
    }
    Ok(report)
}

/// Level-2 characteristic polynomials of `A` and `T^{-1} A T` agree modulo
/// the double commutator ideal.
pub fn conjugation_instance(
    ctx: &IdealQuotient,
    a: &RingMatrix<AlgebraElement>,
    t: &[Vec<Rational>],
) -> Result<Option<Witness>> {
    let alg = ctx.parent();
    let quot = ctx.quotient();
    let conj = conjugate(alg, a, t)?;
    let dt = DetTheory::new(quot.algebra());
    let p = dt.char_poly(&matpoly::matrix_image(a, quot)?, 2)?;
    let pc = dt.char_poly(&matpoly::matrix_image(&conj, quot)?, 2)?;
    Ok((p != pc).then(|| {
        let q = quot.algebra();
        let diff: Vec<String> = p
            .coefficients
            .iter()
            .zip(&pc.coefficients)
            .map(|(x, y)| q.render(&q.sub(x, y)))
            .collect();
        Witness::new("coefficient difference", diff.join("; "))
            .input("A", render_matrix(alg, a))
            .input("T", render_rational_matrix(t))
    }))
}

pub fn check_conjugation(
    ctx: &IdealQuotient,
    pairs: &[(RingMatrix<AlgebraElement>, Vec<Vec<Rational>>)],
    params: Params,
) -> Result<VerificationReport> {
    let alg = ctx.parent();
    let mut report = VerificationReport::new(CheckId::Conjugation, alg.describe(), params);
    report.ideal_info = Some(ctx.info(8));
    for (a, t) in pairs {
        report.record(conjugation_instance(ctx, a, t)?);
    }
    Ok(report)
}

/// The ideal's least vanishing power is at most `expected`.
pub fn check_ideal_nilpotency(
    alg: &StructureAlgebra,
    kind: IdealKind,
    expected: usize,
    params: Params,
) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(CheckId::IdealNilpotency, alg.describe(), params);
    let ideal = compute_ideal(alg, kind)?;
    let index = nilpotency_index(alg, &ideal, expected.max(1));
    report.ideal_info = Some(IdealInfo {
        kind: kind.to_string(),
        rank: ideal.rank(),
        algebra_dim: alg.dim(),
        nilpotency_index: index,
    });
    let w = if index.is_none() {
        let p = ideal_power(alg, &ideal, expected.max(1))?;
        Some(Witness::new(format!("{kind} ideal power {expected}"), format!("rank {}", p.rank())))
    } else {
        None
    };
    report.record(w);
    Ok(report)
}
