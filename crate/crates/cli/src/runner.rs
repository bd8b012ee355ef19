use std::time::Instant;

use rayon::prelude::*;

use nilcayley::backend::Backend;
use nilcayley::dettheory::DetTheory;
use nilcayley::expr::{parse_element, parse_matrix, parse_rational_matrix};
use nilcayley::findim::{nilpotency_index, rational_algebra, StructureAlgebra};
use nilcayley::identities::{
    algebra_traceless, check_ch, check_conjugation, check_domokos, check_fundamental, check_ideal_nilpotency,
    check_jennings, check_power_ch, check_trace_nilpotency, grassmann_traceless,
    sample_invertible_rational, sample_matrices, CheckId, IdealKind, IdealQuotient, Params, VerificationReport,
    Verdict,
};
use nilcayley::matpoly::{PolyRing, RingMatrix};
use nilcayley::ringcore::{Ring, SampleSpec, Sampler};
use nilcayley::{with_ring, Error, Result};

use crate::config::{all_configs, RunConfig};

/// Search limit for computed nilpotency exponents.
const EXPONENT_SEARCH_LIMIT: usize = 64;

/// Runs one check and records its wall-clock time.
pub fn run_check(cfg: &RunConfig) -> Result<VerificationReport> {
    cfg.validate()?;
    let start = Instant::now();
    let mut report = dispatch(cfg)?;
    report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    Ok(report)
}

/// Runs the fixed suite in parallel; reports come back in suite order.
pub fn verify_all(seed: u64, trials: Option<usize>, slow: bool) -> Result<Vec<VerificationReport>> {
    all_configs(seed, trials, slow).par_iter().map(run_check).collect()
}

/// 0 if every report passed, 1 if any failed, 2 if any was rejected or had
/// unmet hypotheses.
pub fn exit_code(reports: &[VerificationReport]) -> i32 {
    if reports.iter().any(|r| r.verdict == Verdict::Fail) {
        1
    } else if reports.iter().all(|r| r.verdict == Verdict::Pass) {
        0
    } else {
        2
    }
}

fn params(cfg: &RunConfig, n: Option<usize>) -> Params {
    let mut p = cfg.backend.params();
    p.n = n;
    if cfg.k.is_some() {
        p.k = cfg.k;
    }
    p.seed = Some(cfg.seed);
    if cfg.matrix.is_none() {
        p.trials = Some(cfg.trials);
    }
    p
}

fn spec(cfg: &RunConfig) -> SampleSpec {
    SampleSpec::new(cfg.seed)
}

fn matrices<R: Ring>(ring: &R, cfg: &RunConfig) -> Result<Vec<RingMatrix<R::Elem>>> {
    match &cfg.matrix {
        Some(text) => Ok(vec![parse_matrix(text, ring, cfg.n)?]),
        None => Ok(sample_matrices(ring, cfg.size(), cfg.trials, &spec(cfg))),
    }
}

fn size_of<E>(ms: &[RingMatrix<E>], cfg: &RunConfig) -> Option<usize> {
    ms.first().map(|m| m.size()).or(Some(cfg.size()))
}

fn required_k(cfg: &RunConfig) -> Result<usize> {
    cfg.k.ok_or_else(|| Error::Precondition(format!("{} needs --k", cfg.check)))
}

fn dispatch(cfg: &RunConfig) -> Result<VerificationReport> {
    match cfg.check {
        CheckId::Jennings => {
            let backend = cfg.backend.build()?;
            let k = required_k(cfg)?;
            let mut p = params(cfg, None);
            p.k = Some(k);
            with_ring!(&backend, r => check_jennings(r, k, &spec(cfg), cfg.trials, p))
        }
        CheckId::Fundamental => {
            let backend = cfg.backend.build()?;
            let k = required_k(cfg)?;
            with_ring!(&backend, r => {
                let ms = matrices(r, cfg)?;
                check_fundamental(&DetTheory::with_limits(r, cfg.limits), &ms, k, params(cfg, size_of(&ms, cfg)))
            })
        }
        CheckId::Ch => {
            let backend = cfg.backend.build()?;
            let k = required_k(cfg)?;
            with_ring!(&backend, r => {
                let ms = matrices(r, cfg)?;
                let hs = match &cfg.h {
                    Some(text) => vec![parse_element(text, &PolyRing::new(r))?; ms.len()],
                    None => Vec::new(),
                };
                check_ch(&DetTheory::with_limits(r, cfg.limits), &ms, k, &hs, params(cfg, size_of(&ms, cfg)))
            })
        }
        CheckId::Domokos => {
            let backend = cfg.backend.build()?;
            with_ring!(&backend, r => {
                let ms = matrices(r, cfg)?;
                check_domokos(r, &ms, params(cfg, size_of(&ms, cfg)))
            })
        }
        CheckId::TraceNilpotency => trace_nilpotency(cfg),
        CheckId::PowerCh | CheckId::CommutatorPowerCh => power_ch(cfg),
        CheckId::Conjugation => conjugation(cfg),
        CheckId::IdealNilpotency => ideal_nilpotency(cfg),
    }
}

fn trace_nilpotency(cfg: &RunConfig) -> Result<VerificationReport> {
    let k = required_k(cfg)?;
    let p = params(cfg, Some(2));
    let backend = cfg.backend.build()?;
    if let Some(text) = &cfg.matrix {
        return with_ring!(&backend, r => {
            let a = parse_matrix(text, r, Some(2))?;
            check_trace_nilpotency(r, &[a], k, p)
        });
    }
    let mut root = Sampler::new(spec(cfg));
    match &backend {
        Backend::Grassmann(e) => {
            let fam: Vec<_> = (0..cfg.trials).map(|_| grassmann_traceless(e, &mut root.fork())).collect();
            check_trace_nilpotency(e, &fam, k, p)
        }
        Backend::Algebra(alg) => traceless_over(alg, &mut root, cfg.trials, k, p),
        Backend::Rational(_) => traceless_over(&rational_algebra(), &mut root, cfg.trials, k, p),
    }
}

fn traceless_over(
    alg: &StructureAlgebra,
    root: &mut Sampler,
    trials: usize,
    k: usize,
    p: Params,
) -> Result<VerificationReport> {
    let fam = (0..trials)
        .map(|_| algebra_traceless(alg, &mut root.fork()))
        .collect::<Result<Vec<_>>>()?;
    check_trace_nilpotency(alg, &fam, k, p)
}

fn power_ch(cfg: &RunConfig) -> Result<VerificationReport> {
    let alg = cfg.backend.structure_algebra()?;
    let kind = match cfg.check {
        CheckId::CommutatorPowerCh => IdealKind::Commutator,
        _ => IdealKind::DoubleCommutator,
    };
    let ctx = IdealQuotient::new(&alg, kind)?;
    let exponent = match (cfg.exponent, kind) {
        (Some(e), _) => e,
        (None, IdealKind::DoubleCommutator) => cfg.backend.double_commutator_exponent(&alg)?,
        (None, _) => nilpotency_index(&alg, ctx.ideal(), EXPONENT_SEARCH_LIMIT)
            .ok_or_else(|| Error::Precondition("commutator ideal is not nilpotent; pass --exponent".into()))?,
    };
    let ms = matrices(&alg, cfg)?;
    let mut p = params(cfg, size_of(&ms, cfg));
    p.exponent = Some(exponent);
    p.lift = Some(cfg.lift.to_string());
    check_power_ch(&ctx, &ms, exponent, cfg.lift, cfg.k, p)
}

fn conjugation(cfg: &RunConfig) -> Result<VerificationReport> {
    let alg = cfg.backend.structure_algebra()?;
    let ctx = IdealQuotient::new(&alg, IdealKind::DoubleCommutator)?;
    let ms = matrices(&alg, cfg)?;
    let n = size_of(&ms, cfg).expect("size");
    let mut sampler = Sampler::new(SampleSpec::new(cfg.seed ^ 0x7a11));
    let pairs = ms
        .into_iter()
        .map(|a| {
            let t = match &cfg.transform {
                Some(text) => parse_rational_matrix(text, Some(n))?,
                None => sample_invertible_rational(n, &mut sampler),
            };
            Ok((a, t))
        })
        .collect::<Result<Vec<_>>>()?;
    check_conjugation(&ctx, &pairs, params(cfg, Some(n)))
}

fn ideal_nilpotency(cfg: &RunConfig) -> Result<VerificationReport> {
    let alg = cfg.backend.structure_algebra()?;
    let kind = cfg.ideal.unwrap_or(IdealKind::DoubleCommutator);
    let expected = match (cfg.exponent, kind) {
        (Some(e), _) => e,
        (None, IdealKind::DoubleCommutator) => cfg.backend.double_commutator_exponent(&alg)?,
        (None, IdealKind::Jennings(_)) => 2,
        (None, IdealKind::Commutator) => {
            return Err(Error::Precondition("commutator ideal nilpotency needs --exponent".into()))
        }
    };
    let mut p = params(cfg, None);
    p.trials = None;
    p.exponent = Some(expected);
    check_ideal_nilpotency(&alg, kind, expected, p)
}
