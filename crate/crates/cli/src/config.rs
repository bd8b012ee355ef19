use nilcayley::backend::BackendSpec;
use nilcayley::dettheory::Limits;
use nilcayley::identities::{CheckId, IdealKind, LiftStrategy};
use nilcayley::Error;

use crate::args::{CapArgs, CheckArg, IdealArg, LiftArg, VerifyArgs};

/// A fully resolved verification request.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub check: CheckId,
    pub backend: BackendSpec,
    /// Matrix size; `None` means the check's default, or the size of `matrix`.
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub exponent: Option<usize>,
    pub seed: u64,
    pub trials: usize,
    pub lift: LiftStrategy,
    pub ideal: Option<IdealKind>,
    pub matrix: Option<String>,
    pub transform: Option<String>,
    pub h: Option<String>,
    pub limits: Limits,
}

/// Default backend, matrix size and trial count of each check.
pub fn defaults(check: CheckId) -> (&'static str, usize, usize) {
    match check {
        CheckId::Jennings => ("relfree:2,3,5", 2, 20),
        CheckId::Fundamental => ("grassmann:4", 2, 10),
        CheckId::Ch => ("grassmann:4", 2, 10),
        CheckId::Domokos => ("grassmann:4", 2, 20),
        CheckId::TraceNilpotency => ("grassmann:4", 2, 10),
        CheckId::PowerCh => ("relfree:2,3,5", 2, 5),
        CheckId::CommutatorPowerCh => ("utri:2:rational", 2, 10),
        CheckId::Conjugation => ("utri:2:grassmann:2", 2, 5),
        CheckId::IdealNilpotency => ("relfree:2,3,5", 2, 1),
    }
}

pub fn check_id(arg: CheckArg) -> Option<CheckId> {
    Some(match arg {
        CheckArg::Jennings => CheckId::Jennings,
        CheckArg::Fundamental => CheckId::Fundamental,
        CheckArg::Ch => CheckId::Ch,
        CheckArg::Domokos => CheckId::Domokos,
        CheckArg::TraceNilpotency => CheckId::TraceNilpotency,
        CheckArg::PowerCh => CheckId::PowerCh,
        CheckArg::CommutatorPowerCh => CheckId::CommutatorPowerCh,
        CheckArg::Conjugation => CheckId::Conjugation,
        CheckArg::IdealNilpotency => CheckId::IdealNilpotency,
        CheckArg::All => return None,
    })
}

pub fn limits(caps: &CapArgs) -> Limits {
    let d = Limits::default();
    Limits {
        max_n: caps.max_n.unwrap_or(d.max_n),
        max_k: caps.max_k.unwrap_or(d.max_k),
    }
}

fn config_error(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}

impl RunConfig {
    /// Default configuration of a check with the given seed.
    pub fn default_for(check: CheckId, seed: u64) -> Self {
        let (backend, _, trials) = defaults(check);
        let backend: BackendSpec = backend.parse().expect("valid default backend");
        RunConfig {
            check,
            k: backend.lie_index(),
            backend,
            n: None,
            exponent: None,
            seed,
            trials,
            lift: LiftStrategy::Canonical,
            ideal: None,
            matrix: None,
            transform: None,
            h: None,
            limits: Limits::default(),
        }
    }

    pub fn from_args(check: CheckId, args: &VerifyArgs) -> Result<Self, Error> {
        let mut cfg = RunConfig::default_for(check, args.seed);
        if let Some(b) = &args.backend {
            cfg.backend = b.parse()?;
        }
        if let Some(t) = args.t {
            cfg.backend = BackendSpec::UpperTriangular {
                t,
                base: Box::new(cfg.backend),
            };
        }
        cfg.k = args.k.or(cfg.backend.lie_index());
        cfg.n = args.n;
        if let Some(trials) = args.trials {
            cfg.trials = trials;
        }
        cfg.exponent = args.exponent;
        cfg.lift = match args.lift {
            LiftArg::Canonical => LiftStrategy::Canonical,
            LiftArg::Randomized => LiftStrategy::Randomized { seed: args.seed },
        };
        cfg.ideal = match args.ideal {
            None => None,
            Some(IdealArg::DoubleCommutator) => Some(IdealKind::DoubleCommutator),
            Some(IdealArg::Commutator) => Some(IdealKind::Commutator),
            Some(IdealArg::Jennings) => Some(IdealKind::Jennings(
                cfg.k.ok_or_else(|| config_error("--ideal jennings needs --k"))?,
            )),
        };
        cfg.matrix = args.matrix.clone();
        cfg.transform = args.transform.clone();
        cfg.h = args.h.clone();
        cfg.limits = limits(&args.caps);
        cfg.validate()?;
        Ok(cfg)
    }

    /// Matrix size used for sampling.
    pub fn size(&self) -> usize {
        self.n.unwrap_or(defaults(self.check).1)
    }

    /// Consistency rules between the check and its parameters.
    pub fn validate(&self) -> Result<(), Error> {
        if self.n == Some(0) {
            return Err(config_error("--n must be at least 1"));
        }
        let needs_k = matches!(
            self.check,
            CheckId::Jennings | CheckId::Fundamental | CheckId::Ch | CheckId::TraceNilpotency
        );
        if needs_k && self.k.is_none() {
            return Err(config_error(format!(
                "{} needs --k: the Lie nilpotency index of {} is not known from its construction",
                self.check, self.backend
            )));
        }
        if matches!(self.check, CheckId::Domokos | CheckId::TraceNilpotency) && self.n.is_some_and(|n| n != 2) {
            return Err(config_error(format!("{} applies to 2 x 2 matrices only", self.check)));
        }
        if self.h.is_some() && self.check != CheckId::Ch {
            return Err(config_error("--h applies to `ch` only"));
        }
        if self.transform.is_some() && self.check != CheckId::Conjugation {
            return Err(config_error("--transform applies to `conjugation` only"));
        }
        if self.ideal.is_some() && self.check != CheckId::IdealNilpotency {
            return Err(config_error("--ideal applies to `ideal-nilpotency` only"));
        }
        if self.matrix.is_some() && matches!(self.check, CheckId::Jennings | CheckId::IdealNilpotency) {
            return Err(config_error(format!("{} does not take a matrix", self.check)));
        }
        if self.trials == 0 && self.matrix.is_none() {
            return Err(config_error("--trials must be at least 1"));
        }
        if self.exponent == Some(0) {
            return Err(config_error("--exponent must be at least 1"));
        }
        Ok(())
    }
}

/// The fixed suite run by `verify all`, ordered by check id.
pub fn all_configs(seed: u64, trials: Option<usize>, slow: bool) -> Vec<RunConfig> {
    let mut out: Vec<RunConfig> = CheckId::ALL
        .into_iter()
        .map(|c| {
            let mut cfg = RunConfig::default_for(c, seed);
            if let Some(t) = trials {
                cfg.trials = t;
            }
            cfg
        })
        .collect();
    if slow {
        let mut cfg = RunConfig::default_for(CheckId::PowerCh, seed);
        cfg.backend = "relfree:2,3,4".parse().expect("valid backend");
        cfg.k = Some(3);
        cfg.n = Some(3);
        cfg.trials = trials.unwrap_or(2);
        let at = out.iter().position(|c| c.check == CheckId::PowerCh).expect("present") + 1;
        out.insert(at, cfg);
    }
    out
}
