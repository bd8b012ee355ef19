//! Backend selection from short textual specs such as `grassmann:4`,
//! `relfree:2,3,5`, `utri:2:grassmann:2` or `json:algebra.json`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::findim::{
    double_commutator_ideal, from_grassmann, from_json, nilpotency_index, rational_algebra, upper_triangular,
    StructureAlgebra,
};
use crate::grassmann::GrassmannAlgebra;
use crate::identities::Params;
use crate::relfree;
use crate::ringcore::{RationalField, Ring};

/// Search limit when the double commutator exponent has to be computed.
const EXPONENT_SEARCH_LIMIT: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BackendSpec {
    Rational,
    Grassmann { m: usize },
    RelFree { m: usize, k: usize, d: usize },
    UpperTriangular { t: usize, base: Box<BackendSpec> },
    Json { path: String },
}

fn number(s: &str, spec: &str) -> Result<usize> {
    s.trim().parse().map_err(|_| Error::InvalidBackend(spec.to_string()))
}

impl FromStr for BackendSpec {
    type Err = Error;

    fn from_str(spec: &str) -> Result<Self> {
        let spec = spec.trim();
        let bad = || Error::InvalidBackend(spec.to_string());
        let (head, rest) = spec.split_once(':').unwrap_or((spec, ""));
        match head {
            "rational" if rest.is_empty() => Ok(BackendSpec::Rational),
            "grassmann" => Ok(BackendSpec::Grassmann { m: number(rest, spec)? }),
            "relfree" => {
                let parts: Vec<&str> = rest.split(',').collect();
                let [m, k, d] = parts.as_slice() else { return Err(bad()) };
                Ok(BackendSpec::RelFree {
                    m: number(m, spec)?,
                    k: number(k, spec)?,
                    d: number(d, spec)?,
                })
            }
            "utri" => {
                let (t, base) = rest.split_once(':').ok_or_else(bad)?;
                Ok(BackendSpec::UpperTriangular {
                    t: number(t, spec)?,
                    base: Box::new(base.parse()?),
                })
            }
            "json" if !rest.is_empty() => Ok(BackendSpec::Json { path: rest.to_string() }),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for BackendSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BackendSpec::Rational => f.write_str("rational"),
            BackendSpec::Grassmann { m } => write!(f, "grassmann:{m}"),
            BackendSpec::RelFree { m, k, d } => write!(f, "relfree:{m},{k},{d}"),
            BackendSpec::UpperTriangular { t, base } => write!(f, "utri:{t}:{base}"),
            BackendSpec::Json { path } => write!(f, "json:{path}"),
        }
    }
}

impl BackendSpec {
    /// Builds the backend. Structured backends (`utri`) embed their base as
    /// structure constants.
    pub fn build(&self) -> Result<Backend> {
        Ok(match self {
            BackendSpec::Rational => Backend::Rational(RationalField),
            BackendSpec::Grassmann { m } => Backend::Grassmann(GrassmannAlgebra::new(*m)?),
            _ => Backend::Algebra(self.structure_algebra()?),
        })
    }

    /// The backend as a finite-dimensional algebra given by structure constants.
    pub fn structure_algebra(&self) -> Result<StructureAlgebra> {
        match self {
            BackendSpec::Rational => Ok(rational_algebra()),
            BackendSpec::Grassmann { m } => from_grassmann(*m),
            BackendSpec::RelFree { m, k, d } => Ok(relfree::build(*m, *k, *d)?.into_algebra()),
            BackendSpec::UpperTriangular { t, base } => upper_triangular(&base.structure_algebra()?, *t),
            BackendSpec::Json { path } => {
                let text = std::fs::read_to_string(path).map_err(|e| Error::Json(format!("{path}: {e}")))?;
                from_json(&text)
            }
        }
    }

    /// Lie nilpotency index known from the construction, if any.
    pub fn lie_index(&self) -> Option<usize> {
        match self {
            BackendSpec::Rational => Some(1),
            BackendSpec::Grassmann { m } => Some(if *m >= 2 { 2 } else { 1 }),
            BackendSpec::RelFree { k, .. } => Some(*k),
            BackendSpec::UpperTriangular { t: 1, base } => base.lie_index(),
            _ => None,
        }
    }

    /// Exponent `e` with `D^e = 0` for the double commutator ideal `D`:
    /// `2^{k-2}` for index `k >= 2`, `t` for `U_t` over an index-2 ring,
    /// and otherwise the computed nilpotency index.
    pub fn double_commutator_exponent(&self, alg: &StructureAlgebra) -> Result<usize> {
        match (self, self.lie_index()) {
            (_, Some(k)) if k <= 2 => Ok(1),
            (_, Some(k)) => 1usize
                .checked_shl((k - 2) as u32)
                .ok_or_else(|| Error::ExponentOverflow(format!("2^{}", k - 2))),
            (BackendSpec::UpperTriangular { t, base }, None) if base.lie_index().is_some_and(|k| k <= 2) => Ok(*t),
            _ => nilpotency_index(alg, &double_commutator_ideal(alg), EXPONENT_SEARCH_LIMIT).ok_or_else(|| {
                Error::Precondition(format!(
                    "double commutator ideal of {self} is not nilpotent within {EXPONENT_SEARCH_LIMIT} powers"
                ))
            }),
        }
    }

    /// Report parameters describing the construction.
    pub fn params(&self) -> Params {
        let mut p = Params::default();
        match self {
            BackendSpec::Grassmann { m } => p.m = Some(*m),
            BackendSpec::RelFree { m, k, d } => {
                p.m = Some(*m);
                p.k = Some(*k);
                p.d = Some(*d);
            }
            BackendSpec::UpperTriangular { t, base } => {
                p = base.params();
                p.t = Some(*t);
            }
            _ => {}
        }
        p
    }
}

/// A constructed backend.
#[derive(Clone, Debug)]
pub enum Backend {
    Rational(RationalField),
    Grassmann(GrassmannAlgebra),
    Algebra(StructureAlgebra),
}

/// Evaluates `$body` with `$r` bound to the concrete ring of a [`Backend`].
#[macro_export]
macro_rules! with_ring {
    ($backend:expr, $r:ident => $body:expr) => {
        match $backend {
            $crate::backend::Backend::Rational($r) => $body,
            $crate::backend::Backend::Grassmann($r) => $body,
            $crate::backend::Backend::Algebra($r) => $body,
        }
    };
}

impl Backend {
    pub fn describe(&self) -> String {
        with_ring!(self, r => r.describe())
    }

    pub fn generator_names(&self) -> Vec<String> {
        with_ring!(self, r => r.generators().into_iter().map(|(n, _)| n).collect())
    }

    pub fn as_algebra(&self) -> Option<&StructureAlgebra> {
        match self {
            Backend::Algebra(a) => Some(a),
            _ => None,
        }
    }
}
