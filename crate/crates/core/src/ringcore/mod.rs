//! Exact scalars, the ring contract shared by every backend, and commutator
//! combinators.

mod rational;
mod sample;

use std::fmt;

pub use rational::Rational;
pub use sample::{SampleSpec, Sampler};

use crate::error::{Error, Result};

/// A unital associative ℚ-algebra whose elements are plain values.
///
/// Elements carry no reference to their ring; every operation goes through the
/// ring object. Element equality (`PartialEq`) is canonical-form comparison
/// and must agree with `is_zero(a - b)`.
#[allow(clippy::wrong_self_convention)]
pub trait Ring {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn scale(&self, q: &Rational, a: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// Named generating family, used for sampling and for parsing symbols.
    fn generators(&self) -> Vec<(String, Self::Elem)>;

    /// Canonical text, parseable back by [`crate::expr::parse_element`].
    fn render(&self, a: &Self::Elem) -> String;

    /// Short human-readable description of the backend.
    fn describe(&self) -> String;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn add_assign(&self, acc: &mut Self::Elem, b: &Self::Elem) {
        *acc = self.add(acc, b);
    }

    fn from_rational(&self, q: &Rational) -> Self::Elem {
        self.scale(q, &self.one())
    }

    fn from_int(&self, n: i64) -> Self::Elem {
        self.from_rational(&Rational::from_int(n))
    }

    fn generator(&self, name: &str) -> Option<Self::Elem> {
        self.generators()
            .into_iter()
            .find(|(g, _)| g == name)
            .map(|(_, e)| e)
    }

    fn pow(&self, a: &Self::Elem, e: u32) -> Self::Elem {
        let mut out = self.one();
        for _ in 0..e {
            out = self.mul(&out, a);
        }
        out
    }

    fn sum<'a, I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        let mut acc = self.zero();
        for x in items {
            self.add_assign(&mut acc, x);
        }
        acc
    }
}

/// The base field ℚ as a (commutative) backend.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RationalField;

impl Ring for RationalField {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn scale(&self, q: &Rational, a: &Rational) -> Rational {
        q * a
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
    fn add_assign(&self, acc: &mut Rational, b: &Rational) {
        *acc += b;
    }
    fn generators(&self) -> Vec<(String, Rational)> {
        Vec::new()
    }
    fn generator(&self, _name: &str) -> Option<Rational> {
        None
    }
    fn render(&self, a: &Rational) -> String {
        a.to_string()
    }
    fn describe(&self) -> String {
        "rational".to_string()
    }
}

/// Renders `Σ coeff·label` as `3/2*v1*v2 - v3 + 1`; the unit label is `"1"`.
pub fn render_linear<'a, I>(terms: I) -> String
where
    I: IntoIterator<Item = (&'a str, &'a Rational)>,
{
    let mut out = String::new();
    for (label, q) in terms {
        if q.is_zero() {
            continue;
        }
        let body = |abs: &Rational| -> String {
            if label == "1" {
                abs.to_string()
            } else if abs.is_one() {
                label.to_string()
            } else {
                format!("{abs}*{label}")
            }
        };
        if out.is_empty() {
            if q.is_negative() {
                out.push('-');
            }
        } else if q.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        out.push_str(&body(&q.abs()));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// `[a, b] = ab - ba`.
pub fn commutator<R: Ring>(ring: &R, a: &R::Elem, b: &R::Elem) -> R::Elem {
    ring.sub(&ring.mul(a, b), &ring.mul(b, a))
}

/// Left-normed Lie product `[x1, ..., xk]_k = [...[[x1, x2], x3], ..., xk]`.
pub fn left_normed<R: Ring>(ring: &R, xs: &[R::Elem]) -> Result<R::Elem> {
    let (first, rest) = xs.split_first().ok_or(Error::EmptyCommutator)?;
    Ok(rest
        .iter()
        .fold(first.clone(), |acc, x| commutator(ring, &acc, x)))
}

/// Evaluates the same product by first collapsing `[x1, x2]` and recursing on
/// the shorter list, the second recursion satisfied by left-normed products.
pub fn left_normed_collapsing<R: Ring>(ring: &R, xs: &[R::Elem]) -> Result<R::Elem> {
    match xs.len() {
        0 => Err(Error::EmptyCommutator),
        1 => Ok(xs[0].clone()),
        _ => {
            let mut shorter = Vec::with_capacity(xs.len() - 1);
            shorter.push(commutator(ring, &xs[0], &xs[1]));
            shorter.extend_from_slice(&xs[2..]);
            left_normed_collapsing(ring, &shorter)
        }
    }
}

/// Outcome of a randomized search for a nonvanishing `(k+1)`-fold commutator.
#[derive(Clone, Debug)]
pub struct LieNilpotencyReport<E> {
    pub k: usize,
    pub holds: bool,
    pub tuples_checked: usize,
    /// First tuple whose commutator did not vanish, with that commutator.
    pub witness: Option<(Vec<E>, E)>,
}

/// Cap on the exhaustive generator-tuple phase of [`is_lie_nilpotent_sampled`].
const GENERATOR_TUPLE_CAP: usize = 256;

/// A tuple together with its nonzero left-normed commutator.
type Counterexample<E> = (Vec<E>, E);

/// Checks `[x1, ..., x_{k+1}] = 0` on generator tuples (up to a cap) and then
/// on `trials` seeded random tuples. A `true` answer is evidence, not proof.
pub fn is_lie_nilpotent_sampled<R: Ring>(
    ring: &R,
    k: usize,
    spec: &SampleSpec,
    trials: usize,
) -> Result<LieNilpotencyReport<R::Elem>> {
    if k == 0 {
        return Err(Error::OutOfRange {
            what: "lie index k",
            value: k,
            allowed: ">= 1".into(),
        });
    }
    if trials == 0 {
        return Err(Error::OutOfRange {
            what: "trials",
            value: 0,
            allowed: ">= 1".into(),
        });
    }
    let gens: Vec<R::Elem> = ring.generators().into_iter().map(|(_, g)| g).collect();
    let arity = k + 1;
    let mut checked = 0;

    let mut check = |tuple: Vec<R::Elem>| -> Result<Option<Counterexample<R::Elem>>> {
        checked += 1;
        let c = left_normed(ring, &tuple)?;
        Ok(if ring.is_zero(&c) {
            None
        } else {
            Some((tuple, c))
        })
    };

    let tuple_count = gens
        .len()
        .checked_pow(arity as u32)
        .filter(|&c| c <= GENERATOR_TUPLE_CAP);
    if let Some(count) = tuple_count {
        for idx in 0..count {
            let mut rem = idx;
            let mut digits = vec![0; arity];
            for d in digits.iter_mut().rev() {
                *d = rem % gens.len();
                rem /= gens.len();
            }
            let tuple = digits.iter().map(|&i| gens[i].clone()).collect();
            if let Some(w) = check(tuple)? {
                return Ok(LieNilpotencyReport {
                    k,
                    holds: false,
                    tuples_checked: checked,
                    witness: Some(w),
                });
            }
        }
    }

    let mut sampler = Sampler::new(spec.clone());
    for _ in 0..trials {
        let tuple = (0..arity).map(|_| sampler.element(ring)).collect();
        if let Some(w) = check(tuple)? {
            return Ok(LieNilpotencyReport {
                k,
                holds: false,
                tuples_checked: checked,
                witness: Some(w),
            });
        }
    }
    Ok(LieNilpotencyReport {
        k,
        holds: true,
        tuples_checked: checked,
        witness: None,
    })
}
