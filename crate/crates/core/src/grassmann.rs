//! The Grassmann (exterior) algebra `E_m` over ℚ on anticommuting generators
//! `v1, ..., vm`.
//!
//! Monomials are square-free and encoded as bitmasks: bit `i - 1` set means
//! `v_i` occurs. Products of monomials vanish when the masks intersect and
//! otherwise pick up the sign of the permutation that sorts the concatenated
//! index lists.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::ringcore::{render_linear, Rational, Ring, Sampler};

pub const MAX_GENERATORS: usize = 62;

/// Sparse element of `E_m`: nonzero coefficients keyed by monomial mask.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GrassmannElement {
    m: usize,
    terms: BTreeMap<u64, Rational>,
}

impl GrassmannElement {
    pub fn zero(m: usize) -> Self {
        GrassmannElement {
            m,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(m: usize, q: Rational) -> Self {
        Self::monomial(m, 0, q)
    }

    /// `q · v_{i1} ⋯ v_{ir}` for the indices set in `mask`.
    pub fn monomial(m: usize, mask: u64, q: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(mask, q);
        }
        GrassmannElement { m, terms }
    }

    pub fn generator_count(&self) -> usize {
        self.m
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &Rational)> {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    pub fn coefficient(&self, mask: u64) -> Rational {
        self.terms.get(&mask).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn accumulate(&mut self, mask: u64, q: Rational) {
        if q.is_zero() {
            return;
        }
        match self.terms.entry(mask) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(q);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &q;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }
}

/// Sign of `v_A · v_B` for disjoint masks: parity of pairs `(i ∈ A, j ∈ B)`
/// with `i > j`.
#[inline]
pub fn monomial_sign(a: u64, b: u64) -> i32 {
    let mut inversions = 0u32;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        let above = if j >= 63 { 0 } else { a >> (j + 1) };
        inversions += above.count_ones();
        rest &= rest - 1;
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Product in `E_m`.
pub fn gmul(a: &GrassmannElement, b: &GrassmannElement) -> Result<GrassmannElement> {
    if a.m != b.m {
        return Err(Error::GeneratorCountMismatch(a.m, b.m));
    }
    let mut out = GrassmannElement::zero(a.m);
    for (&ma, qa) in &a.terms {
        for (&mb, qb) in &b.terms {
            if ma & mb != 0 {
                continue;
            }
            let q = qa * qb;
            let q = if monomial_sign(ma, mb) < 0 { -q } else { q };
            out.accumulate(ma | mb, q);
        }
    }
    Ok(out)
}

/// `E_m` as a ring backend.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GrassmannAlgebra {
    m: usize,
}

impl GrassmannAlgebra {
    pub fn new(m: usize) -> Result<Self> {
        if !(1..=MAX_GENERATORS).contains(&m) {
            return Err(Error::OutOfRange {
                what: "grassmann generator count",
                value: m,
                allowed: format!("1..={MAX_GENERATORS}"),
            });
        }
        Ok(GrassmannAlgebra { m })
    }

    pub fn generator_count(&self) -> usize {
        self.m
    }

    /// `2^m`, saturating for large `m`.
    pub fn dimension(&self) -> u128 {
        1u128 << self.m
    }

    /// The generator `v_i`, `1 <= i <= m`.
    pub fn v(&self, i: usize) -> GrassmannElement {
        assert!((1..=self.m).contains(&i), "generator v{i} out of range");
        GrassmannElement::monomial(self.m, 1 << (i - 1), Rational::one())
    }

    pub fn monomial_label(mask: u64) -> String {
        if mask == 0 {
            return "1".to_string();
        }
        (0..64)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| format!("v{}", i + 1))
            .collect::<Vec<_>>()
            .join("*")
    }

    /// Random element with only odd-degree terms. Odd elements anticommute
    /// with each other and square to zero.
    pub fn sample_odd(&self, sampler: &mut Sampler) -> GrassmannElement {
        sampler.element_with_degrees(self, &[1, 3])
    }
}

impl Ring for GrassmannAlgebra {
    type Elem = GrassmannElement;

    fn zero(&self) -> GrassmannElement {
        GrassmannElement::zero(self.m)
    }

    fn one(&self) -> GrassmannElement {
        GrassmannElement::scalar(self.m, Rational::one())
    }

    fn add(&self, a: &GrassmannElement, b: &GrassmannElement) -> GrassmannElement {
        let mut out = a.clone();
        self.add_assign(&mut out, b);
        out
    }

    fn add_assign(&self, acc: &mut GrassmannElement, b: &GrassmannElement) {
        for (&mask, q) in &b.terms {
            acc.accumulate(mask, q.clone());
        }
    }

    fn neg(&self, a: &GrassmannElement) -> GrassmannElement {
        GrassmannElement {
            m: a.m,
            terms: a.terms.iter().map(|(k, v)| (*k, -v)).collect(),
        }
    }

    fn mul(&self, a: &GrassmannElement, b: &GrassmannElement) -> GrassmannElement {
        gmul(a, b).expect("elements of the same Grassmann algebra")
    }

    fn scale(&self, q: &Rational, a: &GrassmannElement) -> GrassmannElement {
        if q.is_zero() {
            return self.zero();
        }
        GrassmannElement {
            m: a.m,
            terms: a.terms.iter().map(|(k, v)| (*k, q * v)).collect(),
        }
    }

    fn is_zero(&self, a: &GrassmannElement) -> bool {
        a.is_zero()
    }

    fn generators(&self) -> Vec<(String, GrassmannElement)> {
        (1..=self.m).map(|i| (format!("v{i}"), self.v(i))).collect()
    }

    fn generator(&self, name: &str) -> Option<GrassmannElement> {
        let i: usize = name.strip_prefix('v')?.parse().ok()?;
        if name.starts_with("v0") || !(1..=self.m).contains(&i) {
            return None;
        }
        Some(self.v(i))
    }

    fn render(&self, a: &GrassmannElement) -> String {
        let mut terms: Vec<(u64, &Rational)> = a.terms().collect();
        terms.sort_by_key(|(mask, _)| (mask.count_ones(), std::cmp::Reverse(mask.reverse_bits())));
        let labels: Vec<(String, &Rational)> = terms
            .into_iter()
            .map(|(mask, q)| (Self::monomial_label(mask), q))
            .collect();
        render_linear(labels.iter().map(|(l, q)| (l.as_str(), *q)))
    }

    fn describe(&self) -> String {
        format!("grassmann:{}", self.m)
    }
}
