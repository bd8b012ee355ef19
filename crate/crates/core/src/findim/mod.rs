//! Finite-dimensional associative ℚ-algebras given by structure constants,
//! with exact subspace arithmetic, two-sided ideals, ideal powers and
//! quotients.

mod ideal;
mod json;
mod linalg;
mod quotient;
mod subspace;

use std::collections::BTreeMap;

use rand::Rng as _;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub use ideal::{
    commutator_ideal, commutator_span, double_commutator_ideal, ideal_generated, ideal_power,
    is_ideal, jennings_ideal, nilpotency_index,
};
pub use json::{from_json, to_json, AlgebraJson};
pub use linalg::{invert, solve};
pub use quotient::{quotient, QuotientAlgebra};
pub use subspace::Subspace;

use crate::error::{Error, Result};
use crate::grassmann::{monomial_sign, GrassmannAlgebra};
use crate::ringcore::{render_linear, Rational, Ring};

/// Default cap on algebra dimension; `NILCAYLEY_MAX_DIM` overrides it.
pub const DEFAULT_MAX_DIM: usize = 4096;

/// Associativity is checked on every basis triple up to this dimension and on
/// a fixed sample of triples above it.
pub const EXHAUSTIVE_ASSOCIATIVITY_DIM: usize = 40;
const SAMPLED_TRIPLES: usize = 1000;

pub const MAX_GRASSMANN_DENSE: usize = 12;

pub fn max_dim() -> usize {
    std::env::var("NILCAYLEY_MAX_DIM")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_DIM)
}

pub(crate) fn check_dim(dim: usize) -> Result<()> {
    let cap = max_dim();
    if dim > cap {
        Err(Error::DimensionGuardrail { dim, cap })
    } else {
        Ok(())
    }
}

/// Coordinate vector with respect to the basis of a [`StructureAlgebra`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    coords: Vec<Rational>,
}

impl AlgebraElement {
    pub fn new(coords: Vec<Rational>) -> Self {
        AlgebraElement { coords }
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rational::is_zero)
    }
}

/// A finite-dimensional unital associative ℚ-algebra.
///
/// The product of basis elements `b_i · b_j` is stored as a sparse coordinate
/// vector in compressed rows.
#[derive(Clone, Debug)]
pub struct StructureAlgebra {
    name: String,
    dim: usize,
    labels: Vec<String>,
    offsets: Vec<u32>,
    entries: Vec<(u32, Rational)>,
    unit: Vec<Rational>,
    generators: Vec<(String, Vec<Rational>)>,
}

impl StructureAlgebra {
    /// Builds and validates an algebra from sparse products
    /// `table[i * dim + j] = b_i · b_j`.
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        table: Vec<Vec<(usize, Rational)>>,
        unit: Vec<Rational>,
        generators: Vec<(String, Vec<Rational>)>,
    ) -> Result<Self> {
        let alg = Self::assemble(name.into(), labels, table, unit, generators)?;
        alg.validate()?;
        Ok(alg)
    }

    fn assemble(
        name: String,
        labels: Vec<String>,
        table: Vec<Vec<(usize, Rational)>>,
        unit: Vec<Rational>,
        generators: Vec<(String, Vec<Rational>)>,
    ) -> Result<Self> {
        let dim = labels.len();
        if dim == 0 {
            return Err(Error::InvalidAlgebra("empty basis".into()));
        }
        check_dim(dim)?;
        if table.len() != dim * dim {
            return Err(Error::InvalidAlgebra(format!(
                "table has {} products, expected {}",
                table.len(),
                dim * dim
            )));
        }
        if unit.len() != dim {
            return Err(Error::InvalidAlgebra("unit has wrong length".into()));
        }
        if let Some((g, _)) = generators.iter().find(|(_, c)| c.len() != dim) {
            return Err(Error::InvalidAlgebra(format!("generator {g} has wrong length")));
        }
        let mut offsets = Vec::with_capacity(dim * dim + 1);
        let mut entries = Vec::new();
        offsets.push(0u32);
        for product in table {
            let mut merged: BTreeMap<usize, Rational> = BTreeMap::new();
            for (k, q) in product {
                if k >= dim {
                    return Err(Error::InvalidAlgebra(format!("basis index {k} out of range")));
                }
                *merged.entry(k).or_default() += &q;
            }
            entries.extend(
                merged
                    .into_iter()
                    .filter(|(_, q)| !q.is_zero())
                    .map(|(k, q)| (k as u32, q)),
            );
            offsets.push(entries.len() as u32);
        }
        Ok(StructureAlgebra {
            name,
            dim,
            labels,
            offsets,
            entries,
            unit,
            generators,
        })
    }

    /// Unit law on all basis elements and associativity on basis triples.
    pub fn validate(&self) -> Result<()> {
        let unit = AlgebraElement::new(self.unit.clone());
        for i in 0..self.dim {
            let b = self.basis(i);
            if self.mul(&unit, &b) != b || self.mul(&b, &unit) != b {
                return Err(Error::InvalidAlgebra(format!(
                    "unit law fails on basis element {}",
                    self.labels[i]
                )));
            }
        }
        let d = self.dim;
        if d <= EXHAUSTIVE_ASSOCIATIVITY_DIM {
            for i in 0..d {
                for j in 0..d {
                    for k in 0..d {
                        self.check_triple(i, j, k)?;
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
            for _ in 0..SAMPLED_TRIPLES {
                let (i, j, k) = (rng.gen_range(0..d), rng.gen_range(0..d), rng.gen_range(0..d));
                self.check_triple(i, j, k)?;
            }
        }
        Ok(())
    }

    fn check_triple(&self, i: usize, j: usize, k: usize) -> Result<()> {
        let mut left: BTreeMap<u32, Rational> = BTreeMap::new();
        for (l, c) in self.basis_product(i, j) {
            for (r, c2) in self.basis_product(*l as usize, k) {
                *left.entry(*r).or_default() += &(c * c2);
            }
        }
        let mut right: BTreeMap<u32, Rational> = BTreeMap::new();
        for (l, c) in self.basis_product(j, k) {
            for (r, c2) in self.basis_product(i, *l as usize) {
                *right.entry(*r).or_default() += &(c * c2);
            }
        }
        left.retain(|_, q| !q.is_zero());
        right.retain(|_, q| !q.is_zero());
        if left != right {
            return Err(Error::InvalidAlgebra(format!(
                "associativity fails on ({}, {}, {})",
                self.labels[i], self.labels[j], self.labels[k]
            )));
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit_coords(&self) -> &[Rational] {
        &self.unit
    }

    pub fn generator_coords(&self) -> &[(String, Vec<Rational>)] {
        &self.generators
    }

    /// Sparse coordinates of `b_i · b_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(u32, Rational)] {
        let idx = i * self.dim + j;
        &self.entries[self.offsets[idx] as usize..self.offsets[idx + 1] as usize]
    }

    pub fn basis(&self, i: usize) -> AlgebraElement {
        let mut c = vec![Rational::zero(); self.dim];
        c[i] = Rational::one();
        AlgebraElement::new(c)
    }

    pub fn element(&self, coords: Vec<Rational>) -> Result<AlgebraElement> {
        if coords.len() != self.dim {
            return Err(Error::BackendMismatch(format!(
                "{} coordinates for an algebra of dimension {}",
                coords.len(),
                self.dim
            )));
        }
        Ok(AlgebraElement::new(coords))
    }

    /// Product of raw coordinate vectors.
    pub fn mul_coords(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        let bn: Vec<(usize, &Rational)> = b
            .iter()
            .enumerate()
            .filter(|(_, q)| !q.is_zero())
            .collect();
        for (i, qa) in a.iter().enumerate() {
            if qa.is_zero() {
                continue;
            }
            for &(j, qb) in &bn {
                let prod = self.basis_product(i, j);
                if prod.is_empty() {
                    continue;
                }
                let c = qa * qb;
                for (k, s) in prod {
                    out[*k as usize] += &(&c * s);
                }
            }
        }
        out
    }

    /// `b_i · x`.
    pub fn left_basis_mul(&self, i: usize, x: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for (j, q) in x.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            for (k, s) in self.basis_product(i, j) {
                out[*k as usize] += &(q * s);
            }
        }
        out
    }

    /// `x · b_j`.
    pub fn right_basis_mul(&self, x: &[Rational], j: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for (i, q) in x.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            for (k, s) in self.basis_product(i, j) {
                out[*k as usize] += &(q * s);
            }
        }
        out
    }

    /// Number of stored nonzero structure constants.
    pub fn nonzero_constants(&self) -> usize {
        self.entries.len()
    }

    /// The same multiplication table as sparse `(i, j, k, c)` triples.
    pub fn table_triples(&self) -> Vec<(usize, usize, usize, Rational)> {
        let mut out = Vec::with_capacity(self.entries.len());
        for i in 0..self.dim {
            for j in 0..self.dim {
                for (k, c) in self.basis_product(i, j) {
                    out.push((i, j, *k as usize, c.clone()));
                }
            }
        }
        out
    }
}

impl Ring for StructureAlgebra {
    type Elem = AlgebraElement;

    fn zero(&self) -> AlgebraElement {
        AlgebraElement::new(vec![Rational::zero(); self.dim])
    }

    fn one(&self) -> AlgebraElement {
        AlgebraElement::new(self.unit.clone())
    }

    fn add(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        AlgebraElement::new(a.coords.iter().zip(&b.coords).map(|(x, y)| x + y).collect())
    }

    fn add_assign(&self, acc: &mut AlgebraElement, b: &AlgebraElement) {
        for (x, y) in acc.coords.iter_mut().zip(&b.coords) {
            if !y.is_zero() {
                *x += y;
            }
        }
    }

    fn sub(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        AlgebraElement::new(a.coords.iter().zip(&b.coords).map(|(x, y)| x - y).collect())
    }

    fn neg(&self, a: &AlgebraElement) -> AlgebraElement {
        AlgebraElement::new(a.coords.iter().map(|x| -x).collect())
    }

    fn mul(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        AlgebraElement::new(self.mul_coords(&a.coords, &b.coords))
    }

    fn scale(&self, q: &Rational, a: &AlgebraElement) -> AlgebraElement {
        AlgebraElement::new(a.coords.iter().map(|x| q * x).collect())
    }

    fn is_zero(&self, a: &AlgebraElement) -> bool {
        a.is_zero()
    }

    fn generators(&self) -> Vec<(String, AlgebraElement)> {
        self.generators
            .iter()
            .map(|(n, c)| (n.clone(), AlgebraElement::new(c.clone())))
            .collect()
    }

    fn generator(&self, name: &str) -> Option<AlgebraElement> {
        self.generators
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, c)| AlgebraElement::new(c.clone()))
    }

    fn render(&self, a: &AlgebraElement) -> String {
        render_linear(
            self.labels
                .iter()
                .zip(&a.coords)
                .map(|(l, q)| (l.as_str(), q)),
        )
    }

    fn describe(&self) -> String {
        self.name.clone()
    }
}

/// ℚ as a one-dimensional algebra.
pub fn rational_algebra() -> StructureAlgebra {
    StructureAlgebra::new(
        "rational",
        vec!["1".into()],
        vec![vec![(0, Rational::one())]],
        vec![Rational::one()],
        Vec::new(),
    )
    .expect("valid one-dimensional algebra")
}

/// `E_m` with basis indexed by monomial mask, `dim = 2^m`.
pub fn from_grassmann(m: usize) -> Result<StructureAlgebra> {
    GrassmannAlgebra::new(m)?;
    if m > MAX_GRASSMANN_DENSE {
        return Err(Error::OutOfRange {
            what: "dense grassmann generator count",
            value: m,
            allowed: format!("1..={MAX_GRASSMANN_DENSE}"),
        });
    }
    let dim = 1usize << m;
    check_dim(dim)?;
    let labels = (0..dim as u64).map(GrassmannAlgebra::monomial_label).collect();
    let mut table = Vec::with_capacity(dim * dim);
    for a in 0..dim as u64 {
        for b in 0..dim as u64 {
            if a & b != 0 {
                table.push(Vec::new());
            } else {
                let s = monomial_sign(a, b) as i64;
                table.push(vec![((a | b) as usize, Rational::from_int(s))]);
            }
        }
    }
    let mut unit = vec![Rational::zero(); dim];
    unit[0] = Rational::one();
    let generators = (0..m)
        .map(|i| {
            let mut c = vec![Rational::zero(); dim];
            c[1 << i] = Rational::one();
            (format!("v{}", i + 1), c)
        })
        .collect();
    StructureAlgebra::new(format!("grassmann:{m}"), labels, table, unit, generators)
}

fn unit_label(p: usize, q: usize, t: usize) -> String {
    if t > 9 {
        format!("e{p}_{q}")
    } else {
        format!("e{p}{q}")
    }
}

/// `U_t(base)`: upper triangular `t x t` matrices over `base`, with basis
/// `E_pq ⊗ b` for `p <= q`.
pub fn upper_triangular(base: &StructureAlgebra, t: usize) -> Result<StructureAlgebra> {
    if t == 0 {
        return Err(Error::OutOfRange {
            what: "upper triangular size t",
            value: 0,
            allowed: ">= 1".into(),
        });
    }
    let pairs: Vec<(usize, usize)> = (0..t).flat_map(|p| (p..t).map(move |q| (p, q))).collect();
    let pair_index = |p: usize, q: usize| pairs.iter().position(|&x| x == (p, q)).unwrap();
    let bd = base.dim();
    let dim = pairs.len() * bd;
    check_dim(dim)?;
    let mut labels = Vec::with_capacity(dim);
    for &(p, q) in &pairs {
        for l in base.labels() {
            let u = unit_label(p + 1, q + 1, t);
            labels.push(if l == "1" { u } else { format!("{u}*{l}") });
        }
    }
    let mut table = Vec::with_capacity(dim * dim);
    for &(p, q) in &pairs {
        for b in 0..bd {
            for &(q2, r) in &pairs {
                for b2 in 0..bd {
                    if q != q2 {
                        table.push(Vec::new());
                        continue;
                    }
                    let off = pair_index(p, r) * bd;
                    table.push(
                        base.basis_product(b, b2)
                            .iter()
                            .map(|(k, c)| (off + *k as usize, c.clone()))
                            .collect(),
                    );
                }
            }
        }
    }
    let mut unit = vec![Rational::zero(); dim];
    for p in 0..t {
        let off = pair_index(p, p) * bd;
        for (i, q) in base.unit_coords().iter().enumerate() {
            unit[off + i] = q.clone();
        }
    }
    let mut generators = Vec::new();
    for &(p, q) in &pairs {
        let mut c = vec![Rational::zero(); dim];
        let off = pair_index(p, q) * bd;
        for (i, x) in base.unit_coords().iter().enumerate() {
            c[off + i] = x.clone();
        }
        generators.push((unit_label(p + 1, q + 1, t), c));
    }
    for (name, g) in base.generator_coords() {
        let mut c = vec![Rational::zero(); dim];
        for p in 0..t {
            let off = pair_index(p, p) * bd;
            for (i, x) in g.iter().enumerate() {
                c[off + i] = x.clone();
            }
        }
        generators.push((name.clone(), c));
    }
    StructureAlgebra::new(
        format!("utri:{t}:{}", base.name()),
        labels,
        table,
        unit,
        generators,
    )
}
