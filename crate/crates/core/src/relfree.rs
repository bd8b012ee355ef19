//! Truncated relatively free Lie nilpotent algebras.
//!
//! `build(m, k, d)` starts from the free algebra on `m` letters truncated
//! above degree `d` (words of length at most `d`, product = concatenation,
//! longer words are zero) and factors out the ideal spanned by
//! `u · [w_1, ..., w_{k+1}]_{k+1} · v` over nonempty words `w_i` and arbitrary
//! words `u, v`. The result satisfies `[x_1, ..., x_{k+1}] = 0` identically,
//! and for `m >= 2, d >= k` some `k`-fold commutator of generators survives, so
//! the Lie nilpotency index is exactly `k`.
//!
//! Words are ordered graded-lexicographically; this fixes the RREF of the
//! relation ideal and hence the canonical normal form.

use crate::error::{Error, Result};
use crate::findim::{check_dim, ideal_generated, AlgebraElement, QuotientAlgebra, StructureAlgebra};
use crate::ringcore::{left_normed, Rational, Ring};

/// A word over letters `0..m`; the empty word is the unit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn degree(&self) -> usize {
        self.0.len()
    }
}

/// Names of the generators: `x, y, z` for up to three letters, else
/// `x1, ..., xm`.
pub fn letter_names(m: usize) -> Vec<String> {
    if m <= 3 {
        ["x", "y", "z"][..m].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=m).map(|i| format!("x{i}")).collect()
    }
}

/// All words of degree `<= d` in graded-lexicographic order.
pub fn words(m: usize, d: usize) -> Vec<Word> {
    let mut out = vec![Word(Vec::new())];
    let mut layer = vec![Word(Vec::new())];
    for _ in 0..d {
        let mut next = Vec::with_capacity(layer.len() * m);
        for w in &layer {
            for c in 0..m as u8 {
                let mut v = w.0.clone();
                v.push(c);
                next.push(Word(v));
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// `Σ_{j<=d} m^j`, or `None` on overflow.
pub fn free_dimension(m: usize, d: usize) -> Option<usize> {
    let mut total = 0usize;
    let mut p = 1usize;
    for _ in 0..=d {
        total = total.checked_add(p)?;
        p = p.checked_mul(m)?;
    }
    Some(total)
}

/// Index of a word in the graded-lexicographic basis.
fn word_index(m: usize, w: &[u8]) -> usize {
    let offset = free_dimension(m, w.len().saturating_sub(1)).unwrap_or(0);
    let offset = if w.is_empty() { 0 } else { offset };
    w.iter().fold(0usize, |acc, &c| acc * m + c as usize) + offset
}

fn word_label(w: &Word, names: &[String]) -> String {
    if w.0.is_empty() {
        "1".to_string()
    } else {
        w.0.iter()
            .map(|&c| names[c as usize].as_str())
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// The free algebra on `m` letters truncated above degree `d`.
pub fn truncated_free_algebra(m: usize, d: usize) -> Result<StructureAlgebra> {
    if m == 0 || m > u8::MAX as usize {
        return Err(Error::OutOfRange {
            what: "generator count m",
            value: m,
            allowed: "1..=255".into(),
        });
    }
    let dim = free_dimension(m, d).ok_or(Error::DimensionGuardrail {
        dim: usize::MAX,
        cap: crate::findim::max_dim(),
    })?;
    check_dim(dim)?;
    let basis = words(m, d);
    let names = letter_names(m);
    let mut table = Vec::with_capacity(dim * dim);
    for a in &basis {
        for b in &basis {
            if a.degree() + b.degree() > d {
                table.push(Vec::new());
            } else {
                let mut w = a.0.clone();
                w.extend_from_slice(&b.0);
                table.push(vec![(word_index(m, &w), Rational::one())]);
            }
        }
    }
    let mut unit = vec![Rational::zero(); dim];
    unit[0] = Rational::one();
    let generators = (0..m)
        .map(|c| {
            let mut v = vec![Rational::zero(); dim];
            v[word_index(m, &[c as u8])] = Rational::one();
            (names[c].clone(), v)
        })
        .collect();
    StructureAlgebra::new(
        format!("free:{m},{d}"),
        basis.iter().map(|w| word_label(w, &names)).collect(),
        table,
        unit,
        generators,
    )
}

/// Concatenation product of word-basis elements with every word of degree
/// above `d` sent to zero. Operands are coordinate vectors over `words(m, d)`.
pub fn truncated_free_mul(m: usize, d: usize, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let basis = words(m, d);
    let mut out = vec![Rational::zero(); basis.len()];
    for (i, qa) in a.iter().enumerate() {
        if qa.is_zero() {
            continue;
        }
        for (j, qb) in b.iter().enumerate() {
            if qb.is_zero() || basis[i].degree() + basis[j].degree() > d {
                continue;
            }
            let mut w = basis[i].0.clone();
            w.extend_from_slice(&basis[j].0);
            out[word_index(m, &w)] += &(qa * qb);
        }
    }
    out
}

/// Truncated relatively free algebra of Lie nilpotency index `k`.
#[derive(Clone, Debug)]
pub struct RelFreeAlgebra {
    m: usize,
    k: usize,
    d: usize,
    free: StructureAlgebra,
    quotient: QuotientAlgebra,
    exact_index: bool,
}

/// Tuples of `parts` nonempty words with total degree at most `d`.
fn word_tuples(m: usize, parts: usize, d: usize) -> Vec<Vec<Word>> {
    fn rec(m: usize, parts: usize, budget: usize, prefix: &mut Vec<Word>, out: &mut Vec<Vec<Word>>) {
        if parts == 0 {
            out.push(prefix.clone());
            return;
        }
        // leave at least one letter for each remaining slot
        let max_len = budget + 1 - parts;
        for w in words(m, max_len).into_iter().skip(1) {
            let len = w.degree();
            prefix.push(w);
            rec(m, parts - 1, budget - len, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if parts <= d {
        rec(m, parts, d, &mut Vec::new(), &mut out);
    }
    out
}

pub fn build(m: usize, k: usize, d: usize) -> Result<RelFreeAlgebra> {
    if m == 0 {
        return Err(Error::OutOfRange {
            what: "generator count m",
            value: 0,
            allowed: ">= 1".into(),
        });
    }
    if k < 2 {
        return Err(Error::OutOfRange {
            what: "lie index k",
            value: k,
            allowed: ">= 2".into(),
        });
    }
    let free = truncated_free_algebra(m, d)?;
    let word_elem = |w: &Word| free.basis(word_index(m, &w.0));
    let mut relations = Vec::new();
    for tuple in word_tuples(m, k + 1, d) {
        let args: Vec<AlgebraElement> = tuple.iter().map(word_elem).collect();
        let c = left_normed(&free, &args)?;
        if !c.is_zero() {
            relations.push(c);
        }
    }
    let ideal = ideal_generated(&free, &relations);
    let quotient = QuotientAlgebra::new(&free, &ideal, format!("relfree:{m},{k},{d}"))?;

    let alg = quotient.algebra();
    let gens: Vec<AlgebraElement> = alg.generators().into_iter().map(|(_, g)| g).collect();
    let mut exact_index = false;
    let total = m.pow(k as u32);
    for idx in 0..total {
        let mut rem = idx;
        let mut tuple = Vec::with_capacity(k);
        for _ in 0..k {
            tuple.push(gens[rem % m].clone());
            rem /= m;
        }
        if !left_normed(alg, &tuple)?.is_zero() {
            exact_index = true;
            break;
        }
    }
    if m >= 2 && d >= k && !exact_index {
        return Err(Error::InvalidAlgebra(format!(
            "relfree:{m},{k},{d} has no nonzero {k}-fold commutator of generators"
        )));
    }
    Ok(RelFreeAlgebra {
        m,
        k,
        d,
        free,
        quotient,
        exact_index,
    })
}

impl RelFreeAlgebra {
    pub fn generator_count(&self) -> usize {
        self.m
    }

    pub fn lie_index(&self) -> usize {
        self.k
    }

    pub fn truncation(&self) -> usize {
        self.d
    }

    /// Whether some `k`-fold commutator of generators is nonzero.
    pub fn index_is_exact(&self) -> bool {
        self.exact_index
    }

    pub fn free_algebra(&self) -> &StructureAlgebra {
        &self.free
    }

    pub fn quotient(&self) -> &QuotientAlgebra {
        &self.quotient
    }

    pub fn algebra(&self) -> &StructureAlgebra {
        self.quotient.algebra()
    }

    pub fn into_algebra(self) -> StructureAlgebra {
        self.quotient.algebra().clone()
    }

    pub fn relation_rank(&self) -> usize {
        self.quotient.ideal().rank()
    }

    /// Normal form of a free-algebra element (idempotent).
    pub fn reduce(&self, x: &AlgebraElement) -> AlgebraElement {
        self.quotient.normal_form(x)
    }

    pub fn project(&self, x: &AlgebraElement) -> AlgebraElement {
        self.quotient.project(x)
    }
}
