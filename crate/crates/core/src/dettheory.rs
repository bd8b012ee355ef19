//! Symmetric determinant and adjoint, the right adjoint sequence, and the
//! k-th right determinant, adjoint and characteristic polynomial of a square
//! matrix over a possibly noncommutative ring.
//!
//! Every product is formed left to right in the order of the positions
//! `1..n`, i.e. `a_{α(1),β(1)} a_{α(2),β(2)} ⋯ a_{α(n),β(n)}`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::findim::invert;
use crate::matpoly::{self, CentralPoly, PolyRing, RingMatrix};
use crate::ringcore::{Rational, Ring};

/// Cost caps; enumeration cost grows roughly like `((n!)^2 n)^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_n: usize,
    pub max_k: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_n: 5, max_k: 4 }
    }
}

impl Limits {
    /// Caps large enough that only memory and patience limit the computation.
    pub fn unlimited() -> Self {
        Limits {
            max_n: 12,
            max_k: 16,
        }
    }

    fn check_n(&self, n: usize) -> Result<()> {
        if n == 0 {
            return Err(Error::OutOfRange {
                what: "matrix size",
                value: 0,
                allowed: ">= 1".into(),
            });
        }
        if n > self.max_n {
            return Err(Error::SizeCap {
                what: "matrix size",
                value: n,
                cap: self.max_n,
            });
        }
        Ok(())
    }

    fn check_k(&self, k: usize) -> Result<()> {
        if k == 0 {
            return Err(Error::OutOfRange {
                what: "level k",
                value: 0,
                allowed: ">= 1".into(),
            });
        }
        if k > self.max_k {
            return Err(Error::SizeCap {
                what: "level k",
                value: k,
                cap: self.max_k,
            });
        }
        Ok(())
    }
}

/// The right adjoint sequence `P_1 = A*`, `P_{j+1} = (A P_1 ⋯ P_j)*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjointChain<E> {
    factors: Vec<RingMatrix<E>>,
    with_a: Vec<RingMatrix<E>>,
    without_a: RingMatrix<E>,
}

impl<E: Clone> AdjointChain<E> {
    /// `P_1, ..., P_k`.
    pub fn factors(&self) -> &[RingMatrix<E>] {
        &self.factors
    }

    pub fn level(&self) -> usize {
        self.factors.len()
    }

    /// `A P_1 ⋯ P_j` for `j = 1..=k`.
    pub fn running_products(&self) -> &[RingMatrix<E>] {
        &self.with_a
    }

    /// `P_1 ⋯ P_k`.
    pub fn factor_product(&self) -> &RingMatrix<E> {
        &self.without_a
    }
}

/// Coefficients `λ_0, ..., λ_{n^k}` of `rdet_(k)(x I_n − A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPolyResult<E> {
    pub k: usize,
    pub n: usize,
    pub coefficients: Vec<E>,
}

impl<E> CharPolyResult<E> {
    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }
}

/// `n^k`, the degree of the k-th right characteristic polynomial.
pub fn char_poly_degree(n: usize, k: usize) -> Result<usize> {
    u32::try_from(k)
        .ok()
        .and_then(|k| n.checked_pow(k))
        .ok_or_else(|| Error::ExponentOverflow(format!("{n}^{k}")))
}

/// `n · ((n−1)!)^{1 + n + ⋯ + n^{k−1}}`, the leading coefficient of the
/// k-th right characteristic polynomial of an `n x n` matrix.
pub fn expected_leading(n: usize, k: usize) -> Rational {
    let fact: BigInt = (1..n).map(BigInt::from).product();
    let mut exponent: u64 = 0;
    let mut p: u64 = 1;
    for _ in 0..k {
        exponent += p;
        p = p.saturating_mul(n as u64);
    }
    let mut value = BigInt::from(n);
    for _ in 0..exponent {
        value *= &fact;
    }
    Rational::from_bigint(value)
}

/// Entry points bound to a ring and a set of caps.
#[derive(Clone, Copy, Debug)]
pub struct DetTheory<'r, R> {
    ring: &'r R,
    limits: Limits,
}

impl<'r, R: Ring> DetTheory<'r, R> {
    pub fn new(ring: &'r R) -> Self {
        DetTheory {
            ring,
            limits: Limits::default(),
        }
    }

    pub fn with_limits(ring: &'r R, limits: Limits) -> Self {
        DetTheory { ring, limits }
    }

    pub fn ring(&self) -> &'r R {
        self.ring
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn sdet(&self, a: &RingMatrix<R::Elem>) -> Result<R::Elem> {
        self.limits.check_n(a.size())?;
        Ok(sdet_subsets(self.ring, a))
    }

    pub fn sym_adjoint(&self, a: &RingMatrix<R::Elem>) -> Result<RingMatrix<R::Elem>> {
        self.limits.check_n(a.size())?;
        Ok(sym_adjoint_minors(self.ring, a))
    }

    pub fn right_adjoint_chain(&self, a: &RingMatrix<R::Elem>, k: usize) -> Result<AdjointChain<R::Elem>> {
        self.limits.check_n(a.size())?;
        self.limits.check_k(k)?;
        Ok(chain(self.ring, a, k))
    }

    /// `rdet_(k)(A) = tr(A P_1 ⋯ P_k)`.
    pub fn rdet(&self, a: &RingMatrix<R::Elem>, k: usize) -> Result<R::Elem> {
        let c = self.right_adjoint_chain(a, k)?;
        Ok(matpoly::trace(self.ring, &c.with_a[k - 1]))
    }

    /// `radj_(k)(A) = n P_1 ⋯ P_k`.
    pub fn radj(&self, a: &RingMatrix<R::Elem>, k: usize) -> Result<RingMatrix<R::Elem>> {
        let c = self.right_adjoint_chain(a, k)?;
        Ok(matpoly::scalar_mul(
            self.ring,
            &Rational::from_int(a.size() as i64),
            &c.without_a,
        ))
    }

    /// `p_{A,k}(x) = rdet_(k)(x I_n − A)`, computed in `M_n(R[x])`. Fails with
    /// [`Error::Internal`] if the degree or leading coefficient is off.
    pub fn char_poly(&self, a: &RingMatrix<R::Elem>, k: usize) -> Result<CharPolyResult<R::Elem>> {
        self.limits.check_n(a.size())?;
        self.limits.check_k(k)?;
        let pr = PolyRing::new(self.ring);
        let xa = RingMatrix::from_fn(a.size(), |i, j| {
            let c = self.ring.neg(a.get(i, j));
            if i == j {
                pr.from_coefficients(vec![c, self.ring.one()])
            } else {
                pr.constant(c)
            }
        });
        let c = chain(&pr, &xa, k);
        let p = matpoly::trace(&pr, &c.with_a[k - 1]);
        self.finish(a.size(), k, p)
    }

    /// Same polynomial, obtained by evaluating `rdet_(k)(c I_n − A)` at the
    /// rational points `c = 0, ..., n^k` and interpolating.
    pub fn char_poly_by_interpolation(&self, a: &RingMatrix<R::Elem>, k: usize) -> Result<CharPolyResult<R::Elem>> {
        self.limits.check_n(a.size())?;
        self.limits.check_k(k)?;
        let deg = char_poly_degree(a.size(), k)?;
        let values: Vec<R::Elem> = (0..=deg)
            .map(|c| {
                let c = self.ring.from_int(c as i64);
                let m = RingMatrix::from_fn(a.size(), |i, j| {
                    let e = self.ring.neg(a.get(i, j));
                    if i == j {
                        self.ring.add(&e, &c)
                    } else {
                        e
                    }
                });
                matpoly::trace(self.ring, &chain(self.ring, &m, k).with_a[k - 1])
            })
            .collect();
        let vandermonde: Vec<Vec<Rational>> = (0..=deg)
            .map(|c| {
                let c = Rational::from_int(c as i64);
                (0..=deg).map(|i| c.pow(i as u32)).collect()
            })
            .collect();
        let inv = invert(&vandermonde)?;
        let coeffs = inv
            .iter()
            .map(|row| {
                let mut acc = self.ring.zero();
                for (w, v) in row.iter().zip(&values) {
                    if !w.is_zero() {
                        self.ring.add_assign(&mut acc, &self.ring.scale(w, v));
                    }
                }
                acc
            })
            .collect();
        let pr = PolyRing::new(self.ring);
        self.finish(a.size(), k, pr.from_coefficients(coeffs))
    }

    fn finish(&self, n: usize, k: usize, p: CentralPoly<R::Elem>) -> Result<CharPolyResult<R::Elem>> {
        let deg = char_poly_degree(n, k)?;
        if p.degree() != Some(deg) {
            return Err(Error::Internal(format!(
                "characteristic polynomial has degree {:?}, expected {deg}",
                p.degree()
            )));
        }
        let expected = self.ring.from_rational(&expected_leading(n, k));
        if p.leading() != Some(&expected) {
            return Err(Error::Internal(format!(
                "leading coefficient {} differs from {}",
                self.ring.render(p.leading().expect("nonzero")),
                self.ring.render(&expected)
            )));
        }
        Ok(CharPolyResult {
            k,
            n,
            coefficients: p.coefficients().to_vec(),
        })
    }
}

pub fn sdet<R: Ring>(ring: &R, a: &RingMatrix<R::Elem>) -> Result<R::Elem> {
    DetTheory::new(ring).sdet(a)
}

pub fn sym_adjoint<R: Ring>(ring: &R, a: &RingMatrix<R::Elem>) -> Result<RingMatrix<R::Elem>> {
    DetTheory::new(ring).sym_adjoint(a)
}

pub fn right_adjoint_chain<R: Ring>(ring: &R, a: &RingMatrix<R::Elem>, k: usize) -> Result<AdjointChain<R::Elem>> {
    DetTheory::new(ring).right_adjoint_chain(a, k)
}

pub fn rdet<R: Ring>(ring: &R, a: &RingMatrix<R::Elem>, k: usize) -> Result<R::Elem> {
    DetTheory::new(ring).rdet(a, k)
}

pub fn radj<R: Ring>(ring: &R, a: &RingMatrix<R::Elem>, k: usize) -> Result<RingMatrix<R::Elem>> {
    DetTheory::new(ring).radj(a, k)
}

pub fn char_poly<R: Ring>(ring: &R, a: &RingMatrix<R::Elem>, k: usize) -> Result<CharPolyResult<R::Elem>> {
    DetTheory::new(ring).char_poly(a, k)
}

fn chain<R: Ring>(ring: &R, a: &RingMatrix<R::Elem>, k: usize) -> AdjointChain<R::Elem> {
    let mut factors = Vec::with_capacity(k);
    let mut with_a = Vec::with_capacity(k);
    let mut current = a.clone();
    let mut without_a = matpoly::identity(ring, a.size());
    for _ in 0..k {
        let p = sym_adjoint_minors(ring, &current);
        current = matpoly::mul(ring, &current, &p).expect("same size");
        without_a = matpoly::mul(ring, &without_a, &p).expect("same size");
        with_a.push(current.clone());
        factors.push(p);
    }
    AdjointChain {
        factors,
        with_a,
        without_a,
    }
}

/// Dynamic programme over (used rows, used columns) after each position. The
/// sign contribution of placing row `r` and column `c` at the next position is
/// the number of already-used rows above `r` plus used columns above `c`, so
/// the sum reproduces `sgn(α) sgn(β)` exactly with the same factor order.
fn sdet_subsets<R: Ring>(ring: &R, a: &RingMatrix<R::Elem>) -> R::Elem {
    let n = a.size();
    if n == 0 {
        return ring.one();
    }
    let full = 1usize << n;
    let mut layer: Vec<Option<R::Elem>> = vec![None; full * full];
    layer[0] = Some(ring.one());
    for _ in 0..n {
        let mut next: Vec<Option<R::Elem>> = vec![None; full * full];
        for (state, value) in layer.iter().enumerate() {
            let Some(value) = value else { continue };
            let (rows, cols) = (state / full, state % full);
            for r in (0..n).filter(|r| rows & (1 << r) == 0) {
                let above_r = (rows >> (r + 1)).count_ones();
                for c in (0..n).filter(|c| cols & (1 << c) == 0) {
                    let entry = a.get(r, c);
                    if ring.is_zero(entry) {
                        continue;
                    }
                    let above_c = (cols >> (c + 1)).count_ones();
                    let mut term = ring.mul(value, entry);
                    if (above_r + above_c) % 2 == 1 {
                        term = ring.neg(&term);
                    }
                    let slot = &mut next[(rows | 1 << r) * full + (cols | 1 << c)];
                    match slot {
                        Some(acc) => ring.add_assign(acc, &term),
                        None => *slot = Some(term),
                    }
                }
            }
        }
        layer = next;
    }
    layer[full * full - 1].take().unwrap_or_else(|| ring.zero())
}

/// `a*_{r,s} = (−1)^{r+s} sdet(A with row s and column r deleted)`; `[1]` for `n = 1`.
fn sym_adjoint_minors<R: Ring>(ring: &R, a: &RingMatrix<R::Elem>) -> RingMatrix<R::Elem> {
    let n = a.size();
    RingMatrix::from_fn(n, |r, s| {
        let d = sdet_subsets(ring, &a.minor(s, r));
        if (r + s) % 2 == 1 {
            ring.neg(&d)
        } else {
            d
        }
    })
}

/// All permutations of `0..n` in lexicographic order with their signs.
pub fn permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], odd: bool, out: &mut Vec<(Vec<usize>, bool)>) {
        let n = used.len();
        if prefix.len() == n {
            out.push((prefix.clone(), odd));
            return;
        }
        for v in 0..n {
            if used[v] {
                continue;
            }
            let inversions = prefix.iter().filter(|&&p| p > v).count();
            used[v] = true;
            prefix.push(v);
            rec(prefix, used, odd ^ (inversions % 2 == 1), out);
            prefix.pop();
            used[v] = false;
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(n), &mut vec![false; n], false, &mut out);
    out
}

fn beta_block<R: Ring>(
    ring: &R,
    a: &RingMatrix<R::Elem>,
    perms: &[(Vec<usize>, bool)],
    beta: &(Vec<usize>, bool),
) -> R::Elem {
    let mut acc = ring.zero();
    for alpha in perms {
        let mut term = ring.one();
        for t in 0..a.size() {
            term = ring.mul(&term, a.get(alpha.0[t], beta.0[t]));
        }
        if alpha.1 ^ beta.1 {
            term = ring.neg(&term);
        }
        ring.add_assign(&mut acc, &term);
    }
    acc
}

/// Literal double sum over `S_n x S_n`, `β` outer and `α` inner.
pub fn sdet_by_permutations<R: Ring>(ring: &R, a: &RingMatrix<R::Elem>) -> Result<R::Elem> {
    Limits::default().check_n(a.size())?;
    let perms = permutations(a.size());
    let blocks: Vec<R::Elem> = perms.iter().map(|b| beta_block(ring, a, &perms, b)).collect();
    Ok(ring.sum(&blocks))
}

/// [`sdet_by_permutations`] with the `β` blocks sharded across threads; the
/// blocks are added in the sequential order, so the result is identical.
#[cfg(feature = "parallel")]
pub fn sdet_by_permutations_parallel<R>(ring: &R, a: &RingMatrix<R::Elem>) -> Result<R::Elem>
where
    R: Ring + Sync,
    R::Elem: Send + Sync,
{
    use rayon::prelude::*;
    Limits::default().check_n(a.size())?;
    let perms = permutations(a.size());
    let blocks: Vec<R::Elem> = perms.par_iter().map(|b| beta_block(ring, a, &perms, b)).collect();
    Ok(ring.sum(&blocks))
}

/// Literal constrained sums `Σ_{α(s)=s, β(s)=r} sgn(α) sgn(β) Π_{t≠s} a_{α(t),β(t)}`.
pub fn sym_adjoint_by_permutations<R: Ring>(ring: &R, a: &RingMatrix<R::Elem>) -> Result<RingMatrix<R::Elem>> {
    Limits::default().check_n(a.size())?;
    let n = a.size();
    let perms = permutations(n);
    Ok(RingMatrix::from_fn(n, |r, s| {
        let mut acc = ring.zero();
        for beta in perms.iter().filter(|b| b.0[s] == r) {
            for alpha in perms.iter().filter(|p| p.0[s] == s) {
                let mut term = ring.one();
                for t in (0..n).filter(|&t| t != s) {
                    term = ring.mul(&term, a.get(alpha.0[t], beta.0[t]));
                }
                if alpha.1 ^ beta.1 {
                    term = ring.neg(&term);
                }
                ring.add_assign(&mut acc, &term);
            }
        }
        acc
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::findim::{double_commutator_ideal, from_grassmann, quotient, upper_triangular};
    use crate::grassmann::GrassmannAlgebra;
    use crate::matpoly::{identity, mul, scalar_mul, trace, zero_matrix};
    use crate::relfree;
    use crate::ringcore::{RationalField, SampleSpec, Sampler};
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn fact(n: usize) -> Rational {
        (1..=n as i64).fold(q(1), |acc, i| acc * q(i))
    }

    /// Laplace expansion along the first row.
    fn det_oracle(a: &[Vec<Rational>]) -> Rational {
        let n = a.len();
        if n == 0 {
            return q(1);
        }
        let mut acc = q(0);
        for j in 0..n {
            let minor: Vec<Vec<Rational>> = a[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| x.clone()).collect())
                .collect();
            let term = &a[0][j] * &det_oracle(&minor);
            acc = if j % 2 == 0 { acc + term } else { acc - term };
        }
        acc
    }

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
                        if (r + s) % 2 == 0 { d } else { -d }
                    })
                    .collect()
            })
            .collect()
    }

    fn rat_matrix(s: &mut Sampler, n: usize) -> Vec<Vec<Rational>> {
        (0..n).map(|_| (0..n).map(|_| q(s.small_int(4))).collect()).collect()
    }

    #[test]
    fn two_by_two_expansion() {
        let e = GrassmannAlgebra::new(4).unwrap();
        let mut s = Sampler::new(SampleSpec::new(5));
        for _ in 0..10 {
            let (a, b, c, d) = (s.element(&e), s.element(&e), s.element(&e), s.element(&e));
            let m = RingMatrix::from_rows(vec![vec![a.clone(), b.clone()], vec![c.clone(), d.clone()]]).unwrap();
            let expected = e.sub(
                &e.add(&e.mul(&a, &d), &e.mul(&d, &a)),
                &e.add(&e.mul(&b, &c), &e.mul(&c, &b)),
            );
            assert_eq!(sdet(&e, &m).unwrap(), expected);
            let adj = RingMatrix::from_rows(vec![vec![d.clone(), e.neg(&b)], vec![e.neg(&c), a.clone()]]).unwrap();
            assert_eq!(sym_adjoint(&e, &m).unwrap(), adj);
        }
    }

    #[test]
    fn identity_values() {
        let r = RationalField;
        assert_eq!(sdet(&r, &identity(&r, 2)).unwrap(), q(2));
        for n in 1..=4 {
            assert_eq!(
                sym_adjoint(&r, &identity(&r, n)).unwrap(),
                scalar_mul(&r, &fact(n - 1), &identity(&r, n))
            );
        }
    }

    #[test]
    fn commutative_specialization() {
        let r = RationalField;
        let mut s = Sampler::new(SampleSpec::new(17));
        for n in 1..=4 {
            for _ in 0..15 {
                let rows = rat_matrix(&mut s, n);
                let a = RingMatrix::from_rows(rows.clone()).unwrap();
                assert_eq!(sdet(&r, &a).unwrap(), fact(n) * det_oracle(&rows));
                let adj = RingMatrix::from_rows(adj_oracle(&rows)).unwrap();
                let expected = if n == 1 { identity(&r, 1) } else { scalar_mul(&r, &fact(n - 1), &adj) };
                assert_eq!(sym_adjoint(&r, &a).unwrap(), expected);
            }
        }
    }

    #[test]
    fn subset_programme_matches_enumeration() {
        let e = GrassmannAlgebra::new(3).unwrap();
        let mut s = Sampler::new(SampleSpec::new(23));
        for n in 1..=4 {
            for _ in 0..3 {
                let a = RingMatrix::from_fn(n, |_, _| s.element(&e));
                assert_eq!(sdet(&e, &a).unwrap(), sdet_by_permutations(&e, &a).unwrap());
                assert_eq!(sym_adjoint(&e, &a).unwrap(), sym_adjoint_by_permutations(&e, &a).unwrap());
            }
        }
    }

    #[cfg(feature = "parallel")]
    #[test]
    fn parallel_enumeration_is_identical() {
        let e = GrassmannAlgebra::new(4).unwrap();
        let mut s = Sampler::new(SampleSpec::new(29));
        for n in 2..=4 {
            let a = RingMatrix::from_fn(n, |_, _| s.element(&e));
            assert_eq!(
                sdet_by_permutations_parallel(&e, &a).unwrap(),
                sdet_by_permutations(&e, &a).unwrap()
            );
        }
    }

    #[test]
    fn trace_forms_of_sdet() {
        let e = GrassmannAlgebra::new(3).unwrap();
        let mut s = Sampler::new(SampleSpec::new(31));
        for n in 2..=3 {
            for _ in 0..5 {
                let a = RingMatrix::from_fn(n, |_, _| s.element(&e));
                let adj = sym_adjoint(&e, &a).unwrap();
                let d = sdet(&e, &a).unwrap();
                assert_eq!(trace(&e, &mul(&e, &a, &adj).unwrap()), d);
                assert_eq!(trace(&e, &mul(&e, &adj, &a).unwrap()), d);
                assert_eq!(rdet(&e, &a, 1).unwrap(), d);
            }
        }
    }

    #[test]
    fn one_by_one_convention() {
        let e = GrassmannAlgebra::new(2).unwrap();
        let a = RingMatrix::from_rows(vec![vec![e.v(1)]]).unwrap();
        assert_eq!(sym_adjoint(&e, &a).unwrap(), identity(&e, 1));
        for k in 1..=3 {
            assert_eq!(rdet(&e, &a, k).unwrap(), e.v(1));
        }
        assert_eq!(sdet(&e, &a).unwrap(), e.v(1));
    }

    #[test]
    fn commutative_chain_oracle() {
        let r = RationalField;
        let mut s = Sampler::new(SampleSpec::new(37));
        for n in 2..=3 {
            for _ in 0..5 {
                let rows = rat_matrix(&mut s, n);
                let mut current = rows.clone();
                let mut expected = Vec::new();
                for _ in 0..3 {
                    let p: Vec<Vec<Rational>> = adj_oracle(&current)
                        .into_iter()
                        .map(|row| row.into_iter().map(|x| x * fact(n - 1)).collect())
                        .collect();
                    current = (0..n)
                        .map(|i| {
                            (0..n)
                                .map(|j| (0..n).fold(q(0), |acc, l| acc + &current[i][l] * &p[l][j]))
                                .collect()
                        })
                        .collect();
                    expected.push(RingMatrix::from_rows(p).unwrap());
                }
                let a = RingMatrix::from_rows(rows.clone()).unwrap();
                let c = right_adjoint_chain(&r, &a, 3).unwrap();
                assert_eq!(c.factors(), expected.as_slice());
                assert_eq!(c.level(), 3);
                if n == 2 {
                    assert_eq!(rdet(&r, &a, 1).unwrap(), q(2) * det_oracle(&rows));
                }
            }
        }
    }

    #[test]
    fn zero_matrix_chain() {
        let e = GrassmannAlgebra::new(2).unwrap();
        let z = zero_matrix(&e, 3);
        let c = right_adjoint_chain(&e, &z, 3).unwrap();
        assert!(c.factors().iter().all(|p| *p == z));
    }

    #[test]
    fn classical_char_poly_for_two_by_two() {
        let r = RationalField;
        let mut s = Sampler::new(SampleSpec::new(41));
        for _ in 0..10 {
            let rows = rat_matrix(&mut s, 2);
            let (a, b, c, d) = (&rows[0][0], &rows[0][1], &rows[1][0], &rows[1][1]);
            let m = RingMatrix::from_rows(rows.clone()).unwrap();
            let p = char_poly(&r, &m, 1).unwrap();
            assert_eq!(
                p.coefficients,
                vec![q(2) * (a * d - b * c), q(-2) * (a + d), q(2)]
            );
        }
    }

    #[test]
    fn leading_coefficients() {
        assert_eq!(expected_leading(2, 1), q(2));
        assert_eq!(expected_leading(2, 3), q(2));
        assert_eq!(expected_leading(3, 1), q(6));
        assert_eq!(expected_leading(3, 2), q(3 * 2i64.pow(4)));
        assert_eq!(expected_leading(4, 2), q(4 * 6i64.pow(5)));
        let e = GrassmannAlgebra::new(3).unwrap();
        let mut s = Sampler::new(SampleSpec::new(43));
        let a = RingMatrix::from_fn(2, |_, _| s.element(&e));
        let p = char_poly(&e, &a, 2).unwrap();
        assert_eq!(p.degree(), 4);
        assert_eq!(p.coefficients[4], e.from_int(2));
    }

    #[test]
    fn zero_matrix_char_poly() {
        let e = GrassmannAlgebra::new(2).unwrap();
        let p = char_poly(&e, &zero_matrix(&e, 2), 2).unwrap();
        let mut expected = vec![e.zero(); 4];
        expected.push(e.from_int(2));
        assert_eq!(p.coefficients, expected);
    }

    #[test]
    fn interpolation_agrees() {
        let e = GrassmannAlgebra::new(4).unwrap();
        let mut s = Sampler::new(SampleSpec::new(47));
        for (n, k) in [(2, 1), (2, 2), (3, 1), (2, 3), (3, 2)] {
            let a = RingMatrix::from_fn(n, |_, _| s.element(&e));
            assert_eq!(
                char_poly(&e, &a, k).unwrap(),
                DetTheory::new(&e).char_poly_by_interpolation(&a, k).unwrap()
            );
        }
        let rf = relfree::build(2, 3, 4).unwrap();
        let alg = rf.algebra();
        let a = RingMatrix::from_fn(2, |_, _| s.element(alg));
        assert_eq!(
            char_poly(alg, &a, 2).unwrap(),
            DetTheory::new(alg).char_poly_by_interpolation(&a, 2).unwrap()
        );
    }

    #[test]
    fn char_poly_over_quotient() {
        let u = upper_triangular(&from_grassmann(2).unwrap(), 2).unwrap();
        let d = double_commutator_ideal(&u);
        let qd = quotient(&u, &d).unwrap();
        let mut s = Sampler::new(SampleSpec::new(53));
        let a = RingMatrix::from_fn(2, |_, _| s.element(qd.algebra()));
        let p = char_poly(qd.algebra(), &a, 2).unwrap();
        assert_eq!(p.coefficients[4], qd.algebra().from_int(2));
    }

    #[test]
    fn caps() {
        let r = RationalField;
        let big = identity(&r, 6);
        assert!(matches!(sdet(&r, &big), Err(Error::SizeCap { .. })));
        assert!(DetTheory::with_limits(&r, Limits::unlimited()).sdet(&big).is_ok());
        assert!(matches!(rdet(&r, &identity(&r, 2), 0), Err(Error::OutOfRange { .. })));
        assert!(matches!(rdet(&r, &identity(&r, 2), 5), Err(Error::SizeCap { .. })));
        assert_eq!(DetTheory::with_limits(&r, Limits::unlimited()).sdet(&big).unwrap(), fact(6));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn sdet_trace_identity_prop(seed in any::<u64>(), n in 2usize..4) {
            let e = GrassmannAlgebra::new(3).unwrap();
            let mut s = Sampler::new(SampleSpec::new(seed));
            let a = RingMatrix::from_fn(n, |_, _| s.element(&e));
            let adj = sym_adjoint(&e, &a).unwrap();
            let d = sdet(&e, &a).unwrap();
            prop_assert_eq!(trace(&e, &mul(&e, &a, &adj).unwrap()), d.clone());
            prop_assert_eq!(trace(&e, &mul(&e, &adj, &a).unwrap()), d);
        }
    }
}
