//! Square matrices over a backend, and polynomials in one central
//! indeterminate `x` with backend coefficients.

use crate::error::{Error, Result};
use crate::findim::{AlgebraElement, QuotientAlgebra};
use crate::ringcore::{Rational, Ring};

/// `n x n` matrix stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingMatrix<E> {
    n: usize,
    entries: Vec<E>,
}

impl<E> RingMatrix<E> {
    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: E) {
        self.entries[i * self.n + j] = value;
    }

    pub fn entries(&self) -> &[E] {
        &self.entries
    }
}

impl<E: Clone> RingMatrix<E> {
    pub fn from_rows(rows: Vec<Vec<E>>) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::RaggedMatrix {
                    row: i,
                    found: row.len(),
                    expected: n,
                });
            }
            entries.extend(row);
        }
        Ok(RingMatrix { n, entries })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        RingMatrix { n, entries }
    }

    pub fn rows(&self) -> Vec<Vec<E>> {
        self.entries.chunks(self.n.max(1)).map(|r| r.to_vec()).collect()
    }

    pub fn map<F, T: Clone>(&self, f: F) -> RingMatrix<T>
    where
        F: FnMut(&E) -> T,
    {
        RingMatrix {
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// Copy with row `row` and column `col` deleted.
    pub fn minor(&self, row: usize, col: usize) -> Self {
        let n = self.n;
        let mut entries = Vec::with_capacity((n - 1) * (n - 1));
        for i in (0..n).filter(|&i| i != row) {
            for j in (0..n).filter(|&j| j != col) {
                entries.push(self.get(i, j).clone());
            }
        }
        RingMatrix { n: n - 1, entries }
    }
}

fn same_size<E>(a: &RingMatrix<E>, b: &RingMatrix<E>) -> Result<()> {
    if a.n != b.n {
        Err(Error::SizeMismatch(a.n, b.n))
    } else {
        Ok(())
    }
}

pub fn identity<R: Ring>(ring: &R, n: usize) -> RingMatrix<R::Elem> {
    scalar_matrix(ring, n, &ring.one())
}

pub fn zero_matrix<R: Ring>(ring: &R, n: usize) -> RingMatrix<R::Elem> {
    RingMatrix::from_fn(n, |_, _| ring.zero())
}

/// `c · I_n` for a ring element `c` on the diagonal.
pub fn scalar_matrix<R: Ring>(ring: &R, n: usize, c: &R::Elem) -> RingMatrix<R::Elem> {
    RingMatrix::from_fn(n, |i, j| if i == j { c.clone() } else { ring.zero() })
}

/// Embeds a rational matrix through `q ↦ q·1`.
pub fn from_rational<R: Ring>(ring: &R, rows: &[Vec<Rational>]) -> Result<RingMatrix<R::Elem>> {
    RingMatrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|q| ring.from_rational(q)).collect())
            .collect(),
    )
}

pub fn add<R: Ring>(ring: &R, a: &RingMatrix<R::Elem>, b: &RingMatrix<R::Elem>) -> Result<RingMatrix<R::Elem>> {
    same_size(a, b)?;
    Ok(RingMatrix {
        n: a.n,
        entries: a.entries.iter().zip(&b.entries).map(|(x, y)| ring.add(x, y)).collect(),
    })
}

pub fn sub<R: Ring>(ring: &R, a: &RingMatrix<R::Elem>, b: &RingMatrix<R::Elem>) -> Result<RingMatrix<R::Elem>> {
    same_size(a, b)?;
    Ok(RingMatrix {
        n: a.n,
        entries: a.entries.iter().zip(&b.entries).map(|(x, y)| ring.sub(x, y)).collect(),
    })
}

pub fn neg<R: Ring>(ring: &R, a: &RingMatrix<R::Elem>) -> RingMatrix<R::Elem> {
    a.map(|x| ring.neg(x))
}

pub fn scalar_mul<R: Ring>(ring: &R, q: &Rational, a: &RingMatrix<R::Elem>) -> RingMatrix<R::Elem> {
    a.map(|x| ring.scale(q, x))
}

/// `A · c`: every entry multiplied on the right by the ring element `c`.
pub fn mul_right_elem<R: Ring>(ring: &R, a: &RingMatrix<R::Elem>, c: &R::Elem) -> RingMatrix<R::Elem> {
    a.map(|x| ring.mul(x, c))
}

/// `c · A`.
pub fn mul_left_elem<R: Ring>(ring: &R, c: &R::Elem, a: &RingMatrix<R::Elem>) -> RingMatrix<R::Elem> {
    a.map(|x| ring.mul(c, x))
}

pub fn mul<R: Ring>(ring: &R, a: &RingMatrix<R::Elem>, b: &RingMatrix<R::Elem>) -> Result<RingMatrix<R::Elem>> {
    same_size(a, b)?;
    let n = a.n;
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut acc = ring.zero();
            for l in 0..n {
                ring.add_assign(&mut acc, &ring.mul(a.get(i, l), b.get(l, j)));
            }
            entries.push(acc);
        }
    }
    Ok(RingMatrix { n, entries })
}

/// `A^e` by repeated right multiplication; `A^0 = I_n`.
pub fn power<R: Ring>(ring: &R, a: &RingMatrix<R::Elem>, e: u32) -> RingMatrix<R::Elem> {
    let mut out = identity(ring, a.n);
    for _ in 0..e {
        out = mul(ring, &out, a).expect("same size");
    }
    out
}

/// `[A, A², ..., A^e]` preceded by `I`.
pub fn powers<R: Ring>(ring: &R, a: &RingMatrix<R::Elem>, e: usize) -> Vec<RingMatrix<R::Elem>> {
    let mut out = Vec::with_capacity(e + 1);
    out.push(identity(ring, a.n));
    for i in 0..e {
        let next = mul(ring, &out[i], a).expect("same size");
        out.push(next);
    }
    out
}

pub fn trace<R: Ring>(ring: &R, a: &RingMatrix<R::Elem>) -> R::Elem {
    ring.sum((0..a.n).map(|i| a.get(i, i)))
}

pub fn is_zero_matrix<R: Ring>(ring: &R, a: &RingMatrix<R::Elem>) -> bool {
    a.entries.iter().all(|x| ring.is_zero(x))
}

pub fn render_matrix<R: Ring>(ring: &R, a: &RingMatrix<R::Elem>) -> String {
    let rows: Vec<String> = (0..a.n)
        .map(|i| {
            let cells: Vec<String> = (0..a.n).map(|j| ring.render(a.get(i, j))).collect();
            format!("[{}]", cells.join(", "))
        })
        .collect();
    format!("[{}]", rows.join(", "))
}

/// Entrywise image `[a_ij + I]` in the quotient algebra.
pub fn matrix_image(
    a: &RingMatrix<AlgebraElement>,
    quotient: &QuotientAlgebra,
) -> Result<RingMatrix<AlgebraElement>> {
    let dim = quotient.parent().dim();
    if let Some(bad) = a.entries().iter().find(|x| x.coords().len() != dim) {
        return Err(Error::BackendMismatch(format!(
            "entry of dimension {} for a parent of dimension {dim}",
            bad.coords().len()
        )));
    }
    Ok(a.map(|x| quotient.project(x)))
}

/// Polynomial `Σ c_i x^i` in a central indeterminate. Trailing zero
/// coefficients are never stored; the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralPoly<E> {
    coeffs: Vec<E>,
}

impl<E: Clone> CentralPoly<E> {
    pub fn coefficients(&self) -> &[E] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&E> {
        self.coeffs.last()
    }
}

/// Candidate names of the indeterminate, first one not taken by a base generator wins.
const INDETERMINATE_NAMES: [&str; 4] = ["x", "X", "t", "T"];

/// `R[x]` as a ring, `x` central.
#[derive(Clone, Copy, Debug)]
pub struct PolyRing<'a, R> {
    base: &'a R,
    var: &'static str,
}

impl<'a, R: Ring> PolyRing<'a, R> {
    /// The indeterminate is named `x`, or `X`, `t`, `T` if the base ring
    /// already has a generator of that name.
    pub fn new(base: &'a R) -> Self {
        let taken: Vec<String> = base.generators().into_iter().map(|(n, _)| n).collect();
        let var = INDETERMINATE_NAMES
            .into_iter()
            .find(|v| !taken.iter().any(|t| t == v))
            .unwrap_or("x");
        PolyRing { base, var }
    }

    pub fn indeterminate(&self) -> &'static str {
        self.var
    }

    pub fn base(&self) -> &R {
        self.base
    }

    pub fn from_coefficients(&self, coeffs: Vec<R::Elem>) -> CentralPoly<R::Elem> {
        let mut p = CentralPoly { coeffs };
        self.trim(&mut p);
        p
    }

    pub fn constant(&self, c: R::Elem) -> CentralPoly<R::Elem> {
        self.from_coefficients(vec![c])
    }

    pub fn x(&self) -> CentralPoly<R::Elem> {
        self.from_coefficients(vec![self.base.zero(), self.base.one()])
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coefficient(&self, p: &CentralPoly<R::Elem>, i: usize) -> R::Elem {
        p.coeffs.get(i).cloned().unwrap_or_else(|| self.base.zero())
    }

    fn trim(&self, p: &mut CentralPoly<R::Elem>) {
        while p.coeffs.last().is_some_and(|c| self.base.is_zero(c)) {
            p.coeffs.pop();
        }
    }

    /// Evaluation at a central rational point.
    pub fn eval_rational(&self, p: &CentralPoly<R::Elem>, at: &Rational) -> R::Elem {
        let mut acc = self.base.zero();
        let mut pw = Rational::one();
        for c in &p.coeffs {
            self.base.add_assign(&mut acc, &self.base.scale(&pw, c));
            pw *= at;
        }
        acc
    }
}

impl<R: Ring> Ring for PolyRing<'_, R> {
    type Elem = CentralPoly<R::Elem>;

    fn zero(&self) -> Self::Elem {
        CentralPoly { coeffs: Vec::new() }
    }

    fn one(&self) -> Self::Elem {
        self.constant(self.base.one())
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let mut out = a.clone();
        self.add_assign(&mut out, b);
        out
    }

    fn add_assign(&self, acc: &mut Self::Elem, b: &Self::Elem) {
        if acc.coeffs.len() < b.coeffs.len() {
            acc.coeffs.resize(b.coeffs.len(), self.base.zero());
        }
        for (x, y) in acc.coeffs.iter_mut().zip(&b.coeffs) {
            self.base.add_assign(x, y);
        }
        self.trim(acc);
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        CentralPoly {
            coeffs: a.coeffs.iter().map(|c| self.base.neg(c)).collect(),
        }
    }

    /// Order-preserving convolution: coefficients of `a` stay on the left.
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if a.coeffs.is_empty() || b.coeffs.is_empty() {
            return self.zero();
        }
        let mut coeffs = vec![self.base.zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if self.base.is_zero(x) {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if self.base.is_zero(y) {
                    continue;
                }
                self.base.add_assign(&mut coeffs[i + j], &self.base.mul(x, y));
            }
        }
        self.from_coefficients(coeffs)
    }

    fn scale(&self, q: &Rational, a: &Self::Elem) -> Self::Elem {
        self.from_coefficients(a.coeffs.iter().map(|c| self.base.scale(q, c)).collect())
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.coeffs.is_empty()
    }

    fn generators(&self) -> Vec<(String, Self::Elem)> {
        let mut g: Vec<(String, Self::Elem)> = self
            .base
            .generators()
            .into_iter()
            .map(|(n, e)| (n, self.constant(e)))
            .collect();
        g.push((self.var.to_string(), self.x()));
        g
    }

    fn render(&self, a: &Self::Elem) -> String {
        let terms: Vec<String> = a
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !self.base.is_zero(c))
            .map(|(i, c)| {
                let c = self.base.render(c);
                let x = self.var;
                match i {
                    0 => format!("({c})"),
                    1 => format!("({c})*{x}"),
                    _ => format!("({c})*{x}^{i}"),
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }

    fn describe(&self) -> String {
        format!("{}[x]", self.base.describe())
    }
}

/// `(A)p = Σ A^i · c_i`: coefficients multiply the powers of `A` from the right.
pub fn poly_eval_right<R: Ring>(
    ring: &R,
    a: &RingMatrix<R::Elem>,
    p: &CentralPoly<R::Elem>,
) -> RingMatrix<R::Elem> {
    let pw = powers(ring, a, p.coeffs.len().saturating_sub(1));
    let mut acc = zero_matrix(ring, a.size());
    for (ai, c) in pw.iter().zip(&p.coeffs) {
        if ring.is_zero(c) {
            continue;
        }
        acc = add(ring, &acc, &mul_right_elem(ring, ai, c)).expect("same size");
    }
    acc
}

/// `Σ c_i · A^i`, coefficients on the left. Only for comparison in tests and
/// diagnostics; the identities use [`poly_eval_right`].
pub fn poly_eval_left_for_tests<R: Ring>(
    ring: &R,
    a: &RingMatrix<R::Elem>,
    p: &CentralPoly<R::Elem>,
) -> RingMatrix<R::Elem> {
    let pw = powers(ring, a, p.coeffs.len().saturating_sub(1));
    let mut acc = zero_matrix(ring, a.size());
    for (ai, c) in pw.iter().zip(&p.coeffs) {
        acc = add(ring, &acc, &mul_left_elem(ring, c, ai)).expect("same size");
    }
    acc
}

pub fn poly_mul<R: Ring>(ring: &R, p: &CentralPoly<R::Elem>, q: &CentralPoly<R::Elem>) -> CentralPoly<R::Elem> {
    PolyRing::new(ring).mul(p, q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::findim::{commutator_ideal, from_grassmann, quotient, rational_algebra, upper_triangular};
    use crate::grassmann::{GrassmannAlgebra, GrassmannElement};
    use crate::ringcore::{RationalField, SampleSpec, Sampler};

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn identity_power_trace() {
        let e = GrassmannAlgebra::new(3).unwrap();
        assert_eq!(trace(&e, &identity(&e, 2)), e.from_int(2));
        let a = RingMatrix::from_rows(vec![vec![e.v(1), e.v(2)], vec![e.zero(), e.v(1)]]).unwrap();
        assert_eq!(power(&e, &a, 0), identity(&e, 2));
        assert!(e.is_zero(&trace(&e, &power(&e, &a, 2))));
    }

    #[test]
    fn trace_is_additive_but_not_cyclic() {
        let e = GrassmannAlgebra::new(2).unwrap();
        let mut s = Sampler::new(SampleSpec::new(3));
        for _ in 0..10 {
            let a = RingMatrix::from_fn(2, |_, _| s.element(&e));
            let b = RingMatrix::from_fn(2, |_, _| s.element(&e));
            assert_eq!(
                trace(&e, &add(&e, &a, &b).unwrap()),
                e.add(&trace(&e, &a), &trace(&e, &b))
            );
        }
        let a = RingMatrix::from_rows(vec![vec![e.v(1), e.zero()], vec![e.zero(), e.zero()]]).unwrap();
        let b = RingMatrix::from_rows(vec![vec![e.v(2), e.zero()], vec![e.zero(), e.zero()]]).unwrap();
        let ab = trace(&e, &mul(&e, &a, &b).unwrap());
        let ba = trace(&e, &mul(&e, &b, &a).unwrap());
        assert_ne!(ab, ba);
        assert_eq!(ab, e.neg(&ba));
    }

    #[test]
    fn size_mismatch() {
        let r = RationalField;
        let a = identity(&r, 2);
        let b = identity(&r, 3);
        assert_eq!(mul(&r, &a, &b), Err(Error::SizeMismatch(2, 3)));
        assert!(RingMatrix::from_rows(vec![vec![q(1)], vec![q(2)]]).is_err());
    }

    #[test]
    fn poly_products_are_order_sensitive() {
        let e = GrassmannAlgebra::new(2).unwrap();
        let pr = PolyRing::new(&e);
        let p = pr.from_coefficients(vec![e.v(1), e.one()]);
        let r = pr.from_coefficients(vec![e.v(2), e.one()]);
        let v12 = GrassmannElement::monomial(2, 0b11, q(1));
        let s = e.add(&e.v(1), &e.v(2));
        assert_eq!(poly_mul(&e, &p, &r).coefficients(), &[v12.clone(), s.clone(), e.one()]);
        assert_eq!(poly_mul(&e, &r, &p).coefficients(), &[e.neg(&v12), s, e.one()]);
        assert_eq!(poly_mul(&e, &p, &pr.one()), p);
    }

    #[test]
    fn indeterminate_avoids_generator_names() {
        let e = GrassmannAlgebra::new(2).unwrap();
        assert_eq!(PolyRing::new(&e).indeterminate(), "x");
        let f = crate::relfree::build(2, 2, 2).unwrap();
        let pr = PolyRing::new(f.algebra());
        assert_eq!(pr.indeterminate(), "X");
        let h = crate::expr::parse_element("X^2 + x", &pr).unwrap();
        assert_eq!(pr.render(&h), "(x) + (1)*X^2");
    }

    #[test]
    fn commutative_poly_product() {
        let r = RationalField;
        let pr = PolyRing::new(&r);
        let p = pr.from_coefficients(vec![q(2), q(1)]);
        let s = pr.from_coefficients(vec![q(3), q(1)]);
        assert_eq!(pr.mul(&p, &s).coefficients(), &[q(6), q(5), q(1)]);
        assert_eq!(pr.sub(&p, &p).degree(), None);
    }

    #[test]
    fn right_evaluation() {
        let e = GrassmannAlgebra::new(2).unwrap();
        let pr = PolyRing::new(&e);
        let a = RingMatrix::from_rows(vec![vec![e.zero(), e.v(1)], vec![e.v(2), e.zero()]]).unwrap();
        assert_eq!(poly_eval_right(&e, &a, &pr.x()), a);
        let v12 = GrassmannElement::monomial(2, 0b11, q(1));
        let p = pr.from_coefficients(vec![e.neg(&v12), e.zero(), e.one()]);
        let got = poly_eval_right(&e, &a, &p);
        let expected = RingMatrix::from_rows(vec![
            vec![e.zero(), e.zero()],
            vec![e.zero(), e.scale(&q(-2), &v12)],
        ])
        .unwrap();
        assert_eq!(got, expected);

        // rational coefficients: both sides agree
        let p = pr.from_coefficients(vec![e.from_int(3), e.from_int(-1), e.from_int(2)]);
        assert_eq!(poly_eval_right(&e, &a, &p), poly_eval_left_for_tests(&e, &a, &p));
    }

    #[test]
    fn images_in_quotients() {
        let e2 = from_grassmann(2).unwrap();
        let t = commutator_ideal(&e2);
        let qt = quotient(&e2, &t).unwrap();
        let v1 = e2.generator("v1").unwrap();
        let entry = e2.add(&v1, &e2.scale(&q(3), &e2.basis(3)));
        let a = RingMatrix::from_rows(vec![vec![entry.clone(), e2.zero()], vec![e2.one(), entry]]).unwrap();
        let img = matrix_image(&a, &qt).unwrap();
        assert_eq!(qt.algebra().render(img.get(0, 0)), "v1");

        let u = upper_triangular(&rational_algebra(), 2).unwrap();
        let tu = commutator_ideal(&u);
        let qu = quotient(&u, &tu).unwrap();
        let e12 = u.generator("e12").unwrap();
        let m = RingMatrix::from_fn(2, |i, j| u.scale(&q((i + j) as i64), &e12));
        assert!(is_zero_matrix(qu.algebra(), &matrix_image(&m, &qu).unwrap()));

        let zero = crate::findim::Subspace::zero(4);
        let q0 = quotient(&e2, &zero).unwrap();
        assert_eq!(matrix_image(&a, &q0).unwrap(), a);
    }

    #[test]
    fn image_is_multiplicative() {
        let u = upper_triangular(&from_grassmann(2).unwrap(), 2).unwrap();
        let d = crate::findim::double_commutator_ideal(&u);
        let qd = quotient(&u, &d).unwrap();
        let mut s = Sampler::new(SampleSpec::new(8));
        for _ in 0..5 {
            let a = RingMatrix::from_fn(2, |_, _| s.element(&u));
            let b = RingMatrix::from_fn(2, |_, _| s.element(&u));
            let lhs = matrix_image(&mul(&u, &a, &b).unwrap(), &qd).unwrap();
            let rhs = mul(
                qd.algebra(),
                &matrix_image(&a, &qd).unwrap(),
                &matrix_image(&b, &qd).unwrap(),
            )
            .unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}
