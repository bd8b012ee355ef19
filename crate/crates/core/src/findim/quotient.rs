use super::{is_ideal, AlgebraElement, StructureAlgebra, Subspace};
use crate::error::{Error, Result};
use crate::ringcore::{Rational, Ring};

/// `R / I` for a two-sided ideal `I`, realised on the non-pivot coordinates
/// of the RREF basis of `I`.
///
/// `project` reduces a parent element modulo `I` and keeps the non-pivot
/// coordinates; `lift` puts quotient coordinates back on those positions,
/// which is the canonical section of the projection.
#[derive(Clone, Debug)]
pub struct QuotientAlgebra {
    parent: StructureAlgebra,
    ideal: Subspace,
    section: Vec<usize>,
    algebra: StructureAlgebra,
}

pub fn quotient(alg: &StructureAlgebra, ideal: &Subspace) -> Result<QuotientAlgebra> {
    QuotientAlgebra::new(alg, ideal, format!("{}/I", alg.name()))
}

impl QuotientAlgebra {
    pub fn new(alg: &StructureAlgebra, ideal: &Subspace, name: impl Into<String>) -> Result<Self> {
        if ideal.dim() != alg.dim() {
            return Err(Error::BackendMismatch(format!(
                "subspace of dimension {} in an algebra of dimension {}",
                ideal.dim(),
                alg.dim()
            )));
        }
        if !is_ideal(alg, ideal) {
            return Err(Error::NotAnIdeal);
        }
        if ideal.rank() == alg.dim() {
            return Err(Error::InvalidAlgebra("quotient by the whole algebra".into()));
        }
        let section = ideal.complement();
        let project_raw = |v: &[Rational]| -> Vec<Rational> {
            let r = ideal.reduce(v);
            section.iter().map(|&c| r[c].clone()).collect()
        };
        let qd = section.len();
        let mut table = Vec::with_capacity(qd * qd);
        for &i in &section {
            for &j in &section {
                let mut prod = vec![Rational::zero(); alg.dim()];
                for (k, c) in alg.basis_product(i, j) {
                    prod[*k as usize] = c.clone();
                }
                table.push(
                    project_raw(&prod)
                        .into_iter()
                        .enumerate()
                        .filter(|(_, q)| !q.is_zero())
                        .collect(),
                );
            }
        }
        let labels = section.iter().map(|&c| alg.labels()[c].clone()).collect();
        let unit = project_raw(alg.unit_coords());
        let generators = alg
            .generator_coords()
            .iter()
            .map(|(n, g)| (n.clone(), project_raw(g)))
            .collect();
        let algebra = StructureAlgebra::new(name, labels, table, unit, generators)?;
        Ok(QuotientAlgebra {
            parent: alg.clone(),
            ideal: ideal.clone(),
            section,
            algebra,
        })
    }

    pub fn parent(&self) -> &StructureAlgebra {
        &self.parent
    }

    pub fn ideal(&self) -> &Subspace {
        &self.ideal
    }

    /// The quotient as an algebra in its own right.
    pub fn algebra(&self) -> &StructureAlgebra {
        &self.algebra
    }

    /// Parent coordinates kept by the canonical section.
    pub fn section(&self) -> &[usize] {
        &self.section
    }

    pub fn project(&self, x: &AlgebraElement) -> AlgebraElement {
        let r = self.ideal.reduce(x.coords());
        AlgebraElement::new(self.section.iter().map(|&c| r[c].clone()).collect())
    }

    pub fn lift(&self, x: &AlgebraElement) -> AlgebraElement {
        let mut c = vec![Rational::zero(); self.parent.dim()];
        for (&s, q) in self.section.iter().zip(x.coords()) {
            c[s] = q.clone();
        }
        AlgebraElement::new(c)
    }

    /// Canonical normal form of a parent element: `lift(project(x))`.
    pub fn normal_form(&self, x: &AlgebraElement) -> AlgebraElement {
        AlgebraElement::new(self.ideal.reduce(x.coords()))
    }

    pub fn in_ideal(&self, x: &AlgebraElement) -> bool {
        self.ideal.contains(x.coords())
    }

    /// Element of the ideal with the given coefficients on its RREF basis.
    pub fn ideal_element(&self, coefficients: &[Rational]) -> AlgebraElement {
        let mut out = self.parent.zero();
        for (row, q) in self.ideal.rows().iter().zip(coefficients) {
            self.parent
                .add_assign(&mut out, &self.parent.scale(q, &AlgebraElement::new(row.clone())));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::findim::{commutator_ideal, double_commutator_ideal, from_grassmann, rational_algebra, upper_triangular};
    use crate::ringcore::{commutator, SampleSpec, Sampler};

    #[test]
    fn quotient_by_zero_is_identity() {
        let e2 = from_grassmann(2).unwrap();
        let q = quotient(&e2, &Subspace::zero(4)).unwrap();
        assert_eq!(q.algebra().dim(), 4);
        let x = e2.add(&e2.generator("v1").unwrap(), &e2.scale(&Rational::from_int(3), &e2.basis(3)));
        assert_eq!(q.project(&x).coords(), x.coords());
    }

    #[test]
    fn u2_mod_strict_upper_is_commutative() {
        let u = upper_triangular(&rational_algebra(), 2).unwrap();
        let t = commutator_ideal(&u);
        let q = quotient(&u, &t).unwrap();
        let a = q.algebra();
        assert_eq!(a.dim(), 2);
        assert_eq!(a.labels(), &["e11", "e22"]);
        let (e11, e22) = (a.basis(0), a.basis(1));
        assert_eq!(a.mul(&e11, &e11), e11);
        assert!(a.mul(&e11, &e22).is_zero());
        assert!(a.mul(&e22, &e11).is_zero());
        assert!(commutator_ideal(a).is_zero());
    }

    #[test]
    fn e2_mod_top_monomial() {
        let e2 = from_grassmann(2).unwrap();
        let t = commutator_ideal(&e2);
        let q = quotient(&e2, &t).unwrap();
        let a = q.algebra();
        assert_eq!(a.dim(), 3);
        let (v1, v2) = (a.generator("v1").unwrap(), a.generator("v2").unwrap());
        assert!(a.mul(&v1, &v2).is_zero());
        let x = e2.add(&e2.generator("v1").unwrap(), &e2.scale(&Rational::from_int(3), &e2.basis(3)));
        assert_eq!(q.project(&x), v1);
        assert_eq!(a.render(&q.project(&x)), "v1");
    }

    #[test]
    fn rejects_non_ideal() {
        let u = upper_triangular(&rational_algebra(), 2).unwrap();
        let s = Subspace::from_vectors(3, [u.generator("e11").unwrap().into_coords()]);
        assert_eq!(quotient(&u, &s).unwrap_err(), Error::NotAnIdeal);
    }

    #[test]
    fn projection_is_a_unital_homomorphism() {
        let u = upper_triangular(&from_grassmann(2).unwrap(), 2).unwrap();
        let d = double_commutator_ideal(&u);
        let q = quotient(&u, &d).unwrap();
        let a = q.algebra();
        assert_eq!(q.project(&u.one()), a.one());
        let mut s = Sampler::new(SampleSpec::new(21));
        for _ in 0..30 {
            let (x, y) = (s.element(&u), s.element(&u));
            assert_eq!(q.project(&u.mul(&x, &y)), a.mul(&q.project(&x), &q.project(&y)));
            let xb = q.project(&x);
            assert_eq!(q.project(&q.lift(&xb)), xb);
            // any two lifts differ by an ideal member
            let coeffs: Vec<Rational> = (0..d.rank()).map(|_| s.rational()).collect();
            let other = u.add(&q.lift(&xb), &q.ideal_element(&coeffs));
            assert_eq!(q.project(&other), xb);
            assert!(q.in_ideal(&u.sub(&other, &q.lift(&xb))));
            assert!(q.in_ideal(&u.sub(&x, &q.lift(&xb))));
        }
        for row in d.rows() {
            assert!(q.project(&AlgebraElement::new(row.clone())).is_zero());
        }
        // R/D is Lie nilpotent of index 2
        let mut s = Sampler::new(SampleSpec::new(22));
        for _ in 0..10 {
            let (x, y, z) = (s.element(a), s.element(a), s.element(a));
            assert!(a.is_zero(&commutator(a, &commutator(a, &x, &y), &z)));
        }
    }
}
