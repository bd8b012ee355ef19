//! Two-sided ideals of a structure-constant algebra, computed as exact
//! subspaces.
//!
//! Commutators are multilinear and ideals are linear spans, so generating
//! families only ever need basis elements in each commutator slot.

use super::{AlgebraElement, StructureAlgebra, Subspace};
use crate::error::{Error, Result};
use crate::ringcore::Rational;

fn basis_commutator(alg: &StructureAlgebra, x: &[Rational], j: usize) -> Vec<Rational> {
    let xb = alg.right_basis_mul(x, j);
    let bx = alg.left_basis_mul(j, x);
    xb.iter().zip(&bx).map(|(a, b)| a - b).collect()
}

/// Closes `seed` under left and right multiplication by every basis element.
fn close_two_sided(alg: &StructureAlgebra, mut space: Subspace) -> Subspace {
    let mut queue: Vec<Vec<Rational>> = space.rows().to_vec();
    while let Some(x) = queue.pop() {
        for i in 0..alg.dim() {
            for y in [alg.left_basis_mul(i, &x), alg.right_basis_mul(&x, i)] {
                if space.insert(y.clone()) {
                    queue.push(y);
                }
            }
        }
    }
    space
}

/// Smallest two-sided ideal containing `gens`.
pub fn ideal_generated(alg: &StructureAlgebra, gens: &[AlgebraElement]) -> Subspace {
    let seed = Subspace::from_vectors(alg.dim(), gens.iter().map(|g| g.coords().to_vec()));
    close_two_sided(alg, seed)
}

/// Whether `space` absorbs multiplication by every basis element on both sides.
pub fn is_ideal(alg: &StructureAlgebra, space: &Subspace) -> bool {
    space.rows().iter().all(|x| {
        (0..alg.dim()).all(|i| {
            space.contains(&alg.left_basis_mul(i, x)) && space.contains(&alg.right_basis_mul(x, i))
        })
    })
}

/// Linear span of all left-normed `k`-fold commutators `[b_1, ..., b_k]_k`.
pub fn commutator_span(alg: &StructureAlgebra, k: usize) -> Subspace {
    let mut current = Subspace::full(alg.dim());
    for _ in 1..k {
        let mut next = Subspace::zero(alg.dim());
        for x in current.rows() {
            for j in 0..alg.dim() {
                next.insert(basis_commutator(alg, x, j));
            }
        }
        current = next;
        if current.is_zero() {
            break;
        }
    }
    current
}

/// `T = R[R,R]R`.
pub fn commutator_ideal(alg: &StructureAlgebra) -> Subspace {
    close_two_sided(alg, commutator_span(alg, 2))
}

/// `D = R[[R,R],R]R`.
pub fn double_commutator_ideal(alg: &StructureAlgebra) -> Subspace {
    close_two_sided(alg, commutator_span(alg, 3))
}

/// The ideal generated by all left-normed `k`-commutators.
pub fn jennings_ideal(alg: &StructureAlgebra, k: usize) -> Result<Subspace> {
    if k < 2 {
        return Err(Error::OutOfRange {
            what: "commutator length k",
            value: k,
            allowed: ">= 2".into(),
        });
    }
    Ok(close_two_sided(alg, commutator_span(alg, k)))
}

/// `I^s`, built as `I^{j+1} = span{x·y : x ∈ I^j, y ∈ I}`.
pub fn ideal_power(alg: &StructureAlgebra, ideal: &Subspace, s: usize) -> Result<Subspace> {
    if s == 0 {
        return Err(Error::OutOfRange {
            what: "ideal power s",
            value: 0,
            allowed: ">= 1".into(),
        });
    }
    let mut power = ideal.clone();
    for _ in 1..s {
        if power.is_zero() {
            break;
        }
        power = product_space(alg, &power, ideal);
    }
    Ok(power)
}

fn product_space(alg: &StructureAlgebra, a: &Subspace, b: &Subspace) -> Subspace {
    let mut out = Subspace::zero(alg.dim());
    for x in a.rows() {
        for y in b.rows() {
            out.insert(alg.mul_coords(x, y));
        }
    }
    out
}

/// Least `s >= 1` with `I^s = 0`, searching up to `limit`; `None` if the
/// powers have not vanished by then.
pub fn nilpotency_index(alg: &StructureAlgebra, ideal: &Subspace, limit: usize) -> Option<usize> {
    let mut power = ideal.clone();
    for s in 1..=limit {
        if power.is_zero() {
            return Some(s);
        }
        let next = product_space(alg, &power, ideal);
        if next == power {
            return None;
        }
        power = next;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::findim::{from_grassmann, rational_algebra, upper_triangular};
    use crate::ringcore::{commutator, Ring, SampleSpec, Sampler};

    #[test]
    fn ideals_in_u2_rationals() {
        let u = upper_triangular(&rational_algebra(), 2).unwrap();
        let e11 = u.generator("e11").unwrap();
        let e12 = u.generator("e12").unwrap();
        let i = ideal_generated(&u, std::slice::from_ref(&e12));
        assert_eq!(i.rank(), 1);
        assert!(i.contains(e12.coords()));
        let j = ideal_generated(&u, std::slice::from_ref(&e11));
        assert_eq!(j.rank(), 2);
        assert!(j.contains(e11.coords()) && j.contains(e12.coords()));
        assert!(ideal_generated(&u, &[u.zero()]).is_zero());

        let t = commutator_ideal(&u);
        assert_eq!(t, i);
        assert!(ideal_power(&u, &i, 2).unwrap().is_zero());
        assert_eq!(nilpotency_index(&u, &i, 10), Some(2));
        assert_eq!(nilpotency_index(&u, &j, 10), None);
    }

    #[test]
    fn grassmann_commutator_ideals() {
        let e2 = from_grassmann(2).unwrap();
        let t = commutator_ideal(&e2);
        assert_eq!(t.rank(), 1);
        assert!(t.contains(e2.basis(3).coords()));
        for m in 1..=4 {
            assert!(double_commutator_ideal(&from_grassmann(m).unwrap()).is_zero());
        }
        assert!(commutator_ideal(&rational_algebra()).is_zero());
        assert!(double_commutator_ideal(&rational_algebra()).is_zero());
        assert!(jennings_ideal(&rational_algebra(), 3).unwrap().is_zero());
        assert!(jennings_ideal(&e2, 1).is_err());
    }

    #[test]
    fn e_m_jennings_ideal_is_commutator_closure() {
        let e3 = from_grassmann(3).unwrap();
        assert_eq!(jennings_ideal(&e3, 2).unwrap(), commutator_ideal(&e3));
    }

    #[test]
    fn double_commutator_ideal_of_u2_e2() {
        let u = upper_triangular(&from_grassmann(2).unwrap(), 2).unwrap();
        let d = double_commutator_ideal(&u);
        assert!(!d.is_zero());
        assert!(is_ideal(&u, &d));
        assert!(ideal_power(&u, &d, 2).unwrap().is_zero());

        // brute-force: all basis triples [[b_i, b_j], b_k]
        let mut brute = Vec::new();
        for i in 0..u.dim() {
            for j in 0..u.dim() {
                for k in 0..u.dim() {
                    let c = commutator(&u, &commutator(&u, &u.basis(i), &u.basis(j)), &u.basis(k));
                    brute.push(c);
                }
            }
        }
        assert_eq!(ideal_generated(&u, &brute), d);

        // sampled r[[a,b],c]s land in D
        let mut s = Sampler::new(SampleSpec::new(9));
        for _ in 0..20 {
            let (r, a, b, c, t) = (s.element(&u), s.element(&u), s.element(&u), s.element(&u), s.element(&u));
            let x = u.mul(&u.mul(&r, &commutator(&u, &commutator(&u, &a, &b), &c)), &t);
            assert!(d.contains(x.coords()));
        }
    }

    #[test]
    fn closure_property_holds() {
        let u = upper_triangular(&from_grassmann(2).unwrap(), 2).unwrap();
        for ideal in [commutator_ideal(&u), double_commutator_ideal(&u)] {
            assert!(is_ideal(&u, &ideal));
        }
        assert!(!is_ideal(&u, &Subspace::from_vectors(u.dim(), [u.basis(1).into_coords()])));
    }
}
