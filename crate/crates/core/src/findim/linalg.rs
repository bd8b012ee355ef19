//! Dense exact linear algebra over ℚ.

use crate::error::{Error, Result};
use crate::ringcore::Rational;

/// Solves `Σ x_j · columns[j] = rhs`, returning one solution (free variables
/// set to zero) or `None` when the system is inconsistent.
pub fn solve(columns: &[Vec<Rational>], rhs: &[Rational]) -> Option<Vec<Rational>> {
    let rows = rhs.len();
    let cols = columns.len();
    let mut m: Vec<Vec<Rational>> = (0..rows)
        .map(|i| {
            let mut r: Vec<Rational> = columns.iter().map(|c| c[i].clone()).collect();
            r.push(rhs[i].clone());
            r
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip().expect("nonzero pivot");
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x -= &(&f * y);
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if m[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); cols];
    for (i, &c) in pivot_cols.iter().enumerate() {
        x[c] = m[i][cols].clone();
    }
    Some(x)
}

/// Inverse of a square rational matrix by Gauss-Jordan elimination.
pub fn invert(a: &[Vec<Rational>]) -> Result<Vec<Vec<Rational>>> {
    let n = a.len();
    if a.iter().any(|r| r.len() != n) {
        return Err(Error::SizeMismatch(n, a.iter().map(Vec::len).max().unwrap_or(0)));
    }
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !m[i][c].is_zero()).ok_or(Error::Singular)?;
        m.swap(c, p);
        let inv = m[c][c].recip()?;
        for x in m[c].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[c].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == c || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x -= &(&f * y);
            }
        }
    }
    Ok(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn invert_two_by_two() {
        let a = vec![vec![q(1), q(2)], vec![q(3), q(4)]];
        let inv = invert(&a).unwrap();
        let h = Rational::new(1, 2).unwrap();
        assert_eq!(inv, vec![vec![q(-2), q(1)], vec![Rational::new(3, 2).unwrap(), -h]]);
        assert_eq!(invert(&[vec![q(1), q(2)], vec![q(2), q(4)]]), Err(Error::Singular));
    }

    #[test]
    fn solve_consistent_and_not() {
        let cols = vec![vec![q(1), q(0), q(1)], vec![q(0), q(1), q(1)]];
        assert_eq!(solve(&cols, &[q(2), q(3), q(5)]), Some(vec![q(2), q(3)]));
        assert_eq!(solve(&cols, &[q(2), q(3), q(4)]), None);
    }
}
