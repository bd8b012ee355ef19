use crate::ringcore::Rational;

/// A subspace of `ℚ^dim` held in reduced row-echelon form.
///
/// Rows are sorted by pivot column; each pivot entry is 1 and every other row
/// is zero in that column. The RREF of a subspace is unique, so two
/// `Subspace`s are equal iff their rows are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    dim: usize,
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(dim: usize) -> Self {
        Subspace {
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(dim: usize) -> Self {
        let mut s = Self::zero(dim);
        for i in 0..dim {
            let mut v = vec![Rational::zero(); dim];
            v[i] = Rational::one();
            s.insert(v);
        }
        s
    }

    pub fn from_vectors<I>(dim: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = Vec<Rational>>,
    {
        let mut s = Self::zero(dim);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Column indices that are not pivots, in increasing order.
    pub fn complement(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.dim - self.rank());
        let mut p = self.pivots.iter().peekable();
        for c in 0..self.dim {
            if p.peek() == Some(&&c) {
                p.next();
            } else {
                out.push(c);
            }
        }
        out
    }

    /// Canonical representative of `v + self`: the unique vector in the coset
    /// that vanishes on every pivot column.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.dim, "vector length");
        let mut out = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if out[p].is_zero() {
                continue;
            }
            let f = out[p].clone();
            for (x, r) in out.iter_mut().zip(row).skip(p) {
                if !r.is_zero() {
                    *x -= &(&f * r);
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(Rational::is_zero)
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: Vec<Rational>) -> bool {
        let mut r = self.reduce(&v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].recip().expect("nonzero pivot");
        for x in r.iter_mut().skip(p) {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        for row in &mut self.rows {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, y) in row.iter_mut().zip(&r).skip(p) {
                if !y.is_zero() {
                    *x -= &(&f * y);
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, r);
        true
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }
}
