use rand::Rng as _;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{Rational, Ring};

/// Parameters for deterministic random element generation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SampleSpec {
    pub seed: u64,
    /// Number of monomial terms per sampled element.
    pub term_count: usize,
    /// Integer numerators are drawn from `[-bound, bound] \ {0}`.
    pub coefficient_bound: i64,
    /// Longest product of generators in a single term.
    pub max_degree: usize,
    /// Weight `b^deg` for a term of degree `deg`; uniform when absent.
    pub degree_bias: Option<f64>,
}

impl SampleSpec {
    pub fn new(seed: u64) -> Self {
        SampleSpec {
            seed,
            term_count: 3,
            coefficient_bound: 3,
            max_degree: 3,
            degree_bias: None,
        }
    }

    pub fn with_terms(mut self, term_count: usize) -> Self {
        self.term_count = term_count;
        self
    }

    pub fn with_max_degree(mut self, max_degree: usize) -> Self {
        self.max_degree = max_degree;
        self
    }
}

/// Seeded source of random elements, matrices and scalars.
///
/// Two samplers built from equal specs produce identical streams.
pub struct Sampler {
    spec: SampleSpec,
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(spec: SampleSpec) -> Self {
        let rng = ChaCha8Rng::seed_from_u64(spec.seed);
        Sampler { spec, rng }
    }

    pub fn spec(&self) -> &SampleSpec {
        &self.spec
    }

    /// Derives an independent sampler; used to give each trial its own stream.
    pub fn fork(&mut self) -> Sampler {
        let seed = self.rng.gen::<u64>();
        Sampler::new(SampleSpec {
            seed,
            ..self.spec.clone()
        })
    }

    pub fn index(&mut self, bound: usize) -> usize {
        self.rng.gen_range(0..bound)
    }

    pub fn coin(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }

    /// Nonzero rational with integer numerator in `[-bound, bound]` and
    /// denominator 1 or (a quarter of the time) 2.
    pub fn rational(&mut self) -> Rational {
        let bound = self.spec.coefficient_bound.max(1);
        let mut n = 0;
        while n == 0 {
            n = self.rng.gen_range(-bound..=bound);
        }
        let d = if self.rng.gen_bool(0.25) { 2 } else { 1 };
        Rational::new(n, d).expect("nonzero denominator")
    }

    /// Integer in `[-bound, bound]`, zero allowed.
    pub fn small_int(&mut self, bound: i64) -> i64 {
        self.rng.gen_range(-bound..=bound)
    }

    fn degree(&mut self, min: usize) -> usize {
        let max = self.spec.max_degree.max(min);
        match self.spec.degree_bias {
            None => self.rng.gen_range(min..=max),
            Some(b) => {
                let weights: Vec<f64> = (min..=max).map(|d| b.powi(d as i32)).collect();
                let total: f64 = weights.iter().sum();
                let mut x = self.rng.gen::<f64>() * total;
                for (i, w) in weights.iter().enumerate() {
                    if x < *w {
                        return min + i;
                    }
                    x -= w;
                }
                max
            }
        }
    }

    /// Random ℚ-combination of products of at most `max_degree` generators.
    pub fn element<R: Ring>(&mut self, ring: &R) -> R::Elem {
        self.element_with_min_degree(ring, 0)
    }

    /// As [`Sampler::element`], but every term is a product of at least
    /// `min_degree` generators.
    pub fn element_with_min_degree<R: Ring>(&mut self, ring: &R, min_degree: usize) -> R::Elem {
        let gens: Vec<R::Elem> = ring.generators().into_iter().map(|(_, g)| g).collect();
        let mut acc = ring.zero();
        for _ in 0..self.spec.term_count {
            let deg = if gens.is_empty() { 0 } else { self.degree(min_degree) };
            let mut term = ring.one();
            for _ in 0..deg {
                let g = &gens[self.rng.gen_range(0..gens.len())];
                term = ring.mul(&term, g);
            }
            let q = self.rational();
            ring.add_assign(&mut acc, &ring.scale(&q, &term));
        }
        acc
    }

    /// Element whose terms are products of exactly one of the given degrees.
    pub fn element_with_degrees<R: Ring>(&mut self, ring: &R, degrees: &[usize]) -> R::Elem {
        let gens: Vec<R::Elem> = ring.generators().into_iter().map(|(_, g)| g).collect();
        let mut acc = ring.zero();
        for _ in 0..self.spec.term_count {
            let deg = if gens.is_empty() {
                0
            } else {
                degrees[self.rng.gen_range(0..degrees.len())]
            };
            let mut term = ring.one();
            for _ in 0..deg {
                term = ring.mul(&term, &gens[self.rng.gen_range(0..gens.len())]);
            }
            let q = self.rational();
            ring.add_assign(&mut acc, &ring.scale(&q, &term));
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ringcore::RationalField;

    #[test]
    fn identical_specs_give_identical_streams() {
        let mut a = Sampler::new(SampleSpec::new(11));
        let mut b = Sampler::new(SampleSpec::new(11));
        for _ in 0..20 {
            assert_eq!(a.element(&RationalField), b.element(&RationalField));
        }
        let mut c = Sampler::new(SampleSpec::new(12));
        let xs: Vec<_> = (0..5).map(|_| a.rational()).collect();
        let ys: Vec<_> = (0..5).map(|_| c.rational()).collect();
        assert_ne!(xs, ys);
    }

    #[test]
    fn biased_degrees_stay_in_range() {
        let mut spec = SampleSpec::new(5);
        spec.degree_bias = Some(0.3);
        let mut s = Sampler::new(spec);
        for _ in 0..100 {
            let d = s.degree(1);
            assert!((1..=3).contains(&d));
        }
    }
}
