//! Random instances: uniform columns over `[m] × [n]`, put into standard form.

use rand::Rng;

use crate::duality::perf;
use crate::grid::Ptableau;
use crate::word::{standardize_in, Biword};

/// Bounds for random instances.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SampleBounds {
    pub max_m: usize,
    pub max_n: usize,
    pub max_k: usize,
}

impl Default for SampleBounds {
    fn default() -> Self {
        SampleBounds { max_m: 5, max_n: 5, max_k: 10 }
    }
}

/// One random ptableau together with the biword it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub biword: Biword,
    pub ptableau: Ptableau,
}

impl Instance {
    pub fn from_biword(biword: Biword) -> Self {
        Instance { ptableau: perf(&biword), biword }
    }

    pub fn m(&self) -> usize {
        self.biword.m()
    }

    pub fn n(&self) -> usize {
        self.biword.n()
    }
}

pub fn random_biword<R: Rng + ?Sized>(rng: &mut R, m: usize, n: usize, k: usize) -> Biword {
    let pairs: Vec<(usize, usize)> = (0..k).map(|_| (rng.gen_range(1..=m), rng.gen_range(1..=n))).collect();
    standardize_in(&pairs, m, n).expect("sampled letters respect the bounds")
}

pub fn random_instance<R: Rng + ?Sized>(rng: &mut R, bounds: SampleBounds) -> Instance {
    let m = rng.gen_range(1..=bounds.max_m);
    let n = rng.gen_range(1..=bounds.max_n);
    let k = rng.gen_range(0..=bounds.max_k);
    Instance::from_biword(random_biword(rng, m, n, k))
}
