use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::primes::first_primes;
use super::{Dataset, DatasetHeader, EigenvalueRecord};
use crate::error::{Error, Result};

/// CDF of the Sato–Tate measure (2/π) sin²θ dθ on [0, π].
pub fn sato_tate_cdf(theta: f64) -> f64 {
    let t = theta.clamp(0.0, PI);
    (2.0 * t - (2.0 * t).sin()) / (2.0 * PI)
}

/// Rejection sampling from the uniform proposal on [0, π]: accept θ with probability sin²θ.
pub fn sample_angle<R: Rng>(rng: &mut R) -> f64 {
    loop {
        let theta = rng.random_range(0.0..PI);
        if rng.random::<f64>() <= theta.sin().powi(2) {
            return theta;
        }
    }
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// a_p = 2cos θ_p on the first `n` primes, θ_p Sato–Tate distributed.
/// Each prime draws from its own stream seeded by (seed, p), so the output does
/// not depend on scheduling.
pub fn sato_tate_sample(n: usize, seed: u64) -> Result<Dataset> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let primes = first_primes(n);
    let records: Vec<EigenvalueRecord> = primes
        .par_iter()
        .map(|&p| {
            let mut rng = ChaCha8Rng::seed_from_u64(splitmix64(seed ^ splitmix64(p)));
            EigenvalueRecord::real(p, 2.0 * sample_angle(&mut rng).cos())
        })
        .collect();
    let header = DatasetHeader {
        source: format!("sato-tate(seed {seed})"),
        self_dual: true,
        x: *primes.last().expect("n ≥ 1"),
        omega_trivial: true,
        skipped: Vec::new(),
    };
    Dataset::new(header, records)
}
