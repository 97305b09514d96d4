//! Seeded random number generation.
//!
//! Every stochastic choice of a replication (population initialization, the
//! directional random number `r`, evaluation noise, PSO randoms) flows through
//! one [`RngHandle`], so a single seed fixes the whole run. The backing
//! generator is ChaCha8, which produces identical streams for identical seeds
//! on every platform.

use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use statrs::function::gamma::gamma;

use crate::error::{Error, Result};

/// Stability exponent of the Levy step generator (Mantegna method).
pub const LEVY_BETA: f64 = 1.5;

/// Divisor applied to a raw Levy step before clamping into [-1, 1].
///
/// The directional random number `r` must land in [-1, 1] while keeping the
/// heavy-tailed character of the Levy walk, so the raw step `L` is mapped to
/// `clamp(L / LEVY_SCALE, -1, 1)`. Larger values concentrate draws near zero,
/// smaller values saturate the bounds more often.
pub const LEVY_SCALE: f64 = 10.0;

/// Mantegna scale factor for the numerator normal draw: with `u ~ N(0, sigma^2)`
/// and `v ~ N(0, 1)`, `u / |v|^(1/beta)` follows a Levy-stable law of index `beta`.
pub fn mantegna_sigma(beta: f64) -> f64 {
    let num = gamma(1.0 + beta) * (std::f64::consts::PI * beta / 2.0).sin();
    let den = gamma((1.0 + beta) / 2.0) * beta * 2f64.powf((beta - 1.0) / 2.0);
    (num / den).powf(1.0 / beta)
}

fn default_sigma() -> f64 {
    static SIGMA: OnceLock<f64> = OnceLock::new();
    *SIGMA.get_or_init(|| mantegna_sigma(LEVY_BETA))
}

/// A seeded random source owned by exactly one replication run.
#[derive(Debug, Clone)]
pub struct RngHandle {
    seed: u64,
    inner: ChaCha8Rng,
}

impl RngHandle {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            inner: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Uniform draw in `[0, 1)`.
    pub fn uniform01(&mut self) -> f64 {
        self.inner.random::<f64>()
    }

    /// Uniform draw in `[lo, hi)`; `lo == hi` yields `lo`.
    pub fn uniform(&mut self, lo: f64, hi: f64) -> Result<f64> {
        if lo > hi {
            return Err(Error::invalid(format!(
                "uniform bounds out of order: lo={lo} > hi={hi}"
            )));
        }
        if lo == hi {
            return Ok(lo);
        }
        let v = lo + self.uniform01() * (hi - lo);
        // Rounding at the upper edge would violate the half-open contract.
        Ok(if v < hi { v } else { lo })
    }

    fn standard_normal(&mut self) -> f64 {
        StandardNormal.sample(&mut self.inner)
    }

    /// One raw Mantegna Levy step of index [`LEVY_BETA`].
    pub fn levy_step(&mut self) -> f64 {
        let u = self.standard_normal() * default_sigma();
        let v: f64 = self.standard_normal();
        u / v.abs().powf(1.0 / LEVY_BETA)
    }

    /// The directional random number `r` in [-1, 1]: a Levy step squashed by
    /// [`LEVY_SCALE`]. Sign-symmetric, heavier-tailed than uniform.
    pub fn levy_r(&mut self) -> f64 {
        (self.levy_step() / LEVY_SCALE).clamp(-1.0, 1.0)
    }
}
