//! Frequency-modulated sound wave parameter matching.
//!
//! Six parameters (three amplitude/frequency pairs) shape a synthesized wave
//! that must reproduce a fixed target wave sampled at 101 integer time steps.
//! The fitness is the sum of squared residuals, zero exactly at the target
//! parameters.
//!
//! Two waveform readings are supported: a plain sum of three sines (the
//! default) and the nested form in which each sine modulates the phase of the
//! previous one. Both use the same target parameters and share the zero
//! optimum.

use std::f64::consts::TAU;

/// Angular sample step.
pub const THETA: f64 = TAU / 100.0;

/// Target parameters (a1, w1, a2, w2, a3, w3).
pub const TARGET: [f64; 6] = [1.0, 5.0, 1.5, 4.8, 2.0, 4.9];

/// Inclusive parameter box for every coordinate.
pub const PARAM_MIN: f64 = -6.4;
pub const PARAM_MAX: f64 = 6.35;

/// Number of integer sample times (t = 0..=100).
pub const SAMPLES: usize = 101;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FmForm {
    /// `a1 sin(w1 t theta) + a2 sin(w2 t theta) + a3 sin(w3 t theta)`
    Additive,
    /// `a1 sin(w1 t theta + a2 sin(w2 t theta + a3 sin(w3 t theta)))`
    Nested,
}

/// Waveform value at sample index `t` for parameters `p`.
pub fn waveform(p: &[f64], t: usize, form: FmForm) -> f64 {
    let arg = t as f64 * THETA;
    match form {
        FmForm::Additive => {
            p[0] * (p[1] * arg).sin() + p[2] * (p[3] * arg).sin() + p[4] * (p[5] * arg).sin()
        }
        FmForm::Nested => {
            p[0] * (p[1] * arg + p[2] * (p[3] * arg + p[4] * (p[5] * arg).sin()).sin()).sin()
        }
    }
}

/// Sum of squared residuals against the target wave over the sample grid.
pub fn fm_fitness(p: &[f64], form: FmForm) -> f64 {
    debug_assert_eq!(p.len(), 6);
    (0..SAMPLES)
        .map(|t| {
            let d = waveform(p, t, form) - waveform(&TARGET, t, form);
            d * d
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn target_parameters_give_zero_residual() {
        assert_eq!(fm_fitness(&TARGET, FmForm::Additive), 0.0);
        assert_eq!(fm_fitness(&TARGET, FmForm::Nested), 0.0);
    }

    #[test]
    fn zero_vector_matches_direct_summation() {
        // Independent oracle: sum the squared target wave directly.
        let direct: f64 = (0..SAMPLES)
            .map(|t| {
                let arg = t as f64 * THETA;
                let y0 = 1.0 * (5.0 * arg).sin() + 1.5 * (4.8 * arg).sin() + 2.0 * (4.9 * arg).sin();
                y0 * y0
            })
            .sum();
        assert_abs_diff_eq!(fm_fitness(&[0.0; 6], FmForm::Additive), direct, epsilon = 1e-9);
        assert_abs_diff_eq!(direct, 959.812_201_804_253_8, epsilon = 1e-9);
    }

    #[test]
    fn sign_flip_is_strictly_positive() {
        let p = [-1.0, 5.0, 1.5, 4.8, 2.0, 4.9];
        assert!(fm_fitness(&p, FmForm::Additive) > 0.0);
        assert!(fm_fitness(&p, FmForm::Nested) > 0.0);
    }

    #[test]
    fn fitness_is_nonnegative() {
        let mut rng = crate::rng::RngHandle::new(17);
        for _ in 0..100 {
            let p: Vec<f64> = (0..6).map(|_| rng.uniform(PARAM_MIN, PARAM_MAX).unwrap()).collect();
            assert!(fm_fitness(&p, FmForm::Additive) >= 0.0);
            assert!(fm_fitness(&p, FmForm::Nested) >= 0.0);
        }
    }
}
