//! Analytic CEC-2019 base objectives CEC04-CEC10, evaluated in their standard
//! unshifted and unrotated forms on [-100, 100]^n, each offset by +1 so the
//! global minimum value is 1.

use crate::problems::functions;

/// High-precision location of the Schwefel per-dimension maximizer.
pub const SCHWEFEL_OFFSET: f64 = 420.9687462275036;

pub fn cec04_rastrigin(x: &[f64]) -> f64 {
    functions::rastrigin(x) + 1.0
}

pub fn cec05_griewank(x: &[f64]) -> f64 {
    functions::griewank(x) + 1.0
}

pub fn cec06_weierstrass(x: &[f64]) -> f64 {
    functions::weierstrass(x) + 1.0
}

fn schwefel_g(w: f64, n: f64) -> f64 {
    if w.abs() <= 500.0 {
        w * w.abs().sqrt().sin()
    } else if w > 500.0 {
        let t = 500.0 - w.rem_euclid(500.0);
        t * t.abs().sqrt().sin() - (w - 500.0).powi(2) / (10_000.0 * n)
    } else {
        let t = w.abs().rem_euclid(500.0) - 500.0;
        t * t.abs().sqrt().sin() - (w + 500.0).powi(2) / (10_000.0 * n)
    }
}

/// Modified Schwefel: each coordinate is offset by [`SCHWEFEL_OFFSET`] so the
/// minimum sits at the origin. The subtracted anchor is `g` at the offset
/// itself (~418.98288727), which makes the minimum value exactly 1.
pub fn cec07_modified_schwefel(x: &[f64]) -> f64 {
    let n = x.len() as f64;
    let anchor = schwefel_g(SCHWEFEL_OFFSET, n);
    x.iter()
        .map(|&v| anchor - schwefel_g(v + SCHWEFEL_OFFSET, n))
        .sum::<f64>()
        + 1.0
}

fn schaffer_f6(a: f64, b: f64) -> f64 {
    let r2 = a * a + b * b;
    0.5 + (r2.sqrt().sin().powi(2) - 0.5) / (1.0 + 0.001 * r2).powi(2)
}

/// Expanded Schaffer F6 over consecutive coordinate pairs, wrapping around.
pub fn cec08_expanded_schaffer_f6(x: &[f64]) -> f64 {
    let n = x.len();
    let mut total = 0.0;
    for i in 0..n {
        total += schaffer_f6(x[i], x[(i + 1) % n]);
    }
    total + 1.0
}

/// Happy Cat; minimum 0 at x = (-1, ..., -1) before the +1 offset.
pub fn cec09_happy_cat(x: &[f64]) -> f64 {
    let n = x.len() as f64;
    let r2: f64 = x.iter().map(|v| v * v).sum();
    let s: f64 = x.iter().sum();
    (r2 - n).abs().powf(0.25) + (0.5 * r2 + s) / n + 0.5 + 1.0
}

pub fn cec10_ackley(x: &[f64]) -> f64 {
    functions::ackley(x) + 1.0
}
