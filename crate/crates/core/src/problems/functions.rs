//! Classical benchmark objectives TF1-TF13 and the component primitives the
//! composite and CEC sets are built from.
//!
//! The classical evaluators take the raw position together with the optimum
//! shift and work on `z = x - shift`; the primitives take an already-shifted
//! slice. All are total on their boxes: no NaN or infinity for in-bounds input.

use std::f64::consts::{E, PI, TAU};

#[inline]
fn shifted<'a>(x: &'a [f64], shift: &'a [f64]) -> impl Iterator<Item = f64> + 'a {
    x.iter().zip(shift).map(|(a, s)| a - s)
}

/// Sphere on an unshifted slice.
pub fn sphere(z: &[f64]) -> f64 {
    z.iter().map(|v| v * v).sum()
}

/// Rastrigin on an unshifted slice.
pub fn rastrigin(z: &[f64]) -> f64 {
    z.iter().map(|v| v * v - 10.0 * (TAU * v).cos() + 10.0).sum()
}

/// Ackley on an unshifted slice.
pub fn ackley(z: &[f64]) -> f64 {
    let n = z.len() as f64;
    let rms = (sphere(z) / n).sqrt();
    let mean_cos = z.iter().map(|v| (TAU * v).cos()).sum::<f64>() / n;
    -20.0 * (-0.2 * rms).exp() - mean_cos.exp() + 20.0 + E
}

/// Griewank on an unshifted slice.
pub fn griewank(z: &[f64]) -> f64 {
    let sum = sphere(z) / 4000.0;
    let prod: f64 = z
        .iter()
        .enumerate()
        .map(|(i, v)| (v / ((i + 1) as f64).sqrt()).cos())
        .product();
    sum - prod + 1.0
}

const WEIERSTRASS_A: f64 = 0.5;
const WEIERSTRASS_B: f64 = 3.0;
const WEIERSTRASS_KMAX: u32 = 20;

fn weierstrass_term(v: f64) -> f64 {
    (0..=WEIERSTRASS_KMAX)
        .map(|k| {
            WEIERSTRASS_A.powi(k as i32) * (TAU * WEIERSTRASS_B.powi(k as i32) * (v + 0.5)).cos()
        })
        .sum()
}

/// Weierstrass on an unshifted slice (a = 0.5, b = 3, kmax = 20).
pub fn weierstrass(z: &[f64]) -> f64 {
    let offset = weierstrass_term(0.0);
    z.iter().map(|&v| weierstrass_term(v)).sum::<f64>() - z.len() as f64 * offset
}

/// TF1: shifted sphere.
pub fn tf1(x: &[f64], shift: &[f64]) -> f64 {
    shifted(x, shift).map(|z| z * z).sum()
}

/// TF2: shifted Schwefel 2.22, `sum |z| + prod |z|`.
pub fn tf2(x: &[f64], shift: &[f64]) -> f64 {
    let mut sum = 0.0;
    let mut prod = 1.0;
    for z in shifted(x, shift) {
        sum += z.abs();
        prod *= z.abs();
    }
    sum + prod
}

/// TF3: shifted Schwefel 1.2, sum of squared prefix sums.
pub fn tf3(x: &[f64], shift: &[f64]) -> f64 {
    let mut prefix = 0.0;
    let mut total = 0.0;
    for z in shifted(x, shift) {
        prefix += z;
        total += prefix * prefix;
    }
    total
}

/// TF4: shifted Schwefel 2.21, `max_i |z_i|`.
pub fn tf4(x: &[f64], shift: &[f64]) -> f64 {
    shifted(x, shift).map(f64::abs).fold(0.0, f64::max)
}

/// TF5: shifted Rosenbrock (optimum at z = 1).
pub fn tf5(x: &[f64], shift: &[f64]) -> f64 {
    let z: Vec<f64> = shifted(x, shift).collect();
    z.windows(2)
        .map(|w| 100.0 * (w[1] - w[0] * w[0]).powi(2) + (w[0] - 1.0).powi(2))
        .sum()
}

/// TF6: shifted step function, `sum floor(z + 0.5)^2`.
pub fn tf6(x: &[f64], shift: &[f64]) -> f64 {
    shifted(x, shift).map(|z| (z + 0.5).floor().powi(2)).sum()
}

/// TF7: shifted quartic, `sum i * z_i^4`; the caller adds the uniform noise.
pub fn tf7_deterministic(x: &[f64], shift: &[f64]) -> f64 {
    shifted(x, shift)
        .enumerate()
        .map(|(i, z)| (i + 1) as f64 * z.powi(4))
        .sum()
}

/// TF8: shifted Schwefel 2.26, `sum -z_i sin(sqrt|z_i|)`.
///
/// Per-dimension minimum is -418.9828872724337 at z = 420.968746359982.
pub fn tf8(x: &[f64], shift: &[f64]) -> f64 {
    shifted(x, shift).map(|z| -z * z.abs().sqrt().sin()).sum()
}

/// TF9: shifted Rastrigin.
pub fn tf9(x: &[f64], shift: &[f64]) -> f64 {
    shifted(x, shift).map(|z| z * z - 10.0 * (TAU * z).cos() + 10.0).sum()
}

/// TF10: shifted Ackley.
pub fn tf10(x: &[f64], shift: &[f64]) -> f64 {
    let z: Vec<f64> = shifted(x, shift).collect();
    ackley(&z)
}

/// TF11: shifted Griewank.
pub fn tf11(x: &[f64], shift: &[f64]) -> f64 {
    let z: Vec<f64> = shifted(x, shift).collect();
    griewank(&z)
}

/// Boundary penalty used by TF12 and TF13.
fn penalty_u(v: f64, a: f64, k: f64, m: i32) -> f64 {
    if v > a {
        k * (v - a).powi(m)
    } else if v < -a {
        k * (-v - a).powi(m)
    } else {
        0.0
    }
}

/// TF12: shifted penalized function (optimum at z = -1, where y = 1).
pub fn tf12(x: &[f64], shift: &[f64]) -> f64 {
    let z: Vec<f64> = shifted(x, shift).collect();
    let n = z.len();
    let y = |i: usize| 1.0 + (z[i] + 1.0) / 4.0;
    let mut core = 10.0 * (PI * y(0)).sin().powi(2);
    for i in 0..n - 1 {
        core += (y(i) - 1.0).powi(2) * (1.0 + 10.0 * (PI * y(i + 1)).sin().powi(2));
    }
    core += (y(n - 1) - 1.0).powi(2);
    let penalty: f64 = z.iter().map(|&v| penalty_u(v, 10.0, 100.0, 4)).sum();
    PI / n as f64 * core + penalty
}

/// TF13: shifted penalized function (optimum at z = 1).
pub fn tf13(x: &[f64], shift: &[f64]) -> f64 {
    let z: Vec<f64> = shifted(x, shift).collect();
    let n = z.len();
    let mut core = (3.0 * PI * z[0]).sin().powi(2);
    for i in 0..n - 1 {
        core += (z[i] - 1.0).powi(2) * (1.0 + (3.0 * PI * z[i + 1]).sin().powi(2));
    }
    core += (z[n - 1] - 1.0).powi(2) * (1.0 + (TAU * z[n - 1]).sin().powi(2));
    let penalty: f64 = z.iter().map(|&v| penalty_u(v, 5.0, 100.0, 4)).sum();
    0.1 * core + penalty
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    const SHIFT30: [f64; 10] = [-30.0; 10];

    #[test]
    fn tf1_zero_at_shift_and_hand_value_at_origin() {
        assert_eq!(tf1(&SHIFT30, &SHIFT30), 0.0);
        // 10 * 30^2 = 9000 at the origin with shift -30
        assert_abs_diff_eq!(tf1(&[0.0; 10], &SHIFT30), 9000.0, epsilon = 1e-12);
    }

    #[test]
    fn tf2_zero_at_shift_and_nonnegative() {
        let shift = [-3.0; 10];
        assert_eq!(tf2(&shift, &shift), 0.0);
        assert!(tf2(&[-10.0; 10], &shift) > 0.0);
        assert!(tf2(&[10.0, -10.0, 0.0, 1.0, 2.0, -3.0, 4.0, -5.0, 6.0, -7.0], &shift) > 0.0);
    }

    #[test]
    fn tf3_prefix_sums() {
        // z = (1, 2, 3): prefix sums 1, 3, 6 -> 1 + 9 + 36 = 46
        assert_abs_diff_eq!(tf3(&[1.0, 2.0, 3.0], &[0.0; 3]), 46.0, epsilon = 1e-12);
    }

    #[test]
    fn tf4_max_abs() {
        assert_abs_diff_eq!(tf4(&[1.0, -7.0, 3.0], &[0.0; 3]), 7.0, epsilon = 1e-15);
    }

    #[test]
    fn tf5_rosenbrock_optimum_at_shift_plus_one() {
        let shift = [-15.0; 10];
        let opt: Vec<f64> = shift.iter().map(|s| s + 1.0).collect();
        assert_abs_diff_eq!(tf5(&opt, &shift), 0.0, epsilon = 1e-12);
        assert!(tf5(&[0.0; 10], &shift) > 0.0);
    }

    #[test]
    fn tf6_step_basin() {
        let shift = [-75.0; 10];
        assert_eq!(tf6(&shift, &shift), 0.0);
        // any z with floor(z + 0.5) = 0 stays in the flat basin
        let x: Vec<f64> = shift.iter().map(|s| s + 0.3).collect();
        assert_eq!(tf6(&x, &shift), 0.0);
        let x: Vec<f64> = shift.iter().map(|s| s + 1.2).collect();
        assert_eq!(tf6(&x, &shift), 10.0);
    }

    #[test]
    fn tf7_deterministic_part() {
        // z = (1, 2): 1*1 + 2*16 = 33
        assert_abs_diff_eq!(tf7_deterministic(&[1.0, 2.0], &[0.0; 2]), 33.0, epsilon = 1e-12);
    }

    #[test]
    fn tf8_schwefel_optimum() {
        let shift = [-300.0; 10];
        let opt: Vec<f64> = shift.iter().map(|s| s + 420.968_746_359_982).collect();
        assert_abs_diff_eq!(tf8(&opt, &shift), -4_189.828_872_724_337, epsilon = 1e-9);
    }

    #[test]
    fn tf9_rastrigin_zero_at_shift() {
        let shift = [-2.0; 10];
        assert_abs_diff_eq!(tf9(&shift, &shift), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn tf10_ackley_identity_at_origin() {
        assert_abs_diff_eq!(tf10(&[0.0; 10], &[0.0; 10]), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn tf11_griewank_zero_at_shift() {
        let shift = [-400.0; 10];
        assert_abs_diff_eq!(tf11(&shift, &shift), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn tf12_optimum_where_y_is_one() {
        let shift: Vec<f64> = std::iter::once(-30.0).chain([30.0; 9]).collect();
        let opt: Vec<f64> = shift.iter().map(|s| s - 1.0).collect();
        assert_abs_diff_eq!(tf12(&opt, &shift), 0.0, epsilon = 1e-12);
        assert!(tf12(&[45.0; 10], &shift) > 1.0);
    }

    #[test]
    fn tf13_optimum_at_shift_plus_one() {
        let shift = [-10.0; 10];
        let opt: Vec<f64> = shift.iter().map(|s| s + 1.0).collect();
        assert_abs_diff_eq!(tf13(&opt, &shift), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn penalty_u_branches() {
        assert_eq!(penalty_u(11.0, 10.0, 100.0, 4), 100.0);
        assert_eq!(penalty_u(-11.0, 10.0, 100.0, 4), 100.0);
        assert_eq!(penalty_u(9.9, 10.0, 100.0, 4), 0.0);
    }

    #[test]
    fn component_primitives_vanish_at_origin() {
        let z = [0.0; 10];
        assert_eq!(sphere(&z), 0.0);
        assert_abs_diff_eq!(rastrigin(&z), 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(ackley(&z), 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(griewank(&z), 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(weierstrass(&z), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn weierstrass_is_nonnegative() {
        for v in [-0.4, -0.1, 0.2, 0.37, 1.0, 2.3] {
            assert!(weierstrass(&[v; 5]) >= 0.0, "negative at {v}");
        }
    }
}
