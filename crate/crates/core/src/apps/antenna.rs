//! Aperiodic linear antenna array: peak sidelobe level minimization.
//!
//! Ten isotropic elements sit symmetrically about the array center; the
//! outermost element is fixed at 2.25 wavelengths, so only the four inner
//! element positions of one side are free. The objective is the peak of
//! `20 log10 |AF|` outside the main lobe, plus an additive penalty per
//! violated spacing constraint.

use std::f64::consts::{PI, TAU};

/// Fixed outermost element position, in wavelengths.
pub const FIXED_ELEMENT: f64 = 2.25;
/// Smallest admissible element position.
pub const MIN_POSITION: f64 = 0.125;
/// Smallest admissible spacing between any two elements (fixed one included).
pub const MIN_GAP: f64 = 0.25;
/// Additive penalty per violated constraint clause.
pub const PENALTY_PER_VIOLATION: f64 = 100.0;
/// Grid density of the `u = cos(theta)` sweep over [-1, 1].
pub const SWEEP_POINTS: usize = 4001;

/// One symmetric side of the array: four free element positions plus the
/// steering angle (radians, default broadside at 90 degrees).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AntennaLayout {
    positions: [f64; 4],
    steering_angle: f64,
}

impl AntennaLayout {
    pub fn new(positions: [f64; 4]) -> Self {
        Self {
            positions,
            steering_angle: PI / 2.0,
        }
    }

    pub fn with_steering(positions: [f64; 4], steering_angle: f64) -> Self {
        Self {
            positions,
            steering_angle,
        }
    }

    pub fn positions(&self) -> &[f64; 4] {
        &self.positions
    }

    pub fn steering_angle(&self) -> f64 {
        self.steering_angle
    }

    /// Number of violated constraint clauses: per element, membership in the
    /// open interval (0, 2.25) and clearance above 0.125; per element pair
    /// (fixed element included), spacing above 0.25.
    pub fn violations(&self) -> usize {
        let mut count = 0;
        for &x in &self.positions {
            if !(x > 0.0 && x < FIXED_ELEMENT) {
                count += 1;
            }
            if x <= MIN_POSITION {
                count += 1;
            }
        }
        for i in 0..4 {
            for j in i + 1..4 {
                if (self.positions[i] - self.positions[j]).abs() <= MIN_GAP {
                    count += 1;
                }
            }
            if (self.positions[i] - FIXED_ELEMENT).abs() <= MIN_GAP {
                count += 1;
            }
        }
        count
    }

    pub fn is_feasible(&self) -> bool {
        self.violations() == 0
    }
}

/// Array factor at angle `theta`: the sum of the four steered element cosines
/// plus the fixed outermost element's term.
pub fn array_factor(layout: &AntennaLayout, theta: f64) -> f64 {
    array_factor_u(layout, theta.cos())
}

fn array_factor_u(layout: &AntennaLayout, u: f64) -> f64 {
    let du = u - layout.steering_angle.cos();
    let mut af = (FIXED_ELEMENT * TAU * du).cos();
    for &x in &layout.positions {
        af += (TAU * x * du).cos();
    }
    af
}

/// Peak sidelobe level in dB, plus the constraint penalty.
///
/// Sweeps `u = cos(theta)` over a uniform [`SWEEP_POINTS`] grid, locates the
/// first sign change of the array factor on each side of the steering
/// direction, and takes the maximum of `20 log10 |AF|` strictly beyond those
/// first nulls. A layout whose pattern never crosses zero gets the main-lobe
/// level itself.
pub fn antenna_fitness(layout: &AntennaLayout) -> f64 {
    let us = layout.steering_angle.cos();
    let step = 2.0 / (SWEEP_POINTS - 1) as f64;
    let af: Vec<f64> = (0..SWEEP_POINTS)
        .map(|k| array_factor_u(layout, -1.0 + step * k as f64))
        .collect();

    let center = (((us + 1.0) / step).round() as usize).min(SWEEP_POINTS - 1);

    let mut right_null = None;
    for k in center..SWEEP_POINTS - 1 {
        if af[k] == 0.0 || af[k] * af[k + 1] < 0.0 {
            right_null = Some(k + 1);
            break;
        }
    }
    let mut left_null = None;
    for k in (1..=center).rev() {
        if af[k] == 0.0 || af[k] * af[k - 1] < 0.0 {
            left_null = Some(k - 1);
            break;
        }
    }

    let mut peak = f64::NEG_INFINITY;
    if let Some(start) = right_null {
        for &v in &af[start..] {
            peak = peak.max(level_db(v));
        }
    }
    if let Some(end) = left_null {
        for &v in &af[..=end] {
            peak = peak.max(level_db(v));
        }
    }
    if peak == f64::NEG_INFINITY {
        peak = level_db(array_factor_u(layout, us));
    }

    peak + PENALTY_PER_VIOLATION * layout.violations() as f64
}

fn level_db(af: f64) -> f64 {
    let a = af.abs();
    if a == 0.0 {
        f64::NEG_INFINITY
    } else {
        20.0 * a.log10()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    const MAIN_LOBE_DB: f64 = 13.979_400_086_720_377; // 20 log10(5)

    #[test]
    fn array_factor_is_five_at_steering_angle() {
        let layout = AntennaLayout::new([0.3, 0.9, 1.4, 1.9]);
        assert_abs_diff_eq!(array_factor(&layout, PI / 2.0), 5.0, epsilon = 1e-12);
    }

    #[test]
    fn array_factor_hand_value_at_uniform_layout() {
        // At theta = 0 every cosine argument is an odd multiple of pi/2.
        let layout = AntennaLayout::new([0.25, 0.75, 1.25, 1.75]);
        assert_abs_diff_eq!(array_factor(&layout, 0.0), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn array_factor_symmetric_about_broadside() {
        let layout = AntennaLayout::new([0.4, 0.8, 1.3, 1.9]);
        for theta in [0.1, 0.7, 1.2] {
            assert_abs_diff_eq!(
                array_factor(&layout, theta),
                array_factor(&layout, PI - theta),
                epsilon = 1e-10
            );
        }
    }

    #[test]
    fn feasible_layout_sits_below_main_lobe() {
        let layout = AntennaLayout::new([0.3, 0.9, 1.4, 1.9]);
        assert!(layout.is_feasible());
        let f = antenna_fitness(&layout);
        assert!(f < MAIN_LOBE_DB, "peak SLL {f} not below main lobe");
    }

    #[test]
    fn reported_solution_is_feasible() {
        let layout = AntennaLayout::new([0.713, 1.595, 0.433, 0.130]);
        assert_eq!(layout.violations(), 0);
        let mut sorted = *layout.positions();
        sorted.sort_by(f64::total_cmp);
        let min_gap = sorted.windows(2).map(|w| w[1] - w[0]).fold(f64::MAX, f64::min);
        assert!(min_gap > MIN_GAP);
        assert!(sorted[0] > MIN_POSITION);
    }

    #[test]
    fn close_spacing_draws_the_penalty() {
        // gap of 0.2 between the first two elements: one violated clause
        let layout = AntennaLayout::new([0.5, 0.7, 1.2, 1.8]);
        assert_eq!(layout.violations(), 1);
        assert!(antenna_fitness(&layout) >= 100.0);
    }

    #[test]
    fn out_of_box_elements_count_multiple_clauses() {
        let layout = AntennaLayout::new([-0.1, 0.7, 1.2, 1.8]);
        // outside (0, 2.25) and below the 0.125 floor
        assert!(layout.violations() >= 2);
    }
}
