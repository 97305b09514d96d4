//! Composite benchmark objectives TF14-TF19.
//!
//! Each composite mixes ten component functions. A component is weighted by a
//! Gaussian of the distance to its own optimum, dominated-weight suppression
//! keeps far components from leaking into a component's basin, the weights are
//! normalized to sum one, and each component is evaluated on `(x - o_i) /
//! lambda_i` after being rescaled to a common height. All biases are zero, so
//! the global minimum value of every composite is 0 (at the first component's
//! optimum).
//!
//! The component optima are drawn once from a fixed internal seed, which makes
//! the composites reproducible within this artifact.

use crate::problems::functions;
use crate::rng::RngHandle;

/// Seed from which the ten component optima of composite `k` are drawn
/// (stream `COMPOSITE_OPTIMA_SEED + k`).
pub const COMPOSITE_OPTIMA_SEED: u64 = 0x5eed_c0de;

/// Common height every component is rescaled to at the normalization probe.
pub const COMPOSITE_HEIGHT: f64 = 2000.0;

/// Per-coordinate magnitude of the normalization probe point.
pub const NORMALIZATION_PROBE: f64 = 5.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Component {
    Sphere,
    Griewank,
    Ackley,
    Rastrigin,
    Weierstrass,
}

impl Component {
    fn eval(self, z: &[f64]) -> f64 {
        match self {
            Component::Sphere => functions::sphere(z),
            Component::Griewank => functions::griewank(z),
            Component::Ackley => functions::ackley(z),
            Component::Rastrigin => functions::rastrigin(z),
            Component::Weierstrass => functions::weierstrass(z),
        }
    }
}

/// Full description of one composite objective.
#[derive(Debug, Clone, PartialEq)]
pub struct CompositeSpec {
    components: Vec<Component>,
    sigma: Vec<f64>,
    lambda: Vec<f64>,
    optima: Vec<Vec<f64>>,
    bias: Vec<f64>,
    normalizers: Vec<f64>,
}

impl CompositeSpec {
    /// Builds composite `cf` (1..=6, i.e. TF14..TF19) in `dimension` variables.
    pub fn build(cf: usize, dimension: usize) -> Self {
        assert!((1..=6).contains(&cf), "composite index out of range: {cf}");
        let (components, sigma, lambda) = composite_layout(cf);

        let mut rng = RngHandle::new(COMPOSITE_OPTIMA_SEED + cf as u64);
        let optima: Vec<Vec<f64>> = (0..components.len())
            .map(|_| {
                (0..dimension)
                    .map(|_| {
                        rng.uniform(-NORMALIZATION_PROBE, NORMALIZATION_PROBE)
                            .expect("fixed bounds")
                    })
                    .collect()
            })
            .collect();

        let normalizers = components
            .iter()
            .zip(&lambda)
            .map(|(c, l)| {
                let probe: Vec<f64> = vec![NORMALIZATION_PROBE / l; dimension];
                let v = c.eval(&probe).abs();
                if v > 1e-12 {
                    v
                } else {
                    1.0
                }
            })
            .collect();

        let bias = vec![0.0; components.len()];
        Self {
            components,
            sigma,
            lambda,
            optima,
            bias,
            normalizers,
        }
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn sigma(&self) -> &[f64] {
        &self.sigma
    }

    pub fn lambda(&self) -> &[f64] {
        &self.lambda
    }

    pub fn optima(&self) -> &[Vec<f64>] {
        &self.optima
    }

    pub fn bias(&self) -> &[f64] {
        &self.bias
    }

    /// Normalized mixing weights at `x`; they always sum to one.
    pub fn weights(&self, x: &[f64]) -> Vec<f64> {
        let n = x.len() as f64;
        let mut w: Vec<f64> = self
            .optima
            .iter()
            .zip(&self.sigma)
            .map(|(o, s)| {
                let d2: f64 = x.iter().zip(o).map(|(a, b)| (a - b) * (a - b)).sum();
                (-d2 / (2.0 * n * s * s)).exp()
            })
            .collect();

        let wmax = w.iter().cloned().fold(0.0, f64::max);
        if wmax == 0.0 {
            // Every Gaussian underflowed; fall back to the nearest component.
            let nearest = self
                .optima
                .iter()
                .enumerate()
                .min_by(|(_, a), (_, b)| {
                    let da: f64 = x.iter().zip(*a).map(|(p, q)| (p - q) * (p - q)).sum();
                    let db: f64 = x.iter().zip(*b).map(|(p, q)| (p - q) * (p - q)).sum();
                    da.total_cmp(&db)
                })
                .map(|(i, _)| i)
                .unwrap();
            w.iter_mut().for_each(|v| *v = 0.0);
            w[nearest] = 1.0;
            return w;
        }

        let suppress = 1.0 - wmax.powi(10);
        for v in w.iter_mut() {
            if *v != wmax {
                *v *= suppress;
            }
        }
        let total: f64 = w.iter().sum();
        w.iter_mut().for_each(|v| *v /= total);
        w
    }

    pub fn evaluate(&self, x: &[f64]) -> f64 {
        let w = self.weights(x);
        let mut z = vec![0.0; x.len()];
        let mut total = 0.0;
        for (i, comp) in self.components.iter().enumerate() {
            if w[i] == 0.0 {
                continue;
            }
            for (d, zd) in z.iter_mut().enumerate() {
                *zd = (x[d] - self.optima[i][d]) / self.lambda[i];
            }
            let scaled = COMPOSITE_HEIGHT * comp.eval(&z) / self.normalizers[i];
            total += w[i] * (scaled + self.bias[i]);
        }
        total
    }
}

fn composite_layout(cf: usize) -> (Vec<Component>, Vec<f64>, Vec<f64>) {
    use Component::*;
    match cf {
        1 => (vec![Sphere; 10], vec![1.0; 10], vec![5.0 / 100.0; 10]),
        2 => (vec![Griewank; 10], vec![1.0; 10], vec![5.0 / 100.0; 10]),
        3 => (vec![Griewank; 10], vec![1.0; 10], vec![1.0; 10]),
        4 => (
            vec![
                Ackley,
                Ackley,
                Rastrigin,
                Rastrigin,
                Weierstrass,
                Weierstrass,
                Griewank,
                Griewank,
                Sphere,
                Sphere,
            ],
            vec![1.0; 10],
            vec![
                5.0 / 32.0,
                5.0 / 32.0,
                1.0,
                1.0,
                5.0 / 0.5,
                5.0 / 0.5,
                5.0 / 100.0,
                5.0 / 100.0,
                5.0 / 100.0,
                5.0 / 100.0,
            ],
        ),
        5 => (
            vec![
                Rastrigin,
                Rastrigin,
                Weierstrass,
                Weierstrass,
                Griewank,
                Griewank,
                Ackley,
                Ackley,
                Sphere,
                Sphere,
            ],
            vec![1.0; 10],
            vec![
                1.0 / 5.0,
                1.0 / 5.0,
                5.0 / 0.5,
                5.0 / 0.5,
                5.0 / 100.0,
                5.0 / 100.0,
                5.0 / 32.0,
                5.0 / 32.0,
                5.0 / 100.0,
                5.0 / 100.0,
            ],
        ),
        6 => (
            vec![
                Rastrigin,
                Rastrigin,
                Weierstrass,
                Weierstrass,
                Griewank,
                Griewank,
                Ackley,
                Ackley,
                Sphere,
                Sphere,
            ],
            vec![0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0],
            vec![
                0.1 / 5.0,
                0.2 / 5.0,
                0.3 * 5.0 / 0.5,
                0.4 * 5.0 / 0.5,
                0.5 * 5.0 / 100.0,
                0.6 * 5.0 / 100.0,
                0.7 * 5.0 / 32.0,
                0.8 * 5.0 / 32.0,
                0.9 * 5.0 / 100.0,
                1.0 * 5.0 / 100.0,
            ],
        ),
        _ => unreachable!(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_sum_to_one_everywhere() {
        let spec = CompositeSpec::build(1, 10);
        let mut rng = RngHandle::new(99);
        for _ in 0..50 {
            let x: Vec<f64> = (0..10).map(|_| rng.uniform(-5.0, 5.0).unwrap()).collect();
            let sum: f64 = spec.weights(&x).iter().sum();
            assert!((sum - 1.0).abs() < 1e-12, "weights sum to {sum}");
        }
    }

    #[test]
    fn value_vanishes_at_each_component_optimum() {
        for cf in 1..=6 {
            let spec = CompositeSpec::build(cf, 10);
            for o in spec.optima() {
                let v = spec.evaluate(o);
                assert!(v.abs() < 1e-6, "composite {cf} at its optimum gives {v}");
            }
        }
    }

    #[test]
    fn cf6_sigma_ladder_matches_definition() {
        let spec = CompositeSpec::build(6, 10);
        let expect = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0];
        assert_eq!(spec.sigma(), &expect);
    }

    #[test]
    fn optima_are_reproducible() {
        let a = CompositeSpec::build(3, 10);
        let b = CompositeSpec::build(3, 10);
        assert_eq!(a, b);
    }

    #[test]
    fn value_is_positive_away_from_optima() {
        let spec = CompositeSpec::build(1, 10);
        let mut rng = RngHandle::new(5);
        for _ in 0..20 {
            let x: Vec<f64> = (0..10).map(|_| rng.uniform(-5.0, 5.0).unwrap()).collect();
            let near_optimum = spec
                .optima()
                .iter()
                .any(|o| x.iter().zip(o).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max) < 1e-6);
            if !near_optimum {
                assert!(spec.evaluate(&x) > 0.0);
            }
        }
    }

    #[test]
    fn lambda_distinguishes_cf2_from_cf3() {
        let cf2 = CompositeSpec::build(2, 10);
        let cf3 = CompositeSpec::build(3, 10);
        assert_eq!(cf2.lambda()[0], 0.05);
        assert_eq!(cf3.lambda()[0], 1.0);
    }
}
