//! Canonical global-best particle swarm, the live head-to-head baseline.
//!
//! Velocity update `v <- w v + c1 r1 (pbest - x) + c2 r2 (gbest - x)` with a
//! linearly decreasing inertia weight, per-dimension velocity clamping to a
//! fraction of the coordinate range, and box clamping of positions. Particles
//! start with zero velocity.

use crate::error::{Error, Result};
use crate::problems::Problem;
use crate::record::{RunOutput, RunRecord};
use crate::rng::RngHandle;

#[derive(Debug, Clone)]
pub struct PsoParams {
    pub population_size: usize,
    pub max_iterations: usize,
    /// Inertia weight at the first iteration.
    pub inertia_start: f64,
    /// Inertia weight at the last iteration.
    pub inertia_end: f64,
    /// Cognitive coefficient c1.
    pub cognitive: f64,
    /// Social coefficient c2.
    pub social: f64,
    /// Velocity clamp as a fraction of each coordinate's range.
    pub velocity_clamp: f64,
}

impl Default for PsoParams {
    fn default() -> Self {
        Self {
            population_size: 30,
            max_iterations: 500,
            inertia_start: 0.9,
            inertia_end: 0.4,
            cognitive: 2.0,
            social: 2.0,
            velocity_clamp: 0.1,
        }
    }
}

impl PsoParams {
    pub fn validate(&self) -> Result<()> {
        if self.population_size == 0 {
            return Err(Error::invalid("population size must be at least 1"));
        }
        if self.max_iterations == 0 {
            return Err(Error::invalid("iteration count must be at least 1"));
        }
        if self.cognitive <= 0.0 || self.social <= 0.0 {
            return Err(Error::invalid("c1 and c2 must be positive"));
        }
        if !(0.0..=self.inertia_start).contains(&self.inertia_end) {
            return Err(Error::invalid(
                "inertia schedule must satisfy 0 <= w_end <= w_start",
            ));
        }
        if self.velocity_clamp <= 0.0 {
            return Err(Error::invalid("velocity clamp must be positive"));
        }
        Ok(())
    }
}

struct Particle {
    position: Vec<f64>,
    velocity: Vec<f64>,
    fitness: f64,
    best_position: Vec<f64>,
    best_fitness: f64,
}

/// Runs gbest PSO to completion; same record schema as the FDO run.
pub fn run(
    problem: &Problem,
    params: &PsoParams,
    seed: u64,
    capture_positions: bool,
) -> Result<RunOutput> {
    params.validate()?;
    if capture_positions && problem.dimension() != 2 {
        return Err(Error::invalid(
            "position capture requires a 2-dimensional problem",
        ));
    }

    let direction = problem.direction();
    let n = problem.dimension();
    let mut rng = RngHandle::new(seed);
    let vmax: Vec<f64> = (0..n)
        .map(|d| params.velocity_clamp * (problem.upper()[d] - problem.lower()[d]))
        .collect();

    let mut particles = Vec::with_capacity(params.population_size);
    for _ in 0..params.population_size {
        let position: Vec<f64> = (0..n)
            .map(|d| rng.uniform(problem.lower()[d], problem.upper()[d]))
            .collect::<Result<_>>()?;
        let fitness = problem.evaluate(&position, &mut rng)?;
        particles.push(Particle {
            best_position: position.clone(),
            best_fitness: fitness,
            velocity: vec![0.0; n],
            position,
            fitness,
        });
    }

    let mut gbest_index = 0;
    for (i, p) in particles.iter().enumerate() {
        if direction.better(p.best_fitness, particles[gbest_index].best_fitness) {
            gbest_index = i;
        }
    }
    let mut gbest_position = particles[gbest_index].best_position.clone();
    let mut gbest_fitness = particles[gbest_index].best_fitness;

    let mut record = RunRecord::new(params.max_iterations, capture_positions);
    for t in 0..params.max_iterations {
        let w = if params.max_iterations > 1 {
            params.inertia_start
                - (params.inertia_start - params.inertia_end) * t as f64
                    / (params.max_iterations - 1) as f64
        } else {
            params.inertia_start
        };

        for particle in particles.iter_mut() {
            for d in 0..n {
                let r1 = rng.uniform01();
                let r2 = rng.uniform01();
                let v = w * particle.velocity[d]
                    + params.cognitive * r1 * (particle.best_position[d] - particle.position[d])
                    + params.social * r2 * (gbest_position[d] - particle.position[d]);
                particle.velocity[d] = v.clamp(-vmax[d], vmax[d]);
                particle.position[d] += particle.velocity[d];
            }
            problem.clamp_into_bounds(&mut particle.position);
            particle.fitness = problem.evaluate(&particle.position, &mut rng)?;
            if direction.better(particle.fitness, particle.best_fitness) {
                particle.best_fitness = particle.fitness;
                particle.best_position.copy_from_slice(&particle.position);
            }
            if direction.better(particle.best_fitness, gbest_fitness) {
                gbest_fitness = particle.best_fitness;
                gbest_position.copy_from_slice(&particle.best_position);
            }
        }

        let avg =
            particles.iter().map(|p| p.fitness).sum::<f64>() / params.population_size as f64;
        let positions = capture_positions.then(|| {
            particles
                .iter()
                .map(|p| [p.position[0], p.position[1]])
                .collect()
        });
        record.push_iteration(gbest_fitness, avg, particles[0].position[0], positions);
    }

    Ok(RunOutput {
        best_position: gbest_position,
        best_fitness: gbest_fitness,
        record,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problems::{problem, ProblemOptions};

    #[test]
    fn run_is_deterministic_per_seed() {
        let p = problem("tf1", &ProblemOptions::default()).unwrap();
        let params = PsoParams {
            population_size: 10,
            max_iterations: 50,
            ..Default::default()
        };
        let a = run(&p, &params, 5, false).unwrap();
        let b = run(&p, &params, 5, false).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn gbest_curve_is_monotone() {
        let p = problem("tf9", &ProblemOptions::default()).unwrap();
        let params = PsoParams {
            population_size: 12,
            max_iterations: 80,
            ..Default::default()
        };
        let out = run(&p, &params, 1, false).unwrap();
        for w in out.record.best_fitness.windows(2) {
            assert!(w[1] <= w[0]);
        }
    }

    #[test]
    fn best_position_stays_in_bounds() {
        let p = problem("tf2", &ProblemOptions::default()).unwrap();
        let out = run(
            &p,
            &PsoParams {
                population_size: 8,
                max_iterations: 40,
                ..Default::default()
            },
            2,
            false,
        )
        .unwrap();
        for (d, v) in out.best_position.iter().enumerate() {
            assert!(*v >= p.lower()[d] && *v <= p.upper()[d]);
        }
    }

    #[test]
    fn converges_on_the_sphere() {
        let p = problem("tf1", &ProblemOptions::default()).unwrap();
        let out = run(
            &p,
            &PsoParams {
                population_size: 20,
                max_iterations: 200,
                ..Default::default()
            },
            4,
            false,
        )
        .unwrap();
        assert!(out.best_fitness < 1.0, "PSO stalled at {}", out.best_fitness);
    }

    #[test]
    fn invalid_params_are_rejected() {
        let bad = PsoParams {
            cognitive: 0.0,
            ..Default::default()
        };
        assert!(bad.validate().is_err());
        let bad = PsoParams {
            inertia_end: 1.2,
            ..Default::default()
        };
        assert!(bad.validate().is_err());
    }
}
