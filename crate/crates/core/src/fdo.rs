//! The fitness dependent optimizer.
//!
//! Each artificial scout moves by adding a pace to its position. The pace is
//! driven by the fitness weight `fw`: the absolute ratio of the global best
//! fitness to the scout's own fitness, minus the binary weight factor. A
//! weight strictly inside (0, 1) directs the pace along the line to the global
//! best, with the sign of a per-dimension random draw choosing approach or
//! retreat; any other weight degrades the pace to a random walk scaled by the
//! scout's own coordinates. A move is kept only when it strictly improves the
//! scout's fitness; otherwise the previously accepted pace gets one retry, and
//! failing that the scout stays put. Accepted paces are saved for that retry.

use crate::error::{Error, Result};
use crate::problems::{Direction, Problem};
use crate::record::{RunOutput, RunRecord};
use crate::rng::RngHandle;

/// Tunable parameters of a run.
#[derive(Debug, Clone)]
pub struct FdoParams {
    /// Weight factor subtracted inside the fitness weight; 0 or 1.
    pub weight_factor: u8,
    pub population_size: usize,
    pub max_iterations: usize,
}

impl Default for FdoParams {
    fn default() -> Self {
        Self {
            weight_factor: 0,
            population_size: 30,
            max_iterations: 500,
        }
    }
}

impl FdoParams {
    pub fn validate(&self) -> Result<()> {
        if self.weight_factor > 1 {
            return Err(Error::invalid(format!(
                "weight factor must be 0 or 1, got {}",
                self.weight_factor
            )));
        }
        if self.population_size == 0 {
            return Err(Error::invalid("population size must be at least 1"));
        }
        if self.max_iterations == 0 {
            return Err(Error::invalid("iteration count must be at least 1"));
        }
        Ok(())
    }
}

/// One artificial scout: position, cached fitness, and the last accepted pace.
#[derive(Debug, Clone, PartialEq)]
pub struct Agent {
    position: Vec<f64>,
    fitness: f64,
    last_pace: Option<Vec<f64>>,
}

impl Agent {
    /// Builds an agent at `position` with a freshly evaluated fitness cache.
    pub fn evaluated(problem: &Problem, position: Vec<f64>, rng: &mut RngHandle) -> Result<Self> {
        let fitness = problem.evaluate(&position, rng)?;
        Ok(Self {
            position,
            fitness,
            last_pace: None,
        })
    }

    pub fn position(&self) -> &[f64] {
        &self.position
    }

    pub fn fitness(&self) -> f64 {
        self.fitness
    }

    pub fn last_pace(&self) -> Option<&[f64]> {
        self.last_pace.as_deref()
    }
}

/// Population, global best and iteration counter of a running swarm.
#[derive(Debug, Clone, PartialEq)]
pub struct SwarmState {
    agents: Vec<Agent>,
    best_position: Vec<f64>,
    best_fitness: f64,
    iteration: usize,
}

impl SwarmState {
    pub fn agents(&self) -> &[Agent] {
        &self.agents
    }

    pub fn best_position(&self) -> &[f64] {
        &self.best_position
    }

    pub fn best_fitness(&self) -> f64 {
        self.best_fitness
    }

    pub fn iteration(&self) -> usize {
        self.iteration
    }

    pub fn average_fitness(&self) -> f64 {
        self.agents.iter().map(Agent::fitness).sum::<f64>() / self.agents.len() as f64
    }
}

/// The fitness weight `fw`.
///
/// For minimization this is `|best / current| - wf`, with the division-by-zero
/// guard returning 0 when the current fitness is exactly zero. Maximization
/// inverts the ratio and guards the best fitness instead.
pub fn fitness_weight(
    best_fitness: f64,
    current_fitness: f64,
    weight_factor: u8,
    direction: Direction,
) -> f64 {
    let wf = f64::from(weight_factor);
    match direction {
        Direction::Minimize => {
            if current_fitness == 0.0 {
                0.0
            } else {
                (best_fitness / current_fitness).abs() - wf
            }
        }
        Direction::Maximize => {
            if best_fitness == 0.0 {
                0.0
            } else {
                (current_fitness / best_fitness).abs() - wf
            }
        }
    }
}

/// Pace from pre-drawn per-dimension randoms in [-1, 1].
///
/// With `fw` strictly inside (0, 1) the pace runs along `x - x*` scaled by
/// `fw`, the draw's sign choosing the direction per dimension. Every other
/// weight (0, 1, or outside the unit interval) falls back to the random walk
/// `x_d * r_d`.
pub fn pace_with_draws(
    position: &[f64],
    best_position: &[f64],
    fw: f64,
    draws: &[f64],
) -> Result<Vec<f64>> {
    if position.len() != best_position.len() || position.len() != draws.len() {
        return Err(Error::invalid(format!(
            "pace dimension mismatch: position {}, best {}, draws {}",
            position.len(),
            best_position.len(),
            draws.len()
        )));
    }
    let directed = fw > 0.0 && fw < 1.0;
    Ok(position
        .iter()
        .zip(best_position)
        .zip(draws)
        .map(|((&x, &xs), &r)| {
            if directed {
                if r < 0.0 {
                    (x - xs) * fw * -1.0
                } else {
                    (x - xs) * fw
                }
            } else {
                x * r
            }
        })
        .collect())
}

/// Pace with fresh Levy draws, one per dimension.
pub fn pace(
    position: &[f64],
    best_position: &[f64],
    fw: f64,
    rng: &mut RngHandle,
) -> Result<Vec<f64>> {
    let draws: Vec<f64> = (0..position.len()).map(|_| rng.levy_r()).collect();
    pace_with_draws(position, best_position, fw, &draws)
}

/// What one agent step did.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StepOutcome {
    pub accepted: bool,
    pub used_previous_pace: bool,
    pub evaluations: usize,
}

fn add_clamped(problem: &Problem, position: &[f64], pace: &[f64]) -> Vec<f64> {
    let mut candidate: Vec<f64> = position.iter().zip(pace).map(|(x, p)| x + p).collect();
    problem.clamp_into_bounds(&mut candidate);
    candidate
}

/// The acceptance ladder for one agent and one candidate pace.
///
/// Tries the fresh pace first; if that does not strictly improve the agent,
/// retries with the last accepted pace; otherwise leaves the agent unchanged.
/// On acceptance the saved pace is the post-clamp displacement that was
/// actually applied.
pub fn step_agent_with_pace(
    problem: &Problem,
    agent: &mut Agent,
    fresh_pace: &[f64],
    rng: &mut RngHandle,
) -> Result<StepOutcome> {
    let direction = problem.direction();
    let mut evaluations = 0;

    let candidate = add_clamped(problem, &agent.position, fresh_pace);
    let fitness = problem.evaluate(&candidate, rng)?;
    evaluations += 1;
    if direction.better(fitness, agent.fitness) {
        accept(agent, candidate, fitness);
        return Ok(StepOutcome {
            accepted: true,
            used_previous_pace: false,
            evaluations,
        });
    }

    if let Some(previous) = agent.last_pace.clone() {
        let candidate = add_clamped(problem, &agent.position, &previous);
        let fitness = problem.evaluate(&candidate, rng)?;
        evaluations += 1;
        if direction.better(fitness, agent.fitness) {
            accept(agent, candidate, fitness);
            return Ok(StepOutcome {
                accepted: true,
                used_previous_pace: true,
                evaluations,
            });
        }
    }

    Ok(StepOutcome {
        accepted: false,
        used_previous_pace: false,
        evaluations,
    })
}

fn accept(agent: &mut Agent, candidate: Vec<f64>, fitness: f64) {
    let applied: Vec<f64> = candidate
        .iter()
        .zip(&agent.position)
        .map(|(c, x)| c - x)
        .collect();
    agent.position = candidate;
    agent.fitness = fitness;
    agent.last_pace = Some(applied);
}

/// Full step for the agent at `index`: fitness weight, pace, acceptance
/// ladder, and an immediate global-best update on improvement.
pub fn step_agent(
    problem: &Problem,
    state: &mut SwarmState,
    index: usize,
    params: &FdoParams,
    rng: &mut RngHandle,
) -> Result<StepOutcome> {
    let direction = problem.direction();
    let fw = fitness_weight(
        state.best_fitness,
        state.agents[index].fitness,
        params.weight_factor,
        direction,
    );
    let fresh = pace(
        state.agents[index].position(),
        &state.best_position,
        fw,
        rng,
    )?;
    let outcome = step_agent_with_pace(problem, &mut state.agents[index], &fresh, rng)?;
    if outcome.accepted {
        let agent = &state.agents[index];
        if direction.better(agent.fitness, state.best_fitness) {
            state.best_fitness = agent.fitness;
            state.best_position = agent.position.clone();
        }
    }
    Ok(outcome)
}

/// A stepping run that exposes its state between iterations.
#[derive(Debug)]
pub struct FdoRun<'p> {
    problem: &'p Problem,
    params: FdoParams,
    rng: RngHandle,
    state: SwarmState,
    evaluations_last_iteration: usize,
}

impl<'p> FdoRun<'p> {
    pub fn new(problem: &'p Problem, params: FdoParams, seed: u64) -> Result<Self> {
        params.validate()?;
        for d in 0..problem.dimension() {
            if !problem.lower()[d].is_finite() || !problem.upper()[d].is_finite() {
                return Err(Error::invalid("problem bounds must be finite"));
            }
        }

        let mut rng = RngHandle::new(seed);
        let mut agents = Vec::with_capacity(params.population_size);
        for _ in 0..params.population_size {
            let position: Vec<f64> = (0..problem.dimension())
                .map(|d| rng.uniform(problem.lower()[d], problem.upper()[d]))
                .collect::<Result<_>>()?;
            agents.push(Agent::evaluated(problem, position, &mut rng)?);
        }

        let direction = problem.direction();
        let mut best_index = 0;
        for (i, a) in agents.iter().enumerate() {
            if direction.better(a.fitness, agents[best_index].fitness) {
                best_index = i;
            }
        }
        let best_position = agents[best_index].position.clone();
        let best_fitness = agents[best_index].fitness;

        Ok(Self {
            problem,
            params,
            rng,
            state: SwarmState {
                agents,
                best_position,
                best_fitness,
                iteration: 0,
            },
            evaluations_last_iteration: 0,
        })
    }

    pub fn state(&self) -> &SwarmState {
        &self.state
    }

    pub fn params(&self) -> &FdoParams {
        &self.params
    }

    /// Objective evaluations spent in the most recent iteration; at most two
    /// per agent (fresh pace plus the previous-pace retry).
    pub fn evaluations_last_iteration(&self) -> usize {
        self.evaluations_last_iteration
    }

    /// Advances every agent once and bumps the iteration counter.
    pub fn step(&mut self) -> Result<()> {
        let mut evaluations = 0;
        for index in 0..self.state.agents.len() {
            let outcome = step_agent(self.problem, &mut self.state, index, &self.params, &mut self.rng)?;
            evaluations += outcome.evaluations;
        }
        self.state.iteration += 1;
        self.evaluations_last_iteration = evaluations;
        Ok(())
    }
}

/// Runs FDO to completion and returns the best solution plus the time series.
pub fn run(
    problem: &Problem,
    params: &FdoParams,
    seed: u64,
    capture_positions: bool,
) -> Result<RunOutput> {
    if capture_positions && problem.dimension() != 2 {
        return Err(Error::invalid(
            "position capture requires a 2-dimensional problem",
        ));
    }
    let mut run = FdoRun::new(problem, params.clone(), seed)?;
    let mut record = RunRecord::new(params.max_iterations, capture_positions);
    for _ in 0..params.max_iterations {
        run.step()?;
        let state = run.state();
        let positions = capture_positions.then(|| {
            state
                .agents()
                .iter()
                .map(|a| [a.position()[0], a.position()[1]])
                .collect()
        });
        record.push_iteration(
            state.best_fitness(),
            state.average_fitness(),
            state.agents()[0].position()[0],
            positions,
        );
    }
    Ok(RunOutput {
        best_position: run.state().best_position().to_vec(),
        best_fitness: run.state().best_fitness(),
        record,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problems::{problem, ProblemOptions};
    use approx::assert_abs_diff_eq;

    fn tf1_1d() -> Problem {
        problem(
            "tf1",
            &ProblemOptions {
                dimension: Some(1),
                ..Default::default()
            },
        )
        .unwrap()
    }

    #[test]
    fn fitness_weight_hand_values() {
        use Direction::Minimize;
        assert_abs_diff_eq!(fitness_weight(5.0, 10.0, 0, Minimize), 0.5);
        assert_abs_diff_eq!(fitness_weight(5.0, 10.0, 1, Minimize), -0.5);
        assert_eq!(fitness_weight(7.0, 0.0, 0, Minimize), 0.0);
        assert_eq!(fitness_weight(0.0, 7.0, 0, Minimize), 0.0);
    }

    #[test]
    fn fitness_weight_maximization_inverts_the_ratio() {
        use Direction::Maximize;
        assert_abs_diff_eq!(fitness_weight(10.0, 5.0, 0, Maximize), 0.5);
        assert_eq!(fitness_weight(0.0, 7.0, 0, Maximize), 0.0);
        assert_abs_diff_eq!(fitness_weight(10.0, 5.0, 1, Maximize), -0.5);
    }

    #[test]
    fn pace_directed_branches() {
        let p = pace_with_draws(&[2.0], &[1.0], 0.5, &[0.3]).unwrap();
        assert_abs_diff_eq!(p[0], 0.5);
        let p = pace_with_draws(&[2.0], &[1.0], 0.5, &[-0.3]).unwrap();
        assert_abs_diff_eq!(p[0], -0.5);
    }

    #[test]
    fn pace_random_walk_branches() {
        let p = pace_with_draws(&[2.0], &[1.0], 1.0, &[0.25]).unwrap();
        assert_abs_diff_eq!(p[0], 0.5);
        let p = pace_with_draws(&[4.0, -2.0], &[0.0, 0.0], 0.0, &[0.5, -0.5]).unwrap();
        assert_abs_diff_eq!(p[0], 2.0);
        assert_abs_diff_eq!(p[1], 1.0);
        // weights outside the unit interval route the same way
        let p = pace_with_draws(&[4.0], &[0.0], -0.5, &[0.5]).unwrap();
        assert_abs_diff_eq!(p[0], 2.0);
        let p = pace_with_draws(&[4.0], &[0.0], 1.5, &[0.5]).unwrap();
        assert_abs_diff_eq!(p[0], 2.0);
    }

    #[test]
    fn pace_rejects_dimension_mismatch() {
        assert!(pace_with_draws(&[1.0, 2.0], &[1.0], 0.5, &[0.1, 0.2]).is_err());
        assert!(pace_with_draws(&[1.0], &[1.0], 0.5, &[0.1, 0.2]).is_err());
    }

    #[test]
    fn acceptance_saves_the_applied_pace() {
        let p = tf1_1d();
        let mut rng = RngHandle::new(0);
        let mut agent = Agent::evaluated(&p, vec![10.0], &mut rng).unwrap();
        let out = step_agent_with_pace(&p, &mut agent, &[-1.0], &mut rng).unwrap();
        assert!(out.accepted && !out.used_previous_pace);
        assert_eq!(agent.position(), &[9.0]);
        assert_eq!(agent.last_pace().unwrap(), &[-1.0]);
        assert_eq!(out.evaluations, 1);
    }

    #[test]
    fn previous_pace_rescues_a_bad_fresh_pace() {
        let p = tf1_1d(); // optimum at -30
        let mut rng = RngHandle::new(0);
        let mut agent = Agent::evaluated(&p, vec![10.0], &mut rng).unwrap();
        step_agent_with_pace(&p, &mut agent, &[-1.0], &mut rng).unwrap();
        let before = agent.fitness();

        // fresh pace walks uphill; the saved downhill pace must rescue it
        let out = step_agent_with_pace(&p, &mut agent, &[5.0], &mut rng).unwrap();
        assert!(out.accepted && out.used_previous_pace);
        assert!(agent.fitness() < before);
        assert_eq!(agent.position(), &[8.0]);
        assert_eq!(agent.last_pace().unwrap(), &[-1.0]);
        assert_eq!(out.evaluations, 2);
    }

    #[test]
    fn agent_without_previous_pace_stays_put() {
        let p = tf1_1d();
        let mut rng = RngHandle::new(0);
        let mut agent = Agent::evaluated(&p, vec![-30.0], &mut rng).unwrap();
        let out = step_agent_with_pace(&p, &mut agent, &[1.0], &mut rng).unwrap();
        assert!(!out.accepted);
        assert_eq!(agent.position(), &[-30.0]);
        assert!(agent.last_pace().is_none());
        assert_eq!(out.evaluations, 1);
    }

    #[test]
    fn equal_fitness_is_not_an_improvement() {
        let p = tf1_1d();
        let mut rng = RngHandle::new(0);
        // symmetric around the optimum at -30: moving from -29 to -31 keeps f = 1
        let mut agent = Agent::evaluated(&p, vec![-29.0], &mut rng).unwrap();
        let out = step_agent_with_pace(&p, &mut agent, &[-2.0], &mut rng).unwrap();
        assert!(!out.accepted);
        assert_eq!(agent.position(), &[-29.0]);
    }

    #[test]
    fn candidates_are_clamped_and_the_clamped_pace_is_saved() {
        let p = tf1_1d(); // bounds [-100, 100]
        let mut rng = RngHandle::new(0);
        let mut agent = Agent::evaluated(&p, vec![90.0], &mut rng).unwrap();
        // raw candidate would be -150; clamped to -100, still an improvement
        let out = step_agent_with_pace(&p, &mut agent, &[-240.0], &mut rng).unwrap();
        assert!(out.accepted);
        assert_eq!(agent.position(), &[-100.0]);
        assert_eq!(agent.last_pace().unwrap(), &[-190.0]);
    }

    #[test]
    fn run_is_deterministic_per_seed() {
        let p = problem("tf1", &ProblemOptions::default()).unwrap();
        let params = FdoParams {
            population_size: 10,
            max_iterations: 50,
            ..Default::default()
        };
        let a = run(&p, &params, 7, false).unwrap();
        let b = run(&p, &params, 7, false).unwrap();
        assert_eq!(a, b);
        let c = run(&p, &params, 8, false).unwrap();
        assert_ne!(a.best_fitness, c.best_fitness);
    }

    #[test]
    fn single_agent_single_iteration_cannot_regress() {
        let p = problem("tf9", &ProblemOptions::default()).unwrap();
        let params = FdoParams {
            population_size: 1,
            max_iterations: 1,
            ..Default::default()
        };
        let mut run = FdoRun::new(&p, params, 3).unwrap();
        let initial = run.state().best_fitness();
        run.step().unwrap();
        assert!(run.state().best_fitness() <= initial);
    }

    #[test]
    fn best_curve_is_monotone_and_positions_stay_bounded() {
        let p = problem("tf9", &ProblemOptions::default()).unwrap();
        let params = FdoParams {
            population_size: 8,
            max_iterations: 60,
            ..Default::default()
        };
        let out = run(&p, &params, 11, false).unwrap();
        for w in out.record.best_fitness.windows(2) {
            assert!(w[1] <= w[0]);
        }
        for (d, v) in out.best_position.iter().enumerate() {
            assert!(*v >= p.lower()[d] && *v <= p.upper()[d]);
        }
        assert_eq!(out.record.len(), 60);
    }

    #[test]
    fn position_capture_requires_two_dimensions() {
        let p = problem("tf1", &ProblemOptions::default()).unwrap();
        assert!(run(&p, &FdoParams::default(), 0, true).is_err());
    }

    #[test]
    fn invalid_params_are_rejected() {
        assert!(FdoParams {
            weight_factor: 2,
            ..Default::default()
        }
        .validate()
        .is_err());
        assert!(FdoParams {
            population_size: 0,
            ..Default::default()
        }
        .validate()
        .is_err());
        assert!(FdoParams {
            max_iterations: 0,
            ..Default::default()
        }
        .validate()
        .is_err());
    }
}
