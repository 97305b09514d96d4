//! Swarm-optimization library built around the fitness dependent optimizer:
//! the optimizer itself, a canonical gbest PSO baseline, the classical and
//! CEC benchmark objectives plus two application objectives, rank-sum
//! significance testing, and a seeded replication harness with CSV output.
//!
//! Every run is fully determined by `(problem, parameters, seed)`.

pub mod apps;
pub mod error;
pub mod fdo;
pub mod harness;
pub mod problems;
pub mod pso;
pub mod record;
pub mod rng;
pub mod stats;

pub use error::{Error, Result};
pub use fdo::{Agent, FdoParams, FdoRun, SwarmState};
pub use harness::{Algorithm, ComparisonRow, ExperimentConfig, ExperimentResult};
pub use problems::{problem, problem_names, Direction, Problem, ProblemOptions};
pub use pso::PsoParams;
pub use record::{RecordLevel, RunOutput, RunRecord};
pub use rng::RngHandle;
pub use stats::{SampleSummary, WilcoxonResult};
