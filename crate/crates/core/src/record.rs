//! Per-iteration time series captured by a single replication run.

use crate::error::{Error, Result};

/// How much of a run to capture and emit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RecordLevel {
    /// Final statistics only.
    #[default]
    Summary,
    /// Per-iteration best/average fitness and the first-agent trajectory.
    Series,
    /// Series plus every agent position (2-D problems only).
    Positions,
}

impl std::str::FromStr for RecordLevel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "summary" => Ok(RecordLevel::Summary),
            "series" => Ok(RecordLevel::Series),
            "positions" => Ok(RecordLevel::Positions),
            other => Err(Error::config(format!(
                "unknown record level `{other}` (expected summary, series or positions)"
            ))),
        }
    }
}

impl std::fmt::Display for RecordLevel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            RecordLevel::Summary => "summary",
            RecordLevel::Series => "series",
            RecordLevel::Positions => "positions",
        })
    }
}

/// One replication's time series: entry `t` describes the state after
/// iteration `t` (0-based). The series and trajectory are always captured;
/// agent positions only when requested, and only for 2-D problems.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct RunRecord {
    pub best_fitness: Vec<f64>,
    pub avg_fitness: Vec<f64>,
    pub trajectory: Vec<f64>,
    pub positions: Option<Vec<Vec<[f64; 2]>>>,
}

impl RunRecord {
    pub fn new(iterations: usize, capture_positions: bool) -> Self {
        Self {
            best_fitness: Vec::with_capacity(iterations),
            avg_fitness: Vec::with_capacity(iterations),
            trajectory: Vec::with_capacity(iterations),
            positions: capture_positions.then(|| Vec::with_capacity(iterations)),
        }
    }

    pub fn len(&self) -> usize {
        self.best_fitness.len()
    }

    pub fn is_empty(&self) -> bool {
        self.best_fitness.is_empty()
    }

    pub(crate) fn push_iteration(
        &mut self,
        best: f64,
        avg: f64,
        trajectory: f64,
        positions: Option<Vec<[f64; 2]>>,
    ) {
        self.best_fitness.push(best);
        self.avg_fitness.push(avg);
        self.trajectory.push(trajectory);
        if let Some(store) = self.positions.as_mut() {
            store.push(positions.expect("positions requested but not supplied"));
        }
    }
}

/// Final result of one replication.
#[derive(Debug, Clone, PartialEq)]
pub struct RunOutput {
    pub best_position: Vec<f64>,
    pub best_fitness: f64,
    pub record: RunRecord,
}
