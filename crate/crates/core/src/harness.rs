//! Experiment orchestration: seeded replications, aggregation, head-to-head
//! comparison, and CSV emission.
//!
//! Replication `k` of an experiment runs with seed `base + k`, so replications
//! are independent and may execute concurrently; results are always reduced in
//! replication order, which makes every emitted artifact byte-reproducible.
//! The `FDO_BENCH_THREADS` environment variable caps replication parallelism.

use std::fmt::Write as _;
use std::path::Path;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fdo::{self, FdoParams};
use crate::problems::{problem, Problem, ProblemOptions};
use crate::pso::{self, PsoParams};
use crate::record::{RecordLevel, RunOutput};
use crate::stats::{summarize, wilcoxon_rank_sum, SampleSummary, WilcoxonResult};

/// Environment variable capping the number of replication worker threads.
pub const THREADS_ENV: &str = "FDO_BENCH_THREADS";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    Fdo,
    Pso,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Fdo => "fdo",
            Algorithm::Pso => "pso",
        }
    }
}

impl std::str::FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "fdo" => Ok(Algorithm::Fdo),
            "pso" => Ok(Algorithm::Pso),
            other => Err(Error::UnknownAlgorithm(other.to_string())),
        }
    }
}

/// Everything one experiment needs: problem, algorithm, budgets and seeds.
#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    pub problem: String,
    pub algorithm: Algorithm,
    pub dimension: Option<usize>,
    pub population: usize,
    pub iterations: usize,
    pub runs: usize,
    pub weight_factor: u8,
    pub seed: u64,
    pub record: RecordLevel,
    pub fm_nested: bool,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            problem: "tf1".to_string(),
            algorithm: Algorithm::Fdo,
            dimension: None,
            population: 30,
            iterations: 500,
            runs: 30,
            weight_factor: 0,
            seed: 0,
            record: RecordLevel::Summary,
            fm_nested: false,
        }
    }
}

impl ExperimentConfig {
    pub fn resolve_problem(&self) -> Result<Problem> {
        problem(
            &self.problem,
            &ProblemOptions {
                dimension: self.dimension,
                fm_nested: self.fm_nested,
            },
        )
    }

    fn validate(&self, problem: &Problem) -> Result<()> {
        if self.runs == 0 {
            return Err(Error::config("runs must be at least 1"));
        }
        if self.record == RecordLevel::Positions && problem.dimension() != 2 {
            return Err(Error::config(
                "record level `positions` requires dimension 2",
            ));
        }
        Ok(())
    }
}

/// Replication outputs in seed order plus their summary.
#[derive(Debug, Clone)]
pub struct ExperimentResult {
    pub problem: Problem,
    pub algorithm: Algorithm,
    pub outputs: Vec<RunOutput>,
    pub summary: SampleSummary,
}

impl ExperimentResult {
    pub fn finals(&self) -> Vec<f64> {
        self.outputs.iter().map(|o| o.best_fitness).collect()
    }
}

fn replication_pool() -> Result<rayon::ThreadPool> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(raw) = std::env::var(THREADS_ENV) {
        let threads: usize = raw
            .parse()
            .map_err(|_| Error::config(format!("{THREADS_ENV} must be a positive integer, got `{raw}`")))?;
        if threads == 0 {
            return Err(Error::config(format!("{THREADS_ENV} must be positive")));
        }
        builder = builder.num_threads(threads);
    }
    builder
        .build()
        .map_err(|e| Error::config(format!("failed to build thread pool: {e}")))
}

/// Runs all replications of `config` and aggregates the final best values.
pub fn run_experiment(config: &ExperimentConfig) -> Result<ExperimentResult> {
    let problem = config.resolve_problem()?;
    config.validate(&problem)?;
    let capture = config.record == RecordLevel::Positions;

    let pool = replication_pool()?;
    let outputs: Vec<RunOutput> = pool.install(|| {
        (0..config.runs)
            .into_par_iter()
            .map(|k| {
                let seed = config.seed.wrapping_add(k as u64);
                match config.algorithm {
                    Algorithm::Fdo => {
                        let params = FdoParams {
                            weight_factor: config.weight_factor,
                            population_size: config.population,
                            max_iterations: config.iterations,
                        };
                        fdo::run(&problem, &params, seed, capture)
                    }
                    Algorithm::Pso => {
                        let params = PsoParams {
                            population_size: config.population,
                            max_iterations: config.iterations,
                            ..Default::default()
                        };
                        pso::run(&problem, &params, seed, capture)
                    }
                }
            })
            .collect::<Result<_>>()
    })?;

    let finals: Vec<f64> = outputs.iter().map(|o| o.best_fitness).collect();
    let summary = summarize(&finals)?;
    Ok(ExperimentResult {
        problem,
        algorithm: config.algorithm,
        outputs,
        summary,
    })
}

/// One head-to-head row: summaries of both sides plus the rank-sum test.
#[derive(Debug, Clone)]
pub struct ComparisonRow {
    pub problem: String,
    pub algo_a: Algorithm,
    pub algo_b: Algorithm,
    pub summary_a: SampleSummary,
    pub summary_b: SampleSummary,
    pub wilcoxon: WilcoxonResult,
    pub result_a: ExperimentResult,
    pub result_b: ExperimentResult,
}

/// Runs both experiments and tests their final-best samples. The two configs
/// must target the same problem instance.
pub fn compare(config_a: &ExperimentConfig, config_b: &ExperimentConfig) -> Result<ComparisonRow> {
    if config_a.problem != config_b.problem
        || config_a.dimension != config_b.dimension
        || config_a.fm_nested != config_b.fm_nested
    {
        return Err(Error::config(
            "comparison requires both sides to target the same problem",
        ));
    }
    let result_a = run_experiment(config_a)?;
    let result_b = run_experiment(config_b)?;
    let wilcoxon = wilcoxon_rank_sum(&result_a.finals(), &result_b.finals())?;
    Ok(ComparisonRow {
        problem: config_a.problem.clone(),
        algo_a: config_a.algorithm,
        algo_b: config_b.algorithm,
        summary_a: result_a.summary,
        summary_b: result_b.summary,
        wilcoxon,
        result_a,
        result_b,
    })
}

/// Formats a float with 17 significant digits, the fixed width used in every
/// emitted CSV field.
pub fn fmt_g17(v: f64) -> String {
    format!("{v:.16e}")
}

/// `series.csv`: one row per replication and iteration.
pub fn render_series(results: &ExperimentResult) -> String {
    let mut out = String::from("run,iteration,best_fitness,avg_fitness,trajectory\n");
    for (run, output) in results.outputs.iter().enumerate() {
        let r = &output.record;
        for t in 0..r.len() {
            let _ = writeln!(
                out,
                "{run},{t},{},{},{}",
                fmt_g17(r.best_fitness[t]),
                fmt_g17(r.avg_fitness[t]),
                fmt_g17(r.trajectory[t]),
            );
        }
    }
    out
}

/// `positions.csv`: one row per replication, iteration and agent (2-D runs).
pub fn render_positions(results: &ExperimentResult) -> String {
    let mut out = String::from("run,iteration,agent,x0,x1\n");
    for (run, output) in results.outputs.iter().enumerate() {
        let Some(per_iter) = output.record.positions.as_ref() else {
            continue;
        };
        for (t, agents) in per_iter.iter().enumerate() {
            for (agent, pos) in agents.iter().enumerate() {
                let _ = writeln!(
                    out,
                    "{run},{t},{agent},{},{}",
                    fmt_g17(pos[0]),
                    fmt_g17(pos[1]),
                );
            }
        }
    }
    out
}

/// `summary.csv`: one aggregated row.
pub fn render_summary(results: &ExperimentResult) -> String {
    format!(
        "problem,algorithm,runs,mean,std\n{},{},{},{},{}\n",
        results.problem.name(),
        results.algorithm.name(),
        results.summary.n,
        fmt_g17(results.summary.mean),
        fmt_g17(results.summary.std),
    )
}

/// `compare.csv`: one head-to-head row.
pub fn render_compare(row: &ComparisonRow) -> String {
    format!(
        "problem,algo_a,algo_b,mean_a,std_a,mean_b,std_b,p_value\n{},{},{},{},{},{},{},{}\n",
        row.problem,
        row.algo_a.name(),
        row.algo_b.name(),
        fmt_g17(row.summary_a.mean),
        fmt_g17(row.summary_a.std),
        fmt_g17(row.summary_b.mean),
        fmt_g17(row.summary_b.std),
        fmt_g17(row.wilcoxon.p_value),
    )
}

pub fn write_csv(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiny(algorithm: Algorithm) -> ExperimentConfig {
        ExperimentConfig {
            algorithm,
            population: 8,
            iterations: 30,
            runs: 3,
            seed: 41,
            ..Default::default()
        }
    }

    #[test]
    fn replications_follow_the_seed_ladder() {
        let cfg = tiny(Algorithm::Fdo);
        let result = run_experiment(&cfg).unwrap();
        let problem = cfg.resolve_problem().unwrap();
        for k in 0..cfg.runs {
            let params = FdoParams {
                weight_factor: 0,
                population_size: cfg.population,
                max_iterations: cfg.iterations,
            };
            let solo = fdo::run(&problem, &params, cfg.seed + k as u64, false).unwrap();
            assert_eq!(solo.best_fitness, result.outputs[k].best_fitness);
        }
    }

    #[test]
    fn rerunning_a_config_is_bit_identical() {
        let cfg = tiny(Algorithm::Pso);
        let a = run_experiment(&cfg).unwrap();
        let b = run_experiment(&cfg).unwrap();
        assert_eq!(a.outputs, b.outputs);
        assert_eq!(render_series(&a), render_series(&b));
        assert_eq!(render_summary(&a), render_summary(&b));
    }

    #[test]
    fn self_comparison_is_insignificant() {
        let row = compare(&tiny(Algorithm::Fdo), &tiny(Algorithm::Fdo)).unwrap();
        assert_eq!(row.wilcoxon.p_value, 1.0);
    }

    #[test]
    fn mismatched_problems_are_rejected() {
        let a = tiny(Algorithm::Fdo);
        let mut b = tiny(Algorithm::Pso);
        b.problem = "tf2".to_string();
        assert!(compare(&a, &b).is_err());
    }

    #[test]
    fn positions_record_demands_two_dimensions() {
        let mut cfg = tiny(Algorithm::Fdo);
        cfg.record = RecordLevel::Positions;
        assert!(run_experiment(&cfg).is_err());
        cfg.dimension = Some(2);
        let result = run_experiment(&cfg).unwrap();
        let rendered = render_positions(&result);
        // header + runs * iterations * agents rows
        assert_eq!(rendered.lines().count(), 1 + 3 * 30 * 8);
    }

    #[test]
    fn average_fitness_improves_on_the_sphere() {
        for seed in [1, 2, 3, 4, 5] {
            let mut cfg = tiny(Algorithm::Fdo);
            cfg.seed = seed;
            cfg.runs = 1;
            cfg.iterations = 100;
            let result = run_experiment(&cfg).unwrap();
            let record = &result.outputs[0].record;
            assert!(
                record.avg_fitness.last().unwrap() < record.avg_fitness.first().unwrap(),
                "seed {seed}: average fitness did not improve"
            );
        }
    }

    #[test]
    fn csv_headers_are_pinned() {
        let cfg = tiny(Algorithm::Fdo);
        let result = run_experiment(&cfg).unwrap();
        assert!(render_series(&result).starts_with("run,iteration,best_fitness,avg_fitness,trajectory\n"));
        assert!(render_summary(&result).starts_with("problem,algorithm,runs,mean,std\n"));
        let row = compare(&cfg, &tiny(Algorithm::Pso)).unwrap();
        assert!(render_compare(&row)
            .starts_with("problem,algo_a,algo_b,mean_a,std_a,mean_b,std_b,p_value\n"));
    }

    #[test]
    fn seventeen_significant_digits() {
        assert_eq!(fmt_g17(7.47e-21), "7.4700000000000003e-21");
        assert_eq!(fmt_g17(150.0), "1.5000000000000000e2");
        assert_eq!(fmt_g17(0.0), "0.0000000000000000e0");
    }

    #[test]
    fn unknown_algorithm_string_is_rejected() {
        assert!("gwo".parse::<Algorithm>().is_err());
        assert_eq!("FDO".parse::<Algorithm>().unwrap(), Algorithm::Fdo);
    }
}
