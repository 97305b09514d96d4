//! Benchmark objective registry.
//!
//! Every objective is addressable by a lowercase string name: the classical
//! set `tf1`..`tf19`, the analytic CEC base set `cec04`..`cec10`, and the two
//! application objectives `antenna` and `fm`. A [`Problem`] bundles the
//! evaluator with its box bounds, optimum shift, optimization direction and,
//! when known, the optimum location and value.
//!
//! Shifted objectives relocate the optimum away from the origin: the
//! evaluator works on `z = x - shift`.

pub mod cec;
pub mod composite;
pub mod functions;

use crate::apps::antenna::{antenna_fitness, AntennaLayout, FIXED_ELEMENT};
use crate::apps::fm::{self, FmForm};
use crate::error::{Error, Result};
use crate::rng::RngHandle;
use composite::CompositeSpec;

/// Optimization direction of an objective.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Minimize,
    Maximize,
}

impl Direction {
    /// Whether `candidate` is strictly better than `incumbent`.
    pub fn better(self, candidate: f64, incumbent: f64) -> bool {
        match self {
            Direction::Minimize => candidate < incumbent,
            Direction::Maximize => candidate > incumbent,
        }
    }

    /// The worst representable fitness for this direction.
    pub fn worst(self) -> f64 {
        match self {
            Direction::Minimize => f64::INFINITY,
            Direction::Maximize => f64::NEG_INFINITY,
        }
    }
}

/// Per-dimension minimum of the Schwefel sum term.
pub const SCHWEFEL_PER_DIM_MIN: f64 = -418.982_887_272_433_7;
/// Location of the Schwefel per-dimension minimizer.
pub const SCHWEFEL_ARGMIN: f64 = 420.968_746_359_982;

#[derive(Debug, Clone)]
enum Objective {
    Tf1,
    Tf2,
    Tf3,
    Tf4,
    Tf5,
    Tf6,
    Tf7,
    Tf8,
    Tf9,
    Tf10,
    Tf11,
    Tf12,
    Tf13,
    Composite(CompositeSpec),
    Cec04,
    Cec05,
    Cec06,
    Cec07,
    Cec08,
    Cec09,
    Cec10,
    Antenna,
    Fm(FmForm),
}

/// A registered objective: evaluator plus the metadata the optimizers and the
/// harness need.
#[derive(Debug, Clone)]
pub struct Problem {
    name: String,
    dimension: usize,
    lower: Vec<f64>,
    upper: Vec<f64>,
    shift: Vec<f64>,
    direction: Direction,
    known_optimum: Option<f64>,
    optimum_position: Option<Vec<f64>>,
    objective: Objective,
}

impl Problem {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    pub fn shift(&self) -> &[f64] {
        &self.shift
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn known_optimum(&self) -> Option<f64> {
        self.known_optimum
    }

    pub fn optimum_position(&self) -> Option<&[f64]> {
        self.optimum_position.as_deref()
    }

    /// Tolerance for the optimum-value check; composites carry the looser one.
    pub fn optimum_check_tolerance(&self) -> f64 {
        match self.objective {
            Objective::Composite(_) => 1e-6,
            _ => 1e-9,
        }
    }

    /// Whether the evaluator consumes randomness (TF7's additive noise).
    pub fn is_noisy(&self) -> bool {
        matches!(self.objective, Objective::Tf7)
    }

    /// The composite description, for composite objectives.
    pub fn composite(&self) -> Option<&CompositeSpec> {
        match &self.objective {
            Objective::Composite(spec) => Some(spec),
            _ => None,
        }
    }

    /// Clamps every coordinate of `x` into the box bounds.
    pub fn clamp_into_bounds(&self, x: &mut [f64]) {
        for (v, (lo, hi)) in x.iter_mut().zip(self.lower.iter().zip(&self.upper)) {
            *v = v.clamp(*lo, *hi);
        }
    }

    /// Evaluates the objective at `x`, which must match the dimension and lie
    /// inside the box bounds.
    pub fn evaluate(&self, x: &[f64], rng: &mut RngHandle) -> Result<f64> {
        if x.len() != self.dimension {
            return Err(Error::invalid(format!(
                "{}: position has dimension {}, expected {}",
                self.name,
                x.len(),
                self.dimension
            )));
        }
        for (d, &v) in x.iter().enumerate() {
            if v < self.lower[d] || v > self.upper[d] {
                return Err(Error::invalid(format!(
                    "{}: coordinate {d} = {v} outside [{}, {}]",
                    self.name, self.lower[d], self.upper[d]
                )));
            }
        }
        Ok(match &self.objective {
            Objective::Tf1 => functions::tf1(x, &self.shift),
            Objective::Tf2 => functions::tf2(x, &self.shift),
            Objective::Tf3 => functions::tf3(x, &self.shift),
            Objective::Tf4 => functions::tf4(x, &self.shift),
            Objective::Tf5 => functions::tf5(x, &self.shift),
            Objective::Tf6 => functions::tf6(x, &self.shift),
            Objective::Tf7 => functions::tf7_deterministic(x, &self.shift) + rng.uniform01(),
            Objective::Tf8 => functions::tf8(x, &self.shift),
            Objective::Tf9 => functions::tf9(x, &self.shift),
            Objective::Tf10 => functions::tf10(x, &self.shift),
            Objective::Tf11 => functions::tf11(x, &self.shift),
            Objective::Tf12 => functions::tf12(x, &self.shift),
            Objective::Tf13 => functions::tf13(x, &self.shift),
            Objective::Composite(spec) => spec.evaluate(x),
            Objective::Cec04 => cec::cec04_rastrigin(x),
            Objective::Cec05 => cec::cec05_griewank(x),
            Objective::Cec06 => cec::cec06_weierstrass(x),
            Objective::Cec07 => cec::cec07_modified_schwefel(x),
            Objective::Cec08 => cec::cec08_expanded_schaffer_f6(x),
            Objective::Cec09 => cec::cec09_happy_cat(x),
            Objective::Cec10 => cec::cec10_ackley(x),
            Objective::Antenna => {
                antenna_fitness(&AntennaLayout::new([x[0], x[1], x[2], x[3]]))
            }
            Objective::Fm(form) => fm::fm_fitness(x, *form),
        })
    }
}

/// Options applied when a problem is instantiated from the registry.
#[derive(Debug, Clone, Default)]
pub struct ProblemOptions {
    /// Overrides the objective's tabulated dimension, where scalable.
    pub dimension: Option<usize>,
    /// Evaluate the FM objective in its nested form.
    pub fm_nested: bool,
}

/// Every registered problem name, in listing order.
pub fn problem_names() -> &'static [&'static str] {
    &[
        "tf1", "tf2", "tf3", "tf4", "tf5", "tf6", "tf7", "tf8", "tf9", "tf10", "tf11", "tf12",
        "tf13", "tf14", "tf15", "tf16", "tf17", "tf18", "tf19", "cec04", "cec05", "cec06",
        "cec07", "cec08", "cec09", "cec10", "antenna", "fm",
    ]
}

/// Instantiates a registered problem by name.
pub fn problem(name: &str, opts: &ProblemOptions) -> Result<Problem> {
    let name = name.to_ascii_lowercase();
    let spec = match name.as_str() {
        "tf1" => classic(&name, Objective::Tf1, 10, -100.0, 100.0, -30.0, opts)?,
        "tf2" => classic(&name, Objective::Tf2, 10, -10.0, 10.0, -3.0, opts)?,
        "tf3" => classic(&name, Objective::Tf3, 10, -100.0, 100.0, -30.0, opts)?,
        "tf4" => classic(&name, Objective::Tf4, 10, -100.0, 100.0, -30.0, opts)?,
        "tf5" => classic(&name, Objective::Tf5, 10, -30.0, 30.0, -15.0, opts)?,
        "tf6" => classic(&name, Objective::Tf6, 10, -100.0, 100.0, -75.0, opts)?,
        "tf7" => classic(&name, Objective::Tf7, 10, -1.28, 1.28, -0.25, opts)?,
        "tf8" => classic(&name, Objective::Tf8, 10, -500.0, 500.0, -300.0, opts)?,
        "tf9" => classic(&name, Objective::Tf9, 10, -5.12, 5.12, -2.0, opts)?,
        "tf10" => classic(&name, Objective::Tf10, 10, -32.0, 32.0, 0.0, opts)?,
        "tf11" => classic(&name, Objective::Tf11, 10, -600.0, 600.0, -400.0, opts)?,
        "tf12" => classic(&name, Objective::Tf12, 10, -50.0, 50.0, 30.0, opts)?,
        "tf13" => classic(&name, Objective::Tf13, 10, -50.0, 50.0, -10.0, opts)?,
        "tf14" => composite_problem(&name, 1, opts)?,
        "tf15" => composite_problem(&name, 2, opts)?,
        "tf16" => composite_problem(&name, 3, opts)?,
        "tf17" => composite_problem(&name, 4, opts)?,
        "tf18" => composite_problem(&name, 5, opts)?,
        "tf19" => composite_problem(&name, 6, opts)?,
        "cec04" => cec_problem(&name, Objective::Cec04, opts)?,
        "cec05" => cec_problem(&name, Objective::Cec05, opts)?,
        "cec06" => cec_problem(&name, Objective::Cec06, opts)?,
        "cec07" => cec_problem(&name, Objective::Cec07, opts)?,
        "cec08" => cec_problem(&name, Objective::Cec08, opts)?,
        "cec09" => cec_problem(&name, Objective::Cec09, opts)?,
        "cec10" => cec_problem(&name, Objective::Cec10, opts)?,
        "antenna" => antenna_problem(opts)?,
        "fm" => fm_problem(opts)?,
        _ => return Err(Error::UnknownProblem(name)),
    };
    Ok(spec)
}

/// Instantiates every registered problem with shared options.
pub fn all_problems(opts: &ProblemOptions) -> Result<Vec<Problem>> {
    problem_names().iter().map(|n| problem(n, opts)).collect()
}

fn fixed_dimension(name: &str, required: usize, opts: &ProblemOptions) -> Result<usize> {
    match opts.dimension {
        None => Ok(required),
        Some(d) if d == required => Ok(required),
        Some(d) => Err(Error::config(format!(
            "{name} has fixed dimension {required}, got {d}"
        ))),
    }
}

fn scalable_dimension(name: &str, default: usize, opts: &ProblemOptions) -> Result<usize> {
    match opts.dimension {
        None => Ok(default),
        Some(0) => Err(Error::config(format!("{name}: dimension must be positive"))),
        Some(d) => Ok(d),
    }
}

fn classic(
    name: &str,
    objective: Objective,
    default_dim: usize,
    lo: f64,
    hi: f64,
    shift_value: f64,
    opts: &ProblemOptions,
) -> Result<Problem> {
    let n = scalable_dimension(name, default_dim, opts)?;
    // TF12's tabulated shift mixes signs: -30 in the first coordinate, +30 in
    // the rest. Every other classical shift is uniform.
    let shift: Vec<f64> = if matches!(objective, Objective::Tf12) {
        std::iter::once(-30.0).chain(std::iter::repeat(30.0)).take(n).collect()
    } else {
        vec![shift_value; n]
    };

    let (known_optimum, optimum_position) = match objective {
        Objective::Tf5 | Objective::Tf13 => {
            (Some(0.0), Some(shift.iter().map(|s| s + 1.0).collect()))
        }
        Objective::Tf12 => (Some(0.0), Some(shift.iter().map(|s| s - 1.0).collect())),
        Objective::Tf8 => (
            Some(n as f64 * SCHWEFEL_PER_DIM_MIN),
            Some(shift.iter().map(|s| s + SCHWEFEL_ARGMIN).collect()),
        ),
        // The noise term makes a value check at the optimum meaningless.
        Objective::Tf7 => (None, None),
        _ => (Some(0.0), Some(shift.clone())),
    };

    Ok(Problem {
        name: name.to_string(),
        dimension: n,
        lower: vec![lo; n],
        upper: vec![hi; n],
        shift,
        direction: Direction::Minimize,
        known_optimum,
        optimum_position,
        objective,
    })
}

fn composite_problem(name: &str, cf: usize, opts: &ProblemOptions) -> Result<Problem> {
    let n = scalable_dimension(name, 10, opts)?;
    let spec = CompositeSpec::build(cf, n);
    let optimum_position = spec.optima()[0].clone();
    Ok(Problem {
        name: name.to_string(),
        dimension: n,
        lower: vec![-5.0; n],
        upper: vec![5.0; n],
        shift: vec![0.0; n],
        direction: Direction::Minimize,
        known_optimum: Some(0.0),
        optimum_position: Some(optimum_position),
        objective: Objective::Composite(spec),
    })
}

fn cec_problem(name: &str, objective: Objective, opts: &ProblemOptions) -> Result<Problem> {
    let n = scalable_dimension(name, 10, opts)?;
    let optimum_position = match objective {
        Objective::Cec09 => vec![-1.0; n],
        _ => vec![0.0; n],
    };
    Ok(Problem {
        name: name.to_string(),
        dimension: n,
        lower: vec![-100.0; n],
        upper: vec![100.0; n],
        shift: vec![0.0; n],
        direction: Direction::Minimize,
        known_optimum: Some(1.0),
        optimum_position: Some(optimum_position),
        objective,
    })
}

fn antenna_problem(opts: &ProblemOptions) -> Result<Problem> {
    let n = fixed_dimension("antenna", 4, opts)?;
    Ok(Problem {
        name: "antenna".to_string(),
        dimension: n,
        lower: vec![0.0; n],
        upper: vec![FIXED_ELEMENT; n],
        shift: vec![0.0; n],
        direction: Direction::Minimize,
        known_optimum: None,
        optimum_position: None,
        objective: Objective::Antenna,
    })
}

fn fm_problem(opts: &ProblemOptions) -> Result<Problem> {
    let n = fixed_dimension("fm", 6, opts)?;
    let form = if opts.fm_nested {
        FmForm::Nested
    } else {
        FmForm::Additive
    };
    Ok(Problem {
        name: "fm".to_string(),
        dimension: n,
        lower: vec![fm::PARAM_MIN; n],
        upper: vec![fm::PARAM_MAX; n],
        shift: vec![0.0; n],
        direction: Direction::Minimize,
        known_optimum: Some(0.0),
        optimum_position: Some(fm::TARGET.to_vec()),
        objective: Objective::Fm(form),
    })
}
