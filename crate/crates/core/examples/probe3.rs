// Scratch stall diagnostics; removed before release.
use fdo_core::fdo::{FdoParams, FdoRun};
use fdo_core::problems::{problem, ProblemOptions};

fn main() {
    let p = problem("tf1", &ProblemOptions::default()).unwrap();
    let params = FdoParams {
        weight_factor: 0,
        population_size: 30,
        max_iterations: 500,
    };

    // find the bad seeds
    let mut bad = Vec::new();
    for seed in 0..30u64 {
        let mut run = FdoRun::new(&p, params.clone(), seed).unwrap();
        for _ in 0..500 {
            run.step().unwrap();
        }
        let bf = run.state().best_fitness();
        if bf > 1e-7 {
            bad.push((seed, bf));
        }
    }
    println!("bad seeds: {bad:?}");

    if let Some(&(seed, _)) = bad.first() {
        let mut run = FdoRun::new(&p, params.clone(), seed).unwrap();
        for t in 0..500 {
            run.step().unwrap();
            if t % 50 == 0 || t == 499 {
                let st = run.state();
                let bx = st.best_position();
                let mean_dist: f64 = st
                    .agents()
                    .iter()
                    .map(|a| {
                        a.position()
                            .iter()
                            .zip(bx)
                            .map(|(x, b)| (x - b) * (x - b))
                            .sum::<f64>()
                            .sqrt()
                    })
                    .sum::<f64>()
                    / st.agents().len() as f64;
                let mean_fw: f64 = st
                    .agents()
                    .iter()
                    .map(|a| (st.best_fitness() / a.fitness()).abs())
                    .sum::<f64>()
                    / st.agents().len() as f64;
                let dist_opt: f64 = bx.iter().map(|x| (x + 30.0) * (x + 30.0)).sum::<f64>().sqrt();
                println!(
                    "t={t:3} bf={:9.3e} |x*-opt|={dist_opt:9.3e} mean|x-x*|={mean_dist:9.3e} mean fw={mean_fw:.6} evals={}",
                    st.best_fitness(),
                    run.evaluations_last_iteration()
                );
            }
        }
    }
}
