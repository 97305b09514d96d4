// Scratch convergence probe; removed before release.
use fdo_core::harness::{run_experiment, Algorithm, ExperimentConfig};

fn main() {
    let mut report = |problem: &str, algo: Algorithm, pop: usize, iters: usize, runs: usize, wf: u8| {
        let cfg = ExperimentConfig {
            problem: problem.into(),
            algorithm: algo,
            population: pop,
            iterations: iters,
            runs,
            weight_factor: wf,
            seed: 0,
            ..Default::default()
        };
        let t0 = std::time::Instant::now();
        let r = run_experiment(&cfg).unwrap();
        let mut finals = r.finals();
        finals.sort_by(f64::total_cmp);
        println!(
            "{problem:8} {:4} wf={wf} mean={:.3e} std={:.3e} min={:.3e} med={:.3e} max={:.3e}  ({:?})",
            algo.name(),
            r.summary.mean,
            r.summary.std,
            finals[0],
            finals[finals.len() / 2],
            finals[finals.len() - 1],
            t0.elapsed()
        );
        r
    };

    report("tf1", Algorithm::Fdo, 30, 500, 30, 0);
    report("tf1", Algorithm::Pso, 30, 500, 30, 0);
    report("tf10", Algorithm::Fdo, 30, 500, 30, 0);
    report("tf14", Algorithm::Fdo, 30, 500, 30, 0);
    report("tf14", Algorithm::Pso, 30, 500, 30, 0);
    report("tf2", Algorithm::Fdo, 30, 500, 30, 0);
    report("tf2", Algorithm::Fdo, 30, 500, 30, 1);

    let ant = report("antenna", Algorithm::Fdo, 20, 200, 10, 0);
    let uniform = {
        use fdo_core::apps::antenna::{antenna_fitness, AntennaLayout};
        antenna_fitness(&AntennaLayout::new([0.25, 0.75, 1.25, 1.75]))
    };
    println!("antenna uniform-layout oracle: {uniform:.6}");
    let mut beat = 0;
    for o in &ant.outputs {
        use fdo_core::apps::antenna::AntennaLayout;
        let l = AntennaLayout::new([
            o.best_position[0],
            o.best_position[1],
            o.best_position[2],
            o.best_position[3],
        ]);
        if l.is_feasible() && o.best_fitness < uniform {
            beat += 1;
        }
    }
    println!("antenna feasible+beat-uniform: {beat}/10");

    let fm = report("fm", Algorithm::Fdo, 30, 200, 10, 0);
    let baseline = fdo_core::apps::fm::fm_fitness(&[0.0; 6], fdo_core::apps::fm::FmForm::Additive);
    println!("fm zero baseline: {baseline:.3}  five-percent: {:.3}", 0.05 * baseline);
    let mut fracs: Vec<f64> = fm
        .outputs
        .iter()
        .map(|o| {
            let r = &o.record.best_fitness;
            (r[150] - r[199]) / (r[0] - r[199]).max(1e-300)
        })
        .collect();
    fracs.sort_by(f64::total_cmp);
    println!("fm last-quarter improvement fractions: {fracs:.3?}");
}
