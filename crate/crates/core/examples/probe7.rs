// Scratch combined lever scan; removed before release.
use fdo_core::problems::{problem, Problem, ProblemOptions};
use fdo_core::pso::{self, PsoParams};
use fdo_core::rng::RngHandle;

struct A {
    x: Vec<f64>,
    f: f64,
    pace: Option<Vec<f64>>,
}

fn run(p: &Problem, c: f64, floor: f64, pop: usize, iters: usize, seed: u64, wf: u8) -> f64 {
    let n = p.dimension();
    let mut rng = RngHandle::new(seed);
    let mut agents: Vec<A> = (0..pop)
        .map(|_| {
            let x: Vec<f64> = (0..n)
                .map(|d| rng.uniform(p.lower()[d], p.upper()[d]).unwrap())
                .collect();
            let f = p.evaluate(&x, &mut rng).unwrap();
            A { x, f, pace: None }
        })
        .collect();
    let mut bi = 0;
    for i in 1..pop {
        if agents[i].f < agents[bi].f {
            bi = i;
        }
    }
    let mut bx = agents[bi].x.clone();
    let mut bf = agents[bi].f;

    for _ in 0..iters {
        let (fx, ff) = (bx.clone(), bf);
        for i in 0..pop {
            let fw = if agents[i].f == 0.0 {
                0.0
            } else {
                (ff / agents[i].f).abs() - f64::from(wf)
            };
            let directed = fw > floor && fw < 1.0;
            let pace: Vec<f64> = (0..n)
                .map(|d| {
                    let r = (rng.levy_step() / c).clamp(-1.0, 1.0);
                    if directed {
                        if r < 0.0 {
                            (agents[i].x[d] - fx[d]) * fw * -1.0
                        } else {
                            (agents[i].x[d] - fx[d]) * fw
                        }
                    } else {
                        agents[i].x[d] * r
                    }
                })
                .collect();
            let mut cand: Vec<f64> = agents[i].x.iter().zip(&pace).map(|(a, b)| a + b).collect();
            p.clamp_into_bounds(&mut cand);
            let cf = p.evaluate(&cand, &mut rng).unwrap();
            if cf < agents[i].f {
                let applied: Vec<f64> = cand.iter().zip(&agents[i].x).map(|(c, x)| c - x).collect();
                agents[i].x = cand;
                agents[i].f = cf;
                agents[i].pace = Some(applied);
            } else if let Some(prev) = agents[i].pace.clone() {
                let mut cand2: Vec<f64> =
                    agents[i].x.iter().zip(&prev).map(|(a, b)| a + b).collect();
                p.clamp_into_bounds(&mut cand2);
                let cf2 = p.evaluate(&cand2, &mut rng).unwrap();
                if cf2 < agents[i].f {
                    let applied: Vec<f64> =
                        cand2.iter().zip(&agents[i].x).map(|(c, x)| c - x).collect();
                    agents[i].x = cand2;
                    agents[i].f = cf2;
                    agents[i].pace = Some(applied);
                }
            }
            if agents[i].f < bf {
                bf = agents[i].f;
                bx = agents[i].x.clone();
            }
        }
    }
    bf
}

fn stats(finals: &[f64]) -> (f64, f64, f64) {
    let mean = finals.iter().sum::<f64>() / finals.len() as f64;
    let mut s = finals.to_vec();
    s.sort_by(f64::total_cmp);
    (mean, s[s.len() / 2], s[s.len() - 1])
}

fn main() {
    // PSO references
    for name in ["tf1", "tf14"] {
        let p = problem(name, &ProblemOptions::default()).unwrap();
        let finals: Vec<f64> = (0..30)
            .map(|k| {
                pso::run(
                    &p,
                    &PsoParams {
                        population_size: 30,
                        max_iterations: 500,
                        ..Default::default()
                    },
                    k,
                    false,
                )
                .unwrap()
                .best_fitness
            })
            .collect();
        let (mean, med, max) = stats(&finals);
        println!("PSO {name:5} mean={mean:9.3e} med={med:9.3e} max={max:9.3e}");
    }

    for c in [2.0, 3.0, 5.0, 10.0] {
        for floor in [0.0, 1e-2, 1e-1] {
            println!("=== batch, c={c}, floor={floor:e}");
            for (name, wf, iters) in [
                ("tf1", 0, 500),
                ("tf10", 0, 500),
                ("tf2", 0, 500),
                ("tf2", 1, 500),
                ("tf14", 0, 500),
                ("fm", 0, 200),
            ] {
                let p = problem(name, &ProblemOptions::default()).unwrap();
                let runs = if name == "fm" { 10 } else { 30 };
                let finals: Vec<f64> =
                    (0..runs).map(|k| run(&p, c, floor, 30, iters, k, wf)).collect();
                let (mean, med, max) = stats(&finals);
                println!(
                    "  {name:5} wf={wf} mean={mean:9.3e} med={med:9.3e} max={max:9.3e}"
                );
            }
        }
    }
}
