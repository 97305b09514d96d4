// Scratch variant comparison; removed before release.
use fdo_core::problems::{problem, Direction, Problem, ProblemOptions};
use fdo_core::rng::RngHandle;

#[derive(Clone, Copy, Debug)]
enum Variant {
    PerDimSign,   // per-dim r, per-dim eq4/eq5 sign
    ScalarSign,   // per-dim r for eq3, one scalar sign for eq4/eq5
    ScalarEvery,  // one scalar r per agent for everything
}

struct A {
    x: Vec<f64>,
    f: f64,
    pace: Option<Vec<f64>>,
}

fn run(p: &Problem, variant: Variant, pop: usize, iters: usize, seed: u64, wf: u8) -> f64 {
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
        for i in 0..pop {
            let fw = if agents[i].f == 0.0 {
                0.0
            } else {
                (bf / agents[i].f).abs() - f64::from(wf)
            };
            let directed = fw > 0.0 && fw < 1.0;
            let pace: Vec<f64> = match variant {
                Variant::PerDimSign => (0..n)
                    .map(|d| {
                        let r = rng.levy_r();
                        if directed {
                            if r < 0.0 {
                                (agents[i].x[d] - bx[d]) * fw * -1.0
                            } else {
                                (agents[i].x[d] - bx[d]) * fw
                            }
                        } else {
                            agents[i].x[d] * r
                        }
                    })
                    .collect(),
                Variant::ScalarSign => {
                    if directed {
                        let r = rng.levy_r();
                        let s = if r < 0.0 { -1.0 } else { 1.0 };
                        (0..n).map(|d| (agents[i].x[d] - bx[d]) * fw * s).collect()
                    } else {
                        (0..n).map(|d| agents[i].x[d] * rng.levy_r()).collect()
                    }
                }
                Variant::ScalarEvery => {
                    let r = rng.levy_r();
                    if directed {
                        let s = if r < 0.0 { -1.0 } else { 1.0 };
                        (0..n).map(|d| (agents[i].x[d] - bx[d]) * fw * s).collect()
                    } else {
                        (0..n).map(|d| agents[i].x[d] * r).collect()
                    }
                }
            };
            // acceptance ladder
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

fn main() {
    assert_eq!(
        problem("tf1", &ProblemOptions::default()).unwrap().direction(),
        Direction::Minimize
    );
    for variant in [Variant::PerDimSign, Variant::ScalarSign, Variant::ScalarEvery] {
        println!("=== {variant:?}");
        for (name, wf) in [("tf1", 0), ("tf10", 0), ("tf2", 0), ("tf2", 1), ("tf14", 0)] {
            let p = problem(name, &ProblemOptions::default()).unwrap();
            let finals: Vec<f64> = (0..30).map(|k| run(&p, variant, 30, 500, k, wf)).collect();
            let mean = finals.iter().sum::<f64>() / finals.len() as f64;
            let mut s = finals.clone();
            s.sort_by(f64::total_cmp);
            println!(
                "  {name:5} wf={wf} mean={mean:9.3e} med={:9.3e} max={:9.3e}",
                s[15], s[29]
            );
        }
    }
}
