// Scratch directed-pace variants; removed before release.
use fdo_core::problems::{problem, Problem, ProblemOptions};
use fdo_core::rng::RngHandle;

#[derive(Clone, Copy, Debug, PartialEq)]
enum V {
    SignOnly,       // pace_d = +/- fw (x_d - x*_d), sign from r_d
    SignOnlyBatch,  // same, but x* frozen within an iteration sweep
    MagnitudeR,     // pace_d = fw r_d (x_d - x*_d)
    MagnitudeRwalk, // magnitude variant + fw floor 1e-2
}

struct A {
    x: Vec<f64>,
    f: f64,
    pace: Option<Vec<f64>>,
}

fn run(p: &Problem, v: V, pop: usize, iters: usize, seed: u64, wf: u8) -> f64 {
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

    let floor = if v == V::MagnitudeRwalk { 1e-2 } else { 0.0 };

    for _ in 0..iters {
        let (fx, ff) = (bx.clone(), bf);
        for i in 0..pop {
            let (tx, tf) = if v == V::SignOnlyBatch { (&fx, ff) } else { (&bx, bf) };
            let fw = if agents[i].f == 0.0 {
                0.0
            } else {
                (tf / agents[i].f).abs() - f64::from(wf)
            };
            let directed = fw > floor && fw < 1.0;
            let pace: Vec<f64> = (0..n)
                .map(|d| {
                    let r = rng.levy_r();
                    if directed {
                        match v {
                            V::SignOnly | V::SignOnlyBatch => {
                                if r < 0.0 {
                                    (agents[i].x[d] - tx[d]) * fw * -1.0
                                } else {
                                    (agents[i].x[d] - tx[d]) * fw
                                }
                            }
                            V::MagnitudeR | V::MagnitudeRwalk => (agents[i].x[d] - tx[d]) * fw * r,
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

fn main() {
    for v in [V::SignOnly, V::SignOnlyBatch, V::MagnitudeR, V::MagnitudeRwalk] {
        println!("=== {v:?}");
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
            let finals: Vec<f64> = (0..runs).map(|k| run(&p, v, 30, iters, k, wf)).collect();
            let mean = finals.iter().sum::<f64>() / finals.len() as f64;
            let mut s = finals.clone();
            s.sort_by(f64::total_cmp);
            println!(
                "  {name:5} wf={wf} mean={mean:9.3e} med={:9.3e} max={:9.3e}",
                s[s.len() / 2],
                s[s.len() - 1]
            );
        }
    }
}
