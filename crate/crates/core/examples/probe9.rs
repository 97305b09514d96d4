// Scratch mixture-with-atom scan + origin A/B; removed before release.
use fdo_core::problems::{problem, Problem, ProblemOptions};
use fdo_core::pso::{self, PsoParams};
use fdo_core::rng::RngHandle;

struct A {
    x: Vec<f64>,
    f: f64,
    pace: Option<Vec<f64>>,
}

#[derive(Clone, Copy, Debug)]
struct Map {
    base: f64,
    p_full: f64,
    decades: f64,
}

fn scale(rng: &mut RngHandle, m: Map) -> f64 {
    if rng.uniform01() < m.p_full {
        1.0
    } else {
        10f64.powf(-m.decades * rng.uniform01())
    }
}

enum Obj {
    Registry(Problem),
    Sphere { n: usize, lo: f64, hi: f64 },
    Schwefel22 { n: usize, lo: f64, hi: f64 },
}

impl Obj {
    fn dim(&self) -> usize {
        match self {
            Obj::Registry(p) => p.dimension(),
            Obj::Sphere { n, .. } | Obj::Schwefel22 { n, .. } => *n,
        }
    }
    fn bounds(&self, d: usize) -> (f64, f64) {
        match self {
            Obj::Registry(p) => (p.lower()[d], p.upper()[d]),
            Obj::Sphere { lo, hi, .. } | Obj::Schwefel22 { lo, hi, .. } => (*lo, *hi),
        }
    }
    fn eval(&self, x: &mut [f64], rng: &mut RngHandle) -> f64 {
        match self {
            Obj::Registry(p) => {
                p.clamp_into_bounds(x);
                p.evaluate(x, rng).unwrap()
            }
            Obj::Sphere { lo, hi, .. } => {
                for v in x.iter_mut() {
                    *v = v.clamp(*lo, *hi);
                }
                x.iter().map(|v| v * v).sum()
            }
            Obj::Schwefel22 { lo, hi, .. } => {
                for v in x.iter_mut() {
                    *v = v.clamp(*lo, *hi);
                }
                let s: f64 = x.iter().map(|v| v.abs()).sum();
                let p: f64 = x.iter().map(|v| v.abs()).product();
                s + p
            }
        }
    }
}

fn run(p: &Obj, m: Map, pop: usize, iters: usize, seed: u64, wf: u8) -> f64 {
    let n = p.dim();
    let mut rng = RngHandle::new(seed);
    let mut agents: Vec<A> = (0..pop)
        .map(|_| {
            let mut x: Vec<f64> = (0..n)
                .map(|d| {
                    let (lo, hi) = p.bounds(d);
                    rng.uniform(lo, hi).unwrap()
                })
                .collect();
            let f = p.eval(&mut x, &mut rng);
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
            let directed = fw > 0.0 && fw < 1.0;
            let s = scale(&mut rng, m);
            let rs: Vec<f64> = (0..n)
                .map(|_| (rng.levy_step() * s / m.base).clamp(-1.0, 1.0))
                .collect();
            let pace: Vec<f64> = (0..n)
                .map(|d| {
                    if directed {
                        if rs[d] < 0.0 {
                            (agents[i].x[d] - fx[d]) * fw * -1.0
                        } else {
                            (agents[i].x[d] - fx[d]) * fw
                        }
                    } else {
                        agents[i].x[d] * rs[d]
                    }
                })
                .collect();
            let mut cand: Vec<f64> = agents[i].x.iter().zip(&pace).map(|(a, b)| a + b).collect();
            let cf = p.eval(&mut cand, &mut rng);
            if cf < agents[i].f {
                let applied: Vec<f64> = cand.iter().zip(&agents[i].x).map(|(c, x)| c - x).collect();
                agents[i].x = cand;
                agents[i].f = cf;
                agents[i].pace = Some(applied);
            } else if let Some(prev) = agents[i].pace.clone() {
                let mut cand2: Vec<f64> =
                    agents[i].x.iter().zip(&prev).map(|(a, b)| a + b).collect();
                let cf2 = p.eval(&mut cand2, &mut rng);
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
    for m in [
        Map { base: 2.0, p_full: 0.5, decades: 9.0 },
        Map { base: 2.0, p_full: 0.5, decades: 12.0 },
        Map { base: 2.0, p_full: 0.75, decades: 12.0 },
        Map { base: 2.0, p_full: 0.25, decades: 12.0 },
    ] {
        println!("=== batch, base={}, p_full={}, decades={}", m.base, m.p_full, m.decades);
        for (name, wf, iters) in [
            ("tf1", 0, 500),
            ("tf10", 0, 500),
            ("tf2", 0, 500),
            ("tf2", 1, 500),
            ("tf14", 0, 500),
            ("fm", 0, 200),
        ] {
            let p = Obj::Registry(problem(name, &ProblemOptions::default()).unwrap());
            let runs = if name == "fm" { 10 } else { 30 };
            let finals: Vec<f64> = (0..runs).map(|k| run(&p, m, 30, iters, k, wf)).collect();
            let (mean, med, max) = stats(&finals);
            println!("  {name:5} wf={wf} mean={mean:9.3e} med={med:9.3e} max={max:9.3e}");
        }
    }

    // Origin-optimum A/B: same machinery on unshifted landscapes.
    println!("=== origin A/B (batch, base=2, p_full=0.5, decades=12)");
    let m = Map { base: 2.0, p_full: 0.5, decades: 12.0 };
    let sphere = Obj::Sphere { n: 10, lo: -100.0, hi: 100.0 };
    let finals: Vec<f64> = (0..30).map(|k| run(&sphere, m, 30, 500, k, 0)).collect();
    let (mean, med, max) = stats(&finals);
    println!("  sphere@origin  fdo wf=0 mean={mean:9.3e} med={med:9.3e} max={max:9.3e}");

    let sch = Obj::Schwefel22 { n: 10, lo: -10.0, hi: 10.0 };
    for wf in [0, 1] {
        let finals: Vec<f64> = (0..30).map(|k| run(&sch, m, 30, 500, k, wf)).collect();
        let (mean, med, max) = stats(&finals);
        println!("  schwefel22@origin fdo wf={wf} mean={mean:9.3e} med={med:9.3e} max={max:9.3e}");
    }

    // PSO on the registry tf1 for reference (shifted).
    let p = problem("tf1", &ProblemOptions::default()).unwrap();
    let finals: Vec<f64> = (0..30)
        .map(|k| {
            pso::run(&p, &PsoParams { population_size: 30, max_iterations: 500, ..Default::default() }, k, false)
                .unwrap()
                .best_fitness
        })
        .collect();
    let (mean, med, max) = stats(&finals);
    println!("  tf1 shifted pso mean={mean:9.3e} med={med:9.3e} max={max:9.3e}");
}
