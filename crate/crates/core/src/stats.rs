//! Descriptive statistics over replications and the Wilcoxon rank-sum test.

use statrs::function::erf::erf;

use crate::error::{Error, Result};

/// Pooled sample size up to which the exact rank-sum distribution is
/// enumerated; larger samples use the normal approximation.
pub const EXACT_LIMIT: usize = 14;

/// Mean and sample standard deviation of one replication batch.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampleSummary {
    pub mean: f64,
    /// Sample standard deviation (n - 1 denominator); 0 for a single sample.
    pub std: f64,
    pub n: usize,
}

pub fn summarize(samples: &[f64]) -> Result<SampleSummary> {
    if samples.is_empty() {
        return Err(Error::invalid("cannot summarize an empty sample"));
    }
    let n = samples.len();
    let mean = samples.iter().sum::<f64>() / n as f64;
    let std = if n == 1 {
        0.0
    } else {
        let var = samples.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (n - 1) as f64;
        var.sqrt()
    };
    Ok(SampleSummary { mean, std, n })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WilcoxonMethod {
    Exact,
    NormalApprox,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WilcoxonResult {
    /// Rank sum of the first sample, with average ranks for ties.
    pub rank_sum: f64,
    /// Two-sided p-value.
    pub p_value: f64,
    pub method: WilcoxonMethod,
}

/// Two-sided Wilcoxon rank-sum test.
///
/// Ties receive average ranks. With a pooled size of at most [`EXACT_LIMIT`]
/// the p-value comes from full enumeration of the rank-sum distribution;
/// beyond that, from the normal approximation with tie and continuity
/// corrections.
pub fn wilcoxon_rank_sum(a: &[f64], b: &[f64]) -> Result<WilcoxonResult> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::invalid("rank-sum test requires two non-empty samples"));
    }
    if a.iter().chain(b).any(|v| !v.is_finite()) {
        return Err(Error::invalid("rank-sum test requires finite samples"));
    }

    let n = a.len();
    let m = b.len();
    let total = n + m;
    let ranks = average_ranks(a, b);
    let rank_sum: f64 = ranks[..n].iter().sum();
    let mu = n as f64 * (total as f64 + 1.0) / 2.0;
    let deviation = (rank_sum - mu).abs();

    if total <= EXACT_LIMIT {
        let (extreme, count) = enumerate_tail(&ranks, n, mu, deviation);
        return Ok(WilcoxonResult {
            rank_sum,
            p_value: extreme as f64 / count as f64,
            method: WilcoxonMethod::Exact,
        });
    }

    // Tie-corrected variance of the rank sum.
    let tie_term: f64 = tie_counts(&ranks)
        .into_iter()
        .map(|t| {
            let t = t as f64;
            t * t * t - t
        })
        .sum();
    let nf = n as f64;
    let mf = m as f64;
    let tf = total as f64;
    let var = nf * mf / 12.0 * ((tf + 1.0) - tie_term / (tf * (tf - 1.0)));
    if var <= 0.0 {
        // Every pooled value tied: the statistic is degenerate.
        return Ok(WilcoxonResult {
            rank_sum,
            p_value: 1.0,
            method: WilcoxonMethod::NormalApprox,
        });
    }
    let continuity = (deviation - 0.5).max(0.0);
    let z = continuity / var.sqrt();
    let p = (2.0 * (1.0 - normal_cdf(z))).clamp(0.0, 1.0);
    Ok(WilcoxonResult {
        rank_sum,
        p_value: p,
        method: WilcoxonMethod::NormalApprox,
    })
}

/// Average ranks of the pooled sample, first sample's entries first.
fn average_ranks(a: &[f64], b: &[f64]) -> Vec<f64> {
    let pooled: Vec<f64> = a.iter().chain(b).copied().collect();
    let mut order: Vec<usize> = (0..pooled.len()).collect();
    order.sort_by(|&i, &j| pooled[i].total_cmp(&pooled[j]));

    let mut ranks = vec![0.0; pooled.len()];
    let mut i = 0;
    while i < order.len() {
        let mut j = i + 1;
        while j < order.len() && pooled[order[j]] == pooled[order[i]] {
            j += 1;
        }
        // positions i..j (0-based) share the average of ranks i+1..=j
        let avg = (i + j + 1) as f64 / 2.0;
        for k in i..j {
            ranks[order[k]] = avg;
        }
        i = j;
    }
    ranks
}

/// Sizes of the tie groups in a rank assignment.
fn tie_counts(ranks: &[f64]) -> Vec<usize> {
    let mut sorted: Vec<f64> = ranks.to_vec();
    sorted.sort_by(f64::total_cmp);
    let mut counts = Vec::new();
    let mut i = 0;
    while i < sorted.len() {
        let mut j = i + 1;
        while j < sorted.len() && sorted[j] == sorted[i] {
            j += 1;
        }
        counts.push(j - i);
        i = j;
    }
    counts
}

/// Walks every size-`n` subset of the pooled ranks, counting assignments whose
/// rank-sum deviation from `mu` is at least `deviation`. Rank sums are exact
/// dyadic rationals, so the comparison needs no epsilon.
fn enumerate_tail(ranks: &[f64], n: usize, mu: f64, deviation: f64) -> (u64, u64) {
    fn walk(
        ranks: &[f64],
        start: usize,
        remaining: usize,
        partial: f64,
        mu: f64,
        deviation: f64,
        extreme: &mut u64,
        count: &mut u64,
    ) {
        if remaining == 0 {
            *count += 1;
            if (partial - mu).abs() >= deviation {
                *extreme += 1;
            }
            return;
        }
        // not enough elements left
        if ranks.len() - start < remaining {
            return;
        }
        walk(
            ranks,
            start + 1,
            remaining - 1,
            partial + ranks[start],
            mu,
            deviation,
            extreme,
            count,
        );
        walk(ranks, start + 1, remaining, partial, mu, deviation, extreme, count);
    }

    let mut extreme = 0;
    let mut count = 0;
    walk(ranks, 0, n, 0.0, mu, deviation, &mut extreme, &mut count);
    (extreme, count)
}

fn normal_cdf(z: f64) -> f64 {
    0.5 * (1.0 + erf(z / std::f64::consts::SQRT_2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    #[test]
    fn summary_hand_values() {
        let s = summarize(&[3.0, 3.0, 3.0]).unwrap();
        assert_eq!((s.mean, s.std, s.n), (3.0, 0.0, 3));
        let s = summarize(&[1.0, 2.0, 3.0]).unwrap();
        assert_abs_diff_eq!(s.mean, 2.0);
        assert_abs_diff_eq!(s.std, 1.0);
        let s = summarize(&[7.47e-21]).unwrap();
        assert_eq!((s.mean, s.std, s.n), (7.47e-21, 0.0, 1));
        assert!(summarize(&[]).is_err());
    }

    #[test]
    fn identical_samples_give_p_one() {
        let r = wilcoxon_rank_sum(&[5.0, 5.0, 5.0], &[5.0, 5.0, 5.0]).unwrap();
        assert_eq!(r.p_value, 1.0);
        assert_eq!(r.method, WilcoxonMethod::Exact);
    }

    #[test]
    fn separated_triples_give_one_tenth() {
        // the two one-sided extremes out of C(6,3) = 20 assignments
        let r = wilcoxon_rank_sum(&[1.0, 2.0, 3.0], &[4.0, 5.0, 6.0]).unwrap();
        assert_abs_diff_eq!(r.p_value, 0.1, epsilon = 1e-15);
        assert_eq!(r.rank_sum, 6.0);
    }

    #[test]
    fn large_identical_samples_hit_the_degenerate_normal_path() {
        let a = vec![2.0; 30];
        let r = wilcoxon_rank_sum(&a, &a).unwrap();
        assert_eq!(r.method, WilcoxonMethod::NormalApprox);
        assert_eq!(r.p_value, 1.0);
    }

    #[test]
    fn location_shift_is_detected_at_thirty_runs() {
        let a: Vec<f64> = (0..30).map(|i| i as f64 * 0.01).collect();
        let b: Vec<f64> = a.iter().map(|v| v + 10.0).collect();
        let r = wilcoxon_rank_sum(&a, &b).unwrap();
        assert_eq!(r.method, WilcoxonMethod::NormalApprox);
        assert!(r.p_value < 0.05, "p = {}", r.p_value);
    }

    #[test]
    fn empty_and_non_finite_inputs_are_rejected() {
        assert!(wilcoxon_rank_sum(&[], &[1.0]).is_err());
        assert!(wilcoxon_rank_sum(&[1.0], &[]).is_err());
        assert!(wilcoxon_rank_sum(&[f64::NAN], &[1.0]).is_err());
        assert!(wilcoxon_rank_sum(&[1.0], &[f64::INFINITY]).is_err());
    }

    #[test]
    fn ties_share_average_ranks() {
        let ranks = average_ranks(&[1.0, 2.0, 2.0], &[2.0, 3.0]);
        assert_eq!(ranks, vec![1.0, 3.0, 3.0, 3.0, 5.0]);
    }

    proptest! {
        #[test]
        fn p_values_are_symmetric_and_in_range(
            a in prop::collection::vec(-100i32..100, 1..8),
            b in prop::collection::vec(-100i32..100, 1..8),
        ) {
            let a: Vec<f64> = a.into_iter().map(f64::from).collect();
            let b: Vec<f64> = b.into_iter().map(f64::from).collect();
            let ab = wilcoxon_rank_sum(&a, &b).unwrap();
            let ba = wilcoxon_rank_sum(&b, &a).unwrap();
            prop_assert!((0.0..=1.0).contains(&ab.p_value));
            prop_assert!((ab.p_value - ba.p_value).abs() < 1e-12);
        }

        #[test]
        fn normal_path_is_symmetric_too(
            a in prop::collection::vec(-100i32..100, 12..20),
            b in prop::collection::vec(-100i32..100, 12..20),
        ) {
            let a: Vec<f64> = a.into_iter().map(f64::from).collect();
            let b: Vec<f64> = b.into_iter().map(f64::from).collect();
            let ab = wilcoxon_rank_sum(&a, &b).unwrap();
            let ba = wilcoxon_rank_sum(&b, &a).unwrap();
            prop_assert_eq!(ab.method, WilcoxonMethod::NormalApprox);
            prop_assert!((ab.p_value - ba.p_value).abs() < 1e-12);
        }
    }
}
