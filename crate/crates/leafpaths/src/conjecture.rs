//! Small-scale audits of the open questions: minimizing the pair-length
//! count of bounded sequences, and measuring spectra against the
//! bounded-path-length benchmark.

use crate::enumeration::{enumerate_13_trees, CanonicalCode};
use crate::exec::{fold_ranges, map_chunked};
use crate::intmath::ceil_log2;
use crate::spectrum::leaf_spectrum_opts;
use crate::tree::Tree;
use crate::witness::{theorem2_witness, Theorem2Result};
use crate::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// Number of distinct values a_i + a_j + (j - i) over pairs i < j. These
/// are exactly the pairwise leaf distances of the sequence embedding minus
/// the spine-only ones, so minimizing it probes how small a spectrum the
/// embedding can have.
pub fn conjecture_c_value(a: &[u64]) -> Result<usize> {
    if a.len() < 2 {
        return Err(Error::InvalidParameter {
            name: "seq",
            value: format!("{} entries", a.len()),
            reason: "pair lengths need at least two entries".into(),
        });
    }
    let mut set: BTreeSet<u128> = BTreeSet::new();
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            set.insert(a[i] as u128 + a[j] as u128 + (j - i) as u128);
        }
    }
    Ok(set.len())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchMode {
    Exhaustive,
    Random,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjCMinResult {
    pub n: usize,
    pub cap: u64,
    pub mode: SearchMode,
    pub searched: u64,
    pub min_value: usize,
    pub argmin: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

fn check_min_params(n: usize, budget_name: &'static str, budget: u64) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidParameter {
            name: "n",
            value: n.to_string(),
            reason: "sequences need at least two entries".into(),
        });
    }
    if budget == 0 {
        return Err(Error::InvalidParameter {
            name: budget_name,
            value: "0".into(),
            reason: "must be positive".into(),
        });
    }
    Ok(())
}

type Best = (usize, Vec<u64>);

fn keep_min(best: &mut Option<Best>, value: usize, seq: &[u64]) {
    let better = match best {
        Some((v, _)) => value < *v,
        None => true,
    };
    if better {
        *best = Some((value, seq.to_vec()));
    }
}

fn merge_best(left: Option<Best>, right: Option<Best>) -> Option<Best> {
    match (left, right) {
        (Some(l), Some(r)) => Some(if l.0 <= r.0 { l } else { r }),
        (l, r) => l.or(r),
    }
}

/// Scans all (cap+1)^n sequences in lexicographic order; the reported
/// argmin is the lexicographically first minimizer regardless of the
/// worker count, because ranks are split into contiguous chunks and ties
/// merge leftward.
pub fn conjecture_c_min_exhaustive(
    n: usize,
    cap: u64,
    budget: u64,
    workers: usize,
) -> Result<ConjCMinResult> {
    check_min_params(n, "budget", budget)?;
    let base = cap as u128 + 1;
    let mut total: u128 = 1;
    for _ in 0..n {
        total = total.saturating_mul(base);
        if total > budget as u128 {
            return Err(Error::WorkLimitExceeded {
                work: total,
                limit: budget as u128,
                what: "exhaustive sequence scan",
            });
        }
    }
    let total = total as u64;
    let mut powers = vec![1u64; n];
    for i in (0..n - 1).rev() {
        powers[i] = powers[i + 1] * (cap + 1);
    }
    let best = fold_ranges(
        total,
        workers,
        |range| {
            let mut best: Option<Best> = None;
            let mut seq = vec![0u64; n];
            for rank in range {
                for (slot, &p) in seq.iter_mut().zip(&powers) {
                    *slot = (rank / p) % (cap + 1);
                }
                let value = conjecture_c_value(&seq).expect("length checked");
                keep_min(&mut best, value, &seq);
            }
            best
        },
        merge_best,
    )
    .flatten()
    .ok_or_else(|| Error::internal("empty exhaustive scan"))?;
    Ok(ConjCMinResult {
        n,
        cap,
        mode: SearchMode::Exhaustive,
        searched: total,
        min_value: best.0,
        argmin: best.1,
        seed: None,
    })
}

/// Draws `samples` sequences. Sample i uses its own seeded stream, so the
/// draw at each index never depends on how indices are split across
/// workers; ties keep the smallest sample index.
pub fn conjecture_c_min_random(
    n: usize,
    cap: u64,
    samples: u64,
    seed: u64,
    workers: usize,
) -> Result<ConjCMinResult> {
    check_min_params(n, "samples", samples)?;
    let best = fold_ranges(
        samples,
        workers,
        |range| {
            let mut best: Option<Best> = None;
            let mut seq = vec![0u64; n];
            for i in range {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                rng.set_stream(i);
                for slot in seq.iter_mut() {
                    *slot = rng.gen_range(0..=cap);
                }
                let value = conjecture_c_value(&seq).expect("length checked");
                keep_min(&mut best, value, &seq);
            }
            best
        },
        merge_best,
    )
    .flatten()
    .ok_or_else(|| Error::internal("empty sample scan"))?;
    Ok(ConjCMinResult {
        n,
        cap,
        mode: SearchMode::Random,
        searched: samples,
        min_value: best.0,
        argmin: best.1,
        seed: Some(seed),
    })
}

/// How much of the window [0, max_len] a tree's spectrum covers, with the
/// length-bound witness procedure run at max_len when its preconditions
/// hold and a skip reason otherwise.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConjBReport {
    pub n: usize,
    pub max_len: usize,
    pub count: usize,
    pub ratio: f64,
    pub diameter: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorem2: Option<Theorem2Result>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorem2_skipped: Option<String>,
}

pub fn conjecture_b_report(
    t: &Tree,
    max_len: usize,
    work_limit: u64,
    workers: usize,
) -> Result<ConjBReport> {
    let spectrum = leaf_spectrum_opts(t, work_limit, workers)?;
    let diameter = spectrum.max().unwrap_or(0);
    let count = spectrum.clamp(max_len).len();
    let degree_two = (0..t.n()).find(|&v| t.degree(v) == 2);
    let (theorem2, theorem2_skipped) = if max_len == 0 {
        (None, Some("witness procedure needs a positive length bound".to_string()))
    } else if diameter < max_len {
        (None, Some(format!("no path of length {max_len}: diameter is {diameter}")))
    } else if let Some(v) = degree_two {
        (None, Some(format!("vertex {v} has degree 2")))
    } else {
        (Some(theorem2_witness(t, max_len)?), None)
    };
    Ok(ConjBReport {
        n: t.n(),
        max_len,
        count,
        ratio: count as f64 / (max_len + 1) as f64,
        diameter,
        theorem2,
        theorem2_skipped,
    })
}

/// One exhaustive check of the spectrum lower bound over all 1-3 tree
/// classes of a given order: with l leaves every spectrum must have at
/// least ceil(log2(l)) lengths.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AuditRow {
    pub n: usize,
    pub classes: usize,
    pub min_spectrum_size: usize,
    pub spectrum_lower_bound: usize,
    pub min_spectrum_code: CanonicalCode,
    pub violations: usize,
}

pub fn theorem1_audit_row(n: usize, work_limit: u64, workers: usize) -> Result<AuditRow> {
    let classes = enumerate_13_trees(n)?;
    let sizes: Vec<Result<usize>> = map_chunked(&classes, workers, |(_, t)| {
        Ok(leaf_spectrum_opts(t, work_limit, 1)?.len())
    });
    let sizes: Vec<usize> = sizes.into_iter().collect::<Result<_>>()?;
    let leaves = (n + 2) / 2;
    let bound = ceil_log2(leaves as u128) as usize;
    let violations = sizes.iter().filter(|&&s| s < bound).count();
    let mut best: Option<(usize, usize)> = None; // (size, class index)
    for (idx, &s) in sizes.iter().enumerate() {
        if best.is_none() || s < best.unwrap().0 {
            best = Some((s, idx));
        }
    }
    let (min_size, min_idx) = best.ok_or_else(|| Error::internal("no classes enumerated"))?;
    Ok(AuditRow {
        n,
        classes: classes.len(),
        min_spectrum_size: min_size,
        spectrum_lower_bound: bound,
        min_spectrum_code: classes[min_idx].0.clone(),
        violations,
    })
}

pub fn theorem1_audit(max_n: usize, work_limit: u64, workers: usize) -> Result<Vec<AuditRow>> {
    if max_n < 2 {
        return Err(Error::InvalidParameter {
            name: "max_n",
            value: max_n.to_string(),
            reason: "audit needs at least the order-2 level".into(),
        });
    }
    (2..=max_n).step_by(2).map(|n| theorem1_audit_row(n, work_limit, workers)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{perfect_regular_extremal, subdivided_star};
    use crate::spectrum::DEFAULT_WORK_LIMIT;
    use crate::witness::lemma8_guarantee;

    #[test]
    fn pair_length_count() {
        assert_eq!(conjecture_c_value(&[0, 0]).unwrap(), 1);
        // (0,1): 4, (0,2): 6, (1,2): 6.
        assert_eq!(conjecture_c_value(&[1, 2, 3]).unwrap(), 2);
        assert!(conjecture_c_value(&[5]).is_err());
    }

    #[test]
    fn exhaustive_matches_brute_force() {
        let n = 4;
        let cap = 2u64;
        let mut best: Option<(usize, Vec<u64>)> = None;
        let base = cap + 1;
        for rank in 0..base.pow(n as u32) {
            let seq: Vec<u64> =
                (0..n).map(|i| (rank / base.pow((n - 1 - i) as u32)) % base).collect();
            let v = conjecture_c_value(&seq).unwrap();
            if best.is_none() || v < best.as_ref().unwrap().0 {
                best = Some((v, seq));
            }
        }
        let r = conjecture_c_min_exhaustive(n, cap, 1_000_000, 1).unwrap();
        let (bv, bs) = best.unwrap();
        assert_eq!(r.min_value, bv);
        assert_eq!(r.argmin, bs);
        assert_eq!(r.searched, 81);
    }

    #[test]
    fn exhaustive_minima_frozen() {
        let r = conjecture_c_min_exhaustive(6, 2, 1_000_000, 2).unwrap();
        assert_eq!(r.min_value, 3);
        assert_eq!(r.argmin, vec![0, 1, 0, 1, 0, 1]);
        let r = conjecture_c_min_exhaustive(5, 2, 1_000_000, 1).unwrap();
        assert_eq!(r.min_value, 2);
        assert_eq!(r.argmin, vec![0, 1, 0, 1, 0]);
    }

    #[test]
    fn exhaustive_worker_invariance() {
        let one = conjecture_c_min_exhaustive(5, 2, 1_000_000, 1).unwrap();
        for workers in [2, 3, 7] {
            assert_eq!(conjecture_c_min_exhaustive(5, 2, 1_000_000, workers).unwrap(), one);
        }
    }

    #[test]
    fn exhaustive_budget_enforced() {
        let err = conjecture_c_min_exhaustive(10, 9, 1_000, 1).unwrap_err();
        assert!(matches!(err, Error::WorkLimitExceeded { .. }));
    }

    #[test]
    fn random_worker_and_seed_determinism() {
        let one = conjecture_c_min_random(6, 3, 500, 42, 1).unwrap();
        for workers in [2, 5] {
            assert_eq!(conjecture_c_min_random(6, 3, 500, 42, workers).unwrap(), one);
        }
        assert_eq!(one.seed, Some(42));
        assert!(one.min_value >= conjecture_c_min_exhaustive(6, 3, 10_000, 1).unwrap().min_value);
    }

    #[test]
    fn minimum_respects_shift_set_guarantee() {
        // A shift set of size s yields s - 1 distinct pair lengths from its
        // anchor, so the true minimum cannot fall below guarantee - 1.
        for (n, cap) in [(4usize, 2u64), (5, 2), (6, 1), (6, 2)] {
            let r = conjecture_c_min_exhaustive(n, cap, 1_000_000, 2).unwrap();
            assert!(r.min_value >= lemma8_guarantee(n, cap.max(1)) - 1, "n={n} cap={cap}");
        }
    }

    #[test]
    fn benchmark_report_on_tight_tree() {
        let t = perfect_regular_extremal(3, 2, 1 << 20).unwrap();
        let r = conjecture_b_report(&t, 4, DEFAULT_WORK_LIMIT, 1).unwrap();
        assert_eq!(r.diameter, 4);
        assert_eq!(r.count, 3);
        assert!((r.ratio - 0.6).abs() < 1e-12);
        assert!(r.theorem2.is_some());
        assert!(r.theorem2_skipped.is_none());

        // Bound below the diameter: the window shrinks but the witness
        // procedure still applies.
        let r = conjecture_b_report(&t, 3, DEFAULT_WORK_LIMIT, 1).unwrap();
        assert_eq!(r.count, 2);
        assert!((r.ratio - 0.5).abs() < 1e-12);
        assert!(r.theorem2.is_some());

        // Bound above the diameter: no path that long, so only coverage.
        let r = conjecture_b_report(&t, 10, DEFAULT_WORK_LIMIT, 1).unwrap();
        assert_eq!(r.count, 3);
        assert_eq!(r.theorem2_skipped.as_deref(), Some("no path of length 10: diameter is 4"));

        let r = conjecture_b_report(&t, 0, DEFAULT_WORK_LIMIT, 1).unwrap();
        assert_eq!(r.count, 1);
        assert!((r.ratio - 1.0).abs() < 1e-12);
        assert!(r.theorem2.is_none());
        assert!(r.theorem2_skipped.is_some());
    }

    #[test]
    fn benchmark_report_skips_degree_two() {
        // Diameter 5, spectrum {0, 2, 5}, chain vertices of degree 2.
        let t = subdivided_star(7, 3).unwrap();
        let r = conjecture_b_report(&t, 5, DEFAULT_WORK_LIMIT, 1).unwrap();
        assert_eq!(r.count, 3);
        assert_eq!(r.diameter, 5);
        assert!(r.theorem2.is_none());
        assert!(r.theorem2_skipped.unwrap().contains("degree 2"));
    }

    #[test]
    fn audit_rows_clean_through_ten() {
        let rows = theorem1_audit(10, DEFAULT_WORK_LIMIT, 2).unwrap();
        assert_eq!(rows.len(), 5);
        for row in &rows {
            assert_eq!(row.violations, 0, "n={}", row.n);
            assert!(row.min_spectrum_size >= row.spectrum_lower_bound);
        }
        let last = &rows[4];
        assert_eq!(last.n, 10);
        assert_eq!(last.classes, 2);
        assert_eq!(last.min_spectrum_size, 3);
        assert_eq!(last.spectrum_lower_bound, 3);
    }
}
