//! Verification sweeps over all special weights in a box.
//!
//! Each weight is checked independently, so the sweep is a pure map over
//! the weight list followed by a reduction. With the `parallel` feature the
//! map runs on rayon; without it [`verify_sweep`] falls back to the
//! sequential loop. Both paths return the same report, failures in
//! enumeration order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::characters::verify_theorem;
use crate::weights::{is_typical, special_weights, SuperWeight};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepReport {
    pub total: usize,
    pub typical: usize,
    pub atypical: usize,
    pub failures: Vec<SuperWeight>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn from_outcomes(outcomes: Vec<(SuperWeight, bool)>) -> Self {
        let mut report = SweepReport::default();
        for (w, ok) in outcomes {
            report.total += 1;
            if is_typical(&w) {
                report.typical += 1;
            } else {
                report.atypical += 1;
            }
            if !ok {
                report.failures.push(w);
            }
        }
        report
    }
}

/// The default per-weight check: three-route equality. Errors count as
/// failures.
pub fn theorem_holds(w: &SuperWeight) -> bool {
    verify_theorem(w).unwrap_or(false)
}

pub fn verify_sweep_sequential(m: usize, bound: i64) -> SweepReport {
    sweep_sequential_with(m, bound, theorem_holds)
}

/// Parallel when the `parallel` feature is on, sequential otherwise.
pub fn verify_sweep(m: usize, bound: i64) -> SweepReport {
    sweep_with(m, bound, theorem_holds)
}

pub fn sweep_sequential_with<F>(m: usize, bound: i64, check: F) -> SweepReport
where
    F: Fn(&SuperWeight) -> bool,
{
    let outcomes = special_weights(m, bound)
        .into_iter()
        .map(|w| {
            let ok = check(&w);
            (w, ok)
        })
        .collect();
    SweepReport::from_outcomes(outcomes)
}

#[cfg(feature = "parallel")]
pub fn sweep_with<F>(m: usize, bound: i64, check: F) -> SweepReport
where
    F: Fn(&SuperWeight) -> bool + Sync,
{
    let outcomes = special_weights(m, bound)
        .into_par_iter()
        .map(|w| {
            let ok = check(&w);
            (w, ok)
        })
        .collect();
    SweepReport::from_outcomes(outcomes)
}

#[cfg(not(feature = "parallel"))]
pub fn sweep_with<F>(m: usize, bound: i64, check: F) -> SweepReport
where
    F: Fn(&SuperWeight) -> bool + Sync,
{
    sweep_sequential_with(m, bound, check)
}

/// Runs `f` on a pool of `jobs` worker threads. `None` or `Some(0)` keeps
/// the global pool; without the `parallel` feature `f` runs inline.
#[cfg(feature = "parallel")]
pub fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    let pool = jobs
        .filter(|&n| n > 0)
        .and_then(|n| rayon::ThreadPoolBuilder::new().num_threads(n).build().ok());
    match pool {
        Some(pool) => pool.install(f),
        None => f(),
    }
}

#[cfg(not(feature = "parallel"))]
pub fn with_jobs<T: Send>(_jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    f()
}
