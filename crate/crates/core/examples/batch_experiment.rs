//! Seeded batch over random configurations, as CSV.
//!
//! Usage: `batch_experiment [d] [r] [k] [trials] [seed]`. The defaults probe
//! `k = 4` for planar configurations of seven points.

use tverberg_pm::batch::{run_batch, BatchSpec, Policy};

fn arg(i: usize, default: u64) -> u64 {
    std::env::args()
        .nth(i)
        .and_then(|s| s.parse().ok())
        .unwrap_or(default)
}

fn main() -> tverberg_pm::Result<()> {
    let spec = BatchSpec {
        d: arg(1, 2) as usize,
        r: arg(2, 3) as usize,
        policy: Policy::ExactK(arg(3, 4) as usize),
        trials: arg(4, 50) as usize,
        seed: arg(5, 0),
    };
    let report = run_batch(&spec)?;
    print!("{}", report.to_csv());
    eprintln!(
        "{}/{} found; outcomes {:?}",
        report.successes(),
        spec.trials,
        report.counts()
    );
    Ok(())
}
