//! Negative-coefficient counts over all Radon partitions of `d+2` points.
//!
//! Usage: `radon_spectrum [max_d] [seeds]`

use std::collections::BTreeMap;

use tverberg_pm::instances::random_config;
use tverberg_pm::search::radon_spectrum;

fn arg(i: usize, default: u64) -> u64 {
    std::env::args()
        .nth(i)
        .and_then(|s| s.parse().ok())
        .unwrap_or(default)
}

fn main() -> tverberg_pm::Result<()> {
    let (max_d, seeds) = (arg(1, 5) as usize, arg(2, 50));
    for d in 1..=max_d {
        let mut tally: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for seed in 0..seeds {
            let s = radon_spectrum(&random_config(d, 2, seed)?)?;
            *tally.entry(s.achievable.into_iter().collect()).or_default() += 1;
        }
        println!("d={d} (floor((d+2)/2) = {}):", (d + 2) / 2);
        for (set, count) in tally {
            println!("  {set:?}: {count}/{seeds}");
        }
    }
    Ok(())
}
