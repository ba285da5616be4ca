//! Exhaustive search for a proper partition with exactly `k` negative
//! coefficients, for every `k` up to `n - r`.
//!
//! Usage: `search_exact_k [d] [r] [seed]`

use tverberg_pm::instances::random_config;
use tverberg_pm::search::search_exact_k;

fn arg(i: usize, default: u64) -> u64 {
    std::env::args()
        .nth(i)
        .and_then(|s| s.parse().ok())
        .unwrap_or(default)
}

fn main() -> tverberg_pm::Result<()> {
    let (d, r, seed) = (arg(1, 2) as usize, arg(2, 3) as usize, arg(3, 0));
    let config = random_config(d, r, seed)?;
    println!("d={d} r={r} n={} seed={seed}", config.n());
    for k in 0..=config.n() - r {
        let out = search_exact_k(&config, k)?;
        match out.found {
            Some(f) => println!(
                "k={k}: {:?} negatives {:?} (after {} partitions)",
                f.partition.parts(),
                f.certificate.negatives,
                out.partitions_scanned
            ),
            None => println!("k={k}: none among {} partitions", out.partitions_scanned),
        }
    }
    Ok(())
}
