//! Constructive sign-prescribed partition via the tensor lift and colourful
//! Carathéodory pivoting, with the pivot trace.
//!
//! Usage: `prescribed_signs [d] [r] [k] [seed]`

use tverberg_pm::instances::{random_config, separated_subset};
use tverberg_pm::sarkaria::{tverberg_pm, Recovery};
use tverberg_pm::tverberg::{intersect_affine_hulls, Intersection};

fn arg(i: usize, default: u64) -> u64 {
    std::env::args()
        .nth(i)
        .and_then(|s| s.parse().ok())
        .unwrap_or(default)
}

fn main() -> tverberg_pm::Result<()> {
    let (d, r, k, seed) = (
        arg(1, 2) as usize,
        arg(2, 3) as usize,
        arg(3, 2) as usize,
        arg(4, 0),
    );
    let config = random_config(d, r, seed)?;
    let m = separated_subset(&config, k, seed)?;
    println!("d={d} r={r} n={} M={m:?}", config.n());

    let sol = tverberg_pm(&config, &m)?;
    for step in &sol.trace {
        println!(
            "  iteration {}: choice {:?}, |w|^2 = {}",
            step.iteration, step.choice, step.norm_sq
        );
    }
    match &sol.recovery {
        Recovery::Certificate {
            partition,
            certificate,
            alternative,
        } => {
            println!(
                "partition {:?}, alternative {alternative:?}",
                partition.parts()
            );
            println!(
                "negatives {:?}, gamma {}",
                certificate.negatives, certificate.gamma
            );
            if let Intersection::Point {
                certificate: direct,
                ..
            } = intersect_affine_hulls(&config, partition)?
            {
                assert_eq!(direct.alpha, certificate.alpha);
                println!("direct solve agrees: z = {}", direct.z);
            }
        }
        other => println!("{other:?}"),
    }
    Ok(())
}
