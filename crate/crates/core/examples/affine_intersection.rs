//! Intersecting the affine hulls of a partition's parts.
//!
//! Usage: `affine_intersection [d] [r] [seed]`

use tverberg_pm::instances::random_config;
use tverberg_pm::search::proper_partitions;
use tverberg_pm::tverberg::{intersect_affine_hulls, sign_pattern, Intersection, Partition};
use tverberg_pm::{PointConfig, RVec};

fn arg(i: usize, default: u64) -> u64 {
    std::env::args()
        .nth(i)
        .and_then(|s| s.parse().ok())
        .unwrap_or(default)
}

fn show(config: &PointConfig, p: &Partition) -> tverberg_pm::Result<()> {
    match intersect_affine_hulls(config, p)? {
        Intersection::Point { certificate, det } => {
            let sp = sign_pattern(&certificate);
            println!(
                "{:?}: z = {}, det = {}, negatives = {:?}",
                p.parts(),
                certificate.z,
                det.map_or("-".into(), |d| d.to_string()),
                sp.negative_set
            );
        }
        other => println!("{:?}: {other:?}", p.parts()),
    }
    Ok(())
}

fn main() -> tverberg_pm::Result<()> {
    let (d, r, seed) = (arg(1, 2) as usize, arg(2, 2) as usize, arg(3, 0));
    let config = random_config(d, r, seed)?;
    println!(
        "random configuration d={d} r={r} seed={seed}, n={}",
        config.n()
    );
    for p in proper_partitions(config.n(), r, d).take(6) {
        show(&config, &p)?;
    }

    println!("\nunit square (not in general position):");
    let square = PointConfig::new(
        2,
        2,
        vec![
            RVec::from_ints(&[0, 0]),
            RVec::from_ints(&[1, 0]),
            RVec::from_ints(&[0, 1]),
            RVec::from_ints(&[1, 1]),
        ],
    )?;
    for p in proper_partitions(4, 2, 2) {
        show(&square, &p)?;
    }

    println!("\ntoo few points:");
    let pair = PointConfig::new(1, 2, vec![RVec::from_ints(&[0]), RVec::from_ints(&[1])])?;
    show(&pair, &Partition::new(vec![vec![0], vec![1]], 2)?)
}
