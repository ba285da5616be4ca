//! Colourful partitions with one coefficient per colour class.
//!
//! Usage: `colored [d] [r] [seed]`

use tverberg_pm::colored::{
    colored_tverberg_pm, exhaustive_colorful, verify_colorful, ColorClasses, ColoredOutcome,
    ColorfulPartition,
};
use tverberg_pm::instances::{random_color_classes, random_subset};
use tverberg_pm::RVec;

fn arg(i: usize, default: u64) -> u64 {
    std::env::args()
        .nth(i)
        .and_then(|s| s.parse().ok())
        .unwrap_or(default)
}

fn show(cp: &ColorfulPartition) {
    let r = cp.assignment.first().map_or(0, Vec::len);
    for j in 0..r {
        println!("  part {j} (class, point): {:?}", cp.part(j));
    }
    let coeffs: Vec<String> = cp.coefficients.iter().map(ToString::to_string).collect();
    println!("  coefficients {coeffs:?}, z = {}", cp.z);
}

fn main() -> tverberg_pm::Result<()> {
    let line = ColorClasses::new(
        1,
        2,
        vec![
            vec![RVec::from_ints(&[0]), RVec::from_ints(&[4])],
            vec![RVec::from_ints(&[1]), RVec::from_ints(&[3])],
        ],
    )?;
    for m in [vec![], vec![1]] {
        if let ColoredOutcome::Colored {
            partition,
            alternative,
        } = colored_tverberg_pm(&line, &m)?.outcome
        {
            println!("classes {{0,4}}, {{1,3}} with M={m:?}: {alternative:?}");
            show(&partition);
        }
    }
    println!("all colourful partitions:");
    for cp in exhaustive_colorful(&line)? {
        show(&cp);
    }

    let (d, r, seed) = (arg(1, 2) as usize, arg(2, 3) as usize, arg(3, 0));
    let cc = random_color_classes(d, r, seed)?;
    let m = random_subset(cc.n(), seed);
    let sol = colored_tverberg_pm(&cc, &m)?;
    if let ColoredOutcome::Colored {
        partition,
        alternative,
    } = &sol.outcome
    {
        println!(
            "\nd={d} r={r}, {} classes, M={m:?}: {alternative:?}",
            cc.n()
        );
        show(partition);
        println!("  valid: {}", verify_colorful(&cc, partition).valid);
    }
    Ok(())
}
