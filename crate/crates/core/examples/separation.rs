//! Exact separation test with hyperplane or common-point witnesses.

use tverberg_pm::instances::random_config;
use tverberg_pm::search::{check_separation, Separation};
use tverberg_pm::{PointConfig, RVec};

fn report(config: &PointConfig, m: &[usize]) -> tverberg_pm::Result<()> {
    match check_separation(config, m)? {
        Separation::Separated { normal, offset } => {
            println!("M = {m:?}: separated by <{normal}, x> = {offset}")
        }
        Separation::NotSeparated { point, .. } => {
            println!("M = {m:?}: hulls meet at {point}")
        }
    }
    Ok(())
}

fn main() -> tverberg_pm::Result<()> {
    let line = PointConfig::new(
        1,
        2,
        vec![
            RVec::from_ints(&[0]),
            RVec::from_ints(&[1]),
            RVec::from_ints(&[2]),
        ],
    )?;
    report(&line, &[2])?;
    report(&line, &[1])?;

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
    report(&square, &[0, 1])?;
    report(&square, &[0, 3])?;

    let config = random_config(2, 3, 5)?;
    report(&config, &[0, 1])?;
    Ok(())
}
