//! Clustered configurations where a prescription cannot be met.
//!
//! The first puts the simplex centroid among clusters at the vertices; no
//! proper partition makes the centroid alone negative. The second has an
//! `r`-point cluster at one vertex; only its complement can be the negative
//! set.

use tverberg_pm::exact::frac;
use tverberg_pm::instances::{example1, example2};
use tverberg_pm::sarkaria::{tverberg_pm, Recovery};
use tverberg_pm::search::{is_separated, search_prescribed};

fn main() -> tverberg_pm::Result<()> {
    let eps = frac(1, 100);
    let (config, m) = example1(2, 3, &eps, 0)?;
    let out = search_prescribed(&config, &m)?;
    println!(
        "centroid example: separated={}, M={m:?} found={} after {} partitions",
        is_separated(&config, &m)?,
        out.found.is_some(),
        out.partitions_scanned
    );

    let (config, m) = example2(2, 3, &eps, 0)?;
    let complement: Vec<usize> = (0..config.n()).filter(|i| !m.contains(i)).collect();
    println!(
        "cluster example: separated={}, M negative found={}, complement negative found={}",
        is_separated(&config, &m)?,
        search_prescribed(&config, &m)?.found.is_some(),
        search_prescribed(&config, &complement)?.found.is_some()
    );
    if let Recovery::Certificate {
        partition,
        certificate,
        alternative,
    } = tverberg_pm(&config, &m)?.recovery
    {
        println!(
            "pivoting solver: {alternative:?}, partition {:?}, negatives {:?}",
            partition.parts(),
            certificate.negatives
        );
    }
    Ok(())
}
