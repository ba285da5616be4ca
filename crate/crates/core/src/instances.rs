//! Seeded instance generators.
//!
//! All randomness comes from `ChaCha8Rng::seed_from_u64`, so equal arguments
//! give identical instances on every platform.

use itertools::Itertools;
use num_traits::{One, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::colored::ColorClasses;
use crate::error::{Error, Result};
use crate::exact::{rank, RMat, RVec, Rat};
use crate::tverberg::{full_size, PointConfig};

/// Attempts before a generator gives up.
pub const MAX_ATTEMPTS: usize = 1000;

const COORD_BOUND: i64 = 1_000_000;
const DENOMINATOR: i64 = 1_000;

fn coordinate(rng: &mut ChaCha8Rng) -> Rat {
    Rat::new(
        rng.gen_range(-COORD_BOUND..=COORD_BOUND).into(),
        DENOMINATOR.into(),
    )
}

fn random_point(rng: &mut ChaCha8Rng, d: usize) -> RVec {
    (0..d).map(|_| coordinate(rng)).collect()
}

/// True when the points are distinct and no `d+1` of them (or all of them,
/// when there are fewer) are affinely dependent.
pub fn in_general_position(points: &[RVec]) -> bool {
    let Some(d) = points.first().map(RVec::dim) else {
        return true;
    };
    let k = (d + 1).min(points.len());
    points.iter().combinations(k).all(|subset| {
        let lifted: Vec<RVec> = subset.iter().map(|p| p.extended(Rat::one())).collect();
        rank(&RMat::from_columns(&lifted).expect("equal dimensions")) == k
    })
}

/// `(r-1)(d+1)+1` random points with coordinates `p / 1000`,
/// `|p| <= 10^6`, resampled until in general position.
pub fn random_config(d: usize, r: usize, seed: u64) -> Result<PointConfig> {
    check_shape(d, r)?;
    let n = full_size(d, r);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let points: Vec<RVec> = (0..n).map(|_| random_point(&mut rng, d)).collect();
        if in_general_position(&points) {
            return PointConfig::new(d, r, points);
        }
    }
    Err(Error::Capacity(format!(
        "no configuration in general position after {MAX_ATTEMPTS} attempts"
    )))
}

/// `(r-1)d+1` random classes of `r` points each, with the union in general
/// position.
pub fn random_color_classes(d: usize, r: usize, seed: u64) -> Result<ColorClasses> {
    check_shape(d, r)?;
    let n = (r - 1) * d + 1;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let points: Vec<RVec> = (0..n * r).map(|_| random_point(&mut rng, d)).collect();
        if in_general_position(&points) {
            let classes = points.chunks(r).map(<[RVec]>::to_vec).collect();
            return ColorClasses::new(d, r, classes);
        }
    }
    Err(Error::Capacity(format!(
        "no colour classes in general position after {MAX_ATTEMPTS} attempts"
    )))
}

fn check_shape(d: usize, r: usize) -> Result<()> {
    if d == 0 || r < 2 {
        return Err(Error::Config(format!(
            "need d >= 1 and r >= 2, got d={d}, r={r}"
        )));
    }
    Ok(())
}

/// Vertex `h` of the standard simplex: the origin for `h = 0`, else `e_h`.
fn vertex(d: usize, h: usize) -> RVec {
    let mut v = RVec::zeros(d);
    if h > 0 {
        v[h - 1] = Rat::one();
    }
    v
}

/// A random point of the box `v + eps [-1, 1]^d`.
fn near(rng: &mut ChaCha8Rng, v: &RVec, eps: &Rat) -> RVec {
    v.iter()
        .map(|x| {
            x + eps
                * Rat::new(
                    rng.gen_range(-DENOMINATOR..=DENOMINATOR).into(),
                    DENOMINATOR.into(),
                )
        })
        .collect()
}

fn clustered(
    d: usize,
    r: usize,
    eps: &Rat,
    seed: u64,
    head: Vec<RVec>,
    sizes: &[usize],
) -> Result<PointConfig> {
    check_shape(d, r)?;
    if !eps.is_positive() {
        return Err(Error::Config(format!("eps must be positive, got {eps}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let mut points = head.clone();
        for (h, &size) in sizes.iter().enumerate() {
            let v = vertex(d, h);
            points.extend((0..size).map(|_| near(&mut rng, &v, eps)));
        }
        if in_general_position(&points) {
            return PointConfig::new(d, r, points);
        }
    }
    Err(Error::Capacity(format!(
        "no clustered configuration in general position after {MAX_ATTEMPTS} attempts"
    )))
}

/// The centroid of the standard simplex (index 0) followed by `r-1` points
/// near each vertex. The prescribed set is the centroid alone, which lies in
/// the hull of the rest.
pub fn example1(d: usize, r: usize, eps: &Rat, seed: u64) -> Result<(PointConfig, Vec<usize>)> {
    check_shape(d, r)?;
    let centroid = RVec::new(vec![Rat::new(1.into(), (d as i64 + 1).into()); d]);
    let config = clustered(d, r, eps, seed, vec![centroid], &vec![r - 1; d + 1])?;
    Ok((config, vec![0]))
}

/// `r` points near the first vertex of the standard simplex (indices
/// `0..r`), then `r-1` near each other vertex. The prescribed set is the
/// first cluster.
pub fn example2(d: usize, r: usize, eps: &Rat, seed: u64) -> Result<(PointConfig, Vec<usize>)> {
    check_shape(d, r)?;
    let mut sizes = vec![r - 1; d + 1];
    sizes[0] = r;
    let config = clustered(d, r, eps, seed, Vec::new(), &sizes)?;
    Ok((config, (0..r).collect()))
}

/// The `k` points maximizing a random integer functional, sorted ascending.
/// The functional is resampled until the `k`-th and `(k+1)`-th values differ,
/// so a hyperplane strictly separates the chosen points from the rest.
pub fn separated_subset(config: &PointConfig, k: usize, seed: u64) -> Result<Vec<usize>> {
    let n = config.n();
    if k > n {
        return Err(Error::Config(format!("subset size {k} exceeds {n} points")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let u: RVec = (0..config.d())
            .map(|_| Rat::from_integer(rng.gen_range(-1000i64..=1000).into()))
            .collect();
        let mut order: Vec<(Rat, usize)> =
            config.points().iter().map(|p| u.dot(p)).zip(0..).collect();
        order.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        if k > 0 && k < n && order[k - 1].0 == order[k].0 {
            continue;
        }
        let mut chosen: Vec<usize> = order[..k].iter().map(|x| x.1).collect();
        chosen.sort_unstable();
        return Ok(chosen);
    }
    Err(Error::Capacity(format!(
        "no separating functional found after {MAX_ATTEMPTS} attempts"
    )))
}

/// Uniformly random subset of `0..n`, sorted.
pub fn random_subset(n: usize, seed: u64) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).filter(|_| rng.gen_bool(0.5)).collect()
}
