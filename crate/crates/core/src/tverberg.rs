//! Point configurations, partitions, and the affine-intersection system.
//!
//! For a partition `A_1, ..., A_r` of the points, the common point `z` of the
//! affine hulls and the coefficients `alpha` solve, for every part `j`,
//!
//! ```text
//!     z = sum_{i in A_j} alpha_i a_i,      1 = sum_{i in A_j} alpha_i.
//! ```
//!
//! [`build_system`] writes this as `M x = b` with `x = (alpha_0..alpha_{n-1},
//! z_1..z_d)`. Each part contributes a block of `d` coordinate rows followed by
//! a row of ones; column `i` holds `a_i` in its part's block, and the last `d`
//! columns hold `-I_d` in every block. `b` has a one in the ones-row of every
//! block. With `n = (r-1)(d+1)+1` points the matrix is square.

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{rank, solve_any, solve_linear, LinearSolution, RMat, RVec, Rat};

/// Number of points in a full Tverberg instance: `(r-1)(d+1)+1`.
pub fn full_size(d: usize, r: usize) -> usize {
    (r - 1) * (d + 1) + 1
}

/// A labeled sequence of distinct rational points in `R^d`, with the number
/// of parts `r` the partitions are taken into.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointConfig {
    d: usize,
    r: usize,
    points: Vec<RVec>,
}

impl PointConfig {
    pub fn new(d: usize, r: usize, points: Vec<RVec>) -> Result<Self> {
        if d == 0 {
            return Err(Error::Config("dimension d must be at least 1".into()));
        }
        if r < 2 {
            return Err(Error::Config("number of parts r must be at least 2".into()));
        }
        if points.is_empty() {
            return Err(Error::Config("configuration has no points".into()));
        }
        if let Some(i) = points.iter().position(|p| p.dim() != d) {
            return Err(Error::Config(format!(
                "point {i} has dimension {}, expected {d}",
                points[i].dim()
            )));
        }
        let mut seen = BTreeSet::new();
        for (i, p) in points.iter().enumerate() {
            if !seen.insert(p) {
                return Err(Error::Config(format!("point {i} is a duplicate")));
            }
        }
        Ok(PointConfig { d, r, points })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> &[RVec] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &RVec {
        &self.points[i]
    }

    /// True when `n = (r-1)(d+1)+1`.
    pub fn is_full(&self) -> bool {
        self.n() == full_size(self.d, self.r)
    }

    pub(crate) fn require_full(&self) -> Result<()> {
        if self.is_full() {
            Ok(())
        } else {
            Err(Error::Config(format!(
                "expected (r-1)(d+1)+1 = {} points for d={}, r={}, got {}",
                full_size(self.d, self.r),
                self.d,
                self.r,
                self.n()
            )))
        }
    }

    /// The same points with a different number of parts.
    pub fn with_parts(&self, r: usize) -> Result<Self> {
        PointConfig::new(self.d, r, self.points.clone())
    }
}

/// An unordered set-partition of point indices, stored canonically: each part
/// sorted ascending, parts ordered by their smallest element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<Vec<usize>>,
}

impl Partition {
    /// Validates that `parts` are nonempty, pairwise disjoint and cover
    /// `0..n`, then canonicalizes.
    pub fn new(mut parts: Vec<Vec<usize>>, n: usize) -> Result<Self> {
        let mut seen = vec![false; n];
        for part in &mut parts {
            if part.is_empty() {
                return Err(Error::Partition("empty part".into()));
            }
            part.sort_unstable();
            for &i in part.iter() {
                if i >= n {
                    return Err(Error::Partition(format!("index {i} out of range 0..{n}")));
                }
                if std::mem::replace(&mut seen[i], true) {
                    return Err(Error::Partition(format!("index {i} appears twice")));
                }
            }
        }
        if let Some(i) = seen.iter().position(|s| !s) {
            return Err(Error::Partition(format!("index {i} is not covered")));
        }
        parts.sort_unstable_by_key(|p| p[0]);
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn num_points(&self) -> usize {
        self.parts.iter().map(Vec::len).sum()
    }

    /// Every part has between 1 and `d+1` elements.
    pub fn is_proper(&self, d: usize) -> bool {
        self.parts.iter().all(|p| !p.is_empty() && p.len() <= d + 1)
    }

    /// Index of the part containing point `i`.
    pub fn part_of(&self, i: usize) -> Option<usize> {
        self.parts.iter().position(|p| p.binary_search(&i).is_ok())
    }

    fn check_against(&self, config: &PointConfig) -> Result<()> {
        if self.num_points() != config.n() {
            return Err(Error::Partition(format!(
                "partition covers {} points, configuration has {}",
                self.num_points(),
                config.n()
            )));
        }
        if self.num_parts() != config.r() {
            return Err(Error::Partition(format!(
                "partition has {} parts, configuration asks for r = {}",
                self.num_parts(),
                config.r()
            )));
        }
        Ok(())
    }
}

/// The intersection point `z` of the affine hulls and the coefficients
/// expressing it inside every part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineCertificate {
    pub z: RVec,
    /// `alpha[i]` is the coefficient of point `i`.
    pub alpha: Vec<Rat>,
    /// Indices with `alpha < 0`, ascending.
    pub negatives: Vec<usize>,
    /// Common per-part coefficient sum before normalization. `1` when the
    /// certificate comes straight from the linear system.
    pub gamma: Rat,
}

impl AffineCertificate {
    pub fn new(z: RVec, alpha: Vec<Rat>, gamma: Rat) -> Self {
        let negatives = alpha
            .iter()
            .enumerate()
            .filter(|(_, a)| a.is_negative())
            .map(|(i, _)| i)
            .collect();
        AffineCertificate {
            z,
            alpha,
            negatives,
            gamma,
        }
    }
}

/// Which coefficients are negative, with zero coefficients reported apart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignPattern {
    pub negative_count: usize,
    pub negative_set: Vec<usize>,
    /// Indices with `alpha == 0`; nonempty only for degenerate input.
    pub zero_set: Vec<usize>,
}

pub fn sign_pattern(cert: &AffineCertificate) -> SignPattern {
    let mut negative_set = Vec::new();
    let mut zero_set = Vec::new();
    for (i, a) in cert.alpha.iter().enumerate() {
        if a.is_negative() {
            negative_set.push(i);
        } else if a.is_zero() {
            zero_set.push(i);
        }
    }
    SignPattern {
        negative_count: negative_set.len(),
        negative_set,
        zero_set,
    }
}

/// Builds the pair `(M, b)`. `M` has `r(d+1)` rows and `n+d` columns.
pub fn build_system(config: &PointConfig, partition: &Partition) -> Result<(RMat, RVec)> {
    partition.check_against(config)?;
    let (d, n, r) = (config.d(), config.n(), config.r());
    let rows = r * (d + 1);
    let mut m = RMat::zeros(rows, n + d);
    let mut b = RVec::zeros(rows);
    for (j, part) in partition.parts().iter().enumerate() {
        let base = j * (d + 1);
        for &i in part {
            let a = config.point(i);
            for k in 0..d {
                m[(base + k, i)] = a[k].clone();
            }
            m[(base + d, i)] = Rat::one();
        }
        for k in 0..d {
            m[(base + k, n + k)] = -Rat::one();
        }
        b[base + d] = Rat::one();
    }
    Ok((m, b))
}

/// Classification of `⋂_j aff A_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Intersection {
    /// A single point. `det` is `det M` when `M` is square.
    Point {
        certificate: AffineCertificate,
        det: Option<Rat>,
    },
    /// `rank M < rank M*`: the affine hulls have no common point.
    Empty,
    /// Consistent but underdetermined; only possible for degenerate input.
    Degenerate,
}

/// Solves the affine-intersection system for `partition` and classifies it.
/// The partition need not be proper.
pub fn intersect_affine_hulls(config: &PointConfig, partition: &Partition) -> Result<Intersection> {
    let (m, b) = build_system(config, partition)?;
    let n = config.n();
    let split = |x: RVec| {
        let mut x = x.into_entries();
        let z = RVec::new(x.split_off(n));
        AffineCertificate::new(z, x, Rat::one())
    };
    if m.is_square() {
        if let LinearSolution::Unique { solution, det } = solve_linear(&m, &b)? {
            return Ok(Intersection::Point {
                certificate: split(solution),
                det: Some(det),
            });
        }
    }
    let rank_m = rank(&m);
    if rank_m < rank(&m.augmented(&b)?) {
        return Ok(Intersection::Empty);
    }
    if rank_m == m.cols() {
        let x = solve_any(&m, &b)?.expect("consistent system has a solution");
        return Ok(Intersection::Point {
            certificate: split(x),
            det: None,
        });
    }
    Ok(Intersection::Degenerate)
}

/// Re-checks a certificate against the configuration and partition by direct
/// substitution. Returns one message per violated equation; empty means valid.
pub fn certificate_violations(
    config: &PointConfig,
    partition: &Partition,
    cert: &AffineCertificate,
) -> Vec<String> {
    let mut out = Vec::new();
    if partition.num_points() != config.n() {
        out.push(format!(
            "partition covers {} points, configuration has {}",
            partition.num_points(),
            config.n()
        ));
        return out;
    }
    if cert.alpha.len() != config.n() {
        out.push(format!(
            "alpha has {} entries, configuration has {} points",
            cert.alpha.len(),
            config.n()
        ));
        return out;
    }
    if cert.z.dim() != config.d() {
        out.push(format!(
            "z has dimension {}, expected {}",
            cert.z.dim(),
            config.d()
        ));
        return out;
    }
    for (j, part) in partition.parts().iter().enumerate() {
        let sum: Rat = part.iter().map(|&i| &cert.alpha[i]).sum();
        if !sum.is_one() {
            out.push(format!("part {j}: sum of alpha = {sum}, expected 1"));
        }
        let mut comb = RVec::zeros(config.d());
        for &i in part {
            comb.add_scaled(&cert.alpha[i], config.point(i));
        }
        for k in 0..config.d() {
            if comb[k] != cert.z[k] {
                out.push(format!(
                    "part {j}, coordinate {k}: sum of alpha*a = {}, but z = {}",
                    comb[k], cert.z[k]
                ));
            }
        }
    }
    let expected = AffineCertificate::new(cert.z.clone(), cert.alpha.clone(), Rat::one()).negatives;
    if expected != cert.negatives {
        out.push(format!(
            "negatives {:?} do not match the indices with negative alpha {:?}",
            cert.negatives, expected
        ));
    }
    out
}
