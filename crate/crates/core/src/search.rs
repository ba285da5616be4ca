//! Exhaustive search over proper partitions.
//!
//! Everything here is brute force on purpose: a `NotFound` answer means every
//! proper partition was solved exactly and none matched. The constructive
//! solver in [`crate::sarkaria`] is checked against these results.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{solve_linear, LinearSolution, RMat, RVec, Rat};
use crate::lp::{feasibility, Feasibility};
use crate::tverberg::{
    certificate_violations, intersect_affine_hulls, AffineCertificate, Intersection, Partition,
    PointConfig,
};

/// Iterator over all unordered partitions of `0..n` into exactly `r` nonempty
/// parts of size at most `d+1`.
///
/// Partitions are produced as restricted growth strings: each index joins an
/// existing part or opens the next one, and branches that can no longer be
/// completed are cut. Output order is deterministic.
#[derive(Clone, Debug)]
pub struct ProperPartitions {
    n: usize,
    r: usize,
    cap: usize,
    assign: Vec<usize>,
    sizes: Vec<usize>,
    started: bool,
    done: bool,
}

/// Enumerates proper partitions; see [`ProperPartitions`].
pub fn proper_partitions(n: usize, r: usize, d: usize) -> ProperPartitions {
    ProperPartitions {
        n,
        r,
        cap: d + 1,
        assign: Vec::with_capacity(n),
        sizes: Vec::with_capacity(r),
        started: false,
        done: n == 0 || r == 0 || r > n || n > r * (d + 1),
    }
}

impl ProperPartitions {
    fn blocks(&self) -> usize {
        self.sizes.len()
    }

    /// Can the remaining indices still be placed after the current prefix?
    fn completable(&self) -> bool {
        let rest = self.n - self.assign.len();
        let missing = self.r - self.blocks();
        let room: usize =
            self.sizes.iter().map(|s| self.cap - s).sum::<usize>() + missing * self.cap;
        rest >= missing && rest <= room
    }

    fn place(&mut self, c: usize) {
        if c == self.blocks() {
            self.sizes.push(0);
        }
        self.sizes[c] += 1;
        self.assign.push(c);
    }

    fn unplace(&mut self) -> usize {
        let c = self.assign.pop().expect("nonempty prefix");
        self.sizes[c] -= 1;
        if self.sizes[c] == 0 {
            self.sizes.pop();
        }
        c
    }

    /// Places the next index in the first feasible part numbered `>= from`.
    fn place_from(&mut self, from: usize) -> bool {
        let limit = (self.blocks() + 1).min(self.r);
        for c in from..limit {
            if c < self.blocks() && self.sizes[c] >= self.cap {
                continue;
            }
            self.place(c);
            if self.completable() {
                return true;
            }
            self.unplace();
        }
        false
    }

    /// Backtracks to the deepest index that can move to a later part.
    fn backtrack(&mut self) -> bool {
        while !self.assign.is_empty() {
            let c = self.unplace();
            if self.place_from(c + 1) {
                return true;
            }
        }
        false
    }

    fn descend(&mut self) -> bool {
        while self.assign.len() < self.n {
            if !self.place_from(0) && !self.backtrack() {
                return false;
            }
        }
        true
    }

    fn current(&self) -> Partition {
        let mut parts = vec![Vec::new(); self.r];
        for (i, &c) in self.assign.iter().enumerate() {
            parts[c].push(i);
        }
        Partition::new(parts, self.n).expect("enumerator produces valid partitions")
    }
}

impl Iterator for ProperPartitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        let ok = if self.started {
            self.backtrack() && self.descend()
        } else {
            self.started = true;
            self.descend()
        };
        if ok {
            Some(self.current())
        } else {
            self.done = true;
            None
        }
    }
}

/// A partition with its verified certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Found {
    pub partition: Partition,
    pub certificate: AffineCertificate,
}

/// Outcome of an exhaustive search, with scan diagnostics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    /// `None` means the whole enumeration was scanned without a match.
    pub found: Option<Found>,
    pub partitions_scanned: usize,
    /// Partitions whose system was singular (non-general-position input).
    pub degenerate_skipped: usize,
}

/// Scans proper partitions in enumeration order and returns the first whose
/// certificate satisfies `accept`.
pub fn search_by<F>(config: &PointConfig, mut accept: F) -> Result<SearchOutcome>
where
    F: FnMut(&AffineCertificate) -> bool,
{
    config.require_full()?;
    let mut out = SearchOutcome {
        found: None,
        partitions_scanned: 0,
        degenerate_skipped: 0,
    };
    for partition in proper_partitions(config.n(), config.r(), config.d()) {
        out.partitions_scanned += 1;
        let certificate = match intersect_affine_hulls(config, &partition)? {
            Intersection::Point { certificate, .. } => certificate,
            Intersection::Empty | Intersection::Degenerate => {
                out.degenerate_skipped += 1;
                continue;
            }
        };
        if accept(&certificate) {
            let violations = certificate_violations(config, &partition, &certificate);
            assert!(
                violations.is_empty(),
                "solver produced an invalid certificate: {violations:?}"
            );
            out.found = Some(Found {
                partition,
                certificate,
            });
            break;
        }
    }
    Ok(out)
}

/// First proper partition with exactly `k` strictly negative coefficients.
pub fn search_exact_k(config: &PointConfig, k: usize) -> Result<SearchOutcome> {
    search_by(config, |c| c.negatives.len() == k)
}

/// First proper partition whose negative coefficients are exactly `m_set`.
pub fn search_prescribed(config: &PointConfig, m_set: &[usize]) -> Result<SearchOutcome> {
    let want = index_set(m_set, config.n())?;
    search_by(config, |c| c.negatives == want)
}

/// Sorted, deduplicated index set, checked against `0..n`.
pub(crate) fn index_set(m_set: &[usize], n: usize) -> Result<Vec<usize>> {
    let set: BTreeSet<usize> = m_set.iter().copied().collect();
    if let Some(&i) = set.iter().find(|&&i| i >= n) {
        return Err(Error::Precondition(format!(
            "index {i} out of range 0..{n}"
        )));
    }
    Ok(set.into_iter().collect())
}

/// Result of [`check_separation`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Separation {
    /// `<normal, a> > offset` for every point of `M`, `< offset` for the rest.
    Separated { normal: RVec, offset: Rat },
    /// A point in both convex hulls, with the convex weights on each side
    /// (indexed like the ascending `M` and its complement).
    NotSeparated {
        point: RVec,
        m_weights: Vec<Rat>,
        rest_weights: Vec<Rat>,
    },
}

/// Decides whether `conv M` and `conv (A \ M)` are disjoint via exact LP.
pub fn check_separation(config: &PointConfig, m_set: &[usize]) -> Result<Separation> {
    let n = config.n();
    let d = config.d();
    let m = index_set(m_set, n)?;
    if m.is_empty() || m.len() == n {
        return Err(Error::Precondition(
            "separation needs a nonempty proper subset".into(),
        ));
    }
    let rest: Vec<usize> = (0..n).filter(|i| m.binary_search(i).is_err()).collect();

    // Columns: lambda_i (i in M) then mu_i (i not in M).
    // Rows: sum lambda a - sum mu a = 0, sum lambda = 1, sum mu = 1.
    let mut a = RMat::zeros(d + 2, n);
    for (col, &i) in m.iter().enumerate() {
        for k in 0..d {
            a[(k, col)] = config.point(i)[k].clone();
        }
        a[(d, col)] = Rat::from_integer(1.into());
    }
    for (off, &i) in rest.iter().enumerate() {
        let col = m.len() + off;
        for k in 0..d {
            a[(k, col)] = -&config.point(i)[k];
        }
        a[(d + 1, col)] = Rat::from_integer(1.into());
    }
    let mut b = RVec::zeros(d + 2);
    b[d] = Rat::from_integer(1.into());
    b[d + 1] = Rat::from_integer(1.into());

    match feasibility(&a, &b)? {
        Feasibility::Feasible(x) => {
            let mut x = x.into_entries();
            let rest_weights = x.split_off(m.len());
            let mut point = RVec::zeros(d);
            for (w, &i) in x.iter().zip(&m) {
                point.add_scaled(w, config.point(i));
            }
            Ok(Separation::NotSeparated {
                point,
                m_weights: x,
                rest_weights,
            })
        }
        Feasibility::Infeasible { farkas } => {
            // farkas = (u, t1, t2): <u,a> >= -t1 on M, <u,a> <= t2 off M, t2 < -t1.
            let mut normal: RVec = farkas.entries()[..d].iter().cloned().collect();
            let lead = normal
                .iter()
                .find(|x| !x.is_zero())
                .map(|x| x.abs())
                .expect("a separating functional is nonzero");
            normal = normal.scale(&(Rat::from_integer(1.into()) / lead));
            let value = |i: &usize| normal.dot(config.point(*i));
            let lo = m.iter().map(value).min().expect("M is nonempty");
            let hi = rest
                .iter()
                .map(value)
                .max()
                .expect("complement is nonempty");
            debug_assert!(lo > hi);
            let offset = (lo + hi) / Rat::from_integer(2.into());
            Ok(Separation::Separated { normal, offset })
        }
    }
}

/// `conv M ∩ conv (A \ M) = ∅`, counting `M = ∅` and `M = A` as separated.
pub fn is_separated(config: &PointConfig, m_set: &[usize]) -> Result<bool> {
    let m = index_set(m_set, config.n())?;
    if m.is_empty() || m.len() == config.n() {
        return Ok(true);
    }
    Ok(matches!(
        check_separation(config, &m)?,
        Separation::Separated { .. }
    ))
}

/// Achievable negative-coefficient counts over all Radon bipartitions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadonSpectrum {
    pub achievable: BTreeSet<usize>,
    /// One witness partition per achievable count.
    pub witnesses: BTreeMap<usize, Found>,
    pub partitions_scanned: usize,
    pub degenerate_skipped: usize,
    /// The affine dependence of the points, normalized to end in `1`, when
    /// the last point is not needed to span.
    pub affine_dependence: Option<RVec>,
}

/// Enumerates all bipartitions of `d+2` points and collects the exact
/// negative counts of their certificates.
pub fn radon_spectrum(config: &PointConfig) -> Result<RadonSpectrum> {
    let (d, n) = (config.d(), config.n());
    if config.r() != 2 || n != d + 2 {
        return Err(Error::Config(format!(
            "Radon spectrum needs r = 2 and n = d + 2, got r = {}, n = {n}",
            config.r()
        )));
    }
    let mut out = RadonSpectrum {
        achievable: BTreeSet::new(),
        witnesses: BTreeMap::new(),
        partitions_scanned: 0,
        degenerate_skipped: 0,
        affine_dependence: affine_dependence(config)?,
    };
    for partition in proper_partitions(n, 2, d) {
        out.partitions_scanned += 1;
        match intersect_affine_hulls(config, &partition)? {
            Intersection::Point { certificate, .. } => {
                let k = certificate.negatives.len();
                out.achievable.insert(k);
                out.witnesses.entry(k).or_insert(Found {
                    partition,
                    certificate,
                });
            }
            _ => out.degenerate_skipped += 1,
        }
    }
    Ok(out)
}

/// Coefficients `lambda` with `sum lambda_i (a_i, 1) = 0` and `lambda_{n-1} = 1`.
fn affine_dependence(config: &PointConfig) -> Result<Option<RVec>> {
    let n = config.n();
    let lifted: Vec<RVec> = config
        .points()
        .iter()
        .map(|p| p.extended(Rat::from_integer(1.into())))
        .collect();
    let m = RMat::from_columns(&lifted[..n - 1])?;
    if !m.is_square() {
        return Ok(None);
    }
    Ok(match solve_linear(&m, &-&lifted[n - 1])? {
        LinearSolution::Unique { solution, .. } => {
            Some(solution.extended(Rat::from_integer(1.into())))
        }
        LinearSolution::Singular => None,
    })
}
