//! Constructive sign-prescribed Tverberg partitions via the tensor lift and
//! colourful Carathéodory.
//!
//! Each point `a_i` is lifted to `b_i = (a_i, 1)`, or `b_i = -(a_i, 1)` when
//! `i` is in the prescribed set `M`, and then to the colour class
//! `S_i = { v_j ⊗ b_i : j in 0..r }` in `R^{n-1}`, where `v_0, ..., v_{r-1}`
//! are the [`CompanionSimplex`] vectors. Every `S_i` has the origin as its
//! barycentre, so a transversal with the origin in its hull exists; the
//! pivoting search finds one, and the colour choice `j(i)` is the partition.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{tensor, RVec, Rat};
use crate::minnorm::min_norm_point;
use crate::search::{index_set, is_separated};
use crate::tverberg::{AffineCertificate, Partition, PointConfig};

/// `r` vectors in `R^{r-1}` whose only linear dependences are the multiples
/// of `v_0 + ... + v_{r-1} = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompanionSimplex {
    vectors: Vec<RVec>,
}

impl CompanionSimplex {
    pub fn vectors(&self) -> &[RVec] {
        &self.vectors
    }

    pub fn r(&self) -> usize {
        self.vectors.len()
    }
}

/// `e_1, ..., e_{r-1}` and `-(e_1 + ... + e_{r-1})`.
pub fn companion_simplex(r: usize) -> Result<CompanionSimplex> {
    if r < 2 {
        return Err(Error::Precondition("companion simplex needs r >= 2".into()));
    }
    let mut vectors: Vec<RVec> = (0..r - 1)
        .map(|j| {
            let mut e = RVec::zeros(r - 1);
            e[j] = Rat::one();
            e
        })
        .collect();
    vectors.push(RVec::new(vec![-Rat::one(); r - 1]));
    Ok(CompanionSimplex { vectors })
}

/// The lifted colour classes for one configuration and prescribed set.
#[derive(Clone, Debug)]
pub struct LiftedSystem {
    config: PointConfig,
    m_set: Vec<usize>,
    in_m: Vec<bool>,
    /// `sets[i][j] = v_j ⊗ b_i`.
    sets: Vec<Vec<RVec>>,
}

impl LiftedSystem {
    pub fn sets(&self) -> &[Vec<RVec>] {
        &self.sets
    }

    pub fn config(&self) -> &PointConfig {
        &self.config
    }

    pub fn m_set(&self) -> &[usize] {
        &self.m_set
    }

    pub fn in_m(&self, i: usize) -> bool {
        self.in_m[i]
    }

    /// `b_i`: `(a_i, 1)`, negated for `i` in `M`.
    pub fn signed_point(&self, i: usize) -> RVec {
        let b = self.config.point(i).extended(Rat::one());
        if self.in_m[i] {
            -&b
        } else {
            b
        }
    }
}

/// Builds the colour classes `S_i`.
pub fn lift(config: &PointConfig, m_set: &[usize]) -> Result<LiftedSystem> {
    config.require_full()?;
    let n = config.n();
    let m_set = index_set(m_set, n)?;
    let simplex = companion_simplex(config.r())?;
    let mut in_m = vec![false; n];
    for &i in &m_set {
        in_m[i] = true;
    }
    let mut ls = LiftedSystem {
        config: config.clone(),
        m_set,
        in_m,
        sets: Vec::with_capacity(n),
    };
    for i in 0..n {
        let b = ls.signed_point(i);
        let set: Vec<RVec> = simplex.vectors().iter().map(|v| tensor(v, &b)).collect();
        debug_assert!(set.iter().all(|s| s.dim() == n - 1));
        debug_assert!(set
            .iter()
            .fold(RVec::zeros(n - 1), |acc, s| &acc + s)
            .is_zero());
        ls.sets.push(set);
    }
    Ok(ls)
}

/// One element from each colour class, with convex weights putting the
/// origin in their hull.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transversal {
    /// `choice[i]` indexes into colour class `i`.
    pub choice: Vec<usize>,
    /// `beta_i >= 0`, summing to one, with `sum beta_i s_i = 0`.
    pub weights: Vec<Rat>,
}

/// State of the pivoting search before a pivot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PivotStep {
    pub iteration: usize,
    pub choice: Vec<usize>,
    /// Minimum-norm point of the current transversal's hull.
    pub w: RVec,
    pub norm_sq: Rat,
    /// `(colour, new element)` swapped in after this step; `None` on the last.
    pub replaced: Option<(usize, usize)>,
}

/// Finds a transversal of `sets` whose convex hull contains the origin.
///
/// Needs at least `D + 1` colour classes in `R^D`, each with the origin in its
/// hull. Starting from `choice[i] = (i + 1) mod |S_i|`, repeatedly compute the
/// minimum-norm point `w` of the current transversal; when `w != 0`, some
/// colour carries zero weight in `w`'s representation, and its element is
/// replaced by the one minimizing `<w, s>` (which is `<= 0`). The hull then
/// contains both `w` and a point of the new segment closer to the origin, so
/// `|w|` strictly decreases and the search terminates.
pub fn colorful_caratheodory(sets: &[Vec<RVec>]) -> Result<(Transversal, Vec<PivotStep>)> {
    let colours = sets.len();
    let dim = sets
        .first()
        .and_then(|s| s.first())
        .map(RVec::dim)
        .ok_or_else(|| Error::Precondition("need at least one nonempty colour class".into()))?;
    if sets.iter().flatten().any(|s| s.dim() != dim) {
        return Err(Error::Dimension("colour classes of mixed dimension".into()));
    }
    if colours < dim + 1 {
        return Err(Error::Precondition(format!(
            "{colours} colour classes in dimension {dim}; need at least {}",
            dim + 1
        )));
    }
    for (i, set) in sets.iter().enumerate() {
        if set.is_empty() || !min_norm_point(set).point.is_zero() {
            return Err(Error::Precondition(format!(
                "origin is not in the hull of colour class {i}"
            )));
        }
    }

    let mut choice: Vec<usize> = (0..colours).map(|i| (i + 1) % sets[i].len()).collect();
    let mut trace = Vec::new();
    for iteration in 0.. {
        let current: Vec<RVec> = choice
            .iter()
            .enumerate()
            .map(|(i, &j)| sets[i][j].clone())
            .collect();
        let mn = min_norm_point(&current);
        let norm_sq = mn.norm_sq();
        if let Some(prev) = trace.last().map(|s: &PivotStep| &s.norm_sq) {
            assert!(norm_sq < *prev, "pivot must strictly decrease the norm");
        }
        if norm_sq.is_zero() {
            trace.push(PivotStep {
                iteration,
                choice: choice.clone(),
                w: mn.point,
                norm_sq,
                replaced: None,
            });
            return Ok((
                Transversal {
                    choice,
                    weights: mn.weights,
                },
                trace,
            ));
        }
        let colour = (0..colours)
            .find(|&i| mn.weights[i].is_zero())
            .expect("a nonzero minimum-norm point leaves some colour unused");
        let (best, value) = sets[colour]
            .iter()
            .enumerate()
            .map(|(j, s)| (j, mn.point.dot(s)))
            .min_by(|a, b| a.1.cmp(&b.1).then(a.0.cmp(&b.0)))
            .expect("nonempty colour class");
        debug_assert!(!value.is_positive());
        trace.push(PivotStep {
            iteration,
            choice: choice.clone(),
            w: mn.point,
            norm_sq,
            replaced: Some((colour, best)),
        });
        choice[colour] = best;
    }
    unreachable!()
}

/// Which sign alternative a certificate realizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Alternative {
    /// Negative coefficients exactly on `M` (`gamma > 0`).
    InM,
    /// Negative coefficients exactly off `M` (`gamma < 0`).
    Complement,
}

impl Alternative {
    pub fn as_str(self) -> &'static str {
        match self {
            Alternative::InM => "in_m",
            Alternative::Complement => "complement",
        }
    }
}

/// What a transversal decodes to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Recovery {
    Certificate {
        partition: Partition,
        certificate: AffineCertificate,
        alternative: Alternative,
    },
    /// The common part sum vanished, for instance because some part came out
    /// empty. Then `part` mixes points of `M` and of its complement whose
    /// hulls share `point`, so `M` is not separated.
    SeparationViolated {
        part: Vec<usize>,
        point: RVec,
        m_weights: Vec<(usize, Rat)>,
        rest_weights: Vec<(usize, Rat)>,
    },
    /// `gamma = 0` with a nonzero common sum; impossible in general position.
    DegenerateGamma { partition: Partition },
}

/// Decodes a transversal into a partition and signed affine coefficients.
pub fn recover(ls: &LiftedSystem, t: &Transversal) -> Result<Recovery> {
    let config = ls.config();
    let (n, d, r) = (config.n(), config.d(), config.r());
    if t.choice.len() != n || t.weights.len() != n || t.choice.iter().any(|&j| j >= r) {
        return Err(Error::Precondition(
            "transversal does not match the lift".into(),
        ));
    }
    let total: Rat = t.weights.iter().sum();
    if !total.is_one() || t.weights.iter().any(Signed::is_negative) {
        return Err(Error::Precondition(
            "transversal weights are not convex".into(),
        ));
    }
    let mut origin = RVec::zeros(n - 1);
    for i in 0..n {
        origin.add_scaled(&t.weights[i], &ls.sets[i][t.choice[i]]);
    }
    if !origin.is_zero() {
        return Err(Error::Precondition(
            "transversal hull misses the origin".into(),
        ));
    }

    let alpha: Vec<Rat> = (0..n)
        .map(|i| {
            if ls.in_m(i) {
                -&t.weights[i]
            } else {
                t.weights[i].clone()
            }
        })
        .collect();
    let mut parts = vec![Vec::new(); r];
    for (i, &j) in t.choice.iter().enumerate() {
        parts[j].push(i);
    }
    // sum_{i in A_j} alpha_i (a_i, 1); identical for every part.
    let sums: Vec<RVec> = parts
        .iter()
        .map(|part| {
            let mut s = RVec::zeros(d + 1);
            for &i in part {
                s.add_scaled(&alpha[i], &config.point(i).extended(Rat::one()));
            }
            s
        })
        .collect();
    assert!(
        sums.windows(2).all(|w| w[0] == w[1]),
        "per-part sums of a valid transversal coincide"
    );

    if sums[0].is_zero() {
        let part = parts
            .iter()
            .find(|p| p.iter().any(|&i| !alpha[i].is_zero()))
            .expect("weights sum to one")
            .clone();
        let gamma: Rat = part
            .iter()
            .filter(|&&i| !ls.in_m(i))
            .map(|&i| &alpha[i])
            .sum();
        debug_assert!(gamma.is_positive());
        let mut point = RVec::zeros(d);
        let mut m_weights = Vec::new();
        let mut rest_weights = Vec::new();
        for &i in &part {
            let w = alpha[i].abs() / &gamma;
            if ls.in_m(i) {
                m_weights.push((i, w));
            } else {
                point.add_scaled(&w, config.point(i));
                rest_weights.push((i, w));
            }
        }
        return Ok(Recovery::SeparationViolated {
            part,
            point,
            m_weights,
            rest_weights,
        });
    }

    let partition = Partition::new(parts, n)?;
    let gamma = sums[0][d].clone();
    if gamma.is_zero() {
        return Ok(Recovery::DegenerateGamma { partition });
    }
    let z: RVec = sums[0].entries()[..d].iter().map(|x| x / &gamma).collect();
    let alpha = alpha.iter().map(|a| a / &gamma).collect();
    let alternative = if gamma.is_positive() {
        Alternative::InM
    } else {
        Alternative::Complement
    };
    Ok(Recovery::Certificate {
        partition,
        certificate: AffineCertificate::new(z, alpha, gamma),
        alternative,
    })
}

/// Result of the full lift, pivot and recovery pipeline.
#[derive(Clone, Debug)]
pub struct PmSolution {
    pub recovery: Recovery,
    /// Whether `conv M` and `conv (A \ M)` are disjoint. When false, the sign
    /// guarantees do not apply.
    pub separated: bool,
    pub transversal: Transversal,
    pub trace: Vec<PivotStep>,
}

/// Finds a partition whose negative coefficients are exactly `m_set`, or
/// exactly its complement.
///
/// For a separated `m_set` of size at most `r - 1` in general position the
/// result is a certificate with [`Alternative::InM`]; for larger separated
/// sets either alternative may come out.
pub fn tverberg_pm(config: &PointConfig, m_set: &[usize]) -> Result<PmSolution> {
    let ls = lift(config, m_set)?;
    let separated = is_separated(config, ls.m_set())?;
    let (transversal, trace) = colorful_caratheodory(ls.sets())?;
    let recovery = recover(&ls, &transversal)?;
    Ok(PmSolution {
        recovery,
        separated,
        transversal,
        trace,
    })
}
