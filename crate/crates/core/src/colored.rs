//! Colourful partitions with equal coefficients inside each colour class.
//!
//! Given `n = (r-1)d+1` classes `F_i` of `r` points each, find a partition
//! into `r` parts taking one point of every class, and coefficients `alpha_i`
//! (one per class) with `sum alpha_i = 1` and `sum alpha_i x_{i,j} = z` for
//! every part `j`. The signs of the `alpha_i` split along a chosen set of
//! classes `M`.

use itertools::Itertools;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{solve_linear, tensor, LinearSolution, RMat, RVec, Rat};
use crate::sarkaria::{
    colorful_caratheodory, companion_simplex, CompanionSimplex, PivotStep, Transversal,
};
use crate::search::index_set;

/// Largest `r` for which the `r!` permutation lifts are materialized.
pub const MAX_COLORED_R: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorClasses {
    d: usize,
    r: usize,
    classes: Vec<Vec<RVec>>,
}

impl ColorClasses {
    pub fn new(d: usize, r: usize, classes: Vec<Vec<RVec>>) -> Result<Self> {
        if d == 0 || r < 2 {
            return Err(Error::Config(format!(
                "need d >= 1 and r >= 2, got d={d}, r={r}"
            )));
        }
        let n = (r - 1) * d + 1;
        if classes.len() != n {
            return Err(Error::Config(format!(
                "expected {n} colour classes for d={d}, r={r}, got {}",
                classes.len()
            )));
        }
        for (i, class) in classes.iter().enumerate() {
            if class.len() != r {
                return Err(Error::Config(format!(
                    "class {i} has {} points, expected {r}",
                    class.len()
                )));
            }
            if let Some(p) = class.iter().find(|p| p.dim() != d) {
                return Err(Error::Dimension(format!(
                    "class {i} has a point of dimension {}, expected {d}",
                    p.dim()
                )));
            }
        }
        let all: Vec<&RVec> = classes.iter().flatten().collect();
        if all.iter().sorted().dedup().count() != all.len() {
            return Err(Error::Config(
                "colour classes contain repeated points".into(),
            ));
        }
        Ok(Self { d, r, classes })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[Vec<RVec>] {
        &self.classes
    }

    pub fn class(&self, i: usize) -> &[RVec] {
        &self.classes[i]
    }
}

/// One element `F ⊗ sigma` of the permutation lift.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationPoint {
    pub point: RVec,
    /// `sigma[k]` is the part receiving the class's `k`-th point.
    pub sigma: Vec<usize>,
}

/// `S(F) = { sum_k f_k ⊗ v_{sigma(k)} }` over all permutations, negated when
/// `flip` is set. Permutations are visited in lexicographic order and
/// repeated points keep the first permutation that produced them.
pub fn permutation_lift(
    f: &[RVec],
    flip: bool,
    simplex: &CompanionSimplex,
) -> Result<Vec<PermutationPoint>> {
    let r = simplex.r();
    if f.len() != r {
        return Err(Error::Config(format!(
            "class of {} points for r={r}",
            f.len()
        )));
    }
    if r > MAX_COLORED_R {
        return Err(Error::Capacity(format!(
            "permutation lifts are limited to r <= {MAX_COLORED_R}, got r={r}"
        )));
    }
    let dim = f[0].dim() * (r - 1);
    let mut out: Vec<PermutationPoint> = Vec::new();
    for sigma in (0..r).permutations(r) {
        let mut point = RVec::zeros(dim);
        for (k, &j) in sigma.iter().enumerate() {
            point = &point + &tensor(&f[k], &simplex.vectors()[j]);
        }
        if flip {
            point = -&point;
        }
        if !out.iter().any(|p| p.point == point) {
            out.push(PermutationPoint { point, sigma });
        }
    }
    Ok(out)
}

/// A colourful partition with per-class coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorfulPartition {
    /// `assignment[i][j]` is the index within `F_i` of the point in part `j`.
    pub assignment: Vec<Vec<usize>>,
    pub coefficients: Vec<Rat>,
    pub z: RVec,
}

impl ColorfulPartition {
    /// Relabels parts so that class 0 is assigned in order.
    pub fn canonical(&self) -> ColorfulPartition {
        let r = self.assignment.first().map_or(0, Vec::len);
        let assignment = self
            .assignment
            .iter()
            .map(|row| {
                let mut out = vec![0; r];
                for j in 0..r {
                    out[self.assignment[0][j]] = row[j];
                }
                out
            })
            .collect();
        ColorfulPartition {
            assignment,
            coefficients: self.coefficients.clone(),
            z: self.z.clone(),
        }
    }

    /// Points of part `j` as `(class, index within class)`.
    pub fn part(&self, j: usize) -> Vec<(usize, usize)> {
        self.assignment
            .iter()
            .enumerate()
            .map(|(i, row)| (i, row[j]))
            .collect()
    }
}

/// Sign split of a colourful solution relative to `M`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ColoredAlternative {
    /// Positive on `M`, negative off it.
    MPositive,
    /// Negative on `M`, positive off it.
    MNegative,
}

impl ColoredAlternative {
    pub fn as_str(self) -> &'static str {
        match self {
            ColoredAlternative::MPositive => "m_positive",
            ColoredAlternative::MNegative => "m_negative",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColoredOutcome {
    Colored {
        partition: ColorfulPartition,
        alternative: ColoredAlternative,
    },
    DegenerateGamma {
        assignment: Vec<Vec<usize>>,
    },
}

#[derive(Clone, Debug)]
pub struct ColoredSolution {
    pub outcome: ColoredOutcome,
    pub m_set: Vec<usize>,
    pub transversal: Transversal,
    pub trace: Vec<PivotStep>,
}

/// Finds a colourful partition with equal per-class coefficients whose signs
/// are positive exactly on `m_set` or exactly off it.
pub fn colored_tverberg_pm(cc: &ColorClasses, m_set: &[usize]) -> Result<ColoredSolution> {
    let (n, r) = (cc.n(), cc.r());
    let m_set = index_set(m_set, n)?;
    let in_m: Vec<bool> = (0..n).map(|i| m_set.contains(&i)).collect();
    let simplex = companion_simplex(r)?;
    let lifts: Vec<Vec<PermutationPoint>> = (0..n)
        .map(|i| permutation_lift(cc.class(i), !in_m[i], &simplex))
        .collect::<Result<_>>()?;
    let sets: Vec<Vec<RVec>> = lifts
        .iter()
        .map(|l| l.iter().map(|p| p.point.clone()).collect())
        .collect();
    let (transversal, trace) = colorful_caratheodory(&sets)?;

    let mut assignment = Vec::with_capacity(n);
    for (i, &c) in transversal.choice.iter().enumerate() {
        let sigma = &lifts[i][c].sigma;
        let mut row = vec![0; r];
        for (k, &j) in sigma.iter().enumerate() {
            row[j] = k;
        }
        assignment.push(row);
    }
    let signed: Vec<Rat> = (0..n)
        .map(|i| {
            if in_m[i] {
                transversal.weights[i].clone()
            } else {
                -&transversal.weights[i]
            }
        })
        .collect();
    let gamma: Rat = signed.iter().sum();
    let outcome = if gamma.is_zero() {
        ColoredOutcome::DegenerateGamma { assignment }
    } else {
        let coefficients: Vec<Rat> = signed.iter().map(|s| s / &gamma).collect();
        let mut z = RVec::zeros(cc.d());
        for (i, a) in coefficients.iter().enumerate() {
            z.add_scaled(a, &cc.class(i)[assignment[i][0]]);
        }
        let alternative = if gamma.is_positive() {
            ColoredAlternative::MPositive
        } else {
            ColoredAlternative::MNegative
        };
        ColoredOutcome::Colored {
            partition: ColorfulPartition {
                assignment,
                coefficients,
                z,
            },
            alternative,
        }
    };
    Ok(ColoredSolution {
        outcome,
        m_set,
        transversal,
        trace,
    })
}

/// Result of [`verify_colorful`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorfulCheck {
    pub valid: bool,
    pub violations: Vec<String>,
}

/// Checks the partition structure, `sum alpha_i = 1`, and
/// `sum alpha_i x_{i,j} = z` for every part, exactly.
pub fn verify_colorful(cc: &ColorClasses, cp: &ColorfulPartition) -> ColorfulCheck {
    let (n, r, d) = (cc.n(), cc.r(), cc.d());
    let mut violations = Vec::new();
    if cp.assignment.len() != n || cp.coefficients.len() != n || cp.z.dim() != d {
        violations.push(format!(
            "shape mismatch: {} assignment rows, {} coefficients, z of dim {} for n={n}, d={d}",
            cp.assignment.len(),
            cp.coefficients.len(),
            cp.z.dim()
        ));
        return ColorfulCheck {
            valid: false,
            violations,
        };
    }
    for (i, row) in cp.assignment.iter().enumerate() {
        let mut sorted = row.clone();
        sorted.sort_unstable();
        if sorted != (0..r).collect::<Vec<_>>() {
            violations.push(format!(
                "class {i}: assignment {row:?} is not a permutation of 0..{r}"
            ));
        }
    }
    if !violations.is_empty() {
        return ColorfulCheck {
            valid: false,
            violations,
        };
    }
    let sum: Rat = cp.coefficients.iter().sum();
    if !sum.is_one() {
        violations.push(format!("sum of alpha = {sum}, expected 1"));
    }
    for j in 0..r {
        let mut p = RVec::zeros(d);
        for (i, row) in cp.assignment.iter().enumerate() {
            p.add_scaled(&cp.coefficients[i], &cc.class(i)[row[j]]);
        }
        for k in 0..d {
            if p[k] != cp.z[k] {
                violations.push(format!(
                    "part {j}, coordinate {k}: sum of alpha*x = {}, expected z = {}",
                    p[k], cp.z[k]
                ));
            }
        }
    }
    ColorfulCheck {
        valid: violations.is_empty(),
        violations,
    }
}

/// Every colourful partition (class 0 in order) whose coefficient system has a
/// unique solution, with that solution. Limited to `r!^(n-1) <= 10^6`.
pub fn exhaustive_colorful(cc: &ColorClasses) -> Result<Vec<ColorfulPartition>> {
    let (n, r, d) = (cc.n(), cc.r(), cc.d());
    let perms: Vec<Vec<usize>> = (0..r).permutations(r).collect();
    let total = (perms.len() as f64).powi(n as i32 - 1);
    if total > 1e6 {
        return Err(Error::Capacity(format!(
            "{total} colourful partitions is too many to enumerate"
        )));
    }
    let identity: Vec<usize> = (0..r).collect();
    let mut out = Vec::new();
    for rest in (1..n).map(|_| perms.iter()).multi_cartesian_product() {
        let assignment: Vec<Vec<usize>> = std::iter::once(identity.clone())
            .chain(rest.into_iter().cloned())
            .collect();
        // Unknowns alpha_0..alpha_{n-1}, z; rows: r*d coordinate equations and
        // the coefficient sum.
        let size = r * d + 1;
        debug_assert_eq!(size, n + d);
        let mut m = RMat::zeros(size, size);
        let mut rhs = RVec::zeros(size);
        for j in 0..r {
            for k in 0..d {
                let row = j * d + k;
                for (i, choice) in assignment.iter().enumerate() {
                    m[(row, i)] = cc.class(i)[choice[j]][k].clone();
                }
                m[(row, n + k)] = -Rat::one();
            }
        }
        for i in 0..n {
            m[(size - 1, i)] = Rat::one();
        }
        rhs[size - 1] = Rat::one();
        if let LinearSolution::Unique { solution, .. } = solve_linear(&m, &rhs)? {
            let s = solution.into_entries();
            out.push(ColorfulPartition {
                assignment,
                coefficients: s[..n].to_vec(),
                z: s[n..].iter().cloned().collect(),
            });
        }
    }
    Ok(out)
}
