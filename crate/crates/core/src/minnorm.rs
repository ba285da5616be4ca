//! Minimum-norm point of a finite point set's convex hull, computed exactly
//! with Wolfe's active-set method.
//!
//! The active set (the "corral") is kept affinely independent. A major cycle
//! adds the point most opposed to the current iterate `x`; minor cycles move
//! toward the affine minimizer of the corral and drop points whose weight
//! reaches zero. In exact arithmetic the iterate norm strictly decreases
//! between major cycles, so the method terminates.

use num_traits::{One, Signed, Zero};

use crate::exact::{solve_linear, LinearSolution, RMat, RVec, Rat};

/// The minimum-norm point `point = sum weights[i] * points[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinNorm {
    pub point: RVec,
    /// Convex weights, one per input point; zero outside `support`.
    pub weights: Vec<Rat>,
    /// Affinely independent subset carrying the positive weights, ascending.
    pub support: Vec<usize>,
}

impl MinNorm {
    pub fn norm_sq(&self) -> Rat {
        self.point.norm_sq()
    }
}

/// Affine minimizer of `aff{points[s] : s in set}`: barycentric coordinates
/// `mu` (summing to one) of the point of least norm in the affine hull.
/// `None` if the set is affinely dependent.
pub(crate) fn affine_minimizer(points: &[RVec], set: &[usize]) -> Option<Vec<Rat>> {
    let k = set.len();
    // [ G  1 ] [mu]   [0]
    // [ 1ᵀ 0 ] [nu] = [1],  G = Gram matrix of the set.
    let mut m = RMat::zeros(k + 1, k + 1);
    for (a, &i) in set.iter().enumerate() {
        for (b, &j) in set.iter().enumerate().skip(a) {
            let g = points[i].dot(&points[j]);
            m[(b, a)] = g.clone();
            m[(a, b)] = g;
        }
        m[(a, k)] = Rat::one();
        m[(k, a)] = Rat::one();
    }
    let mut rhs = RVec::zeros(k + 1);
    rhs[k] = Rat::one();
    match solve_linear(&m, &rhs).expect("square system") {
        LinearSolution::Unique { solution, .. } => {
            let mut mu = solution.into_entries();
            mu.truncate(k);
            Some(mu)
        }
        LinearSolution::Singular => None,
    }
}

fn combine(points: &[RVec], set: &[usize], coeffs: &[Rat]) -> RVec {
    let mut out = RVec::zeros(points[set[0]].dim());
    for (&i, c) in set.iter().zip(coeffs) {
        out.add_scaled(c, &points[i]);
    }
    out
}

/// Computes the minimum-norm point of `conv(points)`.
///
/// # Panics
/// If `points` is empty or the points have different dimensions.
pub fn min_norm_point(points: &[RVec]) -> MinNorm {
    assert!(!points.is_empty(), "min_norm_point of an empty set");
    let dim = points[0].dim();
    assert!(
        points.iter().all(|p| p.dim() == dim),
        "points of mixed dimension"
    );

    let start = (0..points.len())
        .min_by(|&a, &b| points[a].norm_sq().cmp(&points[b].norm_sq()))
        .expect("nonempty");
    let mut set = vec![start];
    let mut lambda = vec![Rat::one()];
    let mut x = points[start].clone();

    loop {
        let xx = x.norm_sq();
        if xx.is_zero() {
            break;
        }
        let (j, xj) = points
            .iter()
            .enumerate()
            .map(|(j, p)| (j, x.dot(p)))
            .min_by(|a, b| a.1.cmp(&b.1))
            .expect("nonempty");
        if xj >= xx {
            break;
        }
        debug_assert!(!set.contains(&j), "improving point already in the corral");
        set.push(j);
        lambda.push(Rat::zero());

        loop {
            let mu = affine_minimizer(points, &set).expect("corral stays affinely independent");
            if mu.iter().all(Signed::is_positive) {
                x = combine(points, &set, &mu);
                lambda = mu;
                break;
            }
            // Step from lambda toward mu until the first weight hits zero.
            let theta = lambda
                .iter()
                .zip(&mu)
                .filter(|(_, m)| !m.is_positive())
                .map(|(l, m)| l / (l - m))
                .min()
                .expect("some coordinate is nonpositive");
            let one_minus = Rat::one() - &theta;
            lambda = lambda
                .iter()
                .zip(&mu)
                .map(|(l, m)| &theta * m + &one_minus * l)
                .collect();
            let keep: Vec<usize> = (0..set.len())
                .filter(|&a| lambda[a].is_positive())
                .collect();
            set = keep.iter().map(|&a| set[a]).collect();
            lambda = keep.iter().map(|&a| lambda[a].clone()).collect();
        }
    }

    let mut weights = vec![Rat::zero(); points.len()];
    let mut order: Vec<usize> = (0..set.len()).collect();
    order.sort_by_key(|&a| set[a]);
    let support: Vec<usize> = order.iter().map(|&a| set[a]).collect();
    for &a in &order {
        weights[set[a]] = lambda[a].clone();
    }
    MinNorm {
        point: x,
        weights,
        support,
    }
}

#[cfg(test)]
pub(crate) mod oracle {
    use super::*;
    use crate::exact::rank;

    /// Brute force: project the origin onto the affine hull of every affinely
    /// independent subset, keep projections inside the subset's hull, and
    /// return the one of least norm.
    pub fn min_norm_brute_force(points: &[RVec]) -> RVec {
        let m = points.len();
        let mut best: Option<RVec> = None;
        for mask in 1u32..(1 << m) {
            let set: Vec<usize> = (0..m).filter(|i| mask >> i & 1 == 1).collect();
            let lifted: Vec<RVec> = set
                .iter()
                .map(|&i| points[i].extended(Rat::one()))
                .collect();
            if rank(&RMat::from_columns(&lifted).unwrap()) < set.len() {
                continue;
            }
            let Some(mu) = affine_minimizer(points, &set) else {
                continue;
            };
            if mu.iter().any(Signed::is_negative) {
                continue;
            }
            let y = combine(points, &set, &mu);
            if best.as_ref().is_none_or(|b| y.norm_sq() < b.norm_sq()) {
                best = Some(y);
            }
        }
        best.expect("singletons are always candidates")
    }
}

#[cfg(test)]
mod tests {
    use super::oracle::min_norm_brute_force;
    use super::*;
    use crate::exact::{frac, rat};

    fn check_representation(points: &[RVec], mn: &MinNorm) {
        let sum: Rat = mn.weights.iter().sum();
        assert_eq!(sum, rat(1));
        assert!(mn.weights.iter().all(|w| !w.is_negative()));
        let mut p = RVec::zeros(points[0].dim());
        for (w, q) in mn.weights.iter().zip(points) {
            p.add_scaled(w, q);
        }
        assert_eq!(p, mn.point);
    }

    #[test]
    fn segment_projection() {
        let pts = vec![RVec::from_ints(&[1, 0]), RVec::from_ints(&[0, 1])];
        let mn = min_norm_point(&pts);
        assert_eq!(mn.point, RVec::new(vec![frac(1, 2), frac(1, 2)]));
        assert_eq!(mn.weights, vec![frac(1, 2), frac(1, 2)]);
    }

    #[test]
    fn origin_in_set() {
        let pts = vec![
            RVec::from_ints(&[3, 1]),
            RVec::zeros(2),
            RVec::from_ints(&[-1, 4]),
        ];
        assert!(min_norm_point(&pts).point.is_zero());
    }

    #[test]
    fn single_point() {
        let p = RVec::new(vec![frac(2, 3), rat(-5)]);
        let mn = min_norm_point(std::slice::from_ref(&p));
        assert_eq!(mn.point, p);
        assert_eq!(mn.support, vec![0]);
    }

    #[test]
    fn origin_inside_triangle() {
        let pts = vec![
            RVec::from_ints(&[2, 0]),
            RVec::from_ints(&[-1, 1]),
            RVec::from_ints(&[-1, -1]),
            RVec::from_ints(&[5, 5]),
        ];
        let mn = min_norm_point(&pts);
        assert!(mn.point.is_zero());
        check_representation(&pts, &mn);
    }

    #[test]
    fn duplicate_points() {
        let pts = vec![
            RVec::from_ints(&[1, 2]),
            RVec::from_ints(&[1, 2]),
            RVec::from_ints(&[2, 1]),
        ];
        let mn = min_norm_point(&pts);
        assert_eq!(mn.point, RVec::new(vec![frac(3, 2), frac(3, 2)]));
        check_representation(&pts, &mn);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn point_set() -> impl Strategy<Value = Vec<RVec>> {
            (1usize..=4, 1usize..=6).prop_flat_map(|(dim, m)| {
                proptest::collection::vec(proptest::collection::vec((-5i64..=5, 1i64..=3), dim), m)
                    .prop_map(|pts| {
                        pts.into_iter()
                            .map(|p| p.into_iter().map(|(a, b)| frac(a, b)).collect())
                            .collect()
                    })
            })
        }

        proptest! {
            #[test]
            fn agrees_with_brute_force(points in point_set()) {
                let mn = min_norm_point(&points);
                prop_assert_eq!(&mn.point, &min_norm_brute_force(&points));
                check_representation(&points, &mn);
                let lifted: Vec<RVec> = mn.support.iter()
                    .map(|&i| points[i].extended(rat(1)))
                    .collect();
                prop_assert_eq!(
                    crate::exact::rank(&RMat::from_columns(&lifted).unwrap()),
                    mn.support.len()
                );
            }
        }
    }
}
