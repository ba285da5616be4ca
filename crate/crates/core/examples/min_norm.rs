//! Exact minimum-norm point of a convex hull.

use tverberg_pm::minnorm::min_norm_point;
use tverberg_pm::RVec;

fn main() {
    let sets = [
        vec![RVec::from_ints(&[1, 0]), RVec::from_ints(&[0, 1])],
        vec![
            RVec::from_ints(&[2, 1, 1]),
            RVec::from_ints(&[1, 3, 2]),
            RVec::from_ints(&[3, -1, 2]),
        ],
        vec![
            RVec::from_ints(&[2, 0]),
            RVec::from_ints(&[-1, 1]),
            RVec::from_ints(&[-1, -1]),
        ],
    ];
    for points in &sets {
        let mn = min_norm_point(points);
        let weights: Vec<String> = mn.weights.iter().map(ToString::to_string).collect();
        println!(
            "point {} (|w|^2 = {}), weights {weights:?}",
            mn.point,
            mn.norm_sq()
        );
    }
}
