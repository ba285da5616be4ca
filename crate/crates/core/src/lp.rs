//! Exact feasibility of `A x = b, x >= 0` by phase-1 simplex with Bland's
//! rule. Infeasible systems come back with a Farkas certificate.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{RMat, RVec, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Feasibility {
    /// A nonnegative solution of `A x = b`.
    Feasible(RVec),
    /// `y` with `yᵀA >= 0` componentwise and `yᵀb < 0`.
    Infeasible { farkas: RVec },
}

/// Decides whether `A x = b` has a solution with `x >= 0`.
pub fn feasibility(a: &RMat, b: &RVec) -> Result<Feasibility> {
    let (m, n) = (a.rows(), a.cols());
    if b.dim() != m {
        return Err(Error::Dimension(format!(
            "rhs of dim {} for {m} constraints",
            b.dim()
        )));
    }
    // Tableau columns: n structural, m artificial, then the rhs.
    let width = n + m + 1;
    let mut flipped = vec![false; m];
    let mut tab: Vec<Vec<Rat>> = (0..m)
        .map(|i| {
            flipped[i] = b[i].is_negative();
            let s = if flipped[i] { -Rat::one() } else { Rat::one() };
            let mut row: Vec<Rat> = a.row(i).iter().map(|x| x * &s).collect();
            row.extend((0..m).map(|k| if k == i { Rat::one() } else { Rat::zero() }));
            row.push(&b[i] * &s);
            row
        })
        .collect();
    let mut basis: Vec<usize> = (n..n + m).collect();

    // Reduced costs of the phase-1 objective (sum of artificials); the last
    // entry holds minus the current objective value.
    let mut cost = vec![Rat::zero(); width];
    for row in &tab {
        for j in 0..n {
            cost[j] -= &row[j];
        }
        cost[width - 1] -= &row[width - 1];
    }

    while let Some(enter) = (0..n + m).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<(usize, Rat)> = None;
        for (i, row) in tab.iter().enumerate() {
            if !row[enter].is_positive() {
                continue;
            }
            let ratio = &row[width - 1] / &row[enter];
            let better = match &leave {
                None => true,
                Some((l, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*l]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        // The phase-1 objective is bounded below by zero, so a pivot row exists.
        let (p, _) = leave.expect("phase-1 simplex cannot be unbounded");
        pivot(&mut tab, &mut cost, p, enter);
        basis[p] = enter;
    }

    let optimum = -&cost[width - 1];
    if optimum.is_zero() {
        let mut x = RVec::zeros(n);
        for (i, &var) in basis.iter().enumerate() {
            if var < n {
                x[var] = tab[i][width - 1].clone();
            }
        }
        return Ok(Feasibility::Feasible(x));
    }
    // Simplex multipliers of the flipped system are 1 - (reduced cost of the
    // artificial); they satisfy yᵀA <= 0 and yᵀb = optimum > 0.
    let farkas = (0..m)
        .map(|i| {
            let y = Rat::one() - &cost[n + i];
            if flipped[i] {
                y
            } else {
                -y
            }
        })
        .collect();
    Ok(Feasibility::Infeasible { farkas })
}

fn pivot(tab: &mut [Vec<Rat>], cost: &mut [Rat], p: usize, q: usize) {
    let inv = Rat::one() / &tab[p][q];
    for x in tab[p].iter_mut() {
        *x *= &inv;
    }
    let prow = tab[p].clone();
    for (i, row) in tab.iter_mut().enumerate() {
        if i == p || row[q].is_zero() {
            continue;
        }
        let f = row[q].clone();
        for (x, y) in row.iter_mut().zip(&prow) {
            *x -= &f * y;
        }
    }
    if !cost[q].is_zero() {
        let f = cost[q].clone();
        for (x, y) in cost.iter_mut().zip(&prow) {
            *x -= &f * y;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn feasible_solution_satisfies_constraints() {
        let a = RMat::from_int_rows(&[&[1, 1, 0], &[0, 1, 1]]).unwrap();
        let b = RVec::from_ints(&[2, 3]);
        let Feasibility::Feasible(x) = feasibility(&a, &b).unwrap() else {
            panic!("expected feasible");
        };
        assert_eq!(a.mul_vec(&x).unwrap(), b);
        assert!(x.iter().all(|v| !v.is_negative()));
    }

    #[test]
    fn infeasible_gives_farkas_certificate() {
        // x1 + x2 = -1 with x >= 0.
        let a = RMat::from_int_rows(&[&[1, 1]]).unwrap();
        let b = RVec::from_ints(&[-1]);
        let Feasibility::Infeasible { farkas } = feasibility(&a, &b).unwrap() else {
            panic!("expected infeasible");
        };
        let ya = a.transpose().mul_vec(&farkas).unwrap();
        assert!(ya.iter().all(|v| !v.is_negative()));
        assert!(farkas.dot(&b) < rat(0));
    }

    #[test]
    fn degenerate_rows_and_negative_rhs() {
        let a = RMat::from_int_rows(&[&[1, -1, 0], &[2, -2, 0], &[0, 0, 1]]).unwrap();
        let b = RVec::from_ints(&[-1, -2, 0]);
        let Feasibility::Feasible(x) = feasibility(&a, &b).unwrap() else {
            panic!("expected feasible");
        };
        assert_eq!(a.mul_vec(&x).unwrap(), b);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn certificates_are_checkable(
                entries in proptest::collection::vec(-3i64..=3, 12),
                rhs in proptest::collection::vec(-3i64..=3, 3),
            ) {
                let a = RMat::new(3, 4, entries.into_iter().map(rat).collect()).unwrap();
                let b = RVec::from_ints(&rhs);
                match feasibility(&a, &b).unwrap() {
                    Feasibility::Feasible(x) => {
                        prop_assert_eq!(a.mul_vec(&x).unwrap(), b);
                        prop_assert!(x.iter().all(|v| !v.is_negative()));
                    }
                    Feasibility::Infeasible { farkas } => {
                        let ya = a.transpose().mul_vec(&farkas).unwrap();
                        prop_assert!(ya.iter().all(|v| !v.is_negative()));
                        prop_assert!(farkas.dot(&b).is_negative());
                    }
                }
            }
        }
    }
}
