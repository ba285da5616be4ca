//! Rational parsing, determinants, rank, and exact solves.

use tverberg_pm::exact::{determinant, rank, solve_linear, tensor, LinearSolution};
use tverberg_pm::{parse_rat, RMat, RVec};

fn main() -> tverberg_pm::Result<()> {
    let third = parse_rat("-1/3")?;
    println!("parsed -1/3 -> {third}");
    assert!(parse_rat("0.5").is_err());

    let m = RMat::from_int_rows(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]])?;
    println!("M =\n{m}");
    println!("det M = {}", determinant(&m)?);
    println!("rank M = {}", rank(&m));

    let rhs = RVec::new(vec![parse_rat("1")?, third, parse_rat("5/2")?]);
    if let LinearSolution::Unique { solution, .. } = solve_linear(&m, &rhs)? {
        println!("M x = {rhs} has x = {solution}");
        assert_eq!(m.mul_vec(&solution)?, rhs);
    }

    let u = RVec::from_ints(&[1, -1]);
    let b = RVec::from_ints(&[2, 3, 1]);
    println!("{u} ⊗ {b} = {}", tensor(&u, &b));
    Ok(())
}
