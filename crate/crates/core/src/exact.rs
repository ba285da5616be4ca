//! Exact rational vectors and matrices, and the fraction-free elimination
//! kernel (determinant, rank, linear solve) everything else is built on.
//!
//! Scalars are [`Rat`] (`num_rational::BigRational`), which is always kept in
//! lowest terms with a positive denominator. Elimination runs over integers:
//! every row is first scaled by the lcm of its denominators, then reduced with
//! Bareiss' fraction-free recurrence so that every intermediate entry is a
//! minor of the scaled matrix.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number in canonical form.
pub type Rat = num_rational::BigRational;

/// Parses a rational literal: a decimal integer `"p"` or a fraction `"p/q"`
/// with `q > 0`. Decimal points and exponents are rejected.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let bad = || Error::RationalLiteral(s.to_string());
    let t = s.trim();
    let int = |p: &str| -> Result<BigInt> {
        let digits = p.strip_prefix(['-', '+']).unwrap_or(p);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        p.parse::<BigInt>().map_err(|_| bad())
    };
    match t.split_once('/') {
        None => Ok(Rat::from_integer(int(t)?)),
        Some((p, q)) => {
            let q = int(q)?;
            if !q.is_positive() || q.to_string().starts_with('+') {
                return Err(bad());
            }
            Ok(Rat::new(int(p)?, q))
        }
    }
}

/// Formats a rational as `"p"` or `"p/q"`.
pub fn rat_to_string(x: &Rat) -> String {
    x.to_string()
}

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Shorthand for `n / d`. Panics if `d == 0`.
pub fn frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// A dense vector of rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RVec(Vec<Rat>);

impl RVec {
    pub fn new(entries: Vec<Rat>) -> Self {
        RVec(entries)
    }

    pub fn zeros(dim: usize) -> Self {
        RVec(vec![Rat::zero(); dim])
    }

    pub fn from_ints(entries: &[i64]) -> Self {
        entries.iter().map(|&x| rat(x)).collect()
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[Rat] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<Rat> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rat> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &RVec) -> Rat {
        assert_eq!(
            self.dim(),
            other.dim(),
            "dot product of mismatched dimensions"
        );
        self.0
            .iter()
            .zip(&other.0)
            .fold(Rat::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn norm_sq(&self) -> Rat {
        self.dot(self)
    }

    pub fn scale(&self, c: &Rat) -> RVec {
        self.0.iter().map(|x| x * c).collect()
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &Rat, other: &RVec) {
        assert_eq!(self.dim(), other.dim(), "axpy of mismatched dimensions");
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a += c * b;
        }
    }

    /// Appends one coordinate, e.g. the homogenizing `1` of `(a, 1)`.
    pub fn extended(&self, last: Rat) -> RVec {
        let mut v = self.0.clone();
        v.push(last);
        RVec(v)
    }
}

impl fmt::Display for RVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<Rat>> for RVec {
    fn from(v: Vec<Rat>) -> Self {
        RVec(v)
    }
}

impl FromIterator<Rat> for RVec {
    fn from_iter<I: IntoIterator<Item = Rat>>(iter: I) -> Self {
        RVec(iter.into_iter().collect())
    }
}

impl Index<usize> for RVec {
    type Output = Rat;
    fn index(&self, i: usize) -> &Rat {
        &self.0[i]
    }
}

impl IndexMut<usize> for RVec {
    fn index_mut(&mut self, i: usize) -> &mut Rat {
        &mut self.0[i]
    }
}

impl Add for &RVec {
    type Output = RVec;
    fn add(self, rhs: &RVec) -> RVec {
        assert_eq!(self.dim(), rhs.dim(), "sum of mismatched dimensions");
        self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect()
    }
}

impl Sub for &RVec {
    type Output = RVec;
    fn sub(self, rhs: &RVec) -> RVec {
        assert_eq!(self.dim(), rhs.dim(), "difference of mismatched dimensions");
        self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect()
    }
}

impl Neg for &RVec {
    type Output = RVec;
    fn neg(self) -> RVec {
        self.0.iter().map(|a| -a).collect()
    }
}

/// Tensor product `u ⊗ b`, flattened row-major: entry `i * q + j` is `u_i b_j`.
pub fn tensor(u: &RVec, b: &RVec) -> RVec {
    u.iter()
        .flat_map(|ui| b.iter().map(move |bj| ui * bj))
        .collect()
}

/// A dense row-major matrix of rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RMat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RMat {
    pub fn new(rows: usize, cols: usize, data: Vec<Rat>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(RMat { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RMat {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RMat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        RMat::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self> {
        RMat::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&x| rat(x)).collect())
                .collect(),
        )
    }

    /// Builds the matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[RVec]) -> Result<Self> {
        let rows = cols.first().map_or(0, RVec::dim);
        if cols.iter().any(|c| c.dim() != rows) {
            return Err(Error::Dimension("columns of unequal length".into()));
        }
        let mut m = RMat::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for i in 0..rows {
                m[(i, j)] = c[i].clone();
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> RVec {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> RMat {
        let mut t = RMat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, x: &RVec) -> Result<RVec> {
        if x.dim() != self.cols {
            return Err(Error::Dimension(format!(
                "{}x{} matrix times vector of dim {}",
                self.rows,
                self.cols,
                x.dim()
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x.iter())
                    .fold(Rat::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    /// The matrix with `v` appended as an extra last column.
    pub fn augmented(&self, v: &RVec) -> Result<RMat> {
        if v.dim() != self.rows {
            return Err(Error::Dimension(format!(
                "cannot append a column of dim {} to {} rows",
                v.dim(),
                self.rows
            )));
        }
        let mut data = Vec::with_capacity(self.rows * (self.cols + 1));
        for i in 0..self.rows {
            data.extend_from_slice(self.row(i));
            data.push(v[i].clone());
        }
        RMat::new(self.rows, self.cols + 1, data)
    }
}

impl Index<(usize, usize)> for RMat {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for RMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: RVec = self.row(i).iter().cloned().collect();
            writeln!(f, "{row}")?;
        }
        Ok(())
    }
}

/// Integer rows obtained by clearing denominators row by row.
struct IntRows {
    rows: Vec<Vec<BigInt>>,
    /// Product of the per-row scale factors.
    scale: BigInt,
}

fn clear_denominators(m: &RMat) -> IntRows {
    let mut scale = BigInt::one();
    let rows = (0..m.rows)
        .map(|i| {
            let row = m.row(i);
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            scale *= &l;
            row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect();
    IntRows { rows, scale }
}

/// Fraction-free row echelon form.
struct Echelon {
    rows: Vec<Vec<BigInt>>,
    /// Column of the pivot in each of the first `rank` rows.
    pivots: Vec<usize>,
    swaps: usize,
}

/// Bareiss elimination restricted to the first `pivot_cols` columns; later
/// columns (an augmented right-hand side) are carried along.
fn bareiss(mut a: Vec<Vec<BigInt>>, pivot_cols: usize) -> Echelon {
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut swaps = 0;
    let mut k = 0;
    for c in 0..pivot_cols {
        if k == nrows {
            break;
        }
        let Some(p) = (k..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        if p != k {
            a.swap(p, k);
            swaps += 1;
        }
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in bottom.iter_mut() {
            for j in c + 1..ncols {
                let num = &pivot_row[c] * &row[j] - &row[c] * &pivot_row[j];
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                row[j] = q;
            }
            row[c] = BigInt::zero();
        }
        prev = a[k][c].clone();
        pivots.push(c);
        k += 1;
    }
    Echelon {
        rows: a,
        pivots,
        swaps,
    }
}

/// Exact rank over the rationals.
pub fn rank(m: &RMat) -> usize {
    let int = clear_denominators(m);
    bareiss(int.rows, m.cols).pivots.len()
}

/// Exact determinant of a square matrix.
pub fn determinant(m: &RMat) -> Result<Rat> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "determinant of a non-square {}x{} matrix",
            m.rows, m.cols
        )));
    }
    let n = m.rows;
    if n == 0 {
        return Ok(Rat::one());
    }
    let int = clear_denominators(m);
    let ech = bareiss(int.rows, n);
    if ech.pivots.len() < n {
        return Ok(Rat::zero());
    }
    let mut det = ech.rows[n - 1][n - 1].clone();
    if ech.swaps % 2 == 1 {
        det = -det;
    }
    Ok(Rat::new(det, int.scale))
}

/// Result of [`solve_linear`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearSolution {
    /// `det != 0`; the solution is unique.
    Unique {
        solution: RVec,
        det: Rat,
    },
    Singular,
}

/// Solves the square system `m x = rhs` exactly.
pub fn solve_linear(m: &RMat, rhs: &RVec) -> Result<LinearSolution> {
    if !m.is_square() || rhs.dim() != m.rows {
        return Err(Error::Dimension(format!(
            "solve needs a square matrix and matching rhs, got {}x{} and {}",
            m.rows,
            m.cols,
            rhs.dim()
        )));
    }
    let n = m.rows;
    if n == 0 {
        return Ok(LinearSolution::Unique {
            solution: RVec::zeros(0),
            det: Rat::one(),
        });
    }
    let int = clear_denominators(&m.augmented(rhs)?);
    let ech = bareiss(int.rows, n);
    if ech.pivots.len() < n {
        return Ok(LinearSolution::Singular);
    }
    let a = &ech.rows;
    let mut x = vec![Rat::zero(); n];
    for i in (0..n).rev() {
        let mut acc = Rat::from_integer(a[i][n].clone());
        for j in i + 1..n {
            acc -= Rat::from_integer(a[i][j].clone()) * &x[j];
        }
        x[i] = acc / Rat::from_integer(a[i][i].clone());
    }
    let mut det = a[n - 1][n - 1].clone();
    if ech.swaps % 2 == 1 {
        det = -det;
    }
    Ok(LinearSolution::Unique {
        solution: RVec(x),
        det: Rat::new(det, int.scale),
    })
}

/// Some solution of a possibly rectangular system `m x = rhs`, if one exists.
/// When the system is underdetermined, free variables are set to zero.
pub fn solve_any(m: &RMat, rhs: &RVec) -> Result<Option<RVec>> {
    if rhs.dim() != m.rows {
        return Err(Error::Dimension(format!(
            "rhs of dim {} for a matrix with {} rows",
            rhs.dim(),
            m.rows
        )));
    }
    let n = m.cols;
    let int = clear_denominators(&m.augmented(rhs)?);
    let ech = bareiss(int.rows, n);
    let r = ech.pivots.len();
    if ech.rows[r..].iter().any(|row| !row[n].is_zero()) {
        return Ok(None);
    }
    let a = &ech.rows;
    let mut x = vec![Rat::zero(); n];
    for (i, &c) in ech.pivots.iter().enumerate().rev() {
        let mut acc = Rat::from_integer(a[i][n].clone());
        for j in c + 1..n {
            acc -= Rat::from_integer(a[i][j].clone()) * &x[j];
        }
        x[c] = acc / Rat::from_integer(a[i][c].clone());
    }
    Ok(Some(RVec(x)))
}
