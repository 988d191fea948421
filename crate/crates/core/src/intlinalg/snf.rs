//! Smith normal form with unimodular transforms.
//!
//! Pivot rule: the nonzero entry of smallest absolute value in the remaining
//! submatrix, ties broken by lowest `(row, col)`. The reduction first runs on
//! checked `i64` arithmetic and restarts on `BigInt` if any intermediate
//! value overflows.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use super::matrix::{IntMatrix, Matrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("integer overflow in fixed-width arithmetic")]
pub struct Overflow;

/// Integer arithmetic the reduction needs. Fixed-width implementations report
/// overflow instead of wrapping.
pub trait SnfScalar: Clone + PartialEq + Zero + One {
    fn abs_le(&self, other: &Self) -> bool;
    fn is_negative(&self) -> bool;
    fn try_neg(&self) -> Result<Self, Overflow>;
    /// Quotient rounded toward zero.
    fn try_quot(&self, d: &Self) -> Result<Self, Overflow>;
    fn try_rem_is_zero(&self, d: &Self) -> Result<bool, Overflow>;
    /// `self - q * other`.
    fn try_sub_mul(&self, q: &Self, other: &Self) -> Result<Self, Overflow>;
    fn try_add(&self, other: &Self) -> Result<Self, Overflow>;
}

impl SnfScalar for i64 {
    fn abs_le(&self, other: &Self) -> bool {
        self.unsigned_abs() <= other.unsigned_abs()
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn try_neg(&self) -> Result<Self, Overflow> {
        self.checked_neg().ok_or(Overflow)
    }
    fn try_quot(&self, d: &Self) -> Result<Self, Overflow> {
        self.checked_div(*d).ok_or(Overflow)
    }
    fn try_rem_is_zero(&self, d: &Self) -> Result<bool, Overflow> {
        Ok(self.checked_rem(*d).ok_or(Overflow)? == 0)
    }
    fn try_sub_mul(&self, q: &Self, other: &Self) -> Result<Self, Overflow> {
        q.checked_mul(*other).and_then(|p| self.checked_sub(p)).ok_or(Overflow)
    }
    fn try_add(&self, other: &Self) -> Result<Self, Overflow> {
        self.checked_add(*other).ok_or(Overflow)
    }
}

impl SnfScalar for BigInt {
    fn abs_le(&self, other: &Self) -> bool {
        self.magnitude() <= other.magnitude()
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn try_neg(&self) -> Result<Self, Overflow> {
        Ok(-self)
    }
    fn try_quot(&self, d: &Self) -> Result<Self, Overflow> {
        // BigInt division truncates toward zero
        Ok(self / d)
    }
    fn try_rem_is_zero(&self, d: &Self) -> Result<bool, Overflow> {
        Ok((self % d).is_zero())
    }
    fn try_sub_mul(&self, q: &Self, other: &Self) -> Result<Self, Overflow> {
        Ok(self - q * other)
    }
    fn try_add(&self, other: &Self) -> Result<Self, Overflow> {
        Ok(self + other)
    }
}

/// `u · a · v = d` with `u`, `v` unimodular and `d` in Smith normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SnfResult {
    /// Diagonal entries `d[i][i]` for `i < min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d[(i, i)].clone())
            .collect()
    }

    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        self.diagonal().iter().take_while(|x| !x.is_zero()).count()
    }

    /// Re-verifies every invariant against the input matrix by exact multiplication.
    pub fn check(&self, a: &IntMatrix) -> Result<(), String> {
        if self.u.rows() != a.rows() || self.u.cols() != a.rows() {
            return Err(format!("U has shape {}x{}", self.u.rows(), self.u.cols()));
        }
        if self.v.rows() != a.cols() || self.v.cols() != a.cols() {
            return Err(format!("V has shape {}x{}", self.v.rows(), self.v.cols()));
        }
        if self.u.mul(a).mul(&self.v) != self.d {
            return Err("U·A·V differs from D".into());
        }
        for (name, m) in [("U", &self.u), ("V", &self.v)] {
            if m.determinant().abs() != BigInt::one() {
                return Err(format!("{name} is not unimodular"));
            }
        }
        for i in 0..self.d.rows() {
            for j in 0..self.d.cols() {
                if i != j && !self.d[(i, j)].is_zero() {
                    return Err(format!("D has off-diagonal entry at ({i},{j})"));
                }
            }
        }
        let diag = self.diagonal();
        if diag.iter().any(Signed::is_negative) {
            return Err("D has a negative diagonal entry".into());
        }
        for pair in diag.windows(2) {
            let ok = if pair[0].is_zero() {
                pair[1].is_zero()
            } else {
                (&pair[1] % &pair[0]).is_zero()
            };
            if !ok {
                return Err(format!("divisibility chain broken at {} | {}", pair[0], pair[1]));
            }
        }
        Ok(())
    }
}

/// Smith normal form of `a`. Never fails: fixed-width overflow escalates to
/// arbitrary precision.
pub fn smith_normal_form(a: &IntMatrix) -> SnfResult {
    let fast = a.try_map(|x| x.to_i64().ok_or(Overflow)).and_then(reduce);
    match fast {
        Ok((u, d, v)) => SnfResult {
            u: u.map(|&x| BigInt::from(x)),
            d: d.map(|&x| BigInt::from(x)),
            v: v.map(|&x| BigInt::from(x)),
        },
        Err(Overflow) => {
            let (u, d, v) = reduce(a.clone()).expect("arbitrary precision cannot overflow");
            SnfResult { u, d, v }
        }
    }
}

/// Smith normal form on fixed-width integers only; reports overflow.
pub fn smith_normal_form_i64(a: &Matrix<i64>) -> Result<Triple<i64>, Overflow> {
    reduce(a.clone())
}

type Triple<T> = (Matrix<T>, Matrix<T>, Matrix<T>);

fn reduce<T: SnfScalar>(mut d: Matrix<T>) -> Result<Triple<T>, Overflow> {
    let (rows, cols) = (d.rows(), d.cols());
    let mut u = Matrix::<T>::identity(rows);
    let mut v = Matrix::<T>::identity(cols);

    for k in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = find_pivot(&d, k) else {
                return Ok((u, d, v));
            };
            d.swap_rows(k, pi);
            u.swap_rows(k, pi);
            d.swap_cols(k, pj);
            v.swap_cols(k, pj);

            let pivot = d[(k, k)].clone();
            let mut dirty = false;
            for i in k + 1..rows {
                if d[(i, k)].is_zero() {
                    continue;
                }
                let q = d[(i, k)].try_quot(&pivot)?;
                row_sub_mul(&mut d, i, k, &q, k)?;
                row_sub_mul(&mut u, i, k, &q, 0)?;
                dirty |= !d[(i, k)].is_zero();
            }
            for j in k + 1..cols {
                if d[(k, j)].is_zero() {
                    continue;
                }
                let q = d[(k, j)].try_quot(&pivot)?;
                col_sub_mul(&mut d, j, k, &q, k)?;
                col_sub_mul(&mut v, j, k, &q, 0)?;
                dirty |= !d[(k, j)].is_zero();
            }
            if dirty {
                // a smaller remainder is now the pivot candidate
                continue;
            }
            match find_indivisible(&d, k, &pivot)? {
                Some(i) => {
                    row_add(&mut d, k, i, k)?;
                    row_add(&mut u, k, i, 0)?;
                }
                None => break,
            }
        }
        if d[(k, k)].is_negative() {
            for j in 0..cols {
                d[(k, j)] = d[(k, j)].try_neg()?;
            }
            for j in 0..rows {
                u[(k, j)] = u[(k, j)].try_neg()?;
            }
        }
    }
    Ok((u, d, v))
}

fn find_pivot<T: SnfScalar>(d: &Matrix<T>, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in k..d.rows() {
        for j in k..d.cols() {
            let x = &d[(i, j)];
            if x.is_zero() {
                continue;
            }
            // strict comparison keeps the lowest (row, col) among ties
            let better = match best {
                None => true,
                Some(b) => !d[b].abs_le(x),
            };
            if better {
                best = Some((i, j));
            }
        }
    }
    best
}

fn find_indivisible<T: SnfScalar>(d: &Matrix<T>, k: usize, pivot: &T) -> Result<Option<usize>, Overflow> {
    for i in k + 1..d.rows() {
        for j in k + 1..d.cols() {
            if !d[(i, j)].try_rem_is_zero(pivot)? {
                return Ok(Some(i));
            }
        }
    }
    Ok(None)
}

/// row[target] -= q * row[source], for columns from `start`.
fn row_sub_mul<T: SnfScalar>(
    m: &mut Matrix<T>,
    target: usize,
    source: usize,
    q: &T,
    start: usize,
) -> Result<(), Overflow> {
    for j in start..m.cols() {
        let v = m[(target, j)].try_sub_mul(q, &m[(source, j)])?;
        m[(target, j)] = v;
    }
    Ok(())
}

/// col[target] -= q * col[source], for rows from `start`.
fn col_sub_mul<T: SnfScalar>(
    m: &mut Matrix<T>,
    target: usize,
    source: usize,
    q: &T,
    start: usize,
) -> Result<(), Overflow> {
    for i in start..m.rows() {
        let v = m[(i, target)].try_sub_mul(q, &m[(i, source)])?;
        m[(i, target)] = v;
    }
    Ok(())
}

/// row[target] += row[source], for columns from `start`.
fn row_add<T: SnfScalar>(m: &mut Matrix<T>, target: usize, source: usize, start: usize) -> Result<(), Overflow> {
    for j in start..m.cols() {
        let v = m[(target, j)].try_add(&m[(source, j)])?;
        m[(target, j)] = v;
    }
    Ok(())
}
