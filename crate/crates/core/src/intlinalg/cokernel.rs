use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;
use super::snf::{smith_normal_form, SnfResult};

/// `ℤ^g / rowspan(A)` presented as `ℤ^r ⊕ ℤ/d₁ ⊕ … ⊕ ℤ/d_s` with `d₁ | d₂ | …`.
///
/// Coordinates of a class list the `r` free coordinates first, followed by one
/// coordinate per invariant factor reduced into `[0, dᵢ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cokernel {
    generators: usize,
    rank: usize,
    /// Nonzero diagonal of the Smith form.
    diagonal: Vec<BigInt>,
    /// Column transform; `x ↦ x·V` changes to Smith coordinates.
    transform: IntMatrix,
}

impl Cokernel {
    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn free_rank(&self) -> usize {
        self.generators - self.rank
    }

    /// Invariant factors greater than one.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.diagonal.iter().filter(|d| !d.is_one()).cloned().collect()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Coordinates of the class of `x ∈ ℤ^g`.
    pub fn project(&self, x: &[BigInt]) -> Vec<BigInt> {
        let y = self.transform.left_apply(x);
        let mut out: Vec<BigInt> = y[self.rank..].to_vec();
        for (yi, d) in y.iter().zip(&self.diagonal) {
            if !d.is_one() {
                out.push(yi.mod_floor_pos(d));
            }
        }
        out
    }

    pub fn project_i64(&self, x: &[i64]) -> Vec<BigInt> {
        let x: Vec<BigInt> = x.iter().map(|&v| BigInt::from(v)).collect();
        self.project(&x)
    }

    /// Coordinates of the basis vector `e_i`.
    pub fn class_of_generator(&self, i: usize) -> Vec<BigInt> {
        let mut e = vec![BigInt::zero(); self.generators];
        e[i] = BigInt::one();
        self.project(&e)
    }
}

trait ModFloorPos {
    fn mod_floor_pos(&self, d: &BigInt) -> BigInt;
}

impl ModFloorPos for BigInt {
    fn mod_floor_pos(&self, d: &BigInt) -> BigInt {
        let r = self % d;
        if r.is_negative() {
            r + d
        } else {
            r
        }
    }
}

/// The cokernel of the row action of `a`: generators index columns, rows are
/// relations.
///
/// Each free coordinate is oriented so that the first generator with a nonzero
/// value in it is positive.
pub fn cokernel(a: &IntMatrix) -> Cokernel {
    cokernel_from_snf(&smith_normal_form(a))
}

pub fn cokernel_from_snf(snf: &SnfResult) -> Cokernel {
    let generators = snf.v.rows();
    let rank = snf.rank();
    let diagonal = snf.diagonal()[..rank].to_vec();
    let mut transform = snf.v.clone();
    for j in rank..generators {
        let first = (0..generators).map(|i| &transform[(i, j)]).find(|x| !x.is_zero());
        if first.is_some_and(|x| x.is_negative()) {
            for i in 0..generators {
                transform[(i, j)] = -&transform[(i, j)];
            }
        }
    }
    Cokernel {
        generators,
        rank,
        diagonal,
        transform,
    }
}
