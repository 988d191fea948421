//! Admissible arcs on the ∞-gon and the functors acting on them.
//!
//! An indecomposable object of the n-cluster category of type A∞ is an arc
//! `(t, u)` between two integers with `u - t >= 2` and `u - t ≡ 1 (mod n)`.
//! Suspension shifts both endpoints down by one; the Serre functor is
//! `Σ^{n+1}` and the AR translation is `τ = Σ^n`.

use std::cmp::Ordering;
use std::fmt;

use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArcError {
    #[error("n must be at least 1, got {0}")]
    InvalidN(i64),
    #[error("arc [{0},{1}] is not normalized: left endpoint must be smaller than right endpoint")]
    Unnormalized(i64, i64),
    #[error("arc [{t},{u}]: length {len} < 2")]
    TooShort { t: i64, u: i64, len: i128 },
    #[error("arc [{t},{u}]: length {len} \u{2262} 1 (mod {n})")]
    WrongResidue { t: i64, u: i64, len: i128, n: i64 },
    #[error("window [{0},{1}] is empty: lo must be smaller than hi")]
    EmptyWindow(i64, i64),
    #[error("integer overflow while shifting arc [{t},{u}] by {shift}")]
    Overflow { t: i64, u: i64, shift: i128 },
}

/// Selects which n-cluster category is modeled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CategoryParams {
    n: i64,
}

impl CategoryParams {
    pub fn new(n: i64) -> Result<Self, ArcError> {
        if n < 1 {
            return Err(ArcError::InvalidN(n));
        }
        Ok(CategoryParams { n })
    }

    #[inline]
    pub fn n(&self) -> i64 {
        self.n
    }

    /// Length of the shortest admissible arc, `n + 1` (which is 2 for n = 1).
    #[inline]
    pub fn min_length(&self) -> i128 {
        self.n as i128 + 1
    }

    /// Builds an arc and checks it is n-admissible, with a diagnostic naming the arc.
    pub fn admissible_arc(&self, t: i64, u: i64) -> Result<Arc, ArcError> {
        let arc = Arc::new(t, u)?;
        check_admissible(*self, arc)?;
        Ok(arc)
    }
}

/// A normalized arc `(t, u)` with `t < u`. Admissibility depends on `n` and is
/// checked separately.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Arc {
    t: i64,
    u: i64,
}

impl Arc {
    pub fn new(t: i64, u: i64) -> Result<Self, ArcError> {
        if t >= u {
            return Err(ArcError::Unnormalized(t, u));
        }
        Ok(Arc { t, u })
    }

    /// Orders the endpoints; rejects only the degenerate `a == b`.
    pub fn normalized(a: i64, b: i64) -> Result<Self, ArcError> {
        Arc::new(a.min(b), a.max(b))
    }

    #[inline]
    pub fn t(&self) -> i64 {
        self.t
    }

    #[inline]
    pub fn u(&self) -> i64 {
        self.u
    }

    #[inline]
    pub fn length(&self) -> i128 {
        self.u as i128 - self.t as i128
    }

    /// Horizontal position in the ℤA∞ mesh: `t + u`.
    #[inline]
    pub fn column(&self) -> i128 {
        self.t as i128 + self.u as i128
    }

    pub fn as_pair(&self) -> (i64, i64) {
        (self.t, self.u)
    }
}

impl PartialOrd for Arc {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Arc {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.t, self.u).cmp(&(other.t, other.u))
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.t, self.u)
    }
}

impl Serialize for Arc {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        [self.t, self.u].serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Arc {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let [t, u] = <[i64; 2]>::deserialize(deserializer)?;
        Arc::new(t, u).map_err(de::Error::custom)
    }
}

/// A finite stretch `[lo, hi]` of the ∞-gon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Window {
    lo: i64,
    hi: i64,
}

impl Window {
    pub fn new(lo: i64, hi: i64) -> Result<Self, ArcError> {
        if lo >= hi {
            return Err(ArcError::EmptyWindow(lo, hi));
        }
        Ok(Window { lo, hi })
    }

    #[inline]
    pub fn lo(&self) -> i64 {
        self.lo
    }

    #[inline]
    pub fn hi(&self) -> i64 {
        self.hi
    }

    #[inline]
    pub fn contains(&self, a: &Arc) -> bool {
        self.lo <= a.t && a.u <= self.hi
    }

    #[inline]
    pub fn contains_point(&self, p: i64) -> bool {
        self.lo <= p && p <= self.hi
    }
}

fn check_admissible(params: CategoryParams, a: Arc) -> Result<(), ArcError> {
    let len = a.length();
    if len < 2 {
        return Err(ArcError::TooShort { t: a.t, u: a.u, len });
    }
    if len.rem_euclid(params.n as i128) != 1 % params.n as i128 {
        return Err(ArcError::WrongResidue {
            t: a.t,
            u: a.u,
            len,
            n: params.n,
        });
    }
    Ok(())
}

/// Whether `a` is n-admissible: `u - t >= 2` and `u - t ≡ 1 (mod n)`.
pub fn is_admissible(params: CategoryParams, a: Arc) -> bool {
    check_admissible(params, a).is_ok()
}

/// `Σ^k (t, u) = (t - k, u - k)`. Negative `k` applies the inverse suspension.
pub fn suspend(params: CategoryParams, a: Arc, k: i64) -> Result<Arc, ArcError> {
    shift(params, a, k as i128)
}

/// The Serre functor `𝕊 = Σ^{n+1}`.
pub fn serre(params: CategoryParams, a: Arc) -> Result<Arc, ArcError> {
    shift(params, a, params.n as i128 + 1)
}

/// The AR translation `τ = Σ^n`.
pub fn tau(params: CategoryParams, a: Arc) -> Result<Arc, ArcError> {
    shift(params, a, params.n as i128)
}

/// The inverse AR translation `τ⁻¹ = Σ^{-n}`.
pub fn tau_inverse(params: CategoryParams, a: Arc) -> Result<Arc, ArcError> {
    shift(params, a, -(params.n as i128))
}

fn shift(params: CategoryParams, a: Arc, k: i128) -> Result<Arc, ArcError> {
    debug_assert!(is_admissible(params, a), "shifting inadmissible arc {a}");
    let overflow = || ArcError::Overflow {
        t: a.t,
        u: a.u,
        shift: k,
    };
    let t = i64::try_from(a.t as i128 - k).map_err(|_| overflow())?;
    let u = i64::try_from(a.u as i128 - k).map_err(|_| overflow())?;
    Ok(Arc { t, u })
}

/// Strict interleaving of endpoints. Arcs sharing an endpoint, nested arcs
/// and disjoint arcs do not cross.
pub fn crosses(a: &Arc, b: &Arc) -> bool {
    (a.t < b.t && b.t < a.u && a.u < b.u) || (b.t < a.t && a.t < b.u && b.u < a.u)
}

/// Which of the `n` AR-quiver components contains `a`, labeled by `t mod n`.
/// `Σ` lowers the label by one; `τ` fixes it.
pub fn component_index(params: CategoryParams, a: Arc) -> i64 {
    a.t.rem_euclid(params.n)
}

/// All admissible arcs inside `w`, sorted by `(t, u)`.
pub fn enumerate_arcs(params: CategoryParams, w: Window) -> Vec<Arc> {
    let n = params.n as i128;
    let mut out = Vec::new();
    for t in w.lo..w.hi {
        let mut len = params.min_length();
        while (t as i128) + len <= w.hi as i128 {
            out.push(Arc {
                t,
                u: (t as i128 + len) as i64,
            });
            len += n;
        }
    }
    out
}
