//! Families of arcs and (n+2)-angulations of the ∞-gon.
//!
//! Maximality of an infinite family cannot be decided from a finite piece, so
//! the checks here are relative to a [`Window`]: a family is window-maximal
//! when no admissible arc inside the window can be added without crossing it.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arc_model::{crosses, enumerate_arcs, is_admissible, Arc, ArcError, CategoryParams, Window};
use crate::exec::Execution;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error(transparent)]
    Inadmissible(#[from] ArcError),
    #[error("family size must be at least 1")]
    EmptyCanonical,
    #[error("unknown symbolic family {0:?} (expected \"canonical\")")]
    UnknownTag(String),
    #[error("family has n = {found} but n = {expected} was requested")]
    MismatchedN { expected: i64, found: i64 },
    #[error("family needs either \"arcs\" or \"family\"")]
    MissingArcs,
    #[error("symbolic family \"canonical\" needs a size \"m\"")]
    MissingSize,
}

/// A finite, duplicate-free, ordered set of admissible arcs. The order is the
/// basis order used for Grothendieck group computations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcFamily {
    params: CategoryParams,
    arcs: Vec<Arc>,
}

impl ArcFamily {
    /// Checks admissibility of every arc and drops repeated arcs, keeping the
    /// first occurrence.
    pub fn new(params: CategoryParams, arcs: impl IntoIterator<Item = Arc>) -> Result<Self, FamilyError> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for a in arcs {
            params.admissible_arc(a.t(), a.u())?;
            if seen.insert(a) {
                out.push(a);
            }
        }
        Ok(ArcFamily { params, arcs: out })
    }

    pub fn empty(params: CategoryParams) -> Self {
        ArcFamily {
            params,
            arcs: Vec::new(),
        }
    }

    pub fn params(&self) -> CategoryParams {
        self.params
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn contains(&self, a: &Arc) -> bool {
        self.arcs.contains(a)
    }

    /// Smallest window containing every arc, or `None` for the empty family.
    pub fn hull(&self) -> Option<Window> {
        let lo = self.arcs.iter().map(Arc::t).min()?;
        let hi = self.arcs.iter().map(Arc::u).max()?;
        Window::new(lo, hi).ok()
    }
}

/// Two arcs of a family that cross, in lexicographic order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CrossingPair(pub Arc, pub Arc);

impl fmt::Display for CrossingPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "arcs {} and {} cross", self.0, self.1)
    }
}

/// Checks that no two arcs cross. On failure returns the lexicographically
/// first crossing pair.
pub fn validate_noncrossing(f: &ArcFamily) -> Result<(), CrossingPair> {
    let mut sorted = f.arcs.clone();
    sorted.sort();
    for (i, a) in sorted.iter().enumerate() {
        // b.t > a.u can never cross a; sorted by t, so stop there
        for b in sorted[i + 1..].iter().take_while(|b| b.t() < a.u()) {
            if crosses(a, b) {
                return Err(CrossingPair(*a, *b));
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Maximality {
    Maximal,
    /// The lexicographically smallest arc that could still be added.
    Addable(Arc),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MaximalityError {
    #[error("family is not non-crossing: {0}")]
    Crossing(CrossingPair),
    #[error("arc {arc} lies outside the window [{lo},{hi}]")]
    OutsideWindow { arc: Arc, lo: i64, hi: i64 },
}

fn check_window_preconditions(f: &ArcFamily, w: Window) -> Result<(), MaximalityError> {
    validate_noncrossing(f).map_err(MaximalityError::Crossing)?;
    if let Some(a) = f.arcs.iter().find(|a| !w.contains(a)) {
        return Err(MaximalityError::OutsideWindow {
            arc: *a,
            lo: w.lo(),
            hi: w.hi(),
        });
    }
    Ok(())
}

fn addable(f: &ArcFamily, present: &HashSet<Arc>, c: &Arc) -> bool {
    !present.contains(c) && !f.arcs.iter().any(|a| crosses(a, c))
}

/// Whether no admissible arc in `w` can be added to `f` without crossing.
pub fn is_maximal_in_window(f: &ArcFamily, w: Window) -> Result<Maximality, MaximalityError> {
    is_maximal_in_window_with(f, w, Execution::default())
}

pub fn is_maximal_in_window_with(f: &ArcFamily, w: Window, exec: Execution) -> Result<Maximality, MaximalityError> {
    check_window_preconditions(f, w)?;
    let present: HashSet<Arc> = f.arcs.iter().copied().collect();
    let candidates = enumerate_arcs(f.params, w);
    Ok(match exec.find_first(&candidates, |c| addable(f, &present, c)) {
        Some(c) => Maximality::Addable(c),
        None => Maximality::Maximal,
    })
}

/// Greedily extends `f` to a window-maximal non-crossing family, trying
/// candidates in `(t, u)` order. Added arcs are appended after those of `f`.
pub fn complete_in_window(f: &ArcFamily, w: Window) -> Result<ArcFamily, MaximalityError> {
    check_window_preconditions(f, w)?;
    let mut out = f.clone();
    let mut present: HashSet<Arc> = f.arcs.iter().copied().collect();
    for c in enumerate_arcs(f.params, w) {
        if addable(&out, &present, &c) {
            present.insert(c);
            out.arcs.push(c);
        }
    }
    Ok(out)
}

/// The arc `T_i` of the canonical locally finite family:
/// `T_{2k} = (1 - kn, 2 + kn)` and `T_{2k+1} = (1 - kn, 2 + (k+1)n)`.
pub fn canonical_arc(params: CategoryParams, i: u64) -> Result<Arc, FamilyError> {
    if i == 0 {
        return Err(FamilyError::EmptyCanonical);
    }
    let n = params.n() as i128;
    let k = (i / 2) as i128;
    let (t, u) = if i.is_multiple_of(2) {
        (1 - k * n, 2 + k * n)
    } else {
        (1 - k * n, 2 + (k + 1) * n)
    };
    let overflow = || ArcError::Overflow {
        t: 1,
        u: 2,
        shift: k * n,
    };
    let t = i64::try_from(t).map_err(|_| overflow())?;
    let u = i64::try_from(u).map_err(|_| overflow())?;
    Ok(params.admissible_arc(t, u)?)
}

/// `[T_1, …, T_m]`.
pub fn canonical_family(params: CategoryParams, m: u64) -> Result<ArcFamily, FamilyError> {
    if m == 0 {
        return Err(FamilyError::EmptyCanonical);
    }
    let arcs = (1..=m)
        .map(|i| canonical_arc(params, i))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ArcFamily { params, arcs })
}

/// End behavior of an arc family at the integers of the ∞-gon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "at")]
pub enum EndBehavior {
    LocallyFinite,
    LeftFountain(i64),
    RightFountain(i64),
    Fountain(i64),
}

/// A family as it appears on the wire: an explicit finite list of arcs or a
/// symbolic name for an infinite family (truncated to `m` arcs when needed).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Explicit(ArcFamily),
    Canonical { params: CategoryParams, m: Option<u64> },
}

impl FamilySpec {
    pub fn params(&self) -> CategoryParams {
        match self {
            FamilySpec::Explicit(f) => f.params(),
            FamilySpec::Canonical { params, .. } => *params,
        }
    }

    /// A finite family: the explicit arcs, or the first `m` canonical arcs.
    pub fn materialize(&self) -> Result<ArcFamily, FamilyError> {
        match self {
            FamilySpec::Explicit(f) => Ok(f.clone()),
            FamilySpec::Canonical { params, m } => canonical_family(*params, m.ok_or(FamilyError::MissingSize)?),
        }
    }

    /// Builds a spec from its JSON form under the requested `n`.
    ///
    /// Accepted shapes: a bare array `[[t,u],...]`, an object
    /// `{"n": 3, "arcs": [[t,u],...]}`, or `{"n": 3, "family": "canonical", "m": 10}`.
    pub fn from_json(params: CategoryParams, value: &serde_json::Value) -> Result<Self, FamilySpecError> {
        let wire: FamilyWire = match value {
            serde_json::Value::Array(_) => FamilyWire {
                n: None,
                arcs: Some(serde_json::from_value(value.clone())?),
                family: None,
                m: None,
            },
            _ => serde_json::from_value(value.clone())?,
        };
        if let Some(found) = wire.n {
            if found != params.n() {
                return Err(FamilyError::MismatchedN {
                    expected: params.n(),
                    found,
                }
                .into());
            }
        }
        match (wire.family, wire.arcs) {
            (Some(tag), _) if tag == "canonical" => Ok(FamilySpec::Canonical { params, m: wire.m }),
            (Some(tag), _) => Err(FamilyError::UnknownTag(tag).into()),
            (None, Some(raw)) => {
                let arcs = raw
                    .into_iter()
                    .map(|[t, u]| Arc::new(t, u))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(FamilyError::from)?;
                Ok(FamilySpec::Explicit(ArcFamily::new(params, arcs)?))
            }
            (None, None) => Err(FamilyError::MissingArcs.into()),
        }
    }
}

#[derive(Debug, Error)]
pub enum FamilySpecError {
    #[error("malformed family JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FamilyWire {
    n: Option<i64>,
    arcs: Option<Vec<[i64; 2]>>,
    family: Option<String>,
    m: Option<u64>,
}

/// JSON form `{"n": .., "arcs": [[t,u], ...]}`.
impl Serialize for ArcFamily {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("ArcFamily", 2)?;
        s.serialize_field("n", &self.params.n())?;
        s.serialize_field("arcs", &self.arcs)?;
        s.end()
    }
}

/// End behavior of a family. Finite families are always locally finite; the
/// canonical family is locally finite as well, since each integer meets at
/// most two of its arcs.
pub fn classify_ends(spec: &FamilySpec) -> EndBehavior {
    match spec {
        FamilySpec::Explicit(f) => {
            debug_assert!(f.arcs.iter().all(|a| is_admissible(f.params, *a)));
            EndBehavior::LocallyFinite
        }
        FamilySpec::Canonical { .. } => EndBehavior::LocallyFinite,
    }
}
