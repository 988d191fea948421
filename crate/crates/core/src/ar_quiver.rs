//! The Auslander–Reiten quiver on admissible arcs.
//!
//! Every component is a copy of ℤA∞. Arrows leave `(t, u)` towards
//! `(t, u + n)` and `(t + n, u)`, whenever the target is admissible. The quiver
//! is infinite, so it is only ever materialized through windows.

use std::collections::HashMap;

use serde::Serialize;

use crate::arc_model::{component_index, is_admissible, tau, Arc, ArcError, CategoryParams, Window};

/// An AR triangle `τX → E → X`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArTriangle {
    pub start: Arc,
    pub middle: Vec<Arc>,
    pub end: Arc,
}

/// Row of an admissible arc in its ℤA∞ component: `(u - t - 1) / n`, starting at 1.
pub fn row(params: CategoryParams, a: Arc) -> i128 {
    (a.length() - 1) / params.n() as i128
}

/// Targets of the arrows leaving `a`, in the order `(t, u + n)`, `(t + n, u)`.
pub fn arrows_from(params: CategoryParams, a: Arc) -> Result<Vec<Arc>, ArcError> {
    let n = params.n();
    let overflow = |shift| ArcError::Overflow {
        t: a.t(),
        u: a.u(),
        shift,
    };
    let mut out = Vec::with_capacity(2);
    let up = a.u().checked_add(n).ok_or_else(|| overflow(-(n as i128)))?;
    out.push(Arc::new(a.t(), up)?);
    if a.length() - n as i128 >= 2 {
        let right = Arc::new(a.t() + n, a.u())?;
        if is_admissible(params, right) {
            out.push(right);
        }
    }
    Ok(out)
}

/// The AR triangle ending at `end`. Its middle term has one summand exactly
/// when `end` lies on the bottom row.
pub fn ar_triangle(params: CategoryParams, end: Arc) -> Result<ArTriangle, ArcError> {
    let start = tau(params, end)?;
    let middle = arrows_from(params, start)?;
    Ok(ArTriangle { start, middle, end })
}

/// A finite piece of one ℤA∞ component.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuiverWindow {
    pub n: i64,
    pub component: i64,
    pub nodes: Vec<Arc>,
    /// Arrows as `(source, target)` indices into `nodes`.
    pub arrows: Vec<(usize, usize)>,
}

impl QuiverWindow {
    pub fn params(&self) -> CategoryParams {
        CategoryParams::new(self.n).expect("window built from valid params")
    }

    pub fn arrow_arcs(&self) -> impl Iterator<Item = (Arc, Arc)> + '_ {
        self.arrows.iter().map(|&(s, d)| (self.nodes[s], self.nodes[d]))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QuiverError {
    #[error("component {component} out of range for n = {n}")]
    BadComponent { component: i64, n: i64 },
    #[error("depth must be at least 1")]
    BadDepth,
    #[error(transparent)]
    Arc(#[from] ArcError),
}

/// Nodes of `component` with `t` in `t_range` and row at most `depth`,
/// together with every arrow between them. Nodes are ordered by row, then `t`.
pub fn quiver_window(
    params: CategoryParams,
    component: i64,
    t_range: Window,
    depth: u32,
) -> Result<QuiverWindow, QuiverError> {
    check_component(params, component, depth)?;
    let n = params.n() as i128;
    let mut nodes = Vec::new();
    for r in 1..=depth as i128 {
        for t in t_range.lo()..=t_range.hi() {
            if t.rem_euclid(params.n()) != component {
                continue;
            }
            let u = t as i128 + 1 + r * n;
            nodes.push(node(t, u)?);
        }
    }
    finish(params, component, nodes)
}

/// Nodes of `component` whose mesh column `t + u` lies in `columns` and whose
/// row is at most `depth`. This is the rectangular strip a printed ℤA∞
/// picture shows.
pub fn quiver_strip(
    params: CategoryParams,
    component: i64,
    columns: Window,
    depth: u32,
) -> Result<QuiverWindow, QuiverError> {
    check_component(params, component, depth)?;
    let n = params.n() as i128;
    let mut nodes = Vec::new();
    for r in 1..=depth as i128 {
        let len = 1 + r * n;
        // column = 2t + len
        let t_lo =
            (columns.lo() as i128 - len).div_euclid(2) + i128::from((columns.lo() as i128 - len).rem_euclid(2) != 0);
        let t_hi = (columns.hi() as i128 - len).div_euclid(2);
        for t in t_lo..=t_hi {
            if t.rem_euclid(n) != component as i128 {
                continue;
            }
            let t = i64::try_from(t).map_err(|_| overflow_at(t, len))?;
            nodes.push(node(t, t as i128 + len)?);
        }
    }
    finish(params, component, nodes)
}

fn check_component(params: CategoryParams, component: i64, depth: u32) -> Result<(), QuiverError> {
    if !(0..params.n()).contains(&component) {
        return Err(QuiverError::BadComponent {
            component,
            n: params.n(),
        });
    }
    if depth == 0 {
        return Err(QuiverError::BadDepth);
    }
    Ok(())
}

fn overflow_at(t: i128, len: i128) -> QuiverError {
    QuiverError::Arc(ArcError::Overflow {
        t: t.clamp(i64::MIN as i128, i64::MAX as i128) as i64,
        u: i64::MAX,
        shift: len,
    })
}

fn node(t: i64, u: i128) -> Result<Arc, QuiverError> {
    let u = i64::try_from(u).map_err(|_| overflow_at(t as i128, u - t as i128))?;
    Ok(Arc::new(t, u)?)
}

fn finish(params: CategoryParams, component: i64, nodes: Vec<Arc>) -> Result<QuiverWindow, QuiverError> {
    let index: HashMap<Arc, usize> = nodes.iter().enumerate().map(|(i, a)| (*a, i)).collect();
    let mut arrows = Vec::new();
    for (i, a) in nodes.iter().enumerate() {
        debug_assert_eq!(component_index(params, *a), component);
        for target in arrows_from(params, *a)? {
            if let Some(&j) = index.get(&target) {
                arrows.push((i, j));
            }
        }
    }
    Ok(QuiverWindow {
        n: params.n(),
        component,
        nodes,
        arrows,
    })
}
