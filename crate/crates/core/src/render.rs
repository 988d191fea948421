//! SVG drawings of arc families on the ∞-gon and of AR-quiver windows.
//!
//! Output is plain SVG 1.1 with coordinates printed to two decimals, so equal
//! inputs give byte-identical text.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use thiserror::Error;

use crate::angulation::ArcFamily;
use crate::ar_quiver::{row, QuiverWindow};
use crate::arc_model::{Arc, Window};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RenderError {
    #[error("arc {arc} lies outside the window [{lo},{hi}]")]
    OutsideWindow { arc: Arc, lo: i64, hi: i64 },
    #[error("image dimensions must be positive and exceed twice the margin")]
    BadDimensions,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderOptions {
    pub width: u32,
    pub height: u32,
    pub margin: u32,
    /// Label arc endpoints on the line, or node coordinates in a quiver.
    pub labels: bool,
    /// Label every integer point, not only arc endpoints.
    pub label_all_points: bool,
    pub highlight: BTreeSet<Arc>,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            width: 800,
            height: 400,
            margin: 40,
            labels: true,
            label_all_points: false,
            highlight: BTreeSet::new(),
        }
    }
}

impl RenderOptions {
    fn check(&self) -> Result<(), RenderError> {
        if self.width == 0 || self.height == 0 || 2 * self.margin >= self.width.min(self.height) {
            return Err(RenderError::BadDimensions);
        }
        Ok(())
    }
}

fn header(out: &mut String, opts: &RenderOptions) {
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = opts.width,
        h = opts.height
    );
    let _ = writeln!(
        out,
        r#"<style>text {{ font-family: serif; font-size: 12px; }} .highlight {{ fill: #c00000; stroke: #c00000; }}</style>"#
    );
}

/// Arcs of `f` drawn as half-ellipses over a horizontal number line spanning `w`.
///
/// The ellipse for `(t, u)` is centered at `(t + u) / 2` with height
/// proportional to `u - t`. Dashed stubs at both ends stand for the rest of
/// the ∞-gon.
pub fn arc_diagram_svg(f: &ArcFamily, w: Window, opts: &RenderOptions) -> Result<String, RenderError> {
    opts.check()?;
    if let Some(a) = f.arcs().iter().find(|a| !w.contains(a)) {
        return Err(RenderError::OutsideWindow {
            arc: *a,
            lo: w.lo(),
            hi: w.hi(),
        });
    }
    let margin = opts.margin as f64;
    let stub = margin * 0.75;
    let inner_w = opts.width as f64 - 2.0 * margin - 2.0 * stub;
    let span = (w.hi() - w.lo()) as f64;
    let x_of = |p: i64| margin + stub + (p - w.lo()) as f64 / span * inner_w;
    let baseline = opts.height as f64 - margin;
    let max_len = f.arcs().iter().map(|a| a.length()).max().unwrap_or(1) as f64;
    // half-width of an arc in pixels per unit length is inner_w / span / 2
    let room = baseline - margin;
    let y_per_len = (inner_w / span / 2.0).min(room / max_len);

    let mut out = String::new();
    header(&mut out, opts);
    let _ = writeln!(
        out,
        r#"<line class="gon" x1="{:.2}" y1="{baseline:.2}" x2="{:.2}" y2="{baseline:.2}" stroke="black" stroke-width="2"/>"#,
        x_of(w.lo()),
        x_of(w.hi())
    );
    for (x1, x2) in [(margin, x_of(w.lo())), (x_of(w.hi()), opts.width as f64 - margin)] {
        let _ = writeln!(
            out,
            r#"<line class="gon-extension" x1="{x1:.2}" y1="{baseline:.2}" x2="{x2:.2}" y2="{baseline:.2}" stroke="black" stroke-width="2" stroke-dasharray="6,4"/>"#
        );
    }

    let endpoints: BTreeSet<i64> = f.arcs().iter().flat_map(|a| [a.t(), a.u()]).collect();
    for p in w.lo()..=w.hi() {
        let _ = writeln!(
            out,
            r#"<circle class="vertex" cx="{:.2}" cy="{baseline:.2}" r="3" fill="black"/>"#,
            x_of(p)
        );
        if opts.labels && (opts.label_all_points || endpoints.contains(&p)) {
            let _ = writeln!(
                out,
                r#"<text class="vertex-label" x="{:.2}" y="{:.2}" text-anchor="middle">{p}</text>"#,
                x_of(p),
                baseline + 18.0
            );
        }
    }

    let mut sorted: Vec<Arc> = f.arcs().to_vec();
    sorted.sort();
    for a in sorted {
        let (x1, x2) = (x_of(a.t()), x_of(a.u()));
        let rx = (x2 - x1) / 2.0;
        let ry = a.length() as f64 * y_per_len;
        let class = if opts.highlight.contains(&a) {
            "arc highlight"
        } else {
            "arc"
        };
        let _ = writeln!(
            out,
            r#"<path class="{class}" data-arc="{},{}" d="M {x1:.2} {baseline:.2} A {rx:.2} {ry:.2} 0 0 1 {x2:.2} {baseline:.2}" fill="none" stroke="black" stroke-width="1.5"/>"#,
            a.t(),
            a.u()
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}

/// A quiver window laid out on the ℤA∞ grid: `x` from the mesh column
/// `t + u`, rows stacked bottom-up.
pub fn quiver_svg(qw: &QuiverWindow, opts: &RenderOptions) -> Result<String, RenderError> {
    opts.check()?;
    let params = qw.params();
    let margin = opts.margin as f64;
    let cols = qw.nodes.iter().map(Arc::column);
    let rows = qw.nodes.iter().map(|a| row(params, *a));
    let (cmin, cmax) = (cols.clone().min().unwrap_or(0), cols.max().unwrap_or(0));
    let (rmin, rmax) = (rows.clone().min().unwrap_or(1), rows.max().unwrap_or(1));
    let cspan = ((cmax - cmin) as f64).max(1.0);
    let rspan = ((rmax - rmin) as f64).max(1.0);
    let inner_w = opts.width as f64 - 2.0 * margin;
    let inner_h = opts.height as f64 - 2.0 * margin;
    let pos = |a: &Arc| {
        let x = if cmax == cmin {
            opts.width as f64 / 2.0
        } else {
            margin + (a.column() - cmin) as f64 / cspan * inner_w
        };
        let y = if rmax == rmin {
            opts.height as f64 / 2.0
        } else {
            opts.height as f64 - margin - (row(params, *a) - rmin) as f64 / rspan * inner_h
        };
        (x, y)
    };

    let mut out = String::new();
    header(&mut out, opts);
    let _ = writeln!(
        out,
        r#"<defs><marker id="head" viewBox="0 0 10 10" refX="10" refY="5" markerWidth="6" markerHeight="6" orient="auto"><path d="M 0 0 L 10 5 L 0 10 z"/></marker></defs>"#
    );
    for &(s, d) in &qw.arrows {
        let (x1, y1) = pos(&qw.nodes[s]);
        let (x2, y2) = pos(&qw.nodes[d]);
        // stop short of the labels at both ends
        let (dx, dy) = (x2 - x1, y2 - y1);
        let len = (dx * dx + dy * dy).sqrt().max(1e-9);
        let trim = (len * 0.25).min(18.0);
        let (ux, uy) = (dx / len * trim, dy / len * trim);
        let _ = writeln!(
            out,
            r#"<line class="arrow" x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="black" marker-end="url(#head)"/>"#,
            x1 + ux,
            y1 + uy,
            x2 - ux,
            y2 - uy
        );
    }
    for a in &qw.nodes {
        let (x, y) = pos(a);
        let class = if opts.highlight.contains(a) {
            "node highlight"
        } else {
            "node"
        };
        let _ = write!(
            out,
            r#"<g class="{class}" data-arc="{},{}"><circle cx="{x:.2}" cy="{y:.2}" r="2.5"/>"#,
            a.t(),
            a.u()
        );
        if opts.labels {
            let _ = write!(
                out,
                r#"<text x="{x:.2}" y="{:.2}" text-anchor="middle">({},{})</text>"#,
                y - 6.0,
                a.t(),
                a.u()
            );
        }
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    Ok(out)
}
