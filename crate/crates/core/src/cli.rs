//! Command-line front end. Every subcommand reads JSON, calls one library
//! operation and writes JSON, SVG or a short text summary.
//!
//! Exit codes: 0 on success, 1 when the mathematics says no (a failed check),
//! 2 on bad input.

use std::collections::BTreeSet;
use std::fs;
use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::angulation::{
    canonical_family, classify_ends, complete_in_window, is_maximal_in_window, validate_noncrossing, ArcFamily,
    FamilySpec, Maximality, MaximalityError,
};
use crate::ar_quiver::{quiver_strip, quiver_window, QuiverWindow};
use crate::arc_model::{component_index, enumerate_arcs, Arc, CategoryParams, Window};
use crate::k0::{k0_presentation, verify_theorem};
use crate::render::{arc_diagram_svg, quiver_svg, RenderOptions};

#[derive(Parser, Debug)]
#[command(
    name = "ncluster",
    version,
    about = "Arc model of n-cluster categories of type A-infinity"
)]
pub struct Cli {
    /// The n of the n-cluster category (n >= 1).
    #[arg(short = 'n', global = true, allow_negative_numbers = true)]
    pub n: Option<i64>,

    /// Read input JSON from this file (default: standard input).
    #[arg(long, global = true, conflicts_with = "json")]
    pub input: Option<PathBuf>,

    /// Inline input JSON.
    #[arg(long, global = true)]
    pub json: Option<String>,

    /// Write output to this file instead of standard output.
    #[arg(long, short = 'o', global = true)]
    pub output: Option<PathBuf>,

    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Svg,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Operations on individual arcs.
    #[command(subcommand)]
    Arcs(ArcsCmd),
    /// Windows of the AR quiver.
    #[command(subcommand)]
    Quiver(QuiverCmd),
    /// Non-crossing and window-maximality of arc families.
    #[command(subcommand)]
    Angulation(AngulationCmd),
    /// Named arc families.
    #[command(subcommand)]
    Family(FamilyCmd),
    /// Grothendieck group presentations.
    #[command(subcommand)]
    K0(K0Cmd),
    /// SVG drawings.
    #[command(subcommand)]
    Render(RenderCmd),
}

#[derive(Subcommand, Debug)]
pub enum ArcsCmd {
    /// Check that every input arc is n-admissible.
    Validate,
    /// List all admissible arcs inside a window.
    Enumerate {
        #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true, required = true)]
        window: Vec<i64>,
    },
}

#[derive(Args, Debug)]
pub struct QuiverArgs {
    #[arg(long)]
    pub component: i64,
    /// Range of left endpoints t.
    #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true, conflicts_with = "columns")]
    pub trange: Option<Vec<i64>>,
    /// Range of mesh columns t + u (the strip a printed quiver shows).
    #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true)]
    pub columns: Option<Vec<i64>>,
    #[arg(long)]
    pub depth: u32,
}

#[derive(Subcommand, Debug)]
pub enum QuiverCmd {
    /// Nodes and arrows of one component inside a window.
    Window(QuiverArgs),
}

#[derive(Subcommand, Debug)]
pub enum AngulationCmd {
    /// Non-crossing check plus a window-local maximality certificate.
    Check {
        #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true)]
        window: Option<Vec<i64>>,
    },
    /// Greedily complete a family to a window-maximal one.
    Complete {
        #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true)]
        window: Option<Vec<i64>>,
    },
}

#[derive(Subcommand, Debug)]
pub enum FamilyCmd {
    /// The locally finite family T_1, ..., T_m.
    Canonical {
        #[arg(long)]
        m: u64,
    },
}

#[derive(Subcommand, Debug)]
pub enum K0Cmd {
    /// Present the Grothendieck group generated by a family.
    Present,
    /// Check that the truncated canonical family presents Z with the expected classes.
    Verify {
        #[arg(long)]
        m: u64,
    },
}

#[derive(Subcommand, Debug)]
pub enum RenderCmd {
    /// Draw a family as arcs over the number line.
    Arcs {
        #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true)]
        window: Option<Vec<i64>>,
        #[arg(long, default_value_t = 800)]
        width: u32,
        #[arg(long, default_value_t = 400)]
        height: u32,
        #[arg(long)]
        all_labels: bool,
    },
    /// Draw a quiver window.
    Quiver {
        #[command(flatten)]
        window: QuiverArgs,
        /// Highlight T_1..T_M of the canonical family.
        #[arg(long)]
        highlight_canonical: Option<u64>,
        #[arg(long, default_value_t = 900)]
        width: u32,
        #[arg(long, default_value_t = 420)]
        height: u32,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

enum Output {
    Json(Value),
    Text(String),
    Svg(String),
}

struct Reply {
    pass: bool,
    json: Value,
    text: String,
    svg: Option<String>,
}

impl Reply {
    fn ok(json: Value, text: String) -> Self {
        Reply {
            pass: true,
            json,
            text,
            svg: None,
        }
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable report")
}

/// Runs the CLI on `argv` (including the program name) with `stdin` as the
/// fallback input.
pub fn run<I, T>(argv: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: rendered,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: rendered,
                }
            };
        }
    };
    match execute(&cli, stdin) {
        Ok(reply) => {
            let format = cli
                .format
                .unwrap_or(if reply.svg.is_some() { Format::Svg } else { Format::Json });
            let out = match (format, reply.svg) {
                (Format::Svg, Some(svg)) => Output::Svg(svg),
                (Format::Svg, None) => {
                    return input_error("this subcommand has no SVG output".into());
                }
                (Format::Text, _) => Output::Text(reply.text),
                (Format::Json, _) => Output::Json(reply.json),
            };
            let body = match out {
                Output::Json(v) => {
                    let mut s = serde_json::to_string_pretty(&v).expect("json");
                    s.push('\n');
                    s
                }
                Output::Text(t) | Output::Svg(t) => {
                    if t.ends_with('\n') {
                        t
                    } else {
                        t + "\n"
                    }
                }
            };
            let code = if reply.pass { 0 } else { 1 };
            match &cli.output {
                Some(path) => match fs::write(path, body) {
                    Ok(()) => Outcome {
                        code,
                        stdout: String::new(),
                        stderr: String::new(),
                    },
                    Err(e) => input_error(format!("cannot write {}: {e}", path.display())),
                },
                None => Outcome {
                    code,
                    stdout: body,
                    stderr: String::new(),
                },
            }
        }
        Err(InputError(msg)) => input_error(msg),
    }
}

fn input_error(msg: String) -> Outcome {
    Outcome {
        code: 2,
        stdout: String::new(),
        stderr: format!("error: {msg}\n"),
    }
}

fn read_input(cli: &Cli, stdin: &mut dyn Read) -> Result<Value, InputError> {
    let text = match (&cli.json, &cli.input) {
        (Some(inline), _) => inline.clone(),
        (None, Some(path)) => {
            fs::read_to_string(path).map_err(|e| InputError(format!("cannot read {}: {e}", path.display())))?
        }
        (None, None) => {
            let mut s = String::new();
            stdin.read_to_string(&mut s)?;
            s
        }
    };
    serde_json::from_str(&text).map_err(|e| InputError(format!("malformed JSON: {e}")))
}

fn read_family(cli: &Cli, params: CategoryParams, stdin: &mut dyn Read) -> Result<FamilySpec, InputError> {
    let value = read_input(cli, stdin)?;
    Ok(FamilySpec::from_json(params, &value)?)
}

fn window_arg(raw: &[i64]) -> Result<Window, InputError> {
    Ok(Window::new(raw[0], raw[1])?)
}

fn window_or_hull(raw: &Option<Vec<i64>>, f: &ArcFamily) -> Result<Window, InputError> {
    match raw {
        Some(r) => window_arg(r),
        None => f
            .hull()
            .ok_or_else(|| InputError("empty family: pass --window LO HI".into())),
    }
}

fn build_quiver(params: CategoryParams, args: &QuiverArgs) -> Result<QuiverWindow, InputError> {
    match (&args.trange, &args.columns) {
        (Some(r), _) => Ok(quiver_window(params, args.component, window_arg(r)?, args.depth)?),
        (None, Some(c)) => Ok(quiver_strip(params, args.component, window_arg(c)?, args.depth)?),
        (None, None) => Err(InputError("pass --trange LO HI or --columns LO HI".into())),
    }
}

fn arcs_text(arcs: &[Arc]) -> String {
    arcs.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(" ")
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<Reply, InputError> {
    let n = cli.n.ok_or_else(|| InputError("missing required -n <N>".into()))?;
    let params = CategoryParams::new(n)?;
    match &cli.command {
        Command::Arcs(ArcsCmd::Validate) => {
            let spec = read_family(cli, params, stdin)?;
            let f = spec.materialize()?;
            let components: Vec<i64> = f.arcs().iter().map(|a| component_index(params, *a)).collect();
            Ok(Reply::ok(
                json!({"n": n, "valid": true, "arcs": f.arcs(), "components": components}),
                format!("{} admissible arcs for n={n}", f.len()),
            ))
        }
        Command::Arcs(ArcsCmd::Enumerate { window }) => {
            let arcs = enumerate_arcs(params, window_arg(window)?);
            Ok(Reply::ok(
                json!({"n": n, "arcs": arcs}),
                format!("{} arcs: {}", arcs.len(), arcs_text(&arcs)),
            ))
        }
        Command::Quiver(QuiverCmd::Window(args)) => {
            let qw = build_quiver(params, args)?;
            let text = format!(
                "component {}: {} nodes, {} arrows",
                qw.component,
                qw.nodes.len(),
                qw.arrows.len()
            );
            Ok(Reply::ok(to_value(&qw), text))
        }
        Command::Angulation(AngulationCmd::Check { window }) => {
            let spec = read_family(cli, params, stdin)?;
            let f = spec.materialize()?;
            let ends = classify_ends(&spec);
            if let Err(pair) = validate_noncrossing(&f) {
                return Ok(Reply {
                    pass: false,
                    json: json!({"noncrossing": false, "crossing_pair": pair, "end_behavior": ends}),
                    text: format!("not non-crossing: {pair}"),
                    svg: None,
                });
            }
            let w = window_or_hull(window, &f)?;
            let verdict = is_maximal_in_window(&f, w).map_err(|e| match e {
                MaximalityError::OutsideWindow { .. } => InputError(e.to_string()),
                MaximalityError::Crossing(_) => unreachable!("checked above"),
            })?;
            let (maximal, witness) = match verdict {
                Maximality::Maximal => (true, None),
                Maximality::Addable(a) => (false, Some(a)),
            };
            let text = match witness {
                None => format!(
                    "non-crossing; window-maximal in [{},{}] (window-local certificate)",
                    w.lo(),
                    w.hi()
                ),
                Some(a) => format!(
                    "non-crossing; not window-maximal in [{},{}]: {a} can be added",
                    w.lo(),
                    w.hi()
                ),
            };
            Ok(Reply {
                pass: maximal,
                json: json!({
                    "noncrossing": true,
                    "window": [w.lo(), w.hi()],
                    "window_maximal": maximal,
                    "witness": witness,
                    "certificate": "window-local certificate",
                    "end_behavior": ends,
                }),
                text,
                svg: None,
            })
        }
        Command::Angulation(AngulationCmd::Complete { window }) => {
            let f = read_family(cli, params, stdin)?.materialize()?;
            let w = window_or_hull(window, &f)?;
            let done = complete_in_window(&f, w)?;
            Ok(Reply::ok(
                to_value(&done),
                format!("{} arcs: {}", done.len(), arcs_text(done.arcs())),
            ))
        }
        Command::Family(FamilyCmd::Canonical { m }) => {
            let f = canonical_family(params, *m)?;
            Ok(Reply::ok(to_value(&f), arcs_text(f.arcs())))
        }
        Command::K0(K0Cmd::Present) => {
            let spec = read_family(cli, params, stdin)?;
            let f = spec.materialize()?;
            let pres = k0_presentation(params, &f)?;
            let (truncation, kind) = match &spec {
                FamilySpec::Canonical { m, .. } => (*m, "canonical"),
                FamilySpec::Explicit(_) => (None, "upper-bound presentation"),
            };
            let mut value = to_value(&pres.report(truncation));
            value["presentation"] = json!(kind);
            let classes: Vec<String> = f
                .arcs()
                .iter()
                .zip(&pres.class_map)
                .map(|(a, c)| {
                    let coords: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                    format!("{a}:[{}]", coords.join(","))
                })
                .collect();
            let torsion: Vec<String> = pres.invariant_factors().iter().map(|d| d.to_string()).collect();
            let text = format!(
                "free_rank={}, torsion=[{}], {kind}\nclasses {}",
                pres.free_rank(),
                torsion.join(","),
                classes.join(" ")
            );
            Ok(Reply::ok(value, text))
        }
        Command::K0(K0Cmd::Verify { m }) => {
            let report = verify_theorem(params, *m)?;
            Ok(Reply {
                pass: report.passed,
                json: to_value(&report),
                text: report.summary.clone(),
                svg: None,
            })
        }
        Command::Render(RenderCmd::Arcs {
            window,
            width,
            height,
            all_labels,
        }) => {
            let f = read_family(cli, params, stdin)?.materialize()?;
            let w = window_or_hull(window, &f)?;
            let opts = RenderOptions {
                width: *width,
                height: *height,
                label_all_points: *all_labels,
                ..RenderOptions::default()
            };
            let svg = arc_diagram_svg(&f, w, &opts)?;
            Ok(Reply {
                pass: true,
                json: json!({"svg": svg}),
                text: format!("{} arcs over [{},{}]", f.len(), w.lo(), w.hi()),
                svg: Some(svg),
            })
        }
        Command::Render(RenderCmd::Quiver {
            window,
            highlight_canonical,
            width,
            height,
        }) => {
            let qw = build_quiver(params, window)?;
            let highlight: BTreeSet<Arc> = match highlight_canonical {
                Some(m) => canonical_family(params, *m)?.arcs().iter().copied().collect(),
                None => BTreeSet::new(),
            };
            let opts = RenderOptions {
                width: *width,
                height: *height,
                highlight,
                ..RenderOptions::default()
            };
            let svg = quiver_svg(&qw, &opts)?;
            Ok(Reply {
                pass: true,
                json: json!({"svg": svg}),
                text: format!("{} nodes, {} arrows", qw.nodes.len(), qw.arrows.len()),
                svg: Some(svg),
            })
        }
    }
}
