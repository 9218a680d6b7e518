//! Command-line driver. Every flag can also be set through an environment
//! variable with the `TISO_` prefix (`TISO_N`, `TISO_KAPPA`, ...).

use std::fmt::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::cayley::{
    check_equivariant_iso, class_window_graph, conjecture_scan, diagram_window_graph, orbit_bfs,
    scan_finiteness, sv_window_graph, Caps, CayleyGraph, DiagramAction, OrbitReport, ScanCell, SeedSpec,
};
use crate::classes::{ClassSpace, LabeledDiagram};
use crate::diagrams::RectConfig;
use crate::error::{Error, Result};
use crate::export::{graph_to_dot, graph_to_json};
use crate::svaction::{base_point, build_x_hat, recover_a, svdeg, AugMatrix, Kappa, SuperVector, SvAction};

#[derive(Debug, Parser)]
#[command(
    name = "tiso",
    version,
    about = "Groupoid actions on Young diagrams, diagram classes and supervectors"
)]
pub struct Cli {
    /// Rows of the rectangle.
    #[arg(long, global = true, default_value_t = 2, env = "TISO_N")]
    pub n: usize,
    /// Columns of the rectangle.
    #[arg(long, global = true, default_value_t = 3, env = "TISO_M")]
    pub m: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text, env = "TISO_FORMAT")]
    pub format: Format,
    /// Worker threads for orbit searches. Output does not depend on it.
    #[arg(long, global = true, default_value_t = 1, env = "TISO_THREADS")]
    pub threads: usize,
    /// Seed for random scan vectors.
    #[arg(long = "prng-seed", global = true, default_value_t = 0, env = "TISO_PRNG_SEED")]
    pub prng_seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Functor {
    /// Diagrams inside the rectangle.
    #[value(name = "F", alias = "f")]
    Diagrams,
    /// Classes of labeled diagrams.
    #[value(name = "classes", alias = "T")]
    Classes,
    /// Integer supervectors.
    #[value(name = "sv")]
    Sv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the members of the class of (lambda, k).
    Class {
        #[arg(long, value_delimiter = ',')]
        lambda: Vec<usize>,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        k: i64,
    },
    /// Print x_hat(lambda, k) and its augmented matrix.
    Xhat {
        #[arg(long, value_delimiter = ',')]
        lambda: Vec<usize>,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        k: i64,
        /// Print only the zero entries of the matrix.
        #[arg(long)]
        zeros_only: bool,
    },
    /// Read the diagram a(L) off a supervector given as a1,..,an,b1,..,bm.
    Recover {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, env = "TISO_SEED")]
        seed: Vec<i64>,
    },
    /// Breadth-first orbit search.
    Orbit {
        #[arg(long, value_enum, default_value_t = Functor::Sv)]
        functor: Functor,
        /// Parameter ±p/q; defaults to -m/n.
        #[arg(long, allow_hyphen_values = true, env = "TISO_KAPPA")]
        kappa: Option<String>,
        /// Seed vertex: a supervector for `sv`, a partition for `F` and `classes`.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, env = "TISO_SEED")]
        seed: Vec<i64>,
        /// Shift of the seed class for `classes`.
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        k: i64,
        /// max_vertices[,max_abs_coordinate]
        #[arg(long, value_delimiter = ',', env = "TISO_CAPS")]
        caps: Vec<i64>,
        /// Restrict the base to rows,cols.
        #[arg(long, value_delimiter = ',')]
        restrict: Vec<usize>,
        /// Search the reached vertices for translates of the base point.
        #[arg(long)]
        conjecture: bool,
    },
    /// Export a Cayley graph.
    Graph {
        #[arg(long, value_enum, default_value_t = Functor::Diagrams)]
        functor: Functor,
        /// Degree window lo,hi.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, env = "TISO_WINDOW")]
        window: Vec<i64>,
    },
    /// Check that x_hat is a label-preserving bijection on a degree window.
    Verify {
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            default_value = "0,6",
            env = "TISO_WINDOW"
        )]
        window: Vec<i64>,
    },
    /// Orbit finiteness scan over random or explicit seeds.
    Scan {
        #[arg(long, allow_hyphen_values = true, env = "TISO_KAPPA")]
        kappa: Option<String>,
        /// Number of random seeds; ignored when --seed is given.
        #[arg(long, default_value_t = 50)]
        count: usize,
        /// Random coordinates are drawn from [-range, range].
        #[arg(long, default_value_t = 20)]
        range: i64,
        /// Explicit seed vector.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, env = "TISO_SEED")]
        seed: Vec<i64>,
        /// Start from the base point instead of random seeds.
        #[arg(long)]
        base_point: bool,
        #[arg(long, value_delimiter = ',')]
        restrict: Vec<usize>,
        #[arg(long, value_delimiter = ',', env = "TISO_CAPS")]
        caps: Vec<i64>,
    },
}

/// Text to print and the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub code: i32,
}

impl Outcome {
    fn ok(output: String) -> Outcome {
        Outcome { output, code: 0 }
    }
}

/// Parses `args` (including the program name) and runs the command. Errors
/// become a JSON failure report with exit code 2.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => Outcome { output: e.to_string(), code: if e.use_stderr() { 2 } else { 0 } },
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(cli.threads.max(1)).build();
    let result = match pool {
        Ok(pool) => pool.install(|| dispatch(cli)),
        Err(e) => Err(Error::Discrepancy(e.to_string())),
    };
    result.unwrap_or_else(|e| Outcome {
        output: json!({ "status": "error", "error": e.to_string() }).to_string() + "\n",
        code: 2,
    })
}

fn parse_window(w: &[i64]) -> Result<(i64, i64)> {
    match *w {
        [lo, hi] if lo <= hi => Ok((lo, hi)),
        [lo, hi] => Err(Error::WindowEmpty { lo, hi }),
        _ => Err(Error::Discrepancy(format!("window must be lo,hi, got {w:?}"))),
    }
}

fn parse_caps(c: &[i64]) -> Result<Caps> {
    let mut caps = Caps::default();
    match *c {
        [] => {}
        [v] => caps.max_vertices = v.max(0) as usize,
        [v, a] => {
            caps.max_vertices = v.max(0) as usize;
            caps.max_abs_coordinate = a;
        }
        _ => return Err(Error::Discrepancy(format!("caps must be max_vertices[,max_abs], got {c:?}"))),
    }
    Ok(caps)
}

fn parse_kappa(rect: &RectConfig, text: &Option<String>) -> Result<Kappa> {
    let k = match text {
        Some(t) => t.parse()?,
        None => Kappa::standard(rect)?,
    };
    k.validate(rect)?;
    Ok(k)
}

fn sv_action(rect: RectConfig, kappa: Kappa, restrict: &[usize]) -> Result<SvAction> {
    let action = SvAction::new(rect, kappa)?;
    match *restrict {
        [] => Ok(action),
        [rows, cols] => action.restricted(rows, cols),
        _ => Err(Error::Discrepancy(format!("restrict must be rows,cols, got {restrict:?}"))),
    }
}

fn as_parts(seed: &[i64]) -> Vec<usize> {
    seed.iter().map(|&x| x.max(0) as usize).collect()
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    let rect = RectConfig::new(cli.n, cli.m)?;
    match &cli.command {
        Command::Class { lambda, k } => cmd_class(cli, rect, lambda, *k),
        Command::Xhat { lambda, k, zeros_only } => cmd_xhat(cli, rect, lambda, *k, *zeros_only),
        Command::Recover { seed } => {
            let v = SuperVector::from_flat(&rect, seed)?;
            let lambda = recover_a(&rect, &v)?;
            Ok(Outcome::ok(match cli.format {
                Format::Json => json!({ "vector": v, "lambda": lambda }).to_string() + "\n",
                _ => format!("a{v} = {lambda}\n"),
            }))
        }
        Command::Orbit { functor, kappa, seed, k, caps, restrict, conjecture } => {
            let caps = parse_caps(caps)?;
            match functor {
                Functor::Diagrams => {
                    let seed = if seed.is_empty() { rect.empty() } else { rect.partition(&as_parts(seed))? };
                    let (g, rep) = orbit_bfs(&DiagramAction::new(rect), seed, caps);
                    Ok(Outcome::ok(render_orbit(cli.format, &g, &rep)))
                }
                Functor::Classes => {
                    let space = ClassSpace::new(rect)?;
                    let lambda =
                        if seed.is_empty() { rect.empty() } else { rect.partition(&as_parts(seed))? };
                    let c = space.enumerate_class(&LabeledDiagram::new(lambda, *k))?;
                    let (g, rep) = orbit_bfs(&space, c, caps);
                    Ok(Outcome::ok(render_orbit(cli.format, &g, &rep)))
                }
                Functor::Sv => {
                    let kappa = parse_kappa(&rect, kappa)?;
                    let action = sv_action(rect, kappa, restrict)?;
                    let seed = if seed.is_empty() {
                        base_point(&rect)
                    } else {
                        SuperVector::from_flat(&rect, seed)?
                    };
                    let (g, mut rep) = orbit_bfs(&action, seed, caps);
                    if *conjecture {
                        rep.witnesses = Some(conjecture_scan(&rect, &g));
                    }
                    Ok(Outcome::ok(render_orbit(cli.format, &g, &rep)))
                }
            }
        }
        Command::Graph { functor, window } => {
            let window = if window.is_empty() { None } else { Some(parse_window(window)?) };
            let out = match (functor, window) {
                (Functor::Diagrams, None) => {
                    let (g, _) = orbit_bfs(&DiagramAction::new(rect), rect.empty(), Caps::default());
                    render_graph(cli.format, &g)
                }
                (Functor::Diagrams, Some((lo, hi))) => {
                    render_graph(cli.format, &diagram_window_graph(&rect, lo, hi)?)
                }
                (Functor::Classes, w) => {
                    let (lo, hi) = w.unwrap_or((0, 6));
                    render_graph(cli.format, &class_window_graph(&ClassSpace::new(rect)?, lo, hi)?)
                }
                (Functor::Sv, w) => {
                    let (lo, hi) = w.unwrap_or((0, 6));
                    render_graph(cli.format, &sv_window_graph(&rect, lo, hi)?)
                }
            };
            Ok(Outcome::ok(out))
        }
        Command::Verify { window } => {
            let (lo, hi) = parse_window(window)?;
            let classes = class_window_graph(&ClassSpace::new(rect)?, lo, hi)?;
            let orbit = sv_window_graph(&rect, lo, hi)?;
            let rep = check_equivariant_iso(&rect, &classes, &orbit)?;
            let verdict = if rep.passed { "PASS" } else { "FAIL" };
            let output = match cli.format {
                Format::Json => {
                    json!({ "n": rect.n(), "m": rect.m(), "window": [lo, hi], "status": verdict, "report": rep })
                        .to_string()
                        + "\n"
                }
                _ => {
                    let mut s = format!(
                        "window [{lo}, {hi}] on {}x{}: {} vertices, {} edges\nequivariant-iso: {verdict}\n",
                        rect.n(),
                        rect.m(),
                        rep.vertices,
                        rep.edges
                    );
                    if let Some(m) = &rep.first_mismatch {
                        writeln!(s, "first mismatch: {m}").unwrap();
                    }
                    s
                }
            };
            Ok(Outcome { output, code: if rep.passed { 0 } else { 1 } })
        }
        Command::Scan { kappa, count, range, seed, base_point, restrict, caps } => {
            let kappa = parse_kappa(&rect, kappa)?;
            let base = match restrict[..] {
                [] => None,
                [r, c] => Some((r, c)),
                _ => return Err(Error::Discrepancy(format!("restrict must be rows,cols, got {restrict:?}"))),
            };
            let cell = ScanCell { n: rect.n(), m: rect.m(), kappa, base };
            let seeds = if *base_point {
                SeedSpec::BasePoint
            } else if !seed.is_empty() {
                SeedSpec::Explicit(vec![seed.clone()])
            } else {
                SeedSpec::Random { count: *count, lo: -range, hi: *range }
            };
            let table = scan_finiteness(&[cell], &seeds, parse_caps(caps)?, cli.prng_seed)?;
            let output = match cli.format {
                Format::Json => serde_json::to_string(&table).expect("serializable") + "\n",
                _ => {
                    let mut s = format!(
                        "kappa {kappa} on {}x{}{}, prng seed {}\n",
                        rect.n(),
                        rect.m(),
                        base.map(|(r, c)| format!(" restricted to {r}x{c}")).unwrap_or_default(),
                        table.prng_seed
                    );
                    for row in &table.rows {
                        writeln!(
                            s,
                            "{:<24} {:?} vertices={} max_coord={}",
                            row.seed.to_string(),
                            row.status,
                            row.vertex_count,
                            row.max_coordinate
                        )
                        .unwrap();
                    }
                    let closed = table.rows.iter().filter(|r| r.status == crate::OrbitStatus::Closed).count();
                    writeln!(s, "closed {closed}/{}", table.rows.len()).unwrap();
                    s
                }
            };
            Ok(Outcome::ok(output))
        }
    }
}

fn cmd_class(cli: &Cli, rect: RectConfig, lambda: &[usize], k: i64) -> Result<Outcome> {
    let space = ClassSpace::new(rect)?;
    let lambda = rect.partition(lambda)?;
    let c = space.enumerate_class(&LabeledDiagram::new(lambda, k))?;
    let output = match cli.format {
        Format::Json => {
            let members: Vec<_> = c
                .members()
                .iter()
                .map(|s| json!({ "lambda": s.lambda, "k": s.k, "word": rect.to_word(&s.lambda), "degree": s.degree() }))
                .collect();
            json!({ "canonical": c, "degree": c.degree(), "members": members }).to_string() + "\n"
        }
        _ => {
            let mut s = format!("class {c}, degree {}, {} members\n", c.degree(), c.members().len());
            for m in c.members() {
                writeln!(
                    s,
                    "  {:<12} k={:<5} word={} degree={}",
                    m.lambda.to_string(),
                    m.k,
                    rect.to_word(&m.lambda),
                    m.degree()
                )
                .unwrap();
            }
            s
        }
    };
    Ok(Outcome::ok(output))
}

fn cmd_xhat(cli: &Cli, rect: RectConfig, lambda: &[usize], k: i64, zeros_only: bool) -> Result<Outcome> {
    let lambda = rect.partition(lambda)?;
    let s = LabeledDiagram::new(lambda, k);
    let v = build_x_hat(&rect, &s)?;
    let m = AugMatrix::new(&v);
    let output = match cli.format {
        Format::Json => {
            json!({ "lambda": s.lambda, "k": s.k, "vector": v, "degree": svdeg(&rect, &v), "matrix": m })
                .to_string()
                + "\n"
        }
        _ => format!("x_hat({}, {}) = {v}\n{}", s.lambda, s.k, m.render(zeros_only)),
    };
    Ok(Outcome::ok(output))
}

fn render_orbit<V: Ord + Clone + serde::Serialize + std::fmt::Debug>(
    format: Format,
    g: &CayleyGraph<V>,
    rep: &OrbitReport,
) -> String {
    match format {
        Format::Json => graph_to_json(g, Some(rep)).to_string() + "\n",
        Format::Dot => graph_to_dot(g),
        Format::Text => {
            let mut s = format!(
                "status: {:?}\nvertices: {}\nedges: {}\nmax_coordinate: {}\n",
                rep.status,
                rep.vertex_count,
                g.edges.len(),
                rep.max_coordinate
            );
            if let Some(w) = &rep.witnesses {
                match &w.witness {
                    Some((v, a)) => writeln!(s, "translate of base point: {} (shift {a})", json!(v)).unwrap(),
                    None => writeln!(s, "translate of base point: none within caps").unwrap(),
                }
                writeln!(s, "permuted near misses: {}", w.near_misses.len()).unwrap();
            }
            s
        }
    }
}

fn render_graph<V: Ord + Clone + serde::Serialize>(format: Format, g: &CayleyGraph<V>) -> String {
    match format {
        Format::Json => graph_to_json::<V, ()>(g, None).to_string() + "\n",
        Format::Dot => graph_to_dot(g),
        Format::Text => {
            let mut s = format!("{} vertices, {} edges\n", g.vertices.len(), g.edges.len());
            for e in &g.edges {
                writeln!(s, "{} --{}--> {}", json!(e.src), e.label, json!(e.dst)).unwrap();
            }
            s
        }
    }
}
