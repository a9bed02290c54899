use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use coxplane::config::Config;
use coxplane::emit::{render, write_file, Format};
use coxplane::figures::Preset;
use coxplane::parse;
use coxplane::strip::strip_project_parallel;
use coxplane::verify::{self, Suite};
use coxplane_core::coxeter::{cartan_inverse, cartan_matrix, convert_basis};
use coxplane_core::projection::project;
use coxplane_core::quasilattice::{slab_project, window_from_voronoi, StripConfig, StripLattice, Window};
use coxplane_core::weyl::{orbit, symbolic_orbit, voronoi_vertices, LatticeKind};
use coxplane_core::{Basis, Diagram, Family, LatticeVector, Plane, PointSet2D, Rational};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "coxplane",
    version,
    about = "Coxeter-plane projections of A3/A4 lattices and decagonal quasicrystals"
)]
struct Cli {
    /// Output file (directory for `figure`); stdout when omitted.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// TOML file with `[svg]` and `[limits]` sections.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Worker threads for strip enumeration (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    /// Cap on the number of integer points in the strip search box.
    #[arg(long, global = true)]
    max_box: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a Cartan matrix (or its inverse) as JSON.
    Cartan {
        #[arg(long, value_enum, default_value = "a")]
        family: FamilyArg,
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        inverse: bool,
    },
    /// Weyl orbit of a dominant weight, a Voronoi cell, or the symbolic orbit.
    Orbit {
        #[arg(long, default_value = "A4")]
        diagram: String,
        /// Comma-separated highest weight, e.g. 1,0,0,1.
        #[arg(long, required_unless_present_any = ["symbolic", "voronoi"])]
        weight: Option<String>,
        /// Basis the points are reported in.
        #[arg(long, value_enum, default_value = "weight")]
        basis: BasisArg,
        /// Print the 120 generic A4 orbit forms.
        #[arg(long, conflicts_with_all = ["weight", "voronoi"])]
        symbolic: bool,
        #[arg(long, value_enum)]
        voronoi: Option<VoronoiArg>,
        /// Project onto a plane instead of listing lattice vectors (A4 only).
        #[arg(long, value_enum)]
        project: Option<PlaneArg>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Project lattice vectors read from a JSON array of coordinate lists.
    Project {
        #[arg(long, default_value = "A4")]
        diagram: String,
        #[arg(long, value_enum, default_value = "weight")]
        basis: BasisArg,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "par")]
        plane: PlaneArg,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Cut-and-project point set from an A4 lattice.
    Strip {
        #[arg(long, value_enum, default_value = "root")]
        lattice: LatticeArg,
        /// root-voronoi, weight-voronoi or custom:a,b for a + bτ.
        #[arg(long, default_value = "root-voronoi")]
        window: String,
        /// Squared E∥ radius as a,b for a + bτ.
        #[arg(long = "par-r2")]
        par_r2: String,
        /// Offset in the lattice's basis, comma-separated rationals.
        #[arg(long, allow_hyphen_values = true)]
        offset: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Weight vectors with |a_i| ≤ amax and |Σa_i| ≤ smax, projected onto E∥.
    Slab {
        #[arg(long)]
        amax: u32,
        #[arg(long)]
        smax: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Write CSV and SVG for a figure preset, or for all of them.
    Figure {
        #[arg(value_enum)]
        preset: Option<Preset>,
        #[arg(long, conflicts_with = "preset")]
        all: bool,
    },
    /// Run the invariant registry.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        /// List check ids instead of running them.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    #[value(alias = "A")]
    A,
    #[value(alias = "H")]
    H,
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    Root,
    Weight,
}

impl From<BasisArg> for Basis {
    fn from(b: BasisArg) -> Basis {
        match b {
            BasisArg::Root => Basis::Root,
            BasisArg::Weight => Basis::Weight,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum PlaneArg {
    Par,
    Perp,
}

impl From<PlaneArg> for Plane {
    fn from(p: PlaneArg) -> Plane {
        match p {
            PlaneArg::Par => Plane::Parallel,
            PlaneArg::Perp => Plane::Perpendicular,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum LatticeArg {
    Root,
    Weight,
}

impl From<LatticeArg> for StripLattice {
    fn from(l: LatticeArg) -> StripLattice {
        match l {
            LatticeArg::Root => StripLattice::Root,
            LatticeArg::Weight => StripLattice::Weight,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum VoronoiArg {
    A3Root,
    A3Weight,
    A4Root,
    A4Weight,
}

impl From<VoronoiArg> for LatticeKind {
    fn from(v: VoronoiArg) -> LatticeKind {
        match v {
            VoronoiArg::A3Root => LatticeKind::A3Root,
            VoronoiArg::A3Weight => LatticeKind::A3Weight,
            VoronoiArg::A4Root => LatticeKind::A4Root,
            VoronoiArg::A4Weight => LatticeKind::A4Weight,
        }
    }
}

fn parse_diagram(s: &str) -> Result<Diagram> {
    let s = s.trim();
    let (family, rank) = s.split_at(1.min(s.len()));
    let family = match family {
        "A" | "a" => Family::A,
        "H" | "h" => Family::H,
        _ => bail!("unknown diagram {s:?}; expected A1..A5 or H2"),
    };
    let rank: usize = rank.parse().with_context(|| format!("diagram {s:?}"))?;
    Ok(Diagram::new(family, rank)?)
}

fn rational_text(r: &Rational) -> Value {
    Value::String(r.to_string())
}

fn matrix_json(m: &coxplane_core::Matrix<Rational>) -> Value {
    Value::Array(
        (0..m.rows()).map(|i| Value::Array((0..m.rows()).map(|j| rational_text(m.get(i, j))).collect())).collect(),
    )
}

fn vectors_json(vs: &[LatticeVector], basis: Basis) -> String {
    let rows: Vec<Value> =
        vs.iter().map(|v| Value::Array(convert_basis(v, basis).coords().iter().map(rational_text).collect())).collect();
    let mut s = serde_json::to_string_pretty(&rows).expect("strings serialize");
    s.push('\n');
    s
}

fn vectors_csv(vs: &[LatticeVector], basis: Basis) -> String {
    let mut s = String::new();
    for v in vs {
        let row: Vec<String> = convert_basis(v, basis).coords().iter().map(|c| c.to_string()).collect();
        s.push_str(&row.join(","));
        s.push('\n');
    }
    s
}

fn read_vectors(path: &Path, diagram: Diagram, basis: Basis) -> Result<Vec<LatticeVector>> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let value: Value = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    let rows =
        value.as_array().with_context(|| format!("{}: expected a JSON array of coordinate lists", path.display()))?;
    rows.iter()
        .enumerate()
        .map(|(i, row)| {
            let cells = row.as_array().with_context(|| format!("{}: entry {i} is not a list", path.display()))?;
            let coords = cells
                .iter()
                .map(|c| match c {
                    Value::Number(n) => parse::rational(&n.to_string()),
                    Value::String(s) => parse::rational(s),
                    _ => bail!("{}: entry {i} has a non-numeric coordinate", path.display()),
                })
                .collect::<Result<Vec<_>>>()?;
            LatticeVector::new(diagram, basis, coords).with_context(|| format!("{}: entry {i}", path.display()))
        })
        .collect()
}

fn project_all(vs: &[LatticeVector], plane: Plane, metadata: Vec<(String, String)>) -> Result<PointSet2D> {
    let points = vs.iter().map(|v| project(v, plane)).collect::<Result<Vec<_>, _>>()?;
    let mut set = PointSet2D::new(points, metadata);
    let n = set.len();
    set.push_meta("count", n.to_string());
    Ok(set)
}

fn output(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => write_file(path, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()).context("writing to stdout"),
    }
}

fn strip_config(
    lattice: LatticeArg,
    window: &str,
    par_r2: &str,
    offset: Option<&str>,
    max_box: u128,
) -> Result<StripConfig> {
    let lattice = StripLattice::from(lattice);
    let window = match window {
        "root-voronoi" => window_from_voronoi(StripLattice::Root),
        "weight-voronoi" => window_from_voronoi(StripLattice::Weight),
        w => match w.strip_prefix("custom:") {
            Some(r) => Window::custom(parse::golden(r)?)?,
            None => bail!("unknown window {w:?}; expected root-voronoi, weight-voronoi or custom:a,b"),
        },
    };
    let mut cfg = StripConfig::new(lattice, window, parse::golden(par_r2)?)?.with_max_box(max_box);
    if let Some(o) = offset {
        let v = LatticeVector::new(Diagram::A4, lattice.basis(), parse::rationals(o)?)?;
        cfg = cfg.with_offset(v)?;
    }
    Ok(cfg)
}

fn run(cli: Cli) -> Result<ExitCode> {
    let mut config = match &cli.config {
        Some(path) => Config::load(path)?,
        None => Config::default(),
    };
    if let Some(cap) = cli.max_box {
        config.limits.max_box = cap;
    }
    let out = cli.out.as_deref();
    let emit = |set: &PointSet2D, format: Format| output(out, &render(set, format, &config.svg));

    match cli.command {
        Command::Cartan { family, rank, inverse } => {
            let family = match family {
                FamilyArg::A => Family::A,
                FamilyArg::H => Family::H,
            };
            let d = Diagram::new(family, rank)?;
            let m = if inverse { cartan_inverse(d)? } else { cartan_matrix(d)? };
            let doc = json!({
                "diagram": d.to_string(),
                "inverse": inverse,
                "matrix": matrix_json(&m),
            });
            output(out, &(serde_json::to_string_pretty(&doc)? + "\n"))?;
        }
        Command::Orbit { diagram, weight, basis, symbolic, voronoi, project, format } => {
            if symbolic {
                let text: String = symbolic_orbit().iter().map(|v| format!("{v}\n")).collect();
                return output(out, &text).map(|_| ExitCode::SUCCESS);
            }
            let (vs, meta) = match (voronoi, weight) {
                (Some(kind), _) => {
                    let kind = LatticeKind::from(kind);
                    (voronoi_vertices(kind), vec![("voronoi".to_string(), format!("{kind:?}"))])
                }
                (None, Some(w)) => {
                    let d = parse_diagram(&diagram)?;
                    let hw = LatticeVector::new(d, Basis::Weight, parse::rationals(&w)?)?;
                    (orbit(&hw)?, vec![("highest_weight".to_string(), hw.to_string())])
                }
                (None, None) => bail!("one of --weight, --voronoi or --symbolic is required"),
            };
            match project {
                Some(plane) => emit(&project_all(&vs, plane.into(), meta)?, format)?,
                None => match format {
                    Format::Json => output(out, &vectors_json(&vs, basis.into()))?,
                    Format::Csv => output(out, &vectors_csv(&vs, basis.into()))?,
                    Format::Svg => bail!("svg output needs --project"),
                },
            }
        }
        Command::Project { diagram, basis, input, plane, format } => {
            let d = parse_diagram(&diagram)?;
            let vs = read_vectors(&input, d, basis.into())?;
            let meta = vec![("input".to_string(), input.display().to_string())];
            emit(&project_all(&vs, plane.into(), meta)?, format)?;
        }
        Command::Strip { lattice, window, par_r2, offset, format } => {
            let cfg = strip_config(lattice, &window, &par_r2, offset.as_deref(), config.limits.max_box.into())?;
            emit(&strip_project_parallel(&cfg, cli.threads)?, format)?;
        }
        Command::Slab { amax, smax, format } => emit(&slab_project(amax, smax), format)?,
        Command::Figure { preset, all } => {
            let dir = out.unwrap_or(Path::new("figures"));
            let presets: Vec<Preset> = match (preset, all) {
                (Some(p), _) => vec![p],
                (None, true) => Preset::ALL.to_vec(),
                (None, false) => bail!("name a preset or pass --all"),
            };
            for p in presets {
                for path in p.run(dir, &config, cli.threads)? {
                    eprintln!("wrote {}", path.display());
                }
            }
        }
        Command::Verify { suite, list } => {
            if list {
                output(out, &verify::describe())?;
                return Ok(ExitCode::SUCCESS);
            }
            let report = verify::run(suite);
            output(out, &report.to_string())?;
            if report.failures() > 0 {
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
