//! `tbk` subcommands. Exit codes: 0 success, 1 domain error, 2 usage or
//! input error.

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};
use tbk_core::bergman::{bergman_projection, flag_filtration, is_bergman_point};
use tbk_core::bundle::{Positivity, TropicalBundle};
use tbk_core::ext_split::{defect_obstruction, equivalent_split_search, principal_extension_catalog, pushforward_bundle};
use tbk_core::matroid::{ExtensionMap, Matroid};
use tbk_core::polyhedron::{box_points, LineBundle};
use tbk_core::tautological::{self, Which};

use crate::io::{self, BundleDoc, ExtensionDoc, FanSpec, MatroidSpec};
use crate::report;
use crate::CliError;

pub const FANO_BUNDLE: &str = include_str!("../fixtures/fano-bundle.json");
pub const VAMOS_P1: &str = include_str!("../fixtures/vamos-p1.json");
pub const U23_ZERO: &str = include_str!("../fixtures/u23-zero.json");

#[derive(Parser, Debug)]
#[command(name = "tbk", version, about = "Matroids, Bergman fans and tropical toric vector bundles")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Read the input document from stdin when no file is given; forces JSON output.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Md,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Matroid queries.
    #[command(subcommand)]
    Matroid(MatroidOp),
    /// Bergman fan membership, projection and flags.
    #[command(subcommand)]
    Bergman(BergmanOp),
    /// Bundle computations.
    #[command(subcommand)]
    Bundle(BundleOp),
    /// Tautological bundles on the permutahedral variety.
    #[command(subcommand)]
    Taut(TautOp),
    /// Extensions and splitting.
    #[command(subcommand)]
    Ext(ExtOp),
    /// Print a bundled example document.
    Examples {
        #[arg(value_enum)]
        name: Example,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Example {
    FanoBundle,
    VamosP1,
    U23Zero,
}

impl Example {
    pub fn text(self) -> &'static str {
        match self {
            Example::FanoBundle => FANO_BUNDLE,
            Example::VamosP1 => VAMOS_P1,
            Example::U23Zero => U23_ZERO,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum MatroidOp {
    Info { matroid: String },
    Flats { matroid: String },
    Circuits { matroid: String },
    Modular { matroid: String },
}

#[derive(Args, Debug)]
pub struct PointArgs {
    /// Name or JSON file.
    matroid: String,
    /// Integer vector in ground order, e.g. `--w=0,1,1`.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    w: Vec<i64>,
}

#[derive(Subcommand, Debug)]
pub enum BergmanOp {
    Check(PointArgs),
    Project(PointArgs),
    Flag(PointArgs),
}

#[derive(Args, Debug, Clone)]
pub struct BundleInput {
    /// Bundle JSON, or a diagram CSV together with --matroid and --fan; `-` reads stdin.
    file: Option<String>,
    /// Matroid of a CSV diagram (name or JSON file).
    #[arg(long)]
    matroid: Option<String>,
    /// Fan of a CSV diagram (name or JSON file).
    #[arg(long)]
    fan: Option<String>,
}

fn vector_arg(s: &str) -> Result<i64, String> {
    s.trim().parse().map_err(|_| format!("not an integer: {s}"))
}

#[derive(Subcommand, Debug)]
pub enum BundleOp {
    /// Check the diagram and print the certified adapted bases.
    Validate(BundleInput),
    /// Sections in degree u, over the whole fan or one cone (`--cone 0,1`).
    Sections {
        #[command(flatten)]
        input: BundleInput,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true, value_parser = vector_arg)]
        u: Vec<i64>,
        #[arg(long, value_delimiter = ',')]
        cone: Option<Vec<usize>>,
    },
    /// Euler characteristic in degree u.
    Euler {
        #[command(flatten)]
        input: BundleInput,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true, value_parser = vector_arg)]
        u: Vec<i64>,
    },
    /// Total Euler characteristic and sections over the support box.
    EulerTotal(BundleInput),
    /// Equivariant Chern classes (all degrees unless `--i`).
    Chern {
        #[command(flatten)]
        input: BundleInput,
        #[arg(long)]
        i: Option<usize>,
    },
    /// Character multisets per maximal cone.
    Kclass(BundleInput),
    /// Parliament of polytopes: vertices and lattice point counts.
    Parliament(BundleInput),
    /// Global generation with a basis per maximal cone.
    Gg(BundleInput),
    /// Splitting types on every wall and the nef/ample verdicts.
    Nef(BundleInput),
    /// Restriction to the curve of a wall.
    Restrict {
        #[command(flatten)]
        input: BundleInput,
        #[arg(long)]
        wall: usize,
    },
    /// Common adapted basis of a bundle over ℙ¹.
    Split(BundleInput),
    /// Tensor with a line bundle given by its ray values.
    Twist {
        #[command(flatten)]
        input: BundleInput,
        #[arg(long = "L", value_delimiter = ',', allow_hyphen_values = true, required = true, value_parser = vector_arg)]
        l: Vec<i64>,
    },
    /// Smallest twist by an ample L after which Euler characteristic equals sections.
    N0 {
        #[command(flatten)]
        input: BundleInput,
        #[arg(long = "L", value_delimiter = ',', allow_hyphen_values = true, required = true, value_parser = vector_arg)]
        l: Vec<i64>,
    },
}

#[derive(Subcommand, Debug)]
pub enum TautOp {
    /// Diagram of the tautological bundle.
    Build {
        matroid: String,
        #[arg(long, default_value = "sub-dual", value_parser = parse_which)]
        which: Which,
    },
    /// Splitting types of the tautological bundle on every wall.
    NefSweep {
        matroid: String,
        /// Permit seven elements.
        #[arg(long)]
        allow_large: bool,
    },
}

fn parse_which(s: &str) -> Result<Which, String> {
    Which::parse(s).ok_or_else(|| format!("expected sub-dual or quotient, got {s}"))
}

#[derive(Subcommand, Debug)]
pub enum ExtOp {
    /// Push a bundle along an extension map file or a principal extension.
    Push {
        #[command(flatten)]
        input: BundleInput,
        #[arg(long, conflicts_with = "flat")]
        ext: Option<String>,
        /// Flat (comma-separated labels) carrying a new generic element.
        #[arg(long, value_delimiter = ',')]
        flat: Option<Vec<String>>,
        #[arg(long, default_value = "z")]
        label: String,
    },
    /// Search the bundle and the given extensions for a split representative.
    SplitSearch {
        #[command(flatten)]
        input: BundleInput,
        #[arg(long)]
        ext: Vec<String>,
        /// Add every principal extension on a nonempty flat.
        #[arg(long)]
        principal_catalog: bool,
    },
    /// Pair of flats from the two row flags with positive submodular defect.
    Defect(BundleInput),
}

struct Ctx<'a> {
    json: bool,
    stdin: &'a mut (dyn Read + Send),
}

impl Ctx<'_> {
    fn stdin_text(&mut self) -> Result<String, CliError> {
        let mut s = String::new();
        self.stdin.read_to_string(&mut s).map_err(|e| CliError::Input(format!("stdin: {e}")))?;
        Ok(s)
    }

    fn bundle(&mut self, input: &BundleInput) -> Result<TropicalBundle, CliError> {
        let (text, origin) = match input.file.as_deref() {
            Some("-") => (self.stdin_text()?, "stdin".to_string()),
            Some(f) => (io::read(f)?, f.to_string()),
            None if self.json => (self.stdin_text()?, "stdin".to_string()),
            None => return Err(CliError::Usage("missing bundle file (or use --json to read stdin)".into())),
        };
        let flags = input.matroid.is_some() || input.fan.is_some();
        let json = !origin.ends_with(".csv") && text.trim_start().starts_with('{');
        if json && flags {
            return Err(CliError::Usage("--matroid and --fan apply only to CSV diagrams".into()));
        }
        if !json {
            let (Some(m), Some(f)) = (&input.matroid, &input.fan) else {
                return Err(CliError::Usage("a CSV diagram needs --matroid and --fan".into()));
            };
            let m = MatroidSpec::from_arg(m)?.build()?;
            let fan = FanSpec::from_arg(f)?.build()?;
            let diagram = io::read_diagram_csv(&text, &m, fan.rays().len())?;
            Ok(TropicalBundle::new(m, fan, diagram)?)
        } else {
            io::parse_json::<BundleDoc>(&text, &origin)?.build()
        }
    }
}

fn matroid_arg(s: &str) -> Result<Matroid, CliError> {
    MatroidSpec::from_arg(s)?.build()
}

fn bundle_doc(b: &TropicalBundle) -> Value {
    serde_json::to_value(BundleDoc::canonical(b)).unwrap()
}

fn thread_pool() -> Result<rayon::ThreadPool, CliError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var("TBK_THREADS") {
        let n: usize = v.trim().parse().map_err(|_| CliError::Usage(format!("TBK_THREADS must be a number, got {v:?}")))?;
        builder = builder.num_threads(n);
    }
    builder.build().map_err(|e| CliError::Usage(e.to_string()))
}

/// `(χ, h⁰, lo, hi)` summed over the support box in parallel.
pub fn totals(b: &TropicalBundle) -> Result<(i64, i64, Vec<i64>, Vec<i64>), CliError> {
    let (lo, hi) = b.support_box()?;
    let cones = b.fan().cones();
    let points: Vec<Vec<i64>> = box_points(&lo, &hi).collect();
    let (chi, h0) =
        points.par_iter().map(|u| (b.chi_u_with(&cones, u), b.h0_u(u).map(|s| s.rank as i64).unwrap_or(0))).reduce(|| (0, 0), |a, c| (a.0 + c.0, a.1 + c.1));
    Ok((chi, h0, lo, hi))
}

fn nef_report(b: &TropicalBundle) -> Result<Value, CliError> {
    let walls = b.fan().walls();
    let results = (0..walls.len())
        .into_par_iter()
        .map(|w| {
            let c = b.restrict_to_curve(w)?;
            let s = c.bundle.splits()?;
            Ok((c, s))
        })
        .collect::<Result<Vec<_>, tbk_core::Error>>()?;
    let mut nef = true;
    let mut ample = true;
    let mut unsplit = false;
    let rows: Vec<Value> = results
        .iter()
        .map(|(c, s)| {
            let wall = &walls[c.wall];
            match s {
                Some(s) => {
                    nef &= s.degrees.iter().all(|d| d.1 >= 0);
                    ample &= s.degrees.iter().all(|d| d.1 > 0);
                }
                None => unsplit = true,
            }
            json!({
                "wall": c.wall,
                "face": report::cone_labels(b, &wall.face),
                "elements": c.elements.iter().map(|&e| b.matroid().labels()[e].clone()).collect::<Vec<_>>(),
                "type": s.as_ref().map(|s| s.degree_multiset()),
            })
        })
        .collect();
    let verdict = |ok: bool| {
        report::positivity(if unsplit {
            Positivity::UnsplitWithinMatroid
        } else if ok {
            Positivity::Yes
        } else {
            Positivity::No
        })
    };
    Ok(json!({"nef": verdict(nef), "ample": verdict(ample), "walls": rows}))
}

fn bundle_op(ctx: &mut Ctx, op: &BundleOp) -> Result<(String, Value), CliError> {
    Ok(match op {
        BundleOp::Validate(input) => {
            let b = ctx.bundle(input)?;
            let m = b.matroid();
            let cones: Vec<Value> = b
                .fan()
                .max_cones()
                .iter()
                .zip(b.adapted_bases())
                .map(|(c, &basis)| json!({"cone": report::cone_labels(&b, c), "basis": report::set(m, basis)}))
                .collect();
            let v = json!({
                "valid": true,
                "elements": m.len(),
                "rank": m.rank(),
                "dim": b.fan().dim(),
                "rays": b.fan().rays().len(),
                "diagram": report::diagram_rows(&b),
                "adapted_bases": cones,
            });
            ("Bundle".into(), v)
        }
        BundleOp::Sections { input, u, cone } => {
            let b = ctx.bundle(input)?;
            let s = match cone {
                Some(c) => b.h0_u_sigma(c, u)?,
                None => b.h0_u(u)?,
            };
            ("Sections".into(), json!({"flat": report::set(b.matroid(), s.flat), "rank": s.rank}))
        }
        BundleOp::Euler { input, u } => {
            let b = ctx.bundle(input)?;
            ("Euler characteristic".into(), json!({"u": u, "chi": b.chi_u(u)?, "h0": b.h0_u(u)?.rank}))
        }
        BundleOp::EulerTotal(input) => {
            let b = ctx.bundle(input)?;
            let (chi, h0, lo, hi) = totals(&b)?;
            ("Totals".into(), json!({"chi_total": chi, "h0_total": h0, "box": {"lo": lo, "hi": hi}}))
        }
        BundleOp::Chern { input, i } => {
            let b = ctx.bundle(input)?;
            let degrees: Vec<usize> = match i {
                Some(i) => vec![*i],
                None => (0..=b.rank()).collect(),
            };
            let classes: Vec<Value> = degrees
                .iter()
                .map(|&i| {
                    let forms = b.chern_class(i);
                    json!({
                        "i": i,
                        "cones": b.fan().max_cones().iter().zip(forms).map(|(c, p)| json!({"cone": report::cone_labels(&b, c), "form": p.to_string()})).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let ch: Vec<Value> =
                b.fan().max_cones().iter().zip(b.chern_character()).map(|(c, p)| json!({"cone": report::cone_labels(&b, c), "ch": p.to_string()})).collect();
            ("Chern classes".into(), json!({"classes": classes, "chern_character": ch}))
        }
        BundleOp::Kclass(input) => {
            let b = ctx.bundle(input)?;
            let m = b.matroid();
            let cones: Vec<Value> = (0..b.fan().max_cones().len())
                .map(|k| {
                    let chars = b.characters_on_cone(k)?;
                    Ok(json!({
                        "cone": report::cone_labels(&b, &b.fan().max_cones()[k]),
                        "characters": chars.iter().map(|(e, u)| json!({"element": m.labels()[*e], "u": u})).collect::<Vec<_>>(),
                    }))
                })
                .collect::<Result<_, CliError>>()?;
            let bad = b.wall_incompatibilities();
            ("K-class".into(), json!({"cones": cones, "wall_compatible": bad.is_empty()}))
        }
        BundleOp::Parliament(input) => {
            let b = ctx.bundle(input)?;
            let members: Vec<Value> = b
                .parliament()
                .iter()
                .enumerate()
                .map(|(e, p)| {
                    let verts: Vec<Value> = p.vertices().iter().map(|v| json!(v.iter().map(report::rat).collect::<Vec<_>>())).collect();
                    let points = p.lattice_points().ok().map(|l| l.len());
                    json!({
                        "element": b.matroid().labels()[e],
                        "column": b.diagram().iter().map(|r| r[e]).collect::<Vec<_>>(),
                        "vertices": verts,
                        "lattice_points": points,
                    })
                })
                .collect();
            ("Parliament".into(), json!({"members": members}))
        }
        BundleOp::Gg(input) => {
            let b = ctx.bundle(input)?;
            let g = b.global_generation();
            let cones: Vec<Value> = b
                .fan()
                .max_cones()
                .iter()
                .zip(&g.per_cone)
                .map(|(c, s)| json!({"cone": report::cone_labels(&b, c), "basis": s.map(|s| report::set(b.matroid(), s))}))
                .collect();
            ("Global generation".into(), json!({"globally_generated": g.holds(), "cones": cones}))
        }
        BundleOp::Nef(input) => {
            let b = ctx.bundle(input)?;
            ("Positivity".into(), nef_report(&b)?)
        }
        BundleOp::Restrict { input, wall } => {
            let b = ctx.bundle(input)?;
            let c = b.restrict_to_curve(*wall)?;
            let split = c.bundle.splits()?;
            let v = json!({
                "wall": wall,
                "face": report::cone_labels(&b, &b.fan().walls()[*wall].face),
                "basis_plus": report::set(b.matroid(), c.basis_plus),
                "basis_minus": report::set(b.matroid(), c.basis_minus),
                "bundle": bundle_doc(&c.bundle),
                "splitting": report::splitting(c.bundle.matroid(), &split),
            });
            ("Restriction".into(), v)
        }
        BundleOp::Split(input) => {
            let b = ctx.bundle(input)?;
            let s = b.splits()?;
            ("Splitting".into(), json!({"splits": s.is_some(), "splitting": report::splitting(b.matroid(), &s)}))
        }
        BundleOp::Twist { input, l } => {
            let b = ctx.bundle(input)?;
            ("Twisted bundle".into(), bundle_doc(&b.tensor_line_bundle(&LineBundle(l.clone()))?))
        }
        BundleOp::N0 { input, l } => {
            let b = ctx.bundle(input)?;
            ("Vanishing threshold".into(), json!({"n0": b.estimate_n0(&LineBundle(l.clone()))?}))
        }
    })
}

fn extension_from(m: &Matroid, path: &str) -> Result<ExtensionMap, CliError> {
    let e = io::parse_json::<ExtensionDoc>(&io::read(path)?, path)?.build()?;
    if e.source != *m {
        return Err(tbk_core::Error::NotAnExtension.into());
    }
    Ok(e)
}

fn ext_op(ctx: &mut Ctx, op: &ExtOp) -> Result<(String, Value), CliError> {
    Ok(match op {
        ExtOp::Push { input, ext, flat, label } => {
            let b = ctx.bundle(input)?;
            let phi = match (ext, flat) {
                (Some(path), _) => extension_from(b.matroid(), path)?,
                (None, Some(f)) => b.matroid().principal_extension(io::label_set(b.matroid(), f)?, label)?,
                (None, None) => return Err(CliError::Usage("give --ext FILE or --flat LABELS".into())),
            };
            let p = pushforward_bundle(&phi, &b)?;
            ("Pushforward".into(), json!({"extension": serde_json::to_value(ExtensionDoc::canonical(&phi)).unwrap(), "bundle": bundle_doc(&p)}))
        }
        ExtOp::SplitSearch { input, ext, principal_catalog } => {
            let b = ctx.bundle(input)?;
            let mut candidates = ext.iter().map(|p| extension_from(b.matroid(), p)).collect::<Result<Vec<_>, _>>()?;
            if *principal_catalog {
                candidates.extend(principal_extension_catalog(b.matroid(), "z")?);
            }
            let w = equivalent_split_search(&b, &candidates)?;
            let witness = w.map(|w| {
                json!({
                    "candidate": w.candidate,
                    "labels": w.extension.target.labels(),
                    "splitting": report::splitting(&w.extension.target, &Some(w.splitting.clone())),
                })
            });
            ("Split search".into(), json!({"candidates": candidates.len(), "exhausted": witness.is_none(), "witness": witness}))
        }
        ExtOp::Defect(input) => {
            let b = ctx.bundle(input)?;
            let v = match defect_obstruction(&b)? {
                Some(o) => json!({"F": report::set(b.matroid(), o.f), "H": report::set(b.matroid(), o.h), "defect": o.defect}),
                None => Value::Null,
            };
            ("Obstruction".into(), v)
        }
    })
}

fn dispatch(ctx: &mut Ctx, cmd: &Command) -> Result<(String, Value), CliError> {
    Ok(match cmd {
        Command::Matroid(op) => match op {
            MatroidOp::Info { matroid } => {
                let m = matroid_arg(matroid)?;
                let v = json!({
                    "labels": m.labels(),
                    "elements": m.len(),
                    "rank": m.rank(),
                    "bases": m.bases().len(),
                    "circuits": m.circuits().len(),
                    "flats": m.all_flats().count(),
                    "modular": m.is_modular(),
                });
                ("Matroid".into(), v)
            }
            MatroidOp::Flats { matroid } => {
                let m = matroid_arg(matroid)?;
                let rows: Vec<Value> = m.all_flats().map(|f| json!({"rank": m.rank_of(f), "flat": report::set(&m, f)})).collect();
                ("Flats".into(), json!({"flats": rows}))
            }
            MatroidOp::Circuits { matroid } => {
                let m = matroid_arg(matroid)?;
                let rows: Vec<Value> = m.circuits().iter().map(|&c| report::set(&m, c)).collect();
                ("Circuits".into(), json!({"circuits": rows}))
            }
            MatroidOp::Modular { matroid } => {
                let m = matroid_arg(matroid)?;
                let w = m.modularity_witness().map(|(f, h, d)| json!({"F": report::set(&m, f), "H": report::set(&m, h), "defect": d}));
                ("Modularity".into(), json!({"modular": w.is_none(), "witness": w}))
            }
        },
        Command::Bergman(op) => match op {
            BergmanOp::Check(p) => {
                let m = matroid_arg(&p.matroid)?;
                ("Bergman check".into(), json!({"bergman": is_bergman_point(&m, &p.w)?}))
            }
            BergmanOp::Project(p) => {
                let m = matroid_arg(&p.matroid)?;
                ("Bergman projection".into(), json!({"point": bergman_projection(&m, &p.w)?}))
            }
            BergmanOp::Flag(p) => {
                let m = matroid_arg(&p.matroid)?;
                let f = flag_filtration(&m, &p.w)?;
                let levels: Vec<Value> = f.levels.iter().map(|(r, s)| json!({"threshold": r, "flat": report::set(&m, *s)})).collect();
                ("Flag of flats".into(), json!({"levels": levels}))
            }
        },
        Command::Bundle(op) => bundle_op(ctx, op)?,
        Command::Taut(op) => match op {
            TautOp::Build { matroid, which } => {
                let m = matroid_arg(matroid)?;
                (format!("Tautological bundle ({})", which.name()), bundle_doc(&tautological::build(&m, *which)?))
            }
            TautOp::NefSweep { matroid, allow_large } => {
                let m = matroid_arg(matroid)?;
                let r = tautological::nef_certificate_tautological(&m, *allow_large)?;
                let walls: Vec<Value> = r
                    .walls
                    .iter()
                    .map(|w| {
                        json!({
                            "wall": w.wall,
                            "elements": w.elements.iter().map(|&e| m.labels()[e].clone()).collect::<Vec<_>>(),
                            "type": w.degrees,
                            "extended_on": w.extension.map(|f| f.iter().map(|i| m.labels()[w.elements[i]].clone()).collect::<Vec<_>>()),
                        })
                    })
                    .collect();
                ("Nef sweep".into(), json!({"nef": r.holds(), "walls": walls}))
            }
        },
        Command::Ext(op) => ext_op(ctx, op)?,
        Command::Examples { .. } => unreachable!("handled before dispatch"),
    })
}

/// Runs one invocation and returns its exit code.
pub fn run<I, T>(args: I, stdin: &mut (dyn Read + Send), stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(stdout, "{text}") } else { write!(stderr, "{text}") };
            return code;
        }
    };
    if let Command::Examples { name } = cli.command {
        let _ = write!(stdout, "{}", name.text());
        return 0;
    }
    let format = if cli.json { Format::Json } else { cli.format };
    let result = thread_pool().and_then(|pool| {
        let mut ctx = Ctx { json: cli.json, stdin };
        pool.install(|| dispatch(&mut ctx, &cli.command))
    });
    match result {
        Ok((title, v)) => {
            let text = match format {
                Format::Json => io::to_json(&v),
                Format::Md => report::markdown(&title, &v),
            };
            let _ = write!(stdout, "{text}");
            0
        }
        Err(e) => {
            let _ = match format {
                Format::Json => write!(stderr, "{}", io::to_json(&json!({"error": e.name(), "message": e.to_string()}))),
                Format::Md => writeln!(stderr, "error: {e}"),
            };
            e.exit_code()
        }
    }
}
