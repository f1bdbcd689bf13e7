use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use lorentzian::arith::{parse_rational, Rational, Scalar};
use lorentzian::combinatorics::{exchange_violation, MConvexSet};
use lorentzian::dressian::{self, induced_subdivision, is_m_convex_function};
use lorentzian::error::{Error, Result};
use lorentzian::euler::{euler_characteristic, two_orbit_stable_euler};
use lorentzian::gauge::ball_coordinates;
use lorentzian::hyperfield::{is_null, QParameter};
use lorentzian::io::{self, scalar_entry, FunctionFile, MatroidFile, PolynomialFile, RepValues, Report, RepresentationFile};
use lorentzian::lorentzian::{
    betsy_interval, betsy_polynomial, classify_deg2, grassmann_map, is_lorentzian_any, simplify_degree2,
};
use lorentzian::polynomial::{AnyPolynomial, HomogeneousPolynomial};
use lorentzian::polytopes::base_polytope;
use lorentzian::representations::{is_strong_rep, is_weak_rep, reduced_dim, tutte_rank, Representation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exact,
    Float,
}

#[derive(Parser)]
#[command(name = "lorentzian", version, about = "Lorentzian polynomials on M-convex sets and their Dressians")]
struct Cli {
    /// Arithmetic for polynomial commands; exact input stays exact unless `float` is given.
    #[arg(long, value_enum, global = true, default_value = "exact")]
    mode: Mode,
    /// Relative eigenvalue threshold for float Hessians.
    #[arg(long, global = true, default_value_t = lorentzian::lorentzian::DEFAULT_EIGEN_TOL)]
    tol: f64,
    /// Largest dim V_J/W_J the Dressian traversal accepts.
    #[arg(long, global = true, default_value_t = dressian::DEFAULT_MAX_DIM)]
    max_dim: usize,
    #[arg(long, global = true, default_value_t = dressian::DEFAULT_CONE_BUDGET)]
    cone_budget: usize,
    #[arg(long, global = true, default_value_t = lorentzian::polytopes::DEFAULT_FACE_BUDGET)]
    face_budget: usize,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Exit 1 when the checked property is false.
    #[arg(long, global = true)]
    assert: bool,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    CheckMconvex {
        #[arg(long)]
        matroid: PathBuf,
    },
    CheckNull {
        /// Comma separated nonnegative values.
        #[arg(long)]
        values: String,
        /// `0`, a positive rational, or `inf`.
        #[arg(long)]
        q: String,
    },
    CheckRep {
        #[arg(long)]
        rep: PathBuf,
        #[arg(long)]
        q: String,
        /// Check every Plücker relation, not only the 3-term ones.
        #[arg(long)]
        strong: bool,
    },
    CheckLorentzian {
        #[arg(long)]
        poly: PathBuf,
    },
    TutteRank {
        #[arg(long)]
        matroid: PathBuf,
    },
    DressianRays {
        #[arg(long)]
        matroid: PathBuf,
        /// Also write the rays in fixture format.
        #[arg(long)]
        rays_out: Option<PathBuf>,
    },
    Subdivide {
        #[arg(long)]
        matroid: PathBuf,
        #[arg(long)]
        function: PathBuf,
    },
    Faces {
        #[arg(long)]
        matroid: PathBuf,
        /// Include every face as a list of point indices.
        #[arg(long)]
        full: bool,
    },
    Euler {
        #[arg(long)]
        matroid: PathBuf,
        /// Fixture rays; enumerated when absent.
        #[arg(long)]
        rays: Option<PathBuf>,
    },
    StableEuler {
        #[arg(long)]
        matroid: PathBuf,
    },
    Grassmann {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long, default_value_t = 2.0)]
        t: f64,
    },
    Betsy {
        /// Test one member of the family; without it the Lorentzian interval is located.
        #[arg(long, allow_hyphen_values = true)]
        t: Option<f64>,
    },
    BallCoords {
        #[arg(long)]
        poly: PathBuf,
        #[arg(long, default_value_t = 1.0)]
        t: f64,
    },
    Simplify {
        #[arg(long)]
        poly: PathBuf,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::CheckMconvex { .. } => "check-mconvex",
            Command::CheckNull { .. } => "check-null",
            Command::CheckRep { .. } => "check-rep",
            Command::CheckLorentzian { .. } => "check-lorentzian",
            Command::TutteRank { .. } => "tutte-rank",
            Command::DressianRays { .. } => "dressian-rays",
            Command::Subdivide { .. } => "subdivide",
            Command::Faces { .. } => "faces",
            Command::Euler { .. } => "euler",
            Command::StableEuler { .. } => "stable-euler",
            Command::Grassmann { .. } => "grassmann",
            Command::Betsy { .. } => "betsy",
            Command::BallCoords { .. } => "ball-coords",
            Command::Simplify { .. } => "simplify",
        }
    }
}

/// What a command found: the report body, whether its property holds, and
/// whether its inputs were complete.
struct Outcome {
    body: Value,
    holds: bool,
    complete: bool,
    summary: String,
}

impl Outcome {
    fn new(body: Value, holds: bool, summary: String) -> Self {
        Outcome { body, holds, complete: true, summary }
    }
}

fn parse_q(s: &str) -> Result<QParameter> {
    match s.trim() {
        "inf" | "infinity" => Ok(QParameter::Infinity),
        other => QParameter::finite(parse_rational(other)?),
    }
}

fn load_poly(cli: &Cli, path: &PathBuf) -> Result<AnyPolynomial> {
    let f = io::load_polynomial(path)?;
    Ok(match cli.mode {
        Mode::Float => AnyPolynomial::Float(f.to_f64()),
        Mode::Exact => f,
    })
}

fn rep_holds<S: Scalar>(r: &Representation<S>, j: &MConvexSet, q: &QParameter, strong: bool) -> Result<bool> {
    if strong {
        is_strong_rep(r, j, q)
    } else {
        is_weak_rep(r, j, q)
    }
}

fn simplify_json<S: Scalar + 'static>(f: &HomogeneousPolynomial<S>) -> Result<Value>
where
    AnyPolynomial: From<HomogeneousPolynomial<S>>,
{
    let s = simplify_degree2(f)?;
    let class = classify_deg2(f)?;
    let lambdas: Vec<_> = s.lambdas.iter().map(scalar_entry).collect();
    Ok(json!({
        "g": PolynomialFile::from_polynomial(&AnyPolynomial::from(s.g)),
        "lambdas": lambdas,
        "partition": s.partition,
        "classification": class,
    }))
}

fn run(cli: &Cli) -> Result<Outcome> {
    Ok(match &cli.command {
        Command::CheckMconvex { matroid } => {
            let (n, d, points) = match io::read_json::<MatroidFile>(matroid)? {
                MatroidFile::Points { n, d, points, .. } => (n, d, points),
                named @ MatroidFile::Named(_) => {
                    let j = named.build()?;
                    (j.n(), j.d(), j.points().to_vec())
                }
            };
            let w = exchange_violation(&points, n, d)?;
            let ok = !points.is_empty() && w.is_none();
            Outcome::new(json!({"m_convex": ok, "witness": w}), ok, format!("M-convex: {ok}"))
        }
        Command::CheckNull { values, q } => {
            let v: Vec<Rational> = values.split(',').map(parse_rational).collect::<Result<_>>()?;
            let ok = is_null(&v, &parse_q(q)?)?;
            Outcome::new(json!({"null": ok}), ok, format!("null in T_{q}: {ok}"))
        }
        Command::CheckRep { rep, q, strong } => {
            let file: RepresentationFile = io::read_json(rep)?;
            let j = file.support()?;
            let q = parse_q(q)?;
            let ok = match file.values_on(&j)? {
                RepValues::Exact(v) => rep_holds(&Representation::new(&j, v)?, &j, &q, *strong)?,
                RepValues::Float(v) => rep_holds(&Representation::new(&j, v)?, &j, &q, *strong)?,
            };
            let kind = if *strong { "strong" } else { "weak" };
            Outcome::new(json!({"representation": ok, "kind": kind}), ok, format!("{kind} representation: {ok}"))
        }
        Command::CheckLorentzian { poly } => {
            let f = load_poly(cli, poly)?;
            let rep = is_lorentzian_any(&f, cli.tol)?;
            let ok = rep.lorentzian;
            Outcome::new(serde_json::to_value(&rep)?, ok, format!("Lorentzian: {ok}"))
        }
        Command::TutteRank { matroid } => {
            let j = io::load_matroid(matroid)?;
            let (t, r) = (tutte_rank(&j)?, reduced_dim(&j)?);
            Outcome::new(json!({"tutte_rank": t, "reduced_dim": r}), true, format!("Tutte rank {t}, reduced dim {r}"))
        }
        Command::DressianRays { matroid, rays_out } => {
            let j = io::load_matroid(matroid)?;
            let rep = dressian::enumerate_rays_with_budget(&j, cli.max_dim, cli.cone_budget)?;
            if let Some(path) = rays_out {
                std::fs::write(path, serde_json::to_string_pretty(&io::rays_to_file(&rep.functions()))?)?;
            }
            let summary = format!("{} rays after {} cones", rep.rays.len(), rep.cones_visited);
            Outcome { complete: rep.complete, ..Outcome::new(serde_json::to_value(&rep)?, rep.complete, summary) }
        }
        Command::Subdivide { matroid, function } => {
            let j = io::load_matroid(matroid)?;
            let nu = io::read_json::<FunctionFile>(function)?.function()?;
            let nu = dressian::MConvexFunction::new(&j, nu.values)?;
            let ok = is_m_convex_function(&j, &nu)?;
            let cells = if ok { Some(induced_subdivision(&j, &nu)?) } else { None };
            let summary = match &cells {
                Some(s) => format!("{} maximal cells", s.cells.len()),
                None => "not M-convex".into(),
            };
            Outcome::new(json!({"m_convex": ok, "subdivision": cells}), ok, summary)
        }
        Command::Faces { matroid, full } => {
            let j = io::load_matroid(matroid)?;
            let lattice = base_polytope(&j)?.face_lattice_with_budget(cli.face_budget)?;
            let euler = lattice.euler_poincare();
            let faces = full.then(|| lattice.face_indices());
            let summary = format!("f-vector {:?}", lattice.f_vector);
            Outcome::new(json!({"f_vector": lattice.f_vector, "euler_poincare": euler, "faces": faces}), euler == 1, summary)
        }
        Command::Euler { matroid, rays } => {
            let j = io::load_matroid(matroid)?;
            let rays = match rays {
                Some(path) => dressian::verify_rays(&j, &io::load_rays(path, &j)?)?,
                None => dressian::enumerate_rays_with_budget(&j, cli.max_dim, cli.cone_budget)?,
            };
            let rep = euler_characteristic(&j, &rays)?;
            let summary = format!("chi = {} from {} rays", rep.chi, rep.rays);
            Outcome { complete: rep.complete, ..Outcome::new(serde_json::to_value(&rep)?, true, summary) }
        }
        Command::StableEuler { matroid } => {
            let j = io::load_matroid(matroid)?;
            let rep = two_orbit_stable_euler(&j, cli.max_dim)?;
            let summary = format!("chi = {} assuming {}", rep.chi, rep.assumption);
            Outcome::new(serde_json::to_value(&rep)?, true, summary)
        }
        Command::Grassmann { matrix, t } => {
            let a = io::build_matrix(&io::read_json(matrix)?)?;
            let f = grassmann_map(&a, *t)?;
            let f = if cli.mode == Mode::Float { AnyPolynomial::Float(f.to_f64()) } else { f };
            let rep = is_lorentzian_any(&f, cli.tol)?;
            let ok = rep.lorentzian;
            let body = json!({"polynomial": PolynomialFile::from_polynomial(&f), "lorentzian": rep});
            Outcome::new(body, ok, format!("{} terms, Lorentzian: {ok}", f.support().len()))
        }
        Command::Betsy { t: Some(t) } => {
            let rep = is_lorentzian_any(&AnyPolynomial::Float(betsy_polynomial(*t)), cli.tol)?;
            let ok = rep.lorentzian;
            Outcome::new(json!({"t": t, "lorentzian": rep}), ok, format!("t = {t}: Lorentzian {ok}"))
        }
        Command::Betsy { t: None } => {
            let (lo, hi) = betsy_interval(4.0, 1e-6)?;
            Outcome::new(json!({"lower": lo, "upper": hi}), true, format!("Lorentzian for t in [{lo:.6}, {hi:.6}]"))
        }
        Command::BallCoords { poly, t } => {
            let f = io::load_polynomial(poly)?.to_f64();
            let b = ball_coordinates(&f, *t)?;
            let summary = format!("norm {:.6}, psi {:.6}", b.norm, b.psi);
            Outcome::new(serde_json::to_value(&b)?, true, summary)
        }
        Command::Simplify { poly } => {
            let body = match load_poly(cli, poly)? {
                AnyPolynomial::Rational(p) => simplify_json(&p)?,
                AnyPolynomial::Golden(p) => simplify_json(&p)?,
                AnyPolynomial::Float(p) => simplify_json(&p)?,
            };
            let summary = format!("{} blocks", body["partition"].as_array().map_or(0, Vec::len));
            Outcome::new(body, true, summary)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if n == 0 {
            eprintln!("error: --threads must be positive");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().expect("thread pool is configured once");
    }
    if !(cli.tol > 0.0) || cli.max_dim == 0 || cli.cone_budget == 0 || cli.face_budget == 0 {
        eprintln!("error: tolerances and caps must be positive");
        return ExitCode::from(2);
    }
    let name = cli.command.name();
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("{name}: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let report = Report::new(name, outcome.complete, outcome.body);
    let text = serde_json::to_string_pretty(&report).expect("reports serialize");
    let written = match &cli.out {
        Some(path) => std::fs::write(path, text + "\n").map_err(Error::from),
        // A closed pipe (e.g. `| head`) is not an error worth a panic.
        None => match writeln!(std::io::stdout().lock(), "{text}") {
            Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
            r => r.map_err(Error::from),
        },
    };
    if let Err(e) = written {
        eprintln!("{name}: {e}");
        return ExitCode::from(2);
    }
    eprintln!("{name}: {}", outcome.summary);
    if cli.assert && !outcome.holds {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
