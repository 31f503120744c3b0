use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use superquad::catalog;
use superquad::derivations::{self, DerivationKind};
use superquad::extensions::{self, Cocycle2, Representation, SymPairing};
use superquad::format::{self, AlgebraFile};
use superquad::morphisms;
use superquad::verification;
use superquad::{
    field, Backend, Check, Complex, Error, QuadraticAlgebra, Rational, Report, Scalar,
};

#[derive(Parser)]
#[command(
    name = "superquad",
    version,
    about = "Quadratic Lie superalgebras from structure constants"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Global {
    /// Zero threshold for the complex backend.
    #[arg(long, global = true, env = "SUPERQUAD_TOL")]
    tol: Option<f64>,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text, env = "SUPERQUAD_FORMAT")]
    format: OutputFormat,
    /// Omit the timestamp header of `report`.
    #[arg(long, global = true, env = "SUPERQUAD_NO_TIMESTAMP")]
    no_timestamp: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Check the axioms and the center identities of an algebra file.
    Verify { file: PathBuf },
    /// Solve for the derivations of an algebra file.
    Derivations {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Kind::Skew)]
        kind: Kind,
    },
    /// Build an extension and write it as an algebra file.
    Extend {
        #[command(subcommand)]
        construction: Construction,
        /// Write the algebra file here instead of standard output.
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Check a linear map between two algebra files.
    CheckIso {
        source: PathBuf,
        target: PathBuf,
        /// Map file: `map <source label> = <combination of target labels>`.
        map: PathBuf,
        /// Also require the map to be an isometry.
        #[arg(long)]
        isometric: bool,
    },
    /// Look for a central non-degenerate ideal splitting the algebra.
    Decompose { file: PathBuf },
    /// The built-in catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Regenerate the full verification report.
    Report {
        #[arg(long)]
        all: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    All,
    Skew,
}

#[derive(Subcommand)]
enum Construction {
    /// One-dimensional double extension by a skew derivation.
    Double1d {
        algebra: PathBuf,
        /// Endomorphism file: `map <label> = <combination>`.
        derivation: PathBuf,
        #[arg(long, default_value = "e")]
        e: String,
        #[arg(long, default_value = "f")]
        f: String,
    },
    /// Double extension of a quadratic `h` by a Lie algebra `g`.
    Double {
        g: PathBuf,
        h: PathBuf,
        /// Representation file: `psi <g label> <h label> = <combination>`.
        psi: PathBuf,
    },
    /// T*-extension by an optional cocycle file (`theta a b c = v`).
    Tstar { g: PathBuf, theta: Option<PathBuf> },
    /// Super double extension of a symplectic space `h` by `g`.
    Superdouble {
        g: PathBuf,
        h: PathBuf,
        psi: PathBuf,
        theta: Option<PathBuf>,
    },
    /// Odd T*s-extension by an optional pairing file (`phi a b c = v`).
    Tsstar {
        g: PathBuf,
        phi: Option<PathBuf>,
        /// Print the admissible cyclic pairings instead of extending.
        #[arg(long, conflicts_with = "phi")]
        solve: bool,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
    /// Write an entry as an algebra file.
    Emit {
        id: String,
        /// Parameter binding `name=value`.
        #[arg(long = "param", value_parser = parse_binding)]
        params: Vec<(String, Rational)>,
    },
    Verify {
        /// Restrict to these entries.
        #[arg(long = "id")]
        ids: Vec<String>,
    },
}

fn parse_binding(s: &str) -> Result<(String, Rational), String> {
    let (k, v) = s
        .split_once('=')
        .ok_or_else(|| format!("expected name=value, got `{s}`"))?;
    let v = v.trim().parse::<Rational>().map_err(|e| e.to_string())?;
    Ok((k.trim().to_string(), v))
}

/// Failure of a command before any check could run: exit code 2.
struct UsageError(String);

impl From<Error> for UsageError {
    fn from(e: Error) -> Self {
        UsageError(e.to_string())
    }
}

type CmdResult = Result<bool, UsageError>;

fn read(path: &Path) -> Result<String, UsageError> {
    fs::read_to_string(path).map_err(|e| UsageError(format!("{}: {e}", path.display())))
}

fn load<F: Scalar>(path: &Path) -> Result<AlgebraFile<F>, UsageError> {
    format::parse::<F>(&read(path)?).map_err(|e| UsageError(format!("{}: {e}", path.display())))
}

fn backend_of(paths: &[&Path]) -> Result<Backend, UsageError> {
    for p in paths {
        if format::declared_backend(&read(p)?)? == Backend::Complex {
            return Ok(Backend::Complex);
        }
    }
    Ok(Backend::Exact)
}

/// Runs `$body` with `$F` bound to the scalar type the files call for.
macro_rules! with_backend {
    ($paths:expr, |$F:ident| $body:expr) => {
        match backend_of($paths)? {
            Backend::Exact => {
                type $F = Rational;
                $body
            }
            Backend::Complex => {
                type $F = Complex;
                $body
            }
        }
    };
}

fn print_report(g: &Global, report: &Report) {
    match g.format {
        OutputFormat::Text => println!("{report}"),
        OutputFormat::Json => println!("{}", report.to_json()),
    }
}

fn verify<F: Scalar>(g: &Global, path: &Path) -> CmdResult {
    let file = load::<F>(path)?;
    let report = verification::full_report(&file.algebra);
    print_report(g, &report);
    Ok(report.passed())
}

fn matrix_rows<F: Scalar>(m: &superquad::Matrix<F>) -> Vec<Vec<String>> {
    m.row_vectors()
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect()
}

fn derivations_cmd<F: Scalar>(g: &Global, path: &Path, kind: Kind) -> CmdResult {
    let file = load::<F>(path)?;
    let q = &file.algebra;
    let (kind, form) = match kind {
        Kind::All => (DerivationKind::All, None),
        Kind::Skew => (DerivationKind::Skew, Some(q.form())),
    };
    let space = derivations::derivation_space(q.algebra(), form, kind)?;
    match g.format {
        OutputFormat::Json => {
            let basis: Vec<_> = space.basis().iter().map(matrix_rows).collect();
            println!(
                "{}",
                json!({ "algebra": q.name(), "dim": space.dim(), "basis": basis })
            );
        }
        OutputFormat::Text => {
            println!(
                "{}: {} derivations of dimension {}",
                q.name(),
                kind_name(kind),
                space.dim()
            );
            println!("basis order: {}", q.algebra().space().labels().join(" "));
            for (k, m) in space.basis().iter().enumerate() {
                println!("D{}:", k + 1);
                for row in matrix_rows(m) {
                    println!("  [{}]", row.join(", "));
                }
            }
        }
    }
    Ok(true)
}

fn kind_name(k: DerivationKind) -> &'static str {
    match k {
        DerivationKind::Skew => "skew-symmetric",
        _ => "all",
    }
}

/// Writes the constructed algebra and reports its verification.
fn finish_extension<F: Scalar>(
    g: &Global,
    built: extensions::Constructed<F>,
    output: Option<&Path>,
) -> CmdResult {
    let (text, mut report) = match built.quadratic() {
        Some(q) => (format::emit(q, &[]), verification::full_report(q)),
        None => {
            let a = built.algebra().clone();
            let mut r = superquad::quadratic::verify_jacobi(&a);
            r.push(Check::fail(
                "quadratic",
                built
                    .warning()
                    .unwrap_or("the canonical form is not invariant")
                    .to_string(),
            ));
            let zero = superquad::BilinearForm::zero(a.dim(), superquad::FormParity::Even);
            let q = QuadraticAlgebra::new(a, zero)?;
            (format::emit(&q, &[]), r)
        }
    };
    if let Some(w) = built.warning() {
        report.push(Check::note(
            format!("downgraded: {w}"),
            "cyclicity of the extension data",
        ));
    }
    write_algebra(g, &text, &report, output)?;
    Ok(report.passed())
}

fn write_algebra(
    g: &Global,
    text: &str,
    report: &Report,
    output: Option<&Path>,
) -> Result<(), UsageError> {
    if let Some(path) = output {
        fs::write(path, text).map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
    }
    match (g.format, output) {
        (OutputFormat::Json, _) => println!("{}", report.to_json()),
        (OutputFormat::Text, Some(_)) => println!("{report}"),
        (OutputFormat::Text, None) => {
            print!("{text}");
            for line in report.to_string().lines() {
                println!("# {line}");
            }
        }
    }
    Ok(())
}

fn extend<F: Scalar>(g: &Global, c: &Construction, output: Option<&Path>) -> CmdResult {
    match c {
        Construction::Double1d {
            algebra,
            derivation,
            e,
            f,
        } => {
            let q = load::<F>(algebra)?.algebra;
            let c = format::parse_endomorphism::<F>(&read(derivation)?, q.algebra().space())?;
            let out = extensions::double_extension_1d_labeled(&q, &c, e, f)?;
            let report = verification::full_report(&out);
            write_algebra(g, &format::emit(&out, &[]), &report, output)?;
            Ok(report.passed())
        }
        Construction::Double { g: gp, h, psi } => {
            let ga = load::<F>(gp)?.algebra;
            let hq = load::<F>(h)?.algebra;
            let rep = format::parse_representation::<F>(
                &read(psi)?,
                ga.algebra().space(),
                hq.algebra().space(),
            )?;
            let out = extensions::double_extension_general(ga.algebra(), &hq, &rep)?;
            let report = verification::full_report(&out);
            write_algebra(g, &format::emit(&out, &[]), &report, output)?;
            Ok(report.passed())
        }
        Construction::Tstar { g: gp, theta } => {
            let ga = load::<F>(gp)?.algebra;
            let theta = match theta {
                Some(p) => format::parse_cocycle::<F>(&read(p)?, ga.algebra())?,
                None => Cocycle2::zero(ga.dim()),
            };
            finish_extension(
                g,
                extensions::t_star_extension(ga.algebra(), &theta)?,
                output,
            )
        }
        Construction::Superdouble {
            g: gp,
            h,
            psi,
            theta,
        } => {
            let ga = load::<F>(gp)?.algebra;
            let hq = load::<F>(h)?.algebra;
            let rep: Representation<F> = format::parse_representation(
                &read(psi)?,
                ga.algebra().space(),
                hq.algebra().space(),
            )?;
            let theta = theta
                .as_ref()
                .map(|p| Ok::<_, UsageError>(format::parse_cocycle::<F>(&read(p)?, ga.algebra())?))
                .transpose()?;
            finish_extension(
                g,
                extensions::super_double_extension(ga.algebra(), &hq, &rep, theta.as_ref())?,
                output,
            )
        }
        Construction::Tsstar { g: gp, phi, solve } => {
            let ga = load::<F>(gp)?.algebra;
            if *solve {
                let sols = SymPairing::solve(ga.algebra(), true)?;
                let s = ga.algebra().space();
                let render = |p: &SymPairing<F>| {
                    let mut lines = Vec::new();
                    let n = s.dim();
                    for i in 0..n {
                        for j in i..n {
                            for k in 0..n {
                                let v = p.value(i, j, k);
                                if !v.is_zero() {
                                    lines.push(format!(
                                        "phi {} {} {} = {v}",
                                        s.label(i),
                                        s.label(j),
                                        s.label(k)
                                    ));
                                }
                            }
                        }
                    }
                    lines
                };
                match g.format {
                    OutputFormat::Json => {
                        let all: Vec<_> = sols.iter().map(render).collect();
                        println!("{}", json!({ "dim": sols.len(), "basis": all }));
                    }
                    OutputFormat::Text => {
                        println!("{} cyclic pairings", sols.len());
                        for (k, p) in sols.iter().enumerate() {
                            println!("# pairing {}", k + 1);
                            for l in render(p) {
                                println!("{l}");
                            }
                        }
                    }
                }
                return Ok(true);
            }
            let phi = match phi {
                Some(p) => format::parse_pairing::<F>(&read(p)?, ga.algebra())?,
                None => SymPairing::zero(ga.dim()),
            };
            finish_extension(
                g,
                extensions::ts_star_extension(ga.algebra(), &phi)?,
                output,
            )
        }
    }
}

fn check_iso<F: Scalar>(
    g: &Global,
    src: &Path,
    tgt: &Path,
    map: &Path,
    isometric: bool,
) -> CmdResult {
    let a = load::<F>(src)?.algebra;
    let b = load::<F>(tgt)?.algebra;
    let m = format::parse_map::<F>(&read(map)?, a.algebra().space(), b.algebra().space())?;
    let report = if isometric {
        morphisms::verify_i_isomorphism(&m, &a, &b)?
    } else {
        morphisms::verify_isomorphism(&m, a.algebra(), b.algebra())?
    };
    print_report(g, &report);
    Ok(report.passed())
}

fn decompose<F: Scalar>(g: &Global, path: &Path) -> CmdResult {
    let q = load::<F>(path)?.algebra;
    let s = q.algebra().space();
    let mut report = Report::new();
    let cite = superquad::quadratic::CITE_DECOMPOSITION;
    match morphisms::decomposability_via_center(&q) {
        Some(w) => {
            let gens: Vec<String> = w.generators.iter().map(|v| s.format_vector(v)).collect();
            report.push(Check::pass("central witness", cite).with_witness(gens.join(", ")));
            report.extend(morphisms::verify_decomposition(&q, &w.ideal, &w.complement));
            if g.format == OutputFormat::Text {
                println!("central witness: {}", gens.join(", "));
                println!("splitting: {}", w.format(s));
            }
        }
        None => {
            report.push(Check::note(
                "no central witness; the test is inconclusive",
                cite,
            ));
            if g.format == OutputFormat::Text {
                println!("no central witness found");
            }
        }
    }
    print_report(g, &report);
    Ok(report.passed())
}

fn catalog_cmd(g: &Global, action: &CatalogAction) -> CmdResult {
    match action {
        CatalogAction::List => {
            let entries = catalog::list();
            match g.format {
                OutputFormat::Json => {
                    let v: Vec<_> = entries
                        .iter()
                        .map(|e| {
                            let params: Vec<_> = e
                                .params
                                .iter()
                                .map(|p| json!({"name": p.name, "default": p.default_value().to_string(), "constraint": p.constraint.describe()}))
                                .collect();
                            json!({
                                "id": e.id,
                                "title": e.title,
                                "source": e.source,
                                "form_parity": e.form_parity.to_string(),
                                "params": params,
                                "solvable": e.solvable,
                                "nilpotent": e.nilpotent,
                                "fingerprint": e.fingerprint,
                            })
                        })
                        .collect();
                    println!("{}", serde_json::to_string_pretty(&v).expect("json"));
                }
                OutputFormat::Text => {
                    for e in entries {
                        let params: Vec<String> = e
                            .params
                            .iter()
                            .map(|p| {
                                format!(
                                    "{}={} ({})",
                                    p.name,
                                    p.default_value(),
                                    p.constraint.describe()
                                )
                            })
                            .collect();
                        let params = if params.is_empty() {
                            String::new()
                        } else {
                            format!(" [{}]", params.join(", "))
                        };
                        println!(
                            "{:<7} {:<5} {}{params}",
                            e.id,
                            e.form_parity.to_string(),
                            e.title
                        );
                    }
                    println!("{} entries", entries.len());
                }
            }
            Ok(true)
        }
        CatalogAction::Emit { id, params } => {
            let e = catalog::entry(id)?;
            let overrides: Vec<(&str, Rational)> = params
                .iter()
                .map(|(k, v)| (k.as_str(), v.clone()))
                .collect();
            let p = e.resolve(&overrides)?;
            let q = e.build_with(&p)?;
            let bindings: Vec<(String, String)> = p
                .iter()
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .collect();
            print!("{}", format::emit(&q, &bindings));
            Ok(true)
        }
        CatalogAction::Verify { ids } => {
            let ids: Vec<&str> = ids.iter().map(String::as_str).collect();
            let report = catalog::verify_all(if ids.is_empty() { None } else { Some(&ids) })?;
            match g.format {
                OutputFormat::Json => println!("{}", report.to_json()),
                OutputFormat::Text => {
                    let mut entries = 0;
                    for e in catalog::list() {
                        let own: Vec<&Check> = report
                            .checks
                            .iter()
                            .filter(|c| c.check.split([':', '(']).next() == Some(e.id))
                            .collect();
                        if own.is_empty() {
                            continue;
                        }
                        entries += 1;
                        let failed: Vec<&&Check> = own.iter().filter(|c| !c.passed()).collect();
                        let status = if failed.is_empty() { "PASS" } else { "FAIL" };
                        println!("[{status}] {} ({} checks)", e.id, own.len());
                        for c in failed {
                            println!("  {c}");
                        }
                    }
                    println!(
                        "{entries} entries, {} checks, {} failed",
                        report.len(),
                        report.failures().count()
                    );
                }
            }
            Ok(report.passed())
        }
    }
}

fn report_cmd(g: &Global, all: bool) -> CmdResult {
    if !all {
        return Err(UsageError("only `report --all` is supported".into()));
    }
    let report = verification::full_suite()?;
    match g.format {
        OutputFormat::Json => println!("{}", report.to_json()),
        OutputFormat::Text => {
            if !g.no_timestamp {
                println!(
                    "# generated {}",
                    chrono::Utc::now().format("%Y-%m-%dT%H:%M:%SZ")
                );
            }
            println!("{report}");
        }
    }
    Ok(report.passed())
}

fn run(cli: &Cli) -> CmdResult {
    let g = &cli.global;
    match &cli.command {
        Command::Verify { file } => with_backend!(&[file], |F| verify::<F>(g, file)),
        Command::Derivations { file, kind } => {
            with_backend!(&[file], |F| derivations_cmd::<F>(g, file, *kind))
        }
        Command::Extend {
            construction,
            output,
        } => {
            let paths: Vec<&Path> = match construction {
                Construction::Double1d { algebra, .. } => vec![algebra],
                Construction::Double { g, h, .. } | Construction::Superdouble { g, h, .. } => {
                    vec![g, h]
                }
                Construction::Tstar { g, .. } | Construction::Tsstar { g, .. } => vec![g],
            };
            with_backend!(&paths, |F| extend::<F>(g, construction, output.as_deref()))
        }
        Command::CheckIso {
            source,
            target,
            map,
            isometric,
        } => {
            with_backend!(&[source, target], |F| check_iso::<F>(
                g, source, target, map, *isometric
            ))
        }
        Command::Decompose { file } => with_backend!(&[file], |F| decompose::<F>(g, file)),
        Command::Catalog { action } => catalog_cmd(g, action),
        Command::Report { all } => report_cmd(g, *all),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(tol) = cli.global.tol {
        if !(tol > 0.0 && tol.is_finite()) {
            eprintln!("error: --tol must be a positive number");
            return ExitCode::from(2);
        }
        field::set_tolerance(tol);
    }
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
