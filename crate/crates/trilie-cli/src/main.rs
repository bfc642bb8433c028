//! Command-line front end for the trilie library: run axiom checks,
//! dualize, verify or search equivalences, and reproduce the dimension-3
//! classification.
//!
//! Inputs are definition files (see the library's `format` module) or
//! `catalog:NAME` references, optionally with an inline parameter as in
//! `catalog:L_c2(alpha=2)`.
//!
//! Exit codes: 0 success / pass / equivalent; 1 violations, failed
//! verification, inequivalent, or unclassified survivors; 2 parse or usage
//! errors; 3 unknown equivalence verdict. `TRILIE_JOBS` caps the
//! parallelism of witness searches.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use trilie::algebra::ThreeLieAlgebra;
use trilie::bialgebra::dual_bialgebra;
use trilie::catalog::{self, CatalogObject};
use trilie::coalgebra::ThreeLieCoalgebra;
use trilie::duality::{dual_of_algebra, dual_of_coalgebra};
use trilie::equivalence::{
    algebra_fingerprint, coalgebra_fingerprint, fingerprint, search_algebra_iso,
    search_coalgebra_iso, search_equivalence, verify_algebra_iso, verify_coalgebra_iso,
    verify_equivalence, LinearIso, SearchFamily,
};
use trilie::format::{parse, parse_with_kind, serialize, FileObject, ObjectKind};
use trilie::report::BialgebraReport;
use trilie::scalar::ExactScalar;
use trilie::Error;

#[derive(Parser)]
#[command(
    name = "trilie",
    version,
    about = "Exact checks, duals, equivalences, and classification for 3-Lie structures"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Records,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Algebra,
    Coalgebra,
    Bialgebra,
}

impl From<KindArg> for ObjectKind {
    fn from(k: KindArg) -> ObjectKind {
        match k {
            KindArg::Algebra => ObjectKind::Algebra,
            KindArg::Coalgebra => ObjectKind::Coalgebra,
            KindArg::Bialgebra => ObjectKind::Bialgebra,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    /// Signed permutation matrices
    SignedPerms,
    /// Matrices with entries in {-1, 0, 1}
    Grid1,
    /// Matrices with entries in {-2, ..., 2}
    Grid2,
}

impl From<FamilyArg> for SearchFamily {
    fn from(f: FamilyArg) -> SearchFamily {
        match f {
            FamilyArg::SignedPerms => SearchFamily::SignedPermutations,
            FamilyArg::Grid1 => SearchFamily::GridSmall,
            FamilyArg::Grid2 => SearchFamily::GridWide,
        }
    }
}

#[derive(Args)]
struct FormatOpt {
    /// Output format
    #[arg(long, value_enum, default_value = "human")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Run the axiom checks on an object and report violations
    Check {
        /// Kind to interpret the input as
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Parameter for parametric catalog families
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        #[command(flatten)]
        format: FormatOpt,
        /// Definition file path or catalog:NAME
        input: String,
    },
    /// Print the dual object in the definition file format
    Dualize {
        /// Kind to interpret the input as (inferred when omitted)
        #[arg(long, value_enum)]
        kind: Option<KindArg>,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        #[command(flatten)]
        format: FormatOpt,
        input: String,
    },
    /// Decide equivalence of two objects with a supplied map or a search
    Equiv {
        /// Verify this map file as the equivalence witness
        #[arg(long, conflicts_with = "search")]
        map: Option<PathBuf>,
        /// Search this family for a witness
        #[arg(long, value_enum)]
        search: Option<FamilyArg>,
        /// Kind of both inputs (inferred when omitted)
        #[arg(long, value_enum)]
        kind: Option<KindArg>,
        /// Parameter for the first input
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        /// Parameter for the second input
        #[arg(long, allow_hyphen_values = true)]
        alpha_b: Option<String>,
        #[command(flatten)]
        format: FormatOpt,
        a: String,
        b: String,
    },
    /// Enumerate and classify dimension-3 bialgebras over a coefficient grid
    Enumerate {
        /// Dimension (only 3 is supported)
        #[arg(long)]
        dim: usize,
        /// Comma-separated grid of rational coefficients, must contain 0
        #[arg(long, allow_hyphen_values = true)]
        grid: String,
        /// Catalog name of the bracket to enumerate over (e.g. abelian, L_b)
        #[arg(long)]
        mu: String,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        #[command(flatten)]
        format: FormatOpt,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Check {
            kind,
            alpha,
            format,
            input,
        } => cmd_check(kind.into(), alpha.as_deref(), format.format, &input),
        Command::Dualize {
            kind,
            alpha,
            format,
            input,
        } => cmd_dualize(kind.map(Into::into), alpha.as_deref(), format.format, &input),
        Command::Equiv {
            map,
            search,
            kind,
            alpha,
            alpha_b,
            format,
            a,
            b,
        } => cmd_equiv(
            map,
            search.map(Into::into),
            kind.map(Into::into),
            alpha.as_deref(),
            alpha_b.as_deref(),
            format.format,
            &a,
            &b,
        ),
        Command::Enumerate {
            dim,
            grid,
            mu,
            alpha,
            format,
        } => cmd_enumerate(dim, &grid, &mu, alpha.as_deref(), format.format),
    }
}

fn parse_alpha(text: Option<&str>) -> Result<Option<ExactScalar>, String> {
    match text {
        None => Ok(None),
        Some(t) => t
            .parse::<ExactScalar>()
            .map(Some)
            .map_err(|e| e.to_string()),
    }
}

/// Splits `NAME` or `NAME(alpha=RAT)` into the base name and the parameter.
fn split_catalog_name(name: &str) -> Result<(&str, Option<ExactScalar>), String> {
    let Some(start) = name.find("(alpha=") else {
        return Ok((name, None));
    };
    let rest = &name[start + "(alpha=".len()..];
    let value = rest
        .strip_suffix(')')
        .ok_or_else(|| format!("malformed parameter in `{name}`"))?;
    let alpha: ExactScalar = value
        .parse()
        .map_err(|e: Error| format!("in `{name}`: {e}"))?;
    Ok((&name[..start], Some(alpha)))
}

/// Loads a path or `catalog:NAME` reference as a file object.
fn load_input(
    input: &str,
    kind: Option<ObjectKind>,
    alpha: Option<&str>,
) -> Result<FileObject, String> {
    let alpha = parse_alpha(alpha)?;
    if let Some(name) = input.strip_prefix("catalog:") {
        let (base, inline_alpha) = split_catalog_name(name)?;
        let alpha = inline_alpha.or(alpha);
        let entry = catalog::get(base, alpha.as_ref()).map_err(|e| e.to_string())?;
        let object = match entry.object {
            CatalogObject::Algebra(a) => FileObject::Algebra(a),
            CatalogObject::Coalgebra(c) => FileObject::Coalgebra(c),
            CatalogObject::Bialgebra(b) => FileObject::Bialgebra(b),
            CatalogObject::Iso(f) => FileObject::Map(f),
        };
        if let Some(kind) = kind {
            if object.kind_name() != kind.as_str() {
                return Err(format!(
                    "catalog entry `{base}` is a {}, not a {}",
                    object.kind_name(),
                    kind.as_str()
                ));
            }
        }
        return Ok(object);
    }
    let text = std::fs::read_to_string(input)
        .map_err(|e| format!("cannot read `{input}`: {e}"))?;
    let parsed = match kind {
        Some(kind) => parse_with_kind(&text, kind),
        None => parse(&text),
    };
    parsed.map_err(|e| format!("{input}: {e}"))
}

// ---------------------------------------------------------------------------
// check

fn cmd_check(
    kind: ObjectKind,
    alpha: Option<&str>,
    format: Format,
    input: &str,
) -> Result<ExitCode, String> {
    let object = load_input(input, Some(kind), alpha)?;
    let (pass, human, records) = match &object {
        FileObject::Algebra(a) => render_algebra_check(a),
        FileObject::Coalgebra(c) => render_coalgebra_check(c),
        FileObject::Bialgebra(b) => render_bialgebra_check(&b.verify()),
        FileObject::Map(_) => return Err("map files cannot be checked".to_string()),
    };
    match format {
        Format::Human => {
            print!("{human}");
            println!("result: {}", if pass { "pass" } else { "fail" });
        }
        Format::Records => {
            println!(
                "check kind={} source={} status={}",
                kind.as_str(),
                input,
                if pass { "pass" } else { "fail" }
            );
            print!("{records}");
        }
    }
    Ok(if pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn render_algebra_check(a: &ThreeLieAlgebra) -> (bool, String, String) {
    let report = a.check_fundamental_identity();
    let mut human = String::new();
    let mut records = String::new();
    if report.is_pass() {
        human.push_str("fundamental identity: pass\n");
    } else {
        human.push_str(&format!(
            "fundamental identity: fail ({} violations)\n",
            report.violations.len()
        ));
        for v in &report.violations {
            human.push_str(&format!("  {v}\n"));
            let [u, vv, x, y, z] = v.tuple;
            records.push_str(&format!(
                "violation check=fundamental-identity tuple={u},{vv};{x},{y},{z} \
                 component={} lhs={} rhs={}\n",
                v.component, v.lhs, v.rhs
            ));
        }
    }
    (report.is_pass(), human, records)
}

fn render_coalgebra_check(c: &ThreeLieCoalgebra) -> (bool, String, String) {
    let report = c.check_co_jacobi();
    let mut human = String::new();
    let mut records = String::new();
    if report.is_pass() {
        human.push_str("co-Jacobi identity: pass\n");
    } else {
        human.push_str(&format!(
            "co-Jacobi identity: fail ({} violations)\n",
            report.violations.len()
        ));
        for v in &report.violations {
            human.push_str(&format!("  {v}\n"));
            records.push_str(&format!(
                "violation check=co-jacobi index={} entries={}\n",
                v.index,
                v.defect.len()
            ));
        }
    }
    (report.is_pass(), human, records)
}

fn render_bialgebra_check(report: &BialgebraReport) -> (bool, String, String) {
    let mut human = String::new();
    let mut records = String::new();
    let fi = &report.fundamental_identity;
    human.push_str(&format!(
        "fundamental identity: {}\n",
        if fi.is_pass() {
            "pass".into()
        } else {
            format!("fail ({} violations)", fi.violations.len())
        }
    ));
    for v in &fi.violations {
        human.push_str(&format!("  {v}\n"));
        let [u, vv, x, y, z] = v.tuple;
        records.push_str(&format!(
            "violation check=fundamental-identity tuple={u},{vv};{x},{y},{z} \
             component={} lhs={} rhs={}\n",
            v.component, v.lhs, v.rhs
        ));
    }
    let cj = &report.co_jacobi;
    human.push_str(&format!(
        "co-Jacobi identity: {}\n",
        if cj.is_pass() {
            "pass".into()
        } else {
            format!("fail ({} violations)", cj.violations.len())
        }
    ));
    for v in &cj.violations {
        human.push_str(&format!("  {v}\n"));
        records.push_str(&format!(
            "violation check=co-jacobi index={} entries={}\n",
            v.index,
            v.defect.len()
        ));
    }
    let compat = &report.compatibility;
    human.push_str(&format!(
        "compatibility: {}\n",
        if compat.is_pass() {
            "pass".into()
        } else {
            format!("fail ({} violations)", compat.violations.len())
        }
    ));
    for v in &compat.violations {
        human.push_str(&format!("  {v}\n"));
        records.push_str(&format!(
            "violation check=compatibility triple={},{},{}\n",
            v.triple[0], v.triple[1], v.triple[2]
        ));
    }
    (report.is_pass(), human, records)
}

// ---------------------------------------------------------------------------
// dualize

fn cmd_dualize(
    kind: Option<ObjectKind>,
    alpha: Option<&str>,
    _format: Format,
    input: &str,
) -> Result<ExitCode, String> {
    let object = load_input(input, kind, alpha)?;
    let dual = match &object {
        FileObject::Algebra(a) => FileObject::Coalgebra(dual_of_algebra(a)),
        FileObject::Coalgebra(c) => FileObject::Algebra(dual_of_coalgebra(c)),
        FileObject::Bialgebra(b) => match dual_bialgebra(b) {
            Ok(dual) => FileObject::Bialgebra(dual),
            Err(Error::NotVerified(checks)) => {
                eprintln!("input bialgebra fails verification ({checks})");
                return Ok(ExitCode::from(1));
            }
            Err(e) => return Err(e.to_string()),
        },
        FileObject::Map(_) => return Err("map files cannot be dualized".to_string()),
    };
    print!("{}", serialize(&dual));
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// equiv

enum EquivOutcome {
    Equivalent(LinearIso),
    Inequivalent {
        component: &'static str,
        left: usize,
        right: usize,
    },
    Unknown(&'static str),
}

#[allow(clippy::too_many_arguments)]
fn cmd_equiv(
    map: Option<PathBuf>,
    search: Option<SearchFamily>,
    kind: Option<ObjectKind>,
    alpha: Option<&str>,
    alpha_b: Option<&str>,
    format: Format,
    a: &str,
    b: &str,
) -> Result<ExitCode, String> {
    if map.is_none() && search.is_none() {
        return Err("pass exactly one of --map or --search".to_string());
    }
    let left = load_input(a, kind, alpha)?;
    let right = load_input(b, kind, alpha_b)?;
    if left.kind_name() != right.kind_name() {
        return Err(format!(
            "kind mismatch: `{a}` is a {}, `{b}` is a {}",
            left.kind_name(),
            right.kind_name()
        ));
    }
    if left.dim() != right.dim() {
        return Err(format!(
            "dimension mismatch: `{a}` has dim {}, `{b}` has dim {}",
            left.dim(),
            right.dim()
        ));
    }

    let supplied = match map {
        Some(path) => {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| format!("cannot read `{}`: {e}", path.display()))?;
            match parse(&text).map_err(|e| format!("{}: {e}", path.display()))? {
                FileObject::Map(f) => Some(f),
                other => {
                    return Err(format!(
                        "`{}` is a {} file, expected map lines",
                        path.display(),
                        other.kind_name()
                    ))
                }
            }
        }
        None => None,
    };

    let mismatch = first_fingerprint_mismatch(&left, &right);
    let outcome = if let Some(f) = supplied {
        if f.dim() != left.dim() {
            return Err(format!(
                "map dimension {} does not match the objects ({})",
                f.dim(),
                left.dim()
            ));
        }
        if verify_pair(&f, &left, &right)? {
            EquivOutcome::Equivalent(f)
        } else if let Some((component, l, r)) = mismatch {
            EquivOutcome::Inequivalent {
                component,
                left: l,
                right: r,
            }
        } else {
            EquivOutcome::Unknown("the supplied map does not verify")
        }
    } else {
        let family = search.expect("checked above");
        if let Some((component, l, r)) = mismatch {
            EquivOutcome::Inequivalent {
                component,
                left: l,
                right: r,
            }
        } else {
            match search_pair(family, &left, &right)? {
                Some(f) => EquivOutcome::Equivalent(f),
                None => EquivOutcome::Unknown("no witness in the searched family"),
            }
        }
    };

    let code = match &outcome {
        EquivOutcome::Equivalent(f) => {
            match format {
                Format::Human => {
                    println!("equivalent");
                    print!("{}", serialize(&FileObject::Map(f.clone())));
                }
                Format::Records => {
                    println!("equiv verdict=equivalent");
                    println!("witness matrix={}", matrix_record(f));
                }
            }
            ExitCode::SUCCESS
        }
        EquivOutcome::Inequivalent {
            component,
            left,
            right,
        } => {
            match format {
                Format::Human => println!("inequivalent ({component} {left} != {right})"),
                Format::Records => println!(
                    "equiv verdict=inequivalent component={component} left={left} right={right}"
                ),
            }
            ExitCode::from(1)
        }
        EquivOutcome::Unknown(reason) => {
            match format {
                Format::Human => println!("unknown ({reason})"),
                Format::Records => println!("equiv verdict=unknown"),
            }
            ExitCode::from(3)
        }
    };
    Ok(code)
}

fn matrix_record(f: &LinearIso) -> String {
    let m = f.matrix();
    (0..f.dim())
        .map(|r| {
            (0..f.dim())
                .map(|c| m.at(r, c).to_string())
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect::<Vec<_>>()
        .join(";")
}

fn first_fingerprint_mismatch(
    left: &FileObject,
    right: &FileObject,
) -> Option<(&'static str, usize, usize)> {
    match (left, right) {
        (FileObject::Algebra(a1), FileObject::Algebra(a2)) => {
            let (f1, f2) = (algebra_fingerprint(a1), algebra_fingerprint(a2));
            f1.iter()
                .zip(f2)
                .find(|(x, y)| x.1 != y.1)
                .map(|(x, y)| (x.0, x.1, y.1))
        }
        (FileObject::Coalgebra(c1), FileObject::Coalgebra(c2)) => {
            let (f1, f2) = (coalgebra_fingerprint(c1), coalgebra_fingerprint(c2));
            f1.iter()
                .zip(f2)
                .find(|(x, y)| x.1 != y.1)
                .map(|(x, y)| (x.0, x.1, y.1))
        }
        (FileObject::Bialgebra(b1), FileObject::Bialgebra(b2)) => {
            fingerprint(b1).first_mismatch(&fingerprint(b2))
        }
        _ => None,
    }
}

fn verify_pair(f: &LinearIso, left: &FileObject, right: &FileObject) -> Result<bool, String> {
    let result = match (left, right) {
        (FileObject::Algebra(a1), FileObject::Algebra(a2)) => verify_algebra_iso(f, a1, a2),
        (FileObject::Coalgebra(c1), FileObject::Coalgebra(c2)) => {
            verify_coalgebra_iso(f, c1, c2)
        }
        (FileObject::Bialgebra(b1), FileObject::Bialgebra(b2)) => {
            verify_equivalence(f, b1, b2)
        }
        _ => return Err("equivalence requires two objects, not maps".to_string()),
    };
    result.map_err(|e| e.to_string())
}

fn search_pair(
    family: SearchFamily,
    left: &FileObject,
    right: &FileObject,
) -> Result<Option<LinearIso>, String> {
    let result = match (left, right) {
        (FileObject::Algebra(a1), FileObject::Algebra(a2)) => {
            search_algebra_iso(a1, a2, family)
        }
        (FileObject::Coalgebra(c1), FileObject::Coalgebra(c2)) => {
            search_coalgebra_iso(c1, c2, family)
        }
        (FileObject::Bialgebra(b1), FileObject::Bialgebra(b2)) => {
            search_equivalence(b1, b2, family)
        }
        _ => return Err("equivalence requires two objects, not maps".to_string()),
    };
    result.map_err(|e| e.to_string())
}

// ---------------------------------------------------------------------------
// enumerate

fn cmd_enumerate(
    dim: usize,
    grid: &str,
    mu: &str,
    alpha: Option<&str>,
    format: Format,
) -> Result<ExitCode, String> {
    if dim != 3 {
        return Err(format!("unsupported dimension {dim} (only --dim 3)"));
    }
    let grid_values: Vec<ExactScalar> = grid
        .split(',')
        .map(|t| t.trim().parse::<ExactScalar>())
        .collect::<Result<_, _>>()
        .map_err(|e: Error| e.to_string())?;
    let mu_input = if mu.starts_with("catalog:") {
        mu.to_string()
    } else {
        format!("catalog:{mu}")
    };
    let object = load_input(&mu_input, Some(ObjectKind::Algebra), alpha)?;
    let FileObject::Algebra(bracket) = object else {
        return Err(format!("`{mu}` is not an algebra"));
    };
    let report = catalog::enumerate_dim3(&bracket, &grid_values).map_err(|e| e.to_string())?;

    let unclassified = report.unclassified_count();
    let ambiguous = report.ambiguous_count();
    match format {
        Format::Human => {
            println!(
                "survivors: {} (rejected: {})",
                report.survivors.len(),
                report.rejected
            );
            for (label, count) in report.class_counts() {
                println!("class {label}: {count}");
            }
            if unclassified > 0 {
                println!("unclassified: {unclassified}");
            }
            if ambiguous > 0 {
                println!("ambiguous: {ambiguous}");
            }
        }
        Format::Records => {
            println!(
                "enumerate mu={mu} dim=3 grid={grid} survivors={} rejected={} \
                 unclassified={} ambiguous={}",
                report.survivors.len(),
                report.rejected,
                unclassified,
                ambiguous
            );
            for (label, count) in report.class_counts() {
                println!("class label={label} count={count}");
            }
        }
    }
    Ok(if unclassified == 0 && ambiguous == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
