//! Command-line front end: build kernel triangles, run inversions by
//! any method, emit change-of-basis tables, expand polynomials, and run
//! the consistency battery.
//!
//! Exit codes: 0 on success (and all-pass for `verify`), 1 on domain
//! errors, 2 on usage errors.

mod output;
mod source;
mod verify;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use trikernel::change::{
    change_by_convolution, change_by_recurrence, change_cross_order, expand_in_basis, reconstruct,
};
use trikernel::inversion::{
    inverse_by_determinant, inverse_by_orthogonality, inverse_by_recurrence,
};
use trikernel::kernel::w_m;
use trikernel::{Polynomial, Scalar, TriangularKernel};

use output::{Format, OutputDocument};
use source::Source;

/// Hard cap on requested row counts unless raised via `TRIKERNEL_MAX_N`.
const DEFAULT_MAX_N: i64 = 512;

#[derive(Debug)]
pub enum CliError {
    Domain(String),
    Usage(String),
}

impl From<trikernel::Error> for CliError {
    fn from(e: trikernel::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

#[derive(Parser)]
#[command(
    name = "trikernel",
    version,
    about = "Triangular kernels: exact inversions and polynomial basis changes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct SourceArgs {
    /// Catalog family name
    #[arg(long)]
    family: Option<String>,
    /// Path to a JSON spec file (lambda-recursive or explicit table)
    #[arg(long)]
    spec: Option<PathBuf>,
}

impl SourceArgs {
    fn resolve(&self) -> Result<Source, CliError> {
        match (&self.family, &self.spec) {
            (Some(name), None) => Source::from_catalog(name),
            (None, Some(path)) => Source::from_file(path),
            _ => unreachable!("clap group enforces exactly one"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InverseMethod {
    Orthogonality,
    Determinant,
    Recurrence,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ChangeMethod {
    Convolution,
    Recurrence,
}

#[derive(Subcommand)]
enum Command {
    /// Print the direct-kernel triangle, rows 0..=n-max
    Direct {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long = "n-max")]
        n_max: u32,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
    /// Print the inverse-kernel triangle
    Inverse {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long = "n-max")]
        n_max: u32,
        #[arg(long, value_enum, default_value_t = InverseMethod::Orthogonality)]
        method: InverseMethod,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
    /// Connection coefficients expressing --from in the basis of --to
    Change {
        /// Source family (catalog name or spec file path)
        #[arg(long)]
        from: String,
        /// Target family (catalog name or spec file path)
        #[arg(long)]
        to: String,
        #[arg(long = "n-max")]
        n_max: u32,
        #[arg(long, value_enum, default_value_t = ChangeMethod::Convolution)]
        method: ChangeMethod,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
    /// Cross-order connection coefficients Z(n; r), 0 <= r <= n
    Cross {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
    /// Re-express a polynomial in a family basis
    Expand {
        /// Comma-separated coefficients, lowest power first ("0,0,1" is x^2)
        #[arg(long)]
        poly: String,
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
    /// Run the consistency battery; exit 0 iff every check passes
    Verify {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long = "n-max")]
        n_max: u32,
    },
}

fn main() {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => {}
        Err(CliError::Domain(msg)) => {
            eprintln!("error: {msg}");
            std::process::exit(1);
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            std::process::exit(2);
        }
    }
}

fn cap() -> Result<i64, CliError> {
    match std::env::var("TRIKERNEL_MAX_N") {
        Err(_) => Ok(DEFAULT_MAX_N),
        Ok(text) => text
            .parse::<i64>()
            .ok()
            .filter(|v| *v >= 0)
            .ok_or_else(|| CliError::Usage(format!("invalid TRIKERNEL_MAX_N value {text:?}"))),
    }
}

fn checked_n(requested: u32, what: &str) -> Result<i64, CliError> {
    let cap = cap()?;
    let n = i64::from(requested);
    if n > cap {
        return Err(CliError::Usage(format!(
            "{what} {n} exceeds the cap {cap} (set TRIKERNEL_MAX_N to raise it)"
        )));
    }
    Ok(n)
}

fn push_triangle(doc: &mut OutputDocument, kernel: &TriangularKernel, n_max: i64) {
    for n in 0..=n_max {
        doc.push_row(n, kernel.row(n).expect("rows built to n_max").to_vec());
    }
}

fn emit(doc: &OutputDocument, format: Format) {
    use std::io::Write;
    let payload = doc.render(format);
    if let Err(e) = std::io::stdout().write_all(payload.as_bytes()) {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: cannot write output: {e}");
        std::process::exit(1);
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Direct {
            source,
            n_max,
            format,
        } => {
            let n_max = checked_n(n_max, "n-max")?;
            let source = source.resolve()?;
            let kernel = source.kernel(n_max)?;
            let mut doc = OutputDocument::new()
                .meta_str("family", source.label())
                .meta_int("m", kernel.m())
                .meta_int("n_max", n_max)
                .meta_str("method", "direct");
            push_triangle(&mut doc, &kernel, n_max);
            emit(&doc, format);
            Ok(())
        }
        Command::Inverse {
            source,
            n_max,
            method,
            format,
        } => {
            let n_max = checked_n(n_max, "n-max")?;
            let source = source.resolve()?;
            cmd_inverse(&source, n_max, method, format)
        }
        Command::Change {
            from,
            to,
            n_max,
            method,
            format,
        } => {
            let n_max = checked_n(n_max, "n-max")?;
            let from = Source::from_name_or_path(&from)?;
            let to = Source::from_name_or_path(&to)?;
            cmd_change(&from, &to, n_max, method, format)
        }
        Command::Cross {
            from,
            to,
            n,
            format,
        } => {
            let n = checked_n(n, "n")?;
            let from = Source::from_name_or_path(&from)?;
            let to = Source::from_name_or_path(&to)?;
            cmd_cross(&from, &to, n, format)
        }
        Command::Expand {
            poly,
            source,
            format,
        } => {
            let source = source.resolve()?;
            cmd_expand(&poly, &source, format)
        }
        Command::Verify { source, n_max } => {
            let n_max = checked_n(n_max, "n-max")?;
            let source = source.resolve()?;
            let all_pass = verify::run(&source, n_max)?;
            if all_pass {
                Ok(())
            } else {
                Err(CliError::Domain("verification failed".into()))
            }
        }
    }
}

fn cmd_inverse(
    source: &Source,
    n_max: i64,
    method: InverseMethod,
    format: Format,
) -> Result<(), CliError> {
    let kernel = source.kernel(n_max)?;
    let m = kernel.m();
    let method_name = match method {
        InverseMethod::Orthogonality => "orthogonality",
        InverseMethod::Determinant => "determinant",
        InverseMethod::Recurrence => "recurrence",
        InverseMethod::All => "all",
    };
    let inverse = match method {
        InverseMethod::Orthogonality | InverseMethod::All => {
            inverse_by_orthogonality(&kernel, n_max)?
        }
        InverseMethod::Determinant => {
            let mut rows = Vec::new();
            for n in 0..=n_max {
                let row = (0..=w_m(m, n))
                    .map(|k| inverse_by_determinant(&kernel, n, k))
                    .collect::<Result<Vec<_>, _>>()?;
                rows.push(row);
            }
            TriangularKernel::from_rows(m, rows)?
        }
        InverseMethod::Recurrence => inverse_by_recurrence(source.recursive_spec()?, n_max)?,
    };
    let mut doc = OutputDocument::new()
        .meta_str("family", source.label())
        .meta_int("m", m)
        .meta_int("n_max", n_max)
        .meta_str("method", method_name);
    push_triangle(&mut doc, &inverse, n_max);
    emit(&doc, format);

    if method == InverseMethod::All {
        // consistency report goes to stderr, keeping the payload parseable
        for n in 0..=n_max {
            for k in 0..=w_m(m, n) {
                if inverse_by_determinant(&kernel, n, k)? != inverse.get(n, k) {
                    eprintln!("consistency: determinant method disagrees at (n = {n}, k = {k})");
                    return Err(CliError::Domain("inversion methods disagree".into()));
                }
            }
        }
        let recurrence_note = match source.recursive_spec() {
            Ok(spec) if spec.h_is_k_free() => {
                let by_rec = inverse_by_recurrence(spec, n_max)?;
                for n in 0..=n_max {
                    for k in 0..=w_m(m, n) {
                        if by_rec.get(n, k) != inverse.get(n, k) {
                            eprintln!(
                                "consistency: recurrence method disagrees at (n = {n}, k = {k})"
                            );
                            return Err(CliError::Domain("inversion methods disagree".into()));
                        }
                    }
                }
                " = recurrence"
            }
            Ok(_) => " (recurrence not applicable: h depends on k)",
            Err(_) => " (recurrence not applicable: explicit table)",
        };
        eprintln!("consistency: orthogonality = determinant{recurrence_note}");
    }
    Ok(())
}

fn cmd_change(
    from: &Source,
    to: &Source,
    n_max: i64,
    method: ChangeMethod,
    format: Format,
) -> Result<(), CliError> {
    let table = match method {
        ChangeMethod::Convolution => {
            let f = from.kernel(n_max)?;
            let g = to.kernel(n_max)?;
            let mu3 = inverse_by_orthogonality(&g, n_max)?;
            change_by_convolution(&f, &mu3, n_max)?
        }
        ChangeMethod::Recurrence => {
            change_by_recurrence(from.recursive_spec()?, to.recursive_spec()?, n_max)?
        }
    };
    let mut doc = OutputDocument::new()
        .meta_str("from", from.label())
        .meta_str("to", to.label())
        .meta_int("m", table.m())
        .meta_int("n_max", n_max)
        .meta_str(
            "method",
            match method {
                ChangeMethod::Convolution => "convolution",
                ChangeMethod::Recurrence => "recurrence",
            },
        )
        .meta_str("direction", "f-to-g");
    for n in 0..=n_max {
        doc.push_row(n, table.row(n)?.to_vec());
    }
    emit(&doc, format);
    Ok(())
}

fn cmd_cross(from: &Source, to: &Source, n: i64, format: Format) -> Result<(), CliError> {
    let f = from.kernel(n)?;
    let g = to.kernel(n)?;
    let mu3 = inverse_by_orthogonality(&g, n)?;
    let table = change_cross_order(&f, &mu3, n)?;
    let mut doc = OutputDocument::new()
        .meta_str("from", from.label())
        .meta_str("to", to.label())
        .meta_int("m1", table.m1())
        .meta_int("m2", table.m2())
        .meta_int("n", n)
        .meta_str("method", "cross");
    doc.push_row(n, table.values().to_vec());
    emit(&doc, format);
    Ok(())
}

fn cmd_expand(poly_text: &str, source: &Source, format: Format) -> Result<(), CliError> {
    let coeffs = poly_text
        .split(',')
        .map(|part| part.trim().parse::<Scalar>())
        .collect::<Result<Vec<_>, _>>()?;
    let poly = Polynomial::from_coeffs(coeffs);
    let degree = poly.degree().map(|d| d as i64).unwrap_or(0);
    checked_n(
        u32::try_from(degree).unwrap_or(u32::MAX),
        "polynomial degree",
    )?;
    let kernel = source.kernel(degree)?;
    let inverse = inverse_by_orthogonality(&kernel, degree)?;
    let expansion = expand_in_basis(&poly, &kernel, &inverse)?;
    let verified = reconstruct(&kernel, &expansion)? == poly;
    let mut doc = OutputDocument::new()
        .meta_str("family", source.label())
        .meta_int("m", kernel.m())
        .meta_int("degree", degree)
        .meta_bool("verified", verified);
    doc.push_row(degree, expansion);
    emit(&doc, format);
    Ok(())
}
