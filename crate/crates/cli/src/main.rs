//! Command-line front end: construct matrices with certificates, re-verify
//! files, and run quantum-code pipelines on matrix-product descriptions.
//!
//! Exit status contract: 0 = all checks proved, 2 = precondition violation
//! (bad arguments, unmet construction preconditions, parse errors),
//! 3 = verification failure (a certificate, Hadamard identity or pipeline
//! proof did not check out).

use clap::{Args, Parser, Subcommand, ValueEnum};
use mpqc_core::construct::{
    a_gamma, explicit_family, family_parameter, hermitian_diagonalize, hermitian_sum_matrix,
    lower_quasi_orthogonalize, lower_quasi_unitarize, nsc_quasi_orthogonal, nsc_quasi_unitary,
    paley_hadamard, quadratic_sum_matrix, sylvester_double, symmetric_diagonalize, u_qk,
    unitary_vandermonde, upper_quasi_orthogonalize, upper_quasi_unitarize, CongruenceCertificate,
    Form, IntMatrix, SearchConfig,
};
use mpqc_core::lincode::LinearCode;
use mpqc_core::matrix::DEFAULT_ENUM_CAP;
use mpqc_core::mpc::load_description;
use mpqc_core::quantum::pipeline;
use mpqc_core::{Error, FMatrix, FieldElement, FieldSpec};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "mpqc",
    about = "Exact matrix-product quantum code toolkit",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a matrix and its self-verifying certificate.
    Construct(ConstructArgs),
    /// Re-run every check a certificate, matrix, code or Hadamard file claims.
    Verify(VerifyArgs),
    /// Run the dual-containment pipeline on a description file.
    Pipeline(PipelineArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    /// Lower-unitriangular quasi-orthogonalization of a matrix file.
    LowerQo,
    /// Upper-unitriangular variant (no NSC guarantee).
    UpperQo,
    /// Lower-unitriangular quasi-unitarization over GF(q^2).
    LowerQu,
    /// Upper-unitriangular quasi-unitarization.
    UpperQu,
    /// Congruence diagonalization of a symmetric matrix.
    SymmetricDiag,
    /// Congruence diagonalization of a Hermitian matrix.
    HermitianDiag,
    /// Quadratic-sum matrix from a coefficient list.
    Sum,
    /// Hermitian-sum matrix from a coefficient list.
    Hsum,
    /// Paley Hadamard matrix for q = 3 mod 4.
    Paley,
    /// Sylvester doubling of a Hadamard file.
    Sylvester,
    /// Cyclic-subgroup Vandermonde with monomial Gram.
    Agamma,
    /// Roots-of-unity Vandermonde with Gram k * P_sigma.
    Uqk,
    /// Unitary Vandermonde for k | q+1.
    UnitaryVandermonde,
    /// Search for an NSC quasi-unitary matrix (k < q).
    NscQu,
    /// Search for an NSC quasi-orthogonal matrix.
    NscQo,
    /// Closed-form 2x2 NSC quasi-unitary family.
    Family2,
    /// Closed-form 3x3 NSC quasi-unitary family.
    Family3,
    /// Closed-form 4x4 NSC quasi-unitary family (q >= 5).
    Family4,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(value_enum)]
    kind: Kind,
    /// Field spec, e.g. "GF(5)" or "GF(3^2;1,0,1)".
    #[arg(long)]
    field: Option<String>,
    /// Input matrix or Hadamard file.
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// Output base path; writes `<out>.mat` and `<out>.cert` (or `<out>.hmat`).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Matrix order for the family constructors.
    #[arg(long)]
    k: Option<usize>,
    /// Field size shorthand for --field (canonical modulus).
    #[arg(long)]
    q: Option<u64>,
    /// Sylvester doubling rounds.
    #[arg(long, default_value_t = 1)]
    w: u32,
    /// Scaling element for agamma (element syntax).
    #[arg(long)]
    gamma: Option<String>,
    /// Coefficient list for sum/hsum, comma-separated element tokens.
    #[arg(long)]
    cs: Option<String>,
    /// Parameter element for family2/3/4 (defaults to the smallest member).
    #[arg(long)]
    a: Option<String>,
    /// Seed for the randomized searches.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Attempt budget for the randomized searches.
    #[arg(long, default_value_t = 20_000)]
    budget: u64,
}

#[derive(Args)]
struct VerifyArgs {
    path: PathBuf,
    /// Additionally require the matrix to be non-singular by columns.
    #[arg(long)]
    nsc: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FormArg {
    Euclidean,
    Hermitian,
}

impl From<FormArg> for Form {
    fn from(f: FormArg) -> Form {
        match f {
            FormArg::Euclidean => Form::Euclidean,
            FormArg::Hermitian => Form::Hermitian,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Table,
    Record,
}

#[derive(Args)]
struct PipelineArgs {
    /// Description file: k lines `code <path>` then `matrix <path>`.
    #[arg(long)]
    desc: PathBuf,
    #[arg(long, value_enum)]
    form: FormArg,
    #[arg(long, value_enum, default_value_t = FormatArg::Table)]
    format: FormatArg,
    /// Enumeration cap for distances and profiles.
    #[arg(long, default_value_t = DEFAULT_ENUM_CAP as u64)]
    cap: u64,
    /// Optional path for the machine-readable record.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Exit 3 for failed verifications, 2 for everything else.
fn exit_for(err: &Error) -> ExitCode {
    match err {
        Error::CertificateInvalid(_) | Error::NotHadamard => ExitCode::from(3),
        _ => ExitCode::from(2),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Construct(args) => cmd_construct(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Pipeline(args) => cmd_pipeline(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            exit_for(&err)
        }
    }
}

fn parse_field(args_field: &Option<String>, q: Option<u64>) -> Result<FieldSpec, Error> {
    if let Some(f) = args_field {
        return FieldSpec::parse(f);
    }
    if let Some(q) = q {
        return spec_from_q(q);
    }
    Err(Error::Precondition("--field (or --q) is required".into()))
}

/// GF(q) for a prime power q, with the canonical modulus.
fn spec_from_q(q: u64) -> Result<FieldSpec, Error> {
    let mut p = 2;
    while p * p <= q {
        if q.is_multiple_of(p) {
            let mut m = 0;
            let mut v = q;
            while v.is_multiple_of(p) {
                v /= p;
                m += 1;
            }
            if v != 1 {
                return Err(Error::Precondition(format!("{q} is not a prime power")));
            }
            return FieldSpec::new(p, m, None);
        }
        p += 1;
    }
    FieldSpec::new(q, 1, None)
}

fn read_matrix(path: &Option<PathBuf>) -> Result<FMatrix, Error> {
    let path = path
        .as_ref()
        .ok_or_else(|| Error::Precondition("--in <matrix file> is required".into()))?;
    FMatrix::from_text(&std::fs::read_to_string(path)?)
}

fn parse_elements(spec: &FieldSpec, list: &str) -> Result<Vec<FieldElement>, Error> {
    list.split(',')
        .map(|tok| FieldElement::parse(spec, tok.trim()))
        .collect()
}

fn out_base(out: &Option<PathBuf>, default: &str) -> PathBuf {
    out.clone().unwrap_or_else(|| PathBuf::from(default))
}

fn write_outputs(base: &Path, cert: &CongruenceCertificate) -> Result<(), Error> {
    let mat_path = base.with_extension("mat");
    let cert_path = base.with_extension("cert");
    std::fs::write(&mat_path, cert.result.to_text())?;
    std::fs::write(&cert_path, cert.to_text())?;
    println!("wrote {} and {}", mat_path.display(), cert_path.display());
    Ok(())
}

fn cmd_construct(args: ConstructArgs) -> Result<(), Error> {
    let base = out_base(&args.out, "construct-out");
    match args.kind {
        Kind::LowerQo
        | Kind::UpperQo
        | Kind::LowerQu
        | Kind::UpperQu
        | Kind::SymmetricDiag
        | Kind::HermitianDiag => {
            let m = read_matrix(&args.input)?;
            if let Some(f) = &args.field {
                if &FieldSpec::parse(f)? != m.spec() {
                    return Err(Error::Precondition(
                        "--field disagrees with the matrix file".into(),
                    ));
                }
            }
            let cert = match args.kind {
                Kind::LowerQo => lower_quasi_orthogonalize(&m)?,
                Kind::UpperQo => upper_quasi_orthogonalize(&m)?,
                Kind::LowerQu => lower_quasi_unitarize(&m)?,
                Kind::UpperQu => upper_quasi_unitarize(&m)?,
                Kind::SymmetricDiag => symmetric_diagonalize(&m)?,
                Kind::HermitianDiag => hermitian_diagonalize(&m)?,
                _ => unreachable!(),
            };
            finish_certificate(&base, cert)
        }
        Kind::Sum | Kind::Hsum => {
            let spec = parse_field(&args.field, args.q)?;
            let list = args
                .cs
                .as_ref()
                .ok_or_else(|| Error::Precondition("--cs <c0,c1,...> is required".into()))?;
            let cs = parse_elements(&spec, list)?;
            let (s, form) = if args.kind == Kind::Sum {
                (quadratic_sum_matrix(&cs)?, Form::Euclidean)
            } else {
                (hermitian_sum_matrix(&cs)?, Form::Hermitian)
            };
            let cert = CongruenceCertificate::for_quasi_result(s, form)?;
            if cert.degenerate {
                println!(
                    "note: zero gram scalar; result is not quasi-{}",
                    match form {
                        Form::Euclidean => "orthogonal",
                        Form::Hermitian => "unitary",
                    }
                );
            }
            finish_certificate(&base, cert)
        }
        Kind::Paley => {
            let spec = parse_field(&args.field, args.q)?;
            let h = paley_hadamard(&spec)?;
            write_hadamard(&base, &h)
        }
        Kind::Sylvester => {
            let path = args
                .input
                .as_ref()
                .ok_or_else(|| Error::Precondition("--in <hadamard file> is required".into()))?;
            let h = IntMatrix::from_text(&std::fs::read_to_string(path)?)?;
            let doubled = sylvester_double(&h, args.w)?;
            write_hadamard(&base, &doubled)
        }
        Kind::Agamma => {
            let spec = parse_field(&args.field, args.q)?;
            let k = args
                .k
                .ok_or_else(|| Error::Precondition("--k is required".into()))?;
            let gamma = match &args.gamma {
                Some(g) => FieldElement::parse(&spec, g)?,
                None => spec.one(),
            };
            let m = a_gamma(&spec, k, &gamma)?;
            let path = base.with_extension("mat");
            std::fs::write(&path, m.to_text())?;
            println!("wrote {}", path.display());
            Ok(())
        }
        Kind::Uqk => {
            let spec = parse_field(&args.field, args.q)?;
            let k = args
                .k
                .ok_or_else(|| Error::Precondition("--k is required".into()))?;
            let (m, sigma) = u_qk(&spec, k)?;
            let path = base.with_extension("mat");
            std::fs::write(&path, m.to_text())?;
            println!("wrote {} with sigma = {}", path.display(), sigma);
            Ok(())
        }
        Kind::UnitaryVandermonde => {
            let spec = parse_field(&args.field, args.q)?;
            let k = args
                .k
                .ok_or_else(|| Error::Precondition("--k is required".into()))?;
            let m = unitary_vandermonde(&spec, k)?;
            let cert = CongruenceCertificate::for_quasi_result(m, Form::Hermitian)?;
            finish_certificate(&base, cert)
        }
        Kind::NscQu | Kind::NscQo => {
            let spec = parse_field(&args.field, args.q)?;
            let k = args
                .k
                .ok_or_else(|| Error::Precondition("--k is required".into()))?;
            let config = SearchConfig {
                seed: args.seed,
                budget: args.budget,
            };
            let cert = if args.kind == Kind::NscQu {
                nsc_quasi_unitary(&spec, k, config)?
            } else {
                nsc_quasi_orthogonal(&spec, k, config)?
            };
            finish_certificate(&base, cert)
        }
        Kind::Family2 | Kind::Family3 | Kind::Family4 => {
            let spec = parse_field(&args.field, args.q)?;
            let order = match args.kind {
                Kind::Family2 => 2,
                Kind::Family3 => 3,
                _ => 4,
            };
            let a = match &args.a {
                Some(s) => FieldElement::parse(&spec, s)?,
                None => family_parameter(&spec, order)?,
            };
            let cert = explicit_family(order, &a)?;
            finish_certificate(&base, cert)
        }
    }
}

fn finish_certificate(base: &Path, cert: CongruenceCertificate) -> Result<(), Error> {
    let report = cert.verify()?;
    write_outputs(base, &cert)?;
    for line in report {
        println!("check: {line}");
    }
    Ok(())
}

fn write_hadamard(base: &Path, h: &IntMatrix) -> Result<(), Error> {
    if !h.is_hadamard() {
        return Err(Error::NotHadamard);
    }
    let path = base.with_extension("hmat");
    std::fs::write(&path, h.to_text())?;
    println!(
        "wrote {} (order {}, H H^T = {} I verified)",
        path.display(),
        h.order(),
        h.order()
    );
    Ok(())
}

fn cmd_verify(args: VerifyArgs) -> Result<(), Error> {
    let text = std::fs::read_to_string(&args.path)?;
    let first = text
        .lines()
        .find(|l| !l.trim().is_empty())
        .unwrap_or("")
        .trim()
        .to_string();
    if first == "certificate v1" {
        let cert = CongruenceCertificate::from_text(&text)?;
        let report = cert.verify()?;
        for line in report {
            println!("check: {line}");
        }
        if args.nsc && !cert.nsc_verified {
            match cert.result.is_nsc()? {
                mpqc_core::NscOutcome::Nsc => println!("check: result is NSC"),
                mpqc_core::NscOutcome::Fails { i, cols } => {
                    return Err(Error::CertificateInvalid(format!(
                        "not NSC: rows 1..{i}, columns {cols:?} singular"
                    )));
                }
            }
        }
        println!("certificate ok");
        Ok(())
    } else if first.starts_with("hadamard ") {
        let h = IntMatrix::from_text(&text)?;
        if !h.is_hadamard() {
            return Err(Error::NotHadamard);
        }
        println!("hadamard identity ok (order {})", h.order());
        Ok(())
    } else if first.starts_with("code ") {
        let code = LinearCode::from_text(&text)?;
        println!(
            "code ok: [{}, {}] over {}, generator has full rank",
            code.len(),
            code.dim(),
            code.spec()
        );
        Ok(())
    } else if first.starts_with("GF(") {
        let m = FMatrix::from_text(&text)?;
        println!("matrix ok: {}x{} over {}", m.rows(), m.cols(), m.spec());
        if args.nsc {
            match m.is_nsc()? {
                mpqc_core::NscOutcome::Nsc => println!("check: matrix is NSC"),
                mpqc_core::NscOutcome::Fails { i, cols } => {
                    return Err(Error::CertificateInvalid(format!(
                        "not NSC: rows 1..{i}, columns {cols:?} singular"
                    )));
                }
            }
        }
        Ok(())
    } else {
        Err(Error::Parse(format!("unrecognized file header: {first}")))
    }
}

fn cmd_pipeline(args: PipelineArgs) -> Result<(), Error> {
    let (codes, matrix) = load_description(&args.desc)?;
    let (_, params, cert) = pipeline(&codes, &matrix, args.form.into(), args.cap as u128)?;
    match args.format {
        FormatArg::Table => print!("{}", cert.render_table()),
        FormatArg::Record => println!("{}", cert.render_record()),
    }
    println!("parameters: {}", params.display());
    if let Some(out) = &args.out {
        std::fs::write(out, format!("{}\n", cert.render_record()))?;
        println!("wrote {}", out.display());
    }
    Ok(())
}
