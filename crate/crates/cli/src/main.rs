mod output;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use serde::Serialize;

use npcert::corpus::{load_corpus, run_corpus};
use npcert::kronecker::{full_factor, SearchLimits, DEFAULT_DIVISOR_CAP};
use npcert::newton::{dumas_check, newton_polygon};
use npcert::roots::{numeric_roots_seeded, vieta_check, DEFAULT_SEED};
use npcert::{check_all, Certificate, Error, Polynomial, Verdict};

use output::{CorpusJson, DumasJson, FactorJson, PolygonJson, RootsJson};

const EXIT_USAGE: u8 = 64;

const DEFAULT_CORPUS: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../../corpus/known.json");

/// Irreducibility certificates for integer polynomials with prime-power
/// constant term.
///
/// Polynomials are given as text (`"x^3 - x^2 - 10x + 16"`) or as
/// `@file.json` holding a constant-first coefficient array.
#[derive(Debug, Parser)]
#[command(name = "npcert", version)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Seed for randomized starting points.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,

    /// Print nothing; report through the exit code only.
    #[arg(long, short, global = true)]
    quiet: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Certify irreducibility (exit 0 irreducible, 1 inconclusive, 2 reducible).
    Check {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        /// Run the exhaustive factor search when no criterion applies.
        #[arg(long)]
        oracle: bool,
    },
    /// Newton polygon with respect to a prime.
    Polygon {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(short, long)]
        prime: BigInt,
    },
    /// Factor over the integers by Kronecker's method.
    Factor {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_DIVISOR_CAP)]
        divisor_cap: u64,
    },
    /// Numeric roots, moduli and the Vieta product.
    Roots {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Compare the segment vectors of g*h with those of g and h.
    Dumas {
        #[arg(allow_hyphen_values = true)]
        g: String,
        #[arg(allow_hyphen_values = true)]
        h: String,
        #[arg(short, long)]
        prime: BigInt,
    },
    /// Run a corpus of polynomials with known answers.
    Corpus {
        /// Corpus file; defaults to the bundled one.
        path: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Syntax { .. }
            | Error::NegativeExponent { .. }
            | Error::CoefficientArray(_)
            | Error::ZeroPolynomial
            | Error::NotPrime(_)
            | Error::InvalidArgument(_)
            | Error::Corpus(_) => Failure::Usage(e.to_string()),
            _ => Failure::Runtime(e.to_string()),
        }
    }
}

fn read_poly(arg: &str) -> Result<Polynomial, Failure> {
    match arg.strip_prefix('@') {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("{path}: {e}")))?;
            Ok(Polynomial::from_json_array(&text)?)
        }
        None => Ok(arg.parse()?),
    }
}

struct Out {
    json: bool,
    quiet: bool,
}

impl Out {
    fn json<T: Serialize>(&self, value: &T) {
        self.line(serde_json::to_string_pretty(value).expect("output structs serialize"));
    }

    fn text(&self, line: impl AsRef<str>) {
        self.line(line.as_ref());
    }

    // A closed pipe (`npcert ... | head`) is not an error worth a panic.
    fn line(&self, s: impl AsRef<str>) {
        if !self.quiet {
            let _ = writeln!(std::io::stdout().lock(), "{}", s.as_ref());
        }
    }
}

fn print_certificate(out: &Out, f: &Polynomial, cert: &Certificate) {
    out.text(format!("f(x) = {f}"));
    out.text(format!("verdict: {}", cert.verdict));
    out.text(format!("criterion: {}", cert.criterion));
    if let (Some(p), Some(u)) = (&cert.prime, cert.exponent) {
        out.text(format!("p = {p}, u = {u}"));
    }
    if let Some(m) = cert.m {
        out.text(format!("m = {m}"));
    }
    if cert.primality_probabilistic {
        out.text("primality probabilistic");
    }
    let width = cert.reports.iter().map(|r| r.name.chars().count()).max().unwrap_or(0);
    out.text("");
    for r in &cert.reports {
        let mark = if r.holds { "ok  " } else { "FAIL" };
        let pad = width - r.name.chars().count();
        out.text(format!("  [{mark}] {}{}  {}", r.name, " ".repeat(pad), r.detail));
    }
    if let Some(w) = &cert.witness {
        let sign = if w.unit < 0 { "-" } else { "" };
        let parts: String = w.factors.iter().map(|g| format!("({g})")).collect();
        out.text("");
        out.text(format!("witness: {sign}{parts}"));
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let out = Out {
        json: cli.json,
        quiet: cli.quiet,
    };
    match cli.command {
        Command::Check { poly, oracle } => {
            let f = read_poly(&poly)?;
            let limits = SearchLimits::default();
            let cert = check_all(&f, oracle.then_some(&limits))?;
            if out.json {
                out.json(&cert);
            } else {
                print_certificate(&out, &f, &cert);
            }
            Ok(cert.verdict.exit_code() as u8)
        }
        Command::Polygon { poly, prime } => {
            let f = read_poly(&poly)?;
            let np = newton_polygon(&f, &prime)?;
            if out.json {
                out.json(&PolygonJson::from(&np));
            } else {
                out.text(format!("f(x) = {f}, p = {prime}"));
                let verts: Vec<String> = np.vertices.iter().map(|v| v.to_string()).collect();
                out.text(format!("vertices: {}", verts.join(" ")));
                out.text("edges:");
                for e in np.edges() {
                    out.text(format!("  {e}"));
                }
                out.text(format!("segment vectors: {}", np.segment_vectors()));
                out.text(format!(
                    "negative-slope segments: {}",
                    np.negative_slope_segments().len()
                ));
            }
            Ok(0)
        }
        Command::Factor {
            poly,
            max_degree,
            divisor_cap,
        } => {
            let f = read_poly(&poly)?;
            let limits = SearchLimits {
                max_degree,
                divisor_cap,
            };
            let fac = full_factor(&f, &limits)?;
            if out.json {
                out.json(&FactorJson::from(&fac));
            } else {
                let sign = if fac.unit < 0 { "-" } else { "" };
                let parts: String = fac.factors.iter().map(|g| format!("({g})")).collect();
                out.text(format!("{f} = {sign}{parts}"));
                let status = match (fac.factors.len(), fac.exhaustive) {
                    (1, true) => "irreducible (exhaustive)",
                    (_, true) => "complete (exhaustive)",
                    (_, false) => "search truncated or partial; factors may split further",
                };
                out.text(status);
                out.text(output::limits_line(&limits));
            }
            Ok(0)
        }
        Command::Roots { poly } => {
            let f = read_poly(&poly)?;
            let roots = numeric_roots_seeded(&f, cli.seed)?;
            let vieta = vieta_check(&f, &roots);
            if out.json {
                out.json(&RootsJson::new(&roots, &vieta));
            } else {
                out.text(format!("f(x) = {f}"));
                for (z, r) in roots.roots.iter().zip(&roots.residuals) {
                    out.text(format!(
                        "  {:>22.15} {:+.15}i  |z| = {:.15}  residual {:.1e}",
                        z.re,
                        z.im,
                        z.norm(),
                        r
                    ));
                }
                out.text(format!("min modulus: {:.15}", roots.min_modulus()));
                out.text(format!("Vieta product: {:.15}", vieta.product));
                out.text(format!("|a_0 / a_n|:   {:.15}", vieta.expected));
            }
            Ok(if vieta.holds { 0 } else { 1 })
        }
        Command::Dumas { g, h, prime } => {
            let g = read_poly(&g)?;
            let h = read_poly(&h)?;
            let check = dumas_check(&g, &h, &prime)?;
            if out.json {
                out.json(&DumasJson::new(&prime, &check));
            } else {
                out.text(format!("g * h: {}", check.product));
                out.text(format!("g:     {}", check.left));
                out.text(format!("h:     {}", check.right));
                out.text(if check.holds {
                    "Dumas property holds"
                } else {
                    "Dumas property FAILS"
                });
            }
            Ok(if check.holds { 0 } else { 1 })
        }
        Command::Corpus { path } => {
            let path = path.unwrap_or_else(|| PathBuf::from(DEFAULT_CORPUS));
            let entries = load_corpus(&path)?;
            let outcomes = run_corpus(&entries, &SearchLimits::default());
            let passed = outcomes.iter().filter(|o| o.passed).count();
            let failed = outcomes.len() - passed;
            if out.json {
                out.json(&CorpusJson {
                    passed,
                    failed,
                    entries: outcomes,
                });
            } else {
                let width = outcomes.iter().map(|o| o.id.len()).max().unwrap_or(0);
                for o in &outcomes {
                    let mark = if o.passed { "pass" } else { "FAIL" };
                    out.text(format!("{mark}  {:width$}  {}", o.id, o.failures.join("; ")));
                }
                out.text(format!("{passed} passed, {failed} failed"));
            }
            Ok(if failed == 0 { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(Verdict::Inconclusive.exit_code() as u8)
        }
    }
}
