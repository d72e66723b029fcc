//! The `bsl2` command line.
//!
//! Exit codes: 0 success or positive decision, 1 failure or negative
//! decision, 2 usage error (including inputs above `--max-degree`), 3
//! computation error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::axioms::axioms_check;
use crate::bhopf::{BraidedHopf, Instance};
use crate::braidrep::{ideal_generators, rho, BraidWord, IdealPresentation};
use crate::error::Error;
use crate::parse::parse_tensor;
use crate::tensor::{TensorElement, TensorJson};
use crate::verify::{charvar_probe, membership, rep_check, specialize_ideal, MatrixTuple};

#[derive(Parser, Debug)]
#[command(name = "bsl2", version, about = "Braid group actions and link ideals over braided SL(2)")]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the braided Hopf axioms and adjoint identities.
    Axioms {
        #[arg(long, default_value_t = 2)]
        max_degree: usize,
        #[arg(long, default_value = "bsl2")]
        instance: Instance,
        /// Use a deliberately broken braiding (negative control).
        #[arg(long, hide = true)]
        corrupted: bool,
    },
    /// Print the normal form of an element of A or A^⊗n.
    Normal {
        expr: String,
        #[arg(long, default_value = "bsl2")]
        instance: Instance,
    },
    /// Apply the braid action to an element.
    Rho {
        #[arg(long, allow_hyphen_values = true)]
        braid: String,
        /// Inline expression or file (text or JSON).
        #[arg(long, allow_hyphen_values = true)]
        element: String,
        #[arg(long, default_value = "bsl2")]
        instance: Instance,
    },
    /// Emit the generators of the link ideal of a braid closure.
    Ideal {
        #[arg(long, allow_hyphen_values = true)]
        braid: String,
        #[arg(long)]
        strands: Option<usize>,
        /// Specialize coefficients at t = 1.
        #[arg(long)]
        t1: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value = "bsl2")]
        instance: Instance,
    },
    /// Bounded-degree membership in the link ideal.
    Member {
        #[arg(long, allow_hyphen_values = true)]
        braid: String,
        #[arg(long)]
        strands: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        element: String,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
        #[arg(long, default_value = "bsl2")]
        instance: Instance,
    },
    /// Ad-invariant part of the quotient, at bounded degree.
    Charvar {
        #[arg(long, allow_hyphen_values = true)]
        braid: String,
        #[arg(long)]
        strands: Option<usize>,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
        #[arg(long, default_value = "bsl2")]
        instance: Instance,
    },
    /// Evaluate the t = 1 ideal on SL(2, C) matrices.
    Repcheck {
        #[arg(long, allow_hyphen_values = true)]
        braid: String,
        #[arg(long)]
        matrices: PathBuf,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Resolve all ambiguities of the rewrite system.
    Confluence {
        /// Bound on the inner exponents of the family overlaps.
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
    },
}

enum Failure {
    Usage(String),
    Compute(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_)
            | Error::FactorMismatch { .. }
            | Error::IndexOutOfRange { .. }
            | Error::StrandMismatch { .. }
            | Error::DegreeOverflow { .. }
            | Error::Invalid(_) => Failure::Usage(e.to_string()),
            Error::DivisionByZero | Error::Pole(_) => Failure::Compute(e.to_string()),
        }
    }
}

type Outcome = std::result::Result<bool, Failure>;

pub fn run<I: IntoIterator<Item = OsString>>(args: I) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    if let Some(n) = cli.threads {
        if n == 0 {
            eprintln!("error: --threads must be positive");
            return 2;
        }
        // a second initialization in the same process is harmless
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let mut out = std::io::stdout().lock();
    match dispatch(&cli, &mut out) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            2
        }
        Err(Failure::Compute(m)) => {
            eprintln!("computation error: {m}");
            3
        }
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Outcome {
    writeln!(out, "{text}").map_err(|e| Failure::Compute(e.to_string()))?;
    Ok(true)
}

fn braid(text: &str, strands: Option<usize>) -> Result<BraidWord, Failure> {
    Ok(BraidWord::parse(text, strands)?)
}

/// Inline expression, or a file holding text or tensor JSON.
fn element(arg: &str, h: &BraidedHopf) -> Result<TensorElement, Failure> {
    let text = match fs::read_to_string(arg) {
        Ok(s) => s,
        Err(_) => arg.to_string(),
    };
    if text.trim_start().starts_with('{') {
        let j: TensorJson = serde_json::from_str(&text).map_err(|e| Failure::Usage(e.to_string()))?;
        return Ok(TensorElement::from_json(&j)?);
    }
    Ok(parse_tensor(text.trim(), &h.ring)?)
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Outcome {
    match &cli.command {
        Command::Axioms { max_degree, instance, corrupted } => {
            let h = if *corrupted { BraidedHopf::corrupted() } else { BraidedHopf::of(*instance) };
            let report = axioms_check(&h, *max_degree);
            emit(out, &if cli.json { to_json(&report) } else { report.to_string() })?;
            Ok(report.all_pass())
        }
        Command::Normal { expr, instance } => {
            let h = BraidedHopf::of(*instance);
            let x = parse_tensor(expr, &h.ring)?;
            if cli.json {
                return emit(out, &to_json(&x.to_json()));
            }
            emit(out, &x.to_string())
        }
        Command::Rho { braid: b, element: e, instance } => {
            let h = BraidedHopf::of(*instance);
            let x = element(e, &h)?;
            let b = braid(b, Some(x.n()))?;
            let y = rho(&h, &b, &x)?;
            emit(out, &if cli.json { to_json(&y.to_json()) } else { y.to_string() })
        }
        Command::Ideal { braid: b, strands, t1, out: file, instance } => {
            let h = BraidedHopf::of(*instance);
            let b = braid(b, *strands)?;
            let mut ideal = ideal_generators(&h, &b);
            if *t1 {
                ideal = specialize_ideal(&ideal)?;
            }
            let text = if cli.json { to_json(&ideal.to_json()) } else { ideal.to_string() };
            match file {
                Some(p) => {
                    fs::write(p, format!("{text}\n")).map_err(|e| Failure::Usage(e.to_string()))?;
                    emit(out, &format!("{} nonzero generators written to {}", ideal.nonzero().count(), p.display()))
                }
                None => emit(out, &text),
            }
        }
        Command::Member { braid: b, strands, element: e, max_degree, instance } => {
            let h = BraidedHopf::of(*instance);
            let x = element(e, &h)?;
            let b = braid(b, Some(strands.unwrap_or(x.n())))?;
            let ideal: IdealPresentation = ideal_generators(&h, &b);
            let report = membership(&h, &x, &ideal, *max_degree)?;
            if cli.json {
                emit(out, &to_json(&report))?;
            } else {
                emit(
                    out,
                    &format!(
                        "{} (D = {}, filtered dim {}, {} products of rank {})",
                        if report.is_member() { "member" } else { "not a member" }, report.max_degree, report.basis_dim, report.rows, report.rank
                    ),
                )?;
            }
            Ok(report.is_member())
        }
        Command::Charvar { braid: b, strands, max_degree, instance } => {
            let h = BraidedHopf::of(*instance);
            let b = braid(b, *strands)?;
            let ideal = ideal_generators(&h, &b);
            let report = charvar_probe(&h, &ideal, *max_degree)?;
            if cli.json {
                return emit(out, &to_json(&report));
            }
            emit(out, &format!("D = {}: {} invariant classes", report.max_degree, report.invariants.len()))?;
            for x in &report.invariants {
                emit(out, &format!("  {x}"))?;
            }
            Ok(true)
        }
        Command::Repcheck { braid: b, matrices, tol } => {
            let text = fs::read_to_string(matrices).map_err(|e| Failure::Usage(format!("{}: {e}", matrices.display())))?;
            let m = MatrixTuple::from_json(&text)?;
            let b = braid(b, Some(m.len()))?;
            let h = BraidedHopf::classical();
            let report = rep_check(&h, &b, &m, *tol)?;
            if cli.json {
                emit(out, &to_json(&report))?;
            } else {
                emit(out, &format!("{} (max |g(M)| = {:.3e}, tol {:e})", if report.pass { "pass" } else { "fail" }, report.max_abs, report.tol))?;
            }
            Ok(report.pass)
        }
        Command::Confluence { max_degree } => {
            let h = BraidedHopf::bsl2();
            let report = h.ring.check_confluence(*max_degree);
            let failures: Vec<String> = report
                .failures
                .iter()
                .map(|f| format!("{}: {} vs {}", f.word.iter().map(|l| l.as_char()).collect::<String>(), f.left, f.right))
                .collect();
            if cli.json {
                emit(out, &to_json(&serde_json::json!({ "checked": report.checked, "failures": failures })))?;
            } else {
                emit(out, &format!("{} ambiguities resolved, {} failures", report.checked, failures.len()))?;
                for f in &failures {
                    emit(out, &format!("  {f}"))?;
                }
            }
            Ok(report.failures.is_empty())
        }
    }
}
