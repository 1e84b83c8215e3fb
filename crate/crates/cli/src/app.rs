use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use linkforge::family::{
    certify_nil, generate_s, generate_t, load_q13, verify_graph, verify_order, FamilyError, Status,
    VerificationReport, VerifyOptions,
};
use linkforge::graph6::graph6_encode;
use linkforge::minor::{
    excludes_petersen_family_with, has_minor_with, petersen_family, MinorError, MinorWitness, SearchConfig,
};
use linkforge::Graph;
use serde::Serialize;

use crate::catalog::{build_catalog, check_catalog, write_atomic};
use crate::export::{dot_export, json_export, read_graph};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

const UNAVAILABLE: &str = "order must be 13 (with data) or ≥ 14";

#[derive(Parser)]
#[command(name = "linkforge", version, about = "Build and verify linklessly embeddable 4-connected graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    G6,
    Dot,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Emit T_N, or its saturated supergraph S_N.
    Build {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        saturated: bool,
        #[arg(long, value_enum, default_value = "g6")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Data file for order 13.
        #[arg(long)]
        q13: Option<PathBuf>,
    },
    /// Run the property suite on T_N or on a graph file.
    Verify {
        #[arg(long, required_unless_present = "input", conflicts_with = "input")]
        order: Option<usize>,
        #[arg(long = "in", value_name = "PATH")]
        input: Option<PathBuf>,
        #[arg(long)]
        direct_minor: bool,
        #[arg(long)]
        json: bool,
        /// Data file for order 13.
        #[arg(long)]
        q13: Option<PathBuf>,
        #[arg(long, default_value_t = SearchConfig::default().budget)]
        budget: u64,
    },
    /// Emit the seven Petersen-family graphs as graph6.
    Petersen {
        #[arg(long, value_name = "DIR")]
        out: Option<PathBuf>,
    },
    /// Minor containment query. Exit 0 when the target is absent.
    Minor {
        #[arg(long)]
        host: PathBuf,
        /// Target graph file; give `--petersen` instead to test the family.
        #[arg(long, num_args = 0..=1, value_name = "PATH")]
        target: Option<Option<PathBuf>>,
        #[arg(long)]
        petersen: bool,
        #[arg(long, default_value_t = SearchConfig::default().budget)]
        budget: u64,
        #[arg(long)]
        json: bool,
    },
    /// Emit the clique-sum certificate for T_N as JSON.
    Certify {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate and persist entries for orders 14..=MAX.
    Catalog {
        #[arg(long)]
        max: usize,
        #[arg(long, env = "FORGE_CATALOG_DIR")]
        dir: PathBuf,
        #[arg(long, default_value_t = 0)]
        direct_minor_up_to: usize,
        /// Re-verify an existing catalog instead of writing one.
        #[arg(long)]
        check: bool,
    },
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

/// Failure that ends a command with a given exit code.
struct Exit(i32, String);

type CmdResult = Result<i32, Exit>;

fn usage(msg: impl Into<String>) -> Exit {
    Exit(EXIT_USAGE, msg.into())
}

fn family_exit(e: FamilyError) -> Exit {
    match e {
        FamilyError::NotAvailable(_) => usage(UNAVAILABLE),
        FamilyError::ValidationFailed(gate) => Exit(EXIT_FAIL, format!("order-13 data rejected: {gate} gate failed")),
        FamilyError::Undecided(m) => Exit(EXIT_BUDGET, m),
        FamilyError::CertificateInvalid(f) => Exit(EXIT_FAIL, format!("certificate invalid: {f}")),
        other => usage(other.to_string()),
    }
}

fn emit(io: &mut Io, out: Option<&Path>, text: &str) -> Result<(), Exit> {
    match out {
        Some(path) => write_atomic(path, text.as_bytes()).map_err(|e| usage(e.to_string())),
        None => io.out.write_all(text.as_bytes()).map_err(|e| usage(e.to_string())),
    }
}

/// Parses `argv` (program name first), runs the command and returns the
/// exit code.
pub fn run_cli<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let mut io = Io { out, err };
    let result = match cli.command {
        Command::Build {
            order,
            saturated,
            format,
            out,
            q13,
        } => build(&mut io, order, saturated, format, out.as_deref(), q13.as_deref()),
        Command::Verify {
            order,
            input,
            direct_minor,
            json,
            q13,
            budget,
        } => verify(&mut io, order, input.as_deref(), direct_minor, json, q13.as_deref(), budget),
        Command::Petersen { out } => petersen(&mut io, out.as_deref()),
        Command::Minor {
            host,
            target,
            petersen,
            budget,
            json,
        } => minor(&mut io, &host, target, petersen, budget, json),
        Command::Certify { order, out } => certify(&mut io, order, out.as_deref()),
        Command::Catalog {
            max,
            dir,
            direct_minor_up_to,
            check,
        } => catalog(&mut io, max, &dir, direct_minor_up_to, check),
    };
    let _ = io.out.flush();
    match result {
        Ok(code) => code,
        Err(Exit(code, msg)) => {
            let _ = writeln!(io.err, "error: {msg}");
            code
        }
    }
}

fn build(io: &mut Io, n: usize, saturated: bool, format: Format, out: Option<&Path>, q13: Option<&Path>) -> CmdResult {
    let g = match (n, q13) {
        (13, Some(path)) if !saturated => load_q13(path).map_err(family_exit)?,
        (13, _) => return Err(usage(UNAVAILABLE)),
        _ if saturated => generate_s(n).map_err(|e| match e {
            FamilyError::NotAvailable(m) => usage(m),
            other => family_exit(other),
        })?,
        _ => generate_t(n).map_err(family_exit)?,
    };
    let text = match format {
        Format::G6 => graph6_encode(&g).map_err(|e| usage(e.to_string()))? + "\n",
        Format::Dot => dot_export(&g),
        Format::Json => json_export(&g) + "\n",
    };
    emit(io, out, &text)?;
    Ok(EXIT_PASS)
}

fn report_code(report: &VerificationReport) -> i32 {
    if !report.passed() {
        EXIT_FAIL
    } else if report.budget_exceeded {
        EXIT_BUDGET
    } else {
        EXIT_PASS
    }
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::Skipped => "SKIPPED",
    }
}

fn print_report(io: &mut Io, title: &str, report: &VerificationReport, json: bool) -> Result<(), Exit> {
    let text = if json {
        serde_json::to_string_pretty(report).expect("serializable") + "\n"
    } else {
        let mut s = format!("{title}\n");
        for c in &report.checks {
            let name = serde_json::to_value(c.property).expect("serializable");
            s += &format!(
                "  {:<18} {:<8} {}\n",
                name.as_str().unwrap_or_default(),
                status_word(c.status),
                c.detail
            );
        }
        let all_skipped = report.checks.iter().all(|c| c.status == Status::Skipped);
        let overall = match report_code(report) {
            EXIT_PASS if all_skipped => "SKIPPED",
            EXIT_PASS => "PASS",
            EXIT_BUDGET => "BUDGET EXCEEDED",
            _ => "FAIL",
        };
        s + &format!("result: {overall}\n")
    };
    io.out.write_all(text.as_bytes()).map_err(|e| usage(e.to_string()))
}

fn verify(
    io: &mut Io,
    order: Option<usize>,
    input: Option<&Path>,
    direct_minor: bool,
    json: bool,
    q13: Option<&Path>,
    budget: u64,
) -> CmdResult {
    let opts = VerifyOptions {
        direct_minor,
        config: SearchConfig { budget },
    };
    let (title, report) = match (order, input) {
        (Some(n), _) => (format!("T_{n}"), verify_order(n, opts, q13).map_err(family_exit)?),
        (None, Some(path)) => {
            let g = read_graph(path).map_err(|e| usage(e.to_string()))?;
            (path.display().to_string(), verify_graph(&g, None, opts))
        }
        (None, None) => return Err(usage("one of --order or --in is required")),
    };
    print_report(io, &title, &report, json)?;
    Ok(report_code(&report))
}

fn petersen(io: &mut Io, out: Option<&Path>) -> CmdResult {
    if let Some(dir) = out {
        std::fs::create_dir_all(dir).map_err(|e| usage(format!("{}: {e}", dir.display())))?;
    }
    for m in petersen_family() {
        let g6 = graph6_encode(&m.graph).map_err(|e| usage(e.to_string()))?;
        match out {
            Some(dir) => {
                let path = dir.join(format!("petersen-{}.g6", m.id));
                write_atomic(&path, format!("{g6}\n").as_bytes()).map_err(|e| usage(e.to_string()))?;
                writeln!(io.out, "{}", path.display()).map_err(|e| usage(e.to_string()))?;
            }
            None => writeln!(io.out, "{} {}", m.name(), g6).map_err(|e| usage(e.to_string()))?,
        }
    }
    Ok(EXIT_PASS)
}

#[derive(Serialize)]
struct MinorAnswer<'a> {
    host: &'a Graph,
    target: Option<&'a Graph>,
    member_id: Option<usize>,
    contained: bool,
    witness: Option<&'a MinorWitness>,
}

fn minor_exit(e: MinorError) -> Exit {
    match e {
        MinorError::BudgetExceeded { .. } => Exit(EXIT_BUDGET, e.to_string()),
        MinorError::TooLarge(_) => usage(e.to_string()),
    }
}

fn minor(
    io: &mut Io,
    host_path: &Path,
    target: Option<Option<PathBuf>>,
    petersen: bool,
    budget: u64,
    json: bool,
) -> CmdResult {
    let target_path = match (target, petersen) {
        (Some(Some(_)), true) => return Err(usage("give either a target file or --petersen, not both")),
        (Some(Some(p)), false) => Some(p),
        (_, true) => None,
        (_, false) => return Err(usage("--target PATH or --petersen is required")),
    };
    let host = read_graph(host_path).map_err(|e| usage(e.to_string()))?;
    let config = SearchConfig { budget };
    let (target, member_id, witness) = match target_path {
        Some(p) => {
            let t = read_graph(&p).map_err(|e| usage(e.to_string()))?;
            let w = has_minor_with(&host, &t, config).map_err(minor_exit)?;
            (Some(t), None, w)
        }
        None => {
            let r = excludes_petersen_family_with(&host, config).map_err(|e| match e.source {
                MinorError::BudgetExceeded { .. } => Exit(EXIT_BUDGET, e.to_string()),
                other => minor_exit(other),
            })?;
            match r.offending_member {
                Some(off) => {
                    let g = petersen_family()[off.member_id].graph.clone();
                    (Some(g), Some(off.member_id), Some(off.witness))
                }
                None => (None, None, None),
            }
        }
    };
    let contained = witness.is_some();
    let text = if json {
        let answer = MinorAnswer {
            host: &host,
            target: target.as_ref(),
            member_id,
            contained,
            witness: witness.as_ref(),
        };
        serde_json::to_string_pretty(&answer).expect("serializable") + "\n"
    } else {
        let what = match member_id {
            Some(id) => format!("Petersen-family member {}", petersen_family()[id].name()),
            None if petersen => "Petersen family".to_string(),
            None => "target".to_string(),
        };
        let mut s = if contained {
            format!("{what} is a minor of the host\n")
        } else {
            format!("{what}: not a minor of the host\n")
        };
        if let Some(w) = &witness {
            for (t, set) in &w.branch_sets {
                let members: Vec<&str> = set.iter().map(|v| v.as_str()).collect();
                s += &format!("  {t} <- {{{}}}\n", members.join(", "));
            }
        }
        s
    };
    io.out.write_all(text.as_bytes()).map_err(|e| usage(e.to_string()))?;
    Ok(if contained { EXIT_FAIL } else { EXIT_PASS })
}

fn certify(io: &mut Io, n: usize, out: Option<&Path>) -> CmdResult {
    let cert = certify_nil(n).map_err(|e| match e {
        FamilyError::NotAvailable(m) => usage(m),
        other => family_exit(other),
    })?;
    emit(io, out, &(serde_json::to_string_pretty(&cert).expect("serializable") + "\n"))?;
    Ok(EXIT_PASS)
}

fn catalog(io: &mut Io, max: usize, dir: &Path, direct_up_to: usize, check: bool) -> CmdResult {
    let line = |io: &mut Io, s: String| writeln!(io.out, "{s}").map_err(|e| usage(e.to_string()));
    if check {
        let checks = check_catalog(dir).map_err(|e| usage(e.to_string()))?;
        let mut all = true;
        for c in &checks {
            all &= c.ok;
            line(io, format!("{:<14} {:<5} {}", c.name, if c.ok { "PASS" } else { "FAIL" }, c.detail))?;
        }
        return Ok(if all { EXIT_PASS } else { EXIT_FAIL });
    }
    let summary = build_catalog(dir, max, direct_up_to).map_err(|e| match e {
        crate::catalog::CatalogError::Family(f) => family_exit(f),
        other => usage(other.to_string()),
    })?;
    for r in &summary.reports {
        let word = match report_code(r) {
            EXIT_PASS => "PASS",
            EXIT_BUDGET => "BUDGET EXCEEDED",
            _ => "FAIL",
        };
        line(io, format!("t{:<3} {word}", r.order))?;
    }
    line(io, format!("{} entries written to {}", summary.index.entries.len(), dir.display()))?;
    Ok(if !summary.passed() {
        EXIT_FAIL
    } else if summary.budget_exceeded() {
        EXIT_BUDGET
    } else {
        EXIT_PASS
    })
}
