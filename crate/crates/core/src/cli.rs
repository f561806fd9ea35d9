//! The `yangmul` command line.
//!
//! Exit codes: `0` success or certified, `2` usage, parse, I/O or guard
//! errors, `3` a failed mathematical certification (including an empty
//! search result).

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::hadamard::{hadamard_from_t, t_from_bs, TSeqQuad};
use crate::laurent::{lagrange_check, norm_sum};
use crate::sample;
use crate::search::{search_bs, search_bs_pruned, SearchError, SearchSpec};
use crate::seq::{bs_verify, bs_verify_inferred, BaseSeqQuad, Seq};
use crate::textio::{parse_first_quad, render_quad_text, render_quads_jsonl, render_quads_text};
use crate::yang::{certify_composition, factorization_sides};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CERT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "yangmul", version, about = "Base sequences, Yang multiplication and Hadamard matrices")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Enumerate BS(m, n) exhaustively.
    Search {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        /// Keep one canonical representative per symmetry orbit.
        #[arg(long)]
        symmetry_reduction: bool,
        #[arg(long)]
        limit: Option<usize>,
        /// Use plain enumeration instead of the pruned search.
        #[arg(long)]
        naive: bool,
        /// Write JSON lines instead of text records.
        #[arg(long)]
        json: bool,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Compose BS(n+1, n) and BS(m+1, m) into BS(m', m').
    Compose {
        bs1: PathBuf,
        bs2: PathBuf,
        #[arg(long, short)]
        output: Option<PathBuf>,
        /// Write a JSON certification report.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Print the psi polynomials of the result to stderr.
        #[arg(long)]
        show_poly: bool,
        #[arg(long)]
        json: bool,
    },
    /// Certify the first quadruple of a file as BS(m, n).
    Verify {
        path: PathBuf,
        /// Expected long length (default: length of `a`).
        #[arg(long)]
        m: Option<usize>,
        /// Expected short length (default: length of `c`).
        #[arg(long)]
        n: Option<usize>,
    },
    /// T-sequences of length 2s from BS(s, s).
    Tseq {
        path: PathBuf,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Hadamard matrix of order 8s from BS(s, s) (or 4t from T-sequences).
    Hadamard {
        path: PathBuf,
        /// Read T-sequences (four ternary lines) instead of base sequences.
        #[arg(long)]
        from_tseq: bool,
        #[arg(long)]
        json: bool,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Randomized exact checks of the Lagrange identity and the Q, R, S, T
    /// factorization.
    IdentityCheck {
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

/// A failure carrying its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn cert(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_CERT,
            message: message.into(),
        }
    }
}

type CmdResult = Result<i32, Failure>;

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Io<'_> {
    fn emit(&mut self, output: Option<&Path>, text: &str) -> Result<(), Failure> {
        match output {
            Some(path) => write_file(path, text),
            None => self
                .out
                .write_all(text.as_bytes())
                .map_err(|e| Failure::usage(format!("cannot write output: {e}"))),
        }
    }

    fn note(&mut self, text: &str) {
        let _ = writeln!(self.err, "{text}");
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))
}

fn read_quad(path: &Path) -> Result<[Seq; 4], Failure> {
    parse_first_quad(&read_file(path)?).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn certify_input(label: &str, path: &Path) -> Result<BaseSeqQuad, Failure> {
    let [a, b, c, d] = read_quad(path)?;
    bs_verify_inferred(a, b, c, d).map_err(|e| Failure::cert(format!("{label} ({}): {e}", path.display())))
}

/// Runs the CLI on `args` (including the program name), writing to the given
/// streams, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let mut io = Io { out, err };
    match dispatch(cli.command, &mut io) {
        Ok(code) => code,
        Err(failure) => {
            io.note(&format!("error: {}", failure.message));
            failure.code
        }
    }
}

fn dispatch(command: Command, io: &mut Io<'_>) -> CmdResult {
    match command {
        Command::Search {
            m,
            n,
            symmetry_reduction,
            limit,
            naive,
            json,
            output,
        } => cmd_search(io, m, n, symmetry_reduction, limit, naive, json, output.as_deref()),
        Command::Compose {
            bs1,
            bs2,
            output,
            report,
            show_poly,
            json,
        } => cmd_compose(io, &bs1, &bs2, output.as_deref(), report.as_deref(), show_poly, json),
        Command::Verify { path, m, n } => cmd_verify(io, &path, m, n),
        Command::Tseq { path, output } => cmd_tseq(io, &path, output.as_deref()),
        Command::Hadamard {
            path,
            from_tseq,
            json,
            output,
        } => cmd_hadamard(io, &path, from_tseq, json, output.as_deref()),
        Command::IdentityCheck { trials, seed, report } => cmd_identity_check(io, trials, seed, report.as_deref()),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_search(
    io: &mut Io<'_>,
    m: usize,
    n: usize,
    symmetry_reduction: bool,
    limit: Option<usize>,
    naive: bool,
    json: bool,
    output: Option<&Path>,
) -> CmdResult {
    let spec = SearchSpec::new(m, n)
        .with_symmetry_reduction(symmetry_reduction)
        .with_limit(limit);
    let found = if naive { search_bs(&spec) } else { search_bs_pruned(&spec) }.map_err(|e| match e {
        SearchError::Orientation { .. } | SearchError::GuardExceeded { .. } => Failure::usage(e.to_string()),
    })?;
    let refs = found.iter().map(BaseSeqQuad::refs);
    let text = if json { render_quads_jsonl(refs) } else { render_quads_text(refs) };
    io.emit(output, &text)?;
    io.note(&format!("found={} m={m} n={n}", found.len()));
    Ok(if found.is_empty() { EXIT_CERT } else { EXIT_OK })
}

fn cmd_compose(
    io: &mut Io<'_>,
    bs1_path: &Path,
    bs2_path: &Path,
    output: Option<&Path>,
    report_path: Option<&Path>,
    show_poly: bool,
    json: bool,
) -> CmdResult {
    let bs1 = certify_input("bs1", bs1_path)?;
    let bs2 = certify_input("bs2", bs2_path)?;
    let (out, report) = certify_composition(&bs1, &bs2).map_err(|e| Failure::cert(e.to_string()))?;
    let text = if json {
        render_quads_jsonl([out.refs()])
    } else {
        render_quad_text(out.refs())
    };
    io.emit(output, &text)?;
    if let Some(path) = report_path {
        let body = serde_json::to_string_pretty(&report).expect("report serializes") + "\n";
        write_file(path, &body)?;
    }
    if show_poly {
        for (name, s) in ["q", "r", "s", "t"].iter().zip(out.seqs()) {
            io.note(&format!("psi_{name}(x) = {}", s.psi()));
        }
        let total = norm_sum(&out.refs().map(Seq::psi)).map_err(|e| Failure::cert(e.to_string()))?;
        io.note(&format!("sum psi psi* = {total}"));
    }
    io.note(&format!(
        "certified BS({0},{0}) weight={1} checks={2}/{3}",
        out.m(),
        out.weight(),
        report.checks.iter().filter(|c| c.holds).count(),
        report.checks.len()
    ));
    Ok(if report.all_hold() { EXIT_OK } else { EXIT_CERT })
}

fn cmd_verify(io: &mut Io<'_>, path: &Path, m: Option<usize>, n: Option<usize>) -> CmdResult {
    let [a, b, c, d] = read_quad(path)?;
    let m = m.unwrap_or(a.len());
    let n = n.unwrap_or(c.len());
    let quad = bs_verify(a, b, c, d, m, n).map_err(|e| Failure::cert(format!("not in BS({m},{n}): {e}")))?;
    io.emit(
        None,
        &format!("certified BS({},{}) weight={}\n", quad.m(), quad.n(), quad.weight()),
    )?;
    Ok(EXIT_OK)
}

fn cmd_tseq(io: &mut Io<'_>, path: &Path, output: Option<&Path>) -> CmdResult {
    let quad = certify_input("input", path)?;
    let ts = t_from_bs(&quad).map_err(|e| Failure::cert(e.to_string()))?;
    io.emit(output, &ts.to_text())?;
    io.note(&format!("certified T-sequences length={}", ts.len()));
    Ok(EXIT_OK)
}

fn cmd_hadamard(io: &mut Io<'_>, path: &Path, from_tseq: bool, json: bool, output: Option<&Path>) -> CmdResult {
    let ts = if from_tseq {
        let [t1, t2, t3, t4] = read_quad(path)?;
        TSeqQuad::new(t1, t2, t3, t4).map_err(|e| Failure::cert(e.to_string()))?
    } else {
        let quad = certify_input("input", path)?;
        t_from_bs(&quad).map_err(|e| Failure::cert(e.to_string()))?
    };
    let h = hadamard_from_t(&ts).map_err(|e| Failure::cert(e.to_string()))?;
    let text = if json {
        serde_json::to_string_pretty(&h.to_record()).expect("record serializes") + "\n"
    } else {
        h.rows_text().iter().map(|r| format!("{r}\n")).collect()
    };
    io.emit(output, &text)?;
    io.note(&format!("certified Hadamard matrix order={}", h.order()));
    Ok(EXIT_OK)
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityTally {
    pub name: &'static str,
    pub passed: u64,
    pub trials: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityReport {
    pub seed: u64,
    pub trials: u64,
    pub generator: &'static str,
    pub results: Vec<IdentityTally>,
}

impl IdentityReport {
    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|r| r.passed == r.trials)
    }
}

/// Seeded randomized checks; deterministic for a given `(trials, seed)`.
pub fn identity_check(trials: u64, seed: u64) -> IdentityReport {
    let mut rng = sample::rng(seed);
    let mut tallies = [
        IdentityTally {
            name: "lagrange-1var",
            passed: 0,
            trials,
        },
        IdentityTally {
            name: "lagrange-2var",
            passed: 0,
            trials,
        },
        IdentityTally {
            name: "qrst-factorization",
            passed: 0,
            trials,
        },
    ];
    for _ in 0..trials {
        let p: [_; 8] = std::array::from_fn(|_| sample::poly1(&mut rng, 6, 5, 3));
        if lagrange_check(&p[0], &p[1], &p[2], &p[3], &p[4], &p[5], &p[6], &p[7]) == Ok(true) {
            tallies[0].passed += 1;
        }
        let p: [_; 8] = std::array::from_fn(|_| sample::poly2(&mut rng, 4, 3, 3));
        if lagrange_check(&p[0], &p[1], &p[2], &p[3], &p[4], &p[5], &p[6], &p[7]) == Ok(true) {
            tallies[1].passed += 1;
        }
        let oct = sample::pm1_octuple(&mut rng, 6);
        if matches!(factorization_sides(&oct), Ok((lhs, rhs)) if lhs == rhs) {
            tallies[2].passed += 1;
        }
    }
    IdentityReport {
        seed,
        trials,
        generator: "ChaCha8 seeded from u64",
        results: tallies.to_vec(),
    }
}

fn cmd_identity_check(io: &mut Io<'_>, trials: u64, seed: u64, report_path: Option<&Path>) -> CmdResult {
    let report = identity_check(trials, seed);
    let mut text = format!("seed={seed} trials={trials}\n");
    for r in &report.results {
        text.push_str(&format!("{}: {}/{} pass\n", r.name, r.passed, r.trials));
    }
    io.emit(None, &text)?;
    if let Some(path) = report_path {
        write_file(path, &(serde_json::to_string_pretty(&report).expect("report serializes") + "\n"))?;
    }
    Ok(if report.all_pass() { EXIT_OK } else { EXIT_CERT })
}
