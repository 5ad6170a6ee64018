//! The `frameforge` command line.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::cube::{build_cube_matrix, verify_quasi_signature_pair, verify_signature_pair, CubePartition};
use crate::diffset::{complement_report, diffset_to_signature, verify_difference_set};
use crate::error::Error;
use crate::export::{frame_to_csv, matrix_to_csv, round_float, MatrixDocument, ParsedMatrix};
use crate::generators::{format_table, generate, generate_one, Algorithm, GeneratorHit};
use crate::group::GroupTable;
use crate::matrix::{border_standard, certify_two_eigenvalue, SeidelMatrix};
use crate::numeric::{frame_from_matrix, verify_frame, DEFAULT_TOL};
use crate::params::FrameParams;
use crate::search::{search, SearchSpec};
use crate::signature::{
    quasi_signature_matrix, signature_matrix, verify_quasi_signature_set, verify_signature_set, Rejection,
    SignatureKind, Verification,
};
use crate::subset::SubsetMask;

pub const THREADS_ENV: &str = "FRAMEFORGE_THREADS";

#[derive(Debug, Parser)]
#[command(name = "frameforge", version, about = "Equiangular tight frames from group subsets")]
struct Cli {
    /// Emit JSON from every subcommand.
    #[arg(long, global = true)]
    json: bool,
    /// Search worker count (default: FRAMEFORGE_THREADS, then all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Verify a signature set, or a quasi-signature set with --quasi.
    Verify {
        #[command(flatten)]
        target: SetArgs,
        #[arg(long)]
        quasi: bool,
    },
    /// Enumerate every set or pair of a kind.
    Search {
        #[arg(long)]
        group: String,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<i64>,
        /// Keep one representative per conjugation class.
        #[arg(long)]
        dedupe: bool,
        #[arg(long)]
        limit: Option<usize>,
        /// Search beyond the default order bound.
        #[arg(long)]
        force: bool,
    },
    /// Check an (n, k, lambda) difference set.
    Diffset {
        #[command(flatten)]
        target: SetArgs,
        /// Also build the signature set it determines.
        #[arg(long)]
        to_signature: bool,
    },
    /// Verify a cube-root signature pair, or quasi-pair with --quasi.
    CubeVerify {
        #[arg(long)]
        group: String,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        s: String,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        t: String,
        #[arg(long)]
        quasi: bool,
    },
    /// Tabulate the prime-field (2k, k) frames.
    Tables {
        #[arg(long, value_enum)]
        algorithm: AlgorithmArg,
        #[arg(long)]
        max_m: u64,
        #[arg(long)]
        emit_sets: bool,
        /// Print the bordered matrix for this m after the table.
        #[arg(long)]
        emit_matrix: Option<u64>,
    },
    /// Matrix operations.
    Matrix {
        #[command(subcommand)]
        action: MatrixAction,
    },
    /// Factor a certified matrix into frame vectors.
    Frame {
        /// Matrix file in JSON (or CSV with a .csv extension).
        #[arg(long)]
        from: PathBuf,
        /// Where to write the vectors; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
}

#[derive(Debug, Subcommand)]
enum MatrixAction {
    /// Write the Seidel matrix of a set or pair.
    Export {
        #[arg(long)]
        group: String,
        #[arg(long, value_enum, default_value = "signature")]
        kind: KindArg,
        /// S, for every kind.
        #[arg(long, alias = "s", default_value = "", allow_hyphen_values = true)]
        set: String,
        /// T, for cube kinds.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        t: String,
        #[arg(long, value_enum, default_value = "csv")]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct SetArgs {
    #[arg(long)]
    group: String,
    /// Comma-separated element labels.
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    set: String,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    Signature,
    Quasi,
    CubePair,
    CubeQuasi,
}

impl From<KindArg> for SignatureKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Signature => SignatureKind::Signature,
            KindArg::Quasi => SignatureKind::Quasi,
            KindArg::CubePair => SignatureKind::CubePair,
            KindArg::CubeQuasi => SignatureKind::CubeQuasi,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum AlgorithmArg {
    Thm59,
    Thm511,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

/// Failures that end a command: `Usage` exits 2, `Rejected` exits 1.
enum Failure {
    Usage(String),
    Rejected,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

/// Runs one command line; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = write!(out, "{e}");
            return 0;
        }
        Err(e) => {
            let text = e.to_string();
            let _ = writeln!(err, "{}", text.lines().next().unwrap_or("usage error"));
            return 2;
        }
    };
    match dispatch(&cli, out) {
        Ok(()) => 0,
        Err(Failure::Rejected) => 1,
        Err(Failure::Usage(reason)) => {
            let _ = writeln!(err, "error: {reason}");
            2
        }
    }
}

fn threads(cli: &Cli) -> Option<usize> {
    cli.threads.or_else(|| std::env::var(THREADS_ENV).ok()?.trim().parse().ok())
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Outcome {
    match &cli.command {
        Command::Verify { target, quasi } => cmd_verify(target, *quasi, out),
        Command::Search { group, kind, mu, dedupe, limit, force } => {
            let mut spec = SearchSpec::new(GroupTable::from_descriptor(group)?, (*kind).into());
            spec.mu_filter = *mu;
            spec.dedupe_conjugates = *dedupe;
            spec.limit = *limit;
            spec.force = *force;
            spec.threads = threads(cli);
            for hit in search(&spec)? {
                let mut v = verdict_fields(&spec.group, &Ok(hit.verdict));
                v.insert("key".into(), json!(hit.canonical_key));
                writeln!(out, "{}", Value::Object(v))?;
            }
            Ok(())
        }
        Command::Diffset { target, to_signature } => cmd_diffset(target, *to_signature, out),
        Command::CubeVerify { group, s, t, quasi } => {
            let g = GroupTable::from_descriptor(group)?;
            let (s, t) = (g.parse_subset(s)?, g.parse_subset(t)?);
            let verdict =
                if *quasi { verify_quasi_signature_pair(&g, &s, &t) } else { verify_signature_pair(&g, &s, &t) };
            let kind = if *quasi { SignatureKind::CubeQuasi } else { SignatureKind::CubePair };
            emit_verdict(&g, kind, &s, Some(&t), verdict, out)
        }
        Command::Tables { algorithm, max_m, emit_sets, emit_matrix } => {
            let algorithm = match algorithm {
                AlgorithmArg::Thm59 => Algorithm::Thm59,
                AlgorithmArg::Thm511 => Algorithm::Thm511,
            };
            cmd_tables(algorithm, *max_m, *emit_sets, *emit_matrix, cli.json, out)
        }
        Command::Matrix { action: MatrixAction::Export { group, kind, set, t, format, out: path } } => {
            let g = GroupTable::from_descriptor(group)?;
            let s = g.parse_subset(set)?;
            let t = g.parse_subset(t)?;
            let json_out = cli.json || matches!(format, FormatArg::Json);
            let text = export_matrix(&g, (*kind).into(), &s, &t, json_out)?;
            write_target(path.as_ref(), &text, out)
        }
        Command::Frame { from, out: path, tol } => cmd_frame(from, path.as_ref(), *tol, out),
    }
}

fn write_target(path: Option<&PathBuf>, text: &str, out: &mut dyn Write) -> Outcome {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
        None => Ok(out.write_all(text.as_bytes())?),
    }
}

fn params_fields(p: &FrameParams, map: &mut Map<String, Value>) {
    map.insert("n".into(), json!(p.n));
    map.insert("k".into(), json!(p.k));
    map.insert("mu".into(), json!(p.mu));
    map.insert("c".into(), json!(round_float(p.c_value)));
    map.insert("eigenvalues".into(), json!([round_float(p.lambda1), round_float(p.lambda2)]));
}

fn verdict_fields(g: &GroupTable, v: &Verification) -> Map<String, Value> {
    let mut map = Map::new();
    map.insert("group".into(), json!(g.name()));
    map.insert("valid".into(), json!(v.is_ok()));
    match v {
        Ok(v) => {
            map.insert("kind".into(), json!(v.kind.as_str()));
            map.insert("set".into(), json!(g.subset_labels(&v.set)));
            if let Some(t) = &v.t_set {
                map.insert("t".into(), json!(g.subset_labels(t)));
            }
            params_fields(&v.params, &mut map);
        }
        Err(r) => {
            map.insert("reason".into(), json!(r.to_string()));
            if let Some(w) = r.witness() {
                map.insert("witness".into(), json!(w));
            }
        }
    }
    map
}

fn emit_verdict(
    g: &GroupTable,
    kind: SignatureKind,
    s: &SubsetMask,
    t: Option<&SubsetMask>,
    verdict: Verification,
    out: &mut dyn Write,
) -> Outcome {
    if let Err(Rejection::Invalid(e)) = &verdict {
        return Err(Failure::Usage(e.to_string()));
    }
    let mut map = verdict_fields(g, &verdict);
    if verdict.is_err() {
        map.insert("kind".into(), json!(kind.as_str()));
        map.insert("set".into(), json!(g.subset_labels(s)));
        if let Some(t) = t {
            map.insert("t".into(), json!(g.subset_labels(t)));
        }
        map.insert("n".into(), json!(g.order() + kind.is_bordered() as usize));
    }
    writeln!(out, "{}", Value::Object(map))?;
    verdict.map(|_| ()).map_err(|_| Failure::Rejected)
}

fn cmd_verify(target: &SetArgs, quasi: bool, out: &mut dyn Write) -> Outcome {
    let g = GroupTable::from_descriptor(&target.group)?;
    let s = g.parse_subset(&target.set)?;
    let (kind, verdict) = if quasi {
        (SignatureKind::Quasi, verify_quasi_signature_set(&g, &s))
    } else {
        (SignatureKind::Signature, verify_signature_set(&g, &s))
    };
    emit_verdict(&g, kind, &s, None, verdict, out)
}

fn cmd_diffset(target: &SetArgs, to_signature: bool, out: &mut dyn Write) -> Outcome {
    let g = GroupTable::from_descriptor(&target.group)?;
    let d = g.parse_subset(&target.set)?;
    let mut map = Map::new();
    map.insert("group".into(), json!(g.name()));
    map.insert("set".into(), json!(g.subset_labels(&d)));
    let report = verify_difference_set(&g, &d);
    let mut ok = report.is_ok();
    match &report {
        Ok(r) => {
            map.insert("valid".into(), json!(true));
            map.insert("report".into(), json!(r));
            map.insert("complement".into(), json!(complement_report(r)));
        }
        Err(Rejection::Invalid(e)) => return Err(Failure::Usage(e.to_string())),
        Err(e) => {
            map.insert("valid".into(), json!(false));
            map.insert("reason".into(), json!(e.to_string()));
        }
    }
    if to_signature && ok {
        let v = diffset_to_signature(&g, &d);
        ok = v.is_ok();
        map.insert("signature".into(), Value::Object(verdict_fields(&g, &v)));
    }
    writeln!(out, "{}", Value::Object(map))?;
    if ok {
        Ok(())
    } else {
        Err(Failure::Rejected)
    }
}

fn hit_matrix_csv(hit: &GeneratorHit) -> Result<String, Failure> {
    let g = GroupTable::cyclic(hit.p as usize)?;
    let s = SubsetMask::from_indices(g.order(), hit.set.iter().map(|&r| r as usize))?;
    Ok(matrix_to_csv(quasi_signature_matrix(&g, &s)?.matrix()))
}

fn cmd_tables(
    algorithm: Algorithm,
    max_m: u64,
    emit_sets: bool,
    emit_matrix: Option<u64>,
    json_out: bool,
    out: &mut dyn Write,
) -> Outcome {
    let hits = generate(algorithm, max_m).map_err(|e| Failure::Usage(e.to_string()))?;
    let matrix = match emit_matrix {
        Some(m) => match generate_one(algorithm, m).map_err(|e| Failure::Usage(e.to_string()))? {
            Some(hit) => Some(hit_matrix_csv(&hit)?),
            None => return Err(Failure::Usage(format!("{} gives no frame for m = {m}", algorithm.as_str()))),
        },
        None => None,
    };
    if json_out {
        let rows: Vec<Value> = hits
            .iter()
            .map(|h| {
                let mut row = json!({"m": h.m, "p": h.p, "n": h.n, "k": h.k});
                if emit_sets {
                    row["set"] = json!(h.set);
                }
                row
            })
            .collect();
        let mut doc = json!({"algorithm": algorithm.as_str(), "rows": rows});
        if let Some(csv) = &matrix {
            let doc_m = MatrixDocument::from_csv(csv)?;
            doc["matrix"] = json!({"entries": doc_m.entries, "n": doc_m.n, "mu": 0});
        }
        writeln!(out, "{doc}")?;
    } else {
        let text = format_table(&hits, emit_sets);
        out.write_all(text.as_bytes())?;
        if let Some(csv) = matrix {
            writeln!(out)?;
            out.write_all(csv.as_bytes())?;
        }
    }
    if hits.is_empty() {
        Err(Failure::Rejected)
    } else {
        Ok(())
    }
}

fn export_matrix(
    g: &GroupTable,
    kind: SignatureKind,
    s: &SubsetMask,
    t: &SubsetMask,
    json_out: bool,
) -> Result<String, Failure> {
    let render = |csv: String, mu: Option<i64>| -> Result<String, Failure> {
        if json_out {
            let mut doc = MatrixDocument::from_csv(&csv)?;
            doc.mu = mu;
            Ok(doc.to_json() + "\n")
        } else {
            Ok(csv)
        }
    };
    if kind.is_cube() {
        let p = CubePartition::new(g, s, t)?;
        let q = SeidelMatrix::new(build_cube_matrix(g, &p)?)?;
        let q = if kind.is_bordered() { border_standard(&q) } else { q };
        let mu = certify_two_eigenvalue(&q).ok().map(|c| c.mu);
        render(matrix_to_csv(q.matrix()), mu)
    } else {
        let q = if kind.is_bordered() { quasi_signature_matrix(g, s)? } else { signature_matrix(g, s)? };
        let mu = certify_two_eigenvalue(&q).ok().map(|c| c.mu);
        render(matrix_to_csv(q.matrix()), mu)
    }
}

fn cmd_frame(from: &PathBuf, path: Option<&PathBuf>, tol: f64, out: &mut dyn Write) -> Outcome {
    let text = std::fs::read_to_string(from).map_err(|e| Failure::Usage(format!("{}: {e}", from.display())))?;
    let doc = if from.extension().is_some_and(|e| e == "csv") {
        MatrixDocument::from_csv(&text)?
    } else {
        MatrixDocument::from_json(&text)?
    };
    let factored = match doc.to_seidel()? {
        ParsedMatrix::Int(q) => frame_from_matrix(&q, tol),
        ParsedMatrix::Eisenstein(q) => frame_from_matrix(&q, tol),
    };
    let (frame, params) = match factored {
        Ok(x) => x,
        Err(e) => {
            writeln!(out, "{}", json!({"valid": false, "reason": e.to_string()}))?;
            return Err(Failure::Rejected);
        }
    };
    if let Some(mu) = doc.mu {
        if mu != params.mu {
            return Err(Failure::Usage(format!("file says mu = {mu} but the matrix certifies mu = {}", params.mu)));
        }
    }
    let report = verify_frame(&frame, &params, tol).map_err(|e| Failure::Usage(e.to_string()))?;
    let csv = frame_to_csv(&frame);
    let mut map = Map::new();
    params_fields(&params, &mut map);
    map.insert("valid".into(), json!(report.pass()));
    map.insert("tol".into(), json!(tol));
    for (key, dev, ok) in [
        ("tightness", report.tightness_deviation, report.tight),
        ("uniformity", report.uniformity_deviation, report.uniform),
        ("equiangularity", report.equiangularity_deviation, report.equiangular),
        ("parseval", report.parseval_deviation, report.parseval),
    ] {
        map.insert(key.into(), json!({"max_deviation": round_float(dev), "pass": ok}));
    }
    match path {
        Some(p) => std::fs::write(p, csv).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?,
        None => out.write_all(csv.as_bytes())?,
    }
    writeln!(out, "{}", Value::Object(map))?;
    if report.pass() {
        Ok(())
    } else {
        Err(Failure::Rejected)
    }
}
