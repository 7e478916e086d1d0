use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use sha2::{Digest, Sha256};

use leafpaths::conjecture::{
    conjecture_b_report, conjecture_c_min_exhaustive, conjecture_c_min_random,
    conjecture_c_value, theorem1_audit, AuditRow,
};
use leafpaths::constructions::{
    degree3_closure, perfect_binary, perfect_regular_extremal, sequence_to_tree,
    subdivided_star, theorem4_tree, trimmed_extremal, SequenceTreeLayout, DEFAULT_VERTEX_LIMIT,
};
use leafpaths::enumeration::{enumerate_13_trees, CanonicalCode};
use leafpaths::spectrum::{spectrum_report, witnessed, witnessed_in_range, DEFAULT_WORK_LIMIT};
use leafpaths::tree::{parse_tree, write_tree, RootedTree, Tree};
use leafpaths::witness::{
    erdos_szekeres, es_guarantee, lemma5_witness, lemma8_shift_set, theorem1_certificate,
    theorem2_witness, EsResult, PathCertificate, ShiftSetResult, Theorem2Result,
    WitnessCertificate,
};
use leafpaths::Error;

const DEFAULT_SEED: u64 = 1;
const DEFAULT_BUDGET: u64 = 1_000_000;

/// Leaf-to-leaf path-length spectra of trees: reports, lower-bound
/// certificates, extremal constructions, and conjecture audits. Trees are
/// edge-list files (vertex count line, then `u v` lines; '#' comments),
/// sequences one integer per line. Reports are JSON on standard output and
/// deterministic for a fixed configuration; `--workers` never changes
/// output bytes.
#[derive(Parser)]
#[command(name = "leafpaths", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Spectrum report for a tree, optionally range-restricted or per-leaf
    Spectrum(SpectrumArgs),
    /// Generate one of the built-in tree families
    #[command(subcommand)]
    Construct(ConstructCmd),
    /// Produce and verify a lower-bound certificate
    #[command(subcommand)]
    Witness(WitnessCmd),
    /// Extract a large shift set from a bounded sequence
    Lemma8(Lemma8Args),
    /// Extract a long monotone subsequence
    Es(EsArgs),
    /// Count 1-3 tree classes per order, optionally auditing the spectrum bound
    Enumerate(EnumerateArgs),
    /// Conjecture evidence: pair-sum minimization and spectrum coverage
    #[command(subcommand)]
    Conjecture(ConjectureCmd),
}

#[derive(Args)]
struct SpectrumArgs {
    /// Tree file
    file: PathBuf,
    /// Report the lengths witnessed by this leaf instead of the full spectrum
    #[arg(long)]
    witness: Option<usize>,
    /// Restrict reported lengths to [0, N]
    #[arg(long, value_name = "N")]
    max_len: Option<usize>,
    /// Cap on total BFS work (leaf count times vertex count)
    #[arg(long, default_value_t = DEFAULT_WORK_LIMIT)]
    work_limit: u64,
    #[arg(long, default_value_t = 1)]
    workers: usize,
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// Degree-regular tree with every leaf at depth d from the root
    Extremal {
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        d: u32,
        #[arg(long, default_value_t = DEFAULT_VERTEX_LIMIT)]
        limit: u64,
        /// Write the tree here (plus a .params.json sidecar) instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Extremal tree trimmed to an exact leaf count, same spectrum
    Trimmed {
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        leaves: u64,
        #[arg(long, default_value_t = DEFAULT_VERTEX_LIMIT)]
        limit: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Star with one edge subdivided out to n vertices
    Star {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Perfect binary tree on the given number of layers
    Binary {
        #[arg(long)]
        layers: u32,
        #[arg(long, default_value_t = DEFAULT_VERTEX_LIMIT)]
        limit: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Long-path 1-3 tree whose leaves each witness few lengths
    Theorem4 {
        #[arg(long)]
        len_bound: u64,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_VERTEX_LIMIT)]
        limit: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Embed a positive sequence into a decorated-spine 1-3 tree
    FromSeq {
        /// Sequence file, entries >= 1
        #[arg(long)]
        seq: PathBuf,
        /// Number of times the sequence repeats along the spine
        #[arg(long, default_value_t = 1)]
        mult: usize,
        #[arg(long, default_value_t = DEFAULT_VERTEX_LIMIT)]
        limit: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Degree-3-critical closure of a 1-3 tree (general graph output)
    Closure {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum WitnessCmd {
    /// Certificate for leaves marked at one depth, by recursive descent
    Lemma5 {
        file: PathBuf,
        /// Root the tree here
        #[arg(long)]
        root: usize,
        /// Mark every leaf at exactly this depth
        #[arg(long)]
        depth: usize,
        /// Degree bound for the certificate size claim; defaults to max(3, max degree)
        #[arg(long)]
        delta: Option<usize>,
    },
    /// Spectrum-size certificate by the inductive case analysis
    Theorem1 { file: PathBuf },
    /// Single-leaf many-lengths certificate along a maximum path
    Theorem2 {
        file: PathBuf,
        #[arg(long, value_name = "N")]
        len_bound: usize,
    },
}

#[derive(Args)]
struct Lemma8Args {
    /// Sequence file, entries in [0, m]
    #[arg(long)]
    seq: PathBuf,
    /// Value bound
    #[arg(long)]
    m: u64,
}

#[derive(Args)]
struct EsArgs {
    /// Sequence file
    #[arg(long)]
    seq: PathBuf,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Largest order; every even order up to it is covered
    #[arg(long)]
    n: usize,
    /// Verify the spectrum bound and a certificate for every class
    #[arg(long)]
    audit: bool,
    /// Write every representative as an edge-list file named by its code hash
    #[arg(long)]
    out_dir: Option<PathBuf>,
    /// csv (audit only) emits n,classes,min_spectrum_size,spectrum_lower_bound
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long, default_value_t = DEFAULT_WORK_LIMIT)]
    work_limit: u64,
    #[arg(long, default_value_t = 1)]
    workers: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum ConjectureCmd {
    /// Count the distinct pair sums a_i + a_j + (j - i) of a sequence
    CValue {
        #[arg(long)]
        seq: PathBuf,
        /// Validate entries against this bound
        #[arg(long)]
        cap: Option<u64>,
    },
    /// Minimize the pair-sum count over sequences with entries in [0, cap]
    CMin {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        cap: u64,
        #[arg(long, value_enum, default_value_t = ModeArg::Exhaustive)]
        mode: ModeArg,
        /// Exhaustive: largest sequence count scanned; random: sample count
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Random mode only
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Spectrum coverage of [0, N], with the length-bound witness when applicable
    BReport {
        file: PathBuf,
        #[arg(long, value_name = "N")]
        max_len: usize,
        #[arg(long, default_value_t = DEFAULT_WORK_LIMIT)]
        work_limit: u64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Exhaustive,
    Random,
}

struct CliFailure {
    code: u8,
    message: String,
}

impl From<Error> for CliFailure {
    fn from(e: Error) -> CliFailure {
        CliFailure { code: if e.is_internal() { 2 } else { 1 }, message: e.to_string() }
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> CliFailure {
    CliFailure { code: 1, message: format!("{}: {e}", path.display()) }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version land here too; only real usage errors fail.
            let code = u8::from(e.use_stderr());
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

/// Writes to stdout, treating a closed pipe (reader went away) as a normal
/// quiet exit.
fn emit(text: &str) -> Result<(), CliFailure> {
    let mut out = io::stdout();
    match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        Ok(()) => Ok(()),
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => std::process::exit(0),
        Err(e) => Err(CliFailure { code: 1, message: format!("stdout: {e}") }),
    }
}

/// Every JSON report ends with a paper_ref field naming the result it
/// exercises.
fn print_report<T: Serialize>(body: T, paper_ref: &'static str) -> Result<(), CliFailure> {
    #[derive(Serialize)]
    struct Report<T: Serialize> {
        #[serde(flatten)]
        body: T,
        paper_ref: &'static str,
    }
    let doc = serde_json::to_string_pretty(&Report { body, paper_ref })
        .map_err(|e| CliFailure { code: 2, message: format!("report serialization: {e}") })?;
    emit(&format!("{doc}\n"))
}

fn load_tree(path: &Path) -> Result<Tree, CliFailure> {
    let text = fs::read_to_string(path).map_err(|e| io_failure(path, e))?;
    Ok(parse_tree(&text)?)
}

/// One integer per line; '#' starts a comment, blank lines are skipped.
fn load_sequence(path: &Path) -> Result<Vec<i64>, CliFailure> {
    let text = fs::read_to_string(path).map_err(|e| io_failure(path, e))?;
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let value: i64 = line.parse().map_err(|_| CliFailure {
            code: 1,
            message: format!(
                "{}: line {}: expected an integer, got {line:?}",
                path.display(),
                idx + 1
            ),
        })?;
        out.push(value);
    }
    Ok(out)
}

fn load_unsigned_sequence(path: &Path) -> Result<Vec<u64>, CliFailure> {
    let raw = load_sequence(path)?;
    raw.into_iter()
        .map(|v| {
            u64::try_from(v).map_err(|_| CliFailure {
                code: 1,
                message: format!("{}: negative entry {v} not allowed here", path.display()),
            })
        })
        .collect()
}

fn run(command: Command) -> Result<(), CliFailure> {
    match command {
        Command::Spectrum(args) => run_spectrum(args),
        Command::Construct(cmd) => run_construct(cmd),
        Command::Witness(cmd) => run_witness(cmd),
        Command::Lemma8(args) => run_lemma8(args),
        Command::Es(args) => run_es(args),
        Command::Enumerate(args) => run_enumerate(args),
        Command::Conjecture(cmd) => run_conjecture(cmd),
    }
}

fn run_spectrum(args: SpectrumArgs) -> Result<(), CliFailure> {
    let t = load_tree(&args.file)?;
    if let Some(v) = args.witness {
        let set = match args.max_len {
            Some(bound) => witnessed_in_range(&t, v, bound)?,
            None => witnessed(&t, v)?,
        };
        #[derive(Serialize)]
        struct WitnessedReport {
            n: usize,
            leaf: usize,
            #[serde(skip_serializing_if = "Option::is_none")]
            max_len: Option<usize>,
            witnessed: leafpaths::spectrum::LengthSet,
            witnessed_size: usize,
        }
        return print_report(
            WitnessedReport {
                n: t.n(),
                leaf: v,
                max_len: args.max_len,
                witnessed_size: set.len(),
                witnessed: set,
            },
            "Theorem 2",
        );
    }
    let report = spectrum_report(&t, args.max_len, args.work_limit, args.workers)?;
    let paper_ref = if args.max_len.is_some() { "Conjecture B" } else { "Theorem 1" };
    print_report(report, paper_ref)
}

fn sidecar_path(out: &Path) -> PathBuf {
    let mut name = out.as_os_str().to_os_string();
    name.push(".params.json");
    PathBuf::from(name)
}

/// Stdout gets either the raw edge-list document or, when writing to a
/// file, a JSON note of what was written plus the construction parameters
/// (which also land in the sidecar).
fn emit_construct<P: Serialize>(
    document: String,
    params: P,
    paper_ref: &'static str,
    out: Option<PathBuf>,
) -> Result<(), CliFailure> {
    match out {
        None => emit(&document),
        Some(path) => {
            fs::write(&path, &document).map_err(|e| io_failure(&path, e))?;
            let sidecar = sidecar_path(&path);
            let params_doc = serde_json::to_string_pretty(&params)
                .map_err(|e| CliFailure { code: 2, message: format!("sidecar serialization: {e}") })?;
            fs::write(&sidecar, format!("{params_doc}\n")).map_err(|e| io_failure(&sidecar, e))?;
            #[derive(Serialize)]
            struct Written<P: Serialize> {
                out: String,
                sidecar: String,
                #[serde(flatten)]
                params: P,
            }
            print_report(
                Written {
                    out: path.display().to_string(),
                    sidecar: sidecar.display().to_string(),
                    params,
                },
                paper_ref,
            )
        }
    }
}

fn run_construct(cmd: ConstructCmd) -> Result<(), CliFailure> {
    match cmd {
        ConstructCmd::Extremal { delta, d, limit, out } => {
            let t = perfect_regular_extremal(delta, d, limit)?;
            #[derive(Serialize)]
            struct P {
                delta: usize,
                d: u32,
                n: usize,
                leaf_count: usize,
            }
            let params = P { delta, d, n: t.n(), leaf_count: t.leaf_count() };
            emit_construct(write_tree(&t), params, "Theorem 1", out)
        }
        ConstructCmd::Trimmed { delta, d, leaves, limit, out } => {
            let t = trimmed_extremal(delta, d, leaves, limit)?;
            #[derive(Serialize)]
            struct P {
                delta: usize,
                d: u32,
                leaves: u64,
                n: usize,
            }
            let params = P { delta, d, leaves, n: t.n() };
            emit_construct(write_tree(&t), params, "Theorem 1", out)
        }
        ConstructCmd::Star { n, delta, out } => {
            let t = subdivided_star(n, delta)?;
            #[derive(Serialize)]
            struct P {
                n: usize,
                delta: usize,
            }
            emit_construct(write_tree(&t), P { n, delta }, "Theorem 1", out)
        }
        ConstructCmd::Binary { layers, limit, out } => {
            let rt = perfect_binary(layers, limit)?;
            #[derive(Serialize)]
            struct P {
                layers: u32,
                n: usize,
                root: usize,
            }
            let params = P { layers, n: rt.tree.n(), root: rt.root };
            emit_construct(write_tree(&rt.tree), params, "Lemma 5", out)
        }
        ConstructCmd::Theorem4 { len_bound, n, limit, out } => {
            let (t, params) = theorem4_tree(len_bound, n, limit)?;
            emit_construct(write_tree(&t), params, "Theorem 4", out)
        }
        ConstructCmd::FromSeq { seq, mult, limit, out } => {
            let values = load_unsigned_sequence(&seq)?;
            let (t, layout) = sequence_to_tree(&values, mult, limit)?;
            #[derive(Serialize)]
            struct P {
                seq: Vec<u64>,
                mult: usize,
                n: usize,
                #[serde(flatten)]
                layout: SequenceTreeLayout,
            }
            let params = P { seq: values, mult, n: t.n(), layout };
            emit_construct(write_tree(&t), params, "Proposition 9", out)
        }
        ConstructCmd::Closure { file, out } => {
            let t = load_tree(&file)?;
            let g = degree3_closure(&t)?;
            #[derive(Serialize)]
            struct P {
                input_n: usize,
                n: usize,
                edge_count: usize,
            }
            let params = P { input_n: t.n(), n: g.n, edge_count: g.edges.len() };
            emit_construct(g.to_document(), params, "Conjecture A", out)
        }
    }
}

fn run_witness(cmd: WitnessCmd) -> Result<(), CliFailure> {
    match cmd {
        WitnessCmd::Lemma5 { file, root, depth, delta } => {
            let t = load_tree(&file)?;
            let delta = delta.unwrap_or_else(|| t.max_degree().max(3));
            let rt = RootedTree::new(t, root)?;
            let marked = rt.leaves_at_depth(depth);
            let cert = lemma5_witness(&rt, &marked, delta)?;
            #[derive(Serialize)]
            struct Lemma5Report {
                root: usize,
                depth: usize,
                delta: usize,
                marked_count: usize,
                size: usize,
                #[serde(flatten)]
                certificate: WitnessCertificate,
            }
            print_report(
                Lemma5Report {
                    root,
                    depth,
                    delta,
                    marked_count: marked.len(),
                    size: cert.size(),
                    certificate: cert,
                },
                "Lemma 5",
            )
        }
        WitnessCmd::Theorem1 { file } => {
            let t = load_tree(&file)?;
            let cert = theorem1_certificate(&t)?;
            #[derive(Serialize)]
            struct Theorem1Report {
                n: usize,
                leaf_count: usize,
                max_degree: usize,
                size: usize,
                #[serde(flatten)]
                certificate: PathCertificate,
            }
            print_report(
                Theorem1Report {
                    n: t.n(),
                    leaf_count: t.leaf_count(),
                    max_degree: t.max_degree(),
                    size: cert.size(),
                    certificate: cert,
                },
                "Theorem 1",
            )
        }
        WitnessCmd::Theorem2 { file, len_bound } => {
            let t = load_tree(&file)?;
            let result = theorem2_witness(&t, len_bound)?;
            #[derive(Serialize)]
            struct Theorem2Report {
                n: usize,
                size: usize,
                #[serde(flatten)]
                result: Theorem2Result,
            }
            print_report(
                Theorem2Report { n: t.n(), size: result.certificate.size(), result },
                "Theorem 2",
            )
        }
    }
}

fn run_lemma8(args: Lemma8Args) -> Result<(), CliFailure> {
    let a = load_sequence(&args.seq)?;
    let result = lemma8_shift_set(&a, args.m)?;
    #[derive(Serialize)]
    struct Lemma8Report {
        n: usize,
        m: u64,
        size: usize,
        #[serde(flatten)]
        result: ShiftSetResult,
    }
    print_report(
        Lemma8Report { n: a.len(), m: args.m, size: result.values.len(), result },
        "Lemma 8",
    )
}

fn run_es(args: EsArgs) -> Result<(), CliFailure> {
    let a = load_sequence(&args.seq)?;
    let result = erdos_szekeres(&a)?;
    #[derive(Serialize)]
    struct EsReport {
        n: usize,
        guarantee: usize,
        length: usize,
        #[serde(flatten)]
        result: EsResult,
    }
    print_report(
        EsReport {
            n: a.len(),
            guarantee: es_guarantee(a.len()),
            length: result.indices.len(),
            result,
        },
        "Theorem 7",
    )
}

fn code_filename(code: &CanonicalCode) -> String {
    let digest = Sha256::digest(code.0.as_bytes());
    let mut name = String::with_capacity(21);
    for byte in &digest[..8] {
        name.push_str(&format!("{byte:02x}"));
    }
    name.push_str(".tree");
    name
}

fn write_representatives(dir: &Path, max_n: usize) -> Result<usize, CliFailure> {
    fs::create_dir_all(dir).map_err(|e| io_failure(dir, e))?;
    let mut written = 0;
    for n in (2..=max_n).step_by(2) {
        for (code, t) in enumerate_13_trees(n)? {
            let path = dir.join(code_filename(&code));
            fs::write(&path, write_tree(&t)).map_err(|e| io_failure(&path, e))?;
            written += 1;
        }
    }
    Ok(written)
}

fn run_enumerate(args: EnumerateArgs) -> Result<(), CliFailure> {
    if args.n < 2 {
        return Err(CliFailure { code: 1, message: "enumerate needs --n at least 2".into() });
    }
    let files_written = match &args.out_dir {
        Some(dir) => Some(write_representatives(dir, args.n)?),
        None => None,
    };
    if args.audit {
        let rows = theorem1_audit(args.n, args.work_limit, args.workers)?;
        if args.format == Format::Csv {
            let mut csv = String::from("n,classes,min_spectrum_size,spectrum_lower_bound\n");
            for row in &rows {
                csv.push_str(&format!(
                    "{},{},{},{}\n",
                    row.n, row.classes, row.min_spectrum_size, row.spectrum_lower_bound
                ));
            }
            return emit(&csv);
        }
        #[derive(Serialize)]
        struct AuditReport {
            max_n: usize,
            #[serde(skip_serializing_if = "Option::is_none")]
            files_written: Option<usize>,
            rows: Vec<AuditRow>,
        }
        return print_report(AuditReport { max_n: args.n, files_written, rows }, "Conjecture A");
    }
    if args.format == Format::Csv {
        return Err(CliFailure {
            code: 1,
            message: "csv output is only defined for --audit".into(),
        });
    }
    #[derive(Serialize)]
    struct ClassCount {
        n: usize,
        classes: usize,
    }
    let mut rows = Vec::new();
    for n in (2..=args.n).step_by(2) {
        rows.push(ClassCount { n, classes: enumerate_13_trees(n)?.len() });
    }
    #[derive(Serialize)]
    struct EnumerateReport {
        max_n: usize,
        #[serde(skip_serializing_if = "Option::is_none")]
        files_written: Option<usize>,
        rows: Vec<ClassCount>,
    }
    print_report(EnumerateReport { max_n: args.n, files_written, rows }, "Conjecture A")
}

fn run_conjecture(cmd: ConjectureCmd) -> Result<(), CliFailure> {
    match cmd {
        ConjectureCmd::CValue { seq, cap } => {
            let a = load_unsigned_sequence(&seq)?;
            if let Some(cap) = cap {
                if let Some(&bad) = a.iter().find(|&&v| v > cap) {
                    return Err(CliFailure {
                        code: 1,
                        message: format!("entry {bad} exceeds --cap {cap}"),
                    });
                }
            }
            let value = conjecture_c_value(&a)?;
            #[derive(Serialize)]
            struct CValueReport {
                n: usize,
                #[serde(skip_serializing_if = "Option::is_none")]
                cap: Option<u64>,
                value: usize,
            }
            print_report(CValueReport { n: a.len(), cap, value }, "Conjecture C")
        }
        ConjectureCmd::CMin { n, cap, mode, budget, seed, workers } => {
            let result = match mode {
                ModeArg::Exhaustive => conjecture_c_min_exhaustive(n, cap, budget, workers)?,
                ModeArg::Random => conjecture_c_min_random(n, cap, budget, seed, workers)?,
            };
            print_report(result, "Conjecture C")
        }
        ConjectureCmd::BReport { file, max_len, work_limit, workers } => {
            let t = load_tree(&file)?;
            let report = conjecture_b_report(&t, max_len, work_limit, workers)?;
            print_report(report, "Conjecture B")
        }
    }
}
