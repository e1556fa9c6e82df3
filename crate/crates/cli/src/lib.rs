//! The `regflow` command-line tool.
//!
//! Exit status is 0 for an affirmative answer, 1 for a negative decision and
//! 2 for any error. Errors are a single `ERROR <code>: <message>` line on
//! standard error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::num::NonZeroUsize;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use regflow::gram::{build_x, classify, tu_signing, GWitness, OneBased};
use regflow::io::{format_gram, format_matrix, format_matroid, parse_gram, parse_matrix, parse_vector, read_matroid};
use regflow::lattice::{check_consistent, decompose_flow, Simplicity};
use regflow::linalg::{is_totally_unimodular, is_weakly_unimodular, Unimodularity};
use regflow::reconstruct::{
    cut_lattices_isometric, flow_lattices_isometric, mixed_isometric, reconstruct_from_basis, reconstruct_matroid,
    Reconstruction,
};
use regflow::{Bounds, FlowLattice, FlowVector, GramMatrix, GroundSubset, IntMatrix, RegularMatroid};

#[derive(Debug, Parser)]
#[command(name = "regflow", version, about = "Flow and cut lattices of regular matroids")]
struct Cli {
    /// Stable machine-readable output.
    #[arg(long, global = true)]
    porcelain: bool,

    #[command(flatten)]
    bounds: BoundArgs,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct BoundArgs {
    /// Largest min(rows, cols) for unimodularity checks [default: 10]
    #[arg(long, global = true, env = "REGFLOW_TU_ORDER")]
    tu_order: Option<NonZeroUsize>,
    /// Largest ground set for circuit enumeration [default: 20]
    #[arg(long, global = true, env = "REGFLOW_CIRCUIT_GROUND")]
    circuit_ground: Option<NonZeroUsize>,
    /// Largest ground set for isomorphism search [default: 12]
    #[arg(long, global = true, env = "REGFLOW_ISO_GROUND")]
    iso_ground: Option<NonZeroUsize>,
    /// Largest Gram order for subset tables [default: 20]
    #[arg(long, global = true, env = "REGFLOW_GRAM_ORDER")]
    gram_order: Option<NonZeroUsize>,
}

impl BoundArgs {
    fn bounds(&self) -> Bounds {
        let d = Bounds::DEFAULT;
        let pick = |v: Option<NonZeroUsize>, default| v.map_or(default, NonZeroUsize::get);
        Bounds {
            tu_order: pick(self.tu_order, d.tu_order),
            circuit_ground: pick(self.circuit_ground, d.circuit_ground),
            iso_ground: pick(self.iso_ground, d.iso_ground),
            gram_order: pick(self.gram_order, d.gram_order),
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Total and weak unimodularity of a matrix, with a failing minor.
    TuCheck { file: PathBuf },
    /// Circuits of a matroid.
    Circuits { file: PathBuf },
    /// Loops and co-loops of a matroid.
    Coloops { file: PathBuf },
    /// Fundamental basis of the flow lattice.
    Flows(LatticeArgs),
    /// Basis of the cut lattice.
    Cuts(LatticeArgs),
    /// Consistent decomposition of a flow into simple flows.
    Decompose {
        file: PathBuf,
        /// A vector file, or the coordinates inline ("1,-1,0").
        vector: String,
    },
    /// Metric simplicity of a flow.
    Simple { file: PathBuf, vector: String },
    /// g-nonnegativity and g-positivity of a Gram matrix, with f and g tables.
    Gtest { file: PathBuf },
    /// The 0/1 matrix X(A) of a g-nonnegative Gram matrix.
    Xmatrix { file: PathBuf },
    /// A totally unimodular signing of a 0/1 matrix.
    Signing { file: PathBuf },
    /// Reconstruct the co-loop-free minor from a Gram matrix, matroid or basis.
    Reconstruct { file: PathBuf },
    /// Decide isometry of flow or cut lattices of two matroids.
    Isometric {
        left: PathBuf,
        right: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Flow)]
        mode: Mode,
    },
}

#[derive(Debug, Args)]
struct LatticeArgs {
    file: PathBuf,
    /// Base as comma-separated labels or 1-based positions; the first base by default.
    #[arg(long)]
    base: Option<String>,
    /// Print the Gram matrix instead of the basis (porcelain only).
    #[arg(long)]
    gram: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    /// Flow lattice against flow lattice.
    Flow,
    /// Cut lattice against cut lattice.
    Cut,
    /// Flow lattice of the first against cut lattice of the second.
    Mixed,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Lib(#[from] regflow::Error),
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
}

impl CliError {
    fn code(&self) -> &'static str {
        match self {
            CliError::Lib(e) => e.code(),
            CliError::Usage(_) => "E-USAGE",
            CliError::Read { .. } => "E-IO",
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Affirmative or negative answer of a command.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Answer {
    Yes,
    No,
}

impl From<bool> for Answer {
    fn from(b: bool) -> Self {
        if b {
            Answer::Yes
        } else {
            Answer::No
        }
    }
}

/// Runs the tool on `args` (including the program name) and returns the
/// exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{}", e.render());
                return 0;
            }
            let text = e.render().to_string();
            let first = text.lines().next().unwrap_or("").trim_start_matches("error: ");
            let _ = writeln!(err, "ERROR E-USAGE: {first}");
            return 2;
        }
    };
    let mut buf = String::new();
    let result = dispatch(&cli, &mut buf);
    match result {
        Ok(answer) => match out.write_all(buf.as_bytes()) {
            Ok(()) => match answer {
                Answer::Yes => 0,
                Answer::No => 1,
            },
            Err(e) => {
                let _ = writeln!(err, "ERROR E-IO: writing output: {e}");
                2
            }
        },
        Err(e) => {
            let _ = writeln!(err, "ERROR {}: {e}", e.code());
            2
        }
    }
}

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })
}

fn load_matroid(path: &Path, bounds: Bounds) -> CliResult<RegularMatroid> {
    Ok(read_matroid(path, &read(path)?, bounds)?)
}

/// A vector file if `arg` names one, else inline coordinates.
fn load_vector(arg: &str) -> CliResult<FlowVector> {
    let path = Path::new(arg);
    let text = if path.is_file() { read(path)? } else { arg.replace(',', " ") };
    Ok(parse_vector(&text)?)
}

fn resolve_base(m: &RegularMatroid, list: Option<&str>) -> CliResult<GroundSubset> {
    let Some(list) = list else {
        return Ok(m.first_base());
    };
    let mut idx = Vec::new();
    for tok in list.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let i = match m.index_of(tok) {
            Some(i) => i,
            None => match tok.parse::<usize>() {
                Ok(k) if (1..=m.len()).contains(&k) => k - 1,
                _ => return Err(CliError::Usage(format!("{tok:?} is neither a label nor a position 1..{}", m.len()))),
            },
        };
        idx.push(i);
    }
    Ok(GroundSubset::new(idx, m.len())?)
}

fn one_based(v: &[usize]) -> String {
    v.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(",")
}

fn labels(m: &RegularMatroid, s: &GroundSubset) -> Vec<String> {
    s.labels(m.ground()).into_iter().map(str::to_owned).collect()
}

/// `RxC a,b;c,d`, a single-line matrix for key=value output.
fn inline(m: &IntMatrix) -> String {
    let rows: Vec<String> = m
        .to_rows()
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
        .collect();
    format!("{}x{} {}", m.rows(), m.cols(), rows.join(";"))
}

fn dispatch(cli: &Cli, o: &mut String) -> CliResult<Answer> {
    let bounds = cli.bounds.bounds();
    let p = cli.porcelain;
    match &cli.command {
        Command::TuCheck { file } => tu_check(&parse_matrix(&read(file)?)?, bounds, p, o),
        Command::Circuits { file } => {
            let m = load_matroid(file, bounds)?;
            let circuits = m.circuits(bounds)?;
            if !p {
                writeln!(o, "{} circuits", circuits.len()).ok();
            }
            for c in &circuits {
                let ls = labels(&m, c);
                if p {
                    writeln!(o, "{}", ls.join(" ")).ok();
                } else {
                    writeln!(o, "{{{}}}", ls.join(", ")).ok();
                }
            }
            Ok(Answer::Yes)
        }
        Command::Coloops { file } => {
            let m = load_matroid(file, bounds)?;
            let (loops, coloops) = m.loops_and_coloops();
            let (l, c) = (labels(&m, &loops), labels(&m, &coloops));
            if p {
                writeln!(o, "loops={}\ncoloops={}", l.join(","), c.join(",")).ok();
            } else {
                writeln!(o, "loops: {}", if l.is_empty() { "none".into() } else { l.join(" ") }).ok();
                writeln!(o, "co-loops: {}", if c.is_empty() { "none".into() } else { c.join(" ") }).ok();
            }
            Ok(Answer::Yes)
        }
        Command::Flows(args) | Command::Cuts(args) => {
            let flows = matches!(cli.command, Command::Flows(_));
            let m = load_matroid(&args.file, bounds)?;
            let base = resolve_base(&m, args.base.as_deref())?;
            let lat = if flows { FlowLattice::fundamental(&m, &base)? } else { FlowLattice::cuts(&m, &base)? };
            let base_labels = labels(&m, &base).join(",");
            if p {
                writeln!(o, "# base={base_labels}").ok();
                if args.gram {
                    o.push_str(&format_gram(lat.gram()));
                } else {
                    o.push_str(&format_matrix(lat.basis()));
                }
            } else {
                let what = if flows { "flow" } else { "cut" };
                writeln!(o, "base: {}", labels(&m, &base).join(" ")).ok();
                writeln!(o, "{what} lattice of rank {}, basis vectors as columns:", lat.rank()).ok();
                let labelled = lat.basis().clone().with_row_labels(m.ground().to_vec())?;
                write!(o, "{labelled}").ok();
                writeln!(o, "gram:\n{}", lat.gram().matrix()).ok();
            }
            Ok(Answer::Yes)
        }
        Command::Decompose { file, vector } => {
            let m = load_matroid(file, bounds)?;
            let beta = load_vector(vector)?;
            let parts = decompose_flow(&m, &beta)?;
            check_consistent(&m, &beta, &parts)?;
            if p {
                for a in &parts {
                    writeln!(o, "{a}").ok();
                }
            } else {
                writeln!(o, "flow: {beta}").ok();
                writeln!(o, "{} simple flows:", parts.len()).ok();
                for a in &parts {
                    writeln!(o, "  {a}").ok();
                }
                writeln!(o, "sum OK").ok();
            }
            Ok(Answer::Yes)
        }
        Command::Simple { file, vector } => {
            let m = load_matroid(file, bounds)?;
            let alpha = load_vector(vector)?;
            let lat = FlowLattice::fundamental(&m, &m.first_base())?;
            match lat.is_simple_metric(&alpha)? {
                Simplicity::Simple => {
                    writeln!(o, "{}", if p { "simple=yes" } else { "SIMPLE" }).ok();
                    Ok(Answer::Yes)
                }
                Simplicity::Split { beta, gamma, inner } => {
                    if p {
                        writeln!(o, "simple=no\nbeta={beta}\ngamma={gamma}\ninner={inner}").ok();
                    } else {
                        writeln!(o, "NOT-SIMPLE\nbeta:  {beta}\ngamma: {gamma}\n<beta, gamma> = {inner}").ok();
                    }
                    Ok(Answer::No)
                }
            }
        }
        Command::Gtest { file } => gtest(&read(file)?, bounds, p, o),
        Command::Xmatrix { file } => {
            let class = classify(&parse_gram(&read(file)?)?, bounds)?;
            if !class.nonnegative {
                write_witness(&class.witness, class.label(), p, o);
                return Ok(Answer::No);
            }
            let x = build_x(&class)?;
            if p {
                writeln!(o, "# {}", class.label()).ok();
                o.push_str(&format_matrix(&x));
            } else {
                writeln!(o, "{}\nX ({} rows):\n{x}", class.label(), x.rows()).ok();
            }
            Ok(Answer::Yes)
        }
        Command::Signing { file } => {
            let x = parse_matrix(&read(file)?)?;
            match tu_signing(&x, bounds)? {
                Some(u) => {
                    if p {
                        o.push_str("# TU-SIGNING\n");
                        o.push_str(&format_matrix(&u));
                    } else {
                        writeln!(o, "TU-SIGNING\n{u}").ok();
                    }
                    Ok(Answer::Yes)
                }
                None => {
                    writeln!(o, "{}", if p { "# NO-TU-SIGNING" } else { "NO-TU-SIGNING" }).ok();
                    Ok(Answer::No)
                }
            }
        }
        Command::Reconstruct { file } => {
            let text = read(file)?;
            let first = text
                .lines()
                .map(|l| l.split('#').next().unwrap_or("").trim())
                .find(|l| !l.is_empty())
                .unwrap_or("");
            let (out, gram) = if first.split_whitespace().next() == Some("gram") {
                let a = parse_gram(&text)?;
                (reconstruct_matroid(&a, bounds)?, a)
            } else {
                let basis = if first.split_whitespace().count() == 2
                    && file.extension().is_none_or(|e| e != "graph")
                    && first != "graph"
                {
                    parse_matrix(&text)?
                } else {
                    let m = read_matroid(file, &text, bounds)?;
                    FlowLattice::fundamental(&m, &m.first_base())?.basis().clone()
                };
                (reconstruct_from_basis(&basis, bounds)?, GramMatrix::new(basis.gram())?)
            };
            write_reconstruction(&out, &gram, p, o);
            Ok(out.report().is_some().into())
        }
        Command::Isometric { left, right, mode } => {
            let (m, n) = (load_matroid(left, bounds)?, load_matroid(right, bounds)?);
            let d = match mode {
                Mode::Flow => flow_lattices_isometric(&m, &n, bounds)?,
                Mode::Cut => cut_lattices_isometric(&m, &n, bounds)?,
                Mode::Mixed => mixed_isometric(&m, &n, bounds)?,
            };
            match d.witness() {
                Some(pairs) => {
                    if p {
                        let items: Vec<String> = pairs.iter().map(|(a, b)| format!("{a}:{b}")).collect();
                        writeln!(o, "isometric=yes\nmap={}", items.join(",")).ok();
                    } else {
                        writeln!(o, "ISOMETRIC").ok();
                        for (a, b) in pairs {
                            writeln!(o, "{a} -> {b}").ok();
                        }
                    }
                    Ok(Answer::Yes)
                }
                None => {
                    writeln!(o, "{}", if p { "isometric=no" } else { "NOT-ISOMETRIC" }).ok();
                    Ok(Answer::No)
                }
            }
        }
    }
}

fn tu_check(m: &IntMatrix, bounds: Bounds, p: bool, o: &mut String) -> CliResult<Answer> {
    let tu = is_totally_unimodular(m, bounds)?;
    let wu = is_weakly_unimodular(m, bounds)?;
    for (name, res) in [("tu", &tu), ("wu", &wu)] {
        match res {
            Unimodularity::Holds if p => writeln!(o, "{name}=yes"),
            Unimodularity::Holds => writeln!(o, "{}: yes", name.to_uppercase()),
            Unimodularity::Fails(w) if p => writeln!(
                o,
                "{name}=no rows={} cols={} det={}",
                one_based(&w.rows),
                one_based(&w.cols),
                w.det
            ),
            Unimodularity::Fails(w) => writeln!(
                o,
                "{}: no, rows {{{}}} cols {{{}}} have determinant {}",
                name.to_uppercase(),
                one_based(&w.rows),
                one_based(&w.cols),
                w.det
            ),
        }
        .ok();
    }
    Ok(tu.holds().into())
}

fn write_witness(w: &Option<GWitness>, label: &str, p: bool, o: &mut String) {
    let text = match w {
        Some(GWitness::Negative { subset, g }) => format!("g{} = {g}", OneBased(subset)),
        Some(GWitness::ZeroSingleton { index }) => format!("g{{{}}} = 0", index + 1),
        None => return writeln!(o, "{}", if p { format!("class={label}") } else { label.to_string() }).unwrap_or(()),
    };
    if p {
        writeln!(o, "class={label}\nwitness={}", text.replace(' ', "")).ok();
    } else {
        writeln!(o, "{label}\nwitness: {text}").ok();
    }
}

fn gtest(text: &str, bounds: Bounds, p: bool, o: &mut String) -> CliResult<Answer> {
    let a = parse_gram(text)?;
    let class = classify(&a, bounds)?;
    write_witness(&class.witness, class.label(), p, o);
    let rows: Vec<(GroundSubset, i64, i64)> =
        class.table.rows().into_iter().filter(|(_, f, g)| *f != 0 || *g != 0).collect();
    if p {
        writeln!(o, "k={}", class.k()).ok();
        for (s, f, g) in &rows {
            let set = OneBased(s).to_string();
            writeln!(o, "set={} f={f} g={g}", &set[1..set.len() - 1]).ok();
        }
    } else {
        writeln!(o, "k = {}", class.k()).ok();
        let sets: Vec<String> = rows.iter().map(|(s, _, _)| OneBased(s).to_string()).collect();
        let w = sets.iter().map(String::len).max().unwrap_or(1).max(1);
        writeln!(o, "{:<w$}  {:>6}  {:>6}", "S", "f", "g").ok();
        for ((_, f, g), s) in rows.iter().zip(&sets) {
            writeln!(o, "{s:<w$}  {f:>6}  {g:>6}").ok();
        }
    }
    Ok(class.nonnegative.into())
}

fn write_reconstruction(r: &Reconstruction, gram: &GramMatrix, p: bool, o: &mut String) {
    let (x, rep) = match r {
        Reconstruction::Matroid(rep) => (Some(&rep.x), Some(rep.as_ref())),
        Reconstruction::NotFeasible(f) => (f.x(), None),
    };
    if p {
        writeln!(o, "verdict={}", r.verdict()).ok();
        writeln!(o, "gram={}", inline(gram.matrix())).ok();
        if let Some(x) = x {
            writeln!(o, "x={}", inline(x)).ok();
        }
        if let Some(rep) = rep {
            writeln!(o, "certificate={}", inline(&rep.certificate)).ok();
            writeln!(o, "standard={}", inline(&rep.standard)).ok();
            writeln!(o, "ground={}", rep.matroid.ground().join(",")).ok();
            if let Some(z) = rep.zero_rows {
                writeln!(o, "zero_rows={z}").ok();
            }
        }
        return;
    }
    writeln!(o, "VERDICT\n{}\n", r.verdict()).ok();
    writeln!(o, "GRAM\n{}", gram.matrix()).ok();
    if let Some(x) = x {
        writeln!(o, "X\n{x}").ok();
    }
    if let Some(rep) = rep {
        writeln!(o, "CERTIFICATE\n{}", rep.certificate).ok();
        writeln!(o, "STANDARD-FORM\n{}", rep.standard).ok();
        writeln!(o, "MATROID\n{}", format_matroid(&rep.matroid)).ok();
        if let Some(z) = rep.zero_rows {
            writeln!(o, "ZERO-ROWS\n{z}\n").ok();
        }
    }
    while o.ends_with("\n\n") {
        o.pop();
    }
}
