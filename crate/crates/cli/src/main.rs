//! `polyface`: generate vertex sets, extract faces, run the construction
//! verifiers and geometry checks.
//!
//! Exit status: 0 success, 1 an assertion failed or a predicate is false,
//! 2 an enumeration cap was exceeded, 3 bad input.

mod select;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use polyface::constructions::{
    dcp_embedding, dcp_verify, lemma1_system, lemma1_verify, theorem1_system, theorem1_verify, Report,
};
use polyface::geometry::{adjacent, clique_check, is_face_subset, neighborly};
use polyface::io::{
    parse_face_system, parse_graph, parse_matrix, parse_vertex_set, vertex_set_to_json, vertex_set_to_text,
};
use polyface::{
    bqp_vertices, dcp_vertices, extract_face, lop_vertices, lop_vertices_oracle, stable_vertices, Error, Limits,
    VertexSet,
};

const EXIT_FAIL: u8 = 1;
const EXIT_CAP: u8 = 2;
const EXIT_INPUT: u8 = 3;

#[derive(Parser)]
#[command(name = "polyface", version, about = "Vertex sets, faces and exact embeddings of 0/1 polytopes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    Bqp,
    Lop,
    LopOracle,
    Stable,
    Dcp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Construction {
    Theorem1,
    Lemma1,
    Dcp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Check {
    Adjacent,
    Face,
    Clique,
    Neighborly,
}

#[derive(clap::Args, Clone, Copy)]
struct Caps {
    /// Maximum number of permutations to enumerate.
    #[arg(long, env = "POLYFACE_MAX_PERMS", default_value_t = Limits::default().max_perms)]
    max_perms: u64,
    /// Maximum column count for double-covering verification.
    #[arg(long, default_value_t = Limits::default().max_cols)]
    max_cols: usize,
    /// Largest m for the brute-force 3-cycle oracle.
    #[arg(long, default_value_t = Limits::default().oracle_max_m)]
    oracle_max_m: usize,
}

impl Caps {
    fn limits(&self) -> Limits {
        Limits {
            max_perms: self.max_perms,
            max_cols: self.max_cols,
            oracle_max_m: self.oracle_max_m,
            ..Limits::default()
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the vertex set of a polytope family.
    Generate {
        family: Family,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        /// Graph file (for `stable`).
        #[arg(long)]
        graph: Option<PathBuf>,
        /// Four-ones matrix file (for `dcp`; alternatively `--m` for the LOP embedding).
        #[arg(long)]
        matrix: Option<PathBuf>,
        /// Output path; defaults to e.g. `lop3.vs` or `lop3.json`.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[command(flatten)]
        caps: Caps,
    },
    /// Intersect a vertex set with a face system.
    Face {
        #[arg(long)]
        set: PathBuf,
        /// Face-system file.
        #[arg(long, conflicts_with_all = ["theorem1", "lemma1", "dcp"])]
        system: Option<PathBuf>,
        /// Use the theorem-1 system for this n.
        #[arg(long)]
        theorem1: Option<usize>,
        /// Use the lemma-1 system of this graph file.
        #[arg(long)]
        lemma1: Option<PathBuf>,
        /// Use the z=0, h=1 system of the LOP(m) embedding.
        #[arg(long)]
        dcp: Option<usize>,
        /// Output path; the face goes to stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run one of the construction verifiers.
    Verify {
        construction: Construction,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[command(flatten)]
        caps: Caps,
    },
    /// Convex-hull checks on a vertex set.
    Geometry {
        check: Check,
        #[arg(long)]
        set: PathBuf,
        #[arg(long)]
        u: Option<String>,
        #[arg(long)]
        v: Option<String>,
        /// Comma-separated selectors, `theorem1-face` or `all`.
        #[arg(long)]
        subset: Option<String>,
        #[arg(long)]
        k: Option<usize>,
        /// Largest number of k-subsets a neighborliness sweep may test.
        #[arg(long, default_value_t = 100)]
        max_subsets: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Render a saved JSON report; exit status reflects its assertions.
    Report {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

enum Failure {
    Input(String),
    Cap(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_capacity() {
            Failure::Cap(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

type CmdResult = Result<u8, Failure>;

fn input(msg: impl Into<String>) -> Failure {
    Failure::Input(msg.into())
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn render_set(set: &VertexSet, format: Format) -> String {
    match format {
        Format::Text => vertex_set_to_text(set),
        Format::Json => format!("{}\n", vertex_set_to_json(set)),
    }
}

fn render_report(report: &Report, format: Format) -> String {
    match format {
        Format::Text => report.render_text(),
        Format::Json => format!("{}\n", report.to_json()),
    }
}

/// Prints or writes a report and maps it to an exit status.
fn emit_report(report: &Report, format: Format, out: Option<&Path>) -> CmdResult {
    let text = render_report(report, format);
    match out {
        Some(path) => {
            write(path, &text)?;
            print!("{}", render_report(report, Format::Text));
        }
        None => print!("{text}"),
    }
    for a in report.failures() {
        eprintln!("assertion failed: {}", a.name);
    }
    Ok(if report.all_pass() { 0 } else { EXIT_FAIL })
}

fn stem(path: &Path) -> String {
    path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default()
}

fn need<T>(value: Option<T>, flag: &str) -> Result<T, Failure> {
    value.ok_or_else(|| input(format!("missing required flag {flag}")))
}

#[allow(clippy::too_many_arguments)]
fn generate(
    family: Family,
    n: Option<usize>,
    m: Option<usize>,
    graph: Option<PathBuf>,
    matrix: Option<PathBuf>,
    out: Option<PathBuf>,
    format: Format,
    caps: Caps,
) -> CmdResult {
    let limits = caps.limits();
    let (set, name) = match family {
        Family::Bqp => {
            let n = need(n, "--n")?;
            (bqp_vertices(n)?, format!("bqp{n}"))
        }
        Family::Lop => {
            let m = need(m, "--m")?;
            limits.check_perms(m)?;
            (lop_vertices(m)?, format!("lop{m}"))
        }
        Family::LopOracle => {
            let m = need(m, "--m")?;
            (lop_vertices_oracle(m, limits.oracle_max_m)?, format!("lop{m}-oracle"))
        }
        Family::Stable => {
            let path = need(graph, "--graph")?;
            let g = parse_graph(&read(&path)?)?;
            (stable_vertices(&g), format!("stable-{}", stem(&path)))
        }
        Family::Dcp => match (matrix, m) {
            (Some(path), _) => {
                let b = parse_matrix(&read(&path)?)?;
                (dcp_vertices(&b), format!("dcp-{}", stem(&path)))
            }
            (None, Some(m)) => {
                let emb = dcp_embedding(m)?;
                if emb.cols() > limits.max_cols {
                    return Err(Failure::Cap(format!(
                        "dcp embedding of m={m} has {} columns, cap is {}",
                        emb.cols(),
                        limits.max_cols
                    )));
                }
                (dcp_vertices(emb.matrix()), format!("dcp-lop{m}"))
            }
            (None, None) => return Err(input("dcp needs --matrix or --m")),
        },
    };
    let ext = match format {
        Format::Text => "vs",
        Format::Json => "json",
    };
    let path = out.unwrap_or_else(|| PathBuf::from(format!("{name}.{ext}")));
    write(&path, &render_set(&set, format))?;
    if set.dim() == 0 {
        eprintln!("warning: layout `{}` has dimension 0", set.layout().kind());
    }
    println!("dim={} count={}", set.dim(), set.len());
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn face(
    set: PathBuf,
    system: Option<PathBuf>,
    theorem1: Option<usize>,
    lemma1: Option<PathBuf>,
    dcp: Option<usize>,
    out: Option<PathBuf>,
    format: Format,
) -> CmdResult {
    let vertices = parse_vertex_set(&read(&set)?)?;
    let fs = match (system, theorem1, lemma1, dcp) {
        (Some(path), None, None, None) => parse_face_system(&read(&path)?)?,
        (None, Some(n), None, None) => theorem1_system(n)?,
        (None, None, Some(path), None) => lemma1_system(&parse_graph(&read(&path)?)?)?,
        (None, None, None, Some(m)) => dcp_embedding(m)?.face_system(),
        _ => return Err(input("give exactly one of --system, --theorem1, --lemma1, --dcp")),
    };
    let extraction = extract_face(&vertices, &fs)?;
    for w in &extraction.warnings {
        eprintln!("warning: {w}");
    }
    let rendered = render_set(&extraction.face, format);
    let summary = format!(
        "dim={} count={} equalities={}",
        extraction.face.dim(),
        extraction.face.len(),
        fs.len()
    );
    match out {
        Some(path) => {
            write(&path, &rendered)?;
            println!("{summary}");
        }
        None => {
            print!("{rendered}");
            eprintln!("{summary}");
        }
    }
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn verify(
    construction: Construction,
    n: Option<usize>,
    m: Option<usize>,
    graph: Option<PathBuf>,
    out: Option<PathBuf>,
    format: Format,
    caps: Caps,
) -> CmdResult {
    let limits = caps.limits();
    let report = match construction {
        Construction::Theorem1 => theorem1_verify(need(n, "--n")?, &limits)?,
        Construction::Lemma1 => {
            let g = parse_graph(&read(&need(graph, "--graph")?)?)?;
            lemma1_verify(&g, &limits)?
        }
        Construction::Dcp => dcp_verify(need(m, "--m")?, &limits)?,
    };
    emit_report(&report, format, out.as_deref())
}

#[allow(clippy::too_many_arguments)]
fn geometry(
    check: Check,
    set: PathBuf,
    u: Option<String>,
    v: Option<String>,
    subset: Option<String>,
    k: Option<usize>,
    max_subsets: usize,
    out: Option<PathBuf>,
    format: Format,
) -> CmdResult {
    let vertices = parse_vertex_set(&read(&set)?)?;
    let mut report = Report::new(match check {
        Check::Adjacent => "geometry-adjacent",
        Check::Face => "geometry-face",
        Check::Clique => "geometry-clique",
        Check::Neighborly => "geometry-neighborly",
    });
    report.param("set", set.display().to_string());
    report.param("layout", vertices.layout().kind().to_string());
    match check {
        Check::Adjacent => {
            let a = select::vertex(&vertices, &need(u, "--u")?).map_err(input)?;
            let b = select::vertex(&vertices, &need(v, "--v")?).map_err(input)?;
            report.param("u", a.to_string()).param("v", b.to_string());
            let result = adjacent(&a, &b, &vertices)?;
            report.check("adjacent", result, Some(format!("midpoint of {a} and {b} has a convex representation using other vertices")));
        }
        Check::Face => {
            let sel = need(subset, "--subset")?;
            let s = select::subset(&vertices, &sel).map_err(input)?;
            report.param("subset", sel);
            let result = is_face_subset(&s, &vertices)?;
            report.check("is-face", result.is_face, Some("no separating form exists".into()));
            report.detail("subset_size", s.len());
            if let Some(cert) = result.certificate {
                report.detail("certificate", serde_json::to_value(cert).expect("serializes"));
            }
        }
        Check::Clique => {
            let sel = need(subset, "--subset")?;
            let s = select::subset(&vertices, &sel).map_err(input)?;
            report.param("subset", sel);
            let result = clique_check(&s, &vertices)?;
            report.check(
                "clique",
                result.clique,
                result.witness.map(|(a, b)| format!("{a} and {b} are not adjacent")),
            );
            report.detail("subset_size", s.len()).detail("pairs_checked", result.pairs_checked);
        }
        Check::Neighborly => {
            let k = need(k, "--k")?;
            report.param("k", k);
            let count = binomial(vertices.len(), k);
            if count > max_subsets as u128 {
                return Err(Failure::Cap(format!(
                    "{count} subsets of size {k} exceed --max-subsets {max_subsets}"
                )));
            }
            let sweep = neighborly(&vertices, k)?;
            report.check(
                "neighborly",
                sweep.all_faces(),
                sweep.first_failure.map(|s| s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")),
            );
            report.detail("subsets", sweep.subsets).detail("faces", sweep.faces);
        }
    }
    emit_report(&report, format, out.as_deref())
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn show_report(file: PathBuf, format: Format) -> CmdResult {
    let report: Report = serde_json::from_str(&read(&file)?).map_err(|e| input(format!("{}: {e}", file.display())))?;
    print!("{}", render_report(&report, format));
    Ok(if report.all_pass() { 0 } else { EXIT_FAIL })
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Generate {
            family,
            n,
            m,
            graph,
            matrix,
            out,
            format,
            caps,
        } => generate(family, n, m, graph, matrix, out, format, caps),
        Command::Face {
            set,
            system,
            theorem1,
            lemma1,
            dcp,
            out,
            format,
        } => face(set, system, theorem1, lemma1, dcp, out, format),
        Command::Verify {
            construction,
            n,
            m,
            graph,
            out,
            format,
            caps,
        } => verify(construction, n, m, graph, out, format, caps),
        Command::Geometry {
            check,
            set,
            u,
            v,
            subset,
            k,
            max_subsets,
            out,
            format,
        } => geometry(check, set, u, v, subset, k, max_subsets, out, format),
        Command::Report { file, format } => show_report(file, format),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
        Err(Failure::Cap(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_CAP)
        }
    }
}
