//! Command-line front end. Exit codes: 0 yes/pass, 1 no/fail, 2 unknown,
//! 3 usage or input error, 4 budget exceeded, 5 internal error.
//!
//! Budgets may also come from `CAYLEY_CIRCLES_ORBIT_CAP`,
//! `CAYLEY_CIRCLES_ENUM_BUDGET` and `CAYLEY_CIRCLES_LEGGE_BUDGET`; flags win.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::certifier::{certify, classify, CanonicalKind, CertifyOptions};
use crate::error::{Error, Result};
use crate::finite::{finite_report, FiniteCayleySpec, FiniteReport};
use crate::freegroup::{Move, ReducedWord, DEFAULT_ORBIT_CAP};
use crate::legge::{
    build_legge_quotient, legge_circle_generators, legge_disconnecting_pair,
    legge_full_generators, verify_legge, DEFAULT_LEGGE_BUDGET,
};
use crate::multigraph::{enumerate_hamiltonian_cycles, export_dot, read_edge_list, DotOptions};
use crate::outerplanar_check::verify_outerplanar_quotient;
use crate::quotients::{
    build_quotient_enum, build_quotient_local, full_generating_set, word_label,
    DEFAULT_ENUM_BUDGET,
};

pub const EXIT_USAGE: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;
pub const EXIT_INTERNAL: i32 = 5;

#[derive(Parser, Debug)]
#[command(name = "cayley-circles", version, about = "Hamiltonian circles in Cayley graphs of free groups")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether Cay(F_n; s) is a hamiltonian circle in Cay(F_n; A ∪ {s})
    Certify {
        #[arg(short = 'n', long)]
        rank: usize,
        word: String,
        #[arg(long)]
        max_level: Option<usize>,
        #[arg(long, env = "CAYLEY_CIRCLES_ORBIT_CAP", default_value_t = DEFAULT_ORBIT_CAP)]
        orbit_cap: usize,
        #[arg(long)]
        json: bool,
    },
    /// Build the quotient Cay(F_n; S)/~_l
    Quotient {
        #[arg(short = 'n', long)]
        rank: usize,
        /// Generator word; repeat for several
        #[arg(short = 's', long = "gen", required = true)]
        gens: Vec<String>,
        #[arg(short = 'l', long, value_parser = clap::value_parser!(u64).range(1..))]
        level: u64,
        /// Add the standard generators A^{±1}
        #[arg(long)]
        with_tree: bool,
        /// Use the reference enumeration instead of the local construction
        #[arg(long)]
        enumerate: bool,
        #[arg(long, env = "CAYLEY_CIRCLES_ENUM_BUDGET", default_value_t = DEFAULT_ENUM_BUDGET)]
        budget: u64,
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Check the (ab)-circle quotients of Z_m * Z_n
    Legge {
        #[arg(short = 'm')]
        m: u32,
        #[arg(short = 'n')]
        n: u32,
        #[arg(short = 'r', value_parser = clap::value_parser!(u64).range(1..))]
        r: u64,
        /// Also remove the two designated ab-edges at each depth >= 2
        #[arg(long)]
        disconnect: bool,
        #[arg(long, env = "CAYLEY_CIRCLES_LEGGE_BUDGET", default_value_t = DEFAULT_LEGGE_BUDGET)]
        budget: u64,
        /// Full quotient at depth r, circle edges bold
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Find an automorphism taking s to a_1^2...a_n^2 or [a_1,a_2]...
    Classify {
        #[arg(short = 'n', long)]
        rank: usize,
        word: String,
        #[arg(long, env = "CAYLEY_CIRCLES_ORBIT_CAP", default_value_t = DEFAULT_ORBIT_CAP)]
        orbit_cap: usize,
        #[arg(long)]
        json: bool,
    },
    /// Count hamiltonian cycles of a finite Cayley graph or edge-list file
    Finite {
        /// `cyclic:8:1,2`, `dihedral:10:a,b,aba`, or a path to an edge list
        target: String,
        #[arg(long)]
        json: bool,
    },
    /// Check outerplanarity of the truncations X/~_l for l = 1..level
    Outerplanar {
        #[arg(short = 'n', long)]
        rank: usize,
        word: String,
        #[arg(short = 'l', long, value_parser = clap::value_parser!(u64).range(1..))]
        level: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientReport {
    pub rank: usize,
    pub level: usize,
    pub generators: Vec<String>,
    pub vertices: usize,
    pub edges: usize,
    pub is_cycle: bool,
    pub connected: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub word: String,
    pub kind: CanonicalKind,
    pub image: Option<String>,
    pub witness: Vec<Move>,
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } | Error::OrbitCapExceeded { .. } | Error::GraphTooLarge { .. } => {
            EXIT_BUDGET
        }
        Error::Internal(_) => EXIT_INTERNAL,
        _ => EXIT_USAGE,
    }
}

fn json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    let text = serde_json::to_string(value).map_err(|e| Error::Internal(e.to_string()))?;
    writeln!(out, "{text}")?;
    Ok(())
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(Error::from)
}

/// Parses `args` (program name first), runs the command, and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{rendered}") } else { write!(out, "{rendered}") };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code_for(&e)
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Certify { rank, word, max_level, orbit_cap, json } => {
            let s = ReducedWord::parse(&word, rank)?;
            let cert = certify(&s, &CertifyOptions { max_level, orbit_cap })?;
            if json {
                json_line(out, &cert)?;
            } else {
                writeln!(out, "{}", cert.summary())?;
                writeln!(out, "reason: {}", cert.reason)?;
                if !cert.checked_levels.is_empty() {
                    let levels: Vec<String> = cert.checked_levels.iter().map(|l| l.to_string()).collect();
                    writeln!(out, "quotient cycles checked at levels: {}", levels.join(", "))?;
                }
                if let Some(target) = &cert.decided_on {
                    writeln!(out, "decided on: {target}")?;
                }
                if !cert.witness.is_empty() {
                    let moves: Vec<String> = cert.witness.iter().map(Move::to_string).collect();
                    writeln!(out, "witness: {}", moves.join(" "))?;
                }
                if let Some(d) = &cert.diagnostic {
                    writeln!(out, "note: {d}")?;
                }
            }
            Ok(cert.verdict.exit_code())
        }
        Command::Quotient { rank, gens, level, with_tree, enumerate, budget, dot, json } => {
            let level = level as usize;
            let words = gens.iter().map(|g| ReducedWord::parse(g, rank)).collect::<Result<Vec<_>>>()?;
            let mut all = words.clone();
            if with_tree {
                for s in &words {
                    all.extend(full_generating_set(s));
                }
            }
            let q = if enumerate {
                build_quotient_enum(rank, &all, level, budget)?
            } else {
                build_quotient_local(rank, &all, level)?
            };
            let g = q.graph();
            let report = QuotientReport {
                rank,
                level,
                generators: q.generators().iter().map(word_label).collect(),
                vertices: g.vertex_count(),
                edges: g.edge_count(),
                is_cycle: g.is_cycle(),
                connected: g.is_connected(),
            };
            if let Some(path) = dot {
                let circle: Vec<String> =
                    words.iter().flat_map(|s| [word_label(s), word_label(&s.invert())]).collect();
                let highlight = if with_tree {
                    g.edges()
                        .iter()
                        .enumerate()
                        .filter(|(_, e)| e.tag.as_ref().is_some_and(|t| circle.contains(t)))
                        .map(|(i, _)| i)
                        .collect()
                } else {
                    Default::default()
                };
                write_file(&path, &export_dot(g, &DotOptions { highlight, edge_labels: true }))?;
            }
            if json {
                json_line(out, &report)?;
            } else {
                writeln!(
                    out,
                    "level {level} quotient: {} vertices, {} edges, cycle: {}, connected: {}",
                    report.vertices,
                    report.edges,
                    yes_no(report.is_cycle),
                    yes_no(report.connected)
                )?;
            }
            Ok(0)
        }
        Command::Legge { m, n, r, disconnect, budget, dot, json } => {
            let r = r as usize;
            let report = verify_legge(m, n, r, budget)?;
            let mut pass = report.pass;
            let mut cuts = Vec::new();
            if disconnect {
                for depth in 2..=r {
                    let cut = legge_disconnecting_pair(m, n, depth, budget)?;
                    pass &= cut.disconnected;
                    cuts.push(cut);
                }
            }
            if let Some(path) = dot {
                let x = build_legge_quotient(m, n, &legge_full_generators(m, n)?, r, budget)?;
                let c = build_legge_quotient(m, n, &legge_circle_generators(m, n)?, r, budget)?;
                let highlight = x
                    .edge_keys
                    .iter()
                    .enumerate()
                    .filter(|(_, k)| c.edge_keys.contains(k))
                    .map(|(i, _)| i)
                    .collect();
                write_file(&path, &export_dot(&x.graph, &DotOptions { highlight, edge_labels: true }))?;
            }
            if json {
                json_line(out, &report)?;
                for cut in &cuts {
                    json_line(out, cut)?;
                }
            } else {
                for level in &report.levels {
                    writeln!(
                        out,
                        "r={}: {} classes, cycle of length {}: {}",
                        level.r,
                        level.vertices,
                        level.vertices,
                        pass_fail(level.pass())
                    )?;
                }
                for cut in &cuts {
                    writeln!(
                        out,
                        "r={}: removing the two ab-edges leaves {} components: {}",
                        cut.r,
                        cut.components,
                        pass_fail(cut.disconnected)
                    )?;
                }
            }
            Ok(if pass { 0 } else { 1 })
        }
        Command::Classify { rank, word, orbit_cap, json } => {
            let s = ReducedWord::parse(&word, rank)?;
            let form = classify(&s, orbit_cap)?;
            let report = ClassifyReport {
                word: s.to_string(),
                kind: form.kind,
                image: form.image.as_ref().map(ToString::to_string),
                witness: form.witness.map(|w| w.moves().to_vec()).unwrap_or_default(),
            };
            if json {
                json_line(out, &report)?;
            } else {
                writeln!(out, "{:?}", report.kind)?;
                if let Some(image) = &report.image {
                    writeln!(out, "image: {image}")?;
                    let moves: Vec<String> = report.witness.iter().map(Move::to_string).collect();
                    writeln!(out, "witness: {}", if moves.is_empty() { "identity".into() } else { moves.join(" ") })?;
                }
            }
            Ok(if report.kind == CanonicalKind::None { 1 } else { 0 })
        }
        Command::Finite { target, json } => {
            let report = if Path::new(&target).is_file() {
                let g = read_edge_list(&target)?;
                let count = enumerate_hamiltonian_cycles(&g.simple_support())?.len();
                FiniteReport { spec: target.clone(), vertices: g.vertex_count(), hamiltonian_cycles: count, unique: count == 1 }
            } else {
                finite_report(&target.parse::<FiniteCayleySpec>()?)?
            };
            if json {
                json_line(out, &report)?;
            } else {
                writeln!(
                    out,
                    "{}: {} vertices, hamiltonian cycles: {}, unique: {}",
                    report.spec,
                    report.vertices,
                    report.hamiltonian_cycles,
                    yes_no(report.unique)
                )?;
            }
            Ok(if report.unique { 0 } else { 1 })
        }
        Command::Outerplanar { rank, word, level, json } => {
            let s = ReducedWord::parse(&word, rank)?;
            let report = verify_outerplanar_quotient(&s, level as usize)?;
            if json {
                json_line(out, &report)?;
            } else {
                for l in &report.levels {
                    writeln!(
                        out,
                        "l={}: {} vertices, outerplanar: {}, circle is a hamiltonian cycle: {}",
                        l.l,
                        l.vertices,
                        yes_no(l.outerplanar),
                        yes_no(l.circle_is_ham_cycle)
                    )?;
                }
            }
            Ok(if report.pass() { 0 } else { 1 })
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn pass_fail(b: bool) -> &'static str {
    if b {
        "PASS"
    } else {
        "FAIL"
    }
}
