//! Command-line front end. [`run`] takes explicit streams so it can be
//! driven from tests.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};

use crate::colorer::{self, ColorError};
use crate::graph::Graph;
use crate::io::{self, ColoringDocument, Family, Format};
use crate::{oracle, palette, perm};

pub const EXIT_OK: i32 = 0;
pub const EXIT_WITNESS: i32 = 1;
pub const EXIT_HYPOTHESIS: i32 = 2;
pub const EXIT_PROOF_GAP: i32 = 3;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_IO: i32 = 66;

#[derive(Debug, Parser)]
#[command(name = "asymcolor", version, about = "Asymmetric 3-edge-colorings of graphs with δ ≥ Δ/2")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum InputFormat {
    Graph6,
    Edgelist,
}

impl From<InputFormat> for Format {
    fn from(f: InputFormat) -> Format {
        match f {
            InputFormat::Graph6 => Format::Graph6,
            InputFormat::Edgelist => Format::Edgelist,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OutputFormat {
    Json,
    Dot,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Color a graph and print the coloring.
    Color {
        /// Graph file, `-` for stdin.
        file: String,
        /// Input format; guessed from the contents when omitted.
        #[arg(long, value_enum)]
        format: Option<InputFormat>,
        #[arg(long, value_enum, default_value = "json")]
        out: OutputFormat,
        /// Check the step conditions after every step.
        #[arg(long)]
        paranoid: bool,
    },
    /// Check that a coloring document is asymmetric for a graph.
    Verify {
        graph: String,
        coloring: String,
        #[arg(long, value_enum)]
        format: Option<InputFormat>,
    },
    /// Compute the distinguishing index by exhaustive search.
    Dprime {
        file: String,
        #[arg(long, value_enum)]
        format: Option<InputFormat>,
        #[arg(long, default_value_t = 4)]
        max_colors: usize,
        #[arg(long, default_value_t = oracle::DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Distinguishing indices of all connected graphs up to `n` vertices.
    Census {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        hypothesis_only: bool,
    },
    /// Print a named graph in graph6.
    Gen { family: String, params: Vec<usize> },
    /// Run the built-in palette and base-coloring checks.
    Selftest,
}

struct Failure {
    code: i32,
    message: String,
}

fn fail(code: i32, message: impl Into<String>) -> Failure {
    Failure { code, message: message.into() }
}

/// Runs one command line and returns its exit status.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { stdout.write_all(text.as_bytes()) } else { stderr.write_all(text.as_bytes()) };
            return code;
        }
    };
    let mut stdin_text: Option<String> = None;
    let mut read = |path: &str| -> Result<String, Failure> {
        if path == "-" {
            if stdin_text.is_none() {
                let mut s = String::new();
                stdin.read_to_string(&mut s).map_err(|e| fail(EXIT_IO, format!("stdin: {e}")))?;
                stdin_text = Some(s);
            }
            Ok(stdin_text.clone().unwrap())
        } else {
            fs::read_to_string(path).map_err(|e| fail(EXIT_IO, format!("{path}: {e}")))
        }
    };
    let result = match cli.command {
        Command::Color { file, format, out, paranoid } => {
            read(&file).and_then(|t| cmd_color(&t, format, out, paranoid, stdout, stderr))
        }
        Command::Verify { graph, coloring, format } => read(&graph)
            .and_then(|g| read(&coloring).map(|c| (g, c)))
            .and_then(|(g, c)| cmd_verify(&g, &c, format, stdout)),
        Command::Dprime { file, format, max_colors, budget } => {
            read(&file).and_then(|t| cmd_dprime(&t, format, max_colors, budget, stdout))
        }
        Command::Census { n, hypothesis_only } => cmd_census(n, hypothesis_only, stdout),
        Command::Gen { family, params } => cmd_gen(&family, &params, stdout),
        Command::Selftest => cmd_selftest(stdout),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "asymcolor: {}", f.message);
            f.code
        }
    }
}

fn load_graph(text: &str, format: Option<InputFormat>) -> Result<Graph, Failure> {
    io::parse_graph(text, format.map(Format::from)).map_err(|e| fail(EXIT_IO, e.to_string()))
}

fn out_err(e: std::io::Error) -> Failure {
    fail(EXIT_IO, format!("write failed: {e}"))
}

fn cmd_color(
    text: &str,
    format: Option<InputFormat>,
    out: OutputFormat,
    paranoid: bool,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, Failure> {
    let g = load_graph(text, format)?;
    match colorer::color_graph_detailed(&g, paranoid) {
        Ok(res) => {
            let body = match out {
                OutputFormat::Json => {
                    let doc =
                        ColoringDocument::new(&g, &res.coloring, Some(res.root), true).expect("coloring is total");
                    doc.to_json() + "\n"
                }
                OutputFormat::Dot => io::emit_dot(&g, &res.coloring).expect("coloring is total"),
            };
            stdout.write_all(body.as_bytes()).map_err(out_err)?;
            Ok(EXIT_OK)
        }
        Err(ColorError::HypothesisViolated) => Err(fail(EXIT_HYPOTHESIS, ColorError::HypothesisViolated.to_string())),
        Err(ColorError::ProofGapWitness(gap)) => {
            let doc = ColoringDocument::new(&gap.graph, &gap.coloring, None, false).expect("coloring is total");
            stdout.write_all((doc.to_json() + "\n").as_bytes()).map_err(out_err)?;
            writeln!(stderr, "asymcolor: proof gap, automorphism {:?} preserves the coloring", gap.witness.images())
                .map_err(out_err)?;
            Ok(EXIT_PROOF_GAP)
        }
        Err(e) => Err(fail(EXIT_PROOF_GAP, e.to_string())),
    }
}

fn cmd_verify(
    graph: &str,
    coloring: &str,
    format: Option<InputFormat>,
    stdout: &mut dyn Write,
) -> Result<i32, Failure> {
    let g = load_graph(graph, format)?;
    let doc = ColoringDocument::from_json(coloring).map_err(|e| fail(EXIT_IO, format!("coloring document: {e}")))?;
    let c = doc.coloring_for(&g).map_err(|e| fail(EXIT_IO, e.to_string()))?;
    match perm::find_symmetry(&g, &c) {
        None => {
            writeln!(stdout, "asymmetric").map_err(out_err)?;
            Ok(EXIT_OK)
        }
        Some(p) => {
            writeln!(stdout, "witness {:?}", p.images()).map_err(out_err)?;
            Ok(EXIT_WITNESS)
        }
    }
}

fn cmd_dprime(
    text: &str,
    format: Option<InputFormat>,
    max_colors: usize,
    budget: u64,
    stdout: &mut dyn Write,
) -> Result<i32, Failure> {
    if max_colors == 0 {
        return Err(fail(EXIT_USAGE, "--max-colors must be positive"));
    }
    let g = load_graph(text, format)?;
    match oracle::distinguishing_index(&g, max_colors, budget) {
        Ok(Some(r)) => writeln!(stdout, "{r}").map_err(out_err)?,
        Ok(None) => writeln!(stdout, "none ≤ {max_colors}").map_err(out_err)?,
        Err(e) => return Err(fail(EXIT_WITNESS, e.to_string())),
    }
    Ok(EXIT_OK)
}

fn cmd_census(n: usize, hypothesis_only: bool, stdout: &mut dyn Write) -> Result<i32, Failure> {
    if n > oracle::MAX_ENUMERATION_ORDER {
        return Err(fail(EXIT_USAGE, format!("--n at most {}", oracle::MAX_ENUMERATION_ORDER)));
    }
    let rows = oracle::census(n, hypothesis_only).map_err(|e| fail(EXIT_WITNESS, e.to_string()))?;
    for r in rows {
        let d = r.dprime.map_or("none".to_string(), |d| d.to_string());
        writeln!(stdout, "{} {} {} {} {}", io::encode_graph6(&r.graph), r.delta, r.max_degree, r.hypothesis, d)
            .map_err(out_err)?;
    }
    Ok(EXIT_OK)
}

fn cmd_gen(family: &str, params: &[usize], stdout: &mut dyn Write) -> Result<i32, Failure> {
    let fam: Family = family.parse().map_err(|e: io::FamilyError| {
        let known: Vec<&str> = Family::ALL.iter().map(|f| f.usage()).collect();
        fail(EXIT_USAGE, format!("{e}; families: {}", known.join(", ")))
    })?;
    let g = io::generate(fam, params).map_err(|e| fail(EXIT_USAGE, format!("{e}; usage: {}", fam.usage())))?;
    writeln!(stdout, "{}", io::encode_graph6(&g)).map_err(out_err)?;
    Ok(EXIT_OK)
}

type Check = (&'static str, fn() -> bool);

fn cmd_selftest(stdout: &mut dyn Write) -> Result<i32, Failure> {
    let checks: [Check; 4] = [
        ("uniform palette counts, k ≤ 60", || {
            (1..=60).all(|k| {
                let all = palette::uniform_palettes(k).unwrap();
                all.len() == palette::uniform_palette_count(k)
                    && all.len() > k
                    && all.iter().all(|p| p.is_uniform() && 2 * p.red <= k)
            })
        }),
        ("palette sequences outnumber Σk, two parts, Σk ≤ 12", || {
            (1..12).all(|a| (1..=12 - a).all(|b| palette::uniform_palette_seqs(&[a, b]).unwrap().count() > a + b))
        }),
        ("uniform splits, k ≤ 10, two parts", || {
            (2..=10).all(|k| {
                palette::uniform_palettes(k).unwrap().into_iter().all(|p| {
                    (1..k).all(|a| {
                        palette::split_palette(p, &[a, k - a])
                            .is_ok_and(|parts| parts.iter().all(palette::Palette::is_uniform))
                    })
                })
            })
        }),
        ("complete-graph base colorings, K3..K8", || {
            (3..=8).all(|n| {
                let g = colorer::complete_graph(n);
                let c = colorer::complete_graph_coloring(n);
                perm::is_asymmetric(&g, &c)
                    && (0..n).all(|v| g.incident_edges(v).any(|(_, e)| c.get(e) != Some(crate::Color::Green)))
            })
        }),
    ];
    let mut ok = true;
    for (name, check) in checks {
        let pass = check();
        ok &= pass;
        writeln!(stdout, "{} {name}", if pass { "ok  " } else { "FAIL" }).map_err(out_err)?;
    }
    Ok(if ok { EXIT_OK } else { EXIT_WITNESS })
}
