//! The `incol` command line: reading and writing edge lists and colorings,
//! generators, verification, exact and closed-form palette sizes, DOT export
//! and channel reports.
//!
//! Exit status is 0 on success, 1 on any input or domain error and 2 when a
//! search runs out of budget. Errors go to stderr as a single line
//! `error: <kind>: <detail>`.

pub mod channels;
pub mod dot;
pub mod io;

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Parser, Subcommand};
use incol_core::class_p::{
    color_class_p, generate, is_in_p, is_in_p_plus, k4_plus, parse_steps, GadgetKind,
};
use incol_core::closed_form::{color_complete, color_cycle, complete_graph, cycle_graph};
use incol_core::edge_coloring::{
    chromatic_index_with_budget, edge_color_exact_with_budget, optimal_edge_coloring,
};
use incol_core::o1p::{chi_o1p, color_components};
use incol_core::oracle::chi_exact_with_budget;
use incol_core::{
    palette_count, verify, Budget, Graph, IncidenceColoring, SearchOutcome, VerifyError,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use channels::ChannelReport;
use io::{Document, ParseError};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("io: {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("parse: {0}")]
    Parse(#[from] ParseError),
    #[error("graph: {0}")]
    Core(incol_core::Error),
    #[error("budget: search budget exhausted")]
    Budget,
    #[error("verify: {0}")]
    Verify(String),
    #[error("input: {0}")]
    Input(String),
}

impl From<incol_core::Error> for CliError {
    fn from(e: incol_core::Error) -> Self {
        match e {
            incol_core::Error::BudgetExceeded => CliError::Budget,
            other => CliError::Core(other),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Budget => 2,
            _ => 1,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "incol", version, about = "Conflict-free incidence colorings of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Color every component optimally, assuming outer-1-planar input
    Color {
        /// Edge list, `-` for stdin
        file: String,
        /// Re-read the printed coloring and verify it again
        #[arg(long)]
        verify: bool,
        /// Node limit for each exact edge-coloring search
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Print the optimal palette size
    Chi {
        file: String,
        /// Use the exact search instead of the outer-1-planar closed form
        #[arg(long)]
        exact: bool,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Check a coloring file
    Verify { file: String },
    /// Report membership in class P, class P+, or neither
    Classify { file: String },
    /// Write a generated graph to stdout
    Gen {
        #[command(subcommand)]
        family: Family,
    },
    /// Convert to another format
    Export {
        file: String,
        /// Graphviz output, with edge labels when the input is colored
        #[arg(long, required = true)]
        dot: bool,
    },
    /// Channel box of every node of a colored graph
    Channels { file: String },
    /// Print the chromatic index
    ChiPrime {
        file: String,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Print a proper edge coloring, optimal unless `--colors` is given
    EdgeColor {
        file: String,
        #[arg(short = 'k', long)]
        colors: Option<usize>,
        #[arg(long)]
        budget: Option<u64>,
    },
}

#[derive(Debug, Subcommand)]
enum Family {
    /// The cycle on n vertices
    Cycle {
        n: usize,
        /// Include the optimal coloring
        #[arg(long)]
        colored: bool,
    },
    /// The complete graph on n vertices
    Complete {
        n: usize,
        /// Include the optimal coloring
        #[arg(long)]
        colored: bool,
    },
    /// K4 with one edge subdivided
    K4plus {
        /// Include the optimal coloring
        #[arg(long)]
        colored: bool,
    },
    /// Paste gadgets onto K4+, e.g. `--steps g2,h3,g8`
    ClassP {
        #[arg(long, default_value = "")]
        steps: String,
        /// Append this many randomly chosen steps
        #[arg(long, default_value_t = 0)]
        random: usize,
        /// Longest ladder among random steps
        #[arg(long, default_value_t = 3)]
        max_ladder: usize,
        /// Seed for random steps and paste positions
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        colored: bool,
    },
}

fn budget(nodes: Option<u64>) -> Budget {
    nodes.map_or_else(Budget::unlimited, Budget::nodes)
}

struct Ctx<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn read(&mut self, path: &str) -> Result<Document, CliError> {
        let io_err = |source| CliError::Io {
            path: path.to_string(),
            source,
        };
        let text = if path == "-" {
            let mut s = String::new();
            self.stdin.read_to_string(&mut s).map_err(io_err)?;
            s
        } else {
            std::fs::read_to_string(path).map_err(io_err)?
        };
        Ok(io::parse(&text)?)
    }

    fn write(&mut self, text: &str) -> Result<(), CliError> {
        self.stdout
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io {
                path: "-".to_string(),
                source,
            })
    }
}

fn colored(doc: &Document) -> Result<&IncidenceColoring, CliError> {
    doc.coloring
        .as_ref()
        .ok_or_else(|| CliError::Input("the file carries no colors".to_string()))
}

/// A verifier failure in terms of the file's vertex names.
fn describe(doc: &Document, e: &VerifyError) -> String {
    let edge = |i: incol_core::Incidence| {
        let (u, v) = doc.graph.endpoints(i.edge);
        format!("{} on {}-{}", doc.name(i.vertex), doc.name(u), doc.name(v))
    };
    match *e {
        VerifyError::Conflict {
            witness,
            first,
            second,
            color,
        } => format!(
            "conflict at vertex {}: color {color} at {} and at {}",
            doc.name(witness),
            edge(first),
            edge(second)
        ),
        VerifyError::Uncolored(i) => format!("uncolored incidence {}", edge(i)),
        VerifyError::Incomplete { .. } => e.to_string(),
    }
}

fn cmd_color(ctx: &mut Ctx, file: &str, reverify: bool, nodes: Option<u64>) -> Result<(), CliError> {
    let mut doc = ctx.read(file)?;
    let combined = color_components(&doc.graph, budget(nodes))?;
    verify(&doc.graph, &combined.coloring).map_err(|e| CliError::Verify(describe(&doc, &e)))?;
    doc.coloring = Some(combined.coloring);
    let body = io::print(&doc);
    if reverify {
        let back = io::parse(&body)?;
        let c = colored(&back)?;
        verify(&back.graph, c).map_err(|e| CliError::Verify(describe(&back, &e)))?;
    }
    let mut out = String::new();
    for comp in &combined.components {
        out.push_str(&format!("# case {}\n", comp.case));
    }
    out.push_str(&format!("# chi {}\n", combined.chi));
    out.push_str(&body);
    ctx.write(&out)
}

/// Closed-form value per component, maximum over components.
fn closed_form_chi(g: &Graph) -> Result<usize, CliError> {
    let mut chi = 0;
    for comp in g.components() {
        let sub = g.induced_subgraph(&comp)?;
        chi = chi.max(chi_o1p(&sub)?);
    }
    Ok(chi)
}

fn cmd_chi(ctx: &mut Ctx, file: &str, exact: bool, nodes: Option<u64>) -> Result<(), CliError> {
    let doc = ctx.read(file)?;
    let chi = if exact {
        chi_exact_with_budget(&doc.graph, budget(nodes))?.chi
    } else {
        closed_form_chi(&doc.graph)?
    };
    ctx.write(&format!("{chi}\n"))
}

fn cmd_verify(ctx: &mut Ctx, file: &str) -> Result<(), CliError> {
    let doc = ctx.read(file)?;
    let c = colored(&doc)?;
    verify(&doc.graph, c).map_err(|e| CliError::Verify(describe(&doc, &e)))?;
    ctx.write(&format!("ok palette {}\n", palette_count(c)))
}

fn cmd_classify(ctx: &mut Ctx, file: &str) -> Result<(), CliError> {
    let doc = ctx.read(file)?;
    let class = if is_in_p(&doc.graph) {
        "P"
    } else if is_in_p_plus(&doc.graph) {
        "P+"
    } else {
        "other"
    };
    ctx.write(&format!("{class}\n"))
}

fn random_steps(rng: &mut ChaCha8Rng, count: usize, max_ladder: usize) -> Vec<GadgetKind> {
    let mut kinds = vec![GadgetKind::G2, GadgetKind::G4, GadgetKind::G8];
    kinds.extend((1..=max_ladder).map(GadgetKind::H));
    (0..count)
        .map(|_| kinds[rng.gen_range(0..kinds.len())])
        .collect()
}

fn cmd_gen(ctx: &mut Ctx, family: Family) -> Result<(), CliError> {
    let (graph, coloring) = match family {
        Family::Cycle { n, colored } => {
            if colored {
                let (g, c) = color_cycle(n)?;
                (g, Some(c))
            } else {
                (cycle_graph(n)?, None)
            }
        }
        Family::Complete { n, colored } => {
            if colored {
                let (g, c) = color_complete(n)?;
                (g, Some(c))
            } else {
                (complete_graph(n), None)
            }
        }
        Family::K4plus { colored } => {
            let g = k4_plus();
            let c = colored.then(|| color_class_p(&g)).transpose()?;
            (g, c)
        }
        Family::ClassP {
            steps,
            random,
            max_ladder,
            seed,
            colored,
        } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut kinds = parse_steps(&steps)
                .map_err(|_| CliError::Usage(format!("bad step list {steps:?}")))?;
            kinds.extend(random_steps(&mut rng, random, max_ladder));
            let g = generate(&kinds, &mut |bound| rng.gen_range(0..bound))?;
            let c = colored.then(|| color_class_p(&g)).transpose()?;
            (g, c)
        }
    };
    ctx.write(&io::print(&Document::numbered(graph, coloring)))
}

fn cmd_channels(ctx: &mut Ctx, file: &str) -> Result<(), CliError> {
    let doc = ctx.read(file)?;
    let report = ChannelReport::new(&doc.graph, colored(&doc)?);
    let mut out = report.render(&doc.names);
    let ok = report.all_rainbow();
    out.push_str(if ok { "# rainbow yes\n" } else { "# rainbow no\n" });
    ctx.write(&out)?;
    match report.boxes.iter().find(|b| !b.rainbow) {
        None => Ok(()),
        Some(b) => Err(CliError::Verify(format!(
            "channel box of {} repeats a channel",
            doc.name(b.node)
        ))),
    }
}

fn cmd_edge_color(ctx: &mut Ctx, file: &str, k: Option<usize>, nodes: Option<u64>) -> Result<(), CliError> {
    let doc = ctx.read(file)?;
    let g = &doc.graph;
    let ec = match k {
        None => optimal_edge_coloring(g, budget(nodes))?,
        Some(k) => match edge_color_exact_with_budget(g, k, budget(nodes))? {
            SearchOutcome::Found(ec) => ec,
            SearchOutcome::Infeasible => {
                return Err(CliError::Input(format!("no proper edge coloring with {k} colors")))
            }
            SearchOutcome::BudgetExceeded => return Err(CliError::Budget),
        },
    };
    let mut out = String::new();
    for (e, u, v) in g.edges() {
        out.push_str(&format!("{} {} {}\n", doc.name(u), doc.name(v), ec.color(e)));
    }
    out.push_str(&format!("# palette {}\n", ec.palette()));
    ctx.write(&out)
}

fn dispatch(ctx: &mut Ctx, command: Command) -> Result<(), CliError> {
    match command {
        Command::Color { file, verify, budget } => cmd_color(ctx, &file, verify, budget),
        Command::Chi { file, exact, budget } => cmd_chi(ctx, &file, exact, budget),
        Command::Verify { file } => cmd_verify(ctx, &file),
        Command::Classify { file } => cmd_classify(ctx, &file),
        Command::Gen { family } => cmd_gen(ctx, family),
        Command::Export { file, dot: _ } => {
            let doc = ctx.read(&file)?;
            let text = dot::export_dot(&doc.names, &doc.graph, doc.coloring.as_ref());
            ctx.write(&text)
        }
        Command::Channels { file } => cmd_channels(ctx, &file),
        Command::ChiPrime { file, budget: nodes } => {
            let doc = ctx.read(&file)?;
            let chi = chromatic_index_with_budget(&doc.graph, budget(nodes))?;
            ctx.write(&format!("{chi}\n"))
        }
        Command::EdgeColor {
            file,
            colors,
            budget,
        } => cmd_edge_color(ctx, &file, colors, budget),
    }
}

/// Runs one command line (program name first) against the given streams
/// and returns the exit status.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    0
                }
                _ => {
                    let _ = write!(stderr, "{e}");
                    1
                }
            };
        }
    };
    let mut ctx = Ctx { stdin, stdout };
    match dispatch(&mut ctx, cli.command) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
