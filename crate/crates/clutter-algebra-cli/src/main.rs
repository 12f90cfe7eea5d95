mod commands;
mod report;
mod sweep;

use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use clutter_algebra::clutter::DEFAULT_BALANCE_CAP;
use clutter_algebra::graphs::{Poset, DEFAULT_IRREDUCIBLE_CAP, DEFAULT_SUBGRAPH_CAP};
use clutter_algebra::rounding::{RoundingOptions, DEFAULT_BOX, DEFAULT_BOX_LIMIT, DEFAULT_MINOR_CAP, DEFAULT_SUBRING_CAP};
use clutter_algebra::symbolic::DEFAULT_SYMBOLIC_CAP;
use clutter_algebra::{Error, Result};

use commands::System;
use report::{exit_code_for, Report, EXIT_TRUE};
use sweep::{Conjecture, SweepConfig};

/// Exact decision procedures for clutters, edge ideals and their blowup algebras.
///
/// Exit status: 0 property holds or computation done, 1 property fails (certificate
/// printed), 2 usage or input error, 3 instance over a cap, 4 internal cross-check failed.
#[derive(Parser)]
#[command(name = "clutter-algebra", version)]
struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Input {
    /// Clutter file ("vertices: ..." then one edge per line) or matrix file ("rows cols" then rows); "-" reads stdin.
    path: PathBuf,
}

#[derive(Args)]
struct RoundingCaps {
    /// Largest right-hand side entry tried by the box search.
    #[arg(long, default_value_t = DEFAULT_BOX)]
    box_max: u32,
    /// Most right-hand sides tried by the box search; the box shrinks to fit.
    #[arg(long, default_value_t = DEFAULT_BOX_LIMIT)]
    box_limit: usize,
    /// Most vectors below the columns before the Hilbert basis route is skipped.
    #[arg(long, default_value_t = DEFAULT_SUBRING_CAP)]
    subring_cap: usize,
}

impl RoundingCaps {
    fn options(&self) -> RoundingOptions {
        RoundingOptions { box_max: self.box_max, box_limit: self.box_limit, subring_cap: self.subring_cap }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Minimal vertex covers.
    Covers(Input),
    /// The blocker: clutter of minimal vertex covers, in clutter format.
    Blocker(Input),
    /// A minor obtained by deleting and contracting vertices.
    Minors {
        #[command(flatten)]
        input: Input,
        /// Vertices to delete, comma separated.
        #[arg(long, value_delimiter = ',')]
        delete: Vec<String>,
        /// Vertices to contract, comma separated.
        #[arg(long, value_delimiter = ',')]
        contract: Vec<String>,
    },
    /// Covering number alpha0 and matching number beta1.
    AlphaBeta(Input),
    /// Konig property: alpha0 = beta1.
    Koenig(Input),
    /// Packing property: every minor is Konig.
    Packing {
        #[command(flatten)]
        input: Input,
        /// Largest vertex count for the minor search.
        #[arg(long, default_value_t = clutter_algebra::clutter::DEFAULT_PACKING_CAP)]
        max_vertices: usize,
    },
    /// Perfect matching.
    Matching(Input),
    /// Balancedness of a binary matrix.
    Balanced {
        #[command(flatten)]
        input: Input,
        /// Largest rows plus columns searched for an odd hole.
        #[arg(long, default_value_t = DEFAULT_BALANCE_CAP)]
        max_size: usize,
    },
    /// Smith normal form.
    Snf(Input),
    /// Gcd of the nonzero r x r minors.
    Delta {
        #[command(flatten)]
        input: Input,
        /// Minor size; defaults to the rank.
        #[arg(long)]
        r: Option<usize>,
    },
    /// Normality of the edge ideal.
    Normal(Input),
    /// Integer rounding of xA >= 1 (ge), of x >= 0, xA <= 1 (le) or of xA <= 1 (eq).
    Irp {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        system: System,
        #[command(flatten)]
        caps: RoundingCaps,
    },
    /// Max-flow min-cut property.
    Mfmc(Input),
    /// Normally torsion-free edge ideal.
    Ntf(Input),
    /// The five equivalent rounding and normality conditions, each by its own route.
    Duality {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        caps: RoundingCaps,
    },
    /// Consequences of max-flow min-cut for uniform clutters.
    UniformConsequences(Input),
    /// The a-invariant of the subring spanned by the vectors below the columns.
    AInvariant(Input),
    /// Minimal generators of the canonical module.
    Canonical {
        #[command(flatten)]
        input: Input,
        /// Largest t-degree searched; defaults to -a + n + 1.
        #[arg(long)]
        window: Option<i64>,
        /// Treat the input as a perfect graph and use its maximal independent sets.
        #[arg(long)]
        perfect_graph: bool,
    },
    /// Gorenstein property of the subring spanned by the vectors below the columns.
    Gorenstein(Input),
    /// Complete intersection test for the edge subring of a connected graph.
    CiBipartite(Input),
    /// Halfspace description of the edge cone of a graph.
    EdgeCone {
        #[command(flatten)]
        input: Input,
        /// Keep redundant inequalities.
        #[arg(long)]
        redundant: bool,
        #[arg(long, default_value_t = DEFAULT_IRREDUCIBLE_CAP)]
        max_vertices: usize,
    },
    /// Minimal generators of the symbolic Rees algebra.
    SymbolicGens {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = DEFAULT_SYMBOLIC_CAP)]
        max_vertices: usize,
    },
    /// Irreducible b-covers: generators of the vertex cover algebra.
    CoverGens {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = DEFAULT_SYMBOLIC_CAP)]
        max_vertices: usize,
    },
    /// Irreducible induced subgraphs of a graph.
    IrreducibleSubgraphs {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = DEFAULT_SUBGRAPH_CAP)]
        max_vertices: usize,
    },
    /// Irreducibility of a graph.
    IrreducibleGraph {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = DEFAULT_IRREDUCIBLE_CAP)]
        max_vertices: usize,
    },
    /// Lift a facet of the cover Rees cone to the cone over the graph.
    ConeLift {
        #[command(flatten)]
        input: Input,
        /// The cover as a monomial, e.g. "x1*x2*x3*t^2".
        #[arg(long)]
        cover: String,
        /// Number of cone steps.
        #[arg(long, default_value_t = 1)]
        times: usize,
    },
    /// Dilworth and Mirsky decompositions, and the clique clutter of the comparability graph.
    Poset(Input),
    /// Hilbert basis of the cone generated by the columns of a matrix.
    HilbertBasis(Input),
    /// Evaluate both sides of an open implication over small instances.
    Sweep {
        #[arg(long, value_enum)]
        conjecture: Conjecture,
        #[arg(long, default_value_t = 5)]
        max_vertices: usize,
        #[arg(long, default_value_t = 5)]
        max_edges: usize,
        /// Restrict to uniform clutters.
        #[arg(long)]
        uniform_only: bool,
        #[arg(long, default_value_t = DEFAULT_MINOR_CAP)]
        minor_cap: usize,
        /// Weight vectors tried per instance when searching for a unimodular triangulation.
        #[arg(long, default_value_t = 8)]
        triangulation_tries: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write each violator here as a clutter file.
        #[arg(long)]
        violators_dir: Option<PathBuf>,
    },
}

fn read(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Error::Parse(e.to_string()))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn clutter_of(i: &Input) -> Result<clutter_algebra::Clutter> {
    commands::load_clutter(&read(&i.path)?)
}

fn matrix_of(i: &Input) -> Result<clutter_algebra::IntMatrix> {
    commands::load_matrix(&read(&i.path)?)
}

enum Outcome {
    Report(Report),
    Sweep(serde_json::Value, Option<PathBuf>),
}

fn dispatch(cmd: &Cmd) -> Result<Outcome> {
    use commands as c;
    let r = match cmd {
        Cmd::Covers(i) => c::covers(&clutter_of(i)?)?,
        Cmd::Blocker(i) => c::blocker_cmd(&clutter_of(i)?)?,
        Cmd::Minors { input, delete, contract } => c::minors(&clutter_of(input)?, delete, contract)?,
        Cmd::AlphaBeta(i) => c::alpha_beta(&clutter_of(i)?)?,
        Cmd::Koenig(i) => c::koenig(&clutter_of(i)?)?,
        Cmd::Packing { input, max_vertices } => c::packing(&clutter_of(input)?, *max_vertices)?,
        Cmd::Matching(i) => c::matching(&clutter_of(i)?)?,
        Cmd::Balanced { input, max_size } => c::balanced(&matrix_of(input)?, *max_size)?,
        Cmd::Snf(i) => c::snf_cmd(&matrix_of(i)?)?,
        Cmd::Delta { input, r } => c::delta(&matrix_of(input)?, *r)?,
        Cmd::Normal(i) => c::normal(&clutter_of(i)?)?,
        Cmd::Irp { input, system, caps } => c::irp(&matrix_of(input)?, *system, caps.options())?,
        Cmd::Mfmc(i) => c::mfmc(&clutter_of(i)?)?,
        Cmd::Ntf(i) => c::ntf(&clutter_of(i)?)?,
        Cmd::Duality { input, caps } => c::duality(&clutter_of(input)?, caps.options())?,
        Cmd::UniformConsequences(i) => c::uniform_consequences(&clutter_of(i)?)?,
        Cmd::AInvariant(i) => c::a_invariant(&matrix_of(i)?)?,
        Cmd::Canonical { input, window, perfect_graph } => c::canonical_cmd(&read(&input.path)?, *window, *perfect_graph)?,
        Cmd::Gorenstein(i) => c::gorenstein(&matrix_of(i)?)?,
        Cmd::CiBipartite(i) => c::ci_bipartite(&clutter_of(i)?)?,
        Cmd::EdgeCone { input, redundant, max_vertices } => c::edge_cone(&clutter_of(input)?, *redundant, *max_vertices)?,
        Cmd::SymbolicGens { input, max_vertices } => c::symbolic_gens(&clutter_of(input)?, *max_vertices)?,
        Cmd::CoverGens { input, max_vertices } => c::cover_gens(&clutter_of(input)?, *max_vertices)?,
        Cmd::IrreducibleSubgraphs { input, max_vertices } => c::irreducible_subgraphs(&clutter_of(input)?, *max_vertices)?,
        Cmd::IrreducibleGraph { input, max_vertices } => c::irreducible_graph(&clutter_of(input)?, *max_vertices)?,
        Cmd::ConeLift { input, cover, times } => c::cone_lift(&clutter_of(input)?, cover, *times)?,
        Cmd::Poset(i) => c::poset(&Poset::parse(&read(&i.path)?)?)?,
        Cmd::HilbertBasis(i) => c::hilbert(&matrix_of(i)?)?,
        Cmd::Sweep { conjecture, max_vertices, max_edges, uniform_only, minor_cap, triangulation_tries, seed, out, violators_dir } => {
            let cfg = SweepConfig {
                conjecture: *conjecture,
                max_vertices: *max_vertices,
                max_edges: *max_edges,
                uniform_only: *uniform_only,
                minor_cap: *minor_cap,
                triangulation_tries: *triangulation_tries,
                seed: *seed,
            };
            let v = sweep::run(&cfg, violators_dir.as_deref())?;
            return Ok(Outcome::Sweep(v, out.clone()));
        }
    };
    Ok(Outcome::Report(r))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli.cmd) {
        Ok(Outcome::Report(r)) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&r.render_json()).unwrap_or_default());
            } else {
                print!("{}", r.render_text());
            }
            ExitCode::from(r.status.exit_code() as u8)
        }
        Ok(Outcome::Sweep(v, out)) => {
            let text = serde_json::to_string_pretty(&v).unwrap_or_default();
            match out {
                Some(p) => {
                    if let Err(e) = std::fs::write(&p, text + "\n") {
                        eprintln!("error: {}: {e}", p.display());
                        return ExitCode::from(report::EXIT_USAGE as u8);
                    }
                }
                None => println!("{text}"),
            }
            ExitCode::from(EXIT_TRUE as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            if cli.json {
                println!("{}", serde_json::json!({"error": e.to_string(), "exit": exit_code_for(&e)}));
            }
            ExitCode::from(exit_code_for(&e) as u8)
        }
    }
}
