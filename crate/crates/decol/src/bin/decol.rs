//! Command line front end. The library does all the work; this binary only
//! parses arguments, moves files around, and sets exit codes:
//!
//! * 0: success (and, for `verify`, a valid colouring)
//! * 1: an invalid colouring
//! * 2: unusable input (bad arguments, parse errors, violated preconditions)

use clap::{Args, Parser, Subcommand};
use decol::bounds;
use decol::colour::{self, EdgeColouring};
use decol::construct;
use decol::proper;
use decol::{Error, Multigraph};
use std::io::Read;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "decol", about = "Defect-bounded edge colouring of multigraphs", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Colour a graph and print the certificate
    #[command(alias = "color")]
    Colour(ColourArgs),
    /// Check a certificate against a graph
    Verify(VerifyArgs),
    /// Print lower and upper bounds, the constructed colour count, and
    /// optionally the exact value
    Bounds(BoundsArgs),
    /// Emit a named family member as a graph file
    Generate(GenerateArgs),
    /// Expand a simple regular graph into its hardness reduction instance
    Reduce(ReduceArgs),
}

#[derive(Args)]
struct ColourArgs {
    /// Graph file, or '-' for standard input
    graph: String,
    /// Defect bound
    #[arg(short, long)]
    defect: usize,
    /// Use the proper-colouring route (simple graphs only) and bin the
    /// colours down to the defect bound
    #[arg(long)]
    via_proper: bool,
    /// Append each colour class as a comment line of sorted edge ids
    #[arg(long)]
    emit_classes: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Graph file, or '-' for standard input
    graph: String,
    /// Certificate file
    certificate: String,
    /// Expected defect; must match the certificate header if given
    #[arg(short, long)]
    defect: Option<usize>,
}

#[derive(Args)]
struct BoundsArgs {
    /// Graph file, or '-' for standard input
    graph: String,
    /// Defect bound
    #[arg(short, long)]
    defect: usize,
    /// Largest vertex count for the exhaustive density bound
    #[arg(long, default_value_t = bounds::GAMMA_DEFAULT_CUTOFF)]
    gamma_cutoff: usize,
    /// Sample the density bound instead of enumerating (number of samples)
    #[arg(long)]
    sampled: Option<usize>,
    /// Seed for --sampled
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Largest edge count for the exact search
    #[arg(long, default_value_t = bounds::EXACT_DEFAULT_CUTOFF)]
    exact_cutoff: usize,
}

#[derive(Args)]
struct GenerateArgs {
    #[command(subcommand)]
    family: Family,
}

#[derive(Subcommand)]
enum Family {
    /// Triangle multigraph with near-equal multiplicities and degree k
    Shannon {
        #[arg(short, long)]
        k: usize,
    },
    /// The 3-vertex multigraph whose chromatic index exceeds its density
    /// bound at defect 1
    Goldberg,
    /// The d-regular colour-class gadget used inside the reduction
    Gadget {
        #[arg(short, long)]
        k: usize,
        #[arg(short, long)]
        defect: usize,
    },
    /// Hardness reduction instance built over the complete graph K_{k+1}
    Reduction {
        #[arg(short, long)]
        k: usize,
        #[arg(short, long)]
        defect: usize,
    },
    /// Random regular multigraph from a stub pairing
    Random {
        #[arg(short, long)]
        n: usize,
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Random simple graph with independent edges
    Simple {
        #[arg(short, long)]
        n: usize,
        /// Edge probability
        #[arg(short, long)]
        p: f64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Args)]
struct ReduceArgs {
    /// Simple regular graph file, or '-' for standard input
    graph: String,
    /// Odd defect for the reduction
    #[arg(short, long)]
    defect: usize,
}

fn read_graph(path: &str) -> Result<Multigraph, Error> {
    let text = if path == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf).map_err(|e| Error::Parse {
            line: 0,
            message: format!("cannot read standard input: {e}"),
        })?;
        buf
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::Parse {
            line: 0,
            message: format!("cannot read {path}: {e}"),
        })?
    };
    Multigraph::parse(&text)
}

fn run_colour(args: &ColourArgs) -> Result<ExitCode, Error> {
    let g = read_graph(&args.graph)?;
    let colouring = if args.via_proper {
        let proper = proper::vizing_colour(&g)?;
        EdgeColouring::new(proper::bin_colours(&g, &proper, args.defect)?)
    } else {
        colour::colour_defective(&g, args.defect)?
    };
    print!("{}", colouring.to_certificate(args.defect));
    if args.emit_classes {
        let top = colouring.colours().iter().copied().max().unwrap_or(0);
        for c in 0..=top {
            let ids: Vec<String> = colouring
                .colours()
                .iter()
                .enumerate()
                .filter(|&(_, &x)| x == c)
                .map(|(e, _)| e.to_string())
                .collect();
            println!("c class {} {}", c, ids.join(" "));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_verify(args: &VerifyArgs) -> Result<ExitCode, Error> {
    let g = read_graph(&args.graph)?;
    let text = std::fs::read_to_string(&args.certificate).map_err(|e| Error::Parse {
        line: 0,
        message: format!("cannot read {}: {e}", args.certificate),
    })?;
    let (colouring, declared, cert_d) = EdgeColouring::parse_certificate(&text)?;
    if let Some(d) = args.defect {
        if d != cert_d {
            return Err(Error::Precondition(format!(
                "certificate is for defect {cert_d}, but --defect {d} was given"
            )));
        }
    }
    if colouring.colours().len() != g.edge_count() {
        return Err(Error::Precondition(format!(
            "certificate has {} edges, graph has {}",
            colouring.colours().len(),
            g.edge_count()
        )));
    }
    let report = bounds::verify_colouring(&g, colouring.colours(), cert_d)?;
    if !report.valid {
        for v in &report.violations {
            eprintln!(
                "vertex {} has {} edges of colour {} (allowed {})",
                v.vertex, v.count, v.colour, cert_d
            );
        }
        println!("invalid");
        return Ok(ExitCode::from(1));
    }
    if report.num_colours != declared {
        eprintln!("certificate declares {declared} colours but uses {}", report.num_colours);
        println!("invalid");
        return Ok(ExitCode::from(1));
    }
    println!("valid: {} colours at defect {}", report.num_colours, cert_d);
    Ok(ExitCode::SUCCESS)
}

fn run_bounds(args: &BoundsArgs) -> Result<ExitCode, Error> {
    let g = read_graph(&args.graph)?;
    let d = args.defect;
    println!("degree bound          {}", bounds::lower_bound_trivial(&g, d)?);
    if let Some(samples) = args.sampled {
        let gamma = bounds::gamma_d_sampled(&g, d, samples, args.seed)?;
        println!("density bound         {gamma} (sampled, {samples} draws)");
    } else {
        match bounds::gamma_d_with_cutoff(&g, d, args.gamma_cutoff) {
            Ok(gamma) => println!("density bound         {gamma}"),
            Err(Error::CutoffExceeded(_)) => {
                println!("density bound         skipped ({} vertices; see --gamma-cutoff, --sampled)", g.vertex_count())
            }
            Err(e) => return Err(e),
        }
    }
    println!("multiplicity bound    {}", bounds::upper_bound_multiplicity(&g, d)?);
    println!("guaranteed bound      {}", bounds::upper_bound_defective(&g, d)?);
    let constructed = colour::colour_defective(&g, d)?;
    println!("constructed colours   {}", constructed.num_colours());
    match bounds::exact_chi_with_cutoff(&g, d, args.exact_cutoff) {
        Ok(chi) => println!("exact                 {chi}"),
        Err(Error::CutoffExceeded(_)) => {
            println!("exact                 skipped ({} edges; see --exact-cutoff)", g.edge_count())
        }
        Err(e) => return Err(e),
    }
    Ok(ExitCode::SUCCESS)
}

fn run_generate(args: &GenerateArgs) -> Result<ExitCode, Error> {
    let g = match args.family {
        Family::Shannon { k } => construct::shannon_graph(k),
        Family::Goldberg => construct::goldberg_counterexample(),
        Family::Gadget { k, defect } => construct::hardness_gadget(k, defect)?,
        Family::Reduction { k, defect } => {
            construct::np_reduction(&construct::complete_graph(k + 1), defect)?
        }
        Family::Random { n, degree, seed } => {
            construct::random_regular_multigraph(n, degree, seed)?
        }
        Family::Simple { n, p, seed } => {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::Precondition(format!("edge probability {p} not in [0, 1]")));
            }
            construct::random_simple_graph(n, p, seed)
        }
    };
    print!("{}", g.to_graph_file());
    Ok(ExitCode::SUCCESS)
}

fn run_reduce(args: &ReduceArgs) -> Result<ExitCode, Error> {
    let g = read_graph(&args.graph)?;
    let out = construct::np_reduction(&g, args.defect)?;
    print!("{}", out.to_graph_file());
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Colour(a) => run_colour(a),
        Command::Verify(a) => run_verify(a),
        Command::Bounds(a) => run_bounds(a),
        Command::Generate(a) => run_generate(a),
        Command::Reduce(a) => run_reduce(a),
    };
    match result {
        Ok(code) => code,
        Err(e @ (Error::Parse { .. } | Error::Precondition(_))) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
