use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use blocktrans::aut::{self, AutOptions, VertexMap};
use blocktrans::export::{export, Format};
use blocktrans::graph::{
    build_bt_graph, build_btv_graph, build_cayley, hamiltonian_cycle_v, DEFAULT_MAX_CAYLEY_N,
};
use blocktrans::sortdist::{distance, sorting_sequence, SortOptions};
use blocktrans::verify::{self, Suite, VerifyOptions};
use blocktrans::{enumerate_tn, Convention, Cuts, Dihedral, Error, Graph, PartitionClass, Perm};

#[derive(Parser)]
#[command(name = "blocktrans", version, about = "Block transpositions, toric maps and their graphs")]
struct Cli {
    /// Cap on worker threads (default: available parallelism)
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List T_n as "(i,j,k)  CLASS  one-line"
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        class: Option<PartitionClass>,
    },
    /// Export a graph
    Graph {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "bt")]
        kind: Kind,
        #[arg(long, default_value = "edges")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        bounds: Bounds,
    },
    /// Run a verification suite
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        bounds: Bounds,
    },
    /// Block transposition distance of a permutation
    Distance {
        #[arg(long)]
        n: usize,
        /// Images, e.g. "3 2 1"
        #[arg(long)]
        perm: String,
        #[arg(long)]
        trace: bool,
    },
    /// Automorphism group of a graph
    Aut {
        #[arg(long)]
        n: usize,
        #[arg(long = "graph", alias = "kind", value_enum, default_value = "bt")]
        kind: Kind,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        bounds: Bounds,
    },
    /// Hamiltonian cycle of the graph on V
    Hampath {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Args)]
struct Bounds {
    /// Raise or lower every Cayley-graph bound
    #[arg(long)]
    max_cayley_n: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Bt,
    Cayley,
    Btv,
}

enum Outcome {
    Pass,
    Fail,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.threads {
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => pool.install(|| dispatch(cli.command)),
            Err(e) => Err(Error::Parse(e.to_string())),
        },
        None => dispatch(cli.command),
    };
    match result {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(cmd: Command) -> blocktrans::Result<Outcome> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let outcome = match cmd {
        Command::Enumerate { n, class } => {
            for c in enumerate_tn(n)? {
                if class.is_none_or(|k| k == c.class()) {
                    writeln!(out, "{c}  {}  {}", c.class(), c.to_perm())?;
                }
            }
            Outcome::Pass
        }
        Command::Graph {
            n,
            kind,
            format,
            out: path,
            bounds,
        } => {
            let max = bounds.max_cayley_n.unwrap_or(DEFAULT_MAX_CAYLEY_N);
            match path {
                Some(p) => {
                    let mut file = BufWriter::new(File::create(p)?);
                    write_graph(n, kind, format, max, &mut file)?;
                    file.flush()?;
                }
                None => write_graph(n, kind, format, max, &mut out)?,
            }
            Outcome::Pass
        }
        Command::Verify {
            n,
            suite,
            json,
            bounds,
        } => {
            let mut opts = VerifyOptions::default();
            if let Some(max) = bounds.max_cayley_n {
                opts = opts.with_max_cayley_n(max);
            }
            let report = verify::run(suite, n, &opts)?;
            if json {
                writeln!(out, "{}", report.to_json())?;
            } else {
                write!(out, "{report}")?;
            }
            if report.all_pass() {
                Outcome::Pass
            } else {
                Outcome::Fail
            }
        }
        Command::Distance { n, perm, trace } => {
            let p: Perm = perm.parse()?;
            if p.degree() != n {
                return Err(Error::DegreeMismatch {
                    left: p.degree(),
                    right: n,
                });
            }
            let opts = SortOptions::default();
            if trace {
                let t = sorting_sequence(&p, opts)?;
                writeln!(out, "{}", t.len())?;
                for line in t.lines() {
                    writeln!(out, "{line}")?;
                }
            } else {
                writeln!(out, "{}", distance(&p, opts)?)?;
            }
            Outcome::Pass
        }
        Command::Aut {
            n,
            kind,
            json,
            bounds,
        } => {
            let max = bounds.max_cayley_n.unwrap_or(DEFAULT_MAX_CAYLEY_N);
            let (order, gens) = match kind {
                Kind::Bt => describe(&build_bt_graph(n)?, n)?,
                Kind::Btv => describe(&build_btv_graph(n)?, n)?,
                Kind::Cayley => {
                    let g = build_cayley(n, Convention::Left, max)?;
                    let opts = AutOptions {
                        max_vertices: g.vertex_count(),
                    };
                    let grp = aut::automorphism_group(&g, opts)?;
                    let label = format!("{} vertex maps", grp.generators.len());
                    (grp.order, vec![label])
                }
            };
            if json {
                let v = serde_json::json!({ "order": order.to_string(), "generators": gens });
                writeln!(out, "{v}")?;
            } else {
                writeln!(out, "order {order}; generators: {}", gens.join(", "))?;
            }
            Outcome::Pass
        }
        Command::Hampath { n } => {
            let cycle = hamiltonian_cycle_v(n)?;
            let g = build_bt_graph(n)?;
            let steps = cycle
                .iter()
                .zip(cycle.iter().cycle().skip(1))
                .filter(|(a, b)| g.has_edge(g.index_of(a).unwrap(), g.index_of(b).unwrap()))
                .count();
            for c in &cycle {
                writeln!(out, "{c}")?;
            }
            let ok = steps == cycle.len();
            writeln!(
                out,
                "# {} vertices; {steps}/{} steps adjacent; {}",
                cycle.len(),
                cycle.len(),
                if ok { "PASS" } else { "FAIL" }
            )?;
            if ok {
                Outcome::Pass
            } else {
                Outcome::Fail
            }
        }
    };
    out.flush()?;
    Ok(outcome)
}

fn write_graph<W: Write>(n: usize, kind: Kind, format: Format, max: usize, sink: W) -> blocktrans::Result<()> {
    match kind {
        Kind::Bt => export(&build_bt_graph(n)?, format, sink),
        Kind::Btv => export(&build_btv_graph(n)?, format, sink),
        Kind::Cayley => export(&build_cayley(n, Convention::Left, max)?, format, sink),
    }
}

/// Order of `Aut(g)` for a graph on cut points, naming the generators `f, g`
/// when the toric-reverse maps generate the computed group.
fn describe(g: &Graph<Cuts>, n: usize) -> blocktrans::Result<(u128, Vec<String>)> {
    let opts = AutOptions::default();
    let grp = aut::automorphism_group(g, opts)?;
    let as_map = |d: Dihedral| -> Option<VertexMap> {
        let images: Option<Vec<usize>> = g
            .legend()
            .iter()
            .map(|c| d.act_on_cuts(c).ok().and_then(|x| g.index_of(&x)))
            .collect();
        images.and_then(|v| VertexMap::from_images(v).ok())
    };
    let named = [
        Dihedral::rotation(n, Convention::Right),
        Dihedral::reflection(n, Convention::Right),
    ]
    .map(as_map);
    if let [Some(f), Some(r)] = &named {
        let gens = [f.clone(), r.clone()];
        let generated = aut::enumerate_group(g.vertex_count(), &gens, grp.order as usize + 1);
        if gens.iter().all(|m| m.is_automorphism_of(g))
            && generated.is_some_and(|all| all.len() as u128 == grp.order)
        {
            return Ok((grp.order, vec!["f".into(), "g".into()]));
        }
    }
    let label = format!("{} vertex maps", grp.generators.len());
    Ok((grp.order, vec![label]))
}
