use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use trefoil::bimodular::bimod_execute;
use trefoil::campaign::{self, Config, Property, Verdict};
use trefoil::cob0::Cob0Morphism;
use trefoil::dot::to_dot;
use trefoil::format::{
    parse_bimodular, parse_cobs, parse_graphs, write_bimodular, write_cob, write_graph,
    write_project,
};
use trefoil::functor::{check_functoriality, functor_bar};
use trefoil::project::Project;
use trefoil::{execute, measure, Error, Orientation};

#[derive(Parser)]
#[command(
    name = "trefoil",
    version,
    about = "Execution of interaction graphs, Cob0 and bimodular composition"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Execute two graphs (or projects) against each other.
    Execute {
        /// Files holding exactly two graph blocks in total.
        files: Vec<PathBuf>,
        /// Also print the cycle count in this mode.
        #[arg(long)]
        measure: Option<Orientation>,
        /// Print the result as DOT instead of text.
        #[arg(long)]
        dot: bool,
        /// Read bimodular graphs and compose them by orbits.
        #[arg(long)]
        bimodular: bool,
    },
    /// Print the number of prime cycles between two graphs.
    Measure {
        files: Vec<PathBuf>,
        #[arg(long, default_value = "directed")]
        orientation: Orientation,
    },
    /// Cobordism operations.
    Cob {
        #[arg(value_enum)]
        action: CobAction,
        files: Vec<PathBuf>,
    },
    /// Run a verification campaign.
    Check {
        property: Property,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        max_vertices: Option<usize>,
        #[arg(long)]
        max_edges: Option<usize>,
        #[arg(long)]
        exhaustive_bound: Option<usize>,
        #[arg(long)]
        max_circles: Option<u64>,
        /// Re-check a counterexample file instead of generating instances.
        #[arg(long)]
        replay: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
    },
    /// Render every graph in a file as DOT.
    Dot { file: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum CobAction {
    Compose,
    Identity,
    Functor,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Lines,
}

fn read_all(files: &[PathBuf]) -> Result<String, Error> {
    let mut text = String::new();
    for f in files {
        let body = fs::read_to_string(f)
            .map_err(|e| Error::PreconditionViolation(format!("{}: {e}", f.display())))?;
        text.push_str(&body);
        text.push('\n');
    }
    Ok(text)
}

fn want_two<T>(mut xs: Vec<T>, what: &str) -> Result<(T, T), Error> {
    if xs.len() != 2 {
        return Err(Error::PreconditionViolation(format!(
            "expected two {what}, found {}",
            xs.len()
        )));
    }
    let b = xs.pop().expect("two");
    let a = xs.pop().expect("two");
    Ok((a, b))
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Execute {
            files,
            measure: orientation,
            dot,
            bimodular,
        } => {
            let text = read_all(&files)?;
            if bimodular {
                let ((_, f), (_, g)) = want_two(parse_bimodular(&text)?, "bimodular graphs")?;
                let out = bimod_execute(&f, &g)?;
                if dot {
                    print!("{}", to_dot("result", out.graph()));
                } else {
                    print!("{}", write_bimodular("result", &out));
                }
                return Ok(ExitCode::SUCCESS);
            }
            let (f, g) = want_two(parse_graphs(&text)?, "graphs")?;
            let orient = orientation.unwrap_or_default();
            let out = f.project().execute(&g.project(), orient)?;
            if dot {
                print!("{}", to_dot("result", &out.graph));
            } else if f.wager.is_some() || g.wager.is_some() {
                print!("{}", write_project("result", &out));
            } else {
                print!("{}", write_graph("result", &out.graph));
            }
            if let Some(o) = orientation {
                let m = measure(&f.graph, &g.graph, o);
                if dot {
                    println!("// measure {o} {m}");
                } else {
                    println!("# measure {o} {m}");
                }
            }
        }
        Command::Measure { files, orientation } => {
            let (f, g) = want_two(parse_graphs(&read_all(&files)?)?, "graphs")?;
            execute(&f.graph, &g.graph)?;
            trefoil::prime_cycles(&f.graph, &g.graph, orientation)?;
            println!("{}", measure(&f.graph, &g.graph, orientation));
        }
        Command::Cob { action, files } => {
            let cobs: Vec<Cob0Morphism> = parse_cobs(&read_all(&files)?)?
                .into_iter()
                .map(|(_, m)| m)
                .collect();
            let Some(first) = cobs.first() else {
                return Err(Error::PreconditionViolation("no cob blocks".into()));
            };
            match action {
                CobAction::Compose => {
                    let mut acc = first.clone();
                    for m in &cobs[1..] {
                        acc = acc.compose(m)?;
                    }
                    print!("{}", write_cob("composite", &acc));
                }
                CobAction::Identity => {
                    for (i, m) in cobs.iter().enumerate() {
                        let out = Cob0Morphism::identity(m.source())
                            .compose(m)?
                            .compose(&Cob0Morphism::identity(m.target()))?;
                        print!("{}", write_cob(&format!("M{}", i + 1), &out));
                    }
                }
                CobAction::Functor => {
                    for (i, m) in cobs.iter().enumerate() {
                        let p = functor_bar(m);
                        print!(
                            "{}",
                            write_project(
                                &format!("F{}", i + 1),
                                &Project::new(p.wager, p.graph.graph().clone())
                            )
                        );
                    }
                    if let [m, n] = cobs.as_slice() {
                        let r = check_functoriality(m, n)?;
                        println!("# composite circles {}", r.composite_circles);
                        println!(
                            "# circles {} + {} + measure {}",
                            r.first_circles, r.second_circles, r.measure_unoriented
                        );
                        println!("# directed measure {}", r.measure_directed);
                        println!(
                            "# functoriality {}",
                            if r.holds() { "holds" } else { "FAILS" }
                        );
                        if !r.holds() {
                            return Ok(ExitCode::from(1));
                        }
                    }
                }
            }
        }
        Command::Check {
            property,
            trials,
            seed,
            max_vertices,
            max_edges,
            exhaustive_bound,
            max_circles,
            replay,
            format,
        } => {
            let report = match replay {
                Some(path) => campaign::replay(property, &read_all(&[path])?)?,
                None => {
                    let d = property.default_config();
                    let cfg = Config {
                        seed,
                        trials: trials.unwrap_or(d.trials),
                        max_vertices: max_vertices.unwrap_or(d.max_vertices),
                        max_edges: max_edges.unwrap_or(d.max_edges),
                        exhaustive_bound: exhaustive_bound.unwrap_or(d.exhaustive_bound),
                        max_circles: max_circles.unwrap_or(d.max_circles),
                    };
                    campaign::run(property, &cfg)
                }
            };
            match format {
                ReportFormat::Text => print!("{}", report.to_text()),
                ReportFormat::Lines => print!("{}", report.to_lines()),
            }
            if report.verdict() == Verdict::Fail {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Dot { file } => {
            for block in parse_graphs(&read_all(&[file])?)? {
                let name = if block.name.is_empty() {
                    "G"
                } else {
                    &block.name
                };
                print!("{}", to_dot(name, &block.graph));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_infinite() { 3 } else { 2 })
        }
    }
}
