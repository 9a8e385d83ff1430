//! `facet`: command-line front end for facial edge-coloring tools.
//!
//! Exit codes: 0 on success or acceptance, 1 on a negative verdict, 2 on
//! usage or input errors.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use facet_core::discharging::{audit, structure_report, Conclusion};
use facet_core::embedding::{generate, medial, parse_peg, to_peg, EmbeddedGraph, Family};
use facet_core::facial_coloring::{
    chromatic_index, conflict_graph, parse_coloring, verify, ChromaticIndex, PartialColoring, SolverOptions,
};
use facet_core::nullstellensatz::{coefficient, cn_witness, lemma_polynomial, parse_pairs, LemmaId};
use facet_core::reducibility::{catalog, check, configuration, Configuration};

#[derive(Parser)]
#[command(name = "facet", version, about = "Facial edge-coloring of plane graphs")]
struct Cli {
    /// Emit a single JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GraphArgs {
    /// Graph in PEG format.
    #[arg(long)]
    graph: PathBuf,
    /// Facial distance bound.
    #[arg(long, default_value_t = 3)]
    ell: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Check an edge coloring.
    Verify {
        #[command(flatten)]
        graph: GraphArgs,
        /// Coloring file with `c <edge> <color>` lines.
        #[arg(long)]
        coloring: PathBuf,
        /// Palette size; defaults to 3 * ell + 1.
        #[arg(long)]
        palette: Option<u32>,
        /// Accept colorings that leave edges uncolored.
        #[arg(long)]
        partial: bool,
    },
    /// Exact facial chromatic index.
    Chi {
        #[command(flatten)]
        graph: GraphArgs,
        /// Colors allowed; a larger index is reported as a negative verdict.
        #[arg(long)]
        palette: Option<u32>,
        /// Search nodes per tested color count.
        #[arg(long, default_value_t = 20_000_000)]
        budget: u64,
        /// Write the conflict graph in Graphviz format to this file.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Coefficient of a graph polynomial.
    Cn {
        /// Built-in polynomial.
        #[arg(long, conflicts_with = "pairs", required_unless_present = "pairs")]
        lemma: Option<LemmaId>,
        /// Pairs file with `p i j`, optional `t ...` and `caps ...` lines.
        #[arg(long)]
        pairs: Option<PathBuf>,
        /// Also search for a monomial below the caps.
        #[arg(long)]
        witness: bool,
    },
    /// Check reducibility certificates; all built-in ones by default.
    Reduce {
        /// Configuration JSON document.
        #[arg(long, conflicts_with = "name")]
        config: Option<PathBuf>,
        /// Built-in configuration.
        #[arg(long)]
        name: Option<String>,
        /// List the built-in configurations and exit.
        #[arg(long)]
        list: bool,
    },
    /// Run the discharging rules and audit the result.
    Discharge {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Print the medial graph in PEG format.
    Medial {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Print a generated graph in PEG format.
    Gen {
        /// `cycle:N`, `k4`, `prism:N`, `theta:A,B,C`, `subdivided_k4:L` or `random`.
        family: String,
        /// Seed for `random`.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Face splits for `random`.
        #[arg(long, default_value_t = 6)]
        steps: usize,
    },
    /// Evaluate the structural properties used by the discharging argument.
    Structure {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Facial distance between two edges, or the neighborhood of one edge.
    Distance {
        #[command(flatten)]
        graph: GraphArgs,
        /// One or two edge ids.
        #[arg(required = true, num_args = 1..=2)]
        edges: Vec<usize>,
    },
}

/// Whether the command reached a positive verdict.
enum Verdict {
    Positive,
    Negative,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_graph(path: &Path) -> Result<EmbeddedGraph> {
    parse_peg(&read(path)?).with_context(|| format!("invalid graph {}", path.display()))
}

fn threads() -> usize {
    std::env::var("FACET_THREADS").ok().and_then(|v| v.parse().ok()).filter(|&t| t > 0).unwrap_or(1)
}

/// Writes the result; a closed stdout (e.g. piped into `head`) is not an error.
fn emit(json: bool, doc: serde_json::Value, text: impl FnOnce() -> String) {
    let out = if json {
        format!("{}\n", serde_json::to_string_pretty(&doc).expect("values serialize"))
    } else {
        text()
    };
    let _ = io::stdout().lock().write_all(out.as_bytes());
}

fn verdict(ok: bool) -> Verdict {
    if ok {
        Verdict::Positive
    } else {
        Verdict::Negative
    }
}

fn run(cli: Cli) -> Result<Verdict> {
    let json = cli.json;
    match cli.command {
        Command::Verify { graph, coloring, palette, partial } => {
            let g = load_graph(&graph.graph)?;
            let colors = parse_coloring(&read(&coloring)?, g.edge_count())?;
            let palette = palette.unwrap_or_else(|| PartialColoring::default_palette(graph.ell));
            if let Some(c) = colors.iter().flatten().find(|&&c| c > palette) {
                bail!("color {c} is outside the palette 1..={palette}");
            }
            let report = verify(&g, graph.ell, &colors, !partial)?;
            emit(json, serde_json::to_value(&report)?, || report.to_string());
            Ok(verdict(report.ok))
        }
        Command::Chi { graph, palette, budget, dot } => {
            let g = load_graph(&graph.graph)?;
            if let Some(path) = dot {
                let conflicts = conflict_graph(&g, graph.ell)?;
                fs::write(&path, conflicts.to_dot()).with_context(|| format!("cannot write {}", path.display()))?;
            }
            let palette = palette.unwrap_or_else(|| PartialColoring::default_palette(graph.ell));
            let options = SolverOptions { node_budget: budget, threads: threads(), ..SolverOptions::default() };
            match chromatic_index(&g, graph.ell, &options)? {
                ChromaticIndex::Exact { chi, witness, nodes } => {
                    let doc = json!({"chi": chi, "ell": graph.ell, "palette": palette, "nodes": nodes, "witness": witness});
                    emit(json, doc, || {
                        let mut out = format!("chi = {chi}\nnodes = {nodes}\n");
                        out.push_str(&PartialColoring::total(witness, chi).to_text());
                        out
                    });
                    Ok(verdict(chi <= palette))
                }
                ChromaticIndex::TooLarge { lower, upper, nodes } => {
                    let doc = json!({"chi": null, "lower": lower, "upper": upper, "nodes": nodes});
                    emit(json, doc, || format!("search budget exhausted: {lower} <= chi <= {upper}\n"));
                    Ok(Verdict::Negative)
                }
            }
        }
        Command::Cn { lemma, pairs, witness } => {
            let (conflicts, target, caps, published) = match (lemma, pairs) {
                (Some(id), _) => {
                    let poly = lemma_polynomial(id);
                    (poly.pairs, Some(poly.target), Some(poly.caps), Some(poly.published))
                }
                (None, Some(path)) => {
                    let file = parse_pairs(&read(&path)?)?;
                    if file.target.is_none() && file.caps.is_none() {
                        bail!("{} has neither a `t` nor a `caps` line", path.display());
                    }
                    (file.pairs, file.target, file.caps, None)
                }
                (None, None) => unreachable!("clap requires one of --lemma and --pairs"),
            };
            let value = target.as_ref().map(|t| coefficient(&conflicts, t)).transpose()?;
            let found = match &caps {
                Some(caps) if witness || target.is_none() => Some(cn_witness(&conflicts, caps)?),
                _ => None,
            };
            let doc = json!({
                "factors": conflicts.len(),
                "target": target,
                "coefficient": value,
                "published": published,
                "caps": caps,
                "witness": found,
            });
            emit(json, doc, || {
                let mut out = String::new();
                if let (Some(t), Some(c)) = (&target, &value) {
                    out.push_str(&format!("monomial = {t}\ncoefficient = {}\n", c.value));
                    if let Some(note) = &c.note {
                        out.push_str(&format!("note: {note}\n"));
                    }
                }
                match &found {
                    Some(Some(w)) => out.push_str(&format!("witness = {} (coefficient {})\n", w.monomial, w.coefficient)),
                    Some(None) => out.push_str("witness = none below the caps\n"),
                    None => {}
                }
                out
            });
            let nonzero = value.as_ref().is_none_or(|c| c.value != 0.into());
            let witnessed = found.as_ref().is_none_or(Option::is_some);
            Ok(verdict(nonzero && witnessed))
        }
        Command::Reduce { config, name, list } => {
            if list {
                let all = catalog();
                let doc = json!(all.iter().map(|c| json!({"name": c.name, "description": c.description})).collect::<Vec<_>>());
                emit(json, doc, || all.iter().map(|c| format!("{}: {}\n", c.name, c.description)).collect());
                return Ok(Verdict::Positive);
            }
            let configs: Vec<Configuration> = match (config, name) {
                (Some(path), _) => vec![Configuration::from_json(&read(&path)?)?],
                (None, Some(name)) => vec![configuration(&name)?],
                (None, None) => catalog(),
            };
            let reports = configs.iter().map(check).collect::<Result<Vec<_>, _>>()?;
            let ok = reports.iter().all(|r| r.passed);
            emit(json, serde_json::to_value(&reports)?, || reports.iter().map(|r| format!("{r}\n")).collect());
            Ok(verdict(ok))
        }
        Command::Discharge { graph } => {
            let report = audit(&load_graph(&graph)?)?;
            emit(json, serde_json::to_value(&report)?, || report.to_string());
            Ok(verdict(!matches!(report.conclusion, Conclusion::ProofGap { .. })))
        }
        Command::Medial { graph } => {
            let m = medial(&load_graph(&graph)?)?;
            let peg = to_peg(&m.graph);
            let doc = json!({"peg": peg, "correspondence": m.correspondence});
            emit(json, doc, || peg.clone());
            Ok(Verdict::Positive)
        }
        Command::Gen { family, seed, steps } => {
            let g = if family == "random" {
                generate::random_plane(seed, steps)
            } else {
                family.parse::<Family>()?.build()?
            };
            let peg = to_peg(&g);
            emit(json, json!({"family": family, "peg": peg}), || peg.clone());
            Ok(Verdict::Positive)
        }
        Command::Structure { graph } => {
            let report = structure_report(&load_graph(&graph)?);
            emit(json, serde_json::to_value(&report)?, || report.to_string());
            Ok(Verdict::Positive)
        }
        Command::Distance { graph, edges } => {
            let g = load_graph(&graph.graph)?;
            match edges[..] {
                [e, f] => {
                    let d = g.facial_distance(e, f)?;
                    let text = d.map_or_else(|| "infinity".to_string(), |d| d.to_string());
                    emit(json, json!({"e": e, "f": f, "distance": d}), || format!("distance = {text}\n"));
                }
                [e] => {
                    let near: Vec<usize> = g.facial_neighborhood(graph.ell, e)?.into_iter().collect();
                    let doc = json!({"edge": e, "ell": graph.ell, "neighborhood": near});
                    emit(json, doc, || {
                        let list: Vec<String> = near.iter().map(ToString::to_string).collect();
                        format!("neighborhood size = {}\nneighborhood = {}\n", near.len(), list.join(" "))
                    });
                }
                _ => unreachable!("clap limits the edge count"),
            }
            Ok(Verdict::Positive)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return ExitCode::from(err.exit_code() as u8);
        }
    };
    match run(cli) {
        Ok(Verdict::Positive) => ExitCode::SUCCESS,
        Ok(Verdict::Negative) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
