use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use cyclehull::census::{count_band, face_count, face_polynomial};
use cyclehull::hull::{build_hull, HullComplex};
use cyclehull::moebius::{
    double_embed, enumerate_band_partitions, fibre_catalan, fold_fibre, fold_with_trace, FoldPart,
};
use cyclehull::oracle::{self, FiniteMetric};
use cyclehull::{ModelSpace, Partition, SpaceKind};

#[derive(Parser)]
#[command(name = "cyclehull", version, about = "Injective hulls of cycle metrics via partitions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Space {
    Cycle,
    Xn,
}

impl From<Space> for SpaceKind {
    fn from(s: Space) -> Self {
        match s {
            Space::Cycle => SpaceKind::Cycle,
            Space::Xn => SpaceKind::Xn,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Face polynomial of E(C_N), or the number of v-faces
    Census {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        v: Option<u64>,
    },
    /// Vertex functions of E(C_N) or E(X_N)
    Vertices {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        space: Space,
        #[arg(long)]
        json: bool,
    },
    /// 1-skeleton export
    Skeleton {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        space: Space,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
    },
    /// Fold a partition into the band and print the folded sites
    Fold {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        partition: Partition,
    },
    /// Fibre of the folding map over a partition of the band set
    Fibre {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        partition: Partition,
    },
    /// Brute-force tight span of a metric read from a file
    Oracle {
        #[arg(long)]
        metric: PathBuf,
        #[arg(long, default_value_t = oracle::DEFAULT_CAP)]
        cap: usize,
        /// Compare with a construction: cycle:N or xn:N
        #[arg(long, value_parser = parse_target)]
        compare: Option<ModelSpace>,
    },
    /// Size of the band set Y_N^(m), by trace and by enumeration
    Counts {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Doubling embedding into Y_2N°
    Embed {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        partition: Partition,
    },
}

fn parse_target(s: &str) -> Result<ModelSpace, String> {
    let (kind, n) = s
        .split_once(':')
        .ok_or_else(|| format!("expected cycle:N or xn:N, got {s:?}"))?;
    let kind: SpaceKind = kind.parse()?;
    let n: usize = n.parse().map_err(|e| format!("bad N in {s:?}: {e}"))?;
    ModelSpace::new(kind, n).map_err(|e| e.to_string())
}

fn show(p: &Partition) -> String {
    format!("({p})")
}

fn values(v: &[i64]) -> String {
    v.iter().map(i64::to_string).collect::<Vec<_>>().join(" ")
}

fn vertices_text(hull: &HullComplex) -> String {
    let mut out = String::new();
    for (p, f) in &hull.vertices {
        let _ = writeln!(out, "{}\t{}", show(p), values(&f.values));
    }
    out
}

enum Outcome {
    Ok(String),
    Mismatch(String),
}

type Failure = Box<dyn std::error::Error>;

fn run(cmd: Command) -> Result<Outcome, Failure> {
    let text = match cmd {
        Command::Census { n, v } => {
            let poly = face_polynomial(n)?;
            match v {
                Some(v) if n % 2 == 1 => format!("{}\n", face_count(n, v)?),
                Some(v) => format!("{}\n", poly.coeff(v as usize)),
                None => format!("{poly}\n"),
            }
        }
        Command::Vertices { n, space, json } => {
            let hull = build_hull(space.into(), n)?;
            if json {
                let j = hull.to_json();
                let body = serde_json::json!({
                    "space": j["space"],
                    "n": j["n"],
                    "vertices": j["vertices"],
                });
                format!("{}\n", serde_json::to_string_pretty(&body)?)
            } else {
                vertices_text(&hull)
            }
        }
        Command::Skeleton { n, space, format } => {
            let hull = build_hull(space.into(), n)?;
            let graph = hull.skeleton();
            match format {
                Format::Dot => graph.to_dot(),
                Format::Json => {
                    let mut j = graph.to_json();
                    j["space"] = serde_json::json!(hull.space.kind.to_string());
                    j["n"] = serde_json::json!(n);
                    format!("{}\n", serde_json::to_string_pretty(&j)?)
                }
            }
        }
        Command::Fold { n, partition } => {
            let res = fold_with_trace(&partition, n)?;
            let mut out = format!("{}\n", res.partition);
            for step in &res.trace {
                let part = match step.part {
                    FoldPart::Upper => "upper",
                    FoldPart::Lower => "lower",
                };
                let (i, j) = step.position;
                let _ = writeln!(out, "{part} ({i},{j})");
            }
            out
        }
        Command::Fibre { n, partition } => {
            let members = fold_fibre(&partition, n)?;
            let word = fibre_catalan(&partition, n)?;
            let mut out = String::new();
            for m in &members {
                let _ = writeln!(out, "{}", show(m));
            }
            let _ = writeln!(out, "size {} = {} = {}", members.len(), word, word.product());
            out
        }
        Command::Oracle {
            metric,
            cap,
            compare,
        } => {
            let text = std::fs::read_to_string(&metric)
                .map_err(|e| format!("cannot read {}: {e}", metric.display()))?;
            let metric = FiniteMetric::parse(&text)?;
            if let Some(space) = compare {
                let hull = build_hull(space.kind, space.n)?;
                let cmp = oracle::compare(&metric, &hull, cap)?;
                let line = format!("{} vertices, {} edges", cmp.oracle_vertices, cmp.oracle_edges);
                if cmp.is_match() {
                    return Ok(Outcome::Ok(format!("MATCH: {line}\n")));
                }
                return Ok(Outcome::Mismatch(format!(
                    "MISMATCH: oracle {line}; construction {} vertices, {} edges\n",
                    cmp.hull_vertices, cmp.hull_edges
                )));
            }
            let vertices = oracle::tight_span_vertices(&metric, cap)?;
            let edges = oracle::tight_span_edges(&vertices, &metric);
            let mut out = format!("{} vertices, {} edges\n", vertices.len(), edges.len());
            for v in &vertices {
                let coords: Vec<String> = v.iter().map(ToString::to_string).collect();
                let _ = writeln!(out, "vertex {}", coords.join(" "));
            }
            for (a, b) in &edges {
                let _ = writeln!(out, "edge {a} {b}");
            }
            out
        }
        Command::Counts { n, m } => {
            let trace = count_band(n, m)?;
            let enumerated = enumerate_band_partitions(n, m)?.len();
            format!("trace {trace}\nenumeration {enumerated}\n")
        }
        Command::Embed { n, partition } => format!("{}\n", double_embed(&partition, n)?),
    };
    Ok(Outcome::Ok(text))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome::Ok(text)) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Ok(Outcome::Mismatch(text)) => {
            print!("{text}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
