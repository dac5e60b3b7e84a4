//! Command-line frontend: enumeration, crossing census, coefficient
//! polynomials, saturated closed form, full expansions, and the
//! polynomial-vs-oracle verification harness.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error,
//! 3 resource cap exceeded.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use parawick::coefficients::{
    coefficient_bruteforce, coefficient_polynomial, coefficient_saturated, parafermi_coefficient,
};
use parawick::diagrams::{census_to_json, crossing_census, double_factorial_odd, enumerate_matchings};
use parawick::expansion::{expand, RenderFormat, RenderOptions};
use parawick::partitions::{generate_partitions, verify_pn_identity};
use parawick::{ChordDiagram, Error, FieldPattern, Limits};

#[derive(Parser)]
#[command(
    name = "parawick",
    version,
    about = "Exact contraction expansions of parabose/parafermi vacuum matrix elements"
)]
struct Cli {
    /// Largest chord count n accepted by enumeration ((2n-1)!! diagrams).
    #[arg(long, global = true, default_value_t = 8, value_name = "N")]
    max_n: usize,

    /// Elementary-product budget for brute-force sums.
    #[arg(long, global = true, default_value_t = 100_000_000, value_name = "COUNT")]
    oracle_budget: u128,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write output to a file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List all chord diagrams on 2n points with their crossing counts.
    Enumerate {
        /// Number of chords.
        #[arg(long)]
        n: usize,
    },
    /// Crossing census rows for N = 2, 4, ..., 2*max_n.
    Table,
    /// Crossing analysis and coefficient polynomial of one diagram.
    Coeff {
        /// Diagram in `a-b,c-d,...` form, points numbered from 1.
        #[arg(long)]
        diagram: String,
        #[arg(long, value_enum, default_value_t = Kind::Parabose)]
        kind: Kind,
    },
    /// Per-partition table and closed-form coefficient of the maximally
    /// saturated n-chord diagram.
    Saturated {
        /// Number of chords.
        #[arg(long)]
        n: u32,
    },
    /// Full expansion of an N-point vacuum matrix element.
    Expand {
        /// Number of fields N (even).
        #[arg(long)]
        fields: usize,
        #[arg(long, value_enum, default_value_t = Kind::Parabose)]
        kind: Kind,
        /// Also evaluate every coefficient at this order.
        #[arg(long)]
        p: Option<u32>,
        /// Merge terms with equal coefficients.
        #[arg(long)]
        group: bool,
    },
    /// Check set-partition coefficients against the brute-force sum for
    /// every n-chord diagram and p <= p-max, plus the p^n counting identity.
    Verify {
        /// Number of chords.
        #[arg(long)]
        n: usize,
        /// Largest order p to check.
        #[arg(long)]
        p_max: u32,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Parabose,
    Parafermi,
}

enum CliError {
    Core(Error),
    Usage(String),
    VerifyFailed(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(Error::CapExceeded { .. } | Error::BudgetExceeded { .. }) => 3,
            CliError::Core(_) | CliError::Usage(_) => 2,
            CliError::VerifyFailed(_) => 1,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Core(e) => e.to_string(),
            CliError::Usage(msg) | CliError::VerifyFailed(msg) => msg.clone(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let limits = Limits {
        max_n: cli.max_n,
        oracle_budget: cli.oracle_budget,
        ..Limits::default()
    };
    let output = match run(&cli.command, cli.format, &limits) {
        Ok(output) => output,
        Err(e) => {
            eprintln!("error: {}", e.message());
            return ExitCode::from(e.exit_code());
        }
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &output) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{output}"),
    }
    ExitCode::SUCCESS
}

fn run(command: &Command, format: Format, limits: &Limits) -> Result<String, CliError> {
    match command {
        Command::Enumerate { n } => cmd_enumerate(*n, format, limits),
        Command::Table => cmd_table(format, limits),
        Command::Coeff { diagram, kind } => cmd_coeff(diagram, *kind, format, limits),
        Command::Saturated { n } => cmd_saturated(*n, format),
        Command::Expand {
            fields,
            kind,
            p,
            group,
        } => cmd_expand(*fields, *kind, *p, *group, format, limits),
        Command::Verify { n, p_max } => cmd_verify(*n, *p_max, format, limits),
    }
}

fn reject_latex(format: Format, what: &str) -> Result<(), CliError> {
    if format == Format::Latex {
        return Err(CliError::Usage(format!(
            "--format latex is not supported for {what}"
        )));
    }
    Ok(())
}

fn cmd_enumerate(n: usize, format: Format, limits: &Limits) -> Result<String, CliError> {
    reject_latex(format, "enumerate")?;
    let diagrams = enumerate_matchings(n, limits)?;
    match format {
        Format::Text => {
            let mut out = String::new();
            for d in &diagrams {
                writeln!(out, "{d} m={}", d.crossing_count()).unwrap();
            }
            Ok(out)
        }
        Format::Json => {
            let items: Vec<_> = diagrams
                .iter()
                .map(|d| {
                    let mut v = d.to_json();
                    v["crossings"] = json!(d.crossing_count());
                    v
                })
                .collect();
            Ok(format!("{}\n", json!({"n": n, "diagrams": items})))
        }
        Format::Latex => unreachable!(),
    }
}

fn cmd_table(format: Format, limits: &Limits) -> Result<String, CliError> {
    reject_latex(format, "table")?;
    let censuses: Vec<_> = (1..=limits.max_n)
        .map(|n| crossing_census(n, limits).map(|c| (n, c)))
        .collect::<Result<_, _>>()?;
    match format {
        Format::Text => {
            let mut out = String::new();
            for (n, census) in &censuses {
                let max_m = *census.keys().max().unwrap();
                let counts = (0..=max_m)
                    .map(|m| census.get(&m).copied().unwrap_or(0).to_string())
                    .collect::<Vec<_>>()
                    .join(" ");
                let total: u64 = census.values().sum();
                debug_assert_eq!(total, double_factorial_odd(*n));
                writeln!(out, "{counts} | {total}").unwrap();
            }
            Ok(out)
        }
        Format::Json => {
            let rows: Vec<_> = censuses
                .iter()
                .map(|(n, c)| census_to_json(*n, c))
                .collect();
            Ok(format!("{}\n", json!(rows)))
        }
        Format::Latex => unreachable!(),
    }
}

fn cmd_coeff(diagram: &str, kind: Kind, format: Format, limits: &Limits) -> Result<String, CliError> {
    reject_latex(format, "coeff")?;
    let diagram: ChordDiagram = diagram.parse()?;
    let graph = diagram.crossing_graph();
    let poly = match kind {
        Kind::Parabose => coefficient_polynomial(&graph, limits)?,
        Kind::Parafermi => parafermi_coefficient(&graph, limits)?,
    };
    match format {
        Format::Text => {
            let edges = if graph.edge_count() == 0 {
                "(none)".to_string()
            } else {
                graph
                    .edges()
                    .iter()
                    .map(|(i, j)| format!("{i}-{j}"))
                    .collect::<Vec<_>>()
                    .join(",")
            };
            Ok(format!("m={}; edges: {edges}; {poly}\n", graph.edge_count()))
        }
        Format::Json => Ok(format!(
            "{}\n",
            json!({
                "diagram": diagram.to_json(),
                "crossings": graph.edge_count(),
                "edges": graph.edges().iter().map(|&(i, j)| vec![i, j]).collect::<Vec<_>>(),
                "kind": kind_str(kind),
                "coefficient": poly.to_json(),
            })
        )),
        Format::Latex => unreachable!(),
    }
}

fn cmd_saturated(n: u32, format: Format) -> Result<String, CliError> {
    if n == 0 {
        return Err(CliError::Core(Error::InvalidArgument(
            "n must be at least 1".to_string(),
        )));
    }
    reject_latex(format, "saturated")?;
    let rows: Vec<_> = generate_partitions(n).iter().map(|p| p.stats()).collect();
    let poly = coefficient_saturated(n);
    match format {
        Format::Text => {
            let mut out = String::new();
            for (s, stats) in rows.iter().enumerate() {
                writeln!(
                    out,
                    "s={} {} k={} A={} E={}",
                    s + 1,
                    stats.partition,
                    stats.part_count,
                    stats.unequal_pairs,
                    stats.configurations
                )
                .unwrap();
            }
            writeln!(out, "coefficient: {poly}").unwrap();
            Ok(out)
        }
        Format::Json => Ok(format!(
            "{}\n",
            json!({
                "n": n,
                "rows": rows.iter().map(|s| s.to_json()).collect::<Vec<_>>(),
                "coefficient": poly.to_json(),
            })
        )),
        Format::Latex => unreachable!(),
    }
}

fn cmd_expand(
    fields: usize,
    kind: Kind,
    p: Option<u32>,
    group: bool,
    format: Format,
    limits: &Limits,
) -> Result<String, CliError> {
    if format == Format::Latex && p.is_some() {
        return Err(CliError::Usage(
            "--p is not supported with --format latex".to_string(),
        ));
    }
    let pattern = match kind {
        Kind::Parabose => FieldPattern::parabose(fields)?,
        Kind::Parafermi => FieldPattern::parafermi_alternating(fields)?,
    };
    let expansion = expand(&pattern, limits)?;
    let render_format = match format {
        Format::Text => RenderFormat::Text,
        Format::Json => RenderFormat::Json,
        Format::Latex => RenderFormat::Latex,
    };
    let options = RenderOptions {
        group_by_coefficient: group,
        evaluate_at: p,
    };
    let mut output = expansion.render(render_format, &options);
    if !output.ends_with('\n') {
        output.push('\n');
    }
    Ok(output)
}

fn cmd_verify(n: usize, p_max: u32, format: Format, limits: &Limits) -> Result<String, CliError> {
    reject_latex(format, "verify")?;
    let diagrams = enumerate_matchings(n, limits)?;
    for diagram in &diagrams {
        let graph = diagram.crossing_graph();
        let poly = coefficient_polynomial(&graph, limits)?;
        for p in 0..=p_max {
            let oracle = coefficient_bruteforce(&graph, p, limits)?;
            let direct = poly.eval_int(p);
            if direct != oracle {
                return Err(CliError::VerifyFailed(format!(
                    "mismatch at diagram {diagram}, p={p}: polynomial {poly} gives {direct}, brute force gives {oracle}"
                )));
            }
        }
    }
    for p in 0..=p_max {
        if !verify_pn_identity(n as u32, p) {
            return Err(CliError::VerifyFailed(format!(
                "p^n counting identity failed at n={n}, p={p}"
            )));
        }
    }
    let mut lines = vec![
        format!(
            "{} diagrams × {} p-values: all match",
            diagrams.len(),
            p_max + 1
        ),
        format!("p^n identity holds for n={n}, p<={p_max}"),
    ];
    // The four 5-crossing 8-point diagrams have pairwise isomorphic crossing
    // graphs and must share one coefficient polynomial.
    if n == 4 {
        let figures = [
            "1-5,2-6,3-8,4-7",
            "1-4,2-6,3-7,5-8",
            "1-5,2-7,3-6,4-8",
            "1-6,2-5,3-7,4-8",
        ];
        let graphs: Vec<_> = figures
            .iter()
            .map(|f| f.parse::<ChordDiagram>().unwrap().crossing_graph())
            .collect();
        let polys: Vec<_> = graphs
            .iter()
            .map(|g| coefficient_polynomial(g, limits))
            .collect::<Result<_, _>>()?;
        let isomorphic = graphs[1..].iter().all(|g| g.is_isomorphic_to(&graphs[0]));
        let shared = polys[1..].iter().all(|p| *p == polys[0]);
        if !(isomorphic && shared && graphs.iter().all(|g| g.edge_count() == 5)) {
            return Err(CliError::VerifyFailed(
                "the four 5-crossing 8-point diagrams disagree".to_string(),
            ));
        }
        lines.push(format!(
            "5-crossing graphs {}: isomorphic, shared coefficient {}",
            figures.join(" "),
            polys[0]
        ));
    }
    match format {
        Format::Text => Ok(lines.join("\n") + "\n"),
        Format::Json => Ok(format!(
            "{}\n",
            json!({
                "n": n,
                "p_max": p_max,
                "diagrams": diagrams.len(),
                "status": "all match",
                "report": lines,
            })
        )),
        Format::Latex => unreachable!(),
    }
}

fn kind_str(kind: Kind) -> &'static str {
    match kind {
        Kind::Parabose => "parabose",
        Kind::Parafermi => "parafermi",
    }
}
