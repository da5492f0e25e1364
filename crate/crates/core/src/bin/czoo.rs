use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

use czoo::betweenness;
use czoo::graph::{load_graph, LoadOptions, LoopPolicy};
use czoo::output::{self, Format};
use czoo::rank;
use czoo::registry::{self, parse_params, Outcome};
use czoo::{CentralityError, Graph, Result};

#[derive(Parser)]
#[command(name = "czoo", version, about = "Node centrality measures over edge-list graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one measure and write per-node results.
    Compute(ComputeArgs),
    /// List every registered measure with its parameters and requirements.
    List {
        #[arg(long, value_enum, default_value_t = ListFormat::Text)]
        format: ListFormat,
    },
    /// Kendall tau-b between the rankings of two measures.
    Compare(CompareArgs),
    /// Run every measure (or a chosen subset) with default parameters.
    Batch(BatchArgs),
}

#[derive(Args)]
struct GraphArgs {
    /// Edge list: one `u v` or `u v w` per line, `#` comments.
    #[arg(short, long)]
    input: PathBuf,
    #[arg(long)]
    directed: bool,
    /// Read the third column as edge costs.
    #[arg(long)]
    weighted: bool,
    /// Read the third column as strengths and use 1/w as the cost.
    #[arg(long)]
    invert_weights: bool,
    /// Fail on self-loops instead of dropping them.
    #[arg(long)]
    strict_loops: bool,
}

impl GraphArgs {
    fn load(&self) -> Result<Graph> {
        let opts = LoadOptions {
            directed: self.directed,
            weighted: self.weighted || self.invert_weights,
            invert_weights: self.invert_weights,
            loops: if self.strict_loops { LoopPolicy::Reject } else { LoopPolicy::Drop },
        };
        let loaded = load_graph(&self.input, &opts)?;
        for w in &loaded.warnings {
            eprintln!("warning: {w}");
        }
        Ok(loaded.graph)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ListFormat {
    Text,
    Json,
}

#[derive(Args)]
struct ComputeArgs {
    #[command(flatten)]
    graph: GraphArgs,
    #[arg(short, long)]
    measure: String,
    /// Measure parameter as key=value; repeatable.
    #[arg(short, long = "param")]
    params: Vec<String>,
    /// Divide pair sums by (N-1)(N-2).
    #[arg(long)]
    normalize: bool,
    /// Halve pair sums, counting each unordered pair once.
    #[arg(long)]
    halve_undirected: bool,
    /// Output file; standard output when absent.
    #[arg(short, long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = OutFormat::Csv)]
    format: OutFormat,
}

#[derive(Args)]
struct CompareArgs {
    #[command(flatten)]
    graph: GraphArgs,
    #[arg(short = 'a', long)]
    measure_a: String,
    #[arg(short = 'b', long)]
    measure_b: String,
    /// Parameter for the first measure, key=value.
    #[arg(long = "param-a")]
    params_a: Vec<String>,
    /// Parameter for the second measure, key=value.
    #[arg(long = "param-b")]
    params_b: Vec<String>,
}

#[derive(Args)]
struct BatchArgs {
    #[command(flatten)]
    graph: GraphArgs,
    /// Directory receiving one CSV per measure plus _status.csv.
    #[arg(short, long)]
    output: PathBuf,
    /// Comma-separated measure names; all when absent.
    #[arg(long, value_delimiter = ',')]
    measures: Vec<String>,
}

fn write_out(path: Option<&Path>, text: &str) -> Result<()> {
    let io = |source, path: &Path| CentralityError::Io { path: path.to_path_buf(), source };
    match path {
        Some(p) => fs::write(p, text).map_err(|e| io(e, p)),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| io(e, Path::new("<stdout>"))),
    }
}

fn warn_all(outcome: &Outcome) {
    for w in outcome.warnings() {
        eprintln!("warning: {w}");
    }
}

fn compute(a: &ComputeArgs) -> Result<()> {
    let desc = registry::registry().get(&a.measure)?;
    if (a.normalize || a.halve_undirected) && !desc.pair_sum {
        return Err(CentralityError::InvalidArgument(format!(
            "--normalize and --halve-undirected apply only to betweenness-family measures, not {}",
            desc.name
        )));
    }
    let g = a.graph.load()?;
    let params = parse_params(&a.params)?;
    let mut outcome = desc.run(&g, &params)?;
    if let Outcome::Scores(sv) = &mut outcome {
        if a.halve_undirected {
            *sv = betweenness::halved(sv.clone());
        }
        if a.normalize {
            *sv = betweenness::normalized(sv.clone());
        }
    }
    warn_all(&outcome);
    let format = match a.format {
        OutFormat::Csv => Format::Csv,
        OutFormat::Json => Format::Json,
    };
    write_out(a.output.as_deref(), &output::render(&g, desc.name, &outcome, format))
}

fn list(format: ListFormat) -> Result<()> {
    let measures = registry::registry().list();
    let text = match format {
        ListFormat::Text => {
            let mut s = String::new();
            for m in measures {
                s.push_str(&format!("{} [{}] {}: {}\n", m.name, m.kind.name(), m.family, m.summary));
                if !m.aliases.is_empty() {
                    s.push_str(&format!("    aliases: {}\n", m.aliases.join(", ")));
                }
                for p in m.params {
                    s.push_str(&format!(
                        "    param {} = {} ({})\n",
                        p.name,
                        p.default.unwrap_or("auto"),
                        p.range
                    ));
                }
                let flags = m.requires.flags();
                if !flags.is_empty() {
                    s.push_str(&format!("    requires: {}\n", flags.join(", ")));
                }
            }
            s
        }
        ListFormat::Json => {
            let v: Vec<_> = measures
                .iter()
                .map(|m| {
                    json!({
                        "name": m.name,
                        "aliases": m.aliases,
                        "family": m.family,
                        "kind": m.kind.name(),
                        "summary": m.summary,
                        "requires": m.requires.flags(),
                        "params": m.params.iter().map(|p| json!({
                            "name": p.name, "default": p.default, "range": p.range
                        })).collect::<Vec<_>>(),
                    })
                })
                .collect();
            serde_json::to_string_pretty(&v).expect("JSON values always serialize") + "\n"
        }
    };
    write_out(None, &text)
}

fn compare(a: &CompareArgs) -> Result<()> {
    let g = a.graph.load()?;
    let reg = registry::registry();
    let run = |name: &str, params: &[String]| -> Result<czoo::ScoreVector> {
        let out = reg.run(name, &g, &parse_params(params)?)?;
        warn_all(&out);
        out.scores().ok_or_else(|| {
            CentralityError::Comparison(format!("{name} produces a seed set, not per-node scores"))
        })
    };
    let x = run(&a.measure_a, &a.params_a)?;
    let y = run(&a.measure_b, &a.params_b)?;
    let c = rank::compare(&x, &y)?;
    write_out(
        None,
        &format!(
            "measure_a,measure_b,kendall_tau,n\n{},{},{},{}\n",
            c.measure_a,
            c.measure_b,
            output::format_value(c.kendall_tau),
            c.n
        ),
    )
}

fn batch(a: &BatchArgs) -> Result<()> {
    let g = a.graph.load()?;
    let reg = registry::registry();
    let chosen: Vec<_> = if a.measures.is_empty() {
        reg.list().iter().collect()
    } else {
        a.measures.iter().map(|m| reg.get(m)).collect::<Result<_>>()?
    };
    fs::create_dir_all(&a.output).map_err(|source| CentralityError::Io {
        path: a.output.clone(),
        source,
    })?;
    let empty = registry::RawParams::new();
    let results: Vec<(&str, Result<()>)> = chosen
        .par_iter()
        .map(|d| {
            let r = d.run(&g, &empty).and_then(|out| {
                let path = a.output.join(format!("{}.csv", d.name));
                fs::write(&path, output::render(&g, d.name, &out, Format::Csv))
                    .map_err(|source| CentralityError::Io { path, source })
            });
            (d.name, r)
        })
        .collect();
    let mut status = String::from("measure,status,detail\n");
    let mut failed = 0;
    for (name, r) in &results {
        match r {
            Ok(()) => status.push_str(&format!("{name},ok,\n")),
            Err(e) => {
                failed += 1;
                let detail = e.to_string().replace(['\n', ','], ";");
                status.push_str(&format!("{name},{},{detail}\n", e.reason()));
            }
        }
    }
    write_out(Some(&a.output.join("_status.csv")), &status)?;
    if failed > 0 {
        eprintln!("warning: {failed} of {} measures failed; see _status.csv", results.len());
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    czoo::parallel::init_from_env();
    let result = match &cli.command {
        Command::Compute(a) => compute(a),
        Command::List { format } => list(*format),
        Command::Compare(a) => compare(a),
        Command::Batch(a) => batch(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}: {e}", e.reason());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
