//! `qcocycle`: batch front end for shadow invariants, quandle homology,
//! cyclic cover presentations and lens-space sums. Output is JSON.

mod specs;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use qcocycle::chain::quandle_homology;
use qcocycle::cover::{cyclic_cover_presentation, dw_lens, torus_lens_comparison};
use qcocycle::knot::shadow_values;
use qcocycle::{Error, Result};

#[derive(Parser)]
#[command(name = "qcocycle", version, about = "Quandle cocycle invariants, homology and branched covers")]
struct Cli {
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Write the JSON document here instead of stdout.
    #[arg(long, global = true)]
    out: Option<String>,
    /// Report progress on stderr.
    #[arg(short, long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Shadow cocycle invariant of a knot diagram.
    Invariant {
        /// PD code: file, inline text, builtin:NAME or torus:p
        #[arg(long)]
        pd: String,
        /// dihedral:p, trivial:m, conj:D6:h or file:PATH
        #[arg(long)]
        quandle: String,
        /// theta:p, theta-odd:p, transfer-b1b2:p, zero or file:PATH
        #[arg(long)]
        cocycle: String,
    },
    /// Homology of the normalized quandle complex.
    Homology {
        /// dihedral:p, trivial:m, conj:D6:h or file:PATH
        #[arg(long)]
        quandle: String,
        /// Chain degree n of H_n
        #[arg(long)]
        degree: usize,
        /// Z or F<p>
        #[arg(long, default_value = "Z")]
        coeff: String,
    },
    /// Presentation and first homology of a cyclic cover.
    Cover {
        /// PD code: file, inline text, builtin:NAME or torus:p
        #[arg(long)]
        pd: String,
        /// Number of sheets l >= 2
        #[arg(long)]
        fold: usize,
        /// Branched cover: also kill the last lift of the first meridian
        #[arg(long)]
        branched: bool,
    },
    /// Lens-space sum for b1 ∪ b2, by triangulation and closed form.
    Dw {
        /// p:q
        #[arg(long)]
        lens: String,
    },
    /// (2,p)-torus shadow invariant against p times the L(p,1) sum.
    Compare {
        /// Odd p >= 3
        #[arg(long)]
        p: usize,
    },
}

fn invariant(pd: &str, quandle: &str, cocycle: &str, verbose: bool) -> Result<Value> {
    let d = specs::diagram(pd)?;
    let q = specs::quandle(quandle)?;
    let f = specs::cocycle(cocycle, &q)?;
    if verbose {
        eprintln!("diagram with {} crossings, quandle of order {}", d.crossing_count(), q.quandle.order());
    }
    let per = shadow_values(&d, &q.quandle, &f)?;
    let inv = qcocycle::knot::shadow_cocycle_invariant(&d, &q.quandle, &f)?;
    let per_json: Vec<Value> = per
        .iter()
        .map(|cv| {
            let vals: Vec<Value> = cv.values.iter().map(|v| if v.len() == 1 { json!(v[0]) } else { json!(v) }).collect();
            json!({ "arcs": cv.arcs, "values": vals })
        })
        .collect();
    Ok(json!({
        "schema": 1,
        "diagram": d.to_json(),
        "quandle": q.quandle.tag().to_string(),
        "cocycle": f.kind(),
        "invariant": inv.to_json(),
        "colorings": per.len(),
        "per_coloring": per_json,
    }))
}

fn run(cli: &Cli) -> Result<Value> {
    match &cli.command {
        Command::Invariant { pd, quandle, cocycle } => invariant(pd, quandle, cocycle, cli.verbose),
        Command::Homology { quandle, degree, coeff } => {
            let q = specs::quandle(quandle)?;
            let h = quandle_homology(&q.quandle, *degree, specs::coefficients(coeff)?)?;
            let mut v = serde_json::to_value(&h).map_err(|e| Error::Internal(e.to_string()))?;
            v["schema"] = json!(1);
            v["quandle"] = json!(q.quandle.tag().to_string());
            Ok(v)
        }
        Command::Cover { pd, fold, branched } => {
            let d = specs::diagram(pd)?;
            let pres = cyclic_cover_presentation(&d, *fold, *branched)?;
            let ab = pres.abelianization()?;
            Ok(json!({
                "schema": 1,
                "fold": fold,
                "branched": branched,
                "presentation": pres.to_json(),
                "abelianization": { "rank": ab.rank, "torsion": ab.torsion, "pretty": ab.to_string() },
            }))
        }
        Command::Dw { lens } => {
            let (p, q) = specs::lens(lens)?;
            Ok(dw_lens(p, q)?.to_json())
        }
        Command::Compare { p } => Ok(torus_lens_comparison(*p)?.to_json()),
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::ResourceLimit(_) => 3,
        Error::Internal(_) => 4,
        _ => 2,
    }
}

fn configure_workers(workers: Option<usize>) -> Result<()> {
    #[cfg(feature = "parallel")]
    if let Some(n) = workers {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global()
            .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
    }
    #[cfg(not(feature = "parallel"))]
    let _ = workers;
    Ok(())
}

fn emit(doc: &Value, out: Option<&str>) -> std::io::Result<()> {
    let mut text = serde_json::to_string_pretty(doc).expect("JSON values serialize");
    text.push('\n');
    match out {
        Some(path) => std::fs::write(path, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_workers(cli.workers).and_then(|()| run(&cli));
    match result {
        Ok(doc) => match emit(&doc, cli.out.as_deref()) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: cannot write output: {e}");
                ExitCode::from(2)
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
