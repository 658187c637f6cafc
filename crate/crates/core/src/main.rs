use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use rollercoaster::braid::{
    ab_counts, closure_gauss, parse_braid, positive_unknotting, reduction_steps, BraidWord, ReductionStep,
};
use rollercoaster::catalog::{
    load_catalog, parse_catalog, summarize, table_rows, verify_catalog, SHIPPED_CATALOG, SHIPPED_REFS,
};
use rollercoaster::codes::{dt_to_gauss, gauss_to_dt, mirror, parse_dt, parse_gauss, Direction, GaussCode};
use rollercoaster::embed::{pd_from_braid, realize};
use rollercoaster::invariants::{format_jones, identify_polynomial, jones, Identification, ReferenceTable};
use rollercoaster::search::{conjecture_report, enumerate_alternating, write_csv};
use rollercoaster::warp::{min_warp, warp_profile};

#[derive(Parser)]
#[command(name = "rollercoaster", version, about = "Warping degrees, positive braids and knot-table checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Minimal warping degree of a diagram.
    Warp {
        /// DT code, e.g. "[4, 6, 2]"; `-` reads stdin.
        #[arg(long, conflicts_with = "gauss", required_unless_present = "gauss")]
        dt: Option<String>,
        /// File holding a signed Gauss code; `-` reads stdin.
        #[arg(long)]
        gauss: Option<String>,
        /// Print the degree at every basepoint in both directions.
        #[arg(long)]
        all_basepoints: bool,
        /// Use the mirror image.
        #[arg(long)]
        mirror: bool,
        #[arg(long)]
        json: bool,
    },
    /// Operations on a braid word such as "1 1 1" or "s1 s2^-1".
    Braid {
        /// Braid word; `-` reads stdin.
        #[arg(long)]
        word: String,
        #[arg(long)]
        strands: Option<usize>,
        #[arg(long)]
        json: bool,
        #[arg(value_enum)]
        op: BraidOp,
    },
    /// Check every catalog row and print the class counts.
    VerifyCatalog {
        /// Catalog CSV; the shipped one when omitted.
        #[arg(long)]
        catalog: Option<PathBuf>,
        /// Jones reference table; the shipped one when omitted.
        #[arg(long)]
        refs: Option<PathBuf>,
        /// Write per-row reports as JSON here (`-` for stdout).
        #[arg(long)]
        json: Option<String>,
    },
    /// Least warping degree over reduced alternating diagrams, for 3..=max crossings.
    Conjecture {
        #[arg(long)]
        max: usize,
        #[arg(long)]
        json: bool,
    },
    /// List reduced alternating diagrams with the given crossing number.
    Enumerate {
        #[arg(long)]
        crossings: usize,
        /// Write CSV to this file (`-` for stdout).
        #[arg(long)]
        csv: Option<String>,
    },
    /// Jones polynomial of a DT code or braid closure.
    Jones {
        #[arg(long, conflicts_with = "braid", required_unless_present = "braid")]
        dt: Option<String>,
        #[arg(long)]
        braid: Option<String>,
        /// Also name the knot from the reference table.
        #[arg(long)]
        refs: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum BraidOp {
    Counts,
    Unknotting,
    ClosureDt,
    Reduce,
}

enum Failure {
    /// Bad input: exit 2.
    Input(String),
    /// A check failed: exit 1.
    Verification,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    env_logger::init();
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Warp { dt, gauss, all_basepoints, mirror, json } => {
            cmd_warp(dt, gauss, all_basepoints, mirror, json)
        }
        Command::Braid { word, strands, json, op } => cmd_braid(&word, strands, op, json),
        Command::VerifyCatalog { catalog, refs, json } => cmd_verify(catalog, refs, json),
        Command::Conjecture { max, json } => cmd_conjecture(max, json),
        Command::Enumerate { crossings, csv } => cmd_enumerate(crossings, csv),
        Command::Jones { dt, braid, refs } => cmd_jones(dt, braid, refs),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn arg_or_stdin(value: &str) -> Result<String, Failure> {
    if value == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        Ok(value.to_string())
    }
}

fn file_or_stdin(path: &str) -> Result<String, Failure> {
    if path == "-" {
        arg_or_stdin(path)
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{path}: {e}")))
    }
}

fn join<T: ToString>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn direction_name(d: Direction) -> &'static str {
    match d {
        Direction::Forward => "forward",
        Direction::Backward => "backward",
    }
}

fn cmd_warp(dt: Option<String>, gauss: Option<String>, all: bool, mirrored: bool, as_json: bool) -> Outcome {
    let mut code: GaussCode = match (dt, gauss) {
        (Some(d), _) => dt_to_gauss(&parse_dt(&arg_or_stdin(&d)?)?),
        (None, Some(path)) => parse_gauss(&file_or_stdin(&path)?)?,
        (None, None) => return Err(Failure::Input("one of --dt or --gauss is required".into())),
    };
    if mirrored {
        code = mirror(&code);
    }
    let (degree, witness) = min_warp(&code);
    let forward = warp_profile(&code, Direction::Forward);
    let backward = warp_profile(&code, Direction::Backward);
    if as_json {
        let mut v = json!({
            "min_warp": degree,
            "crossings": code.crossings(),
            "witness": witness,
        });
        if all {
            v["profile"] = json!({ "forward": forward, "backward": backward });
        }
        println!("{}", serde_json::to_string_pretty(&v)?);
        return Ok(());
    }
    println!("min_warp: {degree}");
    println!(
        "basepoint: edge {} {}",
        witness.basepoint.edge,
        direction_name(witness.basepoint.direction)
    );
    println!("changed: {}", join(&witness.below));
    if all {
        println!("forward: {}", join(&forward));
        println!("backward: {}", join(&backward));
    }
    Ok(())
}

fn step_lines(step: &ReductionStep) -> String {
    match step {
        ReductionStep::SmoothBigon { bigon, before, after, word, strands } => format!(
            "smooth bigon letters {},{} strands {},{}: (a, b) {:?} -> {:?} = (a-1, b-1); n={} word: {}",
            bigon.first + 1,
            bigon.second + 1,
            bigon.strands.0,
            bigon.strands.1,
            before,
            after,
            strands,
            word
        ),
        ReductionStep::RemoveStrand { certificate, before, after, word, strands } => format!(
            "remove strand {} (m={}): (a, b) {:?} -> {:?} = (a-m-1, b-m); n={} word: {}",
            certificate.removed_strand, certificate.m, before, after, strands, word
        ),
    }
}

fn cmd_braid(word: &str, strands: Option<usize>, op: BraidOp, as_json: bool) -> Outcome {
    let w: BraidWord = parse_braid(&arg_or_stdin(word)?, strands)?;
    match op {
        BraidOp::Counts => {
            let (a, b) = ab_counts(&w)?;
            if as_json {
                println!("{}", json!({ "a": a, "b": b }));
            } else {
                println!("({a}, {b})");
            }
        }
        BraidOp::Unknotting => {
            let u = positive_unknotting(&w)?;
            if as_json {
                println!("{}", json!({ "unknotting": u }));
            } else {
                println!("{u}");
            }
        }
        BraidOp::ClosureDt => {
            let (g, _) = closure_gauss(&w)?;
            let dt = gauss_to_dt(&g)?;
            if as_json {
                println!("{}", json!({ "dt": dt.entries() }));
            } else {
                println!("{dt}");
            }
        }
        BraidOp::Reduce => {
            let steps = reduction_steps(&w)?;
            if as_json {
                println!("{}", serde_json::to_string_pretty(&steps)?);
                return Ok(());
            }
            let (a, b) = ab_counts(&w)?;
            println!("start: (a, b) = ({a}, {b}); n={} word: {w}", w.strands());
            for s in &steps {
                println!("{}", step_lines(s));
            }
            let (n, last) = match steps.last() {
                Some(ReductionStep::SmoothBigon { strands, after, .. })
                | Some(ReductionStep::RemoveStrand { strands, after, .. }) => (*strands, *after),
                None => (w.strands(), (a, b)),
            };
            println!("base: (a, b) = {last:?}; a = n - 1 = {}, b = 0", n - 1);
        }
    }
    Ok(())
}

fn load_refs(refs: Option<PathBuf>) -> Result<ReferenceTable, Failure> {
    Ok(match refs {
        Some(p) => ReferenceTable::load(p)?,
        None => ReferenceTable::parse(SHIPPED_REFS)?,
    })
}

fn cmd_verify(catalog: Option<PathBuf>, refs: Option<PathBuf>, json_out: Option<String>) -> Outcome {
    let refs = load_refs(refs)?;
    let entries = match catalog {
        Some(p) => load_catalog(p)?,
        None => parse_catalog(SHIPPED_CATALOG)?,
    };
    let reports = verify_catalog(&entries, &refs);
    let mut failed = 0;
    for r in &reports {
        if !r.passed() {
            failed += 1;
            let bad: Vec<&str> = r.checks.iter().filter(|c| !c.pass).map(|c| c.name).collect();
            println!(
                "FAIL row {} {}: {} (min_warp {}, expected {}, witness {} crossings, rc {}, identified {})",
                r.row,
                r.name,
                bad.join(", "),
                r.computed_min_warp,
                r.expected,
                r.witness_crossings,
                r.rc_crossing,
                r.identification
            );
        }
        for f in &r.flags {
            println!("FLAG row {} {}: {f}", r.row, r.name);
        }
    }
    let collisions = refs.collisions();
    if collisions.is_empty() {
        println!("jones collisions: none");
    } else {
        for g in &collisions {
            println!("jones collision: {}", g.join(", "));
        }
    }
    println!("rows: {} checked, {} passed, {} failed", reports.len(), reports.len() - failed, failed);
    println!("{}", summarize(&table_rows(&entries)));
    if let Some(out) = json_out {
        let text = serde_json::to_string_pretty(&reports)?;
        if out == "-" {
            println!("{text}");
        } else {
            std::fs::write(&out, text).map_err(|e| Failure::Input(format!("{out}: {e}")))?;
        }
    }
    if failed > 0 {
        Err(Failure::Verification)
    } else {
        Ok(())
    }
}

fn cmd_conjecture(max: usize, as_json: bool) -> Outcome {
    let report = conjecture_report(max)?;
    if as_json {
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        print!("{report}");
    }
    if report.all_match() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn cmd_enumerate(c: usize, csv_out: Option<String>) -> Outcome {
    let codes = enumerate_alternating(c)?;
    match csv_out.as_deref() {
        None => {
            for d in &codes {
                println!("{d}");
            }
        }
        Some("-") => write_csv(c, &codes, std::io::stdout())?,
        Some(path) => {
            let f = std::fs::File::create(path).map_err(|e| Failure::Input(format!("{path}: {e}")))?;
            write_csv(c, &codes, f)?;
        }
    }
    log::info!("{} codes with {c} crossings", codes.len());
    Ok(())
}

fn cmd_jones(dt: Option<String>, braid: Option<String>, refs: Option<PathBuf>) -> Outcome {
    let pd = match (dt, braid) {
        (Some(d), _) => realize(&parse_dt(&arg_or_stdin(&d)?)?)?,
        (None, Some(w)) => pd_from_braid(&parse_braid(&arg_or_stdin(&w)?, None)?)?,
        (None, None) => return Err(Failure::Input("one of --dt or --braid is required".into())),
    };
    let j = jones(&pd)?;
    println!("{}", format_jones(&j));
    if let Some(path) = refs {
        let table = ReferenceTable::load(path)?;
        match identify_polynomial(&j, &table)? {
            Identification::Known { name, mirrored } => {
                println!("knot: {name}{}", if mirrored { " (mirror)" } else { "" })
            }
            Identification::Unknown => println!("knot: unknown"),
        }
    }
    Ok(())
}
