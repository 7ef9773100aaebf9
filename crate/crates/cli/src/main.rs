use std::fmt::Write as _;
use std::io::{Read, Write as _};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use domino_rsk::cycles::{self, Cycle};
use domino_rsk::harness::{self, RunConfig, VerificationReport, DEFAULT_MAX_RANK};
use domino_rsk::plactic::plactic_classes;
use domino_rsk::rs_maps::{
    g_infinity, g_infinity_inverse, g_r, g_r_inverse, left_tableau, RankSpec,
};
use domino_rsk::young::Bitableau;
use domino_rsk::{DominoTableau, Error, SignedPermutation};

macro_rules! out {
    ($dst:expr, $($arg:tt)*) => {
        write!($dst, $($arg)*).expect("writing to a string")
    };
}

macro_rules! outln {
    ($dst:expr, $($arg:tt)*) => {
        writeln!($dst, $($arg)*).expect("writing to a string")
    };
}

/// Writes `text` to stdout; a closed pipe is not an error.
fn emit(text: &str) -> Result<()> {
    let mut stdout = std::io::stdout().lock();
    match stdout
        .write_all(text.as_bytes())
        .and_then(|()| stdout.flush())
    {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

#[derive(Parser)]
#[command(
    name = "domino-rsk",
    version,
    about = "Domino Robinson-Schensted maps on signed permutations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the tableau pair of a signed permutation.
    Map {
        /// Window notation, e.g. "-4 -3 2 1".
        #[arg(allow_hyphen_values = true)]
        window: String,
        /// A rank, "inf", or "all" (ranks 0..=n followed by inf).
        #[arg(long, default_value = "0")]
        rank: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Recover the signed permutation from a tableau pair.
    Inverse {
        /// JSON `{"p": .., "q": ..}` or `[P, Q]`, inline, `@file` or `-` for stdin.
        image: String,
        #[arg(long, default_value = "0")]
        rank: RankSpec,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Statistics of a domino tableau.
    Stats {
        /// Tableau JSON, inline, `@file` or `-` for stdin.
        tableau: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Cycles, Delta(T) and MT(T, Delta(T)) for a tableau.
    Cycles {
        /// Tableau JSON, inline, `@file` or `-` for stdin.
        #[arg(long, conflicts_with = "window", required_unless_present = "window")]
        tableau: Option<String>,
        /// Use the left tableau of this window instead.
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
        #[arg(long, default_value_t = 0)]
        rank: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Plactic classes of H_n at a rank.
    Classes {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        rank: usize,
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Run a verification suite exhaustively.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        n: usize,
        /// Ranks to sweep, comma separated.
        #[arg(long, value_delimiter = ',')]
        rank: Vec<usize>,
        #[arg(long, env = "DOMINO_RSK_JOBS")]
        jobs: Option<usize>,
        #[arg(long)]
        json: bool,
        /// Restrict the sweep to indices `START..END`.
        #[arg(long)]
        shard: Option<String>,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_MAX_RANK)]
        max_rank: usize,
        /// Include wall-clock time in the report.
        #[arg(long)]
        timing: bool,
    },
}

const CLASSES_MAX_N: usize = 5;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            match e.downcast_ref::<Error>() {
                Some(Error::BudgetExceeded(_)) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Map {
            window,
            rank,
            format,
        } => cmd_map(&window, &rank, format),
        Command::Inverse {
            image,
            rank,
            format,
        } => cmd_inverse(&image, rank, format),
        Command::Stats { tableau, format } => cmd_stats(&tableau, format),
        Command::Cycles {
            tableau,
            window,
            rank,
            format,
        } => cmd_cycles(tableau, window, rank, format),
        Command::Classes { n, rank, max_n } => cmd_classes(n, rank, max_n),
        Command::Verify {
            suite,
            n,
            rank,
            jobs,
            json,
            shard,
            max_n,
            max_rank,
            timing,
        } => {
            let mut config = RunConfig::new(&suite, n);
            config.ranks = rank;
            if let Some(j) = jobs {
                config.jobs = j;
            }
            config.shard = shard.as_deref().map(parse_shard).transpose()?;
            config.max_n = max_n;
            config.max_rank = max_rank;
            config.timing = timing;
            cmd_verify(&config, json)
        }
    }
}

/// Inline text, `@path`, or `-` for stdin.
fn read_input(arg: &str) -> Result<String> {
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else if let Some(path) = arg.strip_prefix('@') {
        std::fs::read_to_string(path).with_context(|| format!("reading {path}"))
    } else {
        Ok(arg.to_string())
    }
}

fn parse_window(s: &str) -> Result<SignedPermutation> {
    Ok(s.parse::<SignedPermutation>()?)
}

fn parse_shard(s: &str) -> Result<(u64, u64)> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| anyhow!("shard must look like START..END"))?;
    Ok((a.trim().parse()?, b.trim().parse()?))
}

fn or_dash(s: String) -> String {
    if s.is_empty() {
        "-\n".into()
    } else {
        s
    }
}

fn map_one(w: &SignedPermutation, rank: RankSpec, format: Format) -> (String, Value) {
    let name = rank.map().name();
    match rank {
        RankSpec::Finite(r) => {
            let (p, q) = g_r(w, r);
            let text = format!(
                "{name}({w})\nP:\n{}Q:\n{}",
                or_dash(p.render_ascii()),
                or_dash(q.render_ascii())
            );
            let value = match format {
                Format::Json => {
                    json!({ "window": w.to_string(), "map": name, "rank": r, "p": p, "q": q })
                }
                Format::Text => Value::Null,
            };
            (text, value)
        }
        RankSpec::Infinite => {
            let (p, q) = g_infinity(w);
            let text = format!(
                "{name}({w})\nP:\n{}Q:\n{}",
                p.render_ascii(),
                q.render_ascii()
            );
            let value = match format {
                Format::Json => {
                    json!({ "window": w.to_string(), "map": name, "rank": "inf", "p": p, "q": q })
                }
                Format::Text => Value::Null,
            };
            (text, value)
        }
    }
}

fn cmd_map(window: &str, rank: &str, format: Format) -> Result<ExitCode> {
    let mut out = String::new();
    let w = parse_window(window)?;
    let ranks: Vec<RankSpec> = if rank == "all" {
        (0..=w.degree())
            .map(RankSpec::Finite)
            .chain([RankSpec::Infinite])
            .collect()
    } else {
        vec![rank.parse()?]
    };
    let rendered: Vec<(String, Value)> = ranks.iter().map(|&r| map_one(&w, r, format)).collect();
    match format {
        Format::Text => {
            let texts: Vec<&str> = rendered.iter().map(|(t, _)| t.as_str()).collect();
            out!(out, "{}", texts.join("\n"));
        }
        Format::Json => {
            let values: Vec<Value> = rendered.into_iter().map(|(_, v)| v).collect();
            let value = if rank == "all" {
                Value::Array(values)
            } else {
                values[0].clone()
            };
            outln!(out, "{}", serde_json::to_string_pretty(&value)?);
        }
    }
    emit(&out)?;
    Ok(ExitCode::SUCCESS)
}

fn split_image(value: Value) -> Result<(Value, Value)> {
    match value {
        Value::Array(mut pair) if pair.len() == 2 => {
            let q = pair.pop().expect("two entries");
            let p = pair.pop().expect("two entries");
            Ok((p, q))
        }
        Value::Object(mut obj) => {
            let p = obj.remove("p").ok_or_else(|| anyhow!("missing field p"))?;
            let q = obj.remove("q").ok_or_else(|| anyhow!("missing field q"))?;
            Ok((p, q))
        }
        _ => bail!("expected [P, Q] or an object with fields p and q"),
    }
}

fn cmd_inverse(image: &str, rank: RankSpec, format: Format) -> Result<ExitCode> {
    let mut out = String::new();
    let (p, q) = split_image(serde_json::from_str(&read_input(image)?).context("parsing image")?)?;
    let w = match rank {
        RankSpec::Finite(r) => {
            let p: DominoTableau = serde_json::from_value(p).context("parsing P")?;
            let q: DominoTableau = serde_json::from_value(q).context("parsing Q")?;
            g_r_inverse(&p, &q, r)?
        }
        RankSpec::Infinite => {
            let p: Bitableau = serde_json::from_value(p).context("parsing P")?;
            let q: Bitableau = serde_json::from_value(q).context("parsing Q")?;
            g_infinity_inverse(&p, &q)?
        }
    };
    match format {
        Format::Text => outln!(out, "{w}"),
        Format::Json => outln!(out, "{}", json!({ "window": w.to_string() })),
    }
    emit(&out)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_stats(tableau: &str, format: Format) -> Result<ExitCode> {
    let mut out = String::new();
    let t: DominoTableau =
        serde_json::from_str(&read_input(tableau)?).context("parsing tableau")?;
    let s = t.statistics();
    let inversions = t.inversions();
    match format {
        Format::Json => {
            let mut value = serde_json::to_value(&s)?;
            value["rank"] = json!(t.rank());
            value["inversions"] = json!(inversions);
            value["sign"] = json!(t.sign());
            outln!(out, "{}", serde_json::to_string_pretty(&value)?);
        }
        Format::Text => {
            out!(out, "{}", or_dash(t.render_ascii()));
            outln!(out, "shape: {:?}", s.shape.parts());
            outln!(out, "vertical: {}", s.vertical);
            outln!(out, "twice_spin: {}", s.twice_spin);
            outln!(out, "eh: {}  ev: {}  d: {}", s.eh, s.ev, s.d);
            outln!(out, "inversions: {}", inversions.len());
            outln!(out, "sign: {}", t.sign());
        }
    }
    emit(&out)?;
    Ok(ExitCode::SUCCESS)
}

fn describe_cycle(c: &Cycle) -> String {
    let labels: Vec<String> = c.labels().iter().map(|l| l.to_string()).collect();
    let mut s = format!("{{{}}}", labels.join(", "));
    match (c.begin_square(), c.final_square()) {
        (Some(b), Some(f)) => s += &format!(" open, begin {b}, final {f}"),
        _ => s += " closed",
    }
    s
}

fn cmd_cycles(
    tableau: Option<String>,
    window: Option<String>,
    rank: usize,
    format: Format,
) -> Result<ExitCode> {
    let mut out = String::new();
    let t = match (tableau, window) {
        (Some(json), _) => {
            serde_json::from_str::<DominoTableau>(&read_input(&json)?).context("parsing tableau")?
        }
        (None, Some(w)) => left_tableau(&parse_window(&w)?, rank),
        (None, None) => bail!("give --tableau or --window"),
    };
    let r = t.canonical_rank()?;
    let all = cycles::cycles(&t)?;
    let delta = cycles::delta(&t)?;
    let moved = cycles::move_through_set(&t, &delta)?;
    let agrees = cycles::rank_shift(&t, r + 1)? == moved;
    match format {
        Format::Json => {
            let value = json!({
                "rank": r,
                "tableau": t,
                "cycles": all,
                "delta": delta,
                "moved": moved,
                "moved_ascii": moved.render_ascii(),
                "rank_shift_agrees": agrees,
            });
            outln!(out, "{}", serde_json::to_string_pretty(&value)?);
        }
        Format::Text => {
            outln!(out, "T (rank {r}):");
            out!(out, "{}", or_dash(t.render_ascii()));
            outln!(out, "cycles:");
            for c in &all {
                outln!(out, "  {}", describe_cycle(c));
            }
            outln!(out, "Delta(T):");
            for c in &delta {
                if c.labels().is_empty() {
                    let s = c.begin_square().expect("empty cycles have a square");
                    outln!(out, "  {{}} absorbs {s}");
                } else {
                    outln!(out, "  {}", describe_cycle(c));
                }
            }
            outln!(out, "MT(T, Delta(T)):");
            out!(out, "{}", or_dash(moved.render_ascii()));
            outln!(out, "equals t_{{{r},{}}}(T): {agrees}", r + 1);
        }
    }
    emit(&out)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_classes(n: usize, r: usize, max_n: Option<usize>) -> Result<ExitCode> {
    let mut out = String::new();
    let limit = max_n.unwrap_or(CLASSES_MAX_N);
    if n > limit {
        return Err(Error::BudgetExceeded(format!(
            "classes is limited to n <= {limit} (requested {n}); pass --max-n to raise it"
        ))
        .into());
    }
    let mut all_match = true;
    let listing: Vec<Value> = plactic_classes(n, r)
        .into_iter()
        .map(|class| {
            let first = class.first().expect("classes are nonempty");
            let lt = left_tableau(first, r);
            let matches = class.iter().all(|w| left_tableau(w, r) == lt);
            all_match &= matches;
            json!({
                "left_tableau": lt,
                "shared_left_tableau": matches,
                "class": class.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
            })
        })
        .collect();
    outln!(out, "{}", serde_json::to_string_pretty(&listing)?);
    emit(&out)?;
    Ok(if all_match {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn print_report(out: &mut String, report: &VerificationReport) {
    for r in &report.results {
        let rank = r.rank.map_or(String::new(), |r| format!(" r={r}"));
        outln!(
            out,
            "{} n={}{rank}: {}/{} inputs pass ({} checks; domain {})",
            report.suite,
            report.n,
            r.cases_passed,
            r.cases,
            r.checks,
            r.domain
        );
        if let Some(c) = &r.first_counterexample {
            outln!(
                out,
                "  first counterexample #{}: {}\n  {}",
                c.index,
                c.input,
                c.detail
            );
        }
    }
    if let Some(ms) = report.elapsed_ms {
        outln!(out, "elapsed: {ms} ms");
    }
    outln!(out, "{}", if report.passed { "PASS" } else { "FAIL" });
}

fn cmd_verify(config: &RunConfig, json: bool) -> Result<ExitCode> {
    let mut out = String::new();
    let report = harness::run(config)?;
    if json {
        outln!(out, "{}", report.to_json());
    } else {
        print_report(&mut out, &report);
    }
    emit(&out)?;
    Ok(if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
