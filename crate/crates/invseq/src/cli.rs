//! Command-line surface: counting tables, enumeration dumps, bijection
//! application, move-by-move traces, gamma-vectors, distribution polynomials,
//! and the verification harness.
//!
//! Output is deterministic for identical invocations. Every error path exits
//! nonzero and, under `--json` or `--format json`, writes a machine-parsable
//! error object to stderr. Exit codes: 0 ok, 1 check or finding failure,
//! 2 usage error, 3 resource limit.

use crate::bijections::{self, MoveTrace};
use crate::error::Error;
use crate::patterns::{self, resolve_class};
use crate::poly::{self, Stat};
use crate::seq::{InvSeq, Perm};
use crate::stats;
use crate::verify;
use crate::Result;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "invseq",
    version,
    about = "Pattern-restricted inversion sequences: enumeration, statistics, bijections, and exhaustive checks"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum Format {
    #[default]
    Table,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Via {
    Poly,
    Orbits,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StatArg {
    Asc,
    Des,
}

impl From<StatArg> for Stat {
    fn from(s: StatArg) -> Stat {
        match s {
            StatArg::Asc => Stat::Asc,
            StatArg::Des => Stat::Des,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Count class members for every length in a range
    Count {
        /// Registry name (A, B, C, AB, BC, CA, ABC, T) or a class description
        #[arg(long)]
        class: String,
        /// Single length or an inclusive range like 1..6
        #[arg(long)]
        n: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// List all class members of one length
    Enumerate {
        #[arg(long)]
        class: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Apply a bijection to a sequence or permutation
    Map {
        /// One of: alpha, beta, psi, psi-inv, gamma, gamma-inv, big-gamma,
        /// lehmer, lehmer-inv, bcode, bcode-inv
        #[arg(long)]
        bijection: String,
        /// Comma-separated inversion sequence, e.g. 0,0,2
        #[arg(long, conflicts_with = "input_perm")]
        input: Option<String>,
        /// Comma-separated permutation (1-based), e.g. 3,1,2
        #[arg(long = "input-perm")]
        input_perm: Option<String>,
        /// Also print the statistics of input and output
        #[arg(long)]
        with_stats: bool,
        #[arg(long)]
        json: bool,
    },
    /// Trace the moving involution row by row, then the rewrite pass
    Trace {
        #[arg(long)]
        input: String,
        #[arg(long)]
        json: bool,
    },
    /// Run registered exhaustive checks
    Verify {
        /// Check name; repeatable. Default: all registered checks
        #[arg(long = "theorem")]
        theorems: Vec<String>,
        /// Override the per-check default depth
        #[arg(long = "max-n")]
        max_n: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Gamma-vector of a class distribution polynomial
    Gamma {
        #[arg(long)]
        class: String,
        #[arg(long)]
        n: usize,
        /// poly extracts from the distribution polynomial; orbits uses the
        /// modified Foata-Strehl orbit representatives (permutation classes)
        #[arg(long, value_enum, default_value = "poly")]
        via: Via,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Distribution polynomial of a statistic over a class
    Poly {
        #[arg(long)]
        class: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "asc")]
        stat: StatArg,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

/// Parses argv, runs, and returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    let json_errors = wants_json(&cli.command);
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(err) => {
            if json_errors {
                let obj = json!({"error": {"kind": err.kind(), "message": err.to_string()}});
                eprintln!("{obj}");
            } else {
                eprintln!("error: {err}");
            }
            err.exit_code()
        }
    }
}

fn wants_json(cmd: &Command) -> bool {
    match cmd {
        Command::Count { format, .. }
        | Command::Enumerate { format, .. }
        | Command::Gamma { format, .. }
        | Command::Poly { format, .. } => *format == Format::Json,
        Command::Map { json, .. } | Command::Trace { json, .. } | Command::Verify { json, .. } => {
            *json
        }
    }
}

fn dispatch(cmd: Command) -> Result<i32> {
    match cmd {
        Command::Count { class, n, format } => cmd_count(&class, &n, format),
        Command::Enumerate { class, n, format } => cmd_enumerate(&class, n, format),
        Command::Map {
            bijection,
            input,
            input_perm,
            with_stats,
            json,
        } => cmd_map(
            &bijection,
            input.as_deref(),
            input_perm.as_deref(),
            with_stats,
            json,
        ),
        Command::Trace { input, json } => cmd_trace(&input, json),
        Command::Verify {
            theorems,
            max_n,
            json,
        } => cmd_verify(&theorems, max_n, json),
        Command::Gamma {
            class,
            n,
            via,
            format,
        } => cmd_gamma(&class, n, via, format),
        Command::Poly {
            class,
            n,
            stat,
            format,
        } => cmd_poly(&class, n, stat.into(), format),
    }
}

fn parse_range(text: &str) -> Result<(usize, usize)> {
    let parse_one = |s: &str| -> Result<usize> {
        s.trim().parse().map_err(|_| Error::Parse {
            position: 0,
            message: format!("expected a length, found {s:?}"),
        })
    };
    if let Some((lo, hi)) = text.split_once("..") {
        let (lo, hi) = (parse_one(lo)?, parse_one(hi)?);
        if lo > hi {
            return Err(Error::Parse {
                position: 0,
                message: format!("empty range {text:?}"),
            });
        }
        Ok((lo, hi))
    } else {
        let n = parse_one(text)?;
        Ok((n, n))
    }
}

fn cmd_count(class: &str, range: &str, format: Format) -> Result<i32> {
    let spec = resolve_class(class)?;
    let (lo, hi) = parse_range(range)?;
    let mut rows = Vec::new();
    for n in lo..=hi {
        rows.push((n, patterns::class_count(&spec, n)?));
    }
    match format {
        Format::Table => {
            for (n, count) in &rows {
                println!("{n:>3}  {count}");
            }
        }
        Format::Csv => {
            println!("n,count");
            for (n, count) in &rows {
                println!("{n},{count}");
            }
        }
        Format::Json => {
            let items: Vec<_> = rows
                .iter()
                .map(|(n, count)| json!({"n": n, "count": count}))
                .collect();
            println!("{}", json!({"class": spec.render(), "rows": items}));
        }
    }
    Ok(0)
}

fn cmd_enumerate(class: &str, n: usize, format: Format) -> Result<i32> {
    let spec = resolve_class(class)?;
    let mut members: Vec<Vec<usize>> = Vec::new();
    patterns::visit_class_members(&spec, n, |w| members.push(w.to_vec()))?;
    match format {
        Format::Table | Format::Csv => {
            for w in &members {
                println!("{}", join(w));
            }
        }
        Format::Json => {
            println!(
                "{}",
                json!({"class": spec.render(), "n": n, "members": members})
            );
        }
    }
    Ok(0)
}

fn join(w: &[usize]) -> String {
    w.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Statistics payload for either kind of word: the full profile for an
/// inversion sequence, the order-driven subset for a permutation.
fn word_stats(w: &[usize], is_inv_seq: bool) -> serde_json::Value {
    if is_inv_seq {
        let e = InvSeq::new(w.to_vec()).expect("validated earlier");
        serde_json::to_value(stats::profile(&e)).expect("profile serializes")
    } else {
        json!({
            "n": w.len(),
            "asc": stats::asc_positions(w),
            "des": stats::des_positions(w),
            "dt": stats::descent_tops(w),
        })
    }
}

enum Io {
    SeqToSeq(fn(&InvSeq) -> Result<InvSeq>),
    PermToSeq(fn(&Perm) -> InvSeq),
    SeqToPerm(fn(&InvSeq) -> Result<Perm>),
}

fn cmd_map(
    bijection: &str,
    input: Option<&str>,
    input_perm: Option<&str>,
    with_stats: bool,
    json_out: bool,
) -> Result<i32> {
    let io = match bijection {
        "alpha" => Io::SeqToSeq(bijections::alpha),
        "beta" => Io::SeqToSeq(bijections::beta),
        "psi" => Io::SeqToSeq(bijections::psi),
        "psi-inv" => Io::SeqToSeq(bijections::psi_inv),
        "gamma" => Io::SeqToSeq(bijections::gamma_map),
        "gamma-inv" => Io::SeqToSeq(bijections::gamma_map_inv),
        "big-gamma" => Io::SeqToSeq(bijections::gamma_involution),
        "lehmer" => Io::PermToSeq(crate::codes::lehmer),
        "bcode" => Io::PermToSeq(crate::codes::b_code),
        "lehmer-inv" => Io::SeqToPerm(|e| Ok(crate::codes::lehmer_inv(e))),
        "bcode-inv" => Io::SeqToPerm(crate::codes::b_decode),
        other => {
            return Err(Error::Parse {
                position: 0,
                message: format!("unknown bijection {other:?}"),
            })
        }
    };
    let need = |opt: Option<&str>, what: &str| -> Result<String> {
        opt.map(str::to_owned).ok_or_else(|| Error::Parse {
            position: 0,
            message: format!("--{what} is required for this bijection"),
        })
    };
    let in_is_seq = matches!(io, Io::SeqToSeq(_) | Io::SeqToPerm(_));
    let (input_word, output_word, out_is_seq): (Vec<usize>, Vec<usize>, bool) = match io {
        Io::SeqToSeq(f) => {
            let e: InvSeq = need(input, "input")?.parse()?;
            let out = f(&e)?;
            (e.into_vec(), out.into_vec(), true)
        }
        Io::PermToSeq(f) => {
            let p: Perm = need(input_perm, "input-perm")?.parse()?;
            let out = f(&p);
            (p.into_vec(), out.into_vec(), true)
        }
        Io::SeqToPerm(f) => {
            let e: InvSeq = need(input, "input")?.parse()?;
            let out = f(&e)?;
            (e.into_vec(), out.into_vec(), false)
        }
    };
    if json_out {
        let mut obj = json!({
            "bijection": bijection,
            "input": input_word,
            "output": output_word,
        });
        if with_stats {
            obj["inputStats"] = word_stats(&input_word, in_is_seq);
            obj["outputStats"] = word_stats(&output_word, out_is_seq);
        }
        println!("{obj}");
    } else {
        println!("{}", join(&output_word));
        if with_stats {
            println!("input:  {}", word_stats(&input_word, in_is_seq));
            println!("output: {}", word_stats(&output_word, out_is_seq));
        }
    }
    Ok(0)
}

fn render_trace_rows(input: &InvSeq, trace: &MoveTrace, image: &InvSeq) -> Vec<String> {
    let states = trace.states.as_deref().unwrap_or(&[]);
    let mut rows: Vec<&[usize]> = vec![input.entries()];
    rows.extend(states.iter().map(|s| s.entries()));
    rows.push(image.entries());
    let width = rows
        .iter()
        .flat_map(|r| r.iter())
        .map(|v| v.to_string().len())
        .max()
        .unwrap_or(1);
    rows.iter()
        .map(|r| {
            r.iter()
                .map(|v| format!("{v:>width$}"))
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect()
}

fn cmd_trace(input: &str, json_out: bool) -> Result<i32> {
    let e: InvSeq = input.parse()?;
    let (involuted, trace) = bijections::gamma_involution_traced(&e, true)?;
    let image = bijections::psi(&involuted)?;
    if json_out {
        let obj = json!({
            "input": e.entries(),
            "steps": trace.steps,
            "states": trace.states,
            "image": image.entries(),
        });
        println!("{obj}");
    } else {
        for row in render_trace_rows(&e, &trace, &image) {
            println!("{row}");
        }
    }
    Ok(0)
}

fn cmd_verify(theorems: &[String], max_n: Option<usize>, json_out: bool) -> Result<i32> {
    let results = if theorems.is_empty() {
        verify::check_all(max_n)?
    } else {
        theorems
            .iter()
            .map(|name| verify::check(name, max_n))
            .collect::<Result<Vec<_>>>()?
    };
    let all_pass = results.iter().all(|r| r.passed());
    if json_out {
        println!("{}", serde_json::to_string(&results).expect("serializable"));
    } else {
        for r in &results {
            let status = if r.passed() { "pass" } else { "FAIL" };
            let mut line = format!("{:<18} {:<4} n<={}", r.name, status, r.max_n);
            if let Some(note) = &r.note {
                line.push_str(&format!("  [{note}]"));
            }
            if let Some(c) = &r.counterexample {
                line.push_str(&format!(
                    "  counterexample at n={}: input {} expected {} got {}",
                    c.n, c.input, c.expected, c.got
                ));
            }
            println!("{line}");
        }
        println!(
            "{}",
            if all_pass {
                "all checks passed"
            } else {
                "FAILURES"
            }
        );
    }
    Ok(if all_pass { 0 } else { 1 })
}

fn cmd_gamma(class: &str, n: usize, via: Via, format: Format) -> Result<i32> {
    let spec = resolve_class(class)?;
    let stat = match spec.universe() {
        crate::class_spec::Universe::InvSeqs => Stat::Asc,
        crate::class_spec::Universe::Perms => Stat::Des,
    };
    let h = poly::dist_poly(&spec, n, stat)?;
    let symmetric = poly::is_symmetric(&h, n.saturating_sub(1));
    let unimodal = poly::is_unimodal(&h);
    let gamma: Vec<i64> = match via {
        Via::Poly => {
            let g = poly::gamma_extract(&h, n.saturating_sub(1))?;
            poly::gamma_to_i64(&g)?
        }
        Via::Orbits => {
            let members: Vec<Perm> = patterns::perm_class_members(&spec, n)?.collect();
            crate::actions::gamma_via_orbits(&members)?
                .into_iter()
                .map(|x| x as i64)
                .collect()
        }
    };
    let nonnegative = gamma.iter().all(|&g| g >= 0);
    match format {
        Format::Table => {
            println!(
                "gamma: [{}]",
                gamma
                    .iter()
                    .map(|g| g.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            );
            println!("nonnegative: {nonnegative}");
            println!("symmetric: {symmetric}");
            println!("unimodal: {unimodal}");
        }
        Format::Csv => {
            println!("k,gamma");
            for (k, g) in gamma.iter().enumerate() {
                println!("{k},{g}");
            }
        }
        Format::Json => {
            println!(
                "{}",
                json!({
                    "class": spec.render(),
                    "n": n,
                    "via": if via == Via::Poly { "poly" } else { "orbits" },
                    "gamma": gamma,
                    "nonnegative": nonnegative,
                    "symmetric": symmetric,
                    "unimodal": unimodal,
                })
            );
        }
    }
    Ok(0)
}

fn cmd_poly(class: &str, n: usize, stat: Stat, format: Format) -> Result<i32> {
    let spec = resolve_class(class)?;
    let h = poly::dist_poly(&spec, n, stat)?;
    let coeffs: Vec<i64> = poly::gamma_to_i64(h.coeffs())?;
    match format {
        Format::Table => {
            println!(
                "[{}]",
                coeffs
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            );
        }
        Format::Csv => {
            println!("k,coeff");
            for (k, c) in coeffs.iter().enumerate() {
                println!("{k},{c}");
            }
        }
        Format::Json => {
            println!(
                "{}",
                json!({
                    "class": spec.render(),
                    "n": n,
                    "stat": match stat { Stat::Asc => "asc", Stat::Des => "des" },
                    "coeffs": coeffs,
                    "symmetric": poly::is_symmetric(&h, n.saturating_sub(1)),
                    "unimodal": poly::is_unimodal(&h),
                })
            );
        }
    }
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_parsing() {
        assert_eq!(parse_range("4").unwrap(), (4, 4));
        assert_eq!(parse_range("1..6").unwrap(), (1, 6));
        assert!(parse_range("6..1").is_err());
        assert!(parse_range("x").is_err());
    }

    #[test]
    fn trace_rows_are_aligned() {
        let e: InvSeq = "0,0,0,0,3,3,0,3,3,3,4,6".parse().unwrap();
        let (g, trace) = bijections::gamma_involution_traced(&e, true).unwrap();
        let image = bijections::psi(&g).unwrap();
        let rows = render_trace_rows(&e, &trace, &image);
        assert_eq!(rows.len(), 10);
        assert!(rows.iter().all(|r| r.len() == rows[0].len()));
        assert_eq!(rows[0].replace(' ', ""), "000033033346");
        assert_eq!(rows[9], " 0  1  2  3  0  0  0  0  5  7  9 11");
    }
}
