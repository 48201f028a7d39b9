//! Command-line front end.
//!
//! Exit codes: `0` success, `1` domain error or failed check, `2` usage
//! error. Counts are printed in full decimal; in JSON they are strings.

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::bellcore::{weighted_count_by_parts, WeightSeq};
use crate::closedform::{count_family, count_pd_by_parts, count_pd_k, FamilyId, FamilyKind};
use crate::codec::{rank_word, to_binary, unrank_word, BinaryWord, FamilyMap};
use crate::compgen::{enum_colored, enum_family};
use crate::composition::{ColoredComposition, ColoredPart, Composition};
use crate::error::Error;
use crate::verify::verify_all;
use crate::Count;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Plain,
    /// One JSON object per result row.
    #[value(alias = "json-lines")]
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "polycomp",
    version,
    about = "Count, list, rank and map compositions colored by C(n+d-1, d)"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Plain)]
    pub format: OutputFormat,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact counts.
    #[command(subcommand)]
    Count(CountCmd),
    /// Stream objects in canonical order.
    #[command(subcommand)]
    List(ListCmd),
    /// Rank of a binary word with exactly d ones.
    Rank {
        #[arg(long)]
        word: String,
        #[arg(long)]
        d: usize,
    },
    /// Binary word of length n with d ones at a given rank.
    Unrank {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
    /// Map a colored composition into a restricted family, or back.
    Map {
        #[arg(long, value_parser = parse_map)]
        to: FamilyMap,
        #[arg(long)]
        d: usize,
        /// `size^color` list, or a plain composition with --inverse.
        #[arg(long, allow_hyphen_values = true)]
        input: String,
        #[arg(long)]
        inverse: bool,
    },
    /// Run the golden tables and every cross-check.
    Verify {
        #[arg(long, default_value_t = 8)]
        nu_max: usize,
        #[arg(long, default_value_t = 4)]
        d_max: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum CountCmd {
    /// p(d)-color compositions of nu.
    Pd {
        #[arg(long, visible_alias = "n")]
        nu: usize,
        #[arg(long)]
        d: usize,
        #[command(flatten)]
        parts: PartsArgs,
    },
    /// Compositions in a restricted family.
    Family {
        #[arg(long, value_parser = parse_kind)]
        kind: FamilyKind,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// w-color compositions for explicit weights.
    Weighted {
        /// Comma list `w_1,w_2,…`, or a file with one integer per line.
        #[arg(long)]
        weights: String,
        #[arg(long, visible_alias = "nu")]
        n: usize,
        #[command(flatten)]
        parts: PartsArgs,
    },
}

#[derive(Debug, Args)]
pub struct PartsArgs {
    /// Only compositions with exactly this many parts.
    #[arg(long, conflicts_with = "by_parts")]
    k: Option<usize>,
    /// Print the count for every number of parts.
    #[arg(long)]
    by_parts: bool,
}

#[derive(Debug, Subcommand)]
pub enum ListCmd {
    /// p(d)-color compositions of nu.
    Colored {
        #[arg(long, visible_alias = "n")]
        nu: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        k: Option<usize>,
        /// Show the binary word of each row.
        #[arg(long)]
        with_word: bool,
        /// Show the word and the image in a restricted family.
        #[arg(long, value_parser = parse_map)]
        map_to: Option<FamilyMap>,
    },
    /// Compositions in a restricted family, lexicographically.
    Family {
        #[arg(long, value_parser = parse_kind)]
        kind: FamilyKind,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
}

fn parse_kind(s: &str) -> Result<FamilyKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_map(s: &str) -> Result<FamilyMap, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Debug)]
enum Failure {
    Domain(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(io::Error::other(e))
    }
}

type Outcome = std::result::Result<i32, Failure>;

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    0
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    2
                }
            };
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => 0,
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Outcome {
    let fmt = cli.format;
    match &cli.command {
        Command::Count(cmd) => count(cmd, fmt, out),
        Command::List(cmd) => list(cmd, fmt, out),
        Command::Rank { word, d } => {
            let w: BinaryWord = word.parse()?;
            let m = rank_word(&w, *d)?;
            single(
                out,
                fmt,
                "rank",
                &m.to_string(),
                json!({ "word": w.to_string(), "d": d, "rank": m }),
            )
        }
        Command::Unrank { m, n, d } => {
            let w = unrank_word(*m, *n, *d)?.to_string();
            single(
                out,
                fmt,
                "word",
                &w,
                json!({ "rank": m, "n": n, "d": d, "word": w }),
            )
        }
        Command::Map {
            to,
            d,
            input,
            inverse,
        } => {
            if *inverse {
                let c: Composition = input.parse()?;
                let alpha = to.invert(&c, *d)?;
                let row = ColoredRow::new(&alpha, true, None)?;
                single(
                    out,
                    fmt,
                    "colored",
                    &alpha.to_string(),
                    serde_json::to_value(row).expect("row"),
                )
            } else {
                let alpha = ColoredComposition::parse(input, *d)?;
                let row = ColoredRow::new(&alpha, true, Some(*to))?;
                let image = to.apply(&alpha)?.to_string();
                single(
                    out,
                    fmt,
                    "image",
                    &image,
                    serde_json::to_value(row).expect("row"),
                )
            }
        }
        Command::Verify { nu_max, d_max } => {
            if *nu_max == 0 || *d_max == 0 {
                return Err(Error::domain("--nu-max and --d-max must be at least 1").into());
            }
            let report = verify_all(*nu_max, *d_max);
            match fmt {
                OutputFormat::Plain => writeln!(out, "{report}")?,
                OutputFormat::Json => {
                    writeln!(out, "{}", serde_json::to_string(&report).expect("report"))?
                }
                OutputFormat::Csv => {
                    let mut w = csv::Writer::from_writer(&mut *out);
                    w.write_record(["name", "range", "cases", "passed", "counterexample"])?;
                    for c in &report.checks {
                        w.write_record([
                            c.name.as_str(),
                            c.range.as_str(),
                            &c.cases.to_string(),
                            &c.passed.to_string(),
                            c.counterexample.as_deref().unwrap_or(""),
                        ])?;
                    }
                    w.flush()?;
                }
            }
            Ok(if report.passed() { 0 } else { 1 })
        }
    }
}

fn single(
    out: &mut dyn Write,
    fmt: OutputFormat,
    column: &str,
    plain: &str,
    obj: serde_json::Value,
) -> Outcome {
    match fmt {
        OutputFormat::Plain => writeln!(out, "{plain}")?,
        OutputFormat::Json => writeln!(out, "{obj}")?,
        OutputFormat::Csv => writeln!(out, "{column}\n{}", csv_field(plain))?,
    }
    Ok(0)
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn load_weights(arg: &str) -> Result<WeightSeq, Error> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Input(format!("cannot read {arg}: {e}")))?;
        let lines: Vec<&str> = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .collect();
        return lines.join(",").parse();
    }
    arg.parse()
}

fn print_counts(
    out: &mut dyn Write,
    fmt: OutputFormat,
    header: serde_json::Value,
    by_parts: &[Count],
    k: Option<usize>,
    show_parts: bool,
) -> Outcome {
    let total: Count = by_parts.iter().sum();
    let selected = match k {
        Some(k) => by_parts.get(k.wrapping_sub(1)).cloned().unwrap_or_default(),
        None => total.clone(),
    };
    match fmt {
        OutputFormat::Plain => {
            if show_parts {
                let line: Vec<String> = by_parts
                    .iter()
                    .enumerate()
                    .map(|(i, c)| format!("k={}:{c}", i + 1))
                    .collect();
                writeln!(out, "{}", line.join(" "))?;
            } else {
                writeln!(out, "{selected}")?;
            }
        }
        OutputFormat::Json => {
            let mut obj = header;
            if let Some(k) = k {
                obj["k"] = json!(k);
            }
            obj["count"] = json!(selected.to_string());
            if show_parts {
                obj["by_parts"] = by_parts
                    .iter()
                    .enumerate()
                    .map(|(i, c)| json!({ "k": i + 1, "count": c.to_string() }))
                    .collect();
            }
            writeln!(out, "{obj}")?;
        }
        OutputFormat::Csv => {
            if show_parts {
                writeln!(out, "k,count")?;
                for (i, c) in by_parts.iter().enumerate() {
                    writeln!(out, "{},{c}", i + 1)?;
                }
            } else {
                writeln!(out, "count\n{selected}")?;
            }
        }
    }
    Ok(0)
}

fn count(cmd: &CountCmd, fmt: OutputFormat, out: &mut dyn Write) -> Outcome {
    match cmd {
        CountCmd::Pd { nu, d, parts } => {
            if let Some(k) = parts.k {
                if k == 0 {
                    return Err(Error::domain("--k must be at least 1").into());
                }
                let c = count_pd_k(*nu, *d, k)?;
                let mut by = vec![Count::default(); k];
                by[k - 1] = c;
                return print_counts(out, fmt, json!({ "nu": nu, "d": d }), &by, Some(k), false);
            }
            let by = count_pd_by_parts(*nu, *d)?;
            print_counts(
                out,
                fmt,
                json!({ "nu": nu, "d": d }),
                &by,
                None,
                parts.by_parts,
            )
        }
        CountCmd::Family { kind, m, n } => {
            let f = FamilyId::new(*kind, *m)?;
            let c = count_family(f, *n)?;
            let header = json!({ "kind": kind.tag(), "m": m, "n": n });
            print_counts(out, fmt, header, &[c], None, false)
        }
        CountCmd::Weighted { weights, n, parts } => {
            let w = load_weights(weights)?;
            if let Some(k) = parts.k {
                if k == 0 || k > *n {
                    return Err(Error::domain(format!("need 1 <= k <= n, got k={k}, n={n}")).into());
                }
            }
            let by = weighted_count_by_parts(&w, *n)?;
            print_counts(
                out,
                fmt,
                json!({ "n": n, "weights": w.to_string() }),
                &by,
                parts.k,
                parts.by_parts,
            )
        }
    }
}

/// JSON row for a colored composition.
#[derive(Debug, Serialize)]
pub struct ColoredRow {
    pub parts: Vec<ColoredPart>,
    pub d: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub word: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub image: Option<Vec<usize>>,
}

impl ColoredRow {
    fn new(
        alpha: &ColoredComposition,
        with_word: bool,
        map: Option<FamilyMap>,
    ) -> Result<Self, Error> {
        let word = if with_word || map.is_some() {
            Some(to_binary(alpha)?)
        } else {
            None
        };
        let image = match (map, &word) {
            (Some(m), Some(beta)) => Some(m.word_to_composition(beta, alpha.d()).into_parts()),
            _ => None,
        };
        Ok(ColoredRow {
            parts: alpha.parts().to_vec(),
            d: alpha.d(),
            word: word.map(|w| w.to_string()),
            image,
        })
    }
}

fn join(parts: &[usize]) -> String {
    parts
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn list(cmd: &ListCmd, fmt: OutputFormat, out: &mut dyn Write) -> Outcome {
    match cmd {
        ListCmd::Colored {
            nu,
            d,
            k,
            with_word,
            map_to,
        } => {
            let with_word = *with_word || map_to.is_some();
            let stream = enum_colored(*nu, *d, *k)?;
            if fmt == OutputFormat::Csv {
                let mut w = csv::Writer::from_writer(&mut *out);
                w.write_record(["parts", "d", "word", "image"])?;
                for alpha in stream {
                    let row = ColoredRow::new(&alpha, with_word, *map_to)?;
                    let image = row.image.map(|i| join(&i)).unwrap_or_default();
                    w.write_record([
                        alpha.to_string(),
                        d.to_string(),
                        row.word.unwrap_or_default(),
                        image,
                    ])?;
                }
                w.flush()?;
                return Ok(0);
            }
            for alpha in stream {
                let row = ColoredRow::new(&alpha, with_word, *map_to)?;
                if fmt == OutputFormat::Json {
                    writeln!(out, "{}", serde_json::to_string(&row).expect("row"))?;
                    continue;
                }
                let mut line = alpha.to_string();
                if let Some(word) = &row.word {
                    line.push_str(" | ");
                    line.push_str(word);
                }
                if let Some(image) = &row.image {
                    line.push_str(" | ");
                    line.push_str(&join(image));
                }
                writeln!(out, "{line}")?;
            }
            Ok(0)
        }
        ListCmd::Family { kind, m, n } => {
            let f = FamilyId::new(*kind, *m)?;
            if fmt == OutputFormat::Csv {
                writeln!(out, "parts")?;
            }
            for c in enum_family(f, *n)? {
                match fmt {
                    OutputFormat::Plain => writeln!(out, "{c}")?,
                    OutputFormat::Json => writeln!(
                        out,
                        "{}",
                        json!({ "kind": kind.tag(), "m": m, "n": n, "parts": c.parts() })
                    )?,
                    OutputFormat::Csv => writeln!(out, "{}", csv_field(&c.to_string()))?,
                }
            }
            Ok(0)
        }
    }
}
