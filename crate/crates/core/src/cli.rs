//! Command-line front end: data on stdout, diagnostics on stderr.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 property violation (the
//! witness is printed as JSON on stdout).

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::ddc::{self, Anchor, DotPattern, PeriodicDdc};
use crate::finite_field::Field;
use crate::folding::{folding_directions, Direction};
use crate::group::{GroupSpec, SidonSequence};
use crate::lattice::{Lattice, Shape, Tiling};
use crate::sidon;

#[derive(Debug, Parser)]
#[command(
    name = "sidonfold",
    version,
    about = "Sidon sequences, periodic DDCs and folding"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Reserved; every operation is deterministic.
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Ascii,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Welch,
    Golomb,
    Bose,
    Singer,
    Ruzsa,
    PowerPairs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Sidon,
    WeakSidon,
    Ddc,
    PeriodicDdc,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a Sidon set or a periodic DDC.
    Construct {
        #[arg(long, value_enum)]
        family: Family,
        /// Prime or prime power (also accepted as --p).
        #[arg(long, visible_alias = "p")]
        q: u64,
        /// Primitive element in integer encoding; defaults to the smallest.
        #[arg(long)]
        alpha: Option<u64>,
        /// Second primitive element (Golomb only); defaults to alpha.
        #[arg(long)]
        beta: Option<u64>,
    },
    /// Check a property of a JSON object read from a file or stdin.
    Verify {
        #[arg(long, value_enum)]
        kind: Kind,
        input: Option<PathBuf>,
    },
    /// Fold a cyclic Sidon set onto a tiling.
    Fold {
        #[command(flatten)]
        tiling: TilingArgs,
        #[arg(long, allow_hyphen_values = true)]
        direction: Direction,
        input: Option<PathBuf>,
    },
    /// Unfold a periodic DDC into a cyclic Sidon set.
    Unfold {
        #[arg(long, allow_hyphen_values = true)]
        direction: Direction,
        /// `lower-left`, `origin`, or a dot `x,y`.
        #[arg(long, default_value = "lower-left", allow_hyphen_values = true)]
        anchor: Anchor,
        input: Option<PathBuf>,
    },
    /// List the folding directions of a tiling.
    Directions {
        #[command(flatten)]
        tiling: TilingArgs,
    },
    /// Exhaustive maximum searches.
    Search {
        /// Order of the cyclic group to search.
        #[arg(long, conflicts_with = "max_ddc")]
        max_sidon: Option<u64>,
        /// Search dots on the tiling given by --lattice/--shape.
        #[arg(long, requires = "lattice")]
        max_ddc: bool,
        #[command(flatten)]
        tiling: OptionalTilingArgs,
    },
    /// Draw a periodic DDC or dot pattern read as JSON.
    Render { input: Option<PathBuf> },
}

#[derive(Debug, clap::Args)]
struct TilingArgs {
    /// Generator matrix as JSON, e.g. "[[6,0],[0,7]]".
    #[arg(long)]
    lattice: String,
    /// Shape points as JSON; defaults to the fundamental rectangle.
    #[arg(long)]
    shape: Option<String>,
}

#[derive(Debug, clap::Args)]
struct OptionalTilingArgs {
    #[arg(long)]
    lattice: Option<String>,
    #[arg(long)]
    shape: Option<String>,
}

enum Failure {
    Input(String),
    Violation(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = std::result::Result<String, Failure>;

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let to_stdout = !e.use_stderr();
            let out: &mut dyn Write = if to_stdout { stdout } else { stderr };
            let _ = write!(out, "{}", e.render());
            return if to_stdout { 0 } else { 1 };
        }
    };
    match dispatch(&cli, stdin) {
        Ok(text) => {
            let _ = writeln!(stdout, "{text}");
            0
        }
        Err(Failure::Violation(witness)) => {
            let _ = writeln!(stdout, "{witness}");
            let _ = writeln!(stderr, "property violated");
            2
        }
        Err(Failure::Input(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            1
        }
    }
}

fn read_input(
    path: &Option<PathBuf>,
    stdin: &mut dyn Read,
) -> std::result::Result<String, Failure> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            std::fs::read_to_string(p).map_err(|e| Failure::Input(format!("{}: {e}", p.display())))
        }
        _ => {
            let mut s = String::new();
            stdin.read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn parse_json<T: serde::de::DeserializeOwned>(
    text: &str,
    what: &str,
) -> std::result::Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::Input(format!("malformed {what}: {e}")))
}

fn tiling_from(lattice: &str, shape: Option<&str>) -> std::result::Result<Tiling, Failure> {
    let lattice: Lattice = parse_json(lattice, "lattice")?;
    Ok(match shape {
        Some(s) => Tiling::new(lattice, parse_json::<Shape>(s, "shape")?)?,
        None => Tiling::fundamental(lattice),
    })
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes")
}

/// A cyclic Sidon set as one row, `•` for members.
fn sidon_row(s: &SidonSequence) -> std::result::Result<String, Failure> {
    let mut row = vec!['.'; s.group().order() as usize];
    for e in s.elements() {
        row[s.group().index_of(e)? as usize] = '•';
    }
    Ok(row.into_iter().collect())
}

fn emit_sidon(s: &SidonSequence, format: Format) -> Outcome {
    match format {
        Format::Json => Ok(to_json(s)),
        Format::Ascii => sidon_row(s),
    }
}

fn emit_ddc(c: &PeriodicDdc, format: Format) -> Outcome {
    match format {
        Format::Json => Ok(to_json(c)),
        Format::Ascii => Ok(c.render_ascii()),
    }
}

fn dispatch(cli: &Cli, stdin: &mut dyn Read) -> Outcome {
    match &cli.command {
        Command::Construct {
            family,
            q,
            alpha,
            beta,
        } => construct(*family, *q, *alpha, *beta, cli.format),
        Command::Verify { kind, input } => verify(*kind, &read_input(input, stdin)?),
        Command::Fold {
            tiling,
            direction,
            input,
        } => {
            let t = tiling_from(&tiling.lattice, tiling.shape.as_deref())?;
            let s: SidonSequence = parse_json(&read_input(input, stdin)?, "Sidon sequence")?;
            emit_ddc(&ddc::fold_sidon_to_ddc(&s, &t, *direction)?, cli.format)
        }
        Command::Unfold {
            direction,
            anchor,
            input,
        } => {
            let c: PeriodicDdc = parse_json(&read_input(input, stdin)?, "periodic DDC")?;
            emit_sidon(&ddc::unfold_to_sidon(&c, *direction, *anchor)?, cli.format)
        }
        Command::Directions { tiling } => {
            let t = tiling_from(&tiling.lattice, tiling.shape.as_deref())?;
            let dirs = folding_directions(&t);
            Ok(match cli.format {
                Format::Json => to_json(&dirs),
                Format::Ascii => dirs
                    .iter()
                    .map(|d| format!("{d}\n"))
                    .collect::<String>()
                    .trim_end()
                    .to_string(),
            })
        }
        Command::Search {
            max_sidon,
            max_ddc,
            tiling,
        } => search(*max_sidon, *max_ddc, tiling, cli.format),
        Command::Render { input } => {
            let text = read_input(input, stdin)?;
            if let Ok(c) = serde_json::from_str::<PeriodicDdc>(&text) {
                Ok(c.render_ascii())
            } else {
                Ok(parse_json::<DotPattern>(&text, "dot pattern")?.render_ascii())
            }
        }
    }
}

fn construct(
    family: Family,
    q: u64,
    alpha: Option<u64>,
    beta: Option<u64>,
    format: Format,
) -> Outcome {
    let field_and_alpha = || -> std::result::Result<_, Failure> {
        let field = Field::of_order(q)?;
        let a = match alpha {
            Some(a) => field.from_int(a)?,
            None => field.primitive(),
        };
        Ok((field, a))
    };
    match family {
        Family::Welch => {
            let a = match alpha {
                Some(a) => a,
                None => {
                    let f = Field::new(q, 1)?;
                    f.to_int(&f.primitive())?
                }
            };
            emit_ddc(&ddc::construct_welch(q, a)?, format)
        }
        Family::Golomb => {
            let (field, a) = field_and_alpha()?;
            let b = match beta {
                Some(b) => field.from_int(b)?,
                None => a.clone(),
            };
            emit_ddc(&ddc::construct_golomb(&field, &a, &b)?, format)
        }
        Family::PowerPairs => {
            let (field, a) = field_and_alpha()?;
            emit_sidon(&sidon::construct_power_pairs(&field, &a)?, format)
        }
        Family::Bose => emit_sidon(&sidon::construct_bose(q)?, format),
        Family::Singer => emit_sidon(&sidon::construct_singer(q)?, format),
        Family::Ruzsa => emit_sidon(&sidon::construct_ruzsa(q)?, format),
    }
}

#[derive(Serialize)]
struct Verdict {
    ok: bool,
}

#[derive(Serialize)]
struct Violation<W> {
    ok: bool,
    witness: W,
}

fn verdict<W: Serialize>(r: std::result::Result<(), W>) -> Outcome {
    match r {
        Ok(()) => Ok(to_json(&Verdict { ok: true })),
        Err(witness) => Err(Failure::Violation(to_json(&Violation {
            ok: false,
            witness,
        }))),
    }
}

fn verify(kind: Kind, text: &str) -> Outcome {
    match kind {
        Kind::Sidon => verdict(parse_json::<SidonSequence>(text, "Sidon sequence")?.verify_sidon()),
        Kind::WeakSidon => {
            verdict(parse_json::<SidonSequence>(text, "Sidon sequence")?.verify_weak_sidon())
        }
        Kind::Ddc => verdict(ddc::is_ddc(&parse_json::<DotPattern>(text, "dot pattern")?)),
        Kind::PeriodicDdc => {
            verdict(parse_json::<PeriodicDdc>(text, "periodic DDC")?.is_doubly_periodic_ddc())
        }
    }
}

#[derive(Serialize)]
struct Found<W> {
    max: usize,
    witness: W,
}

fn search(
    max_sidon: Option<u64>,
    max_ddc: bool,
    tiling: &OptionalTilingArgs,
    format: Format,
) -> Outcome {
    if let Some(n) = max_sidon {
        let r = sidon::max_sidon_size(&GroupSpec::cyclic(n)?)?;
        return match format {
            Format::Json => Ok(to_json(&Found {
                max: r.max,
                witness: r.witness.residues().expect("cyclic group"),
            })),
            Format::Ascii => sidon_row(&r.witness),
        };
    }
    if max_ddc {
        let lattice = tiling.lattice.as_deref().expect("clap enforces --lattice");
        let t = tiling_from(lattice, tiling.shape.as_deref())?;
        let r = ddc::max_ddc_dots(&t)?;
        return match format {
            Format::Json => Ok(to_json(&Found {
                max: r.max,
                witness: r.witness,
            })),
            Format::Ascii => Ok(r.witness.render_ascii()),
        };
    }
    Err(Failure::Input(
        "search needs --max-sidon N or --max-ddc".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], input: &str) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("sidonfold").chain(args.iter().copied());
        let code = run(argv, &mut input.as_bytes(), &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn max_sidon_search() {
        let (code, out, _) = call(&["search", "--max-sidon", "7"], "");
        assert_eq!(code, 0);
        assert_eq!(out.trim(), r#"{"max":3,"witness":[0,1,3]}"#);
    }

    #[test]
    fn usage_errors_exit_one() {
        assert_eq!(
            call(&["construct", "--family", "nope", "--q", "7"], "").0,
            1
        );
        assert_eq!(call(&["frobnicate"], "").0, 1);
        let (code, _, err) = call(&["construct", "--family", "bose", "--q", "6"], "");
        assert_eq!(code, 1);
        assert!(err.starts_with("error:"));
        let (code, _, err) = call(&["verify", "--kind", "sidon"], "{not json");
        assert_eq!(code, 1);
        assert!(err.contains("malformed"));
        assert_eq!(call(&["--help"], "").0, 0);
    }

    #[test]
    fn violations_exit_two() {
        let (code, out, _) = call(
            &["verify", "--kind", "sidon"],
            r#"{"modulus":7,"elements":[0,1,2]}"#,
        );
        assert_eq!(code, 2);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["ok"], false);
        assert_eq!(v["witness"]["kind"], "difference");
    }

    #[test]
    fn negative_direction_parses() {
        let (code, out, _) = call(
            &["fold", "--lattice", "[[6,0],[0,7]]", "--direction", "-1,-1"],
            r#"{"modulus":42,"elements":[0]}"#,
        );
        assert_eq!(code, 0, "{out}");
    }
}
