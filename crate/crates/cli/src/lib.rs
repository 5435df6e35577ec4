//! The `nsgp` command line.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error,
//! 3 limit exceeded.

pub mod cache;
pub mod output;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use nsgp_core::Oracle;
use nsgp_core::{levels, Enumerator, Error, GapVector, NumericalSemigroup, DEFAULT_MAX_FROBENIUS};

use output::{CensusRow, Format};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "nsgp",
    version,
    about = "Irreducible and atomic numerical semigroups with a fixed Frobenius number"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "text")]
    format: Format,

    /// Largest Frobenius number the enumeration commands accept.
    #[arg(long, global = true, env = "NSGP_MAX_F", default_value_t = DEFAULT_MAX_FROBENIUS)]
    max_f: u32,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the full record of one semigroup.
    Inspect(InspectArgs),
    /// List I(F).
    Irreducible {
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        frobenius: u32,
        /// Directory holding cached I(F) files.
        #[arg(long, env = "NSGP_CACHE")]
        cache_dir: Option<PathBuf>,
    },
    /// List A(F).
    Atomic {
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        frobenius: u32,
    },
    /// List N(F), or N(F, l) with --level.
    Ani {
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        frobenius: u32,
        #[arg(long)]
        level: Option<u32>,
    },
    /// Print L(F).
    Levels {
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        frobenius: u32,
    },
    /// Census of |I(F)|, |N(F)|, |A(F)| over a range of F.
    Count {
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        from: u32,
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        to: u32,
        /// Shorthand for --format csv.
        #[arg(long)]
        csv: bool,
    },
    /// Cross-check the fast enumerations against the exhaustive oracle.
    Verify {
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        max_frobenius: u32,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct InspectArgs {
    /// Generators, comma-separated.
    #[arg(long)]
    gens: Option<String>,
    /// Gaps, comma-separated.
    #[arg(long)]
    gaps: Option<String>,
    /// Gap vector b₁…b_F as a 0/1 string.
    #[arg(long)]
    vector: Option<String>,
}

/// A failure carrying its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::LimitExceeded { .. } => EXIT_LIMIT,
            _ => EXIT_USAGE,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn parse_list(s: &str) -> Result<Vec<u32>, Failure> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| usage(format!("cannot parse {t:?} as a non-negative integer")))
        })
        .collect()
}

fn inspect(args: &InspectArgs) -> Result<NumericalSemigroup, Failure> {
    let s = if let Some(g) = &args.gens {
        NumericalSemigroup::from_generators(parse_list(g)?)?
    } else if let Some(g) = &args.gaps {
        NumericalSemigroup::from_gaps(parse_list(g)?)?
    } else {
        let v: GapVector = args.vector.as_deref().unwrap_or_default().parse()?;
        NumericalSemigroup::from_vector(v)?
    };
    Ok(s)
}

fn irreducible_cached(
    en: &Enumerator,
    frobenius: u32,
    dir: Option<&PathBuf>,
) -> Result<Vec<NumericalSemigroup>, Failure> {
    if let Some(dir) = dir {
        if frobenius <= en.max_frobenius {
            if let Some(hit) = cache::read(dir, frobenius) {
                return Ok(hit);
            }
        }
    }
    let fresh = en.irreducible(frobenius)?;
    if let Some(dir) = dir {
        cache::write(dir, frobenius, &fresh).map_err(|e| Failure {
            code: EXIT_USAGE,
            message: format!("cannot write cache in {}: {e}", dir.display()),
        })?;
    }
    Ok(fresh)
}

fn first_difference<'a>(
    fast: &'a [NumericalSemigroup],
    reference: &'a [NumericalSemigroup],
) -> Option<(&'a NumericalSemigroup, &'static str)> {
    let only_fast = fast
        .iter()
        .filter(|s| !reference.contains(s))
        .map(|s| (s, "fast path only"));
    let only_oracle = reference
        .iter()
        .filter(|s| !fast.contains(s))
        .map(|s| (s, "oracle only"));
    only_fast.chain(only_oracle).min_by(|a, b| a.0.cmp(b.0))
}

fn verify(en: &Enumerator, max_frobenius: u32, out: &mut String) -> Result<i32, Failure> {
    let o = Oracle::default();
    if max_frobenius > o.max_frobenius {
        return Err(Error::LimitExceeded {
            requested: max_frobenius,
            limit: o.max_frobenius,
        }
        .into());
    }
    let en = en.with_max_frobenius(en.max_frobenius.max(max_frobenius));
    for f in 1..=max_frobenius {
        let report = en.report(f)?;
        let oracle_levels = o.ani_levels(f)?;
        let mut checks = vec![
            ("irreducible", report.irreducible.clone(), o.irreducible(f)?),
            ("atomic", report.atomic(), o.atomic(f)?),
        ];
        for l in (f / 2 + 1)..f {
            checks.push((
                "level",
                report.ani_levels.get(&l).cloned().unwrap_or_default(),
                oracle_levels.get(&l).cloned().unwrap_or_default(),
            ));
        }
        for (what, fast, reference) in &checks {
            if let Some((s, side)) = first_difference(fast, reference) {
                out.push_str(&format!(
                    "FAIL F={f}: {what} sets differ; counterexample {s} [{}] ({side})\n",
                    s.gap_vector()
                ));
                return Ok(EXIT_MISMATCH);
            }
        }
        out.push_str(&format!(
            "ok F={f}: irreducible={} ani={} atomic={}\n",
            report.irreducible_count(),
            report.ani_count(),
            report.atomic_count()
        ));
    }
    out.push_str(&format!("PASS F=1..{max_frobenius}\n"));
    Ok(EXIT_OK)
}

fn execute(cli: &Cli, out: &mut String) -> Result<i32, Failure> {
    let en = Enumerator::default().with_max_frobenius(cli.max_f);
    let format = cli.format;
    match &cli.command {
        Command::Inspect(args) => {
            out.push_str(&output::render_record(&inspect(args)?, format));
        }
        Command::Irreducible {
            frobenius,
            cache_dir,
        } => {
            let all = irreducible_cached(&en, *frobenius, cache_dir.as_ref())?;
            out.push_str(&output::render_listing(*frobenius, &all, format));
        }
        Command::Atomic { frobenius } => {
            let all = en.atomic(*frobenius)?;
            out.push_str(&output::render_listing(*frobenius, &all, format));
        }
        Command::Ani { frobenius, level } => {
            let all = match level {
                None => en.ani(*frobenius)?,
                Some(l) => {
                    if !levels(*frobenius).levels.contains(l) {
                        return Err(usage(format!("{l} is not in L({frobenius})")));
                    }
                    en.ani_level(*l, *frobenius)?.result
                }
            };
            out.push_str(&output::render_listing(*frobenius, &all, format));
        }
        Command::Levels { frobenius } => {
            out.push_str(&output::render_levels(
                *frobenius,
                &levels(*frobenius).levels,
                format,
            ));
        }
        Command::Count { from, to, csv } => {
            if from > to {
                return Err(usage(format!("empty range {from}..{to}")));
            }
            if *to > en.max_frobenius {
                return Err(Error::LimitExceeded {
                    requested: *to,
                    limit: en.max_frobenius,
                }
                .into());
            }
            let rows = (*from..=*to)
                .map(|f| {
                    let r = en.report(f)?;
                    Ok(CensusRow {
                        frobenius: f,
                        irreducible: r.irreducible_count(),
                        ani: r.ani_count(),
                        atomic: r.atomic_count(),
                    })
                })
                .collect::<Result<Vec<_>, Error>>()?;
            let format = if *csv { Format::Csv } else { format };
            out.push_str(&output::render_census(&rows, format));
        }
        Command::Verify { max_frobenius } => return verify(&en, *max_frobenius, out),
    }
    Ok(EXIT_OK)
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK {
                stdout.write_all(rendered.as_bytes())
            } else {
                stderr.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let mut out = String::new();
    let code = match execute(&cli, &mut out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    };
    if stdout.write_all(out.as_bytes()).is_err() {
        return EXIT_USAGE;
    }
    code
}
