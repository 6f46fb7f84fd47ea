use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use binrank_core::cache;
use binrank_core::reporting::{
    build_table, emit_table, emit_tables, lower_bounds, verify_all, Catalog, EmitOptions,
    ExpectedDataset, Format, Scope, TableKind,
};
use binrank_core::symmetry::{canonical_form, orbit};
use binrank_core::{stratify, ArrayCode, Error, Group, RankTable, Semiring, Shape};
use clap::{Args, Parser, Subcommand};

/// Exact tensor ranks and symmetry classes of 2×…×2 arrays with 0/1 entries.
#[derive(Debug, Parser)]
#[command(name = "binrank", version)]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GlobalOpts {
    /// Output format: md, csv or json.
    #[arg(long, global = true, default_value = "md", value_parser = parse_format)]
    format: Format,
    /// Directory holding cached rank strata.
    #[arg(long, global = true, env = "BINRANK_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
    /// Neither read nor write the cache.
    #[arg(long, global = true)]
    no_cache: bool,
    /// Ignore cached strata and recompute them (the cache is rewritten).
    #[arg(long, global = true)]
    force_recompute: bool,
}

#[derive(Debug, Args)]
struct ShapeOpts {
    /// Number of directions (3 or 4).
    #[arg(long, value_parser = parse_enumerable_n)]
    n: u8,
    /// gf2, bool or nat.
    #[arg(long, default_value = "gf2", value_parser = parse_semiring)]
    semiring: Semiring,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Number of arrays of each rank.
    Enumerate(ShapeOpts),
    /// Rank of one array, given as a 0/1 flattening (spaces allowed).
    Rank {
        #[command(flatten)]
        shape: ShapeOpts,
        /// Also print the canonical form and orbit size under this group.
        #[arg(long, value_parser = parse_group)]
        group: Option<Group>,
        #[arg(required = true, num_args = 1..)]
        array: Vec<String>,
    },
    /// Orbits of all arrays under a symmetry group.
    Classify {
        #[command(flatten)]
        shape: ShapeOpts,
        #[arg(long, default_value = "large", value_parser = parse_group)]
        group: Group,
        /// Print 2×2×2 arrays as flattenings.
        #[arg(long)]
        flat: bool,
    },
    /// How each large orbit splits into small orbits.
    Split {
        #[arg(long, default_value = "4", value_parser = parse_enumerable_n)]
        n: u8,
        #[arg(long)]
        flat: bool,
    },
    /// Lower bounds for the number of orbits.
    Bounds {
        /// Restrict to one n in 3..=6.
        #[arg(long, value_parser = clap::value_parser!(u8).range(3..=6))]
        n: Option<u8>,
    },
    /// Print the published tables, recomputed.
    Tables {
        /// One table, e.g. table3, split, strata-n4-bool, orbits-n4-small.
        #[arg(long, value_parser = parse_kind)]
        kind: Option<TableKind>,
        #[arg(long)]
        flat: bool,
    },
    /// Compare every recomputed table with the published values.
    Verify {
        /// n3, n4 or all.
        #[arg(long, default_value = "all", value_parser = parse_scope)]
        scope: Scope,
    },
    /// Write the strata as JSON.
    Export {
        #[command(flatten)]
        shape: ShapeOpts,
        /// Output file; standard output if omitted.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_semiring(s: &str) -> Result<Semiring, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_group(s: &str) -> Result<Group, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_scope(s: &str) -> Result<Scope, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_kind(s: &str) -> Result<TableKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_enumerable_n(s: &str) -> Result<u8, String> {
    match s.parse::<u8>() {
        Ok(n @ (3 | 4)) => Ok(n),
        _ => Err(format!(
            "`{s}` is not supported; full enumeration needs n = 3 or 4"
        )),
    }
}

/// Problems with the arguments rather than the computation.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn default_cache_dir() -> PathBuf {
    let base = std::env::var_os("XDG_CACHE_HOME")
        .map(PathBuf::from)
        .or_else(|| std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache")))
        .unwrap_or_else(std::env::temp_dir);
    base.join("binrank")
}

fn load_or_compute(
    dir: Option<&Path>,
    force: bool,
    shape: Shape,
    semiring: Semiring,
) -> binrank_core::Result<RankTable> {
    let Some(dir) = dir else {
        return stratify(shape, semiring);
    };
    if !force {
        match cache::load(dir, shape, semiring) {
            Ok(Some(t)) => return Ok(t),
            Ok(None) => {}
            Err(e) => eprintln!(
                "warning: ignoring cache {}: {e}; recomputing",
                dir.join(cache::file_name(shape, semiring)).display()
            ),
        }
    }
    let t = stratify(shape, semiring)?;
    if let Err(e) = cache::save(&t, dir) {
        eprintln!("warning: could not write cache in {}: {e}", dir.display());
    }
    Ok(t)
}

fn catalog(opts: &GlobalOpts) -> Catalog {
    let dir = (!opts.no_cache).then(|| opts.cache_dir.clone().unwrap_or_else(default_cache_dir));
    let force = opts.force_recompute;
    Catalog::with_loader(move |shape, semiring| {
        load_or_compute(dir.as_deref(), force, shape, semiring)
    })
}

fn require_field(semiring: Semiring) -> anyhow::Result<()> {
    if semiring != Semiring::Gf2 {
        return Err(Usage(format!(
            "symmetry groups need --semiring gf2: over the {semiring} semiring there are no \
             canonical forms under a group action, only minimal representatives (see `tables`)"
        ))
        .into());
    }
    Ok(())
}

fn shape(n: u8) -> Shape {
    Shape::new(n).expect("validated by the argument parser")
}

fn run(cli: Cli, out: &mut impl Write) -> anyhow::Result<ExitCode> {
    let format = cli.global.format;
    let catalog = catalog(&cli.global);
    match cli.command {
        Command::Enumerate(opts) => {
            let kind = TableKind::Strata(shape(opts.n), opts.semiring);
            write!(
                out,
                "{}",
                emit_table(kind, EmitOptions::new(format), &catalog)?
            )?;
        }
        Command::Rank {
            shape: opts,
            group,
            array,
        } => {
            if group.is_some() {
                require_field(opts.semiring)?;
            }
            let a = ArrayCode::parse(&array.join(" "), shape(opts.n))
                .map_err(|e| Usage(format!("invalid array: {e}")))?;
            let t = catalog.table(a.shape(), opts.semiring)?;
            writeln!(out, "rank: {}", t.rank_of(a)?)?;
            if let Some(group) = group {
                writeln!(out, "canonical form: {}", canonical_form(a, group))?;
                writeln!(out, "orbit size: {}", orbit(a, group).len())?;
            }
        }
        Command::Classify {
            shape: opts,
            group,
            flat,
        } => {
            require_field(opts.semiring)?;
            let kind = TableKind::Orbits(shape(opts.n), group);
            write!(
                out,
                "{}",
                emit_table(kind, EmitOptions { format, flat }, &catalog)?
            )?;
        }
        Command::Split { n, flat } => {
            let kind = TableKind::Split(shape(n));
            write!(
                out,
                "{}",
                emit_table(kind, EmitOptions { format, flat }, &catalog)?
            )?;
        }
        Command::Bounds { n } => {
            if let Some(n) = n {
                lower_bounds(n)?;
            }
            let mut table = build_table(TableKind::LowerBounds, &catalog, false)?;
            if let Some(n) = n {
                table.rows.retain(|row| row[0] == u64::from(n).into());
            }
            write!(out, "{}", table.render(format))?;
        }
        Command::Tables { kind, flat } => {
            let kinds = kind.map(|k| vec![k]).unwrap_or_else(TableKind::standard);
            write!(
                out,
                "{}",
                emit_tables(&kinds, EmitOptions { format, flat }, &catalog)?
            )?;
        }
        Command::Verify { scope } => {
            let report = verify_all(scope, &ExpectedDataset::published(), &catalog);
            write!(out, "{report}")?;
            if !report.passed() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Export {
            shape: opts,
            output,
        } => {
            let t = catalog.table(shape(opts.n), opts.semiring)?;
            let json = cache::export_json(&t);
            match output {
                Some(path) => {
                    fs::write(&path, json).with_context(|| format!("writing {}", path.display()))?
                }
                None => write!(out, "{json}")?,
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.is::<Usage>() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
