use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use empty4::census::{read_census_file, write_census_file, ExcessRow};
use empty4::families::tables::{NONPRIMITIVE, PRIMITIVE};
use empty4::{
    classify, diff_census, enumerate, excess_report, hstar, histogram_by_volume, is_empty,
    is_hollow, realize, tuple_from_simplex, tuple_width, width, width_histogram, write_census,
    Census, SearchConfig, SimplexCoords, Tuple,
};

#[derive(Parser)]
#[command(name = "empty4", version, about = "Empty lattice 4-simplices: classification and enumeration")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Machine,
}

/// A simplex given either as `V:b0,...,bd` or as a coordinate file.
#[derive(Args)]
struct SimplexInput {
    /// Tuple such as `100:9,1,-2,-3,-5`.
    #[arg(required_unless_present = "coords", conflicts_with = "coords")]
    tuple: Option<String>,
    /// File with one vertex per line, coordinates separated by commas (`-` for stdin).
    #[arg(long)]
    coords: Option<PathBuf>,
}

impl SimplexInput {
    fn tuple(&self) -> Result<Tuple> {
        match (&self.tuple, &self.coords) {
            (Some(s), _) => s.parse().with_context(|| format!("cannot parse tuple `{s}`")),
            (None, Some(path)) => Ok(tuple_from_simplex(&read_coords(path)?)?),
            (None, None) => unreachable!("clap requires one input"),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Sporadic, family member(s), not-empty or not-hollow.
    Classify(SimplexInput),
    /// Prints `empty` or `not-empty`.
    EmptyCheck(SimplexInput),
    /// Prints `hollow` or `not-hollow`.
    HollowCheck(SimplexInput),
    /// Vertex coordinates of a simplex with the given tuple.
    Realize { tuple: String },
    /// Tuple of a cyclic simplex given by coordinates.
    TupleOf {
        /// Coordinate file (`-` for stdin).
        #[arg(long)]
        coords: PathBuf,
    },
    /// Lattice width.
    Width(SimplexInput),
    /// h*-vector of an empty 4-simplex.
    Hstar(SimplexInput),
    /// Embedded family tables.
    Families {
        #[command(subcommand)]
        action: FamiliesAction,
    },
    /// All empty 4-simplices (or only sporadic ones) in a volume range.
    Enumerate {
        #[arg(long, default_value_t = 1)]
        from: u32,
        #[arg(long)]
        to: u32,
        /// Drop members of infinite families.
        #[arg(long)]
        sporadic: bool,
        /// Worker threads (0 = all cores).
        #[arg(long, default_value_t = 0)]
        workers: usize,
        /// Census file to write; stdout if absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Resumable state file.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
    },
    /// Number of rows per volume.
    Stats {
        census: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
    /// Rows present in only one of two censuses.
    Diff { a: PathBuf, b: PathBuf },
    /// Count and volume range per lattice width.
    Widths {
        census: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
    /// Volume excess `V-1` and surface excess `S-5` per row.
    Excess {
        census: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum FamiliesAction {
    List,
}

fn read_coords(path: &Path) -> Result<SimplexCoords> {
    let text = if path.as_os_str() == "-" {
        io::read_to_string(io::stdin())?
    } else {
        fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?
    };
    Ok(text.parse()?)
}

fn read_census(path: &Path) -> Result<Census> {
    read_census_file(path).with_context(|| format!("cannot read census {}", path.display()))
}

fn vector(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

fn families_list(out: &mut impl Write) -> io::Result<()> {
    writeln!(out, "k1                (a+b,-a,-b,-1,1)           gcd(a,b,V) = 1")?;
    writeln!(out, "k2-primitive      (1,-2,a,-2a,1+a)            V odd, gcd(a,V) = 1")?;
    writeln!(out, "k2-nonprimitive   (-1,V/2-1,a,V/2-a,2)        V in 4Z, gcd(a,V) = 1")?;
    writeln!(out)?;
    writeln!(out, "# primitive: b; no prime factor of V may divide two entries")?;
    for (n, b) in PRIMITIVE.iter().enumerate() {
        writeln!(out, "primitive-{:<3} {}", n + 1, vector(b))?;
    }
    writeln!(out)?;
    writeln!(out, "# nonprimitive: I, I*a, b, condition on +-k mod 2, mod 3 (k = V/I)")?;
    for (n, r) in NONPRIMITIVE.iter().enumerate() {
        writeln!(
            out,
            "nonprimitive-{:<3} I={} {:<13} {:<18} {:<6} {}",
            n + 1,
            r.index,
            vector(&r.offset),
            vector(&r.dependence),
            r.mod2.to_string(),
            r.mod3
        )?;
    }
    Ok(())
}

fn print_excess(rows: &[ExcessRow], format: Format, out: &mut impl Write) -> io::Result<()> {
    if format == Format::Human {
        writeln!(out, "{:>6} {:>6}  tuple", "V-1", "S-5")?;
        for r in rows {
            writeln!(out, "{:>6} {:>6}  {}", r.volume_excess, r.surface_excess, r.tuple)?;
        }
    } else {
        for r in rows {
            writeln!(out, "{r}")?;
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match cli.command {
        Command::Classify(input) => {
            let t = input.tuple()?.canonical_form();
            writeln!(out, "{}", classify(&t)?)?;
        }
        Command::EmptyCheck(input) => {
            let t = input.tuple()?.canonical_form();
            writeln!(out, "{}", if is_empty(&t) { "empty" } else { "not-empty" })?;
        }
        Command::HollowCheck(input) => {
            let t = input.tuple()?;
            writeln!(out, "{}", if is_hollow(&t) { "hollow" } else { "not-hollow" })?;
        }
        Command::Realize { tuple } => {
            let t: Tuple = tuple.parse().with_context(|| format!("cannot parse tuple `{tuple}`"))?;
            write!(out, "{}", realize(&t)?)?;
        }
        Command::TupleOf { coords } => {
            writeln!(out, "{}", tuple_from_simplex(&read_coords(&coords)?)?)?;
        }
        Command::Width(input) => {
            let w = match (&input.tuple, &input.coords) {
                (None, Some(path)) => width(&read_coords(path)?),
                _ => tuple_width(&input.tuple()?) as u64,
            };
            writeln!(out, "{w}")?;
        }
        Command::Hstar(input) => {
            writeln!(out, "{}", hstar(&input.tuple()?)?)?;
        }
        Command::Families { action: FamiliesAction::List } => families_list(&mut out)?,
        Command::Enumerate {
            from,
            to,
            sporadic,
            workers,
            out: path,
            checkpoint,
        } => {
            let mut cfg = SearchConfig::new(from, to)?;
            cfg.prune_families = sporadic;
            cfg.workers = workers;
            cfg.checkpoint_path = checkpoint;
            let census = enumerate(&cfg)?;
            match path {
                Some(p) => write_census_file(&census, &p)
                    .with_context(|| format!("cannot write {}", p.display()))?,
                None => write_census(&census, &mut out)?,
            }
        }
        Command::Stats { census, format } => {
            let h = histogram_by_volume(&read_census(&census)?);
            if format == Format::Human {
                writeln!(out, "{:>6} {:>6}", "V", "count")?;
                for (v, n) in &h {
                    writeln!(out, "{v:>6} {n:>6}")?;
                }
                writeln!(out, "{:>6} {:>6}", "total", h.values().sum::<usize>())?;
            } else {
                for (v, n) in &h {
                    writeln!(out, "{v} {n}")?;
                }
            }
        }
        Command::Diff { a, b } => {
            let (only_a, only_b) = diff_census(&read_census(&a)?, &read_census(&b)?);
            for t in only_a {
                writeln!(out, "< {}", empty4::census::format_row(&t))?;
            }
            for t in only_b {
                writeln!(out, "> {}", empty4::census::format_row(&t))?;
            }
        }
        Command::Widths { census, format } => {
            let h = width_histogram(&read_census(&census)?);
            if format == Format::Human {
                writeln!(out, "{:>5} {:>8} {:>6} {:>6}", "width", "count", "min V", "max V")?;
            }
            for (w, s) in &h {
                if format == Format::Human {
                    writeln!(out, "{w:>5} {:>8} {:>6} {:>6}", s.count, s.min_volume, s.max_volume)?;
                } else {
                    writeln!(out, "{w} {} {} {}", s.count, s.min_volume, s.max_volume)?;
                }
            }
        }
        Command::Excess { census, format } => {
            print_excess(&excess_report(&read_census(&census)?), format, &mut out)?;
        }
    }
    out.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
