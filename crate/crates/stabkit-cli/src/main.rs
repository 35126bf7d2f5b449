use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use stabkit::gitbounds::{bound_hyperoct, bound_report, BoundReport, Family, TripleQuery};
use stabkit::hyperoctahedral::{hyperoct_coeff, MAX_HYPEROCT_SIZE};
use stabkit::kronecker::kron;
use stabkit::partitions::{parse_double_triple, parse_triple, DoublePartition};
use stabkit::plethysm::plethysm_coeff;
use stabkit::stabilization::{d_real, StabilizationQuery, StabilizationResult};
use stabkit::table::{evaluate_table, CellStatus, TableId, TableReport};
use stabkit::Partition;

/// Worker count for rayon; unset means one per core.
const THREADS_VAR: &str = "STABKIT_THREADS";

#[derive(Parser)]
#[command(
    name = "stabkit",
    version,
    about = "Kronecker stabilization bounds and coefficients"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Kronecker coefficient g_{α,β,γ}, e.g. `kron "2,1 / 2,1 / 3"`.
    Kron { triple: String },
    /// Stabilization bounds for a triple.
    Bound {
        /// `murnaghan`, `squares` or `hyperoct`.
        family: String,
        triple: String,
        /// Minimize over role orderings where the bound allows it.
        #[arg(long)]
        reorder: bool,
        /// Print every bound, not just the family's main one.
        #[arg(long)]
        all: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// The true stabilization index, certified by a bound unless `--horizon` is given.
    Dreal {
        family: String,
        triple: String,
        /// Compute up to this index only; the result is labelled empirical.
        #[arg(long)]
        horizon: Option<u32>,
        /// Custom direction `a / b / c` (needs `--horizon`).
        #[arg(long, requires = "horizon")]
        direction: Option<String>,
    },
    /// Recompute a reference table and compare it with the printed values.
    Table {
        /// `murnaghan` or `squares`.
        id: String,
        #[arg(long, value_enum, default_value_t = Format::Md)]
        format: Format,
    },
    /// Plethysm coefficient a^ν_{λ,μ}, e.g. `plethysm "2 / 2,1 / 4,2"`.
    Plethysm { triple: String },
    /// Hyperoctahedral coefficient, e.g. `hyperoct "2;2 / 2;2 / 2;2"`.
    Hyperoct { triple: String },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Md,
    Csv,
    Json,
}

type AnyResult<T> = Result<T, Box<dyn std::error::Error>>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = init_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    match run(cli.cmd) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn init_threads() -> AnyResult<()> {
    if let Ok(v) = std::env::var(THREADS_VAR) {
        let n: usize = v
            .trim()
            .parse()
            .map_err(|_| format!("{THREADS_VAR} must be a number, got {v:?}"))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()?;
    }
    Ok(())
}

/// Ok(false) means "ran fine, but the comparison failed".
fn run(cmd: Command) -> AnyResult<bool> {
    match cmd {
        Command::Kron { triple } => {
            let [a, b, c] = parse_triple(&triple)?;
            let g = kron(&a, &b, &c)?;
            println!("{g}");
            println!("n = {}", a.size());
        }
        Command::Bound {
            family,
            triple,
            reorder,
            all,
            format,
        } => cmd_bound(&family, &triple, reorder, all, format)?,
        Command::Dreal {
            family,
            triple,
            horizon,
            direction,
        } => cmd_dreal(&family, &triple, horizon, direction.as_deref())?,
        Command::Table { id, format } => {
            let report = evaluate_table(TableId::parse(&id)?)?;
            let out = std::io::stdout();
            let mut out = out.lock();
            match format {
                Format::Md | Format::Text => write_markdown(&mut out, &report)?,
                Format::Csv => write_csv(&mut out, &report)?,
                Format::Json => {
                    serde_json::to_writer_pretty(&mut out, &report)?;
                    writeln!(out)?;
                }
            }
            return Ok(report.all_match());
        }
        Command::Plethysm { triple } => {
            let [l, m, n] = parse_triple(&triple)?;
            println!("{}", plethysm_coeff(&l, &m, &n)?);
        }
        Command::Hyperoct { triple } => {
            let [a, b, c] = parse_double_triple(&triple)?;
            println!("{}", hyperoct_coeff(&a, &b, &c)?);
        }
    }
    Ok(true)
}

fn cmd_bound(
    family: &str,
    triple: &str,
    reorder: bool,
    all: bool,
    format: Format,
) -> AnyResult<()> {
    if family.trim().eq_ignore_ascii_case("hyperoct") {
        let [l, m, n] = parse_double_triple(triple)?;
        let b = bound_hyperoct(&l, &m, &n)?;
        let constant = hyperoct_constancy(&[l, m, n], b as u32)?;
        if format == Format::Json {
            println!(
                "{}",
                serde_json::json!({ "family": "hyperoct", "bound": b, "constant_after": constant })
            );
        } else {
            println!("D = {b}");
            match constant {
                Some(true) => println!("checked: constant on [{b}, {}]", b + 3),
                Some(false) => println!("checked: NOT constant on [{b}, {}]", b + 3),
                None => println!("unchecked: beyond the hyperoctahedral size cap"),
            }
        }
        return Ok(());
    }
    let q = TripleQuery::parse(triple, Family::parse(family)?)?;
    let r = bound_report(&q);
    if format == Format::Json {
        println!("{}", serde_json::to_string_pretty(&r)?);
        return Ok(());
    }
    let main = match q.family {
        Family::Murnaghan => ("D1", if reorder { r.d1 } else { r.d1_fixed }),
        Family::Squares => ("D2", if reorder { r.d2 } else { r.d2_fixed }),
    };
    if !all {
        match main.1 {
            Some(v) => println!("{} = {v}", main.0),
            None => return Err(no_bound(main.0, &r).into()),
        }
        return Ok(());
    }
    for (name, v) in all_bounds(&r, main) {
        match v {
            Some(v) => println!("{name} = {v}"),
            None => println!("{name} = n/a"),
        }
    }
    for n in &r.notes {
        println!("note: {n}");
    }
    Ok(())
}

/// Whether `c` is constant along `+d·((1),∅)` for `d` in `[b, b + 3]`;
/// `None` when that leaves desk scale.
fn hyperoct_constancy(base: &[DoublePartition; 3], b: u32) -> AnyResult<Option<bool>> {
    let largest = base.iter().map(DoublePartition::size).max().unwrap_or(0);
    if largest + b + 3 > MAX_HYPEROCT_SIZE {
        return Ok(None);
    }
    let one = Partition::single(1);
    let term = |d: u32| {
        let [x, y, z] = base
            .clone()
            .map(|p| DoublePartition::new(p.plus.add_scaled(d, &one), p.minus));
        hyperoct_coeff(&x, &y, &z)
    };
    let first = term(b)?;
    for d in b + 1..=b + 3 {
        if term(d)? != first {
            return Ok(Some(false));
        }
    }
    Ok(Some(true))
}

fn no_bound(name: &str, r: &BoundReport) -> String {
    let why = r
        .notes
        .first()
        .map(String::as_str)
        .unwrap_or("not applicable");
    format!("{name} unavailable: {why}")
}

fn all_bounds(
    r: &BoundReport,
    main: (&'static str, Option<u64>),
) -> Vec<(&'static str, Option<u64>)> {
    let mut v = vec![main];
    match r.family {
        Family::Murnaghan => v.extend([
            ("D1_reordered", r.d1),
            ("DB", r.db),
            ("DB_improved", r.db_improved),
            ("DBOR2", r.dbor2),
            ("DBOR2_improved", r.dbor2_improved),
            ("Dm", r.dm),
        ]),
        Family::Squares => v.push(("D2_swapped", r.d2)),
    }
    v.push(("D_hm", r.d_hm_generic));
    v
}

fn cmd_dreal(
    family: &str,
    triple: &str,
    horizon: Option<u32>,
    direction: Option<&str>,
) -> AnyResult<()> {
    let fam = Family::parse(family)?;
    let base = parse_triple(triple)?;
    let q = match horizon {
        Some(h) => {
            let dir = match direction {
                Some(d) => parse_triple(d)?,
                None => fam.direction(),
            };
            StabilizationQuery::empirical(base, dir, h)?
        }
        None => {
            let [l, m, n] = base.clone();
            let r = bound_report(&TripleQuery::new(l, m, n, fam)?);
            let (name, b) = match fam {
                Family::Murnaghan => ("D1", r.d1.or(r.dm)),
                Family::Squares => ("D2", r.d2),
            };
            let b = b.ok_or_else(|| no_bound(name, &r))?;
            StabilizationQuery::certified(base, fam, b as u32, name)?
        }
    };
    print_stab(&d_real(&q)?);
    Ok(())
}

fn print_stab(r: &StabilizationResult) {
    let seq: Vec<String> = r.sequence.iter().map(|v| v.to_string()).collect();
    println!("d_real = {}", r.d_real);
    println!("limit = {}", r.limit);
    println!("sequence = {}", seq.join(", "));
    let label = if r.certified {
        "certified"
    } else {
        "empirical"
    };
    println!("{label}: {}", r.certificate);
}

fn cell_text(c: &stabkit::table::Cell) -> String {
    let v = c.computed.map_or("-".to_string(), |v| v.to_string());
    match c.status {
        CellStatus::Match => v,
        CellStatus::Fixture => format!("{} (fixture)", c.expected),
        CellStatus::MismatchKnown => format!("{v} (printed {}, known)", c.expected),
        CellStatus::Mismatch => format!("{v} (printed {}) MISMATCH", c.expected),
    }
}

fn write_markdown(out: &mut impl Write, t: &TableReport) -> AnyResult<()> {
    writeln!(out, "| triple | {} | limit |", t.columns.join(" | "))?;
    writeln!(out, "|---{}|---|", "|---".repeat(t.columns.len()))?;
    for r in &t.rows {
        let cells: Vec<String> = r.cells.iter().map(cell_text).collect();
        writeln!(
            out,
            "| {} | {} | {} |",
            r.triple,
            cells.join(" | "),
            r.limit
        )?;
    }
    writeln!(out)?;
    for r in &t.rows {
        for s in r.soundness.iter().filter(|s| !s.holds()) {
            writeln!(
                out,
                "unsound: {} {} = {} (d_real {})",
                r.triple, s.bound, s.value, r.d_real
            )?;
        }
    }
    writeln!(
        out,
        "{}",
        if t.all_match() {
            "all cells match"
        } else {
            "unexpected mismatches"
        }
    )?;
    Ok(())
}

fn write_csv(out: &mut impl Write, t: &TableReport) -> AnyResult<()> {
    let mut w = csv::Writer::from_writer(out);
    let mut header = vec!["triple".to_string()];
    header.extend(t.columns.iter().cloned());
    header.push("status".into());
    w.write_record(&header)?;
    for r in &t.rows {
        let mut rec = vec![r.triple.clone()];
        let mut flags = Vec::new();
        for c in &r.cells {
            let v = match c.status {
                CellStatus::Fixture => Some(c.expected),
                _ => c.computed,
            };
            rec.push(v.map_or(String::new(), |v| v.to_string()));
            if matches!(c.status, CellStatus::Mismatch | CellStatus::MismatchKnown) {
                flags.push(format!("{}:{}", c.column, c.status.as_str()));
            }
        }
        rec.push(flags.join(";"));
        w.write_record(&rec)?;
    }
    w.flush()?;
    Ok(())
}
