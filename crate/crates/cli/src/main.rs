//! Command-line front end: pre-processing, mining, and post-processing verbs
//! over binary contexts, composable through stdin/stdout pipes.
//!
//! Every subcommand reads the positional input path (or standard input when
//! omitted) and writes to `--output` (or standard output). Exit codes: 0 on
//! success, 1 on data errors, 2 on usage errors. Diagnostics go to standard
//! error.

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use binmine_core::ingest::{
    self, parse_context, parse_numeric_table, serialize, ContextFormat, DiscretizationMethod,
    DiscretizationSpec,
};
use binmine_core::itemsets::{
    equivalence_classes, mine_closed, mine_frequent, mine_generators, mine_minimal_rare,
    render_classes, render_family, MiningStrategy,
};
use binmine_core::lattice::{build_concepts, export_dot, export_text, hasse};
use binmine_core::measure::Ratio;
use binmine_core::postprocess::{
    self, ColorMode, Direction, ItemsetRecord, RuleFilter, RuleRecord, Side,
};
use binmine_core::rules::{
    mine_all_rules, mine_dg_basis, mine_mnr_rules, mine_rare_rules, render_rules,
};
use binmine_core::{BinaryContext, Error};

const TRANSACTION_FORMAT_HELP: &str = "\
Context formats:
  transactions  one object per line, whitespace-separated item tokens;
                blank line = object with no items; '#' starts a comment
  matrix        header line of item names, then rows of 0/1 tokens";

const RULE_FORMAT_HELP: &str = "\
Rule lines look like:
  {b} => {e} (supp=4 [0.800]; conf=1.000; lift=1.250; conv=inf)
with 'inf'/'undef' for the degenerate measure cases.";

const ITEMSET_FORMAT_HELP: &str = "\
Itemset lines look like:
  {b, e} (4)
preceded by a '# itemsets kind=... minsupp=...' header comment.";

#[derive(Parser)]
#[command(
    name = "binmine",
    version,
    about = "Pattern mining over binary contexts: itemset families, rule bases, concept lattices",
    subcommand_required = true,
    arg_required_else_help = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Transactions,
    Matrix,
}

impl From<FormatArg> for ContextFormat {
    fn from(f: FormatArg) -> ContextFormat {
        match f {
            FormatArg::Transactions => ContextFormat::Transactions,
            FormatArg::Matrix => ContextFormat::Matrix,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Frequent,
    Closed,
    Generators,
    MinimalRare,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Levelwise,
    Depthfirst,
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    All,
    Mnr,
    Dg,
    Rare,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    EqualWidth,
    EqualFrequency,
}

impl From<MethodArg> for DiscretizationMethod {
    fn from(m: MethodArg) -> DiscretizationMethod {
        match m {
            MethodArg::EqualWidth => DiscretizationMethod::EqualWidth,
            MethodArg::EqualFrequency => DiscretizationMethod::EqualFrequency,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MeasureArg {
    Support,
    Confidence,
    Lift,
    Conviction,
}

impl MeasureArg {
    fn name(&self) -> &'static str {
        match self {
            MeasureArg::Support => "support",
            MeasureArg::Confidence => "confidence",
            MeasureArg::Lift => "lift",
            MeasureArg::Conviction => "conviction",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum DirectionArg {
    Desc,
    Asc,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Antecedent,
    Consequent,
    Either,
}

#[derive(Clone, Copy, ValueEnum)]
enum ColorModeArg {
    Terminal,
    Markers,
}

/// Shared input/output plumbing.
#[derive(Args)]
struct Io {
    /// Input path; standard input when omitted
    input: Option<PathBuf>,
    /// Output path; standard output when omitted
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ContextIo {
    #[command(flatten)]
    io: Io,
    /// Input context format
    #[arg(long, value_enum, default_value = "matrix")]
    format: FormatArg,
}

#[derive(Subcommand)]
enum Command {
    /// Convert a context between the transaction and matrix formats
    #[command(after_help = TRANSACTION_FORMAT_HELP)]
    Convert {
        #[command(flatten)]
        io: Io,
        /// Format of the input
        #[arg(long, value_enum)]
        from: FormatArg,
        /// Format of the output
        #[arg(long, value_enum)]
        to: FormatArg,
    },
    /// Swap objects and items (new items are labeled o1..oN)
    #[command(after_help = TRANSACTION_FORMAT_HELP)]
    Transpose {
        #[command(flatten)]
        ctx: ContextIo,
        /// Output context format
        #[arg(long, value_enum, default_value = "matrix")]
        to: FormatArg,
    },
    /// Flip every incidence cell
    #[command(after_help = TRANSACTION_FORMAT_HELP)]
    Complement {
        #[command(flatten)]
        ctx: ContextIo,
        #[arg(long, value_enum, default_value = "matrix")]
        to: FormatArg,
    },
    /// Discretize a CSV numeric table (header line; empty field = missing)
    /// into interval items
    Discretize {
        #[command(flatten)]
        io: Io,
        #[arg(long, value_enum, default_value = "equal-width")]
        method: MethodArg,
        /// Number of bins per column
        #[arg(long, default_value_t = 2)]
        bins: usize,
        /// Per-column override, e.g. --override age=equal-frequency:4
        #[arg(long = "override", value_name = "COL=METHOD:BINS")]
        overrides: Vec<String>,
        #[arg(long, value_enum, default_value = "matrix")]
        to: FormatArg,
    },
    /// Generate a random context (each cell set with probability --density)
    Randgen {
        /// Output path; standard output when omitted
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        objects: usize,
        #[arg(long)]
        items: usize,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "matrix")]
        to: FormatArg,
    },
    /// Mine an itemset family
    #[command(after_help = ITEMSET_FORMAT_HELP)]
    Itemsets {
        #[command(flatten)]
        ctx: ContextIo,
        #[arg(long, value_enum, default_value = "frequent")]
        kind: KindArg,
        /// Absolute count (e.g. 2) or percentage of objects (e.g. 40%)
        #[arg(long)]
        minsupp: String,
        /// Search strategy for frequent mining (same output either way)
        #[arg(long, value_enum, default_value = "depthfirst")]
        strategy: StrategyArg,
    },
    /// List closure equivalence classes as `closed <- generators (support)`
    Eqclasses {
        #[command(flatten)]
        ctx: ContextIo,
        #[arg(long)]
        minsupp: String,
    },
    /// Generate association rules
    #[command(after_help = RULE_FORMAT_HELP)]
    Rules {
        #[command(flatten)]
        ctx: ContextIo,
        /// all = every confident split; mnr = minimal non-redundant
        /// (informative) basis; dg = Duquenne-Guigues implications;
        /// rare = exact rules from minimal rare itemsets
        #[arg(long, value_enum, default_value = "all")]
        basis: BasisArg,
        /// Required except for --basis dg
        #[arg(long)]
        minsupp: Option<String>,
        /// Decimal in (0, 1]; exact at 1 (ignored for dg and rare)
        #[arg(long, default_value = "1.0")]
        minconf: String,
    },
    /// Build the concept lattice and export its Hasse diagram
    Lattice {
        #[command(flatten)]
        ctx: ContextIo,
        /// Emit a DOT digraph instead of the line-oriented listing
        #[arg(long)]
        dot: bool,
        /// Include full extents in node labels, not just their size
        #[arg(long)]
        full_extents: bool,
    },
    /// Keep rules satisfying length and item-membership constraints
    #[command(after_help = RULE_FORMAT_HELP)]
    Filter {
        #[command(flatten)]
        io: Io,
        #[arg(long)]
        min_antecedent: Option<usize>,
        #[arg(long)]
        max_antecedent: Option<usize>,
        #[arg(long)]
        min_consequent: Option<usize>,
        #[arg(long)]
        max_consequent: Option<usize>,
        /// Item that must appear (repeatable; all must appear)
        #[arg(long = "require", value_name = "ITEM")]
        required: Vec<String>,
        #[arg(long, value_enum, default_value = "either")]
        side: SideArg,
    },
    /// Keep the k best units of a rule or itemset listing by a measure
    Topk {
        #[command(flatten)]
        io: Io,
        #[arg(long, value_enum)]
        measure: MeasureArg,
        #[arg(long)]
        k: usize,
        /// desc keeps the largest values ('inf' sorts above all numbers)
        #[arg(long, value_enum, default_value = "desc")]
        direction: DirectionArg,
    },
    /// Highlight items in a rule listing (NO_COLOR disables terminal mode)
    #[command(after_help = RULE_FORMAT_HELP)]
    Colorize {
        #[command(flatten)]
        io: Io,
        /// Item to highlight (repeatable)
        #[arg(long = "item", value_name = "ITEM")]
        items: Vec<String>,
        #[arg(long, value_enum, default_value = "terminal")]
        mode: ColorModeArg,
    },
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Data(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        match e {
            Error::Threshold(_) | Error::Spec(_) => CliError::Usage(e.to_string()),
            other => CliError::Data(other.to_string()),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Data(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            eprintln!("hint: see 'binmine <command> --help' for accepted forms");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> CliResult<()> {
    match command {
        Command::Convert { io, from, to } => {
            let ctx = read_context(&io.input, from.into())?;
            write_output(&io.output, &serialize(&ctx, to.into()))
        }
        Command::Transpose { ctx, to } => {
            let context = read_context(&ctx.io.input, ctx.format.into())?;
            write_output(
                &ctx.io.output,
                &serialize(&ingest::transpose(&context), to.into()),
            )
        }
        Command::Complement { ctx, to } => {
            let context = read_context(&ctx.io.input, ctx.format.into())?;
            write_output(
                &ctx.io.output,
                &serialize(&ingest::complement(&context), to.into()),
            )
        }
        Command::Discretize {
            io,
            method,
            bins,
            overrides,
            to,
        } => {
            let text = read_input(&io.input)?;
            let table = parse_numeric_table(&text)?;
            let mut spec = DiscretizationSpec::new(method.into(), bins);
            for entry in &overrides {
                spec.overrides.push(parse_override(entry)?);
            }
            let ctx = ingest::discretize(&table, &spec)?;
            write_output(&io.output, &serialize(&ctx, to.into()))
        }
        Command::Randgen {
            output,
            objects,
            items,
            density,
            seed,
            to,
        } => {
            let ctx = ingest::random_context(objects, items, density, seed)?;
            write_output(&output, &serialize(&ctx, to.into()))
        }
        Command::Itemsets {
            ctx,
            kind,
            minsupp,
            strategy,
        } => {
            let context = read_context(&ctx.io.input, ctx.format.into())?;
            let minsupp = resolve_threshold(&minsupp, context.object_count())?;
            let strategy = match strategy {
                StrategyArg::Levelwise => MiningStrategy::LevelWise,
                StrategyArg::Depthfirst => MiningStrategy::DepthFirst,
            };
            let family = match kind {
                KindArg::Frequent => mine_frequent(&context, minsupp, strategy)?,
                KindArg::Closed => mine_closed(&context, minsupp)?,
                KindArg::Generators => mine_generators(&context, minsupp)?,
                KindArg::MinimalRare => mine_minimal_rare(&context, minsupp)?,
            };
            write_output(&ctx.io.output, &render_family(&context, &family))
        }
        Command::Eqclasses { ctx, minsupp } => {
            let context = read_context(&ctx.io.input, ctx.format.into())?;
            let minsupp = resolve_threshold(&minsupp, context.object_count())?;
            let classes = equivalence_classes(&context, minsupp)?;
            write_output(&ctx.io.output, &render_classes(&context, &classes, minsupp))
        }
        Command::Rules {
            ctx,
            basis,
            minsupp,
            minconf,
        } => {
            let context = read_context(&ctx.io.input, ctx.format.into())?;
            let need_minsupp = |value: &Option<String>| -> CliResult<u64> {
                match value {
                    Some(raw) => resolve_threshold(raw, context.object_count()),
                    None => Err(CliError::Usage(
                        "--minsupp is required for this basis".to_string(),
                    )),
                }
            };
            let text = match basis {
                BasisArg::All => {
                    let s = need_minsupp(&minsupp)?;
                    let c = parse_minconf(&minconf)?;
                    let rules = mine_all_rules(&context, s, c)?;
                    render_rules(&context, &rules, "all", Some(s), Some(c))
                }
                BasisArg::Mnr => {
                    let s = need_minsupp(&minsupp)?;
                    let c = parse_minconf(&minconf)?;
                    let rules = mine_mnr_rules(&context, s, c)?;
                    render_rules(&context, &rules, "mnr", Some(s), Some(c))
                }
                BasisArg::Dg => {
                    let rules = mine_dg_basis(&context);
                    render_rules(&context, &rules, "dg", None, None)
                }
                BasisArg::Rare => {
                    let s = need_minsupp(&minsupp)?;
                    let rules = mine_rare_rules(&context, s)?;
                    render_rules(&context, &rules, "rare", Some(s), None)
                }
            };
            write_output(&ctx.io.output, &text)
        }
        Command::Lattice {
            ctx,
            dot,
            full_extents,
        } => {
            let context = read_context(&ctx.io.input, ctx.format.into())?;
            let diagram = hasse(&build_concepts(&context))?;
            let text = if dot {
                export_dot(&context, &diagram, full_extents)
            } else {
                export_text(&context, &diagram, full_extents)
            };
            write_output(&ctx.io.output, &text)
        }
        Command::Filter {
            io,
            min_antecedent,
            max_antecedent,
            min_consequent,
            max_consequent,
            required,
            side,
        } => {
            let text = read_input(&io.input)?;
            let (records, lines) = parse_rule_lines(&text)?;
            let filter = RuleFilter {
                min_antecedent,
                max_antecedent,
                min_consequent,
                max_consequent,
                required_items: required,
                side: Some(match side {
                    SideArg::Antecedent => Side::Antecedent,
                    SideArg::Consequent => Side::Consequent,
                    SideArg::Either => Side::Either,
                }),
                ranking: None,
            };
            let universe = postprocess::stream_universe(&records);
            let kept = postprocess::filter_rules(&records, &filter, &universe)?;
            let keep_lines: std::collections::HashSet<usize> =
                kept.iter().map(|r| r.line).collect();
            let mut out = String::new();
            for (lineno, line) in lines {
                match lineno {
                    Some(n) if !keep_lines.contains(&n) => {}
                    _ => {
                        out.push_str(line);
                        out.push('\n');
                    }
                }
            }
            write_output(&io.output, &out)
        }
        Command::Topk {
            io,
            measure,
            k,
            direction,
        } => {
            let text = read_input(&io.input)?;
            let direction = match direction {
                DirectionArg::Desc => Direction::Descending,
                DirectionArg::Asc => Direction::Ascending,
            };
            let out = top_k_stream(&text, measure.name(), k, direction)?;
            write_output(&io.output, &out)
        }
        Command::Colorize { io, items, mode } => {
            let text = read_input(&io.input)?;
            let mode = match mode {
                ColorModeArg::Markers => ColorMode::Markers,
                ColorModeArg::Terminal => {
                    if std::env::var_os("NO_COLOR").is_some() {
                        ColorMode::Plain
                    } else {
                        ColorMode::Terminal
                    }
                }
            };
            let out = postprocess::colorize_stream(&text, &items, mode)?;
            write_output(&io.output, &out)
        }
    }
}

// ---------------------------------------------------------------------------
// Stream helpers
// ---------------------------------------------------------------------------

fn is_passthrough(line: &str) -> bool {
    line.trim_start().starts_with('#') || line.trim().is_empty()
}

/// Raw listing line tagged with its record line number, or `None` for
/// passthrough (comment/blank) lines.
type TaggedLines<'a> = Vec<(Option<usize>, &'a str)>;

/// Splits a rule listing into records and raw lines.
fn parse_rule_lines(text: &str) -> CliResult<(Vec<RuleRecord>, TaggedLines<'_>)> {
    let mut records = Vec::new();
    let mut lines = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        if is_passthrough(line) {
            lines.push((None, line));
        } else {
            records.push(RuleRecord::parse(idx + 1, line)?);
            lines.push((Some(idx + 1), line));
        }
    }
    Ok((records, lines))
}

/// Ranks a rule or itemset listing; the kind is detected from the first data
/// line. Comments are re-emitted first, then the k selected lines.
fn top_k_stream(text: &str, measure: &str, k: usize, direction: Direction) -> CliResult<String> {
    let mut out = String::new();
    let mut data: Vec<(usize, &str)> = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        if is_passthrough(line) {
            out.push_str(line);
            out.push('\n');
        } else {
            data.push((idx + 1, line));
        }
    }
    let Some(&(_, first)) = data.first() else {
        return Ok(out);
    };
    if first.contains(" => ") {
        let records: Vec<RuleRecord> = data
            .iter()
            .map(|(n, l)| RuleRecord::parse(*n, l))
            .collect::<Result<_, _>>()?;
        for record in postprocess::top_k_rules(&records, measure, k, direction)? {
            out.push_str(&record.render());
            out.push('\n');
        }
    } else {
        if measure != "support" {
            return Err(CliError::Data(format!(
                "measure '{measure}' is not defined for itemset listings"
            )));
        }
        let records: Vec<ItemsetRecord> = data
            .iter()
            .map(|(n, l)| ItemsetRecord::parse(*n, l))
            .collect::<Result<_, _>>()?;
        for record in postprocess::top_k_itemsets(&records, measure, k, direction)? {
            out.push_str(&record.render());
            out.push('\n');
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Argument parsing helpers
// ---------------------------------------------------------------------------

/// `N` (integer ≥ 1) or `P%` (0 < P ≤ 100, decimals allowed); percentages
/// resolve to ceil(P/100 × objects), with a floor of 1.
fn resolve_threshold(raw: &str, object_count: usize) -> CliResult<u64> {
    let raw = raw.trim();
    if let Some(percent) = raw.strip_suffix('%') {
        let (num, den) = parse_decimal(percent)
            .ok_or_else(|| CliError::Usage(format!("invalid percentage '{raw}'")))?;
        // 0 < P ≤ 100, exactly.
        if num == 0 || num > 100 * den {
            return Err(CliError::Usage(format!(
                "percentage out of range (0, 100]: '{raw}'"
            )));
        }
        let total = num * object_count as u128;
        let scale = den * 100;
        let ceiling = total.div_ceil(scale);
        Ok((ceiling.max(1)) as u64)
    } else {
        match raw.parse::<u64>() {
            Ok(n) if n >= 1 => Ok(n),
            _ => Err(CliError::Usage(format!(
                "invalid minimum support '{raw}' (want an integer ≥ 1 or a percentage)"
            ))),
        }
    }
}

/// Decimal in (0, 1], parsed exactly (0.7 means seven tenths).
fn parse_minconf(raw: &str) -> CliResult<Ratio> {
    let (num, den) = parse_decimal(raw.trim())
        .ok_or_else(|| CliError::Usage(format!("invalid minimum confidence '{raw}'")))?;
    if num == 0 || num > den || den > u64::MAX as u128 {
        return Err(CliError::Usage(format!(
            "minimum confidence out of range (0, 1]: '{raw}'"
        )));
    }
    Ok(Ratio::new(num as u64, den as u64))
}

/// Non-negative decimal literal as an exact fraction (num, den).
fn parse_decimal(text: &str) -> Option<(u128, u128)> {
    let (int_part, frac_part) = match text.split_once('.') {
        Some((i, f)) => (i, f),
        None => (text, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().all(|c| c.is_ascii_digit())
        || !frac_part.chars().all(|c| c.is_ascii_digit())
        || frac_part.len() > 18
    {
        return None;
    }
    let mut num: u128 = if int_part.is_empty() {
        0
    } else {
        int_part.parse().ok()?
    };
    let mut den: u128 = 1;
    for digit in frac_part.chars() {
        num = num.checked_mul(10)?.checked_add(digit.to_digit(10)? as u128)?;
        den = den.checked_mul(10)?;
    }
    Some((num, den))
}

/// `COL=METHOD:BINS` discretization override.
fn parse_override(entry: &str) -> CliResult<(String, DiscretizationMethod, usize)> {
    let bad = || {
        CliError::Usage(format!(
            "invalid override '{entry}' (want COL=equal-width:BINS or COL=equal-frequency:BINS)"
        ))
    };
    let (col, rest) = entry.split_once('=').ok_or_else(bad)?;
    let (method, bins) = rest.split_once(':').ok_or_else(bad)?;
    let method = match method {
        "equal-width" => DiscretizationMethod::EqualWidth,
        "equal-frequency" => DiscretizationMethod::EqualFrequency,
        _ => return Err(bad()),
    };
    let bins: usize = bins.parse().map_err(|_| bad())?;
    Ok((col.to_string(), method, bins))
}

// ---------------------------------------------------------------------------
// I/O plumbing
// ---------------------------------------------------------------------------

fn read_input(path: &Option<PathBuf>) -> CliResult<String> {
    match path {
        Some(p) => std::fs::read_to_string(p)
            .map_err(|e| CliError::Data(format!("cannot read {}: {e}", p.display()))),
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| CliError::Data(format!("cannot read standard input: {e}")))?;
            Ok(buf)
        }
    }
}

fn read_context(path: &Option<PathBuf>, format: ContextFormat) -> CliResult<BinaryContext> {
    let text = read_input(path)?;
    Ok(parse_context(&text, format)?)
}

fn write_output(path: &Option<PathBuf>, text: &str) -> CliResult<()> {
    match path {
        Some(p) => std::fs::write(p, text)
            .map_err(|e| CliError::Data(format!("cannot write {}: {e}", p.display()))),
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            match lock.write_all(text.as_bytes()).and_then(|_| lock.flush()) {
                Ok(()) => Ok(()),
                // Downstream closed the pipe; nothing left to say.
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
                Err(e) => Err(CliError::Data(format!("cannot write output: {e}"))),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thresholds_absolute_and_percent() {
        assert_eq!(resolve_threshold("2", 5).unwrap(), 2);
        assert_eq!(resolve_threshold("40%", 5).unwrap(), 2);
        assert_eq!(resolve_threshold("30%", 20).unwrap(), 6);
        assert_eq!(resolve_threshold("12.5%", 8).unwrap(), 1);
        assert_eq!(resolve_threshold("100%", 7).unwrap(), 7);
        // Ceiling, and a floor of one even on empty contexts.
        assert_eq!(resolve_threshold("41%", 5).unwrap(), 3);
        assert_eq!(resolve_threshold("10%", 0).unwrap(), 1);
    }

    #[test]
    fn thresholds_reject_bad_forms() {
        for bad in ["0", "-1", "1.5", "abc", "0%", "101%", "%", "40%%", ""] {
            assert!(
                matches!(resolve_threshold(bad, 5), Err(CliError::Usage(_))),
                "accepted {bad:?}"
            );
        }
    }

    #[test]
    fn minconf_parsing() {
        assert_eq!(parse_minconf("1").unwrap(), Ratio::one());
        assert_eq!(parse_minconf("1.0").unwrap(), Ratio::one());
        assert_eq!(parse_minconf("0.7").unwrap(), Ratio::new(7, 10));
        assert_eq!(parse_minconf("0.750").unwrap(), Ratio::new(3, 4));
        for bad in ["0", "0.0", "1.2", "x", ""] {
            assert!(parse_minconf(bad).is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn override_parsing() {
        let (col, method, bins) = parse_override("age=equal-frequency:4").unwrap();
        assert_eq!(col, "age");
        assert_eq!(method, DiscretizationMethod::EqualFrequency);
        assert_eq!(bins, 4);
        assert!(parse_override("age=equal-frequency").is_err());
        assert!(parse_override("age:4").is_err());
        assert!(parse_override("age=foo:4").is_err());
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
