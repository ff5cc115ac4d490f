//! Reading, writing, converting, and synthesizing binary contexts, plus
//! discretization of numerical tables.
//!
//! Two text formats are supported. The transaction format has one object per
//! line as whitespace-separated item tokens; a blank line is an object with no
//! items. The matrix format has a header line of item names followed by rows
//! of `0`/`1` tokens. Lines whose first non-blank character is `#` are
//! comments in both formats.

use crate::context::BinaryContext;
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ContextFormat {
    Transactions,
    Matrix,
}

fn is_comment(line: &str) -> bool {
    line.trim_start().starts_with('#')
}

/// Parses the transaction format. Every token is a valid item label, so the
/// only possible failures are context-level (none for text produced here:
/// duplicate tokens collapse and item order is first appearance).
pub fn parse_transactions(text: &str) -> BinaryContext {
    let mut names: Vec<String> = Vec::new();
    let mut index = std::collections::HashMap::new();
    let mut objects: Vec<Vec<usize>> = Vec::new();
    for line in text.lines() {
        if is_comment(line) {
            continue;
        }
        let mut items = Vec::new();
        for token in line.split_whitespace() {
            let id = *index.entry(token.to_string()).or_insert_with(|| {
                names.push(token.to_string());
                names.len() - 1
            });
            items.push(id);
        }
        objects.push(items);
    }
    BinaryContext::new(names, objects).expect("transaction tokens are always valid labels")
}

/// Parses the matrix format: header of item names, then 0/1 rows.
pub fn parse_matrix(text: &str) -> Result<BinaryContext> {
    let mut names: Option<Vec<String>> = None;
    let mut header_line = 0;
    let mut objects: Vec<Vec<usize>> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let lineno = lineno + 1;
        if is_comment(line) {
            continue;
        }
        match &names {
            None => {
                let header: Vec<String> =
                    line.split_whitespace().map(|t| t.to_string()).collect();
                for name in &header {
                    if header.iter().filter(|n| *n == name).count() > 1 {
                        return Err(Error::parse(
                            lineno,
                            format!("duplicate item name '{name}' in header"),
                        ));
                    }
                }
                header_line = lineno;
                names = Some(header);
            }
            Some(header) => {
                let tokens: Vec<&str> = line.split_whitespace().collect();
                if tokens.len() != header.len() {
                    return Err(Error::parse(
                        lineno,
                        format!("expected {} values, found {}", header.len(), tokens.len()),
                    ));
                }
                let mut items = Vec::new();
                for (col, token) in tokens.iter().enumerate() {
                    match *token {
                        "0" => {}
                        "1" => items.push(col),
                        other => {
                            return Err(Error::parse(
                                lineno,
                                format!("invalid token '{other}' (expected 0 or 1)"),
                            ))
                        }
                    }
                }
                objects.push(items);
            }
        }
    }
    let names = names.unwrap_or_default();
    BinaryContext::new(names, objects).map_err(|e| Error::parse(header_line, e.to_string()))
}

pub fn parse_context(text: &str, format: ContextFormat) -> Result<BinaryContext> {
    match format {
        ContextFormat::Transactions => Ok(parse_transactions(text)),
        ContextFormat::Matrix => parse_matrix(text),
    }
}

/// Serializes a context deterministically in canonical item order.
///
/// Matrix output reparses to an identical context. Transaction output cannot
/// carry items no object possesses, nor an item order that differs from first
/// appearance; on its image, parse ∘ serialize is the identity.
pub fn serialize(ctx: &BinaryContext, format: ContextFormat) -> String {
    match format {
        ContextFormat::Transactions => {
            let mut out = String::new();
            for obj in 1..=ctx.object_count() {
                let mut first = true;
                for i in 0..ctx.item_count() {
                    if ctx.object_has_item(obj, i) {
                        if !first {
                            out.push(' ');
                        }
                        out.push_str(ctx.item_name(i));
                        first = false;
                    }
                }
                out.push('\n');
            }
            out
        }
        ContextFormat::Matrix => {
            if ctx.object_count() == 0 && ctx.item_count() == 0 {
                return String::new();
            }
            let mut out = ctx.item_names().join(" ");
            out.push('\n');
            for obj in 1..=ctx.object_count() {
                for i in 0..ctx.item_count() {
                    if i > 0 {
                        out.push(' ');
                    }
                    out.push(if ctx.object_has_item(obj, i) { '1' } else { '0' });
                }
                out.push('\n');
            }
            out
        }
    }
}

/// Objects become items (labeled `o1..oN`) and items become objects.
pub fn transpose(ctx: &BinaryContext) -> BinaryContext {
    let names: Vec<String> = (1..=ctx.object_count()).map(|o| format!("o{o}")).collect();
    let objects: Vec<Vec<usize>> = (0..ctx.item_count())
        .map(|i| {
            (1..=ctx.object_count())
                .filter(|&o| ctx.object_has_item(o, i))
                .map(|o| o - 1)
                .collect()
        })
        .collect();
    BinaryContext::new(names, objects).expect("generated labels are valid")
}

/// Flips every incidence cell; labels are preserved.
pub fn complement(ctx: &BinaryContext) -> BinaryContext {
    let objects: Vec<Vec<usize>> = (1..=ctx.object_count())
        .map(|o| {
            (0..ctx.item_count())
                .filter(|&i| !ctx.object_has_item(o, i))
                .collect()
        })
        .collect();
    BinaryContext::new(ctx.item_names().to_vec(), objects).expect("labels already validated")
}

// ---------------------------------------------------------------------------
// Numeric tables and discretization
// ---------------------------------------------------------------------------

/// A table of decimal values with named columns; empty cells are missing.
#[derive(Clone, Debug, PartialEq)]
pub struct NumericTable {
    pub column_names: Vec<String>,
    pub rows: Vec<Vec<Option<f64>>>,
}

/// Comma-separated values with a header line; `#` comments allowed.
pub fn parse_numeric_table(text: &str) -> Result<NumericTable> {
    let mut column_names: Option<Vec<String>> = None;
    let mut rows = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let lineno = lineno + 1;
        if is_comment(line) || line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        match &column_names {
            None => {
                for name in &fields {
                    if name.is_empty() || name.chars().any(char::is_whitespace) {
                        return Err(Error::parse(
                            lineno,
                            format!("invalid column name '{name}'"),
                        ));
                    }
                    if fields.iter().filter(|n| *n == name).count() > 1 {
                        return Err(Error::parse(
                            lineno,
                            format!("duplicate column name '{name}'"),
                        ));
                    }
                }
                column_names = Some(fields.iter().map(|s| s.to_string()).collect());
            }
            Some(names) => {
                if fields.len() != names.len() {
                    return Err(Error::parse(
                        lineno,
                        format!("expected {} fields, found {}", names.len(), fields.len()),
                    ));
                }
                let mut row = Vec::with_capacity(fields.len());
                for field in fields {
                    if field.is_empty() {
                        row.push(None);
                    } else {
                        let value: f64 = field.parse().map_err(|_| {
                            Error::parse(lineno, format!("non-numeric value '{field}'"))
                        })?;
                        if !value.is_finite() {
                            return Err(Error::parse(
                                lineno,
                                format!("non-finite value '{field}'"),
                            ));
                        }
                        row.push(Some(value));
                    }
                }
                rows.push(row);
            }
        }
    }
    Ok(NumericTable {
        column_names: column_names.unwrap_or_default(),
        rows,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DiscretizationMethod {
    EqualWidth,
    EqualFrequency,
}

/// Global method and bin count, with optional per-column overrides.
#[derive(Clone, Debug)]
pub struct DiscretizationSpec {
    pub method: DiscretizationMethod,
    pub bins: usize,
    pub overrides: Vec<(String, DiscretizationMethod, usize)>,
}

impl DiscretizationSpec {
    pub fn new(method: DiscretizationMethod, bins: usize) -> Self {
        DiscretizationSpec {
            method,
            bins,
            overrides: Vec::new(),
        }
    }

    fn for_column(&self, name: &str) -> (DiscretizationMethod, usize) {
        for (col, method, bins) in &self.overrides {
            if col == name {
                return (*method, *bins);
            }
        }
        (self.method, self.bins)
    }
}

fn format_number(v: f64) -> String {
    format!("{v}")
}

/// Interval labels `col∈[lo;hi)`, with the last bin closed on the right.
fn bin_labels(col: &str, boundaries: &[f64]) -> Vec<String> {
    let bins = boundaries.len() - 1;
    (0..bins)
        .map(|b| {
            let close = if b + 1 == bins { ']' } else { ')' };
            format!(
                "{col}∈[{};{}{close}",
                format_number(boundaries[b]),
                format_number(boundaries[b + 1])
            )
        })
        .collect()
}

/// Turns each numeric column into `bins` interval items; each row sets exactly
/// one item per non-missing cell.
///
/// Equal width splits [min, max] into equal-length intervals; a constant
/// column keeps all rows in bin 1. Equal frequency assigns rank-ordered values
/// to bins whose sizes differ by at most one, ties broken by row order.
pub fn discretize(table: &NumericTable, spec: &DiscretizationSpec) -> Result<BinaryContext> {
    if spec.bins < 1 || spec.overrides.iter().any(|(_, _, b)| *b < 1) {
        return Err(Error::Spec("bins must be at least 1".to_string()));
    }
    if table.rows.is_empty() {
        return Err(Error::Spec("table has no rows".to_string()));
    }
    for (col, _, _) in &spec.overrides {
        if !table.column_names.contains(col) {
            return Err(Error::Spec(format!("override for unknown column '{col}'")));
        }
    }

    let n_rows = table.rows.len();
    let mut names: Vec<String> = Vec::new();
    let mut objects: Vec<Vec<usize>> = vec![Vec::new(); n_rows];
    let mut seen = std::collections::HashSet::new();

    for (col, col_name) in table.column_names.iter().enumerate() {
        let (method, bins) = spec.for_column(col_name);
        let values: Vec<(usize, f64)> = table
            .rows
            .iter()
            .enumerate()
            .filter_map(|(r, row)| row[col].map(|v| (r, v)))
            .collect();

        // Per-row bin assignment, then interval boundaries for the labels.
        let mut assignment: Vec<(usize, usize)> = Vec::with_capacity(values.len());
        let boundaries: Vec<f64> = if values.is_empty() {
            vec![0.0; bins + 1]
        } else {
            let min = values.iter().map(|&(_, v)| v).fold(f64::INFINITY, f64::min);
            let max = values
                .iter()
                .map(|&(_, v)| v)
                .fold(f64::NEG_INFINITY, f64::max);
            match method {
                DiscretizationMethod::EqualWidth => {
                    let width = (max - min) / bins as f64;
                    for &(r, v) in &values {
                        let b = if width > 0.0 {
                            (((v - min) / width).floor() as usize).min(bins - 1)
                        } else {
                            0
                        };
                        assignment.push((r, b));
                    }
                    (0..=bins)
                        .map(|b| {
                            if b == bins {
                                max
                            } else {
                                min + width * b as f64
                            }
                        })
                        .collect()
                }
                DiscretizationMethod::EqualFrequency if min == max => {
                    // Degenerate constant column: all mass in bin 1.
                    for &(r, _) in &values {
                        assignment.push((r, 0));
                    }
                    vec![min; bins + 1]
                }
                DiscretizationMethod::EqualFrequency => {
                    let mut ranked = values.clone();
                    ranked.sort_by(|a, b| a.1.partial_cmp(&b.1).unwrap().then(a.0.cmp(&b.0)));
                    let n = ranked.len();
                    let base = n / bins;
                    let extra = n % bins;
                    let mut bounds = vec![ranked[0].1];
                    let mut pos = 0;
                    for b in 0..bins {
                        let size = base + usize::from(b < extra);
                        for _ in 0..size {
                            assignment.push((ranked[pos].0, b));
                            pos += 1;
                        }
                        if b + 1 < bins {
                            // Lower boundary of the next bin: its first value,
                            // or the previous boundary if it is empty.
                            bounds.push(if pos < n { ranked[pos].1 } else { bounds[b] });
                        }
                    }
                    bounds.push(ranked[n - 1].1);
                    bounds
                }
            }
        };

        let first_item = names.len();
        for label in bin_labels(col_name, &boundaries) {
            // Degenerate intervals can repeat; suffix an ordinal to keep
            // labels unique.
            let mut unique = label.clone();
            let mut k = 1;
            while !seen.insert(unique.clone()) {
                k += 1;
                unique = format!("{label}#{k}");
            }
            names.push(unique);
        }
        for (r, b) in assignment {
            objects[r].push(first_item + b);
        }
    }

    BinaryContext::new(names, objects)
}

// ---------------------------------------------------------------------------
// Random context generation
// ---------------------------------------------------------------------------

/// SplitMix64 step; fixed algorithm so seeded output is identical on every
/// platform.
fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Random context over items `i1..iM`: each cell is set independently with
/// probability `density`, drawn row-major from a SplitMix64 stream seeded by
/// `seed`.
pub fn random_context(
    n_objects: usize,
    n_items: usize,
    density: f64,
    seed: u64,
) -> Result<BinaryContext> {
    if !(0.0..=1.0).contains(&density) {
        return Err(Error::Spec(format!(
            "density must be in [0, 1], got {density}"
        )));
    }
    let names: Vec<String> = (1..=n_items).map(|i| format!("i{i}")).collect();
    let mut state = seed;
    let objects: Vec<Vec<usize>> = (0..n_objects)
        .map(|_| {
            (0..n_items)
                .filter(|_| {
                    let draw = (splitmix64(&mut state) >> 11) as f64 / (1u64 << 53) as f64;
                    draw < density
                })
                .collect()
        })
        .collect();
    BinaryContext::new(names, objects)
}
