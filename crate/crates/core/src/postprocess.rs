//! Filtering, ranking, and annotation of extracted units.
//!
//! These operations work on the serialized line formats the miners emit, so
//! they compose in shell pipelines as well as in memory. A rule line is
//! `{a} => {c} (supp=3 [0.600]; conf=0.750; lift=1.250; conv=1.600)`; an
//! itemset line is `{a, c} (3)`. Comment lines pass through untouched.

use std::cmp::Ordering;
use std::collections::HashSet;

use crate::context::{brace_join, BinaryContext};
use crate::error::{Error, Result};
use crate::rules::AssociationRule;

/// One rule read back from (or destined for) the listing format. The measure
/// block is kept verbatim so re-rendering is byte-identical.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RuleRecord {
    pub line: usize,
    pub antecedent: Vec<String>,
    pub consequent: Vec<String>,
    measures: String,
}

/// One itemset line read back from a family listing.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ItemsetRecord {
    pub line: usize,
    pub items: Vec<String>,
    pub support: u64,
}

fn parse_braced(part: &str) -> Option<Vec<String>> {
    let inner = part.strip_prefix('{')?.strip_suffix('}')?;
    if inner.is_empty() {
        return Some(Vec::new());
    }
    let labels: Vec<String> = inner.split(", ").map(|s| s.to_string()).collect();
    if labels.iter().any(|l| l.is_empty() || l.chars().any(char::is_whitespace)) {
        return None;
    }
    Some(labels)
}

impl RuleRecord {
    pub fn parse(line: usize, text: &str) -> Result<RuleRecord> {
        let bad = |msg: &str| Error::parse(line, format!("{msg} in rule line {text:?}"));
        let (ant_part, rest) = text
            .split_once(" => ")
            .ok_or_else(|| bad("missing ' => '"))?;
        let (cons_part, meas_part) = rest
            .rsplit_once(" (")
            .ok_or_else(|| bad("missing measure block"))?;
        let measures = meas_part
            .strip_suffix(')')
            .ok_or_else(|| bad("unterminated measure block"))?;
        let antecedent = parse_braced(ant_part).ok_or_else(|| bad("malformed antecedent"))?;
        let consequent = parse_braced(cons_part).ok_or_else(|| bad("malformed consequent"))?;
        Ok(RuleRecord {
            line,
            antecedent,
            consequent,
            measures: measures.to_string(),
        })
    }

    pub fn from_rule(ctx: &BinaryContext, rule: &AssociationRule) -> RuleRecord {
        RuleRecord {
            line: 0,
            antecedent: rule
                .antecedent
                .items()
                .iter()
                .map(|&i| ctx.item_name(i).to_string())
                .collect(),
            consequent: rule
                .consequent
                .items()
                .iter()
                .map(|&i| ctx.item_name(i).to_string())
                .collect(),
            measures: rule.measures.render(),
        }
    }

    pub fn render(&self) -> String {
        format!(
            "{} => {} ({})",
            brace_join(self.antecedent.iter().map(|s| s.as_str())),
            brace_join(self.consequent.iter().map(|s| s.as_str())),
            self.measures
        )
    }

    fn render_wrapped(&self, wanted: &HashSet<String>, mode: ColorMode) -> String {
        let wrap = |labels: &[String]| {
            brace_join_owned(
                labels
                    .iter()
                    .map(|l| {
                        if wanted.contains(l) {
                            mode.wrap(l)
                        } else {
                            l.clone()
                        }
                    })
                    .collect(),
            )
        };
        format!(
            "{} => {} ({})",
            wrap(&self.antecedent),
            wrap(&self.consequent),
            self.measures
        )
    }

    pub fn mentions(&self, item: &str, side: Side) -> bool {
        let in_ant = self.antecedent.iter().any(|l| l == item);
        let in_cons = self.consequent.iter().any(|l| l == item);
        match side {
            Side::Antecedent => in_ant,
            Side::Consequent => in_cons,
            Side::Either => in_ant || in_cons,
        }
    }

    /// Ranking value of one measure, parsed from the measure block.
    pub fn measure(&self, name: &str) -> Result<StreamValue> {
        let prefix = match name {
            "support" => "supp=",
            "confidence" => "conf=",
            "lift" => "lift=",
            "conviction" => "conv=",
            other => return Err(Error::UnknownMeasure(other.to_string())),
        };
        for field in self.measures.split("; ") {
            if let Some(value) = field.strip_prefix(prefix) {
                // The support field carries the relative value too: "4 [0.800]".
                let value = value.split_whitespace().next().unwrap_or(value);
                return StreamValue::parse(value)
                    .ok_or_else(|| Error::parse(self.line, format!("bad {name} value '{value}'")));
            }
        }
        Err(Error::parse(self.line, format!("no {name} field")))
    }

    fn canonical_key(&self) -> (usize, &[String], usize, &[String]) {
        (
            self.antecedent.len(),
            &self.antecedent,
            self.consequent.len(),
            &self.consequent,
        )
    }
}

fn brace_join_owned(labels: Vec<String>) -> String {
    brace_join(labels.iter().map(|s| s.as_str()))
}

impl ItemsetRecord {
    pub fn parse(line: usize, text: &str) -> Result<ItemsetRecord> {
        let bad = |msg: &str| Error::parse(line, format!("{msg} in itemset line {text:?}"));
        let (items_part, supp_part) = text
            .rsplit_once(" (")
            .ok_or_else(|| bad("missing support"))?;
        let support: u64 = supp_part
            .strip_suffix(')')
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| bad("malformed support"))?;
        let items = parse_braced(items_part).ok_or_else(|| bad("malformed itemset"))?;
        Ok(ItemsetRecord {
            line,
            items,
            support,
        })
    }

    pub fn render(&self) -> String {
        format!(
            "{} ({})",
            brace_join(self.items.iter().map(|s| s.as_str())),
            self.support
        )
    }

    fn canonical_key(&self) -> (usize, &[String]) {
        (self.items.len(), &self.items)
    }
}

/// A ranking value read from text: `undef` sorts below every finite value,
/// `inf` above.
#[derive(Clone, Copy, PartialEq, Debug)]
pub enum StreamValue {
    Undefined,
    Finite(f64),
    Infinite,
}

impl StreamValue {
    fn parse(text: &str) -> Option<StreamValue> {
        match text {
            "inf" => Some(StreamValue::Infinite),
            "undef" => Some(StreamValue::Undefined),
            num => num
                .parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .map(StreamValue::Finite),
        }
    }

    fn rank(&self) -> (u8, f64) {
        match self {
            StreamValue::Undefined => (0, 0.0),
            StreamValue::Finite(v) => (1, *v),
            StreamValue::Infinite => (2, 0.0),
        }
    }

    fn cmp_total(&self, other: &StreamValue) -> Ordering {
        let (ta, va) = self.rank();
        let (tb, vb) = other.rank();
        ta.cmp(&tb).then_with(|| va.total_cmp(&vb))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Antecedent,
    Consequent,
    Either,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Direction {
    Ascending,
    Descending,
}

/// Length bounds and item-membership constraints on rules. The optional
/// ranking field is carried for callers that chain a top-k step; it is not
/// applied by [`filter_rules`] itself.
#[derive(Clone, Debug, Default)]
pub struct RuleFilter {
    pub min_antecedent: Option<usize>,
    pub max_antecedent: Option<usize>,
    pub min_consequent: Option<usize>,
    pub max_consequent: Option<usize>,
    pub required_items: Vec<String>,
    pub side: Option<Side>,
    pub ranking: Option<(String, Direction)>,
}

impl RuleFilter {
    fn validate(&self, universe: &HashSet<String>) -> Result<()> {
        let ordered = |lo: Option<usize>, hi: Option<usize>| match (lo, hi) {
            (Some(a), Some(b)) => a <= b,
            _ => true,
        };
        if !ordered(self.min_antecedent, self.max_antecedent)
            || !ordered(self.min_consequent, self.max_consequent)
        {
            return Err(Error::Spec(
                "filter bounds must satisfy min ≤ max".to_string(),
            ));
        }
        for item in &self.required_items {
            if !universe.contains(item) {
                return Err(Error::UnknownItem(item.clone()));
            }
        }
        Ok(())
    }

    fn keeps(&self, rule: &RuleRecord) -> bool {
        let within = |len: usize, lo: Option<usize>, hi: Option<usize>| {
            lo.is_none_or(|b| len >= b) && hi.is_none_or(|b| len <= b)
        };
        within(
            rule.antecedent.len(),
            self.min_antecedent,
            self.max_antecedent,
        ) && within(
            rule.consequent.len(),
            self.min_consequent,
            self.max_consequent,
        ) && self
            .required_items
            .iter()
            .all(|item| rule.mentions(item, self.side.unwrap_or(Side::Either)))
    }
}

/// All item labels occurring in a set of rule records.
pub fn stream_universe(rules: &[RuleRecord]) -> HashSet<String> {
    rules
        .iter()
        .flat_map(|r| r.antecedent.iter().chain(r.consequent.iter()))
        .cloned()
        .collect()
}

/// Keeps exactly the rules satisfying every present constraint, preserving
/// input order. Required items must exist in `universe`.
pub fn filter_rules(
    rules: &[RuleRecord],
    filter: &RuleFilter,
    universe: &HashSet<String>,
) -> Result<Vec<RuleRecord>> {
    filter.validate(universe)?;
    Ok(rules.iter().filter(|r| filter.keeps(r)).cloned().collect())
}

/// The k best rules under (measure, canonical order), deterministic and
/// independent of input order.
pub fn top_k_rules(
    rules: &[RuleRecord],
    measure: &str,
    k: usize,
    direction: Direction,
) -> Result<Vec<RuleRecord>> {
    let mut keyed: Vec<(StreamValue, &RuleRecord)> = rules
        .iter()
        .map(|r| Ok((r.measure(measure)?, r)))
        .collect::<Result<_>>()?;
    keyed.sort_by(|(va, ra), (vb, rb)| {
        let by_measure = match direction {
            Direction::Descending => vb.cmp_total(va),
            Direction::Ascending => va.cmp_total(vb),
        };
        by_measure.then_with(|| ra.canonical_key().cmp(&rb.canonical_key()))
    });
    Ok(keyed.into_iter().take(k).map(|(_, r)| r.clone()).collect())
}

/// The k best itemsets; `support` is the only itemset measure.
pub fn top_k_itemsets(
    records: &[ItemsetRecord],
    measure: &str,
    k: usize,
    direction: Direction,
) -> Result<Vec<ItemsetRecord>> {
    if measure != "support" {
        return Err(Error::UnknownMeasure(measure.to_string()));
    }
    let mut sorted: Vec<&ItemsetRecord> = records.iter().collect();
    sorted.sort_by(|a, b| {
        let by_support = match direction {
            Direction::Descending => b.support.cmp(&a.support),
            Direction::Ascending => a.support.cmp(&b.support),
        };
        by_support.then_with(|| a.canonical_key().cmp(&b.canonical_key()))
    });
    Ok(sorted.into_iter().take(k).cloned().collect())
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ColorMode {
    /// ANSI escape sequences around each selected item.
    Terminal,
    /// `[*item*]` markers, safe for golden tests.
    Markers,
    /// No wrapping; listing passes through unchanged.
    Plain,
}

impl ColorMode {
    fn wrap(&self, label: &str) -> String {
        match self {
            ColorMode::Terminal => format!("\x1b[1;31m{label}\x1b[0m"),
            ColorMode::Markers => format!("[*{label}*]"),
            ColorMode::Plain => label.to_string(),
        }
    }
}

/// Re-emits a rule listing with every occurrence of a selected item wrapped.
/// Comments and blank lines pass through verbatim; the underlying rule text
/// is otherwise unchanged.
pub fn colorize_stream(
    text: &str,
    items: &[String],
    mode: ColorMode,
) -> Result<String> {
    let mut records: Vec<Option<RuleRecord>> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        if line.trim_start().starts_with('#') || line.trim().is_empty() {
            records.push(None);
        } else {
            records.push(Some(RuleRecord::parse(lineno + 1, line)?));
        }
    }
    let universe = stream_universe(
        &records
            .iter()
            .flatten()
            .cloned()
            .collect::<Vec<RuleRecord>>(),
    );
    for item in items {
        if !universe.contains(item) {
            return Err(Error::UnknownItem(item.clone()));
        }
    }
    let wanted: HashSet<String> = items.iter().cloned().collect();
    let mut out = String::new();
    for (line, record) in text.lines().zip(records.iter()) {
        match record {
            None => out.push_str(line),
            Some(r) => out.push_str(&r.render_wrapped(&wanted, mode)),
        }
        out.push('\n');
    }
    Ok(out)
}

/// Removes `[*` / `*]` markers, inverting marker-mode colorize output.
pub fn strip_markers(text: &str) -> String {
    text.replace("[*", "").replace("*]", "")
}
