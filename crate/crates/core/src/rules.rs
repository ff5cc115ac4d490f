//! Association rule generation: the full confident-rule set, the minimal
//! non-redundant (informative) basis, the Duquenne–Guigues implication basis,
//! and exact rules from minimal rare itemsets.
//!
//! Confidence thresholds are exact rationals; `minconf = 1` means integer
//! equality of supports, never a float comparison.

use crate::bits::Bitset;
use crate::context::{BinaryContext, Itemset};
use crate::error::{Error, Result};
use crate::itemsets::{self, MiningStrategy};
use crate::lectic;
use crate::measure::{Ratio, RuleMeasures};

/// Disjoint antecedent/consequent pair with its measures. The antecedent is
/// empty only in the Duquenne–Guigues basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AssociationRule {
    pub antecedent: Itemset,
    pub consequent: Itemset,
    pub measures: RuleMeasures,
}

impl AssociationRule {
    fn new(
        ctx: &BinaryContext,
        antecedent: Itemset,
        consequent: Itemset,
        antecedent_support: u64,
        rule_support: u64,
    ) -> Result<Self> {
        debug_assert!(!antecedent.intersects(&consequent));
        let consequent_support = ctx.support(&consequent)?;
        Ok(AssociationRule {
            antecedent,
            consequent,
            measures: RuleMeasures::from_counts(
                ctx.object_count() as u64,
                antecedent_support,
                consequent_support,
                rule_support,
            ),
        })
    }
}

fn sort_rules(rules: &mut [AssociationRule]) {
    rules.sort_by(|a, b| {
        a.antecedent
            .cmp(&b.antecedent)
            .then_with(|| a.consequent.cmp(&b.consequent))
    });
}

fn check_minconf(minconf: Ratio) -> Result<()> {
    if minconf.num() == 0 || minconf > Ratio::one() {
        Err(Error::Threshold(
            "minimum confidence must satisfy 0 < c ≤ 1".to_string(),
        ))
    } else {
        Ok(())
    }
}

/// Exact test for supp_xy / supp_x ≥ minconf, valid for supp_x > 0.
fn meets_confidence(supp_xy: u64, supp_x: u64, minconf: Ratio) -> bool {
    supp_xy as u128 * minconf.den() as u128 >= minconf.num() as u128 * supp_x as u128
}

/// Every confident split of every frequent itemset: for each frequent Z with
/// |Z| ≥ 2 and each non-empty proper subset A ⊂ Z, emits A → Z∖A when its
/// confidence reaches `minconf`. Sorted by (antecedent, consequent).
pub fn mine_all_rules(
    ctx: &BinaryContext,
    minsupp: u64,
    minconf: Ratio,
) -> Result<Vec<AssociationRule>> {
    check_minconf(minconf)?;
    let frequent = itemsets::mine_frequent(ctx, minsupp, MiningStrategy::DepthFirst)?;
    let mut support_of: std::collections::HashMap<&[usize], u64> = Default::default();
    for m in &frequent.members {
        support_of.insert(m.itemset.items(), m.support);
    }

    let mut rules = Vec::new();
    for member in &frequent.members {
        let z = member.itemset.items();
        if z.len() < 2 {
            continue;
        }
        // Proper non-empty subsets of Z as bitmasks over its positions.
        for mask in 1..((1u64 << z.len()) - 1) {
            let mut antecedent = Vec::new();
            let mut consequent = Vec::new();
            for (pos, &item) in z.iter().enumerate() {
                if mask & (1 << pos) != 0 {
                    antecedent.push(item);
                } else {
                    consequent.push(item);
                }
            }
            let supp_a = support_of[antecedent.as_slice()];
            if !meets_confidence(member.support, supp_a, minconf) {
                continue;
            }
            rules.push(AssociationRule::new(
                ctx,
                Itemset::new(antecedent),
                Itemset::new(consequent),
                supp_a,
                member.support,
            )?);
        }
    }
    sort_rules(&mut rules);
    Ok(rules)
}

/// The minimal non-redundant (informative) basis.
///
/// Exact part: g → closure(g)∖g for every frequent generator g that is not
/// closed. Approximate part: g → c∖g for every frequent closed c strictly
/// containing closure(g), kept when confidence reaches `minconf`; such rules
/// always have confidence < 1, so at `minconf = 1` the exact part stands
/// alone.
pub fn mine_mnr_rules(
    ctx: &BinaryContext,
    minsupp: u64,
    minconf: Ratio,
) -> Result<Vec<AssociationRule>> {
    check_minconf(minconf)?;
    let generators = itemsets::mine_generators(ctx, minsupp)?;
    let closed = itemsets::mine_closed(ctx, minsupp)?;

    let mut rules = Vec::new();
    for g in &generators.members {
        let g_closure = ctx.closure(&g.itemset)?;
        if g_closure != g.itemset {
            rules.push(AssociationRule::new(
                ctx,
                g.itemset.clone(),
                g_closure.difference(&g.itemset),
                g.support,
                g.support,
            )?);
        }
        for c in &closed.members {
            if g_closure != c.itemset && g_closure.is_subset_of(&c.itemset) {
                if !meets_confidence(c.support, g.support, minconf) {
                    continue;
                }
                rules.push(AssociationRule::new(
                    ctx,
                    g.itemset.clone(),
                    c.itemset.difference(&g.itemset),
                    g.support,
                    c.support,
                )?);
            }
        }
    }
    sort_rules(&mut rules);
    Ok(rules)
}

/// The Duquenne–Guigues basis: one exact implication P → closure(P)∖P per
/// pseudo-closed set P, computed by stepping through the fixed points of
/// implication closure in lectic order. The empty antecedent is legal here.
pub fn mine_dg_basis(ctx: &BinaryContext) -> Vec<AssociationRule> {
    let m = ctx.item_count();
    // (premise, its context closure); conclusions applied during saturation.
    let mut basis: Vec<(Bitset, Bitset)> = Vec::new();
    let mut current = saturate(&Bitset::new(m), &basis);
    loop {
        let closed = ctx.closure_bits(&current);
        if closed != current {
            basis.push((current.clone(), closed));
        }
        let mut step = |x: &Bitset| saturate(x, &basis);
        match lectic::next_closed(&current, m, &mut step) {
            Some(next) => current = next,
            None => break,
        }
    }

    let mut rules: Vec<AssociationRule> = basis
        .into_iter()
        .map(|(premise_bits, closure_bits)| {
            let premise = Itemset::from_bits(&premise_bits);
            let closure = Itemset::from_bits(&closure_bits);
            let support = ctx
                .support(&premise)
                .expect("premise indices come from the context");
            AssociationRule::new(
                ctx,
                premise.clone(),
                closure.difference(&premise),
                support,
                support,
            )
            .expect("premise and consequent are disjoint by construction")
        })
        .collect();
    sort_rules(&mut rules);
    rules
}

/// Saturation of `x` under the implications gathered so far: a closure
/// operator, so lectic enumeration over it is sound.
fn saturate(x: &Bitset, basis: &[(Bitset, Bitset)]) -> Bitset {
    let mut out = x.clone();
    loop {
        let mut changed = false;
        for (premise, conclusion) in basis {
            if premise.is_subset_of(&out) && !conclusion.is_subset_of(&out) {
                out.union_with(conclusion);
                changed = true;
            }
        }
        if !changed {
            return out;
        }
    }
}

/// Exact rules from the negative border: m → closure(m)∖m for every minimal
/// rare itemset with non-zero support that is not closed.
pub fn mine_rare_rules(ctx: &BinaryContext, minsupp: u64) -> Result<Vec<AssociationRule>> {
    let rare = itemsets::mine_minimal_rare(ctx, minsupp)?;
    let mut rules = Vec::new();
    for member in &rare.members {
        if member.support == 0 {
            continue;
        }
        let closure = ctx.closure(&member.itemset)?;
        if closure == member.itemset {
            continue;
        }
        rules.push(AssociationRule::new(
            ctx,
            member.itemset.clone(),
            closure.difference(&member.itemset),
            member.support,
            member.support,
        )?);
    }
    sort_rules(&mut rules);
    Ok(rules)
}

/// One rule per line:
/// `{b} => {e} (supp=4 [0.800]; conf=1.000; lift=1.250; conv=inf)`.
pub fn render_rule(ctx: &BinaryContext, rule: &AssociationRule) -> String {
    format!(
        "{} => {} ({})",
        ctx.render_itemset(&rule.antecedent),
        ctx.render_itemset(&rule.consequent),
        rule.measures.render()
    )
}

/// Rule listing with a header comment naming the basis and thresholds.
pub fn render_rules(
    ctx: &BinaryContext,
    rules: &[AssociationRule],
    basis: &str,
    minsupp: Option<u64>,
    minconf: Option<Ratio>,
) -> String {
    let mut out = format!("# rules basis={basis}");
    if let Some(s) = minsupp {
        out.push_str(&format!(" minsupp={s}"));
    }
    if let Some(c) = minconf {
        out.push_str(&format!(" minconf={}", c.format_3()));
    }
    out.push_str(&format!(
        " objects={} items={}\n",
        ctx.object_count(),
        ctx.item_count()
    ));
    for rule in rules {
        out.push_str(&render_rule(ctx, rule));
        out.push('\n');
    }
    out
}
