//! Itemset family extraction: frequent, frequent closed, frequent generators,
//! and minimal rare itemsets, plus closure equivalence classes.
//!
//! Two interchangeable frequent-mining strategies are provided. The level-wise
//! strategy joins k-sets sharing a (k−1)-prefix and prunes candidates with an
//! infrequent subset before counting against the rows. The depth-first
//! strategy extends prefixes in canonical item order, intersecting object
//! extents kept as bitsets. Both return the same family; output order is
//! always (cardinality, lexicographic) and never leaks traversal order.

use std::collections::HashMap;

use crate::bits::Bitset;
use crate::context::{BinaryContext, Itemset, SupportedItemset};
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FamilyKind {
    Frequent,
    Closed,
    Generators,
    MinimalRare,
}

impl FamilyKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            FamilyKind::Frequent => "frequent",
            FamilyKind::Closed => "closed",
            FamilyKind::Generators => "generators",
            FamilyKind::MinimalRare => "minimal-rare",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MiningStrategy {
    LevelWise,
    DepthFirst,
}

/// A deduplicated itemset collection tagged by family kind.
///
/// Members are sorted by (cardinality, lexicographic canonical order).
/// Frequent, closed, and generator members have support ≥ minsupp;
/// minimal-rare members have support < minsupp.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ItemsetFamily {
    pub kind: FamilyKind,
    pub minsupp: u64,
    pub members: Vec<SupportedItemset>,
}

impl ItemsetFamily {
    fn new(kind: FamilyKind, minsupp: u64, mut members: Vec<SupportedItemset>) -> Self {
        members.sort_by(|a, b| a.itemset.cmp(&b.itemset));
        ItemsetFamily {
            kind,
            minsupp,
            members,
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, itemset: &Itemset) -> bool {
        self.members.iter().any(|m| &m.itemset == itemset)
    }

    pub fn support_of(&self, itemset: &Itemset) -> Option<u64> {
        self.members
            .iter()
            .find(|m| &m.itemset == itemset)
            .map(|m| m.support)
    }
}

/// A closed itemset with its minimal generators; all members of the class
/// share one support.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EquivalenceClass {
    pub closed: SupportedItemset,
    pub generators: Vec<Itemset>,
}

fn check_minsupp(minsupp: u64) -> Result<()> {
    if minsupp < 1 {
        Err(Error::Threshold(
            "minimum support must be at least 1".to_string(),
        ))
    } else {
        Ok(())
    }
}

/// Level-wise pass: returns the frequent sets and the negative border
/// (candidates whose every proper non-empty subset is frequent but which fall
/// below the threshold themselves).
fn levelwise_scan(
    ctx: &BinaryContext,
    minsupp: u64,
) -> (Vec<SupportedItemset>, Vec<SupportedItemset>) {
    let m = ctx.item_count();
    let mut frequent: Vec<SupportedItemset> = Vec::new();
    let mut border: Vec<SupportedItemset> = Vec::new();

    // Level 1: every single item is a candidate.
    let mut level: Vec<Vec<usize>> = Vec::new();
    for i in 0..m {
        let support = ctx.item_extent(i).count() as u64;
        let member = SupportedItemset {
            itemset: Itemset::new([i]),
            support,
        };
        if support >= minsupp {
            level.push(vec![i]);
            frequent.push(member);
        } else {
            border.push(member);
        }
    }

    while !level.is_empty() {
        let prev: std::collections::HashSet<&[usize]> =
            level.iter().map(|v| v.as_slice()).collect();
        let mut next: Vec<Vec<usize>> = Vec::new();
        // Join pairs sharing a (k−1)-prefix; `level` is lexicographically
        // sorted, so joinable pairs are adjacent runs.
        for a in 0..level.len() {
            for b in (a + 1)..level.len() {
                let (left, right) = (&level[a], &level[b]);
                let k = left.len();
                if left[..k - 1] != right[..k - 1] {
                    break;
                }
                let mut candidate = left.clone();
                candidate.push(right[k - 1]);
                // Subset pruning: all k-subsets must be frequent. For the
                // negative border this check is what makes members minimal.
                let all_subsets_frequent = (0..candidate.len()).all(|drop| {
                    let mut sub = candidate.clone();
                    sub.remove(drop);
                    prev.contains(sub.as_slice())
                });
                if !all_subsets_frequent {
                    continue;
                }
                let support = count_by_row_scan(ctx, &candidate);
                let member = SupportedItemset {
                    itemset: Itemset::new(candidate.iter().copied()),
                    support,
                };
                if support >= minsupp {
                    next.push(candidate);
                    frequent.push(member);
                } else {
                    border.push(member);
                }
            }
        }
        level = next;
    }

    (frequent, border)
}

fn count_by_row_scan(ctx: &BinaryContext, items: &[usize]) -> u64 {
    let bits = Bitset::from_indices(ctx.item_count(), items.iter().copied());
    (0..ctx.object_count())
        .filter(|&o| bits.is_subset_of(ctx.row(o)))
        .count() as u64
}

fn depthfirst_scan(ctx: &BinaryContext, minsupp: u64) -> Vec<SupportedItemset> {
    let m = ctx.item_count();
    let mut out = Vec::new();
    let mut prefix: Vec<usize> = Vec::new();
    let all = Bitset::full(ctx.object_count());
    descend(ctx, minsupp, m, &mut prefix, &all, 0, &mut out);
    out
}

fn descend(
    ctx: &BinaryContext,
    minsupp: u64,
    m: usize,
    prefix: &mut Vec<usize>,
    extent: &Bitset,
    start: usize,
    out: &mut Vec<SupportedItemset>,
) {
    for i in start..m {
        let narrowed = extent.intersection(ctx.item_extent(i));
        let support = narrowed.count() as u64;
        if support < minsupp {
            continue;
        }
        prefix.push(i);
        out.push(SupportedItemset {
            itemset: Itemset::new(prefix.iter().copied()),
            support,
        });
        descend(ctx, minsupp, m, prefix, &narrowed, i + 1, out);
        prefix.pop();
    }
}

/// All non-empty itemsets with support ≥ minsupp. Both strategies return the
/// identical family.
pub fn mine_frequent(
    ctx: &BinaryContext,
    minsupp: u64,
    strategy: MiningStrategy,
) -> Result<ItemsetFamily> {
    check_minsupp(minsupp)?;
    let members = match strategy {
        MiningStrategy::LevelWise => levelwise_scan(ctx, minsupp).0,
        MiningStrategy::DepthFirst => depthfirst_scan(ctx, minsupp),
    };
    Ok(ItemsetFamily::new(FamilyKind::Frequent, minsupp, members))
}

/// The frequent itemsets that are closure fixed points.
pub fn mine_closed(ctx: &BinaryContext, minsupp: u64) -> Result<ItemsetFamily> {
    check_minsupp(minsupp)?;
    let members = depthfirst_scan(ctx, minsupp)
        .into_iter()
        .filter(|m| ctx.closure(&m.itemset).expect("mined itemsets are valid") == m.itemset)
        .collect();
    Ok(ItemsetFamily::new(FamilyKind::Closed, minsupp, members))
}

/// The frequent itemsets minimal within their closure class: removing any
/// item strictly increases support.
pub fn mine_generators(ctx: &BinaryContext, minsupp: u64) -> Result<ItemsetFamily> {
    check_minsupp(minsupp)?;
    let frequent = depthfirst_scan(ctx, minsupp);
    let mut support_of: HashMap<&[usize], u64> = HashMap::with_capacity(frequent.len());
    for m in &frequent {
        support_of.insert(m.itemset.items(), m.support);
    }
    let n = ctx.object_count() as u64;
    let members = frequent
        .iter()
        .filter(|m| {
            m.itemset.items().iter().all(|&drop| {
                let sub: Vec<usize> = m
                    .itemset
                    .items()
                    .iter()
                    .copied()
                    .filter(|&i| i != drop)
                    .collect();
                // Proper subsets of a frequent set are frequent, so the
                // lookup only misses for the empty set.
                let sub_support = if sub.is_empty() {
                    n
                } else {
                    support_of[sub.as_slice()]
                };
                m.support < sub_support
            })
        })
        .cloned()
        .collect();
    Ok(ItemsetFamily::new(FamilyKind::Generators, minsupp, members))
}

/// The negative border: itemsets below the threshold whose every proper
/// non-empty subset is frequent. Zero-support members are legal.
pub fn mine_minimal_rare(ctx: &BinaryContext, minsupp: u64) -> Result<ItemsetFamily> {
    check_minsupp(minsupp)?;
    let border = levelwise_scan(ctx, minsupp).1;
    Ok(ItemsetFamily::new(FamilyKind::MinimalRare, minsupp, border))
}

/// One class per frequent closed itemset, pairing it with its minimal
/// generators. The class of closure(∅) is included (with the empty set as its
/// generator) whenever the context has at least `minsupp` objects, so the
/// classes partition the frequent sets exactly.
pub fn equivalence_classes(ctx: &BinaryContext, minsupp: u64) -> Result<Vec<EquivalenceClass>> {
    check_minsupp(minsupp)?;
    let closed = mine_closed(ctx, minsupp)?;
    let generators = mine_generators(ctx, minsupp)?;

    let mut by_closure: HashMap<Itemset, Vec<Itemset>> = HashMap::new();
    for g in &generators.members {
        let c = ctx.closure(&g.itemset).expect("mined itemsets are valid");
        by_closure.entry(c).or_default().push(g.itemset.clone());
    }

    let empty_closure = ctx.closure(&Itemset::empty()).expect("empty set is valid");
    let mut classes = Vec::new();
    if ctx.object_count() as u64 >= minsupp {
        classes.push(EquivalenceClass {
            closed: SupportedItemset {
                itemset: empty_closure.clone(),
                support: ctx.object_count() as u64,
            },
            generators: vec![Itemset::empty()],
        });
    }
    for member in &closed.members {
        if member.itemset == empty_closure {
            continue; // already present as the closure(∅) class
        }
        let mut gens = by_closure.remove(&member.itemset).unwrap_or_default();
        gens.sort();
        classes.push(EquivalenceClass {
            closed: member.clone(),
            generators: gens,
        });
    }
    classes.sort_by(|a, b| a.closed.itemset.cmp(&b.closed.itemset));
    Ok(classes)
}

/// Family listing: a header comment, then one `{i1, i2} (supp)` line per
/// member.
pub fn render_family(ctx: &BinaryContext, family: &ItemsetFamily) -> String {
    let mut out = format!(
        "# itemsets kind={} minsupp={} objects={} items={}\n",
        family.kind.as_str(),
        family.minsupp,
        ctx.object_count(),
        ctx.item_count()
    );
    for m in &family.members {
        out.push_str(&format!(
            "{} ({})\n",
            ctx.render_itemset(&m.itemset),
            m.support
        ));
    }
    out
}

/// Class listing: `closed <- generators (support)`, one class per line.
pub fn render_classes(
    ctx: &BinaryContext,
    classes: &[EquivalenceClass],
    minsupp: u64,
) -> String {
    let mut out = format!(
        "# eqclasses minsupp={} objects={} items={} classes={}\n",
        minsupp,
        ctx.object_count(),
        ctx.item_count(),
        classes.len()
    );
    for class in classes {
        let gens: Vec<String> = class
            .generators
            .iter()
            .map(|g| ctx.render_itemset(g))
            .collect();
        out.push_str(&format!(
            "{} <- {} ({})\n",
            ctx.render_itemset(&class.closed.itemset),
            gens.join(", "),
            class.closed.support
        ));
    }
    out
}
