//! Brute-force oracle used by the integration suites.
//!
//! Everything here recomputes results from raw incidence cells by powerset
//! enumeration and row scans, independently of the library's mining paths
//! (bitsets, prefix joins, lectic stepping). Only cell reads and labels come
//! from the context under test.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use binmine_core::{BinaryContext, MeasureValue};

/// Plain incidence snapshot extracted cell by cell.
pub struct Raw {
    pub n: usize,
    pub m: usize,
    pub rows: Vec<Vec<bool>>,
}

pub fn raw(ctx: &BinaryContext) -> Raw {
    let n = ctx.object_count();
    let m = ctx.item_count();
    let rows = (1..=n)
        .map(|o| (0..m).map(|i| ctx.object_has_item(o, i)).collect())
        .collect();
    Raw { n, m, rows }
}

/// All subsets of 0..m, sorted by (cardinality, lexicographic).
pub fn subsets(m: usize) -> Vec<Vec<usize>> {
    assert!(m <= 20, "oracle powerset is exponential");
    let mut all: Vec<Vec<usize>> = (0u32..(1 << m))
        .map(|mask| (0..m).filter(|i| mask & (1 << i) != 0).collect())
        .collect();
    all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    all
}

pub fn row_has(row: &[bool], items: &[usize]) -> bool {
    items.iter().all(|&i| row[i])
}

pub fn extent(raw: &Raw, items: &[usize]) -> Vec<usize> {
    (0..raw.n).filter(|&o| row_has(&raw.rows[o], items)).collect()
}

pub fn support(raw: &Raw, items: &[usize]) -> u64 {
    extent(raw, items).len() as u64
}

pub fn closure(raw: &Raw, items: &[usize]) -> Vec<usize> {
    let objs = extent(raw, items);
    (0..raw.m)
        .filter(|&i| objs.iter().all(|&o| raw.rows[o][i]))
        .collect()
}

pub fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.contains(x))
}

pub fn proper_subsets(items: &[usize]) -> Vec<Vec<usize>> {
    let k = items.len();
    (0u32..(1 << k) - 1)
        .map(|mask| {
            (0..k)
                .filter(|p| mask & (1 << p) != 0)
                .map(|p| items[p])
                .collect()
        })
        .collect()
}

/// Non-empty itemsets with support ≥ minsupp, by powerset scan.
pub fn frequent(raw: &Raw, minsupp: u64) -> BTreeMap<Vec<usize>, u64> {
    subsets(raw.m)
        .into_iter()
        .filter(|s| !s.is_empty())
        .filter_map(|s| {
            let supp = support(raw, &s);
            (supp >= minsupp).then_some((s, supp))
        })
        .collect()
}

pub fn closed(raw: &Raw, minsupp: u64) -> BTreeMap<Vec<usize>, u64> {
    frequent(raw, minsupp)
        .into_iter()
        .filter(|(s, _)| closure(raw, s) == *s)
        .collect()
}

/// Generators by the definitional test: no proper subset shares the closure.
pub fn generators(raw: &Raw, minsupp: u64) -> BTreeMap<Vec<usize>, u64> {
    frequent(raw, minsupp)
        .into_iter()
        .filter(|(s, _)| {
            let cl = closure(raw, s);
            proper_subsets(s).iter().all(|sub| closure(raw, sub) != cl)
        })
        .collect()
}

/// Rare sets whose every proper non-empty subset is frequent.
pub fn minimal_rare(raw: &Raw, minsupp: u64) -> BTreeMap<Vec<usize>, u64> {
    subsets(raw.m)
        .into_iter()
        .filter(|s| !s.is_empty())
        .filter_map(|s| {
            let supp = support(raw, &s);
            if supp >= minsupp {
                return None;
            }
            let minimal = proper_subsets(&s)
                .iter()
                .filter(|sub| !sub.is_empty())
                .all(|sub| support(raw, sub) >= minsupp);
            (minimal).then_some((s, supp))
        })
        .collect()
}

/// Symbolic measure value computed from counts, for exact comparison.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OraVal {
    Undef,
    Frac(u128, u128),
    Inf,
}

impl OraVal {
    pub fn frac(num: u128, den: u128) -> OraVal {
        assert!(den != 0);
        let g = gcd(num, den);
        OraVal::Frac(num / g, den / g)
    }
}

fn gcd(a: u128, b: u128) -> u128 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    if a == 0 {
        1
    } else {
        a
    }
}

pub fn meas_eq(actual: MeasureValue, expected: OraVal) -> bool {
    match (actual, expected) {
        (MeasureValue::Undefined, OraVal::Undef) => true,
        (MeasureValue::Infinite, OraVal::Inf) => true,
        (MeasureValue::Finite(r), OraVal::Frac(num, den)) => {
            r.num() as u128 == num && r.den() as u128 == den
        }
        _ => false,
    }
}

/// A rule with its defining counts; measures derive from these.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct OraRule {
    pub ant: Vec<usize>,
    pub cons: Vec<usize>,
    pub supp_a: u64,
    pub supp_b: u64,
    pub supp_ab: u64,
}

impl OraRule {
    pub fn confidence(&self) -> OraVal {
        if self.supp_a == 0 {
            OraVal::Undef
        } else {
            OraVal::frac(self.supp_ab as u128, self.supp_a as u128)
        }
    }

    pub fn lift(&self, n: u64) -> OraVal {
        if self.supp_a == 0 || self.supp_b == 0 || n == 0 {
            OraVal::Undef
        } else {
            OraVal::frac(
                self.supp_ab as u128 * n as u128,
                self.supp_a as u128 * self.supp_b as u128,
            )
        }
    }

    pub fn conviction(&self, n: u64) -> OraVal {
        if self.supp_a == 0 || n == 0 {
            return OraVal::Undef;
        }
        if self.supp_ab == self.supp_a {
            return if self.supp_b == n {
                OraVal::Undef
            } else {
                OraVal::Inf
            };
        }
        // (1 - b/n) / (1 - ab/a) = a(n - b) / (n(a - ab))
        OraVal::frac(
            self.supp_a as u128 * (n - self.supp_b) as u128,
            n as u128 * (self.supp_a - self.supp_ab) as u128,
        )
    }

    pub fn support_rel(&self, n: u64) -> OraVal {
        if n == 0 {
            OraVal::Undef
        } else {
            OraVal::frac(self.supp_ab as u128, n as u128)
        }
    }
}

fn canonical_pair_order(a: &OraRule, b: &OraRule) -> std::cmp::Ordering {
    let key = |r: &OraRule| {
        (
            r.ant.len(),
            r.ant.clone(),
            r.cons.len(),
            r.cons.clone(),
        )
    };
    key(a).cmp(&key(b))
}

/// Every confident split (A, Z∖A) of every frequent Z with |Z| ≥ 2.
/// The confidence threshold is the rational num/den, compared exactly.
pub fn all_rules(raw: &Raw, minsupp: u64, conf_num: u64, conf_den: u64) -> Vec<OraRule> {
    let mut out = Vec::new();
    for (z, supp_z) in frequent(raw, minsupp) {
        if z.len() < 2 {
            continue;
        }
        for ant in proper_subsets(&z) {
            if ant.is_empty() {
                continue;
            }
            let supp_a = support(raw, &ant);
            if (supp_z as u128) * (conf_den as u128) < (conf_num as u128) * (supp_a as u128) {
                continue;
            }
            let cons: Vec<usize> = z.iter().copied().filter(|i| !ant.contains(i)).collect();
            let supp_b = support(raw, &cons);
            out.push(OraRule {
                ant,
                cons,
                supp_a,
                supp_b,
                supp_ab: supp_z,
            });
        }
    }
    out.sort_by(canonical_pair_order);
    out
}

/// Distinct closures of all subsets: the concept intents.
pub fn concept_intents(raw: &Raw) -> Vec<Vec<usize>> {
    let set: BTreeSet<Vec<usize>> = subsets(raw.m)
        .into_iter()
        .map(|s| closure(raw, &s))
        .collect();
    let mut intents: Vec<Vec<usize>> = set.into_iter().collect();
    intents.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    intents
}

/// Cover pairs (child, parent) over intents sorted canonically: strict
/// containment with nothing strictly between.
pub fn cover_edges(intents: &[Vec<usize>]) -> BTreeSet<(usize, usize)> {
    let mut covers = BTreeSet::new();
    for child in 0..intents.len() {
        for parent in 0..intents.len() {
            if intents[parent].len() >= intents[child].len()
                || !is_subset(&intents[parent], &intents[child])
            {
                continue;
            }
            let between = (0..intents.len()).any(|z| {
                intents[z].len() > intents[parent].len()
                    && intents[z].len() < intents[child].len()
                    && is_subset(&intents[parent], &intents[z])
                    && is_subset(&intents[z], &intents[child])
            });
            if !between {
                covers.insert((child, parent));
            }
        }
    }
    covers
}

/// Pseudo-closed sets with their closures, by the recursive definition over
/// subsets in cardinality order.
pub fn pseudo_closed(raw: &Raw) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut pcs: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    for x in subsets(raw.m) {
        let cx = closure(raw, &x);
        if cx == x {
            continue;
        }
        let ok = pcs
            .iter()
            .filter(|(q, _)| q.len() < x.len() && is_subset(q, &x))
            .all(|(_, cq)| is_subset(cq, &x));
        if ok {
            pcs.push((x, cx));
        }
    }
    pcs
}

/// Fixed point of `start` under implications applied with premise ⊆ X.
pub fn implication_fixpoint(
    rules: &[(Vec<usize>, Vec<usize>)],
    start: &[usize],
    m: usize,
) -> Vec<usize> {
    let mut current: BTreeSet<usize> = start.iter().copied().collect();
    loop {
        let mut changed = false;
        for (premise, conclusion) in rules {
            if premise.iter().all(|i| current.contains(i))
                && !conclusion.iter().all(|i| current.contains(i))
            {
                current.extend(conclusion.iter().copied());
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    assert!(current.iter().all(|&i| i < m));
    current.into_iter().collect()
}

/// Deterministic corpus of random contexts with densities cycling over
/// 0.2..0.8.
pub fn corpus(count: usize, max_objects: usize, max_items: usize, base_seed: u64) -> Vec<BinaryContext> {
    let densities = [0.2, 0.35, 0.5, 0.65, 0.8];
    (0..count)
        .map(|k| {
            let seed = base_seed.wrapping_add(k as u64);
            let n = 1 + (seed.wrapping_mul(2654435761) >> 7) as usize % max_objects;
            let m = 1 + (seed.wrapping_mul(40503) >> 5) as usize % max_items;
            let density = densities[k % densities.len()];
            binmine_core::ingest::random_context(n, m, density, seed)
                .expect("density is in range")
        })
        .collect()
}

/// The shared five-object fixture over items a..e.
pub fn fixture_k() -> BinaryContext {
    BinaryContext::new(
        ["a", "b", "c", "d", "e"].iter().map(|s| s.to_string()).collect(),
        vec![
            vec![0, 2, 3],
            vec![1, 2, 4],
            vec![0, 1, 2, 4],
            vec![1, 4],
            vec![0, 1, 2, 4],
        ],
    )
    .unwrap()
}

pub fn named(ctx: &BinaryContext, labels: &str) -> binmine_core::Itemset {
    binmine_core::Itemset::new(
        labels
            .split_whitespace()
            .map(|l| ctx.item_index(l).expect("unknown label")),
    )
}
