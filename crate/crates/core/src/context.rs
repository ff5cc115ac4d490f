//! Binary contexts and the Galois connection (extent, intent, closure, support).
//!
//! A [`BinaryContext`] is an objects-by-items incidence relation. Objects are
//! numbered `1..=object_count` in input order; items are numbered `0..item_count`
//! in canonical order (first appearance in the input). All operations are pure
//! over an immutable context, so a shared context can be mined concurrently.

use std::cmp::Ordering;
use std::collections::HashMap;

use crate::bits::Bitset;
use crate::error::{Error, Result};

/// A set of item indices in canonical order, without duplicates.
///
/// The canonical order over itemsets is (cardinality, then lexicographic by
/// index); that is the order families and rule listings use, and what `Ord`
/// implements.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Itemset(Vec<usize>);

impl Itemset {
    pub fn new(items: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = items.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Itemset(v)
    }

    pub fn empty() -> Self {
        Itemset(Vec::new())
    }

    pub(crate) fn from_bits(bits: &Bitset) -> Self {
        Itemset(bits.iter().collect())
    }

    pub fn items(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, item: usize) -> bool {
        self.0.binary_search(&item).is_ok()
    }

    pub fn is_subset_of(&self, other: &Itemset) -> bool {
        self.0.iter().all(|i| other.contains(*i))
    }

    pub fn union(&self, other: &Itemset) -> Itemset {
        Itemset::new(self.0.iter().chain(other.0.iter()).copied())
    }

    pub fn difference(&self, other: &Itemset) -> Itemset {
        Itemset(self.0.iter().copied().filter(|i| !other.contains(*i)).collect())
    }

    pub fn intersects(&self, other: &Itemset) -> bool {
        self.0.iter().any(|i| other.contains(*i))
    }

    pub fn with_item(&self, item: usize) -> Itemset {
        let mut v = self.0.clone();
        match v.binary_search(&item) {
            Ok(_) => {}
            Err(pos) => v.insert(pos, item),
        }
        Itemset(v)
    }

    pub fn without_item(&self, item: usize) -> Itemset {
        Itemset(self.0.iter().copied().filter(|&i| i != item).collect())
    }
}

impl Ord for Itemset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Itemset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromIterator<usize> for Itemset {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        Itemset::new(iter)
    }
}

/// An itemset together with its absolute support in some context.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SupportedItemset {
    pub itemset: Itemset,
    pub support: u64,
}

/// Objects-by-items incidence relation. Immutable after construction.
pub struct BinaryContext {
    item_names: Vec<String>,
    name_index: HashMap<String, usize>,
    /// Per object: items it possesses (bits over items).
    rows: Vec<Bitset>,
    /// Per item: objects possessing it (bits over objects).
    cols: Vec<Bitset>,
}

impl BinaryContext {
    /// Builds a context from item labels and per-object item index lists.
    ///
    /// Labels must be unique, non-empty, and free of whitespace; item indices
    /// must be in range. Empty contexts (no objects and/or no items) are legal.
    pub fn new(item_names: Vec<String>, objects: Vec<Vec<usize>>) -> Result<Self> {
        let m = item_names.len();
        let mut name_index = HashMap::with_capacity(m);
        for (i, name) in item_names.iter().enumerate() {
            if name.is_empty() || name.chars().any(char::is_whitespace) {
                return Err(Error::Spec(format!("invalid item label {name:?}")));
            }
            if name_index.insert(name.clone(), i).is_some() {
                return Err(Error::Spec(format!("duplicate item label {name:?}")));
            }
        }
        let n = objects.len();
        let mut rows = Vec::with_capacity(n);
        let mut cols = vec![Bitset::new(n); m];
        for (obj, items) in objects.into_iter().enumerate() {
            let mut row = Bitset::new(m);
            for i in items {
                if i >= m {
                    return Err(Error::InvalidItem {
                        index: i,
                        item_count: m,
                    });
                }
                row.insert(i);
                cols[i].insert(obj);
            }
            rows.push(row);
        }
        Ok(BinaryContext {
            item_names,
            name_index,
            rows,
            cols,
        })
    }

    pub fn object_count(&self) -> usize {
        self.rows.len()
    }

    pub fn item_count(&self) -> usize {
        self.item_names.len()
    }

    pub fn item_names(&self) -> &[String] {
        &self.item_names
    }

    pub fn item_name(&self, index: usize) -> &str {
        &self.item_names[index]
    }

    pub fn item_index(&self, name: &str) -> Option<usize> {
        self.name_index.get(name).copied()
    }

    /// Items of one object, 0-based object index.
    pub(crate) fn row(&self, object: usize) -> &Bitset {
        &self.rows[object]
    }

    /// Objects possessing one item.
    pub(crate) fn item_extent(&self, item: usize) -> &Bitset {
        &self.cols[item]
    }

    pub fn object_has_item(&self, object_id: usize, item: usize) -> bool {
        self.rows[object_id - 1].contains(item)
    }

    fn check_itemset(&self, x: &Itemset) -> Result<()> {
        let m = self.item_count();
        match x.items().last() {
            Some(&max) if max >= m => Err(Error::InvalidItem {
                index: max,
                item_count: m,
            }),
            _ => Ok(()),
        }
    }

    /// Objects possessing every item of `x`, as a bitset over 0-based indices.
    pub(crate) fn extent_bits(&self, x: &Itemset) -> Result<Bitset> {
        self.check_itemset(x)?;
        let mut objs = Bitset::full(self.object_count());
        for &i in x.items() {
            objs.intersect_with(&self.cols[i]);
        }
        Ok(objs)
    }

    /// Objects possessing every item of `x`, as 1-based object ids.
    /// `extent(∅)` is all objects.
    pub fn extent(&self, x: &Itemset) -> Result<Vec<usize>> {
        Ok(self.extent_bits(x)?.iter().map(|o| o + 1).collect())
    }

    /// Items possessed by every object of `objs` (0-based object bits).
    /// The intent of no objects is all items.
    pub(crate) fn intent_bits(&self, objs: &Bitset) -> Bitset {
        let mut items = Bitset::full(self.item_count());
        for o in objs.iter() {
            items.intersect_with(&self.rows[o]);
        }
        items
    }

    /// Items possessed by every object in `objects` (1-based ids).
    /// `intent(∅)` is all items.
    pub fn intent(&self, objects: &[usize]) -> Result<Itemset> {
        let n = self.object_count();
        let mut objs = Bitset::new(n);
        for &id in objects {
            if id == 0 || id > n {
                return Err(Error::InvalidObject {
                    id,
                    object_count: n,
                });
            }
            objs.insert(id - 1);
        }
        Ok(Itemset::from_bits(&self.intent_bits(&objs)))
    }

    /// Closure of an item bitset: intent of its extent.
    pub(crate) fn closure_bits(&self, items: &Bitset) -> Bitset {
        let mut objs = Bitset::full(self.object_count());
        for i in items.iter() {
            objs.intersect_with(&self.cols[i]);
        }
        self.intent_bits(&objs)
    }

    /// `intent(extent(x))`; always a superset of `x`.
    pub fn closure(&self, x: &Itemset) -> Result<Itemset> {
        let objs = self.extent_bits(x)?;
        Ok(Itemset::from_bits(&self.intent_bits(&objs)))
    }

    /// Absolute support: `|extent(x)|`.
    pub fn support(&self, x: &Itemset) -> Result<u64> {
        Ok(self.extent_bits(x)?.count() as u64)
    }

    /// Renders an itemset as `{a, c}` using this context's labels.
    pub fn render_itemset(&self, x: &Itemset) -> String {
        brace_join(x.items().iter().map(|&i| self.item_names[i].as_str()))
    }
}

impl PartialEq for BinaryContext {
    fn eq(&self, other: &Self) -> bool {
        self.item_names == other.item_names && self.rows == other.rows
    }
}

impl Eq for BinaryContext {}

impl std::fmt::Debug for BinaryContext {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("BinaryContext")
            .field("items", &self.item_names)
            .field("rows", &self.rows)
            .finish()
    }
}

/// `{a, b, c}` rendering shared by every listing format.
pub fn brace_join<'a>(labels: impl Iterator<Item = &'a str>) -> String {
    let mut out = String::from("{");
    for (k, label) in labels.enumerate() {
        if k > 0 {
            out.push_str(", ");
        }
        out.push_str(label);
    }
    out.push('}');
    out
}
