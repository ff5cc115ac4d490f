//! Concept lattice construction and Hasse diagram export.
//!
//! Concepts are enumerated by lectic-order closure stepping with no support
//! threshold; the cover relation is the transitive reduction of intent
//! containment. Exports are byte-deterministic.

use std::collections::HashMap;

use crate::bits::Bitset;
use crate::context::{brace_join, BinaryContext, Itemset};
use crate::error::{Error, Result};
use crate::lectic;

/// A maximal (extent, intent) rectangle: `intent(extent) = intent` and
/// `extent(intent) = extent`. Extents hold 1-based object ids.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FormalConcept {
    pub extent: Vec<usize>,
    pub intent: Itemset,
}

/// Concepts sorted by (|intent|, lexicographic intent) and the cover pairs
/// (child, parent): the child's intent strictly contains the parent's with no
/// concept in between.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LatticeDiagram {
    pub concepts: Vec<FormalConcept>,
    pub covers: Vec<(usize, usize)>,
}

/// All concepts of the context. The top concept (intent closure(∅)) and the
/// bottom concept (intent = all items) are always present; they coincide for
/// degenerate contexts.
pub fn build_concepts(ctx: &BinaryContext) -> Vec<FormalConcept> {
    let m = ctx.item_count();
    let mut close = |b: &Bitset| ctx.closure_bits(b);
    let mut concepts: Vec<FormalConcept> = lectic::enumerate_closed(m, &mut close)
        .into_iter()
        .map(|intent_bits| {
            let intent = Itemset::from_bits(&intent_bits);
            let extent = ctx
                .extent(&intent)
                .expect("enumerated intents are valid for the context");
            FormalConcept { extent, intent }
        })
        .collect();
    concepts.sort_by(|a, b| a.intent.cmp(&b.intent));
    concepts
}

/// Builds the Hasse diagram of a complete concept set.
///
/// The input must be closed under meets and joins (extent intersections and
/// intent intersections must all be present); otherwise an inconsistency
/// error is returned.
pub fn hasse(concepts: &[FormalConcept]) -> Result<LatticeDiagram> {
    let mut concepts: Vec<FormalConcept> = concepts.to_vec();
    concepts.sort_by(|a, b| a.intent.cmp(&b.intent));

    let n = concepts.len();
    let mut extent_index: HashMap<&[usize], usize> = HashMap::with_capacity(n);
    let mut intent_index: HashMap<&[usize], usize> = HashMap::with_capacity(n);
    for (i, c) in concepts.iter().enumerate() {
        if extent_index.insert(c.extent.as_slice(), i).is_some() {
            return Err(Error::Inconsistency(format!(
                "duplicate extent {:?}",
                c.extent
            )));
        }
        if intent_index.insert(c.intent.items(), i).is_some() {
            return Err(Error::Inconsistency(format!(
                "duplicate intent {:?}",
                c.intent.items()
            )));
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            let meet: Vec<usize> = concepts[i]
                .extent
                .iter()
                .filter(|o| concepts[j].extent.contains(o))
                .copied()
                .collect();
            if !extent_index.contains_key(meet.as_slice()) {
                return Err(Error::Inconsistency(format!(
                    "meet of concepts {i} and {j} is missing"
                )));
            }
            let join: Vec<usize> = concepts[i]
                .intent
                .items()
                .iter()
                .filter(|x| concepts[j].intent.contains(**x))
                .copied()
                .collect();
            if !intent_index.contains_key(join.as_slice()) {
                return Err(Error::Inconsistency(format!(
                    "join of concepts {i} and {j} is missing"
                )));
            }
        }
    }

    // Transitive reduction of intent containment: child ⊋ parent with no
    // concept strictly between.
    let mut covers = Vec::new();
    for child in 0..n {
        for parent in 0..n {
            if child == parent
                || !concepts[parent].intent.is_subset_of(&concepts[child].intent)
                || concepts[parent].intent.len() == concepts[child].intent.len()
            {
                continue;
            }
            let between = (0..n).any(|z| {
                z != child
                    && z != parent
                    && concepts[parent].intent.is_subset_of(&concepts[z].intent)
                    && concepts[z].intent.is_subset_of(&concepts[child].intent)
                    && concepts[z].intent.len() > concepts[parent].intent.len()
                    && concepts[z].intent.len() < concepts[child].intent.len()
            });
            if !between {
                covers.push((child, parent));
            }
        }
    }
    covers.sort_unstable();
    Ok(LatticeDiagram { concepts, covers })
}

fn node_label(ctx: &BinaryContext, concept: &FormalConcept, full_extents: bool) -> String {
    let mut label = format!(
        "{} ({})",
        ctx.render_itemset(&concept.intent),
        concept.extent.len()
    );
    if full_extents {
        let ids: Vec<String> = concept.extent.iter().map(|o| o.to_string()).collect();
        label.push(' ');
        label.push_str(&brace_join(ids.iter().map(|s| s.as_str())));
    }
    label
}

/// DOT digraph: one node line per concept (`"cI" [label="..."]`), one edge
/// line per cover pair, child first.
pub fn export_dot(ctx: &BinaryContext, diagram: &LatticeDiagram, full_extents: bool) -> String {
    let mut out = String::from("digraph lattice {\n");
    for (i, concept) in diagram.concepts.iter().enumerate() {
        out.push_str(&format!(
            "  \"c{i}\" [label=\"{}\"];\n",
            node_label(ctx, concept, full_extents)
        ));
    }
    for (child, parent) in &diagram.covers {
        out.push_str(&format!("  \"c{child}\" -> \"c{parent}\";\n"));
    }
    out.push_str("}\n");
    out
}

/// Line-oriented export: a header comment, `cI: {intent} (extent size)` per
/// concept, then `cI -> cJ` per cover pair.
pub fn export_text(ctx: &BinaryContext, diagram: &LatticeDiagram, full_extents: bool) -> String {
    let mut out = format!(
        "# lattice objects={} items={} concepts={} covers={}\n",
        ctx.object_count(),
        ctx.item_count(),
        diagram.concepts.len(),
        diagram.covers.len()
    );
    for (i, concept) in diagram.concepts.iter().enumerate() {
        out.push_str(&format!(
            "c{i}: {}\n",
            node_label(ctx, concept, full_extents)
        ));
    }
    for (child, parent) in &diagram.covers {
        out.push_str(&format!("c{child} -> c{parent}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::testutil::fixture_k;

    #[test]
    fn concepts_of_fixture() {
        let k = fixture_k();
        let concepts = build_concepts(&k);
        let intents: Vec<String> = concepts
            .iter()
            .map(|c| k.render_itemset(&c.intent))
            .collect();
        assert_eq!(
            intents,
            vec![
                "{}",
                "{c}",
                "{a, c}",
                "{b, e}",
                "{a, c, d}",
                "{b, c, e}",
                "{a, b, c, e}",
                "{a, b, c, d, e}"
            ]
        );
        assert_eq!(concepts[0].extent, vec![1, 2, 3, 4, 5]);
        assert_eq!(concepts[7].extent, Vec::<usize>::new());
    }

    #[test]
    fn single_cell_context_has_one_concept() {
        let ctx = BinaryContext::new(vec!["a".into()], vec![vec![0]]).unwrap();
        let concepts = build_concepts(&ctx);
        assert_eq!(concepts.len(), 1);
        assert_eq!(concepts[0].extent, vec![1]);
        assert_eq!(ctx.render_itemset(&concepts[0].intent), "{a}");
    }

    #[test]
    fn contranominal_pair_gives_boolean_lattice() {
        let ctx =
            BinaryContext::new(vec!["a".into(), "b".into()], vec![vec![0], vec![1]]).unwrap();
        let concepts = build_concepts(&ctx);
        assert_eq!(concepts.len(), 4);
        let diagram = hasse(&concepts).unwrap();
        assert_eq!(diagram.covers.len(), 4);
    }

    #[test]
    fn hasse_of_fixture_has_ten_covers() {
        let k = fixture_k();
        let diagram = hasse(&build_concepts(&k)).unwrap();
        assert_eq!(diagram.concepts.len(), 8);
        assert_eq!(diagram.covers.len(), 10);
        // Every cover child has a strictly larger intent.
        for &(child, parent) in &diagram.covers {
            assert!(diagram.concepts[parent]
                .intent
                .is_subset_of(&diagram.concepts[child].intent));
            assert!(
                diagram.concepts[child].intent.len() > diagram.concepts[parent].intent.len()
            );
        }
    }

    #[test]
    fn chain_context() {
        let ctx = BinaryContext::new(
            vec!["a".into(), "b".into()],
            vec![vec![0], vec![0, 1]],
        )
        .unwrap();
        let concepts = build_concepts(&ctx);
        let intents: Vec<String> = concepts
            .iter()
            .map(|c| ctx.render_itemset(&c.intent))
            .collect();
        assert_eq!(intents, vec!["{a}", "{a, b}"]);
        let diagram = hasse(&concepts).unwrap();
        assert_eq!(diagram.covers, vec![(1, 0)]);
    }

    #[test]
    fn hasse_rejects_incomplete_input() {
        let k = fixture_k();
        let mut concepts = build_concepts(&k);
        // Dropping an inner concept breaks meet/join closure.
        concepts.remove(2);
        assert!(matches!(hasse(&concepts), Err(Error::Inconsistency(_))));
    }

    #[test]
    fn exports_are_deterministic() {
        let k = fixture_k();
        let diagram = hasse(&build_concepts(&k)).unwrap();
        let dot = export_dot(&k, &diagram, false);
        assert_eq!(dot, export_dot(&k, &diagram, false));
        assert_eq!(dot.lines().filter(|l| l.contains("[label=")).count(), 8);
        assert_eq!(dot.lines().filter(|l| l.contains("->")).count(), 10);

        let text = export_text(&k, &diagram, false);
        assert_eq!(text.lines().filter(|l| l.starts_with('c') && l.contains(':')).count(), 8);
        assert_eq!(text.lines().filter(|l| l.contains("->")).count(), 10);

        let verbose = export_dot(&k, &diagram, true);
        assert!(verbose.contains("{1, 2, 3, 4, 5}"));
    }

    #[test]
    fn single_concept_exports() {
        let ctx = BinaryContext::new(vec!["a".into()], vec![vec![0]]).unwrap();
        let diagram = hasse(&build_concepts(&ctx)).unwrap();
        assert!(diagram.covers.is_empty());
        let dot = export_dot(&ctx, &diagram, false);
        assert_eq!(dot.lines().filter(|l| l.contains("[label=")).count(), 1);
        assert_eq!(dot.lines().filter(|l| l.contains("->")).count(), 0);
    }
}
