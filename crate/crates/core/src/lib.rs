//! Pattern mining over binary contexts: itemset families (frequent, closed,
//! generators, minimal rare), association rule bases with exact measures,
//! concept lattices, and the surrounding pre- and post-processing.
//!
//! The [`context::BinaryContext`] is the universe every operation runs over.
//! Supports are absolute counts throughout; relative support is a derived
//! view. All operations are pure functions over immutable contexts.

mod bits;
mod lectic;

pub mod context;
pub mod error;
pub mod ingest;
pub mod itemsets;
pub mod lattice;
pub mod measure;
pub mod postprocess;
pub mod rules;

pub use context::{BinaryContext, Itemset, SupportedItemset};
pub use error::{Error, Result};
pub use ingest::{ContextFormat, DiscretizationMethod, DiscretizationSpec, NumericTable};
pub use itemsets::{EquivalenceClass, FamilyKind, ItemsetFamily, MiningStrategy};
pub use lattice::{FormalConcept, LatticeDiagram};
pub use measure::{compute_measures, MeasureValue, Ratio, RuleMeasures};
pub use rules::AssociationRule;
