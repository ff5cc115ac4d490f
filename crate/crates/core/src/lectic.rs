//! Lectic-order enumeration of the fixed points of a closure operator
//! (Ganter's NextClosure scheme).
//!
//! Sets over `0..universe` are ordered lectically: A < B when the smallest
//! index where they differ belongs to B. This order extends set inclusion,
//! and stepping from one fixed point to the lectically next one visits every
//! fixed point exactly once, starting from `close(∅)` and ending at the full
//! set.

use crate::bits::Bitset;

/// The lectically next fixed point of `close` after `current`, or `None`
/// once the full set has been reached.
pub(crate) fn next_closed(
    current: &Bitset,
    universe: usize,
    close: &mut dyn FnMut(&Bitset) -> Bitset,
) -> Option<Bitset> {
    let mut work = current.clone();
    for i in (0..universe).rev() {
        if work.contains(i) {
            work.remove(i);
        } else {
            let mut candidate = work.clone();
            candidate.insert(i);
            let closed = close(&candidate);
            // Valid step: closing must not introduce an index below i.
            if closed.agrees_below(&work, i) {
                return Some(closed);
            }
        }
    }
    None
}

/// All fixed points of `close`, in lectic order.
pub(crate) fn enumerate_closed(
    universe: usize,
    close: &mut dyn FnMut(&Bitset) -> Bitset,
) -> Vec<Bitset> {
    let mut out = Vec::new();
    let mut current = close(&Bitset::new(universe));
    loop {
        out.push(current.clone());
        match next_closed(&current, universe, close) {
            Some(next) => current = next,
            None => break,
        }
    }
    out
}
