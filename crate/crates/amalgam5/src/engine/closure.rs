//! BFS multiplication closure of a finite matrix group, with membership and
//! intersection by canonical-key lookup.
//!
//! Closing under products alone suffices: in a finite group every generator
//! has finite order, so inverses appear among the products.

use std::collections::HashMap;

use super::group::GroupOps;
use super::EngineError;

/// Default cap for exact closures; the largest expected subgroup has 48 elements.
pub const DEFAULT_EXACT_CAP: usize = 10_000;
/// Default cap for finite-field closures in tests (the M11 image has 7920 elements).
pub const DEFAULT_FIELD_CAP: usize = 100_000;

/// A fully enumerated finite matrix group.
#[derive(Debug, Clone)]
pub struct ClosureGroup<M: Clone + Eq + std::hash::Hash> {
    /// Elements in deterministic BFS discovery order; index 0 is the identity.
    pub elements: Vec<M>,
    index: HashMap<M, usize>,
    pub gen_names: Vec<String>,
    pub cap: usize,
}

impl<M: Clone + Eq + std::hash::Hash> ClosureGroup<M> {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, m: &M) -> bool {
        self.index.contains_key(m)
    }

    pub fn position(&self, m: &M) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Intersection of two complete closures, filtered through the smaller one.
    /// An intersection of subgroups is a subgroup, so the result is closed.
    pub fn intersection(&self, other: &Self) -> Self {
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let elements: Vec<M> = small
            .elements
            .iter()
            .filter(|m| large.contains(m))
            .cloned()
            .collect();
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        ClosureGroup {
            elements,
            index,
            gen_names: vec![format!(
                "({}) ∩ ({})",
                self.gen_names.join(","),
                other.gen_names.join(",")
            )],
            cap: small.cap,
        }
    }
}

/// Full multiplication closure of `gens`, as long as its size stays within `cap`.
pub fn bfs_closure<G: GroupOps>(
    ops: &G,
    gens: &[G::Elem],
    gen_names: &[&str],
    cap: usize,
) -> Result<ClosureGroup<G::Elem>, EngineError> {
    let identity = ops.identity();
    let mut elements = vec![identity.clone()];
    let mut index = HashMap::new();
    index.insert(identity, 0usize);
    let mut next = 0;
    while next < elements.len() {
        let g = elements[next].clone();
        next += 1;
        for s in gens {
            let h = ops.mul(&g, s);
            if !index.contains_key(&h) {
                if elements.len() >= cap {
                    return Err(EngineError::ClosureExceedsCap { cap });
                }
                index.insert(h.clone(), elements.len());
                elements.push(h);
            }
        }
    }
    Ok(ClosureGroup {
        elements,
        index,
        gen_names: gen_names.iter().map(|s| s.to_string()).collect(),
        cap,
    })
}
