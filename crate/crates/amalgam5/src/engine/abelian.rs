//! Search for the maximal elementary abelian 2-subgroup rank of an enumerated
//! finite group: the largest r with a subgroup isomorphic to (Z/2)^r.
//!
//! The search walks sets of pairwise-commuting involutions, extending by
//! generators with strictly increasing index so every subgroup is reached
//! through its sorted minimal generating sequence. Desk scale: a few hundred
//! involutions at most.

use std::collections::HashSet;

use super::closure::ClosureGroup;
use super::group::GroupOps;

pub fn elementary_abelian_2_rank<G: GroupOps>(ops: &G, group: &ClosureGroup<G::Elem>) -> u32 {
    let identity = ops.identity();
    let involutions: Vec<&G::Elem> = group
        .elements
        .iter()
        .filter(|m| **m != identity && ops.mul(m, m) == identity)
        .collect();
    if involutions.is_empty() {
        return 0;
    }
    let n = involutions.len();
    let mut commutes = vec![vec![false; n]; n];
    for i in 0..n {
        commutes[i][i] = true;
        for j in (i + 1)..n {
            let ij = ops.mul(involutions[i], involutions[j]);
            let ji = ops.mul(involutions[j], involutions[i]);
            if ij == ji {
                commutes[i][j] = true;
                commutes[j][i] = true;
            }
        }
    }

    let mut best = 0u32;
    let mut subgroup: HashSet<G::Elem> = HashSet::new();
    subgroup.insert(identity.clone());
    let all: Vec<usize> = (0..n).collect();
    extend(ops, &involutions, &commutes, &mut subgroup, &all, 0, &mut best);
    best
}

fn extend<G: GroupOps>(
    ops: &G,
    involutions: &[&G::Elem],
    commutes: &[Vec<bool>],
    subgroup: &mut HashSet<G::Elem>,
    candidates: &[usize],
    rank: u32,
    best: &mut u32,
) {
    if rank > *best {
        *best = rank;
    }
    for (pos, &t) in candidates.iter().enumerate() {
        if subgroup.contains(involutions[t]) {
            continue;
        }
        // adjoin t: the subgroup doubles by the coset t * S
        let coset: Vec<G::Elem> = subgroup.iter().map(|h| ops.mul(involutions[t], h)).collect();
        for x in &coset {
            subgroup.insert(x.clone());
        }
        let narrowed: Vec<usize> = candidates[pos + 1..]
            .iter()
            .copied()
            .filter(|&u| commutes[t][u])
            .collect();
        extend(ops, involutions, commutes, subgroup, &narrowed, rank + 1, best);
        for x in &coset {
            subgroup.remove(x);
        }
    }
}
