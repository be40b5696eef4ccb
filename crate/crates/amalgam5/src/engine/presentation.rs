//! Checker for the double-cover presentation
//! ⟨b,c : b² = c³ = (bc)⁸ = [b,(bc)⁴] = [c,(bc)⁴] = 1⟩ of order 48.
//!
//! The relations alone admit proper quotients, so the checker also requires
//! |⟨b,c⟩| = 48, and it certifies the cover is the one in which transposition
//! preimages have order 2: it exhibits a non-central involution whose image in
//! the order-24 quotient by the centre lies in the 6-element conjugacy class
//! (the transpositions). The binary octahedral cover has a unique involution,
//! so no such witness exists there.

use std::collections::HashSet;

use super::closure::{bfs_closure, ClosureGroup, DEFAULT_EXACT_CAP};
use super::group::{ExactGroup, GroupOps};
use crate::matrix::MatrixR;

#[derive(Debug, Clone)]
pub struct RelationCheck {
    pub name: &'static str,
    pub holds: bool,
}

#[derive(Debug, Clone)]
pub struct PresentationReport {
    pub relations: Vec<RelationCheck>,
    /// None when the closure blew past its cap.
    pub closure_order: Option<usize>,
    /// Description of the order-2 transposition-preimage witness, when found.
    pub cover_witness: Option<String>,
    pub passed: bool,
}

impl PresentationReport {
    pub fn summary(&self) -> String {
        let rels: Vec<String> = self
            .relations
            .iter()
            .map(|r| format!("{}={}", r.name, if r.holds { "ok" } else { "FAIL" }))
            .collect();
        format!(
            "{}; |<b,c>| = {}; cover witness: {}",
            rels.join(", "),
            self.closure_order
                .map(|n| n.to_string())
                .unwrap_or_else(|| "cap exceeded".to_string()),
            self.cover_witness.as_deref().unwrap_or("none")
        )
    }
}

/// Checks all five relations exactly, the closure order, and the double-cover
/// witness, for an arbitrary candidate pair (b, c) of unitary matrices.
pub fn verify_presentation_gl23(b: &MatrixR, c: &MatrixR) -> PresentationReport {
    let ops = ExactGroup;
    let i = MatrixR::identity();
    let bc = b * c;
    let z = bc.pow(4);

    let relations = vec![
        RelationCheck {
            name: "b^2",
            holds: b.pow(2) == i,
        },
        RelationCheck {
            name: "c^3",
            holds: c.pow(3) == i,
        },
        RelationCheck {
            name: "(bc)^8",
            holds: bc.pow(8) == i,
        },
        RelationCheck {
            name: "[b,(bc)^4]",
            holds: b * &z == &z * b,
        },
        RelationCheck {
            name: "[c,(bc)^4]",
            holds: c * &z == &z * c,
        },
    ];

    let closure = bfs_closure(&ops, &[b.clone(), c.clone()], &["b", "c"], DEFAULT_EXACT_CAP).ok();
    let closure_order = closure.as_ref().map(|g| g.len());
    let order_ok = closure_order == Some(48);

    let cover_witness = if order_ok {
        find_transposition_preimage(closure.as_ref().unwrap(), &z)
    } else {
        None
    };

    let passed = relations.iter().all(|r| r.holds) && order_ok && cover_witness.is_some();
    PresentationReport {
        relations,
        closure_order,
        cover_witness,
        passed,
    }
}

/// Searches the order-48 closure for x with x² = 1, x ∉ {1, z}, whose coset
/// class in the quotient by ⟨z⟩ has exactly 6 elements.
fn find_transposition_preimage(group: &ClosureGroup<MatrixR>, z: &MatrixR) -> Option<String> {
    let ops = ExactGroup;
    let i = ops.identity();
    if z == &i {
        return None;
    }
    for (pos, x) in group.elements.iter().enumerate() {
        if x == &i || x == z || ops.mul(x, x) != i {
            continue;
        }
        // conjugacy class of the coset {x, xz} in the 24-element quotient
        let mut cosets: HashSet<usize> = HashSet::new();
        for g in &group.elements {
            let conj = ops.mul(&ops.mul(g, x), &ops.inv(g));
            let alt = ops.mul(&conj, z);
            let key = group
                .position(&conj)
                .expect("closure is complete")
                .min(group.position(&alt).expect("closure is complete"));
            cosets.insert(key);
        }
        if cosets.len() == 6 {
            return Some(format!(
                "element #{pos} of the closure: order 2, non-central, quotient class size 6"
            ));
        }
    }
    None
}
