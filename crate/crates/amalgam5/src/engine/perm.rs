//! Permutation groups on small domains: exact order by a Schreier-generator
//! recursion (a Schreier–Sims without sifting, adequate at degree ≤ 110 and
//! order ≤ 10⁴) and transitivity towers of iterated point stabilizers.

use std::collections::{HashMap, HashSet};

use num_bigint::BigUint;
use num_traits::One;

use super::EngineError;

pub type Perm = Vec<u32>;

fn perm_identity(degree: usize) -> Perm {
    (0..degree as u32).collect()
}

fn perm_is_identity(p: &Perm) -> bool {
    p.iter().enumerate().all(|(i, &v)| v == i as u32)
}

/// (p ∘ q)[x] = p[q[x]]: apply q first.
fn perm_mul(p: &Perm, q: &Perm) -> Perm {
    q.iter().map(|&x| p[x as usize]).collect()
}

fn perm_inv(p: &Perm) -> Perm {
    let mut out = vec![0u32; p.len()];
    for (i, &v) in p.iter().enumerate() {
        out[v as usize] = i as u32;
    }
    out
}

#[derive(Debug, Clone)]
pub struct PermGroup {
    pub degree: usize,
    pub gens: Vec<Perm>,
}

impl PermGroup {
    pub fn new(degree: usize, gens: Vec<Perm>) -> Result<Self, EngineError> {
        for g in &gens {
            if g.len() != degree {
                return Err(EngineError::NotABijection);
            }
            let mut seen = vec![false; degree];
            for &v in g {
                if (v as usize) >= degree || seen[v as usize] {
                    return Err(EngineError::NotABijection);
                }
                seen[v as usize] = true;
            }
        }
        Ok(PermGroup { degree, gens })
    }

    pub fn order(&self) -> BigUint {
        let (order, _) = order_and_tower(self.degree, &self.gens);
        order
    }

    pub fn is_transitive(&self) -> bool {
        if self.degree == 0 {
            return true;
        }
        let mut seen = vec![false; self.degree];
        seen[0] = true;
        let mut stack = vec![0u32];
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for g in &self.gens {
                let y = g[x as usize];
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count == self.degree
    }

    /// Orbit sizes of iterated point stabilizers: while the group is
    /// nontrivial, record the orbit of its smallest moved point and descend
    /// into that point's stabilizer. The trivial group yields [1].
    pub fn transitivity_tower(&self) -> Vec<usize> {
        let (_, tower) = order_and_tower(self.degree, &self.gens);
        tower
    }
}

fn order_and_tower(degree: usize, gens: &[Perm]) -> (BigUint, Vec<usize>) {
    let mut live: Vec<Perm> = gens.iter().filter(|g| !perm_is_identity(g)).cloned().collect();
    let mut order = BigUint::one();
    let mut tower = Vec::new();
    while !live.is_empty() {
        let moved = live
            .iter()
            .flat_map(|g| g.iter().enumerate().filter(|(i, v)| **v != *i as u32))
            .map(|(i, _)| i)
            .min()
            .expect("non-identity permutation moves a point");

        // orbit of `moved` with transversal u_x (u_x maps moved to x)
        let mut transversal: HashMap<u32, Perm> = HashMap::new();
        transversal.insert(moved as u32, perm_identity(degree));
        let mut queue = vec![moved as u32];
        let mut qi = 0;
        let mut orbit_order: Vec<u32> = vec![moved as u32];
        while qi < queue.len() {
            let x = queue[qi];
            qi += 1;
            for g in &live {
                let y = g[x as usize];
                if !transversal.contains_key(&y) {
                    let uy = perm_mul(g, &transversal[&x]);
                    transversal.insert(y, uy);
                    queue.push(y);
                    orbit_order.push(y);
                }
            }
        }
        order *= BigUint::from(orbit_order.len());
        tower.push(orbit_order.len());

        // Schreier generators of the stabilizer of `moved`
        let mut seen: HashSet<Perm> = HashSet::new();
        for &x in &orbit_order {
            for g in &live {
                let y = g[x as usize];
                let sg = perm_mul(&perm_inv(&transversal[&y]), &perm_mul(g, &transversal[&x]));
                if !perm_is_identity(&sg) {
                    seen.insert(sg);
                }
            }
        }
        live = seen.into_iter().collect();
        live.sort();
    }
    if tower.is_empty() {
        tower.push(1);
    }
    (order, tower)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_group_on_three_points() {
        let g = PermGroup::new(3, vec![vec![1, 0, 2], vec![1, 2, 0]]).unwrap();
        assert_eq!(g.order(), BigUint::from(6u32));
        // stabilizer of two points of S3 is already trivial
        assert_eq!(g.transitivity_tower(), vec![3, 2]);
        assert!(g.is_transitive());
    }

    #[test]
    fn trivial_group_tower() {
        let g = PermGroup::new(11, vec![(0..11u32).collect()]).unwrap();
        assert_eq!(g.order(), BigUint::one());
        assert_eq!(g.transitivity_tower(), vec![1]);
        assert!(!g.is_transitive());
    }

    #[test]
    fn cyclic_group() {
        let g = PermGroup::new(5, vec![vec![1, 2, 3, 4, 0]]).unwrap();
        assert_eq!(g.order(), BigUint::from(5u32));
        assert_eq!(g.transitivity_tower(), vec![5]);
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(PermGroup::new(3, vec![vec![0, 0, 1]]).is_err());
        assert!(PermGroup::new(3, vec![vec![0, 1]]).is_err());
    }

    #[test]
    fn tower_entries_divide_order() {
        let g = PermGroup::new(4, vec![vec![1, 0, 2, 3], vec![1, 2, 3, 0]]).unwrap();
        let order = g.order();
        assert_eq!(order, BigUint::from(24u32)); // S4
        let tower = g.transitivity_tower();
        assert_eq!(tower, vec![4, 3, 2]);
        let product: BigUint = tower.iter().map(|&n| BigUint::from(n)).product();
        assert_eq!(product, order);
    }
}
