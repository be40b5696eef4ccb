//! Projective points (1-dimensional subspaces of the column space) and group
//! orbits on them.
//!
//! A point is represented by its canonical vector — first nonzero coordinate
//! scaled to 1 — and indexed compactly: points with pivot 0 first, then pivot 1,
//! and so on, the trailing coordinates read as base-q digits. The index order is
//! the lexicographic order on canonical coordinate vectors within each pivot
//! block.

use std::collections::HashMap;

use super::perm::PermGroup;
use super::EngineError;
use crate::ff::Field;
use crate::fmat::{self, FMat};
use crate::matrix::DIM;

pub fn projective_point_count(q: u64) -> u64 {
    // 1 + q + q^2 + q^3 + q^4
    let mut total = 0u64;
    let mut pw = 1u64;
    for _ in 0..DIM {
        total += pw;
        pw = pw.saturating_mul(q);
    }
    total
}

#[derive(Debug, Clone)]
pub struct ProjectiveSpace<F: Field> {
    pub field: F,
}

impl<F: Field> ProjectiveSpace<F> {
    pub fn new(field: F) -> Self {
        ProjectiveSpace { field }
    }

    pub fn point_count(&self) -> u64 {
        projective_point_count(self.field.q())
    }

    /// Scales a nonzero vector so its first nonzero coordinate is 1.
    pub fn canonicalize(&self, v: &[F::Elem; DIM]) -> [F::Elem; DIM] {
        let f = &self.field;
        let pivot = v
            .iter()
            .position(|x| !f.is_zero(*x))
            .expect("projective point must be a nonzero vector");
        let inv = f.inv(v[pivot]).expect("nonzero entry is invertible");
        let mut out = [f.zero(); DIM];
        for (i, x) in v.iter().enumerate() {
            out[i] = f.mul(inv, *x);
        }
        out
    }

    pub fn index_of(&self, canonical: &[F::Elem; DIM]) -> u64 {
        let f = &self.field;
        let q = f.q();
        let pivot = canonical
            .iter()
            .position(|x| !f.is_zero(*x))
            .expect("nonzero vector");
        debug_assert!(canonical[pivot] == f.one());
        let mut offset = 0u64;
        for l in 0..pivot {
            offset += q.pow((DIM - 1 - l) as u32);
        }
        let mut digits = 0u64;
        for x in canonical.iter().skip(pivot + 1) {
            digits = digits * q + f.encode(*x);
        }
        offset + digits
    }

    pub fn point_at(&self, mut idx: u64) -> [F::Elem; DIM] {
        let f = &self.field;
        let q = f.q();
        let mut pivot = 0;
        loop {
            let block = q.pow((DIM - 1 - pivot) as u32);
            if idx < block {
                break;
            }
            idx -= block;
            pivot += 1;
        }
        let mut out = [f.zero(); DIM];
        out[pivot] = f.one();
        for j in (pivot + 1..DIM).rev() {
            out[j] = f.decode(idx % q);
            idx /= q;
        }
        out
    }

    /// Image of a point under a matrix, as a point index.
    pub fn apply(&self, m: &FMat<F::Elem>, idx: u64) -> u64 {
        let v = self.point_at(idx);
        let w = fmat::matvec(&self.field, m, &v);
        self.index_of(&self.canonicalize(&w))
    }
}

/// Partition of all projective points into orbits under ⟨gens⟩.
/// Returns orbit sizes in discovery order (ascending smallest point index).
pub fn orbit_partition<F: Field>(
    space: &ProjectiveSpace<F>,
    gens: &[FMat<F::Elem>],
    max_points: u64,
) -> Result<Vec<u64>, EngineError> {
    let total = space.point_count();
    if total > max_points {
        return Err(EngineError::DomainTooLarge {
            needed: total as u128,
            budget: max_points,
        });
    }
    let mut seen = vec![false; total as usize];
    let mut sizes = Vec::new();
    for start in 0..total {
        if seen[start as usize] {
            continue;
        }
        seen[start as usize] = true;
        let mut stack = vec![start];
        let mut size = 0u64;
        while let Some(x) = stack.pop() {
            size += 1;
            for g in gens {
                let y = space.apply(g, x);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    stack.push(y);
                }
            }
        }
        sizes.push(size);
    }
    Ok(sizes)
}

/// The orbit containing `start`, as a sorted list of point indices.
pub fn orbit_of<F: Field>(
    space: &ProjectiveSpace<F>,
    gens: &[FMat<F::Elem>],
    start: u64,
) -> Vec<u64> {
    let mut seen: HashSet<u64> = HashSet::new();
    seen.insert(start);
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        for g in gens {
            let y = space.apply(g, x);
            if seen.insert(y) {
                stack.push(y);
            }
        }
    }
    let mut orbit: Vec<u64> = seen.into_iter().collect();
    orbit.sort_unstable();
    orbit
}

/// Permutation action of each generator on an invariant orbit, indexed by the
/// orbit's sorted point order.
pub fn perm_image<F: Field>(
    space: &ProjectiveSpace<F>,
    gens: &[FMat<F::Elem>],
    orbit: &[u64],
) -> Result<PermGroup, EngineError> {
    let pos: HashMap<u64, u32> = orbit
        .iter()
        .enumerate()
        .map(|(i, &p)| (p, i as u32))
        .collect();
    let mut perms = Vec::with_capacity(gens.len());
    for g in gens {
        let mut perm = Vec::with_capacity(orbit.len());
        for &p in orbit {
            let y = space.apply(g, p);
            match pos.get(&y) {
                Some(&i) => perm.push(i),
                None => return Err(EngineError::OrbitNotInvariant { point: p }),
            }
        }
        perms.push(perm);
    }
    PermGroup::new(orbit.len(), perms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::PrimeFieldCtx;
    use crate::matrix::builtin_generators;
    use crate::reduction::{IdealSign, ReductionContext};

    fn split_ctx(p: u64, sign: IdealSign) -> crate::reduction::SplitCtx {
        match ReductionContext::new(p, sign).unwrap() {
            ReductionContext::Split(s) => s,
            _ => panic!("expected split"),
        }
    }

    #[test]
    fn point_index_round_trip_gf3() {
        let space = ProjectiveSpace::new(PrimeFieldCtx::new(3).unwrap());
        assert_eq!(space.point_count(), 121);
        for idx in 0..space.point_count() {
            let v = space.point_at(idx);
            assert_eq!(space.index_of(&v), idx);
        }
    }

    #[test]
    fn p3_orbits_depend_on_the_ideal() {
        let g = builtin_generators();
        // the (1 + sqrt(-2)) ideal: orbits 11 and 110
        let ctx = split_ctx(3, IdealSign::Minus);
        let space = ProjectiveSpace::new(ctx.field);
        let gens: Vec<_> = [&g.a, &g.b, &g.c, &g.d].iter().map(|m| ctx.reduce(m)).collect();
        let mut sizes = orbit_partition(&space, &gens, 1 << 20).unwrap();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![11, 110]);
        // the conjugate ideal carries the dual module: orbits 55 and 66
        let ctx = split_ctx(3, IdealSign::Plus);
        let gens: Vec<_> = [&g.a, &g.b, &g.c, &g.d].iter().map(|m| ctx.reduce(m)).collect();
        let mut sizes = orbit_partition(&space, &gens, 1 << 20).unwrap();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![55, 66]);
    }

    #[test]
    fn identity_only_group_gives_singletons() {
        let ctx = split_ctx(3, IdealSign::Plus);
        let space = ProjectiveSpace::new(ctx.field);
        let id = crate::fmat::identity(&ctx.field);
        let sizes = orbit_partition(&space, &[id], 1 << 20).unwrap();
        assert_eq!(sizes.len(), 121);
        assert!(sizes.iter().all(|&s| s == 1));
    }

    #[test]
    fn p11_is_transitive_on_projective_points() {
        let g = builtin_generators();
        let ctx = split_ctx(11, IdealSign::Plus);
        let space = ProjectiveSpace::new(ctx.field);
        let gens: Vec<_> = [&g.a, &g.b, &g.c, &g.d].iter().map(|m| ctx.reduce(m)).collect();
        let sizes = orbit_partition(&space, &gens, 1 << 20).unwrap();
        assert_eq!(sizes, vec![16105]); // (11^5 - 1) / 10
    }

    #[test]
    fn perm_image_identity_is_identity() {
        let ctx = split_ctx(3, IdealSign::Minus);
        let space = ProjectiveSpace::new(ctx.field);
        let id = crate::fmat::identity(&ctx.field);
        let orbit: Vec<u64> = (0..5).collect();
        let img = perm_image(&space, &[id], &orbit).unwrap();
        assert_eq!(img.gens[0], vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn perm_image_rejects_non_invariant_orbit() {
        let g = builtin_generators();
        let ctx = split_ctx(3, IdealSign::Minus);
        let space = ProjectiveSpace::new(ctx.field);
        let gens: Vec<_> = [&g.c].iter().map(|m| ctx.reduce(m)).collect();
        let bogus: Vec<u64> = (0..7).collect();
        assert!(matches!(
            perm_image(&space, &gens, &bogus),
            Err(EngineError::OrbitNotInvariant { .. })
        ));
    }
}
