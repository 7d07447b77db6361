//! Face lattice from vertex–facet incidences: the facets of a face `F` are
//! the inclusion-maximal proper nonempty sets `F ∩ G` over facets `G`.

use std::collections::HashSet;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use super::LatticePolytope;

/// Face counts `f_0, …, f_{m-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FVector {
    pub counts: Vec<u64>,
}

impl FVector {
    pub fn dim(&self) -> usize {
        self.counts.len()
    }

    /// `Σ (-1)^i f_i = 1 - (-1)^m`.
    pub fn satisfies_euler(&self) -> bool {
        let m = self.counts.len();
        let lhs: i64 = self
            .counts
            .iter()
            .enumerate()
            .map(|(i, &f)| if i % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum();
        let rhs = if m % 2 == 0 { 0 } else { 2 };
        lhs == rhs
    }
}

pub(super) fn f_vector(p: &LatticePolytope) -> FVector {
    let m = p.dim;
    let facets = p.incidences();
    let mut counts = vec![0u64; m];
    if m == 0 {
        return FVector { counts };
    }
    let mut level: HashSet<FixedBitSet> = facets.iter().cloned().collect();
    counts[m - 1] = level.len() as u64;
    for k in (0..m - 1).rev() {
        let mut next: HashSet<FixedBitSet> = HashSet::new();
        for face in &level {
            let face_size = face.count_ones(..);
            let mut candidates: Vec<FixedBitSet> = Vec::new();
            for g in &facets {
                let mut meet = face.clone();
                meet.intersect_with(g);
                let size = meet.count_ones(..);
                if size == 0 || size == face_size {
                    continue;
                }
                candidates.push(meet);
            }
            candidates.sort_by_key(|c| std::cmp::Reverse(c.count_ones(..)));
            let mut maximal: Vec<FixedBitSet> = Vec::new();
            for c in candidates {
                if !maximal.iter().any(|mx| c.is_subset(mx)) {
                    maximal.push(c);
                }
            }
            next.extend(maximal);
        }
        counts[k] = next.len() as u64;
        level = next;
    }
    FVector { counts }
}
