//! Finite posets on the labels `1..=d` and the order-theoretic data the
//! polytope constructions consume: ideals, antichains, maximal elements,
//! linear extensions, ordinal sums and induced subposets.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_POSET_SIZE: usize = 64;

/// A subset of `1..=d`, stored as a bit mask (label `i` is bit `i - 1`).
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSet(u64);

impl IndexSet {
    pub const EMPTY: IndexSet = IndexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        IndexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// The full set `1..=d`.
    pub fn full(d: usize) -> Self {
        if d >= 64 {
            IndexSet(u64::MAX)
        } else {
            IndexSet((1u64 << d) - 1)
        }
    }

    pub fn singleton(label: usize) -> Self {
        IndexSet(1u64 << (label - 1))
    }

    pub fn from_labels<I: IntoIterator<Item = usize>>(labels: I) -> Self {
        IndexSet(labels.into_iter().fold(0u64, |acc, i| acc | (1u64 << (i - 1))))
    }

    pub fn contains(self, label: usize) -> bool {
        label >= 1 && label <= 64 && self.0 & (1u64 << (label - 1)) != 0
    }

    pub fn with(self, label: usize) -> Self {
        IndexSet(self.0 | (1u64 << (label - 1)))
    }

    pub fn without(self, label: usize) -> Self {
        IndexSet(self.0 & !(1u64 << (label - 1)))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        IndexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        IndexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        IndexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let t = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(t + 1)
            }
        })
    }

    pub fn labels(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// The 0/1 vector of length `d` with ones at the members.
    pub fn indicator(self, d: usize) -> Vec<i64> {
        (1..=d).map(|i| i64::from(self.contains(i))).collect()
    }

    /// Canonical order: by cardinality, then lexicographically on the sorted
    /// member lists (so `{1} < {2}` and `{1,2} < {1,3}`).
    pub fn canonical_cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.labels().cmp(&other.labels()))
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for IndexSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.labels().serialize(serializer)
    }
}

impl Serialize for Poset {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_spec().serialize(serializer)
    }
}

pub fn sort_canonical(sets: &mut [IndexSet]) {
    sets.sort_by(IndexSet::canonical_cmp);
}

/// A finite poset on `1..=d`, stored transitively closed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    d: usize,
    /// `down[i]` = labels `j` with `j <= i+1` (including `i+1` itself).
    down: Vec<u64>,
    /// `up[i]` = labels `j` with `i+1 <= j`.
    up: Vec<u64>,
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Poset")
            .field("d", &self.d)
            .field("covers", &self.covers())
            .finish()
    }
}

/// Wire format `{"d": int, "covers": [[i, j], ...]}` with `p_i < p_j` a cover.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PosetSpec {
    pub d: usize,
    pub covers: Vec<[usize; 2]>,
}

impl Poset {
    /// Builds the transitive closure of the given relations `p_i < p_j`.
    pub fn from_cover_relations(d: usize, covers: &[(usize, usize)]) -> Result<Self> {
        if d == 0 || d > MAX_POSET_SIZE {
            return Err(Error::UnsupportedSize(d));
        }
        let mut down: Vec<u64> = (0..d).map(|i| 1u64 << i).collect();
        for &(a, b) in covers {
            for idx in [a, b] {
                if idx == 0 || idx > d {
                    return Err(Error::IndexOutOfRange { index: idx, d });
                }
            }
            if a == b {
                return Err(Error::CycleDetected(a, b));
            }
            down[b - 1] |= 1u64 << (a - 1);
        }
        // Warshall closure on bit rows.
        for k in 0..d {
            let bit = 1u64 << k;
            let row_k = down[k];
            for row in down.iter_mut() {
                if *row & bit != 0 {
                    *row |= row_k;
                }
            }
        }
        for i in 0..d {
            for j in (i + 1)..d {
                if down[i] & (1u64 << j) != 0 && down[j] & (1u64 << i) != 0 {
                    return Err(Error::CycleDetected(i + 1, j + 1));
                }
            }
        }
        Ok(Self::from_down_sets(down))
    }

    fn from_down_sets(down: Vec<u64>) -> Self {
        let d = down.len();
        let mut up = vec![0u64; d];
        for (i, &row) in down.iter().enumerate() {
            for j in IndexSet(row).iter() {
                up[j - 1] |= 1u64 << i;
            }
        }
        Poset { d, down, up }
    }

    pub fn from_spec(spec: &PosetSpec) -> Result<Self> {
        let covers: Vec<(usize, usize)> = spec.covers.iter().map(|c| (c[0], c[1])).collect();
        Self::from_cover_relations(spec.d, &covers)
    }

    pub fn to_spec(&self) -> PosetSpec {
        PosetSpec {
            d: self.d,
            covers: self.covers().into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }

    pub fn chain(d: usize) -> Self {
        let covers: Vec<_> = (1..d).map(|i| (i, i + 1)).collect();
        Self::from_cover_relations(d, &covers).expect("chain is acyclic")
    }

    pub fn antichain(d: usize) -> Self {
        Self::from_cover_relations(d, &[]).expect("antichain is acyclic")
    }

    pub fn size(&self) -> usize {
        self.d
    }

    pub fn ground_set(&self) -> IndexSet {
        IndexSet::full(self.d)
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.down[j - 1] & (1u64 << (i - 1)) != 0
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.leq(i, j) || self.leq(j, i)
    }

    /// Principal down-set of `i` (including `i`).
    pub fn down_set(&self, i: usize) -> IndexSet {
        IndexSet(self.down[i - 1])
    }

    pub fn up_set(&self, i: usize) -> IndexSet {
        IndexSet(self.up[i - 1])
    }

    /// Cover relations `(i, j)` with `p_i ⋖ p_j`, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for j in 1..=self.d {
            let strictly_below = self.down_set(j).without(j);
            for i in strictly_below.iter() {
                let between = self
                    .up_set(i)
                    .without(i)
                    .intersection(strictly_below);
                if between.is_empty() {
                    out.push((i, j));
                }
            }
        }
        out.sort();
        out
    }

    /// Strict relations `(i, j)` with `p_i < p_j`.
    pub fn strict_relations(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for j in 1..=self.d {
            for i in self.down_set(j).without(j).iter() {
                out.push((i, j));
            }
        }
        out.sort();
        out
    }

    pub fn is_ideal(&self, set: IndexSet) -> bool {
        set.is_subset(self.ground_set())
            && set.iter().all(|i| self.down_set(i).is_subset(set))
    }

    pub fn is_antichain(&self, set: IndexSet) -> bool {
        set.iter()
            .all(|i| self.down_set(i).intersection(set) == IndexSet::singleton(i))
    }

    /// The poset ideal generated by `set`.
    pub fn ideal_generated_by(&self, set: IndexSet) -> IndexSet {
        set.iter()
            .fold(IndexSet::EMPTY, |acc, i| acc.union(self.down_set(i)))
    }

    /// A linear extension: labels sorted so that `p_i < p_j` puts `i` first.
    pub fn a_linear_extension(&self) -> Vec<usize> {
        let mut placed = IndexSet::EMPTY;
        let mut order = Vec::with_capacity(self.d);
        while order.len() < self.d {
            let next = (1..=self.d)
                .find(|&i| {
                    !placed.contains(i) && self.down_set(i).without(i).is_subset(placed)
                })
                .expect("transitively closed antisymmetric relation has a minimal element");
            placed = placed.with(next);
            order.push(next);
        }
        order
    }

    /// All poset ideals, including `∅` and the ground set, in canonical order.
    pub fn ideals(&self) -> Vec<IndexSet> {
        let order = self.a_linear_extension();
        let mut out = Vec::new();
        // Decide membership along a linear extension, so every element's
        // lower set is decided before the element itself.
        fn rec(p: &Poset, order: &[usize], k: usize, cur: IndexSet, out: &mut Vec<IndexSet>) {
            if k == order.len() {
                out.push(cur);
                return;
            }
            let i = order[k];
            rec(p, order, k + 1, cur, out);
            if p.down_set(i).without(i).is_subset(cur) {
                rec(p, order, k + 1, cur.with(i), out);
            }
        }
        rec(self, &order, 0, IndexSet::EMPTY, &mut out);
        sort_canonical(&mut out);
        out
    }

    /// All antichains, including `∅` and singletons, in canonical order.
    pub fn antichains(&self) -> Vec<IndexSet> {
        let mut out = Vec::new();
        fn rec(p: &Poset, next: usize, cur: IndexSet, out: &mut Vec<IndexSet>) {
            out.push(cur);
            for i in next..=p.d {
                if cur.iter().all(|j| !p.comparable(i, j)) {
                    rec(p, i + 1, cur.with(i), out);
                }
            }
        }
        rec(self, 1, IndexSet::EMPTY, &mut out);
        sort_canonical(&mut out);
        out
    }

    fn maximal_of(&self, set: IndexSet) -> IndexSet {
        IndexSet::from_labels(
            set.iter()
                .filter(|&i| self.up_set(i).intersection(set) == IndexSet::singleton(i)),
        )
    }

    /// `max(I)` for a poset ideal `I`.
    pub fn max_elements(&self, ideal: IndexSet) -> Result<IndexSet> {
        if !self.is_ideal(ideal) {
            return Err(Error::NotAnIdeal);
        }
        Ok(self.maximal_of(ideal))
    }

    /// `I * I'`: the ideal generated by `max(I ∩ I') ∩ (max(I) ∪ max(I'))`.
    pub fn ideal_star(&self, a: IndexSet, b: IndexSet) -> Result<IndexSet> {
        let max_a = self.max_elements(a)?;
        let max_b = self.max_elements(b)?;
        let max_meet = self.maximal_of(a.intersection(b));
        Ok(self.ideal_generated_by(max_meet.intersection(max_a.union(max_b))))
    }

    /// `e(P)`: number of maximal chains `∅ → [d]` in the ideal lattice.
    pub fn linear_extension_count(&self) -> BigUint {
        let ideals = self.ideals();
        let mut count: HashMap<u64, BigUint> = HashMap::with_capacity(ideals.len());
        // Canonical order is by cardinality, so predecessors come first.
        for ideal in &ideals {
            if ideal.is_empty() {
                count.insert(0, BigUint::one());
                continue;
            }
            let mut total = BigUint::zero();
            for i in self.maximal_of(*ideal).iter() {
                total += &count[&ideal.without(i).bits()];
            }
            count.insert(ideal.bits(), total);
        }
        count.remove(&self.ground_set().bits()).unwrap_or_default()
    }

    /// `P ⊕ Q`: labels of `Q` are shifted by `|P|`.
    pub fn ordinal_sum(&self, other: &Poset) -> Result<Poset> {
        let d = self.d + other.d;
        if d > MAX_POSET_SIZE {
            return Err(Error::UnsupportedSize(d));
        }
        let mut down = self.down.clone();
        let all_p = self.ground_set().bits();
        for &row in &other.down {
            down.push((row << self.d) | all_p);
        }
        Ok(Self::from_down_sets(down))
    }

    /// `{p_{d+1}} ⊕ P`, with the new bottom element labelled `d + 1`.
    pub fn adjoin_bottom(&self) -> Result<Poset> {
        let d = self.d + 1;
        if d > MAX_POSET_SIZE {
            return Err(Error::UnsupportedSize(d));
        }
        let bottom = 1u64 << self.d;
        let mut down: Vec<u64> = self.down.iter().map(|&row| row | bottom).collect();
        down.push(bottom);
        Ok(Self::from_down_sets(down))
    }

    /// Induced subposet on `w`, relabelled `1..=|w|`; the second component
    /// maps each new label (index `k - 1`) back to its original label.
    pub fn induced_subposet(&self, w: IndexSet) -> Result<(Poset, Vec<usize>)> {
        if !w.is_subset(self.ground_set()) {
            let bad = w.difference(self.ground_set()).iter().next().unwrap_or(0);
            return Err(Error::IndexOutOfRange { index: bad, d: self.d });
        }
        let labels = w.labels();
        if labels.is_empty() {
            return Err(Error::UnsupportedSize(0));
        }
        let down = labels
            .iter()
            .map(|&j| {
                labels
                    .iter()
                    .enumerate()
                    .filter(|&(_, &i)| self.leq(i, j))
                    .fold(0u64, |acc, (k, _)| acc | (1u64 << k))
            })
            .collect();
        Ok((Self::from_down_sets(down), labels))
    }

    /// `Δ_W(P, Q) = P_W ⊕ Q_{W̄}` as a poset on `1..=d` that keeps the
    /// original labels: label `i` plays `p_i` when `i ∈ W` and `q_i` otherwise.
    pub fn delta_w(p: &Poset, q: &Poset, w: IndexSet) -> Result<Poset> {
        if p.d != q.d {
            return Err(Error::DimensionMismatch(p.d, q.d));
        }
        let full = p.ground_set();
        if !w.is_subset(full) {
            let bad = w.difference(full).iter().next().unwrap_or(0);
            return Err(Error::IndexOutOfRange { index: bad, d: p.d });
        }
        let w_bar = full.difference(w);
        let down = (1..=p.d)
            .map(|j| {
                if w.contains(j) {
                    p.down_set(j).intersection(w).bits()
                } else {
                    q.down_set(j).intersection(w_bar).union(w).bits()
                }
            })
            .collect();
        Ok(Self::from_down_sets(down))
    }

    /// Applies a relabelling: new label of old label `i` is `perm[i - 1]`.
    pub fn relabel(&self, perm: &[usize]) -> Poset {
        let mut down = vec![0u64; self.d];
        for j in 1..=self.d {
            let row = self
                .down_set(j)
                .iter()
                .fold(0u64, |acc, i| acc | (1u64 << (perm[i - 1] - 1)));
            down[perm[j - 1] - 1] = row;
        }
        Self::from_down_sets(down)
    }

    /// Dense bit rows (`row[j]` bit `i` set iff `p_{i+1} <= p_{j+1}`).
    pub fn down_rows(&self) -> &[u64] {
        &self.down
    }
}

/// True iff the union of the strict relations of `P` and `Q` on `[d]` is acyclic.
pub fn has_common_linear_extension(p: &Poset, q: &Poset) -> Result<bool> {
    if p.size() != q.size() {
        return Err(Error::DimensionMismatch(p.size(), q.size()));
    }
    let d = p.size();
    let below: Vec<u64> = (1..=d)
        .map(|j| {
            p.down_set(j)
                .union(q.down_set(j))
                .without(j)
                .bits()
        })
        .collect();
    // Kahn's algorithm on the union relation.
    let mut placed = 0u64;
    for _ in 0..d {
        match (0..d).find(|&j| placed & (1 << j) == 0 && below[j] & !placed == 0) {
            Some(j) => placed |= 1 << j,
            None => return Ok(false),
        }
    }
    Ok(true)
}

/// Every labelled poset on `1..=d`, grown one element at a time.
pub fn all_labeled_posets(d: usize) -> Vec<Poset> {
    assert!((1..=MAX_POSET_SIZE).contains(&d));
    let mut current: Vec<Vec<u64>> = vec![vec![1]];
    for k in 1..d {
        let mut next = Vec::new();
        for down in &current {
            let poset = Poset::from_down_sets(down.clone());
            let ideals = poset.ideals();
            // Up-sets of the old poset are complements of ideals.
            let full = poset.ground_set();
            for &below in &ideals {
                for &ideal in &ideals {
                    let above = full.difference(ideal);
                    if !below.intersection(above).is_empty() {
                        continue;
                    }
                    // transitivity: everything below must be below everything above
                    let ok = below
                        .iter()
                        .all(|b| above.is_subset(poset.up_set(b)));
                    if !ok {
                        continue;
                    }
                    let new_bit = 1u64 << k;
                    let mut rows = down.clone();
                    for a in above.iter() {
                        rows[a - 1] |= new_bit | below.bits();
                    }
                    rows.push(new_bit | below.bits());
                    next.push(rows);
                }
            }
        }
        current = next;
    }
    current.into_iter().map(Poset::from_down_sets).collect()
}

fn permutations(d: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (1..=d).collect();
    fn heap(k: usize, perm: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(perm.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, perm, out);
            if k % 2 == 0 {
                perm.swap(i, k - 1);
            } else {
                perm.swap(0, k - 1);
            }
        }
    }
    heap(d, &mut perm, &mut out);
    out
}

/// Canonical form under relabelling: the lexicographically least down-set
/// table over all permutations (desk scale only).
pub fn canonical_form(p: &Poset) -> Vec<u64> {
    permutations(p.size())
        .iter()
        .map(|perm| p.relabel(perm).down)
        .min()
        .expect("at least one permutation")
}

/// One representative per isomorphism class of `d`-element posets.
pub fn unlabeled_posets(d: usize) -> Vec<Poset> {
    let mut seen = std::collections::BTreeMap::new();
    for p in all_labeled_posets(d) {
        let key = canonical_form(&p);
        seen.entry(key).or_insert(p);
    }
    let mut reps: Vec<Poset> = seen
        .into_values()
        .map(|p| {
            // prefer a naturally labelled representative
            let ext = p.a_linear_extension();
            let mut perm = vec![0; p.size()];
            for (pos, &label) in ext.iter().enumerate() {
                perm[label - 1] = pos + 1;
            }
            p.relabel(&perm)
        })
        .collect();
    reps.sort_by_key(|p| p.down.clone());
    reps
}
