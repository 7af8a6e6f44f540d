//! Unital subrings of a `FiniteRing` by closure saturation.
//!
//! The subring generated by a set `G` is the additive span of the
//! multiplicative monoid generated by `G ∪ {1}`. Enumeration starts from the
//! prime subring and keeps adjoining single elements, `S ↦ closure(S ∪ {a})`,
//! until no new subring appears. Adjoining `a` only depends on the subring
//! `⟨a⟩` it generates, so candidates are grouped by `⟨a⟩` first.

use std::collections::{HashMap, VecDeque};

use super::{ElementSet, FiniteRing, RingBounds};
use crate::error::{Error, Result};

fn closure_of_gens(ring: &FiniteRing, gens: &[usize]) -> ElementSet {
    let n = ring.size();
    let mut monoid = ElementSet::empty(n);
    let mut words = vec![ring.one()];
    monoid.insert(ring.one());
    let mut i = 0;
    while i < words.len() {
        let w = words[i];
        for &g in gens {
            let x = ring.mul(w, g);
            if monoid.insert(x) {
                words.push(x);
            }
        }
        i += 1;
    }

    let mut span = ElementSet::from_indices(n, [ring.zero()]);
    let mut members = vec![ring.zero()];
    for &m in &words {
        if span.contains(m) {
            continue;
        }
        // span := span + ⟨m⟩, one coset of the old span per multiple of m
        let old = members.clone();
        let mut x = m;
        while !span.contains(x) {
            for &h in &old {
                let y = ring.add(h, x);
                if span.insert(y) {
                    members.push(y);
                }
            }
            x = ring.add(x, m);
        }
    }
    span
}

/// The smallest unital subring containing `seed`.
pub fn closure(ring: &FiniteRing, seed: &[usize]) -> ElementSet {
    closure_of_gens(ring, seed)
}

/// All unital subrings with their covering relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubringLattice {
    /// Sorted by size, then by element set.
    pub subrings: Vec<ElementSet>,
    /// `(lower, upper)` index pairs with nothing strictly between.
    pub covers: Vec<(usize, usize)>,
    pub top: usize,
    pub bottom: usize,
}

impl SubringLattice {
    pub fn len(&self) -> usize {
        self.subrings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subrings.is_empty()
    }

    fn lower_covers(&self, upper: usize) -> Vec<usize> {
        self.covers
            .iter()
            .filter(|&&(_, u)| u == upper)
            .map(|&(l, _)| l)
            .collect()
    }
}

pub fn enumerate_subrings(ring: &FiniteRing, bounds: RingBounds) -> Result<SubringLattice> {
    let order: Vec<usize> = (0..ring.size()).collect();
    enumerate_in_order(ring, bounds, &order)
}

/// Enumeration that visits candidate elements in `order`; the result does
/// not depend on it.
pub(crate) fn enumerate_in_order(
    ring: &FiniteRing,
    bounds: RingBounds,
    order: &[usize],
) -> Result<SubringLattice> {
    bounds.check(ring.size() as u64)?;
    let bottom = closure_of_gens(ring, &[]);

    // one representative element per distinct ⟨a⟩
    let mut principal: Vec<(ElementSet, usize)> = Vec::new();
    let mut seen: HashMap<ElementSet, ()> = HashMap::new();
    for &a in order {
        if bottom.contains(a) {
            continue;
        }
        let gen = closure_of_gens(ring, &[a]);
        if seen.insert(gen.clone(), ()).is_none() {
            principal.push((gen, a));
        }
    }

    let mut found: Vec<(ElementSet, Vec<usize>)> = vec![(bottom.clone(), Vec::new())];
    let mut index: HashMap<ElementSet, usize> = HashMap::from([(bottom, 0)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let (current, gens) = found[i].clone();
        for (gen, a) in &principal {
            if gen.is_subset(&current) {
                continue;
            }
            let mut next_gens = gens.clone();
            next_gens.push(*a);
            let next = closure_of_gens(ring, &next_gens);
            if !index.contains_key(&next) {
                if found.len() >= bounds.max_lattice {
                    return Err(Error::LatticeOverflow(bounds.max_lattice));
                }
                index.insert(next.clone(), found.len());
                queue.push_back(found.len());
                found.push((next, next_gens));
            }
        }
    }

    let mut subrings: Vec<ElementSet> = found.into_iter().map(|(s, _)| s).collect();
    subrings.sort_by_cached_key(|a| (a.len(), a.to_vec()));
    let covers = covering_pairs(&subrings);
    let top = subrings.len() - 1;
    debug_assert_eq!(subrings[top].len(), ring.size());
    Ok(SubringLattice {
        subrings,
        covers,
        top,
        bottom: 0,
    })
}

/// Transitive reduction of strict inclusion.
fn covering_pairs(sets: &[ElementSet]) -> Vec<(usize, usize)> {
    let n = sets.len();
    let below = |i: usize, j: usize| i != j && sets[i].len() < sets[j].len() && sets[i].is_subset(&sets[j]);
    let mut out = Vec::new();
    for j in 0..n {
        for i in 0..n {
            if below(i, j) && !(0..n).any(|k| below(i, k) && below(k, j)) {
                out.push((i, j));
            }
        }
    }
    out.sort_unstable();
    out
}

/// Co-atoms of the lattice: the maximal subrings.
pub fn maximal_subrings(lattice: &SubringLattice) -> Vec<ElementSet> {
    lattice
        .lower_covers(lattice.top)
        .into_iter()
        .map(|i| lattice.subrings[i].clone())
        .collect()
}

/// Maximal chains from the full ring down to the prime subring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainSet {
    /// Lattice indices, top first.
    pub chains: Vec<Vec<usize>>,
    /// Whether all chains have the same length; only set when the ring is a
    /// constructed field.
    pub uniform: Option<bool>,
}

pub fn saturated_chains(lattice: &SubringLattice, ring: &FiniteRing) -> ChainSet {
    fn walk(l: &SubringLattice, at: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let lower = l.lower_covers(at);
        if lower.is_empty() {
            out.push(path.clone());
            return;
        }
        for i in lower {
            path.push(i);
            walk(l, i, path, out);
            path.pop();
        }
    }
    let mut chains = Vec::new();
    walk(lattice, lattice.top, &mut vec![lattice.top], &mut chains);
    let uniform = ring
        .provenance()
        .is_field()
        .then(|| chains.windows(2).all(|w| w[0].len() == w[1].len()));
    ChainSet { chains, uniform }
}
