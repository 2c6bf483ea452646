//! The partial order on triples of `[l]` and the enumeration of left-compressed
//! 3-graphs on `[l]` with `C(l-1,3) + C(l-2,2)` edges and no `K_{l-1}`.
//!
//! Such a graph is determined by its complement `H`, an up-closed set of
//! `l - 2` triples containing `(l-3)(l-2)(l-1)`. The enumerator grows `H`
//! from a forced seed one triple at a time.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;

use crate::error::EnumerationError;
use crate::hypergraph::{Edge, UniformHypergraph};

/// A strictly increasing triple `(a, b, c)` of positive integers. Ordered by colex.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Triple([usize; 3]);

impl Triple {
    pub fn new(a: usize, b: usize, c: usize) -> Result<Self, EnumerationError> {
        if a == 0 || a >= b || b >= c || c > crate::hypergraph::MAX_VERTICES {
            return Err(EnumerationError::InvalidTriple([a, b, c]));
        }
        Ok(Triple([a, b, c]))
    }

    pub fn from_edge(e: Edge) -> Result<Self, EnumerationError> {
        let v = e.to_vec();
        match v[..] {
            [a, b, c] => Self::new(a, b, c),
            _ => Err(EnumerationError::InvalidTriple([v.first().copied().unwrap_or(0), 0, 0])),
        }
    }

    pub fn coords(self) -> [usize; 3] {
        self.0
    }

    pub fn sum(self) -> usize {
        self.0.iter().sum()
    }

    pub fn max_vertex(self) -> usize {
        self.0[2]
    }

    pub fn to_edge(self) -> Edge {
        Edge::from_mask(self.0.iter().fold(0, |m, &v| m | 1 << (v - 1)))
    }

    /// Triples obtained by raising one coordinate by 1, staying inside `[l]`.
    pub fn direct_ancestors(self, l: usize) -> Vec<Triple> {
        let [a, b, c] = self.0;
        let mut out = Vec::with_capacity(3);
        if a + 1 < b {
            out.push(Triple([a + 1, b, c]));
        }
        if b + 1 < c {
            out.push(Triple([a, b + 1, c]));
        }
        if c < l {
            out.push(Triple([a, b, c + 1]));
        }
        out
    }

    /// Triples obtained by lowering one coordinate by 1.
    pub fn direct_descendants(self) -> Vec<Triple> {
        let [a, b, c] = self.0;
        let mut out = Vec::with_capacity(3);
        if a > 1 {
            out.push(Triple([a - 1, b, c]));
        }
        if b > a + 1 {
            out.push(Triple([a, b - 1, c]));
        }
        if c > b + 1 {
            out.push(Triple([a, b, c - 1]));
        }
        out
    }
}

impl Ord for Triple {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.iter().rev().cmp(other.0.iter().rev())
    }
}

impl PartialOrd for Triple {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_edge(), f)
    }
}

/// `a` is an ancestor of `b`: coordinatewise `>=` with a strictly larger sum.
pub fn is_ancestor(a: Triple, b: Triple) -> bool {
    a.0.iter().zip(&b.0).all(|(x, y)| x >= y) && a.sum() > b.sum()
}

/// `a` is a direct ancestor of `b`: an ancestor whose sum is larger by exactly 1.
pub fn is_direct_ancestor(a: Triple, b: Triple) -> bool {
    is_ancestor(a, b) && a.sum() == b.sum() + 1
}

/// All triples of `[l]` under the ancestor order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriplePoset {
    l: usize,
    elements: Vec<Triple>,
}

impl TriplePoset {
    pub fn new(l: usize) -> Result<Self, EnumerationError> {
        if !(3..=crate::hypergraph::MAX_VERTICES).contains(&l) {
            return Err(EnumerationError::OrderTooSmall(l, 3));
        }
        let elements = crate::hypergraph::all_sets(l, 3)
            .into_iter()
            .map(|e| Triple::from_edge(e).expect("3-sets are triples"))
            .collect();
        Ok(Self { l, elements })
    }

    pub fn l(&self) -> usize {
        self.l
    }

    /// Colex order.
    pub fn elements(&self) -> &[Triple] {
        &self.elements
    }

    pub fn ancestors(&self, t: Triple) -> Vec<Triple> {
        self.elements.iter().copied().filter(|&a| is_ancestor(a, t)).collect()
    }

    pub fn descendants(&self, t: Triple) -> Vec<Triple> {
        self.elements.iter().copied().filter(|&d| is_ancestor(t, d)).collect()
    }
}

/// A set of triples of `[l]` closed under taking ancestors.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UpClosedSet {
    l: usize,
    triples: BTreeSet<Triple>,
}

impl fmt::Debug for UpClosedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.triples).finish()
    }
}

impl UpClosedSet {
    pub fn new(l: usize, triples: impl IntoIterator<Item = Triple>) -> Result<Self, EnumerationError> {
        let triples: BTreeSet<Triple> = triples.into_iter().collect();
        if let Some(t) = triples.iter().find(|t| t.max_vertex() > l) {
            return Err(EnumerationError::InvalidTriple(t.coords()));
        }
        let set = Self { l, triples };
        match set.first_gap() {
            Some(t) => Err(EnumerationError::NotUpClosed(t.coords())),
            None => Ok(set),
        }
    }

    /// The complement of a 3-graph on `[l]`; fails unless the graph is left-compressed.
    pub fn from_graph_complement(g: &UniformHypergraph) -> Result<Self, EnumerationError> {
        if g.r() != 3 {
            return Err(EnumerationError::NotThreeUniform(g.r()));
        }
        let triples: Vec<Triple> =
            g.complement().edges().map(|e| Triple::from_edge(e).expect("3-uniform")).collect();
        Self::new(g.n(), triples)
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    pub fn contains(&self, t: Triple) -> bool {
        self.triples.contains(&t)
    }

    /// Colex order, which is the canonical form.
    pub fn iter(&self) -> impl Iterator<Item = Triple> + '_ {
        self.triples.iter().copied()
    }

    pub fn to_vecs(&self) -> Vec<Vec<usize>> {
        self.iter().map(|t| t.coords().to_vec()).collect()
    }

    /// A member with a direct ancestor outside the set, if any.
    fn first_gap(&self) -> Option<Triple> {
        self.iter()
            .find(|t| t.direct_ancestors(self.l).iter().any(|a| !self.triples.contains(a)))
    }

    pub fn is_up_closed(&self) -> bool {
        self.first_gap().is_none()
    }

    /// Non-members that can be added without breaking up-closure.
    pub fn addable(&self) -> BTreeSet<Triple> {
        self.iter()
            .flat_map(Triple::direct_descendants)
            .filter(|d| !self.contains(*d))
            .filter(|d| d.direct_ancestors(self.l).iter().all(|a| self.contains(*a)))
            .collect()
    }

    fn with(&self, t: Triple) -> Self {
        let mut triples = self.triples.clone();
        triples.insert(t);
        Self { l: self.l, triples }
    }

    /// `[l]^(3)` minus the set.
    pub fn complement_graph(&self) -> UniformHypergraph {
        let mut g = UniformHypergraph::complete(3, self.l).expect("l >= 3");
        for t in self.iter() {
            g.remove(t.to_edge());
        }
        g
    }
}

/// `{(l-2)(l-1)l, (l-3)(l-1)l, (l-3)(l-2)l, (l-3)(l-2)(l-1), (l-4)(l-1)l}`.
pub fn forced_seed(l: usize) -> Result<UpClosedSet, EnumerationError> {
    if l < 7 {
        return Err(EnumerationError::OrderTooSmall(l, 7));
    }
    if l > crate::hypergraph::MAX_VERTICES {
        return Err(EnumerationError::InvalidTriple([l - 2, l - 1, l]));
    }
    let t = |a, b, c| Triple([a, b, c]);
    UpClosedSet::new(
        l,
        [
            t(l - 2, l - 1, l),
            t(l - 3, l - 1, l),
            t(l - 3, l - 2, l),
            t(l - 3, l - 2, l - 1),
            t(l - 4, l - 1, l),
        ],
    )
}

/// Every up-closed set of `target_size` triples of `[l]` containing the seed,
/// in canonical order.
pub fn enumerate_up_closed(l: usize, target_size: usize) -> Result<Vec<UpClosedSet>, EnumerationError> {
    if target_size < 5 {
        return Err(EnumerationError::TargetTooSmall(target_size));
    }
    let mut level: BTreeSet<UpClosedSet> = BTreeSet::from([forced_seed(l)?]);
    for _ in 5..target_size {
        let frontier: Vec<UpClosedSet> = level.into_iter().collect();
        level = frontier
            .par_iter()
            .flat_map_iter(|h| h.addable().into_iter().map(move |t| h.with(t)))
            .collect::<Vec<_>>()
            .into_iter()
            .collect();
    }
    Ok(level.into_iter().collect())
}

/// Every left-compressed 3-graph on `[l]` with `C(l-1,3) + C(l-2,2)` edges and
/// no clique of order `l - 1`.
pub fn enumerate_candidates(l: usize) -> Result<Vec<UniformHypergraph>, EnumerationError> {
    if l < 6 {
        return Err(EnumerationError::OrderTooSmall(l, 6));
    }
    if l == 6 {
        let h = UpClosedSet::new(
            6,
            [Triple([4, 5, 6]), Triple([3, 5, 6]), Triple([3, 4, 6]), Triple([3, 4, 5])],
        )?;
        return Ok(vec![h.complement_graph()]);
    }
    Ok(enumerate_up_closed(l, l - 2)?.iter().map(UpClosedSet::complement_graph).collect())
}
