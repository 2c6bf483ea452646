//! Exact combinatorics of r-uniform hypergraphs on the vertex set `[n] = {1, ..., n}`.
//!
//! An [`Edge`] is stored as a bitmask with vertex `v` at bit `v - 1`. With that
//! encoding the colex order on sets coincides with the numeric order of the
//! masks: the highest differing bit is the maximum of the symmetric
//! difference, and the mask containing it is the larger one. Every ordered
//! collection in this module is therefore colex-sorted for free.

use std::collections::BTreeSet;
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::HypergraphError;

/// Largest supported vertex label.
pub const MAX_VERTICES: usize = 64;

/// A strictly increasing tuple of positive integers, i.e. a finite vertex set.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Edge(u64);

impl Edge {
    pub fn from_vertices(vertices: &[usize]) -> Result<Self, HypergraphError> {
        let mut mask = 0u64;
        let mut prev = 0usize;
        for &v in vertices {
            if v <= prev || v > MAX_VERTICES {
                return Err(HypergraphError::InvalidEdge(vertices.to_vec()));
            }
            mask |= 1 << (v - 1);
            prev = v;
        }
        Ok(Edge(mask))
    }

    /// Builds an edge from an unordered list of distinct vertices.
    pub fn from_unsorted(vertices: &[usize]) -> Result<Self, HypergraphError> {
        let mut sorted = vertices.to_vec();
        sorted.sort_unstable();
        Self::from_vertices(&sorted)
    }

    pub const fn from_mask(mask: u64) -> Self {
        Edge(mask)
    }

    pub const fn mask(self) -> u64 {
        self.0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        (1..=MAX_VERTICES).contains(&v) && self.0 & (1 << (v - 1)) != 0
    }

    pub fn with(self, v: usize) -> Self {
        Edge(self.0 | (1 << (v - 1)))
    }

    pub fn without(self, v: usize) -> Self {
        Edge(self.0 & !(1 << (v - 1)))
    }

    pub fn max_vertex(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    pub fn is_subset_of(self, other: Edge) -> bool {
        self.0 & !other.0 == 0
    }

    /// Vertices in increasing order.
    pub fn vertices(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            (rest != 0).then(|| {
                let v = rest.trailing_zeros() as usize + 1;
                rest &= rest - 1;
                v
            })
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.vertices().collect()
    }

    /// Colex successor among sets of the same size (Gosper's hack).
    pub fn colex_successor(self) -> Option<Edge> {
        let x = self.0;
        if x == 0 {
            return None;
        }
        let c = x & x.wrapping_neg();
        let r = x.checked_add(c)?;
        let next = (((r ^ x) >> 2) / c) | r;
        Some(Edge(next))
    }

    /// Whether `self` is obtained from `other` by lowering coordinates, i.e.
    /// `self_p <= other_p` for every position `p`. Both sets must have equal size.
    pub fn is_dominated_by(self, other: Edge) -> bool {
        self.len() == other.len() && self.vertices().zip(other.vertices()).all(|(a, b)| a <= b)
    }

    /// All sets of the same size that are coordinatewise at most `self`,
    /// excluding `self`. Returned in colex order.
    pub fn dominated(self) -> Vec<Edge> {
        let bounds = self.to_vec();
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(bounds.len());
        fill_dominated(&bounds, &mut current, &mut out);
        out.retain(|&e| e != self);
        out.sort_unstable();
        out
    }

    /// Direct descendants: one coordinate lowered by exactly one.
    pub fn direct_descendants(self) -> Vec<Edge> {
        let v = self.to_vec();
        let mut out = Vec::new();
        for p in 0..v.len() {
            let lower = if p == 0 { 0 } else { v[p - 1] };
            if v[p] - 1 > lower {
                out.push(Edge(self.0 & !(1 << (v[p] - 1)) | (1 << (v[p] - 2))));
            }
        }
        out
    }
}

fn fill_dominated(bounds: &[usize], current: &mut Vec<usize>, out: &mut Vec<Edge>) {
    let p = current.len();
    if p == bounds.len() {
        out.push(Edge(current.iter().fold(0, |m, &v| m | (1 << (v - 1)))));
        return;
    }
    let start = current.last().map_or(1, |&v| v + 1);
    for v in start..=bounds[p] {
        current.push(v);
        fill_dominated(bounds, current, out);
        current.pop();
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Edge {
    /// Single-digit labels are written juxtaposed (`123`); otherwise dot-separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.to_vec();
        if v.iter().all(|&x| x < 10) {
            for x in v {
                write!(f, "{x}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
            write!(f, "{}", parts.join("."))
        }
    }
}

/// Colex comparison straight from the definition: `a < b` iff the maximum of
/// the symmetric difference lies in `b`.
pub fn colex_less(a: &[usize], b: &[usize]) -> Result<bool, HypergraphError> {
    if a.len() != b.len() {
        return Err(HypergraphError::ArityMismatch { expected: a.len(), found: b.len() });
    }
    let max_sym = a
        .iter()
        .filter(|x| !b.contains(x))
        .chain(b.iter().filter(|x| !a.contains(x)))
        .max();
    Ok(match max_sym {
        Some(m) => b.contains(m),
        None => false,
    })
}

/// `C(n, k)` with `C(n, k) = 0` for `k > n`.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1))
}

/// The `(r-1)`- or `(r-2)`-neighbourhood of a vertex or a pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Link {
    pub arity: usize,
    pub sets: BTreeSet<Edge>,
}

impl Link {
    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn contains(&self, set: Edge) -> bool {
        self.sets.contains(&set)
    }

    pub fn iter(&self) -> impl Iterator<Item = Edge> + '_ {
        self.sets.iter().copied()
    }

    pub fn to_vecs(&self) -> Vec<Vec<usize>> {
        self.sets.iter().map(|e| e.to_vec()).collect()
    }
}

/// An r-uniform hypergraph on `[n]` with colex-ordered edges.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniformHypergraph {
    r: usize,
    n: usize,
    edges: BTreeSet<Edge>,
}

impl fmt::Debug for UniformHypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniformHypergraph(r={}, n={}, {:?})", self.r, self.n, self.edges)
    }
}

impl UniformHypergraph {
    pub fn empty(r: usize, n: usize) -> Result<Self, HypergraphError> {
        if r < 2 {
            return Err(HypergraphError::UniformityTooSmall(r));
        }
        if n > MAX_VERTICES {
            return Err(HypergraphError::TooManyVertices { n, max: MAX_VERTICES });
        }
        Ok(Self { r, n, edges: BTreeSet::new() })
    }

    /// Builds a graph from vertex lists; each list must be strictly increasing.
    pub fn new<V: AsRef<[usize]>>(
        r: usize,
        n: usize,
        edges: impl IntoIterator<Item = V>,
    ) -> Result<Self, HypergraphError> {
        let mut g = Self::empty(r, n)?;
        for e in edges {
            let e = e.as_ref();
            let edge = Edge::from_vertices(e)?;
            g.check_edge(edge)?;
            if !g.edges.insert(edge) {
                return Err(HypergraphError::DuplicateEdge(e.to_vec()));
            }
        }
        Ok(g)
    }

    pub fn from_edge_set(
        r: usize,
        n: usize,
        edges: impl IntoIterator<Item = Edge>,
    ) -> Result<Self, HypergraphError> {
        let mut g = Self::empty(r, n)?;
        for e in edges {
            g.check_edge(e)?;
            if !g.edges.insert(e) {
                return Err(HypergraphError::DuplicateEdge(e.to_vec()));
            }
        }
        Ok(g)
    }

    /// `[t]^(r)`, the clique of order `t` on the first `t` vertices.
    pub fn complete(r: usize, t: usize) -> Result<Self, HypergraphError> {
        Self::complete_on(r, t, t)
    }

    /// `[t]^(r)` placed on the vertex set `[n]`, `t <= n`.
    pub fn complete_on(r: usize, t: usize, n: usize) -> Result<Self, HypergraphError> {
        let mut g = Self::empty(r, n)?;
        if t > n {
            return Err(HypergraphError::VertexOutOfRange { vertex: t, n });
        }
        g.edges = all_sets(t, r).into_iter().collect();
        Ok(g)
    }

    fn check_edge(&self, e: Edge) -> Result<(), HypergraphError> {
        if e.len() != self.r {
            return Err(HypergraphError::ArityMismatch { expected: self.r, found: e.len() });
        }
        match e.max_vertex() {
            Some(v) if v > self.n => Err(HypergraphError::VertexOutOfRange { vertex: v, n: self.n }),
            _ => Ok(()),
        }
    }

    fn check_vertex(&self, v: usize) -> Result<(), HypergraphError> {
        if v == 0 || v > self.n {
            Err(HypergraphError::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_edgeless(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.edges.contains(&e)
    }

    pub fn has_edge(&self, vertices: &[usize]) -> bool {
        Edge::from_unsorted(vertices).is_ok_and(|e| self.edges.contains(&e))
    }

    /// Edges in colex order.
    pub fn edges(&self) -> impl DoubleEndedIterator<Item = Edge> + ExactSizeIterator + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_set(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn edge_lists(&self) -> Vec<Vec<usize>> {
        self.edges.iter().map(|e| e.to_vec()).collect()
    }

    pub fn insert(&mut self, e: Edge) -> Result<bool, HypergraphError> {
        self.check_edge(e)?;
        Ok(self.edges.insert(e))
    }

    pub fn remove(&mut self, e: Edge) -> bool {
        self.edges.remove(&e)
    }

    pub fn is_subgraph_of(&self, other: &UniformHypergraph) -> bool {
        self.r == other.r && self.n <= other.n && self.edges.is_subset(&other.edges)
    }

    pub fn degree(&self, i: usize) -> usize {
        self.edges.iter().filter(|e| e.contains(i)).count()
    }

    /// `G^c`: all r-subsets of `[n]` that are not edges.
    pub fn complement(&self) -> UniformHypergraph {
        let edges = all_sets(self.n, self.r)
            .into_iter()
            .filter(|e| !self.edges.contains(e))
            .collect();
        UniformHypergraph { r: self.r, n: self.n, edges }
    }

    /// `E_i = {A : A ∪ {i} ∈ E}`.
    pub fn link(&self, i: usize) -> Result<Link, HypergraphError> {
        self.check_vertex(i)?;
        let sets = self.edges.iter().filter(|e| e.contains(i)).map(|e| e.without(i)).collect();
        Ok(Link { arity: self.r - 1, sets })
    }

    /// `E_ij = {B : B ∪ {i, j} ∈ E}`.
    pub fn pair_link(&self, i: usize, j: usize) -> Result<Link, HypergraphError> {
        self.check_pair(i, j)?;
        let sets = self
            .edges
            .iter()
            .filter(|e| e.contains(i) && e.contains(j))
            .map(|e| e.without(i).without(j))
            .collect();
        Ok(Link { arity: self.r - 2, sets })
    }

    /// `E_{i\j} = E_i ∩ E_j^c`: the `(r-1)`-sets avoiding `i` and `j` that
    /// complete `i` but not `j` to an edge.
    pub fn diff_link(&self, i: usize, j: usize) -> Result<Link, HypergraphError> {
        self.check_pair(i, j)?;
        let sets = self
            .edges
            .iter()
            .filter(|e| e.contains(i) && !e.contains(j))
            .map(|e| e.without(i))
            .filter(|a| !self.edges.contains(&a.with(j)))
            .collect();
        Ok(Link { arity: self.r - 1, sets })
    }

    fn check_pair(&self, i: usize, j: usize) -> Result<(), HypergraphError> {
        self.check_vertex(i)?;
        self.check_vertex(j)?;
        if i == j {
            return Err(HypergraphError::SameVertex(i));
        }
        Ok(())
    }

    /// Closed under coordinatewise lowering of edges. Checking direct
    /// descendants suffices: every dominated set is reached by a chain of
    /// single-step lowerings that stays strictly increasing.
    pub fn is_left_compressed(&self) -> bool {
        self.edges
            .iter()
            .all(|e| e.direct_descendants().iter().all(|d| self.edges.contains(d)))
    }

    /// Repeatedly replaces an edge by a dominated non-edge until none remains.
    ///
    /// Each step takes the colex-largest edge that has a dominated non-edge and
    /// swaps it for the colex-smallest such non-edge.
    pub fn left_compress(&self) -> UniformHypergraph {
        let mut g = self.clone();
        while let Some((from, to)) = g.next_compression() {
            g.edges.remove(&from);
            g.edges.insert(to);
        }
        g
    }

    /// The replacement `left_compress` would perform next, if any.
    pub fn next_compression(&self) -> Option<(Edge, Edge)> {
        self.edges.iter().rev().find_map(|&e| {
            e.dominated().into_iter().find(|d| !self.edges.contains(d)).map(|d| (e, d))
        })
    }

    /// Largest `t` such that some `t` vertices span all `C(t, r)` edges.
    /// Sets with fewer than `r` vertices count as vacuously complete, so an
    /// edgeless graph reports `min(n, r - 1)`.
    pub fn max_clique_order(&self) -> usize {
        let mut best = 0;
        self.grow_clique(Edge::default(), 1, &mut best, usize::MAX);
        best
    }

    pub fn contains_complete_subgraph(&self, t: usize) -> Result<bool, HypergraphError> {
        if t < self.r {
            return Err(HypergraphError::OrderBelowUniformity { order: t, r: self.r });
        }
        let mut best = 0;
        self.grow_clique(Edge::default(), 1, &mut best, t);
        Ok(best >= t)
    }

    fn grow_clique(&self, clique: Edge, next: usize, best: &mut usize, stop_at: usize) {
        let size = clique.len();
        *best = (*best).max(size);
        if *best >= stop_at {
            return;
        }
        for v in next..=self.n {
            if size + (self.n - v + 1) <= *best {
                return;
            }
            if self.extends_clique(clique, v) {
                self.grow_clique(clique.with(v), v + 1, best, stop_at);
                if *best >= stop_at {
                    return;
                }
            }
        }
    }

    fn extends_clique(&self, clique: Edge, v: usize) -> bool {
        let k = self.r - 1;
        if clique.len() < k {
            return true;
        }
        subsets_of_size(clique, k).all(|s| self.edges.contains(&s.with(v)))
    }

    /// Two vertices are equivalent when every `(r-1)`-set avoiding both
    /// completes either both or neither to an edge.
    pub fn are_equivalent(&self, i: usize, j: usize) -> Result<bool, HypergraphError> {
        let li = self.link(i)?;
        let lj = self.link(j)?;
        if i == j {
            return Ok(true);
        }
        let side_i = li.iter().filter(|a| !a.contains(j));
        let side_j: BTreeSet<Edge> = lj.iter().filter(|a| !a.contains(i)).collect();
        let side_i: BTreeSet<Edge> = side_i.collect();
        Ok(side_i == side_j)
    }

    /// Partition of `[n]` into equivalence classes, each sorted, ordered by
    /// smallest member. The relation is transitive, so greedy grouping is exact.
    pub fn equivalent_classes(&self) -> Vec<Vec<usize>> {
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for v in 1..=self.n {
            let home = classes
                .iter_mut()
                .find(|c| self.are_equivalent(c[0], v).unwrap_or(false));
            match home {
                Some(c) => c.push(v),
                None => classes.push(vec![v]),
            }
        }
        classes
    }

    pub fn to_document(&self) -> GraphDocument {
        GraphDocument { r: self.r, n: self.n, edges: self.edge_lists() }
    }

    /// Compact JSON with colex-ordered edges.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_document()).expect("graph documents always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self, GraphFileError> {
        let doc: GraphDocument = serde_json::from_str(text)?;
        Ok(doc.into_graph()?)
    }

    pub fn read_file(path: impl AsRef<Path>) -> Result<Self, GraphFileError> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn write_file(&self, path: impl AsRef<Path>) -> Result<(), GraphFileError> {
        let mut text = self.to_json();
        text.push('\n');
        std::fs::write(path, text)?;
        Ok(())
    }
}

/// The first `m` r-sets of positive integers in colex order, `C_{r,m}`, on
/// the smallest vertex set `[n]` that holds them.
pub fn colex_first_m(r: usize, m: usize) -> Result<UniformHypergraph, HypergraphError> {
    if r < 2 {
        return Err(HypergraphError::UniformityTooSmall(r));
    }
    let mut edges = BTreeSet::new();
    let mut cur = Some(Edge::from_mask((1u64 << r) - 1));
    for _ in 0..m {
        let e = cur.ok_or(HypergraphError::TooManyVertices { n: MAX_VERTICES + 1, max: MAX_VERTICES })?;
        edges.insert(e);
        cur = e.colex_successor();
    }
    let n = edges.iter().next_back().and_then(|e| e.max_vertex()).unwrap_or(0);
    UniformHypergraph::from_edge_set(r, n, edges)
}

/// All k-subsets of `[n]` in colex order.
pub fn all_sets(n: usize, k: usize) -> Vec<Edge> {
    if k > n {
        return Vec::new();
    }
    if k == 0 {
        return vec![Edge::default()];
    }
    let limit = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut out = Vec::with_capacity(binomial(n, k) as usize);
    let mut cur = Some(Edge::from_mask((1u64 << k) - 1));
    while let Some(e) = cur {
        if e.mask() > limit {
            break;
        }
        out.push(e);
        cur = e.colex_successor();
    }
    out
}

/// The `k`-element subsets of `set`, in colex order.
pub fn subsets_of_size(set: Edge, k: usize) -> impl Iterator<Item = Edge> {
    let members = set.to_vec();
    all_sets(members.len(), k).into_iter().map(move |idx| {
        idx.vertices().fold(Edge::default(), |acc, p| acc.with(members[p - 1]))
    })
}

/// On-disk form of a graph: `{"r": .., "n": .., "edges": [[..], ..]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub r: usize,
    pub n: usize,
    pub edges: Vec<Vec<usize>>,
}

impl GraphDocument {
    pub fn into_graph(self) -> Result<UniformHypergraph, HypergraphError> {
        UniformHypergraph::new(self.r, self.n, self.edges)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum GraphFileError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("malformed graph document: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] HypergraphError),
}
