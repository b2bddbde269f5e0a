//! Labeled simple graphs stored as fixed-width bit rows.
//!
//! Vertex ids are dense `0..n`. Row `u` holds one bit per vertex; all
//! parameter kernels work on whole 64-bit words of these rows. Labels are
//! opaque metadata and never influence any algorithm.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub(crate) const WORD: usize = 64;

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

/// Iterates the indices of the set bits of a word slice in increasing order.
pub(crate) fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(wi * WORD + b)
        })
    })
}

/// Iterates the set bits of a single mask.
pub(crate) fn mask_bits(mut w: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if w == 0 {
            return None;
        }
        let b = w.trailing_zeros() as usize;
        w &= w - 1;
        Some(b)
    })
}

/// A subset of the vertex ids of some host graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        Self { n, words: vec![0; words_for(n)] }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    pub fn from_ids<I: IntoIterator<Item = usize>>(n: usize, ids: I) -> Result<Self> {
        let mut s = Self::empty(n);
        for v in ids {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            s.insert(v);
        }
        Ok(s)
    }

    /// Builds a set over `n <= 64` vertices from a bit mask.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        debug_assert!(n <= WORD);
        let keep = if n == WORD { u64::MAX } else { (1u64 << n) - 1 };
        let mut s = Self::empty(n);
        if n > 0 {
            s.words[0] = mask & keep;
        }
        s
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} out of range");
        self.words[v / WORD] |= 1 << (v % WORD);
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.n {
            self.words[v / WORD] &= !(1 << (v % WORD));
        }
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v / WORD] >> (v % WORD) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Size of the host vertex range.
    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        iter_bits(&self.words)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.n == other.n && self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }
}

/// Result of [`Graph::induced_subgraph`]: the subgraph plus the id mapping.
#[derive(Clone, Debug)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `old_ids[new] = old`; strictly increasing.
    pub old_ids: Vec<usize>,
}

impl InducedSubgraph {
    /// New id of a host vertex, if it was kept.
    pub fn new_id(&self, old: usize) -> Option<usize> {
        self.old_ids.binary_search(&old).ok()
    }
}

/// Simple undirected graph on vertices `0..n` with symmetric, irreflexive bit rows.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(try_from = "GraphFile", into = "GraphFile")]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    labels: BTreeMap<usize, String>,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        let words = words_for(n);
        Self { n, words, rows: vec![0; n * words], labels: BTreeMap::new() }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.set_edge(u, v);
            }
        }
        g
    }

    /// Builds a graph from an edge list; repeated pairs collapse to one edge.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.check_pair(u, v)?;
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Like [`Graph::from_edge_list`] but rejects repeated pairs.
    pub fn from_edge_list_strict(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.check_pair(u, v)?;
            if g.has_edge(u, v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from an adjacency predicate evaluated on every pair `u < v`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    g.set_edge(u, v);
                }
            }
        }
        g
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        Ok(())
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.rows[u * self.words + v / WORD] |= 1 << (v % WORD);
        self.rows[v * self.words + u / WORD] |= 1 << (u % WORD);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn row(&self, u: usize) -> &[u64] {
        &self.rows[u * self.words..(u + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / WORD] >> (v % WORD) & 1 == 1
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(self.row(u))
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            out.extend(self.neighbors(u).filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    /// Number of vertices other than `x`, `y` adjacent to exactly one of them.
    pub(crate) fn distinguisher_count(&self, x: usize, y: usize) -> usize {
        let (rx, ry) = (self.row(x), self.row(y));
        let raw: usize = rx.iter().zip(ry).map(|(a, b)| (a ^ b).count_ones() as usize).sum();
        // when x ~ y the xor contains both x and y
        if self.has_edge(x, y) { raw - 2 } else { raw }
    }

    /// Number of common neighbours of `u` and `v`.
    pub fn common_neighbors(&self, u: usize, v: usize) -> usize {
        self.row(u).iter().zip(self.row(v)).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    /// Adjacency rows as single words, available when `n <= 64`.
    pub fn masks(&self) -> Option<Vec<u64>> {
        if self.n > WORD {
            return None;
        }
        Some((0..self.n).map(|u| if self.words == 0 { 0 } else { self.rows[u * self.words] }).collect())
    }

    pub fn labels(&self) -> &BTreeMap<usize, String> {
        &self.labels
    }

    pub fn label(&self, u: usize) -> Option<&str> {
        self.labels.get(&u).map(String::as_str)
    }

    pub fn set_labels(&mut self, labels: BTreeMap<usize, String>) -> Result<()> {
        if let Some((&v, _)) = labels.iter().find(|(&v, _)| v >= self.n) {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        self.labels = labels;
        Ok(())
    }

    pub fn with_labels(mut self, labels: BTreeMap<usize, String>) -> Result<Self> {
        self.set_labels(labels)?;
        Ok(self)
    }

    /// Subgraph induced by `s`; new ids follow the increasing order of the old ids.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<InducedSubgraph> {
        if s.universe() != self.n {
            return Err(Error::VertexSetMismatch { expected: s.universe(), actual: self.n });
        }
        if s.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        let old_ids = s.to_vec();
        let mut g = Graph::empty(old_ids.len());
        for (a, &u) in old_ids.iter().enumerate() {
            for (b, &v) in old_ids.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    g.set_edge(a, b);
                }
            }
        }
        g.labels = old_ids
            .iter()
            .enumerate()
            .filter_map(|(new, old)| self.labels.get(old).map(|l| (new, l.clone())))
            .collect();
        Ok(InducedSubgraph { graph: g, old_ids })
    }

    /// Same vertex count and identical adjacency rows, id for id. Labels are ignored.
    pub fn equal_labeled(&self, other: &Graph) -> bool {
        self.n == other.n && self.rows == other.rows
    }

    /// Complement graph (labels kept).
    pub fn complement(&self) -> Graph {
        let mut g = Graph::from_fn(self.n, |u, v| !self.has_edge(u, v));
        g.labels = self.labels.clone();
        g
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serialization cannot fail")
    }

    pub fn from_json(s: &str) -> std::result::Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.equal_labeled(other)
    }
}

impl Eq for Graph {}

/// Free-function form of [`Graph::equal_labeled`].
pub fn equal_labeled(a: &Graph, b: &Graph) -> bool {
    a.equal_labeled(b)
}

/// On-disk graph schema: `{"n": int, "edges": [[u,v],...], "labels": {id: string}?}`.
#[derive(Serialize, Deserialize)]
struct GraphFile {
    n: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    labels: BTreeMap<usize, String>,
}

impl TryFrom<GraphFile> for Graph {
    type Error = Error;

    fn try_from(f: GraphFile) -> Result<Self> {
        let edges: Vec<_> = f.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::from_edge_list_strict(f.n, &edges)?.with_labels(f.labels)
    }
}

impl From<Graph> for GraphFile {
    fn from(g: Graph) -> Self {
        let edges = g.edges().into_iter().map(|(u, v)| [u, v]).collect();
        GraphFile { n: g.n, edges, labels: g.labels }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    #[test]
    fn single_vertex() {
        let g = Graph::from_edge_list(1, &[]).unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn p3_degrees() {
        let g = path(3);
        assert_eq!((0..3).map(|v| g.degree(v)).collect::<Vec<_>>(), vec![1, 2, 1]);
        assert_eq!(path(4).edge_count(), 3);
    }

    #[test]
    fn edge_list_errors() {
        assert_eq!(Graph::from_edge_list(3, &[(0, 3)]), Err(Error::VertexOutOfRange { vertex: 3, n: 3 }));
        assert_eq!(Graph::from_edge_list(3, &[(1, 1)]), Err(Error::SelfLoop(1)));
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(Graph::from_edge_list_strict(3, &[(0, 1), (1, 0)]), Err(Error::DuplicateEdge(0, 1)));
    }

    #[test]
    fn induced_examples() {
        let p4 = path(4);
        let all = p4.induced_subgraph(&VertexSet::full(4)).unwrap();
        assert!(all.graph.equal_labeled(&p4));
        let ends = p4.induced_subgraph(&VertexSet::from_ids(4, [0, 3]).unwrap()).unwrap();
        assert_eq!(ends.graph.n(), 2);
        assert_eq!(ends.graph.edge_count(), 0);
        assert_eq!(ends.new_id(3), Some(1));
        assert_eq!(ends.new_id(1), None);
        assert_eq!(p4.induced_subgraph(&VertexSet::empty(4)).unwrap_err(), Error::EmptyVertexSet);
    }

    #[test]
    fn c5_minus_a_vertex_is_p4() {
        let c5 = cycle(5);
        for drop in 0..5 {
            let s = VertexSet::from_ids(5, (0..5).filter(|&v| v != drop)).unwrap();
            let h = c5.induced_subgraph(&s).unwrap().graph;
            // relabel along the cycle starting after the dropped vertex
            let order: Vec<usize> = (1..5).map(|i| (drop + i) % 5).collect();
            let s_sorted = s.to_vec();
            let relabeled = Graph::from_fn(4, |a, b| {
                let ia = s_sorted.binary_search(&order[a]).unwrap();
                let ib = s_sorted.binary_search(&order[b]).unwrap();
                h.has_edge(ia, ib)
            });
            assert!(relabeled.equal_labeled(&path(4)), "drop {drop}");
        }
    }

    #[test]
    fn equal_labeled_examples() {
        assert!(path(4).equal_labeled(&path(4)));
        assert!(!path(4).equal_labeled(&cycle(4)));
    }

    #[test]
    fn wide_rows() {
        let n = 130;
        let g = Graph::from_fn(n, |u, v| (u + v) % 7 == 0);
        for u in 0..n {
            assert!(!g.has_edge(u, u));
            assert_eq!(g.degree(u), g.neighbors(u).count());
            for v in 0..n {
                assert_eq!(g.has_edge(u, v), u != v && (u + v) % 7 == 0);
            }
        }
        assert!(g.masks().is_none());
    }

    #[test]
    fn json_round_trip_and_duplicates() {
        let mut labels = BTreeMap::new();
        labels.insert(2, "x".to_string());
        let g = path(4).with_labels(labels).unwrap();
        let s = g.to_json();
        assert_eq!(s, r#"{"n":4,"edges":[[0,1],[1,2],[2,3]],"labels":{"2":"x"}}"#);
        let back = Graph::from_json(&s).unwrap();
        assert!(back.equal_labeled(&g));
        assert_eq!(back.label(2), Some("x"));
        assert!(Graph::from_json(r#"{"n":3,"edges":[[0,1],[1,0]]}"#).is_err());
        assert!(Graph::from_json(r#"{"n":3,"edges":[[0,5]]}"#).is_err());
    }
}
