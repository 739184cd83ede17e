//! Simple undirected graphs, cuts and small induced-subgraph search.

mod cut;
pub mod named;
mod search;
pub mod text;

pub use cut::Cut;
pub(crate) use search::iter_bits;
pub use search::{
    find_induced_c4, find_induced_subgraph, find_induced_subgraph_bounded, is_induced_c4,
    DEFAULT_PATTERN_BOUND,
};

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n`.
///
/// Adjacency is kept twice: sorted neighbor lists for iteration and a
/// packed bit matrix for constant-time pair queries. The edge list keeps
/// construction order so files round-trip in the order they were written.
#[derive(Clone, Debug)]
pub struct Graph {
    adj: Vec<Vec<u32>>,
    words: usize,
    bits: Vec<u64>,
    edges: Vec<(u32, u32)>,
}

/// Result of [`Graph::classify_set`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SetClass {
    /// Every pair adjacent. Sets of size at most one are reported here with
    /// `also_stable` set.
    Clique { also_stable: bool },
    Stable,
    Neither,
}

/// Result of [`Graph::set_relation`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SetRelation {
    Complete,
    Anticomplete,
    Mixed,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

/// Largest vertex count a [`Graph`] accepts. The pair matrix takes
/// `n²/8` bytes, 512 MiB at this bound.
pub const MAX_VERTICES: usize = 1 << 16;

impl Graph {
    /// Edgeless graph on `n` vertices. Panics above [`MAX_VERTICES`].
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "{n} vertices exceed the dense limit of {MAX_VERTICES}");
        let words = n.div_ceil(64);
        Graph {
            adj: vec![Vec::new(); n],
            words,
            bits: vec![0; words * n],
            edges: Vec::new(),
        }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range ids.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::SizeLimit { n, limit: MAX_VERTICES });
        }
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            if g.has_edge(u, v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.set_bit(u, v);
            g.set_bit(v, u);
            g.edges.push((u.min(v) as u32, u.max(v) as u32));
        }
        for &(u, v) in &g.edges {
            g.adj[u as usize].push(v);
            g.adj[v as usize].push(u);
        }
        for list in &mut g.adj {
            list.sort_unstable();
        }
        Ok(g)
    }

    /// Builds a graph from sorted, symmetric, loop-free neighbor lists.
    /// Edges are recorded in ascending `(u, v)` order.
    pub(crate) fn from_sorted_adjacency(adj: Vec<Vec<u32>>) -> Self {
        let n = adj.len();
        assert!(n <= MAX_VERTICES, "{n} vertices exceed the dense limit of {MAX_VERTICES}");
        let words = n.div_ceil(64);
        let mut g = Graph {
            adj: Vec::new(),
            words,
            bits: vec![0; words * n],
            edges: Vec::new(),
        };
        for (u, list) in adj.iter().enumerate() {
            debug_assert!(list.windows(2).all(|w| w[0] < w[1]));
            for &v in list {
                debug_assert_ne!(u, v as usize);
                g.set_bit(u, v as usize);
                if (u as u32) < v {
                    g.edges.push((u as u32, v));
                }
            }
        }
        g.adj = adj;
        debug_assert!(g
            .edges
            .iter()
            .all(|&(u, v)| g.has_edge(v as usize, u as usize)));
        g
    }

    /// Builds a graph from unordered pairs already known to be valid.
    pub(crate) fn from_valid_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in pairs {
            adj[u].push(v as u32);
            adj[v].push(u as u32);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Graph::from_sorted_adjacency(adj)
    }

    #[inline]
    fn set_bit(&mut self, u: usize, v: usize) {
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Edges as `(u, v)` with `u < v`, in construction order.
    pub fn edges(&self) -> impl ExactSizeIterator<Item = (usize, usize)> + '_ {
        self.edges.iter().map(|&(u, v)| (u as usize, v as usize))
    }

    /// Row of the adjacency bit matrix for `v`.
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.adj.iter().all(|l| l.len() == d)
    }

    pub fn complement(&self) -> Graph {
        let n = self.vertex_count();
        let adj = (0..n)
            .map(|u| {
                (0..n)
                    .filter(|&v| v != u && !self.has_edge(u, v))
                    .map(|v| v as u32)
                    .collect()
            })
            .collect();
        Graph::from_sorted_adjacency(adj)
    }

    /// Subgraph induced by `vertices`; vertex `k` of the result is
    /// `vertices[k]`.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        for &v in vertices {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::Overlap(v));
            }
        }
        let mut pairs = Vec::new();
        for (a, &u) in vertices.iter().enumerate() {
            for (b, &v) in vertices.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    pairs.push((a, b));
                }
            }
        }
        Ok(Graph::from_valid_pairs(vertices.len(), pairs))
    }

    fn check_vertices(&self, s: &[usize]) -> Result<()> {
        let n = self.vertex_count();
        match s.iter().find(|&&v| v >= n) {
            Some(&v) => Err(Error::VertexOutOfRange { vertex: v, n }),
            None => Ok(()),
        }
    }

    /// Whether `s` is a clique, a stable set, or neither.
    pub fn classify_set(&self, s: &[usize]) -> Result<SetClass> {
        self.check_vertices(s)?;
        let mut set = s.to_vec();
        set.sort_unstable();
        set.dedup();
        if set.len() <= 1 {
            return Ok(SetClass::Clique { also_stable: true });
        }
        let (mut any, mut all) = (false, true);
        for (a, &u) in set.iter().enumerate() {
            for &v in &set[a + 1..] {
                let e = self.has_edge(u, v);
                any |= e;
                all &= e;
            }
        }
        Ok(match (all, any) {
            (true, _) => SetClass::Clique { also_stable: false },
            (false, false) => SetClass::Stable,
            _ => SetClass::Neither,
        })
    }

    /// Relation between two disjoint vertex sets.
    pub fn set_relation(&self, x: &[usize], y: &[usize]) -> Result<SetRelation> {
        self.check_vertices(x)?;
        self.check_vertices(y)?;
        if let Some(&v) = x.iter().find(|v| y.contains(v)) {
            return Err(Error::Overlap(v));
        }
        let (mut any, mut all) = (false, true);
        for &u in x {
            for &v in y {
                let e = self.has_edge(u, v);
                any |= e;
                all &= e;
            }
        }
        Ok(if all {
            SetRelation::Complete
        } else if any {
            SetRelation::Mixed
        } else {
            SetRelation::Anticomplete
        })
    }

    /// Number of edges crossing `cut`.
    pub fn cut_size(&self, cut: &Cut) -> Result<usize> {
        if cut.len() != self.vertex_count() {
            return Err(Error::InvalidCut(format!(
                "cut covers {} vertices, graph has {}",
                cut.len(),
                self.vertex_count()
            )));
        }
        Ok(self
            .edges
            .iter()
            .filter(|&&(u, v)| cut.in_a(u as usize) != cut.in_a(v as usize))
            .count())
    }

    /// Number of edges with both ends on the same side of `cut`.
    pub fn uncut_size(&self, cut: &Cut) -> Result<usize> {
        Ok(self.edge_count() - self.cut_size(cut)?)
    }
}
