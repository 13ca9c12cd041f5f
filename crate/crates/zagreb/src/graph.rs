//! Simple undirected graphs on dense vertex ids 0..n, stored as bitset
//! adjacency rows. Everything downstream (indices, enumeration, verification)
//! works at small n, so a `u64` row per vertex is plenty and keeps
//! connectivity, bridge finding and canonical labelling cheap.

use crate::error::Error;
use std::fmt;

/// Hard cap on vertex count: one bitset word per adjacency row.
pub const MAX_N: usize = 64;

/// A simple undirected graph. No self-loops, no parallel edges.
///
/// Two graphs compare equal iff they have the same vertex count and the same
/// edge set; the derived `Ord` is an arbitrary but deterministic total order
/// (vertex count, then adjacency rows) used for stable sorting.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

/// Iterate the set bit positions of a mask, ascending.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

impl Graph {
    /// Build a graph from an edge list. Duplicate pairs collapse silently;
    /// out-of-range endpoints and self-loops are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, Error> {
        if n > MAX_N {
            return Err(Error::TooLarge {
                what: "Graph",
                max: MAX_N,
                got: n,
            });
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            if u == v || u >= n || v >= n {
                return Err(Error::InvalidEdge(u, v));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph { n, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> Result<usize, Error> {
        if v >= self.n {
            return Err(Error::InvalidVertex { v, n: self.n });
        }
        Ok(self.deg(v))
    }

    /// Unchecked degree, for internal hot paths.
    pub(crate) fn deg(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Degrees indexed by vertex.
    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.deg(v)).collect()
    }

    /// Degree sequence, descending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Neighbors of `v`, ascending. Panics if `v >= n`.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.adj[v])
    }

    pub(crate) fn adj_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// All edges as sorted pairs (u < v), lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            for v in bits(self.adj[u] >> u << u) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// A copy with one extra edge.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph, Error> {
        if u == v || u >= self.n || v >= self.n {
            return Err(Error::InvalidEdge(u, v));
        }
        let mut g = self.clone();
        g.add_edge_mut(u, v);
        Ok(g)
    }

    pub(crate) fn add_edge_mut(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub(crate) fn remove_edge_mut(&mut self, u: usize, v: usize) {
        debug_assert!(self.has_edge(u, v));
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    /// A copy with one extra vertex (id n) adjacent to the vertices in `mask`.
    pub(crate) fn with_vertex(&self, mask: u64) -> Graph {
        debug_assert!(self.n < MAX_N && mask >> self.n == 0);
        let mut adj = self.adj.clone();
        adj.push(mask);
        for v in bits(mask) {
            adj[v] |= 1 << self.n;
        }
        Graph { n: self.n + 1, adj }
    }

    /// True iff a single traversal component covers all vertices.
    /// The empty graph counts as connected (vacuously).
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen.count_ones() as usize == self.n
    }

    /// Cut edges (bridges), sorted pairs in lexicographic order.
    /// One DFS with discovery times and low links.
    pub fn bridges(&self) -> Result<Vec<(usize, usize)>, Error> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let mut st = LowlinkState::new(self.n);
        if self.n > 0 {
            st.dfs(self, 0, usize::MAX);
        }
        st.bridges.sort_unstable();
        Ok(st.bridges)
    }

    /// Bridges partitioned into pendent/internal plus the block decomposition.
    pub fn classify_cut_edges(&self) -> Result<CutEdgeReport, Error> {
        let bridges = self.bridges()?;
        let mut pendent = Vec::new();
        let mut internal = Vec::new();
        for &(u, v) in &bridges {
            if self.deg(u) == 1 || self.deg(v) == 1 {
                pendent.push((u, v));
            } else {
                internal.push((u, v));
            }
        }
        let mut st = BlockState::new(self.n);
        if self.n > 0 {
            st.dfs(self, 0, usize::MAX);
        }
        st.blocks.sort_unstable();
        Ok(CutEdgeReport {
            bridges,
            pendent,
            internal,
            blocks: st.blocks,
        })
    }

    /// True iff connected with no cut vertex. Defined for n >= 3.
    pub fn is_two_connected(&self) -> Result<bool, Error> {
        if self.n < 3 {
            return Err(Error::TooSmall {
                what: "is_two_connected",
                min: 3,
                got: self.n,
            });
        }
        if !self.is_connected() {
            return Ok(false);
        }
        Ok(self.classify_cut_edges()?.blocks.len() == 1)
    }

    /// m - n + 1 for a connected graph: 0 for trees, 1 for unicyclic graphs.
    pub fn cyclomatic_number(&self) -> Result<usize, Error> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(self.m() + 1 - self.n)
    }

    /// Canonical form; see [`crate::canon`]. Guarded to n <= 12.
    pub fn canonical_form(&self) -> Result<crate::canon::CanonicalForm, Error> {
        crate::canon::canonical_form(self)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

struct LowlinkState {
    ord: Vec<usize>,
    low: Vec<usize>,
    timer: usize,
    bridges: Vec<(usize, usize)>,
}

impl LowlinkState {
    fn new(n: usize) -> Self {
        LowlinkState {
            ord: vec![usize::MAX; n],
            low: vec![usize::MAX; n],
            timer: 0,
            bridges: Vec::new(),
        }
    }

    fn dfs(&mut self, g: &Graph, v: usize, parent: usize) {
        self.ord[v] = self.timer;
        self.low[v] = self.timer;
        self.timer += 1;
        for u in g.neighbors(v) {
            // simple graph: at most one edge to the parent, safe to skip by id
            if u == parent {
                continue;
            }
            if self.ord[u] == usize::MAX {
                self.dfs(g, u, v);
                self.low[v] = self.low[v].min(self.low[u]);
                if self.low[u] > self.ord[v] {
                    self.bridges.push((v.min(u), v.max(u)));
                }
            } else {
                self.low[v] = self.low[v].min(self.ord[u]);
            }
        }
    }
}

struct BlockState {
    ord: Vec<usize>,
    low: Vec<usize>,
    timer: usize,
    stack: Vec<(usize, usize)>,
    blocks: Vec<Vec<usize>>,
}

impl BlockState {
    fn new(n: usize) -> Self {
        BlockState {
            ord: vec![usize::MAX; n],
            low: vec![usize::MAX; n],
            timer: 0,
            stack: Vec::new(),
            blocks: Vec::new(),
        }
    }

    fn dfs(&mut self, g: &Graph, v: usize, parent: usize) {
        self.ord[v] = self.timer;
        self.low[v] = self.timer;
        self.timer += 1;
        for u in g.neighbors(v) {
            if u == parent {
                continue;
            }
            if self.ord[u] == usize::MAX {
                self.stack.push((v, u));
                self.dfs(g, u, v);
                self.low[v] = self.low[v].min(self.low[u]);
                if self.low[u] >= self.ord[v] {
                    // the edges above (v, u) on the stack form one block
                    let mut verts = 0u64;
                    loop {
                        let (a, b) = self.stack.pop().expect("block edge stack underflow");
                        verts |= 1 << a | 1 << b;
                        if (a, b) == (v, u) {
                            break;
                        }
                    }
                    self.blocks.push(bits(verts).collect());
                }
            } else if self.ord[u] < self.ord[v] {
                self.stack.push((v, u));
                self.low[v] = self.low[v].min(self.ord[u]);
            }
        }
    }
}

/// Cut edges of a connected graph, split by the pendent/internal distinction,
/// together with the block decomposition. A block either is 2-connected or is
/// a K2 block, and the K2 blocks are exactly the bridges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutEdgeReport {
    pub bridges: Vec<(usize, usize)>,
    /// Bridges incident to a degree-1 vertex.
    pub pendent: Vec<(usize, usize)>,
    /// Bridges with both endpoints of degree >= 2.
    pub internal: Vec<(usize, usize)>,
    /// Vertex sets of the blocks, each sorted; blocks in lexicographic order.
    pub blocks: Vec<Vec<usize>>,
}
