//! Named graphs, the four extremal families over the class of connected
//! graphs with n vertices and k cut edges, graph composition (vertex
//! coalescing, joining by an internal path), and the exact closed-form bounds
//! the families attain.

use crate::error::Error;
use crate::graph::Graph;
use crate::indices::IndexValue;
use num::bigint::BigUint;
use serde::Serialize;

/// A valid (n, k) class: connected graphs on n vertices with exactly k cut
/// edges, where n >= 4 and 1 <= k <= n - 3. The constructor enforces the
/// range, so a `ClassSpec` value is always valid.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ClassSpec {
    n: usize,
    k: usize,
}

impl ClassSpec {
    pub fn new(n: usize, k: usize) -> Result<Self, Error> {
        if n >= 4 && k >= 1 && k + 3 <= n {
            Ok(ClassSpec { n, k })
        } else {
            Err(Error::InvalidClass { n, k })
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// All valid classes with n <= n_max, ordered by (n, k).
    pub fn all_up_to(n_max: usize) -> Vec<ClassSpec> {
        let mut out = Vec::new();
        for n in 4..=n_max {
            for k in 1..=n - 3 {
                out.push(ClassSpec { n, k });
            }
        }
        out
    }
}

impl std::fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(n={}, k={})", self.n, self.k)
    }
}

/// Path on n vertices, edges (i, i+1).
pub fn path(n: usize) -> Result<Graph, Error> {
    if n < 1 {
        return Err(Error::TooSmall { what: "path", min: 1, got: n });
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &edges)
}

/// Cycle on n vertices.
pub fn cycle(n: usize) -> Result<Graph, Error> {
    if n < 3 {
        return Err(Error::TooSmall { what: "cycle", min: 3, got: n });
    }
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((n - 1, 0));
    Graph::new(n, &edges)
}

/// Star on n vertices, center 0.
pub fn star(n: usize) -> Result<Graph, Error> {
    if n < 1 {
        return Err(Error::TooSmall { what: "star", min: 1, got: n });
    }
    let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
    Graph::new(n, &edges)
}

/// Complete graph on n vertices.
pub fn complete(n: usize) -> Result<Graph, Error> {
    if n < 1 {
        return Err(Error::TooSmall { what: "complete", min: 1, got: n });
    }
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, &edges)
}

/// Cycle on n-k vertices with k pendent edges at the hub (vertex 0).
/// Exactly k cut edges, all pendent.
pub fn c_n_s(spec: ClassSpec) -> Graph {
    with_pendants(cycle(spec.n - spec.k).expect("n-k >= 3"), spec.k)
}

/// Cycle on n-k vertices with a k-edge tail at the hub (vertex 0): the
/// tadpole in the class. Exactly k cut edges.
pub fn c_n_p(spec: ClassSpec) -> Graph {
    with_tail(cycle(spec.n - spec.k).expect("n-k >= 3"), spec.k)
}

/// Complete graph on n-k vertices with k pendent edges at the hub (vertex 0).
pub fn k_n_s(spec: ClassSpec) -> Graph {
    with_pendants(complete(spec.n - spec.k).expect("n-k >= 3"), spec.k)
}

/// Complete graph on n-k vertices with a k-edge tail at the hub (vertex 0).
pub fn k_n_p(spec: ClassSpec) -> Graph {
    with_tail(complete(spec.n - spec.k).expect("n-k >= 3"), spec.k)
}

fn with_pendants(core: Graph, k: usize) -> Graph {
    let n0 = core.n();
    let mut edges = core.edges();
    for i in 0..k {
        edges.push((0, n0 + i));
    }
    Graph::new(n0 + k, &edges).expect("pendant attachment is in range")
}

fn with_tail(core: Graph, k: usize) -> Graph {
    let n0 = core.n();
    let mut edges = core.edges();
    let mut prev = 0;
    for i in 0..k {
        edges.push((prev, n0 + i));
        prev = n0 + i;
    }
    Graph::new(n0 + k, &edges).expect("tail attachment is in range")
}

/// Identify vertex v1 of g1 with vertex v2 of g2. The result keeps g1's
/// vertex ids; g2's other vertices follow, in order, starting at n1.
pub fn coalesce(g1: &Graph, v1: usize, g2: &Graph, v2: usize) -> Result<Graph, Error> {
    if v1 >= g1.n() {
        return Err(Error::InvalidVertex { v: v1, n: g1.n() });
    }
    if v2 >= g2.n() {
        return Err(Error::InvalidVertex { v: v2, n: g2.n() });
    }
    let n1 = g1.n();
    let map = |u: usize| {
        if u == v2 {
            v1
        } else {
            n1 + u - (u > v2) as usize
        }
    };
    let mut edges = g1.edges();
    edges.extend(g2.edges().iter().map(|&(a, b)| (map(a), map(b))));
    Graph::new(n1 + g2.n() - 1, &edges)
}

/// Disjoint union of g1 and g2 plus a path with `edges` edges from u (in g1)
/// to w (in g2); the path's edges - 1 interior vertices are appended last.
/// g2's vertex ids shift up by n1.
pub fn join_by_path(
    g1: &Graph,
    u: usize,
    g2: &Graph,
    w: usize,
    edges: usize,
) -> Result<Graph, Error> {
    assert!(edges >= 1, "join_by_path needs at least one path edge");
    if u >= g1.n() {
        return Err(Error::InvalidVertex { v: u, n: g1.n() });
    }
    if w >= g2.n() {
        return Err(Error::InvalidVertex { v: w, n: g2.n() });
    }
    let n1 = g1.n();
    let n2 = g2.n();
    let mut es = g1.edges();
    es.extend(g2.edges().iter().map(|&(a, b)| (n1 + a, n1 + b)));
    let mut prev = u;
    for i in 0..edges - 1 {
        es.push((prev, n1 + n2 + i));
        prev = n1 + n2 + i;
    }
    es.push((prev, n1 + w));
    Graph::new(n1 + n2 + edges - 1, &es)
}

fn big(v: usize) -> BigUint {
    BigUint::from(v as u64)
}

/// 4^(n-k-1) * (k+2)^2: the minimum of Π1 over the class, attained by c_n_s.
pub fn bound_thm31(spec: ClassSpec) -> IndexValue {
    let (n, k) = (spec.n, spec.k);
    (big(4).pow((n - k - 1) as u32) * big(k + 2).pow(2)).into()
}

/// 27 * 4^(n-2): the minimum of Π2 over the class, attained by c_n_p.
/// Note the value does not depend on k.
pub fn bound_thm32(spec: ClassSpec) -> IndexValue {
    (big(27) * big(4).pow((spec.n - 2) as u32)).into()
}

/// 4^(k-1) * (n-k)^2 * (n-k-1)^(2(n-k-1)): the maximum of Π1, attained by
/// k_n_p.
pub fn bound_thm41(spec: ClassSpec) -> IndexValue {
    let (n, k) = (spec.n, spec.k);
    (big(4).pow((k - 1) as u32)
        * big(n - k).pow(2)
        * big(n - k - 1).pow(2 * (n - k - 1) as u32))
    .into()
}

/// (n-1)^(n-1) * (n-k-1)^((n-k-1)^2): the maximum of Π2, attained by k_n_s.
pub fn bound_thm42(spec: ClassSpec) -> IndexValue {
    let (n, k) = (spec.n, spec.k);
    (big(n - 1).pow((n - 1) as u32) * big(n - k - 1).pow(((n - k - 1) * (n - k - 1)) as u32))
        .into()
}
