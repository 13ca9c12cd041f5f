//! Local surgeries that move a graph toward an extremal shape while pushing
//! the multiplicative Zagreb indices in a known direction.
//!
//! Each operation validates its structural precondition and fails with
//! [`Error::PatternMismatch`] rather than silently rewiring something else;
//! the whole point of these functions is to exercise the direction of an
//! inequality, and a transform applied to the wrong pattern would void the
//! test. All surgeries preserve the vertex count: only edges move.

use crate::error::Error;
use crate::graph::{bits, Graph};
use std::collections::BTreeSet;

/// The edges a transform removed and added, both sorted with u < v.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeMoves {
    pub removed: Vec<(usize, usize)>,
    pub added: Vec<(usize, usize)>,
}

impl std::fmt::Display for EdgeMoves {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "-{:?} +{:?}", self.removed, self.added)
    }
}

/// Result of a surgery: the rewired graph plus the edge diff against the
/// input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransformOutcome {
    pub result: Graph,
    pub moved: EdgeMoves,
}

fn outcome(before: &Graph, after: Graph) -> TransformOutcome {
    let old: BTreeSet<(usize, usize)> = before.edges().into_iter().collect();
    let new: BTreeSet<(usize, usize)> = after.edges().into_iter().collect();
    let moved = EdgeMoves {
        removed: old.difference(&new).copied().collect(),
        added: new.difference(&old).copied().collect(),
    };
    TransformOutcome { result: after, moved }
}

fn check_vertex(g: &Graph, v: usize) -> Result<(), Error> {
    if v < g.n() {
        Ok(())
    } else {
        Err(Error::InvalidVertex { v, n: g.n() })
    }
}

fn mismatch(msg: &str) -> Error {
    Error::PatternMismatch(msg.to_string())
}

/// Walks the chain that starts with the edge (from, first): keeps going
/// while the current vertex has degree exactly 2, stopping at the first
/// vertex of any other degree, at `stop_at`, or back at `from` if the chain
/// closes into a cycle. Returns the vertices visited after `from`, ending
/// with the stop vertex.
fn walk_chain(g: &Graph, from: usize, first: usize, stop_at: Option<usize>) -> Vec<usize> {
    let mut prev = from;
    let mut cur = first;
    let mut out = vec![cur];
    while cur != from && Some(cur) != stop_at && g.deg(cur) == 2 {
        let next = bits(g.adj_mask(cur))
            .find(|&x| x != prev)
            .expect("a degree-2 vertex has a second neighbor");
        prev = cur;
        cur = next;
        out.push(cur);
    }
    out
}

/// The pendent paths hanging at `root`: chains leaving `root` whose interior
/// vertices all have degree 2 and whose far end has degree 1. Each returned
/// chain lists the path vertices nearest-first, ending with the degree-1 tip.
fn pendent_paths(g: &Graph, root: usize) -> Vec<Vec<usize>> {
    bits(g.adj_mask(root))
        .map(|c| walk_chain(g, root, c, None))
        .filter(|ch| g.deg(*ch.last().unwrap()) == 1)
        .collect()
}

/// Rewires a graph made of two cycles joined by a nonempty path so that one
/// cycle opens up and splices into the other, leaving the path pendent.
///
/// The input must consist of a cycle through u1 (with cycle neighbors v1 and
/// v2), a cycle through us (with cycle neighbors w1 and w2), and a path from
/// u1 to us; u1 and us are the only vertices of degree 3, everything else
/// has degree 2. The surgery removes u1v2, usw1, usw2 and adds v2w2, u1w1.
/// Afterwards d(us) = 1 and every other degree is unchanged, and both
/// multiplicative Zagreb indices strictly decrease.
pub fn cycle_path_cycle_rewire(
    g: &Graph,
    u1: usize,
    v1: usize,
    v2: usize,
    us: usize,
    w1: usize,
    w2: usize,
) -> Result<TransformOutcome, Error> {
    let vs = [u1, v1, v2, us, w1, w2];
    for &v in &vs {
        check_vertex(g, v)?;
    }
    let distinct: BTreeSet<usize> = vs.iter().copied().collect();
    if distinct.len() != 6 {
        return Err(mismatch("the six pattern vertices must be distinct"));
    }
    if !g.is_connected() {
        return Err(mismatch("graph is not connected"));
    }
    for (a, b) in [(u1, v1), (u1, v2), (us, w1), (us, w2)] {
        if !g.has_edge(a, b) {
            return Err(mismatch("required cycle edge is missing"));
        }
    }
    if g.deg(u1) != 3 || g.deg(us) != 3 {
        return Err(mismatch("cycle attachment vertices must have degree 3"));
    }
    for x in 0..g.n() {
        if x != u1 && x != us && g.deg(x) != 2 {
            return Err(mismatch(
                "every vertex off the two attachments must have degree 2",
            ));
        }
    }
    // The third edge at each attachment must be the start of the connecting
    // path; in a two-cycles-plus-path graph those path edges are bridges,
    // while in a theta graph (the other graph with this degree sequence)
    // nothing is. This also rejects calls that pass a path neighbor as one
    // of the cycle neighbors.
    let bridges: BTreeSet<(usize, usize)> = g.bridges()?.into_iter().collect();
    let third = |at: usize, a: usize, b: usize| {
        bits(g.adj_mask(at)).find(|&x| x != a && x != b).unwrap()
    };
    let t1 = third(u1, v1, v2);
    let t2 = third(us, w1, w2);
    for (a, b) in [(u1, t1), (us, t2)] {
        if !bridges.contains(&(a.min(b), a.max(b))) {
            return Err(mismatch("the connecting path must leave the attachments over a bridge"));
        }
    }
    let mut h = g.clone();
    h.remove_edge_mut(u1, v2);
    h.remove_edge_mut(us, w1);
    h.remove_edge_mut(us, w2);
    h.add_edge_mut(v2, w2);
    h.add_edge_mut(u1, w1);
    Ok(outcome(g, h))
}

/// Slides one side of an internal path onto the other: given an internal
/// path from u to v (interior degrees 2, every edge a bridge) separating two
/// nontrivial parts, reattaches everything hanging at v directly onto u, so
/// the path becomes pendent with v as its degree-1 tip.
///
/// Afterwards d(u) = d_old(u) + d_old(v) - 1. Under this map the first
/// multiplicative Zagreb index does not increase and the second does not
/// decrease (equality can occur at degenerate end degrees, so the weak form
/// is the guaranteed one).
pub fn slide_path(g: &Graph, u: usize, v: usize) -> Result<TransformOutcome, Error> {
    check_vertex(g, u)?;
    check_vertex(g, v)?;
    if u == v {
        return Err(mismatch("path endpoints must differ"));
    }
    if !g.is_connected() {
        return Err(mismatch("graph is not connected"));
    }
    let chains: Vec<Vec<usize>> = bits(g.adj_mask(u))
        .map(|c| walk_chain(g, u, c, Some(v)))
        .filter(|ch| *ch.last().unwrap() == v)
        .collect();
    if chains.len() != 1 {
        return Err(mismatch("need exactly one interior-degree-2 path from u to v"));
    }
    let chain = &chains[0];
    let bridges: BTreeSet<(usize, usize)> = g.bridges()?.into_iter().collect();
    let mut prev = u;
    for &x in chain {
        if !bridges.contains(&(prev.min(x), prev.max(x))) {
            return Err(mismatch("every edge of the internal path must be a bridge"));
        }
        prev = x;
    }
    if g.deg(u) < 2 || g.deg(v) < 2 {
        return Err(mismatch("both path endpoints must carry a nontrivial part"));
    }
    let path_prev = if chain.len() >= 2 {
        chain[chain.len() - 2]
    } else {
        u
    };
    let mut h = g.clone();
    for z in bits(g.adj_mask(v)).filter(|&z| z != path_prev) {
        h.remove_edge_mut(v, z);
        h.add_edge_mut(u, z);
    }
    Ok(outcome(g, h))
}

/// Replaces the hanging tree at `root` with the same number of pendent
/// edges. The hanging tree is the union of the components of g - root that
/// are trees joined to root by exactly one edge; it must exist and must not
/// already be a star centered at root. Afterwards the first multiplicative
/// Zagreb index is strictly smaller and the second strictly larger, and the
/// number of cut edges is unchanged.
pub fn tree_to_star(g: &Graph, root: usize) -> Result<TransformOutcome, Error> {
    check_vertex(g, root)?;
    if !g.is_connected() {
        return Err(mismatch("graph is not connected"));
    }
    // Components of g - root, as bitmasks.
    let blocked = 1u64 << root;
    let mut seen = blocked;
    let mut comps: Vec<u64> = Vec::new();
    for start in 0..g.n() {
        if seen >> start & 1 == 1 {
            continue;
        }
        let mut comp = 1u64 << start;
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0u64;
            for v in bits(frontier) {
                next |= g.adj_mask(v);
            }
            next &= !comp & !blocked;
            comp |= next;
            frontier = next;
        }
        seen |= comp;
        comps.push(comp);
    }
    let mut hang = 0u64;
    let mut all_single = true;
    for &comp in &comps {
        let size = comp.count_ones() as usize;
        let root_links = (g.adj_mask(root) & comp).count_ones();
        let internal: u32 = bits(comp).map(|v| (g.adj_mask(v) & comp).count_ones()).sum();
        if root_links == 1 && internal as usize == 2 * (size - 1) {
            hang |= comp;
            all_single &= size == 1;
        }
    }
    if hang == 0 {
        return Err(mismatch("no hanging tree at root"));
    }
    if all_single {
        return Err(mismatch("hanging tree is already a star"));
    }
    let edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .filter(|&(a, b)| hang >> a & 1 == 0 && hang >> b & 1 == 0)
        .chain(bits(hang).map(|x| (root.min(x), root.max(x))))
        .collect();
    let h = Graph::new(g.n(), &edges)?;
    Ok(outcome(g, h))
}

/// Moves pendent paths between two carriers, both ways: the first outcome
/// re-roots all pendent paths of u at v, the second re-roots all pendent
/// paths of v at u. Both carriers must hold at least one pendent path, the
/// path systems must be disjoint and avoid the opposite carrier, and at
/// least 3 vertices must remain outside them.
///
/// For at least one of the two outcomes G*, Pi1(g) >= Pi1(G*) and
/// Pi2(g) <= Pi2(G*); which one depends on the degrees, so callers should
/// test the disjunction.
pub fn relocate_pendent_paths(
    g: &Graph,
    u: usize,
    v: usize,
) -> Result<(TransformOutcome, TransformOutcome), Error> {
    check_vertex(g, u)?;
    check_vertex(g, v)?;
    if u == v {
        return Err(mismatch("carriers must differ"));
    }
    if !g.is_connected() {
        return Err(mismatch("graph is not connected"));
    }
    let pu = pendent_paths(g, u);
    let pv = pendent_paths(g, v);
    if pu.is_empty() || pv.is_empty() {
        return Err(mismatch("both carriers need at least one pendent path"));
    }
    let mask = |paths: &[Vec<usize>]| {
        paths
            .iter()
            .flatten()
            .fold(0u64, |m, &x| m | 1 << x)
    };
    let mu = mask(&pu);
    let mv = mask(&pv);
    if mu >> v & 1 == 1 || mv >> u & 1 == 1 || mu & mv != 0 {
        return Err(mismatch("pendent path systems must be disjoint from each other and the carriers"));
    }
    let residual = g.n() - (mu | mv).count_ones() as usize;
    if residual < 3 {
        return Err(mismatch("fewer than 3 vertices would remain outside the pendent paths"));
    }
    let rehang = |from: usize, to: usize, paths: &[Vec<usize>]| {
        let mut h = g.clone();
        for p in paths {
            h.remove_edge_mut(from, p[0]);
            h.add_edge_mut(to, p[0]);
        }
        outcome(g, h)
    };
    Ok((rehang(u, v, &pu), rehang(v, u, &pv)))
}

/// Concatenates two pendent paths: detaches the pendent path that starts
/// with the edge v1v2 from its branch vertex v1 (which must have degree at
/// least 3) and appends it to `u_path_end`, the degree-1 tip of another
/// pendent path. Afterwards the first multiplicative Zagreb index is
/// strictly larger and the second strictly smaller.
pub fn merge_pendent_paths(
    g: &Graph,
    u_path_end: usize,
    v1: usize,
    v2: usize,
) -> Result<TransformOutcome, Error> {
    for x in [u_path_end, v1, v2] {
        check_vertex(g, x)?;
    }
    if u_path_end == v1 || u_path_end == v2 || v1 == v2 {
        return Err(mismatch("pattern vertices must be distinct"));
    }
    if !g.is_connected() {
        return Err(mismatch("graph is not connected"));
    }
    if g.deg(u_path_end) != 1 {
        return Err(mismatch("u_path_end must have degree 1"));
    }
    if !g.has_edge(v1, v2) {
        return Err(mismatch("v1v2 must be an edge"));
    }
    if g.deg(v1) < 3 {
        return Err(mismatch("the branch vertex must have degree at least 3"));
    }
    let chain2 = walk_chain(g, v1, v2, None);
    if g.deg(*chain2.last().unwrap()) != 1 {
        return Err(mismatch("v1v2 must start a pendent path"));
    }
    if chain2.contains(&u_path_end) {
        return Err(mismatch("the two pendent paths must be distinct"));
    }
    let nb = bits(g.adj_mask(u_path_end)).next().unwrap();
    let back = walk_chain(g, u_path_end, nb, None);
    if g.deg(*back.last().unwrap()) < 3 {
        return Err(mismatch("u_path_end must hang from a branch vertex"));
    }
    let mut h = g.clone();
    h.remove_edge_mut(v1, v2);
    h.add_edge_mut(u_path_end, v2);
    Ok(outcome(g, h))
}

/// Merges two complete endblocks into one. Each block must induce a clique
/// of size at least 3 whose members have no edges outside it except for a
/// single edge at one cut vertex (so the cut vertex of a size-s block has
/// degree exactly s). The surgery detaches block2's non-cut vertices from
/// its cut vertex and joins them completely to block1, producing one clique
/// of size n1 + n2 - 1; block2's cut vertex keeps only its outside edge.
/// The first multiplicative Zagreb index strictly increases.
pub fn merge_endblocks(
    g: &Graph,
    block1: &[usize],
    block2: &[usize],
) -> Result<TransformOutcome, Error> {
    for &x in block1.iter().chain(block2) {
        check_vertex(g, x)?;
    }
    let m1: u64 = block1.iter().fold(0, |m, &x| m | 1 << x);
    let m2: u64 = block2.iter().fold(0, |m, &x| m | 1 << x);
    if m1.count_ones() as usize != block1.len() || m2.count_ones() as usize != block2.len() {
        return Err(mismatch("blocks must not repeat vertices"));
    }
    if m1 & m2 != 0 {
        return Err(mismatch("blocks must be disjoint"));
    }
    if block1.len() < 3 || block2.len() < 3 {
        return Err(mismatch("blocks must have at least 3 vertices"));
    }
    if !g.is_connected() {
        return Err(mismatch("graph is not connected"));
    }
    let cut_of = |block: &[usize], bmask: u64| -> Result<usize, Error> {
        let mut cut = None;
        for &x in block {
            for &y in block {
                if x < y && !g.has_edge(x, y) {
                    return Err(mismatch("each block must induce a clique"));
                }
            }
            let outside = (g.adj_mask(x) & !bmask).count_ones();
            match outside {
                0 => {}
                1 if cut.is_none() => cut = Some(x),
                _ => return Err(mismatch("block must touch the rest in exactly one edge at one vertex")),
            }
        }
        cut.ok_or_else(|| mismatch("block must touch the rest in exactly one edge at one vertex"))
    };
    let _cut1 = cut_of(block1, m1)?;
    let cut2 = cut_of(block2, m2)?;
    let mut h = g.clone();
    for &x in block2 {
        if x != cut2 {
            h.remove_edge_mut(cut2, x);
            for &y in block1 {
                h.add_edge_mut(x, y);
            }
        }
    }
    Ok(outcome(g, h))
}
