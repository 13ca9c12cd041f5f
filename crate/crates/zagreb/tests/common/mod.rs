//! Independent oracles shared by the integration tests: a labeled
//! brute-force enumerator and a delete-and-test bridge finder. Both are
//! deliberately naive so they share no code with the fast paths they check.

use zagreb::Graph;

/// All possible edges on n labeled vertices, in a fixed order.
pub fn edge_slots(n: usize) -> Vec<(usize, usize)> {
    let mut slots = Vec::new();
    for v in 1..n {
        for u in 0..v {
            slots.push((u, v));
        }
    }
    slots
}

/// Every labeled graph on n vertices (one per subset of edge slots),
/// connected ones only. Exponential in n choose 2; fine for n <= 6.
pub fn labeled_connected(n: usize) -> Vec<Graph> {
    let slots = edge_slots(n);
    let mut out = Vec::new();
    for mask in 0u32..1 << slots.len() {
        let edges: Vec<(usize, usize)> = slots
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::new(n, &edges).expect("slot edges are valid");
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

/// Bridge finding by definition: an edge is a bridge exactly when deleting
/// it disconnects the graph. Returns edges sorted.
pub fn bridge_oracle(g: &Graph) -> Vec<(usize, usize)> {
    let mut found = Vec::new();
    for (u, v) in g.edges() {
        let rest: Vec<(usize, usize)> = g
            .edges()
            .into_iter()
            .filter(|&e| e != (u, v))
            .collect();
        let deleted = Graph::new(g.n(), &rest).expect("subset of existing edges");
        if !deleted.is_connected() {
            found.push((u, v));
        }
    }
    found.sort_unstable();
    found
}
