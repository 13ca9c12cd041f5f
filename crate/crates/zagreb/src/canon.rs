//! Canonical labelling for small graphs.
//!
//! The canonical form is the lexicographically smallest upper-triangle
//! adjacency bit string over all relabelings consistent with an invariant
//! vertex partition. Pairs are ordered column-major (x(0,1), x(0,2), x(1,2),
//! x(0,3), ...) so that placing one more vertex determines the next contiguous
//! chunk of the string and the backtracking search can prune on prefixes.
//! Equal canonical forms decide isomorphism exactly.

use crate::error::Error;
use crate::graph::Graph;

/// Cost guard for canonical labelling.
pub const MAX_CANON_N: usize = 12;

/// Labelling-invariant certificate: byte 0 is the vertex count, the rest is
/// the minimized bit string packed big-endian, 8 bits per byte.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalForm {
    bytes: Vec<u8>,
}

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn n(&self) -> usize {
        self.bytes[0] as usize
    }

    /// The canonically labelled graph this form encodes.
    pub fn to_graph(&self) -> Graph {
        let n = self.n();
        let mut edges = Vec::new();
        let mut idx = 0usize;
        for j in 1..n {
            for i in 0..j {
                let bit = self.bytes[1 + idx / 8] >> (7 - idx % 8) & 1;
                if bit == 1 {
                    edges.push((i, j));
                }
                idx += 1;
            }
        }
        Graph::new(n, &edges).expect("canonical form encodes a valid graph")
    }
}

/// Compute the canonical form of `g`. Deterministic; invariant under
/// relabeling. Guarded to n <= 12 because the search is exponential in the
/// worst case.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, Error> {
    let n = g.n();
    if n > MAX_CANON_N {
        return Err(Error::TooLarge {
            what: "canonical_form",
            max: MAX_CANON_N,
            got: n,
        });
    }
    let color = refine(g);
    let ncells = color.iter().copied().max().map_or(0, |c| c + 1);
    let mut cells: Vec<Vec<usize>> = vec![Vec::new(); ncells];
    for v in 0..n {
        cells[color[v]].push(v);
    }
    // positions are assigned cell by cell, in cell-color order
    let mut cell_at = Vec::with_capacity(n);
    for (c, cell) in cells.iter().enumerate() {
        cell_at.extend(std::iter::repeat(c).take(cell.len()));
    }
    let mut search = Search {
        g,
        n,
        cells,
        cell_at,
        perm: Vec::with_capacity(n),
        used: 0,
        cur: Vec::with_capacity(n.saturating_sub(1) * n / 2),
        best: None,
    };
    search.go();
    let best = search.best.unwrap_or_default();
    let mut bytes = vec![n as u8];
    bytes.resize(1 + (best.len() + 7) / 8, 0);
    for (k, &b) in best.iter().enumerate() {
        bytes[1 + k / 8] |= b << (7 - k % 8);
    }
    Ok(CanonicalForm { bytes })
}

/// True iff `g` and `h` are isomorphic. Decided by canonical form equality.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool, Error> {
    if g.n() != h.n() || g.m() != h.m() || g.degree_sequence() != h.degree_sequence() {
        // still enforce the size guard before answering
        for x in [g, h] {
            if x.n() > MAX_CANON_N {
                return Err(Error::TooLarge {
                    what: "is_isomorphic",
                    max: MAX_CANON_N,
                    got: x.n(),
                });
            }
        }
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

/// Iterated degree refinement: color by degree, then repeatedly by
/// (color, sorted multiset of neighbor colors) until stable. Colors are dense
/// ranks of the sorted key list, so they are invariant under relabeling.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let degs = g.degrees();
    let mut uniq: Vec<usize> = degs.clone();
    uniq.sort_unstable();
    uniq.dedup();
    let mut color: Vec<usize> = degs
        .iter()
        .map(|d| uniq.binary_search(d).unwrap())
        .collect();
    loop {
        let keys: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nc: Vec<usize> = g.neighbors(v).map(|u| color[u]).collect();
                nc.sort_unstable();
                (color[v], nc)
            })
            .collect();
        let mut uniq = keys.clone();
        uniq.sort();
        uniq.dedup();
        let next: Vec<usize> = keys
            .iter()
            .map(|k| uniq.binary_search(k).unwrap())
            .collect();
        if next == color {
            return color;
        }
        color = next;
    }
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    cells: Vec<Vec<usize>>,
    cell_at: Vec<usize>,
    perm: Vec<usize>,
    used: u64,
    cur: Vec<u8>,
    best: Option<Vec<u8>>,
}

impl Search<'_> {
    fn go(&mut self) {
        let p = self.perm.len();
        if p == self.n {
            if self.best.as_ref().map_or(true, |b| self.cur < *b) {
                self.best = Some(self.cur.clone());
            }
            return;
        }
        // Twin skipping: swapping two vertices with equal open (false twins)
        // or equal closed (true twins) neighborhoods is an automorphism, so
        // completions through the second candidate repeat strings already
        // produced through the first. This collapses cliques and pendant
        // bundles from factorial to linear.
        let mut tried_open: Vec<u64> = Vec::new();
        let mut tried_closed: Vec<u64> = Vec::new();
        let cell_idx = self.cell_at[p];
        for ci in 0..self.cells[cell_idx].len() {
            let v = self.cells[cell_idx][ci];
            if self.used >> v & 1 == 1 {
                continue;
            }
            let open = self.g.adj_mask(v);
            let closed = open | 1 << v;
            if tried_open.contains(&open) || tried_closed.contains(&closed) {
                continue;
            }
            tried_open.push(open);
            tried_closed.push(closed);
            let len0 = self.cur.len();
            for i in 0..p {
                self.cur.push(self.g.has_edge(self.perm[i], v) as u8);
            }
            let viable = match &self.best {
                None => true,
                Some(b) => self.cur.as_slice() <= &b[..self.cur.len()],
            };
            if viable {
                self.perm.push(v);
                self.used |= 1 << v;
                self.go();
                self.used &= !(1 << v);
                self.perm.pop();
            }
            self.cur.truncate(len0);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{complete, cycle, path, star};
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn relabel(g: &Graph, perm: &[usize]) -> Graph {
        let edges: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .map(|&(u, v)| (perm[u], perm[v]))
            .collect();
        Graph::new(g.n(), &edges).unwrap()
    }

    #[test]
    fn relabeled_cycle_has_same_form() {
        let c4 = cycle(4).unwrap();
        let other = Graph::new(4, &[(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(
            canonical_form(&c4).unwrap(),
            canonical_form(&other).unwrap()
        );
    }

    #[test]
    fn different_graphs_different_forms() {
        let p4 = path(4).unwrap();
        let s4 = star(4).unwrap();
        assert_ne!(canonical_form(&p4).unwrap(), canonical_form(&s4).unwrap());
    }

    #[test]
    fn all_four_vertex_graphs_distinct() {
        // brute force over all 2^6 labeled graphs on 4 vertices
        let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let mut forms = std::collections::HashSet::new();
        for mask in 0u32..64 {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::new(4, &edges).unwrap();
            forms.insert(canonical_form(&g).unwrap());
        }
        assert_eq!(forms.len(), 11);
    }

    #[test]
    fn invariant_under_random_relabeling() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let subjects = vec![
            cycle(6).unwrap(),
            complete(5).unwrap(),
            star(7).unwrap(),
            Graph::new(7, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 3)])
                .unwrap(),
        ];
        for g in subjects {
            let form = canonical_form(&g).unwrap();
            let mut perm: Vec<usize> = (0..g.n()).collect();
            for _ in 0..100 {
                perm.shuffle(&mut rng);
                assert_eq!(canonical_form(&relabel(&g, &perm)).unwrap(), form);
            }
        }
    }

    #[test]
    fn round_trip_through_to_graph() {
        let g = Graph::new(6, &[(0, 3), (3, 1), (1, 4), (4, 2), (2, 5), (5, 0), (0, 4)]).unwrap();
        let form = canonical_form(&g).unwrap();
        let h = form.to_graph();
        assert_eq!(canonical_form(&h).unwrap(), form);
        assert_eq!(h.m(), g.m());
    }

    #[test]
    fn isomorphism_checks() {
        let c5 = cycle(5).unwrap();
        let c5r = relabel(&c5, &[3, 1, 4, 0, 2]);
        assert!(is_isomorphic(&c5, &c5r).unwrap());
        assert!(!is_isomorphic(&path(4).unwrap(), &star(4).unwrap()).unwrap());
        let big = complete(13).unwrap();
        assert!(matches!(
            canonical_form(&big),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn dense_symmetric_graphs_are_fast() {
        // the twin rule must collapse these; they would otherwise cost 12!
        for g in [complete(12).unwrap(), star(12).unwrap()] {
            canonical_form(&g).unwrap();
        }
    }
}
