//! Isomorph-free enumeration of connected graphs on up to 8 vertices, and
//! the partition of that universe by number of cut edges.
//!
//! Generation works by vertex augmentation: every connected graph on n
//! vertices arises from a connected graph on n - 1 vertices by adding one
//! vertex joined to a nonempty set of old vertices (delete any non-cut
//! vertex to see why), so extending each canonical (n-1)-vertex graph by
//! every nonempty neighbor subset and deduplicating canonical forms covers
//! the level exactly once. Memory stays proportional to the number of
//! canonical graphs per level rather than the labeled search space.

use crate::canon::{canonical_form, CanonicalForm};
use crate::construct::ClassSpec;
use crate::error::Error;
use crate::graph::Graph;
use rayon::prelude::*;

/// Self-generation is capped here; larger universes can still be ingested
/// from graph6 files via [`GraphStream::from_graphs`].
pub const MAX_ENUM_N: usize = 8;

/// A deduplicated, canonically ordered set of connected graphs: no two
/// members are isomorphic, and iteration order is the canonical-form byte
/// order, so it is identical across runs and worker counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphStream {
    forms: Vec<CanonicalForm>,
}

impl GraphStream {
    /// Builds a stream from arbitrary graphs: disconnected inputs are
    /// dropped, the rest are canonicalized, deduplicated, and sorted.
    pub fn from_graphs<I>(graphs: I) -> Result<GraphStream, Error>
    where
        I: IntoIterator<Item = Graph>,
    {
        let mut forms = Vec::new();
        for g in graphs {
            if g.is_connected() {
                forms.push(canonical_form(&g)?);
            }
        }
        forms.sort_unstable();
        forms.dedup();
        Ok(GraphStream { forms })
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    pub fn forms(&self) -> &[CanonicalForm] {
        &self.forms
    }

    /// The graphs in stream order, materialized from their canonical forms.
    pub fn iter(&self) -> impl Iterator<Item = Graph> + '_ {
        self.forms.iter().map(CanonicalForm::to_graph)
    }

    /// Membership up to isomorphism.
    pub fn contains(&self, g: &Graph) -> Result<bool, Error> {
        Ok(self.forms.binary_search(&canonical_form(g)?).is_ok())
    }

    /// The subsequence of members with exactly k cut edges.
    pub fn restrict_bridges(&self, k: usize) -> Result<GraphStream, Error> {
        let mut forms = Vec::new();
        for (form, g) in self.forms.iter().zip(self.iter()) {
            if g.bridges()?.len() == k {
                forms.push(form.clone());
            }
        }
        Ok(GraphStream { forms })
    }
}

impl<'a> IntoIterator for &'a GraphStream {
    type Item = Graph;
    type IntoIter = Box<dyn Iterator<Item = Graph> + 'a>;

    fn into_iter(self) -> Self::IntoIter {
        Box::new(self.iter())
    }
}

/// Every connected graph on n vertices, exactly once up to isomorphism.
pub fn enumerate_connected(n: usize) -> Result<GraphStream, Error> {
    if n < 1 {
        return Err(Error::TooSmall { what: "enumeration", min: 1, got: n });
    }
    if n > MAX_ENUM_N {
        return Err(Error::TooLarge { what: "enumeration", max: MAX_ENUM_N, got: n });
    }
    let k1 = Graph::new(1, &[]).expect("one vertex, no edges");
    let mut frontier = vec![canonical_form(&k1).expect("trivial graph")];
    for level in 2..=n {
        let mut next: Vec<CanonicalForm> = frontier
            .par_iter()
            .flat_map_iter(|form| {
                let g = form.to_graph();
                (1u64..1 << (level - 1)).map(move |mask| {
                    canonical_form(&g.with_vertex(mask))
                        .expect("augmented graph stays within the canonical-form bound")
                })
            })
            .collect();
        next.sort_unstable();
        next.dedup();
        frontier = next;
    }
    Ok(GraphStream { forms: frontier })
}

/// The connected graphs on spec.n() vertices with exactly spec.k() cut
/// edges, in canonical order.
pub fn enumerate_class(spec: ClassSpec) -> Result<GraphStream, Error> {
    enumerate_connected(spec.n())?.restrict_bridges(spec.k())
}

/// Cardinality of the class alone.
pub fn count_class(spec: ClassSpec) -> Result<usize, Error> {
    Ok(enumerate_class(spec)?.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{c_n_p, c_n_s, k_n_p, k_n_s, path, star};
    use crate::g6::{decode_g6, encode_g6};

    #[test]
    fn connected_counts_match_published_sequence() {
        let want = [1usize, 1, 2, 6, 21, 112, 853];
        for (i, &w) in want.iter().enumerate() {
            assert_eq!(enumerate_connected(i + 1).unwrap().len(), w, "n = {}", i + 1);
        }
    }

    #[test]
    fn stream_is_sorted_and_connected() {
        let s = enumerate_connected(5).unwrap();
        assert!(s.forms().windows(2).all(|w| w[0] < w[1]));
        for g in &s {
            assert_eq!(g.n(), 5);
            assert!(g.is_connected());
        }
    }

    #[test]
    fn class_counts_small() {
        let cases = [
            ((4, 1), 1),
            ((5, 1), 4),
            ((5, 2), 3),
            ((6, 1), 25),
            ((6, 2), 14),
            ((6, 3), 7),
        ];
        for ((n, k), want) in cases {
            let spec = ClassSpec::new(n, k).unwrap();
            assert_eq!(count_class(spec).unwrap(), want, "{spec}");
        }
    }

    #[test]
    fn class_contains_all_four_families() {
        let spec = ClassSpec::new(5, 2).unwrap();
        let s = enumerate_class(spec).unwrap();
        for g in [c_n_s(spec), c_n_p(spec), k_n_s(spec), k_n_p(spec)] {
            assert!(s.contains(&g).unwrap());
        }
    }

    #[test]
    fn bridge_classes_partition_the_universe() {
        let n = 6;
        let all = enumerate_connected(n).unwrap();
        let total: usize = (0..n)
            .map(|k| all.restrict_bridges(k).unwrap().len())
            .sum();
        assert_eq!(total, all.len());
        // Trees are exactly the (n-1)-bridge members.
        let trees = all.restrict_bridges(n - 1).unwrap();
        assert_eq!(trees.len(), 6);
        assert!(trees.contains(&path(n).unwrap()).unwrap());
        assert!(trees.contains(&star(n).unwrap()).unwrap());
    }

    #[test]
    fn cyclic_graphs_have_at_most_n_minus_3_bridges() {
        for n in 4..=7 {
            for g in &enumerate_connected(n).unwrap() {
                if g.cyclomatic_number().unwrap() >= 1 {
                    assert!(g.bridges().unwrap().len() <= n - 3);
                }
            }
        }
    }

    #[test]
    fn ingestion_matches_self_generation() {
        let s = enumerate_connected(6).unwrap();
        let lines: Vec<String> = s.iter().map(|g| encode_g6(&g).unwrap()).collect();
        let back =
            GraphStream::from_graphs(lines.iter().map(|l| decode_g6(l).unwrap())).unwrap();
        assert_eq!(s, back);
    }

    #[test]
    fn ingestion_drops_disconnected_and_duplicates() {
        let two_isolated = Graph::new(2, &[]).unwrap();
        let p4a = path(4).unwrap();
        let p4b = Graph::new(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        let s = GraphStream::from_graphs(vec![two_isolated, p4a.clone(), p4b]).unwrap();
        assert_eq!(s.len(), 1);
        assert!(s.contains(&p4a).unwrap());
    }

    #[test]
    fn bounds_are_enforced() {
        assert!(matches!(
            enumerate_connected(9),
            Err(Error::TooLarge { .. })
        ));
        assert!(matches!(
            enumerate_connected(0),
            Err(Error::TooSmall { .. })
        ));
    }
}
