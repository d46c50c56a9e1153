use serde::Serialize;

use super::LabeledGraph;
use crate::caps::Caps;
use crate::error::{Error, Result};

/// An embedded circuit as a cyclic vertex sequence (first vertex not
/// repeated at the end), in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Circuit(pub Vec<usize>);

impl Circuit {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    /// Vertex at position `k`, read cyclically.
    pub fn at(&self, k: usize) -> usize {
        self.0[k % self.0.len()]
    }
}

/// Least vertex sequence over all rotations and both directions.
pub fn canonical_circuit(cycle: &[usize]) -> Circuit {
    let len = cycle.len();
    let mut best: Option<Vec<usize>> = None;
    let mut reversed: Vec<usize> = cycle.to_vec();
    reversed.reverse();
    for seq in [cycle, &reversed[..]] {
        for r in 0..len {
            let cand: Vec<usize> = (0..len).map(|k| seq[(r + k) % len]).collect();
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    Circuit(best.unwrap_or_default())
}

/// Every embedded circuit of `graph`, once per rotation/reversal class, in
/// canonical form and sorted.
///
/// Each circuit is found from its least vertex `s` by a depth-first search
/// through vertices greater than `s`; of its two directions only the one
/// whose second vertex is smaller than its last is kept.
pub fn enumerate_embedded_circuits(graph: &LabeledGraph, caps: &Caps) -> Result<Vec<Circuit>> {
    let n = graph.vertex_count();
    if n > caps.circuit_vertices {
        return Err(Error::CircuitCapExceeded(format!(
            "graph has {n} vertices, cap is {}",
            caps.circuit_vertices
        )));
    }
    let mut out = Vec::new();
    let mut on_path = vec![false; n];
    for s in 0..n {
        let mut path = vec![s];
        on_path[s] = true;
        // stack of next-neighbour cursors, parallel to `path`
        let mut cursor = vec![0usize];
        while let Some(&u) = path.last() {
            let top = cursor.len() - 1;
            let nbrs = graph.neighbors(u);
            if cursor[top] >= nbrs.len() {
                on_path[u] = false;
                path.pop();
                cursor.pop();
                continue;
            }
            let v = nbrs[cursor[top]].0;
            cursor[top] += 1;
            if v == s && path.len() >= 3 && path[1] < path[path.len() - 1] {
                out.push(Circuit(path.clone()));
                if out.len() > caps.max_circuits {
                    return Err(Error::CircuitCapExceeded(format!("more than {} circuits", caps.max_circuits)));
                }
            } else if v > s && !on_path[v] {
                on_path[v] = true;
                path.push(v);
                cursor.push(0);
            }
        }
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cayley_graph, fixtures};
    use crate::group::{check_genset, FiniteGroup, GenSet};
    use crate::letter::{Alphabet, Letter};
    use std::collections::BTreeSet;

    /// Reference: every vertex sequence without repeats that closes up,
    /// canonicalised and collected into a set.
    fn brute(g: &LabeledGraph) -> BTreeSet<Circuit> {
        let n = g.vertex_count();
        let mut out = BTreeSet::new();
        fn extend(g: &LabeledGraph, path: &mut Vec<usize>, out: &mut BTreeSet<Circuit>) {
            let u = *path.last().unwrap();
            for &(v, _) in g.neighbors(u) {
                if v == path[0] && path.len() >= 3 {
                    out.insert(canonical_circuit(path));
                } else if !path.contains(&v) {
                    path.push(v);
                    extend(g, path, out);
                    path.pop();
                }
            }
        }
        for s in 0..n {
            extend(g, &mut vec![s], &mut out);
        }
        out
    }

    #[test]
    fn complete_graph_on_four_vertices() {
        let c4 = FiniteGroup::cyclic(4);
        let k4 = cayley_graph(&c4, &GenSet::all_nonidentity(&c4));
        let circuits = enumerate_embedded_circuits(&k4, &Caps::default()).unwrap();
        assert_eq!(circuits.len(), 7);
        assert_eq!(circuits.iter().filter(|c| c.len() == 3).count(), 4);
        assert_eq!(circuits.iter().filter(|c| c.len() == 4).count(), 3);
    }

    #[test]
    fn cycle_and_tree() {
        let c5 = FiniteGroup::cyclic(5);
        let pentagon = cayley_graph(&c5, &check_genset(&c5, &[1, 4]).unwrap());
        assert_eq!(enumerate_embedded_circuits(&pentagon, &Caps::default()).unwrap(), vec![Circuit(vec![0, 1, 2, 3, 4])]);

        let ab = Alphabet::new([Letter::a(1, 1)], |l| Some(*l)).unwrap();
        let star = LabeledGraph::from_edges(4, ab, &[(0, 1, Letter::a(1, 1)), (0, 2, Letter::a(1, 1)), (0, 3, Letter::a(1, 1))])
            .unwrap();
        assert!(enumerate_embedded_circuits(&star, &Caps::default()).unwrap().is_empty());
    }

    #[test]
    fn agrees_with_brute_force() {
        for (g, s) in fixtures::gensets() {
            let gamma = cayley_graph(&g, &s);
            let fast: BTreeSet<Circuit> = enumerate_embedded_circuits(&gamma, &Caps::default()).unwrap().into_iter().collect();
            assert_eq!(fast, brute(&gamma), "{}", g.name());
        }
    }

    #[test]
    fn canonical_form() {
        assert_eq!(canonical_circuit(&[3, 1, 2]), Circuit(vec![1, 2, 3]));
        assert_eq!(canonical_circuit(&[3, 2, 1]), Circuit(vec![1, 2, 3]));
        assert_eq!(canonical_circuit(&[2, 0, 3, 1]), Circuit(vec![0, 2, 1, 3]));
    }

    #[test]
    fn caps_are_enforced() {
        let s3 = FiniteGroup::symmetric3();
        let k6 = cayley_graph(&s3, &GenSet::all_nonidentity(&s3));
        let small = Caps { circuit_vertices: 5, ..Caps::default() };
        assert!(matches!(enumerate_embedded_circuits(&k6, &small), Err(Error::CircuitCapExceeded(_))));
        let few = Caps { max_circuits: 10, ..Caps::default() };
        assert!(matches!(enumerate_embedded_circuits(&k6, &few), Err(Error::CircuitCapExceeded(_))));
        // K6: sum over k of C(6,k)(k-1)!/2
        assert_eq!(enumerate_embedded_circuits(&k6, &Caps::default()).unwrap().len(), 20 + 45 + 72 + 60);
    }
}
