use std::collections::VecDeque;

use super::LabeledGraph;
use crate::error::{Error, Result};
use crate::letter::{LetterOrder, Sym, Word};

/// Shortlex-least paths from one source to every vertex.
///
/// Vertices are settled one BFS layer at a time. Two paths of equal length
/// compare first on their prefixes, so the least path to `v` extends the
/// least path to one of its parents; ranking each layer by its least label
/// makes the choice a comparison of (parent rank, letter rank).
#[derive(Clone, Debug)]
pub struct SlexTree {
    source: usize,
    dist: Vec<usize>,
    parent: Vec<Option<(usize, Sym)>>,
}

impl SlexTree {
    pub fn new(graph: &LabeledGraph, source: usize, order: &LetterOrder) -> Self {
        let n = graph.vertex_count();
        let mut dist = vec![usize::MAX; n];
        let mut parent: Vec<Option<(usize, Sym)>> = vec![None; n];
        let mut rank = vec![u32::MAX; n];
        dist[source] = 0;
        rank[source] = 0;
        let mut slot = vec![usize::MAX; n];
        let mut layer = vec![source];
        let mut d = 0;
        while !layer.is_empty() {
            let mut next = Vec::new();
            // (parent rank, letter rank) of the best path found so far
            let mut key: Vec<(u32, u32)> = Vec::new();
            for &u in &layer {
                for &(v, s) in graph.neighbors(u) {
                    if dist[v] < d + 1 {
                        continue;
                    }
                    let cand = (rank[u], order.rank(s));
                    if dist[v] == usize::MAX {
                        dist[v] = d + 1;
                        slot[v] = next.len();
                        next.push(v);
                        key.push(cand);
                        parent[v] = Some((u, s));
                    } else {
                        let k = slot[v];
                        if cand < key[k] {
                            key[k] = cand;
                            parent[v] = Some((u, s));
                        }
                    }
                }
            }
            let mut sorted: Vec<usize> = (0..next.len()).collect();
            sorted.sort_by_key(|&k| key[k]);
            let mut r = 0;
            for (pos, &k) in sorted.iter().enumerate() {
                if pos > 0 && key[k] != key[sorted[pos - 1]] {
                    r += 1;
                }
                rank[next[k]] = r;
            }
            layer = next;
            d += 1;
        }
        SlexTree { source, dist, parent }
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn distance(&self, v: usize) -> Option<usize> {
        (self.dist[v] != usize::MAX).then_some(self.dist[v])
    }

    /// Label of the shortlex-least path from the source to `v`.
    pub fn word(&self, v: usize) -> Result<Vec<Sym>> {
        if self.dist[v] == usize::MAX {
            return Err(Error::Unreachable { from: self.source, to: v });
        }
        let mut out = Vec::with_capacity(self.dist[v]);
        let mut x = v;
        while let Some((p, s)) = self.parent[x] {
            out.push(s);
            x = p;
        }
        out.reverse();
        Ok(out)
    }

    /// Vertex sequence of the shortlex-least path from the source to `v`.
    pub fn path(&self, v: usize) -> Result<Vec<usize>> {
        if self.dist[v] == usize::MAX {
            return Err(Error::Unreachable { from: self.source, to: v });
        }
        let mut out = VecDeque::from([v]);
        let mut x = v;
        while let Some((p, _)) = self.parent[x] {
            out.push_front(p);
            x = p;
        }
        Ok(out.into())
    }
}

/// Label of the shortlex-least path from `u` to `v`.
pub fn slex_geodesic(graph: &LabeledGraph, u: usize, v: usize, order: &LetterOrder) -> Result<Word> {
    let tree = SlexTree::new(graph, u, order);
    Ok(graph.alphabet().decode(&tree.word(v)?))
}
