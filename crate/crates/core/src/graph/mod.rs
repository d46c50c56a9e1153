//! Labelled graphs: Cayley graphs, geodesics, circuits and subdivision.

mod cayley;
mod circuits;
mod iso;
mod slex;
mod subdivision;

pub use cayley::{base_letter, base_partition, cayley_graph};
pub use circuits::{canonical_circuit, enumerate_embedded_circuits, Circuit};
pub use iso::{check_label_isomorphism, label_isomorphism};
pub use slex::{slex_geodesic, SlexTree};
pub(crate) use subdivision::subdivided_alphabet;
pub use subdivision::{
    lift_circuits, step_letter, subdivide, LetterPartition, Role, SubdividedEdge, SubdivisionMap, VertexImage,
};

use std::collections::{BTreeMap, VecDeque};
use std::fmt::{self, Write as _};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::letter::{Alphabet, Letter, Sym, Word};

/// A simple undirected graph whose directed edges carry letters, with
/// L(v, u) the inverse of L(u, v).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    alphabet: Alphabet,
    /// Out-edges of each vertex as (neighbour, label), sorted by neighbour.
    adj: Vec<Vec<(usize, Sym)>>,
    edge_count: usize,
}

impl LabeledGraph {
    /// Builds a graph from undirected edges given as (u, v, L(u, v)); the
    /// reverse label is the alphabet inverse of L(u, v).
    pub fn from_edges(vertex_count: usize, alphabet: Alphabet, edges: &[(usize, usize, Letter)]) -> Result<Self> {
        let mut directed = Vec::with_capacity(edges.len() * 2);
        for &(u, v, l) in edges {
            let back = alphabet.inverse_letter(&l).ok_or(if alphabet.contains(&l) {
                Error::MissingInverse(l)
            } else {
                Error::UnknownLetter(l)
            })?;
            directed.push((u, v, l));
            directed.push((v, u, back));
        }
        Self::from_directed(vertex_count, alphabet, &directed)
    }

    /// Builds a graph from both directions of every edge and validates the
    /// labelling.
    pub fn from_directed(vertex_count: usize, alphabet: Alphabet, labels: &[(usize, usize, Letter)]) -> Result<Self> {
        let mut adj: Vec<Vec<(usize, Sym)>> = vec![Vec::new(); vertex_count];
        for &(u, v, l) in labels {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::InvalidGraph(format!("edge {u}->{v} leaves the vertex range")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at {u}")));
            }
            let s = alphabet.sym(&l).ok_or(Error::UnknownLetter(l))?;
            adj[u].push((v, s));
        }
        for (u, out) in adj.iter_mut().enumerate() {
            out.sort_unstable();
            if let Some(w) = out.windows(2).find(|w| w[0].0 == w[1].0) {
                return Err(Error::InvalidGraph(format!("multiple edges {u}->{}", w[0].0)));
            }
        }
        let mut edge_count = 0;
        for (u, out) in adj.iter().enumerate() {
            for &(v, s) in out {
                let Some(back) = find(&adj[v], u) else {
                    return Err(Error::InvalidGraph(format!("edge {u}->{v} has no reverse")));
                };
                if alphabet.inverse(s) != Some(back) {
                    return Err(Error::InvalidGraph(format!(
                        "labels {} on {u}->{v} and {} on {v}->{u} are not inverse",
                        alphabet.letter(s),
                        alphabet.letter(back)
                    )));
                }
                if u < v {
                    edge_count += 1;
                }
            }
        }
        Ok(LabeledGraph { alphabet, adj, edge_count })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    /// Out-edges of `u` as (neighbour, label).
    pub fn neighbors(&self, u: usize) -> &[(usize, Sym)] {
        &self.adj[u]
    }

    /// Undirected edges as (u, v) with u < v, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for (u, nbrs) in self.adj.iter().enumerate() {
            out.extend(nbrs.iter().filter(|(v, _)| u < *v).map(|&(v, _)| (u, v)));
        }
        out
    }

    /// L(u, v), if {u, v} is an edge.
    pub fn label(&self, u: usize, v: usize) -> Option<Sym> {
        find(&self.adj[u], v)
    }

    pub fn label_letter(&self, u: usize, v: usize) -> Option<Letter> {
        self.label(u, v).map(|s| self.alphabet.letter(s))
    }

    /// The neighbour of `u` along an edge labelled `s`, when there is exactly one.
    pub fn step(&self, u: usize, s: Sym) -> Option<usize> {
        let mut hits = self.adj[u].iter().filter(|(_, t)| *t == s);
        let first = hits.next()?.0;
        hits.next().is_none().then_some(first)
    }

    /// End vertex of the path from `start` reading `word`, if it exists and
    /// is unambiguous.
    pub fn walk(&self, start: usize, word: &[Sym]) -> Option<usize> {
        word.iter().try_fold(start, |u, &s| self.step(u, s))
    }

    pub fn walk_word(&self, start: usize, word: &Word) -> Option<usize> {
        let syms = self.alphabet.encode(word).ok()?;
        self.walk(start, &syms)
    }

    /// Label of a vertex path, if consecutive vertices are adjacent.
    pub fn path_label(&self, path: &[usize]) -> Option<Vec<Sym>> {
        path.windows(2).map(|w| self.label(w[0], w[1])).collect()
    }

    /// Breadth-first distances from `src`; `usize::MAX` marks unreachable.
    pub fn distances(&self, src: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.vertex_count()];
        dist[src] = 0;
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            for &(v, _) in &self.adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Sphere sizes around `base` for radii 0..=radius.
    pub fn ball_sizes(&self, base: usize, radius: usize) -> Vec<usize> {
        let mut spheres = vec![0; radius + 1];
        for d in self.distances(base) {
            if d <= radius {
                spheres[d] += 1;
            }
        }
        spheres
    }

    /// Decides whether every pair of vertices is joined by a unique shortest
    /// path. A non-geodetic graph yields the first offending pair in
    /// (source, BFS order) together with two of its geodesics.
    pub fn is_geodetic(&self) -> Result<Geodeticity> {
        let n = self.vertex_count();
        if n == 0 {
            return Ok(Geodeticity::Geodetic);
        }
        if let Some(v) = self.distances(0).iter().position(|&d| d == usize::MAX) {
            return Err(Error::Disconnected(v));
        }
        let witness = (0..n).into_par_iter().find_map_first(|src| geodesic_conflict(&self.adj, src));
        Ok(match witness {
            Some(w) => Geodeticity::NotGeodetic(w),
            None => Geodeticity::Geodetic,
        })
    }

    /// JSON-friendly dump with vertices, undirected edges and directed labels.
    pub fn dump(&self) -> GraphDump {
        let mut labels = BTreeMap::new();
        for (u, nbrs) in self.adj.iter().enumerate() {
            for &(v, s) in nbrs {
                labels.insert(format!("{u}->{v}"), self.alphabet.letter(s).to_string());
            }
        }
        GraphDump {
            vertices: (0..self.vertex_count()).collect(),
            edges: self.edges().into_iter().map(|(u, v)| [u, v]).collect(),
            labels,
        }
    }

    /// Graphviz text with one undirected edge per graph edge, labelled
    /// `L(u,v)/L(v,u)` from the smaller endpoint.
    pub fn export_dot(&self, opts: &DotOptions) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph {} {{", dot_id(&opts.name));
        for u in 0..self.vertex_count() {
            match opts.vertex_names.as_ref().and_then(|names| names.get(u)) {
                Some(name) => {
                    let _ = writeln!(out, "  {u} [label={}];", dot_id(name));
                }
                None if opts.hide_interior && opts.old_vertices.is_some_and(|k| u >= k) => {
                    let _ = writeln!(out, "  {u} [label=\"\", shape=point];");
                }
                None => {
                    let _ = writeln!(out, "  {u};");
                }
            }
        }
        for (u, v) in self.edges() {
            let there = self.label_letter(u, v).unwrap();
            let back = self.label_letter(v, u).unwrap();
            let (x, y) = if opts.short_labels {
                (short_letter(&there), short_letter(&back))
            } else {
                (there.to_string(), back.to_string())
            };
            let _ = writeln!(out, "  {u} -- {v} [label=\"{x}/{y}\"];");
        }
        out.push_str("}\n");
        out
    }
}

fn find(out: &[(usize, Sym)], v: usize) -> Option<Sym> {
    out.binary_search_by_key(&v, |&(w, _)| w).ok().map(|k| out[k].1)
}

fn short_letter(l: &Letter) -> String {
    format!("{}{}", l.klass.as_char(), l.i)
}

fn dot_id(s: &str) -> String {
    if !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
        s.to_string()
    } else {
        format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
    }
}

/// First pair (src, v) with two shortest paths, scanning targets in BFS order.
fn geodesic_conflict(adj: &[Vec<(usize, Sym)>], src: usize) -> Option<GeodesicWitness> {
    let n = adj.len();
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    dist[src] = 0;
    let mut queue = VecDeque::from([src]);
    while let Some(u) = queue.pop_front() {
        for &(v, _) in &adj[u] {
            if dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                parent[v] = u;
                queue.push_back(v);
            } else if dist[v] == dist[u] + 1 && parent[v] != u {
                // v is the closest vertex with two geodesics, so its two
                // parents each have a unique one
                let trace = |mut x: usize| {
                    let mut path = vec![v];
                    while x != usize::MAX {
                        path.push(x);
                        x = parent[x];
                    }
                    path.reverse();
                    path
                };
                return Some(GeodesicWitness { from: src, to: v, first: trace(parent[v]), second: trace(u) });
            }
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeodesicWitness {
    pub from: usize,
    pub to: usize,
    /// Two distinct shortest vertex paths from `from` to `to`.
    pub first: Vec<usize>,
    pub second: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Geodeticity {
    Geodetic,
    NotGeodetic(GeodesicWitness),
}

impl Geodeticity {
    pub fn is_geodetic(&self) -> bool {
        matches!(self, Geodeticity::Geodetic)
    }

    pub fn witness(&self) -> Option<&GeodesicWitness> {
        match self {
            Geodeticity::Geodetic => None,
            Geodeticity::NotGeodetic(w) => Some(w),
        }
    }
}

impl fmt::Display for GeodesicWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |p: &[usize]| p.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
        write!(f, "{} to {}: [{}] and [{}]", self.from, self.to, show(&self.first), show(&self.second))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDump {
    pub vertices: Vec<usize>,
    pub edges: Vec<[usize; 2]>,
    pub labels: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DotOptions {
    pub name: String,
    pub vertex_names: Option<Vec<String>>,
    /// Print letters as `b1` instead of `b_1_1`; meant for base graphs.
    pub short_labels: bool,
    /// Vertices below this index are the original ones.
    pub old_vertices: Option<usize>,
    /// Draw subdivision vertices as unlabelled points.
    pub hide_interior: bool,
}

impl Default for DotOptions {
    fn default() -> Self {
        DotOptions { name: "G".into(), vertex_names: None, short_labels: false, old_vertices: None, hide_interior: false }
    }
}
