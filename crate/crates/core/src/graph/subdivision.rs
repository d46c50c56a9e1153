use std::collections::{BTreeMap, HashMap};

use super::{canonical_circuit, Circuit, LabeledGraph};
use crate::error::{Error, Result};
use crate::letter::{Alphabet, Klass, Letter};

/// Part played by a letter of the graph being subdivided.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    /// The `i`-th self-inverse letter; its edges become a-paths.
    Involution(u32),
    /// First letter of the `i`-th inverse pair; its edges become b-paths.
    Forward(u32),
    /// Second letter of the `i`-th inverse pair; read backwards along b-paths.
    Backward(u32),
}

/// Assigns every letter of an alphabet its [`Role`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LetterPartition {
    roles: BTreeMap<Letter, Role>,
    involutions: u32,
    pairs: u32,
}

impl LetterPartition {
    /// Walks the alphabet in canonical order. Self-inverse letters are
    /// numbered as involutions; of every other inverse pair the letter seen
    /// first is the forward one.
    pub fn from_alphabet(alphabet: &Alphabet) -> Result<Self> {
        let mut roles = BTreeMap::new();
        let (mut involutions, mut pairs) = (0, 0);
        for (s, l) in alphabet.letters().iter().enumerate() {
            let inv = alphabet.inverse(s as u32).ok_or(Error::MissingInverse(*l))?;
            if roles.contains_key(l) {
                continue;
            }
            if inv as usize == s {
                involutions += 1;
                roles.insert(*l, Role::Involution(involutions));
            } else {
                pairs += 1;
                roles.insert(*l, Role::Forward(pairs));
                roles.insert(alphabet.letter(inv), Role::Backward(pairs));
            }
        }
        Ok(LetterPartition { roles, involutions, pairs })
    }

    pub fn role(&self, l: &Letter) -> Option<Role> {
        self.roles.get(l).copied()
    }

    /// Letters in canonical order with their roles.
    pub fn roles(&self) -> impl Iterator<Item = (&Letter, &Role)> {
        self.roles.iter()
    }

    /// Letter whose role is `role`.
    pub fn letter_of(&self, role: Role) -> Option<Letter> {
        self.roles.iter().find(|(_, r)| **r == role).map(|(l, _)| *l)
    }

    pub fn involution_count(&self) -> usize {
        self.involutions as usize
    }

    pub fn pair_count(&self) -> usize {
        self.pairs as usize
    }

    /// The subdivided alphabet: a_{i,j}, b_{i,j}, c_{i,j} for j in 1..=2n+1,
    /// with a_{i,j} inverse to a_{i,2n+2-j} and b_{i,j} inverse to c_{i,j}.
    pub fn subdivided_alphabet(&self, n: usize) -> Alphabet {
        subdivided_alphabet(self.involution_count(), self.pair_count(), n)
    }
}

pub(crate) fn subdivided_alphabet(m1: usize, m2: usize, n: usize) -> Alphabet {
    let span = 2 * n as u32 + 1;
    let mut letters = Vec::new();
    for j in 1..=span {
        letters.extend((1..=m1 as u32).map(|i| Letter::a(i, j)));
        letters.extend((1..=m2 as u32).map(|i| Letter::b(i, j)));
        letters.extend((1..=m2 as u32).map(|i| Letter::c(i, j)));
    }
    Alphabet::new(letters, |l| {
        Some(match l.klass {
            Klass::A => Letter::a(l.i, span + 1 - l.j),
            Klass::B => Letter::c(l.i, l.j),
            Klass::C => Letter::b(l.i, l.j),
        })
    })
    .expect("subdivided letters pair up")
}

/// Label of the `t`-th step (1-based) along a subdivided edge, walking in
/// the direction in which the original edge reads `role`.
pub fn step_letter(role: Role, n: usize, t: usize) -> Letter {
    let t = t as u32;
    match role {
        Role::Involution(i) => Letter::a(i, t),
        Role::Forward(i) => Letter::b(i, t),
        Role::Backward(i) => Letter::c(i, 2 * n as u32 + 2 - t),
    }
}

/// One original edge {u, v} (u < v) and the 2n vertices subdividing it,
/// listed from `u` towards `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubdividedEdge {
    pub ends: (usize, usize),
    pub interior: Vec<usize>,
}

/// Where a vertex of the subdivided graph comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexImage {
    Old(usize),
    /// `step`-th interior vertex (1..=2n) of edge number `edge`, counted
    /// from the smaller endpoint.
    Interior { edge: usize, step: usize },
}

/// Correspondence between a graph and its subdivision. Original vertices
/// keep their indices; interior vertices follow, edge by edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubdivisionMap {
    n: usize,
    base_vertices: usize,
    edges: Vec<SubdividedEdge>,
    edge_index: HashMap<(usize, usize), usize>,
}

impl SubdivisionMap {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn old_vertex_count(&self) -> usize {
        self.base_vertices
    }

    pub fn is_old(&self, v: usize) -> bool {
        v < self.base_vertices
    }

    pub fn edges(&self) -> &[SubdividedEdge] {
        &self.edges
    }

    pub fn image(&self, v: usize) -> VertexImage {
        if v < self.base_vertices {
            VertexImage::Old(v)
        } else {
            let k = v - self.base_vertices;
            VertexImage::Interior { edge: k / (2 * self.n), step: k % (2 * self.n) + 1 }
        }
    }

    /// Interior vertices of the edge {u, v}, ordered from `u` to `v`.
    pub fn interior(&self, u: usize, v: usize) -> Option<Vec<usize>> {
        let e = &self.edges[*self.edge_index.get(&(u.min(v), u.max(v)))?];
        let mut inner = e.interior.clone();
        if u > v {
            inner.reverse();
        }
        Some(inner)
    }

    /// Full vertex path replacing the edge {u, v}, from `u` to `v`.
    pub fn path(&self, u: usize, v: usize) -> Option<Vec<usize>> {
        let mut out = vec![u];
        out.extend(self.interior(u, v)?);
        out.push(v);
        Some(out)
    }
}

/// Replaces every edge by a path of 2n+1 edges. An edge whose letter has
/// role `Involution(i)` or `Forward(i)` reads x_{i,1} … x_{i,2n+1} in that
/// direction; the reverse direction reads the inverse letters.
pub fn subdivide(gamma: &LabeledGraph, part: &LetterPartition, n: usize) -> Result<(LabeledGraph, SubdivisionMap)> {
    let alphabet = part.subdivided_alphabet(n);
    let base = gamma.vertex_count();
    let span = 2 * n + 1;
    let mut next = base;
    let mut edges = Vec::with_capacity(gamma.edge_count());
    let mut edge_index = HashMap::new();
    let mut labelled = Vec::with_capacity(span * gamma.edge_count());
    for (k, (u, v)) in gamma.edges().into_iter().enumerate() {
        let l = gamma.label_letter(u, v).expect("edge has a label");
        let role = part.role(&l).ok_or(Error::UnknownLetter(l))?;
        let interior: Vec<usize> = (next..next + 2 * n).collect();
        next += 2 * n;
        let mut path = vec![u];
        path.extend(&interior);
        path.push(v);
        for t in 1..=span {
            labelled.push((path[t - 1], path[t], step_letter(role, n, t)));
        }
        edge_index.insert((u, v), k);
        edges.push(SubdividedEdge { ends: (u, v), interior });
    }
    let graph = LabeledGraph::from_edges(next, alphabet, &labelled)?;
    Ok((graph, SubdivisionMap { n, base_vertices: base, edges, edge_index }))
}

/// Lifts circuits of a graph to its subdivision: each edge of a circuit is
/// replaced by the corresponding path. Output is canonical and sorted.
pub fn lift_circuits(circuits: &[Circuit], map: &SubdivisionMap) -> Vec<Circuit> {
    let mut out: Vec<Circuit> = circuits
        .iter()
        .map(|c| {
            let mut seq = Vec::with_capacity(c.len() * (2 * map.n() + 1));
            for k in 0..c.len() {
                let (u, v) = (c.at(k), c.at(k + 1));
                seq.push(u);
                seq.extend(map.interior(u, v).expect("circuit edges exist in the base graph"));
            }
            canonical_circuit(&seq)
        })
        .collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::caps::Caps;
    use crate::graph::{cayley_graph, enumerate_embedded_circuits, fixtures};
    use crate::group::{check_genset, FiniteGroup, GenSet};
    use crate::letter::Sym;

    fn k4() -> LabeledGraph {
        let c4 = FiniteGroup::cyclic(4);
        cayley_graph(&c4, &GenSet::all_nonidentity(&c4))
    }

    fn sub(g: &LabeledGraph, n: usize) -> (LabeledGraph, SubdivisionMap) {
        subdivide(g, &LetterPartition::from_alphabet(g.alphabet()).unwrap(), n).unwrap()
    }

    #[test]
    fn base_partition_is_read_back() {
        let g = k4();
        let part = LetterPartition::from_alphabet(g.alphabet()).unwrap();
        assert_eq!(part.role(&Letter::a(1, 1)), Some(Role::Involution(1)));
        assert_eq!(part.role(&Letter::b(1, 1)), Some(Role::Forward(1)));
        assert_eq!(part.role(&Letter::c(1, 1)), Some(Role::Backward(1)));
        assert_eq!(part.subdivided_alphabet(1).len(), 9);
    }

    #[test]
    fn counts() {
        for (g, s) in fixtures::gensets() {
            let gamma = cayley_graph(&g, &s);
            for n in 0..=3 {
                let (gn, map) = sub(&gamma, n);
                assert_eq!(gn.vertex_count(), gamma.vertex_count() + 2 * n * gamma.edge_count());
                assert_eq!(gn.edge_count(), (2 * n + 1) * gamma.edge_count());
                for v in 0..gn.vertex_count() {
                    match map.image(v) {
                        VertexImage::Old(x) => assert_eq!(gn.degree(v), gamma.degree(x)),
                        VertexImage::Interior { edge, step } => {
                            assert_eq!(gn.degree(v), 2);
                            assert_eq!(map.edges()[edge].interior[step - 1], v);
                        }
                    }
                }
                for e in map.edges() {
                    let p = map.path(e.ends.0, e.ends.1).unwrap();
                    assert_eq!(p.len(), 2 * n + 2);
                    assert!(gn.path_label(&p).is_some());
                }
            }
        }
    }

    #[test]
    fn k4_paths_read_along_edges() {
        let (gn, map) = sub(&k4(), 1);
        assert_eq!((gn.vertex_count(), gn.edge_count()), (16, 18));
        let read = |u: usize, v: usize| gn.alphabet().decode(&gn.path_label(&map.path(u, v).unwrap()).unwrap()).to_string();
        // 0 -> 1 is x (b), 0 -> 2 is y (a), 0 -> 3 is z (c)
        assert_eq!(read(0, 1), "b_1_1 b_1_2 b_1_3");
        assert_eq!(read(1, 0), "c_1_3 c_1_2 c_1_1");
        assert_eq!(read(0, 2), "a_1_1 a_1_2 a_1_3");
        assert_eq!(read(2, 0), "a_1_1 a_1_2 a_1_3");
        assert_eq!(read(0, 3), "c_1_3 c_1_2 c_1_1");
        assert_eq!(gn.alphabet().inverse_letter(&Letter::b(1, 1)), Some(Letter::c(1, 1)));
        assert_eq!(gn.alphabet().inverse_letter(&Letter::a(1, 1)), Some(Letter::a(1, 3)));
    }

    #[test]
    fn pentagon_becomes_fifteen_cycle() {
        let c5 = FiniteGroup::cyclic(5);
        let gamma = cayley_graph(&c5, &check_genset(&c5, &[1, 4]).unwrap());
        let (gn, _) = sub(&gamma, 1);
        assert_eq!((gn.vertex_count(), gn.edge_count()), (15, 15));
        assert!((0..15).all(|v| gn.degree(v) == 2));
        let circuits = enumerate_embedded_circuits(&gn, &Caps::default()).unwrap();
        assert_eq!(circuits.len(), 1);
        assert_eq!(circuits[0].len(), 15);
    }

    #[test]
    fn reversed_walks_read_inverse_words() {
        for (g, s) in fixtures::gensets().into_iter().take(6) {
            let gamma = cayley_graph(&g, &s);
            let (gn, _) = sub(&gamma, 2);
            // every walk of length 4 from every vertex
            let mut walks: Vec<Vec<usize>> = (0..gn.vertex_count()).map(|v| vec![v]).collect();
            for _ in 0..4 {
                walks = walks
                    .into_iter()
                    .flat_map(|w| {
                        let last = *w.last().unwrap();
                        gn.neighbors(last).iter().map(move |&(v, _)| {
                            let mut w2 = w.clone();
                            w2.push(v);
                            w2
                        })
                    })
                    .collect();
            }
            for w in walks {
                let fwd: Vec<Sym> = gn.path_label(&w).unwrap();
                let mut rev = w.clone();
                rev.reverse();
                assert_eq!(gn.path_label(&rev).unwrap(), gn.alphabet().inverse_syms(&fwd).unwrap());
            }
        }
    }

    #[test]
    fn lifted_circuits_are_all_circuits() {
        let roomy = Caps { circuit_vertices: 1000, ..Caps::default() };
        for (g, s) in fixtures::gensets() {
            let gamma = cayley_graph(&g, &s);
            let base = enumerate_embedded_circuits(&gamma, &Caps::default()).unwrap();
            for n in 1..=2 {
                let (gn, map) = sub(&gamma, n);
                let lifted = lift_circuits(&base, &map);
                assert_eq!(lifted, enumerate_embedded_circuits(&gn, &roomy).unwrap(), "{} n={n}", g.name());
                let mut want: Vec<usize> = base.iter().map(|c| c.len() * (2 * n + 1)).collect();
                let mut got: Vec<usize> = lifted.iter().map(Circuit::len).collect();
                want.sort();
                got.sort();
                assert_eq!(got, want);
            }
        }
    }

    #[test]
    fn lifted_lengths() {
        let g = k4();
        let circuits = enumerate_embedded_circuits(&g, &Caps::default()).unwrap();
        let (_, map) = sub(&g, 1);
        let mut lens: Vec<usize> = lift_circuits(&circuits, &map).iter().map(Circuit::len).collect();
        lens.sort();
        assert_eq!(lens, vec![9, 9, 9, 9, 12, 12, 12]);

        let c5 = FiniteGroup::cyclic(5);
        let pentagon = cayley_graph(&c5, &check_genset(&c5, &[1, 4]).unwrap());
        let circuits = enumerate_embedded_circuits(&pentagon, &Caps::default()).unwrap();
        let (_, map) = sub(&pentagon, 2);
        assert_eq!(lift_circuits(&circuits, &map)[0].len(), 25);
    }
}
