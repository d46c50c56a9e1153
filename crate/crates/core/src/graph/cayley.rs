use super::LabeledGraph;
use crate::group::{partition_generators, FiniteGroup, GenPartition, GenSet};
use crate::letter::{Alphabet, Klass, Letter};

/// Base letter of a generator: involutions are a_{i,1}, the first of each
/// inverse pair b_{i,1} and its inverse c_{i,1}.
pub fn base_letter(part: &GenPartition, element: usize) -> Option<Letter> {
    let pos = |v: &[usize]| v.iter().position(|&x| x == element).map(|k| k as u32 + 1);
    if let Some(i) = pos(&part.sigma1) {
        Some(Letter::a(i, 1))
    } else if let Some(i) = pos(&part.sigma2) {
        Some(Letter::b(i, 1))
    } else {
        pos(&part.sigma3).map(|i| Letter::c(i, 1))
    }
}

/// Alphabet of base letters for a partition, with its inverse map.
pub fn base_partition(part: &GenPartition) -> Alphabet {
    let mut letters = Vec::new();
    letters.extend((1..=part.m1() as u32).map(|i| Letter::a(i, 1)));
    letters.extend((1..=part.m2() as u32).map(|i| Letter::b(i, 1)));
    letters.extend((1..=part.m2() as u32).map(|i| Letter::c(i, 1)));
    Alphabet::new(letters, |l| {
        Some(match l.klass {
            Klass::A => *l,
            Klass::B => Letter::c(l.i, l.j),
            Klass::C => Letter::b(l.i, l.j),
        })
    })
    .expect("base letters pair up")
}

/// Cay(G, Σ): vertices are the elements, g and h are adjacent when g⁻¹h ∈ Σ,
/// and L(g, h) is the base letter of g⁻¹h.
pub fn cayley_graph(g: &FiniteGroup, sigma: &GenSet) -> LabeledGraph {
    let part = partition_generators(g, sigma);
    let alphabet = base_partition(&part);
    let mut edges = Vec::new();
    for x in 0..g.order() {
        for &s in sigma.elements() {
            let y = g.mul(x, s);
            if x < y {
                edges.push((x, y, base_letter(&part, s).expect("generator is partitioned")));
            }
        }
    }
    LabeledGraph::from_edges(g.order(), alphabet, &edges).expect("Cayley graphs are simple and inverse-labelled")
}
