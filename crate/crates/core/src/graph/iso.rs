use std::collections::{HashMap, HashSet, VecDeque};

use super::LabeledGraph;
use crate::letter::Letter;

/// Whether the letter map `bijection` induces a labelled isomorphism from
/// `g1` to `g2` sending `base1` to `base2`.
///
/// The vertex map is grown by a synchronised breadth-first search: from a
/// matched pair (u1, u2), each edge u1 -x-> v1 must be matched by the unique
/// edge of u2 labelled φ(x), and the reverse labels must correspond too.
/// The map must end up a bijection preserving degrees and edge counts.
pub fn check_label_isomorphism(
    g1: &LabeledGraph,
    g2: &LabeledGraph,
    bijection: &HashMap<Letter, Letter>,
    base1: usize,
    base2: usize,
) -> bool {
    label_isomorphism(g1, g2, bijection, base1, base2).is_some()
}

/// The vertex map of [`check_label_isomorphism`], when it exists.
pub fn label_isomorphism(
    g1: &LabeledGraph,
    g2: &LabeledGraph,
    bijection: &HashMap<Letter, Letter>,
    base1: usize,
    base2: usize,
) -> Option<Vec<usize>> {
    let n = g1.vertex_count();
    if n != g2.vertex_count() || g1.edge_count() != g2.edge_count() || base1 >= n || base2 >= n {
        return None;
    }
    let images: HashSet<&Letter> = bijection.values().collect();
    if images.len() != bijection.len() {
        return None;
    }
    let a1 = g1.alphabet();
    let a2 = g2.alphabet();
    let translate = |s: u32| -> Option<u32> { a2.sym(bijection.get(&a1.letter(s))?) };

    let mut fwd = vec![usize::MAX; n];
    let mut taken = vec![false; n];
    fwd[base1] = base2;
    taken[base2] = true;
    let mut queue = VecDeque::from([base1]);
    while let Some(u1) = queue.pop_front() {
        let u2 = fwd[u1];
        if g1.degree(u1) != g2.degree(u2) {
            return None;
        }
        for &(v1, s1) in g1.neighbors(u1) {
            let s2 = translate(s1)?;
            let v2 = g2.step(u2, s2)?;
            if g1.step(u1, s1) != Some(v1) {
                return None;
            }
            let back1 = g1.label(v1, u1).expect("edges are symmetric");
            if g2.label(v2, u2) != Some(translate(back1)?) {
                return None;
            }
            if fwd[v1] == usize::MAX {
                if taken[v2] {
                    return None;
                }
                fwd[v1] = v2;
                taken[v2] = true;
                queue.push_back(v1);
            } else if fwd[v1] != v2 {
                return None;
            }
        }
    }
    fwd.iter().all(|&v| v != usize::MAX).then_some(fwd)
}
