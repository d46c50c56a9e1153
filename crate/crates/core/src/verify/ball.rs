use std::collections::{HashMap, VecDeque};

use rayon::prelude::*;
use serde::Serialize;

use crate::caps::Caps;
use crate::error::Result;
use crate::letter::Sym;
use crate::rewriting::{for_each_irreducible, RewritingSystem, Strategy};

/// Unique-geodesic check on a truncated Cayley ball.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BallGeodeticity {
    pub radius: usize,
    pub vertices: usize,
    /// Pairs were checked between vertices at most this deep.
    pub depth: usize,
    pub pairs: u64,
    /// Two vertices (as normal forms) joined by more than one geodesic.
    pub witness: Option<(String, String)>,
}

/// Builds the ball of irreducible words of length at most `radius`, with w
/// adjacent to the normal form of w x for every letter x, and checks that
/// vertices at depth at most radius/2 are joined by unique shortest paths.
///
/// A geodesic between two such vertices never leaves the ball: each of its
/// vertices is within half its length of one end.
pub fn ball_geodeticity(sys: &RewritingSystem, radius: usize, caps: &Caps) -> Result<BallGeodeticity> {
    let mut words: Vec<Vec<Sym>> = Vec::new();
    for_each_irreducible(sys, radius, caps.census_words, |w| words.push(w.to_vec()))?;
    let index: HashMap<&[Sym], u32> = words.iter().enumerate().map(|(k, w)| (w.as_slice(), k as u32)).collect();
    let letters = sys.alphabet().len() as Sym;
    let adj: Vec<Vec<u32>> = words
        .par_iter()
        .map(|w| {
            let mut out = Vec::with_capacity(letters as usize);
            for x in 0..letters {
                let mut v = w.clone();
                v.push(x);
                sys.normal_form_syms(&mut v, Strategy::Leftmost, caps.rewrite_steps)?;
                if let Some(&k) = index.get(v.as_slice()) {
                    out.push(k);
                }
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    let depth = radius / 2;
    let near: Vec<u32> = (0..words.len() as u32).filter(|&k| words[k as usize].len() <= depth).collect();
    let found = near.par_iter().find_map_first(|&u| {
        let (dist, paths) = bounded_bfs(&adj, u, 2 * depth);
        near.iter().find(|&&v| paths[v as usize] > 1 && dist[v as usize] != u32::MAX).map(|&v| (u, v))
    });
    let al = sys.alphabet();
    Ok(BallGeodeticity {
        radius,
        vertices: words.len(),
        depth,
        pairs: (near.len() as u64).pow(2),
        witness: found.map(|(u, v)| (al.decode(&words[u as usize]).to_string(), al.decode(&words[v as usize]).to_string())),
    })
}

/// Distances from `src` up to `limit`, and the number of shortest paths to
/// each vertex, saturated at 2.
fn bounded_bfs(adj: &[Vec<u32>], src: u32, limit: usize) -> (Vec<u32>, Vec<u8>) {
    let mut dist = vec![u32::MAX; adj.len()];
    let mut paths = vec![0u8; adj.len()];
    dist[src as usize] = 0;
    paths[src as usize] = 1;
    let mut queue = VecDeque::from([src]);
    while let Some(u) = queue.pop_front() {
        let d = dist[u as usize];
        if d as usize >= limit {
            continue;
        }
        for &v in &adj[u as usize] {
            let v = v as usize;
            if dist[v] == u32::MAX {
                dist[v] = d + 1;
                queue.push_back(v as u32);
            }
            if dist[v] == d + 1 {
                paths[v] = (paths[v] + paths[u as usize]).min(2);
            }
        }
    }
    (dist, paths)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{check_genset, FiniteGroup};
    use crate::letter::OrderSpec;
    use crate::nabla::{compose_free_product, free_group_system, nabla};

    #[test]
    fn free_group_ball_is_a_tree() {
        let b = ball_geodeticity(&free_group_system(2), 4, &Caps::default()).unwrap();
        assert_eq!(b.vertices, 1 + 4 + 12 + 36 + 108);
        assert_eq!(b.witness, None);
    }

    #[test]
    fn product_of_geodetic_factors() {
        let c2 = FiniteGroup::cyclic(2);
        let c3 = FiniteGroup::cyclic(3);
        let caps = Caps::default();
        let a = nabla(&c2, &check_genset(&c2, &[1]).unwrap(), 0, &OrderSpec::Canonical, &caps).unwrap();
        let b = nabla(&c3, &check_genset(&c3, &[1, 2]).unwrap(), 0, &OrderSpec::Canonical, &caps).unwrap();
        let sys = compose_free_product(a.system(), b.system()).unwrap();
        assert_eq!(ball_geodeticity(&sys, 6, &caps).unwrap().witness, None);
    }

    #[test]
    fn square_is_caught() {
        // free reduction plus a commutation: Z², whose ball has many geodesics
        let f = free_group_system(2);
        let al = f.alphabet().clone();
        let mut rules = f.rules().to_vec();
        let w = |s: &str| s.parse().unwrap();
        rules.push(crate::rewriting::Rule::new(w("b_2_1 b_1_1 c_2_1"), w("b_1_1")));
        let sys = RewritingSystem::new(al, rules).unwrap();
        let b = ball_geodeticity(&sys, 4, &Caps::default()).unwrap();
        assert!(b.witness.is_some());
    }
}
