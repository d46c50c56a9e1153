use std::collections::{HashMap, HashSet};
use std::hash::Hash;

use serde::Serialize;

use super::model::{Element, FreeProductModel};
use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::letter::Sym;
use crate::rewriting::{for_each_irreducible, RewritingSystem};

/// A graph given by a base vertex and a step function over the symbols of
/// a system's alphabet.
pub trait CayleyOracle {
    type Vertex: Clone + Eq + Hash;

    fn base(&self) -> Self::Vertex;

    /// Number of symbols; steps are tried for 0..letters().
    fn letters(&self) -> usize;

    fn step(&self, v: &Self::Vertex, s: Sym) -> Option<Self::Vertex>;
}

/// A finite labelled graph whose alphabet matches the system's.
pub struct GraphOracle<'a> {
    pub graph: &'a LabeledGraph,
    pub base: usize,
}

impl CayleyOracle for GraphOracle<'_> {
    type Vertex = usize;

    fn base(&self) -> usize {
        self.base
    }

    fn letters(&self) -> usize {
        self.graph.alphabet().len()
    }

    fn step(&self, v: &usize, s: Sym) -> Option<usize> {
        self.graph.step(*v, s)
    }
}

/// The Cayley graph of a free product with respect to the images of the
/// alphabet, multiplying on the right.
pub struct ModelOracle {
    pub model: FreeProductModel,
    pub images: Vec<Element>,
}

impl CayleyOracle for ModelOracle {
    type Vertex = Element;

    fn base(&self) -> Element {
        Vec::new()
    }

    fn letters(&self) -> usize {
        self.images.len()
    }

    fn step(&self, v: &Element, s: Sym) -> Option<Element> {
        Some(self.model.mul(v, &self.images[s as usize]))
    }
}

/// Distance from the base of every vertex seen.
pub type Distances<V> = HashMap<V, usize>;

/// Irreducible words and sphere sizes, side by side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Correspondence {
    pub census: Vec<u64>,
    pub spheres: Vec<u64>,
    /// First irreducible word that is unreadable, not a geodesic, or ends
    /// where an earlier one did.
    pub problem: Option<String>,
}

impl Correspondence {
    pub fn holds(&self) -> bool {
        self.problem.is_none() && self.census == self.spheres
    }
}

/// Sphere sizes of the oracle graph around its base, by breadth-first
/// search, together with the distance of every vertex seen.
pub fn spheres<O: CayleyOracle>(oracle: &O, radius: usize, cap: u64) -> Result<(Vec<u64>, Distances<O::Vertex>)> {
    let mut dist = HashMap::from([(oracle.base(), 0usize)]);
    let mut counts = vec![1u64];
    let mut layer = vec![oracle.base()];
    for d in 1..=radius {
        let mut next = Vec::new();
        for v in &layer {
            for s in 0..oracle.letters() as Sym {
                if let Some(w) = oracle.step(v, s) {
                    if !dist.contains_key(&w) {
                        dist.insert(w.clone(), d);
                        next.push(w);
                    }
                }
            }
        }
        if dist.len() as u64 > cap {
            return Err(Error::CensusCapExceeded(cap));
        }
        counts.push(next.len() as u64);
        layer = next;
    }
    Ok((counts, dist))
}

/// Counts irreducible words of each length up to `radius` and checks that
/// each labels a geodesic from the base to a vertex no other word reaches.
///
/// With `readable_only`, words that cannot be read from the base are
/// skipped instead of reported, which compares a finite quotient graph
/// with the part of the language it can see.
pub fn ball_correspondence<O: CayleyOracle>(
    sys: &RewritingSystem,
    oracle: &O,
    radius: usize,
    readable_only: bool,
    cap: u64,
) -> Result<Correspondence> {
    let (spheres, dist) = spheres(oracle, radius, cap)?;
    let mut census = vec![0u64; radius + 1];
    let mut problem: Option<String> = None;
    let mut reached: HashSet<O::Vertex> = HashSet::new();
    // vertex reached by the current word's prefix of each length
    let mut ends: Vec<Option<O::Vertex>> = vec![None; radius + 1];
    let al = sys.alphabet();
    for_each_irreducible(sys, radius, cap, |w| {
        let len = w.len();
        ends[len] = if len == 0 {
            Some(oracle.base())
        } else {
            ends[len - 1].as_ref().and_then(|v| oracle.step(v, w[len - 1]))
        };
        let Some(end) = &ends[len] else {
            if !readable_only && problem.is_none() {
                problem = Some(format!("{} cannot be read from the base", al.decode(w)));
            }
            return;
        };
        census[len] += 1;
        if problem.is_some() {
            return;
        }
        if dist.get(end) != Some(&len) {
            problem = Some(format!("{} does not label a geodesic", al.decode(w)));
        } else if !reached.insert(end.clone()) {
            problem = Some(format!("{} ends where a shorter or earlier word does", al.decode(w)));
        }
    })?;
    Ok(Correspondence { census, spheres, problem })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{check_genset, FiniteGroup};
    use crate::letter::OrderSpec;
    use crate::nabla::{free_group_system, nabla};
    use crate::verify::model::{free_images, nabla_images};
    use crate::caps::Caps;

    #[test]
    fn free_group_matches_the_tree() {
        let sys = free_group_system(2);
        let (model, images) = free_images(2, sys.alphabet());
        let c = ball_correspondence(&sys, &ModelOracle { model, images }, 3, false, 1 << 20).unwrap();
        assert_eq!(c.spheres, vec![1, 4, 12, 36]);
        assert!(c.holds());
    }

    #[test]
    fn five_cycle_system_matches_its_group() {
        let g = FiniteGroup::cyclic(5);
        let s = check_genset(&g, &[1, 4]).unwrap();
        let nab = nabla(&g, &s, 1, &OrderSpec::Canonical, &Caps::default()).unwrap();
        let (model, images) = nabla_images(&g, nab.partition(), 1, nab.system().alphabet());
        let c = ball_correspondence(nab.system(), &ModelOracle { model, images }, 5, false, 1 << 22).unwrap();
        assert!(c.holds(), "{c:?}");
        let oracle = GraphOracle { graph: nab.graph(), base: 0 };
        let local = ball_correspondence(nab.system(), &oracle, 5, true, 1 << 22).unwrap();
        assert!(local.holds(), "{local:?}");
        // read strictly, most words fall off the finite graph
        assert!(!ball_correspondence(nab.system(), &oracle, 2, false, 1 << 22).unwrap().holds());
    }

    #[test]
    fn missing_rule_shows_up() {
        let g = FiniteGroup::cyclic(4);
        let s = crate::group::GenSet::all_nonidentity(&g);
        let nab = nabla(&g, &s, 0, &OrderSpec::Canonical, &Caps::default()).unwrap();
        let (model, images) = nabla_images(&g, nab.partition(), 0, nab.system().alphabet());
        let oracle = ModelOracle { model, images };
        assert!(ball_correspondence(nab.system(), &oracle, 4, false, 1 << 20).unwrap().holds());
        let dropped = nab.system().filtered(|k, _| k != nab.system().rules().len() - 1);
        let c = ball_correspondence(&dropped, &oracle, 4, false, 1 << 20).unwrap();
        assert!(!c.holds());
    }
}
