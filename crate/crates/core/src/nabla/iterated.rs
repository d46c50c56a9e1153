use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::graph::{step_letter, subdivide, LabeledGraph, LetterPartition};
use crate::letter::{Klass, Letter};

/// Subdivides `inner` times and then `outer` times. The second pass uses
/// the letter partition of the intermediate alphabet: a_{i,j} and
/// a_{i,2m+2-j} pair up (a_{i,m+1} alone is self-inverse), as do b_{i,j}
/// and c_{i,j}.
pub fn iterated_subdivision(
    gamma: &LabeledGraph,
    base: &LetterPartition,
    inner: usize,
    outer: usize,
) -> Result<LabeledGraph> {
    let (mid, _) = subdivide(gamma, base, inner)?;
    let mid_part = LetterPartition::from_alphabet(mid.alphabet())?;
    Ok(subdivide(&mid, &mid_part, outer)?.0)
}

/// Letter map from the k-fold subdivided alphabet, k = 2nm + n + m, to the
/// alphabet of subdividing m-fold and then n-fold.
///
/// Step (s-1)(2n+1) + t along a k-fold path is step t along the n-fold
/// subdivision of step s of the m-fold path, so a_{i,·} and b_{i,·} at that
/// position go to the letter read there; c_{i,j} goes to the inverse of the
/// image of b_{i,j}.
pub fn phi_bijection(base: &LetterPartition, n: usize, m: usize) -> Result<HashMap<Letter, Letter>> {
    let k = 2 * n * m + n + m;
    let (span_n, span_m) = (2 * n + 1, 2 * m + 1);
    if 2 * k + 1 != span_n * span_m {
        return Err(Error::NotBijective(format!("{} steps against {span_n}x{span_m}", 2 * k + 1)));
    }
    let mid = LetterPartition::from_alphabet(&base.subdivided_alphabet(m))?;
    let outer = mid.subdivided_alphabet(n);
    let mut phi = HashMap::new();
    for (klass, count) in [(Klass::A, base.involution_count()), (Klass::B, base.pair_count())] {
        for i in 1..=count as u32 {
            for s in 1..=span_m {
                let role = mid.role(&Letter::new(klass, i, s as u32)).expect("intermediate letter has a role");
                for t in 1..=span_n {
                    let pos = ((s - 1) * span_n + t) as u32;
                    let image = step_letter(role, n, t);
                    phi.insert(Letter::new(klass, i, pos), image);
                    if klass == Klass::B {
                        let inv = outer.inverse_letter(&image).expect("total involution");
                        phi.insert(Letter::c(i, pos), inv);
                    }
                }
            }
        }
    }
    let domain = base.subdivided_alphabet(k);
    let images: HashSet<&Letter> = phi.values().collect();
    if phi.len() != domain.len() || images.len() != outer.len() || !images.iter().all(|l| outer.contains(l)) {
        return Err(Error::NotBijective(format!(
            "{} letters onto {} of {}",
            phi.len(),
            images.len(),
            outer.len()
        )));
    }
    Ok(phi)
}
