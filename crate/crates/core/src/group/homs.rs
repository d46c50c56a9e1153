use std::collections::VecDeque;

use super::{FiniteGroup, GenLetter, GenSet, Presentation};
use crate::error::{Error, Result};

/// Number of homomorphisms from the presented group into `q`.
///
/// Generator images are assigned by backtracking; each relator is evaluated
/// as soon as all of its generators have images. `cap` bounds the number of
/// tentative assignments.
pub fn count_homs_presentation(p: &Presentation, q: &FiniteGroup, cap: u64) -> Result<u64> {
    let g = p.generator_count;
    if g == 0 {
        let ok = p.relators.iter().all(|r| r.is_empty());
        return Ok(u64::from(ok));
    }
    let order = assignment_order(p);
    let mut position = vec![0usize; g];
    for (k, &gen) in order.iter().enumerate() {
        position[gen] = k;
    }
    // relators to test once step k of `order` has been assigned
    let mut due: Vec<Vec<&[GenLetter]>> = vec![Vec::new(); g];
    for r in &p.relators {
        if let Some(last) = r.iter().map(|l| position[l.gen]).max() {
            due[last].push(r);
        }
    }

    let mut images = vec![usize::MAX; g];
    let mut visited = 0u64;
    let mut count = 0u64;
    let mut stack: Vec<(usize, usize)> = vec![(0, 0)];
    // iterative DFS over (depth, candidate image)
    while let Some((depth, cand)) = stack.pop() {
        if cand >= q.order() {
            continue;
        }
        stack.push((depth, cand + 1));
        visited += 1;
        if visited > cap {
            return Err(Error::EnumerationCapExceeded(cap));
        }
        let gen = order[depth];
        images[gen] = cand;
        let consistent = due[depth].iter().all(|r| evaluate(r, &images, q) == q.identity());
        if !consistent {
            continue;
        }
        if depth + 1 == g {
            count += 1;
        } else {
            stack.push((depth + 1, 0));
        }
    }
    Ok(count)
}

fn evaluate(r: &[GenLetter], images: &[usize], q: &FiniteGroup) -> usize {
    r.iter().fold(q.identity(), |acc, l| {
        let x = images[l.gen];
        q.mul(acc, if l.inverse { q.inv(x) } else { x })
    })
}

/// Greedy order: next generator is the one that completes the most relators,
/// ties broken by index.
fn assignment_order(p: &Presentation) -> Vec<usize> {
    let g = p.generator_count;
    let gens_of: Vec<Vec<usize>> = p
        .relators
        .iter()
        .map(|r| {
            let mut v: Vec<usize> = r.iter().map(|l| l.gen).collect();
            v.sort_unstable();
            v.dedup();
            v
        })
        .collect();
    let mut placed = vec![false; g];
    let mut order = Vec::with_capacity(g);
    for _ in 0..g {
        let best = (0..g)
            .filter(|&x| !placed[x])
            .max_by_key(|&x| {
                let completes = gens_of
                    .iter()
                    .filter(|gs| gs.contains(&x) && gs.iter().all(|&y| y == x || placed[y]))
                    .count();
                (completes, std::cmp::Reverse(x))
            })
            .unwrap();
        placed[best] = true;
        order.push(best);
    }
    order
}

/// Number of homomorphisms `g -> q`, by trying every assignment of images to
/// the generators and keeping those that extend to a map consistent with the
/// whole multiplication table.
pub fn count_homs_group(g: &FiniteGroup, sigma: &GenSet, q: &FiniteGroup, cap: u64) -> Result<u64> {
    let k = sigma.len();
    let total = (q.order() as u64).checked_pow(k as u32).unwrap_or(u64::MAX);
    if total > cap {
        return Err(Error::EnumerationCapExceeded(cap));
    }
    let gens = sigma.elements();
    let mut images = vec![0usize; k];
    let mut phi = vec![usize::MAX; g.order()];
    let mut count = 0;
    for _ in 0..total {
        if extends_to_hom(g, gens, &images, q, &mut phi) {
            count += 1;
        }
        // odometer
        for slot in images.iter_mut() {
            *slot += 1;
            if *slot < q.order() {
                break;
            }
            *slot = 0;
        }
    }
    Ok(count)
}

fn extends_to_hom(g: &FiniteGroup, gens: &[usize], images: &[usize], q: &FiniteGroup, phi: &mut [usize]) -> bool {
    phi.fill(usize::MAX);
    phi[g.identity()] = q.identity();
    let mut queue = VecDeque::from([g.identity()]);
    while let Some(h) = queue.pop_front() {
        for (s, &img) in gens.iter().zip(images) {
            let t = g.mul(h, *s);
            let val = q.mul(phi[h], img);
            if phi[t] == usize::MAX {
                phi[t] = val;
                queue.push_back(t);
            } else if phi[t] != val {
                return false;
            }
        }
    }
    (0..g.order()).all(|a| (0..g.order()).all(|b| phi[g.mul(a, b)] == q.mul(phi[a], phi[b])))
}
