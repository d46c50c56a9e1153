use std::collections::VecDeque;
use std::fmt;

use super::{FiniteGroup, GenSet};

/// A generator or its formal inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenLetter {
    pub gen: usize,
    pub inverse: bool,
}

impl GenLetter {
    pub fn pos(gen: usize) -> Self {
        GenLetter { gen, inverse: false }
    }

    pub fn neg(gen: usize) -> Self {
        GenLetter { gen, inverse: true }
    }

    pub fn inverted(self) -> Self {
        GenLetter { gen: self.gen, inverse: !self.inverse }
    }
}

/// A group presentation ⟨X | R⟩ with generators `0..generator_count`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub generator_count: usize,
    pub generator_names: Vec<String>,
    pub relators: Vec<Vec<GenLetter>>,
}

impl Presentation {
    pub fn new(generator_count: usize, relators: Vec<Vec<GenLetter>>) -> Self {
        Presentation {
            generator_count,
            generator_names: (0..generator_count).map(|k| format!("x{}", k + 1)).collect(),
            relators,
        }
    }

    pub fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.generator_count);
        self.generator_names = names;
        self
    }

    /// Presentation on the disjoint union of generators (free product).
    pub fn free_product(&self, other: &Presentation) -> Presentation {
        let shift = self.generator_count;
        let mut relators = self.relators.clone();
        relators.extend(other.relators.iter().map(|r| {
            r.iter().map(|l| GenLetter { gen: l.gen + shift, inverse: l.inverse }).collect()
        }));
        let mut names = self.generator_names.clone();
        names.extend(other.generator_names.iter().cloned());
        Presentation { generator_count: shift + other.generator_count, generator_names: names, relators }
    }

    /// The standard presentation read off the Cayley graph: generators are
    /// the elements of Σ (in list order) and each non-tree edge g -s-> gs of
    /// a breadth-first spanning tree contributes w_g s w_gs⁻¹.
    pub fn of_group(g: &FiniteGroup, sigma: &GenSet) -> Presentation {
        let gens = sigma.elements();
        let mut tree_word: Vec<Option<Vec<GenLetter>>> = vec![None; g.order()];
        tree_word[g.identity()] = Some(Vec::new());
        let mut queue = VecDeque::from([g.identity()]);
        while let Some(h) = queue.pop_front() {
            for (k, &s) in gens.iter().enumerate() {
                let t = g.mul(h, s);
                if tree_word[t].is_none() {
                    let mut w = tree_word[h].clone().unwrap();
                    w.push(GenLetter::pos(k));
                    tree_word[t] = Some(w);
                    queue.push_back(t);
                }
            }
        }
        let mut relators = Vec::new();
        for h in 0..g.order() {
            let wh = tree_word[h].as_ref().expect("generating set reaches every element");
            for (k, &s) in gens.iter().enumerate() {
                let t = g.mul(h, s);
                let mut r = wh.clone();
                r.push(GenLetter::pos(k));
                r.extend(tree_word[t].as_ref().unwrap().iter().rev().map(|l| l.inverted()));
                let r = free_reduce(&r);
                if !r.is_empty() && !relators.contains(&r) {
                    relators.push(r);
                }
            }
        }
        let names = gens.iter().map(|&x| g.element_name(x)).collect();
        Presentation::new(gens.len(), relators).with_names(names)
    }
}

/// Cancels adjacent x x⁻¹ pairs.
pub fn free_reduce(w: &[GenLetter]) -> Vec<GenLetter> {
    let mut out: Vec<GenLetter> = Vec::with_capacity(w.len());
    for &l in w {
        if out.last() == Some(&l.inverted()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "< {} | ", self.generator_names.join(", "))?;
        for (k, r) in self.relators.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            for l in r {
                write!(f, "{}", self.generator_names[l.gen])?;
                if l.inverse {
                    f.write_str("^-1")?;
                }
            }
        }
        f.write_str(" >")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::check_genset;

    #[test]
    fn free_reduction() {
        let w = [GenLetter::pos(0), GenLetter::pos(1), GenLetter::neg(1), GenLetter::neg(0), GenLetter::pos(2)];
        assert_eq!(free_reduce(&w), vec![GenLetter::pos(2)]);
    }

    #[test]
    fn cayley_presentation_of_c4() {
        let c4 = FiniteGroup::cyclic(4);
        let p = Presentation::of_group(&c4, &check_genset(&c4, &[1, 3]).unwrap());
        assert_eq!(p.generator_count, 2);
        assert!(!p.relators.is_empty());
        assert!(p.to_string().starts_with("< 1, 3 |"));
    }
}
