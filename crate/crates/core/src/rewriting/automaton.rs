use std::collections::VecDeque;

use super::RewritingSystem;
use crate::letter::Sym;

/// Deterministic automaton recognising words that end with some left-hand
/// side (Aho–Corasick with the failure links folded into the table).
pub(crate) struct FactorAutomaton {
    width: usize,
    next: Vec<u32>,
    hit: Vec<bool>,
}

impl FactorAutomaton {
    pub const START: u32 = 0;

    pub fn new(sys: &RewritingSystem) -> Self {
        let width = sys.alphabet().len();
        let mut next: Vec<u32> = vec![u32::MAX; width];
        let mut hit = vec![false];
        for k in 0..sys.rules().len() {
            let (lhs, _) = sys.rule_syms(k);
            let mut s = 0usize;
            for &x in lhs {
                let slot = s * width + x as usize;
                if next[slot] == u32::MAX {
                    next[slot] = hit.len() as u32;
                    hit.push(false);
                    next.extend(std::iter::repeat_n(u32::MAX, width));
                }
                s = next[slot] as usize;
            }
            hit[s] = true;
        }
        // breadth-first: fill missing transitions from the failure state
        let mut fail = vec![0u32; hit.len()];
        let mut queue = VecDeque::new();
        for x in 0..width {
            match next[x] {
                u32::MAX => next[x] = 0,
                t => queue.push_back(t),
            }
        }
        while let Some(s) = queue.pop_front() {
            let s = s as usize;
            let f = fail[s] as usize;
            hit[s] |= hit[f];
            for x in 0..width {
                let slot = s * width + x;
                let via_fail = next[f * width + x];
                match next[slot] {
                    u32::MAX => next[slot] = via_fail,
                    t => {
                        fail[t as usize] = via_fail;
                        queue.push_back(t);
                    }
                }
            }
        }
        FactorAutomaton { width, next, hit }
    }

    #[inline]
    pub fn step(&self, s: u32, x: Sym) -> u32 {
        self.next[s as usize * self.width + x as usize]
    }

    /// Whether the word read so far ends with a left-hand side.
    #[inline]
    pub fn hit(&self, s: u32) -> bool {
        self.hit[s as usize]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::letter::{Alphabet, Letter, Word};
    use crate::rewriting::Rule;

    #[test]
    fn agrees_with_direct_matching() {
        let x = |j| Letter::a(1, j);
        let alphabet = Alphabet::without_inverses((1..=3).map(x));
        let rules = [
            Rule::new(Word(vec![x(1), x(2), x(1)]), Word::empty()),
            Rule::new(Word(vec![x(2), x(2)]), Word::empty()),
            Rule::new(Word(vec![x(3), x(1), x(2), x(3)]), Word::empty()),
        ];
        let sys = RewritingSystem::new(alphabet, rules).unwrap();
        let aut = FactorAutomaton::new(&sys);
        // all words of length 6
        for code in 0..3usize.pow(6) {
            let w: Vec<Sym> = (0..6).map(|k| (code / 3usize.pow(k)) as Sym % 3).collect();
            let mut s = FactorAutomaton::START;
            let mut seen = false;
            for &c in &w {
                s = aut.step(s, c);
                seen |= aut.hit(s);
            }
            assert_eq!(seen, !sys.is_irreducible(&w), "{w:?}");
        }
    }
}
