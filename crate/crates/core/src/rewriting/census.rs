use serde::Serialize;

use super::automaton::FactorAutomaton;
use super::RewritingSystem;
use crate::error::{Error, Result};
use crate::letter::Sym;

/// Number of irreducible words of each length 0..=max_len.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Census {
    pub counts: Vec<u64>,
}

impl Census {
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

/// Counts irreducible words by length. Words are grown one letter at a time;
/// since every prefix of an irreducible word is irreducible, only
/// left-hand sides ending at the new letter need checking.
pub fn irreducible_words(sys: &RewritingSystem, max_len: usize, cap: u64) -> Result<Census> {
    let mut counts = vec![0u64; max_len + 1];
    for_each_irreducible(sys, max_len, cap, |w| counts[w.len()] += 1)?;
    Ok(Census { counts })
}

/// Calls `visit` on every irreducible word of length at most `max_len`, in
/// depth-first order (each word before its extensions). Fails once more
/// than `cap` words have been visited.
pub fn for_each_irreducible(
    sys: &RewritingSystem,
    max_len: usize,
    cap: u64,
    mut visit: impl FnMut(&[Sym]),
) -> Result<()> {
    let aut = FactorAutomaton::new(sys);
    let width = sys.alphabet().len() as Sym;
    let mut word: Vec<Sym> = Vec::with_capacity(max_len);
    let mut states = vec![FactorAutomaton::START];
    let mut visited = 1u64;
    visit(&word);
    if max_len == 0 || width == 0 {
        return Ok(());
    }
    // odometer over the next letter to try at each depth
    let mut cursor: Vec<Sym> = vec![0];
    while let Some(top) = cursor.last_mut() {
        if *top == width {
            cursor.pop();
            states.pop();
            word.pop();
            continue;
        }
        let x = *top;
        *top += 1;
        let s = aut.step(*states.last().unwrap(), x);
        if aut.hit(s) {
            continue;
        }
        word.push(x);
        visited += 1;
        if visited > cap {
            return Err(Error::CensusCapExceeded(cap));
        }
        visit(&word);
        if word.len() < max_len {
            states.push(s);
            cursor.push(0);
        } else {
            word.pop();
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::letter::Alphabet;
    use crate::rewriting::testing::{free, plain};
    use crate::rewriting::Rule;

    /// Reference: test every word of each length directly.
    fn brute(sys: &RewritingSystem, max_len: usize) -> Vec<u64> {
        let k = sys.alphabet().len();
        (0..=max_len)
            .map(|len| {
                (0..k.pow(len as u32))
                    .filter(|code| {
                        let w: Vec<Sym> = (0..len).map(|p| (code / k.pow(p as u32) % k) as Sym).collect();
                        sys.is_irreducible(&w)
                    })
                    .count() as u64
            })
            .collect()
    }

    #[test]
    fn free_group_spheres() {
        assert_eq!(irreducible_words(&free(1), 2, 100).unwrap().counts, vec![1, 2, 2]);
        assert_eq!(irreducible_words(&free(2), 3, 100).unwrap().counts, vec![1, 4, 12, 36]);
        assert_eq!(brute(&free(2), 4), irreducible_words(&free(2), 4, 1000).unwrap().counts);
    }

    #[test]
    fn empty_alphabet() {
        let sys = RewritingSystem::new(Alphabet::without_inverses([]), []).unwrap();
        assert_eq!(irreducible_words(&sys, 3, 10).unwrap().counts, vec![1, 0, 0, 0]);
    }

    #[test]
    fn overlapping_rules_match_brute_force() {
        let al = plain(3);
        let x = |j: usize| al.letters()[j - 1];
        let rules = [
            Rule::new(vec![x(1), x(2)].into(), vec![x(3)].into()),
            Rule::new(vec![x(2), x(3), x(2)].into(), vec![].into()),
            Rule::new(vec![x(3), x(3)].into(), vec![x(1)].into()),
        ];
        let sys = RewritingSystem::new(al.clone(), rules).unwrap();
        assert_eq!(irreducible_words(&sys, 6, 10_000).unwrap().counts, brute(&sys, 6));
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(irreducible_words(&free(2), 6, 100), Err(Error::CensusCapExceeded(100))));
    }
}
