use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::automaton::FactorAutomaton;
use super::{Mode, RewritingSystem};
use crate::error::Result;
use crate::letter::{Alphabet, Sym, Word};

/// A word with two different normal forms, and how each was reached.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Divergence {
    pub word: Word,
    pub forms: Vec<(String, Word)>,
}

impl Divergence {
    fn strategies(al: &Alphabet, word: &[Sym], forms: [&[Sym]; 3]) -> Self {
        Divergence {
            word: al.decode(word),
            forms: ["leftmost", "rightmost", "random"].iter().zip(forms).map(|(n, f)| (n.to_string(), al.decode(f))).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConfluenceReport {
    pub max_len: usize,
    pub words: u64,
    /// Reducible words, the only ones whose normal forms were compared.
    pub reducible: u64,
    /// First divergent word in shortlex order, if any.
    pub counterexample: Option<Divergence>,
}

impl ConfluenceReport {
    pub fn is_confluent(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Compares leftmost, rightmost and seeded random normal forms on every word
/// of length at most `max_len`. Words with several redexes are also checked
/// branch by branch: contracting any one of them and then normalising must
/// give the same word.
///
/// Words are visited in shortlex order of the alphabet's canonical order,
/// split into independent chunks by length and first letter. Each chunk
/// draws its random choices from its own generator, seeded from `seed`, the
/// length and the letter, so the outcome does not depend on scheduling.
pub fn check_confluence_bounded(
    sys: &RewritingSystem,
    max_len: usize,
    seed: u64,
    step_cap: usize,
) -> Result<ConfluenceReport> {
    // rules longer than every word in range never fire unless something
    // grows words past the bound
    let grows = sys.rules().iter().any(|r| r.rhs.len() > r.lhs.len());
    let restricted;
    let sys = if grows {
        sys
    } else {
        restricted = sys.filtered(|_, r| r.lhs.len() <= max_len);
        &restricted
    };
    let aut = FactorAutomaton::new(sys);
    let width = sys.alphabet().len() as Sym;
    let mut report = ConfluenceReport { max_len, words: 1, reducible: 0, counterexample: None };
    for len in 1..=max_len {
        let chunks: Vec<Result<Chunk>> =
            (0..width).into_par_iter().map(|first| sweep_chunk(sys, &aut, len, first, seed, step_cap)).collect();
        for chunk in chunks {
            let chunk = chunk?;
            report.words += chunk.words;
            report.reducible += chunk.reducible;
            if let Some(d) = chunk.divergence {
                report.counterexample = Some(d);
                return Ok(report);
            }
        }
    }
    Ok(report)
}

struct Chunk {
    words: u64,
    reducible: u64,
    divergence: Option<Divergence>,
}

fn chunk_seed(seed: u64, len: usize, first: Sym) -> u64 {
    seed ^ (len as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ (first as u64 + 1).wrapping_mul(0xC2B2_AE3D_27D4_EB4F)
}

/// All words of length `len` starting with `first`, in lexicographic order.
fn sweep_chunk(
    sys: &RewritingSystem,
    aut: &FactorAutomaton,
    len: usize,
    first: Sym,
    seed: u64,
    step_cap: usize,
) -> Result<Chunk> {
    let width = sys.alphabet().len() as Sym;
    let mut rng = ChaCha8Rng::seed_from_u64(chunk_seed(seed, len, first));
    let mut chunk = Chunk { words: 0, reducible: 0, divergence: None };
    let mut word = vec![0; len];
    word[0] = first;
    // automaton state after each prefix, and the shortest reducible prefix
    let mut states = vec![FactorAutomaton::START; len + 1];
    let mut reducible_from = usize::MAX;
    let mut fixed = 0; // prefix length whose states are current
    let (mut a, mut b, mut c) = (Vec::new(), Vec::new(), Vec::new());
    loop {
        for p in fixed..len {
            if reducible_from <= p {
                break;
            }
            states[p + 1] = aut.step(states[p], word[p]);
            if aut.hit(states[p + 1]) {
                reducible_from = p + 1;
            }
        }
        chunk.words += 1;
        if reducible_from <= len {
            chunk.reducible += 1;
            a.clone_from(&word);
            b.clone_from(&word);
            c.clone_from(&word);
            sys.reduce(&mut a, &mut Mode::Leftmost, step_cap)?;
            sys.reduce(&mut b, &mut Mode::Rightmost, step_cap)?;
            sys.reduce(&mut c, &mut Mode::Random(&mut rng), step_cap)?;
            if a != b || a != c {
                chunk.divergence = Some(Divergence::strategies(sys.alphabet(), &word, [&a, &b, &c]));
                return Ok(chunk);
            }
            let redexes = sys.redexes(&word);
            if redexes.len() > 1 {
                for (p, k) in redexes {
                    b.clone_from(&word);
                    sys.apply(&mut b, p, k);
                    sys.reduce(&mut b, &mut Mode::Leftmost, step_cap)?;
                    if a != b {
                        let al = sys.alphabet();
                        chunk.divergence = Some(Divergence {
                            word: al.decode(&word),
                            forms: vec![
                                ("leftmost".into(), al.decode(&a)),
                                (format!("rule {k} at {p}, then leftmost"), al.decode(&b)),
                            ],
                        });
                        return Ok(chunk);
                    }
                }
            }
        }
        // next word: increment the last position that can be incremented
        let Some(p) = (1..len).rev().find(|&p| word[p] + 1 < width) else {
            return Ok(chunk);
        };
        word[p] += 1;
        for x in &mut word[p + 1..] {
            *x = 0;
        }
        fixed = p;
        if reducible_from > p {
            reducible_from = usize::MAX;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RandomAgreement {
    pub words: usize,
    pub counterexample: Option<Divergence>,
}

/// Compares the three strategies on `count` random words with lengths
/// uniform in 0..=max_len and letters uniform over the alphabet.
pub fn check_random_agreement(
    sys: &RewritingSystem,
    count: usize,
    max_len: usize,
    seed: u64,
    step_cap: usize,
) -> Result<RandomAgreement> {
    let width = sys.alphabet().len();
    let mut words_rng = ChaCha8Rng::seed_from_u64(seed);
    let mut choice_rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(1));
    for k in 0..count {
        let len = if width == 0 { 0 } else { words_rng.random_range(0..=max_len) };
        let word: Vec<Sym> = (0..len).map(|_| words_rng.random_range(0..width) as Sym).collect();
        let (mut a, mut b, mut c) = (word.clone(), word.clone(), word.clone());
        sys.reduce(&mut a, &mut Mode::Leftmost, step_cap)?;
        sys.reduce(&mut b, &mut Mode::Rightmost, step_cap)?;
        sys.reduce(&mut c, &mut Mode::Random(&mut choice_rng), step_cap)?;
        if a != b || a != c {
            return Ok(RandomAgreement {
                words: k + 1,
                counterexample: Some(Divergence::strategies(sys.alphabet(), &word, [&a, &b, &c])),
            });
        }
    }
    Ok(RandomAgreement { words: count, counterexample: None })
}

/// Two one-step reducts of a word in which two left-hand sides overlap or
/// one contains the other.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriticalPair {
    pub word: Word,
    pub first_rule: usize,
    pub second_rule: usize,
    pub left: Word,
    pub right: Word,
    /// Leftmost normal forms of the two reducts.
    pub left_normal: Word,
    pub right_normal: Word,
}

impl CriticalPair {
    pub fn joinable(&self) -> bool {
        self.left_normal == self.right_normal
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriticalPairs {
    pub total: usize,
    /// Non-joinable pairs, at most the requested number.
    pub unjoinable: Vec<CriticalPair>,
}

/// Enumerates all critical pairs and reports those whose reducts have
/// different leftmost normal forms. A diagnostic only: the bounded sweep
/// is the confluence test.
pub fn critical_pairs(sys: &RewritingSystem, limit: usize, step_cap: usize) -> Result<CriticalPairs> {
    let mut out = CriticalPairs { total: 0, unjoinable: Vec::new() };
    let rules = sys.rules().len();
    let mut by_first: Vec<Vec<usize>> = vec![Vec::new(); sys.alphabet().len()];
    for k in 0..rules {
        by_first[sys.rule_syms(k).0[0] as usize].push(k);
    }
    for i in 0..rules {
        let (l1, r1) = sys.rule_syms(i);
        for q in 0..l1.len() {
            for &j in &by_first[l1[q] as usize] {
                let (l2, r2) = sys.rule_syms(j);
                let rest = &l1[q..];
                let (word, left, right) = if l2.len() <= rest.len() {
                    // l2 inside l1 at q
                    if (q == 0 && i == j) || rest[..l2.len()] != l2[..] {
                        continue;
                    }
                    let right = [&l1[..q], r2, &l1[q + l2.len()..]].concat();
                    (l1.to_vec(), r1.to_vec(), right)
                } else {
                    // proper overlap: a suffix of l1 is a prefix of l2
                    if q == 0 || l2[..rest.len()] != rest[..] {
                        continue;
                    }
                    let tail = &l2[rest.len()..];
                    ([l1, tail].concat(), [r1, tail].concat(), [&l1[..q], r2].concat())
                };
                out.total += 1;
                let (mut ln, mut rn) = (left.clone(), right.clone());
                sys.reduce(&mut ln, &mut Mode::Leftmost, step_cap)?;
                sys.reduce(&mut rn, &mut Mode::Leftmost, step_cap)?;
                if ln != rn && out.unjoinable.len() < limit {
                    let al = sys.alphabet();
                    out.unjoinable.push(CriticalPair {
                        word: al.decode(&word),
                        first_rule: i,
                        second_rule: j,
                        left: al.decode(&left),
                        right: al.decode(&right),
                        left_normal: al.decode(&ln),
                        right_normal: al.decode(&rn),
                    });
                }
            }
        }
    }
    Ok(out)
}
