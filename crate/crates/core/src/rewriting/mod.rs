//! String rewriting over an alphabet with an inverse involution.

mod automaton;
mod census;
mod confluence;

pub use census::{for_each_irreducible, irreducible_words, Census};
pub use confluence::{
    check_confluence_bounded, check_random_agreement, critical_pairs, ConfluenceReport, CriticalPair, CriticalPairs,
    Divergence, RandomAgreement,
};

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::letter::{Alphabet, Letter, Sym, Word};

/// A rewriting rule lhs → rhs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: Word,
}

impl Rule {
    pub fn new(lhs: Word, rhs: Word) -> Self {
        Rule { lhs, rhs }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.lhs, self.rhs)
    }
}

impl FromStr for Rule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (l, r) = s.split_once("->").ok_or_else(|| Error::Parse(format!("rule `{s}` has no `->`")))?;
        Ok(Rule { lhs: l.parse()?, rhs: r.parse()? })
    }
}

/// Which redex a rewrite step contracts.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// Leftmost start position; at a tie the longest lhs, then the earliest rule.
    #[default]
    Leftmost,
    /// Rightmost start position; at a tie the longest lhs, then the earliest rule.
    Rightmost,
    /// Uniformly random among all redexes, from a seeded generator.
    Random { seed: u64 },
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Strategy::Leftmost => f.write_str("leftmost"),
            Strategy::Rightmost => f.write_str("rightmost"),
            Strategy::Random { seed } => write!(f, "random:{seed}"),
        }
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "leftmost" => Ok(Strategy::Leftmost),
            "rightmost" => Ok(Strategy::Rightmost),
            "random" => Ok(Strategy::Random { seed: 0 }),
            _ => s
                .strip_prefix("random:")
                .and_then(|t| t.parse().ok())
                .map(|seed| Strategy::Random { seed })
                .ok_or_else(|| Error::Parse(format!("unknown strategy `{s}`"))),
        }
    }
}

/// Strategy with its live random state.
pub(crate) enum Mode<'a> {
    Leftmost,
    Rightmost,
    Random(&'a mut ChaCha8Rng),
}

/// One contraction: the rewritten word, the rule used and where.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rewrite {
    pub word: Word,
    pub rule: usize,
    pub position: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm {
    pub word: Word,
    pub steps: usize,
}

/// Default bound on rewrite steps per normal-form computation.
pub const DEFAULT_STEP_CAP: usize = 100_000;

/// An alphabet and a deduplicated list of rules over it.
#[derive(Clone, Debug)]
pub struct RewritingSystem {
    alphabet: Alphabet,
    rules: Vec<Rule>,
    lhs: Vec<Vec<Sym>>,
    rhs: Vec<Vec<Sym>>,
    /// Rules by first lhs symbol, longest lhs first, then list order.
    by_first: Vec<Vec<u32>>,
    max_lhs: usize,
}

impl PartialEq for RewritingSystem {
    fn eq(&self, other: &Self) -> bool {
        self.alphabet == other.alphabet && self.rules == other.rules
    }
}

impl RewritingSystem {
    /// Validates and indexes `rules`; exact duplicates are dropped, keeping
    /// the first occurrence.
    pub fn new(alphabet: Alphabet, rules: impl IntoIterator<Item = Rule>) -> Result<Self> {
        let mut seen = HashSet::new();
        let mut kept = Vec::new();
        let mut lhs = Vec::new();
        let mut rhs = Vec::new();
        for rule in rules {
            if rule.lhs.is_empty() {
                return Err(Error::InvalidRule(format!("empty left-hand side in `{rule}`")));
            }
            if rule.lhs == rule.rhs {
                return Err(Error::InvalidRule(format!("trivial rule `{rule}`")));
            }
            let l = alphabet.encode(&rule.lhs)?;
            let r = alphabet.encode(&rule.rhs)?;
            if seen.insert(rule.clone()) {
                lhs.push(l);
                rhs.push(r);
                kept.push(rule);
            }
        }
        let mut by_first: Vec<Vec<u32>> = vec![Vec::new(); alphabet.len()];
        for (k, l) in lhs.iter().enumerate() {
            by_first[l[0] as usize].push(k as u32);
        }
        for bucket in &mut by_first {
            bucket.sort_by_key(|&k| (std::cmp::Reverse(lhs[k as usize].len()), k));
        }
        let max_lhs = lhs.iter().map(Vec::len).max().unwrap_or(0);
        Ok(RewritingSystem { alphabet, rules: kept, lhs, rhs, by_first, max_lhs })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn rule_syms(&self, k: usize) -> (&[Sym], &[Sym]) {
        (&self.lhs[k], &self.rhs[k])
    }

    pub fn max_lhs_len(&self) -> usize {
        self.max_lhs
    }

    /// The same alphabet with the rules for which `keep` holds.
    pub fn filtered(&self, mut keep: impl FnMut(usize, &Rule) -> bool) -> RewritingSystem {
        let rules: Vec<Rule> = self.rules.iter().enumerate().filter(|(k, r)| keep(*k, r)).map(|(_, r)| r.clone()).collect();
        RewritingSystem::new(self.alphabet.clone(), rules).expect("subset of valid rules")
    }

    /// Rule applying at position `p` under the leftmost/rightmost tie-break.
    fn match_at(&self, w: &[Sym], p: usize) -> Option<usize> {
        self.by_first[w[p] as usize]
            .iter()
            .map(|&k| k as usize)
            .find(|&k| {
                let l = &self.lhs[k];
                p + l.len() <= w.len() && w[p..p + l.len()] == l[..]
            })
    }

    /// Every (position, rule) pair at which a rule applies.
    pub fn redexes(&self, w: &[Sym]) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for p in 0..w.len() {
            for &k in &self.by_first[w[p] as usize] {
                let l = &self.lhs[k as usize];
                if p + l.len() <= w.len() && w[p..p + l.len()] == l[..] {
                    out.push((p, k as usize));
                }
            }
        }
        out
    }

    pub fn is_irreducible(&self, w: &[Sym]) -> bool {
        (0..w.len()).all(|p| self.match_at(w, p).is_none())
    }

    fn select(&self, w: &[Sym], mode: &mut Mode<'_>) -> Option<(usize, usize)> {
        match mode {
            Mode::Leftmost => (0..w.len()).find_map(|p| self.match_at(w, p).map(|k| (p, k))),
            Mode::Rightmost => (0..w.len()).rev().find_map(|p| self.match_at(w, p).map(|k| (p, k))),
            Mode::Random(rng) => {
                let all = self.redexes(w);
                (!all.is_empty()).then(|| all[rng.random_range(0..all.len())])
            }
        }
    }

    pub(crate) fn apply(&self, w: &mut Vec<Sym>, p: usize, k: usize) {
        w.splice(p..p + self.lhs[k].len(), self.rhs[k].iter().copied());
    }

    /// Contracts one redex of `w`, or returns `None` when `w` is irreducible.
    pub fn rewrite_step(&self, w: &Word, strategy: Strategy) -> Result<Option<Rewrite>> {
        let mut syms = self.alphabet.encode(w)?;
        let mut rng = rng_for(strategy);
        let mut mode = mode_for(strategy, &mut rng);
        Ok(self.select(&syms, &mut mode).map(|(p, k)| {
            self.apply(&mut syms, p, k);
            Rewrite { word: self.alphabet.decode(&syms), rule: k, position: p }
        }))
    }

    /// Rewrites `w` until irreducible. `step_cap` guards against systems
    /// that do not terminate.
    pub fn normal_form(&self, w: &Word, strategy: Strategy, step_cap: usize) -> Result<NormalForm> {
        let mut syms = self.alphabet.encode(w)?;
        let mut rng = rng_for(strategy);
        let steps = self.reduce(&mut syms, &mut mode_for(strategy, &mut rng), step_cap)?;
        Ok(NormalForm { word: self.alphabet.decode(&syms), steps })
    }

    /// Normal form over symbols, in place; returns the number of steps.
    pub fn normal_form_syms(&self, w: &mut Vec<Sym>, strategy: Strategy, step_cap: usize) -> Result<usize> {
        let mut rng = rng_for(strategy);
        self.reduce(w, &mut mode_for(strategy, &mut rng), step_cap)
    }

    pub(crate) fn reduce(&self, w: &mut Vec<Sym>, mode: &mut Mode<'_>, step_cap: usize) -> Result<usize> {
        let mut steps = 0;
        let mut bump = || {
            steps += 1;
            if steps > step_cap {
                Err(Error::StepCapExceeded(step_cap))
            } else {
                Ok(())
            }
        };
        match mode {
            Mode::Leftmost => {
                // no redex starts before `p`; a rewrite at p can only create
                // redexes starting within max_lhs - 1 positions to its left
                let mut p = 0;
                while p < w.len() {
                    match self.match_at(w, p) {
                        Some(k) => {
                            bump()?;
                            self.apply(w, p, k);
                            p = p.saturating_sub(self.max_lhs - 1);
                        }
                        None => p += 1,
                    }
                }
            }
            Mode::Rightmost => {
                // no redex starts at `p` or later
                let mut p = w.len();
                while p > 0 {
                    let q = p - 1;
                    match self.match_at(w, q) {
                        Some(k) => {
                            bump()?;
                            self.apply(w, q, k);
                            p = (q + self.rhs[k].len()).min(w.len());
                        }
                        None => p = q,
                    }
                }
            }
            Mode::Random(_) => {
                while let Some((p, k)) = self.select(w, mode) {
                    bump()?;
                    self.apply(w, p, k);
                }
            }
        }
        Ok(steps)
    }

    /// Every letter has an inverse, x x⁻¹ and x⁻¹ x reduce to the empty word,
    /// and no single letter does.
    pub fn is_inverse_closed(&self, step_cap: usize) -> Result<bool> {
        if !self.alphabet.is_involution_total() {
            return Ok(false);
        }
        for s in 0..self.alphabet.len() as Sym {
            let inv = self.alphabet.inverse(s).expect("total involution");
            let mut single = vec![s];
            self.normal_form_syms(&mut single, Strategy::Leftmost, step_cap)?;
            if single.is_empty() {
                return Ok(false);
            }
            for mut pair in [vec![s, inv], vec![inv, s]] {
                self.normal_form_syms(&mut pair, Strategy::Leftmost, step_cap)?;
                if !pair.is_empty() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// First rule with |lhs| ≤ |rhs|, if any.
    pub fn length_violation(&self) -> Option<&Rule> {
        self.rules.iter().find(|r| r.lhs.len() <= r.rhs.len())
    }

    pub fn is_length_reducing(&self) -> bool {
        self.length_violation().is_none()
    }

    /// Union of two systems on disjoint alphabets.
    pub fn disjoint_union(&self, other: &RewritingSystem) -> Result<RewritingSystem> {
        if let Some(l) = other.alphabet.letters().iter().find(|l| self.alphabet.contains(l)) {
            return Err(Error::AlphabetCollision(*l));
        }
        let inverse: BTreeMap<Letter, Letter> = [&self.alphabet, &other.alphabet]
            .into_iter()
            .flat_map(|a| a.letters().iter().filter_map(move |l| a.inverse_letter(l).map(|i| (*l, i))))
            .collect();
        let letters = self.alphabet.letters().iter().chain(other.alphabet.letters()).copied();
        let alphabet = Alphabet::new(letters, |l| inverse.get(l).copied())?;
        RewritingSystem::new(alphabet, self.rules.iter().chain(&other.rules).cloned())
    }

    /// One rule per line, `LHS -> RHS`.
    pub fn rules_text(&self) -> String {
        format_rules(&self.rules)
    }

    /// Builds a system from rules text. The alphabet is the set of letters
    /// used; x and y are taken to be inverse when both xy -> _ and yx -> _
    /// are rules, and x is self-inverse when xx -> _ is.
    pub fn from_rules_text(text: &str) -> Result<RewritingSystem> {
        let rules = parse_rules(text)?;
        let letters: Vec<Letter> = rules.iter().flat_map(|r| r.lhs.0.iter().chain(&r.rhs.0)).copied().collect();
        let cancels: HashSet<(Letter, Letter)> = rules
            .iter()
            .filter(|r| r.rhs.is_empty() && r.lhs.len() == 2)
            .map(|r| (r.lhs.0[0], r.lhs.0[1]))
            .collect();
        let mut inverse = BTreeMap::new();
        for &(x, y) in &cancels {
            if cancels.contains(&(y, x)) && !inverse.contains_key(&x) && !inverse.contains_key(&y) {
                inverse.insert(x, y);
                inverse.insert(y, x);
            }
        }
        let alphabet = Alphabet::new(letters, |l| inverse.get(l).copied())?;
        RewritingSystem::new(alphabet, rules)
    }

    pub fn to_file(&self) -> SystemFile {
        SystemFile {
            alphabet: self.alphabet.letters().iter().map(Letter::to_string).collect(),
            involution: self
                .alphabet
                .letters()
                .iter()
                .filter_map(|l| self.alphabet.inverse_letter(l).map(|i| (l.to_string(), i.to_string())))
                .collect(),
            rules: self.rules.iter().map(|r| RuleEntry { lhs: r.lhs.to_string(), rhs: r.rhs.to_string() }).collect(),
        }
    }

    pub fn from_file(file: &SystemFile) -> Result<RewritingSystem> {
        let letters = file.alphabet.iter().map(|s| s.parse()).collect::<Result<Vec<Letter>>>()?;
        let mut inverse = BTreeMap::new();
        for (k, v) in &file.involution {
            inverse.insert(k.parse::<Letter>()?, v.parse::<Letter>()?);
        }
        let alphabet = Alphabet::new(letters, |l| inverse.get(l).copied())?;
        let rules = file
            .rules
            .iter()
            .map(|e| Ok(Rule { lhs: e.lhs.parse()?, rhs: e.rhs.parse()? }))
            .collect::<Result<Vec<_>>>()?;
        RewritingSystem::new(alphabet, rules)
    }

    /// Loads a system from JSON (as written by [`SystemFile`]) or, failing
    /// that, from rules text.
    pub fn load(text: &str) -> Result<RewritingSystem> {
        if text.trim_start().starts_with('{') {
            let file: SystemFile = serde_json::from_str(text)?;
            RewritingSystem::from_file(&file)
        } else {
            RewritingSystem::from_rules_text(text)
        }
    }
}

fn rng_for(strategy: Strategy) -> ChaCha8Rng {
    match strategy {
        Strategy::Random { seed } => ChaCha8Rng::seed_from_u64(seed),
        _ => ChaCha8Rng::seed_from_u64(0),
    }
}

fn mode_for(strategy: Strategy, rng: &mut ChaCha8Rng) -> Mode<'_> {
    match strategy {
        Strategy::Leftmost => Mode::Leftmost,
        Strategy::Rightmost => Mode::Rightmost,
        Strategy::Random { .. } => Mode::Random(rng),
    }
}

/// Serialised form of a system; other fields in the document are ignored.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemFile {
    pub alphabet: Vec<String>,
    pub involution: BTreeMap<String, String>,
    pub rules: Vec<RuleEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleEntry {
    pub lhs: String,
    pub rhs: String,
}

/// Parses rules text: one `LHS -> RHS` per line, `#` starts a comment.
pub fn parse_rules(text: &str) -> Result<Vec<Rule>> {
    text.lines()
        .enumerate()
        .filter_map(|(k, line)| {
            let line = line.split('#').next().unwrap_or("").trim();
            (!line.is_empty()).then(|| line.parse::<Rule>().map_err(|e| Error::Parse(format!("line {}: {e}", k + 1))))
        })
        .collect()
}

pub fn format_rules(rules: &[Rule]) -> String {
    rules.iter().map(|r| format!("{r}\n")).collect()
}

#[cfg(test)]
pub(crate) mod testing {
    use super::*;
    use crate::letter::Klass;

    /// Free reduction on `k` generators b_{i,1} with inverses c_{i,1}.
    pub fn free(k: u32) -> RewritingSystem {
        let mut letters = Vec::new();
        let mut rules = Vec::new();
        for i in 1..=k {
            let (b, c) = (Letter::b(i, 1), Letter::c(i, 1));
            letters.extend([b, c]);
            rules.push(Rule::new(Word(vec![b, c]), Word::empty()));
            rules.push(Rule::new(Word(vec![c, b]), Word::empty()));
        }
        let alphabet = Alphabet::new(letters, |l| {
            Some(Letter::new(if l.klass == Klass::B { Klass::C } else { Klass::B }, l.i, l.j))
        })
        .unwrap();
        RewritingSystem::new(alphabet, rules).unwrap()
    }

    pub fn word(s: &str) -> Word {
        s.parse().unwrap()
    }

    /// Letters `a_1_1`, `a_1_2`, … standing in for arbitrary symbols.
    pub fn plain(k: u32) -> Alphabet {
        Alphabet::without_inverses((1..=k).map(|j| Letter::a(1, j)))
    }
}

#[cfg(test)]
mod tests {
    use super::testing::*;
    use super::*;

    #[test]
    fn single_steps() {
        let sys = free(1);
        let r = sys.rewrite_step(&word("b_1_1 c_1_1"), Strategy::Leftmost).unwrap().unwrap();
        assert_eq!((r.word, r.position), (Word::empty(), 0));
        assert!(sys.rewrite_step(&word("b_1_1 b_1_1"), Strategy::Leftmost).unwrap().is_none());

        let p = Letter::a(1, 2);
        let sys = RewritingSystem::new(plain(2), [Rule::new(Word(vec![p, p]), Word::empty())]).unwrap();
        let r = sys.rewrite_step(&Word(vec![p, p, p]), Strategy::Leftmost).unwrap().unwrap();
        assert_eq!((r.word, r.position), (Word(vec![p]), 0));
        let r = sys.rewrite_step(&Word(vec![p, p, p]), Strategy::Rightmost).unwrap().unwrap();
        assert_eq!((r.word, r.position), (Word(vec![p]), 1));
    }

    #[test]
    fn longest_lhs_wins_at_a_position() {
        let (x, y) = (Letter::a(1, 1), Letter::a(1, 2));
        let rules = [Rule::new(Word(vec![x]), Word::empty()), Rule::new(Word(vec![x, y]), Word(vec![y, y, y]))];
        let sys = RewritingSystem::new(plain(2), rules).unwrap();
        let r = sys.rewrite_step(&Word(vec![x, y]), Strategy::Leftmost).unwrap().unwrap();
        assert_eq!(r.rule, 1);
    }

    #[test]
    fn normal_forms() {
        let sys = free(2);
        for s in [Strategy::Leftmost, Strategy::Rightmost, Strategy::Random { seed: 7 }] {
            let nf = sys.normal_form(&word("b_1_1 b_2_1 c_2_1 c_1_1 b_1_1"), s, 100).unwrap();
            assert_eq!(nf.word, word("b_1_1"));
            assert_eq!(nf.steps, 2);
            assert_eq!(sys.normal_form(&Word::empty(), s, 100).unwrap().word, Word::empty());
        }
    }

    #[test]
    fn step_cap_stops_loops() {
        let (x, y) = (Letter::a(1, 1), Letter::a(1, 2));
        let rules = [Rule::new(Word(vec![x]), Word(vec![y])), Rule::new(Word(vec![y]), Word(vec![x]))];
        let sys = RewritingSystem::new(plain(2), rules).unwrap();
        assert!(matches!(sys.normal_form(&Word(vec![x]), Strategy::Leftmost, 50), Err(Error::StepCapExceeded(50))));
    }

    #[test]
    fn invalid_rules() {
        let x = Letter::a(1, 1);
        assert!(RewritingSystem::new(plain(1), [Rule::new(Word::empty(), Word(vec![x]))]).is_err());
        assert!(RewritingSystem::new(plain(1), [Rule::new(Word(vec![x]), Word(vec![x]))]).is_err());
        assert!(RewritingSystem::new(plain(1), [Rule::new(Word(vec![Letter::b(1, 1)]), Word::empty())]).is_err());
        let dup = RewritingSystem::new(plain(1), vec![Rule::new(Word(vec![x, x]), Word::empty()); 3]).unwrap();
        assert_eq!(dup.rules().len(), 1);
    }

    #[test]
    fn inverse_closedness() {
        assert!(free(2).is_inverse_closed(100).unwrap());
        let bare = RewritingSystem::new(Alphabet::new([Letter::a(1, 1)], |l| Some(*l)).unwrap(), []).unwrap();
        assert!(!bare.is_inverse_closed(100).unwrap());
        let no_inverse = RewritingSystem::new(plain(1), []).unwrap();
        assert!(!no_inverse.is_inverse_closed(100).unwrap());
    }

    #[test]
    fn length_reduction() {
        assert!(free(1).is_length_reducing());
        assert!(RewritingSystem::new(plain(1), []).unwrap().is_length_reducing());
        let (x, y) = (Letter::a(1, 1), Letter::a(1, 2));
        let sys = RewritingSystem::new(plain(2), [Rule::new(Word(vec![x, x]), Word(vec![y, y]))]).unwrap();
        assert_eq!(sys.length_violation().map(|r| r.lhs.len()), Some(2));
    }

    #[test]
    fn rules_text_round_trip() {
        let sys = free(2);
        let text = sys.rules_text();
        assert!(text.contains("b_1_1 c_1_1 -> _\n"));
        let back = RewritingSystem::from_rules_text(&format!("# free group\n\n{text}")).unwrap();
        assert_eq!(back, sys);
        assert!(parse_rules("a_1_1 a_1_1").is_err());
    }

    #[test]
    fn json_round_trip() {
        let sys = free(2);
        let text = serde_json::to_string(&sys.to_file()).unwrap();
        assert_eq!(RewritingSystem::load(&text).unwrap(), sys);
    }

    #[test]
    fn union_needs_disjoint_alphabets() {
        let a = free(1);
        assert!(matches!(a.disjoint_union(&a), Err(Error::AlphabetCollision(_))));
        let b = RewritingSystem::new(Alphabet::new([Letter::a(1, 1)], |l| Some(*l)).unwrap(), []).unwrap();
        let u = a.disjoint_union(&b).unwrap();
        assert_eq!((u.alphabet().len(), u.rules().len()), (3, 2));
        assert_eq!(u.alphabet().inverse_letter(&Letter::a(1, 1)), Some(Letter::a(1, 1)));
    }

    #[test]
    fn strategy_syntax() {
        for s in ["leftmost", "rightmost", "random:42"] {
            assert_eq!(s.parse::<Strategy>().unwrap().to_string(), s);
        }
        assert!("middle".parse::<Strategy>().is_err());
    }

    mod props {
        use super::*;
        use crate::letter::word_inverse;
        use proptest::prelude::{prop_assert, prop_assert_eq, proptest};
        use proptest::strategy::Strategy as _;

        fn free_word() -> impl proptest::strategy::Strategy<Value = Word> {
            proptest::collection::vec((1u32..=2, proptest::bool::ANY), 0..16).prop_map(|v| {
                Word(v.into_iter().map(|(i, b)| if b { Letter::b(i, 1) } else { Letter::c(i, 1) }).collect())
            })
        }

        proptest! {
            #[test]
            fn idempotent_and_inverse_collapse(w in free_word(), seed in 0u64..1000) {
                let sys = free(2);
                let nf = sys.normal_form(&w, super::Strategy::Random { seed }, 1000).unwrap().word;
                let again = sys.normal_form(&nf, super::Strategy::Leftmost, 1000).unwrap();
                prop_assert_eq!(again.steps, 0);
                prop_assert_eq!(&again.word, &nf);
                let mut both = w.clone();
                both.0.extend(word_inverse(&w, sys.alphabet()).unwrap().0);
                prop_assert!(sys.normal_form(&both, super::Strategy::Leftmost, 1000).unwrap().word.is_empty());
                prop_assert_eq!(word_inverse(&word_inverse(&w, sys.alphabet()).unwrap(), sys.alphabet()).unwrap(), w);
            }

            #[test]
            fn steps_shrink_words(w in free_word()) {
                let sys = free(2);
                let mut cur = w.clone();
                let mut steps = 0;
                while let Some(r) = sys.rewrite_step(&cur, super::Strategy::Rightmost).unwrap() {
                    prop_assert!(r.word.len() < cur.len());
                    cur = r.word;
                    steps += 1;
                }
                prop_assert!(steps <= w.len());
            }
        }
    }
}
