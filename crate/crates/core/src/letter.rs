//! Letters of the subdivided alphabets, words over them, and letter orders.
//!
//! A letter is written `a_1_2` for the subdivided generator a_{1,2}. Letters
//! that were namespaced by a free-product composition carry a factor tag,
//! written as a suffix: `b_1_1@2`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Dense index of a letter inside an [`Alphabet`].
pub type Sym = u32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Klass {
    /// Subdivided involutions.
    A,
    /// Subdivided generators paired with an inverse in class `C`.
    B,
    C,
}

impl Klass {
    pub fn as_char(self) -> char {
        match self {
            Klass::A => 'a',
            Klass::B => 'b',
            Klass::C => 'c',
        }
    }
}

/// One letter x_{i,j}. Field order gives the canonical order:
/// factor, then class a < b < c, then `i`, then `j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub factor: u16,
    pub klass: Klass,
    pub i: u32,
    pub j: u32,
}

impl Letter {
    pub const fn new(klass: Klass, i: u32, j: u32) -> Self {
        Letter { factor: 0, klass, i, j }
    }

    pub const fn a(i: u32, j: u32) -> Self {
        Letter::new(Klass::A, i, j)
    }

    pub const fn b(i: u32, j: u32) -> Self {
        Letter::new(Klass::B, i, j)
    }

    pub const fn c(i: u32, j: u32) -> Self {
        Letter::new(Klass::C, i, j)
    }

    pub fn with_factor(self, factor: u16) -> Self {
        Letter { factor, ..self }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}_{}", self.klass.as_char(), self.i, self.j)?;
        if self.factor > 0 {
            write!(f, "@{}", self.factor)?;
        }
        Ok(())
    }
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("malformed letter `{s}`"));
        let (body, factor) = match s.split_once('@') {
            Some((body, tag)) => (body, tag.parse::<u16>().map_err(|_| bad())?),
            None => (s, 0),
        };
        let mut parts = body.split('_');
        let klass = match parts.next() {
            Some("a") => Klass::A,
            Some("b") => Klass::B,
            Some("c") => Klass::C,
            _ => return Err(bad()),
        };
        let i: u32 = parts.next().and_then(|p| p.parse().ok()).ok_or_else(bad)?;
        let j: u32 = parts.next().and_then(|p| p.parse().ok()).ok_or_else(bad)?;
        if parts.next().is_some() || i == 0 || j == 0 {
            return Err(bad());
        }
        Ok(Letter { factor, klass, i, j })
    }
}

/// A word over letters; the empty word is written `_`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("_");
        }
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl serde::Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let tokens: Vec<&str> = s.split_whitespace().collect();
        if tokens == ["_"] {
            return Ok(Word::empty());
        }
        tokens.into_iter().map(Letter::from_str).collect::<Result<Vec<_>>>().map(Word)
    }
}

/// A finite, canonically sorted set of letters with a (possibly partial)
/// inverse involution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    letters: Vec<Letter>,
    index: HashMap<Letter, Sym>,
    inverse: Vec<Option<Sym>>,
}

impl Alphabet {
    /// Builds an alphabet; `inverse_of` names the inverse letter of each
    /// letter, or `None` when it has none.
    pub fn new<F>(letters: impl IntoIterator<Item = Letter>, inverse_of: F) -> Result<Self>
    where
        F: Fn(&Letter) -> Option<Letter>,
    {
        let mut letters: Vec<Letter> = letters.into_iter().collect();
        letters.sort();
        letters.dedup();
        let index: HashMap<Letter, Sym> =
            letters.iter().enumerate().map(|(k, l)| (*l, k as Sym)).collect();
        let mut inverse = Vec::with_capacity(letters.len());
        for l in &letters {
            match inverse_of(l) {
                Some(inv) => {
                    let s = *index.get(&inv).ok_or(Error::UnknownLetter(inv))?;
                    inverse.push(Some(s));
                }
                None => inverse.push(None),
            }
        }
        for (k, inv) in inverse.iter().enumerate() {
            if let Some(s) = inv {
                if inverse[*s as usize] != Some(k as Sym) {
                    return Err(Error::Parse(format!(
                        "inverse map is not an involution at {}",
                        letters[k]
                    )));
                }
            }
        }
        Ok(Alphabet { letters, index, inverse })
    }

    /// An alphabet without any inverse information.
    pub fn without_inverses(letters: impl IntoIterator<Item = Letter>) -> Self {
        Alphabet::new(letters, |_| None).expect("no inverses to validate")
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn letter(&self, s: Sym) -> Letter {
        self.letters[s as usize]
    }

    pub fn sym(&self, l: &Letter) -> Option<Sym> {
        self.index.get(l).copied()
    }

    pub fn contains(&self, l: &Letter) -> bool {
        self.index.contains_key(l)
    }

    pub fn inverse(&self, s: Sym) -> Option<Sym> {
        self.inverse[s as usize]
    }

    pub fn inverse_letter(&self, l: &Letter) -> Option<Letter> {
        self.sym(l).and_then(|s| self.inverse(s)).map(|s| self.letter(s))
    }

    pub fn is_involution_total(&self) -> bool {
        self.inverse.iter().all(Option::is_some)
    }

    pub fn encode(&self, w: &Word) -> Result<Vec<Sym>> {
        w.0.iter().map(|l| self.sym(l).ok_or(Error::UnknownLetter(*l))).collect()
    }

    pub fn decode(&self, syms: &[Sym]) -> Word {
        Word(syms.iter().map(|&s| self.letter(s)).collect())
    }

    /// Reversed, letterwise-inverted word over symbols.
    pub fn inverse_syms(&self, w: &[Sym]) -> Result<Vec<Sym>> {
        w.iter()
            .rev()
            .map(|&s| self.inverse(s).ok_or(Error::MissingInverse(self.letter(s))))
            .collect()
    }
}

/// Reversed, letterwise-inverted word: x_1...x_k becomes x_k^-1...x_1^-1.
pub fn word_inverse(w: &Word, alphabet: &Alphabet) -> Result<Word> {
    let syms = alphabet.encode(w)?;
    Ok(alphabet.decode(&alphabet.inverse_syms(&syms)?))
}

/// How to build a [`LetterOrder`] once the alphabet is known.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum OrderSpec {
    #[default]
    Canonical,
    Reversed,
    /// Letters from least to greatest; must list every letter exactly once.
    Explicit(Vec<Letter>),
}

impl fmt::Display for OrderSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderSpec::Canonical => f.write_str("canonical"),
            OrderSpec::Reversed => f.write_str("reversed"),
            OrderSpec::Explicit(letters) => {
                let names: Vec<String> = letters.iter().map(Letter::to_string).collect();
                f.write_str(&names.join(","))
            }
        }
    }
}

impl FromStr for OrderSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "canonical" => Ok(OrderSpec::Canonical),
            "reversed" => Ok(OrderSpec::Reversed),
            other => other
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(Letter::from_str)
                .collect::<Result<Vec<_>>>()
                .map(OrderSpec::Explicit),
        }
    }
}

/// A total order on an alphabet, stored as a rank per symbol.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LetterOrder {
    rank: Vec<u32>,
}

impl LetterOrder {
    pub fn canonical(alphabet: &Alphabet) -> Self {
        LetterOrder { rank: (0..alphabet.len() as u32).collect() }
    }

    pub fn reversed(alphabet: &Alphabet) -> Self {
        let n = alphabet.len() as u32;
        LetterOrder { rank: (0..n).map(|k| n - 1 - k).collect() }
    }

    pub fn from_letters(alphabet: &Alphabet, least_first: &[Letter]) -> Result<Self> {
        if least_first.len() != alphabet.len() {
            return Err(Error::InvalidOrder(format!(
                "expected {} letters, got {}",
                alphabet.len(),
                least_first.len()
            )));
        }
        let mut rank = vec![u32::MAX; alphabet.len()];
        for (r, l) in least_first.iter().enumerate() {
            let s = alphabet.sym(l).ok_or(Error::UnknownLetter(*l))? as usize;
            if rank[s] != u32::MAX {
                return Err(Error::InvalidOrder(format!("letter {l} listed twice")));
            }
            rank[s] = r as u32;
        }
        Ok(LetterOrder { rank })
    }

    pub fn from_spec(alphabet: &Alphabet, spec: &OrderSpec) -> Result<Self> {
        match spec {
            OrderSpec::Canonical => Ok(Self::canonical(alphabet)),
            OrderSpec::Reversed => Ok(Self::reversed(alphabet)),
            OrderSpec::Explicit(letters) => Self::from_letters(alphabet, letters),
        }
    }

    pub fn rank(&self, s: Sym) -> u32 {
        self.rank[s as usize]
    }

    /// Letters from least to greatest.
    pub fn sorted_letters(&self, alphabet: &Alphabet) -> Vec<Letter> {
        let mut syms: Vec<Sym> = (0..alphabet.len() as Sym).collect();
        syms.sort_by_key(|&s| self.rank(s));
        syms.into_iter().map(|s| alphabet.letter(s)).collect()
    }

    /// Letterwise lexicographic comparison (a proper prefix is smaller).
    pub fn cmp_lex(&self, u: &[Sym], v: &[Sym]) -> Ordering {
        for (x, y) in u.iter().zip(v) {
            match self.rank(*x).cmp(&self.rank(*y)) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        u.len().cmp(&v.len())
    }

    /// Shortlex: length first, then lexicographic.
    pub fn cmp_shortlex(&self, u: &[Sym], v: &[Sym]) -> Ordering {
        u.len().cmp(&v.len()).then_with(|| self.cmp_lex(u, v))
    }
}
