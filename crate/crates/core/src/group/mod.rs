//! Finite groups given by multiplication tables, generating sets, and the
//! group-theoretic oracles used to check the constructed presentations.

mod abelian;
mod homs;
mod presentation;

pub use abelian::{abelianization, smith_invariants, AbelianInvariants};
pub use homs::{count_homs_group, count_homs_presentation};
pub use presentation::{free_reduce, GenLetter, Presentation};

use std::collections::VecDeque;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite group stored as a full multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
    element_names: Option<Vec<String>>,
}

impl FiniteGroup {
    /// Validates a square table over `0..m` and derives identity and inverses.
    pub fn from_table(table: Vec<Vec<usize>>, identity_hint: Option<usize>) -> Result<Self> {
        let m = table.len();
        if m == 0 {
            return Err(Error::InvalidTable("empty table".into()));
        }
        for (r, row) in table.iter().enumerate() {
            if row.len() != m {
                return Err(Error::InvalidTable(format!("row {r} has {} entries, expected {m}", row.len())));
            }
            if let Some(bad) = row.iter().find(|&&x| x >= m) {
                return Err(Error::InvalidTable(format!("entry {bad} in row {r} is out of range")));
            }
        }
        let flat: Vec<usize> = table.into_iter().flatten().collect();
        let mul = |g: usize, h: usize| flat[g * m + h];

        let is_identity = |e: usize| (0..m).all(|g| mul(e, g) == g && mul(g, e) == g);
        let identity = match identity_hint {
            Some(e) if e < m && is_identity(e) => e,
            _ => (0..m).find(|&e| is_identity(e)).ok_or(Error::NoIdentity)?,
        };

        let mut inverses = Vec::with_capacity(m);
        for g in 0..m {
            let inv = (0..m)
                .find(|&h| mul(g, h) == identity && mul(h, g) == identity)
                .ok_or(Error::NoInverse(g))?;
            inverses.push(inv);
        }

        for a in 0..m {
            for b in 0..m {
                let ab = mul(a, b);
                for c in 0..m {
                    if mul(ab, c) != mul(a, mul(b, c)) {
                        return Err(Error::NotAssociative(a, b, c));
                    }
                }
            }
        }

        Ok(FiniteGroup {
            name: format!("group of order {m}"),
            order: m,
            table: flat,
            identity,
            inverses,
            element_names: None,
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn with_element_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.order {
            return Err(Error::InvalidTable(format!(
                "{} element names for a group of order {}",
                names.len(),
                self.order
            )));
        }
        self.element_names = Some(names);
        Ok(self)
    }

    /// Z/m with table (i + j) mod m.
    pub fn cyclic(m: usize) -> Self {
        assert!(m >= 1, "cyclic group needs a positive order");
        let table = (0..m).map(|i| (0..m).map(|j| (i + j) % m).collect()).collect();
        FiniteGroup::from_table(table, Some(0))
            .expect("cyclic table is a group")
            .with_name(format!("C{m}"))
    }

    /// The Klein four-group, as Z/2 x Z/2 with elements encoded as bit pairs.
    pub fn klein() -> Self {
        let table = (0..4).map(|i| (0..4).map(|j| i ^ j).collect()).collect();
        FiniteGroup::from_table(table, Some(0))
            .expect("xor table is a group")
            .with_name("V4")
            .with_element_names(["e", "a", "b", "ab"].map(String::from).to_vec())
            .unwrap()
    }

    /// The symmetric group on three points. Elements, in order: e, (12),
    /// (13), (23), (123), (132); products compose right to left.
    pub fn symmetric3() -> Self {
        let perms: [[usize; 3]; 6] =
            [[0, 1, 2], [1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1]];
        let find = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let table = (0..6)
            .map(|g| {
                (0..6)
                    .map(|h| {
                        // (g*h)(x) = g(h(x))
                        let p = [0, 1, 2].map(|x| perms[g][perms[h][x]]);
                        find(p)
                    })
                    .collect()
            })
            .collect();
        FiniteGroup::from_table(table, Some(0))
            .expect("permutation table is a group")
            .with_name("S3")
            .with_element_names(["e", "(12)", "(13)", "(23)", "(123)", "(132)"].map(String::from).to_vec())
            .unwrap()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.table[g * self.order + h]
    }

    pub fn inv(&self, g: usize) -> usize {
        self.inverses[g]
    }

    pub fn inverses(&self) -> &[usize] {
        &self.inverses
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn element_name(&self, g: usize) -> String {
        match &self.element_names {
            Some(names) => names[g].clone(),
            None => g.to_string(),
        }
    }

    pub fn element_names(&self) -> Option<&[String]> {
        self.element_names.as_deref()
    }

    /// Multiplicative order of `g`.
    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    /// Resolves a generator token: an element index, or an element name.
    pub fn resolve_element(&self, token: &str) -> Result<usize> {
        if let Some(names) = &self.element_names {
            if let Some(g) = names.iter().position(|n| n == token) {
                return Ok(g);
            }
        }
        match token.parse::<usize>() {
            Ok(g) if g < self.order => Ok(g),
            Ok(g) => Err(Error::GeneratorOutOfRange(g)),
            Err(_) => Err(Error::Parse(format!("unknown element `{token}`"))),
        }
    }
}

/// A validated finite inverse-closed generating set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenSet {
    elements: Vec<usize>,
}

impl GenSet {
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// All non-identity elements in index order.
    pub fn all_nonidentity(g: &FiniteGroup) -> GenSet {
        GenSet { elements: (0..g.order()).filter(|&x| x != g.identity()).collect() }
    }
}

/// Checks that `elements` avoids the identity, is inverse-closed, and
/// generates `g`.
pub fn check_genset(g: &FiniteGroup, elements: &[usize]) -> Result<GenSet> {
    let mut seen = vec![false; g.order()];
    for &x in elements {
        if x >= g.order() {
            return Err(Error::GeneratorOutOfRange(x));
        }
        if seen[x] {
            return Err(Error::DuplicateGenerator(x));
        }
        seen[x] = true;
    }
    if elements.contains(&g.identity()) {
        return Err(Error::ContainsIdentity);
    }
    if let Some(&x) = elements.iter().find(|&&x| !seen[g.inv(x)]) {
        return Err(Error::NotInverseClosed(x));
    }
    let mut reached = vec![false; g.order()];
    reached[g.identity()] = true;
    let mut queue = VecDeque::from([g.identity()]);
    while let Some(h) = queue.pop_front() {
        for &s in elements {
            let k = g.mul(h, s);
            if !reached[k] {
                reached[k] = true;
                queue.push_back(k);
            }
        }
    }
    if let Some(unreached) = reached.iter().position(|r| !r) {
        return Err(Error::DoesNotGenerate(unreached));
    }
    Ok(GenSet { elements: elements.to_vec() })
}

/// Σ split into involutions (Σ₁) and inverse pairs (Σ₂, Σ₃ with
/// `sigma3[i] = sigma2[i]⁻¹`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenPartition {
    pub sigma1: Vec<usize>,
    pub sigma2: Vec<usize>,
    pub sigma3: Vec<usize>,
}

impl GenPartition {
    pub fn m1(&self) -> usize {
        self.sigma1.len()
    }

    pub fn m2(&self) -> usize {
        self.sigma2.len()
    }
}

/// Involutions go to Σ₁ in list order; for every other inverse pair the
/// element listed first goes to Σ₂.
pub fn partition_generators(g: &FiniteGroup, sigma: &GenSet) -> GenPartition {
    let mut part = GenPartition { sigma1: Vec::new(), sigma2: Vec::new(), sigma3: Vec::new() };
    for &x in sigma.elements() {
        let inv = g.inv(x);
        if inv == x {
            part.sigma1.push(x);
        } else if !part.sigma3.contains(&x) {
            part.sigma2.push(x);
            part.sigma3.push(inv);
        }
    }
    part
}

/// On-disk group description.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSpec {
    pub name: String,
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    pub generators: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub element_names: Option<Vec<String>>,
}

impl GroupSpec {
    pub fn from_group(g: &FiniteGroup, generators: &[usize]) -> Self {
        GroupSpec {
            name: g.name().to_string(),
            order: g.order(),
            table: g.rows(),
            generators: generators.to_vec(),
            element_names: g.element_names().map(<[String]>::to_vec),
        }
    }

    pub fn build(&self) -> Result<(FiniteGroup, GenSet)> {
        if self.order != self.table.len() {
            return Err(Error::InvalidTable(format!(
                "declared order {} but table has {} rows",
                self.order,
                self.table.len()
            )));
        }
        let mut g = FiniteGroup::from_table(self.table.clone(), None)?.with_name(self.name.clone());
        if let Some(names) = &self.element_names {
            g = g.with_element_names(names.clone())?;
        }
        let gens = check_genset(&g, &self.generators)?;
        Ok((g, gens))
    }
}

/// Where a group comes from: a built-in shorthand or a JSON file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSource {
    Cyclic(usize),
    Klein,
    Symmetric3,
    File(String),
}

impl FromStr for GroupSource {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if let Some(m) = s.strip_prefix("cyclic:") {
            let m: usize = m.parse().map_err(|_| Error::Parse(format!("bad cyclic order in `{s}`")))?;
            if m == 0 {
                return Err(Error::Parse("cyclic order must be positive".into()));
            }
            return Ok(GroupSource::Cyclic(m));
        }
        match s {
            "klein" | "v4" => Ok(GroupSource::Klein),
            "s3" | "symmetric:3" => Ok(GroupSource::Symmetric3),
            _ => {
                if let Some(m) = s.strip_prefix('c').and_then(|m| m.parse::<usize>().ok()) {
                    if m > 0 {
                        return Ok(GroupSource::Cyclic(m));
                    }
                }
                Ok(GroupSource::File(s.to_string()))
            }
        }
    }
}

impl GroupSource {
    /// Loads the group; for files, also returns the generators the file names.
    pub fn load(&self) -> Result<(FiniteGroup, Option<Vec<usize>>)> {
        match self {
            GroupSource::Cyclic(m) => Ok((FiniteGroup::cyclic(*m), None)),
            GroupSource::Klein => Ok((FiniteGroup::klein(), None)),
            GroupSource::Symmetric3 => Ok((FiniteGroup::symmetric3(), None)),
            GroupSource::File(path) => {
                let spec = load_group_spec(Path::new(path))?;
                let gens = spec.generators.clone();
                let (g, _) = spec.build()?;
                Ok((g, Some(gens)))
            }
        }
    }
}

pub fn load_group_spec(path: &Path) -> Result<GroupSpec> {
    let text = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}
