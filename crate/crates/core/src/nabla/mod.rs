//! Rewriting systems read off subdivided Cayley graphs, and the operations
//! relating them: free products and iterated subdivision.

mod iterated;

pub use iterated::{iterated_subdivision, phi_bijection};

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::{
    cayley_graph, enumerate_embedded_circuits, lift_circuits, subdivide, subdivided_alphabet, Circuit, LabeledGraph,
    LetterPartition, SlexTree, SubdivisionMap,
};
use crate::group::{partition_generators, FiniteGroup, GenLetter, GenPartition, GenSet, Presentation};
use crate::letter::{Alphabet, Letter, LetterOrder, OrderSpec, Word};
use crate::rewriting::{Rule, RewritingSystem};

/// How a rule arises in the subdivided graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum RuleKind {
    /// x x⁻¹ -> _ read along a path u v u.
    #[serde(rename = "R1")]
    Backtrack,
    /// The longer arc of an odd circuit rewrites to the shorter one.
    #[serde(rename = "R2")]
    OddCircuit,
    /// One half of an even circuit rewrites to the other half.
    #[serde(rename = "R3")]
    EvenCircuit,
}

impl RuleKind {
    pub fn tag(self) -> &'static str {
        match self {
            RuleKind::Backtrack => "R1",
            RuleKind::OddCircuit => "R2",
            RuleKind::EvenCircuit => "R3",
        }
    }
}

/// Where a rule was first found: the backtrack path u v u, or the circuit
/// as a closed vertex sequence that starts where both sides of the rule
/// start and runs along the left-hand side first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RuleOrigin {
    pub kind: RuleKind,
    pub path: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuleRecord {
    pub rule: Rule,
    pub origin: RuleOrigin,
}

/// The subdivided alphabet of a generator partition: (m1 + 2 m2)(2n+1)
/// letters with a_{i,j} inverse to a_{i,2n+2-j} and b_{i,j} to c_{i,j}.
pub fn build_alphabet(part: &GenPartition, n: usize) -> Alphabet {
    subdivided_alphabet(part.m1(), part.m2(), n)
}

/// Rules of a labelled graph given all of its embedded circuits.
///
/// Every directed edge u -> v gives L(u,v) L(v,u) -> _. Every circuit is cut
/// at each of its vertices, in both directions, into an arc of half its
/// length rounded up and the complementary arc between the same endpoints.
/// The pair becomes a rule when the shorter (or, for even circuits, the
/// other) arc reads the slex-least word between its endpoints in the whole
/// graph. Rules are deduplicated, keeping the first origin found.
pub fn enumerate_rules(graph: &LabeledGraph, circuits: &[Circuit], order: &LetterOrder) -> Result<Vec<RuleRecord>> {
    let alphabet = graph.alphabet();
    let trees: Vec<SlexTree> =
        (0..graph.vertex_count()).into_par_iter().map(|u| SlexTree::new(graph, u, order)).collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for u in 0..graph.vertex_count() {
        for &(v, s) in graph.neighbors(u) {
            let back = graph.label(v, u).expect("edges are symmetric");
            let rule = Rule::new(alphabet.decode(&[s, back]), Word::empty());
            if seen.insert(rule.clone()) {
                out.push(RuleRecord { rule, origin: RuleOrigin { kind: RuleKind::Backtrack, path: vec![u, v, u] } });
            }
        }
    }
    let found: Vec<Vec<RuleRecord>> =
        circuits.par_iter().map(|c| circuit_rules(graph, &trees, c)).collect::<Result<_>>()?;
    for record in found.into_iter().flatten() {
        if seen.insert(record.rule.clone()) {
            out.push(record);
        }
    }
    Ok(out)
}

fn circuit_rules(graph: &LabeledGraph, trees: &[SlexTree], c: &Circuit) -> Result<Vec<RuleRecord>> {
    let len = c.len();
    if len < 3 {
        return Ok(Vec::new());
    }
    let kind = if len % 2 == 1 { RuleKind::OddCircuit } else { RuleKind::EvenCircuit };
    let long = len.div_ceil(2);
    let mut out = Vec::new();
    for p in 0..len {
        for forward in [true, false] {
            let at = |k: usize| if forward { c.at(p + k) } else { c.at(p + len - k) };
            let alpha: Vec<usize> = (0..=long).map(at).collect();
            let beta: Vec<usize> = (0..=len - long).map(|k| at(len - k)).collect();
            let lhs = graph.path_label(&alpha).expect("circuit edges exist");
            let rhs = graph.path_label(&beta).expect("circuit edges exist");
            if lhs == rhs || trees[alpha[0]].word(alpha[long])? != rhs {
                continue;
            }
            let alphabet = graph.alphabet();
            let mut closed = alpha;
            closed.extend(beta.iter().rev().skip(1));
            out.push(RuleRecord {
                rule: Rule::new(alphabet.decode(&lhs), alphabet.decode(&rhs)),
                origin: RuleOrigin { kind, path: closed },
            });
        }
    }
    Ok(out)
}

/// The system of a finite group and generating set at subdivision depth n,
/// with everything it was built from.
#[derive(Clone, Debug)]
pub struct NablaSystem {
    group: FiniteGroup,
    generators: Vec<usize>,
    partition: GenPartition,
    n: usize,
    order: OrderSpec,
    base: LabeledGraph,
    graph: LabeledGraph,
    map: SubdivisionMap,
    circuits: Vec<Circuit>,
    system: RewritingSystem,
    origins: Vec<RuleOrigin>,
}

/// Partitions the generators, builds and subdivides the Cayley graph, lifts
/// the embedded circuits of the Cayley graph and reads off the rules.
pub fn nabla(g: &FiniteGroup, sigma: &GenSet, n: usize, order: &OrderSpec, caps: &Caps) -> Result<NablaSystem> {
    let partition = partition_generators(g, sigma);
    let base = cayley_graph(g, sigma);
    let letters = LetterPartition::from_alphabet(base.alphabet())?;
    let (graph, map) = subdivide(&base, &letters, n)?;
    let base_circuits = enumerate_embedded_circuits(&base, caps)?;
    let circuits = lift_circuits(&base_circuits, &map);
    let letter_order = LetterOrder::from_spec(graph.alphabet(), order)?;
    let records = enumerate_rules(&graph, &circuits, &letter_order)?;
    let (rules, origins): (Vec<Rule>, Vec<RuleOrigin>) = records.into_iter().map(|r| (r.rule, r.origin)).unzip();
    let system = RewritingSystem::new(graph.alphabet().clone(), rules)?;
    Ok(NablaSystem {
        group: g.clone(),
        generators: sigma.elements().to_vec(),
        partition,
        n,
        order: order.clone(),
        base,
        graph,
        map,
        circuits,
        system,
        origins,
    })
}

impl NablaSystem {
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn group_name(&self) -> &str {
        self.group.name()
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn partition(&self) -> &GenPartition {
        &self.partition
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> &OrderSpec {
        &self.order
    }

    /// The Cayley graph before subdivision.
    pub fn base_graph(&self) -> &LabeledGraph {
        &self.base
    }

    pub fn graph(&self) -> &LabeledGraph {
        &self.graph
    }

    pub fn map(&self) -> &SubdivisionMap {
        &self.map
    }

    /// Embedded circuits of the subdivided graph.
    pub fn circuits(&self) -> &[Circuit] {
        &self.circuits
    }

    pub fn system(&self) -> &RewritingSystem {
        &self.system
    }

    pub fn into_system(self) -> RewritingSystem {
        self.system
    }

    /// Origin of each rule, aligned with `system().rules()`.
    pub fn origins(&self) -> &[RuleOrigin] {
        &self.origins
    }

    pub fn records(&self) -> impl Iterator<Item = (&Rule, &RuleOrigin)> {
        self.system.rules().iter().zip(&self.origins)
    }

    pub fn count(&self, kind: RuleKind) -> usize {
        self.origins.iter().filter(|o| o.kind == kind).count()
    }

    /// The system without the rules whose index fails `keep`.
    pub fn without_rules(&self, mut keep: impl FnMut(usize) -> bool) -> RewritingSystem {
        self.system.filtered(|k, _| keep(k))
    }

    pub fn to_doc(&self) -> NablaDoc {
        let file = self.system.to_file();
        NablaDoc {
            group: self.group.name().to_string(),
            generators: self.generators.clone(),
            n: self.n,
            order: self.order.to_string(),
            length_reducing: self.system.is_length_reducing(),
            alphabet: file.alphabet,
            involution: file.involution,
            rules: self
                .records()
                .map(|(r, o)| NablaRule {
                    lhs: r.lhs.to_string(),
                    rhs: r.rhs.to_string(),
                    kind: o.kind,
                    circuit: o.path.clone(),
                })
                .collect(),
        }
    }
}

/// JSON form of a [`NablaSystem`]; readable back as a plain system.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NablaDoc {
    pub group: String,
    pub generators: Vec<usize>,
    pub n: usize,
    pub order: String,
    pub length_reducing: bool,
    pub alphabet: Vec<String>,
    pub involution: BTreeMap<String, String>,
    pub rules: Vec<NablaRule>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NablaRule {
    pub lhs: String,
    pub rhs: String,
    #[serde(rename = "type")]
    pub kind: RuleKind,
    pub circuit: Vec<usize>,
}

/// Free reduction on k generators: letters b_{i,1} with inverses c_{i,1}.
pub fn free_group_system(k: usize) -> RewritingSystem {
    let alphabet = subdivided_alphabet(0, k, 0);
    let rules = alphabet.letters().iter().map(|&x| {
        let inv = alphabet.inverse_letter(&x).expect("paired letters");
        Rule::new(Word(vec![x, inv]), Word::empty())
    });
    RewritingSystem::new(alphabet.clone(), rules).expect("free reduction rules are valid")
}

/// Number of factor tags a system's letters use; untagged letters count as
/// one factor.
fn factor_span(sys: &RewritingSystem) -> u16 {
    sys.alphabet().letters().iter().map(|l| l.factor.max(1)).max().unwrap_or(0)
}

/// Renames every letter; the map must be injective on the alphabet.
pub fn relabel(sys: &RewritingSystem, f: impl Fn(Letter) -> Letter) -> Result<RewritingSystem> {
    let al = sys.alphabet();
    let letters: Vec<Letter> = al.letters().iter().map(|&l| f(l)).collect();
    let mut distinct = HashSet::new();
    if let Some(l) = letters.iter().find(|l| !distinct.insert(**l)) {
        return Err(Error::AlphabetCollision(*l));
    }
    let inverse: BTreeMap<Letter, Letter> =
        al.letters().iter().filter_map(|l| al.inverse_letter(l).map(|i| (f(*l), f(i)))).collect();
    let alphabet = Alphabet::new(letters, |l| inverse.get(l).copied())?;
    let word = |w: &Word| Word(w.0.iter().map(|&l| f(l)).collect());
    RewritingSystem::new(alphabet, sys.rules().iter().map(|r| Rule::new(word(&r.lhs), word(&r.rhs))))
}

/// Free product of two systems: letters of the first keep factor tags
/// 1..=p (untagged letters become factor 1), letters of the second are
/// shifted past them, and the rule sets are joined.
pub fn compose_free_product(a: &RewritingSystem, b: &RewritingSystem) -> Result<RewritingSystem> {
    let shift = factor_span(a);
    let left = relabel(a, |l| l.with_factor(l.factor.max(1)))?;
    let right = relabel(b, |l| l.with_factor(shift + l.factor.max(1)))?;
    left.disjoint_union(&right)
}

/// One relator l r⁻¹ per rule, over the letters as generators (in alphabet
/// order).
pub fn presentation_of(sys: &RewritingSystem) -> Result<Presentation> {
    let alphabet = sys.alphabet();
    if !alphabet.is_involution_total() {
        return Err(Error::SystemNotInverseClosed);
    }
    let relators = (0..sys.rules().len())
        .map(|k| {
            let (l, r) = sys.rule_syms(k);
            l.iter()
                .map(|&s| GenLetter::pos(s as usize))
                .chain(r.iter().rev().map(|&s| GenLetter::neg(s as usize)))
                .collect()
        })
        .collect();
    let names = alphabet.letters().iter().map(Letter::to_string).collect();
    Ok(Presentation::new(alphabet.len(), relators).with_names(names))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures;
    use crate::group::{abelianization, check_genset, count_homs_presentation, AbelianInvariants};
    use crate::rewriting::{check_confluence_bounded, irreducible_words};


    fn c4_full(n: usize) -> NablaSystem {
        let g = FiniteGroup::cyclic(4);
        nabla(&g, &GenSet::all_nonidentity(&g), n, &OrderSpec::Canonical, &Caps::default()).unwrap()
    }

    fn rule(s: &str) -> Rule {
        s.parse().unwrap()
    }

    fn rule_set(sys: &RewritingSystem) -> HashSet<Rule> {
        sys.rules().iter().cloned().collect()
    }

    #[test]
    fn worked_example_rules() {
        let nab = c4_full(1);
        assert_eq!(nab.system().alphabet().len(), 9);
        let rules = rule_set(nab.system());
        for r in [
            "a_1_1 a_1_3 -> _",
            "a_1_3 a_1_1 -> _",
            "a_1_2 a_1_2 -> _",
            "b_1_1 c_1_1 -> _",
            "c_1_1 b_1_1 -> _",
            "a_1_1 a_1_2 a_1_3 b_1_1 b_1_2 -> c_1_3 c_1_2 c_1_1 c_1_3",
            "a_1_2 a_1_3 b_1_1 b_1_2 b_1_3 -> a_1_3 c_1_3 c_1_2 c_1_1",
        ] {
            assert!(rules.contains(&rule(r)), "missing {r}");
        }
        assert_eq!(nab.count(RuleKind::Backtrack), 9);
        assert_eq!(nab.count(RuleKind::EvenCircuit), 0);
        assert!(nab.system().is_length_reducing());
    }

    #[test]
    fn backtracks_are_exactly_letter_inverse_pairs() {
        for (g, s) in fixtures::gensets() {
            let nab = nabla(&g, &s, 1, &OrderSpec::Canonical, &Caps::default()).unwrap();
            let al = nab.system().alphabet();
            let expected: HashSet<Rule> = al
                .letters()
                .iter()
                .map(|x| Rule::new(Word(vec![*x, al.inverse_letter(x).unwrap()]), Word::empty()))
                .collect();
            let got: HashSet<Rule> =
                nab.records().filter(|(_, o)| o.kind == RuleKind::Backtrack).map(|(r, _)| r.clone()).collect();
            assert_eq!(got, expected, "{}", g.name());
        }
    }

    #[test]
    fn rules_label_paths_with_common_ends() {
        for (g, s) in fixtures::gensets() {
            for n in 0..=1 {
                let nab = nabla(&g, &s, n, &OrderSpec::Canonical, &Caps::default()).unwrap();
                for (r, o) in nab.records() {
                    let start = o.path[0];
                    let end_l = nab.graph().walk_word(start, &r.lhs);
                    assert!(end_l.is_some() && end_l == nab.graph().walk_word(start, &r.rhs), "{r}");
                    let circuit_len = o.path.len() - 1;
                    match o.kind {
                        RuleKind::Backtrack => assert_eq!((r.lhs.len(), r.rhs.len()), (2, 0)),
                        RuleKind::OddCircuit => {
                            assert_eq!(r.lhs.len(), r.rhs.len() + 1);
                            assert_eq!(circuit_len % 2, 1);
                        }
                        RuleKind::EvenCircuit => {
                            assert_eq!(r.lhs.len(), r.rhs.len());
                            assert!(circuit_len % 2 == 0 && circuit_len >= 4);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn length_reducing_iff_geodetic() {
        for (g, s) in fixtures::gensets() {
            let geodetic = cayley_graph(&g, &s).is_geodetic().unwrap().is_geodetic();
            for n in 0..=2 {
                let nab = nabla(&g, &s, n, &OrderSpec::Canonical, &Caps::default()).unwrap();
                assert_eq!(nab.system().is_length_reducing(), geodetic, "{} n={n}", g.name());
                assert_eq!(nab.count(RuleKind::EvenCircuit) == 0, geodetic);
            }
        }
    }

    #[test]
    fn square_has_equal_length_rules() {
        let g = FiniteGroup::cyclic(4);
        let s = check_genset(&g, &[1, 3]).unwrap();
        let nab = nabla(&g, &s, 0, &OrderSpec::Canonical, &Caps::default()).unwrap();
        let bad = nab.system().length_violation().unwrap();
        assert_eq!((bad.lhs.len(), bad.rhs.len()), (2, 2));
    }

    #[test]
    fn five_cycle_has_one_circuit() {
        let g = FiniteGroup::cyclic(5);
        let s = check_genset(&g, &[1, 4]).unwrap();
        let nab = nabla(&g, &s, 1, &OrderSpec::Canonical, &Caps::default()).unwrap();
        assert_eq!(nab.graph().vertex_count(), 15);
        assert_eq!(nab.circuits().len(), 1);
        assert_eq!(nab.circuits()[0].len(), 15);
        // labels repeat every three steps: three starts, two directions
        assert_eq!(nab.count(RuleKind::OddCircuit), 6);
    }

    #[test]
    fn order_does_not_matter_on_geodetic_inputs() {
        for (g, s) in fixtures::gensets() {
            if !cayley_graph(&g, &s).is_geodetic().unwrap().is_geodetic() {
                continue;
            }
            let caps = Caps::default();
            let a = nabla(&g, &s, 1, &OrderSpec::Canonical, &caps).unwrap();
            let b = nabla(&g, &s, 1, &OrderSpec::Reversed, &caps).unwrap();
            assert_eq!(rule_set(a.system()), rule_set(b.system()), "{}", g.name());
        }
    }

    #[test]
    fn order_matters_on_the_square() {
        let g = FiniteGroup::cyclic(4);
        let s = check_genset(&g, &[1, 3]).unwrap();
        let caps = Caps::default();
        let a = nabla(&g, &s, 0, &OrderSpec::Canonical, &caps).unwrap();
        let b = nabla(&g, &s, 0, &OrderSpec::Reversed, &caps).unwrap();
        assert_ne!(rule_set(a.system()), rule_set(b.system()));
    }

    #[test]
    fn small_systems_are_inverse_closed_and_confluent() {
        for (g, s) in fixtures::gensets() {
            let nab = nabla(&g, &s, 1, &OrderSpec::Canonical, &Caps::default()).unwrap();
            assert!(nab.system().is_inverse_closed(1000).unwrap());
            if nab.system().is_length_reducing() {
                let report = check_confluence_bounded(nab.system(), 4, 7, 1000).unwrap();
                assert!(report.is_confluent(), "{} {:?}", g.name(), report.counterexample);
            }
        }
    }

    #[test]
    fn readable_irreducible_words_match_spheres() {
        // irreducible words that can be read from the identity in the
        // subdivided graph are its geodesic labels
        let nab = c4_full(1);
        let mut counts = vec![0usize; 7];
        crate::rewriting::for_each_irreducible(nab.system(), 6, 1_000_000, |w| {
            if nab.graph().walk(0, w).is_some() {
                counts[w.len()] += 1;
            }
        })
        .unwrap();
        assert_eq!(counts, nab.graph().ball_sizes(0, 6));
    }

    #[test]
    fn free_systems() {
        assert_eq!(free_group_system(0).alphabet().len(), 0);
        let f1 = free_group_system(1);
        assert_eq!((f1.alphabet().len(), f1.rules().len()), (2, 2));
        let f2 = free_group_system(2);
        assert_eq!((f2.alphabet().len(), f2.rules().len()), (4, 4));
        assert_eq!(irreducible_words(&f2, 2, 100).unwrap().counts, vec![1, 4, 12]);
        assert!(f2.is_inverse_closed(10).unwrap());
    }

    #[test]
    fn composition_adds_up() {
        let nab = c4_full(1);
        let composed = compose_free_product(nab.system(), &free_group_system(2)).unwrap();
        assert_eq!(composed.alphabet().len(), 13);
        assert_eq!(composed.rules().len(), nab.system().rules().len() + 4);
        let trivial = compose_free_product(nab.system(), &free_group_system(0)).unwrap();
        let back = relabel(&trivial, |l| l.with_factor(0)).unwrap();
        assert_eq!(&back, nab.system());
        // composing again keeps factors apart
        let twice = compose_free_product(&composed, &composed).unwrap();
        assert_eq!(twice.alphabet().len(), 26);
        assert!(twice.alphabet().letters().iter().any(|l| l.factor == 4));
    }

    #[test]
    fn presentations_abelianize_as_expected() {
        let ab = |sys: &RewritingSystem| abelianization(&presentation_of(sys).unwrap());
        assert_eq!(ab(&free_group_system(2)), AbelianInvariants::new(&[], 2));
        assert_eq!(ab(c4_full(0).system()), AbelianInvariants::new(&[4], 0));
        assert_eq!(ab(c4_full(1).system()), AbelianInvariants::new(&[4], 3));
        let c2 = FiniteGroup::cyclic(2);
        assert_eq!(count_homs_presentation(&presentation_of(c4_full(1).system()).unwrap(), &c2, 1 << 20).unwrap(), 16);
        let lonely = RewritingSystem::new(Alphabet::without_inverses([Letter::a(1, 1)]), []).unwrap();
        assert!(matches!(presentation_of(&lonely), Err(Error::SystemNotInverseClosed)));
    }

    #[test]
    fn doc_round_trips_as_a_system() {
        let nab = c4_full(1);
        let text = serde_json::to_string(&nab.to_doc()).unwrap();
        assert_eq!(&RewritingSystem::load(&text).unwrap(), nab.system());
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["rules"][0]["type"], "R1");
        assert_eq!(v["order"], "canonical");
        assert_eq!(v["length_reducing"], true);
    }

    #[test]
    fn alphabet_sizes() {
        let g = FiniteGroup::cyclic(4);
        let part = partition_generators(&g, &GenSet::all_nonidentity(&g));
        let al = build_alphabet(&part, 1);
        assert_eq!(al.len(), 9);
        assert_eq!(al.inverse_letter(&Letter::a(1, 1)), Some(Letter::a(1, 3)));
        assert_eq!(build_alphabet(&part, 0).inverse_letter(&Letter::b(1, 1)), Some(Letter::c(1, 1)));
        assert_eq!(build_alphabet(&part, 3).len(), 21);
    }
}
