//! Named checks that combine the rest of the crate, each producing a
//! [`VerificationReport`].

mod ball;
mod correspondence;
pub mod model;

pub use ball::{ball_geodeticity, BallGeodeticity};
pub use correspondence::{ball_correspondence, spheres, CayleyOracle, Correspondence, Distances, GraphOracle, ModelOracle};

use std::fmt;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::{cayley_graph, check_label_isomorphism, subdivide, LetterPartition};
use crate::group::{
    abelianization, count_homs_group, count_homs_presentation, AbelianInvariants, FiniteGroup, GenSet, Presentation,
};
use crate::letter::OrderSpec;
use crate::nabla::{compose_free_product, free_group_system, iterated_subdivision, nabla, phi_bijection, presentation_of, NablaSystem};
use crate::rewriting::{check_confluence_bounded, RewritingSystem};

/// Outcome of one named check.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub check: String,
    pub inputs: String,
    pub pass: bool,
    /// Matched values, or the counterexample on failure.
    pub details: Value,
    pub millis: u64,
}

impl VerificationReport {
    fn timed(check: &str, inputs: String, started: Instant, pass: bool, details: Value) -> Self {
        VerificationReport {
            check: check.to_string(),
            inputs,
            pass,
            details,
            millis: started.elapsed().as_millis() as u64,
        }
    }

    /// The same report with the runtime zeroed, for byte-stable output.
    pub fn without_timing(mut self) -> Self {
        self.millis = 0;
        self
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} {} [{}] ({} ms)",
            if self.pass { "PASS" } else { "FAIL" },
            self.check,
            self.inputs,
            self.millis
        )?;
        if let Value::Object(map) = &self.details {
            for (k, v) in map {
                writeln!(f, "  {k}: {v}")?;
            }
        }
        Ok(())
    }
}

fn describe(g: &FiniteGroup, sigma: &GenSet) -> String {
    let gens: Vec<String> = sigma.elements().iter().map(|&x| g.element_name(x)).collect();
    format!("{} {{{}}}", g.name(), gens.join(","))
}

/// Geodeticity of the Cayley graph, of its subdivision and length reduction
/// of the constructed system must all agree.
pub fn verify_theorem_b(g: &FiniteGroup, sigma: &GenSet, n: usize, caps: &Caps) -> Result<VerificationReport> {
    let started = Instant::now();
    let nab = nabla(g, sigma, n, &OrderSpec::Canonical, caps)?;
    let base = nab.base_graph().is_geodetic()?;
    let sub = nab.graph().is_geodetic()?;
    let reducing = nab.system().length_violation();
    let flags = [base.is_geodetic(), sub.is_geodetic(), reducing.is_none()];
    let mut details = json!({
        "cayley_geodetic": flags[0],
        "subdivided_geodetic": flags[1],
        "length_reducing": flags[2],
    });
    if let Some(w) = base.witness() {
        details["cayley_witness"] = json!(w.to_string());
    }
    if let Some(r) = reducing {
        details["non_reducing_rule"] = json!(r.to_string());
    }
    let pass = flags.iter().all(|&b| b == flags[0]);
    Ok(VerificationReport::timed("theorem-b", format!("{} n={n}", describe(g, sigma)), started, pass, details))
}

/// Compares the irreducible words of `sys` with the spheres of `oracle`.
pub fn verify_cayley_correspondence<O: CayleyOracle>(
    sys: &RewritingSystem,
    oracle: &O,
    radius: usize,
    caps: &Caps,
) -> Result<VerificationReport> {
    let started = Instant::now();
    let c = ball_correspondence(sys, oracle, radius, false, caps.census_words)?;
    let pass = c.holds();
    Ok(VerificationReport::timed("correspondence", format!("radius {radius}"), started, pass, serde_json::to_value(&c)?))
}

/// The irreducible words of a constructed system against two graphs: the
/// Cayley graph of G ∗ F_{n|Σ|} under the explicit letter images, and the
/// finite subdivided graph, where only words readable from the identity
/// are counted.
pub fn verify_nabla_correspondence(
    g: &FiniteGroup,
    sigma: &GenSet,
    n: usize,
    radius: usize,
    caps: &Caps,
) -> Result<VerificationReport> {
    let nab = nabla(g, sigma, n, &OrderSpec::Canonical, caps)?;
    verify_system_correspondence(&nab, nab.system(), radius, caps)
}

/// As [`verify_nabla_correspondence`], for `sys` in place of the system
/// built by `nab` (for instance with rules removed).
pub fn verify_system_correspondence(
    nab: &NablaSystem,
    sys: &RewritingSystem,
    radius: usize,
    caps: &Caps,
) -> Result<VerificationReport> {
    let started = Instant::now();
    if !sys.is_length_reducing() {
        return Err(Error::InvalidRule("the correspondence needs a length-reducing system".into()));
    }
    let (model, images) = model::nabla_images(nab.group(), nab.partition(), nab.n(), sys.alphabet());
    let group = ball_correspondence(sys, &ModelOracle { model, images }, radius, false, caps.census_words)?;
    let local = ball_correspondence(sys, &GraphOracle { graph: nab.graph(), base: 0 }, radius, true, caps.census_words)?;
    let pass = group.holds() && local.holds();
    let details = json!({
        "census": group.census,
        "group_spheres": group.spheres,
        "group_problem": group.problem,
        "readable_census": local.census,
        "graph_spheres": local.spheres,
        "graph_problem": local.problem,
    });
    let inputs = format!("{} n={} radius {radius}", nab.group_name(), nab.n());
    Ok(VerificationReport::timed("correspondence", inputs, started, pass, details))
}

/// Necessary conditions for the presented group to be G ∗ F_{n|Σ|}: its
/// abelianization is Ab(G) ⊕ Z^{n|Σ|}, and it has |Hom(G, Q)| · |Q|^{n|Σ|}
/// homomorphisms into each probe Q.
pub fn verify_theorem_a(
    g: &FiniteGroup,
    sigma: &GenSet,
    n: usize,
    probes: &[FiniteGroup],
    caps: &Caps,
) -> Result<VerificationReport> {
    let started = Instant::now();
    let nab = nabla(g, sigma, n, &OrderSpec::Canonical, caps)?;
    let pres = presentation_of(nab.system())?;
    let free_rank = n * sigma.len();
    let ab = abelianization(&pres);
    let expected_ab = abelianization(&Presentation::of_group(g, sigma)).direct_sum(&AbelianInvariants::new(&[], free_rank));
    let mut pass = ab == expected_ab;
    let mut rows = Vec::new();
    for q in probes {
        let homs = count_homs_presentation(&pres, q, caps.hom_assignments)?;
        let base = count_homs_group(g, sigma, q, caps.hom_assignments)?;
        let expected = (q.order() as u64)
            .checked_pow(free_rank as u32)
            .and_then(|p| p.checked_mul(base))
            .ok_or(Error::EnumerationCapExceeded(u64::MAX))?;
        pass &= homs == expected;
        rows.push(json!({ "probe": q.name(), "homs": homs, "expected": expected, "group_homs": base }));
    }
    let details = json!({
        "abelianization": ab.to_string(),
        "expected_abelianization": expected_ab.to_string(),
        "probes": rows,
    });
    Ok(VerificationReport::timed("theorem-a", format!("{} n={n}", describe(g, sigma)), started, pass, details))
}

/// Subdividing m-fold and then n-fold gives the (2nm+n+m)-fold subdivision
/// up to the letter map of [`phi_bijection`]; checked for both orders.
pub fn verify_iterated_subdivision(g: &FiniteGroup, sigma: &GenSet, n: usize, m: usize) -> Result<VerificationReport> {
    let started = Instant::now();
    let gamma = cayley_graph(g, sigma);
    let part = LetterPartition::from_alphabet(gamma.alphabet())?;
    let k = 2 * n * m + n + m;
    let (direct, _) = subdivide(&gamma, &part, k)?;
    let mut outcome = Vec::new();
    for (outer, inner) in [(n, m), (m, n)] {
        let twice = iterated_subdivision(&gamma, &part, inner, outer)?;
        let phi = phi_bijection(&part, outer, inner)?;
        let iso = check_label_isomorphism(&direct, &twice, &phi, 0, 0)
            && check_label_isomorphism(&twice, &direct, &phi.iter().map(|(a, b)| (*b, *a)).collect(), 0, 0);
        outcome.push(iso);
    }
    let details = json!({
        "k": k,
        "vertices": direct.vertex_count(),
        "edges": direct.edge_count(),
        "outer_n_after_inner_m": outcome[0],
        "outer_m_after_inner_n": outcome[1],
    });
    let pass = outcome.iter().all(|&b| b);
    Ok(VerificationReport::timed("iterated", format!("{} n={n} m={m}", describe(g, sigma)), started, pass, details))
}

/// One factor of a free product.
#[derive(Clone, Debug)]
pub enum Factor {
    Finite(FiniteGroup, GenSet),
    /// Free group of the given rank.
    Free(usize),
}

impl Factor {
    fn system(&self, n: usize, caps: &Caps) -> Result<(RewritingSystem, bool)> {
        match self {
            Factor::Finite(g, s) => {
                let geodetic = cayley_graph(g, s).is_geodetic()?.is_geodetic();
                Ok((nabla(g, s, n, &OrderSpec::Canonical, caps)?.into_system(), geodetic))
            }
            Factor::Free(k) => Ok((free_group_system(*k), true)),
        }
    }

    fn describe(&self) -> String {
        match self {
            Factor::Finite(g, s) => describe(g, s),
            Factor::Free(k) => format!("F{k}"),
        }
    }
}

/// The free product of the two factors' systems must be inverse-closed
/// and confluent on words up to `radius`; when both factors are geodetic,
/// its ball of that radius must have unique geodesics between vertices at
/// depth at most radius/2.
pub fn verify_free_product_composition(
    left: &Factor,
    right: &Factor,
    n: usize,
    radius: usize,
    seed: u64,
    caps: &Caps,
) -> Result<VerificationReport> {
    let started = Instant::now();
    let (a, geo_a) = left.system(n, caps)?;
    let (b, geo_b) = right.system(n, caps)?;
    let sys = compose_free_product(&a, &b)?;
    let inverse_closed = sys.is_inverse_closed(caps.rewrite_steps)?;
    let confluence = check_confluence_bounded(&sys, radius, seed, caps.rewrite_steps)?;
    let mut details = json!({
        "letters": sys.alphabet().len(),
        "rules": sys.rules().len(),
        "inverse_closed": inverse_closed,
        "confluent_words": confluence.words,
        "counterexample": confluence.counterexample,
        "length_reducing": sys.is_length_reducing(),
    });
    let mut pass = inverse_closed && confluence.is_confluent();
    if geo_a && geo_b && sys.is_length_reducing() {
        let ball = ball_geodeticity(&sys, radius, caps)?;
        pass &= ball.witness.is_none();
        details["ball"] = serde_json::to_value(&ball)?;
    } else {
        details["ball"] = json!("skipped: a factor is not geodetic");
    }
    let inputs = format!("{} * {} n={n} radius {radius}", left.describe(), right.describe());
    Ok(VerificationReport::timed("compose", inputs, started, pass, details))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::check_genset;

    fn c4_full() -> (FiniteGroup, GenSet) {
        let g = FiniteGroup::cyclic(4);
        let s = GenSet::all_nonidentity(&g);
        (g, s)
    }

    fn cycle(m: usize) -> (FiniteGroup, GenSet) {
        let g = FiniteGroup::cyclic(m);
        let s = check_genset(&g, &[1, m - 1]).unwrap();
        (g, s)
    }

    #[test]
    fn geodeticity_three_ways() {
        let caps = Caps::default();
        let (g, s) = c4_full();
        let r = verify_theorem_b(&g, &s, 1, &caps).unwrap();
        assert!(r.pass);
        assert_eq!(r.details["length_reducing"], json!(true));
        let (g, s) = cycle(4);
        let r = verify_theorem_b(&g, &s, 1, &caps).unwrap();
        assert!(r.pass);
        assert_eq!(r.details["cayley_geodetic"], json!(false));
        assert_eq!(r.details["subdivided_geodetic"], json!(false));
        assert_eq!(r.details["length_reducing"], json!(false));
        let (g, s) = cycle(5);
        let r = verify_theorem_b(&g, &s, 2, &caps).unwrap();
        assert!(r.pass);
        assert_eq!(r.details["subdivided_geodetic"], json!(true));
    }

    #[test]
    fn presented_group_invariants() {
        let caps = Caps::default();
        let c2 = FiniteGroup::cyclic(2);
        let (g, s) = c4_full();
        let r = verify_theorem_a(&g, &s, 1, std::slice::from_ref(&c2), &caps).unwrap();
        assert!(r.pass, "{r}");
        assert_eq!(r.details["probes"][0]["homs"], json!(16));
        assert_eq!(r.details["abelianization"], json!(AbelianInvariants::new(&[4], 3).to_string()));
        let (g, s) = cycle(5);
        let r = verify_theorem_a(&g, &s, 1, std::slice::from_ref(&c2), &caps).unwrap();
        assert!(r.pass);
        assert_eq!(r.details["probes"][0]["homs"], json!(4));
        let probes = [c2, FiniteGroup::cyclic(3), FiniteGroup::symmetric3()];
        for (g, s) in crate::graph::fixtures::gensets() {
            let r = verify_theorem_a(&g, &s, 0, &probes, &caps).unwrap();
            assert!(r.pass, "{r}");
        }
    }

    #[test]
    fn iterated_examples() {
        let (g, s) = c4_full();
        let r = verify_iterated_subdivision(&g, &s, 1, 1).unwrap();
        assert!(r.pass);
        assert_eq!(r.details["k"], json!(4));
        let (g, s) = cycle(5);
        for m in 0..=3 {
            assert!(verify_iterated_subdivision(&g, &s, 0, m).unwrap().pass);
        }
        let (g, s) = cycle(3);
        let r = verify_iterated_subdivision(&g, &s, 2, 1).unwrap();
        assert!(r.pass);
        assert_eq!(r.details["k"], json!(7));
    }

    #[test]
    fn composition_examples() {
        let caps = Caps::default();
        let c2 = FiniteGroup::cyclic(2);
        let a = Factor::Finite(c2.clone(), GenSet::all_nonidentity(&c2));
        let (g3, s3) = cycle(3);
        let r = verify_free_product_composition(&a, &Factor::Finite(g3, s3), 1, 6, 0, &caps).unwrap();
        assert!(r.pass, "{r}");
        assert!(r.details["ball"]["witness"].is_null());

        let r = verify_free_product_composition(&a, &Factor::Free(0), 1, 6, 0, &caps).unwrap();
        assert!(r.pass);
        let alone = nabla(&c2, &GenSet::all_nonidentity(&c2), 1, &OrderSpec::Canonical, &caps).unwrap();
        assert_eq!(r.details["rules"], json!(alone.system().rules().len()));

        let (g4, s4) = cycle(4);
        let r = verify_free_product_composition(&Factor::Finite(g4, s4), &a, 0, 4, 0, &caps).unwrap();
        assert_eq!(r.details["length_reducing"], json!(false));
        assert!(r.details["ball"].is_string());
        assert_eq!(r.details["inverse_closed"], json!(true));
        assert!(r.details["confluent_words"].as_u64().unwrap() > 0, "{r}");
    }

    #[test]
    fn correspondence_and_mutations() {
        let caps = Caps::default();
        let (g, s) = c4_full();
        let nab = nabla(&g, &s, 1, &OrderSpec::Canonical, &caps).unwrap();
        let r = verify_system_correspondence(&nab, nab.system(), 4, &caps).unwrap();
        assert!(r.pass, "{r}");
        let (model, images) = model::free_images(2, free_group_system(2).alphabet());
        let r = verify_cayley_correspondence(&free_group_system(2), &ModelOracle { model, images }, 3, &caps).unwrap();
        assert!(r.pass);
        assert_eq!(r.details["spheres"], json!([1, 4, 12, 36]));

        let odd: Vec<usize> = nab
            .records()
            .enumerate()
            .filter(|(_, (_, origin))| origin.kind == crate::nabla::RuleKind::OddCircuit)
            .map(|(k, _)| k)
            .collect();
        assert!(!odd.is_empty());
        for k in odd {
            let cut = nab.without_rules(|j| j != k);
            let broken = !verify_system_correspondence(&nab, &cut, 6, &caps).unwrap().pass
                || !check_confluence_bounded(&cut, 6, 0, caps.rewrite_steps).unwrap().is_confluent();
            assert!(broken, "rule {k}");
        }
    }

    #[test]
    fn reports_serialize() {
        let (g, s) = c4_full();
        let r = verify_theorem_b(&g, &s, 0, &Caps::default()).unwrap().without_timing();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["check"], json!("theorem-b"));
        assert_eq!(v["millis"], json!(0));
        assert!(r.to_string().starts_with("PASS theorem-b"));
    }
}
