//! Invariant suites, shared by the command line `verify` subcommand.
//!
//! Each suite returns a list of [`Check`]s in a fixed order. Randomized
//! checks draw from a ChaCha stream seeded by [`SuiteConfig::seed`], so a
//! run is reproducible from its flags.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::braid::{center_word, delta_word, normal_form, relators, BraidWord, Letter};
use crate::collections::{random_unitriangular, NumericalCollection};
use crate::markov::{
    apply_g, check_equivariance, eval_eq1, eval_eq2, f_image, g_relators, orbit_collections,
    stabilizer_scan, symbolic, unipotency_oracle, Eq2Variant, GLetter, SixTuple,
};
use crate::matrix::IntMatrix;
use crate::pn;
use crate::regions::{
    alpha, lemma41_system, parse_rational, region_system, thm51_systems, Constraint, Degree,
    DegreeMatrix, InequalitySystem,
};
use crate::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl Check {
    pub fn compare(
        name: impl Into<String>,
        expected: impl fmt::Display,
        actual: impl fmt::Display,
    ) -> Self {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        Check {
            pass: expected == actual,
            name: name.into(),
            expected,
            actual,
        }
    }

    /// A check whose expected outcome is `true`; `detail` describes the actual state.
    pub fn holds(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            expected: "true".into(),
            actual: if pass { "true".into() } else { detail.into() },
            pass,
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.pass { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {}: expected {}, actual {}",
            self.name, self.expected, self.actual
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Braid,
    Mutation,
    Markov,
    Regions,
    Pn,
    All,
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Ok(match s {
            "braid" => Suite::Braid,
            "mutation" => Suite::Mutation,
            "markov" => Suite::Markov,
            "regions" => Suite::Regions,
            "pn" => Suite::Pn,
            "all" => Suite::All,
            other => return Err(Error::Parse(format!("unknown suite `{other}`"))),
        })
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Number of random samples per randomized check.
    pub samples: usize,
    pub eq2_variant: Eq2Variant,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0,
            samples: 1000,
            eq2_variant: Eq2Variant::Corrected,
        }
    }
}

pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Vec<Check> {
    match suite {
        Suite::Braid => braid_suite(cfg),
        Suite::Mutation => mutation_suite(cfg),
        Suite::Markov => markov_suite(cfg),
        Suite::Regions => regions_suite(cfg),
        Suite::Pn => pn_suite(cfg),
        Suite::All => [
            Suite::Braid,
            Suite::Mutation,
            Suite::Markov,
            Suite::Regions,
            Suite::Pn,
        ]
        .into_iter()
        .flat_map(|s| run_suite(s, cfg))
        .collect(),
    }
}

fn rng_for(cfg: &SuiteConfig, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(stream);
    rng
}

fn word(s: &str) -> BraidWord {
    BraidWord::parse(s, 4).expect("static word")
}

fn braid_suite(cfg: &SuiteConfig) -> Vec<Check> {
    let mut out = Vec::new();
    let delta = delta_word(4).unwrap();
    let center = center_word(4).unwrap();
    out.push(Check::compare(
        "braid/delta-normal-form",
        "D^1",
        normal_form(&delta),
    ));
    for i in 0..3 {
        let w = delta
            .inverse()
            .concat(&BraidWord::new(4, vec![Letter::left(i)]).unwrap())
            .and_then(|w| w.concat(&delta))
            .and_then(|w| w.concat(&BraidWord::new(4, vec![Letter::right(2 - i)]).unwrap()))
            .unwrap();
        out.push(Check::compare(
            format!("braid/delta-conjugates-s{i}-to-s{}", 2 - i),
            true,
            w.is_trivial(),
        ));
    }
    let reverse = word("L2 L1 L0").pow(4);
    out.push(Check::compare(
        "braid/center-word-equals-reverse",
        true,
        center.concat(&reverse.inverse()).unwrap().is_trivial(),
    ));
    for i in 0..3 {
        let s = BraidWord::new(4, vec![Letter::left(i)]).unwrap();
        let comm = center
            .concat(&s)
            .and_then(|w| w.concat(&center.inverse()))
            .and_then(|w| w.concat(&s.inverse()))
            .unwrap();
        out.push(Check::compare(
            format!("braid/center-commutes-with-s{i}"),
            true,
            comm.is_trivial(),
        ));
    }
    for strands in 3..=6 {
        out.push(Check::compare(
            format!("braid/relators-trivial-{strands}-strands"),
            true,
            relators(strands).iter().all(BraidWord::is_trivial),
        ));
    }
    let mut rng = rng_for(cfg, 1);
    let mut inverse_ok = 0;
    let mut roundtrip_ok = 0;
    let mut insertion_ok = 0;
    let rels = relators(4);
    for _ in 0..cfg.samples {
        let len = rng.gen_range(0..=30);
        let w = BraidWord::random(4, len, &mut rng);
        if w.concat(&w.inverse()).unwrap().is_trivial() {
            inverse_ok += 1;
        }
        let nf = normal_form(&w);
        if normal_form(&nf.to_word()) == nf && nf.is_well_formed() {
            roundtrip_ok += 1;
        }
        let r = &rels[rng.gen_range(0..rels.len())];
        let r = if rng.gen_bool(0.5) {
            r.clone()
        } else {
            r.inverse()
        };
        let at = rng.gen_range(0..=w.len());
        if normal_form(&w.insert_at(at, &r)) == nf && normal_form(&w.free_reduce()) == nf {
            insertion_ok += 1;
        }
    }
    out.push(Check::compare(
        "braid/w-times-inverse-trivial",
        cfg.samples,
        inverse_ok,
    ));
    out.push(Check::compare(
        "braid/garside-round-trip",
        cfg.samples,
        roundtrip_ok,
    ));
    out.push(Check::compare(
        "braid/relator-insertion-invariance",
        cfg.samples,
        insertion_ok,
    ));
    out
}

fn tuple_of(c: &NumericalCollection) -> SixTuple {
    SixTuple::from_collection(c).expect("four-object collection")
}

fn mutation_suite(cfg: &SuiteConfig) -> Vec<Check> {
    let mut out = Vec::new();
    let e = pn::beilinson_collection(3);
    let delta = delta_word(4).unwrap();
    out.push(Check::compare(
        "mutation/delta-beilinson-tuple",
        "(4,6,4,4,6,4)",
        tuple_of(&e.apply_word(&delta).unwrap()),
    ));
    let l0 = e.left_mutation(0).unwrap();
    out.push(Check::compare(
        "mutation/L0-beilinson-tuple",
        "(4,36,70,10,20,4)",
        tuple_of(&l0),
    ));
    let mut rng = rng_for(cfg, 2);
    let mut involution = 0;
    let mut braid_rel = 0;
    let mut far = 0;
    let mut conservation = 0;
    for _ in 0..cfg.samples {
        let c = NumericalCollection::from_gram(random_unitriangular(4, -9, 9, &mut rng)).unwrap();
        let i = rng.gen_range(0..3);
        if c.left_mutation(i).unwrap().right_mutation(i).unwrap() == c
            && c.right_mutation(i).unwrap().left_mutation(i).unwrap() == c
        {
            involution += 1;
        }
        let ok = [
            ("L0 L1 L0", "L1 L0 L1"),
            ("L1 L2 L1", "L2 L1 L2"),
            ("R0 R1 R0", "R1 R0 R1"),
            ("R1 R2 R1", "R2 R1 R2"),
        ]
        .iter()
        .all(|(a, b)| c.apply_word(&word(a)).unwrap() == c.apply_word(&word(b)).unwrap());
        if ok {
            braid_rel += 1;
        }
        if c.apply_word(&word("L0 L2")).unwrap() == c.apply_word(&word("L2 L0")).unwrap()
            && c.apply_word(&word("R0 L2")).unwrap() == c.apply_word(&word("L2 R0")).unwrap()
        {
            far += 1;
        }
        let w = BraidWord::random(4, rng.gen_range(0..=20), &mut rng);
        let m = c.apply_word(&w).unwrap();
        if m.is_consistent() {
            conservation += 1;
        }
    }
    out.push(Check::compare(
        "mutation/left-right-involution",
        cfg.samples,
        involution,
    ));
    out.push(Check::compare(
        "mutation/braid-relations-exact",
        cfg.samples,
        braid_rel,
    ));
    out.push(Check::compare(
        "mutation/far-commutation-exact",
        cfg.samples,
        far,
    ));
    out.push(Check::compare(
        "mutation/conservation-after-random-word",
        cfg.samples,
        conservation,
    ));

    let twist = pn::twist_matrix(3);
    let rrr4 = word("R2 R1 R0").pow(4);
    let moved = e.apply_word(&rrr4).unwrap();
    out.push(Check::compare(
        "mutation/anticanonical-twist-fixes-gram",
        e.gram(),
        moved.gram(),
    ));
    out.push(Check::compare(
        "mutation/anticanonical-twist-classes",
        &twist.pow(4) * e.classes(),
        moved.classes(),
    ));
    out
}

fn markov_suite(cfg: &SuiteConfig) -> Vec<Check> {
    let mut out = Vec::new();
    let seed = SixTuple::new([4, 6, 4, 4, 6, 4]);
    let beil = SixTuple::new([4, 10, 20, 4, 10, 4]);
    out.push(Check::compare("markov/eq1-dual-seed", 0, eval_eq1(&seed)));
    out.push(Check::compare(
        "markov/eq1-beilinson-seed",
        0,
        eval_eq1(&beil),
    ));
    out.push(Check::compare(
        "markov/eq2-printed-vs-corrected-on-seed",
        "-720 vs 0",
        format!(
            "{} vs {}",
            eval_eq2(&seed, Eq2Variant::Printed),
            eval_eq2(&seed, Eq2Variant::Corrected)
        ),
    ));
    out.push(Check::compare(
        "markov/oracle-dual-seed",
        true,
        unipotency_oracle(&seed),
    ));
    for (name, r) in g_relators() {
        out.push(Check::compare(
            format!("markov/g-relator-{name}-identity-on-Z6"),
            true,
            symbolic::is_identity_map(&r),
        ));
    }

    let e = pn::beilinson_collection(3);
    let orbit = orbit_collections(&e, 4, 100_000);
    match orbit {
        Ok(orbit) => {
            let tuples: Vec<SixTuple> = orbit.elements().map(tuple_of).collect();
            let bad_eq1 = tuples.iter().filter(|t| !eval_eq1(t).is_zero()).count();
            let bad_eq2 = tuples
                .iter()
                .filter(|t| !eval_eq2(t, cfg.eq2_variant).is_zero())
                .count();
            let bad_oracle = tuples.iter().filter(|t| !unipotency_oracle(t)).count();
            out.push(Check::compare(
                "markov/depth4-orbit-eq1-failures",
                0,
                bad_eq1,
            ));
            out.push(Check::compare(
                format!("markov/depth4-orbit-eq2-{:?}-failures", cfg.eq2_variant).to_lowercase(),
                0,
                bad_eq2,
            ));
            out.push(Check::compare(
                "markov/depth4-orbit-oracle-failures",
                0,
                bad_oracle,
            ));
        }
        Err(err) => out.push(Check::holds("markov/depth4-orbit", false, err.to_string())),
    }

    let samples = sampled_tuples(cfg);
    let rels = g_relators();
    let g_ok = samples
        .iter()
        .filter(|t| rels.iter().all(|(_, r)| &r.apply(t) == *t))
        .count();
    out.push(Check::compare(
        "markov/g-relators-fix-orbit-samples",
        samples.len(),
        g_ok,
    ));
    let images: Vec<_> = relators(4).iter().map(|r| f_image(r).unwrap()).collect();
    let f_ok = samples
        .iter()
        .filter(|t| images.iter().all(|g| &g.apply(t) == *t))
        .count();
    out.push(Check::compare(
        "markov/f-of-braid-relators-acts-trivially",
        samples.len(),
        f_ok,
    ));
    let rrr = f_image(&word("R2 R1 R0")).unwrap();
    let w2_ok = samples
        .iter()
        .filter(|t| rrr.apply(t) == apply_g(t, GLetter::W2))
        .count();
    out.push(Check::compare(
        "markov/f-R2R1R0-acts-as-w2",
        samples.len(),
        w2_ok,
    ));

    match orbit_collections(&e, 2, 100_000) {
        Ok(orbit) => {
            let letters: Vec<BraidWord> = ["R0", "R1", "R2", "L0", "L1", "L2"]
                .iter()
                .map(|s| word(s))
                .collect();
            let total = orbit.len() * letters.len();
            let ok = orbit
                .elements()
                .flat_map(|c| {
                    letters
                        .iter()
                        .map(move |w| check_equivariance(c, w).unwrap_or(false))
                })
                .filter(|b| *b)
                .count();
            out.push(Check::compare("markov/equivariance-depth2", total, ok));
        }
        Err(err) => out.push(Check::holds(
            "markov/equivariance-depth2",
            false,
            err.to_string(),
        )),
    }

    match stabilizer_scan(&e, 4, 1_000_000) {
        Ok(words) => {
            let nontrivial: Vec<String> = words
                .iter()
                .filter(|w| !w.is_trivial())
                .map(ToString::to_string)
                .collect();
            out.push(Check::holds(
                "markov/stabilizer-len4-only-trivial-words",
                nontrivial.is_empty(),
                nontrivial.join("; "),
            ));
        }
        Err(err) => out.push(Check::holds(
            "markov/stabilizer-len4",
            false,
            err.to_string(),
        )),
    }
    out
}

/// Deterministic sample, with repetition, of gram six-tuples from the
/// depth-4 mutation orbit of the Beilinson collection on P³.
pub fn sampled_tuples(cfg: &SuiteConfig) -> Vec<SixTuple> {
    let orbit = orbit_collections(&pn::beilinson_collection(3), 4, 100_000)
        .expect("depth-4 orbit fits the cap");
    let mut pool: Vec<SixTuple> = orbit.elements().map(tuple_of).collect();
    pool.sort_by(|a, b| a.0.cmp(&b.0));
    pool.dedup();
    let mut rng = rng_for(cfg, 3);
    (0..cfg.samples)
        .map(|_| pool[rng.gen_range(0..pool.len())].clone())
        .collect()
}

fn q(s: &str) -> BigRational {
    parse_rational(s).expect("static rational")
}

fn regions_suite(cfg: &SuiteConfig) -> Vec<Check> {
    let mut out = Vec::new();
    let witness: Vec<BigRational> = ["0", "1/2", "8/5", "27/10"].iter().map(|s| q(s)).collect();
    let l0 = lemma41_system(3, 0).unwrap();
    out.push(Check::compare(
        "regions/lemma41-witness-(0, 1/2, 8/5, 27/10)",
        true,
        l0.contains_phases(&witness).unwrap(),
    ));
    let mut feasible_systems: Vec<(String, InequalitySystem)> = Vec::new();
    for k in 0..3 {
        feasible_systems.push((format!("lemma41-k{k}"), lemma41_system(3, k).unwrap()));
    }
    let (left, right, dual) = thm51_systems();
    feasible_systems.push(("thm51-left".into(), left));
    feasible_systems.push(("thm51-right".into(), right));
    feasible_systems.push(("thm51-dual".into(), dual));
    for n in 1..=4 {
        feasible_systems.push((
            format!("strong-region-n{n}"),
            region_system(&DegreeMatrix::all_zero(n)),
        ));
    }
    let mut rng = rng_for(cfg, 4);
    for (name, s) in &feasible_systems {
        let f = s.is_feasible();
        match f.witness() {
            Some(w) => {
                out.push(Check::compare(
                    format!("regions/{name}-feasible"),
                    true,
                    s.contains_phases(w).unwrap(),
                ));
                let pts = sample_points(s, w, 8, &mut rng);
                let trials = cfg.samples.min(100);
                let mut ok = 0;
                for _ in 0..trials {
                    let a = &pts[rng.gen_range(0..pts.len())];
                    let b = &pts[rng.gen_range(0..pts.len())];
                    let t = BigRational::new(BigInt::from(rng.gen_range(0..=16)), BigInt::from(16));
                    let mix: Vec<BigRational> = a
                        .iter()
                        .zip(b)
                        .map(|(x, y)| &t * x + (BigRational::one() - &t) * y)
                        .collect();
                    if s.contains_phases(&mix).unwrap() {
                        ok += 1;
                    }
                }
                out.push(Check::compare(
                    format!("regions/{name}-convexity"),
                    trials,
                    ok,
                ));
            }
            None => out.push(Check::holds(
                format!("regions/{name}-feasible"),
                false,
                "infeasible",
            )),
        }
    }
    let mut contra = InequalitySystem::new(2);
    contra
        .push(Constraint::difference(2, 0, 1, 0, "phi0 < phi1"))
        .unwrap();
    contra
        .push(Constraint::difference(2, 1, 0, 0, "phi1 < phi0"))
        .unwrap();
    let cert = contra.is_feasible();
    out.push(Check::compare(
        "regions/contradiction-certificate",
        true,
        cert.certificate().is_some_and(|c| c.verify(&contra)),
    ));
    let z = DegreeMatrix::all_zero(5);
    let alpha_ok = (0..=5)
        .all(|i| (i + 1..=5).all(|j| alpha(&z, i, j) == Degree::Finite(-((j - i - 1) as i64))));
    out.push(Check::compare(
        "regions/alpha-all-zero-matches-strong-condition",
        true,
        alpha_ok,
    ));
    out
}

/// Random points of a feasible system found by perturbing a witness.
pub fn sample_points<R: Rng + ?Sized>(
    s: &InequalitySystem,
    witness: &[BigRational],
    count: usize,
    rng: &mut R,
) -> Vec<Vec<BigRational>> {
    let mut pts = vec![witness.to_vec()];
    let mut attempts = 0;
    while pts.len() < count && attempts < 200 * count {
        attempts += 1;
        let base = &pts[rng.gen_range(0..pts.len())];
        let p: Vec<BigRational> = base
            .iter()
            .map(|x| x + BigRational::new(BigInt::from(rng.gen_range(-8..=8)), BigInt::from(64)))
            .collect();
        if s.contains_phases(&p).unwrap_or(false) {
            pts.push(p);
        }
    }
    pts
}

fn pn_suite(_cfg: &SuiteConfig) -> Vec<Check> {
    let mut out = Vec::new();
    let mut duality = true;
    let mut poly = true;
    for n in 1..=4u32 {
        for m in -12..=12i64 {
            for i in 0..=n {
                let lhs = pn::line_bundle_cohomology(n, m, i);
                let rhs = pn::line_bundle_cohomology(n, -m - n as i64 - 1, n - i);
                duality &= lhs == rhs;
            }
            poly &= pn::euler_chi_line(n, m) == pn::binomial(n as i64 + m, n);
        }
    }
    out.push(Check::compare("pn/serre-duality-grid", true, duality));
    out.push(Check::compare("pn/chi-is-binomial-polynomial", true, poly));
    out.push(Check::compare(
        "pn/h0-P3-O1",
        4,
        pn::line_bundle_cohomology(3, 1, 0),
    ));
    out.push(Check::compare(
        "pn/h3-P3-O(-4)",
        1,
        pn::line_bundle_cohomology(3, -4, 3),
    ));
    for n in 1..=4u32 {
        let a = pn::beilinson_gram(n);
        let kappa = &a.unitriangular_inverse().unwrap() * &a.transpose();
        out.push(Check::compare(
            format!("pn/serre-class-map-n{n}"),
            &kappa,
            pn::serre_class_map(n),
        ));
        // (-1)^n κ is unipotent; -κ itself only when n is odd.
        let signed = if n.is_multiple_of(2) {
            kappa.clone()
        } else {
            -&kappa
        };
        let shifted = &signed - &IntMatrix::identity(n as usize + 1);
        out.push(Check::compare(
            format!("pn/signed-kappa-unipotent-n{n}"),
            true,
            shifted.pow(n + 1).is_zero(),
        ));
        let t = pn::twist_matrix(n);
        out.push(Check::compare(
            format!("pn/twist-determinant-n{n}"),
            1,
            t.determinant(),
        ));
        let conj = &(&t.unimodular_inverse().unwrap() * &kappa) * &t;
        out.push(Check::compare(
            format!("pn/twist-commutes-with-serre-n{n}"),
            &kappa,
            conj,
        ));
    }
    out.push(Check::compare(
        "pn/O(4)-class",
        "[-1, 4, -6, 4]",
        format!(
            "{:?}",
            pn::line_class(3, 4)
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
        )
        .replace('"', ""),
    ));
    let beil = SixTuple::from_collection(&pn::beilinson_collection(3)).unwrap();
    out.push(Check::compare("pn/beilinson-eq1", 0, eval_eq1(&beil)));
    let one = BigInt::one();
    out.push(Check::compare("pn/chi-O-O", &one, pn::euler_chi_line(3, 0)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_with_small_samples() {
        let cfg = SuiteConfig {
            samples: 20,
            ..SuiteConfig::default()
        };
        for check in run_suite(Suite::All, &cfg) {
            assert!(check.pass, "{check}");
        }
    }

    #[test]
    fn printed_variant_fails_orbit_check() {
        let cfg = SuiteConfig {
            samples: 5,
            eq2_variant: Eq2Variant::Printed,
            ..SuiteConfig::default()
        };
        let checks = run_suite(Suite::Markov, &cfg);
        assert!(checks.iter().any(|c| !c.pass && c.name.contains("eq2")));
    }

    #[test]
    fn suites_are_deterministic() {
        let cfg = SuiteConfig {
            samples: 10,
            seed: 42,
            ..SuiteConfig::default()
        };
        assert_eq!(run_suite(Suite::Braid, &cfg), run_suite(Suite::Braid, &cfg));
    }

    #[test]
    fn suite_names() {
        assert_eq!("markov".parse::<Suite>().unwrap(), Suite::Markov);
        assert!("bogus".parse::<Suite>().is_err());
    }
}
