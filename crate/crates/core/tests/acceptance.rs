//! Acceptance criteria for the numerical helix toolkit.
//!
//! Runs as a plain binary (no libtest harness) so that every criterion
//! prints exactly one PASS/FAIL line, followed by details on failure.
//! Exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use helix::braid::{center_word, delta_word, normal_form, relators, BraidWord, Letter};
use helix::collections::{random_unitriangular, NumericalCollection};
use helix::markov::{
    apply_g, check_equivariance, eval_eq1, eval_eq2, f_image, orbit_collections, stabilizer_scan,
    unipotency_oracle, Eq2Variant, GLetter, SixTuple,
};
use helix::matrix::IntMatrix;
use helix::pn;
use helix::regions::{
    lemma41_system, parse_rational, region_system, thm51_systems, Constraint, DegreeMatrix,
    InequalitySystem,
};
use helix::verify::{sample_points, sampled_tuples, SuiteConfig};

const SAMPLES: usize = 1000;
const ORBIT_CAP: usize = 100_000;
const SEED: u64 = 0;

struct Outcome {
    pass: bool,
    summary: String,
    failures: Vec<String>,
}

impl Outcome {
    fn new(summary: impl Into<String>) -> Self {
        Outcome {
            pass: true,
            summary: summary.into(),
            failures: Vec::new(),
        }
    }

    fn require(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.pass = false;
            self.failures.push(what());
        }
    }
}

fn word(s: &str) -> BraidWord {
    BraidWord::parse(s, 4).unwrap()
}

fn tuple(c: &NumericalCollection) -> SixTuple {
    SixTuple::from_collection(c).unwrap()
}

fn rng(stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(SEED);
    r.set_stream(stream);
    r
}

fn dual_tuple() -> Outcome {
    let e = pn::beilinson_collection(3);
    let delta = delta_word(4).unwrap();
    assert_eq!(delta.to_string(), "L0 L1 L2 L0 L1 L0");
    let got = tuple(&e.apply_word(&delta).unwrap());
    let mut out = Outcome::new(format!("delta applied rightmost-first gives {got}"));
    if got != SixTuple::new([4, 6, 4, 4, 6, 4]) {
        let reversed = BraidWord::new(4, delta.letters().iter().rev().copied().collect()).unwrap();
        let fallback = tuple(&e.apply_word(&reversed).unwrap());
        out.summary = format!("rightmost-first gives {got}, leftmost-first gives {fallback}");
        out.require(fallback == SixTuple::new([4, 6, 4, 4, 6, 4]), || {
            "neither application order yields (4,6,4,4,6,4)".into()
        });
    }
    out
}

fn depth4_tuples() -> Vec<SixTuple> {
    let orbit = orbit_collections(&pn::beilinson_collection(3), 4, ORBIT_CAP).unwrap();
    orbit.elements().map(tuple).collect()
}

fn eq1_vanishing(orbit: &[SixTuple]) -> Outcome {
    let mut out = Outcome::new(format!(
        "eq1 = 0 on both seeds and all {} depth-4 orbit members",
        orbit.len()
    ));
    for seed in [
        SixTuple::new([4, 10, 20, 4, 10, 4]),
        SixTuple::new([4, 6, 4, 4, 6, 4]),
    ] {
        let v = eval_eq1(&seed);
        out.require(v.is_zero(), || format!("eq1{seed} = {v}"));
    }
    for t in orbit {
        let v = eval_eq1(t);
        out.require(v.is_zero(), || format!("eq1{t} = {v}"));
    }
    out
}

fn eq2_arbitration(orbit: &[SixTuple]) -> Outcome {
    let seed = SixTuple::new([4, 6, 4, 4, 6, 4]);
    let printed = eval_eq2(&seed, Eq2Variant::Printed);
    let corrected = eval_eq2(&seed, Eq2Variant::Corrected);
    let mut out = Outcome::new(format!(
        "printed = {printed}, corrected = {corrected} on the seed; oracle and corrected eq2 on {} members",
        orbit.len()
    ));
    out.require(printed == BigInt::from(-720), || {
        format!("printed eq2 = {printed}")
    });
    out.require(corrected.is_zero(), || {
        format!("corrected eq2 = {corrected}")
    });
    for t in orbit {
        out.require(unipotency_oracle(t), || format!("oracle rejects {t}"));
        let v = eval_eq2(t, Eq2Variant::Corrected);
        out.require(v.is_zero(), || format!("corrected eq2{t} = {v}"));
    }
    out
}

fn serre_matrix() -> Outcome {
    let mut out =
        Outcome::new("kappa = (-1)^n twist^-(n+1) and (kappa + I)^(n+1) = 0 for n = 1..4");
    for n in 1..=4u32 {
        let size = n as usize + 1;
        let a = pn::beilinson_gram(n);
        let kappa = &a.unitriangular_inverse().unwrap() * &a.transpose();
        let twist_inv = pn::twist_matrix(n).unimodular_inverse().unwrap();
        let sign = if n.is_multiple_of(2) { 1 } else { -1 };
        let expected = twist_inv.pow(n + 1).scale(&BigInt::from(sign));
        out.require(kappa == expected, || {
            format!("n={n}: kappa = {kappa}, expected {expected}")
        });
        let nil = (&kappa + &IntMatrix::identity(size)).pow(n + 1);
        out.require(nil.is_zero(), || {
            format!("n={n}: (kappa + I)^{} = {nil}", n + 1)
        });
    }
    out
}

fn braid_algebra() -> Outcome {
    let mut out = Outcome::new(format!(
        "delta conjugation and centrality by normal form; mutation braid relations on {SAMPLES} random grams"
    ));
    let delta = delta_word(4).unwrap();
    for i in 0..3 {
        let si = BraidWord::new(4, vec![Letter::left(i)]).unwrap();
        let target = BraidWord::new(4, vec![Letter::left(2 - i)]).unwrap();
        let conj = delta.inverse().concat(&si).unwrap().concat(&delta).unwrap();
        let (lhs, rhs) = (normal_form(&conj), normal_form(&target));
        out.require(lhs == rhs, || {
            format!("delta^-1 s{i} delta = {lhs}, s{} = {rhs}", 2 - i)
        });
    }
    let c = center_word(4).unwrap();
    out.require(c == word("L0 L1 L2").pow(4), || {
        format!("center word is {c}")
    });
    for i in 0..3 {
        let si = BraidWord::new(4, vec![Letter::left(i)]).unwrap();
        let (lhs, rhs) = (
            normal_form(&c.concat(&si).unwrap()),
            normal_form(&si.concat(&c).unwrap()),
        );
        out.require(lhs == rhs, || format!("c s{i} = {lhs} but s{i} c = {rhs}"));
    }

    let relations = [
        ("L0 L1 L0", "L1 L0 L1"),
        ("L1 L2 L1", "L2 L1 L2"),
        ("L0 L2", "L2 L0"),
        ("R0 R1 R0", "R1 R0 R1"),
        ("R1 R2 R1", "R2 R1 R2"),
        ("R0 R2", "R2 R0"),
    ];
    let mut r = rng(10);
    for k in 0..SAMPLES {
        let c = NumericalCollection::from_gram(random_unitriangular(4, -9, 9, &mut r)).unwrap();
        for (a, b) in relations {
            let (x, y) = (
                c.apply_word(&word(a)).unwrap(),
                c.apply_word(&word(b)).unwrap(),
            );
            out.require(x.gram() == y.gram() && x.classes() == y.classes(), || {
                format!("sample {k}: {a} and {b} differ on gram {}", c.gram())
            });
        }
    }
    out
}

fn homomorphism(samples: &[SixTuple]) -> Outcome {
    let rels = relators(4);
    let orbit = orbit_collections(&pn::beilinson_collection(3), 3, ORBIT_CAP).unwrap();
    let mut out = Outcome::new(format!(
        "f of {} relators trivial on {} sampled tuples; equivariance for 6 letters on {} depth-3 collections",
        rels.len(),
        samples.len(),
        orbit.len()
    ));
    for r in &rels {
        let g = f_image(r).unwrap();
        for t in samples {
            out.require(&g.apply(t) == t, || format!("f({r}) moves {t}"));
        }
    }
    let letters = ["L0", "L1", "L2", "R0", "R1", "R2"];
    for c in orbit.elements() {
        for l in letters {
            let ok = check_equivariance(c, &word(l)).unwrap();
            out.require(ok, || format!("equivariance fails for {l} at {}", tuple(c)));
        }
    }
    out
}

fn stabilizer(samples: &[SixTuple]) -> Outcome {
    let e = pn::beilinson_collection(3);
    let words = stabilizer_scan(&e, 6, 10_000_000).unwrap();
    let mut out = Outcome::new(format!(
        "{} stabilizing words up to length 6, all trivial; anticanonical twist; f(R2 R1 R0) = w2",
        words.len()
    ));
    for w in &words {
        out.require(w.is_trivial(), || format!("nontrivial stabilizer word {w}"));
    }
    let moved = e.apply_word(&word("R2 R1 R0").pow(4)).unwrap();
    out.require(moved.gram() == e.gram(), || {
        format!("gram changed to {}", moved.gram())
    });
    let expected = &pn::twist_matrix(3).pow(4) * e.classes();
    out.require(moved.classes() == &expected, || {
        format!(
            "classes {} differ from twist^4 {}",
            moved.classes(),
            expected
        )
    });
    out.require(moved.classes() != e.classes(), || {
        "classes unchanged".into()
    });
    let g = f_image(&word("R2 R1 R0")).unwrap();
    for t in samples {
        out.require(g.apply(t) == apply_g(t, GLetter::W2), || {
            format!("f(R2 R1 R0) and w2 differ at {t}")
        });
    }
    out
}

fn q(s: &str) -> BigRational {
    parse_rational(s).unwrap()
}

fn region_feasibility() -> Outcome {
    let mut out = Outcome::new("lemma systems, both region intersections and the dual system feasible; contradiction certified");
    let given: Vec<BigRational> = ["0", "1/2", "8/5", "27/10"].iter().map(|s| q(s)).collect();
    out.require(
        lemma41_system(3, 0)
            .unwrap()
            .contains_phases(&given)
            .unwrap(),
        || "(0, 1/2, 8/5, 27/10) violates the kidx = 0 system".into(),
    );
    let (l, r, d) = thm51_systems();
    let mut systems: Vec<(String, InequalitySystem)> = (0..3)
        .map(|k| (format!("lemma kidx={k}"), lemma41_system(3, k).unwrap()))
        .collect();
    systems.push(("left".into(), l));
    systems.push(("right".into(), r));
    systems.push(("dual".into(), d));
    for (name, s) in &systems {
        match s.is_feasible().witness() {
            Some(w) => out.require(s.contains_phases(w).unwrap(), || {
                format!("{name}: witness fails")
            }),
            None => out.require(false, || format!("{name}: reported infeasible")),
        }
    }
    let mut contra = InequalitySystem::new(2);
    contra
        .push(Constraint::difference(2, 0, 1, 0, "phi0 < phi1"))
        .unwrap();
    contra
        .push(Constraint::difference(2, 1, 0, 0, "phi1 < phi0"))
        .unwrap();
    let res = contra.is_feasible();
    out.require(res.certificate().is_some_and(|c| c.verify(&contra)), || {
        format!("contradiction not certified: {res:?}")
    });
    out
}

/// Monomials of total degree `d` in `vars` variables, by enumeration.
fn count_monomials(vars: u32, d: i64) -> BigInt {
    if d < 0 {
        return BigInt::zero();
    }
    if vars == 1 {
        return BigInt::one();
    }
    (0..=d).map(|k| count_monomials(vars - 1, d - k)).sum()
}

fn cohomology_table() -> Outcome {
    let mut out = Outcome::new("cohomology of O(m) on P^n for n <= 4, |m| <= 12, with duality");
    for n in 1..=4u32 {
        for m in -12..=12i64 {
            for i in 0..=n {
                let expected = if i == 0 {
                    count_monomials(n + 1, m)
                } else if i == n {
                    count_monomials(n + 1, -m - n as i64 - 1)
                } else {
                    BigInt::zero()
                };
                let got = pn::line_bundle_cohomology(n, m, i);
                out.require(got == expected, || {
                    format!("h^{i}(P^{n}, O({m})) = {got}, expected {expected}")
                });
                let dual = pn::line_bundle_cohomology(n, -m - n as i64 - 1, n - i);
                out.require(got == dual, || {
                    format!("duality fails at n={n} m={m} i={i}")
                });
            }
        }
    }
    out
}

fn property_suites() -> Outcome {
    let mut out = Outcome::new(format!(
        "involution, conservation, convexity and normal form round trip over {SAMPLES} samples each"
    ));
    let mut r = rng(11);
    for k in 0..SAMPLES {
        let c = NumericalCollection::from_gram(random_unitriangular(4, -9, 9, &mut r)).unwrap();
        let i = r.gen_range(0..3);
        let lr = c.right_mutation(i).unwrap().left_mutation(i).unwrap();
        let rl = c.left_mutation(i).unwrap().right_mutation(i).unwrap();
        out.require(lr == c && rl == c, || {
            format!("sample {k}: L{i}/R{i} not inverse")
        });

        let w = BraidWord::random(4, r.gen_range(0..=20), &mut r);
        let m = c.apply_word(&w).unwrap();
        let lhs = &(&m.classes().transpose() * c.ambient()) * m.classes();
        out.require(&lhs == m.gram(), || {
            format!("sample {k}: conservation fails after {w}")
        });

        let w = BraidWord::random(4, r.gen_range(0..=30), &mut r);
        let nf = normal_form(&w);
        let again = normal_form(&nf.to_word());
        out.require(again == nf, || {
            format!("round trip of {w}: {nf} became {again}")
        });
    }

    let (l, rr, d) = thm51_systems();
    let mut systems = vec![l, rr, d];
    systems.extend((0..3).map(|k| lemma41_system(3, k).unwrap()));
    systems.extend((1..=4).map(|n| region_system(&DegreeMatrix::all_zero(n))));
    let half = q("1/2");
    for (idx, s) in systems.iter().enumerate() {
        let w = s.is_feasible().witness().unwrap().to_vec();
        let pts = sample_points(s, &w, 10, &mut r);
        for a in &pts {
            for b in &pts {
                let mid: Vec<BigRational> = a.iter().zip(b).map(|(x, y)| (x + y) * &half).collect();
                out.require(s.contains_phases(&mid).unwrap(), || {
                    format!("system {idx}: midpoint escapes")
                });
            }
        }
    }
    out
}

fn main() -> ExitCode {
    let start = Instant::now();
    let orbit = depth4_tuples();
    let samples = sampled_tuples(&SuiteConfig {
        seed: SEED,
        samples: SAMPLES,
        ..SuiteConfig::default()
    });
    type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);
    let criteria: Vec<Criterion> = vec![
        ("dual-collection tuple", Box::new(dual_tuple)),
        ("eq1 vanishing", Box::new(|| eq1_vanishing(&orbit))),
        ("eq2 arbitration", Box::new(|| eq2_arbitration(&orbit))),
        ("serre matrix", Box::new(serre_matrix)),
        ("braid algebra", Box::new(braid_algebra)),
        (
            "homomorphism and equivariance",
            Box::new(|| homomorphism(&samples)),
        ),
        ("stabilizer evidence", Box::new(|| stabilizer(&samples))),
        ("region feasibility", Box::new(region_feasibility)),
        ("cohomology table", Box::new(cohomology_table)),
        ("property suites", Box::new(property_suites)),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        let status = if o.pass { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {status} {name}: {}", k + 1, o.summary);
        for f in o.failures.iter().take(10) {
            println!("    {f}");
        }
        if o.failures.len() > 10 {
            println!("    ... {} more", o.failures.len() - 10);
        }
        if !o.pass {
            failed += 1;
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed in {:.1?}",
        criteria.len() - failed,
        start.elapsed()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
