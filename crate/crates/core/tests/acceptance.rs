//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//!
//! Every comparison is exact unless the criterion itself is about floating
//! point, in which case the tolerance is pinned here in code.

use num_traits::{Signed, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use verlinde_core::exact_arith::{four_sin_sq, root_power, CyclotomicNumber};
use verlinde_core::identities::{self, IdentityReport};
use verlinde_core::verlinde::{self, closed_form, ClosedFormula, VerlindeQuery};
use verlinde_core::{BigInt, BigRational, GroupId};

fn report_criterion(number: u32, what: &str, failures: &[String]) {
    if failures.is_empty() {
        println!("criterion {number} ({what}): pass");
    } else {
        println!("criterion {number} ({what}): FAIL");
        for f in failures {
            println!("  {f}");
        }
        panic!("criterion {number} ({what}) failed with {} case(s)", failures.len());
    }
}

fn failures_of(reports: &[IdentityReport]) -> Vec<String> {
    reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| {
            format!(
                "{} [{}]: lhs = {}, rhs = {}",
                r.name,
                r.parameter_string(),
                r.lhs,
                r.rhs
            )
        })
        .collect()
}

fn exact(group: GroupId, level: u32, genus: u32) -> BigInt {
    verlinde::verlinde_number(&VerlindeQuery::new(group, level, genus).unwrap()).unwrap()
}

#[test]
fn criterion_01_closed_form_regression() {
    let mut failures = Vec::new();
    let mut check = |label: String, lhs: BigInt, rhs: BigInt| {
        if lhs != rhs {
            failures.push(format!("{label}: {lhs} != {rhs}"));
        }
    };
    for g in 2..=5 {
        use ClosedFormula::*;
        check(
            format!("N_1(SL_2) g={g}"),
            exact(GroupId::Sl(2), 1, g),
            closed_form(N1Sl2 { g }).unwrap(),
        );
        check(
            format!("N_2(SL_2) g={g}"),
            exact(GroupId::Sl(2), 2, g),
            closed_form(N2Sl2 { g }).unwrap(),
        );
        check(
            format!("N_1(SL_4) g={g}"),
            exact(GroupId::Sl(4), 1, g),
            closed_form(N1Sl4 { g }).unwrap(),
        );
        check(
            format!("N_2(SL_4) g={g}"),
            exact(GroupId::Sl(4), 2, g),
            closed_form(N2Sl4 { g }).unwrap(),
        );
        for n in [4, 5] {
            check(
                format!("N_1(Spin_{}) g={g}", 2 * n),
                exact(GroupId::SpinEven(2 * n), 1, g),
                closed_form(N1SpinEven { n, g }).unwrap(),
            );
            check(
                format!("N_2(Spin_{}) g={g}", 2 * n),
                exact(GroupId::SpinEven(2 * n), 2, g),
                closed_form(N2SpinEven { n, g }).unwrap(),
            );
        }
        for n in [2, 3, 4] {
            check(
                format!("N_1(Spin_{}) g={g}", 2 * n + 1),
                exact(GroupId::SpinOdd(2 * n + 1), 1, g),
                closed_form(N1SpinOdd { n, g }).unwrap(),
            );
            check(
                format!("N_2(Spin_{}) g={g}", 2 * n + 1),
                exact(GroupId::SpinOdd(2 * n + 1), 2, g),
                closed_form(N2SpinOdd { n, g }).unwrap(),
            );
        }
    }
    report_criterion(1, "closed-form regression", &failures);
}

#[test]
fn criterion_02_term_table() {
    let reports = identities::check_term_table(2..=4, 2..=3);
    report_criterion(2, "level-2 term table", &failures_of(&reports));
}

#[test]
fn criterion_03_prym_numerology() {
    let reports = identities::check_prym_identity(1..=4, 2..=4);
    report_criterion(3, "prym theta-count identities", &failures_of(&reports));
}

#[test]
fn criterion_04_spin8_identity() {
    let mut failures = failures_of(&identities::check_spin8(2..=4));
    if exact(GroupId::SpinEven(8), 2, 2) != BigInt::from(184) {
        failures.push("desk value N_2(Spin_8) at g=2 is not 184".to_string());
    }
    report_criterion(4, "spin_8 total theta-count identity", &failures);
}

#[test]
fn criterion_05_reciprocity() {
    let reports = identities::check_reciprocity(&[(5, 7), (5, 9), (7, 9)], &[5, 7], 2..=3);
    report_criterion(5, "spinor-count reciprocity", &failures_of(&reports));
}

#[test]
fn criterion_06_low_rank_consistency() {
    let reports = identities::check_consistency(&[1, 2], 2..=3);
    report_criterion(6, "low-rank even-spin consistency", &failures_of(&reports));
}

#[test]
fn criterion_07_heights() {
    let reports = identities::check_heights();
    report_criterion(7, "representation heights", &failures_of(&reports));
}

// ---- Criterion 8: the cyclotomic engine itself ----

fn random_cyclotomic(rng: &mut ChaCha8Rng, k: u32) -> CyclotomicNumber {
    let mut out = CyclotomicNumber::zero(k);
    for _ in 0..rng.gen_range(1..=3) {
        let coeff = BigRational::new(
            BigInt::from(rng.gen_range(-9i64..=9)),
            BigInt::from(rng.gen_range(1i64..=5)),
        );
        let term = root_power(k, rng.gen_range(0..k as i64)).scale(&coeff);
        out = out.add(&term).unwrap();
    }
    out
}

/// Independent numeric embedding at zeta_k = e^(2 pi i / k).
fn embed(x: &CyclotomicNumber) -> (f64, f64) {
    let k = x.order() as f64;
    let mut re = 0.0;
    let mut im = 0.0;
    for (j, c) in x.coeffs().iter().enumerate() {
        let c = c.numer().to_f64().unwrap() / c.denom().to_f64().unwrap();
        let angle = 2.0 * std::f64::consts::PI * j as f64 / k;
        re += c * angle.cos();
        im += c * angle.sin();
    }
    (re, im)
}

#[test]
fn criterion_08_cyclotomic_engine() {
    let mut failures = Vec::new();

    // Product over i of (1 - zeta_k^i) equals k, for k = 2..60.
    for k in 2..=60u32 {
        let one = CyclotomicNumber::one(k);
        let mut prod = one.clone();
        for i in 1..k {
            prod = prod.mul(&one.sub(&root_power(k, i as i64)).unwrap()).unwrap();
        }
        match prod.to_integer() {
            Ok(v) if v == BigInt::from(k) => {}
            other => failures.push(format!("root product at k={k}: got {other:?}")),
        }
    }

    // Field axioms and inverses on 1000 random samples.
    let orders = [3u32, 4, 5, 6, 7, 8, 9, 12, 15, 16, 20, 24];
    let mut rng = ChaCha8Rng::seed_from_u64(0xF1E1D);
    for sample in 0..1000 {
        let k = orders[sample % orders.len()];
        let a = random_cyclotomic(&mut rng, k);
        let b = random_cyclotomic(&mut rng, k);
        let c = random_cyclotomic(&mut rng, k);
        let assoc = a.mul(&b).unwrap().mul(&c).unwrap() == a.mul(&b.mul(&c).unwrap()).unwrap();
        let comm = a.mul(&b).unwrap() == b.mul(&a).unwrap();
        let distrib = a.mul(&b.add(&c).unwrap()).unwrap()
            == a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
        if !(assoc && comm && distrib) {
            failures.push(format!("field axiom failure at k={k} sample {sample}"));
        }
        if !a.is_zero() && !a.mul(&a.inverse().unwrap()).unwrap().is_one() {
            failures.push(format!("inverse failure at k={k} sample {sample}"));
        }
    }

    // four_sin_sq agrees with 4 sin^2(pi a / k) to relative 1e-12 when
    // embedded numerically.
    for k in 2..=40u32 {
        for a in 1..k {
            let value = four_sin_sq(k, a as i64).unwrap();
            let (re, im) = embed(&value);
            let expect = {
                let s = (std::f64::consts::PI * a as f64 / k as f64).sin();
                4.0 * s * s
            };
            if ((re - expect).abs() / expect).max(im.abs()) > 1e-12 {
                failures.push(format!(
                    "four_sin_sq({k},{a}) embeds to {re}+{im}i, expected {expect}"
                ));
            }
        }
    }

    report_criterion(8, "cyclotomic engine", &failures);
}

#[test]
fn criterion_09_clifford_properties() {
    let reports = identities::check_clifford(200);
    let mut failures = failures_of(&reports);
    // Make sure every advertised property family is present.
    for name in [
        "clifford_associativity",
        "clifford_relation",
        "clifford_involutions",
        "clifford_norm_multiplicative",
        "clifford_orthogonality",
        "clifford_even_center",
    ] {
        if !reports.iter().any(|r| r.name == name) {
            failures.push(format!("missing property family {name}"));
        }
    }
    report_criterion(9, "clifford property suite", &failures);
}

#[test]
fn criterion_10_float_oracle_cross_check() {
    let mut failures = Vec::new();
    let groups = [
        GroupId::Sl(2),
        GroupId::Sl(3),
        GroupId::Sl(4),
        GroupId::SpinOdd(3),
        GroupId::SpinEven(4),
    ];
    for group in groups {
        for level in 1..=4 {
            for genus in 1..=3 {
                let q = VerlindeQuery::new(group, level, genus).unwrap();
                let exact_value = verlinde::verlinde_number(&q).unwrap().to_f64().unwrap();
                let approx = verlinde::verlinde_float(&q).unwrap();
                let rel = (exact_value - approx).abs() / exact_value;
                if rel >= 1e-6 {
                    failures.push(format!(
                        "{group} l={level} g={genus}: exact {exact_value}, float {approx}, rel {rel:e}"
                    ));
                }
            }
        }
    }
    report_criterion(10, "float-oracle cross-check", &failures);
}

// The sanity observation attached to the spin_8 identity: the n-dependent
// tail 2^(g-1)(2^(2g) - n^g) of the even closed form vanishes identically
// at n = 4.
#[test]
fn spin8_closed_form_tail_vanishes() {
    for g in 1..=8u32 {
        assert_eq!(BigInt::from(4).pow(g), BigInt::from(2).pow(2 * g));
    }
}

// Exhaustive non-vanishing scan from the summation-domain invariants:
// l <= 8, rank parameters <= 11.
#[test]
fn sine_arguments_never_vanish() {
    for l in 1..=8 {
        for r in 2..=11 {
            assert!(verlinde::arguments_in_range(GroupId::Sl(r), l).unwrap());
        }
        for m in (3..=11).step_by(2) {
            assert!(verlinde::arguments_in_range(GroupId::SpinOdd(m), l).unwrap());
        }
        for m in (4..=10).step_by(2) {
            assert!(verlinde::arguments_in_range(GroupId::SpinEven(m), l).unwrap());
        }
    }
}

// Integrality scan: every evaluation extracts an integer without error over
// l <= 6, g <= 5, SL_r r <= 5, Spin_m m <= 11.
#[test]
fn integrality_scan() {
    let mut groups = vec![GroupId::Sl(2), GroupId::Sl(3), GroupId::Sl(4), GroupId::Sl(5)];
    groups.extend((3..=11).step_by(2).map(GroupId::SpinOdd));
    groups.extend((4..=10).step_by(2).map(GroupId::SpinEven));
    for group in groups {
        for l in 1..=6 {
            for g in 1..=5 {
                let q = VerlindeQuery::new(group, l, g).unwrap();
                let n = verlinde::verlinde_number(&q).unwrap();
                assert!(!n.is_negative(), "{group} l={l} g={g} gave {n}");
            }
        }
    }
}

// Full-suite smoke run at the default configuration.
#[test]
fn default_suite_passes() {
    let suite = identities::run_all(&identities::SuiteConfig::default());
    let failures: Vec<String> = suite
        .failures()
        .map(|r| format!("{} [{}]", r.name, r.parameter_string()))
        .collect();
    assert!(failures.is_empty(), "failures: {failures:?}");
    assert!(suite.reports.len() > 100);
}
