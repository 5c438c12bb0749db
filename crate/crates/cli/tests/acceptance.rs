//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits non-zero on any failure.

#[path = "../../core/tests/support/mod.rs"]
mod support;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use favkit_cli::{amiable_verdict, conductor_claims, table2_claims, Item, Status};
use favkit_core::curves::{cremona_batch, elliptic_ss2_criterion, parse_cremona, two_division_cubic, CremonaOutcome};
use favkit_core::exact_core::{frobenius_coimage_dim, FiniteField};
use favkit_core::f2_groups::groups_certificate;
use favkit_core::field_lab::relations::SearchConfig;
use favkit_core::field_lab::{class_and_units, maximal_order};
use favkit_core::fixtures::{table1, table2};
use favkit_core::honda_ext::{chi_table, honda_certificate, HondaParam};
use favkit_core::resolvent::{favorability_report, pair_resolvent_poly};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use support::{is_fundamental, numeric_pair_resolvent, order_histogram_cyclic, order_histogram_forms, quadratic_poly};

const SWEEP_LIMIT: Duration = Duration::from_secs(30);
const AMIABLE_FIELD_LIMIT: Duration = Duration::from_secs(30 * 60);
const GROUPS_LIMIT: Duration = Duration::from_secs(5 * 60);
const TABLE2_LIMIT: Duration = Duration::from_secs(10 * 60);

const ALPHA: [u64; 7] = [277, 349, 461, 613, 677, 797, 971];
const NOT_ALPHA: [u64; 1] = [2693];
const MILD: [usize; 3] = [25, 63, 64];
const HONDA_PARTITION: [usize; 5] = [7, 2, 6, 16, 1];
const CREMONA_SAMPLE: &str = include_str!("../../core/fixtures/cremona_sample.txt");

type Criterion = (u32, &'static str, fn() -> Outcome);

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

fn jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn favorability_sweep() -> Outcome {
    let start = Instant::now();
    let rows = table1();
    let bad: Vec<usize> = rows
        .iter()
        .filter(|r| {
            let rep = favorability_report(&r.f);
            !(rep.favorable && rep.n == Some(BigInt::from(r.n)))
        })
        .map(|r| r.index)
        .collect();
    let t = start.elapsed();
    outcome(
        rows.len() == 172 && bad.is_empty() && t < SWEEP_LIMIT,
        format!("{} rows, failures {bad:?}, {:.2} s (limit {} s)", rows.len(), t.as_secs_f64(), SWEEP_LIMIT.as_secs()),
    )
}

fn sign_rule() -> Outcome {
    // d_0 is the field discriminant; the polynomial discriminant carries the index squared
    let mut bad = vec![];
    let mut non_monogenic = 0;
    for r in table1() {
        let rep = favorability_report(&r.f);
        let k = maximal_order(&r.f).expect("maximal order");
        if k.index != BigInt::from(1) {
            non_monogenic += 1;
        }
        let ok = rep.n_star.as_ref().is_some_and(|ns| {
            ns.mod_floor(&BigInt::from(8)) == BigInt::from(5)
                && ns.abs() == BigInt::from(r.n)
                && k.disc == ns * 16
                && r.f.discriminant().ok() == Some(ns * 16 * &k.index * &k.index)
        });
        if !ok {
            bad.push(r.index);
        }
    }
    outcome(bad.is_empty(), format!("172 rows ({non_monogenic} with index > 1), failures {bad:?}"))
}

fn amiability() -> Outcome {
    let cfg = SearchConfig::default();
    let rows = table1();
    let mut all = true;
    let mut parts = vec![];
    for (n, want) in ALPHA.iter().map(|&n| (n, "alpha")).chain(NOT_ALPHA.iter().map(|&n| (n, "not-alpha"))) {
        let row = rows.iter().find(|r| r.n == n).expect("row in table");
        let item = Item { name: format!("N={n}"), poly: row.f.clone(), expect: Some(want.into()) };
        let start = Instant::now();
        let v = amiable_verdict(&item, &cfg);
        let t = start.elapsed();
        let ok = v.status == Status::Match && t <= AMIABLE_FIELD_LIMIT;
        all &= ok;
        let grh = v.detail.get("grh_conditional").and_then(|g| g.as_bool()).unwrap_or(true);
        parts.push(format!(
            "{n}:{}{}{} {:.1}s",
            v.computed,
            if ok { "" } else { "!" },
            if grh { "(grh)" } else { "" },
            t.as_secs_f64()
        ));
    }
    outcome(all, parts.join(", "))
}

fn group_certificate() -> Outcome {
    let start = Instant::now();
    match groups_certificate() {
        Ok(c) => {
            let t = start.elapsed();
            let failing: Vec<&str> = c.claims.iter().filter(|x| !x.passed).map(|x| x.name.as_str()).collect();
            outcome(
                c.passed && t < GROUPS_LIMIT,
                format!(
                    "{} claims, failing {failing:?}, {:.1} s (limit {} s)",
                    c.claims.len(),
                    t.as_secs_f64(),
                    GROUPS_LIMIT.as_secs()
                ),
            )
        }
        Err(e) => outcome(false, e.to_string()),
    }
}

fn honda() -> Outcome {
    match honda_certificate() {
        Ok(c) => {
            let failing: Vec<&str> = c.claims.iter().filter(|x| !x.passed).map(|x| x.name.as_str()).collect();
            outcome(
                c.passed && c.partition == HONDA_PARTITION,
                format!("{} claims, partition {:?}, failing {failing:?}", c.claims.len(), c.partition),
            )
        }
        Err(e) => outcome(false, e.to_string()),
    }
}

fn conductors() -> Outcome {
    match conductor_claims() {
        Ok(cs) => outcome(
            cs.iter().all(|c| c.passed),
            cs.iter().map(|c| format!("{} = {}", c.name, c.detail)).collect::<Vec<_>>().join("; "),
        ),
        Err(e) => outcome(false, e.to_string()),
    }
}

fn curve_matching() -> Outcome {
    let start = Instant::now();
    let rows = table2();
    let claims = table2_claims(&rows, 5, 0x5eed, jobs());
    let t = start.elapsed();
    let failing: Vec<&str> = claims.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
    let mild_ok = claims.iter().any(|c| c.name.starts_with("mild") && c.passed);
    outcome(
        rows.len() == 75 && failing.is_empty() && mild_ok && t < TABLE2_LIMIT,
        format!(
            "{} rows, mild {MILD:?} {}, failing {failing:?}, {:.1} s (limit {} s)",
            rows.len(),
            if mild_ok { "ok" } else { "wrong" },
            t.as_secs_f64(),
            TABLE2_LIMIT.as_secs()
        ),
    )
}

fn elliptic() -> Outcome {
    let cfg = SearchConfig::default();
    let mut parts = vec![];
    let mut all = true;
    for (name, a) in [("J0(11)", [0i64, -1, 1, -10, -20]), ("J0(19)", [0, 1, 1, -9, -15])] {
        match elliptic_ss2_criterion(&two_division_cubic(&a.map(BigInt::from))) {
            Ok(c) => {
                all &= c.verdict;
                parts.push(format!("{name}: {}", c.verdict));
            }
            Err(e) => {
                all = false;
                parts.push(format!("{name}: {e}"));
            }
        }
    }
    match parse_cremona(CREMONA_SAMPLE).and_then(|cs| cremona_batch(&cs, &cfg)) {
        Ok(es) => {
            let count = |k: u8| {
                es.iter()
                    .filter(|e| match e.outcome {
                        CremonaOutcome::Holds { .. } => k == 0,
                        CremonaOutcome::Fails { .. } => k == 1,
                        CremonaOutcome::NotApplicable { .. } => k == 2,
                    })
                    .count()
            };
            all &= es.len() == 100;
            parts.push(format!(
                "sample of {}: {} hold, {} fail, {} not applicable",
                es.len(),
                count(0),
                count(1),
                count(2)
            ));
        }
        Err(e) => {
            all = false;
            parts.push(format!("sample: {e}"));
        }
    }
    outcome(all, parts.join("; "))
}

fn oracle_suites() -> Outcome {
    let cfg = SearchConfig::default();
    let mut parts = vec![];

    let mut forms_bad = vec![];
    let mut forms_n = 0;
    for d in (-499..=-3).filter(|&d| is_fundamental(d)) {
        forms_n += 1;
        let ok = maximal_order(&quadratic_poly(d))
            .and_then(|k| class_and_units(&k, &cfg))
            .is_ok_and(|cu| order_histogram_cyclic(&cu.class_group) == order_histogram_forms(d));
        if !ok {
            forms_bad.push(d);
        }
    }
    parts.push(format!("forms {forms_n} discs, failures {forms_bad:?}"));

    let mut coimage_bad = vec![];
    for p in [2u64, 3] {
        for m in 1..=8usize {
            let k = FiniteField::new(p, m).expect("field");
            if frobenius_coimage_dim(&k, 4) != m.gcd(&4) {
                coimage_bad.push((p, m));
            }
        }
    }
    parts.push(format!("coimage failures {coimage_bad:?}"));

    let rows = table1();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let sample: Vec<_> = rows.choose_multiple(&mut rng, 20).collect();
    let resolvent_bad: Vec<usize> = sample
        .iter()
        .filter(|r| pair_resolvent_poly(&r.f).ok() != Some(numeric_pair_resolvent(&r.f)))
        .map(|r| r.index)
        .collect();
    parts.push(format!("resolvent rows {}, failures {resolvent_bad:?}", sample.len()));

    let mut chi_bad = 0;
    for a in 0..32 {
        for b in 0..32 {
            let (sa, sb) = (HondaParam::from_index(a), HondaParam::from_index(b));
            let ok = match (sa.add(&sb), chi_table(&sa), chi_table(&sb)) {
                (Ok(s), Ok(ca), Ok(cb)) => chi_table(&s).is_ok_and(|c| c == ca.add(&cb)),
                _ => false,
            };
            chi_bad += usize::from(!ok);
        }
    }
    parts.push(format!("chi 1024 sums, failures {chi_bad}"));

    let passed =
        forms_n == 153 && forms_bad.is_empty() && coimage_bad.is_empty() && resolvent_bad.is_empty() && chi_bad == 0;
    outcome(passed, parts.join("; "))
}

fn main() {
    let criteria: [Criterion; 9] = [
        (1, "favorability sweep", favorability_sweep),
        (2, "sign rule", sign_rule),
        (3, "amiability", amiability),
        (4, "group certificate", group_certificate),
        (5, "honda certificate", honda),
        (6, "conductor formulas", conductors),
        (7, "curve matching", curve_matching),
        (8, "elliptic criterion", elliptic),
        (9, "oracle suites", oracle_suites),
    ];
    let mut failed = 0;
    for (n, name, run) in criteria {
        let start = Instant::now();
        let out = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| outcome(false, "panicked"));
        failed += usize::from(!out.passed);
        println!(
            "{} {n} {name} [{:.1} s]: {}",
            if out.passed { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64(),
            out.detail
        );
    }
    println!("acceptance: {} of 9 criteria passed", 9 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
