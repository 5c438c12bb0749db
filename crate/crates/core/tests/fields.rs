//! Invariants of the number-field pipeline on the embedded favorable fields.

use favkit_core::curves::{elliptic_ss2_criterion, two_division_cubic, two_division_match};
use favkit_core::exact_core::{is_irreducible_z, signature, IntPoly};
use favkit_core::field_lab::relations::SearchConfig;
use favkit_core::field_lab::{amiable, maximal_order, splitting_type, FieldElt, NumberFieldData};
use favkit_core::fixtures::{table1, table2};
use favkit_core::resolvent::{pair_resolvent, pair_resolvent_poly};
use num_bigint::BigInt;

fn tschirnhaus(k: &NumberFieldData, t: &[i64]) -> IntPoly {
    let a = k.from_int_poly(&IntPoly::from_i64(t));
    k.char_poly(&FieldElt::integral(a)).to_int().expect("integral element")
}

fn verdict(k: &NumberFieldData) -> (bool, Option<usize>, Option<usize>) {
    let (a, r2, r4, _) = amiable(k, &SearchConfig::default()).unwrap();
    (a, r2, r4)
}

#[test]
fn amiability_is_a_field_invariant() {
    let f = &table1()[0].f;
    let k = pair_resolvent(f).unwrap().field;
    let base = verdict(&k);
    assert_eq!(base, (true, Some(0), Some(0)));

    let shifted = maximal_order(&pair_resolvent_poly(&f.shift(&BigInt::from(3))).unwrap()).unwrap();
    assert_eq!(shifted.disc, k.disc);
    assert_eq!(verdict(&shifted), base);

    let g = tschirnhaus(&k, &[1, 1, 1]);
    assert!(is_irreducible_z(&g));
    let other = maximal_order(&g).unwrap();
    assert_eq!(other.disc, k.disc);
    assert_eq!(verdict(&other), base);
}

#[test]
fn prefilters_never_contradict() {
    for n in [277u64, 2693] {
        let row = table1().into_iter().find(|r| r.n == n).unwrap();
        let k = pair_resolvent(&row.f).unwrap().field;
        let (flag, _, _, det) = amiable(&k, &SearchConfig::default()).unwrap();
        assert_eq!(flag, row.alpha, "N = {n}");
        if det.filters.iter().any(|f| !f.passed) {
            assert!(!flag, "N = {n}: a failed pre-filter with an amiable verdict");
        }
    }
}

#[test]
fn resolvent_shapes_over_table1() {
    for row in table1() {
        let g = pair_resolvent_poly(&row.f).unwrap();
        if signature(&row.f).unwrap() == (1, 2) {
            assert_ne!(signature(&g).unwrap().1, 0, "N = {}", row.n);
        }
    }
    for row in table1().iter().step_by(17) {
        let k = maximal_order(&pair_resolvent_poly(&row.f).unwrap()).unwrap();
        let two = splitting_type(&k, 2).unwrap();
        assert_eq!(two.primes.len(), 1, "N = {}", row.n);
        assert_eq!(two.primes[0].e, 5, "N = {}", row.n);
    }
}

#[test]
fn curve_matching_is_shift_symmetric() {
    let t1 = table1();
    let t2 = table2();
    for row in t2.iter().take(4) {
        let f = &t1[row.field - 1].f;
        let decoy = &t1[row.field % t1.len()].f;
        for c in [-2i64, 1, 5] {
            let c = BigInt::from(c);
            assert!(two_division_match(&row.g.shift(&c), f).unwrap(), "curve {}", row.index);
            assert!(two_division_match(&row.g, &f.shift(&c)).unwrap(), "curve {}", row.index);
            assert!(!two_division_match(&row.g.shift(&c), decoy).unwrap(), "curve {}", row.index);
        }
    }
}

#[test]
fn elliptic_criterion_is_a_field_invariant() {
    for ainvs in [[0i64, -1, 1, -10, -20], [0, 1, 1, -9, -15]] {
        let cubic = two_division_cubic(&ainvs.map(BigInt::from));
        let base = elliptic_ss2_criterion(&cubic).unwrap();
        let k = maximal_order(&base.field_poly).unwrap();
        for t in [&[2i64, 1][..], &[0, 1, 1], &[-1, 2, 1]] {
            let g = tschirnhaus(&k, t);
            if !is_irreducible_z(&g) {
                continue;
            }
            let other = elliptic_ss2_criterion(&g).unwrap();
            assert_eq!(other.field_disc, base.field_disc);
            assert_eq!((other.rank, other.verdict), (base.rank, base.verdict), "transform {t:?}");
        }
    }
}
