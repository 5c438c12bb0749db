//! Exact results checked against independent brute-force or high-precision oracles.

use std::collections::BTreeMap;

mod support;

use favkit_core::exact_core::IntPoly;
use favkit_core::field_lab::rayclass::SelmerData;
use favkit_core::field_lab::relations::SearchConfig;
use favkit_core::field_lab::{class_and_units, maximal_order, splitting_type};
use favkit_core::fixtures::table1;
use favkit_core::resolvent::pair_resolvent_poly;
use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use support::*;

#[test]
fn composition_sanity() {
    // Cl(-56) is cyclic of order 4
    assert_eq!(order_histogram_forms(-56), BTreeMap::from([(1, 1), (2, 1), (4, 2)]));
    // Cl(-84) is (Z/2)^2
    assert_eq!(order_histogram_forms(-84), BTreeMap::from([(1, 1), (2, 3)]));
}

#[test]
fn imaginary_quadratic_class_groups() {
    let cfg = SearchConfig::default();
    let mut checked = 0;
    for d in (-499..=-3).rev() {
        if !is_fundamental(d) {
            continue;
        }
        let k = maximal_order(&quadratic_poly(d)).unwrap();
        assert_eq!(k.disc, BigInt::from(d), "discriminant for d = {d}");
        let cu = class_and_units(&k, &cfg).unwrap();
        assert_eq!(order_histogram_cyclic(&cu.class_group), order_histogram_forms(d), "class group for d = {d}");
        checked += 1;
    }
    assert_eq!(checked, 153);
}

#[test]
fn genus_theory_two_ranks() {
    // rk_0 is the 2-rank of the narrow class group: omega(d) - 1 for quadratic fields
    let cfg = SearchConfig::default();
    for d in (-200i64..=200).filter(|&d| d != 1 && is_fundamental(d)) {
        let omega = (2..=d.unsigned_abs()).filter(|&p| d.unsigned_abs() % p == 0 && (2..p).all(|q| p % q != 0)).count();
        let k = maximal_order(&quadratic_poly(d)).unwrap();
        let sel = SelmerData::new(&k, &cfg).unwrap();
        let ranks: Vec<usize> = (0..=8).map(|a| sel.ray_rank(0, a).rank).collect();
        assert_eq!(ranks[0], omega - 1, "d = {d}");
        assert!(ranks.windows(2).all(|w| w[0] <= w[1]), "d = {d}: {ranks:?}");
    }
}

#[test]
fn pair_resolvent_matches_numeric_roots() {
    let rows = table1();
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    let sample: Vec<_> = rows.choose_multiple(&mut rng, 18).collect();
    let mut polys: Vec<IntPoly> = sample.iter().map(|r| r.f.clone()).collect();
    polys.push(rows[0].f.clone());
    polys.push(IntPoly::from_i64(&[-2, 0, 0, 0, 0, 1]));
    assert_eq!(polys.len(), 20);
    for f in &polys {
        assert_eq!(pair_resolvent_poly(f).unwrap(), numeric_pair_resolvent(f), "f = {f}");
    }
}

// ---- Dedekind splitting ----

#[test]
fn row_one_splitting_at_n() {
    // f = (x - 20)(x + 55)^2 q(x) mod 277 with q irreducible: inertia <(12)>, Frobenius (45).
    // Orbits of <(12), (45)> on the ten root pairs give the (e, f) list below.
    let g = pair_resolvent_poly(&table1()[0].f).unwrap();
    let k = maximal_order(&g).unwrap();
    assert_eq!(splitting_type(&k, 277).unwrap().ef(), vec![(1, 1), (1, 1), (1, 2), (2, 1), (2, 2)]);
    assert_eq!(splitting_type(&k, 2).unwrap().ef(), vec![(5, 2)]);
}

#[test]
fn splitting_sums_to_degree() {
    for row in table1().iter().take(6) {
        let g = pair_resolvent_poly(&row.f).unwrap();
        let k = maximal_order(&g).unwrap();
        for q in [2u64, 3, 5, 7, 11, 13] {
            let s = splitting_type(&k, q).unwrap();
            assert_eq!(s.degree_sum(), 10, "N = {}, q = {q}", row.n);
        }
        let two = splitting_type(&k, 2).unwrap();
        assert_eq!(two.primes.len(), 1);
        assert_eq!(two.primes[0].e, 5, "N = {}", row.n);
        let nq = splitting_type(&k, row.n).unwrap();
        assert_eq!(nq.degree_sum(), 10);
    }
}
