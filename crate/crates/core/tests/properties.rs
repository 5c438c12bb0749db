use std::collections::BTreeMap;

use favkit_core::exact_core::{frobenius_coimage_dim, F2Matrix, FiniteField, IntPoly};
use favkit_core::f2_groups::{corner, corners_in, gamma_span};
use favkit_core::honda_ext::{
    baer_sum_system, chi_table, conductor_classify, extension_system, prolongation_decision, CornerTriple, HondaParam,
};
use favkit_core::local_conductors::{
    kummer_conductor, newton_polygon, one_gap_conductor, KappaShape, LocalFieldProfile,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use proptest::prelude::*;

fn poly(deg_lo: usize, deg_hi: usize) -> impl Strategy<Value = IntPoly> {
    (deg_lo..=deg_hi).prop_flat_map(|d| {
        (prop::collection::vec(-9i64..=9, d), prop_oneof![1i64..=5, -5i64..=-1]).prop_map(|(mut c, lc)| {
            c.push(lc);
            IntPoly::from_i64(&c)
        })
    })
}

fn param(k: FiniteField) -> impl Strategy<Value = HondaParam> {
    let q = k.order();
    prop::collection::vec(0..q, 5)
        .prop_map(move |ix| HondaParam::new(&k, ix.iter().map(|&i| k.from_index(i)).collect()).unwrap())
}

fn small_field() -> impl Strategy<Value = FiniteField> {
    prop_oneof![Just(FiniteField::new(2, 2).unwrap()), Just(FiniteField::new(2, 4).unwrap())]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn resultant_sign_law(f in poly(1, 5), g in poly(1, 5)) {
        let sign = if (f.deg() * g.deg()) % 2 == 0 { 1 } else { -1 };
        let a = f.resultant(&g);
        prop_assert_eq!(&a * g.resultant(&f), BigInt::from(sign) * &a * &a);
    }

    #[test]
    fn discriminant_shift_invariant(f in poly(2, 6), c in -20i64..=20) {
        prop_assert_eq!(f.discriminant().unwrap(), f.shift(&BigInt::from(c)).discriminant().unwrap());
    }

    #[test]
    fn f2_multiplication_matches_naive(a in any::<u64>(), b in any::<u64>()) {
        let (x, y) = (F2Matrix::from_bits(8, 8, a), F2Matrix::from_bits(8, 8, b));
        let z = x.mul(&y);
        for i in 0..8 {
            for j in 0..8 {
                let naive = (0..8).fold(false, |acc, k| acc ^ (x.get(i, k) & y.get(k, j)));
                prop_assert_eq!(z.get(i, j), naive);
            }
        }
    }

    #[test]
    fn newton_polygon_of_product(f in poly(1, 4), g in poly(1, 4), p in prop_oneof![Just(2u64), Just(3), Just(5)]) {
        prop_assume!(f.coeff(0) != BigInt::from(0) && g.coeff(0) != BigInt::from(0));
        let merged = |segs: &[(BigRational, usize)], m: &mut BTreeMap<BigRational, usize>| {
            for (s, l) in segs {
                *m.entry(s.clone()).or_default() += l;
            }
        };
        let mut want = BTreeMap::new();
        merged(&newton_polygon(&f, p).unwrap().segments, &mut want);
        merged(&newton_polygon(&g, p).unwrap().segments, &mut want);
        let mut got = BTreeMap::new();
        merged(&newton_polygon(&(&f * &g), p).unwrap().segments, &mut got);
        prop_assert_eq!(got, want);
    }

    #[test]
    fn extension_systems_over_f4_f16(k in small_field(), seed in any::<u64>()) {
        let q = k.order();
        let s: Vec<_> = (0..5).map(|i| k.from_index((seed >> (8 * i)) % q)).collect();
        let s = HondaParam::new(&k, s).unwrap();
        let lambda = k.from_index(1 + (seed >> 48) % (q - 1));
        let w = extension_system(&lambda, &s).unwrap();
        prop_assert!(w.check().all());
    }

    #[test]
    fn baer_sum_laws(k in small_field(), i in any::<[u64; 15]>()) {
        let q = k.order();
        let mk = |o: usize| HondaParam::new(&k, (0..5).map(|j| k.from_index(i[o + j] % q)).collect()).unwrap();
        let (a, b, c) = (mk(0), mk(5), mk(10));
        let zero = HondaParam::zero(&k);
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert_eq!(a.add(&b).unwrap().add(&c).unwrap(), a.add(&b.add(&c).unwrap()).unwrap());
        prop_assert_eq!(a.add(&zero).unwrap(), a.clone());
        prop_assert!(a.add(&a.neg()).unwrap().is_zero());
        let one = k.one();
        let (wa, wb) = (extension_system(&one, &a).unwrap(), extension_system(&one, &b).unwrap());
        let sum = baer_sum_system(&wa, &wb).unwrap();
        prop_assert!(sum.same_matrices(&extension_system(&one, &a.add(&b).unwrap()).unwrap()));
    }

    #[test]
    fn classifier_bound(s in param(FiniteField::new(3, 1).unwrap())) {
        let c = conductor_classify(&s, 3).unwrap();
        prop_assert!(c.exponent <= 9);
        let k = s.field();
        let eps_only = !k.is_zero(s.get(1)) && k.is_zero(s.get(2));
        prop_assert_eq!(c.exponent == 9 - 6 + 2, eps_only);
    }

    #[test]
    fn classifier_bound_f4(s in param(FiniteField::new(2, 2).unwrap())) {
        let c = conductor_classify(&s, 2).unwrap();
        prop_assert!(c.exponent <= 4);
        let k = s.field();
        let ls = s.get(2).clone();
        let eps = k.sub(s.get(1), &k.mul(&ls, &ls));
        let eps_no_s2 = !k.is_zero(&eps) && k.is_zero(s.get(2));
        // for p = 2, p^2 - 2p + 2 = 2 = p, so s3 or s5 alone also give 2
        if c.exponent == 2 {
            prop_assert!(eps_no_s2 || !k.is_zero(s.get(3)) || !k.is_zero(s.get(5)));
        }
    }
}

#[test]
fn frobenius_coimage_is_gcd() {
    for p in [2u64, 3] {
        for m in 1..=8usize {
            let k = FiniteField::new(p, m).unwrap();
            assert_eq!(frobenius_coimage_dim(&k, 4), m.gcd(&4), "p = {p}, m = {m}");
        }
    }
}

#[test]
fn slot_four_is_a_quotient() {
    // over F8, sigma^4 = sigma and (sigma - 1)k has dimension 2
    let k = FiniteField::new(2, 3).unwrap();
    for x in k.elements() {
        let y = k.sub(&k.frob(&x, 4), &x);
        for s4 in k.elements() {
            let mut a = vec![k.zero(); 5];
            a[3] = s4.clone();
            let mut b = a.clone();
            b[3] = k.add(&s4, &y);
            assert_eq!(HondaParam::new(&k, a).unwrap(), HondaParam::new(&k, b).unwrap());
        }
    }
    let k16 = FiniteField::new(2, 4).unwrap();
    for x in k16.elements() {
        assert!(k16.is_zero(&k16.sub(&k16.frob(&x, 4), &x)));
    }
}

#[test]
fn chi_is_additive() {
    for a in 0..32 {
        for b in 0..32 {
            let (sa, sb) = (HondaParam::from_index(a), HondaParam::from_index(b));
            let lhs = chi_table(&sa.add(&sb).unwrap()).unwrap();
            let rhs = chi_table(&sa).unwrap().add(&chi_table(&sb).unwrap());
            assert_eq!(lhs, rhs, "{sa} + {sb}");
        }
    }
}

#[test]
fn prolongation_consistency() {
    let cors: Vec<&str> = vec!["0", "4", "5", "9", "11", "11'", "15", "15'"];
    for g1 in &cors {
        let t = CornerTriple::from_labels("0", g1, "0").unwrap();
        assert!(matches!(prolongation_decision(&t).unwrap(), favkit_core::honda_ext::Prolongation::Prolongs { .. }));
    }
    for a in [4u32, 5, 11] {
        let span = gamma_span(favkit_core::f2_groups::gamma(a).unwrap());
        let mut labels = corners_in(&span);
        labels.insert(0, "0");
        for g1 in &labels {
            for g2 in &labels {
                let t = CornerTriple { g0: 0, g1: corner(g1).unwrap(), g2: corner(g2).unwrap() };
                if let favkit_core::honda_ext::Prolongation::Prolongs { s } = prolongation_decision(&t).unwrap() {
                    let c = conductor_classify(&HondaParam::from_bits(&s).unwrap(), 2).unwrap();
                    assert!(c.exponent <= 2, "a = {a}, {g1}, {g2} -> {s}");
                }
            }
        }
    }
}

#[test]
fn kummer_prime_to_p_is_maximal() {
    for (p, e) in [(2u64, 5u64), (2, 1), (3, 2), (3, 4), (5, 4)] {
        let k = LocalFieldProfile::new(p, e, true).unwrap();
        let top = kummer_conductor(&k, KappaShape::ValuationPrimeToP).unwrap();
        for n in 1..=p * e / (p - 1) {
            if let Ok(c) = kummer_conductor(&k, KappaShape::OneUnit(n)) {
                assert!(c <= top, "p = {p}, e = {e}, n = {n}");
            }
        }
    }
    let sharp = BigRational::from_integer(4.into());
    assert!(sharp < favkit_core::local_conductors::fontaine_bound(5, 5, 1, 2).unwrap());
}

#[test]
fn one_gap_matches_herbrand() {
    for p in [2u64, 3, 5] {
        for n in 1..12u64 {
            let Ok((c, filt)) = one_gap_conductor(n, p) else { continue };
            let phi = filt.herbrand_phi(&BigRational::from_integer(BigInt::from(n)));
            assert_eq!(BigRational::from_integer(BigInt::from(c)), phi + BigRational::from_integer(1.into()));
            assert_eq!(filt.conductor(), BigRational::from_integer(BigInt::from(c)));
        }
    }
}
