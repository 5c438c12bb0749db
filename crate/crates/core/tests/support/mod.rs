//! Independent oracles shared by the oracle tests and the acceptance suite.

#![allow(dead_code)]

use std::collections::BTreeMap;

use favkit_core::exact_core::IntPoly;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

// ---- binary quadratic forms ----

pub type Form = (i64, i64, i64);

pub fn reduce((mut a, mut b, mut c): Form) -> Form {
    loop {
        if !(-a < b && b <= a) {
            let two_a = 2 * a;
            let r = (b + a).rem_euclid(two_a) - a;
            let d = b * b - 4 * a * c;
            b = if r == -a { a } else { r };
            c = (b * b - d) / (4 * a);
        }
        if a > c {
            (a, b, c) = (c, -b, a);
            continue;
        }
        if a == c && b < 0 {
            b = -b;
        }
        return (a, b, c);
    }
}

/// Dirichlet composition of primitive forms of the same discriminant, by direct search for
/// the united middle coefficient.
pub fn compose(f1: Form, f2: Form, disc: i64) -> Form {
    let (a1, b1, _) = f1;
    let (a2, b2, _) = f2;
    let e = a1.gcd(&a2).gcd(&((b1 + b2) / 2));
    let a3 = a1 * a2 / (e * e);
    for bb in -a3 + 1..=a3 {
        if (bb - b1).rem_euclid(2 * a1 / e) == 0
            && (bb - b2).rem_euclid(2 * a2 / e) == 0
            && (bb * bb - disc).rem_euclid(4 * a3) == 0
        {
            return reduce((a3, bb, (bb * bb - disc) / (4 * a3)));
        }
    }
    unreachable!("no composition for {f1:?} * {f2:?}")
}

pub fn reduced_forms(disc: i64) -> Vec<Form> {
    let mut out = vec![];
    let amax = ((-disc as f64 / 3.0).sqrt()) as i64 + 1;
    for a in 1..=amax {
        for b in -a + 1..=a {
            let num = b * b - disc;
            if num % (4 * a) != 0 {
                continue;
            }
            let c = num / (4 * a);
            if c < a || (c == a && b < 0) {
                continue;
            }
            if a.gcd(&b).gcd(&c) != 1 {
                continue;
            }
            out.push((a, b, c));
        }
    }
    out
}

/// Histogram of element orders; determines a finite abelian group up to isomorphism.
pub fn order_histogram_forms(disc: i64) -> BTreeMap<u64, usize> {
    let forms = reduced_forms(disc);
    let id = reduce((1, disc.rem_euclid(2), (disc.rem_euclid(2) - disc) / 4));
    let mut h = BTreeMap::new();
    for &f in &forms {
        let mut g = f;
        let mut o = 1;
        while g != id {
            g = compose(g, f, disc);
            o += 1;
        }
        *h.entry(o).or_default() += 1;
    }
    h
}

pub fn order_histogram_cyclic(cyc: &[u64]) -> BTreeMap<u64, usize> {
    let mut orders = vec![1u64];
    for &d in cyc {
        orders = orders.iter().flat_map(|&o| (0..d).map(move |x| o.lcm(&(d / x.gcd(&d))))).collect();
    }
    let mut h = BTreeMap::new();
    for o in orders {
        *h.entry(o).or_default() += 1;
    }
    h
}

pub fn is_fundamental(d: i64) -> bool {
    let squarefree = |m: i64| (2..).take_while(|p| p * p <= m.abs()).all(|p| m % (p * p) != 0);
    match d.rem_euclid(4) {
        1 => squarefree(d),
        0 => matches!((d / 4).rem_euclid(4), 2 | 3) && squarefree(d / 4),
        _ => false,
    }
}

pub fn quadratic_poly(d: i64) -> IntPoly {
    if d.rem_euclid(4) == 1 {
        IntPoly::from_i64(&[(1 - d) / 4, -1, 1])
    } else {
        IntPoly::from_i64(&[-d / 4, 0, 1])
    }
}

// ---- 200-bit numeric roots ----

const PREC: u32 = 256;

#[derive(Clone, Debug)]
struct Cx {
    re: BigInt,
    im: BigInt,
}

impl Cx {
    fn from_f64(re: f64, im: f64) -> Self {
        let s = |x: f64| BigInt::from((x * 2f64.powi(52)) as i64) << (PREC - 52);
        Cx { re: s(re), im: s(im) }
    }
    fn int(n: &BigInt) -> Self {
        Cx { re: n << PREC, im: BigInt::zero() }
    }
    fn add(&self, o: &Cx) -> Cx {
        Cx { re: &self.re + &o.re, im: &self.im + &o.im }
    }
    fn sub(&self, o: &Cx) -> Cx {
        Cx { re: &self.re - &o.re, im: &self.im - &o.im }
    }
    fn mul(&self, o: &Cx) -> Cx {
        Cx { re: (&self.re * &o.re - &self.im * &o.im) >> PREC, im: (&self.re * &o.im + &self.im * &o.re) >> PREC }
    }
    fn div(&self, o: &Cx) -> Cx {
        let den = (&o.re * &o.re + &o.im * &o.im) >> PREC;
        Cx { re: (&self.re * &o.re + &self.im * &o.im) / &den, im: (&self.im * &o.re - &self.re * &o.im) / &den }
    }
    fn mag_bits(&self) -> u64 {
        self.re.abs().bits().max(self.im.abs().bits())
    }
}

fn horner(c: &[Cx], x: &Cx) -> Cx {
    c.iter().rev().fold(Cx::int(&BigInt::zero()), |acc, a| acc.mul(x).add(a))
}

/// Roots of a squarefree integer polynomial to about `PREC` bits: complex Durand-Kerner in
/// doubles, then Newton steps in fixed point.
fn roots(f: &IntPoly) -> Vec<Cx> {
    let n = f.deg();
    let lc = f.coeff(n).to_f64().unwrap();
    let cf: Vec<f64> = f.coeffs().iter().map(|c| c.to_f64().unwrap() / lc).collect();
    let ev = |z: num_complex::Complex64| cf.iter().rev().fold(num_complex::Complex64::new(0.0, 0.0), |a, &c| a * z + c);
    let mut z: Vec<num_complex::Complex64> = (0..n)
        .map(|k| num_complex::Complex64::from_polar(1.2, 0.4 + 2.0 * std::f64::consts::PI * k as f64 / n as f64))
        .collect();
    for _ in 0..500 {
        for i in 0..n {
            let den: num_complex::Complex64 = (0..n).filter(|&j| j != i).map(|j| z[i] - z[j]).product();
            let step = ev(z[i]) / den;
            z[i] -= step;
        }
    }
    let c: Vec<Cx> = f.coeffs().iter().map(Cx::int).collect();
    let dc: Vec<Cx> = (1..=n).map(|i| Cx::int(&(f.coeff(i) * BigInt::from(i)))).collect();
    z.iter()
        .map(|w| {
            let mut x = Cx::from_f64(w.re, w.im);
            for _ in 0..8 {
                x = x.sub(&horner(&c, &x).div(&horner(&dc, &x)));
            }
            assert!(horner(&c, &x).mag_bits() < (PREC as u64) - 190, "Newton did not converge");
            x
        })
        .collect()
}

/// `prod_{i<j} (x - r_i - r_j)` rounded to integers.
pub fn numeric_pair_resolvent(f: &IntPoly) -> IntPoly {
    let r = roots(f);
    let mut poly = vec![Cx::int(&BigInt::from(1))];
    for i in 0..r.len() {
        for j in i + 1..r.len() {
            let s = r[i].add(&r[j]);
            let mut next = vec![Cx::int(&BigInt::zero()); poly.len() + 1];
            for (k, c) in poly.iter().enumerate() {
                next[k + 1] = next[k + 1].add(c);
                next[k] = next[k].sub(&c.mul(&s));
            }
            poly = next;
        }
    }
    let half = BigInt::from(1) << (PREC - 1);
    let coeffs: Vec<BigInt> = poly
        .iter()
        .map(|c| {
            assert!(c.im.abs().bits() < (PREC as u64) - 100, "imaginary part too large");
            let q = (&c.re + &half) >> PREC;
            let err = &c.re - (&q << PREC);
            assert!(err.abs().bits() < (PREC as u64) - 100, "coefficient not near an integer");
            q
        })
        .collect();
    IntPoly::new(coeffs)
}
