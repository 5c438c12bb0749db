//! Complex root approximation and exact real-root isolation.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::IntPoly;
use super::qpoly::QPoly;
use super::sturm::{count_real_roots, count_real_roots_in};

/// All complex roots by Aberth-Ehrlich iteration in double precision.
pub fn complex_roots(f: &IntPoly) -> Vec<Complex64> {
    let n = f.deg();
    if n == 0 {
        return vec![];
    }
    let lc = f.lc().to_f64().unwrap();
    let c: Vec<f64> = f.coeffs().iter().map(|a| a.to_f64().unwrap() / lc).collect();
    let df = f.derivative();
    let dc: Vec<f64> = df.coeffs().iter().map(|a| a.to_f64().unwrap() / lc).collect();
    let ev = |cs: &[f64], z: Complex64| cs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a);
    let radius = 1.0 + c[..n].iter().map(|a| a.abs()).fold(0.0, f64::max);
    let r0 = radius.min(c[..n].iter().map(|a| a.abs()).sum::<f64>().max(1.0));
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(r0 * 0.7, 2.0 * std::f64::consts::PI * (k as f64 + 0.25) / n as f64 + 0.4))
        .collect();
    for _ in 0..2000 {
        let mut maxstep: f64 = 0.0;
        for i in 0..n {
            let p = ev(&c, z[i]);
            let d = ev(&dc, z[i]);
            let ratio = p / d;
            let s: Complex64 = (0..n).filter(|&j| j != i).map(|j| Complex64::new(1.0, 0.0) / (z[i] - z[j])).sum();
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            if w.is_finite() {
                z[i] -= w;
                maxstep = maxstep.max(w.norm() / (1.0 + z[i].norm()));
            }
        }
        if maxstep < 1e-15 {
            break;
        }
    }
    z
}

/// Roots split into real roots (ascending) and one representative of each conjugate
/// pair (positive imaginary part, sorted by real part). The real count is exact (Sturm).
pub fn embeddings(f: &IntPoly) -> (Vec<f64>, Vec<Complex64>) {
    let r1 = count_real_roots(f);
    let mut z = complex_roots(f);
    z.sort_by(|a, b| a.im.abs().partial_cmp(&b.im.abs()).unwrap());
    let mut reals: Vec<f64> = z[..r1].iter().map(|w| w.re).collect();
    reals.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut cx: Vec<Complex64> = z[r1..].iter().filter(|w| w.im > 0.0).map(|w| Complex64::new(w.re, w.im)).collect();
    cx.sort_by(|a, b| a.re.partial_cmp(&b.re).unwrap().then(a.im.partial_cmp(&b.im).unwrap()));
    (reals, cx)
}

fn cauchy_bound(f: &IntPoly) -> BigRational {
    let lc = f.lc().abs();
    let m = f.coeffs()[..f.deg()].iter().map(|a| a.abs()).max().unwrap_or_default();
    BigRational::new(m + &lc, lc) + BigRational::one()
}

/// Disjoint rational intervals `(a, b]`, each holding exactly one real root, ascending.
pub fn isolate_real_roots(f: &IntPoly) -> Vec<(BigRational, BigRational)> {
    let b = cauchy_bound(f);
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b)];
    while let Some((lo, hi)) = stack.pop() {
        let k = count_real_roots_in(f, &lo, &hi);
        if k == 0 {
            continue;
        }
        if k == 1 {
            out.push((lo, hi));
            continue;
        }
        let mid = (&lo + &hi) / BigRational::from_integer(BigInt::from(2));
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    out
}

/// Halve the isolating interval once.
pub fn refine_root(f: &IntPoly, iv: &(BigRational, BigRational)) -> (BigRational, BigRational) {
    let mid = (&iv.0 + &iv.1) / BigRational::from_integer(BigInt::from(2));
    if count_real_roots_in(f, &iv.0, &mid) == 1 {
        (iv.0.clone(), mid)
    } else {
        (mid, iv.1.clone())
    }
}

fn interval_eval(g: &QPoly, lo: &BigRational, hi: &BigRational) -> (BigRational, BigRational) {
    let mut a = BigRational::zero();
    let mut b = BigRational::zero();
    for c in g.coeffs().iter().rev() {
        let ps = [&a * lo, &a * hi, &b * lo, &b * hi];
        let mn = ps.iter().min().unwrap().clone();
        let mx = ps.iter().max().unwrap().clone();
        a = mn + c;
        b = mx + c;
    }
    (a, b)
}

/// Exact sign of `g(r)` where `r` is the real root of `f` isolated by `iv`; `g(r) != 0` required
/// unless `g` vanishes identically modulo `f`.
pub fn sign_at_root(f: &IntPoly, iv: &(BigRational, BigRational), g: &QPoly) -> i32 {
    let g = g.rem(&f.to_qpoly());
    if g.is_zero() {
        return 0;
    }
    let mut iv = iv.clone();
    for _ in 0..4000 {
        let (a, b) = interval_eval(&g, &iv.0, &iv.1);
        if a.is_positive() {
            return 1;
        }
        if b.is_negative() {
            return -1;
        }
        iv = refine_root(f, &iv);
    }
    panic!("sign determination did not converge");
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_of_quintic() {
        let f = IntPoly::from_i64(&[-2, 0, 0, 0, 0, 1]);
        let (r, c) = embeddings(&f);
        assert_eq!(r.len(), 1);
        assert!((r[0] - 2f64.powf(0.2)).abs() < 1e-12);
        assert_eq!(c.len(), 2);
        let iv = isolate_real_roots(&IntPoly::from_i64(&[-2, 0, 1]));
        assert_eq!(iv.len(), 2);
        let g = IntPoly::from_i64(&[0, 1]).to_qpoly();
        assert_eq!(sign_at_root(&IntPoly::from_i64(&[-2, 0, 1]), &iv[0], &g), -1);
        assert_eq!(sign_at_root(&IntPoly::from_i64(&[-2, 0, 1]), &iv[1], &g), 1);
    }
}
