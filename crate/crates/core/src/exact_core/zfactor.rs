//! Factorization over Z: squarefree decomposition, Hensel lifting, Zassenhaus recombination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

use super::modp::PolyFp;
use super::ntheory::primes_up_to;
use super::poly::IntPoly;

/// Reduce coefficients into `(-m/2, m/2]`.
pub fn symmetric_mod(f: &IntPoly, m: &BigInt) -> IntPoly {
    let half = m / 2;
    IntPoly::new(
        f.coeffs()
            .iter()
            .map(|a| {
                let r = a.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

fn mod_poly(f: &IntPoly, m: &BigInt) -> IntPoly {
    IntPoly::new(f.coeffs().iter().map(|a| a.mod_floor(m)).collect())
}

/// Division by a monic polynomial modulo `m`.
fn divrem_monic(a: &IntPoly, d: &IntPoly, m: &BigInt) -> (IntPoly, IntPoly) {
    debug_assert!(d.is_monic());
    let a = mod_poly(a, m);
    if a.is_zero() || a.deg() < d.deg() {
        return (IntPoly::zero(), a);
    }
    let dm = d.deg();
    let mut r: Vec<BigInt> = a.coeffs().to_vec();
    let mut q = vec![BigInt::zero(); r.len() - dm];
    for k in (0..q.len()).rev() {
        let t = r[k + dm].mod_floor(m);
        if !t.is_zero() {
            for j in 0..=dm {
                r[k + j] = (&r[k + j] - &t * &d.coeffs()[j]).mod_floor(m);
            }
        }
        q[k] = t;
    }
    r.truncate(dm);
    (IntPoly::new(q), mod_poly(&IntPoly::new(r), m))
}

fn from_fp(f: &PolyFp) -> IntPoly {
    IntPoly::new(f.coeffs().iter().map(|&a| BigInt::from(a)).collect())
}

/// Lift `f = g h mod p` (`f`, `g`, `h` monic, `g`, `h` coprime mod p) to modulus `>= target`.
/// Returns the lifted `(g, h, modulus)`.
pub fn hensel_lift_pair(f: &IntPoly, g: &PolyFp, h: &PolyFp, target: &BigInt) -> (IntPoly, IntPoly, BigInt) {
    let p = g.p;
    let (one, s0, t0) = g.xgcd(h);
    assert!(one.is_one(), "factors not coprime mod {p}");
    let mut m = BigInt::from(p);
    let mut g = from_fp(g);
    let mut h = from_fp(h);
    let mut s = from_fp(&s0);
    let mut t = from_fp(&t0);
    while &m < target {
        let m2 = &m * &m;
        let e = mod_poly(&(f - &(&g * &h)), &m2);
        let (q, r) = divrem_monic(&(&s * &e), &h, &m2);
        let g2 = mod_poly(&(&(&g + &(&t * &e)) + &(&q * &g)), &m2);
        let h2 = mod_poly(&(&h + &r), &m2);
        let b = mod_poly(&(&(&(&s * &g2) + &(&t * &h2)) - &IntPoly::one()), &m2);
        let (c, d) = divrem_monic(&(&s * &b), &h2, &m2);
        let s2 = mod_poly(&(&s - &d), &m2);
        let t2 = mod_poly(&(&(&t - &(&t * &b)) - &(&c * &g2)), &m2);
        g = g2;
        h = h2;
        s = s2;
        t = t2;
        m = m2;
    }
    (g, h, m)
}

/// Lift a complete monic factorization `f = prod fs mod p` to modulus `>= target`.
pub fn hensel_lift(f: &IntPoly, fs: &[PolyFp], target: &BigInt) -> (Vec<IntPoly>, BigInt) {
    let p = fs[0].p;
    if fs.len() == 1 {
        let mut m = BigInt::from(p);
        while &m < target {
            m = &m * &m;
        }
        return (vec![mod_poly(f, &m)], m);
    }
    let g = fs[0].clone();
    let h = fs[1..].iter().fold(PolyFp::one(p), |a, b| a.mul(b));
    let (gl, hl, m) = hensel_lift_pair(f, &g, &h, target);
    let (mut rest, m2) = hensel_lift(&hl, &fs[1..], &m);
    debug_assert_eq!(m, m2);
    let mut out = vec![gl];
    out.append(&mut rest);
    (out, m)
}

fn inv_mod_big(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

fn coeff_norm2(f: &IntPoly) -> f64 {
    f.coeffs().iter().map(|a| a.to_f64().unwrap_or(f64::MAX).powi(2)).sum::<f64>().sqrt()
}

/// Irreducible factors of a primitive squarefree polynomial of positive degree.
fn zassenhaus(g: &IntPoly) -> Vec<IntPoly> {
    let n = g.deg();
    if n <= 1 {
        return vec![g.primitive_part()];
    }
    let lc = g.lc();
    let mut best: Option<(u64, Vec<PolyFp>)> = None;
    let mut tried = 0;
    for p in primes_up_to(5000).into_iter().skip(1) {
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let gp = g.mod_p(p);
        if !gp.gcd(&gp.derivative()).is_one() {
            continue;
        }
        let fs: Vec<PolyFp> = gp.factor().into_iter().map(|(h, _)| h).collect();
        if fs.len() == 1 {
            return vec![g.primitive_part()];
        }
        if best.as_ref().is_none_or(|(_, b)| fs.len() < b.len()) {
            best = Some((p, fs));
        }
        tried += 1;
        if tried >= 6 {
            break;
        }
    }
    let (_, fs) = best.expect("no good prime below 5000");
    let bound = coeff_norm2(g) * 2f64.powi(n as i32) * lc.abs().to_f64().unwrap_or(f64::MAX);
    let target = BigInt::from(2u32) * BigInt::from_f64(bound.ceil().max(1.0)).expect("finite bound") + BigInt::one();
    let p = fs[0].p;
    let mut m = BigInt::from(p);
    while m < target {
        m = &m * &m;
    }
    let monic_g = mod_poly(&g.scale(&inv_mod_big(&lc, &m)), &m);
    let (mut lifted, m) = hensel_lift(&monic_g, &fs, &target);
    let mut rest = g.clone();
    let mut out = Vec::new();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let mut found = false;
        for subset in combinations(lifted.len(), size) {
            let l = rest.lc();
            let prod = subset.iter().fold(IntPoly::constant(l.clone()), |a, &i| mod_poly(&(&a * &lifted[i]), &m));
            let cand = symmetric_mod(&prod, &m).primitive_part();
            if let Some(q) = rest.div_exact(&cand) {
                out.push(cand);
                rest = q;
                let mut keep = Vec::new();
                for (i, h) in lifted.iter().enumerate() {
                    if !subset.contains(&i) {
                        keep.push(h.clone());
                    }
                }
                lifted = keep;
                found = true;
                break;
            }
        }
        if !found {
            size += 1;
        }
    }
    out.push(rest.primitive_part());
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(idx.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 && idx[0] == n - k {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Factorization of a nonzero polynomial into primitive irreducibles with multiplicities.
/// The content and sign are dropped. Factors are sorted by degree then coefficients.
pub fn factor_z(f: &IntPoly) -> Vec<(IntPoly, usize)> {
    assert!(!f.is_zero());
    let f = f.primitive_part();
    let mut out: Vec<(IntPoly, usize)> = Vec::new();
    if f.deg() == 0 {
        return out;
    }
    // Yun over Q
    let fq = f.to_qpoly();
    let d = fq.derivative();
    let a = fq.gcd(&d);
    let mut b = fq.divrem(&a).0;
    let mut c = d.divrem(&a).0;
    let mut dd = c.sub(&b.derivative());
    let mut i = 1;
    loop {
        let aa = b.gcd(&dd);
        if aa.deg() > 0 {
            for h in zassenhaus(&aa.to_primitive_int()) {
                out.push((h, i));
            }
        }
        b = b.divrem(&aa).0;
        if b.deg() == 0 {
            break;
        }
        c = dd.divrem(&aa).0;
        dd = c.sub(&b.derivative());
        i += 1;
    }
    out.sort_by(|x, y| x.0.deg().cmp(&y.0.deg()).then_with(|| x.0.coeffs().cmp(y.0.coeffs())).then(x.1.cmp(&y.1)));
    out
}

pub fn is_irreducible_z(f: &IntPoly) -> bool {
    if f.deg() == 0 {
        return false;
    }
    let fs = factor_z(f);
    fs.len() == 1 && fs[0].1 == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combos() {
        assert_eq!(combinations(4, 2).len(), 6);
        assert_eq!(combinations(3, 3), vec![vec![0, 1, 2]]);
        assert_eq!(combinations(5, 1).len(), 5);
    }

    #[test]
    fn factors_products() {
        let a = IntPoly::from_i64(&[1, 0, 1]);
        let b = IntPoly::from_i64(&[-2, 0, 0, 1]);
        let c = IntPoly::from_i64(&[3, 2]);
        let f = &(&(&a * &b) * &c) * &c;
        let fs = factor_z(&f.scale(&BigInt::from(6)));
        assert_eq!(fs, vec![(c.clone(), 2), (a.clone(), 1), (b.clone(), 1)]);
    }

    #[test]
    fn swinnerton_dyer_like_irreducible() {
        // x^4 - 10x^2 + 1 splits modulo every prime but is irreducible over Q.
        let f = IntPoly::from_i64(&[1, 0, -10, 0, 1]);
        assert!(is_irreducible_z(&f));
        let g = IntPoly::from_i64(&[-1, -1, -2, 0, 1, 1]);
        assert!(is_irreducible_z(&g));
        assert!(!is_irreducible_z(&IntPoly::from_i64(&[-1, 0, 0, 0, 1])));
    }
}
