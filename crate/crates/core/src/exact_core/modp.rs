//! Polynomials over a prime field F_p and their factorization.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::ntheory::{invmod, mulmod, powmod};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PolyFp {
    pub p: u64,
    c: Vec<u64>,
}

impl PolyFp {
    pub fn new(p: u64, mut c: Vec<u64>) -> Self {
        for a in c.iter_mut() {
            *a %= p;
        }
        while c.last() == Some(&0) {
            c.pop();
        }
        PolyFp { p, c }
    }

    pub fn zero(p: u64) -> Self {
        PolyFp { p, c: vec![] }
    }

    pub fn one(p: u64) -> Self {
        Self::new(p, vec![1])
    }

    pub fn x(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.c.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c == [1]
    }

    pub fn deg(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lc(&self) -> u64 {
        self.c.last().copied().unwrap_or(0)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = invmod(self.lc(), self.p);
        self.scale(inv)
    }

    pub fn scale(&self, k: u64) -> Self {
        Self::new(self.p, self.c.iter().map(|&a| mulmod(a, k, self.p)).collect())
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        Self::new(self.p, (0..n).map(|i| (self.coeff(i) + o.coeff(i)) % self.p).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        Self::new(self.p, (0..n).map(|i| (self.coeff(i) + self.p - o.coeff(i)) % self.p).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(self.p);
        }
        let p = self.p;
        let mut c = vec![0u64; self.c.len() + o.c.len() - 1];
        if p < (1 << 31) {
            let mut acc = vec![0u128; c.len()];
            for (i, &a) in self.c.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                for (j, &b) in o.c.iter().enumerate() {
                    acc[i + j] += (a * b) as u128;
                }
            }
            for (x, y) in c.iter_mut().zip(acc) {
                *x = (y % p as u128) as u64;
            }
        } else {
            for (i, &a) in self.c.iter().enumerate() {
                for (j, &b) in o.c.iter().enumerate() {
                    c[i + j] = (c[i + j] + mulmod(a, b, p)) % p;
                }
            }
        }
        Self::new(p, c)
    }

    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial mod {}", self.p);
        let p = self.p;
        if self.c.len() < d.c.len() {
            return (Self::zero(p), self.clone());
        }
        let m = d.deg();
        let inv = invmod(d.lc(), p);
        let mut r = self.c.clone();
        let mut q = vec![0u64; self.c.len() - m];
        for k in (0..q.len()).rev() {
            let t = mulmod(r[k + m], inv, p);
            if t != 0 {
                for j in 0..=m {
                    r[k + j] = (r[k + j] + p - mulmod(t, d.c[j], p)) % p;
                }
            }
            q[k] = t;
        }
        r.truncate(m);
        (Self::new(p, q), Self::new(p, r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: `(g, s, t)` with `s a + t b = g` monic.
    pub fn xgcd(&self, o: &Self) -> (Self, Self, Self) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (Self::one(p), Self::zero(p));
        let (mut t0, mut t1) = (Self::zero(p), Self::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = invmod(r0.lc(), p);
        (r0.scale(inv), s0.scale(inv), t0.scale(inv))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.p,
            self.c.iter().enumerate().skip(1).map(|(i, &a)| mulmod(a, i as u64 % self.p, self.p)).collect(),
        )
    }

    pub fn eval(&self, x: u64) -> u64 {
        self.c.iter().rev().fold(0, |acc, &a| (mulmod(acc, x, self.p) + a) % self.p)
    }

    pub fn mulmod(&self, o: &Self, m: &Self) -> Self {
        self.mul(o).rem(m)
    }

    /// `self^e mod m`, with `e` given as a big-endian list of u64 limbs.
    pub fn powmod_big(&self, e: &num_bigint::BigUint, m: &Self) -> Self {
        let mut r = Self::one(self.p).rem(m);
        let base = self.rem(m);
        for i in (0..e.bits()).rev() {
            r = r.mulmod(&r, m);
            if e.bit(i) {
                r = r.mulmod(&base, m);
            }
        }
        r
    }

    pub fn powmod(&self, e: u64, m: &Self) -> Self {
        self.powmod_big(&num_bigint::BigUint::from(e), m)
    }

    /// `x^p` substituted as a p-th root of the coefficients pattern: `g(x^{1/p})` when
    /// `g' = 0`.
    fn pth_root(&self) -> Self {
        let p = self.p as usize;
        let c: Vec<u64> = (0..=self.deg() / p).map(|i| self.coeff(i * p)).collect();
        Self::new(self.p, c)
    }

    pub fn is_irreducible(&self) -> bool {
        let n = match self.degree() {
            Some(n) if n >= 1 => n,
            _ => return false,
        };
        let f = self.monic();
        let x = Self::x(self.p);
        let mut xp = x.clone();
        for k in 1..=n / 2 {
            xp = xp.powmod(self.p, &f);
            if !f.gcd(&xp.sub(&x)).is_one() {
                return false;
            }
            let _ = k;
        }
        true
    }

    /// Squarefree factorization of a monic polynomial: list of (factor, multiplicity).
    pub fn squarefree(&self) -> Vec<(PolyFp, usize)> {
        let mut out = Vec::new();
        sff_rec(&self.monic(), 1, &mut out);
        out.sort_by(|a, b| a.1.cmp(&b.1).then(a.0.c.cmp(&b.0.c)));
        out
    }

    /// Full factorization into monic irreducibles with multiplicities, deterministic order.
    pub fn factor(&self) -> Vec<(PolyFp, usize)> {
        let mut out = Vec::new();
        if self.deg() == 0 {
            return out;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ self.p);
        for (g, m) in self.squarefree() {
            for (d, h) in ddf(&g) {
                for irr in edf(&h, d, &mut rng) {
                    out.push((irr, m));
                }
            }
        }
        out.sort_by(|a, b| a.0.deg().cmp(&b.0.deg()).then(a.0.c.cmp(&b.0.c)).then(a.1.cmp(&b.1)));
        out
    }

    /// Degrees of the irreducible factors counted with multiplicity, sorted.
    pub fn factor_pattern(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.factor().iter().flat_map(|(g, m)| std::iter::repeat_n(g.deg(), *m)).collect();
        v.sort();
        v
    }

    /// Roots in F_p, sorted.
    pub fn roots(&self) -> Vec<u64> {
        let mut r: Vec<u64> =
            self.factor().iter().filter(|(g, _)| g.deg() == 1).map(|(g, _)| (self.p - g.coeff(0)) % self.p).collect();
        r.sort();
        r.dedup();
        r
    }
}

fn sff_rec(f: &PolyFp, mult: usize, out: &mut Vec<(PolyFp, usize)>) {
    let p = f.p;
    if f.deg() == 0 {
        return;
    }
    let d = f.derivative();
    if d.is_zero() {
        sff_rec(&f.pth_root(), mult * p as usize, out);
        return;
    }
    let mut c = f.gcd(&d);
    let mut w = f.divrem(&c).0;
    let mut i = 1;
    while w.deg() > 0 {
        let y = w.gcd(&c);
        let z = w.divrem(&y).0;
        if z.deg() > 0 {
            push_merge(out, z.monic(), i * mult);
        }
        w = y;
        c = c.divrem(&w).0;
        i += 1;
    }
    if c.deg() > 0 {
        sff_rec(&c.pth_root().monic(), mult * p as usize, out);
    }
}

fn push_merge(out: &mut Vec<(PolyFp, usize)>, g: PolyFp, m: usize) {
    if let Some(e) = out.iter_mut().find(|(_, k)| *k == m) {
        e.0 = e.0.mul(&g);
    } else {
        out.push((g, m));
    }
}

fn ddf(f: &PolyFp) -> Vec<(usize, PolyFp)> {
    let p = f.p;
    let mut out = Vec::new();
    let mut f = f.monic();
    let x = PolyFp::x(p);
    let mut h = x.clone();
    let mut d = 0;
    while f.deg() >= 2 * (d + 1) {
        d += 1;
        h = h.powmod(p, &f);
        let g = f.gcd(&h.sub(&x));
        if g.deg() > 0 {
            f = f.divrem(&g).0;
            h = h.rem(&f);
            out.push((d, g));
        }
    }
    if f.deg() > 0 {
        out.push((f.deg(), f));
    }
    out
}

fn edf(f: &PolyFp, d: usize, rng: &mut ChaCha8Rng) -> Vec<PolyFp> {
    let p = f.p;
    let n = f.deg();
    if n == d {
        return vec![f.monic()];
    }
    loop {
        let a = PolyFp::new(p, (0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.deg() == 0 {
            continue;
        }
        let b = if p == 2 {
            let mut t = a.rem(f);
            let mut acc = t.clone();
            for _ in 1..d {
                t = t.mulmod(&t, f);
                acc = acc.add(&t);
            }
            acc
        } else {
            let e = (num_bigint::BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
            a.powmod_big(&e, f).sub(&PolyFp::one(p))
        };
        let g = f.gcd(&b);
        if g.deg() > 0 && g.deg() < n {
            let mut out = edf(&g, d, rng);
            out.extend(edf(&f.divrem(&g).0, d, rng));
            return out;
        }
    }
}

/// Roots of `x^2 - a` mod an odd prime, via Tonelli-Shanks; `None` for non-residues.
pub fn sqrt_mod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 || p == 2 {
        return Some(a);
    }
    if powmod(a, (p - 1) / 2, p) != 1 {
        return None;
    }
    PolyFp::new(p, vec![(p - a) % p, 0, 1]).roots().first().copied()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn expand(fs: &[(PolyFp, usize)], p: u64) -> PolyFp {
        fs.iter().fold(PolyFp::one(p), |acc, (g, m)| (0..*m).fold(acc, |a, _| a.mul(g)))
    }

    #[test]
    fn factor_reconstructs() {
        for p in [2u64, 3, 5, 7, 277] {
            let f = PolyFp::new(p, vec![4, 16, 12, 8, 16, 6, p - 4 % p, 2, 6, 4, 1]);
            let fs = f.factor();
            assert_eq!(expand(&fs, p), f.monic());
            for (g, _) in &fs {
                assert!(g.is_irreducible());
            }
        }
    }

    #[test]
    fn pattern_mod_2_is_x_to_the_10() {
        let f = PolyFp::new(2, vec![4, 16, 12, 8, 16, 6, 0, 2, 6, 4, 1]);
        assert_eq!(f.factor(), vec![(PolyFp::x(2), 10)]);
    }

    #[test]
    fn sqrt_mod_works() {
        let r = sqrt_mod(2, 7).unwrap();
        assert_eq!(r * r % 7, 2);
        assert!(sqrt_mod(3, 7).is_none());
    }
}
