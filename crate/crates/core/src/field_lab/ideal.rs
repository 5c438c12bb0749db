//! Prime ideals: decomposition of rational primes, valuations, ideal lattices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::order::{left_kernel, lift, ModTable, NumberFieldData};
use crate::exact_core::intmat::{hnf_mod, IMat};
use crate::exact_core::linalg_fp;
use crate::exact_core::modp::PolyFp;
use crate::exact_core::ntheory::{mulmod, valuation};

/// A prime ideal of the ring of integers lying over the rational prime `p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeIdeal {
    pub p: u64,
    pub e: u32,
    pub f: u32,
    /// Second generator: the ideal equals `(p, gen)`.
    #[serde(serialize_with = "crate::serde_big::ints")]
    pub gen: Vec<BigInt>,
    /// Upper-triangular Z-basis (rows in integral-basis coordinates).
    #[serde(skip)]
    pub hnf: IMat,
    /// `tau` with `tau * P` inside `pO` and `tau` not in `pO`.
    #[serde(skip)]
    pub tau: Vec<BigInt>,
}

impl PrimeIdeal {
    pub fn norm(&self) -> u128 {
        (self.p as u128).pow(self.f)
    }

    /// `v_P(a)` for nonzero integral `a`.
    pub fn valuation(&self, k: &NumberFieldData, a: &[BigInt]) -> u32 {
        self.valuation_and_unit(k, a).0
    }

    /// `(v, a * (tau/p)^v)`; the second entry is a P-unit.
    pub fn valuation_and_unit(&self, k: &NumberFieldData, a: &[BigInt]) -> (u32, Vec<BigInt>) {
        assert!(a.iter().any(|x| !x.is_zero()), "valuation of zero");
        let pb = BigInt::from(self.p);
        let mut x = a.to_vec();
        let mut v = 0;
        if self.e == 1 && self.f as usize == k.degree() {
            while NumberFieldData::divisible(&x, &pb) {
                x.iter_mut().for_each(|c| *c = &*c / &pb);
                v += 1;
            }
            return (v, x);
        }
        loop {
            let y = k.mul(&x, &self.tau);
            if !NumberFieldData::divisible(&y, &pb) {
                return (v, x);
            }
            x = y.into_iter().map(|c| c / &pb).collect();
            v += 1;
        }
    }

    /// `v_P(m)` for a nonzero rational integer.
    pub fn valuation_int(&self, m: &BigInt) -> u32 {
        valuation(m, &BigInt::from(self.p)) * self.e
    }

    pub fn contains(&self, a: &[BigInt]) -> bool {
        super::order::lattice_coords(&self.hnf, a).is_some()
    }
}

/// Subspace basis (rref rows) of `(gens * O) mod p` together with `base`.
fn ideal_span(mt: &ModTable, gens: &[Vec<u64>], base: &[Vec<u64>], n: usize) -> Vec<Vec<u64>> {
    let p = mt.m;
    let mut rows: Vec<Vec<u64>> = base.to_vec();
    for g in gens {
        for i in 0..n {
            let mut e = vec![0u64; n];
            e[i] = 1;
            rows.push(mt.mul(g, &e));
        }
    }
    let mut rows: Vec<Vec<u64>> = rows.into_iter().filter(|r| r.iter().any(|&x| x != 0)).collect();
    if rows.is_empty() {
        return rows;
    }
    let piv = linalg_fp::rref(&mut rows, p);
    rows.truncate(piv.len());
    rows
}

/// Reduce `x` modulo the rref subspace `j`, returning the coordinates at the non-pivot columns.
fn quotient_coords(j: &[Vec<u64>], x: &[u64], p: u64) -> Vec<u64> {
    let mut v = x.to_vec();
    let mut pivots = Vec::new();
    for r in j {
        let c = r.iter().position(|&t| t != 0).unwrap();
        pivots.push(c);
        if v[c] != 0 {
            let f = v[c];
            for (a, b) in v.iter_mut().zip(r) {
                *a = (*a + p - mulmod(f, *b, p)) % p;
            }
        }
    }
    (0..x.len()).filter(|c| !pivots.contains(c)).map(|c| v[c]).collect()
}

fn in_span(j: &[Vec<u64>], x: &[u64], p: u64) -> bool {
    quotient_coords(j, x, p).iter().all(|&t| t == 0)
}

/// Split the subspace `j` (an ideal of O/pO containing the radical) into maximal ideals.
fn split(mt: &ModTable, j: Vec<Vec<u64>>, n: usize, out: &mut Vec<Vec<Vec<u64>>>) {
    let p = mt.m;
    let one = mt.one();
    // W = {x : x^p - x in J}
    let phi: Vec<Vec<u64>> = (0..n)
        .map(|i| {
            let mut e = vec![0u64; n];
            e[i] = 1;
            let xp = mt.pow(&e, p as u128);
            let d: Vec<u64> = xp.iter().zip(&e).map(|(a, b)| (a + p - b) % p).collect();
            quotient_coords(&j, &d, p)
        })
        .collect();
    let w = left_kernel(&phi, p);
    let qdim = n - j.len();
    let wdim_mod_j = {
        let mut rows = j.clone();
        rows.extend(w.iter().cloned());
        linalg_fp::rank(&rows, p) - j.len()
    };
    if wdim_mod_j <= 1 || qdim == 0 {
        out.push(j);
        return;
    }
    let mut base = j.clone();
    base.push(one.clone());
    let beta = w
        .iter()
        .find(|b| !in_span(&linalg_fp::row_space(&base, p), b, p))
        .expect("separable element outside F_p")
        .clone();
    // minimal polynomial of beta modulo J
    let mut powers: Vec<Vec<u64>> = vec![quotient_coords(&j, &one, p)];
    let mut cur = one.clone();
    let minpoly = loop {
        cur = mt.mul(&cur, &beta);
        let qc = quotient_coords(&j, &cur, p);
        if let Some(sol) = linalg_fp::solve_left(&powers, &qc, p) {
            let mut c: Vec<u64> = sol.iter().map(|&s| (p - s) % p).collect();
            c.push(1);
            break PolyFp::new(p, c);
        }
        powers.push(qc);
    };
    for c in minpoly.roots() {
        let g: Vec<u64> = beta.iter().zip(&one).map(|(b, o)| (b + p - mulmod(c, *o, p)) % p).collect();
        let jc = ideal_span(mt, &[g], &j, n);
        split(mt, jc, n, out);
    }
}

fn frobenius_radical(mt: &ModTable, n: usize) -> Vec<Vec<u64>> {
    let p = mt.m;
    let mut q: u128 = p as u128;
    while q < n as u128 {
        q *= p as u128;
    }
    let frob: Vec<Vec<u64>> = (0..n)
        .map(|i| {
            let mut e = vec![0u64; n];
            e[i] = 1;
            mt.pow(&e, q)
        })
        .collect();
    let mut rad = left_kernel(&frob, p);
    if rad.is_empty() {
        return rad;
    }
    let piv = linalg_fp::rref(&mut rad, p);
    rad.truncate(piv.len());
    rad
}

fn prime_from_subspace(k: &NumberFieldData, mt: &ModTable, s: &[Vec<u64>], seed: u64) -> PrimeIdeal {
    let n = k.degree();
    let p = mt.m;
    let pb = BigInt::from(p);
    let f = (n - s.len()) as u32;
    let gens: Vec<Vec<BigInt>> = s.iter().map(|v| lift(v)).collect();
    let hnf = hnf_mod(&gens, n, &pb);
    // tau: left kernel of x -> (x s_1, ..., x s_k)
    let rows: Vec<Vec<u64>> = (0..n)
        .map(|i| {
            let mut e = vec![0u64; n];
            e[i] = 1;
            s.iter().flat_map(|g| mt.mul(&e, g)).collect()
        })
        .collect();
    let tau = if s.is_empty() {
        k.one()
    } else {
        let ker = left_kernel(&rows, p);
        lift(ker.first().expect("P strictly contains pO"))
    };
    let mut pr = PrimeIdeal { p, e: 1, f, gen: k.from_int(&pb), hnf, tau };
    if s.is_empty() {
        return pr;
    }
    let (e, _) = pr.valuation_and_unit(k, &k.from_int(&pb));
    pr.e = e;
    pr.gen = two_element(k, &pr, seed);
    pr
}

/// An element `a` of P with `P = (p, a)`: `v_p(N(a)) = f` when `e > 1`, and `a` not in `P^2` otherwise.
fn two_element(k: &NumberFieldData, pr: &PrimeIdeal, seed: u64) -> Vec<BigInt> {
    let n = k.degree();
    let pb = BigInt::from(pr.p);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ pr.p);
    let good = |a: &Vec<BigInt>| {
        let nm = k.norm(a);
        !nm.is_zero() && valuation(&nm, &pb) == pr.f
    };
    for r in &pr.hnf {
        if good(r) {
            return r.clone();
        }
    }
    for _ in 0..20000 {
        let mut a = vec![BigInt::zero(); n];
        for r in &pr.hnf {
            let c: i64 = rng.gen_range(-2..=2);
            if c != 0 {
                for (x, y) in a.iter_mut().zip(r) {
                    *x += y * c;
                }
            }
        }
        if good(&a) {
            return a;
        }
        let a2: Vec<BigInt> = a.iter().enumerate().map(|(i, x)| if i == 0 { x + &pb } else { x.clone() }).collect();
        if good(&a2) {
            return a2;
        }
    }
    // (p, a) generates P for a in P \ P^2 with a prime to the other primes above p; fall back to
    // the lattice basis, which always generates P together with p.
    pr.hnf[0].clone()
}

/// All prime ideals above `p`, sorted by `(f, e)` and then by generator.
pub fn primes_above(k: &NumberFieldData, p: u64) -> Vec<PrimeIdeal> {
    let n = k.degree();
    let mt = k.mod_table(p);
    let pb = BigInt::from(p);
    let mut subspaces: Vec<(Vec<Vec<u64>>, Option<u32>)> = Vec::new();
    if !k.index.is_multiple_of(&pb) {
        let fp = k.poly.mod_p(p);
        for (h, mult) in fp.factor() {
            let hz = crate::exact_core::IntPoly::new(h.coeffs().iter().map(|&c| BigInt::from(c)).collect());
            let g = mt.reduce(&k.from_int_poly(&hz));
            let mut s = ideal_span(&mt, &[g], &[], n);
            if s.is_empty() {
                s = vec![];
            }
            subspaces.push((s, Some(mult as u32)));
        }
    } else {
        let rad = frobenius_radical(&mt, n);
        let mut out = Vec::new();
        split(&mt, rad, n, &mut out);
        subspaces.extend(out.into_iter().map(|s| (s, None)));
    }
    let mut primes: Vec<PrimeIdeal> = subspaces
        .iter()
        .enumerate()
        .map(|(i, (s, e))| {
            let mut pr = prime_from_subspace(k, &mt, s, 0x9e37 + i as u64);
            if let Some(e) = e {
                debug_assert_eq!(pr.e, *e);
                pr.e = *e;
            }
            pr
        })
        .collect();
    primes.sort_by(|a, b| (a.f, a.e, &a.hnf).cmp(&(b.f, b.e, &b.hnf)));
    debug_assert_eq!(primes.iter().map(|q| (q.e * q.f) as usize).sum::<usize>(), n);
    primes
}

/// Z-basis (HNF) of the product of two ideals given by Z-bases, both containing `d`.
pub fn ideal_mul(k: &NumberFieldData, a: &IMat, b: &IMat, d: &BigInt) -> IMat {
    let mut gens = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            gens.push(k.mul(x, y));
        }
    }
    hnf_mod(&gens, k.degree(), d)
}

/// Reduce a big integer into `[0, m)`.
pub fn residue(x: &BigInt, m: u64) -> u64 {
    x.mod_floor(&BigInt::from(m)).to_u64().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_core::IntPoly;
    use crate::field_lab::order::maximal_order;

    fn ef(k: &NumberFieldData, p: u64) -> Vec<(u32, u32)> {
        primes_above(k, p).iter().map(|q| (q.e, q.f)).collect()
    }

    #[test]
    fn quadratic_splitting() {
        let k = maximal_order(&IntPoly::from_i64(&[5, 0, 1])).unwrap();
        assert_eq!(ef(&k, 2), vec![(2, 1)]);
        assert_eq!(ef(&k, 3), vec![(1, 1), (1, 1)]);
        assert_eq!(ef(&k, 11), vec![(1, 2)]);
        let k = maximal_order(&IntPoly::from_i64(&[-5, 0, 1])).unwrap();
        assert_eq!(ef(&k, 2), vec![(1, 2)]);
        assert_eq!(ef(&k, 11), vec![(1, 1), (1, 1)]);
    }

    #[test]
    fn index_divisor_prime() {
        // 2 splits completely in the cubic field of x^3 - x^2 - 2x - 8 although 2 divides the index
        let k = maximal_order(&IntPoly::from_i64(&[-8, -2, -1, 1])).unwrap();
        let ps = primes_above(&k, 2);
        assert_eq!(ps.iter().map(|q| (q.e, q.f)).collect::<Vec<_>>(), vec![(1, 1); 3]);
        for q in &ps {
            assert_eq!(q.valuation(&k, &k.from_int(&BigInt::from(8))), 3);
            assert!(q.contains(&q.gen));
        }
    }

    #[test]
    fn valuations() {
        let k = maximal_order(&IntPoly::from_i64(&[2, 0, 0, 0, 0, 1])).unwrap();
        let ps = primes_above(&k, 2);
        assert_eq!(ps.len(), 1);
        assert_eq!((ps[0].e, ps[0].f), (5, 1));
        let theta = k.generator();
        assert_eq!(ps[0].valuation(&k, &theta), 1);
        assert_eq!(ps[0].valuation(&k, &k.from_int(&BigInt::from(12))), 10);
    }
}
