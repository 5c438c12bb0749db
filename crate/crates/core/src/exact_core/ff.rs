//! Finite fields F_{p^m} as F_p[x]/(h) with the least-lexicographic irreducible monic `h`.

use num_bigint::BigUint;

use super::linalg_fp;
use super::modp::PolyFp;
use super::ntheory::{invmod, is_prime_u64, mulmod};
use crate::{Error, Result};

/// Field element: coordinates in the power basis `1, x, ..., x^{m-1}`.
pub type FfElem = Vec<u64>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteField {
    p: u64,
    m: usize,
    modulus: PolyFp,
}

impl FiniteField {
    pub fn new(p: u64, m: usize) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::Precondition(format!("{p} is not prime")));
        }
        if m == 0 {
            return Err(Error::Precondition("degree must be positive".into()));
        }
        let modulus = if m == 1 { PolyFp::x(p) } else { least_irreducible(p, m) };
        Ok(FiniteField { p, m, modulus })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.m
    }

    pub fn modulus(&self) -> &PolyFp {
        &self.modulus
    }

    pub fn order(&self) -> u64 {
        self.p.pow(self.m as u32)
    }

    fn to_poly(&self, a: &FfElem) -> PolyFp {
        PolyFp::new(self.p, a.clone())
    }

    fn elem_of_poly(&self, f: &PolyFp) -> FfElem {
        (0..self.m).map(|i| f.coeff(i)).collect()
    }

    pub fn zero(&self) -> FfElem {
        vec![0; self.m]
    }

    pub fn one(&self) -> FfElem {
        let mut v = self.zero();
        v[0] = 1;
        v
    }

    pub fn from_prime_field(&self, a: u64) -> FfElem {
        let mut v = self.zero();
        v[0] = a % self.p;
        v
    }

    /// Element with base-p digits of `k` as coordinates.
    pub fn from_index(&self, mut k: u64) -> FfElem {
        (0..self.m)
            .map(|_| {
                let d = k % self.p;
                k /= self.p;
                d
            })
            .collect()
    }

    pub fn index(&self, a: &FfElem) -> u64 {
        a.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    pub fn elements(&self) -> impl Iterator<Item = FfElem> + '_ {
        (0..self.order()).map(move |k| self.from_index(k))
    }

    pub fn is_zero(&self, a: &FfElem) -> bool {
        a.iter().all(|&x| x == 0)
    }

    pub fn add(&self, a: &FfElem, b: &FfElem) -> FfElem {
        a.iter().zip(b).map(|(x, y)| (x + y) % self.p).collect()
    }

    pub fn sub(&self, a: &FfElem, b: &FfElem) -> FfElem {
        a.iter().zip(b).map(|(x, y)| (x + self.p - y) % self.p).collect()
    }

    pub fn neg(&self, a: &FfElem) -> FfElem {
        a.iter().map(|x| (self.p - x) % self.p).collect()
    }

    pub fn scale(&self, a: &FfElem, k: u64) -> FfElem {
        a.iter().map(|&x| mulmod(x, k % self.p, self.p)).collect()
    }

    pub fn mul(&self, a: &FfElem, b: &FfElem) -> FfElem {
        self.elem_of_poly(&self.to_poly(a).mulmod(&self.to_poly(b), &self.modulus))
    }

    pub fn pow(&self, a: &FfElem, e: &BigUint) -> FfElem {
        self.elem_of_poly(&self.to_poly(a).powmod_big(e, &self.modulus))
    }

    pub fn inv(&self, a: &FfElem) -> Option<FfElem> {
        if self.is_zero(a) {
            return None;
        }
        if self.m == 1 {
            return Some(vec![invmod(a[0], self.p)]);
        }
        let (g, s, _) = self.to_poly(a).xgcd(&self.modulus);
        debug_assert!(g.is_one());
        Some(self.elem_of_poly(&s.rem(&self.modulus)))
    }

    /// `sigma^e(a) = a^{p^e}`, `e` taken modulo the degree (negative allowed).
    pub fn frob(&self, a: &FfElem, e: i64) -> FfElem {
        let k = e.rem_euclid(self.m as i64) as u32;
        if k == 0 {
            return a.clone();
        }
        self.pow(a, &BigUint::from(self.p).pow(k))
    }

    /// Matrix of the F_p-linear map `sigma^e - 1` (rows are images of basis vectors).
    pub fn frobenius_minus_one_matrix(&self, e: i64) -> Vec<Vec<u64>> {
        (0..self.m)
            .map(|i| {
                let mut b = self.zero();
                b[i] = 1;
                self.sub(&self.frob(&b, e), &b)
            })
            .collect()
    }

    /// A generator of the multiplicative group.
    pub fn primitive_element(&self) -> FfElem {
        let q1 = self.order() - 1;
        let primes: Vec<u64> = super::ntheory::factor_u64(q1).into_iter().map(|(l, _)| l).collect();
        for k in 1..self.order() {
            let a = self.from_index(k);
            if primes.iter().all(|&l| self.pow(&a, &BigUint::from(q1 / l)) != self.one()) {
                return a;
            }
        }
        unreachable!("multiplicative group is cyclic")
    }
}

fn least_irreducible(p: u64, m: usize) -> PolyFp {
    let count = p.pow(m as u32);
    for k in 0..count {
        let mut c: Vec<u64> = Vec::with_capacity(m + 1);
        let mut t = k;
        for _ in 0..m {
            c.push(t % p);
            t /= p;
        }
        c.push(1);
        let f = PolyFp::new(p, c);
        if f.is_irreducible() {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// `dim_{F_p} k / (sigma^e - 1) k`, equal to the dimension of the kernel of `sigma^e - 1`.
pub fn frobenius_coimage_dim(k: &FiniteField, e: u32) -> usize {
    assert!(e >= 1, "exponent must be positive");
    let m = k.frobenius_minus_one_matrix(e as i64);
    k.degree() - linalg_fp::rank(&m, k.p())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_fields() {
        let f16 = FiniteField::new(2, 4).unwrap();
        assert_eq!(f16.modulus().coeffs(), &[1, 1, 0, 0, 1]);
        let g = f16.primitive_element();
        let mut seen = std::collections::HashSet::new();
        let mut x = f16.one();
        for _ in 0..15 {
            seen.insert(f16.index(&x));
            x = f16.mul(&x, &g);
        }
        assert_eq!(seen.len(), 15);
        for a in f16.elements().skip(1) {
            assert_eq!(f16.mul(&a, &f16.inv(&a).unwrap()), f16.one());
        }
    }

    #[test]
    fn coimage_examples() {
        assert_eq!(frobenius_coimage_dim(&FiniteField::new(2, 1).unwrap(), 4), 1);
        assert_eq!(frobenius_coimage_dim(&FiniteField::new(2, 4).unwrap(), 4), 4);
        assert_eq!(frobenius_coimage_dim(&FiniteField::new(2, 6).unwrap(), 4), 2);
    }
}
