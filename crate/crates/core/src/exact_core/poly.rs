//! Dense univariate polynomials over Z, ascending coefficient order.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::intmat::det_bareiss;
use super::modp::PolyFp;
use super::qpoly::QPoly;
use crate::{Error, Result};

/// Integer polynomial `a0 + a1 x + ... + an x^n`, stored as `[a0, a1, ..., an]`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    c: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut c: Vec<BigInt>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        IntPoly { c }
    }

    pub fn from_i64(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { c: vec![] }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(a: BigInt) -> Self {
        Self::new(vec![a])
    }

    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    pub fn monomial(k: usize, a: BigInt) -> Self {
        let mut c = vec![BigInt::zero(); k + 1];
        c[k] = a;
        Self::new(c)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.c.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lc(&self) -> BigInt {
        self.c.last().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.lc().is_one()
    }

    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected [a0,a1,...], got {t:?}")))?;
        if inner.trim().is_empty() {
            return Ok(Self::zero());
        }
        let mut c = Vec::new();
        for tok in inner.split(',') {
            let tok: String = tok.chars().filter(|ch| !ch.is_whitespace()).collect();
            let v = BigInt::from_str(&tok).map_err(|_| Error::Parse(format!("bad coefficient {tok:?} in {t:?}")))?;
            c.push(v);
        }
        Ok(Self::new(c))
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for a in self.c.iter().rev() {
            acc = acc * x + a;
        }
        acc
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for a in self.c.iter().rev() {
            acc = acc * x + BigRational::from_integer(a.clone());
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.c.iter().rev().fold(0.0, |acc, a| acc * x + a.to_f64().unwrap_or(f64::NAN))
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.c.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, a| acc * z + a.to_f64().unwrap_or(f64::NAN))
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.c.iter().enumerate().skip(1).map(|(i, a)| a * BigInt::from(i)).collect())
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.c.iter().map(|a| a * k).collect())
    }

    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for a in &self.c {
            g = g.gcd(a);
        }
        g
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.lc().is_negative() {
            g = -g;
        }
        Self::new(self.c.iter().map(|a| a / &g).collect())
    }

    /// `f(x + a)`.
    pub fn shift(&self, a: &BigInt) -> Self {
        let mut c = self.c.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let t = &c[j + 1] * a;
                c[j] += t;
            }
        }
        Self::new(c)
    }

    /// `f(g(x))`.
    pub fn compose(&self, g: &IntPoly) -> Self {
        let mut acc = IntPoly::zero();
        for a in self.c.iter().rev() {
            acc = &(&acc * g) + &IntPoly::constant(a.clone());
        }
        acc
    }

    /// `x^n f(1/x)`.
    pub fn reverse(&self) -> Self {
        let mut c = self.c.clone();
        c.reverse();
        Self::new(c)
    }

    /// `m^{deg} f(x/m)`, i.e. coefficient `a_i m^{n-i}`.
    pub fn scale_root(&self, m: &BigInt) -> Self {
        let n = self.deg();
        Self::new(self.c.iter().enumerate().map(|(i, a)| a * num_traits::pow(m.clone(), n - i)).collect())
    }

    /// Exact division by a nonzero polynomial; `None` if the quotient is not integral
    /// or the remainder is nonzero.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let (n, m) = (self.deg(), d.deg());
        if n < m {
            return None;
        }
        let mut r = self.c.clone();
        let mut q = vec![BigInt::zero(); n - m + 1];
        let l = d.lc();
        for k in (0..=n - m).rev() {
            let (qq, rr) = r[k + m].div_rem(&l);
            if !rr.is_zero() {
                return None;
            }
            for j in 0..=m {
                r[k + j] -= &qq * &d.c[j];
            }
            q[k] = qq;
        }
        if r.iter().all(|x| x.is_zero()) {
            Some(IntPoly::new(q))
        } else {
            None
        }
    }

    pub fn to_qpoly(&self) -> QPoly {
        QPoly::new(self.c.iter().map(|a| BigRational::from_integer(a.clone())).collect())
    }

    pub fn mod_p(&self, p: u64) -> PolyFp {
        let pb = BigInt::from(p);
        PolyFp::new(p, self.c.iter().map(|a| a.mod_floor(&pb).to_u64().expect("residue fits")).collect())
    }

    /// Resultant via the Sylvester determinant.
    pub fn resultant(&self, g: &IntPoly) -> BigInt {
        if self.is_zero() || g.is_zero() {
            return BigInt::zero();
        }
        let (m, n) = (self.deg(), g.deg());
        if m == 0 {
            return num_traits::pow(self.c[0].clone(), n);
        }
        if n == 0 {
            return num_traits::pow(g.c[0].clone(), m);
        }
        let size = m + n;
        let mut s = vec![vec![BigInt::zero(); size]; size];
        for i in 0..n {
            for j in 0..=m {
                s[i][i + j] = self.c[m - j].clone();
            }
        }
        for i in 0..m {
            for j in 0..=n {
                s[n + i][i + j] = g.c[n - j].clone();
            }
        }
        det_bareiss(s)
    }

    /// `disc(f) = (-1)^{n(n-1)/2} Res(f, f') / lc(f)`.
    pub fn discriminant(&self) -> Result<BigInt> {
        let n = match self.degree() {
            Some(n) if n >= 1 => n,
            _ => return Err(Error::Degenerate("discriminant of a constant polynomial".into())),
        };
        if n == 1 {
            return Ok(BigInt::one());
        }
        let r = self.resultant(&self.derivative());
        let (q, rem) = r.div_rem(&self.lc());
        debug_assert!(rem.is_zero());
        Ok(if (n * (n - 1) / 2) % 2 == 1 { -q } else { q })
    }

    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => self.to_qpoly().gcd(&self.derivative().to_qpoly()).deg() == 0,
        }
    }

    /// Monic integral model `g(x) = m^n f(x/m) / a_n` with the least admissible `m > 0`.
    pub fn monic_integral(&self) -> (IntPoly, BigInt) {
        let n = self.deg();
        let an = self.lc();
        let sign = if an.is_negative() { -BigInt::one() } else { BigInt::one() };
        let mut m = BigInt::one();
        for (l, k) in super::ntheory::factor(&an.abs()) {
            let mut need = 0u32;
            for i in 0..n {
                if self.c[i].is_zero() {
                    continue;
                }
                let v = super::ntheory::valuation(&self.c[i], &l);
                if v < k {
                    let gap = k - v;
                    let d = (n - i) as u32;
                    need = need.max(gap.div_ceil(d));
                }
            }
            m *= num_traits::pow(l.clone(), need as usize);
        }
        let g = self.scale_root(&m);
        let den = &an * &sign;
        let out = IntPoly::new(
            g.c.iter()
                .map(|a| {
                    let (q, r) = (a * &sign).div_rem(&den);
                    debug_assert!(r.is_zero());
                    q
                })
                .collect(),
        );
        (out, m)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        if self.c.is_empty() {
            write!(f, "0")?;
        }
        for (i, a) in self.c.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly{self}")
    }
}

impl FromStr for IntPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        IntPoly::parse(&s).map_err(serde::de::Error::custom)
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, o: &IntPoly) -> IntPoly {
        let n = self.c.len().max(o.c.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, o: &IntPoly) -> IntPoly {
        let n = self.c.len().max(o.c.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, o: &IntPoly) -> IntPoly {
        if self.is_zero() || o.is_zero() {
            return IntPoly::zero();
        }
        let mut c = vec![BigInt::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        IntPoly::new(c)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.c.iter().map(|a| -a).collect())
    }
}

impl Add for IntPoly {
    type Output = IntPoly;
    fn add(self, o: IntPoly) -> IntPoly {
        &self + &o
    }
}

impl Sub for IntPoly {
    type Output = IntPoly;
    fn sub(self, o: IntPoly) -> IntPoly {
        &self - &o
    }
}

impl Mul for IntPoly {
    type Output = IntPoly;
    fn mul(self, o: IntPoly) -> IntPoly {
        &self * &o
    }
}
