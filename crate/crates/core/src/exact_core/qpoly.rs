//! Dense univariate polynomials over Q.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::IntPoly;

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct QPoly {
    c: Vec<BigRational>,
}

impl QPoly {
    pub fn new(mut c: Vec<BigRational>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        QPoly { c }
    }

    pub fn zero() -> Self {
        QPoly { c: vec![] }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.c.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn deg(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn lc(&self) -> BigRational {
        self.c.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.lc();
        QPoly::new(self.c.iter().map(|a| a / &l).collect())
    }

    pub fn neg(&self) -> Self {
        QPoly::new(self.c.iter().map(|a| -a).collect())
    }

    pub fn add(&self, o: &QPoly) -> Self {
        let n = self.c.len().max(o.c.len());
        QPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &QPoly) -> Self {
        let n = self.c.len().max(o.c.len());
        QPoly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }

    pub fn mul(&self, o: &QPoly) -> Self {
        if self.is_zero() || o.is_zero() {
            return QPoly::zero();
        }
        let mut c = vec![BigRational::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        QPoly::new(c)
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        QPoly::new(self.c.iter().map(|a| a * k).collect())
    }

    pub fn derivative(&self) -> Self {
        QPoly::new(
            self.c.iter().enumerate().skip(1).map(|(i, a)| a * BigRational::from_integer(BigInt::from(i))).collect(),
        )
    }

    pub fn divrem(&self, d: &QPoly) -> (QPoly, QPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.c.len() < d.c.len() {
            return (QPoly::zero(), self.clone());
        }
        let mut r = self.c.clone();
        let m = d.deg();
        let l = d.lc();
        let mut q = vec![BigRational::zero(); self.c.len() - m];
        for k in (0..q.len()).rev() {
            let t = &r[k + m] / &l;
            if !t.is_zero() {
                for j in 0..=m {
                    r[k + j] -= &t * &d.c[j];
                }
            }
            q[k] = t;
        }
        r.truncate(m);
        (QPoly::new(q), QPoly::new(r))
    }

    pub fn rem(&self, d: &QPoly) -> QPoly {
        self.divrem(d).1
    }

    /// Monic gcd.
    pub fn gcd(&self, o: &QPoly) -> QPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for a in self.c.iter().rev() {
            acc = acc * x + a;
        }
        acc
    }

    /// Scale to a primitive integer polynomial with positive leading coefficient.
    pub fn to_primitive_int(&self) -> IntPoly {
        let mut den = BigInt::one();
        for a in &self.c {
            den = den.lcm(a.denom());
        }
        let ints: Vec<BigInt> =
            self.c.iter().map(|a| (a * BigRational::from_integer(den.clone())).to_integer()).collect();
        IntPoly::new(ints).primitive_part()
    }

    /// Integer polynomial if every coefficient is integral.
    pub fn to_int(&self) -> Option<IntPoly> {
        if self.c.iter().all(|a| a.is_integer()) {
            Some(IntPoly::new(self.c.iter().map(|a| a.to_integer()).collect()))
        } else {
            None
        }
    }

    pub fn sign_at_pos_inf(&self) -> i32 {
        sgn(&self.lc())
    }

    pub fn sign_at_neg_inf(&self) -> i32 {
        let s = sgn(&self.lc());
        if self.deg() % 2 == 1 {
            -s
        } else {
            s
        }
    }
}

pub(crate) fn sgn(a: &BigRational) -> i32 {
    if a.is_positive() {
        1
    } else if a.is_negative() {
        -1
    } else {
        0
    }
}
