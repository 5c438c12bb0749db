//! p-adic utilities and conductor-exponent formulas for local fields: Newton polygons,
//! the 2-adic shape test for quintics, Kummer and Artin-Schreier type conductors,
//! composita, Herbrand functions and the Fontaine-type bound.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::exact_core::ntheory::valuation;
use crate::exact_core::IntPoly;
use crate::{Error, Result};

/// Lower convex hull of `(i, v_p(a_i))`. Each segment records the common valuation of
/// the roots it accounts for (`slope`) and its horizontal length. Segments are sorted by
/// increasing slope.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NewtonPolygon {
    pub p: u64,
    pub segments: Vec<(BigRational, usize)>,
}

impl NewtonPolygon {
    pub fn total_length(&self) -> usize {
        self.segments.iter().map(|s| s.1).sum()
    }
}

pub fn newton_polygon(f: &IntPoly, p: u64) -> Result<NewtonPolygon> {
    if f.is_zero() {
        return Err(Error::Degenerate("Newton polygon of the zero polynomial".into()));
    }
    let pb = BigInt::from(p);
    let pts: Vec<(i64, i64)> = f
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, a)| !a.is_zero())
        .map(|(i, a)| (i as i64, valuation(a, &pb) as i64))
        .collect();
    // lower hull, left to right
    let mut hull: Vec<(i64, i64)> = Vec::new();
    for &q in &pts {
        while hull.len() >= 2 {
            let (a, b) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            // remove b if it lies on or above segment a-q
            let cross = (b.0 - a.0) * (q.1 - a.1) - (b.1 - a.1) * (q.0 - a.0);
            if cross <= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(q);
    }
    let mut segments: Vec<(BigRational, usize)> = hull
        .windows(2)
        .map(|w| {
            let dx = w[1].0 - w[0].0;
            let dy = w[1].1 - w[0].1;
            (BigRational::new(BigInt::from(-dy), BigInt::from(dx)), dx as usize)
        })
        .collect();
    segments.reverse();
    Ok(NewtonPolygon { p, segments })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TwoAdicType {
    TotallyRamifiedTameDeg5,
    Other,
}

/// Decide whether the prime over 2 in `Q[x]/(f)` is totally ramified of index 5.
/// Requires `v_2(disc f) = 4`, which makes `Z_2[x]/(f)` the maximal order.
pub fn quintic_two_adic_type(f: &IntPoly) -> Result<TwoAdicType> {
    if f.deg() != 5 || !f.is_monic() {
        return Err(Error::Precondition(format!("{f} is not a monic quintic")));
    }
    let d = f.discriminant()?;
    if d.is_zero() {
        return Err(Error::Precondition(format!("{f} is not squarefree")));
    }
    let v = valuation(&d, &BigInt::from(2));
    if v != 4 {
        return Err(Error::Precondition(format!(
            "v_2(disc) = {v}, not 4: the equation order is not certified 2-maximal"
        )));
    }
    let fm = f.mod_p(2);
    for c in [0i64, 1] {
        let target = IntPoly::from_i64(&[c, 1]);
        let t5 = (0..5).fold(IntPoly::one(), |a, _| &a * &target).mod_p(2);
        if fm != t5 {
            continue;
        }
        let np = newton_polygon(&f.shift(&BigInt::from(c)), 2)?;
        if np.segments.len() == 1 {
            let s = &np.segments[0].0;
            if s.denom() == &BigInt::from(5) {
                return Ok(TwoAdicType::TotallyRamifiedTameDeg5);
            }
        }
        return Ok(TwoAdicType::Other);
    }
    Ok(TwoAdicType::Other)
}

/// Local field data needed by the conductor formulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalFieldProfile {
    pub p: u64,
    pub e_k: u64,
    pub contains_mu_p: bool,
}

impl LocalFieldProfile {
    pub fn new(p: u64, e_k: u64, contains_mu_p: bool) -> Result<Self> {
        if e_k == 0 {
            return Err(Error::Precondition("e_K must be at least 1".into()));
        }
        if contains_mu_p && !e_k.is_multiple_of(p - 1) {
            return Err(Error::Precondition(format!("mu_{p} in K forces (p-1) | e_K, got e_K = {e_k}")));
        }
        Ok(LocalFieldProfile { p, e_k, contains_mu_p })
    }
}

/// Shape of the Kummer generator `kappa` of `L = K(kappa^{1/p})`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum KappaShape {
    /// `ord(kappa)` prime to p.
    ValuationPrimeToP,
    /// `ord(kappa - 1) = n`.
    OneUnit(u64),
}

pub fn kummer_conductor(k: &LocalFieldProfile, shape: KappaShape) -> Result<u64> {
    if !k.contains_mu_p {
        return Err(Error::Precondition("K must contain the p-th roots of unity".into()));
    }
    let p = k.p;
    let top = p * k.e_k / (p - 1);
    match shape {
        KappaShape::ValuationPrimeToP => Ok(top + 1),
        KappaShape::OneUnit(n) => {
            if n == 0 {
                return Err(Error::Precondition("a one-unit level must be at least 1".into()));
            }
            if n >= top {
                return Ok(0);
            }
            if n % p == 0 {
                return Err(Error::Unsupported(format!(
                    "level n = {n} divisible by p = {p}; renormalize kappa by a p-th power first"
                )));
            }
            Ok(top - n + 1)
        }
    }
}

/// Lower-numbering ramification filtration of a totally ramified Galois extension:
/// `jumps[k] = (j_k, order)` means `|G_s| = order` for `j_{k-1} < s <= j_k` (with `j_{-1} = -1`),
/// and `G_s = 1` beyond the last jump.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RamificationFiltration {
    pub jumps: Vec<(i64, u64)>,
}

impl RamificationFiltration {
    pub fn new(jumps: Vec<(i64, u64)>) -> Result<Self> {
        if jumps.windows(2).any(|w| w[0].0 >= w[1].0 || w[0].1 < w[1].1) {
            return Err(Error::Precondition("jumps must increase and orders weakly decrease".into()));
        }
        Ok(RamificationFiltration { jumps })
    }

    pub fn order_at(&self, s: &BigRational) -> u64 {
        for &(j, o) in &self.jumps {
            if s <= &BigRational::from_integer(BigInt::from(j)) {
                return o;
            }
        }
        1
    }

    pub fn inertia_order(&self) -> u64 {
        self.order_at(&BigRational::zero())
    }

    /// Largest `j` with `G_j != 1`.
    pub fn c(&self) -> i64 {
        self.jumps.last().map_or(-1, |j| j.0)
    }

    /// Herbrand function `phi(x) = int_0^x ds / [G_0 : G_s]`, exact.
    pub fn herbrand_phi(&self, x: &BigRational) -> BigRational {
        let g0 = BigInt::from(self.inertia_order());
        let mut acc = BigRational::zero();
        let mut lo = BigRational::zero();
        let mut breaks: Vec<(BigRational, u64)> = self
            .jumps
            .iter()
            .filter(|j| j.0 >= 0)
            .map(|&(j, o)| (BigRational::from_integer(BigInt::from(j)), o))
            .collect();
        breaks.push((x.clone().max(lo.clone()) + BigRational::one(), 1));
        for (hi, o) in breaks {
            if &lo >= x {
                break;
            }
            let top = if &hi < x { hi.clone() } else { x.clone() };
            if top > lo {
                acc += (&top - &lo) * BigRational::new(BigInt::from(o), g0.clone());
            }
            lo = hi;
        }
        acc
    }

    /// Conductor exponent `phi(c) + 1` of an abelian extension with this filtration.
    pub fn conductor(&self) -> BigRational {
        if self.c() < 0 {
            return BigRational::zero();
        }
        self.herbrand_phi(&BigRational::from_integer(BigInt::from(self.c()))) + BigRational::one()
    }
}

/// Filtration `G_0 = G_n` strictly containing `G_{n+1} = 1` and its conductor `n + 1`.
pub fn one_gap_conductor(n: u64, p: u64) -> Result<(u64, RamificationFiltration)> {
    if n == 0 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    if n.is_multiple_of(p) {
        return Err(Error::Precondition(format!("p = {p} divides n = {n}")));
    }
    let filt = RamificationFiltration::new(vec![(n as i64, p)])?;
    Ok((n + 1, filt))
}

/// Conductor exponent of the compositum from the upper breaks `m_i` (`-1` for unramified).
pub fn compositum_conductor(m_list: &[i64]) -> Result<i64> {
    let m = m_list.iter().copied().max().ok_or_else(|| Error::Precondition("empty list of breaks".into()))?;
    if m < -1 {
        return Err(Error::Precondition("breaks must be at least -1".into()));
    }
    Ok(m + 1)
}

/// `e_F (n + 1/(p-1)) - e_{F/K} + 1`.
pub fn fontaine_bound(e_f: u64, e_rel: u64, n: u64, p: u64) -> Result<BigRational> {
    if e_rel == 0 || !e_f.is_multiple_of(e_rel) {
        return Err(Error::Precondition(format!("e_rel = {e_rel} must divide e_F = {e_f}")));
    }
    if n == 0 {
        return Err(Error::Precondition("exponent n must be at least 1".into()));
    }
    let ef = BigRational::from_integer(BigInt::from(e_f));
    let b = ef * (BigRational::from_integer(BigInt::from(n)) + BigRational::new(BigInt::one(), BigInt::from(p - 1)))
        - BigRational::from_integer(BigInt::from(e_rel))
        + BigRational::one();
    Ok(b)
}

/// `v_p(a)` as a signed integer, `None` for zero.
pub fn padic_valuation(a: &BigInt, p: u64) -> Option<u32> {
    if a.is_zero() {
        None
    } else {
        Some(valuation(a, &BigInt::from(p)))
    }
}

/// Integer value of an exact rational, if integral.
pub fn as_integer(r: &BigRational) -> Option<i64> {
    if r.is_integer() {
        r.to_integer().to_i64()
    } else {
        None
    }
}

/// `true` when `r` is a positive rational whose reduced denominator is `d`.
pub fn has_denominator(r: &BigRational, d: u64) -> bool {
    r.is_positive() && r.denom() == &BigInt::from(d) && r.numer().gcd(&BigInt::from(d)).is_one()
}
