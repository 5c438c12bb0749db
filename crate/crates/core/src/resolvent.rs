//! Pair resolvents `K = Q(r1 + r2)` of quintic fields and the favorability report.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::exact_core::ntheory::{is_prime, valuation};
use crate::exact_core::{is_irreducible_z, IntPoly};
use crate::field_lab::{maximal_order, FieldElt, NumberFieldData};
use crate::local_conductors::{quintic_two_adic_type, TwoAdicType};
use crate::{Error, Result};

/// The degree-10 polynomial `g = prod_{i<j} (x - r_i - r_j)` and the field it defines.
#[derive(Clone, Debug, Serialize)]
pub struct ResolventField {
    pub g: IntPoly,
    pub field: NumberFieldData,
}

/// `Res_y(f(y), f(x - y))` by evaluation at `deg^2 + 1` integers and exact interpolation.
pub fn pair_resultant(f: &IntPoly) -> IntPoly {
    let n = f.deg();
    let m = n * n;
    let xs: Vec<BigInt> = (0..=m as i64).map(BigInt::from).collect();
    let ys: Vec<BigInt> = xs
        .iter()
        .map(|x| {
            // f(x - y) as a polynomial in y
            let h = f.compose(&IntPoly::new(vec![x.clone(), -BigInt::one()]));
            f.resultant(&h)
        })
        .collect();
    interpolate(&xs, &ys)
}

/// Newton interpolation through integer points; the result is required to be integral.
pub(crate) fn interpolate(xs: &[BigInt], ys: &[BigInt]) -> IntPoly {
    let k = xs.len();
    let mut coef: Vec<BigRational> = ys.iter().map(|y| BigRational::from_integer(y.clone())).collect();
    for j in 1..k {
        for i in (j..k).rev() {
            coef[i] = (&coef[i] - &coef[i - 1]) / BigRational::from_integer(&xs[i] - &xs[i - j]);
        }
    }
    let mut poly = vec![BigRational::zero()];
    for i in (0..k).rev() {
        // poly = poly * (x - xs[i]) + coef[i]
        let mut next = vec![BigRational::zero(); poly.len() + 1];
        for (d, c) in poly.iter().enumerate() {
            next[d + 1] += c;
            next[d] -= c * BigRational::from_integer(xs[i].clone());
        }
        next[0] += &coef[i];
        poly = next;
    }
    IntPoly::new(
        poly.into_iter()
            .map(|c| {
                assert!(c.is_integer(), "interpolant of a resultant is integral");
                c.to_integer()
            })
            .collect(),
    )
}

/// Square root of a monic polynomial of even degree, by the power-series recursion on the
/// reversed polynomial; `None` if it is not a perfect square.
pub fn poly_sqrt(q: &IntPoly) -> Option<IntPoly> {
    let d = q.deg();
    if d % 2 == 1 || !q.is_monic() {
        return None;
    }
    let h = d / 2;
    let qc = q.coeffs();
    let mut g = vec![BigInt::zero(); h + 1];
    g[h] = BigInt::one();
    for k in (0..h).rev() {
        let mut s = qc[h + k].clone();
        for i in (k + 1)..=h {
            let j = h + k - i;
            if j > k && j <= h {
                s -= &g[i] * &g[j];
            }
        }
        let (quo, rem) = s.div_rem(&BigInt::from(2));
        if !rem.is_zero() {
            return None;
        }
        g[k] = quo;
    }
    let g = IntPoly::new(g);
    (&g * &g == *q).then_some(g)
}

/// The polynomial of the pair resolvent (without the ring of integers).
pub fn pair_resolvent_poly(f: &IntPoly) -> Result<IntPoly> {
    if f.deg() != 5 || !f.is_monic() {
        return Err(Error::Precondition(format!("{f} is not a monic quintic")));
    }
    if !is_irreducible_z(f) {
        return Err(Error::Precondition(format!("{f} is reducible")));
    }
    let r = pair_resultant(f);
    let even = f.scale_root(&BigInt::from(2));
    let q = r
        .div_exact(&even)
        .ok_or_else(|| Error::Inconsistent("2^5 f(x/2) does not divide the pair resultant".into()))?;
    poly_sqrt(&q).ok_or_else(|| Error::Inconsistent("pair resultant quotient is not a square".into()))
}

/// Pair resolvent with its maximal order.
pub fn pair_resolvent(f: &IntPoly) -> Result<ResolventField> {
    let g = pair_resolvent_poly(f)?;
    if !is_irreducible_z(&g) {
        return Err(Error::Unsupported(format!("pair resolvent {g} is reducible (Galois group is not S5)")));
    }
    let field = maximal_order(&g)?;
    Ok(ResolventField { g, field })
}

/// Outcome of one favorability check.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CheckOutcome {
    pub check: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct QuinticReport {
    pub input: IntPoly,
    #[serde(serialize_with = "ser_opt_int")]
    pub n: Option<BigInt>,
    #[serde(serialize_with = "ser_opt_int")]
    pub n_star: Option<BigInt>,
    pub favorable: bool,
    pub reasons: Vec<CheckOutcome>,
}

fn ser_opt_int<S: serde::Serializer>(x: &Option<BigInt>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match x {
        Some(v) => s.serialize_str(&v.to_string()),
        None => s.serialize_none(),
    }
}

fn outcome(check: &str, passed: bool, detail: String) -> CheckOutcome {
    CheckOutcome { check: check.into(), passed, detail }
}

/// A defining polynomial of the same quintic field with `v_2(disc) = 4`, searched among
/// characteristic polynomials of small integral elements.
fn two_maximal_model(k: &NumberFieldData) -> Option<IntPoly> {
    let two = BigInt::from(2);
    if valuation(&k.poly.discriminant().ok()?, &two) == 4 {
        return Some(k.poly.clone());
    }
    let n = k.degree();
    let mut coeffs = vec![0i64; n];
    for _ in 0..5usize.pow(n as u32 - 1) {
        for c in coeffs.iter_mut().skip(1) {
            *c += 1;
            if *c <= 2 {
                break;
            }
            *c = -2;
        }
        let a: Vec<BigInt> = coeffs.iter().map(|&c| BigInt::from(c)).collect();
        if a.iter().skip(1).all(|x| x.is_zero()) {
            continue;
        }
        let cp = k.char_poly(&FieldElt::integral(a)).to_int()?;
        let Ok(d) = cp.discriminant() else { continue };
        if !d.is_zero() && valuation(&d, &two) == 4 {
            return Some(cp);
        }
    }
    None
}

/// Favorability of the quintic field defined by `f`.
pub fn favorability_report(f: &IntPoly) -> QuinticReport {
    let mut rep = QuinticReport { input: f.clone(), n: None, n_star: None, favorable: false, reasons: vec![] };
    if f.deg() != 5 {
        rep.reasons.push(outcome("degree", false, format!("degree {} is not 5", f.deg())));
        return rep;
    }
    let irreducible = is_irreducible_z(f);
    rep.reasons.push(outcome("irreducible", irreducible, String::new()));
    if !irreducible {
        return rep;
    }
    let (fm, _) = f.monic_integral();
    let k = match maximal_order(&fm) {
        Ok(k) => k,
        Err(e) => {
            rep.reasons.push(outcome("maximal order", false, e.to_string()));
            return rep;
        }
    };
    let d = k.disc.clone();
    let (q, r) = d.div_rem(&BigInt::from(16));
    let n_abs = q.abs();
    let disc_ok = r.is_zero() && n_abs.is_odd() && n_abs > BigInt::one() && is_prime(&n_abs);
    rep.reasons.push(outcome("disc = +-16N, N odd prime", disc_ok, format!("field discriminant {d}")));
    if disc_ok {
        rep.n = Some(n_abs.clone());
        rep.n_star = Some(q.clone());
    }
    let two_adic = match two_maximal_model(&k) {
        Some(model) => match quintic_two_adic_type(&model) {
            Ok(TwoAdicType::TotallyRamifiedTameDeg5) => outcome("2-adic type", true, format!("model {model}")),
            Ok(TwoAdicType::Other) => outcome("2-adic type", false, format!("model {model}: not totally ramified")),
            Err(e) => outcome("2-adic type", false, e.to_string()),
        },
        None => outcome("2-adic type", false, "no 2-maximal model found".into()),
    };
    let two_ok = two_adic.passed;
    rep.reasons.push(two_adic);
    let sign_ok = disc_ok && q.mod_floor(&BigInt::from(8)) == BigInt::from(5);
    if disc_ok {
        rep.reasons.push(outcome("N* = 5 mod 8", sign_ok, format!("N* = {q}")));
    }
    rep.favorable = disc_ok && two_ok && sign_ok;
    rep
}

/// Signed conductor as an `i64` when it fits.
pub fn n_star_i64(rep: &QuinticReport) -> Option<i64> {
    rep.n_star.as_ref().and_then(|x| x.to_i64())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field_lab::primes_above;

    #[test]
    fn first_row() {
        let f = IntPoly::from_i64(&[-1, -1, -2, 0, 1, 1]);
        let rep = favorability_report(&f);
        assert!(rep.favorable, "{:?}", rep.reasons);
        assert_eq!(rep.n, Some(BigInt::from(277)));
        assert_eq!(rep.n_star, Some(BigInt::from(277)));
        let g = pair_resolvent_poly(&f).unwrap();
        assert_eq!(g.deg(), 10);
        let r = pair_resultant(&f);
        let even = f.scale_root(&BigInt::from(2));
        assert_eq!(&even * &(&g * &g), r);
    }

    #[test]
    fn row_six_and_non_favorable() {
        let rep = favorability_report(&IntPoly::from_i64(&[2, 2, 2, 2, 2, 1]));
        assert!(rep.favorable);
        assert_eq!(rep.n, Some(BigInt::from(797)));
        assert_eq!(rep.n_star, Some(BigInt::from(797)));
        let rep = favorability_report(&IntPoly::from_i64(&[-1, -1, 0, 0, 0, 1]));
        assert!(!rep.favorable);
        assert!(rep.reasons.iter().any(|c| c.detail.contains("2869")));
    }

    #[test]
    fn resolvent_splitting_at_two() {
        let f = IntPoly::from_i64(&[-1, -1, -2, 0, 1, 1]);
        let k = pair_resolvent(&f).unwrap();
        let ps = primes_above(&k.field, 2);
        assert_eq!(ps.iter().map(|q| (q.e, q.f)).collect::<Vec<_>>(), vec![(5, 2)]);
        assert!(pair_resolvent_poly(&IntPoly::from_i64(&[-2, 0, 0, 0, 0, 1])).is_ok());
    }
}
