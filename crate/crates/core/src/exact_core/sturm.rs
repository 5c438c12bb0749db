//! Real-root counting with Sturm sequences.

use super::poly::IntPoly;
use super::qpoly::{sgn, QPoly};
use crate::{Error, Result};
use num_rational::BigRational;

fn sturm_chain(f: &QPoly) -> Vec<QPoly> {
    let mut chain = vec![f.clone(), f.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let r = chain[n - 2].rem(&chain[n - 1]).neg();
        if r.is_zero() {
            break;
        }
        chain.push(r);
    }
    chain
}

fn variations(signs: impl Iterator<Item = i32>) -> usize {
    let mut last = 0;
    let mut v = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            v += 1;
        }
        last = s;
    }
    v
}

/// Number of distinct real roots of `f`.
pub fn count_real_roots(f: &IntPoly) -> usize {
    if f.deg() == 0 {
        return 0;
    }
    let chain = sturm_chain(&f.to_qpoly());
    let at_neg = variations(chain.iter().map(|p| p.sign_at_neg_inf()));
    let at_pos = variations(chain.iter().map(|p| p.sign_at_pos_inf()));
    at_neg - at_pos
}

/// Number of distinct real roots in the half-open interval `(a, b]`.
pub fn count_real_roots_in(f: &IntPoly, a: &BigRational, b: &BigRational) -> usize {
    let chain = sturm_chain(&f.to_qpoly());
    let va = variations(chain.iter().map(|p| sgn(&p.eval(a))));
    let vb = variations(chain.iter().map(|p| sgn(&p.eval(b))));
    va.saturating_sub(vb)
}

/// Signature `(r1, r2)` of a squarefree polynomial.
pub fn signature(f: &IntPoly) -> Result<(usize, usize)> {
    let n =
        f.degree().filter(|&d| d >= 1).ok_or_else(|| Error::Degenerate("signature of a constant polynomial".into()))?;
    if !f.is_squarefree() {
        return Err(Error::Precondition(format!("{f} is not squarefree")));
    }
    let r1 = count_real_roots(f);
    Ok((r1, (n - r1) / 2))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signatures() {
        assert_eq!(signature(&IntPoly::from_i64(&[1, 0, 1])).unwrap(), (0, 1));
        assert_eq!(signature(&IntPoly::from_i64(&[-2, 0, 0, 0, 0, 1])).unwrap(), (1, 2));
        assert_eq!(signature(&IntPoly::from_i64(&[-1, -1, -2, 0, 1, 1])).unwrap(), (1, 2));
        assert_eq!(signature(&IntPoly::from_i64(&[-6, 11, -6, 1])).unwrap(), (3, 0));
        assert!(signature(&IntPoly::from_i64(&[1, 2, 1])).is_err());
    }
}
