//! Integer and rational matrices: Bareiss determinants, Hermite and Smith forms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type IMat = Vec<Vec<BigInt>>;

/// Determinant by fraction-free Gaussian elimination.
pub fn det_bareiss(mut m: IMat) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    sign = !sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

/// Determinant of a small matrix with i128 Bareiss, `None` on overflow.
pub fn det_i128(m: &[Vec<i64>]) -> Option<i128> {
    let n = m.len();
    if n == 0 {
        return Some(1);
    }
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return Some(0),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[i][j].checked_mul(a[k][k])?.checked_sub(a[i][k].checked_mul(a[k][j])?)?;
                a[i][j] = v / prev;
            }
        }
        prev = a[k][k];
    }
    a[n - 1][n - 1].checked_mul(sign)
}

fn euclid_column(rows: &mut Vec<Vec<BigInt>>, col: usize, modulus: Option<&BigInt>) -> Option<Vec<BigInt>> {
    loop {
        let mut best: Option<usize> = None;
        for (i, r) in rows.iter().enumerate() {
            if !r[col].is_zero() && best.is_none_or(|b| r[col].abs() < rows[b][col].abs()) {
                best = Some(i);
            }
        }
        let b = best?;
        let piv = rows[b].clone();
        let mut done = true;
        for (i, r) in rows.iter_mut().enumerate() {
            if i == b || r[col].is_zero() {
                continue;
            }
            let q = r[col].div_floor(&piv[col]);
            for (x, y) in r.iter_mut().zip(piv.iter()) {
                *x -= &q * y;
                if let Some(d) = modulus {
                    *x = x.mod_floor(d);
                }
            }
            if !r[col].is_zero() {
                done = false;
            }
        }
        if done {
            let mut piv = rows.swap_remove(b);
            if piv[col].is_negative() {
                for x in piv.iter_mut() {
                    *x = -&*x;
                }
            }
            return Some(piv);
        }
    }
}

fn reduce_above(basis: &mut [Vec<BigInt>], pivcols: &[usize]) {
    for i in (0..basis.len()).rev() {
        let c = pivcols[i];
        for k in 0..i {
            let q = basis[k][c].div_floor(&basis[i][c]);
            if !q.is_zero() {
                let bi = basis[i].clone();
                for (x, y) in basis[k].iter_mut().zip(bi.iter()) {
                    *x -= &q * y;
                }
            }
        }
    }
}

/// Row Hermite normal form of the Z-span of `gens` (rows of length `n`).
/// Output rows are upper triangular with positive pivots and reduced entries above them.
pub fn hnf(gens: &[Vec<BigInt>], n: usize) -> IMat {
    let mut pool: Vec<Vec<BigInt>> = gens.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
    let mut basis = Vec::new();
    let mut pivcols = Vec::new();
    for col in 0..n {
        let mut with: Vec<Vec<BigInt>> = Vec::new();
        let mut without = Vec::new();
        for r in pool.drain(..) {
            if r[col].is_zero() {
                without.push(r);
            } else {
                with.push(r);
            }
        }
        if let Some(p) = euclid_column(&mut with, col, None) {
            basis.push(p);
            pivcols.push(col);
        }
        pool = without;
        pool.extend(with.into_iter().filter(|r| r.iter().any(|x| !x.is_zero())));
    }
    reduce_above(&mut basis, &pivcols);
    basis
}

/// Hermite normal form of the full-rank lattice spanned by `gens` and `d Z^n`.
pub fn hnf_mod(gens: &[Vec<BigInt>], n: usize, d: &BigInt) -> IMat {
    let d = d.abs();
    let mut pool: Vec<Vec<BigInt>> = gens
        .iter()
        .map(|r| r.iter().map(|x| x.mod_floor(&d)).collect::<Vec<_>>())
        .filter(|r: &Vec<BigInt>| r.iter().any(|x| !x.is_zero()))
        .collect();
    let mut basis = Vec::new();
    for col in 0..n {
        let mut with: Vec<Vec<BigInt>> = Vec::new();
        let mut without = Vec::new();
        for r in pool.drain(..) {
            if r[col].is_zero() {
                without.push(r);
            } else {
                with.push(r);
            }
        }
        let mut de = vec![BigInt::zero(); n];
        de[col] = d.clone();
        with.push(de);
        let mut p = euclid_column(&mut with, col, Some(&d)).expect("d e_col present");
        if p[col].is_zero() {
            p[col] = d.clone();
        }
        basis.push(p);
        pool = without;
        pool.extend(with.into_iter().filter(|r| r.iter().any(|x| !x.is_zero())));
    }
    let pivcols: Vec<usize> = (0..n).collect();
    reduce_above(&mut basis, &pivcols);
    basis
}

/// Row HNF together with a unimodular transform: returns `(h, u)` with `u * gens = h_full`,
/// where the first rows of `h_full` are the nonzero HNF rows and the remaining rows are zero.
/// The rows of `u` beyond the rank therefore span the integer left kernel.
pub fn hnf_with_transform(gens: &[Vec<BigInt>], n: usize) -> (IMat, IMat) {
    let m = gens.len();
    let mut rows: Vec<(Vec<BigInt>, Vec<BigInt>)> = gens
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut u = vec![BigInt::zero(); m];
            u[i] = BigInt::one();
            (r.clone(), u)
        })
        .collect();
    let mut h = Vec::new();
    let mut us = Vec::new();
    let mut pivcols = Vec::new();
    for col in 0..n {
        let (mut with, without): (Vec<_>, Vec<_>) = rows.drain(..).partition(|(r, _)| !r[col].is_zero());
        rows = without;
        if with.is_empty() {
            continue;
        }
        loop {
            let b = (0..with.len()).min_by_key(|&i| with[i].0[col].abs()).unwrap();
            let piv = with[b].clone();
            let mut done = true;
            for (i, (r, u)) in with.iter_mut().enumerate() {
                if i == b {
                    continue;
                }
                let q = r[col].div_floor(&piv.0[col]);
                for (x, y) in r.iter_mut().zip(piv.0.iter()) {
                    *x -= &q * y;
                }
                for (x, y) in u.iter_mut().zip(piv.1.iter()) {
                    *x -= &q * y;
                }
                if !r[col].is_zero() {
                    done = false;
                }
            }
            if done {
                let (mut pr, mut pu) = with.swap_remove(b);
                if pr[col].is_negative() {
                    pr.iter_mut().for_each(|x| *x = -&*x);
                    pu.iter_mut().for_each(|x| *x = -&*x);
                }
                h.push(pr);
                us.push(pu);
                pivcols.push(col);
                rows.extend(with);
                break;
            }
            let (nz, z): (Vec<_>, Vec<_>) = with.into_iter().partition(|(r, _)| !r[col].is_zero());
            with = nz;
            rows.extend(z);
            if with.len() == 1 {
                let (mut pr, mut pu) = with.pop().unwrap();
                if pr[col].is_negative() {
                    pr.iter_mut().for_each(|x| *x = -&*x);
                    pu.iter_mut().for_each(|x| *x = -&*x);
                }
                h.push(pr);
                us.push(pu);
                pivcols.push(col);
                break;
            }
        }
    }
    for i in (0..h.len()).rev() {
        let c = pivcols[i];
        for k in 0..i {
            let q = h[k][c].div_floor(&h[i][c]);
            if !q.is_zero() {
                let (hi, ui) = (h[i].clone(), us[i].clone());
                for (x, y) in h[k].iter_mut().zip(hi.iter()) {
                    *x -= &q * y;
                }
                for (x, y) in us[k].iter_mut().zip(ui.iter()) {
                    *x -= &q * y;
                }
            }
        }
    }
    let rank = h.len();
    let mut u = us;
    for (r, uu) in rows {
        debug_assert!(r.iter().all(|x| x.is_zero()));
        u.push(uu);
    }
    debug_assert_eq!(u.len(), m);
    let _ = rank;
    (h, u)
}

/// Elementary divisors (Smith invariants `d_1 | d_2 | ...`) of a square nonsingular matrix,
/// without the unit ones.
pub fn smith_invariants(m: &IMat) -> Vec<BigInt> {
    let n = m.len();
    let mut a = m.clone();
    for k in 0..n {
        loop {
            // pivot: smallest nonzero in the lower-right block
            let mut best: Option<(usize, usize)> = None;
            for i in k..n {
                for j in k..n {
                    if !a[i][j].is_zero() && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let (bi, bj) = match best {
                Some(b) => b,
                None => break,
            };
            a.swap(k, bi);
            for r in a.iter_mut() {
                r.swap(k, bj);
            }
            let mut clean = true;
            for i in k + 1..n {
                let q = a[i][k].div_floor(&a[k][k]);
                if !q.is_zero() {
                    let rk = a[k].clone();
                    for (x, y) in a[i].iter_mut().zip(rk.iter()) {
                        *x -= &q * y;
                    }
                }
                if !a[i][k].is_zero() {
                    clean = false;
                }
            }
            for j in k + 1..n {
                let q = a[k][j].div_floor(&a[k][k]);
                if !q.is_zero() {
                    for r in a.iter_mut() {
                        let t = &q * &r[k];
                        r[j] -= t;
                    }
                }
                if !a[k][j].is_zero() {
                    clean = false;
                }
            }
            if clean {
                // divisibility condition
                let mut bad = None;
                'o: for i in k + 1..n {
                    for j in k + 1..n {
                        if !(&a[i][j] % &a[k][k]).is_zero() {
                            bad = Some(i);
                            break 'o;
                        }
                    }
                }
                match bad {
                    None => break,
                    Some(i) => {
                        let ri = a[i].clone();
                        for (x, y) in a[k].iter_mut().zip(ri.iter()) {
                            *x += y;
                        }
                    }
                }
            }
        }
    }
    let mut d: Vec<BigInt> = (0..n).map(|i| a[i][i].abs()).filter(|x| !x.is_one()).collect();
    d.sort();
    d
}

/// Inverse of a square rational matrix, `None` if singular.
pub fn rat_inverse(m: &[Vec<BigRational>]) -> Option<Vec<Vec<BigRational>>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            row
        })
        .collect();
    for k in 0..n {
        let p = (k..n).find(|&i| !a[i][k].is_zero())?;
        a.swap(k, p);
        let inv = a[k][k].recip();
        for x in a[k].iter_mut() {
            *x *= &inv;
        }
        for i in 0..n {
            if i != k && !a[i][k].is_zero() {
                let f = a[i][k].clone();
                let rk = a[k].clone();
                for (x, y) in a[i].iter_mut().zip(rk.iter()) {
                    *x -= &f * y;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn im(v: &[&[i64]]) -> IMat {
        v.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn determinants() {
        let m = im(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 2]]);
        assert_eq!(det_bareiss(m.clone()), BigInt::from(6));
        let m2 = im(&[&[0, 1], &[1, 0]]);
        assert_eq!(det_bareiss(m2), BigInt::from(-1));
        assert_eq!(det_i128(&[vec![0, 1], vec![1, 0]]), Some(-1));
    }

    #[test]
    fn hnf_and_smith() {
        let g = im(&[&[2, 4], &[6, 8], &[4, 0]]);
        let h = hnf(&g, 2);
        assert_eq!(h, im(&[&[2, 0], &[0, 4]]));
        let h2 = hnf_mod(&g, 2, &BigInt::from(8));
        assert_eq!(h2, h);
        let s = smith_invariants(&im(&[&[2, 4], &[6, 8]]));
        assert_eq!(s, vec![BigInt::from(2), BigInt::from(4)]);
        let s = smith_invariants(&im(&[&[2, 0], &[0, 3]]));
        assert_eq!(s, vec![BigInt::from(6)]);
    }

    #[test]
    fn transform_gives_kernel() {
        let g = im(&[&[1, 2], &[2, 4], &[3, 7]]);
        let (h, u) = hnf_with_transform(&g, 2);
        assert_eq!(h.len(), 2);
        for row in &u[h.len()..] {
            let v: Vec<BigInt> = (0..2).map(|j| (0..3).map(|i| &row[i] * &g[i][j]).sum()).collect();
            assert!(v.iter().all(|x| x.is_zero()));
        }
    }
}
