//! Maximal orders by iterated p-maximalization and arithmetic in the integral basis.

use std::sync::Arc;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::exact_core::intmat::{det_bareiss, det_i128, hnf, hnf_mod, rat_inverse, IMat};
use crate::exact_core::linalg_fp;
use crate::exact_core::ntheory::{factor, mulmod};
use crate::exact_core::numeric::{complex_roots, isolate_real_roots, sign_at_root};
use crate::exact_core::{is_irreducible_z, signature, IntPoly, QPoly};
use crate::{Error, Result};

/// A number field `Q[x]/(f)` together with its ring of integers.
///
/// The integral basis is `w_i = (sum_j basis[i][j] x^j) / basis_den`, lower triangular with `w_0 = 1`.
#[derive(Clone, Debug, Serialize)]
pub struct NumberFieldData {
    pub poly: IntPoly,
    #[serde(serialize_with = "ser_basis")]
    pub basis: Vec<Vec<BigInt>>,
    #[serde(serialize_with = "crate::serde_big::int")]
    pub basis_den: BigInt,
    #[serde(serialize_with = "crate::serde_big::int")]
    pub disc: BigInt,
    #[serde(serialize_with = "crate::serde_big::int")]
    pub index: BigInt,
    pub signature: (usize, usize),
    #[serde(skip)]
    pub(crate) t: Arc<Tables>,
}

fn ser_basis<S: serde::Serializer>(b: &[Vec<BigInt>], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(b.iter().map(|r| {
        let parts: Vec<String> = r.iter().map(|x| x.to_string()).collect();
        format!("[{}]", parts.join(","))
    }))
}

#[derive(Debug)]
pub(crate) struct Tables {
    /// `mult[i][j]` = coordinates of `w_i w_j`.
    pub mult: Vec<Vec<Vec<BigInt>>>,
    pub mult_i64: Option<Vec<Vec<Vec<i64>>>>,
    /// Row `j`: coordinates of `x^j` in the integral basis.
    pub pow_to_o: Vec<Vec<BigRational>>,
    /// `real_emb[k][i] = sigma_k(w_i)` for the real places in ascending root order.
    pub real_emb: Vec<Vec<f64>>,
    pub cx_emb: Vec<Vec<Complex64>>,
    pub real_intervals: Vec<(BigRational, BigRational)>,
}

/// Structure constants reduced modulo a small integer.
#[derive(Clone, Debug)]
pub struct ModTable {
    pub m: u64,
    n: usize,
    t: Vec<u64>,
}

impl ModTable {
    pub fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let n = self.n;
        let m = self.m;
        let mut out = vec![0u64; n];
        for i in 0..n {
            if a[i] == 0 {
                continue;
            }
            for j in 0..n {
                if b[j] == 0 {
                    continue;
                }
                let c = mulmod(a[i], b[j], m);
                let row = &self.t[(i * n + j) * n..(i * n + j + 1) * n];
                for k in 0..n {
                    if row[k] != 0 {
                        out[k] = (out[k] + mulmod(c, row[k], m)) % m;
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, a: &[u64], mut e: u128) -> Vec<u64> {
        let mut r = vec![0u64; self.n];
        r[0] = 1 % self.m;
        let mut b = a.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(&r, &b);
            }
            b = self.mul(&b, &b);
            e >>= 1;
        }
        r
    }

    pub fn one(&self) -> Vec<u64> {
        let mut r = vec![0u64; self.n];
        r[0] = 1 % self.m;
        r
    }

    pub fn reduce(&self, a: &[BigInt]) -> Vec<u64> {
        let m = BigInt::from(self.m);
        a.iter().map(|x| x.mod_floor(&m).to_u64().unwrap()).collect()
    }
}

fn rat(x: BigInt) -> BigRational {
    BigRational::from_integer(x)
}

fn poly_mod_rows(f: &IntPoly, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = f.deg();
    let mut prod = vec![BigInt::zero(); 2 * n];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            prod[i + j] += x * y;
        }
    }
    let fc = f.coeffs();
    for k in (n..2 * n).rev() {
        let c = std::mem::take(&mut prod[k]);
        if c.is_zero() {
            continue;
        }
        for j in 0..n {
            prod[k - n + j] -= &c * &fc[j];
        }
    }
    prod.truncate(n);
    prod
}

/// Structure constants of the order with basis rows `b / d` in the power basis of `Z[x]/(f)`.
/// Structure constants and the coordinates of the powers of the generator.
type MultTable = (Vec<Vec<Vec<BigInt>>>, Vec<Vec<BigRational>>);

fn mult_table(f: &IntPoly, b: &IMat, d: &BigInt) -> Result<MultTable> {
    let n = f.deg();
    let w: Vec<Vec<BigRational>> =
        b.iter().map(|r| r.iter().map(|x| BigRational::new(x.clone(), d.clone())).collect()).collect();
    let winv = rat_inverse(&w).ok_or_else(|| Error::Inconsistent("singular basis".into()))?;
    let d2 = d * d;
    let mut mult = vec![vec![vec![BigInt::zero(); n]; n]; n];
    for i in 0..n {
        for j in i..n {
            let p = poly_mod_rows(f, &b[i], &b[j]);
            let mut c = vec![BigInt::zero(); n];
            for k in 0..n {
                let mut s = BigRational::zero();
                for (l, pl) in p.iter().enumerate() {
                    if !pl.is_zero() {
                        s += BigRational::new(pl.clone(), d2.clone()) * &winv[l][k];
                    }
                }
                if !s.is_integer() {
                    return Err(Error::Inconsistent("basis is not closed under multiplication".into()));
                }
                c[k] = s.to_integer();
            }
            mult[i][j] = c.clone();
            mult[j][i] = c;
        }
    }
    Ok((mult, winv))
}

/// Left kernel over F_p of a matrix given by rows.
pub(crate) fn left_kernel(rows: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    if rows.is_empty() {
        return vec![];
    }
    let cols = rows[0].len();
    let t: Vec<Vec<u64>> = (0..cols).map(|c| rows.iter().map(|r| r[c]).collect()).collect();
    linalg_fp::kernel(&t, rows.len(), p)
}

pub(crate) fn lift(v: &[u64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// Coordinates of `x` in the upper-triangular full-rank lattice basis `h`, if `x` lies in the lattice.
pub(crate) fn lattice_coords(h: &IMat, x: &[BigInt]) -> Option<Vec<BigInt>> {
    let n = x.len();
    let mut r = x.to_vec();
    let mut c = vec![BigInt::zero(); n];
    for i in 0..n {
        if r[i].is_zero() {
            continue;
        }
        let (q, rem) = r[i].div_rem(&h[i][i]);
        if !rem.is_zero() {
            return None;
        }
        for k in i..n {
            r[k] -= &q * &h[i][k];
        }
        c[i] = q;
    }
    Some(c)
}

/// Lower-triangular HNF (pivot of row `i` in column `i`).
fn hnf_lower(rows: &[Vec<BigInt>], n: usize) -> IMat {
    let rev: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().rev().cloned().collect()).collect();
    let h = hnf(&rev, n);
    let mut out: IMat = h.into_iter().map(|r| r.into_iter().rev().collect()).collect();
    out.reverse();
    out
}

fn mod_table_of(mult: &[Vec<Vec<BigInt>>], m: u64) -> ModTable {
    let n = mult.len();
    let mb = BigInt::from(m);
    let mut t = Vec::with_capacity(n * n * n);
    for row in mult {
        for c in row {
            for x in c {
                t.push(x.mod_floor(&mb).to_u64().unwrap());
            }
        }
    }
    ModTable { m, n, t }
}

/// One enlargement step at `p`; `None` when the order is already p-maximal.
fn enlarge(mult: &[Vec<Vec<BigInt>>], p: u64) -> Option<IMat> {
    let n = mult.len();
    let mt = mod_table_of(mult, p);
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
    let rad = left_kernel(&frob, p);
    let pb = BigInt::from(p);
    let gens: Vec<Vec<BigInt>> = rad.iter().map(|v| lift(v)).collect();
    let ib = hnf_mod(&gens, n, &pb);
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n * n);
        for g in &ib {
            let mut prod = vec![BigInt::zero(); n];
            for (j, gj) in g.iter().enumerate() {
                if gj.is_zero() {
                    continue;
                }
                for k in 0..n {
                    prod[k] += gj * &mult[i][j][k];
                }
            }
            let c = lattice_coords(&ib, &prod).expect("radical is an ideal");
            row.extend(c.iter().map(|x| x.mod_floor(&pb).to_u64().unwrap()));
        }
        rows.push(row);
    }
    let ker = left_kernel(&rows, p);
    if ker.is_empty() {
        return None;
    }
    let gens: Vec<Vec<BigInt>> = ker.iter().map(|v| lift(v)).collect();
    Some(hnf_mod(&gens, n, &pb))
}

fn distinct_square_primes(d: &BigInt) -> Vec<u64> {
    let mut out = Vec::new();
    for (p, k) in factor(&d.abs()) {
        if k >= 2 {
            match p.to_u64() {
                Some(q) => out.push(q),
                None => out.push(u64::MAX),
            }
        }
    }
    out
}

/// Ring of integers of `Q[x]/(f)` for monic irreducible `f`.
pub fn maximal_order(f: &IntPoly) -> Result<NumberFieldData> {
    if !f.is_monic() || f.deg() == 0 {
        return Err(Error::Precondition("defining polynomial must be monic of positive degree".into()));
    }
    if !is_irreducible_z(f) {
        return Err(Error::Precondition(format!("{f} is reducible")));
    }
    let n = f.deg();
    let dpoly = f.discriminant()?;
    let mut b: IMat = (0..n).map(|i| (0..n).map(|j| BigInt::from(i32::from(i == j))).collect()).collect();
    let mut d = BigInt::one();
    for p in distinct_square_primes(&dpoly) {
        if p == u64::MAX {
            return Err(Error::Unsupported("discriminant has a huge square factor".into()));
        }
        loop {
            let (mult, _) = mult_table(f, &b, &d)?;
            let Some(u) = enlarge(&mult, p) else { break };
            let mut nb: IMat = vec![vec![BigInt::zero(); n]; n];
            for i in 0..n {
                for k in 0..n {
                    if u[i][k].is_zero() {
                        continue;
                    }
                    for j in 0..n {
                        nb[i][j] += &u[i][k] * &b[k][j];
                    }
                }
            }
            let nd = &d * BigInt::from(p);
            let h = hnf_lower(&nb, n);
            let mut g = nd.clone();
            for r in &h {
                for x in r {
                    g = g.gcd(x);
                }
            }
            b = h.into_iter().map(|r| r.into_iter().map(|x| x / &g).collect()).collect();
            d = nd / g;
        }
    }
    from_basis(f, b, d)
}

fn from_basis(f: &IntPoly, b: IMat, d: BigInt) -> Result<NumberFieldData> {
    let n = f.deg();
    let (mult, pow_to_o) = mult_table(f, &b, &d)?;
    let diag: BigInt = (0..n).map(|i| b[i][i].clone()).product();
    let dn = num_traits::pow(d.clone(), n);
    let (index, r) = dn.div_rem(&diag.abs());
    if !r.is_zero() {
        return Err(Error::Inconsistent("non-integral index".into()));
    }
    let dpoly = f.discriminant()?;
    let disc = &dpoly / (&index * &index);
    let sig = signature(f)?;
    let mult_i64 = small_table(&mult);
    let roots = complex_roots(f);
    let mut reals: Vec<f64> = Vec::new();
    let mut cx: Vec<Complex64> = Vec::new();
    {
        let mut z = roots.clone();
        z.sort_by(|a, c| a.im.abs().partial_cmp(&c.im.abs()).unwrap());
        reals.extend(z[..sig.0].iter().map(|w| w.re));
        reals.sort_by(|a, c| a.partial_cmp(c).unwrap());
        cx.extend(z[sig.0..].iter().filter(|w| w.im > 0.0));
        cx.sort_by(|a, c| a.re.partial_cmp(&c.re).unwrap());
    }
    let df = d.to_f64().unwrap();
    let eval_r = |row: &[BigInt], x: f64| row.iter().rev().fold(0.0, |acc, c| acc * x + c.to_f64().unwrap()) / df;
    let eval_c = |row: &[BigInt], z: Complex64| {
        row.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c.to_f64().unwrap()) / df
    };
    let real_emb = reals.iter().map(|&x| b.iter().map(|r| eval_r(r, x)).collect()).collect();
    let cx_emb = cx.iter().map(|&z| b.iter().map(|r| eval_c(r, z)).collect()).collect();
    let real_intervals = isolate_real_roots(f);
    Ok(NumberFieldData {
        poly: f.clone(),
        basis: b,
        basis_den: d,
        disc,
        index,
        signature: sig,
        t: Arc::new(Tables { mult, mult_i64, pow_to_o, real_emb, cx_emb, real_intervals }),
    })
}

fn small_table(mult: &[Vec<Vec<BigInt>>]) -> Option<Vec<Vec<Vec<i64>>>> {
    let lim = BigInt::from(1i64 << 40);
    let mut out = Vec::new();
    for row in mult {
        let mut r2 = Vec::new();
        for c in row {
            let mut c2 = Vec::new();
            for x in c {
                if x.abs() > lim {
                    return None;
                }
                c2.push(x.to_i64().unwrap());
            }
            r2.push(c2);
        }
        out.push(r2);
    }
    Some(out)
}

/// Element of the field: `num / den` with `num` in integral-basis coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldElt {
    pub num: Vec<BigInt>,
    pub den: BigInt,
}

impl FieldElt {
    pub fn normalize(mut self) -> Self {
        let mut g = self.den.clone();
        for x in &self.num {
            g = g.gcd(x);
        }
        if self.den.is_negative() {
            g = -g;
        }
        if !g.is_one() && !g.is_zero() {
            self.num.iter_mut().for_each(|x| *x = &*x / &g);
            self.den = &self.den / &g;
        }
        self
    }

    pub fn integral(a: Vec<BigInt>) -> Self {
        FieldElt { num: a, den: BigInt::one() }
    }
}

impl NumberFieldData {
    pub fn degree(&self) -> usize {
        self.poly.deg()
    }

    pub fn is_totally_real(&self) -> bool {
        self.signature.1 == 0
    }

    pub fn unit_rank(&self) -> usize {
        self.signature.0 + self.signature.1 - 1
    }

    pub fn one(&self) -> Vec<BigInt> {
        self.from_int(&BigInt::one())
    }

    pub fn from_int(&self, k: &BigInt) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); self.degree()];
        v[0] = k.clone();
        v
    }

    pub fn basis_element(&self, i: usize) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); self.degree()];
        v[i] = BigInt::one();
        v
    }

    pub fn mod_table(&self, m: u64) -> ModTable {
        mod_table_of(&self.t.mult, m)
    }

    pub fn add(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn sub(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    pub fn mul(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let n = self.degree();
        let mut out = vec![BigInt::zero(); n];
        for i in 0..n {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if b[j].is_zero() {
                    continue;
                }
                let c = &a[i] * &b[j];
                for (o, m) in out.iter_mut().zip(&self.t.mult[i][j]) {
                    if !m.is_zero() {
                        *o += &c * m;
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, a: &[BigInt], mut e: u64) -> Vec<BigInt> {
        let mut r = self.one();
        let mut b = a.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(&r, &b);
            }
            e >>= 1;
            if e > 0 {
                b = self.mul(&b, &b);
            }
        }
        r
    }

    /// Rows are the coordinates of `a * w_i`.
    pub fn mult_matrix(&self, a: &[BigInt]) -> IMat {
        (0..self.degree()).map(|i| self.mul(a, &self.basis_element(i))).collect()
    }

    fn mult_matrix_i64(&self, a: &[i64]) -> Option<Vec<Vec<i64>>> {
        let t = self.t.mult_i64.as_ref()?;
        let n = self.degree();
        let mut m = vec![vec![0i64; n]; n];
        for i in 0..n {
            let mut acc = vec![0i128; n];
            for (j, &aj) in a.iter().enumerate() {
                if aj == 0 {
                    continue;
                }
                for k in 0..n {
                    acc[k] += aj as i128 * t[i][j][k] as i128;
                }
            }
            for k in 0..n {
                m[i][k] = i64::try_from(acc[k]).ok()?;
            }
        }
        Some(m)
    }

    pub fn norm(&self, a: &[BigInt]) -> BigInt {
        if let Some(small) = a.iter().map(|x| x.to_i64()).collect::<Option<Vec<i64>>>() {
            if let Some(m) = self.mult_matrix_i64(&small) {
                if let Some(d) = det_i128(&m) {
                    return BigInt::from(d);
                }
            }
        }
        det_bareiss(self.mult_matrix(a))
    }

    pub fn trace(&self, a: &[BigInt]) -> BigInt {
        let m = self.mult_matrix(a);
        (0..self.degree()).map(|i| m[i][i].clone()).sum()
    }

    /// Power-basis polynomial representing `a`.
    pub fn to_power_basis(&self, a: &[BigInt]) -> QPoly {
        let n = self.degree();
        let mut c = vec![BigInt::zero(); n];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for j in 0..n {
                c[j] += ai * &self.basis[i][j];
            }
        }
        QPoly::new(c.into_iter().map(|x| BigRational::new(x, self.basis_den.clone())).collect())
    }

    pub fn elt_to_power_basis(&self, a: &FieldElt) -> QPoly {
        self.to_power_basis(&a.num).scale(&BigRational::new(BigInt::one(), a.den.clone()))
    }

    /// Element of the field given by a rational polynomial in the generator.
    pub fn from_power_basis(&self, q: &QPoly) -> FieldElt {
        let q = q.rem(&self.poly.to_qpoly());
        let n = self.degree();
        let mut c = vec![BigRational::zero(); n];
        for (j, qj) in q.coeffs().iter().enumerate() {
            if qj.is_zero() {
                continue;
            }
            for k in 0..n {
                c[k] += qj * &self.t.pow_to_o[j][k];
            }
        }
        let mut den = BigInt::one();
        for x in &c {
            den = den.lcm(x.denom());
        }
        FieldElt { num: c.iter().map(|x| (x * rat(den.clone())).to_integer()).collect(), den }.normalize()
    }

    /// Integral element given by an integer polynomial in the generator.
    pub fn from_int_poly(&self, p: &IntPoly) -> Vec<BigInt> {
        let e = self.from_power_basis(&p.to_qpoly());
        debug_assert!(e.den.is_one());
        e.num
    }

    pub fn mul_elt(&self, a: &FieldElt, b: &FieldElt) -> FieldElt {
        FieldElt { num: self.mul(&a.num, &b.num), den: &a.den * &b.den }.normalize()
    }

    pub fn inverse(&self, a: &FieldElt) -> Option<FieldElt> {
        let m: Vec<Vec<BigRational>> =
            self.mult_matrix(&a.num).into_iter().map(|r| r.into_iter().map(rat).collect()).collect();
        let inv = rat_inverse(&m)?;
        let row = &inv[0];
        let mut den = BigInt::one();
        for x in row {
            den = den.lcm(x.denom());
        }
        let num = row.iter().map(|x| (x * rat(den.clone()) * rat(a.den.clone())).to_integer()).collect();
        Some(FieldElt { num, den }.normalize())
    }

    /// Characteristic polynomial of multiplication by `a`.
    pub fn char_poly(&self, a: &FieldElt) -> QPoly {
        let n = self.degree();
        let mut p_k = Vec::with_capacity(n + 1);
        let mut x = FieldElt::integral(self.one());
        p_k.push(rat(BigInt::from(n)));
        for _ in 0..n {
            x = self.mul_elt(&x, a);
            p_k.push(BigRational::new(self.trace(&x.num), x.den.clone()));
        }
        let mut e = vec![BigRational::one()];
        for k in 1..=n {
            let mut s = BigRational::zero();
            for i in 1..=k {
                let term = &e[k - i] * &p_k[i];
                if i % 2 == 1 {
                    s += term;
                } else {
                    s -= term;
                }
            }
            e.push(s / rat(BigInt::from(k)));
        }
        let mut c = vec![BigRational::zero(); n + 1];
        for k in 0..=n {
            let v = e[k].clone();
            c[n - k] = if k % 2 == 0 { v } else { -v };
        }
        QPoly::new(c)
    }

    /// Approximate real embeddings of `a`.
    pub fn real_embeddings(&self, a: &[BigInt]) -> Vec<f64> {
        self.t.real_emb.iter().map(|row| row.iter().zip(a).map(|(w, x)| w * x.to_f64().unwrap()).sum()).collect()
    }

    pub fn complex_embeddings(&self, a: &[BigInt]) -> Vec<Complex64> {
        self.t.cx_emb.iter().map(|row| row.iter().zip(a).map(|(w, x)| w * x.to_f64().unwrap()).sum()).collect()
    }

    /// `(log|sigma_k(a)|)` over real places, then `2 log|sigma(a)|` over complex places.
    pub fn log_embedding(&self, a: &[BigInt]) -> Vec<f64> {
        let mut v: Vec<f64> = self.real_embeddings(a).iter().map(|x| x.abs().ln()).collect();
        v.extend(self.complex_embeddings(a).iter().map(|z| 2.0 * z.norm().ln()));
        v
    }

    /// Exact signs of `a` at the real places.
    pub fn real_signs(&self, a: &[BigInt]) -> Vec<i32> {
        let approx = self.real_embeddings(a);
        let scale: Vec<f64> = self
            .t
            .real_emb
            .iter()
            .map(|row| row.iter().zip(a).map(|(w, x)| (w * x.to_f64().unwrap()).abs()).sum::<f64>())
            .collect();
        approx
            .iter()
            .zip(&scale)
            .enumerate()
            .map(|(k, (&v, &s))| {
                if v.is_finite() && v.abs() > 1e-7 * s.max(1e-300) {
                    if v > 0.0 {
                        1
                    } else {
                        -1
                    }
                } else {
                    sign_at_root(&self.poly, &self.t.real_intervals[k], &self.to_power_basis(a))
                }
            })
            .collect()
    }

    /// T2 embedding vector (real coordinates) of `a`.
    pub fn t2_vector(&self, a: &[BigInt]) -> Vec<f64> {
        let mut v = self.real_embeddings(a);
        for z in self.complex_embeddings(a) {
            v.push(std::f64::consts::SQRT_2 * z.re);
            v.push(std::f64::consts::SQRT_2 * z.im);
        }
        v
    }

    /// Minkowski bound `(4/pi)^r2 n!/n^n sqrt|d|`.
    pub fn minkowski_bound(&self) -> f64 {
        let n = self.degree() as f64;
        let r2 = self.signature.1 as i32;
        let mut fact = 1.0;
        for k in 1..=self.degree() {
            fact *= k as f64;
        }
        (4.0 / std::f64::consts::PI).powi(r2) * fact / n.powf(n) * self.disc.to_f64().unwrap().abs().sqrt()
    }

    /// Numerator coordinates of the element `x^j` (power of the generator) in the integral basis.
    pub fn generator(&self) -> Vec<BigInt> {
        self.from_int_poly(&IntPoly::x())
    }

    /// Whether `a` is an integer multiple of `m` coordinate-wise.
    pub fn divisible(a: &[BigInt], m: &BigInt) -> bool {
        a.iter().all(|x| x.is_multiple_of(m))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_orders() {
        let k = maximal_order(&IntPoly::from_i64(&[-5, 0, 1])).unwrap();
        assert_eq!(k.disc, BigInt::from(5));
        assert_eq!(k.basis_den, BigInt::from(2));
        assert_eq!(k.basis[1], vec![BigInt::from(1), BigInt::from(1)]);
        let k = maximal_order(&IntPoly::from_i64(&[3, 0, 1])).unwrap();
        assert_eq!(k.disc, BigInt::from(-3));
        let k = maximal_order(&IntPoly::from_i64(&[-1, -1, -2, 0, 1, 1])).unwrap();
        assert_eq!(k.index, BigInt::one());
        assert_eq!(k.disc, BigInt::from(4432));
    }

    #[test]
    fn index_of_non_monogenic_cubic() {
        // x^3 - x^2 - 2x - 8 (Dedekind): index 2
        let k = maximal_order(&IntPoly::from_i64(&[-8, -2, -1, 1])).unwrap();
        assert_eq!(k.index, BigInt::from(2));
        assert_eq!(k.disc, BigInt::from(-503));
    }

    #[test]
    fn arithmetic() {
        let k = maximal_order(&IntPoly::from_i64(&[-2, 0, 1])).unwrap();
        let a = vec![BigInt::from(1), BigInt::from(1)];
        assert_eq!(k.norm(&a), BigInt::from(-1));
        let inv = k.inverse(&FieldElt::integral(a.clone())).unwrap();
        assert_eq!(inv.num, vec![BigInt::from(-1), BigInt::from(1)]);
        let cp = k.char_poly(&FieldElt::integral(a));
        assert_eq!(cp.to_int().unwrap(), IntPoly::from_i64(&[-1, -2, 1]));
        assert_eq!(k.real_signs(&[BigInt::from(1), BigInt::from(1)]), vec![-1, 1]);
    }
}
