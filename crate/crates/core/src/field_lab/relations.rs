//! S-unit relation search over a factor base of small prime ideals, with an F2 certificate
//! that the collected S-units span `U_S / U_S^2`.

use std::collections::{BTreeMap, HashSet};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::ideal::{primes_above, PrimeIdeal};
use super::order::NumberFieldData;
use crate::exact_core::lll::lll_transform;
use crate::exact_core::ntheory::{invmod, legendre, mulmod, primes_up_to};
use crate::{Error, Result};

/// Factor-base policy.
#[derive(Clone, Debug, Serialize)]
pub struct SearchConfig {
    /// Use the GRH bound `grh_constant * log(|d|)^2` when it is below the Minkowski bound.
    pub grh: bool,
    pub grh_constant: f64,
    pub seed: u64,
    #[serde(skip)]
    pub timeout: Option<Duration>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { grh: true, grh_constant: 12.0, seed: 0x5eed, timeout: None }
    }
}

/// Bound actually used and whether the result depends on GRH.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct BoundInfo {
    pub minkowski: f64,
    pub grh: f64,
    pub used: u64,
    pub grh_conditional: bool,
}

pub fn factor_base_bound(k: &NumberFieldData, cfg: &SearchConfig) -> BoundInfo {
    let mk = k.minkowski_bound();
    let ld = k.disc.to_f64().unwrap().abs().ln();
    let grh = cfg.grh_constant * ld * ld;
    let (used, cond) = if cfg.grh && grh < mk { (grh, true) } else { (mk, false) };
    BoundInfo { minkowski: mk, grh, used: (used.floor() as u64).max(2), grh_conditional: cond }
}

/// An S-unit with its valuation vector (sparse, indices into the factor base).
#[derive(Clone, Debug)]
pub struct Relation {
    pub elt: Vec<BigInt>,
    pub vals: Vec<(usize, u32)>,
}

/// Quadratic character at a degree-one prime `(l, x - c)` outside S.
#[derive(Clone, Debug)]
struct AuxChar {
    l: u64,
    /// `w_i(c) mod l`
    wvals: Vec<u64>,
}

impl AuxChar {
    fn eval(&self, a: &[BigInt]) -> u8 {
        let lb = BigInt::from(self.l);
        let mut s = 0u64;
        for (x, w) in a.iter().zip(&self.wvals) {
            let r = x.mod_floor(&lb).to_u64().unwrap();
            s = (s + mulmod(r, *w, self.l)) % self.l;
        }
        match legendre(s, self.l) {
            -1 => 1,
            1 => 0,
            _ => panic!("auxiliary prime divides an S-unit"),
        }
    }
}

/// Incremental F2 echelon basis over bit vectors.
#[derive(Clone, Debug, Default)]
struct Echelon {
    rows: Vec<(Vec<u64>, usize)>,
}

impl Echelon {
    fn lead(v: &[u64]) -> Option<usize> {
        v.iter().enumerate().find(|(_, w)| **w != 0).map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    fn reduce(&self, mut v: Vec<u64>) -> Vec<u64> {
        for (r, l) in &self.rows {
            if (v[l / 64] >> (l % 64)) & 1 == 1 {
                for (a, b) in v.iter_mut().zip(r) {
                    *a ^= b;
                }
            }
        }
        v
    }

    /// Insert; returns true when `v` is independent of the current rows.
    fn insert(&mut self, v: Vec<u64>) -> bool {
        let v = self.reduce(v);
        match Self::lead(&v) {
            None => false,
            Some(l) => {
                for (r, _) in self.rows.iter_mut() {
                    if (r[l / 64] >> (l % 64)) & 1 == 1 {
                        for (a, b) in r.iter_mut().zip(&v) {
                            *a ^= b;
                        }
                    }
                }
                self.rows.push((v, l));
                true
            }
        }
    }
}

/// The factor base `S`: all primes of norm at most the bound, and all primes above 2.
#[derive(Clone, Debug)]
pub struct FactorBase {
    pub primes: Vec<PrimeIdeal>,
    /// For each rational prime below the bound: every prime above it with its index in `primes`.
    pub above: BTreeMap<u64, Vec<(PrimeIdeal, Option<usize>)>>,
    pub bound: BoundInfo,
}

impl FactorBase {
    pub fn new(k: &NumberFieldData, bound: BoundInfo) -> Self {
        let mut primes = Vec::new();
        let mut above = BTreeMap::new();
        for q in primes_up_to(bound.used.max(2)) {
            let mut list = Vec::new();
            for pr in primes_above(k, q) {
                let inside = pr.norm() <= bound.used as u128 || q == 2;
                let idx = if inside {
                    primes.push(pr.clone());
                    Some(primes.len() - 1)
                } else {
                    None
                };
                list.push((pr, idx));
            }
            above.insert(q, list);
        }
        FactorBase { primes, above, bound }
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    /// Valuations of `a` if it is an S-unit.
    pub fn factor(&self, k: &NumberFieldData, a: &[BigInt], norm: &BigInt) -> Option<Vec<(usize, u32)>> {
        if norm.is_zero() {
            return None;
        }
        let mut rest = norm.abs();
        let mut qs = Vec::new();
        if let Some(mut r) = rest.to_u128() {
            for &q in self.above.keys() {
                let q128 = q as u128;
                if r % q128 == 0 {
                    qs.push(q);
                    while r % q128 == 0 {
                        r /= q128;
                    }
                }
                if r == 1 {
                    break;
                }
            }
            rest = BigInt::from(r);
        } else {
            for &q in self.above.keys() {
                let qb = BigInt::from(q);
                if rest.is_multiple_of(&qb) {
                    qs.push(q);
                    while rest.is_multiple_of(&qb) {
                        rest /= &qb;
                    }
                }
            }
        }
        if !rest.is_one() {
            return None;
        }
        let mut vals = Vec::new();
        for q in qs {
            let vq = crate::exact_core::ntheory::valuation(norm, &BigInt::from(q));
            let mut acc = 0;
            let list = &self.above[&q];
            for (i, (pr, idx)) in list.iter().enumerate() {
                if acc == vq {
                    break;
                }
                let v = if i + 1 == list.len() && pr.f > 0 {
                    let left = vq - acc;
                    if !left.is_multiple_of(pr.f) {
                        return None;
                    }
                    left / pr.f
                } else {
                    pr.valuation(k, a)
                };
                if v > 0 {
                    vals.push(((*idx)?, v));
                    acc += v * pr.f;
                }
            }
            if acc != vq {
                return None;
            }
        }
        vals.sort();
        Some(vals)
    }
}

/// Collected S-units and the F2 certificate.
#[derive(Clone, Debug)]
pub struct SUnitData {
    pub fb: FactorBase,
    pub rels: Vec<Relation>,
    /// Indices of relations whose classes form a basis of `U_S / U_S^2`.
    pub sel_basis: Vec<usize>,
    pub candidates_tried: u64,
}

/// Relation collector: candidates are short vectors of LLL-reduced ideal lattices.
pub struct RelationSearch<'a> {
    k: &'a NumberFieldData,
    pub fb: FactorBase,
    pub rels: Vec<Relation>,
    aux: Vec<AuxChar>,
    ech: Echelon,
    pub sel_basis: Vec<usize>,
    lattices: Vec<Vec<Vec<BigInt>>>,
    seen: HashSet<Vec<BigInt>>,
    rng: ChaCha8Rng,
    pub tried: u64,
    /// Consecutive candidates already seen; widens the coefficient range.
    stale: u64,
    start: Instant,
    timeout: Option<Duration>,
    turn: usize,
}

fn reduced_basis(k: &NumberFieldData, rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let emb: Vec<Vec<f64>> = rows.iter().map(|r| k.t2_vector(r)).collect();
    let t = lll_transform(&emb, 0.99);
    t.iter()
        .map(|c| {
            let mut v = vec![BigInt::zero(); rows.len()];
            for (ci, r) in c.iter().zip(rows) {
                if *ci != 0 {
                    for (x, y) in v.iter_mut().zip(r) {
                        *x += y * *ci;
                    }
                }
            }
            v
        })
        .collect()
}

impl<'a> RelationSearch<'a> {
    pub fn new(k: &'a NumberFieldData, cfg: &SearchConfig) -> Self {
        let bound = factor_base_bound(k, cfg);
        let fb = FactorBase::new(k, bound);
        let mut s = RelationSearch {
            k,
            aux: Vec::new(),
            ech: Echelon::default(),
            sel_basis: Vec::new(),
            rels: Vec::new(),
            lattices: Vec::new(),
            seen: HashSet::new(),
            rng: ChaCha8Rng::seed_from_u64(cfg.seed),
            tried: 0,
            stale: 0,
            start: Instant::now(),
            timeout: cfg.timeout,
            turn: 0,
            fb,
        };
        s.aux = s.aux_chars(k.signature.1 + 40);
        let n = k.degree();
        let o: Vec<Vec<BigInt>> = (0..n).map(|i| k.basis_element(i)).collect();
        s.lattices.push(reduced_basis(k, &o));
        for pr in &s.fb.primes {
            s.lattices.push(reduced_basis(k, &pr.hnf));
        }
        s.add(k.from_int(&BigInt::from(-1)));
        let qs: Vec<u64> = s.fb.above.keys().copied().collect();
        for q in qs {
            s.add(k.from_int(&BigInt::from(q)));
        }
        s
    }

    /// Target F2 dimension `|S| + r1 + r2`.
    pub fn selmer_dim(&self) -> usize {
        self.fb.len() + self.k.signature.0 + self.k.signature.1
    }

    pub fn certified(&self) -> bool {
        self.sel_basis.len() == self.selmer_dim()
    }

    fn aux_chars(&self, count: usize) -> Vec<AuxChar> {
        let k = self.k;
        let mut out = Vec::new();
        let mut l = self.fb.bound.used.max(50) + 1;
        while out.len() < count {
            l += 1;
            if !crate::exact_core::ntheory::is_prime_u64(l) || k.index.is_multiple_of(&BigInt::from(l)) {
                continue;
            }
            let fp = k.poly.mod_p(l);
            let dinv = invmod(k.basis_den.mod_floor(&BigInt::from(l)).to_u64().unwrap(), l);
            for c in fp.roots() {
                if out.len() >= count {
                    break;
                }
                let wvals = k
                    .basis
                    .iter()
                    .map(|row| {
                        let mut s = 0u64;
                        for coef in row.iter().rev() {
                            let cm = coef.mod_floor(&BigInt::from(l)).to_u64().unwrap();
                            s = (mulmod(s, c, l) + cm) % l;
                        }
                        mulmod(s, dinv, l)
                    })
                    .collect();
                out.push(AuxChar { l, wvals });
            }
        }
        out
    }

    fn char_vector(&self, r: &Relation) -> Vec<u64> {
        let s = self.fb.len();
        let r1 = self.k.signature.0;
        let total = s + r1 + self.aux.len();
        let mut v = vec![0u64; total.div_ceil(64)];
        let mut set = |i: usize| v[i / 64] |= 1u64 << (i % 64);
        for &(i, e) in &r.vals {
            if e % 2 == 1 {
                set(i);
            }
        }
        for (j, sg) in self.k.real_signs(&r.elt).iter().enumerate() {
            if *sg < 0 {
                set(s + j);
            }
        }
        for (j, ch) in self.aux.iter().enumerate() {
            if ch.eval(&r.elt) == 1 {
                set(s + r1 + j);
            }
        }
        v
    }

    /// Try to add an element; returns true if it is an S-unit.
    pub fn add(&mut self, a: Vec<BigInt>) -> bool {
        if a.iter().all(|x| x.is_zero()) {
            return false;
        }
        let key = if a.iter().find(|x| !x.is_zero()).unwrap().is_negative() {
            a.iter().map(|x| -x).collect()
        } else {
            a.clone()
        };
        if !self.seen.insert(key) {
            self.stale += 1;
            return false;
        }
        self.stale = 0;
        let nm = self.k.norm(&a);
        let Some(vals) = self.fb.factor(self.k, &a, &nm) else { return false };
        let rel = Relation { elt: a, vals };
        let cv = self.char_vector(&rel);
        self.rels.push(rel);
        if self.ech.insert(cv) {
            self.sel_basis.push(self.rels.len() - 1);
        }
        true
    }

    pub fn timed_out(&self) -> bool {
        self.timeout.is_some_and(|t| self.start.elapsed() > t)
    }

    /// Test `count` random short candidates.
    pub fn step(&mut self, count: usize) {
        let n = self.k.degree();
        for _ in 0..count {
            self.turn = (self.turn + 1) % self.lattices.len();
            let basis = &self.lattices[self.turn];
            let width = n.min(8);
            let terms = self.rng.gen_range(1..=4.min(width));
            let radius = 1 + (self.stale / 200) as i64;
            let mut a = vec![BigInt::zero(); n];
            for _ in 0..terms {
                let i = self.rng.gen_range(0..width);
                let c: i64 = if radius > 1 {
                    self.rng.gen_range(1..=2 * radius) * if self.rng.gen() { 1 } else { -1 }
                } else {
                    match self.rng.gen_range(0..6) {
                        0 => 2,
                        1 => -2,
                        2 | 3 => 1,
                        _ => -1,
                    }
                };
                for (x, y) in a.iter_mut().zip(&basis[i]) {
                    *x += y * c;
                }
            }
            self.tried += 1;
            self.add(a);
        }
    }

    /// Search until the F2 certificate is complete.
    pub fn run_selmer(&mut self) -> Result<()> {
        while !self.certified() {
            if self.timed_out() {
                return Err(Error::Incomplete(format!(
                    "S-unit search timed out with rank {} of {}",
                    self.sel_basis.len(),
                    self.selmer_dim()
                )));
            }
            self.step(500);
        }
        Ok(())
    }

    pub fn finish(self) -> SUnitData {
        SUnitData { fb: self.fb, rels: self.rels, sel_basis: self.sel_basis, candidates_tried: self.tried }
    }
}

/// Collect S-units spanning `U_S / U_S^2` for the factor base of `cfg`.
pub fn collect_sunits(k: &NumberFieldData, cfg: &SearchConfig) -> Result<SUnitData> {
    let mut s = RelationSearch::new(k, cfg);
    s.run_selmer()?;
    Ok(s.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_core::IntPoly;
    use crate::field_lab::maximal_order;

    #[test]
    fn selmer_certificate_small_fields() {
        for c in [&[5i64, 0, 1][..], &[-2, 0, 1], &[-1, -1, -2, 0, 1, 1], &[-2, 0, 0, 1]] {
            let k = maximal_order(&IntPoly::from_i64(c)).unwrap();
            let d = collect_sunits(&k, &SearchConfig::default()).unwrap();
            assert_eq!(d.sel_basis.len(), d.fb.len() + k.signature.0 + k.signature.1);
            for r in &d.rels {
                let nm = k.norm(&r.elt).abs();
                let prod: BigInt = r
                    .vals
                    .iter()
                    .map(|&(i, v)| num_traits::pow(BigInt::from(d.fb.primes[i].norm()), v as usize))
                    .product();
                assert_eq!(nm, prod);
            }
        }
    }
}
