//! Square classes at a prime above 2.
//!
//! For a prime `P | 2` with ramification `e` and residue degree `f`, the group
//! `U / U^2 U^(2e)` has F2-dimension `e f`. Its coordinates are read off level by level:
//! at odd levels `j < 2e` the class of `u - 1` in `P^j / P^(j+1)` is recorded and divided out,
//! at even levels it is removed by a square.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::ideal::{ideal_mul, PrimeIdeal};
use super::order::{lattice_coords, ModTable, NumberFieldData};
use crate::exact_core::intmat::IMat;
use crate::exact_core::linalg_fp;

struct Level {
    hnf: IMat,
    red: Vec<Vec<u64>>,
    pivots: Vec<usize>,
    free: Vec<usize>,
}

/// Local square-class coordinates at one prime above 2.
pub struct LocalSquareMap {
    pub e: u32,
    pub f: u32,
    levels: Vec<Level>,
    /// `sq[j]` (even `j`): rows are the level-`j` classes of squares of level-`j/2` representatives.
    sq: Vec<Vec<Vec<u64>>>,
    mt4: ModTable,
    n: usize,
}

impl LocalSquareMap {
    pub fn new(k: &NumberFieldData, pr: &PrimeIdeal) -> Self {
        assert_eq!(pr.p, 2, "local square classes are implemented above 2");
        let n = k.degree();
        let e = pr.e;
        let top = 2 * e as usize;
        let mut lattices: Vec<IMat> = vec![(0..n).map(|i| k.basis_element(i)).collect(), pr.hnf.clone()];
        for j in 2..=top {
            let d = BigInt::from(1u64 << (j as u32).div_ceil(e));
            let next = ideal_mul(k, &lattices[j - 1], &pr.hnf, &d);
            lattices.push(next);
        }
        let mut levels = Vec::new();
        for j in 0..top {
            let mut red: Vec<Vec<u64>> = lattices[j + 1]
                .iter()
                .map(|b| {
                    lattice_coords(&lattices[j], b)
                        .expect("P^(j+1) inside P^j")
                        .iter()
                        .map(|x| x.mod_floor_u64(2))
                        .collect()
                })
                .collect();
            let pivots = linalg_fp::rref(&mut red, 2);
            red.truncate(pivots.len());
            let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
            assert_eq!(free.len(), pr.f as usize, "residue degree mismatch at level {j}");
            levels.push(Level { hnf: lattices[j].clone(), red, pivots, free });
        }
        levels.push(Level { hnf: lattices[top].clone(), red: vec![], pivots: vec![], free: vec![] });
        let mut map = LocalSquareMap { e, f: pr.f, levels, sq: vec![vec![]; top], mt4: k.mod_table(4), n };
        for j in (2..top).step_by(2) {
            let rows = (0..pr.f as usize)
                .map(|i| {
                    let r = map.rep(j / 2, i);
                    let r2 = k.mul(&r, &r);
                    map.level_coords(j, &r2).expect("square of P^(j/2) lies in P^j")
                })
                .collect();
            map.sq[j] = rows;
        }
        map
    }

    /// Representative in `P^j` of the `i`-th basis class of `P^j / P^(j+1)`.
    fn rep(&self, j: usize, i: usize) -> Vec<BigInt> {
        self.levels[j].hnf[self.levels[j].free[i]].clone()
    }

    /// Class of `x` in `P^j / P^(j+1)`, or `None` if `x` is not in `P^j`.
    fn level_coords(&self, j: usize, x: &[BigInt]) -> Option<Vec<u64>> {
        let lv = &self.levels[j];
        let c = lattice_coords(&lv.hnf, x)?;
        let mut v: Vec<u64> = c.iter().map(|t| t.mod_floor_u64(2)).collect();
        for (r, &pc) in lv.red.iter().zip(&lv.pivots) {
            if v[pc] == 1 {
                for (a, b) in v.iter_mut().zip(r) {
                    *a ^= b;
                }
            }
        }
        Some(lv.free.iter().map(|&c| v[c]).collect())
    }

    fn in_level(&self, j: usize, x: &[BigInt]) -> bool {
        lattice_coords(&self.levels[j].hnf, x).is_some()
    }

    fn minus_one(&self, u: &[u64]) -> Vec<BigInt> {
        u.iter().enumerate().map(|(i, &x)| BigInt::from(x) - BigInt::from(u64::from(i == 0))).collect()
    }

    /// Inverse of `1 + b` modulo `P^(2e)` for `b` in `P`.
    fn inv_one_plus(&self, b: &[u64]) -> Vec<u64> {
        let m = &self.mt4;
        let neg: Vec<u64> = b.iter().map(|&x| (4 - x) % 4).collect();
        let mut acc = m.one();
        let mut pw = m.one();
        for _ in 1..2 * self.e {
            pw = m.mul(&pw, &neg);
            acc = acc.iter().zip(&pw).map(|(a, c)| (a + c) % 4).collect();
        }
        acc
    }

    fn combine(&self, j: usize, bits: &[u64]) -> Vec<u64> {
        let mut s = vec![0u64; self.n];
        for (i, &bt) in bits.iter().enumerate() {
            if bt == 1 {
                let r = self.mt4.reduce(&self.rep(j, i));
                s = s.iter().zip(&r).map(|(a, c)| (a + c) % 4).collect();
            }
        }
        s
    }

    /// Coordinates (length `e f`, odd levels ascending) of a P-unit in `U / U^2 U^(2e)`.
    pub fn unit_coords(&self, u: &[BigInt]) -> Vec<u8> {
        let m = &self.mt4;
        let top = 2 * self.e as usize;
        let mut cur = m.pow(&m.reduce(u), (1u128 << self.f) - 1);
        let mut out = Vec::with_capacity((self.e * self.f) as usize);
        for j in 1..top {
            let x = self.minus_one(&cur);
            let c = self.level_coords(j, &x).expect("unit congruent to 1 at this level");
            if c.iter().all(|&t| t == 0) {
                if j % 2 == 1 {
                    out.extend(c.iter().map(|&t| t as u8));
                }
                continue;
            }
            if j % 2 == 1 {
                out.extend(c.iter().map(|&t| t as u8));
                for (i, &bt) in c.iter().enumerate() {
                    if bt == 1 {
                        let b = m.reduce(&self.rep(j, i));
                        cur = m.mul(&cur, &self.inv_one_plus(&b));
                    }
                }
            } else {
                let d = linalg_fp::solve_left(&self.sq[j], &c, 2).expect("squaring is bijective on levels");
                let s = self.combine(j / 2, &d);
                let inv = self.inv_one_plus(&s);
                cur = m.mul(&cur, &m.mul(&inv, &inv));
            }
        }
        debug_assert!(self.in_level(top, &self.minus_one(&cur)));
        out
    }

    /// Full local datum of a nonzero integral element: valuation parity and unit coordinates.
    pub fn element_coords(&self, k: &NumberFieldData, pr: &PrimeIdeal, a: &[BigInt]) -> (u8, Vec<u8>) {
        let (v, u) = pr.valuation_and_unit(k, a);
        ((v % 2) as u8, self.unit_coords(&u))
    }

    /// Conductor exponent of `K(sqrt(a))` at P from the local datum.
    pub fn conductor(&self, parity: u8, coords: &[u8]) -> u32 {
        if parity == 1 {
            return 2 * self.e + 1;
        }
        let f = self.f as usize;
        match coords.iter().position(|&b| b == 1) {
            None => 0,
            Some(i) => {
                let j = 2 * (i / f) as u32 + 1;
                2 * self.e - j + 1
            }
        }
    }

    /// Number of leading coordinates that must vanish for conductor at most `a` (even valuation).
    pub fn constrained_prefix(&self, a: u32) -> usize {
        let top = 2 * self.e + 1;
        if a >= top {
            return 0;
        }
        // odd levels j < 2e + 1 - a
        let bound = top - a;
        let odd_levels = (1..bound).filter(|j| j % 2 == 1).count();
        odd_levels * self.f as usize
    }
}

trait ModU64 {
    fn mod_floor_u64(&self, m: u64) -> u64;
}

impl ModU64 for BigInt {
    fn mod_floor_u64(&self, m: u64) -> u64 {
        use num_integer::Integer;
        self.mod_floor(&BigInt::from(m)).to_u64().unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_core::ntheory::valuation;
    use crate::exact_core::IntPoly;
    use crate::field_lab::{maximal_order, primes_above};
    use num_traits::Zero;
    use rand::{Rng, SeedableRng};

    fn cond_rational(u: i64) -> u32 {
        let k = maximal_order(&IntPoly::from_i64(&[-1, 1])).unwrap();
        let pr = &primes_above(&k, 2)[0];
        let map = LocalSquareMap::new(&k, pr);
        let (par, c) = map.element_coords(&k, pr, &[BigInt::from(u)]);
        map.conductor(par, &c)
    }

    #[test]
    fn rational_conductors() {
        assert_eq!(cond_rational(-1), 2);
        assert_eq!(cond_rational(3), 2);
        assert_eq!(cond_rational(5), 0);
        assert_eq!(cond_rational(-3), 0);
        assert_eq!(cond_rational(2), 3);
        assert_eq!(cond_rational(-6), 3);
        assert_eq!(cond_rational(17 * 4), 0);
    }

    #[test]
    fn gaussian_conductor_of_i() {
        let k = maximal_order(&IntPoly::from_i64(&[1, 0, 1])).unwrap();
        let pr = &primes_above(&k, 2)[0];
        let map = LocalSquareMap::new(&k, pr);
        let (par, c) = map.element_coords(&k, pr, &k.generator());
        assert_eq!(map.conductor(par, &c), 4);
        let (par, c) = map.element_coords(&k, pr, &[BigInt::from(-1), BigInt::from(0)]);
        assert_eq!((par, c.iter().all(|&b| b == 0)), (0, true));
    }

    fn rand_elt(rng: &mut impl Rng, n: usize) -> Vec<BigInt> {
        (0..n).map(|_| BigInt::from(rng.gen_range(-9i64..=9))).collect()
    }

    /// Compare the local conductor sum with the discriminant of the quartic field `K(sqrt(a))`.
    fn check_field(coeffs: &[i64], trials: usize) {
        let k = maximal_order(&IntPoly::from_i64(coeffs)).unwrap();
        let ps = primes_above(&k, 2);
        let maps: Vec<LocalSquareMap> = ps.iter().map(|p| LocalSquareMap::new(&k, p)).collect();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let v2k = valuation(&k.disc, &BigInt::from(2));
        let mut done = 0;
        while done < trials {
            let a = rand_elt(&mut rng, k.degree());
            if a.iter().all(|x| x.is_zero()) {
                continue;
            }
            // charpoly(a)(x^2) is the minimal polynomial of sqrt(a) when it is irreducible
            let cp = k.char_poly(&crate::field_lab::FieldElt::integral(a.clone())).to_int().unwrap();
            let mut qc = vec![BigInt::zero(); 2 * cp.deg() + 1];
            for (i, c) in cp.coeffs().iter().enumerate() {
                qc[2 * i] = c.clone();
            }
            let q = IntPoly::new(qc);
            if !crate::exact_core::is_irreducible_z(&q) {
                continue;
            }
            let l = maximal_order(&q).unwrap();
            let v2l = valuation(&l.disc, &BigInt::from(2));
            let mut local = 0;
            for (pr, map) in ps.iter().zip(&maps) {
                let (par, c) = map.element_coords(&k, pr, &a);
                local += pr.f * map.conductor(par, &c);
            }
            assert_eq!(v2l, 2 * v2k + local, "a = {:?} in {:?}", a, coeffs);
            done += 1;
        }
    }

    #[test]
    fn conductor_discriminant_oracle() {
        check_field(&[1, 0, 1], 25);
        check_field(&[-2, 0, 1], 25);
        check_field(&[5, 0, 1], 25);
        check_field(&[-1, -1, 1], 25);
        check_field(&[2, 0, 1], 25);
        check_field(&[-7, 0, 1], 20);
        check_field(&[-2, 0, 0, 1], 12);
        check_field(&[-8, -2, -1, 1], 12);
        check_field(&[2, 0, 0, 0, 1], 6);
        check_field(&[-1, -1, 0, 0, 1], 6);
    }

    #[test]
    fn homomorphism_on_quintic_units() {
        let k = maximal_order(&IntPoly::from_i64(&[-1, -1, -2, 0, 1, 1])).unwrap();
        let ps = primes_above(&k, 2);
        assert_eq!(ps.len(), 1);
        let pr = &ps[0];
        let map = LocalSquareMap::new(&k, pr);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..30 {
            let a = rand_elt(&mut rng, 5);
            let b = rand_elt(&mut rng, 5);
            if a.iter().all(|x| x.is_zero()) || b.iter().all(|x| x.is_zero()) {
                continue;
            }
            let (pa, ca) = map.element_coords(&k, pr, &a);
            let (pb, cb) = map.element_coords(&k, pr, &b);
            let (pab, cab) = map.element_coords(&k, pr, &k.mul(&a, &b));
            assert_eq!(pab, pa ^ pb);
            let sum: Vec<u8> = ca.iter().zip(&cb).map(|(x, y)| x ^ y).collect();
            assert_eq!(cab, sum);
            let (ps2, cs2) = map.element_coords(&k, pr, &k.mul(&a, &a));
            assert_eq!(ps2, 0);
            assert!(cs2.iter().all(|&t| t == 0));
        }
    }
}
