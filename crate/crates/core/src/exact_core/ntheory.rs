//! Elementary number theory on machine and arbitrary-precision integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn powmod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, m);
        }
        a = mulmod(a, a, m);
        e >>= 1;
    }
    r
}

/// Inverse of `a` modulo the prime `p`.
pub fn invmod(a: u64, p: u64) -> u64 {
    let a = a % p;
    assert!(a != 0, "inverse of zero mod {p}");
    powmod(a, p - 2, p)
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'outer: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Primality; deterministic below 2^64, strong probable-prime test with 24 bases above.
pub fn is_prime(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    if let Some(m) = n.to_u64() {
        return is_prime_u64(m);
    }
    if n.is_even() {
        return false;
    }
    let one = BigInt::one();
    let nm1 = n - &one;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s;
    let bases = [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89];
    'outer: for a in bases {
        let mut x = BigInt::from(a).modpow(&d, n);
        if x == one || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == nm1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

pub fn primes_up_to(n: u64) -> Vec<u64> {
    let n = n as usize;
    if n < 2 {
        return vec![];
    }
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    sieve.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i as u64).collect()
}

/// `v_p(a)` for nonzero `a`.
pub fn valuation(a: &BigInt, p: &BigInt) -> u32 {
    assert!(!a.is_zero(), "valuation of zero");
    let mut a = a.clone();
    let mut v = 0;
    loop {
        let (q, r) = a.div_rem(p);
        if !r.is_zero() {
            return v;
        }
        a = q;
        v += 1;
    }
}

pub fn valuation_u64(mut a: u64, p: u64) -> u32 {
    assert!(a != 0);
    let mut v = 0;
    while a.is_multiple_of(p) {
        a /= p;
        v += 1;
    }
    v
}

/// Legendre symbol `(a/p)` for an odd prime `p`, in {-1, 0, 1}.
pub fn legendre(a: u64, p: u64) -> i32 {
    let a = a % p;
    if a == 0 {
        return 0;
    }
    if powmod(a, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

fn pollard_brent(n: &BigInt, c: u64) -> Option<BigInt> {
    let one = BigInt::one();
    let f = |x: &BigInt| (x * x + BigInt::from(c)) % n;
    let mut y = BigInt::from(2u32);
    let mut r: u64 = 1;
    let mut q = BigInt::one();
    let mut g = BigInt::one();
    let m = 64;
    let mut x = y.clone();
    let mut ys = y.clone();
    while g == one {
        x = y.clone();
        for _ in 0..r {
            y = f(&y);
        }
        let mut k = 0;
        while k < r && g == one {
            ys = y.clone();
            for _ in 0..m.min(r - k) {
                y = f(&y);
                q = (q * (&x - &y).abs()) % n;
            }
            g = q.gcd(n);
            k += m;
        }
        r *= 2;
        if r > 1 << 26 {
            return None;
        }
    }
    if &g == n {
        loop {
            ys = f(&ys);
            g = (&x - &ys).abs().gcd(n);
            if g != one {
                break;
            }
        }
    }
    if &g == n {
        None
    } else {
        Some(g)
    }
}

fn split_composite(n: &BigInt, out: &mut Vec<BigInt>) {
    if n.is_one() {
        return;
    }
    if is_prime(n) {
        out.push(n.clone());
        return;
    }
    if let Some(r) = n.sqrt().checked_mul(&n.sqrt()).filter(|sq| sq == n).map(|_| n.sqrt()) {
        split_composite(&r, out);
        split_composite(&r, out);
        return;
    }
    for c in 1u64.. {
        if let Some(d) = pollard_brent(n, c) {
            split_composite(&d, out);
            split_composite(&(n / &d), out);
            return;
        }
    }
}

/// Prime factorization of `|n|`, sorted by prime.
pub fn factor(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut n = n.abs();
    assert!(!n.is_zero(), "factor of zero");
    let mut res: Vec<(BigInt, u32)> = Vec::new();
    for p in primes_up_to(10_000) {
        let pb = BigInt::from(p);
        if n.is_one() {
            break;
        }
        let mut e = 0;
        loop {
            let (q, r) = n.div_rem(&pb);
            if !r.is_zero() {
                break;
            }
            n = q;
            e += 1;
        }
        if e > 0 {
            res.push((pb, e));
        }
    }
    if !n.is_one() {
        let mut parts = Vec::new();
        split_composite(&n, &mut parts);
        parts.sort();
        for p in parts {
            match res.last_mut() {
                Some((q, e)) if *q == p => *e += 1,
                _ => res.push((p, 1)),
            }
        }
    }
    res
}

pub fn factor_u64(n: u64) -> Vec<(u64, u32)> {
    factor(&BigInt::from(n)).into_iter().map(|(p, e)| (p.to_u64().unwrap(), e)).collect()
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factor_small_and_large() {
        let f = factor(&BigInt::from(2869));
        assert_eq!(f, vec![(BigInt::from(19), 1), (BigInt::from(151), 1)]);
        let n = BigInt::from(1_000_003u64) * BigInt::from(998_244_353u64) * BigInt::from(1_000_003u64);
        let f = factor(&n);
        assert_eq!(f, vec![(BigInt::from(1_000_003u64), 2), (BigInt::from(998_244_353u64), 1)]);
    }

    #[test]
    fn primality() {
        assert!(is_prime_u64(9_882_329_341));
        assert!(!is_prime_u64(3_215_031_751));
        let big: BigInt = "170141183460469231731687303715884105727".parse().unwrap();
        assert!(is_prime(&big));
        assert!(!is_prime(&(&big * BigInt::from(3))));
    }
}
