//! Integer helpers shared across the crate: exact roots, squarefree parts,
//! small factorizations and deterministic primality for the modular screens.
//!
//! Everything here is exact integer arithmetic. Roots are found by binary
//! search and verified by powering back; no floating point is involved.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Floor of the n-th root of `x`, by binary search on big integers.
pub fn nth_root_floor(x: &BigUint, n: u32) -> BigUint {
    assert!(n >= 1, "root index must be positive");
    if x.is_zero() || x.is_one() || n == 1 {
        return x.clone();
    }
    let one = BigUint::one();
    let mut lo = BigUint::one();
    // 2^(ceil(bits/n)) is an upper bound: (2^k)^n >= 2^bits > x.
    let mut hi = BigUint::one() << ((x.bits() as u32 / n) + 1) as usize;
    // Invariant: lo^n <= x < hi^n.
    while &lo + &one < hi {
        let mid: BigUint = (&lo + &hi) >> 1;
        if mid.pow(n) <= *x {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Exact n-th root: `Some(r)` with `r^n == x`, or `None`.
pub fn exact_nth_root(x: &BigUint, n: u32) -> Option<BigUint> {
    let r = nth_root_floor(x, n);
    if r.pow(n) == *x {
        Some(r)
    } else {
        None
    }
}

/// Floor square root for u128, binary search.
pub fn sqrt_floor_u128(x: u128) -> u128 {
    if x < 2 {
        return x;
    }
    let mut lo: u128 = 1;
    let mut hi: u128 = 1 << (64 - x.leading_zeros() / 2).min(64);
    while lo + 1 < hi {
        let mid = lo + (hi - lo) / 2;
        match mid.checked_mul(mid) {
            Some(sq) if sq <= x => lo = mid,
            _ => hi = mid,
        }
    }
    lo
}

/// Exact square root of a u128 if it is a perfect square.
pub fn exact_sqrt_u128(x: u128) -> Option<u128> {
    let r = sqrt_floor_u128(x);
    if r * r == x {
        Some(r)
    } else {
        None
    }
}

/// Trial-division factorization, smallest primes first.
pub fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let push = |p: u64, e: u32, out: &mut Vec<(u64, u32)>| {
        if e > 0 {
            out.push((p, e));
        }
    };
    for p in [2u64, 3, 5] {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        push(p, e, &mut out);
    }
    // 30-wheel over the remaining candidates.
    let inc = [4u64, 2, 4, 2, 4, 6, 2, 6];
    let mut p = 7u64;
    let mut i = 0;
    while p * p <= n {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        push(p, e, &mut out);
        p += inc[i];
        i = (i + 1) % 8;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Writes `n = r^2 * m` with `m` squarefree; returns `(r, m)`.
pub fn squarefree_decompose_u64(n: u64) -> (u64, u64) {
    assert!(n > 0, "squarefree decomposition needs a positive integer");
    let mut r = 1u64;
    let mut m = 1u64;
    for (p, e) in factor_u64(n) {
        r *= p.pow(e / 2);
        if e % 2 == 1 {
            m *= p;
        }
    }
    (r, m)
}

/// The squarefree part of `n`.
pub fn squarefree_part_u64(n: u64) -> u64 {
    squarefree_decompose_u64(n).1
}

pub fn is_squarefree_u64(n: u64) -> bool {
    n > 0 && squarefree_part_u64(n) == n
}

pub fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Euler totient via trial division.
pub fn totient(n: u64) -> u64 {
    let mut phi = n;
    for (p, _) in factor_u64(n) {
        phi = phi / p * (p - 1);
    }
    phi
}

/// All divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut i = 1u64;
    while i * i <= n {
        if n % i == 0 {
            out.push(i);
            if i != n / i {
                out.push(n / i);
            }
        }
        i += 1;
    }
    out.sort_unstable();
    out
}

pub fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn powmod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, m);
        }
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin for u64 (the listed bases decide all 64-bit inputs).
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Strips all factors `p` from `n`; returns `(exponent, remainder)`.
pub fn strip_factor(mut n: u128, p: u128) -> (u32, u128) {
    let mut e = 0;
    while n > 1 && n % p == 0 {
        n /= p;
        e += 1;
    }
    (e, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nth_root_exactness() {
        for (x, n, want) in [
            (27u64, 3u32, Some(3u64)),
            (28, 3, None),
            (1, 5, Some(1)),
            (4096, 12, Some(2)),
        ] {
            let got = exact_nth_root(&BigUint::from(x), n).map(|r| {
                let d: u64 = r.try_into().unwrap();
                d
            });
            assert_eq!(got, want, "x={x} n={n}");
        }
    }

    #[test]
    fn nth_root_floor_bracket() {
        for x in 0u64..500 {
            for n in 1u32..6 {
                let r = nth_root_floor(&BigUint::from(x), n);
                assert!(r.pow(n) <= BigUint::from(x));
                assert!((r + BigUint::one()).pow(n) > BigUint::from(x));
            }
        }
    }

    #[test]
    fn squarefree_parts() {
        assert_eq!(squarefree_decompose_u64(12), (2, 3));
        assert_eq!(squarefree_decompose_u64(1), (1, 1));
        assert_eq!(squarefree_decompose_u64(8), (2, 2));
        assert_eq!(squarefree_decompose_u64(360), (6, 10));
        assert!(is_squarefree_u64(15));
        assert!(!is_squarefree_u64(18));
    }

    #[test]
    fn totient_small() {
        assert_eq!(totient(1), 1);
        assert_eq!(totient(12), 4);
        assert_eq!(totient(480), 128);
    }

    #[test]
    fn primality() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(1_000_000_007));
        assert!(!is_prime_u64(1_000_000_007u64 * 3));
        assert!(!is_prime_u64(1));
        // Carmichael number.
        assert!(!is_prime_u64(561));
    }

    #[test]
    fn factor_roundtrip() {
        for n in 1u64..2000 {
            let f = factor_u64(n);
            let back: u64 = f.iter().map(|(p, e)| p.pow(*e)).product();
            assert_eq!(back, n);
        }
    }
}
