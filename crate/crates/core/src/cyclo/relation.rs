//! The two-cosine rational relation A·cos x + B·cos y = C over rational
//! multiples of π, solved two independent ways:
//!
//! * a direct solver: by the classification of rational linear relations
//!   between cosines of rational angles, the branch with an irrational
//!   cosine collapses onto the single family with angle pair (π/2, π/3),
//!   whose cosines are themselves rational — so every solution already has
//!   both cosines in the Niven set {0, ±1/2} on the open interval (0, π),
//!   and a finite enumeration suffices;
//! * a brute-force oracle scanning every angle pair with bounded
//!   denominators. Candidate pairs are first refuted by evaluating the
//!   relation in F_P under ring maps Z[ζ] → F_P for several primes
//!   P ≡ 1 (mod lcm(2q₁, 2q₂)) — an exact argument: a true relation maps to
//!   0 mod every such P, so a nonzero image disproves it. The few pairs that
//!   survive every screen are then confirmed in Q(ζ_lcm) by cyclotomic
//!   arithmetic, subject to the conductor cap.

use super::angle::RationalAngle;
use super::elem::{cos_in_conductor, CycloElem};
use crate::error::{CoreError, Result};
use crate::exactnum::{rat, Rational};
use crate::intutil::{factor_u64, gcd_u64, is_prime_u64, mulmod, powmod};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use std::collections::{BTreeSet, HashMap};

/// Which slot of the relation a one-cosine family fixes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FixedSlot {
    First,
    Second,
}

/// A degenerate one-cosine solution family: one angle fixed, the partner free.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeFamily {
    pub slot: FixedSlot,
    pub angle: RationalAngle,
}

/// Solutions of A·cos x + B·cos y = C with x, y ∈ (0, π) rational multiples
/// of π: explicit pairs when both coefficients are nonzero, symbolic
/// one-cosine families when one coefficient vanishes.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SolutionSet {
    pub pairs: BTreeSet<(RationalAngle, RationalAngle)>,
    pub families: Vec<FreeFamily>,
}

/// Angle in (0, π) whose cosine equals the given rational, when one exists.
/// By Niven's theorem the only candidates are 0 → π/2, ±1/2 → π/3, 2π/3;
/// cosine values ±1 would need the excluded endpoints.
fn niven_acos(c: &Rational) -> Option<RationalAngle> {
    if c.is_zero() {
        Some(RationalAngle::new(1, 2))
    } else if *c == rat(1, 2) {
        Some(RationalAngle::new(1, 3))
    } else if *c == rat(-1, 2) {
        Some(RationalAngle::new(2, 3))
    } else {
        None
    }
}

/// All rational-angle solutions of A·cos x + B·cos y = C on (0, π)².
///
/// Errors when A = B = 0. With exactly one coefficient zero the result is a
/// one-cosine family (fixed angle, free partner). With both nonzero, the
/// irrational-cosine branch of the classification contributes nothing beyond
/// the rational branch (see module docs), so solutions are enumerated over
/// the Niven cosine values; both proportionality readings of the
/// classification therefore yield this same set, and the oracle
/// cross-validates it on every relation the pipeline uses.
pub fn solve_two_cosine_relation(a: &Rational, b: &Rational, c: &Rational) -> Result<SolutionSet> {
    if a.is_zero() && b.is_zero() {
        return Err(CoreError::Domain(
            "two-cosine relation needs a nonzero cosine coefficient".into(),
        ));
    }
    let mut out = SolutionSet::default();
    if b.is_zero() {
        if let Some(x) = niven_acos(&(c / a)) {
            out.families.push(FreeFamily {
                slot: FixedSlot::First,
                angle: x,
            });
        }
        return Ok(out);
    }
    if a.is_zero() {
        if let Some(y) = niven_acos(&(c / b)) {
            out.families.push(FreeFamily {
                slot: FixedSlot::Second,
                angle: y,
            });
        }
        return Ok(out);
    }
    let candidates = [
        (Rational::zero(), RationalAngle::new(1, 2)),
        (rat(1, 2), RationalAngle::new(1, 3)),
        (rat(-1, 2), RationalAngle::new(2, 3)),
    ];
    for (cx, x) in &candidates {
        let cy = (c - a * cx) / b;
        if let Some(y) = niven_acos(&cy) {
            out.pairs.insert((*x, y));
        }
    }
    Ok(out)
}

/// A prime with a fixed element of exact multiplicative order `order`.
struct ScreenPrime {
    p: u64,
    root: u64,
}

/// Finds `count` primes P ≡ 1 (mod order), each with an element of exact
/// order `order`, skipping primes that divide any of the given denominators.
fn find_screen_primes(order: u64, count: usize, avoid: &[BigInt]) -> Vec<ScreenPrime> {
    let order_factors: Vec<u64> = factor_u64(order).into_iter().map(|(p, _)| p).collect();
    let mut found = Vec::new();
    let mut k = 1u64;
    while found.len() < count {
        let p = k
            .checked_mul(order)
            .and_then(|v| v.checked_add(1))
            .expect("screen prime search overflow");
        k += 1;
        if !is_prime_u64(p) {
            continue;
        }
        if avoid.iter().any(|d| (d % BigInt::from(p)).is_zero()) {
            continue;
        }
        if let Some(root) = element_of_order(p, order, &order_factors) {
            found.push(ScreenPrime { p, root });
        }
    }
    found
}

/// An element of exact order `order` in F_p*, when `order | p − 1`.
fn element_of_order(p: u64, order: u64, order_factors: &[u64]) -> Option<u64> {
    let cofactor = (p - 1) / order;
    for h in 2..p {
        let cand = powmod(h, cofactor, p);
        if cand == 1 {
            continue;
        }
        if order_factors
            .iter()
            .all(|&r| powmod(cand, order / r, p) != 1)
        {
            return Some(cand);
        }
    }
    None
}

/// A rational reduced into F_p. The prime is chosen to avoid the denominator.
fn rational_mod(x: &Rational, p: u64) -> u64 {
    let pm = BigInt::from(p);
    let num = x.numer().mod_floor(&pm);
    let den = x.denom().mod_floor(&pm);
    let num: u64 = num.try_into().unwrap();
    let den: u64 = den.try_into().unwrap();
    mulmod(num, powmod(den, p - 2, p), p)
}

/// Exact confirmation of A·cos(πp₁/q₁) + B·cos(πp₂/q₂) = C in Q(ζ_L),
/// L = lcm(2q₁, 2q₂), subject to the conductor cap.
fn confirm_exact(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    x: (u64, u64),
    y: (u64, u64),
    cap: u64,
) -> Result<bool> {
    let l = (2 * x.1).lcm(&(2 * y.1));
    if l > cap {
        return Err(CoreError::ConductorCap { needed: l, cap });
    }
    let cx = cos_in_conductor(l, x.0, x.1).scale(a);
    let cy = cos_in_conductor(l, y.0, y.1).scale(b);
    let lhs = cx.add(&cy).sub(&CycloElem::from_rational(l, c.clone()));
    Ok(lhs.is_zero())
}

const SCREEN_PRIME_COUNT: usize = 3;

/// Brute-force oracle with the default conductor cap 4·q_max.
pub fn oracle_two_cosine(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    q_max: u64,
) -> Result<BTreeSet<(RationalAngle, RationalAngle)>> {
    oracle_two_cosine_with_cap(a, b, c, q_max, 4 * q_max)
}

/// All (x, y) ∈ (0, π)² with denominators ≤ q_max solving the relation.
/// See the module docs for the screening scheme; every returned pair has
/// been confirmed by exact cyclotomic arithmetic.
pub fn oracle_two_cosine_with_cap(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    q_max: u64,
    cap: u64,
) -> Result<BTreeSet<(RationalAngle, RationalAngle)>> {
    if q_max < 2 {
        return Err(CoreError::Domain("oracle needs q_max >= 2".into()));
    }
    let denominators: Vec<BigInt> = [a, b, c].iter().map(|r| r.denom().clone()).collect();
    let angles: Vec<(u64, Vec<u64>)> = (2..=q_max)
        .map(|q| (q, (1..q).filter(|&p| gcd_u64(p, q) == 1).collect()))
        .collect();
    let mut prime_cache: HashMap<u64, Vec<ScreenPrime>> = HashMap::new();
    let mut out = BTreeSet::new();

    for (q1, ps1) in &angles {
        for (q2, ps2) in &angles {
            let l = (2 * q1).lcm(&(2 * q2));
            let primes = prime_cache
                .entry(l)
                .or_insert_with(|| find_screen_primes(l, SCREEN_PRIME_COUNT, &denominators));
            // Per prime: A·cos(πp₁/q₁) and B·cos(πp₂/q₂) − C tabulated in F_P.
            let tables: Vec<(u64, Vec<u64>, Vec<u64>)> = primes
                .iter()
                .map(|sp| {
                    let p = sp.p;
                    let inv2 = powmod(2, p - 2, p);
                    let (am, bm, cm) = (rational_mod(a, p), rational_mod(b, p), rational_mod(c, p));
                    let cos_table = |q: u64, ps: &[u64], coeff: u64, shift: u64| -> Vec<u64> {
                        let zeta = powmod(sp.root, l / (2 * q), p);
                        let zeta_inv = powmod(zeta, p - 2, p);
                        ps.iter()
                            .map(|&e| {
                                let cos = mulmod(
                                    (powmod(zeta, e, p) + powmod(zeta_inv, e, p)) % p,
                                    inv2,
                                    p,
                                );
                                (mulmod(coeff, cos, p) + shift) % p
                            })
                            .collect()
                    };
                    let av = cos_table(*q1, ps1, am, 0);
                    let bv = cos_table(*q2, ps2, bm, p - cm);
                    (p, av, bv)
                })
                .collect();

            for (i1, &p1) in ps1.iter().enumerate() {
                'pair: for (i2, &p2) in ps2.iter().enumerate() {
                    for (p, av, bv) in &tables {
                        if (av[i1] + bv[i2]) % p != 0 {
                            continue 'pair;
                        }
                    }
                    if confirm_exact(a, b, c, (p1, *q1), (p2, *q2), cap)? {
                        out.insert((
                            RationalAngle::new(p1 as i64, *q1 as i64),
                            RationalAngle::new(p2 as i64, *q2 as i64),
                        ));
                    }
                }
            }
        }
    }
    Ok(out)
}
