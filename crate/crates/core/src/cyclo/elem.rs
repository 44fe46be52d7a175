//! Elements of Q(ζ_m) as coefficient vectors of length φ(m), reduced mod the
//! cyclotomic polynomial Φ_m, plus the embedding of cosines of rational
//! angles via cos(πp/q) = (ζ_{2q}^p + ζ_{2q}^{-p})/2.

use super::angle::RationalAngle;
use crate::exactnum::Rational;
use crate::intutil;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

/// The m-th cyclotomic polynomial Φ_m as integer coefficients, low degree
/// first, monic of degree φ(m). Computed by dividing X^m − 1 by Φ_d over the
/// proper divisors d of m; results are memoized process-wide (the function
/// is pure, so this keeps determinism).
pub fn cyclotomic_poly(m: u64) -> Vec<BigInt> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Vec<BigInt>>>> = OnceLock::new();

    fn compute(m: u64, memo: &mut HashMap<u64, Vec<BigInt>>) -> Vec<BigInt> {
        if let Some(p) = memo.get(&m) {
            return p.clone();
        }
        let poly = if m == 1 {
            vec![BigInt::from(-1), BigInt::one()]
        } else {
            let mut num = vec![BigInt::zero(); m as usize + 1];
            num[0] = BigInt::from(-1);
            num[m as usize] = BigInt::one();
            for d in intutil::divisors(m) {
                if d == m {
                    continue;
                }
                let phi_d = compute(d, memo);
                num = poly_exact_div(&num, &phi_d);
            }
            num
        };
        memo.insert(m, poly.clone());
        poly
    }
    assert!(m >= 1, "cyclotomic index must be positive");
    let mut memo = CACHE
        .get_or_init(|| Mutex::new(HashMap::new()))
        .lock()
        .unwrap();
    compute(m, &mut memo)
}

/// Exact division of integer polynomials with monic divisor.
fn poly_exact_div(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "divisor must be monic");
    let mut rem = num.to_vec();
    let nd = rem.len() - 1;
    assert!(nd >= dd);
    let mut quot = vec![BigInt::zero(); nd - dd + 1];
    for i in (dd..=nd).rev() {
        let c = std::mem::replace(&mut rem[i], BigInt::zero());
        if c.is_zero() {
            continue;
        }
        quot[i - dd] = c.clone();
        for (j, dc) in den.iter().enumerate().take(dd) {
            rem[i - dd + j] -= &c * dc;
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "division was not exact");
    quot
}

/// An element of Q(ζ_m): coefficients of 1, ζ, …, ζ^(φ(m)−1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycloElem {
    m: u64,
    coeffs: Vec<Rational>,
}

impl CycloElem {
    pub fn zero(m: u64) -> Self {
        CycloElem {
            m,
            coeffs: vec![Rational::zero(); intutil::totient(m) as usize],
        }
    }

    pub fn from_rational(m: u64, c: Rational) -> Self {
        let mut e = CycloElem::zero(m);
        e.coeffs[0] = c;
        e
    }

    /// ζ_m^e as an element.
    pub fn zeta_power(m: u64, e: u64) -> Self {
        let mut poly = vec![Rational::zero(); (e % m) as usize + 1];
        *poly.last_mut().unwrap() = Rational::one();
        CycloElem::from_poly(m, poly)
    }

    /// Builds an element from an arbitrary-degree polynomial in ζ_m, reducing
    /// first mod X^m − 1, then mod Φ_m.
    pub fn from_poly(m: u64, poly: Vec<Rational>) -> Self {
        let phi = intutil::totient(m) as usize;
        let mut folded = vec![Rational::zero(); m as usize];
        for (i, c) in poly.into_iter().enumerate() {
            if !c.is_zero() {
                let idx = i % m as usize;
                folded[idx] = &folded[idx] + c;
            }
        }
        let modulus = cyclotomic_poly(m);
        // Reduce mod the monic Φ_m.
        for i in (phi..folded.len()).rev() {
            let c = std::mem::replace(&mut folded[i], Rational::zero());
            if c.is_zero() {
                continue;
            }
            for (j, mc) in modulus.iter().enumerate().take(phi) {
                let delta = &c * Rational::from_integer(mc.clone());
                folded[i - phi + j] = &folded[i - phi + j] - delta;
            }
        }
        folded.truncate(phi);
        folded.resize(phi, Rational::zero());
        CycloElem { m, coeffs: folded }
    }

    pub fn conductor(&self) -> u64 {
        self.m
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// If the element is rational (all higher basis coefficients vanish),
    /// returns it.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.m, other.m, "conductor mismatch");
        CycloElem {
            m: self.m,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.m, other.m, "conductor mismatch");
        CycloElem {
            m: self.m,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.m, other.m, "conductor mismatch");
        let mut conv = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len()];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    conv[i + j] = &conv[i + j] + a * b;
                }
            }
        }
        CycloElem::from_poly(self.m, conv)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        CycloElem {
            m: self.m,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Reinterprets the element in Q(ζ_M) for m | M by scaling exponents.
    pub fn embed(&self, target: u64) -> Self {
        assert!(
            target % self.m == 0,
            "can only embed into a multiple conductor"
        );
        let k = (target / self.m) as usize;
        let mut poly = vec![Rational::zero(); self.coeffs.len() * k];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                if poly.len() <= i * k {
                    poly.resize(i * k + 1, Rational::zero());
                }
                poly[i * k] = c.clone();
            }
        }
        CycloElem::from_poly(target, poly)
    }
}

/// cos(πp/q) as an element of Q(ζ_{2q}).
pub fn cos_as_cyclotomic(angle: RationalAngle) -> CycloElem {
    cos_in_conductor(2 * angle.denom(), angle.numer(), angle.denom())
}

/// cos(πp/q) as an element of Q(ζ_M) for any M divisible by 2q.
pub fn cos_in_conductor(m: u64, p: u64, q: u64) -> CycloElem {
    assert!(m % (2 * q) == 0, "conductor must be divisible by 2q");
    let step = m / (2 * q);
    let e = (p % (2 * q)) * step;
    let half = Rational::new(1.into(), 2.into());
    let mut poly = vec![Rational::zero(); m as usize];
    poly[e as usize] = &poly[e as usize] + &half;
    let e2 = (m - e) % m;
    poly[e2 as usize] = &poly[e2 as usize] + &half;
    CycloElem::from_poly(m, poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, rat_int};

    fn int_poly(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_poly(1), int_poly(&[-1, 1]));
        assert_eq!(cyclotomic_poly(2), int_poly(&[1, 1]));
        assert_eq!(cyclotomic_poly(4), int_poly(&[1, 0, 1]));
        assert_eq!(cyclotomic_poly(12), int_poly(&[1, 0, -1, 0, 1]));
        assert_eq!(
            cyclotomic_poly(105).len(),
            intutil::totient(105) as usize + 1
        );
    }

    #[test]
    fn cyclotomic_divides_xm_minus_1() {
        for m in 1u64..=64 {
            let phi = cyclotomic_poly(m);
            assert_eq!(phi.len() as u64 - 1, intutil::totient(m));
            let mut num = vec![BigInt::zero(); m as usize + 1];
            num[0] = BigInt::from(-1);
            num[m as usize] = BigInt::one();
            // poly_exact_div asserts exactness internally.
            let q = poly_exact_div(&num, &phi);
            assert_eq!(q.len() as u64 - 1, m - intutil::totient(m));
        }
    }

    #[test]
    fn zeta_arithmetic() {
        // ζ_4² = -1
        let i = CycloElem::zeta_power(4, 1);
        assert_eq!(i.mul(&i), CycloElem::from_rational(4, rat_int(-1)));
        // 1 + ζ_3 + ζ_3² = 0
        let z = CycloElem::zeta_power(3, 1);
        let s = CycloElem::from_rational(3, rat_int(1))
            .add(&z)
            .add(&z.mul(&z));
        assert!(s.is_zero());
    }

    #[test]
    fn cosine_values() {
        // cos(π/3) = 1/2
        let c = cos_as_cyclotomic(RationalAngle::new(1, 3));
        assert_eq!(c.as_rational(), Some(rat(1, 2)));
        // cos(π/2) = 0
        assert!(cos_as_cyclotomic(RationalAngle::new(1, 2)).is_zero());
        // cos(2π/3) = -1/2
        let c = cos_as_cyclotomic(RationalAngle::new(2, 3));
        assert_eq!(c.as_rational(), Some(rat(-1, 2)));
    }

    #[test]
    fn cos_pi_over_5_minimal_polynomial() {
        // 4x² − 2x − 1 vanishes at cos(π/5).
        let c = cos_as_cyclotomic(RationalAngle::new(1, 5));
        let val = c
            .mul(&c)
            .scale(&rat_int(4))
            .sub(&c.scale(&rat_int(2)))
            .sub(&CycloElem::from_rational(10, rat_int(1)));
        assert!(val.is_zero());
    }

    #[test]
    fn double_angle_identity() {
        // 2cos²t = 1 + cos 2t for t = πp/q, q ≤ 24.
        for q in 1u64..=24 {
            for p in 0..q {
                if intutil::gcd_u64(p.max(1), q) != 1 {
                    continue;
                }
                let m = 2 * q;
                let c = cos_in_conductor(m, p, q);
                let double = cos_in_conductor(m, (2 * p) % m, q); // careful: angle 2πp/q... see below
                                                                  // cos(2·πp/q) built directly from exponent 2p over conductor 2q.
                let lhs = c.mul(&c).scale(&rat_int(2));
                let rhs = CycloElem::from_rational(m, rat_int(1)).add(&double);
                assert!(lhs.sub(&rhs).is_zero(), "failed at p={p} q={q}");
            }
        }
    }

    #[test]
    fn embedding_preserves_values() {
        let c = cos_as_cyclotomic(RationalAngle::new(1, 3));
        let e = c.embed(24);
        assert_eq!(e.as_rational(), Some(rat(1, 2)));
        let z = CycloElem::zeta_power(3, 1);
        let z24 = z.embed(24);
        assert_eq!(z24, CycloElem::zeta_power(24, 8));
    }
}
