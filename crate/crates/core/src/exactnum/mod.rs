//! Exact number substrate: arbitrary-precision rationals, quadratic-field
//! elements x + y·√d, canonical surd lengths r·√m, and the tower Q(√5)(i).
//!
//! All verdicts downstream rest on this layer, so nothing here approximates:
//! square roots are solved over Q and verified by squaring back.

mod quad;
mod surd;
mod tower;

pub use quad::{unity_order, QuadElem};
pub use surd::SurdLength;
pub use tower::TowerElem;

use crate::error::{CoreError, Result};
use crate::intutil;
use num_bigint::BigUint;
use num_traits::{Signed, Zero};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for a rational from machine integers.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

pub fn rat_int(num: i64) -> Rational {
    Rational::from_integer(num.into())
}

/// Writes a positive rational as `r^2 * m` with `m` a squarefree positive
/// integer; returns `(r, m)`. Since `p/q = (1/q)^2 * (p*q)`, it suffices to
/// decompose the integer `p*q`.
pub fn squarefree_decompose(x: &Rational) -> Result<(Rational, u64)> {
    if !x.is_positive() {
        return Err(CoreError::Domain(format!(
            "squarefree decomposition needs a positive rational, got {x}"
        )));
    }
    let pq: BigUint = (x.numer() * x.denom()).magnitude().clone();
    let pq: u64 = pq.try_into().map_err(|_| {
        CoreError::Unsupported(
            "squarefree decomposition input exceeds u64 after clearing denominators".into(),
        )
    })?;
    let (r0, m) = intutil::squarefree_decompose_u64(pq);
    // x = (p*q)/q^2 = (r0/q)^2 * m.
    let r = Rational::new(r0.into(), x.denom().clone());
    Ok((r, m))
}

/// Exact square root of a rational if it is a perfect square.
pub fn rational_sqrt(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    if x.is_zero() {
        return Some(Rational::zero());
    }
    let n = intutil::exact_nth_root(x.numer().magnitude(), 2)?;
    let d = intutil::exact_nth_root(x.denom().magnitude(), 2)?;
    Some(Rational::new(n.into(), d.into()))
}

/// Exact n-th root of a rational if it is a perfect n-th power.
pub fn rational_nth_root(x: &Rational, n: u32) -> Option<Rational> {
    if x.is_negative() {
        // Odd roots of negatives exist; the callers only need nonnegative inputs.
        if n % 2 == 1 {
            return rational_nth_root(&(-x), n).map(|r| -r);
        }
        return None;
    }
    if x.is_zero() {
        return Some(Rational::zero());
    }
    let num = intutil::exact_nth_root(x.numer().magnitude(), n)?;
    let den = intutil::exact_nth_root(x.denom().magnitude(), n)?;
    Some(Rational::new(num.into(), den.into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn squarefree_examples() {
        // 12 = 2^2 * 3
        assert_eq!(squarefree_decompose(&rat_int(12)).unwrap(), (rat_int(2), 3));
        assert_eq!(squarefree_decompose(&rat_int(1)).unwrap(), (rat_int(1), 1));
        // 9/2 = (3/2)^2 * 2
        assert_eq!(squarefree_decompose(&rat(9, 2)).unwrap(), (rat(3, 2), 2));
    }

    #[test]
    fn squarefree_rejects_nonpositive() {
        assert!(squarefree_decompose(&rat_int(0)).is_err());
        assert!(squarefree_decompose(&rat_int(-4)).is_err());
    }

    #[test]
    fn squarefree_roundtrip_small() {
        for p in 1i64..40 {
            for q in 1i64..40 {
                let x = rat(p, q);
                let (r, m) = squarefree_decompose(&x).unwrap();
                assert_eq!(&r * &r * rat_int(m as i64), x);
                assert!(intutil::is_squarefree_u64(m));
            }
        }
    }

    #[test]
    fn rational_roots() {
        assert_eq!(rational_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(rational_sqrt(&rat(1, 3)), None);
        assert_eq!(rational_sqrt(&rat_int(-1)), None);
        assert_eq!(rational_nth_root(&rat_int(32), 5), Some(rat_int(2)));
        assert_eq!(rational_nth_root(&rat_int(-27), 3), Some(rat_int(-3)));
        assert!(rational_nth_root(&rat_int(-16), 4).is_none());
        assert!(rational_sqrt(&Rational::one()).unwrap().is_one());
    }
}
