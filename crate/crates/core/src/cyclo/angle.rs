//! Angles that are rational multiples of π, taken mod π.

use crate::exactnum::Rational;
use crate::intutil;
use std::cmp::Ordering;
use std::fmt;

/// The class of π·p/q in R/πZ, stored with the canonical representative
/// 0 ≤ p/q < 1 and gcd(p, q) = 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RationalAngle {
    p: u64,
    q: u64,
}

impl RationalAngle {
    /// π·p/q reduced mod π into [0, π).
    pub fn new(p: i64, q: i64) -> Self {
        assert!(q != 0, "angle denominator must be nonzero");
        let (mut p, mut q) = (p as i128, q as i128);
        if q < 0 {
            p = -p;
            q = -q;
        }
        let r = p.rem_euclid(q);
        let g = intutil::gcd_u64(r as u64, q as u64);
        RationalAngle {
            p: (r as u64) / g,
            q: (q as u64) / g,
        }
    }

    pub fn zero() -> Self {
        RationalAngle { p: 0, q: 1 }
    }

    pub fn numer(&self) -> u64 {
        self.p
    }

    pub fn denom(&self) -> u64 {
        self.q
    }

    /// p/q as a rational in [0, 1).
    pub fn fraction(&self) -> Rational {
        Rational::new((self.p as i64).into(), (self.q as i64).into())
    }

    pub fn is_zero(&self) -> bool {
        self.p == 0
    }

    /// The angle divided by two: this halves a representative in [0, π), so
    /// it maps the class of 2θ with θ ∈ (0, π/2) to the class of θ.
    pub fn half(&self) -> Self {
        RationalAngle::new(self.p as i64, 2 * self.q as i64)
    }

    pub fn negated(&self) -> Self {
        RationalAngle::new(-(self.p as i64), self.q as i64)
    }
}

impl PartialOrd for RationalAngle {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RationalAngle {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.p as u128 * other.q as u128).cmp(&(other.p as u128 * self.q as u128))
    }
}

impl fmt::Display for RationalAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p == 0 {
            write!(f, "0")
        } else if self.p == 1 && self.q == 1 {
            unreachable!("canonical representative is below 1")
        } else if self.q == 1 {
            write!(f, "{}*pi", self.p)
        } else if self.p == 1 {
            write!(f, "pi/{}", self.q)
        } else {
            write!(f, "{}*pi/{}", self.p, self.q)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_representatives() {
        assert_eq!(RationalAngle::new(3, 2), RationalAngle::new(1, 2));
        assert_eq!(RationalAngle::new(-1, 3), RationalAngle::new(2, 3));
        assert_eq!(RationalAngle::new(4, 2), RationalAngle::zero());
        assert_eq!(RationalAngle::new(2, 4), RationalAngle::new(1, 2));
    }

    #[test]
    fn halving() {
        assert_eq!(RationalAngle::new(1, 2).half(), RationalAngle::new(1, 4));
        assert_eq!(RationalAngle::new(2, 3).half(), RationalAngle::new(1, 3));
    }

    #[test]
    fn ordering_by_value() {
        let mut v = [
            RationalAngle::new(2, 3),
            RationalAngle::new(1, 2),
            RationalAngle::new(1, 3),
        ];
        v.sort();
        assert_eq!(
            v,
            [
                RationalAngle::new(1, 3),
                RationalAngle::new(1, 2),
                RationalAngle::new(2, 3)
            ]
        );
    }
}
