//! Canonical surd lengths r·√m: positive rational times the square root of a
//! squarefree positive integer. Two surd lengths are Q-proportional exactly
//! when they share the same m, which is what the tensor algebra keys on.

use super::{squarefree_decompose, Rational};
use crate::error::Result;
use crate::intutil;
use std::fmt;

use num_traits::{One, Signed};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurdLength {
    r: Rational,
    m: u64,
}

impl SurdLength {
    /// r·√m; m is reduced to its squarefree part with the square factor
    /// absorbed into r. Requires r > 0.
    pub fn new(r: Rational, m: u64) -> Self {
        assert!(r.is_positive(), "surd coefficient must be positive");
        assert!(m > 0, "surd radicand must be positive");
        let (sq, m0) = intutil::squarefree_decompose_u64(m);
        SurdLength {
            r: r * Rational::from_integer(sq.into()),
            m: m0,
        }
    }

    /// The positive square root of a positive rational, as a canonical surd.
    pub fn sqrt_of(x: &Rational) -> Result<Self> {
        let (r, m) = squarefree_decompose(x)?;
        Ok(SurdLength { r, m })
    }

    pub fn from_rational(r: Rational) -> Self {
        SurdLength::new(r, 1)
    }

    pub fn coeff(&self) -> &Rational {
        &self.r
    }

    pub fn radicand(&self) -> u64 {
        self.m
    }

    pub fn is_rational(&self) -> bool {
        self.m == 1
    }

    /// The square r²·m as a rational.
    pub fn squared(&self) -> Rational {
        &self.r * &self.r * Rational::from_integer(self.m.into())
    }

    /// Product of two surd lengths, recanonicalized.
    pub fn mul(&self, other: &SurdLength) -> SurdLength {
        let g = intutil::gcd_u64(self.m, other.m);
        SurdLength {
            r: &self.r * &other.r * Rational::from_integer(g.into()),
            m: (self.m / g) * (other.m / g),
        }
    }

    pub fn scale(&self, c: &Rational) -> SurdLength {
        assert!(c.is_positive());
        SurdLength {
            r: &self.r * c,
            m: self.m,
        }
    }
}

impl fmt::Display for SurdLength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m == 1 {
            write!(f, "{}", self.r)
        } else if self.r.is_one() {
            write!(f, "sqrt({})", self.m)
        } else {
            write!(f, "{}*sqrt({})", self.r, self.m)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, rat_int};

    #[test]
    fn canonicalization() {
        // √8 = 2√2
        let s = SurdLength::new(rat_int(1), 8);
        assert_eq!(s, SurdLength::new(rat_int(2), 2));
        assert_eq!(s.squared(), rat_int(8));
    }

    #[test]
    fn sqrt_of_rational() {
        // √(9/2) = (3/2)√2
        let s = SurdLength::sqrt_of(&rat(9, 2)).unwrap();
        assert_eq!(s.coeff(), &rat(3, 2));
        assert_eq!(s.radicand(), 2);
        assert_eq!(s.squared(), rat(9, 2));
    }

    #[test]
    fn products() {
        let a = SurdLength::new(rat_int(1), 2);
        let b = SurdLength::new(rat_int(1), 3);
        assert_eq!(a.mul(&b), SurdLength::new(rat_int(1), 6));
        // √2·√2 = 2
        assert_eq!(a.mul(&a), SurdLength::from_rational(rat_int(2)));
        // √6·√10 = 2√15
        let c = SurdLength::new(rat_int(1), 6).mul(&SurdLength::new(rat_int(1), 10));
        assert_eq!(c, SurdLength::new(rat_int(2), 15));
    }
}
