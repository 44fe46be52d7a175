//! The tower Q(√5)(i): elements p + q·i with p, q in Q(√5).
//!
//! (p + qi)(p − qi) = p² + q² is the relative norm down to Q(√5).

use super::quad::QuadElem;
use super::Rational;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// p + q·i with p, q ∈ Q(√5).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TowerElem {
    p: QuadElem,
    q: QuadElem,
}

fn check_base(z: &QuadElem) -> &QuadElem {
    assert!(
        z.is_rational() || z.d() == 5,
        "tower coefficients must lie in Q(sqrt(5)), got field tag {}",
        z.d()
    );
    z
}

impl TowerElem {
    pub fn new(p: QuadElem, q: QuadElem) -> Self {
        check_base(&p);
        check_base(&q);
        TowerElem { p, q }
    }

    pub fn from_base(p: QuadElem) -> Self {
        TowerElem::new(p, QuadElem::zero())
    }

    /// The imaginary unit i.
    pub fn i() -> Self {
        TowerElem::new(QuadElem::zero(), QuadElem::one())
    }

    pub fn one() -> Self {
        TowerElem::from_base(QuadElem::one())
    }

    pub fn re(&self) -> &QuadElem {
        &self.p
    }

    pub fn im(&self) -> &QuadElem {
        &self.q
    }

    pub fn is_one(&self) -> bool {
        self.p.is_one() && self.q.is_zero()
    }

    /// Conjugation over Q(√5): p + qi ↦ p − qi.
    pub fn conj(&self) -> Self {
        TowerElem::new(self.p.clone(), -&self.q)
    }

    /// Relative norm p² + q², an element of Q(√5).
    pub fn relative_norm(&self) -> QuadElem {
        &(&self.p * &self.p) + &(&self.q * &self.q)
    }

    pub fn scale(&self, c: &QuadElem) -> Self {
        TowerElem::new(&self.p * c, &self.q * c)
    }

    pub fn scale_rat(&self, c: &Rational) -> Self {
        TowerElem::new(self.p.scale(c), self.q.scale(c))
    }

    /// Exact k-th power by repeated squaring.
    pub fn pow(&self, k: u64) -> Self {
        let mut base = self.clone();
        let mut e = k;
        let mut acc = TowerElem::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

impl Add for &TowerElem {
    type Output = TowerElem;
    fn add(self, rhs: &TowerElem) -> TowerElem {
        TowerElem::new(&self.p + &rhs.p, &self.q + &rhs.q)
    }
}

impl Sub for &TowerElem {
    type Output = TowerElem;
    fn sub(self, rhs: &TowerElem) -> TowerElem {
        TowerElem::new(&self.p - &rhs.p, &self.q - &rhs.q)
    }
}

impl Mul for &TowerElem {
    type Output = TowerElem;
    fn mul(self, rhs: &TowerElem) -> TowerElem {
        // (p + qi)(r + si) = (pr − qs) + (ps + qr)i
        TowerElem::new(
            &(&self.p * &rhs.p) - &(&self.q * &rhs.q),
            &(&self.p * &rhs.q) + &(&self.q * &rhs.p),
        )
    }
}

impl Neg for &TowerElem {
    type Output = TowerElem;
    fn neg(self) -> TowerElem {
        TowerElem::new(-&self.p, -&self.q)
    }
}

impl fmt::Display for TowerElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*i", self.p, self.q)
    }
}
