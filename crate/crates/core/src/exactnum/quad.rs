//! Elements x + y·√d of a quadratic field Q(√d), d squarefree.
//!
//! Negative d gives an imaginary field: we write y·√d = y·i√|d|, so the
//! element is x + y·i√D with D = |d|. Rational elements (y = 0) are
//! field-agnostic: they compare equal across different d, and arithmetic
//! with them adopts the other operand's field. Mixing two genuinely
//! irrational elements from different fields is a hard error.

use super::{rational_sqrt, Rational};
use crate::intutil;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Zero};

/// Order of the group of roots of unity in Q(√d): 4 in Q(i), 6 in Q(i√3),
/// otherwise 2.
pub fn unity_order(d: i64) -> u8 {
    match d {
        -1 => 4,
        -3 => 6,
        _ => 2,
    }
}

/// x + y·√d with d squarefree, d ∉ {0, 1}.
#[derive(Debug, Clone)]
pub struct QuadElem {
    d: i64,
    x: Rational,
    y: Rational,
}

impl QuadElem {
    /// Builds x + y·√d, checking that d is squarefree and not 0 or 1.
    pub fn new(d: i64, x: Rational, y: Rational) -> Self {
        assert!(d != 0 && d != 1, "field tag d must not be 0 or 1");
        assert!(
            intutil::is_squarefree_u64(d.unsigned_abs()),
            "field tag d = {d} must be squarefree"
        );
        QuadElem { d, x, y }
    }

    fn raw(d: i64, x: Rational, y: Rational) -> Self {
        QuadElem { d, x, y }
    }

    /// A rational number, usable in any field. Tagged with d = -1 internally;
    /// equality and arithmetic ignore the tag while y = 0.
    pub fn from_rational(x: Rational) -> Self {
        QuadElem::raw(-1, x, Rational::zero())
    }

    pub fn from_int(x: i64) -> Self {
        QuadElem::from_rational(Rational::from_integer(x.into()))
    }

    pub fn zero() -> Self {
        QuadElem::from_int(0)
    }

    pub fn one() -> Self {
        QuadElem::from_int(1)
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn re(&self) -> &Rational {
        &self.x
    }

    /// Coefficient of √d.
    pub fn surd_coeff(&self) -> &Rational {
        &self.y
    }

    pub fn is_rational(&self) -> bool {
        self.y.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.x)
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.x.is_one() && self.y.is_zero()
    }

    /// Field-compatibility: the joint d when at most one operand is irrational.
    fn joint_d(&self, other: &Self) -> i64 {
        if self.y.is_zero() {
            other.d
        } else if other.y.is_zero() || self.d == other.d {
            self.d
        } else {
            panic!(
                "mixed quadratic fields: sqrt({}) vs sqrt({}) with both surd parts nonzero",
                self.d, other.d
            );
        }
    }

    pub fn conj(&self) -> Self {
        QuadElem::raw(self.d, self.x.clone(), -self.y.clone())
    }

    /// The field norm x² − d·y²; equals the element times its conjugate.
    pub fn norm(&self) -> Rational {
        &self.x * &self.x - Rational::from_integer(self.d.into()) * &self.y * &self.y
    }

    pub fn scale(&self, c: &Rational) -> Self {
        QuadElem::raw(self.d, &self.x * c, &self.y * c)
    }

    pub fn inv(&self) -> Self {
        let n = self.norm();
        assert!(!n.is_zero(), "inverse of zero quadratic element");
        self.conj().scale(&n.recip())
    }

    /// Exact k-th power by repeated squaring; negative k inverts first.
    ///
    /// Denominators are cleared up front and the squaring chain runs on
    /// integer pairs, with a single rational reduction at the end — the
    /// per-step gcd of an interleaved rational chain dominates the cost on
    /// large exponents.
    pub fn pow(&self, k: i64) -> Self {
        use num_bigint::BigInt;
        let base = if k < 0 { self.inv() } else { self.clone() };
        let e = k.unsigned_abs();
        if e == 0 {
            return QuadElem::raw(self.d, Rational::one(), Rational::zero());
        }
        let den: BigInt = base.x.denom().lcm(base.y.denom());
        let den_rat = Rational::from_integer(den.clone());
        let mut bx = (&base.x * &den_rat).to_integer();
        let mut by = (&base.y * &den_rat).to_integer();
        let d_big = BigInt::from(self.d);
        let (mut ax, mut ay) = (BigInt::one(), BigInt::from(0));
        let mut started = false;
        let mut bits = e;
        while bits > 0 {
            if bits & 1 == 1 {
                if started {
                    let nx = &ax * &bx + &d_big * &ay * &by;
                    let ny = &ax * &by + &ay * &bx;
                    ax = nx;
                    ay = ny;
                } else {
                    ax = bx.clone();
                    ay = by.clone();
                    started = true;
                }
            }
            bits >>= 1;
            if bits > 0 {
                let nx = &bx * &bx + &d_big * &by * &by;
                let ny = BigInt::from(2) * &bx * &by;
                bx = nx;
                by = ny;
            }
        }
        let total_den = den.pow(u32::try_from(e).expect("exponent out of range"));
        QuadElem::raw(
            self.d,
            Rational::new(ax, total_den.clone()),
            Rational::new(ay, total_den),
        )
    }

    /// Square root inside the element's own field, if one exists.
    ///
    /// For w = x + y√d with w² = A + B√d: if B ≠ 0 then x² is a root of
    /// 4t² − 4At + dB² = 0, i.e. t = (A ± √(A² − dB²))/2 where A² − dB² is
    /// the norm; each rational-square branch gives a candidate verified by
    /// squaring. B = 0 reduces to rational square tests on A and A/d.
    /// The returned root is normalized to x > 0, or x = 0 with y > 0.
    pub fn sqrt_in_field(&self) -> Option<QuadElem> {
        if self.is_zero() {
            return Some(QuadElem::zero());
        }
        let d_rat = Rational::from_integer(self.d.into());
        if self.y.is_zero() {
            // Rational target: either a rational square, or d times one.
            if let Some(r) = rational_sqrt(&self.x) {
                return Some(QuadElem::raw(self.d, r, Rational::zero()));
            }
            if let Some(r) = rational_sqrt(&(&self.x / &d_rat)) {
                return Some(QuadElem::raw(self.d, Rational::zero(), r));
            }
            return None;
        }
        let s = rational_sqrt(&self.norm())?;
        let two = Rational::from_integer(2.into());
        for t in [(&self.x + &s) / &two, (&self.x - &s) / &two] {
            if let Some(x0) = rational_sqrt(&t) {
                if x0.is_zero() {
                    continue;
                }
                let y0 = &self.y / (&x0 * &two);
                let cand = QuadElem::raw(self.d, x0, y0);
                if &(&cand * &cand) == self {
                    return Some(cand);
                }
            }
        }
        None
    }

    /// True when the element is a root of unity. Requires unit norm: in a
    /// quadratic field every root of unity satisfies z^N = 1 for N the order
    /// of the field's unity group.
    pub fn is_root_of_unity(&self) -> bool {
        if !self.norm().is_one() {
            return false;
        }
        self.pow(unity_order(self.d) as i64).is_one()
    }
}

impl PartialEq for QuadElem {
    fn eq(&self, other: &Self) -> bool {
        if self.y.is_zero() && other.y.is_zero() {
            return self.x == other.x;
        }
        self.d == other.d && self.x == other.x && self.y == other.y
    }
}

impl Eq for QuadElem {}

impl Add for &QuadElem {
    type Output = QuadElem;
    fn add(self, rhs: &QuadElem) -> QuadElem {
        let d = self.joint_d(rhs);
        QuadElem::raw(d, &self.x + &rhs.x, &self.y + &rhs.y)
    }
}

impl Sub for &QuadElem {
    type Output = QuadElem;
    fn sub(self, rhs: &QuadElem) -> QuadElem {
        let d = self.joint_d(rhs);
        QuadElem::raw(d, &self.x - &rhs.x, &self.y - &rhs.y)
    }
}

impl Mul for &QuadElem {
    type Output = QuadElem;
    fn mul(self, rhs: &QuadElem) -> QuadElem {
        let d = self.joint_d(rhs);
        let dr = Rational::from_integer(d.into());
        QuadElem::raw(
            d,
            &self.x * &rhs.x + dr * &self.y * &rhs.y,
            &self.x * &rhs.y + &self.y * &rhs.x,
        )
    }
}

impl Neg for &QuadElem {
    type Output = QuadElem;
    fn neg(self) -> QuadElem {
        QuadElem::raw(self.d, -self.x.clone(), -self.y.clone())
    }
}

impl fmt::Display for QuadElem {
    /// Grammar: `(x + y*sqrt(d))` with x, y rationals written `p/q` (q
    /// omitted when 1) and d the signed squarefree tag.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.y.is_zero() {
            return write!(f, "({})", self.x);
        }
        write!(f, "({} + {}*sqrt({}))", self.x, self.y, self.d)
    }
}

impl FromStr for QuadElem {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        let inner = s
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| format!("quadratic value must be parenthesized: {s}"))?;
        match inner.split_once(" + ") {
            None => {
                let x: Rational = inner
                    .trim()
                    .parse()
                    .map_err(|e| format!("bad rational {inner}: {e}"))?;
                Ok(QuadElem::from_rational(x))
            }
            Some((xs, rest)) => {
                let x: Rational = xs
                    .trim()
                    .parse()
                    .map_err(|e| format!("bad rational {xs}: {e}"))?;
                let (ys, ds) = rest
                    .split_once("*sqrt(")
                    .ok_or_else(|| format!("missing *sqrt( in {rest}"))?;
                let y: Rational = ys
                    .trim()
                    .parse()
                    .map_err(|e| format!("bad rational {ys}: {e}"))?;
                let d: i64 = ds
                    .strip_suffix(')')
                    .ok_or_else(|| format!("missing closing paren in {ds}"))?
                    .trim()
                    .parse()
                    .map_err(|e| format!("bad field tag {ds}: {e}"))?;
                if y.is_zero() {
                    Ok(QuadElem::from_rational(x))
                } else {
                    Ok(QuadElem::new(d, x, y))
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, rat_int};

    fn q(d: i64, xn: i64, xd: i64, yn: i64, yd: i64) -> QuadElem {
        QuadElem::new(d, rat(xn, xd), rat(yn, yd))
    }

    #[test]
    fn norm_examples() {
        // -6 + 2i√7 has norm 36 + 28 = 64.
        let z = q(-7, -6, 1, 2, 1);
        assert_eq!(z.norm(), rat_int(64));
        assert!(QuadElem::one().norm().is_one());
        // (1 + i√2)(1 - i√2) = 3 = norm.
        let w = q(-2, 1, 1, 1, 1);
        assert_eq!(&w * &w.conj(), QuadElem::from_int(3));
        assert_eq!(w.norm(), rat_int(3));
    }

    #[test]
    fn sqrt_examples() {
        // sqrt(-1 + 2i√2) = 1 + i√2.
        let a = q(-2, -1, 1, 2, 1);
        let r = a.sqrt_in_field().unwrap();
        assert_eq!(r, q(-2, 1, 1, 1, 1));
        assert_eq!(&r * &r, a);

        assert_eq!(
            QuadElem::from_int(4).sqrt_in_field().unwrap(),
            QuadElem::from_int(2)
        );

        // -3 + i√7: the biquadratic has no rational root.
        assert!(q(-7, -3, 1, 1, 1).sqrt_in_field().is_none());

        // -2 is a square in Q(i√2): (i√2)^2 = -2.
        let m2 = QuadElem::new(-2, rat_int(-2), rat_int(0));
        let s = m2.sqrt_in_field().unwrap();
        assert_eq!(&s * &s, m2);
    }

    /// Independent oracle for the B ≠ 0 square-root branch: w² = A + B√d
    /// forces 4t² − 4At + dB² = 0 at t = x². Rational roots are enumerated
    /// from the rational root theorem and tested for being squares.
    fn sqrt_oracle(alpha: &QuadElem) -> bool {
        use num_traits::Signed;
        let (a, b) = (alpha.re(), alpha.surd_coeff());
        assert!(!b.is_zero());
        // Clear denominators: c2·t² + c1·t + c0 = 0 with integers.
        let four = rat_int(4);
        let c2 = four.clone();
        let c1 = -(&four * a);
        let c0 = rat(alpha.d(), 1) * b * b;
        let lcm: num_bigint::BigInt = [&c2, &c1, &c0]
            .iter()
            .fold(num_bigint::BigInt::from(1), |acc, c| {
                num_integer::Integer::lcm(&acc, c.denom())
            });
        let iv = |c: &Rational| (c * Rational::from_integer(lcm.clone())).to_integer();
        let (i2, i1, i0) = (iv(&c2), iv(&c1), iv(&c0));
        let divs = |n: &num_bigint::BigInt| -> Vec<i64> {
            let n: i64 = n.abs().try_into().unwrap();
            let n = n.max(1);
            (1..=n).filter(|k| n % k == 0).collect()
        };
        for p in divs(&i0) {
            for q in divs(&i2) {
                for sign in [1i64, -1] {
                    let t = rat(sign * p, q);
                    if &c2 * &t * &t + &c1 * &t + &c0 == Rational::zero() {
                        if let Some(x) = crate::exactnum::rational_sqrt(&t) {
                            if !x.is_zero() {
                                return true;
                            }
                        }
                    }
                }
            }
        }
        let _ = (i1, i0);
        false
    }

    #[test]
    fn sqrt_agrees_with_biquadratic_oracle() {
        // The frozen negative example: −3 + i√7 has no root because the
        // biquadratic 4t² + 12t − 7 has no nonnegative rational square root.
        let a = q(-7, -3, 1, 1, 1);
        assert!(!sqrt_oracle(&a));
        assert!(a.sqrt_in_field().is_none());
        // Agreement across a small grid.
        for d in [-1i64, -2, -5, -7] {
            for xn in -5i64..=5 {
                for yn in 1i64..=5 {
                    let alpha = QuadElem::new(d, rat_int(xn), rat_int(yn));
                    assert_eq!(
                        alpha.sqrt_in_field().is_some(),
                        sqrt_oracle(&alpha),
                        "disagreement at {alpha}"
                    );
                }
            }
        }
    }

    #[test]
    fn sqrt_squares_roundtrip() {
        for d in [-1i64, -2, -3, -7, 5] {
            for xn in -4i64..5 {
                for yn in -4i64..5 {
                    let w = QuadElem::new(d, rat(xn, 3), rat(yn, 2));
                    let sq = &w * &w;
                    let r = sq
                        .sqrt_in_field()
                        .unwrap_or_else(|| panic!("square of {w} must have a root"));
                    assert_eq!(&r * &r, sq);
                }
            }
        }
    }

    #[test]
    fn rational_elements_are_field_agnostic() {
        let a = QuadElem::new(-7, rat_int(3), rat_int(0));
        let b = QuadElem::new(-2, rat_int(3), rat_int(0));
        assert_eq!(a, b);
        // Arithmetic adopts the irrational operand's field.
        let c = q(-2, 0, 1, 1, 1);
        assert_eq!((&a * &c).d(), -2);
    }

    #[test]
    #[should_panic(expected = "mixed quadratic fields")]
    fn mixed_fields_panic() {
        let a = q(-2, 1, 1, 1, 1);
        let b = q(-7, 1, 1, 1, 1);
        let _ = &a * &b;
    }

    #[test]
    fn pow_and_inverse() {
        let z = q(-7, -3, 4, 1, 4); // (-3 + i√7)/4, unit norm
        assert!(z.norm().is_one());
        assert_eq!(z.pow(0), QuadElem::one());
        assert_eq!(z.pow(3), &(&z * &z) * &z);
        assert_eq!(&z.pow(-2) * &z.pow(2), QuadElem::one());
    }

    #[test]
    fn roots_of_unity() {
        let i = q(-1, 0, 1, 1, 1);
        assert!(i.is_root_of_unity());
        let zeta6 = q(-3, 1, 2, 1, 2);
        assert!(zeta6.is_root_of_unity());
        let z = q(-2, -1, 3, 2, 3); // (-1+2i√2)/3, unit norm, infinite order
        assert!(z.norm().is_one());
        assert!(!z.is_root_of_unity());
        assert!(!q(-7, 1, 1, 1, 1).is_root_of_unity());
    }

    #[test]
    fn display_parse_roundtrip() {
        for z in [
            q(-7, 87, 256, 91, 256),
            QuadElem::from_rational(rat(-3, 2)),
            q(5, 3, 2, -1, 2),
        ] {
            let s = z.to_string();
            let back: QuadElem = s.parse().unwrap();
            assert_eq!(back, z, "roundtrip of {s}");
        }
    }
}
