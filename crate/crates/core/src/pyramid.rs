//! Geometry of the symmetric pyramids P_n(h) over the regular n-gon with
//! unit circumradius, n ∈ {3, 4, 6}: dihedral-angle cosines, the rational
//! length ratio v = sin(π/n)/√(1+h²), the imaginary quadratic field holding
//! e^{iφ} and e^{i2θ} when v = a/b, and the power products α^a·(e^{iφ})^b.
//!
//! Only these n keep cos(2π/n) rational, which is what makes every quantity
//! below exactly representable.

use crate::cyclo::{solve_two_cosine_relation, RationalAngle};
use crate::error::{CoreError, Result};
use crate::exactnum::{rat, rat_int, rational_sqrt, squarefree_decompose, QuadElem, Rational};
use num_traits::{One, Signed, Zero};
use std::fmt;

/// The base polygon of a symmetric pyramid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasePolygon {
    Triangle,
    Square,
    Hexagon,
}

impl BasePolygon {
    pub fn from_n(n: u8) -> Result<Self> {
        match n {
            3 => Ok(BasePolygon::Triangle),
            4 => Ok(BasePolygon::Square),
            6 => Ok(BasePolygon::Hexagon),
            _ => Err(CoreError::Domain(format!(
                "base polygon must have 3, 4 or 6 vertices, got {n}"
            ))),
        }
    }

    pub fn n(&self) -> u8 {
        match self {
            BasePolygon::Triangle => 3,
            BasePolygon::Square => 4,
            BasePolygon::Hexagon => 6,
        }
    }

    /// sin²(π/n): 3/4, 1/2, 1/4.
    pub fn sin_sq(&self) -> Rational {
        match self {
            BasePolygon::Triangle => rat(3, 4),
            BasePolygon::Square => rat(1, 2),
            BasePolygon::Hexagon => rat(1, 4),
        }
    }

    /// cos²(π/n): 1/4, 1/2, 3/4.
    pub fn cos_sq(&self) -> Rational {
        Rational::one() - self.sin_sq()
    }

    /// cos(2π/n): −1/2, 0, 1/2.
    pub fn cos_two_pi_over_n(&self) -> Rational {
        match self {
            BasePolygon::Triangle => rat(-1, 2),
            BasePolygon::Square => Rational::zero(),
            BasePolygon::Hexagon => rat(1, 2),
        }
    }

    /// (2 sin(π/n))² — the squared length attached to the base-edge angle.
    pub fn four_sin_sq(&self) -> Rational {
        self.sin_sq() * rat_int(4)
    }
}

impl fmt::Display for BasePolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.n())
    }
}

/// How the pyramid is specified: by squared height, or by the length ratio
/// v = a/b directly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PyramidParam {
    HeightSquared(Rational),
    RatioV { a: u64, b: u64 },
}

/// A validated pyramid: positive height, and for ratio input a reduced
/// fraction with 0 < a/b < sin(π/n) strictly (the boundary is the flat
/// pyramid and is rejected).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PyramidSpec {
    base: BasePolygon,
    param: PyramidParam,
}

impl PyramidSpec {
    pub fn with_height_squared(base: BasePolygon, h_sq: Rational) -> Result<Self> {
        if !h_sq.is_positive() {
            return Err(CoreError::Domain(format!(
                "squared height must be positive, got {h_sq}"
            )));
        }
        Ok(PyramidSpec {
            base,
            param: PyramidParam::HeightSquared(h_sq),
        })
    }

    pub fn with_ratio(base: BasePolygon, a: u64, b: u64) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(CoreError::Domain(
                "ratio v = a/b needs positive a and b".into(),
            ));
        }
        if crate::intutil::gcd_u64(a, b) != 1 {
            return Err(CoreError::Domain(format!(
                "ratio {a}/{b} must be in lowest terms"
            )));
        }
        let v_sq = rat(a as i64, b as i64) * rat(a as i64, b as i64);
        if v_sq >= base.sin_sq() {
            return Err(CoreError::Domain(format!(
                "ratio {a}/{b} must satisfy v < sin(pi/{}) strictly; equality is the flat pyramid",
                base.n()
            )));
        }
        Ok(PyramidSpec {
            base,
            param: PyramidParam::RatioV { a, b },
        })
    }

    pub fn base(&self) -> BasePolygon {
        self.base
    }

    pub fn param(&self) -> &PyramidParam {
        &self.param
    }

    /// The squared height, whichever way the pyramid was given:
    /// h² = sin²(π/n)/v² − 1 for ratio input.
    pub fn height_squared(&self) -> Rational {
        match &self.param {
            PyramidParam::HeightSquared(h) => h.clone(),
            PyramidParam::RatioV { a, b } => {
                let v_sq = rat(*a as i64, *b as i64) * rat(*a as i64, *b as i64);
                self.base.sin_sq() / v_sq - Rational::one()
            }
        }
    }

    /// The ratio v = a/b when rational: given directly, or recovered from
    /// the height when sin²(π/n)/(1+h²) is a rational square. Panics
    /// (rather than misclassifying as irrational) if a rational ratio
    /// exceeds the supported u64 range.
    pub fn rational_ratio(&self) -> Option<(u64, u64)> {
        match &self.param {
            PyramidParam::HeightSquared(h) => {
                let v = rational_length_ratio(self.base, h)?;
                let a: u64 = v
                    .numer()
                    .try_into()
                    .expect("length ratio numerator exceeds the supported range");
                let b: u64 = v
                    .denom()
                    .try_into()
                    .expect("length ratio denominator exceeds the supported range");
                Some((a, b))
            }
            PyramidParam::RatioV { a, b } => Some((*a, *b)),
        }
    }
}

impl fmt::Display for PyramidSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.param {
            PyramidParam::HeightSquared(h) => write!(f, "P_{}(h^2={})", self.base, h),
            PyramidParam::RatioV { a, b } => write!(f, "P_{}(v={}/{})", self.base, a, b),
        }
    }
}

/// v = sin(π/n)/√(1+h²) when that is rational, i.e. when v² is a rational
/// square; otherwise None (and the pyramid cannot satisfy the integer-weight
/// vanishing condition).
pub fn rational_length_ratio(base: BasePolygon, h_sq: &Rational) -> Option<Rational> {
    let v_sq = base.sin_sq() / (Rational::one() + h_sq);
    rational_sqrt(&v_sq)
}

/// Exact dihedral-angle cosines (cos 2θ, cos φ) for rational h².
///
/// cos φ = −(h²·cos(2π/n) + cos²(π/n)) / (h² + cos²(π/n)), and cos 2θ is
/// recovered from the linearized relation
/// [1 − cos(2π/n)]·cos 2θ + 2·cos φ + [1 + cos(2π/n)] = 0.
pub fn dihedral_cosines(base: BasePolygon, h_sq: &Rational) -> (Rational, Rational) {
    let c2n = base.cos_two_pi_over_n();
    let csq = base.cos_sq();
    let cos_phi = -(h_sq * &c2n + &csq) / (h_sq + &csq);
    let cos_two_theta =
        -(rat_int(2) * &cos_phi + Rational::one() + &c2n) / (Rational::one() - &c2n);
    (cos_two_theta, cos_phi)
}

/// The exact exponential data of a ratio pyramid: the imaginary quadratic
/// field Q(i√D), α = e^{i2θ}, e^{iφ}, and the integral numerator z with
/// α = z/(b²−a²) (or z/(3(b²−a²)) for the triangle).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PyramidFieldData {
    /// Squarefree D > 0 with E = Q(i√D).
    pub field_d: u64,
    /// e^{i2θ}, unit norm.
    pub alpha: QuadElem,
    /// e^{iφ}, unit norm.
    pub exp_phi: QuadElem,
    /// The integral numerator of α.
    pub z: QuadElem,
}

/// Builds the field data for P_n(v = a/b) from the closed exponential forms.
/// The radicand is b²−2a², 3b²−4a², or 3b²−12a² for n = 4, 3, 6; its
/// squarefree part names the field.
pub fn exponential_field_data(spec: &PyramidSpec) -> Result<PyramidFieldData> {
    let (a, b) = match spec.param() {
        PyramidParam::RatioV { a, b } => (*a as i64, *b as i64),
        PyramidParam::HeightSquared(_) => {
            let (a, b) = spec.rational_ratio().ok_or_else(|| {
                CoreError::Domain("exponential field data needs a rational length ratio".into())
            })?;
            (a as i64, b as i64)
        }
    };
    let (a2, b2) = (a * a, b * b);
    let (radicand, re_phi, phi_den, re_z, z_den) = match spec.base() {
        BasePolygon::Square => (b2 - 2 * a2, rat_int(-a2), b2 - a2, 3 * a2 - b2, b2 - a2),
        BasePolygon::Triangle => (
            3 * b2 - 4 * a2,
            rat_int(b2 - 2 * a2),
            2 * (b2 - a2),
            5 * a2 - 3 * b2,
            3 * (b2 - a2),
        ),
        BasePolygon::Hexagon => (
            3 * b2 - 12 * a2,
            rat_int(-(b2 + 2 * a2)),
            2 * (b2 - a2),
            7 * a2 - b2,
            b2 - a2,
        ),
    };
    debug_assert!(radicand > 0, "spec validation keeps the radicand positive");
    let (root_coeff, field_d) = squarefree_decompose(&rat_int(radicand))?;
    let d_tag = -(field_d as i64);
    let z = QuadElem::new(d_tag, rat_int(re_z), rat_int(2 * a) * &root_coeff);
    let alpha = z.scale(&rat(1, z_den));
    let exp_phi = QuadElem::new(
        d_tag,
        re_phi / rat_int(phi_den),
        rat_int(b) * &root_coeff / rat_int(phi_den),
    );
    if alpha.is_one() {
        return Err(CoreError::Domain(
            "degenerate flat pyramid: e^{i2theta} = 1".into(),
        ));
    }
    Ok(PyramidFieldData {
        field_d,
        alpha,
        exp_phi,
        z,
    })
}

/// The power product α^a · (e^{iφ})^b, exact in the pyramid's field. Its
/// root-of-unity status decides whether 2vθ + φ can be a rational multiple
/// of π.
pub fn power_product(spec: &PyramidSpec) -> Result<QuadElem> {
    let (a, b) = spec
        .rational_ratio()
        .ok_or_else(|| CoreError::Domain("power product needs a rational length ratio".into()))?;
    let data = exponential_field_data(spec)?;
    Ok(&data.alpha.pow(a as i64) * &data.exp_phi.pow(b as i64))
}

/// All (θ, φ) with both dihedral angles rational multiples of π, from the
/// two-cosine relation instance for this base: (1, 2, −1), (3, 4, −1),
/// (1, 4, −3) for n = 4, 3, 6. Solutions come back as (2θ, φ) pairs and are
/// halved into the geometric domain θ ∈ (0, π/2), φ ∈ (0, π).
pub fn rational_angle_solutions(base: BasePolygon) -> Vec<(RationalAngle, RationalAngle)> {
    let (a, b, c) = two_cosine_instance(base);
    let sols = solve_two_cosine_relation(&a, &b, &c).expect("instance coefficients are nonzero");
    debug_assert!(sols.families.is_empty(), "both coefficients are nonzero");
    sols.pairs
        .into_iter()
        .map(|(two_theta, phi)| (two_theta.half(), phi))
        .collect()
}

/// The (A, B, C) of A·cos 2θ + B·cos φ = C for this base.
pub fn two_cosine_instance(base: BasePolygon) -> (Rational, Rational, Rational) {
    match base {
        BasePolygon::Square => (rat_int(1), rat_int(2), rat_int(-1)),
        BasePolygon::Triangle => (rat_int(3), rat_int(4), rat_int(-1)),
        BasePolygon::Hexagon => (rat_int(1), rat_int(4), rat_int(-3)),
    }
}
