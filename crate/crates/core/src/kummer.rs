//! Galois obstruction predicates for abelian Kummer extensions over
//! imaginary quadratic fields with few roots of unity: square tests through
//! the ε/√d scaling, the quartic-irreducibility condition (α ∉ E² and
//! −4α ∉ E⁴), linear disjointness from 2-power cyclotomic fields, the
//! necessary condition tags for K_N(α)/E abelian, and the admissibility of
//! the ratio denominator b.

use crate::error::{CoreError, Result};
use crate::exactnum::{
    rat_int, rational_nth_root, rational_sqrt, squarefree_decompose, unity_order, QuadElem,
    Rational,
};
use crate::intutil::{exact_sqrt_u128, gcd_u64};
use crate::pyramid::{exponential_field_data, BasePolygon, PyramidSpec};
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// The group of roots of unity contained in Q(i√D).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UnityContent {
    /// Squarefree positive D.
    pub field_d: u64,
    /// 4 for Q(i), 6 for Q(i√3), otherwise 2.
    pub group_order: u8,
}

/// Classifies μ ∩ Q(i√D): a quadratic field can only contain roots of unity
/// of order dividing 4 or 6.
pub fn unity_content(field_d: u64) -> UnityContent {
    UnityContent {
        field_d,
        group_order: unity_order(-(field_d as i64)),
    }
}

/// Outcome of the square tests for α = (ε/√d)² with ε ∈ E = Q(i√D), d > 0
/// rational: α ∈ E² iff d is a rational square, and failing that,
/// −α ∈ E² iff D/d is a rational square. When α is itself a square, −α is
/// one exactly when −1 is, i.e. in Q(i).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SquareClassification {
    pub alpha_is_square: bool,
    pub minus_alpha_is_square: bool,
}

pub fn square_classification(epsilon: &QuadElem, d: &Rational) -> Result<SquareClassification> {
    if !d.is_positive() {
        return Err(CoreError::Domain(format!(
            "scaling d must be positive, got {d}"
        )));
    }
    if epsilon.surd_coeff().is_zero() || epsilon.d() >= 0 {
        return Err(CoreError::Domain(
            "epsilon must have a nonzero imaginary part in an imaginary field".into(),
        ));
    }
    let big_d = epsilon.d().unsigned_abs();
    let alpha_is_square = rational_sqrt(d).is_some();
    let minus_alpha_is_square = if alpha_is_square {
        big_d == 1
    } else {
        rational_sqrt(&(rat_int(big_d as i64) / d)).is_some()
    };
    Ok(SquareClassification {
        alpha_is_square,
        minus_alpha_is_square,
    })
}

/// α ∉ E² and −4α ∉ E⁴, decided by square-root chains: −4α is a fourth
/// power exactly when it is a square whose square roots include a square.
pub fn quartic_irreducibility(alpha: &QuadElem) -> bool {
    assert!(!alpha.is_zero(), "alpha must be nonzero");
    if alpha.sqrt_in_field().is_some() {
        return false;
    }
    let minus_four_alpha = alpha.scale(&rat_int(-4));
    match minus_four_alpha.sqrt_in_field() {
        None => true,
        Some(s) => s.sqrt_in_field().is_none() && (-&s).sqrt_in_field().is_none(),
    }
}

/// Linear disjointness of Q(i√D) from Q(μ_{2^n}), n ≥ 2: the quadratic
/// subfields of the 2-power cyclotomic tower are Q(i), Q(√2), Q(i√2), and
/// Q(μ_4) contains only Q(i). So the intersection is Q unless D = 1, or
/// D = 2 once 2^n ≥ 8.
pub fn cyclotomic_disjointness(two_power_exponent: u32, field_d: u64) -> bool {
    assert!(two_power_exponent >= 2, "exponent must be at least 2");
    if two_power_exponent == 2 {
        field_d != 1
    } else {
        field_d != 1 && field_d != 2
    }
}

/// Necessary condition for K_N(α)/E to be abelian, per the parity of N.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AbelianRequirement {
    /// N = 2: every quadratic extension is abelian.
    UnconditionallyAbelian,
    /// N odd: α must be an N-th power in E.
    NthPower,
    /// N = 2·odd: α must be an (N/2)-th power in E.
    HalfNthPower,
    /// 4 | N with the quartic-irreducibility and disjointness assumptions:
    /// α = −λ^{N/2} for some λ ∈ E; for N = 4 this says −α ∈ E².
    MinusLambdaHalfPower,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KummerError {
    #[error("unity content violation: Q(i*sqrt({field_d})) contains roots of unity of order {order} dividing N = {n}")]
    UnityContentViolation { field_d: u64, order: u8, n: u64 },
    #[error("preconditions not met for the 2-power branch at N = {n}: no verdict")]
    PreconditionsNotMet { n: u64 },
}

/// The condition tag for K_N(α)/E abelian. Requires E ∩ μ_N ⊆ {±1}; in the
/// 4 | N branch additionally requires the two standing assumptions, without
/// which no verdict is available.
pub fn abelian_kummer_requirement(
    alpha: &QuadElem,
    n: u64,
) -> std::result::Result<AbelianRequirement, KummerError> {
    assert!(n >= 2, "N must be at least 2");
    assert!(!alpha.is_zero(), "alpha must be nonzero");
    assert!(
        alpha.d() < 0,
        "the implemented fragment covers imaginary fields"
    );
    let field_d = alpha.d().unsigned_abs();
    let order = unity_content(field_d).group_order;
    if gcd_u64(order as u64, n) > 2 {
        return Err(KummerError::UnityContentViolation { field_d, order, n });
    }
    if n == 2 {
        return Ok(AbelianRequirement::UnconditionallyAbelian);
    }
    if n % 2 == 1 {
        return Ok(AbelianRequirement::NthPower);
    }
    if n % 4 != 0 {
        return Ok(AbelianRequirement::HalfNthPower);
    }
    let two_exp = n.trailing_zeros();
    if quartic_irreducibility(alpha) && cyclotomic_disjointness(two_exp, field_d) {
        Ok(AbelianRequirement::MinusLambdaHalfPower)
    } else {
        Err(KummerError::PreconditionsNotMet { n })
    }
}

/// Outcome of the bounded N-th power search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerTestResult {
    pub is_power: bool,
    /// λ with λ^N = α, when found.
    pub witness: Option<QuadElem>,
}

/// Decides α ∈ E^N for odd N over an imaginary quadratic field, by the norm
/// necessary condition followed by a finite witness search: norm(λ) is the
/// rational N-th root ρ of norm(α), and writing λ = (u + v·i√D)/w, the
/// positive definite form u² + D·v² = ρ·w² has finitely many integer
/// solutions for each candidate denominator w (w is bounded through the
/// denominator of α).
pub fn nth_power_witness(alpha: &QuadElem, n: u32) -> Result<PowerTestResult> {
    assert!(n % 2 == 1 && n >= 3, "witness search is for odd N >= 3");
    if alpha.d() >= 0 {
        return Err(CoreError::Unsupported(
            "N-th power witness search covers imaginary fields only".into(),
        ));
    }
    let big_d = alpha.d().unsigned_abs() as u128;
    let norm = alpha.norm();
    let Some(rho) = rational_nth_root(&norm, n) else {
        return Ok(PowerTestResult {
            is_power: false,
            witness: None,
        });
    };
    // Smallest t with den(α) | t^n, then also 2t for the half-integer ring.
    let den_lcm: u64 = {
        let dx: u64 = alpha.re().denom().try_into().map_err(|_| {
            CoreError::Unsupported("witness search input exceeds u64 denominators".into())
        })?;
        let dy: u64 = alpha.surd_coeff().denom().try_into().map_err(|_| {
            CoreError::Unsupported("witness search input exceeds u64 denominators".into())
        })?;
        num_integer::lcm(dx, dy)
    };
    let mut t = 1u64;
    for (p, e) in crate::intutil::factor_u64(den_lcm) {
        t *= p.pow(e.div_ceil(n));
    }
    for w in [t, 2 * t] {
        // u² + D v² = ρ w² over the integers.
        let s_rat = &rho * rat_int((w * w) as i64);
        if !s_rat.denom().is_one() || s_rat.is_negative() {
            continue;
        }
        let s: u128 = s_rat
            .numer()
            .try_into()
            .map_err(|_| CoreError::Unsupported("witness search bound exceeds u128".into()))?;
        let mut v = 0u128;
        while big_d * v * v <= s {
            if let Some(u) = exact_sqrt_u128(s - big_d * v * v) {
                for (us, vs) in [(1i64, 1i64), (1, -1), (-1, 1), (-1, -1)] {
                    let cand = QuadElem::new(
                        alpha.d(),
                        Rational::new((us * u as i64).into(), (w as i64).into()),
                        Rational::new((vs * v as i64).into(), (w as i64).into()),
                    );
                    if &cand.pow(n as i64) == alpha {
                        return Ok(PowerTestResult {
                            is_power: true,
                            witness: Some(cand),
                        });
                    }
                }
            }
            v += 1;
        }
    }
    Ok(PowerTestResult {
        is_power: false,
        witness: None,
    })
}

/// Why a denominator b is rejected, when it is.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AdmissibilityReason {
    Ok,
    BMultipleOfFour,
    UnityConstraintViolated,
}

/// Verdict on the ratio denominator b for a given base, with the unity
/// content of the associated field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibilityVerdict {
    pub admissible: bool,
    pub reason: AdmissibilityReason,
    pub unity: UnityContent,
}

/// The ε and d with α = (ε/√d)² for each base, feeding the square tests:
/// ε = a + i√(b²−2a²), d = b²−a² for the square; ε = a + i√(3b²−4a²),
/// d = 3(b²−a²) for the triangle; ε = 3a + i√(3b²−12a²), d = 3(b²−a²) for
/// the hexagon.
pub fn square_test_data(spec: &PyramidSpec) -> Result<(QuadElem, Rational)> {
    let (a, b) = spec.rational_ratio().ok_or_else(|| {
        CoreError::Domain("square-test data needs a rational length ratio".into())
    })?;
    let (a, b) = (a as i64, b as i64);
    let (re, radicand, d) = match spec.base() {
        BasePolygon::Square => (a, b * b - 2 * a * a, b * b - a * a),
        BasePolygon::Triangle => (a, 3 * b * b - 4 * a * a, 3 * (b * b - a * a)),
        BasePolygon::Hexagon => (3 * a, 3 * b * b - 12 * a * a, 3 * (b * b - a * a)),
    };
    let (coeff, d0) = squarefree_decompose(&rat_int(radicand))?;
    let epsilon = QuadElem::new(-(d0 as i64), rat_int(re), coeff);
    let d = rat_int(d);
    // ε²/d must reproduce α.
    let alpha = exponential_field_data(spec)?.alpha;
    let check = (&epsilon * &epsilon).scale(&d.clone().recip());
    if check != alpha {
        return Err(CoreError::Internal(format!(
            "square-test scaling mismatch for {spec}: (eps/sqrt(d))^2 = {check} != {alpha}"
        )));
    }
    Ok((epsilon, d))
}

/// Admissibility of b: rejects multiples of four; verifies (as an internal
/// consistency check, via the square tests) that the quartic-irreducibility
/// condition holds whenever the theory promises it; and enforces the
/// arithmetic constraints tied to extra roots of unity in the field.
pub fn admissibility(spec: &PyramidSpec) -> Result<AdmissibilityVerdict> {
    let (a, b) = spec
        .rational_ratio()
        .ok_or_else(|| CoreError::Domain("admissibility needs a rational length ratio".into()))?;
    let data = exponential_field_data(spec)?;
    let unity = unity_content(data.field_d);

    let a1_promised = match spec.base() {
        BasePolygon::Square => b % 2 == 0,
        BasePolygon::Triangle | BasePolygon::Hexagon => b % 4 == 0,
    };
    if a1_promised {
        let (epsilon, d) = square_test_data(spec)?;
        let sc = square_classification(&epsilon, &d)?;
        let direct_a1 = quartic_irreducibility(&data.alpha);
        if sc.alpha_is_square || sc.minus_alpha_is_square || !direct_a1 {
            return Err(CoreError::Internal(format!(
                "irreducibility condition expected to hold at {spec} but failed \
                 (square tests: {sc:?}, direct: {direct_a1})"
            )));
        }
    }

    if b % 4 == 0 {
        return Ok(AdmissibilityVerdict {
            admissible: false,
            reason: AdmissibilityReason::BMultipleOfFour,
            unity,
        });
    }
    let unity_ok = match (spec.base(), data.field_d) {
        (BasePolygon::Square, 1) => b % 2 == 1,
        (BasePolygon::Triangle | BasePolygon::Hexagon, 1) => b % 4 != 0,
        (BasePolygon::Square, 3) => false, // no square-base field is Q(i√3)
        (BasePolygon::Triangle, 3) => a % 3 == 0 && b % 3 != 0,
        (BasePolygon::Hexagon, 3) => b % 3 != 0,
        _ => true,
    };
    if !unity_ok {
        return Ok(AdmissibilityVerdict {
            admissible: false,
            reason: AdmissibilityReason::UnityConstraintViolated,
            unity,
        });
    }
    Ok(AdmissibilityVerdict {
        admissible: true,
        reason: AdmissibilityReason::Ok,
        unity,
    })
}
