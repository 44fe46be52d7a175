//! The full triviality pipeline: Case A (both dihedral angles rational
//! multiples of π), rationality of the length ratio v, denominator
//! admissibility, the norm-equation membership per base, the power-product
//! root-of-unity test, and the unit-argument elimination for the hexagonal
//! families. Every verdict is reached by exact arithmetic only.

use crate::cyclo::RationalAngle;
use crate::diophantine::{hexagonal_eliminate, NormEquationSolution, SolutionFamily};
use crate::error::{CoreError, Result};
use crate::exactnum::{rat, QuadElem, Rational};
use crate::intutil::strip_factor;
use crate::kummer::{admissibility, AdmissibilityReason};
use crate::pyramid::{
    dihedral_cosines, power_product, rational_angle_solutions, BasePolygon, PyramidSpec,
};
use num_bigint::BigUint;
use num_traits::Zero;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Trivial,
    Nontrivial,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Trivial => write!(f, "trivial"),
            Verdict::Nontrivial => write!(f, "nontrivial"),
        }
    }
}

/// One step of evidence in the obstruction chain. The last entry of a
/// nontrivial report is the decisive obstruction; earlier entries record
/// the checks that passed on the way.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ObstructionRecord {
    /// Both angles are rational multiples of π: the invariant vanishes.
    CaseAHit {
        theta: RationalAngle,
        phi: RationalAngle,
    },
    /// At least one dihedral cosine falls outside the Niven set.
    CaseAMiss {
        cos_two_theta: Rational,
        cos_phi: Rational,
    },
    /// The length ratio is rational: v = a/b.
    VRational { a: u64, b: u64 },
    /// The length ratio is irrational: decisive, the invariant cannot vanish.
    VIrrational { v_squared: Rational },
    /// b passed the admissibility screen; the field and its unity content.
    AdmissibleDenominator { field_d: u64, unity_order: u8 },
    /// Decisive: b ≡ 0 (mod 4).
    BMultipleOfFour,
    /// Decisive: an arithmetic constraint from the field's roots of unity
    /// failed (theoretically unreachable for valid input).
    UnityConstraintViolated,
    /// Decisive: the norm equation has no solution of the required shape.
    NormEquationFails { residual: String },
    /// The pair survived the norm equation; which family it sits in.
    NormEquationMember { family: String },
    /// Decisive: the power product is not a root of unity; its exact value.
    PiNotRootOfUnity { value: QuadElem, unity_order: u8 },
    /// Decisive: the hexagonal family member is eliminated by the unit
    /// argument, with the verified exponent bounds (b, d+2) and (b, s).
    HexagonalUnitElimination {
        exceeds_two_exponent: (u64, u64),
        exceeds_three_exponent: (u64, u64),
    },
}

impl fmt::Display for ObstructionRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ObstructionRecord::CaseAHit { theta, phi } => {
                write!(f, "case A: both angles rational (theta = {theta}, phi = {phi})")
            }
            ObstructionRecord::CaseAMiss { cos_two_theta, cos_phi } => write!(
                f,
                "case A misses: cos(2theta) = {cos_two_theta}, cos(phi) = {cos_phi} not both in {{0, +-1/2}}"
            ),
            ObstructionRecord::VRational { a, b } => write!(f, "length ratio v = {a}/{b} is rational"),
            ObstructionRecord::VIrrational { v_squared } => {
                write!(f, "length ratio irrational: v^2 = {v_squared} is not a rational square")
            }
            ObstructionRecord::AdmissibleDenominator { field_d, unity_order } => write!(
                f,
                "denominator admissible; field Q(i*sqrt({field_d})) with unity order {unity_order}"
            ),
            ObstructionRecord::BMultipleOfFour => write!(f, "b is a multiple of four"),
            ObstructionRecord::UnityConstraintViolated => {
                write!(f, "unity-content arithmetic constraint violated")
            }
            ObstructionRecord::NormEquationFails { residual } => {
                write!(f, "norm equation fails: {residual}")
            }
            ObstructionRecord::NormEquationMember { family } => {
                write!(f, "norm equation solvable: {family}")
            }
            ObstructionRecord::PiNotRootOfUnity { value, unity_order } => write!(
                f,
                "power product {value} is not a root of unity (field unity order {unity_order})"
            ),
            ObstructionRecord::HexagonalUnitElimination {
                exceeds_two_exponent: (b1, k1),
                exceeds_three_exponent: (b2, s2),
            } => write!(
                f,
                "hexagonal unit elimination: b = {b1} > {k1} and b = {b2} > {s2} force a trivial ideal, \
                 so z/conj(z) would be a root of unity"
            ),
        }
    }
}

/// Structured verdict with the evidence chain that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrivialityReport {
    pub spec: PyramidSpec,
    pub verdict: Verdict,
    pub chain: Vec<ObstructionRecord>,
}

impl TrivialityReport {
    /// The decisive record (last in the chain).
    pub fn decisive(&self) -> &ObstructionRecord {
        self.chain
            .last()
            .expect("a report always carries at least one record")
    }
}

fn niven_angle_from_cos(c: &Rational) -> Option<RationalAngle> {
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

/// Norm-equation membership for the base, on exact integers.
/// Returns Ok(solution-like description) or the failing residual.
enum Membership {
    Member { family: SolutionFamily },
    Fails { residual: String },
}

fn norm_membership(base: BasePolygon, a: u64, b: u64) -> Result<Membership> {
    let diff = (b as u128) * (b as u128) - (a as u128) * (a as u128);
    let norm = diff * diff;
    match base {
        BasePolygon::Square => {
            let (_, odd) = strip_factor(norm, 2);
            match crate::intutil::exact_nth_root(&BigUint::from(odd), b as u32) {
                Some(root) => {
                    let n_odd: u64 = root.try_into().expect("root fits u64");
                    let family = classify_square_family(a, b, n_odd)?;
                    Ok(Membership::Member { family })
                }
                None => Ok(Membership::Fails {
                    residual: format!(
                        "odd part {odd} of (b^2-a^2)^2 = {norm} is not a {b}-th power"
                    ),
                }),
            }
        }
        BasePolygon::Triangle => {
            if a % 3 != 0 {
                // 9(b²−a²)² = 2^k·n^b with 3 | n.
                let (_, odd) = strip_factor(9 * norm, 2);
                let ok = crate::intutil::exact_nth_root(&BigUint::from(odd), b as u32)
                    .map(|r| {
                        let n: u64 = r.try_into().expect("root fits u64");
                        n % 3 == 0
                    })
                    .unwrap_or(false);
                if ok {
                    Ok(Membership::Member {
                        family: SolutionFamily::Regular,
                    })
                } else {
                    Ok(Membership::Fails {
                        residual: format!(
                            "odd part {odd} of 9(b^2-a^2)^2 is not a {b}-th power of a multiple of 3"
                        ),
                    })
                }
            } else {
                // The factor 9 cancels: back to the square-base equation.
                let (_, odd) = strip_factor(norm, 2);
                match crate::intutil::exact_nth_root(&BigUint::from(odd), b as u32) {
                    Some(_) => Ok(Membership::Member {
                        family: SolutionFamily::TriangularExtra,
                    }),
                    None => Ok(Membership::Fails {
                        residual: format!(
                            "odd part {odd} of (b^2-a^2)^2 = {norm} is not a {b}-th power"
                        ),
                    }),
                }
            }
        }
        BasePolygon::Hexagon => {
            let (k, rest) = strip_factor(norm, 2);
            let (l, rest) = strip_factor(rest, 3);
            if l == 0 {
                match crate::intutil::exact_nth_root(&BigUint::from(rest), b as u32) {
                    Some(root) => {
                        let n_odd: u64 = root.try_into().expect("root fits u64");
                        let family = classify_square_family(a, b, n_odd)?;
                        Ok(Membership::Member { family })
                    }
                    None => Ok(Membership::Fails {
                        residual: format!(
                            "6-free part {rest} of (b^2-a^2)^2 is not a {b}-th power"
                        ),
                    }),
                }
            } else {
                // With threes present, the square norm forces even exponents
                // and a trivial 6-free part.
                if rest == 1 && k % 2 == 0 && l % 2 == 0 {
                    let (s, big_k) = (l / 2, k / 2);
                    if big_k < 3 {
                        return Err(CoreError::Internal(format!(
                            "(b^2-a^2) = 2^{big_k}*3^{s} with two-exponent below 3 at ({a}, {b})"
                        )));
                    }
                    let d = big_k - 2;
                    let p3 = 3u128.pow(s);
                    let p2 = 1u128 << d;
                    let family = if p3 > p2 && p3 - p2 == a as u128 {
                        SolutionFamily::HexThreeMinusTwo { s, d }
                    } else if p2 > p3 && p2 - p3 == a as u128 {
                        SolutionFamily::HexTwoMinusThree { s, d }
                    } else {
                        return Err(CoreError::Internal(format!(
                            "({a}, {b}) solves b^2-a^2 = 2^{big_k}*3^{s} outside both families"
                        )));
                    };
                    Ok(Membership::Member { family })
                } else {
                    Ok(Membership::Fails {
                        residual: format!(
                            "(b^2-a^2)^2 = 2^{k}*3^{l}*{rest}: 6-free part must be a {b}-th power \
                             and the exponents even with remainder 1"
                        ),
                    })
                }
            }
        }
    }
}

fn classify_square_family(a: u64, b: u64, n_odd: u64) -> Result<SolutionFamily> {
    if n_odd == 1 {
        let s = (b - 1).trailing_zeros();
        if b == (1 << s) + 1 && a == (1 << s) - 1 {
            Ok(SolutionFamily::TwoPowerPair { s })
        } else {
            Err(CoreError::Internal(format!(
                "power-of-two norm at ({a}, {b}) outside the two-power family"
            )))
        }
    } else {
        Ok(SolutionFamily::Regular)
    }
}

/// Runs the full obstruction pipeline on a validated pyramid.
///
/// Order: Case A on the exact dihedral cosines (cross-checked against the
/// two-cosine solver); rationality of v; admissibility of b; norm-equation
/// membership; then either the hexagonal unit elimination (family members)
/// or the power-product root-of-unity test. The chain records every piece
/// of evidence; the last record is decisive.
pub fn triviality_verdict(spec: &PyramidSpec) -> Result<TrivialityReport> {
    let base = spec.base();
    let mut chain = Vec::new();

    // Case A: both cosines in the Niven set means both angles rational.
    let h_sq = spec.height_squared();
    let (cos_two_theta, cos_phi) = dihedral_cosines(base, &h_sq);
    let niven = (
        niven_angle_from_cos(&cos_two_theta),
        niven_angle_from_cos(&cos_phi),
    );
    if let (Some(two_theta), Some(phi)) = niven {
        let theta = two_theta.half();
        // Independent route: the two-cosine classification must list this pair.
        if !rational_angle_solutions(base).contains(&(theta, phi)) {
            return Err(CoreError::Internal(format!(
                "Niven hit (2theta = {two_theta}, phi = {phi}) missing from the relation solutions at {spec}"
            )));
        }
        chain.push(ObstructionRecord::CaseAHit { theta, phi });
        return Ok(TrivialityReport {
            spec: spec.clone(),
            verdict: Verdict::Trivial,
            chain,
        });
    }
    chain.push(ObstructionRecord::CaseAMiss {
        cos_two_theta: cos_two_theta.clone(),
        cos_phi: cos_phi.clone(),
    });

    // Case B needs a rational length ratio.
    let Some((a, b)) = spec.rational_ratio() else {
        let v_squared = base.sin_sq() / (Rational::from_integer(1.into()) + &h_sq);
        chain.push(ObstructionRecord::VIrrational { v_squared });
        return Ok(TrivialityReport {
            spec: spec.clone(),
            verdict: Verdict::Nontrivial,
            chain,
        });
    };
    chain.push(ObstructionRecord::VRational { a, b });

    // Denominator admissibility.
    let adm = admissibility(spec)?;
    match adm.reason {
        AdmissibilityReason::BMultipleOfFour => {
            chain.push(ObstructionRecord::BMultipleOfFour);
            return Ok(TrivialityReport {
                spec: spec.clone(),
                verdict: Verdict::Nontrivial,
                chain,
            });
        }
        AdmissibilityReason::UnityConstraintViolated => {
            chain.push(ObstructionRecord::UnityConstraintViolated);
            return Ok(TrivialityReport {
                spec: spec.clone(),
                verdict: Verdict::Nontrivial,
                chain,
            });
        }
        AdmissibilityReason::Ok => {
            chain.push(ObstructionRecord::AdmissibleDenominator {
                field_d: adm.unity.field_d,
                unity_order: adm.unity.group_order,
            });
        }
    }

    // Norm-equation membership.
    let family = match norm_membership(base, a, b)? {
        Membership::Fails { residual } => {
            chain.push(ObstructionRecord::NormEquationFails { residual });
            return Ok(TrivialityReport {
                spec: spec.clone(),
                verdict: Verdict::Nontrivial,
                chain,
            });
        }
        Membership::Member { family } => {
            chain.push(ObstructionRecord::NormEquationMember {
                family: family.to_string(),
            });
            family
        }
    };

    // Hexagonal family members fall to the unit argument.
    if let SolutionFamily::HexThreeMinusTwo { d, .. } | SolutionFamily::HexTwoMinusThree { d, .. } =
        family
    {
        let member = NormEquationSolution::checked(a, b, 2 * d + 4, 1, family)?;
        let cert = hexagonal_eliminate(&member)?;
        chain.push(ObstructionRecord::HexagonalUnitElimination {
            exceeds_two_exponent: cert.exceeds_two_exponent,
            exceeds_three_exponent: cert.exceeds_three_exponent,
        });
        return Ok(TrivialityReport {
            spec: spec.clone(),
            verdict: Verdict::Nontrivial,
            chain,
        });
    }

    // Survivors: the power product must be a root of unity for the
    // invariant to vanish.
    let pi = power_product(spec)?;
    let order = adm.unity.group_order;
    if !pi.is_root_of_unity() {
        chain.push(ObstructionRecord::PiNotRootOfUnity {
            value: pi,
            unity_order: order,
        });
        return Ok(TrivialityReport {
            spec: spec.clone(),
            verdict: Verdict::Nontrivial,
            chain,
        });
    }

    // A root-of-unity power product outside Case A would vanish the
    // invariant against the classification; reaching this is a bug.
    Err(CoreError::Internal(format!(
        "power product {pi} is a root of unity outside case A at {spec}"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h2(n: u8, num: i64, den: i64) -> PyramidSpec {
        PyramidSpec::with_height_squared(BasePolygon::from_n(n).unwrap(), rat(num, den)).unwrap()
    }

    fn ratio(n: u8, a: u64, b: u64) -> PyramidSpec {
        PyramidSpec::with_ratio(BasePolygon::from_n(n).unwrap(), a, b).unwrap()
    }

    #[test]
    fn cube_piece_is_trivial() {
        let r = triviality_verdict(&h2(4, 1, 2)).unwrap();
        assert_eq!(r.verdict, Verdict::Trivial);
        assert!(matches!(r.decisive(), ObstructionRecord::CaseAHit { .. }));
    }

    #[test]
    fn pi_obstruction_at_one_third() {
        let r = triviality_verdict(&ratio(4, 1, 3)).unwrap();
        assert_eq!(r.verdict, Verdict::Nontrivial);
        match r.decisive() {
            ObstructionRecord::PiNotRootOfUnity { value, unity_order } => {
                assert_eq!(*value, QuadElem::new(-7, rat(87, 256), rat(91, 256)));
                assert_eq!(*unity_order, 2);
            }
            other => panic!("expected power-product obstruction, got {other}"),
        }
    }

    #[test]
    fn norm_equation_obstruction_at_two_fifths() {
        let r = triviality_verdict(&ratio(4, 2, 5)).unwrap();
        assert_eq!(r.verdict, Verdict::Nontrivial);
        assert!(matches!(
            r.decisive(),
            ObstructionRecord::NormEquationFails { .. }
        ));
    }

    #[test]
    fn b_multiple_of_four_obstruction() {
        let r = triviality_verdict(&ratio(4, 1, 4)).unwrap();
        assert_eq!(r.verdict, Verdict::Nontrivial);
        assert!(matches!(r.decisive(), ObstructionRecord::BMultipleOfFour));
    }

    #[test]
    fn irrational_ratio_obstruction() {
        // h² = 4: v² = 1/10 is not a rational square.
        let r = triviality_verdict(&h2(4, 4, 1)).unwrap();
        assert_eq!(r.verdict, Verdict::Nontrivial);
        assert!(matches!(
            r.decisive(),
            ObstructionRecord::VIrrational { .. }
        ));
    }

    #[test]
    fn hexagonal_family_elimination() {
        let r = triviality_verdict(&ratio(6, 1, 5)).unwrap();
        assert_eq!(r.verdict, Verdict::Nontrivial);
        assert!(matches!(
            r.decisive(),
            ObstructionRecord::HexagonalUnitElimination { .. }
        ));
        let r = triviality_verdict(&ratio(6, 1, 7)).unwrap();
        assert!(matches!(
            r.decisive(),
            ObstructionRecord::HexagonalUnitElimination { .. }
        ));
    }

    #[test]
    fn hexagon_l_zero_pi_obstruction() {
        let r = triviality_verdict(&ratio(6, 1, 3)).unwrap();
        assert_eq!(r.verdict, Verdict::Nontrivial);
        match r.decisive() {
            ObstructionRecord::PiNotRootOfUnity { value, .. } => {
                assert_eq!(*value, QuadElem::new(-15, rat(-1673, 2048), rat(305, 2048)));
            }
            other => panic!("expected power-product obstruction, got {other}"),
        }
    }

    #[test]
    fn triangle_verdicts() {
        // (1,2): survives to the power product, which is (e^{iφ})⁴.
        let r = triviality_verdict(&ratio(3, 1, 2)).unwrap();
        assert_eq!(r.verdict, Verdict::Nontrivial);
        assert!(matches!(
            r.decisive(),
            ObstructionRecord::PiNotRootOfUnity { .. }
        ));
        // (3,5): the a ≡ 0 (mod 3) reduction; the product lives in Q(i√39).
        let spec = ratio(3, 3, 5);
        assert_eq!(
            crate::pyramid::exponential_field_data(&spec)
                .unwrap()
                .field_d,
            39
        );
        let r = triviality_verdict(&spec).unwrap();
        assert_eq!(r.verdict, Verdict::Nontrivial);
        assert!(matches!(
            r.decisive(),
            ObstructionRecord::PiNotRootOfUnity { .. }
        ));
    }

    #[test]
    fn small_sweep_only_half_is_trivial() {
        for p in 1i64..=12 {
            for q in 1i64..=12 {
                let spec = h2(4, p, q);
                let r = triviality_verdict(&spec).unwrap();
                let expect = if rat(p, q) == rat(1, 2) {
                    Verdict::Trivial
                } else {
                    Verdict::Nontrivial
                };
                assert_eq!(r.verdict, expect, "h^2 = {p}/{q}");
            }
        }
    }
}
