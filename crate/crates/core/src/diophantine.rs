//! The norm-equation machinery: solutions of (b²−a²)² = 2^k · n^b with
//! gcd(a,b) = 1 and a < b, in closed form and by brute force; the triangular
//! variant 9(b²−a²)² with its two congruence cases; and the hexagonal
//! families solving b²−a² = 2^K·3^L together with the unit-argument
//! elimination certificates.

use crate::error::{CoreError, Result};
use crate::intutil::{exact_nth_root, gcd_u64, strip_factor};
use crate::pyramid::BasePolygon;
use num_bigint::BigUint;
use std::collections::BTreeSet;
use std::fmt;

/// Which parametric family a solution belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SolutionFamily {
    /// (1, 2): the solution shared by every base, with odd part 3².
    Regular,
    /// (2^s − 1, 2^s + 1), norm 2^{2s+4}.
    TwoPowerPair { s: u32 },
    /// The extra triangular member (3, 5) arriving through the a ≡ 0 (mod 3)
    /// reduction.
    TriangularExtra,
    /// (3^s − 2^d, 3^s + 2^d) with 2^d < 3^s < 3·2^d.
    HexThreeMinusTwo { s: u32, d: u32 },
    /// (2^d − 3^s, 3^s + 2^d) with 3^s < 2^d < 3^{s+1}.
    HexTwoMinusThree { s: u32, d: u32 },
}

impl fmt::Display for SolutionFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolutionFamily::Regular => write!(f, "regular"),
            SolutionFamily::TwoPowerPair { s } => write!(f, "two-power-pair(s={s})"),
            SolutionFamily::TriangularExtra => write!(f, "triangular-extra"),
            SolutionFamily::HexThreeMinusTwo { s, d } => write!(f, "F1(s={s},d={d})"),
            SolutionFamily::HexTwoMinusThree { s, d } => write!(f, "F2(s={s},d={d})"),
        }
    }
}

/// A verified solution of the norm equation (or its tagged variant).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct NormEquationSolution {
    pub b: u64,
    pub a: u64,
    pub k: u32,
    pub n_odd: u64,
    pub family: SolutionFamily,
}

impl NormEquationSolution {
    /// Builds and self-validates: coprimality, a < b, and the defining
    /// identity for the family's variant.
    pub fn checked(a: u64, b: u64, k: u32, n_odd: u64, family: SolutionFamily) -> Result<Self> {
        let sol = NormEquationSolution {
            b,
            a,
            k,
            n_odd,
            family,
        };
        sol.validate()?;
        Ok(sol)
    }

    fn validate(&self) -> Result<()> {
        let (a, b) = (self.a as u128, self.b as u128);
        if self.a == 0 || self.a >= self.b || gcd_u64(self.a, self.b) != 1 {
            return Err(CoreError::Internal(format!(
                "solution pair ({}, {}) violates 0 < a < b coprime",
                self.a, self.b
            )));
        }
        if self.n_odd % 2 == 0 {
            return Err(CoreError::Internal(format!(
                "odd part {} is even",
                self.n_odd
            )));
        }
        let norm = (b * b - a * a).pow(2);
        match self.family {
            SolutionFamily::Regular
            | SolutionFamily::TwoPowerPair { .. }
            | SolutionFamily::TriangularExtra => {
                let rhs = (self.n_odd as u128)
                    .checked_pow(self.b as u32)
                    .filter(|_| self.k < 128)
                    .and_then(|p| (1u128 << self.k).checked_mul(p))
                    .ok_or_else(|| CoreError::Internal("identity overflow".into()))?;
                if norm != rhs {
                    return Err(CoreError::Internal(format!(
                        "(b^2-a^2)^2 = {norm} != 2^{} * {}^{}",
                        self.k, self.n_odd, self.b
                    )));
                }
                if let SolutionFamily::TwoPowerPair { s } = self.family {
                    if self.n_odd != 1
                        || self.a != (1 << s) - 1
                        || self.b != (1 << s) + 1
                        || self.k != 2 * s + 4
                    {
                        return Err(CoreError::Internal(format!(
                            "two-power tagging mismatch at ({}, {})",
                            self.a, self.b
                        )));
                    }
                }
                if self.family == SolutionFamily::TriangularExtra && self.a % 3 != 0 {
                    return Err(CoreError::Internal(
                        "triangular-extra members come from the a = 0 (mod 3) case".into(),
                    ));
                }
            }
            SolutionFamily::HexThreeMinusTwo { s, d }
            | SolutionFamily::HexTwoMinusThree { s, d } => {
                // b² − a² = 2^{d+2}·3^s exactly, with the even-exponent norm.
                let three_pow = 3u128.pow(s);
                let rhs = (1u128 << (d + 2)) * three_pow;
                if b * b - a * a != rhs || self.k != 2 * d + 4 || self.n_odd != 1 {
                    return Err(CoreError::Internal(format!(
                        "hex family identity fails at ({}, {}): b^2-a^2 = {} != 2^{}*3^{}",
                        self.a,
                        self.b,
                        b * b - a * a,
                        d + 2,
                        s
                    )));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for NormEquationSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(a,b)=({},{}) with 2^{} * {}^{} [{}]",
            self.a, self.b, self.k, self.n_odd, self.b, self.family
        )
    }
}

/// Rational primes that can divide the gcd ideal (z, conj z): {2} for the
/// square base, {2, 3} for triangle and hexagon.
pub fn norm_gcd_prime_support(base: BasePolygon) -> BTreeSet<u64> {
    match base {
        BasePolygon::Square => [2].into(),
        BasePolygon::Triangle | BasePolygon::Hexagon => [2, 3].into(),
    }
}

/// Closed-form solutions of (b²−a²)² = 2^k · n^b for b ≤ b_max: the
/// two-power pairs (2^s−1, 2^s+1) for the n = 1 branch, and an exhaustive
/// scan of b ≤ 7 for odd parts n ≥ 3 (3^b ≤ b⁴ forces b ≤ 7), which yields
/// exactly (1, 2).
pub fn solve_norm_equation(b_max: u64) -> Result<BTreeSet<NormEquationSolution>> {
    if b_max < 2 {
        return Err(CoreError::Domain(
            "norm equation search needs b_max >= 2".into(),
        ));
    }
    let mut out = BTreeSet::new();
    let mut s = 1u32;
    while (1u64 << s) < b_max {
        let (a, b) = ((1u64 << s) - 1, (1u64 << s) + 1);
        out.insert(NormEquationSolution::checked(
            a,
            b,
            2 * s + 4,
            1,
            SolutionFamily::TwoPowerPair { s },
        )?);
        s += 1;
    }
    for b in 2..=b_max.min(7) {
        for a in 1..b {
            if gcd_u64(a, b) != 1 {
                continue;
            }
            let norm = ((b * b - a * a) as u128).pow(2);
            let (k, odd) = strip_factor(norm, 2);
            if let Some(root) = exact_nth_root(&BigUint::from(odd), b as u32) {
                let n_odd: u64 = root.try_into().expect("root below u64");
                if n_odd >= 3 {
                    if (a, b) != (1, 2) {
                        return Err(CoreError::Internal(format!(
                            "unexpected odd-part solution ({a}, {b}) in the b <= 7 scan"
                        )));
                    }
                    out.insert(NormEquationSolution::checked(
                        a,
                        b,
                        k,
                        n_odd,
                        SolutionFamily::Regular,
                    )?);
                }
            }
        }
    }
    Ok(out)
}

/// Brute-force route: for every coprime a < b ≤ b_max, strip the twos from
/// (b²−a²)² and accept when the odd remainder is an exact b-th power.
pub fn oracle_norm_equation(b_max: u64) -> Result<BTreeSet<NormEquationSolution>> {
    if b_max < 2 {
        return Err(CoreError::Domain(
            "norm equation search needs b_max >= 2".into(),
        ));
    }
    let mut out = BTreeSet::new();
    for b in 2..=b_max {
        for a in 1..b {
            if gcd_u64(a, b) != 1 {
                continue;
            }
            let norm = ((b * b - a * a) as u128).pow(2);
            let (k, odd) = strip_factor(norm, 2);
            let Some(root) = exact_nth_root(&BigUint::from(odd), b as u32) else {
                continue;
            };
            let n_odd: u64 = root.try_into().expect("root below u64");
            let family = if n_odd == 1 {
                // b²−a² a power of two forces b−a = 2, b+a = 2^{s+1}.
                let s = (b - 1).trailing_zeros();
                if b - a != 2 || b != (1 << s) + 1 {
                    return Err(CoreError::Internal(format!(
                        "power-of-two solution ({a}, {b}) outside the two-power family"
                    )));
                }
                SolutionFamily::TwoPowerPair { s }
            } else {
                SolutionFamily::Regular
            };
            out.insert(NormEquationSolution::checked(a, b, k, n_odd, family)?);
        }
    }
    Ok(out)
}

/// The triangular norm equation 9(b²−a²)² = 2^k·3^l·n^b, by its two
/// congruence cases.
///
/// Case a ≢ 0 (mod 3): the odd part must carry the factor 3^b, so
/// 3^b ≤ 9b⁴ bounds b ≤ 10 and an exhaustive scan under 4a² < 3b² finds
/// exactly (1, 2). Case a ≡ 0 (mod 3): l = 2 reduces the equation to the
/// square-base form, whose solutions under a < (√3/2)b and 3 | a reduce to
/// (3, 5).
pub fn triangular_solutions() -> Result<BTreeSet<NormEquationSolution>> {
    let mut out = BTreeSet::new();
    // First case: forced n = 3m, b <= 10.
    for b in 2u64..=10 {
        for a in 1..b {
            if gcd_u64(a, b) != 1 || a % 3 == 0 || 4 * a * a >= 3 * b * b {
                continue;
            }
            let norm = 9u128 * ((b * b - a * a) as u128).pow(2);
            let (_, odd) = strip_factor(norm, 2);
            let Some(root) = exact_nth_root(&BigUint::from(odd), b as u32) else {
                continue;
            };
            let n: u64 = root.try_into().expect("root below u64");
            if n % 3 != 0 {
                continue;
            }
            if (a, b) != (1, 2) {
                return Err(CoreError::Internal(format!(
                    "unexpected first-case triangular solution ({a}, {b})"
                )));
            }
            // Stored in the reduced form (b²−a²)² = 3².
            out.insert(NormEquationSolution::checked(
                1,
                2,
                0,
                3,
                SolutionFamily::Regular,
            )?);
        }
    }
    // Second case: two-power pairs with 3 | a; the ratio constraint
    // 4a² < 3b² fails from s = 4 on and a = 2^s − 1 is divisible by 3
    // exactly for even s.
    let mut s = 2u32;
    loop {
        let (a, b) = ((1u64 << s) - 1, (1u64 << s) + 1);
        if 4 * a * a >= 3 * b * b {
            break;
        }
        if a % 3 == 0 {
            out.insert(NormEquationSolution::checked(
                a,
                b,
                2 * s + 4,
                1,
                SolutionFamily::TriangularExtra,
            )?);
        }
        s += 1;
    }
    Ok(out)
}

/// Members of the two hexagonal families within the given exponent bounds,
/// each verified to satisfy b²−a² = 2^{d+2}·3^s with gcd(a,b) = 1 and
/// a < b/2. The families require s ≥ 1: the equation they solve carries a
/// positive power of three (the 3-free solutions travel through the other
/// branch of the pipeline).
pub fn hexagonal_families(s_max: u32, d_max: u32) -> Result<BTreeSet<NormEquationSolution>> {
    if s_max < 1 || d_max < 1 {
        return Err(CoreError::Domain("family bounds must be at least 1".into()));
    }
    let mut out = BTreeSet::new();
    for s in 1..=s_max {
        let p3 = 3u128.pow(s);
        for d in 1..=d_max {
            let p2 = 1u128 << d;
            if p2 < p3 && p3 < 3 * p2 {
                let (a, b) = ((p3 - p2) as u64, (p3 + p2) as u64);
                out.insert(NormEquationSolution::checked(
                    a,
                    b,
                    2 * d + 4,
                    1,
                    SolutionFamily::HexThreeMinusTwo { s, d },
                )?);
            }
            if p3 < p2 && p2 < 3 * p3 {
                let (a, b) = ((p2 - p3) as u64, (p3 + p2) as u64);
                out.insert(NormEquationSolution::checked(
                    a,
                    b,
                    2 * d + 4,
                    1,
                    SolutionFamily::HexTwoMinusThree { s, d },
                )?);
            }
        }
    }
    Ok(out)
}

/// What the trivial-ideal conclusion contradicts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ContradictionTag {
    /// z/conj(z) would be a unit of an imaginary quadratic order, hence a
    /// root of unity, against the standing irrationality of the angle.
    UnitArgument,
}

/// A verified elimination of one hexagonal family member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminationCertificate {
    pub member: NormEquationSolution,
    /// The verified inequality b > d + 2, as (b, d + 2).
    pub exceeds_two_exponent: (u64, u64),
    /// The verified inequality b > s, as (b, s).
    pub exceeds_three_exponent: (u64, u64),
    pub contradiction: ContradictionTag,
}

/// Eliminates a family member: checks N(z) = 2^{2d+4}·3^{2s} exactly, then
/// the inequalities b > d+2 and b > s that force the ideal in the 2b-th
/// power factorization to be trivial, making z/conj(z) a root of unity.
pub fn hexagonal_eliminate(member: &NormEquationSolution) -> Result<EliminationCertificate> {
    let (s, d) = match member.family {
        SolutionFamily::HexThreeMinusTwo { s, d } | SolutionFamily::HexTwoMinusThree { s, d } => {
            (s, d)
        }
        _ => {
            return Err(CoreError::Domain(format!(
                "elimination applies to hexagonal family members, got {}",
                member.family
            )))
        }
    };
    let (a, b) = (member.a as u128, member.b as u128);
    let norm = (b * b - a * a).pow(2);
    let expected = (1u128 << (2 * d + 4)) * 3u128.pow(2 * s);
    if norm != expected {
        return Err(CoreError::Internal(format!(
            "norm identity N(z) = 2^{}*3^{} fails for ({}, {})",
            2 * d + 4,
            2 * s,
            member.a,
            member.b
        )));
    }
    if member.b <= (d as u64) + 2 || member.b <= s as u64 {
        return Err(CoreError::Internal(format!(
            "elimination inequalities fail at ({}, {}): b = {} vs d+2 = {}, s = {}",
            member.a,
            member.b,
            member.b,
            d + 2,
            s
        )));
    }
    Ok(EliminationCertificate {
        member: member.clone(),
        exceeds_two_exponent: (member.b, d as u64 + 2),
        exceeds_three_exponent: (member.b, s as u64),
        contradiction: ContradictionTag::UnitArgument,
    })
}

/// Brute-force exhaustiveness check: every coprime pair a < b/2 with
/// b²−a² = 2^K·3^L, L ≥ 1, must lie in one of the two families. Returns the
/// counterexamples (expected none).
pub fn family_exhaustiveness_counterexamples(b_max: u64) -> Vec<(u64, u64)> {
    let mut bad = Vec::new();
    for b in 3..=b_max {
        for a in 1..b.div_ceil(2) {
            if 2 * a >= b || gcd_u64(a, b) != 1 {
                continue;
            }
            let m = (b * b - a * a) as u128;
            let (big_k, rest) = strip_factor(m, 2);
            let (big_l, rest) = strip_factor(rest, 3);
            if rest != 1 || big_l == 0 {
                continue;
            }
            let in_family = big_k >= 3 && {
                let s = big_l;
                let d = big_k - 2;
                let p3 = 3u128.pow(s);
                let p2 = 1u128 << d;
                (p3 > p2 && p3 - p2 == a as u128 && p3 + p2 == b as u128)
                    || (p2 > p3 && p2 - p3 == a as u128 && p3 + p2 == b as u128)
            };
            if !in_family {
                bad.push((a, b));
            }
        }
    }
    bad
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairs(set: &BTreeSet<NormEquationSolution>) -> Vec<(u64, u64)> {
        set.iter().map(|s| (s.a, s.b)).collect()
    }

    #[test]
    fn prime_support() {
        assert_eq!(norm_gcd_prime_support(BasePolygon::Square), [2].into());
        assert_eq!(norm_gcd_prime_support(BasePolygon::Triangle), [2, 3].into());
        assert_eq!(norm_gcd_prime_support(BasePolygon::Hexagon), [2, 3].into());
    }

    #[test]
    fn closed_form_small_bounds() {
        assert_eq!(pairs(&solve_norm_equation(2).unwrap()), vec![(1, 2)]);
        assert_eq!(
            pairs(&solve_norm_equation(3).unwrap()),
            vec![(1, 2), (1, 3)]
        );
        assert_eq!(
            pairs(&solve_norm_equation(10).unwrap()),
            vec![(1, 2), (1, 3), (3, 5), (7, 9)]
        );
        assert!(solve_norm_equation(1).is_err());
    }

    #[test]
    fn oracle_spot_checks() {
        let set = oracle_norm_equation(5).unwrap();
        // (1,2): odd part 9 = 3².
        assert!(set
            .iter()
            .any(|s| (s.a, s.b) == (1, 2) && s.n_odd == 3 && s.k == 0));
        // (3,5): 256 = 2⁸.
        assert!(set
            .iter()
            .any(|s| (s.a, s.b) == (3, 5) && s.n_odd == 1 && s.k == 8));
        // (1,4): 225 is not a fourth power.
        assert!(!set.iter().any(|s| (s.a, s.b) == (1, 4)));
    }

    #[test]
    fn closed_form_matches_oracle_to_64() {
        assert_eq!(
            solve_norm_equation(64).unwrap(),
            oracle_norm_equation(64).unwrap()
        );
    }

    #[test]
    fn triangular_cases() {
        let set = triangular_solutions().unwrap();
        assert_eq!(pairs(&set), vec![(1, 2), (3, 5)]);
        let extra: Vec<_> = set
            .iter()
            .filter(|s| s.family == SolutionFamily::TriangularExtra)
            .collect();
        assert_eq!(extra.len(), 1);
        assert_eq!(extra[0].a % 3, 0);
    }

    #[test]
    fn hexagonal_members() {
        let set = hexagonal_families(3, 3).unwrap();
        let p = pairs(&set);
        assert!(p.contains(&(1, 5))); // F1, s=1, d=1: 24 = 2³·3
        assert!(p.contains(&(1, 7))); // F2, s=1, d=2: 48 = 2⁴·3
        assert!(p.contains(&(5, 13))); // F1, s=2, d=2: 144 = 2⁴·3²

        let only = hexagonal_families(1, 1).unwrap();
        assert_eq!(pairs(&only), vec![(1, 5)]);

        assert!(hexagonal_families(0, 3).is_err());
        assert!(hexagonal_families(3, 0).is_err());
    }

    #[test]
    fn elimination_certificates() {
        for m in hexagonal_families(20, 20).unwrap() {
            let cert = hexagonal_eliminate(&m).unwrap();
            assert!(cert.exceeds_two_exponent.0 > cert.exceeds_two_exponent.1);
            assert!(cert.exceeds_three_exponent.0 > cert.exceeds_three_exponent.1);
        }
        // Non-family members are refused.
        let reg = NormEquationSolution::checked(1, 2, 0, 3, SolutionFamily::Regular).unwrap();
        assert!(hexagonal_eliminate(&reg).is_err());
    }

    #[test]
    fn families_are_exhaustive_to_2000() {
        assert!(family_exhaustiveness_counterexamples(2000).is_empty());
    }

    #[test]
    fn coprimality_of_everything_emitted() {
        for s in solve_norm_equation(64).unwrap() {
            assert_eq!(gcd_u64(s.a, s.b), 1);
        }
        for s in hexagonal_families(10, 10).unwrap() {
            assert_eq!(gcd_u64(s.a, s.b), 1);
            assert!(2 * s.a < s.b);
        }
    }

    #[test]
    fn validation_rejects_bad_identities() {
        assert!(NormEquationSolution::checked(1, 2, 1, 3, SolutionFamily::Regular).is_err());
        assert!(NormEquationSolution::checked(2, 4, 0, 3, SolutionFamily::Regular).is_err());
        assert!(
            NormEquationSolution::checked(1, 3, 6, 1, SolutionFamily::TwoPowerPair { s: 2 })
                .is_err()
        );
    }
}
