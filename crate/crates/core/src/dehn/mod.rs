//! The Dehn-tensor fragment of R ⊗_Z R/πZ that the pyramids generate:
//! lengths are canonical surds r·√m, angles are either rational multiples of
//! π or half-arguments of exact unit-norm quadratic field elements.
//!
//! Zero-testing is exact. Factoring out torsion, R ⊗_Z R/πZ is the
//! Q-vector-space tensor R ⊗_Q (R/πQ); since surds with distinct squarefree
//! parts are linearly independent over Q, a tensor vanishes exactly when
//! each same-radicand group vanishes, and a group vanishes exactly when its
//! integer-weighted angle sum lies in πQ — decidable through root-of-unity
//! tests in the quadratic fields involved.

mod verdict;

pub use verdict::{triviality_verdict, ObstructionRecord, TrivialityReport, Verdict};

use crate::cyclo::RationalAngle;
use crate::error::{CoreError, Result};
use crate::exactnum::{rat_int, squarefree_decompose, unity_order, QuadElem, Rational, SurdLength};
use crate::intutil;
use crate::pyramid::{dihedral_cosines, PyramidSpec};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// An angle class in R/πZ, stored exactly.
///
/// `HalfArg(z)` is Arg(z)/2 for a unit-norm z = e^{2iθ} with positive
/// imaginary part; construction resolves rationality, so a surviving
/// `HalfArg` is known irrational (z failed the root-of-unity test of its
/// field). Rational multiples of π become `RationalPi` and vanish in
/// tensors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Angle {
    RationalPi(RationalAngle),
    HalfArg(QuadElem),
}

impl Angle {
    /// Builds the class of Arg(z)/2 from z = e^{2iθ} (unit norm required),
    /// returning the canonical angle and a sign: the input class equals
    /// sign · (returned class) in R/πZ.
    pub fn from_double_exponential(z: &QuadElem) -> (Angle, i8) {
        assert!(
            z.norm().is_one(),
            "angle carrier must have unit norm, got {z}"
        );
        let mut sign = 1i8;
        let mut z = z.clone();
        if z.surd_coeff().is_negative() {
            z = z.conj();
            sign = -sign;
        }
        if z.surd_coeff().is_zero() {
            // z = ±1: θ ∈ {0, π/2} mod π.
            let a = if z.re().is_one() {
                RationalAngle::zero()
            } else {
                RationalAngle::new(1, 2)
            };
            return (Angle::RationalPi(a), sign);
        }
        let order = unity_order(z.d());
        if z.pow(order as i64).is_one() {
            // z = e^{2πij/N}: θ = πj/N mod π.
            let zeta = primitive_unity_root(z.d());
            let mut power = zeta.clone();
            for j in 1..order {
                if power == z {
                    return (
                        Angle::RationalPi(RationalAngle::new(j as i64, order as i64)),
                        sign,
                    );
                }
                power = &power * &zeta;
            }
            unreachable!("root of unity must match a power of the field's primitive root");
        }
        (Angle::HalfArg(z), sign)
    }

    /// The class of a full argument: Arg(w) for unit-norm w, via w².
    pub fn from_exponential(w: &QuadElem) -> (Angle, i8) {
        Angle::from_double_exponential(&(w * w))
    }

    /// The angle in (0, π) with the given rational cosine.
    pub fn from_cosine(c: &Rational) -> Result<(Angle, i8)> {
        Ok(Angle::from_exponential(&unit_from_cos(c)?))
    }

    pub fn is_rational_pi(&self) -> bool {
        matches!(self, Angle::RationalPi(_))
    }

    fn sort_key(&self) -> (i64, Rational, Rational) {
        match self {
            Angle::RationalPi(a) => (0, a.fraction(), Rational::zero()),
            Angle::HalfArg(z) => (z.d(), z.re().clone(), z.surd_coeff().clone()),
        }
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Angle::RationalPi(a) => write!(f, "{a}"),
            Angle::HalfArg(z) => write!(f, "arg({z})/2"),
        }
    }
}

/// A generator of the roots of unity of Q(√d).
fn primitive_unity_root(d: i64) -> QuadElem {
    match d {
        -1 => QuadElem::new(-1, Rational::zero(), Rational::one()),
        -3 => QuadElem::new(
            -3,
            Rational::new(1.into(), 2.into()),
            Rational::new(1.into(), 2.into()),
        ),
        _ => QuadElem::from_int(-1),
    }
}

/// e^{iψ} = c + i√(1−c²) for the ψ ∈ [0, π] with the given rational cosine.
fn unit_from_cos(c: &Rational) -> Result<QuadElem> {
    let one = Rational::one();
    if c.abs() > one {
        return Err(CoreError::Domain(format!(
            "|cos| must be at most 1, got {c}"
        )));
    }
    let sin_sq = &one - c * c;
    if sin_sq.is_zero() {
        return Ok(QuadElem::from_rational(c.clone()));
    }
    let (r, m) = squarefree_decompose(&sin_sq)?;
    Ok(QuadElem::new(-(m as i64), c.clone(), r))
}

/// One elementary term: multiplicity · (length ⊗ angle). Canonical tensors
/// keep multiplicity in {−1, +1} with the magnitude folded into the length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorTerm {
    pub length: SurdLength,
    pub angle: Angle,
    pub multiplicity: i64,
}

impl fmt::Display for TensorTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.multiplicity < 0 { "-" } else { "" };
        write!(f, "{}{} (x) {}", sign, self.length, self.angle)
    }
}

/// A formal finite sum of (surd length ⊗ angle) terms in R ⊗_Z R/πZ.
///
/// Canonical form: no rational-π angles, no repeated (radicand, angle)
/// pair, terms sorted, multiplicities ±1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DehnTensor {
    terms: Vec<TensorTerm>,
}

impl DehnTensor {
    pub fn zero() -> Self {
        DehnTensor { terms: Vec::new() }
    }

    /// Builds a tensor from raw (length, angle, multiplicity) triples and
    /// canonicalizes.
    pub fn from_terms(raw: Vec<(SurdLength, Angle, i64)>) -> Self {
        type GroupKey = (u64, (i64, Rational, Rational));
        let mut grouped: BTreeMap<GroupKey, (Rational, Angle)> = BTreeMap::new();
        for (length, angle, mult) in raw {
            if angle.is_rational_pi() || mult == 0 {
                continue;
            }
            let key = (length.radicand(), angle.sort_key());
            let contribution = length.coeff() * rat_int(mult);
            grouped
                .entry(key)
                .and_modify(|(c, _)| *c = &*c + &contribution)
                .or_insert((contribution, angle));
        }
        let mut terms = Vec::new();
        for ((m, _), (coeff, angle)) in grouped {
            if coeff.is_zero() {
                continue;
            }
            terms.push(TensorTerm {
                length: SurdLength::new(coeff.abs(), m),
                angle,
                multiplicity: if coeff.is_negative() { -1 } else { 1 },
            });
        }
        DehnTensor { terms }
    }

    pub fn single(length: SurdLength, angle: Angle, multiplicity: i64) -> Self {
        DehnTensor::from_terms(vec![(length, angle, multiplicity)])
    }

    pub fn terms(&self) -> &[TensorTerm] {
        &self.terms
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn add(&self, other: &DehnTensor) -> DehnTensor {
        let mut raw: Vec<(SurdLength, Angle, i64)> = Vec::new();
        for t in self.terms.iter().chain(&other.terms) {
            raw.push((t.length.clone(), t.angle.clone(), t.multiplicity));
        }
        DehnTensor::from_terms(raw)
    }

    pub fn neg(&self) -> DehnTensor {
        DehnTensor {
            terms: self
                .terms
                .iter()
                .map(|t| TensorTerm {
                    length: t.length.clone(),
                    angle: t.angle.clone(),
                    multiplicity: -t.multiplicity,
                })
                .collect(),
        }
    }

    pub fn sub(&self, other: &DehnTensor) -> DehnTensor {
        self.add(&other.neg())
    }

    /// Homothety: every length is multiplied by λ > 0.
    pub fn scale(&self, lambda: &SurdLength) -> DehnTensor {
        DehnTensor::from_terms(
            self.terms
                .iter()
                .map(|t| (t.length.mul(lambda), t.angle.clone(), t.multiplicity))
                .collect(),
        )
    }

    /// Integer scaling (k copies of the solid).
    pub fn scale_int(&self, k: i64) -> DehnTensor {
        DehnTensor::from_terms(
            self.terms
                .iter()
                .map(|t| (t.length.clone(), t.angle.clone(), t.multiplicity * k))
                .collect(),
        )
    }

    /// Combines terms with Q-proportional lengths (same radicand) living in
    /// the same quadratic field: rational weights clear to integers, which
    /// cross the tensor onto the angles, leaving one term per (radicand,
    /// field) whose angle is the half-argument of the corresponding power
    /// product. Vanishing combinations (the product is a root of unity)
    /// drop out. Rewrites within tensor identities only, so the zero/nonzero
    /// status never changes.
    pub fn merge_proportional_lengths(&self) -> Result<DehnTensor> {
        let mut groups: BTreeMap<(u64, i64), Vec<&TensorTerm>> = BTreeMap::new();
        for t in &self.terms {
            let d = match &t.angle {
                Angle::HalfArg(z) => z.d(),
                Angle::RationalPi(_) => {
                    unreachable!("canonical tensors carry no rational-pi terms")
                }
            };
            groups.entry((t.length.radicand(), d)).or_default().push(t);
        }
        let mut raw = Vec::new();
        for ((m, _), terms) in groups {
            if terms.len() == 1 {
                let t = terms[0];
                raw.push((t.length.clone(), t.angle.clone(), t.multiplicity));
                continue;
            }
            let coeffs: Vec<Rational> = terms
                .iter()
                .map(|t| t.length.coeff() * rat_int(t.multiplicity))
                .collect();
            let (weights, scale) = integer_weights(&coeffs)?;
            let mut product = QuadElem::one();
            for (t, w) in terms.iter().zip(&weights) {
                let Angle::HalfArg(z) = &t.angle else {
                    unreachable!()
                };
                product = &product * &z.pow(*w);
            }
            let (angle, sign) = Angle::from_double_exponential(&product);
            raw.push((SurdLength::new(scale, m), angle, sign as i64));
        }
        Ok(DehnTensor::from_terms(raw))
    }

    /// Exact zero test. Groups terms by radicand; a group vanishes exactly
    /// when its integer-weighted angle sum lies in πQ, i.e. when the
    /// associated product of unit elements is a root of unity. Products are
    /// taken per quadratic field; across multiplicatively independent
    /// fields a non-unity factor certifies nonvanishing, and the (never
    /// arising) dependent corner is reported as unsupported rather than
    /// guessed.
    pub fn is_zero(&self) -> Result<bool> {
        let mut groups: BTreeMap<u64, Vec<&TensorTerm>> = BTreeMap::new();
        for t in &self.terms {
            groups.entry(t.length.radicand()).or_default().push(t);
        }
        for (_, terms) in groups {
            let coeffs: Vec<Rational> = terms
                .iter()
                .map(|t| t.length.coeff() * rat_int(t.multiplicity))
                .collect();
            let (weights, _) = integer_weights(&coeffs)?;
            let mut by_field: BTreeMap<i64, QuadElem> = BTreeMap::new();
            for (t, w) in terms.iter().zip(&weights) {
                let Angle::HalfArg(z) = &t.angle else {
                    unreachable!()
                };
                by_field
                    .entry(z.d())
                    .and_modify(|acc| *acc = &*acc * &z.pow(*w))
                    .or_insert_with(|| z.pow(*w));
            }
            let non_unity: Vec<i64> = by_field
                .iter()
                .filter(|(_, w)| !w.is_root_of_unity())
                .map(|(d, _)| *d)
                .collect();
            if non_unity.is_empty() {
                continue;
            }
            if !has_independent_field(&non_unity) {
                return Err(CoreError::Unsupported(
                    "zero test across multiplicatively dependent quadratic fields".into(),
                ));
            }
            return Ok(false);
        }
        Ok(true)
    }

    /// Tensor equality as elements of R ⊗_Z R/πZ (not representation
    /// equality).
    pub fn equivalent(&self, other: &DehnTensor) -> Result<bool> {
        self.sub(other).is_zero()
    }
}

impl fmt::Display for DehnTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// Clears rational coefficients to coprime integers: returns (weights, g/Q)
/// with coeff_i = weight_i · g/Q and gcd of weights 1.
fn integer_weights(coeffs: &[Rational]) -> Result<(Vec<i64>, Rational)> {
    let q = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let scaled: Vec<BigInt> = coeffs
        .iter()
        .map(|c| (c * Rational::from_integer(q.clone())).to_integer())
        .collect();
    let g = scaled.iter().fold(BigInt::zero(), |acc, w| acc.gcd(w));
    let g = if g.is_zero() { BigInt::one() } else { g };
    let weights: Result<Vec<i64>> = scaled
        .iter()
        .map(|w| {
            (w / &g)
                .try_into()
                .map_err(|_| CoreError::Unsupported("tensor weights exceed i64".into()))
        })
        .collect();
    Ok((weights?, Rational::new(g, q)))
}

/// Whether some field tag in the list is multiplicatively independent of
/// the others mod squares — enough to certify that a product with a
/// non-unity factor there cannot be a root of unity.
fn has_independent_field(ds: &[i64]) -> bool {
    if ds.len() == 1 {
        return true;
    }
    'outer: for (i, &d0) in ds.iter().enumerate() {
        let others: Vec<i64> = ds
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, d)| *d)
            .collect();
        for mask in 0u32..(1 << others.len()) {
            let mut prod: i128 = d0 as i128;
            for (j, &d) in others.iter().enumerate() {
                if mask & (1 << j) != 0 {
                    prod *= d as i128;
                }
            }
            if prod > 0 && intutil::squarefree_part_u64(prod as u64) == 1 {
                // d0 ≡ product of this subset mod squares: dependent.
                continue 'outer;
            }
        }
        return true;
    }
    false
}

/// The Dehn invariant of P_n(h): n·[2 sin(π/n) ⊗ θ] + n·[√(1+h²) ⊗ φ],
/// with both angles carried exactly through their rational cosines, merged
/// and canonicalized.
pub fn dehn_invariant(spec: &PyramidSpec) -> Result<DehnTensor> {
    let base = spec.base();
    let h_sq = spec.height_squared();
    let (cos_two_theta, cos_phi) = dihedral_cosines(base, &h_sq);
    let n = base.n() as i64;

    let base_edge_len = SurdLength::sqrt_of(&base.four_sin_sq())?;
    let apex_edge_len = SurdLength::sqrt_of(&(Rational::one() + &h_sq))?;
    // θ enters through e^{i2θ} directly; φ through (e^{iφ})².
    let (theta_angle, theta_sign) = Angle::from_double_exponential(&unit_from_cos(&cos_two_theta)?);
    let (phi_angle, phi_sign) = Angle::from_exponential(&unit_from_cos(&cos_phi)?);

    DehnTensor::from_terms(vec![
        (base_edge_len, theta_angle, n * theta_sign as i64),
        (apex_edge_len, phi_angle, n * phi_sign as i64),
    ])
    .merge_proportional_lengths()
}

/// Lower and upper bounds for the complexity of a tensor: the minimal
/// number of elementary summands.
///
/// After full merging, terms are grouped into classes by detected angle
/// relations (p·θ_i ± q·θ_j ∈ πQ found by a bounded exponent search within
/// a field; across distinct quadratic fields independence is certified, no
/// search needed). Each non-vanishing class contributes one elementary
/// tensor to the upper bound. The lower bound equals the upper bound when
/// every cross-class pair is certified free; each same-field pair the
/// bounded search left undecided reduces it by one (never below 1 for a
/// nonzero tensor).
pub fn complexity(t: &DehnTensor) -> Result<(u32, u32)> {
    const SEARCH_BOUND: i64 = 6;
    let merged = t.merge_proportional_lengths()?;
    let terms = merged.terms();
    if terms.is_empty() {
        return Ok((0, 0));
    }
    let carriers: Vec<&QuadElem> = terms
        .iter()
        .map(|t| match &t.angle {
            Angle::HalfArg(z) => z,
            Angle::RationalPi(_) => unreachable!(),
        })
        .collect();

    // Union-find with rational angle ratios to the class representative.
    let mut parent: Vec<usize> = (0..terms.len()).collect();
    let mut ratio: Vec<Rational> = vec![Rational::one(); terms.len()]; // θ_i ≡ ratio_i · θ_root mod πQ
    fn find(parent: &mut Vec<usize>, ratio: &mut Vec<Rational>, i: usize) -> usize {
        if parent[i] == i {
            return i;
        }
        let r = find(parent, ratio, parent[i]);
        let up = ratio[parent[i]].clone();
        ratio[i] = &ratio[i] * up;
        parent[i] = r;
        r
    }

    let mut undetermined_pairs = 0u32;
    for i in 0..terms.len() {
        for j in (i + 1)..terms.len() {
            let (zi, zj) = (carriers[i], carriers[j]);
            if zi.d() != zj.d() {
                continue; // distinct squarefree tags: pairwise independent, certified free
            }
            let mut found: Option<Rational> = None;
            'search: for p in 1..=SEARCH_BOUND {
                for q in 1..=SEARCH_BOUND {
                    // p·θ_i − q·θ_j ∈ πQ?
                    if (&zi.pow(p) * &zj.pow(-q)).is_root_of_unity() {
                        found = Some(Rational::new(q.into(), p.into()));
                        break 'search;
                    }
                    // p·θ_i + q·θ_j ∈ πQ?
                    if (&zi.pow(p) * &zj.pow(q)).is_root_of_unity() {
                        found = Some(Rational::new((-q).into(), p.into()));
                        break 'search;
                    }
                }
            }
            match found {
                Some(r) => {
                    // θ_i ≡ r · θ_j: unite with consistent ratios.
                    let ri = find(&mut parent, &mut ratio, i);
                    let rj = find(&mut parent, &mut ratio, j);
                    if ri != rj {
                        // θ_i = ratio_i·θ_ri, θ_j = ratio_j·θ_rj, θ_i = r·θ_j
                        // ⟹ θ_ri = (r·ratio_j/ratio_i)·θ_rj.
                        let link = &r * &ratio[j] / &ratio[i];
                        parent[ri] = rj;
                        ratio[ri] = link;
                    }
                }
                None => undetermined_pairs += 1,
            }
        }
    }

    // Count non-vanishing classes: within a class the terms combine into a
    // single elementary tensor with length Σ c_i·ratio_i grouped by radicand.
    let mut class_sums: BTreeMap<usize, BTreeMap<u64, Rational>> = BTreeMap::new();
    for i in 0..terms.len() {
        let root = find(&mut parent, &mut ratio, i);
        let c = terms[i].length.coeff() * rat_int(terms[i].multiplicity) * &ratio[i];
        let entry = class_sums
            .entry(root)
            .or_default()
            .entry(terms[i].length.radicand())
            .or_insert_with(Rational::zero);
        *entry = &*entry + c;
    }
    let upper = class_sums
        .values()
        .filter(|by_m| by_m.values().any(|c| !c.is_zero()))
        .count() as u32;
    let lower = if upper == 0 {
        0
    } else {
        upper.saturating_sub(undetermined_pairs).max(1)
    };
    Ok((lower, upper))
}

/// The one-term tensor obtained under the hypothesis that the angle ratio
/// φ/θ equals the given positive rational: the whole invariant collapses
/// onto θ with length n·(2 sin(π/n) + √(1+h²)·ratio), reported as a sum of
/// surds (the summands need not share a radicand).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioCollapse {
    /// Positive surd summands of the single length.
    pub length_parts: Vec<SurdLength>,
    /// The base-edge angle θ carrying the collapsed tensor.
    pub angle: Angle,
}

pub fn ratio_hypothesis_tensor(spec: &PyramidSpec, ratio: &Rational) -> Result<RatioCollapse> {
    if !ratio.is_positive() {
        return Err(CoreError::Domain(
            "angle ratio hypothesis must be positive".into(),
        ));
    }
    let base = spec.base();
    let h_sq = spec.height_squared();
    let n = rat_int(base.n() as i64);
    let (cos_two_theta, _) = dihedral_cosines(base, &h_sq);
    let (angle, _) = Angle::from_double_exponential(&unit_from_cos(&cos_two_theta)?);

    let base_part = SurdLength::sqrt_of(&base.four_sin_sq())?.scale(&n);
    let apex_part = SurdLength::sqrt_of(&(Rational::one() + &h_sq))?.scale(&(&n * ratio));
    let parts = if base_part.radicand() == apex_part.radicand() {
        vec![SurdLength::new(
            base_part.coeff() + apex_part.coeff(),
            base_part.radicand(),
        )]
    } else {
        vec![base_part, apex_part]
    };
    Ok(RatioCollapse {
        length_parts: parts,
        angle,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use crate::pyramid::BasePolygon;

    fn spec_h2(n: u8, num: i64, den: i64) -> PyramidSpec {
        PyramidSpec::with_height_squared(BasePolygon::from_n(n).unwrap(), rat(num, den)).unwrap()
    }

    fn phi3_angle() -> (Angle, i8) {
        // e^{iφ₃} = (1+2i√2)/3 at the regular triangle.
        Angle::from_exponential(&QuadElem::new(-2, rat(1, 3), rat(2, 3)))
    }

    #[test]
    fn angle_construction() {
        // cos 2θ = 0 gives the rational angle π/4 for θ.
        let z = unit_from_cos(&Rational::zero()).unwrap();
        let (a, s) = Angle::from_double_exponential(&z);
        assert_eq!(a, Angle::RationalPi(RationalAngle::new(1, 4)));
        assert_eq!(s, 1);

        // A sixth root of unity resolves to a rational angle.
        let zeta6 = QuadElem::new(-3, rat(1, 2), rat(1, 2));
        let (a, _) = Angle::from_double_exponential(&zeta6);
        assert_eq!(a, Angle::RationalPi(RationalAngle::new(1, 6)));

        // A non-unity carrier stays symbolic with canonical orientation.
        let z = QuadElem::new(-2, rat(-1, 3), rat(-2, 3));
        let (a, s) = Angle::from_double_exponential(&z);
        assert_eq!(s, -1);
        assert_eq!(a, Angle::HalfArg(QuadElem::new(-2, rat(-1, 3), rat(2, 3))));

        // Via a rational cosine: cos = 1/2 is the rational angle π/3; an
        // irrational cosine value stays symbolic.
        let (a, _) = Angle::from_cosine(&rat(1, 2)).unwrap();
        assert_eq!(a, Angle::RationalPi(RationalAngle::new(1, 3)));
        let (a, _) = Angle::from_cosine(&rat(1, 3)).unwrap();
        assert!(!a.is_rational_pi());
    }

    #[test]
    fn zero_for_rational_pyramid() {
        let t = dehn_invariant(&spec_h2(4, 1, 2)).unwrap();
        assert!(t.is_zero().unwrap());
        assert_eq!(t.term_count(), 0);
    }

    #[test]
    fn regular_tetrahedron_single_term() {
        // 6√3 ⊗ φ₃: the θ and φ terms share radicand 3 and the same angle.
        let t = dehn_invariant(&spec_h2(3, 2, 1)).unwrap();
        assert_eq!(t.term_count(), 1);
        let (phi3, s) = phi3_angle();
        assert_eq!(s, 1);
        let expect = DehnTensor::single(SurdLength::new(rat_int(6), 3), phi3, 1);
        assert!(t.equivalent(&expect).unwrap());
        assert!(!t.is_zero().unwrap());
    }

    #[test]
    fn half_octahedron_single_term() {
        // Dehn(P_4(1)) = −6√2 ⊗ φ₃.
        let t = dehn_invariant(&spec_h2(4, 1, 1)).unwrap();
        assert_eq!(t.term_count(), 1);
        let (phi3, _) = phi3_angle();
        let expect = DehnTensor::single(SurdLength::new(rat_int(6), 2), phi3, -1);
        assert!(t.equivalent(&expect).unwrap());
    }

    #[test]
    fn generic_two_term_invariant() {
        let t = dehn_invariant(&spec_h2(4, 4, 1)).unwrap();
        assert_eq!(t.term_count(), 2);
        assert!(!t.is_zero().unwrap());
    }

    #[test]
    fn scaling_rules() {
        let (phi3, _) = phi3_angle();
        let t = DehnTensor::single(SurdLength::new(rat_int(6), 3), phi3.clone(), 1);
        // scale(6√3 ⊗ φ₃, √2) = 6√6 ⊗ φ₃.
        let s = t.scale(&SurdLength::new(rat_int(1), 2));
        let expect = DehnTensor::single(SurdLength::new(rat_int(6), 6), phi3, 1);
        assert_eq!(s, expect);
        // Zero scales to zero.
        assert!(DehnTensor::zero()
            .scale(&SurdLength::new(rat_int(3), 5))
            .is_zero()
            .unwrap());
    }

    #[test]
    fn gluing_relation_vanishes() {
        // √3·Dehn(P_4(1)) + √2·Dehn(P_3(√2)) = 0.
        let k = dehn_invariant(&spec_h2(4, 1, 1)).unwrap();
        let t = dehn_invariant(&spec_h2(3, 2, 1)).unwrap();
        let sum = k
            .scale(&SurdLength::new(rat_int(1), 3))
            .add(&t.scale(&SurdLength::new(rat_int(1), 2)));
        assert!(sum.is_zero().unwrap());
    }

    #[test]
    fn angle_negation_cancels() {
        // x ⊗ θ + x ⊗ (π − θ) = 0.
        let w = QuadElem::new(-2, rat(1, 3), rat(2, 3));
        let (theta, s1) = Angle::from_exponential(&w);
        let minus = -&(w.conj()); // e^{i(π−θ)}
        let (theta2, s2) = Angle::from_exponential(&minus);
        let x = SurdLength::new(rat_int(1), 5);
        let t = DehnTensor::from_terms(vec![(x.clone(), theta, s1 as i64), (x, theta2, s2 as i64)]);
        assert!(t.is_zero().unwrap());
    }

    #[test]
    fn integer_scaling_preserves_zero_status() {
        let nonzero = dehn_invariant(&spec_h2(3, 2, 1)).unwrap();
        assert!(!nonzero.scale_int(7).is_zero().unwrap());
        let zero = dehn_invariant(&spec_h2(4, 1, 2)).unwrap();
        assert!(zero.scale_int(7).is_zero().unwrap());
    }

    #[test]
    fn merge_preserves_zero_status() {
        for spec in [
            spec_h2(4, 1, 1),
            spec_h2(4, 4, 1),
            spec_h2(3, 5, 4),
            spec_h2(6, 3, 1),
        ] {
            let t = dehn_invariant(&spec).unwrap();
            let merged = t.merge_proportional_lengths().unwrap();
            assert_eq!(t.is_zero().unwrap(), merged.is_zero().unwrap(), "at {spec}");
        }
    }

    #[test]
    fn merge_with_rational_ratio_weights() {
        // 2sin(π/4) ⊗ θ + √(1+h²) ⊗ φ with v = 1/3 merges into a single
        // term carrying the power product on the angle side.
        let spec = PyramidSpec::with_ratio(BasePolygon::Square, 1, 3).unwrap();
        let t = dehn_invariant(&spec).unwrap();
        assert_eq!(
            t.term_count(),
            1,
            "same-field same-radicand terms merge: {t}"
        );
    }

    #[test]
    fn complexity_values() {
        assert_eq!(complexity(&DehnTensor::zero()).unwrap(), (0, 0));

        let single = dehn_invariant(&spec_h2(3, 2, 1)).unwrap();
        assert_eq!(complexity(&single).unwrap(), (1, 1));

        // h² = 4 on the square: fields Q(i√2) and Q(i√5), certified free.
        let two = dehn_invariant(&spec_h2(4, 4, 1)).unwrap();
        assert_eq!(complexity(&two).unwrap(), (2, 2));
    }

    #[test]
    fn ratio_hypothesis_collapse() {
        let spec = spec_h2(4, 4, 1);
        let c = ratio_hypothesis_tensor(&spec, &rat(3, 2)).unwrap();
        assert_eq!(c.length_parts.len(), 2);
        assert!(!c.angle.is_rational_pi());
        assert!(ratio_hypothesis_tensor(&spec, &rat(-1, 2)).is_err());
    }
}
