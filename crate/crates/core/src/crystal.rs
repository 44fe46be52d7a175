//! The three regular pyramids (all 2n edges of equal length), the gluing
//! relations that combine two of them into solids with vanishing Dehn
//! invariant, and the pentagonal non-vanishing check carried out in the
//! tower Q(√5)(i).

use crate::dehn::{dehn_invariant, DehnTensor};
use crate::error::{CoreError, Result};
use crate::exactnum::{rat, rat_int, QuadElem, Rational, SurdLength, TowerElem};
use crate::pyramid::{exponential_field_data, BasePolygon, PyramidSpec};

/// A pyramid P_n(h) with all 2n edges of the same length c = √(1+h²)
/// = 2 sin(π/n). The length-ratio bound v = 1/2 < sin(π/n) confines n to
/// {3, 4, 5}; for n = 5 the data lives in Q(√5).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularPyramid {
    pub n: u8,
    /// h² as an element of Q(√5) (rational for n = 3, 4).
    pub h_squared: QuadElem,
    /// c² = 1 + h² = 4 sin²(π/n).
    pub edge_squared: QuadElem,
    /// The edge as a canonical surd, when c² is rational.
    pub edge: Option<SurdLength>,
}

/// The three regular pyramids: (n, h², c) = (3, 2, √3), (4, 1, √2), and
/// (5, (3−√5)/2, √((5−√5)/2)). n = 6 is excluded: v = 1/2 equals sin(π/6),
/// the flat boundary.
pub fn regular_pyramids() -> Vec<RegularPyramid> {
    let phi_sq_inv = QuadElem::new(5, rat(3, 2), rat(-1, 2)); // 1/φ² = (3−√5)/2
    let pent_edge_sq = QuadElem::new(5, rat(5, 2), rat(-1, 2)); // 4 sin²(π/5)
    vec![
        RegularPyramid {
            n: 3,
            h_squared: QuadElem::from_int(2),
            edge_squared: QuadElem::from_int(3),
            edge: Some(SurdLength::new(rat_int(1), 3)),
        },
        RegularPyramid {
            n: 4,
            h_squared: QuadElem::from_int(1),
            edge_squared: QuadElem::from_int(2),
            edge: Some(SurdLength::new(rat_int(1), 2)),
        },
        RegularPyramid {
            n: 5,
            h_squared: phi_sq_inv,
            edge_squared: pent_edge_sq,
            edge: None,
        },
    ]
}

/// Exact verification of the gluing identities, all derived from the
/// exponential data at v = 1/2 rather than hard-coded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GluingVerification {
    /// e^{iφ₃}·e^{iφ₄}, expected −1 (the prism edges vanish: φ₃ + φ₄ = π).
    pub phi_product: QuadElem,
    /// √3·Dehn(P₄(1)) + √2·Dehn(P₃(√2)) reduced to canonical form.
    pub unit_prism_relation: DehnTensor,
    /// 3√2·Dehn(P₄(1)) + 2√3·Dehn(P₃(√2)) reduced to canonical form.
    pub integer_crystal_relation: DehnTensor,
    /// 3·Dehn(√2*P₄(1)) + 2·Dehn(√3*P₃(√2)), the crystal with edge sizes 2
    /// and 3, reduced to canonical form.
    pub scaled_crystal_relation: DehnTensor,
    /// The edge sizes (2, 3) of the scaled crystal pieces.
    pub crystal_edges: (Rational, Rational),
}

pub fn verify_gluing_relations() -> Result<GluingVerification> {
    let p4 = PyramidSpec::with_height_squared(BasePolygon::Square, rat_int(1))?;
    let p3 = PyramidSpec::with_height_squared(BasePolygon::Triangle, rat_int(2))?;

    // (i) φ₃ + φ₄ = π, from the exponentials at v = 1/2.
    let e3 = exponential_field_data(&p3)?.exp_phi;
    let e4 = exponential_field_data(&p4)?.exp_phi;
    let phi_product = &e3 * &e4;
    if phi_product != QuadElem::from_int(-1) {
        return Err(CoreError::Internal(format!(
            "exponential product e^(i phi_3) * e^(i phi_4) = {phi_product}, expected -1"
        )));
    }

    let dehn4 = dehn_invariant(&p4)?;
    let dehn3 = dehn_invariant(&p3)?;

    // (ii) the two equivalent relations, merged down to canonical form.
    let unit_prism_relation = dehn4
        .scale(&SurdLength::new(rat_int(1), 3))
        .add(&dehn3.scale(&SurdLength::new(rat_int(1), 2)))
        .merge_proportional_lengths()?;
    let integer_crystal_relation = dehn4
        .scale(&SurdLength::new(rat_int(3), 2))
        .add(&dehn3.scale(&SurdLength::new(rat_int(2), 3)))
        .merge_proportional_lengths()?;

    // (iii) the scaled crystal: K' = √2*P₄(1), T' = √3*P₃(√2) with edge
    // sizes √2·√2 = 2 and √3·√3 = 3, glued 3-and-2.
    let k_prime = dehn4.scale(&SurdLength::new(rat_int(1), 2));
    let t_prime = dehn3.scale(&SurdLength::new(rat_int(1), 3));
    let scaled_crystal_relation = k_prime
        .scale_int(3)
        .add(&t_prime.scale_int(2))
        .merge_proportional_lengths()?;

    for (name, t) in [
        ("unit prism", &unit_prism_relation),
        ("integer crystal", &integer_crystal_relation),
        ("scaled crystal", &scaled_crystal_relation),
    ] {
        if !t.is_zero()? {
            return Err(CoreError::Internal(format!(
                "{name} relation does not vanish: {t}"
            )));
        }
    }

    Ok(GluingVerification {
        phi_product,
        unit_prism_relation,
        integer_crystal_relation,
        scaled_crystal_relation,
        crystal_edges: (rat_int(2), rat_int(3)),
    })
}

/// The pentagonal check, fully logged: W = Z² for Z = e^{i(φ+θ)} of the
/// regular pentagonal pyramid, carried in Q(√5)(i).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PentagonalCheck {
    /// Numerator of e^{iφ} over 3.
    pub exp_phi_numerator: TowerElem,
    /// Numerator of e^{iθ} over √(6(5−√5)).
    pub exp_theta_numerator: TowerElem,
    /// Product of the two numerators: must equal the closed-form numerator
    /// of Z.
    pub product_numerator: TowerElem,
    /// W = Z², exact in the tower.
    pub w: TowerElem,
    /// W · conj(W), expected 1.
    pub unit_norm_check: QuadElem,
    /// W^60, exact.
    pub w_to_60: TowerElem,
    /// Whether W^60 = 1, i.e. Z^60 = ±1. Expected false: Z is not a root of
    /// unity and the pentagonal pyramid is not scissors-equivalent to a cube.
    pub is_root_of_unity: bool,
}

pub fn pentagonal_unit_check() -> Result<PentagonalCheck> {
    let sqrt5 = QuadElem::new(5, rat_int(0), rat_int(1));

    // e^{iφ} = (−√5 + 2i)/3.
    let exp_phi_numerator = TowerElem::new(-&sqrt5, QuadElem::from_int(2));
    // e^{iθ} = (1 + √5 + (2√5 − 2)i) / √(6(5−√5)).
    let exp_theta_numerator = TowerElem::new(
        QuadElem::new(5, rat_int(1), rat_int(1)),
        QuadElem::new(5, rat_int(-2), rat_int(2)),
    );
    // Closed form of Z = e^{i(φ+θ)}: (−5√5 − 1 + (4√5 − 8)i) / (3√(6(5−√5))).
    let z_numerator = TowerElem::new(
        QuadElem::new(5, rat_int(-1), rat_int(-5)),
        QuadElem::new(5, rat_int(-8), rat_int(4)),
    );
    let product_numerator = &exp_phi_numerator * &exp_theta_numerator;
    if product_numerator != z_numerator {
        return Err(CoreError::Internal(format!(
            "closed form mismatch: e^(i phi) * e^(i theta) has numerator {product_numerator}, display says {z_numerator}"
        )));
    }

    // W = Z²: the squared denominator 9·6(5−√5) = 54(5−√5) lies in Q(√5).
    let denom = QuadElem::new(5, rat_int(270), rat_int(-54));
    let w = z_numerator.pow(2).scale(&denom.inv());

    let unit_norm_check = w.relative_norm();
    if !unit_norm_check.is_one() {
        return Err(CoreError::Internal(format!(
            "W must have unit relative norm, got {unit_norm_check}"
        )));
    }

    let w_to_60 = w.pow(60);
    let is_root_of_unity = w_to_60.is_one();
    Ok(PentagonalCheck {
        exp_phi_numerator,
        exp_theta_numerator,
        product_numerator,
        w,
        unit_norm_check,
        w_to_60,
        is_root_of_unity,
    })
}
