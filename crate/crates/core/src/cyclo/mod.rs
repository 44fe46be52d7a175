//! Exact cyclotomic arithmetic: polynomials in ζ_m reduced mod Φ_m, the
//! rational-angle type, and the two-cosine relation solver with its
//! brute-force enumeration oracle.

mod angle;
mod elem;
mod relation;

pub use angle::RationalAngle;
pub use elem::{cos_as_cyclotomic, cyclotomic_poly, CycloElem};
pub use relation::{
    oracle_two_cosine, oracle_two_cosine_with_cap, solve_two_cosine_relation, FixedSlot,
    FreeFamily, SolutionSet,
};
