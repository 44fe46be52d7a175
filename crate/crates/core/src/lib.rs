//! Exact-arithmetic library deciding scissors-congruence of the symmetric
//! pyramids P_n(h) (n ∈ {3, 4, 6}) to a cube, by computing their Dehn
//! invariants and running the full algebraic obstruction pipeline with no
//! floating point anywhere in a verdict path.
//!
//! Layering, bottom up:
//!
//! * [`exactnum`] — rationals, quadratic fields Q(√d), surd lengths, and the
//!   tower Q(√5)(i);
//! * [`cyclo`] — cyclotomic arithmetic mod Φ_m and the two-cosine relation
//!   solver with its brute-force oracle;
//! * [`pyramid`] — the P_n(h) geometry: dihedral cosines, exponential field
//!   data, power products;
//! * [`kummer`] — the abelian-Kummer obstruction predicates;
//! * [`diophantine`] — the norm-equation solvers and hexagonal families;
//! * [`dehn`] — the tensor algebra in R ⊗_Z R/πZ, the triviality pipeline
//!   and the complexity measure;
//! * [`crystal`] — the regular pyramids, gluing relations and the
//!   pentagonal non-vanishing check.
//!
//! ```
//! use dehn_core::dehn::{dehn_invariant, triviality_verdict, Verdict};
//! use dehn_core::exactnum::rat;
//! use dehn_core::pyramid::{BasePolygon, PyramidSpec};
//!
//! // The square pyramid inscribed in the cube: h² = 1/2.
//! let cube_piece = PyramidSpec::with_height_squared(BasePolygon::Square, rat(1, 2))?;
//! assert_eq!(triviality_verdict(&cube_piece)?.verdict, Verdict::Trivial);
//! assert!(dehn_invariant(&cube_piece)?.is_zero()?);
//!
//! // Any other rational height ratio is obstructed.
//! let survivor = PyramidSpec::with_ratio(BasePolygon::Square, 1, 3)?;
//! assert_eq!(triviality_verdict(&survivor)?.verdict, Verdict::Nontrivial);
//! # Ok::<(), dehn_core::CoreError>(())
//! ```

pub mod crystal;
pub mod cyclo;
pub mod dehn;
pub mod diophantine;
mod error;
pub mod exactnum;
pub mod intutil;
pub mod kummer;
pub mod pyramid;

pub use error::{CoreError, Result};
pub use exactnum::{QuadElem, Rational, SurdLength, TowerElem};
pub use pyramid::{BasePolygon, PyramidParam, PyramidSpec};
