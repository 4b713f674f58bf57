//! Exact-arithmetic certification of quotient-dimension results for
//! surgeries on two-bridge knots.
//!
//! Everything here computes over ℚ(√5) with big-rational coefficients; there
//! is no floating point anywhere, so every certificate field is an exact
//! statement. The library builds two-bridge knot group presentations and
//! their 1/n Dehn fillings, searches for homomorphisms onto small finite
//! groups (the alternating group A5 and the binary icosahedral group 2I,
//! realized as unit icosians), lifts representations into the affine group
//! ℂ² ⋊ 2I symbolically, and assembles JSON certificates for two kinds of
//! conclusion:
//!
//! * `qdim=2` for members of a family of fillings, witnessed by a verified
//!   surjection onto 2I whose affine lift contains an infinite-order pure
//!   translation;
//! * `qdim=3-criterion` for knots whose group admits no surjection onto A5,
//!   which rules out such lifts for every filling at once.

pub mod affine;
pub mod certify;
pub mod cli;
pub mod error;
pub mod golden;
pub mod group;
pub mod homs;
pub mod icosian;
pub mod perm;
pub mod quaternion;
pub mod snf;
pub mod twobridge;
pub mod words;

pub use affine::{AffineElement, SymbolicAffine};
pub use certify::{certify_qdim2, certify_qdim3, Conclusion, QDim2Certificate, QDim3Certificate};
pub use error::{Error, Result};
pub use golden::GoldenNum;
pub use group::{FiniteGroup, Indexed, TableGroup};
pub use homs::{enumerate_homs, family_hom, GroupHom, HomSearch, SearchOptions};
pub use icosian::IcosianGroup;
pub use perm::PermGroup;
pub use quaternion::Quaternion;
pub use snf::{smith_normal_form, IntMat};
pub use twobridge::{family_filling, first_homology, FamilyFilling, TwoBridgeKnot};
pub use words::{GroupLike, Presentation, Word};
