//! Standard bases, tangent cones and Hilbert series of monomial curves
//! defined by 4-generated pseudo-symmetric numerical semigroups.
//!
//! The pipeline runs from the five parameters `α1, α2, α3, α4, α21` to the
//! generators ([`semigroup`]), the binomial standard basis under a local
//! order ([`family`], [`local`]) and the Hilbert series of the tangent cone
//! ([`hilbert`]), with brute-force cross-checks at every stage.

mod checked;
pub mod error;
pub mod family;
pub mod hilbert;
pub mod local;
pub mod monomial;
pub mod poly;
pub mod semigroup;
pub mod sweep;

pub use error::{Error, Result};
pub use family::{build_family, compute_s, BasisFamily, MemberName, SParameters};
pub use hilbert::{hilbert_report, HilbertReport};
pub use local::{is_standard_basis, mora_nf, spoly, Binomial};
pub use monomial::Monomial;
pub use poly::{divide_exact, UniPoly};
pub use semigroup::{
    check_conditions, derive_generators, oracle_hilbert, GeneratorTuple, PseudoSymParams,
};
