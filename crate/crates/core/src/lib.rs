//! Finite monoids of partial permutations on a chain, bilateral semidirect
//! products built from explicit actions, and exhaustive law checking with
//! counterexample reports.

pub mod bilateral;
pub mod claims;
pub mod constructions;
pub mod error;
pub mod families;
pub mod green;
pub mod monoid;
pub mod morphism;
pub mod pperm;
pub mod report;

pub use bilateral::{build_bilateral, build_reverse_semidirect, build_semidirect, ActionPair};
pub use constructions::ConstructionId;
pub use error::{Error, Result};
pub use families::FamilyId;
pub use monoid::{direct_product, Element, FiniteMonoid, Pair};
pub use morphism::MonoidMap;
pub use pperm::PartialPerm;
pub use report::{CheckMode, VerificationReport};
