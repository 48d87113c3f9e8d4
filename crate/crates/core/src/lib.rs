//! Exact arithmetic in the self-dual Hopf algebra of double posets.
//!
//! A double poset is a finite set with two partial orders. Isomorphism
//! classes of double posets span a graded Hopf algebra ℤ𝐃 whose product
//! is composition and whose coproduct sums over decompositions into a lower
//! ideal and its complement. Counting *pictures* gives a scalar product for
//! which ℤ𝐃 is self-dual. The crate also carries:
//!
//! * the internal product `E ∘ F` ([`algebra::internal_product`]),
//! * the linear-extension map `L` into the Malvenuto–Reutenauer algebra of
//!   permutations ([`perm`]),
//! * the quasi-symmetric generating function Γ ([`qsym`]),
//! * the Littlewood–Richardson counts in terms of lattice permutations
//!   ([`lr`]),
//! * exhaustive and seeded-random verification suites ([`checks`]) and a
//!   plain text file format ([`text`]).
//!
//! All coefficients are checked `i64`; every enumeration is exact.

pub mod algebra;
pub mod canon;
pub mod checks;
pub mod double_poset;
pub mod error;
pub mod lincomb;
pub mod lr;
pub mod perm;
pub mod poset;
pub mod qsym;
pub mod text;

pub use algebra::{DElement, DTensor};
pub use canon::{canonicalize, CanonicalForm};
pub use double_poset::DoublePoset;
pub use error::{Error, Result};
pub use lincomb::LinComb;
pub use lr::{Partition, Tableau};
pub use perm::{Permutation, SElement, Word};
pub use poset::{ElementSet, Relation};
pub use qsym::{Composition, QElement};
