//! Braid groups, Hurwitz equivalence of factorizations, words in the
//! hyperelliptic mapping class group, Lefschetz fibration monodromy and
//! van Kampen presentations of plane curve complements.

pub mod braid;
pub mod error;
pub mod factorization;
pub mod freegroup;
pub mod lefschetz;
pub mod linalg;
pub mod mcg;
pub mod perm;
pub mod vankampen;

pub use braid::{braid_equals, full_twist, BraidAction, BraidWord};
pub use error::{Error, Result};
pub use factorization::{Direction, Factorization, GroupContext, Move};
pub use freegroup::{FreeWord, GroupPresentation, Letter};
pub use lefschetz::{kas_equivalent, Base, LefschetzFibration, TwistFactor};
pub use mcg::McgWord;
pub use perm::Permutation;
