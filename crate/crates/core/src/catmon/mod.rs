//! Finite monoids, finite categories, semigroupoids, wreath products and
//! the nerve functor.

mod category;
mod monoid;
mod nerve;
mod semigroupoid;
mod wreath;

pub use category::{FiniteCategory, Morphism};
pub use monoid::{check_homomorphism, find_isomorphism, validate_monoid, FiniteMonoid, MonoidHomomorphism, MonoidViolation};
pub use nerve::{nerve, nerve_of_monoid, Nerve};
pub use semigroupoid::{Semigroupoid, SplittingWitness};
pub use wreath::{induced_wreath_hom, wreath, WreathData, WreathElement};
