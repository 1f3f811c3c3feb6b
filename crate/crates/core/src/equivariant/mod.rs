//! Group actions on monoids and simplicial sets, fixed points and the
//! orbit category.

mod gmonoid;
mod group;
mod orbit;

pub use gmonoid::{
    check_fixed_commutes, compare_fixed, g_connected, nerve_of_gmonoid, ConnectivityReport, FixedComparison, FixedConnectivity,
    FixedPointReport, GMonoid, GSimplicialSet,
};
pub use group::{permutations, subgroups, FiniteGroup, Subgroup};
pub use orbit::{
    check_naturality, fixed_coset_count, hom_counts, restriction_map, HomCount, NaturalityFailure, NaturalityReport, OrbitCategory, OrbitMorphism};

#[cfg(test)]
mod tests;
