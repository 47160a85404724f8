//! Fixture algebras, randomized generators and independent oracles used by
//! the test suites and benchmarks. Not part of the stable library surface.

mod fixtures;
mod naive;
mod random;

pub use fixtures::{
    abelian, heisenberg3, sl2, sl2_swap, solvable2, super_1_1, super_heisenberg, three_lie_4d,
};
pub use naive::{naive_hom_nambu_witness, FullTensor};
pub use random::{
    conjugate_algebra, conjugate_map, random_algebra, random_algebra_with_morphism, random_cochain,
    random_compatible_cochain, random_even_invertible, random_even_map, random_parities,
    random_scalar,
};
