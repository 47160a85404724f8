//! Computer algebra for n-ary multiplicative Hom-Nambu-Lie superalgebras
//! over exact rationals.
//!
//! The crate represents finite-dimensional algebras by structure constants,
//! verifies their defining identities, builds new algebras (twists, direct
//! sums, graphs), solves for derivation spaces, computes the deformation
//! cohomology, and checks, reduces and trivializes truncated formal
//! deformations. All arithmetic is exact; there is no numerical tolerance
//! anywhere.

pub mod axioms;
pub mod cohomology;
pub(crate) mod combin;
pub mod constructions;
pub mod deformation;
pub mod derivations;
pub mod error;
pub mod linalg;
pub mod superalgebra;
pub mod testing;

pub use error::{Error, Result};
pub use linalg::{kernel_basis, quotient_dim, solve_particular, Matrix, Scalar, SubspaceBasis};
pub use superalgebra::{
    canonicalize_tuple, wedge_of_vectors, BracketArg, BracketTensor, HomNambuSuperalgebra,
    LinearMap, Parity, SuperSpace, WedgeBasis, WedgeElement, WedgeTuple,
};
