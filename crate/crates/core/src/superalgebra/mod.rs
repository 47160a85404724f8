//! Core graded data model: superspaces, parity-aware linear maps, canonical
//! super-skew bracket tensors, and super-exterior powers.

mod bracket;
mod space;
mod wedge;

pub use bracket::{BracketArg, BracketTensor, HomNambuSuperalgebra};
pub use space::{LinearMap, Parity, SuperSpace};
pub use wedge::{canonicalize_tuple, wedge_of_vectors, WedgeBasis, WedgeElement, WedgeTuple};
