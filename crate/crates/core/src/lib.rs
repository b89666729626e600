//! Exact computation of the global tensor functor, rank functions, tensor product
//! decompositions and representation rings for quiver representations.

pub mod corpus;
pub mod decompose;
pub mod error;
pub mod field;
pub mod fixtures;
pub mod linalg;
pub mod quiver;
pub mod rank;
pub mod rep;
pub mod ring;

pub use decompose::{decompose, end_algebra, fitting_split, is_indec, iso, Decomposition, Split};
pub use error::{Error, Result};
pub use field::{parse_rational, Field, Fp, Rational, F2, F3, F5, F7};
pub use linalg::{Matrix, Polynomial, Subspace};
pub use quiver::{Arrow, Path, Quiver, QuiverMorphism, Subquiver};
pub use rank::{
    global_rank, global_tensor, max_epi_sub, max_mono_quot, pushforward_rank, subquiver_rank, GammaResult,
    SubQuot, SubQuotKind,
};
pub use rep::{hom_space, limit, Biproduct, LimitData, RepMorphism, Representation};
pub use ring::{ClassId, ClassRegistry, IndecClass, RankFn, RingElement};
