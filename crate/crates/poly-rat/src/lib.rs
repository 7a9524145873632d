//! Univariate polynomial arithmetic over exact fields, reduced rational maps
//! on P^1, formal derivatives, and Hankel determinants.

pub mod display;
pub mod hankel;
pub mod poly;
pub mod ratmap;
pub mod specialize;

pub use hankel::{det_numeric, hankel_det, HankelSpec};
pub use poly::Polynomial;
pub use ratmap::{MapError, ProjPoint, RationalMap};
pub use specialize::{
    canonicalize_symbolic, certify_coprime_at, sampling_field, specialize_map, specialize_poly,
};
