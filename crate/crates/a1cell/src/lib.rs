//! Cellular chain complexes of split, semisimple, simply connected algebraic
//! groups (plus projective spaces, punctured affine spaces, and flag
//! varieties), built from root-datum combinatorics.
//!
//! Differential entries live in a formal Milnor-Witt scalar algebra
//! ([`mwscalar`]); homology is computed symbolically by pattern and exactly
//! over the integers under realizations (real points, complex points,
//! Milnor/Suslin) via Smith normal form ([`homology`]).

pub mod complexes;
pub mod exec;
pub mod homology;
pub mod mwscalar;
pub mod rootdata;
pub mod table;
pub mod weyl;
