//! Mod-p and rational cohomology of free loop spaces of truncated polynomial
//! spaces (projective spaces in particular), their circle Borel
//! constructions, and the spectral sequences relating them.

pub mod algebra;
pub mod cli;
pub mod derived;
pub mod error;
pub mod geodesy;
pub mod loopcoh;
pub mod series;
pub mod specseq;
pub mod verify;

pub use error::{Error, Result};
