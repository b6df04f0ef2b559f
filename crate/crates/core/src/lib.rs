//! Toolkit for G-Hilbert schemes of finite abelian diagonal groups.

pub mod constellation;
pub mod error;
pub mod exact;
pub mod groebner;
pub mod group;
pub mod hilbert_scheme;
pub mod polyhedral;
pub mod reproduce;

pub use error::{Error, Result};
pub use exact::{IntMatrix, IntVec, RatVec};
pub use group::{CharGroup, Generator, GroupSpec, QuiverMatrices, ThetaParam};
