//! Exact construction and certification of polynomial families
//! `P(X) − T·Q(X)` whose members have alternating Galois group.

pub mod certificate;
pub mod error;
pub mod evenline;
pub mod ffpoly;
pub mod galoisid;
pub mod mestre;
pub mod monodromy;
pub mod quadform;
pub mod quarticline;
pub mod ratcore;

pub use error::{Error, Result};
