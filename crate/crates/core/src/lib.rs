//! Hasse invariants of the level-5 Tate normal form, supersingular and Fricke
//! supersingular polynomials, and the exact identities that tie their
//! factorizations to class numbers of imaginary quadratic fields.

pub mod bigint;
pub mod census;
pub mod classno;
pub mod cyclo;
pub mod error;
pub mod factor;
pub mod fricke;
pub mod ff;
pub mod hasse;
pub mod icosa;
pub mod modeq;
pub mod modpoly;
pub mod poly;
pub mod quad;
pub mod ring;
pub mod suite;
pub mod tables;

pub use error::{Error, Result};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
