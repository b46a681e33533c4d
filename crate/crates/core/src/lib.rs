//! Exact sign and multiplicity computations for restriction problems of
//! unitary and general linear groups.
//!
//! - [`epsilon`]: root numbers of conjugate-symplectic characters
//!   (archimedean and unramified tame cases).
//! - [`distinguished`]: the character on component groups built from those
//!   root numbers.
//! - [`arch_packet`]: compact-root patterns and signatures at a real place.
//! - [`compact`]: interlacing for compact `U(n) ⊂ U(n+1)` checked against
//!   root numbers.
//! - [`finite_gl`]: derivatives, restriction and Hom dimensions for
//!   `GL_n(F_q)`, with a brute-force character oracle.
//! - [`unitary`]: depth-zero packet combinatorics and the base-change
//!   disjointness criterion.

pub mod arch_packet;
pub mod compact;
pub mod distinguished;
pub mod epsilon;
pub mod error;
pub mod finite_gl;
pub mod half_int;
pub mod params;
pub mod sign;
pub mod tame;
pub mod unitary;

pub use error::{Error, Result};
pub use half_int::HalfInt;
pub use params::{FieldCase, ParamPair, Side, Summand, Violation};
pub use sign::{Sign, SignChar};
pub use tame::{product_is_mu, RootOfUnity, TameChar};
