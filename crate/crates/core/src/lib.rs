//! Exact quantum K-theory of the incidence variety `X = Fl(1, n-1; n)`.
//!
//! Ring elements are finite combinations of classes `O^w` indexed by extended labels
//! [`TildeIndex`](combinatorics::TildeIndex), generic over a coefficient ring
//! `R: `[`Coefficient`](scalar::Coefficient). The aliases below fix the two rings used in
//! practice: exact Laurent polynomials in the torus characters, and plain big integers.

pub mod coefficients;
pub mod combinatorics;
pub mod error;
pub mod format;
pub mod gromov_witten;
pub mod projective;
pub mod qkring;
pub mod scalar;
pub mod verify;

pub use error::{Error, Result};

use num_bigint::BigInt;

/// Laurent polynomials in `z_1..z_{n-1}` with big-integer coefficients.
pub type TorusCoefficient = coefficients::Laurent<BigInt>;
/// An element of the equivariant ring `QK_T(X)_q`.
pub type QkElement = qkring::Element<TorusCoefficient>;
/// An element of the non-equivariant ring `QK(X)_q`.
pub type PlainElement = qkring::Element<BigInt>;
pub type EquivariantRing = qkring::QkRing<TorusCoefficient>;
pub type PlainRing = qkring::QkRing<BigInt>;
pub type DivisorPolynomial = qkring::DivisorPolynomial<TorusCoefficient>;
pub type ProjElement = projective::ProjElement<TorusCoefficient>;
