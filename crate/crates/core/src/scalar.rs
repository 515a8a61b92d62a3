//! Scalar and coefficient-ring abstractions.
//!
//! Every ring element in this crate is generic over its coefficient ring `R: Coefficient`.
//! Two families implement it:
//!
//! * plain exact integers (`i64`, `i128`, `BigInt`): the non-equivariant ring, where every
//!   torus character specializes to `1`;
//! * [`Laurent<S>`](crate::coefficients::Laurent): the equivariant ring, Laurent polynomials
//!   in the simple-root characters with coefficients in a scalar `S`.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{FromPrimitive, One, Signed, Zero};

/// Exact integer-like scalar.
pub trait Scalar:
    Coefficient<Scalar = Self>
    + Debug
    + Display
    + Eq
    + Ord
    + Hash
    + Signed
    + FromPrimitive
{
}

impl Scalar for i64 {}
impl Scalar for i128 {}
impl Scalar for BigInt {}

/// Sign prefix used when printing a term.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// Coefficient ring of the quantum K-theory ring.
pub trait Coefficient:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + 'static
{
    /// Underlying scalar; the target of the non-equivariant specialization.
    type Scalar: Scalar;

    /// The character class `[C_{e_a - e_b}]`, indices read modulo `n` into `1..=n`.
    fn character(n: u32, a: i64, b: i64) -> Self;

    /// Image under the torus involution `z_r -> z_{n-r}`.
    fn phi_twist(&self, n: u32) -> Self;

    /// Evaluation at `z_1 = ... = z_{n-1} = 1`.
    fn specialize_one(&self) -> Self::Scalar;

    fn from_scalar(s: Self::Scalar) -> Self;

    fn from_i64(v: i64) -> Self {
        Self::from_scalar(<Self::Scalar as FromPrimitive>::from_i64(v).expect("i64 fits every scalar"))
    }

    /// Nonzero monomials as (trimmed exponent vector, coefficient), in canonical order.
    fn monomials(&self) -> Vec<(Vec<i32>, Self::Scalar)>;

    /// Splits the coefficient into a sign and a printable factor; `None` means magnitude one.
    fn print_factor(&self) -> (Sign, Option<String>);
}

macro_rules! integer_coefficient {
    ($($t:ty),*) => {$(
        impl Coefficient for $t {
            type Scalar = $t;

            fn character(_n: u32, _a: i64, _b: i64) -> Self {
                <$t>::one()
            }

            fn phi_twist(&self, _n: u32) -> Self {
                self.clone()
            }

            fn specialize_one(&self) -> $t {
                self.clone()
            }

            fn from_scalar(s: $t) -> Self {
                s
            }

            fn monomials(&self) -> Vec<(Vec<i32>, $t)> {
                if self.is_zero() {
                    Vec::new()
                } else {
                    vec![(Vec::new(), self.clone())]
                }
            }

            fn print_factor(&self) -> (Sign, Option<String>) {
                let sign = if self.is_negative() { Sign::Minus } else { Sign::Plus };
                let mag = self.abs();
                if mag.is_one() {
                    (sign, None)
                } else {
                    (sign, Some(mag.to_string()))
                }
            }
        }
    )*};
}

integer_coefficient!(i64, i128, BigInt);
