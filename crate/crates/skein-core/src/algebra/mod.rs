//! Exact coefficient arithmetic: Laurent polynomials in `A` over the integers,
//! reduced rational functions of those, and the named scalar quantities used
//! throughout the invariant (loop value, projector loop values, q-Pochhammer
//! symbols and the twist-expansion coefficients).

mod laurent;
mod rational;
mod scalars;

pub use laurent::LaurentPoly;
pub(crate) use rational::poly_lcm;
pub use rational::{NotIntegral, RationalFn};
pub use scalars::{coeff_c, coeff_d, delta, loop_value, q_pochhammer};

use core::fmt;

/// Division of rational functions by zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DivideByZero;

impl fmt::Display for DivideByZero {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("division by the zero rational function")
    }
}

impl core::error::Error for DivideByZero {}
