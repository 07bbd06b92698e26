//! Exact computation of a colored Kauffman-bracket invariant of singular links.
//!
//! A singular link is presented as a word in the singular braid monoid: classical
//! crossings `s<i>`/`S<i>` and rigid four-valent vertices `t<i>` on `k` strands.
//! Every strand is cabled by an even number of parallel strands (the "color")
//! carrying a Jones-Wenzl projector, the word is mapped letter by letter into the
//! Temperley-Lieb diagram algebra, and the Markov trace closure evaluates the
//! result to an exact rational function in the Kauffman variable `A`.
//!
//! Everything is computed over exact arithmetic: Laurent polynomials in `A` with
//! big-integer coefficients and reduced fractions of those. There are no floats
//! and no truncation anywhere.
//!
//! The crate is `no_std` (with `alloc`); IO, serialization and the command-line
//! front end live in the companion crate `skein-cli`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod diagram;
pub mod element;
pub mod invariant;
pub mod oracle;
pub mod singular;

use core::fmt;

/// Size limits for the exponentially-sized parts of the computation.
///
/// These are configuration, not hard constants: callers (and the CLI via
/// environment variables) may raise them, subject to the absolute width cap
/// [`diagram::MAX_WIDTH`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    /// Largest cable color accepted by generator constructors (default 4).
    pub max_cable_color: u8,
    /// Largest total strand count `color * strands` for word evaluation (default 12).
    pub max_total_width: u8,
    /// Largest width for full basis enumeration, Catalan-sized (default 8).
    pub max_enum_width: u8,
    /// Largest Jones-Wenzl projector index (default 8).
    pub max_projector: u8,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_cable_color: 4,
            max_total_width: 12,
            max_enum_width: 8,
            max_projector: 8,
        }
    }
}

/// A requested computation exceeds the configured [`Bounds`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundError {
    pub what: &'static str,
    pub requested: usize,
    pub limit: usize,
}

impl fmt::Display for BoundError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} exceeds the configured limit {}",
            self.what, self.requested, self.limit
        )
    }
}

impl core::error::Error for BoundError {}
