//! Hiding a secret in the colors of a cover text.
//!
//! Two schemes are available. [`Method::Permutation`] splits the payload
//! into blocks of `floor(log2(n!))` bits and shows each block as an ordering
//! of all `n` palette colors over `n` consecutive eligible characters.
//! [`Method::Radix`] writes the payload as a base-`n` number and colors one
//! eligible character per digit, most significant digit first.
//!
//! In both cases whitespace is never colored, the character after the payload
//! carries the palette's terminator color, and the remaining characters are
//! colored from the palette by a seeded generator.

mod capacity;
mod embed;
mod palette;

pub use capacity::{
    measured_capacity, round_half_up, stirling_capacity_perm, theoretical_capacity_perm,
    theoretical_capacity_radix, CapacityFigure, PermCapacity,
};
pub use embed::{
    embed, embed_perm, embed_radix, extract, extract_perm, extract_radix, is_eligible, CoverText,
    LENGTH_HEADER_BITS,
};
pub use palette::{make_palette, Palette, MAX_COLORS, MIN_COLORS, TERMINATOR};

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Permutation,
    Radix,
}

/// How the payload is delimited.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    /// The secret's bits exactly; the reader must be told the bit length.
    Paper,
    /// A 32-bit big-endian bit count precedes the secret, so extraction is
    /// self-delimiting.
    #[default]
    Framed,
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "perm" | "permutation" => Ok(Method::Permutation),
            "radix" => Ok(Method::Radix),
            _ => Err(Error::domain(format!("unknown method {s:?}"))),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Permutation => "perm",
            Method::Radix => "radix",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "paper" => Ok(Mode::Paper),
            "framed" => Ok(Mode::Framed),
            _ => Err(Error::domain(format!("unknown mode {s:?}"))),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Paper => "paper",
            Mode::Framed => "framed",
        })
    }
}

#[derive(Debug, Clone)]
pub struct EmbedParams {
    pub method: Method,
    pub palette: Palette,
    pub mode: Mode,
    /// Seeds the colors of the characters after the terminator.
    pub seed: u64,
}

impl EmbedParams {
    pub fn new(method: Method, palette: Palette) -> Self {
        EmbedParams {
            method,
            palette,
            mode: Mode::default(),
            seed: 0,
        }
    }

    pub fn with_mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}
