use std::f64::consts::PI;

use super::is_eligible;
use crate::doc::{ColoredDoc, Rgb};
use crate::error::{Error, Result};
use crate::permcode::block_budget;

/// Table figures for the permutation method with `n` colors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PermCapacity {
    pub n: usize,
    /// Bits per group, `floor(log2(n!))`.
    pub bits: usize,
    /// Bytes per group rounded half-up to tenths, in tenths.
    pub bytes_tenths: u64,
    /// `100 * P / n` from the rounded byte count, rounded to two decimals.
    pub percent_rounded: f64,
    /// `100 * bits / (8 n)` without intermediate rounding.
    pub percent_exact: f64,
}

impl PermCapacity {
    /// Bytes per group as shown in the table, e.g. `14.6`.
    pub fn bytes(&self) -> f64 {
        self.bytes_tenths as f64 / 10.0
    }
}

/// Exact-integer table row for `n` colors.
pub fn theoretical_capacity_perm(n: usize) -> Result<PermCapacity> {
    if n < 2 {
        return Err(Error::domain(format!("need at least 2 colors, got {n}")));
    }
    let bits = block_budget(n)?.bits;
    let m = bits as u64;
    let n64 = n as u64;
    let bytes_tenths = (10 * m + 4) / 8;
    let hundredths = (2000 * bytes_tenths + n64) / (2 * n64);
    Ok(PermCapacity {
        n,
        bits,
        bytes_tenths,
        percent_rounded: hundredths as f64 / 100.0,
        percent_exact: 100.0 * m as f64 / (8.0 * n as f64),
    })
}

/// Capacity predicted by the Stirling approximation of `log2(n!)`, with
/// `log2(e)` truncated to 1.442695.
#[allow(clippy::approx_constant)]
pub fn stirling_capacity_perm(n: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::domain(format!("need at least 2 colors, got {n}")));
    }
    let n = n as f64;
    let m = n * (n.log2() - 1.442695) + 0.5 * (2.0 * PI * n).log2();
    Ok(m * 100.0 / (n * 8.0))
}

/// `100 * log2(base) / 8`.
pub fn theoretical_capacity_radix(base: usize) -> Result<f64> {
    if base < 2 {
        return Err(Error::domain(format!(
            "base must be at least 2, got {base}"
        )));
    }
    Ok(100.0 * (base as f64).log2() / 8.0)
}

pub fn round_half_up(x: f64, decimals: u32) -> f64 {
    let scale = 10f64.powi(decimals as i32);
    (x * scale + 0.5).floor() / scale
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CapacityFigure {
    pub secret_bits: u64,
    /// Characters of every kind up to and including the last payload one.
    pub consumed_chars: usize,
    pub percent: f64,
}

/// Secret bits over 8 bits per consumed cover character.
///
/// The payload ends before the first eligible character colored
/// `terminator`, or at the last colored character when there is none.
pub fn measured_capacity(
    doc: &ColoredDoc,
    secret_bits: u64,
    terminator: Rgb,
) -> Result<CapacityFigure> {
    let mut last = None;
    for (i, (c, color)) in doc.chars().enumerate() {
        if !is_eligible(c) {
            continue;
        }
        match color {
            Some(col) if col == terminator => break,
            Some(_) => last = Some(i),
            None => {}
        }
    }
    let consumed_chars = last
        .map(|i| i + 1)
        .ok_or_else(|| Error::domain("document carries no payload"))?;
    if secret_bits == 0 {
        return Err(Error::domain("secret is empty"));
    }
    let percent = 100.0 * secret_bits as f64 / (8.0 * consumed_chars as f64);
    if percent > 100.0 {
        return Err(Error::domain(format!(
            "{secret_bits} bits cannot fit in {consumed_chars} characters"
        )));
    }
    Ok(CapacityFigure {
        secret_bits,
        consumed_chars,
        percent,
    })
}
