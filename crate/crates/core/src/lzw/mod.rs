//! Three LZW flavors used to measure how large a secret becomes once
//! compressed: a 256-entry seeded dictionary with escape-driven code growth,
//! a dictionary seeded only with the characters of the source (which the
//! receiver must be given), and the `.Z` format of the Unix `compress` tool.
//!
//! None of these take part in embedding; they back the size comparison.

mod compress;
mod fixed;
mod shared;

use std::fmt;

pub use compress::{
    decode as lzw_compress_decode, encode as lzw_compress_encode,
    read_stream as read_compress_stream, FLAGS as COMPRESS_FLAGS, MAGIC as COMPRESS_MAGIC,
};
pub use fixed::{
    decode as lzw_fixed_decode, encode as lzw_fixed_encode, read_stream as read_fixed_stream,
    INITIAL_WIDTH as FIXED_INITIAL_WIDTH,
};
pub use shared::{
    decode as lzw_shared_decode, encode as lzw_shared_encode, read_stream as read_shared_stream,
    SharedDictionary,
};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    FixedAscii,
    SharedDict,
    UnixCompress,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::FixedAscii => "fixed",
            Variant::SharedDict => "shared",
            Variant::UnixCompress => "compress",
        })
    }
}

/// An encoded stream together with its serialized form.
///
/// `codes` lists every emitted code in order, including width escapes
/// (fixed) and `CLEAR` codes (compress). `payload_bits` is the size charged
/// to the variant, which for the shared dictionary includes the dictionary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LzwCodeStream {
    pub variant: Variant,
    pub codes: Vec<u32>,
    pub payload_bits: u64,
    bytes: Vec<u8>,
}

impl LzwCodeStream {
    /// The serialized stream as written to a file.
    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }
}

/// Output sizes in bits of the three variants for one source.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SizeReport {
    pub raw_bits: u64,
    pub fixed_bits: u64,
    /// `None` when the source needs more than 255 dictionary entries.
    pub shared_bits: Option<u64>,
    pub compress_bits: u64,
}

pub fn size_report(src: &[u8]) -> Result<SizeReport> {
    if src.is_empty() {
        return Err(Error::domain("cannot report on an empty source"));
    }
    let shared_bits = match lzw_shared_encode(src) {
        Ok((_, stream)) => Some(stream.payload_bits),
        Err(Error::Capacity(_)) => None,
        Err(e) => return Err(e),
    };
    Ok(SizeReport {
        raw_bits: 8 * src.len() as u64,
        fixed_bits: lzw_fixed_encode(src)?.payload_bits,
        shared_bits,
        compress_bits: lzw_compress_encode(src)?.payload_bits,
    })
}

impl SizeReport {
    pub fn to_table(&self) -> String {
        let shared = self
            .shared_bits
            .map_or_else(|| "n/a".to_string(), |b| b.to_string());
        let cells = [
            self.raw_bits.to_string(),
            self.fixed_bits.to_string(),
            shared,
            self.compress_bits.to_string(),
        ];
        let headers = ["raw", "fixed", "shared", "compress"];
        let widths: Vec<usize> = headers
            .iter()
            .zip(&cells)
            .map(|(h, c)| h.len().max(c.len()))
            .collect();
        let row = |items: &[&str]| {
            items
                .iter()
                .zip(&widths)
                .map(|(s, w)| format!("{s:>w$}"))
                .collect::<Vec<_>>()
                .join("  ")
        };
        let cell_refs: Vec<&str> = cells.iter().map(String::as_str).collect();
        format!("{}\n{}\n", row(&headers), row(&cell_refs))
    }

    pub fn to_csv(&self) -> String {
        let shared = self.shared_bits.map_or_else(String::new, |b| b.to_string());
        format!(
            "raw,fixed,shared,compress\n{},{},{},{}\n",
            self.raw_bits, self.fixed_bits, shared, self.compress_bits
        )
    }
}
