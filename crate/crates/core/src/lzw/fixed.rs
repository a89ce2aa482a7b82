//! LZW over a dictionary seeded with all 256 byte values.
//!
//! Codes start at 9 bits. At width `k` the all-ones pattern `2^k - 1` is
//! reserved: before emitting a code that does not fit below it, the encoder
//! emits the all-ones escape and continues at `k + 1` bits. Codes are packed
//! most significant bit first.

use std::collections::HashMap;

use super::{LzwCodeStream, Variant};
use crate::error::{Error, Result};

pub const INITIAL_WIDTH: u32 = 9;
const MAX_WIDTH: u32 = 24;
/// The dictionary stops growing here, so no code ever needs more than
/// `MAX_WIDTH` bits.
const MAX_CODE: u32 = (1 << MAX_WIDTH) - 2;

fn escape(width: u32) -> u32 {
    (1 << width) - 1
}

struct Emitter {
    width: u32,
    codes: Vec<u32>,
    widths: Vec<u32>,
}

impl Emitter {
    fn emit(&mut self, code: u32) {
        while code >= escape(self.width) {
            self.codes.push(escape(self.width));
            self.widths.push(self.width);
            self.width += 1;
        }
        self.codes.push(code);
        self.widths.push(self.width);
    }
}

fn pack(codes: &[u32], widths: &[u32]) -> Vec<u8> {
    let total: usize = widths.iter().map(|&w| w as usize).sum();
    let mut out = vec![0u8; total.div_ceil(8)];
    let mut pos = 0usize;
    for (&code, &width) in codes.iter().zip(widths) {
        for i in (0..width).rev() {
            if (code >> i) & 1 == 1 {
                out[pos / 8] |= 0x80 >> (pos % 8);
            }
            pos += 1;
        }
    }
    out
}

pub fn encode(src: &[u8]) -> Result<LzwCodeStream> {
    let (&first, rest) = src
        .split_first()
        .ok_or_else(|| Error::domain("cannot encode an empty source"))?;
    let mut dict: HashMap<(u32, u8), u32> = HashMap::new();
    let mut next = 256u32;
    let mut out = Emitter {
        width: INITIAL_WIDTH,
        codes: Vec::new(),
        widths: Vec::new(),
    };
    let mut current = first as u32;
    for &byte in rest {
        match dict.get(&(current, byte)) {
            Some(&code) => current = code,
            None => {
                out.emit(current);
                if next <= MAX_CODE {
                    dict.insert((current, byte), next);
                    next += 1;
                }
                current = byte as u32;
            }
        }
    }
    out.emit(current);

    let payload_bits = out.widths.iter().map(|&w| w as u64).sum();
    let bytes = pack(&out.codes, &out.widths);
    Ok(LzwCodeStream {
        variant: Variant::FixedAscii,
        codes: out.codes,
        payload_bits,
        bytes,
    })
}

/// Parses a packed stream back into codes. Trailing bits shorter than the
/// current width are padding.
pub fn read_stream(bytes: &[u8]) -> Result<LzwCodeStream> {
    let total = bytes.len() * 8;
    let bit = |pos: usize| (bytes[pos / 8] >> (7 - pos % 8)) & 1 == 1;
    let mut pos = 0usize;
    let mut width = INITIAL_WIDTH;
    let mut codes = Vec::new();
    let mut payload_bits = 0u64;
    while pos + width as usize <= total {
        let code = (pos..pos + width as usize).fold(0u32, |acc, p| (acc << 1) | bit(p) as u32);
        pos += width as usize;
        payload_bits += width as u64;
        codes.push(code);
        if code == escape(width) {
            if width == MAX_WIDTH {
                return Err(Error::CorruptStream(format!(
                    "escape at maximum width {MAX_WIDTH}"
                )));
            }
            width += 1;
        }
    }
    if (pos..total).any(bit) {
        return Err(Error::CorruptStream("non-zero trailing padding".into()));
    }
    Ok(LzwCodeStream {
        variant: Variant::FixedAscii,
        codes,
        payload_bits,
        bytes: bytes.to_vec(),
    })
}

pub fn decode(stream: &LzwCodeStream) -> Result<Vec<u8>> {
    if stream.variant != Variant::FixedAscii {
        return Err(Error::domain(format!(
            "expected a fixed stream, got {}",
            stream.variant
        )));
    }
    let mut entries: Vec<Vec<u8>> = (0..=255u8).map(|b| vec![b]).collect();
    let mut width = INITIAL_WIDTH;
    let mut prev: Option<Vec<u8>> = None;
    let mut out = Vec::new();
    for &code in &stream.codes {
        if code == escape(width) {
            if width == MAX_WIDTH {
                return Err(Error::CorruptStream(format!(
                    "escape at maximum width {MAX_WIDTH}"
                )));
            }
            width += 1;
            continue;
        }
        if code > escape(width) {
            return Err(Error::CorruptStream(format!(
                "code {code} does not fit in {width} bits"
            )));
        }
        let idx = code as usize;
        let entry = match (entries.get(idx), prev.as_ref()) {
            (Some(e), _) => e.clone(),
            (None, Some(p)) if idx == entries.len() => {
                let mut e = p.clone();
                e.push(p[0]);
                e
            }
            _ => return Err(Error::CorruptStream(format!("unknown code {code}"))),
        };
        if let Some(p) = prev.take() {
            if entries.len() as u32 <= MAX_CODE {
                let mut new = p;
                new.push(entry[0]);
                entries.push(new);
            }
        }
        out.extend_from_slice(&entry);
        prev = Some(entry);
    }
    Ok(out)
}
