//! The `.Z` format written by the Unix `compress` utility.
//!
//! Layout: magic `1F 9D`, a flags byte (`0x80` block mode, low five bits the
//! maximum code width), then LZW codes packed least significant bit first.
//! Codes start at 9 bits; code 256 is `CLEAR` in block mode and the first
//! free code is 257. Codes are conceptually written in groups of eight, so
//! whenever the width changes or a `CLEAR` is emitted, the stream is padded
//! to the end of the current group of `width` bytes.

use std::collections::HashMap;

use super::{LzwCodeStream, Variant};
use crate::error::{Error, Result};

pub const MAGIC: [u8; 2] = [0x1f, 0x9d];
/// Block mode, 16-bit maximum width.
pub const FLAGS: u8 = 0x80 | MAX_BITS as u8;

const BLOCK_MODE: u8 = 0x80;
const BITS_MASK: u8 = 0x1f;
const MAX_BITS: u32 = 16;
const INIT_BITS: u32 = 9;
const CLEAR: u32 = 256;
const FIRST: u32 = 257;
const HEADER_BITS: usize = 24;

/// Tracks the reader's view of the dictionary size, which decides the code
/// width. The writer follows the same schedule so both agree on every width.
struct Schedule {
    max_bits: u32,
    block_mode: bool,
    width: u32,
    max_code: u32,
    free: u32,
    started: bool,
}

impl Schedule {
    fn new(max_bits: u32, block_mode: bool) -> Self {
        Schedule {
            max_bits,
            block_mode,
            width: INIT_BITS,
            max_code: (1 << INIT_BITS) - 1,
            free: if block_mode { FIRST } else { 256 },
            started: false,
        }
    }

    fn limit(&self) -> u32 {
        1 << self.max_bits
    }

    /// Grows the width if needed; returns the old width when it did.
    fn before_code(&mut self) -> Option<u32> {
        if self.free <= self.max_code {
            return None;
        }
        let old = self.width;
        self.width += 1;
        self.max_code = if self.width == self.max_bits {
            self.limit()
        } else {
            (1 << self.width) - 1
        };
        Some(old)
    }

    /// Returns true when `code` was a `CLEAR`, which resets the width.
    fn after_code(&mut self, code: u32) -> bool {
        if self.block_mode && code == CLEAR {
            self.width = INIT_BITS;
            self.max_code = (1 << INIT_BITS) - 1;
            self.free = CLEAR;
            return true;
        }
        if self.started {
            if self.free < self.limit() {
                self.free += 1;
            }
        } else {
            self.started = true;
        }
        false
    }
}

fn align(pos: usize, segment_start: usize, width: u32) -> usize {
    let group = 8 * width as usize;
    segment_start + (pos - segment_start).div_ceil(group) * group
}

fn pack(codes: &[u32]) -> Vec<u8> {
    let mut out = vec![MAGIC[0], MAGIC[1], FLAGS];
    let mut sched = Schedule::new(MAX_BITS, true);
    let mut pos = HEADER_BITS;
    let mut segment = pos;
    let put = |out: &mut Vec<u8>, pos: usize, code: u32, width: u32| {
        for i in 0..width as usize {
            let p = pos + i;
            if out.len() <= p / 8 {
                out.resize(p / 8 + 1, 0);
            }
            if (code >> i) & 1 == 1 {
                out[p / 8] |= 1 << (p % 8);
            }
        }
    };
    for &code in codes {
        if let Some(old) = sched.before_code() {
            pos = align(pos, segment, old);
            segment = pos;
        }
        let width = sched.width;
        put(&mut out, pos, code, width);
        pos += width as usize;
        if sched.after_code(code) {
            pos = align(pos, segment, width);
            segment = pos;
        }
    }
    out.truncate(pos.div_ceil(8));
    out
}

pub fn encode(src: &[u8]) -> Result<LzwCodeStream> {
    let (&first, rest) = src
        .split_first()
        .ok_or_else(|| Error::domain("cannot encode an empty source"))?;
    let limit = 1u32 << MAX_BITS;
    let mut dict: HashMap<(u32, u8), u32> = HashMap::new();
    let mut free = FIRST;
    let mut codes = Vec::new();
    let mut current = first as u32;
    for &byte in rest {
        if let Some(&code) = dict.get(&(current, byte)) {
            current = code;
            continue;
        }
        codes.push(current);
        if free < limit {
            dict.insert((current, byte), free);
            free += 1;
        } else {
            codes.push(CLEAR);
            dict.clear();
            free = FIRST;
        }
        current = byte as u32;
    }
    codes.push(current);

    let bytes = pack(&codes);
    Ok(LzwCodeStream {
        variant: Variant::UnixCompress,
        codes,
        payload_bits: 8 * bytes.len() as u64,
        bytes,
    })
}

fn header(bytes: &[u8]) -> Result<(u32, bool)> {
    if bytes.len() < 3 || bytes[..2] != MAGIC {
        return Err(Error::CorruptStream("missing .Z magic bytes".into()));
    }
    let max_bits = (bytes[2] & BITS_MASK) as u32;
    if !(INIT_BITS..=MAX_BITS).contains(&max_bits) {
        return Err(Error::CorruptStream(format!(
            "unsupported maximum code width {max_bits}"
        )));
    }
    Ok((max_bits, bytes[2] & BLOCK_MODE != 0))
}

/// Splits a `.Z` byte stream into its codes.
pub fn read_stream(bytes: &[u8]) -> Result<LzwCodeStream> {
    let (max_bits, block_mode) = header(bytes)?;
    let total = bytes.len() * 8;
    let mut sched = Schedule::new(max_bits, block_mode);
    let mut pos = HEADER_BITS;
    let mut segment = pos;
    let mut codes = Vec::new();
    loop {
        if let Some(old) = sched.before_code() {
            pos = align(pos, segment, old);
            segment = pos;
        }
        let width = sched.width;
        if pos + width as usize > total {
            break;
        }
        let code = (0..width as usize).fold(0u32, |acc, i| {
            let p = pos + i;
            acc | ((((bytes[p / 8] >> (p % 8)) & 1) as u32) << i)
        });
        pos += width as usize;
        if codes.is_empty() && code > 255 {
            return Err(Error::CorruptStream(format!(
                "first code {code} is not a literal"
            )));
        }
        codes.push(code);
        if sched.after_code(code) {
            pos = align(pos, segment, width);
            segment = pos;
        }
    }
    Ok(LzwCodeStream {
        variant: Variant::UnixCompress,
        codes,
        payload_bits: total as u64,
        bytes: bytes.to_vec(),
    })
}

pub fn decode(stream: &LzwCodeStream) -> Result<Vec<u8>> {
    if stream.variant != Variant::UnixCompress {
        return Err(Error::domain(format!(
            "expected a compress stream, got {}",
            stream.variant
        )));
    }
    let (max_bits, block_mode) = header(stream.as_bytes())?;
    let limit = 1usize << max_bits;
    let first_free = if block_mode { FIRST } else { 256 } as usize;
    let mut prefix = vec![0u32; limit];
    let mut suffix: Vec<u8> = (0..limit).map(|i| i as u8).collect();
    let mut free = first_free;
    let mut prev: Option<u32> = None;
    let mut out = Vec::new();
    let mut stack = Vec::new();

    let expand = |code: u32, prefix: &[u32], suffix: &[u8], stack: &mut Vec<u8>| {
        stack.clear();
        let mut c = code as usize;
        while c >= 256 {
            stack.push(suffix[c]);
            c = prefix[c] as usize;
        }
        stack.push(c as u8);
        stack.reverse();
    };

    for &code in &stream.codes {
        if block_mode && code == CLEAR {
            free = first_free;
            prev = None;
            continue;
        }
        let c = code as usize;
        let known = c < 256 || (c >= first_free && c < free);
        match prev {
            _ if known => expand(code, &prefix, &suffix, &mut stack),
            Some(p) if c == free && c < limit => {
                expand(p, &prefix, &suffix, &mut stack);
                stack.push(stack[0]);
            }
            _ => return Err(Error::CorruptStream(format!("unknown code {code}"))),
        }
        if let Some(p) = prev {
            if free < limit {
                prefix[free] = p;
                suffix[free] = stack[0];
                free += 1;
            }
        }
        out.extend_from_slice(&stack);
        prev = Some(code);
    }
    Ok(out)
}
