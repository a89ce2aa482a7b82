//! LZW whose initial dictionary holds only the distinct bytes of the source,
//! in order of first appearance, indexed from 1. Every code is one byte, so
//! the dictionary can never grow past index 255. The receiver needs the
//! initial dictionary, and its size is charged to the output.

use std::collections::HashMap;

use super::{LzwCodeStream, Variant};
use crate::error::{Error, Result};

const MAX_INDEX: usize = 255;

/// The initial dictionary: distinct bytes, entry `i` has code `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SharedDictionary {
    entries: Vec<u8>,
}

impl SharedDictionary {
    pub fn new(entries: Vec<u8>) -> Result<Self> {
        if entries.is_empty() || entries.len() > MAX_INDEX {
            return Err(Error::domain(format!(
                "dictionary must hold 1..={MAX_INDEX} entries, got {}",
                entries.len()
            )));
        }
        let mut seen = [false; 256];
        for &b in &entries {
            if std::mem::replace(&mut seen[b as usize], true) {
                return Err(Error::domain(format!("byte {b:#04x} listed twice")));
            }
        }
        Ok(SharedDictionary { entries })
    }

    /// Distinct bytes of `src` in first-appearance order.
    pub fn for_source(src: &[u8]) -> Self {
        let mut seen = [false; 256];
        let entries = src
            .iter()
            .copied()
            .filter(|&b| !std::mem::replace(&mut seen[b as usize], true))
            .collect();
        SharedDictionary { entries }
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

pub fn encode(src: &[u8]) -> Result<(SharedDictionary, LzwCodeStream)> {
    if src.is_empty() {
        return Err(Error::domain("cannot encode an empty source"));
    }
    let dictionary = SharedDictionary::for_source(src);
    if dictionary.len() > MAX_INDEX {
        return Err(Error::Capacity(format!(
            "{} distinct bytes exceed {MAX_INDEX} dictionary entries",
            dictionary.len()
        )));
    }
    let mut codes_of: HashMap<Vec<u8>, u32> = dictionary
        .entries
        .iter()
        .enumerate()
        .map(|(i, &b)| (vec![b], i as u32 + 1))
        .collect();
    let mut next = dictionary.len() + 1;
    let mut codes = Vec::new();
    let mut current: Vec<u8> = Vec::new();
    for &byte in src {
        current.push(byte);
        if codes_of.contains_key(&current) {
            continue;
        }
        if next > MAX_INDEX {
            return Err(Error::Capacity(format!(
                "dictionary would grow past index {MAX_INDEX}"
            )));
        }
        let last = current.pop().unwrap_or(byte);
        codes.push(codes_of[&current]);
        current.push(last);
        codes_of.insert(std::mem::replace(&mut current, vec![byte]), next as u32);
        next += 1;
    }
    codes.push(codes_of[&current]);

    let payload_bits = 8 * (dictionary.len() + codes.len()) as u64;
    let bytes = codes.iter().map(|&c| c as u8).collect();
    let stream = LzwCodeStream {
        variant: Variant::SharedDict,
        codes,
        payload_bits,
        bytes,
    };
    Ok((dictionary, stream))
}

/// Rebuilds a stream from one-byte codes; the dictionary is needed for the
/// size accounting.
pub fn read_stream(dictionary: &SharedDictionary, bytes: &[u8]) -> LzwCodeStream {
    LzwCodeStream {
        variant: Variant::SharedDict,
        codes: bytes.iter().map(|&b| b as u32).collect(),
        payload_bits: 8 * (dictionary.len() + bytes.len()) as u64,
        bytes: bytes.to_vec(),
    }
}

pub fn decode(dictionary: &SharedDictionary, stream: &LzwCodeStream) -> Result<Vec<u8>> {
    if stream.variant != Variant::SharedDict {
        return Err(Error::domain(format!(
            "expected a shared stream, got {}",
            stream.variant
        )));
    }
    // index 0 is unused
    let mut entries: Vec<Vec<u8>> = std::iter::once(Vec::new())
        .chain(dictionary.entries.iter().map(|&b| vec![b]))
        .collect();
    let mut prev: Option<Vec<u8>> = None;
    let mut out = Vec::new();
    for &code in &stream.codes {
        let idx = code as usize;
        let entry = match (entries.get(idx), prev.as_ref()) {
            (Some(e), _) if idx > 0 => e.clone(),
            (None, Some(p)) if idx == entries.len() => {
                let mut e = p.clone();
                e.push(p[0]);
                e
            }
            _ => return Err(Error::CorruptStream(format!("unknown code {code}"))),
        };
        if let Some(mut p) = prev.take() {
            if entries.len() > MAX_INDEX {
                return Err(Error::CorruptStream(format!(
                    "dictionary grows past index {MAX_INDEX}"
                )));
            }
            p.push(entry[0]);
            entries.push(p);
        }
        out.extend_from_slice(&entry);
        prev = Some(entry);
    }
    Ok(out)
}
