use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{EmbedParams, Method, Mode, Palette};
use crate::doc::ColoredDoc;
use crate::error::{Error, Result};
use crate::permcode::{block_budget, rank, unrank, Permutation};
use crate::radixcode::{bits_to_digits, digits_to_bits, BitString, DigitString, Sentinel};

/// Size of the bit-count header written in framed mode.
pub const LENGTH_HEADER_BITS: usize = 32;

/// Whitespace is never colored and never carries payload.
pub fn is_eligible(c: char) -> bool {
    !matches!(c, ' ' | '\t' | '\n' | '\r')
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverText {
    chars: Vec<char>,
    eligible: Vec<usize>,
}

impl CoverText {
    pub fn new(text: &str) -> Self {
        let chars: Vec<char> = text.chars().collect();
        let eligible = chars
            .iter()
            .enumerate()
            .filter(|(_, &c)| is_eligible(c))
            .map(|(i, _)| i)
            .collect();
        CoverText { chars, eligible }
    }

    pub fn text(&self) -> String {
        self.chars.iter().collect()
    }

    /// Character indices that may be colored.
    pub fn eligible_positions(&self) -> &[usize] {
        &self.eligible
    }

    pub fn eligible_count(&self) -> usize {
        self.eligible.len()
    }

    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }
}

impl From<&str> for CoverText {
    fn from(text: &str) -> Self {
        CoverText::new(text)
    }
}

fn payload_bits(secret: &[u8], mode: Mode) -> Result<BitString> {
    let secret_bits = BitString::from_bytes(secret);
    match mode {
        Mode::Paper => Ok(secret_bits),
        Mode::Framed => {
            let len = u32::try_from(secret_bits.len())
                .map_err(|_| Error::domain("secret too large for a 32-bit length header"))?;
            let mut bits = BitString::from_bytes(&len.to_be_bytes());
            bits.extend_from(&secret_bits);
            Ok(bits)
        }
    }
}

/// Colors the eligible characters: payload indices first, then the
/// terminator, then seeded fill.
///
/// Fill colors come from ChaCha8 seeded with `seed` via `seed_from_u64`,
/// one `gen_range(0..n)` draw per remaining eligible character in reading
/// order. Only membership in the palette is part of the contract.
fn paint(cover: &CoverText, indices: &[usize], palette: &Palette, seed: u64) -> ColoredDoc {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut colors = vec![None; cover.chars.len()];
    for (k, &pos) in cover.eligible.iter().enumerate() {
        let color = match k.cmp(&indices.len()) {
            std::cmp::Ordering::Less => palette.color(indices[k]),
            std::cmp::Ordering::Equal => palette.terminator(),
            std::cmp::Ordering::Greater => palette.color(rng.gen_range(0..palette.size())),
        };
        colors[pos] = Some(color);
    }
    cover.chars.iter().copied().zip(colors).collect()
}

fn require(available: usize, required: usize) -> Result<()> {
    if required > available {
        return Err(Error::CoverTooSmall {
            required,
            available,
        });
    }
    Ok(())
}

fn check_method(params: &EmbedParams, expected: Method) -> Result<()> {
    if params.method != expected {
        return Err(Error::domain(format!(
            "parameters select the {} method, expected {expected}",
            params.method
        )));
    }
    Ok(())
}

pub fn embed_perm(cover: &CoverText, secret: &[u8], params: &EmbedParams) -> Result<ColoredDoc> {
    check_method(params, Method::Permutation)?;
    let n = params.palette.size();
    let t = block_budget(n)?.bits;
    let bits = payload_bits(secret, params.mode)?;
    let blocks = bits.len().div_ceil(t);
    require(cover.eligible_count(), blocks * n)?;

    let mut indices = Vec::with_capacity(blocks * n);
    for b in 0..blocks {
        let start = b * t;
        let end = (start + t).min(bits.len());
        // the last block is zero-padded on the right
        let value = bits.slice(start, end).to_biguint() << (t - (end - start));
        indices.extend(unrank(n, &value)?.into_vec());
    }
    Ok(paint(cover, &indices, &params.palette, params.seed))
}

pub fn embed_radix(cover: &CoverText, secret: &[u8], params: &EmbedParams) -> Result<ColoredDoc> {
    check_method(params, Method::Radix)?;
    let base = params.palette.size() as u32;
    let bits = payload_bits(secret, params.mode)?;
    let digits = match params.mode {
        Mode::Framed => bits_to_digits(&bits, base, Sentinel::On)?,
        Mode::Paper if bits.is_empty() => DigitString::new(base, Vec::new())?,
        Mode::Paper => bits_to_digits(&bits, base, Sentinel::Off)?,
    };
    require(cover.eligible_count(), digits.len())?;
    let indices: Vec<usize> = digits.digits().iter().map(|&d| d as usize).collect();
    Ok(paint(cover, &indices, &params.palette, params.seed))
}

pub fn embed(cover: &CoverText, secret: &[u8], params: &EmbedParams) -> Result<ColoredDoc> {
    match params.method {
        Method::Permutation => embed_perm(cover, secret, params),
        Method::Radix => embed_radix(cover, secret, params),
    }
}

/// Palette indices of the eligible characters before the terminator.
fn read_indices(doc: &ColoredDoc, palette: &Palette) -> Result<Vec<usize>> {
    let mut indices = Vec::new();
    for (pos, (c, color)) in doc.chars().enumerate() {
        if !is_eligible(c) {
            continue;
        }
        let color = color.ok_or_else(|| {
            Error::CorruptStego(format!("character {pos} ({c:?}) is not colored"))
        })?;
        if color == palette.terminator() {
            break;
        }
        let index = palette.index_of(color).ok_or_else(|| {
            Error::CorruptStego(format!(
                "character {pos} has color {color} outside the palette"
            ))
        })?;
        indices.push(index);
    }
    Ok(indices)
}

/// Strips the length header and checks that what follows the secret is at
/// most `max_padding` zero bits.
fn unframe(bits: &BitString, max_padding: usize) -> Result<BitString> {
    if bits.len() < LENGTH_HEADER_BITS {
        return Err(Error::CorruptStego(format!(
            "{} payload bits cannot hold the length header",
            bits.len()
        )));
    }
    let declared = bits
        .slice(0, LENGTH_HEADER_BITS)
        .to_biguint()
        .to_usize()
        .unwrap_or(usize::MAX);
    let end = LENGTH_HEADER_BITS.saturating_add(declared);
    if end > bits.len() {
        return Err(Error::CorruptStego(format!(
            "header declares {declared} bits, only {} present",
            bits.len() - LENGTH_HEADER_BITS
        )));
    }
    let padding = &bits.as_slice()[end..];
    if padding.len() > max_padding || padding.iter().any(|&b| b) {
        return Err(Error::CorruptStego(
            "unexpected bits after the payload".into(),
        ));
    }
    Ok(bits.slice(LENGTH_HEADER_BITS, end))
}

fn truncate_to_hint(mut bits: BitString, hint: Option<usize>) -> Result<BitString> {
    if let Some(len) = hint {
        if len > bits.len() {
            return Err(Error::CorruptStego(format!(
                "expected {len} bits but only {} are embedded",
                bits.len()
            )));
        }
        bits.truncate(len);
    }
    Ok(bits)
}

/// Recovers the payload bits of a permutation-coded document.
///
/// In paper mode the result is cut to `bit_length_hint` when given and
/// otherwise includes the zero padding of the last block. In framed mode the
/// hint is ignored.
pub fn extract_perm(
    doc: &ColoredDoc,
    params: &EmbedParams,
    bit_length_hint: Option<usize>,
) -> Result<BitString> {
    check_method(params, Method::Permutation)?;
    let n = params.palette.size();
    let t = block_budget(n)?.bits;
    let indices = read_indices(doc, &params.palette)?;
    if indices.len() % n != 0 {
        return Err(Error::CorruptStego(format!(
            "{} colored characters do not form groups of {n}",
            indices.len()
        )));
    }
    let limit = BigUint::from(1u8) << t;
    let mut bits = BitString::new();
    for (g, group) in indices.chunks(n).enumerate() {
        let perm = Permutation::from_slots(group.to_vec())
            .map_err(|_| Error::CorruptStego(format!("group {g} repeats a color")))?;
        let value = rank(&perm);
        if value >= limit {
            return Err(Error::CorruptStego(format!(
                "group {g} encodes a rank wider than {t} bits"
            )));
        }
        bits.extend_from(&BitString::from_biguint(&value, t)?);
    }
    match params.mode {
        Mode::Framed => unframe(&bits, t.saturating_sub(1)),
        Mode::Paper => truncate_to_hint(bits, bit_length_hint),
    }
}

/// Recovers the payload bits of a radix-coded document.
///
/// In paper mode leading zero bits are restored from `bit_length_hint`; with
/// no hint the bits are left-padded to a whole number of bytes.
pub fn extract_radix(
    doc: &ColoredDoc,
    params: &EmbedParams,
    bit_length_hint: Option<usize>,
) -> Result<BitString> {
    check_method(params, Method::Radix)?;
    let base = params.palette.size() as u32;
    let indices = read_indices(doc, &params.palette)?;
    let digits = DigitString::new(base, indices.iter().map(|&i| i as u32).collect())?;
    match params.mode {
        Mode::Framed => {
            if digits.is_empty() {
                return Err(Error::CorruptStego("no payload digits".into()));
            }
            let bits = digits_to_bits(&digits, Sentinel::On, None)
                .map_err(|e| Error::CorruptStego(e.to_string()))?;
            unframe(&bits, 0)
        }
        Mode::Paper if digits.is_empty() => truncate_to_hint(BitString::new(), bit_length_hint),
        Mode::Paper => {
            let hint = bit_length_hint.or_else(|| {
                let minimal = digits.to_biguint().bits() as usize;
                Some(minimal.div_ceil(8).max(1) * 8)
            });
            digits_to_bits(&digits, Sentinel::Off, hint)
                .map_err(|e| Error::CorruptStego(e.to_string()))
        }
    }
}

/// Recovers the secret bytes with the method named in `params`.
pub fn extract(
    doc: &ColoredDoc,
    params: &EmbedParams,
    bit_length_hint: Option<usize>,
) -> Result<Vec<u8>> {
    let bits = match params.method {
        Method::Permutation => extract_perm(doc, params, bit_length_hint)?,
        Method::Radix => extract_radix(doc, params, bit_length_hint)?,
    };
    bits.to_bytes()
}
