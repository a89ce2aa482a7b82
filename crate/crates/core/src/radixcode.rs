//! Bit strings and their conversion to and from base-`B` digit strings.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest base supported: one digit per 24-bit RGB color.
pub const MAX_BASE: u32 = 1 << 24;

/// An ordered sequence of bits. Bytes are expanded most significant bit first.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BitString {
    bits: Vec<bool>,
}

impl BitString {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_bytes(bytes: &[u8]) -> Self {
        let bits = bytes
            .iter()
            .flat_map(|&b| (0..8).rev().map(move |i| (b >> i) & 1 == 1))
            .collect();
        BitString { bits }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn push(&mut self, bit: bool) {
        self.bits.push(bit);
    }

    pub fn extend_from(&mut self, other: &BitString) {
        self.bits.extend_from_slice(&other.bits);
    }

    pub fn truncate(&mut self, len: usize) {
        self.bits.truncate(len);
    }

    pub fn as_slice(&self) -> &[bool] {
        &self.bits
    }

    pub fn slice(&self, start: usize, end: usize) -> BitString {
        BitString {
            bits: self.bits[start..end].to_vec(),
        }
    }

    /// Packs the bits into bytes. Fails unless the length is a multiple of 8.
    pub fn to_bytes(&self) -> Result<Vec<u8>> {
        if !self.bits.len().is_multiple_of(8) {
            return Err(Error::MissingBitLength(format!(
                "{} bits do not form whole bytes",
                self.bits.len()
            )));
        }
        Ok(self
            .bits
            .chunks(8)
            .map(|chunk| chunk.iter().fold(0u8, |acc, &b| (acc << 1) | b as u8))
            .collect())
    }

    /// The bits read as a big-endian unsigned integer.
    pub fn to_biguint(&self) -> BigUint {
        let mut value = BigUint::zero();
        for chunk in self.bits.chunks(32) {
            let word = chunk.iter().fold(0u32, |acc, &b| (acc << 1) | b as u32);
            value = (value << chunk.len()) | BigUint::from(word);
        }
        value
    }

    /// `value` written on exactly `width` bits, big-endian.
    pub fn from_biguint(value: &BigUint, width: usize) -> Result<Self> {
        let needed = value.bits() as usize;
        if needed > width {
            return Err(Error::domain(format!(
                "value needs {needed} bits but only {width} are available"
            )));
        }
        let mut bits = vec![false; width - needed];
        bits.extend((0..needed).rev().map(|i| value.bit(i as u64)));
        Ok(BitString { bits })
    }

    /// The minimal big-endian representation of `value` (empty for zero).
    pub fn minimal(value: &BigUint) -> Self {
        let width = value.bits() as usize;
        // cannot fail: the width is exactly the bit length
        Self::from_biguint(value, width).unwrap_or_default()
    }
}

impl FromIterator<bool> for BitString {
    fn from_iter<I: IntoIterator<Item = bool>>(iter: I) -> Self {
        BitString {
            bits: iter.into_iter().collect(),
        }
    }
}

impl FromStr for BitString {
    type Err = Error;

    /// Parses a string of `0` and `1`; whitespace is ignored.
    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .enumerate()
            .filter(|(_, c)| !c.is_whitespace())
            .map(|(i, c)| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::parse(
                    i,
                    format!("unexpected {other:?} in bit string"),
                )),
            })
            .collect()
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitString({self})")
    }
}

/// Digits of a number in base `base`, most significant first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigitString {
    base: u32,
    digits: Vec<u32>,
}

impl DigitString {
    pub fn new(base: u32, digits: Vec<u32>) -> Result<Self> {
        check_base(base)?;
        if let Some(&bad) = digits.iter().find(|&&d| d >= base) {
            return Err(Error::domain(format!("digit {bad} not below base {base}")));
        }
        Ok(DigitString { base, digits })
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    /// Digit count `q`.
    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn to_biguint(&self) -> BigUint {
        self.digits
            .iter()
            .fold(BigUint::zero(), |acc, &d| acc * self.base + d)
    }

    /// Digits of `value`; zero is written as a single `0` digit.
    pub fn from_biguint(value: &BigUint, base: u32) -> Result<Self> {
        check_base(base)?;
        if value.is_zero() {
            return Ok(DigitString {
                base,
                digits: vec![0],
            });
        }
        let b = BigUint::from(base);
        let mut digits = Vec::new();
        let mut rest = value.clone();
        while !rest.is_zero() {
            let (q, r) = rest.div_rem(&b);
            digits.push(r.to_u32().unwrap_or_default());
            rest = q;
        }
        digits.reverse();
        Ok(DigitString { base, digits })
    }
}

/// Whether a single `1` bit is prepended before conversion so that leading
/// zero bits of the secret survive the round trip.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sentinel {
    On,
    /// Plain big-integer conversion: leading zero bits are lost and must be
    /// restored from a separately known bit length.
    Off,
}

fn check_base(base: u32) -> Result<()> {
    if !(2..=MAX_BASE).contains(&base) {
        return Err(Error::domain(format!("base {base} outside 2..=2^24")));
    }
    Ok(())
}

pub fn bits_to_digits(bits: &BitString, base: u32, sentinel: Sentinel) -> Result<DigitString> {
    check_base(base)?;
    let value = match sentinel {
        Sentinel::On => (BigUint::one() << bits.len()) | bits.to_biguint(),
        Sentinel::Off => {
            if bits.is_empty() {
                return Err(Error::domain("cannot convert an empty bit string"));
            }
            bits.to_biguint()
        }
    };
    DigitString::from_biguint(&value, base)
}

pub fn digits_to_bits(
    digits: &DigitString,
    sentinel: Sentinel,
    bit_length_hint: Option<usize>,
) -> Result<BitString> {
    let value = digits.to_biguint();
    match sentinel {
        Sentinel::On => {
            let len = value.bits() as usize;
            if len == 0 {
                return Err(Error::CorruptPayload("missing leading sentinel bit".into()));
            }
            let mut bits = BitString::from_biguint(&value, len)?;
            bits.bits.remove(0);
            Ok(bits)
        }
        Sentinel::Off => match bit_length_hint {
            Some(len) => BitString::from_biguint(&value, len).map_err(|_| {
                Error::CorruptPayload(format!(
                    "decoded value needs {} bits, more than the expected {len}",
                    value.bits()
                ))
            }),
            None => Ok(BitString::minimal(&value)),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bits(s: &str) -> BitString {
        s.parse().unwrap()
    }

    #[test]
    fn small_examples() {
        let d = bits_to_digits(&bits("101"), 10, Sentinel::Off).unwrap();
        assert_eq!(d.digits(), &[5]);
        let d = bits_to_digits(&BitString::from_bytes(&[1]), 10, Sentinel::On).unwrap();
        assert_eq!(d.digits(), &[2, 5, 7]);

        let five = DigitString::new(10, vec![5]).unwrap();
        assert_eq!(
            digits_to_bits(&five, Sentinel::Off, Some(3)).unwrap(),
            bits("101")
        );
        let d = DigitString::new(10, vec![2, 5, 7]).unwrap();
        assert_eq!(
            digits_to_bits(&d, Sentinel::On, None).unwrap(),
            bits("00000001")
        );
    }

    #[test]
    fn digit_count_of_the_short_secret() {
        // independent count: number of decimal digits of the integer
        let secret = b"underlying physiological mechanisms";
        let m = BitString::from_bytes(secret);
        assert_eq!(m.len(), 280);
        let oracle = BigUint::from_bytes_be(secret).to_str_radix(10).len();
        let d = bits_to_digits(&m, 10, Sentinel::Off).unwrap();
        assert_eq!(d.len(), oracle);
        assert_eq!(d.len(), 84);
        let with_sentinel = bits_to_digits(&m, 10, Sentinel::On).unwrap();
        assert_eq!(with_sentinel.len(), 85);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(bits_to_digits(&bits("1"), 1, Sentinel::On).is_err());
        assert!(bits_to_digits(&bits("1"), MAX_BASE + 1, Sentinel::On).is_err());
        assert!(bits_to_digits(&BitString::new(), 10, Sentinel::Off).is_err());
        assert!(DigitString::new(10, vec![10]).is_err());
        let zero = DigitString::new(10, vec![0]).unwrap();
        assert!(matches!(
            digits_to_bits(&zero, Sentinel::On, None),
            Err(Error::CorruptPayload(_))
        ));
        let big = DigitString::new(10, vec![9]).unwrap();
        assert!(digits_to_bits(&big, Sentinel::Off, Some(3)).is_err());
    }

    #[test]
    fn huge_base() {
        let m = BitString::from_bytes(&[0xff; 9]);
        let d = bits_to_digits(&m, MAX_BASE, Sentinel::On).unwrap();
        assert!(d.digits().iter().all(|&x| x < MAX_BASE));
        assert_eq!(digits_to_bits(&d, Sentinel::On, None).unwrap(), m);
    }

    #[test]
    fn bytes_roundtrip() {
        let b = BitString::from_bytes(b"Az");
        assert_eq!(b.to_string(), "0100000101111010");
        assert_eq!(b.to_bytes().unwrap(), b"Az");
        assert!(bits("101").to_bytes().is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn sentinel_roundtrip(
            data in prop::collection::vec(any::<u8>(), 0..48),
            base in prop::sample::select(vec![2u32, 10, 16, 32, 64]),
        ) {
            let m = BitString::from_bytes(&data);
            let d = bits_to_digits(&m, base, Sentinel::On).unwrap();
            prop_assert!(d.digits().iter().all(|&x| x < base));
            let bound = ((m.len() + 1) as f64 / (base as f64).log2()).ceil() as usize + 1;
            prop_assert!(d.len() <= bound);
            prop_assert_eq!(digits_to_bits(&d, Sentinel::On, None).unwrap(), m);
        }

        #[test]
        fn unframed_roundtrip_with_hint(
            data in prop::collection::vec(any::<u8>(), 1..32),
            base in 2u32..300,
        ) {
            let m = BitString::from_bytes(&data);
            let d = bits_to_digits(&m, base, Sentinel::Off).unwrap();
            prop_assert_eq!(digits_to_bits(&d, Sentinel::Off, Some(m.len())).unwrap(), m);
        }
    }
}
