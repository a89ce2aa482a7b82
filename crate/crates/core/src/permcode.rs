//! Ranking and unranking of permutations in linear time.
//!
//! The ordering is the one produced by the swap-based recursion of Myrvold and
//! Ruskey: starting from the identity, position `n - 1` is swapped with
//! position `r mod n`, then the procedure recurses on the first `n - 1` slots
//! with `r / n`. Ranking runs the same swaps in reverse using the inverse
//! permutation. Both directions are implemented as loops over private copies,
//! so callers never observe mutation.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest supported number of symbols.
pub const MAX_SYMBOLS: usize = 64;

/// A permutation of the symbols `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    slots: Vec<usize>,
}

impl Permutation {
    /// The identity permutation on `n` symbols.
    pub fn identity(n: usize) -> Self {
        Permutation {
            slots: (0..n).collect(),
        }
    }

    /// Validates that `slots` is a bijection on `0..slots.len()`.
    pub fn from_slots(slots: Vec<usize>) -> Result<Self> {
        let n = slots.len();
        if n == 0 || n > MAX_SYMBOLS {
            return Err(Error::domain(format!(
                "permutation size {n} outside 1..={MAX_SYMBOLS}"
            )));
        }
        let mut seen = vec![false; n];
        for &value in &slots {
            if value >= n {
                return Err(Error::domain(format!(
                    "value {value} out of range for a permutation of {n} symbols"
                )));
            }
            if std::mem::replace(&mut seen[value], true) {
                return Err(Error::domain(format!("value {value} appears twice")));
            }
        }
        Ok(Permutation { slots })
    }

    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.slots
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.slots
    }

    /// The inverse permutation: `inverse[self[i]] = i`.
    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.slots.len()];
        for (i, &value) in self.slots.iter().enumerate() {
            inv[value] = i;
        }
        Permutation { slots: inv }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.slots).finish()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, value) in self.slots.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{value}")?;
        }
        Ok(())
    }
}

/// Number of secret bits one group of `n` distinct colors can carry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockBudget {
    pub n: usize,
    /// `floor(log2(n!))`
    pub bits: usize,
}

/// `n!` computed exactly.
pub fn factorial(n: usize) -> Result<BigUint> {
    if n > MAX_SYMBOLS {
        return Err(Error::domain(format!(
            "factorial argument {n} exceeds {MAX_SYMBOLS}"
        )));
    }
    Ok((2..=n).fold(BigUint::one(), |acc, k| acc * k))
}

pub fn block_budget(n: usize) -> Result<BlockBudget> {
    if n < 2 {
        return Err(Error::domain(format!(
            "a palette of {n} colors cannot carry any bit"
        )));
    }
    let bits = factorial(n)?.bits() as usize - 1;
    Ok(BlockBudget { n, bits })
}

/// The permutation of rank `rank` on `n` symbols.
pub fn unrank(n: usize, rank: &BigUint) -> Result<Permutation> {
    if n == 0 || n > MAX_SYMBOLS {
        return Err(Error::domain(format!(
            "permutation size {n} outside 1..={MAX_SYMBOLS}"
        )));
    }
    if *rank >= factorial(n)? {
        return Err(Error::RankOutOfRange {
            n,
            rank: rank.to_string(),
        });
    }
    let mut slots: Vec<usize> = (0..n).collect();
    let mut r = rank.clone();
    for k in (1..=n).rev() {
        let (q, rem) = r.div_rem(&BigUint::from(k));
        // rem < k <= 64
        let j = rem.to_usize().unwrap_or_default();
        slots.swap(k - 1, j);
        r = q;
    }
    Ok(Permutation { slots })
}

/// Inverse of [`unrank`]: the rank of `perm` in `[0, n!)`.
pub fn rank(perm: &Permutation) -> BigUint {
    let n = perm.len();
    let mut slots = perm.slots.clone();
    let mut inv = perm.inverse().slots;
    // digits[k] is the value `s` chosen when the active prefix has length k.
    let mut digits = vec![0usize; n + 1];
    for k in (2..=n).rev() {
        let s = slots[k - 1];
        let at = inv[k - 1];
        slots.swap(k - 1, at);
        inv.swap(s, k - 1);
        digits[k] = s;
    }
    // s_n + n * (s_{n-1} + (n-1) * (...))
    let mut acc = BigUint::zero();
    for (k, &digit) in digits.iter().enumerate().skip(2) {
        acc = acc * k + digit;
    }
    acc
}
