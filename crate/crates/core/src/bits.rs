//! Fixed-width bitstrings used as node codes, destination positions and
//! encoding-pair codes.

use core::fmt;
use core::str::FromStr;

use thiserror::Error;

/// Largest supported code width.
pub const MAX_WIDTH: u32 = 64;

/// A bitstring of `width` characters. The leftmost character is the most
/// significant bit of `value` and is tested by the lowest variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Bits {
    value: u64,
    width: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BitsError {
    #[error("bitstring width {0} exceeds {MAX_WIDTH}")]
    TooWide(u32),
    #[error("value {value} does not fit in {width} bits")]
    Overflow { value: u64, width: u32 },
    #[error("invalid bitstring character {0:?}")]
    BadChar(char),
    #[error("empty bitstring")]
    Empty,
}

impl Bits {
    pub fn new(value: u64, width: u32) -> Result<Self, BitsError> {
        if width > MAX_WIDTH {
            return Err(BitsError::TooWide(width));
        }
        if width < 64 && value >> width != 0 {
            return Err(BitsError::Overflow { value, width });
        }
        Ok(Bits { value, width })
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn width(self) -> u32 {
        self.width
    }

    /// The `i`-th character from the left (0-based).
    pub fn bit(self, i: u32) -> bool {
        debug_assert!(i < self.width);
        (self.value >> (self.width - 1 - i)) & 1 == 1
    }

    /// Concatenation `self · other`.
    pub fn concat(self, other: Bits) -> Result<Bits, BitsError> {
        let width = self.width + other.width;
        if width > MAX_WIDTH {
            return Err(BitsError::TooWide(width));
        }
        let hi = if other.width == 64 { 0 } else { self.value << other.width };
        Ok(Bits { value: hi | other.value, width })
    }
}

/// Number of bits needed to number `count` items: `max(1, ⌈log2 count⌉)`.
pub fn width_for(count: usize) -> u32 {
    if count <= 2 {
        1
    } else {
        usize::BITS - (count - 1).leading_zeros()
    }
}

impl fmt::Display for Bits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.width {
            f.write_str(if self.bit(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for Bits {
    type Err = BitsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.is_empty() {
            return Err(BitsError::Empty);
        }
        let width = s.chars().count() as u32;
        if width > MAX_WIDTH {
            return Err(BitsError::TooWide(width));
        }
        let mut value = 0u64;
        for c in s.chars() {
            let b = match c {
                '0' => 0,
                '1' => 1,
                other => return Err(BitsError::BadChar(other)),
            };
            value = (value << 1) | b;
        }
        Ok(Bits { value, width })
    }
}
