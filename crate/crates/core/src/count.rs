use std::fmt;

use num_bigint::BigUint;

/// The size `2^exponent` of a GF(2) vector space of dimension `exponent`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PowerOfTwo {
    pub exponent: usize,
}

impl PowerOfTwo {
    pub fn new(exponent: usize) -> Self {
        Self { exponent }
    }

    pub fn to_biguint(self) -> BigUint {
        BigUint::from(1u8) << self.exponent
    }

    pub fn decimal(self) -> String {
        self.to_biguint().to_string()
    }
}

impl fmt::Display for PowerOfTwo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "2^{}", self.exponent)
    }
}
