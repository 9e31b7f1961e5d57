//! The monotone map from digit sequences onto the unit interval and its
//! companion embedding with gaps.
//!
//! A digit vector `d1..dn` over radices `n1..nn` is sent to the exact
//! rational `sum di / (n1 * n2 * ... * ni)`.  The map is strictly monotone
//! for the lexicographic order, so distinct same-system points land on
//! distinct rationals, and the images of a level's points cut `[0,1]` into
//! equal cells.  Arbitrary points are pinned down by nested enclosures from
//! their finite prefixes.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::radix::{CoCompactPoint, DigitProvider, LevelPoint};

impl LevelPoint {
    /// Exact value of the point in `[0, 1)`: `sum di / (n1...ni)`.
    pub fn unit_value(&self) -> BigRational {
        let mut total = BigRational::zero();
        let mut denom = BigInt::one();
        for (idx, &d) in self.digits().iter().enumerate() {
            denom *= self.system().radix_at(idx as u64 + 1);
            if d > 0 {
                total += BigRational::new(BigInt::from(d), denom.clone());
            }
        }
        total
    }

    /// Value of the point under the embedding that deletes open gaps between
    /// digit cells: `sum 2*di / prod(2*nj - 1)`.
    ///
    /// Strictly monotone; paired with [`unit_value`](Self::unit_value) it
    /// traces a devil's-staircase graph.  Over constant radix 2 it reproduces
    /// the classical middle-thirds embedding (digits 0 and 2 in base 3).
    pub fn gap_value(&self) -> BigRational {
        let mut total = BigRational::zero();
        let mut denom = BigInt::one();
        for (idx, &d) in self.digits().iter().enumerate() {
            denom *= 2 * self.system().radix_at(idx as u64 + 1) - 1;
            if d > 0 {
                total += BigRational::new(BigInt::from(2 * d), denom.clone());
            }
        }
        total
    }
}

impl CoCompactPoint {
    /// The eventually-max sequence below a compact point maps to the same
    /// value as the point itself.
    pub fn unit_value(&self) -> BigRational {
        self.base().unit_value()
    }
}

/// Exact enclosure of a stream's value from its first `k` digits: the value
/// lies in `[lo, hi]` where `lo` is the truncation's value and
/// `hi = lo + 1/(n1...nk)`.  Enclosures are nested in `k` and their width is
/// exactly the level cell width.
pub fn unit_enclosure(x: &dyn DigitProvider, k: u64) -> (BigRational, BigRational) {
    let mut lo = BigRational::zero();
    let mut denom = BigInt::one();
    for i in 1..=k {
        denom *= x.system().radix_at(i);
        let d = x.digit(i);
        if d > 0 {
            lo += BigRational::new(BigInt::from(d), denom.clone());
        }
    }
    let width = BigRational::new(BigInt::one(), denom);
    let hi = &lo + &width;
    (lo, hi)
}
