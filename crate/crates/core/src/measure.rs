//! Exact Haar measure on clopen sets and its comparison with the Lebesgue
//! length of their images in the unit interval.
//!
//! At level `n` every prefix carries mass `1/(n1...nn)`, so the measure of a
//! canonical set is its prefix count over the level size.  The image of a
//! prefix interval under the unit map is a closed subinterval of `[0,1]`
//! whose length equals the interval's measure; the checks below verify that
//! identity rather than assume it, and report a witness interval when the
//! two sides disagree.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::clopen::{ClopenInterval, ClopenSet};
use crate::error::Result;
use crate::radix::LevelPoint;

impl ClopenInterval {
    /// The closed subinterval of `[0,1]` the prefixes cover: from the value
    /// of `lo` to the value of the successor of `hi`, where the successor of
    /// the level maximum is taken to be 1, the supremum of the image.
    pub fn unit_image(&self) -> (BigRational, BigRational) {
        let left = self.lo().unit_value();
        let right = if self.hi().is_top() {
            BigRational::one()
        } else {
            self.hi()
                .successor()
                .expect("non-top point has a successor")
                .unit_value()
        };
        (left, right)
    }
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl ClopenSet {
    /// Normalized counting measure of the prefixes: point count over level
    /// size, exactly.
    pub fn haar_measure(&self) -> BigRational {
        // word-sized levels avoid big-integer churn; the value is identical
        if let Some(size) = self.system().level_size_u128(self.level()) {
            let mut count = 0u128;
            let mut in_range = true;
            for iv in self.intervals() {
                match iv.point_count_u128() {
                    Some(c) => count += c,
                    None => {
                        in_range = false;
                        break;
                    }
                }
            }
            if in_range {
                // canonical form: size >= 1, so the gcd is positive
                let g = gcd_u128(count, size);
                return BigRational::new_raw(BigInt::from(count / g), BigInt::from(size / g));
            }
        }
        let mut count = num_bigint::BigUint::zero();
        for iv in self.intervals() {
            count += iv.point_count();
        }
        let size = self.system().level_size(self.level());
        BigRational::new(BigInt::from(count), BigInt::from(size))
    }

    /// Lebesgue length of the set's image in `[0,1]`: the measure of the
    /// union of the interval images.  Touching endpoints are merged by the
    /// sweep, so shared boundary points are not double-counted (single
    /// points have length zero).
    pub fn image_length(&self) -> BigRational {
        let mut images: Vec<(BigRational, BigRational)> =
            self.intervals().iter().map(|iv| iv.unit_image()).collect();
        images.sort();
        let mut total = BigRational::zero();
        let mut current: Option<(BigRational, BigRational)> = None;
        for (left, right) in images {
            match current.take() {
                None => current = Some((left, right)),
                Some((clo, chi)) => {
                    if left <= chi {
                        current = Some((clo, chi.max(right)));
                    } else {
                        total += &chi - &clo;
                        current = Some((left, right));
                    }
                }
            }
        }
        if let Some((clo, chi)) = current {
            total += &chi - &clo;
        }
        total
    }
}

/// Outcome of comparing a Haar value with a Lebesgue image length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PushforwardReport {
    pub haar_value: BigRational,
    pub lebesgue_value: BigRational,
    pub equal: bool,
    /// An interval on which the two sides differ, when they do.
    pub witness: Option<ClopenInterval>,
}

/// Compare the measure of the half-open prefix interval bounded by `a` and
/// `b` with the length of its image, `value(b) - value(a)`.  Equality is
/// reported, not assumed.
pub fn check_interval_pushforward(a: &LevelPoint, b: &LevelPoint) -> Result<PushforwardReport> {
    let set = ClopenSet::from_endpoints(a, b)?;
    let haar_value = set.haar_measure();
    let lebesgue_value = b.unit_value() - a.unit_value();
    let equal = haar_value == lebesgue_value;
    let witness = if equal {
        None
    } else {
        Some(set.intervals()[0].clone())
    };
    Ok(PushforwardReport {
        haar_value,
        lebesgue_value,
        equal,
        witness,
    })
}

/// Compare the measure of a clopen set with the length of its image.  When
/// they differ, the witness is the first interval whose own measure and
/// image length disagree.
pub fn check_set_pushforward(set: &ClopenSet) -> PushforwardReport {
    let haar_value = set.haar_measure();
    let lebesgue_value = set.image_length();
    let equal = haar_value == lebesgue_value;
    let witness = if equal {
        None
    } else {
        let size = BigRational::new(
            BigInt::one(),
            BigInt::from(set.system().level_size(set.level())),
        );
        set.intervals()
            .iter()
            .find(|iv| {
                let (left, right) = iv.unit_image();
                let measure = BigRational::new(BigInt::from(iv.point_count()), BigInt::one()) * &size;
                right - left != measure
            })
            .cloned()
    };
    PushforwardReport {
        haar_value,
        lebesgue_value,
        equal,
        witness,
    }
}

/// Whether the measure survives re-expressing the set at a finer level.
pub fn level_consistency(set: &ClopenSet, m: u64) -> Result<bool> {
    let refined = set.refine(m)?;
    Ok(set.haar_measure() == refined.haar_measure())
}
