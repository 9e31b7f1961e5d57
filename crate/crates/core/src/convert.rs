//! Exact digit conversion between radix systems.
//!
//! Composing one system's unit map with the inverse of another's carries
//! points of the first system to points of the second with the same value
//! in `[0,1]`.  For values whose expansion terminates, greedy digit
//! extraction recovers the exact eventually-zero representative; a value
//! whose expansion does not terminate within the digit budget is returned
//! truncated, never wrong.  Streams are converted through nested enclosures,
//! emitting a target digit only once the whole enclosure fits inside a
//! single target cell.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::cantor_map::unit_enclosure;
use crate::error::{Error, Result};
use crate::radix::{DigitProvider, LevelPoint, RadixSystem};

/// How a conversion ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConversionStatus {
    /// The remainder reached zero: the digits reproduce the value exactly.
    Terminated,
    /// The budget ran out first: the digits are a prefix of the expansion.
    Truncated { consumed: u64 },
}

/// Result of converting a value into a digit system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConversionResult {
    pub digits: LevelPoint,
    pub status: ConversionStatus,
    /// The exact value of `digits`, recomputed, when the conversion
    /// terminated; callers can compare it against the input.
    pub value_check: Option<BigRational>,
}

impl ConversionResult {
    pub fn terminated(&self) -> bool {
        self.status == ConversionStatus::Terminated
    }
}

/// Greedy expansion of a rational in `[0, 1]`: at each position scale the
/// remainder by the radix and split off the integer part.  Stops with
/// [`ConversionStatus::Terminated`] as soon as the remainder hits zero, so
/// terminating outputs never carry trailing zeros and are always the
/// eventually-zero representative of their value; the sequence for 1 (all
/// maximal digits) never terminates and is reported truncated.
pub fn digits_of_rational(
    value: &BigRational,
    system: &RadixSystem,
    max_digits: u64,
) -> Result<ConversionResult> {
    if value.is_negative() || value > &BigRational::one() {
        return Err(Error::OutOfRange);
    }
    let mut digits: Vec<u64> = Vec::new();
    let mut remainder = value.clone();
    for i in 1..=max_digits {
        if remainder.is_zero() {
            break;
        }
        let radix = system.radix_at(i);
        let scaled = remainder * BigRational::from_integer(BigInt::from(radix));
        let mut digit = scaled
            .floor()
            .to_integer()
            .to_u64()
            .expect("digit fits u64");
        // floor hits the radix only for the constant value 1
        if digit >= radix {
            digit = radix - 1;
        }
        remainder = scaled - BigRational::from_integer(BigInt::from(digit));
        digits.push(digit);
    }
    let consumed = digits.len() as u64;
    let point = LevelPoint::new(system.clone(), digits)?;
    if remainder.is_zero() {
        let value_check = Some(point.unit_value());
        Ok(ConversionResult {
            digits: point,
            status: ConversionStatus::Terminated,
            value_check,
        })
    } else {
        Ok(ConversionResult {
            digits: point,
            status: ConversionStatus::Truncated { consumed },
            value_check: None,
        })
    }
}

/// Carry a point of one system to the digit sequence with the same value in
/// another: greedy expansion of the point's unit value.  Terminated
/// conversions reproduce the value exactly and preserve strict order, so on
/// terminating points the map is an order isomorphism.
pub fn convert_point(
    point: &LevelPoint,
    target: &RadixSystem,
    max_digits: u64,
) -> Result<ConversionResult> {
    digits_of_rational(&point.unit_value(), target, max_digits)
}

/// Certified digits of a stream's value in another system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StreamConversion {
    /// Digits certified so far; sound for every point that matches the
    /// consumed source prefix (excluding eventually-max tails, which share
    /// their value with the next compact point).
    pub digits: LevelPoint,
    /// Set when the final enclosure straddles a target cell boundary: the
    /// source value may sit exactly on the boundary, where the two digit
    /// representations of one value meet, and no further digit can be
    /// certified either way.
    pub undecided: bool,
    /// Source digits consumed.
    pub consumed: u64,
}

/// Convert a stream by enclosure refinement.  A target digit is emitted
/// only when the current enclosure lies inside that digit's half-open cell,
/// so emitted digits are never retracted; the source is consulted one digit
/// at a time up to `budget`.
pub fn convert_stream(
    source: &dyn DigitProvider,
    target: &RadixSystem,
    budget: u64,
) -> StreamConversion {
    let mut consumed = 0u64;
    let (mut lo, mut hi) = (BigRational::zero(), BigRational::one());
    let mut digits: Vec<u64> = Vec::new();
    // left edge and width of the certified target cell
    let mut cell_lo = BigRational::zero();
    let mut cell_width = BigRational::one();
    loop {
        let radix = target.radix_at(digits.len() as u64 + 1);
        let sub_width = &cell_width / BigRational::from_integer(BigInt::from(radix));
        let offset = &lo - &cell_lo;
        let digit = (&offset / &sub_width)
            .floor()
            .to_integer()
            .to_u64()
            .expect("digit fits u64");
        debug_assert!(digit < radix);
        let candidate_lo = &cell_lo + BigRational::from_integer(BigInt::from(digit)) * &sub_width;
        let candidate_hi = &candidate_lo + &sub_width;
        if hi <= candidate_hi {
            digits.push(digit);
            cell_lo = candidate_lo;
            cell_width = sub_width;
            continue;
        }
        if consumed == budget {
            // Exhausted.  If the enclosure's left edge sits exactly on the
            // sub-cell grid the certified digits extend consistently from
            // it; otherwise a cell boundary lies strictly inside the
            // enclosure and the next digit is genuinely ambiguous.
            let undecided = lo != candidate_lo;
            let point = LevelPoint::new(target.clone(), digits).expect("digits in range");
            return StreamConversion {
                digits: point,
                undecided,
                consumed,
            };
        }
        consumed += 1;
        let refined = unit_enclosure(source, consumed);
        lo = refined.0;
        hi = refined.1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::radix::{FnProvider, PointStream};

    fn sys(period: &[u64]) -> RadixSystem {
        RadixSystem::periodic(period.to_vec()).unwrap()
    }

    fn pt(system: &RadixSystem, digits: &[u64]) -> LevelPoint {
        LevelPoint::new(system.clone(), digits.to_vec()).unwrap()
    }

    fn rat(num: i64, den: i64) -> BigRational {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    #[test]
    fn greedy_expansion_recovers_terminating_values() {
        let binary = sys(&[2]);
        let half = digits_of_rational(&rat(1, 2), &binary, 8).unwrap();
        assert_eq!(half.digits.digits(), &[1]);
        assert!(half.terminated());
        assert_eq!(half.value_check, Some(rat(1, 2)));

        let s23 = sys(&[2, 3]);
        let five_sixths = digits_of_rational(&rat(5, 6), &s23, 8).unwrap();
        assert_eq!(five_sixths.digits.digits(), &[1, 2]);
        assert!(five_sixths.terminated());
        // termination exactly at the budget still counts as terminated
        let tight = digits_of_rational(&rat(5, 6), &s23, 2).unwrap();
        assert!(tight.terminated());
        assert_eq!(tight.digits.digits(), &[1, 2]);

        let zero = digits_of_rational(&rat(0, 1), &s23, 8).unwrap();
        assert_eq!(zero.digits.level(), 0);
        assert!(zero.terminated());
        assert_eq!(zero.value_check, Some(BigRational::zero()));
    }

    #[test]
    fn non_terminating_values_are_truncated_never_wrong() {
        let binary = sys(&[2]);
        let third = digits_of_rational(&rat(1, 3), &binary, 6).unwrap();
        assert_eq!(third.digits.digits(), &[0, 1, 0, 1, 0, 1]);
        assert_eq!(third.status, ConversionStatus::Truncated { consumed: 6 });
        assert_eq!(third.value_check, None);
        // the truncation is the value's own prefix: its value is below 1/3
        // by less than one cell
        let lo = third.digits.unit_value();
        assert!(lo < rat(1, 3));
        assert!(rat(1, 3) - lo < rat(1, 64));
    }

    #[test]
    fn the_top_value_never_terminates() {
        let s23 = sys(&[2, 3]);
        let one = digits_of_rational(&rat(1, 1), &s23, 4).unwrap();
        assert_eq!(one.status, ConversionStatus::Truncated { consumed: 4 });
        assert_eq!(one.digits.digits(), &[1, 2, 1, 2]);
        assert!(one.digits.is_top());
    }

    #[test]
    fn out_of_range_values_are_rejected() {
        let binary = sys(&[2]);
        assert_eq!(
            digits_of_rational(&rat(-1, 2), &binary, 8).unwrap_err(),
            Error::OutOfRange
        );
        assert_eq!(
            digits_of_rational(&rat(3, 2), &binary, 8).unwrap_err(),
            Error::OutOfRange
        );
    }

    #[test]
    fn point_conversion_preserves_the_value_exactly() {
        let binary = sys(&[2]);
        let s32 = sys(&[3, 2]);
        let half = convert_point(&pt(&binary, &[1]), &s32, 8).unwrap();
        assert_eq!(half.digits.digits(), &[1, 1]);
        assert!(half.terminated());
        assert_eq!(half.digits.unit_value(), rat(1, 2));

        let bottom = convert_point(&pt(&binary, &[]), &s32, 8).unwrap();
        assert_eq!(bottom.digits.level(), 0);
        assert!(bottom.terminated());

        let s23 = sys(&[2, 3]);
        let six = sys(&[6]);
        let sixth = convert_point(&pt(&s23, &[0, 1]), &six, 8).unwrap();
        assert_eq!(sixth.digits.digits(), &[1]);
        assert!(sixth.terminated());
    }

    #[test]
    fn terminated_outputs_are_never_eventually_max_representatives() {
        // terminating digits end in a nonzero digit (no trailing zeros) and
        // the output for an interior value is never the all-max form
        let s23 = sys(&[2, 3]);
        let six = sys(&[6]);
        for k in 1..6u32 {
            let result = digits_of_rational(&rat(i64::from(k), 6), &six, 8).unwrap();
            assert!(result.terminated());
            assert_eq!(result.digits.unit_value(), rat(i64::from(k), 6));
            assert_ne!(result.digits.digits().last(), Some(&0));
            let back = digits_of_rational(&rat(i64::from(k), 6), &s23, 8).unwrap();
            assert!(back.terminated());
            assert_eq!(back.digits.unit_value(), rat(i64::from(k), 6));
        }
    }

    #[test]
    fn point_conversion_is_an_order_isomorphism_on_terminating_points() {
        let s23 = sys(&[2, 3]);
        let six = sys(&[6]);
        let mut converted: Vec<(BigRational, LevelPoint)> = Vec::new();
        for p in s23.level_points(3) {
            let result = convert_point(&p, &six, 16).unwrap();
            assert!(result.terminated(), "2,3-adic values are 6-adic");
            assert_eq!(result.digits.unit_value(), p.unit_value());
            converted.push((p.unit_value(), result.digits));
        }
        for pair in converted.windows(2) {
            assert!(pair[0].0 < pair[1].0);
            assert_eq!(
                pair[0].1.partial_cmp(&pair[1].1),
                Some(std::cmp::Ordering::Less)
            );
        }
    }

    #[test]
    fn conversions_compose_coherently() {
        let s23 = sys(&[2, 3]);
        let six = sys(&[6]);
        let twelve = sys(&[12]);
        for p in s23.level_points(2) {
            let via_six = convert_point(&p, &six, 32).unwrap();
            assert!(via_six.terminated());
            let onward = convert_point(&via_six.digits, &twelve, 32).unwrap();
            let direct = convert_point(&p, &twelve, 32).unwrap();
            assert!(onward.terminated() && direct.terminated());
            assert_eq!(onward.digits.unit_value(), direct.digits.unit_value());
        }
    }

    #[test]
    fn stream_conversion_emits_zeros_for_the_zero_stream() {
        let binary = sys(&[2]);
        let ternary = sys(&[3]);
        let zeros = FnProvider::new(binary.clone(), |_| 0);
        let result = convert_stream(&zeros, &ternary, 16);
        assert!(!result.undecided);
        assert!(result.digits.level() >= 1);
        assert!(result.digits.is_bottom());
        assert_eq!(result.consumed, 16);

        // same-system conversion of the zero stream
        let result = convert_stream(&zeros, &binary, 16);
        assert!(!result.undecided);
        assert!(result.digits.is_bottom());
    }

    #[test]
    fn stream_conversion_flags_a_value_on_a_cell_boundary() {
        // alternating digits over radix 2 have value 1/3, which sits on the
        // first cell boundary of radix 3: no digit is certifiable
        let binary = sys(&[2]);
        let ternary = sys(&[3]);
        let alternating = FnProvider::new(binary, |i| (i % 2 == 0) as u64);
        let result = convert_stream(&alternating, &ternary, 24);
        assert!(result.undecided);
        assert_eq!(result.digits.level(), 0);
    }

    #[test]
    fn stream_conversion_certifies_digits_near_the_top() {
        let binary = sys(&[2]);
        let ternary = sys(&[3]);
        let ones = FnProvider::new(binary, |_| 1);
        let result = convert_stream(&ones, &ternary, 8);
        assert!(result.digits.level() >= 1);
        assert_eq!(result.digits.digit(1), 2);
        // two source digits pin the enclosure inside [2/3, 1)
        let short = convert_stream(&ones, &ternary, 2);
        assert_eq!(short.digits.digits(), &[2]);
    }

    #[test]
    fn stream_conversion_of_a_compact_stream_matches_point_conversion() {
        let s23 = sys(&[2, 3]);
        let six = sys(&[6]);
        for p in s23.level_points(2) {
            let stream = PointStream::new(p.clone());
            let streamed = convert_stream(&stream, &six, 40);
            let direct = convert_point(&p, &six, 40).unwrap();
            assert!(!streamed.undecided);
            // certified digits are a prefix of (or equal to) the exact ones
            let exact = direct.digits.digits();
            let got = streamed.digits.digits();
            assert!(got.len() <= exact.len().max(got.len()));
            for (i, d) in got.iter().enumerate() {
                assert_eq!(exact.get(i).copied().unwrap_or(0), *d);
            }
        }
    }

    #[test]
    fn zero_budget_emits_nothing() {
        let binary = sys(&[2]);
        let ones = FnProvider::new(binary.clone(), |_| 1);
        let result = convert_stream(&ones, &binary, 0);
        assert_eq!(result.digits.level(), 0);
        assert_eq!(result.consumed, 0);
        assert!(!result.undecided); // the initial enclosure starts on the grid
    }
}
