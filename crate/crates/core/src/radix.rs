//! Mixed-radix digit sequences and their lexicographic lattice order.
//!
//! A [`RadixSystem`] fixes an eventually periodic sequence of cyclic-group
//! orders `n1, n2, ...` (each at least 2).  The direct sum of the first `n`
//! cyclic groups is the level-`n` quotient; a [`LevelPoint`] is one of its
//! elements, written as the digit vector `d1..dn` with `0 <= di < ni`.
//! Regarded as an eventually-zero infinite sequence, a level point is also a
//! compact element of the full product, and every level point other than the
//! bottom has an eventually-max [`CoCompactPoint`] sitting immediately below
//! it.  Arbitrary points of the infinite product enter through the
//! [`DigitProvider`] trait, one digit query at a time.

use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An eventually periodic sequence of radices, every entry at least 2.
///
/// `radix_at(i)` walks through `preperiod` and then cycles through `period`
/// forever, so the sequence is total.  Two systems compare equal when their
/// descriptions coincide; differently written descriptions of the same
/// sequence are treated as distinct systems.  Clones share the description,
/// so every point can carry its system cheaply.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(try_from = "RawRadixSystem", into = "RawRadixSystem")]
pub struct RadixSystem {
    inner: Arc<RadixInner>,
}

#[derive(Debug, PartialEq, Eq, Hash)]
struct RadixInner {
    preperiod: Vec<u64>,
    period: Vec<u64>,
}

impl PartialEq for RadixSystem {
    fn eq(&self, other: &RadixSystem) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner == other.inner
    }
}

impl Eq for RadixSystem {}

impl std::hash::Hash for RadixSystem {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.inner.hash(state);
    }
}

#[derive(Serialize, Deserialize)]
struct RawRadixSystem {
    preperiod: Vec<u64>,
    period: Vec<u64>,
}

impl TryFrom<RawRadixSystem> for RadixSystem {
    type Error = Error;
    fn try_from(raw: RawRadixSystem) -> Result<Self> {
        RadixSystem::new(raw.preperiod, raw.period)
    }
}

impl From<RadixSystem> for RawRadixSystem {
    fn from(sys: RadixSystem) -> Self {
        RawRadixSystem {
            preperiod: sys.preperiod().to_vec(),
            period: sys.period().to_vec(),
        }
    }
}

impl RadixSystem {
    pub fn new(preperiod: Vec<u64>, period: Vec<u64>) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::EmptyPeriod);
        }
        for &r in preperiod.iter().chain(period.iter()) {
            if r < 2 {
                return Err(Error::RadixTooSmall(r));
            }
        }
        Ok(RadixSystem {
            inner: Arc::new(RadixInner { preperiod, period }),
        })
    }

    /// The purely periodic system with the given cycle.
    pub fn periodic(period: Vec<u64>) -> Result<Self> {
        Self::new(Vec::new(), period)
    }

    pub fn preperiod(&self) -> &[u64] {
        &self.inner.preperiod
    }

    pub fn period(&self) -> &[u64] {
        &self.inner.period
    }

    /// The radix at 1-based position `i`.
    pub fn radix_at(&self, i: u64) -> u64 {
        assert!(i >= 1, "radix positions are 1-based");
        let pre = self.inner.preperiod.len() as u64;
        if i <= pre {
            self.inner.preperiod[(i - 1) as usize]
        } else {
            self.inner.period[((i - pre - 1) % self.inner.period.len() as u64) as usize]
        }
    }

    /// Number of points in the level-`n` quotient, `n1 * n2 * ... * nn`.
    pub fn level_size(&self, level: u64) -> BigUint {
        let mut size = BigUint::one();
        for i in 1..=level {
            size *= self.radix_at(i);
        }
        size
    }

    /// Level size when it fits a machine word pair.
    pub(crate) fn level_size_u128(&self, level: u64) -> Option<u128> {
        let mut size = 1u128;
        for i in 1..=level {
            size = size.checked_mul(u128::from(self.radix_at(i)))?;
        }
        Some(size)
    }

    /// The all-zero point at the given level (the lex minimum).
    pub fn bottom(&self, level: u64) -> LevelPoint {
        LevelPoint {
            system: self.clone(),
            digits: vec![0; level as usize],
        }
    }

    /// The all-max point at the given level (the lex maximum).
    pub fn top(&self, level: u64) -> LevelPoint {
        let digits = (1..=level).map(|i| self.radix_at(i) - 1).collect();
        LevelPoint {
            system: self.clone(),
            digits,
        }
    }

    /// All level points in lexicographic order, produced by an odometer over
    /// the digit vectors (not by repeated `successor` calls).
    pub fn level_points(&self, level: u64) -> LevelPointIter {
        LevelPointIter {
            system: self.clone(),
            next: Some(vec![0; level as usize]),
        }
    }
}

pub struct LevelPointIter {
    system: RadixSystem,
    next: Option<Vec<u64>>,
}

impl Iterator for LevelPointIter {
    type Item = LevelPoint;

    fn next(&mut self) -> Option<LevelPoint> {
        let digits = self.next.take()?;
        // advance the odometer
        let mut succ = digits.clone();
        let mut pos = succ.len();
        loop {
            if pos == 0 {
                break;
            }
            let r = self.system.radix_at(pos as u64);
            if succ[pos - 1] + 1 < r {
                succ[pos - 1] += 1;
                self.next = Some(succ);
                break;
            }
            succ[pos - 1] = 0;
            pos -= 1;
        }
        Some(LevelPoint {
            system: self.system.clone(),
            digits,
        })
    }
}

/// An element of a finite quotient: the digit vector `d1..dn`.
///
/// Trailing zeros are permitted and meaningful — the level records which
/// quotient the point lives in.  Equality through [`PartialEq`] is
/// structural; use [`lex_compare`] or [`PartialOrd`] for the order on the
/// underlying eventually-zero sequences, under which `(1)` and `(1,0)`
/// coincide.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LevelPoint {
    system: RadixSystem,
    digits: Vec<u64>,
}

impl LevelPoint {
    pub fn new(system: RadixSystem, digits: Vec<u64>) -> Result<Self> {
        for (idx, &d) in digits.iter().enumerate() {
            let position = idx as u64 + 1;
            let radix = system.radix_at(position);
            if d >= radix {
                return Err(Error::DigitOutOfRange {
                    position,
                    digit: d,
                    radix,
                });
            }
        }
        Ok(LevelPoint { system, digits })
    }

    pub fn system(&self) -> &RadixSystem {
        &self.system
    }

    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    pub fn level(&self) -> u64 {
        self.digits.len() as u64
    }

    pub fn is_bottom(&self) -> bool {
        self.digits.iter().all(|&d| d == 0)
    }

    pub fn is_top(&self) -> bool {
        self.digits
            .iter()
            .enumerate()
            .all(|(idx, &d)| d + 1 == self.system.radix_at(idx as u64 + 1))
    }

    /// Digit of the eventually-zero sequence at 1-based position `i`.
    pub fn digit(&self, i: u64) -> u64 {
        if i >= 1 && i <= self.level() {
            self.digits[(i - 1) as usize]
        } else {
            0
        }
    }

    /// The immediate lexicographic successor at the same level.
    pub fn successor(&self) -> Result<LevelPoint> {
        self.clone().into_successor()
    }

    /// The immediate lexicographic predecessor at the same level.
    pub fn predecessor(&self) -> Result<LevelPoint> {
        self.clone().into_predecessor()
    }

    pub(crate) fn into_successor(mut self) -> Result<LevelPoint> {
        let mut pos = self.digits.len();
        loop {
            if pos == 0 {
                return Err(Error::Overflow);
            }
            let r = self.system.radix_at(pos as u64);
            if self.digits[pos - 1] + 1 < r {
                self.digits[pos - 1] += 1;
                break;
            }
            self.digits[pos - 1] = 0;
            pos -= 1;
        }
        Ok(self)
    }

    pub(crate) fn into_predecessor(mut self) -> Result<LevelPoint> {
        let mut pos = self.digits.len();
        loop {
            if pos == 0 {
                return Err(Error::Underflow);
            }
            if self.digits[pos - 1] > 0 {
                self.digits[pos - 1] -= 1;
                break;
            }
            self.digits[pos - 1] = self.system.radix_at(pos as u64) - 1;
            pos -= 1;
        }
        Ok(self)
    }

    /// Number of same-level points strictly below this one; the mixed-radix
    /// place value of the digit vector.
    pub fn rank(&self) -> BigUint {
        if let Some(rank) = self.rank_u128() {
            return BigUint::from(rank);
        }
        let mut acc = BigUint::zero();
        for (idx, &d) in self.digits.iter().enumerate() {
            acc *= self.system.radix_at(idx as u64 + 1);
            acc += d;
        }
        acc
    }

    /// The rank when it fits a machine word pair.
    pub(crate) fn rank_u128(&self) -> Option<u128> {
        let mut acc = 0u128;
        for (idx, &d) in self.digits.iter().enumerate() {
            acc = acc
                .checked_mul(u128::from(self.system.radix_at(idx as u64 + 1)))?
                .checked_add(u128::from(d))?;
        }
        Some(acc)
    }

    /// Inverse of [`rank`](Self::rank) at a fixed level.
    pub fn unrank(system: &RadixSystem, level: u64, rank: &BigUint) -> Result<LevelPoint> {
        use num_integer::Integer;
        let mut digits = vec![0u64; level as usize];
        let mut rest = rank.clone();
        for i in (1..=level).rev() {
            let radix = BigUint::from(system.radix_at(i));
            let (quot, rem) = rest.div_rem(&radix);
            // the remainder is below a u64 radix
            digits[(i - 1) as usize] = u64::try_from(&rem).expect("digit fits u64");
            rest = quot;
        }
        if !rest.is_zero() {
            return Err(Error::RankOutOfRange {
                rank: rank.clone(),
                size: system.level_size(level),
            });
        }
        Ok(LevelPoint {
            system: system.clone(),
            digits,
        })
    }

    /// Zero-pad up to level `m` (the embedding of a finite quotient into a
    /// finer one).
    pub fn embed(&self, m: u64) -> Result<LevelPoint> {
        if m < self.level() {
            return Err(Error::LevelTooSmall {
                current: self.level(),
                requested: m,
            });
        }
        let mut digits = self.digits.clone();
        digits.resize(m as usize, 0);
        Ok(LevelPoint {
            system: self.system.clone(),
            digits,
        })
    }

    /// Pad with maximal digits up to level `m`: the greatest level-`m`
    /// point whose prefix this point is.
    pub fn embed_max(&self, m: u64) -> Result<LevelPoint> {
        if m < self.level() {
            return Err(Error::LevelTooSmall {
                current: self.level(),
                requested: m,
            });
        }
        let mut digits = self.digits.clone();
        for i in self.level() + 1..=m {
            digits.push(self.system.radix_at(i) - 1);
        }
        Ok(LevelPoint {
            system: self.system.clone(),
            digits,
        })
    }

    /// Truncate to the first `n` digits (the projection onto a coarser
    /// quotient).
    pub fn project(&self, n: u64) -> Result<LevelPoint> {
        if n > self.level() {
            return Err(Error::LevelTooLarge {
                current: self.level(),
                requested: n,
            });
        }
        Ok(LevelPoint {
            system: self.system.clone(),
            digits: self.digits[..n as usize].to_vec(),
        })
    }

    /// Componentwise addition mod the radix at each position — the group law
    /// of the direct sum of cyclic groups.  Both points must share system and
    /// level.
    pub fn group_add(&self, other: &LevelPoint) -> Result<LevelPoint> {
        if self.system != other.system {
            return Err(Error::MixedSystems);
        }
        if self.level() != other.level() {
            return Err(Error::LevelMismatch(self.level(), other.level()));
        }
        let digits = self
            .digits
            .iter()
            .zip(other.digits.iter())
            .enumerate()
            .map(|(idx, (&a, &b))| (a + b) % self.system.radix_at(idx as u64 + 1))
            .collect();
        Ok(LevelPoint {
            system: self.system.clone(),
            digits,
        })
    }
}

/// Compare as eventually-zero sequences; `None` when the systems differ.
impl PartialOrd for LevelPoint {
    fn partial_cmp(&self, other: &LevelPoint) -> Option<std::cmp::Ordering> {
        if self.system != other.system {
            return None;
        }
        let limit = self.level().max(other.level());
        for i in 1..=limit {
            let ord = self.digit(i).cmp(&other.digit(i));
            if ord != std::cmp::Ordering::Equal {
                return Some(ord);
            }
        }
        Some(std::cmp::Ordering::Equal)
    }
}

/// The eventually-max sequence immediately below a nonzero compact element:
/// the supremum of everything strictly below the base point.
///
/// Kept symbolic as the base point plus a marker; its digit expansion copies
/// the base up to the last nonzero digit, decrements that digit, and
/// continues with the maximal digit at every later position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoCompactPoint {
    base: LevelPoint,
}

impl CoCompactPoint {
    /// Errors with [`Error::Underflow`] when the base is the bottom element,
    /// which has nothing below it.
    pub fn new(base: LevelPoint) -> Result<Self> {
        if base.is_bottom() {
            return Err(Error::Underflow);
        }
        Ok(CoCompactPoint { base })
    }

    pub fn base(&self) -> &LevelPoint {
        &self.base
    }

    pub fn system(&self) -> &RadixSystem {
        self.base.system()
    }

    fn last_nonzero(&self) -> u64 {
        let mut last = 0;
        for (idx, &d) in self.base.digits().iter().enumerate() {
            if d > 0 {
                last = idx as u64 + 1;
            }
        }
        last
    }

    /// Digit of the eventually-max sequence at 1-based position `i`.
    pub fn digit(&self, i: u64) -> u64 {
        let pivot = self.last_nonzero();
        match i.cmp(&pivot) {
            std::cmp::Ordering::Less => self.base.digit(i),
            std::cmp::Ordering::Equal => self.base.digit(i) - 1,
            std::cmp::Ordering::Greater => self.system().radix_at(i) - 1,
        }
    }
}

/// A total rule producing the digit at each 1-based position: finite access
/// to an arbitrary point of the infinite product.  Queries must be
/// deterministic and in range for the system's radices.
pub trait DigitProvider {
    fn system(&self) -> &RadixSystem;
    fn digit(&self, i: u64) -> u64;
}

/// A provider computing each digit from a function.
pub struct FnProvider<F> {
    system: RadixSystem,
    rule: F,
}

impl<F: Fn(u64) -> u64> FnProvider<F> {
    pub fn new(system: RadixSystem, rule: F) -> Self {
        FnProvider { system, rule }
    }
}

impl<F: Fn(u64) -> u64> DigitProvider for FnProvider<F> {
    fn system(&self) -> &RadixSystem {
        &self.system
    }

    fn digit(&self, i: u64) -> u64 {
        let d = (self.rule)(i);
        debug_assert!(d < self.system.radix_at(i), "provider digit out of range");
        d
    }
}

/// A compact element viewed as the stream of its digits followed by zeros.
pub struct PointStream {
    point: LevelPoint,
}

impl PointStream {
    pub fn new(point: LevelPoint) -> Self {
        PointStream { point }
    }
}

impl DigitProvider for PointStream {
    fn system(&self) -> &RadixSystem {
        self.point.system()
    }

    fn digit(&self, i: u64) -> u64 {
        self.point.digit(i)
    }
}

/// Either kind of point, for uniform lexicographic comparison.
#[derive(Clone, Copy)]
pub enum Point<'a> {
    Compact(&'a LevelPoint),
    CoCompact(&'a CoCompactPoint),
    Stream(&'a dyn DigitProvider),
}

impl<'a> Point<'a> {
    fn system(&self) -> &RadixSystem {
        match self {
            Point::Compact(p) => p.system(),
            Point::CoCompact(p) => p.system(),
            Point::Stream(p) => p.system(),
        }
    }

    fn digit(&self, i: u64) -> u64 {
        match self {
            Point::Compact(p) => p.digit(i),
            Point::CoCompact(p) => p.digit(i),
            Point::Stream(p) => p.digit(i),
        }
    }

    /// Position after which the digits follow the kind's fixed tail pattern
    /// (zeros for compact points, maxima for co-compact ones); `None` for
    /// streams, whose tail is unknown.
    fn settled_after(&self) -> Option<u64> {
        match self {
            Point::Compact(p) => Some(p.level()),
            Point::CoCompact(p) => Some(p.base().level()),
            Point::Stream(_) => None,
        }
    }

    fn tail_is_max(&self) -> bool {
        matches!(self, Point::CoCompact(_))
    }
}

impl<'a> From<&'a LevelPoint> for Point<'a> {
    fn from(p: &'a LevelPoint) -> Self {
        Point::Compact(p)
    }
}

impl<'a> From<&'a CoCompactPoint> for Point<'a> {
    fn from(p: &'a CoCompactPoint) -> Self {
        Point::CoCompact(p)
    }
}

/// Outcome of a lexicographic comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LexOrdering {
    Less,
    Equal,
    Greater,
    /// The inputs agree on every queried digit; deciding would need more
    /// than the allotted depth.  Carries the consumed depth.
    Undecided { depth: u64 },
}

/// First differing digit decides.  Comparisons between compact and
/// co-compact points always settle within the finite prefixes plus one tail
/// digit; comparisons involving a stream consume at most `depth_budget`
/// digits and report [`LexOrdering::Undecided`] when the prefixes agree
/// throughout.
pub fn lex_compare(x: Point<'_>, y: Point<'_>, depth_budget: u64) -> Result<LexOrdering> {
    if x.system() != y.system() {
        return Err(Error::MixedSystems);
    }
    match (x.settled_after(), y.settled_after()) {
        (Some(bx), Some(by)) => {
            let limit = bx.max(by);
            for i in 1..=limit {
                match x.digit(i).cmp(&y.digit(i)) {
                    std::cmp::Ordering::Less => return Ok(LexOrdering::Less),
                    std::cmp::Ordering::Greater => return Ok(LexOrdering::Greater),
                    std::cmp::Ordering::Equal => {}
                }
            }
            // Identical through both prefixes: the constant tails decide.
            Ok(match (x.tail_is_max(), y.tail_is_max()) {
                (false, false) | (true, true) => LexOrdering::Equal,
                (false, true) => LexOrdering::Less,
                (true, false) => LexOrdering::Greater,
            })
        }
        _ => {
            for i in 1..=depth_budget {
                match x.digit(i).cmp(&y.digit(i)) {
                    std::cmp::Ordering::Less => return Ok(LexOrdering::Less),
                    std::cmp::Ordering::Greater => return Ok(LexOrdering::Greater),
                    std::cmp::Ordering::Equal => {}
                }
            }
            Ok(LexOrdering::Undecided {
                depth: depth_budget,
            })
        }
    }
}
