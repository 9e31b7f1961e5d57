//! The Boolean algebra of clopen subsets, represented at a finite level.
//!
//! A clopen set is stored as a sorted list of pairwise disjoint,
//! non-adjacent prefix intervals at a common level `n`: the interval with
//! endpoints `lo <= hi` stands for every infinite digit sequence whose first
//! `n` digits fall between `lo` and `hi` inclusive.  The canonical form is
//! unique per level — adjacent intervals are always merged, the empty set is
//! the empty list, and the whole space is the single full-range interval —
//! so set equality at a common level is syntactic equality.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::radix::{LevelPoint, RadixSystem};

/// A contiguous run of level-`n` prefixes, endpoints inclusive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClopenInterval {
    lo: LevelPoint,
    hi: LevelPoint,
}

impl ClopenInterval {
    pub fn new(lo: LevelPoint, hi: LevelPoint) -> Result<Self> {
        if lo.system() != hi.system() {
            return Err(Error::MixedSystems);
        }
        if lo.level() != hi.level() {
            return Err(Error::LevelMismatch(lo.level(), hi.level()));
        }
        if lo.partial_cmp(&hi) == Some(std::cmp::Ordering::Greater) {
            return Err(Error::EmptyInterval);
        }
        Ok(ClopenInterval { lo, hi })
    }

    pub fn lo(&self) -> &LevelPoint {
        &self.lo
    }

    pub fn hi(&self) -> &LevelPoint {
        &self.hi
    }

    pub fn level(&self) -> u64 {
        self.lo.level()
    }

    pub fn system(&self) -> &RadixSystem {
        self.lo.system()
    }

    /// Number of prefixes covered.
    pub fn point_count(&self) -> BigUint {
        self.hi.rank() - self.lo.rank() + BigUint::one()
    }

    pub(crate) fn point_count_u128(&self) -> Option<u128> {
        Some(self.hi.rank_u128()? - self.lo.rank_u128()? + 1)
    }
}

/// A finite union of prefix intervals in canonical form.
#[derive(Debug, Clone, Eq)]
pub struct ClopenSet {
    system: RadixSystem,
    level: u64,
    intervals: Vec<ClopenInterval>,
}

impl ClopenSet {
    pub fn empty(system: RadixSystem, level: u64) -> Self {
        ClopenSet {
            system,
            level,
            intervals: Vec::new(),
        }
    }

    pub fn full(system: RadixSystem, level: u64) -> Self {
        let lo = system.bottom(level);
        let hi = system.top(level);
        ClopenSet {
            system,
            level,
            intervals: vec![ClopenInterval { lo, hi }],
        }
    }

    /// Build from arbitrary same-level intervals, canonicalizing as needed.
    pub fn from_intervals(
        system: RadixSystem,
        level: u64,
        intervals: Vec<ClopenInterval>,
    ) -> Result<Self> {
        let mut ranges = Vec::with_capacity(intervals.len());
        for iv in &intervals {
            if iv.system() != &system {
                return Err(Error::MixedSystems);
            }
            if iv.level() != level {
                return Err(Error::LevelMismatch(iv.level(), level));
            }
            ranges.push((iv.lo.rank(), iv.hi.rank()));
        }
        Ok(Self::from_rank_ranges(system, level, ranges))
    }

    /// The set of points strictly below `b` and at or above `a`: prefixes in
    /// `[a, predecessor(b)]`.  The upper endpoint is exclusive, so `a = b`
    /// (or `a > b`) bounds the empty set, which is rejected.
    pub fn from_endpoints(a: &LevelPoint, b: &LevelPoint) -> Result<Self> {
        if a.partial_cmp(b) != Some(std::cmp::Ordering::Less) {
            return match a.system() == b.system() {
                true => Err(Error::EmptyInterval),
                false => Err(Error::MixedSystems),
            };
        }
        let level = a.level().max(b.level());
        let lo = a.embed(level)?;
        let hi = b.embed(level)?.into_predecessor()?;
        Ok(ClopenSet {
            system: lo.system().clone(),
            level,
            intervals: vec![ClopenInterval { lo, hi }],
        })
    }

    pub fn system(&self) -> &RadixSystem {
        &self.system
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn intervals(&self) -> &[ClopenInterval] {
        &self.intervals
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.intervals.len() == 1
            && self.intervals[0].lo.is_bottom()
            && self.intervals[0].hi.is_top()
    }

    /// The inclusive rank ranges of the canonical intervals.
    pub fn rank_ranges(&self) -> Vec<(BigUint, BigUint)> {
        self.intervals
            .iter()
            .map(|iv| (iv.lo.rank(), iv.hi.rank()))
            .collect()
    }

    /// Normalize inclusive rank ranges into a canonical set: sort, merge
    /// overlapping and adjacent runs, convert back to digit endpoints.
    /// Every rank must lie below the level size.
    pub fn from_rank_ranges(
        system: RadixSystem,
        level: u64,
        mut ranges: Vec<(BigUint, BigUint)>,
    ) -> Self {
        ranges.retain(|(lo, hi)| lo <= hi);
        ranges.sort();
        let mut merged: Vec<(BigUint, BigUint)> = Vec::with_capacity(ranges.len());
        for (lo, hi) in ranges {
            match merged.last_mut() {
                Some((_, last_hi)) if lo <= last_hi.clone() + BigUint::one() => {
                    if hi > *last_hi {
                        *last_hi = hi;
                    }
                }
                _ => merged.push((lo, hi)),
            }
        }
        let intervals = merged
            .into_iter()
            .map(|(lo, hi)| ClopenInterval {
                lo: LevelPoint::unrank(&system, level, &lo).expect("rank in range"),
                hi: LevelPoint::unrank(&system, level, &hi).expect("rank in range"),
            })
            .collect();
        ClopenSet {
            system,
            level,
            intervals,
        }
    }

    /// Re-express the same point-set at a finer level.
    pub fn refine(&self, m: u64) -> Result<ClopenSet> {
        if m < self.level {
            return Err(Error::LevelTooSmall {
                current: self.level,
                requested: m,
            });
        }
        if m == self.level {
            return Ok(self.clone());
        }
        let mut intervals = Vec::with_capacity(self.intervals.len());
        for iv in &self.intervals {
            let lo = iv.lo.embed(m)?;
            let hi = iv.hi.embed_max(m)?;
            intervals.push(ClopenInterval { lo, hi });
        }
        Ok(ClopenSet {
            system: self.system.clone(),
            level: m,
            intervals,
        })
    }

    fn common_level(&self, other: &ClopenSet) -> Result<(ClopenSet, ClopenSet)> {
        if self.system != other.system {
            return Err(Error::MixedSystems);
        }
        let level = self.level.max(other.level);
        Ok((self.refine(level)?, other.refine(level)?))
    }

    pub fn union(&self, other: &ClopenSet) -> Result<ClopenSet> {
        let (a, b) = self.common_level(other)?;
        let mut ranges = a.rank_ranges();
        ranges.extend(b.rank_ranges());
        Ok(Self::from_rank_ranges(a.system, a.level, ranges))
    }

    pub fn intersect(&self, other: &ClopenSet) -> Result<ClopenSet> {
        let (a, b) = self.common_level(other)?;
        let mut ranges = Vec::new();
        for (alo, ahi) in a.rank_ranges() {
            for (blo, bhi) in b.rank_ranges() {
                let lo = alo.clone().max(blo);
                let hi = ahi.clone().min(bhi);
                if lo <= hi {
                    ranges.push((lo, hi));
                }
            }
        }
        Ok(Self::from_rank_ranges(a.system, a.level, ranges))
    }

    pub fn complement(&self) -> ClopenSet {
        let size = self.system.level_size(self.level);
        let mut ranges = Vec::with_capacity(self.intervals.len() + 1);
        let mut next = BigUint::zero();
        for (lo, hi) in self.rank_ranges() {
            if next < lo {
                ranges.push((next, lo - BigUint::one()));
            }
            next = hi + BigUint::one();
        }
        if next < size {
            ranges.push((next, size - BigUint::one()));
        }
        Self::from_rank_ranges(self.system.clone(), self.level, ranges)
    }

    /// Membership of the eventually-zero sequence determined by `p`.
    pub fn contains(&self, p: &LevelPoint) -> Result<bool> {
        if p.system() != &self.system {
            return Err(Error::MixedSystems);
        }
        let prefix = if p.level() >= self.level {
            p.project(self.level)?
        } else {
            p.embed(self.level)?
        };
        let rank = prefix.rank();
        Ok(self
            .rank_ranges()
            .into_iter()
            .any(|(lo, hi)| lo <= rank && rank <= hi))
    }
}

/// Canonical forms at a common level are compared syntactically.
impl PartialEq for ClopenSet {
    fn eq(&self, other: &ClopenSet) -> bool {
        if self.system != other.system {
            return false;
        }
        match self.common_level(other) {
            Ok((a, b)) => a.intervals == b.intervals,
            Err(_) => false,
        }
    }
}

/// Atoms of the finite Boolean subalgebra the generators span: nonempty,
/// pairwise disjoint, their union the whole space, and every generator a
/// union of atoms.  The trivial subalgebra (no generators) has the whole
/// space as its only atom.
pub fn partition_atoms(system: &RadixSystem, generators: &[ClopenSet]) -> Result<Vec<ClopenSet>> {
    let mut level = 1;
    for g in generators {
        if g.system() != system {
            return Err(Error::MixedSystems);
        }
        level = level.max(g.level());
    }
    let size = system.level_size(level);
    let refined: Vec<Vec<(BigUint, BigUint)>> = generators
        .iter()
        .map(|g| g.refine(level).map(|r| r.rank_ranges()))
        .collect::<Result<_>>()?;

    // Cut the full rank range at every generator boundary.
    let mut cuts: Vec<BigUint> = vec![BigUint::zero(), size.clone()];
    for ranges in &refined {
        for (lo, hi) in ranges {
            cuts.push(lo.clone());
            cuts.push(hi.clone() + BigUint::one());
        }
    }
    cuts.sort();
    cuts.dedup();

    // Group the elementary segments by their membership signature.
    type Signed = (Vec<bool>, Vec<(BigUint, BigUint)>);
    let mut groups: Vec<Signed> = Vec::new();
    for window in cuts.windows(2) {
        let (start, end) = (&window[0], &window[1]);
        if start >= end {
            continue;
        }
        let signature: Vec<bool> = refined
            .iter()
            .map(|ranges| ranges.iter().any(|(lo, hi)| lo <= start && start <= hi))
            .collect();
        let segment = (start.clone(), end.clone() - BigUint::one());
        match groups.iter_mut().find(|(sig, _)| *sig == signature) {
            Some((_, segs)) => segs.push(segment),
            None => groups.push((signature, vec![segment])),
        }
    }

    let mut atoms: Vec<ClopenSet> = groups
        .into_iter()
        .map(|(_, segs)| ClopenSet::from_rank_ranges(system.clone(), level, segs))
        .collect();
    atoms.sort_by_key(|atom| atom.intervals[0].lo.rank());
    Ok(atoms)
}
