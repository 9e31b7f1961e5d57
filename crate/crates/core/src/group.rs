//! Finite groups as Cayley tables, surjective homomorphisms between them,
//! and strict chains of quotients.
//!
//! Everything is validated exhaustively: the Latin-square property, the
//! identity and inverse laws, associativity over all triples, the
//! homomorphism law over all pairs.  A validated chain yields the sequence
//! of cyclic-group orders — the base order followed by the kernel sizes of
//! the connecting maps — whose direct sum has the same cardinality as the
//! chain at every level, and therefore the same uniform measure.

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use crate::error::{Error as RadixError, Result as RadixResult};
use crate::radix::RadixSystem;

/// A violation found while checking the group axioms.  Validation stops at
/// the first offender and names it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupDefect {
    #[error("table has {found} entries, expected {expected}")]
    BadTableSize { expected: usize, found: usize },
    #[error("table entry {value} at ({row}, {col}) is out of range")]
    EntryOutOfRange { row: usize, col: usize, value: usize },
    #[error("identity index {0} is out of range")]
    IdentityOutOfRange(usize),
    #[error("row {row} repeats entry {value}")]
    RowNotPermutation { row: usize, value: usize },
    #[error("column {col} repeats entry {value}")]
    ColumnNotPermutation { col: usize, value: usize },
    #[error("identity law fails at element {0}")]
    IdentityFailure(usize),
    #[error("element {0} has no two-sided inverse")]
    MissingInverse(usize),
    #[error("associativity fails at triple ({a}, {b}, {c})")]
    NotAssociative { a: usize, b: usize, c: usize },
}

/// A violation found while checking a homomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomDefect {
    #[error("map has {found} entries, expected {expected}")]
    BadMapLength { expected: usize, found: usize },
    #[error("map value {value} at {index} is out of range")]
    ValueOutOfRange { index: usize, value: usize },
    #[error("homomorphism law fails at pair ({a}, {b})")]
    NotHomomorphism { a: usize, b: usize },
    #[error("target element {0} has no preimage")]
    NotSurjective(usize),
}

/// A violation found while assembling a tower.  Indices are zero-based in
/// the data and rendered one-based in messages.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TowerDefect {
    #[error("a tower needs at least one level")]
    NoLevels,
    #[error("expected {expected} steps for {levels} levels, found {found}")]
    BadStepCount {
        levels: usize,
        expected: usize,
        found: usize,
    },
    #[error("group at level {}: {defect}", level + 1)]
    Group { level: usize, defect: GroupDefect },
    #[error("step {}: {defect}", step + 1)]
    Hom { step: usize, defect: HomDefect },
    #[error("step {} does not connect level {} to level {}", step + 1, step + 2, step + 1)]
    EndpointMismatch { step: usize },
    #[error("step {} has a trivial kernel; the chain does not refine", step + 1)]
    TrivialKernel { step: usize },
}

/// A finite group given by its Cayley table (row-major: `table[a][b] = a*b`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    identity: usize,
    table: Vec<usize>,
}

impl FiniteGroup {
    /// Shape checks only; use [`validate`](Self::validate) for the axioms.
    pub fn new(order: usize, identity: usize, table: Vec<usize>) -> Result<Self, GroupDefect> {
        if table.len() != order * order {
            return Err(GroupDefect::BadTableSize {
                expected: order * order,
                found: table.len(),
            });
        }
        if identity >= order {
            return Err(GroupDefect::IdentityOutOfRange(identity));
        }
        for (i, &v) in table.iter().enumerate() {
            if v >= order {
                return Err(GroupDefect::EntryOutOfRange {
                    row: i / order,
                    col: i % order,
                    value: v,
                });
            }
        }
        Ok(FiniteGroup {
            order,
            identity,
            table,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    /// Exhaustive check of the group axioms: Latin square, identity,
    /// two-sided inverses, associativity over all `order^3` triples.
    pub fn validate(&self) -> Result<(), GroupDefect> {
        let n = self.order;
        for row in 0..n {
            let mut seen = vec![false; n];
            for col in 0..n {
                let v = self.op(row, col);
                if seen[v] {
                    return Err(GroupDefect::RowNotPermutation { row, value: v });
                }
                seen[v] = true;
            }
        }
        for col in 0..n {
            let mut seen = vec![false; n];
            for row in 0..n {
                let v = self.op(row, col);
                if seen[v] {
                    return Err(GroupDefect::ColumnNotPermutation { col, value: v });
                }
                seen[v] = true;
            }
        }
        for a in 0..n {
            if self.op(a, self.identity) != a || self.op(self.identity, a) != a {
                return Err(GroupDefect::IdentityFailure(a));
            }
        }
        for a in 0..n {
            let mut has_inverse = false;
            for b in 0..n {
                if self.op(a, b) == self.identity && self.op(b, a) == self.identity {
                    has_inverse = true;
                    break;
                }
            }
            if !has_inverse {
                return Err(GroupDefect::MissingInverse(a));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.op(a, b);
                for c in 0..n {
                    if self.op(ab, c) != self.op(a, self.op(b, c)) {
                        return Err(GroupDefect::NotAssociative { a, b, c });
                    }
                }
            }
        }
        Ok(())
    }

    /// Uniform mass vector: `order` copies of `1/order`.
    pub fn haar_vector(&self) -> Vec<BigRational> {
        let mass = BigRational::new(BigInt::from(1), BigInt::from(self.order));
        vec![mass; self.order]
    }

    /// The cyclic group of order `n` under addition mod `n`.
    pub fn cyclic(n: usize) -> FiniteGroup {
        assert!(n >= 1);
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                table.push((a + b) % n);
            }
        }
        FiniteGroup {
            order: n,
            identity: 0,
            table,
        }
    }

    /// The dihedral group of order `2n`: indices `0..n` are the rotations
    /// `x -> x + a`, indices `n..2n` the reflections `x -> a - x`, composed
    /// as functions on the integers mod `n`.
    pub fn dihedral(n: usize) -> FiniteGroup {
        assert!(n >= 1);
        let order = 2 * n;
        // (kind, shift) composed as f.g: apply g first, then f.
        let compose = |f: usize, g: usize| -> usize {
            let (fk, fa) = (f / n, f % n);
            let (gk, ga) = (g / n, g % n);
            match (fk, gk) {
                (0, 0) => (fa + ga) % n,
                (0, 1) => n + (fa + ga) % n,
                (1, 0) => n + (fa + n - ga) % n,
                (1, 1) => (fa + n - ga) % n,
                _ => unreachable!(),
            }
        };
        let mut table = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                table.push(compose(a, b));
            }
        }
        FiniteGroup {
            order,
            identity: 0,
            table,
        }
    }

    /// The quaternion group of order 8.  Indices encode `(axis, sign)` with
    /// axes `1, i, j, k`: element `2*axis + (sign < 0)`.
    pub fn quaternion() -> FiniteGroup {
        // multiplication of (axis, sign) pairs via the i,j,k rules
        let mul = |a: usize, b: usize| -> usize {
            let (ax, asign) = (a / 2, a % 2 == 1);
            let (bx, bsign) = (b / 2, b % 2 == 1);
            let (cx, flips) = match (ax, bx) {
                (0, x) => (x, false),
                (x, 0) => (x, false),
                (1, 1) | (2, 2) | (3, 3) => (0, true),
                (1, 2) => (3, false), // i*j = k
                (2, 1) => (3, true),  // j*i = -k
                (2, 3) => (1, false), // j*k = i
                (3, 2) => (1, true),  // k*j = -i
                (3, 1) => (2, false), // k*i = j
                (1, 3) => (2, true),  // i*k = -j
                _ => unreachable!(),
            };
            let csign = asign ^ bsign ^ flips;
            2 * cx + usize::from(csign)
        };
        let mut table = Vec::with_capacity(64);
        for a in 0..8 {
            for b in 0..8 {
                table.push(mul(a, b));
            }
        }
        FiniteGroup {
            order: 8,
            identity: 0,
            table,
        }
    }
}

/// Exact pushforward of the uniform distribution through a map, compared
/// against the uniform distribution on the target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PushforwardMasses {
    /// Mass landing on each target element, exact.
    pub masses: Vec<BigRational>,
    /// Whether every mass equals `1/|target|`.
    pub uniform: bool,
}

/// A homomorphism between Cayley-table groups, given elementwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupHom {
    source: FiniteGroup,
    target: FiniteGroup,
    map: Vec<usize>,
}

impl GroupHom {
    /// Shape checks only; use [`validate`](Self::validate) for the laws.
    pub fn new(
        source: FiniteGroup,
        target: FiniteGroup,
        map: Vec<usize>,
    ) -> Result<Self, HomDefect> {
        if map.len() != source.order() {
            return Err(HomDefect::BadMapLength {
                expected: source.order(),
                found: map.len(),
            });
        }
        for (index, &value) in map.iter().enumerate() {
            if value >= target.order() {
                return Err(HomDefect::ValueOutOfRange { index, value });
            }
        }
        Ok(GroupHom {
            source,
            target,
            map,
        })
    }

    pub fn source(&self) -> &FiniteGroup {
        &self.source
    }

    pub fn target(&self) -> &FiniteGroup {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    /// Exhaustive check of the homomorphism law over all pairs, plus
    /// surjectivity.
    pub fn validate(&self) -> Result<(), HomDefect> {
        let n = self.source.order();
        for a in 0..n {
            for b in 0..n {
                if self.map[self.source.op(a, b)] != self.target.op(self.map[a], self.map[b]) {
                    return Err(HomDefect::NotHomomorphism { a, b });
                }
            }
        }
        let mut hit = vec![false; self.target.order()];
        for &v in &self.map {
            hit[v] = true;
        }
        if let Some(missing) = hit.iter().position(|h| !h) {
            return Err(HomDefect::NotSurjective(missing));
        }
        Ok(())
    }

    /// Size of the preimage of the target identity.
    pub fn kernel_size(&self) -> usize {
        self.map
            .iter()
            .filter(|&&v| v == self.target.identity())
            .count()
    }

    /// Push the uniform distribution on the source through the map and
    /// compare with uniform on the target.  For a surjective homomorphism
    /// every fiber has the same size, so the output must be uniform; the
    /// report verifies it rather than assuming it.
    pub fn pushforward_uniform(&self) -> PushforwardMasses {
        let mut counts = vec![0usize; self.target.order()];
        for &v in &self.map {
            counts[v] += 1;
        }
        let n = BigInt::from(self.source.order());
        let masses: Vec<BigRational> = counts
            .into_iter()
            .map(|c| BigRational::new(BigInt::from(c), n.clone()))
            .collect();
        let expected = BigRational::new(BigInt::from(1), BigInt::from(self.target.order()));
        let uniform = masses.iter().all(|m| *m == expected);
        PushforwardMasses { masses, uniform }
    }

    /// `later` after `earlier`: the composite sending `x` to
    /// `later(earlier(x))`.
    pub fn compose(earlier: &GroupHom, later: &GroupHom) -> Result<GroupHom, HomDefect> {
        let map = earlier.map.iter().map(|&v| later.apply(v)).collect();
        GroupHom::new(earlier.source.clone(), later.target.clone(), map)
    }
}

/// A strict chain of finite quotients: `levels[0]` is the coarsest group and
/// `steps[k]` maps `levels[k+1]` onto `levels[k]`.  Construction validates
/// every group and step and insists each kernel has at least two elements,
/// so each level properly refines the one below.
#[derive(Debug, Clone)]
pub struct Tower {
    levels: Vec<FiniteGroup>,
    steps: Vec<GroupHom>,
}

impl Tower {
    pub fn new(levels: Vec<FiniteGroup>, steps: Vec<GroupHom>) -> Result<Self, TowerDefect> {
        if levels.is_empty() {
            return Err(TowerDefect::NoLevels);
        }
        if steps.len() + 1 != levels.len() {
            return Err(TowerDefect::BadStepCount {
                levels: levels.len(),
                expected: levels.len() - 1,
                found: steps.len(),
            });
        }
        for (level, group) in levels.iter().enumerate() {
            group
                .validate()
                .map_err(|defect| TowerDefect::Group { level, defect })?;
        }
        for (step, hom) in steps.iter().enumerate() {
            if hom.source() != &levels[step + 1] || hom.target() != &levels[step] {
                return Err(TowerDefect::EndpointMismatch { step });
            }
            hom.validate()
                .map_err(|defect| TowerDefect::Hom { step, defect })?;
            if hom.kernel_size() < 2 {
                return Err(TowerDefect::TrivialKernel { step });
            }
        }
        Ok(Tower { levels, steps })
    }

    pub fn levels(&self) -> &[FiniteGroup] {
        &self.levels
    }

    pub fn steps(&self) -> &[GroupHom] {
        &self.steps
    }

    /// The cyclic-group orders of the abelian replacement chain: the base
    /// order first, then the kernel size of each step.  The running product
    /// of the orders equals the level cardinalities, so the replacement
    /// carries the same uniform measure level by level.  The period extends
    /// the finite data by the smallest admissible radix.
    pub fn abelianize(&self) -> RadixResult<RadixSystem> {
        let base = self.levels[0].order() as u64;
        if base < 2 {
            return Err(RadixError::TrivialBase);
        }
        let mut preperiod = vec![base];
        for hom in &self.steps {
            preperiod.push(hom.kernel_size() as u64);
        }
        RadixSystem::new(preperiod, vec![2])
    }
}

/// The reduction map between cyclic groups, `x -> x mod n`; requires `n`
/// to divide `m` so that it is a homomorphism.
pub fn cyclic_mod_hom(m: usize, n: usize) -> Result<GroupHom, HomDefect> {
    assert!(n > 0 && m.is_multiple_of(n), "modulus must divide the order");
    let map = (0..m).map(|x| x % n).collect();
    GroupHom::new(FiniteGroup::cyclic(m), FiniteGroup::cyclic(n), map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn rat(num: i64, den: i64) -> BigRational {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    #[test]
    fn cyclic_groups_validate() {
        let z2 = FiniteGroup::new(2, 0, vec![0, 1, 1, 0]).unwrap();
        assert_eq!(z2.validate(), Ok(()));
        assert_eq!(z2, FiniteGroup::cyclic(2));
        for n in 1..=12 {
            assert_eq!(FiniteGroup::cyclic(n).validate(), Ok(()));
        }
    }

    #[test]
    fn corrupted_tables_are_rejected_with_the_first_offender() {
        // duplicate entry in row 0
        let bad = FiniteGroup::new(2, 0, vec![0, 0, 1, 0]).unwrap();
        assert_eq!(
            bad.validate(),
            Err(GroupDefect::RowNotPermutation { row: 0, value: 0 })
        );
        // a Latin square with identity where element 2 has only one-sided
        // inverses
        let no_inverse = FiniteGroup::new(
            5,
            0,
            vec![
                0, 1, 2, 3, 4, //
                1, 0, 3, 4, 2, //
                2, 3, 4, 0, 1, //
                3, 4, 1, 2, 0, //
                4, 2, 0, 1, 3,
            ],
        )
        .unwrap();
        assert_eq!(no_inverse.validate(), Err(GroupDefect::MissingInverse(2)));
        // a loop with two-sided inverses that is not associative
        let loop5 = FiniteGroup::new(
            5,
            0,
            vec![
                0, 1, 2, 3, 4, //
                1, 0, 3, 4, 2, //
                2, 4, 0, 1, 3, //
                3, 2, 4, 0, 1, //
                4, 3, 1, 2, 0,
            ],
        )
        .unwrap();
        assert_eq!(
            loop5.validate(),
            Err(GroupDefect::NotAssociative { a: 1, b: 1, c: 2 })
        );
        assert_eq!(
            FiniteGroup::new(2, 0, vec![0, 1, 1]).unwrap_err(),
            GroupDefect::BadTableSize {
                expected: 4,
                found: 3
            }
        );
    }

    #[test]
    fn dihedral_and_quaternion_tables_satisfy_the_axioms() {
        let d4 = FiniteGroup::dihedral(4);
        assert_eq!(d4.order(), 8);
        assert_eq!(d4.validate(), Ok(()));
        // defining relations: r^4 = e, s^2 = e, s r s = r^-1
        let r = 1;
        let s = 4;
        assert_eq!(d4.op(d4.op(r, r), d4.op(r, r)), 0);
        assert_eq!(d4.op(s, s), 0);
        assert_eq!(d4.op(d4.op(s, r), s), 3);

        let q8 = FiniteGroup::quaternion();
        assert_eq!(q8.order(), 8);
        assert_eq!(q8.validate(), Ok(()));
        // i^2 = j^2 = k^2 = -1 and ij = k
        let (minus_one, i, j, k) = (1, 2, 4, 6);
        assert_eq!(q8.op(i, i), minus_one);
        assert_eq!(q8.op(j, j), minus_one);
        assert_eq!(q8.op(k, k), minus_one);
        assert_eq!(q8.op(i, j), k);
        // non-abelian: ji = -k
        assert_eq!(q8.op(j, i), 7);
    }

    #[test]
    fn hom_validation_reports_the_first_failure() {
        let z2 = FiniteGroup::cyclic(2);
        let identity = GroupHom::new(z2.clone(), z2.clone(), vec![0, 1]).unwrap();
        assert_eq!(identity.validate(), Ok(()));

        let constant = GroupHom::new(z2.clone(), z2.clone(), vec![0, 0]).unwrap();
        assert_eq!(constant.validate(), Err(HomDefect::NotSurjective(1)));

        let swap = GroupHom::new(z2.clone(), z2.clone(), vec![1, 0]).unwrap();
        assert_eq!(
            swap.validate(),
            Err(HomDefect::NotHomomorphism { a: 0, b: 0 })
        );

        let d4_to_z2 = GroupHom::new(
            FiniteGroup::dihedral(4),
            z2,
            vec![0, 0, 0, 0, 1, 1, 1, 1],
        )
        .unwrap();
        assert_eq!(d4_to_z2.validate(), Ok(()));
    }

    #[test]
    fn kernel_sizes_count_the_fiber_of_the_identity() {
        let z6 = FiniteGroup::cyclic(6);
        let identity = GroupHom::new(z6.clone(), z6.clone(), (0..6).collect()).unwrap();
        assert_eq!(identity.kernel_size(), 1);

        let d4_to_z2 = GroupHom::new(
            FiniteGroup::dihedral(4),
            FiniteGroup::cyclic(2),
            vec![0, 0, 0, 0, 1, 1, 1, 1],
        )
        .unwrap();
        assert_eq!(d4_to_z2.kernel_size(), 4);

        let mod3 = cyclic_mod_hom(6, 3).unwrap();
        assert_eq!(mod3.kernel_size(), 2);
        // Lagrange cross-check
        assert_eq!(
            mod3.source().order(),
            mod3.kernel_size() * mod3.target().order()
        );
    }

    #[test]
    fn pushforward_of_uniform_is_uniform_for_homomorphisms() {
        let to_trivial = GroupHom::new(
            FiniteGroup::dihedral(4),
            FiniteGroup::cyclic(1),
            vec![0; 8],
        )
        .unwrap();
        assert_eq!(to_trivial.validate(), Ok(()));
        let report = to_trivial.pushforward_uniform();
        assert_eq!(report.masses, vec![rat(1, 1)]);
        assert!(report.uniform);

        let d4_to_z2 = GroupHom::new(
            FiniteGroup::dihedral(4),
            FiniteGroup::cyclic(2),
            vec![0, 0, 0, 0, 1, 1, 1, 1],
        )
        .unwrap();
        let report = d4_to_z2.pushforward_uniform();
        assert_eq!(report.masses, vec![rat(1, 2), rat(1, 2)]);
        assert!(report.uniform);

        let report = cyclic_mod_hom(6, 3).unwrap().pushforward_uniform();
        assert_eq!(report.masses, vec![rat(1, 3), rat(1, 3), rat(1, 3)]);
        assert!(report.uniform);

        // a surjection that is not a homomorphism can be skewed
        let z3 = FiniteGroup::cyclic(3);
        let skewed = GroupHom::new(FiniteGroup::cyclic(6), z3, vec![0, 0, 0, 0, 1, 2]).unwrap();
        assert!(!skewed.pushforward_uniform().uniform);
    }

    #[test]
    fn pushforward_distributes_over_composition() {
        let twelve_to_six = cyclic_mod_hom(12, 6).unwrap();
        let six_to_three = cyclic_mod_hom(6, 3).unwrap();
        let composite = GroupHom::compose(&twelve_to_six, &six_to_three).unwrap();
        assert_eq!(composite.validate(), Ok(()));
        assert_eq!(
            composite.pushforward_uniform(),
            cyclic_mod_hom(12, 3).unwrap().pushforward_uniform()
        );
    }

    #[test]
    fn haar_vector_is_normalized_counting() {
        assert_eq!(FiniteGroup::cyclic(1).haar_vector(), vec![rat(1, 1)]);
        assert_eq!(
            FiniteGroup::cyclic(2).haar_vector(),
            vec![rat(1, 2), rat(1, 2)]
        );
        let d4 = FiniteGroup::dihedral(4).haar_vector();
        assert_eq!(d4.len(), 8);
        assert!(d4.iter().all(|m| *m == rat(1, 8)));
        let total: BigRational = d4.into_iter().sum();
        assert!(total.is_one());
    }

    #[test]
    fn towers_validate_and_abelianize() {
        let z4_to_z2 = cyclic_mod_hom(4, 2).unwrap();
        let tower = Tower::new(
            vec![FiniteGroup::cyclic(2), FiniteGroup::cyclic(4)],
            vec![z4_to_z2],
        )
        .unwrap();
        let radices = tower.abelianize().unwrap();
        assert_eq!(radices.preperiod(), &[2, 2]);
        assert_eq!(radices.period(), &[2]);

        let d4_tower = Tower::new(
            vec![FiniteGroup::cyclic(2), FiniteGroup::dihedral(4)],
            vec![GroupHom::new(
                FiniteGroup::dihedral(4),
                FiniteGroup::cyclic(2),
                vec![0, 0, 0, 0, 1, 1, 1, 1],
            )
            .unwrap()],
        )
        .unwrap();
        assert_eq!(d4_tower.abelianize().unwrap().preperiod(), &[2, 4]);

        let chain = Tower::new(
            vec![
                FiniteGroup::cyclic(3),
                FiniteGroup::cyclic(6),
                FiniteGroup::cyclic(12),
            ],
            vec![cyclic_mod_hom(6, 3).unwrap(), cyclic_mod_hom(12, 6).unwrap()],
        )
        .unwrap();
        let radices = chain.abelianize().unwrap();
        assert_eq!(radices.preperiod(), &[3, 2, 2]);

        // the running product of the radices is the level cardinality
        let mut product = 1u64;
        for (k, order) in radices.preperiod().iter().enumerate() {
            product *= order;
            assert_eq!(product, chain.levels()[k].order() as u64);
        }
    }

    #[test]
    fn degenerate_towers_are_rejected() {
        let z2 = FiniteGroup::cyclic(2);
        let identity_step = GroupHom::new(z2.clone(), z2.clone(), vec![0, 1]).unwrap();
        assert_eq!(
            Tower::new(vec![z2.clone(), z2.clone()], vec![identity_step]).unwrap_err(),
            TowerDefect::TrivialKernel { step: 0 }
        );

        let trivial = Tower::new(vec![FiniteGroup::cyclic(1)], vec![]).unwrap();
        assert_eq!(trivial.abelianize().unwrap_err(), RadixError::TrivialBase);

        let mismatched = Tower::new(
            vec![z2.clone(), FiniteGroup::cyclic(4)],
            vec![cyclic_mod_hom(6, 2).unwrap()],
        );
        assert_eq!(
            mismatched.unwrap_err(),
            TowerDefect::EndpointMismatch { step: 0 }
        );
    }
}
