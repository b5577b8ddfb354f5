//! Counting systems: a finite carrier, a total self-map, and a base point.
//!
//! The orbit of the base point is eventually periodic (the "rho shape"):
//! a tail of `t` pre-periodic steps followed by a cycle of length `l`.
//! Everything else in the crate is built on this decomposition:
//!
//! * `iterate(k)` evaluates `f^k(x0)` for arbitrarily large `k` by reducing
//!   the exponent modulo the cycle,
//! * `sharp(A)` assigns a carrier element to every finite set, depending on
//!   the set only through its cardinality,
//! * morphisms between systems are structure-preserving maps of carriers.
//!
//! A system is *minimal* when the orbit covers the whole carrier; minimality
//! is what the structure theory in [`crate::minimal`] and the arithmetic in
//! [`crate::arith`] require.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::finset::{FiniteSet, MapTable};

/// The eventually periodic orbit of the base point.
///
/// `orbit` lists the distinct elements in visit order, so
/// `orbit[k] = f^k(x0)` for `k < tail + cycle`, and
/// `f(orbit[tail + cycle - 1]) = orbit[tail]` closes the cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trajectory {
    orbit: Vec<usize>,
    tail: usize,
    cycle: usize,
}

impl Trajectory {
    /// Elements in first-visit order.
    pub fn orbit(&self) -> &[usize] {
        &self.orbit
    }

    /// Number of pre-periodic steps.
    pub fn tail(&self) -> usize {
        self.tail
    }

    /// Length of the cycle; always at least 1.
    pub fn cycle(&self) -> usize {
        self.cycle
    }

    /// Total number of distinct orbit elements, `tail + cycle`.
    pub fn len(&self) -> usize {
        self.orbit.len()
    }

    pub fn is_empty(&self) -> bool {
        false // a trajectory always contains at least the base point
    }
}

/// Canonical coordinate of a reachable element: the least `k` with
/// `f^k(x0)` equal to it. Always lies in `[0, tail + cycle)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Coordinate(pub(crate) usize);

impl Coordinate {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for Coordinate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A counting system: carrier `{0, ..., n-1}`, self-map table `f`, and base
/// point `x0`.
///
/// Values are immutable after construction. The trajectory of the base point
/// is computed on first use and cached; the cache is safe under concurrent
/// first access and invisible to callers.
#[derive(Debug, Clone)]
pub struct CountingSystem {
    n: usize,
    f: Vec<usize>,
    x0: usize,
    trajectory: OnceLock<Trajectory>,
}

impl PartialEq for CountingSystem {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.f == other.f && self.x0 == other.x0
    }
}

impl Eq for CountingSystem {}

impl CountingSystem {
    /// Validates and builds a system. The carrier must be non-empty, the
    /// table total with in-range entries, and the base point in range.
    pub fn new(n: usize, f: Vec<usize>, x0: usize) -> Result<CountingSystem> {
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        if f.len() != n {
            return Err(Error::WrongTableLength { got: f.len(), n });
        }
        for (index, &value) in f.iter().enumerate() {
            if value >= n {
                return Err(Error::EntryOutOfRange { index, value, n });
            }
        }
        if x0 >= n {
            return Err(Error::BaseOutOfRange { x0, n });
        }
        Ok(CountingSystem {
            n,
            f,
            x0,
            trajectory: OnceLock::new(),
        })
    }

    pub fn carrier_size(&self) -> usize {
        self.n
    }

    pub fn base_point(&self) -> usize {
        self.x0
    }

    /// The self-map table.
    pub fn map(&self) -> &[usize] {
        &self.f
    }

    /// Applies the self-map once.
    pub fn step(&self, x: usize) -> usize {
        self.f[x]
    }

    /// The rho shape of the base point's orbit, computed by direct marking
    /// (the carrier is explicit, so no cycle-finding tricks are needed).
    pub fn trajectory(&self) -> &Trajectory {
        self.trajectory.get_or_init(|| {
            let mut position = vec![usize::MAX; self.n];
            let mut orbit = Vec::new();
            let mut x = self.x0;
            loop {
                if position[x] != usize::MAX {
                    let tail = position[x];
                    let cycle = orbit.len() - tail;
                    return Trajectory { orbit, tail, cycle };
                }
                position[x] = orbit.len();
                orbit.push(x);
                x = self.f[x];
            }
        })
    }

    /// The set of elements reachable from the base point, i.e. the least
    /// f-invariant subset containing it.
    pub fn reachable(&self) -> BTreeSet<usize> {
        self.trajectory().orbit().iter().copied().collect()
    }

    /// True when the orbit covers the whole carrier. Equivalent to the
    /// induction principle holding for the system.
    pub fn is_minimal(&self) -> bool {
        self.trajectory().len() == self.n
    }

    /// True when the self-map is injective and the base point is outside its
    /// image. No system with a finite carrier satisfies this: injectivity
    /// forces surjectivity, which puts the base point in the image.
    pub fn is_standard(&self) -> bool {
        let mut hit = vec![false; self.n];
        for &v in &self.f {
            if hit[v] {
                return false; // not injective
            }
            hit[v] = true;
        }
        !hit[self.x0]
    }

    fn require_minimal(&self) -> Result<()> {
        if self.is_minimal() {
            Ok(())
        } else {
            Err(Error::RequiresMinimal)
        }
    }

    /// Reduces an iteration count to the canonical coordinate of the same
    /// orbit element: `m` itself below `tail + cycle`, otherwise
    /// `tail + ((m - tail) mod cycle)`. Accepts arbitrarily large `m`.
    pub fn normalize(&self, m: u64) -> Coordinate {
        let traj = self.trajectory();
        let len = traj.len() as u64;
        if m < len {
            Coordinate(m as usize)
        } else {
            let t = traj.tail() as u64;
            let l = traj.cycle() as u64;
            Coordinate((t + (m - t) % l) as usize)
        }
    }

    /// The orbit element at a canonical coordinate.
    pub fn element_at(&self, k: Coordinate) -> usize {
        self.trajectory().orbit()[k.0]
    }

    /// Evaluates `f^k(x0)` for any `k`, reducing large exponents through the
    /// cycle instead of stepping.
    pub fn iterate(&self, k: u64) -> usize {
        self.element_at(self.normalize(k))
    }

    /// Assigns a carrier element to a finite set: `f^{|A|}(x0)`. Depends on
    /// the set only through its cardinality, which is exactly what makes it
    /// well-defined as a counting of the set; the removal-based oracle in
    /// [`crate::oracle::iterator_by_removal`] validates this closed form.
    pub fn sharp(&self, set: &FiniteSet) -> usize {
        self.iterate(set.cardinality() as u64)
    }

    /// The least `k` with `f^k(x0) = x`; fails when `x` is not reachable.
    pub fn coordinate(&self, x: usize) -> Result<Coordinate> {
        if x >= self.n {
            return Err(Error::ElementOutOfRange {
                element: x,
                n: self.n,
            });
        }
        self.trajectory()
            .orbit()
            .iter()
            .position(|&y| y == x)
            .map(Coordinate)
            .ok_or(Error::Unreachable { element: x })
    }

    /// The subsystem on the reachable set, relabelled so that the element
    /// first visited at step `k` becomes index `k`. Always minimal.
    pub fn restricted_to_reachable(&self) -> CountingSystem {
        let traj = self.trajectory();
        let orbit = traj.orbit();
        let mut new_index = vec![usize::MAX; self.n];
        for (k, &x) in orbit.iter().enumerate() {
            new_index[x] = k;
        }
        let f = orbit.iter().map(|&x| new_index[self.f[x]]).collect();
        CountingSystem::new(orbit.len(), f, 0).expect("relabelled subsystem is valid")
    }
}

impl fmt::Display for CountingSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n={}, f={:?}, x0={})", self.n, self.f, self.x0)
    }
}

impl Serialize for CountingSystem {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("CountingSystem", 3)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("f", &self.f)?;
        s.serialize_field("x0", &self.x0)?;
        s.end()
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSystem {
    n: usize,
    f: Vec<usize>,
    x0: usize,
}

impl TryFrom<RawSystem> for CountingSystem {
    type Error = Error;

    fn try_from(raw: RawSystem) -> Result<CountingSystem> {
        CountingSystem::new(raw.n, raw.f, raw.x0)
    }
}

impl<'de> Deserialize<'de> for CountingSystem {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let raw = RawSystem::deserialize(deserializer)?;
        CountingSystem::try_from(raw).map_err(serde::de::Error::custom)
    }
}

/// True when `h` is a morphism from `src` to `dst`: it sends base point to
/// base point and commutes with the self-maps. A table whose domain or
/// codomain is not the respective carrier is simply not a morphism.
pub fn is_morphism(src: &CountingSystem, dst: &CountingSystem, h: &MapTable) -> bool {
    if h.domain() != &FiniteSet::range(src.carrier_size())
        || h.codomain() != &FiniteSet::range(dst.carrier_size())
    {
        return false;
    }
    let table: Vec<usize> = h.values().iter().map(|&v| v as usize).collect();
    if table[src.base_point()] != dst.base_point() {
        return false;
    }
    (0..src.carrier_size()).all(|x| table[src.step(x)] == dst.step(table[x]))
}

/// Finds the morphism from a minimal `src` to `dst`, if one exists.
///
/// Existence is decided by orbit compatibility: the target orbit must have a
/// tail no longer than the source's and a cycle dividing the source's. When
/// a morphism exists it sends the k-th visited source element to
/// `g^k(y0)` and is unique, so the returned flag is always `true`.
pub fn find_morphism(
    src: &CountingSystem,
    dst: &CountingSystem,
) -> Result<Option<(MapTable, bool)>> {
    src.require_minimal()?;
    let st = src.trajectory();
    let dt = dst.trajectory();
    if dt.tail() > st.tail() || !st.cycle().is_multiple_of(dt.cycle()) {
        return Ok(None);
    }
    let mut values = vec![0; src.carrier_size()];
    for (k, &x) in st.orbit().iter().enumerate() {
        values[x] = dst.iterate(k as u64) as u64;
    }
    let table = MapTable::from_values(
        FiniteSet::range(src.carrier_size()),
        FiniteSet::range(dst.carrier_size()),
        values,
    )
    .expect("constructed morphism table is well-formed");
    debug_assert!(is_morphism(src, dst, &table));
    Ok(Some((table, true)))
}

/// All systems with carrier `{0, ..., n-1}`: every self-map table crossed
/// with every base point. There are `n^n * n` of them.
pub fn all_systems(n: usize) -> impl Iterator<Item = CountingSystem> {
    assert!(n >= 1, "carrier must be non-empty");
    let mut table = vec![0usize; n];
    let mut x0 = 0usize;
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let cs = CountingSystem::new(n, table.clone(), x0).expect("enumerated system is valid");
        // Advance base point first, then the table as an odometer.
        x0 += 1;
        if x0 == n {
            x0 = 0;
            let mut pos = n;
            loop {
                if pos == 0 {
                    done = true;
                    break;
                }
                pos -= 1;
                table[pos] += 1;
                if table[pos] < n {
                    break;
                }
                table[pos] = 0;
            }
        }
        Some(cs)
    })
}

/// The minimal systems of carrier size `n` in canonical labelling: a chain
/// `0 -> 1 -> ... -> n-1` whose last element maps to `w`. Choosing `w = t`
/// realises every tail/cycle shape with `t + l = n`, and every minimal
/// system arises from exactly one of these by relabelling.
pub fn canonical_minimal_systems(n: usize) -> Vec<CountingSystem> {
    assert!(n >= 1, "carrier must be non-empty");
    (0..n)
        .map(|w| {
            let mut f: Vec<usize> = (1..n).collect();
            f.push(w);
            CountingSystem::new(n, f, 0).expect("canonical system is valid")
        })
        .collect()
}

/// All minimal systems with carrier `{0, ..., n-1}`, including every
/// relabelling. Filtered from [`all_systems`], so intended for small `n`.
pub fn minimal_systems(n: usize) -> Vec<CountingSystem> {
    all_systems(n).filter(|cs| cs.is_minimal()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn construction_validates() {
        assert!(CountingSystem::new(1, vec![0], 0).is_ok());
        assert!(CountingSystem::new(5, vec![1, 2, 3, 4, 2], 0).is_ok());
        assert_eq!(
            CountingSystem::new(2, vec![2, 0], 0),
            Err(Error::EntryOutOfRange {
                index: 0,
                value: 2,
                n: 2
            })
        );
        assert_eq!(CountingSystem::new(0, vec![], 0), Err(Error::EmptyCarrier));
        assert_eq!(
            CountingSystem::new(2, vec![0, 1], 2),
            Err(Error::BaseOutOfRange { x0: 2, n: 2 })
        );
        assert_eq!(
            CountingSystem::new(3, vec![0, 1], 0),
            Err(Error::WrongTableLength { got: 2, n: 3 })
        );
    }

    #[test]
    fn trajectories_of_fixtures() {
        let one = fixtures::one();
        let t = one.trajectory();
        assert_eq!((t.tail(), t.cycle(), t.orbit()), (0, 1, &[0][..]));

        let r5 = fixtures::r5();
        let t = r5.trajectory();
        assert_eq!((t.tail(), t.cycle()), (2, 3));
        assert_eq!(t.orbit(), &[0, 1, 2, 3, 4]);

        let n5 = fixtures::n5();
        let t = n5.trajectory();
        assert_eq!((t.tail(), t.cycle()), (0, 3));
        assert_eq!(t.orbit(), &[0, 1, 2]);
    }

    #[test]
    fn reachable_sets() {
        assert_eq!(fixtures::one().reachable(), BTreeSet::from([0]));
        assert_eq!(
            fixtures::r5().reachable(),
            BTreeSet::from([0, 1, 2, 3, 4])
        );
        assert_eq!(fixtures::n5().reachable(), BTreeSet::from([0, 1, 2]));
    }

    #[test]
    fn minimality_and_standardness() {
        assert!(fixtures::one().is_minimal());
        assert!(fixtures::r5().is_minimal());
        assert!(!fixtures::n5().is_minimal());

        // No finite carrier admits a standard system.
        assert!(!fixtures::r5().is_standard());
        assert!(!fixtures::c3().is_standard());
        assert!(!fixtures::one().is_standard());
    }

    #[test]
    fn iterate_and_normalize() {
        let r5 = fixtures::r5();
        assert_eq!(r5.iterate(0), 0);
        assert_eq!(r5.iterate(7), 4);
        assert_eq!(r5.normalize(0).index(), 0);
        assert_eq!(r5.normalize(5).index(), 2);
        assert_eq!(r5.normalize(7).index(), 4);

        let c3 = fixtures::c3();
        assert_eq!(c3.iterate(1_000_000_000_000_000_000), 1);
    }

    #[test]
    fn sharp_is_cardinality_based() {
        let r5 = fixtures::r5();
        assert_eq!(r5.sharp(&FiniteSet::empty()), 0);
        let one = fixtures::one();
        for k in 0..4 {
            assert_eq!(one.sharp(&FiniteSet::range(k)), 0);
        }
    }

    #[test]
    fn coordinates() {
        let r5 = fixtures::r5();
        assert_eq!(r5.coordinate(0).unwrap().index(), 0);
        assert_eq!(r5.coordinate(4).unwrap().index(), 4);
        let n5 = fixtures::n5();
        assert_eq!(n5.coordinate(3), Err(Error::Unreachable { element: 3 }));
        assert_eq!(
            r5.coordinate(9),
            Err(Error::ElementOutOfRange { element: 9, n: 5 })
        );
    }

    #[test]
    fn restriction_to_reachable() {
        let n5 = fixtures::n5();
        let restricted = n5.restricted_to_reachable();
        assert_eq!(restricted, fixtures::c3());
    }

    #[test]
    fn morphism_checks() {
        let r5 = fixtures::r5();
        let c3 = fixtures::c3();
        let id = MapTable::identity(&FiniteSet::range(5));
        assert!(is_morphism(&r5, &r5, &id));

        let h = MapTable::from_values(
            FiniteSet::range(5),
            FiniteSet::range(3),
            vec![0, 1, 2, 0, 1],
        )
        .unwrap();
        assert!(is_morphism(&r5, &c3, &h));

        let constant = MapTable::from_values(
            FiniteSet::range(5),
            FiniteSet::range(3),
            vec![0, 0, 0, 0, 0],
        )
        .unwrap();
        assert!(!is_morphism(&r5, &c3, &constant));
    }

    #[test]
    fn find_morphism_on_fixtures() {
        let r5 = fixtures::r5();
        let c3 = fixtures::c3();
        let one = fixtures::one();

        let (h, unique) = find_morphism(&r5, &c3).unwrap().unwrap();
        assert_eq!(h.values(), &[0, 1, 2, 0, 1]);
        assert!(unique);

        assert!(find_morphism(&c3, &r5).unwrap().is_none());

        let (h, unique) = find_morphism(&r5, &one).unwrap().unwrap();
        assert_eq!(h.values(), &[0, 0, 0, 0, 0]);
        assert!(unique);

        assert_eq!(
            find_morphism(&fixtures::n5(), &one),
            Err(Error::RequiresMinimal)
        );
    }

    #[test]
    fn json_round_trip_and_schema() {
        let r5 = fixtures::r5();
        let json = serde_json::to_string(&r5).unwrap();
        assert_eq!(json, r#"{"n":5,"f":[1,2,3,4,2],"x0":0}"#);
        let back: CountingSystem = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r5);

        // Field order is irrelevant.
        let reordered: CountingSystem =
            serde_json::from_str(r#"{"x0":0,"n":3,"f":[1,2,0]}"#).unwrap();
        assert_eq!(reordered, fixtures::c3());

        // Unknown fields are rejected.
        assert!(serde_json::from_str::<CountingSystem>(
            r#"{"n":1,"f":[0],"x0":0,"extra":1}"#
        )
        .is_err());

        // Validation runs on load.
        assert!(serde_json::from_str::<CountingSystem>(r#"{"n":2,"f":[2,0],"x0":0}"#).is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(all_systems(1).count(), 1);
        assert_eq!(all_systems(2).count(), 8);
        assert_eq!(all_systems(3).count(), 81);
        assert_eq!(canonical_minimal_systems(4).len(), 4);
        for cs in canonical_minimal_systems(5) {
            assert!(cs.is_minimal());
        }
    }

    #[test]
    fn trajectory_cache_is_thread_safe() {
        let r5 = std::sync::Arc::new(fixtures::r5());
        let handles: Vec<_> = (0..8)
            .map(|_| {
                let cs = r5.clone();
                std::thread::spawn(move || cs.trajectory().clone())
            })
            .collect();
        for h in handles {
            let t = h.join().unwrap();
            assert_eq!((t.tail(), t.cycle()), (2, 3));
        }
    }
}
