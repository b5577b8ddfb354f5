//! Structure theory of finite minimal counting systems.
//!
//! Every finite minimal system has a unique end-point: the last element the
//! orbit visits for the first time. The self-map sends everything except the
//! end-point bijectively onto everything except the base point, so the whole
//! system is a chain feeding the end-point, whose own image is the only free
//! choice. Redirecting that image never destroys minimality.
//!
//! A *segment* is a minimal system whose end-point is a fixed point. Segments
//! are the canonical finite "rulers": one exists for every size, unique up to
//! a unique relabelling, and they can be extended, shortened, and joined.

use std::collections::BTreeSet;
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::counting::CountingSystem;
use crate::error::{Error, Result};
use crate::finset::{AtomId, FiniteSet, MapTable};

fn require_minimal(cs: &CountingSystem) -> Result<()> {
    if cs.is_minimal() {
        Ok(())
    } else {
        Err(Error::RequiresMinimal)
    }
}

/// The end-point of a finite minimal system: the last newly visited orbit
/// element. Equivalently, the unique element whose exemption from closure
/// still forces invariant subsets to be everything (see
/// [`is_minimal_off`]), and the unique element off which the self-map is a
/// bijection onto the non-base elements.
pub fn end_point(cs: &CountingSystem) -> Result<usize> {
    require_minimal(cs)?;
    let orbit = cs.trajectory().orbit();
    Ok(orbit[orbit.len() - 1])
}

/// Checks that the self-map sends the carrier minus the end-point
/// bijectively onto the carrier minus the base point.
pub fn endpoint_bijection_check(cs: &CountingSystem) -> Result<bool> {
    let z = end_point(cs)?;
    let n = cs.carrier_size();
    let mut hit = vec![false; n];
    for x in (0..n).filter(|&x| x != z) {
        let y = cs.step(x);
        if y == cs.base_point() || hit[y] {
            return Ok(false);
        }
        hit[y] = true;
    }
    Ok((0..n).filter(|&x| x != cs.base_point()).all(|x| hit[x]))
}

/// True when the only subset that contains the base point and is closed
/// under the self-map *except possibly at `element`* is the whole carrier.
///
/// This is the defining property of the end-point, checked literally by
/// enumerating all subsets; guarded at carrier size 16.
pub fn is_minimal_off(cs: &CountingSystem, element: usize) -> Result<bool> {
    const LIMIT: usize = 16;
    let n = cs.carrier_size();
    if n > LIMIT {
        return Err(Error::TooLarge {
            what: "carrier size for subset enumeration",
            size: n as u64,
            limit: LIMIT as u64,
        });
    }
    if element >= n {
        return Err(Error::ElementOutOfRange { element, n });
    }
    let full = (1u32 << n) - 1;
    for mask in 0..=full {
        if mask >> cs.base_point() & 1 == 0 || mask == full {
            continue;
        }
        let closed = (0..n)
            .filter(|&x| x != element && mask >> x & 1 == 1)
            .all(|x| mask >> cs.step(x) & 1 == 1);
        if closed {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The set of elements obtained by counting subsets of any set of the given
/// cardinality: the first `min(size + 1, tail + cycle)` orbit elements.
pub fn sset(cs: &CountingSystem, size: u64) -> Result<BTreeSet<usize>> {
    require_minimal(cs)?;
    let orbit = cs.trajectory().orbit();
    let take = (size.saturating_add(1)).min(orbit.len() as u64) as usize;
    Ok(orbit[..take].iter().copied().collect())
}

/// True when sets of the given cardinality are counted injectively across
/// all their subset sizes, i.e. no proper subset shares the count. For a
/// finite minimal system this holds exactly below `tail + cycle`.
pub fn is_sharp_regular(cs: &CountingSystem, size: u64) -> Result<bool> {
    require_minimal(cs)?;
    Ok(size < cs.trajectory().len() as u64)
}

/// Redirects the end-point's image to `w`, leaving all other values alone.
/// The result is again minimal with the same end-point.
pub fn modify_end(cs: &CountingSystem, w: usize) -> Result<CountingSystem> {
    let z = end_point(cs)?;
    let n = cs.carrier_size();
    if w >= n {
        return Err(Error::ElementOutOfRange { element: w, n });
    }
    let mut f = cs.map().to_vec();
    f[z] = w;
    let modified = CountingSystem::new(n, f, cs.base_point())?;
    debug_assert!(modified.is_minimal());
    Ok(modified)
}

/// True when the system is minimal and its end-point is a fixed point,
/// equivalently when the orbit's cycle has length 1.
pub fn is_segment(cs: &CountingSystem) -> bool {
    cs.is_minimal() && cs.trajectory().cycle() == 1
}

/// A minimal counting system whose end-point is a fixed point, together with
/// that end-point.
///
/// Segments produced by this module are kept in canonical labelling (the
/// element first visited at step `k` is index `k`), so equal constructions
/// give identical values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segment {
    system: CountingSystem,
    end: usize,
}

impl Segment {
    /// Wraps a counting system, verifying that it is a segment.
    pub fn new(system: CountingSystem) -> Result<Segment> {
        if !system.is_minimal() {
            return Err(Error::NotASegment {
                reason: "system is not minimal".into(),
            });
        }
        if system.trajectory().cycle() != 1 {
            return Err(Error::NotASegment {
                reason: format!("cycle length is {}", system.trajectory().cycle()),
            });
        }
        let end = end_point(&system)?;
        Ok(Segment { system, end })
    }

    /// The canonical segment of a given size: the chain
    /// `0 -> 1 -> ... -> n-1` with the last element fixed.
    pub fn of_size(n: usize) -> Result<Segment> {
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        let mut f: Vec<usize> = (1..n).collect();
        f.push(n - 1);
        Segment::new(CountingSystem::new(n, f, 0)?)
    }

    pub fn system(&self) -> &CountingSystem {
        &self.system
    }

    pub fn size(&self) -> usize {
        self.system.carrier_size()
    }

    pub fn end(&self) -> usize {
        self.end
    }

    /// True when the segment is the one-point chain.
    pub fn is_trivial(&self) -> bool {
        self.size() == 1
    }

    fn canonicalized(system: CountingSystem) -> Result<Segment> {
        Segment::new(system.restricted_to_reachable())
    }

    /// Prepends a fresh base element mapping to the old base. The carrier
    /// grows by one and the end-point survives the relabelling.
    pub fn extend(&self) -> Segment {
        let n = self.size();
        let mut f = self.system.map().to_vec();
        f.push(self.system.base_point());
        let grown = CountingSystem::new(n + 1, f, n).expect("extension is valid");
        Segment::canonicalized(grown).expect("extension of a segment is a segment")
    }

    /// Drops the base element, making its image the new base. Fails on the
    /// trivial segment.
    pub fn restrict(&self) -> Result<Segment> {
        if self.is_trivial() {
            return Err(Error::CannotRestrict);
        }
        let n = self.size();
        let x0 = self.system.base_point();
        // Dense relabelling of the carrier minus the old base. No element
        // maps to the base of a non-trivial segment, so the table restricts.
        let relabel: Vec<Option<usize>> = {
            let mut next = 0;
            (0..n)
                .map(|i| {
                    if i == x0 {
                        None
                    } else {
                        let v = next;
                        next += 1;
                        Some(v)
                    }
                })
                .collect()
        };
        let mut f = vec![0; n - 1];
        for i in (0..n).filter(|&i| i != x0) {
            f[relabel[i].unwrap()] =
                relabel[self.system.step(i)].expect("no element maps back to the base");
        }
        let base = relabel[self.system.step(x0)].unwrap();
        let shrunk = CountingSystem::new(n - 1, f, base)?;
        Segment::canonicalized(shrunk)
    }

    /// Joins two segments: the first segment's end-point is redirected to
    /// the second's base, producing a segment of the combined size whose
    /// end-point comes from the second segment.
    pub fn join(&self, other: &Segment) -> Segment {
        let ns = self.size();
        let nu = other.size();
        // Relabel the carriers to be disjoint: self keeps its indices,
        // other is shifted by ns.
        let mut f = vec![0; ns + nu];
        for (i, entry) in f.iter_mut().enumerate() {
            *entry = if i < ns {
                if i == self.end {
                    ns + other.system.base_point()
                } else {
                    self.system.step(i)
                }
            } else {
                ns + other.system.step(i - ns)
            };
        }
        let joined = CountingSystem::new(ns + nu, f, self.system.base_point())
            .expect("join is valid");
        Segment::canonicalized(joined).expect("join of segments is a segment")
    }

    /// The unique base-point- and structure-preserving map onto an
    /// equinumerous segment: orbit position `k` goes to orbit position `k`.
    /// It is a bijection and sends end-point to end-point.
    pub fn morphism_to(&self, other: &Segment) -> Result<MapTable> {
        if self.size() != other.size() {
            return Err(Error::NotEquinumerous {
                left: self.size(),
                right: other.size(),
            });
        }
        let n = self.size();
        let mut values = vec![0 as AtomId; n];
        let from = self.system.trajectory().orbit();
        let to = other.system.trajectory().orbit();
        for k in 0..n {
            values[from[k]] = to[k] as AtomId;
        }
        MapTable::from_values(FiniteSet::range(n), FiniteSet::range(n), values)
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} end={}", self.system, self.end)
    }
}

impl Serialize for Segment {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Segment", 4)?;
        s.serialize_field("n", &self.system.carrier_size())?;
        s.serialize_field("f", &self.system.map())?;
        s.serialize_field("x0", &self.system.base_point())?;
        s.serialize_field("end", &self.end)?;
        s.end()
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSegment {
    n: usize,
    f: Vec<usize>,
    x0: usize,
    end: usize,
}

impl<'de> Deserialize<'de> for Segment {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let raw = RawSegment::deserialize(deserializer)?;
        let system =
            CountingSystem::new(raw.n, raw.f, raw.x0).map_err(serde::de::Error::custom)?;
        let segment = Segment::new(system).map_err(serde::de::Error::custom)?;
        if segment.end != raw.end {
            return Err(serde::de::Error::custom(format!(
                "declared end {} does not match computed end {}",
                raw.end, segment.end
            )));
        }
        Ok(segment)
    }
}
