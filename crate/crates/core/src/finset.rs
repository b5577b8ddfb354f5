//! Explicit finite sets and mappings over an atom universe.
//!
//! Sets are stored as strictly increasing sequences of atom ids, so every
//! value has exactly one representation and all outputs are deterministic.
//! Mappings between sets are explicit tables. These are the ground-truth
//! objects that the brute-force checks in [`crate::oracle`] operate on.

use std::fmt;

use crate::error::{Error, Result};

/// Identifier of an atom. Atom ids are plain non-negative integers.
pub type AtomId = u64;

/// An element of the atom universe: an id plus an optional display label.
///
/// Labels never influence set semantics; two atoms are the same atom exactly
/// when their ids coincide.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Atom {
    pub id: AtomId,
    pub label: Option<String>,
}

impl Atom {
    pub fn new(id: AtomId) -> Self {
        Atom { id, label: None }
    }
}

/// A finite set of atoms, stored as a strictly increasing id sequence.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FiniteSet {
    atoms: Vec<AtomId>,
}

/// Builds a set from possibly signed ids, rejecting negative ones.
///
/// Duplicates are removed and the result is sorted, so `make_set(&[3,1,1])`
/// is `{1,3}`.
pub fn make_set(ids: &[i64]) -> Result<FiniteSet> {
    let mut atoms = Vec::with_capacity(ids.len());
    for &id in ids {
        if id < 0 {
            return Err(Error::InvalidAtom { id });
        }
        atoms.push(id as AtomId);
    }
    Ok(FiniteSet::new(atoms))
}

impl FiniteSet {
    /// Builds a set from arbitrary ids; sorts and deduplicates.
    pub fn new(mut atoms: Vec<AtomId>) -> Self {
        atoms.sort_unstable();
        atoms.dedup();
        FiniteSet { atoms }
    }

    pub fn empty() -> Self {
        FiniteSet { atoms: Vec::new() }
    }

    /// The canonical set `{0, 1, ..., n-1}`.
    pub fn range(n: usize) -> Self {
        FiniteSet {
            atoms: (0..n as AtomId).collect(),
        }
    }

    pub fn cardinality(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn contains(&self, id: AtomId) -> bool {
        self.atoms.binary_search(&id).is_ok()
    }

    /// Atoms in strictly increasing order.
    pub fn atoms(&self) -> &[AtomId] {
        &self.atoms
    }

    pub fn iter(&self) -> impl Iterator<Item = AtomId> + '_ {
        self.atoms.iter().copied()
    }

    pub fn is_subset_of(&self, other: &FiniteSet) -> bool {
        self.atoms.iter().all(|&a| other.contains(a))
    }

    pub fn union(&self, other: &FiniteSet) -> FiniteSet {
        let mut atoms = self.atoms.clone();
        atoms.extend_from_slice(&other.atoms);
        FiniteSet::new(atoms)
    }

    pub fn intersection(&self, other: &FiniteSet) -> FiniteSet {
        FiniteSet {
            atoms: self.iter().filter(|&a| other.contains(a)).collect(),
        }
    }

    pub fn difference(&self, other: &FiniteSet) -> FiniteSet {
        FiniteSet {
            atoms: self.iter().filter(|&a| !other.contains(a)).collect(),
        }
    }

    pub fn is_disjoint_from(&self, other: &FiniteSet) -> bool {
        self.atoms.iter().all(|&a| !other.contains(a))
    }

    pub fn with(&self, id: AtomId) -> FiniteSet {
        let mut atoms = self.atoms.clone();
        atoms.push(id);
        FiniteSet::new(atoms)
    }

    /// An atom guaranteed not to lie in the set: max id plus one.
    pub fn fresh_atom(&self) -> Atom {
        let id = match self.atoms.last() {
            Some(&max) => max + 1,
            None => 0,
        };
        Atom::new(id)
    }

    /// All `2^|A|` subsets, in binary-counter order over the sorted atoms:
    /// bit `i` of the counter selects the `i`-th smallest atom.
    ///
    /// Guarded at `|A| <= 20` so the result always fits comfortably in memory.
    pub fn power_set(&self) -> Result<Vec<FiniteSet>> {
        const LIMIT: usize = 20;
        let n = self.cardinality();
        if n > LIMIT {
            return Err(Error::TooLarge {
                what: "power set base cardinality",
                size: n as u64,
                limit: LIMIT as u64,
            });
        }
        let mut subsets = Vec::with_capacity(1usize << n);
        for mask in 0u32..(1u32 << n) {
            let atoms = self
                .atoms
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &a)| a)
                .collect();
            subsets.push(FiniteSet { atoms });
        }
        Ok(subsets)
    }
}

impl fmt::Display for FiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, a) in self.atoms.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<AtomId> for FiniteSet {
    fn from_iter<I: IntoIterator<Item = AtomId>>(iter: I) -> Self {
        FiniteSet::new(iter.into_iter().collect())
    }
}

/// Injectivity/surjectivity flags of a mapping, computed by definition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MapFlags {
    pub injective: bool,
    pub surjective: bool,
    pub bijective: bool,
}

/// An explicit mapping between two finite sets.
///
/// The assignment pairs each domain atom (in increasing order) with a
/// codomain atom, so the table is total on its domain by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapTable {
    domain: FiniteSet,
    codomain: FiniteSet,
    values: Vec<AtomId>,
}

impl MapTable {
    /// Builds a table from the values assigned to the domain atoms in
    /// increasing domain order. Every value must lie in the codomain.
    pub fn from_values(
        domain: FiniteSet,
        codomain: FiniteSet,
        values: Vec<AtomId>,
    ) -> Result<MapTable> {
        if values.len() != domain.cardinality() {
            return Err(Error::WrongTableLength {
                got: values.len(),
                n: domain.cardinality(),
            });
        }
        for &v in &values {
            if !codomain.contains(v) {
                return Err(Error::MemberNotInBase {
                    member: format!("{v}"),
                });
            }
        }
        Ok(MapTable {
            domain,
            codomain,
            values,
        })
    }

    pub fn identity(set: &FiniteSet) -> MapTable {
        MapTable {
            domain: set.clone(),
            codomain: set.clone(),
            values: set.atoms.clone(),
        }
    }

    pub fn domain(&self) -> &FiniteSet {
        &self.domain
    }

    pub fn codomain(&self) -> &FiniteSet {
        &self.codomain
    }

    /// The assigned values in increasing domain order.
    pub fn values(&self) -> &[AtomId] {
        &self.values
    }

    /// Image of a single atom; `None` when the atom is not in the domain.
    pub fn apply(&self, id: AtomId) -> Option<AtomId> {
        self.domain
            .atoms
            .binary_search(&id)
            .ok()
            .map(|i| self.values[i])
    }

    pub fn pairs(&self) -> impl Iterator<Item = (AtomId, AtomId)> + '_ {
        self.domain.iter().zip(self.values.iter().copied())
    }

    /// Classifies the mapping as injective, surjective, and/or bijective.
    pub fn classify(&self) -> MapFlags {
        let mut image: Vec<AtomId> = self.values.clone();
        image.sort_unstable();
        let distinct = image.windows(2).all(|w| w[0] != w[1]);
        let injective = distinct;
        image.dedup();
        let surjective = image.len() == self.codomain.cardinality();
        MapFlags {
            injective,
            surjective,
            bijective: injective && surjective,
        }
    }
}

impl fmt::Display for MapTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (a, v)) in self.pairs().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}->{v}")?;
        }
        Ok(())
    }
}

const SEARCH_LIMIT: usize = 10;

fn check_search_size(a: &FiniteSet, b: &FiniteSet) -> Result<()> {
    for set in [a, b] {
        if set.cardinality() > SEARCH_LIMIT {
            return Err(Error::TooLarge {
                what: "search set cardinality",
                size: set.cardinality() as u64,
                limit: SEARCH_LIMIT as u64,
            });
        }
    }
    Ok(())
}

/// Backtracking search for a mapping `a -> b`, assigning domain atoms in
/// increasing order and trying codomain atoms in increasing order, so the
/// first witness found is lexicographically least.
fn search_map(
    a: &FiniteSet,
    b: &FiniteSet,
    need_injective: bool,
    need_surjective: bool,
) -> Option<MapTable> {
    fn extend(
        a: &FiniteSet,
        b: &FiniteSet,
        chosen: &mut Vec<AtomId>,
        used: &mut Vec<bool>,
        need_injective: bool,
        need_surjective: bool,
    ) -> bool {
        if chosen.len() == a.cardinality() {
            return !need_surjective || used.iter().all(|&u| u);
        }
        // Surjectivity onto the remaining codomain is impossible once there
        // are fewer unassigned domain atoms than unused codomain atoms.
        if need_surjective {
            let remaining = a.cardinality() - chosen.len();
            let unused = used.iter().filter(|&&u| !u).count();
            if remaining < unused {
                return false;
            }
        }
        for (j, &candidate) in b.atoms().iter().enumerate() {
            if need_injective && used[j] {
                continue;
            }
            chosen.push(candidate);
            let was_used = used[j];
            used[j] = true;
            if extend(a, b, chosen, used, need_injective, need_surjective) {
                return true;
            }
            used[j] = was_used;
            chosen.pop();
        }
        false
    }

    let mut chosen = Vec::with_capacity(a.cardinality());
    let mut used = vec![false; b.cardinality()];
    if extend(a, b, &mut chosen, &mut used, need_injective, need_surjective) {
        Some(MapTable {
            domain: a.clone(),
            codomain: b.clone(),
            values: chosen,
        })
    } else {
        None
    }
}

/// Searches for an injective mapping `a -> b`; a witness exists exactly when
/// `|a| <= |b|`. Both sets are guarded at cardinality 10.
pub fn injection_exists(a: &FiniteSet, b: &FiniteSet) -> Result<Option<MapTable>> {
    check_search_size(a, b)?;
    Ok(search_map(a, b, true, false))
}

/// Searches for a bijective mapping `a -> b`; a witness exists exactly when
/// `|a| = |b|`.
pub fn bijection_exists(a: &FiniteSet, b: &FiniteSet) -> Result<Option<MapTable>> {
    check_search_size(a, b)?;
    Ok(search_map(a, b, true, true))
}

/// Iterator over all `|b|^|a|` mappings `a -> b` in lexicographic order of
/// their value sequences.
pub struct MapEnumerator {
    domain: FiniteSet,
    codomain: FiniteSet,
    // Indices into the codomain, acting as an odometer; None once exhausted.
    digits: Option<Vec<usize>>,
}

impl Iterator for MapEnumerator {
    type Item = MapTable;

    fn next(&mut self) -> Option<MapTable> {
        let digits = self.digits.as_mut()?;
        let values = digits.iter().map(|&j| self.codomain.atoms()[j]).collect();
        let table = MapTable {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            values,
        };
        // Advance the odometer with the last digit fastest, which yields
        // lexicographic order on the value sequences.
        let base = self.codomain.cardinality();
        let mut pos = digits.len();
        loop {
            if pos == 0 {
                self.digits = None;
                break;
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < base {
                break;
            }
            digits[pos] = 0;
        }
        Some(table)
    }
}

/// Enumerates the full function space `b^a`, guarded at `|b|^|a| <= 10^6`.
pub fn enumerate_maps(a: &FiniteSet, b: &FiniteSet) -> Result<MapEnumerator> {
    const LIMIT: u64 = 1_000_000;
    let count = map_space_size(a, b, LIMIT)?;
    let digits = if count == 0 {
        None
    } else {
        Some(vec![0usize; a.cardinality()])
    };
    Ok(MapEnumerator {
        domain: a.clone(),
        codomain: b.clone(),
        digits,
    })
}

/// The size `|b|^|a|` of the function space, guarded against overflow and
/// against exceeding `limit`.
pub fn map_space_size(a: &FiniteSet, b: &FiniteSet, limit: u64) -> Result<u64> {
    let base = b.cardinality() as u64;
    let mut count: u64 = 1;
    for _ in 0..a.cardinality() {
        count = count.saturating_mul(base);
        if count > limit {
            return Err(Error::TooLarge {
                what: "function space size",
                size: count,
                limit,
            });
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn make_set_sorts_and_dedups() {
        assert_eq!(make_set(&[]).unwrap(), FiniteSet::empty());
        assert_eq!(make_set(&[3, 1, 1]).unwrap().atoms(), &[1, 3]);
        assert_eq!(make_set(&[0, 1, 2]).unwrap().atoms(), &[0, 1, 2]);
    }

    #[test]
    fn make_set_rejects_negative_ids() {
        assert_eq!(make_set(&[0, -1]), Err(Error::InvalidAtom { id: -1 }));
    }

    #[test]
    fn display_forms() {
        assert_eq!(make_set(&[1, 3, 7]).unwrap().to_string(), "{1,3,7}");
        assert_eq!(FiniteSet::empty().to_string(), "{}");
        let m = MapTable::from_values(
            FiniteSet::range(2),
            FiniteSet::range(3),
            vec![1, 2],
        )
        .unwrap();
        assert_eq!(m.to_string(), "0->1, 1->2");
    }

    #[test]
    fn fresh_atom_is_max_plus_one() {
        assert_eq!(FiniteSet::empty().fresh_atom().id, 0);
        assert_eq!(make_set(&[0, 1, 2]).unwrap().fresh_atom().id, 3);
        assert_eq!(make_set(&[5]).unwrap().fresh_atom().id, 6);
    }

    #[test]
    fn power_set_in_binary_counter_order() {
        let empty = FiniteSet::empty();
        assert_eq!(empty.power_set().unwrap(), vec![FiniteSet::empty()]);

        let ab = make_set(&[4, 9]).unwrap();
        let subsets = ab.power_set().unwrap();
        assert_eq!(
            subsets,
            vec![
                FiniteSet::empty(),
                make_set(&[4]).unwrap(),
                make_set(&[9]).unwrap(),
                make_set(&[4, 9]).unwrap(),
            ]
        );

        assert_eq!(FiniteSet::range(4).power_set().unwrap().len(), 16);
    }

    #[test]
    fn power_set_size_guard() {
        let big = FiniteSet::range(21);
        assert!(matches!(big.power_set(), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn classify_examples() {
        let s = FiniteSet::range(3);
        let id = MapTable::identity(&s);
        assert_eq!(
            id.classify(),
            MapFlags {
                injective: true,
                surjective: true,
                bijective: true
            }
        );

        let two = FiniteSet::range(2);
        let constant = MapTable::from_values(two.clone(), two.clone(), vec![0, 0]).unwrap();
        assert_eq!(
            constant.classify(),
            MapFlags {
                injective: false,
                surjective: false,
                bijective: false
            }
        );

        let m = MapTable::from_values(two, FiniteSet::range(3), vec![1, 2]).unwrap();
        assert_eq!(
            m.classify(),
            MapFlags {
                injective: true,
                surjective: false,
                bijective: false
            }
        );
    }

    #[test]
    fn injection_search_matches_cardinality_comparison() {
        let empty = FiniteSet::empty();
        let b = make_set(&[5, 6, 7]).unwrap();
        let w = injection_exists(&empty, &b).unwrap().unwrap();
        assert_eq!(w.values().len(), 0);

        let a = make_set(&[0, 1]).unwrap();
        let w = injection_exists(&a, &b).unwrap().unwrap();
        assert!(w.classify().injective);
        // Lexicographically least witness.
        assert_eq!(w.values(), &[5, 6]);

        let a3 = FiniteSet::range(3);
        let singleton = make_set(&[5]).unwrap();
        assert!(injection_exists(&a3, &singleton).unwrap().is_none());
    }

    #[test]
    fn bijection_search_matches_equal_cardinality() {
        let a = make_set(&[0, 1]).unwrap();
        assert_eq!(
            bijection_exists(&a, &a).unwrap().unwrap(),
            MapTable::identity(&a)
        );

        let b = make_set(&[7, 9]).unwrap();
        let w = bijection_exists(&a, &b).unwrap().unwrap();
        assert!(w.classify().bijective);

        let single = make_set(&[0]).unwrap();
        let pair = make_set(&[1, 2]).unwrap();
        assert!(bijection_exists(&single, &pair).unwrap().is_none());
    }

    #[test]
    fn search_size_guard() {
        let big = FiniteSet::range(11);
        assert!(matches!(
            injection_exists(&big, &big),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn enumerate_maps_counts() {
        let b = FiniteSet::range(3);
        assert_eq!(enumerate_maps(&FiniteSet::empty(), &b).unwrap().count(), 1);
        assert_eq!(enumerate_maps(&FiniteSet::range(3), &b).unwrap().count(), 27);
        assert_eq!(enumerate_maps(&FiniteSet::range(2), &b).unwrap().count(), 9);
        // No maps from a non-empty set into the empty set.
        assert_eq!(
            enumerate_maps(&b, &FiniteSet::empty()).unwrap().count(),
            0
        );
    }

    #[test]
    fn enumerate_maps_is_lexicographic_and_distinct() {
        let a = FiniteSet::range(2);
        let b = FiniteSet::range(3);
        let values: Vec<Vec<AtomId>> = enumerate_maps(&a, &b)
            .unwrap()
            .map(|m| m.values().to_vec())
            .collect();
        let mut sorted = values.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(values, sorted);
        assert_eq!(values[0], vec![0, 0]);
        assert_eq!(values[1], vec![0, 1]);
        assert_eq!(values.last().unwrap(), &vec![2, 2]);
    }

    #[test]
    fn enumerate_maps_guard() {
        let a = FiniteSet::range(10);
        let b = FiniteSet::range(10);
        assert!(matches!(
            enumerate_maps(&a, &b),
            Err(Error::TooLarge { .. })
        ));
    }
}
