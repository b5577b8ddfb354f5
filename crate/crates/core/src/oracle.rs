//! Brute-force ground truth.
//!
//! This module evaluates the defining properties of finite sets and counting
//! systems literally, by exhaustive enumeration at small scale: inductive
//! subset systems, minimal members of set families, self-map classification,
//! element-by-element iteration, and the well-definedness of the counting
//! arithmetic. The optimized implementations elsewhere in the crate are
//! tested against these results, never the other way around.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;
use serde_json::json;

use crate::counting::CountingSystem;
use crate::error::{Error, Result};
use crate::finset::{enumerate_maps, AtomId, FiniteSet, MapTable};

/// Atom pairing stride for product sets: the pair `(a, b)` becomes the atom
/// `a * STRIDE + b`, which is injective as long as both ids are below the
/// stride.
pub const PRODUCT_STRIDE: u64 = 1 << 16;

/// Outcome of one exhaustive check.
///
/// Serializes to a single JSON object `{law, checked, passed, counterexample}`
/// with `counterexample` null exactly when the check passed.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub law: String,
    #[serde(rename = "checked")]
    pub instances_checked: u64,
    pub passed: bool,
    pub counterexample: Option<serde_json::Value>,
}

impl CheckReport {
    pub fn pass(law: impl Into<String>, instances_checked: u64) -> Self {
        CheckReport {
            law: law.into(),
            instances_checked,
            passed: true,
            counterexample: None,
        }
    }

    pub fn fail(
        law: impl Into<String>,
        instances_checked: u64,
        counterexample: serde_json::Value,
    ) -> Self {
        CheckReport {
            law: law.into(),
            instances_checked,
            passed: false,
            counterexample: Some(counterexample),
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(
            f,
            "[{status}] {} ({} instances)",
            self.law, self.instances_checked
        )?;
        if let Some(w) = &self.counterexample {
            write!(f, ": {w}")?;
        }
        Ok(())
    }
}

/// A family of subsets of a base set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetSystem {
    base: FiniteSet,
    members: Vec<FiniteSet>,
}

impl SubsetSystem {
    /// Validates that every member is a subset of the base and that there
    /// are no duplicate members.
    pub fn new(base: FiniteSet, members: Vec<FiniteSet>) -> Result<SubsetSystem> {
        let mut seen = std::collections::BTreeSet::new();
        for m in &members {
            if !m.is_subset_of(&base) {
                return Err(Error::MemberNotInBase {
                    member: m.to_string(),
                });
            }
            if !seen.insert(m.clone()) {
                return Err(Error::DuplicateMember {
                    member: m.to_string(),
                });
            }
        }
        Ok(SubsetSystem { base, members })
    }

    pub fn base(&self) -> &FiniteSet {
        &self.base
    }

    pub fn members(&self) -> &[FiniteSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, set: &FiniteSet) -> bool {
        self.members.iter().any(|m| m == set)
    }

    /// True when the family contains the empty set and is closed under
    /// adjoining a single new base element to any member.
    pub fn is_inductive(&self) -> bool {
        if !self.contains(&FiniteSet::empty()) {
            return false;
        }
        self.members.iter().all(|member| {
            self.base
                .iter()
                .filter(|&a| !member.contains(a))
                .all(|a| self.contains(&member.with(a)))
        })
    }
}

const INDUCTIVE_LIMIT: usize = 4;

fn check_inductive_base(base: &FiniteSet) -> Result<()> {
    if base.cardinality() > INDUCTIVE_LIMIT {
        return Err(Error::TooLarge {
            what: "base cardinality for inductive-system enumeration",
            size: base.cardinality() as u64,
            limit: INDUCTIVE_LIMIT as u64,
        });
    }
    Ok(())
}

// Subsets of `base` are encoded as bitmasks over the sorted atoms, and a
// candidate family is a bitmask over those 2^n subset masks. Closure under
// adjoining one element is then pure bit arithmetic.
fn family_is_inductive(family: u64, n_atoms: usize) -> bool {
    if family & 1 == 0 {
        return false; // empty set missing
    }
    let subset_count = 1u64 << (1 << n_atoms);
    debug_assert!(family < subset_count);
    for member in 0..(1u32 << n_atoms) {
        if family >> member & 1 == 0 {
            continue;
        }
        for atom in 0..n_atoms {
            if member >> atom & 1 == 0 && family >> (member | 1 << atom) & 1 == 0 {
                return false;
            }
        }
    }
    true
}

/// Enumerates every inductive system in the power set of `base` by checking
/// all `2^(2^|base|)` candidate families. For a finite base there is exactly
/// one: the full power set.
pub fn inductive_systems(base: &FiniteSet) -> Result<Vec<SubsetSystem>> {
    check_inductive_base(base)?;
    let n = base.cardinality();
    let subsets = base.power_set()?;
    let mut found = Vec::new();
    for family in 0..(1u64 << (1 << n)) {
        if family_is_inductive(family, n) {
            let members = subsets
                .iter()
                .enumerate()
                .filter(|(i, _)| family >> i & 1 == 1)
                .map(|(_, s)| s.clone())
                .collect();
            found.push(SubsetSystem::new(base.clone(), members)?);
        }
    }
    Ok(found)
}

/// True when every inductive system in the power set of `base` contains
/// `base` itself. Agrees with `inductive_systems(base).len() == 1` on the
/// tested range; both express the same finiteness condition.
pub fn every_inductive_contains(base: &FiniteSet) -> Result<bool> {
    check_inductive_base(base)?;
    let n = base.cardinality();
    let full = (1u32 << n) - 1;
    for family in 0..(1u64 << (1 << n)) {
        if family_is_inductive(family, n) && family >> full & 1 == 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Finds a member with no proper subset among the members. Ties are broken
/// deterministically: smallest cardinality first, then lexicographic order
/// of the atom sequences.
pub fn tarski_minimal(system: &SubsetSystem) -> Result<FiniteSet> {
    if system.is_empty() {
        return Err(Error::EmptySystem);
    }
    let mut minimal: Vec<&FiniteSet> = system
        .members()
        .iter()
        .filter(|b| {
            !system
                .members()
                .iter()
                .any(|c| c != *b && c.is_subset_of(b))
        })
        .collect();
    minimal.sort_by_key(|s| (s.cardinality(), s.atoms().to_vec()));
    let first = *minimal
        .first()
        .expect("a non-empty finite family always has a minimal member");
    Ok(first.clone())
}

/// Result of classifying every self-map of an `n`-element set.
#[derive(Debug, Clone)]
pub struct SelfMapReport {
    pub maps_checked: u64,
    pub bijections: u64,
    /// True when injective and surjective coincided for every map.
    pub passed: bool,
    pub counterexample: Option<MapTable>,
}

impl SelfMapReport {
    pub fn to_check_report(&self) -> CheckReport {
        let law = format!("selfmaps(bijections={})", self.bijections);
        match &self.counterexample {
            None => CheckReport::pass(law, self.maps_checked),
            Some(m) => CheckReport::fail(law, self.maps_checked, json!(m.to_string())),
        }
    }
}

/// Iterates all `n^n` self-maps of an `n`-element set and checks that each
/// is injective exactly when it is surjective, counting the bijections along
/// the way. Guarded at `n <= 7`.
pub fn check_selfmaps(n: usize) -> Result<SelfMapReport> {
    const LIMIT: usize = 7;
    if n > LIMIT {
        return Err(Error::TooLarge {
            what: "self-map carrier size",
            size: n as u64,
            limit: LIMIT as u64,
        });
    }

    let mut table = vec![0usize; n];
    let mut hit = vec![false; n];
    let mut maps_checked = 0u64;
    let mut bijections = 0u64;
    let mut counterexample = None;
    loop {
        maps_checked += 1;
        hit.fill(false);
        let mut injective = true;
        for &v in &table {
            if hit[v] {
                injective = false;
            }
            hit[v] = true;
        }
        let surjective = hit.iter().all(|&h| h);
        if injective && surjective {
            bijections += 1;
        }
        if injective != surjective && counterexample.is_none() {
            let set = FiniteSet::range(n);
            counterexample = Some(
                MapTable::from_values(
                    set.clone(),
                    set,
                    table.iter().map(|&v| v as AtomId).collect(),
                )
                .expect("enumerated table is well-formed"),
            );
        }
        // Odometer over tables; n = 0 has exactly the empty map.
        let mut pos = n;
        loop {
            if pos == 0 {
                let passed = counterexample.is_none();
                return Ok(SelfMapReport {
                    maps_checked,
                    bijections,
                    passed,
                    counterexample,
                });
            }
            pos -= 1;
            table[pos] += 1;
            if table[pos] < n {
                break;
            }
            table[pos] = 0;
        }
    }
}

/// Counts a set element by element: starting at the base point, applies the
/// self-map once per element of `set`, consuming elements in the given
/// order. The order must be a permutation of the set.
///
/// That the result never depends on the order is the uniqueness of the
/// counting assignment; [`crate::CountingSystem::sharp`] is validated
/// against this fold.
pub fn iterator_by_removal(
    cs: &CountingSystem,
    set: &FiniteSet,
    order: &[AtomId],
) -> Result<usize> {
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != order.len() || sorted != set.atoms() {
        return Err(Error::BadOrder);
    }
    let mut x = cs.base_point();
    for _removed in order {
        x = cs.step(x);
    }
    Ok(x)
}

/// Counts a set by removal in its natural (increasing) order.
pub fn sharp_by_removal(cs: &CountingSystem, set: &FiniteSet) -> usize {
    iterator_by_removal(cs, set, set.atoms()).expect("natural order is a permutation")
}

/// The product set `a x b`, realized as a genuine set of paired atoms
/// `a_i * PRODUCT_STRIDE + b_j`.
pub fn product_set(a: &FiniteSet, b: &FiniteSet) -> Result<FiniteSet> {
    for set in [a, b] {
        if let Some(&max) = set.atoms().last() {
            if max >= PRODUCT_STRIDE {
                return Err(Error::AtomTooLarge {
                    id: max,
                    stride: PRODUCT_STRIDE,
                });
            }
        }
    }
    let mut atoms = Vec::with_capacity(a.cardinality() * b.cardinality());
    for x in a.iter() {
        for y in b.iter() {
            atoms.push(x * PRODUCT_STRIDE + y);
        }
    }
    Ok(FiniteSet::new(atoms))
}

/// The function space `b^a`, realized as a set of atoms indexing the maps in
/// enumeration order.
pub fn function_space_set(a: &FiniteSet, b: &FiniteSet) -> Result<FiniteSet> {
    let count = enumerate_maps(a, b)?.count();
    Ok(FiniteSet::range(count))
}

/// Which well-definedness law of the counting arithmetic to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountingLaw {
    /// Disjoint pairs with equal counts have equal union counts.
    Beta,
    /// Pairs with equal counts have equal product counts.
    Delta,
    /// Sets with equal counts have equal function-space counts, for any
    /// exponent set.
    Exp,
}

impl fmt::Display for CountingLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CountingLaw::Beta => write!(f, "beta"),
            CountingLaw::Delta => write!(f, "delta"),
            CountingLaw::Exp => write!(f, "exp"),
        }
    }
}

fn set_from_mask(mask: u32, universe: &FiniteSet) -> FiniteSet {
    universe
        .atoms()
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &a)| a)
        .collect()
}

/// Exhaustively verifies one well-definedness law over an explicit atom
/// universe, counting every set by element removal.
///
/// Pairs are grouped by their count pair; the law holds exactly when every
/// group agrees on the derived count (union, product, or function space).
pub fn check_counting_law(
    cs: &CountingSystem,
    law: CountingLaw,
    universe_size: usize,
) -> Result<CheckReport> {
    const LIMIT: usize = 8;
    if !cs.is_minimal() {
        return Err(Error::RequiresMinimal);
    }
    if universe_size > LIMIT {
        return Err(Error::TooLarge {
            what: "universe size",
            size: universe_size as u64,
            limit: LIMIT as u64,
        });
    }
    let universe = FiniteSet::range(universe_size);
    let full = (1u32 << universe_size) - 1;
    let law_name = format!("{law}(u={universe_size})");

    // Groups pairs by their count pair; the first representative of a group
    // fixes the expected derived count.
    struct Grouper {
        groups: HashMap<(usize, usize), (usize, FiniteSet, FiniteSet)>,
        checked: u64,
    }

    impl Grouper {
        fn check(
            &mut self,
            law_name: &str,
            key: (usize, usize),
            a: FiniteSet,
            b: FiniteSet,
            derived: usize,
        ) -> Option<CheckReport> {
            self.checked += 1;
            match self.groups.get(&key) {
                None => {
                    self.groups.insert(key, (derived, a, b));
                    None
                }
                Some((expected, a0, b0)) if *expected != derived => Some(CheckReport::fail(
                    law_name,
                    self.checked,
                    json!({
                        "first_pair": [a0.to_string(), b0.to_string()],
                        "first_count": expected,
                        "second_pair": [a.to_string(), b.to_string()],
                        "second_count": derived,
                    }),
                )),
                Some(_) => None,
            }
        }
    }

    let mut grouper = Grouper {
        groups: HashMap::new(),
        checked: 0,
    };

    match law {
        CountingLaw::Beta => {
            for mask_a in 0..=full {
                let rest = !mask_a & full;
                // All submasks of the complement, including the empty one.
                let mut mask_b = rest;
                loop {
                    let a = set_from_mask(mask_a, &universe);
                    let b = set_from_mask(mask_b, &universe);
                    let union = a.union(&b);
                    let derived = sharp_by_removal(cs, &union);
                    let key = (sharp_by_removal(cs, &a), sharp_by_removal(cs, &b));
                    if let Some(report) = grouper.check(&law_name, key, a, b, derived) {
                        return Ok(report);
                    }
                    if mask_b == 0 {
                        break;
                    }
                    mask_b = (mask_b - 1) & rest;
                }
            }
        }
        CountingLaw::Delta => {
            for mask_a in 0..=full {
                for mask_b in 0..=full {
                    let a = set_from_mask(mask_a, &universe);
                    let b = set_from_mask(mask_b, &universe);
                    let product = product_set(&a, &b)?;
                    let derived = sharp_by_removal(cs, &product);
                    let key = (sharp_by_removal(cs, &a), sharp_by_removal(cs, &b));
                    if let Some(report) = grouper.check(&law_name, key, a, b, derived) {
                        return Ok(report);
                    }
                }
            }
        }
        CountingLaw::Exp => {
            // Exponent sets of size up to 3, drawn from atoms disjoint from
            // the universe. The grouping key pairs the base count with the
            // exponent size.
            for exp_size in 0..=3usize {
                let exponent: FiniteSet = (0..exp_size).map(|i| 1000 + i as AtomId).collect();
                for mask_b in 0..=full {
                    let b = set_from_mask(mask_b, &universe);
                    let space = function_space_set(&exponent, &b)?;
                    let derived = sharp_by_removal(cs, &space);
                    let key = (sharp_by_removal(cs, &b), exp_size);
                    if let Some(report) =
                        grouper.check(&law_name, key, exponent.clone(), b, derived)
                    {
                        return Ok(report);
                    }
                }
            }
        }
    }
    Ok(CheckReport::pass(law_name, grouper.checked))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::make_set;

    #[test]
    fn full_power_set_is_inductive() {
        for n in 0..=4 {
            let base = FiniteSet::range(n);
            let system = SubsetSystem::new(base.clone(), base.power_set().unwrap()).unwrap();
            assert!(system.is_inductive());
        }
    }

    #[test]
    fn partial_families_are_not_inductive() {
        let base = make_set(&[7]).unwrap();
        let missing_singleton =
            SubsetSystem::new(base.clone(), vec![FiniteSet::empty()]).unwrap();
        assert!(!missing_singleton.is_inductive());

        let missing_empty = SubsetSystem::new(base.clone(), vec![base.clone()]).unwrap();
        assert!(!missing_empty.is_inductive());
    }

    #[test]
    fn subset_system_validation() {
        let base = FiniteSet::range(2);
        assert!(matches!(
            SubsetSystem::new(base.clone(), vec![make_set(&[5]).unwrap()]),
            Err(Error::MemberNotInBase { .. })
        ));
        assert!(matches!(
            SubsetSystem::new(base.clone(), vec![base.clone(), base.clone()]),
            Err(Error::DuplicateMember { .. })
        ));
    }

    #[test]
    fn exactly_one_inductive_system_on_small_bases() {
        // The empty base has the single family {{}} = its full power set.
        let systems = inductive_systems(&FiniteSet::empty()).unwrap();
        assert_eq!(systems.len(), 1);
        assert_eq!(systems[0].members(), &[FiniteSet::empty()]);

        for n in 1..=2 {
            let base = FiniteSet::range(n);
            let systems = inductive_systems(&base).unwrap();
            assert_eq!(systems.len(), 1);
            assert_eq!(systems[0].members(), &base.power_set().unwrap()[..]);
            assert!(every_inductive_contains(&base).unwrap());
        }
    }

    #[test]
    fn inductive_enumeration_guard() {
        let base = FiniteSet::range(5);
        assert!(matches!(
            inductive_systems(&base),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn tarski_minimal_examples() {
        let base = make_set(&[0, 1, 2]).unwrap();
        let sole = SubsetSystem::new(base.clone(), vec![base.clone()]).unwrap();
        assert_eq!(tarski_minimal(&sole).unwrap(), base);

        // a = 0, b = 1, c = 2.
        let s = SubsetSystem::new(
            base.clone(),
            vec![
                make_set(&[0, 1]).unwrap(),
                make_set(&[0]).unwrap(),
                make_set(&[0, 2]).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(tarski_minimal(&s).unwrap(), make_set(&[0]).unwrap());

        let tie = SubsetSystem::new(
            base.clone(),
            vec![make_set(&[1]).unwrap(), make_set(&[0]).unwrap()],
        )
        .unwrap();
        assert_eq!(tarski_minimal(&tie).unwrap(), make_set(&[0]).unwrap());

        let empty = SubsetSystem::new(base, vec![]).unwrap();
        assert_eq!(tarski_minimal(&empty), Err(Error::EmptySystem));
    }

    #[test]
    fn selfmap_counts() {
        let r0 = check_selfmaps(0).unwrap();
        assert!(r0.passed);
        assert_eq!((r0.maps_checked, r0.bijections), (1, 1));

        let r3 = check_selfmaps(3).unwrap();
        assert!(r3.passed);
        assert_eq!((r3.maps_checked, r3.bijections), (27, 6));

        let r4 = check_selfmaps(4).unwrap();
        assert!(r4.passed);
        assert_eq!((r4.maps_checked, r4.bijections), (256, 24));

        assert!(matches!(check_selfmaps(8), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn removal_examples() {
        let r5 = fixtures::r5();
        assert_eq!(
            iterator_by_removal(&r5, &FiniteSet::empty(), &[]).unwrap(),
            0
        );

        let set = make_set(&[10, 11, 12]).unwrap();
        for order in [
            [10, 11, 12],
            [10, 12, 11],
            [11, 10, 12],
            [11, 12, 10],
            [12, 10, 11],
            [12, 11, 10],
        ] {
            assert_eq!(iterator_by_removal(&r5, &set, &order).unwrap(), 3);
        }

        let seven = FiniteSet::range(7);
        assert_eq!(sharp_by_removal(&r5, &seven), 4);

        assert_eq!(
            iterator_by_removal(&r5, &set, &[10, 11]),
            Err(Error::BadOrder)
        );
        assert_eq!(
            iterator_by_removal(&r5, &set, &[10, 11, 11]),
            Err(Error::BadOrder)
        );
    }

    #[test]
    fn product_and_function_space_realizations() {
        let a = make_set(&[0, 1]).unwrap();
        let b = make_set(&[2, 3, 4]).unwrap();
        let p = product_set(&a, &b).unwrap();
        assert_eq!(p.cardinality(), 6);
        assert!(p.contains(PRODUCT_STRIDE + 4));

        let space = function_space_set(&a, &b).unwrap();
        assert_eq!(space.cardinality(), 9);
    }

    #[test]
    fn counting_laws_on_fixtures() {
        let one = fixtures::one();
        assert!(check_counting_law(&one, CountingLaw::Beta, 4).unwrap().passed);

        let r5 = fixtures::r5();
        assert!(check_counting_law(&r5, CountingLaw::Beta, 8).unwrap().passed);

        let c3 = fixtures::c3();
        assert!(check_counting_law(&c3, CountingLaw::Delta, 6).unwrap().passed);
        assert!(check_counting_law(&c3, CountingLaw::Exp, 4).unwrap().passed);

        assert!(matches!(
            check_counting_law(&fixtures::n5(), CountingLaw::Beta, 4),
            Err(Error::RequiresMinimal)
        ));
    }

    #[test]
    fn check_report_serialization() {
        let report = CheckReport::pass("beta(u=4)", 81);
        let value = serde_json::to_value(&report).unwrap();
        assert_eq!(
            value,
            json!({"law": "beta(u=4)", "checked": 81, "passed": true, "counterexample": null})
        );
    }
}
