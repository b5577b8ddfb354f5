//! Exhaustive verification suites.
//!
//! Each suite runs one family of structural claims by brute force over every
//! instance at desk scale and reports one [`CheckReport`] per claim. The
//! suites back the command line's `verify` subcommand and the acceptance
//! tests. All enumeration orders are deterministic.

use std::collections::BTreeSet;
use std::str::FromStr;

use itertools::Itertools;
use serde_json::json;

use crate::arith::{self, BinOp, LawId};
use crate::counting::{all_systems, canonical_minimal_systems, minimal_systems, CountingSystem};
use crate::error::Result;
use crate::finset::{bijection_exists, AtomId, FiniteSet};
use crate::fixtures;
use crate::minimal::{
    end_point, endpoint_bijection_check, is_minimal_off, is_sharp_regular, modify_end, sset,
};
use crate::monoid::{check_monoid_iso, f_power, monoid_elements, phi};
use crate::natmodel::{bracket, check_completeness, check_recursion, nat_recursion, BoundedNat};
use crate::oracle::{
    check_counting_law, check_selfmaps, every_inductive_contains, function_space_set,
    inductive_systems, iterator_by_removal, product_set, sharp_by_removal, tarski_minimal,
    CheckReport, CountingLaw, SubsetSystem,
};

/// One named verification suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Inductive,
    Selfmaps,
    Tarski,
    Iterator,
    Structure,
    Laws,
    ArithOracle,
    Monoid,
    Natmodel,
    Morphism,
}

impl Suite {
    pub const NAMES: [(&'static str, Suite); 11] = [
        ("all", Suite::All),
        ("inductive", Suite::Inductive),
        ("selfmaps", Suite::Selfmaps),
        ("tarski", Suite::Tarski),
        ("iterator", Suite::Iterator),
        ("structure", Suite::Structure),
        ("laws", Suite::Laws),
        ("arith-oracle", Suite::ArithOracle),
        ("monoid", Suite::Monoid),
        ("natmodel", Suite::Natmodel),
        ("morphism", Suite::Morphism),
    ];
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Suite, String> {
        Suite::NAMES
            .iter()
            .find(|(name, _)| *name == s)
            .map(|&(_, suite)| suite)
            .ok_or_else(|| {
                let names: Vec<&str> = Suite::NAMES.iter().map(|(n, _)| *n).collect();
                format!("unknown suite '{s}' (expected one of: {})", names.join(", "))
            })
    }
}

impl std::fmt::Display for Suite {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = Suite::NAMES
            .iter()
            .find(|(_, suite)| suite == self)
            .map(|(name, _)| *name)
            .unwrap_or("?");
        write!(f, "{name}")
    }
}

/// Size bounds for the suites.
#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    /// Carrier/set size budget; each suite clamps it to its own guard.
    pub max_n: usize,
    /// Cap for the bounded-natural checks.
    pub cap: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { max_n: 4, cap: 32 }
    }
}

/// Runs one suite (or all of them) and returns the individual reports.
pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Result<Vec<CheckReport>> {
    match suite {
        Suite::All => {
            let mut reports = Vec::new();
            for &(_, s) in Suite::NAMES.iter().skip(1) {
                reports.extend(run_suite(s, opts)?);
            }
            Ok(reports)
        }
        Suite::Inductive => suite_inductive(opts.max_n),
        Suite::Selfmaps => suite_selfmaps(),
        Suite::Tarski => suite_tarski(opts.max_n),
        Suite::Iterator => suite_iterator(),
        Suite::Structure => suite_structure(opts.max_n),
        Suite::Laws => suite_laws(opts.max_n),
        Suite::ArithOracle => suite_arith_oracle(),
        Suite::Monoid => suite_monoid(opts.max_n),
        Suite::Natmodel => suite_natmodel(opts.cap),
        Suite::Morphism => suite_morphism(opts.max_n),
    }
}

fn named_fixtures() -> Vec<(&'static str, CountingSystem)> {
    vec![
        ("ONE", fixtures::one()),
        ("C3", fixtures::c3()),
        ("S4", fixtures::s4()),
        ("R5", fixtures::r5()),
        ("N5-restricted", fixtures::n5().restricted_to_reachable()),
    ]
}

fn map_is_injective(table: &[usize]) -> bool {
    let mut hit = vec![false; table.len()];
    for &v in table {
        if hit[v] {
            return false;
        }
        hit[v] = true;
    }
    true
}

/// For every base of size up to 4, enumerating all candidate subset families
/// must find exactly one inductive system, the full power set, and every
/// inductive system must contain the base itself.
fn suite_inductive(max_n: usize) -> Result<Vec<CheckReport>> {
    let bound = max_n.min(4);
    let mut reports = Vec::new();
    for a in 0..=bound {
        let base = FiniteSet::range(a);
        let candidates = 1u64 << (1 << a);
        let law = format!("inductive_unique(|A|={a})");
        let systems = inductive_systems(&base)?;
        let power = base.power_set()?;
        let unique = systems.len() == 1 && systems[0].members() == &power[..];
        let contains = every_inductive_contains(&base)?;
        if unique && contains {
            reports.push(CheckReport::pass(law, candidates));
        } else {
            reports.push(CheckReport::fail(
                law,
                candidates,
                json!({"inductive_systems": systems.len(), "all_contain_base": contains}),
            ));
        }
    }
    Ok(reports)
}

/// Every self-map of a carrier of size 0 through 7 is injective exactly when
/// surjective, with exactly n! bijections among the n^n maps.
fn suite_selfmaps() -> Result<Vec<CheckReport>> {
    let mut reports = Vec::new();
    for n in 0..=7usize {
        let law = format!("selfmaps(n={n})");
        let report = check_selfmaps(n)?;
        let expected: u64 = (1..=n as u64).product();
        if report.passed && report.bijections == expected {
            reports.push(CheckReport::pass(law, report.maps_checked));
        } else {
            reports.push(CheckReport::fail(
                law,
                report.maps_checked,
                json!({
                    "bijections": report.bijections,
                    "expected_bijections": expected,
                    "counterexample": report.counterexample.map(|m| m.to_string()),
                }),
            ));
        }
    }
    Ok(reports)
}

/// Every non-empty family of subsets of a base of size up to 4 has a minimal
/// member, and the one returned really is minimal.
fn suite_tarski(max_n: usize) -> Result<Vec<CheckReport>> {
    let bound = max_n.min(4);
    let mut reports = Vec::new();
    for a in 0..=bound {
        let base = FiniteSet::range(a);
        let subsets = base.power_set()?;
        let law = format!("tarski_minimal(|A|={a})");
        let mut checked = 0u64;
        let mut failure = None;
        'families: for family in 1u64..(1 << (1 << a)) {
            let members: Vec<FiniteSet> = subsets
                .iter()
                .enumerate()
                .filter(|(i, _)| family >> i & 1 == 1)
                .map(|(_, s)| s.clone())
                .collect();
            let system = SubsetSystem::new(base.clone(), members)?;
            checked += 1;
            let minimal = tarski_minimal(&system)?;
            let genuinely_minimal = system.contains(&minimal)
                && !system
                    .members()
                    .iter()
                    .any(|m| m != &minimal && m.is_subset_of(&minimal));
            if !genuinely_minimal {
                failure = Some(json!({"family": family, "returned": minimal.to_string()}));
                break 'families;
            }
        }
        reports.push(match failure {
            None => CheckReport::pass(law, checked),
            Some(w) => CheckReport::fail(law, checked, w),
        });
    }
    Ok(reports)
}

/// Counting by element removal gives the same result in every removal order
/// and agrees with the closed form `f^|A|(x0)`: all orders for sets of up to
/// 5 elements, deterministic samples of the orders for 6 and 7.
fn suite_iterator() -> Result<Vec<CheckReport>> {
    let mut reports = Vec::new();
    for (name, cs) in named_fixtures() {
        let law = format!("iterator_order_independence({name})");
        let mut checked = 0u64;
        let mut failure = None;
        'sizes: for size in 0..=7usize {
            let set: FiniteSet = (0..size).map(|i| 10 + i as AtomId).collect();
            let expected = cs.sharp(&set);
            let orders: Vec<Vec<AtomId>> = if size <= 5 {
                set.atoms().iter().copied().permutations(size).collect()
            } else {
                // Deterministic sample of the larger order spaces.
                set.atoms()
                    .iter()
                    .copied()
                    .permutations(size)
                    .step_by(211)
                    .take(24)
                    .collect()
            };
            for order in orders {
                checked += 1;
                let got = iterator_by_removal(&cs, &set, &order)?;
                if got != expected {
                    failure = Some(json!({
                        "set": set.to_string(),
                        "order": order,
                        "removal": got,
                        "closed_form": expected,
                    }));
                    break 'sizes;
                }
            }
        }
        reports.push(match failure {
            None => CheckReport::pass(law, checked),
            Some(w) => CheckReport::fail(law, checked, w),
        });
    }
    Ok(reports)
}

/// Structure of finite minimal systems, over every minimal system (all
/// relabellings) with carrier up to the bound: the end-point is unique, the
/// self-map is a bijection off it, no other element is fixed, the value at
/// the end-point decides injectivity, redirecting that value preserves
/// minimality and the end-point, and the counted subsets grow one element
/// per size until they saturate.
fn suite_structure(max_n: usize) -> Result<Vec<CheckReport>> {
    let bound = max_n.min(6);
    let mut reports = Vec::new();
    for n in 1..=bound {
        let law = format!("minimal_structure(n={n})");
        let mut checked = 0u64;
        let mut failure = None;
        'systems: for cs in minimal_systems(n) {
            checked += 1;
            let z = end_point(&cs)?;
            let x0 = cs.base_point();

            for e in 0..n {
                if is_minimal_off(&cs, e)? != (e == z) {
                    failure = Some(json!({"system": cs.to_string(), "claim": "unique_end_point", "element": e}));
                    break 'systems;
                }
            }
            if !endpoint_bijection_check(&cs)? {
                failure = Some(json!({"system": cs.to_string(), "claim": "bijection_off_end_point"}));
                break 'systems;
            }
            if (0..n).any(|x| x != z && cs.step(x) == x) {
                failure = Some(json!({"system": cs.to_string(), "claim": "no_other_fixed_point"}));
                break 'systems;
            }

            // The value at the end-point decides the map's character.
            let injective = map_is_injective(cs.map());
            let image_has_base = cs.map().contains(&x0);
            let closes_cycle = cs.step(z) == x0;
            let ok = if closes_cycle {
                injective && image_has_base
            } else {
                !injective && !image_has_base
            };
            if !ok || (injective != closes_cycle) {
                failure = Some(json!({"system": cs.to_string(), "claim": "end_point_value_decides_injectivity"}));
                break 'systems;
            }

            for w in 0..n {
                let modified = modify_end(&cs, w)?;
                if !modified.is_minimal() || end_point(&modified)? != z {
                    failure = Some(json!({"system": cs.to_string(), "claim": "modify_end_stability", "w": w}));
                    break 'systems;
                }
            }

            let len = cs.trajectory().len();
            let carrier: BTreeSet<usize> = (0..n).collect();
            for k in 0..=(2 * n as u64) {
                let s = sset(&cs, k)?;
                if s.len() != ((k + 1).min(len as u64)) as usize {
                    failure = Some(json!({"system": cs.to_string(), "claim": "sset_growth", "k": k}));
                    break 'systems;
                }
                let regular = is_sharp_regular(&cs, k)?;
                if regular != (k < len as u64) {
                    failure = Some(json!({"system": cs.to_string(), "claim": "regularity_threshold", "k": k}));
                    break 'systems;
                }
                if k >= 1 {
                    let below = sset(&cs, k - 1)?;
                    if regular != (below != carrier) {
                        failure = Some(json!({"system": cs.to_string(), "claim": "regularity_vs_sset", "k": k}));
                        break 'systems;
                    }
                }
                // Spanning sizes: regular and saturating exactly at len - 1.
                let spanning = regular && s == carrier;
                if spanning != (k == len as u64 - 1) {
                    failure = Some(json!({"system": cs.to_string(), "claim": "spanning_size", "k": k}));
                    break 'systems;
                }
            }
            if cs.iterate(len as u64 - 1) != z {
                failure = Some(json!({"system": cs.to_string(), "claim": "end_point_is_last_count"}));
                break 'systems;
            }
        }
        reports.push(match failure {
            None => CheckReport::pass(law, checked),
            Some(w) => CheckReport::fail(law, checked, w),
        });
    }
    Ok(reports)
}

/// The arithmetic laws hold exhaustively on every orbit shape with
/// `tail + cycle` up to the bound, and cancellation/group hold exactly when
/// the self-map is injective (equivalently bijective, equivalently the
/// orbit has no tail).
fn suite_laws(max_n: usize) -> Result<Vec<CheckReport>> {
    let bound = max_n.min(6);
    let systems: Vec<CountingSystem> = (1..=bound)
        .flat_map(canonical_minimal_systems)
        .collect();
    let mut reports = Vec::new();

    for law in LawId::UNIVERSAL {
        let name = format!("{law}(t+l<={bound})");
        let mut checked = 0u64;
        let mut failure = None;
        for cs in &systems {
            let report = arith::check_law(cs, law)?;
            checked += report.instances_checked;
            if !report.passed {
                failure = Some(json!({
                    "system": cs.to_string(),
                    "witness": report.counterexample,
                }));
                break;
            }
        }
        reports.push(match failure {
            None => CheckReport::pass(name, checked),
            Some(w) => CheckReport::fail(name, checked, w),
        });
    }

    for (name, law) in [
        ("cancellation_iff_injective", LawId::Cancellation),
        ("group_iff_bijective", LawId::Group),
    ] {
        let name = format!("{name}(t+l<={bound})");
        let mut checked = 0u64;
        let mut failure = None;
        for cs in &systems {
            checked += 1;
            let holds = arith::check_law(cs, law)?.passed;
            let injective = map_is_injective(cs.map());
            let no_tail = cs.trajectory().tail() == 0;
            // On a finite carrier injective and bijective coincide.
            if holds != injective || injective != no_tail {
                failure = Some(json!({"system": cs.to_string(), "law_holds": holds}));
                break;
            }
        }
        reports.push(match failure {
            None => CheckReport::pass(name, checked),
            Some(w) => CheckReport::fail(name, checked, w),
        });
    }
    Ok(reports)
}

/// The coordinate-computed operations agree with literal set counting on
/// the fixture systems: disjoint unions for addition, paired-atom products
/// for multiplication, enumerated function spaces for exponentiation. Also
/// re-checks the well-definedness laws themselves.
fn suite_arith_oracle() -> Result<Vec<CheckReport>> {
    let mut reports = Vec::new();
    let fixtures: Vec<(&str, CountingSystem)> = vec![
        ("C3", fixtures::c3()),
        ("S4", fixtures::s4()),
        ("R5", fixtures::r5()),
    ];

    for (name, cs) in &fixtures {
        // Addition against disjoint unions over a 10-atom universe.
        let law = format!("oracle_add({name})");
        let universe = 10usize;
        let full = (1u32 << universe) - 1;
        let mut checked = 0u64;
        let mut failure = None;
        'add: for mask_a in 0..=full {
            let rest = !mask_a & full;
            let mut mask_b = rest;
            loop {
                let a = mask_to_set(mask_a);
                let b = mask_to_set(mask_b);
                checked += 1;
                let lhs = arith::add(cs, sharp_by_removal(cs, &a), sharp_by_removal(cs, &b))?;
                let rhs = sharp_by_removal(cs, &a.union(&b));
                if lhs != rhs {
                    failure = Some(json!({"a": a.to_string(), "b": b.to_string(), "add": lhs, "union_count": rhs}));
                    break 'add;
                }
                if mask_b == 0 {
                    break;
                }
                mask_b = (mask_b - 1) & rest;
            }
        }
        reports.push(match failure {
            None => CheckReport::pass(law, checked),
            Some(w) => CheckReport::fail(law, checked, w),
        });

        // Multiplication against paired-atom products over a 6-atom universe.
        let law = format!("oracle_mul({name})");
        let mut checked = 0u64;
        let mut failure = None;
        'mul: for mask_a in 0..(1u32 << 6) {
            for mask_b in 0..(1u32 << 6) {
                let a = mask_to_set(mask_a);
                let b = mask_to_set(mask_b);
                checked += 1;
                let lhs = arith::mul(cs, sharp_by_removal(cs, &a), sharp_by_removal(cs, &b))?;
                let rhs = sharp_by_removal(cs, &product_set(&a, &b)?);
                if lhs != rhs {
                    failure = Some(json!({"a": a.to_string(), "b": b.to_string(), "mul": lhs, "product_count": rhs}));
                    break 'mul;
                }
            }
        }
        reports.push(match failure {
            None => CheckReport::pass(law, checked),
            Some(w) => CheckReport::fail(law, checked, w),
        });

        // Exponentiation against enumerated function spaces, |A|, |B| <= 3.
        let law = format!("oracle_pow({name})");
        let mut checked = 0u64;
        let mut failure = None;
        'pow: for mask_a in 0..(1u32 << 3) {
            for mask_b in 0..(1u32 << 3) {
                let a = mask_to_set(mask_a);
                let b: FiniteSet = mask_to_set(mask_b).iter().map(|x| x + 3).collect();
                checked += 1;
                let exponent = BoundedNat::with_default_cap(b.cardinality() as u64)?;
                let lhs = arith::pow(cs, sharp_by_removal(cs, &a), &exponent)?;
                // The function space of maps from b into a.
                let rhs = sharp_by_removal(cs, &function_space_set(&b, &a)?);
                if lhs != rhs {
                    failure = Some(json!({"a": a.to_string(), "b": b.to_string(), "pow": lhs, "space_count": rhs}));
                    break 'pow;
                }
            }
        }
        reports.push(match failure {
            None => CheckReport::pass(law, checked),
            Some(w) => CheckReport::fail(law, checked, w),
        });

        // Well-definedness of the three operations.
        for (law, universe) in [
            (CountingLaw::Beta, 8),
            (CountingLaw::Delta, 6),
            (CountingLaw::Exp, 4),
        ] {
            let mut report = check_counting_law(cs, law, universe)?;
            report.law = format!("{}[{name}]", report.law);
            reports.push(report);
        }
    }
    Ok(reports)
}

fn mask_to_set(mask: u32) -> FiniteSet {
    (0..32)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| i as AtomId)
        .collect()
}

/// The monoid of self-map powers on every orbit shape up to the bound:
/// exactly `tail + cycle` distinct powers, evaluation at the base point is a
/// bijection, the isomorphism checks pass, the two constructions of the
/// arithmetic produce identical tables, power equality matches count
/// equality, and injectivity of the self-map propagates to every power.
fn suite_monoid(max_n: usize) -> Result<Vec<CheckReport>> {
    let bound = max_n.min(6);
    let mut reports = Vec::new();
    for n in 1..=bound {
        let law = format!("monoid_iso(n={n})");
        let mut checked = 0u64;
        let mut failure = None;
        'systems: for cs in canonical_minimal_systems(n) {
            checked += 1;
            let elements = monoid_elements(&cs)?;
            if elements.len() != cs.trajectory().len() {
                failure = Some(json!({"system": cs.to_string(), "claim": "element_count", "got": elements.len()}));
                break 'systems;
            }
            let mut images: Vec<usize> = Vec::new();
            for u in &elements {
                images.push(phi(&cs, u)?);
            }
            let mut sorted = images.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != n {
                failure = Some(json!({"system": cs.to_string(), "claim": "phi_bijective"}));
                break 'systems;
            }

            let iso = check_monoid_iso(&cs)?;
            checked += iso.instances_checked;
            if !iso.passed {
                failure = Some(json!({"system": cs.to_string(), "claim": "monoid_iso", "witness": iso.counterexample}));
                break 'systems;
            }

            // Both derivations of the arithmetic coincide as full tables.
            // Element k of the monoid evaluates to orbit position k, so
            // indexing by coordinate picks the preimage under evaluation.
            let add_table = arith::cayley_table(&cs, BinOp::Add)?;
            let mul_table = arith::cayley_table(&cs, BinOp::Mul)?;
            for x in 0..n {
                for y in 0..n {
                    checked += 1;
                    let ux = &elements[cs.coordinate(x)?.index()];
                    let uy = &elements[cs.coordinate(y)?.index()];
                    let add2 = phi(&cs, &crate::monoid::compose(ux, uy)?)?;
                    let mul2 = phi(&cs, &crate::monoid::diamond(&cs, ux, uy)?)?;
                    if add2 != add_table[x][y] || mul2 != mul_table[x][y] {
                        failure = Some(json!({"system": cs.to_string(), "claim": "tables_coincide", "x": x, "y": y}));
                        break 'systems;
                    }
                }
            }

            // Power equality matches count equality.
            let len = cs.trajectory().len() as u64;
            for a in 0..=2 * len {
                for b in 0..=2 * len {
                    checked += 1;
                    let maps_equal = f_power(&cs, a) == f_power(&cs, b);
                    let counts_equal = cs.iterate(a) == cs.iterate(b);
                    if maps_equal != counts_equal {
                        failure = Some(json!({"system": cs.to_string(), "claim": "power_eq_iff_count_eq", "a": a, "b": b}));
                        break 'systems;
                    }
                }
            }

            // Injectivity propagates to every power.
            if map_is_injective(cs.map()) {
                for u in &elements {
                    checked += 1;
                    if !map_is_injective(u.table()) {
                        failure = Some(json!({"system": cs.to_string(), "claim": "powers_injective", "power": u.to_string()}));
                        break 'systems;
                    }
                }
            }
        }
        reports.push(match failure {
            None => CheckReport::pass(law, checked),
            Some(w) => CheckReport::fail(law, checked, w),
        });
    }
    Ok(reports)
}

/// Laws of the bounded natural model: bracket-set recurrence, equinumerosity
/// of a set with the bracket of its count, pointwise uniqueness of the
/// recursion map, completeness of counting below the cap.
fn suite_natmodel(cap: u64) -> Result<Vec<CheckReport>> {
    let mut reports = Vec::new();

    let law = format!("bracket_laws(cap={cap})");
    let mut checked = 0u64;
    let mut failure = None;
    for v in 0..=cap {
        checked += 1;
        let n = BoundedNat::new(v, cap)?;
        let b = bracket(&n);
        if b.contains(v) || b.cardinality() as u64 != v {
            failure = Some(json!({"value": v, "claim": "bracket_excludes_value"}));
            break;
        }
        match n.successor() {
            Ok(s) => {
                if bracket(&s) != b.with(v) {
                    failure = Some(json!({"value": v, "claim": "bracket_recurrence"}));
                    break;
                }
            }
            Err(_) => {
                if v != cap {
                    failure = Some(json!({"value": v, "claim": "overflow_only_at_cap"}));
                    break;
                }
            }
        }
    }
    reports.push(match failure {
        None => CheckReport::pass(law, checked),
        Some(w) => CheckReport::fail(law, checked, w),
    });

    // A set of size k is equinumerous with the bracket of its count, and the
    // closed-form count of any system agrees with the recursion map at the
    // set's size.
    let law = "bracket_equinumerosity(size<=8)".to_string();
    let mut checked = 0u64;
    let mut failure = None;
    'sizes: for k in 0..=8usize {
        let set: FiniteSet = (0..k).map(|i| 40 + 3 * i as AtomId).collect();
        checked += 1;
        let nat = BoundedNat::new(k as u64, cap.max(8))?;
        if bijection_exists(&set, &bracket(&nat))?.is_none() {
            failure = Some(json!({"size": k, "claim": "bijection_with_bracket"}));
            break;
        }
        for (name, cs) in named_fixtures() {
            checked += 1;
            if cs.sharp(&set) != nat_recursion(&cs, &nat) {
                failure = Some(json!({"size": k, "system": name, "claim": "sharp_equals_recursion"}));
                break 'sizes;
            }
        }
    }
    reports.push(match failure {
        None => CheckReport::pass(law, checked),
        Some(w) => CheckReport::fail(law, checked, w),
    });

    let law = format!("recursion_uniqueness(n<=4,cap={cap})");
    let mut checked = 0u64;
    let mut failure = None;
    'targets: for n in 1..=4usize {
        for cs in all_systems(n) {
            checked += 1;
            let report = check_recursion(&cs, cap);
            if !report.passed {
                failure = Some(json!({"system": cs.to_string(), "witness": report.counterexample}));
                break 'targets;
            }
        }
    }
    reports.push(match failure {
        None => CheckReport::pass(law, checked),
        Some(w) => CheckReport::fail(law, checked, w),
    });

    reports.push(check_completeness(16)?);
    Ok(reports)
}

/// Enumerates every map between carriers and counts the morphisms, then
/// checks that the closed-form criterion finds exactly the same morphisms,
/// including the uniqueness flag.
fn suite_morphism(max_n: usize) -> Result<Vec<CheckReport>> {
    let bound = max_n.min(4);
    let law = format!("morphism_vs_bruteforce(n<={bound})");
    let mut checked = 0u64;
    let mut failure = None;
    'pairs: for ns in 1..=bound {
        for src in minimal_systems(ns) {
            for nd in 1..=bound {
                for dst in all_systems(nd) {
                    checked += 1;
                    let brute = brute_force_morphisms(&src, &dst);
                    let found = crate::counting::find_morphism(&src, &dst)?;
                    let ok = match (&brute[..], &found) {
                        ([], None) => true,
                        ([only], Some((table, unique))) => {
                            *unique
                                && table
                                    .values()
                                    .iter()
                                    .map(|&v| v as usize)
                                    .collect::<Vec<_>>()
                                    == *only
                        }
                        _ => false,
                    };
                    if !ok {
                        failure = Some(json!({
                            "src": src.to_string(),
                            "dst": dst.to_string(),
                            "brute_count": brute.len(),
                            "found": found.map(|(t, u)| json!({"map": t.to_string(), "unique": u})),
                        }));
                        break 'pairs;
                    }
                }
            }
        }
    }
    Ok(vec![match failure {
        None => CheckReport::pass(law, checked),
        Some(w) => CheckReport::fail(law, checked, w),
    }])
}

/// All morphism tables from `src` to `dst`, by plain odometer enumeration.
fn brute_force_morphisms(src: &CountingSystem, dst: &CountingSystem) -> Vec<Vec<usize>> {
    let ns = src.carrier_size();
    let nd = dst.carrier_size();
    let mut found = Vec::new();
    let mut h = vec![0usize; ns];
    loop {
        if h[src.base_point()] == dst.base_point()
            && (0..ns).all(|x| h[src.step(x)] == dst.step(h[x]))
        {
            found.push(h.clone());
        }
        let mut pos = ns;
        loop {
            if pos == 0 {
                return found;
            }
            pos -= 1;
            h[pos] += 1;
            if h[pos] < nd {
                break;
            }
            h[pos] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for (name, suite) in Suite::NAMES {
            assert_eq!(Suite::from_str(name).unwrap(), suite);
            assert_eq!(suite.to_string(), name);
        }
        assert!(Suite::from_str("bogus").is_err());
    }

    #[test]
    fn quick_suites_pass() {
        let opts = VerifyOptions { max_n: 3, cap: 16 };
        for suite in [
            Suite::Inductive,
            Suite::Tarski,
            Suite::Iterator,
            Suite::Structure,
            Suite::Laws,
            Suite::Monoid,
            Suite::Morphism,
        ] {
            let reports = run_suite(suite, &opts).unwrap();
            assert!(!reports.is_empty());
            for r in &reports {
                assert!(r.passed, "suite {suite} failed: {r}");
            }
        }
    }
}
