//! Cross-validation of the coordinate-computed arithmetic against
//! independent routes: the defining recurrences propagated along the orbit,
//! literal repeated multiplication for powers, and the cyclic-generation
//! property of the tail-free systems.

use countsys_core::arith::{self, BinOp, LawId};
use countsys_core::counting::{canonical_minimal_systems, CountingSystem};
use countsys_core::natmodel::BoundedNat;

/// The addition table rebuilt from its two defining equations alone:
/// adding the base point is the identity, and adding a successor is the
/// successor of the sum. Propagation along the orbit pins every entry;
/// `None` when the forced values are inconsistent at the cycle wrap.
fn add_table_by_recurrence(cs: &CountingSystem) -> Option<Vec<Vec<usize>>> {
    let n = cs.carrier_size();
    let orbit = cs.trajectory().orbit();
    let x0 = cs.base_point();
    let mut table = vec![vec![usize::MAX; n]; n];
    for x in 0..n {
        table[x][x0] = x;
        for k in 0..orbit.len() - 1 {
            table[x][orbit[k + 1]] = cs.step(table[x][orbit[k]]);
        }
        let last = orbit[orbit.len() - 1];
        if table[x][cs.step(last)] != cs.step(table[x][last]) {
            return None;
        }
    }
    Some(table)
}

/// The multiplication table rebuilt from its defining equations, reusing a
/// verified addition table: multiplying by the base point yields the base
/// point, and multiplying by a successor adds one more copy.
fn mul_table_by_recurrence(
    cs: &CountingSystem,
    add: &[Vec<usize>],
) -> Option<Vec<Vec<usize>>> {
    let n = cs.carrier_size();
    let orbit = cs.trajectory().orbit();
    let x0 = cs.base_point();
    let mut table = vec![vec![usize::MAX; n]; n];
    for x in 0..n {
        table[x][x0] = x0;
        for k in 0..orbit.len() - 1 {
            table[x][orbit[k + 1]] = add[x][table[x][orbit[k]]];
        }
        let last = orbit[orbit.len() - 1];
        if table[x][cs.step(last)] != add[x][table[x][last]] {
            return None;
        }
    }
    Some(table)
}

fn shapes_up_to(bound: usize) -> Vec<CountingSystem> {
    (1..=bound).flat_map(canonical_minimal_systems).collect()
}

#[test]
fn addition_is_the_unique_solution_of_its_recurrences() {
    for cs in shapes_up_to(6) {
        let expected = arith::cayley_table(&cs, BinOp::Add).unwrap();
        let rebuilt = add_table_by_recurrence(&cs)
            .unwrap_or_else(|| panic!("inconsistent recurrence on {cs}"));
        assert_eq!(rebuilt, expected, "system {cs}");
    }
}

#[test]
fn multiplication_is_the_unique_solution_of_its_recurrences() {
    for cs in shapes_up_to(6) {
        let add = arith::cayley_table(&cs, BinOp::Add).unwrap();
        let expected = arith::cayley_table(&cs, BinOp::Mul).unwrap();
        let rebuilt = mul_table_by_recurrence(&cs, &add)
            .unwrap_or_else(|| panic!("inconsistent recurrence on {cs}"));
        assert_eq!(rebuilt, expected, "system {cs}");
    }
}

#[test]
fn power_matches_literal_repeated_multiplication() {
    for cs in shapes_up_to(6) {
        let unit = cs.iterate(1);
        for x in 0..cs.carrier_size() {
            let mut by_mul = unit;
            for e in 0..=20u64 {
                let nat = BoundedNat::with_default_cap(e).unwrap();
                assert_eq!(
                    arith::pow(&cs, x, &nat).unwrap(),
                    by_mul,
                    "system {cs}, base {x}, exponent {e}"
                );
                by_mul = arith::mul(&cs, x, by_mul).unwrap();
            }
        }
    }
}

#[test]
fn tail_free_systems_are_cyclic_under_addition() {
    // When the orbit is a pure cycle the addition forms a group generated by
    // the image of the base point.
    for cs in shapes_up_to(6)
        .into_iter()
        .filter(|cs| cs.trajectory().tail() == 0)
    {
        let generator = cs.iterate(1);
        let mut seen = vec![false; cs.carrier_size()];
        let mut x = cs.base_point();
        for _ in 0..cs.carrier_size() {
            seen[x] = true;
            x = arith::add(&cs, x, generator).unwrap();
        }
        assert!(seen.iter().all(|&s| s), "generator fails to exhaust {cs}");
    }
}

#[test]
fn universal_laws_hold_on_every_shape_up_to_six() {
    for cs in shapes_up_to(6) {
        for law in LawId::UNIVERSAL {
            let report = arith::check_law(&cs, law).unwrap();
            assert!(report.passed, "law {law} fails on {cs}: {report}");
        }
    }
}

#[test]
fn cancellation_and_group_track_injectivity() {
    for cs in shapes_up_to(6) {
        let injective = cs.trajectory().tail() == 0;
        assert_eq!(
            arith::check_law(&cs, LawId::Cancellation).unwrap().passed,
            injective,
            "system {cs}"
        );
        assert_eq!(
            arith::check_law(&cs, LawId::Group).unwrap().passed,
            injective,
            "system {cs}"
        );
    }
}
