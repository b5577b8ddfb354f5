//! Well-definedness of the counting arithmetic over whole families of
//! minimal systems, not just the fixtures.

use countsys_core::counting::{canonical_minimal_systems, minimal_systems};
use countsys_core::oracle::{check_counting_law, CountingLaw};

#[test]
fn union_and_product_counting_laws_hold_on_every_shape() {
    for n in 1..=5usize {
        for cs in canonical_minimal_systems(n) {
            for law in [CountingLaw::Beta, CountingLaw::Delta] {
                let report = check_counting_law(&cs, law, 6).unwrap();
                assert!(report.passed, "system {cs}: {report}");
            }
            let report = check_counting_law(&cs, CountingLaw::Exp, 4).unwrap();
            assert!(report.passed, "system {cs}: {report}");
        }
    }
}

#[test]
fn counting_laws_are_labelling_independent() {
    // The same laws on every relabelled minimal system, at a smaller
    // universe to keep the enumeration brisk.
    for n in 1..=4usize {
        for cs in minimal_systems(n) {
            for law in [CountingLaw::Beta, CountingLaw::Delta] {
                let report = check_counting_law(&cs, law, 4).unwrap();
                assert!(report.passed, "system {cs}: {report}");
            }
        }
    }
}
