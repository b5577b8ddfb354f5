//! Structure of minimal systems and the segment calculus, cross-checked by
//! exhaustive enumeration.

use countsys_core::counting::{all_systems, minimal_systems, CountingSystem};
use countsys_core::minimal::{end_point, is_segment, Segment};
use countsys_core::verify::{run_suite, Suite, VerifyOptions};

#[test]
fn structure_suite_passes_up_to_five() {
    let opts = VerifyOptions { max_n: 5, cap: 32 };
    for report in run_suite(Suite::Structure, &opts).unwrap() {
        assert!(report.passed, "{report}");
    }
}

#[test]
fn join_is_additive_and_inherits_the_end() {
    for p in 1..=6usize {
        for q in 1..=6usize {
            let s = Segment::of_size(p).unwrap();
            let u = Segment::of_size(q).unwrap();
            let joined = s.join(&u);
            assert_eq!(joined.size(), p + q);
            // Canonical labelling puts the end at the last index.
            assert_eq!(joined.end(), p + q - 1);
            assert_eq!(joined, Segment::of_size(p + q).unwrap());
        }
    }
}

#[test]
fn extend_then_restrict_is_the_identity() {
    for n in 1..=8usize {
        let s = Segment::of_size(n).unwrap();
        assert_eq!(s.extend().restrict().unwrap(), s);
        assert_eq!(s.extend().size(), n + 1);
    }
}

fn all_segments(n: usize) -> Vec<Segment> {
    all_systems(n)
        .filter(|cs| is_segment(cs))
        .map(|cs| Segment::new(cs).unwrap())
        .collect()
}

#[test]
fn segment_morphism_is_the_unique_structure_map() {
    // Brute-force every map between equinumerous segments: exactly one
    // preserves the base point and commutes with the chain maps, it is the
    // one constructed, it is a bijection, and it matches the ends up.
    for n in 1..=4usize {
        let segments = all_segments(n);
        for s in &segments {
            for u in &segments {
                let mut matches: Vec<Vec<usize>> = Vec::new();
                let mut p = vec![0usize; n];
                loop {
                    let preserves = p[s.system().base_point()] == u.system().base_point()
                        && (0..n).all(|x| u.system().step(p[x]) == p[s.system().step(x)]);
                    if preserves {
                        matches.push(p.clone());
                    }
                    let mut pos = n;
                    let mut done = false;
                    loop {
                        if pos == 0 {
                            done = true;
                            break;
                        }
                        pos -= 1;
                        p[pos] += 1;
                        if p[pos] < n {
                            break;
                        }
                        p[pos] = 0;
                    }
                    if done {
                        break;
                    }
                }
                assert_eq!(matches.len(), 1, "{s} -> {u}");

                let constructed = s.morphism_to(u).unwrap();
                let values: Vec<usize> =
                    constructed.values().iter().map(|&v| v as usize).collect();
                assert_eq!(values, matches[0]);
                assert!(constructed.classify().bijective);
                assert_eq!(values[s.end()], u.end());
            }
        }
    }
}

#[test]
fn segment_morphism_agrees_with_the_general_morphism_search() {
    for n in 1..=4usize {
        let segments = all_segments(n);
        for s in &segments {
            for u in &segments {
                let (general, unique) =
                    countsys_core::counting::find_morphism(s.system(), u.system())
                        .unwrap()
                        .expect("equinumerous segments always admit a morphism");
                assert!(unique);
                assert_eq!(general, s.morphism_to(u).unwrap());
            }
        }
    }
}

#[test]
fn modifying_the_end_reaches_every_minimal_system() {
    // Redirecting the end of the canonical segment of size n produces each
    // canonical minimal shape exactly once.
    for n in 1..=6usize {
        let segment = Segment::of_size(n).unwrap();
        let mut produced: Vec<CountingSystem> = (0..n)
            .map(|w| countsys_core::minimal::modify_end(segment.system(), w).unwrap())
            .collect();
        produced.sort_by_key(|cs| cs.map().to_vec());
        let mut canonical = countsys_core::counting::canonical_minimal_systems(n);
        canonical.sort_by_key(|cs| cs.map().to_vec());
        assert_eq!(produced, canonical);
    }
}

#[test]
fn end_point_of_every_minimal_system_is_last_visited() {
    for n in 1..=5usize {
        for cs in minimal_systems(n) {
            let z = end_point(&cs).unwrap();
            let orbit = cs.trajectory().orbit();
            assert_eq!(z, orbit[orbit.len() - 1]);
        }
    }
}
