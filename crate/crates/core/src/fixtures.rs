//! Canonical example systems used throughout the tests and documentation.

use crate::counting::CountingSystem;

/// The one-point system: a single fixed point.
pub fn one() -> CountingSystem {
    CountingSystem::new(1, vec![0], 0).unwrap()
}

/// A pure 3-cycle; its arithmetic is arithmetic modulo 3.
pub fn c3() -> CountingSystem {
    CountingSystem::new(3, vec![1, 2, 0], 0).unwrap()
}

/// A 4-element chain ending in a fixed point (a segment).
pub fn s4() -> CountingSystem {
    CountingSystem::new(4, vec![1, 2, 3, 3], 0).unwrap()
}

/// A rho shape: tail of length 2 into a 3-cycle.
pub fn r5() -> CountingSystem {
    CountingSystem::new(5, vec![1, 2, 3, 4, 2], 0).unwrap()
}

/// A non-minimal system: the base point's orbit is a 3-cycle, leaving the
/// 2-cycle {3, 4} unreachable.
pub fn n5() -> CountingSystem {
    CountingSystem::new(5, vec![1, 2, 0, 4, 3], 0).unwrap()
}
