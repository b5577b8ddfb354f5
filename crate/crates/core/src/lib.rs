//! An executable model of finite counting systems.
//!
//! A counting system is a triple (carrier, self-map, base point). This crate
//! analyzes any finite instance: the rho shape of the base point's orbit,
//! the canonical assignment of a carrier element to every finite set, the
//! structure theory of minimal systems (end-points, segments), the
//! generalized arithmetic (addition, multiplication, exponentiation) these
//! systems carry, and the monoid of iterated self-maps. Every structural
//! claim is backed by brute-force verification at small scale in
//! [`oracle`] and [`verify`].

pub mod arith;
pub mod counting;
pub mod error;
pub mod finset;
pub mod fixtures;
pub mod minimal;
pub mod monoid;
pub mod natmodel;
pub mod oracle;
pub mod verify;

pub use counting::{CountingSystem, Coordinate, Trajectory};
pub use error::{Error, Result};
pub use finset::{make_set, Atom, AtomId, FiniteSet, MapFlags, MapTable};
