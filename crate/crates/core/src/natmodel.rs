//! A bounded model of the natural numbers with successor and zero.
//!
//! The model is honest about its finiteness: values live in `[0, cap]` and
//! taking the successor of `cap` is an explicit error, never a silent wrap.
//! Below the cap the model behaves like the genuine successor structure:
//! the successor is injective and zero is not a successor. All claims that
//! mention "standardness" of this model are scoped to values below the cap.

use serde_json::json;

use crate::counting::CountingSystem;
use crate::error::{Error, Result};
use crate::finset::{bijection_exists, FiniteSet};
use crate::oracle::CheckReport;

/// Default cap for bounded naturals.
pub const DEFAULT_CAP: u64 = 1 << 16;

/// A natural number in `[0, cap]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct BoundedNat {
    value: u64,
    cap: u64,
}

impl BoundedNat {
    pub fn new(value: u64, cap: u64) -> Result<BoundedNat> {
        if cap == 0 {
            return Err(Error::ZeroCap);
        }
        if value > cap {
            return Err(Error::AboveCap { value, cap });
        }
        Ok(BoundedNat { value, cap })
    }

    pub fn with_default_cap(value: u64) -> Result<BoundedNat> {
        BoundedNat::new(value, DEFAULT_CAP)
    }

    pub fn zero(cap: u64) -> Result<BoundedNat> {
        BoundedNat::new(0, cap)
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn cap(&self) -> u64 {
        self.cap
    }

    /// The successor, or a loud overflow error at the cap.
    pub fn successor(&self) -> Result<BoundedNat> {
        if self.value == self.cap {
            return Err(Error::Overflow {
                value: self.value,
                cap: self.cap,
            });
        }
        Ok(BoundedNat {
            value: self.value + 1,
            cap: self.cap,
        })
    }
}

impl std::fmt::Display for BoundedNat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// The canonical finite set of a natural: `{0, 1, ..., n-1}`.
///
/// Satisfies `bracket(0) = {}` and `bracket(n + 1) = bracket(n) + {n}`, and
/// `n` itself never lies in `bracket(n)`.
pub fn bracket(n: &BoundedNat) -> FiniteSet {
    FiniteSet::range(n.value() as usize)
}

/// Evaluates the unique structure-preserving map from the bounded naturals
/// into a target system at `k`: the k-th iterate of the target's base point.
pub fn nat_recursion(target: &CountingSystem, k: &BoundedNat) -> usize {
    target.iterate(k.value())
}

/// The table of the map defined by the recurrence `h(0) = x0`,
/// `h(k + 1) = f(h(k))`, for `k` in `[0, cap]`. The recurrence pins every
/// entry, so any table satisfying it equals this one.
pub fn recursion_table(target: &CountingSystem, cap: u64) -> Vec<usize> {
    let mut table = Vec::with_capacity(cap as usize + 1);
    let mut x = target.base_point();
    table.push(x);
    for _ in 0..cap {
        x = target.step(x);
        table.push(x);
    }
    table
}

/// Verifies that [`nat_recursion`] agrees pointwise with the unique table
/// satisfying the defining recurrence on `[0, cap]`.
pub fn check_recursion(target: &CountingSystem, cap: u64) -> CheckReport {
    let law = format!("recursion(cap={cap})");
    let table = recursion_table(target, cap);
    for (k, &expected) in table.iter().enumerate() {
        let nat = BoundedNat::new(k as u64, cap).expect("k <= cap");
        let got = nat_recursion(target, &nat);
        if got != expected {
            return CheckReport::fail(
                law,
                k as u64 + 1,
                json!({"k": k, "recurrence": expected, "computed": got}),
            );
        }
    }
    CheckReport::pass(law, cap + 1)
}

/// Verifies that within the bounded model equal counts force equinumerosity:
/// the count of a size-k set is k itself, so counts are pairwise distinct
/// across sizes, and size-equal bracket sets admit a bijection (checked by
/// search up to size 8). Also confirms the model is standard below the cap:
/// the successor is injective there and zero is not a successor.
pub fn check_completeness(cap: u64) -> Result<CheckReport> {
    const LIMIT: u64 = 1 << 16;
    if cap > LIMIT {
        return Err(Error::TooLarge {
            what: "completeness cap",
            size: cap,
            limit: LIMIT,
        });
    }
    let law = format!("completeness(cap={cap})");
    let mut checked = 0u64;
    let mut previous_successor: Option<u64> = None;
    for a in 0..=cap {
        checked += 1;
        let n = BoundedNat::new(a, cap)?;
        if bracket(&n).cardinality() as u64 != a {
            return Ok(CheckReport::fail(
                law,
                checked,
                json!({"size": a, "count": bracket(&n).cardinality()}),
            ));
        }
        if a < cap {
            let s = n.successor()?.value();
            if s == 0 || previous_successor == Some(s) {
                return Ok(CheckReport::fail(law, checked, json!({"successor_of": a})));
            }
            previous_successor = Some(s);
        }
    }
    // Counts are the sizes themselves, so equal counts mean equal sizes;
    // exhibit the bijection for small sizes.
    for a in 0..=cap.min(8) {
        checked += 1;
        let b = bracket(&BoundedNat::new(a, cap)?);
        if bijection_exists(&b, &b)?.is_none() {
            return Ok(CheckReport::fail(law, checked, json!({"size": a})));
        }
    }
    Ok(CheckReport::pass(law, checked))
}

/// The bounded successor structure as an explicit counting system: the chain
/// `0 -> 1 -> ... -> cap` with the cap fixed. Faithful to the naturals for
/// every value below the cap.
pub fn successor_system(cap: u64) -> Result<CountingSystem> {
    const LIMIT: u64 = 1 << 16;
    if cap > LIMIT {
        return Err(Error::TooLarge {
            what: "successor system cap",
            size: cap,
            limit: LIMIT,
        });
    }
    let n = cap as usize + 1;
    let mut f: Vec<usize> = (1..n).collect();
    f.push(n - 1);
    CountingSystem::new(n, f, 0)
}
