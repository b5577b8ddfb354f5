//! The commutative monoid of iterated self-maps.
//!
//! Counting a set with every possible starting element at once packages the
//! count into a single map: the `|A|`-fold composition of the self-map. The
//! distinct powers of the self-map form a commutative monoid under
//! composition, and on a minimal system evaluation at the base point is a
//! bijection onto the carrier. Pushing composition through that bijection
//! rebuilds the addition of [`crate::arith`] a second, independent way, and
//! iterating one power by another rebuilds the multiplication. The test
//! suites check that both constructions produce identical tables.

use std::collections::HashSet;
use std::fmt;

use serde_json::json;

use crate::counting::CountingSystem;
use crate::error::{Error, Result};
use crate::oracle::CheckReport;

/// A power of the self-map: the full table of `f^k` plus the canonical
/// exponent.
///
/// Equality is extensional: two powers are equal exactly when their tables
/// agree pointwise. The exponent (and the index/period pair that
/// canonicalizes it) is a cached annotation, never part of the value.
#[derive(Debug, Clone)]
pub struct PowerMap {
    exponent: u64,
    index: u64,
    period: u64,
    table: Vec<usize>,
}

impl PartialEq for PowerMap {
    fn eq(&self, other: &Self) -> bool {
        self.table == other.table
    }
}

impl Eq for PowerMap {}

impl PowerMap {
    /// The canonical exponent: the least `k` with `f^k` equal to this map.
    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn carrier_size(&self) -> usize {
        self.table.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }
}

impl fmt::Display for PowerMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f^{}: {:?}", self.exponent, self.table)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// The index and period of a self-map under composition: the least `(i, p)`
/// such that `f^a = f^b` whenever `a, b >= i` and `a = b (mod p)`. The index
/// is the largest distance of any element from its cycle; the period is the
/// least common multiple of all cycle lengths.
pub fn map_index_period(table: &[usize]) -> (u64, u64) {
    let n = table.len();
    // -1 unvisited, otherwise the distance of the node from its cycle.
    let mut tail = vec![usize::MAX; n];
    let mut period = 1u64;
    let mut index = 0u64;
    let mut on_path = vec![false; n];
    for start in 0..n {
        if tail[start] != usize::MAX {
            continue;
        }
        let mut path = Vec::new();
        let mut x = start;
        while tail[x] == usize::MAX && !on_path[x] {
            on_path[x] = true;
            path.push(x);
            x = table[x];
        }
        if on_path[x] && tail[x] == usize::MAX {
            // Found a new cycle starting at x.
            let cycle_start = path.iter().position(|&y| y == x).unwrap();
            let cycle_len = (path.len() - cycle_start) as u64;
            period = lcm(period, cycle_len);
            for &y in &path[cycle_start..] {
                tail[y] = 0;
            }
            for (d, &y) in path[..cycle_start].iter().rev().enumerate() {
                tail[y] = d + 1;
            }
        } else {
            // Ran into an already-resolved node.
            let base = tail[x];
            for (d, &y) in path.iter().rev().enumerate() {
                tail[y] = base + d + 1;
            }
        }
        for &y in &path {
            on_path[y] = false;
            index = index.max(tail[y] as u64);
        }
    }
    (index, period)
}

fn canonical_exponent(e: u64, index: u64, period: u64) -> u64 {
    if e < index {
        e
    } else {
        index + (e - index) % period
    }
}

/// The k-fold composition of the system's self-map, for any `k`.
///
/// Large exponents are reduced to the canonical representative before the
/// table is built, which is sound because powers of a self-map repeat with
/// the index/period of [`map_index_period`].
pub fn f_power(cs: &CountingSystem, k: u64) -> PowerMap {
    let (index, period) = map_index_period(cs.map());
    let exponent = canonical_exponent(k, index, period);
    let n = cs.carrier_size();
    let mut table: Vec<usize> = (0..n).collect();
    for _ in 0..exponent {
        for entry in table.iter_mut() {
            *entry = cs.step(*entry);
        }
    }
    PowerMap {
        exponent,
        index,
        period,
        table,
    }
}

fn require_minimal(cs: &CountingSystem) -> Result<()> {
    if cs.is_minimal() {
        Ok(())
    } else {
        Err(Error::RequiresMinimal)
    }
}

fn check_carrier(cs: &CountingSystem, u: &PowerMap) -> Result<()> {
    if u.carrier_size() != cs.carrier_size() {
        return Err(Error::CarrierMismatch {
            left: u.carrier_size(),
            right: cs.carrier_size(),
        });
    }
    Ok(())
}

/// All distinct powers of the self-map, in exponent order, collected by
/// composing until the table repeats. For a minimal system there are exactly
/// `tail + cycle` of them.
pub fn monoid_elements(cs: &CountingSystem) -> Result<Vec<PowerMap>> {
    require_minimal(cs)?;
    let mut elements = Vec::new();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut k = 0u64;
    loop {
        let u = f_power(cs, k);
        if !seen.insert(u.table.clone()) {
            return Ok(elements);
        }
        elements.push(u);
        k += 1;
    }
}

/// Evaluation at the base point. On a minimal system this is a bijection
/// from the monoid onto the carrier.
pub fn phi(cs: &CountingSystem, u: &PowerMap) -> Result<usize> {
    require_minimal(cs)?;
    check_carrier(cs, u)?;
    Ok(u.apply(cs.base_point()))
}

/// Composition of two powers over the same carrier; the result is again a
/// power.
pub fn compose(u: &PowerMap, v: &PowerMap) -> Result<PowerMap> {
    if u.carrier_size() != v.carrier_size() {
        return Err(Error::CarrierMismatch {
            left: u.carrier_size(),
            right: v.carrier_size(),
        });
    }
    let table = v.table.iter().map(|&x| u.table[x]).collect();
    Ok(PowerMap {
        exponent: canonical_exponent(u.exponent + v.exponent, u.index, u.period),
        index: u.index,
        period: u.period,
        table,
    })
}

/// The second binary operation on powers: iterating `u` as many times as
/// `v` counts, i.e. `f^(j*k)` for exponents `j` and `k`. Cross-validated in
/// the test suites against the construction that literally iterates one map
/// by the other's defining set size.
pub fn diamond(cs: &CountingSystem, u: &PowerMap, v: &PowerMap) -> Result<PowerMap> {
    require_minimal(cs)?;
    check_carrier(cs, u)?;
    check_carrier(cs, v)?;
    Ok(f_power(cs, u.exponent * v.exponent))
}

/// Verifies that evaluation at the base point carries composition to the
/// addition and the iterated operation to the multiplication, that the
/// self-map commutes with every power, and that iterating by a fixed power
/// distributes over composition.
pub fn check_monoid_iso(cs: &CountingSystem) -> Result<CheckReport> {
    require_minimal(cs)?;
    let law = "monoid_iso".to_string();
    let elements = monoid_elements(cs)?;
    let f1 = f_power(cs, 1);
    let mut checked = 0u64;

    for u in &elements {
        checked += 1;
        if compose(&f1, u)? != compose(u, &f1)? {
            return Ok(CheckReport::fail(
                law,
                checked,
                json!({"commuting_power": u.to_string()}),
            ));
        }
    }

    for u in &elements {
        for v in &elements {
            checked += 1;
            let lhs_add = phi(cs, &compose(u, v)?)?;
            let rhs_add = crate::arith::add(cs, phi(cs, u)?, phi(cs, v)?)?;
            if lhs_add != rhs_add {
                return Ok(CheckReport::fail(
                    law,
                    checked,
                    json!({"op": "add", "u": u.to_string(), "v": v.to_string()}),
                ));
            }
            let lhs_mul = phi(cs, &diamond(cs, u, v)?)?;
            let rhs_mul = crate::arith::mul(cs, phi(cs, u)?, phi(cs, v)?)?;
            if lhs_mul != rhs_mul {
                return Ok(CheckReport::fail(
                    law,
                    checked,
                    json!({"op": "mul", "u": u.to_string(), "v": v.to_string()}),
                ));
            }
            if diamond(cs, u, v)? != diamond(cs, v, u)? {
                return Ok(CheckReport::fail(
                    law,
                    checked,
                    json!({"op": "diamond_comm", "u": u.to_string(), "v": v.to_string()}),
                ));
            }
        }
    }

    // Iterating by a fixed power is an endomorphism of the composition
    // monoid.
    for w in &elements {
        for u1 in &elements {
            for u2 in &elements {
                checked += 1;
                let lhs = diamond(cs, w, &compose(u1, u2)?)?;
                let rhs = compose(&diamond(cs, w, u1)?, &diamond(cs, w, u2)?)?;
                if lhs != rhs {
                    return Ok(CheckReport::fail(
                        law,
                        checked,
                        json!({
                            "op": "endomorphism",
                            "w": w.to_string(),
                            "u1": u1.to_string(),
                            "u2": u2.to_string(),
                        }),
                    ));
                }
            }
        }
    }
    Ok(CheckReport::pass(law, checked))
}
