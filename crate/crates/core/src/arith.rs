//! Generalized arithmetic on a minimal counting system.
//!
//! Addition counts a disjoint union, multiplication counts a product, and
//! exponentiation counts a function space. On a minimal system every element
//! has a canonical coordinate (its orbit position), and the operations reduce
//! to coordinate arithmetic folded back into the orbit:
//!
//! * `add(x, y)`  = element at `normalize(coord(x) + coord(y))`
//! * `mul(x, y)`  = element at `normalize(coord(x) * coord(y))`
//! * `pow(x, n)`  = element at `normalize(coord(x) ^ n)`
//!
//! The set-counting definitions and the representative-independence they
//! require are exercised against [`crate::oracle`] in the test suites; here
//! independence is a tested invariant, not an assumption.
//!
//! Exponents are bounded naturals, not carrier elements: `2 * 2 * 2 = 2` in
//! arithmetic modulo 3, so an exponent living in the carrier would make the
//! power ill-defined. Only the exponentiation ever needs modular reduction
//! of a large number; coordinate sums and products fit in a machine word.

use std::fmt;

use serde_json::json;

use crate::counting::CountingSystem;
use crate::error::{Error, Result};
use crate::natmodel::BoundedNat;
use crate::oracle::CheckReport;

/// Which Cayley table to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Mul,
}

impl fmt::Display for BinOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BinOp::Add => write!(f, "add"),
            BinOp::Mul => write!(f, "mul"),
        }
    }
}

/// Coordinate context for a minimal system: orbit positions of all elements.
struct Ctx<'a> {
    cs: &'a CountingSystem,
    coord: Vec<u64>,
}

impl<'a> Ctx<'a> {
    fn new(cs: &'a CountingSystem) -> Result<Ctx<'a>> {
        if !cs.is_minimal() {
            return Err(Error::RequiresMinimal);
        }
        let mut coord = vec![0u64; cs.carrier_size()];
        for (k, &x) in cs.trajectory().orbit().iter().enumerate() {
            coord[x] = k as u64;
        }
        Ok(Ctx { cs, coord })
    }

    fn check_element(&self, x: usize) -> Result<()> {
        if x >= self.cs.carrier_size() {
            return Err(Error::ElementOutOfRange {
                element: x,
                n: self.cs.carrier_size(),
            });
        }
        Ok(())
    }

    fn add(&self, x: usize, y: usize) -> usize {
        self.cs.iterate(self.coord[x] + self.coord[y])
    }

    fn mul(&self, x: usize, y: usize) -> usize {
        self.cs.iterate(self.coord[x] * self.coord[y])
    }

    /// `coord(x)^n`, folded into the orbit without ever materializing the
    /// power. Bases 0 and 1 are immediate; otherwise exact evaluation is
    /// used while the power still fits below `tail + cycle`, and beyond that
    /// the exponent is reduced inside the cycle.
    fn pow(&self, x: usize, n: u64) -> usize {
        let k = self.coord[x];
        let len = self.cs.trajectory().len() as u64;
        let tail = self.cs.trajectory().tail() as u64;
        let cycle = self.cs.trajectory().cycle() as u64;
        if k <= 1 {
            let value = if k == 1 || n == 0 { 1 } else { 0 };
            return self.cs.iterate(value);
        }
        // Least threshold e with k^e >= len.
        let mut threshold = 0u64;
        let mut power = 1u64;
        while power < len {
            power *= k;
            threshold += 1;
        }
        if n < threshold {
            // Exact: k^n < len, so no reduction happens.
            let mut value = 1u64;
            for _ in 0..n {
                value *= k;
            }
            self.cs.iterate(value)
        } else {
            // k^n >= len lands in the cycle: reduce the power mod the cycle
            // length and shift into the window [tail, tail + cycle).
            let p = mod_pow(k, n, cycle);
            let offset = (p + cycle - tail % cycle) % cycle;
            self.cs.iterate(tail + offset)
        }
    }
}

fn mod_pow(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let m = modulus as u128;
    let mut result = 1u128;
    let mut b = base as u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    result as u64
}

/// Addition: counts the disjoint union of sets counted by `x` and `y`.
pub fn add(cs: &CountingSystem, x: usize, y: usize) -> Result<usize> {
    let ctx = Ctx::new(cs)?;
    ctx.check_element(x)?;
    ctx.check_element(y)?;
    Ok(ctx.add(x, y))
}

/// Multiplication: counts the product of sets counted by `x` and `y`.
pub fn mul(cs: &CountingSystem, x: usize, y: usize) -> Result<usize> {
    let ctx = Ctx::new(cs)?;
    ctx.check_element(x)?;
    ctx.check_element(y)?;
    Ok(ctx.mul(x, y))
}

/// Exponentiation: counts the function space with base counted by `x` and a
/// bounded natural as exponent.
pub fn pow(cs: &CountingSystem, x: usize, exponent: &BoundedNat) -> Result<usize> {
    let ctx = Ctx::new(cs)?;
    ctx.check_element(x)?;
    Ok(ctx.pow(x, exponent.value()))
}

/// The full operation table: entry `(i, j)` is `op(i, j)`.
pub fn cayley_table(cs: &CountingSystem, op: BinOp) -> Result<Vec<Vec<usize>>> {
    let ctx = Ctx::new(cs)?;
    let n = cs.carrier_size();
    Ok((0..n)
        .map(|i| {
            (0..n)
                .map(|j| match op {
                    BinOp::Add => ctx.add(i, j),
                    BinOp::Mul => ctx.mul(i, j),
                })
                .collect()
        })
        .collect())
}

/// Renders a Cayley table as TSV: a header row of element indices, then one
/// row of entries per left operand.
pub fn cayley_table_tsv(cs: &CountingSystem, op: BinOp) -> Result<String> {
    let table = cayley_table(cs, op)?;
    let n = cs.carrier_size();
    let mut out = String::new();
    let header: Vec<String> = (0..n).map(|j| j.to_string()).collect();
    out.push_str(&header.join("\t"));
    out.push('\n');
    for row in table {
        let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&cells.join("\t"));
        out.push('\n');
    }
    Ok(out)
}

/// An algebraic law of the counting arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LawId {
    A0,
    A1,
    M0,
    M1,
    E0,
    E1,
    CommAdd,
    AssocAdd,
    CommMul,
    AssocMul,
    Distributive,
    Trichotomy,
    UnitMul,
    ZeroMul,
    Cancellation,
    Group,
}

impl LawId {
    pub const ALL: [LawId; 16] = [
        LawId::A0,
        LawId::A1,
        LawId::M0,
        LawId::M1,
        LawId::E0,
        LawId::E1,
        LawId::CommAdd,
        LawId::AssocAdd,
        LawId::CommMul,
        LawId::AssocMul,
        LawId::Distributive,
        LawId::Trichotomy,
        LawId::UnitMul,
        LawId::ZeroMul,
        LawId::Cancellation,
        LawId::Group,
    ];

    /// The laws that hold on every minimal system. Cancellation and group
    /// are excluded: they hold exactly when the self-map is injective
    /// (equivalently bijective).
    pub const UNIVERSAL: [LawId; 14] = [
        LawId::A0,
        LawId::A1,
        LawId::M0,
        LawId::M1,
        LawId::E0,
        LawId::E1,
        LawId::CommAdd,
        LawId::AssocAdd,
        LawId::CommMul,
        LawId::AssocMul,
        LawId::Distributive,
        LawId::Trichotomy,
        LawId::UnitMul,
        LawId::ZeroMul,
    ];
}

impl fmt::Display for LawId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            LawId::A0 => "a0",
            LawId::A1 => "a1",
            LawId::M0 => "m0",
            LawId::M1 => "m1",
            LawId::E0 => "e0",
            LawId::E1 => "e1",
            LawId::CommAdd => "comm_add",
            LawId::AssocAdd => "assoc_add",
            LawId::CommMul => "comm_mul",
            LawId::AssocMul => "assoc_mul",
            LawId::Distributive => "distributive",
            LawId::Trichotomy => "trichotomy",
            LawId::UnitMul => "unit_mul",
            LawId::ZeroMul => "zero_mul",
            LawId::Cancellation => "cancellation",
            LawId::Group => "group",
        };
        write!(f, "{name}")
    }
}

/// Exhaustively checks one law over all element tuples of a minimal system.
///
/// For `Cancellation` the report's pass flag equals injectivity of the
/// self-map, and for `Group` it equals bijectivity; on a false instance the
/// report carries a concrete witness tuple.
pub fn check_law(cs: &CountingSystem, law: LawId) -> Result<CheckReport> {
    let ctx = Ctx::new(cs)?;
    let n = cs.carrier_size();
    let x0 = cs.base_point();
    let name = law.to_string();
    let mut checked = 0u64;

    macro_rules! fail {
        ($witness:expr) => {
            return Ok(CheckReport::fail(name, checked, $witness))
        };
    }

    match law {
        LawId::A0 => {
            for x in 0..n {
                checked += 1;
                if ctx.add(x, x0) != x {
                    fail!(json!({"x": x}));
                }
            }
        }
        LawId::A1 => {
            for x in 0..n {
                for y in 0..n {
                    checked += 1;
                    if ctx.add(x, cs.step(y)) != cs.step(ctx.add(x, y)) {
                        fail!(json!({"x": x, "x'": y}));
                    }
                }
            }
        }
        LawId::M0 => {
            for x in 0..n {
                checked += 1;
                if ctx.mul(x, x0) != x0 {
                    fail!(json!({"x": x}));
                }
            }
        }
        LawId::M1 => {
            for x in 0..n {
                for y in 0..n {
                    checked += 1;
                    if ctx.mul(x, cs.step(y)) != ctx.add(x, ctx.mul(x, y)) {
                        fail!(json!({"x": x, "x'": y}));
                    }
                }
            }
        }
        LawId::E0 => {
            let unit = cs.iterate(1);
            for x in 0..n {
                checked += 1;
                if ctx.pow(x, 0) != unit {
                    fail!(json!({"x": x}));
                }
            }
        }
        LawId::E1 => {
            let max_exp = 2 * cs.trajectory().len() as u64 + 2;
            for x in 0..n {
                for e in 0..=max_exp {
                    checked += 1;
                    if ctx.pow(x, e + 1) != ctx.mul(x, ctx.pow(x, e)) {
                        fail!(json!({"x": x, "exponent": e}));
                    }
                }
            }
        }
        LawId::CommAdd => {
            for x in 0..n {
                for y in 0..n {
                    checked += 1;
                    if ctx.add(x, y) != ctx.add(y, x) {
                        fail!(json!({"x": x, "y": y}));
                    }
                }
            }
        }
        LawId::AssocAdd => {
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        checked += 1;
                        if ctx.add(ctx.add(x, y), z) != ctx.add(x, ctx.add(y, z)) {
                            fail!(json!({"x": x, "y": y, "z": z}));
                        }
                    }
                }
            }
        }
        LawId::CommMul => {
            for x in 0..n {
                for y in 0..n {
                    checked += 1;
                    if ctx.mul(x, y) != ctx.mul(y, x) {
                        fail!(json!({"x": x, "y": y}));
                    }
                }
            }
        }
        LawId::AssocMul => {
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        checked += 1;
                        if ctx.mul(ctx.mul(x, y), z) != ctx.mul(x, ctx.mul(y, z)) {
                            fail!(json!({"x": x, "y": y, "z": z}));
                        }
                    }
                }
            }
        }
        LawId::Distributive => {
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        checked += 1;
                        if ctx.mul(x, ctx.add(y, z)) != ctx.add(ctx.mul(x, y), ctx.mul(x, z)) {
                            fail!(json!({"x": x, "y": y, "z": z}));
                        }
                    }
                }
            }
        }
        LawId::Trichotomy => {
            for x1 in 0..n {
                for x2 in 0..n {
                    checked += 1;
                    let found =
                        (0..n).any(|x| x1 == ctx.add(x2, x) || x2 == ctx.add(x1, x));
                    if !found {
                        fail!(json!({"x1": x1, "x2": x2}));
                    }
                }
            }
        }
        LawId::UnitMul => {
            let unit = cs.iterate(1);
            for x in 0..n {
                checked += 1;
                if ctx.mul(x, unit) != x || ctx.mul(unit, x) != x {
                    fail!(json!({"x": x, "unit": unit}));
                }
            }
        }
        LawId::ZeroMul => {
            for x in 0..n {
                checked += 1;
                if ctx.mul(x, x0) != x0 || ctx.mul(x0, x) != x0 {
                    fail!(json!({"x": x}));
                }
            }
        }
        LawId::Cancellation => {
            for x1 in 0..n {
                for x2 in 0..n {
                    for x in 0..n {
                        checked += 1;
                        if x1 != x2 && ctx.add(x1, x) == ctx.add(x2, x) {
                            fail!(json!({
                                "x1": x1,
                                "x2": x2,
                                "x": x,
                                "sum": ctx.add(x1, x),
                            }));
                        }
                    }
                }
            }
        }
        LawId::Group => {
            for x in 0..n {
                checked += 1;
                let inverse = (0..n).find(|&y| ctx.add(x, y) == x0);
                if inverse.is_none() {
                    fail!(json!({"x": x}));
                }
            }
        }
    }
    Ok(CheckReport::pass(name, checked))
}
