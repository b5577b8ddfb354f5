use thiserror::Error;

/// Errors produced by the library.
///
/// Size guards fail loudly rather than silently truncating, and operations
/// that only make sense on minimal systems refuse to run on non-minimal ones.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid atom id {id}: ids must be non-negative")]
    InvalidAtom { id: i64 },

    #[error("atom id {id} too large for product pairing (must be < {stride})")]
    AtomTooLarge { id: u64, stride: u64 },

    #[error("{what} is {size}, which exceeds the limit {limit}")]
    TooLarge {
        what: &'static str,
        size: u64,
        limit: u64,
    },

    #[error("carrier must be non-empty")]
    EmptyCarrier,

    #[error("self-map entry f[{index}] = {value} is out of range for carrier size {n}")]
    EntryOutOfRange { index: usize, value: usize, n: usize },

    #[error("self-map table has {got} entries but the carrier has size {n}")]
    WrongTableLength { got: usize, n: usize },

    #[error("base point {x0} is out of range for carrier size {n}")]
    BaseOutOfRange { x0: usize, n: usize },

    #[error("element {element} is out of range for carrier size {n}")]
    ElementOutOfRange { element: usize, n: usize },

    #[error("element {element} is not reachable from the base point")]
    Unreachable { element: usize },

    #[error("operation requires a minimal counting system")]
    RequiresMinimal,

    #[error("order is not a permutation of the given set")]
    BadOrder,

    #[error("subset system is empty; no minimal member exists")]
    EmptySystem,

    #[error("member {member} is not a subset of the base set")]
    MemberNotInBase { member: String },

    #[error("duplicate member {member} in subset system")]
    DuplicateMember { member: String },

    #[error("a trivial segment (size 1) cannot be restricted")]
    CannotRestrict,

    #[error("segments are not equinumerous: sizes {left} and {right}")]
    NotEquinumerous { left: usize, right: usize },

    #[error("carrier mismatch: sizes {left} and {right}")]
    CarrierMismatch { left: usize, right: usize },

    #[error("system is not a segment: {reason}")]
    NotASegment { reason: String },

    #[error("cap must be at least 1")]
    ZeroCap,

    #[error("value {value} exceeds cap {cap}")]
    AboveCap { value: u64, cap: u64 },

    #[error("overflow: successor of {value} exceeds cap {cap}")]
    Overflow { value: u64, cap: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
