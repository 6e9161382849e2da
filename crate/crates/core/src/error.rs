use alloc::string::String;
use alloc::vec::Vec;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid series type g^{r}_{d} on genus {genus}: need r <= d")]
    InvalidSeriesType { genus: u32, r: u32, d: u32 },

    #[error("invalid vanishing sequence {entries:?} for degree {degree}: {reason}")]
    InvalidVanishing { entries: Vec<u32>, degree: u32, reason: &'static str },

    #[error("invalid ramification sequence {entries:?} for degree {degree}: {reason}")]
    InvalidRamification { entries: Vec<u32>, degree: u32, reason: &'static str },

    #[error("sequence of type (r={found_r}, d={found_d}) where (r={r}, d={d}) was expected")]
    BoundMismatch { r: u32, d: u32, found_r: u32, found_d: u32 },

    #[error("g^{r}_{d} on genus {genus} has no residual series")]
    NoResidual { genus: u32, r: u32, d: u32 },

    #[error("partition {parts:?} does not fit in a {rows}x{cols} rectangle")]
    PartitionOutsideRect { parts: Vec<u32>, rows: u32, cols: u32 },

    #[error("cohomology classes live in different Grassmannians")]
    RectMismatch,

    #[error("integer overflow in a cohomology coefficient")]
    CoefficientOverflow,

    #[error("genus {genus} is not supported here: {reason}")]
    InvalidGenus { genus: u32, reason: &'static str },

    #[error("Brill-Noether number is {rho}, a divisorial locus needs -1")]
    NotDivisorial { rho: i64 },

    #[error("boundary coefficient of delta_{index} is negative ({value})")]
    NegativeBoundary { index: usize, value: String },

    #[error("no pencil of plane curves of degree {d}: nodes f={f}, base points b={b}")]
    InfeasiblePencil { d: u32, f: i64, b: i64 },

    #[error("no slope formula for {k}-gonal families")]
    UnsupportedGonality { k: u32 },

    #[error("invalid curve: {0}")]
    InvalidCurve(String),

    #[error("invalid aspect assignment: {0}")]
    InvalidAssignment(String),

    #[error("search space of {candidates} candidates exceeds the limit {limit}")]
    SearchTooLarge { candidates: u128, limit: u64 },
}
