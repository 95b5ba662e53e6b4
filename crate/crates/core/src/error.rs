use crate::system::ValidationReport;
use crate::vector::IntVector;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("integer overflow in lattice arithmetic")]
    Overflow,

    #[error("2(v.a)/(a.a) = {numerator}/{denominator} is not in {{-1, 0, 1}} for v = {vertex}, a = {root}")]
    NotMinusculeValue { vertex: IntVector, root: IntVector, numerator: i64, denominator: i64 },

    #[error("zero vector where a nonzero root is required")]
    ZeroRoot,

    #[error("simple system is empty")]
    EmptySimpleSystem,

    #[error("duplicate root label `{0}`")]
    DuplicateLabel(String),

    #[error("roots `{0}` and `{1}` share the same vector")]
    DuplicateRoot(String, String),

    #[error("vector of dimension zero")]
    ZeroDimension,

    #[error("vertex set is empty")]
    EmptyPsi,

    #[error("system fails the minuscule axioms ({} violations)", .0.violations.len())]
    Invalid(Box<ValidationReport>),

    #[error("Cartan entry 2({row}.{col})/({row}.{row}) = {numerator}/{denominator} is not an integer")]
    NonIntegerEntry { row: String, col: String, numerator: i64, denominator: i64 },

    #[error("not a generalized Cartan matrix: {0}")]
    GcmViolation(String),

    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),

    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),

    #[error("unknown root label `{0}`")]
    UnknownLabel(String),

    #[error("restriction keeps no roots")]
    EmptyRestriction,

    #[error("no vertex lies on the slice")]
    EmptySlice,

    #[error("no simple root is orthogonal to the slice normal")]
    EmptySimpleSlice,

    #[error("subsystem is not contained in the ambient system")]
    NotSubsets,

    #[error("vector {0} is not a vertex of the system")]
    NotInPsi(IntVector),

    #[error("simple system is not of finite type (got {0})")]
    NotFiniteType(String),

    #[error("simple roots are linearly dependent")]
    DependentSimpleSystem,

    #[error("vector {0} is not a vertex of the Hesse polytope")]
    NotOnPolytope(IntVector),

    #[error("intersection number requested for a vertex with itself")]
    EqualVertices,

    #[error("squared distance {0} is not a positive multiple of 32")]
    NotALineDistance(i64),

    #[error("operation requires a system carved from the Hesse polytope")]
    WrongSystem,

    #[error("malformed system file: {0}")]
    Parse(String),

    #[error("unsupported system file format {0}")]
    UnsupportedFormat(u64),
}
