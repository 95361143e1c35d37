use alloc::string::String;
use core::fmt;

/// Errors raised by the library. Every operation is pure, so errors only
/// describe invalid input or violated preconditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Ambient dimension outside the supported range.
    UnsupportedDimension { n: usize, min: usize, max: usize },
    /// Support set is empty, has negative coordinates or mixed dimensions.
    InvalidSupport(String),
    /// Generators of a cone or simplex are linearly dependent.
    NotSimplicial,
    /// A cone contains a line.
    NotPointed,
    /// Expansion of a factored product would exceed the degree cap.
    DegreeCap { degree: u64, cap: u64 },
    /// Division by the zero polynomial or a zero denominator.
    DivisionByZero,
    /// The origin lies in the affine span of a face.
    OriginInAffineSpan,
    /// The face is not a V-face.
    NotVFace,
    /// A lattice distance `N` is zero where a positive value is required.
    ZeroLatticeDistance,
    /// The two conormals are parallel (gcd of minors is zero).
    ParallelConormals,
    /// Corner-simplex data gives a non-positive `nu`.
    InvalidFacetOrientation,
    /// A prime was required.
    NotPrime(u64),
    /// A face index or identifier does not exist.
    UnknownFace(usize),
    /// A precondition of an operation does not hold.
    Precondition(&'static str),
    /// An integer does not fit the machine type used for it.
    Overflow,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UnsupportedDimension { n, min, max } => {
                write!(f, "unsupported dimension {n} (supported: {min}..={max})")
            }
            Error::InvalidSupport(msg) => write!(f, "invalid support: {msg}"),
            Error::NotSimplicial => f.write_str("not simplicial"),
            Error::NotPointed => f.write_str("cone is not pointed"),
            Error::DegreeCap { degree, cap } => {
                write!(f, "degree cap: expansion degree {degree} exceeds {cap}")
            }
            Error::DivisionByZero => f.write_str("division by zero"),
            Error::OriginInAffineSpan => f.write_str("origin lies in the affine span of the face"),
            Error::NotVFace => f.write_str("face is not a V-face"),
            Error::ZeroLatticeDistance => f.write_str("lattice distance is zero"),
            Error::ParallelConormals => f.write_str("conormals are parallel"),
            Error::InvalidFacetOrientation => f.write_str("not a valid facet orientation"),
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::UnknownFace(id) => write!(f, "unknown face {id}"),
            Error::Precondition(what) => write!(f, "precondition violated: {what}"),
            Error::Overflow => f.write_str("integer overflow"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
