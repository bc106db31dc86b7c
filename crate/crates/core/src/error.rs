use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

/// Domain errors. [`Error::name`] gives the bare variant name, which the CLI
/// prints verbatim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    EmptyBases,
    ExchangeAxiomViolation { basis: String, other: String, element: String },
    LoopDetected(String),
    UnknownLabel(String),
    DuplicateLabel(String),
    TooLarge(String),
    InvalidCircuits(String),
    NotABasis,
    ElementInBasis,
    NotAFlat,
    RankMismatch { source: usize, target: usize },
    NotInjective,
    NotBergman,
    DimensionMismatch { expected: usize, got: usize },
    NotNested,
    InvalidFan(String),
    PointNotCovered,
    UnboundedPolyhedron,
    NonMaximalCone,
    NonSmoothCone,
    RowNotBergman(usize),
    NoCommonApartment(usize),
    UnboundedSupport,
    ConeImageNotContained(usize),
    NotAmple,
    NotAWall,
    WrongFan,
    ScaleGuard(usize),
    NotAnExtension,
}

impl Error {
    pub fn name(&self) -> &'static str {
        match self {
            Error::EmptyBases => "EmptyBases",
            Error::ExchangeAxiomViolation { .. } => "ExchangeAxiomViolation",
            Error::LoopDetected(_) => "LoopDetected",
            Error::UnknownLabel(_) => "UnknownLabel",
            Error::DuplicateLabel(_) => "DuplicateLabel",
            Error::TooLarge(_) => "TooLarge",
            Error::InvalidCircuits(_) => "InvalidCircuits",
            Error::NotABasis => "NotABasis",
            Error::ElementInBasis => "ElementInBasis",
            Error::NotAFlat => "NotAFlat",
            Error::RankMismatch { .. } => "RankMismatch",
            Error::NotInjective => "NotInjective",
            Error::NotBergman => "NotBergman",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::NotNested => "NotNested",
            Error::InvalidFan(_) => "InvalidFan",
            Error::PointNotCovered => "PointNotCovered",
            Error::UnboundedPolyhedron => "UnboundedPolyhedron",
            Error::NonMaximalCone => "NonMaximalCone",
            Error::NonSmoothCone => "NonSmoothCone",
            Error::RowNotBergman(_) => "RowNotBergman",
            Error::NoCommonApartment(_) => "NoCommonApartment",
            Error::UnboundedSupport => "UnboundedSupport",
            Error::ConeImageNotContained(_) => "ConeImageNotContained",
            Error::NotAmple => "NotAmple",
            Error::NotAWall => "NotAWall",
            Error::WrongFan => "WrongFan",
            Error::ScaleGuard(_) => "ScaleGuard",
            Error::NotAnExtension => "NotAnExtension",
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ExchangeAxiomViolation { basis, other, element } => {
                write!(f, "ExchangeAxiomViolation: removing {element} from {basis} admits no replacement from {other}")
            }
            Error::LoopDetected(e) => write!(f, "LoopDetected: {e} lies in no basis"),
            Error::UnknownLabel(l) => write!(f, "UnknownLabel: {l}"),
            Error::DuplicateLabel(l) => write!(f, "DuplicateLabel: {l}"),
            Error::TooLarge(why) => write!(f, "TooLarge: {why}"),
            Error::InvalidCircuits(why) => write!(f, "InvalidCircuits: {why}"),
            Error::RankMismatch { source, target } => {
                write!(f, "RankMismatch: source rank {source}, target rank {target}")
            }
            Error::DimensionMismatch { expected, got } => {
                write!(f, "DimensionMismatch: expected length {expected}, got {got}")
            }
            Error::InvalidFan(why) => write!(f, "InvalidFan: {why}"),
            Error::RowNotBergman(r) => write!(f, "RowNotBergman: row {r}"),
            Error::NoCommonApartment(c) => write!(f, "NoCommonApartment: maximal cone {c}"),
            Error::ConeImageNotContained(c) => write!(f, "ConeImageNotContained: source cone {c}"),
            Error::ScaleGuard(m) => write!(f, "ScaleGuard: {m} elements exceeds the sweep limit"),
            other => f.write_str(other.name()),
        }
    }
}

impl core::error::Error for Error {}
