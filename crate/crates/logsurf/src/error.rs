use std::fmt;

/// Domain and input errors. Variant names are stable and surface verbatim
/// on the CLI diagnostic stream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A value lies outside the documented domain of an operation.
    OutOfRange(String),
    /// Coefficient is not in the extended standard set.
    NotInMm(String),
    /// Cyclic quotient data with gcd(q, m) > 1.
    NotCoprime { m: u64, q: u64 },
    /// A chain entry, multiplicity or similar integer is invalid.
    BadEntry(String),
    /// Blowup or group weights violate their constraints.
    BadWeights(String),
    /// Positional access past the end of a weight or coefficient list.
    IndexOutOfRange { index: usize, len: usize },
    /// A group element acts as a quasi-reflection, so the quotient is not
    /// singular along a divisor and the canonicity test does not apply.
    QuasiReflection { element: u64 },
    /// The intersection matrix is not negative definite.
    NotContractible,
    /// An operation requiring smooth components met a node or cusp marker.
    SingularComponent(String),
    /// The configuration is not connected.
    NotConnected,
    /// Classification produced no type tag where one is required.
    Unclassified,
    /// The graph is not a three-armed fork of the exceptional kind.
    NotForkType,
    /// Adjunction output exceeds 1.
    OverUnit(String),
    /// A boundary point was placed on a node of the curve model.
    BoundaryOnNode(String),
    /// A referenced component id does not exist.
    UnknownComponent(String),
    /// A search exhausted its cap without succeeding.
    CapExceeded { cap: u64 },
    /// No complement of any index exists (degree obstruction).
    NoComplement(String),
    /// The boundary is not ample-range (total degree too big).
    NotAmple(String),
    /// Total degree exceeds the anticanonical degree strictly.
    OverDegree(String),
    /// A coefficient at or above 1 where a klt pair is required.
    NotKlt(String),
    /// No reduced member of the monomial family exists.
    NoReducedCurve(String),
    /// A threshold below the range covered by the table.
    BelowRange(String),
    /// Unknown case label for the two-boundary inequality table.
    BadCase(String),
    /// The configuration is not a degenerate elliptic fiber.
    NotElliptic(String),
    /// The fiber type cannot occur with multiplicity > 1.
    MultipleForbidden(String),
    /// The multiple-fiber tuple admits no solution.
    Infeasible(String),
    /// Fano index is not greater than 1.
    IndexNotBig(String),
    /// Malformed textual input. `line` is 1-based; 0 means no file position.
    Parse { line: usize, msg: String },
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn name(&self) -> &'static str {
        use Error::*;
        match self {
            OutOfRange(_) => "OutOfRange",
            NotInMm(_) => "NotInMm",
            NotCoprime { .. } => "NotCoprime",
            BadEntry(_) => "BadEntry",
            BadWeights(_) => "BadWeights",
            IndexOutOfRange { .. } => "IndexOutOfRange",
            QuasiReflection { .. } => "QuasiReflection",
            NotContractible => "NotContractible",
            SingularComponent(_) => "SingularComponent",
            NotConnected => "NotConnected",
            Unclassified => "Unclassified",
            NotForkType => "NotForkType",
            OverUnit(_) => "OverUnit",
            BoundaryOnNode(_) => "BoundaryOnNode",
            UnknownComponent(_) => "UnknownComponent",
            CapExceeded { .. } => "CapExceeded",
            NoComplement(_) => "NoComplement",
            NotAmple(_) => "NotAmple",
            OverDegree(_) => "OverDegree",
            NotKlt(_) => "NotKlt",
            NoReducedCurve(_) => "NoReducedCurve",
            BelowRange(_) => "BelowRange",
            BadCase(_) => "BadCase",
            NotElliptic(_) => "NotElliptic",
            MultipleForbidden(_) => "MultipleForbidden",
            Infeasible(_) => "Infeasible",
            IndexNotBig(_) => "IndexNotBig",
            Parse { .. } => "ParseError",
        }
    }

    /// Parse errors get a distinct process exit status on the CLI.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse { .. })
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Error::*;
        match self {
            OutOfRange(m) | NotInMm(m) | BadEntry(m) | BadWeights(m) | SingularComponent(m)
            | OverUnit(m) | BoundaryOnNode(m) | UnknownComponent(m) | NoComplement(m)
            | NotAmple(m) | OverDegree(m) | NotKlt(m) | NoReducedCurve(m) | BelowRange(m)
            | BadCase(m) | NotElliptic(m) | MultipleForbidden(m) | Infeasible(m)
            | IndexNotBig(m) => write!(f, "{}: {}", self.name(), m),
            NotCoprime { m, q } => write!(f, "NotCoprime: gcd({}, {}) > 1", q, m),
            IndexOutOfRange { index, len } => {
                write!(f, "IndexOutOfRange: index {} with {} entries", index, len)
            }
            QuasiReflection { element } => {
                write!(f, "QuasiReflection: group element {} fixes a divisor", element)
            }
            CapExceeded { cap } => write!(f, "CapExceeded: no success up to the cap {}", cap),
            NotContractible => write!(f, "NotContractible: intersection matrix is not negative definite"),
            NotConnected => write!(f, "NotConnected: configuration is not connected"),
            Unclassified => write!(f, "Unclassified: no type tag recognized"),
            NotForkType => write!(f, "NotForkType: graph is not an exceptional three-armed fork"),
            Parse { line: 0, msg } => write!(f, "ParseError: {}", msg),
            Parse { line, msg } => write!(f, "ParseError: line {}: {}", line, msg),
        }
    }
}

impl std::error::Error for Error {}
