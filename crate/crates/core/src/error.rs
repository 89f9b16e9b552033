//! Error types shared across the crate.

use thiserror::Error;

/// A ring axiom checked by table validation.
///
/// The variants are ordered the way the validator checks them; the first
/// violated axiom is the one reported.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingAxiom {
    /// `(x + y) + z == x + (y + z)`
    AddAssociative,
    /// `x + y == y + x`
    AddCommutative,
    /// element 0 satisfies `0 + x == x` (the additive identity must sit at index 0)
    ZeroIsAdditiveIdentity,
    /// every `x` has some `y` with `x + y == 0`
    AddInverse,
    /// `(x * y) * z == x * (y * z)`
    MulAssociative,
    /// `x * (y + z) == x * y + x * z`
    LeftDistributive,
    /// `(x + y) * z == x * z + y * z`
    RightDistributive,
    /// `0 * x == 0` and `x * 0 == 0` (a consequence of the others, asserted directly)
    ZeroAnnihilates,
    /// the declared identity `e` satisfies `e * x == x * e == x`
    DeclaredOneIsIdentity,
}

impl std::fmt::Display for RingAxiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            RingAxiom::AddAssociative => "additive associativity",
            RingAxiom::AddCommutative => "additive commutativity",
            RingAxiom::ZeroIsAdditiveIdentity => "additive identity at index 0",
            RingAxiom::AddInverse => "additive inverses",
            RingAxiom::MulAssociative => "multiplicative associativity",
            RingAxiom::LeftDistributive => "left distributivity",
            RingAxiom::RightDistributive => "right distributivity",
            RingAxiom::ZeroAnnihilates => "zero annihilation",
            RingAxiom::DeclaredOneIsIdentity => "declared identity",
        };
        f.write_str(name)
    }
}

/// The side of a homomorphism check that failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomViolation {
    /// `f(0) != 0`
    Zero,
    /// `f(x + y) != f(x) + f(y)`
    Additive,
    /// `f(x * y) != f(x) * f(y)`
    Multiplicative,
}

impl std::fmt::Display for HomViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            HomViolation::Zero => "zero preservation",
            HomViolation::Additive => "additivity",
            HomViolation::Multiplicative => "multiplicativity",
        };
        f.write_str(name)
    }
}

/// Errors raised by ring construction, validation, and the set machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    /// A construction would produce more elements than the active cap allows.
    #[error("requested ring has {requested} elements, above the cap of {cap}")]
    CapExceeded { requested: usize, cap: usize },

    /// A constructor argument is outside its contract (order 0, scale out of
    /// range, non-divisor, ...).
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Supplied tables are the wrong shape, contain out-of-range entries, or
    /// carry duplicate labels.
    #[error("malformed table: {0}")]
    MalformedTable(String),

    /// Exhaustive validation found a broken axiom; `witness` holds the
    /// elements (one to three of them) at which it fails.
    #[error("ring axiom violated: {axiom} fails at witness {witness:?}")]
    AxiomViolation {
        axiom: RingAxiom,
        witness: Vec<usize>,
    },

    /// An element index does not name an element of the ring.
    #[error("element index {index} out of range for a ring of order {order}")]
    ElementOutOfRange { index: usize, order: usize },

    /// An operation that requires a nonempty subset received the empty set.
    #[error("subset is empty; a nonempty subset is required")]
    EmptySubset,

    /// A subset was used where a two-sided ideal is required.
    #[error("subset {0} is not a two-sided ideal")]
    NotAnIdeal(String),

    /// A subset was used where a subring is required.
    #[error("subset {0} is not a subring")]
    NotASubring(String),

    /// A homomorphism map has the wrong length or targets out-of-range
    /// elements.
    #[error("malformed homomorphism: {0}")]
    MalformedHom(String),

    /// Exhaustive homomorphism validation failed at the pair `(x, y)`.
    #[error("not a ring homomorphism: {violation} fails at ({x}, {y})")]
    HomViolation {
        violation: HomViolation,
        x: usize,
        y: usize,
    },

    /// A homomorphism must pass `validate` before image or push-forward use.
    #[error("homomorphism has not been validated")]
    HomNotValidated,

    /// JSON (de)serialization of a ring file failed.
    #[error("ring file error: {0}")]
    RingFile(String),

    /// An I/O failure while reading or writing catalog / ring files.
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for RingError {
    fn from(err: std::io::Error) -> Self {
        RingError::Io(err.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axiom_violation_message_names_axiom_and_witness() {
        let err = RingError::AxiomViolation {
            axiom: RingAxiom::LeftDistributive,
            witness: vec![1, 2, 3],
        };
        assert_eq!(
            err.to_string(),
            "ring axiom violated: left distributivity fails at witness [1, 2, 3]"
        );
    }

    #[test]
    fn cap_error_reports_both_sizes() {
        let err = RingError::CapExceeded {
            requested: 5000,
            cap: 4096,
        };
        assert!(err.to_string().contains("5000"));
        assert!(err.to_string().contains("4096"));
    }
}
