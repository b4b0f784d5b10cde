use alloc::string::String;
use core::fmt;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A universe was constructed with no elements.
    EmptyUniverse,
    /// A label appears twice in a universe.
    DuplicateLabel(String),
    /// A label is not part of the universe.
    UnknownLabel(String),
    /// An attribute name is not part of an information table.
    UnknownAttribute(String),
    /// An element index is outside the universe.
    IndexOutOfRange { index: usize, len: usize },
    /// An info-table row does not match the attribute count or universe size.
    RowMismatch { expected: usize, got: usize },
    /// The operation needs an equivalence relation.
    NotAnEquivalence,
    /// Two spaces over different universes were combined.
    UniverseMismatch,
    /// An order or permutation is not a bijection over the universe indices.
    InvalidOrder,
    /// Two count sequences of different length were compared.
    LengthMismatch { left: usize, right: usize },
    /// A sequence fed to granule extraction violates the HPC rules.
    NotAnHpcCount { position: usize },
    /// Full enumeration was requested beyond the configured budget.
    BudgetExceeded { size: usize, budget: usize },
    /// The comparison handed to the semilinearity check is not a preorder.
    NotAPreorder,
    /// A consistency constant below zero.
    NegativeConstant,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyUniverse => write!(f, "universe must be nonempty"),
            Error::DuplicateLabel(l) => write!(f, "duplicate element label: {l}"),
            Error::UnknownLabel(l) => write!(f, "unknown element label: {l}"),
            Error::UnknownAttribute(a) => write!(f, "unknown attribute: {a}"),
            Error::IndexOutOfRange { index, len } => {
                write!(f, "element index {index} out of range for universe of size {len}")
            }
            Error::RowMismatch { expected, got } => {
                write!(f, "row length mismatch: expected {expected}, got {got}")
            }
            Error::NotAnEquivalence => write!(f, "relation is not an equivalence"),
            Error::UniverseMismatch => write!(f, "spaces are over different universes"),
            Error::InvalidOrder => write!(f, "order is not a permutation of the universe"),
            Error::LengthMismatch { left, right } => {
                write!(f, "sequence length mismatch: {left} vs {right}")
            }
            Error::NotAnHpcCount { position } => {
                write!(f, "sequence violates HPC rules at position {position}")
            }
            Error::BudgetExceeded { size, budget } => {
                write!(f, "universe size {size} exceeds enumeration budget {budget}")
            }
            Error::NotAPreorder => write!(f, "comparison is not reflexive and transitive"),
            Error::NegativeConstant => write!(f, "consistency constant must be >= 0"),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
