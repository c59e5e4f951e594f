//! Exact-arithmetic cochain complexes and cohomology for associative, Perm,
//! dendriform, pre-Lie, and Lie algebras presented by structure constants.

#![no_std]

extern crate alloc;

use core::fmt;

pub mod algebra;
pub mod free_perm;
pub mod linalg;
pub mod rng;
pub mod scalar;
pub mod tensor;
#[cfg(test)]
pub(crate) mod testfix;

pub use algebra::{
    induced_total, validate_bimodule, validate_presentation, Actions, BimoduleData, Kind,
    StructurePresentation, Table, Tables, Violation, ViolationReport,
};
pub use free_perm::{
    free_perm_truncated, normalize_monomial, FreePermMonomial, TruncatedFreePerm, Word,
};
pub use linalg::{
    image_basis, kernel_basis, quotient_dim, rref, solve, Echelon, Matrix, SubspaceBasis,
};
pub use scalar::{format_scalar, parse_scalar, Scalar};
pub use tensor::{tensor_assoc_bimodule, tensor_associative, tensor_lie, tensor_lie_module};

/// Errors shared across the crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Vector or table dimensions do not match.
    ShapeMismatch,
    /// The presentation kind does not support the requested operation.
    WrongKind,
    /// A basis or component index is out of range.
    IndexOutOfRange,
    /// A cochain violates the constraints of its complex.
    ConstraintViolation,
    /// A differential left the constrained subspace it must preserve.
    ClosureFailure,
    /// The given cochain is not a cocycle.
    NotACocycle,
    /// The candidate subspaces are not preserved by the differential.
    NotASubcomplex,
    /// A claimed subspace is not contained in its ambient space.
    SubspaceNotContained,
    /// The operation is not implemented for this cochain degree.
    UnsupportedDegree,
    /// A scalar string is not of the form `p` or `p/q`.
    ParseScalar,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            Error::ShapeMismatch => "dimension mismatch",
            Error::WrongKind => "operation not supported for this presentation kind",
            Error::IndexOutOfRange => "index out of range",
            Error::ConstraintViolation => "cochain violates the constraints of its complex",
            Error::ClosureFailure => "differential left its constrained subspace",
            Error::NotACocycle => "cochain is not a cocycle",
            Error::NotASubcomplex => "subspaces are not preserved by the differential",
            Error::SubspaceNotContained => "subspace is not contained in the ambient space",
            Error::UnsupportedDegree => "degree not supported by this operation",
            Error::ParseScalar => "scalar must be written as `p` or `p/q`",
        };
        f.write_str(text)
    }
}
