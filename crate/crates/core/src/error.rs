//! Error type shared by all modules of the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two objects of different ambient dimension were combined.
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    /// A box set violates the staircase closure condition.
    #[error("box set is not staircase-closed: predecessor of {coord} along axis {axis} is missing")]
    NotStaircaseClosed { coord: String, axis: usize },

    /// A partition was not weakly decreasing.
    #[error("invalid partition: {reason}")]
    InvalidPartition { reason: String },

    /// `thicken` was handed a box that is not an inner corner.
    #[error("{coord} is not an inner corner of the diagram")]
    NotAnInnerCorner { coord: String },

    /// The ideal has infinitely many standard monomials in the codimension
    /// variables (some variable has no pure power among the generators).
    #[error("ideal is not cofinite: no pure power of {variable} among the generators")]
    NotCofinite { variable: String },

    /// A generator involves a support variable, so the ideal does not come
    /// from a diagram in the codimension variables.
    #[error("generator {generator} involves a support variable")]
    SupportVariableInGenerator { generator: String },

    /// Two ideals over different variable lists were combined.
    #[error("variable lists differ: {left} vs {right}")]
    VariableMismatch { left: String, right: String },

    #[error("invalid variable list: {reason}")]
    InvalidVariableList { reason: String },

    /// `algebra_multiply` was handed a box outside the diagram.
    #[error("box {coord} is not in the diagram")]
    BoxNotInDiagram { coord: String },

    /// The operation needs at least one box.
    #[error("diagram is empty")]
    EmptyDiagram,

    /// A degree pair fails the staircase admissibility conditions.
    #[error("invalid degree pair: {reason}")]
    InvalidPair { reason: String },

    /// Index range violated (binomial identity check needs i >= j).
    #[error("invalid range: {reason}")]
    InvalidRange { reason: String },

    /// The brute-force enumeration would visit more monomials than allowed.
    #[error("degree-{degree} enumeration needs {needed} monomials, cap is {cap}")]
    ResourceLimit { degree: u32, needed: u64, cap: u64 },

    /// The extra interpolation point does not lie on the fitted polynomial,
    /// usually because the start degree is below the stabilization degree.
    #[error("degree table value at d={degree} is inconsistent with the interpolated polynomial")]
    InconsistentValues { degree: usize },

    /// Text input could not be parsed.
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("unknown variable: {name}")]
    UnknownVariable { name: String },
}
