//! Exact-arithmetic calculus for Cohen-Macaulay monomial multiple structures
//! on codimension-two linear subspaces of projective space.
//!
//! A structure is encoded by its Young diagram: the exponent vectors of the
//! standard monomials in the thickening variables. On that encoding the crate
//! computes the generator/ideal dictionary, Hilbert functions and polynomials,
//! minimal free resolutions with the resulting Hilbert-scheme dimension,
//! the Hilbert-function and resolution equivalences, and the flat degeneration
//! of a union of two coplanar structures onto a single support. A brute-force
//! monomial-counting oracle cross-checks all of it.
//!
//! All values are immutable and all arithmetic is exact, so everything here
//! can be shared freely across threads.

pub mod diagram;
pub mod error;
pub mod families;
pub mod hilbert;
pub mod ideal;
pub mod oracle;
pub mod resolution;

pub use diagram::{BoxCoord, DiagonalProfile, Diagram, Partition};
pub use error::{Error, Result};
pub use families::{FamilySetup, FlatnessCheck};
pub use hilbert::{ExactPolynomial, StructureDecomposition};
pub use ideal::{FiltrationLayer, Monomial, MonomialIdeal, VariableList};
pub use oracle::DegreeTable;
pub use resolution::{DegreePair, ReducedPair};
