//! A computation engine for finite C-algebras — the equational theory of
//! McCarthy's sequential (left-to-right, short-circuit) three-valued logic —
//! and for the adas that extend them with a halting test.
//!
//! Everything is desk scale and exact: elements of `3^X` are bit-packed
//! vectors, algebras are explicit sorted universes, and the structural
//! results (atom characterisations, atomicity, annihilator closure theory,
//! the if-then-else axioms) are verified by exhaustive or seeded sweeps.

pub mod ada;
pub mod algebra;
pub mod annihilator;
pub mod error;
pub mod format;
pub mod ifthenelse;
pub mod order;
pub mod report;
pub mod term;
pub mod trit;
pub mod vector;

pub use ada::FiniteAda;
pub use algebra::FiniteCAlgebra;
pub use annihilator::ClosedSetFamily;
pub use error::{Error, Result};
pub use order::AtomicityReport;
pub use report::{AxiomCheck, AxiomReport};
pub use term::{Mode, Term};
pub use trit::Trit;
pub use vector::{SetPair, TritVec};
