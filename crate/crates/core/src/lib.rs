//! Exceptional collections on the Lagrangian Grassmannian `LGr(n, 2n)`.
//!
//! Combinatorics of Young diagrams, Littlewood-Richardson and symplectic
//! character arithmetic, Borel-Bott-Weil engines, Grothendieck group
//! computations, staircase complexes and checkable certificates.

pub mod bbw;
pub mod diagrams;
pub mod error;
pub mod kclass;
pub mod schur;
pub mod staircase;
pub mod verify;

pub use bbw::{CohomCell, GradedModule};
pub use diagrams::{BinaryWord, StairData, Weight, YoungDiagram};
pub use error::{Error, Result};
pub use kclass::KClass;
pub use schur::{Group, VirtualModule};
pub use staircase::{ObjectLabel, StairComplex, StairTerm};
pub use verify::{Certificate, Status};
