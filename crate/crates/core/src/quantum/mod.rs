//! Dense complex linear algebra and quantum-information primitives.
//!
//! Everything downstream (assemblages, the SDP solver, the chain simulator)
//! is built on [`ComplexMatrix`]: a dense, square, row-major complex matrix
//! with value semantics. System sizes top out at 8 qubits (256x256), so dense
//! storage is deliberate.

mod cmatrix;
mod density;
mod eigen;

pub use cmatrix::{tensor, ComplexMatrix, C64};
pub use density::{partial_trace, partial_trace_raw, DensityMatrix};
pub use eigen::{hermitian_eigs, min_eigenvalue, trace_distance, trace_norm};
