//! Offline toolkit for quantifying the nonclassicality of qubit-chain state
//! transfer through spatiotemporal steering.
//!
//! The crate simulates an n-qubit transfer chain driven by XY-type two-qubit
//! blocks, carries measurement assemblages through the (ideal or noisy)
//! channel, and quantifies the steerability of what arrives at the receiving
//! qubit by solving the steering-robustness semidefinite programs with a
//! built-in interior-point solver. A signaling estimator, a Lindblad / readout
//! noise model, finite-shot tomography, and a reproducible benchmark sweep
//! runner round out the pipeline.
//!
//! Modules map onto the pipeline stages:
//!
//! * [`quantum`] — dense complex matrices, partial trace, Hermitian
//!   eigendecomposition, trace distance.
//! * [`assemblage`] — the indexed family of subnormalized conditional states,
//!   its marginals, the signaling quantity, and JSON (de)serialization.
//! * [`steering`] — deterministic-strategy enumeration and the primal/dual
//!   robustness SDPs with witness extraction.
//! * [`circuit`] — transfer-chain gates and the ideal transfer channel.
//! * [`noise`] — T1/T2 idle decoherence, bit-flip readout error, and the
//!   noisy transfer pipeline (plus an RK4 master-equation validation path).
//! * [`tomography`] — seeded finite-shot Pauli tomography and reconstruction.
//! * [`bench`] — sweep configuration, records, and CSV/JSON/markdown reports.

pub mod assemblage;
pub mod bench;
pub mod circuit;
pub mod error;
pub mod noise;
pub mod quantum;
pub mod random;
pub mod steering;
pub mod tol;
pub mod tomography;

pub use assemblage::Assemblage;
pub use error::{Error, Result};
pub use quantum::{hermitian_eigs, partial_trace, tensor, trace_distance, ComplexMatrix, DensityMatrix};
pub use steering::{stsr_dual, stsr_primal, SdpReport, SolveStatus};
