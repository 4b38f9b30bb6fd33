//! Central table of numerical tolerances.
//!
//! Every module pulls its thresholds from here so that the error budget is
//! auditable in one place. The hierarchy is: exact linear algebra (1e-12),
//! validated physics invariants (1e-10 .. 1e-8), solver-limited quantities
//! (1e-8 internal, 1e-6 reported).

/// Max-norm deviation allowed when an operation requires a Hermitian input.
pub const HERMITICITY: f64 = 1e-10;

/// Slack on the smallest eigenvalue when checking positive semidefiniteness.
pub const PSD_SLACK: f64 = 1e-9;

/// Entrywise tolerance for identities that hold exactly in real arithmetic.
pub const EQUALITY: f64 = 1e-12;

/// Trace deviation allowed for a normalized density matrix.
pub const TRACE_NORMALIZED: f64 = 1e-9;

/// Per-setting total-probability tolerance for assemblages.
pub const ASSEMBLAGE_TRACE: f64 = 1e-8;

/// Threshold below which the signaling quantity counts as "no signaling".
///
/// One order of magnitude above linear-algebra noise and well below any
/// physically meaningful signaling value.
pub const NSIT: f64 = 1e-7;

/// Deviation of sum_k K_k^dag K_k from identity allowed for a Kraus set.
pub const KRAUS_TP: f64 = 1e-9;

/// Entrywise unitarity tolerance for constructed gates.
pub const UNITARITY: f64 = 1e-10;

/// Internal duality-gap target for the interior-point solver.
pub const SDP_GAP_INTERNAL: f64 = 1e-8;

/// Reported duality-gap bound for an `Optimal` solve.
pub const SDP_GAP_REPORTED: f64 = 1e-6;

/// Robustness values in [-CLAMP_NEGATIVE, 0) are clamped to zero; anything
/// more negative is a solver failure.
pub const CLAMP_NEGATIVE: f64 = 1e-7;

/// Entrywise tolerance for channel composition identities (Choi matrices).
pub const CHANNEL_COMPOSE: f64 = 1e-10;

/// Agreement required between the RK4 master-equation integrator and the
/// closed-form idle channel.
pub const LINDBLAD_MATCH: f64 = 1e-7;

/// Trace drift at which the RK4 integrator aborts.
pub const INTEGRATION_DRIFT: f64 = 1e-6;
