//! Tolerances and caps used across the solver, collected in one place.

/// Two delays closer than this are treated as the same delay.
pub const DELAY_MERGE: f64 = 1e-12;

/// Breakpoint lattice points closer than this are merged.
pub const LATTICE_DEDUP: f64 = 1e-12;

/// Maximum number of breakpoints before the lattice is declared
/// non-terminating (nearly incommensurate delays).
pub const MAX_BREAKPOINTS: usize = 10_000;

/// Allowed mismatch between prescribed initial values and the initial
/// function's derivatives at the initial point. A violation is an error:
/// the problem is then ill posed.
pub const CONSISTENCY: f64 = 1e-9;

/// Allowed jump of derivatives of order below the equation order at
/// internal segment boundaries.
pub const CONTINUITY: f64 = 1e-9;

/// Relative pivot threshold for the global-system elimination.
pub const PIVOT_REL: f64 = 1e-10;

/// Default truncation order of segment series.
pub const DEFAULT_ORDER: usize = 16;

/// Largest truncation order with exact binomial coefficients in `f64`.
///
/// Pascal-triangle entries stay below 2^53 up to about N = 56; we document
/// N <= 40 as the supported envelope and leave headroom beyond it.
pub const MAX_SUPPORTED_ORDER: usize = 40;
