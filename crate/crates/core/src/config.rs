//! Size guards for the exponential procedures.
//!
//! Exceeding a guard is reported as [`crate::Error::GuardExceeded`] rather
//! than silently grinding; callers that know what they are doing (the CLI
//! honors environment overrides) can pass explicit limits to the `_guarded`
//! variants of the guarded entry points.

/// Brute-force optimum oracles enumerate set partitions (Bell numbers).
pub const ORACLE_MAX_N: usize = 10;

/// Threshold-decision oracle: the color budget prunes the partition tree, so
/// somewhat larger clique-heavy graphs stay tractable.
pub const ORACLE_THRESHOLD_MAX_N: usize = 16;

/// List-coloring oracle backtracks over all list assignments.
pub const LIST_ORACLE_MAX_N: usize = 10;

/// Hitting-set oracle enumerates all subsets of the universe.
pub const HITTING_SET_MAX_UNIVERSE: usize = 20;

/// DomCol exact algorithm works over a 2n-element universe (4^n masks).
pub const EXACT_DOMCOL_MAX_N: usize = 10;

/// CD exact algorithm works over an n-element universe (2^n masks).
pub const EXACT_CDCOL_MAX_N: usize = 16;

/// Polynomial sieve enumerates 2^|J| zeroed-variable subsets.
pub const SIEVE_MAX_J: usize = 24;

/// Default number of independent repetitions of the randomized sieve.
pub const SIEVE_DEFAULT_REPEATS: usize = 3;
