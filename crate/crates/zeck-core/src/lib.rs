//! Generalized Zeckendorf decompositions over positive linear recurrence
//! sequences, with exact summand-count statistics and signed (far-difference)
//! Fibonacci representations.
//!
//! A positive linear recurrence sequence is defined by nonnegative integer
//! coefficients `(c_1, ..., c_L)` with `c_1, c_L > 0`:
//!
//! ```text
//! H_1 = 1
//! H_{n+1} = c_1 H_n + c_2 H_{n-1} + ... + c_n H_1 + 1    (1 <= n < L)
//! H_{n+1} = c_1 H_n + c_2 H_{n-1} + ... + c_L H_{n+1-L}  (n >= L)
//! ```
//!
//! Every positive integer then has exactly one "legal" digit expansion over
//! the sequence ([`decompose`]), generalizing Zeckendorf's theorem for
//! Fibonacci numbers. The crate counts those expansions exactly by digit sum
//! ([`counting`]), measures how close the summand-count distribution is to a
//! Gaussian ([`stats`]), and handles the signed Fibonacci analogue where
//! summands may enter with either sign ([`fardiff`]).
//!
//! All sequence arithmetic is arbitrary precision; counts and moments are
//! exact until the final float conversion.

pub mod counting;
pub mod decomposition;
pub mod fardiff;
pub mod recurrence;
pub mod spectral;
pub mod stats;
pub mod util;
pub mod verify;

pub use counting::{count_dp, count_dp_series, count_exhaustive, CountTable};
pub use decomposition::{
    decompose, decompose_growing, enumerate_legal, is_legal_digits, recompose, Decomposition,
};
pub use fardiff::{fardiff_decompose, is_valid_fardiff, FarDiffTable, SignedDecomposition};
pub use recurrence::{RecurrenceSpec, SequenceTable};
pub use spectral::{dominant_root, growth_check, CharPoly};
pub use stats::{ks_distance, lekkerkerker_slope, moments, variance_slope, MomentSummary};
