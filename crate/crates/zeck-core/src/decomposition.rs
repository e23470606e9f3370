//! Legal digit expansions over a recurrence sequence.
//!
//! A digit string `(a_1, ..., a_m)` (leading digit first, `a_j` multiplying
//! `H_{m+1-j}`) is *legal* when it parses as a sequence of blocks. A block
//! matches the coefficient prefix `(c_1, ..., c_s)` exactly for some
//! `s < L`, then drops below with a digit `< c_{s+1}`; separator zeros may
//! follow before the next block. The string may end mid-match (a dangling
//! proper prefix of the coefficients is fine), but completing the full
//! prefix `(c_1, ..., c_L)` is never allowed. For the Fibonacci spec `(1,1)`
//! this is exactly "binary digits, no two adjacent ones"; for the base-10
//! spec `(10)` it is "digits at most 9".
//!
//! Scanning left to right, one counter — how much of the coefficient prefix
//! the current block has matched — fully determines what each digit may be,
//! so legality is a deterministic pass and the greedy expansion just takes
//! the largest digit the scanner allows at each position.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::recurrence::{RecurrenceSpec, SequenceTable};

/// Interval sizes past this make exhaustive enumeration unreasonable.
pub const ENUMERATION_LIMIT: u64 = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecompositionError {
    #[error("table ends at H_{have}; it must extend strictly past the target value")]
    TableTooShort { have: usize },
    #[error("decomposition uses H_{index} but the table holds {len} terms")]
    IndexOutOfTable { index: usize, len: usize },
    #[error("decomposition was built over a different recurrence spec")]
    SpecMismatch,
    #[error("interval holds {size} integers, over the enumeration limit {limit}")]
    ScaleTooLarge { size: BigUint, limit: u64 },
    #[error("greedy expansion left remainder {remainder}; spec is outside the uniqueness regime")]
    Unrepresentable { remainder: BigUint },
}

/// Tracks how much of the coefficient prefix the current block has matched.
#[derive(Debug, Clone)]
struct CascadeScanner<'a> {
    spec: &'a RecurrenceSpec,
    state: usize,
}

impl<'a> CascadeScanner<'a> {
    fn new(spec: &'a RecurrenceSpec) -> Self {
        Self { spec, state: 0 }
    }

    /// Feeds one digit. Returns false when the digit is illegal here.
    fn step(&mut self, digit: u64) -> bool {
        let c = self.spec.coeff(self.state + 1);
        if digit < c {
            self.state = 0;
            true
        } else if digit == c && self.state + 1 < self.spec.order() {
            self.state += 1;
            true
        } else {
            // digit > c, or digit == c_L completing the forbidden full match
            false
        }
    }

    /// Largest digit acceptable in the current state.
    fn cap(&self) -> u64 {
        self.spec.digit_cap(self.state)
    }
}

/// A legal expansion `N = sum_j a_j H_{m+1-j}`.
///
/// `digits[0]` is the leading digit `a_1` (multiplying `H_m` where
/// `m = top_index`). `N = 0` is represented by the distinguished empty
/// value (`top_index = 0`, no digits) rather than an error, so interval
/// statistics and the signed-representation base case need no special
/// casing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    spec: RecurrenceSpec,
    top_index: usize,
    digits: Vec<u64>,
}

impl Decomposition {
    pub fn empty(spec: RecurrenceSpec) -> Self {
        Self {
            spec,
            top_index: 0,
            digits: Vec::new(),
        }
    }

    pub(crate) fn from_parts(spec: RecurrenceSpec, top_index: usize, digits: Vec<u64>) -> Self {
        debug_assert_eq!(digits.len(), top_index);
        Self {
            spec,
            top_index,
            digits,
        }
    }

    pub fn spec(&self) -> &RecurrenceSpec {
        &self.spec
    }

    /// Index of the highest term used; 0 for the empty decomposition.
    pub fn top_index(&self) -> usize {
        self.top_index
    }

    /// The digit string `(a_1, ..., a_m)`, leading digit first.
    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// Number of summands `k = sum_j a_j`.
    pub fn summand_count(&self) -> u64 {
        self.digits.iter().sum()
    }

    /// Nonzero terms as `(sequence index, digit)`, highest index first.
    pub fn terms(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.digits
            .iter()
            .enumerate()
            .filter(|(_, &d)| d > 0)
            .map(move |(j, &d)| (self.top_index - j, d))
    }

    /// Checks the cascade condition against `spec`.
    pub fn is_legal(&self, spec: &RecurrenceSpec) -> Result<bool, DecompositionError> {
        if &self.spec != spec {
            return Err(DecompositionError::SpecMismatch);
        }
        Ok(is_legal_digits(spec, &self.digits))
    }

    /// Tab-separated export line: `N<TAB>m<TAB>a_1,...,a_m`.
    pub fn export_line(&self, value: &BigUint) -> String {
        let digits = self
            .digits
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(",");
        format!("{value}\t{}\t{digits}", self.top_index)
    }
}

/// Raw legality check on a digit string. The empty string stands for
/// `N = 0` and counts as legal; otherwise the leading digit must be
/// positive and every digit must pass the cascade scanner.
pub fn is_legal_digits(spec: &RecurrenceSpec, digits: &[u64]) -> bool {
    if digits.is_empty() {
        return true;
    }
    if digits[0] == 0 {
        return false;
    }
    let mut scanner = CascadeScanner::new(spec);
    digits.iter().all(|&d| scanner.step(d))
}

/// Greedy legal expansion of `n` over `table`.
///
/// Scans from the largest `H_m <= n` downward, taking at each position the
/// floor quotient capped by what the cascade scanner still allows. The
/// table must extend strictly past `n` (use [`decompose_growing`] to grow
/// it on demand); uniqueness of the result is the theorem the exhaustive
/// oracle in this module's tests checks rather than assumes.
pub fn decompose(
    n: &BigUint,
    table: &SequenceTable,
) -> Result<Decomposition, DecompositionError> {
    let spec = table.spec();
    if n.is_zero() {
        return Ok(Decomposition::empty(spec.clone()));
    }
    if table.last() <= n {
        return Err(DecompositionError::TableTooShort { have: table.len() });
    }
    let m = table
        .largest_index_leq(n)
        .expect("n >= 1 = H_1, so some term is <= n");
    decompose_at(n, table, m)
}

/// Greedy expansion when the top index is already known, i.e.
/// `n` lies in `[H_m, H_{m+1})`. Skips the binary search.
pub(crate) fn decompose_at(
    n: &BigUint,
    table: &SequenceTable,
    m: usize,
) -> Result<Decomposition, DecompositionError> {
    let spec = table.spec();
    let mut scanner = CascadeScanner::new(spec);
    let mut digits = Vec::with_capacity(m);
    let mut rem = n.clone();
    for pos in 0..m {
        let h = table.term(m - pos);
        let cap = scanner.cap();
        let quotient = (&rem / h).to_u64().unwrap_or(u64::MAX);
        let d = quotient.min(cap);
        if d > 0 {
            rem -= h * d;
        }
        let ok = scanner.step(d);
        debug_assert!(ok, "capped digit must be accepted");
        digits.push(d);
    }
    if !rem.is_zero() {
        return Err(DecompositionError::Unrepresentable { remainder: rem });
    }
    Ok(Decomposition::from_parts(spec.clone(), m, digits))
}

/// Like [`decompose`], but extends the table as needed first.
pub fn decompose_growing(
    n: &BigUint,
    table: &mut SequenceTable,
) -> Result<Decomposition, DecompositionError> {
    if !n.is_zero() {
        table.grow_to_cover(n);
    }
    decompose(n, table)
}

/// Evaluates `sum_j a_j H_{m+1-j}` over `table`.
pub fn recompose(
    d: &Decomposition,
    table: &SequenceTable,
) -> Result<BigUint, DecompositionError> {
    if d.spec() != table.spec() {
        return Err(DecompositionError::SpecMismatch);
    }
    if d.top_index > table.len() {
        return Err(DecompositionError::IndexOutOfTable {
            index: d.top_index,
            len: table.len(),
        });
    }
    let mut total = BigUint::zero();
    for (index, digit) in d.terms() {
        total += table.term(index) * digit;
    }
    Ok(total)
}

/// Calls `visit` for every legal digit string with top index exactly `n`,
/// in ascending lexicographic order. Bails out with `ScaleTooLarge` when
/// the interval `[H_n, H_{n+1})` exceeds [`ENUMERATION_LIMIT`].
pub fn enumerate_legal_with<F>(
    spec: &RecurrenceSpec,
    n: usize,
    mut visit: F,
) -> Result<(), DecompositionError>
where
    F: FnMut(&[u64]),
{
    assert!(n >= 1, "top index must be at least 1");
    let table = SequenceTable::generate(spec, n + 1);
    let size = table.term(n + 1) - table.term(n);
    if size > BigUint::from(ENUMERATION_LIMIT) {
        return Err(DecompositionError::ScaleTooLarge {
            size,
            limit: ENUMERATION_LIMIT,
        });
    }

    let mut digits = vec![0u64; n];
    let mut scanner = CascadeScanner::new(spec);

    fn recurse<F: FnMut(&[u64])>(
        scanner: &mut CascadeScanner<'_>,
        digits: &mut [u64],
        pos: usize,
        visit: &mut F,
    ) {
        let n = digits.len();
        let lo = if pos == 0 { 1 } else { 0 };
        let saved = scanner.state;
        for d in lo..=scanner.cap() {
            scanner.state = saved;
            let ok = scanner.step(d);
            debug_assert!(ok);
            digits[pos] = d;
            if pos + 1 == n {
                visit(digits);
            } else {
                recurse(scanner, digits, pos + 1, visit);
            }
        }
        scanner.state = saved;
    }

    recurse(&mut scanner, &mut digits, 0, &mut visit);
    Ok(())
}

/// Every legal digit string with top index exactly `n`, lexicographically
/// ascending. This is the brute-force uniqueness oracle: recomposing the
/// result must walk `[H_n, H_{n+1})` bijectively.
pub fn enumerate_legal(
    spec: &RecurrenceSpec,
    n: usize,
) -> Result<Vec<Decomposition>, DecompositionError> {
    let mut out = Vec::new();
    enumerate_legal_with(spec, n, |digits| {
        out.push(Decomposition::from_parts(spec.clone(), n, digits.to_vec()));
    })?;
    Ok(out)
}
