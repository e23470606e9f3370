//! Recurrence specifications and generated sequence tables.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpecError {
    #[error("coefficient list is empty")]
    EmptyCoeffs,
    #[error("leading coefficient c_1 must be positive")]
    LeadingZero,
    #[error("trailing coefficient c_L must be positive")]
    TrailingZero,
    #[error("coefficient c_{index} is negative ({value})")]
    NegativeCoeff { index: usize, value: i64 },
    #[error("order-1 recurrences need c_1 >= 2 (c_1 = 1 gives a constant sequence)")]
    DegenerateOrder1,
    #[error("cannot parse coefficient {0:?}")]
    Unparseable(String),
}

/// Coefficients `(c_1, ..., c_L)` of a positive linear recurrence.
///
/// Valid specs have `L >= 1`, `c_1 > 0`, `c_L > 0`, all `c_i >= 0`, and for
/// `L = 1` additionally `c_1 >= 2` so the sequence actually grows.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RecurrenceSpec {
    coeffs: Vec<u64>,
}

impl RecurrenceSpec {
    /// Validates a coefficient list. This is the only way to build a spec.
    pub fn new(coeffs: &[i64]) -> Result<Self, SpecError> {
        if coeffs.is_empty() {
            return Err(SpecError::EmptyCoeffs);
        }
        if let Some((index, &value)) = coeffs.iter().enumerate().find(|(_, &c)| c < 0) {
            return Err(SpecError::NegativeCoeff {
                index: index + 1,
                value,
            });
        }
        if coeffs[0] == 0 {
            return Err(SpecError::LeadingZero);
        }
        if *coeffs.last().unwrap() == 0 {
            return Err(SpecError::TrailingZero);
        }
        if coeffs.len() == 1 && coeffs[0] == 1 {
            return Err(SpecError::DegenerateOrder1);
        }
        Ok(Self {
            coeffs: coeffs.iter().map(|&c| c as u64).collect(),
        })
    }

    /// The recurrence order L.
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs[i - 1]
    }

    pub fn max_coeff(&self) -> u64 {
        *self.coeffs.iter().max().unwrap()
    }

    /// Largest digit allowed at cascade state `t` (0-based: `t` coefficients
    /// of the prefix already matched). Equal to `c_{t+1}` except in the last
    /// state, where matching `c_L` would complete the forbidden full prefix.
    pub(crate) fn digit_cap(&self, state: usize) -> u64 {
        if state + 1 == self.coeffs.len() {
            self.coeffs[state] - 1
        } else {
            self.coeffs[state]
        }
    }
}

impl FromStr for RecurrenceSpec {
    type Err = SpecError;

    /// Parses the serialized form: a comma-separated coefficient list such
    /// as `"1,1"` or `"2,0,3"`.
    fn from_str(s: &str) -> Result<Self, SpecError> {
        let coeffs = s
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<i64>()
                    .map_err(|_| SpecError::Unparseable(part.trim().to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(&coeffs)
    }
}

impl fmt::Display for RecurrenceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for c in &self.coeffs {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
            first = false;
        }
        Ok(())
    }
}

/// Generated terms `H_1, ..., H_n` of a recurrence. Indices are 1-based.
///
/// Tables are immutable once shared; [`SequenceTable::extended`] returns a
/// longer copy and never disturbs existing entries, and the growing variants
/// only ever append.
#[derive(Debug, Clone)]
pub struct SequenceTable {
    spec: RecurrenceSpec,
    terms: Vec<BigUint>,
}

impl SequenceTable {
    /// Generates `H_1, ..., H_n`.
    pub fn generate(spec: &RecurrenceSpec, n: usize) -> Self {
        assert!(n >= 1, "table length must be at least 1");
        let mut table = Self {
            spec: spec.clone(),
            terms: vec![BigUint::from(1u32)],
        };
        table.grow_to_len(n);
        table
    }

    pub fn spec(&self) -> &RecurrenceSpec {
        &self.spec
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `H_i` (1-based).
    pub fn term(&self, i: usize) -> &BigUint {
        &self.terms[i - 1]
    }

    pub fn terms(&self) -> &[BigUint] {
        &self.terms
    }

    pub fn last(&self) -> &BigUint {
        self.terms.last().unwrap()
    }

    /// Appends terms until the table holds `n` of them.
    pub fn grow_to_len(&mut self, n: usize) {
        let order = self.spec.order();
        while self.terms.len() < n {
            let m = self.terms.len(); // computing H_{m+1}
            let mut next = BigUint::zero();
            if m < order {
                // H_{m+1} = c_1 H_m + ... + c_m H_1 + 1
                for i in 1..=m {
                    next += self.spec.coeff(i) * &self.terms[m - i];
                }
                next += 1u32;
            } else {
                // H_{m+1} = c_1 H_m + ... + c_L H_{m+1-L}
                for i in 1..=order {
                    next += self.spec.coeff(i) * &self.terms[m - i];
                }
            }
            self.terms.push(next);
        }
    }

    /// Appends terms until the last one strictly exceeds `x`, and returns the
    /// largest index `m` with `H_m <= x` (0 when `x < H_1`).
    pub fn grow_to_cover(&mut self, x: &BigUint) -> usize {
        while self.last() <= x {
            let n = self.terms.len() + 1;
            self.grow_to_len(n);
        }
        self.largest_index_leq(x).unwrap_or(0)
    }

    /// A copy of this table extended to `n` terms.
    pub fn extended(&self, n: usize) -> Self {
        let mut copy = self.clone();
        copy.grow_to_len(n);
        copy
    }

    /// Largest index `i` with `H_i <= x`, or `None` when `x < H_1 = 1`.
    /// Binary search; the table is strictly increasing.
    pub fn largest_index_leq(&self, x: &BigUint) -> Option<usize> {
        let count = self.terms.partition_point(|t| t <= x);
        if count == 0 {
            None
        } else {
            Some(count)
        }
    }

    /// CSV export with header `index,term`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("index,term\n");
        for (i, t) in self.terms.iter().enumerate() {
            out.push_str(&format!("{},{}\n", i + 1, t));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(coeffs: &[i64]) -> RecurrenceSpec {
        RecurrenceSpec::new(coeffs).unwrap()
    }

    fn table_u64(spec: &RecurrenceSpec, n: usize) -> Vec<u64> {
        SequenceTable::generate(spec, n)
            .terms()
            .iter()
            .map(|t| u64::try_from(t).unwrap())
            .collect()
    }

    #[test]
    fn validate_accepts_and_rejects() {
        assert_eq!(spec(&[1, 1]).order(), 2);
        assert_eq!(spec(&[10]).order(), 1);
        assert_eq!(RecurrenceSpec::new(&[0, 1]), Err(SpecError::LeadingZero));
        assert_eq!(RecurrenceSpec::new(&[1, 0]), Err(SpecError::TrailingZero));
        assert_eq!(RecurrenceSpec::new(&[]), Err(SpecError::EmptyCoeffs));
        assert_eq!(
            RecurrenceSpec::new(&[2, -1, 3]),
            Err(SpecError::NegativeCoeff { index: 2, value: -1 })
        );
        assert_eq!(RecurrenceSpec::new(&[1]), Err(SpecError::DegenerateOrder1));
    }

    #[test]
    fn parse_round_trips() {
        let s: RecurrenceSpec = "2,0,3".parse().unwrap();
        assert_eq!(s.coeffs(), &[2, 0, 3]);
        assert_eq!(s.to_string(), "2,0,3");
        assert!(" 1 , 1 ".parse::<RecurrenceSpec>().is_ok());
        assert!("1,x".parse::<RecurrenceSpec>().is_err());
        assert!("".parse::<RecurrenceSpec>().is_err());
    }

    #[test]
    fn generates_known_sequences() {
        assert_eq!(table_u64(&spec(&[1, 1]), 6), vec![1, 2, 3, 5, 8, 13]);
        assert_eq!(table_u64(&spec(&[1, 1, 1]), 6), vec![1, 2, 4, 7, 13, 24]);
        assert_eq!(table_u64(&spec(&[10]), 4), vec![1, 10, 100, 1000]);
        assert_eq!(table_u64(&spec(&[2, 0, 1]), 5), vec![1, 3, 7, 15, 33]);
    }

    #[test]
    fn terms_satisfy_defining_clauses() {
        for coeffs in [
            vec![1, 1],
            vec![1, 1, 1],
            vec![10],
            vec![2, 0, 1],
            vec![3, 2],
            vec![1, 0, 0, 0, 1],
        ] {
            let s = spec(&coeffs);
            let table = SequenceTable::generate(&s, 200);
            let order = s.order();
            for m in 1..table.len() {
                // recompute H_{m+1} independently of grow_to_len's loop
                let mut expect = BigUint::zero();
                if m < order {
                    for i in 1..=m {
                        expect += s.coeff(i) * table.term(m + 1 - i);
                    }
                    expect += 1u32;
                } else {
                    for i in 1..=order {
                        expect += s.coeff(i) * table.term(m + 1 - i);
                    }
                }
                assert_eq!(table.term(m + 1), &expect, "clause at m={m} for {s}");
                assert!(table.term(m + 1) > table.term(m), "not increasing at {m}");
            }
        }
    }

    #[test]
    fn largest_index_examples() {
        let fib = SequenceTable::generate(&spec(&[1, 1]), 20);
        assert_eq!(fib.largest_index_leq(&BigUint::from(100u32)), Some(10));
        assert_eq!(fib.largest_index_leq(&BigUint::from(0u32)), None);
        assert_eq!(fib.largest_index_leq(&BigUint::from(8u32)), Some(5));
        assert_eq!(fib.largest_index_leq(&BigUint::from(1u32)), Some(1));
    }

    #[test]
    fn grow_to_cover_reaches_past_target() {
        let s = spec(&[1, 1]);
        let mut t = SequenceTable::generate(&s, 1);
        let m = t.grow_to_cover(&BigUint::from(100u32));
        assert_eq!(m, 10);
        assert!(t.last() > &BigUint::from(100u32));
    }

    #[test]
    fn extended_preserves_prefix() {
        let s = spec(&[2, 0, 1]);
        let t = SequenceTable::generate(&s, 10);
        let u = t.extended(25);
        assert_eq!(u.len(), 25);
        assert_eq!(&u.terms()[..10], t.terms());
    }

    #[test]
    fn csv_export_shape() {
        let t = SequenceTable::generate(&spec(&[10]), 3);
        assert_eq!(t.to_csv(), "index,term\n1,1\n2,10\n3,100\n");
    }
}
