//! Integer triangles: higher-order tangent numbers T(n,k), higher-order
//! secant numbers S(n,k), and Stirling subset numbers {n,k}.
//!
//! T(n,k) is n! times the t^n coefficient of tan^k(t); S(n,k) is n! times
//! the t^n coefficient of sec(t)tan^k(t). Both vanish unless n and k have
//! the same parity (and k is in range); the diagonals are T(n,n) = n! and
//! S(n,n) = n!. Column k=1 of T and column k=0 of S are the classical
//! tangent and Euler (secant) numbers.
//!
//! Triangles are built eagerly by integer recurrences derived from
//! d/dt tan^k = k(tan^(k-1) + tan^(k+1)) and
//! d/dt (sec tan^k) = k sec tan^(k-1) + (k+1) sec tan^(k+1),
//! and are immutable once built. The slower exact power-series route in
//! [`series`] realizes the generating-function definitions directly and
//! serves as an independent oracle for every entry.

mod series;

pub use series::{egf_coefficients, egf_table, EgfFamily, NumbersError, SeriesCoefficients};

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::algebra::ExactInt;

/// Which triangle a [`NumberTriangle`] holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TriangleKind {
    TangentOrderK,
    SecantOrderK,
    StirlingSubset,
}

impl TriangleKind {
    /// Stable lowercase name used in serialized output.
    pub fn name(&self) -> &'static str {
        match self {
            TriangleKind::TangentOrderK => "tangent",
            TriangleKind::SecantOrderK => "secant",
            TriangleKind::StirlingSubset => "stirling_subset",
        }
    }
}

/// A ragged table of nonnegative integers; row n holds entries for
/// k = 0..=n. Entries outside that range read as zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumberTriangle {
    kind: TriangleKind,
    rows: Vec<Vec<ExactInt>>,
}

impl NumberTriangle {
    pub fn kind(&self) -> TriangleKind {
        self.kind
    }

    /// Largest row index stored.
    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    /// Row n as a slice over k = 0..=n.
    pub fn row(&self, n: usize) -> &[ExactInt] {
        &self.rows[n]
    }

    /// Entry (n, k), with out-of-range k reading as zero. Rows beyond
    /// `max_n` are not materialized and panic; extension allocates a new
    /// triangle.
    pub fn value(&self, n: usize, k: usize) -> ExactInt {
        self.rows[n].get(k).cloned().unwrap_or_else(ExactInt::zero)
    }

    fn value_signed(row: &[ExactInt], k: isize) -> ExactInt {
        if k < 0 {
            ExactInt::zero()
        } else {
            row.get(k as usize).cloned().unwrap_or_else(ExactInt::zero)
        }
    }

    /// Total storage of all entries in bytes (magnitude words only); a
    /// cheap proxy for the memory footprint.
    pub fn entry_bytes(&self) -> u64 {
        self.rows
            .iter()
            .flatten()
            .map(|v| (v.bits() + 7) / 8)
            .sum()
    }

    /// JSON form: `{"kind", "max_n", "rows"}` with entries as decimal
    /// strings (they exceed 64-bit range early).
    pub fn to_json(&self) -> Value {
        json!({
            "kind": self.kind.name(),
            "max_n": self.max_n(),
            "rows": self.rows.iter()
                .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }

    /// CSV form with header `n,k,value`; zero entries are suppressed.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,k,value\n");
        for (n, row) in self.rows.iter().enumerate() {
            for (k, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    out.push_str(&format!("{n},{k},{v}\n"));
                }
            }
        }
        out
    }
}

/// All T(n,k) for 0 <= k <= n <= max_n by the derived recurrence
/// T(n+1,k) = k(T(n,k-1) + T(n,k+1)), seeded with T(0,0) = 1 (the series
/// tan^0 = 1) and T(n,0) = 0 for n >= 1.
pub fn build_tangent_triangle(max_n: usize) -> NumberTriangle {
    let mut rows: Vec<Vec<ExactInt>> = Vec::with_capacity(max_n + 1);
    rows.push(vec![ExactInt::one()]);
    for n in 0..max_n {
        let prev = &rows[n];
        let mut row = Vec::with_capacity(n + 2);
        row.push(ExactInt::zero());
        for k in 1..=(n + 1) as isize {
            let sum = NumberTriangle::value_signed(prev, k - 1)
                + NumberTriangle::value_signed(prev, k + 1);
            row.push(sum * ExactInt::from(k));
        }
        rows.push(row);
    }
    NumberTriangle {
        kind: TriangleKind::TangentOrderK,
        rows,
    }
}

/// All S(n,k) by the derived recurrence
/// S(n+1,k) = k S(n,k-1) + (k+1) S(n,k+1), seeded with S(0,0) = 1.
pub fn build_secant_triangle(max_n: usize) -> NumberTriangle {
    let mut rows: Vec<Vec<ExactInt>> = Vec::with_capacity(max_n + 1);
    rows.push(vec![ExactInt::one()]);
    for n in 0..max_n {
        let prev = &rows[n];
        let mut row = Vec::with_capacity(n + 2);
        for k in 0..=(n + 1) as isize {
            let lower = NumberTriangle::value_signed(prev, k - 1) * ExactInt::from(k);
            let upper = NumberTriangle::value_signed(prev, k + 1) * ExactInt::from(k + 1);
            row.push(lower + upper);
        }
        rows.push(row);
    }
    NumberTriangle {
        kind: TriangleKind::SecantOrderK,
        rows,
    }
}

/// Stirling subset numbers {n,k} (set partitions of an n-set into k
/// nonempty blocks) via {n,k} = k{n-1,k} + {n-1,k-1}, {0,0} = 1.
pub fn build_stirling_subset_triangle(max_n: usize) -> NumberTriangle {
    let mut rows: Vec<Vec<ExactInt>> = Vec::with_capacity(max_n + 1);
    rows.push(vec![ExactInt::one()]);
    for n in 1..=max_n {
        let prev = &rows[n - 1];
        let mut row = Vec::with_capacity(n + 1);
        for k in 0..=n as isize {
            let stay = NumberTriangle::value_signed(prev, k) * ExactInt::from(k);
            let grow = NumberTriangle::value_signed(prev, k - 1);
            row.push(stay + grow);
        }
        rows.push(row);
    }
    NumberTriangle {
        kind: TriangleKind::StirlingSubset,
        rows,
    }
}

/// The classical columns as flat sequences: (T(n,1) for n = 0..=max_n,
/// S(n,0) for n = 0..=max_n), the tangent and Euler numbers.
pub fn classical_sequences(max_n: usize) -> (Vec<ExactInt>, Vec<ExactInt>) {
    let tangent = build_tangent_triangle(max_n);
    let secant = build_secant_triangle(max_n);
    let t = (0..=max_n).map(|n| tangent.value(n, 1)).collect();
    let s = (0..=max_n).map(|n| secant.value(n, 0)).collect();
    (t, s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::factorial;

    #[test]
    fn tangent_triangle_known_entries() {
        let t = build_tangent_triangle(7);
        assert_eq!(t.value(0, 0), ExactInt::one());
        assert_eq!(t.value(3, 1), ExactInt::from(2));
        assert_eq!(t.value(2, 1), ExactInt::zero()); // parity: n even, k odd
        assert_eq!(t.value(7, 5), ExactInt::from(8400));
        // out-of-range k reads as zero
        assert_eq!(t.value(3, 7), ExactInt::zero());
    }

    #[test]
    fn secant_triangle_known_entries() {
        let s = build_secant_triangle(6);
        assert_eq!(s.value(0, 0), ExactInt::one());
        assert_eq!(s.value(4, 2), ExactInt::from(28));
        assert_eq!(s.value(6, 0), ExactInt::from(61));
    }

    #[test]
    fn stirling_triangle_known_entries() {
        let st = build_stirling_subset_triangle(6);
        assert_eq!(st.value(0, 0), ExactInt::one());
        assert_eq!(st.value(3, 2), ExactInt::from(3));
        assert_eq!(st.value(4, 2), ExactInt::from(7));
        assert_eq!(st.value(6, 3), ExactInt::from(90));
        assert_eq!(st.value(5, 0), ExactInt::zero());
    }

    #[test]
    fn diagonals_are_factorials() {
        let t = build_tangent_triangle(12);
        let s = build_secant_triangle(12);
        for n in 0..=12 {
            if n >= 1 {
                assert_eq!(t.value(n, n), factorial(n));
            }
            assert_eq!(s.value(n, n), factorial(n));
        }
    }

    #[test]
    fn parity_zero_pattern() {
        let t = build_tangent_triangle(20);
        let s = build_secant_triangle(20);
        for n in 0..=20usize {
            for k in 0..=n {
                if n % 2 != k % 2 || (k == 0 && n >= 1) {
                    assert!(t.value(n, k).is_zero(), "T({n},{k}) should vanish");
                }
                if n % 2 != k % 2 {
                    assert!(s.value(n, k).is_zero(), "S({n},{k}) should vanish");
                }
            }
        }
    }

    #[test]
    fn classical_columns() {
        let (t, s) = classical_sequences(9);
        assert_eq!(t[1], ExactInt::from(1));
        assert_eq!(t[3], ExactInt::from(2));
        assert_eq!(t[5], ExactInt::from(16));
        assert_eq!(t[7], ExactInt::from(272));
        assert_eq!(t[9], ExactInt::from(7936));
        assert_eq!(s[0], ExactInt::from(1));
        assert_eq!(s[2], ExactInt::from(1));
        assert_eq!(s[4], ExactInt::from(5));
        assert_eq!(s[6], ExactInt::from(61));
        assert_eq!(s[8], ExactInt::from(1385));
    }

    #[test]
    fn csv_suppresses_zeros_and_has_header() {
        let t = build_tangent_triangle(7);
        let csv = t.to_csv();
        assert!(csv.starts_with("n,k,value\n"));
        assert!(csv.contains("7,5,8400\n"));
        assert!(!csv.contains("2,1,0"));
    }

    #[test]
    fn json_entries_are_decimal_strings() {
        let t = build_tangent_triangle(3);
        let v = t.to_json();
        assert_eq!(v["kind"], "tangent");
        assert_eq!(v["max_n"], 3);
        assert_eq!(v["rows"][3][3], "6");
    }
}
