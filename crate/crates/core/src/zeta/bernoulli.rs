//! Exact Bernoulli numbers (B_1 = -1/2 convention) from the defining
//! recurrence B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j, kept in a global
//! cache: concurrent readers, one writer extends the table on a miss.

use std::sync::{OnceLock, RwLock};

use num_traits::{One, Zero};

use crate::algebra::{ExactInt, Rational};

static CACHE: OnceLock<RwLock<Vec<Rational>>> = OnceLock::new();

fn cache() -> &'static RwLock<Vec<Rational>> {
    CACHE.get_or_init(|| RwLock::new(vec![Rational::one()]))
}

fn extend_to(table: &mut Vec<Rational>, m: usize) {
    while table.len() <= m {
        let next = table.len();
        // C(next+1, j) built incrementally across the inner sum.
        let mut binom = ExactInt::one();
        let mut acc = Rational::zero();
        for (j, b) in table.iter().enumerate() {
            if !b.is_zero() {
                acc += b * Rational::from(binom.clone());
            }
            binom = binom * ExactInt::from(next + 1 - j) / ExactInt::from(j + 1);
        }
        let value = -acc / Rational::from(ExactInt::from(next + 1));
        table.push(value);
    }
}

/// B_m, exactly.
pub fn bernoulli(m: usize) -> Rational {
    if let Some(b) = cache().read().unwrap().get(m) {
        return b.clone();
    }
    let mut table = cache().write().unwrap();
    extend_to(&mut table, m);
    table[m].clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(ExactInt::from(n), ExactInt::from(d))
    }

    #[test]
    fn table_values() {
        assert_eq!(bernoulli(0), rat(1, 1));
        assert_eq!(bernoulli(1), rat(-1, 2));
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(4), rat(-1, 30));
        assert_eq!(bernoulli(6), rat(1, 42));
        assert_eq!(bernoulli(8), rat(-1, 30));
        assert_eq!(bernoulli(10), rat(5, 66));
        assert_eq!(bernoulli(12), rat(-691, 2730));
    }

    #[test]
    fn odd_ones_vanish() {
        for m in (3..=21).step_by(2) {
            assert!(bernoulli(m).is_zero(), "B_{}", m);
        }
    }
}
