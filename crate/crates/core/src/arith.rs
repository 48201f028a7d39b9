//! Exact factorials and binomial coefficients.
//!
//! Both tables are process-wide and guarded by `RwLock`s; a value is only
//! inserted once it is fully computed, so readers never see partial state.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision nonnegative integer used for every counting result.
pub type Count = BigUint;

fn factorial_table() -> &'static RwLock<Vec<Count>> {
    static TABLE: OnceLock<RwLock<Vec<Count>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![Count::one()]))
}

fn binomial_table() -> &'static RwLock<HashMap<(u64, u64), Count>> {
    static TABLE: OnceLock<RwLock<HashMap<(u64, u64), Count>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `n!`
pub fn factorial(n: usize) -> Count {
    {
        let table = factorial_table().read().expect("factorial cache poisoned");
        if let Some(v) = table.get(n) {
            return v.clone();
        }
    }
    let mut table = factorial_table().write().expect("factorial cache poisoned");
    while table.len() <= n {
        let i = table.len();
        let next = &table[i - 1] * Count::from(i);
        table.push(next);
    }
    table[n].clone()
}

/// Binomial coefficient with the vanishing convention: `C(a, b) = 0` whenever
/// `a < 0`, `b < 0` or `b > a`.
pub fn binomial(a: i64, b: i64) -> Count {
    if a < 0 || b < 0 || b > a {
        return Count::zero();
    }
    binomial_u(a as u64, b as u64)
}

/// `C(n, k)` for unsigned arguments (zero when `k > n`).
pub fn binomial_u(n: u64, k: u64) -> Count {
    if k > n {
        return Count::zero();
    }
    let k = k.min(n - k);
    if k == 0 {
        return Count::one();
    }
    if k == 1 {
        return Count::from(n);
    }
    {
        let table = binomial_table().read().expect("binomial cache poisoned");
        if let Some(v) = table.get(&(n, k)) {
            return v.clone();
        }
    }
    // multiplicative form; every intermediate quotient is itself a binomial
    let mut acc = Count::one();
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i;
    }
    binomial_table()
        .write()
        .expect("binomial cache poisoned")
        .insert((n, k), acc.clone());
    acc
}

/// `C(n, k)` in machine words, `None` on overflow.
pub fn binomial_u64(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=k as u128 {
        acc = acc.checked_mul(n as u128 - k as u128 + i)? / i;
        if acc > u64::MAX as u128 {
            // later factors never shrink the running binomial
            return None;
        }
    }
    u64::try_from(acc).ok()
}

/// `num / den`, failing loudly if the division is not exact.
pub(crate) fn exact_div(num: &Count, den: &Count, what: &str) -> Result<Count> {
    let (q, r) = num.div_rem(den);
    if !r.is_zero() {
        return Err(Error::Consistency(format!(
            "{what}: {num} is not divisible by {den}"
        )));
    }
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_factorials() {
        let expected = [1u32, 1, 2, 6, 24, 120, 720, 5040];
        for (n, &f) in expected.iter().enumerate() {
            assert_eq!(factorial(n), Count::from(f));
        }
        assert_eq!(factorial(25).to_string(), "15511210043330985984000000");
    }

    #[test]
    fn binomial_conventions() {
        assert_eq!(binomial(5, 2), Count::from(10u32));
        assert_eq!(binomial(5, 6), Count::zero());
        assert_eq!(binomial(-1, 0), Count::zero());
        assert_eq!(binomial(3, -1), Count::zero());
        assert_eq!(binomial(0, 0), Count::one());
    }

    #[test]
    fn binomial_matches_pascal() {
        let mut row = vec![Count::one()];
        for n in 1..=60u64 {
            let mut next = vec![Count::one(); n as usize + 1];
            for k in 1..n as usize {
                next[k] = &row[k - 1] + &row[k];
            }
            row = next;
            for (k, v) in row.iter().enumerate() {
                assert_eq!(&binomial_u(n, k as u64), v, "C({n},{k})");
            }
        }
    }

    #[test]
    fn binomial_u64_overflow() {
        assert_eq!(binomial_u64(8, 3), Some(56));
        assert_eq!(binomial_u64(3, 5), Some(0));
        assert_eq!(binomial_u64(67, 33), Some(14226520737620288370));
        assert_eq!(binomial_u64(68, 34), None);
        assert_eq!(binomial_u64(1000, 1), Some(1000));
    }

    #[test]
    fn exact_div_rejects_remainder() {
        let err = exact_div(&Count::from(7u32), &Count::from(2u32), "test").unwrap_err();
        assert!(matches!(err, Error::Consistency(_)));
    }
}
