//! Brute-force ground truth: enumerate every composition of `n` and sum the
//! products of color counts over its parts. Shares nothing with the
//! convolution in [`crate::engine`].

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::bspec::BSpec;
use crate::error::{Error, Result};

/// Default enumeration guard: 2^24 compositions at `n = 25`.
pub const DEFAULT_LIMIT: usize = 25;

pub const LIMIT_ENV: &str = "GENCOMP_ORACLE_LIMIT";

/// An ordered list of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }
}

/// Steps `parts` to the next composition of the same total in descending
/// lexicographic order. Returns `false` after `[1, 1, ..., 1]`.
fn advance(parts: &mut Vec<usize>) -> bool {
    let Some(j) = parts.iter().rposition(|&p| p > 1) else {
        return false;
    };
    let rest: usize = parts.drain(j + 1..).sum();
    parts[j] -= 1;
    parts.push(rest + 1);
    true
}

/// Iterator over all `2^(n-1)` compositions of `n`, largest first part first.
#[derive(Debug, Clone)]
pub struct Compositions {
    current: Option<Vec<usize>>,
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        let parts = self.current.as_mut()?;
        let out = Composition { parts: parts.clone() };
        if !advance(parts) {
            self.current = None;
        }
        Some(out)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Oracle {
    limit: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Self { limit: DEFAULT_LIMIT }
    }
}

impl Oracle {
    pub fn with_limit(limit: usize) -> Self {
        Self { limit }
    }

    /// The default guard, overridden by `GENCOMP_ORACLE_LIMIT` when it holds
    /// a non-negative integer.
    pub fn from_env() -> Self {
        std::env::var(LIMIT_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map_or_else(Self::default, Self::with_limit)
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    fn guard(&self, n: usize) -> Result<()> {
        if n > self.limit {
            Err(Error::LimitExceeded { n, limit: self.limit })
        } else {
            Ok(())
        }
    }

    pub fn enumerate_compositions(&self, n: usize) -> Result<Compositions> {
        assert!(n >= 1, "compositions are enumerated for n >= 1");
        self.guard(n)?;
        Ok(Compositions {
            current: Some(vec![n]),
        })
    }

    /// `c(n, b)` as the sum over compositions of the product of `b_part`.
    pub fn count_colored_compositions(&self, spec: &BSpec, n: usize) -> Result<BigInt> {
        assert!(n >= 1, "c(n, b) is defined for n >= 1");
        self.guard(n)?;
        let b = spec.b_values(n)?;
        let small: Option<Vec<u128>> = b.iter().map(|v| v.to_u128()).collect();

        let mut total = BigInt::zero();
        let mut parts = vec![n];
        loop {
            match &small {
                Some(table) => match checked_product(table, &parts) {
                    Some(p) => total += p,
                    None => total += big_product(&b, &parts),
                },
                None => total += big_product(&b, &parts),
            }
            if !advance(&mut parts) {
                break;
            }
        }
        Ok(total)
    }

    /// `[c(1, b), ..., c(n, b)]` by brute force.
    pub fn count_series(&self, spec: &BSpec, n: usize) -> Result<Vec<BigInt>> {
        self.guard(n)?;
        (1..=n).map(|j| self.count_colored_compositions(spec, j)).collect()
    }
}

fn checked_product(table: &[u128], parts: &[usize]) -> Option<u128> {
    parts
        .iter()
        .try_fold(1u128, |acc, &p| acc.checked_mul(table[p - 1]))
}

fn big_product(b: &[BigInt], parts: &[usize]) -> BigInt {
    let mut acc = BigInt::from(1);
    for &p in parts {
        if b[p - 1].is_zero() {
            return BigInt::zero();
        }
        acc *= &b[p - 1];
    }
    acc
}

pub fn enumerate_compositions(n: usize) -> Result<Compositions> {
    Oracle::default().enumerate_compositions(n)
}

pub fn count_colored_compositions(spec: &BSpec, n: usize) -> Result<BigInt> {
    Oracle::default().count_colored_compositions(spec, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parts(n: usize) -> Vec<Vec<usize>> {
        enumerate_compositions(n)
            .unwrap()
            .map(|c| c.parts().to_vec())
            .collect()
    }

    #[test]
    fn small_listings() {
        assert_eq!(parts(1), vec![vec![1]]);
        assert_eq!(
            parts(3),
            vec![vec![3], vec![2, 1], vec![1, 2], vec![1, 1, 1]]
        );
        assert_eq!(parts(6).len(), 32);
    }

    #[test]
    fn counts_and_uniqueness() {
        for n in 1..=16 {
            let all = parts(n);
            assert_eq!(all.len(), 1 << (n - 1), "n = {n}");
            assert!(all.iter().all(|c| c.iter().sum::<usize>() == n && c.iter().all(|&p| p >= 1)));
            let unique: std::collections::HashSet<_> = all.iter().collect();
            assert_eq!(unique.len(), all.len());
            assert!(all.windows(2).all(|w| w[0] > w[1]), "descending lex order");
        }
    }

    #[test]
    fn guard() {
        let o = Oracle::with_limit(5);
        assert!(matches!(
            o.enumerate_compositions(6),
            Err(Error::LimitExceeded { n: 6, limit: 5 })
        ));
        assert!(o.count_colored_compositions(&BSpec::FloorHalf, 6).is_err());
        assert!(enumerate_compositions(26).is_err());
        assert!(Oracle::with_limit(26).enumerate_compositions(26).is_ok());
    }

    #[test]
    fn colored_counts() {
        let one = BSpec::Constant { p: 1.into() };
        assert_eq!(count_colored_compositions(&one, 5).unwrap(), BigInt::from(16));
        let odd = BSpec::Alternating { p: 1.into(), q: 0.into() };
        assert_eq!(count_colored_compositions(&odd, 4).unwrap(), BigInt::from(3));
        let sq = BSpec::FibSquared { k: 1 };
        assert_eq!(count_colored_compositions(&sq, 4).unwrap(), BigInt::from(22));
        let zero = BSpec::Constant { p: 0.into() };
        assert_eq!(count_colored_compositions(&zero, 4).unwrap(), BigInt::from(0));
    }

    #[test]
    fn standard_compositions() {
        let one = BSpec::Constant { p: 1.into() };
        for n in 1..=16 {
            assert_eq!(
                count_colored_compositions(&one, n).unwrap(),
                BigInt::from(1u64 << (n - 1))
            );
        }
    }

    #[test]
    fn big_product_fallback() {
        // 10^20 colors per part overflows u128 products after two parts
        let huge = BSpec::Constant { p: num_traits::pow(BigInt::from(10), 20) };
        let n = 3;
        let p = num_traits::pow(BigInt::from(10), 20);
        let expected = &p + 2 * &p * &p + &p * &p * &p;
        assert_eq!(count_colored_compositions(&huge, n).unwrap(), expected);
    }

    #[test]
    fn invalid_spec_is_rejected() {
        let bad = BSpec::Exponential { k: (-2).into(), m: 2.into(), p: 1.into() };
        assert!(matches!(
            count_colored_compositions(&bad, 3),
            Err(Error::NegativeB { index: 1, .. })
        ));
    }
}
