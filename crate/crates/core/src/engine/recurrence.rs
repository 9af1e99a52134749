use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::bspec::BSpec;
use crate::error::{Error, Result};
use crate::numbers::fib;

/// `c(n) = sum_j coefficients[j-1] * c(n-j)` for `n >= valid_from`, seeded
/// with `c(1..=order)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearRecurrence {
    coefficients: Vec<BigInt>,
    initial_terms: Vec<BigInt>,
    valid_from: usize,
}

impl LinearRecurrence {
    pub fn new(coefficients: Vec<BigInt>, initial_terms: Vec<BigInt>) -> Self {
        let order = coefficients.len();
        assert!((1..=3).contains(&order), "order {order} out of range");
        assert_eq!(initial_terms.len(), order, "one initial term per order");
        Self {
            coefficients,
            initial_terms,
            valid_from: order + 1,
        }
    }

    pub fn order(&self) -> usize {
        self.coefficients.len()
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn initial_terms(&self) -> &[BigInt] {
        &self.initial_terms
    }

    pub fn valid_from(&self) -> usize {
        self.valid_from
    }

    /// `[c(1), ..., c(n)]`.
    pub fn evaluate(&self, n: usize) -> Vec<BigInt> {
        let mut out: Vec<BigInt> = self.initial_terms.iter().take(n).cloned().collect();
        while out.len() < n {
            let len = out.len();
            let next = self
                .coefficients
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(j, c)| c * &out[len - 1 - j])
                .sum();
            out.push(next);
        }
        out
    }
}

fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

fn integral(name: &str, r: BigRational) -> Result<BigInt> {
    if r.is_integer() {
        Ok(r.to_integer())
    } else {
        Err(Error::bad_param(
            name,
            format!("recurrence coefficient {r} is not an integer"),
        ))
    }
}

/// Compiles the family's linear recurrence with its initial terms.
pub fn derive_recurrence(spec: &BSpec) -> Result<LinearRecurrence> {
    let rec = match spec {
        BSpec::Explicit { .. } | BSpec::CatalanSeq => {
            return Err(Error::NoRecurrenceForFamily(spec.family_name()))
        }
        BSpec::Constant { p } => LinearRecurrence::new(vec![p + 1], vec![p.clone()]),
        BSpec::Arithmetic { m, k } => LinearRecurrence::new(
            vec![k + 2, m - k - 1],
            vec![k.clone(), m + k + k * k],
        ),
        BSpec::Quadratic { k, m, p } => {
            let one = BigRational::one();
            let three = BigRational::from_integer(int(3));
            let two = BigRational::from_integer(int(2));
            let coefficients = vec![
                integral("k+m+p+3", k + m + p + &three)?,
                integral("k-m-2p-3", k - m - &two * p - &three)?,
                integral("p+1", p + &one)?,
            ];
            // c(1..3) directly from b_1, b_2, b_3
            let b = |i: i64| {
                let x = BigRational::from_integer(int(i));
                k * &x * &x + m * &x + p
            };
            let (b1, b2, b3) = (b(1), b(2), b(3));
            let initial = vec![
                integral("c(1)", b1.clone())?,
                integral("c(2)", &b2 + &b1 * &b1)?,
                integral("c(3)", &b3 + &two * &b1 * &b2 + &b1 * &b1 * &b1)?,
            ];
            LinearRecurrence::new(coefficients, initial)
        }
        BSpec::Exponential { k, m, p } => {
            let c1 = k + p;
            let c2 = k + p * m + &c1 * &c1;
            LinearRecurrence::new(vec![k + m + p + 1, -(k * m + m + p)], vec![c1, c2])
        }
        BSpec::FloorHalf => LinearRecurrence::new(vec![int(1), int(2), int(-1)], vec![int(0), int(1), int(1)]),
        BSpec::CeilHalf => LinearRecurrence::new(vec![int(2), int(1), int(-1)], vec![int(1), int(2), int(5)]),
        BSpec::HeadTail { p, q } => LinearRecurrence::new(vec![p + 1, q - p], vec![p.clone(), p * p + q]),
        BSpec::TwoPart { p } => LinearRecurrence::new(vec![p.clone(), int(1)], vec![p.clone(), p * p + 1]),
        BSpec::Alternating { p, q } => {
            LinearRecurrence::new(vec![p.clone(), q + 1], vec![p.clone(), p * p + q])
        }
        BSpec::FibIndexed { m, k } => {
            let fm = fib(*m);
            let sign = if (k - 1).rem_euclid(2) == 0 { int(1) } else { int(-1) };
            LinearRecurrence::new(
                vec![&fm + fib(k - 1) + fib(k + 1), sign * (fib(m - k) + 1)],
                vec![fm.clone(), fib(m + k) + &fm * &fm],
            )
        }
        BSpec::FibSquared { k } => {
            let sq = |i: i64| {
                let f = fib(i);
                &f * &f
            };
            let (f0, f1, f2) = (sq(*k), sq(k + 1), sq(k + 2));
            LinearRecurrence::new(
                vec![&f0 + 2, sq(k - 1) * 2 - sq(k - 2) + 2, -(sq(k - 1) + 1i32)],
                vec![
                    f0.clone(),
                    &f1 + &f0 * &f0,
                    &f2 + int(2) * &f0 * &f1 + &f0 * &f0 * &f0,
                ],
            )
        }
    };
    Ok(rec)
}
