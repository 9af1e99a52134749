use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::bspec::BSpec;
use crate::error::{Error, Result};
use crate::numbers::{binomial, catalan, combine_to_integer, fib, QuadraticNumber};

/// A non-recursive formula for `c(n, b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClosedForm {
    /// `c(n) = scale * base^(n - shift)` once `n > initial.len()`; the first
    /// few terms are listed verbatim.
    Power {
        initial: Vec<BigInt>,
        scale: BigInt,
        base: BigInt,
        shift: usize,
    },
    /// `c(n) = F_{slope*n + intercept}`
    FibonacciAlias { slope: i64, intercept: i64 },
    /// `c(n) = sum_{i=0}^{floor(n/2)} C(n-i, i) p^(n-2i)`, the Fibonacci
    /// polynomial `F_{n+1}(p)`.
    FibPolySum { p: BigInt },
    /// `c(n) = u alpha^n + v beta^n` once `n > initial.len()`.
    QuadraticPair {
        initial: Vec<BigInt>,
        u: QuadraticNumber,
        alpha: QuadraticNumber,
        v: QuadraticNumber,
        beta: QuadraticNumber,
    },
    /// `c(n) = C_n`
    Catalan,
}

fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(int(n), int(d))
}

impl ClosedForm {
    pub fn evaluate(&self, n: usize) -> Result<BigInt> {
        if n == 0 {
            return Err(Error::bad_param("n", "closed forms are indexed from 1"));
        }
        match self {
            ClosedForm::Power { initial, scale, base, shift } => Ok(match initial.get(n - 1) {
                Some(v) => v.clone(),
                None => scale * num_traits::pow(base.clone(), n - shift),
            }),
            ClosedForm::FibonacciAlias { slope, intercept } => Ok(fib(slope * n as i64 + intercept)),
            ClosedForm::FibPolySum { p } => {
                let n = n as i64;
                Ok((0..=n / 2)
                    .map(|i| binomial(n - i, i) * num_traits::pow(p.clone(), (n - 2 * i) as usize))
                    .sum())
            }
            ClosedForm::QuadraticPair { initial, u, alpha, v, beta } => match initial.get(n - 1) {
                Some(c) => Ok(c.clone()),
                None => combine_to_integer(&[
                    (u.clone(), alpha.pow(n as u64)),
                    (v.clone(), beta.pow(n as u64)),
                ]),
            },
            ClosedForm::Catalan => Ok(catalan(n)),
        }
    }
}

/// Weights and roots `(u, alpha, v, beta)` with `c(n) = u alpha^n + v beta^n`
/// for `b = (p, q, q, ...)`.
///
/// The roots solve `x^2 - (1+p)x + (p-q) = 0`; the weights are fixed by
/// `c(0) = 1` and `c(1) = p`. Fails when the discriminant `(p-1)^2 + 4q` is
/// zero (a repeated root).
pub fn head_tail_pair(
    p: &BigInt,
    q: &BigInt,
) -> Result<(QuadraticNumber, QuadraticNumber, QuadraticNumber, QuadraticNumber)> {
    let pm1: BigInt = p - 1;
    let disc: BigInt = &pm1 * &pm1 + q * 4;
    if disc.is_zero() {
        return Err(Error::NoClosedForm(format!(
            "head_tail(p={p}, q={q}) has a repeated characteristic root"
        )));
    }
    let root = QuadraticNumber::sqrt_of(&disc)?;
    let d = root.base().clone();
    let konst = |v: BigInt| QuadraticNumber::from_integer(v, d.clone());
    let half = rat(1, 2);

    let alpha = konst(p + 1)?.try_add(&root)?.scale(&half);
    let beta = konst(p + 1)?.try_sub(&root)?.scale(&half);
    let two_root_inv = root.scale(&BigRational::from_integer(int(2))).inverse()?;
    let u = konst(pm1.clone())?.try_add(&root)?.try_mul(&two_root_inv)?;
    let v = konst(-pm1)?.try_add(&root)?.try_mul(&two_root_inv)?;
    Ok((u, alpha, v, beta))
}

fn power(initial: Vec<BigInt>, scale: BigInt, base: BigInt, shift: usize) -> ClosedForm {
    ClosedForm::Power { initial, scale, base, shift }
}

fn alias(slope: i64, intercept: i64) -> ClosedForm {
    ClosedForm::FibonacciAlias { slope, intercept }
}

/// The closed form available for `spec`, if any.
pub fn closed_form(spec: &BSpec) -> Result<ClosedForm> {
    let none = || Err(Error::NoClosedForm(spec.to_string()));
    let (zero, one) = (BigInt::zero(), BigInt::one());
    let form = match spec {
        BSpec::Constant { p } => power(vec![], p.clone(), p + 1, 1),
        BSpec::Arithmetic { m, k } => {
            if m.is_zero() {
                power(vec![], k.clone(), k + 1, 1)
            } else if *m == one && *k == one {
                alias(2, 0)
            } else if *k == m - 1 {
                power(vec![k.clone()], m * m, m + 1, 2)
            } else {
                return none();
            }
        }
        BSpec::Quadratic { k, m, p } => {
            let key = (k.clone(), m.clone(), p.clone());
            if key == (rat(1, 1), rat(0, 1), rat(-1, 1)) {
                power(vec![int(0), int(3)], int(8), int(3), 3)
            } else if key == (rat(1, 1), rat(1, 1), rat(-1, 1)) {
                // (2 +- sqrt 3)^n, weights fixed by c(2) = 6 and c(3) = 22
                let d = int(3);
                let q = |a: BigRational, b: BigRational| QuadraticNumber::new(a, b, d.clone());
                ClosedForm::QuadraticPair {
                    initial: vec![int(1)],
                    u: q(rat(1, 1), rat(-1, 3))?,
                    alpha: q(rat(2, 1), rat(1, 1))?,
                    v: q(rat(1, 1), rat(1, 3))?,
                    beta: q(rat(2, 1), rat(-1, 1))?,
                }
            } else {
                return none();
            }
        }
        BSpec::Exponential { k, m, p } => {
            if k.is_zero() {
                power(vec![], p.clone(), m + p, 1)
            } else if (k, m, p) == (&int(-1), &int(2), &one) {
                alias(2, -2)
            } else {
                return none();
            }
        }
        BSpec::HeadTail { p, q } => {
            if (p, q) == (&zero, &one) {
                alias(1, -1)
            } else if (p, q) == (&int(2), &one) {
                alias(2, 1)
            } else if (p, q) == (&int(3), &int(4)) {
                alias(3, 1)
            } else {
                let (u, alpha, v, beta) = head_tail_pair(p, q)?;
                ClosedForm::QuadraticPair { initial: vec![], u, alpha, v, beta }
            }
        }
        BSpec::TwoPart { p } => {
            if *p == one {
                alias(1, 1)
            } else {
                ClosedForm::FibPolySum { p: p.clone() }
            }
        }
        BSpec::Alternating { p, q } if (p, q) == (&one, &zero) => alias(1, 0),
        BSpec::FibIndexed { m, k: 0 } => {
            let f = fib(*m);
            power(vec![], f.clone(), f + 1, 1)
        }
        BSpec::CatalanSeq => ClosedForm::Catalan,
        _ => return none(),
    };
    Ok(form)
}
