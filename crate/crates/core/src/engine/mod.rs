//! Counting `c(n, b)`: the convolution `a_{n+1} = sum_{i=1}^n b_{n+1-i} a_i`
//! with `a_1 = 1`, per-family linear recurrences, closed forms, and the
//! inverse problem of recovering `b` from counts.

mod closed;
mod recurrence;

pub use closed::{closed_form, head_tail_pair, ClosedForm};
pub use recurrence::{derive_recurrence, LinearRecurrence};

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::bspec::{validate, BSpec};
use crate::error::{Error, Result};
use crate::oracle::Oracle;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Fundamental,
    Recurrence,
    Closed,
    Oracle,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Fundamental => "fundamental",
            Method::Recurrence => "recurrence",
            Method::Closed => "closed",
            Method::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fundamental" => Ok(Method::Fundamental),
            "recurrence" => Ok(Method::Recurrence),
            "closed" => Ok(Method::Closed),
            "oracle" => Ok(Method::Oracle),
            other => Err(Error::bad_param("method", format!("unknown method `{other}`"))),
        }
    }
}

/// `values[n-1] = c(n, b)` for `n = 1..=values.len()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountSeries {
    pub spec: BSpec,
    pub values: Vec<BigInt>,
    pub method: Method,
}

impl CountSeries {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `c(n, b)`, 1-indexed.
    pub fn get(&self, n: usize) -> Option<&BigInt> {
        n.checked_sub(1).and_then(|j| self.values.get(j))
    }
}

fn series(spec: &BSpec, values: Vec<BigInt>, method: Method) -> CountSeries {
    CountSeries {
        spec: spec.clone(),
        values,
        method,
    }
}

/// `c(1..=n, b)` by the convolution; `O(n^2)` multiplications.
pub fn count_fundamental(spec: &BSpec, n: usize) -> Result<CountSeries> {
    let b = spec.b_values(n)?;
    // a[j] = c(j, b) with a[0] = 1 for the empty composition
    let mut a: Vec<BigInt> = Vec::with_capacity(n + 1);
    a.push(BigInt::one());
    for j in 1..=n {
        let next = (1..=j)
            .filter(|&i| !b[i - 1].is_zero())
            .map(|i| &b[i - 1] * &a[j - i])
            .sum();
        a.push(next);
    }
    a.remove(0);
    Ok(series(spec, a, Method::Fundamental))
}

/// `c(1..=n, b)` from the family's linear recurrence; `O(n)` multiplications.
pub fn count_via_recurrence(spec: &BSpec, n: usize) -> Result<CountSeries> {
    let rec = derive_recurrence(spec)?;
    validate(spec, n).into_result()?;
    Ok(series(spec, rec.evaluate(n), Method::Recurrence))
}

/// `c(n, b)` from the family's closed form.
pub fn closed_form_value(spec: &BSpec, n: usize) -> Result<BigInt> {
    let form = closed_form(spec)?;
    validate(spec, n).into_result()?;
    form.evaluate(n)
}

pub fn count_via_closed_form(spec: &BSpec, n: usize) -> Result<CountSeries> {
    let form = closed_form(spec)?;
    validate(spec, n).into_result()?;
    let values = (1..=n).map(|j| form.evaluate(j)).collect::<Result<_>>()?;
    Ok(series(spec, values, Method::Closed))
}

pub fn count_via_oracle(spec: &BSpec, n: usize, oracle: &Oracle) -> Result<CountSeries> {
    Ok(series(spec, oracle.count_series(spec, n)?, Method::Oracle))
}

/// Counts with the cheapest method the family supports: closed form, then
/// recurrence, then the convolution.
pub fn count_auto(spec: &BSpec, n: usize) -> Result<CountSeries> {
    match count_via_closed_form(spec, n) {
        Err(Error::NoClosedForm(_)) => {}
        other => return other,
    }
    match count_via_recurrence(spec, n) {
        Err(Error::NoRecurrenceForFamily(_)) => {}
        other => return other,
    }
    count_fundamental(spec, n)
}

pub fn count_with(spec: &BSpec, n: usize, method: Method, oracle: &Oracle) -> Result<CountSeries> {
    match method {
        Method::Fundamental => count_fundamental(spec, n),
        Method::Recurrence => count_via_recurrence(spec, n),
        Method::Closed => count_via_closed_form(spec, n),
        Method::Oracle => count_via_oracle(spec, n, oracle),
    }
}

/// Recovers `b_1..b_n` from `c_1..c_n` by solving the convolution
/// triangularly: `b_n = c_n - sum_{j=1}^{n-1} b_j c_{n-j}`.
///
/// Fails with [`Error::NegativeB`] at the first negative `b_i`, meaning `c`
/// does not count generalized compositions for any `b`.
pub fn invert(c: &[BigInt]) -> Result<Vec<BigInt>> {
    if c.is_empty() {
        return Err(Error::bad_param("c", "at least one term is required"));
    }
    let mut b: Vec<BigInt> = Vec::with_capacity(c.len());
    for n in 1..=c.len() {
        let mut value = c[n - 1].clone();
        for j in 1..n {
            value -= &b[j - 1] * &c[n - j - 1];
        }
        if value.is_negative() {
            return Err(Error::NegativeB { index: n, value });
        }
        b.push(value);
    }
    Ok(b)
}

/// One [`CountSeries`] per spec, in input order, each computed with
/// [`count_auto`]. With `verify`, every row is also checked against
/// [`count_fundamental`]. Rows fail independently.
pub fn count_table(specs: &[BSpec], n: usize, verify: bool) -> Vec<Result<CountSeries>> {
    specs
        .par_iter()
        .map(|spec| {
            let row = count_auto(spec, n)?;
            if verify && row.method != Method::Fundamental {
                let reference = count_fundamental(spec, n)?;
                if let Some(j) = row.values.iter().zip(&reference.values).position(|(x, y)| x != y) {
                    return Err(Error::MethodDisagreement {
                        method: row.method.as_str(),
                        n: j + 1,
                        got: row.values[j].clone(),
                        expected: reference.values[j].clone(),
                    });
                }
            }
            Ok(row)
        })
        .collect()
}
