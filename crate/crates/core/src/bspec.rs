//! The color-multiplicity sequence `b = (b_1, b_2, ...)`: one variant per
//! parameterized family plus an explicit list, with range-bounded validation
//! and a JSON wire format.
//!
//! Wire format: `{"family": "<name>", "params": {...}}`. Integers are JSON
//! numbers (magnitude below 2^53) or decimal strings; rationals are strings
//! `"num/den"` (a bare integer string or number is also accepted).

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::numbers::{catalan_table, fib, fib_range};

/// Largest integer magnitude written as a bare JSON number.
const JSON_SAFE_INT: i64 = (1 << 53) - 1;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BSpec {
    /// `terms[i-1]` for `i <= terms.len()`, `tail` afterwards.
    Explicit { terms: Vec<BigInt>, tail: BigInt },
    /// `b_i = p`
    Constant { p: BigInt },
    /// `b_i = m(i-1) + k`
    Arithmetic { m: BigInt, k: BigInt },
    /// `b_i = k i^2 + m i + p`
    Quadratic {
        k: BigRational,
        m: BigRational,
        p: BigRational,
    },
    /// `b_i = k + p m^(i-1)`
    Exponential { k: BigInt, m: BigInt, p: BigInt },
    /// `b_i = floor(i/2)`
    FloorHalf,
    /// `b_i = ceil(i/2)`
    CeilHalf,
    /// `b_i = C_{i-1}`
    CatalanSeq,
    /// `b = (p, q, q, ...)`
    HeadTail { p: BigInt, q: BigInt },
    /// `b = (p, 1, 0, 0, ...)`
    TwoPart { p: BigInt },
    /// `b = (p, q, p, q, ...)`
    Alternating { p: BigInt, q: BigInt },
    /// `b_i = F_{m + k(i-1)}`
    FibIndexed { m: i64, k: i64 },
    /// `b_i = F_{k+i-1}^2`
    FibSquared { k: i64 },
}

/// Outcome of [`validate`]: the first index whose `b_i` is not a
/// nonnegative integer, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub first_violation: Option<(usize, BigRational)>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.first_violation.is_none()
    }

    /// Converts a violation into the matching [`Error`].
    pub fn into_result(self) -> Result<()> {
        match self.first_violation {
            None => Ok(()),
            Some((index, value)) if !value.is_integer() => Err(Error::NonIntegerB { index, value }),
            Some((index, value)) => Err(Error::NegativeB {
                index,
                value: value.to_integer(),
            }),
        }
    }
}

fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

fn ratio(v: &BigInt) -> BigRational {
    BigRational::from_integer(v.clone())
}

impl BSpec {
    pub fn family_name(&self) -> &'static str {
        match self {
            BSpec::Explicit { .. } => "explicit",
            BSpec::Constant { .. } => "constant",
            BSpec::Arithmetic { .. } => "arithmetic",
            BSpec::Quadratic { .. } => "quadratic",
            BSpec::Exponential { .. } => "exponential",
            BSpec::FloorHalf => "floor_half",
            BSpec::CeilHalf => "ceil_half",
            BSpec::CatalanSeq => "catalan_seq",
            BSpec::HeadTail { .. } => "head_tail",
            BSpec::TwoPart { .. } => "two_part",
            BSpec::Alternating { .. } => "alternating",
            BSpec::FibIndexed { .. } => "fib_indexed",
            BSpec::FibSquared { .. } => "fib_squared",
        }
    }

    /// Checks the structural parameter constraints of each family. Value
    /// constraints on the generated `b_i` are range-dependent; see [`validate`].
    pub fn check(&self) -> Result<()> {
        fn nonneg(name: &str, v: &BigInt) -> Result<()> {
            if v.is_negative() {
                Err(Error::bad_param(name, format!("must be nonnegative, got {v}")))
            } else {
                Ok(())
            }
        }
        match self {
            BSpec::Explicit { terms, tail } => {
                for (j, t) in terms.iter().enumerate() {
                    nonneg(&format!("terms[{j}]"), t)?;
                }
                nonneg("tail", tail)
            }
            BSpec::Arithmetic { m, k } => {
                nonneg("m", m)?;
                nonneg("k", k)
            }
            BSpec::HeadTail { p, q } | BSpec::Alternating { p, q } => {
                nonneg("p", p)?;
                nonneg("q", q)
            }
            BSpec::TwoPart { p } => nonneg("p", p),
            BSpec::FibIndexed { m, k } => {
                if *m < -1 {
                    return Err(Error::bad_param("m", format!("must be >= -1, got {m}")));
                }
                if *k < 0 {
                    return Err(Error::bad_param("k", format!("must be >= 0, got {k}")));
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }

    /// `b_i` as an exact rational, before any integrality check.
    pub fn b_rational(&self, i: usize) -> BigRational {
        assert!(i >= 1, "b is indexed from 1");
        let ii = int(i as i64);
        let value = match self {
            BSpec::Explicit { terms, tail } => terms.get(i - 1).unwrap_or(tail).clone(),
            BSpec::Constant { p } => p.clone(),
            BSpec::Arithmetic { m, k } => m * (&ii - 1) + k,
            BSpec::Quadratic { k, m, p } => {
                let x = ratio(&ii);
                return k * &x * &x + m * &x + p;
            }
            BSpec::Exponential { k, m, p } => k + p * num_traits::pow(m.clone(), i - 1),
            BSpec::FloorHalf => int(i as i64 / 2),
            BSpec::CeilHalf => int((i as i64 + 1) / 2),
            BSpec::CatalanSeq => catalan_table(i - 1).pop().unwrap(),
            BSpec::HeadTail { p, q } => if i == 1 { p } else { q }.clone(),
            BSpec::TwoPart { p } => match i {
                1 => p.clone(),
                2 => BigInt::one(),
                _ => BigInt::zero(),
            },
            BSpec::Alternating { p, q } => if i % 2 == 1 { p } else { q }.clone(),
            BSpec::FibIndexed { m, k } => fib(m + k * (i as i64 - 1)),
            BSpec::FibSquared { k } => {
                let f = fib(k + i as i64 - 1);
                &f * &f
            }
        };
        BigRational::from_integer(value)
    }

    /// The exact number of colors for part size `i >= 1`.
    pub fn b_value(&self, i: usize) -> Result<BigInt> {
        checked_b(i, self.b_rational(i))
    }

    /// `[b_1, ..., b_n]`, failing at the first value that is not a
    /// nonnegative integer. Cheaper than `n` calls to [`BSpec::b_value`] for
    /// the Catalan and Fibonacci families.
    pub fn b_values(&self, n: usize) -> Result<Vec<BigInt>> {
        let raw: Vec<BigRational> = match self {
            BSpec::CatalanSeq => {
                let mut t = catalan_table(n.saturating_sub(1));
                t.truncate(n);
                t.into_iter().map(BigRational::from_integer).collect()
            }
            BSpec::FibSquared { k } => fib_range(*k, n)
                .into_iter()
                .map(|f| BigRational::from_integer(&f * &f))
                .collect(),
            BSpec::FibIndexed { m, k: 1 } => fib_range(*m, n)
                .into_iter()
                .map(BigRational::from_integer)
                .collect(),
            _ => (1..=n).map(|i| self.b_rational(i)).collect(),
        };
        raw.into_iter()
            .enumerate()
            .map(|(j, v)| checked_b(j + 1, v))
            .collect()
    }

    pub fn to_json(&self) -> Value {
        let mut params = Map::new();
        let mut put = |name: &str, v: Value| {
            params.insert(name.to_string(), v);
        };
        match self {
            BSpec::Explicit { terms, tail } => {
                put("terms", Value::Array(terms.iter().map(int_json).collect()));
                put("tail", int_json(tail));
            }
            BSpec::Constant { p } | BSpec::TwoPart { p } => put("p", int_json(p)),
            BSpec::Arithmetic { m, k } => {
                put("m", int_json(m));
                put("k", int_json(k));
            }
            BSpec::Quadratic { k, m, p } => {
                put("k", Value::String(ratio_string(k)));
                put("m", Value::String(ratio_string(m)));
                put("p", Value::String(ratio_string(p)));
            }
            BSpec::Exponential { k, m, p } => {
                put("k", int_json(k));
                put("m", int_json(m));
                put("p", int_json(p));
            }
            BSpec::FloorHalf | BSpec::CeilHalf | BSpec::CatalanSeq => {}
            BSpec::HeadTail { p, q } | BSpec::Alternating { p, q } => {
                put("p", int_json(p));
                put("q", int_json(q));
            }
            BSpec::FibIndexed { m, k } => {
                put("m", int_json(&int(*m)));
                put("k", int_json(&int(*k)));
            }
            BSpec::FibSquared { k } => put("k", int_json(&int(*k))),
        }
        let mut obj = Map::new();
        obj.insert("family".into(), Value::String(self.family_name().into()));
        obj.insert("params".into(), Value::Object(params));
        Value::Object(obj)
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::bad_param("spec", "expected a JSON object"))?;
        let family = obj
            .get("family")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::bad_param("family", "missing or not a string"))?;
        let empty = Map::new();
        let params = match obj.get("params") {
            None | Some(Value::Null) => &empty,
            Some(Value::Object(p)) => p,
            Some(_) => return Err(Error::bad_param("params", "expected a JSON object")),
        };
        let p = Params { map: params };
        let spec = match family {
            "explicit" => {
                p.only(&["terms", "tail"])?;
                let terms = match params.get("terms") {
                    Some(Value::Array(items)) => items
                        .iter()
                        .enumerate()
                        .map(|(j, v)| parse_int(&format!("terms[{j}]"), v))
                        .collect::<Result<Vec<_>>>()?,
                    Some(_) => return Err(Error::bad_param("terms", "expected an array")),
                    None => return Err(Error::bad_param("terms", "missing")),
                };
                let tail = match params.get("tail") {
                    Some(v) => parse_int("tail", v)?,
                    None => BigInt::zero(),
                };
                BSpec::Explicit { terms, tail }
            }
            "constant" => {
                p.only(&["p"])?;
                BSpec::Constant { p: p.int("p")? }
            }
            "arithmetic" => {
                p.only(&["m", "k"])?;
                BSpec::Arithmetic {
                    m: p.int("m")?,
                    k: p.int("k")?,
                }
            }
            "quadratic" => {
                p.only(&["k", "m", "p"])?;
                BSpec::Quadratic {
                    k: p.rational("k")?,
                    m: p.rational("m")?,
                    p: p.rational("p")?,
                }
            }
            "exponential" => {
                p.only(&["k", "m", "p"])?;
                BSpec::Exponential {
                    k: p.int("k")?,
                    m: p.int("m")?,
                    p: p.int("p")?,
                }
            }
            "floor_half" | "ceil_half" | "catalan_seq" => {
                p.only(&[])?;
                match family {
                    "floor_half" => BSpec::FloorHalf,
                    "ceil_half" => BSpec::CeilHalf,
                    _ => BSpec::CatalanSeq,
                }
            }
            "head_tail" | "alternating" => {
                p.only(&["p", "q"])?;
                let (pp, q) = (p.int("p")?, p.int("q")?);
                if family == "head_tail" {
                    BSpec::HeadTail { p: pp, q }
                } else {
                    BSpec::Alternating { p: pp, q }
                }
            }
            "two_part" => {
                p.only(&["p"])?;
                BSpec::TwoPart { p: p.int("p")? }
            }
            "fib_indexed" => {
                p.only(&["m", "k"])?;
                BSpec::FibIndexed {
                    m: p.index("m")?,
                    k: p.index("k")?,
                }
            }
            "fib_squared" => {
                p.only(&["k"])?;
                BSpec::FibSquared { k: p.index("k")? }
            }
            other => return Err(Error::UnknownFamily(other.to_string())),
        };
        spec.check()?;
        Ok(spec)
    }
}

fn checked_b(index: usize, value: BigRational) -> Result<BigInt> {
    if !value.is_integer() {
        Err(Error::NonIntegerB { index, value })
    } else if value.is_negative() {
        Err(Error::NegativeB {
            index,
            value: value.to_integer(),
        })
    } else {
        Ok(value.to_integer())
    }
}

/// Checks that `b_i` is a nonnegative integer for every `i` in `1..=n_max`.
pub fn validate(spec: &BSpec, n_max: usize) -> ValidationReport {
    let first_violation = match spec.b_values(n_max) {
        Ok(_) => None,
        Err(Error::NonIntegerB { index, value }) => Some((index, value)),
        Err(Error::NegativeB { index, value }) => Some((index, BigRational::from_integer(value))),
        Err(e) => unreachable!("b_values only reports value violations: {e}"),
    };
    ValidationReport { first_violation }
}

/// Parses a spec document, reporting JSON syntax errors with their position.
pub fn parse_spec(text: &str) -> Result<BSpec> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    BSpec::from_json(&value)
}

pub fn serialize_spec(spec: &BSpec) -> String {
    spec.to_json().to_string()
}

struct Params<'a> {
    map: &'a Map<String, Value>,
}

impl Params<'_> {
    fn only(&self, allowed: &[&str]) -> Result<()> {
        match self.map.keys().find(|k| !allowed.contains(&k.as_str())) {
            Some(k) => Err(Error::bad_param(k, "unexpected parameter")),
            None => Ok(()),
        }
    }

    fn get(&self, name: &str) -> Result<&Value> {
        self.map
            .get(name)
            .ok_or_else(|| Error::bad_param(name, "missing"))
    }

    fn int(&self, name: &str) -> Result<BigInt> {
        parse_int(name, self.get(name)?)
    }

    fn rational(&self, name: &str) -> Result<BigRational> {
        parse_rational(name, self.get(name)?)
    }

    fn index(&self, name: &str) -> Result<i64> {
        let v = self.int(name)?;
        v.to_i64()
            .filter(|x| x.unsigned_abs() <= 1 << 40)
            .ok_or_else(|| Error::bad_param(name, format!("index {v} out of range")))
    }
}

fn parse_int(name: &str, v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => match n.as_i64() {
            Some(x) if x.abs() <= JSON_SAFE_INT => Ok(int(x)),
            Some(_) => Err(Error::bad_param(name, "integers of magnitude >= 2^53 must be strings")),
            None => Err(Error::bad_param(name, format!("expected an integer, got {n}"))),
        },
        Value::String(s) => s
            .trim()
            .parse::<BigInt>()
            .map_err(|_| Error::bad_param(name, format!("`{s}` is not an integer"))),
        other => Err(Error::bad_param(name, format!("expected an integer, got {other}"))),
    }
}

fn parse_rational(name: &str, v: &Value) -> Result<BigRational> {
    let Value::String(s) = v else {
        return parse_int(name, v).map(BigRational::from_integer);
    };
    let bad = || Error::bad_param(name, format!("`{s}` is not a rational \"num/den\""));
    match s.split_once('/') {
        None => s.trim().parse::<BigInt>().map(BigRational::from_integer).map_err(|_| bad()),
        Some((num, den)) => {
            let num: BigInt = num.trim().parse().map_err(|_| bad())?;
            let den: BigInt = den.trim().parse().map_err(|_| bad())?;
            if den.is_zero() {
                return Err(Error::bad_param(name, "zero denominator"));
            }
            Ok(BigRational::new(num, den))
        }
    }
}

fn int_json(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(x) if x.abs() <= JSON_SAFE_INT => Value::from(x),
        _ => Value::String(v.to_string()),
    }
}

fn ratio_string(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for BSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family_name())?;
        let Value::Object(params) = &self.to_json()["params"] else {
            return Ok(());
        };
        if params.is_empty() {
            return Ok(());
        }
        let parts: Vec<String> = params
            .iter()
            .map(|(k, v)| match v {
                Value::String(s) => format!("{k}={s}"),
                other => format!("{k}={other}"),
            })
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}
