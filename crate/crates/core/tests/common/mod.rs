#![allow(dead_code)]

use gencomp_core::{validate, BSpec};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::collection::vec;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

fn half(v: i64) -> BigRational {
    BigRational::new(int(v), int(2))
}

pub fn config(cases: u32, seed: u64) -> Config {
    Config {
        cases,
        rng_seed: RngSeed::Fixed(seed),
        failure_persistence: None,
        ..Config::default()
    }
}

/// Any spec whose `b` is a nonnegative integer for `i <= valid_to`.
pub fn spec(valid_to: usize) -> impl Strategy<Value = BSpec> {
    prop_oneof![
        (vec(0..5i64, 0..5), 0..4i64).prop_map(|(t, tail)| BSpec::Explicit {
            terms: t.into_iter().map(int).collect(),
            tail: int(tail),
        }),
        (0..10i64).prop_map(|p| BSpec::Constant { p: int(p) }),
        (0..7i64, 0..7i64).prop_map(|(m, k)| BSpec::Arithmetic { m: int(m), k: int(k) }),
        (0..5i64, -3..4i64, -2..6i64).prop_map(|(a, b, p)| BSpec::Quadratic {
            k: half(a),
            m: half(2 * b + (a & 1)),
            p: BigRational::from_integer(int(p)),
        }),
        (-2..4i64, 0..5i64, 0..5i64).prop_map(|(k, m, p)| BSpec::Exponential {
            k: int(k),
            m: int(m),
            p: int(p)
        }),
        Just(BSpec::FloorHalf),
        Just(BSpec::CeilHalf),
        Just(BSpec::CatalanSeq),
        (0..7i64, 0..7i64).prop_map(|(p, q)| BSpec::HeadTail { p: int(p), q: int(q) }),
        (0..8i64).prop_map(|p| BSpec::TwoPart { p: int(p) }),
        (0..7i64, 0..7i64).prop_map(|(p, q)| BSpec::Alternating { p: int(p), q: int(q) }),
        (-1..9i64, 0..5i64).prop_map(|(m, k)| BSpec::FibIndexed { m, k }),
        (0..8i64).prop_map(|k| BSpec::FibSquared { k }),
    ]
    .prop_filter("b must be a nonnegative integer", move |s| validate(s, valid_to).ok())
}
