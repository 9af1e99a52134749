//! Fixed-seed parameter draws for the acceptance suite, one stream per family.

use gencomp_core::{validate, BSpec};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 0x00c0_1055_a1c0;

pub const FAMILIES: [&str; 13] = [
    "explicit",
    "constant",
    "arithmetic",
    "quadratic",
    "exponential",
    "floor_half",
    "ceil_half",
    "catalan_seq",
    "head_tail",
    "two_part",
    "alternating",
    "fib_indexed",
    "fib_squared",
];

/// Families with a constant-coefficient recurrence.
pub const RECURRENCE_FAMILIES: [&str; 11] = [
    "constant",
    "arithmetic",
    "quadratic",
    "exponential",
    "floor_half",
    "ceil_half",
    "head_tail",
    "two_part",
    "alternating",
    "fib_indexed",
    "fib_squared",
];

fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

fn half(v: i64) -> BigRational {
    BigRational::new(int(v), int(2))
}

fn draw_one(family: &str, rng: &mut ChaCha8Rng) -> BSpec {
    match family {
        "explicit" => {
            let len = rng.gen_range(0..=5);
            BSpec::Explicit {
                terms: (0..len).map(|_| int(rng.gen_range(0..=4))).collect(),
                tail: int(rng.gen_range(0..=3)),
            }
        }
        "constant" => BSpec::Constant { p: int(rng.gen_range(0..=9)) },
        "arithmetic" => BSpec::Arithmetic {
            m: int(rng.gen_range(0..=6)),
            k: int(rng.gen_range(0..=6)),
        },
        "quadratic" => {
            // a + b even keeps (a i^2 + b i) / 2 integral for every i
            let a = rng.gen_range(0..=4);
            let b = 2 * rng.gen_range(-3..=3) + (a & 1);
            BSpec::Quadratic {
                k: half(a),
                m: half(b),
                p: BigRational::from_integer(int(rng.gen_range(-2..=5))),
            }
        }
        "exponential" => BSpec::Exponential {
            k: int(rng.gen_range(-2..=3)),
            m: int(rng.gen_range(0..=4)),
            p: int(rng.gen_range(0..=4)),
        },
        "floor_half" => BSpec::FloorHalf,
        "ceil_half" => BSpec::CeilHalf,
        "catalan_seq" => BSpec::CatalanSeq,
        "head_tail" => BSpec::HeadTail {
            p: int(rng.gen_range(0..=6)),
            q: int(rng.gen_range(0..=6)),
        },
        "two_part" => BSpec::TwoPart { p: int(rng.gen_range(0..=7)) },
        "alternating" => BSpec::Alternating {
            p: int(rng.gen_range(0..=6)),
            q: int(rng.gen_range(0..=6)),
        },
        "fib_indexed" => BSpec::FibIndexed {
            m: rng.gen_range(-1..=8),
            k: rng.gen_range(0..=4),
        },
        "fib_squared" => BSpec::FibSquared { k: rng.gen_range(0..=7) },
        other => panic!("unknown family {other}"),
    }
}

fn is_parameterless(family: &str) -> bool {
    matches!(family, "floor_half" | "ceil_half" | "catalan_seq")
}

/// `count` valid specs of `family` (one for parameterless families), valid
/// for `n <= valid_to`. Deterministic for a given family.
pub fn draws(family: &str, count: usize, valid_to: usize) -> Vec<BSpec> {
    let index = FAMILIES.iter().position(|f| *f == family).expect("known family") as u64;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ (index << 32));
    let wanted = if is_parameterless(family) { 1 } else { count };
    let mut out = Vec::with_capacity(wanted);
    while out.len() < wanted {
        let spec = draw_one(family, &mut rng);
        if spec.check().is_ok() && validate(&spec, valid_to).ok() {
            out.push(spec);
        }
    }
    out
}

pub fn all_draws(count: usize, valid_to: usize) -> Vec<(&'static str, Vec<BSpec>)> {
    FAMILIES.iter().map(|f| (*f, draws(f, count, valid_to))).collect()
}
