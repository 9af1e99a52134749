//! Exact combinatorial primitives: signed-index Fibonacci numbers, Catalan
//! numbers, binomial coefficients, and arithmetic in `Q(sqrt d)`.

mod quadratic;

pub use quadratic::{combine_to_integer, QuadraticNumber};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Fibonacci number `F_i` for any signed index, using `F_{-i} = (-1)^{i+1} F_i`.
pub fn fib(i: i64) -> BigInt {
    let value = fib_pair(i.unsigned_abs()).0;
    if i < 0 && i % 2 == 0 {
        -value
    } else {
        value
    }
}

/// `(F_n, F_{n+1})` by fast doubling.
fn fib_pair(n: u64) -> (BigInt, BigInt) {
    if n == 0 {
        return (BigInt::zero(), BigInt::one());
    }
    let (a, b) = fib_pair(n / 2);
    let c = &a * (&b * 2 - &a);
    let d = &a * &a + &b * &b;
    if n.is_multiple_of(2) {
        (c, d)
    } else {
        let next = &c + &d;
        (d, next)
    }
}

/// Consecutive Fibonacci numbers `F_start, F_{start+1}, ..., F_{start+len-1}`.
pub fn fib_range(start: i64, len: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(len);
    if len == 0 {
        return out;
    }
    let mut a = fib(start);
    let mut b = fib(start + 1);
    for _ in 0..len {
        let next = &a + &b;
        out.push(std::mem::replace(&mut a, std::mem::replace(&mut b, next)));
    }
    out
}

/// Catalan numbers `C_0..=C_n` by Segner's convolution
/// `C_{j+1} = sum_{i=0..j} C_i C_{j-i}`.
pub fn catalan_table(n: usize) -> Vec<BigInt> {
    let mut table: Vec<BigInt> = Vec::with_capacity(n + 1);
    table.push(BigInt::one());
    for j in 0..n {
        let next = (0..=j).map(|i| &table[i] * &table[j - i]).sum();
        table.push(next);
    }
    table
}

pub fn catalan(n: usize) -> BigInt {
    catalan_table(n).pop().expect("table holds C_0")
}

/// Binomial coefficient with `C(n, k) = 0` outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}
