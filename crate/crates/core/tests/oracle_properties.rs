use std::collections::HashSet;

use gencomp_core::{enumerate_compositions, BSpec, Error, Oracle};
use num_bigint::BigInt;

#[test]
fn every_composition_appears_once_with_its_reverse() {
    for n in 1..=16 {
        let all: Vec<Vec<usize>> = enumerate_compositions(n).unwrap().map(|c| c.parts().to_vec()).collect();
        assert_eq!(all.len(), 1 << (n - 1), "n = {n}");
        let set: HashSet<&Vec<usize>> = all.iter().collect();
        assert_eq!(set.len(), all.len());
        for parts in &all {
            assert_eq!(parts.iter().sum::<usize>(), n);
            assert!(parts.iter().all(|&p| p >= 1));
            let rev: Vec<usize> = parts.iter().rev().copied().collect();
            assert!(set.contains(&rev));
        }
    }
}

#[test]
fn enumeration_is_descending_lexicographic() {
    let all: Vec<Vec<usize>> = enumerate_compositions(10).unwrap().map(|c| c.parts().to_vec()).collect();
    for w in all.windows(2) {
        assert!(w[0] > w[1], "{:?} then {:?}", w[0], w[1]);
    }
    assert_eq!(all.first().unwrap(), &vec![10]);
    assert_eq!(all.last().unwrap(), &vec![1; 10]);
}

#[test]
fn guard_limits_enumeration() {
    let o = Oracle::with_limit(6);
    assert!(o.count_colored_compositions(&BSpec::CatalanSeq, 6).is_ok());
    assert_eq!(
        o.count_colored_compositions(&BSpec::CatalanSeq, 7),
        Err(Error::LimitExceeded { n: 7, limit: 6 })
    );
}

#[test]
fn products_beyond_u128_stay_exact() {
    // b_1 = 10^30, so c(n) = 10^(30n) for the all-ones composition plus zeros
    let big = BigInt::from(10u32).pow(30);
    let s = BSpec::Explicit {
        terms: vec![big.clone()],
        tail: BigInt::from(0),
    };
    let c = Oracle::default().count_colored_compositions(&s, 5).unwrap();
    assert_eq!(c, big.pow(5));
}
