//! Dimensions of Specht and permutation modules.

use num_bigint::BigUint;
use num_traits::One;

use crate::partition::{Composition, Partition};
use crate::BigNat;

pub fn factorial(n: u32) -> BigNat {
    (2..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// C(n, k) for 0 ≤ k ≤ n, else 0.
pub fn binomial(n: u64, k: u64) -> BigNat {
    if k > n {
        return BigUint::default();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Hook length formula.
pub fn specht_dimension(l: &Partition) -> BigNat {
    let conj = l.conjugate();
    let mut hooks = BigUint::one();
    for (i, &r) in l.parts().iter().enumerate() {
        for j in 0..r as usize {
            let arm = r - 1 - j as u32;
            let leg = conj.part(j) - 1 - i as u32;
            hooks *= arm + leg + 1;
        }
    }
    factorial(l.size()) / hooks
}

/// The multinomial |α|! / Π α_i!.
pub fn perm_module_dimension(a: &Composition) -> BigNat {
    let denom = a
        .parts()
        .iter()
        .fold(BigUint::one(), |acc, &x| acc * factorial(x));
    factorial(a.size()) / denom
}
