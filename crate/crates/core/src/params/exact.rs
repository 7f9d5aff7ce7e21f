//! Integer-root kernels used for every threshold and radix comparison.

use num_bigint::BigUint;
use num_traits::Zero;

/// Largest `s` with `s^n * den <= num`, i.e. `floor((num / den)^(1/n))`.
///
/// For integer `s`, `s^n * den <= num` holds iff `s^n <= floor(num / den)`,
/// so the quotient is taken first and its root is exact.
pub fn floor_nth_root(num: &BigUint, den: &BigUint, n: u32) -> BigUint {
    assert!(!den.is_zero(), "zero denominator");
    assert!(n >= 1, "root degree must be positive");
    let q = num / den;
    let s = q.nth_root(n);
    debug_assert!(s.pow(n) * den <= *num);
    debug_assert!((&s + 1u32).pow(n) * den > *num);
    s
}

/// Smallest `s` with `s^n * den >= num`, i.e. `ceil((num / den)^(1/n))`.
pub fn ceil_nth_root(num: &BigUint, den: &BigUint, n: u32) -> BigUint {
    let s = floor_nth_root(num, den, n);
    if s.pow(n) * den == *num {
        s
    } else {
        s + 1u32
    }
}

pub fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

pub fn pow(x: u64, e: u64) -> BigUint {
    num_traits::pow(big(x), e as usize)
}

pub fn to_u64(x: &BigUint) -> Option<u64> {
    let digits = x.to_u64_digits();
    match digits.len() {
        0 => Some(0),
        1 => Some(digits[0]),
        _ => None,
    }
}
