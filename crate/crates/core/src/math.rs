//! Small exact integer helpers shared by the counting code.

/// Binomial coefficient C(n, k); zero when k > n.
pub const fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = if k > n - k { n - k } else { k };
    let mut acc: u64 = 1;
    let mut i = 0;
    while i < k {
        // exact at every step: acc * (n - i) / (i + 1) is C(n, i + 1)
        acc = acc * (n - i) / (i + 1);
        i += 1;
    }
    acc
}

pub const fn factorial(n: u64) -> u64 {
    let mut acc = 1;
    let mut i = 2;
    while i <= n {
        acc *= i;
        i += 1;
    }
    acc
}

/// Ceiling of `num / den` for positive `den`.
pub fn div_ceil_u128(num: u128, den: u128) -> u128 {
    num.div_ceil(den)
}
