//! Bit-parallel kernels for truth tables of up to seven variables held in a
//! single `u128`.
//!
//! Bit `m` of a table is the function value on the input whose set of true
//! variables is the bitmask `m` (variable `i` is bit `i - 1`). With this
//! layout, numeric order on tables coincides with lexicographic order on the
//! position strings, because position `j` is stored at bit `2^n - 1 - j`.

/// Largest variable count handled by the `u128` kernels.
pub const MAX_COMPACT_VARS: usize = 7;

const fn build_var_masks() -> [u128; MAX_COMPACT_VARS] {
    let mut out = [0u128; MAX_COMPACT_VARS];
    let mut i = 0;
    while i < MAX_COMPACT_VARS {
        let mut m = 0;
        while m < 128 {
            if (m >> i) & 1 == 1 {
                out[i] |= 1u128 << m;
            }
            m += 1;
        }
        i += 1;
    }
    out
}

const fn build_level_masks() -> [u128; MAX_COMPACT_VARS + 1] {
    let mut out = [0u128; MAX_COMPACT_VARS + 1];
    let mut m: u32 = 0;
    while m < 128 {
        out[m.count_ones() as usize] |= 1u128 << m;
        m += 1;
    }
    out
}

/// `VAR_MASKS[i]` has bit `m` set iff variable `i + 1` is true in input `m`.
pub const VAR_MASKS: [u128; MAX_COMPACT_VARS] = build_var_masks();
/// `LEVEL_MASKS[k]` has bit `m` set iff `m` has exactly `k` true variables
/// (over all seven variables; intersect with [`full_mask`] for smaller n).
pub const LEVEL_MASKS: [u128; MAX_COMPACT_VARS + 1] = build_level_masks();

#[inline]
pub fn full_mask(n: usize) -> u128 {
    debug_assert!(n <= MAX_COMPACT_VARS);
    if n == MAX_COMPACT_VARS {
        u128::MAX
    } else {
        (1u128 << (1usize << n)) - 1
    }
}

#[inline]
pub fn level_mask(n: usize, k: usize) -> u128 {
    if k > n {
        0
    } else {
        LEVEL_MASKS[k] & full_mask(n)
    }
}

/// Bits whose input is obtained from a true input by adding one variable.
#[inline]
fn step_up(t: u128, n: usize) -> u128 {
    let mut acc = 0;
    for (i, &v) in VAR_MASKS.iter().enumerate().take(n) {
        acc |= (t & !v) << (1u32 << i);
    }
    acc
}

#[inline]
pub fn is_monotone(t: u128, n: usize) -> bool {
    step_up(t, n) & !t == 0
}

/// Minimal true inputs of a monotone table.
#[inline]
pub fn minimal_terms(t: u128, n: usize) -> u128 {
    t & !step_up(t, n)
}

/// Smallest up-set containing every set bit of `s`.
#[inline]
pub fn up_closure(mut s: u128, n: usize) -> u128 {
    for (i, &v) in VAR_MASKS.iter().enumerate().take(n) {
        s |= (s & !v) << (1u32 << i);
    }
    s
}

/// Smallest down-set containing every set bit of `s`.
#[inline]
pub fn down_closure(mut s: u128, n: usize) -> u128 {
    for (i, &v) in VAR_MASKS.iter().enumerate().take(n) {
        s |= (s & v) >> (1u32 << i);
    }
    s
}

/// Exchanges variables `a` and `b` (0-based, `a < b`).
#[derive(Debug, Clone, Copy)]
pub struct Transposition {
    mask: u128,
    shift: u32,
}

impl Transposition {
    pub fn new(a: usize, b: usize, n: usize) -> Self {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        debug_assert!(a != b && b < n);
        Transposition {
            mask: VAR_MASKS[a] & !VAR_MASKS[b] & full_mask(n),
            shift: (1u32 << b) - (1u32 << a),
        }
    }

    #[inline(always)]
    pub fn apply(self, t: u128) -> u128 {
        let d = ((t >> self.shift) ^ t) & self.mask;
        t ^ d ^ (d << self.shift)
    }
}

/// Iterates the set bits of a `u128` from least significant upward.
pub struct Ones(pub u128);

impl Iterator for Ones {
    type Item = u32;

    #[inline]
    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(i)
    }
}
