//! Known values and the asymptotic estimate of `D(n)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::math::binomial;

/// `D(0..=8)`.
pub const DEDEKIND: [u128; 9] = [
    2,
    3,
    6,
    20,
    168,
    7581,
    7828354,
    2414682040998,
    56130437228687557907788,
];

/// `R(0..=7)`: monotone functions up to renaming of variables.
pub const INEQUIVALENT: [u64; 8] = [2, 3, 5, 10, 30, 210, 16353, 490013148];

pub fn dedekind(n: usize) -> Option<u128> {
    DEDEKIND.get(n).copied()
}

pub fn inequivalent(n: usize) -> Option<u64> {
    INEQUIVALENT.get(n).copied()
}

/// A positive real kept as its base-2 logarithm; the estimate for `n = 20`
/// already has about 5e4 decimal digits.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Estimate {
    pub n: usize,
    pub log2: f64,
}

impl Estimate {
    /// The value as `f64`; infinite once it leaves the `f64` range.
    pub fn value(&self) -> f64 {
        self.log2.exp2()
    }

    /// `estimate / exact`.
    pub fn ratio_to(&self, exact: u128) -> f64 {
        (self.log2 - (exact as f64).log2()).exp2()
    }

    /// `log2(estimate) / C(n, floor(n/2))`, which tends to 1.
    pub fn log2_ratio(&self) -> f64 {
        self.log2 / binomial(self.n as u64, self.n as u64 / 2) as f64
    }
}

impl fmt::Display for Estimate {
    /// Scientific notation, e.g. `5.4321e22`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let log10 = self.log2 * std::f64::consts::LOG10_2;
        let mut exponent = log10.floor();
        let mut mantissa = 10f64.powf(log10 - exponent);
        let digits = f.precision().unwrap_or(4);
        // rounding can carry the mantissa up to 10
        if format!("{mantissa:.digits$}").starts_with("10") {
            mantissa /= 10.0;
            exponent += 1.0;
        }
        write!(f, "{mantissa:.digits$}e{exponent}")
    }
}

/// Korshunov's asymptotic formula for `D(n)`, `n >= 2`.
pub fn korshunov_estimate(n: usize) -> Result<Estimate> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("estimate needs n >= 2, got {n}")));
    }
    let c = |k: usize| binomial(n as u64, k as u64) as f64;
    let nf = n as f64;
    let p2 = |e: f64| e.exp2();
    let (base, exponent) = if n % 2 == 0 {
        let h = n / 2;
        (
            c(h),
            c(h - 1) * (p2(-nf / 2.0) + nf * nf * p2(-nf - 5.0) - nf * p2(-nf - 4.0)),
        )
    } else {
        let h = (n - 1) / 2;
        let low = if n >= 3 { c((n - 3) / 2) } else { 0.0 };
        (
            c(h) + 1.0,
            low * (p2((-nf - 3.0) / 2.0) - nf * nf * p2(-nf - 5.0) - nf * p2(-nf - 3.0))
                + c(h) * (p2((-nf - 1.0) / 2.0) - nf * nf * p2(-nf - 4.0)),
        )
    };
    Ok(Estimate {
        n,
        log2: base + exponent * std::f64::consts::LOG2_E,
    })
}
