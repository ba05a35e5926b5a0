//! Profile vectors, their duality identities, and generation of every
//! realizable profile through the shadow-bound dynamic program.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::math::binomial;
use crate::truthtable::{MinimalTermSet, MAX_VARS};

/// Largest `n` for which [`generate_profiles`] is supported.
pub const MAX_PROFILE_VARS: usize = 9;

/// Counts of minimal terms by cardinality: entry `i` (1-based) is the number
/// of minimal terms with exactly `i` variables.
///
/// Ordering is lexicographic on the entries (profiles of different length
/// order by length first).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Profile {
    n: u8,
    entries: [u16; MAX_VARS],
}

impl Profile {
    pub fn zero(n: usize) -> Result<Self> {
        if n > MAX_VARS {
            return Err(Error::VariableCount { n, max: MAX_VARS });
        }
        Ok(Profile {
            n: n as u8,
            entries: [0; MAX_VARS],
        })
    }

    pub fn new(entries: &[u16]) -> Result<Self> {
        let mut p = Self::zero(entries.len())?;
        p.entries[..entries.len()].copy_from_slice(entries);
        Ok(p)
    }

    /// Profile with a single nonzero entry `k` at 1-based index `i`.
    pub fn single(n: usize, i: usize, k: u16) -> Result<Self> {
        let mut p = Self::zero(n)?;
        if i == 0 || i > n {
            return Err(Error::OutOfRange(format!("index {i} outside 1..={n}")));
        }
        p.entries[i - 1] = k;
        Ok(p)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn entries(&self) -> &[u16] {
        &self.entries[..self.n()]
    }

    /// Entry at 1-based index `i`.
    #[inline]
    pub fn get(&self, i: usize) -> u16 {
        self.entries[i - 1]
    }

    /// Copy with entry `i` (1-based) replaced.
    pub fn with(mut self, i: usize, value: u16) -> Self {
        self.entries[i - 1] = value;
        self
    }

    /// Total number of minimal terms.
    pub fn total(&self) -> u32 {
        self.entries().iter().map(|&a| a as u32).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.entries().iter().all(|&a| a == 0)
    }

    /// 1-based indices of the nonzero entries.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries()
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(i, _)| i + 1)
    }

    /// 1-based index of the rightmost nonzero entry.
    pub fn last_nonzero(&self) -> Option<usize> {
        self.support().last()
    }

    /// The profile with the rightmost nonzero entry decreased by one; `None`
    /// for the zero profile.
    pub fn predecessor(&self) -> Option<(Profile, usize)> {
        let i = self.last_nonzero()?;
        Some((self.with(i, self.get(i) - 1), i))
    }

    /// Profile of a minimal-term set other than the constant-1 function.
    pub fn of(terms: &MinimalTermSet) -> Result<Self> {
        if terms.is_constant_one() {
            return Err(Error::ConstantOne);
        }
        let mut p = Self::zero(terms.n())?;
        for &t in terms.terms() {
            p.entries[t.count_ones() as usize - 1] += 1;
        }
        Ok(p)
    }

    /// Replaces the only nonzero entry `a_i` by `C(n, i) - a_i`.
    pub fn complement(&self) -> Result<Self> {
        let support: Vec<usize> = self.support().collect();
        let [i] = support[..] else {
            return Err(self.invalid("complement needs exactly one nonzero entry"));
        };
        let total = binomial(self.n() as u64, i as u64);
        let a = self.get(i) as u64;
        if a > total {
            return Err(self.invalid("entry exceeds the number of available sets"));
        }
        Ok(self.with(i, (total - a) as u16))
    }

    /// Reverses the first `n - 1` entries, keeping the last in place; this is
    /// the profile of the family of complements of the minimal terms.
    pub fn reverse_dual(&self) -> Self {
        let mut p = *self;
        if self.n() >= 2 {
            p.entries[..self.n() - 1].reverse();
        }
        p
    }

    /// Drops one singleton term: `(a_1, ..., a_n)` over `n` variables becomes
    /// `(a_1 - 1, a_2, ..., a_{n-1})` over `n - 1` variables.
    pub fn strip_singleton(&self) -> Result<Self> {
        let n = self.n();
        if n == 0 || self.get(1) == 0 {
            return Err(self.invalid("no singleton term to strip"));
        }
        if n >= 2 && self.get(n) != 0 || n == 1 && self.get(1) != 1 {
            return Err(self.invalid("a singleton term forces a_n = 0"));
        }
        let mut p = Self::zero(n - 1)?;
        p.entries[..n - 1].copy_from_slice(&self.entries[..n - 1]);
        if n >= 2 {
            p.entries[0] -= 1;
        }
        Ok(p)
    }

    /// True iff some antichain over `n` variables has this profile.
    ///
    /// Checked top-down: the `i`-sets together with the minimum shadow forced
    /// by all larger terms must fit into the `C(n, i)` available `i`-sets.
    pub fn is_feasible(&self) -> bool {
        let n = self.n();
        let mut occupied = 0u64;
        for i in (1..=n).rev() {
            let forced = if i == n {
                0
            } else {
                shadow_bound(n, i + 1, occupied).expect("occupied is within range")
            };
            occupied = self.get(i) as u64 + forced;
            if occupied > binomial(n as u64, i as u64) {
                return false;
            }
        }
        true
    }

    fn invalid(&self, reason: &str) -> Error {
        Error::InvalidProfile {
            profile: self.to_string(),
            reason: reason.to_string(),
        }
    }

    /// File-name friendly form, e.g. `0-2-2-0-0`.
    pub fn file_stem(&self) -> String {
        if self.n == 0 {
            return "empty".into();
        }
        let parts: Vec<String> = self.entries().iter().map(|a| a.to_string()).collect();
        parts.join("-")
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, a) in self.entries().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Profile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::ParseProfile(s.to_string());
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(err)?;
        if inner.trim().is_empty() {
            return Profile::zero(0);
        }
        let entries = inner
            .split(',')
            .map(|e| e.trim().parse::<u16>().map_err(|_| err()))
            .collect::<Result<Vec<_>>>()?;
        Profile::new(&entries).map_err(|_| err())
    }
}

/// Minimum number of `(r-1)`-subsets of `[n]` contained in some member of a
/// family of `x` distinct `r`-subsets.
pub fn shadow_bound(n: usize, r: usize, x: u64) -> Result<u64> {
    if r == 0 || r > n || n > MAX_VARS {
        return Err(Error::OutOfRange(format!("shadow_bound: r={r} with n={n}")));
    }
    if x > binomial(n as u64, r as u64) {
        return Err(Error::OutOfRange(format!(
            "shadow_bound: x={x} exceeds C({n},{r})"
        )));
    }
    Ok(min_shadow(r as u64, x))
}

fn min_shadow(r: u64, x: u64) -> u64 {
    if x == 0 || r == 0 {
        return 0;
    }
    // smallest k with x <= C(k, r)
    let mut k = r;
    while binomial(k, r) < x {
        k += 1;
    }
    min_shadow(r - 1, x - binomial(k - 1, r)) + binomial(k - 1, r - 1)
}

/// The state of the profile-generating dynamic program after it finishes.
#[derive(Debug, Clone)]
pub struct ProfileGenState {
    pub n: usize,
    /// `counts[r][x]`: number of profiles whose rightmost nonzero entry is
    /// `x` at index `r` (column 0 holds running totals).
    pub counts: Vec<Vec<u64>>,
    /// `shadow[r][x]`: minimum shadow of `x` sets of size `r`.
    pub shadow: Vec<Vec<u64>>,
    pub profiles: Vec<Profile>,
}

/// Runs the profile DP for `n` variables, leaving the profiles in emission
/// order.
pub fn run_profile_generation(n: usize) -> Result<ProfileGenState> {
    if n > MAX_PROFILE_VARS {
        return Err(Error::VariableCount {
            n,
            max: MAX_PROFILE_VARS,
        });
    }
    let nn = n as u64;
    let width = binomial(nn, nn / 2) as usize + 1;
    let mut counts = vec![vec![0u64; width]; n + 1];
    let mut shadow = vec![vec![0u64; width]; n + 1];
    counts[0][0] = 1;
    counts[0][1] = 1;
    let mut running: u64 = 2;

    let mut profiles = Vec::with_capacity(n + 1);
    for b in 0..=n {
        let mut p = Profile::zero(n)?;
        if n > 0 {
            p.entries[0] = b as u16;
        }
        profiles.push(p);
    }

    for r in 1..=n {
        let ru = r as u64;
        let mut d = running;
        let mut k = ru;
        let mut j = 0usize;
        running = 0;
        let x_max = binomial(nn, ru) as usize;
        for x in 0..=x_max {
            if x as u64 >= binomial(k, ru) {
                k += 1;
            }
            shadow[r][x] = if x == 0 {
                0
            } else {
                shadow[r - 1][x - binomial(k - 1, ru) as usize] + binomial(k - 1, ru - 1)
            };
            while (j as u64) < shadow[r][x] {
                d -= counts[r - 1][j];
                j += 1;
            }
            counts[r][x] = d;
            running += d;
        }
        if r != 1 {
            let recent_len = (counts[r][0] - counts[r - 1][0]) as usize;
            let recent: Vec<Profile> = profiles[profiles.len() - recent_len..].to_vec();
            for x in 1..=x_max {
                let need = shadow[r][x];
                for row in &recent {
                    let available = row.entries[r - 2] as u64;
                    if available >= need {
                        let mut p = *row;
                        p.entries[r - 2] = (available - need) as u16;
                        p.entries[r - 1] = x as u16;
                        profiles.push(p);
                    }
                }
            }
        }
    }
    // the running total also counts the constant-1 function
    debug_assert_eq!(profiles.len() as u64 + 1, running);
    Ok(ProfileGenState {
        n,
        counts,
        shadow,
        profiles,
    })
}

/// Every realizable profile over `n` variables (including the zero profile),
/// sorted lexicographically.
pub fn generate_profiles(n: usize) -> Result<Vec<Profile>> {
    let mut profiles = run_profile_generation(n)?.profiles;
    profiles.sort_unstable();
    Ok(profiles)
}
