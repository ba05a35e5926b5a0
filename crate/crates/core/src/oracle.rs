//! Brute-force reference implementations for small `n`.
//!
//! Nothing here calls into the fast paths: tables are plain `u64` bitmaps
//! (bit `m` is the value on input set `m`), monotonicity is checked over all
//! comparable pairs, and orbits are found by applying every permutation
//! produced by a lexicographic successor function.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::profile::Profile;
use crate::truthtable::TruthTable;

const MAX_FILTER_VARS: usize = 4;
const MAX_ORACLE_VARS: usize = 5;

fn to_table(n: usize, bits: u64) -> TruthTable {
    TruthTable::from_fn(n, |m| bits >> m & 1 == 1).expect("n is small")
}

fn monotone_by_pairs(n: usize, bits: u64) -> bool {
    let size = 1u32 << n;
    for s in 0..size {
        if bits >> s & 1 == 0 {
            continue;
        }
        for t in 0..size {
            if s & t == s && bits >> t & 1 == 0 {
                return false;
            }
        }
    }
    true
}

/// Raw monotone bitmaps over `n <= 4` variables by filtering all `2^(2^n)`
/// Boolean functions.
fn filtered_monotone(n: usize) -> Result<Vec<u64>> {
    if n > MAX_FILTER_VARS {
        return Err(Error::VariableCount {
            n,
            max: MAX_FILTER_VARS,
        });
    }
    let count = 1u64 << (1u32 << n);
    Ok((0..count).filter(|&b| monotone_by_pairs(n, b)).collect())
}

/// Raw monotone bitmaps over `n <= 5` variables: a monotone function is a
/// pair `g <= h` of monotone functions of the first `n - 1` variables
/// (`g` where the last variable is false, `h` where it is true).
fn recursive_monotone(n: usize) -> Result<Vec<u64>> {
    if n > MAX_ORACLE_VARS {
        return Err(Error::VariableCount {
            n,
            max: MAX_ORACLE_VARS,
        });
    }
    if n == 0 {
        return Ok(vec![0, 1]);
    }
    let smaller = recursive_monotone(n - 1)?;
    let half = 1u32 << (n - 1);
    let mut out = Vec::new();
    for &h in &smaller {
        for &g in &smaller {
            if g & !h == 0 {
                out.push(g | (h << half));
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Every monotone table over `n <= 4` variables.
pub fn brute_monotone_tables(n: usize) -> Result<Vec<TruthTable>> {
    Ok(filtered_monotone(n)?
        .into_iter()
        .map(|b| to_table(n, b))
        .collect())
}

/// Next permutation in lexicographic order; `false` after the last one.
fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len())
        .rev()
        .find(|&j| p[j] > p[i - 1])
        .expect("pivot exists");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn permute_bits(n: usize, bits: u64, perm: &[usize]) -> u64 {
    let mut out = 0;
    for m in 0..1u32 << n {
        if bits >> m & 1 == 1 {
            let mut image = 0u32;
            for (i, &to) in perm.iter().enumerate() {
                if m >> i & 1 == 1 {
                    image |= 1 << to;
                }
            }
            out |= 1 << image;
        }
    }
    out
}

fn orbits_of(n: usize, functions: &[u64]) -> Vec<Vec<u64>> {
    let mut class_of: HashMap<u64, usize> = HashMap::new();
    let mut classes: Vec<Vec<u64>> = Vec::new();
    for &f in functions {
        if class_of.contains_key(&f) {
            continue;
        }
        let id = classes.len();
        let mut orbit = BTreeSet::new();
        let mut perm: Vec<usize> = (0..n).collect();
        loop {
            orbit.insert(permute_bits(n, f, &perm));
            if !next_permutation(&mut perm) {
                break;
            }
        }
        for &g in &orbit {
            class_of.insert(g, id);
        }
        classes.push(orbit.into_iter().collect());
    }
    classes
}

/// Monotone functions over `n <= 5` variables partitioned into orbits of the
/// variable-renaming action.
pub fn brute_classes(n: usize) -> Result<Vec<Vec<TruthTable>>> {
    let functions = if n <= MAX_FILTER_VARS {
        filtered_monotone(n)?
    } else {
        recursive_monotone(n)?
    };
    Ok(orbits_of(n, &functions)
        .into_iter()
        .map(|orbit| orbit.into_iter().map(|b| to_table(n, b)).collect())
        .collect())
}

/// Profiles of all monotone functions over `n <= 5` variables other than the
/// constant 1, with `(R, D)` counts.
pub fn brute_profile_census(n: usize) -> Result<HashMap<Profile, (u64, u64)>> {
    let functions = recursive_monotone(n)?;
    let mut census: HashMap<Profile, (u64, u64)> = HashMap::new();
    for orbit in orbits_of(n, &functions) {
        let f = orbit[0];
        let mut entries = vec![0u16; n];
        let mut constant_one = false;
        for m in 0..1u32 << n {
            let minimal =
                f >> m & 1 == 1 && (0..n).all(|i| m >> i & 1 == 0 || f >> (m & !(1 << i)) & 1 == 0);
            if minimal {
                match m.count_ones() {
                    0 => constant_one = true,
                    k => entries[k as usize - 1] += 1,
                }
            }
        }
        if constant_one {
            continue;
        }
        let e = census.entry(Profile::new(&entries)?).or_default();
        e.0 += 1;
        e.1 += orbit.len() as u64;
    }
    Ok(census)
}

/// Minimum number of `(r-1)`-sets below some member of a family of `x`
/// distinct `r`-subsets of `[n]`, by trying every family.
pub fn brute_min_shadow(n: usize, r: usize, x: usize) -> Result<u64> {
    if r == 0 || r > n {
        return Err(Error::OutOfRange(format!("r={r} with n={n}")));
    }
    let sets: Vec<u32> = (0..1u32 << n)
        .filter(|s| s.count_ones() as usize == r)
        .collect();
    if sets.len() > 20 {
        return Err(Error::OutOfRange(format!(
            "{} candidate sets is too many to enumerate families",
            sets.len()
        )));
    }
    if x > sets.len() {
        return Err(Error::OutOfRange(format!("x={x} exceeds C({n},{r})")));
    }
    let mut best = u64::MAX;
    for family in 0u32..1 << sets.len() {
        if family.count_ones() as usize != x {
            continue;
        }
        let mut shadow = BTreeSet::new();
        for (k, &s) in sets.iter().enumerate() {
            if family >> k & 1 == 1 {
                for i in 0..n {
                    if s >> i & 1 == 1 {
                        shadow.insert(s & !(1 << i));
                    }
                }
            }
        }
        best = best.min(shadow.len() as u64);
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_variable_tables() {
        let mut got: Vec<String> = brute_monotone_tables(2)
            .unwrap()
            .iter()
            .map(|t| t.to_bit_string())
            .collect();
        got.sort();
        let mut want = vec!["1111", "1110", "1100", "1010", "1000", "0000"];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn monotone_counts() {
        let counts: Vec<usize> = (0..=4)
            .map(|n| brute_monotone_tables(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![2, 3, 6, 20, 168]);
        assert_eq!(recursive_monotone(5).unwrap().len(), 7581);
        assert!(brute_monotone_tables(5).is_err());
    }

    #[test]
    fn recursive_and_filtered_agree() {
        for n in 0..=4 {
            assert_eq!(
                recursive_monotone(n).unwrap(),
                filtered_monotone(n).unwrap()
            );
        }
    }

    #[test]
    fn class_counts() {
        assert_eq!(brute_classes(2).unwrap().len(), 5);
        assert_eq!(brute_classes(4).unwrap().len(), 30);
        assert_eq!(brute_classes(5).unwrap().len(), 210);
    }

    #[test]
    fn shadow_examples() {
        for x in 1..=5 {
            assert_eq!(brute_min_shadow(5, 1, x).unwrap(), 1);
        }
        assert_eq!(brute_min_shadow(4, 2, 6).unwrap(), 4);
        assert_eq!(brute_min_shadow(5, 3, 10).unwrap(), 10);
        assert_eq!(brute_min_shadow(5, 3, 0).unwrap(), 0);
        assert!(brute_min_shadow(7, 3, 1).is_err());
    }

    #[test]
    fn permutation_successor_covers_all() {
        let mut p = vec![0, 1, 2, 3];
        let mut count = 1;
        while next_permutation(&mut p) {
            count += 1;
        }
        assert_eq!(count, 24);
    }
}
