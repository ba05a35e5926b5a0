//! The action of variable renaming on truth tables and canonical
//! ("least representative") forms of orbits.
//!
//! The canonical form of a table is the lexicographically smallest table in
//! its orbit, comparing position strings from position 0 with `0 < 1`.

use std::cmp::Ordering;
use std::fmt;
use std::sync::OnceLock;

use crate::bits::{Transposition, MAX_COMPACT_VARS};
use crate::error::{Error, Result};
use crate::math::factorial;
use crate::truthtable::{TruthTable, MAX_VARS};

/// A bijection on the variables `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VariablePermutation {
    n: u8,
    image: [u8; MAX_VARS],
}

impl VariablePermutation {
    pub fn identity(n: usize) -> Result<Self> {
        if n > MAX_VARS {
            return Err(Error::VariableCount { n, max: MAX_VARS });
        }
        let mut image = [0u8; MAX_VARS];
        for (i, v) in image.iter_mut().enumerate() {
            *v = i as u8;
        }
        Ok(VariablePermutation { n: n as u8, image })
    }

    /// From 1-based images: `images[i - 1]` is where variable `i` goes.
    pub fn new(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut p = Self::identity(n)?;
        let mut seen = [false; MAX_VARS];
        for (i, &v) in images.iter().enumerate() {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::Permutation(format!(
                    "{images:?} is not a bijection on 1..={n}"
                )));
            }
            seen[v - 1] = true;
            p.image[i] = (v - 1) as u8;
        }
        Ok(p)
    }

    /// Exchanges variables `a` and `b` (1-based).
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        let mut images: Vec<usize> = (1..=n).collect();
        if a == 0 || b == 0 || a > n || b > n {
            return Err(Error::Permutation(format!("({a} {b}) outside 1..={n}")));
        }
        images.swap(a - 1, b - 1);
        Self::new(&images)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// Image of variable `i` (1-based).
    pub fn image(&self, i: usize) -> usize {
        self.image[i - 1] as usize + 1
    }

    pub fn inverse(&self) -> Self {
        let mut inv = self.clone();
        for i in 0..self.n() {
            inv.image[self.image[i] as usize] = i as u8;
        }
        inv
    }

    /// `self` after `first`: variable `i` goes to `self(first(i))`.
    pub fn compose(&self, first: &Self) -> Result<Self> {
        if self.n != first.n {
            return Err(Error::Dimension {
                expected: self.n(),
                found: first.n(),
            });
        }
        let mut out = self.clone();
        for i in 0..self.n() {
            out.image[i] = self.image[first.image[i] as usize];
        }
        Ok(out)
    }

    /// Renames the variables in the input set `set`.
    #[inline]
    pub fn apply_to_set(&self, set: u32) -> u32 {
        let mut out = 0;
        for i in 0..self.n() {
            if set >> i & 1 == 1 {
                out |= 1 << self.image[i];
            }
        }
        out
    }

    /// All `n!` permutations, in no particular order.
    pub fn all(n: usize) -> Result<Vec<Self>> {
        let mut current = Self::identity(n)?;
        let mut out = vec![current.clone()];
        for (a, b) in heap_swaps(n) {
            current.image.swap(a, b);
            out.push(current.clone());
        }
        Ok(out)
    }
}

impl fmt::Debug for VariablePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let images: Vec<usize> = (1..=self.n()).map(|i| self.image(i)).collect();
        write!(f, "VariablePermutation({images:?})")
    }
}

/// Renames the variables of `t`: every input set `S` of the result takes the
/// value `t` has on `p⁻¹(S)`, so a term `{i, j}` becomes `{p(i), p(j)}`.
pub fn apply_permutation(t: &TruthTable, p: &VariablePermutation) -> Result<TruthTable> {
    if t.n() != p.n() {
        return Err(Error::Dimension {
            expected: t.n(),
            found: p.n(),
        });
    }
    let mut out = TruthTable::zeros(t.n())?;
    for m in 0..1u32 << t.n() {
        if t.value(m) {
            out.set_value(p.apply_to_set(m), true);
        }
    }
    Ok(out)
}

/// Compares two tables as position strings, position 0 first.
pub fn lex_cmp(a: &TruthTable, b: &TruthTable) -> Ordering {
    debug_assert_eq!(a.n(), b.n());
    (0..a.len())
        .map(|j| a.get(j).cmp(&b.get(j)))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

/// One equivalence class: its least representative, orbit size and number of
/// variable permutations fixing it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClassRecord {
    pub canonical: TruthTable,
    pub orbit_size: u64,
    pub automorphism_count: u64,
}

impl ClassRecord {
    pub fn n(&self) -> usize {
        self.canonical.n()
    }

    /// True when only the identity fixes the function and there are at least
    /// two variables to permute.
    pub fn is_asymmetric(&self) -> bool {
        self.n() >= 2 && self.automorphism_count == 1
    }
}

/// Index pairs of the swaps that walk Heap's algorithm through all `n!`
/// permutations, starting from the identity.
fn heap_swaps(n: usize) -> Vec<(usize, usize)> {
    let mut swaps = Vec::with_capacity(factorial(n as u64) as usize);
    let mut c = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if c[i] < i {
            let a = if i % 2 == 0 { 0 } else { c[i] };
            swaps.push((a, i));
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    swaps
}

fn swap_chain(n: usize) -> &'static [Transposition] {
    static CHAINS: [OnceLock<Vec<Transposition>>; MAX_COMPACT_VARS + 1] =
        [const { OnceLock::new() }; MAX_COMPACT_VARS + 1];
    CHAINS[n].get_or_init(|| {
        heap_swaps(n)
            .into_iter()
            .map(|(a, b)| Transposition::new(a, b, n))
            .collect()
    })
}

/// Least representative and automorphism count of a compact table on at most
/// seven variables. The table need not be monotone.
pub(crate) fn canonicalize_compact(t: u128, n: usize) -> (u128, u32) {
    let mut current = t;
    let mut least = t;
    let mut fixed = 1u32;
    for &swap in swap_chain(n) {
        current = swap.apply(current);
        if current < least {
            least = current;
        }
        fixed += (current == t) as u32;
    }
    (least, fixed)
}

/// Least representative only; skips automorphism counting.
pub(crate) fn least_compact(t: u128, n: usize) -> u128 {
    swap_chain(n)
        .iter()
        .fold((t, t), |(cur, least), swap| {
            let next = swap.apply(cur);
            (next, least.min(next))
        })
        .1
}

fn canonicalize_general(t: &TruthTable) -> Result<(TruthTable, u64)> {
    let mut least = t.clone();
    let mut fixed = 0u64;
    for p in VariablePermutation::all(t.n())? {
        let image = apply_permutation(t, &p)?;
        if lex_cmp(&image, &least).is_lt() {
            least = image.clone();
        }
        if &image == t {
            fixed += 1;
        }
    }
    Ok((least, fixed))
}

/// Canonical form, orbit size and automorphism count of a monotone table.
pub fn canonical_form(t: &TruthTable) -> Result<ClassRecord> {
    if !t.is_monotone() {
        return Err(Error::NotMonotone);
    }
    let n = t.n();
    let (canonical, automorphism_count) = if n <= MAX_COMPACT_VARS {
        let (least, fixed) = canonicalize_compact(t.to_compact()?, n);
        (TruthTable::from_compact(least, n), fixed as u64)
    } else {
        canonicalize_general(t)?
    };
    Ok(ClassRecord {
        canonical,
        orbit_size: factorial(n as u64) / automorphism_count,
        automorphism_count,
    })
}

/// Canonical form computed by applying every permutation as a full gather;
/// slower, independent of the swap-chain path.
pub fn canonical_form_by_gather(t: &TruthTable) -> Result<ClassRecord> {
    if !t.is_monotone() {
        return Err(Error::NotMonotone);
    }
    let (canonical, automorphism_count) = canonicalize_general(t)?;
    Ok(ClassRecord {
        canonical,
        orbit_size: factorial(t.n() as u64) / automorphism_count,
        automorphism_count,
    })
}

pub fn is_asymmetric(t: &TruthTable) -> Result<bool> {
    Ok(canonical_form(t)?.is_asymmetric())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::truthtable::MinimalTermSet;

    fn table(n: usize, sets: &[&[usize]]) -> TruthTable {
        MinimalTermSet::from_sets(n, sets).unwrap().to_truth_table()
    }

    #[test]
    fn swap_renames_terms() {
        let f = table(3, &[&[1, 2], &[2, 3]]);
        let g =
            apply_permutation(&f, &VariablePermutation::transposition(3, 1, 2).unwrap()).unwrap();
        assert_eq!(g, table(3, &[&[1, 2], &[1, 3]]));
    }

    #[test]
    fn identity_and_inverse() {
        let f = table(4, &[&[1], &[2, 3, 4]]);
        let id = VariablePermutation::identity(4).unwrap();
        assert_eq!(apply_permutation(&f, &id).unwrap(), f);
        let p = VariablePermutation::new(&[3, 1, 4, 2]).unwrap();
        let g = apply_permutation(&f, &p).unwrap();
        assert_eq!(apply_permutation(&g, &p.inverse()).unwrap(), f);
        assert_eq!(p.compose(&p.inverse()).unwrap(), id);
    }

    #[test]
    fn permutation_validation() {
        assert!(VariablePermutation::new(&[1, 1, 3]).is_err());
        assert!(VariablePermutation::new(&[0, 1]).is_err());
        let f = TruthTable::zeros(3).unwrap();
        let p = VariablePermutation::identity(2).unwrap();
        assert!(matches!(
            apply_permutation(&f, &p),
            Err(Error::Dimension { .. })
        ));
    }

    #[test]
    fn heap_chain_visits_every_permutation_once() {
        for n in 0..=6 {
            let all = VariablePermutation::all(n).unwrap();
            assert_eq!(all.len() as u64, factorial(n as u64));
            let set: std::collections::HashSet<_> = all.into_iter().collect();
            assert_eq!(set.len() as u64, factorial(n as u64));
        }
    }

    #[test]
    fn singleton_functions_share_a_class() {
        let x2 = table(2, &[&[2]]);
        let x1 = table(2, &[&[1]]);
        let rec = canonical_form(&x2).unwrap();
        assert_eq!(rec.canonical, x1);
        assert_eq!(rec.orbit_size, 2);
        assert_eq!(rec.automorphism_count, 1);
        assert!(rec.is_asymmetric());
    }

    #[test]
    fn constants_are_fixed_by_everything() {
        for n in 0..=5 {
            let z = TruthTable::zeros(n).unwrap();
            let rec = canonical_form(&z).unwrap();
            assert_eq!(rec.canonical, z);
            assert_eq!(rec.orbit_size, 1);
            assert_eq!(rec.automorphism_count, factorial(n as u64));
            assert!(!is_asymmetric(&z).unwrap());
            assert!(!is_asymmetric(&TruthTable::ones(n).unwrap()).unwrap());
        }
    }

    #[test]
    fn non_monotone_rejected() {
        let t = TruthTable::from_bit_string("01000000").unwrap();
        assert!(matches!(canonical_form(&t), Err(Error::NotMonotone)));
        assert!(is_asymmetric(&t).is_err());
    }

    #[test]
    fn three_variable_classes() {
        let mut reps = std::collections::HashSet::new();
        let mut total = 0;
        for bits in 0u32..256 {
            let t = TruthTable::from_fn(3, |m| bits >> m & 1 == 1).unwrap();
            if t.is_monotone() {
                total += 1;
                reps.insert(canonical_form(&t).unwrap().canonical.to_bit_string());
            }
        }
        assert_eq!(total, 20);
        assert_eq!(reps.len(), 10);
    }

    #[test]
    fn fast_and_gather_paths_agree() {
        for bits in 0u32..(1 << 16) {
            let t = TruthTable::from_fn(4, |m| bits >> m & 1 == 1).unwrap();
            if t.is_monotone() {
                assert_eq!(
                    canonical_form(&t).unwrap(),
                    canonical_form_by_gather(&t).unwrap()
                );
            }
        }
    }

    #[test]
    fn general_path_handles_eight_variables() {
        let t = table(8, &[&[8], &[1, 2]]);
        let rec = canonical_form(&t).unwrap();
        assert_eq!(rec.automorphism_count, 2 * 120);
        assert_eq!(rec.orbit_size, 40320 / 240);
        assert_eq!(
            rec.canonical,
            canonical_form(&table(8, &[&[3], &[5, 7]]))
                .unwrap()
                .canonical
        );
    }

    #[test]
    fn least_representative_is_lexicographic_minimum() {
        let t = table(3, &[&[1], &[2, 3]]);
        let rec = canonical_form(&t).unwrap();
        for p in VariablePermutation::all(3).unwrap() {
            let image = apply_permutation(&t, &p).unwrap();
            assert!(lex_cmp(&rec.canonical, &image).is_le());
        }
        assert_eq!(rec.orbit_size, 3);
    }
}
