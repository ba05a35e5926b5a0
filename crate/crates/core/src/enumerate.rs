//! Profile-by-profile generation of inequivalent monotone functions.
//!
//! The class list of a profile is built from the list of the profile with
//! its rightmost nonzero entry one smaller, by adding one more minimal term
//! of that size to every class in every admissible way and keeping the
//! least representative of each result.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;

use crate::bits::{self, Ones, MAX_COMPACT_VARS};
use crate::error::{Error, Result};
use crate::math::{binomial, factorial};
use crate::profile::{generate_profiles, Profile};
use crate::store::{self, ResultsDb};
use crate::symmetry::{canonicalize_compact, least_compact, ClassRecord};
use crate::truthtable::TruthTable;

/// Largest `n` that runs without the extended flag.
pub const MAX_DESK_VARS: usize = 6;

/// A least representative together with its automorphism count.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalClass {
    pub(crate) table: u128,
    pub(crate) automorphisms: u32,
}

impl CanonicalClass {
    /// Raw table bits: bit `m` is the value on input set `m`.
    pub fn bits(&self) -> u128 {
        self.table
    }

    pub fn automorphisms(&self) -> u32 {
        self.automorphisms
    }

    pub fn orbit_size(&self, n: usize) -> u64 {
        factorial(n as u64) / self.automorphisms as u64
    }

    pub fn truth_table(&self, n: usize) -> TruthTable {
        TruthTable::from_compact(self.table, n)
    }

    pub fn record(&self, n: usize) -> ClassRecord {
        ClassRecord {
            canonical: self.truth_table(n),
            orbit_size: self.orbit_size(n),
            automorphism_count: self.automorphisms as u64,
        }
    }

    fn of_canonical(table: u128, n: usize) -> Self {
        let (least, automorphisms) = canonicalize_compact(table, n);
        debug_assert_eq!(least, table);
        CanonicalClass {
            table,
            automorphisms,
        }
    }
}

/// All inequivalent functions with one profile, sorted by table.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProfileClassList {
    profile: Profile,
    classes: Vec<CanonicalClass>,
}

impl ProfileClassList {
    /// The single class of the constant-0 function.
    pub fn zero(n: usize) -> Result<Self> {
        check_compact(n)?;
        Ok(ProfileClassList {
            profile: Profile::zero(n)?,
            classes: vec![CanonicalClass {
                table: 0,
                automorphisms: factorial(n as u64) as u32,
            }],
        })
    }

    /// Caller guarantees sorted, distinct, canonical classes of `profile`.
    pub(crate) fn from_sorted(profile: Profile, classes: Vec<CanonicalClass>) -> Self {
        ProfileClassList { profile, classes }
    }

    pub fn n(&self) -> usize {
        self.profile.n()
    }

    pub fn profile(&self) -> Profile {
        self.profile
    }

    pub fn classes(&self) -> &[CanonicalClass] {
        &self.classes
    }

    pub fn records(&self) -> impl Iterator<Item = ClassRecord> + '_ {
        self.classes.iter().map(|c| c.record(self.n()))
    }

    pub fn r_count(&self) -> u64 {
        self.classes.len() as u64
    }

    pub fn d_count(&self) -> u64 {
        self.classes.iter().map(|c| c.orbit_size(self.n())).sum()
    }

    /// Classes fixed by the identity alone.
    pub fn trivial_stabilizer_count(&self) -> u64 {
        self.classes.iter().filter(|c| c.automorphisms == 1).count() as u64
    }

    pub fn counts(&self) -> ProfileCounts {
        ProfileCounts {
            r: self.r_count(),
            d: self.d_count(),
            asymmetric: self.trivial_stabilizer_count(),
        }
    }
}

fn check_compact(n: usize) -> Result<()> {
    if n > MAX_COMPACT_VARS {
        return Err(Error::VariableCount {
            n,
            max: MAX_COMPACT_VARS,
        });
    }
    Ok(())
}

/// Adds one `j`-set to every class of `base` in every admissible way.
///
/// Returns an empty list when the target profile is infeasible.
pub fn extend_profile(base: &ProfileClassList, j: usize) -> Result<ProfileClassList> {
    let n = base.n();
    if j == 0 || j > n {
        return Err(Error::OutOfRange(format!(
            "extension size {j} outside 1..={n}"
        )));
    }
    let target = base.profile.with(j, base.profile.get(j) + 1);
    if !target.is_feasible() {
        return Ok(ProfileClassList::from_sorted(target, Vec::new()));
    }
    let level = bits::level_mask(n, j);
    let found: HashSet<u128> = base
        .classes
        .par_iter()
        .fold(HashSet::new, |mut acc, class| {
            let t = class.table;
            let below = bits::down_closure(bits::minimal_terms(t, n), n);
            for s in Ones(level & !t & !below) {
                let extended = t | bits::up_closure(1u128 << s, n);
                acc.insert(least_compact(extended, n));
            }
            acc
        })
        .reduce(HashSet::new, merge);
    let mut tables: Vec<u128> = found.into_iter().collect();
    tables.sort_unstable();
    let classes: Vec<CanonicalClass> = tables
        .into_par_iter()
        .map(|t| CanonicalClass::of_canonical(t, n))
        .collect();
    if classes.is_empty() {
        log::error!(
            "feasible profile {target} produced no functions from {}",
            base.profile
        );
    }
    Ok(ProfileClassList::from_sorted(target, classes))
}

fn merge(a: HashSet<u128>, b: HashSet<u128>) -> HashSet<u128> {
    let (mut big, small) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    big.extend(small);
    big
}

/// All inequivalent antichains made of exactly `k` distinct `i`-subsets.
pub fn seed_profile(n: usize, i: usize, k: usize) -> Result<ProfileClassList> {
    check_compact(n)?;
    if i == 0 || i > n {
        return Err(Error::OutOfRange(format!("set size {i} outside 1..={n}")));
    }
    let available = binomial(n as u64, i as u64) as usize;
    if k == 0 || k > available {
        return Err(Error::OutOfRange(format!(
            "{k} sets of size {i} requested but C({n},{i}) = {available}"
        )));
    }
    let mut list = ProfileClassList::zero(n)?;
    for _ in 0..k {
        list = extend_profile(&list, i)?;
    }
    Ok(list)
}

/// Builds the class list of a feasible profile along the path that raises
/// the coordinates left to right.
pub fn build_profile_list(profile: Profile) -> Result<ProfileClassList> {
    let n = profile.n();
    check_compact(n)?;
    if !profile.is_feasible() {
        return Err(infeasible(profile));
    }
    let mut steps = Vec::new();
    let mut p = profile;
    while let Some((prev, j)) = p.predecessor() {
        steps.push(j);
        p = prev;
    }
    let mut list = ProfileClassList::zero(n)?;
    for &j in steps.iter().rev() {
        list = extend_profile(&list, j)?;
    }
    Ok(list)
}

fn infeasible(profile: Profile) -> Error {
    Error::InvalidProfile {
        profile: profile.to_string(),
        reason: "no monotone function has this profile".into(),
    }
}

/// `(R-count, D-count)` of a single profile.
pub fn count_profile(n: usize, profile: Profile) -> Result<(u64, u64)> {
    if profile.n() != n {
        return Err(Error::Dimension {
            expected: n,
            found: profile.n(),
        });
    }
    let list = build_profile_list(profile)?;
    Ok((list.r_count(), list.d_count()))
}

/// Class counts of one profile.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct ProfileCounts {
    /// Inequivalent functions.
    pub r: u64,
    /// All functions.
    pub d: u64,
    /// Classes whose only automorphism is the identity.
    pub asymmetric: u64,
}

/// How a profile's counts were obtained.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Source {
    /// Generated and canonicalized.
    Direct,
    /// From the profile with one singleton removed, over `n - 1` variables.
    Singleton,
    /// From the profile of complemented terms.
    ReverseDual,
    /// From the complementary family within one level.
    Complement,
    /// Read back from the results database.
    Resumed,
}

impl Source {
    /// Decides statically how `p` is answered when profiles are processed in
    /// lexicographic order.
    pub fn plan(p: &Profile) -> Source {
        let n = p.n();
        if n >= 1 && p.get(1) > 0 {
            return Source::Singleton;
        }
        let support: Vec<usize> = p.support().collect();
        if let [i] = support[..] {
            let c = binomial(n as u64, i as u64) - p.get(i) as u64;
            if c < p.get(i) as u64 {
                return Source::Complement;
            }
        }
        if p.reverse_dual() < *p {
            return Source::ReverseDual;
        }
        Source::Direct
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ProfileResult {
    pub counts: ProfileCounts,
    pub elapsed_seconds: f64,
    pub source: Source,
}

/// Counts for every profile over `n` variables plus derived totals.
#[derive(Clone, Debug)]
pub struct CountsReport {
    pub n: usize,
    pub per_profile: BTreeMap<Profile, ProfileResult>,
    /// Inequivalent functions, including the constant-1 function.
    pub r_total: u64,
    /// All functions, including the constant-1 function.
    pub d_total: u64,
    /// `k -> (R_k, D_k)`; the constant-1 function is not attributed to any k.
    pub by_k: BTreeMap<usize, (u64, u64)>,
    pub asymmetric_total: u64,
}

impl CountsReport {
    fn assemble(n: usize, per_profile: BTreeMap<Profile, ProfileResult>) -> Self {
        let mut by_k: BTreeMap<usize, (u64, u64)> = BTreeMap::new();
        let mut r_total = 1;
        let mut d_total = 1;
        let mut asymmetric = 0;
        for (p, res) in &per_profile {
            let e = by_k.entry(p.total() as usize).or_default();
            e.0 += res.counts.r;
            e.1 += res.counts.d;
            r_total += res.counts.r;
            d_total += res.counts.d;
            asymmetric += res.counts.asymmetric;
        }
        CountsReport {
            n,
            per_profile,
            r_total,
            d_total,
            by_k,
            // with fewer than two variables nothing can be renamed
            asymmetric_total: if n >= 2 { asymmetric } else { 0 },
        }
    }

    pub fn counts(&self, p: &Profile) -> Option<ProfileCounts> {
        self.per_profile.get(p).map(|r| r.counts)
    }

    /// True when both reports carry the same counts, ignoring timings and
    /// how each count was obtained.
    pub fn same_counts(&self, other: &CountsReport) -> bool {
        self.n == other.n
            && self.r_total == other.r_total
            && self.d_total == other.d_total
            && self.by_k == other.by_k
            && self.asymmetric_total == other.asymmetric_total
            && self.per_profile.len() == other.per_profile.len()
            && self
                .per_profile
                .iter()
                .zip(&other.per_profile)
                .all(|((p, a), (q, b))| p == q && a.counts == b.counts)
    }

    /// CSV with columns `profile,R_count,D_count,elapsed_seconds`, followed
    /// by a `total` row that includes the constant-1 function.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["profile", "R_count", "D_count", "elapsed_seconds"])?;
        let mut elapsed = 0.0;
        for (p, res) in &self.per_profile {
            elapsed += res.elapsed_seconds;
            w.write_record([
                p.to_string(),
                res.counts.r.to_string(),
                res.counts.d.to_string(),
                format!("{:.6}", res.elapsed_seconds),
            ])?;
        }
        w.write_record([
            "total".to_string(),
            self.r_total.to_string(),
            self.d_total.to_string(),
            format!("{elapsed:.6}"),
        ])?;
        w.flush()?;
        Ok(())
    }

    pub fn summary(&self) -> String {
        format!(
            "R({n})={} D({n})={} asymmetric({n})={}",
            self.r_total,
            self.d_total,
            self.asymmetric_total,
            n = self.n
        )
    }
}

/// `R_k(n)`: inequivalent functions with exactly `k` minimal terms.
pub fn count_by_minterms(report: &CountsReport, k: usize) -> u64 {
    report.by_k.get(&k).map_or(0, |e| e.0)
}

/// Classes with no nontrivial automorphism.
pub fn count_asymmetric(report: &CountsReport) -> u64 {
    report.asymmetric_total
}

#[derive(Clone, Debug, Default)]
pub struct CountOptions {
    /// Allows `n = 7`.
    pub extended: bool,
    /// Directory for class lists and the results database.
    pub checkpoint_dir: Option<PathBuf>,
    /// Stops with [`Error::Interrupted`] after this many newly finalized
    /// profile results; simulates a killed run.
    pub stop_after: Option<usize>,
}

/// Counts every profile over `n` variables.
pub fn count_all(n: usize, options: &CountOptions) -> Result<CountsReport> {
    if n > MAX_COMPACT_VARS {
        return Err(Error::VariableCount {
            n,
            max: MAX_COMPACT_VARS,
        });
    }
    if n > MAX_DESK_VARS && !options.extended {
        return Err(Error::ExtendedRequired { n });
    }
    let db = match &options.checkpoint_dir {
        Some(dir) => {
            std::fs::create_dir_all(dir)?;
            Some(ResultsDb::open(dir.join(store::RESULTS_FILE))?)
        }
        None => None,
    };
    let mut session = Session {
        options,
        db,
        finalized: 0,
    };
    session.count(n)
}

struct Session<'a> {
    options: &'a CountOptions,
    db: Option<ResultsDb>,
    finalized: usize,
}

impl Session<'_> {
    fn count(&mut self, n: usize) -> Result<CountsReport> {
        let profiles = generate_profiles(n)?;
        let smaller = if profiles
            .iter()
            .any(|p| Source::plan(p) == Source::Singleton)
        {
            Some(self.count(n - 1)?)
        } else {
            None
        };
        let mut lists = ListCache::new(&profiles, self.list_dir(n));
        let mut per_profile: BTreeMap<Profile, ProfileResult> = BTreeMap::new();

        for p in &profiles {
            if let Some((counts, elapsed_seconds)) = self.db.as_ref().and_then(|db| db.get(n, p)) {
                per_profile.insert(
                    *p,
                    ProfileResult {
                        counts,
                        elapsed_seconds,
                        source: Source::Resumed,
                    },
                );
                continue;
            }
            let start = Instant::now();
            let source = Source::plan(p);
            let counts = match source {
                Source::Singleton => {
                    let inner = smaller
                        .as_ref()
                        .and_then(|r| r.counts(&p.strip_singleton().ok()?))
                        .ok_or_else(|| missing(p))?;
                    singleton_counts(p, inner)
                }
                Source::Complement => lookup(&per_profile, &p.complement()?)?,
                Source::ReverseDual => lookup(&per_profile, &p.reverse_dual())?,
                Source::Direct | Source::Resumed => lists.take(*p)?.counts(),
            };
            let elapsed_seconds = start.elapsed().as_secs_f64();
            log::debug!("n={n} {p}: R={} D={} via {source:?}", counts.r, counts.d);
            if let Some(db) = self.db.as_mut() {
                db.record_result(n, *p, counts, elapsed_seconds)?;
            }
            per_profile.insert(
                *p,
                ProfileResult {
                    counts,
                    elapsed_seconds,
                    source,
                },
            );
            self.finalized += 1;
            if self.options.stop_after.is_some_and(|s| self.finalized >= s) {
                return Err(Error::Interrupted {
                    completed: self.finalized,
                });
            }
        }
        Ok(CountsReport::assemble(n, per_profile))
    }

    fn list_dir(&self, n: usize) -> Option<PathBuf> {
        self.options
            .checkpoint_dir
            .as_ref()
            .map(|d| d.join(format!("n{n}")))
    }
}

fn missing(p: &Profile) -> Error {
    Error::InvalidProfile {
        profile: p.to_string(),
        reason: "related profile has no result".into(),
    }
}

fn lookup(done: &BTreeMap<Profile, ProfileResult>, q: &Profile) -> Result<ProfileCounts> {
    done.get(q).map(|r| r.counts).ok_or_else(|| missing(q))
}

/// Counts of `p` (with `a_1 > 0`) from the counts of `p` minus one singleton
/// over `n - 1` variables.
///
/// Classes correspond one to one. For labelled functions, pairing each
/// function with one of its `a_1` singleton terms gives
/// `a_1 * D(p) = n * D(stripped)`. Automorphisms carry over when there is a
/// single singleton; two or more singletons can always be exchanged.
pub fn singleton_counts(p: &Profile, stripped: ProfileCounts) -> ProfileCounts {
    let n = p.n() as u64;
    let a1 = p.get(1) as u64;
    debug_assert_eq!(n * stripped.d % a1, 0);
    ProfileCounts {
        r: stripped.r,
        d: n * stripped.d / a1,
        asymmetric: if a1 == 1 { stripped.asymmetric } else { 0 },
    }
}

/// Class lists needed while counting, kept only until every profile built
/// from them has been processed.
struct ListCache {
    lists: HashMap<Profile, Arc<ProfileClassList>>,
    pending_children: HashMap<Profile, usize>,
    dir: Option<PathBuf>,
}

impl ListCache {
    fn new(profiles: &[Profile], dir: Option<PathBuf>) -> Self {
        let mut needed: HashSet<Profile> = HashSet::new();
        for p in profiles
            .iter()
            .filter(|p| Source::plan(p) == Source::Direct)
        {
            let mut q = *p;
            while needed.insert(q) {
                match q.predecessor() {
                    Some((prev, _)) => q = prev,
                    None => break,
                }
            }
        }
        let mut pending_children = HashMap::new();
        for q in &needed {
            if let Some((prev, _)) = q.predecessor() {
                *pending_children.entry(prev).or_insert(0) += 1;
            }
        }
        ListCache {
            lists: HashMap::new(),
            pending_children,
            dir,
        }
    }

    /// The list of `p`, consumed by the profile itself.
    fn take(&mut self, p: Profile) -> Result<Arc<ProfileClassList>> {
        let list = self.get(p)?;
        self.release_if_done(&p);
        Ok(list)
    }

    fn get(&mut self, p: Profile) -> Result<Arc<ProfileClassList>> {
        if let Some(list) = self.lists.get(&p) {
            return Ok(list.clone());
        }
        let path = self.dir.as_ref().map(|d| d.join(store::list_file_name(&p)));
        let list = match path.as_ref().filter(|path| path.exists()) {
            Some(path) => {
                let list = store::load_profile_list_for(path, p.n())?;
                if list.profile() != p {
                    return Err(Error::Validation {
                        path: path.clone(),
                        reason: format!("expected profile {p}, found {}", list.profile()),
                    });
                }
                list
            }
            None => {
                let list = match p.predecessor() {
                    None => ProfileClassList::zero(p.n())?,
                    Some((prev, j)) => {
                        let base = self.get(prev)?;
                        let list = extend_profile(&base, j)?;
                        drop(base);
                        if let Some(c) = self.pending_children.get_mut(&prev) {
                            *c = c.saturating_sub(1);
                        }
                        self.release_if_done(&prev);
                        list
                    }
                };
                if let (Some(dir), Some(path)) = (&self.dir, &path) {
                    std::fs::create_dir_all(dir)?;
                    store::save_profile_list(&list, path)?;
                }
                list
            }
        };
        let list = Arc::new(list);
        if self.pending_children.get(&p).copied().unwrap_or(0) > 0 {
            self.lists.insert(p, list.clone());
        }
        Ok(list)
    }

    fn release_if_done(&mut self, p: &Profile) {
        if self.pending_children.get(p).copied().unwrap_or(0) == 0 {
            self.lists.remove(p);
        }
    }
}

/// Every class with at most `max_terms` minimal terms (including the
/// constant-1 function), grouped by term count.
pub fn small_term_classes(n: usize, max_terms: usize) -> Result<Vec<Vec<CanonicalClass>>> {
    check_compact(n)?;
    let full = bits::full_mask(n);
    let mut levels = vec![vec![CanonicalClass {
        table: 0,
        automorphisms: factorial(n as u64) as u32,
    }]];
    for _ in 0..max_terms {
        let prev = levels.last().expect("level 0 exists");
        let found: HashSet<u128> = prev
            .par_iter()
            .fold(HashSet::new, |mut acc, class| {
                let t = class.table;
                let below = bits::down_closure(bits::minimal_terms(t, n), n);
                for s in Ones(full & !t & !below) {
                    acc.insert(least_compact(t | bits::up_closure(1u128 << s, n), n));
                }
                acc
            })
            .reduce(HashSet::new, merge);
        let mut tables: Vec<u128> = found.into_iter().collect();
        tables.sort_unstable();
        levels.push(
            tables
                .into_par_iter()
                .map(|t| CanonicalClass::of_canonical(t, n))
                .collect(),
        );
    }
    Ok(levels)
}

/// `ceil(D(n) / n!)`: every class holds at most `n!` functions.
pub fn lower_bound_r(n: usize, d_n: u128) -> u128 {
    d_n.div_ceil(factorial(n as u64) as u128)
}

/// Lower bound on `R(n)` after accounting exactly for the given classes:
/// `|S| + (D(n) - Σ_S orbit) / n!`, rounded up.
pub fn refined_lower_bound_r(n: usize, d_n: u128, known: &[CanonicalClass]) -> u128 {
    let fact = factorial(n as u64) as u128;
    let slack: u128 = known.iter().map(|c| fact - c.orbit_size(n) as u128).sum();
    (d_n + slack).div_ceil(fact)
}

/// Classes used to refine the lower bound: everything with at most two
/// minimal terms, plus three- and four-term classes fixed by at least six
/// permutations.
pub fn lower_bound_classes(n: usize) -> Result<Vec<CanonicalClass>> {
    let levels = small_term_classes(n, 4)?;
    let mut out: Vec<CanonicalClass> = levels[..3].iter().flatten().copied().collect();
    out.extend(
        levels[3..]
            .iter()
            .flatten()
            .filter(|c| c.automorphisms >= SIMPLE_CLASS_AUTOMORPHISMS),
    );
    Ok(out)
}

const SIMPLE_CLASS_AUTOMORPHISMS: u32 = 6;

/// Writes a report to `path` as CSV.
pub fn write_report(report: &CountsReport, path: &Path) -> Result<()> {
    let file = std::fs::File::create(path)?;
    report.write_csv(std::io::BufWriter::new(file))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(e: &[u16]) -> Profile {
        Profile::new(e).unwrap()
    }

    #[test]
    fn seed_examples() {
        assert_eq!(seed_profile(5, 2, 2).unwrap().r_count(), 2);
        assert_eq!(seed_profile(5, 5, 1).unwrap().r_count(), 1);
        assert_eq!(seed_profile(3, 1, 3).unwrap().r_count(), 1);
        assert!(seed_profile(5, 2, 11).is_err());
        assert!(seed_profile(5, 0, 1).is_err());
    }

    #[test]
    fn extend_examples() {
        let base = seed_profile(5, 2, 2).unwrap();
        let ext = extend_profile(&base, 3).unwrap();
        assert_eq!(ext.profile(), p(&[0, 2, 1, 0, 0]));
        assert_eq!(ext.r_count(), 4);
        let base = seed_profile(5, 3, 6).unwrap();
        assert_eq!(extend_profile(&base, 4).unwrap().r_count(), 1);
    }

    #[test]
    fn extension_outputs_are_antichains_with_target_profile() {
        let base = build_profile_list(p(&[0, 2, 1, 0, 0])).unwrap();
        for j in 1..=5 {
            let ext = extend_profile(&base, j).unwrap();
            for rec in ext.records() {
                let terms = rec.canonical.to_minimal_terms().unwrap();
                assert_eq!(Profile::of(&terms).unwrap(), ext.profile());
            }
        }
    }

    #[test]
    fn infeasible_extension_is_empty() {
        let base = seed_profile(3, 1, 3).unwrap();
        let ext = extend_profile(&base, 2).unwrap();
        assert_eq!(ext.r_count(), 0);
    }

    #[test]
    fn count_profile_examples() {
        assert_eq!(count_profile(5, p(&[0, 2, 2, 0, 0])).unwrap().0, 7);
        assert_eq!(count_profile(5, p(&[0, 0, 0, 0, 0])).unwrap(), (1, 1));
        assert_eq!(count_profile(5, p(&[0, 3, 2, 0, 0])).unwrap().0, 6);
        assert!(count_profile(5, p(&[0, 11, 0, 0, 0])).is_err());
        assert!(count_profile(4, p(&[0, 1, 0, 0, 0])).is_err());
    }

    #[test]
    fn plan_assignments() {
        assert_eq!(Source::plan(&p(&[1, 2, 0, 0, 0])), Source::Singleton);
        assert_eq!(Source::plan(&p(&[0, 0, 7, 0, 0])), Source::Complement);
        assert_eq!(Source::plan(&p(&[0, 0, 3, 0, 0])), Source::Direct);
        assert_eq!(Source::plan(&p(&[0, 1, 3, 0, 0])), Source::Direct);
        assert_eq!(Source::plan(&p(&[0, 3, 1, 0, 0])), Source::ReverseDual);
    }

    #[test]
    fn small_totals() {
        let opts = CountOptions::default();
        let totals: Vec<(u64, u64)> = (0..=4)
            .map(|n| {
                let r = count_all(n, &opts).unwrap();
                (r.r_total, r.d_total)
            })
            .collect();
        assert_eq!(totals, vec![(2, 2), (3, 3), (5, 6), (10, 20), (30, 168)]);
    }

    #[test]
    fn seven_variables_need_extended_flag() {
        assert!(matches!(
            count_all(7, &CountOptions::default()),
            Err(Error::ExtendedRequired { n: 7 })
        ));
        assert!(count_all(8, &CountOptions::default()).is_err());
    }

    #[test]
    fn lower_bound_arithmetic() {
        assert_eq!(lower_bound_r(2, 6), 3);
        assert_eq!(lower_bound_r(1, 3), 3);
        let naive = lower_bound_r(7, 2_414_682_040_998);
        assert!(naive >= 479_103_580);
    }

    #[test]
    fn small_term_levels_match_known_counts() {
        let levels = small_term_classes(3, 3).unwrap();
        let sizes: Vec<usize> = levels.iter().map(|l| l.len()).collect();
        // 0: constant 0; 1: {}, {1}, {1,2}, {1,2,3}; 2: ...; 3: ...
        assert_eq!(sizes[0], 1);
        assert_eq!(sizes[1], 4);
        assert_eq!(sizes.iter().sum::<usize>(), 10);
    }
}
