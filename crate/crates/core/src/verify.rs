//! Cross-checks of the fast paths against the brute-force oracles.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use crate::enumerate::{
    build_profile_list, count_all, singleton_counts, CountOptions, CountsReport, Source,
};
use crate::error::{Error, Result};
use crate::estimate::{DEDEKIND, INEQUIVALENT};
use crate::math::binomial;
use crate::oracle;
use crate::profile::{generate_profiles, shadow_bound, Profile};
use crate::symmetry::{apply_permutation, canonical_form, ClassRecord, VariablePermutation};
use crate::truthtable::TruthTable;

/// Largest `n` accepted by [`verify`].
pub const MAX_VERIFY_VARS: usize = 6;

#[derive(Clone, Debug)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {}: {}", self.name, self.detail)
    }
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub n: usize,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

pub type Canonicalizer<'a> = &'a dyn Fn(&TruthTable) -> Result<ClassRecord>;

pub fn verify(n: usize) -> Result<VerifyReport> {
    verify_with(n, &canonical_form)
}

/// Runs every check that is affordable for `n`, using `canon` wherever the
/// checks canonicalize individual tables.
pub fn verify_with(n: usize, canon: Canonicalizer<'_>) -> Result<VerifyReport> {
    if n > MAX_VERIFY_VARS {
        return Err(Error::VariableCount {
            n,
            max: MAX_VERIFY_VARS,
        });
    }
    let profiles = generate_profiles(n)?;
    let report = count_all(n, &CountOptions::default())?;
    let mut checks = Vec::new();

    checks.push(check(
        "known totals",
        report.r_total == INEQUIVALENT[n] && report.d_total == DEDEKIND[n] as u64,
        format!("R({n})={} D({n})={}", report.r_total, report.d_total),
    ));
    if n <= 4 {
        checks.push(monotone_tables(n, &profiles)?);
    }
    if n <= 5 {
        checks.push(class_partition(n, &profiles, canon)?);
        checks.push(census(n, &report)?);
        checks.push(shadows(n)?);
    }
    checks.push(relations(&report)?);
    Ok(VerifyReport { n, checks })
}

fn check(name: &'static str, passed: bool, detail: String) -> Check {
    Check {
        name,
        passed,
        detail,
    }
}

fn constant_one(n: usize) -> TruthTable {
    TruthTable::ones(n).expect("n is within range")
}

/// Every class representative from the profile lists, plus constant 1.
fn fast_representatives(n: usize, profiles: &[Profile]) -> Result<Vec<TruthTable>> {
    let mut out = vec![constant_one(n)];
    for p in profiles {
        out.extend(
            build_profile_list(*p)?
                .classes()
                .iter()
                .map(|c| c.truth_table(n)),
        );
    }
    Ok(out)
}

/// The fast path's classes, expanded by all permutations, give exactly the
/// oracle's monotone tables.
fn monotone_tables(n: usize, profiles: &[Profile]) -> Result<Check> {
    let perms = VariablePermutation::all(n)?;
    let mut fast = BTreeSet::new();
    for rep in fast_representatives(n, profiles)? {
        for p in &perms {
            fast.insert(apply_permutation(&rep, p)?.to_bit_string());
        }
    }
    let brute: BTreeSet<String> = oracle::brute_monotone_tables(n)?
        .iter()
        .map(|t| t.to_bit_string())
        .collect();
    Ok(check(
        "monotone tables",
        fast == brute,
        format!(
            "{} from classes, {} by brute force",
            fast.len(),
            brute.len()
        ),
    ))
}

/// Each oracle orbit maps to one canonical record with matching orbit size,
/// distinct orbits to distinct records, and the records are the fast path's
/// representatives.
fn class_partition(n: usize, profiles: &[Profile], canon: Canonicalizer<'_>) -> Result<Check> {
    let orbits = oracle::brute_classes(n)?;
    let mut seen = HashSet::new();
    let mut problems = Vec::new();
    for orbit in &orbits {
        let first = canon(&orbit[0])?;
        if first.orbit_size != orbit.len() as u64 {
            problems.push(format!(
                "orbit of {} has size {} but record says {}",
                orbit[0],
                orbit.len(),
                first.orbit_size
            ));
        }
        for t in &orbit[1..] {
            if canon(t)? != first {
                problems.push(format!("{t} and {} canonicalize differently", orbit[0]));
                break;
            }
        }
        if !seen.insert(first.canonical.to_bit_string()) {
            problems.push(format!("two orbits share canonical {}", first.canonical));
        }
    }
    let fast: HashSet<String> = fast_representatives(n, profiles)?
        .iter()
        .map(|t| t.to_bit_string())
        .collect();
    if fast != seen {
        problems.push("canonical forms differ from profile-list representatives".into());
    }
    let detail = match problems.first() {
        None => format!("{} classes", orbits.len()),
        Some(first) => format!("{} problems, first: {first}", problems.len()),
    };
    Ok(check("class partition", problems.is_empty(), detail))
}

/// Profiles and per-profile counts agree with a census of brute-force orbits.
fn census(n: usize, report: &CountsReport) -> Result<Check> {
    let brute = oracle::brute_profile_census(n)?;
    let generated: HashSet<Profile> = generate_profiles(n)?.into_iter().collect();
    let brute_profiles: HashSet<Profile> = brute.keys().copied().collect();
    let mut mismatched = 0;
    for (p, &(r, d)) in &brute {
        match report.counts(p) {
            Some(c) if c.r == r && c.d == d => {}
            _ => mismatched += 1,
        }
    }
    Ok(check(
        "profile census",
        generated == brute_profiles && mismatched == 0 && report.per_profile.len() == brute.len(),
        format!(
            "{} generated, {} observed, {mismatched} count mismatches",
            generated.len(),
            brute.len()
        ),
    ))
}

fn shadows(n: usize) -> Result<Check> {
    let mut compared = 0;
    let mut bad = Vec::new();
    for r in 1..=n {
        for x in 0..=binomial(n as u64, r as u64) as usize {
            compared += 1;
            let fast = shadow_bound(n, r, x as u64)?;
            let brute = oracle::brute_min_shadow(n, r, x)?;
            if fast != brute {
                bad.push(format!("({n},{r},{x}): {fast} vs {brute}"));
            }
        }
    }
    Ok(check(
        "shadow bounds",
        bad.is_empty(),
        format!("{compared} compared, {} mismatches {bad:?}", bad.len()),
    ))
}

/// Profiles answered through a related profile agree with a direct build.
fn relations(report: &CountsReport) -> Result<Check> {
    let mut compared = HashMap::new();
    let mut bad = Vec::new();
    for (p, res) in &report.per_profile {
        match res.source {
            Source::Direct | Source::Resumed => continue,
            Source::Singleton => {
                if let Err(e) = check_singleton(p, report) {
                    bad.push(e);
                }
            }
            Source::Complement | Source::ReverseDual => {}
        }
        let list = build_profile_list(*p)?;
        if list.r_count() != res.counts.r || list.d_count() != res.counts.d {
            bad.push(format!(
                "{p} via {:?}: R={} D={}, direct R={} D={}",
                res.source,
                res.counts.r,
                res.counts.d,
                list.r_count(),
                list.d_count()
            ));
        }
        *compared.entry(format!("{:?}", res.source)).or_insert(0) += 1;
    }
    let mut kinds: Vec<String> = compared.iter().map(|(k, v)| format!("{k}={v}")).collect();
    kinds.sort();
    let detail = match bad.first() {
        None => format!("direct builds agree ({})", kinds.join(" ")),
        Some(first) => format!("{} mismatches, first: {first}", bad.len()),
    };
    Ok(check("profile relations", bad.is_empty(), detail))
}

/// Rebuilds the stripped profile over `n - 1` variables and checks the
/// singleton relation from it.
fn check_singleton(p: &Profile, report: &CountsReport) -> std::result::Result<(), String> {
    let stripped = p.strip_singleton().map_err(|e| e.to_string())?;
    let list = build_profile_list(stripped).map_err(|e| e.to_string())?;
    let derived = singleton_counts(p, list.counts());
    match report.counts(p) {
        Some(c) if c == derived => Ok(()),
        other => Err(format!(
            "{p}: stored {other:?}, from {stripped} {derived:?}"
        )),
    }
}
