//! On-disk class lists and the append-only results database.
//!
//! A class-list file starts with a short text header
//!
//! ```text
//! mbfkit-profile-list
//! version 1
//! n 5
//! profile (0,2,2,0,0)
//! classes 7
//! end
//! ```
//!
//! followed by one binary record per class: the packed 32-bit words of the
//! canonical table (little-endian, word 0 first), then the orbit size as a
//! little-endian `u32`.

use std::collections::HashMap;
use std::fs::{self, File, OpenOptions};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use rayon::prelude::*;

use crate::bits;
use crate::enumerate::{CanonicalClass, ProfileClassList, ProfileCounts};
use crate::error::{Error, Result};
use crate::math::factorial;
use crate::profile::Profile;
use crate::symmetry::canonicalize_compact;
use crate::truthtable::{packed_len, TruthTable};

pub const FORMAT_VERSION: u32 = 1;
const MAGIC: &str = "mbfkit-profile-list";

/// File name of the results database inside a checkpoint directory.
pub const RESULTS_FILE: &str = "results.csv";

pub fn list_file_name(p: &Profile) -> String {
    format!("{}.mbf", p.file_stem())
}

/// Writes `list` to `path` via a temporary file and a rename, so a partial
/// write never leaves a loadable file behind.
pub fn save_profile_list(list: &ProfileClassList, path: &Path) -> Result<()> {
    let n = list.n();
    let tmp = path.with_extension("mbf.tmp");
    {
        let mut w = BufWriter::new(File::create(&tmp)?);
        write!(
            w,
            "{MAGIC}\nversion {FORMAT_VERSION}\nn {n}\nprofile {}\nclasses {}\nend\n",
            list.profile(),
            list.classes().len()
        )?;
        for class in list.classes() {
            for word in class.truth_table(n).pack() {
                w.write_all(&word.to_le_bytes())?;
            }
            w.write_all(&(class.orbit_size(n) as u32).to_le_bytes())?;
        }
        w.flush()?;
        w.get_ref().sync_all()?;
    }
    fs::rename(&tmp, path)?;
    Ok(())
}

pub fn load_profile_list(path: &Path) -> Result<ProfileClassList> {
    load(path, None)
}

/// Loads and additionally requires the file to be over `n` variables.
pub fn load_profile_list_for(path: &Path, n: usize) -> Result<ProfileClassList> {
    load(path, Some(n))
}

fn load(path: &Path, expected_n: Option<usize>) -> Result<ProfileClassList> {
    let bytes = fs::read(path)?;
    let invalid = |reason: String| Error::Validation {
        path: path.to_path_buf(),
        reason,
    };

    let mut lines = Vec::new();
    let mut offset = 0;
    while lines.last() != Some(&"end") {
        let rest = &bytes[offset..];
        let Some(len) = rest.iter().position(|&b| b == b'\n') else {
            return Err(invalid("header is not terminated".into()));
        };
        let line =
            std::str::from_utf8(&rest[..len]).map_err(|_| invalid("header is not text".into()))?;
        lines.push(line);
        offset += len + 1;
        if lines.len() > 6 {
            return Err(invalid("header has too many lines".into()));
        }
    }
    if lines.first() != Some(&MAGIC) {
        return Err(invalid("missing file signature".into()));
    }
    let field = |idx: usize, key: &str| -> Result<&str> {
        lines
            .get(idx)
            .and_then(|l| l.strip_prefix(key))
            .and_then(|v| v.strip_prefix(' '))
            .ok_or_else(|| invalid(format!("missing header field {key:?}")))
    };
    let version: u32 = field(1, "version")?
        .parse()
        .map_err(|_| invalid("bad version".into()))?;
    if version != FORMAT_VERSION {
        return Err(Error::Version {
            path: path.to_path_buf(),
            found: version,
            expected: FORMAT_VERSION,
        });
    }
    let n: usize = field(2, "n")?
        .parse()
        .map_err(|_| invalid("bad n".into()))?;
    if n > bits::MAX_COMPACT_VARS {
        return Err(invalid(format!("n={n} is too large for a class list")));
    }
    if let Some(expected) = expected_n {
        if expected != n {
            return Err(Error::Dimension { expected, found: n });
        }
    }
    let profile: Profile = field(3, "profile")?.parse()?;
    if profile.n() != n {
        return Err(invalid(format!(
            "profile {profile} does not have {n} entries"
        )));
    }
    let count: usize = field(4, "classes")?
        .parse()
        .map_err(|_| invalid("bad class count".into()))?;

    let words = packed_len(n);
    let record_len = 4 * (words + 1);
    let body = &bytes[offset..];
    if body.len() != count * record_len {
        return Err(invalid(format!(
            "body holds {} bytes, expected {} for {count} classes",
            body.len(),
            count * record_len
        )));
    }

    let fact = factorial(n as u64);
    let classes = body
        .par_chunks(record_len)
        .enumerate()
        .map(|(i, rec)| {
            let fields: Vec<u32> = rec
                .chunks_exact(4)
                .map(|b| u32::from_le_bytes([b[0], b[1], b[2], b[3]]))
                .collect();
            let table = TruthTable::unpack(&fields[..words], n)
                .map_err(|e| invalid(format!("record {i}: {e}")))?;
            let terms = table
                .to_minimal_terms()
                .map_err(|_| invalid(format!("record {i} is not monotone")))?;
            let compact = table.to_compact()?;
            let (least, automorphisms) = canonicalize_compact(compact, n);
            if least != compact {
                return Err(invalid(format!("record {i} is not canonical")));
            }
            if terms.is_constant_one() || Profile::of(&terms)? != profile {
                return Err(invalid(format!(
                    "record {i} does not have profile {profile}"
                )));
            }
            let orbit = fields[words] as u64;
            if orbit * automorphisms as u64 != fact {
                return Err(invalid(format!("record {i} has wrong orbit size {orbit}")));
            }
            Ok(CanonicalClass {
                table: compact,
                automorphisms,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    if classes.windows(2).any(|w| w[0].table >= w[1].table) {
        return Err(invalid("records are not sorted and distinct".into()));
    }
    Ok(ProfileClassList::from_sorted(profile, classes))
}

/// A finalized database row.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ResultRow {
    pub counts: ProfileCounts,
    pub elapsed_seconds: f64,
    pub timestamp: u64,
}

/// Append-only CSV of per-profile results, keyed by `(n, profile)`.
///
/// Columns: `n,profile,R_count,D_count,asymmetric,elapsed_seconds,timestamp`.
/// Recording a key twice is a confirming no-op when the counts agree and an
/// error otherwise.
pub struct ResultsDb {
    path: PathBuf,
    rows: HashMap<(usize, Profile), ResultRow>,
    order: Vec<(usize, Profile)>,
}

const HEADER: [&str; 7] = [
    "n",
    "profile",
    "R_count",
    "D_count",
    "asymmetric",
    "elapsed_seconds",
    "timestamp",
];

impl ResultsDb {
    /// Opens an existing database or starts an empty one at `path`.
    pub fn open(path: impl Into<PathBuf>) -> Result<Self> {
        let path = path.into();
        let mut db = ResultsDb {
            path,
            rows: HashMap::new(),
            order: Vec::new(),
        };
        if db.path.exists() {
            let mut reader = csv::Reader::from_path(&db.path)?;
            for record in reader.records() {
                let record = record?;
                let bad = || Error::Validation {
                    path: db.path.clone(),
                    reason: format!("malformed row {record:?}"),
                };
                if record.len() != HEADER.len() {
                    return Err(bad());
                }
                let num = |i: usize| record[i].parse::<u64>().map_err(|_| bad());
                let n = num(0)? as usize;
                let profile: Profile = record[1].parse()?;
                let row = ResultRow {
                    counts: ProfileCounts {
                        r: num(2)?,
                        d: num(3)?,
                        asymmetric: num(4)?,
                    },
                    elapsed_seconds: record[5].parse().map_err(|_| bad())?,
                    timestamp: num(6)?,
                };
                db.insert_checked(n, profile, row)?;
            }
        }
        Ok(db)
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    fn insert_checked(&mut self, n: usize, profile: Profile, row: ResultRow) -> Result<bool> {
        match self.rows.get(&(n, profile)) {
            Some(prior) if prior.counts == row.counts => Ok(false),
            Some(prior) => Err(Error::ResultMismatch {
                n,
                profile: profile.to_string(),
                stored: format!("{:?}", prior.counts),
                new: format!("{:?}", row.counts),
            }),
            None => {
                self.rows.insert((n, profile), row);
                self.order.push((n, profile));
                Ok(true)
            }
        }
    }

    /// Appends a row; returns `false` when an identical result was already
    /// stored.
    pub fn record_result(
        &mut self,
        n: usize,
        profile: Profile,
        counts: ProfileCounts,
        elapsed_seconds: f64,
    ) -> Result<bool> {
        let timestamp = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map_or(0, |d| d.as_secs());
        let row = ResultRow {
            counts,
            elapsed_seconds,
            timestamp,
        };
        if !self.insert_checked(n, profile, row)? {
            return Ok(false);
        }
        let fresh = !self.path.exists();
        let file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)?;
        let mut w = csv::Writer::from_writer(file);
        if fresh {
            w.write_record(HEADER)?;
        }
        w.write_record([
            n.to_string(),
            profile.to_string(),
            counts.r.to_string(),
            counts.d.to_string(),
            counts.asymmetric.to_string(),
            format!("{elapsed_seconds:.6}"),
            timestamp.to_string(),
        ])?;
        w.flush()?;
        Ok(true)
    }

    pub fn get(&self, n: usize, profile: &Profile) -> Option<(ProfileCounts, f64)> {
        self.rows
            .get(&(n, *profile))
            .map(|r| (r.counts, r.elapsed_seconds))
    }

    /// Rows for `n` in insertion order.
    pub fn rows(&self, n: usize) -> impl Iterator<Item = (Profile, ResultRow)> + '_ {
        self.order
            .iter()
            .filter(move |(m, _)| *m == n)
            .map(|key| (key.1, self.rows[key]))
    }

    /// Running totals `(Σ R, Σ D)` over the stored rows for `n`.
    pub fn totals(&self, n: usize) -> (u64, u64) {
        self.rows(n).fold((0, 0), |(r, d), (_, row)| {
            (r + row.counts.r, d + row.counts.d)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{build_profile_list, ProfileClassList};

    fn p(e: &[u16]) -> Profile {
        Profile::new(e).unwrap()
    }

    #[test]
    fn round_trip_preserves_classes() {
        let dir = tempfile::tempdir().unwrap();
        let list = build_profile_list(p(&[0, 2, 2, 0, 0])).unwrap();
        let path = dir.path().join(list_file_name(&list.profile()));
        save_profile_list(&list, &path).unwrap();
        let back = load_profile_list(&path).unwrap();
        assert_eq!(back, list);
        assert_eq!(back.r_count(), 7);
        assert!(!path.with_extension("mbf.tmp").exists());
    }

    #[test]
    fn empty_list_is_valid() {
        let dir = tempfile::tempdir().unwrap();
        let list = ProfileClassList::from_sorted(p(&[0, 11, 0, 0, 0]), Vec::new());
        let path = dir.path().join("empty.mbf");
        save_profile_list(&list, &path).unwrap();
        assert_eq!(load_profile_list(&path).unwrap().r_count(), 0);
    }

    #[test]
    fn truncated_body_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let list = build_profile_list(p(&[0, 2, 2, 0, 0])).unwrap();
        let path = dir.path().join("x.mbf");
        save_profile_list(&list, &path).unwrap();
        let bytes = fs::read(&path).unwrap();
        fs::write(&path, &bytes[..bytes.len() - 3]).unwrap();
        assert!(matches!(
            load_profile_list(&path),
            Err(Error::Validation { .. })
        ));
    }

    #[test]
    fn wrong_profile_and_version_and_dimension() {
        let dir = tempfile::tempdir().unwrap();
        let list = build_profile_list(p(&[0, 2, 2, 0, 0])).unwrap();
        let path = dir.path().join("x.mbf");
        save_profile_list(&list, &path).unwrap();
        let text = fs::read(&path).unwrap();

        let mut patched = text.clone();
        let pos = text.windows(11).position(|w| w == b"(0,2,2,0,0)").unwrap();
        patched[pos + 5] = b'1';
        fs::write(&path, &patched).unwrap();
        assert!(matches!(
            load_profile_list(&path),
            Err(Error::Validation { .. })
        ));

        let mut bumped = text.clone();
        let pos = text.windows(9).position(|w| w == b"version 1").unwrap();
        bumped[pos + 8] = b'7';
        fs::write(&path, &bumped).unwrap();
        assert!(matches!(
            load_profile_list(&path),
            Err(Error::Version { found: 7, .. })
        ));

        fs::write(&path, &text).unwrap();
        assert!(matches!(
            load_profile_list_for(&path, 6),
            Err(Error::Dimension {
                expected: 6,
                found: 5
            })
        ));
    }

    #[test]
    fn non_canonical_record_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("x.mbf");
        // x2 is not the least representative of the singleton class
        let x2 = TruthTable::from_fn(2, |m| m & 2 == 2).unwrap();
        let mut bytes =
            format!("{MAGIC}\nversion 1\nn 2\nprofile (1,0)\nclasses 1\nend\n").into_bytes();
        bytes.extend(x2.pack()[0].to_le_bytes());
        bytes.extend(2u32.to_le_bytes());
        fs::write(&path, &bytes).unwrap();
        let err = load_profile_list(&path).unwrap_err();
        assert!(err.to_string().contains("not canonical"), "{err}");
    }

    #[test]
    fn results_db_confirms_and_rejects() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join(RESULTS_FILE);
        let mut db = ResultsDb::open(&path).unwrap();
        let q = p(&[0, 0, 3, 4, 0, 0, 0]);
        let c = ProfileCounts {
            r: 10,
            d: 100,
            asymmetric: 2,
        };
        assert!(db.record_result(7, q, c, 1.0).unwrap());
        assert!(!db.record_result(7, q, c, 2.0).unwrap());
        let bad = ProfileCounts { r: 11, ..c };
        assert!(matches!(
            db.record_result(7, q, bad, 1.0),
            Err(Error::ResultMismatch { .. })
        ));

        let reopened = ResultsDb::open(&path).unwrap();
        assert_eq!(reopened.get(7, &q).unwrap().0, c);
        assert_eq!(reopened.rows(7).count(), 1);
        assert_eq!(reopened.totals(7), (10, 100));
    }
}
