//! OEIS attributions for specific `(family, parameters)` choices, checked
//! against bundled b-files.
//!
//! An entry's `offset` aligns the two indexings: `c(n, b) == a(n + offset)`.

mod bfile;

pub use bfile::{parse_bfile, BFile};

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::bspec::BSpec;
use crate::engine::count_auto;
use crate::error::{Error, Result};

/// Offsets tried by [`calibrate`], in order of preference.
pub const CALIBRATION_OFFSETS: [i64; 7] = [0, 1, -1, 2, -2, 3, -3];

/// Consecutive aligned matches needed to accept an offset.
pub const CALIBRATION_RUN: usize = 8;

/// The b-files shipped with this crate.
pub const BUNDLED_FIXTURES: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/oeis");

const BUILTIN: &str = include_str!("../../data/catalog.json");

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MismatchDetail {
    /// The parameters do not give a nonnegative integer `b`.
    InvalidSpec(String),
    /// No offset in [`CALIBRATION_OFFSETS`] aligns the sequences.
    CalibrationFailed,
    ValueMismatch {
        n: usize,
        index: i64,
        expected: BigInt,
        found: BigInt,
    },
    InsufficientFixture { available: usize, required: usize },
}

impl fmt::Display for MismatchDetail {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MismatchDetail::InvalidSpec(why) => write!(f, "invalid parameters: {why}"),
            MismatchDetail::CalibrationFailed => write!(f, "no offset in [-3, 3] aligns {CALIBRATION_RUN} terms"),
            MismatchDetail::ValueMismatch { n, index, expected, found } => {
                write!(f, "c({n}) = {found} but a({index}) = {expected}")
            }
            MismatchDetail::InsufficientFixture { available, required } => {
                write!(f, "{available} aligned terms, {required} required")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EntryStatus {
    Verified,
    Mismatch(MismatchDetail),
    Unfixtured,
}

impl EntryStatus {
    pub fn label(&self) -> &'static str {
        match self {
            EntryStatus::Verified => "verified",
            EntryStatus::Mismatch(_) => "mismatch",
            EntryStatus::Unfixtured => "unfixtured",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub spec: BSpec,
    pub oeis_id: String,
    pub offset: Option<i64>,
    pub fixture: Option<BFile>,
    pub status: EntryStatus,
}

impl CatalogEntry {
    pub fn new(spec: BSpec, oeis_id: impl Into<String>, offset: Option<i64>) -> Self {
        Self {
            spec,
            oeis_id: oeis_id.into(),
            offset,
            fixture: None,
            status: EntryStatus::Unfixtured,
        }
    }

    pub fn with_fixture(mut self, fixture: BFile) -> Self {
        self.fixture = Some(fixture);
        self
    }

    /// The persisted form: `{"family", "params", "oeis", "offset"}`.
    pub fn to_json(&self) -> Value {
        let mut obj = match self.spec.to_json() {
            Value::Object(m) => m,
            _ => Map::new(),
        };
        obj.insert("oeis".into(), json!(self.oeis_id));
        obj.insert("offset".into(), self.offset.map_or(Value::Null, |o| json!(o)));
        Value::Object(obj)
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let spec_part = json!({
            "family": value.get("family").cloned().unwrap_or(Value::Null),
            "params": value.get("params").cloned().unwrap_or(Value::Null),
        });
        let spec = BSpec::from_json(&spec_part)?;
        let oeis_id = value
            .get("oeis")
            .and_then(Value::as_str)
            .filter(|s| is_oeis_id(s))
            .ok_or_else(|| Error::bad_param("oeis", "expected an id of the form A######"))?;
        let offset = match value.get("offset") {
            None | Some(Value::Null) => None,
            Some(v) => Some(v.as_i64().ok_or_else(|| Error::bad_param("offset", "expected an integer or null"))?),
        };
        Ok(Self::new(spec, oeis_id, offset))
    }
}

fn is_oeis_id(s: &str) -> bool {
    s.len() == 7 && s.starts_with('A') && s[1..].bytes().all(|b| b.is_ascii_digit())
}

/// Parses a persisted catalog: a JSON array of entry objects.
pub fn parse_catalog(text: &str) -> Result<Vec<CatalogEntry>> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let items = value
        .as_array()
        .ok_or_else(|| Error::bad_param("catalog", "expected a JSON array"))?;
    items.iter().map(CatalogEntry::from_json).collect()
}

/// One entry per line, in catalog order.
pub fn catalog_to_json(entries: &[CatalogEntry]) -> String {
    let lines: Vec<String> = entries.iter().map(|e| format!("  {}", e.to_json())).collect();
    format!("[\n{}\n]\n", lines.join(",\n"))
}

/// Keeps offsets only where the entry verified, so that an unconfirmed
/// calibration is never persisted.
pub fn persistable(entries: &[CatalogEntry]) -> Vec<CatalogEntry> {
    entries
        .iter()
        .map(|e| {
            let mut e = e.clone();
            if e.status != EntryStatus::Verified {
                e.offset = None;
            }
            e
        })
        .collect()
}

/// Every attribution transcribed from the literature, with the offsets
/// recorded by the last calibration run.
pub fn builtin_catalog() -> Vec<CatalogEntry> {
    parse_catalog(BUILTIN).expect("bundled catalog is valid")
}

/// Reads every `bNNNNNN.txt` in `dir`, keyed by sequence id.
pub fn load_fixtures(dir: &Path) -> Result<BTreeMap<String, BFile>> {
    let io_err = |path: &Path, e: std::io::Error| Error::Fixture {
        path: path.display().to_string(),
        message: e.to_string(),
    };
    let mut out = BTreeMap::new();
    for item in std::fs::read_dir(dir).map_err(|e| io_err(dir, e))? {
        let path = item.map_err(|e| io_err(dir, e))?.path();
        let Some(name) = path.file_name().and_then(|n| n.to_str()) else {
            continue;
        };
        let Some(digits) = name.strip_prefix('b').and_then(|n| n.strip_suffix(".txt")) else {
            continue;
        };
        if digits.len() != 6 || !digits.bytes().all(|b| b.is_ascii_digit()) {
            continue;
        }
        let text = std::fs::read_to_string(&path).map_err(|e| io_err(&path, e))?;
        let mut bfile = parse_bfile(&text).map_err(|e| Error::Fixture {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        bfile.oeis_id = format!("A{digits}");
        out.insert(bfile.oeis_id.clone(), bfile);
    }
    Ok(out)
}

/// Attaches the matching fixture, if any, to each entry.
pub fn attach_fixtures(entries: Vec<CatalogEntry>, fixtures: &BTreeMap<String, BFile>) -> Vec<CatalogEntry> {
    entries
        .into_iter()
        .map(|e| match fixtures.get(&e.oeis_id) {
            Some(b) => e.with_fixture(b.clone()),
            None => e,
        })
        .collect()
}

/// `c(1..=n, b)` for the largest `n` a fixture could be compared at.
fn counts_for(spec: &BSpec, fixture: &BFile, max_offset: i64) -> Result<Vec<BigInt>> {
    let last = fixture.last_index().unwrap_or(0);
    let n = usize::try_from(last + max_offset).unwrap_or(0);
    Ok(count_auto(spec, n)?.values)
}

/// Smallest-magnitude offset (ties toward 0, then positive) under which at
/// least [`CALIBRATION_RUN`] consecutive terms `c(n) == a(n + offset)` agree.
pub fn calibrate(spec: &BSpec, fixture: &BFile) -> Result<Option<i64>> {
    let max_shift = CALIBRATION_OFFSETS.iter().map(|o| o.abs()).max().unwrap_or(0);
    let c = counts_for(spec, fixture, max_shift)?;
    for &offset in &CALIBRATION_OFFSETS {
        let mut run = 0;
        for (j, value) in c.iter().enumerate() {
            let n = j as i64 + 1;
            match fixture.get(n + offset) {
                Some(a) if a == value => {
                    run += 1;
                    if run >= CALIBRATION_RUN {
                        return Ok(Some(offset));
                    }
                }
                _ => run = 0,
            }
        }
    }
    Ok(None)
}

/// Compares `c(n, b)` with `a(n + offset)` at the first `depth` values of
/// `n >= 1` that the fixture covers, calibrating first if the offset is
/// unknown.
///
/// Entries without a fixture come back `unfixtured`; invalid parameters and
/// failed calibrations come back as mismatches. Fails with
/// [`Error::InsufficientFixture`] when fewer than `depth` terms align.
pub fn crosscheck(entry: &CatalogEntry, depth: usize) -> Result<CatalogEntry> {
    let mut out = entry.clone();
    let Some(fixture) = &entry.fixture else {
        out.status = EntryStatus::Unfixtured;
        return Ok(out);
    };
    if let Err(e) = entry.spec.check().and_then(|_| count_auto(&entry.spec, 1).map(|_| ())) {
        out.status = EntryStatus::Mismatch(MismatchDetail::InvalidSpec(e.to_string()));
        return Ok(out);
    }
    let offset = match entry.offset {
        Some(o) => o,
        None => match calibrate(&entry.spec, fixture) {
            Ok(Some(o)) => o,
            Ok(None) => {
                out.status = EntryStatus::Mismatch(MismatchDetail::CalibrationFailed);
                return Ok(out);
            }
            Err(e) => {
                out.status = EntryStatus::Mismatch(MismatchDetail::InvalidSpec(e.to_string()));
                return Ok(out);
            }
        },
    };
    out.offset = Some(offset);

    let last = fixture.last_index().unwrap_or(i64::MIN);
    let first_n = (fixture.first_index().unwrap_or(0) - offset).max(1);
    let available = usize::try_from(last - offset - first_n + 1).unwrap_or(0);
    if available < depth {
        return Err(Error::InsufficientFixture {
            oeis_id: entry.oeis_id.clone(),
            available,
            required: depth,
        });
    }
    let first_n = first_n as usize;
    let c = match count_auto(&entry.spec, first_n + depth - 1) {
        Ok(series) => series.values,
        Err(e) => {
            out.status = EntryStatus::Mismatch(MismatchDetail::InvalidSpec(e.to_string()));
            return Ok(out);
        }
    };
    out.status = EntryStatus::Verified;
    for n in first_n..first_n + depth {
        let index = n as i64 + offset;
        let expected = fixture.get(index).expect("index within fixture range");
        if &c[n - 1] != expected {
            out.status = EntryStatus::Mismatch(MismatchDetail::ValueMismatch {
                n,
                index,
                expected: expected.clone(),
                found: c[n - 1].clone(),
            });
            break;
        }
    }
    Ok(out)
}

/// [`crosscheck`] over every entry in parallel, keeping input order.
/// Short fixtures become `InsufficientFixture` mismatches.
pub fn check_all(entries: &[CatalogEntry], depth: usize) -> Vec<CatalogEntry> {
    entries
        .par_iter()
        .map(|e| match crosscheck(e, depth) {
            Ok(checked) => checked,
            Err(Error::InsufficientFixture { available, required, .. }) => {
                let mut out = e.clone();
                out.status = EntryStatus::Mismatch(MismatchDetail::InsufficientFixture { available, required });
                out
            }
            Err(other) => {
                let mut out = e.clone();
                out.status = EntryStatus::Mismatch(MismatchDetail::InvalidSpec(other.to_string()));
                out
            }
        })
        .collect()
}
