//! The knot table: loading, per-row verification and class counts.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::codes::{dt_to_gauss, DTCode};
use crate::embed::realize;
use crate::invariants::{jones, ReferenceTable};
use crate::warp::min_warp;

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("catalog not found: {0}")]
    NotFound(String),
    #[error("row {row}: {message}")]
    Row { row: usize, message: String },
    #[error("catalog csv: {0}")]
    Csv(#[from] csv::Error),
}

/// Closed integer interval, written `lo..hi` or as a single number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Range {
    pub lo: u32,
    pub hi: u32,
}

impl Range {
    pub fn point(v: u32) -> Self {
        Range { lo: v, hi: v }
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, v: u32) -> bool {
        self.lo <= v && v <= self.hi
    }
}

impl fmt::Display for Range {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_point() { write!(f, "{}", self.lo) } else { write!(f, "{}..{}", self.lo, self.hi) }
    }
}

impl FromStr for Range {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| t.trim().parse::<u32>().map_err(|_| format!("bad range `{s}`"));
        let r = match s.split_once("..") {
            Some((a, b)) => Range { lo: num(a)?, hi: num(b)? },
            None => Range::point(num(s)?),
        };
        if r.lo > r.hi {
            return Err(format!("empty range `{s}`"));
        }
        Ok(r)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LowerBoundSource {
    UnknottingNumber,
    TwistKnotTheorem,
    ConwayBound,
}

impl FromStr for LowerBoundSource {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim() {
            "u(K)" => Ok(Self::UnknottingNumber),
            "Fung" => Ok(Self::TwistKnotTheorem),
            "Higa" => Ok(Self::ConwayBound),
            other => Err(format!("unknown lower-bound source `{other}`")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Property {
    #[serde(rename = "SRC")]
    Src,
    #[serde(rename = "RC")]
    Rc,
    Neither,
    Unknown,
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Property::Src => "SRC",
            Property::Rc => "RC",
            Property::Neither => "Neither",
            Property::Unknown => "Unknown",
        })
    }
}

impl FromStr for Property {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim() {
            "SRC" => Ok(Self::Src),
            "RC" => Ok(Self::Rc),
            "neither" | "Neither" => Ok(Self::Neither),
            "?" | "Unknown" => Ok(Self::Unknown),
            other => Err(format!("unknown property `{other}`")),
        }
    }
}

/// Least crossing count of a diagram realizing the ascending number.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RcCrossing {
    Exact(u32),
    /// `12+`
    AtLeast(u32),
    /// `{9, 12+}`: either exactly the first value or at least the second.
    EitherOr(u32, u32),
}

impl RcCrossing {
    pub fn admits(&self, crossings: u32) -> bool {
        match *self {
            RcCrossing::Exact(n) => crossings == n,
            RcCrossing::AtLeast(n) => crossings >= n,
            RcCrossing::EitherOr(n, m) => crossings == n || crossings >= m,
        }
    }

    pub fn exact(&self) -> Option<u32> {
        match *self {
            RcCrossing::Exact(n) => Some(n),
            _ => None,
        }
    }

    /// Smallest admissible value.
    pub fn least(&self) -> u32 {
        match *self {
            RcCrossing::Exact(n) | RcCrossing::AtLeast(n) | RcCrossing::EitherOr(n, _) => n,
        }
    }
}

impl fmt::Display for RcCrossing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RcCrossing::Exact(n) => write!(f, "{n}"),
            RcCrossing::AtLeast(n) => write!(f, "{n}+"),
            RcCrossing::EitherOr(n, m) => write!(f, "{{{n}, {m}+}}"),
        }
    }
}

impl Serialize for RcCrossing {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            RcCrossing::Exact(n) => s.serialize_u32(*n),
            other => s.serialize_str(&other.to_string()),
        }
    }
}

impl FromStr for RcCrossing {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let bad = || format!("bad rc-crossing `{s}`");
        let atom = |t: &str| -> Result<(u32, bool), String> {
            let t = t.trim();
            match t.strip_suffix('+') {
                Some(n) => Ok((n.trim().parse().map_err(|_| bad())?, true)),
                None => Ok((t.parse().map_err(|_| bad())?, false)),
            }
        };
        let s = s.trim();
        if let Some(inner) = s.strip_prefix('{').and_then(|t| t.strip_suffix('}')) {
            let parts: Vec<&str> = inner.split(',').collect();
            if parts.len() != 2 {
                return Err(bad());
            }
            return match (atom(parts[0])?, atom(parts[1])?) {
                ((n, false), (m, true)) if n < m => Ok(RcCrossing::EitherOr(n, m)),
                _ => Err(bad()),
            };
        }
        Ok(match atom(s)? {
            (n, true) => RcCrossing::AtLeast(n),
            (n, false) => RcCrossing::Exact(n),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    /// 1-based data row of the source file.
    pub row: usize,
    pub name: String,
    pub alternating: bool,
    pub unknotting: Range,
    pub ascending: Range,
    pub lower_bound: LowerBoundSource,
    pub property: Property,
    pub dt: DTCode,
    pub rc_crossing: RcCrossing,
}

impl CatalogEntry {
    /// Minimal crossing number, read from the name (`9_32` is 9, `12a_181` is 12).
    pub fn crossing_number(&self) -> u32 {
        crossing_number_of(&self.name).expect("names are validated on load")
    }

    /// 1 or 2 for rows of the two tables, `None` for the extra 12-crossing rows.
    pub fn table(&self) -> Option<u8> {
        match self.crossing_number() {
            0..=8 => Some(1),
            9 => Some(2),
            _ => None,
        }
    }
}

fn crossing_number_of(name: &str) -> Option<u32> {
    let digits: String = name.chars().take_while(|c| c.is_ascii_digit()).collect();
    digits.parse().ok()
}

#[derive(Deserialize)]
struct RawRow {
    name: String,
    alternating: String,
    unknotting: String,
    ascending: String,
    lower_bound: String,
    property: String,
    dt: String,
    rc_crossing: String,
}

fn entry_from_raw(row: usize, raw: RawRow) -> Result<CatalogEntry, String> {
    if crossing_number_of(&raw.name).is_none() {
        return Err(format!("name `{}` does not start with a crossing number", raw.name));
    }
    let alternating = match raw.alternating.trim() {
        "Y" | "y" | "true" => true,
        "N" | "n" | "false" => false,
        other => return Err(format!("alternating must be Y or N, got `{other}`")),
    };
    let dt: DTCode = raw.dt.parse().map_err(|e| format!("dt: {e}"))?;
    let entry = CatalogEntry {
        row,
        name: raw.name.trim().to_string(),
        alternating,
        unknotting: raw.unknotting.parse().map_err(|e| format!("unknotting: {e}"))?,
        ascending: raw.ascending.parse().map_err(|e| format!("ascending: {e}"))?,
        lower_bound: raw.lower_bound.parse()?,
        property: raw.property.parse()?,
        dt,
        rc_crossing: raw.rc_crossing.parse()?,
    };
    check_entry(&entry)?;
    Ok(entry)
}

/// Row-level consistency rules that need no computation.
pub fn check_entry(e: &CatalogEntry) -> Result<(), String> {
    if e.ascending.lo < e.unknotting.lo {
        return Err(format!("ascending {} below unknotting {}", e.ascending, e.unknotting));
    }
    if e.property == Property::Src && e.rc_crossing != RcCrossing::Exact(e.crossing_number()) {
        return Err(format!("SRC row with rc-crossing {} for a {}-crossing knot", e.rc_crossing, e.crossing_number()));
    }
    if e.dt.is_alternating() && !e.alternating && e.dt.crossings() as u32 == e.crossing_number() {
        return Err("alternating minimal witness for a knot marked non-alternating".into());
    }
    Ok(())
}

pub fn parse_catalog(text: &str) -> Result<Vec<CatalogEntry>, CatalogError> {
    let mut reader = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(text.as_bytes());
    let mut out = Vec::new();
    for (i, rec) in reader.deserialize::<RawRow>().enumerate() {
        let row = i + 1;
        let raw = rec.map_err(|e| CatalogError::Row { row, message: e.to_string() })?;
        out.push(entry_from_raw(row, raw).map_err(|message| CatalogError::Row { row, message })?);
    }
    Ok(out)
}

pub fn load_catalog(path: impl AsRef<Path>) -> Result<Vec<CatalogEntry>, CatalogError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|_| CatalogError::NotFound(path.display().to_string()))?;
    parse_catalog(&text)
}

/// Rows belonging to the two tables, without the extra 12-crossing rows.
pub fn table_rows(entries: &[CatalogEntry]) -> Vec<CatalogEntry> {
    entries.iter().filter(|e| e.table().is_some()).cloned().collect()
}

/// The property implied by the numeric columns.
pub fn classify(e: &CatalogEntry) -> Property {
    let (u, a) = (e.unknotting, e.ascending);
    if u.is_point() && a == u {
        if e.rc_crossing.exact() == Some(e.crossing_number()) {
            Property::Src
        } else {
            Property::Rc
        }
    } else if a.lo > u.hi {
        Property::Neither
    } else {
        Property::Unknown
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ClassCounts {
    #[serde(rename = "SRC")]
    pub src: usize,
    #[serde(rename = "RC")]
    pub rc: usize,
    #[serde(rename = "Neither")]
    pub neither: usize,
    #[serde(rename = "Unknown")]
    pub unknown: usize,
}

impl ClassCounts {
    pub fn as_tuple(&self) -> (usize, usize, usize, usize) {
        (self.src, self.rc, self.neither, self.unknown)
    }
}

impl fmt::Display for ClassCounts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SRC={} RC={} Neither={} Unknown={}", self.src, self.rc, self.neither, self.unknown)
    }
}

/// Counts of the stored property column.
pub fn summarize(entries: &[CatalogEntry]) -> ClassCounts {
    let mut c = ClassCounts::default();
    for e in entries {
        match e.property {
            Property::Src => c.src += 1,
            Property::Rc => c.rc += 1,
            Property::Neither => c.neither += 1,
            Property::Unknown => c.unknown += 1,
        }
    }
    c
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowReport {
    pub row: usize,
    pub name: String,
    pub computed_min_warp: usize,
    pub expected: Range,
    pub witness_crossings: usize,
    pub rc_crossing: RcCrossing,
    pub identification: String,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub flags: Vec<String>,
}

impl RowReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn check(&self, name: &str) -> Option<bool> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.pass)
    }
}

/// Recompute one row: warping degree of the witness, its crossing count,
/// its Jones identification and the property column.
pub fn verify_entry(entry: &CatalogEntry, refs: &ReferenceTable) -> RowReport {
    let mut flags = Vec::new();
    let g = dt_to_gauss(&entry.dt);
    let (degree, _) = min_warp(&g);
    let hi = entry.ascending.hi as usize;
    let warp_ok = if degree == hi {
        true
    } else if entry.ascending.contains(degree as u32) {
        flags.push(format!("witness reaches {degree}, below the upper bound {hi}"));
        true
    } else {
        false
    };

    let witness_crossings = entry.dt.crossings();
    let rc_ok = entry.rc_crossing.admits(witness_crossings as u32);

    let (identification, id_ok) = match realize(&entry.dt) {
        Err(e) => (format!("error: {e}"), false),
        Ok(pd) => match jones(&pd) {
            Err(e) => (format!("error: {e}"), false),
            Ok(j) => {
                let found = refs.matches(&j);
                match found.len() {
                    0 => ("unknown".to_string(), false),
                    1 => (found[0].0.clone(), found[0].0 == entry.name),
                    _ => {
                        let names: Vec<String> = found.into_iter().map(|(n, _)| n).collect();
                        let ok = names.contains(&entry.name);
                        flags.push(format!("Jones collision: consistent with {}", names.join(", ")));
                        (format!("consistent with {}", names.join(", ")), ok)
                    }
                }
            }
        },
    };

    let property_ok = classify(entry) == entry.property;

    RowReport {
        row: entry.row,
        name: entry.name.clone(),
        computed_min_warp: degree,
        expected: entry.ascending,
        witness_crossings,
        rc_crossing: entry.rc_crossing,
        identification,
        checks: vec![
            Check { name: "min_warp", pass: warp_ok },
            Check { name: "rc_crossing", pass: rc_ok },
            Check { name: "identification", pass: id_ok },
            Check { name: "property", pass: property_ok },
        ],
        flags,
    }
}

/// Verify all rows in parallel; reports come back in row order.
pub fn verify_catalog(entries: &[CatalogEntry], refs: &ReferenceTable) -> Vec<RowReport> {
    entries.par_iter().map(|e| verify_entry(e, refs)).collect()
}

/// Catalog and reference table shipped with the crate.
pub const SHIPPED_CATALOG: &str = include_str!("../data/catalog.csv");
pub const SHIPPED_REFS: &str = include_str!("../data/jones_refs.dat");

pub fn shipped_catalog() -> Vec<CatalogEntry> {
    parse_catalog(SHIPPED_CATALOG).expect("shipped catalog parses")
}

pub fn shipped_refs() -> ReferenceTable {
    ReferenceTable::parse(SHIPPED_REFS).expect("shipped reference table parses")
}
