//! Plain-text lists of empty 4-simplices and the statistics drawn from them.
//!
//! A census file has optional `#` header lines followed by one row per
//! simplex, `V b0 b1 b2 b3 b4`, with the tuple in canonical form. Rows are
//! sorted by volume and then lexicographically.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::fs;
use std::io::{self, BufRead, BufReader, Write};
use std::path::Path;

use thiserror::Error;

use crate::geometry::{facet_volumes, tuple_width};
use crate::oracle::is_empty;
use crate::tuple::{CanonicalTuple, Tuple};

pub const FORMAT_LINE: &str = "# empty4 census v1";

#[derive(Debug, Error)]
pub enum CensusError {
    #[error("line {line}: {reason}")]
    ParseError { line: usize, reason: String },
    #[error("line {line}: {reason}")]
    InvariantViolation { line: usize, reason: String },
    #[error(transparent)]
    Io(#[from] io::Error),
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CensusMeta {
    pub generator: String,
    pub config_hash: String,
}

impl CensusMeta {
    pub fn current(config_hash: impl Into<String>) -> Self {
        CensusMeta {
            generator: format!("empty4 {}", env!("CARGO_PKG_VERSION")),
            config_hash: config_hash.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Census {
    rows: Vec<CanonicalTuple>,
    pub meta: CensusMeta,
}

impl Census {
    /// Canonicalizes, sorts and deduplicates `tuples`.
    pub fn from_tuples<I: IntoIterator<Item = Tuple>>(tuples: I, meta: CensusMeta) -> Self {
        let set: BTreeSet<CanonicalTuple> = tuples.into_iter().map(|t| t.canonical_form()).collect();
        Census {
            rows: set.into_iter().collect(),
            meta,
        }
    }

    /// Rows that are already canonical, sorted and distinct.
    pub(crate) fn from_sorted(rows: Vec<CanonicalTuple>, meta: CensusMeta) -> Self {
        debug_assert!(rows.windows(2).all(|w| w[0] < w[1]));
        Census { rows, meta }
    }

    pub fn rows(&self) -> &[CanonicalTuple] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

pub fn format_row(t: &Tuple) -> String {
    let mut s = t.volume().to_string();
    for b in t.residues() {
        s.push(' ');
        s.push_str(&b.to_string());
    }
    s
}

pub fn write_census<W: Write>(c: &Census, mut out: W) -> io::Result<()> {
    writeln!(out, "{FORMAT_LINE}")?;
    writeln!(out, "# generator: {}", c.meta.generator)?;
    writeln!(out, "# config: {}", c.meta.config_hash)?;
    writeln!(out, "# rows: {}", c.rows.len())?;
    for t in &c.rows {
        writeln!(out, "{}", format_row(t))?;
    }
    Ok(())
}

pub fn write_census_file(c: &Census, path: &Path) -> io::Result<()> {
    let mut buf = Vec::new();
    write_census(c, &mut buf)?;
    fs::write(path, buf)
}

fn parse_row(line: &str, lineno: usize) -> Result<Tuple, CensusError> {
    let bad = |reason: String| CensusError::ParseError { line: lineno, reason };
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != 6 {
        return Err(bad(format!("expected 6 fields `V b0 b1 b2 b3 b4`, got {}", fields.len())));
    }
    let nums = fields
        .iter()
        .map(|f| f.parse::<i64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| bad(e.to_string()))?;
    let v = u32::try_from(nums[0]).map_err(|e| bad(e.to_string()))?;
    let invalid = |reason: String| CensusError::InvariantViolation { line: lineno, reason };
    if nums[1..].iter().any(|&b| b < 0 || b >= v as i64) {
        return Err(invalid(format!("residues must lie in [0, {v})")));
    }
    Tuple::new(v, &nums[1..]).map_err(|e| invalid(e.to_string()))
}

fn read_lines<R: BufRead>(src: R, strict: bool) -> Result<Census, CensusError> {
    let mut meta = CensusMeta::default();
    let mut rows: Vec<CanonicalTuple> = Vec::new();
    let mut loose: Vec<Tuple> = Vec::new();
    for (idx, line) in src.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let trimmed = line.trim();
        if let Some(header) = trimmed.strip_prefix('#') {
            let header = header.trim();
            if let Some(g) = header.strip_prefix("generator:") {
                meta.generator = g.trim().to_string();
            } else if let Some(h) = header.strip_prefix("config:") {
                meta.config_hash = h.trim().to_string();
            }
            continue;
        }
        if trimmed.is_empty() {
            continue;
        }
        let t = parse_row(trimmed, lineno)?;
        let invalid = |reason: String| CensusError::InvariantViolation { line: lineno, reason };
        if t.dim() != 4 || !is_empty(&t) {
            return Err(invalid(format!("{t} is not an empty 4-simplex")));
        }
        if !strict {
            loose.push(t);
            continue;
        }
        let c = t.canonical_form();
        if *c.tuple() != t {
            return Err(invalid(format!("{t} is not in canonical form (expected {c})")));
        }
        if let Some(prev) = rows.last() {
            if *prev >= c {
                return Err(invalid(format!("row {c} is out of order or repeated")));
            }
        }
        rows.push(c);
    }
    Ok(if strict {
        Census { rows, meta }
    } else {
        Census::from_tuples(loose, meta)
    })
}

/// Reads a census, rejecting rows that are not canonical, sorted and distinct.
pub fn read_census<R: BufRead>(src: R) -> Result<Census, CensusError> {
    read_lines(src, true)
}

/// Reads a list of empty 4-tuples in any order and normal form, and
/// canonicalizes it into a census. Useful for lists produced elsewhere.
pub fn normalize_census<R: BufRead>(src: R) -> Result<Census, CensusError> {
    read_lines(src, false)
}

pub fn read_census_file(path: &Path) -> Result<Census, CensusError> {
    read_census(BufReader::new(fs::File::open(path)?))
}

/// Number of rows per volume; volumes without rows are absent.
pub fn histogram_by_volume(c: &Census) -> BTreeMap<u32, usize> {
    let mut h = BTreeMap::new();
    for t in c.rows() {
        *h.entry(t.volume()).or_insert(0) += 1;
    }
    h
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WidthStats {
    pub count: usize,
    pub min_volume: u32,
    pub max_volume: u32,
}

/// Per lattice width: how many rows and the range of their volumes.
pub fn width_histogram(c: &Census) -> BTreeMap<u32, WidthStats> {
    let mut h: BTreeMap<u32, WidthStats> = BTreeMap::new();
    for t in c.rows() {
        let v = t.volume();
        h.entry(tuple_width(t))
            .and_modify(|s| {
                s.count += 1;
                s.min_volume = s.min_volume.min(v);
                s.max_volume = s.max_volume.max(v);
            })
            .or_insert(WidthStats {
                count: 1,
                min_volume: v,
                max_volume: v,
            });
    }
    h
}

/// Volume excess `V - 1` and surface excess `S - 5` of one row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExcessRow {
    pub volume_excess: u32,
    pub surface_excess: u64,
    pub tuple: CanonicalTuple,
}

impl fmt::Display for ExcessRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.volume_excess, self.surface_excess, format_row(&self.tuple))
    }
}

pub fn excess_report(c: &Census) -> Vec<ExcessRow> {
    c.rows()
        .iter()
        .map(|t| ExcessRow {
            volume_excess: t.volume() - 1,
            surface_excess: facet_volumes(t).surface() - 5,
            tuple: t.clone(),
        })
        .collect()
}

/// Rows only in `a` and rows only in `b`.
pub fn diff_census(a: &Census, b: &Census) -> (Vec<CanonicalTuple>, Vec<CanonicalTuple>) {
    let sa: BTreeSet<&CanonicalTuple> = a.rows().iter().collect();
    let sb: BTreeSet<&CanonicalTuple> = b.rows().iter().collect();
    (
        sa.difference(&sb).map(|&t| t.clone()).collect(),
        sb.difference(&sa).map(|&t| t.clone()).collect(),
    )
}
