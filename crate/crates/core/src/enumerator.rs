//! Exhaustive enumeration of empty 4-simplices by volume.
//!
//! Every empty 4-simplex has a unimodular facet, so its tuple can be scaled
//! to have `b0 = -1`, and the remaining four entries can be sorted. The
//! search walks `b1 <= b2 <= b3 <= b4` with `b4` fixed by the zero-sum
//! condition and screens candidates from cheapest to most expensive:
//! shared prime factors between entries, the facet condition, and finally
//! the coset walk.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::arith::gcd;
use crate::census::{Census, CensusMeta};
use crate::families::{in_some_family, FamilyMatcher};
use crate::geometry::intmat::{adjugate, det, mul, IntMatrix};
use crate::geometry::{count_lattice_points_brute, facet_volumes_geometric, SimplexCoords};
use crate::oracle::{facet_condition, is_empty, is_empty_5};
use crate::tuple::{CanonicalTuple, Tuple};

/// Largest volume accepted by [`SearchConfig`].
pub const MAX_VOLUME: u32 = 7600;
/// Default cap for [`enumerate_via_sublattices`].
pub const SUBLATTICE_CAP: u32 = 15;

#[derive(Debug, Error)]
pub enum EnumError {
    #[error("invalid search configuration: {0}")]
    InvalidConfig(String),
    #[error("checkpoint error: {0}")]
    CheckpointError(String),
    #[error("volume {volume} exceeds the sublattice enumeration cap {cap}")]
    VolumeTooLarge { volume: u32, cap: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub v_min: u32,
    pub v_max: u32,
    /// Worker threads; 0 uses the default pool size.
    pub workers: usize,
    /// Drop tuples that belong to an infinite family.
    pub prune_families: bool,
    pub checkpoint_path: Option<PathBuf>,
}

impl SearchConfig {
    pub fn new(v_min: u32, v_max: u32) -> Result<Self, EnumError> {
        let cfg = SearchConfig {
            v_min,
            v_max,
            workers: 0,
            prune_families: false,
            checkpoint_path: None,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn sporadic(mut self) -> Self {
        self.prune_families = true;
        self
    }

    pub fn validate(&self) -> Result<(), EnumError> {
        if !(1 <= self.v_min && self.v_min <= self.v_max && self.v_max <= MAX_VOLUME) {
            return Err(EnumError::InvalidConfig(format!(
                "need 1 <= from <= to <= {MAX_VOLUME}, got from {} to {}",
                self.v_min, self.v_max
            )));
        }
        Ok(())
    }

    /// Hash of everything that affects the output (not the worker count or
    /// checkpoint location).
    pub fn hash(&self) -> String {
        let mut h = Sha256::new();
        h.update(format!(
            "range={}..={};sporadic={}",
            self.v_min, self.v_max, self.prune_families
        ));
        h.finalize().iter().map(|b| format!("{b:02x}")).collect()
    }
}

/// `gcd(V, x)` for every residue `x`.
fn gcd_table(v: u32) -> Vec<u32> {
    (0..v).map(|x| gcd(v as u64, x as u64) as u32).collect()
}

/// Screens and tests one `b1`, returning canonical forms of the empty tuples found.
fn scan_b1(v: u32, b1: u32, g: &[u32]) -> Vec<CanonicalTuple> {
    let mut out = Vec::new();
    let b0 = v - 1;
    let g1 = g[b1 as usize];
    let coprime = |x: u32, y: u32| x == 1 || y == 1 || gcd(x as u64, y as u64) == 1;
    for b2 in b1..v {
        let g2 = g[b2 as usize];
        if !coprime(g1, g2) {
            continue;
        }
        for b3 in b2..v {
            let b4 = ((1 + 3 * v as u64 - b1 as u64 - b2 as u64 - b3 as u64) % v as u64) as u32;
            if b4 < b3 {
                continue;
            }
            let g3 = g[b3 as usize];
            let g4 = g[b4 as usize];
            if !(coprime(g1, g3) && coprime(g2, g3) && coprime(g1, g4) && coprime(g2, g4) && coprime(g3, g4)) {
                continue;
            }
            let b = [b0, b1, b2, b3, b4];
            let gs = [1, g1, g2, g3, g4];
            if !(1..5).all(|i| gs[i] == 1 || facet_condition(&b, i, gs[i])) {
                continue;
            }
            if !is_empty_5(v, &b) {
                continue;
            }
            out.push(Tuple::from_valid(v, b.to_vec()).canonical_form());
        }
    }
    out
}

/// One canonical representative per isomorphism class of empty 4-simplices of volume `v`.
pub fn enumerate_empty(v: u32) -> BTreeSet<CanonicalTuple> {
    assert!(v >= 1, "volume must be positive");
    if v == 1 {
        return BTreeSet::from([Tuple::unimodular(4).canonical_form()]);
    }
    let g = gcd_table(v);
    (0..v)
        .into_par_iter()
        .flat_map_iter(|b1| scan_b1(v, b1, &g))
        .collect::<Vec<_>>()
        .into_iter()
        .collect()
}

/// As [`enumerate_empty`] but with `b1, b2, b3` unrestricted in `[0, V)`.
pub fn enumerate_empty_unsorted(v: u32) -> BTreeSet<CanonicalTuple> {
    let mut out = BTreeSet::new();
    for b1 in 0..v {
        for b2 in 0..v {
            for b3 in 0..v {
                let s = b1 as i64 + b2 as i64 + b3 as i64;
                if let Ok(t) = Tuple::new(v, &[-1, b1 as i64, b2 as i64, b3 as i64, 1 - s]) {
                    if is_empty(&t) {
                        out.insert(t.canonical_form());
                    }
                }
            }
        }
    }
    out
}

/// As [`enumerate_empty`] but over all sorted tuples `b0 <= ... <= b4`,
/// without assuming a unimodular facet.
pub fn enumerate_empty_full_space(v: u32) -> BTreeSet<CanonicalTuple> {
    let mut out = BTreeSet::new();
    for b0 in 0..v {
        for b1 in b0..v {
            for b2 in b1..v {
                for b3 in b2..v {
                    let s = (b0 + b1 + b2 + b3) as i64;
                    let b4 = (-s).rem_euclid(v as i64) as u32;
                    if b4 < b3 {
                        continue;
                    }
                    if let Ok(t) = Tuple::new(v, &[b0 as i64, b1 as i64, b2 as i64, b3 as i64, b4 as i64]) {
                        if is_empty(&t) {
                            out.insert(t.canonical_form());
                        }
                    }
                }
            }
        }
    }
    out
}

/// Empty tuples of volume `v` in no infinite family.
pub fn sporadic_of_volume(v: u32) -> Vec<CanonicalTuple> {
    let matcher = FamilyMatcher::new(v);
    enumerate_empty(v)
        .into_iter()
        .filter(|t| !in_some_family(t, &matcher))
        .collect()
}

#[derive(Debug, Serialize, Deserialize)]
struct Checkpoint {
    config_hash: String,
    last_completed_volume: u32,
    rows: Vec<(u32, Vec<u32>)>,
}

fn load_checkpoint(path: &Path, cfg: &SearchConfig) -> Result<Option<Checkpoint>, EnumError> {
    if !path.exists() {
        return Ok(None);
    }
    let text = fs::read_to_string(path).map_err(|e| EnumError::CheckpointError(e.to_string()))?;
    let cp: Checkpoint =
        serde_json::from_str(&text).map_err(|e| EnumError::CheckpointError(e.to_string()))?;
    if cp.config_hash != cfg.hash() {
        return Err(EnumError::CheckpointError(format!(
            "{} belongs to a different configuration",
            path.display()
        )));
    }
    Ok(Some(cp))
}

fn save_checkpoint(path: &Path, cp: &Checkpoint) -> Result<(), EnumError> {
    let err = |e: std::io::Error| EnumError::CheckpointError(e.to_string());
    let text = serde_json::to_string(cp).map_err(|e| EnumError::CheckpointError(e.to_string()))?;
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, text).map_err(err)?;
    fs::rename(&tmp, path).map_err(err)
}

/// Volumes per checkpoint batch.
const BATCH: u32 = 16;

fn run_search(cfg: &SearchConfig) -> Result<Census, EnumError> {
    let mut rows: Vec<CanonicalTuple> = Vec::new();
    let mut start = cfg.v_min;
    if let Some(path) = &cfg.checkpoint_path {
        if let Some(cp) = load_checkpoint(path, cfg)? {
            for (v, b) in cp.rows {
                let t = Tuple::new(v, &b.iter().map(|&x| x as i64).collect::<Vec<_>>())
                    .map_err(|e| EnumError::CheckpointError(e.to_string()))?;
                rows.push(t.canonical_form());
            }
            start = cp.last_completed_volume + 1;
        }
    }
    while start <= cfg.v_max {
        let end = (start + BATCH - 1).min(cfg.v_max);
        let tasks: Vec<(u32, u32)> = (start..=end)
            .flat_map(|v| (0..v).map(move |b1| (v, b1)))
            .collect();
        let tables: HashMap<u32, Vec<u32>> = (start..=end).map(|v| (v, gcd_table(v))).collect();
        let found: Vec<CanonicalTuple> = tasks
            .into_par_iter()
            .flat_map_iter(|(v, b1)| {
                if v == 1 {
                    vec![Tuple::unimodular(4).canonical_form()]
                } else {
                    scan_b1(v, b1, &tables[&v])
                }
            })
            .collect();
        let mut per_volume: BTreeMap<u32, BTreeSet<CanonicalTuple>> = BTreeMap::new();
        for t in found {
            per_volume.entry(t.volume()).or_default().insert(t);
        }
        for (v, set) in per_volume {
            if cfg.prune_families {
                let matcher = FamilyMatcher::new(v);
                let kept: Vec<CanonicalTuple> = set.into_par_iter().filter(|t| !in_some_family(t, &matcher)).collect();
                rows.extend(kept);
            } else {
                rows.extend(set);
            }
        }
        if let Some(path) = &cfg.checkpoint_path {
            save_checkpoint(
                path,
                &Checkpoint {
                    config_hash: cfg.hash(),
                    last_completed_volume: end,
                    rows: rows.iter().map(|t| (t.volume(), t.residues().to_vec())).collect(),
                },
            )?;
        }
        start = end + 1;
    }
    Ok(Census::from_sorted(rows, CensusMeta::current(cfg.hash())))
}

/// Runs the search described by `cfg`: all empty 4-simplices in the volume
/// range, or only the sporadic ones when `prune_families` is set.
pub fn enumerate(cfg: &SearchConfig) -> Result<Census, EnumError> {
    cfg.validate()?;
    if cfg.workers == 0 {
        return run_search(cfg);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()
        .map_err(|e| EnumError::InvalidConfig(e.to_string()))?;
    pool.install(|| run_search(cfg))
}

/// The sporadic census of the configured range.
pub fn enumerate_sporadic(cfg: &SearchConfig) -> Result<Census, EnumError> {
    let mut cfg = cfg.clone();
    cfg.prune_families = true;
    enumerate(&cfg)
}

/// Sum over the sporadic simplices of volume `v` of the number of vertex
/// orbits under their symmetry group.
pub fn singularity_count(v: u32) -> u64 {
    sporadic_of_volume(v)
        .iter()
        .map(|t| t.symmetry_group().orbit_count() as u64)
        .sum()
}

/// Upper-triangular Hermite bases of the index-`v` sublattices of `Z^4`:
/// positive diagonal with product `v`, entries right of the diagonal reduced
/// modulo the diagonal entry of their row. Columns span the sublattice.
fn hermite_bases(v: u32) -> Vec<IntMatrix> {
    let divisors = |n: u32| (1..=n).filter(move |d| n % d == 0);
    let mut out = Vec::new();
    for d0 in divisors(v) {
        for d1 in divisors(v / d0) {
            for d2 in divisors(v / d0 / d1) {
                let d3 = v / d0 / d1 / d2;
                let diag = [d0, d1, d2, d3].map(|x| x as i64);
                // Free entries (row, col) with row < col, bounded by diag[row].
                let free: Vec<(usize, usize)> =
                    (0..4).flat_map(|c| (0..c).map(move |r| (r, c))).collect();
                let mut vals = vec![0i64; free.len()];
                loop {
                    let mut h = vec![vec![0i64; 4]; 4];
                    for i in 0..4 {
                        h[i][i] = diag[i];
                    }
                    for (&(r, c), &x) in free.iter().zip(&vals) {
                        h[r][c] = x;
                    }
                    out.push(h);
                    let mut i = 0;
                    while i < free.len() {
                        vals[i] += 1;
                        if vals[i] < diag[free[i].0] {
                            break;
                        }
                        vals[i] = 0;
                        i += 1;
                    }
                    if i == free.len() {
                        break;
                    }
                }
            }
        }
    }
    out
}

/// All vertex orderings of `0..5`.
fn permutations5() -> Vec<[usize; 5]> {
    let mut out = Vec::with_capacity(120);
    let mut p = [0, 1, 2, 3, 4];
    fn rec(k: usize, p: &mut [usize; 5], out: &mut Vec<[usize; 5]>) {
        if k == 5 {
            out.push(*p);
            return;
        }
        for i in k..5 {
            p.swap(k, i);
            rec(k + 1, p, out);
            p.swap(k, i);
        }
    }
    rec(0, &mut p, &mut out);
    out
}

struct Representative {
    simplex: SimplexCoords,
    adj: IntMatrix,
    det: i64,
}

impl Representative {
    fn new(simplex: SimplexCoords) -> Self {
        let m = simplex.edge_matrix();
        Representative {
            adj: adjugate(&m),
            det: det(&m),
            simplex,
        }
    }

    /// Whether some affine unimodular map sends this simplex onto `other`,
    /// trying every matching of vertices.
    fn isomorphic(&self, other: &SimplexCoords, perms: &[[usize; 5]]) -> bool {
        let q = other.vertices();
        perms.iter().any(|p| {
            let e: IntMatrix = (0..4)
                .map(|r| (1..5).map(|k| q[p[k]][r] - q[p[0]][r]).collect())
                .collect();
            // A = E_q * M^{-1} must be integral; volumes agree so it is then unimodular.
            mul(&e, &self.adj)
                .iter()
                .all(|row| row.iter().all(|&x| x % self.det == 0))
        })
    }
}

/// Empty 4-simplices of volume `v` found without assuming a cyclic quotient:
/// each superlattice of `Z^4` of index `v` containing the standard simplex
/// is visited through the Hermite basis `H` of its dual, giving the simplex
/// `conv(0, rows of H)`. Empty ones are kept up to isomorphism.
pub fn enumerate_via_sublattices(v: u32) -> Result<Vec<SimplexCoords>, EnumError> {
    enumerate_via_sublattices_capped(v, SUBLATTICE_CAP)
}

pub fn enumerate_via_sublattices_capped(v: u32, cap: u32) -> Result<Vec<SimplexCoords>, EnumError> {
    if v > cap {
        return Err(EnumError::VolumeTooLarge { volume: v, cap });
    }
    let perms = permutations5();
    let empties: Vec<SimplexCoords> = hermite_bases(v)
        .into_par_iter()
        .filter_map(|h| {
            let mut verts = vec![vec![0i64; 4]];
            verts.extend(h);
            let s = SimplexCoords::new(verts).expect("nonsingular Hermite basis");
            (count_lattice_points_brute(&s, 1).expect("nonsingular") == 5).then_some(s)
        })
        .collect();
    // Bucket by cheap invariants before the exhaustive vertex matching.
    let mut buckets: BTreeMap<(Vec<u32>, u128, u128), Vec<Representative>> = BTreeMap::new();
    for s in empties {
        let key = (
            facet_volumes_geometric(&s).sorted(),
            count_lattice_points_brute(&s, 2).expect("nonsingular"),
            count_lattice_points_brute(&s, 3).expect("nonsingular"),
        );
        let reps = buckets.entry(key).or_default();
        if !reps.iter().any(|r| r.isomorphic(&s, &perms)) {
            reps.push(Representative::new(s));
        }
    }
    Ok(buckets
        .into_values()
        .flatten()
        .map(|r| r.simplex)
        .collect())
}
