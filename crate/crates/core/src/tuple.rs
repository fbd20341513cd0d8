//! Volume/tuple encoding of cyclic lattice simplices.
//!
//! A cyclic `d`-simplex of normalized volume `V` is described by the
//! barycentric coordinates of a generator of its quotient group, scaled by
//! `V` and read modulo `V`. Two tuples describe isomorphic simplices exactly
//! when one is obtained from the other by multiplying with a unit of `Z_V`
//! and permuting coordinates; [`Tuple::canonical_form`] picks one
//! representative per class.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use thiserror::Error;

use crate::arith::{gcd, is_unit, mod_inverse, reduce, units};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TupleError {
    #[error("volume must be a positive integer")]
    ZeroVolume,
    #[error("a tuple needs at least two entries, got {0}")]
    TooShort(usize),
    #[error("entries sum to {sum}, which is not 0 modulo {volume}")]
    SumNotZero { sum: i64, volume: u32 },
    #[error("entries and volume {volume} share the factor {gcd}; the tuple does not encode a generator")]
    NotGenerator { gcd: u64, volume: u32 },
    #[error("{u} is not a unit modulo {volume}")]
    NotAUnit { u: i64, volume: u32 },
    #[error("tuples of different dimension: {0} and {1}")]
    DimensionMismatch(usize, usize),
    #[error("cannot parse tuple `{input}`: {reason}")]
    Parse { input: String, reason: String },
}

/// A cyclic simplex as volume plus residues in `[0, V)`.
///
/// The derived ordering compares volume first, then residues
/// lexicographically; census files are sorted by it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tuple {
    volume: u32,
    residues: Vec<u32>,
}

impl Tuple {
    /// Builds a tuple from arbitrary integer entries, reducing them mod `volume`.
    pub fn new(volume: u32, raw: &[i64]) -> Result<Self, TupleError> {
        if volume == 0 {
            return Err(TupleError::ZeroVolume);
        }
        if raw.len() < 2 {
            return Err(TupleError::TooShort(raw.len()));
        }
        let sum: i64 = raw.iter().sum();
        if sum.rem_euclid(volume as i64) != 0 {
            return Err(TupleError::SumNotZero { sum, volume });
        }
        let residues: Vec<u32> = raw.iter().map(|&x| reduce(x, volume)).collect();
        let g = residues
            .iter()
            .fold(volume as u64, |acc, &r| gcd(acc, r as u64));
        if g != 1 {
            return Err(TupleError::NotGenerator { gcd: g, volume });
        }
        Ok(Tuple { volume, residues })
    }

    /// Wraps residues already known to form a valid tuple.
    pub(crate) fn from_valid(volume: u32, residues: Vec<u32>) -> Self {
        debug_assert!(residues.iter().all(|&r| r < volume));
        debug_assert_eq!(
            residues.iter().map(|&r| r as u64).sum::<u64>() % volume as u64,
            0
        );
        Tuple { volume, residues }
    }

    /// The unimodular `d`-simplex, `V = 1`.
    pub fn unimodular(dim: usize) -> Self {
        Tuple {
            volume: 1,
            residues: vec![0; dim + 1],
        }
    }

    pub fn volume(&self) -> u32 {
        self.volume
    }

    pub fn dim(&self) -> usize {
        self.residues.len() - 1
    }

    pub fn residues(&self) -> &[u32] {
        &self.residues
    }

    /// Entrywise `u * b mod V`. Represents the same simplex.
    pub fn unit_multiply(&self, u: i64) -> Result<Tuple, TupleError> {
        let v = self.volume;
        let u_red = reduce(u, v);
        if !is_unit(u_red, v) {
            return Err(TupleError::NotAUnit { u, volume: v });
        }
        Ok(self.scaled(u_red))
    }

    fn scaled(&self, u: u32) -> Tuple {
        let v = self.volume as u64;
        let residues = self
            .residues
            .iter()
            .map(|&b| (b as u64 * u as u64 % v) as u32)
            .collect();
        Tuple {
            volume: self.volume,
            residues,
        }
    }

    /// Reorders coordinates: entry `i` of the result is entry `perm[i]` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Tuple {
        assert_eq!(perm.len(), self.residues.len(), "permutation length");
        Tuple {
            volume: self.volume,
            residues: perm.iter().map(|&p| self.residues[p]).collect(),
        }
    }

    /// Entries written in balanced form, in `(-V/2, V/2]`.
    pub fn balanced(&self) -> Vec<i64> {
        let v = self.volume as i64;
        self.residues
            .iter()
            .map(|&r| {
                let r = r as i64;
                if 2 * r > v {
                    r - v
                } else {
                    r
                }
            })
            .collect()
    }

    /// Indices whose entry is a unit modulo `V` (the unimodular facets).
    pub fn unit_positions(&self) -> Vec<usize> {
        (0..self.residues.len())
            .filter(|&i| is_unit(self.residues[i], self.volume))
            .collect()
    }

    /// Canonical representative of the isomorphism class.
    ///
    /// When some entry is a unit, the representative is the lexicographically
    /// smallest tuple whose last entry is `V - 1` and whose first `d` entries
    /// are increasing, over all unit multiples and permutations. Otherwise it
    /// is the lexicographic minimum of all increasingly sorted unit multiples.
    pub fn canonical_form(&self) -> CanonicalTuple {
        let v = self.volume;
        let n = self.residues.len();
        let mut best: Option<Vec<u32>> = None;
        let mut consider = |cand: Vec<u32>| {
            if best.as_ref().map_or(true, |b| cand < *b) {
                best = Some(cand);
            }
        };
        let unit_pos = self.unit_positions();
        if !unit_pos.is_empty() {
            for &i in &unit_pos {
                // u * b_i = -1
                let inv = mod_inverse(self.residues[i], v).expect("unit entry");
                let u = (v - inv) % v;
                let scaled = self.scaled(u);
                let mut rest: Vec<u32> = (0..n)
                    .filter(|&k| k != i)
                    .map(|k| scaled.residues[k])
                    .collect();
                rest.sort_unstable();
                rest.push(scaled.residues[i]);
                consider(rest);
            }
        } else {
            for u in units(v) {
                let mut c = self.scaled(u).residues;
                c.sort_unstable();
                consider(c);
            }
        }
        CanonicalTuple(Tuple {
            volume: v,
            residues: best.expect("at least one candidate"),
        })
    }

    /// Whether `self` and `other` encode isomorphic simplices.
    pub fn is_isomorphic(&self, other: &Tuple) -> Result<bool, TupleError> {
        if self.dim() != other.dim() {
            return Err(TupleError::DimensionMismatch(self.dim(), other.dim()));
        }
        Ok(self.volume == other.volume && self.canonical_form() == other.canonical_form())
    }

    /// Coordinate permutations realized by unit multiplication, i.e. the
    /// permutations of the vertices induced by lattice automorphisms.
    pub fn symmetry_group(&self) -> SymmetryGroup {
        let n = self.residues.len();
        let mut sorted_self = self.residues.clone();
        sorted_self.sort_unstable();
        let mut elements: Vec<Vec<usize>> = Vec::new();
        for u in units(self.volume) {
            let scaled = self.scaled(u);
            let mut sorted_scaled = scaled.residues.clone();
            sorted_scaled.sort_unstable();
            if sorted_scaled != sorted_self {
                continue;
            }
            for perm in (0..n).permutations(n) {
                if (0..n).all(|i| self.residues[perm[i]] == scaled.residues[i]) {
                    elements.push(perm);
                }
            }
        }
        elements.sort();
        elements.dedup();
        SymmetryGroup::from_elements(n, elements)
    }
}

impl fmt::Display for Tuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.volume, self.residues.iter().join(","))
    }
}

/// Parses `V:b0,b1,...`; entries may be any integers and are reduced mod `V`.
impl FromStr for Tuple {
    type Err = TupleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse_err = |reason: &str| TupleError::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let (vol, entries) = s
            .split_once(':')
            .ok_or_else(|| parse_err("expected `V:b0,b1,...`"))?;
        let volume: u32 = vol
            .trim()
            .parse()
            .map_err(|_| parse_err("volume is not a positive integer"))?;
        let raw = entries
            .split(',')
            .map(|e| e.trim().parse::<i64>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| parse_err("entries must be integers"))?;
        Tuple::new(volume, &raw)
    }
}

/// The distinguished representative of an isomorphism class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalTuple(Tuple);

impl CanonicalTuple {
    pub fn tuple(&self) -> &Tuple {
        &self.0
    }

    pub fn into_tuple(self) -> Tuple {
        self.0
    }
}

impl std::ops::Deref for CanonicalTuple {
    type Target = Tuple;

    fn deref(&self) -> &Tuple {
        &self.0
    }
}

impl fmt::Display for CanonicalTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Permutations `sigma` of the coordinates with `b[sigma(i)] = u * b[i]` for some unit `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryGroup {
    elements: Vec<Vec<usize>>,
    orbit_count: usize,
}

impl SymmetryGroup {
    fn from_elements(n: usize, elements: Vec<Vec<usize>>) -> Self {
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for perm in &elements {
            for (i, &j) in perm.iter().enumerate() {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        let orbit_count = (0..n).filter(|&i| find(&mut parent, i) == i).count();
        SymmetryGroup {
            elements,
            orbit_count,
        }
    }

    pub fn elements(&self) -> &[Vec<usize>] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Number of vertex orbits.
    pub fn orbit_count(&self) -> usize {
        self.orbit_count
    }

    pub fn contains(&self, perm: &[usize]) -> bool {
        self.elements.binary_search_by(|e| e.as_slice().cmp(perm)).is_ok()
    }
}
