//! Exact lattice-point decisions for cyclic simplices, read off the tuple.
//!
//! The multiples `j * b` (`j = 0..V`) list the `V` cosets of the vertex
//! lattice. Writing `r_i = (j * b_i) mod V`, coset `j` lifts to points of the
//! `n`-th dilation whose barycentric coordinates are `r_i / V` plus
//! nonnegative integers adding up to `n - s_j`, where `s_j = sum(r_i) / V`.
//! Hence:
//!
//! * a non-vertex lattice point exists iff some `j != 0` has `s_j <= 1`;
//! * an interior point exists iff some `j` has `s_j = 1` and all `r_i > 0`;
//! * coset `j` contributes `C(n - s_j + d, d)` points to `nP`.
//!
//! Cosets `j` and `V - j` satisfy `s_j + s_{V-j} = #{i : r_i != 0}`, so the
//! loops below only visit `j <= V / 2`.

use num_rational::Ratio;
use thiserror::Error;

use crate::arith::{binomial, gcd, is_unit, prime_factors};
use crate::tuple::Tuple;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("coset index {j} outside [1, {volume})")]
    CosetOutOfRange { j: u32, volume: u32 },
    #[error("tuple {0} is not hollow")]
    NotHollow(String),
    #[error("operation needs dimension {expected}, tuple has dimension {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

/// Barycentric data of one coset `j * b mod V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetProfile {
    coset: u32,
    volume: u32,
    numerators: Vec<u32>,
    frac_sum: u32,
}

impl CosetProfile {
    pub fn coset(&self) -> u32 {
        self.coset
    }

    /// Numerators of the fractional barycentric coordinates; the denominator is `V`.
    pub fn numerators(&self) -> &[u32] {
        &self.numerators
    }

    pub fn residue(&self, i: usize) -> Ratio<i64> {
        Ratio::new(self.numerators[i] as i64, self.volume as i64)
    }

    pub fn residues(&self) -> Vec<Ratio<i64>> {
        (0..self.numerators.len()).map(|i| self.residue(i)).collect()
    }

    /// Sum of the fractional coordinates, always an integer in `[1, d]` for `j != 0`.
    pub fn frac_sum(&self) -> u32 {
        self.frac_sum
    }
}

pub fn coset_profile(t: &Tuple, j: u32) -> Result<CosetProfile, OracleError> {
    let v = t.volume();
    if j == 0 || j >= v {
        return Err(OracleError::CosetOutOfRange { j, volume: v });
    }
    let numerators: Vec<u32> = t
        .residues()
        .iter()
        .map(|&b| (b as u64 * j as u64 % v as u64) as u32)
        .collect();
    let total: u64 = numerators.iter().map(|&r| r as u64).sum();
    debug_assert_eq!(total % v as u64, 0);
    Ok(CosetProfile {
        coset: j,
        volume: v,
        numerators,
        frac_sum: (total / v as u64) as u32,
    })
}

/// Walks cosets `1..=V/2`, handing `(s_j, nonzero count)` to `visit`; stops
/// as soon as `visit` returns `false`. Returns whether the walk completed.
fn walk_cosets(t: &Tuple, mut visit: impl FnMut(u64, usize) -> bool) -> bool {
    let v = t.volume() as u64;
    let b: Vec<u64> = t.residues().iter().map(|&x| x as u64).collect();
    let mut r = vec![0u64; b.len()];
    for _ in 1..=v / 2 {
        let mut sum = 0;
        let mut nonzero = 0;
        for (ri, &bi) in r.iter_mut().zip(&b) {
            *ri += bi;
            if *ri >= v {
                *ri -= v;
            }
            sum += *ri;
            nonzero += (*ri != 0) as usize;
        }
        if !visit(sum / v, nonzero) {
            return false;
        }
    }
    true
}

/// Whether the simplex has no lattice points besides its vertices.
pub fn is_empty(t: &Tuple) -> bool {
    walk_cosets(t, |s, nonzero| s >= 2 && nonzero as u64 >= s + 2)
}

/// Whether the simplex has no interior lattice points.
pub fn is_hollow(t: &Tuple) -> bool {
    let n = t.residues().len();
    walk_cosets(t, |s, nonzero| {
        !(nonzero == n && (s == 1 || nonzero as u64 - s == 1))
    })
}

/// No prime factor of `V` divides `d - 2` or more entries. For `d = 4`: no
/// prime factor of `V` divides two entries. Necessary for emptiness.
pub fn coprime_condition(t: &Tuple) -> bool {
    let limit = t.dim() as i64 - 2;
    prime_factors(t.volume() as u64).into_iter().all(|p| {
        let hits = t
            .residues()
            .iter()
            .filter(|&&b| b as u64 % p == 0)
            .count() as i64;
        hits < limit
    })
}

/// Whether the residues mod `m` (with position `zero_at` the only zero) split
/// into two pairs `{a, -a}`, `{c, -c}` of units mod `m`.
pub(crate) fn facet_condition(residues: &[u32], zero_at: usize, m: u32) -> bool {
    let mut rest = [0u32; 4];
    let mut k = 0;
    for (i, &b) in residues.iter().enumerate() {
        let c = b % m;
        if i == zero_at {
            continue;
        }
        if c == 0 || !is_unit(c, m) {
            return false;
        }
        rest[k] = c;
        k += 1;
    }
    let opp = |x: u32, y: u32| (x + y) % m == 0;
    (opp(rest[0], rest[1]) && opp(rest[2], rest[3]))
        || (opp(rest[0], rest[2]) && opp(rest[1], rest[3]))
        || (opp(rest[0], rest[3]) && opp(rest[1], rest[2]))
}

/// Emptiness of a hollow 4-simplex decided facet by facet: for each facet of
/// volume `V_i = gcd(V, b_i) > 1`, the tuple mod `V_i` must look like
/// `{0, a, -a, c, -c}` with `a`, `c` units mod `V_i`.
pub fn empty_via_facets(t: &Tuple) -> Result<bool, OracleError> {
    if t.dim() != 4 {
        return Err(OracleError::DimensionMismatch {
            expected: 4,
            got: t.dim(),
        });
    }
    if !is_hollow(t) {
        return Err(OracleError::NotHollow(t.to_string()));
    }
    let v = t.volume();
    let b = t.residues();
    Ok((0..5).all(|i| {
        let vi = gcd(v as u64, b[i] as u64) as u32;
        vi == 1 || facet_condition(b, i, vi)
    }))
}

/// `|nP ∩ Λ|` for any realization `P` of `t`.
pub fn count_lattice_points_by_coset(t: &Tuple, n: u64) -> u128 {
    let d = t.dim() as u32;
    let v = t.volume() as u64;
    let b: Vec<u64> = t.residues().iter().map(|&x| x as u64).collect();
    let mut r = vec![0u64; b.len()];
    // coset 0: s = 0
    let mut total = binomial(n as i64 + d as i64, d);
    for _ in 1..v {
        let mut sum = 0;
        for (ri, &bi) in r.iter_mut().zip(&b) {
            *ri += bi;
            if *ri >= v {
                *ri -= v;
            }
            sum += *ri;
        }
        let s = (sum / v) as i64;
        total += binomial(n as i64 - s + d as i64, d);
    }
    total
}

/// Hot-path emptiness test for 5-tuples, used by the enumerator.
#[inline]
pub(crate) fn is_empty_5(v: u32, b: &[u32; 5]) -> bool {
    let mut r = [0u32; 5];
    for _ in 1..=v / 2 {
        let mut sum = 0u32;
        let mut nonzero = 0u32;
        for k in 0..5 {
            let mut x = r[k] + b[k];
            if x >= v {
                x -= v;
            }
            r[k] = x;
            sum += x;
            nonzero += (x != 0) as u32;
        }
        // sum = s * v; need s >= 2 and nonzero - s >= 2
        if sum < 2 * v || (nonzero - 2) * v < sum {
            return false;
        }
    }
    true
}
