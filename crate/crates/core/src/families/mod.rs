//! The infinite families of empty 4-simplices and membership tests.
//!
//! Every empty 4-simplex with a hollow projection to dimension 1 or 2 lies in
//! one of three parametric families, and all but finitely many of the rest
//! lie in one of the 29 primitive and 23 nonprimitive one-parameter families
//! tabulated in [`tables`]. Simplices in none of them are *sporadic*.

pub mod tables;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::arith::{gcd, mod_inverse, prime_factors, reduce};
use crate::oracle::{is_empty, is_hollow};
use crate::tuple::{CanonicalTuple, Tuple, TupleError};
use tables::{NonprimitiveRow, NONPRIMITIVE, PRIMITIVE};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("volume {volume} is not a multiple of the index {index}")]
    IndexMismatch { index: u32, volume: u32 },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("expected a 4-dimensional tuple, got dimension {0}")]
    DimensionMismatch(usize),
    #[error(transparent)]
    Tuple(#[from] TupleError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn factor(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// A family: the width-one family, the two families with a hollow
/// projection to the plane, or a row of the primitive (1..=29) or
/// nonprimitive (1..=23) tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyId {
    Width1,
    K2Primitive,
    K2Nonprimitive,
    Primitive(u8),
    Nonprimitive(u8),
}

impl FamilyId {
    pub fn all_tabulated() -> impl Iterator<Item = FamilyId> {
        (1..=29u8)
            .map(FamilyId::Primitive)
            .chain((1..=23u8).map(FamilyId::Nonprimitive))
    }

    /// Projection dimension of the family.
    pub fn k(self) -> u32 {
        match self {
            FamilyId::Width1 => 1,
            FamilyId::K2Primitive | FamilyId::K2Nonprimitive => 2,
            _ => 3,
        }
    }

    pub fn index(self) -> u32 {
        match self {
            FamilyId::K2Nonprimitive => 2,
            FamilyId::Nonprimitive(n) => nonprimitive_row(n).index,
            _ => 1,
        }
    }

    /// Whether `+` and `-` give different members. For index 2 they agree
    /// modulo `V`.
    pub fn has_sign(self) -> bool {
        matches!(self, FamilyId::Nonprimitive(_)) && self.index() > 2
    }

    pub fn never_admissible(self) -> bool {
        matches!(self, FamilyId::Nonprimitive(n) if nonprimitive_row(n).mod2 == tables::Cond::Never)
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyId::Width1 => write!(f, "k1"),
            FamilyId::K2Primitive => write!(f, "k2-primitive"),
            FamilyId::K2Nonprimitive => write!(f, "k2-nonprimitive"),
            FamilyId::Primitive(n) => write!(f, "primitive-{n}"),
            FamilyId::Nonprimitive(n) => write!(f, "nonprimitive-{n}"),
        }
    }
}

fn nonprimitive_row(n: u8) -> &'static NonprimitiveRow {
    &NONPRIMITIVE[n as usize - 1]
}

/// A family together with the parameters and sign selecting one member.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FamilyLabel {
    pub id: FamilyId,
    pub params: Vec<u32>,
    pub sign: Option<Sign>,
}

impl FamilyLabel {
    pub fn generate(&self, volume: u32) -> Result<Tuple, FamilyError> {
        let params: Vec<i64> = self.params.iter().map(|&p| p as i64).collect();
        family_generate(self.id, volume, &params, self.sign.unwrap_or(Sign::Plus))
    }
}

impl fmt::Display for FamilyLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.id)?;
        match self.sign {
            Some(Sign::Plus) => write!(f, "+")?,
            Some(Sign::Minus) => write!(f, "-")?,
            None => {}
        }
        match self.params.as_slice() {
            [] => Ok(()),
            [a] => write!(f, "(alpha={a})"),
            [a, b] => write!(f, "(alpha={a},beta={b})"),
            ps => write!(f, "{ps:?}"),
        }
    }
}

fn check_index(id: FamilyId, volume: u32) -> Result<(), FamilyError> {
    let index = id.index();
    if volume == 0 || volume % index != 0 {
        return Err(FamilyError::IndexMismatch { index, volume });
    }
    Ok(())
}

/// The member of a family of the given volume.
///
/// `params` holds `(alpha, beta)` for the width-one family, `alpha` for the
/// two planar-projection families and nothing for tabulated rows. The sign
/// only matters for nonprimitive rows of index 3, 4 and 6.
pub fn family_generate(
    id: FamilyId,
    volume: u32,
    params: &[i64],
    sign: Sign,
) -> Result<Tuple, FamilyError> {
    check_index(id, volume)?;
    let v = volume as i64;
    let need = match id {
        FamilyId::Width1 => 2,
        FamilyId::K2Primitive | FamilyId::K2Nonprimitive => 1,
        _ => 0,
    };
    if params.len() != need {
        return Err(FamilyError::InvalidParams(format!(
            "{id} takes {need} parameters, got {}",
            params.len()
        )));
    }
    let b: Vec<i64> = match id {
        FamilyId::Width1 => {
            let (a, c) = (params[0], params[1]);
            let g = gcd(gcd(a.unsigned_abs(), c.unsigned_abs()), volume as u64);
            if g != 1 {
                return Err(FamilyError::InvalidParams(format!(
                    "gcd(alpha, beta, V) = {g}"
                )));
            }
            vec![a + c, -a, -c, -1, 1]
        }
        FamilyId::K2Primitive | FamilyId::K2Nonprimitive => {
            let a = params[0];
            if gcd(a.unsigned_abs(), volume as u64) != 1 {
                return Err(FamilyError::InvalidParams(format!(
                    "alpha = {a} is not a unit modulo {volume}"
                )));
            }
            if id == FamilyId::K2Primitive {
                vec![1, -2, a, -2 * a, 1 + a]
            } else {
                vec![-1, v / 2 - 1, a, v / 2 - a, 2]
            }
        }
        FamilyId::Primitive(n) => PRIMITIVE[n as usize - 1].to_vec(),
        FamilyId::Nonprimitive(n) => {
            let r = nonprimitive_row(n);
            let k = sign.factor() * (v / r.index as i64);
            (0..5).map(|i| k * r.offset[i] + r.dependence[i]).collect()
        }
    };
    Ok(Tuple::new(volume, &b)?)
}

/// Whether the family member of volume `V` (and sign) is empty.
///
/// Width-one members are always empty. Planar-projection members need `V` odd
/// (primitive) or `V` divisible by 4 (nonprimitive). Primitive rows need that
/// no prime factor of `V` divides two entries; nonprimitive rows use the
/// tabulated conditions on `±k` modulo 2 and 3.
pub fn admissible(id: FamilyId, volume: u32, sign: Sign) -> Result<bool, FamilyError> {
    check_index(id, volume)?;
    Ok(match id {
        FamilyId::Width1 => true,
        FamilyId::K2Primitive => volume % 2 == 1,
        FamilyId::K2Nonprimitive => volume % 4 == 0,
        FamilyId::Primitive(n) => {
            let b = PRIMITIVE[n as usize - 1];
            prime_factors(volume as u64).into_iter().all(|p| {
                b.iter().filter(|&&x| x.rem_euclid(p as i64) == 0).count() < 2
            })
        }
        FamilyId::Nonprimitive(n) => {
            let r = nonprimitive_row(n);
            let k = sign.factor() * (volume / r.index) as i64;
            r.mod2.holds(k, 2) && r.mod3.holds(k, 3)
        }
    })
}

/// Number of fine families of hollow cyclic 4-simplices projecting to a
/// hollow configuration in the plane.
pub const HOLLOW_K2_FAMILIES: usize = 6;

/// Member `(alpha, beta)` of the `n`-th (1-based) planar fine family of
/// hollow 4-simplices. Families 2 to 6 need `V` even. Members are hollow but
/// nothing is claimed about emptiness.
pub fn hollow_k2_generate(n: usize, volume: u32, alpha: i64, beta: i64) -> Result<Tuple, FamilyError> {
    let (a, c, h) = (alpha, beta, volume as i64 / 2);
    if !(1..=HOLLOW_K2_FAMILIES).contains(&n) {
        return Err(FamilyError::InvalidParams(format!("no planar family {n}")));
    }
    if n > 1 && volume % 2 != 0 {
        return Err(FamilyError::IndexMismatch { index: 2, volume });
    }
    let b = match n {
        1 => [c, -2 * c, a, -2 * a, c + a],
        2 => [c, h + c, a, h - a, -2 * c],
        3 => [a + c, -a, -c, h, h],
        4 => [a, -a, c, h - c, h],
        5 => [a + c, -a, -2 * c, h + c, h],
        _ => [c, a - 2 * c, -a, h + c, h],
    };
    Ok(Tuple::new(volume, &b)?)
}

/// Finds `(alpha, beta)` with `t` isomorphic to `(alpha+beta, -alpha, -beta, -1, 1)`,
/// if `t` has two entries `u`, `-u` with `u` a unit. Parameters satisfying
/// `gcd(alpha, beta, V) = 1` are preferred when several pairs exist.
pub fn width1_test(t: &Tuple) -> Option<(u32, u32)> {
    let found = width1_candidates(t);
    let v = t.volume() as u64;
    found
        .iter()
        .copied()
        .find(|&(a, b)| gcd(gcd(a as u64, b as u64), v) == 1)
        .or(found.first().copied())
}

fn width1_candidates(t: &Tuple) -> Vec<(u32, u32)> {
    if t.dim() != 4 {
        return Vec::new();
    }
    let v = t.volume();
    if v == 1 {
        return vec![(0, 0)];
    }
    let b = t.residues();
    let mut out = Vec::new();
    for i in 0..5 {
        let Some(inv) = mod_inverse(b[i], v) else {
            continue;
        };
        for j in 0..5 {
            if j == i || (b[i] + b[j]) % v != 0 {
                continue;
            }
            // Normalize b_i to 1 and b_j to -1; the rest read (a+b, -a, -b).
            let c: Vec<u32> = (0..5)
                .filter(|&k| k != i && k != j)
                .map(|k| (b[k] as u64 * inv as u64 % v as u64) as u32)
                .collect();
            out.push(((v - c[1]) % v, (v - c[2]) % v));
        }
    }
    out
}

fn width1_label(t: &Tuple) -> Option<(u32, u32)> {
    let v = t.volume() as u64;
    width1_test(t).filter(|&(a, b)| gcd(gcd(a as u64, b as u64), v) == 1)
}

/// Normalizations of `t` sending a unit entry to `target` (`1` or `-1`),
/// together with the index of that entry.
fn normalizations(t: &Tuple, target: i64) -> Vec<(usize, Vec<u32>)> {
    let v = t.volume();
    t.unit_positions()
        .into_iter()
        .map(|p| {
            let inv = mod_inverse(t.residues()[p], v).expect("unit") as i64;
            let u = reduce(target * inv, v) as u64;
            let c = t
                .residues()
                .iter()
                .map(|&x| (x as u64 * u % v as u64) as u32)
                .collect();
            (p, c)
        })
        .collect()
}

/// Solutions `alpha` with `t` isomorphic to `(1, -2, alpha, -2 alpha, 1 + alpha)`.
pub fn k2_primitive_test(t: &Tuple) -> Vec<u32> {
    let v = t.volume();
    let m = |x: i64| reduce(x, v);
    let mut out = Vec::new();
    if t.dim() != 4 {
        return out;
    }
    for (p0, c) in normalizations(t, 1) {
        for p1 in (0..5).filter(|&p| p != p0 && c[p] == m(-2)) {
            for p2 in (0..5).filter(|&p| p != p0 && p != p1) {
                let a = c[p2];
                if gcd(a as u64, v as u64) != 1 {
                    continue;
                }
                let rest: Vec<u32> = (0..5).filter(|&p| p != p0 && p != p1 && p != p2).map(|p| c[p]).collect();
                let want = [m(-2 * a as i64), m(1 + a as i64)];
                if (rest[0] == want[0] && rest[1] == want[1]) || (rest[0] == want[1] && rest[1] == want[0]) {
                    out.push(a);
                }
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Solutions `alpha` with `t` isomorphic to `(-1, V/2 - 1, alpha, V/2 - alpha, 2)`.
pub fn k2_nonprimitive_test(t: &Tuple) -> Vec<u32> {
    let v = t.volume();
    let mut out = Vec::new();
    if t.dim() != 4 || v % 2 != 0 {
        return out;
    }
    let m = |x: i64| reduce(x, v);
    let h = (v / 2) as i64;
    for (p0, c) in normalizations(t, -1) {
        for p4 in (0..5).filter(|&p| p != p0 && c[p] == m(2)) {
            for p1 in (0..5).filter(|&p| p != p0 && p != p4 && c[p] == m(h - 1)) {
                let rest: Vec<usize> = (0..5).filter(|&p| p != p0 && p != p4 && p != p1).collect();
                for (x, y) in [(rest[0], rest[1]), (rest[1], rest[0])] {
                    let a = c[x];
                    if gcd(a as u64, v as u64) == 1 && c[y] == m(h - a as i64) {
                        out.push(a);
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Canonical forms of all tabulated members of one volume.
#[derive(Debug, Clone)]
pub struct FamilyMatcher {
    volume: u32,
    members: BTreeMap<CanonicalTuple, Vec<FamilyLabel>>,
}

impl FamilyMatcher {
    pub fn new(volume: u32) -> Self {
        let mut members: BTreeMap<CanonicalTuple, Vec<FamilyLabel>> = BTreeMap::new();
        for id in FamilyId::all_tabulated() {
            let signs: &[Sign] = if id.has_sign() {
                &[Sign::Plus, Sign::Minus]
            } else {
                &[Sign::Plus]
            };
            for &sign in signs {
                if let Ok(t) = family_generate(id, volume, &[], sign) {
                    let label = FamilyLabel {
                        id,
                        params: Vec::new(),
                        sign: id.has_sign().then_some(sign),
                    };
                    members.entry(t.canonical_form()).or_default().push(label);
                }
            }
        }
        FamilyMatcher { volume, members }
    }

    pub fn volume(&self) -> u32 {
        self.volume
    }

    pub fn lookup(&self, canonical: &CanonicalTuple) -> &[FamilyLabel] {
        self.members.get(canonical).map_or(&[], Vec::as_slice)
    }
}

/// Every family label whose member is isomorphic to `t`.
pub fn family_membership(t: &Tuple) -> Vec<FamilyLabel> {
    membership_with(t, &FamilyMatcher::new(t.volume()))
}

/// As [`family_membership`], reusing a matcher built for `t`'s volume.
pub fn membership_with(t: &Tuple, matcher: &FamilyMatcher) -> Vec<FamilyLabel> {
    assert_eq!(t.volume(), matcher.volume(), "matcher built for another volume");
    let mut out = Vec::new();
    if t.dim() != 4 {
        return out;
    }
    if let Some((a, b)) = width1_label(t) {
        out.push(FamilyLabel {
            id: FamilyId::Width1,
            params: vec![a, b],
            sign: None,
        });
    }
    for a in k2_primitive_test(t) {
        out.push(FamilyLabel {
            id: FamilyId::K2Primitive,
            params: vec![a],
            sign: None,
        });
    }
    for a in k2_nonprimitive_test(t) {
        out.push(FamilyLabel {
            id: FamilyId::K2Nonprimitive,
            params: vec![a],
            sign: None,
        });
    }
    out.extend_from_slice(matcher.lookup(&t.canonical_form()));
    out
}

/// Whether `t` lies in any family, without collecting labels.
pub fn in_some_family(t: &Tuple, matcher: &FamilyMatcher) -> bool {
    width1_label(t).is_some()
        || !k2_primitive_test(t).is_empty()
        || !k2_nonprimitive_test(t).is_empty()
        || !matcher.lookup(&t.canonical_form()).is_empty()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    NotHollow,
    /// Hollow but with lattice points other than the vertices.
    NotEmpty,
    Family(Vec<FamilyLabel>),
    Sporadic,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::NotHollow => write!(f, "not-hollow"),
            Classification::NotEmpty => write!(f, "not-empty"),
            Classification::Sporadic => write!(f, "sporadic"),
            Classification::Family(labels) => {
                let parts: Vec<String> = labels.iter().map(ToString::to_string).collect();
                write!(f, "family {}", parts.join(" "))
            }
        }
    }
}

pub fn classify(t: &Tuple) -> Result<Classification, FamilyError> {
    if t.dim() != 4 {
        return Err(FamilyError::DimensionMismatch(t.dim()));
    }
    if !is_hollow(t) {
        return Ok(Classification::NotHollow);
    }
    if !is_empty(t) {
        return Ok(Classification::NotEmpty);
    }
    let labels = family_membership(t);
    Ok(if labels.is_empty() {
        Classification::Sporadic
    } else {
        Classification::Family(labels)
    })
}
