//! Literal family data.
//!
//! Primitive rows are the integer affine dependences of the 29 primitive
//! bipyramids. Nonprimitive rows carry the index `I`, the scaled offset
//! `I * a` and the dependence `b`; the member of volume `V = kI` is
//! `±k (I a) + b`. Each nonprimitive row also carries the same tuple written
//! symbolically in `k` (pairs `(coefficient of ±k, constant)`), which is
//! checked against `I a` and `b` by the tests.

/// A restriction on `±k` modulo 2 or 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cond {
    Any,
    Eq(u32),
    Ne(u32),
    Never,
}

impl Cond {
    pub fn holds(self, x: i64, m: i64) -> bool {
        let r = x.rem_euclid(m) as u32;
        match self {
            Cond::Any => true,
            Cond::Eq(c) => r == c,
            Cond::Ne(c) => r != c,
            Cond::Never => false,
        }
    }
}

impl std::fmt::Display for Cond {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Cond::Any => write!(f, "-"),
            Cond::Eq(c) => write!(f, "={c}"),
            Cond::Ne(c) => write!(f, "!={c}"),
            Cond::Never => write!(f, "never"),
        }
    }
}

pub const PRIMITIVE: [[i64; 5]; 29] = [
    [9, 1, -2, -3, -5],
    [9, 2, -1, -4, -6],
    [12, 3, -4, -5, -6],
    [12, 2, -3, -4, -7],
    [9, 4, -2, -3, -8],
    [12, 1, -2, -3, -8],
    [12, 3, -1, -6, -8],
    [15, 4, -5, -6, -8],
    [12, 2, -1, -4, -9],
    [10, 6, -2, -5, -9],
    [15, 1, -2, -5, -9],
    [12, 5, -3, -4, -10],
    [15, 2, -3, -4, -10],
    [6, 4, 3, -1, -12],
    [7, 5, 3, -1, -14],
    [9, 7, 1, -3, -14],
    [15, 7, -3, -5, -14],
    [8, 5, 3, -1, -15],
    [10, 6, 1, -2, -15],
    [12, 5, 2, -4, -15],
    [9, 6, 4, -1, -18],
    [9, 6, 5, -2, -18],
    [12, 9, 1, -4, -18],
    [10, 7, 4, -1, -20],
    [10, 8, 3, -1, -20],
    [10, 9, 4, -3, -20],
    [12, 10, 1, -3, -20],
    [12, 8, 5, -1, -24],
    [15, 10, 6, -1, -30],
];

/// Worst-case facet volumes of primitive members: facet `i` has volume
/// `gcd(V, v_i)`. Rows not listed have all facets unimodular.
pub const PRIMITIVE_MAX_FACETS: [([i64; 5], [u32; 5]); 12] = [
    ([15, 1, -2, -5, -9], [1, 1, 2, 1, 1]),
    ([9, 7, 1, -3, -14], [1, 1, 1, 1, 2]),
    ([15, 7, -3, -5, -14], [1, 1, 1, 1, 2]),
    ([10, 8, 3, -1, -20], [1, 1, 3, 1, 1]),
    ([12, 3, -4, -5, -6], [1, 1, 1, 5, 1]),
    ([9, 6, 5, -2, -18], [1, 1, 5, 1, 1]),
    ([12, 8, 5, -1, -24], [1, 1, 5, 1, 1]),
    ([12, 2, -3, -4, -7], [1, 1, 1, 1, 7]),
    ([10, 7, 4, -1, -20], [1, 7, 1, 1, 1]),
    ([8, 5, 3, -1, -15], [8, 1, 1, 1, 1]),
    ([9, 1, -2, -3, -5], [1, 1, 2, 1, 5]),
    ([7, 5, 3, -1, -14], [1, 5, 3, 1, 2]),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NonprimitiveRow {
    pub index: u32,
    /// `I * a`.
    pub offset: [i64; 5],
    pub dependence: [i64; 5],
    /// `±k I a + b` as `(coefficient of ±k, constant)` per entry.
    pub in_k: [(i64, i64); 5],
    pub mod2: Cond,
    pub mod3: Cond,
    /// Worst-case facet volumes; `None` for rows that are never empty.
    pub max_facets: Option<[u32; 5]>,
}

use Cond::{Any, Never};

const fn row(
    index: u32,
    offset: [i64; 5],
    dependence: [i64; 5],
    in_k: [(i64, i64); 5],
    mod2: Cond,
    mod3: Cond,
    max_facets: Option<[u32; 5]>,
) -> NonprimitiveRow {
    NonprimitiveRow {
        index,
        offset,
        dependence,
        in_k,
        mod2,
        mod3,
        max_facets,
    }
}

pub const NONPRIMITIVE: [NonprimitiveRow; 23] = [
    // index 2
    row(2, [0, 0, 1, 1, 0], [3, -1, -6, 2, 2],
        [(0, 3), (0, -1), (1, -6), (1, 2), (0, 2)], Cond::Eq(1), Cond::Ne(0), Some([1, 1, 1, 1, 2])),
    row(2, [1, 0, 0, 0, 1], [4, -3, 1, -4, 2],
        [(1, 4), (0, -3), (0, 1), (0, -4), (1, 2)], Cond::Eq(1), Any, Some([1, 3, 1, 2, 1])),
    row(2, [0, 0, 1, 0, 1], [4, -2, -6, 3, 1],
        [(0, 4), (0, -2), (1, -6), (0, 3), (1, 1)], Never, Any, None),
    row(2, [1, 0, 0, 0, 1], [2, 3, -1, -8, 4],
        [(1, 2), (0, 3), (0, -1), (0, -8), (1, 4)], Cond::Eq(1), Any, Some([1, 3, 1, 2, 1])),
    row(2, [0, 1, 1, 0, 0], [1, -6, 2, 6, -3],
        [(0, 1), (1, -6), (1, 2), (0, 6), (0, -3)], Cond::Eq(1), Cond::Ne(0), Some([1, 1, 1, 2, 1])),
    row(2, [1, 0, 1, 0, 0], [6, -8, 4, -3, 1],
        [(1, 6), (0, -8), (1, 4), (0, -3), (0, 1)], Cond::Eq(1), Cond::Ne(0), Some([1, 2, 1, 1, 1])),
    row(2, [0, 1, 0, 0, 1], [1, 6, -4, -6, 3],
        [(0, 1), (1, 6), (0, -4), (0, -6), (1, 3)], Never, Any, None),
    row(2, [1, 0, 0, 0, 1], [4, 3, -1, -12, 6],
        [(1, 4), (0, 3), (0, -1), (0, -12), (1, 6)], Cond::Eq(1), Cond::Ne(0), Some([1, 1, 1, 2, 1])),
    row(2, [0, 1, 0, 0, 1], [3, -1, 4, -12, 6],
        [(0, 3), (1, -1), (0, 4), (0, -12), (1, 6)], Never, Any, None),
    // index 4
    row(4, [2, 1, 1, 0, 0], [3, -3, 1, -2, 1],
        [(2, 3), (1, -3), (1, 1), (0, -2), (0, 1)], Cond::Eq(0), Cond::Ne(0), Some([1, 1, 1, 2, 1])),
    row(4, [0, 1, 1, 0, 2], [1, 2, -1, -4, 2],
        [(0, 1), (1, 2), (1, -1), (0, -4), (2, 2)], Never, Any, None),
    row(4, [0, 0, 1, 2, 1], [1, -4, 1, 4, -2],
        [(0, 1), (0, -4), (1, 1), (2, 4), (1, -2)], Never, Any, None),
    row(4, [0, 1, 1, 0, 2], [1, 3, -1, -6, 3],
        [(0, 1), (1, 3), (1, -1), (0, -6), (2, 3)], Cond::Eq(0), Cond::Ne(0), Some([1, 1, 1, 2, 1])),
    // index 3
    row(3, [0, 0, 2, 1, 0], [-3, 2, 1, 1, -1],
        [(0, -3), (0, 2), (2, 1), (1, 1), (0, -1)], Any, Cond::Eq(0), Some([3, 2, 1, 1, 1])),
    row(3, [1, 0, 2, 0, 0], [3, -3, 1, -2, 1],
        [(1, 3), (0, -3), (2, 1), (0, -2), (0, 1)], Any, Cond::Eq(2), Some([1, 3, 1, 2, 1])),
    row(3, [0, 0, 1, 2, 0], [-3, 1, 2, 2, -2],
        [(0, -3), (0, 1), (1, 2), (2, 2), (0, -2)], Cond::Eq(1), Cond::Eq(0), Some([3, 1, 1, 1, 1])),
    row(3, [0, 0, 1, 2, 0], [4, -2, -4, 1, 1],
        [(0, 4), (0, -2), (1, -4), (2, 1), (0, 1)], Cond::Eq(1), Cond::Ne(1), Some([1, 1, 1, 1, 1])),
    row(3, [1, 0, 2, 0, 0], [3, -6, 2, 2, -1],
        [(1, 3), (0, -6), (2, 2), (0, 2), (0, -1)], Cond::Eq(1), Cond::Eq(1), Some([1, 3, 1, 1, 1])),
    row(3, [1, 0, 2, 0, 0], [4, -6, 1, 2, -1],
        [(1, 4), (0, -6), (2, 1), (0, 2), (0, -1)], Cond::Eq(1), Cond::Eq(0), Some([1, 3, 1, 1, 1])),
    row(3, [1, 0, 2, 0, 0], [4, -3, 1, -4, 2],
        [(1, 4), (0, -3), (2, 1), (0, -4), (0, 2)], Cond::Eq(1), Cond::Eq(0), Some([1, 3, 1, 1, 1])),
    row(3, [1, 0, 2, 0, 0], [2, -1, 2, -6, 3],
        [(1, 2), (0, -1), (2, 2), (0, -6), (0, 3)], Never, Any, None),
    row(3, [0, 0, 1, 1, 1], [1, -6, 2, 6, -3],
        [(0, 1), (0, -6), (1, 2), (1, 6), (1, -3)], Cond::Eq(1), Cond::Eq(2), Some([1, 3, 1, 1, 1])),
    // index 6
    row(6, [1, 0, 0, 4, 1], [1, -3, 1, 2, -1],
        [(1, 1), (0, -3), (0, 1), (4, 2), (1, -1)], Cond::Eq(0), Cond::Eq(0), Some([1, 3, 1, 2, 1])),
];
