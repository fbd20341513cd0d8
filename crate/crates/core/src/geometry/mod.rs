//! Coordinates for lattice simplices and the invariants read off them.
//!
//! A simplex is stored as its list of vertices. [`realize`] turns a tuple into
//! coordinates and [`tuple_from_simplex`] goes back, detecting simplices whose
//! lattice quotient is not cyclic.

pub mod brute;
pub mod intmat;

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use thiserror::Error;

use crate::arith::{gcd, mod_inverse};
use crate::oracle::is_empty;
use crate::tuple::{Tuple, TupleError};
use intmat::{adjugate, det, maximal_minor_gcd, mul_vec, smith_normal_form, IntMatrix};

pub use brute::count_lattice_points_brute;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeometryError {
    #[error("simplex is degenerate (edge vectors are linearly dependent)")]
    Degenerate,
    #[error("expected {expected} vertices of length {dim}, got {got}")]
    DimensionMismatch { expected: usize, dim: usize, got: String },
    #[error("no entry of {0} is a unit modulo the volume")]
    NoUnitEntry(String),
    #[error("lattice quotient is not cyclic (invariant factors {invariant_factors:?})")]
    NotCyclic { invariant_factors: Vec<u64> },
    #[error("{0} is not an empty 4-simplex")]
    NotEmpty(String),
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error(transparent)]
    Tuple(#[from] TupleError),
}

/// A full-dimensional lattice simplex given by its `d + 1` vertices in `Z^d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplexCoords {
    vertices: Vec<Vec<i64>>,
}

impl SimplexCoords {
    pub fn new(vertices: Vec<Vec<i64>>) -> Result<Self, GeometryError> {
        let d = vertices.len().saturating_sub(1);
        let lens: Vec<usize> = vertices.iter().map(Vec::len).collect();
        if d == 0 || lens.iter().any(|&l| l != d) {
            return Err(GeometryError::DimensionMismatch {
                expected: d + 1,
                dim: d,
                got: format!("{} vertices of lengths {:?}", vertices.len(), lens),
            });
        }
        let s = SimplexCoords { vertices };
        if det(&s.edge_matrix()) == 0 {
            return Err(GeometryError::Degenerate);
        }
        Ok(s)
    }

    /// The standard simplex `conv(0, e_1, ..., e_d)`.
    pub fn standard(d: usize) -> Self {
        let mut vertices = vec![vec![0; d]];
        for i in 0..d {
            let mut e = vec![0; d];
            e[i] = 1;
            vertices.push(e);
        }
        SimplexCoords { vertices }
    }

    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn vertices(&self) -> &[Vec<i64>] {
        &self.vertices
    }

    /// Columns are the edges `v_k - v_0`, `k = 1..=d`.
    pub fn edge_matrix(&self) -> IntMatrix {
        let d = self.dim();
        let v0 = &self.vertices[0];
        (0..d)
            .map(|r| (1..=d).map(|k| self.vertices[k][r] - v0[r]).collect())
            .collect()
    }

    /// Normalized volume, `|det(v_1 - v_0, ..., v_d - v_0)|`.
    pub fn volume(&self) -> u64 {
        det(&self.edge_matrix()).unsigned_abs()
    }
}

impl fmt::Display for SimplexCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.vertices {
            let parts: Vec<String> = v.iter().map(i64::to_string).collect();
            writeln!(f, "{}", parts.join(","))?;
        }
        Ok(())
    }
}

impl FromStr for SimplexCoords {
    type Err = GeometryError;

    /// One vertex per line, comma-separated. Blank lines and `#` comments are skipped.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut vertices = Vec::new();
        for (idx, line) in s.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let v = line
                .split(',')
                .map(|p| p.trim().parse::<i64>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| GeometryError::Parse {
                    line: idx + 1,
                    reason: e.to_string(),
                })?;
            vertices.push(v);
        }
        SimplexCoords::new(vertices)
    }
}

pub fn volume(s: &SimplexCoords) -> u64 {
    s.volume()
}

/// Coordinates for the simplex encoded by `t`.
///
/// The first unit entry `b_i` is normalized to `-1`; the remaining entries are
/// lifted to integers summing to `V + 1` and become the last vertex, while the
/// other vertices are the standard basis vectors. Vertex `k` of the output
/// corresponds to entry `k` of the tuple.
pub fn realize(t: &Tuple) -> Result<SimplexCoords, GeometryError> {
    let d = t.dim();
    let v = t.volume();
    if v == 1 {
        return Ok(SimplexCoords::standard(d));
    }
    let Some(&i) = t.unit_positions().first() else {
        return Err(GeometryError::NoUnitEntry(t.to_string()));
    };
    let inv = mod_inverse(t.residues()[i], v).expect("unit entry");
    let c = t.unit_multiply(-(inv as i64))?;
    let others: Vec<usize> = (0..=d).filter(|&k| k != i).collect();
    let mut lifted: Vec<i64> = others.iter().map(|&k| c.residues()[k] as i64).collect();
    let target = v as i64 + 1;
    let mut sum: i64 = lifted.iter().sum();
    while sum > target {
        let (pos, _) = lifted
            .iter()
            .enumerate()
            .max_by_key(|&(p, &x)| (x, std::cmp::Reverse(p)))
            .expect("nonempty");
        lifted[pos] -= v as i64;
        sum -= v as i64;
    }
    if sum < target {
        *lifted.last_mut().expect("nonempty") += v as i64;
    }
    let mut vertices = vec![Vec::new(); d + 1];
    for (axis, &k) in others.iter().enumerate() {
        let mut e = vec![0; d];
        e[axis] = 1;
        vertices[k] = e;
    }
    vertices[i] = lifted;
    SimplexCoords::new(vertices)
}

/// The tuple of a simplex whose lattice quotient is cyclic.
pub fn tuple_from_simplex(s: &SimplexCoords) -> Result<Tuple, GeometryError> {
    let d = s.dim();
    let m = s.edge_matrix();
    let dt = det(&m);
    if dt == 0 {
        return Err(GeometryError::Degenerate);
    }
    let (factors, u) = smith_normal_form(&m);
    if factors.iter().filter(|&&f| f > 1).count() > 1 {
        return Err(GeometryError::NotCyclic {
            invariant_factors: factors,
        });
    }
    let vol = dt.unsigned_abs() as u32;
    if vol == 1 {
        return Ok(Tuple::unimodular(d));
    }
    // U^{-1} e_last generates Z^d / M Z^d.
    let du = det(&u);
    let u_inv: IntMatrix = adjugate(&u)
        .into_iter()
        .map(|r| r.into_iter().map(|x| x * du).collect())
        .collect();
    let g: Vec<i64> = u_inv.iter().map(|r| r[d - 1]).collect();
    let tail: Vec<i64> = mul_vec(&adjugate(&m), &g)
        .into_iter()
        .map(|x| x * dt.signum())
        .collect();
    let mut b = vec![-tail.iter().sum::<i64>()];
    b.extend(tail);
    Ok(Tuple::new(vol, &b)?)
}

/// Per-facet normalized volumes; entry `i` belongs to the facet opposite vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FacetVolumes(pub Vec<u32>);

impl FacetVolumes {
    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn surface(&self) -> u64 {
        self.0.iter().map(|&x| x as u64).sum()
    }

    pub fn sorted(&self) -> Vec<u32> {
        let mut v = self.0.clone();
        v.sort_unstable();
        v
    }

    pub fn unimodular_count(&self) -> usize {
        self.0.iter().filter(|&&x| x == 1).count()
    }
}

impl fmt::Display for FacetVolumes {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

pub fn facet_volumes(t: &Tuple) -> FacetVolumes {
    FacetVolumes(
        t.residues()
            .iter()
            .map(|&b| gcd(t.volume() as u64, b as u64) as u32)
            .collect(),
    )
}

/// Facet volumes computed from coordinates: the gcd of the maximal minors of
/// each facet's edge matrix.
pub fn facet_volumes_geometric(s: &SimplexCoords) -> FacetVolumes {
    let d = s.dim();
    let vs = s.vertices();
    FacetVolumes(
        (0..=d)
            .map(|skip| {
                let face: Vec<&Vec<i64>> = (0..=d).filter(|&k| k != skip).map(|k| &vs[k]).collect();
                let edges: IntMatrix = (0..d)
                    .map(|r| (1..d).map(|k| face[k][r] - face[0][r]).collect())
                    .collect();
                if d == 1 {
                    1
                } else {
                    maximal_minor_gcd(&edges) as u32
                }
            })
            .collect(),
    )
}

/// Lattice width of a simplex: the least `w` such that some nonzero integer
/// functional takes values in an interval of length `w` on the vertices.
///
/// Functionals are parametrized by their values `y_k = f(v_k - v_0)`; for a
/// given `w` every candidate has `|y_k| <= w`, and `y` comes from an integer
/// functional exactly when `adj(M)^T y` is divisible by `det M`.
pub fn width(s: &SimplexCoords) -> u64 {
    let d = s.dim();
    let m = s.edge_matrix();
    let dt = det(&m) as i128;
    let adj = adjugate(&m);
    let integral = |y: &[i64]| {
        (0..d).all(|k| {
            let num: i128 = (0..d).map(|i| adj[i][k] as i128 * y[i] as i128).sum();
            num % dt == 0
        })
    };
    let mut w = 1i64;
    loop {
        let mut y = vec![-w; d];
        loop {
            let hi = y.iter().copied().max().unwrap().max(0);
            let lo = y.iter().copied().min().unwrap().min(0);
            if hi - lo == w && integral(&y) {
                return w as u64;
            }
            let mut i = 0;
            while i < d {
                if y[i] < w {
                    y[i] += 1;
                    break;
                }
                y[i] = -w;
                i += 1;
            }
            if i == d {
                break;
            }
        }
        w += 1;
    }
}

/// Width computed on the tuple: the least `w` admitting integers `c_i` with
/// `max c - min c = w` and `sum c_i b_i = 0 (mod V)`.
pub fn tuple_width(t: &Tuple) -> u32 {
    let n = t.dim() + 1;
    let v = t.volume() as u64;
    let b = t.residues();
    let mut w = 1u32;
    loop {
        let mut c = vec![0u32; n];
        loop {
            let hi = *c.iter().max().unwrap();
            let lo = *c.iter().min().unwrap();
            if lo == 0 && hi == w {
                let s: u64 = c.iter().zip(b).map(|(&x, &y)| x as u64 * y as u64).sum();
                if s % v == 0 {
                    return w;
                }
            }
            let mut i = 0;
            while i < n {
                if c[i] < w {
                    c[i] += 1;
                    break;
                }
                c[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
        }
        w += 1;
    }
}

/// The `h*`-vector of an empty 4-simplex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HStar(pub [u64; 5]);

impl fmt::Display for HStar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let h = self.0;
        write!(f, "{} {} {} {} {}", h[0], h[1], h[2], h[3], h[4])
    }
}

fn require_empty_4(t: &Tuple) -> Result<u64, GeometryError> {
    if t.dim() != 4 || !is_empty(t) {
        return Err(GeometryError::NotEmpty(t.to_string()));
    }
    Ok(facet_volumes(t).surface())
}

pub fn hstar(t: &Tuple) -> Result<HStar, GeometryError> {
    let s = require_empty_4(t)? as i64;
    let v = t.volume() as i64;
    let h2 = (v + s) / 2 - 3;
    let h3 = (v - s) / 2 + 2;
    debug_assert_eq!((v + s) % 2, 0);
    Ok(HStar([1, 0, h2 as u64, h3 as u64, 0]))
}

/// Ehrhart polynomial of an empty 4-simplex, coefficients from `n^4` down to `n^0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EhrhartPolynomial(pub [Ratio<i64>; 5]);

impl EhrhartPolynomial {
    pub fn coefficients(&self) -> &[Ratio<i64>; 5] {
        &self.0
    }

    pub fn eval(&self, n: i64) -> Ratio<i64> {
        self.0
            .iter()
            .fold(Ratio::from_integer(0), |acc, &c| acc * n + c)
    }
}

pub fn ehrhart_polynomial(t: &Tuple) -> Result<EhrhartPolynomial, GeometryError> {
    let s = require_empty_4(t)? as i64;
    let v = t.volume() as i64;
    let r = Ratio::new;
    Ok(EhrhartPolynomial([
        r(v, 24),
        r(s, 12),
        r(3, 2) - r(v, 24),
        r(5, 2) - r(s, 12),
        r(1, 1),
    ]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::binomial;
    use crate::oracle::count_lattice_points_by_coset;

    fn tup(v: u32, b: &[i64]) -> Tuple {
        Tuple::new(v, b).unwrap()
    }

    #[test]
    fn realize_reproduces_worked_example() {
        let t = tup(100, &[9, 1, -2, -3, -5]);
        let s = realize(&t).unwrap();
        assert_eq!(s.vertices()[0], vec![11, -22, 67, 45]);
        assert_eq!(&s.vertices()[1..], &SimplexCoords::standard(4).vertices()[1..]);
        assert_eq!(s.volume(), 100);
        let back = tuple_from_simplex(&s).unwrap();
        assert!(back.is_isomorphic(&t).unwrap());
        assert_eq!(facet_volumes(&t).0, vec![1, 1, 2, 1, 5]);
        assert_eq!(facet_volumes_geometric(&s), facet_volumes(&t));
    }

    #[test]
    fn realize_width_one_normal_form() {
        // (-1, -a-b, a, b, 1) is the simplex conv(0, e2, e3, e4, (V, a, b, 1)).
        let (v, a, b) = (29i64, 4i64, 7i64);
        let t = tup(v as u32, &[-1, -a - b, a, b, 1]);
        let s = SimplexCoords::new(vec![
            vec![0, 0, 0, 0],
            vec![0, 1, 0, 0],
            vec![0, 0, 1, 0],
            vec![0, 0, 0, 1],
            vec![v, a, b, 1],
        ])
        .unwrap();
        assert!(tuple_from_simplex(&s).unwrap().is_isomorphic(&t).unwrap());
        assert!(tuple_from_simplex(&realize(&t).unwrap()).unwrap().is_isomorphic(&t).unwrap());
        assert_eq!(width(&s), 1);
    }

    #[test]
    fn unimodular_and_standard() {
        let t = Tuple::unimodular(4);
        let s = realize(&t).unwrap();
        assert_eq!(s, SimplexCoords::standard(4));
        assert_eq!(s.volume(), 1);
        assert_eq!(tuple_from_simplex(&s).unwrap(), t);
        assert_eq!(width(&s), 1);
        assert_eq!(facet_volumes(&t).0, vec![1; 5]);
        assert_eq!(facet_volumes_geometric(&s).0, vec![1; 5]);
    }

    #[test]
    fn white_tetrahedron() {
        let (p, q) = (2i64, 5i64);
        let s = SimplexCoords::new(vec![vec![0, 0, 0], vec![1, 0, 0], vec![0, 0, 1], vec![p, q, 1]]).unwrap();
        assert_eq!(s.volume(), 5);
        let t = tuple_from_simplex(&s).unwrap();
        assert!(t.is_isomorphic(&tup(q as u32, &[p, -p, -1, 1])).unwrap());
        assert_eq!(facet_volumes_geometric(&s).0, vec![1, 1, 1, 1]);
        assert_eq!(width(&s), 1);
    }

    #[test]
    fn non_cyclic_quotient() {
        let s = SimplexCoords::new(vec![vec![0, 0], vec![2, 0], vec![0, 2]]).unwrap();
        assert_eq!(
            tuple_from_simplex(&s),
            Err(GeometryError::NotCyclic { invariant_factors: vec![2, 2] })
        );
    }

    #[test]
    fn no_unit_entry() {
        let t = tup(30, &[2, 3, 5, 6, 14]);
        assert!(matches!(realize(&t), Err(GeometryError::NoUnitEntry(_))));
    }

    #[test]
    fn degenerate_and_parse() {
        assert_eq!(
            SimplexCoords::new(vec![vec![0, 0], vec![1, 1], vec![2, 2]]),
            Err(GeometryError::Degenerate)
        );
        let s: SimplexCoords = "0,0,0\n1,0,0\n\n0,0,1  # apex\n2, 5, 1\n".parse().unwrap();
        assert_eq!(s.volume(), 5);
        assert_eq!(s.to_string().parse::<SimplexCoords>().unwrap(), s);
        assert!(matches!("0,0\n1,x\n0,1".parse::<SimplexCoords>(), Err(GeometryError::Parse { line: 2, .. })));
        assert!(matches!("0,0\n1,0".parse::<SimplexCoords>(), Err(GeometryError::DimensionMismatch { .. })));
    }

    #[test]
    fn hstar_examples() {
        let cases = [
            (42, [4, 7, 15, 17, 41], [1, 0, 25, 16, 0]),
            (60, [2, 13, 21, 25, 59], [1, 0, 33, 26, 0]),
            (120, [2, 13, 25, 81, 119], [1, 0, 63, 56, 0]),
        ];
        for (v, b, h) in cases {
            let t = tup(v, &b);
            assert_eq!(hstar(&t).unwrap(), HStar(h));
        }
        assert_eq!(facet_volumes(&tup(42, &[4, 7, 15, 17, 41])).0, vec![2, 7, 3, 1, 1]);
        assert!(matches!(hstar(&tup(5, &[1, 1, 1, 1, 1])), Err(GeometryError::NotEmpty(_))));
    }

    #[test]
    fn ehrhart_matches_coset_counts_and_hstar() {
        let t = tup(42, &[4, 7, 15, 17, 41]);
        let e = ehrhart_polynomial(&t).unwrap();
        let r = Ratio::new;
        assert_eq!(
            e.0,
            [r(42, 24), r(14, 12), r(3, 2) - r(42, 24), r(5, 2) - r(14, 12), r(1, 1)]
        );
        let h = hstar(&t).unwrap().0;
        for n in 0..8i64 {
            let count = count_lattice_points_by_coset(&t, n as u64);
            assert_eq!(e.eval(n), Ratio::from_integer(count as i64));
            // sum_i h*_i C(n - i + 4, 4)
            let from_h: u128 = (0..5).map(|i| h[i] as u128 * binomial(n - i as i64 + 4, 4)).sum();
            assert_eq!(from_h, count);
        }
        assert_eq!(e.eval(0), Ratio::from_integer(1));
        assert_eq!(e.eval(1), Ratio::from_integer(5));
    }

    #[test]
    fn brute_force_agrees_with_cosets() {
        for (v, b) in [(42, [4, 7, 15, 17, 41]), (5, [1, 1, 1, 1, 1]), (12, [1, 5, 7, 11, 0])] {
            let t = tup(v, &b);
            let s = realize(&t).unwrap();
            for n in 0..4 {
                assert_eq!(
                    count_lattice_points_brute(&s, n).unwrap(),
                    count_lattice_points_by_coset(&t, n)
                );
            }
        }
    }

    #[test]
    fn widths_agree_on_small_tuples() {
        for (v, b) in [(42u32, [4i64, 7, 15, 17, 41]), (100, [9, 1, -2, -3, -5]), (29, [1, -1, 3, 7, -10])] {
            let t = tup(v, &b);
            assert_eq!(tuple_width(&t) as u64, width(&realize(&t).unwrap()));
        }
    }
}
