//! Direct lattice-point counting in dilated simplices, independent of the
//! coset description.

use super::intmat::{adjugate, det, lll_reduce_rows, IntMatrix};
use super::{GeometryError, SimplexCoords};

/// Number of lattice points in `n * s` (boundary included).
///
/// The edge matrix is LLL-reduced first so the bounding box stays small. The
/// first `d-1` coordinates are enumerated over the box and the admissible
/// interval for the last coordinate is solved exactly.
pub fn count_lattice_points_brute(s: &SimplexCoords, n: u64) -> Result<u128, GeometryError> {
    let d = s.dim();
    let base = &s.vertices()[0];
    // Rows are coordinates, columns are edges v_k - v_0.
    let mut edges: IntMatrix = (0..d)
        .map(|r| (1..=d).map(|k| s.vertices()[k][r] - base[r]).collect())
        .collect();
    let dt = det(&edges);
    if dt == 0 {
        return Err(GeometryError::Degenerate);
    }
    if n == 0 {
        return Ok(1);
    }
    lll_reduce_rows(&mut edges);
    let dt = det(&edges) as i128;
    let sgn = dt.signum();
    // A x = |det| * M^{-1} x: scaled barycentric coordinates of x w.r.t. the edges.
    let a: Vec<Vec<i128>> = adjugate(&edges)
        .into_iter()
        .map(|r| r.into_iter().map(|x| sgn * x as i128).collect())
        .collect();
    let cap = n as i128 * dt.abs();
    let n = n as i64;

    let mut lo = vec![0i64; d];
    let mut hi = vec![0i64; d];
    for r in 0..d {
        for k in 0..d {
            lo[r] = lo[r].min(n * edges[r][k]);
            hi[r] = hi[r].max(n * edges[r][k]);
        }
    }
    let colsum: Vec<i128> = (0..d).map(|c| a.iter().map(|row| row[c]).sum()).collect();
    let last = d - 1;

    let mut count: u128 = 0;
    let mut x: Vec<i64> = lo.clone();
    loop {
        // Partial sums over the first d-1 coordinates.
        let mut t_lo = lo[last] as i128;
        let mut t_hi = hi[last] as i128;
        let mut feasible = true;
        let mut bound = |rest: i128, coef: i128, upper: Option<i128>| {
            // Constraint: rest + coef * t >= 0, or rest + coef * t <= upper.
            match upper {
                None => {
                    if coef > 0 {
                        t_lo = t_lo.max(ceil_div(-rest, coef));
                    } else if coef < 0 {
                        t_hi = t_hi.min(floor_div(rest, -coef));
                    } else if rest < 0 {
                        feasible = false;
                    }
                }
                Some(u) => {
                    if coef > 0 {
                        t_hi = t_hi.min(floor_div(u - rest, coef));
                    } else if coef < 0 {
                        t_lo = t_lo.max(ceil_div(rest - u, -coef));
                    } else if rest > u {
                        feasible = false;
                    }
                }
            }
        };
        let mut total_rest = 0i128;
        for row in &a {
            let rest: i128 = (0..last).map(|c| row[c] * x[c] as i128).sum();
            total_rest += rest;
            bound(rest, row[last], None);
        }
        bound(total_rest, colsum[last], Some(cap));
        if feasible && t_lo <= t_hi {
            count += (t_hi - t_lo + 1) as u128;
        }

        let mut i = 0;
        while i < last {
            if x[i] < hi[i] {
                x[i] += 1;
                break;
            }
            x[i] = lo[i];
            i += 1;
        }
        if i == last {
            break;
        }
    }
    Ok(count)
}

fn floor_div(a: i128, b: i128) -> i128 {
    a.div_euclid(b)
}

fn ceil_div(a: i128, b: i128) -> i128 {
    -((-a).div_euclid(b))
}
