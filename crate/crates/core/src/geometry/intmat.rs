//! Dense integer matrices of small size: determinants, adjugates, Smith
//! normal form with a left transform, and LLL row reduction.

use crate::arith::gcd;

pub type IntMatrix = Vec<Vec<i64>>;

pub fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| (i == j) as i64).collect())
        .collect()
}

pub fn transpose(m: &IntMatrix) -> IntMatrix {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len())
        .map(|j| m.iter().map(|row| row[j]).collect())
        .collect()
}

pub fn mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let inner = b.len();
    let cols = if inner == 0 { 0 } else { b[0].len() };
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).map(|k| row[k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

pub fn mul_vec(a: &IntMatrix, x: &[i64]) -> Vec<i64> {
    a.iter()
        .map(|row| row.iter().zip(x).map(|(p, q)| p * q).sum())
        .collect()
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn det(m: &IntMatrix) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    (sign * a[n - 1][n - 1]) as i64
}

fn minor(m: &IntMatrix, skip_row: usize, skip_col: usize) -> IntMatrix {
    m.iter()
        .enumerate()
        .filter(|&(i, _)| i != skip_row)
        .map(|(_, row)| {
            row.iter()
                .enumerate()
                .filter(|&(j, _)| j != skip_col)
                .map(|(_, &x)| x)
                .collect()
        })
        .collect()
}

/// Adjugate: `m * adj(m) = det(m) * I`.
pub fn adjugate(m: &IntMatrix) -> IntMatrix {
    let n = m.len();
    if n == 1 {
        return vec![vec![1]];
    }
    let mut adj = vec![vec![0; n]; n];
    for (i, row) in adj.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            let c = det(&minor(m, j, i));
            *entry = if (i + j) % 2 == 0 { c } else { -c };
        }
    }
    adj
}

/// gcd of the maximal minors of a tall `n x (n-1)` matrix.
pub fn maximal_minor_gcd(m: &IntMatrix) -> u64 {
    let rows = m.len();
    let mut g = 0;
    for skip in 0..rows {
        let sub: IntMatrix = m
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != skip)
            .map(|(_, r)| r.clone())
            .collect();
        g = gcd(g, det(&sub).unsigned_abs());
    }
    g
}

/// Smith normal form `U * m * W = diag(d_1, ..., d_n)` of a nonsingular
/// square matrix, with `d_i | d_{i+1}` and `d_i > 0`. Returns the diagonal
/// and the unimodular left factor `U`.
pub fn smith_normal_form(m: &IntMatrix) -> (Vec<u64>, IntMatrix) {
    let n = m.len();
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut u: Vec<Vec<i128>> = identity(n)
        .into_iter()
        .map(|r| r.into_iter().map(|x| x as i128).collect())
        .collect();

    for t in 0..n {
        loop {
            let pivot = (t..n)
                .flat_map(|i| (t..n).map(move |j| (i, j)))
                .filter(|&(i, j)| a[i][j] != 0)
                .min_by_key(|&(i, j)| a[i][j].abs());
            let Some((pi, pj)) = pivot else {
                break;
            };
            a.swap(t, pi);
            u.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            let p = a[t][t];
            let mut clean = true;
            for i in t + 1..n {
                let q = a[i][t].div_euclid(p);
                if q != 0 {
                    for j in 0..n {
                        a[i][j] -= q * a[t][j];
                        u[i][j] -= q * u[t][j];
                    }
                }
                clean &= a[i][t] == 0;
            }
            for j in t + 1..n {
                let q = a[t][j].div_euclid(p);
                if q != 0 {
                    for row in a.iter_mut() {
                        row[j] -= q * row[t];
                    }
                }
                clean &= a[t][j] == 0;
            }
            if !clean {
                continue;
            }
            let bad_row = (t + 1..n).find(|&i| (t + 1..n).any(|j| a[i][j] % p != 0));
            match bad_row {
                Some(i) => {
                    for j in 0..n {
                        a[t][j] += a[i][j];
                        u[t][j] += u[i][j];
                    }
                }
                None => break,
            }
        }
        if a[t][t] < 0 {
            for j in 0..n {
                a[t][j] = -a[t][j];
                u[t][j] = -u[t][j];
            }
        }
    }
    let diag = (0..n).map(|i| a[i][i] as u64).collect();
    let u = u
        .into_iter()
        .map(|r| r.into_iter().map(|x| x as i64).collect())
        .collect();
    (diag, u)
}

/// LLL-reduces the rows of `rows` in place (`delta = 3/4`). The rows must be
/// linearly independent; the row lattice is unchanged.
pub fn lll_reduce_rows(rows: &mut IntMatrix) {
    let n = rows.len();
    if n < 2 {
        return;
    }
    let dot = |a: &[f64], b: &[f64]| a.iter().zip(b).map(|(x, y)| x * y).sum::<f64>();
    let gram_schmidt = |rows: &IntMatrix| {
        let mut star: Vec<Vec<f64>> = Vec::with_capacity(n);
        let mut mu = vec![vec![0.0; n]; n];
        for i in 0..n {
            let mut v: Vec<f64> = rows[i].iter().map(|&x| x as f64).collect();
            let bi = v.clone();
            for j in 0..i {
                mu[i][j] = dot(&bi, &star[j]) / dot(&star[j], &star[j]);
                for (x, s) in v.iter_mut().zip(&star[j]) {
                    *x -= mu[i][j] * s;
                }
            }
            star.push(v);
        }
        let norms: Vec<f64> = star.iter().map(|s| dot(s, s)).collect();
        (mu, norms)
    };
    let mut k = 1;
    let mut guard = 0;
    while k < n && guard < 10_000 {
        guard += 1;
        for j in (0..k).rev() {
            let (mu, _) = gram_schmidt(rows);
            let q = mu[k][j].round() as i64;
            if q != 0 {
                let rj = rows[j].clone();
                for (x, y) in rows[k].iter_mut().zip(rj) {
                    *x -= q * y;
                }
            }
        }
        let (mu, norms) = gram_schmidt(rows);
        if norms[k] >= (0.75 - mu[k][k - 1] * mu[k][k - 1]) * norms[k - 1] {
            k += 1;
        } else {
            rows.swap(k, k - 1);
            k = (k - 1).max(1);
        }
    }
}
