//! Small number-theoretic helpers on machine integers.
//!
//! Volumes stay below a few thousand, so everything here is plain `u64`/`i64`
//! arithmetic without overflow concerns for the products we form.

/// Greatest common divisor; `gcd(0, 0) = 0`.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

pub fn gcd_i64(a: i64, b: i64) -> i64 {
    gcd(a.unsigned_abs(), b.unsigned_abs()) as i64
}

/// Reduces `x` into `[0, m)`.
pub fn reduce(x: i64, m: u32) -> u32 {
    x.rem_euclid(m as i64) as u32
}

/// Extended Euclid: returns `(g, s, t)` with `s*a + t*b = g = gcd(a, b)`.
pub fn extended_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i64, 0i64);
    let (mut old_t, mut t) = (0i64, 1i64);
    while r != 0 {
        let q = old_r.div_euclid(r);
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Inverse of `a` modulo `m`, if `a` is a unit. Modulo 1 every residue is 0
/// and 0 counts as a unit.
pub fn mod_inverse(a: u32, m: u32) -> Option<u32> {
    if m == 1 {
        return Some(0);
    }
    let (g, s, _) = extended_gcd(a as i64, m as i64);
    (g == 1).then(|| reduce(s, m))
}

pub fn is_unit(a: u32, m: u32) -> bool {
    gcd(a as u64, m as u64) == 1
}

/// The units of `Z_m`, in increasing order (`[0]` for `m = 1`).
pub fn units(m: u32) -> Vec<u32> {
    if m == 1 {
        return vec![0];
    }
    (1..m).filter(|&u| is_unit(u, m)).collect()
}

/// Distinct prime factors of `n`, increasing.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Binomial coefficient `C(n, k)`; zero when `n < k` or `n < 0`.
pub fn binomial(n: i64, k: u32) -> u128 {
    if n < k as i64 {
        return 0;
    }
    let n = n as u128;
    let mut acc: u128 = 1;
    for i in 0..k as u128 {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverses() {
        assert_eq!(mod_inverse(11, 100), Some(91));
        assert_eq!(mod_inverse(5, 39), Some(8));
        assert_eq!(mod_inverse(6, 9), None);
        assert_eq!(mod_inverse(0, 1), Some(0));
        for m in 2..60u32 {
            for a in units(m) {
                let inv = mod_inverse(a, m).unwrap();
                assert_eq!(a as u64 * inv as u64 % m as u64, 1);
            }
        }
    }

    #[test]
    fn units_count_matches_totient() {
        assert_eq!(units(1), vec![0]);
        assert_eq!(units(12), vec![1, 5, 7, 11]);
        assert_eq!(units(101).len(), 100);
    }

    #[test]
    fn factors_and_binomials() {
        assert_eq!(prime_factors(100), vec![2, 5]);
        assert_eq!(prime_factors(419), vec![419]);
        assert_eq!(prime_factors(1), Vec::<u64>::new());
        assert_eq!(binomial(6, 4), 15);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(-1, 4), 0);
        assert_eq!(binomial(4, 0), 1);
    }
}
