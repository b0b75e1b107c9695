//! Möbius function, Jordan totients and the Riemann zeta values used for densities.

/// Möbius function by trial division.
///
/// # Panics
/// If `a == 0`.
pub fn mobius(a: u64) -> i8 {
    assert!(a >= 1, "mobius is defined for positive integers");
    let mut a = a;
    let mut sign = 1i8;
    let mut p = 2u64;
    while p * p <= a {
        if a.is_multiple_of(p) {
            a /= p;
            if a.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if a > 1 {
        sign = -sign;
    }
    sign
}

fn divisors(k: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= k {
        if k.is_multiple_of(i) {
            small.push(i);
            if i * i != k {
                large.push(k / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Jordan's totient `J_r(k) = sum_{a | k} mu(a) (k / a)^r`: the number of
/// `r`-tuples in `[1, k]^r` that are coprime together with `k`.
///
/// # Panics
/// If `r == 0`, `k == 0`, or the value does not fit in `u128`.
pub fn jordan_totient(r: u32, k: u64) -> u128 {
    assert!(r >= 1 && k >= 1, "jordan_totient needs r >= 1 and k >= 1");
    let mut acc: i128 = 0;
    for a in divisors(k) {
        let m = mobius(a);
        if m == 0 {
            continue;
        }
        let term = ((k / a) as i128)
            .checked_pow(r)
            .expect("J_r(k) overflows");
        acc += m as i128 * term;
    }
    acc as u128
}

/// `sum_{i=1}^m J_{d-1}(i)`.
///
/// # Panics
/// If `m == 0` or `d < 2`.
pub fn jordan_partial_sum(m: u64, d: u32) -> u128 {
    assert!(m >= 1 && d >= 2, "jordan_partial_sum needs m >= 1 and d >= 2");
    (1..=m).map(|i| jordan_totient(d - 1, i)).sum()
}

/// `zeta(s)` for `s >= 2`, by a partial sum with an Euler-Maclaurin tail; absolute
/// error far below `1e-9`.
pub fn zeta(s: u32) -> f64 {
    assert!(s >= 2, "zeta diverges at s = 1");
    const N: u32 = 1000;
    let s_f = s as f64;
    let head: f64 = (1..N).rev().map(|k| (k as f64).powi(-(s as i32))).sum();
    let n = N as f64;
    // sum_{k >= N} k^-s ~ N^{1-s}/(s-1) + N^-s/2 + s N^{-s-1}/12 - s(s+1)(s+2) N^{-s-3}/720
    let tail = n.powf(1.0 - s_f) / (s_f - 1.0) + 0.5 * n.powf(-s_f) + s_f * n.powf(-s_f - 1.0) / 12.0
        - s_f * (s_f + 1.0) * (s_f + 2.0) * n.powf(-s_f - 3.0) / 720.0;
    head + tail
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;

    /// Direct count of r-tuples in [1,k]^r with gcd(t_1, ..., t_r, k) = 1.
    fn jordan_direct(r: u32, k: u64) -> u128 {
        let mut count = 0u128;
        let mut t = vec![1u64; r as usize];
        loop {
            if t.iter().fold(k, |g, &x| g.gcd(&x)) == 1 {
                count += 1;
            }
            let mut i = 0;
            loop {
                if i == t.len() {
                    return count;
                }
                if t[i] < k {
                    t[i] += 1;
                    break;
                }
                t[i] = 1;
                i += 1;
            }
        }
    }

    #[test]
    fn mobius_values() {
        assert_eq!(mobius(1), 1);
        assert_eq!(mobius(12), 0);
        assert_eq!(mobius(30), -1);
        assert_eq!(mobius(7), -1);
        assert_eq!(mobius(6), 1);
    }

    #[test]
    fn jordan_values() {
        assert_eq!(jordan_totient(1, 6), 2);
        assert_eq!(jordan_totient(2, 2), 3);
        for r in 1..6 {
            assert_eq!(jordan_totient(r, 1), 1);
        }
    }

    #[test]
    fn jordan_formula_matches_direct_count() {
        for r in 1..=3 {
            for k in 1..=50 {
                assert_eq!(jordan_totient(r, k), jordan_direct(r, k), "r={r} k={k}");
            }
        }
    }

    #[test]
    fn partial_sums() {
        assert_eq!(jordan_partial_sum(1, 2), 1);
        assert_eq!(jordan_partial_sum(3, 2), 4);
        assert_eq!(jordan_partial_sum(2, 3), 4);
    }

    #[test]
    fn zeta_reference_values() {
        let pi = std::f64::consts::PI;
        assert!((zeta(2) - pi * pi / 6.0).abs() < 1e-12);
        assert!((zeta(4) - pi.powi(4) / 90.0).abs() < 1e-12);
        assert!((zeta(3) - 1.202_056_903_159_594_2).abs() < 1e-12);
    }
}
