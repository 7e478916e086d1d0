//! Integer-exact helpers for the bound arithmetic. No floating point: every
//! comparison against a fractional quantity is rearranged into integers.

/// `base^exp` saturating at `u128::MAX`.
pub(crate) fn pow_saturating(base: u128, exp: u32) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base);
    }
    acc
}

/// Largest `x` with `x*x <= n`.
pub(crate) fn isqrt(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let mut x = (n as f64).sqrt() as u64;
    while x.saturating_mul(x) > n {
        x -= 1;
    }
    while (x + 1).saturating_mul(x + 1) <= n {
        x += 1;
    }
    x
}

/// Smallest `s` with `s*s >= n`.
pub(crate) fn ceil_sqrt(n: u64) -> u64 {
    let f = isqrt(n);
    if f * f == n {
        f
    } else {
        f + 1
    }
}

/// Largest `x` with `x^3 <= n`.
pub(crate) fn icbrt(n: u128) -> u128 {
    if n == 0 {
        return 0;
    }
    let mut x = (n as f64).cbrt() as u128 + 1;
    while x * x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

/// Smallest `k` with `2^k >= n` (n >= 1).
pub(crate) fn ceil_log2(n: u128) -> u32 {
    let mut k = 0;
    while pow_saturating(2, k) < n {
        k += 1;
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isqrt_exact_on_range() {
        for n in 0..10_000u64 {
            let r = isqrt(n);
            assert!(r * r <= n && (r + 1) * (r + 1) > n, "n={n} r={r}");
        }
        assert_eq!(ceil_sqrt(0), 0);
        assert_eq!(ceil_sqrt(1), 1);
        assert_eq!(ceil_sqrt(2), 2);
        assert_eq!(ceil_sqrt(4), 2);
        assert_eq!(ceil_sqrt(5), 3);
    }

    #[test]
    fn icbrt_exact_on_range() {
        for n in 0..20_000u128 {
            let r = icbrt(n);
            assert!(r * r * r <= n && (r + 1) * (r + 1) * (r + 1) > n, "n={n} r={r}");
        }
        assert_eq!(icbrt(27), 3);
        assert_eq!(icbrt(26), 2);
        assert_eq!(icbrt(64), 4);
    }

    #[test]
    fn ceil_log2_values() {
        assert_eq!(ceil_log2(1), 0);
        assert_eq!(ceil_log2(2), 1);
        assert_eq!(ceil_log2(3), 2);
        assert_eq!(ceil_log2(24), 5);
        assert_eq!(ceil_log2(32), 5);
        assert_eq!(ceil_log2(33), 6);
    }

    #[test]
    fn pow_saturates() {
        assert_eq!(pow_saturating(2, 10), 1024);
        assert_eq!(pow_saturating(u128::MAX, 2), u128::MAX);
        assert_eq!(pow_saturating(3, 0), 1);
    }
}
