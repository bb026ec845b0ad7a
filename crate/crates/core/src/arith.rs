//! Small integer helpers shared across the crate.

pub(crate) fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Extended Euclid: returns (g, s, t) with g = gcd(a, b) ≥ 0 and s·a + t·b = g.
pub(crate) fn egcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i128, 0i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

/// Floor of the square root of n ≥ 0, by integer Newton iteration.
pub(crate) fn isqrt(n: i128) -> i128 {
    assert!(n >= 0, "isqrt of negative number");
    if n < 2 {
        return n;
    }
    let mut x0 = n;
    let mut x1 = (x0 + 1) / 2;
    while x1 < x0 {
        x0 = x1;
        x1 = (x0 + n / x0) / 2;
    }
    x0
}

/// Returns Some(r) with r² = n when n is a perfect square.
pub(crate) fn perfect_sqrt(n: i128) -> Option<i128> {
    if n < 0 {
        return None;
    }
    let r = isqrt(n);
    (r * r == n).then_some(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn egcd_identity() {
        for a in -20i128..=20 {
            for b in -20i128..=20 {
                let (g, s, t) = egcd(a, b);
                assert_eq!(g, gcd(a, b));
                assert_eq!(s * a + t * b, g, "bezout for ({a},{b})");
            }
        }
    }

    #[test]
    fn isqrt_floors() {
        for n in 0i128..=10_000 {
            let r = isqrt(n);
            assert!(r * r <= n && (r + 1) * (r + 1) > n, "isqrt({n}) = {r}");
        }
        assert_eq!(isqrt((1 << 80) + 12345), 1 << 40);
    }

    #[test]
    fn perfect_squares_recognized() {
        assert_eq!(perfect_sqrt(49), Some(7));
        assert_eq!(perfect_sqrt(48), None);
        assert_eq!(perfect_sqrt(0), Some(0));
        assert_eq!(perfect_sqrt(-4), None);
    }
}
