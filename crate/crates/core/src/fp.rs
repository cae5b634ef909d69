//! Scalar arithmetic in the prime field F_p.
//!
//! Values are stored as `u64` in the range `0..p`. The primes in scope are
//! small (cohomology coefficients), so schoolbook algorithms are plenty.

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[inline]
pub fn add(a: u64, b: u64, p: u64) -> u64 {
    (a + b) % p
}

#[inline]
pub fn sub(a: u64, b: u64, p: u64) -> u64 {
    (a + p - b % p) % p
}

#[inline]
pub fn neg(a: u64, p: u64) -> u64 {
    (p - a % p) % p
}

#[inline]
pub fn mul(a: u64, b: u64, p: u64) -> u64 {
    // p < 2^32 in practice; promote to u128 to stay safe for any u64 prime
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul(acc, base, p);
        }
        base = mul(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Multiplicative inverse of `a` mod the prime `p`. Panics on `a == 0`.
pub fn inv(a: u64, p: u64) -> u64 {
    assert!(a % p != 0, "division by zero in F_{p}");
    pow(a, p - 2, p)
}

/// Reduce a signed integer into `0..p`.
pub fn normalize(a: i64, p: u64) -> u64 {
    let p_i = p as i64;
    (((a % p_i) + p_i) % p_i) as u64
}

/// Binomial coefficient mod p, computed with Pascal's rule.
pub fn binomial(n: u64, k: u64, p: u64) -> u64 {
    if k > n {
        return 0;
    }
    let n = n as usize;
    let k = k as usize;
    let mut row = vec![0u64; k + 1];
    row[0] = 1 % p;
    for _ in 1..=n {
        for j in (1..=k).rev() {
            row[j] = add(row[j], row[j - 1], p);
        }
    }
    row[k]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(3));
        assert!(is_prime(5));
        assert!(!is_prime(1));
        assert!(!is_prime(9));
        assert!(!is_prime(20160));
    }

    #[test]
    fn field_ops() {
        let p = 7;
        for a in 1..p {
            assert_eq!(mul(a, inv(a, p), p), 1);
        }
        assert_eq!(sub(2, 5, p), 4);
        assert_eq!(normalize(-3, p), 4);
    }

    #[test]
    fn binomials_mod_p() {
        // C(5, d) mod 5 vanishes for 0 < d < 5
        for d in 1..5 {
            assert_eq!(binomial(5, d, 5), 0);
        }
        assert_eq!(binomial(5, 5, 5), 1);
        assert_eq!(binomial(4, 2, 3), 0); // 6 mod 3
    }
}
