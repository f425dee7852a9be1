//! Deterministic primality and semiprime tests for 64-bit integers.

/// Witnesses that make Miller–Rabin deterministic for every `n < 2^64`.
const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin primality test, valid for all `u64` inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    // n - 1 = d * 2^s with d odd.
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Factors an odd semiprime as `(p, q)` with `p ≤ q` both odd primes.
///
/// Returns `None` when `n` is even, prime, or has more than two prime
/// factors counted with multiplicity.
pub fn odd_semiprime_factors(n: u64) -> Option<(u64, u64)> {
    if n < 9 || n % 2 == 0 || is_prime(n) {
        return None;
    }
    let mut p = 3u64;
    while p * p <= n {
        if n % p == 0 {
            let q = n / p;
            return if is_prime(p) && is_prime(q) { Some((p, q)) } else { None };
        }
        p += 2;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_primes_and_composites() {
        let primes = [2u64, 3, 5, 7, 11, 13, 97, 7919, 2147483647];
        for p in primes {
            assert!(is_prime(p), "{p} should be prime");
        }
        let composites = [0u64, 1, 4, 9, 15, 21, 1001, 7919 * 7919];
        for c in composites {
            assert!(!is_prime(c), "{c} should be composite");
        }
    }

    #[test]
    fn agrees_with_trial_division_below_ten_thousand() {
        for n in 0u64..10_000 {
            let by_trial = n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0);
            assert_eq!(is_prime(n), by_trial, "n = {n}");
        }
    }

    #[test]
    fn strong_pseudoprimes_are_rejected() {
        // 3215031751 is a strong pseudoprime to bases 2, 3, 5 and 7.
        assert!(!is_prime(3_215_031_751));
        assert!(!is_prime(3_474_749_660_383));
    }

    #[test]
    fn semiprime_factoring() {
        assert_eq!(odd_semiprime_factors(9), Some((3, 3)));
        assert_eq!(odd_semiprime_factors(15), Some((3, 5)));
        assert_eq!(odd_semiprime_factors(21), Some((3, 7)));
        assert_eq!(odd_semiprime_factors(35), Some((5, 7)));
        assert_eq!(odd_semiprime_factors(27), None); // 3^3
        assert_eq!(odd_semiprime_factors(45), None); // 3^2 * 5
        assert_eq!(odd_semiprime_factors(13), None); // prime
        assert_eq!(odd_semiprime_factors(33), Some((3, 11)));
    }
}
