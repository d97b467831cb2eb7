//! Multiplicative order and the factoring it needs.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

/// Prime factorization by trial division, as `(prime, exponent)` pairs in
/// increasing order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
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

/// Carmichael's function: the exponent of the unit group modulo `n`.
pub fn carmichael(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .map(|(p, e)| {
            if p == 2 {
                match e {
                    1 => 1,
                    2 => 2,
                    _ => 1 << (e - 2),
                }
            } else {
                p.pow(e - 1) * (p - 1)
            }
        })
        .fold(1, |acc, l| acc.lcm(&l))
}

/// Least `k >= 1` with `base^k = 1 (mod modulus)`, or `None` when `base` is
/// not a unit. The search starts at `carmichael(modulus)` and strips prime
/// factors while the power stays at 1.
pub fn multiplicative_order(base: u64, modulus: u64) -> Option<u64> {
    if modulus == 0 || base.gcd(&modulus) != 1 {
        return None;
    }
    if modulus == 1 {
        return Some(1);
    }
    let mut order = carmichael(modulus);
    for (p, _) in factorize(order) {
        while order.is_multiple_of(p) && pow_mod(base, order / p, modulus) == 1 {
            order /= p;
        }
    }
    Some(order)
}

/// Order of `base` modulo an arbitrarily large `modulus`; uses the factoring
/// route when the modulus fits in a `u64` and direct iteration otherwise.
pub fn multiplicative_order_big(base: &BigUint, modulus: &BigUint) -> Option<BigUint> {
    if modulus.is_zero() || !base.gcd(modulus).is_one() {
        return None;
    }
    if let (Some(b), Some(m)) = ((base % modulus).to_u64(), modulus.to_u64()) {
        return multiplicative_order(b, m).map(BigUint::from);
    }
    let start = base % modulus;
    let mut acc = start.clone();
    let mut k = BigUint::one();
    while !acc.is_one() {
        acc = (&acc * &start) % modulus;
        k += 1u8;
    }
    Some(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order_by_iteration(base: u64, m: u64) -> Option<u64> {
        if base.gcd(&m) != 1 {
            return None;
        }
        let mut acc = base % m;
        for k in 1..=m {
            if acc == 1 % m {
                return Some(k);
            }
            acc = acc * base % m;
        }
        None
    }

    #[test]
    fn factorize_small() {
        assert_eq!(factorize(550), vec![(2, 1), (5, 2), (11, 1)]);
        assert_eq!(factorize(1), vec![]);
        assert_eq!(factorize(97), vec![(97, 1)]);
        assert_eq!(factorize(1 << 10), vec![(2, 10)]);
    }

    #[test]
    fn known_orders() {
        assert_eq!(multiplicative_order(10, 3), Some(1));
        assert_eq!(multiplicative_order(10, 7), Some(6));
        assert_eq!(multiplicative_order(10, 11), Some(2));
        assert_eq!(multiplicative_order(10, 17), Some(16));
        assert_eq!(multiplicative_order(10, 1), Some(1));
        assert_eq!(multiplicative_order(10, 4), None);
    }

    #[test]
    fn order_agrees_with_iteration() {
        for m in 1..3000 {
            for base in [2, 3, 10] {
                assert_eq!(multiplicative_order(base, m), order_by_iteration(base, m), "{base} mod {m}");
            }
        }
    }

    #[test]
    fn big_order_matches_small() {
        for m in [3u64, 7, 13, 49, 999_999_937] {
            assert_eq!(
                multiplicative_order_big(&BigUint::from(10u8), &BigUint::from(m)),
                multiplicative_order(10, m).map(BigUint::from)
            );
        }
    }
}
