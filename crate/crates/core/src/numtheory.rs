//! Small-integer number theory shared by every module: primality, factoring,
//! prime parts and multiplicative orders.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization by trial division, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// Prime divisors of an unbounded integer. Only trial division, so callers
/// keep this to group orders that fit the enumeration regime.
pub fn prime_divisors_big(n: &BigUint) -> Vec<u64> {
    match n.to_u64() {
        Some(v) => prime_divisors(v),
        None => {
            let mut out = Vec::new();
            let mut m = n.clone();
            let mut d = 2u64;
            while BigUint::from(d) * BigUint::from(d) <= m {
                let db = BigUint::from(d);
                if (&m % &db).is_zero() {
                    out.push(d);
                    while (&m % &db).is_zero() {
                        m /= &db;
                    }
                }
                d += 1;
            }
            if !m.is_one() {
                out.push(m.to_u64().expect("cofactor exceeds u64"));
            }
            out
        }
    }
}

/// Largest power of `p` dividing `n`.
pub fn p_part(mut n: u64, p: u64) -> u64 {
    let mut part = 1;
    if n == 0 {
        return 0;
    }
    while n.is_multiple_of(p) {
        n /= p;
        part *= p;
    }
    part
}

pub fn p_part_big(n: &BigUint, p: u64) -> BigUint {
    let pb = BigUint::from(p);
    let mut m = n.clone();
    let mut part = BigUint::one();
    if m.is_zero() {
        return m;
    }
    while (&m % &pb).is_zero() {
        m /= &pb;
        part *= &pb;
    }
    part
}

/// True iff `n` is a positive power of the prime `p`.
pub fn is_power_of(n: u64, p: u64) -> bool {
    n > 1 && p_part(n, p) == n
}

/// Decomposes a prime power `q = p^e`; `None` when `q` is not one.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    let f = factorize(q);
    if f.len() == 1 {
        Some(f[0])
    } else {
        None
    }
}

pub fn mod_pow(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let m = modulus as u128;
    let mut acc: u128 = 1;
    let mut b = (base % modulus) as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Least `k >= 1` with `a^k = 1 (mod m)`; `None` if `gcd(a, m) != 1`.
pub fn multiplicative_order(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(1);
    }
    if a.gcd(&m) != 1 {
        return None;
    }
    let phi = euler_phi(m);
    let mut order = phi;
    for (p, _) in factorize(phi) {
        while order.is_multiple_of(p) && mod_pow(a, order / p, m) == 1 {
            order /= p;
        }
    }
    Some(order)
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

/// Möbius function.
pub fn mobius(n: u64) -> i32 {
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut ds = vec![1u64];
    for (p, e) in factorize(n) {
        let cur = ds.clone();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            ds.extend(cur.iter().map(|d| d * pk));
        }
    }
    ds.sort_unstable();
    ds
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

/// Splits `n = p^a * m` with `p` not dividing `m`.
pub fn split_p(n: u64, p: u64) -> (u64, u64) {
    let pa = p_part(n, p);
    (pa, n / pa)
}

/// True iff no prime of `primes` divides `n`.
pub fn is_coprime_to_all(n: &BigUint, primes: &[u64]) -> bool {
    primes
        .iter()
        .all(|&p| !(n % BigUint::from(p)).is_zero())
}

pub fn divides(p: u64, n: &BigUint) -> bool {
    (n % BigUint::from(p)).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factor_and_parts() {
        assert_eq!(factorize(14880), vec![(2, 5), (3, 1), (5, 1), (31, 1)]);
        assert_eq!(p_part(14880, 2), 32);
        assert_eq!(p_part(60, 7), 1);
        assert_eq!(prime_power(32), Some((2, 5)));
        assert_eq!(prime_power(12), None);
        assert!(is_power_of(27, 3));
        assert!(!is_power_of(1, 3));
    }

    #[test]
    fn orders_match_brute_force() {
        for m in 2..200u64 {
            for a in 1..m {
                let brute = if a.gcd(&m) != 1 {
                    None
                } else {
                    let mut x = a % m;
                    let mut k = 1;
                    while x != 1 {
                        x = x * a % m;
                        k += 1;
                    }
                    Some(k)
                };
                assert_eq!(multiplicative_order(a, m), brute, "a={a} m={m}");
            }
        }
    }

    #[test]
    fn mobius_and_divisors() {
        assert_eq!(mobius(30), -1);
        assert_eq!(mobius(12), 0);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(euler_phi(7440), 1920);
    }

    #[test]
    fn big_prime_divisors() {
        let n = BigUint::from(2u64).pow(70) * BigUint::from(31u32);
        assert_eq!(prime_divisors_big(&n), vec![2, 31]);
    }
}
