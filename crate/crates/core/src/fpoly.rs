//! Dense polynomials over a prime field `F_p`, coefficients low degree first.
//!
//! Enough machinery to pick irreducible moduli and to split cyclotomic
//! polynomials into their equal-degree factors (Cantor-Zassenhaus).

use num_bigint::BigUint;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::numtheory::{factorize, mod_pow};

/// Polynomial over `F_p`; never has trailing zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FPoly {
    pub coeffs: Vec<u64>,
}

impl FPoly {
    pub fn zero() -> Self {
        FPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        FPoly { coeffs: vec![1] }
    }

    pub fn x() -> Self {
        FPoly { coeffs: vec![0, 1] }
    }

    pub fn from_coeffs(mut coeffs: Vec<u64>, p: u64) -> Self {
        coeffs.iter_mut().for_each(|c| *c %= p);
        let mut f = FPoly { coeffs };
        f.trim();
        f
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(n: usize, p: u64) -> Self {
        let mut c = vec![0; n + 1];
        c[n] = 1;
        c[0] = p - 1;
        if n == 0 {
            return FPoly::zero();
        }
        FPoly { coeffs: c }
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> u64 {
        *self.coeffs.last().unwrap_or(&0)
    }

    pub fn add(&self, other: &FPoly, p: u64) -> FPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| (self.coeffs.get(i).unwrap_or(&0) + other.coeffs.get(i).unwrap_or(&0)) % p)
            .collect();
        FPoly::from_coeffs(c, p)
    }

    pub fn sub(&self, other: &FPoly, p: u64) -> FPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| (self.coeffs.get(i).unwrap_or(&0) + p - other.coeffs.get(i).unwrap_or(&0)) % p)
            .collect();
        FPoly::from_coeffs(c, p)
    }

    pub fn scale(&self, k: u64, p: u64) -> FPoly {
        FPoly::from_coeffs(self.coeffs.iter().map(|c| c * (k % p) % p).collect(), p)
    }

    pub fn mul(&self, other: &FPoly, p: u64) -> FPoly {
        if self.is_zero() || other.is_zero() {
            return FPoly::zero();
        }
        let n = self.coeffs.len() + other.coeffs.len() - 1;
        let mut acc = vec![0u64; n];
        // products are < p^2; reduce lazily while the sum cannot overflow
        let budget = (u64::MAX / ((p - 1) * (p - 1)).max(1)).saturating_sub(1).max(1);
        let mut pending = 0u64;
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                acc[i + j] += a * b;
            }
            pending += 1;
            if pending >= budget {
                acc.iter_mut().for_each(|x| *x %= p);
                pending = 0;
            }
        }
        FPoly::from_coeffs(acc, p)
    }

    /// Quotient and remainder; `divisor` must be nonzero.
    pub fn divrem(&self, divisor: &FPoly, p: u64) -> (FPoly, FPoly) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let inv_lead = inverse_mod(divisor.lead(), p);
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (FPoly::zero(), self.clone());
        }
        let mut quot = vec![0u64; rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = rem[k] % p;
            if c == 0 {
                continue;
            }
            let f = c * inv_lead % p;
            quot[k - dd] = f;
            for (j, &dc) in divisor.coeffs.iter().enumerate() {
                let idx = k - dd + j;
                rem[idx] = (rem[idx] + p - f * dc % p) % p;
            }
        }
        rem.truncate(dd);
        (FPoly::from_coeffs(quot, p), FPoly::from_coeffs(rem, p))
    }

    pub fn rem(&self, divisor: &FPoly, p: u64) -> FPoly {
        self.divrem(divisor, p).1
    }

    pub fn monic(&self, p: u64) -> FPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(inverse_mod(self.lead(), p), p)
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &FPoly, p: u64) -> FPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b, p);
            a = b;
            b = r;
        }
        a.monic(p)
    }

    pub fn mulmod(&self, other: &FPoly, modulus: &FPoly, p: u64) -> FPoly {
        self.mul(other, p).rem(modulus, p)
    }

    pub fn powmod(&self, exp: &BigUint, modulus: &FPoly, p: u64) -> FPoly {
        let mut acc = FPoly::one().rem(modulus, p);
        let base = self.rem(modulus, p);
        for i in (0..exp.bits()).rev() {
            acc = acc.mulmod(&acc, modulus, p);
            if exp.bit(i) {
                acc = acc.mulmod(&base, modulus, p);
            }
        }
        acc
    }

    pub fn eval(&self, x: u64, p: u64) -> u64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| (acc * x + c) % p)
    }

    /// Lexicographic key: coefficients from `x^(d-1)` down to `x^0`.
    pub fn lex_key(&self) -> Vec<u64> {
        let mut k: Vec<u64> = self.coeffs.iter().rev().skip(1).copied().collect();
        k.insert(0, self.coeffs.len() as u64);
        k
    }
}

pub fn inverse_mod(a: u64, p: u64) -> u64 {
    assert!(!a.is_multiple_of(p), "zero has no inverse");
    mod_pow(a, p - 2, p)
}

/// Rabin's irreducibility test for a monic `f` over `F_p`.
pub fn is_irreducible(f: &FPoly, p: u64) -> bool {
    let n = match f.degree() {
        Some(0) | None => return false,
        Some(1) => return true,
        Some(n) => n,
    };
    let x = FPoly::x();
    let frob = |k: usize| -> FPoly {
        // x^(p^k) mod f by repeated p-th powering
        let mut acc = x.rem(f, p);
        let pb = BigUint::from(p);
        for _ in 0..k {
            acc = acc.powmod(&pb, f, p);
        }
        acc
    };
    if frob(n).sub(&x, p).rem(f, p) != FPoly::zero() {
        return false;
    }
    for (r, _) in factorize(n as u64) {
        let h = frob(n / r as usize).sub(&x, p);
        if f.gcd(&h, p).degree() != Some(0) {
            return false;
        }
    }
    true
}

/// Splits a monic squarefree `f` whose irreducible factors all have degree
/// `d`. Factors come back sorted by [`FPoly::lex_key`].
pub fn equal_degree_factors(f: &FPoly, d: usize, p: u64) -> Vec<FPoly> {
    let n = f.degree().expect("nonzero polynomial");
    assert!(d > 0 && n.is_multiple_of(d), "degree {n} not a multiple of {d}");
    let mut rng = ChaCha8Rng::seed_from_u64(0x4841_4c4c);
    let mut pending = vec![f.monic(p)];
    let mut done = Vec::new();
    let exp = if p == 2 {
        BigUint::zero()
    } else {
        (BigUint::from(p).pow(d as u32) - 1u32) / 2u32
    };
    while let Some(g) = pending.pop() {
        let gd = g.degree().unwrap();
        if gd == d {
            done.push(g);
            continue;
        }
        loop {
            let a = FPoly::from_coeffs((0..gd).map(|_| rng.gen_range(0..p)).collect(), p);
            if a.degree().unwrap_or(0) == 0 {
                continue;
            }
            let b = if p == 2 {
                // absolute trace a + a^2 + ... + a^(2^(d-1))
                let two = BigUint::from(2u32);
                let mut t = a.rem(&g, p);
                let mut acc = t.clone();
                for _ in 1..d {
                    t = t.powmod(&two, &g, p);
                    acc = acc.add(&t, p);
                }
                acc
            } else {
                a.powmod(&exp, &g, p).sub(&FPoly::one(), p)
            };
            let h = g.gcd(&b, p);
            let hd = h.degree().unwrap_or(0);
            if hd > 0 && hd < gd {
                let (q, r) = g.divrem(&h, p);
                debug_assert!(r.is_zero());
                pending.push(h);
                pending.push(q.monic(p));
                break;
            }
        }
    }
    done.sort_by_key(|f| f.lex_key());
    done
}

/// `n`-th cyclotomic polynomial reduced mod `p`.
pub fn cyclotomic_mod_p(n: u64, p: u64) -> FPoly {
    // Phi_n = prod_{d | n} (x^d - 1)^{mu(n/d)}: multiply the positive factors,
    // divide by the negative ones
    let mut num = FPoly::one();
    let mut den = FPoly::one();
    for d in crate::numtheory::divisors(n) {
        match crate::numtheory::mobius(n / d) {
            1 => num = num.mul(&FPoly::x_pow_minus_one(d as usize, p), p),
            -1 => den = den.mul(&FPoly::x_pow_minus_one(d as usize, p), p),
            _ => {}
        }
    }
    let (q, r) = num.divrem(&den, p);
    debug_assert!(r.is_zero());
    q
}

/// Least monic irreducible polynomial of degree `d` over `F_p`, comparing the
/// non-leading coefficients as the base-`p` number `c_{d-1} .. c_0`.
pub fn least_irreducible(d: usize, p: u64) -> FPoly {
    let count = p.pow(d as u32);
    for code in 0..count {
        let mut c = Vec::with_capacity(d + 1);
        let mut v = code;
        for _ in 0..d {
            c.push(v % p);
            v /= p;
        }
        c.push(1);
        let f = FPoly { coeffs: c };
        if is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn least_irreducibles() {
        assert_eq!(least_irreducible(3, 2).coeffs, vec![1, 1, 0, 1]); // x^3 + x + 1
        assert_eq!(least_irreducible(2, 3).coeffs, vec![1, 0, 1]); // x^2 + 1
        assert_eq!(least_irreducible(5, 2).coeffs, vec![1, 0, 1, 0, 0, 1]); // x^5 + x^2 + 1
    }

    #[test]
    fn irreducibility_matches_root_search_in_degree_2_and_3() {
        for p in [2u64, 3, 5, 7] {
            for d in [2usize, 3] {
                for code in 0..p.pow(d as u32) {
                    let mut c: Vec<u64> = (0..d).map(|i| code / p.pow(i as u32) % p).collect();
                    c.push(1);
                    let f = FPoly { coeffs: c };
                    let has_root = (0..p).any(|x| f.eval(x, p) == 0);
                    assert_eq!(is_irreducible(&f, p), !has_root, "p={p} f={:?}", f.coeffs);
                }
            }
        }
    }

    #[test]
    fn cyclotomic_polys() {
        // Phi_5 = x^4 + x^3 + x^2 + x + 1
        assert_eq!(cyclotomic_mod_p(5, 7).coeffs, vec![1, 1, 1, 1, 1]);
        // Phi_12 = x^4 - x^2 + 1
        assert_eq!(cyclotomic_mod_p(12, 5).coeffs, vec![1, 0, 4, 0, 1]);
    }

    #[test]
    fn splits_cyclotomic_into_equal_degree_factors() {
        for (m, p, d) in [(5u64, 2u64, 4usize), (31, 2, 5), (7, 2, 3), (13, 3, 3), (31, 5, 3), (16, 3, 4), (15, 2, 4)] {
            let f = cyclotomic_mod_p(m, p);
            let factors = equal_degree_factors(&f, d, p);
            let prod = factors.iter().fold(FPoly::one(), |acc, g| acc.mul(g, p));
            assert_eq!(prod, f, "m={m} p={p}");
            assert!(factors.iter().all(|g| g.degree() == Some(d) && is_irreducible(g, p)));
        }
    }
}
