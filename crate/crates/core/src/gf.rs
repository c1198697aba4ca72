//! Small finite fields `GF(p^e)` for building PSL(2,q) and semi-affine groups.
//!
//! Elements are encoded as integers `0..q` whose base-`p` digits are the
//! coefficients of a polynomial in `t` (digit `i` multiplies `t^i`). The
//! modulus is the least irreducible of degree `e` (see
//! [`crate::fpoly::least_irreducible`]), so encodings are reproducible.

use crate::error::{Error, Result};
use crate::fpoly::{least_irreducible, FPoly};
use crate::numtheory::prime_power;

#[derive(Clone, Debug)]
pub struct GaloisField {
    p: u64,
    e: u32,
    q: usize,
    modulus: FPoly,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl GaloisField {
    pub fn new(q: u64) -> Result<Self> {
        let (p, e) = prime_power(q)
            .ok_or_else(|| Error::Malformed(format!("{q} is not a prime power")))?;
        let qs = q as usize;
        let modulus = least_irreducible(e as usize, p);
        let mut field = GaloisField {
            p,
            e,
            q: qs,
            modulus,
            exp: Vec::new(),
            log: Vec::new(),
        };
        let generator = (2..qs as u32)
            .chain(std::iter::once(1))
            .find(|&g| field.slow_order(g) == qs as u64 - 1)
            .expect("multiplicative group is cyclic");
        let mut exp = Vec::with_capacity(qs - 1);
        let mut log = vec![0u32; qs];
        let mut x = 1u32;
        for k in 0..qs - 1 {
            exp.push(x);
            log[x as usize] = k as u32;
            x = field.slow_mul(x, generator);
        }
        field.exp = exp;
        field.log = log;
        Ok(field)
    }

    fn to_poly(&self, a: u32) -> FPoly {
        let mut c = Vec::with_capacity(self.e as usize);
        let mut v = a as u64;
        for _ in 0..self.e {
            c.push(v % self.p);
            v /= self.p;
        }
        FPoly::from_coeffs(c, self.p)
    }

    fn from_poly(&self, f: &FPoly) -> u32 {
        f.coeffs
            .iter()
            .rev()
            .fold(0u64, |acc, &c| acc * self.p + c) as u32
    }

    fn slow_mul(&self, a: u32, b: u32) -> u32 {
        let prod = self.to_poly(a).mulmod(&self.to_poly(b), &self.modulus, self.p);
        self.from_poly(&prod)
    }

    fn slow_order(&self, a: u32) -> u64 {
        if a == 0 {
            return 0;
        }
        let mut x = a;
        let mut k = 1;
        while x != 1 {
            x = self.slow_mul(x, a);
            k += 1;
        }
        k
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    pub fn modulus(&self) -> &FPoly {
        &self.modulus
    }

    /// The primitive element used for the log tables.
    pub fn primitive(&self) -> u32 {
        if self.q == 2 {
            1
        } else {
            self.exp[1]
        }
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        let p = self.p as u32;
        let (mut a, mut b) = (a, b);
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..self.e {
            out += ((a % p + b % p) % p) * place;
            a /= p;
            b /= p;
            place *= p;
        }
        out
    }

    pub fn neg(&self, a: u32) -> u32 {
        let p = self.p as u32;
        let mut a = a;
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..self.e {
            out += ((p - a % p) % p) * place;
            a /= p;
            place *= p;
        }
        out
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let n = self.q - 1;
        self.exp[(self.log[a as usize] as usize + self.log[b as usize] as usize) % n]
    }

    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "zero has no inverse");
        let n = self.q - 1;
        self.exp[(n - self.log[a as usize] as usize) % n]
    }

    pub fn pow(&self, a: u32, k: u64) -> u32 {
        if a == 0 {
            return if k == 0 { 1 } else { 0 };
        }
        let n = (self.q - 1) as u64;
        self.exp[((self.log[a as usize] as u64 * (k % n)) % n) as usize]
    }

    /// Encoding of `t^i`, the additive basis.
    pub fn basis(&self, i: u32) -> u32 {
        (self.p as u32).pow(i)
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.q as u32
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_on_small_fields() {
        for q in [4u64, 8, 9, 25, 27, 32] {
            let f = GaloisField::new(q).unwrap();
            for a in f.elements() {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1);
                }
                for b in f.elements() {
                    assert_eq!(f.mul(a, b), f.slow_mul(a, b));
                    assert_eq!(f.add(a, b), f.add(b, a));
                }
            }
        }
    }

    #[test]
    fn frobenius_is_additive() {
        let f = GaloisField::new(8).unwrap();
        for a in f.elements() {
            for b in f.elements() {
                assert_eq!(f.pow(f.add(a, b), 2), f.add(f.pow(a, 2), f.pow(b, 2)));
            }
        }
    }

    #[test]
    fn rejects_non_prime_powers() {
        assert!(matches!(GaloisField::new(12), Err(Error::Malformed(_))));
    }
}
