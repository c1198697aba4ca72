//! Exact elements of `Z[ζ_n]`.
//!
//! A value is a sparse sum `Σ c_e ζ_n^e` with exponents reduced mod `n`.
//! Values of different moduli are combined in the ring of their lcm.
//!
//! Canonical form: write `n = Π p^a` and split an exponent by CRT into
//! coordinates `f_p` mod `p^a`. The monomials with `f_p < φ(p^a)` in every
//! coordinate form a Z-basis of `Z[ζ_n]` (the tensor product of the power
//! bases of the `Z[ζ_{p^a}]`), and the relation `Φ_{p^a}(ζ_{p^a}) = 0`
//! rewrites every other monomial in one step per coordinate. Two values are
//! equal iff their canonical forms agree.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::numtheory::{factorize, lcm};

#[derive(Clone, Debug)]
pub struct Cyclotomic {
    n: u64,
    terms: BTreeMap<u64, BigInt>,
}

fn add_term(terms: &mut BTreeMap<u64, BigInt>, e: u64, c: BigInt) {
    if c.is_zero() {
        return;
    }
    let slot = terms.entry(e).or_insert_with(BigInt::zero);
    *slot += c;
    if slot.is_zero() {
        terms.remove(&e);
    }
}

/// CRT coordinates for one modulus.
struct Basis {
    n: u64,
    /// `(p, p^a, multiplier)` where `ζ_{p^a} = ζ_n^{n/p^a}` and the
    /// coordinate of `e` is `e * multiplier mod p^a`.
    parts: Vec<(u64, u64, u64)>,
}

impl Basis {
    fn new(n: u64) -> Self {
        let parts = factorize(n)
            .into_iter()
            .map(|(p, a)| {
                let pa = p.pow(a);
                let cof = n / pa;
                let inv = inverse_mod(cof % pa, pa);
                (p, pa, inv)
            })
            .collect();
        Basis { n, parts }
    }

    fn coords(&self, e: u64) -> Vec<u64> {
        self.parts.iter().map(|&(_, pa, inv)| e % pa * inv % pa).collect()
    }

    fn exponent(&self, f: &[u64]) -> u64 {
        self.parts
            .iter()
            .zip(f)
            .fold(0, |acc, (&(_, pa, _), &x)| (acc + x * (self.n / pa)) % self.n)
    }

    /// Canonical expansion of `ζ_n^e` as `(sign, exponent)` pairs.
    fn reduce_monomial(&self, e: u64) -> Vec<(i64, u64)> {
        let mut cur: Vec<(i64, Vec<u64>)> = vec![(1, self.coords(e))];
        for (i, &(p, pa, _)) in self.parts.iter().enumerate() {
            let step = pa / p;
            let phi = pa - step;
            let mut next = Vec::with_capacity(cur.len());
            for (s, f) in cur {
                if f[i] < phi {
                    next.push((s, f));
                } else {
                    for k in 1..p {
                        let mut g = f.clone();
                        g[i] = f[i] - k * step;
                        next.push((-s, g));
                    }
                }
            }
            cur = next;
        }
        cur.into_iter().map(|(s, f)| (s, self.exponent(&f))).collect()
    }
}

fn inverse_mod(a: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let e = BigInt::from(a).extended_gcd(&BigInt::from(m));
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(&BigInt::from(m)).try_into().expect("small")
}

impl Cyclotomic {
    pub fn zero(n: u64) -> Self {
        assert!(n >= 1, "modulus must be positive");
        Cyclotomic {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn integer(k: impl Into<BigInt>) -> Self {
        let mut x = Cyclotomic::zero(1);
        add_term(&mut x.terms, 0, k.into());
        x
    }

    /// `ζ_n^e`.
    pub fn root(n: u64, e: i64) -> Self {
        Cyclotomic::from_terms(n, [(BigInt::one(), e)])
    }

    pub fn from_terms(n: u64, terms: impl IntoIterator<Item = (BigInt, i64)>) -> Self {
        let mut x = Cyclotomic::zero(n);
        for (c, e) in terms {
            add_term(&mut x.terms, e.rem_euclid(n as i64) as u64, c);
        }
        x
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    /// Nonzero `(exponent, coefficient)` pairs in exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (u64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    /// The same element written with modulus `m`, a multiple of `n`.
    pub fn lift(&self, m: u64) -> Cyclotomic {
        assert!(m.is_multiple_of(self.n), "{m} is not a multiple of {}", self.n);
        let k = m / self.n;
        Cyclotomic {
            n: m,
            terms: self.terms.iter().map(|(&e, c)| (e * k, c.clone())).collect(),
        }
    }

    fn common(&self, other: &Cyclotomic) -> (Cyclotomic, Cyclotomic) {
        let m = lcm(self.n, other.n);
        (self.lift(m), other.lift(m))
    }

    pub fn add(&self, other: &Cyclotomic) -> Cyclotomic {
        let (mut a, b) = self.common(other);
        for (e, c) in b.terms {
            add_term(&mut a.terms, e, c);
        }
        a
    }

    pub fn neg(&self) -> Cyclotomic {
        Cyclotomic {
            n: self.n,
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Cyclotomic) -> Cyclotomic {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Cyclotomic) -> Cyclotomic {
        let (a, b) = self.common(other);
        let n = a.n;
        let mut out = Cyclotomic::zero(n);
        for (&e1, c1) in &a.terms {
            for (&e2, c2) in &b.terms {
                add_term(&mut out.terms, (e1 + e2) % n, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, k: &BigInt) -> Cyclotomic {
        if k.is_zero() {
            return Cyclotomic::zero(self.n);
        }
        Cyclotomic {
            n: self.n,
            terms: self.terms.iter().map(|(&e, c)| (e, c * k)).collect(),
        }
    }

    /// Complex conjugate, `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> Cyclotomic {
        self.galois(-1)
    }

    /// The Galois automorphism `ζ_n ↦ ζ_n^k` (`k` prime to `n`).
    pub fn galois(&self, k: i64) -> Cyclotomic {
        let n = self.n as i64;
        Cyclotomic::from_terms(
            self.n,
            self.terms.iter().map(|(&e, c)| (c.clone(), (e as i64 * k).rem_euclid(n))),
        )
    }

    /// Canonical representative in the CRT power basis for modulus `n`.
    pub fn canonical(&self) -> Cyclotomic {
        let basis = Basis::new(self.n);
        let mut out = Cyclotomic::zero(self.n);
        for (&e, c) in &self.terms {
            for (s, f) in basis.reduce_monomial(e) {
                add_term(&mut out.terms, f, if s > 0 { c.clone() } else { -c });
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() || self.canonical().terms.is_empty()
    }

    /// The value as a rational integer, if it is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        let c = self.canonical();
        match c.terms.len() {
            0 => Some(BigInt::zero()),
            1 => c.terms.get(&0).cloned(),
            _ => None,
        }
    }

    /// `self / d` if the quotient lies in `Z[ζ_n]`. The canonical basis is
    /// an integral basis, so this is coefficientwise divisibility.
    pub fn div_exact(&self, d: &BigInt) -> Option<Cyclotomic> {
        assert!(!d.is_zero(), "division by zero");
        let c = self.canonical();
        let mut out = Cyclotomic::zero(self.n);
        for (e, coeff) in c.terms {
            let (q, r) = coeff.div_rem(d);
            if !r.is_zero() {
                return None;
            }
            add_term(&mut out.terms, e, q);
        }
        Some(out)
    }

    /// Floating-point value, for display and sanity checks only.
    pub fn to_complex(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (&e, c) in &self.terms {
            let c: f64 = c.to_string().parse().unwrap_or(f64::NAN);
            let t = 2.0 * std::f64::consts::PI * e as f64 / self.n as f64;
            re += c * t.cos();
            im += c * t.sin();
        }
        (re, im)
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.sub(other).is_zero()
    }
}

impl Eq for Cyclotomic {}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, c) in &self.terms {
            let sign = if c.is_negative() { "-" } else { "+" };
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (e, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (_, true) => write!(f, "z{}^{e}", self.n)?,
                (_, false) => write!(f, "{abs}*z{}^{e}", self.n)?,
            }
        }
        Ok(())
    }
}

/// Integer coefficients of `Φ_n`, low degree first.
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    // x^n - 1 divided by Φ_d for every proper divisor d
    let mut num: Vec<BigInt> = vec![BigInt::zero(); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::one();
    for d in crate::numtheory::divisors(n) {
        if d == n {
            continue;
        }
        let phi_d = cyclotomic_polynomial(d);
        num = poly_divrem(&num, &phi_d).0;
    }
    num
}

/// Division by a monic integer polynomial.
pub fn poly_divrem(a: &[BigInt], b: &[BigInt]) -> (Vec<BigInt>, Vec<BigInt>) {
    let db = b.len() - 1;
    assert!(b[db].is_one(), "divisor must be monic");
    let mut r = a.to_vec();
    if r.len() <= db {
        return (vec![BigInt::zero()], r);
    }
    let mut q = vec![BigInt::zero(); r.len() - db];
    for i in (db..r.len()).rev() {
        let c = r[i].clone();
        if c.is_zero() {
            continue;
        }
        q[i - db] = c.clone();
        for (j, bj) in b.iter().enumerate() {
            r[i - db + j] -= &c * bj;
        }
    }
    r.truncate(db);
    (q, r)
}

/// Remainder of `x` modulo `Φ_n` as a dense coefficient vector of length
/// `φ(n)`; zero exactly when `x` is zero.
pub fn remainder_mod_phi(x: &Cyclotomic) -> Vec<BigInt> {
    let n = x.modulus() as usize;
    let mut dense = vec![BigInt::zero(); n];
    for (e, c) in x.terms() {
        dense[e as usize] += c;
    }
    poly_divrem(&dense, &cyclotomic_polynomial(x.modulus())).1
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z(n: u64, e: i64) -> Cyclotomic {
        Cyclotomic::root(n, e)
    }

    #[test]
    fn root_sums_vanish() {
        for n in [2u64, 3, 4, 5, 6, 8, 9, 12, 15, 16, 30] {
            let total = (0..n as i64).fold(Cyclotomic::zero(n), |acc, e| acc.add(&z(n, e)));
            assert!(total.is_zero(), "n = {n}");
        }
        assert!(!z(7, 1).is_zero());
    }

    #[test]
    fn integers_and_lifting() {
        assert_eq!(z(4, 2).to_integer(), Some(BigInt::from(-1)));
        assert_eq!(z(3, 1).add(&z(3, 2)).to_integer(), Some(BigInt::from(-1)));
        assert_eq!(z(5, 1), z(10, 2));
        assert_eq!(z(5, 1).mul(&z(5, 4)), Cyclotomic::integer(1));
        assert_ne!(z(5, 1), z(5, 2));
        // (-1 + sqrt(-7)) / 2 squared plus itself plus 2 is 0
        let a = Cyclotomic::from_terms(7, [1, 2, 4].map(|e| (BigInt::one(), e)));
        assert!(a.mul(&a).add(&a).add(&Cyclotomic::integer(2)).is_zero());
    }

    #[test]
    fn exact_division() {
        let x = z(5, 1).add(&z(5, 4)).scale(&BigInt::from(6));
        assert_eq!(x.div_exact(&BigInt::from(3)).unwrap(), z(5, 1).add(&z(5, 4)).scale(&BigInt::from(2)));
        assert!(z(5, 1).div_exact(&BigInt::from(2)).is_none());
    }

    #[test]
    fn cyclotomic_polynomials() {
        let as_i64 = |v: Vec<BigInt>| v.into_iter().map(|c| i64::try_from(c).unwrap()).collect::<Vec<_>>();
        assert_eq!(as_i64(cyclotomic_polynomial(1)), vec![-1, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(6)), vec![1, -1, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(12)), vec![1, 0, -1, 0, 1]);
    }

    fn arb(n: u64) -> impl Strategy<Value = Cyclotomic> {
        prop::collection::vec((-5i64..=5, 0..n as i64), 0..6)
            .prop_map(move |ts| Cyclotomic::from_terms(n, ts.into_iter().map(|(c, e)| (BigInt::from(c), e))))
    }

    proptest! {
        #[test]
        fn canonical_form_agrees_with_division(x in prop::sample::select(vec![1u64, 2, 3, 4, 6, 8, 9, 10, 12, 15, 18, 20, 24, 30]).prop_flat_map(arb)) {
            let c = x.canonical();
            prop_assert!(remainder_mod_phi(&x.sub(&c)).iter().all(|v| v.is_zero()));
            prop_assert_eq!(c.terms.is_empty(), remainder_mod_phi(&x).iter().all(|v| v.is_zero()));
        }

        #[test]
        fn ring_laws(x in arb(12), y in arb(12), w in arb(8)) {
            prop_assert_eq!(x.mul(&y), y.mul(&x));
            prop_assert_eq!(x.add(&y).mul(&w), x.mul(&w).add(&y.mul(&w)));
            prop_assert_eq!(x.mul(&y).conj(), x.conj().mul(&y.conj()));
        }

        #[test]
        fn zero_multiples_of_phi_vanish(x in arb(15)) {
            // Φ_3(ζ_15^5) = 0
            let rel = Cyclotomic::from_terms(15, [(BigInt::one(), 0), (BigInt::one(), 5), (BigInt::one(), 10)]);
            prop_assert!(x.mul(&rel).is_zero());
        }
    }
}
