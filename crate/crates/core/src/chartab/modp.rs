//! Reduction of `Z[ζ_N]` modulo a prime ideal over `p`.
//!
//! With `N = p^a m` and `p ∤ m`, the residue field is `F_p[t]/(f)` where
//! `f` is the lexicographically least irreducible factor of `Φ_m` mod `p`,
//! and `ζ_N ↦ t`. A value of modulus `n | N` is read as a value of modulus
//! `N` first, so `ζ_n^e ↦ t^{(N/n) e mod m}`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::cyclotomic::Cyclotomic;
use crate::fpoly::{cyclotomic_mod_p, equal_degree_factors, FPoly};
use crate::numtheory::{multiplicative_order, split_p};

#[derive(Debug)]
pub struct ResidueField {
    p: u64,
    m: u64,
    modulus: FPoly,
    /// `t^k mod f` for `0 <= k < m`.
    powers: Vec<FPoly>,
}

impl ResidueField {
    fn build(m: u64, p: u64) -> Self {
        let d = multiplicative_order(p % m.max(1), m).unwrap_or(1) as usize;
        let phi = cyclotomic_mod_p(m, p);
        let modulus = if phi.degree() == Some(d) {
            phi.monic(p)
        } else {
            equal_degree_factors(&phi, d, p)
                .into_iter()
                .next()
                .expect("Φ_m splits into factors of degree ord_m(p)")
        };
        let t = FPoly::x().rem(&modulus, p);
        let mut powers = Vec::with_capacity(m as usize);
        let mut cur = FPoly::one().rem(&modulus, p);
        for _ in 0..m {
            powers.push(cur.clone());
            cur = cur.mulmod(&t, &modulus, p);
        }
        ResidueField { p, m, modulus, powers }
    }

    /// Field for the table exponent `exponent` and prime `p`, cached.
    pub fn for_exponent(exponent: u64, p: u64) -> Arc<ResidueField> {
        static CACHE: OnceLock<Mutex<HashMap<(u64, u64), Arc<ResidueField>>>> = OnceLock::new();
        let m = split_p(exponent, p).1;
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(f) = cache.lock().expect("cache lock").get(&(m, p)) {
            return f.clone();
        }
        let field = Arc::new(ResidueField::build(m, p));
        cache
            .lock()
            .expect("cache lock")
            .entry((m, p))
            .or_insert(field)
            .clone()
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    /// `d` with the field of order `p^d`.
    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap_or(0)
    }

    pub fn modulus(&self) -> &FPoly {
        &self.modulus
    }

    /// Image of `x`, whose modulus must divide `exponent`.
    pub fn reduce(&self, x: &Cyclotomic, exponent: u64) -> FPoly {
        let n = x.modulus();
        assert!(exponent.is_multiple_of(n), "modulus {n} does not divide exponent {exponent}");
        let scale = exponent / n;
        let p = BigInt::from(self.p);
        let mut acc = FPoly::zero();
        for (e, c) in x.terms() {
            let k = (scale * e % self.m.max(1)) as usize;
            let c = c.mod_floor(&p).to_u64().expect("reduced");
            if c != 0 {
                acc = acc.add(&self.powers[k].scale(c, self.p), self.p);
            }
        }
        acc
    }

    pub fn mul(&self, a: &FPoly, b: &FPoly) -> FPoly {
        a.mulmod(b, &self.modulus, self.p)
    }

    pub fn add(&self, a: &FPoly, b: &FPoly) -> FPoly {
        a.add(b, self.p)
    }
}

/// `reduce_mod_p` for a single value, with the value's own modulus as the
/// exponent.
pub fn reduce_mod_p(x: &Cyclotomic, p: u64) -> (Arc<ResidueField>, FPoly) {
    let f = ResidueField::for_exponent(x.modulus(), p);
    let r = f.reduce(x, x.modulus());
    (f, r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use proptest::prelude::*;

    #[test]
    fn examples() {
        let (_, one) = reduce_mod_p(&Cyclotomic::integer(1).lift(7), 3);
        assert_eq!(one, FPoly::one());
        let x = Cyclotomic::integer(1).add(&Cyclotomic::root(4, 1));
        let (f, r) = reduce_mod_p(&x, 2);
        assert_eq!(f.degree(), 1);
        assert!(r.is_zero());
        let (f, _) = reduce_mod_p(&Cyclotomic::root(5, 1), 2);
        assert_eq!(f.degree(), 4);
    }

    #[test]
    fn large_exponent_field() {
        // PSL(2,31) table exponent, p = 3: m = 2480, degree ord_2480(3)
        let f = ResidueField::for_exponent(7440, 3);
        assert_eq!(f.degree() as u64, multiplicative_order(3, 2480).unwrap());
        let z = Cyclotomic::root(7440, 1);
        let r = f.reduce(&z, 7440);
        assert_eq!(r, f.powers[1]);
    }

    fn arb(n: u64) -> impl Strategy<Value = Cyclotomic> {
        prop::collection::vec((-7i64..=7, 0..n as i64), 0..6).prop_map(move |ts| {
            Cyclotomic::from_terms(n, ts.into_iter().map(|(c, e)| (BigInt::from(c), e)))
        })
    }

    proptest! {
        #[test]
        fn reduction_is_a_ring_homomorphism(
            x in arb(60), y in arb(20),
            p in prop::sample::select(vec![2u64, 3, 5, 7, 11]),
        ) {
            let n = 60;
            let f = ResidueField::for_exponent(n, p);
            let rx = f.reduce(&x, n);
            let ry = f.reduce(&y.lift(60), n);
            prop_assert_eq!(f.reduce(&x.add(&y), n), f.add(&rx, &ry));
            prop_assert_eq!(f.reduce(&x.mul(&y), n), f.mul(&rx, &ry));
            prop_assert_eq!(f.reduce(&x.canonical(), n), rx.clone());
            prop_assert_eq!(f.reduce(&Cyclotomic::integer(BigInt::one()), n), FPoly::one());
        }
    }
}
