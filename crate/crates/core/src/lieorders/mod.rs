//! Exact order and class-size arithmetic for finite classical groups.
//!
//! Ranks follow the usual conventions: `GL`/`GU` take the dimension `n`,
//! `Sp` and `SOodd` take `n` with dimension `2n` resp. `2n + 1`, and
//! `SOplus`/`SOminus` take `n` with dimension `2n`.

pub mod classsize;
pub mod exceptional;
pub mod grid;
pub mod verify;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Pow};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numtheory::{is_prime, multiplicative_order, prime_power};

pub use classsize::{
    class_size_clas, class_size_sl, class_size_sl_case, class_size_su, class_size_su_case, ClasCase,
    ClassSizeExpression, SlCase, SuCase,
};
pub use verify::{verify_section2_divisibility, Section2Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    GL,
    GU,
    Sp,
    SOodd,
    SOplus,
    SOminus,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::GL,
        Family::GU,
        Family::Sp,
        Family::SOodd,
        Family::SOplus,
        Family::SOminus,
    ];

    /// Dimension of the natural module.
    pub fn dimension(self, n: u32) -> u32 {
        match self {
            Family::GL | Family::GU => n,
            Family::SOodd => 2 * n + 1,
            Family::Sp | Family::SOplus | Family::SOminus => 2 * n,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::GL => "GL",
            Family::GU => "GU",
            Family::Sp => "Sp",
            Family::SOodd => "SOodd",
            Family::SOplus => "SOplus",
            Family::SOminus => "SOminus",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Malformed(format!("unknown family `{s}` (GL, GU, Sp, SOodd, SOplus, SOminus)")))
    }
}

pub(crate) fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

pub(crate) fn qpow(q: u64, e: u64) -> BigUint {
    Pow::pow(big(q), e)
}

/// `q^e - 1`.
pub(crate) fn qm1(q: u64, e: u64) -> BigUint {
    qpow(q, e) - 1u32
}

/// `q^e + 1`.
pub(crate) fn qp1(q: u64, e: u64) -> BigUint {
    qpow(q, e) + 1u32
}

/// `q^e - sign` for `sign = ±1`.
pub(crate) fn qminus(q: u64, e: u64, sign: i8) -> BigUint {
    if sign > 0 {
        qm1(q, e)
    } else {
        qp1(q, e)
    }
}

/// `q^j - (-1)^j`.
pub(crate) fn unitary_factor(q: u64, j: u64) -> BigUint {
    qminus(q, j, if j.is_multiple_of(2) { 1 } else { -1 })
}

pub(crate) fn check_q(q: u64) -> Result<()> {
    if prime_power(q).is_none() {
        return Err(Error::Precondition(format!("q = {q} is not a prime power")));
    }
    Ok(())
}

pub fn gl_order(n: u64, q: u64) -> BigUint {
    let mut acc = qpow(q, n * n.saturating_sub(1) / 2);
    for j in 1..=n {
        acc *= qm1(q, j);
    }
    acc
}

pub fn gu_order(n: u64, q: u64) -> BigUint {
    let mut acc = qpow(q, n * n.saturating_sub(1) / 2);
    for j in 1..=n {
        acc *= unitary_factor(q, j);
    }
    acc
}

pub fn sp_order(n: u64, q: u64) -> BigUint {
    let mut acc = qpow(q, n * n);
    for j in 1..=n {
        acc *= qm1(q, 2 * j);
    }
    acc
}

/// `|SO^ε_{2n}(q)|`; `SO^-_0` does not exist.
pub fn so_even_order(n: u64, eps: i8, q: u64) -> Result<BigUint> {
    if n == 0 {
        return if eps > 0 {
            Ok(BigUint::one())
        } else {
            Err(Error::Precondition("SO^-_0 does not exist".into()))
        };
    }
    let mut acc = qpow(q, n * (n - 1)) * qminus(q, n, eps);
    for j in 1..n {
        acc *= qm1(q, 2 * j);
    }
    Ok(acc)
}

/// Exact order of the classical group of the given family and rank.
pub fn group_order(family: Family, n: u32, q: u64) -> Result<BigUint> {
    check_q(q)?;
    if n == 0 {
        return Err(Error::Malformed(format!("{family} needs rank n >= 1")));
    }
    let n = n as u64;
    Ok(match family {
        Family::GL => gl_order(n, q),
        Family::GU => gu_order(n, q),
        Family::Sp | Family::SOodd => sp_order(n, q),
        Family::SOplus => so_even_order(n, 1, q)?,
        Family::SOminus => so_even_order(n, -1, q)?,
    })
}

fn check_r(r: u64, q: u64) -> Result<()> {
    if !is_prime(r) {
        return Err(Error::Precondition(format!("r = {r} is not prime")));
    }
    if q.is_multiple_of(r) {
        return Err(Error::Precondition(format!("r = {r} divides q = {q}")));
    }
    Ok(())
}

/// Least `k >= 1` with `q^k = 1 (mod r)`.
pub fn ord_mod(r: u64, q: u64) -> Result<u64> {
    check_r(r, q)?;
    Ok(multiplicative_order(q % r, r).expect("coprime"))
}

/// Least `k >= 1` with `(-q)^k = 1 (mod r)`.
pub fn ord_mod_neg(r: u64, q: u64) -> Result<u64> {
    check_r(r, q)?;
    Ok(multiplicative_order((r - q % r) % r, r).expect("coprime"))
}

/// Whether `r` is a primitive prime divisor of `q^k - 1`.
pub fn is_primitive_prime_divisor(r: u64, q: u64, k: u64) -> bool {
    is_prime(r) && !q.is_multiple_of(r) && ord_mod(r, q).ok() == Some(k)
}

/// Largest `m` with `base * r^m <= n`, for `base <= n`.
pub(crate) fn r_exponent(n: u64, base: u64, r: u64) -> u32 {
    let mut m = 0;
    let mut cur = base;
    while cur * r <= n {
        cur *= r;
        m += 1;
    }
    m
}

/// Multiplicities of the cyclotomic polynomials `Φ_d(q)` in the generic
/// order, as a polynomial in `q` (the `q`-power is dropped).
pub fn phi_multiplicities(family: Family, n: u32) -> std::collections::BTreeMap<u64, i32> {
    let mut out = std::collections::BTreeMap::new();
    let n = n as u64;
    let minus = |e: u64, out: &mut std::collections::BTreeMap<u64, i32>| {
        for d in crate::numtheory::divisors(e) {
            *out.entry(d).or_insert(0) += 1;
        }
    };
    let plus = |e: u64, out: &mut std::collections::BTreeMap<u64, i32>| {
        for d in crate::numtheory::divisors(2 * e) {
            if !e.is_multiple_of(d) {
                *out.entry(d).or_insert(0) += 1;
            }
        }
    };
    match family {
        Family::GL => (1..=n).for_each(|j| minus(j, &mut out)),
        Family::GU => (1..=n).for_each(|j| {
            if j % 2 == 0 {
                minus(j, &mut out)
            } else {
                plus(j, &mut out)
            }
        }),
        Family::Sp | Family::SOodd => (1..=n).for_each(|j| minus(2 * j, &mut out)),
        Family::SOplus | Family::SOminus => {
            (1..n).for_each(|j| minus(2 * j, &mut out));
            if family == Family::SOplus {
                minus(n, &mut out)
            } else {
                plus(n, &mut out)
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_examples() {
        assert_eq!(group_order(Family::GL, 3, 2).unwrap(), big(168));
        assert_eq!(group_order(Family::GL, 1, 5).unwrap(), big(4));
        assert_eq!(group_order(Family::GU, 2, 2).unwrap(), big(18));
        assert_eq!(group_order(Family::Sp, 2, 3).unwrap(), big(51840));
        assert_eq!(group_order(Family::SOminus, 1, 7).unwrap(), big(8));
        assert_eq!(group_order(Family::SOplus, 1, 7).unwrap(), big(6));
        assert!(group_order(Family::GL, 2, 6).is_err());
        assert!(group_order(Family::GL, 0, 2).is_err());
    }

    #[test]
    fn ord_examples() {
        assert_eq!(ord_mod(7, 2).unwrap(), 3);
        assert_eq!(ord_mod(3, 4).unwrap(), 1);
        assert_eq!(ord_mod_neg(3, 2).unwrap(), 1);
        assert!(ord_mod(3, 9).is_err());
        assert!(is_primitive_prime_divisor(31, 2, 5));
        assert!(!is_primitive_prime_divisor(3, 2, 4));
    }

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.to_string().parse::<Family>().unwrap(), f);
        }
        assert!("E8".parse::<Family>().is_err());
    }
}
