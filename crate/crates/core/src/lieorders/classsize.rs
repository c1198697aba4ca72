//! Class sizes of the semisimple r-elements used in the case analysis for
//! SL, SU, Sp and SO, each with the product the size is claimed to be
//! divisible by.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use super::{
    check_q, gl_order, gu_order, ord_mod, ord_mod_neg, qm1, qp1, qpow, r_exponent, so_even_order, sp_order,
    unitary_factor, Family,
};
use crate::error::{Error, Result};

fn ser_big<S: serde::Serializer>(n: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&n.to_string())
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassSizeExpression {
    /// Which case of the analysis this is, e.g. `"sl-a"`.
    pub case: &'static str,
    pub family: Family,
    pub n: u32,
    pub q: u64,
    /// Prime of the element (an `r`-element).
    pub r: u64,
    /// Order of `q` (or `-q`) mod `r`.
    pub k: u64,
    pub kappa: u64,
    #[serde(serialize_with = "ser_big")]
    pub value: BigUint,
    #[serde(serialize_with = "ser_big")]
    pub divisor: BigUint,
    #[serde(serialize_with = "ser_big")]
    pub ambient_order: BigUint,
    pub divisor_holds: bool,
    pub divides_ambient: bool,
}

impl ClassSizeExpression {
    #[allow(clippy::too_many_arguments)]
    fn new(
        case: &'static str,
        family: Family,
        n: u32,
        q: u64,
        r: u64,
        k: u64,
        kappa: u64,
        numerator: BigUint,
        denominator: BigUint,
        divisor: BigUint,
        ambient_order: BigUint,
    ) -> Result<Self> {
        let (value, rem) = numerator.div_rem(&denominator);
        if !rem.is_zero() {
            return Err(Error::Precondition(format!(
                "{case}: centralizer order does not divide the group order"
            )));
        }
        let divisor_holds = (&value % &divisor).is_zero();
        let divides_ambient = (&ambient_order % &value).is_zero();
        Ok(ClassSizeExpression {
            case,
            family,
            n,
            q,
            r,
            k,
            kappa,
            value,
            divisor,
            ambient_order,
            divisor_holds,
            divides_ambient,
        })
    }

    pub fn holds(&self) -> bool {
        self.divisor_holds && self.divides_ambient
    }
}

fn pre(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}

fn product(range: impl Iterator<Item = u64>, f: impl Fn(u64) -> BigUint) -> BigUint {
    range.map(f).fold(BigUint::one(), |a, b| a * b)
}

fn check_odd_r(r: u64) -> Result<()> {
    if r == 2 {
        return Err(pre("r must be odd"));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SlCase {
    /// `k >= 2`: Singer-cycle element of `GL_κ(q)`, `κ = k r^m`.
    A,
    /// `k = 1`, `n >= r + 1`.
    B,
    /// `k = 1`, `n = r`: an element `diag(β, β⁻¹, 1, ...)` whose class size
    /// is divisible by `r`. Here `r` is the dimension prime and the element
    /// is a `q - 1` torsion element.
    BDimension,
}

pub fn class_size_sl(n: u32, q: u64, r: u64) -> Result<ClassSizeExpression> {
    class_size_sl_case(n, q, r, SlCase::A)
}

pub fn class_size_sl_case(n: u32, q: u64, r: u64, case: SlCase) -> Result<ClassSizeExpression> {
    check_q(q)?;
    check_odd_r(r)?;
    let k = ord_mod(r, q)?;
    let nn = n as u64;
    if k > nn {
        return Err(pre(format!("k = ord_{r}({q}) = {k} exceeds n = {n}")));
    }
    let ambient = gl_order(nn, q) / qm1(q, 1);
    match case {
        SlCase::A => {
            if k < 2 {
                return Err(pre(format!("case a needs k >= 2, got k = {k}")));
            }
            let kappa = k * r.pow(r_exponent(nn, k, r));
            let num = gl_order(nn, q);
            let den = qm1(q, kappa) * gl_order(nn - kappa, q);
            let divisor = product(1..kappa, |j| qm1(q, j));
            ClassSizeExpression::new("sl-a", Family::GL, n, q, r, k, kappa, num, den, divisor, ambient)
        }
        SlCase::B => {
            if k != 1 {
                return Err(pre(format!("case b needs k = 1, got k = {k}")));
            }
            if nn < r + 1 {
                return Err(pre(format!("case b needs n >= r + 1 = {}", r + 1)));
            }
            let num = ambient.clone();
            let den = qm1(q, r) * gl_order(nn - r - 1, q);
            let divisor = product(2..r, |j| qm1(q, j)) * qm1(q, r + 1);
            ClassSizeExpression::new("sl-b", Family::GL, n, q, r, k, r, num, den, divisor, ambient)
        }
        SlCase::BDimension => {
            if k != 1 {
                return Err(pre(format!("case b needs k = 1, got k = {k}")));
            }
            if nn != r {
                return Err(pre(format!("this case needs n = r = {r}")));
            }
            let num = ambient.clone();
            let den = qm1(q, 1) * gl_order(nn - 2, q);
            ClassSizeExpression::new("sl-b-dim", Family::GL, n, q, r, k, 1, num, den, BigUint::from(r), ambient)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SuCase {
    /// `k = ord_r(-q)` odd and at least 3.
    A1,
    /// `k = 1`, `n >= r + 1`.
    A2,
    /// `k = 1`, `n = r`.
    A2Dimension,
    /// `k` even.
    B,
}

pub fn class_size_su(n: u32, q: u64, r: u64) -> Result<ClassSizeExpression> {
    check_q(q)?;
    check_odd_r(r)?;
    let k = ord_mod_neg(r, q)?;
    let case = if k % 2 == 0 { SuCase::B } else { SuCase::A1 };
    class_size_su_case(n, q, r, case)
}

pub fn class_size_su_case(n: u32, q: u64, r: u64, case: SuCase) -> Result<ClassSizeExpression> {
    check_q(q)?;
    check_odd_r(r)?;
    let k = ord_mod_neg(r, q)?;
    let nn = n as u64;
    if k > nn {
        return Err(pre(format!("k = ord_{r}(-{q}) = {k} exceeds n = {n}")));
    }
    let ambient = gu_order(nn, q) / qp1(q, 1);
    match case {
        SuCase::A1 => {
            if k % 2 == 0 || k < 3 {
                return Err(pre(format!("case a1 needs odd k >= 3, got k = {k}")));
            }
            let kappa = k * r.pow(r_exponent(nn, k, r));
            let num = gu_order(nn, q);
            let den = qp1(q, kappa) * gu_order(nn - kappa, q);
            let divisor = product(1..kappa, |j| unitary_factor(q, j));
            ClassSizeExpression::new("su-a1", Family::GU, n, q, r, k, kappa, num, den, divisor, ambient)
        }
        SuCase::A2 => {
            if k != 1 {
                return Err(pre(format!("case a2 needs k = 1, got k = {k}")));
            }
            if nn < r + 1 {
                return Err(pre(format!("case a2 needs n >= r + 1 = {}", r + 1)));
            }
            let num = ambient.clone();
            let den = qp1(q, r) * gu_order(nn - r - 1, q);
            let divisor = product(2..r, |j| unitary_factor(q, j)) * qm1(q, r + 1);
            ClassSizeExpression::new("su-a2", Family::GU, n, q, r, k, r, num, den, divisor, ambient)
        }
        SuCase::A2Dimension => {
            if k != 1 {
                return Err(pre(format!("case a2 needs k = 1, got k = {k}")));
            }
            if nn != r {
                return Err(pre(format!("this case needs n = r = {r}")));
            }
            let num = ambient.clone();
            let den = qp1(q, 1) * gu_order(nn - 2, q);
            ClassSizeExpression::new("su-a2-dim", Family::GU, n, q, r, k, 1, num, den, BigUint::from(r), ambient)
        }
        SuCase::B => {
            if k % 2 == 1 {
                return Err(pre(format!("case b needs even k, got k = {k}")));
            }
            // 2κ = k r^m must fit in dimension n
            let kappa = (k / 2) * r.pow(r_exponent(nn, k, r));
            let num = gu_order(nn, q);
            let den = qm1(q, 2 * kappa) * gu_order(nn - 2 * kappa, q);
            let divisor = product(1..2 * kappa, |j| unitary_factor(q, j));
            ClassSizeExpression::new("su-b", Family::GU, n, q, r, k, kappa, num, den, divisor, ambient)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ClasCase {
    /// `k` odd, `G ≠ SO^-_{2κ}`.
    A2,
    /// `k` odd, `G = SO^-_{2κ}` with `m >= 1`.
    A3,
    /// `k` even, `G ≠ SO^+_{2κ}`.
    B2,
    /// `k` even, `n/k_1 < r`: `a = ⌊n/k_1⌋` copies of the `GU_1(q^{k_1})`
    /// element, `G ≠ SO^{-(-1)^a}_{2ak_1}`.
    B3,
    /// `k` even, `G = SO^+_{2κ}` with `m >= 1`.
    B4,
}

/// Symplectic or orthogonal type with a sign, read off a family.
#[derive(Clone, Copy, Debug)]
struct Cl {
    symplectic: bool,
    odd: bool,
    eps: i8,
}

impl Cl {
    fn of(family: Family) -> Result<Cl> {
        Ok(match family {
            Family::Sp => Cl { symplectic: true, odd: false, eps: 1 },
            Family::SOodd => Cl { symplectic: false, odd: true, eps: 1 },
            Family::SOplus => Cl { symplectic: false, odd: false, eps: 1 },
            Family::SOminus => Cl { symplectic: false, odd: false, eps: -1 },
            _ => return Err(pre(format!("{family} is not symplectic or orthogonal"))),
        })
    }

    /// `|Cl^sign_{2m}|` or, for odd type, `|SO_{2m+1}|`. The sign is
    /// ignored for Sp and odd dimension.
    fn order(self, m: u64, sign: i8, q: u64) -> Result<BigUint> {
        if self.symplectic || self.odd {
            Ok(sp_order(m, q))
        } else {
            so_even_order(m, sign, q)
        }
    }

    fn is_so(self, sign: i8) -> bool {
        !self.symplectic && !self.odd && self.eps == sign
    }
}

/// Class sizes for `Sp_{2n}(q)` and `SO_d(q)`.
pub fn class_size_clas(family: Family, n: u32, q: u64, r: u64, case: ClasCase) -> Result<ClassSizeExpression> {
    check_q(q)?;
    check_odd_r(r)?;
    let cl = Cl::of(family)?;
    let k = ord_mod(r, q)?;
    let nn = n as u64;
    let ambient = cl.order(nn, cl.eps, q)?;
    let odd_k = k % 2 == 1;
    match case {
        ClasCase::A2 | ClasCase::A3 => {
            if !odd_k {
                return Err(pre(format!("case a needs odd k, got k = {k}")));
            }
            if k > nn {
                return Err(pre(format!("case a needs k <= n, got k = {k}, n = {n}")));
            }
        }
        _ => {
            if odd_k {
                return Err(pre(format!("case b needs even k, got k = {k}")));
            }
            if k / 2 > nn {
                return Err(pre(format!("case b needs k/2 <= n, got k = {k}, n = {n}")));
            }
        }
    }
    match case {
        ClasCase::A2 => {
            let kappa = k * r.pow(r_exponent(nn, k, r));
            if cl.is_so(-1) && nn == kappa {
                return Err(pre("case a2 needs G ≠ SO^-_{2κ}"));
            }
            let num = ambient.clone();
            let den = qm1(q, kappa) * cl.order(nn - kappa, cl.eps, q)?;
            let divisor = product(1..kappa, |j| qm1(q, 2 * j));
            ClassSizeExpression::new("clas-a2", family, n, q, r, k, kappa, num, den, divisor, ambient)
        }
        ClasCase::A3 => {
            let m = r_exponent(nn, k, r);
            let kappa = k * r.pow(m);
            if !(cl.is_so(-1) && nn == kappa) {
                return Err(pre("case a3 needs G = SO^-_{2κ}"));
            }
            if m < 1 {
                return Err(pre("case a3 needs m >= 1"));
            }
            let kappa1 = k * r.pow(m - 1);
            let num = ambient.clone();
            let den = qm1(q, kappa1) * so_even_order(nn - kappa1, -1, q)?;
            let divisor = product(1..kappa1, |j| qm1(q, 2 * j));
            ClassSizeExpression::new("clas-a3", family, n, q, r, k, kappa1, num, den, divisor, ambient)
        }
        ClasCase::B2 => {
            let k1 = k / 2;
            let kappa = k1 * r.pow(r_exponent(nn, k1, r));
            if cl.is_so(1) && nn == kappa {
                return Err(pre("case b2 needs G ≠ SO^+_{2κ}"));
            }
            let num = ambient.clone();
            let den = qp1(q, kappa) * cl.order(nn - kappa, -cl.eps, q)?;
            let divisor = product(1..kappa, |j| qm1(q, 2 * j));
            ClassSizeExpression::new("clas-b2", family, n, q, r, k, kappa, num, den, divisor, ambient)
        }
        ClasCase::B3 => {
            let k1 = k / 2;
            if nn >= k1 * r {
                return Err(pre(format!("case b3 needs n/k1 < r, got n = {n}, k1 = {k1}")));
            }
            let a = nn / k1;
            let alpha: i8 = if a.is_multiple_of(2) { 1 } else { -1 };
            if cl.is_so(-alpha) && nn == a * k1 {
                return Err(pre("case b3 needs G ≠ SO^{-α}_{2aκ}"));
            }
            let gu_a = gu_order(a, qpow(q, k1).try_into().map_err(|_| pre("q^k1 too large"))?);
            let num = ambient.clone();
            let den = gu_a * cl.order(nn - a * k1, alpha * cl.eps, q)?;
            let divisor = product((1..a * k1).filter(|j| j % k1 != 0), |j| qm1(q, 2 * j))
                * product(1..a, |i| if i % 2 == 0 { qp1(q, i * k1) } else { qm1(q, i * k1) });
            ClassSizeExpression::new("clas-b3", family, n, q, r, k, k1, num, den, divisor, ambient)
        }
        ClasCase::B4 => {
            let k1 = k / 2;
            let m = r_exponent(nn, k1, r);
            let kappa = k1 * r.pow(m);
            if !(cl.is_so(1) && nn == kappa) {
                return Err(pre("case b4 needs G = SO^+_{2κ}"));
            }
            if m < 1 {
                return Err(pre("case b4 needs m >= 1"));
            }
            let kappa1 = k1 * r.pow(m - 1);
            let qk: u64 = qpow(q, kappa1).try_into().map_err(|_| pre("q^κ1 too large"))?;
            let num = ambient.clone();
            let den = gu_order(r - 1, qk) * so_even_order(kappa1, 1, q)?;
            let divisor = product((1..kappa1 * (r - 1)).filter(|j| j % kappa1 != 0), |j| qm1(q, 2 * j))
                * product(1..r - 1, |i| if i % 2 == 0 { qp1(q, i * kappa1) } else { qm1(q, i * kappa1) });
            ClassSizeExpression::new("clas-b4", family, n, q, r, k, kappa1, num, den, divisor, ambient)
        }
    }
}
