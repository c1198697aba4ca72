//! Replays the case analysis for `SL_n(q)` and `SU_n(q)` at concrete
//! parameters.
//!
//! For odd primes `r ≠ s` dividing the group order, either `k = l` and
//! `n/k < min(r, s)` (then a torus `GL_1(q^k)^c`, resp. its unitary
//! analogue, holds an abelian Hall `{r, s}`-subgroup), or one of the
//! evaluated class sizes of an `r`-element is divisible by `s` (or the
//! other way round). The report records both sides exactly.

use num_bigint::BigUint;
use num_traits::{One, Pow, Zero};
use serde::Serialize;

use super::classsize::{class_size_sl_case, class_size_su_case, ClassSizeExpression, SlCase, SuCase};
use super::{check_q, gl_order, gu_order, ord_mod, ord_mod_neg, qm1, qp1, Family};
use crate::error::{Error, Result};
use crate::numtheory::{is_prime, p_part_big};

#[derive(Clone, Debug, Serialize)]
pub struct Evaluation {
    pub expression: ClassSizeExpression,
    /// The prime whose divisibility of the class size is at stake.
    pub other_prime: u64,
    pub other_divides_value: bool,
    pub other_divides_divisor: bool,
    /// What the order bookkeeping predicts for `other_divides_divisor`.
    pub expected: bool,
}

impl Evaluation {
    fn matches(&self) -> bool {
        self.other_divides_divisor == self.expected
            && (!self.other_divides_divisor || self.other_divides_value)
            && self.expression.holds()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Section2Report {
    pub family: Family,
    pub n: u32,
    pub q: u64,
    pub r: u64,
    pub s: u64,
    pub k: u64,
    pub l: u64,
    pub vacuous: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub evaluations: Vec<Evaluation>,
    /// `k = l` and `n/k < min(r, s)`.
    pub hall_predicted: bool,
    /// The torus has full `r`- and `s`-parts of the group order.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub torus_is_hall: Option<bool>,
    pub consistent: bool,
}

fn divides(p: u64, n: &BigUint) -> bool {
    (n % p).is_zero()
}

fn evaluate(expr: ClassSizeExpression, other: u64, expected: bool) -> Evaluation {
    let other_divides_value = divides(other, &expr.value);
    let other_divides_divisor = divides(other, &expr.divisor);
    Evaluation {
        expression: expr,
        other_prime: other,
        other_divides_value,
        other_divides_divisor,
        expected,
    }
}

/// Witness for an `r`-element with `ord = k >= 2` (and `l` the other
/// prime's order): the divisor contains `s` exactly when `l` is below the
/// relevant bound.
fn singer_witness(family: Family, n: u32, q: u64, r: u64, s: u64, l: u64) -> Result<Option<Evaluation>> {
    let e = match family {
        Family::GL => class_size_sl_case(n, q, r, SlCase::A)?,
        _ => {
            let k = ord_mod_neg(r, q)?;
            let case = if k % 2 == 0 { SuCase::B } else { SuCase::A1 };
            class_size_su_case(n, q, r, case)?
        }
    };
    let bound = if e.case == "su-b" { 2 * e.kappa } else { e.kappa };
    Ok(Some(evaluate(e, s, l < bound)))
}

fn torus_is_hall(family: Family, n: u64, q: u64, k: u64, r: u64, s: u64) -> bool {
    let c = n / k;
    let (order, torus) = match family {
        Family::GL => (gl_order(n, q), qm1(q, k)),
        _ => (gu_order(n, q), if k.is_multiple_of(2) { qm1(q, k) } else { qp1(q, k) }),
    };
    let torus: BigUint = Pow::pow(torus, c);
    [r, s].iter().all(|&p| p_part_big(&torus, p) == p_part_big(&order, p))
}

/// Runs the case analysis for `family` in `{GL, GU}` (meaning `SL_n(q)`,
/// resp. `SU_n(q)`). Sp and SO are evaluated only through
/// [`super::class_size_clas`].
pub fn verify_section2_divisibility(family: Family, n: u32, q: u64, r: u64, s: u64) -> Result<Section2Report> {
    check_q(q)?;
    if !matches!(family, Family::GL | Family::GU) {
        return Err(Error::Precondition(format!(
            "the divisibility replay covers GL and GU only, not {family}"
        )));
    }
    for p in [r, s] {
        if p == 2 || !is_prime(p) {
            return Err(Error::Precondition(format!("{p} is not an odd prime")));
        }
    }
    if r == s {
        return Err(Error::Precondition("r and s must differ".into()));
    }
    let ord = |p: u64| if family == Family::GL { ord_mod(p, q) } else { ord_mod_neg(p, q) };
    let (mut r, mut s) = (r, s);
    let (mut k, mut l) = (ord(r)?, ord(s)?);
    if k < l {
        std::mem::swap(&mut r, &mut s);
        std::mem::swap(&mut k, &mut l);
    }
    let nn = n as u64;
    let mut report = Section2Report {
        family,
        n,
        q,
        r,
        s,
        k,
        l,
        vacuous: false,
        reason: None,
        evaluations: Vec::new(),
        hall_predicted: false,
        torus_is_hall: None,
        consistent: true,
    };
    if n <= 1 {
        report.vacuous = true;
        report.reason = Some("rank 1: the special group is trivial".into());
        return Ok(report);
    }
    if k > nn {
        report.vacuous = true;
        report.reason = Some(format!("{r} does not divide the group order"));
        return Ok(report);
    }

    let mut evals = Vec::new();
    if k >= 2 {
        evals.extend(singer_witness(family, n, q, r, s, l)?);
        if l >= 2 {
            evals.extend(singer_witness(family, n, q, s, r, k)?);
        }
    } else {
        // k = l = 1
        for (a, b) in [(r, s), (s, r)] {
            if nn > a {
                let e = match family {
                    Family::GL => class_size_sl_case(n, q, a, SlCase::B)?,
                    _ => class_size_su_case(n, q, a, SuCase::A2)?,
                };
                evals.push(evaluate(e, b, true));
            }
        }
        let (lo, hi) = (r.min(s), r.max(s));
        if nn == lo {
            // an element of order `hi` with class size divisible by `lo`
            let e = match family {
                Family::GL => class_size_sl_case(n, q, lo, SlCase::BDimension)?,
                _ => class_size_su_case(n, q, lo, SuCase::A2Dimension)?,
            };
            let mut ev = evaluate(e, lo, true);
            ev.expression.r = hi;
            evals.push(ev);
        }
    }
    report.hall_predicted = k == l && nn < k * r.min(s);
    let any_divisible = evals.iter().any(|e| e.other_divides_value);
    let mut consistent = evals.iter().all(Evaluation::matches) && report.hall_predicted != any_divisible;
    if report.hall_predicted {
        let t = torus_is_hall(family, nn, q, k, r, s);
        report.torus_is_hall = Some(t);
        consistent &= t;
    }
    report.evaluations = evals;
    report.consistent = consistent;
    Ok(report)
}

/// `Π_{j=1..κ-1}(q^j - 1)` is a `p'`-number iff `ord_p(q) >= κ`.
pub fn product_is_prime_to(p: u64, q: u64, kappa: u64) -> bool {
    let prod = (1..kappa).fold(BigUint::one(), |a, j| a * qm1(q, j));
    !divides(p, &prod)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torus_chain_psl2_31() {
        let rep = verify_section2_divisibility(Family::GL, 2, 31, 3, 5).unwrap();
        assert_eq!((rep.k, rep.l), (1, 1));
        assert!(rep.hall_predicted);
        assert_eq!(rep.torus_is_hall, Some(true));
        assert!(rep.consistent);
    }

    #[test]
    fn singer_class_divisible_by_seven() {
        let rep = verify_section2_divisibility(Family::GL, 5, 2, 31, 7).unwrap();
        assert_eq!((rep.r, rep.k, rep.s, rep.l), (31, 5, 7, 3));
        assert!(!rep.hall_predicted);
        let e = &rep.evaluations[0];
        assert_eq!(e.expression.kappa, 5);
        assert!(e.other_divides_value);
        assert!(rep.consistent);
    }

    #[test]
    fn rank_one_is_vacuous() {
        let rep = verify_section2_divisibility(Family::GL, 1, 7, 3, 5).unwrap();
        assert!(rep.vacuous);
    }

    #[test]
    fn only_gl_and_gu() {
        assert!(verify_section2_divisibility(Family::Sp, 2, 3, 5, 13).is_err());
        assert!(verify_section2_divisibility(Family::GL, 3, 2, 7, 7).is_err());
    }

    #[test]
    fn product_criterion() {
        assert!(product_is_prime_to(7, 2, 3));
        assert!(!product_is_prime_to(7, 2, 4));
    }
}
