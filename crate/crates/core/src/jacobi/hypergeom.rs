//! Rising factorials, terminating 4F3 sums at unit argument, Wilson polynomials.

use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::exact::{Rational, RationalFunction, VarSet};

/// `(s)_k = s (s+1) ... (s+k-1)`.
pub fn pochhammer(s: &RationalFunction, k: u32) -> RationalFunction {
    let v = s.vars();
    let mut acc = RationalFunction::one(v);
    for i in 0..k {
        acc = acc.mul(&s.add(&RationalFunction::from_int(v, i as i64)));
    }
    acc
}

/// `1 / (s)_k`, dividing one factor at a time so the denominator stays factored.
pub fn pochhammer_inv(s: &RationalFunction, k: u32) -> Result<RationalFunction> {
    let v = s.vars();
    let mut acc = RationalFunction::one(v);
    for i in 0..k {
        acc = acc.div(&s.add(&RationalFunction::from_int(v, i as i64)))?;
    }
    Ok(acc)
}

/// `Gamma(x + p) / Gamma(x + q)` for integer shifts, as a rational function.
pub fn gamma_ratio(x: &RationalFunction, p: i64, q: i64) -> Result<RationalFunction> {
    let v = x.vars();
    if p >= q {
        Ok(pochhammer(&x.add(&RationalFunction::from_int(v, q)), (p - q) as u32))
    } else {
        pochhammer_inv(&x.add(&RationalFunction::from_int(v, p)), (q - p) as u32)
    }
}

fn terminating_order(num: &[RationalFunction; 4]) -> Option<u32> {
    num.iter()
        .filter_map(|a| a.as_constant())
        .filter(|c| c.is_integer() && !c.is_positive())
        .filter_map(|c| (-c).to_integer().to_u32())
        .min()
}

/// `4F3(a1..a4; b1..b3; 1)` where some `a_i` is a nonpositive integer constant.
pub fn hyp4f3_terminating(num: &[RationalFunction; 4], den: &[RationalFunction; 3]) -> Result<RationalFunction> {
    let m = terminating_order(num).ok_or(Error::NonTerminating)?;
    let v: VarSet = num[0].vars();
    let mut term = RationalFunction::one(v);
    let mut parts = vec![term.clone()];
    for k in 0..m {
        let kk = RationalFunction::from_int(v, k as i64);
        let mut step = RationalFunction::one(v);
        for a in num {
            step = step.mul(&a.add(&kk));
        }
        for b in den {
            let f = b.add(&kk);
            if f.is_zero() {
                return Err(Error::Pole(format!("denominator parameter {b} reaches zero at k = {k}")));
            }
            step = step.div(&f)?;
        }
        term = term.mul(&step).scale(&Rational::new(1.into(), (k + 1).into()));
        if term.is_zero() {
            break;
        }
        parts.push(term.clone());
    }
    Ok(crate::exact::series::sum_all(v, parts))
}

/// `W_n(-kappa^2; a, b, c, d)`, i.e. the Wilson polynomial at the imaginary
/// point `k = i kappa`, so `a +- i k = a -+ kappa` stay real.
pub fn wilson_eval(
    n: u32,
    kappa: &Rational,
    a: &RationalFunction,
    b: &RationalFunction,
    c: &RationalFunction,
    d: &RationalFunction,
) -> Result<RationalFunction> {
    let v = a.vars();
    let k = RationalFunction::constant(v, kappa.clone());
    let (ab, ac, ad) = (a.add(b), a.add(c), a.add(d));
    let top = RationalFunction::from_int(v, n as i64 - 1).add(&ab).add(c).add(d);
    let num = [RationalFunction::from_int(v, -(n as i64)), top, a.add(&k), a.sub(&k)];
    let f = hyp4f3_terminating(&num, &[ab.clone(), ac.clone(), ad.clone()])?;
    Ok(pochhammer(&ab, n).mul(&pochhammer(&ac, n)).mul(&pochhammer(&ad, n)).mul(&f))
}

/// `n!` for a small integer, as a rational.
pub(crate) fn factorial_q(n: u32) -> Rational {
    Rational::from_integer(crate::symgroup::partition::factorial(n))
}
