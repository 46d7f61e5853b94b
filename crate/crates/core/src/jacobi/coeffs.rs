//! The Wilson coefficients `A_l`, `B_l` and their tilde companions.
//!
//! Values come from the three-term recurrences and are checked against the
//! terminating 4F3 closed forms as they are produced. The recurrences are
//!
//! ```text
//! (2l+1)(a(a+b) - l(l+1) + 2N(a+b+N)) A_l + (l-1)(l^2-a^2) A_{l-1}
//!     + (l+2)((l+1)^2 - s^2) A_{l+1} = 0
//! (2l+1)((a-1)(a+b) - l(l+1) + 2N(a+b+N-1)) B_l + l(l^2-a^2) B_{l-1}
//!     + (l+1)((l+1)^2 - (s-1)^2) B_{l+1} = 0
//! ```
//!
//! with `s = a+b+2N`. Note the squares on `s` and `s-1`.

use std::sync::{OnceLock, RwLock};

use super::hypergeom::{factorial_q, gamma_ratio, hyp4f3_terminating, pochhammer, pochhammer_inv, wilson_eval};
use crate::error::{Error, Result};
use crate::exact::{parse_ratfun, q, RationalFunction, VarSet, SLOT_A, SLOT_N};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    A,
    B,
    ATilde,
    BTilde,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::A => "A",
            Kind::B => "B",
            Kind::ATilde => "A_tilde",
            Kind::BTilde => "B_tilde",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct WilsonCoeffs {
    pub kind: Kind,
    pub l: usize,
    pub value: RationalFunction,
}

const V: VarSet = VarSet::Jacobi;

fn rf(s: &str) -> RationalFunction {
    parse_ratfun(s, V).expect("internal expression")
}

fn int(k: i64) -> RationalFunction {
    RationalFunction::from_int(V, k)
}

fn alpha() -> RationalFunction {
    RationalFunction::var(V, SLOT_A)
}

/// `s = alpha + beta + 2N`.
pub(crate) fn s_total() -> RationalFunction {
    rf("alpha+beta+2*N")
}

/// `N (alpha+N) (beta+N) (alpha+beta+N)`.
pub(crate) fn p_factor() -> RationalFunction {
    rf("N*(alpha+N)*(beta+N)*(alpha+beta+N)")
}

/// `A_l` from the 4F3 closed form.
pub fn a_hypergeometric(l: usize) -> Result<RationalFunction> {
    if l == 0 {
        return Ok(rf("N*(beta+N)/(alpha+beta+2*N)"));
    }
    let li = l as i64;
    let pre = p_factor()
        .mul(&gamma_ratio(&alpha(), li + 1, 2)?)
        .mul(&pochhammer_inv(&s_total().sub(&int(1)), l as u32 + 2)?);
    let f = hyp4f3_terminating(
        &[int(1 - li), int(li + 2), rf("1-beta-N"), rf("1-N")],
        &[int(2), rf("alpha+2"), rf("2-alpha-beta-2*N")],
    )?;
    Ok(pre.mul(&f))
}

/// `B_l` from the 4F3 closed form.
pub fn b_hypergeometric(l: usize) -> Result<RationalFunction> {
    let li = l as i64;
    let pre = pochhammer(&rf("alpha+1"), l as u32).mul(&pochhammer_inv(&s_total().sub(&int(1)), l as u32 + 1)?);
    let f = hyp4f3_terminating(
        &[int(-li), int(li + 1), rf("1-beta-N"), rf("1-N")],
        &[int(1), rf("alpha+1"), rf("2-alpha-beta-2*N")],
    )?;
    Ok(pre.mul(&f))
}

fn a_step(l: i64, a_l: &RationalFunction, a_prev: &RationalFunction) -> Result<RationalFunction> {
    let c0 = rf("alpha*(alpha+beta)+2*N*(alpha+beta+N)").sub(&int(l * (l + 1))).mul(&int(2 * l + 1));
    let c1 = int(l * l).sub(&rf("alpha^2")).mul(&int(l - 1));
    let s = s_total();
    c0.mul(a_l)
        .add(&c1.mul(a_prev))
        .neg()
        .div(&int(l + 1).sub(&s))?
        .div(&int(l + 1).add(&s))?
        .div(&int(l + 2))
}

fn b_step(l: i64, b_l: &RationalFunction, b_prev: &RationalFunction) -> Result<RationalFunction> {
    let c0 = rf("(alpha-1)*(alpha+beta)+2*N*(alpha+beta+N-1)").sub(&int(l * (l + 1))).mul(&int(2 * l + 1));
    let c1 = int(l * l).sub(&rf("alpha^2")).mul(&int(l));
    let s1 = s_total().sub(&int(1));
    c0.mul(b_l)
        .add(&c1.mul(b_prev))
        .neg()
        .div(&int(l + 1).sub(&s1))?
        .div(&int(l + 1).add(&s1))?
        .div(&int(l + 1))
}

#[derive(Default)]
struct Tables {
    a: Vec<RationalFunction>,
    b: Vec<RationalFunction>,
}

fn tables() -> &'static RwLock<Tables> {
    static T: OnceLock<RwLock<Tables>> = OnceLock::new();
    T.get_or_init(|| RwLock::new(Tables::default()))
}

fn seeds() -> Tables {
    Tables {
        a: vec![
            rf("N*(beta+N)/(alpha+beta+2*N)"),
            rf("N*(alpha+N)*(beta+N)*(alpha+beta+N)/((alpha+beta+2*N-1)*(alpha+beta+2*N)*(alpha+beta+2*N+1))"),
        ],
        b: vec![
            rf("1/(alpha+beta+2*N-1)"),
            rf("((alpha-1)*(alpha+beta)+2*N*(alpha+beta+N-1))/((alpha+beta+2*N-2)*(alpha+beta+2*N-1)*(alpha+beta+2*N))"),
        ],
    }
}

/// Extends the tables through index `l`, checking each new entry against the closed form.
fn ensure(l: usize) -> Result<()> {
    let (mut a, mut b) = {
        let t = tables().read().unwrap();
        if t.a.len() > l {
            return Ok(());
        }
        (t.a.clone(), t.b.clone())
    };
    if a.is_empty() {
        let s = seeds();
        for i in 0..2 {
            check(Kind::A, i, &s.a[i], &a_hypergeometric(i)?)?;
            check(Kind::B, i, &s.b[i], &b_hypergeometric(i)?)?;
        }
        (a, b) = (s.a, s.b);
    }
    while a.len() <= l {
        let n = a.len();
        let k = n as i64 - 1;
        let next_a = a_step(k, &a[n - 1], &a[n - 2])?;
        let next_b = b_step(k, &b[n - 1], &b[n - 2])?;
        check(Kind::A, n, &next_a, &a_hypergeometric(n)?)?;
        check(Kind::B, n, &next_b, &b_hypergeometric(n)?)?;
        a.push(next_a);
        b.push(next_b);
    }
    let mut t = tables().write().unwrap();
    if t.a.len() < a.len() {
        t.a = a;
        t.b = b;
    }
    Ok(())
}

fn check(kind: Kind, l: usize, rec: &RationalFunction, hyp: &RationalFunction) -> Result<()> {
    if rec == hyp {
        Ok(())
    } else {
        Err(Error::RouteMismatch { kind: kind.name(), l })
    }
}

/// Tilde prefactor `(s - shift - l)_{2l+1} / (alpha - l)_{2l+1}`.
fn tilde_factor(l: usize, shift: i64) -> Result<RationalFunction> {
    let li = l as i64;
    let top = pochhammer(&s_total().sub(&int(shift + li)), 2 * l as u32 + 1);
    Ok(top.mul(&pochhammer_inv(&alpha().sub(&int(li)), 2 * l as u32 + 1)?))
}

/// The coefficient of the given kind, memoized; recurrence and 4F3 routes agree
/// or an error is returned.
pub fn coeff(kind: Kind, l: usize) -> Result<WilsonCoeffs> {
    ensure(l)?;
    let (a, b) = {
        let t = tables().read().unwrap();
        (t.a[l].clone(), t.b[l].clone())
    };
    let value = match kind {
        Kind::A => a,
        Kind::B => b,
        Kind::ATilde => tilde_factor(l, 0)?.mul(&a),
        Kind::BTilde => tilde_factor(l, 1)?.mul(&b),
    };
    Ok(WilsonCoeffs { kind, l, value })
}

/// Shorthand for `coeff(kind, l)?.value`.
pub fn coeff_value(kind: Kind, l: usize) -> Result<RationalFunction> {
    Ok(coeff(kind, l)?.value)
}

fn sign(n: u32) -> i64 {
    if n % 2 == 1 {
        -1
    } else {
        1
    }
}

/// `A_l` at the integer `N = n` through the Wilson polynomial `W_{n-1}`.
pub fn a_wilson(n: u32, l: usize) -> Result<RationalFunction> {
    assert!(n >= 1);
    let (ni, li) = (n as i64, l as i64);
    let ab = rf("alpha+beta");
    let pre = gamma_ratio(&alpha(), li + 1, ni)?
        .mul(&gamma_ratio(&ab, ni + 1, 2 * ni + li + 1)?)
        .mul(&rf("beta").add(&int(ni)))
        .scale(&(q(sign(n - 1), 1) / factorial_q(n - 1)));
    let w = wilson_eval(
        n - 1,
        &q(2 * li + 1, 2),
        &RationalFunction::constant(V, q(3, 2)),
        &RationalFunction::constant(V, q(1, 2)),
        &rf("alpha+1/2"),
        &rf("1/2-alpha-beta").sub(&int(2 * ni)),
    )?;
    Ok(pre.mul(&w))
}

/// `B_l` at the integer `N = n` through the Wilson polynomial `W_{n-1}`.
pub fn b_wilson(n: u32, l: usize) -> Result<RationalFunction> {
    assert!(n >= 1);
    let (ni, li) = (n as i64, l as i64);
    let ab = rf("alpha+beta");
    let pre = gamma_ratio(&alpha(), li + 1, ni)?
        .mul(&gamma_ratio(&ab, ni, 2 * ni + li)?)
        .scale(&(q(sign(n - 1), 1) / factorial_q(n - 1)));
    let w = wilson_eval(
        n - 1,
        &q(2 * li + 1, 2),
        &RationalFunction::constant(V, q(1, 2)),
        &RationalFunction::constant(V, q(1, 2)),
        &rf("alpha+1/2"),
        &rf("3/2-alpha-beta").sub(&int(2 * ni)),
    )?;
    Ok(pre.mul(&w))
}

/// `f` with `N` set to the integer `n`.
pub fn at_n(f: &RationalFunction, n: i64) -> Result<RationalFunction> {
    f.specialize(SLOT_N, &q(n, 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_values() {
        assert_eq!(coeff_value(Kind::A, 0).unwrap(), rf("N*(beta+N)/(alpha+beta+2*N)"));
        assert_eq!(coeff_value(Kind::B, 0).unwrap(), rf("1/(alpha+beta+2*N-1)"));
        assert_eq!(coeff_value(Kind::ATilde, 0).unwrap(), rf("N*(beta+N)/alpha"));
        assert_eq!(
            coeff_value(Kind::B, 1).unwrap(),
            rf("((alpha-1)*(alpha+beta)+2*N*(alpha+beta-1)+2*N^2)/((alpha+beta+2*N-2)*(alpha+beta+2*N-1)*(alpha+beta+2*N))")
        );
        assert_eq!(
            a_hypergeometric(1).unwrap(),
            rf("N*(alpha+N)*(beta+N)*(alpha+beta+N)/((alpha+beta+2*N-1)*(alpha+beta+2*N)*(alpha+beta+2*N+1))")
        );
    }

    #[test]
    fn routes_agree() {
        for l in 0..=6 {
            coeff(Kind::A, l).unwrap();
        }
    }

    #[test]
    fn wilson_forms_at_small_n() {
        for n in 1..=3u32 {
            for l in 1..=3 {
                let a = at_n(&coeff_value(Kind::A, l).unwrap(), n as i64).unwrap();
                assert_eq!(a, a_wilson(n, l).unwrap(), "A n={n} l={l}");
            }
            for l in 0..=3 {
                let b = at_n(&coeff_value(Kind::B, l).unwrap(), n as i64).unwrap();
                assert_eq!(b, b_wilson(n, l).unwrap(), "B n={n} l={l}");
            }
        }
    }
}
