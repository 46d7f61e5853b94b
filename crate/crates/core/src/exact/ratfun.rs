//! Rational functions with an expanded numerator and a factored denominator.
//!
//! The denominator is a sorted list of primitive polynomials (integer
//! coefficients, positive leading coefficient) with multiplicities. Scalars
//! are carried in the numerator's rational coefficients and monomial content
//! is split into single-variable factors. No multivariate GCD is computed:
//! a factor is cancelled only when it divides the numerator exactly, and
//! equality is decided by cross-multiplication.

use std::fmt;

use num_traits::{One, Signed, Zero};

use super::poly::{fmt_monomial, fmt_rational, SparsePoly, VarSet};
use super::Rational;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct RationalFunction {
    num: SparsePoly,
    den: Vec<(SparsePoly, u32)>,
}

impl RationalFunction {
    pub fn zero(vars: VarSet) -> Self {
        RationalFunction { num: SparsePoly::zero(vars), den: Vec::new() }
    }

    pub fn one(vars: VarSet) -> Self {
        Self::from_poly(SparsePoly::one(vars))
    }

    pub fn constant(vars: VarSet, c: Rational) -> Self {
        Self::from_poly(SparsePoly::constant(vars, c))
    }

    pub fn from_int(vars: VarSet, c: i64) -> Self {
        Self::from_poly(SparsePoly::from_int(vars, c))
    }

    pub fn var(vars: VarSet, slot: usize) -> Self {
        Self::from_poly(SparsePoly::var(vars, slot))
    }

    pub fn from_poly(p: SparsePoly) -> Self {
        RationalFunction { num: p, den: Vec::new() }
    }

    /// `num / den`, factoring out scalar and monomial content of `den`.
    pub fn from_parts(num: SparsePoly, den: SparsePoly) -> Result<Self> {
        if num.vars() != den.vars() {
            return Err(Error::VarSetMismatch(num.vars().name(), den.vars().name()));
        }
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut out = RationalFunction { num, den: Vec::new() };
        let scale = push_factor(&mut out.den, &den, 1);
        out.num = out.num.scale(&scale);
        out.cancel_all();
        Ok(out)
    }

    /// Builds from a numerator and a list of denominator factors with multiplicities.
    pub fn from_factored(num: SparsePoly, factors: &[(SparsePoly, u32)]) -> Result<Self> {
        let mut out = RationalFunction { num, den: Vec::new() };
        let mut scale = Rational::one();
        for (f, m) in factors {
            if f.vars() != out.num.vars() {
                return Err(Error::VarSetMismatch(out.num.vars().name(), f.vars().name()));
            }
            if f.is_zero() {
                return Err(Error::DivisionByZero);
            }
            scale *= push_factor(&mut out.den, f, *m);
        }
        out.num = out.num.scale(&scale);
        out.cancel_all();
        Ok(out)
    }

    pub fn vars(&self) -> VarSet {
        self.num.vars()
    }

    pub fn numer(&self) -> &SparsePoly {
        &self.num
    }

    pub fn denom_factors(&self) -> &[(SparsePoly, u32)] {
        &self.den
    }

    /// Denominator multiplied out.
    pub fn denom(&self) -> SparsePoly {
        expand_factors(self.vars(), &self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_empty() && self.num.is_one()
    }

    /// Value if this is a constant.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.den.is_empty() {
            self.num.constant_value()
        } else {
            None
        }
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    pub fn neg(&self) -> Self {
        RationalFunction { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars());
        }
        RationalFunction { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, true)
    }

    fn combine(&self, other: &Self, negate: bool) -> Self {
        assert_eq!(self.vars(), other.vars(), "variable set mismatch in addition");
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { other.neg() } else { other.clone() };
        }
        if self.den == other.den {
            let num = if negate { self.num.sub(&other.num) } else { self.num.add(&other.num) };
            let mut out = RationalFunction { num, den: self.den.clone() };
            out.cancel_all();
            return out;
        }
        let (lcm, ca, cb) = lcm_cofactors(&self.den, &other.den);
        let vars = self.vars();
        let a = self.num.mul(&expand_factors(vars, &ca));
        let b = other.num.mul(&expand_factors(vars, &cb));
        let num = if negate { a.sub(&b) } else { a.add(&b) };
        let mut out = RationalFunction { num, den: lcm };
        out.cancel_all();
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.vars(), other.vars(), "variable set mismatch in multiplication");
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.vars());
        }
        // Each operand is already reduced against its own denominator; only the
        // cross pairs can cancel.
        let mut an = self.num.clone();
        let mut bd = other.den.clone();
        cancel_against(&mut an, &mut bd);
        let mut bn = other.num.clone();
        let mut ad = self.den.clone();
        cancel_against(&mut bn, &mut ad);
        let mut den = ad;
        for (f, m) in bd {
            merge_factor(&mut den, f, m);
        }
        den.retain(|(_, m)| *m > 0);
        sort_factors(&mut den);
        RationalFunction { num: an.mul(&bn), den }
    }

    pub fn mul_poly(&self, p: &SparsePoly) -> Self {
        self.mul(&Self::from_poly(p.clone()))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let num = self.denom();
        Self::from_parts(num, self.num.clone())
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        let e = e as u32;
        if e == 0 {
            return Ok(Self::one(self.vars()));
        }
        let num = self.num.pow(e);
        let den = self.den.iter().map(|(f, m)| (f.clone(), m * e)).collect();
        Ok(RationalFunction { num, den })
    }

    /// Substitutes a polynomial for every variable slot; the result lives in `target`.
    pub fn subs(&self, images: &[SparsePoly], target: VarSet) -> Result<Self> {
        let num = subs_poly(&self.num, images, target);
        let mut factors = Vec::with_capacity(self.den.len());
        for (f, m) in &self.den {
            let g = subs_poly(f, images, target);
            if g.is_zero() {
                return Err(Error::Pole(format!("factor {f} vanishes")));
            }
            factors.push((g, *m));
        }
        Self::from_factored(num, &factors)
    }

    /// Exchanges `alpha` and `beta` (or `c_alpha` and `c_beta`).
    pub fn swap_ab(&self) -> Self {
        let v = self.vars();
        let images = [
            SparsePoly::var(v, 0),
            SparsePoly::var(v, 2),
            SparsePoly::var(v, 1),
        ];
        self.subs(&images, v).expect("a variable swap cannot create poles")
    }

    /// Replaces `N` by `N + k`.
    pub fn shift_n(&self, k: i64) -> Self {
        let v = self.vars();
        let images = [
            SparsePoly::var(v, 0).add(&SparsePoly::from_int(v, k)),
            SparsePoly::var(v, 1),
            SparsePoly::var(v, 2),
        ];
        self.subs(&images, v).expect("a shift cannot create poles")
    }

    /// Specializes one slot to a rational value.
    pub fn specialize(&self, slot: usize, value: &Rational) -> Result<Self> {
        let v = self.vars();
        let n = v.names().len();
        let images: Vec<SparsePoly> = (0..n)
            .map(|i| {
                if i == slot {
                    SparsePoly::constant(v, value.clone())
                } else {
                    SparsePoly::var(v, i)
                }
            })
            .collect();
        self.subs(&images, v)
    }

    /// Evaluates at a point; every slot must be given.
    pub fn eval(&self, point: &[Rational; 3]) -> Result<Rational> {
        let mut d = Rational::one();
        for (f, m) in &self.den {
            let x = f.eval(point);
            if x.is_zero() {
                return Err(Error::Pole(format!("factor {f} vanishes")));
            }
            d *= num_traits::pow(x, *m as usize);
        }
        Ok(self.num.eval(point) / d)
    }

    /// Divides out every denominator factor that divides the numerator.
    fn cancel_all(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        cancel_against(&mut self.num, &mut self.den);
        self.den.retain(|(_, m)| *m > 0);
    }

    /// Numerator and denominator over the lcm with `other`, for cross comparison.
    fn over_common(&self, other: &Self) -> (SparsePoly, SparsePoly) {
        let vars = self.vars();
        let (_, ca, cb) = lcm_cofactors(&self.den, &other.den);
        (
            self.num.mul(&expand_factors(vars, &ca)),
            other.num.mul(&expand_factors(vars, &cb)),
        )
    }
}

/// Generic values for the other slots when restricting a factor to a line.
const PROBE: [(i64, i64); 3] = [(37, 11), (53, 13), (71, 17)];
/// Largest constant term tried for a linear factor.
const SHIFT_BOUND: i64 = 64;

fn horner(coeffs: &[Rational], x: &Rational) -> Rational {
    coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

/// Linear polynomials `k . x + c` with `k_i in -2..=2`, `|c| <= SHIFT_BOUND`
/// that vanish on `f` at a probe point of their zero set.
fn linear_candidates(f: &SparsePoly) -> Vec<SparsePoly> {
    let vars = f.vars();
    let n = vars.names().len();
    let probe: Vec<Rational> = PROBE[..n].iter().map(|&(a, b)| Rational::new(a.into(), b.into())).collect();
    let uni: Vec<Vec<Rational>> = (0..n)
        .map(|s| {
            let images: Vec<SparsePoly> = (0..n)
                .map(|t| if t == s { SparsePoly::var(vars, s) } else { SparsePoly::constant(vars, probe[t].clone()) })
                .collect();
            subs_poly(f, &images, vars)
                .coefficients_in(s)
                .iter()
                .map(|c| c.constant_value().unwrap_or_else(Rational::zero))
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let shapes = (0..5usize.pow(n as u32)).map(|mut i| {
        (0..n)
            .map(|_| {
                let k = (i % 5) as i64 - 2;
                i /= 5;
                k
            })
            .collect::<Vec<i64>>()
    });
    for k in shapes {
        let Some(s) = k.iter().position(|&x| x != 0) else { continue };
        if k[s] < 0 {
            continue;
        }
        let rest: Rational = (0..n).filter(|&t| t != s).map(|t| &probe[t] * Rational::from_integer(k[t].into())).sum();
        let ks = Rational::from_integer(k[s].into());
        for c in -SHIFT_BOUND..=SHIFT_BOUND {
            let x0 = -(&rest + Rational::from_integer(c.into())) / &ks;
            if horner(&uni[s], &x0).is_zero() {
                let mut l = SparsePoly::from_int(vars, c);
                for (t, &kt) in k.iter().enumerate() {
                    if kt != 0 {
                        l = l.add(&SparsePoly::var(vars, t).scale(&Rational::from_integer(kt.into())));
                    }
                }
                out.push(l);
            }
        }
    }
    out
}

/// Peels small linear factors off `p`: returns them (primitive, with
/// multiplicity) and the cofactor.
fn split_linear(p: &SparsePoly) -> (Vec<(SparsePoly, u32)>, SparsePoly) {
    let mut found: Vec<(SparsePoly, u32)> = Vec::new();
    let mut rest = p.clone();
    if p.total_degree() <= 1 {
        return (found, rest);
    }
    for l in linear_candidates(p) {
        let (_, _, l) = l.primitive_parts();
        let mut m = 0;
        while rest.total_degree() > 0 {
            match rest.div_exact(&l) {
                Some(q) => {
                    rest = q;
                    m += 1;
                }
                None => break,
            }
        }
        if m > 0 {
            found.push((l, m));
        }
    }
    sort_factors(&mut found);
    (found, rest)
}

impl RationalFunction {
    /// Splits denominator factors into small linear factors where possible.
    /// The value is unchanged; only the factored presentation is refined.
    pub fn split_linear_factors(&self) -> Self {
        if self.den.iter().all(|(f, _)| f.total_degree() <= 1) {
            return self.clone();
        }
        let mut factors: Vec<(SparsePoly, u32)> = Vec::new();
        for (f, m) in &self.den {
            let (lin, rest) = split_linear(f);
            factors.extend(lin.into_iter().map(|(l, k)| (l, k * m)));
            // A constant remainder only rescales the numerator.
            factors.push((rest, *m));
        }
        let out = Self::from_factored(self.num.clone(), &factors).expect("factors of a nonzero denominator");
        debug_assert!(ratfun_eq(&out, self).unwrap_or(false));
        out
    }
}

/// Whether `parts` sum to zero, tested over one common denominator without
/// reducing intermediate sums.
pub fn sum_is_zero(parts: &[RationalFunction]) -> bool {
    let Some(first) = parts.first() else {
        return true;
    };
    let vars = first.vars();
    let mut lcm: Vec<(SparsePoly, u32)> = Vec::new();
    for p in parts.iter().filter(|p| !p.is_zero()) {
        lcm = lcm_cofactors(&lcm, &p.den).0;
    }
    let mut acc = SparsePoly::zero(vars);
    for p in parts.iter().filter(|p| !p.is_zero()) {
        let (_, _, co) = lcm_cofactors(&lcm, &p.den);
        acc = acc.add(&p.num.mul(&expand_factors(vars, &co)));
    }
    acc.is_zero()
}

/// Equality by cross-multiplication.
pub fn ratfun_eq(f: &RationalFunction, g: &RationalFunction) -> Result<bool> {
    if f.vars() != g.vars() {
        return Err(Error::VarSetMismatch(f.vars().name(), g.vars().name()));
    }
    if f.den == g.den {
        return Ok(f.num == g.num);
    }
    let (a, b) = f.over_common(g);
    Ok(a == b)
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        ratfun_eq(self, other).unwrap_or(false)
    }
}

fn sort_factors(den: &mut [(SparsePoly, u32)]) {
    den.sort_by(|a, b| a.0.canonical_cmp(&b.0));
}

fn expand_factors(vars: VarSet, den: &[(SparsePoly, u32)]) -> SparsePoly {
    let mut acc = SparsePoly::one(vars);
    for (f, m) in den {
        acc = acc.mul(&f.pow(*m));
    }
    acc
}

fn merge_factor(den: &mut Vec<(SparsePoly, u32)>, f: SparsePoly, m: u32) {
    if m == 0 {
        return;
    }
    if let Some(e) = den.iter_mut().find(|(g, _)| *g == f) {
        e.1 += m;
    } else {
        den.push((f, m));
    }
}

/// Lcm of two factor lists (max multiplicities) and the cofactors of each side.
#[allow(clippy::type_complexity)]
fn lcm_cofactors(
    a: &[(SparsePoly, u32)],
    b: &[(SparsePoly, u32)],
) -> (Vec<(SparsePoly, u32)>, Vec<(SparsePoly, u32)>, Vec<(SparsePoly, u32)>) {
    let mut lcm: Vec<(SparsePoly, u32)> = Vec::with_capacity(a.len() + b.len());
    let mut ca = Vec::new();
    let mut cb = Vec::new();
    for (f, m) in a {
        match b.iter().find(|(g, _)| g == f) {
            Some((_, n)) => {
                let k = (*m).max(*n);
                lcm.push((f.clone(), k));
                if k > *m {
                    ca.push((f.clone(), k - m));
                }
                if k > *n {
                    cb.push((f.clone(), k - n));
                }
            }
            None => {
                lcm.push((f.clone(), *m));
                cb.push((f.clone(), *m));
            }
        }
    }
    for (g, n) in b {
        if !a.iter().any(|(f, _)| f == g) {
            lcm.push((g.clone(), *n));
            ca.push((g.clone(), *n));
        }
    }
    sort_factors(&mut lcm);
    (lcm, ca, cb)
}

/// Adds `p^m` to a factor list. Returns the scalar the numerator must be
/// multiplied by (the inverse of the scalar content of `p^m`).
fn push_factor(den: &mut Vec<(SparsePoly, u32)>, p: &SparsePoly, m: u32) -> Rational {
    let (unit, mono, prim) = p.primitive_parts();
    let vars = p.vars();
    for (slot, &e) in mono.0.iter().enumerate() {
        if e > 0 {
            insert_split(den, SparsePoly::var(vars, slot), e as u32 * m);
        }
    }
    if !prim.is_constant() {
        insert_split(den, prim, m);
    }
    sort_factors(den);
    num_traits::pow(unit.recip(), m as usize)
}

/// Inserts a primitive factor, splitting it against existing factors when one
/// divides the other.
fn insert_split(den: &mut Vec<(SparsePoly, u32)>, f: SparsePoly, m: u32) {
    if m == 0 || f.is_constant() {
        return;
    }
    for i in 0..den.len() {
        let g = &den[i].0;
        if *g == f {
            den[i].1 += m;
            return;
        }
        let (fd, gd) = (f.total_degree(), g.total_degree());
        if fd > gd && may_divide(g, &f) {
            if let Some(h) = f.div_exact(g) {
                den[i].1 += m;
                let (_, _, h) = h.primitive_parts();
                insert_split(den, h, m);
                return;
            }
        } else if gd > fd && may_divide(&f, g) {
            if let Some(h) = g.div_exact(&f) {
                let (g, n) = den.remove(i);
                drop(g);
                let (_, _, h) = h.primitive_parts();
                insert_split(den, f, m + n);
                insert_split(den, h, n);
                return;
            }
        }
    }
    den.push((f, m));
}

/// Cheap necessary test for `d | p` when `d` is linear in some slot.
fn may_divide(d: &SparsePoly, p: &SparsePoly) -> bool {
    match d.linear_zero_point() {
        Some(pt) => p.eval_mod(&pt).is_none_or(|v| v == 0),
        None => true,
    }
}

/// Cancels factors of `den` against `num` in place (multiplicities may drop to zero).
fn cancel_against(num: &mut SparsePoly, den: &mut [(SparsePoly, u32)]) {
    if num.is_zero() {
        for e in den.iter_mut() {
            e.1 = 0;
        }
        return;
    }
    for (f, m) in den.iter_mut() {
        while *m > 0 {
            if !may_divide(f, num) {
                break;
            }
            match num.div_exact(f) {
                Some(q) => {
                    *num = q;
                    *m -= 1;
                }
                None => break,
            }
        }
    }
}

fn subs_poly(p: &SparsePoly, images: &[SparsePoly], target: VarSet) -> SparsePoly {
    let mut powers: Vec<Vec<SparsePoly>> = images.iter().map(|x| vec![SparsePoly::one(target), x.clone()]).collect();
    let mut acc = SparsePoly::zero(target);
    for (m, c) in p.terms() {
        let mut t = SparsePoly::constant(target, c.clone());
        for (slot, &e) in m.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let e = e as usize;
            let pw = &mut powers[slot];
            while pw.len() <= e {
                let next = pw.last().unwrap().mul(&pw[1]);
                pw.push(next);
            }
            t = t.mul(&pw[e]);
        }
        acc = acc.add(&t);
    }
    acc
}

fn wrap(p: &SparsePoly) -> String {
    if p.needs_parens_as_factor() {
        format!("({p})")
    } else {
        p.to_string()
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.num.is_zero() {
            return write!(f, "0");
        }
        let vars = self.vars();
        let (unit, mono, prim) = self.num.primitive_parts();
        let (lin, prim) = split_linear(&prim);
        let (sign, _, prim) = prim.primitive_parts();
        let neg = unit.is_negative() != sign.is_negative();
        let unit = unit.abs();
        let (p, q) = (unit.numer().clone(), unit.denom().clone());

        let mut top: Vec<String> = Vec::new();
        if !p.is_one() {
            top.push(p.to_string());
        }
        if !mono.is_one() {
            top.extend(fmt_monomial(vars, &mono).split('*').map(str::to_string));
        }
        let has_den = !self.den.is_empty() || !q.is_one();
        for (l, m) in &lin {
            let s = if l.len() > 1 { format!("({l})") } else { wrap(l) };
            top.push(if *m == 1 { s } else { format!("{s}^{m}") });
        }
        if !prim.is_one() {
            if prim.len() > 1 && (neg || has_den || !top.is_empty()) {
                top.push(format!("({prim})"));
            } else {
                top.push(prim.to_string());
            }
        }
        if top.is_empty() {
            top.push("1".to_string());
        }
        if neg {
            write!(f, "-")?;
        }
        write!(f, "{}", top.join("*"))?;
        if !has_den {
            return Ok(());
        }
        let mut bottom: Vec<String> = Vec::new();
        if !q.is_one() {
            bottom.push(fmt_rational(&Rational::from_integer(q)));
        }
        for (g, m) in &self.den {
            let s = if g.len() > 1 { format!("({g})") } else { wrap(g) };
            if *m == 1 {
                bottom.push(s);
            } else {
                bottom.push(format!("{s}^{m}"));
            }
        }
        if bottom.len() == 1 {
            write!(f, "/{}", bottom[0])
        } else {
            write!(f, "/({})", bottom.join("*"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::parse_ratfun;

    fn rf(s: &str) -> RationalFunction {
        parse_ratfun(s, VarSet::Jacobi).unwrap()
    }

    #[test]
    fn reflexive_and_factored_identity() {
        assert!(ratfun_eq(&rf("N/(N+1)"), &rf("N/(N+1)")).unwrap());
        assert!(ratfun_eq(&rf("(N^2-1)/(N-1)"), &rf("N+1")).unwrap());
        assert_eq!(rf("(N^2-1)/(N-1)").to_string(), "N+1");
    }

    #[test]
    fn a0_from_parts() {
        let n = rf("N");
        let b = rf("beta");
        let a = rf("alpha");
        let s = a.add(&b).add(&n.scale(&crate::exact::qi(2)));
        let built = n.mul(&b.add(&n)).div(&s).unwrap();
        assert!(ratfun_eq(&built, &rf("N*(beta+N)/(alpha+beta+2*N)")).unwrap());
        assert_eq!(rf("N*(alpha+N)/(alpha+beta+2*N)").to_string(), "N*(alpha+N)/(alpha+beta+2*N)");
    }

    #[test]
    fn cancellation_and_sign() {
        let x = rf("(alpha-beta)/(beta-alpha)");
        assert_eq!(x.to_string(), "-1");
        let y = rf("1/(N-1) - 1/(N+1)");
        assert_eq!(y.to_string(), "2/((N-1)*(N+1))");
        let z = rf("-(alpha+N)/(2*N)");
        assert_eq!(z.to_string(), "-(alpha+N)/(2*N)");
    }

    #[test]
    fn variable_mismatch() {
        let a = RationalFunction::one(VarSet::Jacobi);
        let b = RationalFunction::one(VarSet::Scaled);
        assert!(matches!(ratfun_eq(&a, &b), Err(Error::VarSetMismatch(..))));
    }

    #[test]
    fn substitution_and_eval() {
        let f = rf("N*(alpha+N)/(alpha+beta+2*N)");
        let v = f.eval(&[crate::exact::qi(1), crate::exact::qi(3), crate::exact::qi(2)]).unwrap();
        assert_eq!(v, crate::exact::q(4, 7));
        assert!(ratfun_eq(&f.swap_ab(), &rf("N*(beta+N)/(alpha+beta+2*N)")).unwrap());
        assert!(ratfun_eq(&f.shift_n(1), &rf("(N+1)*(alpha+N+1)/(alpha+beta+2*N+2)")).unwrap());
        let p = rf("1/(alpha-3)");
        assert!(matches!(p.specialize(1, &crate::exact::qi(3)), Err(Error::Pole(_))));
    }

    #[test]
    fn linear_factors_split_out() {
        let s = "(alpha+beta+2*N)";
        let fused = rf(&format!("(alpha-1)*N/(({s}-1)*{s}*({s}+1))"));
        let expanded = RationalFunction::from_parts(
            fused.numer().clone(),
            fused.denom(),
        )
        .unwrap();
        let split = expanded.split_linear_factors();
        assert_eq!(split.denom_factors().len(), 3);
        assert_eq!(split, fused);
        assert_eq!(split.to_string(), "N*(alpha-1)/((alpha+beta+2*N)*(alpha+beta+2*N-1)*(alpha+beta+2*N+1))");
        let irreducible = rf("1/(N^2+alpha^2+1)");
        assert_eq!(irreducible.split_linear_factors().denom_factors(), irreducible.denom_factors());
    }
}
