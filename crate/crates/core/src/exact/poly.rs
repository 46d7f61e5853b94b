//! Sparse multivariate polynomials over the rationals.
//!
//! Every polynomial lives in one of a few fixed variable sets with at most
//! three slots. Monomials are ordered graded-lexicographically; within a
//! degree the slot priority is `alpha > beta > N` (resp. `c_alpha > c_beta > N`),
//! so the canonical print order of `2*N + alpha + beta` is `alpha+beta+2*N`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Rational;

/// Variable set a polynomial is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VarSet {
    /// `(N, alpha, beta)`
    Jacobi,
    /// `(N, c_alpha, c_beta)` after the rescaling `alpha = (c_alpha - 1) N`.
    Scaled,
    /// A single formal variable `eps`.
    Eps,
}

/// Slot index of `N` in [`VarSet::Jacobi`] and [`VarSet::Scaled`].
pub const SLOT_N: usize = 0;
/// Slot index of `alpha` (resp. `c_alpha`).
pub const SLOT_A: usize = 1;
/// Slot index of `beta` (resp. `c_beta`).
pub const SLOT_B: usize = 2;

/// Slot priority used by the monomial order.
const PRIORITY: [usize; 3] = [SLOT_A, SLOT_B, SLOT_N];

impl VarSet {
    pub fn names(self) -> &'static [&'static str] {
        match self {
            VarSet::Jacobi => &["N", "alpha", "beta"],
            VarSet::Scaled => &["N", "c_alpha", "c_beta"],
            VarSet::Eps => &["eps"],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            VarSet::Jacobi => "{N, alpha, beta}",
            VarSet::Scaled => "{N, c_alpha, c_beta}",
            VarSet::Eps => "{eps}",
        }
    }

    pub fn slot_of(self, name: &str) -> Option<usize> {
        self.names().iter().position(|n| *n == name)
    }

    /// Variable set containing the given name, if any.
    pub fn containing(name: &str) -> Option<VarSet> {
        [VarSet::Jacobi, VarSet::Scaled, VarSet::Eps]
            .into_iter()
            .find(|v| v.slot_of(name).is_some() && !(name == "N" && *v != VarSet::Jacobi))
    }
}

/// Exponent vector over the three slots.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(pub [u16; 3]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0, 0, 0]);

    pub fn var(slot: usize) -> Self {
        let mut e = [0; 3];
        e[slot] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0, 0, 0]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial([
            self.0[0] + other.0[0],
            self.0[1] + other.0[1],
            self.0[2] + other.0[2],
        ])
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        (0..3).all(|i| self.0[i] <= other.0[i])
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial([
            other.0[0] - self.0[0],
            other.0[1] - self.0[1],
            other.0[2] - self.0[2],
        ])
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial([
            self.0[0].min(other.0[0]),
            self.0[1].min(other.0[1]),
            self.0[2].min(other.0[2]),
        ])
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for &s in &PRIORITY {
                match self.0[s].cmp(&other.0[s]) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial; terms sorted ascending by [`Monomial`] order, no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparsePoly {
    vars: VarSet,
    terms: Vec<(Monomial, Rational)>,
}

impl SparsePoly {
    pub fn zero(vars: VarSet) -> Self {
        SparsePoly { vars, terms: Vec::new() }
    }

    pub fn one(vars: VarSet) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn constant(vars: VarSet, c: Rational) -> Self {
        if c.is_zero() {
            return Self::zero(vars);
        }
        SparsePoly { vars, terms: vec![(Monomial::ONE, c)] }
    }

    pub fn from_int(vars: VarSet, c: i64) -> Self {
        Self::constant(vars, Rational::from_integer(c.into()))
    }

    pub fn var(vars: VarSet, slot: usize) -> Self {
        assert!(slot < vars.names().len(), "slot {slot} out of range for {}", vars.name());
        SparsePoly { vars, terms: vec![(Monomial::var(slot), Rational::one())] }
    }

    pub fn monomial(vars: VarSet, m: Monomial, c: Rational) -> Self {
        if c.is_zero() {
            return Self::zero(vars);
        }
        SparsePoly { vars, terms: vec![(m, c)] }
    }

    /// Builds a polynomial from unsorted terms, combining duplicates.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(vars: VarSet, it: I) -> Self {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in it {
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by_key(|t| t.0);
        SparsePoly { vars, terms }
    }

    pub fn vars(&self) -> VarSet {
        self.vars
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// Constant value if the polynomial is constant.
    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<&(Monomial, Rational)> {
        self.terms.last()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.last().map(|t| t.0.degree()).unwrap_or(0)
    }

    pub fn degree_in(&self, slot: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.0[slot] as u32).max().unwrap_or(0)
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms
            .binary_search_by(|t| t.0.cmp(m))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| Rational::zero())
    }

    /// Reinterprets the same exponent vectors in another variable set.
    pub fn with_vars(mut self, vars: VarSet) -> Self {
        self.vars = vars;
        self
    }

    pub fn neg(&self) -> Self {
        SparsePoly {
            vars: self.vars,
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars);
        }
        SparsePoly {
            vars: self.vars,
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars);
        }
        // Multiplying by a monomial preserves the order.
        SparsePoly {
            vars: self.vars,
            terms: self.terms.iter().map(|(x, y)| (x.mul(m), y * c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, true)
    }

    fn combine(&self, other: &Self, negate: bool) -> Self {
        debug_assert_eq!(self.vars, other.vars);
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            let c = if negate { -&t.1 } else { t.1.clone() };
            out.push((t.0, c));
        }
        SparsePoly { vars: self.vars, terms: out }
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.vars, other.vars);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.vars);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_term(m, c);
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_term(m, c);
        }
        let mut acc: HashMap<Monomial, Rational> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let p = ca * cb;
                match acc.get_mut(&m) {
                    Some(v) => *v += p,
                    None => {
                        acc.insert(m, p);
                    }
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by_key(|t| t.0);
        SparsePoly { vars: self.vars, terms }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.vars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Positive rational `c` such that `self / c` has coprime integer coefficients.
    pub fn content(&self) -> Rational {
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for (_, c) in &self.terms {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        if num.is_zero() {
            return Rational::one();
        }
        Rational::new(num, den)
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.iter();
        let Some((first, _)) = it.next() else {
            return Monomial::ONE;
        };
        it.fold(*first, |g, (m, _)| g.gcd(m))
    }

    /// Divides by a monomial known to divide every term.
    pub fn div_monomial(&self, m: &Monomial) -> Self {
        // Dividing every term by a common monomial does not preserve grlex order in
        // general, so re-sort.
        let mut terms: Vec<_> = self.terms.iter().map(|(x, c)| (m.quotient_of(x), c.clone())).collect();
        terms.sort_by_key(|t| t.0);
        SparsePoly { vars: self.vars, terms }
    }

    /// Splits `self = unit * mono * prim` with `prim` having coprime integer
    /// coefficients and a positive leading coefficient.
    pub fn primitive_parts(&self) -> (Rational, Monomial, SparsePoly) {
        if self.is_zero() {
            return (Rational::zero(), Monomial::ONE, self.clone());
        }
        let mono = self.monomial_content();
        let mut unit = self.content();
        if self.leading().unwrap().1.is_negative() {
            unit = -unit;
        }
        let inv = unit.recip();
        let prim = if mono.is_one() { self.scale(&inv) } else { self.div_monomial(&mono).scale(&inv) };
        (unit, mono, prim)
    }

    /// Exact division; `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero(self.vars));
        }
        let (lm, lc) = d.leading().unwrap().clone();
        if d.terms.len() == 1 {
            let inv = lc.recip();
            let mut terms = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                if !lm.divides(m) {
                    return None;
                }
                terms.push((lm.quotient_of(m), c * &inv));
            }
            terms.sort_by_key(|t| t.0);
            return Some(SparsePoly { vars: self.vars, terms });
        }
        if d.total_degree() > self.total_degree() {
            return None;
        }
        let inv = lc.recip();
        let mut rem = self.clone();
        let mut quot: Vec<(Monomial, Rational)> = Vec::new();
        while let Some((rm, rc)) = rem.leading().cloned() {
            if !lm.divides(&rm) {
                return None;
            }
            let qm = lm.quotient_of(&rm);
            let qc = rc * &inv;
            rem = rem.sub(&d.mul_term(&qm, &qc));
            quot.push((qm, qc));
        }
        quot.reverse();
        Some(SparsePoly { vars: self.vars, terms: quot })
    }

    /// Coefficients as a polynomial in the given slot: entry `k` multiplies `x^k`.
    pub fn coefficients_in(&self, slot: usize) -> Vec<SparsePoly> {
        let deg = self.degree_in(slot) as usize;
        let mut buckets: Vec<Vec<(Monomial, Rational)>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            let k = m.0[slot] as usize;
            let mut r = *m;
            r.0[slot] = 0;
            buckets[k].push((r, c.clone()));
        }
        buckets
            .into_iter()
            .map(|mut t| {
                t.sort_by_key(|t| t.0);
                SparsePoly { vars: self.vars, terms: t }
            })
            .collect()
    }

    /// Evaluates at rational values for every slot.
    pub fn eval(&self, point: &[Rational; 3]) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for s in 0..3 {
                if m.0[s] > 0 {
                    t *= num_traits::pow(point[s].clone(), m.0[s] as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// Value modulo the Mersenne prime `2^61 - 1`, `None` if a coefficient
    /// denominator vanishes there.
    pub(crate) fn eval_mod(&self, point: &[u64; 3]) -> Option<u64> {
        let mut acc = 0u64;
        for (m, c) in &self.terms {
            let mut t = rat_mod(c)?;
            for s in 0..3 {
                if m.0[s] > 0 {
                    t = mulmod(t, powmod(point[s], m.0[s] as u64));
                }
            }
            acc = addmod(acc, t);
        }
        Some(acc)
    }

    /// If the polynomial has the form `c * x_slot + h` with `h` free of `x_slot`,
    /// returns a point (mod p) on its zero set.
    pub(crate) fn linear_zero_point(&self) -> Option<[u64; 3]> {
        const SEEDS: [u64; 3] = [0x0f1e_2d3c_4b5a_6978, 0x1234_5678_9abc_def1, 0x0aaa_bbbb_cccc_dddd];
        for slot in 0..3 {
            let with: Vec<_> = self.terms.iter().filter(|(m, _)| m.0[slot] > 0).collect();
            if with.len() != 1 || with[0].0 != Monomial::var(slot) {
                continue;
            }
            let c = rat_mod(&with[0].1)?;
            if c == 0 {
                continue;
            }
            let mut pt = [SEEDS[0] % MODP, SEEDS[1] % MODP, SEEDS[2] % MODP];
            pt[slot] = 0;
            let rest = SparsePoly {
                vars: self.vars,
                terms: self.terms.iter().filter(|(m, _)| m.0[slot] == 0).cloned().collect(),
            };
            let h = rest.eval_mod(&pt)?;
            // c * x + h = 0  =>  x = -h / c
            pt[slot] = mulmod(MODP - h % MODP, invmod(c));
            if pt[slot] == MODP {
                pt[slot] = 0;
            }
            return Some(pt);
        }
        None
    }

    /// Degree-by-degree comparison used to sort factors canonically.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| {
                for (a, b) in self.terms.iter().rev().zip(other.terms.iter().rev()) {
                    let o = a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1));
                    if o != Ordering::Equal {
                        return o;
                    }
                }
                self.terms.len().cmp(&other.terms.len())
            })
    }

    /// Number of terms a printed form needs parentheses for when used as a factor.
    pub(crate) fn needs_parens_as_factor(&self) -> bool {
        match self.terms.as_slice() {
            [] => false,
            [(m, c)] => !(c.is_one() || (m.is_one() && !c.is_negative() && c.is_integer())),
            _ => true,
        }
    }
}

pub(crate) const MODP: u64 = (1u64 << 61) - 1;

pub(crate) fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % MODP as u128) as u64
}

fn addmod(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= MODP {
        s - MODP
    } else {
        s
    }
}

fn powmod(mut b: u64, mut e: u64) -> u64 {
    let mut r = 1u64;
    b %= MODP;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, b);
        }
        b = mulmod(b, b);
        e >>= 1;
    }
    r
}

fn invmod(a: u64) -> u64 {
    powmod(a, MODP - 2)
}

fn int_mod(x: &BigInt) -> u64 {
    if let Some(v) = x.to_i64() {
        let r = v.rem_euclid(MODP as i64);
        return r as u64;
    }
    let m = BigInt::from(MODP);
    x.mod_floor(&m).to_u64().unwrap()
}

fn rat_mod(r: &Rational) -> Option<u64> {
    let d = int_mod(r.denom());
    if d == 0 {
        return None;
    }
    Some(mulmod(int_mod(r.numer()), invmod(d)))
}

pub(crate) fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn fmt_monomial(vars: VarSet, m: &Monomial) -> String {
    let names = vars.names();
    let mut parts = Vec::new();
    for &s in &PRIORITY {
        if s >= names.len() {
            continue;
        }
        match m.0[s] {
            0 => {}
            1 => parts.push(names[s].to_string()),
            e => parts.push(format!("{}^{}", names[s], e)),
        }
    }
    parts.join("*")
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if neg {
                write!(f, "-")?;
            } else if i > 0 {
                write!(f, "+")?;
            }
            if m.is_one() {
                write!(f, "{}", fmt_rational(&a))?;
            } else if a.is_one() {
                write!(f, "{}", fmt_monomial(self.vars, m))?;
            } else {
                write!(f, "{}*{}", fmt_rational(&a), fmt_monomial(self.vars, m))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(vars: VarSet, terms: &[([u16; 3], i64)]) -> SparsePoly {
        SparsePoly::from_terms(
            vars,
            terms.iter().map(|(e, c)| (Monomial(*e), Rational::from_integer((*c).into()))),
        )
    }

    #[test]
    fn canonical_print_order() {
        let s = p(VarSet::Jacobi, &[([1, 0, 0], 2), ([0, 1, 0], 1), ([0, 0, 1], 1), ([0, 0, 0], -1)]);
        assert_eq!(s.to_string(), "alpha+beta+2*N-1");
        assert_eq!(SparsePoly::zero(VarSet::Jacobi).to_string(), "0");
    }

    #[test]
    fn exact_division() {
        // (N^2 - 1) / (N - 1) = N + 1
        let a = p(VarSet::Jacobi, &[([2, 0, 0], 1), ([0, 0, 0], -1)]);
        let b = p(VarSet::Jacobi, &[([1, 0, 0], 1), ([0, 0, 0], -1)]);
        let q = a.div_exact(&b).unwrap();
        assert_eq!(q.to_string(), "N+1");
        let c = p(VarSet::Jacobi, &[([1, 0, 0], 1), ([0, 1, 0], 1)]);
        assert!(a.div_exact(&c).is_none());
    }

    #[test]
    fn primitive_parts_split() {
        // -6 N^2 alpha - 4 N alpha = -2 * N alpha * (3N + 2)
        let a = p(VarSet::Jacobi, &[([2, 1, 0], -6), ([1, 1, 0], -4)]);
        let (u, m, prim) = a.primitive_parts();
        assert_eq!(u, Rational::from_integer((-2).into()));
        assert_eq!(m, Monomial([1, 1, 0]));
        assert_eq!(prim.to_string(), "3*N+2");
    }

    #[test]
    fn modular_zero_point_detects_divisibility() {
        let f = p(VarSet::Jacobi, &[([1, 0, 0], 2), ([0, 1, 0], 1), ([0, 0, 0], 3)]);
        let g = p(VarSet::Jacobi, &[([0, 0, 1], 1), ([0, 0, 0], 5)]);
        let pt = f.linear_zero_point().unwrap();
        assert_eq!(f.eval_mod(&pt), Some(0));
        assert_eq!(f.mul(&g).eval_mod(&pt), Some(0));
        assert_ne!(g.eval_mod(&pt), Some(0));
    }
}
