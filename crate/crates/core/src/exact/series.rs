//! Truncated multivariate power series with rational-function coefficients.
//!
//! Truncation is by total degree: a series with budget `T` stores (and
//! guarantees) every coefficient of total degree `<= T`. This window is closed
//! under exact division by `w_a - w_b`, which costs one degree.

use std::collections::BTreeMap;

use super::poly::VarSet;
use super::ratfun::RationalFunction;
use crate::error::{Error, Result};

pub type Exps = Vec<u8>;

#[derive(Clone, Debug)]
pub struct TruncatedSeries {
    vars: VarSet,
    nvars: usize,
    budget: u32,
    coeffs: BTreeMap<Exps, RationalFunction>,
}

fn deg(e: &[u8]) -> u32 {
    e.iter().map(|&x| x as u32).sum()
}

impl TruncatedSeries {
    /// The zero series in `nvars` local variables, coefficients over `vars`.
    pub fn zero(vars: VarSet, nvars: usize, budget: u32) -> Self {
        TruncatedSeries { vars, nvars, budget, coeffs: BTreeMap::new() }
    }

    pub fn constant(vars: VarSet, nvars: usize, budget: u32, c: RationalFunction) -> Self {
        let mut s = Self::zero(vars, nvars, budget);
        s.set(vec![0; nvars], c);
        s
    }

    /// `c * w^e` (dropped if beyond the budget).
    pub fn monomial(vars: VarSet, nvars: usize, budget: u32, e: Exps, c: RationalFunction) -> Self {
        assert_eq!(e.len(), nvars);
        let mut s = Self::zero(vars, nvars, budget);
        s.set(e, c);
        s
    }

    /// Series `sum_k c_k w_var^k` in the single variable `var`.
    pub fn univariate(vars: VarSet, nvars: usize, var: usize, budget: u32, coeffs: &[RationalFunction]) -> Self {
        let mut s = Self::zero(vars, nvars, budget);
        for (k, c) in coeffs.iter().enumerate() {
            let mut e = vec![0u8; nvars];
            e[var] = k as u8;
            s.set(e, c.clone());
        }
        s
    }

    pub fn vars(&self) -> VarSet {
        self.vars
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn budget(&self) -> u32 {
        self.budget
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &RationalFunction)> {
        self.coeffs.iter()
    }

    /// Stores a coefficient; zero or over-budget entries are dropped.
    pub fn set(&mut self, e: Exps, c: RationalFunction) {
        if deg(&e) > self.budget || c.is_zero() {
            self.coeffs.remove(&e);
        } else {
            self.coeffs.insert(e, c);
        }
    }

    pub fn coeff(&self, e: &[u8]) -> RationalFunction {
        self.coeffs.get(e).cloned().unwrap_or_else(|| RationalFunction::zero(self.vars))
    }

    pub fn truncate(&self, budget: u32) -> Self {
        let budget = budget.min(self.budget);
        TruncatedSeries {
            vars: self.vars,
            nvars: self.nvars,
            budget,
            coeffs: self.coeffs.iter().filter(|(e, _)| deg(e) <= budget).map(|(e, c)| (e.clone(), c.clone())).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, true)
    }

    fn combine(&self, other: &Self, negate: bool) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.truncate(other.budget);
        for (e, c) in &other.coeffs {
            if deg(e) > out.budget {
                continue;
            }
            let v = match out.coeffs.get(e) {
                Some(a) => if negate { a.sub(c) } else { a.add(c) },
                None => if negate { c.neg() } else { c.clone() },
            };
            out.set(e.clone(), v);
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.coeffs.values_mut() {
            *c = c.neg();
        }
        out
    }

    pub fn scale(&self, k: &RationalFunction) -> Self {
        let mut out = Self::zero(self.vars, self.nvars, self.budget);
        for (e, c) in &self.coeffs {
            out.set(e.clone(), c.mul(k));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let budget = self.budget.min(other.budget);
        let mut acc: BTreeMap<Exps, Vec<RationalFunction>> = BTreeMap::new();
        for (ea, ca) in &self.coeffs {
            let da = deg(ea);
            if da > budget {
                continue;
            }
            for (eb, cb) in &other.coeffs {
                if da + deg(eb) > budget {
                    continue;
                }
                let e: Exps = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                acc.entry(e).or_default().push(ca.mul(cb));
            }
        }
        let mut out = Self::zero(self.vars, self.nvars, budget);
        for (e, parts) in acc {
            out.set(e, sum_all(self.vars, parts));
        }
        out
    }

    /// Multiplies by `(w_a - w_b)`; the exact window grows by one degree.
    pub fn mul_by_difference(&self, a: usize, b: usize) -> Self {
        let mut out = Self::zero(self.vars, self.nvars, self.budget + 1);
        let mut acc: BTreeMap<Exps, RationalFunction> = BTreeMap::new();
        for (e, c) in &self.coeffs {
            let mut ea = e.clone();
            ea[a] += 1;
            let mut eb = e.clone();
            eb[b] += 1;
            let x = acc.remove(&ea).map(|v| v.add(c)).unwrap_or_else(|| c.clone());
            acc.insert(ea, x);
            let y = acc.remove(&eb).map(|v| v.sub(c)).unwrap_or_else(|| c.neg());
            acc.insert(eb, y);
        }
        for (e, c) in acc {
            out.set(e, c);
        }
        out
    }

    /// Sets every variable outside `keep` to zero.
    pub fn restrict(&self, keep: &[usize]) -> Self {
        let mut out = Self::zero(self.vars, self.nvars, self.budget);
        for (e, c) in &self.coeffs {
            if e.iter().enumerate().all(|(i, &x)| x == 0 || keep.contains(&i)) {
                out.set(e.clone(), c.clone());
            }
        }
        out
    }

    /// True when every coefficient within the common window agrees.
    pub fn eq_within(&self, other: &Self, budget: u32) -> bool {
        let keys: std::collections::BTreeSet<&Exps> = self.coeffs.keys().chain(other.coeffs.keys()).collect();
        keys.into_iter().filter(|e| deg(e) <= budget).all(|e| self.coeff(e) == other.coeff(e))
    }
}

/// Sums a batch of rational functions, grouping equal denominators first.
pub(crate) fn sum_all(vars: VarSet, parts: Vec<RationalFunction>) -> RationalFunction {
    match parts.len() {
        0 => return RationalFunction::zero(vars),
        1 => return parts.into_iter().next().unwrap(),
        _ => {}
    }
    let mut groups: Vec<RationalFunction> = Vec::new();
    'outer: for p in parts {
        for g in groups.iter_mut() {
            if g.denom_factors() == p.denom_factors() {
                *g = g.add(&p);
                continue 'outer;
            }
        }
        groups.push(p);
    }
    // Pairwise reduction keeps intermediate lcms small.
    while groups.len() > 1 {
        let mut next = Vec::with_capacity(groups.len().div_ceil(2));
        let mut it = groups.into_iter();
        while let Some(a) = it.next() {
            match it.next() {
                Some(b) => next.push(a.add(&b)),
                None => next.push(a),
            }
        }
        groups = next;
    }
    groups.pop().unwrap()
}

/// Exact quotient `S / (w_a - w_b)` on the trusted window.
///
/// Works per homogeneous component in `(w_a, w_b)` with the remaining exponents
/// fixed: if `P = sum_j p_j x^j y^(d-j)` then `q_j = -sum_{i<=j} p_i` and the
/// remainder is `sum_j p_j`.
pub fn series_divide_by_difference(s: &TruncatedSeries, a: usize, b: usize) -> Result<TruncatedSeries> {
    assert!(a != b && a < s.nvars && b < s.nvars);
    if s.budget == 0 {
        return Err(Error::BudgetUnderflow { needed: 1, available: 0 });
    }
    // (rest exponents, d) -> p_j indexed by j = exponent of w_a
    let mut comps: BTreeMap<(Exps, u8), BTreeMap<u8, &RationalFunction>> = BTreeMap::new();
    for (e, c) in &s.coeffs {
        let mut rest = e.clone();
        rest[a] = 0;
        rest[b] = 0;
        comps.entry((rest, e[a] + e[b])).or_default().insert(e[a], c);
    }
    let mut out = TruncatedSeries::zero(s.vars, s.nvars, s.budget - 1);
    for ((rest, d), p) in comps {
        let mut run = RationalFunction::zero(s.vars);
        for j in 0..=d {
            if let Some(pj) = p.get(&j) {
                run = run.sub(pj);
            }
            if j == d {
                if !run.is_zero() {
                    return Err(Error::NonzeroRemainder { a, b });
                }
            } else {
                let mut e = rest.clone();
                e[a] = j;
                e[b] = d - 1 - j;
                out.set(e, run.clone());
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one() -> RationalFunction {
        RationalFunction::one(VarSet::Jacobi)
    }

    #[test]
    fn divides_difference_of_squares() {
        let v = VarSet::Jacobi;
        let mut s = TruncatedSeries::zero(v, 2, 4);
        s.set(vec![2, 0], one());
        s.set(vec![0, 2], one().neg());
        let q = series_divide_by_difference(&s, 0, 1).unwrap();
        assert_eq!(q.budget(), 3);
        assert_eq!(q.len(), 2);
        assert!(q.coeff(&[1, 0]).is_one());
        assert!(q.coeff(&[0, 1]).is_one());

        let mut t = TruncatedSeries::zero(v, 2, 2);
        t.set(vec![1, 0], one());
        t.set(vec![0, 1], one().neg());
        let q = series_divide_by_difference(&t, 0, 1).unwrap();
        assert_eq!(q.len(), 1);
        assert!(q.coeff(&[0, 0]).is_one());
    }

    #[test]
    fn rejects_nondivisible() {
        let v = VarSet::Jacobi;
        let mut s = TruncatedSeries::zero(v, 2, 3);
        s.set(vec![1, 0], one());
        assert!(matches!(series_divide_by_difference(&s, 0, 1), Err(Error::NonzeroRemainder { .. })));
        let z = TruncatedSeries::zero(v, 2, 0);
        assert!(matches!(series_divide_by_difference(&z, 0, 1), Err(Error::BudgetUnderflow { .. })));
    }
}
