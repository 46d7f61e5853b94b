//! Group algebra of a small symmetric group with coefficients in `Q[eps]`,
//! and the Jucys–Murphy product expansion.

use std::collections::HashMap;

use super::partition::{partitions_of, Partition};
use super::permutation::{conjugacy_class, Permutation};
use crate::error::{Error, Result};
use crate::exact::{Monomial, SparsePoly, VarSet};

/// Largest `n` accepted by [`yjm_product_expansion`].
pub const YJM_MAX_N: usize = 5;

#[derive(Clone, Debug, PartialEq)]
pub struct GroupAlgebraElement {
    n: usize,
    coeffs: HashMap<Permutation, SparsePoly>,
}

fn eps_pow(k: u16) -> SparsePoly {
    SparsePoly::monomial(VarSet::Eps, Monomial([k, 0, 0]), crate::exact::qi(1))
}

impl GroupAlgebraElement {
    pub fn zero(n: usize) -> Self {
        GroupAlgebraElement { n, coeffs: HashMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        Self::term(Permutation::identity(n), SparsePoly::one(VarSet::Eps))
    }

    pub fn term(p: Permutation, c: SparsePoly) -> Self {
        let mut out = Self::zero(p.n());
        out.add_term(p, c);
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeff(&self, p: &Permutation) -> SparsePoly {
        self.coeffs.get(p).cloned().unwrap_or_else(|| SparsePoly::zero(VarSet::Eps))
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn add_term(&mut self, p: Permutation, c: SparsePoly) {
        let v = match self.coeffs.remove(&p) {
            Some(old) => old.add(&c),
            None => c,
        };
        if !v.is_zero() {
            self.coeffs.insert(p, v);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, c) in &other.coeffs {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.n);
        for (p, a) in &self.coeffs {
            for (q, b) in &other.coeffs {
                out.add_term(p.compose(q), a.mul(b));
            }
        }
        out
    }

    /// Multiplies every coefficient by a polynomial in `eps`.
    pub fn scale(&self, c: &SparsePoly) -> Self {
        let mut out = Self::zero(self.n);
        for (p, a) in &self.coeffs {
            out.add_term(p.clone(), a.mul(c));
        }
        out
    }
}

/// Jucys–Murphy element `J_a = sum_{b < a} (b a)` with zero-based `a`.
pub fn jucys_murphy(n: usize, a: usize) -> GroupAlgebraElement {
    let mut out = GroupAlgebraElement::zero(n);
    for b in 0..a {
        out.add_term(Permutation::transposition(n, b, a), SparsePoly::one(VarSet::Eps));
    }
    out
}

/// Class sum `C_lambda`.
pub fn class_sum(lambda: &Partition, n: usize) -> Result<GroupAlgebraElement> {
    let mut out = GroupAlgebraElement::zero(n);
    for p in conjugacy_class(lambda, n)? {
        out.add_term(p, SparsePoly::one(VarSet::Eps));
    }
    Ok(out)
}

/// `prod_{a=1}^n (1 + eps J_a)` expanded in the group algebra.
pub fn yjm_product_expansion(n: usize) -> Result<GroupAlgebraElement> {
    if n > YJM_MAX_N {
        return Err(Error::GuardExceeded(format!("yjm expansion needs n <= {YJM_MAX_N}, got {n}")));
    }
    let mut acc = GroupAlgebraElement::identity(n);
    for a in 0..n {
        let f = GroupAlgebraElement::identity(n).add(&jucys_murphy(n, a).scale(&eps_pow(1)));
        acc = acc.mul(&f);
    }
    Ok(acc)
}

/// `sum_{lambda |- n} eps^{n - l(lambda)} C_lambda`.
pub fn class_sum_expansion(n: usize) -> Result<GroupAlgebraElement> {
    let mut out = GroupAlgebraElement::zero(n);
    for lambda in partitions_of(n as u32) {
        let e = (n - lambda.length()) as u16;
        out = out.add(&class_sum(&lambda, n)?.scale(&eps_pow(e)));
    }
    Ok(out)
}
