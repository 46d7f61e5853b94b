//! Expansion in descending powers of `N` after `alpha = (c_alpha - 1) N`,
//! `beta = (c_beta - 1) N`.

use super::poly::{SparsePoly, VarSet, SLOT_A, SLOT_B, SLOT_N};
use super::ratfun::RationalFunction;
use super::series::sum_all;
use super::Rational;
use crate::error::{Error, Result};

/// `sum_{i=0}^{depth} coeffs[i] * N^(e_max - i)` with coefficients in `(c_alpha, c_beta)`.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentInN {
    e_max: i64,
    coeffs: Vec<RationalFunction>,
}

impl LaurentInN {
    pub fn zero(depth: usize) -> Self {
        LaurentInN { e_max: 0, coeffs: vec![RationalFunction::zero(VarSet::Scaled); depth + 1] }
    }

    pub fn e_max(&self) -> i64 {
        self.e_max
    }

    /// Lowest exponent computed.
    pub fn e_min(&self) -> i64 {
        self.e_max - self.coeffs.len() as i64 + 1
    }

    pub fn coeffs(&self) -> &[RationalFunction] {
        &self.coeffs
    }

    /// Coefficient of `N^e`; `None` below the computed depth.
    pub fn coeff(&self, e: i64) -> Option<RationalFunction> {
        if e > self.e_max {
            return Some(RationalFunction::zero(VarSet::Scaled));
        }
        if e < self.e_min() {
            return None;
        }
        Some(self.coeffs[(self.e_max - e) as usize].clone())
    }

    /// Multiplies by `c * N^k`.
    pub fn mul_monomial(&self, c: &Rational, k: i64) -> Self {
        LaurentInN { e_max: self.e_max + k, coeffs: self.coeffs.iter().map(|x| x.scale(c)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

fn scaled_images() -> [SparsePoly; 3] {
    let v = VarSet::Scaled;
    let n = SparsePoly::var(v, SLOT_N);
    let one = SparsePoly::one(v);
    [
        n.clone(),
        SparsePoly::var(v, SLOT_A).sub(&one).mul(&n),
        SparsePoly::var(v, SLOT_B).sub(&one).mul(&n),
    ]
}

/// Substitutes the rescaling into a `{N, alpha, beta}` polynomial.
pub fn rescale_poly(p: &SparsePoly) -> SparsePoly {
    let images = scaled_images();
    let mut acc = SparsePoly::zero(VarSet::Scaled);
    for (m, c) in p.terms() {
        let mut t = SparsePoly::constant(VarSet::Scaled, c.clone());
        for (slot, &e) in m.0.iter().enumerate() {
            if e > 0 {
                t = t.mul(&images[slot].pow(e as u32));
            }
        }
        acc = acc.add(&t);
    }
    acc
}

/// Coefficients in `N` of a scaled polynomial, highest power first.
fn descending_in_n(p: &SparsePoly) -> Vec<RationalFunction> {
    let mut cs = p.coefficients_in(SLOT_N);
    while cs.last().is_some_and(|c| c.is_zero()) {
        cs.pop();
    }
    cs.into_iter().rev().map(RationalFunction::from_poly).collect()
}

/// First `len` coefficients of `1 / (1 + sum_{j>=1} u_j x^j)` where `u_j = lead^-1 * c_j`.
fn inverse_series(desc: &[RationalFunction], len: usize) -> Result<Vec<RationalFunction>> {
    let lead_inv = desc[0].inv()?;
    let u: Vec<RationalFunction> = (0..len).map(|j| if j < desc.len() { desc[j].mul(&lead_inv) } else { RationalFunction::zero(VarSet::Scaled) }).collect();
    let mut inv = vec![RationalFunction::one(VarSet::Scaled)];
    for k in 1..len {
        let parts = (1..=k).filter(|&j| !u[j].is_zero()).map(|j| u[j].mul(&inv[k - j]).neg()).collect();
        inv.push(sum_all(VarSet::Scaled, parts));
    }
    Ok(inv)
}

fn mul_trunc(a: &[RationalFunction], b: &[RationalFunction], len: usize) -> Vec<RationalFunction> {
    (0..len)
        .map(|k| {
            let parts = (0..=k)
                .filter(|&i| i < a.len() && k - i < b.len() && !a[i].is_zero() && !b[k - i].is_zero())
                .map(|i| a[i].mul(&b[k - i]))
                .collect();
            sum_all(VarSet::Scaled, parts)
        })
        .collect()
}

/// Expands `f` to `depth` orders below its leading power of `N`.
pub fn laurent_expand(f: &RationalFunction, depth: usize) -> Result<LaurentInN> {
    if f.vars() != VarSet::Jacobi {
        return Err(Error::VarSetMismatch(f.vars().name(), VarSet::Jacobi.name()));
    }
    let len = depth + 1;
    if f.is_zero() {
        return Ok(LaurentInN::zero(depth));
    }
    let num = descending_in_n(&rescale_poly(f.numer()));
    let mut e_max = num.len() as i64 - 1;
    let mut acc: Vec<RationalFunction> = num.iter().take(len).cloned().collect();
    let mut scale = RationalFunction::one(VarSet::Scaled);
    for (g, m) in f.denom_factors() {
        let desc = descending_in_n(&rescale_poly(g));
        if desc.is_empty() || desc[0].is_zero() {
            return Err(Error::DegenerateLeadingCoefficient);
        }
        e_max -= (desc.len() as i64 - 1) * *m as i64;
        let inv = inverse_series(&desc, len)?;
        let lead_inv = desc[0].inv()?;
        for _ in 0..*m {
            acc = mul_trunc(&acc, &inv, len);
            scale = scale.mul(&lead_inv);
        }
    }
    let mut coeffs: Vec<RationalFunction> = acc.iter().map(|c| c.mul(&scale).split_linear_factors()).collect();
    coeffs.resize(len, RationalFunction::zero(VarSet::Scaled));
    Ok(LaurentInN { e_max, coeffs })
}

/// The scaled form of `f` itself, as a rational function of `(N, c_alpha, c_beta)`.
pub fn rescale(f: &RationalFunction) -> Result<RationalFunction> {
    f.subs(&scaled_images(), VarSet::Scaled)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::parse::{parse_ratfun, parse_ratfun_auto};

    #[test]
    fn monomial_and_simple_ratio() {
        let f = parse_ratfun("N", VarSet::Jacobi).unwrap();
        let l = laurent_expand(&f, 2).unwrap();
        assert_eq!(l.e_max(), 1);
        assert!(l.coeff(1).unwrap().is_one());
        assert!(l.coeff(0).unwrap().is_zero());

        let g = parse_ratfun("N/(alpha+beta+2*N)", VarSet::Jacobi).unwrap();
        let l = laurent_expand(&g, 2).unwrap();
        assert_eq!(l.e_max(), 0);
        assert_eq!(l.coeff(0).unwrap(), parse_ratfun_auto("1/(c_alpha+c_beta)").unwrap());
        assert!(l.coeff(-1).unwrap().is_zero());
        assert!(l.coeff(-3).is_none());
    }

    #[test]
    fn geometric_tail() {
        // N/(alpha+beta+2N-1) = 1/(c-1/N) with c = c_alpha+c_beta
        let g = parse_ratfun("N/(alpha+beta+2*N-1)", VarSet::Jacobi).unwrap();
        let l = laurent_expand(&g, 3).unwrap();
        for k in 0..=3 {
            let want = parse_ratfun_auto(&format!("1/(c_alpha+c_beta)^{}", k + 1)).unwrap();
            assert_eq!(l.coeff(-(k as i64)).unwrap(), want, "k={k}");
        }
    }
}
