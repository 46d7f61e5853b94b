//! The `1/N` expansion of rescaled correlators, matched genus by genus
//! against weighted sums of triple monotone Hurwitz numbers; and the
//! Laguerre limit `beta -> infinity`.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::{laurent_expand, ratfun_eq, LaurentInN, Rational, RationalFunction, SparsePoly, VarSet, SLOT_B};
use crate::hurwitz::{hurwitz_table, min_genus, Guards};
use crate::jacobi::{connected_correlator, correlator, Sign};
use crate::symgroup::partition::factorial;
use crate::symgroup::Partition;

/// Both sides of the comparison at one genus, kept verbatim.
#[derive(Clone, Debug, PartialEq)]
pub struct GenusRecord {
    pub g: i64,
    /// Coefficient of `N^(2-2g)` in the rescaled correlator side.
    pub correlator_side: RationalFunction,
    pub hurwitz_side: RationalFunction,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExpansionReport {
    pub lambda: Partition,
    pub sign: Sign,
    pub connected: bool,
    pub g_max: i64,
    pub records: Vec<GenusRecord>,
    /// Odd exponents whose coefficient failed to vanish.
    pub odd_failures: Vec<i64>,
}

impl ExpansionReport {
    pub fn passed(&self) -> bool {
        self.odd_failures.is_empty() && self.records.iter().all(|r| r.equal)
    }
}

fn scaled(s: &str) -> RationalFunction {
    crate::exact::parse_ratfun(s, VarSet::Scaled).expect("internal expression")
}

/// `(-1)^|lambda| |lambda|! / z_lambda`.
fn prefactor(lambda: &Partition) -> Rational {
    let mut c = Rational::new(factorial(lambda.weight()), lambda.z());
    if lambda.weight() % 2 == 1 {
        c = -c;
    }
    c
}

fn lhs_function(lambda: &Partition, sign: Sign, connected: bool) -> Result<RationalFunction> {
    if connected {
        connected_correlator(lambda, sign)
    } else {
        correlator(lambda, sign)
    }
}

/// `(-1)^|lambda| N^l(lambda) |lambda|!/z_lambda <...>` rescaled and expanded down to `N^(2-2 g_max)`.
pub fn correlator_side(lambda: &Partition, sign: Sign, g_max: i64, connected: bool) -> Result<LaurentInN> {
    let f = lhs_function(lambda, sign, connected)?;
    let lead = laurent_expand(&f, 0)?.e_max() + lambda.length() as i64;
    let depth = (lead - (2 - 2 * g_max)).max(0) as usize;
    Ok(laurent_expand(&f, depth)?.mul_monomial(&prefactor(lambda), lambda.length() as i64))
}

/// `sum_{mu, nu} weight(mu, nu) h_g(lambda, mu, nu)` in `(c_alpha, c_beta)`.
pub fn hurwitz_side(
    lambda: &Partition,
    sign: Sign,
    g: i64,
    connected: bool,
    guards: &Guards,
) -> Result<RationalFunction> {
    let (top, bottom) = match sign {
        Sign::Positive => (scaled("c_alpha"), scaled("-c_alpha-c_beta")),
        Sign::Negative => (scaled("1-c_alpha-c_beta"), scaled("c_alpha-1")),
    };
    let table = hurwitz_table(lambda, g, connected, guards)?;
    let mut acc = RationalFunction::zero(VarSet::Scaled);
    for ((mu, nu), h) in table {
        if h == 0 {
            continue;
        }
        let e = (mu.length() + nu.length() + lambda.length()) as i32 + 2 * g as i32 - 2;
        let w = top.pow(nu.length() as i32)?.div(&bottom.pow(e)?)?;
        acc = acc.add(&w.scale(&Rational::from_integer(h.into())));
    }
    Ok(acc)
}

/// Compares both sides at every genus from the lowest with a possibly nonzero
/// term up to `g_max`, and checks the odd powers of `N` in between.
pub fn verify_theorem(
    lambda: &Partition,
    sign: Sign,
    g_max: i64,
    connected: bool,
    guards: &Guards,
) -> Result<ExpansionReport> {
    let lhs = correlator_side(lambda, sign, g_max, connected)?;
    let n = lambda.weight();
    let ones = Partition::ones(n);
    // Connected covers have nonnegative genus, so only disconnected counts reach below zero.
    let mut g_hurwitz = min_genus(lambda, &ones, &ones);
    if connected {
        g_hurwitz = g_hurwitz.max(0);
    }
    let g_lhs = (2 - lhs.e_max() + 1).div_euclid(2);
    let g_lo = g_hurwitz.min(g_lhs);
    let zero = RationalFunction::zero(VarSet::Scaled);
    let records: Result<Vec<GenusRecord>> = (g_lo..=g_max)
        .into_par_iter()
        .map(|g| {
            let left = lhs.coeff(2 - 2 * g).unwrap_or_else(|| zero.clone());
            let right = hurwitz_side(lambda, sign, g, connected, guards)?;
            let equal = ratfun_eq(&left, &right)?;
            Ok(GenusRecord { g, correlator_side: left, hurwitz_side: right, equal })
        })
        .collect();
    let odd_failures = (2 - 2 * g_max..=lhs.e_max())
        .filter(|e| e % 2 != 0)
        .filter(|&e| lhs.coeff(e).is_some_and(|c| !c.is_zero()))
        .collect();
    Ok(ExpansionReport { lambda: lambda.clone(), sign, connected, g_max, records: records?, odd_failures })
}

fn leading_in_b(p: &SparsePoly) -> (usize, SparsePoly) {
    let cs = p.coefficients_in(SLOT_B);
    let d = cs.len() - 1;
    (d, cs.into_iter().next_back().expect("nonempty coefficient list"))
}

/// `lim_{beta -> infinity} beta^|lambda| <prod tr X^lambda_j>` for positive parts.
pub fn laguerre_limit(lambda: &Partition) -> Result<RationalFunction> {
    let f = correlator(lambda, Sign::Positive)?;
    if f.is_zero() {
        return Ok(f);
    }
    let (num_deg, num_lead) = leading_in_b(f.numer());
    let num_deg = num_deg + lambda.weight() as usize;
    let mut den_deg = 0;
    let mut den_lead = Vec::new();
    for (g, m) in f.denom_factors() {
        let (d, lead) = leading_in_b(g);
        den_deg += d * *m as usize;
        den_lead.push((lead, *m));
    }
    if num_deg > den_deg {
        return Err(Error::InfiniteLimit { num: num_deg, den: den_deg });
    }
    if num_deg < den_deg {
        return Ok(RationalFunction::zero(VarSet::Jacobi));
    }
    let mut den = SparsePoly::one(VarSet::Jacobi);
    for (lead, m) in den_lead {
        den = den.mul(&lead.pow(m));
    }
    let out = RationalFunction::from_parts(num_lead, den)?;
    debug_assert!(out.numer().degree_in(SLOT_B) == 0);
    Ok(out)
}

/// `lim beta^k <tr X^k>` at `N = 1`: `Gamma(alpha+k+1)/Gamma(alpha+1)`.
#[cfg(test)]
fn lue_one_point(k: u32) -> RationalFunction {
    crate::jacobi::pochhammer(&crate::exact::parse_ratfun("alpha+1", VarSet::Jacobi).unwrap(), k)
}
