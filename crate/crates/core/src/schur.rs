//! The Schur-basis route: `<prod tr X^{+-mu_j}> = sum_lambda c_lambda chi_lambda(mu)`.
//!
//! Independent of the `R` series; used to cross-check the analytic route.

use std::collections::HashMap;

use crate::error::Result;
use crate::exact::laurent::rescale;
use crate::exact::{parse_ratfun, series::sum_all, Rational, RationalFunction, VarSet};
use crate::jacobi::Sign;
use crate::symgroup::{character, partitions_of, set_partitions, Partition};

#[derive(Clone, Debug, PartialEq)]
pub struct SchurCoefficient {
    pub lambda: Partition,
    pub sign: Sign,
    pub value: RationalFunction,
}

fn lin(vars: VarSet, expr: &str, shift: i64) -> RationalFunction {
    parse_ratfun(expr, vars).expect("internal expression").add(&RationalFunction::from_int(vars, shift))
}

/// Box-product form `dim/|lambda|! prod_(i,j) ...`.
pub fn c_lambda_boxes(lambda: &Partition, sign: Sign) -> Result<RationalFunction> {
    let v = VarSet::Jacobi;
    let mut acc = RationalFunction::constant(v, lambda.dim_over_factorial());
    for (i, j) in lambda.boxes() {
        let c = j - i;
        let f = match sign {
            Sign::Positive => lin(v, "N", c).mul(&lin(v, "alpha+N", c)).div(&lin(v, "alpha+beta+2*N", c))?,
            Sign::Negative => lin(v, "N", c).mul(&lin(v, "alpha+beta+N", -c)).div(&lin(v, "alpha", -c))?,
        };
        acc = acc.mul(&f);
    }
    Ok(acc)
}

/// Content-product form in `(N, c_alpha, c_beta)`.
pub fn c_lambda_contents(lambda: &Partition, sign: Sign) -> Result<RationalFunction> {
    let v = VarSet::Scaled;
    let rf = |s: &str| parse_ratfun(s, v).expect("internal expression");
    let (base, x, y, z) = match sign {
        Sign::Positive => (rf("c_alpha*N/(c_alpha+c_beta)"), rf("N"), rf("c_alpha*N"), rf("(c_alpha+c_beta)*N")),
        Sign::Negative => (
            rf("(c_alpha+c_beta-1)*N/(c_alpha-1)"),
            rf("N"),
            rf("-(c_alpha+c_beta-1)*N"),
            rf("-(c_alpha-1)*N"),
        ),
    };
    let mut acc = RationalFunction::constant(v, lambda.dim_over_factorial()).mul(&base.pow(lambda.weight() as i32)?);
    let one = RationalFunction::one(v);
    for c in lambda.contents() {
        let cc = RationalFunction::from_int(v, c);
        let term = |d: &RationalFunction| -> Result<RationalFunction> { Ok(one.add(&cc.div(d)?)) };
        acc = acc.mul(&term(&x)?).mul(&term(&y)?).div(&term(&z)?)?;
    }
    Ok(acc)
}

/// `c_{lambda,N}^{+-}`, checked against the content-product form.
pub fn c_lambda(lambda: &Partition, sign: Sign) -> Result<SchurCoefficient> {
    let value = c_lambda_boxes(lambda, sign)?;
    let contents = c_lambda_contents(lambda, sign)?;
    if rescale(&value)? != contents {
        return Err(crate::Error::RouteMismatch { kind: "c_lambda", l: lambda.weight() as usize });
    }
    Ok(SchurCoefficient { lambda: lambda.clone(), sign, value })
}

/// The disconnected correlator `sum_{lambda |- |mu|} c_lambda chi_lambda(mu)`.
pub fn correlator_via_schur(mu: &Partition, sign: Sign) -> Result<RationalFunction> {
    let v = VarSet::Jacobi;
    let mut parts = Vec::new();
    for lambda in partitions_of(mu.weight()) {
        let chi = character(&lambda, mu)?;
        if chi != 0 {
            parts.push(c_lambda_boxes(&lambda, sign)?.scale(&Rational::from_integer(chi.into())));
        }
    }
    Ok(sum_all(v, parts).split_linear_factors())
}

/// Connected correlator by Moebius inversion over set partitions.
pub fn connected_via_schur(mu: &Partition, sign: Sign) -> Result<RationalFunction> {
    let parts = mu.parts();
    let mut memo: HashMap<Vec<u32>, RationalFunction> = HashMap::new();
    let mut terms = Vec::new();
    for sp in set_partitions(parts.len()) {
        let mut prod = RationalFunction::from_int(VarSet::Jacobi, sp.moebius());
        for block in sp.blocks() {
            let mut sub: Vec<u32> = block.iter().map(|&i| parts[i]).collect();
            sub.sort_unstable_by(|a, b| b.cmp(a));
            if !memo.contains_key(&sub) {
                let c = correlator_via_schur(&Partition::new(sub.clone())?, sign)?;
                memo.insert(sub.clone(), c);
            }
            prod = prod.mul(&memo[&sub]);
        }
        terms.push(prod);
    }
    Ok(sum_all(VarSet::Jacobi, terms).split_linear_factors())
}
