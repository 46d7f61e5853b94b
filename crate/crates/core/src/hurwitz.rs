//! Triple monotone Hurwitz numbers by exhaustive counting, and the weighted
//! Hurwitz numbers of the content-product generating function.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::{Monomial, Rational, SparsePoly, VarSet};
use crate::symgroup::partition::factorial;
use crate::symgroup::{character, conjugacy_class, partitions_of, Partition, Permutation};

/// Size limits protecting against exponential enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Guards {
    pub max_n: u32,
    pub max_r: u32,
}

impl Default for Guards {
    fn default() -> Self {
        Guards { max_n: 6, max_r: 10 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HurwitzQuery {
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
    /// Genus; negative values are meaningful for disconnected counts.
    pub g: i64,
    pub connected: bool,
    /// Require `b_1 < b_2 < ...` instead of the weak order.
    pub strict: bool,
}

impl HurwitzQuery {
    pub fn new(lambda: Partition, mu: Partition, nu: Partition, g: i64, connected: bool) -> Self {
        HurwitzQuery { lambda, mu, nu, g, connected, strict: false }
    }

    /// Number of transpositions `2g - 2 - n + l(mu) + l(nu) + l(lambda)`.
    pub fn r(&self) -> i64 {
        transposition_count(&self.lambda, &self.mu, &self.nu, self.g)
    }
}

pub fn transposition_count(lambda: &Partition, mu: &Partition, nu: &Partition, g: i64) -> i64 {
    2 * g - 2 - lambda.weight() as i64 + (mu.length() + nu.length() + lambda.length()) as i64
}

/// Genus for which `r = 0`, rounded up: the smallest genus with a possibly nonzero count.
pub fn min_genus(lambda: &Partition, mu: &Partition, nu: &Partition) -> i64 {
    let t = 2 + lambda.weight() as i64 - (mu.length() + nu.length() + lambda.length()) as i64;
    (t + 1).div_euclid(2)
}

fn check_weights(q: &HurwitzQuery) -> Result<u32> {
    let n = q.lambda.weight();
    if q.mu.weight() != n {
        return Err(Error::WeightMismatch(q.mu.weight() as usize, n as usize));
    }
    if q.nu.weight() != n {
        return Err(Error::WeightMismatch(q.nu.weight() as usize, n as usize));
    }
    Ok(n)
}

fn check_guards(n: u32, r: i64, guards: &Guards) -> Result<()> {
    if n > guards.max_n {
        return Err(Error::GuardExceeded(format!("weight {n} exceeds max_n {}", guards.max_n)));
    }
    if r > guards.max_r as i64 {
        return Err(Error::GuardExceeded(format!("r = {r} exceeds max_r {}", guards.max_r)));
    }
    Ok(())
}

/// Canonical orbit labels: each point labelled by the least point in its orbit.
type Labels = Vec<u8>;

fn merge_labels(l: &Labels, a: usize, b: usize) -> Labels {
    let (x, y) = (l[a], l[b]);
    if x == y {
        return l.clone();
    }
    let (lo, hi) = (x.min(y), x.max(y));
    l.iter().map(|&v| if v == hi { lo } else { v }).collect()
}

fn labels_of(perms: &[&Permutation], n: usize) -> Labels {
    let mut uf = crate::symgroup::UnionFind::new(n);
    for p in perms {
        for i in 0..n {
            uf.union(i, p.apply(i));
        }
    }
    (0..n).map(|i| uf.find(i) as u8).collect()
}

/// Counts, per final cycle type, tuples with `pi_1 in cyc(mu)`, `pi_2 in cyc(nu)` and
/// exactly `r` monotone transpositions.
///
/// Dynamic programming over the larger transposition element `b`: the state
/// is the running product (plus orbit labels when `connected`) and the number
/// of transpositions used so far. Summing the state counts is the same as
/// enumerating every tuple depth-first.
pub fn monotone_counts(
    mu: &Partition,
    nu: &Partition,
    r: usize,
    connected: bool,
    strict: bool,
) -> Result<HashMap<Partition, u64>> {
    let n = mu.weight() as usize;
    if nu.weight() as usize != n {
        return Err(Error::WeightMismatch(nu.weight() as usize, n));
    }
    type Key = (Permutation, u8, Labels);
    let c1: Vec<Permutation> = conjugacy_class(mu, n)?.collect();
    let c2: Vec<Permutation> = conjugacy_class(nu, n)?.collect();
    let mut states: HashMap<Key, u64> = HashMap::new();
    for p1 in &c1 {
        for p2 in &c2 {
            let labels = if connected { labels_of(&[p1, p2], n) } else { Vec::new() };
            *states.entry((p1.compose(p2), 0, labels)).or_insert(0) += 1;
        }
    }
    for b in 1..n {
        let mut result = states.clone();
        let mut frontier = states;
        loop {
            let mut next: HashMap<Key, u64> = HashMap::new();
            for ((sigma, len, labels), c) in &frontier {
                if *len as usize >= r {
                    continue;
                }
                for a in 0..b {
                    let s = sigma.times_transposition(a, b);
                    let l = if connected { merge_labels(labels, a, b) } else { Vec::new() };
                    *next.entry((s, len + 1, l)).or_insert(0) += c;
                }
            }
            if next.is_empty() {
                break;
            }
            for (k, c) in &next {
                *result.entry(k.clone()).or_insert(0) += c;
            }
            if strict {
                break;
            }
            frontier = next;
        }
        states = result;
    }
    let mut out: HashMap<Partition, u64> = HashMap::new();
    for ((sigma, len, labels), c) in states {
        if len as usize != r {
            continue;
        }
        if connected && labels.iter().any(|&x| x != 0) {
            continue;
        }
        *out.entry(sigma.cycle_type()).or_insert(0) += c;
    }
    Ok(out)
}

/// `h_g(lambda, mu, nu)` (or its connected version).
pub fn count_hurwitz(q: &HurwitzQuery, guards: &Guards) -> Result<u64> {
    let n = check_weights(q)?;
    let r = q.r();
    check_guards(n, r, guards)?;
    if r < 0 {
        return Ok(0);
    }
    let counts = monotone_counts(&q.mu, &q.nu, r as usize, q.connected, q.strict)?;
    Ok(counts.get(&q.lambda).copied().unwrap_or(0))
}

/// Full table over `mu, nu |- |lambda|` at fixed genus.
pub fn hurwitz_table(
    lambda: &Partition,
    g: i64,
    connected: bool,
    guards: &Guards,
) -> Result<BTreeMap<(Partition, Partition), u64>> {
    let n = lambda.weight();
    if n > guards.max_n {
        return Err(Error::GuardExceeded(format!("weight {n} exceeds max_n {}", guards.max_n)));
    }
    let parts = partitions_of(n);
    let pairs: Vec<(Partition, Partition)> =
        parts.iter().flat_map(|m| parts.iter().map(move |v| (m.clone(), v.clone()))).collect();
    let rows: Result<Vec<_>> = pairs
        .into_par_iter()
        .map(|(mu, nu)| {
            let q = HurwitzQuery::new(lambda.clone(), mu.clone(), nu.clone(), g, connected);
            Ok(((mu, nu), count_hurwitz(&q, guards)?))
        })
        .collect();
    Ok(rows?.into_iter().collect())
}

/// Parameters of `G(z) = (1 + z)(1 + gamma z) / (1 - delta z)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSpec {
    pub gamma: Rational,
    pub delta: Rational,
}

fn eps_term(k: usize, c: Rational) -> SparsePoly {
    SparsePoly::monomial(VarSet::Eps, Monomial([k as u16, 0, 0]), c)
}

fn truncate_eps(p: &SparsePoly, d_max: usize) -> SparsePoly {
    SparsePoly::from_terms(
        VarSet::Eps,
        p.terms().iter().filter(|(m, _)| m.0[0] as usize <= d_max).cloned(),
    )
}

/// `prod_{boxes} G(eps * content)` truncated at `eps^d_max`.
pub fn content_product_series(w: &WeightSpec, lambda: &Partition, d_max: usize) -> SparsePoly {
    let mut acc = SparsePoly::one(VarSet::Eps);
    for c in lambda.contents() {
        let c = Rational::from_integer(c.into());
        // (1 + c eps)(1 + gamma c eps) sum_k (delta c eps)^k
        let lin = SparsePoly::one(VarSet::Eps).add(&eps_term(1, c.clone()));
        let lin2 = SparsePoly::one(VarSet::Eps).add(&eps_term(1, &w.gamma * &c));
        let mut geo = SparsePoly::zero(VarSet::Eps);
        let mut pw = Rational::one();
        let dc = &w.delta * &c;
        for k in 0..=d_max {
            geo = geo.add(&eps_term(k, pw.clone()));
            pw *= &dc;
        }
        let g = truncate_eps(&lin.mul(&lin2), d_max).mul(&geo);
        acc = truncate_eps(&acc.mul(&truncate_eps(&g, d_max)), d_max);
    }
    acc
}

/// `H_G^d(mu)` from the character expansion.
pub fn weighted_hurwitz_char(w: &WeightSpec, mu: &Partition, d: usize) -> Result<Rational> {
    let n = mu.weight();
    let z = Rational::from_integer(mu.z());
    let mut acc = Rational::zero();
    for lambda in partitions_of(n) {
        let r = content_product_series(w, &lambda, d).coefficient(&Monomial([d as u16, 0, 0]));
        if r.is_zero() {
            continue;
        }
        let chi = Rational::from_integer(character(&lambda, mu)?.into());
        acc += lambda.dim_over_factorial() * r * chi / &z;
    }
    Ok(acc)
}

/// `(1/n!) sum_{mu,nu} gamma^{n - l(nu)} delta^r h_g(lambda, mu, nu)`.
pub fn weighted_hurwitz_sum(w: &WeightSpec, lambda: &Partition, g: i64, guards: &Guards) -> Result<Rational> {
    let n = lambda.weight();
    let parts = partitions_of(n);
    let mut acc = Rational::zero();
    for mu in &parts {
        for nu in &parts {
            let r = transposition_count(lambda, mu, nu, g);
            if r < 0 {
                continue;
            }
            let q = HurwitzQuery::new(lambda.clone(), mu.clone(), nu.clone(), g, false);
            let h = count_hurwitz(&q, guards)?;
            if h == 0 {
                continue;
            }
            let wgt = num_traits::pow(w.gamma.clone(), n as usize - nu.length()) * num_traits::pow(w.delta.clone(), r as usize);
            acc += wgt * Rational::from_integer(h.into());
        }
    }
    Ok(acc / Rational::from_integer(factorial(n)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    /// Direct depth-first enumeration over tuples, the definition verbatim.
    fn brute(qr: &HurwitzQuery) -> u64 {
        let n = qr.lambda.weight() as usize;
        let r = qr.r();
        if r < 0 {
            return 0;
        }
        let mut count = 0;
        for p1 in conjugacy_class(&qr.mu, n).unwrap() {
            for p2 in conjugacy_class(&qr.nu, n).unwrap() {
                let mut taus = Vec::new();
                dfs(&p1.compose(&p2), &p1, &p2, r as usize, 1, &mut taus, qr, &mut count);
            }
        }
        count
    }

    #[allow(clippy::too_many_arguments)]
    fn dfs(
        sigma: &Permutation,
        p1: &Permutation,
        p2: &Permutation,
        left: usize,
        min_b: usize,
        taus: &mut Vec<Permutation>,
        qr: &HurwitzQuery,
        count: &mut u64,
    ) {
        let n = sigma.n();
        if left == 0 {
            if sigma.cycle_type() != qr.lambda {
                return;
            }
            if qr.connected {
                let mut gens = vec![p1.clone(), p2.clone()];
                gens.extend(taus.iter().cloned());
                if !crate::symgroup::is_transitive(&gens, n) {
                    return;
                }
            }
            *count += 1;
            return;
        }
        for b in min_b..n {
            for a in 0..b {
                let t = Permutation::transposition(n, a, b);
                taus.push(t.clone());
                let next = if qr.strict { b + 1 } else { b };
                dfs(&sigma.compose(&t), p1, p2, left - 1, next, taus, qr, count);
                taus.pop();
            }
        }
    }

    #[test]
    fn known_counts() {
        let g = Guards::default();
        let one = HurwitzQuery::new(p("1"), p("1"), p("1"), 0, false);
        assert_eq!(count_hurwitz(&one, &g).unwrap(), 1);
        let a = HurwitzQuery::new(p("1,1,1"), p("3"), p("2,1"), 0, true);
        assert_eq!(count_hurwitz(&a, &g).unwrap(), 6);
        let b = HurwitzQuery::new(p("1,1,1"), p("1,1,1"), p("1,1,1"), 0, true);
        assert_eq!(count_hurwitz(&b, &g).unwrap(), 8);
        let c = HurwitzQuery::new(p("1,1,1"), p("3"), p("3"), 0, false);
        assert_eq!(count_hurwitz(&c, &g).unwrap(), 2);
    }

    #[test]
    fn dp_matches_brute_force() {
        for n in 1..=4u32 {
            for lambda in partitions_of(n) {
                for mu in partitions_of(n) {
                    for nu in partitions_of(n) {
                        for g in -1..=1 {
                            for (connected, strict) in [(false, false), (true, false), (false, true), (true, true)] {
                                let mut qr = HurwitzQuery::new(lambda.clone(), mu.clone(), nu.clone(), g, connected);
                                qr.strict = strict;
                                if qr.r() > 5 {
                                    continue;
                                }
                                assert_eq!(count_hurwitz(&qr, &Guards::default()).unwrap(), brute(&qr), "{qr:?}");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn weight_two_table() {
        let t = hurwitz_table(&p("2"), 0, false, &Guards::default()).unwrap();
        assert_eq!(t[&(p("2"), p("1,1"))], 1);
        assert_eq!(t[&(p("1,1"), p("2"))], 1);
        assert_eq!(t[&(p("1,1"), p("1,1"))], 1);
        assert_eq!(t[&(p("2"), p("2"))], 0);
    }

    #[test]
    fn guards_and_errors() {
        let g = Guards { max_n: 3, max_r: 2 };
        let big = HurwitzQuery::new(p("4"), p("4"), p("4"), 0, false);
        assert!(matches!(count_hurwitz(&big, &g), Err(Error::GuardExceeded(_))));
        let deep = HurwitzQuery::new(p("1,1,1"), p("1,1,1"), p("1,1,1"), 1, false);
        assert!(matches!(count_hurwitz(&deep, &g), Err(Error::GuardExceeded(_))));
        let bad = HurwitzQuery::new(p("2"), p("1"), p("2"), 0, false);
        assert!(matches!(count_hurwitz(&bad, &g), Err(Error::WeightMismatch(..))));
    }

    #[test]
    fn min_genus_is_first_nonnegative_r() {
        for n in 1..=4 {
            for l in partitions_of(n) {
                for m in partitions_of(n) {
                    for v in partitions_of(n) {
                        let g0 = min_genus(&l, &m, &v);
                        assert!(transposition_count(&l, &m, &v, g0) >= 0);
                        assert!(transposition_count(&l, &m, &v, g0 - 1) < 0);
                    }
                }
            }
        }
    }

    #[test]
    fn content_products() {
        let w0 = WeightSpec { gamma: q(0, 1), delta: q(0, 1) };
        let w = WeightSpec { gamma: q(2, 3), delta: q(-1, 5) };
        for d in 0..4 {
            assert!(content_product_series(&w, &p("1"), d).is_one());
        }
        assert_eq!(content_product_series(&w0, &p("2"), 3).to_string(), "eps+1");
        assert!(content_product_series(&w, &p("1,1"), 3).coefficient(&Monomial::ONE) == q(1, 1));
    }

    #[test]
    fn weighted_char_small() {
        let w0 = WeightSpec { gamma: q(0, 1), delta: q(0, 1) };
        assert_eq!(weighted_hurwitz_char(&w0, &p("1"), 0).unwrap(), q(1, 1));
        assert_eq!(weighted_hurwitz_char(&w0, &p("3"), 2).unwrap(), q(1, 3));
        let w = WeightSpec { gamma: q(1, 1), delta: q(1, 1) };
        assert_eq!(weighted_hurwitz_sum(&w, &p("1"), 0, &Guards::default()).unwrap(), q(1, 1));
    }
}
