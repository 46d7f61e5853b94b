//! One-point moments and multi-point JUE correlators from the `R` series.
//!
//! For `l >= 2` the connected correlator generating function is
//! `-sum_cycles tr(R(z_i1) ... R(z_il)) / prod (z_ia - z_i(a+1))`, with the
//! trace shifted by one when `l = 2`. Each slot sits at one of the points
//! `infinity`, `zero`, `one` and is expanded in its local coordinate `x_i`.
//!
//! Single cyclic terms are not power series (same-point edges give poles on
//! the diagonals); only their sum is. We restrict to a line `x_i = c_i t`,
//! where every term becomes a Laurent series in `t`. The coefficient of
//! `t^d` in the sum is a homogeneous polynomial `sum_{|e| = d} g_e c^e`, and
//! evaluating at `M` generic vectors `c` and inverting the `M x M` monomial
//! matrix isolates the wanted `g_e`. All line data are plain rationals, so
//! the symbolic work reduces to one weighted sum of cyclic matrix traces.

use std::collections::HashMap;

use num_traits::{One, Zero};
use rayon::prelude::*;

use super::coeffs::{coeff_value, Kind};
use super::rseries::{r_coeffs, Mat2, Point};
use super::Sign;
use crate::error::{Error, Result};
use crate::exact::{q, qi, series::sum_all, Rational, RationalFunction, TruncatedSeries, VarSet};
use crate::symgroup::{set_partitions, Partition};

const V: VarSet = VarSet::Jacobi;

/// `<tr X^k>` (positive) or `<tr X^-k>` (negative), by telescoping from `<tr X^0> = N`.
pub fn moment(k: u32, sign: Sign) -> Result<RationalFunction> {
    let mut parts = vec![RationalFunction::var(V, crate::exact::SLOT_N)];
    for j in 0..k as usize {
        parts.push(match sign {
            Sign::Positive => coeff_value(Kind::A, j)?.neg(),
            Sign::Negative => coeff_value(Kind::ATilde, j)?,
        });
    }
    Ok(sum_all(V, parts).split_linear_factors())
}

/// One trace factor: `tr X^k` at infinity, `tr X^-k` at zero, `tr (1-X)^-k` at one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slot {
    pub point: Point,
    pub k: u32,
}

impl Slot {
    pub fn new(point: Point, k: u32) -> Self {
        Slot { point, k }
    }
}

/// Connected correlator `<prod tr X^{+-k_j}>^c`.
pub fn connected_correlator(lambda: &Partition, sign: Sign) -> Result<RationalFunction> {
    let p = match sign {
        Sign::Positive => Point::Infinity,
        Sign::Negative => Point::Zero,
    };
    let slots: Vec<Slot> = lambda.parts().iter().map(|&k| Slot::new(p, k)).collect();
    connected_slots(&slots)
}

/// Disconnected correlator: sum over set partitions of products of connected ones.
pub fn correlator(lambda: &Partition, sign: Sign) -> Result<RationalFunction> {
    let parts = lambda.parts();
    let mut memo: HashMap<Vec<u32>, RationalFunction> = HashMap::new();
    let mut terms = Vec::new();
    for sp in set_partitions(parts.len()) {
        let mut prod = RationalFunction::one(V);
        for block in sp.blocks() {
            let mut sub: Vec<u32> = block.iter().map(|&i| parts[i]).collect();
            sub.sort_unstable_by(|a, b| b.cmp(a));
            let c = match memo.get(&sub) {
                Some(c) => c.clone(),
                None => {
                    let c = connected_correlator(&Partition::new(sub.clone())?, sign)?;
                    memo.insert(sub, c.clone());
                    c
                }
            };
            prod = prod.mul(&c);
        }
        terms.push(prod);
    }
    Ok(sum_all(V, terms).split_linear_factors())
}

/// Query wrapper matching the command-line surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorrelatorQuery {
    pub lambda: Partition,
    pub sign: Sign,
    pub connected: bool,
}

impl CorrelatorQuery {
    pub fn evaluate(&self) -> Result<RationalFunction> {
        if self.lambda.is_empty() {
            return Err(Error::Invalid("a correlator needs at least one trace".into()));
        }
        if self.connected {
            connected_correlator(&self.lambda, self.sign)
        } else {
            correlator(&self.lambda, self.sign)
        }
    }
}

/// Connected correlator with `tr X^k` for `q_pos`, `tr X^-i` for `q_neg` and
/// `tr (1-X)^j` for `q_one`.
///
/// The expansion at `z = 1` produces inverse powers of `1 - X`; positive
/// powers are expanded binomially into `tr X^i` slots. A `tr X^0 = N` slot
/// is a constant, which kills any connected correlator with two or more slots.
pub fn mixed_connected(q_pos: &Partition, q_neg: &Partition, q_one: &Partition) -> Result<RationalFunction> {
    let total = q_pos.length() + q_neg.length() + q_one.length();
    if total == 0 {
        return Err(Error::Invalid("mixed correlator needs at least one trace".into()));
    }
    let mut base: Vec<Slot> = q_pos.parts().iter().map(|&k| Slot::new(Point::Infinity, k)).collect();
    base.extend(q_neg.parts().iter().map(|&k| Slot::new(Point::Zero, k)));
    // Expand prod_j (1-X)^{j} into choices of i per slot with weight prod C(j,i)(-1)^i.
    let mut choices: Vec<(Rational, Vec<u32>)> = vec![(qi(1), Vec::new())];
    for &j in q_one.parts() {
        let mut next = Vec::new();
        for (w, picks) in &choices {
            let mut binom = qi(1);
            for i in 0..=j {
                let sgn = if i % 2 == 0 { qi(1) } else { qi(-1) };
                let mut p = picks.clone();
                p.push(i);
                next.push((w * &binom * sgn, p));
                binom = binom * qi((j - i) as i64) / qi(i as i64 + 1);
            }
        }
        choices = next;
    }
    let mut memo: HashMap<Vec<Slot>, RationalFunction> = HashMap::new();
    let mut terms = Vec::new();
    for (w, picks) in choices {
        let value = if picks.contains(&0) {
            if total == 1 {
                RationalFunction::var(V, crate::exact::SLOT_N)
            } else {
                continue;
            }
        } else {
            let mut slots = base.clone();
            slots.extend(picks.iter().map(|&i| Slot::new(Point::Infinity, i)));
            slots.sort();
            match memo.get(&slots) {
                Some(v) => v.clone(),
                None => {
                    let v = connected_slots(&slots)?;
                    memo.insert(slots, v.clone());
                    v
                }
            }
        };
        terms.push(value.scale(&w));
    }
    Ok(sum_all(V, terms).split_linear_factors())
}

/// Connected correlator of arbitrary slots.
pub fn connected_slots(slots: &[Slot]) -> Result<RationalFunction> {
    if slots.is_empty() || slots.iter().any(|s| s.k == 0) {
        return Err(Error::Invalid("slots need powers >= 1".into()));
    }
    if slots.len() == 1 {
        let s = slots[0];
        return match s.point {
            Point::Infinity => moment(s.k, Sign::Positive),
            Point::Zero => moment(s.k, Sign::Negative),
            Point::One => Ok(moment(s.k, Sign::Negative)?.swap_ab()),
        };
    }
    let g = line_extract(slots)?.split_linear_factors();
    let zeros = slots.iter().filter(|s| s.point == Point::Zero).count();
    Ok(if zeros % 2 == 1 { g.neg() } else { g })
}

/// Laurent series in `t` with exponents `low..low + c.len()`.
#[derive(Clone, Debug)]
struct Laurent {
    low: i32,
    c: Vec<Rational>,
}

impl Laurent {
    fn get(&self, e: i32) -> Rational {
        let i = e - self.low;
        if i < 0 || i as usize >= self.c.len() {
            Rational::zero()
        } else {
            self.c[i as usize].clone()
        }
    }

    /// Product truncated above exponent `top`.
    fn mul(&self, o: &Self, top: i32) -> Self {
        let low = self.low + o.low;
        let len = (top - low + 1).max(0) as usize;
        let mut c = vec![Rational::zero(); len];
        for (i, a) in self.c.iter().enumerate() {
            for (j, b) in o.c.iter().enumerate() {
                if i + j < len {
                    c[i + j] += a * b;
                }
            }
        }
        Laurent { low, c }
    }
}

/// Reduced edge factor `1/(z_a - z_b)` on the line, truncated above `top`.
///
/// Each infinity endpoint has its factor `c t` removed; every vertex lies on
/// two edges, so the full cyclic term is `prod_{infinity} (c_i t)^2` times
/// the reduced product.
fn edge(pa: Point, ca: &Rational, pb: Point, cb: &Rational, top: i32) -> Laurent {
    use Point::*;
    let len = (top + 1).max(0) as usize;
    let geometric = |x: Rational, s: Rational| Laurent {
        low: 0,
        c: (0..len).map(|n| s.clone() * num_traits::pow(x.clone(), n)).collect(),
    };
    match (pa, pb) {
        (Infinity, Infinity) | (One, One) => Laurent { low: -1, c: vec![Rational::one() / (cb - ca)] },
        (Zero, Zero) => Laurent { low: -1, c: vec![Rational::one() / (ca - cb)] },
        (Infinity, Zero) | (Zero, Infinity) => {
            let s = if pa == Infinity { qi(1) } else { qi(-1) };
            let mut c = vec![Rational::zero(); len];
            for n in (0..len).step_by(2) {
                c[n] = s.clone() * num_traits::pow(ca * cb, n / 2);
            }
            Laurent { low: 0, c }
        }
        (Infinity, One) | (One, Infinity) => {
            let (ci, c1, s) = if pa == Infinity { (ca, cb, qi(1)) } else { (cb, ca, qi(-1)) };
            // 1/(1 - ci t + ci c1 t^2) by its two-term recurrence.
            let mut c: Vec<Rational> = Vec::with_capacity(len);
            for n in 0..len {
                let v = match n {
                    0 => qi(1),
                    1 => ci.clone(),
                    _ => ci * &c[n - 1] - ci * c1 * &c[n - 2],
                };
                c.push(v);
            }
            Laurent { low: 0, c: c.into_iter().map(|x| x * &s).collect() }
        }
        (Zero, One) => geometric(ca + cb, qi(-1)),
        (One, Zero) => geometric(ca + cb, qi(1)),
    }
}

/// Cyclic word of `(point, coefficient index)` pairs, rotated to its minimum.
type Word = Vec<(Point, usize)>;

fn canonical(mut w: Word) -> Word {
    let n = w.len();
    let mut best = w.clone();
    for _ in 1..n {
        w.rotate_left(1);
        if w < best {
            best = w.clone();
        }
    }
    best
}

/// All `e` in `N^l` with `|e| = d`.
fn compositions(l: usize, d: usize) -> Vec<Vec<usize>> {
    fn go(l: usize, d: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() + 1 == l {
            cur.push(d);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for x in 0..=d {
            cur.push(x);
            go(l, d - x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if l > 0 {
        go(l, d, &mut Vec::new(), &mut out);
    }
    out
}

/// Cyclic orders of `0..l` starting at 0.
fn cycles(l: usize) -> Vec<Vec<usize>> {
    fn perms(rest: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k == rest.len() {
            let mut c = vec![0];
            c.extend(rest.iter().copied());
            out.push(c);
            return;
        }
        for i in k..rest.len() {
            rest.swap(k, i);
            perms(rest, k + 1, out);
            rest.swap(k, i);
        }
    }
    let mut out = Vec::new();
    perms(&mut (1..l).collect(), 0, &mut out);
    out
}

fn monomial(c: &[Rational], e: &[usize]) -> Rational {
    c.iter().zip(e).fold(qi(1), |acc, (x, &k)| acc * num_traits::pow(x.clone(), k))
}

/// Solves `A x = b` exactly; `None` if singular.
fn solve(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        b.swap(col, piv);
        let inv = Rational::one() / &a[col][col];
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = &a[r][col] * &inv;
                for k in col..n {
                    let v = &f * &a[col][k];
                    a[r][k] -= v;
                }
                let v = &f * &b[col];
                b[r] -= v;
            }
        }
    }
    Some((0..n).map(|i| &b[i] / &a[i][i]).collect())
}

/// Small deterministic generator for the line directions.
struct Lcg(u64);

impl Lcg {
    fn next(&mut self, m: u64) -> u64 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (self.0 >> 33) % m
    }
}

/// Line directions: one vector per unknown monomial, distinct within each point.
fn directions(slots: &[Slot], m: usize, seed: u64) -> Vec<Vec<Rational>> {
    let mut rng = Lcg(seed);
    (0..m)
        .map(|_| {
            let mut used: Vec<(Point, u64)> = Vec::new();
            slots
                .iter()
                .map(|s| loop {
                    let x = 1 + rng.next(97);
                    if !used.contains(&(s.point, x)) {
                        used.push((s.point, x));
                        return qi(x as i64);
                    }
                })
                .collect()
        })
        .collect()
}

fn trace_of(word: &Word, coeffs: &HashMap<Point, Vec<Mat2>>) -> RationalFunction {
    let mut acc = coeffs[&word[0].0][word[0].1].clone();
    for &(p, n) in &word[1..] {
        acc = acc.mul(&coeffs[&p][n]);
    }
    acc.trace()
}

/// Fixed evaluation point for the remainder check.
fn probe() -> [Rational; 3] {
    [q(17, 7), q(23, 11), q(31, 13)]
}

/// `g_e` at `e = (k_i - 1)`: the coefficient of `prod x_i^{k_i - 1}` in the
/// connected generating function with the `x_i^2` of infinity slots removed.
fn line_extract(slots: &[Slot]) -> Result<RationalFunction> {
    let l = slots.len();
    let d: usize = slots.iter().map(|s| s.k as usize - 1).sum();
    let target: Vec<usize> = slots.iter().map(|s| s.k as usize - 1).collect();
    let monos = compositions(l, d);
    let m = monos.len();
    let ti = monos.iter().position(|e| *e == target).expect("target is a composition");

    // y with V^T y = unit(target), V[j][e] = c_j^e.
    let mut seed = 0x5eed_u64 + l as u64 * 131 + d as u64;
    let (dirs, y) = loop {
        let dirs = directions(slots, m, seed);
        let vt: Vec<Vec<Rational>> = (0..m).map(|e| (0..m).map(|j| monomial(&dirs[j], &monos[e])).collect()).collect();
        let mut rhs = vec![Rational::zero(); m];
        rhs[ti] = qi(1);
        if let Some(y) = solve(vt, rhs) {
            break (dirs, y);
        }
        seed += 1;
    };

    let top = d as i32;
    let max_order = d + l;
    let mut coeffs: HashMap<Point, Vec<Mat2>> = HashMap::new();
    for s in slots {
        if let std::collections::hash_map::Entry::Vacant(e) = coeffs.entry(s.point) {
            e.insert(r_coeffs(s.point, max_order)?);
        }
    }

    let mut weights: HashMap<Word, Rational> = HashMap::new();
    let mut constant = Rational::zero();
    // Negative-power coefficients at the first direction; they must vanish.
    let mut residues: Vec<HashMap<Word, Rational>> = vec![HashMap::new(); l + 1];
    let mut residue_const = vec![Rational::zero(); l + 1];

    for (j, c) in dirs.iter().enumerate() {
        for cyc in cycles(l) {
            let edges: Vec<Laurent> = (0..l)
                .map(|a| {
                    let (u, v) = (cyc[a], cyc[(a + 1) % l]);
                    edge(slots[u].point, &c[u], slots[v].point, &c[v], top + l as i32)
                })
                .collect();
            // Later poles shift terms down, so keep that many extra orders.
            let mut pending: i32 = edges.iter().map(|x| -x.low.min(0)).sum();
            let mut e = Laurent { low: 0, c: vec![qi(1)] };
            for x in &edges {
                pending += x.low.min(0);
                e = e.mul(x, top + pending);
            }
            let low = e.low;
            if l == 2 {
                constant += &y[j] * e.get(top);
                if j == 0 {
                    for r in 1..=(-low) as usize {
                        residue_const[r] += e.get(-(r as i32));
                    }
                }
            }
            for mm in 0..=(top - low) as usize {
                let ew = e.get(top - mm as i32);
                let check = j == 0 && (mm as i32) < -low;
                if ew.is_zero() && !check {
                    continue;
                }
                for n in compositions(l, mm) {
                    let word: Word = (0..l).map(|a| (slots[cyc[a]].point, n[a])).collect();
                    let cn: Rational = (0..l).fold(qi(1), |acc, a| acc * num_traits::pow(c[cyc[a]].clone(), n[a]));
                    let key = canonical(word);
                    if !ew.is_zero() {
                        *weights.entry(key.clone()).or_insert_with(Rational::zero) -= &y[j] * &ew * &cn;
                    }
                    if check {
                        for r in 1..=((-low) as usize - mm) {
                            let er = e.get(-(r as i32) - mm as i32);
                            if !er.is_zero() {
                                *residues[r].entry(key.clone()).or_insert_with(Rational::zero) -= er * &cn;
                            }
                        }
                    }
                }
            }
        }
    }

    let mut keys: Vec<&Word> = weights.keys().chain(residues.iter().flat_map(|r| r.keys())).collect();
    keys.sort();
    keys.dedup();
    let traces: HashMap<Word, RationalFunction> =
        keys.par_iter().map(|&w| ((*w).clone(), trace_of(w, &coeffs))).collect();

    let pt = probe();
    for r in 1..=l {
        let mut acc = residue_const[r].clone();
        for (w, x) in &residues[r] {
            acc += x * traces[w].eval(&pt)?;
        }
        if !acc.is_zero() {
            return Err(Error::NonzeroRemainder { a: 0, b: r });
        }
    }

    let mut terms: Vec<RationalFunction> = weights
        .iter()
        .filter(|(_, x)| !x.is_zero())
        .map(|(w, x)| traces[w].scale(x))
        .collect();
    terms.sort_by_key(|t| t.denom_factors().len());
    terms.push(RationalFunction::constant(V, constant));
    Ok(sum_all(V, terms))
}

/// Two-point connected correlator at one point through the bivariate series
/// route: `tr(R(x_a) R(x_b)) - 1` divided twice by `x_a - x_b`.
pub fn two_point_via_series(point: Point, k1: u32, k2: u32) -> Result<RationalFunction> {
    if point == Point::One || k1 == 0 || k2 == 0 {
        return Err(Error::Invalid("two-point series route takes points infinity or zero and powers >= 1".into()));
    }
    let budget = k1 + k2;
    let rs = r_coeffs(point, budget as usize)?;
    let entry = |var: usize, i: usize, j: usize| {
        let cs: Vec<RationalFunction> = rs.iter().map(|m| m.get(i, j).clone()).collect();
        TruncatedSeries::univariate(V, 2, var, budget, &cs)
    };
    let mut tr = TruncatedSeries::constant(V, 2, budget, RationalFunction::from_int(V, -1));
    for i in 0..2 {
        for j in 0..2 {
            tr = tr.add(&entry(0, i, j).mul(&entry(1, j, i)));
        }
    }
    let q1 = crate::exact::series_divide_by_difference(&tr, 0, 1)?;
    let q2 = crate::exact::series_divide_by_difference(&q1, 0, 1)?;
    let g = q2.coeff(&[(k1 - 1) as u8, (k2 - 1) as u8]);
    // At infinity 1/(z_a - z_b)^2 = x_a^2 x_b^2 / (x_a - x_b)^2, at zero the
    // two factors of -1 from the slot convention cancel.
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::parse_ratfun;

    fn rf(s: &str) -> RationalFunction {
        parse_ratfun(s, V).unwrap()
    }

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn first_moments() {
        assert_eq!(moment(0, Sign::Positive).unwrap(), rf("N"));
        assert_eq!(moment(1, Sign::Positive).unwrap(), rf("N*(alpha+N)/(alpha+beta+2*N)"));
        assert_eq!(moment(1, Sign::Negative).unwrap(), rf("N*(alpha+beta+N)/alpha"));
    }

    #[test]
    fn example_closed_forms() {
        let pos = connected_correlator(&part("1,1,1"), Sign::Positive).unwrap();
        assert_eq!(
            pos,
            rf("2*N*(alpha+beta)*(beta-alpha)*(alpha+N)*(beta+N)*(alpha+beta+N)/((alpha+beta+2*N-2)*(alpha+beta+2*N-1)*(alpha+beta+2*N)^3*(alpha+beta+2*N+1)*(alpha+beta+2*N+2))")
        );
        let neg = connected_correlator(&part("1,1,1"), Sign::Negative).unwrap();
        assert_eq!(
            neg,
            rf("2*N*(alpha+N)*(alpha+2*N)*(beta+N)*(alpha+beta+N)*(alpha+2*beta+2*N)/((alpha-2)*(alpha-1)*alpha^3*(alpha+1)*(alpha+2))")
        );
    }

    #[test]
    fn line_and_series_routes_agree() {
        for (k1, k2) in [(1, 1), (2, 1), (2, 2), (3, 1)] {
            for (p, sign) in [(Point::Infinity, Sign::Positive), (Point::Zero, Sign::Negative)] {
                let line = connected_correlator(&Partition::new(vec![k1, k2]).unwrap(), sign).unwrap();
                assert_eq!(line, two_point_via_series(p, k1, k2).unwrap(), "{p} {k1} {k2}");
            }
        }
    }

    #[test]
    fn one_slot_mixed_cases() {
        let e = Partition::empty();
        assert_eq!(mixed_connected(&part("1"), &e, &e).unwrap(), moment(1, Sign::Positive).unwrap());
        assert_eq!(mixed_connected(&e, &e, &part("1")).unwrap(), rf("N*(beta+N)/(alpha+beta+2*N)"));
        assert_eq!(
            mixed_connected(&e, &e, &part("2")).unwrap(),
            moment(2, Sign::Positive).unwrap().swap_ab()
        );
    }

    /// `E[x^a (1-x)^b]` for one Beta(alpha+1, beta+1) eigenvalue, exponents of any sign.
    fn beta_moment(a: i64, b: i64) -> RationalFunction {
        use crate::jacobi::hypergeom::gamma_ratio;
        let v = V;
        let al = RationalFunction::var(v, crate::exact::SLOT_A);
        let be = RationalFunction::var(v, crate::exact::SLOT_B);
        let ab = al.add(&be);
        gamma_ratio(&al, a + 1, 1)
            .unwrap()
            .mul(&gamma_ratio(&be, b + 1, 1).unwrap())
            .mul(&gamma_ratio(&ab, 2, a + b + 2).unwrap())
    }

    fn at_one(f: &RationalFunction) -> RationalFunction {
        f.specialize(crate::exact::SLOT_N, &qi(1)).unwrap()
    }

    #[test]
    fn single_eigenvalue_oracle_for_mixed_pairs() {
        // <f g>^c = E[fg] - E[f]E[g] with f, g monomials in x and 1-x.
        let exps = |s: Slot| -> (i64, i64) {
            match s.point {
                Point::Infinity => (s.k as i64, 0),
                Point::Zero => (-(s.k as i64), 0),
                Point::One => (0, -(s.k as i64)),
            }
        };
        let pts = [Point::Infinity, Point::Zero, Point::One];
        for &pa in &pts {
            for &pb in &pts {
                for (ka, kb) in [(1, 1), (2, 1)] {
                    let (sa, sb) = (Slot::new(pa, ka), Slot::new(pb, kb));
                    let (a1, b1) = exps(sa);
                    let (a2, b2) = exps(sb);
                    let want = beta_moment(a1 + a2, b1 + b2).sub(&beta_moment(a1, b1).mul(&beta_moment(a2, b2)));
                    let got = at_one(&connected_slots(&[sa, sb]).unwrap());
                    assert_eq!(got, want, "{pa} {ka} / {pb} {kb}");
                }
            }
        }
    }

    #[test]
    fn single_eigenvalue_oracle_three_points() {
        let (x, y, z) = (Slot::new(Point::Infinity, 1), Slot::new(Point::Zero, 1), Slot::new(Point::One, 1));
        // third cumulant of (x, 1/x, 1/(1-x))
        let m = |a: i64, b: i64| beta_moment(a, b);
        let e_xyz = m(0, -1);
        let want = e_xyz
            .sub(&m(0, 0).mul(&m(0, -1)))
            .sub(&m(1, -1).mul(&m(-1, 0)))
            .sub(&m(-1, -1).mul(&m(1, 0)))
            .add(&m(1, 0).mul(&m(-1, 0)).mul(&m(0, -1)).scale(&qi(2)));
        assert_eq!(at_one(&connected_slots(&[x, y, z]).unwrap()), want);
    }
}
