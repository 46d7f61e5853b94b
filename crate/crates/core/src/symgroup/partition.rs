use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::Rational;

/// Integer partition stored as weakly decreasing positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Sorts the parts; zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Invalid("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(1^n)`
    pub fn ones(n: u32) -> Self {
        Partition(vec![1; n as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of parts, written `l(lambda)`.
    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `m_i` for `i = 1..=max part` (index 0 unused).
    pub fn multiplicities(&self) -> Vec<u32> {
        let top = self.0.first().copied().unwrap_or(0) as usize;
        let mut m = vec![0u32; top + 1];
        for &p in &self.0 {
            m[p as usize] += 1;
        }
        m
    }

    /// Centralizer order `prod_i i^{m_i} m_i!`.
    pub fn z(&self) -> BigInt {
        let mut acc = BigInt::one();
        for (i, &m) in self.multiplicities().iter().enumerate().skip(1) {
            for k in 1..=m {
                acc *= BigInt::from(i) * BigInt::from(k);
            }
        }
        acc
    }

    /// Boxes `(i, j)` of the diagram, 1-based.
    pub fn boxes(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len as i64).map(move |j| (r as i64 + 1, j)))
    }

    /// Contents `j - i` of every box.
    pub fn contents(&self) -> Vec<i64> {
        self.boxes().map(|(i, j)| j - i).collect()
    }

    /// Conjugate partition (column lengths).
    pub fn conjugate(&self) -> Partition {
        let top = self.0.first().copied().unwrap_or(0);
        Partition((1..=top).map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32).collect())
    }

    /// Dimension of the irreducible representation, by the hook-length formula.
    pub fn dim_hook(&self) -> BigInt {
        let conj = self.conjugate();
        let mut hooks = BigInt::one();
        for (i, j) in self.boxes() {
            let arm = self.0[(i - 1) as usize] as i64 - j;
            let leg = conj.0[(j - 1) as usize] as i64 - i;
            hooks *= BigInt::from(arm + leg + 1);
        }
        factorial(self.weight()) / hooks
    }

    /// `dim(lambda) / |lambda|!` by the Vandermonde-type product, evaluated with
    /// `N = l(lambda)` rows.
    pub fn dim_over_factorial(&self) -> Rational {
        let n = self.length();
        let lam = |i: usize| self.0[i] as i64;
        let mut num = BigInt::one();
        for i in 0..n {
            for j in i + 1..n {
                num *= BigInt::from(lam(i) - lam(j) + (j as i64 - i as i64));
            }
        }
        let mut den = BigInt::one();
        for k in 0..n {
            // lambda_k - k + N with 1-based k
            den *= factorial((lam(k) - (k as i64 + 1) + n as i64) as u32);
        }
        Rational::new(num, den)
    }

    /// `dim(lambda)` from [`Self::dim_over_factorial`], checked against the hook formula.
    pub fn dim(&self) -> BigInt {
        let d = self.dim_over_factorial() * Rational::from_integer(factorial(self.weight()));
        debug_assert!(d.is_integer());
        let d = d.to_integer();
        debug_assert_eq!(d, self.dim_hook());
        d
    }

    /// Sub-multiset of parts selected by index.
    pub fn select(&self, idx: &[usize]) -> Partition {
        let mut v: Vec<u32> = idx.iter().map(|&i| self.0[i]).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    /// Partition with a part removed (by value).
    pub fn without_part(&self, part: u32) -> Option<Partition> {
        let pos = self.0.iter().position(|&p| p == part)?;
        let mut v = self.0.clone();
        v.remove(pos);
        Some(Partition(v))
    }
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// All partitions of `n` in reverse lexicographic order: `(n), (n-1,1), ...`.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        let mut pos = 0;
        for tok in s.split(',') {
            let t = tok.trim();
            let v: u32 = t.parse().map_err(|_| Error::Parse { pos, msg: format!("bad part '{t}'") })?;
            if v == 0 {
                return Err(Error::Parse { pos, msg: "parts must be positive".into() });
            }
            parts.push(v);
            pos += tok.len() + 1;
        }
        Partition::new(parts)
    }
}
