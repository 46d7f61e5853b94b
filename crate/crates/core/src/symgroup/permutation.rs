use std::fmt;

use super::partition::Partition;
use crate::error::{Error, Result};

/// Permutation of `{0, .., n-1}` stored by images. Text and constructors that
/// say "one-based" use `{1, .., n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n as u8).collect())
    }

    /// From one-based images, e.g. `[2, 3, 1]` for the cycle `(1 2 3)`.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut v = Vec::with_capacity(n);
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::Invalid(format!("not a permutation: {images:?}")));
            }
            seen[x - 1] = true;
            v.push((x - 1) as u8);
        }
        Ok(Permutation(v))
    }

    /// Transposition of the zero-based points `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(n);
        p.0.swap(a, b);
        p
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `self * other`, acting as `x -> self(other(x))`.
    pub fn compose(&self, other: &Self) -> Self {
        Permutation(other.0.iter().map(|&x| self.0[x as usize]).collect())
    }

    /// `self * (a b)` without allocating a transposition.
    pub fn times_transposition(&self, a: usize, b: usize) -> Self {
        let mut v = self.0.clone();
        v.swap(a, b);
        Permutation(v)
    }

    pub fn inverse(&self) -> Self {
        let mut v = vec![0u8; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            v[x as usize] = i as u8;
        }
        Permutation(v)
    }

    /// Cycles, each starting at its smallest element, ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut c = vec![s];
            seen[s] = true;
            let mut x = self.0[s] as usize;
            while x != s {
                seen[x] = true;
                c.push(x);
                x = self.0[x] as usize;
            }
            out.push(c);
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::new(self.cycles().iter().map(|c| c.len() as u32).collect()).expect("cycle lengths are positive")
    }

    /// Number of cycles, fixed points included.
    pub fn num_cycles(&self) -> usize {
        self.cycles().len()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nontrivial: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if nontrivial.is_empty() {
            return write!(f, "()");
        }
        for c in nontrivial {
            let s: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", s.join(" "))?;
        }
        Ok(())
    }
}

/// Every permutation of cycle type `lambda` on `n` points, each exactly once.
///
/// Canonical construction: the cycle through the smallest unused point is
/// chosen next, with a length drawn from the remaining distinct parts.
pub fn conjugacy_class(lambda: &Partition, n: usize) -> Result<impl Iterator<Item = Permutation>> {
    if lambda.weight() as usize != n {
        return Err(Error::WeightMismatch(lambda.weight() as usize, n));
    }
    fn go(images: &mut Vec<u8>, used: &mut Vec<bool>, parts: &mut Vec<u32>, out: &mut Vec<Permutation>) {
        let Some(start) = used.iter().position(|&u| !u) else {
            out.push(Permutation(images.clone()));
            return;
        };
        let mut lens: Vec<u32> = parts.clone();
        lens.dedup();
        for len in lens {
            let pos = parts.iter().position(|&p| p == len).unwrap();
            parts.remove(pos);
            used[start] = true;
            let mut cyc = vec![start];
            extend(images, used, parts, out, &mut cyc, len as usize);
            used[start] = false;
            parts.insert(pos, len);
        }
    }
    fn extend(
        images: &mut Vec<u8>,
        used: &mut Vec<bool>,
        parts: &mut Vec<u32>,
        out: &mut Vec<Permutation>,
        cyc: &mut Vec<usize>,
        len: usize,
    ) {
        if cyc.len() == len {
            for w in 0..len {
                images[cyc[w]] = cyc[(w + 1) % len] as u8;
            }
            go(images, used, parts, out);
            return;
        }
        for x in 0..used.len() {
            if used[x] {
                continue;
            }
            used[x] = true;
            cyc.push(x);
            extend(images, used, parts, out, cyc, len);
            cyc.pop();
            used[x] = false;
        }
    }
    let mut out = Vec::new();
    let mut parts = lambda.parts().to_vec();
    go(&mut vec![0u8; n], &mut vec![false; n], &mut parts, &mut out);
    Ok(out.into_iter())
}

/// True iff the group generated by `perms` acts transitively on `n` points.
pub fn is_transitive(perms: &[Permutation], n: usize) -> bool {
    if n == 0 {
        return true;
    }
    let mut uf = UnionFind::new(n);
    for p in perms {
        for (i, &x) in p.0.iter().enumerate() {
            uf.union(i, x as usize);
        }
    }
    uf.components() == 1
}

/// Disjoint-set forest over `0..n`.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    count: usize,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), count: n }
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            let next = self.parent[y];
            self.parent[y] = r;
            y = next;
        }
        r
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
            self.count -= 1;
        }
    }

    pub fn components(&self) -> usize {
        self.count
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(v: &[usize]) -> Permutation {
        Permutation::from_one_based(v).unwrap()
    }

    #[test]
    fn cycle_types() {
        assert_eq!(Permutation::identity(3).cycle_type().to_string(), "1,1,1");
        assert_eq!(perm(&[2, 3, 1]).cycle_type().to_string(), "3");
        assert_eq!(perm(&[2, 1, 3]).cycle_type().to_string(), "2,1");
        assert_eq!(perm(&[2, 3, 1]).to_string(), "(1 2 3)");
    }

    #[test]
    fn classes() {
        let c: Vec<_> = conjugacy_class(&"2,1".parse().unwrap(), 3).unwrap().collect();
        assert_eq!(c.len(), 3);
        let c: Vec<_> = conjugacy_class(&"3".parse().unwrap(), 3).unwrap().collect();
        assert_eq!(c.len(), 2);
        assert!(c.contains(&perm(&[2, 3, 1])) && c.contains(&perm(&[3, 1, 2])));
        let c: Vec<_> = conjugacy_class(&"1,1,1".parse().unwrap(), 3).unwrap().collect();
        assert_eq!(c, vec![Permutation::identity(3)]);
        assert!(conjugacy_class(&"2".parse().unwrap(), 3).is_err());
    }

    #[test]
    fn transitivity() {
        assert!(is_transitive(&[perm(&[2, 3, 1])], 3));
        assert!(!is_transitive(&[Permutation::identity(2)], 2));
        assert!(is_transitive(&[perm(&[2, 1, 3]), perm(&[3, 2, 1])], 3));
    }

    #[test]
    fn composition_order() {
        let a = perm(&[2, 1, 3]);
        let b = perm(&[1, 3, 2]);
        // (1 2)(2 3) sends 3 -> 2 -> 1
        assert_eq!(a.compose(&b).apply(2), 0);
        assert!(a.compose(&a.inverse()).is_identity());
        assert_eq!(Permutation::identity(3).times_transposition(0, 1), a);
    }
}
