//! Irreducible characters of the symmetric group by the Murnaghan–Nakayama rule.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use super::partition::Partition;
use crate::error::{Error, Result};

type Cache = RwLock<HashMap<(Partition, Partition), i64>>;

fn cache() -> &'static Cache {
    static C: OnceLock<Cache> = OnceLock::new();
    C.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `chi_lambda^mu`, the character of the irreducible indexed by `lambda` on class `mu`.
pub fn character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.weight() != mu.weight() {
        return Err(Error::WeightMismatch(lambda.weight() as usize, mu.weight() as usize));
    }
    Ok(mn(lambda, mu))
}

fn mn(lambda: &Partition, mu: &Partition) -> i64 {
    if mu.is_empty() {
        return 1;
    }
    let key = (lambda.clone(), mu.clone());
    if let Some(&v) = cache().read().unwrap().get(&key) {
        return v;
    }
    // Remove a rim hook of length k = mu_1 by sliding a bead on the abacus.
    let k = mu.parts()[0] as i64;
    let rest = Partition::new(mu.parts()[1..].to_vec()).unwrap();
    let l = lambda.length() as i64;
    let beta: Vec<i64> = lambda.parts().iter().enumerate().map(|(i, &p)| p as i64 + l - 1 - i as i64).collect();
    let mut total = 0i64;
    for (idx, &b) in beta.iter().enumerate() {
        let t = b - k;
        if t < 0 || beta.contains(&t) {
            continue;
        }
        let height = beta.iter().filter(|&&x| x > t && x < b).count();
        let mut nb = beta.clone();
        nb[idx] = t;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let m = nb.len() as i64;
        let parts: Vec<u32> = nb
            .iter()
            .enumerate()
            .map(|(i, &x)| (x - (m - 1 - i as i64)) as u32)
            .filter(|&p| p > 0)
            .collect();
        let sub = Partition::new(parts).unwrap();
        let sign = if height % 2 == 0 { 1 } else { -1 };
        total += sign * mn(&sub, &rest);
    }
    cache().write().unwrap().insert(key, total);
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symgroup::partition::partitions_of;
    use num_bigint::BigInt;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn small_values() {
        for mu in partitions_of(4) {
            assert_eq!(character(&p("4"), &mu).unwrap(), 1);
        }
        for l in partitions_of(5) {
            assert_eq!(BigInt::from(character(&l, &Partition::ones(5)).unwrap()), l.dim());
        }
        assert_eq!(character(&p("1,1"), &p("2")).unwrap(), -1);
        assert_eq!(character(&p("2,1"), &p("3")).unwrap(), -1);
        assert_eq!(character(&p("2,1"), &p("2,1")).unwrap(), 0);
        assert!(character(&p("2"), &p("1")).is_err());
        assert_eq!(character(&Partition::empty(), &Partition::empty()).unwrap(), 1);
    }
}
