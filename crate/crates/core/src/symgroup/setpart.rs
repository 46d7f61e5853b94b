/// Set partition of `{0, .., l-1}`; blocks sorted, each block sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetPartition {
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Moebius weight `(-1)^{|P|-1} (|P|-1)!` of the partition lattice.
    pub fn moebius(&self) -> i64 {
        let k = self.blocks.len() as i64;
        let f: i64 = (1..k).product();
        if (k - 1) % 2 == 0 {
            f
        } else {
            -f
        }
    }
}

/// All set partitions of `l` points via restricted growth strings; Bell(l) of them.
pub fn set_partitions(l: usize) -> Vec<SetPartition> {
    fn go(i: usize, l: usize, rgs: &mut Vec<usize>, max: usize, out: &mut Vec<SetPartition>) {
        if i == l {
            let k = rgs.iter().copied().max().map_or(0, |m| m + 1);
            let mut blocks = vec![Vec::new(); k];
            for (x, &b) in rgs.iter().enumerate() {
                blocks[b].push(x);
            }
            out.push(SetPartition { blocks });
            return;
        }
        let top = if i == 0 { 0 } else { max + 1 };
        for b in 0..=top {
            rgs.push(b);
            go(i + 1, l, rgs, max.max(b), out);
            rgs.pop();
        }
    }
    let mut out = Vec::new();
    go(0, l, &mut Vec::with_capacity(l), 0, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bell_numbers() {
        let c: Vec<usize> = (1..=6).map(|l| set_partitions(l).len()).collect();
        assert_eq!(c, vec![1, 2, 5, 15, 52, 203]);
    }

    #[test]
    fn blocks_cover() {
        for p in set_partitions(4) {
            let mut all: Vec<usize> = p.blocks().concat();
            all.sort();
            assert_eq!(all, vec![0, 1, 2, 3]);
        }
        assert_eq!(set_partitions(3)[0].moebius(), 1);
        let last = set_partitions(3).pop().unwrap();
        assert_eq!(last.len(), 3);
        assert_eq!(last.moebius(), 2);
    }
}
