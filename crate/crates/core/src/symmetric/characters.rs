//! Irreducible characters of `S_n` by the Murnaghan–Nakayama rule on
//! beta-sets.

use std::collections::HashMap;

use super::{partitions, Partition, Perm};
use crate::{Error, Result};

/// Largest `n` for which a character table is built.
pub const MAX_TABLE_N: usize = 9;

/// `values[i][j] = χ_{partitions[i]}(class of cycle type classes[j])`. Rows
/// and columns both follow [`partitions`] order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharTable {
    n: usize,
    partitions: Vec<Partition>,
    values: Vec<Vec<i64>>,
    index: HashMap<Partition, usize>,
}

impl CharTable {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Irreducibles and classes share this list.
    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    fn idx(&self, p: &Partition) -> usize {
        self.index_of(p).unwrap_or_else(|| panic!("{p} is not a partition of {}", self.n))
    }

    /// `χ_p` on the class with cycle type `mu`.
    pub fn value(&self, p: &Partition, mu: &Partition) -> i64 {
        self.values[self.idx(p)][self.idx(mu)]
    }

    pub fn value_at(&self, p: &Partition, sigma: &Perm) -> i64 {
        self.value(p, &sigma.cycle_type())
    }

    pub fn row(&self, p: &Partition) -> &[i64] {
        &self.values[self.idx(p)]
    }

    pub fn dimension(&self, p: &Partition) -> i64 {
        let id = Partition(vec![1; self.n]);
        self.value(p, &id)
    }

    /// Row and column orthogonality with class sizes, exactly.
    pub fn orthogonality_holds(&self) -> bool {
        let sizes: Vec<i128> = self.partitions.iter().map(|c| c.class_size() as i128).collect();
        let order: i128 = sizes.iter().sum();
        let k = self.partitions.len();
        let rows = (0..k).all(|a| {
            (0..k).all(|b| {
                let s: i128 =
                    (0..k).map(|j| sizes[j] * (self.values[a][j] as i128) * (self.values[b][j] as i128)).sum();
                s == if a == b { order } else { 0 }
            })
        });
        let cols = (0..k).all(|a| {
            (0..k).all(|b| {
                let s: i128 = (0..k).map(|i| (self.values[i][a] as i128) * (self.values[i][b] as i128)).sum();
                s == if a == b { order / sizes[a] } else { 0 }
            })
        });
        rows && cols
    }
}

pub fn character_table(n: usize) -> Result<CharTable> {
    if n == 0 || n > MAX_TABLE_N {
        return Err(Error::SizeLimit { what: "character table degree", size: n as u128, limit: MAX_TABLE_N as u128 });
    }
    let parts = partitions(n);
    let mut memo = HashMap::new();
    let values = parts
        .iter()
        .map(|p| {
            let k = p.len();
            let beta: Vec<usize> = p.parts().iter().enumerate().map(|(i, &x)| x + k - 1 - i).collect();
            parts.iter().map(|mu| mn(beta.clone(), mu.parts(), &mut memo)).collect()
        })
        .collect();
    let index = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    Ok(CharTable { n, partitions: parts, values, index })
}

/// Murnaghan–Nakayama: remove a rim hook of length `mu[0]`, i.e. lower one
/// bead of the beta-set by `mu[0]` onto a free position, with sign
/// `(−1)^{beads jumped}`.
fn mn(mut beta: Vec<usize>, mu: &[usize], memo: &mut HashMap<(Vec<usize>, Vec<usize>), i64>) -> i64 {
    if mu.is_empty() {
        return 1;
    }
    beta.sort_unstable();
    let key = (beta.clone(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let r = mu[0];
    let mut total = 0;
    for (i, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let jumped = beta.iter().filter(|&&c| c > b - r && c < b).count();
        let mut next = beta.clone();
        next[i] = b - r;
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        total += sign * mn(next, &mu[1..], memo);
    }
    memo.insert(key, total);
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmetric::{all_perms, part};

    #[test]
    fn s3_table() {
        let t = character_table(3).unwrap();
        let std = part(&[2, 1]);
        assert_eq!(t.dimension(&std), 2);
        assert_eq!(t.value(&std, &part(&[3])), -1);
        assert_eq!(t.value(&std, &part(&[2, 1])), 0);
        assert_eq!(t.row(&part(&[1, 1, 1])), &[1, -1, 1]);
        assert!(t.row(&part(&[3])).iter().all(|&x| x == 1));
    }

    #[test]
    fn orthogonality() {
        for n in 1..=7 {
            let t = character_table(n).unwrap();
            assert!(t.orthogonality_holds(), "n = {n}");
            for p in t.partitions() {
                assert_eq!(t.dimension(p) as u128, p.dimension());
            }
        }
        assert!(character_table(10).is_err());
    }

    #[test]
    fn sign_and_conjugate_rows() {
        let t = character_table(5).unwrap();
        let sign = Partition(vec![1; 5]);
        for sigma in all_perms(5).unwrap() {
            let s = if sigma.is_even() { 1 } else { -1 };
            assert_eq!(t.value_at(&sign, &sigma), s);
            for p in t.partitions() {
                assert_eq!(t.value_at(&p.conjugate(), &sigma), s * t.value_at(p, &sigma));
            }
        }
    }
}
