//! Integer partitions as multiplicity vectors.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::factorial;

/// A partition of `k` stored as counts: `n_i` copies of part `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PartitionMultiplicities {
    k: u32,
    /// `counts[i - 1] = n_i`, length `k`.
    counts: Vec<u32>,
}

impl PartitionMultiplicities {
    fn from_parts(k: u32, parts: &[u32]) -> Self {
        let mut counts = vec![0; k as usize];
        for &p in parts {
            counts[p as usize - 1] += 1;
        }
        PartitionMultiplicities { k, counts }
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// `n_i`; zero for sizes that do not occur.
    pub fn multiplicity(&self, i: u32) -> u32 {
        if i == 0 {
            return 0;
        }
        self.counts.get(i as usize - 1).copied().unwrap_or(0)
    }

    /// The vector `(n_1, ..., n_k)`.
    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    /// `N = sum n_i`.
    pub fn total_parts(&self) -> u32 {
        self.counts.iter().sum()
    }

    /// Parts in descending order, e.g. `[3, 1, 1]`.
    pub fn parts(&self) -> Vec<u32> {
        (1..=self.k)
            .rev()
            .flat_map(|i| std::iter::repeat_n(i, self.multiplicity(i) as usize))
            .collect()
    }

    /// `(size, count)` pairs for the sizes that occur, ascending.
    pub fn nonzero(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, &c)| (i as u32 + 1, c))
    }
}

impl std::fmt::Display for PartitionMultiplicities {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.parts().iter().map(|p| p.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Partitions of `k` in reverse lexicographic order of their descending
/// part lists, starting from `{k}` and ending at `{1,...,1}`.
pub struct Partitions {
    k: u32,
    parts: Option<Vec<u32>>,
}

pub fn enumerate_partitions(k: u32) -> Partitions {
    let first = if k == 0 { Vec::new() } else { vec![k] };
    Partitions {
        k,
        parts: Some(first),
    }
}

impl Iterator for Partitions {
    type Item = PartitionMultiplicities;

    fn next(&mut self) -> Option<Self::Item> {
        let current = self.parts.take()?;
        let out = PartitionMultiplicities::from_parts(self.k, &current);
        self.parts = successor(current);
        Some(out)
    }
}

/// Next partition in reverse lexicographic order, or `None` after all ones.
fn successor(mut parts: Vec<u32>) -> Option<Vec<u32>> {
    let mut ones = 0;
    while parts.last() == Some(&1) {
        parts.pop();
        ones += 1;
    }
    let last = parts.pop()?;
    let size = last - 1;
    let mut rest = ones + 1;
    parts.push(size);
    while rest >= size {
        parts.push(size);
        rest -= size;
    }
    if rest > 0 {
        parts.push(rest);
    }
    Some(parts)
}

/// `N! / prod n_i!`
pub fn multinomial_factor(p: &PartitionMultiplicities) -> BigInt {
    p.nonzero()
        .fold(factorial(p.total_parts()), |acc, (_, c)| acc / factorial(c))
}

/// p(k) from Euler's pentagonal-number recurrence.
pub fn partition_count(k: u32) -> BigInt {
    let k = k as usize;
    let mut p = vec![BigInt::zero(); k + 1];
    p[0] = BigInt::one();
    for n in 1..=k {
        let mut acc = BigInt::zero();
        for j in 1.. {
            let g1 = j * (3 * j - 1) / 2;
            if g1 > n {
                break;
            }
            let positive = j % 2 == 1;
            let mut term = p[n - g1].clone();
            let g2 = j * (3 * j + 1) / 2;
            if g2 <= n {
                term += &p[n - g2];
            }
            if positive {
                acc += term;
            } else {
                acc -= term;
            }
        }
        p[n] = acc;
    }
    p[k].clone()
}

/// Rows of `(n_1, ..., n_k)` for display, one per partition.
pub fn multiplicity_rows(k: u32) -> Vec<Vec<u32>> {
    enumerate_partitions(k)
        .map(|p| p.counts().to_vec())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn partitions_of_five_in_order() {
        let got: Vec<Vec<u32>> = enumerate_partitions(5).map(|p| p.parts()).collect();
        let want = vec![
            vec![5],
            vec![4, 1],
            vec![3, 2],
            vec![3, 1, 1],
            vec![2, 2, 1],
            vec![2, 1, 1, 1],
            vec![1, 1, 1, 1, 1],
        ];
        assert_eq!(got, want);
        assert_eq!(multiplicity_rows(5)[3], vec![2, 0, 1, 0, 0]);
    }

    #[test]
    fn small_cases() {
        let one: Vec<_> = enumerate_partitions(1).collect();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].parts(), vec![1]);
        let zero: Vec<_> = enumerate_partitions(0).collect();
        assert_eq!(zero.len(), 1);
        assert_eq!(zero[0].total_parts(), 0);
    }

    #[test]
    fn multinomials() {
        let p = PartitionMultiplicities::from_parts(5, &[2, 1, 1, 1]);
        assert_eq!(multinomial_factor(&p), BigInt::from(4));
        assert_eq!(
            multinomial_factor(&PartitionMultiplicities::from_parts(5, &[5])),
            BigInt::one()
        );
        assert_eq!(
            multinomial_factor(&PartitionMultiplicities::from_parts(5, &[3, 2])),
            BigInt::from(2)
        );
    }

    #[test]
    fn counts() {
        assert_eq!(partition_count(0), BigInt::one());
        assert_eq!(partition_count(5), BigInt::from(7));
        assert_eq!(partition_count(10), BigInt::from(42));
        assert_eq!(partition_count(40), BigInt::from(37338));
        assert_eq!(enumerate_partitions(40).count(), 37338);
    }

    #[test]
    fn enumeration_is_complete_and_valid() {
        for k in 0..=30u32 {
            let mut seen = HashSet::new();
            let mut n = 0u64;
            for p in enumerate_partitions(k) {
                let weight: u32 = p.nonzero().map(|(i, c)| i * c).sum();
                assert_eq!(weight, k);
                assert!(seen.insert(serde_json::to_string(&p).unwrap()));
                n += 1;
            }
            assert_eq!(BigInt::from(n), partition_count(k));
        }
    }

    #[test]
    fn order_is_strictly_decreasing() {
        let all: Vec<Vec<u32>> = enumerate_partitions(12).map(|p| p.parts()).collect();
        for w in all.windows(2) {
            assert!(w[0] > w[1]);
        }
    }
}
