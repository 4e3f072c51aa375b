//! Brute-force reference implementations.
//!
//! These deliberately avoid the code-based machinery of the rest of the
//! crate and are only meant for small sizes.

use crate::codes::lk_labels;
use crate::dyck::DyckPath;

/// Catalan numbers from `C_{n+1} = Σ C_i C_{n-i}`.
pub fn catalan_by_recurrence(n: usize) -> u64 {
    let mut c = vec![1u64];
    for m in 0..n {
        c.push((0..=m).map(|i| c[i] * c[m - i]).sum());
    }
    c[n]
}

/// Cubic scan for a decreasing subsequence of length three.
pub fn contains_321_naive(values: &[usize]) -> bool {
    let n = values.len();
    (0..n).any(|i| {
        (i + 1..n).any(|j| values[i] > values[j] && (j + 1..n).any(|k| values[j] > values[k]))
    })
}

/// Every permutation of `1..=n` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut cur: Vec<usize> = (1..=n).collect();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

/// 321-avoiders of `1..=n` by filtering all `n!` permutations.
pub fn filtered_321_avoiders(n: usize) -> Vec<Vec<usize>> {
    all_permutations(n)
        .into_iter()
        .filter(|p| !contains_321_naive(p))
        .collect()
}

/// `M` as the literal product `(1 2 … n) σ_1 σ_2 … σ_r` where
/// `σ_i = s_{h_i} s_{h_i - 1} … s_{t_i}` and each `s_j` swaps the entries
/// in positions `j` and `j + 1`, applied left to right.
pub fn m_by_transpositions(path: &DyckPath) -> Vec<usize> {
    let Ok(labels) = lk_labels(path) else {
        return Vec::new();
    };
    let mut line: Vec<usize> = (1..=path.size()).collect();
    for (&h, &t) in labels.a().iter().zip(labels.d()) {
        for j in (t..=h).rev() {
            line.swap(j - 1, j);
        }
    }
    line
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_values() {
        let first: Vec<u64> = (0..=12).map(catalan_by_recurrence).collect();
        assert_eq!(
            first,
            [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012]
        );
    }

    #[test]
    fn naive_pattern_check() {
        assert!(contains_321_naive(&[3, 2, 1]));
        assert!(contains_321_naive(&[4, 1, 3, 2]));
        assert!(contains_321_naive(&[4, 1, 3, 7, 2, 5, 8, 9, 6]));
        assert!(!contains_321_naive(&[4, 1, 2, 7, 3, 5, 8, 9, 6]));
    }

    #[test]
    fn filtered_counts_are_catalan() {
        for n in 0..=7 {
            assert_eq!(filtered_321_avoiders(n).len() as u64, catalan_by_recurrence(n));
        }
        assert_eq!(all_permutations(4).len(), 24);
    }

    #[test]
    fn transposition_product_on_worked_example() {
        let path: DyckPath = "UDUDUUDUUDDDUUUDDDUD".parse().unwrap();
        assert_eq!(m_by_transpositions(&path), vec![1, 2, 5, 3, 6, 4, 8, 9, 7, 10]);
        assert_eq!(m_by_transpositions(&"UUDD".parse().unwrap()), vec![2, 1]);
    }
}
