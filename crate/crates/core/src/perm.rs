//! 321-avoiding permutations and their two codes.
//!
//! A permutation avoids 321 exactly when the entries that are not
//! left-to-right maxima form an increasing sequence, so it is determined by
//! its left-to-right maxima and their positions.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::codes::{AdCode, CodeRole, CodeViolation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("not a permutation of 1..={n}: {reason}")]
    NotAPermutation { n: usize, reason: String },
    #[error("contains 321 pattern at positions ({0}, {1}, {2})")]
    Contains321(usize, usize, usize),
    #[error("bad permutation text: {0:?}")]
    Syntax(String),
}

/// Checks that `values` is a permutation of `1..=n` and avoids 321.
/// On a pattern, reports 1-based positions `i < j < k` with
/// `values[i] > values[j] > values[k]`.
pub fn validate_321(values: &[usize]) -> Result<(), PermError> {
    let n = values.len();
    let mut seen = vec![false; n + 1];
    for &v in values {
        if v == 0 || v > n {
            return Err(PermError::NotAPermutation {
                n,
                reason: format!("value {v} out of range"),
            });
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(PermError::NotAPermutation {
                n,
                reason: format!("value {v} repeated"),
            });
        }
    }
    // (position, value) of the running maximum and of the last non-maximum
    let mut max: Option<(usize, usize)> = None;
    let mut last_low: Option<(usize, usize, usize)> = None;
    for (j, &v) in values.iter().enumerate() {
        match max {
            Some((_, m)) if v < m => {
                if let Some((h, i, prev)) = last_low {
                    if v < prev {
                        return Err(PermError::Contains321(h + 1, i + 1, j + 1));
                    }
                }
                last_low = Some((max.unwrap().0, j, v));
            }
            _ => max = Some((j, v)),
        }
    }
    Ok(())
}

/// One-line notation of a 321-avoiding permutation of `1..=n` (`n` may be 0).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm321(Vec<usize>);

impl Perm321 {
    pub fn new(values: Vec<usize>) -> Result<Self, PermError> {
        validate_321(&values)?;
        Ok(Perm321(values))
    }

    pub fn identity(n: usize) -> Self {
        Perm321((1..=n).collect())
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Fixed points, 1-based.
    pub fn fixed_points(&self) -> Vec<usize> {
        (1..=self.len()).filter(|&i| self.0[i - 1] == i).collect()
    }

    /// Values `π(i)` with `π(i) >= i`, left to right.
    pub fn weak_excedance_values(&self) -> Vec<usize> {
        (1..=self.len())
            .filter(|&i| self.0[i - 1] >= i)
            .map(|i| self.0[i - 1])
            .collect()
    }

    pub fn lrmax_skeleton(&self) -> LrMaxSkeleton {
        lrmax_skeleton(&self.0)
    }

    /// Panics on the empty permutation.
    pub fn lrmax_code(&self) -> AdCode {
        assert!(!self.is_empty(), "the empty permutation has no code");
        lrmax_code(&self.0)
    }

    /// Panics on the empty permutation.
    pub fn excedance_code(&self) -> AdCode {
        assert!(!self.is_empty(), "the empty permutation has no code");
        excedance_code(&self.0).expect("excedances of a 321-avoider satisfy the code conditions")
    }

    /// Left-to-right maxima are `A` with `n` appended, at positions `1, D + 1`.
    pub fn from_lrmax_code(code: &AdCode) -> Perm321 {
        let n = code.n();
        let placed = std::iter::once(1)
            .chain(code.d().iter().map(|d| d + 1))
            .zip(code.a().iter().copied().chain(std::iter::once(n)));
        Perm321(fill_increasing(n, placed))
    }

    /// Value `A_i + 1` sits at position `D_i`.
    pub fn from_excedance_code(code: &AdCode) -> Perm321 {
        let placed = code.d().iter().copied().zip(code.a().iter().map(|a| a + 1));
        Perm321(fill_increasing(code.n(), placed))
    }
}

/// Left-to-right maxima of any sequence, with their 1-based positions.
pub fn lrmax_skeleton(values: &[usize]) -> LrMaxSkeleton {
    let mut maxima = Vec::new();
    let mut positions = Vec::new();
    for (i, &v) in values.iter().enumerate() {
        if maxima.last().is_none_or(|&m| v > m) {
            maxima.push(v);
            positions.push(i + 1);
        }
    }
    LrMaxSkeleton {
        values: maxima,
        positions,
    }
}

/// LRMax code of a nonempty permutation: drop `m_k = n` and `p_1 = 1` from
/// the skeleton and shift the remaining positions down by one.
///
/// Defined for every permutation, but it determines the permutation only
/// when the permutation avoids 321.
pub fn lrmax_code(values: &[usize]) -> AdCode {
    let sk = lrmax_skeleton(values);
    let k = sk.values.len();
    let a = sk.values[..k - 1].to_vec();
    let d = sk.positions[1..].iter().map(|p| p - 1).collect();
    AdCode::new(values.len(), a, d)
        .expect("an LRMax skeleton always satisfies the code conditions")
        .with_role(CodeRole::LrMax)
}

/// Excedance code of a nonempty permutation: strict excedance values minus
/// one over excedance locations. Fails when the excedance values are not
/// increasing, which cannot happen for a 321-avoider.
pub fn excedance_code(values: &[usize]) -> Result<AdCode, CodeViolation> {
    let (a, d) = (1..=values.len())
        .filter(|&i| values[i - 1] > i)
        .map(|i| (values[i - 1] - 1, i))
        .unzip();
    Ok(AdCode::new(values.len(), a, d)?.with_role(CodeRole::Excedance))
}

// Places the given (position, value) pairs, then fills the free positions
// with the unused values in increasing order.
fn fill_increasing(n: usize, placed: impl Iterator<Item = (usize, usize)>) -> Vec<usize> {
    let mut out = vec![0; n];
    let mut used = vec![false; n + 1];
    for (pos, val) in placed {
        out[pos - 1] = val;
        used[val] = true;
    }
    let mut free = (1..=n).filter(|&v| !used[v]);
    for slot in out.iter_mut().filter(|s| **s == 0) {
        *slot = free.next().expect("as many free values as free slots");
    }
    out
}

impl fmt::Display for Perm321 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.0 {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Perm321 {
    type Err = PermError;

    /// Space-separated one-line notation.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let values = s
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| PermError::Syntax(t.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Perm321::new(values)
    }
}

/// Values and positions (both 1-based, strictly increasing) of the
/// left-to-right maxima.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LrMaxSkeleton {
    pub values: Vec<usize>,
    pub positions: Vec<usize>,
}

impl LrMaxSkeleton {
    /// `p_{i+1} <= m_i + 1`: the first `m_i + 1` entries cannot all be `<= m_i`.
    pub fn satisfies_pigeonhole(&self) -> bool {
        self.positions
            .iter()
            .skip(1)
            .zip(&self.values)
            .all(|(&p, &m)| p <= m + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Perm321 {
        s.parse().unwrap()
    }

    fn code(n: usize, a: &[usize], d: &[usize]) -> AdCode {
        AdCode::new(n, a.to_vec(), d.to_vec()).unwrap()
    }

    #[test]
    fn validate_examples() {
        // the standard illustration of the LRMax decomposition is not itself 321-avoiding
        assert_eq!(
            validate_321(&[4, 1, 3, 7, 2, 5, 8, 9, 6]),
            Err(PermError::Contains321(1, 3, 5))
        );
        assert_eq!(validate_321(&[4, 1, 2, 7, 3, 5, 8, 9, 6]), Ok(()));
        assert_eq!(validate_321(&[3, 2, 1]), Err(PermError::Contains321(1, 2, 3)));
        assert_eq!(validate_321(&[5, 1, 4, 2, 3]), Err(PermError::Contains321(1, 3, 4)));
        assert_eq!(validate_321(&(1..=7).collect::<Vec<_>>()), Ok(()));
        assert_eq!(validate_321(&[]), Ok(()));
        assert!(matches!(
            validate_321(&[1, 1]),
            Err(PermError::NotAPermutation { .. })
        ));
        assert!(matches!(
            validate_321(&[0, 1]),
            Err(PermError::NotAPermutation { .. })
        ));
    }

    #[test]
    fn skeleton_examples() {
        let sk = lrmax_skeleton(&[4, 1, 3, 7, 2, 5, 8, 9, 6]);
        assert_eq!(sk.values, vec![4, 7, 8, 9]);
        assert_eq!(sk.positions, vec![1, 4, 7, 8]);
        assert_eq!(perm("4 1 2 7 3 5 8 9 6").lrmax_skeleton(), sk);
        assert!(sk.satisfies_pigeonhole());
        let sk = Perm321::identity(5).lrmax_skeleton();
        assert_eq!(sk.values, vec![1, 2, 3, 4, 5]);
        assert_eq!(sk.positions, vec![1, 2, 3, 4, 5]);
        let sk = perm("5 1 2 3 4").lrmax_skeleton();
        assert_eq!(sk.values, vec![5]);
        assert_eq!(sk.positions, vec![1]);
    }

    #[test]
    fn lrmax_code_examples() {
        assert_eq!(lrmax_code(&[4, 1, 3, 7, 2, 5, 8, 9, 6]), code(9, &[4, 7, 8], &[3, 6, 7]));
        assert_eq!(perm("4 1 2 7 3 5 8 9 6").lrmax_code(), code(9, &[4, 7, 8], &[3, 6, 7]));
        assert_eq!(
            Perm321::identity(5).lrmax_code(),
            code(5, &[1, 2, 3, 4], &[1, 2, 3, 4])
        );
        assert_eq!(
            perm("1 2 4 6 3 5 9 7 8 10").lrmax_code(),
            code(10, &[1, 2, 4, 6, 9], &[1, 2, 3, 6, 9])
        );
    }

    #[test]
    fn excedance_code_examples() {
        assert_eq!(
            excedance_code(&[4, 1, 3, 7, 2, 5, 8, 9, 6]),
            Ok(code(9, &[3, 6, 7, 8], &[1, 4, 7, 8]))
        );
        assert_eq!(
            perm("4 1 2 7 3 5 8 9 6").excedance_code(),
            code(9, &[3, 6, 7, 8], &[1, 4, 7, 8])
        );
        assert_eq!(
            excedance_code(&[3, 4, 1, 2]),
            Ok(code(4, &[2, 3], &[1, 2]))
        );
        assert!(excedance_code(&[4, 3, 1, 2]).is_err());
        assert_eq!(Perm321::identity(6).excedance_code(), code(6, &[], &[]));
        assert_eq!(
            perm("2 3 5 1 4 7 6 8 10 9").excedance_code(),
            code(10, &[1, 2, 4, 6, 9], &[1, 2, 3, 6, 9])
        );
    }

    #[test]
    fn reconstruction_examples() {
        let c = code(10, &[1, 2, 4, 6, 9], &[1, 2, 3, 6, 9]);
        assert_eq!(Perm321::from_lrmax_code(&c), perm("1 2 4 6 3 5 9 7 8 10"));
        assert_eq!(Perm321::from_excedance_code(&c), perm("2 3 5 1 4 7 6 8 10 9"));
        assert_eq!(Perm321::from_lrmax_code(&code(5, &[], &[])), perm("5 1 2 3 4"));
        assert_eq!(Perm321::from_lrmax_code(&code(1, &[], &[])), perm("1"));
        assert_eq!(Perm321::from_excedance_code(&code(4, &[], &[])), Perm321::identity(4));
        assert_eq!(
            Perm321::from_excedance_code(&code(10, &[4, 5, 7, 8], &[3, 5, 7, 8])),
            perm("1 2 5 3 6 4 8 9 7 10")
        );
    }

    #[test]
    fn text_round_trip() {
        let p = perm("2 3 5 1 4 7 6 8 10 9");
        assert_eq!(p.to_string(), "2 3 5 1 4 7 6 8 10 9");
        assert_eq!(perm(""), Perm321::identity(0));
        assert!(matches!("1 x".parse::<Perm321>(), Err(PermError::Syntax(_))));
        assert!(matches!(
            "3 2 1".parse::<Perm321>(),
            Err(PermError::Contains321(1, 2, 3))
        ));
    }
}
