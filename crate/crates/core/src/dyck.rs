//! Dyck paths: parsing, rendering, decomposition, enumeration.
//!
//! A path is stored as its step sequence. The empty path is a valid value
//! and renders as the empty string.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Largest size accepted by [`enumerate_dyck`]. Catalan(14) = 2 674 440.
pub const MAX_ENUM_SIZE: usize = 14;

/// A single Dyck step. `Up < Down`, which gives the lexicographic order
/// used for enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Up,
    Down,
}

impl Step {
    pub fn flipped(self) -> Step {
        match self {
            Step::Up => Step::Down,
            Step::Down => Step::Up,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Step::Up => 'U',
            Step::Down => 'D',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DyckError {
    #[error("unexpected character {ch:?} at index {index}")]
    ForeignChar { index: usize, ch: char },
    #[error("unbalanced path: {ups} up steps vs {downs} down steps (first unmatched step at index {index})")]
    Unbalanced {
        index: usize,
        ups: usize,
        downs: usize,
    },
    #[error("path dips below ground level at index {index}")]
    NegativePrefix { index: usize },
    #[error("operation requires a nonempty path")]
    Empty,
    #[error("path is not elevated: touches ground level at index {index}")]
    NotElevated { index: usize },
    #[error("size {size} exceeds the enumeration cap of {cap}")]
    CapExceeded { size: usize, cap: usize },
}

/// A balanced up/down sequence whose prefixes never go below zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn empty() -> Self {
        DyckPath { steps: Vec::new() }
    }

    /// Validates a raw step sequence.
    pub fn from_steps(steps: Vec<Step>) -> Result<Self, DyckError> {
        let mut height: isize = 0;
        let mut last_ground = 0;
        for (i, s) in steps.iter().enumerate() {
            height += match s {
                Step::Up => 1,
                Step::Down => -1,
            };
            if height < 0 {
                return Err(DyckError::NegativePrefix { index: i });
            }
            if height == 0 {
                last_ground = i + 1;
            }
        }
        if height != 0 {
            let ups = steps.iter().filter(|&&s| s == Step::Up).count();
            return Err(DyckError::Unbalanced {
                index: last_ground,
                ups,
                downs: steps.len() - ups,
            });
        }
        Ok(DyckPath { steps })
    }

    /// Builds `u^n d^n`.
    pub fn pyramid(n: usize) -> Self {
        let mut steps = vec![Step::Up; n];
        steps.extend(std::iter::repeat_n(Step::Down, n));
        DyckPath { steps }
    }

    /// Builds `(ud)^n`.
    pub fn zigzag(n: usize) -> Self {
        let steps = (0..n).flat_map(|_| [Step::Up, Step::Down]).collect();
        DyckPath { steps }
    }

    /// Builds the path with the given ascent and descent lengths.
    pub fn from_runs(ascents: &[usize], descents: &[usize]) -> Result<Self, DyckError> {
        let mut steps = Vec::new();
        for (&a, &d) in ascents.iter().zip(descents) {
            steps.extend(std::iter::repeat_n(Step::Up, a));
            steps.extend(std::iter::repeat_n(Step::Down, d));
        }
        DyckPath::from_steps(steps)
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Semilength.
    pub fn size(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Heights after each step; `heights()[0]` is 0, length is `2n + 1`.
    pub fn heights(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut h = 0usize;
        out.push(h);
        for s in &self.steps {
            match s {
                Step::Up => h += 1,
                Step::Down => h -= 1,
            }
            out.push(h);
        }
        out
    }

    pub fn is_elevated(&self) -> bool {
        !self.is_empty() && self.first_return() == self.steps.len()
    }

    // number of steps before the first return to ground
    fn first_return(&self) -> usize {
        let mut h = 0isize;
        for (i, s) in self.steps.iter().enumerate() {
            h += if *s == Step::Up { 1 } else { -1 };
            if h == 0 {
                return i + 1;
            }
        }
        self.steps.len()
    }

    /// Number of peaks (`ud` factors); equals the number of ascents.
    pub fn peaks(&self) -> usize {
        self.steps
            .windows(2)
            .filter(|w| w[0] == Step::Up && w[1] == Step::Down)
            .count()
    }

    pub fn count_uu(&self) -> usize {
        self.count_pair(Step::Up)
    }

    pub fn count_dd(&self) -> usize {
        self.count_pair(Step::Down)
    }

    fn count_pair(&self, s: Step) -> usize {
        self.steps.windows(2).filter(|w| w[0] == s && w[1] == s).count()
    }

    pub fn concat(parts: &[DyckPath]) -> DyckPath {
        DyckPath {
            steps: parts.iter().flat_map(|p| p.steps.iter().copied()).collect(),
        }
    }

    /// Reverse-path involution: reverse the sequence and exchange up with down.
    pub fn reverse(&self) -> DyckPath {
        DyckPath {
            steps: self.steps.iter().rev().map(|s| s.flipped()).collect(),
        }
    }

    /// Splits at every return to ground level.
    pub fn components(&self) -> Vec<DyckPath> {
        let mut out = Vec::new();
        let mut start = 0;
        let mut h = 0isize;
        for (i, s) in self.steps.iter().enumerate() {
            h += if *s == Step::Up { 1 } else { -1 };
            if h == 0 {
                out.push(DyckPath {
                    steps: self.steps[start..=i].to_vec(),
                });
                start = i + 1;
            }
        }
        out
    }

    /// `u · self · d`
    pub fn elevate(&self) -> DyckPath {
        let mut steps = Vec::with_capacity(self.steps.len() + 2);
        steps.push(Step::Up);
        steps.extend_from_slice(&self.steps);
        steps.push(Step::Down);
        DyckPath { steps }
    }

    /// Inverse of [`DyckPath::elevate`].
    pub fn unelevate(&self) -> Result<DyckPath, DyckError> {
        if self.is_empty() {
            return Err(DyckError::Empty);
        }
        let ret = self.first_return();
        if ret != self.steps.len() {
            return Err(DyckError::NotElevated { index: ret - 1 });
        }
        Ok(DyckPath {
            steps: self.steps[1..self.steps.len() - 1].to_vec(),
        })
    }

    /// Lengths of the maximal runs of up steps and of down steps.
    pub fn ascent_descent_lengths(&self) -> Result<(Vec<usize>, Vec<usize>), DyckError> {
        if self.is_empty() {
            return Err(DyckError::Empty);
        }
        let mut ascents = Vec::new();
        let mut descents = Vec::new();
        let mut i = 0;
        let s = &self.steps;
        while i < s.len() {
            let start = i;
            while i < s.len() && s[i] == s[start] {
                i += 1;
            }
            match s[start] {
                Step::Up => ascents.push(i - start),
                Step::Down => descents.push(i - start),
            }
        }
        Ok((ascents, descents))
    }

    pub fn to_letters(&self) -> String {
        self.steps.iter().map(|s| s.letter()).collect()
    }

    /// Draws the path with `/` and `\`, one column per step, highest row first.
    /// Trailing blanks are trimmed from each row.
    pub fn to_ascii_art(&self) -> String {
        let heights = self.heights();
        let top = heights.iter().copied().max().unwrap_or(0);
        let mut rows = vec![vec![' '; self.steps.len()]; top];
        for (i, s) in self.steps.iter().enumerate() {
            let (level, ch) = match s {
                Step::Up => (heights[i], '/'),
                Step::Down => (heights[i + 1], '\\'),
            };
            rows[top - 1 - level][i] = ch;
        }
        rows.iter()
            .map(|r| r.iter().collect::<String>().trim_end().to_string())
            .collect::<Vec<_>>()
            .join("\n")
    }

    /// Reads back a drawing produced by [`DyckPath::to_ascii_art`].
    pub fn from_ascii_art(art: &str) -> Result<DyckPath, DyckError> {
        let rows: Vec<Vec<char>> = art.lines().map(|l| l.chars().collect()).collect();
        let width = rows.iter().map(Vec::len).max().unwrap_or(0);
        let mut steps = Vec::with_capacity(width);
        for col in 0..width {
            let mut found = None;
            for row in &rows {
                match row.get(col).copied().unwrap_or(' ') {
                    ' ' => {}
                    '/' if found.is_none() => found = Some(Step::Up),
                    '\\' if found.is_none() => found = Some(Step::Down),
                    ch => return Err(DyckError::ForeignChar { index: col, ch }),
                }
            }
            match found {
                Some(s) => steps.push(s),
                None => return Err(DyckError::ForeignChar { index: col, ch: ' ' }),
            }
        }
        DyckPath::from_steps(steps)
    }
}

impl FromStr for DyckPath {
    type Err = DyckError;

    /// Parses `U`/`D` letters, case-insensitively.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let steps = text
            .chars()
            .enumerate()
            .map(|(index, ch)| match ch {
                'U' | 'u' => Ok(Step::Up),
                'D' | 'd' => Ok(Step::Down),
                _ => Err(DyckError::ForeignChar { index, ch }),
            })
            .collect::<Result<Vec<_>, _>>()?;
        DyckPath::from_steps(steps)
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.letter())?;
        }
        Ok(())
    }
}

pub fn parse_dyck(text: &str) -> Result<DyckPath, DyckError> {
    text.parse()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderStyle {
    Letters,
    AsciiArt,
}

pub fn render_dyck(path: &DyckPath, style: RenderStyle) -> String {
    match style {
        RenderStyle::Letters => path.to_letters(),
        RenderStyle::AsciiArt => path.to_ascii_art(),
    }
}

/// Lazily yields every Dyck path of size `n` in lexicographic order with `U < D`.
pub struct DyckIter {
    n: usize,
    current: Option<Vec<Step>>,
}

impl DyckIter {
    pub fn new(n: usize) -> Self {
        let first = DyckPath::pyramid(n).steps;
        DyckIter {
            n,
            current: Some(first),
        }
    }
}

impl Iterator for DyckIter {
    type Item = DyckPath;

    fn next(&mut self) -> Option<DyckPath> {
        let cur = self.current.take()?;
        self.current = lex_successor(&cur, self.n);
        Some(DyckPath { steps: cur })
    }
}

// Finds the rightmost U that can become D, then completes with the smallest suffix.
fn lex_successor(steps: &[Step], n: usize) -> Option<Vec<Step>> {
    let len = steps.len();
    let mut ups_before = vec![0usize; len + 1];
    for (i, s) in steps.iter().enumerate() {
        ups_before[i + 1] = ups_before[i] + usize::from(*s == Step::Up);
    }
    for i in (0..len).rev() {
        if steps[i] != Step::Up {
            continue;
        }
        let ups = ups_before[i];
        let downs = i - ups;
        // replace position i by D
        if downs + 1 > ups {
            continue;
        }
        let downs = downs + 1;
        let mut next = steps[..i].to_vec();
        next.push(Step::Down);
        next.extend(std::iter::repeat_n(Step::Up, n - ups));
        next.extend(std::iter::repeat_n(Step::Down, n - downs));
        return Some(next);
    }
    None
}

/// All Dyck paths of size `n` in lexicographic order (`U < D`).
pub fn enumerate_dyck(n: usize) -> Result<Vec<DyckPath>, DyckError> {
    if n > MAX_ENUM_SIZE {
        return Err(DyckError::CapExceeded {
            size: n,
            cap: MAX_ENUM_SIZE,
        });
    }
    Ok(DyckIter::new(n).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> DyckPath {
        s.parse().unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(p("UUDD").steps(), &[Step::Up, Step::Up, Step::Down, Step::Down]);
        let path3 = p("UDUDUUDUUDDDUUUDDDUD");
        assert_eq!(path3.size(), 10);
        assert_eq!(
            path3.ascent_descent_lengths().unwrap(),
            (vec![1, 1, 2, 2, 3, 1], vec![1, 1, 1, 3, 3, 1])
        );
        assert_eq!(p("uudd"), p("UUDD"));
    }

    #[test]
    fn parse_errors_name_offending_index() {
        assert_eq!(
            "UUD".parse::<DyckPath>(),
            Err(DyckError::Unbalanced {
                index: 0,
                ups: 2,
                downs: 1
            })
        );
        assert_eq!(
            "UDUUD".parse::<DyckPath>().unwrap_err(),
            DyckError::Unbalanced {
                index: 2,
                ups: 3,
                downs: 2
            }
        );
        assert_eq!(
            "UDDU".parse::<DyckPath>(),
            Err(DyckError::NegativePrefix { index: 2 })
        );
        assert_eq!(
            "UXDD".parse::<DyckPath>(),
            Err(DyckError::ForeignChar { index: 1, ch: 'X' })
        );
    }

    #[test]
    fn render_letters_and_art() {
        assert_eq!(render_dyck(&p("UUDD"), RenderStyle::Letters), "UUDD");
        assert_eq!(render_dyck(&DyckPath::empty(), RenderStyle::Letters), "");
        let art = render_dyck(&p("UUDD"), RenderStyle::AsciiArt);
        assert_eq!(art, " /\\\n/  \\");
        assert_eq!(art.lines().count(), 2);
        assert_eq!(DyckPath::from_ascii_art(&art).unwrap(), p("UUDD"));
        assert_eq!(DyckPath::empty().to_ascii_art(), "");
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(p("UUDD").reverse(), p("UUDD"));
        assert_eq!(p("UUDDUD").reverse(), p("UDUUDD"));
        assert_eq!(DyckPath::empty().reverse(), DyckPath::empty());
    }

    #[test]
    fn components_examples() {
        assert_eq!(p("UUDDUD").components(), vec![p("UUDD"), p("UD")]);
        assert_eq!(p("UUDUDD").components(), vec![p("UUDUDD")]);
        assert!(DyckPath::empty().components().is_empty());
    }

    #[test]
    fn elevate_and_unelevate() {
        assert_eq!(DyckPath::empty().elevate(), p("UD"));
        assert_eq!(p("UD").elevate(), p("UUDD"));
        assert_eq!(p("UUDD").elevate(), p("UUUDDD"));
        assert_eq!(p("UUDD").unelevate().unwrap(), p("UD"));
        assert_eq!(p("UD").unelevate().unwrap(), DyckPath::empty());
        assert_eq!(
            p("UUDDUD").unelevate(),
            Err(DyckError::NotElevated { index: 3 })
        );
        assert_eq!(DyckPath::empty().unelevate(), Err(DyckError::Empty));
    }

    #[test]
    fn ascent_descent_examples() {
        // u^2 d u^4 d^3 u d^2 u d^2
        let path = p("UUDUUUUDDDUDDUDD");
        assert_eq!(
            path.ascent_descent_lengths().unwrap(),
            (vec![2, 4, 1, 1], vec![1, 3, 2, 2])
        );
        assert_eq!(
            DyckPath::pyramid(5).ascent_descent_lengths().unwrap(),
            (vec![5], vec![5])
        );
        assert_eq!(p("UD").ascent_descent_lengths().unwrap(), (vec![1], vec![1]));
        assert_eq!(DyckPath::empty().ascent_descent_lengths(), Err(DyckError::Empty));
    }

    #[test]
    fn enumeration_small() {
        assert_eq!(enumerate_dyck(0).unwrap(), vec![DyckPath::empty()]);
        let three = enumerate_dyck(3).unwrap();
        let letters: Vec<String> = three.iter().map(|p| p.to_string()).collect();
        assert_eq!(
            letters,
            ["UUUDDD", "UUDUDD", "UUDDUD", "UDUUDD", "UDUDUD"]
        );
        assert_eq!(enumerate_dyck(4).unwrap().len(), 14);
        assert!(matches!(
            enumerate_dyck(MAX_ENUM_SIZE + 1),
            Err(DyckError::CapExceeded { .. })
        ));
    }

    #[test]
    fn enumeration_is_sorted_and_distinct() {
        for n in 0..=9 {
            let all = enumerate_dyck(n).unwrap();
            assert!(all.windows(2).all(|w| w[0] < w[1]), "n={n}");
        }
    }

    #[test]
    fn uu_count_matches_dd_count() {
        for n in 0..=10 {
            for path in DyckIter::new(n) {
                assert_eq!(path.count_uu(), path.count_dd());
            }
        }
    }
}
