//! Partial-sum ascent-descent codes.
//!
//! Three different codings (of Dyck paths, via left-to-right maxima, via
//! excedances) share the same validity conditions, so they share one type:
//! a size `n` and two strictly increasing sequences `A`, `D` of equal length
//! `r <= n - 1` with entries in `1..=n-1` and `A_i >= D_i`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::dyck::{DyckError, DyckPath, Step};

/// Which reading a code came from. Carried for display only.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum CodeRole {
    #[default]
    AscentDescent,
    LrMax,
    Excedance,
    LkLabels,
}

/// The first clause of the validity conditions a candidate code fails.
/// Indices are 1-based, matching the usual `A_1, A_2, ...` notation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeViolation {
    #[error("size must be positive")]
    ZeroSize,
    #[error("A has {a_len} entries but D has {d_len}")]
    LengthMismatch { a_len: usize, d_len: usize },
    #[error("r = {r} exceeds n - 1 = {max}")]
    TooLong { r: usize, max: usize },
    #[error("A_{index} = {value} is below 1")]
    ABelowOne { index: usize, value: usize },
    #[error("A_{index} = {value} > n - 1")]
    AAboveMax { index: usize, value: usize },
    #[error("A is not strictly increasing at A_{index}")]
    ANotIncreasing { index: usize },
    #[error("D_{index} = {value} is below 1")]
    DBelowOne { index: usize, value: usize },
    #[error("D_{index} = {value} > n - 1")]
    DAboveMax { index: usize, value: usize },
    #[error("D is not strictly increasing at D_{index}")]
    DNotIncreasing { index: usize },
    #[error("A_{index} < D_{index}")]
    ABelowD { index: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("invalid code: {0}")]
    Invalid(#[from] CodeViolation),
    #[error(transparent)]
    Path(#[from] DyckError),
    #[error("malformed code text: {0}")]
    Syntax(String),
}

/// Checks the validity conditions; returns the first failed clause.
pub fn validate_code(n: usize, a: &[usize], d: &[usize]) -> Result<(), CodeViolation> {
    if n == 0 {
        return Err(CodeViolation::ZeroSize);
    }
    if a.len() != d.len() {
        return Err(CodeViolation::LengthMismatch {
            a_len: a.len(),
            d_len: d.len(),
        });
    }
    let r = a.len();
    if r > n - 1 {
        return Err(CodeViolation::TooLong { r, max: n - 1 });
    }
    for (i, &v) in a.iter().enumerate() {
        let index = i + 1;
        if v < 1 {
            return Err(CodeViolation::ABelowOne { index, value: v });
        }
        if v > n - 1 {
            return Err(CodeViolation::AAboveMax { index, value: v });
        }
        if i > 0 && a[i - 1] >= v {
            return Err(CodeViolation::ANotIncreasing { index });
        }
    }
    for (i, &v) in d.iter().enumerate() {
        let index = i + 1;
        if v < 1 {
            return Err(CodeViolation::DBelowOne { index, value: v });
        }
        if v > n - 1 {
            return Err(CodeViolation::DAboveMax { index, value: v });
        }
        if i > 0 && d[i - 1] >= v {
            return Err(CodeViolation::DNotIncreasing { index });
        }
    }
    if let Some(i) = a.iter().zip(d).position(|(x, y)| x < y) {
        return Err(CodeViolation::ABelowD { index: i + 1 });
    }
    Ok(())
}

/// A validated code. Equality ignores [`CodeRole`].
#[derive(Clone, Debug)]
pub struct AdCode {
    n: usize,
    a: Vec<usize>,
    d: Vec<usize>,
    role: CodeRole,
}

impl PartialEq for AdCode {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.a == other.a && self.d == other.d
    }
}

impl Eq for AdCode {}

impl AdCode {
    pub fn new(n: usize, a: Vec<usize>, d: Vec<usize>) -> Result<Self, CodeViolation> {
        validate_code(n, &a, &d)?;
        Ok(AdCode {
            n,
            a,
            d,
            role: CodeRole::AscentDescent,
        })
    }

    pub fn with_role(mut self, role: CodeRole) -> Self {
        self.role = role;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The top row (partial sums of ascents, LR maxima, excedance values - 1, ...).
    pub fn a(&self) -> &[usize] {
        &self.a
    }

    /// The bottom row.
    pub fn d(&self) -> &[usize] {
        &self.d
    }

    pub fn role(&self) -> CodeRole {
        self.role
    }

    pub fn r(&self) -> usize {
        self.a.len()
    }
}

fn join(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for AdCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}; A={}; D={}", self.n, join(&self.a), join(&self.d))
    }
}

impl FromStr for AdCode {
    type Err = CodeError;

    /// Parses `n=<int>; A=<comma list>; D=<comma list>`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let syntax = |msg: &str| CodeError::Syntax(msg.to_string());
        let parts: Vec<&str> = s.split(';').map(str::trim).collect();
        let [n, a, d] = parts.as_slice() else {
            return Err(syntax("expected three ';'-separated fields"));
        };
        let field = |text: &'_ str, key: &str| -> Result<String, CodeError> {
            text.strip_prefix(key)
                .and_then(|t| t.trim_start().strip_prefix('='))
                .map(|t| t.trim().to_string())
                .ok_or_else(|| syntax(&format!("expected field {key}")))
        };
        let list = |text: String| -> Result<Vec<usize>, CodeError> {
            if text.is_empty() {
                return Ok(Vec::new());
            }
            text.split(',')
                .map(|x| {
                    x.trim()
                        .parse::<usize>()
                        .map_err(|_| syntax(&format!("bad integer {x:?}")))
                })
                .collect()
        };
        let n = field(n, "n")?
            .parse::<usize>()
            .map_err(|_| syntax("bad size"))?;
        let a = list(field(a, "A")?)?;
        let d = list(field(d, "D")?)?;
        Ok(AdCode::new(n, a, d)?)
    }
}

fn partial_sums_truncated(runs: &[usize]) -> Vec<usize> {
    runs[..runs.len() - 1]
        .iter()
        .scan(0, |acc, &x| {
            *acc += x;
            Some(*acc)
        })
        .collect()
}

/// Truncated partial sums of the ascent and descent lengths.
pub fn code_of(path: &DyckPath) -> Result<AdCode, DyckError> {
    let (ascents, descents) = path.ascent_descent_lengths()?;
    Ok(AdCode {
        n: path.size(),
        a: partial_sums_truncated(&ascents),
        d: partial_sums_truncated(&descents),
        role: CodeRole::AscentDescent,
    })
}

fn differences(sums: &[usize], n: usize) -> Vec<usize> {
    let mut prev = 0;
    sums.iter()
        .chain(std::iter::once(&n))
        .map(|&x| {
            let len = x - prev;
            prev = x;
            len
        })
        .collect()
}

/// Rebuilds the Dyck path whose ascent-descent code is `code`.
pub fn path_of_code(code: &AdCode) -> DyckPath {
    let ascents = differences(&code.a, code.n);
    let descents = differences(&code.d, code.n);
    DyckPath::from_runs(&ascents, &descents).expect("valid code yields a Dyck path")
}

/// Labels up steps and down steps `1..=n` from the left; `D` collects the
/// label of the first step of every `uu`, `A` that of every `dd`.
pub fn lk_labels(path: &DyckPath) -> Result<AdCode, DyckError> {
    if path.is_empty() {
        return Err(DyckError::Empty);
    }
    let mut a = Vec::new();
    let mut d = Vec::new();
    let (mut ups, mut downs) = (0, 0);
    let steps = path.steps();
    for (i, s) in steps.iter().enumerate() {
        let next = steps.get(i + 1);
        match s {
            Step::Up => {
                ups += 1;
                if next == Some(&Step::Up) {
                    d.push(ups);
                }
            }
            Step::Down => {
                downs += 1;
                if next == Some(&Step::Down) {
                    a.push(downs);
                }
            }
        }
    }
    Ok(AdCode {
        n: path.size(),
        a,
        d,
        role: CodeRole::LkLabels,
    })
}

/// Converts an LRMax code into the excedance code of the same permutation:
/// append `n` on top and `0` below, add 1 below, drop columns whose entries
/// agree, subtract 1 on top.
pub fn transform_lrmax_to_excedance(code: &AdCode) -> AdCode {
    let top = code.a.iter().copied().chain(std::iter::once(code.n));
    let bottom = std::iter::once(0).chain(code.d.iter().copied()).map(|x| x + 1);
    let (a, d): (Vec<usize>, Vec<usize>) = top
        .zip(bottom)
        .filter(|(t, b)| t != b)
        .map(|(t, b)| (t - 1, b))
        .unzip();
    AdCode {
        n: code.n,
        a,
        d,
        role: CodeRole::Excedance,
    }
}
