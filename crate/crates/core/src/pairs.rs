//! Nonintersecting path pairs (parallelogram polyominoes).
//!
//! A pair of size `m` is two north/east lattice paths of `m` steps each from
//! the origin to a common endpoint that meet nowhere else. Dyck paths of size
//! `n` correspond to pairs of size `n + 1` through [`phi`].
//!
//! Steps are also numbered clockwise around the boundary: positions `0..m`
//! run along the upper path from the origin, positions `m..2m` run back
//! along the lower path from the endpoint. Positions here are 0-based.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::dyck::DyckPath;

/// A unit lattice step. `N` is vertical, `E` is flat.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LatticeStep {
    N,
    E,
}

impl LatticeStep {
    pub fn is_vertical(self) -> bool {
        self == LatticeStep::N
    }

    pub fn swapped(self) -> LatticeStep {
        match self {
            LatticeStep::N => LatticeStep::E,
            LatticeStep::E => LatticeStep::N,
        }
    }

    fn letter(self) -> char {
        match self {
            LatticeStep::N => 'N',
            LatticeStep::E => 'E',
        }
    }

    fn delta(self) -> (i64, i64) {
        match self {
            LatticeStep::N => (0, 1),
            LatticeStep::E => (1, 0),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PairError {
    #[error("bad path pair text: {0}")]
    Syntax(String),
    #[error("paths have different lengths ({upper} vs {lower})")]
    LengthMismatch { upper: usize, lower: usize },
    #[error("a path pair needs at least one step")]
    Empty,
    #[error("paths end at different points")]
    Endpoints,
    #[error("upper path must start N and end E, lower path must start E and end N")]
    BadEnds,
    #[error("paths meet at interior vertex {0}")]
    Intersect(Point),
    #[error("a size-1 pair must be E;E")]
    BadDegenerate,
    #[error("operation is undefined on the degenerate size-1 pair")]
    Degenerate,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PathPair {
    upper: Vec<LatticeStep>,
    lower: Vec<LatticeStep>,
}

fn vertices(steps: &[LatticeStep]) -> Vec<Point> {
    let mut p = Point::new(0, 0);
    let mut out = Vec::with_capacity(steps.len() + 1);
    out.push(p);
    for s in steps {
        let (dx, dy) = s.delta();
        p = Point::new(p.x + dx, p.y + dy);
        out.push(p);
    }
    out
}

impl PathPair {
    pub fn new(upper: Vec<LatticeStep>, lower: Vec<LatticeStep>) -> Result<Self, PairError> {
        use LatticeStep::{E, N};
        if upper.len() != lower.len() {
            return Err(PairError::LengthMismatch {
                upper: upper.len(),
                lower: lower.len(),
            });
        }
        let m = upper.len();
        if m == 0 {
            return Err(PairError::Empty);
        }
        if m == 1 {
            return if upper == [E] && lower == [E] {
                Ok(PathPair { upper, lower })
            } else {
                Err(PairError::BadDegenerate)
            };
        }
        let uv = vertices(&upper);
        let lv = vertices(&lower);
        if uv[m] != lv[m] {
            return Err(PairError::Endpoints);
        }
        if upper[0] != N || upper[m - 1] != E || lower[0] != E || lower[m - 1] != N {
            return Err(PairError::BadEnds);
        }
        let upper_set: HashSet<Point> = uv[1..m].iter().copied().collect();
        if let Some(&p) = lv[1..m].iter().find(|p| upper_set.contains(p)) {
            return Err(PairError::Intersect(p));
        }
        Ok(PathPair { upper, lower })
    }

    /// `φ(ε)`: both paths are a single `E`.
    pub fn degenerate() -> Self {
        PathPair {
            upper: vec![LatticeStep::E],
            lower: vec![LatticeStep::E],
        }
    }

    pub fn upper(&self) -> &[LatticeStep] {
        &self.upper
    }

    pub fn lower(&self) -> &[LatticeStep] {
        &self.lower
    }

    /// Steps per path.
    pub fn size(&self) -> usize {
        self.upper.len()
    }

    pub fn is_degenerate(&self) -> bool {
        self.size() == 1
    }

    pub fn upper_vertices(&self) -> Vec<Point> {
        vertices(&self.upper)
    }

    pub fn lower_vertices(&self) -> Vec<Point> {
        vertices(&self.lower)
    }

    /// All `2m` boundary steps in clockwise order: the upper path forward,
    /// then the lower path backward.
    pub fn clockwise_steps(&self) -> Vec<LatticeStep> {
        self.upper
            .iter()
            .chain(self.lower.iter().rev())
            .copied()
            .collect()
    }

    fn from_clockwise(seq: &[LatticeStep]) -> Result<Self, PairError> {
        let m = seq.len() / 2;
        PathPair::new(seq[..m].to_vec(), seq[m..].iter().rev().copied().collect())
    }

    /// The vertex from which clockwise step `q` starts.
    pub fn clockwise_vertex(&self, q: usize) -> Point {
        let m = self.size();
        if q < m {
            self.upper_vertices()[q]
        } else {
            self.lower_vertices()[2 * m - q]
        }
    }

    /// Clockwise position of the step that follows `q` around the boundary.
    pub fn clockwise_next(&self, q: usize) -> usize {
        (q + 1) % (2 * self.size())
    }

    /// Reflection in the main diagonal.
    pub fn flip45(&self) -> PathPair {
        if self.is_degenerate() {
            return self.clone();
        }
        PathPair {
            upper: self.lower.iter().map(|s| s.swapped()).collect(),
            lower: self.upper.iter().map(|s| s.swapped()).collect(),
        }
    }

    /// Half-turn about the centre of the bounding box.
    pub fn rotate180(&self) -> PathPair {
        PathPair {
            upper: self.lower.iter().rev().copied().collect(),
            lower: self.upper.iter().rev().copied().collect(),
        }
    }

    /// Pairs of vertical steps that are opposite sides of a unit square, as
    /// (upper index, lower index) in each path's own forward order.
    pub fn vertical_squares(&self) -> Vec<(usize, usize)> {
        let lv = self.lower_vertices();
        let lower_n: std::collections::HashMap<Point, usize> = self
            .lower
            .iter()
            .enumerate()
            .filter(|(_, s)| s.is_vertical())
            .map(|(i, _)| (lv[i], i))
            .collect();
        let uv = self.upper_vertices();
        self.upper
            .iter()
            .enumerate()
            .filter(|(_, s)| s.is_vertical())
            .filter_map(|(i, _)| {
                let p = uv[i];
                lower_n.get(&Point::new(p.x + 1, p.y)).map(|&j| (i, j))
            })
            .collect()
    }

    /// Applies one round of the direct description of `L' ∘ L`, reporting
    /// which clockwise positions changed orientation.
    pub fn tweak_traced(&self) -> Result<TweakTrace, PairError> {
        if self.is_degenerate() {
            return Err(PairError::Degenerate);
        }
        let m = self.size();
        let mut seq = self.clockwise_steps();
        // (i): last upper step and first lower step
        let raised = [m - 1, 2 * m - 1];
        for &q in &raised {
            debug_assert_eq!(seq[q], LatticeStep::E);
            seq[q] = LatticeStep::N;
        }
        // (ii)
        let mut flattened = Vec::new();
        for (u, l) in self.vertical_squares() {
            flattened.push(u);
            flattened.push(2 * m - 1 - l);
        }
        for &q in &flattened {
            seq[q] = LatticeStep::E;
        }
        flattened.sort_unstable();
        // every rod moves one place clockwise
        seq.rotate_right(1);
        Ok(TweakTrace {
            pair: PathPair::from_clockwise(&seq)?,
            raised,
            flattened,
        })
    }

    /// `L' ∘ L` acting directly on the pair: the last upper step and first
    /// lower step turn vertical, vertical sides of unit squares turn flat.
    pub fn tweak(&self) -> Result<PathPair, PairError> {
        self.tweak_traced().map(|t| t.pair)
    }

    /// Bottom and top of column `c` of the enclosed region.
    fn columns(&self) -> Vec<(i64, i64)> {
        let heights = |steps: &[LatticeStep]| {
            let mut y = 0;
            let mut out = Vec::new();
            for s in steps {
                match s {
                    LatticeStep::N => y += 1,
                    LatticeStep::E => out.push(y),
                }
            }
            out
        };
        heights(&self.lower)
            .into_iter()
            .zip(heights(&self.upper))
            .collect()
    }

    // doubled coordinates
    fn strictly_inside(&self, cols: &[(i64, i64)], x2: i64, y2: i64) -> bool {
        let width = cols.len() as i64;
        if x2 % 2 != 0 {
            let (lo, hi) = cols[(x2 / 2) as usize];
            2 * lo < y2 && y2 < 2 * hi
        } else {
            let x = x2 / 2;
            if x <= 0 || x >= width {
                return false;
            }
            let (lo_l, hi_l) = cols[(x - 1) as usize];
            let (lo_r, hi_r) = cols[x as usize];
            2 * lo_l.max(lo_r) < y2 && y2 < 2 * hi_l.min(hi_r)
        }
    }

    /// Slope-1 segments between boundary vertices whose relative interior
    /// lies strictly inside the region.
    pub fn minimal_diagonals(&self) -> Result<Vec<MinimalDiagonal>, PairError> {
        if self.is_degenerate() {
            return Err(PairError::Degenerate);
        }
        let cols = self.columns();
        let mut verts: Vec<Point> = self
            .upper_vertices()
            .into_iter()
            .chain(self.lower_vertices())
            .collect();
        verts.sort_unstable();
        verts.dedup();
        let mut out = Vec::new();
        for &v1 in &verts {
            for &v2 in &verts {
                let len = v2.x - v1.x;
                if len <= 0 || v2.y - v1.y != len {
                    continue;
                }
                let inside = (1..2 * len)
                    .all(|k| self.strictly_inside(&cols, 2 * v1.x + k, 2 * v1.y + k));
                if inside {
                    out.push(MinimalDiagonal { v1, v2 });
                }
            }
        }
        Ok(out)
    }

    pub fn is_minimal_diagonal(&self, a: Point, b: Point) -> bool {
        let (v1, v2) = if a.x <= b.x { (a, b) } else { (b, a) };
        let len = v2.x - v1.x;
        if len <= 0 || v2.y - v1.y != len {
            return false;
        }
        let cols = self.columns();
        (1..2 * len).all(|k| self.strictly_inside(&cols, 2 * v1.x + k, 2 * v1.y + k))
    }

    /// Cells of the polyomino as `#`, top row first.
    pub fn render(&self) -> String {
        let cols = self.columns();
        let top = cols.iter().map(|c| c.1).max().unwrap_or(0);
        (0..top)
            .rev()
            .map(|y| {
                cols.iter()
                    .map(|&(lo, hi)| if lo <= y && y < hi { '#' } else { '.' })
                    .collect::<String>()
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// Result of [`PathPair::tweak_traced`]. Positions refer to the clockwise
/// numbering of the input pair, before the one-place rotation.
#[derive(Clone, Debug)]
pub struct TweakTrace {
    pub pair: PathPair,
    pub raised: [usize; 2],
    pub flattened: Vec<usize>,
}

/// A minimal diagonal from `v1` (south-west end) to `v2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MinimalDiagonal {
    pub v1: Point,
    pub v2: Point,
}

impl MinimalDiagonal {
    pub fn length(&self) -> i64 {
        self.v2.x - self.v1.x
    }
}

impl fmt::Display for MinimalDiagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}", self.v1, self.v2)
    }
}

fn letters(steps: &[LatticeStep]) -> String {
    steps.iter().map(|s| s.letter()).collect()
}

impl fmt::Display for PathPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{}", letters(&self.upper), letters(&self.lower))
    }
}

impl FromStr for PathPair {
    type Err = PairError;

    /// `<upper>;<lower>` over `N`/`E`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (u, l) = s
            .split_once(';')
            .ok_or_else(|| PairError::Syntax("expected <upper>;<lower>".into()))?;
        let parse = |t: &str| {
            t.trim()
                .chars()
                .map(|c| match c {
                    'N' | 'n' => Ok(LatticeStep::N),
                    'E' | 'e' => Ok(LatticeStep::E),
                    _ => Err(PairError::Syntax(format!("unexpected character {c:?}"))),
                })
                .collect::<Result<Vec<_>, _>>()
        };
        PathPair::new(parse(u)?, parse(l)?)
    }
}

// ascent (or descent) lengths of the elevated path, as N^{len-1} E blocks
fn runs_to_lattice(runs: &[usize]) -> Vec<LatticeStep> {
    let mut out = Vec::new();
    for &r in runs {
        out.extend(std::iter::repeat_n(LatticeStep::N, r - 1));
        out.push(LatticeStep::E);
    }
    out
}

fn lattice_to_runs(steps: &[LatticeStep]) -> Vec<usize> {
    let mut out = Vec::new();
    let mut len = 0;
    for s in steps {
        len += 1;
        if *s == LatticeStep::E {
            out.push(len);
            len = 0;
        }
    }
    out
}

/// Elevate, then read ascents as `N…NE` blocks for the upper path and
/// descents likewise; the lower path is the descent reading with its final
/// `E` moved to the front.
pub fn phi(path: &DyckPath) -> PathPair {
    let elevated = path.elevate();
    let (ascents, descents) = elevated
        .ascent_descent_lengths()
        .expect("elevated path is nonempty");
    debug_assert!({
        let k = ascents.len();
        let (mut a, mut d) = (0, 0);
        (0..k - 1).all(|i| {
            a += ascents[i];
            d += descents[i];
            a > d
        })
    });
    let upper = runs_to_lattice(&ascents);
    let mut lower = runs_to_lattice(&descents);
    lower.rotate_right(1);
    PathPair { upper, lower }
}

pub fn phi_inv(pair: &PathPair) -> DyckPath {
    let ascents = lattice_to_runs(&pair.upper);
    let mut x = pair.lower.clone();
    x.rotate_left(1);
    let descents = lattice_to_runs(&x);
    let elevated = DyckPath::from_runs(&ascents, &descents)
        .expect("a valid pair encodes an elevated Dyck path");
    elevated.unelevate().expect("a valid pair encodes an elevated Dyck path")
}

/// Convenience for tests and the CLI: the steps of a pair as letters.
pub fn steps_to_string(steps: &[LatticeStep]) -> String {
    letters(steps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dyck::DyckIter;
    use crate::involutions::{lk, lk_prime_lk};
    use LatticeStep::{E, N};

    fn pair(s: &str) -> PathPair {
        s.parse().unwrap()
    }

    fn p(s: &str) -> DyckPath {
        s.parse().unwrap()
    }

    #[test]
    fn validation() {
        assert!("NE;EN".parse::<PathPair>().is_ok());
        assert_eq!("E;E".parse::<PathPair>(), Ok(PathPair::degenerate()));
        assert_eq!("N;N".parse::<PathPair>(), Err(PairError::BadDegenerate));
        assert_eq!("NE;NE".parse::<PathPair>(), Err(PairError::BadEnds));
        assert_eq!("NNE;EN".parse::<PathPair>(), Err(PairError::LengthMismatch { upper: 3, lower: 2 }));
        assert_eq!("NEE;ENN".parse::<PathPair>(), Err(PairError::Endpoints));
        assert_eq!(
            "NENE;ENEN".parse::<PathPair>(),
            Err(PairError::Intersect(Point::new(1, 1)))
        );
        assert!(matches!("NX;EN".parse::<PathPair>(), Err(PairError::Syntax(_))));
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&p("UD")), pair("NE;EN"));
        assert_eq!(phi(&DyckPath::empty()), PathPair::degenerate());
        let image = phi(&p("UDUDUUDUUDDDUUUDDDUD"));
        assert_eq!(image, pair("NEENENENNEE;EEEENNENNEN"));
        assert_eq!(phi_inv(&image), p("UDUDUUDUUDDDUUUDDDUD"));
    }

    #[test]
    fn phi_inv_examples() {
        assert_eq!(phi_inv(&pair("NE;EN")), p("UD"));
        assert_eq!(phi_inv(&pair("NEE;EEN")), p("UDUD"));
        assert_eq!(phi(&p("UDUD")), pair("NEE;EEN"));
        assert_eq!(phi_inv(&PathPair::degenerate()), DyckPath::empty());
    }

    #[test]
    fn flip_and_rotate_examples() {
        assert_eq!(pair("NE;EN").flip45(), pair("NE;EN"));
        assert_eq!(PathPair::degenerate().flip45(), PathPair::degenerate());
        for n in 1..7 {
            assert_eq!(phi(&DyckPath::pyramid(n)).flip45(), phi(&DyckPath::zigzag(n)));
        }
        assert_eq!(pair("NE;EN").rotate180(), pair("NE;EN"));
        assert_eq!(phi(&p("UUDDUD")).rotate180(), phi(&p("UDUUDD")));
        assert_eq!(PathPair::degenerate().rotate180(), PathPair::degenerate());
    }

    #[test]
    fn tweak_examples() {
        assert_eq!(pair("NE;EN").tweak().unwrap(), pair("NE;EN"));
        assert_eq!(pair("NNE;ENN").tweak().unwrap(), pair("NEE;EEN"));
        assert_eq!(phi(&p("UDUD")).tweak().unwrap(), phi(&p("UUDD")));
        assert_eq!(PathPair::degenerate().tweak(), Err(PairError::Degenerate));
    }

    #[test]
    fn clockwise_examples() {
        assert_eq!(pair("NE;EN").clockwise_steps(), vec![N, E, N, E]);
        assert_eq!(pair("NNE;ENN").clockwise_steps(), vec![N, N, E, N, N, E]);
        assert_eq!(PathPair::degenerate().clockwise_steps(), vec![E, E]);
        let q = pair("NNE;ENN");
        assert_eq!(q.clockwise_vertex(0), Point::new(0, 0));
        assert_eq!(q.clockwise_vertex(3), Point::new(1, 2));
        assert_eq!(q.clockwise_vertex(5), Point::new(1, 0));
    }

    #[test]
    fn diagonal_examples() {
        let d = pair("NE;EN").minimal_diagonals().unwrap();
        assert_eq!(
            d,
            vec![MinimalDiagonal {
                v1: Point::new(0, 0),
                v2: Point::new(1, 1)
            }]
        );
        let mut d = pair("NNE;ENN").minimal_diagonals().unwrap();
        d.sort();
        assert_eq!(
            d,
            vec![
                MinimalDiagonal {
                    v1: Point::new(0, 0),
                    v2: Point::new(1, 1)
                },
                MinimalDiagonal {
                    v1: Point::new(0, 1),
                    v2: Point::new(1, 2)
                },
            ]
        );
        assert_eq!(PathPair::degenerate().minimal_diagonals(), Err(PairError::Degenerate));
    }

    #[test]
    fn geometric_identities_small() {
        for n in 0..=8 {
            for path in DyckIter::new(n) {
                let q = phi(&path);
                assert_eq!(q.size(), n + 1);
                assert_eq!(PathPair::new(q.upper.clone(), q.lower.clone()), Ok(q.clone()));
                assert_eq!(phi_inv(&q), path);
                assert_eq!(q.flip45(), phi(&lk(&path)));
                assert_eq!(q.rotate180(), phi(&path.reverse()));
                if n >= 1 {
                    assert_eq!(q.tweak().unwrap(), phi(&lk_prime_lk(&path)), "{path}");
                    assert_eq!(q.minimal_diagonals().unwrap().len(), n);
                    let cw = q.clockwise_steps();
                    assert!(cw[0].is_vertical() && cw[n + 1].is_vertical());
                }
            }
        }
    }

    #[test]
    fn render_unit_square() {
        assert_eq!(pair("NE;EN").render(), "#");
        assert_eq!(pair("NNE;ENN").render(), "#\n#");
    }
}
