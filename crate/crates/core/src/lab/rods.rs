//! Tracking individual boundary steps ("rods") of a path pair through
//! repeated applications of the direct `L' ∘ L` rule.
//!
//! Each application moves every rod one place clockwise: the rod that sits
//! at clockwise position `q` ends up at `q + 1 (mod 2m)`. A rod "turns the
//! corner" when it moves from the end of one path to the start of the other.

use crate::pairs::{PairError, PathPair, Point};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Flat,
    Vertical,
}

/// Which step counts as "immediately preceding" a given step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PrecedingConvention {
    /// The previous step in clockwise order, within the same path.
    Clockwise,
    /// The previous step in the path's own origin-to-endpoint direction.
    Forward,
}

impl PrecedingConvention {
    pub fn name(self) -> &'static str {
        match self {
            PrecedingConvention::Clockwise => "clockwise",
            PrecedingConvention::Forward => "forward",
        }
    }

    /// Clockwise position of the step preceding position `q` in a pair of size `m`.
    pub fn predecessor(self, q: usize, m: usize) -> Option<usize> {
        match self {
            PrecedingConvention::Clockwise => (q != 0 && q != m).then(|| q - 1),
            PrecedingConvention::Forward => {
                if q < m {
                    (q != 0).then(|| q - 1)
                } else {
                    (q != 2 * m - 1).then(|| q + 1)
                }
            }
        }
    }
}

/// One rod. `identity` is its 1-based clockwise position in the original pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrackedStep {
    pub identity: usize,
    /// Orientation before any application and after each one, derived from
    /// the rule's events alone.
    pub history: Vec<Orientation>,
    /// 1-based application during which the rod turned the corner.
    pub corner_turn: Option<usize>,
    /// 1-based applications during which the rod was flattened.
    pub flattenings: Vec<usize>,
}

impl TrackedStep {
    pub fn flattened_after_corner(&self) -> bool {
        self.corner_turn
            .is_some_and(|c| self.flattenings.iter().any(|&f| f > c))
    }

    pub fn flattenings_before_corner(&self) -> usize {
        let c = self.corner_turn.unwrap_or(usize::MAX);
        self.flattenings.iter().filter(|&&f| f < c).count()
    }

    pub fn flattenings_after_corner(&self) -> usize {
        self.flattenings.len() - self.flattenings_before_corner()
    }
}

#[derive(Clone, Debug)]
pub struct RodTrace {
    /// `stages[i]` is the pair after `i` applications.
    pub stages: Vec<PathPair>,
    pub rods: Vec<TrackedStep>,
}

fn orientation(vertical: bool) -> Orientation {
    if vertical {
        Orientation::Vertical
    } else {
        Orientation::Flat
    }
}

impl RodTrace {
    pub fn size(&self) -> usize {
        self.stages[0].size()
    }

    /// Clockwise position (0-based) of rod `identity` after `i` applications.
    pub fn position(&self, identity: usize, i: usize) -> usize {
        (identity - 1 + i) % (2 * self.size())
    }

    /// Checks each rod's event-derived history against the geometry of
    /// every stage. Returns the first mismatch as `(identity, stage)`.
    pub fn first_inconsistency(&self) -> Option<(usize, usize)> {
        for rod in &self.rods {
            for (i, stage) in self.stages.iter().enumerate() {
                let q = self.position(rod.identity, i);
                let actual = orientation(stage.clockwise_steps()[q].is_vertical());
                if actual != rod.history[i] {
                    return Some((rod.identity, i));
                }
            }
        }
        None
    }
}

/// Applies the direct rule `applications` times and records every rod.
pub fn track_rods(pair: &PathPair, applications: usize) -> Result<RodTrace, PairError> {
    let m = pair.size();
    let two_m = 2 * m;
    let start = pair.clockwise_steps();
    let mut rods: Vec<TrackedStep> = (0..two_m)
        .map(|q| TrackedStep {
            identity: q + 1,
            history: vec![orientation(start[q].is_vertical())],
            corner_turn: None,
            flattenings: Vec::new(),
        })
        .collect();
    let mut stages = vec![pair.clone()];
    for i in 1..=applications {
        let trace = stages[i - 1].tweak_traced()?;
        for rod in &mut rods {
            let q = (rod.identity - 1 + i - 1) % two_m;
            let mut now = *rod.history.last().unwrap();
            if trace.raised.contains(&q) {
                rod.corner_turn = Some(i);
                now = Orientation::Vertical;
            }
            if trace.flattened.binary_search(&q).is_ok() {
                rod.flattenings.push(i);
                now = Orientation::Flat;
            }
            rod.history.push(now);
        }
        stages.push(trace.pair);
    }
    Ok(RodTrace { stages, rods })
}

/// How a minimal diagonal of the original pair evolves when its endpoints
/// are carried along with the rods they initiate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalFate {
    /// Clockwise positions (0-based) of the two endpoints in the original pair.
    pub endpoints: (usize, usize),
    /// Lengths at stages `0..survived`, all of which are minimal diagonals.
    pub lengths: Vec<i64>,
    /// Whether at the last surviving stage the two initiated steps were the
    /// vertical sides of a unit square.
    pub ends_as_square: bool,
    /// Length change predicted by [`predicted_length_change`] at each surviving stage.
    pub predicted_changes: Vec<i64>,
}

impl DiagonalFate {
    /// Number of stages (starting with the original) at which it was still a diagonal.
    pub fn survived(&self) -> usize {
        self.lengths.len()
    }

    /// Stages at which the observed change in length differs from the prediction.
    pub fn unexpected_changes(&self) -> Vec<usize> {
        (0..self.survived().saturating_sub(1))
            .filter(|&i| self.lengths[i + 1] - self.lengths[i] != self.predicted_changes[i])
            .collect()
    }
}

/// How one application changes the length of a minimal diagonal whose
/// endpoints start the clockwise steps `qa` and `qb`. With `V1 < V2` in
/// clockwise order:
///
/// * interior vertices of different paths: `+1` if `V1 → V2` points
///   south-west, else `-1`;
/// * same path and `V2` is not that path's clockwise terminal: `0`;
/// * otherwise `-1`.
///
/// The origin counts as the clockwise terminal of the lower path and the
/// far corner as the terminal of the upper path.
pub fn predicted_length_change(stage: &PathPair, qa: usize, qb: usize) -> i64 {
    let m = stage.size();
    let (a, b) = (qa.min(qb), qa.max(qb));
    if a > 0 && a < m && b > m {
        let (v1, v2) = (stage.clockwise_vertex(a), stage.clockwise_vertex(b));
        return if v2.x < v1.x { 1 } else { -1 };
    }
    if b <= m {
        // both on the upper path
        return if b != m { 0 } else { -1 };
    }
    // lower path; a == 0 means V2 is the origin
    if a == 0 {
        -1
    } else {
        0
    }
}

fn clockwise_index_of(pair: &PathPair, v: Point) -> usize {
    (0..2 * pair.size())
        .find(|&q| pair.clockwise_vertex(q) == v)
        .expect("diagonal endpoints are boundary vertices")
}

/// Follows every minimal diagonal of the first stage through the trace.
pub fn diagonal_fates(trace: &RodTrace) -> Result<Vec<DiagonalFate>, PairError> {
    let first = &trace.stages[0];
    let two_m = 2 * first.size();
    let mut out = Vec::new();
    for d in first.minimal_diagonals()? {
        let a = clockwise_index_of(first, d.v1);
        let b = clockwise_index_of(first, d.v2);
        let mut lengths = Vec::new();
        let mut predicted_changes = Vec::new();
        let mut ends_as_square = false;
        for (i, stage) in trace.stages.iter().enumerate() {
            let (qa, qb) = ((a + i) % two_m, (b + i) % two_m);
            let (va, vb) = (stage.clockwise_vertex(qa), stage.clockwise_vertex(qb));
            if !stage.is_minimal_diagonal(va, vb) {
                break;
            }
            lengths.push((va.x - vb.x).abs());
            predicted_changes.push(predicted_length_change(stage, qa, qb));
            let m = stage.size();
            ends_as_square = stage.vertical_squares().iter().any(|&(u, l)| {
                let lq = 2 * m - 1 - l;
                (u, lq) == (qa, qb) || (u, lq) == (qb, qa)
            });
        }
        out.push(DiagonalFate {
            endpoints: (a, b),
            lengths,
            ends_as_square,
            predicted_changes,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(s: &str) -> PathPair {
        s.parse().unwrap()
    }

    #[test]
    fn unit_square_single_application() {
        let t = track_rods(&pair("NE;EN"), 1).unwrap();
        assert_eq!(t.stages[1], pair("NE;EN"));
        assert_eq!(t.first_inconsistency(), None);
        // rod 2 (last upper step) and rod 4 (first lower step) turn the corner
        assert_eq!(t.rods[1].corner_turn, Some(1));
        assert_eq!(t.rods[3].corner_turn, Some(1));
        assert_eq!(t.rods[0].flattenings, vec![1]);
        assert_eq!(t.rods[2].flattenings, vec![1]);
    }

    #[test]
    fn predecessor_conventions() {
        let m = 4;
        assert_eq!(PrecedingConvention::Clockwise.predecessor(0, m), None);
        assert_eq!(PrecedingConvention::Clockwise.predecessor(3, m), Some(2));
        assert_eq!(PrecedingConvention::Clockwise.predecessor(4, m), None);
        assert_eq!(PrecedingConvention::Clockwise.predecessor(7, m), Some(6));
        assert_eq!(PrecedingConvention::Forward.predecessor(3, m), Some(2));
        assert_eq!(PrecedingConvention::Forward.predecessor(4, m), Some(5));
        assert_eq!(PrecedingConvention::Forward.predecessor(7, m), None);
    }

    #[test]
    fn domino_diagonals_are_squares_then_vanish() {
        let t = track_rods(&pair("NNE;ENN"), 2).unwrap();
        assert_eq!(t.first_inconsistency(), None);
        let fates = diagonal_fates(&t).unwrap();
        assert_eq!(fates.len(), 2);
        for f in fates {
            assert!(f.survived() >= 1 && f.survived() <= 2);
            assert!(f.ends_as_square);
        }
    }
}
