//! The Lalanne-Kreweras involution `L`, the derivative combinator and `L'`.

use crate::codes::{lk_labels, path_of_code};
use crate::dyck::{DyckPath, Step};

/// `L`: rebuild the path whose ascent-descent code is the `uu`/`dd` labelling.
pub fn lk(path: &DyckPath) -> DyckPath {
    match lk_labels(path) {
        Ok(code) => path_of_code(&code),
        Err(_) => DyckPath::empty(),
    }
}

/// `L` from the geometric construction. Rays are cast south-east from the
/// middle vertex of every `uu` and south-west from the middle vertex of every
/// `dd`; the `i`-th rays of each family meet at a lattice point on or below
/// the axis. Reflected above the axis these points are the valleys of `L(path)`.
///
/// Panics if a pair of rays misses the lattice, which would mean the
/// construction itself is wrong.
pub fn lk_graphical(path: &DyckPath) -> DyckPath {
    if path.is_empty() {
        return DyckPath::empty();
    }
    let steps = path.steps();
    let heights = path.heights();
    // vertex i sits at (i, heights[i])
    let mut se = Vec::new();
    let mut sw = Vec::new();
    for i in 1..steps.len() {
        match (steps[i - 1], steps[i]) {
            (Step::Up, Step::Up) => se.push((i as i64, heights[i] as i64)),
            (Step::Down, Step::Down) => sw.push((i as i64, heights[i] as i64)),
            _ => {}
        }
    }
    assert_eq!(se.len(), sw.len(), "uu and dd counts differ");

    // (x1 + t, y1 - t) = (x2 - s, y2 - s)
    let valleys: Vec<(i64, i64)> = se
        .iter()
        .zip(&sw)
        .map(|(&(x1, y1), &(x2, y2))| {
            let twice_x = x1 + x2 + y1 - y2;
            let twice_y = y1 + y2 - (x2 - x1);
            assert!(
                twice_x % 2 == 0 && twice_y % 2 == 0,
                "rays from {:?} and {:?} meet off the lattice",
                (x1, y1),
                (x2, y2)
            );
            (twice_x / 2, -(twice_y / 2))
        })
        .collect();

    // between consecutive valleys the path is a single peak
    let end = (steps.len() as i64, 0);
    let mut out = Vec::with_capacity(steps.len());
    let mut prev = (0i64, 0i64);
    for &(x, h) in valleys.iter().chain(std::iter::once(&end)) {
        let (dx, dh) = (x - prev.0, h - prev.1);
        assert!(
            dx > 0 && (dx + dh) % 2 == 0 && dx >= dh.abs() + 2,
            "marked points do not describe the valleys of a Dyck path"
        );
        let ups = ((dx + dh) / 2) as usize;
        let downs = ((dx - dh) / 2) as usize;
        out.extend(std::iter::repeat_n(Step::Up, ups));
        out.extend(std::iter::repeat_n(Step::Down, downs));
        prev = (x, h);
    }
    DyckPath::from_steps(out).expect("valleys of a Dyck path")
}

/// Applies `f` to the interior of every component: each `u P d` becomes
/// `u f(P) d`. `f` must preserve size.
pub fn derivative<F>(f: F) -> impl Fn(&DyckPath) -> DyckPath
where
    F: Fn(&DyckPath) -> DyckPath,
{
    move |path: &DyckPath| {
        let parts: Vec<DyckPath> = path
            .components()
            .iter()
            .map(|c| {
                let inner = c.unelevate().expect("components are elevated");
                f(&inner).elevate()
            })
            .collect();
        DyckPath::concat(&parts)
    }
}

/// `L'`, the derivative of `L`.
pub fn lk_prime(path: &DyckPath) -> DyckPath {
    derivative(lk)(path)
}

/// `L' ∘ L`
pub fn lk_prime_lk(path: &DyckPath) -> DyckPath {
    lk_prime(&lk(path))
}

/// `L ∘ L'`, the inverse of [`lk_prime_lk`].
pub fn lk_lk_prime(path: &DyckPath) -> DyckPath {
    lk(&lk_prime(path))
}
