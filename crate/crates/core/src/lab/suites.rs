//! Exhaustive verification suites.
//!
//! Every suite enumerates all Dyck paths in a size range, checks one family
//! of identities on each, and collects counterexamples into a
//! [`VerificationReport`] instead of stopping at the first one.

use std::collections::HashSet;
use std::ops::RangeInclusive;
use std::time::Instant;

use rayon::prelude::*;

use crate::bijections::{
    bijection_b, bijection_b_inv, bijection_k, bijection_k_inv, bijection_m, bijection_m_direct,
    bijection_m_inv,
};
use crate::codes::{code_of, path_of_code, transform_lrmax_to_excedance};
use crate::dyck::{DyckIter, DyckPath};
use crate::involutions::{lk, lk_graphical, lk_lk_prime, lk_prime, lk_prime_lk};
use crate::oracle::{filtered_321_avoiders, m_by_transpositions};
use crate::pairs::{phi, phi_inv};
use crate::perm::Perm321;

use super::orbit::{orbit, order_of_map, MapKind};
use super::report::{Failure, VerificationReport};
use super::rods::{diagonal_fates, track_rods, PrecedingConvention};

pub const DEFAULT_FAILURE_LIMIT: usize = 10;
pub const DEFAULT_IDENTITY_MAX: usize = 11;
pub const DEFAULT_GEOMETRY_MAX: usize = 8;

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    /// Counterexamples kept per report.
    pub failure_limit: usize,
    /// Worker threads; `None` uses every available core.
    pub workers: Option<usize>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            failure_limit: DEFAULT_FAILURE_LIMIT,
            workers: None,
        }
    }
}

impl SuiteConfig {
    pub fn single_threaded() -> Self {
        SuiteConfig {
            workers: Some(1),
            ..Default::default()
        }
    }

    fn run<R: Send>(&self, job: impl FnOnce() -> R + Send) -> R {
        match self.workers {
            Some(w) => rayon::ThreadPoolBuilder::new()
                .num_threads(w.max(1))
                .build()
                .expect("thread pool")
                .install(job),
            None => job(),
        }
    }
}

/// Runs `check` on every path with size in `sizes`; each call returns the
/// failures it found for that path.
pub fn exhaustive<F>(
    suite: &str,
    sizes: RangeInclusive<usize>,
    cfg: &SuiteConfig,
    check: F,
) -> VerificationReport
where
    F: Fn(&DyckPath) -> Vec<Failure> + Sync,
{
    let started = Instant::now();
    let (lo, hi) = (*sizes.start(), *sizes.end());
    let limit = cfg.failure_limit;
    let mut report = cfg.run(|| {
        sizes
            .map(|n| {
                let paths: Vec<DyckPath> = DyckIter::new(n).collect();
                paths
                    .par_iter()
                    .fold(
                        || VerificationReport::new(suite, n, n),
                        |mut acc, p| {
                            acc.checked += 1;
                            let room = limit.saturating_sub(acc.failures.len());
                            acc.failures.extend(check(p).into_iter().take(room));
                            acc
                        },
                    )
                    .reduce(
                        || VerificationReport::new(suite, n, n),
                        |a, b| a.merge(b, limit),
                    )
            })
            .fold(VerificationReport::new(suite, lo, hi), |a, b| a.merge(b, limit))
    });
    report.elapsed_ms = started.elapsed().as_millis() as u64;
    report
}

fn mismatch<T: PartialEq + ToString>(
    what: &str,
    path: &DyckPath,
    expected: T,
    actual: T,
) -> Option<Failure> {
    (expected != actual).then(|| Failure::new(format!("{what} @ {path}"), expected, actual))
}

/// `M = B∘L`, `M = K∘L'`, `K⁻¹∘B = L'∘L` and `B⁻¹∘K = L∘L'` on every path.
pub fn verify_identities(max_n: usize, cfg: &SuiteConfig) -> VerificationReport {
    exhaustive("identities", 1..=max_n, cfg, |p| {
        let m = bijection_m(p);
        [
            mismatch("M = B o L", p, bijection_b(&lk(p)), m.clone()),
            mismatch("M = K o L'", p, bijection_k(&lk_prime(p)), m.clone()),
            mismatch("M = M_direct", p, bijection_m_direct(p), m),
            mismatch("K^-1 o B = L' o L", p, lk_prime_lk(p), bijection_k_inv(&bijection_b(p))),
            mismatch("B^-1 o K = L o L'", p, lk_lk_prime(p), bijection_b_inv(&bijection_k(p))),
        ]
        .into_iter()
        .flatten()
        .collect()
    })
}

/// `(L'∘L)^n = R` on Dyck `n`-paths.
pub fn verify_theorem(max_n: usize, cfg: &SuiteConfig) -> VerificationReport {
    verify_theorem_with(max_n, cfg, lk_prime_lk)
}

/// [`verify_theorem`] with an arbitrary map in place of `L'∘L`.
pub fn verify_theorem_with<F>(max_n: usize, cfg: &SuiteConfig, map: F) -> VerificationReport
where
    F: Fn(&DyckPath) -> DyckPath + Sync,
{
    exhaustive("theorem", 1..=max_n, cfg, |p| {
        let mut cur = p.clone();
        for _ in 0..p.size() {
            cur = map(&cur);
        }
        mismatch("(L' o L)^n = R", p, p.reverse(), cur)
            .into_iter()
            .collect()
    })
}

/// The order of `L'∘L` on `n`-paths is `2n` for `n ≥ 3` (2 at `n = 2`, 1
/// below), and the orbit of `u^{n-1} d^{n-1} u d` has exactly `2n` elements
/// for `n ≥ 4`.
pub fn verify_corollary(
    order_sizes: RangeInclusive<usize>,
    orbit_sizes: RangeInclusive<usize>,
    cfg: &SuiteConfig,
) -> VerificationReport {
    let started = Instant::now();
    let lo = (*order_sizes.start()).min(*orbit_sizes.start());
    let hi = (*order_sizes.end()).max(*orbit_sizes.end());
    let mut report = VerificationReport::new("corollary", lo, hi);
    let mut fail = |f: Failure| {
        if report.failures.len() < cfg.failure_limit {
            report.failures.push(f);
        }
    };
    let expected_order = |n: usize| match n {
        0 | 1 => 1,
        2 => 2,
        _ => 2 * n as u64,
    };
    let orders: Vec<(usize, u64)> = cfg.run(|| {
        order_sizes
            .clone()
            .into_par_iter()
            .map(|n| (n, order_of_map(n, MapKind::LprimeL).expect("size within cap")))
            .collect()
    });
    let mut checked = 0;
    for (n, order) in orders {
        checked += 1;
        if order != expected_order(n) {
            fail(Failure::new(format!("order of L' o L, n={n}"), expected_order(n), order));
        }
    }
    for n in orbit_sizes {
        checked += 1;
        let mut base = DyckPath::pyramid(n - 1).steps().to_vec();
        base.extend(DyckPath::zigzag(1).steps());
        let base = DyckPath::from_steps(base).expect("valid path");
        let len = orbit(&base, MapKind::LprimeL).len();
        if len != 2 * n {
            fail(Failure::new(format!("orbit size of {base}"), 2 * n, len));
        }
    }
    report.checked = checked;
    report.elapsed_ms = started.elapsed().as_millis() as u64;
    report
}

/// Round trip of `φ` and the three geometric translations
/// `flip45∘φ = φ∘L`, `rotate180∘φ = φ∘R`, `tweak∘φ = φ∘(L'∘L)`.
pub fn verify_path_pairs(
    round_trip_max: usize,
    geometry_max: usize,
    cfg: &SuiteConfig,
) -> VerificationReport {
    exhaustive("pairs", 0..=round_trip_max.max(geometry_max), cfg, |p| {
        let mut out = Vec::new();
        let q = phi(p);
        if p.size() <= round_trip_max {
            out.extend(mismatch("phi_inv o phi", p, p.clone(), phi_inv(&q)));
            if q.size() != p.size() + 1 {
                out.push(Failure::new(format!("size of phi @ {p}"), p.size() + 1, q.size()));
            }
        }
        if p.size() <= geometry_max {
            out.extend(mismatch("flip45 o phi = phi o L", p, phi(&lk(p)), q.flip45()));
            out.extend(mismatch("rotate180 o phi = phi o R", p, phi(&p.reverse()), q.rotate180()));
            if !p.is_empty() {
                let tweaked = q.tweak().expect("nondegenerate");
                out.extend(mismatch("tweak o phi = phi o L'L", p, phi(&lk_prime_lk(p)), tweaked));
            }
        }
        out
    })
}

/// Exactly `n` minimal diagonals in `φ(p)` for every `n`-path `p`.
pub fn verify_diagonal_count(max_n: usize, cfg: &SuiteConfig) -> VerificationReport {
    exhaustive("diagonals", 1..=max_n, cfg, |p| {
        let count = phi(p).minimal_diagonals().expect("nondegenerate").len();
        mismatch("minimal diagonal count", p, p.size(), count)
            .into_iter()
            .collect()
    })
}

fn proposition_failures(p: &DyckPath, convention: PrecedingConvention) -> Vec<Failure> {
    let n = p.size();
    let pair = phi(p);
    let m = pair.size();
    let trace = track_rods(&pair, n).expect("nondegenerate");
    let start = pair.clockwise_steps();
    trace
        .rods
        .iter()
        .filter_map(|rod| {
            let q = rod.identity - 1;
            let predicted = convention
                .predecessor(q, m)
                .is_some_and(|pred| !start[pred].is_vertical());
            let actual = rod.flattened_after_corner();
            (predicted != actual).then(|| {
                Failure::new(
                    format!("{} convention, step {} of {pair} (from {p})", convention.name(), rod.identity),
                    predicted,
                    actual,
                )
            })
        })
        .collect()
}

// Structural facts that hold whatever "preceded" means.
fn rod_structure_failures(p: &DyckPath) -> Vec<Failure> {
    let n = p.size();
    let pair = phi(p);
    let m = pair.size();
    let trace = track_rods(&pair, n).expect("nondegenerate");
    let mut out = Vec::new();
    let here = |what: &str| format!("{what} @ {p}");
    if let Some((id, stage)) = trace.first_inconsistency() {
        out.push(Failure::new(here("rod history"), "consistent", format!("rod {id} at stage {stage}")));
    }
    out.extend(mismatch(
        "n applications rotate the pair",
        p,
        pair.rotate180(),
        trace.stages[n].clone(),
    ));
    let start = pair.clockwise_steps();
    for rod in &trace.rods {
        let q = rod.identity - 1;
        let turns = q != 0 && q != m;
        if rod.corner_turn.is_some() != turns {
            out.push(Failure::new(here(&format!("corner turn of rod {}", rod.identity)), turns, rod.corner_turn.is_some()));
        }
        if rod.flattenings_before_corner() > 1 || rod.flattenings_after_corner() > 1 {
            out.push(Failure::new(
                here(&format!("flattenings of rod {}", rod.identity)),
                "at most one before and one after the corner",
                format!("{:?} (corner {:?})", rod.flattenings, rod.corner_turn),
            ));
        }
        if start[q].is_vertical() && rod.flattenings_before_corner() != 1 {
            out.push(Failure::new(
                here(&format!("vertical rod {} flattened before corner", rod.identity)),
                1,
                rod.flattenings_before_corner(),
            ));
        }
    }
    let fates = diagonal_fates(&trace).expect("nondegenerate");
    for f in fates {
        let survived = f.survived();
        if survived == 0 || survived > n || !f.ends_as_square {
            out.push(Failure::new(
                here(&format!("minimal diagonal at clockwise vertices {:?}", f.endpoints)),
                format!("destroyed within {n} applications after forming a square"),
                format!("survived {survived} stages, square={}", f.ends_as_square),
            ));
        }
        if !f.unexpected_changes().is_empty() {
            out.push(Failure::new(
                here(&format!("length changes of diagonal {:?}", f.endpoints)),
                format!("{:?}", f.predicted_changes),
                format!("lengths {:?}", f.lengths),
            ));
        }
    }
    out
}

/// Whether a step is flattened after it turns the corner exactly when the
/// step preceding it in the original pair is flat. Runs the check under both
/// readings of "preceding"; only the clockwise one counts towards pass/fail,
/// the outcome of the other is recorded in the notes. Also checks the rod
/// bookkeeping itself and the fate of every minimal diagonal.
pub fn verify_proposition(max_n: usize, cfg: &SuiteConfig) -> VerificationReport {
    verify_proposition_with(max_n, cfg, PrecedingConvention::Clockwise)
}

pub fn verify_proposition_with(
    max_n: usize,
    cfg: &SuiteConfig,
    convention: PrecedingConvention,
) -> VerificationReport {
    let other = match convention {
        PrecedingConvention::Clockwise => PrecedingConvention::Forward,
        PrecedingConvention::Forward => PrecedingConvention::Clockwise,
    };
    let mut report = exhaustive("proposition", 1..=max_n, cfg, |p| {
        let mut out = proposition_failures(p, convention);
        out.extend(rod_structure_failures(p));
        out
    });
    let alt = exhaustive("proposition", 1..=max_n, cfg, |p| proposition_failures(p, other));
    let describe = |c: PrecedingConvention, r: &VerificationReport| {
        let verdict = if r.passed() { "holds" } else { "fails" };
        let example = r
            .failures
            .first()
            .map(|f| format!("; e.g. {} expected {} got {}", f.input, f.expected, f.actual))
            .unwrap_or_default();
        format!("{} convention: {verdict} over {} pairs{example}", c.name(), r.checked)
    };
    let own = describe(convention, &report);
    report.notes.push(format!("selected {own}"));
    report.notes.push(format!("alternative {}", describe(other, &alt)));
    report
}

/// Images of `B`, `K`, `M` on `n`-paths are exactly the 321-avoiders of
/// `[n]` found by brute-force filtering, without collisions; each inverse
/// undoes its bijection in both directions.
pub fn verify_bijectivity(max_n: usize, cfg: &SuiteConfig) -> VerificationReport {
    let started = Instant::now();
    let mut report = VerificationReport::new("bijectivity", 0, max_n);
    type Pair = (fn(&DyckPath) -> Perm321, fn(&Perm321) -> DyckPath, &'static str);
    let maps: [Pair; 3] = [
        (bijection_b, bijection_b_inv, "B"),
        (bijection_k, bijection_k_inv, "K"),
        (bijection_m, bijection_m_inv, "M"),
    ];
    let results: Vec<(usize, Vec<Failure>, u64)> = cfg.run(|| {
        (0..=max_n)
            .into_par_iter()
            .map(|n| {
                let mut failures = Vec::new();
                let oracle: HashSet<Vec<usize>> = filtered_321_avoiders(n).into_iter().collect();
                let paths: Vec<DyckPath> = DyckIter::new(n).collect();
                for (f, f_inv, name) in maps {
                    let mut image = HashSet::new();
                    for p in &paths {
                        let perm = f(p);
                        if f_inv(&perm) != *p {
                            failures.push(Failure::new(format!("{name}^-1 o {name} @ {p}"), p, f_inv(&perm)));
                        }
                        if !image.insert(perm.values().to_vec()) {
                            failures.push(Failure::new(format!("{name} collision @ {p}"), "injective", &perm));
                        }
                    }
                    if image != oracle {
                        failures.push(Failure::new(
                            format!("image of {name}, n={n}"),
                            format!("{} filtered 321-avoiders", oracle.len()),
                            format!("{} images, {} outside the filtered set", image.len(), image.difference(&oracle).count()),
                        ));
                    }
                    for values in &oracle {
                        let perm = Perm321::new(values.clone()).expect("oracle output avoids 321");
                        if f(&f_inv(&perm)) != perm {
                            failures.push(Failure::new(format!("{name} o {name}^-1"), &perm, f(&f_inv(&perm))));
                        }
                    }
                }
                (n, failures, paths.len() as u64)
            })
            .collect()
    });
    for (_, failures, checked) in results {
        report.checked += checked;
        let room = cfg.failure_limit.saturating_sub(report.failures.len());
        report.failures.extend(failures.into_iter().take(room));
    }
    report.elapsed_ms = started.elapsed().as_millis() as u64;
    report
}

/// The geometric description of `L` against the code-based one, and the
/// displacement form of `M` against the literal transposition product.
pub fn verify_oracles(graphical_max: usize, transposition_max: usize, cfg: &SuiteConfig) -> VerificationReport {
    exhaustive("oracles", 0..=graphical_max.max(transposition_max), cfg, |p| {
        let mut out = Vec::new();
        if p.size() <= graphical_max {
            out.extend(mismatch("lk_graphical = lk", p, lk(p), lk_graphical(p)));
        }
        if p.size() <= transposition_max {
            let direct = bijection_m(p).values().to_vec();
            let literal = m_by_transpositions(p);
            if direct != literal {
                out.push(Failure::new(format!("transposition product @ {p}"), format!("{literal:?}"), format!("{direct:?}")));
            }
        }
        out
    })
}

/// `path_of_code ∘ transform = L ∘ L' ∘ path_of_code` on every code of size
/// `1..=max_n`, enumerated through its path.
pub fn verify_code_transform(max_n: usize, cfg: &SuiteConfig) -> VerificationReport {
    exhaustive("code-transform", 1..=max_n, cfg, |p| {
        let code = code_of(p).expect("nonempty");
        let lhs = path_of_code(&transform_lrmax_to_excedance(&code));
        mismatch("transform = L o L'", p, lk_lk_prime(p), lhs).into_iter().collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        let cfg = SuiteConfig::single_threaded();
        let r = verify_theorem(1, &cfg);
        assert!(r.passed());
        assert_eq!(r.checked, 1);
        let r = verify_theorem(6, &cfg);
        assert!(r.passed());
        assert_eq!(r.checked, 1 + 2 + 5 + 14 + 42 + 132);
        assert!(verify_identities(6, &cfg).passed());
        assert!(verify_diagonal_count(5, &cfg).passed());
        assert!(verify_path_pairs(6, 5, &cfg).passed());
        assert!(verify_corollary(0..=6, 4..=6, &cfg).passed());
        assert!(verify_bijectivity(5, &cfg).passed());
        assert!(verify_oracles(5, 5, &cfg).passed());
        assert!(verify_code_transform(6, &cfg).passed());
    }

    #[test]
    fn corrupted_map_is_caught() {
        let cfg = SuiteConfig::default();
        // L alone is not an n-th root of R
        let r = verify_theorem_with(5, &cfg, lk);
        assert!(!r.passed());
        assert!(r.failures.len() <= DEFAULT_FAILURE_LIMIT);
        let cfg = SuiteConfig {
            failure_limit: 3,
            workers: Some(2),
        };
        let r = verify_theorem_with(5, &cfg, |p: &DyckPath| lk_prime_lk(&p.reverse()));
        assert_eq!(r.failures.len(), 3);
    }

    #[test]
    fn proposition_small() {
        let r = verify_proposition(4, &SuiteConfig::single_threaded());
        assert!(r.passed(), "{:?}", r.failures);
        assert_eq!(r.notes.len(), 2);
    }
}
