use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::dyck::{DyckError, DyckIter, DyckPath, MAX_ENUM_SIZE};
use crate::involutions::{lk, lk_lk_prime, lk_prime, lk_prime_lk};

/// The size-preserving bijections whose orbits can be computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MapKind {
    LprimeL,
    LLprime,
    L,
    Lprime,
    R,
}

impl MapKind {
    pub const ALL: [MapKind; 5] = [
        MapKind::LprimeL,
        MapKind::LLprime,
        MapKind::L,
        MapKind::Lprime,
        MapKind::R,
    ];

    pub fn apply(self, path: &DyckPath) -> DyckPath {
        match self {
            MapKind::LprimeL => lk_prime_lk(path),
            MapKind::LLprime => lk_lk_prime(path),
            MapKind::L => lk(path),
            MapKind::Lprime => lk_prime(path),
            MapKind::R => path.reverse(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MapKind::LprimeL => "LprimeL",
            MapKind::LLprime => "LLprime",
            MapKind::L => "L",
            MapKind::Lprime => "Lprime",
            MapKind::R => "R",
        }
    }
}

impl fmt::Display for MapKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MapKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        MapKind::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown map {s:?}"))
    }
}

/// The cycle of `base` under a map; `elements[0]` is the base itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    pub map: MapKind,
    pub elements: Vec<DyckPath>,
}

impl Orbit {
    pub fn base(&self) -> &DyckPath {
        &self.elements[0]
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// Iterates `map` from `base` until it comes back. The maps are bijections,
/// so the first repeated value is the base.
pub fn orbit(base: &DyckPath, map: MapKind) -> Orbit {
    let mut elements = vec![base.clone()];
    let mut cur = map.apply(base);
    while &cur != base {
        debug_assert!(!elements.contains(&cur), "map is not a bijection");
        let next = map.apply(&cur);
        elements.push(cur);
        cur = next;
    }
    Orbit { map, elements }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Least common multiple of the orbit lengths over all Dyck `n`-paths.
pub fn order_of_map(n: usize, map: MapKind) -> Result<u64, DyckError> {
    if n > MAX_ENUM_SIZE {
        return Err(DyckError::CapExceeded {
            size: n,
            cap: MAX_ENUM_SIZE,
        });
    }
    let mut seen = HashSet::new();
    let mut order = 1u64;
    for path in DyckIter::new(n) {
        if seen.contains(&path) {
            continue;
        }
        let o = orbit(&path, map);
        let len = o.len() as u64;
        order = order / gcd(order, len) * len;
        seen.extend(o.elements);
    }
    Ok(order)
}
