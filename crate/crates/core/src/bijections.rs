//! The three bijections from Dyck paths to 321-avoiding permutations.
//!
//! * `B` reads the ascent-descent code of a path as an excedance code.
//! * `K` reads the same code as an LRMax code.
//! * `M` reads the `uu`/`dd` labelling `(h, t)` as an excedance code; it is
//!   computed directly by displacing `h_i + 1` to position `t_i`, and
//!   canonically as `B ∘ L`.
//!
//! All three send the empty path to the empty permutation.

use crate::codes::{code_of, lk_labels, path_of_code};
use crate::dyck::DyckPath;
use crate::involutions::lk;
use crate::perm::Perm321;

pub fn bijection_b(path: &DyckPath) -> Perm321 {
    match code_of(path) {
        Ok(code) => Perm321::from_excedance_code(&code),
        Err(_) => Perm321::identity(0),
    }
}

pub fn bijection_k(path: &DyckPath) -> Perm321 {
    match code_of(path) {
        Ok(code) => Perm321::from_lrmax_code(&code),
        Err(_) => Perm321::identity(0),
    }
}

/// `M` via the displacement description: starting from `1 2 ... n`, move
/// the entry `h_i + 1` left to position `t_i` for each `i` in turn.
pub fn bijection_m_direct(path: &DyckPath) -> Perm321 {
    let Ok(labels) = lk_labels(path) else {
        return Perm321::identity(0);
    };
    let mut line: Vec<usize> = (1..=path.size()).collect();
    for (&h, &t) in labels.a().iter().zip(labels.d()) {
        let from = line
            .iter()
            .position(|&v| v == h + 1)
            .expect("value present");
        let v = line.remove(from);
        line.insert(t - 1, v);
    }
    Perm321::new(line).expect("displacement yields a 321-avoider")
}

/// `M = B ∘ L`
pub fn bijection_m(path: &DyckPath) -> Perm321 {
    bijection_b(&lk(path))
}

pub fn bijection_b_inv(perm: &Perm321) -> DyckPath {
    if perm.is_empty() {
        return DyckPath::empty();
    }
    path_of_code(&perm.excedance_code())
}

pub fn bijection_k_inv(perm: &Perm321) -> DyckPath {
    if perm.is_empty() {
        return DyckPath::empty();
    }
    path_of_code(&perm.lrmax_code())
}

/// `M⁻¹ = L ∘ B⁻¹`
pub fn bijection_m_inv(perm: &Perm321) -> DyckPath {
    lk(&bijection_b_inv(perm))
}
