//! Dyck paths, 321-avoiding permutations and nonintersecting path pairs.
//!
//! The crate implements the classical bijections `B`, `K` and `M` from Dyck
//! paths to 321-avoiding permutations, the Lalanne-Kreweras involution `L`
//! and its derivative `L'`, the correspondence `φ` between Dyck paths and
//! parallelogram polyominoes, and a set of exhaustive verification suites
//! relating all of them:
//!
//! * `M = B ∘ L = K ∘ L'`
//! * `(L' ∘ L)^n` is path reversal on Dyck `n`-paths, and `L' ∘ L` has
//!   order `2n` for `n ≥ 3`.
//!
//! ```
//! use dyck321::{bijection_b, bijection_k, bijection_m, DyckPath};
//!
//! let path: DyckPath = "UDUDUUDUUDDDUUUDDDUD".parse().unwrap();
//! assert_eq!(bijection_b(&path).to_string(), "2 3 5 1 4 7 6 8 10 9");
//! assert_eq!(bijection_k(&path).to_string(), "1 2 4 6 3 5 9 7 8 10");
//! assert_eq!(bijection_m(&path).to_string(), "1 2 5 3 6 4 8 9 7 10");
//! ```

pub mod bijections;
pub mod codes;
pub mod dyck;
pub mod involutions;
pub mod lab;
pub mod oracle;
pub mod pairs;
pub mod perm;

pub use bijections::*;
pub use codes::{
    code_of, lk_labels, path_of_code, transform_lrmax_to_excedance, validate_code, AdCode,
    CodeError, CodeRole, CodeViolation,
};
pub use dyck::{enumerate_dyck, parse_dyck, render_dyck, DyckError, DyckIter, DyckPath, RenderStyle, Step, MAX_ENUM_SIZE};
pub use involutions::{derivative, lk, lk_graphical, lk_lk_prime, lk_prime, lk_prime_lk};
pub use pairs::{phi, phi_inv, LatticeStep, MinimalDiagonal, PairError, PathPair, Point};
pub use perm::{validate_321, LrMaxSkeleton, Perm321, PermError};
