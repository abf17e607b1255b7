//! Exact combinatorial search for forbidden-subposet problems in the Boolean
//! lattice.
//!
//! * [`poset`]: finite posets, the named families (chains, fans, harps,
//!   diamonds, the butterfly) and the construction algebra.
//! * [`expr`] / [`dsl`]: construction expressions and their text syntax.
//! * [`embedding`]: weak-subposet containment with witnesses.
//! * [`lattice`]: set families, middle levels, and the Lubell function.
//! * [`search`]: branch-and-bound maximization over pattern-free families.
//! * [`params`]: `e(P)`, large intervals, `La(n, P)`, `λ_n(P)` and friends.
//! * [`commands`], [`cache`], [`verify`]: the batch front end used by the
//!   `posetlab` binary.

pub mod bits;
pub mod cache;
pub mod commands;
pub mod dsl;
pub mod embedding;
pub mod error;
pub mod expr;
pub mod lattice;
pub mod params;
pub mod poset;
pub mod rational;
pub mod search;
pub mod verify;

pub use embedding::{contains_subposet, family_contains, levels_contain, Embedding, HostHandle, LevelWindow};
pub use error::{Error, Result};
pub use expr::PosetExpr;

pub use lattice::{lubell, Family};
pub use poset::Poset;
pub use rational::Rational;
