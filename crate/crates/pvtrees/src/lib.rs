//! Exact combinatorics of proper vertices in labeled trees.
//!
//! A vertex of a labeled tree is proper when it carries the smallest label in
//! its descendant subtree. This crate provides, all in exact arithmetic:
//!
//! * the tree families (labeled trees and forests, plane trees and forests,
//!   binary and k-ary trees) with deterministic exhaustive generators,
//! * the proper-vertex counting polynomials of these families, via closed
//!   product formulas, a root-deletion recurrence, and brute-force summation,
//! * a chain of bijections (root deletion, a subtree flip, and a rotation
//!   correspondence) composing to a bijection from constrained bicolored
//!   binary trees to bicolored forests, which proves the hook-length identity
//!   `sum over binary trees B on [n] of n!/2^n prod_v (1 + 1/h(v)) = (n+1)^(n-1)`,
//! * truncated exponential generating function checks: each family's EGF in x
//!   with t marking proper vertices satisfies an algebraic ODE and, at integer
//!   t, a functional equation against the EGF of rooted labeled trees.
//!
//! See the `examples/` directory for end-to-end walkthroughs and the
//! `pvtrees` binary for a command-line surface over the same operations.

pub mod bijection;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod golden;
pub mod identity;
pub mod poly;
pub mod record;
pub mod series;
pub mod trees;

pub use enumerate::{count, Family, DEFAULT_CEILING};
pub use error::{Error, Result};
pub use poly::Poly;
pub use trees::{Color, Colored, Forest, Label, LabeledTree, PlaneForest, PlaneTree, SlottedTree, TreeLike};
