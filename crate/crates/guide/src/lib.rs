//! Runs the code listings of the book in `book/src` as doc-tests.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/semigroups.md")]
pub mod semigroups {}

#[doc = include_str!("../../../book/src/invariants.md")]
pub mod invariants {}

#[doc = include_str!("../../../book/src/bounds.md")]
pub mod bounds {}

#[doc = include_str!("../../../book/src/witness-cover.md")]
pub mod witness_cover {}

#[doc = include_str!("../../../book/src/tree-and-scans.md")]
pub mod tree_and_scans {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
