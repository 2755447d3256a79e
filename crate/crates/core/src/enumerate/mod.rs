//! Exhaustive enumeration of numerical semigroups by genus.
//!
//! The semigroup tree has `N` at its root; the children of `S` are the
//! semigroups `S \ {a}` for each minimal generator `a` above the Frobenius
//! number of `S`. Every numerical semigroup of genus `g` appears exactly once
//! at depth `g`, so a depth-first walk to depth `G` visits every semigroup of
//! genus at most `G` once.
//!
//! [`enumerate_bruteforce`] is an independent oracle that filters gap sets
//! directly; [`scan`] drives the bound checks over the tree.

mod oracle;
mod scan;
mod tree;

pub use oracle::{enumerate_bruteforce, DEFAULT_ORACLE_CAP};
pub use scan::{
    extremal, scan, BoundStats, Counterexample, DensityStats, ExtremalEntry, LemmaStats, RowCheck,
    ScanConfig, ScanReport, ScanRow, DEFAULT_EXTREMAL_K, LEMMA_COVER,
};
pub use tree::{enumerate_tree, TreeWalk, DEFAULT_SPLIT_DEPTH};
