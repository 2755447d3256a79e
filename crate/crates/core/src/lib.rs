//! Numerical semigroups and exact checks of Wilf-type density bounds.
//!
//! A numerical semigroup is an additively closed set `S ⊆ N` containing 0
//! with finite complement. For `S ≠ N` with Frobenius number `f`, genus `g`,
//! multiplicity `m` and embedding dimension `e`, the Wilf density
//! `d = (f + 1 - g)/(f + 1)` is the fraction of `[0, f]` that lies in `S`.
//!
//! The crate provides
//!
//! * [`NumericalSemigroup`]: construction from generators or gaps, membership,
//!   minimal generators, and the semigroup-tree child operation;
//! * [`invariants`]: `f`, `g`, `m`, `e`, the sporadic elements and `d`;
//! * [`bounds`]: lower bounds on `d` evaluated in exact rational arithmetic;
//! * [`lemma`]: an explicit witness cover certifying `(e-1)(f+1-g) >= m-1`;
//! * [`enumerate`]: exhaustive enumeration by genus, a brute-force oracle,
//!   and parallel scans whose reports do not depend on the thread count.
//!
//! ```
//! use wilf_core::{bounds, invariants_of, NumericalSemigroup, Rational};
//!
//! let s: NumericalSemigroup = "3,5,7".parse()?;
//! let inv = invariants_of(&s)?;
//! assert_eq!(inv.wilf_density, Rational::new(2, 5)?);
//! let wilf = bounds::check_wilf(&inv)?;
//! assert!(wilf.holds);
//! assert_eq!(wilf.slack, Rational::new(1, 15)?);
//! # Ok::<(), wilf_core::Error>(())
//! ```

mod bits;
pub mod bounds;
pub mod enumerate;
mod error;
pub mod invariants;
pub mod lemma;
mod rational;
mod semigroup;

pub use bounds::{BoundCheck, BoundId};
pub use error::{Error, Result};
pub use invariants::{invariants_of, sporadic_elements, wilf_number, InvariantSet, SporadicSet};
pub use rational::Rational;
pub use semigroup::{parse_generator_list, NumericalSemigroup, DEFAULT_MAX_WINDOW};
