//! Frobenius number, genus, multiplicity, embedding dimension, sporadic
//! elements and Wilf density.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::semigroup::NumericalSemigroup;

/// All numeric invariants of a numerical semigroup `S ≠ N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InvariantSet {
    pub frobenius: u32,
    pub genus: u32,
    pub multiplicity: u32,
    pub embedding_dim: u32,
    pub atoms: Vec<u32>,
    /// `f + 1 - g`, the number of members below the conductor.
    pub sporadic_count: u32,
    /// `(f + 1 - g) / (f + 1)` in lowest terms.
    pub wilf_density: Rational,
}

impl InvariantSet {
    pub fn conductor(&self) -> u32 {
        self.frobenius + 1
    }
}

/// Members of `S` below the conductor, ascending. Always contains 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SporadicSet {
    pub elements: Vec<u32>,
}

pub fn invariants_of(s: &NumericalSemigroup) -> Result<InvariantSet> {
    let frobenius = s.frobenius().ok_or(Error::IsFullSemigroup)?;
    let conductor = frobenius + 1;
    let genus = s.genus();
    let sporadic_count = conductor - genus;
    let wilf_density = Rational::from_u64s(sporadic_count.into(), conductor.into())?;
    Ok(InvariantSet {
        frobenius,
        genus,
        multiplicity: s.multiplicity(),
        embedding_dim: s.embedding_dimension(),
        atoms: s.minimal_generators().to_vec(),
        sporadic_count,
        wilf_density,
    })
}

pub fn sporadic_elements(s: &NumericalSemigroup) -> Result<SporadicSet> {
    let frobenius = s.frobenius().ok_or(Error::IsFullSemigroup)?;
    let elements: Vec<u32> = s.elements_below(frobenius + 1).collect();
    let expected = frobenius + 1 - s.genus();
    if elements.len() != expected as usize {
        return Err(Error::InvariantViolation(format!(
            "{s}: {} sporadic elements but f + 1 - g = {expected}",
            elements.len()
        )));
    }
    Ok(SporadicSet { elements })
}

/// `e (f + 1 - g) - (f + 1)`; nonnegative exactly when `d >= 1/e`.
pub fn wilf_number(s: &NumericalSemigroup) -> Result<i64> {
    let inv = invariants_of(s)?;
    let e = i64::from(inv.embedding_dim);
    Ok(e * i64::from(inv.sporadic_count) - i64::from(inv.conductor()))
}
