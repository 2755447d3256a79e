//! Explicit covering behind `(e - 1)(f + 1 - g) >= m - 1`.
//!
//! Let `L` be the sporadic elements, `m = a_1 < a_2 < ... < a_e` the atoms and
//! `X = {f + 1, ..., f + m}`. Every `x` in `X` that is not a multiple of `m`
//! can be written `x = a_i + l` with `i >= 2` and `l` in `L`: peel atoms off a
//! factorization of `x` until the remainder drops below the conductor. So the
//! `m - 1` non-multiples of `m` in `X` lie inside
//! `Y = (a_2 + L) ∪ ... ∪ (a_e + L)`, and `m - 1 <= |Y| <= (e - 1)|L|`.
//!
//! [`build_witness_cover`] finds one such decomposition per `x` and
//! materializes `Y`; [`verify_lemma_bound`] checks the resulting chain.

use serde::{Deserialize, Serialize};

use crate::bounds::{check_lemma3, BoundCheck};
use crate::error::{Error, Result};
use crate::invariants::InvariantSet;
use crate::semigroup::NumericalSemigroup;

/// `x = atom + sporadic`, with `atom = a_i` for the 1-based `atom_index >= 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub x: u32,
    pub atom: u32,
    pub atom_index: u32,
    pub sporadic: u32,
}

/// Inclusive integer range.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Window {
    pub start: u32,
    pub end: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessCover {
    /// Atoms of the semigroup the cover was built from.
    pub atoms: Vec<u32>,
    pub frobenius: u32,
    /// `X = [f + 1, f + m]`.
    pub window: Window,
    /// The one multiple of `m` in `X`, which needs no witness.
    pub excluded_multiple: u32,
    /// One witness per non-multiple of `m` in `X`, ascending in `x`.
    pub assignments: Vec<Witness>,
    /// `Y`, sorted and deduplicated. May extend past `f + m`.
    pub cover_set: Vec<u32>,
    pub cover_size: u32,
}

/// Outcome of `m - 1 <= |Y| <= (e - 1)(f + 1 - g)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaChainCheck {
    /// `m - 1`
    pub lower: u64,
    pub cover_size: u64,
    /// `(e - 1)(f + 1 - g)`
    pub upper: u64,
    pub lower_holds: bool,
    pub upper_holds: bool,
    pub holds: bool,
    pub lower_equality: bool,
    pub upper_equality: bool,
    /// The inequality the chain implies, as evaluated by the bounds module.
    pub implied: BoundCheck,
}

/// Smallest-index witness for each non-multiple of `m` in `X`, plus `Y`.
pub fn build_witness_cover(s: &NumericalSemigroup) -> Result<WitnessCover> {
    let frobenius = s.frobenius().ok_or(Error::IsFullSemigroup)?;
    let m = s.multiplicity();
    let atoms = s.minimal_generators();
    let conductor = frobenius + 1;
    let window = Window {
        start: conductor,
        end: frobenius + m,
    };

    let mut multiples = (window.start..=window.end).filter(|x| x % m == 0);
    let excluded_multiple = multiples
        .next()
        .ok_or_else(|| Error::InvariantViolation(format!("{s}: no multiple of m in [f+1, f+m]")))?;
    if let Some(extra) = multiples.next() {
        return Err(Error::InvariantViolation(format!(
            "{s}: {excluded_multiple} and {extra} are both multiples of m in [f+1, f+m]"
        )));
    }

    let is_sporadic = |l: u32| l < conductor && s.contains(l.into());
    let mut assignments = Vec::with_capacity(m as usize - 1);
    for x in (window.start..=window.end).filter(|x| x % m != 0) {
        let witness = atoms
            .iter()
            .enumerate()
            .skip(1)
            .take_while(|(_, &a)| a <= x)
            .find(|(_, &a)| is_sporadic(x - a))
            .map(|(i, &a)| Witness {
                x,
                atom: a,
                atom_index: i as u32 + 1,
                sporadic: x - a,
            })
            .ok_or(Error::WitnessNotFound(x))?;
        assignments.push(witness);
    }

    let sporadic: Vec<u32> = s.elements_below(conductor).collect();
    let mut cover_set: Vec<u32> = atoms[1..]
        .iter()
        .flat_map(|&a| sporadic.iter().map(move |&l| a + l))
        .collect();
    cover_set.sort_unstable();
    cover_set.dedup();

    Ok(WitnessCover {
        atoms: atoms.to_vec(),
        frobenius,
        window,
        excluded_multiple,
        assignments,
        cover_size: cover_set.len() as u32,
        cover_set,
    })
}

pub fn verify_lemma_bound(cover: &WitnessCover, inv: &InvariantSet) -> Result<LemmaChainCheck> {
    if cover.atoms != inv.atoms || cover.frobenius != inv.frobenius {
        return Err(Error::MismatchedInputs);
    }
    let lower = u64::from(inv.multiplicity) - 1;
    let cover_size = u64::from(cover.cover_size);
    let upper = u64::from(inv.embedding_dim - 1) * u64::from(inv.sporadic_count);
    let implied = check_lemma3(inv)?;
    let chain = LemmaChainCheck {
        lower,
        cover_size,
        upper,
        lower_holds: lower <= cover_size,
        upper_holds: cover_size <= upper,
        holds: lower <= cover_size && cover_size <= upper,
        lower_equality: lower == cover_size,
        upper_equality: cover_size == upper,
        implied,
    };
    if chain.holds && !chain.implied.holds {
        return Err(Error::InvariantViolation(format!(
            "{}: chain {lower} <= {cover_size} <= {upper} holds but LEMMA_3 fails",
            fmt_atoms(&inv.atoms)
        )));
    }
    Ok(chain)
}

fn fmt_atoms(atoms: &[u32]) -> String {
    let parts: Vec<String> = atoms.iter().map(u32::to_string).collect();
    format!("<{}>", parts.join(","))
}
