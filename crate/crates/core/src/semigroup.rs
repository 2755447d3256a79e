//! Canonical finite representation of a numerical semigroup.
//!
//! A numerical semigroup `S` is stored as a membership bitmap over the window
//! `[0, conductor + multiplicity)`. Everything at or above the conductor is in
//! `S`, so the window is enough to answer membership queries and it is also
//! exactly wide enough to contain every minimal generator.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::bits::BitWindow;
use crate::error::{Error, Result};

/// Largest membership window (in bits) that construction will allocate.
pub const DEFAULT_MAX_WINDOW: usize = 1 << 26;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    conductor: u32,
    multiplicity: u32,
    membership: BitWindow,
    atoms: Vec<u32>,
}

impl NumericalSemigroup {
    /// The semigroup of all nonnegative integers.
    pub fn full() -> Self {
        let mut membership = BitWindow::zeros(1);
        membership.set(0);
        Self {
            conductor: 0,
            multiplicity: 1,
            membership,
            atoms: vec![1],
        }
    }

    /// Smallest numerical semigroup containing `gens`.
    ///
    /// Redundant generators are dropped; the result's atoms are minimal.
    pub fn from_generators(gens: &[u32]) -> Result<Self> {
        Self::from_generators_with_limit(gens, DEFAULT_MAX_WINDOW)
    }

    /// Like [`from_generators`](Self::from_generators) with an explicit cap on
    /// the sieve window; exceeding it is an [`Error::Overflow`].
    pub fn from_generators_with_limit(gens: &[u32], max_window: usize) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if gens.contains(&0) {
            return Err(Error::ZeroGenerator);
        }
        let gcd = gens.iter().fold(0u32, |acc, &g| acc.gcd(&g));
        if gcd != 1 {
            return Err(Error::GcdNotOne { gcd });
        }
        let multiplicity = *gens.iter().min().expect("nonempty");
        if multiplicity == 1 {
            return Ok(Self::full());
        }
        let mut gens = gens.to_vec();
        gens.sort_unstable();
        gens.dedup();

        let max_gen = *gens.last().expect("nonempty") as usize;
        let m = multiplicity as usize;
        let mut window = (2 * max_gen).max(64);
        loop {
            if window > max_window {
                return Err(Error::Overflow(format!(
                    "closure window exceeds {max_window} bits"
                )));
            }
            let sieve = coin_sieve(&gens, window);
            if let Some(conductor) = first_run(&sieve, m) {
                let len = conductor + m;
                let membership = BitWindow::from_bools(&sieve[..len]);
                let conductor = u32::try_from(conductor)
                    .map_err(|_| Error::Overflow("conductor exceeds u32".into()))?;
                return Ok(Self::from_parts(conductor, multiplicity, membership));
            }
            window = window
                .checked_mul(2)
                .ok_or_else(|| Error::Overflow("sieve window".into()))?;
        }
    }

    /// `N \ gaps`, provided that set is additively closed.
    ///
    /// On failure the lexicographically first pair `(a, b)`, `a <= b`, of
    /// non-gaps whose sum is a gap is reported.
    pub fn from_gaps(gaps: &[u32]) -> Result<Self> {
        if gaps.contains(&0) {
            return Err(Error::ZeroGap);
        }
        let Some(&max_gap) = gaps.iter().max() else {
            return Ok(Self::full());
        };
        let conductor = max_gap as usize + 1;
        let mut is_gap = vec![false; conductor];
        for &g in gaps {
            is_gap[g as usize] = true;
        }
        for a in 1..conductor {
            if is_gap[a] {
                continue;
            }
            for b in a..conductor - a {
                if !is_gap[b] && is_gap[a + b] {
                    return Err(Error::InvalidGapSet {
                        a: a as u32,
                        b: b as u32,
                    });
                }
            }
        }
        let multiplicity = (1..=conductor)
            .find(|&n| n == conductor || !is_gap[n])
            .expect("conductor is a member");
        let len = conductor + multiplicity;
        let bits: Vec<bool> = (0..len).map(|n| n >= conductor || !is_gap[n]).collect();
        Ok(Self::from_parts(
            conductor as u32,
            multiplicity as u32,
            BitWindow::from_bools(&bits),
        ))
    }

    fn from_parts(conductor: u32, multiplicity: u32, membership: BitWindow) -> Self {
        let atoms = compute_atoms(&membership);
        Self {
            conductor,
            multiplicity,
            membership,
            atoms,
        }
    }

    pub fn is_full(&self) -> bool {
        self.conductor == 0
    }

    pub fn contains(&self, n: u64) -> bool {
        n >= u64::from(self.conductor) || self.membership.get(n as usize)
    }

    /// Smallest `c` with `[c, inf) ⊆ S`; 0 for `N`.
    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn multiplicity(&self) -> u32 {
        self.multiplicity
    }

    /// Largest gap, or `None` for `N`.
    pub fn frobenius(&self) -> Option<u32> {
        self.conductor.checked_sub(1)
    }

    pub fn genus(&self) -> u32 {
        self.conductor - self.membership.count_ones_below(self.conductor as usize) as u32
    }

    /// Minimal generating set `S* \ (S* + S*)`, ascending.
    pub fn minimal_generators(&self) -> &[u32] {
        &self.atoms
    }

    pub fn embedding_dimension(&self) -> u32 {
        self.atoms.len() as u32
    }

    /// Gaps in ascending order.
    pub fn gaps(&self) -> impl Iterator<Item = u32> + '_ {
        (1..self.conductor).filter(|&n| !self.membership.get(n as usize))
    }

    /// Members of `S` strictly below `bound`, ascending.
    pub fn elements_below(&self, bound: u32) -> impl Iterator<Item = u32> + '_ {
        (0..bound).filter(|&n| self.contains(n.into()))
    }

    /// Minimal generators strictly above the Frobenius number. Removing one
    /// of them yields a numerical semigroup of genus one higher.
    pub fn effective_generators(&self) -> impl Iterator<Item = u32> + '_ {
        let conductor = self.conductor;
        self.atoms.iter().copied().filter(move |&a| a >= conductor)
    }

    /// `S \ {a}` for an effective generator `a`.
    ///
    /// Only bit `a` changes; the window is re-sized for the new conductor
    /// `a + 1` and the atoms are recomputed from the bitmap.
    pub fn remove_generator(&self, a: u32) -> Result<Self> {
        if a < self.conductor || self.atoms.binary_search(&a).is_err() {
            return Err(Error::NotEffectiveGenerator(a));
        }
        let conductor = a
            .checked_add(1)
            .ok_or_else(|| Error::Overflow("conductor exceeds u32".into()))?;
        // Every integer above a is still in S, so a = m means the new
        // multiplicity is m + 1.
        let multiplicity = if a == self.multiplicity {
            self.multiplicity + 1
        } else {
            self.multiplicity
        };
        let mut membership = self.membership.clone();
        membership.resize_with_ones(conductor as usize + multiplicity as usize);
        membership.clear(a as usize);
        Ok(Self::from_parts(conductor, multiplicity, membership))
    }

    /// Children in the semigroup tree, by ascending removed generator.
    pub fn children(&self) -> Result<Vec<Self>> {
        self.effective_generators()
            .map(|a| self.remove_generator(a))
            .collect()
    }
}

/// Coin-problem sieve: `out[n]` iff `n` is a nonnegative combination of `gens`.
fn coin_sieve(gens: &[u32], len: usize) -> Vec<bool> {
    let mut out = vec![false; len];
    out[0] = true;
    for &g in gens {
        let g = g as usize;
        for n in g..len {
            if out[n - g] {
                out[n] = true;
            }
        }
    }
    out
}

/// Start of the first run of `m` consecutive members. Once `S` contains `m`
/// consecutive integers (with `m ∈ S`) it contains everything after them.
fn first_run(sieve: &[bool], m: usize) -> Option<usize> {
    let mut run = 0;
    for (n, &member) in sieve.iter().enumerate() {
        if member {
            run += 1;
            if run == m {
                return Some(n + 1 - m);
            }
        } else {
            run = 0;
        }
    }
    None
}

/// Members of the window that are not a sum of two nonzero members.
fn compute_atoms(membership: &BitWindow) -> Vec<u32> {
    let len = membership.len();
    let mut nonzero = membership.clone();
    nonzero.clear(0);
    let mut sums = BitWindow::zeros(len);
    for s in nonzero.iter_ones() {
        if 2 * s >= len {
            break;
        }
        sums.or_shifted(&nonzero, s);
    }
    let atoms: Vec<u32> = nonzero
        .iter_ones()
        .filter(|&n| !sums.get(n))
        .map(|n| n as u32)
        .collect();
    if atoms.is_empty() {
        // Only N has an empty nonzero window.
        vec![1]
    } else {
        atoms
    }
}

impl Ord for NumericalSemigroup {
    /// Canonical order: lexicographic on the atom list.
    fn cmp(&self, other: &Self) -> Ordering {
        self.atoms.cmp(&other.atoms)
    }
}

impl PartialOrd for NumericalSemigroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (i, a) in self.atoms.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str(">")
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumericalSemigroup{self}")
    }
}

/// Parses `"<3,5,7>"` or `"3,5,7"`; the list need not be minimal.
impl FromStr for NumericalSemigroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let gens = parse_generator_list(s)?;
        Self::from_generators(&gens)
    }
}

pub fn parse_generator_list(s: &str) -> Result<Vec<u32>> {
    let inner = s.trim();
    let inner = inner
        .strip_prefix('<')
        .and_then(|t| t.strip_suffix('>'))
        .unwrap_or(inner);
    if inner.trim().is_empty() {
        return Err(Error::EmptyGenerators);
    }
    inner
        .split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<u32>()
                .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
        })
        .collect()
}
