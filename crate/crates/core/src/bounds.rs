//! Density inequalities, evaluated exactly.
//!
//! Each check compares two exact rationals and records the slack, oriented
//! so that a nonnegative slack (positive, for strict checks) means the
//! inequality holds. The inequalities are:
//!
//! | id           | statement                                      | relation |
//! |--------------|------------------------------------------------|----------|
//! | `WILF_1`     | `d >= 1/e`                                     | `>=`     |
//! | `ZHAI_2`     | `d >= 1/e - (m-1)/(f+1) * (e-2)/(2e)`          | `>=`     |
//! | `LEMMA_3`    | `(e-1)(f+1-g) >= m-1`                          | `>=`     |
//! | `TWO_STAR`   | `2(f+1) <= 2e(f+1-g) + (e-2)(m-1)`             | `<=`     |
//! | `THREE_STAR` | `m-1 <= (e-1)(f+1-g)`                          | `<=`     |
//! | `PROP_A`     | `d >= 1/e` if `f+1 <= 3m`, else `d > (8-e)/(6e)` | per branch |
//! | `PROP_B`     | `d >= 2/(e^2-e+2)`                             | `>=`     |
//!
//! `PROP_A` only applies for `e` in `{4, 5}`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::invariants::InvariantSet;
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum BoundId {
    #[serde(rename = "WILF_1")]
    Wilf,
    #[serde(rename = "ZHAI_2")]
    Zhai,
    #[serde(rename = "LEMMA_3")]
    Lemma3,
    #[serde(rename = "TWO_STAR")]
    TwoStar,
    #[serde(rename = "THREE_STAR")]
    ThreeStar,
    #[serde(rename = "PROP_A")]
    PropA,
    #[serde(rename = "PROP_B")]
    PropB,
}

impl BoundId {
    pub const ALL: [BoundId; 7] = [
        BoundId::Wilf,
        BoundId::Zhai,
        BoundId::Lemma3,
        BoundId::TwoStar,
        BoundId::ThreeStar,
        BoundId::PropA,
        BoundId::PropB,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            BoundId::Wilf => "WILF_1",
            BoundId::Zhai => "ZHAI_2",
            BoundId::Lemma3 => "LEMMA_3",
            BoundId::TwoStar => "TWO_STAR",
            BoundId::ThreeStar => "THREE_STAR",
            BoundId::PropA => "PROP_A",
            BoundId::PropB => "PROP_B",
        }
    }

    /// Short lowercase name used on the command line.
    pub fn short_name(self) -> &'static str {
        match self {
            BoundId::Wilf => "wilf",
            BoundId::Zhai => "zhai",
            BoundId::Lemma3 => "lemma3",
            BoundId::TwoStar => "two_star",
            BoundId::ThreeStar => "three_star",
            BoundId::PropA => "prop_a",
            BoundId::PropB => "prop_b",
        }
    }

    /// Whether the check is defined for embedding dimension `e`.
    pub fn applies_to(self, embedding_dim: u32) -> bool {
        match self {
            BoundId::PropA => matches!(embedding_dim, 4 | 5),
            _ => embedding_dim >= 2,
        }
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BoundId {
    type Err = Error;

    /// Accepts the canonical id (`WILF_1`) or the short name (`wilf`), in
    /// any case.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase().replace('-', "_");
        let alias = match t.as_str() {
            "wilf_1" | "wilf" => Some(BoundId::Wilf),
            "zhai_2" | "zhai" => Some(BoundId::Zhai),
            "lemma_3" | "lemma3" | "lemma" => Some(BoundId::Lemma3),
            "two_star" | "2star" => Some(BoundId::TwoStar),
            "three_star" | "3star" => Some(BoundId::ThreeStar),
            "prop_a" => Some(BoundId::PropA),
            "prop_b" => Some(BoundId::PropB),
            _ => None,
        };
        alias.ok_or_else(|| Error::Parse(format!("unknown bound {s:?}")))
    }
}

/// Which side of `f + 1 = 3m` the `PROP_A` check fell on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PropABranch {
    #[serde(rename = "CONDUCTOR_LE_3M")]
    ConductorLe3m,
    #[serde(rename = "CONDUCTOR_GT_3M")]
    ConductorGt3m,
}

/// Direction of the inequality between `lhs` and `rhs` as written.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = ">")]
    Gt,
    #[serde(rename = "<=")]
    Le,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BoundCheck {
    pub bound_id: BoundId,
    pub lhs: Rational,
    pub rhs: Rational,
    pub relation: Relation,
    pub strict: bool,
    pub holds: bool,
    pub is_equality: bool,
    /// Larger side minus smaller side, as the relation intends them.
    pub slack: Rational,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub branch: Option<PropABranch>,
}

impl BoundCheck {
    fn new(bound_id: BoundId, lhs: Rational, relation: Relation, rhs: Rational) -> Result<Self> {
        let slack = match relation {
            Relation::Ge | Relation::Gt => lhs.checked_sub(rhs)?,
            Relation::Le => rhs.checked_sub(lhs)?,
        };
        let strict = relation == Relation::Gt;
        let holds = if strict {
            slack.is_positive()
        } else {
            !slack.is_negative()
        };
        Ok(Self {
            bound_id,
            lhs,
            rhs,
            relation,
            strict,
            holds,
            is_equality: slack.is_zero(),
            slack,
            branch: None,
        })
    }
}

/// Integer views of the invariants, with `e >= 2` enforced.
struct Params {
    f1: i64,
    s: i64,
    e: i64,
    m: i64,
    d: Rational,
}

impl Params {
    fn of(inv: &InvariantSet) -> Result<Self> {
        if inv.embedding_dim < 2 {
            return Err(Error::InvariantViolation(format!(
                "bounds need embedding dimension >= 2, got {}",
                inv.embedding_dim
            )));
        }
        Ok(Self {
            f1: i64::from(inv.frobenius) + 1,
            s: i64::from(inv.sporadic_count),
            e: i64::from(inv.embedding_dim),
            m: i64::from(inv.multiplicity),
            d: inv.wilf_density,
        })
    }
}

fn int(n: i64) -> Rational {
    Rational::integer(n)
}

fn mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b)
        .ok_or_else(|| Error::Overflow(format!("{a} * {b}")))
}

fn add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b)
        .ok_or_else(|| Error::Overflow(format!("{a} + {b}")))
}

pub fn check_wilf(inv: &InvariantSet) -> Result<BoundCheck> {
    let p = Params::of(inv)?;
    BoundCheck::new(BoundId::Wilf, p.d, Relation::Ge, Rational::new(1, p.e)?)
}

pub fn check_zhai(inv: &InvariantSet) -> Result<BoundCheck> {
    let p = Params::of(inv)?;
    let correction = Rational::new(mul(p.m - 1, p.e - 2)?, mul(mul(2, p.e)?, p.f1)?)?;
    let rhs = Rational::new(1, p.e)?.checked_sub(correction)?;
    BoundCheck::new(BoundId::Zhai, p.d, Relation::Ge, rhs)
}

pub fn check_lemma3(inv: &InvariantSet) -> Result<BoundCheck> {
    let p = Params::of(inv)?;
    BoundCheck::new(
        BoundId::Lemma3,
        int(mul(p.e - 1, p.s)?),
        Relation::Ge,
        int(p.m - 1),
    )
}

pub fn check_2star(inv: &InvariantSet) -> Result<BoundCheck> {
    let p = Params::of(inv)?;
    let rhs = add(mul(mul(2, p.e)?, p.s)?, mul(p.e - 2, p.m - 1)?)?;
    BoundCheck::new(BoundId::TwoStar, int(mul(2, p.f1)?), Relation::Le, int(rhs))
}

pub fn check_3star(inv: &InvariantSet) -> Result<BoundCheck> {
    let p = Params::of(inv)?;
    BoundCheck::new(
        BoundId::ThreeStar,
        int(p.m - 1),
        Relation::Le,
        int(mul(p.e - 1, p.s)?),
    )
}

/// Two-branch check for `e` in `{4, 5}`: `d >= 1/e` when `f + 1 <= 3m`,
/// otherwise the strict `d > (8 - e)/(6e)` (1/6 for `e = 4`, 1/10 for `e = 5`).
pub fn check_prop_a(inv: &InvariantSet) -> Result<BoundCheck> {
    if !BoundId::PropA.applies_to(inv.embedding_dim) {
        return Err(Error::UnsupportedEmbeddingDim {
            bound: BoundId::PropA,
            embedding_dim: inv.embedding_dim,
        });
    }
    let p = Params::of(inv)?;
    let (branch, relation, rhs) = if p.f1 <= mul(3, p.m)? {
        (
            PropABranch::ConductorLe3m,
            Relation::Ge,
            Rational::new(1, p.e)?,
        )
    } else {
        (
            PropABranch::ConductorGt3m,
            Relation::Gt,
            Rational::new(8 - p.e, mul(6, p.e)?)?,
        )
    };
    let mut check = BoundCheck::new(BoundId::PropA, p.d, relation, rhs)?;
    check.branch = Some(branch);
    Ok(check)
}

pub fn check_prop_b(inv: &InvariantSet) -> Result<BoundCheck> {
    let p = Params::of(inv)?;
    let den = add(mul(p.e, p.e)? - p.e, 2)?;
    BoundCheck::new(BoundId::PropB, p.d, Relation::Ge, Rational::new(2, den)?)
}

pub fn check(bound: BoundId, inv: &InvariantSet) -> Result<BoundCheck> {
    match bound {
        BoundId::Wilf => check_wilf(inv),
        BoundId::Zhai => check_zhai(inv),
        BoundId::Lemma3 => check_lemma3(inv),
        BoundId::TwoStar => check_2star(inv),
        BoundId::ThreeStar => check_3star(inv),
        BoundId::PropA => check_prop_a(inv),
        BoundId::PropB => check_prop_b(inv),
    }
}

/// Every applicable check, ordered by [`BoundId`].
pub fn check_all(inv: &InvariantSet) -> Result<Vec<BoundCheck>> {
    BoundId::ALL
        .iter()
        .filter(|b| b.applies_to(inv.embedding_dim))
        .map(|&b| check(b, inv))
        .collect()
}
