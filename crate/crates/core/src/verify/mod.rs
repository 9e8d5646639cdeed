//! Exact checks of every theorem, lemma, closed form, bound and open problem,
//! reported as flat verdict records.

mod bias;
mod explore;
mod formulas;
mod lemma;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};
use thiserror::Error;

pub use bias::{rows as count_rows, t2_violation_set, verify_bias, Method};
pub use explore::{explore_problem1, explore_threshold, ThresholdReport, HORIZON_LABEL};
pub use formulas::{eq2, eq4, eq5, eq8, verify_cardinality};
pub use lemma::{lemma1_sides, lemma2_sides, verify_lemma, verify_lemma_bound};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("{claim} does not apply at n={n}: {reason}")]
    Inapplicable { claim: String, n: u32, reason: String },
    #[error("{claim}: {reason}")]
    Precondition { claim: String, reason: String },
    #[error("enumeration and DP disagree for {class} at n={n}: enum {enumerated}, dp {dp}")]
    Disagreement { class: String, n: u32, enumerated: String, dp: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cmp {
    Gt,
    Lt,
    Eq,
    Ge,
    Le,
}

impl Cmp {
    pub fn eval(self, lhs: &BigInt, rhs: &BigInt) -> bool {
        match self {
            Cmp::Gt => lhs > rhs,
            Cmp::Lt => lhs < rhs,
            Cmp::Eq => lhs == rhs,
            Cmp::Ge => lhs >= rhs,
            Cmp::Le => lhs <= rhs,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Cmp::Gt => ">",
            Cmp::Lt => "<",
            Cmp::Eq => "=",
            Cmp::Ge => ">=",
            Cmp::Le => "<=",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Holds {
    Yes,
    No,
    Skip,
}

impl fmt::Display for Holds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Holds::Yes => "true",
            Holds::No => "false",
            Holds::Skip => "skip",
        })
    }
}

impl Serialize for Holds {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn opt_decimal<S: Serializer>(v: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(x) => s.collect_str(x),
        None => s.serialize_str(""),
    }
}

/// One row of a claim check. `claimed` is false for observations outside the
/// range the paper asserts; those never count as failures.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerdictRecord {
    pub claim: String,
    pub n: u32,
    pub holds: Holds,
    #[serde(serialize_with = "opt_decimal")]
    pub lhs: Option<BigInt>,
    #[serde(serialize_with = "opt_decimal")]
    pub rhs: Option<BigInt>,
    #[serde(serialize_with = "opt_decimal")]
    pub margin: Option<BigInt>,
    #[serde(skip)]
    pub claimed: bool,
    #[serde(skip)]
    pub counterexample: Option<String>,
}

impl VerdictRecord {
    /// `claim` gets the `-obs` suffix when `claimed` is false.
    pub fn compare(claim: &str, n: u32, lhs: BigInt, rhs: BigInt, cmp: Cmp, claimed: bool) -> Self {
        let ok = cmp.eval(&lhs, &rhs);
        let counterexample = (!ok).then(|| format!("{claim} at n={n}: {lhs} {} {rhs} is false", cmp.symbol()));
        VerdictRecord {
            claim: if claimed { claim.to_string() } else { format!("{claim}-obs") },
            n,
            holds: if ok { Holds::Yes } else { Holds::No },
            margin: Some(&lhs - &rhs),
            lhs: Some(lhs),
            rhs: Some(rhs),
            claimed,
            counterexample,
        }
    }

    pub fn skip(claim: &str, n: u32) -> Self {
        VerdictRecord {
            claim: claim.to_string(),
            n,
            holds: Holds::Skip,
            lhs: None,
            rhs: None,
            margin: None,
            claimed: false,
            counterexample: None,
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        if self.holds == Holds::No {
            let head = self.counterexample.take().unwrap_or_default();
            self.counterexample = Some(format!("{head}; {}", detail.into()));
        }
        self
    }

    /// A claimed comparison that came out false.
    pub fn is_failure(&self) -> bool {
        self.claimed && self.holds == Holds::No
    }
}

/// Theorems whose statements are parity-bias inequalities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BiasTheorem {
    T1,
    T2,
    T3,
    T4,
    T5,
}

impl BiasTheorem {
    pub const ALL: [BiasTheorem; 5] = [BiasTheorem::T1, BiasTheorem::T2, BiasTheorem::T3, BiasTheorem::T4, BiasTheorem::T5];
}

impl fmt::Display for BiasTheorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for BiasTheorem {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "T1" => Ok(BiasTheorem::T1),
            "T2" => Ok(BiasTheorem::T2),
            "T3" => Ok(BiasTheorem::T3),
            "T4" => Ok(BiasTheorem::T4),
            "T5" => Ok(BiasTheorem::T5),
            _ => Err(format!("unknown theorem {s:?} (expected T1..T5)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lemma {
    L1,
    L2,
    LB,
}

impl FromStr for Lemma {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "L1" => Ok(Lemma::L1),
            "L2" => Ok(Lemma::L2),
            "LB" => Ok(Lemma::LB),
            _ => Err(format!("unknown lemma {s:?} (expected L1, L2 or LB)")),
        }
    }
}
