//! The proof maps of Theorems 1-4 as traceable transforms, and an
//! exhaustive auditor for injectivity, weight and codomain.

mod audit;
mod f;
mod repair;
mod thm1;
mod thm2;
mod thm3;
mod thm4;
mod thm5;

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::partition::{Bias, BiasSelector, ClassSpec, Partition};

pub use audit::{audit_family, audit_with_images, paper_residual_count, Collision, InjectionReport, Violation};
pub use repair::{repair, RepairPolicy, NODE_BUDGET};
pub use thm1::{thm1_classify, thm1_f1, thm1_f2, thm1_f3, thm1_map};
pub use thm2::{thm2_map, thm2_map_avoiding};
pub use thm3::{thm3_map, thm3_map_avoiding};
pub use thm4::thm4_map;
pub use thm5::thm5_classify;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Theorem {
    T1,
    T2,
    T3,
    T4,
    T5,
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// A theorem whose proof constructs explicit maps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    T1,
    T2,
    T3,
    T4,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::T1, Family::T2, Family::T3, Family::T4];

    pub fn theorem(self) -> Theorem {
        match self {
            Family::T1 => Theorem::T1,
            Family::T2 => Theorem::T2,
            Family::T3 => Theorem::T3,
            Family::T4 => Theorem::T4,
        }
    }

    /// P_e, D_e, Q_o, P^{2}_e
    pub fn source_spec(self) -> ClassSpec {
        match self {
            Family::T1 => ClassSpec::all().with_bias(BiasSelector::EvenHeavy),
            Family::T2 => ClassSpec::distinct_parts().with_bias(BiasSelector::EvenHeavy),
            Family::T3 => ClassSpec::no_ones().with_bias(BiasSelector::OddHeavy),
            Family::T4 => ClassSpec::avoiding(&[2]).with_bias(BiasSelector::EvenHeavy),
        }
    }

    /// P_o, D_o, Q_e, P^{2}_o
    pub fn codomain_spec(self) -> ClassSpec {
        match self {
            Family::T1 => ClassSpec::all().with_bias(BiasSelector::OddHeavy),
            Family::T2 => ClassSpec::distinct_parts().with_bias(BiasSelector::OddHeavy),
            Family::T3 => ClassSpec::no_ones().with_bias(BiasSelector::EvenHeavy),
            Family::T4 => ClassSpec::avoiding(&[2]).with_bias(BiasSelector::OddHeavy),
        }
    }

    pub fn in_codomain(self, p: &Partition) -> bool {
        p.satisfies(&self.codomain_spec())
    }

    pub fn map(self, lambda: &Partition) -> Result<MappingOutcome, MapError> {
        match self {
            Family::T1 => thm1_map(lambda),
            Family::T2 => thm2_map(lambda),
            Family::T3 => thm3_map(lambda),
            Family::T4 => thm4_map(lambda),
        }
    }

    /// Dispatch without running any repair.
    pub(crate) fn map_raw(self, lambda: &Partition) -> Result<MappingOutcome, MapError> {
        match self {
            Family::T1 => thm1_map(lambda),
            Family::T2 => thm2::dispatch(lambda),
            Family::T3 => thm3::dispatch(lambda),
            Family::T4 => thm4_map(lambda),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "T1" => Ok(Family::T1),
            "T2" => Ok(Family::T2),
            "T3" => Ok(Family::T3),
            "T4" => Ok(Family::T4),
            _ => Err(format!("unknown map family {s:?} (expected T1..T4)")),
        }
    }
}

pub const RESIDUAL: &str = "RESIDUAL";

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DomainTag {
    pub theorem: Theorem,
    pub label: String,
}

impl DomainTag {
    pub fn new(theorem: Theorem, label: impl Into<String>) -> Self {
        DomainTag { theorem, label: label.into() }
    }

    pub fn is_residual(&self) -> bool {
        self.label.starts_with(RESIDUAL)
    }
}

impl fmt::Display for DomainTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.theorem, self.label)
    }
}

/// One application of a proof map. `image` is `None` exactly for residual
/// sources, which the paper handles by counting.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MappingOutcome {
    pub source: Partition,
    pub image: Option<Partition>,
    pub tag: DomainTag,
    pub trace: Vec<String>,
    pub repaired: bool,
    pub repair_policy: Option<RepairPolicy>,
}

impl MappingOutcome {
    fn new(source: &Partition, tag: DomainTag, image: Partition, trace: Vec<String>) -> Self {
        MappingOutcome { source: source.clone(), image: Some(image), tag, trace, repaired: false, repair_policy: None }
    }

    fn residual(source: &Partition, tag: DomainTag) -> Self {
        MappingOutcome {
            source: source.clone(),
            image: None,
            trace: vec![format!("{} (counted, no image)", tag.label)],
            tag,
            repaired: false,
            repair_policy: None,
        }
    }

    fn with_policy(mut self, policy: RepairPolicy) -> Self {
        self.repair_policy = Some(policy);
        self
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MapError {
    #[error("{source_partition} is outside the domain of {theorem}: {reason}")]
    OutsideDomain { theorem: Theorem, source_partition: Partition, reason: String },
    #[error("unmapped subcase {rule} for {source_partition}: {reason}")]
    Unmapped { rule: String, source_partition: Partition, reason: String },
}

impl MapError {
    fn outside(theorem: Theorem, p: &Partition, reason: impl Into<String>) -> Self {
        MapError::OutsideDomain { theorem, source_partition: p.clone(), reason: reason.into() }
    }

    fn unmapped(rule: &str, p: &Partition, reason: impl Into<String>) -> Self {
        MapError::Unmapped { rule: rule.to_string(), source_partition: p.clone(), reason: reason.into() }
    }
}

/// Runs the outcome's repair, if it has one and its image is outside the
/// codomain or already in `used`.
pub(crate) fn settle(family: Family, mut out: MappingOutcome, used: &HashSet<Partition>) -> MappingOutcome {
    let (Some(policy), Some(image)) = (out.repair_policy, out.image.as_ref()) else {
        return out;
    };
    if family.in_codomain(image) && !used.contains(image) {
        return out;
    }
    let floor = family.codomain_spec().min_part;
    if let Some((fixed, steps)) = repair(image, policy, floor, used, |q| family.in_codomain(q)) {
        out.trace.push(format!("repair step ×{steps}"));
        out.image = Some(fixed);
        out.repaired = true;
    } else {
        out.trace.push("repair failed".to_string());
    }
    out
}

/// Builds a partition from signed parts, failing on any part ≤ 0.
pub(crate) fn build(rule: &str, source: &Partition, parts: Vec<i64>) -> Result<Partition, MapError> {
    if let Some(bad) = parts.iter().find(|&&p| p <= 0) {
        return Err(MapError::unmapped(rule, source, format!("rule yields nonpositive part {bad} in {parts:?}")));
    }
    Ok(Partition::from_unsorted(parts.into_iter().map(|p| p as u32).collect()))
}

pub(crate) fn signed(v: &[u32]) -> Vec<i64> {
    v.iter().map(|&p| p as i64).collect()
}

pub(crate) fn is_even_heavy(p: &Partition) -> bool {
    p.bias() == Bias::EvenHeavy
}

/// λ ∈ G_e: ℓ_e − ℓ_o ≥ 2, or ℓ_e − ℓ_o = 1 with a(λ) odd.
pub(crate) fn in_g_e(p: &Partition) -> bool {
    let d = p.len_even() as i64 - p.len_odd() as i64;
    d >= 2 || (d == 1 && p.largest() % 2 == 1)
}
