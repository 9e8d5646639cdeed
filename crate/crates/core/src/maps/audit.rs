use std::collections::{BTreeMap, HashMap, HashSet};

use serde::Serialize;

use super::{settle, DomainTag, Family, MapError, MappingOutcome};
use crate::partition::{enumerate, Partition};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Collision {
    pub first: Partition,
    pub first_tag: DomainTag,
    pub second: Partition,
    pub second_tag: DomainTag,
    pub image: Partition,
}

impl Collision {
    pub fn crosses_subcases(&self) -> bool {
        self.first_tag != self.second_tag
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub source: Partition,
    pub tag: Option<DomainTag>,
    pub image: Option<Partition>,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InjectionReport {
    pub n: u32,
    pub family: Family,
    pub domain_size: usize,
    pub image_size: usize,
    pub residual_count: usize,
    /// Residual size predicted by the class definitions in the proof.
    pub expected_residual: usize,
    pub repaired: usize,
    pub collisions: Vec<Collision>,
    pub codomain_violations: Vec<Violation>,
    pub weight_violations: Vec<Violation>,
    /// Sources for which no rule fired.
    pub unmapped: Vec<Violation>,
    pub tag_counts: BTreeMap<String, usize>,
}

impl InjectionReport {
    pub fn violation_count(&self) -> usize {
        self.codomain_violations.len() + self.weight_violations.len() + self.unmapped.len()
    }

    /// Injective, weight preserving, into the codomain, with every
    /// non-residual source mapped.
    pub fn verified(&self) -> bool {
        self.collisions.is_empty()
            && self.violation_count() == 0
            && self.image_size + self.residual_count == self.domain_size
    }

    pub fn residual_matches(&self) -> bool {
        self.residual_count == self.expected_residual
    }

    pub fn clean(&self) -> bool {
        self.verified() && self.residual_matches()
    }

    pub fn cross_subcase_collisions(&self) -> usize {
        self.collisions.iter().filter(|c| c.crosses_subcases()).count()
    }
}

/// Maps every member of the family's source class at `n` and checks the
/// images. Outcomes that carry a repair policy are settled after all the
/// others, each phase in enumeration order.
pub fn audit_family(n: u32, family: Family) -> InjectionReport {
    audit_with_images(n, family).0
}

/// The audit report together with the set of images it accepted.
pub fn audit_with_images(n: u32, family: Family) -> (InjectionReport, HashSet<Partition>) {
    let sources: Vec<Partition> = enumerate(n, &family.source_spec()).collect();
    let mut report = InjectionReport {
        n,
        family,
        domain_size: sources.len(),
        image_size: 0,
        residual_count: 0,
        expected_residual: paper_residual_count(n, family),
        repaired: 0,
        collisions: Vec::new(),
        codomain_violations: Vec::new(),
        weight_violations: Vec::new(),
        unmapped: Vec::new(),
        tag_counts: BTreeMap::new(),
    };

    let mut direct: Vec<MappingOutcome> = Vec::new();
    let mut deferred: Vec<MappingOutcome> = Vec::new();
    for lambda in &sources {
        match family.map_raw(lambda) {
            Ok(out) if out.repair_policy.is_some() => deferred.push(out),
            Ok(out) => direct.push(out),
            Err(e) => report.unmapped.push(error_violation(lambda, e)),
        }
    }

    let mut owners: HashMap<Partition, (Partition, DomainTag)> = HashMap::new();
    let mut used: HashSet<Partition> = HashSet::new();
    let deferred = deferred.into_iter().map(|o| (o, true));
    for (out, late) in direct.into_iter().map(|o| (o, false)).chain(deferred) {
        let out = if late { settle(family, out, &used) } else { out };
        *report.tag_counts.entry(out.tag.label.clone()).or_default() += 1;
        if out.repaired {
            report.repaired += 1;
        }
        let Some(image) = out.image.clone() else {
            report.residual_count += 1;
            continue;
        };
        let violation = |reason: &str| Violation {
            source: out.source.clone(),
            tag: Some(out.tag.clone()),
            image: Some(image.clone()),
            reason: reason.to_string(),
        };
        if image.n() != n {
            report.weight_violations.push(violation("image weight differs from source weight"));
            continue;
        }
        if !family.in_codomain(&image) {
            report.codomain_violations.push(violation("image outside the codomain"));
            continue;
        }
        if let Some((first, first_tag)) = owners.get(&image) {
            report.collisions.push(Collision {
                first: first.clone(),
                first_tag: first_tag.clone(),
                second: out.source.clone(),
                second_tag: out.tag.clone(),
                image,
            });
            continue;
        }
        used.insert(image.clone());
        owners.insert(image, (out.source.clone(), out.tag.clone()));
    }
    report.image_size = owners.len();
    (report, used)
}

fn error_violation(lambda: &Partition, e: MapError) -> Violation {
    Violation { source: lambda.clone(), tag: None, image: None, reason: e.to_string() }
}

/// Number of sources the proof leaves to a counting argument, read off the
/// class definitions directly rather than from the dispatchers.
pub fn paper_residual_count(n: u32, family: Family) -> usize {
    let spec = family.source_spec();
    let sources = enumerate(n, &spec);
    match family {
        // G⁰_e members with λ₂ ≤ 2 or λ₃ ≤ 2
        Family::T1 => sources
            .filter(|l| {
                let d = l.len_even() as i64 - l.len_odd() as i64;
                d == 1 && l.largest() % 2 == 0 && (l.part(2) <= 2 || l.part(3) <= 2)
            })
            .count(),
        // (e₁, 4) ∪ (o₁) with e₁ > o₁
        Family::T2 => sources
            .filter(|l| {
                let (e, o) = (l.evens(), l.odds());
                e.len() == 2 && o.len() == 1 && e[1] == 4 && e[0] > o[0]
            })
            .count(),
        Family::T3 => 0,
        // (e₁, e₂) ∪ (3) for odd n > 23
        Family::T4 => {
            if n % 2 == 0 || n <= 23 {
                return 0;
            }
            sources.filter(|l| l.len() == 3 && l.part(3) == 3 && l.part(2) % 2 == 0).count()
        }
    }
}
