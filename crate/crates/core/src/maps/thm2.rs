use std::collections::HashSet;

use super::f::{f, Majority};
use super::{build, in_g_e, is_even_heavy, settle, signed, DomainTag, Family, MapError, MappingOutcome, RepairPolicy, Theorem, RESIDUAL};
use crate::partition::Partition;

fn tag(label: impl Into<String>) -> DomainTag {
    DomainTag::new(Theorem::T2, label)
}

fn outcome(lambda: &Partition, label: &str, rule: &str, parts: Vec<i64>, trace: &str) -> Result<MappingOutcome, MapError> {
    let image = build(rule, lambda, parts)?;
    Ok(MappingOutcome::new(lambda, tag(label), image, vec![trace.to_string()]))
}

/// The subcase rule alone, before any collision repair.
pub(crate) fn dispatch(lambda: &Partition) -> Result<MappingOutcome, MapError> {
    if !lambda.is_distinct() {
        return Err(MapError::outside(Theorem::T2, lambda, "parts are not distinct"));
    }
    if !is_even_heavy(lambda) {
        return Err(MapError::outside(Theorem::T2, lambda, "not even-heavy"));
    }
    if in_g_e(lambda) {
        let label = if lambda.len() % 2 == 0 { "H_{e,0}" } else { "H_{e,1}" };
        let (image, rule) = f(lambda, Majority::Even)?;
        return Ok(MappingOutcome::new(lambda, tag(label), image, vec![rule]));
    }
    let e = signed(&lambda.evens());
    let o = signed(&lambda.odds());
    let n = lambda.n() as i64;
    if o.len() > 1 {
        let mut parts = vec![e[0] + o[0], e[1] + o[1]];
        parts.extend_from_slice(&e[2..]);
        parts.extend_from_slice(&o[2..]);
        return Ok(outcome(lambda, "H̄⁰_e", "g", parts, "g")?.with_policy(RepairPolicy::GreatestToEven));
    }
    if o.is_empty() {
        let parts = if n % 4 == 0 {
            let odd = n / 2 + 1;
            vec![odd, odd - 2]
        } else {
            let odd = n / 2;
            vec![odd, odd - 2, 2]
        };
        return outcome(lambda, "(n)", "(n)", parts, "(n) to consecutive odd parts");
    }
    let (e1, e2, o1) = (e[0], e[1], o[0]);
    if e2 == 2 {
        let (o2, o3, star) = if e1 % 4 == 0 { ((e1 + 2) / 2, 1, "S* identity") } else { (e1 / 2, 3, "S* shift") };
        let trace = format!("S then {star} then S**");
        return outcome(lambda, "H̃⁰_{e,1}", "S", vec![o2, o2 - 2, o3, o1 + 1], &trace);
    }
    if e2 >= 6 {
        let (branch, parts) = if o1 == 3 {
            (2, vec![e1 - 3, 5, 1, e2 - 2, 2])
        } else if e1 - 3 == o1 {
            (3, vec![e1 - 3, o1 - 2, 5, e2 - 2, 2])
        } else if e1 - 1 == o1 && e2 != 6 {
            (4, vec![e1 - 3, o1 - 4, 5, e2 - 2, 4])
        } else if e1 - 1 == o1 {
            (5, vec![e1 - 3, o1 - 4, 3, 6, 4])
        } else {
            (1, vec![e1 - 3, 3, o1, e2 - 2, 2])
        };
        let trace = format!("U then U* branch {branch}");
        return outcome(lambda, "H̃⁰_{e,2}", "U", parts, &trace);
    }
    Ok(MappingOutcome::residual(lambda, tag(format!("{RESIDUAL}/H̃⁰_{{e,3}}"))))
}

/// Dispatch, with g images repaired against `used` when they repeat a part
/// or an earlier image.
pub fn thm2_map_avoiding(lambda: &Partition, used: &HashSet<Partition>) -> Result<MappingOutcome, MapError> {
    Ok(settle(Family::T2, dispatch(lambda)?, used))
}

pub fn thm2_map(lambda: &Partition) -> Result<MappingOutcome, MapError> {
    thm2_map_avoiding(lambda, &HashSet::new())
}
