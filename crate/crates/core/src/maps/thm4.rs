use super::f::{f, Majority};
use super::{build, is_even_heavy, signed, DomainTag, MapError, MappingOutcome, Theorem, RESIDUAL};
use crate::partition::Partition;

fn tag(label: impl Into<String>) -> DomainTag {
    DomainTag::new(Theorem::T4, label)
}

fn outcome(lambda: &Partition, label: &str, rule: &str, parts: Vec<i64>) -> Result<MappingOutcome, MapError> {
    let image = build(rule, lambda, parts)?;
    Ok(MappingOutcome::new(lambda, tag(label), image, vec![rule.to_string()]))
}

pub fn thm4_map(lambda: &Partition) -> Result<MappingOutcome, MapError> {
    if !is_even_heavy(lambda) {
        return Err(MapError::outside(Theorem::T4, lambda, "not even-heavy"));
    }
    if lambda.parts().contains(&2) {
        return Err(MapError::outside(Theorem::T4, lambda, "has a part equal to 2"));
    }
    let ones = lambda.multiplicity(1);
    if ones > 0 {
        let label = if lambda.len() % 2 == 0 { "P^S_{e,3}" } else { "P^S_{e,4}" };
        let hat = Partition::from_sorted(lambda.parts()[..lambda.len() - ones].to_vec());
        let (mu, rule) = f(&hat, Majority::Even).map_err(|e| match e {
            MapError::Unmapped { rule, reason, .. } => MapError::unmapped(&format!("f̂ via {rule}"), lambda, reason),
            other => other,
        })?;
        let mut parts = signed(mu.parts());
        parts.extend(vec![1; ones]);
        return outcome(lambda, label, &format!("f̂ ({rule})"), parts);
    }
    let d = lambda.len_even() as i64 - lambda.len_odd() as i64;
    let a_even = lambda.largest() % 2 == 0;
    if lambda.len() % 2 == 0 || !a_even || d >= 2 {
        let label = if lambda.len() % 2 == 0 {
            "P^S_{e,1}"
        } else if a_even {
            "P^S_{e,2}"
        } else {
            "P^S_{e,o}:a-odd"
        };
        let (image, rule) = f(lambda, Majority::Even)?;
        return Ok(MappingOutcome::new(lambda, tag(label), image, vec![rule]));
    }

    let e = signed(&lambda.evens());
    let o = signed(&lambda.odds());
    let r = o.len();
    let threes = lambda.multiplicity(3);
    let n = lambda.n();
    if lambda.len() == 5 && threes == 2 {
        return outcome(lambda, "P̄^{S,c}_{e,5_{4,2}}", "ρ4", vec![e[0] + 3, e[1] + 3, e[2]]);
    }
    if lambda.len() == 3 && threes == 1 {
        let label = "P̄^{S,c}_{e,5_{4,1}}";
        if (11..=23).contains(&n) {
            return outcome(lambda, label, "ρ5", vec![e[1] - 1, e[1] - 1, 1, e[0] - e[1] + 4]);
        }
        return Ok(MappingOutcome::residual(lambda, tag(format!("{RESIDUAL}/{label}"))));
    }
    if e.get(1) != Some(&e[0]) && e[e.len() - 1] >= 6 {
        let mut parts = vec![e[0] - 4];
        parts.extend(e[1..].iter().map(|x| x - 2));
        parts.extend(&o);
        parts.extend(vec![1; 2 * r + 4]);
        return outcome(lambda, "P̄^S_{e,5}", "φ", parts);
    }
    let t = match threes {
        0 => 1,
        1 => 2,
        _ => 3,
    };
    if r < t {
        return Err(MapError::unmapped(&format!("ρ{t}"), lambda, format!("needs {t} odd parts, has {r}")));
    }
    let (keep, dissolve) = o.split_at(r - t);
    let mut parts = e.clone();
    parts.extend(keep.iter().map(|x| x - 2));
    let ones = 2 * (r - t) as i64 + dissolve.iter().sum::<i64>();
    parts.extend(vec![1; ones as usize]);
    outcome(lambda, &format!("P̄^{{S,c}}_{{e,5_{t}}}"), &format!("ρ{t}"), parts)
}
