use super::f::{f1, f2, Majority};
use super::{build, in_g_e, is_even_heavy, signed, DomainTag, MapError, MappingOutcome, Theorem};
use crate::partition::Partition;

pub(crate) const G_E0: &str = "G_{e,0}";
pub(crate) const G_E1: &str = "G_{e,1}";
pub(crate) const G_BAR0: &str = "Ḡ⁰_e";

fn tag(label: impl Into<String>) -> DomainTag {
    DomainTag::new(Theorem::T1, label)
}

fn require_source(lambda: &Partition) -> Result<(), MapError> {
    if !is_even_heavy(lambda) {
        return Err(MapError::outside(Theorem::T1, lambda, "not even-heavy"));
    }
    Ok(())
}

/// Tags every member of P_e(n) with exactly one subcase.
pub fn thm1_classify(lambda: &Partition) -> Result<DomainTag, MapError> {
    require_source(lambda)?;
    if in_g_e(lambda) {
        let label = if lambda.len() % 2 == 0 { G_E0 } else { G_E1 };
        return Ok(tag(label));
    }
    let (l2, l3) = (lambda.part(2), lambda.part(3));
    if l2 >= 3 && l3 >= 3 {
        return Ok(tag(G_BAR0));
    }
    let family = if lambda.n() % 2 == 0 { 'A' } else { 'B' };
    let index = if l2 <= 1 || l3 <= 1 {
        '₁'
    } else if l2 % 2 == 0 {
        '₂'
    } else {
        '₃'
    };
    Ok(tag(format!("{}/{family}{index}", super::RESIDUAL)))
}

fn expect(lambda: &Partition, label: &str) -> Result<(), MapError> {
    let got = thm1_classify(lambda)?;
    if got.label != label {
        return Err(MapError::outside(Theorem::T1, lambda, format!("belongs to {}, not {label}", got.label)));
    }
    Ok(())
}

pub fn thm1_f1(lambda: &Partition) -> Result<MappingOutcome, MapError> {
    expect(lambda, G_E0)?;
    let image = f1(lambda, Majority::Even)?;
    Ok(MappingOutcome::new(lambda, tag(G_E0), image, vec!["f1".into()]))
}

pub fn thm1_f2(lambda: &Partition) -> Result<MappingOutcome, MapError> {
    expect(lambda, G_E1)?;
    let (image, top) = f2(lambda, Majority::Even)?;
    let branch = if top { "f2 a(λ) even" } else { "f2 a(λ) odd" };
    Ok(MappingOutcome::new(lambda, tag(G_E1), image, vec![branch.into()]))
}

/// ((λ₁+1), λ₄, …) ∪ ((λ₂−2), (λ₃−2)) ∪ (2, 1)
pub fn thm1_f3(lambda: &Partition) -> Result<MappingOutcome, MapError> {
    expect(lambda, G_BAR0)?;
    let p = signed(lambda.parts());
    let mut out = vec![p[0] + 1];
    out.extend_from_slice(&p[3..]);
    out.extend([p[1] - 2, p[2] - 2, 2, 1]);
    let image = build("f3", lambda, out)?;
    Ok(MappingOutcome::new(lambda, tag(G_BAR0), image, vec!["f3".into()]))
}

pub fn thm1_map(lambda: &Partition) -> Result<MappingOutcome, MapError> {
    let t = thm1_classify(lambda)?;
    match t.label.as_str() {
        G_E0 => thm1_f1(lambda),
        G_E1 => thm1_f2(lambda),
        G_BAR0 => thm1_f3(lambda),
        _ => Ok(MappingOutcome::residual(lambda, t)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> Partition {
        Partition::from_parts(v).unwrap()
    }

    #[test]
    fn classify_examples() {
        assert_eq!(thm1_classify(&p(&[4, 2, 2, 1])).unwrap().label, G_E0);
        assert_eq!(thm1_classify(&p(&[6, 4, 3])).unwrap().label, G_BAR0);
        assert_eq!(thm1_classify(&p(&[10])).unwrap().label, "RESIDUAL/A₁");
        assert!(thm1_classify(&p(&[2, 1, 1])).is_err());
    }

    #[test]
    fn map_examples() {
        assert_eq!(thm1_f1(&p(&[4, 2, 2, 1])).unwrap().image, Some(p(&[5, 2, 1, 1])));
        assert_eq!(thm1_f1(&p(&[2, 2])).unwrap().image, Some(p(&[3, 1])));
        assert_eq!(thm1_f3(&p(&[6, 4, 3])).unwrap().image, Some(p(&[7, 2, 2, 1, 1])));
        assert!(thm1_f1(&p(&[6, 4, 3, 1])).is_err());
        assert!(thm1_f3(&p(&[4, 2, 2])).is_err());
        assert!(thm1_f3(&p(&[8, 3, 3])).is_err());
    }
}
