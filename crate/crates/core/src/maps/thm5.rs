use super::{in_g_e, is_even_heavy, DomainTag, MapError, Theorem};
use crate::partition::Partition;

/// Splits P^{1,2}_e(n) into the f-dispatchable part and G⁰_{e,1}, G⁰_{e,2}.
/// The single-part partition (n) has λ₃ = 0 and falls in neither class; it
/// gets its own tag.
pub fn thm5_classify(lambda: &Partition) -> Result<DomainTag, MapError> {
    if !is_even_heavy(lambda) {
        return Err(MapError::outside(Theorem::T5, lambda, "not even-heavy"));
    }
    if lambda.parts().iter().any(|&p| p <= 2) {
        return Err(MapError::outside(Theorem::T5, lambda, "has a part equal to 1 or 2"));
    }
    let label = if in_g_e(lambda) {
        "G_e-dispatchable"
    } else {
        match lambda.part(3) {
            0 => "G⁰_e:(n)",
            3..=6 => "G⁰_{e,2}",
            _ => "G⁰_{e,1}",
        }
    };
    Ok(DomainTag::new(Theorem::T5, label))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> Partition {
        Partition::from_parts(v).unwrap()
    }

    #[test]
    fn thresholds() {
        assert_eq!(thm5_classify(&p(&[10, 8, 7])).unwrap().label, "G⁰_{e,1}");
        assert_eq!(thm5_classify(&p(&[10, 5, 4])).unwrap().label, "G⁰_{e,2}");
        assert_eq!(thm5_classify(&p(&[6, 4])).unwrap().label, "G_e-dispatchable");
        assert_eq!(thm5_classify(&p(&[12])).unwrap().label, "G⁰_e:(n)");
        assert!(thm5_classify(&p(&[6, 4, 2])).is_err());
        assert!(thm5_classify(&p(&[5, 3])).is_err());
    }
}
