use std::collections::HashSet;

use super::f::{f, Majority};
use super::{build, settle, signed, DomainTag, Family, MapError, MappingOutcome, RepairPolicy, Theorem};
use crate::partition::{Bias, Partition};

fn tag(label: impl Into<String>) -> DomainTag {
    DomainTag::new(Theorem::T3, label)
}

fn outcome(lambda: &Partition, label: &str, rule: &str, parts: Vec<i64>) -> Result<MappingOutcome, MapError> {
    let image = build(rule, lambda, parts)?;
    Ok(MappingOutcome::new(lambda, tag(label), image, vec![rule.to_string()]))
}

fn count(v: &[i64], value: i64) -> i64 {
    v.iter().filter(|&&x| x == value).count() as i64
}

fn twos(k: i64) -> Vec<i64> {
    vec![2; k.max(0) as usize]
}

fn remove_one(v: &mut Vec<i64>, value: i64) {
    if let Some(i) = v.iter().position(|&x| x == value) {
        v.remove(i);
    }
}

/// The subcase rule alone, before any collision repair.
pub(crate) fn dispatch(lambda: &Partition) -> Result<MappingOutcome, MapError> {
    if lambda.bias() != Bias::OddHeavy {
        return Err(MapError::outside(Theorem::T3, lambda, "not odd-heavy"));
    }
    if lambda.parts().contains(&1) {
        return Err(MapError::outside(Theorem::T3, lambda, "has a part equal to 1"));
    }
    let n = lambda.n() as i64;
    if lambda.len() == 1 {
        let parts = if n % 4 == 3 {
            let mut v = vec![4; ((n - 3) / 4) as usize];
            v.push(3);
            v
        } else {
            let mut v = vec![4; ((n - 5) / 4).max(0) as usize];
            v.extend([3, 2]);
            v
        };
        return outcome(lambda, "(n)", "(n) to fours", parts);
    }
    let g_o = lambda.len_odd() as i64 - lambda.len_even() as i64;
    if !(g_o == 1 && lambda.largest() % 2 == 1) {
        let (image, rule) = f(lambda, Majority::Odd)?;
        return Ok(MappingOutcome::new(lambda, tag("I_o"), image, vec![rule]));
    }

    let l = signed(lambda.parts());
    let (l1, l2, l3) = (l[0], l[1], l[2]);
    let from3 = &l[2..];
    let from4 = &l[3..];

    if l3 >= 6 {
        let mut parts = vec![l1 + 1, l2 - 4, l3 - 4];
        parts.extend_from_slice(from4);
        parts.extend([4, 3]);
        return outcome(lambda, "I¹_{o,1}", "ψ1", parts);
    }

    if (l3 == 2 || l3 == 3) && l2 % 2 == 1 {
        let mut rest = from3.to_vec();
        remove_one(&mut rest, 2);
        let mut parts = vec![l1 - l2 + 2];
        parts.extend(twos(l2));
        parts.extend(rest);
        let (label, rule) = if l3 == 2 { ("I¹_{o,2_2}", "ψ2") } else { ("I¹_{o,2_{3,1}}", "ψ3,1") };
        return outcome(lambda, label, rule, parts);
    }

    if l3 == 3 {
        if l1 != 5 {
            let mut parts = vec![l1 - 4];
            parts.extend(twos(l2 / 2 + 2));
            parts.extend_from_slice(from3);
            return outcome(lambda, "I¹_{o,2_{3,2}}", "ψ3,2", parts);
        }
        let r = count(from3, 2);
        let mut parts = vec![3; (r + 2) as usize];
        parts.extend(twos(r + 3));
        return outcome(lambda, "I¹_{o,2_{3,3}}", "ψ3,3", parts);
    }

    if l3 == 4 {
        return psi4(lambda, &l);
    }

    psi5(lambda, &l)
}

fn psi4(lambda: &Partition, l: &[i64]) -> Result<MappingOutcome, MapError> {
    let (l1, l2) = (l[0], l[1]);
    let from3 = &l[2..];
    if l2 % 2 == 1 && l.len() <= 5 {
        let label = |case: &str| format!("I¹_{{o,2_{{4,1}}}}({case})");
        // (λ₁, λ₂, 4) or (λ₁, λ₂, 3) ∪ (4, y)
        let tail: Vec<i64> = if l.len() == 5 {
            let mut t = l[3..].to_vec();
            remove_one(&mut t, 3);
            t.push(3);
            t
        } else {
            Vec::new()
        };
        if l1 > 2 * l2 + 3 {
            let mut parts = if (l1 - l2) % 4 == 0 {
                let h = (l1 + l2 - 12) / 2;
                vec![6, 6, 4, h, h]
            } else {
                let h = (l1 + l2 - 14) / 2;
                vec![6, 6, 6, h, h]
            };
            parts.extend(&tail);
            return outcome(lambda, &label("a"), "ψ4,1 (a)", parts);
        }
        if l1 >= l2 + 8 {
            let mut parts = vec![l1 - l2 - 4, 4, 4, l2, l2];
            parts.extend(&tail);
            return outcome(lambda, &label("b"), "ψ4,1 (b)", parts);
        }
        let leftover: Option<&[i64]> = match l {
            [7, 5, 4, 3, 2] => Some(&[5, 4, 4, 4, 4]),
            [9, 5, 4, 3, 2] => Some(&[5, 4, 4, 4, 4, 2]),
            [11, 5, 4, 3, 2] => Some(&[5, 4, 4, 4, 4, 4]),
            _ => None,
        };
        if let Some(img) = leftover {
            return outcome(lambda, &label("c"), "ψ4,1 leftover", img.to_vec());
        }
        let mut parts;
        if l.len() == 3 {
            parts = vec![l1 - 3, l2 - 3];
            parts.extend(twos(5));
        } else if from3 == [4, 4, 3] {
            parts = vec![l1 - 1, l2 - 1, 3];
            parts.extend(twos(5));
        } else {
            parts = vec![l1 - 3, l2 - 3, 3];
            parts.extend(twos(6));
        }
        return outcome(lambda, &label("c"), "ψ4,1 (c)", parts);
    }
    let s = count(from3, 4) - 1;
    let r = count(from3, 2);
    let rs = r + s;
    let odd = rs % 2 == 1;
    let (label, rule, m) = if l2 % 2 == 1 {
        let m = if odd { 2 * s + 2 + 3 * (rs - 1) / 2 + r } else { 2 * s + 2 + 3 * rs / 2 + r };
        ("I¹_{o,2_{4,2}}", "ψ4,2", m)
    } else {
        let m = if odd { 2 * s + 2 + 3 * (rs + 1) / 2 + r } else { 2 * s + 2 + 3 * (rs + 2) / 2 + r };
        ("I¹_{o,2_{4,3}}", "ψ4,3", m)
    };
    let mut parts = vec![l1, l2];
    if odd {
        parts.push(3);
    }
    parts.extend(twos(m));
    outcome(lambda, label, rule, parts)
}

fn psi5(lambda: &Partition, l: &[i64]) -> Result<MappingOutcome, MapError> {
    let (l1, l2) = (l[0], l[1]);
    if l2 % 2 == 1 {
        if l.len() > 5 {
            let evens: Vec<i64> = l.iter().copied().filter(|x| x % 2 == 0).collect();
            let xs: Vec<i64> = l[3..].iter().copied().filter(|x| x % 2 == 1).collect();
            let Some(i) = evens.windows(2).position(|w| w[0] == w[1]) else {
                return Err(MapError::unmapped("ψ5,1", lambda, "no repeated even part"));
            };
            let (h, extra) = if l2 % 4 == 3 { ((l2 + 1) / 2, 4) } else { ((l2 + 3) / 2, 2) };
            let mut parts = vec![l1];
            parts.extend(xs);
            parts.extend(&evens[..i]);
            parts.extend(&evens[i + 2..]);
            parts.extend([evens[i] + h, evens[i + 1] + h, extra]);
            return Ok(outcome(lambda, "I¹_{o,2_{5,1}}", "ψ5,1", parts)?.with_policy(RepairPolicy::KeepLargest));
        }
        let add = match &l[3..] {
            [4, 4] => 9,
            [4, 2] => 7,
            [2, 2] => 5,
            _ => return Err(MapError::unmapped("ψ5,2", lambda, "tail is not (4,4), (4,2) or (2,2)")),
        };
        let mut parts = if l1 >= l2 + 4 {
            let mut v = vec![l1 - 5, l2 - 1];
            v.extend(twos(5));
            v
        } else {
            let mut v = vec![l1 - 5, l2 - 5];
            v.extend(twos(7));
            v
        };
        parts.push(add);
        return outcome(lambda, "I¹_{o,2_{5,2}}", "ψ5,2", parts);
    }

    let mut xs: Vec<i64> = l[1..].iter().copied().filter(|x| x % 2 == 1).collect();
    remove_one(&mut xs, 5);
    let mut ys: Vec<i64> = l.iter().copied().filter(|x| x % 2 == 0).collect();
    remove_one(&mut ys, l2);
    let label = |case: &str| format!("I¹_{{o,2_{{5,3}}}}({case})");
    let (case, mut parts) = if l1 > 2 * l2 + 3 {
        let head = if l1 % 4 == 3 {
            let h = (l1 - 7) / 2;
            vec![7, 5, h, h, l2]
        } else {
            let h = (l1 - 5) / 2;
            vec![5, 5, h, h, l2]
        };
        ("a", head)
    } else if l1 == 13 && l2 == 8 {
        ("d", vec![12, 12, 2])
    } else if l1 > l2 + 5 {
        ("b", vec![l1 - l2 - 2, 5, l2, l2, 2])
    } else if l1 == l2 + 5 {
        ("c", vec![l2 - 1, 5, l2 - 2, 6, 2])
    } else if l1 == l2 + 3 {
        ("c", vec![l2 - 1, 5, l2 - 2, 4, 2])
    } else {
        ("d", vec![l2, l2, 6])
    };
    parts.extend(xs);
    parts.extend(ys);
    outcome(lambda, &label(case), &format!("ψ5,3 ({case})"), parts)
}

/// Dispatch, with ψ₅,₁ images re-targeted away from `used` and from
/// partitions outside Q_e(n).
pub fn thm3_map_avoiding(lambda: &Partition, used: &HashSet<Partition>) -> Result<MappingOutcome, MapError> {
    Ok(settle(Family::T3, dispatch(lambda)?, used))
}

pub fn thm3_map(lambda: &Partition) -> Result<MappingOutcome, MapError> {
    thm3_map_avoiding(lambda, &HashSet::new())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> Partition {
        Partition::from_parts(v).unwrap()
    }

    #[test]
    fn displayed_examples() {
        for (src, img) in [
            (&[23, 5, 2][..], &[20, 2, 2, 2, 2, 2][..]),
            (&[23, 3, 3, 2, 2], &[22, 3, 2, 2, 2, 2]),
            (&[21, 8, 3], &[17, 3, 2, 2, 2, 2, 2, 2]),
            (&[5, 4, 3, 3, 2], &[3, 3, 3, 2, 2, 2, 2]),
            (&[15, 7, 4, 3, 3, 3, 2, 2, 2], &[15, 7, 3, 2, 2, 2, 2, 2, 2, 2, 2]),
            (&[13, 6, 4, 3, 3, 3, 2], &[13, 6, 3, 2, 2, 2, 2, 2, 2]),
            (&[13, 9, 5, 4, 3, 2, 2], &[13, 8, 8, 4, 3, 2]),
            (&[13, 9, 5, 4, 2], &[8, 8, 7, 2, 2, 2, 2, 2]),
            (&[11, 9, 5, 4, 4], &[9, 6, 4, 2, 2, 2, 2, 2, 2, 2]),
            (&[15, 6, 5], &[7, 6, 6, 5, 2]),
            (&[7, 5, 4, 3, 2], &[5, 4, 4, 4, 4]),
        ] {
            assert_eq!(thm3_map(&p(src)).unwrap().image, Some(p(img)), "{src:?}");
        }
    }

    #[test]
    fn singleton_rule() {
        assert_eq!(thm3_map(&p(&[11])).unwrap().image, Some(p(&[4, 4, 3])));
        assert_eq!(thm3_map(&p(&[13])).unwrap().image, Some(p(&[4, 4, 3, 2])));
    }

    #[test]
    fn rejections() {
        assert!(thm3_map(&p(&[5, 1])).is_err());
        assert!(thm3_map(&p(&[4, 2, 3])).is_err());
    }
}
