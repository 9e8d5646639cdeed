//! f₁ and f₂ with a selectable majority parity. Theorems 1, 2 and 4 use
//! even majority; Theorem 3 applies the same displays with the roles of
//! the parities exchanged.

use super::{build, signed, MapError};
use crate::partition::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Majority {
    Even,
    Odd,
}

impl Majority {
    fn holds(self, part: u32) -> bool {
        match self {
            Majority::Even => part % 2 == 0,
            Majority::Odd => part % 2 == 1,
        }
    }
}

fn split(p: &Partition, maj: Majority) -> (Vec<i64>, Vec<i64>) {
    let (a, b): (Vec<u32>, Vec<u32>) = p.parts().iter().partition(|&&x| maj.holds(x));
    (signed(&a), signed(&b))
}

/// ℓ(λ) = 2r: minority parts +1; first k−r majority parts +1, last r majority parts −1.
pub(crate) fn f1(p: &Partition, maj: Majority) -> Result<Partition, MapError> {
    let (e, o) = split(p, maj);
    let (k, m) = (e.len(), o.len());
    let r = (k + m) / 2;
    if k <= r {
        return Err(MapError::unmapped("f1", p, "majority count does not exceed half the length"));
    }
    let mut out: Vec<i64> = o.iter().map(|x| x + 1).collect();
    out.extend(e[..k - r].iter().map(|x| x + 1));
    out.extend(e[k - r..].iter().map(|x| x - 1));
    build("f1", p, out)
}

/// ℓ(λ) = 2r+1, the two displayed branches. Returns the image and whether the
/// largest part had the majority parity.
pub(crate) fn f2(p: &Partition, maj: Majority) -> Result<(Partition, bool), MapError> {
    let (e, o) = split(p, maj);
    let (k, m) = (e.len(), o.len());
    let r = (k + m).saturating_sub(1) / 2;
    if k <= r || m == 0 && !maj.holds(p.largest()) {
        return Err(MapError::unmapped("f2", p, "majority count does not exceed half the length"));
    }
    let cut = k - r - 1;
    let majority_top = maj.holds(p.largest());
    if majority_top && cut == 0 {
        return Err(MapError::unmapped("f2", p, "k − r − 1 = 0 with majority largest part"));
    }
    let mut out: Vec<i64> = Vec::with_capacity(k + m);
    if majority_top {
        out.extend(o.iter().map(|x| x + 1));
        out.push(e[0] + 2);
        out.extend(e[1..cut].iter().map(|x| x + 1));
        out.extend(e[cut..].iter().map(|x| x - 1));
    } else {
        out.extend(o[1..].iter().map(|x| x + 1));
        out.extend(e[..cut].iter().map(|x| x + 1));
        out.extend(e[cut..].iter().map(|x| x - 1));
        out.push(o[0] + 2);
    }
    Ok((build("f2", p, out)?, majority_top))
}

/// f₁ or f₂ by the parity of ℓ(λ), with the rule name for the trace.
pub(crate) fn f(p: &Partition, maj: Majority) -> Result<(Partition, String), MapError> {
    if p.len() % 2 == 0 {
        Ok((f1(p, maj)?, "f1".to_string()))
    } else {
        let (img, top) = f2(p, maj)?;
        let branch = if top { "f2 majority-top branch" } else { "f2 minority-top branch" };
        Ok((img, branch.to_string()))
    }
}
