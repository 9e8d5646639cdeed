use std::ops::RangeInclusive;
use std::path::Path;

use num_bigint::BigInt;
use serde::Serialize;

use super::{Cmp, VerdictRecord, VerifyError};
use crate::counting::table;
use crate::partition::ClassSpec;

pub const HORIZON_LABEL: &str = "candidate, horizon-limited";

/// Distinct parts, none equal to 1: dq_o(2m) > dq_e(2m) and
/// dq_o(2m+1) < dq_e(2m+1). Claimed for m > 6, and for the odd side also at
/// m = 4, 5.
pub fn explore_problem1(range: RangeInclusive<u32>, cache_dir: Option<&Path>) -> Vec<VerdictRecord> {
    if range.is_empty() {
        return Vec::new();
    }
    let spec = ClassSpec::no_ones().with_distinct(true);
    let t = table(2 * range.end() + 1, &spec, cache_dir);
    let side = |n: u32| {
        let r = &t.rows[n as usize];
        (BigInt::from(r.odd_heavy.clone()), BigInt::from(r.even_heavy.clone()))
    };
    let mut out = Vec::new();
    for m in range {
        let (o, e) = side(2 * m);
        out.push(VerdictRecord::compare("PROB1.even", 2 * m, o, e, Cmp::Gt, m > 6));
        let (o, e) = side(2 * m + 1);
        out.push(VerdictRecord::compare("PROB1.odd", 2 * m + 1, o, e, Cmp::Lt, m > 6 || m == 4 || m == 5));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThresholdReport {
    pub k: u32,
    pub set: String,
    pub horizon: u32,
    /// Largest n ≤ horizon where the strict inequality fails, 0 if none.
    pub candidate: u32,
    /// The inequality held on every n in (candidate, horizon], and that
    /// interval is non-empty.
    pub tail_holds: bool,
    pub status: &'static str,
    #[serde(skip)]
    pub trail: Vec<VerdictRecord>,
}

/// S = {k}: p_o^S(n) > p_e^S(n). S = {1, k}: p_e^S(n) > p_o^S(n).
/// Sweeps 1..=horizon; nothing here is asserted, every row is an observation.
pub fn explore_threshold(k: u32, with_one: bool, horizon: u32, cache_dir: Option<&Path>) -> Result<ThresholdReport, VerifyError> {
    let reject = |reason: &str| VerifyError::Precondition { claim: format!("PROB2 k={k}"), reason: reason.into() };
    if k <= 2 {
        return Err(reject("needs k > 2"));
    }
    if horizon < 50 {
        return Err(reject("needs horizon >= 50"));
    }
    let (set, spec, cmp) = if with_one {
        (format!("{{1,{k}}}"), ClassSpec::avoiding(&[1, k]), Cmp::Lt)
    } else {
        (format!("{{{k}}}"), ClassSpec::avoiding(&[k]), Cmp::Gt)
    };
    let id = format!("PROB2{set}");
    let t = table(horizon, &spec, cache_dir);
    let trail: Vec<VerdictRecord> = (1..=horizon)
        .map(|n| {
            let r = &t.rows[n as usize];
            VerdictRecord::compare(&id, n, BigInt::from(r.odd_heavy.clone()), BigInt::from(r.even_heavy.clone()), cmp, false)
        })
        .collect();
    let candidate = trail.iter().rev().find(|r| r.holds == super::Holds::No).map_or(0, |r| r.n);
    Ok(ThresholdReport {
        k,
        set,
        horizon,
        candidate,
        tail_holds: candidate < horizon,
        status: HORIZON_LABEL,
        trail,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::Holds;

    #[test]
    fn remark_cases() {
        let r = explore_problem1(4..=5, None);
        assert_eq!(r[1].claim, "PROB1.odd");
        assert_eq!(r[1].n, 9);
        assert_eq!(r[0].claim, "PROB1.even-obs");
        assert!(r.iter().all(|x| x.holds != Holds::Skip));
    }

    #[test]
    fn threshold_preconditions() {
        assert!(explore_threshold(2, false, 300, None).is_err());
        assert!(explore_threshold(3, false, 49, None).is_err());
        let r = explore_threshold(3, false, 100, None).unwrap();
        assert_eq!(r.trail.len(), 100);
        assert_eq!(r.status, HORIZON_LABEL);
    }
}
