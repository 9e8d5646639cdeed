use std::ops::RangeInclusive;
use std::path::Path;

use num_bigint::BigInt;
use rayon::prelude::*;

use super::{BiasTheorem, Cmp, VerdictRecord, VerifyError};
use crate::counting::{count_by_enumeration, table, BiasCount};
use crate::partition::ClassSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Enum,
    Dp,
    Both,
}

impl std::str::FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "enum" => Ok(Method::Enum),
            "dp" => Ok(Method::Dp),
            "both" => Ok(Method::Both),
            _ => Err(format!("unknown method {s:?} (expected enum, dp or both)")),
        }
    }
}

impl BiasTheorem {
    pub fn spec(self) -> ClassSpec {
        match self {
            BiasTheorem::T1 => ClassSpec::all(),
            BiasTheorem::T2 => ClassSpec::distinct_parts(),
            BiasTheorem::T3 => ClassSpec::no_ones(),
            BiasTheorem::T4 => ClassSpec::avoiding(&[2]),
            BiasTheorem::T5 => ClassSpec::avoiding(&[1, 2]),
        }
    }

    /// The asserted comparison of (odd-heavy, even-heavy) at `n`, if any.
    pub fn claim_at(self, n: u32) -> (Cmp, bool) {
        match self {
            BiasTheorem::T1 if n == 2 => (Cmp::Eq, true),
            BiasTheorem::T1 => (Cmp::Gt, n >= 1),
            BiasTheorem::T2 => (Cmp::Gt, n > 19),
            BiasTheorem::T3 => (Cmp::Lt, n > 7),
            BiasTheorem::T4 => (Cmp::Gt, n >= 1),
            BiasTheorem::T5 => (Cmp::Gt, n > 8),
        }
    }
}

/// Count rows for `range` by the chosen method; `Both` fails on any disagreement.
pub fn rows(
    spec: &ClassSpec,
    range: RangeInclusive<u32>,
    method: Method,
    cache_dir: Option<&Path>,
) -> Result<Vec<BiasCount>, VerifyError> {
    let n_max = *range.end();
    let enumerated = || -> Vec<BiasCount> { range.clone().into_par_iter().map(|n| count_by_enumeration(n, spec)).collect() };
    let dp = || -> Vec<BiasCount> {
        let t = table(n_max, spec, cache_dir);
        range.clone().map(|n| t.rows[n as usize].clone()).collect()
    };
    match method {
        Method::Enum => Ok(enumerated()),
        Method::Dp => Ok(dp()),
        Method::Both => {
            let (a, b) = (enumerated(), dp());
            for (x, y) in a.iter().zip(&b) {
                if x != y {
                    return Err(VerifyError::Disagreement {
                        class: spec.name(),
                        n: x.n,
                        enumerated: format!("{}/{}/{}", x.odd_heavy, x.even_heavy, x.balanced),
                        dp: format!("{}/{}/{}", y.odd_heavy, y.even_heavy, y.balanced),
                    });
                }
            }
            Ok(b)
        }
    }
}

/// lhs is the odd-heavy count, rhs the even-heavy count.
pub fn verify_bias(
    theorem: BiasTheorem,
    range: RangeInclusive<u32>,
    method: Method,
    cache_dir: Option<&Path>,
) -> Result<Vec<VerdictRecord>, VerifyError> {
    if range.is_empty() {
        return Ok(Vec::new());
    }
    let id = theorem.to_string();
    let counts = rows(&theorem.spec(), range, method, cache_dir)?;
    Ok(counts
        .into_iter()
        .map(|c| {
            let (cmp, claimed) = theorem.claim_at(c.n);
            let (lhs, rhs) = (BigInt::from(c.odd_heavy), BigInt::from(c.even_heavy));
            VerdictRecord::compare(&id, c.n, lhs, rhs, cmp, claimed)
        })
        .collect())
}

/// n in 1..=n_max with d_o(n) ≤ d_e(n), by enumeration.
pub fn t2_violation_set(n_max: u32) -> Vec<u32> {
    let spec = BiasTheorem::T2.spec();
    (1..=n_max)
        .into_par_iter()
        .filter(|&n| {
            let c = count_by_enumeration(n, &spec);
            c.odd_heavy <= c.even_heavy
        })
        .collect()
}
