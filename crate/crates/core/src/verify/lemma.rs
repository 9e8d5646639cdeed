use num_bigint::BigInt;

use super::{Cmp, Lemma, VerdictRecord, VerifyError};

fn floor_div(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

/// Σ_{k=1}^{upper} ⌊(n − c·k + shift)/4⌋, empty when upper < 1.
fn floor_sum(n: i64, upper: i64, c: i64, shift: i64) -> BigInt {
    (1..=upper).map(|k| BigInt::from(floor_div(n - c * k + shift, 4))).sum()
}

/// Both sides of the Lemma 1 display at even n.
pub fn lemma1_sides(n: u32) -> (BigInt, BigInt) {
    let n = n as i64;
    let lhs = floor_sum(n, (n - 6) / 2, 2, -2);
    let rhs = 1 + floor_sum(n, floor_div(n - 2, 6), 6, 2) + floor_sum(n, floor_div(n - 6, 6), 6, -2);
    (lhs, rhs)
}

/// Both sides of the Lemma 2 display at odd n.
pub fn lemma2_sides(n: u32) -> (BigInt, BigInt) {
    let n = n as i64;
    let lhs = floor_sum(n, floor_div(n - 5, 2), 2, -1);
    let rhs = 1 + floor_sum(n, floor_div(n - 5, 6), 6, -1) + floor_sum(n, floor_div(n - 9, 6), 6, -5);
    (lhs, rhs)
}

pub fn verify_lemma(lemma: Lemma, n: u32) -> Result<VerdictRecord, VerifyError> {
    let reject = |reason: &str| VerifyError::Inapplicable { claim: format!("{lemma:?}"), n, reason: reason.to_string() };
    let (id, (lhs, rhs)) = match lemma {
        Lemma::L1 if n % 2 != 0 => return Err(reject("parity mismatch, needs even n")),
        Lemma::L1 if n < 14 => return Err(reject("needs n >= 14")),
        Lemma::L1 => ("L1", lemma1_sides(n)),
        Lemma::L2 if n % 2 == 0 => return Err(reject("parity mismatch, needs odd n")),
        Lemma::L2 if n < 9 => return Err(reject("needs n >= 9")),
        Lemma::L2 => ("L2", lemma2_sides(n)),
        Lemma::LB => return Err(reject("use verify_lemma_bound for the quadratic bounds")),
    };
    Ok(VerdictRecord::compare(id, n, lhs, rhs, Cmp::Gt, true))
}

/// The three rational comparisons behind Lemma 1 at n = 2m, cross-multiplied:
/// `LB.lower` 4·Σ > m²−7m+12, `LB.upper` 6·(1+Σ+Σ) < m²+3m−3 and
/// `LB.quad` 6(m²−7m+12) > 4(m²+3m−3), the last claimed only for m ≥ 26.
pub fn verify_lemma_bound(m: u32) -> Result<Vec<VerdictRecord>, VerifyError> {
    if m < 7 {
        return Err(VerifyError::Precondition { claim: format!("LB m={m}"), reason: "needs m >= 7".into() });
    }
    let (sum, expr) = lemma1_sides(2 * m);
    let m2 = i64::from(m) * i64::from(m);
    let low = BigInt::from(m2 - 7 * i64::from(m) + 12);
    let high = BigInt::from(m2 + 3 * i64::from(m) - 3);
    Ok(vec![
        VerdictRecord::compare("LB.lower", m, 4 * sum, low.clone(), Cmp::Gt, true),
        VerdictRecord::compare("LB.upper", m, 6 * expr, high.clone(), Cmp::Lt, true),
        VerdictRecord::compare("LB.quad", m, 6 * low, 4 * high, Cmp::Gt, m >= 26),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::Holds;

    #[test]
    fn lemma1_at_14() {
        assert_eq!(lemma1_sides(14), (BigInt::from(6), BigInt::from(5)));
        assert_eq!(verify_lemma(Lemma::L1, 14).unwrap().holds, Holds::Yes);
        assert!(verify_lemma(Lemma::L1, 13).is_err());
        assert!(verify_lemma(Lemma::L2, 7).is_err());
    }

    #[test]
    fn quad_threshold() {
        let at = |m| verify_lemma_bound(m).unwrap()[2].holds;
        assert_eq!(at(25), Holds::No);
        assert_eq!(at(26), Holds::Yes);
        assert!(verify_lemma_bound(6).is_err());
    }
}
