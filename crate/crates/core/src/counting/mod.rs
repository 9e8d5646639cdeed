//! Exact parity-bias tallies: an enumeration oracle and a DP over
//! (remaining weight, ℓ_o − ℓ_e).

pub mod cache;

use std::path::Path;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::partition::{enumerate, Bias, BiasSelector, ClassSpec};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BiasCount {
    pub n: u32,
    pub odd_heavy: BigUint,
    pub even_heavy: BigUint,
    pub balanced: BigUint,
}

impl BiasCount {
    pub fn zero(n: u32) -> Self {
        BiasCount { n, odd_heavy: BigUint::zero(), even_heavy: BigUint::zero(), balanced: BigUint::zero() }
    }

    pub fn total(&self) -> BigUint {
        &self.odd_heavy + &self.even_heavy + &self.balanced
    }

    pub fn get(&self, bias: Bias) -> &BigUint {
        match bias {
            Bias::OddHeavy => &self.odd_heavy,
            Bias::EvenHeavy => &self.even_heavy,
            Bias::Balanced => &self.balanced,
        }
    }

    /// odd_heavy − even_heavy
    pub fn surplus(&self) -> BigInt {
        BigInt::from(self.odd_heavy.clone()) - BigInt::from(self.even_heavy.clone())
    }
}

/// Dense rows 0..=n_max for one class; the spec's bias selector is ignored.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountTable {
    pub spec: ClassSpec,
    pub rows: Vec<BiasCount>,
}

impl CountTable {
    pub fn n_max(&self) -> u32 {
        self.rows.len().saturating_sub(1) as u32
    }

    pub fn row(&self, n: u32) -> Option<&BiasCount> {
        self.rows.get(n as usize)
    }

    pub fn truncated(&self, n_max: u32) -> CountTable {
        CountTable { spec: self.spec.clone(), rows: self.rows[..=n_max as usize].to_vec() }
    }
}

pub fn count_by_enumeration(n: u32, spec: &ClassSpec) -> BiasCount {
    let base = spec.clone().with_bias(BiasSelector::All);
    let (mut o, mut e, mut b) = (0u64, 0u64, 0u64);
    for p in enumerate(n, &base) {
        match p.bias() {
            Bias::OddHeavy => o += 1,
            Bias::EvenHeavy => e += 1,
            Bias::Balanced => b += 1,
        }
    }
    BiasCount { n, odd_heavy: o.into(), even_heavy: e.into(), balanced: b.into() }
}

/// Rows 0..=n_max by dynamic programming over part sizes.
pub fn count_by_dp(n_max: u32, spec: &ClassSpec) -> CountTable {
    let n = n_max as usize;
    let parts: Vec<usize> = (1..=n_max).filter(|&k| spec.admits(k)).map(|k| k as usize).collect();
    let min = parts.first().copied().unwrap_or(1);
    let span = n / min;
    let width = 2 * span + 1;
    let bound = |w: usize| w / min;

    let mut cells: Vec<BigUint> = vec![BigUint::zero(); (n + 1) * width];
    cells[span] = BigUint::one();

    for &k in &parts {
        let step: isize = if k % 2 == 1 { 1 } else { -1 };
        let weights: Box<dyn Iterator<Item = usize>> =
            if spec.distinct { Box::new((k..=n).rev()) } else { Box::new(k..=n) };
        for w in weights {
            let src = w - k;
            let (lo, hi) = cells.split_at_mut(w * width);
            let from = &lo[src * width..(src + 1) * width];
            let to = &mut hi[..width];
            let b = bound(src) as isize;
            for d in -b..=b {
                let v = &from[(d + span as isize) as usize];
                if v.is_zero() {
                    continue;
                }
                let t = (d + step + span as isize) as usize;
                to[t] += v;
            }
        }
    }

    let rows = (0..=n)
        .map(|w| {
            let row = &cells[w * width..(w + 1) * width];
            let mut c = BiasCount::zero(w as u32);
            for (i, v) in row.iter().enumerate() {
                match i.cmp(&span) {
                    std::cmp::Ordering::Greater => c.odd_heavy += v,
                    std::cmp::Ordering::Less => c.even_heavy += v,
                    std::cmp::Ordering::Equal => c.balanced += v,
                }
            }
            c
        })
        .collect();
    CountTable { spec: spec.clone().with_bias(BiasSelector::All), rows }
}

/// DP table, served from the cache directory when it already covers `n_max`.
/// Cache problems are reported on stderr and the table is recomputed.
pub fn table(n_max: u32, spec: &ClassSpec, cache_dir: Option<&Path>) -> CountTable {
    let spec = spec.clone().with_bias(BiasSelector::All);
    if let Some(dir) = cache_dir {
        match cache::load(&spec, dir) {
            Ok(Some(t)) if t.n_max() >= n_max => return t.truncated(n_max),
            Ok(_) => {}
            Err(e) => eprintln!("warning: ignoring count cache: {e}"),
        }
        let t = count_by_dp(n_max, &spec);
        if let Err(e) = cache::store(&t, dir) {
            eprintln!("warning: could not write count cache: {e}");
        }
        return t;
    }
    count_by_dp(n_max, &spec)
}

/// p(0..=n_max) by Euler's pentagonal recurrence.
pub fn partition_numbers(n_max: u32) -> Vec<BigUint> {
    let n = n_max as usize;
    let mut p: Vec<BigInt> = vec![BigInt::zero(); n + 1];
    p[0] = BigInt::one();
    for m in 1..=n {
        let mut acc = BigInt::zero();
        for j in 1.. {
            let g1 = j * (3 * j - 1) / 2;
            if g1 > m {
                break;
            }
            let sign_pos = j % 2 == 1;
            let mut term = p[m - g1].clone();
            let g2 = j * (3 * j + 1) / 2;
            if g2 <= m {
                term += &p[m - g2];
            }
            if sign_pos {
                acc += term;
            } else {
                acc -= term;
            }
        }
        p[m] = acc;
    }
    p.into_iter().map(|v| v.to_biguint().expect("p(n) is nonnegative")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triple(c: &BiasCount) -> (u64, u64, u64) {
        let f = |v: &BigUint| u64::try_from(v).unwrap();
        (f(&c.odd_heavy), f(&c.even_heavy), f(&c.balanced))
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(triple(&count_by_enumeration(1, &ClassSpec::all())), (1, 0, 0));
        assert_eq!(triple(&count_by_enumeration(2, &ClassSpec::all())), (1, 1, 0));
        assert_eq!(triple(&count_by_enumeration(8, &ClassSpec::no_ones())), (2, 5, 0));
        assert_eq!(triple(&count_by_enumeration(0, &ClassSpec::all())), (0, 0, 1));
    }

    #[test]
    fn dp_examples() {
        let t = count_by_dp(10, &ClassSpec::all());
        assert_eq!(triple(&t.rows[4]), (3, 2, 0));
        let t = count_by_dp(10, &ClassSpec::distinct_parts());
        assert_eq!(triple(&t.rows[3]), (1, 0, 1));
        let t = count_by_dp(10, &ClassSpec::avoiding(&[2]));
        assert_eq!(triple(&t.rows[2]), (1, 0, 0));
        assert_eq!(triple(&count_by_dp(0, &ClassSpec::all()).rows[0]), (0, 0, 1));
    }

    #[test]
    fn pentagonal_values() {
        let p = partition_numbers(100);
        assert_eq!(p[10], BigUint::from(42u32));
        assert_eq!(p[100], "190569292".parse::<BigUint>().unwrap());
    }
}
