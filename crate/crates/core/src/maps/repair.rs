//! ±2 transfer repair. Moving 2 from one part to another keeps every part's
//! parity, so (ℓ_e, ℓ_o) of the image never changes.

use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::partition::Partition;

/// Maximum number of states one repair may expand.
pub const NODE_BUDGET: usize = 20_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RepairPolicy {
    /// Theorem 2 g: 2 leaves the greatest part and joins an even part;
    /// every intermediate state stays distinct.
    GreatestToEven,
    /// Theorem 3 ψ₅,₁: any part may give or take except the largest, which
    /// stays fixed and stays largest.
    KeepLargest,
}

impl RepairPolicy {
    fn moves(self, cur: &[u32], floor: u32) -> Vec<(usize, usize)> {
        let len = cur.len();
        match self {
            RepairPolicy::GreatestToEven => {
                if len == 0 || cur[0] < floor + 2 {
                    return Vec::new();
                }
                (1..len).filter(|&j| cur[j] % 2 == 0).map(|j| (0, j)).collect()
            }
            RepairPolicy::KeepLargest => {
                let mut v = Vec::new();
                for i in 1..len {
                    if cur[i] < floor + 2 {
                        continue;
                    }
                    for j in 1..len {
                        if j != i && cur[j] + 2 <= cur[0] {
                            v.push((i, j));
                        }
                    }
                }
                v
            }
        }
    }
}

/// Breadth-first search from `start` for the first state that `accept`s and
/// is not in `used`. Returns the state and its number of transfers.
pub fn repair(
    start: &Partition,
    policy: RepairPolicy,
    floor: u32,
    used: &HashSet<Partition>,
    accept: impl Fn(&Partition) -> bool,
) -> Option<(Partition, usize)> {
    let max_depth = start.n() as usize;
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut queue: VecDeque<(Vec<u32>, usize)> = VecDeque::new();
    seen.insert(start.parts().to_vec());
    queue.push_back((start.parts().to_vec(), 0));
    let mut expanded = 0;
    while let Some((cur, depth)) = queue.pop_front() {
        expanded += 1;
        if expanded > NODE_BUDGET || depth >= max_depth {
            continue;
        }
        for (i, j) in policy.moves(&cur, floor) {
            let mut next = cur.clone();
            next[i] -= 2;
            next[j] += 2;
            next.sort_unstable_by(|a, b| b.cmp(a));
            if policy == RepairPolicy::GreatestToEven && next.windows(2).any(|w| w[0] == w[1]) {
                continue;
            }
            if !seen.insert(next.clone()) {
                continue;
            }
            let cand = Partition::from_sorted(next.clone());
            if accept(&cand) && !used.contains(&cand) {
                return Some((cand, depth + 1));
            }
            queue.push_back((next, depth + 1));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> Partition {
        Partition::from_parts(v).unwrap()
    }

    #[test]
    fn keep_largest_retargets_collision() {
        let used: HashSet<Partition> = [p(&[9, 8, 8, 3, 2, 2])].into_iter().collect();
        let accept = |q: &Partition| q.len_even() > q.len_odd();
        let (img, steps) = repair(&p(&[9, 8, 8, 3, 2, 2]), RepairPolicy::KeepLargest, 2, &used, accept).unwrap();
        assert_eq!(img.largest(), 9);
        assert_eq!(img.n(), 32);
        assert!(steps >= 1);
        assert!(!used.contains(&img));
    }

    #[test]
    fn greatest_to_even_restores_distinctness() {
        let used = HashSet::new();
        let accept = |q: &Partition| q.is_distinct();
        let (img, _) = repair(&p(&[9, 4, 4, 1]), RepairPolicy::GreatestToEven, 1, &used, accept).unwrap();
        assert!(img.is_distinct());
        assert_eq!(img.n(), 18);
        assert_eq!((img.len_even(), img.len_odd()), (2, 2));
    }
}
