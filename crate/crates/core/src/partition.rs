//! Canonical partitions, restriction classes and parity statistics.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("part {0} is not a positive integer")]
    NonPositivePart(i64),
    #[error("part {0} does not fit in 32 bits")]
    PartTooLarge(i64),
}

/// Non-increasing sequence of positive parts together with its weight.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<u32>,
    n: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Bias {
    OddHeavy,
    EvenHeavy,
    Balanced,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BiasSelector {
    OddHeavy,
    EvenHeavy,
    Balanced,
    All,
}

impl BiasSelector {
    pub fn matches(self, bias: Bias) -> bool {
        match self {
            BiasSelector::All => true,
            BiasSelector::OddHeavy => bias == Bias::OddHeavy,
            BiasSelector::EvenHeavy => bias == Bias::EvenHeavy,
            BiasSelector::Balanced => bias == Bias::Balanced,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionStats {
    pub n: u32,
    pub len: usize,
    pub len_even: usize,
    pub len_odd: usize,
    pub largest: u32,
    pub len_odd_gt1: usize,
    /// (value, multiplicity), values descending.
    pub mults: Vec<(u32, usize)>,
}

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: Vec::new(), n: 0 }
    }

    /// Sorts `raw` into canonical order. Zero or negative entries are rejected.
    pub fn from_parts(raw: &[i64]) -> Result<Self, PartitionError> {
        let mut parts = Vec::with_capacity(raw.len());
        for &p in raw {
            if p <= 0 {
                return Err(PartitionError::NonPositivePart(p));
            }
            let p = u32::try_from(p).map_err(|_| PartitionError::PartTooLarge(p))?;
            parts.push(p);
        }
        Ok(Self::from_unsorted(parts))
    }

    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        if parts.contains(&0) {
            return Err(PartitionError::NonPositivePart(0));
        }
        Ok(Self::from_unsorted(parts))
    }

    pub(crate) fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let n = parts.iter().sum();
        Partition { parts, n }
    }

    pub(crate) fn from_sorted(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(!parts.contains(&0));
        let n = parts.iter().sum();
        Partition { parts, n }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// 1-based part access with the paper's convention λ_i = 0 past the end.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn largest(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn len_even(&self) -> usize {
        self.parts.iter().filter(|&&p| p % 2 == 0).count()
    }

    pub fn len_odd(&self) -> usize {
        self.parts.len() - self.len_even()
    }

    pub fn multiplicity(&self, value: u32) -> usize {
        self.parts.iter().filter(|&&p| p == value).count()
    }

    pub fn is_distinct(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] != w[1])
    }

    pub fn evens(&self) -> Vec<u32> {
        self.parts.iter().copied().filter(|p| p % 2 == 0).collect()
    }

    pub fn odds(&self) -> Vec<u32> {
        self.parts.iter().copied().filter(|p| p % 2 == 1).collect()
    }

    pub fn stats(&self) -> PartitionStats {
        let len_even = self.len_even();
        let len_odd = self.len() - len_even;
        let mut mults: Vec<(u32, usize)> = Vec::new();
        for &p in &self.parts {
            match mults.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => mults.push((p, 1)),
            }
        }
        PartitionStats {
            n: self.n,
            len: self.len(),
            len_even,
            len_odd,
            largest: self.largest(),
            len_odd_gt1: len_odd - self.multiplicity(1),
            mults,
        }
    }

    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.parts.len() && j < other.parts.len() {
            if self.parts[i] >= other.parts[j] {
                parts.push(self.parts[i]);
                i += 1;
            } else {
                parts.push(other.parts[j]);
                j += 1;
            }
        }
        parts.extend_from_slice(&self.parts[i..]);
        parts.extend_from_slice(&other.parts[j..]);
        Partition::from_sorted(parts)
    }

    /// (λ_e, λ_o)
    pub fn split(&self) -> (Partition, Partition) {
        (Partition::from_sorted(self.evens()), Partition::from_sorted(self.odds()))
    }

    pub fn bias(&self) -> Bias {
        let e = self.len_even();
        let o = self.len() - e;
        match o.cmp(&e) {
            std::cmp::Ordering::Greater => Bias::OddHeavy,
            std::cmp::Ordering::Less => Bias::EvenHeavy,
            std::cmp::Ordering::Equal => Bias::Balanced,
        }
    }

    pub fn satisfies(&self, spec: &ClassSpec) -> bool {
        self.satisfies_base(spec) && spec.bias.matches(self.bias())
    }

    /// Membership ignoring the bias selector.
    pub fn satisfies_base(&self, spec: &ClassSpec) -> bool {
        (!spec.distinct || self.is_distinct()) && self.parts.iter().all(|&p| spec.admits(p))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Declarative restriction class. Every set of the form P, P_d, Q, P^S and
/// their intersections, optionally narrowed by a bias selector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClassSpec {
    pub distinct: bool,
    pub min_part: u32,
    pub forbidden: BTreeSet<u32>,
    pub bias: BiasSelector,
}

impl Default for ClassSpec {
    fn default() -> Self {
        ClassSpec { distinct: false, min_part: 1, forbidden: BTreeSet::new(), bias: BiasSelector::All }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("unrecognised class name {0:?}")]
pub struct ClassNameError(pub String);

impl ClassSpec {
    pub fn all() -> Self {
        Self::default()
    }

    pub fn distinct_parts() -> Self {
        ClassSpec { distinct: true, ..Self::default() }
    }

    /// Q: no part equal to 1.
    pub fn no_ones() -> Self {
        ClassSpec { min_part: 2, ..Self::default() }
    }

    pub fn avoiding(set: &[u32]) -> Self {
        ClassSpec { forbidden: set.iter().copied().collect(), ..Self::default() }
    }

    pub fn with_distinct(mut self, distinct: bool) -> Self {
        self.distinct = distinct;
        self
    }

    pub fn with_min_part(mut self, min_part: u32) -> Self {
        self.min_part = min_part.max(1);
        self
    }

    pub fn with_forbidden(mut self, set: &[u32]) -> Self {
        self.forbidden = set.iter().copied().collect();
        self
    }

    pub fn with_bias(mut self, bias: BiasSelector) -> Self {
        self.bias = bias;
        self
    }

    pub fn admits(&self, part: u32) -> bool {
        part >= self.min_part && !self.forbidden.contains(&part)
    }

    /// Canonical cache key; the bias selector is not part of it.
    pub fn key(&self) -> String {
        let f: Vec<String> = self.forbidden.iter().map(u32::to_string).collect();
        format!("d:{};m:{};f:{}", u8::from(self.distinct), self.min_part, f.join(","))
    }

    /// Short name: P, D, Q, DQ (or Pm3, Dm3 ...) followed by `{S}` when parts are excluded.
    pub fn name(&self) -> String {
        let mut s = match (self.distinct, self.min_part) {
            (false, 1) => "P".to_string(),
            (true, 1) => "D".to_string(),
            (false, 2) => "Q".to_string(),
            (true, 2) => "DQ".to_string(),
            (false, m) => format!("Pm{m}"),
            (true, m) => format!("Dm{m}"),
        };
        if !self.forbidden.is_empty() {
            let f: Vec<String> = self.forbidden.iter().map(u32::to_string).collect();
            s.push('{');
            s.push_str(&f.join(","));
            s.push('}');
        }
        s
    }

    /// Inverse of [`ClassSpec::name`].
    pub fn parse_name(name: &str) -> Result<Self, ClassNameError> {
        let err = || ClassNameError(name.to_string());
        let (base, set) = match name.find('{') {
            Some(i) => {
                let rest = name[i + 1..].strip_suffix('}').ok_or_else(err)?;
                (&name[..i], Some(rest))
            }
            None => (name, None),
        };
        let mut spec = match base {
            "P" => ClassSpec::all(),
            "D" | "Pd" => ClassSpec::distinct_parts(),
            "Q" => ClassSpec::no_ones(),
            "DQ" => ClassSpec::no_ones().with_distinct(true),
            _ => {
                let (distinct, m) = if let Some(m) = base.strip_prefix("Pm") {
                    (false, m)
                } else if let Some(m) = base.strip_prefix("Dm") {
                    (true, m)
                } else {
                    return Err(err());
                };
                let m: u32 = m.parse().map_err(|_| err())?;
                if m == 0 {
                    return Err(err());
                }
                ClassSpec::all().with_distinct(distinct).with_min_part(m)
            }
        };
        if let Some(set) = set {
            for item in set.split(',').filter(|s| !s.is_empty()) {
                let k: u32 = item.trim().parse().map_err(|_| err())?;
                if k == 0 {
                    return Err(err());
                }
                spec.forbidden.insert(k);
            }
        }
        Ok(spec)
    }
}

/// Lazily yields the partitions of `n` in `spec`, lexicographically decreasing.
pub fn enumerate(n: u32, spec: &ClassSpec) -> Enumerate {
    Enumerate::new(n, spec)
}

pub struct Enumerate {
    allowed: Vec<u32>,
    distinct: bool,
    bias: BiasSelector,
    // reach[w * (len + 1) + j]: weight w is reachable with allowed[j..]
    reach: Vec<bool>,
    stack: Vec<usize>,
    rem: u32,
    started: bool,
    done: bool,
}

impl Enumerate {
    fn new(n: u32, spec: &ClassSpec) -> Self {
        let allowed: Vec<u32> = (1..=n).rev().filter(|&k| spec.admits(k)).collect();
        let cols = allowed.len() + 1;
        let mut reach = vec![false; (n as usize + 1) * cols];
        for j in 0..cols {
            reach[j] = true;
        }
        for w in 1..=n as usize {
            for j in (0..allowed.len()).rev() {
                let k = allowed[j] as usize;
                let next = if spec.distinct { j + 1 } else { j };
                reach[w * cols + j] = reach[w * cols + j + 1] || (k <= w && reach[(w - k) * cols + next]);
            }
        }
        let feasible = reach[n as usize * cols];
        Enumerate {
            allowed,
            distinct: spec.distinct,
            bias: spec.bias,
            reach,
            stack: Vec::new(),
            rem: n,
            started: false,
            done: !feasible,
        }
    }

    fn can(&self, w: u32, j: usize) -> bool {
        self.reach[w as usize * (self.allowed.len() + 1) + j]
    }

    fn next_index(&self, j: usize) -> usize {
        if self.distinct {
            j + 1
        } else {
            j
        }
    }

    /// First index ≥ `from` that keeps the remainder completable.
    fn pick(&self, from: usize) -> Option<usize> {
        (from..self.allowed.len()).find(|&j| {
            let k = self.allowed[j];
            k <= self.rem && self.can(self.rem - k, self.next_index(j))
        })
    }

    fn fill(&mut self, mut from: usize) {
        while self.rem > 0 {
            let j = self.pick(from).expect("reachability table guarantees completion");
            self.stack.push(j);
            self.rem -= self.allowed[j];
            from = self.next_index(j);
        }
    }

    fn advance(&mut self) -> bool {
        while let Some(j) = self.stack.pop() {
            self.rem += self.allowed[j];
            if let Some(j2) = self.pick(j + 1) {
                self.stack.push(j2);
                self.rem -= self.allowed[j2];
                let from = self.next_index(j2);
                self.fill(from);
                return true;
            }
        }
        false
    }

    fn current(&self) -> Partition {
        Partition::from_sorted(self.stack.iter().map(|&j| self.allowed[j]).collect())
    }

    fn step(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.fill(0);
            return Some(self.current());
        }
        if self.advance() {
            Some(self.current())
        } else {
            self.done = true;
            None
        }
    }
}

impl Iterator for Enumerate {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        loop {
            let p = self.step()?;
            if self.bias.matches(p.bias()) {
                return Some(p);
            }
        }
    }
}
