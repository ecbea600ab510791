//! Integer partitions: statistics, set operations, lexicographic order,
//! 2-cores and 2-quotients.
//!
//! The 2-quotient uses beta numbers `β_k = λ_k + N - k` with an odd bead
//! count `N`; component `j` of the quotient is read off runner `j`, i.e. the
//! beads with `β ≡ j (mod 2)`. With this labelling `(5,5,5,3,3)` has
//! quotient `((3,2),(2,2,1))`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Validates that `parts` is weakly decreasing; trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return invalid(format!("parts {parts:?} are not weakly decreasing"));
        }
        if parts.contains(&0) {
            return invalid("zero part in the middle of a partition");
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(n)`, empty when `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition(vec![n])
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Part `i` counted from zero, with missing parts read as 0.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        let parts = (1..=first)
            .map(|c| self.0.iter().take_while(|&&p| p >= c).count())
            .collect();
        Partition(parts)
    }

    /// `n(λ) = Σ (i-1) λ_i`.
    pub fn n_stat(&self) -> usize {
        self.0.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    /// `m_i(λ)`, the number of parts equal to `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.0.iter().filter(|&&p| p == i).count()
    }

    /// Map from part size to multiplicity.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.0 {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// `z_λ = Π i^{m_i} m_i!`.
    pub fn z_stat(&self) -> u128 {
        self.multiplicities()
            .into_iter()
            .map(|(i, m)| (i as u128).pow(m as u32) * (1..=m as u128).product::<u128>())
            .product()
    }

    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Self::from_unsorted(parts)
    }

    pub fn scale(&self, k: usize) -> Partition {
        Self::from_unsorted(self.0.iter().map(|p| p * k).collect())
    }

    pub fn divide(&self, k: usize) -> Result<Partition> {
        if k == 0 {
            return invalid("division by zero");
        }
        if let Some(p) = self.0.iter().find(|&&p| p % k != 0) {
            return invalid(format!("part {p} is not divisible by {k}"));
        }
        Ok(Partition(self.0.iter().map(|p| p / k).collect()))
    }

    /// Lexicographic comparison, missing parts read as 0.
    pub fn lex_cmp(&self, other: &Partition) -> Ordering {
        let n = self.len().max(other.len());
        (0..n)
            .map(|i| self.part(i).cmp(&other.part(i)))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    }

    /// Dominance order: `self ≥ other`.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let (mut a, mut b) = (0, 0);
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Whether the diagram of `other` is inside the diagram of `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Cells `(row, col)` in row-major order, zero-based.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| (0..p).map(move |c| (r, c)))
            .collect()
    }

    pub fn is_staircase(&self) -> bool {
        let l = self.len();
        self.0.iter().enumerate().all(|(i, &p)| p == l - i)
    }

    /// All partitions obtained by removing one rim domino, ordered from the
    /// top row down (a horizontal domino before a vertical one in the same row).
    pub fn rim_domino_removals(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for r in 0..self.len() {
            if self.part(r) >= self.part(r + 1) + 2 {
                let mut p = self.0.clone();
                p[r] -= 2;
                out.push(Self::from_unsorted(p));
            }
            if r + 1 < self.len()
                && self.part(r) == self.part(r + 1)
                && self.part(r + 1) > self.part(r + 2)
            {
                let mut p = self.0.clone();
                p[r] -= 1;
                p[r + 1] -= 1;
                out.push(Self::from_unsorted(p));
            }
        }
        out
    }

    /// The 2-core, by greedy removal of the topmost rim domino.
    pub fn two_core(&self) -> Partition {
        let mut cur = self.clone();
        while let Some(next) = cur.rim_domino_removals().into_iter().next() {
            cur = next;
        }
        cur
    }

    /// The 2-quotient `(quot⁰, quot¹)`.
    pub fn two_quotient(&self) -> (Partition, Partition) {
        let (_, q) = self.two_core_quotient();
        q
    }

    /// Core and quotient computed together on the abacus.
    pub fn two_core_quotient(&self) -> (Partition, (Partition, Partition)) {
        let n = odd_bead_count(self.len());
        let beta = self.beta_numbers(n);
        let mut runners: [Vec<usize>; 2] = [Vec::new(), Vec::new()];
        for &b in &beta {
            runners[b % 2].push(b / 2);
        }
        let quot = |ys: &Vec<usize>| {
            let count = ys.len();
            Partition::from_unsorted(
                ys.iter()
                    .enumerate()
                    .map(|(k, &y)| y - (count - 1 - k))
                    .collect(),
            )
        };
        let q = (quot(&runners[0]), quot(&runners[1]));
        let mut core_beta: Vec<usize> = Vec::with_capacity(n);
        for (r, ys) in runners.iter().enumerate() {
            core_beta.extend((0..ys.len()).map(|y| 2 * y + r));
        }
        (from_beta(core_beta), q)
    }

    /// Beta numbers `λ_k + n - k` for `k = 1..n`, in decreasing order.
    pub fn beta_numbers(&self, n: usize) -> Vec<usize> {
        assert!(n >= self.len());
        (0..n).map(|k| self.part(k) + n - 1 - k).collect()
    }

    /// Inverse of [`Partition::two_core_quotient`].
    pub fn from_two_core_quotient(
        core: &Partition,
        q0: &Partition,
        q1: &Partition,
    ) -> Result<Partition> {
        if !core.is_staircase() {
            return invalid(format!("{core} is not a 2-core"));
        }
        let n = odd_bead_count(core.len() + 2 * (q0.len() + q1.len()) + 1);
        let mut counts = [0usize; 2];
        for b in core.beta_numbers(n) {
            counts[b % 2] += 1;
        }
        let mut beta = Vec::with_capacity(n);
        for (r, q) in [q0, q1].into_iter().enumerate() {
            let c = counts[r];
            if q.len() > c {
                return invalid("quotient too long for the bead count");
            }
            beta.extend((0..c).map(|k| 2 * (q.part(k) + c - 1 - k) + r));
        }
        Ok(from_beta(beta))
    }

    /// All partitions of `n` in decreasing lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        Self::bounded(n, n, usize::MAX)
    }

    /// Partitions of `n` with parts at most `max_part` and at most `max_len`
    /// parts, in decreasing lexicographic order.
    pub fn bounded(n: usize, max_part: usize, max_len: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        gen_partitions(n, max_part, max_len, &mut cur, &mut out);
        out
    }
}

fn gen_partitions(
    n: usize,
    max_part: usize,
    max_len: usize,
    cur: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if n == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    if cur.len() == max_len {
        return;
    }
    for p in (1..=max_part.min(n)).rev() {
        cur.push(p);
        gen_partitions(n - p, p, max_len, cur, out);
        cur.pop();
    }
}

fn odd_bead_count(at_least: usize) -> usize {
    if at_least % 2 == 1 {
        at_least
    } else {
        at_least + 1
    }
}

fn from_beta(mut beta: Vec<usize>) -> Partition {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let n = beta.len();
    Partition::from_unsorted(
        beta.iter()
            .enumerate()
            .map(|(k, &b)| b - (n - 1 - k))
            .collect(),
    )
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.lex_cmp(other)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidInput(format!("bad part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl From<&[usize]> for Partition {
    fn from(parts: &[usize]) -> Self {
        Partition::from_unsorted(parts.to_vec())
    }
}

/// Shorthand for building a partition from literal parts.
#[macro_export]
macro_rules! part {
    () => { $crate::partitions::Partition::empty() };
    ($($x:expr),+ $(,)?) => { $crate::partitions::Partition::from_unsorted(vec![$($x),+]) };
}
