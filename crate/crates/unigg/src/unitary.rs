//! Multipartitions over labelled orbits, battery tableaux, degenerate
//! Gelfand-Graev multiplicities, induced-character coefficients and the
//! multiplicity-one constructions.
//!
//! Odd orbits carry domino tableaux and even orbits carry symplectic
//! tableaux. A battery tableau of shape `λ/γ` picks a one-row `γ^(φ)` per
//! orbit; its weight is `Σ_odd |φ|·wt^(φ) + Σ_even (|φ|/2)·wt^(φ)`.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use crate::domino_quotient::lex_max_weight;
use crate::error::{invalid, Error, Result};
use crate::partitions::Partition;
use crate::symfunc::{lr_coefficient, partitions_of, plethysm_pk};
use crate::tableaux::{count_domino, count_symplectic, trim};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Orbit {
    pub label: String,
    pub size: usize,
}

impl Orbit {
    pub fn new(label: impl Into<String>, size: usize) -> Self {
        Orbit {
            label: label.into(),
            size,
        }
    }

    pub fn is_odd(&self) -> bool {
        self.size % 2 == 1
    }
}

fn label_key(label: &str) -> (usize, &str) {
    (label.len(), label)
}

impl PartialOrd for Orbit {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Orbit {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        label_key(&self.label)
            .cmp(&label_key(&other.label))
            .then(self.size.cmp(&other.size))
    }
}

/// A finite assignment of nonempty partitions to labelled orbits.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct MultiPartition {
    entries: Vec<(Orbit, Partition)>,
}

impl MultiPartition {
    /// Entries are sorted by label; labels must be unique, sizes positive
    /// and partitions nonempty.
    pub fn new(mut entries: Vec<(Orbit, Partition)>) -> Result<Self> {
        entries.sort();
        let mut seen = HashSet::new();
        for (o, p) in &entries {
            if o.size == 0 {
                return invalid(format!("orbit {} has size 0", o.label));
            }
            if p.is_empty() {
                return invalid(format!("orbit {} carries the empty partition", o.label));
            }
            if !seen.insert(o.label.clone()) {
                return invalid(format!("duplicate orbit label {}", o.label));
            }
        }
        Ok(MultiPartition { entries })
    }

    /// Orbits labelled by position `1, 2, …`; empty partitions are dropped.
    pub fn positional(items: &[(usize, Partition)]) -> Result<Self> {
        let entries = items
            .iter()
            .enumerate()
            .filter(|(_, (_, p))| !p.is_empty())
            .map(|(i, (s, p))| (Orbit::new((i + 1).to_string(), *s), p.clone()))
            .collect();
        Self::new(entries)
    }

    pub fn entries(&self) -> &[(Orbit, Partition)] {
        &self.entries
    }

    /// `Σ |φ|·|λ^(φ)|`.
    pub fn size(&self) -> usize {
        self.entries.iter().map(|(o, p)| o.size * p.size()).sum()
    }

    /// `max ℓ(λ^(φ))`.
    pub fn height(&self) -> usize {
        self.entries.iter().map(|(_, p)| p.len()).max().unwrap_or(0)
    }

    /// `Σ |φ|·n(λ^(φ))`.
    pub fn n_stat(&self) -> usize {
        self.entries.iter().map(|(o, p)| o.size * p.n_stat()).sum()
    }

    /// The partition with parts `|φ|·λ^(φ)_i`.
    pub fn unipotent(&self) -> Partition {
        Partition::from_unsorted(
            self.entries
                .iter()
                .flat_map(|(o, p)| p.parts().iter().map(move |x| o.size * x))
                .collect(),
        )
    }

    /// Each orbit carries `(1^{|λ^(φ)|})`.
    pub fn semisimple(&self) -> MultiPartition {
        MultiPartition {
            entries: self
                .entries
                .iter()
                .map(|(o, p)| (o.clone(), Partition::from_unsorted(vec![1; p.size()])))
                .collect(),
        }
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self
            .entries
            .iter()
            .enumerate()
            .map(|(i, (o, p))| {
                if o.label == (i + 1).to_string() {
                    format!("{}:{p}", o.size)
                } else {
                    format!("{}@{}:{p}", o.label, o.size)
                }
            })
            .collect();
        f.write_str(&items.join(";"))
    }
}

impl FromStr for MultiPartition {
    type Err = Error;

    /// `size:parts` entries separated by `;`, each optionally prefixed by
    /// `label@`; unlabelled entries are labelled by position.
    fn from_str(s: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for (i, item) in s
            .split(';')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .enumerate()
        {
            let (head, parts) = item
                .split_once(':')
                .ok_or_else(|| Error::InvalidInput(format!("missing ':' in {item:?}")))?;
            let (label, size) = match head.split_once('@') {
                Some((l, s)) => (l.trim().to_string(), s),
                None => ((i + 1).to_string(), head),
            };
            let size: usize = size
                .trim()
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad orbit size in {item:?}")))?;
            entries.push((Orbit::new(label, size), parts.parse::<Partition>()?));
        }
        MultiPartition::new(entries)
    }
}

/// All multipartitions of total size `n` over orbits of the given sizes,
/// labelled by position; orbits may be left empty.
pub fn all_multipartitions(profile: &[usize], n: usize) -> Vec<MultiPartition> {
    let mut out = Vec::new();
    let mut cur: Vec<(usize, Partition)> = Vec::new();
    fn rec(
        profile: &[usize],
        idx: usize,
        left: usize,
        cur: &mut Vec<(usize, Partition)>,
        out: &mut Vec<MultiPartition>,
    ) {
        if idx == profile.len() {
            if left == 0 {
                out.push(MultiPartition::positional(cur).expect("labels are positional"));
            }
            return;
        }
        let s = profile[idx];
        for a in 0..=left / s {
            for p in partitions_of(a).iter() {
                cur.push((s, p.clone()));
                rec(profile, idx + 1, left - s * a, cur, out);
                cur.pop();
            }
        }
    }
    rec(profile, 0, n, &mut cur, &mut out);
    out
}

/// Size of the preimage of `ν` under the map to torus types.
pub fn theta_preimage_count(nu: &MultiPartition) -> u128 {
    let fact = |m: usize| (1..=m as u128).product::<u128>();
    let mut total: u128 = 1;
    for (o, p) in nu.entries() {
        total *= (o.size as u128).pow(p.len() as u32);
    }
    for (i, m) in nu.unipotent().multiplicities() {
        let mut denom = 1u128;
        for (o, p) in nu.entries() {
            if i % o.size == 0 {
                denom *= fact(p.multiplicity(i / o.size));
            }
        }
        total *= fact(m) / denom;
    }
    total
}

/// Weak compositions `w` of `n` with `w_i ≤ caps[i]`.
fn capped_compositions(n: usize, caps: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(caps.len());
    fn rec(left: usize, caps: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == caps.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let rest: usize = caps[cur.len() + 1..].iter().sum();
        let i = cur.len();
        for x in 0..=caps[i].min(left) {
            if left - x > rest {
                continue;
            }
            cur.push(x);
            rec(left - x, caps, cur, out);
            cur.pop();
        }
    }
    rec(n, caps, &mut cur, &mut out);
    out
}

type Table = HashMap<(usize, Vec<usize>), u64>;

/// Per-orbit table `(|φ|·|γ|, scaled weight) ↦ tableau count`.
fn orbit_table(orbit: &Orbit, lambda: &Partition, k: usize, nu: &Partition) -> Table {
    let (scale, odd) = if orbit.is_odd() {
        (orbit.size, true)
    } else {
        (orbit.size / 2, false)
    };
    let caps: Vec<usize> = nu.parts().iter().map(|x| x / scale).collect();
    let mut table = Table::new();
    for g in 0..=lambda.part(0) {
        if orbit.size * g > k || g > lambda.size() {
            continue;
        }
        let rest = lambda.size() - g;
        if odd && rest % 2 == 1 {
            continue;
        }
        let boxes = if odd { rest / 2 } else { rest };
        for w in capped_compositions(boxes, &caps) {
            let tw = trim(&w);
            let c = if odd {
                count_domino(lambda, g, &tw)
            } else {
                count_symplectic(lambda, g, &tw)
            };
            if c > 0 {
                let scaled: Vec<usize> = w.iter().map(|x| x * scale).collect();
                *table.entry((orbit.size * g, scaled)).or_insert(0) += c;
            }
        }
    }
    table
}

/// `|B^λ_{(k,ν)}|`, the number of battery tableaux of weight `ν` whose
/// removed rows have total scaled size `k`.
pub fn battery_count(lambda: &MultiPartition, k: usize, nu: &Partition) -> u64 {
    if k + 2 * nu.size() != lambda.size() {
        return 0;
    }
    let len = nu.len();
    let mut acc: Table = HashMap::from([((0, vec![0; len]), 1)]);
    for (orbit, p) in lambda.entries() {
        let table = orbit_table(orbit, p, k, nu);
        let mut next = Table::new();
        for ((ka, wa), ca) in &acc {
            for ((kb, wb), cb) in &table {
                let kk = ka + kb;
                if kk > k {
                    continue;
                }
                let w: Vec<usize> = wa.iter().zip(wb).map(|(x, y)| x + y).collect();
                if w.iter().zip(nu.parts()).any(|(x, y)| x > y) {
                    continue;
                }
                *next.entry((kk, w)).or_insert(0) += ca * cb;
            }
        }
        acc = next;
    }
    acc.get(&(k, nu.parts().to_vec())).copied().unwrap_or(0)
}

/// All `(k, ν)` with `k + 2|ν| = n`.
pub fn dgg_indices(n: usize) -> Vec<(usize, Partition)> {
    (0..=n / 2)
        .rev()
        .flat_map(|s| {
            partitions_of(s)
                .iter()
                .map(move |nu| (n - 2 * s, nu.clone()))
                .collect::<Vec<_>>()
        })
        .collect()
}

/// Nonzero multiplicities of `χ^λ` in `Γ_{(k,ν)}` over multipartitions of
/// size `n` supported on orbits with the given sizes.
pub fn dgg_decompose(
    n: usize,
    k: usize,
    nu: &Partition,
    profile: &[usize],
) -> Result<BTreeMap<MultiPartition, u64>> {
    if k + 2 * nu.size() != n {
        return invalid(format!(
            "k + 2|ν| = {} differs from n = {n}",
            k + 2 * nu.size()
        ));
    }
    if profile.contains(&0) {
        return invalid("orbit sizes must be positive");
    }
    Ok(all_multipartitions(profile, n)
        .into_iter()
        .filter_map(|l| {
            let c = battery_count(&l, k, nu);
            (c > 0).then_some((l, c))
        })
        .collect())
}

/// `χ^λ` appears in some `Γ_{(k,ν)}`: odd orbits have 2-core `∅` or `(1)`.
pub fn appears_in_some_dgg(lambda: &MultiPartition) -> bool {
    lambda
        .entries()
        .iter()
        .all(|(o, p)| !o.is_odd() || p.two_core().size() <= 1)
}

/// The `(k, ν)` of the product multiplicity formula and its predicted value.
pub fn bigmult_construction(lambda: &MultiPartition) -> Result<(usize, Partition, u64)> {
    if !appears_in_some_dgg(lambda) {
        return Err(Error::NotApplicable(format!(
            "{lambda} has an odd orbit with a large 2-core"
        )));
    }
    let mut k = 0;
    let mut nu: Vec<usize> = Vec::new();
    let mut predicted = 1u64;
    let add = |nu: &mut Vec<usize>, i: usize, x: usize| {
        if nu.len() <= i {
            nu.resize(i + 1, 0);
        }
        nu[i] += x;
    };
    for (o, p) in lambda.entries() {
        if o.is_odd() {
            let (core, (q0, q1)) = p.two_core_quotient();
            k += o.size * core.size();
            for i in 0..q0.len().max(q1.len()) {
                add(&mut nu, i, o.size * (q0.part(i) + q1.part(i)));
            }
        } else {
            for i in 0..p.len().div_ceil(2) {
                add(&mut nu, i, o.size / 2 * (p.part(2 * i) + p.part(2 * i + 1)));
            }
            for i in (0..p.len()).step_by(2) {
                predicted *= (p.part(i) - p.part(i + 1) + 1) as u64;
            }
        }
    }
    Ok((k, Partition::from_unsorted(nu), predicted))
}

fn odd_multiplicity_parts(p: &Partition) -> Vec<usize> {
    p.multiplicities()
        .into_iter()
        .filter(|&(_, m)| m % 2 == 1)
        .map(|(i, _)| i)
        .collect()
}

/// Whether some even orbit has two distinct part sizes of odd multiplicity.
pub fn has_even_orbit_obstruction(lambda: &MultiPartition) -> bool {
    lambda
        .entries()
        .iter()
        .any(|(o, p)| !o.is_odd() && odd_multiplicity_parts(p).len() >= 2)
}

/// The smallest `r > 0` such that every even orbit either has no part of
/// odd multiplicity and fewer than `r` rows, or has `λ_r` of odd
/// multiplicity with `λ_r < λ_{r-1}`.
pub fn multiplicity_one_r(lambda: &MultiPartition) -> Option<usize> {
    let evens: Vec<&Partition> = lambda
        .entries()
        .iter()
        .filter(|(o, _)| !o.is_odd())
        .map(|(_, p)| p)
        .collect();
    let max_r = evens.iter().map(|p| p.len()).max().unwrap_or(0) + 1;
    (1..=max_r).find(|&r| {
        evens.iter().all(|p| {
            let odd = odd_multiplicity_parts(p);
            let lr = p.part(r - 1);
            let above = if r == 1 { usize::MAX } else { p.part(r - 2) };
            (p.len() < r && odd.is_empty()) || (lr > 0 && odd.contains(&lr) && lr < above)
        })
    })
}

/// A `(k, ν)` with `⟨Γ_{(k,ν)}, χ^λ⟩ = 1`, built from the removed rows and
/// fillings of the multiplicity-one criterion; absent when the criterion fails.
pub fn multiplicity_one_witness(lambda: &MultiPartition) -> Option<(usize, Partition)> {
    if !appears_in_some_dgg(lambda) || has_even_orbit_obstruction(lambda) {
        return None;
    }
    let r = multiplicity_one_r(lambda)?;
    let mut k = 0;
    let mut nu: Vec<usize> = Vec::new();
    let add = |nu: &mut Vec<usize>, w: &[usize], scale: usize| {
        if nu.len() < w.len() {
            nu.resize(w.len(), 0);
        }
        for (i, x) in w.iter().enumerate() {
            nu[i] += scale * x;
        }
    };
    for (o, p) in lambda.entries() {
        if o.is_odd() {
            let (core, (q0, q1)) = p.two_core_quotient();
            let q = if core.is_empty() { q0 } else { q1 };
            let g = core.size() + 2 * q.part(r.div_ceil(2) - 1);
            k += o.size * g;
            let (w, _) = lex_max_weight(p, g).ok()?;
            add(&mut nu, &w, o.size);
        } else {
            let g = odd_multiplicity_parts(p).first().copied().unwrap_or(0);
            k += o.size * g;
            let part = |i: usize| if i == 0 { 0 } else { p.part(i - 1) };
            let w: Vec<usize> = (1..=p.len().div_ceil(2) + 1)
                .map(|j| {
                    if 2 * j < r {
                        part(2 * j - 1) + part(2 * j)
                    } else {
                        part(2 * j) + part(2 * j + 1)
                    }
                })
                .collect();
            add(&mut nu, &w, o.size / 2);
        }
    }
    Some((k, Partition::from_unsorted(nu)))
}

/// The `(k, ν)` read off the multiplicities of `μ_j = Σ |φ|·λ^(φ)_j`;
/// absent when two part sizes of `μ` have odd multiplicity.
pub fn ohmori_construction(lambda: &MultiPartition) -> Option<(usize, Partition)> {
    let mut mu: Vec<usize> = vec![0; lambda.height()];
    for (o, p) in lambda.entries() {
        for (j, x) in p.parts().iter().enumerate() {
            mu[j] += o.size * x;
        }
    }
    let mu = Partition::from_unsorted(mu);
    let odd = odd_multiplicity_parts(&mu);
    if odd.len() > 1 {
        return None;
    }
    let k = odd.first().copied().unwrap_or(0);
    let nu = mu
        .multiplicities()
        .into_iter()
        .flat_map(|(i, m)| std::iter::repeat_n(i, m / 2))
        .collect();
    Some((k, Partition::from_unsorted(nu)))
}

/// One factor of an induced character.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum InducedInput {
    /// An orbit of odd size `size` fixed by the involution, carrying `λ̃`.
    Fixed { size: usize, lambda: Partition },
    /// A pair of orbits of size `size` swapped by the involution.
    Paired {
        size: usize,
        alpha: Partition,
        beta: Partition,
    },
}

/// Signed multiplicities `(-1)^{n(γ)}·c^γ` of the induced character, one
/// output orbit per input factor (labelled by position).
pub fn induced_coeffs(inputs: &[InducedInput]) -> Result<BTreeMap<MultiPartition, i64>> {
    let mut factors: Vec<(usize, Vec<(Partition, i64)>)> = Vec::new();
    for item in inputs {
        match item {
            InducedInput::Fixed { size, lambda } => {
                if size % 2 == 0 {
                    return invalid(format!("fixed orbit size {size} must be odd"));
                }
                let f = plethysm_pk(lambda, 2)?;
                let terms = f
                    .terms()
                    .map(|(g, c)| {
                        let c = c.as_int().expect("plethysm coefficients are integers");
                        let sign = if g.n_stat() % 2 == 0 { 1 } else { -1 };
                        (g.clone(), sign * c)
                    })
                    .collect();
                factors.push((*size, terms));
            }
            InducedInput::Paired { size, alpha, beta } => {
                if *size == 0 {
                    return invalid("orbit size must be positive");
                }
                let n = alpha.size() + beta.size();
                let terms = partitions_of(n)
                    .iter()
                    .filter_map(|g| {
                        let c = lr_coefficient(alpha, beta, g);
                        (c > 0).then(|| (g.clone(), c as i64))
                    })
                    .collect();
                factors.push((2 * size, terms));
            }
        }
    }
    let mut acc: Vec<(Vec<(usize, Partition)>, i64)> = vec![(Vec::new(), 1)];
    for (size, terms) in &factors {
        let mut next = Vec::new();
        for (items, c) in &acc {
            for (g, d) in terms {
                let mut v = items.clone();
                v.push((*size, g.clone()));
                next.push((v, c * d));
            }
        }
        acc = next;
    }
    let mut out = BTreeMap::new();
    for (items, c) in acc {
        *out.entry(MultiPartition::positional(&items)?).or_insert(0) += c;
    }
    out.retain(|_, c| *c != 0);
    Ok(out)
}

/// Multiplicities in the induced Gelfand-Graev character: the entries of
/// `Γ_{(0,(n))}` over multipartitions of size `2n` on the given orbits.
pub fn dgg_base_case(n: usize, profile: &[usize]) -> Result<BTreeMap<MultiPartition, u64>> {
    if n == 0 {
        return invalid("n must be positive");
    }
    dgg_decompose(2 * n, 0, &Partition::row(n), profile)
}
