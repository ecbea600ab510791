//! Symmetric functions in one alphabet over `LaurentPolyQ` coefficients.
//!
//! Bases: power sums `p`, Schur `s`, monomial `m` and Hall-Littlewood
//! `P(·;t)`. Conversions route through the Schur basis using the character
//! table of the symmetric group, Kostka numbers and Kostka-Foulkes
//! polynomials. Memo tables are process-wide and guarded by mutexes; every
//! entry is computed in full before it is published.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::Hash;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::Zero;

use crate::error::{invalid, Result};
use crate::partitions::Partition;
use crate::poly::{rat, LaurentPolyQ, Rational};

type Memo<K, V> = OnceLock<Mutex<HashMap<K, V>>>;

fn cached<K, V>(memo: &'static Memo<K, V>, key: K, compute: impl FnOnce() -> V) -> V
where
    K: Hash + Eq,
    V: Clone,
{
    let map = memo.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = map.lock().expect("memo poisoned").get(&key) {
        return v.clone();
    }
    let v = compute();
    map.lock()
        .expect("memo poisoned")
        .entry(key)
        .or_insert(v)
        .clone()
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Basis {
    Power,
    Schur,
    Monomial,
    HallLittlewood,
}

impl Basis {
    pub fn symbol(self) -> &'static str {
        match self {
            Basis::Power => "p",
            Basis::Schur => "s",
            Basis::Monomial => "m",
            Basis::HallLittlewood => "P",
        }
    }
}

/// A finite sum `Σ c_λ b_λ` in a single basis `b`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymFunc {
    basis: Basis,
    terms: BTreeMap<Partition, LaurentPolyQ>,
}

impl SymFunc {
    pub fn zero(basis: Basis) -> Self {
        SymFunc {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis_element(basis: Basis, lambda: Partition) -> Self {
        let mut f = Self::zero(basis);
        f.add_term(lambda, LaurentPolyQ::one());
        f
    }

    pub fn schur(lambda: Partition) -> Self {
        Self::basis_element(Basis::Schur, lambda)
    }

    pub fn power(nu: Partition) -> Self {
        Self::basis_element(Basis::Power, nu)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn add_term(&mut self, lambda: Partition, c: LaurentPolyQ) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(lambda.clone()).or_default();
        *entry += &c;
        if entry.is_zero() {
            self.terms.remove(&lambda);
        }
    }

    pub fn coeff(&self, lambda: &Partition) -> LaurentPolyQ {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &LaurentPolyQ)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &LaurentPolyQ) -> SymFunc {
        let mut out = Self::zero(self.basis);
        for (l, v) in &self.terms {
            out.add_term(l.clone(), v * c);
        }
        out
    }

    /// Sum of two elements, expressed in the basis of `self`.
    pub fn add(&self, other: &SymFunc) -> SymFunc {
        let other = other.to_basis(self.basis);
        let mut out = self.clone();
        for (l, v) in other.terms {
            out.add_term(l, v);
        }
        out
    }

    /// Product, expressed in the basis of `self`.
    pub fn mul(&self, other: &SymFunc) -> SymFunc {
        match self.basis {
            Basis::Power => {
                let other = other.to_basis(Basis::Power);
                let mut out = Self::zero(Basis::Power);
                for (a, x) in &self.terms {
                    for (b, y) in &other.terms {
                        out.add_term(a.union(b), x * y);
                    }
                }
                out
            }
            Basis::Schur => {
                let other = other.to_basis(Basis::Schur);
                let mut out = Self::zero(Basis::Schur);
                for (a, x) in &self.terms {
                    for (b, y) in &other.terms {
                        let xy = x * y;
                        for (g, c) in schur_product_table(a, b).iter() {
                            out.add_term(g.clone(), xy.scale(&rat(*c)));
                        }
                    }
                }
                out
            }
            _ => self.to_basis(Basis::Schur).mul(other).to_basis(self.basis),
        }
    }

    /// Re-expresses `self` in `target`; `t` is the formal Hall-Littlewood parameter.
    pub fn to_basis(&self, target: Basis) -> SymFunc {
        if self.basis == target {
            return self.clone();
        }
        let s = self.to_schur();
        if target == Basis::Schur {
            return s;
        }
        let mut out = Self::zero(target);
        for (lam, a) in &s.terms {
            let n = lam.size();
            let parts = partitions_of(n);
            let i = index_of(n, lam);
            match target {
                Basis::Power => {
                    let chi = character_table(n);
                    for (j, nu) in parts.iter().enumerate() {
                        let c = Rational::new(chi[i][j].into(), nu.z_stat().into());
                        out.add_term(nu.clone(), a.scale(&c));
                    }
                }
                Basis::Monomial => {
                    let k = kostka_matrix(n);
                    for (j, mu) in parts.iter().enumerate() {
                        out.add_term(mu.clone(), &k.forward[i][j] * a);
                    }
                }
                Basis::HallLittlewood => {
                    let k = kostka_foulkes_matrix(n);
                    for (j, mu) in parts.iter().enumerate() {
                        out.add_term(mu.clone(), &k.forward[i][j] * a);
                    }
                }
                Basis::Schur => unreachable!(),
            }
        }
        out
    }

    fn to_schur(&self) -> SymFunc {
        let mut out = Self::zero(Basis::Schur);
        for (mu, b) in &self.terms {
            let n = mu.size();
            let parts = partitions_of(n);
            let j = index_of(n, mu);
            match self.basis {
                Basis::Schur => out.add_term(mu.clone(), b.clone()),
                Basis::Power => {
                    let chi = character_table(n);
                    for (i, lam) in parts.iter().enumerate() {
                        out.add_term(lam.clone(), b.scale(&rat(chi[i][j])));
                    }
                }
                Basis::Monomial => {
                    let k = kostka_matrix(n);
                    for (i, lam) in parts.iter().enumerate() {
                        out.add_term(lam.clone(), &k.inverse[j][i] * b);
                    }
                }
                Basis::HallLittlewood => {
                    let k = kostka_foulkes_matrix(n);
                    for (i, lam) in parts.iter().enumerate() {
                        out.add_term(lam.clone(), &k.inverse[j][i] * b);
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let sym = self.basis.symbol();
        let items: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(l, c)| format!("({})*{sym}[{l}]", c.to_string_in("t")))
            .collect();
        f.write_str(&items.join(" + "))
    }
}

static PARTITIONS: Memo<usize, Arc<Vec<Partition>>> = OnceLock::new();
static INDEX: Memo<usize, Arc<HashMap<Partition, usize>>> = OnceLock::new();

/// Partitions of `n` in decreasing lexicographic order (shared).
pub fn partitions_of(n: usize) -> Arc<Vec<Partition>> {
    cached(&PARTITIONS, n, || Arc::new(Partition::all(n)))
}

fn index_of(n: usize, lam: &Partition) -> usize {
    let idx = cached(&INDEX, n, || {
        Arc::new(
            partitions_of(n)
                .iter()
                .enumerate()
                .map(|(i, p)| (p.clone(), i))
                .collect(),
        )
    });
    idx[lam]
}

static MN: Memo<(Partition, Partition), i64> = OnceLock::new();

/// Irreducible character `χ^λ` of `S_n` at cycle type `ν`.
pub fn mn_character(lambda: &Partition, nu: &Partition) -> Result<i64> {
    if lambda.size() != nu.size() {
        return invalid(format!("|{lambda}| != |{nu}|"));
    }
    Ok(mn_rec(lambda, nu.parts()))
}

fn mn_rec(lambda: &Partition, nu: &[usize]) -> i64 {
    let Some((&k, rest)) = nu.split_first() else {
        return 1;
    };
    let key = (lambda.clone(), Partition::from(nu));
    cached(&MN, key, || {
        rim_hook_removals(lambda, k)
            .into_iter()
            .map(|(mu, height)| {
                let sign = if height % 2 == 0 { 1 } else { -1 };
                sign * mn_rec(&mu, rest)
            })
            .sum()
    })
}

/// All `(λ minus a rim k-hook, leg length)` pairs.
pub fn rim_hook_removals(lambda: &Partition, k: usize) -> Vec<(Partition, usize)> {
    let n = lambda.len();
    let beta = lambda.beta_numbers(n);
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let leg = beta.iter().filter(|&&x| x < b && x > b - k).count();
        let mut nb = beta.clone();
        nb[i] = b - k;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let parts = nb
            .iter()
            .enumerate()
            .map(|(j, &x)| x - (n - 1 - j))
            .collect();
        out.push((Partition::from_unsorted(parts), leg));
    }
    out
}

static CHAR_TABLES: Memo<usize, Arc<Vec<Vec<i64>>>> = OnceLock::new();

/// `table[i][j] = χ^{λ_i}(ν_j)` with both indexed by [`partitions_of`].
pub fn character_table(n: usize) -> Arc<Vec<Vec<i64>>> {
    cached(&CHAR_TABLES, n, || {
        let parts = partitions_of(n);
        Arc::new(
            parts
                .iter()
                .map(|l| parts.iter().map(|nu| mn_rec(l, nu.parts())).collect())
                .collect(),
        )
    })
}

/// Semistandard tableaux of shape `shape` and content `content` (a
/// composition), as rows of entries starting from 1.
pub fn semistandard_tableaux(shape: &Partition, content: &[usize]) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    if content.iter().sum::<usize>() != shape.size() {
        return out;
    }
    let rows: Vec<Vec<usize>> = vec![Vec::new(); shape.len()];
    ssyt_rec(shape, content, 0, rows, &mut out);
    out
}

fn ssyt_rec(
    shape: &Partition,
    content: &[usize],
    letter: usize,
    rows: Vec<Vec<usize>>,
    out: &mut Vec<Vec<Vec<usize>>>,
) {
    if letter == content.len() {
        out.push(rows);
        return;
    }
    let mu: Vec<usize> = rows.iter().map(|r| r.len()).collect();
    for strip in horizontal_strips(&mu, shape.parts(), content[letter]) {
        let mut next = rows.clone();
        for (r, &add) in strip.iter().enumerate() {
            next[r].extend(std::iter::repeat_n(letter + 1, add));
        }
        ssyt_rec(shape, content, letter + 1, next, out);
    }
}

/// Row increments `a_r` with `μ + a` inside `bound`, `Σ a_r = size`, and
/// `(μ + a)/μ` a horizontal strip.
pub fn horizontal_strips(mu: &[usize], bound: &[usize], size: usize) -> Vec<Vec<usize>> {
    let rows = bound.len();
    let mut out = Vec::new();
    let mut cur = vec![0; rows];
    fn rec(
        r: usize,
        left: usize,
        mu: &[usize],
        bound: &[usize],
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if r == bound.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let m = mu.get(r).copied().unwrap_or(0);
        let cap = if r == 0 {
            bound[0]
        } else {
            bound[r].min(mu[r - 1])
        };
        let max_add = cap.saturating_sub(m).min(left);
        for a in 0..=max_add {
            cur[r] = a;
            rec(r + 1, left - a, mu, bound, cur, out);
        }
        cur[r] = 0;
    }
    rec(0, size, mu, bound, &mut cur, &mut out);
    out
}

/// Charge of a word whose content is a partition.
pub fn charge(word: &[usize]) -> usize {
    let mut letters: Vec<Option<usize>> = word.iter().map(|&x| Some(x)).collect();
    let mut total = 0;
    while letters.iter().any(|x| x.is_some()) {
        let len = letters.len();
        let mut pos = match (0..len).rev().find(|&i| letters[i] == Some(1)) {
            Some(p) => p,
            None => break,
        };
        letters[pos] = None;
        let mut index = 0;
        let mut r = 1;
        loop {
            let target = Some(r + 1);
            let left = (0..pos).rev().find(|&i| letters[i] == target);
            let next = match left {
                Some(p) => p,
                None => match (pos + 1..len).rev().find(|&i| letters[i] == target) {
                    Some(p) => {
                        index += 1;
                        p
                    }
                    None => break,
                },
            };
            total += index;
            letters[next] = None;
            pos = next;
            r += 1;
        }
    }
    total
}

/// Row reading word: rows from bottom to top, each read left to right.
pub fn reading_word(rows: &[Vec<usize>]) -> Vec<usize> {
    rows.iter().rev().flat_map(|r| r.iter().copied()).collect()
}

/// Kostka-Foulkes polynomial `K_{λμ}(t)` as a sum of `t^{charge(T)}`.
pub fn kostka_foulkes(lambda: &Partition, mu: &Partition) -> Result<LaurentPolyQ> {
    if lambda.size() != mu.size() {
        return invalid(format!("|{lambda}| != |{mu}|"));
    }
    let n = lambda.size();
    let k = kostka_foulkes_matrix(n);
    Ok(k.forward[index_of(n, lambda)][index_of(n, mu)].clone())
}

fn kostka_foulkes_direct(lambda: &Partition, mu: &Partition) -> LaurentPolyQ {
    let mut p = LaurentPolyQ::zero();
    if !lambda.dominates(mu) {
        return p;
    }
    for t in semistandard_tableaux(lambda, mu.parts()) {
        p.add_term(charge(&reading_word(&t)) as i64, rat(1));
    }
    p
}

/// Number of semistandard tableaux of shape `λ` and content `weight`.
pub fn kostka_number(lambda: &Partition, weight: &[usize]) -> u64 {
    if weight.iter().sum::<usize>() != lambda.size() {
        return 0;
    }
    fn rec(mu: Vec<usize>, lambda: &[usize], weight: &[usize]) -> u64 {
        let Some((&w, rest)) = weight.split_first() else {
            return 1;
        };
        horizontal_strips(&mu, lambda, w)
            .into_iter()
            .map(|a| {
                rec(
                    mu.iter().zip(&a).map(|(m, x)| m + x).collect(),
                    lambda,
                    rest,
                )
            })
            .sum()
    }
    rec(vec![0; lambda.len()], lambda.parts(), weight)
}

/// A unitriangular transition matrix and its inverse, indexed by [`partitions_of`].
pub struct Transition {
    pub forward: Vec<Vec<LaurentPolyQ>>,
    pub inverse: Vec<Vec<LaurentPolyQ>>,
}

/// Inverts an upper unitriangular matrix by back-substitution.
pub fn invert_unitriangular(m: &[Vec<LaurentPolyQ>]) -> Vec<Vec<LaurentPolyQ>> {
    let n = m.len();
    let mut x = vec![vec![LaurentPolyQ::zero(); n]; n];
    for j in 0..n {
        assert_eq!(m[j][j], LaurentPolyQ::one(), "matrix is not unitriangular");
        x[j][j] = LaurentPolyQ::one();
        for i in (0..j).rev() {
            let mut acc = LaurentPolyQ::zero();
            for k in i + 1..=j {
                if !m[i][k].is_zero() && !x[k][j].is_zero() {
                    acc += &(&m[i][k] * &x[k][j]);
                }
            }
            x[i][j] = -acc;
        }
    }
    x
}

static KF: Memo<usize, Arc<Transition>> = OnceLock::new();
static KOSTKA: Memo<usize, Arc<Transition>> = OnceLock::new();

/// `K_{λμ}(t)` for all `λ, μ ⊢ n` with its inverse.
pub fn kostka_foulkes_matrix(n: usize) -> Arc<Transition> {
    cached(&KF, n, || {
        let parts = partitions_of(n);
        let forward: Vec<Vec<LaurentPolyQ>> = parts
            .iter()
            .map(|l| parts.iter().map(|m| kostka_foulkes_direct(l, m)).collect())
            .collect();
        let inverse = invert_unitriangular(&forward);
        Arc::new(Transition { forward, inverse })
    })
}

/// Kostka numbers `K_{λμ}` for all `λ, μ ⊢ n` with the inverse matrix.
pub fn kostka_matrix(n: usize) -> Arc<Transition> {
    cached(&KOSTKA, n, || {
        let parts = partitions_of(n);
        let forward: Vec<Vec<LaurentPolyQ>> = parts
            .iter()
            .map(|l| {
                parts
                    .iter()
                    .map(|m| LaurentPolyQ::int(kostka_number(l, m.parts()) as i64))
                    .collect()
            })
            .collect();
        let inverse = invert_unitriangular(&forward);
        Arc::new(Transition { forward, inverse })
    })
}

/// Green polynomial `Q_ν^μ(t)`.
pub fn green_polynomial(nu: &Partition, mu: &Partition) -> Result<LaurentPolyQ> {
    if nu.size() != mu.size() {
        return invalid(format!("|{nu}| != |{mu}|"));
    }
    let n = nu.size();
    let parts = partitions_of(n);
    let chi = character_table(n);
    let kf = kostka_foulkes_matrix(n);
    let (j, m) = (index_of(n, nu), index_of(n, mu));
    let mut g = LaurentPolyQ::zero();
    for i in 0..parts.len() {
        if chi[i][j] != 0 && !kf.forward[i][m].is_zero() {
            g += &kf.forward[i][m].scale(&rat(chi[i][j]));
        }
    }
    let q = g.invert_var().shift(mu.n_stat() as i64);
    debug_assert!(q.is_polynomial() && q.degree().is_none_or(|d| d <= mu.n_stat() as i64));
    Ok(q)
}

/// Littlewood-Richardson coefficient `c^λ_{νμ}` by counting LR tableaux of
/// shape `λ/ν` and content `μ`.
pub fn lr_coefficient(nu: &Partition, mu: &Partition, lambda: &Partition) -> u64 {
    if nu.size() + mu.size() != lambda.size() || !lambda.contains(nu) || !lambda.contains(mu) {
        return 0;
    }
    let mut cells = Vec::new();
    for r in 0..lambda.len() {
        for c in (nu.part(r)..lambda.part(r)).rev() {
            cells.push((r, c));
        }
    }
    let mut grid: Vec<Vec<usize>> = lambda.parts().iter().map(|&p| vec![0; p]).collect();
    let mut counts = vec![0usize; mu.len() + 1];
    lr_rec(&cells, 0, nu, mu.parts(), &mut grid, &mut counts)
}

fn lr_rec(
    cells: &[(usize, usize)],
    idx: usize,
    nu: &Partition,
    mu: &[usize],
    grid: &mut Vec<Vec<usize>>,
    counts: &mut Vec<usize>,
) -> u64 {
    let Some(&(r, c)) = cells.get(idx) else {
        return 1;
    };
    let mut hi = mu.len().min(r + 1);
    if c + 1 < grid[r].len() {
        hi = hi.min(grid[r][c + 1]);
    }
    let lo = if r > 0 && c >= nu.part(r - 1) {
        grid[r - 1][c] + 1
    } else {
        1
    };
    let mut total = 0;
    for v in lo..=hi {
        if counts[v] + 1 > mu[v - 1] || (v > 1 && counts[v] + 1 > counts[v - 1]) {
            continue;
        }
        counts[v] += 1;
        grid[r][c] = v;
        total += lr_rec(cells, idx + 1, nu, mu, grid, counts);
        counts[v] -= 1;
    }
    grid[r][c] = 0;
    total
}

static LR_PRODUCTS: Memo<(Partition, Partition), Arc<Vec<(Partition, i64)>>> = OnceLock::new();

fn schur_product_table(a: &Partition, b: &Partition) -> Arc<Vec<(Partition, i64)>> {
    let key = if a <= b {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    };
    cached(&LR_PRODUCTS, key, || {
        let n = a.size() + b.size();
        let (big, small) = if a.size() >= b.size() { (a, b) } else { (b, a) };
        Arc::new(
            partitions_of(n)
                .iter()
                .filter(|g| g.contains(big) && g.contains(small))
                .filter_map(|g| {
                    let c = lr_coefficient(big, small, g);
                    (c > 0).then(|| (g.clone(), c as i64))
                })
                .collect(),
        )
    })
}

/// `s_λ s_μ` in the Schur basis.
pub fn schur_product(lambda: &Partition, mu: &Partition) -> SymFunc {
    let mut out = SymFunc::zero(Basis::Schur);
    for (g, c) in schur_product_table(lambda, mu).iter() {
        out.add_term(g.clone(), LaurentPolyQ::int(*c));
    }
    out
}

/// `s_λ ∘ p_k` in the Schur basis, with signed integer coefficients.
pub fn plethysm_pk(lambda: &Partition, k: usize) -> Result<SymFunc> {
    if k == 0 {
        return invalid("plethysm with p_0");
    }
    let n = lambda.size();
    let targets = partitions_of(k * n);
    let chi_big = character_table(k * n);
    let mut coeffs = vec![Rational::zero(); targets.len()];
    for nu in partitions_of(n).iter() {
        let a = mn_rec(lambda, nu.parts());
        if a == 0 {
            continue;
        }
        let w = Rational::new(a.into(), nu.z_stat().into());
        let j = index_of(k * n, &nu.scale(k));
        for (i, c) in coeffs.iter_mut().enumerate() {
            if chi_big[i][j] != 0 {
                *c += &w * rat(chi_big[i][j]);
            }
        }
    }
    let mut out = SymFunc::zero(Basis::Schur);
    for (g, c) in targets.iter().zip(coeffs) {
        if !c.is_integer() {
            return invalid(format!("non-integral plethysm coefficient at {g}"));
        }
        out.add_term(g.clone(), LaurentPolyQ::constant(c));
    }
    Ok(out)
}
