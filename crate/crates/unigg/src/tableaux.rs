//! Symplectic and domino tableaux of shape `λ/(m₀)`.
//!
//! Symbols of the barred alphabet `0 < 1̄ < 1 < 2̄ < 2 < …` are encoded as
//! `0`, `2i-1` for `ī` and `2i` for `i`, so the order is integer order.
//! Weights are sequences `(w_1, w_2, …)` of the nonzero letters; the count
//! of zeros is the separate parameter `m0`.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{invalid, Result};
use crate::partitions::Partition;

pub type Cell = (usize, usize);

/// Drops trailing zeros.
pub fn trim(w: &[usize]) -> Vec<usize> {
    let mut v = w.to_vec();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

pub fn symbol_name(s: usize) -> String {
    match s {
        0 => "0".into(),
        s if s % 2 == 1 => format!("{}-", s.div_ceil(2)),
        s => (s / 2).to_string(),
    }
}

pub fn parse_symbol(t: &str) -> Result<usize> {
    let (body, barred) = match t.strip_suffix('-') {
        Some(b) => (b, true),
        None => (t, false),
    };
    let i: usize = body
        .parse()
        .map_err(|_| crate::Error::InvalidInput(format!("bad symbol {t:?}")))?;
    match (i, barred) {
        (0, true) => invalid("0 has no barred form"),
        (0, false) => Ok(0),
        (i, true) => Ok(2 * i - 1),
        (i, false) => Ok(2 * i),
    }
}

fn check_m0(shape: &Partition, m0: usize) -> Result<()> {
    if m0 > shape.part(0) {
        return invalid(format!("m0 = {m0} exceeds the first row of {shape}"));
    }
    Ok(())
}

/// A column-strict filling of `λ` by the barred alphabet whose zeros are
/// exactly the first `m0` cells of row 1.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SymplecticTableau {
    pub shape: Partition,
    pub m0: usize,
    pub rows: Vec<Vec<usize>>,
}

impl SymplecticTableau {
    pub fn is_valid(&self) -> bool {
        let shape_ok = self.rows.len() == self.shape.len()
            && self
                .rows
                .iter()
                .zip(self.shape.parts())
                .all(|(r, &p)| r.len() == p);
        if !shape_ok || self.m0 > self.shape.part(0) {
            return false;
        }
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &s) in row.iter().enumerate() {
                let zero_cell = r == 0 && c < self.m0;
                if zero_cell != (s == 0) {
                    return false;
                }
                if c > 0 && row[c - 1] > s {
                    return false;
                }
                if r > 0 && self.rows[r - 1][c] >= s {
                    return false;
                }
            }
        }
        true
    }

    /// `w_i = #ī + #i`.
    pub fn weight(&self) -> Vec<usize> {
        let mut w = Vec::new();
        for &s in self.rows.iter().flatten().filter(|&&s| s > 0) {
            let i = s.div_ceil(2);
            if w.len() < i {
                w.resize(i, 0);
            }
            w[i - 1] += 1;
        }
        w
    }

    pub fn render(&self) -> String {
        render_rows(&self.rows, symbol_name)
    }
}

fn render_rows(rows: &[Vec<usize>], name: impl Fn(usize) -> String) -> String {
    let width = rows
        .iter()
        .flatten()
        .map(|&s| name(s).len())
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row
            .iter()
            .map(|&s| format!("{:>width$}", name(s)))
            .collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

/// Runs `rec` over all `ν ⊆ λ` containing `μ` with `|ν/μ| = size` and no
/// column of `ν/μ` longer than two.
fn for_each_extension(lambda: &[usize], mu: &[usize], size: usize, mut f: impl FnMut(&[usize])) {
    fn rec(
        r: usize,
        left: usize,
        lambda: &[usize],
        mu: &[usize],
        cur: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]),
    ) {
        if r == lambda.len() {
            if left == 0 {
                f(cur);
            }
            return;
        }
        let mut hi = lambda[r];
        if r > 0 {
            hi = hi.min(cur[r - 1]);
        }
        if r > 1 {
            hi = hi.min(mu[r - 2]);
        }
        let lo = mu[r];
        if hi < lo {
            return;
        }
        let remaining_cap: usize = (r + 1..lambda.len()).map(|k| lambda[k] - mu[k]).sum();
        for v in lo..=hi.min(lo + left) {
            let used = v - lo;
            if left - used > remaining_cap {
                continue;
            }
            cur[r] = v;
            rec(r + 1, left - used, lambda, mu, cur, f);
        }
        cur[r] = mu[r];
    }
    let mut cur = mu.to_vec();
    rec(0, size, lambda, mu, &mut cur, &mut f);
}

/// Counts chains `start = μ⁰ ⊂ μ¹ ⊂ … ⊂ λ` with `|μ^i/μ^{i-1}| = sizes[i-1]`,
/// each step weighted by `step(μ^{i-1}, μ^i)`.
fn chain_count(
    lambda: &Partition,
    start: Vec<usize>,
    sizes: &[usize],
    step: &dyn Fn(&[usize], &[usize]) -> u64,
) -> u64 {
    let lam: Vec<usize> = lambda.parts().to_vec();
    let mut memo: HashMap<(usize, Vec<usize>), u64> = HashMap::new();
    fn rec(
        level: usize,
        mu: Vec<usize>,
        lam: &[usize],
        sizes: &[usize],
        step: &dyn Fn(&[usize], &[usize]) -> u64,
        memo: &mut HashMap<(usize, Vec<usize>), u64>,
    ) -> u64 {
        if level == sizes.len() {
            return u64::from(mu == lam);
        }
        if let Some(&v) = memo.get(&(level, mu.clone())) {
            return v;
        }
        let mut nexts = Vec::new();
        for_each_extension(lam, &mu, sizes[level], |nu| {
            let w = step(&mu, nu);
            if w > 0 {
                nexts.push((nu.to_vec(), w));
            }
        });
        let total = nexts
            .into_iter()
            .map(|(nu, w)| w * rec(level + 1, nu, lam, sizes, step, memo))
            .sum();
        memo.insert((level, mu), total);
        total
    }
    rec(0, start, &lam, sizes, step, &mut memo)
}

fn padded_start(shape: &Partition, m0: usize) -> Vec<usize> {
    let mut v = vec![0; shape.len()];
    if !v.is_empty() {
        v[0] = m0;
    }
    v
}

/// Number of `α` with `μ ⊆ α ⊆ ν`, both `α/μ` and `ν/α` horizontal strips.
fn double_strip_count(mu: &[usize], nu: &[usize]) -> u64 {
    let mut total = 1u64;
    for r in 0..nu.len() {
        let upper = if r == 0 { nu[0] } else { nu[r].min(mu[r - 1]) };
        let lower = mu[r].max(nu.get(r + 1).copied().unwrap_or(0));
        if upper < lower {
            return 0;
        }
        total *= (upper - lower + 1) as u64;
    }
    total
}

/// `|T^λ_{(m0, weight)}|`.
pub fn count_symplectic(shape: &Partition, m0: usize, weight: &[usize]) -> u64 {
    if m0 > shape.part(0) || m0 + weight.iter().sum::<usize>() != shape.size() {
        return 0;
    }
    chain_count(shape, padded_start(shape, m0), weight, &double_strip_count)
}

/// All symplectic tableaux of shape `λ/(m0)` and the given weight, in
/// row-major order with symbols tried in increasing order.
pub fn enumerate_symplectic(
    shape: &Partition,
    m0: usize,
    weight: &[usize],
) -> Vec<SymplecticTableau> {
    let mut out = Vec::new();
    if m0 > shape.part(0) || m0 + weight.iter().sum::<usize>() != shape.size() {
        return out;
    }
    let cells = shape.cells();
    let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&p| vec![0; p]).collect();
    let mut left = weight.to_vec();
    fn rec(
        idx: usize,
        cells: &[Cell],
        m0: usize,
        rows: &mut Vec<Vec<usize>>,
        left: &mut Vec<usize>,
        shape: &Partition,
        out: &mut Vec<SymplecticTableau>,
    ) {
        let Some(&(r, c)) = cells.get(idx) else {
            out.push(SymplecticTableau {
                shape: shape.clone(),
                m0,
                rows: rows.clone(),
            });
            return;
        };
        if r == 0 && c < m0 {
            rows[r][c] = 0;
            rec(idx + 1, cells, m0, rows, left, shape, out);
            return;
        }
        let mut lo = 1;
        if c > 0 {
            lo = lo.max(rows[r][c - 1]);
        }
        if r > 0 {
            lo = lo.max(rows[r - 1][c] + 1);
        }
        for s in lo..=2 * left.len() {
            let i = s.div_ceil(2) - 1;
            if left[i] == 0 {
                continue;
            }
            left[i] -= 1;
            rows[r][c] = s;
            rec(idx + 1, cells, m0, rows, left, shape, out);
            left[i] += 1;
        }
        rows[r][c] = 0;
    }
    rec(0, &cells, m0, &mut rows, &mut left, shape, &mut out);
    out
}

/// A domino with cells `a` before `b` in row-major order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Domino {
    pub a: Cell,
    pub b: Cell,
    pub label: usize,
}

impl Domino {
    pub fn new(x: Cell, y: Cell, label: usize) -> Self {
        let (a, b) = if x <= y { (x, y) } else { (y, x) };
        Domino { a, b, label }
    }

    pub fn is_vertical(&self) -> bool {
        self.a.1 == self.b.1
    }

    fn is_adjacent(&self) -> bool {
        (self.a.0 == self.b.0 && self.a.1 + 1 == self.b.1)
            || (self.a.1 == self.b.1 && self.a.0 + 1 == self.b.0)
    }
}

/// A labelled domino tiling of `λ/(m0)`; the first `m0` cells of row 1 hold 0.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DominoTableau {
    pub shape: Partition,
    pub m0: usize,
    dominoes: Vec<Domino>,
}

impl DominoTableau {
    pub fn new(shape: Partition, m0: usize, mut dominoes: Vec<Domino>) -> Self {
        dominoes.sort();
        DominoTableau {
            shape,
            m0,
            dominoes,
        }
    }

    pub fn dominoes(&self) -> &[Domino] {
        &self.dominoes
    }

    /// Cell labels with 0 on the removed part; `None` marks an uncovered cell.
    pub fn grid(&self) -> Vec<Vec<Option<usize>>> {
        let mut g: Vec<Vec<Option<usize>>> =
            self.shape.parts().iter().map(|&p| vec![None; p]).collect();
        for c in 0..self.m0.min(self.shape.part(0)) {
            g[0][c] = Some(0);
        }
        for d in &self.dominoes {
            for (r, c) in [d.a, d.b] {
                if let Some(slot) = g.get_mut(r).and_then(|row| row.get_mut(c)) {
                    *slot = Some(d.label);
                }
            }
        }
        g
    }

    pub fn is_valid(&self) -> bool {
        if self.m0 > self.shape.part(0) {
            return false;
        }
        let mut owner: Vec<Vec<Option<usize>>> =
            self.shape.parts().iter().map(|&p| vec![None; p]).collect();
        for (k, d) in self.dominoes.iter().enumerate() {
            if d.label == 0 || !d.is_adjacent() {
                return false;
            }
            for (r, c) in [d.a, d.b] {
                let in_zero = r == 0 && c < self.m0;
                match owner.get_mut(r).and_then(|row| row.get_mut(c)) {
                    Some(slot) if slot.is_none() && !in_zero => *slot = Some(k),
                    _ => return false,
                }
            }
        }
        for (r, row) in owner.iter().enumerate() {
            for (c, o) in row.iter().enumerate() {
                if o.is_none() != (r == 0 && c < self.m0) {
                    return false;
                }
            }
        }
        let g = self.grid();
        for r in 0..g.len() {
            for c in 0..g[r].len() {
                let v = g[r][c];
                if c > 0 && g[r][c - 1] > v {
                    return false;
                }
                if r > 0 {
                    let up = g[r - 1][c];
                    let same = owner[r][c].is_some() && owner[r][c] == owner[r - 1][c];
                    if up > v || (up == v && !same) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `w_i` = number of dominoes labelled `i`.
    pub fn weight(&self) -> Vec<usize> {
        let mut w = Vec::new();
        for d in &self.dominoes {
            if w.len() < d.label {
                w.resize(d.label, 0);
            }
            w[d.label - 1] += 1;
        }
        w
    }

    /// One row per line; `-` joins a horizontal domino and `|` marks the
    /// seam of a vertical one.
    pub fn render(&self) -> String {
        let g = self.grid();
        let width = g
            .iter()
            .flatten()
            .flatten()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1);
        let mut hjoin = std::collections::HashSet::new();
        let mut vjoin = std::collections::HashSet::new();
        for d in &self.dominoes {
            if d.is_vertical() {
                vjoin.insert(d.a);
            } else {
                hjoin.insert(d.a);
            }
        }
        let mut out = String::new();
        for (r, row) in g.iter().enumerate() {
            let mut line = String::new();
            for (c, v) in row.iter().enumerate() {
                if c > 0 {
                    line.push(if hjoin.contains(&(r, c - 1)) {
                        '-'
                    } else {
                        ' '
                    });
                }
                let _ = write!(
                    line,
                    "{:>width$}",
                    v.map_or(".".to_string(), |x| x.to_string())
                );
            }
            out.push_str(line.trim_end());
            out.push('\n');
            if (0..row.len()).any(|c| vjoin.contains(&(r, c))) {
                let mut seam = String::new();
                for c in 0..row.len() {
                    if c > 0 {
                        seam.push(' ');
                    }
                    let mark = if vjoin.contains(&(r, c)) { "|" } else { " " };
                    let _ = write!(seam, "{mark:>width$}");
                }
                out.push_str(seam.trim_end());
                out.push('\n');
            }
        }
        out
    }
}

/// The unique domino tiling of the strip `ν/μ` compatible with a single
/// label, if `ν/μ` is a valid one-label strip: every column has at most two
/// cells, two-cell columns are vertical dominoes, and the remaining cells of
/// each row form runs of even length.
pub fn domino_strip_tiling(mu: &[usize], nu: &[usize], label: usize) -> Option<Vec<Domino>> {
    let rows = nu.len();
    let m = |r: usize| mu.get(r).copied().unwrap_or(0);
    let width = nu.first().copied().unwrap_or(0);
    let mut col_cells = vec![0usize; width];
    for r in 0..rows {
        for cell in col_cells.iter_mut().take(nu[r]).skip(m(r)) {
            *cell += 1;
        }
    }
    if col_cells.iter().any(|&k| k > 2) {
        return None;
    }
    let mut out = Vec::new();
    for r in 0..rows {
        let mut run: Vec<usize> = Vec::new();
        let flush = |run: &mut Vec<usize>, out: &mut Vec<Domino>| -> bool {
            if run.len() % 2 == 1 {
                return false;
            }
            for pair in run.chunks(2) {
                out.push(Domino::new((r, pair[0]), (r, pair[1]), label));
            }
            run.clear();
            true
        };
        for c in m(r)..nu[r] {
            if col_cells[c] == 2 {
                if !flush(&mut run, &mut out) {
                    return None;
                }
                if r + 1 < rows && m(r + 1) <= c && c < nu[r + 1] {
                    out.push(Domino::new((r, c), (r + 1, c), label));
                }
            } else {
                run.push(c);
            }
        }
        if !flush(&mut run, &mut out) {
            return None;
        }
    }
    Some(out)
}

/// All `ν ⊆ λ` such that `ν/μ` is a one-label domino strip of `size` cells.
/// Both `λ` and `μ` are padded to the same length.
pub(crate) fn domino_strip_extensions(
    lambda: &[usize],
    mu: &[usize],
    size: usize,
) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_extension(lambda, mu, size, |nu| {
        if domino_strip_tiling(mu, nu, 1).is_some() {
            out.push(nu.to_vec());
        }
    });
    out
}

/// `parts` padded with zeros to `len` rows.
pub(crate) fn padded(parts: &[usize], len: usize) -> Vec<usize> {
    let mut v = parts.to_vec();
    v.resize(len, 0);
    v
}

/// `|D^λ_{(m0, weight)}|` via chains of one-label strips.
pub fn count_domino(shape: &Partition, m0: usize, weight: &[usize]) -> u64 {
    if m0 > shape.part(0) || m0 + 2 * weight.iter().sum::<usize>() != shape.size() {
        return 0;
    }
    let sizes: Vec<usize> = weight.iter().map(|w| 2 * w).collect();
    chain_count(shape, padded_start(shape, m0), &sizes, &|mu, nu| {
        u64::from(domino_strip_tiling(mu, nu, 1).is_some())
    })
}

/// All domino tilings of `λ/(m0)`, each sorted, in backtracking order.
pub fn domino_tilings(shape: &Partition, m0: usize) -> Vec<Vec<(Cell, Cell)>> {
    let mut out = Vec::new();
    if m0 > shape.part(0) {
        return out;
    }
    let mut covered: Vec<Vec<bool>> = shape.parts().iter().map(|&p| vec![false; p]).collect();
    for c in 0..m0 {
        covered[0][c] = true;
    }
    let mut cur = Vec::new();
    tile_rec(shape, &mut covered, &mut cur, &mut out, false);
    out
}

fn tile_rec(
    shape: &Partition,
    covered: &mut Vec<Vec<bool>>,
    cur: &mut Vec<(Cell, Cell)>,
    out: &mut Vec<Vec<(Cell, Cell)>>,
    first_only: bool,
) -> bool {
    let next = covered
        .iter()
        .enumerate()
        .find_map(|(r, row)| row.iter().position(|&x| !x).map(|c| (r, c)));
    let Some((r, c)) = next else {
        out.push(cur.clone());
        return true;
    };
    let mut found = false;
    if c + 1 < shape.part(r) && !covered[r][c + 1] {
        covered[r][c] = true;
        covered[r][c + 1] = true;
        cur.push(((r, c), (r, c + 1)));
        found |= tile_rec(shape, covered, cur, out, first_only);
        cur.pop();
        covered[r][c] = false;
        covered[r][c + 1] = false;
        if found && first_only {
            return true;
        }
    }
    if r + 1 < shape.len() && c < shape.part(r + 1) && !covered[r + 1][c] {
        covered[r][c] = true;
        covered[r + 1][c] = true;
        cur.push(((r, c), (r + 1, c)));
        found |= tile_rec(shape, covered, cur, out, first_only);
        cur.pop();
        covered[r][c] = false;
        covered[r + 1][c] = false;
    }
    found
}

/// Whether `λ/(m0)` admits a domino tiling.
pub fn has_domino_tiling(shape: &Partition, m0: usize) -> Result<bool> {
    check_m0(shape, m0)?;
    if (shape.size() - m0) % 2 == 1 {
        return Ok(false);
    }
    let mut covered: Vec<Vec<bool>> = shape.parts().iter().map(|&p| vec![false; p]).collect();
    for c in 0..m0 {
        covered[0][c] = true;
    }
    let mut out = Vec::new();
    Ok(tile_rec(
        shape,
        &mut covered,
        &mut Vec::new(),
        &mut out,
        true,
    ))
}

/// All domino tableaux of shape `λ/(m0)` and the given weight, by iterating
/// tilings and labelling each with column-strictness pruning.
pub fn enumerate_domino(shape: &Partition, m0: usize, weight: &[usize]) -> Vec<DominoTableau> {
    let mut out = Vec::new();
    if m0 > shape.part(0) || m0 + 2 * weight.iter().sum::<usize>() != shape.size() {
        return out;
    }
    let cells = shape.cells();
    for tiling in domino_tilings(shape, m0) {
        let mut owner: Vec<Vec<usize>> =
            shape.parts().iter().map(|&p| vec![usize::MAX; p]).collect();
        for (k, &((r1, c1), (r2, c2))) in tiling.iter().enumerate() {
            owner[r1][c1] = k;
            owner[r2][c2] = k;
        }
        let mut labels = vec![0usize; tiling.len()];
        let mut left = weight.to_vec();
        let ctx = LabelCtx {
            cells: &cells,
            owner: &owner,
            tiling: &tiling,
            m0,
        };
        label_rec(&ctx, 0, &mut labels, &mut left, &mut |labels| {
            let dominoes = tiling
                .iter()
                .zip(labels)
                .map(|(&(x, y), &l)| Domino::new(x, y, l))
                .collect();
            out.push(DominoTableau::new(shape.clone(), m0, dominoes));
        });
    }
    out
}

struct LabelCtx<'a> {
    cells: &'a [Cell],
    owner: &'a [Vec<usize>],
    tiling: &'a [(Cell, Cell)],
    m0: usize,
}

impl LabelCtx<'_> {
    fn value(&self, labels: &[usize], (r, c): Cell) -> usize {
        if r == 0 && c < self.m0 {
            0
        } else {
            labels[self.owner[r][c]]
        }
    }

    fn ok(&self, labels: &[usize], (r, c): Cell) -> bool {
        let v = self.value(labels, (r, c));
        if c > 0 && self.value(labels, (r, c - 1)) > v {
            return false;
        }
        if r > 0 {
            let up = self.value(labels, (r - 1, c));
            let same = !(r - 1 == 0 && c < self.m0) && self.owner[r - 1][c] == self.owner[r][c];
            if up > v || (up == v && !same) {
                return false;
            }
        }
        true
    }
}

fn label_rec(
    ctx: &LabelCtx<'_>,
    idx: usize,
    labels: &mut Vec<usize>,
    left: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    let Some(&(r, c)) = ctx.cells.get(idx) else {
        emit(labels);
        return;
    };
    if r == 0 && c < ctx.m0 {
        label_rec(ctx, idx + 1, labels, left, emit);
        return;
    }
    let k = ctx.owner[r][c];
    if ctx.tiling[k].0 != (r, c) {
        if ctx.ok(labels, (r, c)) {
            label_rec(ctx, idx + 1, labels, left, emit);
        }
        return;
    }
    for l in 1..=left.len() {
        if left[l - 1] == 0 {
            continue;
        }
        labels[k] = l;
        if ctx.ok(labels, (r, c)) {
            left[l - 1] -= 1;
            label_rec(ctx, idx + 1, labels, left, emit);
            left[l - 1] += 1;
        }
    }
    labels[k] = 0;
}

/// Column-strict fillings of a region by the two letters `x < y`; each
/// filling lists `true` for `y` per cell in the input order.
pub fn two_letter_fillings(cells: &[Cell]) -> Vec<Vec<bool>> {
    let n = cells.len();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << n) {
        let val = |i: usize| (mask >> i) & 1 == 1;
        let ok = (0..n).all(|i| {
            (0..n).all(|j| {
                let (a, b) = (cells[i], cells[j]);
                if a.0 == b.0 && a.1 < b.1 {
                    !(val(i) && !val(j))
                } else if a.1 == b.1 && a.0 < b.0 {
                    !val(i) && val(j)
                } else {
                    true
                }
            })
        });
        if ok {
            out.push((0..n).map(val).collect());
        }
    }
    out
}

pub fn count_two_letter_fillings(cells: &[Cell]) -> u64 {
    two_letter_fillings(cells).len() as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    fn sample_symplectic() -> SymplecticTableau {
        let row = |s: &str| {
            s.split_whitespace()
                .map(|t| parse_symbol(t).unwrap())
                .collect()
        };
        SymplecticTableau {
            shape: part![5, 3, 1, 1],
            m0: 2,
            rows: vec![row("0 0 1- 1 4-"), row("1 2- 2-"), row("3-"), row("3")],
        }
    }

    fn sample_domino() -> DominoTableau {
        DominoTableau::new(
            part![5, 3, 1, 1],
            2,
            vec![
                Domino::new((0, 2), (1, 2), 3),
                Domino::new((0, 3), (0, 4), 3),
                Domino::new((1, 0), (1, 1), 1),
                Domino::new((2, 0), (3, 0), 2),
            ],
        )
    }

    #[test]
    fn displayed_symplectic_tableau_is_valid() {
        let q = sample_symplectic();
        assert!(q.is_valid());
        assert_eq!(q.weight(), vec![3, 2, 2, 1]);
        assert!(enumerate_symplectic(&q.shape, 2, &[3, 2, 2, 1]).contains(&q));
    }

    #[test]
    fn displayed_domino_tableau_is_valid() {
        let q = sample_domino();
        assert!(q.is_valid());
        assert_eq!(q.weight(), vec![1, 1, 2]);
        assert!(enumerate_domino(&q.shape, 2, &[1, 1, 2]).contains(&q));
    }

    #[test]
    fn symplectic_counts() {
        assert_eq!(count_symplectic(&part![3], 3, &[]), 1);
        assert_eq!(count_symplectic(&part![2, 2], 0, &[4]), 1);
        assert_eq!(count_symplectic(&part![1], 0, &[1]), 2);
    }

    #[test]
    fn domino_counts() {
        assert_eq!(count_domino(&part![1, 1], 0, &[1]), 1);
        assert_eq!(count_domino(&part![2, 2], 0, &[1, 1]), 2);
        assert_eq!(count_domino(&part![2, 2], 0, &[2]), 1);
        assert_eq!(count_domino(&part![2, 1], 0, &[1]), 0);
    }

    #[test]
    fn tilability() {
        assert!(!has_domino_tiling(&part![2, 1], 1).unwrap());
        assert!(has_domino_tiling(&part![2, 1, 1], 2).unwrap());
        assert!(!has_domino_tiling(&part![2, 1], 0).unwrap());
        assert!(has_domino_tiling(&part![5, 5, 5, 3, 3], 1).unwrap());
        assert!(has_domino_tiling(&part![2], 3).is_err());
        assert_eq!(domino_tilings(&part![2, 2], 0).len(), 2);
        assert_eq!(domino_tilings(&part![4, 4, 4], 0).len(), 11);
    }

    #[test]
    fn two_letter_examples() {
        assert_eq!(
            count_two_letter_fillings(&[(0, 2), (0, 3), (0, 4), (1, 0)]),
            8
        );
        assert_eq!(count_two_letter_fillings(&[(0, 0)]), 2);
        assert_eq!(count_two_letter_fillings(&[(0, 0), (1, 0), (2, 0)]), 0);
    }

    #[test]
    fn symbols_roundtrip() {
        for s in 0..10 {
            assert_eq!(parse_symbol(&symbol_name(s)).unwrap(), s);
        }
        assert!(parse_symbol("0-").is_err());
    }

    #[test]
    fn rendering() {
        assert_eq!(
            sample_symplectic().render(),
            " 0  0 1-  1 4-\n 1 2- 2-\n3-\n 3\n"
        );
        let text = sample_domino().render();
        assert_eq!(text, "0 0 3 3-3\n    |\n1-1 3\n2\n|\n2\n");
    }
}
