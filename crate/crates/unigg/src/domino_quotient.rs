//! Domino tableaux of shape `λ/(m)` versus pairs of semistandard tableaux
//! of shape `quot_2(λ)`, and the lexicographically maximal weight.
//!
//! The forward map moves each label to the cell of its domino with even
//! content `j - i` (content taken in `λ`), sorts the dominoes into `S⁰`
//! (even cell lower or left) and `S¹` (even cell upper or right), and lays
//! the sorted labels of each even diagonal of `S^j` along one diagonal of
//! `quot^(j)`. The `⌊m/2⌋` zero dominoes sit horizontally in row 1 right
//! after the core and become zeros in the first row of `Q^(|core|)`.

use std::collections::{BTreeMap, HashMap};

use crate::error::{invalid, Result};
use crate::partitions::Partition;
use crate::tableaux::{
    domino_strip_extensions, domino_strip_tiling, padded, Domino, DominoTableau,
};

/// Rows of a tableau; entries are non-negative labels.
pub type Rows = Vec<Vec<usize>>;

pub fn rows_shape(rows: &Rows) -> Partition {
    Partition::from_unsorted(rows.iter().map(|r| r.len()).collect())
}

/// Rows weakly increase, columns strictly increase, and the row lengths
/// form a partition.
pub fn is_semistandard(rows: &Rows) -> bool {
    if rows.windows(2).any(|w| w[0].len() < w[1].len()) || rows.iter().any(|r| r.is_empty()) {
        return false;
    }
    rows.iter().enumerate().all(|(r, row)| {
        row.windows(2).all(|w| w[0] <= w[1])
            && (r == 0 || row.iter().zip(&rows[r - 1]).all(|(x, up)| up < x))
    })
}

fn checked_core(lambda: &Partition, m0: usize) -> Result<(Partition, (Partition, Partition))> {
    let (core, quot) = lambda.two_core_quotient();
    if core.size() > 1 {
        return invalid(format!(
            "2-core of {lambda} is {core}, expected empty or (1)"
        ));
    }
    if m0 % 2 != core.size() % 2 {
        return invalid(format!("m0 = {m0} has the wrong parity for 2-core {core}"));
    }
    if m0 > lambda.part(0) {
        return invalid(format!("m0 = {m0} exceeds the first row of {lambda}"));
    }
    Ok((core, quot))
}

/// Content offsets turning an even content `e` of `λ` into the content of
/// the matching diagonal of `quot^(j)`.
fn diagonal_map(lambda: &Partition) -> impl Fn(usize, i64) -> i64 {
    let n = if lambda.len() % 2 == 1 {
        lambda.len()
    } else {
        lambda.len() + 1
    };
    let mut counts = [0i64; 2];
    for b in lambda.beta_numbers(n) {
        counts[b % 2] += 1;
    }
    let n = n as i64;
    move |j, e| {
        if j == 0 {
            (e + 1 + n) / 2 - counts[0]
        } else {
            (e + n - 1) / 2 - counts[1]
        }
    }
}

/// The forward bijection.
pub fn domino_to_pair(q: &DominoTableau) -> Result<(Rows, Rows)> {
    if !q.is_valid() {
        return invalid("not a valid domino tableau");
    }
    let lambda = &q.shape;
    let (core, quot) = checked_core(lambda, q.m0)?;
    let c = core.size();
    let mut entries: Vec<((usize, usize), (usize, usize), usize)> =
        q.dominoes().iter().map(|d| (d.a, d.b, d.label)).collect();
    for k in 0..(q.m0 - c) / 2 {
        entries.push(((0, c + 2 * k), (0, c + 2 * k + 1), 0));
    }
    let content = |(r, col): (usize, usize)| col as i64 - r as i64;
    let mut diagonals: [BTreeMap<i64, Vec<usize>>; 2] = [BTreeMap::new(), BTreeMap::new()];
    for (a, b, label) in entries {
        let (lo, hi) = if content(a) < content(b) {
            (a, b)
        } else {
            (b, a)
        };
        let (j, even) = if content(lo).rem_euclid(2) == 0 {
            (0, lo)
        } else {
            (1, hi)
        };
        diagonals[j].entry(content(even)).or_default().push(label);
    }
    let to_quot = diagonal_map(lambda);
    let mut out: [Rows; 2] = [Vec::new(), Vec::new()];
    for j in 0..2 {
        let shape = if j == 0 { &quot.0 } else { &quot.1 };
        let mut rows: Rows = shape.parts().iter().map(|&p| vec![usize::MAX; p]).collect();
        let mut placed = 0;
        for (&e, labels) in diagonals[j].iter_mut() {
            labels.sort_unstable();
            let d = to_quot(j, e);
            let cells: Vec<(usize, usize)> = (0..shape.len())
                .filter_map(|r| {
                    let col = r as i64 + d;
                    (col >= 0 && (col as usize) < shape.part(r)).then_some((r, col as usize))
                })
                .collect();
            if cells.len() != labels.len() {
                return invalid(format!("diagonal {d} of quotient {j} does not fit"));
            }
            for ((r, col), &l) in cells.into_iter().zip(labels.iter()) {
                rows[r][col] = l;
            }
            placed += labels.len();
        }
        if placed != shape.size() || !(rows.is_empty() || is_semistandard(&rows)) {
            return invalid(format!("quotient {j} is not semistandard"));
        }
        out[j] = rows;
    }
    let [q0, q1] = out;
    Ok((q0, q1))
}

fn cells_at_most(rows: &Rows, e: usize) -> Partition {
    Partition::from_unsorted(
        rows.iter()
            .map(|r| r.iter().filter(|&&x| x <= e).count())
            .collect(),
    )
}

/// The inverse bijection: rebuilds the chain of shapes from the pair level
/// by level and tiles each strip.
pub fn pair_to_domino(lambda: &Partition, m0: usize, pair: &(Rows, Rows)) -> Result<DominoTableau> {
    let (core, quot) = checked_core(lambda, m0)?;
    let c = core.size();
    for (j, (rows, want)) in [(&pair.0, &quot.0), (&pair.1, &quot.1)]
        .into_iter()
        .enumerate()
    {
        if rows_shape(rows) != *want || !(rows.is_empty() || is_semistandard(rows)) {
            return invalid(format!(
                "component {j} is not a semistandard tableau of shape {want}"
            ));
        }
        let zeros = rows.iter().flatten().filter(|&&x| x == 0).count();
        let expected = if j == c { (m0 - c) / 2 } else { 0 };
        if zeros != expected {
            return invalid(format!(
                "component {j} has {zeros} zeros, expected {expected}"
            ));
        }
    }
    let top = pair
        .0
        .iter()
        .chain(&pair.1)
        .flatten()
        .copied()
        .max()
        .unwrap_or(0);
    let len = lambda.len();
    let mut prev = padded(&[m0], len.max(1));
    prev.truncate(len);
    if Partition::from_two_core_quotient(
        &core,
        &cells_at_most(&pair.0, 0),
        &cells_at_most(&pair.1, 0),
    )? != Partition::row(m0)
    {
        return invalid("zero entries do not match the removed row");
    }
    let mut dominoes = Vec::new();
    for e in 1..=top {
        let lam_e = Partition::from_two_core_quotient(
            &core,
            &cells_at_most(&pair.0, e),
            &cells_at_most(&pair.1, e),
        )?;
        if !lambda.contains(&lam_e) {
            return invalid("intermediate shape leaves λ");
        }
        let next = padded(lam_e.parts(), len);
        match domino_strip_tiling(&prev, &next, e) {
            Some(ds) => dominoes.extend(ds),
            None => return invalid(format!("level {e} is not a domino strip")),
        }
        prev = next;
    }
    let q = DominoTableau::new(lambda.clone(), m0, dominoes);
    if !q.is_valid() {
        return invalid("reconstructed tableau is not valid");
    }
    Ok(q)
}

/// The lexicographically maximal weight `μ` with a domino tableau of shape
/// `λ/(m)` and weight `(m, μ)`, together with that tableau.
pub fn lex_max_weight(lambda: &Partition, m: usize) -> Result<(Vec<usize>, DominoTableau)> {
    checked_core(lambda, m)?;
    let len = lambda.len();
    let lam = lambda.parts().to_vec();
    let mut start = padded(&[m], len.max(1));
    start.truncate(len);
    let mut reach: HashMap<Vec<usize>, bool> = HashMap::new();
    if !can_reach(&lam, &start, &mut reach) {
        return invalid(format!("{lambda}/({m}) has no domino tiling"));
    }
    let mut states: Vec<Vec<usize>> = vec![start.clone()];
    let mut parent: Vec<HashMap<Vec<usize>, Vec<usize>>> = Vec::new();
    let mut weight = Vec::new();
    while states.iter().any(|s| *s != lam) {
        let mut best = 0;
        let mut next: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
        for mu in &states {
            let room: usize = lam.iter().zip(mu).map(|(a, b)| a - b).sum();
            let mut size = room;
            while size >= 2.max(best) {
                let found: Vec<Vec<usize>> = domino_strip_extensions(&lam, mu, size)
                    .into_iter()
                    .filter(|nu| can_reach(&lam, nu, &mut reach))
                    .collect();
                if !found.is_empty() {
                    if size > best {
                        best = size;
                        next.clear();
                    }
                    for nu in found {
                        next.entry(nu).or_insert_with(|| mu.clone());
                    }
                    break;
                }
                size -= 2;
            }
        }
        weight.push(best / 2);
        states = next.keys().cloned().collect();
        states.sort();
        parent.push(next);
    }
    let mut chain = vec![lam.clone()];
    for level in parent.iter().rev() {
        let cur = chain.last().expect("chain is never empty");
        chain.push(level[cur].clone());
    }
    chain.reverse();
    let mut dominoes = Vec::new();
    for (i, w) in chain.windows(2).enumerate() {
        let ds = domino_strip_tiling(&w[0], &w[1], i + 1).expect("greedy steps are strips");
        dominoes.extend(ds);
    }
    Ok((weight, DominoTableau::new(lambda.clone(), m, dominoes)))
}

fn can_reach(lam: &[usize], mu: &[usize], memo: &mut HashMap<Vec<usize>, bool>) -> bool {
    if mu == lam {
        return true;
    }
    if let Some(&v) = memo.get(mu) {
        return v;
    }
    let room: usize = lam.iter().zip(mu).map(|(a, b)| a - b).sum();
    let mut ok = false;
    let mut size = 2;
    while size <= room && !ok {
        for nu in domino_strip_extensions(lam, mu, size) {
            if can_reach(lam, &nu, memo) {
                ok = true;
                break;
            }
        }
        size += 2;
    }
    memo.insert(mu.to_vec(), ok);
    ok
}

/// The worked example: `λ = (5,5,5,3,3)` with the 2-core in the corner.
pub fn worked_example() -> DominoTableau {
    let d = |a: (usize, usize), b: (usize, usize), l| Domino::new(a, b, l);
    DominoTableau::new(
        Partition::from_unsorted(vec![5, 5, 5, 3, 3]),
        1,
        vec![
            d((0, 1), (1, 1), 1),
            d((0, 2), (0, 3), 1),
            d((0, 4), (1, 4), 2),
            d((1, 0), (2, 0), 1),
            d((1, 2), (1, 3), 2),
            d((2, 1), (2, 2), 3),
            d((2, 3), (2, 4), 3),
            d((3, 0), (3, 1), 4),
            d((3, 2), (4, 2), 6),
            d((4, 0), (4, 1), 5),
        ],
    )
}
