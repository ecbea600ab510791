//! Independent oracles shared by the integration tests.

#![allow(dead_code)]

use std::collections::BTreeSet;

use unigg::domino_quotient::Rows;
use unigg::symfunc::semistandard_tableaux;
use unigg::Partition;

/// All compositions of `n` (positive parts).
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Weak compositions of `n` into exactly `k` parts.
pub fn weak_compositions(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return if n == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=n {
        for mut rest in weak_compositions(n - first, k - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Semistandard tableaux of `shape` with `zeros` zeros and nonzero content `w`.
pub fn ssyt_with_zeros(shape: &Partition, zeros: usize, w: &[usize]) -> Vec<Rows> {
    let mut content = vec![zeros];
    content.extend_from_slice(w);
    semistandard_tableaux(shape, &content)
        .into_iter()
        .map(|t| {
            t.into_iter()
                .map(|r| r.into_iter().map(|x| x - 1).collect())
                .collect()
        })
        .collect()
}

/// All pairs of semistandard tableaux of shapes `(s0, s1)`, `zeros` zeros in
/// component `c`, and combined nonzero content `w`.
pub fn quotient_pairs(
    s0: &Partition,
    s1: &Partition,
    c: usize,
    zeros: usize,
    w: &[usize],
) -> BTreeSet<(Rows, Rows)> {
    let mut out = BTreeSet::new();
    let splits = w.iter().fold(vec![vec![]], |acc: Vec<Vec<usize>>, &wi| {
        acc.into_iter()
            .flat_map(|pre| {
                (0..=wi).map(move |a| {
                    let mut v = pre.clone();
                    v.push(a);
                    v
                })
            })
            .collect()
    });
    for a in splits {
        let b: Vec<usize> = w.iter().zip(&a).map(|(x, y)| x - y).collect();
        let (z0, z1) = if c == 0 { (zeros, 0) } else { (0, zeros) };
        if a.iter().sum::<usize>() + z0 != s0.size() {
            continue;
        }
        for t0 in ssyt_with_zeros(s0, z0, &a) {
            for t1 in ssyt_with_zeros(s1, z1, &b) {
                out.insert((t0.clone(), t1));
            }
        }
    }
    out
}

/// Partitions of size at most `n` whose 2-core is empty or `(1)`.
pub fn small_core_partitions(n: usize) -> Vec<Partition> {
    (0..=n)
        .flat_map(Partition::all)
        .filter(|l| l.two_core().size() <= 1)
        .collect()
}

/// Exhaustive count of battery tableaux: every removed row, every tableau
/// of every weight with entries at most `ℓ(ν)`, then every combination.
pub fn battery_bruteforce(
    lambda: &unigg::unitary::MultiPartition,
    k: usize,
    nu: &Partition,
) -> u64 {
    use unigg::tableaux::{enumerate_domino, enumerate_symplectic, trim};
    if k + 2 * nu.size() != lambda.size() {
        return 0;
    }
    let len = nu.len();
    let mut per_orbit: Vec<Vec<(usize, Vec<usize>)>> = Vec::new();
    for (orbit, p) in lambda.entries() {
        let mut items = Vec::new();
        for g in 0..=p.part(0) {
            let rest = p.size() - g;
            let odd = orbit.size % 2 == 1;
            if odd && rest % 2 == 1 {
                continue;
            }
            let boxes = if odd { rest / 2 } else { rest };
            for w in weak_compositions(boxes, len) {
                let weights: Vec<Vec<usize>> = if odd {
                    enumerate_domino(p, g, &trim(&w))
                        .iter()
                        .map(|t| t.weight())
                        .collect()
                } else {
                    enumerate_symplectic(p, g, &trim(&w))
                        .iter()
                        .map(|t| t.weight())
                        .collect()
                };
                let scale = if odd { orbit.size } else { orbit.size / 2 };
                for tw in weights {
                    let mut v = vec![0; len];
                    for (i, x) in tw.iter().enumerate() {
                        v[i] = x * scale;
                    }
                    items.push((orbit.size * g, v));
                }
            }
        }
        per_orbit.push(items);
    }
    fn rec(
        idx: usize,
        per_orbit: &[Vec<(usize, Vec<usize>)>],
        k: usize,
        acc: &mut Vec<usize>,
        nu: &[usize],
    ) -> u64 {
        if idx == per_orbit.len() {
            return u64::from(k == 0 && acc.as_slice() == nu);
        }
        let mut total = 0;
        for (kk, w) in &per_orbit[idx] {
            if *kk > k {
                continue;
            }
            for (a, x) in acc.iter_mut().zip(w) {
                *a += x;
            }
            if acc.iter().zip(nu).all(|(a, b)| a <= b) {
                total += rec(idx + 1, per_orbit, k - kk, acc, nu);
            }
            for (a, x) in acc.iter_mut().zip(w) {
                *a -= x;
            }
        }
        total
    }
    let mut acc = vec![0; len];
    rec(0, &per_orbit, k, &mut acc, nu.parts())
}

/// Coefficient of `x^μ` in `p_ν`, by assigning each part of `ν` to a row.
pub fn monomial_coefficient_of_power(nu: &Partition, mu: &Partition) -> u64 {
    fn rec(parts: &[usize], left: &mut Vec<usize>) -> u64 {
        let Some((&p, rest)) = parts.split_first() else {
            return u64::from(left.iter().all(|&x| x == 0));
        };
        let mut total = 0;
        for j in 0..left.len() {
            if left[j] >= p {
                left[j] -= p;
                total += rec(rest, left);
                left[j] += p;
            }
        }
        total
    }
    rec(nu.parts(), &mut mu.parts().to_vec())
}

/// Sub-multisets of the orbit-size profile `{1, 1, 2, 3}`.
pub fn sub_profiles() -> Vec<Vec<usize>> {
    vec![
        vec![1],
        vec![2],
        vec![3],
        vec![1, 1],
        vec![1, 2],
        vec![1, 3],
        vec![2, 3],
        vec![1, 1, 2],
        vec![1, 1, 3],
        vec![1, 2, 3],
        vec![1, 1, 2, 3],
    ]
}
