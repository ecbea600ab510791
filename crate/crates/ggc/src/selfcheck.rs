//! Independent recomputations used by `--selfcheck`.

use unigg::symfunc::{partitions_of, Basis, SymFunc};
use unigg::tableaux::{
    count_domino, count_symplectic, enumerate_domino, enumerate_symplectic, trim,
};
use unigg::unitary::MultiPartition;
use unigg::{Error, LaurentPolyQ, Partition};

/// 2-core by always removing the lowest removable domino.
pub fn core(p: &Partition) -> Partition {
    let mut cur = p.clone();
    while let Some(next) = cur.rim_domino_removals().pop() {
        cur = next;
    }
    cur
}

/// For `k = 2` the coefficient of `s_γ` has sign `(-1)^{n(γ)}` and `γ` has
/// empty 2-core; otherwise the expansion must match the power-sum route.
pub fn plethysm(lambda: &Partition, k: usize, f: &SymFunc) -> bool {
    let p = SymFunc::schur(lambda.clone()).to_basis(Basis::Power);
    let mut scaled = SymFunc::zero(Basis::Power);
    for (nu, c) in p.terms() {
        scaled.add_term(nu.scale(k), c.clone());
    }
    if &scaled.to_basis(Basis::Schur) != f {
        return false;
    }
    k != 2
        || f.terms().all(|(g, c)| {
            let positive = c.as_int().is_some_and(|c| c > 0);
            positive == (g.n_stat() % 2 == 0) && g.two_core().is_empty()
        })
}

fn row(i: usize) -> SymFunc {
    SymFunc::schur(Partition::row(i))
}

/// Both sides of a Pieri-type identity in the Schur basis.
pub fn pieri(
    domino: bool,
    m0: usize,
    weight: &[usize],
    cap: impl Fn(usize) -> Result<(), Error>,
) -> Result<(SymFunc, SymFunc), Error> {
    let factor = if domino { 2 } else { 1 };
    let n = m0 + factor * weight.iter().sum::<usize>();
    cap(n)?;
    let mut product = row(m0);
    for &m in weight {
        let mut sum = SymFunc::zero(Basis::Schur);
        for i in 0..=factor * m {
            let sign = if domino && i % 2 == 1 { -1 } else { 1 };
            sum = sum.add(
                &row(i)
                    .mul(&row(factor * m - i))
                    .scale(&LaurentPolyQ::int(sign)),
            );
        }
        product = product.mul(&sum);
    }
    let mut tableaux = SymFunc::zero(Basis::Schur);
    for lam in partitions_of(n).iter() {
        let c = if domino {
            let sign = if lam.n_stat() % 2 == 0 { 1 } else { -1 };
            sign * count_domino(lam, m0, weight) as i64
        } else {
            count_symplectic(lam, m0, weight) as i64
        };
        tableaux.add_term(lam.clone(), LaurentPolyQ::int(c));
    }
    Ok((product, tableaux))
}

/// Battery tableaux counted one by one from explicit per-orbit enumerations.
pub fn battery(lambda: &MultiPartition, k: usize, nu: &Partition) -> u64 {
    if k + 2 * nu.size() != lambda.size() {
        return 0;
    }
    let len = nu.len();
    let mut per_orbit: Vec<Vec<(usize, Vec<usize>)>> = Vec::new();
    for (orbit, p) in lambda.entries() {
        let odd = orbit.size % 2 == 1;
        let scale = if odd { orbit.size } else { orbit.size / 2 };
        let mut items = Vec::new();
        for g in 0..=p.part(0) {
            let rest = p.size() - g;
            if odd && rest % 2 == 1 {
                continue;
            }
            for w in weak_compositions(if odd { rest / 2 } else { rest }, len) {
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
    let mut states: Vec<(usize, Vec<usize>)> = vec![(0, vec![0; len])];
    for items in &per_orbit {
        let mut next = Vec::new();
        for (kk, acc) in &states {
            for (dk, w) in items {
                let v: Vec<usize> = acc.iter().zip(w).map(|(a, b)| a + b).collect();
                if kk + dk <= k && v.iter().zip(nu.parts()).all(|(a, b)| a <= b) {
                    next.push((kk + dk, v));
                }
            }
        }
        states = next;
    }
    states
        .iter()
        .filter(|(kk, v)| *kk == k && v.as_slice() == nu.parts())
        .count() as u64
}

fn weak_compositions(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return if n == 0 { vec![vec![]] } else { vec![] };
    }
    (0..=n)
        .flat_map(|first| {
            weak_compositions(n - first, k - 1)
                .into_iter()
                .map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
        })
        .collect()
}
