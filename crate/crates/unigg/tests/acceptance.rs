//! The acceptance suite: one PASS/FAIL line per criterion.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::{
    battery_bruteforce, compositions, monomial_coefficient_of_power, quotient_pairs,
    small_core_partitions, sub_profiles,
};
use unigg::domino_quotient::{domino_to_pair, lex_max_weight, pair_to_domino, worked_example};
use unigg::ggvalues::{
    gg_value_closed, gg_value_unitary_alternate, gg_value_via_green, ClassType, Group,
};
use unigg::poly::{rat, Rational};
use unigg::symfunc::{
    character_table, green_polynomial, kostka_foulkes, kostka_number, partitions_of, Basis, SymFunc,
};
use unigg::tableaux::{count_domino, count_symplectic, enumerate_domino, has_domino_tiling};
use unigg::unitary::{
    all_multipartitions, appears_in_some_dgg, battery_count, bigmult_construction, dgg_base_case,
    dgg_indices, has_even_orbit_obstruction, induced_coeffs, multiplicity_one_witness,
    ohmori_construction, InducedInput, MultiPartition,
};
use unigg::{part, LaurentPolyQ, Partition};

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn gl_identity() -> Outcome {
    for n in 1..=6 {
        for mu in partitions_of(n).iter() {
            let sum = gg_value_via_green(n, mu, Group::GL).map_err(|e| e.to_string())?;
            let closed = gg_value_closed(n, &ClassType::Unipotent(mu.clone()), Group::GL)
                .map_err(|e| e.to_string())?;
            ensure(sum == closed, || format!("μ = {mu}: {sum} vs {closed}"))?;
        }
    }
    Ok(())
}

fn unitary_identity() -> Outcome {
    for n in 1..=6 {
        for mu in partitions_of(n).iter() {
            let sum = gg_value_via_green(n, mu, Group::U).map_err(|e| e.to_string())?;
            let closed = gg_value_closed(n, &ClassType::Unipotent(mu.clone()), Group::U)
                .map_err(|e| e.to_string())?;
            let alt = gg_value_unitary_alternate(n, mu).map_err(|e| e.to_string())?;
            ensure(sum == closed, || format!("μ = {mu}: {sum} vs {closed}"))?;
            ensure(alt == closed, || {
                format!("alternate form at μ = {mu}: {alt} vs {closed}")
            })?;
        }
    }
    Ok(())
}

fn row(i: usize) -> SymFunc {
    SymFunc::schur(Partition::row(i))
}

fn pieri_sum(m: usize, signed: bool) -> SymFunc {
    let mut acc = SymFunc::zero(Basis::Schur);
    for i in 0..=m {
        let term = row(i).mul(&row(m - i));
        let c = if signed && i % 2 == 1 { -1 } else { 1 };
        acc = acc.add(&term.scale(&LaurentPolyQ::int(c)));
    }
    acc
}

fn weight_tuples(budget: usize, len: usize, step: usize) -> Vec<Vec<usize>> {
    if len == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 0..=budget / step {
        for mut rest in weight_tuples(budget - first * step, len - 1, step) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn coefficient(f: &SymFunc, lambda: &Partition) -> i64 {
    f.coeff(lambda).as_int().expect("integer coefficient")
}

fn pieri() -> Outcome {
    for len in 0..=3 {
        // (a): total m0 + Σ m_r ≤ 8.
        for m0 in 0..=8 {
            for w in weight_tuples(8 - m0, len, 1) {
                let product = w
                    .iter()
                    .fold(row(m0), |acc, &m| acc.mul(&pieri_sum(m, false)));
                let n = m0 + w.iter().sum::<usize>();
                for lam in partitions_of(n).iter() {
                    let lhs = coefficient(&product, lam);
                    let rhs = count_symplectic(lam, m0, &w) as i64;
                    ensure(lhs == rhs, || {
                        format!("(a) {lam} m0={m0} w={w:?}: {lhs} vs {rhs}")
                    })?;
                }
            }
        }
        // (b): total m0 + 2 Σ m_r ≤ 8.
        for m0 in 0..=8 {
            for w in weight_tuples(8 - m0, len, 2) {
                let product = w
                    .iter()
                    .fold(row(m0), |acc, &m| acc.mul(&pieri_sum(2 * m, true)));
                let n = m0 + 2 * w.iter().sum::<usize>();
                for lam in partitions_of(n).iter() {
                    let lhs = coefficient(&product, lam);
                    let sign = if lam.n_stat() % 2 == 0 { 1 } else { -1 };
                    let rhs = sign * count_domino(lam, m0, &w) as i64;
                    ensure(lhs == rhs, || {
                        format!("(b) {lam} m0={m0} w={w:?}: {lhs} vs {rhs}")
                    })?;
                }
            }
        }
    }
    Ok(())
}

fn domino_bijection() -> Outcome {
    for lam in small_core_partitions(10) {
        let (core, (q0, q1)) = lam.two_core_quotient();
        let c = core.size();
        for m0 in (c..=lam.part(0)).step_by(2) {
            let zeros = (m0 - c) / 2;
            for w in compositions((lam.size() - m0) / 2) {
                let tableaux = enumerate_domino(&lam, m0, &w);
                let mut image = BTreeSet::new();
                for q in &tableaux {
                    let pair = domino_to_pair(q).map_err(|e| e.to_string())?;
                    let back = pair_to_domino(&lam, m0, &pair).map_err(|e| e.to_string())?;
                    ensure(&back == q, || format!("roundtrip fails on {lam}/({m0})"))?;
                    image.insert(pair);
                }
                ensure(image.len() == tableaux.len(), || {
                    format!("not injective on {lam}/({m0})")
                })?;
                let pairs = quotient_pairs(&q0, &q1, c, zeros, &w);
                ensure(image == pairs, || {
                    format!("image differs on {lam}/({m0}) weight {w:?}")
                })?;
                for pair in &pairs {
                    let q = pair_to_domino(&lam, m0, pair).map_err(|e| e.to_string())?;
                    ensure(q.weight() == w, || {
                        format!("weight changes on {lam}/({m0})")
                    })?;
                }
            }
        }
    }
    let (p0, p1) = domino_to_pair(&worked_example()).map_err(|e| e.to_string())?;
    ensure(p0 == vec![vec![1, 1, 1], vec![5, 6]], || {
        format!("Q0 = {p0:?}")
    })?;
    ensure(p1 == vec![vec![2, 2], vec![3, 3], vec![4]], || {
        format!("Q1 = {p1:?}")
    })
}

fn lex_greater(a: &[usize], b: &[usize]) -> bool {
    for i in 0..a.len().max(b.len()) {
        let (x, y) = (
            a.get(i).copied().unwrap_or(0),
            b.get(i).copied().unwrap_or(0),
        );
        if x != y {
            return x > y;
        }
    }
    false
}

fn lex_max() -> Outcome {
    for lam in small_core_partitions(10) {
        let c = lam.two_core().size();
        for m in (c..=lam.part(0)).step_by(2) {
            if !has_domino_tiling(&lam, m).map_err(|e| e.to_string())? {
                continue;
            }
            let (mu, _) = lex_max_weight(&lam, m).map_err(|e| e.to_string())?;
            ensure(count_domino(&lam, m, &mu) == 1, || {
                format!("{lam}/({m}) at {mu:?}")
            })?;
            for w in compositions((lam.size() - m) / 2) {
                if lex_greater(&w, &mu) {
                    ensure(count_domino(&lam, m, &w) == 0, || {
                        format!("{lam}/({m}) at {w:?}")
                    })?;
                }
            }
        }
    }
    Ok(())
}

fn battery_anchor() -> Outcome {
    let lambda = MultiPartition::positional(&[
        (1, part![2, 2, 1]),
        (2, part![3, 1, 1]),
        (3, part![2, 1, 1]),
    ])
    .map_err(|e| e.to_string())?;
    let (k, nu, predicted) = bigmult_construction(&lambda).map_err(|e| e.to_string())?;
    ensure(k == 1 && nu == part![9, 4], || {
        format!("constructed ({k}, {nu})")
    })?;
    let count = battery_count(&lambda, k, &nu);
    ensure(count == 6 && predicted == 6, || {
        format!("count {count}, predicted {predicted}")
    })
}

fn oracle_equivalence() -> Outcome {
    for profile in sub_profiles() {
        for n in 1..=6 {
            for lambda in all_multipartitions(&profile, n) {
                for (k, nu) in dgg_indices(n) {
                    let fast = battery_count(&lambda, k, &nu);
                    let slow = battery_bruteforce(&lambda, k, &nu);
                    ensure(fast == slow, || {
                        format!("{lambda} at ({k}, {nu}): {fast} vs {slow}")
                    })?;
                }
            }
        }
    }
    Ok(())
}

fn gelfand_graev_indicator() -> Outcome {
    for n in 1..=6 {
        for lambda in all_multipartitions(&[1, 1, 2, 3], n) {
            let count = battery_count(&lambda, n, &Partition::empty());
            let want = u64::from(lambda.height() == 1);
            ensure(count == want, || format!("{lambda}: {count}"))?;
        }
    }
    Ok(())
}

fn base_case() -> Outcome {
    let profile = [1, 2, 3];
    for n in 1..=5 {
        let table = dgg_base_case(n, &profile).map_err(|e| e.to_string())?;
        for lambda in all_multipartitions(&profile, 2 * n) {
            let mut predicted = 1i64;
            for (o, p) in lambda.entries() {
                let m = p.size();
                let odd = o.size % 2 == 1;
                let f = pieri_sum(m, odd);
                let sign = if odd && p.n_stat() % 2 == 1 { -1 } else { 1 };
                predicted *= sign * coefficient(&f, p);
            }
            let got = table.get(&lambda).copied().unwrap_or(0) as i64;
            ensure(got == predicted, || {
                format!("n={n} {lambda}: {got} vs {predicted}")
            })?;
            ensure(got == 0 || lambda.height() <= 2, || {
                format!("height of {lambda}")
            })?;
        }
    }
    Ok(())
}

fn induced_inputs(budget: usize) -> Vec<InducedInput> {
    let mut out = Vec::new();
    for s in 1..=budget {
        for lambda in partitions_of(s).iter() {
            for size in [1, 3] {
                out.push(InducedInput::Fixed {
                    size,
                    lambda: lambda.clone(),
                });
            }
        }
        for a in 0..=s {
            for alpha in partitions_of(a).iter() {
                for beta in partitions_of(s - a).iter() {
                    for size in [1, 2] {
                        out.push(InducedInput::Paired {
                            size,
                            alpha: alpha.clone(),
                            beta: beta.clone(),
                        });
                    }
                }
            }
        }
    }
    out
}

fn input_size(i: &InducedInput) -> usize {
    match i {
        InducedInput::Fixed { lambda, .. } => lambda.size(),
        InducedInput::Paired { alpha, beta, .. } => alpha.size() + beta.size(),
    }
}

fn check_induced(inputs: &[InducedInput]) -> Outcome {
    let coeffs = induced_coeffs(inputs).map_err(|e| e.to_string())?;
    ensure(!coeffs.is_empty(), || {
        format!("empty induction for {inputs:?}")
    })?;
    for (gamma, c) in &coeffs {
        ensure(*c > 0, || format!("{inputs:?} gives {c} at {gamma}"))?;
        ensure(gamma.entries().len() == inputs.len(), || {
            format!("support {gamma} for {inputs:?}")
        })?;
        for ((orbit, g), input) in gamma.entries().iter().zip(inputs) {
            let (size, boxes, fixed) = match input {
                InducedInput::Fixed { size, lambda } => (*size, 2 * lambda.size(), true),
                InducedInput::Paired { size, alpha, beta } => {
                    (2 * size, alpha.size() + beta.size(), false)
                }
            };
            ensure(orbit.size == size && g.size() == boxes, || {
                format!("support {gamma} for {inputs:?}")
            })?;
            ensure(!fixed || g.two_core().is_empty(), || {
                format!("core of {g} for {inputs:?}")
            })?;
        }
    }
    Ok(())
}

fn sign_law() -> Outcome {
    let singles = induced_inputs(5);
    for a in &singles {
        check_induced(std::slice::from_ref(a))?;
        for b in &singles {
            if input_size(a) + input_size(b) <= 5 {
                check_induced(&[a.clone(), b.clone()])?;
            }
        }
    }
    Ok(())
}

fn multiplicity_suite() -> Outcome {
    let profile = [1, 1, 2, 3];
    for n in 1..=6 {
        for lambda in all_multipartitions(&profile, n) {
            let appears = dgg_indices(n)
                .iter()
                .any(|(k, nu)| battery_count(&lambda, *k, nu) > 0);
            ensure(appears == appears_in_some_dgg(&lambda), || {
                format!("predicate fails on {lambda}")
            })?;
        }
    }
    for n in 1..=8 {
        for lambda in all_multipartitions(&profile, n) {
            if let Some((k, nu)) = multiplicity_one_witness(&lambda) {
                let c = battery_count(&lambda, k, &nu);
                ensure(c == 1, || {
                    format!("witness ({k}, {nu}) for {lambda} gives {c}")
                })?;
            }
            if let Some((k, nu)) = ohmori_construction(&lambda) {
                let c = battery_count(&lambda, k, &nu);
                ensure(c == 1, || {
                    format!("construction ({k}, {nu}) for {lambda} gives {c}")
                })?;
            }
            if has_even_orbit_obstruction(&lambda) {
                for (k, nu) in dgg_indices(n) {
                    let c = battery_count(&lambda, k, &nu);
                    ensure(c != 1, || {
                        format!("{lambda} has multiplicity one at ({k}, {nu})")
                    })?;
                }
            }
        }
    }
    Ok(())
}

fn symfunc_golden() -> Outcome {
    for n in 1..=7 {
        let parts = partitions_of(n);
        let table = character_table(n);
        for (a, row_a) in table.iter().enumerate() {
            for (b, row_b) in table.iter().enumerate() {
                let mut total = rat(0);
                for (j, nu) in parts.iter().enumerate() {
                    let num = (row_a[j] * row_b[j]).into();
                    total += Rational::new(num, nu.z_stat().into());
                }
                let want = rat(i64::from(a == b));
                ensure(total == want, || {
                    format!("orthogonality at n={n} ({a}, {b})")
                })?;
            }
        }
        for lam in parts.iter() {
            for mu in parts.iter() {
                let k = kostka_foulkes(lam, mu).map_err(|e| e.to_string())?;
                if lam == mu {
                    ensure(k == LaurentPolyQ::one(), || format!("K_{lam},{lam} = {k}"))?;
                } else if !lam.dominates(mu) {
                    ensure(k.is_zero(), || format!("K_{lam},{mu} = {k}"))?;
                }
                let nonneg = k.terms().all(|(_, c)| *c >= rat(0));
                ensure(nonneg && k.is_polynomial(), || {
                    format!("K_{lam},{mu} = {k}")
                })?;
                let at_one = k.eval(&rat(1));
                let ssyt = kostka_number(lam, mu.parts());
                ensure(at_one == rat(ssyt as i64), || {
                    format!("K_{lam},{mu}(1) vs {ssyt}")
                })?;
            }
        }
    }
    for n in 1..=6 {
        for nu in partitions_of(n).iter() {
            for mu in partitions_of(n).iter() {
                let q = green_polynomial(nu, mu).map_err(|e| e.to_string())?;
                let at_one = q.eval(&rat(1));
                let want = monomial_coefficient_of_power(nu, mu);
                ensure(at_one == rat(want as i64), || {
                    format!("Q_{nu}^{mu}(1) vs {want}")
                })?;
            }
        }
    }
    Ok(())
}

/// Written straight to the stderr handle so the lines survive output capture.
fn report(line: String) {
    use std::io::Write;
    let _ = writeln!(std::io::stderr(), "{line}");
}

#[test]
fn acceptance() {
    let criteria: Vec<(&str, fn() -> Outcome, Option<Duration>)> = vec![
        (
            "GL Gelfand-Graev identity, n <= 6",
            gl_identity,
            Some(Duration::from_secs(60)),
        ),
        (
            "unitary Gelfand-Graev identity and alternate form, n <= 6",
            unitary_identity,
            None,
        ),
        (
            "Pieri identities (a) and (b), length <= 3, total <= 8",
            pieri,
            None,
        ),
        (
            "domino bijection up to 10 boxes and worked example",
            domino_bijection,
            None,
        ),
        (
            "lex-max weight unique and maximal up to 10 boxes",
            lex_max,
            None,
        ),
        (
            "battery count anchor (k, nu) = (1, (9,4)) with count 6",
            battery_anchor,
            None,
        ),
        (
            "battery count equals exhaustive enumeration, size <= 6",
            oracle_equivalence,
            Some(Duration::from_secs(300)),
        ),
        (
            "Gelfand-Graev multiplicities are the height-one indicator",
            gelfand_graev_indicator,
            None,
        ),
        ("induced Gelfand-Graev base case, n <= 5", base_case, None),
        (
            "induced coefficient sign law, total size <= 5",
            sign_law,
            None,
        ),
        (
            "appearance, multiplicity-one and obstruction checks",
            multiplicity_suite,
            None,
        ),
        ("symmetric function golden checks", symfunc_golden, None),
    ];
    let mut failures = Vec::new();
    for (i, (name, run, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|_| Err("panicked".to_string()))
            .and_then(|()| match limit {
                Some(l) if start.elapsed() > l => Err(format!("took longer than {l:?}")),
                _ => Ok(()),
            });
        let elapsed = start.elapsed();
        match outcome {
            Ok(()) => report(format!("criterion {}: PASS {name} ({elapsed:.2?})", i + 1)),
            Err(e) => {
                report(format!(
                    "criterion {}: FAIL {name} ({elapsed:.2?}): {e}",
                    i + 1
                ));
                failures.push(i + 1);
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
