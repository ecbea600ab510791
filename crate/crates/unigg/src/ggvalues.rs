//! Gelfand-Graev character values on unipotent classes, as Laurent
//! polynomials in `q`: closed product forms and Green-polynomial sums.

use crate::error::{invalid, Result};
use crate::partitions::Partition;
use crate::poly::{LaurentPolyQ, Rational};
use crate::symfunc::{green_polynomial, partitions_of};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Group {
    GL,
    U,
}

/// A conjugacy class: unipotent of Jordan type `μ`, or any other class.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ClassType {
    Unipotent(Partition),
    NonUnipotent,
}

fn sign(e: i64) -> LaurentPolyQ {
    LaurentPolyQ::int(if e.rem_euclid(2) == 0 { 1 } else { -1 })
}

/// `q^e - c`.
fn binomial(e: i64, c: i64) -> LaurentPolyQ {
    LaurentPolyQ::from_terms(&[(e, 1), (0, -c)])
}

/// Order of the maximal torus of type `ν`.
pub fn torus_order(nu: &Partition, group: Group) -> LaurentPolyQ {
    nu.parts().iter().fold(LaurentPolyQ::one(), |acc, &k| {
        let c = match group {
            Group::GL => 1,
            Group::U => {
                if k % 2 == 0 {
                    1
                } else {
                    -1
                }
            }
        };
        &acc * &binomial(k as i64, c)
    })
}

/// Closed forms: `(-1)^{n-ℓ} Π_{i≤ℓ} (q^i - 1)` for GL and
/// `(-1)^{⌊n/2⌋-ℓ} Π_{i≤ℓ} ((-q)^i - 1)` for U; zero off the unipotent classes.
pub fn gg_value_closed(n: usize, class: &ClassType, group: Group) -> Result<LaurentPolyQ> {
    let mu = match class {
        ClassType::NonUnipotent => return Ok(LaurentPolyQ::zero()),
        ClassType::Unipotent(mu) => mu,
    };
    if mu.size() != n {
        return invalid(format!("class {mu} is not a partition of {n}"));
    }
    let l = mu.len() as i64;
    let value = match group {
        Group::GL => (1..=l).fold(sign(n as i64 - l), |acc, i| &acc * &binomial(i, 1)),
        Group::U => (1..=l).fold(sign((n / 2) as i64 - l), |acc, i| {
            &acc * &binomial(i, 1).negate_var()
        }),
    };
    Ok(value)
}

/// The unitary value in the form `(-1)^{⌊n/2⌋+C(ℓ,2)} Π_{i≤ℓ} (q^i - (-1)^i)`.
pub fn gg_value_unitary_alternate(n: usize, mu: &Partition) -> Result<LaurentPolyQ> {
    if mu.size() != n {
        return invalid(format!("class {mu} is not a partition of {n}"));
    }
    let l = mu.len() as i64;
    let start = sign((n / 2) as i64 + l * (l - 1) / 2);
    Ok((1..=l).fold(start, |acc, i| {
        &acc * &binomial(i, if i % 2 == 0 { 1 } else { -1 })
    }))
}

/// Green-polynomial sums:
/// GL: `Σ_ν (-1)^{n-ℓ(ν)} z_ν^{-1} |T̃_ν| Q_ν^μ(q)`;
/// U: `Σ_ν (-1)^{n+⌊n/2⌋-ℓ(ν)} z_ν^{-1} |T_ν| Q_ν^μ(-q)`.
pub fn gg_value_via_green(n: usize, mu: &Partition, group: Group) -> Result<LaurentPolyQ> {
    if mu.size() != n {
        return invalid(format!("class {mu} is not a partition of {n}"));
    }
    let mut total = LaurentPolyQ::zero();
    for nu in partitions_of(n).iter() {
        let l = nu.len() as i64;
        let q = green_polynomial(nu, mu)?;
        let (s, q) = match group {
            Group::GL => (n as i64 - l, q),
            Group::U => ((n + n / 2) as i64 - l, q.negate_var()),
        };
        let weight = Rational::new(1.into(), nu.z_stat().into());
        let term = &(&sign(s) * &torus_order(nu, group)) * &q;
        total += &term.scale(&weight);
    }
    assert!(total.is_integral(), "non-integral character value {total}");
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::poly::rat;
    use num_traits::Signed;

    fn q(s: &LaurentPolyQ) -> String {
        s.to_string_in("q")
    }

    #[test]
    fn torus_orders() {
        assert_eq!(q(&torus_order(&part![1], Group::U)), "q+1");
        assert_eq!(q(&torus_order(&part![2], Group::U)), "q^2-1");
        assert_eq!(q(&torus_order(&part![2, 1], Group::GL)), "q^3-q^2-q+1");
    }

    #[test]
    fn closed_forms() {
        let u = |m| ClassType::Unipotent(m);
        assert_eq!(
            q(&gg_value_closed(1, &u(part![1]), Group::GL).unwrap()),
            "q-1"
        );
        assert_eq!(
            q(&gg_value_closed(2, &u(part![1, 1]), Group::U).unwrap()),
            "q^3+q^2-q-1"
        );
        assert!(gg_value_closed(3, &ClassType::NonUnipotent, Group::GL)
            .unwrap()
            .is_zero());
        assert!(gg_value_closed(3, &ClassType::NonUnipotent, Group::U)
            .unwrap()
            .is_zero());
        assert!(gg_value_closed(3, &u(part![1]), Group::U).is_err());
    }

    #[test]
    fn green_sums() {
        assert_eq!(
            q(&gg_value_via_green(1, &part![1], Group::GL).unwrap()),
            "q-1"
        );
        assert_eq!(
            q(&gg_value_via_green(2, &part![2], Group::GL).unwrap()),
            "-q+1"
        );
        assert_eq!(
            q(&gg_value_via_green(2, &part![1, 1], Group::U).unwrap()),
            "q^3+q^2-q-1"
        );
        assert_eq!(
            q(&gg_value_via_green(1, &part![1], Group::U).unwrap()),
            "q+1"
        );
    }

    #[test]
    fn top_degree_of_the_regular_class() {
        for n in 1..=6 {
            let v = gg_value_closed(
                n,
                &ClassType::Unipotent(Partition::from_unsorted(vec![1; n])),
                Group::GL,
            )
            .unwrap();
            assert_eq!(v.degree(), Some((n * (n + 1) / 2) as i64));
            assert!(v.leading_coeff().unwrap().abs() == rat(1));
        }
    }
}
