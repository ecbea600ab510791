use unigg::ggvalues::{gg_value_closed, gg_value_via_green, ClassType, Group};
use unigg::symfunc::partitions_of;
use unigg::LaurentPolyQ;

#[test]
fn values_at_identity_have_degree_c_n_2() {
    for n in 1..=6 {
        let mu = unigg::Partition::from_unsorted(vec![1; n]);
        for group in [Group::GL, Group::U] {
            let v = gg_value_closed(n, &ClassType::Unipotent(mu.clone()), group).unwrap();
            assert_eq!(v.degree(), Some((n * (n + 1) / 2) as i64));
        }
    }
}

#[test]
fn green_sums_are_integral_polynomials() {
    for n in 1..=6 {
        for mu in partitions_of(n).iter() {
            for group in [Group::GL, Group::U] {
                let v = gg_value_via_green(n, mu, group).unwrap();
                assert!(v.is_integral() && v.is_polynomial());
                assert_ne!(v, LaurentPolyQ::zero());
            }
        }
    }
}

#[test]
fn non_unipotent_classes_vanish() {
    assert!(gg_value_closed(4, &ClassType::NonUnipotent, Group::U)
        .unwrap()
        .is_zero());
}
