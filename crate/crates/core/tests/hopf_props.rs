use hopf_skein::hopf::{
    check_symmetries, homfly_decorated, homfly_general, homfly_positive, Decoration, DecorationTerm, HopfSpec,
};
use hopf_skein::ring::{parse_plain, SkeinScalar};

#[test]
fn positive_and_general_pipelines_agree() {
    for k1 in 0..=3 {
        for k2 in 0..=3 - k1 {
            for n in 0..=4 {
                assert_eq!(
                    homfly_general(HopfSpec::new(k1, k2, n, 0)),
                    homfly_positive(k1, k2, n),
                    "({k1},{k2};{n},0)"
                );
            }
        }
    }
}

#[test]
fn unlink_specialization() {
    let delta = SkeinScalar::delta();
    for n1 in 0..=6 {
        for n2 in 0..=6 - n1 {
            assert_eq!(homfly_general(HopfSpec::new(0, 0, n1, n2)), delta.pow((n1 + n2) as u32));
        }
    }
}

#[test]
fn one_encircling_string_around_nothing() {
    // a lone meridian is an extra unknot
    let delta = SkeinScalar::delta();
    for k1 in 0..=3 {
        for k2 in 0..=3 - k1 {
            assert_eq!(homfly_general(HopfSpec::new(k1, k2, 0, 0)), delta.pow((k1 + k2) as u32));
        }
    }
}

#[test]
fn observation_symmetries_on_grid() {
    for spec in HopfSpec::grid(2, 3) {
        let report = check_symmetries(spec);
        assert!(report.all_passed(), "{report:?}");
    }
}

#[test]
fn decorations_are_linear() {
    let two = SkeinScalar::from_int(2);
    let x = parse_plain("v^-1 - s^2").unwrap();
    let decoration = Decoration::new(vec![
        DecorationTerm {
            coeff: two.clone(),
            a: 1,
            b: 0,
        },
        DecorationTerm {
            coeff: x.clone(),
            a: 1,
            b: 1,
        },
        DecorationTerm {
            coeff: SkeinScalar::one(),
            a: 0,
            b: 2,
        },
    ])
    .unwrap();
    for (k1, k2) in [(0, 0), (1, 0), (1, 1), (0, 2)] {
        let want = &(&(&two * &homfly_general(HopfSpec::new(k1, k2, 1, 0)))
            + &(&x * &homfly_general(HopfSpec::new(k1, k2, 1, 1))))
            + &homfly_general(HopfSpec::new(k1, k2, 0, 2));
        assert_eq!(homfly_decorated(k1, k2, &decoration), want);
    }
}
