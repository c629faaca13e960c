use hopf_skein::hopf::HopfSpec;
use hopf_skein::oracle::{
    build_diagram, canonical_key, from_braid, homfly_of_diagram, mirror_diagram, reverse_orientation, Oracle,
    PdCrossing, PlanarDiagram,
};
use hopf_skein::ring::{render_json, SkeinScalar};
use proptest::prelude::*;

fn eval(d: &PlanarDiagram) -> SkeinScalar {
    homfly_of_diagram(d).unwrap()
}

fn word(strands: usize, len: usize) -> impl Strategy<Value = Vec<i32>> {
    let g = strands as i32 - 1;
    prop::collection::vec((1..=g, any::<bool>()), 0..=len)
        .prop_map(|w| w.into_iter().map(|(i, pos)| if pos { i } else { -i }).collect())
}

/// Relabels arcs by `f` and reverses the crossing list.
fn relabel(d: &PlanarDiagram, f: impl Fn(u32) -> u32) -> PlanarDiagram {
    let crossings = d
        .crossings()
        .iter()
        .rev()
        .map(|c| PdCrossing {
            id: c.id + 100,
            sign: c.sign,
            ends: c.ends.map(&f),
        })
        .collect();
    PlanarDiagram::new(crossings, d.loops()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn reidemeister_two(w in word(3, 5), at in 0usize..6, i in 1i32..=2, pos in any::<bool>()) {
        let at = at.min(w.len());
        let g = if pos { i } else { -i };
        let mut moved = w.clone();
        moved.splice(at..at, [g, -g]);
        prop_assert_eq!(eval(&from_braid(3, &moved)), eval(&from_braid(3, &w)));
    }

    #[test]
    fn reidemeister_three(prefix in word(3, 3), suffix in word(3, 3), flip in any::<bool>()) {
        let (a, b) = if flip { ([1, 2, 1], [2, 1, 2]) } else { ([-1, -2, -1], [-2, -1, -2]) };
        let lhs: Vec<i32> = prefix.iter().chain(&a).chain(&suffix).copied().collect();
        let rhs: Vec<i32> = prefix.iter().chain(&b).chain(&suffix).copied().collect();
        prop_assert_eq!(eval(&from_braid(3, &lhs)), eval(&from_braid(3, &rhs)));
    }

    #[test]
    fn conjugation_and_far_commutation(w in word(4, 5), g in prop::sample::select(vec![1, -1, 2, -2, 3, -3])) {
        let mut conj = vec![g];
        conj.extend(&w);
        conj.push(-g);
        prop_assert_eq!(eval(&from_braid(4, &conj)), eval(&from_braid(4, &w)));
        let mut far = w.clone();
        far.extend([1, 3]);
        let mut swapped = w.clone();
        swapped.extend([3, 1]);
        prop_assert_eq!(eval(&from_braid(4, &far)), eval(&from_braid(4, &swapped)));
    }

    #[test]
    fn stabilization_multiplies_by_curl_factor(w in word(3, 5), positive in any::<bool>()) {
        let mut stab = w.clone();
        stab.push(if positive { 3 } else { -3 });
        let factor = SkeinScalar::v_pow(if positive { -1 } else { 1 });
        prop_assert_eq!(eval(&from_braid(4, &stab)), &factor * &eval(&from_braid(3, &w)));
    }

    #[test]
    fn mirror_reflects_values(w in word(3, 6)) {
        let d = from_braid(3, &w);
        prop_assert_eq!(eval(&mirror_diagram(&d)), eval(&d).mirror());
        let inverse: Vec<i32> = w.iter().map(|g| -g).collect();
        prop_assert_eq!(eval(&from_braid(3, &inverse)), eval(&d).mirror());
    }

    #[test]
    fn keys_are_relabeling_invariant(w in word(3, 6), shift in 1u32..50) {
        let d = from_braid(3, &w);
        let r = relabel(&d, |a| a * 3 + shift);
        prop_assert_eq!(canonical_key(&d), canonical_key(&r));
        prop_assert_eq!(eval(&d), eval(&r));
    }
}

#[test]
fn curls_on_the_unknot() {
    let delta = SkeinScalar::delta();
    let one_pos = from_braid(2, &[1]);
    assert_eq!(eval(&one_pos), &SkeinScalar::v_pow(-1) * &delta);
    let two_neg = from_braid(3, &[-1, -2]);
    assert_eq!(eval(&two_neg), &SkeinScalar::v_pow(2) * &delta);
    let mixed = from_braid(3, &[1, -2]);
    assert_eq!(eval(&mixed), delta);
}

#[test]
fn trefoil_skein_relation() {
    // P(σ1^3) - P(σ1) = z P(σ1^2) with the crossing changed at one position
    let z = SkeinScalar::z();
    let lhs = &eval(&from_braid(2, &[1, 1, 1])) - &eval(&from_braid(2, &[1, -1, 1]));
    assert_eq!(lhs, &z * &eval(&from_braid(2, &[1, 1])));
}

#[test]
fn family_mirror_and_reversal() {
    let oracle = Oracle::default();
    for spec in HopfSpec::grid(2, 3) {
        let d = build_diagram(spec);
        let value = oracle.evaluate(&d).unwrap();
        assert_eq!(oracle.evaluate(&mirror_diagram(&d)).unwrap(), value.mirror(), "{spec}");
        assert_eq!(oracle.evaluate(&reverse_orientation(&d)).unwrap(), value, "{spec}");
    }
}

#[test]
fn results_do_not_depend_on_memo_or_threads() {
    let shared = Oracle::default();
    let specs = [
        HopfSpec::new(1, 1, 2, 1),
        HopfSpec::new(2, 0, 1, 2),
        HopfSpec::new(0, 2, 3, 0),
    ];
    for spec in specs {
        let d = build_diagram(spec);
        let fresh = Oracle::default().with_parallel(false).evaluate(&d).unwrap();
        let warm = shared.evaluate(&d).unwrap();
        let again = shared.evaluate(&d).unwrap();
        let relabeled = shared.evaluate(&relabel(&d, |a| 1000 - a)).unwrap();
        for other in [&warm, &again, &relabeled] {
            assert_eq!(render_json(other), render_json(&fresh), "{spec}");
        }
    }
    assert!(shared.memo_len() > 0);
}
