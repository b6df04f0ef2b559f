use proptest::prelude::*;

use ghilb::groebner::{buchberger, enumerate_fan, lattice_ideal, Binomial, FanCone, GbBudget, TermOrder};
use ghilb::hilbert_scheme::{chart_semigroup, is_g_cluster, universal_family};
use ghilb::{CharGroup, GroupSpec};

fn cyclic() -> impl Strategy<Value = GroupSpec> {
    (2i64..=9, 2usize..=3).prop_flat_map(|(m, n)| {
        proptest::collection::vec(0..m, n).prop_filter_map("rejected", move |e| GroupSpec::cyclic(m, &e).ok())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn group_text_round_trip(spec in cyclic()) {
        prop_assert_eq!(GroupSpec::parse(&spec.to_text()).unwrap(), spec);
    }

    // The pairs x^u - x^{std(deg u)} over the minimal generators of a
    // coherent cluster generate I_M and reduce to its Gröbner basis.
    #[test]
    fn cluster_pairs_give_the_fan_basis(spec in cyclic()) {
        let chars = CharGroup::new(&spec);
        prop_assume!(chars.r() > 1);
        let im = lattice_ideal(chars.lattice()).unwrap();
        for cone in enumerate_fan(&im, Some(200)).unwrap() {
            let cl = is_g_cluster(&cone.ideal, &chars).unwrap();
            let order = TermOrder::new(cone.witness.clone()).unwrap();
            let pairs: Vec<Binomial> = cl
                .generator_pairs(&chars)
                .iter()
                .map(|p| Binomial::from_vector(p).oriented(&order))
                .collect();
            let gb = buchberger(&pairs, &order).unwrap();
            prop_assert_eq!(gb.elements(), cone.gb.elements());
        }
    }

    #[test]
    fn universal_family_relations_vanish(spec in cyclic()) {
        let chars = CharGroup::new(&spec);
        prop_assume!(chars.r() > 1);
        let im = lattice_ideal(chars.lattice()).unwrap();
        let fan = enumerate_fan(&im, Some(50)).unwrap();
        for cone in fan.iter().take(3) {
            let cl = is_g_cluster(&cone.ideal, &chars).unwrap();
            let chart = chart_semigroup(&cl, &chars, &cone.witness).unwrap();
            let family = universal_family(&chart, GbBudget::default()).unwrap();
            prop_assert!(family.relations_vanish());
        }
    }
}

#[test]
fn fan_cone_json_round_trip() {
    let chars = CharGroup::new(&GroupSpec::cyclic(5, &[1, 2, 2]).unwrap());
    let im = lattice_ideal(chars.lattice()).unwrap();
    let fan = enumerate_fan(&im, None).unwrap();
    assert!(!fan.is_empty());
    for cone in &fan {
        let text = serde_json::to_string(cone).unwrap();
        let back: FanCone = serde_json::from_str(&text).unwrap();
        assert_eq!(back.ideal, cone.ideal);
        assert_eq!(back.witness, cone.witness);
        assert_eq!(back.gb.elements(), cone.gb.elements());
    }
}
