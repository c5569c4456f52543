use ewtableaux::bijections::{ew_to_le, le_to_ew, le_to_tree, tree_to_le};
use ewtableaux::sandpile::{config_of, is_recurrent, stabilize};
use ewtableaux::{
    convert, desexc, desexc_inverse, from_json, parse, phi_le, phi_le_inverse, psi, psi_inverse,
    serialize, to_json, Family, FerrersGraph, Permutation, Route, SandpileConfig,
};
use proptest::prelude::*;

fn perms(max: usize) -> impl Strategy<Value = Permutation> {
    (1..=max)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

proptest! {
    #[test]
    fn reading_inverts(p in perms(12)) {
        for family in [Family::Ew, Family::New] {
            let t = psi_inverse(&p, family).unwrap();
            prop_assert_eq!(psi(&t).unwrap(), p.clone());
        }
    }

    #[test]
    fn pipes_invert(p in perms(12)) {
        prop_assert_eq!(phi_le(&phi_le_inverse(&p).unwrap()).unwrap(), p);
    }

    #[test]
    fn desexc_is_a_bijection(p in perms(12)) {
        prop_assert_eq!(desexc_inverse(&desexc(&p)), p.clone());
        prop_assert_eq!(desexc(&desexc_inverse(&p)), p);
    }

    #[test]
    fn le_round_trips(p in perms(9)) {
        let e = psi_inverse(&p, Family::Ew).unwrap();
        let l = ew_to_le(&e).unwrap();
        prop_assert_eq!(le_to_ew(&l).unwrap().0, e);
        prop_assert_eq!(le_to_tree(&l).and_then(|t| tree_to_le(&t)).unwrap(), l);
    }

    #[test]
    fn conversions_round_trip(p in perms(8)) {
        let e = psi_inverse(&p, Family::Ew).unwrap();
        for to in [Family::New, Family::Le, Family::Tree] {
            let there = convert(&e, to, Route::Composed).unwrap();
            prop_assert_eq!(convert(&there, Family::Ew, Route::Composed).unwrap(), e.clone());
        }
    }

    #[test]
    fn text_and_json_round_trip(p in perms(10)) {
        let t = phi_le_inverse(&p).unwrap();
        prop_assert_eq!(parse(&serialize(&t)).unwrap(), t.clone());
        prop_assert_eq!(from_json(&to_json(&t)).unwrap(), t);
    }

    #[test]
    fn ew_configurations_are_recurrent(p in perms(9)) {
        let e = psi_inverse(&p, Family::Ew).unwrap();
        let g = FerrersGraph::new(e.shape()).unwrap();
        let c = config_of(&e).unwrap();
        prop_assert!(c.is_stable(&g));
        prop_assert!(is_recurrent(&g, &c).unwrap());
    }

    #[test]
    fn config_text_round_trips(grains in prop::collection::vec(0u64..5, 1..8)) {
        let c = SandpileConfig::new(grains.clone());
        prop_assert_eq!(SandpileConfig::parse(&c.to_string(), grains.len()).unwrap(), c);
    }

    #[test]
    fn stabilization_is_stable(grains in prop::collection::vec(0u64..8, 3)) {
        let g = FerrersGraph::new(&"2 2".parse().unwrap()).unwrap();
        let s = stabilize(&g, &SandpileConfig::new(grains)).unwrap();
        prop_assert!(s.config.is_stable(&g));
    }
}
