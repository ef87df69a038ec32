mod common;

use edgering::depth::{depth_report, DepthOptions};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn graph6_round_trip(seed in any::<u64>(), d in 1usize..=70, p in 0.0f64..1.0) {
        let g = common::any_graph(&mut rng(seed), d, p);
        prop_assert_eq!(common::check_graph6(&g), Ok(()));
    }

    #[test]
    fn membership_certificates(seed in any::<u64>()) {
        let mut r = rng(seed);
        let d = r.gen_range(2..=6);
        let g = common::connected_graph(&mut r, d, 0.4);
        let s = if r.gen_bool(0.5) {
            common::semigroup_element(&mut r, &g, 5)
        } else {
            common::degree_vector(&mut r, d, 3)
        };
        prop_assert_eq!(common::check_membership(&g, &s), Ok(()));
    }

    #[test]
    fn delta_is_downward_closed(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = common::small_nonbipartite(&mut r, 9);
        let s = common::semigroup_element(&mut r, &g, 5);
        prop_assert_eq!(common::check_delta_closure(&g, &s), Ok(()));
    }

    #[test]
    fn euler_characteristic(seed in any::<u64>()) {
        let facets = common::random_facets(&mut rng(seed), 7);
        prop_assert_eq!(common::check_euler(&facets, 7), Ok(()));
    }

    #[test]
    fn cones_are_acyclic(seed in any::<u64>()) {
        let facets = common::random_facets(&mut rng(seed), 7);
        prop_assert_eq!(common::check_cone(&facets, 7), Ok(()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn pendant_edge_shifts_everything_by_one(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = common::small_nonbipartite(&mut r, 9);
        let at = r.gen_range(1..=g.d());
        let h = g.with_pendant(at).unwrap();
        let opts = DepthOptions::default();
        let (a, b) = (depth_report(&g, &opts).unwrap(), depth_report(&h, &opts).unwrap());
        prop_assert_eq!((a.r + 1, a.krull_dim + 1), (b.r, b.krull_dim));
        prop_assert_eq!(a.depth_lower + 1, b.depth_lower);
        prop_assert_eq!(a.depth_upper + 1, b.depth_upper);
        prop_assert_eq!(a.exact, b.exact);
    }
}
