use proptest::prelude::*;

use tcover_core::instances::{add_isolated, gnp};
use tcover_core::{
    approx_total_cover, greedy_maximal_matching, is_total_cover, maximum_matching, parse_graph,
    serialize_graph, verify_matching, Graph, VerifyMode,
};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n, 0.0..=1.0f64, any::<u64>(), 0..3usize)
        .prop_map(|(n, p, seed, t)| add_isolated(&gnp(n, p, seed).unwrap(), t))
}

proptest! {
    #[test]
    fn approximation_certificate_holds(g in arb_graph(40)) {
        let r = approx_total_cover(&g);
        prop_assert!(is_total_cover(&g, &r.cover));
        prop_assert_eq!(r.size(), r.m + r.k + r.t);
        prop_assert!(r.size() <= 2 * r.lower_bound);
        prop_assert_eq!(r.t, g.isolated_vertices().len());
        prop_assert_eq!(r.trace.len(), r.size());
    }

    #[test]
    fn blossom_output_is_maximum(g in arb_graph(14)) {
        let m = maximum_matching(&g);
        prop_assert_eq!(verify_matching(&g, &m, VerifyMode::Maximum), Ok(true));
        prop_assert!(2 * greedy_maximal_matching(&g).size() >= m.size());
    }

    #[test]
    fn graph_text_round_trip(g in arb_graph(30)) {
        prop_assert_eq!(parse_graph(&serialize_graph(&g)).unwrap(), g);
    }

    #[test]
    fn deterministic_outputs(n in 0..30usize, p in 0.0..=1.0f64, seed in any::<u64>()) {
        let a = gnp(n, p, seed).unwrap();
        let b = gnp(n, p, seed).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(maximum_matching(&a), maximum_matching(&b));
        prop_assert_eq!(approx_total_cover(&a), approx_total_cover(&b));
    }

    #[test]
    fn factor_two_is_algebraic(m in 0..1000usize, k_frac in 0.0..=1.0f64, t in 0..100usize) {
        let k = (m as f64 * k_frac) as usize;
        prop_assert!(m + k + t <= 2 * tcover_core::lemma1_lower_bound(m, k, t));
    }
}
