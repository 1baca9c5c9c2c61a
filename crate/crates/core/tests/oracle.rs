mod common;

use common::{
    brute_force_chromatic, brute_force_eta, brute_force_partitions, predictions_match_some_optimal,
    random_with_predictions,
};
use ocl_core::generators::{attach_predictions, gen_kk_blocks, gen_random, PredictionModel};
use ocl_core::graph::{Graph, OnlineInstance};
use ocl_core::oracle::{OptimalPartition, Oracle, OracleLimits};
use ocl_core::{run, FirstFit};
use proptest::prelude::*;

fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::new(10, outer.chain(spokes).chain(inner)).unwrap()
}

#[test]
fn petersen_is_three_chromatic() {
    let g = petersen();
    let oracle = Oracle::default();
    assert_eq!(oracle.chromatic_number(&g).unwrap(), 3);
    assert_eq!(brute_force_chromatic(&g), 3);
}

#[test]
fn kk_blocks_eta_matches_brute_force() {
    let oracle = Oracle::new(OracleLimits::uniform(16));
    for k in 2..=4 {
        let inst = gen_kk_blocks(k).unwrap();
        let fast = oracle.prediction_error(&inst).unwrap().eta;
        assert_eq!(fast, k * (k - 1));
        if k <= 3 {
            let parts: Vec<_> = oracle.optimal_partitions(inst.graph()).unwrap().collect();
            assert_eq!(brute_force_eta(&inst, &parts), fast);
        }
    }
}

#[test]
fn corrupted_triangle_pinned() {
    let oracle = Oracle::default();
    let k3 = OnlineInstance::identity_order(Graph::complete(3));
    let inst = attach_predictions(k3, &PredictionModel::Corrupted { rate: 1.0 }, 0, &oracle).unwrap();
    let preds: Vec<&str> = inst.predictions().unwrap().iter().map(|l| l.as_str()).collect();
    assert_eq!(preds, ["c3", "c2", "c3"]);
    assert_eq!(oracle.prediction_error(&inst).unwrap().eta, 1);
}

fn instance_params() -> impl Strategy<Value = (usize, f64, f64, u64)> {
    (
        1usize..=9,
        prop::sample::select(vec![0.2, 0.4, 0.6, 0.8]),
        prop::sample::select(vec![0.0, 0.3, 0.7, 1.0]),
        any::<u64>(),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn partitions_match_brute_force(n in 0usize..=7, p in 0.0f64..1.0, seed: u64) {
        let g = gen_random(n, p, seed).unwrap().graph().clone();
        let oracle = Oracle::default();
        let chi = oracle.chromatic_number(&g).unwrap();
        prop_assert_eq!(chi, brute_force_chromatic(&g));
        let fast: std::collections::BTreeSet<_> = oracle
            .optimal_partitions(&g)
            .unwrap()
            .map(|p: OptimalPartition| {
                let mut c = p.classes;
                c.sort();
                c
            })
            .collect();
        prop_assert_eq!(fast, brute_force_partitions(&g, chi));
    }

    #[test]
    fn chromatic_between_clique_and_first_fit(n in 1usize..=14, p in 0.0f64..1.0, seed: u64) {
        let inst = gen_random(n, p, seed).unwrap();
        let chi = Oracle::default().chromatic_number(inst.graph()).unwrap();
        let clique = inst.graph().greedy_clique();
        prop_assert!(inst.graph().is_clique(&clique));
        prop_assert!(clique.len() <= chi);
        let ff = run(&mut FirstFit::new(), &inst).unwrap().distinct_colors;
        prop_assert!(chi <= ff);
    }

    #[test]
    fn eta_two_routes_agree((n, p, rate, seed) in instance_params()) {
        let inst = random_with_predictions(n, p, rate, seed);
        let oracle = Oracle::default();
        let parts: Vec<_> = oracle.optimal_partitions(inst.graph()).unwrap().collect();
        let eta = oracle.prediction_error(&inst).unwrap();
        prop_assert_eq!(eta.eta, brute_force_eta(&inst, &parts));
        prop_assert_eq!(eta.eta == 0, predictions_match_some_optimal(&inst, &parts));

        // the witness realises eta
        let labels = eta.witness_label(n);
        let preds = inst.predictions().unwrap();
        let mismatches = (0..n).filter(|&v| labels[v] != preds[v]).count();
        prop_assert_eq!(mismatches, eta.eta);
    }
}
