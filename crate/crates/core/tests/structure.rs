use ocl_core::generators::{gen_crown, gen_kk_blocks, gen_random, CrownVariant};
use ocl_core::structure::PartitionDefect;
use ocl_core::{extract_clique_partition, run, verify_partition, FirstFit, OnlineInstance};
use proptest::prelude::*;

fn check(inst: &OnlineInstance) -> Option<Vec<PartitionDefect>> {
    let r = run(&mut FirstFit::new(), inst).unwrap();
    if r.distinct_colors < 2 {
        return None;
    }
    let p = extract_clique_partition(inst.graph(), &r).unwrap();
    assert_eq!(p.x, r.distinct_colors);
    Some(verify_partition(inst.graph(), &p))
}

#[test]
fn suffix_of_crown_b_six() {
    let inst = gen_crown(6, CrownVariant::WithFirstEdge).unwrap();
    let g_prime = inst.suffix(3).unwrap();
    assert_eq!(g_prime.original_ids, [1, 7, 2, 8, 3, 9, 4, 10, 5, 11]);
    let r = run(&mut FirstFit::new(), &g_prime.instance).unwrap();
    assert_eq!(r.distinct_colors, 5);
    let p = extract_clique_partition(g_prime.instance.graph(), &r).unwrap();
    assert_eq!((p.x, p.q), (5, 3));
    assert_eq!(p.cliques.iter().map(Vec::len).sum::<usize>(), 8);
    assert!(verify_partition(g_prime.instance.graph(), &p).is_empty());
}

#[test]
fn families_extract_cleanly() {
    for n in 2..=6 {
        for variant in [CrownVariant::MinusMatching, CrownVariant::WithFirstEdge] {
            let inst = gen_crown(n, variant).unwrap();
            assert_eq!(check(&inst), Some(vec![]));
        }
    }
    for k in 2..=4 {
        assert_eq!(check(&gen_kk_blocks(k).unwrap()), Some(vec![]));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn random_runs_extract_cleanly(n in 2usize..=30, p in 0.05f64..0.95, seed: u64) {
        let inst = gen_random(n, p, seed).unwrap();
        if let Some(defects) = check(&inst) {
            prop_assert!(defects.is_empty(), "{:?}", defects);
        }
    }
}
