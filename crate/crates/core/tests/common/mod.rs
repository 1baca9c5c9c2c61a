//! Test-only oracles, independent of the library's search code.
#![allow(dead_code)]

use std::collections::BTreeSet;

use ocl_core::generators::{attach_predictions, gen_random, PredictionModel};
use ocl_core::graph::{ColorLabel, Graph, OnlineInstance};
use ocl_core::oracle::{OptimalPartition, Oracle};

/// Every partition of `V` into exactly `k` non-empty independent sets,
/// found by trying all `k^n` class maps and canonicalising.
pub fn brute_force_partitions(graph: &Graph, k: usize) -> BTreeSet<Vec<Vec<usize>>> {
    let n = graph.n();
    let mut found = BTreeSet::new();
    if n == 0 {
        if k == 0 {
            found.insert(Vec::new());
        }
        return found;
    }
    let total = (k as u64).pow(n as u32);
    for code in 0..total {
        let mut c = code;
        let class_of: Vec<usize> = (0..n)
            .map(|_| {
                let x = (c % k as u64) as usize;
                c /= k as u64;
                x
            })
            .collect();
        if graph.edges().iter().any(|&(u, v)| class_of[u] == class_of[v]) {
            continue;
        }
        let mut classes = vec![Vec::new(); k];
        for (v, &cl) in class_of.iter().enumerate() {
            classes[cl].push(v);
        }
        if classes.iter().any(Vec::is_empty) {
            continue;
        }
        classes.sort();
        found.insert(classes);
    }
    found
}

/// Smallest k with a proper k-coloring, by exhaustive class maps.
pub fn brute_force_chromatic(graph: &Graph) -> usize {
    (0..=graph.n())
        .find(|&k| !brute_force_partitions(graph, k).is_empty())
        .expect("n colors always suffice")
}

/// η by trying, for each optimal partition, every injective map from
/// classes into the predicted labels plus one fresh label per class.
pub fn brute_force_eta(instance: &OnlineInstance, partitions: &[OptimalPartition]) -> usize {
    let preds = instance.predictions().expect("predictions");
    let n = instance.n();
    let labels: Vec<Option<&ColorLabel>> = preds
        .iter()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .map(Some)
        .collect();
    let mut best = usize::MAX;
    for p in partitions {
        let k = p.classes.len();
        let mut candidates = labels.clone();
        candidates.extend(std::iter::repeat_n(None, k)); // fresh labels
        let mut used = vec![false; candidates.len()];
        let mut chosen = vec![0usize; k];
        fn go(
            p: &OptimalPartition,
            preds: &[ColorLabel],
            cands: &[Option<&ColorLabel>],
            used: &mut [bool],
            chosen: &mut [usize],
            class: usize,
            best_agree: &mut usize,
        ) {
            if class == p.classes.len() {
                let agree: usize = p
                    .classes
                    .iter()
                    .zip(chosen.iter())
                    .map(|(cl, &ci)| match cands[ci] {
                        Some(l) => cl.iter().filter(|&&v| &preds[v] == l).count(),
                        None => 0,
                    })
                    .sum();
                *best_agree = (*best_agree).max(agree);
                return;
            }
            for ci in 0..cands.len() {
                if !used[ci] {
                    used[ci] = true;
                    chosen[class] = ci;
                    go(p, preds, cands, used, chosen, class + 1, best_agree);
                    used[ci] = false;
                }
            }
        }
        let mut agree = 0;
        go(p, preds, &candidates, &mut used, &mut chosen, 0, &mut agree);
        best = best.min(n - agree);
    }
    best
}

/// True iff some optimal partition has constant predictions per class and
/// pairwise different labels across classes.
pub fn predictions_match_some_optimal(
    instance: &OnlineInstance,
    partitions: &[OptimalPartition],
) -> bool {
    let preds = instance.predictions().expect("predictions");
    partitions.iter().any(|p| {
        let mut labels = BTreeSet::new();
        p.classes.iter().all(|cl| {
            let first = &preds[cl[0]];
            cl.iter().all(|&v| &preds[v] == first) && labels.insert(first.clone())
        })
    })
}

/// `n`, `p` and a corruption rate derived from `seed` for the property loops.
pub fn random_with_predictions(n: usize, p: f64, rate: f64, seed: u64) -> OnlineInstance {
    let inst = gen_random(n, p, seed).unwrap();
    attach_predictions(
        inst,
        &PredictionModel::Corrupted { rate },
        seed ^ 0x9e37_79b9,
        &Oracle::default(),
    )
    .unwrap()
}

/// Bipartite instance: random edges kept only between even and odd ids.
pub fn random_bipartite(n: usize, p: f64, seed: u64) -> OnlineInstance {
    let inst = gen_random(n, p, seed).unwrap();
    let edges: Vec<_> = inst
        .graph()
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| u % 2 != v % 2)
        .collect();
    let graph = Graph::new(n, edges).unwrap();
    OnlineInstance::new(graph, inst.order().to_vec(), None).unwrap()
}

pub fn labels(ls: &[&str]) -> Vec<ColorLabel> {
    ls.iter().map(|s| ColorLabel::new(s).unwrap()).collect()
}
