//! Exact chromatic number by DSATUR-ordered backtracking.

use crate::graph::Graph;

/// Proper coloring `vertex → class` with at most `k` classes, if one exists.
/// Colors are opened in increasing order so symmetric branches are skipped.
pub(crate) fn k_coloring(graph: &Graph, k: usize) -> Option<Vec<usize>> {
    let n = graph.n();
    if n == 0 {
        return Some(Vec::new());
    }
    if k == 0 {
        return None;
    }
    let mut colors = vec![usize::MAX; n];
    // Bitmask of colors present among colored neighbours.
    let mut forbidden = vec![0u64; n];
    if search(graph, k, &mut colors, &mut forbidden, 0, 0) {
        Some(colors)
    } else {
        None
    }
}

fn search(
    graph: &Graph,
    k: usize,
    colors: &mut [usize],
    forbidden: &mut [u64],
    colored: usize,
    opened: usize,
) -> bool {
    let n = graph.n();
    if colored == n {
        return true;
    }
    let v = (0..n)
        .filter(|&v| colors[v] == usize::MAX)
        .max_by_key(|&v| {
            let uncolored_deg = graph
                .neighbors(v)
                .iter()
                .filter(|&&u| colors[u] == usize::MAX)
                .count();
            (forbidden[v].count_ones(), uncolored_deg, std::cmp::Reverse(v))
        })
        .expect("an uncolored vertex remains");

    let limit = k.min(opened + 1);
    for c in 0..limit {
        if forbidden[v] & (1 << c) != 0 {
            continue;
        }
        colors[v] = c;
        let saved: Vec<u64> = graph.neighbors(v).iter().map(|&u| forbidden[u]).collect();
        for &u in graph.neighbors(v) {
            forbidden[u] |= 1 << c;
        }
        if search(graph, k, colors, forbidden, colored + 1, opened.max(c + 1)) {
            return true;
        }
        for (&u, s) in graph.neighbors(v).iter().zip(saved) {
            forbidden[u] = s;
        }
        colors[v] = usize::MAX;
    }
    false
}

/// Number of colors of greedy coloring in id order; an upper bound.
fn greedy_upper_bound(graph: &Graph) -> usize {
    let n = graph.n();
    let mut colors = vec![usize::MAX; n];
    let mut used = 0;
    for v in 0..n {
        let mut c = 0;
        while graph.neighbors(v).iter().any(|&u| colors[u] == c) {
            c += 1;
        }
        colors[v] = c;
        used = used.max(c + 1);
    }
    used
}

pub(crate) fn chromatic(graph: &Graph) -> (usize, Vec<usize>) {
    if graph.n() == 0 {
        return (0, Vec::new());
    }
    let lower = graph.greedy_clique().len().max(1);
    let upper = greedy_upper_bound(graph);
    for k in lower..=upper {
        if let Some(col) = k_coloring(graph, k) {
            return (k, col);
        }
    }
    unreachable!("greedy coloring witnesses {upper}-colorability")
}
