use serde::Serialize;

use crate::graph::Graph;

/// A partition of the vertex set into independent sets. Classes are ordered
/// by their smallest vertex and each class is sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct OptimalPartition {
    pub classes: Vec<Vec<usize>>,
}

impl OptimalPartition {
    pub(crate) fn from_class_of(class_of: &[usize], k: usize) -> Self {
        let mut classes = vec![Vec::new(); k];
        for (v, &c) in class_of.iter().enumerate() {
            classes[c].push(v);
        }
        classes.retain(|c| !c.is_empty());
        classes.sort_by_key(|c| c[0]);
        OptimalPartition { classes }
    }

    /// `class_of[v]` = index of the class containing `v`.
    pub fn class_of(&self, n: usize) -> Vec<usize> {
        let mut out = vec![usize::MAX; n];
        for (i, class) in self.classes.iter().enumerate() {
            for &v in class {
                out[v] = i;
            }
        }
        out
    }
}

/// Lazily enumerates every partition of `V` into exactly `k` independent
/// sets, each exactly once. Vertices are placed in id order and a vertex may
/// only open the next unused class, so partitions come out as restricted
/// growth strings in lexicographic order.
pub struct OptimalPartitions<'g> {
    graph: &'g Graph,
    k: usize,
    class_of: Vec<usize>,
    /// `opened[d]` = classes in use among vertices `0..d`.
    opened: Vec<usize>,
    /// Next class to try for vertex `d`.
    next: Vec<usize>,
    depth: usize,
    done: bool,
}

impl<'g> OptimalPartitions<'g> {
    pub(crate) fn new(graph: &'g Graph, k: usize) -> Self {
        let n = graph.n();
        OptimalPartitions {
            graph,
            k,
            class_of: vec![usize::MAX; n],
            opened: vec![0; n + 1],
            next: vec![0; n + 1],
            depth: 0,
            done: false,
        }
    }

    fn fits(&self, v: usize, c: usize) -> bool {
        let n = self.graph.n();
        let opened_after = self.opened[v].max(c + 1);
        opened_after + (n - v - 1) >= self.k
            && self
                .graph
                .neighbors(v)
                .iter()
                .take_while(|&&u| u < v)
                .all(|&u| self.class_of[u] != c)
    }
}

impl Iterator for OptimalPartitions<'_> {
    type Item = OptimalPartition;

    fn next(&mut self) -> Option<OptimalPartition> {
        let n = self.graph.n();
        if self.done {
            return None;
        }
        if n == 0 {
            self.done = true;
            return (self.k == 0).then(|| OptimalPartition { classes: Vec::new() });
        }
        loop {
            if self.depth == n {
                let found = OptimalPartition::from_class_of(&self.class_of, self.k);
                self.depth = n - 1;
                return Some(found);
            }
            let d = self.depth;
            let limit = self.k.min(self.opened[d] + 1);
            let choice = (self.next[d]..limit).find(|&c| self.fits(d, c));
            match choice {
                Some(c) => {
                    self.class_of[d] = c;
                    self.next[d] = c + 1;
                    self.opened[d + 1] = self.opened[d].max(c + 1);
                    self.depth = d + 1;
                    self.next[d + 1] = 0;
                }
                None => {
                    self.class_of[d] = usize::MAX;
                    if d == 0 {
                        self.done = true;
                        return None;
                    }
                    self.depth = d - 1;
                }
            }
        }
    }
}
