//! Maximum-weight perfect assignment on a square matrix (Hungarian method,
//! shortest augmenting paths with potentials, O(m³)).

/// Returns `(total, col_of_row)` maximising `Σ weights[r][col_of_row[r]]`.
/// `weights` must be square.
pub fn max_weight_assignment(weights: &[Vec<i64>]) -> (i64, Vec<usize>) {
    let m = weights.len();
    if m == 0 {
        return (0, Vec::new());
    }
    assert!(weights.iter().all(|row| row.len() == m), "matrix must be square");
    let top = weights.iter().flatten().copied().max().unwrap_or(0);
    // Minimise top - w, which is non-negative.
    let cost = |r: usize, c: usize| top - weights[r][c];

    const INF: i64 = i64::MAX / 4;
    // 1-based internals; index 0 is the virtual root.
    let mut u = vec![0i64; m + 1];
    let mut v = vec![0i64; m + 1];
    let mut row_of_col = vec![0usize; m + 1];
    let mut way = vec![0usize; m + 1];

    for row in 1..=m {
        row_of_col[0] = row;
        let mut col0 = 0usize;
        let mut minv = vec![INF; m + 1];
        let mut used = vec![false; m + 1];
        loop {
            used[col0] = true;
            let r0 = row_of_col[col0];
            let mut delta = INF;
            let mut col1 = 0usize;
            for col in 1..=m {
                if used[col] {
                    continue;
                }
                let cur = cost(r0 - 1, col - 1) - u[r0] - v[col];
                if cur < minv[col] {
                    minv[col] = cur;
                    way[col] = col0;
                }
                if minv[col] < delta {
                    delta = minv[col];
                    col1 = col;
                }
            }
            for col in 0..=m {
                if used[col] {
                    u[row_of_col[col]] += delta;
                    v[col] -= delta;
                } else {
                    minv[col] -= delta;
                }
            }
            col0 = col1;
            if row_of_col[col0] == 0 {
                break;
            }
        }
        loop {
            let col1 = way[col0];
            row_of_col[col0] = row_of_col[col1];
            col0 = col1;
            if col0 == 0 {
                break;
            }
        }
    }

    let mut col_of_row = vec![0usize; m];
    for col in 1..=m {
        col_of_row[row_of_col[col] - 1] = col - 1;
    }
    let total = col_of_row
        .iter()
        .enumerate()
        .map(|(r, &c)| weights[r][c])
        .sum();
    (total, col_of_row)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn brute(weights: &[Vec<i64>]) -> i64 {
        fn go(w: &[Vec<i64>], row: usize, used: &mut Vec<bool>) -> i64 {
            if row == w.len() {
                return 0;
            }
            let mut best = i64::MIN;
            for c in 0..w.len() {
                if !used[c] {
                    used[c] = true;
                    best = best.max(w[row][c] + go(w, row + 1, used));
                    used[c] = false;
                }
            }
            best
        }
        go(weights, 0, &mut vec![false; weights.len()])
    }

    #[test]
    fn small_known() {
        let w = vec![vec![3, 1, 0], vec![2, 0, 0], vec![0, 0, 5]];
        let (total, cols) = max_weight_assignment(&w);
        assert_eq!(total, 8);
        assert_eq!(cols[2], 2);
        // rows 0 and 1 split columns 0/1: 3+0 = 1+2 tie, either is optimal
    }

    #[test]
    fn empty_matrix() {
        assert_eq!(max_weight_assignment(&[]), (0, vec![]));
    }

    proptest! {
        #[test]
        fn matches_brute_force(m in 1usize..6, seed in proptest::collection::vec(0i64..8, 36)) {
            let w: Vec<Vec<i64>> = (0..m).map(|r| (0..m).map(|c| seed[r * 6 + c]).collect()).collect();
            let (total, cols) = max_weight_assignment(&w);
            let mut seen = cols.clone();
            seen.sort_unstable();
            seen.dedup();
            prop_assert_eq!(seen.len(), m);
            prop_assert_eq!(total, brute(&w));
        }
    }
}
