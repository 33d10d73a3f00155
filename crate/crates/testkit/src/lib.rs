//! Brute-force reference implementations and random instance generators.
//!
//! Everything here works on plain adjacency data (`Vec<Vec<bool>>`, arc
//! lists) and shares no code with `algepath-core`, so it can check the
//! kernel-based implementations independently.

use std::collections::BTreeSet;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub type Adjacency = Vec<Vec<bool>>;

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Random digraph on `n` vertices, each ordered pair an arc with probability
/// `p`. Self-loops only when `loops` is set.
pub fn random_digraph(rng: &mut impl Rng, n: usize, p: f64, loops: bool) -> Adjacency {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (loops || i != j) && rng.gen_bool(p))
                .collect()
        })
        .collect()
}

/// Random DAG: arcs only go forward in a random vertex order.
pub fn random_dag(rng: &mut impl Rng, n: usize, p: f64) -> Adjacency {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut adj = vec![vec![false; n]; n];
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                adj[order[a]][order[b]] = true;
            }
        }
    }
    adj
}

/// Arc list of `adj` with weights drawn uniformly from `lo..=hi`.
pub fn random_weights(
    rng: &mut impl Rng,
    adj: &Adjacency,
    lo: i64,
    hi: i64,
) -> Vec<(usize, usize, i64)> {
    let mut arcs = Vec::new();
    for (i, row) in adj.iter().enumerate() {
        for (j, &arc) in row.iter().enumerate() {
            if arc {
                arcs.push((i, j, rng.gen_range(lo..=hi)));
            }
        }
    }
    arcs
}

/// Single-source shortest distances by Bellman-Ford. `None` if a negative
/// cycle is reachable from `source`.
pub fn bellman_ford(
    n: usize,
    arcs: &[(usize, usize, i64)],
    source: usize,
) -> Option<Vec<Option<i64>>> {
    let mut dist: Vec<Option<i64>> = vec![None; n];
    dist[source] = Some(0);
    for _ in 0..n {
        let mut changed = false;
        for &(u, v, w) in arcs {
            if let Some(du) = dist[u] {
                if dist[v].is_none_or(|dv| du + w < dv) {
                    dist[v] = Some(du + w);
                    changed = true;
                }
            }
        }
        if !changed {
            return Some(dist);
        }
    }
    None
}

/// Every simple path from `from` to `to` with at least two vertices, by
/// depth-first search with a visited set.
pub fn simple_paths(adj: &Adjacency, from: usize, to: usize) -> BTreeSet<Vec<usize>> {
    fn walk(
        adj: &Adjacency,
        to: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        out: &mut BTreeSet<Vec<usize>>,
    ) {
        let at = *path.last().unwrap();
        for next in 0..adj.len() {
            if !adj[at][next] || on_path[next] {
                continue;
            }
            path.push(next);
            if next == to {
                out.insert(path.clone());
            } else {
                on_path[next] = true;
                walk(adj, to, path, on_path, out);
                on_path[next] = false;
            }
            path.pop();
        }
    }

    let mut out = BTreeSet::new();
    if from == to {
        return out;
    }
    let mut on_path = vec![false; adj.len()];
    on_path[from] = true;
    walk(adj, to, &mut vec![from], &mut on_path, &mut out);
    out
}

/// Number of directed paths between every pair of a DAG, by memoised DFS.
pub fn dag_path_counts(adj: &Adjacency) -> Vec<Vec<u128>> {
    let n = adj.len();
    // counts[v][t] = paths of length ≥ 1 from v to t.
    let mut counts: Vec<Option<Vec<u128>>> = vec![None; n];
    fn visit(v: usize, adj: &Adjacency, counts: &mut Vec<Option<Vec<u128>>>) {
        if counts[v].is_some() {
            return;
        }
        let n = adj.len();
        let mut row = vec![0u128; n];
        for u in 0..n {
            if adj[v][u] {
                visit(u, adj, counts);
                row[u] += 1;
                for (t, c) in counts[u].as_ref().unwrap().iter().enumerate() {
                    row[t] += c;
                }
            }
        }
        counts[v] = Some(row);
    }
    for v in 0..n {
        visit(v, adj, &mut counts);
    }
    counts.into_iter().map(Option::unwrap).collect()
}

/// Longest path weights by explicit enumeration of simple paths. The
/// diagonal is `Some(0)`.
pub fn longest_by_enumeration(n: usize, arcs: &[(usize, usize, i64)]) -> Vec<Vec<Option<i64>>> {
    let mut adj = vec![vec![false; n]; n];
    let mut weight = vec![vec![0i64; n]; n];
    for &(u, v, w) in arcs {
        adj[u][v] = true;
        weight[u][v] = w;
    }
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        return Some(0);
                    }
                    simple_paths(&adj, i, j)
                        .iter()
                        .map(|p| p.windows(2).map(|e| weight[e[0]][e[1]]).sum())
                        .max()
                })
                .collect()
        })
        .collect()
}

/// All nonempty increasing position sequences in `0..n` whose consecutive
/// differences lie in `gaps`, by checking every subset.
pub fn brute_m_subwords(n: usize, gaps: &[usize]) -> BTreeSet<Vec<usize>> {
    assert!(n < 24, "subset enumeration is exponential");
    let mut out = BTreeSet::new();
    for mask in 1u32..(1 << n) {
        let picked: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        if picked.windows(2).all(|w| gaps.contains(&(w[1] - w[0]))) {
            out.insert(picked);
        }
    }
    out
}

/// Random nondeterministic transition relation as `(from, letter, to)` triples.
pub fn random_transitions(
    rng: &mut impl Rng,
    states: usize,
    letters: usize,
    p: f64,
) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for from in 0..states {
        for letter in 0..letters {
            for to in 0..states {
                if rng.gen_bool(p) {
                    out.push((from, letter, to));
                }
            }
        }
    }
    out
}

/// Letters `a` such that `q` is in the state set reached from `p` after
/// exactly `k` steps on `a`, for some `1 ≤ k ≤ states`, by iterating the
/// set-valued transition map.
pub fn letter_powers(
    states: usize,
    letters: usize,
    transitions: &[(usize, usize, usize)],
    p: usize,
    q: usize,
) -> BTreeSet<usize> {
    (0..letters)
        .filter(|&a| {
            let mut current = BTreeSet::from([p]);
            for _ in 0..states {
                current = transitions
                    .iter()
                    .filter(|&&(from, letter, _)| letter == a && current.contains(&from))
                    .map(|&(_, _, to)| to)
                    .collect();
                if current.contains(&q) {
                    return true;
                }
            }
            false
        })
        .collect()
}

/// Warshall closure where pass `k` reads row and column `k` as they stood
/// at the start of the pass, instead of updating in place.
pub fn snapshot_closure<T: Clone>(
    mut w: Vec<Vec<T>>,
    combine: impl Fn(&T, &T) -> T,
    extend: impl Fn(&T, &T) -> T,
) -> Vec<Vec<T>> {
    let n = w.len();
    for k in 0..n {
        let row: Vec<T> = w[k].clone();
        let col: Vec<T> = (0..n).map(|i| w[i][k].clone()).collect();
        for i in 0..n {
            for j in 0..n {
                let through = extend(&col[i], &row[j]);
                w[i][j] = combine(&w[i][j], &through);
            }
        }
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracles_on_small_cases() {
        // 0→1→2, 0→2
        let adj = vec![
            vec![false, true, true],
            vec![false, false, true],
            vec![false, false, false],
        ];
        assert_eq!(
            simple_paths(&adj, 0, 2),
            BTreeSet::from([vec![0, 2], vec![0, 1, 2]])
        );
        assert_eq!(dag_path_counts(&adj)[0][2], 2);
        let arcs = [(0, 1, 1), (1, 2, 1), (0, 2, 5)];
        assert_eq!(
            bellman_ford(3, &arcs, 0).unwrap(),
            vec![Some(0), Some(1), Some(2)]
        );
        assert_eq!(longest_by_enumeration(3, &arcs)[0][2], Some(5));
        assert_eq!(brute_m_subwords(4, &[1, 3]).len(), 11);
        assert_eq!(
            letter_powers(2, 1, &[(0, 0, 1), (1, 0, 0)], 0, 0),
            BTreeSet::from([0])
        );
    }

    #[test]
    fn bellman_ford_detects_negative_cycle() {
        assert!(bellman_ford(2, &[(0, 1, -1), (1, 0, -1)], 0).is_none());
    }
}
