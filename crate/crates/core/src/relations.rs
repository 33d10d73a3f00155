//! Binary relations as boolean matrices: transitive closure and its
//! matrix-power oracle.

use crate::matrix::SquareMatrix;
use crate::semiring::{closure, Boolean};

/// Relation matrix: cell `(i, j)` is `true` iff element `i` is related to `j`,
/// equivalently iff the digraph has an arc `i → j`.
pub type RelationMatrix = SquareMatrix<bool>;

/// Transitive (not reflexive-transitive) closure via the Warshall kernel.
///
/// Cell `(i, j)` of the result is set iff some directed path of length at
/// least one leads from `i` to `j`. The diagonal is only set for vertices on
/// a cycle.
pub fn transitive_closure(a: &RelationMatrix) -> RelationMatrix {
    closure::<Boolean>(a.clone())
}

/// `A + A² + ⋯ + Aⁿ` over the boolean operations, by repeated
/// multiplication. Cubic per power, so only meant as a cross-check.
pub fn closure_by_powers(a: &RelationMatrix) -> RelationMatrix {
    let n = a.n();
    let mut power = a.clone();
    let mut sum = a.clone();
    for _ in 1..n {
        power = bool_product(&power, a);
        for (i, j, &v) in power.iter() {
            if v {
                sum[(i, j)] = true;
            }
        }
    }
    sum
}

fn bool_product(x: &RelationMatrix, y: &RelationMatrix) -> RelationMatrix {
    let n = x.n();
    SquareMatrix::from_fn(n, |i, j| (0..n).any(|k| x[(i, k)] && y[(k, j)]))
}

/// Returns some vertex lying on a directed cycle, or `None` if the digraph
/// is acyclic. Self-loops count as cycles.
pub fn find_cycle(a: &RelationMatrix) -> Option<usize> {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        New,
        Open,
        Done,
    }

    let n = a.n();
    let mut mark = vec![Mark::New; n];
    // Explicit stack of (vertex, next successor to try).
    let mut stack: Vec<(usize, usize)> = Vec::new();
    for root in 0..n {
        if mark[root] != Mark::New {
            continue;
        }
        mark[root] = Mark::Open;
        stack.push((root, 0));
        while let Some(&mut (v, ref mut next)) = stack.last_mut() {
            if let Some(u) = (*next..n).find(|&u| a[(v, u)]) {
                *next = u + 1;
                match mark[u] {
                    Mark::Open => return Some(u),
                    Mark::New => {
                        mark[u] = Mark::Open;
                        stack.push((u, 0));
                    }
                    Mark::Done => {}
                }
            } else {
                mark[v] = Mark::Done;
                stack.pop();
            }
        }
    }
    None
}
