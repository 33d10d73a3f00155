//! All-pairs shortest distances (Floyd-Warshall over `(min, +)`), next-hop
//! path reconstruction, and longest distances in acyclic digraphs over
//! `(max, +)`.

use std::cmp::Ordering;
use std::fmt;
use std::marker::PhantomData;

use crate::matrix::SquareMatrix;
use crate::relations::{find_cycle, RelationMatrix};
use crate::semiring::{closure, closure_in_place_tracked, ClosureSemiring};

/// Numeric edge weight. Implemented for `i64` (exact) and `f64`.
pub trait Weight: Copy + PartialOrd + fmt::Debug + fmt::Display {
    const ZERO: Self;

    /// Path-length addition. The integer instance saturates instead of
    /// wrapping.
    fn plus(self, other: Self) -> Self;
}

impl Weight for i64 {
    const ZERO: i64 = 0;

    fn plus(self, other: i64) -> i64 {
        self.saturating_add(other)
    }
}

impl Weight for f64 {
    const ZERO: f64 = 0.0;

    fn plus(self, other: f64) -> f64 {
        self + other
    }
}

/// An extended distance: a finite weight or the explicit "no path" sentinel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Distance<W> {
    Finite(W),
    Unreachable,
}

impl<W: Weight> Distance<W> {
    pub fn finite(self) -> Option<W> {
        match self {
            Distance::Finite(w) => Some(w),
            Distance::Unreachable => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Distance::Finite(_))
    }

    /// Addition with `Unreachable` absorbing.
    pub fn plus(self, other: Self) -> Self {
        match (self, other) {
            (Distance::Finite(a), Distance::Finite(b)) => Distance::Finite(a.plus(b)),
            _ => Distance::Unreachable,
        }
    }

    /// Order with `Unreachable` above every finite value.
    fn cmp_min(self, other: Self) -> Ordering {
        match (self, other) {
            (Distance::Finite(a), Distance::Finite(b)) => {
                a.partial_cmp(&b).unwrap_or(Ordering::Equal)
            }
            (Distance::Finite(_), Distance::Unreachable) => Ordering::Less,
            (Distance::Unreachable, Distance::Finite(_)) => Ordering::Greater,
            (Distance::Unreachable, Distance::Unreachable) => Ordering::Equal,
        }
    }
}

impl<W: fmt::Display> fmt::Display for Distance<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(w) => w.fmt(f),
            Distance::Unreachable => f.write_str("inf"),
        }
    }
}

/// Distance matrix: `D₀` on input, `D` on output.
pub type DistanceMatrix<W> = SquareMatrix<Distance<W>>;

/// Next-hop matrix: cell `(i, j)` is the vertex following `i` on the chosen
/// shortest `i → j` path.
pub type SuccessorMatrix = SquareMatrix<Option<usize>>;

/// The tropical `(min, +)` algebra.
#[derive(Debug, Clone, Copy, Default)]
pub struct MinPlus<W>(PhantomData<W>);

impl<W: Weight> ClosureSemiring for MinPlus<W> {
    type Value = Distance<W>;

    fn zero() -> Distance<W> {
        Distance::Unreachable
    }

    fn combine(a: &Distance<W>, b: &Distance<W>) -> Distance<W> {
        if b.cmp_min(*a) == Ordering::Less {
            *b
        } else {
            *a
        }
    }

    fn extend(a: &Distance<W>, b: &Distance<W>) -> Distance<W> {
        a.plus(*b)
    }
}

/// The `(max, +)` algebra, still with `Unreachable` as zero.
#[derive(Debug, Clone, Copy, Default)]
pub struct MaxPlus<W>(PhantomData<W>);

impl<W: Weight> ClosureSemiring for MaxPlus<W> {
    type Value = Distance<W>;

    fn zero() -> Distance<W> {
        Distance::Unreachable
    }

    fn combine(a: &Distance<W>, b: &Distance<W>) -> Distance<W> {
        match (a, b) {
            (Distance::Unreachable, _) => *b,
            (_, Distance::Unreachable) => *a,
            (Distance::Finite(x), Distance::Finite(y)) => {
                if y > x {
                    *b
                } else {
                    *a
                }
            }
        }
    }

    fn extend(a: &Distance<W>, b: &Distance<W>) -> Distance<W> {
        a.plus(*b)
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum PathError {
    #[error("negative cycle through vertex {vertex}")]
    NegativeCycle { vertex: usize },
    #[error("directed cycle through vertex {vertex}; longest paths are undefined")]
    CyclicInput { vertex: usize },
    #[error("diagonal cell ({vertex}, {vertex}) must be 0 or negative")]
    InvalidDiagonal { vertex: usize },
}

impl PathError {
    pub fn kind(&self) -> &'static str {
        match self {
            PathError::NegativeCycle { .. } => "NegativeCycle",
            PathError::CyclicInput { .. } => "CyclicInput",
            PathError::InvalidDiagonal { .. } => "InvalidDiagonal",
        }
    }
}

/// Builds the modified adjacency matrix `D₀`: 0 on the diagonal, the arc
/// weight where an arc exists, `Unreachable` elsewhere.
///
/// A self-loop only lowers its diagonal cell when its weight is negative,
/// which then surfaces as a negative cycle. If an arc is listed twice the
/// later weight wins.
pub fn modified_adjacency<W: Weight>(n: usize, arcs: &[(usize, usize, W)]) -> DistanceMatrix<W> {
    let mut d0 = SquareMatrix::from_fn(n, |i, j| {
        if i == j {
            Distance::Finite(W::ZERO)
        } else {
            Distance::Unreachable
        }
    });
    for &(u, v, w) in arcs {
        if u != v {
            d0[(u, v)] = Distance::Finite(w);
        } else if w < W::ZERO {
            d0[(u, u)] = Distance::Finite(w);
        }
    }
    d0
}

fn check_diagonal<W: Weight>(d0: &DistanceMatrix<W>) -> Result<(), PathError> {
    for v in 0..d0.n() {
        match d0[(v, v)] {
            Distance::Finite(w) if w <= W::ZERO => {}
            _ => return Err(PathError::InvalidDiagonal { vertex: v }),
        }
    }
    Ok(())
}

/// Shortest distances between all vertex pairs, with next-hop bookkeeping.
///
/// The successor of `(i, j)` is replaced only when the distance strictly
/// improves, so among equally short paths the one found at the lowest pivot
/// is kept.
pub fn floyd_warshall<W: Weight>(
    d0: &DistanceMatrix<W>,
) -> Result<(DistanceMatrix<W>, SuccessorMatrix), PathError> {
    check_diagonal(d0)?;
    let n = d0.n();
    let mut next = SquareMatrix::from_fn(n, |i, j| (i != j && d0[(i, j)].is_finite()).then_some(j));
    let mut d = d0.clone();
    closure_in_place_tracked::<MinPlus<W>, _>(&mut d, |i, k, j| {
        next[(i, j)] = next[(i, k)];
    });
    for v in 0..n {
        if let Distance::Finite(w) = d[(v, v)] {
            if w < W::ZERO {
                return Err(PathError::NegativeCycle { vertex: v });
            }
        }
    }
    Ok((d, next))
}

/// Follows next hops from `from` to `to`.
///
/// Returns `[from]` when `from == to` and an empty vector when `to` is
/// unreachable.
pub fn reconstruct_path(next: &SuccessorMatrix, from: usize, to: usize) -> Vec<usize> {
    if from == to {
        return vec![from];
    }
    let mut path = vec![from];
    let mut at = from;
    while at != to {
        match next[(at, to)] {
            Some(hop) if path.len() < next.n() => {
                path.push(hop);
                at = hop;
            }
            _ => return Vec::new(),
        }
    }
    path
}

/// Longest distances between all vertex pairs of an acyclic digraph.
///
/// Arcs are the finite off-diagonal cells of `d0`; the diagonal stays 0.
pub fn longest_paths_dag<W: Weight>(
    d0: &DistanceMatrix<W>,
) -> Result<DistanceMatrix<W>, PathError> {
    let arcs: RelationMatrix =
        SquareMatrix::from_fn(d0.n(), |i, j| i != j && d0[(i, j)].is_finite());
    if let Some(vertex) = find_cycle(&arcs) {
        return Err(PathError::CyclicInput { vertex });
    }
    let mut start = d0.clone();
    for v in 0..d0.n() {
        start[(v, v)] = Distance::Finite(W::ZERO);
    }
    Ok(closure::<MaxPlus<W>>(start))
}
