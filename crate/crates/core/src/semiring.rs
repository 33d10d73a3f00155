//! The closure-semiring contract and the generic Warshall kernel.
//!
//! Every application in this crate is one call to [`closure_in_place`] with
//! a different [`ClosureSemiring`]. The kernel performs, for each pivot `k`
//! and then each row `i` and column `j`,
//!
//! ```text
//! w[i][j] <- w[i][j] ⊕ (w[i][k] ⊙ w[k][j])
//! ```
//!
//! updating cells in place, so pass `k` sees row and column `k` as they
//! stand after any earlier updates within the same pass.

use std::fmt::Debug;

use crate::matrix::SquareMatrix;

/// An algebra the closure kernel can run over.
///
/// Implementations must satisfy, for all carrier values `x`, `y`, `z`:
///
/// - `combine` is associative and commutative;
/// - `extend` is associative;
/// - `combine(x, zero) = x` and `extend(zero, x) = extend(x, zero) = zero`.
///
/// When [`IDEMPOTENT`](Self::IDEMPOTENT) is `true`, `combine(x, x) = x` also
/// holds and the closure is a fixpoint of the kernel. No multiplicative unit
/// is required since the kernel never uses one.
pub trait ClosureSemiring {
    type Value: Clone + PartialEq + Debug;

    /// Whether `combine` is idempotent. Counting paths is the one shipped
    /// algebra where it is not.
    const IDEMPOTENT: bool = true;

    /// The additive identity, read as "no path".
    fn zero() -> Self::Value;

    fn is_zero(value: &Self::Value) -> bool {
        *value == Self::zero()
    }

    /// `⊕`: merges two alternative path summaries.
    fn combine(a: &Self::Value, b: &Self::Value) -> Self::Value;

    /// `⊙`: concatenates a path summary ending at a vertex with one starting there.
    fn extend(a: &Self::Value, b: &Self::Value) -> Self::Value;

    /// `acc <- acc ⊕ other`. Override when the carrier can be merged without
    /// rebuilding `acc`.
    fn combine_assign(acc: &mut Self::Value, other: Self::Value) {
        *acc = Self::combine(acc, &other);
    }
}

/// Runs one pivot pass of the kernel through vertex `k`.
///
/// Rows whose `(i, k)` cell is zero, and columns whose `(k, j)` cell is zero,
/// are skipped; by the zero laws they cannot change anything.
pub fn relax_through<S: ClosureSemiring>(w: &mut SquareMatrix<S::Value>, k: usize) {
    relax_tracked::<S, _>(w, k, None::<fn(usize, usize)>);
}

/// Computes the closure of `w` in place over the semiring `S`.
pub fn closure_in_place<S: ClosureSemiring>(w: &mut SquareMatrix<S::Value>) {
    for k in 0..w.n() {
        relax_through::<S>(w, k);
    }
}

/// Owned convenience wrapper around [`closure_in_place`].
pub fn closure<S: ClosureSemiring>(mut w: SquareMatrix<S::Value>) -> SquareMatrix<S::Value> {
    closure_in_place::<S>(&mut w);
    w
}

/// Like [`closure_in_place`], but calls `on_change(i, k, j)` every time cell
/// `(i, j)` takes a new value during pass `k`.
pub fn closure_in_place_tracked<S, F>(w: &mut SquareMatrix<S::Value>, mut on_change: F)
where
    S: ClosureSemiring,
    F: FnMut(usize, usize, usize),
{
    for k in 0..w.n() {
        relax_tracked::<S, _>(w, k, Some(|i, j| on_change(i, k, j)));
    }
}

fn relax_tracked<S, F>(w: &mut SquareMatrix<S::Value>, k: usize, mut on_change: Option<F>)
where
    S: ClosureSemiring,
    F: FnMut(usize, usize),
{
    let n = w.n();
    let cells = w.cells_mut();
    for i in 0..n {
        let mut ik = cells[i * n + k].clone();
        // If w[i][k] is zero it stays zero for the whole row: its own update
        // at j = k adds zero ⊙ w[k][k] = zero.
        if S::is_zero(&ik) {
            continue;
        }
        for j in 0..n {
            let kj = &cells[k * n + j];
            if S::is_zero(kj) {
                continue;
            }
            let through = S::extend(&ik, kj);
            let cell = &mut cells[i * n + j];
            match on_change.as_mut() {
                Some(notify) => {
                    let before = cell.clone();
                    S::combine_assign(cell, through);
                    if *cell != before {
                        notify(i, j);
                    }
                }
                None => S::combine_assign(cell, through),
            }
            if j == k {
                ik = cells[i * n + k].clone();
            }
        }
    }
}

/// The two-element algebra `({0, 1}, or, and)`: plain reachability.
#[derive(Debug, Clone, Copy, Default)]
pub struct Boolean;

impl ClosureSemiring for Boolean {
    type Value = bool;

    fn zero() -> bool {
        false
    }

    fn is_zero(value: &bool) -> bool {
        !*value
    }

    fn combine(a: &bool, b: &bool) -> bool {
        *a || *b
    }

    fn extend(a: &bool, b: &bool) -> bool {
        *a && *b
    }

    fn combine_assign(acc: &mut bool, other: bool) {
        *acc |= other;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bools(rows: &[&str]) -> SquareMatrix<bool> {
        SquareMatrix::from_rows(
            rows.iter()
                .map(|r| r.bytes().map(|b| b == b'1').collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn zero_matrix_is_fixed() {
        let w = closure::<Boolean>(SquareMatrix::filled(3, false));
        assert_eq!(w, SquareMatrix::filled(3, false));
    }

    #[test]
    fn boolean_chain_closes() {
        let w = closure::<Boolean>(bools(&["010", "001", "000"]));
        assert_eq!(w, bools(&["011", "001", "000"]));
    }

    #[test]
    fn tracked_reports_each_new_cell_once() {
        let mut w = bools(&["0100", "0010", "0001", "0000"]);
        let mut changes = Vec::new();
        closure_in_place_tracked::<Boolean, _>(&mut w, |i, k, j| changes.push((i, k, j)));
        assert_eq!(changes, vec![(0, 1, 2), (0, 2, 3), (1, 2, 3)]);
        assert_eq!(w, bools(&["0111", "0011", "0001", "0000"]));
    }

    // A pivot whose diagonal cell is set must not disturb the rest of its
    // row or column; the in-place refresh of w[i][k] at j = k covers this.
    #[test]
    fn self_loop_pivot() {
        let w = closure::<Boolean>(bools(&["010", "011", "000"]));
        assert_eq!(w, bools(&["011", "011", "000"]));
    }
}
