//! Path counting in acyclic digraphs over `(ℕ, +, ×)`.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::matrix::SquareMatrix;
use crate::relations::{find_cycle, RelationMatrix};
use crate::semiring::{closure, ClosureSemiring};

/// Cell `(i, j)` holds the number of distinct directed paths from `i` to `j`.
pub type CountMatrix = SquareMatrix<BigUint>;

/// Ordinary addition and multiplication on arbitrary-precision naturals.
#[derive(Debug, Clone, Copy, Default)]
pub struct Counting;

impl ClosureSemiring for Counting {
    type Value = BigUint;

    const IDEMPOTENT: bool = false;

    fn zero() -> BigUint {
        BigUint::zero()
    }

    fn is_zero(value: &BigUint) -> bool {
        value.is_zero()
    }

    fn combine(a: &BigUint, b: &BigUint) -> BigUint {
        a + b
    }

    fn extend(a: &BigUint, b: &BigUint) -> BigUint {
        a * b
    }

    fn combine_assign(acc: &mut BigUint, other: BigUint) {
        *acc += other;
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CountError {
    #[error("directed cycle through vertex {vertex}; path counts are unbounded")]
    CyclicInput { vertex: usize },
}

impl CountError {
    pub fn kind(&self) -> &'static str {
        match self {
            CountError::CyclicInput { .. } => "CyclicInput",
        }
    }
}

/// 0/1 adjacency matrix lifted into the counting carrier.
pub fn count_matrix(a: &RelationMatrix) -> CountMatrix {
    a.map(|&arc| BigUint::from(u8::from(arc)))
}

/// Number of directed paths of length at least one between every pair of an
/// acyclic digraph. The input is checked for cycles first.
pub fn count_paths(a: &RelationMatrix) -> Result<CountMatrix, CountError> {
    if let Some(vertex) = find_cycle(a) {
        return Err(CountError::CyclicInput { vertex });
    }
    Ok(closure::<Counting>(count_matrix(a)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_arc() {
        let mut a = SquareMatrix::filled(3, false);
        a[(0, 1)] = true;
        let w = count_paths(&a).unwrap();
        for (i, j, c) in w.iter() {
            let expected = u32::from((i, j) == (0, 1));
            assert_eq!(*c, BigUint::from(expected));
        }
    }

    #[test]
    fn cyclic_input_is_rejected() {
        let mut a = SquareMatrix::filled(2, false);
        a[(0, 1)] = true;
        a[(1, 0)] = true;
        assert!(matches!(
            count_paths(&a),
            Err(CountError::CyclicInput { .. })
        ));
    }

    #[test]
    fn counts_beyond_u64() {
        // Complete DAG on 70 vertices: 2^68 paths from first to last.
        let n = 70;
        let a = SquareMatrix::from_fn(n, |i, j| i < j);
        let w = count_paths(&a).unwrap();
        assert_eq!(w[(0, n - 1)], BigUint::from(1u8) << 68u32);
    }
}
