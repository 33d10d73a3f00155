//! Dense square matrices, the state every closure computation runs on.

use std::fmt;
use std::ops::{Index, IndexMut};

/// A dense `n × n` matrix stored row-major, indexed `0..n` in both dimensions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SquareMatrix<T> {
    n: usize,
    cells: Vec<T>,
}

/// Raised when a matrix would have zero rows or ragged rows.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ShapeError {
    #[error("matrix must have at least one row")]
    Empty,
    #[error("row {row} has {len} cells, expected {n}")]
    Ragged { row: usize, len: usize, n: usize },
}

impl<T: Clone> SquareMatrix<T> {
    /// Creates an `n × n` matrix with every cell set to `value`.
    ///
    /// Panics if `n == 0`.
    pub fn filled(n: usize, value: T) -> Self {
        assert!(n >= 1, "matrix dimension must be positive");
        Self {
            n,
            cells: vec![value; n * n],
        }
    }
}

impl<T> SquareMatrix<T> {
    /// Builds a matrix by evaluating `f(i, j)` for every cell.
    ///
    /// Panics if `n == 0`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        assert!(n >= 1, "matrix dimension must be positive");
        let mut cells = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                cells.push(f(i, j));
            }
        }
        Self { n, cells }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, ShapeError> {
        let n = rows.len();
        if n == 0 {
            return Err(ShapeError::Empty);
        }
        let mut cells = Vec::with_capacity(n * n);
        for (row, r) in rows.into_iter().enumerate() {
            if r.len() != n {
                return Err(ShapeError::Ragged {
                    row,
                    len: r.len(),
                    n,
                });
            }
            cells.extend(r);
        }
        Ok(Self { n, cells })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.cells[i * self.n + j]
    }

    #[inline]
    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut T {
        &mut self.cells[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        self.cells[i * self.n + j] = value;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.cells[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        self.cells.chunks(self.n)
    }

    /// Iterates `(i, j, &cell)` in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &T)> {
        let n = self.n;
        self.cells
            .iter()
            .enumerate()
            .map(move |(idx, v)| (idx / n, idx % n, v))
    }

    pub fn map<U>(&self, mut f: impl FnMut(&T) -> U) -> SquareMatrix<U> {
        SquareMatrix {
            n: self.n,
            cells: self.cells.iter().map(&mut f).collect(),
        }
    }

    pub fn to_rows(&self) -> Vec<Vec<T>>
    where
        T: Clone,
    {
        self.rows().map(<[T]>::to_vec).collect()
    }

    pub(crate) fn cells_mut(&mut self) -> &mut [T] {
        &mut self.cells
    }
}

impl<T> Index<(usize, usize)> for SquareMatrix<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        self.get(i, j)
    }
}

impl<T> IndexMut<(usize, usize)> for SquareMatrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        self.get_mut(i, j)
    }
}

impl<T: fmt::Debug> fmt::Debug for SquareMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}
